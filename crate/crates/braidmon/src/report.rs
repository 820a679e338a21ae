//! Command results as JSON values. Text output is rendered from the same
//! value, so both formats carry the same fields.

use braidmon_core::chisini::{ChisiniCertificate, MorphismReport, CONDITION_STATUS};
use braidmon_core::hurwitz::{BudgetReport, EquivalenceVerdict, Fingerprint, QuotientOrbit};
use braidmon_core::vankampen::{
    abelianization, irreducibility_check, simplify, GroupPresentation, RelationMode,
};
use braidmon_core::CuspidalFactorization;
use serde_json::{json, Map, Value};

pub fn verify(f: &CuspidalFactorization) -> Value {
    let counts = f.singularity_counts();
    let verified = f.verify_full_twist();
    let (curve, error) = match f.curve_invariants() {
        Ok(c) => (
            json!({ "degree": c.degree, "genus": c.genus, "cusps": c.cusps, "nodes": c.nodes }),
            Value::Null,
        ),
        Err(e) => (Value::Null, json!(e.to_string())),
    };
    json!({
        "verified": verified,
        "strands": f.strands(),
        "factors": f.len(),
        "counts": { "branch": counts.branch, "nodes": counts.nodes, "cusps": counts.cusps },
        "weighted_total": counts.weighted_total(),
        "expected_total": f.strands() * (f.strands() - 1),
        "curve": curve,
        "error": error,
    })
}

fn budget(r: &BudgetReport) -> Value {
    json!({
        "states": r.states,
        "forward_states": r.forward_states,
        "backward_states": r.backward_states,
        "forward_depth": r.forward_depth,
        "backward_depth": r.backward_depth,
        "conjugators": r.conjugators,
        "conjugation_radius": r.conjugation_radius,
        "orbits_exhausted": r.orbits_exhausted,
    })
}

pub fn hurwitz(verdict: &EquivalenceVerdict) -> Value {
    match verdict {
        EquivalenceVerdict::Equivalent(w) => json!({
            "verdict": "equivalent",
            "invariant": null,
            "moves": w.moves.len(),
            "conjugator": w.conjugator.free_reduce().to_string(),
            "budget": null,
        }),
        EquivalenceVerdict::Distinguished(inv) => json!({
            "verdict": "distinguished",
            "invariant": inv.name(),
            "moves": null,
            "conjugator": null,
            "budget": null,
        }),
        EquivalenceVerdict::Unknown(r) => json!({
            "verdict": "unknown",
            "invariant": null,
            "moves": null,
            "conjugator": null,
            "budget": budget(r),
        }),
    }
}

pub fn replay(verifies: bool, moves: usize) -> Value {
    json!({ "verdict": if verifies { "witness-verified" } else { "witness-rejected" }, "moves": moves })
}

pub fn fingerprint(fp: &Fingerprint) -> Value {
    let orbit = match &fp.quotient_orbit {
        QuotientOrbit::Exact { size, .. } => {
            json!({ "size": size, "digest": format!("{:016x}", fp.quotient_orbit.digest()) })
        }
        QuotientOrbit::Large => json!({ "size": null, "digest": "large" }),
    };
    json!({
        "strands": fp.strands,
        "factor_count": fp.factor_count,
        "rho_counts": [fp.counts.branch, fp.counts.nodes, fp.counts.cusps],
        "exponent_sums": fp.exponent_sums,
        "product": fp.product.to_string(),
        "quotient_orbit": orbit,
    })
}

fn presentation_value(p: &GroupPresentation) -> Value {
    json!({
        "generators": p.generators(),
        "labels": p.labels().iter().map(|l| format!("x{l}")).collect::<Vec<_>>(),
        "relators": p.relators().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
    })
}

/// Raw and simplified presentation together with the abelianization.
pub fn van_kampen(f: &CuspidalFactorization, raw: &GroupPresentation, mode: RelationMode) -> Value {
    let simplified = simplify(raw);
    let ab = abelianization(raw);
    json!({
        "mode": match mode { RelationMode::Economical => "economical", RelationMode::Full => "full" },
        "presentation": presentation_value(raw),
        "simplified": presentation_value(&simplified),
        "abelianization": ab.to_string(),
        "torsion": ab.torsion,
        "free_rank": ab.free_rank,
        "irreducible": irreducibility_check(f),
    })
}

fn certificate(cert: &ChisiniCertificate) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert(
        "threshold".into(),
        cert.threshold.map_or(Value::Null, |t| json!(t.to_string())),
    );
    m.insert("applicable".into(), json!(cert.applicable()));
    m.insert("denominator".into(), json!(cert.denominator() as i64));
    m
}

pub fn enumeration(r: &MorphismReport) -> Value {
    let mut m = Map::new();
    m.insert("covering_degree".into(), json!(r.covering_degree));
    m.insert(
        "curve".into(),
        json!({ "degree": r.curve.degree, "genus": r.curve.genus, "cusps": r.curve.cusps, "nodes": r.curve.nodes }),
    );
    m.insert("classes".into(), json!(r.classes.len()));
    m.insert(
        "representatives".into(),
        r.classes
            .iter()
            .map(|(rep, _)| {
                rep.images()
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
            .into(),
    );
    m.insert(
        "all_conditions_hold".into(),
        json!(r.classes.iter().all(|(_, report)| report.passes())),
    );
    m.extend(certificate(&r.certificate));
    m.insert("guaranteed".into(), json!(r.guaranteed));
    m.insert("euler".into(), json!(r.euler));
    m.insert(
        "warnings".into(),
        r.warnings
            .iter()
            .map(|w| w.message())
            .collect::<Vec<_>>()
            .into(),
    );
    m.insert(
        "uncertified".into(),
        CONDITION_STATUS
            .iter()
            .filter(|c| !c.certified)
            .map(|c| c.condition)
            .collect::<Vec<_>>()
            .into(),
    );
    Value::Object(m)
}

/// `d` is echoed as given (it may be a half-integer); `degree` is `2d`.
pub fn chisini(d: &str, cert: &ChisiniCertificate, covering_degree: Option<u64>) -> Value {
    let mut m = Map::new();
    m.insert("d".into(), json!(d));
    m.insert("degree".into(), json!(cert.degree));
    m.insert("genus".into(), json!(cert.genus));
    m.insert("cusps".into(), json!(cert.cusps));
    m.extend(certificate(cert));
    m.insert("covering_degree".into(), json!(covering_degree));
    m.insert(
        "guaranteed".into(),
        covering_degree.map_or(Value::Null, |n| json!(cert.guaranteed(n))),
    );
    Value::Object(m)
}

pub fn error(kind: &str, message: &str, line: Option<usize>, column: Option<usize>) -> Value {
    json!({ "error": kind, "message": message, "line": line, "column": column })
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items
            .iter()
            .map(|i| match i {
                Value::Array(_) => format!("[{}]", scalar(i)),
                _ => scalar(i),
            })
            .collect::<Vec<_>>()
            .join(
                if items
                    .iter()
                    .any(|i| i.is_string() && i.as_str().is_some_and(|s| s.contains(' ')))
                {
                    "; "
                } else {
                    " "
                },
            ),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(m) => {
            for (k, val) in m {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, val, out);
            }
        }
        other => {
            out.push_str(prefix);
            out.push_str(": ");
            out.push_str(&scalar(other));
            out.push('\n');
        }
    }
}

/// One `key: value` line per leaf; nested keys are joined with dots.
pub fn to_text(v: &Value) -> String {
    let mut out = String::new();
    flatten("", v, &mut out);
    out
}
