//! Monodromy representations `π_1(P² \ B) -> S_N` and uniqueness data.
//!
//! A generic covering of degree `N` branched over `B` corresponds to an
//! epimorphism sending every geometric generator to a transposition, each
//! cusp pair to two transpositions generating `S_3`, and each node pair to
//! two distinct commuting transpositions, counted up to conjugation in
//! `S_N`. [`enumerate_reps`] finds all such classes by backtracking.
//!
//! All arithmetic here is exact.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use num_rational::Ratio;

use crate::factorization::{CurveInvariants, CuspidalFactorization, FactorizationError};
use crate::free::FreeWord;
use crate::perm::{
    canonical_transposition_tuple, is_transitive, transpositions_generate_symmetric, Permutation,
};
use crate::vankampen::{local_pair, projective_relator};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChisiniError {
    #[error("expected {expected} generator images, got {found}")]
    ImageCountMismatch { expected: usize, found: usize },
    #[error("generator images must all lie in S_{expected}")]
    ImageSizeMismatch { expected: usize },
    #[error("covering degree must be positive")]
    DegenerateDegree,
    #[error("the factor product is not the full twist")]
    UnverifiedFactorization,
    #[error("{what} {value} exceeds the enumeration limit {limit}")]
    LimitExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("threshold denominator {0} is not positive; the bound gives no information")]
    NotApplicable(i128),
    #[error(transparent)]
    Factorization(#[from] FactorizationError),
}

/// Images of the geometric generators `x_1..x_n` in `S_N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonodromyRep {
    degree: usize,
    images: Vec<Permutation>,
}

impl MonodromyRep {
    pub fn new(degree: usize, images: Vec<Permutation>) -> Result<Self, ChisiniError> {
        if images.iter().any(|p| p.size() != degree) {
            return Err(ChisiniError::ImageSizeMismatch { expected: degree });
        }
        Ok(MonodromyRep { degree, images })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn images(&self) -> &[Permutation] {
        &self.images
    }

    /// Path-order image of a free word.
    pub fn evaluate(&self, w: &FreeWord) -> Permutation {
        evaluate(self.degree, &self.images, w)
    }

    /// The representative of this class under relabeling of the sheets.
    pub fn canonical(&self) -> Option<MonodromyRep> {
        canonical_transposition_tuple(&self.images).map(|images| MonodromyRep {
            degree: self.degree,
            images,
        })
    }
}

fn evaluate(degree: usize, images: &[Permutation], w: &FreeWord) -> Permutation {
    let mut acc = Permutation::identity(degree);
    for &l in w.letters() {
        let g = &images[l.unsigned_abs() as usize - 1];
        acc = if l > 0 {
            acc.then_unchecked(g)
        } else {
            acc.then_unchecked(&g.inverse())
        };
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorVerdict {
    BranchOk,
    /// Images generate `S_3`.
    CuspOk,
    /// Images are distinct commuting transpositions.
    NodeOk,
    BranchViolation,
    CuspViolation,
    NodeViolation,
}

impl FactorVerdict {
    pub fn is_ok(self) -> bool {
        matches!(
            self,
            FactorVerdict::BranchOk | FactorVerdict::CuspOk | FactorVerdict::NodeOk
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            FactorVerdict::BranchOk => "BranchOK",
            FactorVerdict::CuspOk => "CuspOK",
            FactorVerdict::NodeOk => "NodeOK",
            FactorVerdict::BranchViolation => "BranchViolation",
            FactorVerdict::CuspViolation => "CuspViolation",
            FactorVerdict::NodeViolation => "NodeViolation",
        }
    }
}

fn local_verdict(rho: u8, a: &Permutation, b: &Permutation) -> FactorVerdict {
    let (ta, tb) = (a.as_transposition(), b.as_transposition());
    match rho {
        1 if a == b && ta.is_some() => FactorVerdict::BranchOk,
        1 => FactorVerdict::BranchViolation,
        2 => match (ta, tb) {
            (Some((p, q)), Some((r, s))) if p != r && p != s && q != r && q != s => {
                FactorVerdict::NodeOk
            }
            _ => FactorVerdict::NodeViolation,
        },
        _ => match (ta, tb) {
            (Some((p, q)), Some((r, s)))
                if (p == r) as u8 + (p == s) as u8 + (q == r) as u8 + (q == s) as u8 == 1 =>
            {
                FactorVerdict::CuspOk
            }
            _ => FactorVerdict::CuspViolation,
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    /// One verdict per factor, in factor order.
    pub factors: Vec<FactorVerdict>,
    pub transpositions: bool,
    /// Every local relator and the relator at infinity map to the identity.
    pub relators_hold: bool,
    pub generates: bool,
    pub transitive: bool,
}

impl ConditionReport {
    pub fn passes(&self) -> bool {
        self.transpositions
            && self.relators_hold
            && self.generates
            && self.transitive
            && self.factors.iter().all(|v| v.is_ok())
    }

    /// Zero-based indices of failing factors.
    pub fn violations(&self) -> Vec<usize> {
        self.factors
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_ok())
            .map(|(k, _)| k)
            .collect()
    }
}

pub fn check_rep(
    f: &CuspidalFactorization,
    rep: &MonodromyRep,
) -> Result<ConditionReport, ChisiniError> {
    if rep.images.len() != f.strands() {
        return Err(ChisiniError::ImageCountMismatch {
            expected: f.strands(),
            found: rep.images.len(),
        });
    }
    let mut relators_hold = true;
    let mut factors = Vec::with_capacity(f.len());
    for g in f.factors() {
        let (a, b) = local_pair(g);
        let (pa, pb) = (rep.evaluate(&a), rep.evaluate(&b));
        factors.push(local_verdict(g.rho(), &pa, &pb));
        let relator = crate::vankampen::local_relator(g);
        relators_hold &= rep.evaluate(&relator).is_identity();
    }
    relators_hold &= rep.evaluate(&projective_relator(f.strands())).is_identity();
    Ok(ConditionReport {
        factors,
        transpositions: rep.images.iter().all(Permutation::is_transposition),
        relators_hold,
        generates: transpositions_generate_symmetric(rep.degree, &rep.images),
        transitive: is_transitive(rep.degree, &rep.images),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_degree: usize,
    pub max_strands: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            max_degree: 12,
            max_strands: 12,
        }
    }
}

impl EnumerationLimits {
    pub fn unlimited() -> Self {
        EnumerationLimits {
            max_degree: usize::MAX,
            max_strands: usize::MAX,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    /// Canonical representatives, sorted.
    pub classes: Vec<MonodromyRep>,
    /// Set for `N = 1`, where `S_1` has no transpositions.
    pub degenerate: bool,
}

struct Constraint {
    rho: u8,
    a: FreeWord,
    b: FreeWord,
}

struct Backtrack<'a> {
    degree: usize,
    /// constraints[k] can be checked once x_1..x_{k+1} are assigned
    constraints: Vec<Vec<Constraint>>,
    projective: FreeWord,
    images: Vec<Permutation>,
    found: &'a mut BTreeSet<Vec<Permutation>>,
}

impl Backtrack<'_> {
    fn level_ok(&self, k: usize) -> bool {
        self.constraints[k].iter().all(|c| {
            let pa = evaluate(self.degree, &self.images, &c.a);
            let pb = evaluate(self.degree, &self.images, &c.b);
            local_verdict(c.rho, &pa, &pb).is_ok()
        })
    }

    /// Transpositions on the labels used so far, plus the first one or two
    /// fresh labels; images are kept in first-appearance order.
    fn candidates(&self, used: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for q in 1..used.min(self.degree) {
            for p in 0..q {
                out.push((p, q));
            }
        }
        if used < self.degree {
            for p in 0..used {
                out.push((p, used));
            }
        }
        if used + 1 < self.degree {
            out.push((used, used + 1));
        }
        out
    }

    fn run(&mut self, used: usize) {
        let k = self.images.len();
        if k == self.constraints.len() {
            if evaluate(self.degree, &self.images, &self.projective).is_identity()
                && transpositions_generate_symmetric(self.degree, &self.images)
            {
                let canon =
                    canonical_transposition_tuple(&self.images).expect("transposition images");
                self.found.insert(canon);
            }
            return;
        }
        for (p, q) in self.candidates(used) {
            let t = Permutation::transposition(self.degree, p + 1, q + 1).expect("points in range");
            self.images.push(t);
            if self.level_ok(k) {
                self.run(used.max(q + 1));
            }
            self.images.pop();
        }
    }
}

/// All classes of transposition representations satisfying the local
/// conditions, the relator at infinity, and generating `S_N`.
pub fn enumerate_reps(
    f: &CuspidalFactorization,
    degree: usize,
    limits: EnumerationLimits,
) -> Result<Enumeration, ChisiniError> {
    if degree == 0 {
        return Err(ChisiniError::DegenerateDegree);
    }
    if !f.verify_full_twist() {
        return Err(ChisiniError::UnverifiedFactorization);
    }
    if degree > limits.max_degree {
        return Err(ChisiniError::LimitExceeded {
            what: "degree",
            value: degree,
            limit: limits.max_degree,
        });
    }
    if f.strands() > limits.max_strands {
        return Err(ChisiniError::LimitExceeded {
            what: "strands",
            value: f.strands(),
            limit: limits.max_strands,
        });
    }
    if degree == 1 {
        return Ok(Enumeration {
            classes: Vec::new(),
            degenerate: true,
        });
    }
    let n = f.strands();
    let mut constraints: Vec<Vec<Constraint>> = (0..n).map(|_| Vec::new()).collect();
    for g in f.factors() {
        let (a, b) = local_pair(g);
        let ready = a
            .letters()
            .iter()
            .chain(b.letters())
            .map(|l| l.unsigned_abs() as usize)
            .max()
            .unwrap_or(1);
        constraints[ready - 1].push(Constraint { rho: g.rho(), a, b });
    }
    let mut found = BTreeSet::new();
    let mut search = Backtrack {
        degree,
        constraints,
        projective: projective_relator(n),
        images: Vec::with_capacity(n),
        found: &mut found,
    };
    search.run(0);
    let classes = found
        .into_iter()
        .map(|images| MonodromyRep { degree, images })
        .collect();
    Ok(Enumeration {
        classes,
        degenerate: false,
    })
}

/// Data of the inequality `N > 4(3d+g-1) / (2(3d+g-1) - c)`, for a curve
/// of degree `2d`, genus `g` with `c` cusps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChisiniCertificate {
    /// `2d`.
    pub degree: u64,
    pub genus: u64,
    pub cusps: u64,
    /// `None` when the denominator is not positive.
    pub threshold: Option<Ratio<i128>>,
}

impl ChisiniCertificate {
    pub fn new(degree: u64, genus: u64, cusps: u64) -> Self {
        // with D = 2d: 3d + g - 1 = (3D + 2g - 2) / 2
        let twice = 3 * degree as i128 + 2 * genus as i128 - 2;
        let denominator = twice - cusps as i128;
        let threshold = (denominator > 0).then(|| Ratio::new(2 * twice, denominator));
        ChisiniCertificate {
            degree,
            genus,
            cusps,
            threshold,
        }
    }

    pub fn applicable(&self) -> bool {
        self.threshold.is_some()
    }

    /// `2(3d+g-1) - c`.
    pub fn denominator(&self) -> i128 {
        3 * self.degree as i128 + 2 * self.genus as i128 - 2 - self.cusps as i128
    }

    /// Strict comparison `N > threshold`; false when not applicable.
    pub fn guaranteed(&self, covering_degree: u64) -> bool {
        self.threshold
            .is_some_and(|t| Ratio::from_integer(covering_degree as i128) > t)
    }
}

/// The certificate, or `NotApplicable` when the bound says nothing.
pub fn chisini_bound(
    degree: u64,
    genus: u64,
    cusps: u64,
) -> Result<ChisiniCertificate, ChisiniError> {
    let cert = ChisiniCertificate::new(degree, genus, cusps);
    if cert.applicable() {
        Ok(cert)
    } else {
        Err(ChisiniError::NotApplicable(cert.denominator()))
    }
}

pub fn chisini_guaranteed(
    degree: u64,
    genus: u64,
    cusps: u64,
    covering_degree: u64,
) -> Result<bool, ChisiniError> {
    chisini_bound(degree, genus, cusps).map(|c| c.guaranteed(covering_degree))
}

/// Euler number of a generic covering surface of degree `N` branched over a
/// curve of genus `g` with `c` cusps and `n` nodes, by stratifying the plane:
/// `N(3 - e_B) + (N-1)(e_B - c - n) + (c+n)(N-2)` with `e_B = 2 - 2g - n`.
/// `N = 1` is the plane itself.
pub fn euler_characteristic(
    covering_degree: u64,
    genus: u64,
    cusps: u64,
    nodes: u64,
) -> Result<i64, ChisiniError> {
    if covering_degree == 0 {
        return Err(ChisiniError::DegenerateDegree);
    }
    if covering_degree == 1 {
        return Ok(3);
    }
    let (n_, g, c, n) = (
        covering_degree as i64,
        genus as i64,
        cusps as i64,
        nodes as i64,
    );
    let e_b = 2 - 2 * g - n;
    Ok(n_ * (3 - e_b) + (n_ - 1) * (e_b - c - n) + (c + n) * (n_ - 2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReportWarning {
    /// Branch curves of generic coverings have even degree.
    OddCurveDegree,
    /// `N = 1` admits no transposition.
    DegreeOne,
    CertificateNotApplicable,
    /// The curve is not irreducible by the strand-connectivity test.
    PossiblyReducible,
}

impl ReportWarning {
    pub fn message(self) -> &'static str {
        match self {
            ReportWarning::OddCurveDegree => {
                "curve degree is odd; branch curves of generic coverings have even degree"
            }
            ReportWarning::DegreeOne => "covering degree 1 has no transpositions; no classes exist",
            ReportWarning::CertificateNotApplicable => {
                "uniqueness threshold not applicable: denominator is not positive"
            }
            ReportWarning::PossiblyReducible => {
                "strand graph of branch and cusp factors is disconnected"
            }
        }
    }
}

/// How each covering condition is established by the report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConditionStatus {
    pub condition: &'static str,
    pub certified: bool,
}

pub const CONDITION_STATUS: [ConditionStatus; 6] = [
    ConditionStatus {
        condition: "finite covering of degree N (sheet count of each class)",
        certified: true,
    },
    ConditionStatus {
        condition: "geometric generators act by transpositions",
        certified: true,
    },
    ConditionStatus {
        condition: "cusp pairs generate S_3",
        certified: true,
    },
    ConditionStatus {
        condition: "node pairs are distinct commuting transpositions",
        certified: true,
    },
    ConditionStatus {
        condition: "ramification curve irreducible and smooth",
        certified: false,
    },
    ConditionStatus {
        condition: "ramification curve normalizes the branch curve",
        certified: false,
    },
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismReport {
    pub covering_degree: usize,
    pub curve: CurveInvariants,
    pub classes: Vec<(MonodromyRep, ConditionReport)>,
    pub certificate: ChisiniCertificate,
    pub guaranteed: bool,
    pub euler: i64,
    pub warnings: Vec<ReportWarning>,
}

pub fn morphism_report(
    f: &CuspidalFactorization,
    covering_degree: usize,
    limits: EnumerationLimits,
) -> Result<MorphismReport, ChisiniError> {
    if covering_degree == 0 {
        return Err(ChisiniError::DegenerateDegree);
    }
    if !f.verify_full_twist() {
        return Err(ChisiniError::UnverifiedFactorization);
    }
    let curve = f.curve_invariants()?;
    let enumeration = enumerate_reps(f, covering_degree, limits)?;
    let classes = enumeration
        .classes
        .into_iter()
        .map(|rep| {
            let report = check_rep(f, &rep)?;
            Ok((rep, report))
        })
        .collect::<Result<Vec<_>, ChisiniError>>()?;
    let certificate = ChisiniCertificate::new(curve.degree as u64, curve.genus, curve.cusps);
    let guaranteed = certificate.guaranteed(covering_degree as u64);
    let euler = euler_characteristic(
        covering_degree as u64,
        curve.genus,
        curve.cusps,
        curve.nodes,
    )?;
    let mut warnings = Vec::new();
    if curve.degree % 2 == 1 {
        warnings.push(ReportWarning::OddCurveDegree);
    }
    if enumeration.degenerate {
        warnings.push(ReportWarning::DegreeOne);
    }
    if !certificate.applicable() {
        warnings.push(ReportWarning::CertificateNotApplicable);
    }
    if !crate::vankampen::irreducibility_check(f) {
        warnings.push(ReportWarning::PossiblyReducible);
    }
    Ok(MorphismReport {
        covering_degree,
        curve,
        classes,
        certificate,
        guaranteed,
        euler,
        warnings,
    })
}
