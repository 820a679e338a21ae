//! Text formats: factorizations (`.bfac`), witnesses (`.wit`) and
//! presentations.
//!
//! A factorization file is line oriented UTF-8. `#` starts a comment.
//!
//! ```text
//! strands 3
//! factor rho=3 Q=
//! factor rho=1 Q=-2
//! ```
//!
//! `Q=` is followed by a braid word as whitespace-separated signed
//! generator indices (`1 2 -1` is `X_1 X_2 X_1^-1`).

use std::fmt::{self, Write as _};

use braidmon_core::hurwitz::{Direction, MoveSpec, Witness};
use braidmon_core::vankampen::GroupPresentation;
use braidmon_core::{BraidWord, CuspidalFactor, CuspidalFactorization};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    RhoOutOfRange(i64),
    /// A letter that is not a generator of `B_strands`.
    StrandMismatch {
        letter: i64,
        strands: usize,
    },
    MissingHeader,
    DuplicateHeader,
    BadStrandCount(usize),
    NoFactors,
    MissingConjugation,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Syntax(msg) => f.write_str(msg),
            ParseErrorKind::RhoOutOfRange(r) => write!(f, "rho must be 1, 2 or 3, got {r}"),
            ParseErrorKind::StrandMismatch { letter, strands } => {
                write!(f, "letter {letter} is not a generator of B_{strands}")
            }
            ParseErrorKind::MissingHeader => {
                f.write_str("expected `strands <n>` before the first factor")
            }
            ParseErrorKind::DuplicateHeader => f.write_str("`strands` given twice"),
            ParseErrorKind::BadStrandCount(n) => {
                write!(f, "strand count must be between 2 and 32, got {n}")
            }
            ParseErrorKind::NoFactors => f.write_str("no factors"),
            ParseErrorKind::MissingConjugation => {
                f.write_str("witness must end with a `conj` line")
            }
        }
    }
}

/// A parse failure at a one-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

/// A whitespace-separated token with its one-based column.
struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token {
                    text: &line[s..i],
                    column: line[..s].chars().count() + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &line[s..],
            column: line[..s].chars().count() + 1,
        });
    }
    out
}

/// Meaningful lines: comments stripped, blanks skipped, numbered from one.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, raw)| {
        let line = raw.split('#').next().unwrap_or("");
        (!line.trim().is_empty()).then_some((k + 1, line))
    })
}

fn err(line: usize, column: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, column, kind }
}

fn syntax(line: usize, column: usize, msg: impl Into<String>) -> ParseError {
    err(line, column, ParseErrorKind::Syntax(msg.into()))
}

fn parse_letters(strands: usize, toks: &[Token<'_>], line: usize) -> Result<BraidWord, ParseError> {
    let mut letters = Vec::with_capacity(toks.len());
    for t in toks {
        let l: i64 = t.text.parse().map_err(|_| {
            syntax(
                line,
                t.column,
                format!("expected a signed generator index, found `{}`", t.text),
            )
        })?;
        if l == 0 || l.unsigned_abs() as usize >= strands {
            return Err(err(
                line,
                t.column,
                ParseErrorKind::StrandMismatch { letter: l, strands },
            ));
        }
        letters.push(l as i32);
    }
    Ok(BraidWord::new(strands, letters).expect("letters checked"))
}

/// Parses a braid word such as `"1 2 -1"` on the given number of strands.
pub fn parse_braid_word(strands: usize, text: &str) -> Result<BraidWord, ParseError> {
    parse_letters(strands, &tokens(text), 1)
}

pub fn parse_factorization(text: &str) -> Result<CuspidalFactorization, ParseError> {
    let mut strands: Option<usize> = None;
    let mut factors = Vec::new();
    let mut last_line = 1;
    for (lineno, line) in content_lines(text) {
        last_line = lineno;
        let toks = tokens(line);
        let head = &toks[0];
        match head.text {
            "strands" => {
                if strands.is_some() {
                    return Err(err(lineno, head.column, ParseErrorKind::DuplicateHeader));
                }
                let [_, value] = toks.as_slice() else {
                    return Err(syntax(lineno, head.column, "expected `strands <n>`"));
                };
                let n: usize = value.text.parse().map_err(|_| {
                    syntax(
                        lineno,
                        value.column,
                        format!("bad strand count `{}`", value.text),
                    )
                })?;
                if !(2..=braidmon_core::braid::MAX_STRANDS).contains(&n) {
                    return Err(err(lineno, value.column, ParseErrorKind::BadStrandCount(n)));
                }
                strands = Some(n);
            }
            "factor" => {
                let Some(n) = strands else {
                    return Err(err(lineno, head.column, ParseErrorKind::MissingHeader));
                };
                factors.push(parse_factor_line(n, &toks, lineno, line)?);
            }
            other => {
                return Err(syntax(
                    lineno,
                    head.column,
                    format!("expected `strands` or `factor`, found `{other}`"),
                ));
            }
        }
    }
    let Some(n) = strands else {
        return Err(err(last_line, 1, ParseErrorKind::MissingHeader));
    };
    if factors.is_empty() {
        return Err(err(last_line, 1, ParseErrorKind::NoFactors));
    }
    Ok(CuspidalFactorization::new(n, factors).expect("factors checked against the header"))
}

fn parse_factor_line(
    strands: usize,
    toks: &[Token<'_>],
    lineno: usize,
    line: &str,
) -> Result<CuspidalFactor, ParseError> {
    let end_column = line.trim_end().chars().count() + 1;
    let Some(rho_tok) = toks.get(1) else {
        return Err(syntax(lineno, end_column, "expected `rho=<1|2|3>`"));
    };
    let Some(rho_text) = rho_tok.text.strip_prefix("rho=") else {
        return Err(syntax(
            lineno,
            rho_tok.column,
            format!("expected `rho=<1|2|3>`, found `{}`", rho_tok.text),
        ));
    };
    let rho: i64 = rho_text
        .parse()
        .map_err(|_| syntax(lineno, rho_tok.column + 4, format!("bad rho `{rho_text}`")))?;
    if !(1..=3).contains(&rho) {
        return Err(err(
            lineno,
            rho_tok.column + 4,
            ParseErrorKind::RhoOutOfRange(rho),
        ));
    }
    let Some(q_tok) = toks.get(2) else {
        return Err(syntax(lineno, end_column, "expected `Q=<braid word>`"));
    };
    let Some(first) = q_tok.text.strip_prefix("Q=") else {
        return Err(syntax(
            lineno,
            q_tok.column,
            format!("expected `Q=<braid word>`, found `{}`", q_tok.text),
        ));
    };
    let mut letter_toks = Vec::new();
    if !first.is_empty() {
        letter_toks.push(Token {
            text: first,
            column: q_tok.column + 2,
        });
    }
    letter_toks.extend(toks[3..].iter().map(|t| Token {
        text: t.text,
        column: t.column,
    }));
    let q = parse_letters(strands, &letter_toks, lineno)?;
    Ok(CuspidalFactor::new(q, rho).expect("rho checked"))
}

/// Canonical text: the header, then one line per factor with freely reduced
/// conjugator.
pub fn serialize_factorization(f: &CuspidalFactorization) -> String {
    let mut out = format!("strands {}\n", f.strands());
    for g in f.factors() {
        let q = g.conjugator().free_reduce();
        if q.is_empty() {
            writeln!(out, "factor rho={} Q=", g.rho()).unwrap();
        } else {
            writeln!(out, "factor rho={} Q={}", g.rho(), q).unwrap();
        }
    }
    out
}

/// Lines `move <i> <L|R>`, then a final `conj <braid word>`.
pub fn serialize_witness(w: &Witness) -> String {
    let mut out = String::new();
    for m in &w.moves {
        let d = match m.direction {
            Direction::Left => 'L',
            Direction::Right => 'R',
        };
        writeln!(out, "move {} {d}", m.index).unwrap();
    }
    let z = w.conjugator.free_reduce();
    if z.is_empty() {
        out.push_str("conj\n");
    } else {
        writeln!(out, "conj {z}").unwrap();
    }
    out
}

pub fn parse_witness(text: &str, strands: usize) -> Result<Witness, ParseError> {
    let mut moves = Vec::new();
    let mut conjugator = None;
    let mut last_line = 1;
    for (lineno, line) in content_lines(text) {
        last_line = lineno;
        let toks = tokens(line);
        let head = &toks[0];
        if conjugator.is_some() {
            return Err(syntax(
                lineno,
                head.column,
                "nothing may follow the `conj` line",
            ));
        }
        match head.text {
            "move" => {
                let [_, idx, dir] = toks.as_slice() else {
                    return Err(syntax(lineno, head.column, "expected `move <i> <L|R>`"));
                };
                let index: usize = idx.text.parse().ok().filter(|&i| i >= 1).ok_or_else(|| {
                    syntax(lineno, idx.column, format!("bad move index `{}`", idx.text))
                })?;
                let direction = match dir.text {
                    "L" => Direction::Left,
                    "R" => Direction::Right,
                    other => {
                        return Err(syntax(
                            lineno,
                            dir.column,
                            format!("expected L or R, found `{other}`"),
                        ))
                    }
                };
                moves.push(MoveSpec::new(index, direction));
            }
            "conj" => conjugator = Some(parse_letters(strands, &toks[1..], lineno)?),
            other => {
                return Err(syntax(
                    lineno,
                    head.column,
                    format!("expected `move` or `conj`, found `{other}`"),
                ))
            }
        }
    }
    let conjugator =
        conjugator.ok_or_else(|| err(last_line, 1, ParseErrorKind::MissingConjugation))?;
    Ok(Witness { moves, conjugator })
}

/// `gens <k>`, then one relator per line as signed generator indices.
pub fn serialize_presentation(p: &GroupPresentation) -> String {
    let mut out = format!("gens {}\n", p.generators());
    for r in p.relators() {
        writeln!(out, "{r}").unwrap();
    }
    out
}

/// Parses `d` given as `3`, `3/2` or `1.5` and returns `2d`, which must be a
/// positive integer.
pub fn parse_half_integer(text: &str) -> Option<u64> {
    let text = text.trim();
    if let Some((p, q)) = text.split_once('/') {
        let (p, q): (u64, u64) = (p.trim().parse().ok()?, q.trim().parse().ok()?);
        return match q {
            1 => p.checked_mul(2),
            2 => Some(p),
            _ => None,
        }
        .filter(|&v| v > 0);
    }
    if let Some((whole, frac)) = text.split_once('.') {
        let whole: u64 = if whole.is_empty() {
            0
        } else {
            whole.parse().ok()?
        };
        let half = match frac.trim_end_matches('0') {
            "" => 0,
            "5" => 1,
            _ => return None,
        };
        return whole.checked_mul(2).map(|w| w + half).filter(|&v| v > 0);
    }
    text.parse::<u64>().ok()?.checked_mul(2).filter(|&v| v > 0)
}
