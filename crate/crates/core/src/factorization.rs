//! Cuspidal factorizations `Δ²_n = ∏ Q_i^-1 X_1^{ρ_i} Q_i`, `ρ_i ∈ {1, 2, 3}`.
//!
//! A factor with `ρ = 1` is a simple branch point of the curve, `ρ = 2` a
//! node and `ρ = 3` a cusp. The strand count `n` is the curve degree.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::braid::{full_twist, BraidError, BraidWord};
use crate::garside::NormalForm;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FactorizationError {
    #[error("rho must be 1, 2 or 3, got {0}")]
    RhoOutOfRange(i64),
    #[error("a factorization needs at least one factor")]
    Empty,
    #[error("factorizations need at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error("factor {index} has a conjugator on {found} strands, expected {expected}")]
    StrandMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("the factor product is not the full twist")]
    Unverified,
    #[error("singularity counts give negative genus {0}")]
    NegativeGenus(i64),
    #[error(transparent)]
    Braid(#[from] BraidError),
}

/// One factor `Q^-1 X_1^ρ Q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CuspidalFactor {
    conjugator: BraidWord,
    rho: u8,
}

impl CuspidalFactor {
    pub fn new(conjugator: BraidWord, rho: i64) -> Result<Self, FactorizationError> {
        if !(1..=3).contains(&rho) {
            return Err(FactorizationError::RhoOutOfRange(rho));
        }
        if conjugator.strands() < 2 {
            return Err(FactorizationError::TooFewStrands(conjugator.strands()));
        }
        Ok(CuspidalFactor {
            conjugator,
            rho: rho as u8,
        })
    }

    pub fn conjugator(&self) -> &BraidWord {
        &self.conjugator
    }

    pub fn rho(&self) -> u8 {
        self.rho
    }

    pub fn strands(&self) -> usize {
        self.conjugator.strands()
    }

    /// The braid `Q^-1 · X_1^ρ · Q`.
    pub fn braid(&self) -> BraidWord {
        let core = BraidWord::from_raw(self.strands(), alloc::vec![1; self.rho as usize]);
        core.conjugate(&self.conjugator).expect("same strand count")
    }

    /// Same factor with the conjugator replaced by `Q · z`.
    pub(crate) fn conjugated(&self, z: &BraidWord) -> CuspidalFactor {
        CuspidalFactor {
            conjugator: self.conjugator.compose(z).expect("same strand count"),
            rho: self.rho,
        }
    }

    pub fn free_reduced(&self) -> CuspidalFactor {
        CuspidalFactor {
            conjugator: self.conjugator.free_reduce(),
            rho: self.rho,
        }
    }
}

/// Numbers of branch (`ρ=1`), node (`ρ=2`) and cusp (`ρ=3`) factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SingularityCounts {
    pub branch: usize,
    pub nodes: usize,
    pub cusps: usize,
}

impl SingularityCounts {
    /// `n_1 + 2 n_2 + 3 n_3`, the exponent sum of the product.
    pub fn weighted_total(&self) -> usize {
        self.branch + 2 * self.nodes + 3 * self.cusps
    }

    pub fn total(&self) -> usize {
        self.branch + self.nodes + self.cusps
    }
}

/// Degree, geometric genus and singularity numbers of the curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CurveInvariants {
    /// `2d`; odd values are allowed.
    pub degree: usize,
    pub genus: u64,
    pub cusps: u64,
    pub nodes: u64,
}

impl CurveInvariants {
    /// Genus from the plane-curve formula `(D-1)(D-2)/2 - c - n`.
    pub fn from_counts(degree: usize, cusps: u64, nodes: u64) -> Result<Self, FactorizationError> {
        let arithmetic = ((degree as i64 - 1) * (degree as i64 - 2)) / 2;
        let genus = arithmetic - cusps as i64 - nodes as i64;
        if genus < 0 {
            return Err(FactorizationError::NegativeGenus(genus));
        }
        Ok(CurveInvariants {
            degree,
            genus: genus as u64,
            cusps,
            nodes,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CuspidalFactorization {
    strands: usize,
    factors: Vec<CuspidalFactor>,
}

impl CuspidalFactorization {
    pub fn new(strands: usize, factors: Vec<CuspidalFactor>) -> Result<Self, FactorizationError> {
        if strands < 2 {
            return Err(FactorizationError::TooFewStrands(strands));
        }
        if factors.is_empty() {
            return Err(FactorizationError::Empty);
        }
        for (index, f) in factors.iter().enumerate() {
            if f.strands() != strands {
                return Err(FactorizationError::StrandMismatch {
                    index,
                    expected: strands,
                    found: f.strands(),
                });
            }
        }
        Ok(CuspidalFactorization { strands, factors })
    }

    pub(crate) fn from_parts(strands: usize, factors: Vec<CuspidalFactor>) -> Self {
        debug_assert!(!factors.is_empty() && factors.iter().all(|f| f.strands() == strands));
        CuspidalFactorization { strands, factors }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn factors(&self) -> &[CuspidalFactor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The raw braid of each factor.
    pub fn factor_braids(&self) -> Vec<BraidWord> {
        self.factors.iter().map(CuspidalFactor::braid).collect()
    }

    /// Left-to-right product of the factor braids.
    pub fn product(&self) -> BraidWord {
        let mut out = BraidWord::from_raw(self.strands, Vec::new());
        for f in &self.factors {
            out = out.compose(&f.braid()).expect("same strand count");
        }
        out
    }

    pub fn verify_full_twist(&self) -> bool {
        let twist = full_twist(self.strands).expect("strands >= 2");
        NormalForm::of(&self.product()) == NormalForm::of(&twist)
    }

    pub fn singularity_counts(&self) -> SingularityCounts {
        let mut c = SingularityCounts::default();
        for f in &self.factors {
            match f.rho {
                1 => c.branch += 1,
                2 => c.nodes += 1,
                _ => c.cusps += 1,
            }
        }
        c
    }

    pub fn curve_invariants(&self) -> Result<CurveInvariants, FactorizationError> {
        if !self.verify_full_twist() {
            return Err(FactorizationError::Unverified);
        }
        let counts = self.singularity_counts();
        CurveInvariants::from_counts(self.strands, counts.cusps as u64, counts.nodes as u64)
    }

    /// Same factorization with every conjugator freely reduced.
    pub fn normalized(&self) -> CuspidalFactorization {
        CuspidalFactorization {
            strands: self.strands,
            factors: self
                .factors
                .iter()
                .map(CuspidalFactor::free_reduced)
                .collect(),
        }
    }
}

/// Recovers `(Q, ρ)` from a braid that is a conjugate of `X_1^ρ`.
///
/// A word already shaped `W^-1 X_1^ρ W` is read off directly; otherwise
/// conjugators up to `max_len` letters are tried, compared by normal form.
/// Returns `None` when nothing is found within the bound.
pub fn recognize_factor(braid: &BraidWord, max_len: usize) -> Option<CuspidalFactor> {
    let n = braid.strands();
    let rho = braid.exponent_sum();
    if !(1..=3).contains(&rho) || n < 2 {
        return None;
    }
    let reduced = braid.free_reduce();
    let letters = reduced.letters();
    let r = rho as usize;
    if letters.len() >= r && (letters.len() - r).is_multiple_of(2) {
        let k = (letters.len() - r) / 2;
        let (head, rest) = letters.split_at(k);
        let (mid, tail) = rest.split_at(r);
        let head_is_inverse_of_tail = head.iter().rev().map(|&l| -l).eq(tail.iter().copied());
        if head_is_inverse_of_tail && mid.iter().all(|&l| l == 1) {
            let q = BraidWord::from_raw(n, tail.to_vec());
            return CuspidalFactor::new(q, rho).ok();
        }
    }
    let target = NormalForm::of(braid);
    let gens: Vec<i16> = (1..n as i16).flat_map(|i| [i, -i]).collect();
    let mut seen = BTreeSet::new();
    let mut layer = alloc::vec![BraidWord::from_raw(n, Vec::new())];
    seen.insert(NormalForm::of(&layer[0]));
    for depth in 0..=max_len {
        for q in &layer {
            let candidate = CuspidalFactor {
                conjugator: q.clone(),
                rho: rho as u8,
            };
            if NormalForm::of(&candidate.braid()) == target {
                return Some(candidate);
            }
        }
        if depth == max_len {
            break;
        }
        let mut next = Vec::new();
        for q in &layer {
            for &g in &gens {
                if q.letters().last() == Some(&-g) {
                    continue;
                }
                let mut letters = q.letters().to_vec();
                letters.push(g);
                let w = BraidWord::from_raw(n, letters);
                if seen.insert(NormalForm::of(&w)) {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    None
}
