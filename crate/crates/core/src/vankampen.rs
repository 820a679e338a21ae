//! Presentations of the fundamental group of the curve complement.
//!
//! Generators are the geometric generators `x_1..x_n` of a generic fiber.
//! A factor `Q^-1 X_1^ρ Q` contributes one relator on the pair
//! `a = Q(x_1)`, `b = Q(x_2)` (Artin action of `Q` itself):
//!
//! | ρ | local group            | relator          |
//! |---|------------------------|------------------|
//! | 1 | branch point, `a = b`  | `a b^-1`         |
//! | 2 | node, `ab = ba`        | `a b a^-1 b^-1`  |
//! | 3 | cusp, `aba = bab`      | `a b a b^-1 a^-1 b^-1` |
//!
//! plus the relator `x_1 x_2 ··· x_n` for the line at infinity.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::factorization::{CuspidalFactor, CuspidalFactorization};
use crate::free::{artin_images, FreeWord};
use crate::perm::UnionFind;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VanKampenError {
    #[error("the factor product is not the full twist")]
    Unverified,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: usize,
    relators: Vec<FreeWord>,
    /// Original geometric-generator index of each generator.
    labels: Vec<usize>,
}

impl GroupPresentation {
    pub fn new(generators: usize, relators: Vec<FreeWord>) -> Self {
        let relators = relators
            .into_iter()
            .map(|r| FreeWord::new(generators, r.letters().iter().copied()).expect("relator rank"))
            .collect();
        GroupPresentation {
            generators,
            relators,
            labels: (1..=generators).collect(),
        }
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Relator exponent sums, one row per relator.
    pub fn exponent_matrix(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(FreeWord::exponent_vector)
            .collect()
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("< ")?;
        for (k, l) in self.labels.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "x{l}")?;
        }
        f.write_str(" | ")?;
        for (k, r) in self.relators.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            if r.is_empty() {
                f.write_str("1")?;
            }
            for (m, &l) in r.letters().iter().enumerate() {
                if m > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "x{}", self.labels[l.unsigned_abs() as usize - 1])?;
                if l < 0 {
                    f.write_str("^-1")?;
                }
            }
        }
        f.write_str(" >")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RelationMode {
    /// One relator per factor, chosen by `ρ`.
    #[default]
    Economical,
    /// `β(x_j) x_j^-1` for every factor braid `β` and every generator.
    Full,
}

/// The pair `(Q(x_1), Q(x_2))` of conjugates of geometric generators.
pub fn local_pair(f: &CuspidalFactor) -> (FreeWord, FreeWord) {
    let mut images = artin_images(f.conjugator());
    let b = images.swap_remove(1);
    let a = images.swap_remove(0);
    (a, b)
}

pub fn local_relator(f: &CuspidalFactor) -> FreeWord {
    let (a, b) = local_pair(f);
    match f.rho() {
        1 => a.concat(&b.inverse()),
        2 => a.concat(&b).concat(&a.inverse()).concat(&b.inverse()),
        _ => {
            let aba = a.concat(&b).concat(&a);
            let bab = b.concat(&a).concat(&b);
            aba.concat(&bab.inverse())
        }
    }
}

/// `x_1 x_2 ··· x_n`.
pub fn projective_relator(strands: usize) -> FreeWord {
    FreeWord::new(strands, 1..=strands as i32).expect("generators in range")
}

pub fn presentation(f: &CuspidalFactorization) -> Result<GroupPresentation, VanKampenError> {
    presentation_with(f, RelationMode::Economical)
}

pub fn presentation_with(
    f: &CuspidalFactorization,
    mode: RelationMode,
) -> Result<GroupPresentation, VanKampenError> {
    if !f.verify_full_twist() {
        return Err(VanKampenError::Unverified);
    }
    let n = f.strands();
    let mut relators = Vec::new();
    match mode {
        RelationMode::Economical => relators.extend(f.factors().iter().map(local_relator)),
        RelationMode::Full => {
            for beta in f.factor_braids() {
                for (j, img) in artin_images(&beta).into_iter().enumerate() {
                    let r = img.concat(&FreeWord::generator(n, j + 1).inverse());
                    if !r.is_empty() {
                        relators.push(r);
                    }
                }
            }
        }
    }
    relators.push(projective_relator(n));
    Ok(GroupPresentation {
        generators: n,
        relators,
        labels: (1..=n).collect(),
    })
}

/// Tietze simplification with safe moves only: free and cyclic reduction,
/// dropping trivial or repeated relators, deleting a generator killed by a
/// one-letter relator, and merging two generators identified by a relator
/// `x_a^e x_b^-e`.
pub fn simplify(p: &GroupPresentation) -> GroupPresentation {
    let rank = p.generators;
    // map[j]: what generator j+1 currently stands for (None = trivial)
    let mut map: Vec<Option<usize>> = (1..=rank).map(Some).collect();
    let mut relators: Vec<FreeWord> = p.relators.clone();
    loop {
        let mut seen = BTreeSet::new();
        relators = relators
            .iter()
            .map(|r| r.cyclically_reduced())
            .filter(|r| !r.is_empty())
            .filter(|r| {
                let fresh = !seen.contains(r) && !seen.contains(&r.inverse());
                seen.insert(r.clone());
                fresh
            })
            .collect();

        let substitution = relators
            .iter()
            .enumerate()
            .find_map(|(k, r)| match *r.letters() {
                [a] => Some((k, a.unsigned_abs() as usize, None)),
                [a, b] if a.signum() != b.signum() && a.abs() != b.abs() => {
                    let (a, b) = (a.unsigned_abs() as usize, b.unsigned_abs() as usize);
                    Some((k, a.max(b), Some(a.min(b))))
                }
                _ => None,
            });
        let Some((k, gone, target)) = substitution else {
            break;
        };
        relators.remove(k);
        let step: Vec<Option<usize>> = (1..=rank)
            .map(|j| if j == gone { target } else { Some(j) })
            .collect();
        relators = relators.iter().map(|r| r.relabel(rank, &step)).collect();
        for m in map.iter_mut() {
            *m = m.and_then(|j| step[j - 1]);
        }
    }

    // Compact the surviving generators.
    let used: Vec<usize> = (1..=rank).filter(|&j| map.contains(&Some(j))).collect();
    let compact: Vec<Option<usize>> = (1..=rank)
        .map(|j| used.iter().position(|&u| u == j).map(|k| k + 1))
        .collect();
    let relators = relators
        .iter()
        .map(|r| r.relabel(used.len(), &compact))
        .collect();
    let labels = used.iter().map(|&j| p.labels[j - 1]).collect();
    GroupPresentation {
        generators: used.len(),
        relators,
        labels,
    }
}

/// Invariants of a finitely generated abelian group `Z^r ⊕ ⊕ Z/t_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianInvariants {
    /// Elementary divisors above 1, each dividing the next.
    pub torsion: Vec<u64>,
    pub free_rank: usize,
}

impl AbelianInvariants {
    pub fn is_cyclic_of_order(&self, order: u64) -> bool {
        self.free_rank == 0
            && (self.torsion.as_slice() == [order] || (order == 1 && self.torsion.is_empty()))
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<alloc::string::String> = self
            .torsion
            .iter()
            .map(|t| alloc::format!("Z/{t}"))
            .collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(alloc::format!("Z^{r}")),
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

pub fn abelianization(p: &GroupPresentation) -> AbelianInvariants {
    let diagonal = smith_diagonal(p.exponent_matrix(), p.generators);
    let rank = diagonal.len();
    AbelianInvariants {
        torsion: diagonal.into_iter().filter(|&d| d > 1).collect(),
        free_rank: p.generators - rank,
    }
}

/// Nonzero diagonal entries of the Smith normal form, positive and each
/// dividing the next.
pub fn smith_diagonal(rows: Vec<Vec<i64>>, cols: usize) -> Vec<u64> {
    let mut m: Vec<Vec<i128>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(i128::from).collect())
        .collect();
    let nrows = m.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows.min(cols) {
        // pivot: smallest nonzero absolute value in the remaining block
        let Some((pi, pj)) = (t..nrows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| m[i][j] != 0)
            .min_by_key(|&(i, j)| m[i][j].abs())
        else {
            break;
        };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        let (upper, lower) = m.split_at_mut(t + 1);
        let pivot_row = &upper[t];
        for row in lower {
            let q = row[t] / pivot_row[t];
            if q != 0 {
                for (x, &p) in row[t..cols].iter_mut().zip(&pivot_row[t..cols]) {
                    *x -= q * p;
                }
            }
            clean &= row[t] == 0;
        }
        for j in t + 1..cols {
            let q = m[t][j] / m[t][t];
            if q != 0 {
                for row in m.iter_mut().skip(t) {
                    row[j] -= q * row[t];
                }
            }
            clean &= m[t][j] == 0;
        }
        if !clean {
            continue;
        }
        let pivot = m[t][t];
        let bad = (t + 1..nrows).find(|&i| (t + 1..cols).any(|j| m[i][j] % pivot != 0));
        if let Some(i) = bad {
            let (upper, lower) = m.split_at_mut(i);
            for (x, &y) in upper[t][t..cols].iter_mut().zip(&lower[0][t..cols]) {
                *x += y;
            }
            continue;
        }
        diag.push(pivot.unsigned_abs() as u64);
        t += 1;
    }
    diag
}

/// Connectivity of the strands under the transposition supports of the
/// branch and cusp factors; a necessary condition for an irreducible curve.
pub fn irreducibility_check(f: &CuspidalFactorization) -> bool {
    let n = f.strands();
    let mut uf = UnionFind::new(n);
    for g in f.factors().iter().filter(|g| g.rho() % 2 == 1) {
        if let Some((a, b)) = g.braid().permutation().as_transposition() {
            uf.union(a - 1, b - 1);
        }
    }
    uf.components() == 1
}
