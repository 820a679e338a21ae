//! Permutations of `{1..n}` and canonical forms of transposition tuples.
//!
//! Products follow the same path order as braid words: `p.then(q)` applies
//! `p` first, so `permutation(u·v) == permutation(u).then(&permutation(v))`.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermutationError {
    #[error("images do not form a bijection of 1..={0}")]
    NotABijection(usize),
    #[error("point {point} outside 1..={size}")]
    PointOutOfRange { point: usize, size: usize },
    #[error("permutation sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // zero-based: images[j] is the image of point j+1, minus one
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Permutation {
            images: (0..size as u16).collect(),
        }
    }

    /// One-based images: `images[j-1]` is where `j` goes.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermutationError> {
        let n = images.len();
        if images.iter().any(|&x| x == 0 || x > n) {
            return Err(PermutationError::NotABijection(n));
        }
        Self::from_zero_based(images.into_iter().map(|x| x - 1).collect())
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Result<Self, PermutationError> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(PermutationError::NotABijection(n));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u16).collect(),
        })
    }

    /// The transposition `(a b)` in `S_size`.
    pub fn transposition(size: usize, a: usize, b: usize) -> Result<Self, PermutationError> {
        for p in [a, b] {
            if p == 0 || p > size {
                return Err(PermutationError::PointOutOfRange { point: p, size });
            }
        }
        if a == b {
            return Err(PermutationError::NotABijection(size));
        }
        let mut p = Self::identity(size);
        p.images.swap(a - 1, b - 1);
        Ok(p)
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// Image of the one-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] as usize + 1
    }

    pub(crate) fn zero_based(&self) -> &[u16] {
        &self.images
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    /// Path-order product: `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Result<Permutation, PermutationError> {
        if self.size() != other.size() {
            return Err(PermutationError::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        Ok(self.then_unchecked(other))
    }

    pub(crate) fn then_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0u16; self.images.len()];
        for (j, &x) in self.images.iter().enumerate() {
            inv[x as usize] = j as u16;
        }
        Permutation { images: inv }
    }

    /// `g^-1 · self · g` in path order.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Permutation, PermutationError> {
        g.inverse().then(self)?.then(g)
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(j, &x)| j == x as usize)
    }

    /// The moved pair `(a, b)` with `a < b`, if this is a transposition.
    pub fn as_transposition(&self) -> Option<(usize, usize)> {
        let mut moved = self
            .images
            .iter()
            .enumerate()
            .filter(|(j, &x)| *j != x as usize);
        let (a, &xa) = moved.next()?;
        let (b, &xb) = moved.next()?;
        if moved.next().is_some() || xa as usize != b || xb as usize != a {
            return None;
        }
        Some((a + 1, b + 1))
    }

    pub fn is_transposition(&self) -> bool {
        self.as_transposition().is_some()
    }

    pub fn order(&self) -> u64 {
        let mut seen = alloc::vec![false; self.size()];
        let mut order = 1u64;
        for start in 0..self.size() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }

    /// Disjoint cycles of length ≥ 2, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = alloc::vec![false; self.size()];
        let mut out = Vec::new();
        for start in 0..self.size() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Entry of a tuple whose members are transpositions or the identity.
type Slot = Option<(u16, u16)>;

fn slots(tuple: &[Permutation]) -> Option<Vec<Slot>> {
    tuple
        .iter()
        .map(|p| {
            if p.is_identity() {
                Some(None)
            } else {
                p.as_transposition()
                    .map(|(a, b)| Some((a as u16 - 1, b as u16 - 1)))
            }
        })
        .collect()
}

struct Relabeler<'a> {
    slots: &'a [Slot],
    best: Option<Vec<Slot>>,
}

impl Relabeler<'_> {
    fn run(&mut self, pos: usize, labels: &mut Vec<Option<u16>>, next: u16, out: &mut Vec<Slot>) {
        if let Some(best) = &self.best {
            if out.as_slice().cmp(&best[..out.len()]) == Ordering::Greater {
                return;
            }
        }
        if pos == self.slots.len() {
            if self.best.as_ref().is_none_or(|b| *out < *b) {
                self.best = Some(out.clone());
            }
            return;
        }
        let Some((p, q)) = self.slots[pos] else {
            out.push(None);
            self.run(pos + 1, labels, next, out);
            out.pop();
            return;
        };
        let (p, q) = (p as usize, q as usize);
        match (labels[p], labels[q]) {
            (Some(a), Some(b)) => {
                out.push(Some((a.min(b), a.max(b))));
                self.run(pos + 1, labels, next, out);
                out.pop();
            }
            (Some(a), None) | (None, Some(a)) => {
                let fresh = if labels[p].is_none() { p } else { q };
                labels[fresh] = Some(next);
                out.push(Some((a.min(next), a.max(next))));
                self.run(pos + 1, labels, next + 1, out);
                out.pop();
                labels[fresh] = None;
            }
            (None, None) => {
                for (first, second) in [(p, q), (q, p)] {
                    labels[first] = Some(next);
                    labels[second] = Some(next + 1);
                    out.push(Some((next, next + 1)));
                    self.run(pos + 1, labels, next + 2, out);
                    out.pop();
                    labels[first] = None;
                    labels[second] = None;
                }
            }
        }
    }
}

/// Lexicographically least relabeling of a tuple of transpositions and
/// identities under simultaneous conjugation in `S_n`.
///
/// Entries compare as sorted point pairs, identities fixed in place.
/// Returns `None` if some entry is neither a transposition nor the identity
/// or the sizes disagree.
pub fn canonical_transposition_tuple(tuple: &[Permutation]) -> Option<Vec<Permutation>> {
    let size = tuple.first().map_or(0, Permutation::size);
    if tuple.iter().any(|p| p.size() != size) {
        return None;
    }
    let slots = slots(tuple)?;
    let mut search = Relabeler {
        slots: &slots,
        best: None,
    };
    let mut labels = alloc::vec![None; size];
    search.run(0, &mut labels, 0, &mut Vec::with_capacity(slots.len()));
    let best = search.best?;
    Some(
        best.into_iter()
            .map(|s| match s {
                None => Permutation::identity(size),
                Some((a, b)) => {
                    Permutation::transposition(size, a as usize + 1, b as usize + 1).unwrap()
                }
            })
            .collect(),
    )
}

/// Do these transpositions generate all of `S_n`? True iff their support
/// graph on `{1..n}` is connected. Non-transpositions make the answer false.
pub fn transpositions_generate_symmetric(size: usize, gens: &[Permutation]) -> bool {
    if size <= 1 {
        return true;
    }
    let mut uf = UnionFind::new(size);
    for g in gens {
        match g.as_transposition() {
            Some((a, b)) if g.size() == size => uf.union(a - 1, b - 1),
            _ => return false,
        }
    }
    uf.components() == 1
}

/// Does the group generated by `gens` act transitively on `{1..size}`?
pub fn is_transitive(size: usize, gens: &[Permutation]) -> bool {
    let mut uf = UnionFind::new(size);
    for g in gens {
        for (j, &x) in g.images.iter().enumerate() {
            uf.union(j, x as usize);
        }
    }
    uf.components() <= 1
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    pub(crate) fn components(&mut self) -> usize {
        (0..self.parent.len())
            .filter(|&x| self.find(x) == x)
            .count()
    }
}
