//! Left-greedy Garside normal form for `B_n`.
//!
//! Every braid is written uniquely as `Δ^k · s_1 ··· s_m` where each `s_j`
//! is a simple braid (a positive braid in which any two strands cross at
//! most once) different from `1` and `Δ`, and each pair `(s_j, s_{j+1})` is
//! left-weighted: every generator that can start `s_{j+1}` can already end
//! `s_j`. Two words are equal in `B_n` iff their normal forms coincide.
//!
//! A simple braid is stored as its strand permutation `π`, where `π[j]` is
//! the final position of the strand that starts at position `j`.

use alloc::vec::Vec;
use core::fmt;

use crate::braid::{BraidWord, MAX_STRANDS};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Simple {
    n: u8,
    perm: [u8; MAX_STRANDS],
}

impl Simple {
    fn identity(n: usize) -> Self {
        let mut perm = [0u8; MAX_STRANDS];
        for (j, p) in perm.iter_mut().enumerate().take(n) {
            *p = j as u8;
        }
        Simple { n: n as u8, perm }
    }

    /// Positive generator `X_{i+1}` (zero-based `i`).
    fn generator(n: usize, i: usize) -> Self {
        let mut s = Self::identity(n);
        s.perm.swap(i, i + 1);
        s
    }

    fn delta(n: usize) -> Self {
        let mut perm = [0u8; MAX_STRANDS];
        for (j, p) in perm.iter_mut().enumerate().take(n) {
            *p = (n - 1 - j) as u8;
        }
        Simple { n: n as u8, perm }
    }

    /// The simple `c` with `c · X_{i+1} = Δ`, so that `X_{i+1}^-1 = Δ^-1 c`.
    fn left_complement_of_generator(n: usize, i: usize) -> Self {
        let mut s = Self::delta(n);
        for p in s.perm.iter_mut().take(n) {
            if *p as usize == i {
                *p = (i + 1) as u8;
            } else if *p as usize == i + 1 {
                *p = i as u8;
            }
        }
        s
    }

    fn len(&self) -> usize {
        self.n as usize
    }

    fn is_identity(&self) -> bool {
        (0..self.len()).all(|j| self.perm[j] as usize == j)
    }

    fn is_delta(&self) -> bool {
        let n = self.len();
        (0..n).all(|j| self.perm[j] as usize == n - 1 - j)
    }

    /// Conjugation by `Δ`: `X_i <-> X_{n-i}`.
    fn flip(&self) -> Self {
        let n = self.len();
        let mut out = *self;
        for j in 0..n {
            out.perm[j] = (n - 1 - self.perm[n - 1 - j] as usize) as u8;
        }
        out
    }

    fn inverse_perm(&self) -> [u8; MAX_STRANDS] {
        let mut inv = [0u8; MAX_STRANDS];
        for j in 0..self.len() {
            inv[self.perm[j] as usize] = j as u8;
        }
        inv
    }

    /// Reduced positive word, peeling generators off the left.
    fn letters(&self) -> Vec<i16> {
        let n = self.len();
        let mut p = *self;
        let mut out = Vec::new();
        'outer: loop {
            for i in 0..n.saturating_sub(1) {
                if p.perm[i] > p.perm[i + 1] {
                    out.push(i as i16 + 1);
                    p.perm.swap(i, i + 1);
                    continue 'outer;
                }
            }
            break;
        }
        out
    }
}

/// Moves generators from the front of `b` to the back of `a` until the pair
/// is left-weighted. Returns whether anything moved.
fn left_weight(a: &mut Simple, b: &mut Simple) -> bool {
    let n = a.len();
    let mut a_inv = a.inverse_perm();
    let mut moved = false;
    'outer: loop {
        for i in 0..n - 1 {
            // `i` starts `b`, and `a · X_i` is still simple
            if b.perm[i] > b.perm[i + 1] && a_inv[i] < a_inv[i + 1] {
                let (s, t) = (a_inv[i] as usize, a_inv[i + 1] as usize);
                a.perm[s] = (i + 1) as u8;
                a.perm[t] = i as u8;
                a_inv.swap(i, i + 1);
                b.perm.swap(i, i + 1);
                moved = true;
                continue 'outer;
            }
        }
        return moved;
    }
}

/// Canonical form `Δ^k · s_1 ··· s_m` of a braid.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    strands: usize,
    delta_power: i64,
    simples: Vec<Simple>,
}

impl NormalForm {
    pub fn of(word: &BraidWord) -> NormalForm {
        let n = word.strands();
        let letters = word.letters();
        if n < 2 {
            return NormalForm {
                strands: n,
                delta_power: 0,
                simples: Vec::new(),
            };
        }
        // Each X_i^-1 becomes Δ^-1 · c_i; the Δ^-1 is pushed to the front,
        // flipping every simple it passes.
        let negatives = letters.iter().filter(|&&l| l < 0).count();
        let mut nf = NormalForm {
            strands: n,
            delta_power: -(negatives as i64),
            simples: Vec::new(),
        };
        let mut later_negatives = negatives;
        for &l in letters {
            let i = l.unsigned_abs() as usize - 1;
            let mut s = if l > 0 {
                Simple::generator(n, i)
            } else {
                later_negatives -= 1;
                Simple::left_complement_of_generator(n, i)
            };
            if later_negatives % 2 == 1 {
                s = s.flip();
            }
            nf.push_simple(s);
        }
        nf
    }

    /// Right-multiplies by a simple braid and restores normal form.
    fn push_simple(&mut self, s: Simple) {
        if s.is_identity() {
            return;
        }
        self.simples.push(s);
        let mut j = self.simples.len() - 1;
        while j > 0 {
            let (left, right) = self.simples.split_at_mut(j);
            if !left_weight(&mut left[j - 1], &mut right[0]) {
                break;
            }
            j -= 1;
        }
        while self.simples.last().is_some_and(Simple::is_identity) {
            self.simples.pop();
        }
        let deltas = self.simples.iter().take_while(|s| s.is_delta()).count();
        if deltas > 0 {
            self.simples.drain(..deltas);
            self.delta_power += deltas as i64;
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    /// Number of non-`Δ` simple factors (the canonical length).
    pub fn canonical_length(&self) -> usize {
        self.simples.len()
    }

    /// Strand permutations of the simple factors, zero-based.
    pub fn simple_permutations(&self) -> impl Iterator<Item = &[u8]> {
        self.simples.iter().map(|s| &s.perm[..s.len()])
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.simples.is_empty()
    }

    /// A word representing the same braid: `Δ^k` spelled out, then each
    /// simple as a positive word.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let mut letters = Vec::new();
        if n >= 2 {
            let delta = Simple::delta(n).letters();
            for _ in 0..self.delta_power.unsigned_abs() {
                if self.delta_power > 0 {
                    letters.extend_from_slice(&delta);
                } else {
                    letters.extend(delta.iter().rev().map(|&l| -l));
                }
            }
            for s in &self.simples {
                letters.extend(s.letters());
            }
        }
        BraidWord::from_raw(n, letters)
    }

    /// Compact byte encoding; equal braids give equal bytes.
    pub fn key_bytes(&self, out: &mut Vec<u8>) {
        out.push(self.strands as u8);
        out.extend_from_slice(&self.delta_power.to_le_bytes());
        out.extend_from_slice(&(self.simples.len() as u32).to_le_bytes());
        for s in &self.simples {
            out.extend_from_slice(&s.perm[..s.len()]);
        }
    }
}

impl fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}", self.delta_power)?;
        for s in &self.simples {
            write!(f, " {:?}", &s.perm[..s.len()])?;
        }
        Ok(())
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.delta_power)?;
        for s in &self.simples {
            f.write_str(" [")?;
            for (k, l) in s.letters().iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{l}")?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}
