//! Free-group words on the geometric generators `x_1..x_r`, and the Artin
//! action of braids on them.

use alloc::vec::Vec;
use core::fmt;

use crate::braid::BraidWord;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FreeWordError {
    #[error("letter {letter} is not a generator of the free group of rank {rank}")]
    LetterOutOfRange { letter: i32, rank: usize },
    #[error("braid on {strands} strands cannot act on rank {rank}")]
    RankMismatch { strands: usize, rank: usize },
}

/// A freely reduced word; the reduced form is the only representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

fn push_reduced(out: &mut Vec<i32>, l: i32) {
    if out.last() == Some(&-l) {
        out.pop();
    } else {
        out.push(l);
    }
}

impl FreeWord {
    pub fn new<I: IntoIterator<Item = i32>>(
        rank: usize,
        letters: I,
    ) -> Result<Self, FreeWordError> {
        let mut out = Vec::new();
        for l in letters {
            if l == 0 || l.unsigned_abs() as usize > rank {
                return Err(FreeWordError::LetterOutOfRange { letter: l, rank });
            }
            push_reduced(&mut out, l);
        }
        Ok(FreeWord { rank, letters: out })
    }

    pub fn identity(rank: usize) -> Self {
        FreeWord {
            rank,
            letters: Vec::new(),
        }
    }

    /// `x_i` for one-based `i`.
    pub fn generator(rank: usize, i: usize) -> Self {
        assert!(
            i >= 1 && i <= rank,
            "generator {i} out of range for rank {rank}"
        );
        FreeWord {
            rank,
            letters: alloc::vec![i as i32],
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        debug_assert_eq!(self.rank, other.rank);
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        FreeWord {
            rank: self.rank,
            letters,
        }
    }

    /// `self · w · self^-1`.
    pub fn conjugating(&self, w: &FreeWord) -> FreeWord {
        self.concat(w).concat(&self.inverse())
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Exponent sum of each generator; index `j` holds `x_{j+1}`.
    pub fn exponent_vector(&self) -> Vec<i64> {
        let mut v = alloc::vec![0i64; self.rank];
        for &l in &self.letters {
            v[l.unsigned_abs() as usize - 1] += l.signum() as i64;
        }
        v
    }

    /// Replaces each `x_j` by `images[j-1]`.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let rank = images.first().map_or(self.rank, |w| w.rank);
        let mut out = Vec::new();
        for &l in &self.letters {
            let img = &images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                for &m in &img.letters {
                    push_reduced(&mut out, m);
                }
            } else {
                for &m in img.letters.iter().rev() {
                    push_reduced(&mut out, -m);
                }
            }
        }
        FreeWord { rank, letters: out }
    }

    /// Strips matching letters from both ends.
    pub fn cyclically_reduced(&self) -> FreeWord {
        let l = &self.letters;
        let mut lo = 0;
        let mut hi = l.len();
        while hi - lo >= 2 && l[lo] == -l[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        FreeWord {
            rank: self.rank,
            letters: l[lo..hi].to_vec(),
        }
    }

    /// Renames generators: `x_j` becomes `x_{map[j-1]}`, or is deleted if
    /// the map gives `None`.
    pub(crate) fn relabel(&self, rank: usize, map: &[Option<usize>]) -> FreeWord {
        let mut out = Vec::new();
        for &l in &self.letters {
            if let Some(t) = map[l.unsigned_abs() as usize - 1] {
                push_reduced(&mut out, l.signum() * t as i32);
            }
        }
        FreeWord { rank, letters: out }
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Images `b(x_1), .., b(x_n)` of the free generators under the Artin action.
///
/// A single generator `X_i` sends `x_i -> x_i x_{i+1} x_i^-1` and
/// `x_{i+1} -> x_i`, fixing the rest; `X_i^-1` acts by the inverse
/// substitution. The letters of a braid act in reading order, so this is a
/// right action: acting by `u·v` is acting by `u`, then by `v`.
pub fn artin_images(braid: &BraidWord) -> Vec<FreeWord> {
    let n = braid.strands();
    let mut images: Vec<FreeWord> = (1..=n).map(|i| FreeWord::generator(n, i)).collect();
    // b = l · rest acts as (action of rest) ∘ (action of l): precompose
    // letter by letter from the right end.
    for &l in braid.letters().iter().rev() {
        let i = l.unsigned_abs() as usize - 1;
        let (xi, xj) = (images[i].clone(), images[i + 1].clone());
        if l > 0 {
            images[i] = xi.conjugating(&xj);
            images[i + 1] = xi;
        } else {
            images[i] = xj.clone();
            images[i + 1] = xj.inverse().concat(&xi).concat(&xj);
        }
    }
    images
}

pub fn artin_action(braid: &BraidWord, word: &FreeWord) -> Result<FreeWord, FreeWordError> {
    if braid.strands() != word.rank() {
        return Err(FreeWordError::RankMismatch {
            strands: braid.strands(),
            rank: word.rank(),
        });
    }
    Ok(word.substitute(&artin_images(braid)))
}
