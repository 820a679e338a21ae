//! Words in the Artin generators of the braid group `B_n`.
//!
//! A letter `i > 0` stands for the positive generator `X_i` (strands in
//! positions `i` and `i+1` cross), and `-i` for its inverse. Words are read
//! left to right as paths: in `compose(u, v)` the braid `u` is traversed
//! first. Every operation returns a new value.

use alloc::vec::Vec;
use core::fmt;

use crate::garside::NormalForm;
use crate::perm::Permutation;

/// Largest strand count accepted by [`BraidWord`].
pub const MAX_STRANDS: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BraidError {
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("{0} strands exceeds the supported maximum of {MAX_STRANDS}")]
    TooManyStrands(usize),
    #[error("letter {letter} is not a generator of B_{strands}")]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("twist needs at least 2 strands, got {0}")]
    TwistTooSmall(usize),
}

/// An element of `B_n` written as a word in `X_1^±1 .. X_{n-1}^±1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i16>,
}

fn check_strands(strands: usize) -> Result<(), BraidError> {
    if strands == 0 {
        Err(BraidError::NoStrands)
    } else if strands > MAX_STRANDS {
        Err(BraidError::TooManyStrands(strands))
    } else {
        Ok(())
    }
}

impl BraidWord {
    pub fn new<I>(strands: usize, letters: I) -> Result<Self, BraidError>
    where
        I: IntoIterator,
        I::Item: Into<i32>,
    {
        check_strands(strands)?;
        let letters = letters
            .into_iter()
            .map(|l| {
                let l: i32 = l.into();
                if l == 0 || l.unsigned_abs() as usize >= strands {
                    Err(BraidError::LetterOutOfRange { letter: l, strands })
                } else {
                    Ok(l as i16)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<Self, BraidError> {
        check_strands(strands)?;
        Ok(BraidWord {
            strands,
            letters: Vec::new(),
        })
    }

    /// The single-letter word `X_i^sign`.
    pub fn generator(strands: usize, letter: i32) -> Result<Self, BraidError> {
        Self::new(strands, [letter])
    }

    pub(crate) fn from_raw(strands: usize, letters: Vec<i16>) -> Self {
        debug_assert!(letters
            .iter()
            .all(|&l| l != 0 && (l.unsigned_abs() as usize) < strands));
        BraidWord { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i16] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Cancels adjacent `X_i X_i^-1` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i16> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    fn same_strands(&self, other: &BraidWord) -> Result<(), BraidError> {
        if self.strands == other.strands {
            Ok(())
        } else {
            Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            })
        }
    }

    /// `self` followed by `other`, freely reduced at the seam.
    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        self.same_strands(other)?;
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            if letters.last() == Some(&-l) {
                letters.pop();
            } else {
                letters.push(l);
            }
        }
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    /// `z^-1 · self · z`.
    pub fn conjugate(&self, z: &BraidWord) -> Result<BraidWord, BraidError> {
        z.inverse().compose(self)?.compose(z)
    }

    pub fn pow(&self, k: u32) -> BraidWord {
        let mut letters = Vec::with_capacity(self.letters.len() * k as usize);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Image in the abelianization `B_n -> Z`.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Image in `S_n` under `X_i -> (i i+1)`, composed in reading order.
    pub fn permutation(&self) -> Permutation {
        let mut positions: Vec<usize> = (0..self.strands).collect();
        // positions[strand] = current position of the strand that started at `strand`
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            let (s, t) = (at[i], at[i + 1]);
            at.swap(i, i + 1);
            positions[s] = i + 1;
            positions[t] = i;
        }
        Permutation::from_zero_based(positions).expect("strand tracking is a bijection")
    }

    pub fn normal_form(&self) -> NormalForm {
        NormalForm::of(self)
    }

    /// Word-problem equality in `B_n`, decided by Garside normal form.
    pub fn equals(&self, other: &BraidWord) -> Result<bool, BraidError> {
        self.same_strands(other)?;
        Ok(self.normal_form() == other.normal_form())
    }
}

/// `Δ²_n = (X_1 ··· X_{n-1})^n`.
pub fn full_twist(strands: usize) -> Result<BraidWord, BraidError> {
    if strands < 2 {
        return Err(BraidError::TwistTooSmall(strands));
    }
    check_strands(strands)?;
    let row: Vec<i16> = (1..strands as i16).collect();
    Ok(BraidWord::from_raw(strands, row).pow(strands as u32))
}

/// `Δ_n = (X_1···X_{n-1})(X_1···X_{n-2})···(X_1)`.
pub fn half_twist(strands: usize) -> Result<BraidWord, BraidError> {
    if strands < 2 {
        return Err(BraidError::TwistTooSmall(strands));
    }
    check_strands(strands)?;
    let mut letters = Vec::with_capacity(strands * (strands - 1) / 2);
    for top in (1..strands as i16).rev() {
        letters.extend(1..=top);
    }
    Ok(BraidWord::from_raw(strands, letters))
}

impl fmt::Display for BraidWord {
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
