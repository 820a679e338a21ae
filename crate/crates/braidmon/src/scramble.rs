//! Random Hurwitz moves, for producing equivalent factorizations.

use braidmon_core::hurwitz::{
    apply_moves, conjugate_all, Direction, HurwitzError, MoveSpec, Witness,
};
use braidmon_core::{BraidWord, CuspidalFactorization};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Applies `moves` random moves drawn from a seeded ChaCha stream, then
/// conjugates by `z`. Returns the result and the witness leading to it.
pub fn scramble(
    f: &CuspidalFactorization,
    moves: usize,
    seed: u64,
    z: &BraidWord,
) -> Result<(CuspidalFactorization, Witness), HurwitzError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let specs: Vec<MoveSpec> = if f.len() < 2 {
        Vec::new()
    } else {
        (0..moves)
            .map(|_| {
                let index = rng.gen_range(1..f.len());
                let direction = if rng.gen() {
                    Direction::Left
                } else {
                    Direction::Right
                };
                MoveSpec::new(index, direction)
            })
            .collect()
    };
    let out = conjugate_all(&apply_moves(f, &specs)?, z)?;
    Ok((
        out.normalized(),
        Witness {
            moves: specs,
            conjugator: z.clone(),
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn deterministic_and_witnessed() {
        let f = corpus::load("smooth_cubic");
        let z = BraidWord::new(3, [1, -2]).unwrap();
        let (a, w) = scramble(&f, 20, 7, &z).unwrap();
        let (b, _) = scramble(&f, 20, 7, &z).unwrap();
        assert_eq!(a, b);
        assert_eq!(w.moves.len(), 20);
        assert!(w.verifies(&f, &a));
        assert!(a.verify_full_twist());
    }
}
