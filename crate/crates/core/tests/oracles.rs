//! Library results checked against independent computations written here:
//! a forward Artin action on plain vectors, brute force over transposition
//! tuples, and Smith forms through determinantal divisors.

use std::collections::BTreeSet;

use braidmon_core::chisini::{enumerate_reps, ChisiniCertificate, EnumerationLimits};
use braidmon_core::hurwitz::{
    apply_move, apply_moves, canonical_key, conjugate_all, equivalent, fingerprint, orbit_quotient,
    Direction, EquivalenceVerdict, MoveSpec, OrbitLimits, SearchConfig,
};
use braidmon_core::perm::Permutation;
use braidmon_core::vankampen::{
    abelianization, presentation, presentation_with, simplify, smith_diagonal, RelationMode,
};
use braidmon_core::{full_twist, BraidWord, CuspidalFactor, CuspidalFactorization};
use proptest::prelude::*;

// ---------------------------------------------------------------------------
// Independent Artin action: images of x_1..x_n as reduced letter vectors,
// built by substituting letter by letter from the left.

fn reduce(word: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(word.len());
    for &l in word {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn invert(word: &[i32]) -> Vec<i32> {
    word.iter().rev().map(|l| -l).collect()
}

/// Images of the free generators under a single braid letter.
fn letter_images(n: usize, letter: i16) -> Vec<Vec<i32>> {
    let mut images: Vec<Vec<i32>> = (1..=n as i32).map(|j| vec![j]).collect();
    let i = letter.unsigned_abs() as i32;
    let (xi, xj) = (i, i + 1);
    if letter > 0 {
        images[i as usize - 1] = vec![xi, xj, -xi];
        images[i as usize] = vec![xi];
    } else {
        images[i as usize - 1] = vec![xj];
        images[i as usize] = vec![-xj, xi, xj];
    }
    images
}

fn substitute(word: &[i32], images: &[Vec<i32>]) -> Vec<i32> {
    let mut out = Vec::new();
    for &l in word {
        let img = &images[l.unsigned_abs() as usize - 1];
        if l > 0 {
            out.extend_from_slice(img);
        } else {
            out.extend(invert(img));
        }
    }
    reduce(&out)
}

fn artin(n: usize, letters: &[i16]) -> Vec<Vec<i32>> {
    let mut images: Vec<Vec<i32>> = (1..=n as i32).map(|j| vec![j]).collect();
    for &l in letters {
        let step = letter_images(n, l);
        for img in images.iter_mut() {
            *img = substitute(img, &step);
        }
    }
    images
}

fn same_braid(a: &BraidWord, b: &BraidWord) -> bool {
    artin(a.strands(), a.letters()) == artin(b.strands(), b.letters())
}

fn word(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(n, letters.iter().copied()).unwrap()
}

fn factorization(n: usize, factors: &[(u8, &[i32])]) -> CuspidalFactorization {
    let factors = factors
        .iter()
        .map(|&(rho, q)| CuspidalFactor::new(word(n, q), rho as i64).unwrap())
        .collect();
    CuspidalFactorization::new(n, factors).unwrap()
}

fn conic() -> CuspidalFactorization {
    factorization(2, &[(1, &[]), (1, &[])])
}

fn node_pair() -> CuspidalFactorization {
    factorization(2, &[(2, &[])])
}

fn cuspidal_cubic() -> CuspidalFactorization {
    factorization(3, &[(3, &[]), (1, &[]), (1, &[-2]), (1, &[2])])
}

/// `(X_1 ··· X_{n-1})^n` with `X_i = P X_1 P^-1`, `P = (X_{i-1}X_i)···(X_1X_2)`.
fn smooth(n: usize) -> CuspidalFactorization {
    let mut factors = Vec::new();
    for _ in 0..n {
        for i in 1..n as i32 {
            let mut p = Vec::new();
            for j in (1..i).rev() {
                p.extend([j, j + 1]);
            }
            factors.push(CuspidalFactor::new(word(n, &invert(&p)), 1).unwrap());
        }
    }
    CuspidalFactorization::new(n, factors).unwrap()
}

fn corpus() -> Vec<(&'static str, CuspidalFactorization)> {
    vec![
        ("conic", conic()),
        ("node pair", node_pair()),
        ("cuspidal cubic", cuspidal_cubic()),
        ("smooth cubic", smooth(3)),
        ("smooth quartic", smooth(4)),
    ]
}

fn braid_word(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |n| {
        let letter = (1..n as i32, any::<bool>()).prop_map(|(i, s)| if s { i } else { -i });
        prop::collection::vec(letter, 0..=max_len).prop_map(move |ls| word(n, &ls))
    })
}

// ---------------------------------------------------------------------------
// Word problem: Garside normal form against the Artin action.

#[test]
fn artin_oracle_sanity() {
    assert_eq!(artin(3, &[1, 2, 1]), artin(3, &[2, 1, 2]));
    assert_ne!(artin(3, &[1, 2]), artin(3, &[2, 1]));
    assert_eq!(artin(4, &[1, 3]), artin(4, &[3, 1]));
    assert_eq!(artin(3, &[1, -1]), artin(3, &[]));
}

#[test]
fn full_twist_by_both_routes() {
    for n in 2..=12usize {
        let d2 = full_twist(n).unwrap();
        assert_eq!(d2.exponent_sum(), (n * (n - 1)) as i64);
        assert!(d2.permutation().is_identity());
        // x_j -> c x_j c^-1 with c = x_1 ··· x_n
        let c: Vec<i32> = (1..=n as i32).collect();
        let expected: Vec<Vec<i32>> = (1..=n as i32)
            .map(|j| {
                let mut w = c.clone();
                w.push(j);
                w.extend(invert(&c));
                reduce(&w)
            })
            .collect();
        let got = artin(n, d2.letters());
        assert_eq!(got, expected, "B_{n}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn relator_insertion(w in braid_word(6, 14), pos in any::<prop::sample::Index>(), pick in 0..3usize, seed in 0..64i32) {
        let n = w.strands();
        let r: Vec<i32> = match (pick, n) {
            (_, 2) => vec![1, -1],
            (0, _) => {
                let i = 1 + seed % (n as i32 - 2);
                vec![i, i + 1, i, -(i + 1), -i, -(i + 1)]
            }
            (1, n) if n >= 4 => {
                let i = 1 + seed % (n as i32 - 3);
                let j = i + 2 + (seed / 7) % (n as i32 - 2 - i);
                vec![i, j, -i, -j]
            }
            _ => {
                let i = 1 + seed % (n as i32 - 1);
                vec![-i, i]
            }
        };
        let mut letters: Vec<i32> = w.letters().iter().map(|&l| l as i32).collect();
        let at = pos.index(letters.len() + 1);
        letters.splice(at..at, r);
        let v = word(n, &letters);
        prop_assert!(same_braid(&w, &v));
        prop_assert!(w.equals(&v).unwrap());
        prop_assert_eq!(w.normal_form(), v.normal_form());
    }

    #[test]
    fn garside_agrees_with_artin(a in braid_word(5, 10), b_letters in prop::collection::vec(any::<i16>(), 0..10)) {
        let n = a.strands();
        let b = word(n, &b_letters.iter().map(|&l| {
            let i = 1 + (l.unsigned_abs() as i32) % (n as i32 - 1);
            if l < 0 { -i } else { i }
        }).collect::<Vec<_>>());
        prop_assert_eq!(a.equals(&b).unwrap(), same_braid(&a, &b));
        // normal form word represents the same braid
        prop_assert!(same_braid(&a, &a.normal_form().to_word()));
    }

    #[test]
    fn full_twist_is_central(w in braid_word(6, 16)) {
        let d2 = full_twist(w.strands()).unwrap();
        let left = d2.compose(&w).unwrap();
        let right = w.compose(&d2).unwrap();
        prop_assert!(left.equals(&right).unwrap());
        prop_assert!(same_braid(&left, &right));
    }

    #[test]
    fn permutation_is_a_quotient(a in braid_word(6, 12), b in braid_word(6, 12)) {
        prop_assume!(a.strands() == b.strands());
        let ab = a.compose(&b).unwrap();
        prop_assert_eq!(ab.permutation(), a.permutation().then(&b.permutation()).unwrap());
    }
}

// ---------------------------------------------------------------------------
// Factorizations.

/// Conjugators of length at most two for three branch factors after an
/// unconjugated cusp, checked against the full twist by the Artin action.
#[test]
fn cuspidal_cubic_found_by_search() {
    let ball: Vec<Vec<i32>> = {
        let letters = [1, -1, 2, -2];
        let mut out = vec![vec![]];
        for &a in &letters {
            out.push(vec![a]);
            for &b in &letters {
                if a != -b {
                    out.push(vec![a, b]);
                }
            }
        }
        out
    };
    let target = artin(3, full_twist(3).unwrap().letters());
    let mut found = Vec::new();
    for q1 in &ball {
        for q2 in &ball {
            for q3 in &ball {
                let f = factorization(3, &[(3, &[]), (1, q1), (1, q2), (1, q3)]);
                if artin(3, f.product().letters()) == target {
                    assert!(f.verify_full_twist(), "{q1:?} {q2:?} {q3:?}");
                    found.push([q1.clone(), q2.clone(), q3.clone()]);
                } else {
                    assert!(!f.verify_full_twist());
                }
            }
        }
    }
    assert!(found.contains(&[vec![], vec![-2], vec![2]]), "{found:?}");

    let f = cuspidal_cubic();
    let counts = f.singularity_counts();
    assert_eq!((counts.branch, counts.nodes, counts.cusps), (3, 0, 1));
    assert_eq!(counts.weighted_total(), 6);
    let inv = f.curve_invariants().unwrap();
    assert_eq!((inv.degree, inv.genus, inv.cusps, inv.nodes), (3, 0, 1, 0));
}

#[test]
fn corpus_counts() {
    for (name, f) in corpus() {
        assert!(f.verify_full_twist(), "{name}");
        assert!(
            same_braid(&f.product(), &full_twist(f.strands()).unwrap()),
            "{name}"
        );
        let n = f.strands();
        assert_eq!(
            f.singularity_counts().weighted_total(),
            n * (n - 1),
            "{name}"
        );
        assert_eq!(f.product().exponent_sum(), (n * (n - 1)) as i64, "{name}");
    }
}

// ---------------------------------------------------------------------------
// Monodromy enumeration against brute force over transposition tuples.

type Perm = Vec<usize>;

fn transposition(n: usize, p: usize, q: usize) -> Perm {
    let mut t: Perm = (0..n).collect();
    t.swap(p, q);
    t
}

/// Path-order evaluation: the first letter acts first.
fn eval(n: usize, images: &[Perm], w: &[i32]) -> Perm {
    let mut acc: Perm = (0..n).collect();
    for &l in w {
        let g = &images[l.unsigned_abs() as usize - 1];
        let step: Perm = if l > 0 {
            g.clone()
        } else {
            let mut inv = vec![0; n];
            for (i, &j) in g.iter().enumerate() {
                inv[j] = i;
            }
            inv
        };
        acc = acc.iter().map(|&p| step[p]).collect();
    }
    acc
}

fn support(t: &Perm) -> Vec<usize> {
    t.iter()
        .enumerate()
        .filter(|&(i, &j)| i != j)
        .map(|(i, _)| i)
        .collect()
}

fn local_ok(rho: u8, a: &Perm, b: &Perm) -> bool {
    let (sa, sb) = (support(a), support(b));
    if sa.len() != 2 || sb.len() != 2 {
        return false;
    }
    let shared = sa.iter().filter(|p| sb.contains(p)).count();
    match rho {
        1 => a == b,
        2 => shared == 0,
        _ => shared == 1,
    }
}

fn connected(n: usize, images: &[Perm]) -> bool {
    let mut reach = vec![false; n];
    reach[0] = true;
    loop {
        let mut grew = false;
        for t in images {
            let s = support(t);
            if s.len() == 2 && reach[s[0]] != reach[s[1]] {
                reach[s[0]] = true;
                reach[s[1]] = true;
                grew = true;
            }
        }
        if !grew {
            return reach.iter().all(|&r| r);
        }
    }
}

fn all_relabelings(n: usize) -> Vec<Perm> {
    fn go(prefix: &mut Perm, n: usize, out: &mut Vec<Perm>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for k in 0..n {
            if !prefix.contains(&k) {
                prefix.push(k);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

/// Transposition tuples as sorted point pairs, minimized over relabelings.
fn orbit_min(tuple: &[(usize, usize)], relabelings: &[Perm]) -> Vec<(usize, usize)> {
    relabelings
        .iter()
        .map(|s| {
            tuple
                .iter()
                .map(|&(p, q)| {
                    let (a, b) = (s[p], s[q]);
                    (a.min(b), a.max(b))
                })
                .collect::<Vec<_>>()
        })
        .min()
        .unwrap()
}

fn brute_force_classes(f: &CuspidalFactorization, degree: usize) -> BTreeSet<Vec<(usize, usize)>> {
    let n = f.strands();
    let pairs: Vec<(usize, usize)> = (0..degree)
        .flat_map(|q| (0..q).map(move |p| (p, q)))
        .collect();
    let braids: Vec<Vec<Vec<i32>>> = f
        .factor_braids()
        .iter()
        .map(|b| artin(n, b.letters()))
        .collect();
    let locals: Vec<(u8, Vec<i32>, Vec<i32>)> = f
        .factors()
        .iter()
        .map(|g| {
            let imgs = artin(n, g.conjugator().letters());
            (g.rho(), imgs[0].clone(), imgs[1].clone())
        })
        .collect();
    let projective: Vec<i32> = (1..=n as i32).collect();
    let relabelings = all_relabelings(degree);
    let mut classes = BTreeSet::new();
    if pairs.is_empty() {
        return classes;
    }
    let total = pairs.len().pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let tuple: Vec<(usize, usize)> = (0..n)
            .map(|_| {
                let t = pairs[c % pairs.len()];
                c /= pairs.len();
                t
            })
            .collect();
        let images: Vec<Perm> = tuple
            .iter()
            .map(|&(p, q)| transposition(degree, p, q))
            .collect();
        let identity: Perm = (0..degree).collect();
        let relations = braids.iter().all(|imgs| {
            imgs.iter()
                .enumerate()
                .all(|(j, w)| eval(degree, &images, w) == images[j])
        });
        let local = locals.iter().all(|(rho, a, b)| {
            local_ok(*rho, &eval(degree, &images, a), &eval(degree, &images, b))
        });
        if relations
            && local
            && eval(degree, &images, &projective) == identity
            && connected(degree, &images)
        {
            classes.insert(orbit_min(&tuple, &relabelings));
        }
    }
    classes
}

fn as_pairs(images: &[Permutation]) -> Vec<(usize, usize)> {
    images
        .iter()
        .map(|t| {
            let (p, q) = t.as_transposition().expect("transposition image");
            (p.min(q) - 1, p.max(q) - 1)
        })
        .collect()
}

#[test]
fn enumeration_matches_brute_force() {
    let mut cases: Vec<(&str, CuspidalFactorization, Vec<usize>)> = vec![
        ("conic", conic(), vec![1, 2, 3, 4]),
        ("node pair", node_pair(), vec![2, 3, 4]),
        ("cuspidal cubic", cuspidal_cubic(), vec![2, 3, 4]),
        ("smooth cubic", smooth(3), vec![2, 3, 4]),
        ("smooth quartic", smooth(4), vec![2, 3, 4]),
        ("smooth sextic", smooth(6), vec![2, 3]),
    ];
    // a scrambled cubic has the same counts but different conjugators
    let scrambled = apply_moves(
        &smooth(3),
        &[
            MoveSpec::new(2, Direction::Left),
            MoveSpec::new(4, Direction::Right),
        ],
    )
    .unwrap();
    cases.push(("scrambled cubic", scrambled, vec![2, 3, 4]));
    for (name, f, degrees) in cases {
        let relabelings: Vec<Vec<Perm>> = (0..=4).map(all_relabelings).collect();
        for degree in degrees {
            let expected = brute_force_classes(&f, degree);
            let got = enumerate_reps(&f, degree, EnumerationLimits::default()).unwrap();
            let got: BTreeSet<_> = got
                .classes
                .iter()
                .map(|rep| orbit_min(&as_pairs(rep.images()), &relabelings[degree]))
                .collect();
            assert_eq!(got, expected, "{name} at N = {degree}");
        }
    }
}

#[test]
fn frozen_class_counts() {
    let count = |f: &CuspidalFactorization, n| {
        enumerate_reps(f, n, EnumerationLimits::default())
            .unwrap()
            .classes
            .len()
    };
    assert_eq!(count(&conic(), 1), 0);
    assert_eq!(count(&conic(), 2), 1);
    assert_eq!(count(&conic(), 3), 0);
    // the cubic group is cyclic of order three, so no transitive image
    assert_eq!(count(&cuspidal_cubic(), 3), 0);
    assert_eq!(brute_force_classes(&cuspidal_cubic(), 3).len(), 0);
    assert_eq!(count(&smooth(3), 3), 0);
}

// ---------------------------------------------------------------------------
// Smith normal form against determinantal divisors.

fn det(m: &[Vec<i128>]) -> i128 {
    if m.len() == 1 {
        return m[0][0];
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(k, _)| k != j)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn invariant_factors(m: &[Vec<i64>], cols: usize) -> Vec<u64> {
    let rows = m.len();
    let mut divisors = vec![1i128];
    for k in 1..=rows.min(cols) {
        let mut d = 0;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<i128>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| m[r][c] as i128).collect())
                    .collect();
                d = gcd(d, det(&minor));
            }
        }
        if d == 0 {
            break;
        }
        divisors.push(d);
    }
    divisors.windows(2).map(|w| (w[1] / w[0]) as u64).collect()
}

proptest! {
    #[test]
    fn smith_matches_determinantal_divisors(
        (rows, cols, entries) in (1..=4usize, 1..=4usize).prop_flat_map(|(r, c)| {
            (Just(r), Just(c), prop::collection::vec(-6i64..=6, r * c))
        })
    ) {
        let m: Vec<Vec<i64>> = entries.chunks(cols).map(<[i64]>::to_vec).collect();
        prop_assert_eq!(m.len(), rows);
        prop_assert_eq!(smith_diagonal(m.clone(), cols), invariant_factors(&m, cols));
    }
}

// ---------------------------------------------------------------------------
// Hurwitz moves.

fn move_spec(len: usize) -> impl Strategy<Value = MoveSpec> {
    (1..len.max(2), any::<bool>())
        .prop_map(|(i, l)| MoveSpec::new(i, if l { Direction::Left } else { Direction::Right }))
}

fn moved_corpus() -> impl Strategy<Value = (CuspidalFactorization, Vec<MoveSpec>, BraidWord)> {
    prop::sample::select(vec![0usize, 1, 2, 3, 4]).prop_flat_map(|k| {
        let f = corpus()[k].1.clone();
        let n = f.strands();
        let len = f.len();
        let letter = (1..n as i32, any::<bool>()).prop_map(|(i, s)| if s { i } else { -i });
        (
            Just(f),
            prop::collection::vec(move_spec(len), 0..8),
            prop::collection::vec(letter, 0..4).prop_map(move |ls| word(n, &ls)),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn moves_preserve_invariants((f, moves, z) in moved_corpus()) {
        prop_assume!(f.len() >= 2 || moves.is_empty());
        let g = conjugate_all(&apply_moves(&f, &moves).unwrap(), &z).unwrap();
        prop_assert!(g.verify_full_twist());
        prop_assert_eq!(g.singularity_counts(), f.singularity_counts());
        prop_assert!(g.product().equals(&f.product()).unwrap());
        if f.len() <= 6 {
            prop_assert_eq!(fingerprint(&g), fingerprint(&f));
        }
        prop_assert_eq!(
            abelianization(&presentation(&g).unwrap()),
            abelianization(&presentation(&f).unwrap())
        );
    }

    #[test]
    fn left_and_right_are_inverse((f, moves, _z) in moved_corpus(), i in any::<prop::sample::Index>()) {
        prop_assume!(f.len() >= 2);
        let g = apply_moves(&f, &moves).unwrap();
        let m = MoveSpec::new(1 + i.index(g.len() - 1), Direction::Left);
        let back = apply_move(&apply_move(&g, m).unwrap(), m.inverse()).unwrap();
        prop_assert_eq!(canonical_key(&back), canonical_key(&g));
        let back = apply_move(&apply_move(&g, m.inverse()).unwrap(), m).unwrap();
        prop_assert_eq!(canonical_key(&back), canonical_key(&g));
    }

    #[test]
    fn moves_satisfy_the_braid_relation((f, moves, _z) in moved_corpus(), i in any::<prop::sample::Index>()) {
        prop_assume!(f.len() >= 3);
        let g = apply_moves(&f, &moves).unwrap();
        let i = 1 + i.index(g.len() - 2);
        let a = MoveSpec::new(i, Direction::Left);
        let b = MoveSpec::new(i + 1, Direction::Left);
        let aba = apply_moves(&g, &[a, b, a]).unwrap();
        let bab = apply_moves(&g, &[b, a, b]).unwrap();
        prop_assert_eq!(canonical_key(&aba), canonical_key(&bab));
    }
}

#[test]
fn quotient_orbits_by_hand() {
    let t = |p, q| Permutation::transposition(3, p, q).unwrap();
    let orbit = orbit_quotient(&[t(1, 2), t(1, 3)], OrbitLimits::default()).unwrap();
    let by_hand: BTreeSet<Vec<Permutation>> = [
        vec![t(1, 2), t(1, 3)],
        vec![t(2, 3), t(1, 2)],
        vec![t(1, 3), t(2, 3)],
    ]
    .into_iter()
    .collect();
    assert_eq!(orbit, by_hand);
    assert_eq!(
        orbit_quotient(&[t(1, 2), t(1, 2)], OrbitLimits::default())
            .unwrap()
            .len(),
        1
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn scrambled_pairs_are_found(
        k in prop::sample::select(vec![2usize, 3]),
        moves in prop::collection::vec(move_spec(4), 5),
        gen in 1..3i32,
        sign in any::<bool>(),
    ) {
        let f = if k == 2 { cuspidal_cubic() } else { smooth(3) };
        let z = word(3, &[if sign { gen } else { -gen }]);
        let g = conjugate_all(&apply_moves(&f, &moves).unwrap(), &z).unwrap().normalized();
        match equivalent(&f, &g, SearchConfig::default()).unwrap() {
            EquivalenceVerdict::Equivalent(w) => prop_assert!(w.verifies(&f, &g)),
            other => prop_assert!(false, "expected a witness, got {:?}", other),
        }
    }
}

#[test]
fn distinguished_by_counts() {
    let verdict = equivalent(&smooth(3), &cuspidal_cubic(), SearchConfig::default()).unwrap();
    assert!(
        matches!(verdict, EquivalenceVerdict::Distinguished(inv) if inv.name() == "rho-counts")
    );
}

// ---------------------------------------------------------------------------
// Presentations.

#[test]
fn abelianizations() {
    let cyclic = |f: &CuspidalFactorization, k| {
        let econ = abelianization(&presentation(f).unwrap());
        let full = abelianization(&presentation_with(f, RelationMode::Full).unwrap());
        assert_eq!(econ, full);
        econ.is_cyclic_of_order(k)
    };
    assert!(cyclic(&conic(), 2));
    assert!(cyclic(&cuspidal_cubic(), 3));
    assert!(cyclic(&smooth(3), 3));
    assert!(cyclic(&smooth(4), 4));
    assert!(cyclic(&smooth(6), 6));
    let nodal = abelianization(&presentation(&node_pair()).unwrap());
    assert_eq!((nodal.torsion.len(), nodal.free_rank), (0, 1));
}

#[test]
fn simplification_is_stable() {
    for (name, f) in corpus() {
        for mode in [RelationMode::Economical, RelationMode::Full] {
            let p = presentation_with(&f, mode).unwrap();
            let s = simplify(&p);
            assert_eq!(abelianization(&s), abelianization(&p), "{name}");
            assert_eq!(simplify(&s), s, "{name}");
            assert!(s.generators() <= p.generators());
        }
    }
}

#[test]
fn class_counts_survive_moves() {
    let f = smooth(4);
    let g = conjugate_all(
        &apply_moves(
            &f,
            &[
                MoveSpec::new(3, Direction::Left),
                MoveSpec::new(7, Direction::Right),
                MoveSpec::new(1, Direction::Left),
            ],
        )
        .unwrap(),
        &word(4, &[2, -3, 1]),
    )
    .unwrap();
    for n in 2..=4 {
        let count = |f| {
            enumerate_reps(f, n, EnumerationLimits::default())
                .unwrap()
                .classes
                .len()
        };
        assert_eq!(count(&f), count(&g), "N = {n}");
    }
}

// ---------------------------------------------------------------------------
// Threshold.

proptest! {
    #[test]
    fn threshold_is_monotone(d in 1u64..40, g in 0u64..60, c in 0u64..200, n in 1u64..60) {
        let cert = ChisiniCertificate::new(d, g, c);
        if cert.guaranteed(n) {
            prop_assert!(cert.guaranteed(n + 1));
        }
        if let Some(t) = cert.threshold {
            // N > t, cross-multiplied in integers
            let lhs = n as i128 * cert.denominator();
            prop_assert_eq!(cert.guaranteed(n), lhs > 2 * (3 * d as i128 + 2 * g as i128 - 2));
            prop_assert_eq!(*t.numer() * cert.denominator(), 2 * (3 * d as i128 + 2 * g as i128 - 2) * *t.denom());
        }
    }
}
