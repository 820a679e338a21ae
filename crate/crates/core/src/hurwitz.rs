//! Hurwitz moves, simultaneous conjugation and the equivalence search.
//!
//! Two factorizations have the same type when one is carried to the other by
//! finitely many Hurwitz moves followed by one simultaneous conjugation.
//! No algorithm deciding this is known, so [`equivalent`] is a budgeted
//! semi-decision: it can prove equivalence with a replayable witness, prove
//! inequivalence through an invariant, or give up.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::rc::Rc;
use alloc::vec::Vec;
use core::fmt;

use crate::braid::{BraidError, BraidWord};
use crate::factorization::{CuspidalFactor, CuspidalFactorization, SingularityCounts};
use crate::garside::NormalForm;
use crate::perm::{canonical_transposition_tuple, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HurwitzError {
    #[error("move index {index} out of range for {factors} factors")]
    IndexOutOfRange { index: usize, factors: usize },
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("search budget must be positive")]
    ZeroBudget,
    #[error("tuple acts on {points} points, above the bound of {bound}")]
    TooManyPoints { points: usize, bound: usize },
    #[error("orbit exceeds {0} tuples")]
    OrbitTooLarge(usize),
    #[error("permutations in the tuple have different sizes")]
    MixedSizes,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    /// `g_i · g_{i+1} -> (g_i g_{i+1} g_i^-1) · g_i`
    Left,
    /// `g_i · g_{i+1} -> g_{i+1} · (g_{i+1}^-1 g_i g_{i+1})`
    Right,
}

impl Direction {
    pub fn inverse(self) -> Direction {
        match self {
            Direction::Left => Direction::Right,
            Direction::Right => Direction::Left,
        }
    }
}

/// A move at positions `index, index+1` (one-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MoveSpec {
    pub index: usize,
    pub direction: Direction,
}

impl MoveSpec {
    pub fn new(index: usize, direction: Direction) -> Self {
        MoveSpec { index, direction }
    }

    pub fn inverse(self) -> MoveSpec {
        MoveSpec {
            index: self.index,
            direction: self.direction.inverse(),
        }
    }
}

fn check_index(len: usize, index: usize) -> Result<(), HurwitzError> {
    if index == 0 || index >= len {
        Err(HurwitzError::IndexOutOfRange {
            index,
            factors: len,
        })
    } else {
        Ok(())
    }
}

/// The two factors that replace `(g, h)` under a move. Conjugators stay in
/// `(Q, ρ)` form: the Left image of `h` is `(Q_h · g^-1, ρ_h)`, the Right
/// image of `g` is `(Q_g · h, ρ_g)`.
fn move_pair(
    g: &CuspidalFactor,
    h: &CuspidalFactor,
    dir: Direction,
) -> (CuspidalFactor, CuspidalFactor) {
    match dir {
        Direction::Left => (h.conjugated(&g.braid().inverse()), g.clone()),
        Direction::Right => (h.clone(), g.conjugated(&h.braid())),
    }
}

pub fn apply_move(
    f: &CuspidalFactorization,
    m: MoveSpec,
) -> Result<CuspidalFactorization, HurwitzError> {
    check_index(f.len(), m.index)?;
    let p = m.index - 1;
    let mut factors = f.factors().to_vec();
    let (a, b) = move_pair(&factors[p], &factors[p + 1], m.direction);
    factors[p] = a;
    factors[p + 1] = b;
    Ok(CuspidalFactorization::from_parts(f.strands(), factors))
}

pub fn apply_moves(
    f: &CuspidalFactorization,
    moves: &[MoveSpec],
) -> Result<CuspidalFactorization, HurwitzError> {
    moves
        .iter()
        .try_fold(f.clone(), |acc, &m| apply_move(&acc, m))
}

/// Replaces every factor `g` by `z^-1 g z`; conjugators become `Q · z`.
pub fn conjugate_all(
    f: &CuspidalFactorization,
    z: &BraidWord,
) -> Result<CuspidalFactorization, HurwitzError> {
    if z.strands() != f.strands() {
        return Err(HurwitzError::StrandMismatch {
            left: f.strands(),
            right: z.strands(),
        });
    }
    let factors = f.factors().iter().map(|g| g.conjugated(z)).collect();
    Ok(CuspidalFactorization::from_parts(f.strands(), factors))
}

fn factor_key(g: &CuspidalFactor) -> Rc<[u8]> {
    let mut bytes = Vec::new();
    NormalForm::of(&g.braid()).key_bytes(&mut bytes);
    bytes.into()
}

/// Byte string identifying the factorization as a tuple of braids: each
/// factor is encoded by the normal form of `Q^-1 X_1^ρ Q`, so different
/// conjugators for the same factor give the same key.
pub fn canonical_key(f: &CuspidalFactorization) -> Vec<u8> {
    let mut out = Vec::new();
    out.extend_from_slice(&(f.strands() as u32).to_le_bytes());
    for g in f.factors() {
        out.extend_from_slice(&factor_key(g));
    }
    out
}

/// Strand permutations of the factor braids.
pub fn quotient_tuple(f: &CuspidalFactorization) -> Vec<Permutation> {
    f.factors()
        .iter()
        .map(|g| g.braid().permutation())
        .collect()
}

/// Tuples in `S_k` packed as `k` image bytes per permutation.
struct Packed {
    points: usize,
}

impl Packed {
    fn pack(&self, t: &[Permutation]) -> Vec<u8> {
        t.iter()
            .flat_map(|p| p.zero_based().iter().map(|&x| x as u8))
            .collect()
    }

    fn unpack(&self, bytes: &[u8]) -> Vec<Permutation> {
        if self.points == 0 {
            return Vec::new();
        }
        bytes
            .chunks(self.points)
            .map(|c| {
                Permutation::from_zero_based(c.iter().map(|&x| x as usize).collect())
                    .expect("packed bijection")
            })
            .collect()
    }

    /// Hurwitz move on positions `p, p+1`, on the quotient.
    fn apply(&self, t: &[u8], p: usize, dir: Direction, out: &mut Vec<u8>) {
        let k = self.points;
        out.clear();
        out.extend_from_slice(t);
        let (a, b) = (&t[p * k..(p + 1) * k], &t[(p + 1) * k..(p + 2) * k]);
        // x then y then z, as images
        let chain = |x: &[u8], y: &[u8], zinv: &[u8], dst: &mut [u8]| {
            let mut inv = [0u8; 256];
            for (i, &v) in zinv.iter().enumerate() {
                inv[v as usize] = i as u8;
            }
            for j in 0..k {
                dst[j] = inv[y[x[j] as usize] as usize];
            }
        };
        let mut first = [0u8; 256];
        match dir {
            Direction::Left => {
                chain(a, b, a, &mut first[..k]);
                out[p * k..(p + 1) * k].copy_from_slice(&first[..k]);
                out[(p + 1) * k..(p + 2) * k].copy_from_slice(a);
            }
            Direction::Right => {
                // b^-1 then a then b
                let mut binv = [0u8; 256];
                for (i, &v) in b.iter().enumerate() {
                    binv[v as usize] = i as u8;
                }
                for j in 0..k {
                    first[j] = b[a[binv[j] as usize] as usize];
                }
                out[p * k..(p + 1) * k].copy_from_slice(b);
                out[(p + 1) * k..(p + 2) * k].copy_from_slice(&first[..k]);
            }
        }
    }

    fn orbit(&self, start: Vec<u8>, len: usize, max_states: usize) -> Option<BTreeSet<Vec<u8>>> {
        let mut seen = BTreeSet::new();
        seen.insert(start.clone());
        let mut frontier = alloc::vec![start];
        let mut next = Vec::new();
        while let Some(cur) = frontier.pop() {
            for p in 0..len.saturating_sub(1) {
                for dir in [Direction::Left, Direction::Right] {
                    self.apply(&cur, p, dir, &mut next);
                    if !seen.contains(&next) {
                        if seen.len() >= max_states {
                            return None;
                        }
                        seen.insert(next.clone());
                        frontier.push(next.clone());
                    }
                }
            }
        }
        Some(seen)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitLimits {
    /// Largest `k` for tuples in `S_k`.
    pub max_points: usize,
    pub max_states: usize,
}

impl Default for OrbitLimits {
    fn default() -> Self {
        OrbitLimits {
            max_points: 8,
            max_states: 200_000,
        }
    }
}

/// The full Hurwitz orbit of a permutation tuple, both move directions.
pub fn orbit_quotient(
    t: &[Permutation],
    limits: OrbitLimits,
) -> Result<BTreeSet<Vec<Permutation>>, HurwitzError> {
    let points = t.first().map_or(0, Permutation::size);
    if t.iter().any(|p| p.size() != points) {
        return Err(HurwitzError::MixedSizes);
    }
    if points > limits.max_points.min(u8::MAX as usize) {
        return Err(HurwitzError::TooManyPoints {
            points,
            bound: limits.max_points,
        });
    }
    let packed = Packed { points };
    let orbit = packed
        .orbit(packed.pack(t), t.len(), limits.max_states)
        .ok_or(HurwitzError::OrbitTooLarge(limits.max_states))?;
    Ok(orbit.iter().map(|b| packed.unpack(b)).collect())
}

/// Summary of the Hurwitz orbit of the strand-permutation tuple, taken up to
/// simultaneous conjugation in `S_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum QuotientOrbit {
    Exact {
        size: usize,
        representative: Vec<Permutation>,
    },
    /// Orbit too large for the fingerprint bound.
    Large,
}

impl QuotientOrbit {
    /// 64-bit FNV-1a digest, for display.
    pub fn digest(&self) -> u64 {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut eat = |b: u8| {
            h ^= b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        };
        match self {
            QuotientOrbit::Large => eat(0xff),
            QuotientOrbit::Exact {
                size,
                representative,
            } => {
                for b in (*size as u64).to_le_bytes() {
                    eat(b);
                }
                for p in representative {
                    for x in p.images() {
                        eat(x as u8);
                    }
                }
            }
        }
        h
    }
}

const FINGERPRINT_ORBIT_BOUND: usize = 20_000;

fn quotient_orbit_summary(f: &CuspidalFactorization) -> QuotientOrbit {
    let t = quotient_tuple(f);
    let packed = Packed {
        points: f.strands(),
    };
    let Some(orbit) = packed.orbit(packed.pack(&t), t.len(), FINGERPRINT_ORBIT_BOUND) else {
        return QuotientOrbit::Large;
    };
    let representative = orbit
        .iter()
        .filter_map(|b| canonical_transposition_tuple(&packed.unpack(b)))
        .min()
        .expect("factor images are transpositions or trivial");
    QuotientOrbit::Exact {
        size: orbit.len(),
        representative,
    }
}

/// Invariants of the factorization type. Equal types give equal
/// fingerprints; the converse is not claimed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub strands: usize,
    pub factor_count: usize,
    pub counts: SingularityCounts,
    pub product: NormalForm,
    pub exponent_sums: Vec<i64>,
    pub quotient_orbit: QuotientOrbit,
}

/// Name of the first fingerprint field in which two factorizations differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Invariant {
    Strands,
    RhoCounts,
    FactorCount,
    ExponentSums,
    Product,
    QuotientOrbit,
}

impl Invariant {
    pub fn name(self) -> &'static str {
        match self {
            Invariant::Strands => "strands",
            Invariant::RhoCounts => "rho-counts",
            Invariant::FactorCount => "factor-count",
            Invariant::ExponentSums => "exponent-sums",
            Invariant::Product => "product",
            Invariant::QuotientOrbit => "quotient-orbit",
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Fingerprint {
    pub fn first_difference(&self, other: &Fingerprint) -> Option<Invariant> {
        if self.strands != other.strands {
            Some(Invariant::Strands)
        } else if self.counts != other.counts {
            Some(Invariant::RhoCounts)
        } else if self.factor_count != other.factor_count {
            Some(Invariant::FactorCount)
        } else if self.exponent_sums != other.exponent_sums {
            Some(Invariant::ExponentSums)
        } else if self.product != other.product {
            Some(Invariant::Product)
        } else if self.quotient_orbit != other.quotient_orbit {
            Some(Invariant::QuotientOrbit)
        } else {
            None
        }
    }
}

pub fn fingerprint(f: &CuspidalFactorization) -> Fingerprint {
    let mut exponent_sums: Vec<i64> = f
        .factor_braids()
        .iter()
        .map(BraidWord::exponent_sum)
        .collect();
    exponent_sums.sort_unstable();
    Fingerprint {
        strands: f.strands(),
        factor_count: f.len(),
        counts: f.singularity_counts(),
        product: NormalForm::of(&f.product()),
        exponent_sums,
        quotient_orbit: quotient_orbit_summary(f),
    }
}

/// Moves to apply in order, then one simultaneous conjugation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub moves: Vec<MoveSpec>,
    pub conjugator: BraidWord,
}

impl Witness {
    pub fn replay(&self, f: &CuspidalFactorization) -> Result<CuspidalFactorization, HurwitzError> {
        conjugate_all(&apply_moves(f, &self.moves)?, &self.conjugator)
    }

    /// Does replaying on `from` give exactly `to`, factor by factor?
    pub fn verifies(&self, from: &CuspidalFactorization, to: &CuspidalFactorization) -> bool {
        self.replay(from)
            .is_ok_and(|r| canonical_key(&r) == canonical_key(to))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Stop once this many states have been stored across both sides.
    pub budget: usize,
    /// Conjugators tried: every braid of word length at most this.
    pub conjugation_radius: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: 1_000_000,
            conjugation_radius: 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BudgetReport {
    pub states: usize,
    pub forward_states: usize,
    pub backward_states: usize,
    pub forward_depth: usize,
    pub backward_depth: usize,
    pub conjugators: usize,
    pub conjugation_radius: usize,
    /// Both move orbits were exhausted without meeting.
    pub orbits_exhausted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquivalenceVerdict {
    Equivalent(Witness),
    Distinguished(Invariant),
    Unknown(BudgetReport),
}

type StateKey = Vec<Rc<[u8]>>;

#[derive(Clone)]
struct Entry {
    factor: CuspidalFactor,
    key: Rc<[u8]>,
}

struct Node {
    entries: Vec<Rc<Entry>>,
    parent: Option<(usize, MoveSpec)>,
    seed: usize,
}

impl Node {
    fn key(&self) -> StateKey {
        self.entries.iter().map(|e| e.key.clone()).collect()
    }
}

#[derive(Default)]
struct Side {
    nodes: Vec<Node>,
    index: BTreeMap<StateKey, usize>,
    frontier: Vec<usize>,
    depth: usize,
}

impl Side {
    fn insert(&mut self, node: Node) -> Option<usize> {
        let key = node.key();
        if self.index.contains_key(&key) {
            return None;
        }
        let id = self.nodes.len();
        self.index.insert(key, id);
        self.nodes.push(node);
        Some(id)
    }

    /// Moves leading from the seed of `id` to `id`.
    fn path(&self, mut id: usize) -> Vec<MoveSpec> {
        let mut moves = Vec::new();
        while let Some((parent, m)) = self.nodes[id].parent {
            moves.push(m);
            id = parent;
        }
        moves.reverse();
        moves
    }
}

fn entries_of(f: &CuspidalFactorization) -> Vec<Rc<Entry>> {
    f.factors()
        .iter()
        .map(|g| {
            let g = g.free_reduced();
            Rc::new(Entry {
                key: factor_key(&g),
                factor: g,
            })
        })
        .collect()
}

fn successor(node: &Node, p: usize, dir: Direction) -> Vec<Rc<Entry>> {
    let (g, h) = (&node.entries[p].factor, &node.entries[p + 1].factor);
    let (a, b) = move_pair(g, h, dir);
    let mut entries = node.entries.clone();
    entries[p] = match dir {
        Direction::Left => Rc::new(Entry {
            key: factor_key(&a),
            factor: a,
        }),
        Direction::Right => node.entries[p + 1].clone(),
    };
    entries[p + 1] = match dir {
        Direction::Left => node.entries[p].clone(),
        Direction::Right => Rc::new(Entry {
            key: factor_key(&b),
            factor: b,
        }),
    };
    entries
}

/// Distinct braids of word length at most `radius`, shortest first.
pub fn conjugator_ball(strands: usize, radius: usize) -> Vec<BraidWord> {
    let gens: Vec<i16> = (1..strands as i16).flat_map(|i| [i, -i]).collect();
    let identity = BraidWord::from_raw(strands, Vec::new());
    let mut seen = BTreeSet::new();
    seen.insert(NormalForm::of(&identity));
    let mut ball = alloc::vec![identity];
    let mut layer_start = 0;
    for _ in 0..radius {
        let layer_end = ball.len();
        for k in layer_start..layer_end {
            for &g in &gens {
                if ball[k].letters().last() == Some(&-g) {
                    continue;
                }
                let mut letters = ball[k].letters().to_vec();
                letters.push(g);
                let w = BraidWord::from_raw(strands, letters);
                if seen.insert(NormalForm::of(&w)) {
                    ball.push(w);
                }
            }
        }
        layer_start = layer_end;
    }
    ball
}

struct Search<'a> {
    from: &'a CuspidalFactorization,
    to: &'a CuspidalFactorization,
    forward: Side,
    backward: Side,
    conjugators: Vec<BraidWord>,
    budget: usize,
}

impl Search<'_> {
    fn states(&self) -> usize {
        self.forward.nodes.len() + self.backward.nodes.len()
    }

    /// Witness for a forward node and a backward node holding the same tuple.
    fn witness(&self, fwd: usize, bwd: usize) -> Option<Witness> {
        let mut moves = self.forward.path(fwd);
        moves.extend(
            self.backward
                .path(bwd)
                .into_iter()
                .rev()
                .map(MoveSpec::inverse),
        );
        let conjugator = self.conjugators[self.backward.nodes[bwd].seed].clone();
        let w = Witness { moves, conjugator };
        w.verifies(self.from, self.to).then_some(w)
    }

    fn meet(&self, forward_side: bool, id: usize) -> Option<Witness> {
        let (mine, other) = if forward_side {
            (&self.forward, &self.backward)
        } else {
            (&self.backward, &self.forward)
        };
        let &hit = other.index.get(&mine.nodes[id].key())?;
        if forward_side {
            self.witness(id, hit)
        } else {
            self.witness(hit, id)
        }
    }

    /// Expands one BFS level of a side; stops early on a meeting or budget.
    fn expand(&mut self, forward_side: bool) -> Result<Option<Witness>, ()> {
        let frontier = {
            let side = if forward_side {
                &mut self.forward
            } else {
                &mut self.backward
            };
            side.depth += 1;
            core::mem::take(&mut side.frontier)
        };
        let mut next = Vec::new();
        for id in frontier {
            let r = if forward_side {
                &self.forward
            } else {
                &self.backward
            }
            .nodes[id]
                .entries
                .len();
            for p in 0..r - 1 {
                for dir in [Direction::Left, Direction::Right] {
                    let side = if forward_side {
                        &mut self.forward
                    } else {
                        &mut self.backward
                    };
                    let entries = successor(&side.nodes[id], p, dir);
                    let seed = side.nodes[id].seed;
                    let parent = Some((id, MoveSpec::new(p + 1, dir)));
                    let Some(new_id) = side.insert(Node {
                        entries,
                        parent,
                        seed,
                    }) else {
                        continue;
                    };
                    next.push(new_id);
                    if let Some(w) = self.meet(forward_side, new_id) {
                        return Ok(Some(w));
                    }
                    if self.states() >= self.budget {
                        return Err(());
                    }
                }
            }
        }
        let side = if forward_side {
            &mut self.forward
        } else {
            &mut self.backward
        };
        side.frontier = next;
        Ok(None)
    }

    fn report(&self, orbits_exhausted: bool) -> BudgetReport {
        BudgetReport {
            states: self.states(),
            forward_states: self.forward.nodes.len(),
            backward_states: self.backward.nodes.len(),
            forward_depth: self.forward.depth,
            backward_depth: self.backward.depth,
            conjugators: self.conjugators.len(),
            conjugation_radius: 0,
            orbits_exhausted,
        }
    }
}

/// Budgeted semi-decision of Hurwitz-and-conjugation equivalence.
///
/// Fingerprints are compared first. Otherwise a bidirectional breadth-first
/// search runs over Hurwitz moves: forward from `from`, backward from every
/// `z · to · z^-1` with `z` in the conjugator ball (plus one conjugator that
/// lines up the first factors). States are compared factor by factor by
/// normal form. A meeting yields a witness, replayed before it is returned.
pub fn equivalent(
    from: &CuspidalFactorization,
    to: &CuspidalFactorization,
    config: SearchConfig,
) -> Result<EquivalenceVerdict, HurwitzError> {
    if from.strands() != to.strands() {
        return Err(HurwitzError::StrandMismatch {
            left: from.strands(),
            right: to.strands(),
        });
    }
    if config.budget == 0 {
        return Err(HurwitzError::ZeroBudget);
    }
    if let Some(inv) = fingerprint(from).first_difference(&fingerprint(to)) {
        return Ok(EquivalenceVerdict::Distinguished(inv));
    }

    let mut conjugators = conjugator_ball(from.strands(), config.conjugation_radius);
    let (f0, t0) = (&from.factors()[0], &to.factors()[0]);
    if f0.rho() == t0.rho() {
        let align = f0
            .conjugator()
            .inverse()
            .compose(t0.conjugator())
            .map_err(|e| match e {
                BraidError::StrandMismatch { left, right } => {
                    HurwitzError::StrandMismatch { left, right }
                }
                _ => unreachable!("conjugators share the strand count"),
            })?;
        let align = align.free_reduce();
        let nf = NormalForm::of(&align);
        if !conjugators.iter().any(|z| NormalForm::of(z) == nf) {
            conjugators.push(align);
        }
    }

    let mut search = Search {
        from,
        to,
        forward: Side::default(),
        backward: Side::default(),
        conjugators,
        budget: config.budget,
    };
    let root = search
        .forward
        .insert(Node {
            entries: entries_of(from),
            parent: None,
            seed: 0,
        })
        .expect("empty side");
    search.forward.frontier.push(root);
    for k in 0..search.conjugators.len() {
        let seed = conjugate_all(to, &search.conjugators[k].inverse())?;
        if let Some(id) = search.backward.insert(Node {
            entries: entries_of(&seed),
            parent: None,
            seed: k,
        }) {
            search.backward.frontier.push(id);
            if let Some(w) = search.meet(false, id) {
                return Ok(EquivalenceVerdict::Equivalent(w));
            }
        }
    }

    loop {
        let (f_len, b_len) = (
            search.forward.frontier.len(),
            search.backward.frontier.len(),
        );
        if search.states() >= search.budget || (f_len == 0 && b_len == 0) {
            let mut report = search.report(f_len == 0 && b_len == 0);
            report.conjugation_radius = config.conjugation_radius;
            return Ok(EquivalenceVerdict::Unknown(report));
        }
        let forward_side = b_len == 0 || (f_len != 0 && f_len <= b_len);
        match search.expand(forward_side) {
            Ok(Some(w)) => return Ok(EquivalenceVerdict::Equivalent(w)),
            Ok(None) => {}
            Err(()) => {
                let mut report = search.report(false);
                report.conjugation_radius = config.conjugation_radius;
                return Ok(EquivalenceVerdict::Unknown(report));
            }
        }
    }
}
