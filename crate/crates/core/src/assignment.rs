//! Vector assignments: maps `f: V → F₂^t` with `f(u)·f(v) = π(uv)` on every
//! edge.
//!
//! Two orientations of a graph are within `t` inversions of each other exactly
//! when their difference label admits a `t`-dimensional assignment, so the
//! solver here doubles as an inversion-distance engine that scales far past
//! the BFS oracle.
//!
//! The solver assigns vertices in maximum-adjacency order. A vertex with
//! assigned neighbours `u₁..u_r` can only take values in the affine solution
//! set of `f(u_j)·x = π(u_j v)`, so candidates are produced by walking that
//! set rather than filtering all of `F₂^t`. Dead ends backjump to the most
//! recent vertex in the accumulated conflict set.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gf2::{dot_bits, Gf2Vector, LinearSystem, MAX_DIM};
use crate::graph::{Graph, Label};

/// Largest edge count for [`diameter_via_assignment`], which visits every label.
pub const DIAMETER_MAX_EDGES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AssignmentError {
    DimensionTooLarge(usize),
    LabelLength {
        expected: usize,
        found: usize,
    },
    Budget {
        edges: usize,
        limit: usize,
    },
    /// Some label needs more than `t_max` dimensions.
    Exceeds {
        t_max: usize,
        label: Label,
    },
    WrongVertexCount {
        expected: usize,
        found: usize,
    },
    MixedDimensions,
}

impl fmt::Display for AssignmentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AssignmentError::DimensionTooLarge(t) => write!(f, "dimension {t} exceeds {MAX_DIM}"),
            AssignmentError::LabelLength { expected, found } => {
                write!(f, "label has {found} bits, graph has {expected} edges")
            }
            AssignmentError::Budget { edges, limit } => {
                write!(f, "graph has {edges} edges, label-enumeration budget is {limit}")
            }
            AssignmentError::Exceeds { t_max, label } => {
                write!(f, "label {} needs more than {t_max} dimensions", label.to_text())
            }
            AssignmentError::WrongVertexCount { expected, found } => {
                write!(f, "assignment covers {found} vertices, graph has {expected}")
            }
            AssignmentError::MixedDimensions => f.write_str("assignment vectors differ in dimension"),
        }
    }
}

impl core::error::Error for AssignmentError {}

/// One vector of a common dimension per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    t: u8,
    vectors: Vec<Gf2Vector>,
}

impl fmt::Debug for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.vectors.iter().map(|v| v.to_text()))
            .finish()
    }
}

impl Assignment {
    pub fn new(t: usize, vectors: Vec<Gf2Vector>) -> Result<Self, AssignmentError> {
        if t > MAX_DIM as usize {
            return Err(AssignmentError::DimensionTooLarge(t));
        }
        if vectors.iter().any(|v| v.dim() != t) {
            return Err(AssignmentError::MixedDimensions);
        }
        Ok(Self { t: t as u8, vectors })
    }

    /// Infers the dimension from the vectors; an empty list gets dimension 0.
    pub fn from_vectors(vectors: Vec<Gf2Vector>) -> Result<Self, AssignmentError> {
        let t = vectors.first().map_or(0, |v| v.dim());
        Self::new(t, vectors)
    }

    fn from_raw(t: u8, bits: &[u32]) -> Self {
        Self {
            t,
            vectors: bits.iter().map(|&b| Gf2Vector::from_raw(t, b)).collect(),
        }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.t as usize
    }

    pub fn vectors(&self) -> &[Gf2Vector] {
        &self.vectors
    }

    #[inline]
    pub fn get(&self, v: usize) -> Gf2Vector {
        self.vectors[v]
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Appends zero coordinates; validity is preserved since dot products
    /// do not change.
    pub fn padded(&self, t: usize) -> Result<Self, AssignmentError> {
        if t < self.dim() || t > MAX_DIM as usize {
            return Err(AssignmentError::DimensionTooLarge(t));
        }
        Ok(Self {
            t: t as u8,
            vectors: self.vectors.iter().map(|v| v.padded(t).expect("pad")).collect(),
        })
    }

    /// Restriction to a vertex subset, in the given order.
    pub fn restrict(&self, keep: &[usize]) -> Self {
        Self {
            t: self.t,
            vectors: keep.iter().map(|&v| self.vectors[v]).collect(),
        }
    }
}

/// Checks `f(u)·f(v) = π(uv)` on every edge.
pub fn verify(g: &Graph, label: &Label, f: &Assignment) -> bool {
    if f.len() != g.vertex_count() || label.len() != g.edge_count() {
        return false;
    }
    g.edges()
        .enumerate()
        .all(|(e, (u, v))| dot_bits(f.vectors[u].bits(), f.vectors[v].bits()) == label.get(e))
}

/// Polled by long searches; returning true abandons the search.
pub trait Interrupt {
    fn should_stop(&mut self) -> bool;
}

/// Never interrupts.
pub struct Unlimited;

impl Interrupt for Unlimited {
    #[inline]
    fn should_stop(&mut self) -> bool {
        false
    }
}

/// Stops after a fixed number of polls (the solver polls once per 1024 nodes).
pub struct PollLimit(pub u64);

impl Interrupt for PollLimit {
    fn should_stop(&mut self) -> bool {
        if self.0 == 0 {
            return true;
        }
        self.0 -= 1;
        false
    }
}

impl<F: FnMut() -> bool> Interrupt for F {
    fn should_stop(&mut self) -> bool {
        self()
    }
}

const POLL_EVERY: u64 = 1024;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Sat(Assignment),
    Unsat,
    Interrupted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub verdict: Verdict,
    /// Values tried across all vertices.
    pub nodes: u64,
}

/// Per-position search state.
#[derive(Clone, Copy)]
struct Slot {
    particular: u32,
    basis: [u32; 32],
    nullity: u8,
    next: u64,
    total: u64,
}

impl Slot {
    const EMPTY: Slot = Slot {
        particular: 0,
        basis: [0; 32],
        nullity: 0,
        next: 0,
        total: 0,
    };

    #[inline]
    fn value(&self, index: u64) -> u32 {
        let mut x = self.particular;
        let mut i = index;
        let mut j = 0;
        while i != 0 {
            if i & 1 == 1 {
                x ^= self.basis[j];
            }
            i >>= 1;
            j += 1;
        }
        x
    }
}

/// A search plan for one graph, reusable across labels and dimensions.
#[derive(Clone, Debug)]
pub struct Solver<'g> {
    graph: &'g Graph,
    order: Vec<usize>,
    // per position: (position of earlier neighbour, edge index)
    back: Vec<Vec<(u32, u32)>>,
}

impl<'g> Solver<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        let order = max_adjacency_order(graph);
        let mut pos = vec![0usize; graph.vertex_count()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let mut b: Vec<(u32, u32)> = graph
                    .incident(v)
                    .filter(|&(w, _)| pos[w] < i)
                    .map(|(w, e)| (pos[w] as u32, e as u32))
                    .collect();
                b.sort_unstable();
                b
            })
            .collect();
        Self { graph, order, back }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// Vertex visiting order.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    fn check(&self, label: &Label, t: usize) -> Result<(), AssignmentError> {
        if t > MAX_DIM as usize {
            return Err(AssignmentError::DimensionTooLarge(t));
        }
        if label.len() != self.graph.edge_count() {
            return Err(AssignmentError::LabelLength {
                expected: self.graph.edge_count(),
                found: label.len(),
            });
        }
        Ok(())
    }

    /// Opens position `i`: computes its candidate set from assigned neighbours.
    #[inline]
    fn open(&self, i: usize, t: u8, label: &Label, vals: &[u32], slot: &mut Slot) {
        let mut sys = LinearSystem::new(t);
        slot.next = 0;
        for &(p, e) in &self.back[i] {
            if !sys.push(vals[p as usize], label.get(e as usize)) {
                slot.total = 0;
                return;
            }
        }
        slot.particular = sys.particular_bits();
        slot.nullity = sys.nullspace_bits(&mut slot.basis) as u8;
        slot.total = 1u64 << slot.nullity;
    }

    /// Complete search for a `t`-dimensional assignment.
    pub fn solve(&self, label: &Label, t: usize) -> Result<Option<Assignment>, AssignmentError> {
        match self.solve_with(label, t, &mut Unlimited)?.verdict {
            Verdict::Sat(a) => Ok(Some(a)),
            Verdict::Unsat => Ok(None),
            Verdict::Interrupted => unreachable!("unlimited search interrupted"),
        }
    }

    /// Like [`Solver::solve`] but polls `interrupt` and reports the node count.
    pub fn solve_with(
        &self,
        label: &Label,
        t: usize,
        interrupt: &mut dyn Interrupt,
    ) -> Result<SolveOutcome, AssignmentError> {
        self.check(label, t)?;
        let n = self.order.len();
        let t8 = t as u8;
        let mut vals = vec![0u32; n];
        if n == 0 {
            return Ok(SolveOutcome {
                verdict: Verdict::Sat(Assignment::from_raw(t8, &[])),
                nodes: 0,
            });
        }
        let mut slots = vec![Slot::EMPTY; n];
        // conflict sets hold earlier positions, kept sorted
        let mut conflicts: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut nodes = 0u64;
        let mut i = 0usize;
        self.open(0, t8, label, &vals, &mut slots[0]);
        loop {
            let s = &mut slots[i];
            if s.next < s.total {
                vals[i] = s.value(s.next);
                s.next += 1;
                nodes += 1;
                if nodes.is_multiple_of(POLL_EVERY) && interrupt.should_stop() {
                    return Ok(SolveOutcome {
                        verdict: Verdict::Interrupted,
                        nodes,
                    });
                }
                i += 1;
                if i == n {
                    let mut bits = vec![0u32; n];
                    for (p, &v) in self.order.iter().enumerate() {
                        bits[v] = vals[p];
                    }
                    return Ok(SolveOutcome {
                        verdict: Verdict::Sat(Assignment::from_raw(t8, &bits)),
                        nodes,
                    });
                }
                conflicts[i].clear();
                self.open(i, t8, label, &vals, &mut slots[i]);
                continue;
            }
            // every value of position i failed
            let mut cs = core::mem::take(&mut conflicts[i]);
            cs.extend(self.back[i].iter().map(|&(p, _)| p));
            cs.sort_unstable();
            cs.dedup();
            let Some(h) = cs.pop() else {
                return Ok(SolveOutcome {
                    verdict: Verdict::Unsat,
                    nodes,
                });
            };
            let h = h as usize;
            let target = &mut conflicts[h];
            target.extend_from_slice(&cs);
            target.sort_unstable();
            target.dedup();
            for c in &mut conflicts[h + 1..=i] {
                c.clear();
            }
            i = h;
        }
    }

    /// All valid assignments in search order, stopping after `cap`.
    pub fn enumerate(&self, label: &Label, t: usize, cap: usize) -> Result<Vec<Assignment>, AssignmentError> {
        self.check(label, t)?;
        let n = self.order.len();
        let t8 = t as u8;
        let mut out = Vec::new();
        if cap == 0 {
            return Ok(out);
        }
        if n == 0 {
            out.push(Assignment::from_raw(t8, &[]));
            return Ok(out);
        }
        let mut vals = vec![0u32; n];
        let mut slots = vec![Slot::EMPTY; n];
        let mut i = 0usize;
        self.open(0, t8, label, &vals, &mut slots[0]);
        loop {
            let s = &mut slots[i];
            if s.next < s.total {
                vals[i] = s.value(s.next);
                s.next += 1;
                if i + 1 == n {
                    let mut bits = vec![0u32; n];
                    for (p, &v) in self.order.iter().enumerate() {
                        bits[v] = vals[p];
                    }
                    out.push(Assignment::from_raw(t8, &bits));
                    if out.len() >= cap {
                        return Ok(out);
                    }
                    continue;
                }
                i += 1;
                self.open(i, t8, label, &vals, &mut slots[i]);
                continue;
            }
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
        }
    }

    /// Smallest `t <= t_max` admitting an assignment.
    pub fn min_dim(&self, label: &Label, t_max: usize) -> Result<MinDim, AssignmentError> {
        self.min_dim_from(label, 0, t_max)
    }

    /// Smallest `t` in `start..=t_max`; the caller vouches that no smaller
    /// dimension works.
    fn min_dim_from(&self, label: &Label, start: usize, t_max: usize) -> Result<MinDim, AssignmentError> {
        self.check(label, t_max.min(MAX_DIM as usize))?;
        if t_max > MAX_DIM as usize {
            return Err(AssignmentError::DimensionTooLarge(t_max));
        }
        for t in start..=t_max {
            if let Some(a) = self.solve(label, t)? {
                return Ok(MinDim::Found { dim: t, witness: a });
            }
        }
        Ok(MinDim::Exceeds { t_max })
    }
}

/// Maximum-adjacency order: repeatedly take the unvisited vertex with the most
/// visited neighbours, ties to the smallest index.
pub fn max_adjacency_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    // buckets[w] holds candidates of weight w (lazily cleaned)
    let mut buckets: Vec<alloc::collections::BTreeSet<usize>> = vec![(0..n).collect()];
    let mut top = 0usize;
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        while buckets[top].is_empty() {
            top -= 1;
        }
        let v = *buckets[top].iter().next().unwrap();
        buckets[top].remove(&v);
        done[v] = true;
        order.push(v);
        for w in g.neighbors(v) {
            if done[w] {
                continue;
            }
            buckets[weight[w]].remove(&w);
            weight[w] += 1;
            if buckets.len() <= weight[w] {
                buckets.push(Default::default());
            }
            buckets[weight[w]].insert(w);
            top = top.max(weight[w]);
        }
    }
    order
}

/// Result of a minimum-dimension search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinDim {
    Found { dim: usize, witness: Assignment },
    Exceeds { t_max: usize },
}

impl MinDim {
    pub fn dim(&self) -> Option<usize> {
        match self {
            MinDim::Found { dim, .. } => Some(*dim),
            MinDim::Exceeds { .. } => None,
        }
    }

    /// Orders "exceeds" above every found dimension.
    fn rank(&self) -> usize {
        match self {
            MinDim::Found { dim, .. } => *dim,
            MinDim::Exceeds { t_max } => t_max + 1,
        }
    }
}

pub fn solve(g: &Graph, label: &Label, t: usize) -> Result<Option<Assignment>, AssignmentError> {
    Solver::new(g).solve(label, t)
}

pub fn enumerate_assignments(
    g: &Graph,
    label: &Label,
    t: usize,
    cap: usize,
) -> Result<Vec<Assignment>, AssignmentError> {
    Solver::new(g).enumerate(label, t, cap)
}

pub fn min_dim(g: &Graph, label: &Label, t_max: usize) -> Result<MinDim, AssignmentError> {
    Solver::new(g).min_dim(label, t_max)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diameter {
    pub diameter: usize,
    /// First label, in Gray-code order, whose minimum dimension is the diameter.
    pub hardest_label: Label,
    pub witness: Assignment,
    /// Labels that needed a fresh solver call.
    pub solver_calls: u64,
}

/// `max_π min_dim(G, π)`, which equals the inversion diameter.
///
/// Labels are visited in Gray-code order. The current witness is checked
/// against each new label first (only one edge changed); the solver runs only
/// when that fails, and then only at the current maximum to decide whether the
/// label raises it.
pub fn diameter_via_assignment(g: &Graph, t_max: usize) -> Result<Diameter, AssignmentError> {
    let m = g.edge_count();
    if m > DIAMETER_MAX_EDGES {
        return Err(AssignmentError::Budget {
            edges: m,
            limit: DIAMETER_MAX_EDGES,
        });
    }
    if t_max > MAX_DIM as usize {
        return Err(AssignmentError::DimensionTooLarge(t_max));
    }
    let solver = Solver::new(g);
    let mut label = Label::zeros(m);
    let mut best = 0usize;
    let mut hardest = label.clone();
    let mut witness = Assignment::from_raw(0, &vec![0; g.vertex_count()]);
    let mut hardest_witness = witness.clone();
    let mut calls = 0u64;
    for k in 1u64..(1u64 << m) {
        let e = k.trailing_zeros() as usize;
        label.flip(e);
        let (u, v) = g.edge(e);
        if dot_bits(witness.get(u).bits(), witness.get(v).bits()) == label.get(e) {
            continue;
        }
        calls += 1;
        if let Some(a) = solver.solve(&label, best)? {
            witness = a;
            continue;
        }
        match solver.min_dim_from(&label, best + 1, t_max)? {
            MinDim::Found { dim, witness: w } => {
                best = dim;
                hardest = label.clone();
                hardest_witness = w.clone();
                witness = w;
            }
            MinDim::Exceeds { t_max } => {
                return Err(AssignmentError::Exceeds { t_max, label });
            }
        }
    }
    Ok(Diameter {
        diameter: best,
        hardest_label: hardest,
        witness: hardest_witness,
        solver_calls: calls,
    })
}

/// Lexicographic order on bit strings written edge 0 first.
pub fn label_lex_cmp(a: &Label, b: &Label) -> Ordering {
    for e in 0..a.len().min(b.len()) {
        match (a.get(e), b.get(e)) {
            (false, true) => return Ordering::Less,
            (true, false) => return Ordering::Greater,
            _ => {}
        }
    }
    a.len().cmp(&b.len())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HardLabel {
    pub label: Label,
    pub min_dim: MinDim,
    pub exhaustive: bool,
    /// Labels evaluated.
    pub evaluated: u64,
}

/// Searches for a label of maximum minimum dimension.
///
/// When `2^|E| <= budget` every label is visited in lexicographic order and
/// the first maximiser is returned. Otherwise a seeded hill climb over single
/// bit flips runs for `budget` evaluations, preferring labels whose
/// assignments are harder to find at the current dimension, with restarts on
/// stagnation; ties go to the lexicographically least label seen.
pub fn hardest_label(g: &Graph, t_max: usize, budget: u64, seed: u64) -> Result<HardLabel, AssignmentError> {
    let m = g.edge_count();
    if t_max > MAX_DIM as usize {
        return Err(AssignmentError::DimensionTooLarge(t_max));
    }
    let solver = Solver::new(g);
    let zero = Label::zeros(m);
    if m == 0 {
        return Ok(HardLabel {
            min_dim: solver.min_dim(&zero, t_max)?,
            label: zero,
            exhaustive: true,
            evaluated: 1,
        });
    }
    if m < 64 && (1u64 << m) <= budget {
        let mut best = solver.min_dim(&zero, t_max)?;
        let mut best_label = zero;
        let mut evaluated = 1u64;
        for x in 1u64..(1u64 << m) {
            if matches!(best, MinDim::Exceeds { .. }) {
                break;
            }
            let label = Label::from_bools(&(0..m).map(|e| x >> (m - 1 - e) & 1 == 1).collect::<Vec<_>>());
            evaluated += 1;
            let cur = best.rank();
            if solver.solve(&label, cur)?.is_some() {
                continue;
            }
            best = solver.min_dim_from(&label, cur + 1, t_max)?;
            best_label = label;
        }
        return Ok(HardLabel {
            label: best_label,
            min_dim: best,
            exhaustive: true,
            evaluated,
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random_label = |rng: &mut ChaCha8Rng| Label::from_bools(&(0..m).map(|_| rng.gen::<bool>()).collect::<Vec<_>>());
    // score: (min dimension rank, solver nodes at that dimension)
    let score = |label: &Label| -> Result<(MinDim, u64), AssignmentError> {
        let md = solver.min_dim(label, t_max)?;
        let nodes = match &md {
            MinDim::Found { dim, .. } => solver.solve_with(label, *dim, &mut Unlimited)?.nodes,
            MinDim::Exceeds { .. } => u64::MAX,
        };
        Ok((md, nodes))
    };
    let mut evaluated = 0u64;
    let mut global: Option<(Label, MinDim)> = None;
    let stall_limit = 4 * m as u64 + 16;
    'restarts: while evaluated < budget {
        let mut cur = random_label(&mut rng);
        let (mut cur_md, mut cur_nodes) = score(&cur)?;
        evaluated += 1;
        let mut stall = 0u64;
        loop {
            let better = match &global {
                None => true,
                Some((l, md)) => {
                    cur_md.rank() > md.rank()
                        || (cur_md.rank() == md.rank() && label_lex_cmp(&cur, l) == Ordering::Less)
                }
            };
            if better {
                global = Some((cur.clone(), cur_md.clone()));
            }
            if matches!(cur_md, MinDim::Exceeds { .. }) || evaluated >= budget {
                break 'restarts;
            }
            if stall >= stall_limit {
                continue 'restarts;
            }
            let mut cand = cur.clone();
            cand.flip(rng.gen_range(0..m));
            let (md, nodes) = score(&cand)?;
            evaluated += 1;
            let key = (md.rank(), nodes);
            if key > (cur_md.rank(), cur_nodes) {
                stall = 0;
            } else {
                stall += 1;
            }
            if key >= (cur_md.rank(), cur_nodes) {
                cur = cand;
                cur_md = md;
                cur_nodes = nodes;
            }
        }
    }
    let (label, min_dim) = global.expect("at least one evaluation");
    Ok(HardLabel {
        label,
        min_dim,
        exhaustive: false,
        evaluated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn lab(s: &str) -> Label {
        Label::parse(s).unwrap()
    }

    fn vecs(t: usize, s: &[&str]) -> Assignment {
        Assignment::new(t, s.iter().map(|x| x.parse().unwrap()).collect()).unwrap()
    }

    #[test]
    fn verify_examples() {
        let k2 = Graph::complete(2);
        assert!(verify(&k2, &lab("1"), &vecs(1, &["1", "1"])));
        assert!(!verify(&k2, &lab("1"), &vecs(1, &["1", "0"])));
        let k3 = Graph::complete(3);
        assert!(verify(&k3, &lab("111"), &vecs(1, &["1", "1", "1"])));
        assert!(!verify(&k3, &lab("111"), &vecs(1, &["1", "1"])));
    }

    #[test]
    fn solve_examples() {
        let k4 = Graph::complete(4);
        let a = solve(&k4, &Label::zeros(6), 0).unwrap().unwrap();
        assert_eq!(a.dim(), 0);
        assert!(verify(&k4, &Label::zeros(6), &a));

        let k2 = Graph::complete(2);
        assert_eq!(solve(&k2, &lab("1"), 1).unwrap().unwrap(), vecs(1, &["1", "1"]));

        // C4 edges 01, 03, 12, 23; 01 and 23 are opposite
        let c4 = Graph::cycle(4);
        let pi = lab("1001");
        assert_eq!(solve(&c4, &pi, 1).unwrap(), None);
        let a = solve(&c4, &pi, 2).unwrap().unwrap();
        assert!(verify(&c4, &pi, &a));
        assert!(verify(&c4, &pi, &vecs(2, &["10", "10", "01", "01"])));
    }

    #[test]
    fn enumerate_examples() {
        let k2 = Graph::complete(2);
        let mut all: Vec<_> = enumerate_assignments(&k2, &lab("0"), 1, 100)
            .unwrap()
            .into_iter()
            .map(|a| (a.get(0).to_text(), a.get(1).to_text()))
            .collect();
        all.sort();
        let expected: Vec<_> = [("0", "0"), ("0", "1"), ("1", "0")]
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        assert_eq!(all, expected);
        assert_eq!(
            enumerate_assignments(&k2, &lab("1"), 1, 100).unwrap(),
            vec![vecs(1, &["1", "1"])]
        );
        let full = enumerate_assignments(&Graph::cycle(4), &lab("1001"), 2, 1000).unwrap();
        let head = enumerate_assignments(&Graph::cycle(4), &lab("1001"), 2, 1).unwrap();
        assert_eq!(head[..], full[..1]);
    }

    #[test]
    fn min_dim_examples() {
        let c4 = Graph::cycle(4);
        assert_eq!(min_dim(&c4, &Label::zeros(4), 4).unwrap().dim(), Some(0));
        assert_eq!(min_dim(&c4, &lab("1001"), 4).unwrap().dim(), Some(2));
        assert_eq!(min_dim(&c4, &lab("1001"), 1).unwrap(), MinDim::Exceeds { t_max: 1 });
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(diameter_via_assignment(&Graph::complete(2), 4).unwrap().diameter, 1);
        let d = diameter_via_assignment(&Graph::complete(4), 6).unwrap();
        assert_eq!(d.diameter, 3);
        assert_eq!(
            min_dim(&Graph::complete(4), &d.hardest_label, 6).unwrap().dim(),
            Some(3)
        );
        assert!(verify(&Graph::complete(4), &d.hardest_label, &d.witness));
        assert_eq!(diameter_via_assignment(&Graph::path(3), 4).unwrap().diameter, 1);
        assert!(matches!(
            diameter_via_assignment(&Graph::complete(4), 2),
            Err(AssignmentError::Exceeds { t_max: 2, .. })
        ));
        assert!(matches!(
            diameter_via_assignment(&Graph::complete(8), 8),
            Err(AssignmentError::Budget { edges: 28, .. })
        ));
    }

    #[test]
    fn hardest_label_examples() {
        let h = hardest_label(&Graph::complete(4), 6, 1 << 10, 0).unwrap();
        assert!(h.exhaustive);
        assert_eq!(h.min_dim.dim(), Some(3));
        let h = hardest_label(&Graph::edgeless(3), 4, 16, 0).unwrap();
        assert_eq!(h.min_dim.dim(), Some(0));
        assert!(h.label.is_empty());
        let h = hardest_label(&Graph::cycle(4), 4, 16, 0).unwrap();
        assert_eq!(h.min_dim.dim(), Some(2));
        // lexicographically least label of C4 with min_dim 2
        assert_eq!(h.label.to_text(), "0110");
    }

    #[test]
    fn hill_climb_is_seed_deterministic() {
        let g = Graph::complete(5);
        let a = hardest_label(&g, 8, 60, 7).unwrap();
        let b = hardest_label(&g, 8, 60, 7).unwrap();
        assert!(!a.exhaustive);
        assert_eq!(a, b);
        assert!(a.evaluated <= 60);
    }

    #[test]
    fn solver_reports_interruption() {
        let g = Graph::complete(6);
        let pi = Label::from_word(15, 0b101_1010_0110_1001);
        let out = Solver::new(&g).solve_with(&pi, 6, &mut PollLimit(0)).unwrap();
        // a tiny search may finish before the first poll
        assert!(matches!(out.verdict, Verdict::Interrupted | Verdict::Sat(_)));
    }

    #[test]
    fn max_adjacency_order_is_a_permutation() {
        let g = Graph::new(6, [(0, 3), (3, 4), (4, 1), (1, 5), (2, 5)]).unwrap();
        let mut o = max_adjacency_order(&g);
        assert_eq!(o, vec![0, 3, 4, 1, 5, 2]);
        o.sort();
        assert_eq!(o, (0..6).collect::<Vec<_>>());
    }
}
