//! Leveled k-tree families and checks on their vector assignments.
//!
//! `G_0` is a labelled `k`-clique. `G_i` adds, for every `k`-clique `C` of
//! `G_{i-1}` and every pattern `x ∈ F₂^k`, a new vertex joined to the `j`-th
//! vertex of `C` by an edge labelled `x_j`. A vertex added at stage `i` has
//! level `i`; a clique's level is the largest level among its vertices.
//! Labels of earlier stages never change, so one label serves the whole
//! sequence. For large `m` the family needs `2k` dimensions, which makes it a
//! treewidth-`k` graph of inversion diameter `2k`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::assignment::{verify, Assignment, Interrupt, Solver, Verdict};
use crate::gf2::{is_independent, radical_dim, Gf2Vector};
use crate::graph::{Graph, Label};

/// Largest projected vertex count [`build_family`] will construct.
pub const GROWTH_GUARD: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyError {
    ZeroCliqueSize,
    CliqueSizeTooLarge(usize),
    InitialLabel { expected: usize, found: usize },
    SizeGuard { k: usize, m: usize, projected: u64 },
    InvalidAssignment,
    DimensionContract { expected: usize, found: usize },
    UnsupportedScan(usize),
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::ZeroCliqueSize => f.write_str("clique size k must be at least 1"),
            FamilyError::CliqueSizeTooLarge(k) => write!(f, "clique size {k} is too large"),
            FamilyError::InitialLabel { expected, found } => {
                write!(f, "initial label has {found} bits, K_k has {expected} edges")
            }
            FamilyError::SizeGuard { k, m, projected } => write!(
                f,
                "family k={k}, m={m} would have {projected} vertices (guard {GROWTH_GUARD})"
            ),
            FamilyError::InvalidAssignment => f.write_str("assignment does not realise the family label"),
            FamilyError::DimensionContract { expected, found } => {
                write!(f, "probe needs dimension {expected}, assignment has {found}")
            }
            FamilyError::UnsupportedScan(k) => write!(f, "scan supports k in {{1, 2}}, got {k}"),
        }
    }
}

impl core::error::Error for FamilyError {}

/// A registered k-clique: sorted vertices and level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clique {
    pub vertices: Vec<usize>,
    pub level: usize,
    /// Vertices attached to this clique, in creation order.
    pub children: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeveledGraph {
    pub k: usize,
    pub m: usize,
    pub graph: Graph,
    pub label: Label,
    pub levels: Vec<usize>,
    /// Every k-clique in registration order; a prefix covers each earlier stage.
    pub cliques: Vec<Clique>,
    /// For non-initial vertices, the clique they were attached to.
    pub parent: Vec<Option<usize>>,
}

impl LeveledGraph {
    pub fn vertices_at_level(&self, level: usize) -> impl Iterator<Item = usize> + '_ {
        self.levels
            .iter()
            .enumerate()
            .filter(move |&(_, &l)| l == level)
            .map(|(v, _)| v)
    }
}

/// Vertex count of `G_m^(k)`, saturating.
pub fn projected_vertices(k: usize, m: usize) -> u64 {
    let (v, _) = projected_counts(k, m);
    v
}

/// (vertices, k-cliques) of `G_m^(k)`, saturating.
fn projected_counts(k: usize, m: usize) -> (u64, u64) {
    let per = 1u64.checked_shl(k as u32).unwrap_or(u64::MAX);
    let mut vertices = k as u64;
    let mut cliques = 1u64;
    for _ in 0..m {
        let added = per.saturating_mul(cliques);
        vertices = vertices.saturating_add(added);
        cliques = cliques.saturating_add(added.saturating_mul(k as u64));
    }
    (vertices, cliques)
}

/// Builds `G_m^(k)` with the given label on the initial clique.
pub fn build_family(k: usize, m: usize, initial_label: &Label) -> Result<LeveledGraph, FamilyError> {
    if k == 0 {
        return Err(FamilyError::ZeroCliqueSize);
    }
    if k > 20 {
        return Err(FamilyError::CliqueSizeTooLarge(k));
    }
    let base_edges = k * (k - 1) / 2;
    if initial_label.len() != base_edges {
        return Err(FamilyError::InitialLabel {
            expected: base_edges,
            found: initial_label.len(),
        });
    }
    let projected = projected_vertices(k, m);
    if projected > GROWTH_GUARD {
        return Err(FamilyError::SizeGuard { k, m, projected });
    }

    let base = Graph::complete(k);
    let mut edges: Vec<(usize, usize, bool)> = base
        .edges()
        .enumerate()
        .map(|(e, (u, v))| (u, v, initial_label.get(e)))
        .collect();
    let mut levels = vec![0usize; k];
    let mut parent = vec![None; k];
    let mut cliques = vec![Clique {
        vertices: (0..k).collect(),
        level: 0,
        children: Vec::new(),
    }];
    for stage in 1..=m {
        let snapshot = cliques.len();
        for c in 0..snapshot {
            for pattern in 0u32..(1 << k) {
                let u = levels.len();
                levels.push(stage);
                parent.push(Some(c));
                cliques[c].children.push(u);
                let members = cliques[c].vertices.clone();
                for (j, &v) in members.iter().enumerate() {
                    edges.push((v, u, pattern >> j & 1 == 1));
                }
                // new k-cliques: u together with each (k-1)-subset of the parent
                for skip in 0..k {
                    let mut vs: Vec<usize> = members
                        .iter()
                        .enumerate()
                        .filter(|&(j, _)| j != skip)
                        .map(|(_, &v)| v)
                        .collect();
                    vs.push(u);
                    cliques.push(Clique {
                        vertices: vs,
                        level: stage,
                        children: Vec::new(),
                    });
                }
            }
        }
    }
    let graph = Graph::new(levels.len(), edges.iter().map(|&(u, v, _)| (u, v))).expect("family graph is simple");
    let mut label = Label::zeros(graph.edge_count());
    for &(u, v, b) in &edges {
        label.set(graph.edge_index(u, v).unwrap(), b);
    }
    Ok(LeveledGraph {
        k,
        m,
        graph,
        label,
        levels,
        cliques,
        parent,
    })
}

/// True iff `g` reduces to `K_k` by repeatedly deleting a vertex whose
/// neighbourhood is a `k`-clique.
pub fn is_k_tree(g: &Graph, k: usize) -> bool {
    let n = g.vertex_count();
    if n < k {
        return false;
    }
    let mut removed = vec![false; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut queue: Vec<usize> = (0..n).filter(|&v| degree[v] == k).collect();
    let mut remaining = n;
    while remaining > k {
        let Some(v) = queue.pop() else {
            return false;
        };
        if removed[v] || degree[v] != k {
            continue;
        }
        let nbrs: Vec<usize> = g.neighbors(v).filter(|&w| !removed[w]).collect();
        let clique = nbrs
            .iter()
            .enumerate()
            .all(|(i, &a)| nbrs[i + 1..].iter().all(|&b| g.has_edge(a, b)));
        if !clique {
            continue;
        }
        removed[v] = true;
        remaining -= 1;
        for w in nbrs {
            degree[w] -= 1;
            if degree[w] == k {
                queue.push(w);
            }
        }
    }
    let rest: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    rest.iter()
        .enumerate()
        .all(|(i, &a)| rest[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ProbeReport {
    /// Cases examined.
    pub checked: usize,
    /// Offending cliques as (clique index, child vertex if any).
    pub violations: Vec<(usize, Option<usize>)>,
}

impl ProbeReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn check_probe_input(lg: &LeveledGraph, f: &Assignment) -> Result<(), FamilyError> {
    let expected = 2 * lg.k - 1;
    if f.dim() != expected {
        return Err(FamilyError::DimensionContract {
            expected,
            found: f.dim(),
        });
    }
    if !verify(&lg.graph, &lg.label, f) {
        return Err(FamilyError::InvalidAssignment);
    }
    Ok(())
}

fn clique_vectors(c: &Clique, f: &Assignment) -> Vec<Gf2Vector> {
    c.vertices.iter().map(|&v| f.get(v)).collect()
}

/// Checks that every k-clique with children in the graph carries linearly
/// independent vectors under a `(2k-1)`-dimensional assignment.
pub fn probe_clique_independence(lg: &LeveledGraph, f: &Assignment) -> Result<ProbeReport, FamilyError> {
    check_probe_input(lg, f)?;
    let mut report = ProbeReport::default();
    for (ci, c) in lg.cliques.iter().enumerate() {
        if c.level + 1 > lg.m {
            continue;
        }
        report.checked += 1;
        if !is_independent(&clique_vectors(c, f)).expect("shared dimension") {
            report.violations.push((ci, None));
        }
    }
    Ok(report)
}

/// For a k-clique `C` and a child `u` one level above it, checks that
/// `C ∪ {u}` is independent or `f(u)` is the sum of the clique vectors.
pub fn probe_extension_dichotomy(lg: &LeveledGraph, f: &Assignment) -> Result<ProbeReport, FamilyError> {
    check_probe_input(lg, f)?;
    let mut report = ProbeReport::default();
    for (ci, c) in lg.cliques.iter().enumerate() {
        if c.level + 2 > lg.m {
            continue;
        }
        let vs = clique_vectors(c, f);
        let sum = vs.iter().fold(0u32, |acc, v| acc ^ v.bits());
        for &u in &c.children {
            if lg.levels[u] != c.level + 1 {
                continue;
            }
            report.checked += 1;
            let fu = f.get(u);
            let mut with_u = vs.clone();
            with_u.push(fu);
            let ok = is_independent(&with_u).expect("shared dimension") || fu.bits() == sum;
            if !ok {
                report.violations.push((ci, Some(u)));
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BadClique {
    pub vertices: Vec<usize>,
    /// `dim(V_C ∩ V_C^⊥)`.
    pub radical_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BadCliqueReport {
    /// Distinct cliques examined (all nonempty subsets of registered k-cliques).
    pub checked: usize,
    pub bad: Vec<BadClique>,
}

impl BadCliqueReport {
    pub fn largest(&self) -> usize {
        self.bad.iter().map(|b| b.vertices.len()).max().unwrap_or(0)
    }
}

/// Lists the cliques `C` (of any size `p`) with `dim(V_C ∩ V_C^⊥) >= p - 1`.
pub fn probe_bad_cliques(lg: &LeveledGraph, f: &Assignment) -> Result<BadCliqueReport, FamilyError> {
    if !verify(&lg.graph, &lg.label, f) {
        return Err(FamilyError::InvalidAssignment);
    }
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for c in &lg.cliques {
        let k = c.vertices.len();
        for mask in 1u32..(1 << k) {
            let sub: Vec<usize> = (0..k).filter(|&j| mask >> j & 1 == 1).map(|j| c.vertices[j]).collect();
            seen.insert(sub);
        }
    }
    let mut report = BadCliqueReport {
        checked: seen.len(),
        bad: Vec::new(),
    };
    for vs in seen {
        let vectors: Vec<Gf2Vector> = vs.iter().map(|&v| f.get(v)).collect();
        let r = radical_dim(&vectors).expect("shared dimension");
        if r + 1 >= vs.len() {
            report.bad.push(BadClique {
                vertices: vs,
                radical_dim: r,
            });
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScanVerdict {
    Sat(Assignment),
    Unsat,
    Timeout,
    /// Not attempted: the family exceeds the growth guard.
    Guard,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub m: usize,
    pub vertices: u64,
    pub edges: usize,
    pub verdict: ScanVerdict,
    pub nodes: u64,
}

/// Runs the solver at dimension `t` on `G_m^(k)` (all-zero initial label)
/// for `m = 0..=m_max`. `interrupt_for(m)` supplies the budget of each run.
pub fn family_min_dim_scan<I: Interrupt>(
    k: usize,
    m_max: usize,
    t: usize,
    mut interrupt_for: impl FnMut(usize) -> I,
) -> Result<Vec<ScanRow>, FamilyError> {
    if !(1..=2).contains(&k) {
        return Err(FamilyError::UnsupportedScan(k));
    }
    let initial = Label::zeros(k * (k - 1) / 2);
    let mut rows = Vec::new();
    for m in 0..=m_max {
        let projected = projected_vertices(k, m);
        if projected > GROWTH_GUARD {
            rows.push(ScanRow {
                m,
                vertices: projected,
                edges: 0,
                verdict: ScanVerdict::Guard,
                nodes: 0,
            });
            continue;
        }
        let lg = build_family(k, m, &initial)?;
        let mut interrupt = interrupt_for(m);
        let outcome = Solver::new(&lg.graph)
            .solve_with(&lg.label, t, &mut interrupt)
            .map_err(|_| FamilyError::DimensionContract { expected: 32, found: t })?;
        rows.push(ScanRow {
            m,
            vertices: lg.graph.vertex_count() as u64,
            edges: lg.graph.edge_count(),
            verdict: match outcome.verdict {
                Verdict::Sat(a) => ScanVerdict::Sat(a),
                Verdict::Unsat => ScanVerdict::Unsat,
                Verdict::Interrupted => ScanVerdict::Timeout,
            },
            nodes: outcome.nodes,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assignment::{enumerate_assignments, Unlimited};

    fn zero(k: usize) -> Label {
        Label::zeros(k * (k - 1) / 2)
    }

    #[test]
    fn base_stage_is_the_clique() {
        let l = Label::parse("101").unwrap();
        let lg = build_family(3, 0, &l).unwrap();
        assert_eq!(lg.graph, Graph::complete(3));
        assert_eq!(lg.label, l);
        assert_eq!(lg.levels, vec![0, 0, 0]);
        assert_eq!(lg.cliques.len(), 1);
    }

    #[test]
    fn small_family_sizes() {
        let lg = build_family(1, 1, &zero(1)).unwrap();
        assert_eq!((lg.graph.vertex_count(), lg.graph.edge_count()), (3, 2));
        assert_eq!(lg.label.to_text(), "01");
        let lg = build_family(2, 1, &zero(2)).unwrap();
        assert_eq!((lg.graph.vertex_count(), lg.graph.edge_count()), (6, 9));
        let lg = build_family(1, 2, &zero(1)).unwrap();
        assert_eq!((lg.graph.vertex_count(), lg.graph.edge_count()), (9, 8));
    }

    #[test]
    fn children_see_every_pattern() {
        let lg = build_family(2, 2, &zero(2)).unwrap();
        for c in &lg.cliques {
            let mut by_stage: alloc::collections::BTreeMap<usize, Vec<u32>> = Default::default();
            for &u in &c.children {
                let pat = c.vertices.iter().enumerate().fold(0u32, |acc, (j, &v)| {
                    let e = lg.graph.edge_index(u, v).unwrap();
                    acc | (lg.label.get(e) as u32) << j
                });
                by_stage.entry(lg.levels[u]).or_default().push(pat);
            }
            for pats in by_stage.values_mut() {
                pats.sort();
                assert_eq!(*pats, (0..4).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn guard_rejects_large_families() {
        assert!(matches!(
            build_family(2, 7, &zero(2)),
            Err(FamilyError::SizeGuard { .. })
        ));
        assert_eq!(projected_vertices(2, 6), 265_722);
        assert!(build_family(0, 1, &Label::zeros(0)).is_err());
        assert!(matches!(
            build_family(3, 1, &Label::zeros(2)),
            Err(FamilyError::InitialLabel { expected: 3, found: 2 })
        ));
    }

    #[test]
    fn k_tree_examples() {
        assert!(is_k_tree(&Graph::complete(3), 3));
        assert!(is_k_tree(&build_family(2, 2, &zero(2)).unwrap().graph, 2));
        assert!(!is_k_tree(&Graph::cycle(4), 1));
        assert!(is_k_tree(&Graph::path(5), 1));
        assert!(!is_k_tree(&Graph::cycle(4), 2));
        assert!(is_k_tree(&Graph::complete(4), 3));
        assert!(!is_k_tree(&Graph::complete(2), 3));
    }

    #[test]
    fn level_zero_vertex_is_nonzero_for_k1() {
        let lg = build_family(1, 1, &zero(1)).unwrap();
        for f in enumerate_assignments(&lg.graph, &lg.label, 1, 100).unwrap() {
            assert!(!f.get(0).is_zero());
            assert!(probe_clique_independence(&lg, &f).unwrap().passed());
        }
    }

    #[test]
    fn probes_reject_bad_input() {
        let lg = build_family(1, 1, &zero(1)).unwrap();
        let f = enumerate_assignments(&lg.graph, &lg.label, 1, 1).unwrap().remove(0);
        let padded = f.padded(2).unwrap();
        assert_eq!(
            probe_clique_independence(&lg, &padded),
            Err(FamilyError::DimensionContract { expected: 1, found: 2 })
        );
        let zero_f = Assignment::new(1, vec![Gf2Vector::zero(1).unwrap(); 3]).unwrap();
        assert_eq!(
            probe_extension_dichotomy(&lg, &zero_f),
            Err(FamilyError::InvalidAssignment)
        );
        assert_eq!(probe_bad_cliques(&lg, &zero_f), Err(FamilyError::InvalidAssignment));
    }

    #[test]
    fn single_vertices_are_bad() {
        let lg = build_family(2, 1, &zero(2)).unwrap();
        let f = enumerate_assignments(&lg.graph, &lg.label, 3, 1).unwrap().remove(0);
        let report = probe_bad_cliques(&lg, &f).unwrap();
        for v in 0..6 {
            assert!(report.bad.iter().any(|b| b.vertices == vec![v]));
        }
    }

    #[test]
    fn k1_scan_turns_unsat_at_level_two() {
        let rows = family_min_dim_scan(1, 2, 1, |_| Unlimited).unwrap();
        let v: Vec<_> = rows.iter().map(|r| matches!(r.verdict, ScanVerdict::Sat(_))).collect();
        assert_eq!(v, vec![true, true, false]);
        assert_eq!(rows[2].verdict, ScanVerdict::Unsat);
        assert!(family_min_dim_scan(3, 1, 5, |_| Unlimited).is_err());
    }
}
