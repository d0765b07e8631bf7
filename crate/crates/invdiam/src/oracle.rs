//! Independent re-checks used when validating certificates. These share no
//! search code with the core solvers.

use invdiam_core::assignment::{verify, Assignment};
use invdiam_core::gf2::Gf2Vector;
use invdiam_core::graph::{Graph, Label};
use invdiam_core::reducibility::{Configuration, Set3};

/// Plain backtracking in vertex-index order over all `2^t` vectors, checking
/// each edge to an earlier vertex. Returns a valid assignment or `None`.
pub fn plain_solve(g: &Graph, label: &Label, t: usize) -> Option<Vec<u32>> {
    let n = g.vertex_count();
    let mut f = vec![0u32; n];
    fn go(g: &Graph, label: &Label, t: usize, v: usize, f: &mut Vec<u32>) -> bool {
        if v == f.len() {
            return true;
        }
        for x in 0u32..1 << t {
            let ok = g
                .incident(v)
                .filter(|&(w, _)| w < v)
                .all(|(w, e)| ((x & f[w]).count_ones() & 1 == 1) == label.get(e));
            if ok {
                f[v] = x;
                if go(g, label, t, v + 1, f) {
                    return true;
                }
            }
        }
        false
    }
    go(g, label, t, 0, &mut f).then_some(f)
}

/// Tries every assignment of `H` and every boundary choice from `sets`,
/// validating each candidate with `verify`.
pub fn family_has_witness(cfg: &Configuration, label: &Label, sets: &[Set3]) -> bool {
    let n = cfg.graph.vertex_count();
    let choices: Vec<Vec<u32>> = (0..n)
        .map(|v| match cfg.boundary.iter().position(|&b| b == v) {
            Some(p) => (0..8).filter(|&x| sets[p] >> x & 1 == 1).collect(),
            None => (0..8).collect(),
        })
        .collect();
    if choices.iter().any(|c| c.is_empty()) {
        return false;
    }
    let mut idx = vec![0usize; n];
    loop {
        let vs = (0..n)
            .map(|v| Gf2Vector::new(3, choices[v][idx[v]]).expect("three bits"))
            .collect();
        if verify(&cfg.graph, label, &Assignment::new(3, vs).expect("uniform dimension")) {
            return true;
        }
        let mut v = n;
        loop {
            if v == 0 {
                return false;
            }
            v -= 1;
            idx[v] += 1;
            if idx[v] < choices[v].len() {
                break;
            }
            idx[v] = 0;
        }
    }
}

/// True iff some choice from `sets` (four of them) has no two disjoint equal
/// pairs.
pub fn has_pair_free_selection(sets: &[Set3]) -> bool {
    let opts: Vec<Vec<u8>> = sets
        .iter()
        .map(|&s| (0..8).filter(|&x| s >> x & 1 == 1).collect())
        .collect();
    if opts.len() != 4 {
        return false;
    }
    for &a in &opts[0] {
        for &b in &opts[1] {
            for &c in &opts[2] {
                for &d in &opts[3] {
                    let q = [a, b, c, d];
                    let paired = [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)]
                        .iter()
                        .any(|&(i, j, k, l)| q[i] == q[j] && q[k] == q[l]);
                    if !paired {
                        return true;
                    }
                }
            }
        }
    }
    false
}
