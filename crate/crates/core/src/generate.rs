//! Seeded random graphs and labels for property checks and searches.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, Label};

/// A path or a cycle on `n` vertices (cycles need `n >= 3`), vertices shuffled.
pub fn path_or_cycle<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = perm.windows(2).map(|w| (w[0], w[1])).collect();
    if n >= 3 && rng.gen_bool(0.5) {
        edges.push((perm[n - 1], perm[0]));
    }
    Graph::new(n, edges).expect("path edges are simple")
}

/// A connected graph on `n` vertices with maximum degree at most `max_degree`
/// (at least 2): a random spanning tree grown under the degree bound, then
/// up to `extra` further random edges that respect it.
pub fn bounded_degree_connected<R: Rng>(rng: &mut R, n: usize, max_degree: usize, extra: usize) -> Graph {
    assert!(max_degree >= 2 || n <= 2, "degree bound too small to stay connected");
    let mut degree = vec![0usize; n];
    let mut edges = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let open: Vec<usize> = order[..i].iter().copied().filter(|&v| degree[v] < max_degree).collect();
        let p = *open.choose(rng).expect("a tree vertex with spare degree");
        let v = order[i];
        edges.push((p.min(v), p.max(v)));
        degree[p] += 1;
        degree[v] += 1;
    }
    for _ in 0..extra {
        let candidates: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| degree[u] < max_degree && degree[v] < max_degree && !edges.contains(&(u, v)))
            .collect();
        let Some(&(u, v)) = candidates.choose(rng) else {
            break;
        };
        edges.push((u, v));
        degree[u] += 1;
        degree[v] += 1;
    }
    Graph::new(n, edges).expect("generated edges are simple")
}

/// A 2-connected outerplanar graph: the cycle `0..n` plus `chords`
/// non-crossing chords of a random triangulation of it.
pub fn outerplanar<R: Rng>(rng: &mut R, n: usize, chords: usize) -> Graph {
    assert!(n >= 3);
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i.min((i + 1) % n), i.max((i + 1) % n))).collect();
    let mut all = Vec::new();
    triangulate(rng, &(0..n).collect::<Vec<_>>(), &mut all);
    all.shuffle(rng);
    edges.extend(all.into_iter().take(chords));
    Graph::new(n, edges).expect("outerplanar edges are simple")
}

/// Chords of a random triangulation of the polygon `poly`.
fn triangulate<R: Rng>(rng: &mut R, poly: &[usize], out: &mut Vec<(usize, usize)>) {
    let k = poly.len();
    if k < 4 {
        return;
    }
    // the triangle on the side poly[0]poly[k-1] has its apex at poly[j]
    let j = rng.gen_range(1..k - 1);
    if j > 1 {
        out.push((poly[0].min(poly[j]), poly[0].max(poly[j])));
    }
    if j < k - 2 {
        out.push((poly[j].min(poly[k - 1]), poly[j].max(poly[k - 1])));
    }
    triangulate(rng, &poly[..=j], out);
    triangulate(rng, &poly[j..], out);
}

pub fn random_label<R: Rng>(rng: &mut R, edges: usize) -> Label {
    let bits: Vec<bool> = (0..edges).map(|_| rng.gen_bool(0.5)).collect();
    Label::from_bools(&bits)
}
