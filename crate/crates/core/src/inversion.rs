//! Inversions of orientations and an exact breadth-first search over the
//! inversion graph.
//!
//! Orientations of a graph with `m` edges are `m`-bit flip words. Inverting a
//! vertex set `X` XORs the word with the indicator of the edges inside `X`, so
//! the inversion graph is a Cayley graph of `F₂^m` and every distance can be
//! measured from the all-zero orientation.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, Label, Orientation};

/// Largest edge count accepted by [`bfs_distance`] and [`distance_table`].
pub const BFS_MAX_EDGES: usize = 20;
/// Largest edge count accepted by [`bfs_diameter`].
pub const DIAMETER_MAX_EDGES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InversionError {
    Budget { edges: usize, limit: usize },
    GraphMismatch { left: usize, right: usize },
}

impl fmt::Display for InversionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InversionError::Budget { edges, limit } => {
                write!(f, "graph has {edges} edges, BFS budget is {limit}")
            }
            InversionError::GraphMismatch { left, right } => {
                write!(f, "orientations of different graphs ({left} vs {right} edges)")
            }
        }
    }
}

impl core::error::Error for InversionError {}

/// Reverses every arc with both ends in `x`.
pub fn invert(g: &Graph, o: &Orientation, x: &[usize]) -> Orientation {
    let mut inside = vec![false; g.vertex_count()];
    for &v in x {
        inside[v] = true;
    }
    let mut out = o.clone();
    for (e, (u, v)) in g.edges().enumerate() {
        if inside[u] && inside[v] {
            out.flip(e);
        }
    }
    out
}

/// The label that marks the edges on which two orientations disagree.
pub fn diff_label(o1: &Orientation, o2: &Orientation) -> Result<Label, InversionError> {
    o1.bits()
        .xor(o2.bits())
        .map(Label::from_bits)
        .ok_or(InversionError::GraphMismatch {
            left: o1.len(),
            right: o2.len(),
        })
}

/// Every distinct nonzero edge set `E(G[X])` over vertex sets `X`, as words.
///
/// Sweeps the non-isolated vertices in index order, keeping for each partial
/// choice of `X` only the edge word so far and the chosen vertices that still
/// have unswept neighbours, and merges equal states. This avoids walking all
/// `2^n` subsets when many of them induce the same edge set.
pub fn inversion_masks(g: &Graph) -> Result<Vec<u32>, InversionError> {
    let m = g.edge_count();
    if m > 32 {
        return Err(InversionError::Budget { edges: m, limit: 32 });
    }
    let verts: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.degree(v) > 0).collect();
    let mut pos = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in verts.iter().enumerate() {
        pos[v] = i;
    }
    // position after which a vertex no longer meets unswept neighbours
    let last: Vec<usize> = verts
        .iter()
        .map(|&v| g.neighbors(v).map(|w| pos[w]).chain([pos[v]]).max().unwrap())
        .collect();

    // (edge word, live chosen vertices as a bitset over sweep positions)
    let mut states: Vec<(u32, u64)> = vec![(0, 0)];
    let mut live_pos: Vec<usize> = Vec::new();
    for (i, &v) in verts.iter().enumerate() {
        // live vertices are tracked by slot in `live_pos` to stay within 64 bits
        let slot = match live_pos.iter().position(|&p| p == usize::MAX) {
            Some(s) => s,
            None => {
                live_pos.push(usize::MAX);
                live_pos.len() - 1
            }
        };
        assert!(slot < 64, "sweep frontier wider than 64 vertices");
        // earlier neighbours that are still live: (slot, edge)
        let back: Vec<(usize, usize)> = g
            .incident(v)
            .filter(|&(w, _)| pos[w] < i)
            .map(|(w, e)| {
                let s = live_pos.iter().position(|&p| p == pos[w]).expect("live neighbour");
                (s, e)
            })
            .collect();
        live_pos[slot] = i;
        let mut retire = 0u64;
        for (s, &p) in live_pos.iter().enumerate() {
            if p != usize::MAX && last[p] <= i {
                retire |= 1 << s;
            }
        }
        let mut next = Vec::with_capacity(states.len() * 2);
        for &(word, live) in &states {
            next.push((word, live & !retire));
            let add = back
                .iter()
                .filter(|&&(s, _)| live >> s & 1 == 1)
                .fold(0u32, |acc, &(_, e)| acc | 1 << e);
            next.push((word | add, (live | 1 << slot) & !retire));
        }
        for (s, p) in live_pos.iter_mut().enumerate() {
            if retire >> s & 1 == 1 {
                *p = usize::MAX;
            }
        }
        next.sort_unstable();
        next.dedup();
        states = next;
    }
    let mut masks: Vec<u32> = states.into_iter().map(|(w, _)| w).filter(|&w| w != 0).collect();
    masks.sort_unstable();
    masks.dedup();
    Ok(masks)
}

/// Distances from the canonical orientation to every orientation, indexed by
/// flip word.
#[derive(Clone, Debug)]
pub struct DistanceTable {
    edges: usize,
    dist: Vec<u8>,
}

impl DistanceTable {
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    /// Distance between two orientations whose difference word is `word`.
    pub fn get(&self, word: u32) -> usize {
        self.dist[word as usize] as usize
    }

    pub fn label_distance(&self, label: &Label) -> usize {
        self.get(label.as_word() as u32)
    }

    pub fn max(&self) -> usize {
        self.dist.iter().copied().max().unwrap_or(0) as usize
    }
}

const UNSEEN: u8 = u8::MAX;

fn check_budget(g: &Graph, limit: usize) -> Result<(), InversionError> {
    if g.edge_count() > limit {
        return Err(InversionError::Budget {
            edges: g.edge_count(),
            limit,
        });
    }
    Ok(())
}

/// Breadth-first search from the zero word; stops early once `target` is
/// labelled.
fn bfs(g: &Graph, target: Option<u32>) -> Result<Vec<u8>, InversionError> {
    let masks = inversion_masks(g)?;
    let states = 1usize << g.edge_count();
    let mut dist = vec![UNSEEN; states];
    dist[0] = 0;
    if target == Some(0) {
        return Ok(dist);
    }
    let mut frontier = vec![0u32];
    let mut depth = 0u8;
    while !frontier.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for &s in &frontier {
            for &m in &masks {
                let t = s ^ m;
                if dist[t as usize] == UNSEEN {
                    dist[t as usize] = depth;
                    if target == Some(t) {
                        return Ok(dist);
                    }
                    next.push(t);
                }
            }
        }
        frontier = next;
    }
    Ok(dist)
}

/// Exact inversion distance between two orientations, by BFS.
pub fn bfs_distance(g: &Graph, o1: &Orientation, o2: &Orientation) -> Result<usize, InversionError> {
    check_budget(g, BFS_MAX_EDGES)?;
    let diff = diff_label(o1, o2)?;
    if diff.len() != g.edge_count() {
        return Err(InversionError::GraphMismatch {
            left: diff.len(),
            right: g.edge_count(),
        });
    }
    let target = diff.as_word() as u32;
    let dist = bfs(g, Some(target))?;
    Ok(dist[target as usize] as usize)
}

/// Distances from the canonical orientation to all `2^m` orientations.
pub fn distance_table(g: &Graph) -> Result<DistanceTable, InversionError> {
    check_budget(g, BFS_MAX_EDGES)?;
    Ok(DistanceTable {
        edges: g.edge_count(),
        dist: bfs(g, None)?,
    })
}

/// Diameter of the inversion graph. One BFS suffices because the inversion
/// graph is vertex-transitive under XOR of flip words.
pub fn bfs_diameter(g: &Graph) -> Result<usize, InversionError> {
    check_budget(g, DIAMETER_MAX_EDGES)?;
    Ok(distance_table(g)?.max())
}
