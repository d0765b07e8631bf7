//! Simple undirected graphs with a canonical edge order, plus the two per-edge
//! bit maps aligned to it: [`Label`] and [`Orientation`].

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { vertex: usize, n: usize },
    Loop(usize),
    DuplicateEdge(usize, usize),
    LengthMismatch { expected: usize, found: usize },
    BadBit(char),
    NotAPermutation,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for {n} vertices")
            }
            GraphError::Loop(v) => write!(f, "loop at vertex {v}"),
            GraphError::DuplicateEdge(u, v) => write!(f, "duplicate edge {u} {v}"),
            GraphError::LengthMismatch { expected, found } => {
                write!(f, "expected {expected} edge bits, found {found}")
            }
            GraphError::BadBit(c) => write!(f, "invalid bit character {c:?}"),
            GraphError::NotAPermutation => f.write_str("vertex map is not a permutation"),
        }
    }
}

impl core::error::Error for GraphError {}

/// An undirected simple graph on vertices `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically; an
/// edge's index is its position in that order.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    // sorted by neighbour: (neighbour, edge index)
    adj: Vec<Vec<(u32, u32)>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph, canonicalising the edge order. Pairs may be given in
    /// either orientation.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut list = Vec::new();
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            list.push((u as u32, v as u32));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0 as usize, w[0].1 as usize));
        }
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in list.iter().enumerate() {
            adj[u as usize].push((v, i as u32));
            adj[v as usize].push((u, i as u32));
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Self { n, edges: list, adj })
    }

    pub fn edgeless(n: usize) -> Self {
        Self::new(n, []).expect("edgeless graph")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::new(n, edges).expect("complete graph")
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|v| (v - 1, v))).expect("path graph")
    }

    /// The cycle `0-1-...-(n-1)-0`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Self::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle graph")
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of edge `e`, smaller first.
    #[inline]
    pub fn edge(&self, e: usize) -> (usize, usize) {
        let (u, v) = self.edges[e];
        (u as usize, v as usize)
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(u, v)| (u as usize, v as usize))
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let list = &self.adj[u];
        list.binary_search_by_key(&(v as u32), |&(w, _)| w)
            .ok()
            .map(|i| list[i].1 as usize)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn neighbors(&self, v: usize) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w as usize)
    }

    /// Neighbours of `v` paired with the connecting edge index.
    pub fn incident(&self, v: usize) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.adj[v].iter().map(|&(w, e)| (w as usize, e as usize))
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Vertices outside `h` with at least one neighbour inside `h`, ascending.
    pub fn boundary(&self, h: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.n];
        for &v in h {
            inside[v] = true;
        }
        let mut out = vec![false; self.n];
        for &v in h {
            for w in self.neighbors(v) {
                if !inside[w] {
                    out[w] = true;
                }
            }
        }
        (0..self.n).filter(|&v| out[v]).collect()
    }

    pub fn is_independent_set(&self, s: &[usize]) -> bool {
        s.iter()
            .enumerate()
            .all(|(i, &a)| s[i + 1..].iter().all(|&b| !self.has_edge(a, b)))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// The same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, GraphError> {
        check_permutation(perm, self.n)?;
        Self::new(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Carries a label along a vertex permutation (see [`Graph::relabel`]).
    pub fn relabel_label(&self, perm: &[usize], label: &Label) -> Result<(Self, Label), GraphError> {
        let g = self.relabel(perm)?;
        let mut out = Label::zeros(g.edge_count());
        for (e, (u, v)) in self.edges().enumerate() {
            let f = g.edge_index(perm[u], perm[v]).expect("relabelled edge");
            out.set(f, label.get(e));
        }
        Ok((g, out))
    }

    /// Subgraph induced by `keep` (in the given order); vertex `keep[i]`
    /// becomes `i`. Also returns, per new edge, the old edge index.
    pub fn induced(&self, keep: &[usize]) -> (Self, Vec<usize>) {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let mut pairs = Vec::new();
        for (e, (u, v)) in self.edges().enumerate() {
            if pos[u] != usize::MAX && pos[v] != usize::MAX {
                pairs.push((pos[u], pos[v], e));
            }
        }
        let g = Self::new(keep.len(), pairs.iter().map(|&(a, b, _)| (a, b))).expect("induced subgraph");
        let mut map = vec![0; g.edge_count()];
        for &(a, b, e) in &pairs {
            map[g.edge_index(a, b).unwrap()] = e;
        }
        (g, map)
    }
}

fn check_permutation(perm: &[usize], n: usize) -> Result<(), GraphError> {
    if perm.len() != n {
        return Err(GraphError::NotAPermutation);
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(GraphError::NotAPermutation);
        }
        seen[p] = true;
    }
    Ok(())
}

/// A fixed-length bit string indexed by edge.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct EdgeBits {
    len: usize,
    words: Vec<u64>,
}

impl EdgeBits {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    /// Low `len` bits of `word`; `len <= 64`.
    pub fn from_word(len: usize, word: u64) -> Self {
        assert!(len <= 64);
        let mut b = Self::zeros(len);
        if len > 0 {
            b.words[0] = word & low_mask(len);
        }
        b
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut b = Self::zeros(bits.len());
        for (i, &x) in bits.iter().enumerate() {
            b.set(i, x);
        }
        b
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len);
        let m = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= m;
        } else {
            self.words[i / 64] &= !m;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// The bits as one word; only for `len <= 64`.
    pub fn as_word(&self) -> u64 {
        assert!(self.len <= 64, "bit string of length {} does not fit a word", self.len);
        self.words.first().copied().unwrap_or(0)
    }

    pub fn xor(&self, other: &Self) -> Option<Self> {
        if self.len != other.len {
            return None;
        }
        Some(Self {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a ^ b).collect(),
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// `'0'`/`'1'` per bit, index 0 first.
    pub fn to_text(&self) -> String {
        self.iter().map(|b| if b { '1' } else { '0' }).collect()
    }

    pub fn parse(s: &str) -> Result<Self, GraphError> {
        let s = s.trim();
        let mut b = Self::zeros(s.chars().count());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => b.set(i, true),
                other => return Err(GraphError::BadBit(other)),
            }
        }
        Ok(b)
    }
}

#[inline]
fn low_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl fmt::Debug for EdgeBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

macro_rules! edge_bit_newtype {
    ($(#[$m:meta])* $name:ident) => {
        $(#[$m])*
        #[derive(Clone, PartialEq, Eq, Hash, Default)]
        pub struct $name(EdgeBits);

        impl $name {
            pub fn zeros(len: usize) -> Self {
                Self(EdgeBits::zeros(len))
            }

            pub fn from_word(len: usize, word: u64) -> Self {
                Self(EdgeBits::from_word(len, word))
            }

            pub fn from_bools(bits: &[bool]) -> Self {
                Self(EdgeBits::from_bools(bits))
            }

            pub fn from_bits(bits: EdgeBits) -> Self {
                Self(bits)
            }

            pub fn bits(&self) -> &EdgeBits {
                &self.0
            }

            #[inline]
            pub fn len(&self) -> usize {
                self.0.len()
            }

            #[inline]
            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            #[inline]
            pub fn get(&self, e: usize) -> bool {
                self.0.get(e)
            }

            #[inline]
            pub fn set(&mut self, e: usize, value: bool) {
                self.0.set(e, value)
            }

            #[inline]
            pub fn flip(&mut self, e: usize) {
                self.0.flip(e)
            }

            pub fn as_word(&self) -> u64 {
                self.0.as_word()
            }

            pub fn to_text(&self) -> String {
                self.0.to_text()
            }

            pub fn parse(s: &str) -> Result<Self, GraphError> {
                EdgeBits::parse(s).map(Self)
            }

            /// Parses and checks the length against `g`.
            pub fn parse_for(g: &Graph, s: &str) -> Result<Self, GraphError> {
                let b = Self::parse(s)?;
                b.check(g)?;
                Ok(b)
            }

            pub fn check(&self, g: &Graph) -> Result<(), GraphError> {
                if self.len() != g.edge_count() {
                    return Err(GraphError::LengthMismatch {
                        expected: g.edge_count(),
                        found: self.len(),
                    });
                }
                Ok(())
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}({})", stringify!($name), self.0.to_text())
            }
        }
    };
}

edge_bit_newtype!(
    /// A map from edges to F₂, one bit per canonical edge index.
    Label
);

edge_bit_newtype!(
    /// An orientation of a graph as flips against the canonical direction:
    /// bit 0 means the arc runs `u -> v` for the canonical pair `u < v`.
    Orientation
);

impl Orientation {
    /// Whether edge `e` is directed from its smaller endpoint.
    pub fn is_forward(&self, e: usize) -> bool {
        !self.get(e)
    }
}
