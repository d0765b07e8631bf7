//! Exhaustive reducibility checks for small configurations in dimension 3.
//!
//! A configuration is an induced subgraph `H` together with its boundary
//! `N`, a domain for each edge label, and constraints on the candidate sets
//! `B(v) ⊆ F₂³` a vector assignment outside `H` may leave on the boundary.
//! `H` is reducible when, for every admissible label and every family of
//! candidate sets, some 3-dimensional assignment of `H ∪ N` labels every
//! edge correctly while drawing boundary vectors from `B`.
//!
//! Whether such an assignment exists only grows with `B`, so it suffices to
//! enumerate candidate sets of exactly the minimum allowed size. Forced
//! members are fixed first and the rest filled up to that size.
//!
//! Vectors of `F₂³` are the integers `0..8` (bit `j` is coordinate `j`);
//! subsets of `F₂³` are `u8` masks.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, GraphError, Label};

/// A vector of `F₂³` as `0..8`.
pub type Vec3 = u8;
/// A subset of `F₂³`, bit `x` set iff vector `x` is a member.
pub type Set3 = u8;

const UNSET: u8 = u8::MAX;

#[cfg(test)]
fn dot3(a: Vec3, b: Vec3) -> bool {
    (a & b).count_ones() & 1 == 1
}

/// `COMPAT[a][p]` is the set of `x` with `x·a = p`.
const COMPAT: [[Set3; 2]; 8] = {
    let mut t = [[0u8; 2]; 8];
    let mut a = 0;
    while a < 8 {
        let mut x = 0;
        while x < 8 {
            let p = ((a & x) as u8).count_ones() as usize & 1;
            t[a][p] |= 1 << x;
            x += 1;
        }
        a += 1;
    }
    t
};

fn members(s: Set3) -> impl Iterator<Item = Vec3> {
    (0u8..8).filter(move |&x| s >> x & 1 == 1)
}

/// Renders a vector as three binary digits, coordinate 0 first.
pub fn vec3_text(x: Vec3) -> String {
    (0..3).map(|j| if x >> j & 1 == 1 { '1' } else { '0' }).collect()
}

pub fn parse_vec3(s: &str) -> Option<Vec3> {
    if s.len() != 3 {
        return None;
    }
    let mut x = 0;
    for (j, c) in s.chars().enumerate() {
        match c {
            '0' => {}
            '1' => x |= 1 << j,
            _ => return None,
        }
    }
    Some(x)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelBit {
    Fixed(bool),
    Free,
}

/// Admissibility of a complete label: at least one of `edges` is labelled one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnyOne {
    pub edges: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZeroExclusion {
    Never,
    Always,
    /// `0 ∉ B(v)` when every listed edge is labelled zero.
    IfAllZero(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexRule {
    pub min_size: usize,
    pub exclude_zero: ZeroExclusion,
    pub include_zero: bool,
    /// The designated value `f(v)` is nonzero.
    pub nonzero_value: bool,
}

impl Default for VertexRule {
    fn default() -> Self {
        VertexRule {
            min_size: 1,
            exclude_zero: ZeroExclusion::Never,
            include_zero: false,
            nonzero_value: false,
        }
    }
}

/// `f(a) = f(b)` forces `f(then) = f(a)`. Indices are boundary positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValueLink {
    pub a: usize,
    pub b: usize,
    pub then: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConfigError {
    Graph(GraphError),
    UnknownVertex(String),
    NotAnEdge(String, String),
    Partition,
    DetachedBoundary(usize),
    BadRule(String),
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::Graph(e) => write!(f, "{e}"),
            ConfigError::UnknownVertex(v) => write!(f, "unknown vertex {v:?}"),
            ConfigError::NotAnEdge(a, b) => write!(f, "{a}{b} is not an edge"),
            ConfigError::Partition => f.write_str("H and the boundary must partition the vertices"),
            ConfigError::DetachedBoundary(v) => write!(f, "boundary vertex {v} has no edge into H"),
            ConfigError::BadRule(why) => write!(f, "invalid rule: {why}"),
        }
    }
}

impl core::error::Error for ConfigError {}

impl From<GraphError> for ConfigError {
    fn from(e: GraphError) -> Self {
        ConfigError::Graph(e)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    pub name: String,
    pub names: Vec<String>,
    pub graph: Graph,
    pub h: Vec<usize>,
    pub boundary: Vec<usize>,
    /// Per edge of `graph`, in canonical order.
    pub label_domain: Vec<LabelBit>,
    pub admissibility: Vec<AnyOne>,
    /// Parallel to `boundary`.
    pub rules: Vec<VertexRule>,
    pub links: Vec<ValueLink>,
    /// Also check the two-stage pairing argument for four boundary vertices.
    pub pairing_subclaim: bool,
}

impl Configuration {
    /// A configuration on named vertices with every label free and default
    /// boundary rules. `h` lists the vertices of `H`, the rest form the boundary.
    pub fn new(name: &str, names: &[&str], h: &[&str], edges: &[(&str, &str)]) -> Result<Self, ConfigError> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let find = |s: &str| {
            names
                .iter()
                .position(|n| n == s)
                .ok_or(ConfigError::UnknownVertex(s.to_string()))
        };
        let mut pairs = Vec::new();
        for &(a, b) in edges {
            pairs.push((find(a)?, find(b)?));
        }
        let graph = Graph::new(names.len(), pairs)?;
        let mut hv = Vec::new();
        for s in h {
            hv.push(find(s)?);
        }
        let boundary: Vec<usize> = (0..names.len()).filter(|v| !hv.contains(v)).collect();
        let cfg = Configuration {
            name: name.to_string(),
            label_domain: vec![LabelBit::Free; graph.edge_count()],
            rules: vec![VertexRule::default(); boundary.len()],
            names,
            graph,
            h: hv,
            boundary,
            admissibility: Vec::new(),
            links: Vec::new(),
            pairing_subclaim: false,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn vertex(&self, name: &str) -> Result<usize, ConfigError> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or(ConfigError::UnknownVertex(name.to_string()))
    }

    pub fn edge(&self, a: &str, b: &str) -> Result<usize, ConfigError> {
        let (u, v) = (self.vertex(a)?, self.vertex(b)?);
        self.graph
            .edge_index(u, v)
            .ok_or(ConfigError::NotAnEdge(a.to_string(), b.to_string()))
    }

    fn boundary_pos(&self, name: &str) -> Result<usize, ConfigError> {
        let v = self.vertex(name)?;
        self.boundary
            .iter()
            .position(|&b| b == v)
            .ok_or(ConfigError::BadRule(alloc::format!("{name} is not a boundary vertex")))
    }

    pub fn fix(&mut self, a: &str, b: &str, bit: bool) -> Result<&mut Self, ConfigError> {
        let e = self.edge(a, b)?;
        self.label_domain[e] = LabelBit::Fixed(bit);
        Ok(self)
    }

    pub fn require_one_of(&mut self, edges: &[(&str, &str)]) -> Result<&mut Self, ConfigError> {
        let mut es = Vec::new();
        for &(a, b) in edges {
            es.push(self.edge(a, b)?);
        }
        self.admissibility.push(AnyOne { edges: es });
        Ok(self)
    }

    pub fn rule(&mut self, v: &str, rule: VertexRule) -> Result<&mut Self, ConfigError> {
        let p = self.boundary_pos(v)?;
        self.rules[p] = rule;
        Ok(self)
    }

    pub fn link(&mut self, a: &str, b: &str, then: &str) -> Result<&mut Self, ConfigError> {
        let link = ValueLink {
            a: self.boundary_pos(a)?,
            b: self.boundary_pos(b)?,
            then: self.boundary_pos(then)?,
        };
        self.links.push(link);
        Ok(self)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let n = self.graph.vertex_count();
        let mut seen = vec![0u8; n];
        for &v in self.h.iter().chain(&self.boundary) {
            if v >= n {
                return Err(ConfigError::Partition);
            }
            seen[v] += 1;
        }
        if seen.iter().any(|&c| c != 1) || self.h.is_empty() {
            return Err(ConfigError::Partition);
        }
        for &b in &self.boundary {
            if !self.graph.neighbors(b).any(|w| self.h.contains(&w)) {
                return Err(ConfigError::DetachedBoundary(b));
            }
        }
        let m = self.graph.edge_count();
        if self.label_domain.len() != m || self.rules.len() != self.boundary.len() {
            return Err(ConfigError::BadRule("rule tables do not match the graph".into()));
        }
        for r in &self.admissibility {
            if r.edges.iter().any(|&e| e >= m) {
                return Err(ConfigError::BadRule("admissibility edge out of range".into()));
            }
        }
        for r in &self.rules {
            if !(1..=8).contains(&r.min_size) {
                return Err(ConfigError::BadRule("minimum size must be 1..=8".into()));
            }
            if let ZeroExclusion::IfAllZero(es) = &r.exclude_zero {
                if es.iter().any(|&e| e >= m) {
                    return Err(ConfigError::BadRule("exclusion edge out of range".into()));
                }
            }
        }
        let k = self.boundary.len();
        if self.links.iter().any(|l| l.a >= k || l.b >= k || l.then >= k) {
            return Err(ConfigError::BadRule("link refers to a missing boundary vertex".into()));
        }
        if self.pairing_subclaim && k != 4 {
            return Err(ConfigError::BadRule(
                "pairing sub-claim needs four boundary vertices".into(),
            ));
        }
        Ok(())
    }

    fn free_edges(&self) -> Vec<usize> {
        (0..self.label_domain.len())
            .filter(|&e| self.label_domain[e] == LabelBit::Free)
            .collect()
    }

    /// True iff `label` matches the fixed bits and every admissibility rule.
    pub fn is_admissible(&self, label: &Label) -> bool {
        label.len() == self.graph.edge_count()
            && self.label_domain.iter().enumerate().all(|(e, d)| match d {
                LabelBit::Fixed(b) => label.get(e) == *b,
                LabelBit::Free => true,
            })
            && self.admissibility.iter().all(|r| r.edges.iter().any(|&e| label.get(e)))
    }

    /// Admissible labels in lexicographic order of their bit strings.
    pub fn admissible_labels(&self) -> Vec<Label> {
        let free = self.free_edges();
        let mut base = Label::zeros(self.graph.edge_count());
        for (e, d) in self.label_domain.iter().enumerate() {
            if let LabelBit::Fixed(b) = d {
                base.set(e, *b);
            }
        }
        let mut out = Vec::new();
        for x in 0u64..1 << free.len() {
            let mut l = base.clone();
            for (i, &e) in free.iter().enumerate() {
                // earliest free edge is the most significant
                l.set(e, x >> (free.len() - 1 - i) & 1 == 1);
            }
            if self.is_admissible(&l) {
                out.push(l);
            }
        }
        out
    }

    fn excludes_zero(&self, pos: usize, label: &Label) -> bool {
        match &self.rules[pos].exclude_zero {
            ZeroExclusion::Never => false,
            ZeroExclusion::Always => true,
            ZeroExclusion::IfAllZero(es) => es.iter().all(|&e| !label.get(e)),
        }
    }

    /// Minimum-size candidate sets of one boundary vertex, in lexicographic
    /// order of their sorted member lists.
    pub fn candidate_sets(&self, pos: usize, label: &Label) -> Vec<Set3> {
        let rule = &self.rules[pos];
        let exclude = self.excludes_zero(pos, label);
        if exclude && rule.include_zero {
            return Vec::new();
        }
        let forced: Set3 = rule.include_zero as u8;
        let pool: Vec<Vec3> = (0u8..8)
            .filter(|&x| !(x == 0 && (exclude || rule.include_zero)))
            .collect();
        let need = rule.min_size.saturating_sub(forced.count_ones() as usize);
        let mut out = Vec::new();
        combinations(&pool, need, 0, forced, &mut out);
        out.sort_by_key(|&s| sorted_members(s));
        out.retain(|&s| members(s).any(|x| !(rule.nonzero_value && x == 0)));
        out
    }

    /// Allowed designated values inside `set` for one boundary vertex.
    fn value_options(&self, pos: usize, set: Set3) -> impl Iterator<Item = Vec3> + '_ {
        let nonzero = self.rules[pos].nonzero_value;
        members(set).filter(move |&x| !(nonzero && x == 0))
    }

    fn links_hold(&self, values: &[Vec3]) -> bool {
        self.links
            .iter()
            .all(|l| values[l.a] != values[l.b] || values[l.then] == values[l.a])
    }

    /// True iff `fam` satisfies every family constraint under `label`.
    pub fn family_is_valid(&self, label: &Label, fam: &BoundaryFamily) -> bool {
        let k = self.boundary.len();
        if fam.sets.len() != k || fam.values.len() != k {
            return false;
        }
        for pos in 0..k {
            let (s, x) = (fam.sets[pos], fam.values[pos]);
            let rule = &self.rules[pos];
            if x >= 8 || s >> x & 1 == 0 || (s.count_ones() as usize) < rule.min_size {
                return false;
            }
            if rule.nonzero_value && x == 0 {
                return false;
            }
            if rule.include_zero && s & 1 == 0 {
                return false;
            }
            if self.excludes_zero(pos, label) && s & 1 == 1 {
                return false;
            }
        }
        self.links_hold(&fam.values)
    }
}

fn sorted_members(s: Set3) -> Vec<Vec3> {
    members(s).collect()
}

fn combinations(pool: &[Vec3], need: usize, start: usize, acc: Set3, out: &mut Vec<Set3>) {
    if need == 0 {
        out.push(acc);
        return;
    }
    for i in start..pool.len() {
        if pool.len() - i < need {
            break;
        }
        combinations(pool, need - 1, i + 1, acc | 1 << pool[i], out);
    }
}

/// Candidate sets and designated values, parallel to the boundary.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoundaryFamily {
    pub sets: Vec<Set3>,
    pub values: Vec<Vec3>,
}

/// Walks every valid family for `label`, grouped by candidate-set tuple:
/// `visit(sets, values_count, first_values)` is called once per tuple that
/// admits at least one valid choice of designated values. Stops early when
/// `visit` returns false.
fn for_each_set_tuple(cfg: &Configuration, label: &Label, mut visit: impl FnMut(&[Set3], u64, &[Vec3]) -> bool) {
    let options: Vec<Vec<Set3>> = (0..cfg.boundary.len()).map(|p| cfg.candidate_sets(p, label)).collect();
    if options.iter().any(|o| o.is_empty()) {
        return;
    }
    let k = options.len();
    let mut idx = vec![0usize; k];
    let mut sets = vec![0u8; k];
    loop {
        for p in 0..k {
            sets[p] = options[p][idx[p]];
        }
        let (count, first) = designated_values(cfg, &sets);
        if count > 0 && !visit(&sets, count, &first) {
            return;
        }
        // odometer, last boundary vertex fastest
        let mut p = k;
        loop {
            if p == 0 {
                return;
            }
            p -= 1;
            idx[p] += 1;
            if idx[p] < options[p].len() {
                break;
            }
            idx[p] = 0;
        }
    }
}

/// Number of valid designated-value tuples for `sets`, and the first one.
fn designated_values(cfg: &Configuration, sets: &[Set3]) -> (u64, Vec<Vec3>) {
    let k = sets.len();
    let opts: Vec<Vec<Vec3>> = (0..k).map(|p| cfg.value_options(p, sets[p]).collect()).collect();
    if opts.iter().any(|o| o.is_empty()) {
        return (0, Vec::new());
    }
    if cfg.links.is_empty() {
        let count = opts.iter().map(|o| o.len() as u64).product();
        return (count, opts.iter().map(|o| o[0]).collect());
    }
    let mut count = 0;
    let mut first = Vec::new();
    let mut idx = vec![0usize; k];
    let mut values = vec![0u8; k];
    loop {
        for p in 0..k {
            values[p] = opts[p][idx[p]];
        }
        if cfg.links_hold(&values) {
            if count == 0 {
                first = values.clone();
            }
            count += 1;
        }
        let mut p = k;
        loop {
            if p == 0 {
                return (count, first);
            }
            p -= 1;
            idx[p] += 1;
            if idx[p] < opts[p].len() {
                break;
            }
            idx[p] = 0;
        }
    }
}

/// Every valid minimum-size family for `label`, in lexicographic order
/// (candidate sets first, then designated values).
pub fn enumerate_families(cfg: &Configuration, label: &Label) -> Vec<BoundaryFamily> {
    let mut out = Vec::new();
    for_each_set_tuple(cfg, label, |sets, _, _| {
        let k = sets.len();
        let opts: Vec<Vec<Vec3>> = (0..k).map(|p| cfg.value_options(p, sets[p]).collect()).collect();
        let mut idx = vec![0usize; k];
        'outer: loop {
            let values: Vec<Vec3> = (0..k).map(|p| opts[p][idx[p]]).collect();
            if cfg.links_hold(&values) {
                out.push(BoundaryFamily {
                    sets: sets.to_vec(),
                    values,
                });
            }
            let mut p = k;
            loop {
                if p == 0 {
                    break 'outer;
                }
                p -= 1;
                idx[p] += 1;
                if idx[p] < opts[p].len() {
                    break;
                }
                idx[p] = 0;
            }
        }
        true
    });
    out
}

/// Searches an assignment of `H ∪ N` into `F₂³` drawing boundary vectors
/// from `sets`. Vertices of `H` are tried first, in order, then the boundary;
/// values ascend, so the witness is the first in that order.
fn search(cfg: &Configuration, label: &Label, sets: &[Set3], avoid_pairings: bool) -> Option<Vec<Vec3>> {
    let n = cfg.graph.vertex_count();
    let mut base = vec![0xffu8; n];
    for (p, &b) in cfg.boundary.iter().enumerate() {
        base[b] = sets[p];
    }
    let order: Vec<usize> = cfg.h.iter().chain(&cfg.boundary).copied().collect();
    let mut g = vec![UNSET; n];
    if rec(cfg, label, &base, &order, 0, &mut g, avoid_pairings) {
        Some(g)
    } else {
        None
    }
}

fn rec(
    cfg: &Configuration,
    label: &Label,
    base: &[Set3],
    order: &[usize],
    i: usize,
    g: &mut [Vec3],
    avoid_pairings: bool,
) -> bool {
    if i == order.len() {
        return !avoid_pairings || avoids_pairings(&cfg.boundary.iter().map(|&b| g[b]).collect::<Vec<_>>());
    }
    let v = order[i];
    let mut dom = base[v];
    for (w, e) in cfg.graph.incident(v) {
        if g[w] != UNSET {
            dom &= COMPAT[g[w] as usize][label.get(e) as usize];
        }
    }
    for x in members(dom) {
        g[v] = x;
        if rec(cfg, label, base, order, i + 1, g, avoid_pairings) {
            return true;
        }
    }
    g[v] = UNSET;
    false
}

/// A witness assignment of `H ∪ N` (indexed by configuration vertex) or
/// `None` when the family is stuck.
pub fn check_family(cfg: &Configuration, label: &Label, fam: &BoundaryFamily) -> Option<Vec<Vec3>> {
    search(cfg, label, &fam.sets, false)
}

/// True iff `values` contains no pair of equal pairs, that is no split of
/// the four positions into two pairs with both pairs equal.
pub fn avoids_pairings(values: &[Vec3]) -> bool {
    let v = values;
    v.len() != 4
        || !((v[0] == v[1] && v[2] == v[3]) || (v[0] == v[2] && v[1] == v[3]) || (v[0] == v[3] && v[1] == v[2]))
}

/// True iff some choice `x_i ∈ sets[i]` avoids equal pairs.
pub fn has_avoiding_selection(sets: &[Set3]) -> bool {
    fn go(sets: &[Set3], acc: &mut Vec<Vec3>) -> bool {
        if acc.len() == sets.len() {
            return avoids_pairings(acc);
        }
        for x in members(sets[acc.len()]) {
            acc.push(x);
            if go(sets, acc) {
                return true;
            }
            acc.pop();
        }
        false
    }
    go(sets, &mut Vec::new())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Failure {
    /// No assignment of `H ∪ N` draws boundary vectors from the family.
    Stuck,
    /// The family admits no selection avoiding equal pairs.
    NoAvoidingSelection,
    /// A nonzero selection avoiding equal pairs (given as singleton sets)
    /// does not extend over `H`.
    SelectionStuck,
}

impl Failure {
    pub fn as_str(self) -> &'static str {
        match self {
            Failure::Stuck => "stuck",
            Failure::NoAvoidingSelection => "no-avoiding-selection",
            Failure::SelectionStuck => "selection-stuck",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [Failure::Stuck, Failure::NoAvoidingSelection, Failure::SelectionStuck]
            .into_iter()
            .find(|f| f.as_str() == s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub label: Label,
    pub family: BoundaryFamily,
    pub failure: Failure,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LabelOutcome {
    pub families: u64,
    pub set_tuples: u64,
    pub counterexample: Option<Counterexample>,
}

/// Checks every family for one admissible label; stops at the first stuck
/// family.
pub fn check_label(cfg: &Configuration, label: &Label) -> LabelOutcome {
    let mut out = LabelOutcome::default();
    for_each_set_tuple(cfg, label, |sets, count, first| {
        out.families += count;
        out.set_tuples += 1;
        let failure = if search(cfg, label, sets, false).is_none() {
            Some(Failure::Stuck)
        } else if cfg.pairing_subclaim && !has_avoiding_selection(sets) {
            Some(Failure::NoAvoidingSelection)
        } else {
            None
        };
        match failure {
            Some(failure) => {
                out.counterexample = Some(Counterexample {
                    label: label.clone(),
                    family: BoundaryFamily {
                        sets: sets.to_vec(),
                        values: first.to_vec(),
                    },
                    failure,
                });
                false
            }
            None => true,
        }
    });
    out
}

/// Second stage of the pairing argument: every nonzero selection avoiding
/// equal pairs extends over `H`. Returns the number checked and the first
/// failure.
pub fn check_selections(cfg: &Configuration, label: &Label) -> (u64, Option<Counterexample>) {
    let mut checked = 0;
    for code in 0u32..7 * 7 * 7 * 7 {
        let values: Vec<Vec3> = (0..4).rev().map(|i| (code / 7u32.pow(i) % 7) as u8 + 1).collect();
        if !avoids_pairings(&values) {
            continue;
        }
        checked += 1;
        let sets: Vec<Set3> = values.iter().map(|&x| 1 << x).collect();
        if search(cfg, label, &sets, false).is_none() {
            return (
                checked,
                Some(Counterexample {
                    label: label.clone(),
                    family: BoundaryFamily { sets, values },
                    failure: Failure::SelectionStuck,
                }),
            );
        }
    }
    (checked, None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelOrder {
    Lex,
    Reverse,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducibilityReport {
    pub name: String,
    pub labels: usize,
    pub families: u64,
    pub set_tuples: u64,
    pub selections: u64,
    pub counterexample: Option<Counterexample>,
}

impl ReducibilityReport {
    pub fn reducible(&self) -> bool {
        self.counterexample.is_none()
    }

    fn absorb(&mut self, o: LabelOutcome) {
        self.families += o.families;
        self.set_tuples += o.set_tuples;
        if self.counterexample.is_none() {
            self.counterexample = o.counterexample;
        }
    }
}

/// Runs every admissible label in lexicographic order. Stops at the first
/// counterexample.
pub fn check_reducible(cfg: &Configuration) -> ReducibilityReport {
    check_reducible_ordered(cfg, LabelOrder::Lex)
}

pub fn check_reducible_ordered(cfg: &Configuration, order: LabelOrder) -> ReducibilityReport {
    let mut labels = cfg.admissible_labels();
    if order == LabelOrder::Reverse {
        labels.reverse();
    }
    let mut report = ReducibilityReport {
        name: cfg.name.clone(),
        labels: labels.len(),
        families: 0,
        set_tuples: 0,
        selections: 0,
        counterexample: None,
    };
    for l in &labels {
        report.absorb(check_label(cfg, l));
        if !report.reducible() {
            return report;
        }
    }
    finish_selections(cfg, &labels, &mut report);
    report
}

/// Combines per-label outcomes computed in any schedule, given in label
/// order, into the report `check_reducible` produces.
pub fn combine_outcomes(cfg: &Configuration, labels: &[Label], outcomes: Vec<LabelOutcome>) -> ReducibilityReport {
    let mut report = ReducibilityReport {
        name: cfg.name.clone(),
        labels: labels.len(),
        families: 0,
        set_tuples: 0,
        selections: 0,
        counterexample: None,
    };
    for o in outcomes {
        let stop = o.counterexample.is_some();
        report.absorb(o);
        if stop {
            return report;
        }
    }
    finish_selections(cfg, labels, &mut report);
    report
}

fn finish_selections(cfg: &Configuration, labels: &[Label], report: &mut ReducibilityReport) {
    if !cfg.pairing_subclaim {
        return;
    }
    for l in labels {
        let (n, cx) = check_selections(cfg, l);
        report.selections += n;
        if cx.is_some() {
            report.counterexample = cx;
            return;
        }
    }
}

/// Edits to a configuration that drop one kind of stated constraint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    DropMinSize,
    DropZeroExclusion,
    DropZeroInclusion,
    DropNonzero,
    DropLinks,
    DropAdmissibility,
}

impl Mutation {
    pub const ALL: [Mutation; 6] = [
        Mutation::DropMinSize,
        Mutation::DropZeroExclusion,
        Mutation::DropZeroInclusion,
        Mutation::DropNonzero,
        Mutation::DropLinks,
        Mutation::DropAdmissibility,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Mutation::DropMinSize => "drop-min-size",
            Mutation::DropZeroExclusion => "drop-zero-exclusion",
            Mutation::DropZeroInclusion => "drop-zero-inclusion",
            Mutation::DropNonzero => "drop-nonzero",
            Mutation::DropLinks => "drop-links",
            Mutation::DropAdmissibility => "drop-admissibility",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|m| m.as_str() == s)
    }

    pub fn apply(self, cfg: &mut Configuration) {
        match self {
            Mutation::DropMinSize => cfg.rules.iter_mut().for_each(|r| r.min_size = 1),
            Mutation::DropZeroExclusion => cfg.rules.iter_mut().for_each(|r| r.exclude_zero = ZeroExclusion::Never),
            Mutation::DropZeroInclusion => cfg.rules.iter_mut().for_each(|r| r.include_zero = false),
            Mutation::DropNonzero => cfg.rules.iter_mut().for_each(|r| r.nonzero_value = false),
            Mutation::DropLinks => cfg.links.clear(),
            Mutation::DropAdmissibility => cfg.admissibility.clear(),
        }
    }
}

/// A named check made of one or more configurations, all of which must be
/// reducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Builtin {
    pub name: &'static str,
    pub parts: Vec<Configuration>,
    /// A mutation under which this check is known to fail.
    pub control: Mutation,
}

impl Builtin {
    pub fn mutated(&self, mutations: &[Mutation]) -> Builtin {
        let mut b = self.clone();
        for cfg in &mut b.parts {
            for m in mutations {
                m.apply(cfg);
            }
        }
        b
    }
}

fn rule(min_size: usize, exclude_zero: ZeroExclusion) -> VertexRule {
    VertexRule {
        min_size,
        exclude_zero,
        ..VertexRule::default()
    }
}

fn nonzero(mut r: VertexRule) -> VertexRule {
    r.nonzero_value = true;
    r
}

fn k4minus() -> Result<Configuration, ConfigError> {
    let mut c = Configuration::new(
        "K4minus",
        &["v0", "v1", "u0", "u1"],
        &["v0", "v1"],
        &[("v0", "v1"), ("v0", "u0"), ("v0", "u1"), ("v1", "u0"), ("v1", "u1")],
    )?;
    for i in ["v0", "v1"] {
        c.require_one_of(&[("v0", "v1"), (i, "u0"), (i, "u1")])?;
    }
    for u in ["u0", "u1"] {
        let quiet = ZeroExclusion::IfAllZero(vec![c.edge("v0", u)?, c.edge("v1", u)?]);
        c.rule(u, nonzero(rule(4, quiet)))?;
    }
    Ok(c)
}

fn triangle() -> Result<Configuration, ConfigError> {
    let mut c = Configuration::new(
        "triangle",
        &["v0", "v1", "v2", "u0", "u1", "u2"],
        &["v0", "v1", "v2"],
        &[
            ("v0", "v1"),
            ("v0", "v2"),
            ("v1", "v2"),
            ("v0", "u0"),
            ("v1", "u1"),
            ("v2", "u2"),
        ],
    )?;
    c.require_one_of(&[("v0", "v1"), ("v0", "v2"), ("v0", "u0")])?;
    c.require_one_of(&[("v0", "v1"), ("v1", "v2"), ("v1", "u1")])?;
    c.require_one_of(&[("v0", "v2"), ("v1", "v2"), ("v2", "u2")])?;
    let quiet = ZeroExclusion::IfAllZero(vec![c.edge("u0", "v0")?]);
    c.rule("u0", nonzero(rule(2, quiet)))?;
    c.rule("u1", nonzero(rule(1, ZeroExclusion::Never)))?;
    c.rule("u2", nonzero(rule(1, ZeroExclusion::Never)))?;
    c.link("u1", "u2", "u0")?;
    Ok(c)
}

fn p3() -> Result<Configuration, ConfigError> {
    let mut c = Configuration::new(
        "P3",
        &["w", "u0", "u1", "u2"],
        &["w"],
        &[("w", "u0"), ("w", "u1"), ("w", "u2")],
    )?;
    c.fix("w", "u0", true)?;
    c.rule("u0", rule(2, ZeroExclusion::Always))?;
    for u in ["u1", "u2"] {
        let quiet = ZeroExclusion::IfAllZero(vec![c.edge("w", u)?]);
        c.rule(u, rule(2, quiet))?;
    }
    Ok(c)
}

fn k23() -> Result<Configuration, ConfigError> {
    let mut c = Configuration::new(
        "K23",
        &["v0", "v1", "u0", "u1", "u2"],
        &["v0", "v1"],
        &[
            ("v0", "u0"),
            ("v0", "u1"),
            ("v0", "u2"),
            ("v1", "u0"),
            ("v1", "u1"),
            ("v1", "u2"),
        ],
    )?;
    for v in ["v0", "v1"] {
        for u in ["u0", "u1", "u2"] {
            let one = (v, u) == ("v0", "u0") || (v, u) == ("v1", "u2");
            c.fix(v, u, one)?;
        }
    }
    let with_zero = VertexRule {
        min_size: 4,
        include_zero: true,
        ..VertexRule::default()
    };
    c.rule("u0", with_zero.clone())?;
    c.rule("u1", rule(4, ZeroExclusion::Always))?;
    c.rule("u2", with_zero)?;
    Ok(c)
}

const C4_VERTICES: [&str; 8] = ["v0", "v1", "v2", "v3", "u0", "u1", "u2", "u3"];
// the cycle runs v0 v1 v3 v2
const C4_EDGES: [(&str, &str); 8] = [
    ("v0", "v1"),
    ("v1", "v3"),
    ("v3", "v2"),
    ("v2", "v0"),
    ("v0", "u0"),
    ("v1", "u1"),
    ("v2", "u2"),
    ("v3", "u3"),
];

fn c4(name: &str, v2v3: bool) -> Result<Configuration, ConfigError> {
    let mut c = Configuration::new(name, &C4_VERTICES, &C4_VERTICES[..4], &C4_EDGES)?;
    c.fix("v0", "v1", true)?;
    c.fix("v0", "v2", false)?;
    c.fix("v1", "v3", false)?;
    c.fix("v2", "v3", v2v3)?;
    Ok(c)
}

fn c4_a() -> Result<Configuration, ConfigError> {
    let mut c = c4("C4_a", false)?;
    for u in ["u0", "u1", "u2", "u3"] {
        c.rule(u, nonzero(rule(1, ZeroExclusion::Never)))?;
    }
    Ok(c)
}

fn c4_b(t: usize) -> Result<Configuration, ConfigError> {
    let mut c = c4(&alloc::format!("C4_b/t{t}"), true)?;
    for i in 0..4 {
        c.fix(C4_VERTICES[i], C4_VERTICES[4 + i], false)?;
        let size = if i == 0 || i == t { 2 } else { 1 };
        c.rule(C4_VERTICES[4 + i], rule(size, ZeroExclusion::Always))?;
    }
    c.pairing_subclaim = true;
    Ok(c)
}

fn bridge() -> Result<Configuration, ConfigError> {
    let mut c = Configuration::new(
        "bridge",
        &["v0", "v1", "u0", "u1", "u2", "u3"],
        &["v0", "v1"],
        &[("v0", "v1"), ("v0", "u0"), ("v0", "u1"), ("v1", "u2"), ("v1", "u3")],
    )?;
    c.fix("v0", "v1", true)?;
    for u in ["u0", "u1", "u2", "u3"] {
        c.rule(u, rule(2, ZeroExclusion::Always))?;
    }
    Ok(c)
}

/// The seven named checks.
pub fn builtin_configs() -> Vec<Builtin> {
    let build = || -> Result<Vec<Builtin>, ConfigError> {
        Ok(vec![
            Builtin {
                name: "K4minus",
                parts: vec![k4minus()?],
                control: Mutation::DropMinSize,
            },
            Builtin {
                name: "triangle",
                parts: vec![triangle()?],
                control: Mutation::DropLinks,
            },
            Builtin {
                name: "P3",
                parts: vec![p3()?],
                control: Mutation::DropZeroExclusion,
            },
            Builtin {
                name: "K23",
                parts: vec![k23()?],
                control: Mutation::DropMinSize,
            },
            Builtin {
                name: "C4_a",
                parts: vec![c4_a()?],
                control: Mutation::DropNonzero,
            },
            Builtin {
                name: "C4_b",
                parts: vec![c4_b(1)?, c4_b(2)?, c4_b(3)?],
                control: Mutation::DropMinSize,
            },
            Builtin {
                name: "bridge",
                parts: vec![bridge()?],
                control: Mutation::DropMinSize,
            },
        ])
    };
    build().expect("builtin configurations are well formed")
}

pub fn builtin(name: &str) -> Option<Builtin> {
    builtin_configs().into_iter().find(|b| b.name == name)
}

/// Looks up one part of a builtin by configuration name, for example
/// `"C4_b/t2"` or `"bridge"`.
pub fn builtin_part(name: &str, mutations: &[Mutation]) -> Option<Configuration> {
    builtin_configs()
        .into_iter()
        .map(|b| b.mutated(mutations))
        .flat_map(|b| b.parts)
        .find(|c| c.name == name)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteEntry {
    pub name: &'static str,
    pub parts: Vec<ReducibilityReport>,
}

impl SuiteEntry {
    pub fn reducible(&self) -> bool {
        self.parts.iter().all(|p| p.reducible())
    }
}

/// Runs every builtin, with `mutations` applied to each.
pub fn run_suite(mutations: &[Mutation]) -> Vec<SuiteEntry> {
    builtin_configs()
        .iter()
        .map(|b| {
            let b = b.mutated(mutations);
            SuiteEntry {
                name: b.name,
                parts: b.parts.iter().map(check_reducible).collect(),
            }
        })
        .collect()
}
