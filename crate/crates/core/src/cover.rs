//! Compatibility graphs over Hamiltonian terms and clique covers of them.
//!
//! A clique of the compatibility graph is an independent set of its
//! complement, so every cover routine here colours the complement. The
//! complement is never stored: two vertices conflict when they are distinct
//! and not adjacent. Ties are always broken towards the lowest vertex index.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::BitString;
use crate::error::{Error, Result};
use crate::hamiltonian::Hamiltonian;
use crate::pauli::PauliProduct;
use crate::scalar::Coefficient;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// Full commutation.
    Fc,
    /// Qubit-wise commutation.
    Qwc,
}

impl Relation {
    pub fn holds(self, p: &PauliProduct, q: &PauliProduct) -> bool {
        match self {
            Relation::Fc => p.commutes_with(q),
            Relation::Qwc => p.qubitwise_commutes_with(q),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Fc => "fc",
            Relation::Qwc => "qwc",
        })
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "fc" => Ok(Relation::Fc),
            "qwc" => Ok(Relation::Qwc),
            other => Err(Error::Unsupported(format!("unknown relation `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Gc,
    Lf,
    Sl,
    Dsatur,
    Rlf,
    Exact,
}

impl Method {
    pub const ALL: [Method; 6] = [Method::Gc, Method::Lf, Method::Sl, Method::Dsatur, Method::Rlf, Method::Exact];
    pub const HEURISTICS: [Method; 5] = [Method::Gc, Method::Lf, Method::Sl, Method::Dsatur, Method::Rlf];
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Gc => "gc",
            Method::Lf => "lf",
            Method::Sl => "sl",
            Method::Dsatur => "dsatur",
            Method::Rlf => "rlf",
            Method::Exact => "exact",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gc" => Ok(Method::Gc),
            "lf" => Ok(Method::Lf),
            "sl" => Ok(Method::Sl),
            "dsatur" | "ds" => Ok(Method::Dsatur),
            "rlf" => Ok(Method::Rlf),
            "exact" => Ok(Method::Exact),
            other => Err(Error::Unsupported(format!("unknown method `{other}`"))),
        }
    }
}

/// Vertex-ordering rule for sequential greedy colouring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GreedyOrder {
    /// Input order.
    Gc,
    /// Complement degree, descending.
    Lf,
    /// Smallest-last elimination order of the complement.
    Sl,
    /// Dynamic: highest saturation in the complement first.
    Dsatur,
}

pub const DEFAULT_EXACT_LIMIT: usize = 64;

/// Symmetric adjacency over terms; vertex `i` is term `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatGraph {
    relation: Relation,
    adj: Vec<BitString>,
}

impl CompatGraph {
    /// Graph from an explicit undirected edge list. Self-loops are ignored.
    pub fn from_edges(n_vertices: usize, relation: Relation, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![BitString::zeros(n_vertices); n_vertices];
        for &(a, b) in edges {
            if a != b {
                adj[a].set(b, true);
                adj[b].set(a, true);
            }
        }
        CompatGraph { relation, adj }
    }

    pub fn n_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn relation(&self) -> Relation {
        self.relation
    }

    #[inline]
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].get(b)
    }

    pub fn neighbors(&self, v: usize) -> &BitString {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitString::count_ones).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.n_vertices();
        (0..n).flat_map(|a| (a + 1..n).filter(move |&b| self.adjacent(a, b)).map(move |b| (a, b))).collect()
    }

    #[inline]
    fn conflict(&self, a: usize, b: usize) -> bool {
        a != b && !self.adj[a].get(b)
    }

    fn complement_degree(&self, v: usize) -> usize {
        self.n_vertices() - 1 - self.degree(v)
    }

    /// Number of vertices of `set` that conflict with `v`.
    fn conflicts_in(&self, v: usize, set: &BitString) -> usize {
        let inside = set.count_ones();
        inside - self.adj[v].and_count(set) - usize::from(set.get(v))
    }

    /// `v` is adjacent to every member of `mask`.
    fn compatible_with(&self, v: usize, mask: &BitString) -> bool {
        let mut rest = mask.clone();
        rest.set(v, false);
        rest.is_subset_of(&self.adj[v])
    }
}

fn graph_row<T>(h: &Hamiltonian<T>, relation: Relation, i: usize) -> BitString
where
    T: Coefficient,
{
    let terms = h.terms();
    let mut row = BitString::zeros(terms.len());
    for (j, t) in terms.iter().enumerate() {
        if j != i && relation.holds(&terms[i].pauli, &t.pauli) {
            row.set(j, true);
        }
    }
    row
}

pub fn build_graph<T: Coefficient>(h: &Hamiltonian<T>, relation: Relation) -> CompatGraph {
    let adj = (0..h.len()).map(|i| graph_row(h, relation, i)).collect();
    CompatGraph { relation, adj }
}

/// Same result as [`build_graph`], with rows evaluated on the rayon pool.
pub fn build_graph_parallel<T: Coefficient>(h: &Hamiltonian<T>, relation: Relation) -> CompatGraph {
    let adj = (0..h.len()).into_par_iter().map(|i| graph_row(h, relation, i)).collect();
    CompatGraph { relation, adj }
}

/// Disjoint groups of vertex indices covering every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueCover {
    pub relation: Relation,
    pub method: Method,
    pub groups: Vec<Vec<usize>>,
}

impl CliqueCover {
    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn stats(&self) -> CoverStats {
        stats(self)
    }

    pub fn to_record(&self) -> CoverRecord {
        let s = self.stats();
        CoverRecord {
            relation: self.relation,
            method: self.method,
            groups: self.groups.clone(),
            stats: StatsRecord { count: s.group_count, max: s.max_size, std: s.size_stddev },
        }
    }
}

fn cover_from_colors(relation: Relation, method: Method, colors: &[usize]) -> CliqueCover {
    let k = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
    let mut groups = vec![Vec::new(); k];
    for (v, &c) in colors.iter().enumerate() {
        groups[c].push(v);
    }
    CliqueCover { relation, method, groups }
}

/// Sequential colouring of the complement in the given vertex order; each
/// vertex joins the lowest-index group it is compatible with.
pub fn cover_greedy(g: &CompatGraph, ordering: GreedyOrder) -> CliqueCover {
    let (colors, method) = match ordering {
        GreedyOrder::Gc => (color_in_order(g, 0..g.n_vertices()), Method::Gc),
        GreedyOrder::Lf => (color_in_order(g, largest_first_order(g)), Method::Lf),
        GreedyOrder::Sl => (color_in_order(g, smallest_last_order(g)), Method::Sl),
        GreedyOrder::Dsatur => (dsatur_colors(g), Method::Dsatur),
    };
    cover_from_colors(g.relation, method, &colors)
}

fn color_in_order(g: &CompatGraph, order: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let n = g.n_vertices();
    let mut colors = vec![usize::MAX; n];
    let mut masks: Vec<BitString> = Vec::new();
    for v in order {
        let c = masks.iter().position(|m| g.compatible_with(v, m)).unwrap_or_else(|| {
            masks.push(BitString::zeros(n));
            masks.len() - 1
        });
        masks[c].set(v, true);
        colors[v] = c;
    }
    colors
}

fn largest_first_order(g: &CompatGraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n_vertices()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.complement_degree(v)));
    order
}

fn smallest_last_order(g: &CompatGraph) -> Vec<usize> {
    let n = g.n_vertices();
    let mut degree: Vec<usize> = (0..n).map(|v| g.complement_degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| degree[v]).unwrap();
        removed[v] = true;
        order.push(v);
        for u in 0..n {
            if !removed[u] && g.conflict(u, v) {
                degree[u] -= 1;
            }
        }
    }
    order.reverse();
    order
}

fn dsatur_colors(g: &CompatGraph) -> Vec<usize> {
    let n = g.n_vertices();
    let mut colors = vec![usize::MAX; n];
    // blocked[v][c]: some complement neighbour of v already has colour c.
    let mut blocked: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut saturation = vec![0usize; n];
    let comp_degree: Vec<usize> = (0..n).map(|v| g.complement_degree(v)).collect();
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by(|&a, &b| (saturation[a], comp_degree[a]).cmp(&(saturation[b], comp_degree[b])).then(b.cmp(&a)))
            .unwrap();
        let c = (0..).find(|&c| !blocked[v].get(c).copied().unwrap_or(false)).unwrap();
        colors[v] = c;
        for u in 0..n {
            if colors[u] == usize::MAX && g.conflict(u, v) {
                if blocked[u].len() <= c {
                    blocked[u].resize(c + 1, false);
                }
                if !blocked[u][c] {
                    blocked[u][c] = true;
                    saturation[u] += 1;
                }
            }
        }
    }
    colors
}

/// Recursive Largest First on the complement.
///
/// Each class is seeded with the uncovered vertex of largest complement
/// degree inside the uncovered set, then repeatedly grown by the candidate
/// with the most complement neighbours among vertices already excluded from
/// the class.
pub fn cover_rlf(g: &CompatGraph) -> CliqueCover {
    let n = g.n_vertices();
    let mut uncovered = BitString::ones_prefix(n);
    let mut groups = Vec::new();
    while let Some(first) = uncovered.first_one() {
        let seed = uncovered
            .ones()
            .max_by(|&a, &b| g.conflicts_in(a, &uncovered).cmp(&g.conflicts_in(b, &uncovered)).then(b.cmp(&a)))
            .unwrap_or(first);
        let mut class = vec![seed];
        let mut candidates = uncovered.clone();
        candidates.and_assign(g.neighbors(seed));
        let mut excluded = uncovered.clone();
        excluded.and_not_assign(g.neighbors(seed));
        excluded.set(seed, false);
        while candidates.first_one().is_some() {
            let u = candidates
                .ones()
                .max_by(|&a, &b| g.conflicts_in(a, &excluded).cmp(&g.conflicts_in(b, &excluded)).then(b.cmp(&a)))
                .unwrap();
            class.push(u);
            candidates.set(u, false);
            let mut moved = candidates.clone();
            moved.and_not_assign(g.neighbors(u));
            candidates.and_not_assign(&moved);
            excluded.or_assign(&moved);
        }
        class.sort_unstable();
        for &v in &class {
            uncovered.set(v, false);
        }
        groups.push(class);
    }
    CliqueCover { relation: g.relation, method: Method::Rlf, groups }
}

/// Minimum clique cover by exact branch-and-bound colouring of the
/// complement (DSATUR branching, greedy clique lower bound).
pub fn cover_exact(g: &CompatGraph, limit: usize) -> Result<CliqueCover> {
    let n = g.n_vertices();
    if n > limit {
        return Err(Error::SizeBound { what: "exact cover vertex count", limit, got: n });
    }
    // Incumbent: the better of RLF and DSATUR, RLF on a tie.
    let mut upper = colors_from_groups(n, &cover_rlf(g).groups);
    let dsatur = dsatur_colors(g);
    let count = |c: &[usize]| c.iter().map(|&c| c + 1).max().unwrap_or(0);
    if count(&dsatur) < count(&upper) {
        upper = dsatur;
    }
    let upper_k = count(&upper);
    let lower = conflict_clique_bound(g);
    let mut search =
        ExactSearch { g, colors: vec![usize::MAX; n], classes: Vec::new(), best: upper, best_k: upper_k, lower };
    if upper_k > lower {
        search.descend(0);
    }
    Ok(cover_from_colors(g.relation, Method::Exact, &search.best))
}

fn colors_from_groups(n: usize, groups: &[Vec<usize>]) -> Vec<usize> {
    let mut colors = vec![0; n];
    for (c, group) in groups.iter().enumerate() {
        for &v in group {
            colors[v] = c;
        }
    }
    colors
}

/// Size of a greedily built set of pairwise conflicting vertices; no cover
/// can have fewer groups.
fn conflict_clique_bound(g: &CompatGraph) -> usize {
    let mut chosen: Vec<usize> = Vec::new();
    for v in largest_first_order(g) {
        if chosen.iter().all(|&u| g.conflict(u, v)) {
            chosen.push(v);
        }
    }
    chosen.len()
}

struct ExactSearch<'a> {
    g: &'a CompatGraph,
    colors: Vec<usize>,
    classes: Vec<BitString>,
    best: Vec<usize>,
    best_k: usize,
    lower: usize,
}

impl ExactSearch<'_> {
    fn done(&self) -> bool {
        self.best_k <= self.lower
    }

    fn descend(&mut self, colored: usize) {
        let n = self.g.n_vertices();
        if self.classes.len() >= self.best_k {
            return;
        }
        if colored == n {
            self.best = self.colors.clone();
            self.best_k = self.classes.len();
            return;
        }
        let v = self.pick_vertex();
        for c in 0..self.classes.len() {
            if self.g.compatible_with(v, &self.classes[c]) {
                self.colors[v] = c;
                self.classes[c].set(v, true);
                self.descend(colored + 1);
                self.classes[c].set(v, false);
                self.colors[v] = usize::MAX;
                if self.done() {
                    return;
                }
            }
        }
        if self.done() {
            return;
        }
        if self.classes.len() + 1 < self.best_k {
            let mut mask = BitString::zeros(n);
            mask.set(v, true);
            self.classes.push(mask);
            self.colors[v] = self.classes.len() - 1;
            self.descend(colored + 1);
            self.colors[v] = usize::MAX;
            self.classes.pop();
        }
    }

    fn pick_vertex(&self) -> usize {
        let n = self.g.n_vertices();
        let key = |v: usize| {
            let sat = self.classes.iter().filter(|m| !self.g.compatible_with(v, m)).count();
            (sat, self.g.complement_degree(v))
        };
        (0..n)
            .filter(|&v| self.colors[v] == usize::MAX)
            .max_by(|&a, &b| key(a).cmp(&key(b)).then(b.cmp(&a)))
            .expect("an uncoloured vertex remains")
    }
}

/// Runs the named method.
pub fn cover(g: &CompatGraph, method: Method, exact_limit: usize) -> Result<CliqueCover> {
    Ok(match method {
        Method::Gc => cover_greedy(g, GreedyOrder::Gc),
        Method::Lf => cover_greedy(g, GreedyOrder::Lf),
        Method::Sl => cover_greedy(g, GreedyOrder::Sl),
        Method::Dsatur => cover_greedy(g, GreedyOrder::Dsatur),
        Method::Rlf => cover_rlf(g),
        Method::Exact => cover_exact(g, exact_limit)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    OutOfRange { index: usize },
    Duplicate { index: usize },
    Missing { index: usize },
    Incompatible { group: usize, first: usize, second: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OutOfRange { index } => write!(f, "index {index} out of range"),
            Violation::Duplicate { index } => write!(f, "term {index} appears in more than one place"),
            Violation::Missing { index } => write!(f, "term {index} is not covered"),
            Violation::Incompatible { group, first, second } => {
                write!(f, "group {group}: terms {first} and {second} are not compatible")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoverReport {
    pub violations: Vec<Violation>,
}

impl CoverReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidCover(self.violations))
        }
    }
}

/// Checks disjointness, coverage, and the pairwise relation inside each
/// group directly against the Hamiltonian terms.
pub fn validate_cover<T: Coefficient>(h: &Hamiltonian<T>, cover: &CliqueCover, relation: Relation) -> CoverReport {
    let terms = h.terms();
    check_cover(terms.len(), &cover.groups, |a, b| relation.holds(&terms[a].pauli, &terms[b].pauli))
}

/// The same checks against graph adjacency.
pub fn validate_against_graph(g: &CompatGraph, cover: &CliqueCover) -> CoverReport {
    check_cover(g.n_vertices(), &cover.groups, |a, b| g.adjacent(a, b))
}

fn check_cover(n: usize, groups: &[Vec<usize>], compatible: impl Fn(usize, usize) -> bool) -> CoverReport {
    let mut violations = Vec::new();
    let mut seen = vec![false; n];
    for (gi, group) in groups.iter().enumerate() {
        let mut valid_members = Vec::with_capacity(group.len());
        for &v in group {
            if v >= n {
                violations.push(Violation::OutOfRange { index: v });
            } else if seen[v] {
                violations.push(Violation::Duplicate { index: v });
            } else {
                seen[v] = true;
                valid_members.push(v);
            }
        }
        for (a_pos, &a) in valid_members.iter().enumerate() {
            for &b in &valid_members[a_pos + 1..] {
                if !compatible(a, b) {
                    violations.push(Violation::Incompatible { group: gi, first: a, second: b });
                }
            }
        }
    }
    violations.extend((0..n).filter(|&v| !seen[v]).map(|index| Violation::Missing { index }));
    CoverReport { violations }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoverStats {
    pub group_count: usize,
    pub max_size: usize,
    /// Population standard deviation of the group sizes.
    pub size_stddev: f64,
}

pub fn stats(cover: &CliqueCover) -> CoverStats {
    let sizes: Vec<f64> = cover.groups.iter().map(|g| g.len() as f64).collect();
    let k = sizes.len();
    let max_size = cover.groups.iter().map(Vec::len).max().unwrap_or(0);
    let size_stddev = if k == 0 {
        0.0
    } else {
        let mean = sizes.iter().sum::<f64>() / k as f64;
        (sizes.iter().map(|s| (s - mean).powi(2)).sum::<f64>() / k as f64).sqrt()
    };
    CoverStats { group_count: k, max_size, size_stddev }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StatsRecord {
    pub count: usize,
    pub max: usize,
    pub std: f64,
}

/// Serialized form of a cover.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoverRecord {
    pub relation: Relation,
    pub method: Method,
    pub groups: Vec<Vec<usize>>,
    pub stats: StatsRecord,
}

impl From<CoverRecord> for CliqueCover {
    fn from(r: CoverRecord) -> Self {
        CliqueCover { relation: r.relation, method: r.method, groups: r.groups }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> CompatGraph {
        let edges: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        CompatGraph::from_edges(n, Relation::Fc, &edges)
    }

    fn all_methods(g: &CompatGraph) -> Vec<CliqueCover> {
        Method::ALL.iter().map(|&m| cover(g, m, DEFAULT_EXACT_LIMIT).unwrap()).collect()
    }

    #[test]
    fn complete_graph_is_one_group() {
        let g = complete(7);
        for c in all_methods(&g) {
            assert_eq!(c.len(), 1, "{}", c.method);
            assert!(validate_against_graph(&g, &c).is_valid());
        }
    }

    #[test]
    fn edgeless_graph_needs_every_vertex() {
        let g = CompatGraph::from_edges(5, Relation::Fc, &[]);
        for c in all_methods(&g) {
            assert_eq!(c.len(), 5, "{}", c.method);
        }
    }

    #[test]
    fn empty_graph() {
        let g = CompatGraph::from_edges(0, Relation::Fc, &[]);
        for c in all_methods(&g) {
            assert!(c.is_empty());
        }
    }

    #[test]
    fn exact_respects_limit() {
        let g = complete(5);
        assert!(matches!(cover_exact(&g, 4), Err(Error::SizeBound { .. })));
    }

    #[test]
    fn stats_of_two_triples() {
        let c = CliqueCover { relation: Relation::Fc, method: Method::Gc, groups: vec![vec![0, 1, 2], vec![3, 4, 5]] };
        let s = stats(&c);
        assert_eq!((s.group_count, s.max_size, s.size_stddev), (2, 3, 0.0));
        let c = CliqueCover { relation: Relation::Fc, method: Method::Gc, groups: vec![vec![0], vec![1, 2, 3]] };
        assert_eq!(stats(&c).size_stddev, 1.0);
    }

    #[test]
    fn check_reports_each_problem() {
        let g = CompatGraph::from_edges(4, Relation::Fc, &[(0, 1)]);
        let bad = CliqueCover { relation: Relation::Fc, method: Method::Gc, groups: vec![vec![0, 1, 2], vec![2, 9]] };
        let report = validate_against_graph(&g, &bad);
        assert_eq!(
            report.violations,
            vec![
                Violation::Incompatible { group: 0, first: 0, second: 2 },
                Violation::Incompatible { group: 0, first: 1, second: 2 },
                Violation::Duplicate { index: 2 },
                Violation::OutOfRange { index: 9 },
                Violation::Missing { index: 3 },
            ]
        );
        assert!(matches!(report.into_result(), Err(Error::InvalidCover(v)) if v.len() == 5));
    }

    #[test]
    fn names_parse() {
        for m in Method::ALL {
            assert_eq!(m.to_string().parse::<Method>().unwrap(), m);
        }
        assert_eq!("FC".parse::<Relation>().unwrap(), Relation::Fc);
        assert!("xx".parse::<Relation>().is_err());
    }
}
