//! Deciding isomorphism of graph Lie algebras.
//!
//! Two graph algebras are isomorphic iff there is a graded isomorphism between
//! them: any isomorphism carries `[n, n]` onto `[n', n']`, and the bracket
//! factors through `V ≅ n / [n, n]`, so the induced map on V together with its
//! action on wedges is again an isomorphism. A graded isomorphism is an
//! invertible `A: V -> V'` with `(A v_i) ∧ (A v_j) ∈ W'` for every non-edge
//! `{i, j}`; the Z-part block is then forced.
//!
//! [`graded_iso_search`] looks for such an `A` over a prime field by
//! backtracking over its columns. Three reductions keep the tree small:
//!
//! * Vertex scalings extend to automorphisms on both sides, so every column
//!   can be taken with first nonzero entry 1, and the first column assigned
//!   can further be taken with entries in `{0, 1}`.
//! * For dense graphs the dual condition is used instead: `∧²A` maps `W` into
//!   `W'` iff `∧²Aᵀ` maps the annihilator of `W'` into that of `W`, i.e. for
//!   every target edge `{a, b}` the wedge of rows `a` and `b` of `A` vanishes
//!   on the source non-edges. The search then assigns rows. Whichever
//!   formulation constrains more pairs is chosen.
//! * Vertices are assigned in a greedy order that front-loads constrained pairs.
//!
//! Candidates at each level are scanned in lexicographic order and the first
//! complete assignment is returned, so results are reproducible. With more
//! than one worker the tree is split at the first level and the first
//! subtree (in candidate order) that succeeds wins.

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::graph::{enumerate_graphs, graph_iso, Graph, VertexPermutation};
use crate::liealg::{GraphLieAlgebra, StructuralInvariants};
use crate::linalg::Matrix;
use crate::morphism::{extend_graded, GradedMap};

/// Largest vertex count for which [`graded_iso_search`] runs.
pub const MAX_SEARCH_VERTICES: usize = 5;

/// Isomorphism invariants `(dim, dim [n, n], dim center)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub dim: usize,
    pub derived_dim: usize,
    pub center_dim: usize,
}

impl Fingerprint {
    pub fn to_json(&self) -> Value {
        json!([self.dim, self.derived_dim, self.center_dim])
    }
}

impl From<StructuralInvariants> for Fingerprint {
    fn from(s: StructuralInvariants) -> Self {
        Fingerprint {
            dim: s.dim,
            derived_dim: s.derived_dim,
            center_dim: s.center_dim,
        }
    }
}

pub fn fingerprint(a: &GraphLieAlgebra) -> Fingerprint {
    a.structural_invariants().into()
}

/// Result of a graded search with its cost.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub witness: Option<GradedMap>,
    /// Partial assignments visited. Exact for a single worker; with several
    /// workers, cancelled subtrees make the count schedule-dependent.
    pub nodes: u64,
}

/// Searches for a graded Lie isomorphism `n(g) -> n(g')` over a prime field.
pub fn graded_iso_search(g: &Graph, g_prime: &Graph, field: Field) -> Result<Option<GradedMap>> {
    graded_iso_search_with(g, g_prime, field, 1).map(|o| o.witness)
}

/// [`graded_iso_search`] with an explicit worker count and node statistics.
pub fn graded_iso_search_with(
    g: &Graph,
    g_prime: &Graph,
    field: Field,
    jobs: usize,
) -> Result<SearchOutcome> {
    if jobs <= 1 {
        return search(g, g_prime, field, false);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidValue(format!("worker pool: {e}")))?;
    pool.install(|| search(g, g_prime, field, true))
}

fn search(g: &Graph, g_prime: &Graph, field: Field, parallel: bool) -> Result<SearchOutcome> {
    let p = field
        .modulus()
        .ok_or_else(|| Error::PrimeFieldRequired(field.to_string()))?;
    let n = g.n();
    if n > MAX_SEARCH_VERTICES {
        return Err(Error::TooLarge {
            what: "search space too large",
            n,
            limit: MAX_SEARCH_VERTICES,
        });
    }
    if n != g_prime.n() || g.edge_count() != g_prime.edge_count() {
        return Ok(SearchOutcome {
            witness: None,
            nodes: 0,
        });
    }
    let non_edges = g.non_edges();
    let by_columns = non_edges.len() >= g_prime.edge_count();
    let (pairs, coords) = if by_columns {
        (non_edges, g_prime.edges().to_vec())
    } else {
        (g_prime.edges().to_vec(), g.non_edges())
    };
    let kernel = Kernel::new(p, n, &pairs, coords);
    let nodes = AtomicU64::new(0);
    let found = kernel.run(parallel, &nodes);
    let witness = found.map(|m| {
        let a = if by_columns { m } else { transpose(&m) };
        let a = Matrix::from_rows(
            field,
            n,
            a.iter()
                .map(|r| r.iter().map(|&x| field.from_i64(x as i64)).collect())
                .collect(),
        )
        .expect("square matrix");
        let src = GraphLieAlgebra::new(g.clone(), field);
        let tgt = GraphLieAlgebra::new(g_prime.clone(), field);
        let map = extend_graded(&a, &src, &tgt).expect("search returns admissible matrices");
        assert!(
            map.is_lie_morphism() && map.is_invertible(),
            "search witness failed verification"
        );
        map
    });
    Ok(SearchOutcome {
        witness,
        nodes: nodes.into_inner(),
    })
}

fn transpose(m: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let n = m.len();
    (0..n).map(|i| (0..n).map(|j| m[j][i]).collect()).collect()
}

/// Finds an invertible `n x n` matrix `M` over `F_p` whose columns satisfy
/// `c_i[a] c_j[b] = c_i[b] c_j[a]` for every constrained pair `{i, j}` and
/// every coordinate pair `(a, b)`.
struct Kernel {
    p: u64,
    n: usize,
    /// `order[k]` is the column assigned at depth `k`.
    order: Vec<usize>,
    /// Depths `< k` whose columns are constrained against depth `k`.
    constrained: Vec<Vec<usize>>,
    coords: Vec<(usize, usize)>,
    first: Vec<Vec<u64>>,
    rest: Vec<Vec<u64>>,
}

impl Kernel {
    fn new(p: u64, n: usize, pairs: &[(usize, usize)], coords: Vec<(usize, usize)>) -> Kernel {
        let mut adj = vec![vec![false; n]; n];
        for &(i, j) in pairs {
            adj[i][j] = true;
            adj[j][i] = true;
        }
        let degree = |v: usize| adj[v].iter().filter(|&&b| b).count();
        let mut order: Vec<usize> = Vec::with_capacity(n);
        while order.len() < n {
            let next = (0..n)
                .filter(|v| !order.contains(v))
                .max_by_key(|&v| {
                    let links = order.iter().filter(|&&u| adj[u][v]).count();
                    (links, degree(v), std::cmp::Reverse(v))
                })
                .expect("unplaced vertex");
            order.push(next);
        }
        let constrained = (0..n)
            .map(|k| (0..k).filter(|&i| adj[order[i]][order[k]]).collect())
            .collect();
        let all = vectors(p, n);
        let normalized: Vec<Vec<u64>> = all
            .iter()
            .filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
            .cloned()
            .collect();
        let first = normalized
            .iter()
            .filter(|v| v.iter().all(|&x| x <= 1))
            .cloned()
            .collect();
        Kernel {
            p,
            n,
            order,
            constrained,
            coords,
            first,
            rest: normalized,
        }
    }

    fn run(&self, parallel: bool, nodes: &AtomicU64) -> Option<Vec<Vec<u64>>> {
        if self.n == 0 {
            nodes.fetch_add(1, Ordering::Relaxed);
            return Some(vec![]);
        }
        let subtree = |c0: &Vec<u64>| {
            let mut state = State {
                columns: vec![c0.clone()],
                echelon: vec![],
                nodes: 1,
            };
            state
                .echelon
                .push(reduce(&[], c0.clone(), self.p).expect("nonzero"));
            let ok = self.completable(&state.columns) && self.descend(&mut state);
            nodes.fetch_add(state.nodes, Ordering::Relaxed);
            ok.then(|| self.assemble(&state.columns))
        };
        if parallel {
            self.first.par_iter().find_map_first(subtree)
        } else {
            self.first.iter().find_map(subtree)
        }
    }

    fn assemble(&self, columns: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let mut m = vec![vec![0; self.n]; self.n];
        for (k, col) in columns.iter().enumerate() {
            for (row, &x) in col.iter().enumerate() {
                m[row][self.order[k]] = x;
            }
        }
        m
    }

    fn admissible(&self, columns: &[Vec<u64>], k: usize, x: &[u64]) -> bool {
        let p = self.p;
        self.constrained[k].iter().all(|&i| {
            let c = &columns[i];
            self.coords
                .iter()
                .all(|&(a, b)| c[a] * x[b] % p == c[b] * x[a] % p)
        })
    }

    /// Candidates for depth `t` given the assigned columns: a subspace, since
    /// each constraint is linear in the new column.
    fn admissible_space(&self, columns: &[Vec<u64>], t: usize) -> Vec<Vec<u64>> {
        let p = self.p;
        let mut equations = Vec::new();
        for &i in self.constrained[t].iter().filter(|&&i| i < columns.len()) {
            let c = &columns[i];
            for &(a, b) in &self.coords {
                let mut e = vec![0; self.n];
                e[b] = c[a];
                e[a] = (e[a] + p - c[b]) % p;
                equations.push(e);
            }
        }
        null_space_mod(equations, self.n, p)
    }

    /// Forward check: for every set `U` of unassigned depths, the assigned
    /// columns plus the admissible subspaces of `U` must span `|U|` new
    /// dimensions, or no independent completion exists.
    fn completable(&self, columns: &[Vec<u64>]) -> bool {
        let k = columns.len();
        let spaces: Vec<Vec<Vec<u64>>> = (k..self.n)
            .map(|t| self.admissible_space(columns, t))
            .collect();
        (1u32..1 << spaces.len()).all(|mask| {
            let mut vectors = columns.to_vec();
            for (s, space) in spaces.iter().enumerate() {
                if mask >> s & 1 == 1 {
                    vectors.extend(space.iter().cloned());
                }
            }
            rank_mod(vectors, self.p) >= k + mask.count_ones() as usize
        })
    }

    fn descend(&self, state: &mut State) -> bool {
        let k = state.columns.len();
        if k == self.n {
            return true;
        }
        for x in &self.rest {
            if !self.admissible(&state.columns, k, x) {
                continue;
            }
            let Some(reduced) = reduce(&state.echelon, x.clone(), self.p) else {
                continue;
            };
            state.nodes += 1;
            state.columns.push(x.clone());
            state.echelon.push(reduced);
            if self.completable(&state.columns) && self.descend(state) {
                return true;
            }
            state.columns.pop();
            state.echelon.pop();
        }
        false
    }
}

struct State {
    columns: Vec<Vec<u64>>,
    echelon: Vec<(usize, Vec<u64>)>,
    nodes: u64,
}

/// Reduces `x` against echelon rows (each with a unit pivot); returns the new
/// row with a unit pivot, or `None` if `x` lies in their span.
fn reduce(echelon: &[(usize, Vec<u64>)], mut x: Vec<u64>, p: u64) -> Option<(usize, Vec<u64>)> {
    for (pivot, row) in echelon {
        let c = x[*pivot];
        if c != 0 {
            for (xi, ri) in x.iter_mut().zip(row) {
                *xi = (*xi + p - c * ri % p) % p;
            }
        }
    }
    let pivot = x.iter().position(|&v| v != 0)?;
    let inv = pow_mod(x[pivot], p - 2, p);
    for xi in x.iter_mut() {
        *xi = *xi * inv % p;
    }
    Some((pivot, x))
}

fn rank_mod(vectors: Vec<Vec<u64>>, p: u64) -> usize {
    let mut echelon = Vec::new();
    for v in vectors {
        if let Some(row) = reduce(&echelon, v, p) {
            echelon.push(row);
        }
    }
    echelon.len()
}

/// Kernel of the rows `equations` in `F_p^n`.
fn null_space_mod(equations: Vec<Vec<u64>>, n: usize, p: u64) -> Vec<Vec<u64>> {
    let mut echelon: Vec<(usize, Vec<u64>)> = Vec::new();
    for e in equations {
        if let Some(row) = reduce(&echelon, e, p) {
            // keep rows fully reduced so the kernel can be read off
            for (_, other) in echelon.iter_mut() {
                let c = other[row.0];
                if c != 0 {
                    for (o, r) in other.iter_mut().zip(&row.1) {
                        *o = (*o + p - c * r % p) % p;
                    }
                }
            }
            echelon.push(row);
        }
    }
    (0..n)
        .filter(|c| echelon.iter().all(|(pivot, _)| pivot != c))
        .map(|free| {
            let mut v = vec![0; n];
            v[free] = 1;
            for (pivot, row) in &echelon {
                v[*pivot] = (p - row[free]) % p;
            }
            v
        })
        .collect()
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// All nonzero vectors of `F_p^n` in lexicographic order.
fn vectors(p: u64, n: usize) -> Vec<Vec<u64>> {
    let total = p.pow(n as u32);
    (1..total)
        .map(|mut code| {
            let mut v = vec![0; n];
            for slot in v.iter_mut().rev() {
                *slot = code % p;
                code /= p;
            }
            v
        })
        .collect()
}

/// Which stage settled the Lie isomorphism question.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    Fingerprint,
    Search,
}

/// Graph isomorphism and Lie isomorphism verdicts for one pair, side by side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoReport {
    pub graphs: (Graph, Graph),
    pub field: Field,
    pub fingerprints: (Fingerprint, Fingerprint),
    pub graph_witness: Option<VertexPermutation>,
    pub lie_witness: Option<GradedMap>,
    pub decided_by: Decision,
    pub search_nodes: u64,
}

impl IsoReport {
    pub fn graph_iso(&self) -> bool {
        self.graph_witness.is_some()
    }

    pub fn lie_iso(&self) -> bool {
        self.lie_witness.is_some()
    }

    pub fn consistent(&self) -> bool {
        self.graph_iso() == self.lie_iso()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "graphs": [self.graphs.0.to_json(), self.graphs.1.to_json()],
            "field": self.field.to_string(),
            "graph_iso": self.graph_iso(),
            "lie_iso": self.lie_iso(),
            "fingerprints": [self.fingerprints.0.to_json(), self.fingerprints.1.to_json()],
            "decided_by": match self.decided_by {
                Decision::Fingerprint => "fingerprint",
                Decision::Search => "search",
            },
            "search_nodes": self.search_nodes,
            "graph_witness": self.graph_witness.as_ref().map(|p| json!(p.images())),
            "lie_witness": self.lie_witness.as_ref().map(GradedMap::to_json),
        })
    }
}

/// Runs both isomorphism tests on a pair of graphs.
///
/// The Lie side never consults the graph side: fingerprints first, then the
/// graded search. Both witnesses are checked before the report is returned.
pub fn lie_iso_equivalent(g: &Graph, g_prime: &Graph, field: Field) -> Result<IsoReport> {
    lie_iso_equivalent_with(g, g_prime, field, 1)
}

pub fn lie_iso_equivalent_with(
    g: &Graph,
    g_prime: &Graph,
    field: Field,
    jobs: usize,
) -> Result<IsoReport> {
    if field.modulus().is_none() {
        return Err(Error::PrimeFieldRequired(field.to_string()));
    }
    let fp = (
        fingerprint(&GraphLieAlgebra::new(g.clone(), field)),
        fingerprint(&GraphLieAlgebra::new(g_prime.clone(), field)),
    );
    let graph_witness = graph_iso(g, g_prime);
    if let Some(w) = &graph_witness {
        assert!(
            w.is_isomorphism(g, g_prime),
            "graph witness failed verification"
        );
    }
    let (lie_witness, decided_by, search_nodes) = if fp.0 != fp.1 {
        (None, Decision::Fingerprint, 0)
    } else {
        let outcome = graded_iso_search_with(g, g_prime, field, jobs)?;
        (outcome.witness, Decision::Search, outcome.nodes)
    };
    Ok(IsoReport {
        graphs: (g.clone(), g_prime.clone()),
        field,
        fingerprints: fp,
        graph_witness,
        lie_witness,
        decided_by,
        search_nodes,
    })
}

/// Summary of an exhaustive equivalence run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub field: Field,
    pub n_max: usize,
    pub classes: usize,
    pub pairs_tested: usize,
    pub iso_pairs: usize,
    pub decided_by_fingerprint: usize,
    pub max_search_nodes: u64,
    pub total_search_nodes: u64,
    /// Serialized reports of inconsistent pairs; the run stops at the first one.
    pub violations: Vec<Value>,
    pub wall_time_ms: u128,
}

impl TheoremReport {
    pub fn to_json(&self) -> Value {
        json!({
            "pairs_tested": self.pairs_tested,
            "iso_pairs": self.iso_pairs,
            "violations": self.violations,
            "field": self.field.to_string(),
            "n_max": self.n_max,
            "classes": self.classes,
            "decided_by_fingerprint": self.decided_by_fingerprint,
            "max_search_nodes": self.max_search_nodes,
            "total_search_nodes": self.total_search_nodes,
            "wall_time_ms": self.wall_time_ms as u64,
        })
    }
}

/// Reverses vertex labels; applied to the second graph of every pair so that
/// identical classes are compared through a nontrivial relabeling.
pub fn reversal(n: usize) -> VertexPermutation {
    VertexPermutation::new((0..n).rev().collect()).expect("reversal")
}

/// Compares graph isomorphism and Lie isomorphism on every unordered pair
/// (diagonal included) of isomorphism classes with `1 <= n <= n_max`.
pub fn theorem_check(n_max: usize, field: Field, jobs: usize) -> Result<TheoremReport> {
    if n_max > MAX_SEARCH_VERTICES {
        return Err(Error::TooLarge {
            what: "search space too large",
            n: n_max,
            limit: MAX_SEARCH_VERTICES,
        });
    }
    if field.modulus().is_none() {
        return Err(Error::PrimeFieldRequired(field.to_string()));
    }
    let start = Instant::now();
    let mut classes = Vec::new();
    for n in 1..=n_max {
        classes.extend(enumerate_graphs(n)?);
    }
    let mut report = TheoremReport {
        field,
        n_max,
        classes: classes.len(),
        pairs_tested: 0,
        iso_pairs: 0,
        decided_by_fingerprint: 0,
        max_search_nodes: 0,
        total_search_nodes: 0,
        violations: vec![],
        wall_time_ms: 0,
    };
    'pairs: for (i, g) in classes.iter().enumerate() {
        for h in &classes[i..] {
            let h = h.permute(&reversal(h.n()))?;
            let r = lie_iso_equivalent_with(g, &h, field, jobs)?;
            report.pairs_tested += 1;
            report.iso_pairs += usize::from(r.lie_iso() && r.graph_iso());
            report.decided_by_fingerprint += usize::from(r.decided_by == Decision::Fingerprint);
            report.max_search_nodes = report.max_search_nodes.max(r.search_nodes);
            report.total_search_nodes += r.search_nodes;
            if !r.consistent() {
                report.violations.push(r.to_json());
                break 'pairs;
            }
        }
    }
    report.wall_time_ms = start.elapsed().as_millis();
    Ok(report)
}

/// One isomorphism class in a [`Classification`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassEntry {
    pub graph: Graph,
    pub fingerprint: Fingerprint,
}

/// A graded search between two classes with the same vertex count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    pub pair: (usize, usize),
    /// `None` when the vertex count is beyond [`MAX_SEARCH_VERTICES`].
    pub lie_iso: Option<bool>,
    pub search_nodes: u64,
}

/// Graph algebras of a fixed total dimension `|S| + |E|`, one per class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub total: usize,
    pub field: Field,
    pub classes: Vec<ClassEntry>,
    pub separations: Vec<Separation>,
}

impl Classification {
    pub fn fingerprints_distinct(&self) -> bool {
        let mut seen: Vec<Fingerprint> = self.classes.iter().map(|c| c.fingerprint).collect();
        seen.sort();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// True when no search found two classes isomorphic.
    pub fn separated(&self) -> bool {
        self.separations.iter().all(|s| s.lie_iso != Some(true))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "total": self.total,
            "field": self.field.to_string(),
            "count": self.classes.len(),
            "classes": self.classes.iter().map(|c| json!({
                "graph": c.graph.to_json(),
                "fingerprint": c.fingerprint.to_json(),
            })).collect::<Vec<_>>(),
            "fingerprints_distinct": self.fingerprints_distinct(),
            "separations": self.separations.iter().map(|s| json!({
                "pair": [s.pair.0, s.pair.1],
                "lie_iso": s.lie_iso,
                "search_nodes": s.search_nodes,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Lists the graph algebras of dimension `total` with their fingerprints and
/// runs the graded search on every pair of classes sharing a vertex count.
pub fn classify_by_total(total: usize, field: Field, jobs: usize) -> Result<Classification> {
    if field.modulus().is_none() {
        return Err(Error::PrimeFieldRequired(field.to_string()));
    }
    let classes: Vec<ClassEntry> = crate::graph::graphs_with_total(total)?
        .into_iter()
        .map(|graph| {
            let fingerprint = fingerprint(&GraphLieAlgebra::new(graph.clone(), field));
            ClassEntry { graph, fingerprint }
        })
        .collect();
    let mut separations = Vec::new();
    for (i, a) in classes.iter().enumerate() {
        for (j, b) in classes.iter().enumerate().skip(i + 1) {
            if a.graph.n() != b.graph.n() {
                continue;
            }
            let sep = if a.graph.n() > MAX_SEARCH_VERTICES {
                Separation {
                    pair: (i, j),
                    lie_iso: None,
                    search_nodes: 0,
                }
            } else {
                let o = graded_iso_search_with(&a.graph, &b.graph, field, jobs)?;
                Separation {
                    pair: (i, j),
                    lie_iso: Some(o.witness.is_some()),
                    search_nodes: o.nodes,
                }
            };
            separations.push(sep);
        }
    }
    Ok(Classification {
        total,
        field,
        classes,
        separations,
    })
}
