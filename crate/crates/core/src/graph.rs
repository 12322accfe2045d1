//! Finite simple graphs on the vertex set `0..n`.
//!
//! Everything here is exhaustive and meant for small graphs: canonical forms
//! scan vertex relabelings (with twin pruning), and enumeration up to
//! isomorphism extends canonical representatives one vertex at a time.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Largest vertex count accepted by [`canonical_form`].
pub const MAX_CANONICAL_VERTICES: usize = 10;
/// Largest vertex count accepted by [`enumerate_graphs`].
pub const MAX_ENUMERATION_VERTICES: usize = 7;
/// Largest `|S| + |E|` accepted by [`graphs_with_total`].
pub const MAX_TOTAL_DIMENSION: usize = 10;

/// A simple undirected graph. Edges are stored as `(i, j)` with `i < j`,
/// sorted lexicographically; that order is the edge indexing used downstream.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Validates and normalizes an edge list. Endpoints may be given in either order.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut out = Vec::new();
        for (k, (a, b)) in edges.into_iter().enumerate() {
            if a == b {
                return Err(Error::InvalidValue(format!(
                    "loop at vertex {a} (edge {k})"
                )));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidValue(format!(
                    "edge {k} ({a}, {b}) has an endpoint outside 0..{n}"
                )));
            }
            out.push((a.min(b), a.max(b)));
        }
        out.sort_unstable();
        if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidValue(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        Ok(Graph { n, edges: out })
    }

    pub fn empty(n: usize) -> Graph {
        Graph { n, edges: vec![] }
    }

    pub fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|j| (0..j).map(move |i| (i, j)))).expect("complete graph")
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path graph")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least three vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle graph")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Position of `{i, j}` in the lexicographic edge order.
    pub fn edge_index(&self, i: usize, j: usize) -> Option<usize> {
        if i == j {
            return None;
        }
        self.edges.binary_search(&(i.min(j), i.max(j))).ok()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edge_index(i, j).is_some()
    }

    /// Unordered vertex pairs `(i, j)`, `i < j`, that are not edges, lexicographically.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.has_edge(i, j))
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    pub fn isolated_count(&self) -> usize {
        self.degree_sequence().iter().filter(|&&d| d == 0).count()
    }

    /// Relabels vertex `v` as `sigma(v)`.
    pub fn permute(&self, sigma: &VertexPermutation) -> Result<Graph> {
        if sigma.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "permutation of {} points applied to a graph on {} vertices",
                sigma.len(),
                self.n
            )));
        }
        Graph::new(
            self.n,
            self.edges
                .iter()
                .map(|&(a, b)| (sigma.apply(a), sigma.apply(b))),
        )
    }

    /// Vertices of `other` are shifted past the vertices of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        Graph::new(
            self.n + other.n,
            self.edges
                .iter()
                .copied()
                .chain(other.edges.iter().map(|&(a, b)| (a + shift, b + shift))),
        )
        .expect("disjoint union of simple graphs")
    }

    fn neighbor_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask adjacency needs n <= 64");
        let mut masks = vec![0u64; self.n];
        for &(a, b) in &self.edges {
            masks[a] |= 1 << b;
            masks[b] |= 1 << a;
        }
        masks
    }

    /// `{"n": n, "edges": [[i, j], ...]}` with `i < j`, lexicographic.
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "edges": self.edges.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &Value) -> Result<Graph> {
        let n =
            value.get("n").and_then(Value::as_u64).ok_or_else(|| {
                Error::Json("graph needs a non-negative integer field \"n\"".into())
            })? as usize;
        let edges = value
            .get("edges")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Json("graph needs an array field \"edges\"".into()))?;
        let mut pairs = Vec::with_capacity(edges.len());
        for (k, e) in edges.iter().enumerate() {
            let pair = e
                .as_array()
                .filter(|p| p.len() == 2)
                .and_then(|p| Some((p[0].as_u64()? as usize, p[1].as_u64()? as usize)))
                .ok_or_else(|| {
                    Error::Json(format!("edges[{k}] is not a pair of vertex indices"))
                })?;
            pairs.push(pair);
        }
        Graph::new(n, pairs)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "G(n={}; {})", self.n, edges.join(" "))
    }
}

/// Parses either the edge-list text format or the JSON format.
///
/// Edge-list text: the first non-blank line is `vertices <n>`, every later
/// non-blank line is `i j`. Lines starting with `#` are ignored.
pub fn parse_graph(input: &str) -> Result<Graph> {
    if input.trim_start().starts_with('{') {
        let value: Value = serde_json::from_str(input)?;
        return Graph::from_json(&value);
    }
    let err = |line: usize, message: &str| Error::Parse {
        line,
        message: message.to_string(),
    };
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let Some(n) = n else {
            match tokens.as_slice() {
                ["vertices", count] => {
                    n = Some(
                        count
                            .parse()
                            .map_err(|_| err(line_no, "malformed vertex count"))?,
                    );
                    continue;
                }
                _ => return Err(err(line_no, "expected \"vertices <n>\"")),
            }
        };
        let [a, b] = tokens.as_slice() else {
            return Err(err(line_no, "malformed line"));
        };
        let (a, b): (usize, usize) = match (a.parse(), b.parse()) {
            (Ok(a), Ok(b)) => (a, b),
            _ => return Err(err(line_no, "malformed line")),
        };
        if a == b {
            return Err(err(line_no, "loop"));
        }
        if a >= n || b >= n {
            return Err(err(line_no, "endpoint out of range"));
        }
        let e = (a.min(b), a.max(b));
        if edges.contains(&e) {
            return Err(err(line_no, "duplicate edge"));
        }
        edges.push(e);
    }
    let n = n.ok_or_else(|| err(1, "missing \"vertices <n>\" header"))?;
    Graph::new(n, edges)
}

/// A bijection of `0..n`, stored as its image sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexPermutation(Vec<usize>);

impl VertexPermutation {
    pub fn new(images: Vec<usize>) -> Result<VertexPermutation> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidValue(format!(
                    "{images:?} is not a permutation"
                )));
            }
        }
        Ok(VertexPermutation(images))
    }

    pub fn identity(n: usize) -> VertexPermutation {
        VertexPermutation((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &VertexPermutation) -> VertexPermutation {
        assert_eq!(
            self.len(),
            other.len(),
            "composing permutations of different sizes"
        );
        VertexPermutation(other.0.iter().map(|&v| self.0[v]).collect())
    }

    pub fn inverse(&self) -> VertexPermutation {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        VertexPermutation(inv)
    }

    /// True iff `self` carries the edge set of `g` exactly onto that of `h`.
    pub fn is_isomorphism(&self, g: &Graph, h: &Graph) -> bool {
        g.n == self.len()
            && h.n == self.len()
            && g.edge_count() == h.edge_count()
            && g.edges
                .iter()
                .all(|&(a, b)| h.has_edge(self.apply(a), self.apply(b)))
    }

    /// Parses `"2,0,1"` or a JSON array `[2,0,1]`.
    pub fn parse(text: &str) -> Result<VertexPermutation> {
        let body = text.trim().trim_start_matches('[').trim_end_matches(']');
        if body.trim().is_empty() {
            return VertexPermutation::new(vec![]);
        }
        let images = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidValue(format!("permutation entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        VertexPermutation::new(images)
    }
}

/// The canonical bitstring of `g`.
///
/// Bits enumerate the upper triangle column by column: `(0,1), (0,2), (1,2),
/// (0,3), ...`, `1` meaning adjacent. The canonical form is the
/// lexicographically smallest such string over all relabelings, so two graphs
/// are isomorphic iff their canonical forms agree.
pub fn canonical_form(g: &Graph) -> Result<String> {
    canonical_labeling(g).map(|(bits, _)| bits)
}

/// The canonical bitstring together with a relabeling `sigma` such that
/// `g.permute(&sigma)` realizes it.
pub fn canonical_labeling(g: &Graph) -> Result<(String, VertexPermutation)> {
    if g.n > MAX_CANONICAL_VERTICES {
        return Err(Error::TooLarge {
            what: "too large for exhaustive canonicalization",
            n: g.n,
            limit: MAX_CANONICAL_VERTICES,
        });
    }
    let mut search = CanonSearch {
        n: g.n,
        adj: g.neighbor_masks(),
        order: Vec::with_capacity(g.n),
        bits: Vec::with_capacity(g.n * g.n.saturating_sub(1) / 2),
        best: None,
    };
    search.descend(0);
    let (bits, order) = search.best.expect("at least one labeling");
    // order[k] is the old vertex placed at position k; sigma sends old -> new.
    let mut sigma = vec![0; g.n];
    for (pos, &old) in order.iter().enumerate() {
        sigma[old] = pos;
    }
    let text = bits.iter().map(|&b| if b { '1' } else { '0' }).collect();
    Ok((text, VertexPermutation(sigma)))
}

struct CanonSearch {
    n: usize,
    adj: Vec<u64>,
    order: Vec<usize>,
    bits: Vec<bool>,
    best: Option<(Vec<bool>, Vec<usize>)>,
}

impl CanonSearch {
    fn descend(&mut self, used: u64) {
        let k = self.order.len();
        if k == self.n {
            if self.best.as_ref().is_none_or(|(b, _)| self.bits < *b) {
                self.best = Some((self.bits.clone(), self.order.clone()));
            }
            return;
        }
        // Unplaced twins are exchanged by an automorphism fixing every placed
        // vertex, so only the first of each twin class needs a subtree.
        let mut tried: u64 = 0;
        for v in 0..self.n {
            if used & (1 << v) != 0 {
                continue;
            }
            let is_twin = (0..self.n).any(|u| {
                tried & (1 << u) != 0 && self.adj[u] & !(1 << v) == self.adj[v] & !(1 << u)
            });
            if is_twin {
                continue;
            }
            tried |= 1 << v;
            let start = self.bits.len();
            for &u in &self.order {
                self.bits.push(self.adj[v] & (1 << u) != 0);
            }
            let keep = match &self.best {
                None => true,
                Some((best, _)) => self.bits[..] <= best[..self.bits.len()],
            };
            if keep {
                self.order.push(v);
                self.descend(used | (1 << v));
                self.order.pop();
            }
            self.bits.truncate(start);
        }
    }
}

/// Returns a vertex bijection carrying edges of `g` onto edges of `h`, if one exists.
///
/// Backtracking in vertex order with degree and adjacency consistency checks;
/// the first bijection found (in lexicographic order of images) is returned.
pub fn graph_iso(g: &Graph, h: &Graph) -> Option<VertexPermutation> {
    let mut out = None;
    iso_backtrack(g, h, &mut |p| {
        out = Some(p.clone());
        false
    });
    out
}

/// All automorphisms of `g`, in lexicographic order of image sequences.
pub fn automorphisms(g: &Graph) -> Vec<VertexPermutation> {
    let mut out = Vec::new();
    iso_backtrack(g, g, &mut |p| {
        out.push(p.clone());
        true
    });
    out
}

/// Calls `visit` on each isomorphism `g -> h` until it returns `false`.
fn iso_backtrack(g: &Graph, h: &Graph, visit: &mut dyn FnMut(&VertexPermutation) -> bool) {
    if g.n != h.n || g.edge_count() != h.edge_count() {
        return;
    }
    let (dg, dh) = (g.degree_sequence(), h.degree_sequence());
    let mut sorted_g = dg.clone();
    let mut sorted_h = dh.clone();
    sorted_g.sort_unstable();
    sorted_h.sort_unstable();
    if sorted_g != sorted_h {
        return;
    }
    let adj_g: Vec<Vec<bool>> = (0..g.n)
        .map(|i| (0..g.n).map(|j| g.has_edge(i, j)).collect())
        .collect();
    let adj_h: Vec<Vec<bool>> = (0..h.n)
        .map(|i| (0..h.n).map(|j| h.has_edge(i, j)).collect())
        .collect();

    struct State<'a> {
        adj_g: Vec<Vec<bool>>,
        adj_h: Vec<Vec<bool>>,
        dg: Vec<usize>,
        dh: Vec<usize>,
        images: Vec<usize>,
        used: Vec<bool>,
        visit: &'a mut dyn FnMut(&VertexPermutation) -> bool,
    }

    fn go(s: &mut State<'_>) -> bool {
        let k = s.images.len();
        if k == s.dg.len() {
            return (s.visit)(&VertexPermutation(s.images.clone()));
        }
        for t in 0..s.dh.len() {
            if s.used[t] || s.dh[t] != s.dg[k] {
                continue;
            }
            let consistent = s
                .images
                .iter()
                .enumerate()
                .all(|(i, &ti)| s.adj_g[k][i] == s.adj_h[t][ti]);
            if !consistent {
                continue;
            }
            s.used[t] = true;
            s.images.push(t);
            let more = go(s);
            s.images.pop();
            s.used[t] = false;
            if !more {
                return false;
            }
        }
        true
    }

    let n = g.n;
    let mut state = State {
        adj_g,
        adj_h,
        dg,
        dh,
        images: Vec::with_capacity(n),
        used: vec![false; n],
        visit,
    };
    go(&mut state);
}

/// One canonical representative per isomorphism class of graphs on `n` vertices.
///
/// Classes on `n` vertices are generated by attaching a new vertex, with every
/// possible neighborhood, to each representative on `n - 1` vertices, then
/// deduplicating by canonical form. Every graph arises this way because
/// deleting its last vertex leaves a graph isomorphic to some smaller
/// representative. Output is sorted by edge count, then canonical form.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::TooLarge {
            what: "graph enumeration",
            n,
            limit: MAX_ENUMERATION_VERTICES,
        });
    }
    let mut reps = vec![Graph::empty(0)];
    for size in 1..=n {
        let classes: BTreeMap<(usize, String), Graph> = reps
            .par_iter()
            .flat_map_iter(|base| {
                (0u64..1 << (size - 1)).map(move |mask| {
                    let new = size - 1;
                    let extra = (0..new).filter(|&u| mask & (1 << u) != 0).map(|u| (u, new));
                    let g = Graph::new(size, base.edges.iter().copied().chain(extra))
                        .expect("extension of a simple graph");
                    canonical_representative(&g)
                })
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        reps = classes.into_values().collect();
    }
    Ok(reps)
}

/// One representative per isomorphism class of graphs on `n` vertices with exactly `m` edges.
pub fn enumerate_graphs_with_edges(n: usize, m: usize) -> Result<Vec<Graph>> {
    if n > MAX_CANONICAL_VERTICES {
        return Err(Error::TooLarge {
            what: "too large for exhaustive canonicalization",
            n,
            limit: MAX_CANONICAL_VERTICES,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut classes = BTreeMap::new();
    if m > pairs.len() {
        return Ok(vec![]);
    }
    let mut chosen: Vec<usize> = (0..m).collect();
    loop {
        let g = Graph::new(n, chosen.iter().map(|&k| pairs[k])).expect("edge subset");
        let (key, rep) = canonical_representative(&g);
        classes.entry(key).or_insert(rep);
        // next m-combination of pairs, lexicographic
        let Some(i) = (0..m).rev().find(|&i| chosen[i] < pairs.len() - m + i) else {
            break;
        };
        chosen[i] += 1;
        for j in i + 1..m {
            chosen[j] = chosen[j - 1] + 1;
        }
    }
    Ok(classes.into_values().collect())
}

/// All isomorphism classes of graphs with `|S| + |E| = d`, over `|S| = 1..=d`.
pub fn graphs_with_total(d: usize) -> Result<Vec<Graph>> {
    if d > MAX_TOTAL_DIMENSION {
        return Err(Error::TooLarge {
            what: "graph count by total dimension",
            n: d,
            limit: MAX_TOTAL_DIMENSION,
        });
    }
    let mut out = Vec::new();
    for n in 1..=d {
        out.extend(enumerate_graphs_with_edges(n, d - n)?);
    }
    Ok(out)
}

fn canonical_representative(g: &Graph) -> ((usize, String), Graph) {
    let (bits, sigma) = canonical_labeling(g).expect("small graph");
    let rep = g.permute(&sigma).expect("permutation of matching size");
    ((g.edge_count(), bits), rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::path(3)
    }

    #[test]
    fn parse_edge_lists() {
        let k2 = parse_graph("vertices 2\n0 1").unwrap();
        assert_eq!(k2, Graph::complete(2));
        let path = parse_graph("vertices 3\n0 1\n1 2\n").unwrap();
        assert_eq!(path, p3());
        assert_eq!(parse_graph("vertices 4\n").unwrap(), Graph::empty(4));
        assert_eq!(
            parse_graph("# comment\nvertices 2\n\n1 0").unwrap(),
            Graph::complete(2)
        );
    }

    #[test]
    fn parse_errors_name_the_line() {
        let e = parse_graph("vertices 2\n0 0").unwrap_err();
        assert_eq!(e.to_string(), "loop at line 2");
        assert_eq!(
            parse_graph("vertices 2\n0 2").unwrap_err().to_string(),
            "endpoint out of range at line 2"
        );
        assert_eq!(
            parse_graph("vertices 3\n0 1\n1 0").unwrap_err().to_string(),
            "duplicate edge at line 3"
        );
        assert_eq!(
            parse_graph("vertices 3\n0 1 2").unwrap_err().to_string(),
            "malformed line at line 2"
        );
        assert_eq!(
            parse_graph("vertices x").unwrap_err().to_string(),
            "malformed vertex count at line 1"
        );
        assert!(parse_graph("0 1").is_err());
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn json_format() {
        let g = parse_graph(r#"{"n": 3, "edges": [[2, 1], [0, 1]]}"#).unwrap();
        assert_eq!(g, p3());
        assert_eq!(g.to_json().to_string(), r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
        assert!(parse_graph(r#"{"n": 2, "edges": [[1, 1]]}"#).is_err());
        assert!(parse_graph(r#"{"n": 2, "edges": [[0, 1], [1, 0]]}"#).is_err());
        assert!(parse_graph(r#"{"edges": []}"#).is_err());
        assert!(parse_graph(r#"{"n": 2, "edges": [[0]]}"#).is_err());
    }

    #[test]
    fn canonical_forms() {
        let k2 = Graph::complete(2);
        assert_eq!(canonical_form(&k2).unwrap(), "1");
        let swapped = k2
            .permute(&VertexPermutation::new(vec![1, 0]).unwrap())
            .unwrap();
        assert_eq!(canonical_form(&swapped).unwrap(), "1");

        let relabeled = Graph::new(3, [(1, 0), (0, 2)]).unwrap();
        assert_eq!(
            canonical_form(&p3()).unwrap(),
            canonical_form(&relabeled).unwrap()
        );
        assert_ne!(
            canonical_form(&p3()).unwrap(),
            canonical_form(&Graph::complete(3)).unwrap()
        );
        assert_eq!(canonical_form(&Graph::empty(1)).unwrap(), "");
        assert_eq!(canonical_form(&Graph::empty(0)).unwrap(), "");
        assert!(matches!(
            canonical_form(&Graph::empty(11)),
            Err(Error::TooLarge { .. })
        ));
        // edgeless and complete graphs on the vertex limit are fast thanks to twin pruning
        assert_eq!(canonical_form(&Graph::empty(10)).unwrap(), "0".repeat(45));
        assert_eq!(
            canonical_form(&Graph::complete(10)).unwrap(),
            "1".repeat(45)
        );
    }

    #[test]
    fn canonical_labeling_realizes_the_form() {
        let g = Graph::new(5, [(0, 3), (3, 4), (1, 4), (2, 4)]).unwrap();
        let (bits, sigma) = canonical_labeling(&g).unwrap();
        let h = g.permute(&sigma).unwrap();
        let mut realized = String::new();
        for j in 1..5 {
            for i in 0..j {
                realized.push(if h.has_edge(i, j) { '1' } else { '0' });
            }
        }
        assert_eq!(realized, bits);
    }

    #[test]
    fn iso_examples() {
        let k2 = Graph::complete(2);
        assert_eq!(graph_iso(&k2, &k2), Some(VertexPermutation::identity(2)));

        let relabeled = Graph::new(3, [(2, 0), (0, 1)]).unwrap();
        let f = graph_iso(&p3(), &relabeled).unwrap();
        assert!(f.is_isomorphism(&p3(), &relabeled));

        let p3_iso = p3().disjoint_union(&Graph::empty(1));
        let matching = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(graph_iso(&p3_iso, &matching), None);
    }

    #[test]
    fn automorphism_groups() {
        assert_eq!(automorphisms(&p3()).len(), 2);
        assert_eq!(automorphisms(&Graph::complete(4)).len(), 24);
        assert_eq!(automorphisms(&Graph::cycle(5)).len(), 10);
        assert_eq!(automorphisms(&Graph::empty(0)).len(), 1);
    }

    #[test]
    fn permutation_algebra() {
        let a = VertexPermutation::new(vec![1, 2, 0]).unwrap();
        let b = VertexPermutation::new(vec![0, 2, 1]).unwrap();
        assert_eq!(a.compose(&a.inverse()), VertexPermutation::identity(3));
        assert_eq!(a.compose(&b).apply(1), a.apply(b.apply(1)));
        assert!(VertexPermutation::new(vec![0, 0]).is_err());
        assert!(VertexPermutation::new(vec![2, 0]).is_err());
        assert_eq!(
            VertexPermutation::parse("[2, 0, 1]").unwrap().images(),
            &[2, 0, 1]
        );
        assert_eq!(VertexPermutation::parse("1,0").unwrap().images(), &[1, 0]);
    }

    #[test]
    fn small_enumeration_counts() {
        assert_eq!(enumerate_graphs(0).unwrap().len(), 1);
        assert_eq!(enumerate_graphs(1).unwrap().len(), 1);
        assert_eq!(enumerate_graphs(3).unwrap().len(), 4);
        assert_eq!(enumerate_graphs(4).unwrap().len(), 11);
        assert!(matches!(enumerate_graphs(8), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn total_dimension_classes() {
        assert_eq!(graphs_with_total(1).unwrap().len(), 1);
        let three = graphs_with_total(3).unwrap();
        assert_eq!(three.len(), 2);
        assert!(three.contains(&Graph::complete(2)));
        assert!(three.contains(&Graph::empty(3)));
        assert_eq!(graphs_with_total(6).unwrap().len(), 5);
        assert!(graphs_with_total(0).unwrap().is_empty());
        assert!(graphs_with_total(11).is_err());
    }

    #[test]
    fn edge_count_slices_partition_the_enumeration() {
        for n in 0..=5 {
            let all = enumerate_graphs(n).unwrap();
            let sliced: usize = (0..=n * n.saturating_sub(1) / 2)
                .map(|m| enumerate_graphs_with_edges(n, m).unwrap().len())
                .sum();
            assert_eq!(all.len(), sliced);
        }
    }
}
