//! Simple undirected graphs with stable edge ids, named family generators,
//! and the handful of traversal utilities the game needs.
//!
//! Vertex numbering per family:
//!
//! * `grid(m, n)` / `torus(m, n)`: `m` rows and `n` columns; the vertex in
//!   column `i`, row `j` has index `j * n + i`.
//! * `hypercube(d)`: a vertex is its coordinate word read as a binary integer
//!   (coordinate `b` is bit `b`).
//! * `stalemate`: `u, v, w, x, y, z = 0..=5` with edges `uv, vw, wx, xu, vy, xz`.
//! * `capture_family(m, k)`: `v_1..v_k`, then `u_1..u_k`, then the blocks
//!   `S_1..S_k` of `m` vertices each.
//! * `spider(a, b, ...)`: center `0`, then each leg in order, walking outward.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    OutOfRange(Vertex, Vertex, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {0} is not in the graph")]
    InvalidVertex(Vertex),
    #[error("invalid family spec: {0}")]
    InvalidFamily(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Immutable simple undirected graph. Edge ids are insertion indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(Vertex, Vertex)>,
    adjacency: Vec<Vec<(Vertex, EdgeId)>>,
}

impl Graph {
    /// Builds a graph, normalizing every pair to `(min, max)`.
    pub fn new(vertex_count: usize, pairs: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut seen = HashSet::with_capacity(pairs.len());
        let mut edges = Vec::with_capacity(pairs.len());
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(a, b) in pairs {
            if a >= vertex_count || b >= vertex_count {
                return Err(GraphError::OutOfRange(a, b, vertex_count));
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
            let id = edges.len();
            edges.push(e);
            adjacency[e.0].push((e.1, id));
            adjacency[e.1].push((e.0, id));
        }
        Ok(Graph { vertex_count, edges, adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> (Vertex, Vertex) {
        self.edges[id]
    }

    /// Neighbors of `v` together with the id of the connecting edge.
    pub fn neighbors(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn edge_between(&self, a: Vertex, b: Vertex) -> Option<EdgeId> {
        self.adjacency
            .get(a)?
            .iter()
            .find(|&&(w, _)| w == b)
            .map(|&(_, e)| e)
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.edge_between(a, b).is_some()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex(v))
        }
    }

    /// BFS distances from `src`, ignoring edges for which `blocked` is true.
    pub fn distances_from_filtered(
        &self,
        src: Vertex,
        blocked: impl Fn(EdgeId) -> bool,
    ) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count];
        let mut queue = VecDeque::new();
        dist[src] = Some(0);
        queue.push_back(src);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &(w, e) in &self.adjacency[v] {
                if dist[w].is_none() && !blocked(e) {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distances_from(&self, src: Vertex) -> Vec<Option<usize>> {
        self.distances_from_filtered(src, |_| false)
    }

    /// Shortest-path length in edges, `None` when unreachable.
    pub fn bfs_distance(&self, u: Vertex, v: Vertex) -> Result<Option<usize>, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.distances_from(u)[v])
    }

    /// All-pairs distances; `usize::MAX` marks unreachable pairs.
    pub fn distance_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.vertex_count)
            .map(|s| {
                self.distances_from(s)
                    .into_iter()
                    .map(|d| d.unwrap_or(usize::MAX))
                    .collect()
            })
            .collect()
    }

    /// Component label per vertex, ignoring edges for which `blocked` is true.
    pub fn components_filtered(&self, blocked: impl Fn(EdgeId) -> bool) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..self.vertex_count {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = next;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &(w, e) in &self.adjacency[v] {
                    if label[w] == usize::MAX && !blocked(e) {
                        label[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn component_count(&self) -> usize {
        self.components_filtered(|_| false)
            .into_iter()
            .max()
            .map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count > 0 && self.edge_count() + 1 == self.vertex_count && self.is_connected()
    }

    /// Bridges, via low-link numbering over an iterative DFS.
    pub fn cut_edges(&self) -> Vec<EdgeId> {
        let n = self.vertex_count;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut bridges = Vec::new();
        let mut time = 0;
        // (vertex, edge used to enter, next neighbor index)
        let mut stack: Vec<(Vertex, Option<EdgeId>, usize)> = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            stack.push((root, None, 0));
            while let Some(&mut (v, parent_edge, ref mut idx)) = stack.last_mut() {
                if let Some(&(w, e)) = self.adjacency[v].get(*idx) {
                    *idx += 1;
                    if Some(e) == parent_edge {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, Some(e), 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let (Some(e), Some(&(p, _, _))) = (parent_edge, stack.last()) {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            bridges.push(e);
                        }
                    }
                }
            }
        }
        bridges.sort_unstable();
        bridges
    }

    pub fn all_degrees_even(&self) -> bool {
        self.adjacency.iter().all(|a| a.len() % 2 == 0)
    }

    pub fn is_clique(&self, vertices: &[Vertex]) -> bool {
        vertices.iter().enumerate().all(|(i, &a)| {
            vertices[i + 1..].iter().all(|&b| self.has_edge(a, b))
        })
    }

    /// Edge-list text: `n m` then one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count, self.edges.len());
        for &(a, b) in &self.edges {
            out.push_str(&format!("{a} {b}\n"));
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut tokens = text.split_whitespace().map(|t| {
            t.parse::<usize>()
                .map_err(|_| GraphError::Parse(format!("not a non-negative integer: {t:?}")))
        });
        let mut next = |what: &str| {
            tokens
                .next()
                .unwrap_or_else(|| Err(GraphError::Parse(format!("missing {what}"))))
        };
        let n = next("vertex count")?;
        let m = next("edge count")?;
        let mut pairs = Vec::with_capacity(m);
        for _ in 0..m {
            let a = next("edge endpoint")?;
            let b = next("edge endpoint")?;
            pairs.push((a, b));
        }
        if tokens.next().is_some() {
            return Err(GraphError::Parse("trailing tokens after the edge list".into()));
        }
        Graph::new(n, &pairs)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson::from(self)).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let g: GraphJson =
            serde_json::from_str(text).map_err(|e| GraphError::Parse(e.to_string()))?;
        g.try_into()
    }

    /// Accepts either format, choosing JSON when the text starts with `{`.
    pub fn parse_auto(text: &str) -> Result<Self, GraphError> {
        if text.trim_start().starts_with('{') {
            Self::from_json(text)
        } else {
            Self::from_edge_list(text)
        }
    }
}

/// Wire form of a graph: `{"n": int, "edges": [[u, v], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.vertex_count,
            edges: g.edges.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;
    fn try_from(g: GraphJson) -> Result<Self, GraphError> {
        let pairs: Vec<_> = g.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::new(g.n, &pairs)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Grid,
    Torus,
    Hypercube,
    Stalemate,
    CaptureFamily,
    Spider,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Grid => "grid",
            Family::Torus => "torus",
            Family::Hypercube => "hypercube",
            Family::Stalemate => "stalemate",
            Family::CaptureFamily => "capture_family",
            Family::Spider => "spider",
        }
    }
}

impl FromStr for Family {
    type Err = GraphError;
    fn from_str(s: &str) -> Result<Self, GraphError> {
        Ok(match s {
            "path" => Family::Path,
            "cycle" => Family::Cycle,
            "complete" => Family::Complete,
            "complete_bipartite" | "complete-bipartite" => Family::CompleteBipartite,
            "grid" => Family::Grid,
            "torus" => Family::Torus,
            "hypercube" => Family::Hypercube,
            "stalemate" => Family::Stalemate,
            "capture_family" | "capture-family" => Family::CaptureFamily,
            "spider" => Family::Spider,
            other => return Err(GraphError::InvalidFamily(format!("unknown family {other:?}"))),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A named family plus its integer parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, params: &[usize]) -> Result<Self, GraphError> {
        let spec = FamilySpec { family, params: params.to_vec() };
        spec.validate()?;
        Ok(spec)
    }

    pub fn path(n: usize) -> Self {
        Self::new(Family::Path, &[n]).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        Self::new(Family::Cycle, &[n]).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        Self::new(Family::Complete, &[n]).expect("valid complete graph")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Self::new(Family::CompleteBipartite, &[a, b]).expect("valid complete bipartite graph")
    }

    pub fn grid(m: usize, n: usize) -> Self {
        Self::new(Family::Grid, &[m, n]).expect("valid grid")
    }

    pub fn torus(m: usize, n: usize) -> Self {
        Self::new(Family::Torus, &[m, n]).expect("valid torus")
    }

    pub fn hypercube(d: usize) -> Self {
        Self::new(Family::Hypercube, &[d]).expect("valid hypercube")
    }

    pub fn stalemate() -> Self {
        Self::new(Family::Stalemate, &[]).expect("valid stalemate graph")
    }

    pub fn capture_family(m: usize, k: usize) -> Self {
        Self::new(Family::CaptureFamily, &[m, k]).expect("valid capture family")
    }

    pub fn spider(legs: &[usize]) -> Self {
        Self::new(Family::Spider, legs).expect("valid spider")
    }

    fn arity_error(&self, expected: &str) -> GraphError {
        GraphError::InvalidFamily(format!(
            "{} expects {expected}, got {:?}",
            self.family, self.params
        ))
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        let p = &self.params;
        let bad = |why: &str| Err(GraphError::InvalidFamily(format!("{}: {why}", self.family)));
        match self.family {
            Family::Path | Family::Complete => {
                if p.len() != 1 {
                    return Err(self.arity_error("one parameter n"));
                }
                if p[0] < 1 {
                    return bad("n must be at least 1");
                }
            }
            Family::Cycle => {
                if p.len() != 1 {
                    return Err(self.arity_error("one parameter n"));
                }
                if p[0] < 3 {
                    return bad("n must be at least 3");
                }
            }
            Family::CompleteBipartite | Family::Grid => {
                if p.len() != 2 {
                    return Err(self.arity_error("two parameters"));
                }
                if p[0] < 1 || p[1] < 1 {
                    return bad("both parameters must be at least 1");
                }
            }
            Family::Torus => {
                if p.len() != 2 {
                    return Err(self.arity_error("two parameters m,n"));
                }
                if p[0] < 3 || p[1] < 3 {
                    return bad("both dimensions must be at least 3");
                }
            }
            Family::Hypercube => {
                if p.len() != 1 {
                    return Err(self.arity_error("one parameter d"));
                }
                if p[0] < 1 || p[0] > 20 {
                    return bad("dimension must be in 1..=20");
                }
            }
            Family::Stalemate => {
                if !p.is_empty() {
                    return Err(self.arity_error("no parameters"));
                }
            }
            Family::CaptureFamily => {
                if p.len() != 2 {
                    return Err(self.arity_error("two parameters m,k"));
                }
                if p[0] < 1 || p[1] < 1 {
                    return bad("m and k must be at least 1");
                }
                if p[0] * (p[1] - 1) % 2 != 0 {
                    return bad("m(k-1) must be even");
                }
            }
            Family::Spider => {
                if p.is_empty() {
                    return Err(self.arity_error("at least one leg length"));
                }
                if p.iter().any(|&l| l < 1) {
                    return bad("leg lengths must be at least 1");
                }
            }
        }
        Ok(())
    }

    /// Parses `"torus"` plus `"16,14"`.
    pub fn parse(family: &str, params: &str) -> Result<Self, GraphError> {
        let family: Family = family.parse()?;
        let params = params
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| GraphError::Parse(format!("bad family parameter {s:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(family, &params)
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph, GraphError> {
    spec.validate()?;
    let p = &spec.params;
    let mut edges = Vec::new();
    let n = match spec.family {
        Family::Path => {
            edges.extend((1..p[0]).map(|i| (i - 1, i)));
            p[0]
        }
        Family::Cycle => {
            edges.extend((0..p[0]).map(|i| (i, (i + 1) % p[0])));
            p[0]
        }
        Family::Complete => {
            for a in 0..p[0] {
                edges.extend((a + 1..p[0]).map(|b| (a, b)));
            }
            p[0]
        }
        Family::CompleteBipartite => {
            let (a, b) = (p[0], p[1]);
            for i in 0..a {
                edges.extend((0..b).map(|j| (i, a + j)));
            }
            a + b
        }
        Family::Grid | Family::Torus => {
            let (rows, cols) = (p[0], p[1]);
            let wrap = spec.family == Family::Torus;
            let idx = |i: usize, j: usize| j * cols + i;
            for j in 0..rows {
                for i in 0..cols {
                    if i + 1 < cols {
                        edges.push((idx(i, j), idx(i + 1, j)));
                    } else if wrap {
                        edges.push((idx(i, j), idx(0, j)));
                    }
                    if j + 1 < rows {
                        edges.push((idx(i, j), idx(i, j + 1)));
                    } else if wrap {
                        edges.push((idx(i, j), idx(i, 0)));
                    }
                }
            }
            rows * cols
        }
        Family::Hypercube => {
            let d = p[0];
            for v in 0..1usize << d {
                for b in 0..d {
                    if v & (1 << b) == 0 {
                        edges.push((v, v | (1 << b)));
                    }
                }
            }
            1 << d
        }
        Family::Stalemate => {
            edges.extend_from_slice(&[(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (3, 5)]);
            6
        }
        Family::CaptureFamily => {
            let (m, k) = (p[0], p[1]);
            let s = |block: usize, t: usize| 2 * k + block * m + t;
            for a in 0..k {
                edges.extend((a + 1..k).map(|b| (a, b)));
            }
            for i in 0..k {
                edges.push((i, k + i));
                edges.extend((0..m).map(|t| (i, s(i, t))));
            }
            for bi in 0..k {
                for ti in 0..m {
                    for bj in bi + 1..k {
                        edges.extend((0..m).map(|tj| (s(bi, ti), s(bj, tj))));
                    }
                }
            }
            k * m + 2 * k
        }
        Family::Spider => {
            let mut next = 1;
            for &len in p {
                let mut prev = 0;
                for _ in 0..len {
                    edges.push((prev, next));
                    prev = next;
                    next += 1;
                }
            }
            next
        }
    };
    Graph::new(n, &edges)
}

/// Grid/torus coordinate helpers for a layout with `rows` rows and `cols` columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridShape {
    pub rows: usize,
    pub cols: usize,
    pub wrap: bool,
}

impl GridShape {
    pub fn grid(rows: usize, cols: usize) -> Self {
        GridShape { rows, cols, wrap: false }
    }

    pub fn torus(rows: usize, cols: usize) -> Self {
        GridShape { rows, cols, wrap: true }
    }

    pub fn index(&self, col: usize, row: usize) -> Vertex {
        row * self.cols + col
    }

    pub fn coords(&self, v: Vertex) -> (usize, usize) {
        (v % self.cols, v / self.cols)
    }

    /// Vertex at signed offset from `(col, row)`; `None` off a non-wrapping grid.
    pub fn offset(&self, col: usize, row: usize, dc: i64, dr: i64) -> Option<Vertex> {
        let c = col as i64 + dc;
        let r = row as i64 + dr;
        let (cols, rows) = (self.cols as i64, self.rows as i64);
        if self.wrap {
            Some(self.index(c.rem_euclid(cols) as usize, r.rem_euclid(rows) as usize))
        } else if (0..cols).contains(&c) && (0..rows).contains(&r) {
            Some(self.index(c as usize, r as usize))
        } else {
            None
        }
    }

    /// Signed displacement from `a` to `b`, taking the short way around on a torus.
    pub fn displacement(&self, a: Vertex, b: Vertex) -> (i64, i64) {
        let (ac, ar) = self.coords(a);
        let (bc, br) = self.coords(b);
        let mut dc = bc as i64 - ac as i64;
        let mut dr = br as i64 - ar as i64;
        if self.wrap {
            let (cols, rows) = (self.cols as i64, self.rows as i64);
            dc = dc.rem_euclid(cols);
            if dc * 2 > cols {
                dc -= cols;
            }
            dr = dr.rem_euclid(rows);
            if dr * 2 > rows {
                dr -= rows;
            }
        }
        (dc, dr)
    }

    pub fn matches(&self, g: &Graph) -> bool {
        let expected = if self.wrap {
            generate(&FamilySpec { family: Family::Torus, params: vec![self.rows, self.cols] })
        } else {
            generate(&FamilySpec { family: Family::Grid, params: vec![self.rows, self.cols] })
        };
        expected.map_or(false, |e| e.vertex_count() == g.vertex_count() && {
            e.edges().iter().all(|&(a, b)| g.has_edge(a, b)) && e.edge_count() == g.edge_count()
        })
    }
}
