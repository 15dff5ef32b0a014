//! Independent reference implementations used only by tests. Nothing here
//! calls the engine or the solver.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use bridgeburn::graph::Graph;

/// Bare adjacency with its own edge numbering.
pub struct Board {
    pub n: usize,
    adj: Vec<Vec<(usize, usize)>>,
    burning: bool,
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct Pos {
    cops: Vec<usize>,
    robber: usize,
    burned: u64,
    cop_turn: bool,
}

impl Board {
    pub fn new(g: &Graph, burning: bool) -> Self {
        Self::from_pairs(g.vertex_count(), g.edges(), burning)
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)], burning: bool) -> Self {
        assert!(pairs.len() <= 64);
        let mut adj = vec![Vec::new(); n];
        for (i, &(a, b)) in pairs.iter().enumerate() {
            adj[a].push((b, i));
            adj[b].push((a, i));
        }
        Board { n, adj, burning }
    }

    fn options(&self, v: usize, burned: u64) -> Vec<(usize, Option<usize>)> {
        let mut out = vec![(v, None)];
        out.extend(self.adj[v].iter().filter(|&&(_, e)| burned >> e & 1 == 0).map(|&(w, e)| (w, Some(e))));
        out
    }

    fn cop_moves(&self, cops: &[usize], burned: u64) -> Vec<Vec<usize>> {
        let mut all = vec![Vec::new()];
        for &c in cops {
            let mut next = Vec::new();
            for partial in &all {
                for (w, _) in self.options(c, burned) {
                    let mut p: Vec<usize> = partial.clone();
                    p.push(w);
                    next.push(p);
                }
            }
            all = next;
        }
        for m in &mut all {
            m.sort_unstable();
        }
        all.sort();
        all.dedup();
        all
    }

    fn isolated(&self, p: &Pos) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![p.robber];
        seen[p.robber] = true;
        while let Some(v) = stack.pop() {
            if p.cops.contains(&v) {
                return false;
            }
            for &(w, e) in &self.adj[v] {
                if p.burned >> e & 1 == 0 && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        true
    }

    fn robber_step(&self, p: &Pos, to: usize, edge: Option<usize>) -> Pos {
        let mut burned = p.burned;
        if let (true, Some(e)) = (self.burning, edge) {
            burned |= 1 << e;
        }
        Pos { cops: p.cops.clone(), robber: to, burned, cop_turn: true }
    }

    /// Plain minimax over the game tree; a position repeated on the current
    /// line counts as a robber win.
    pub fn cops_win(&self, cops: &[usize], robber: usize) -> bool {
        let mut cops = cops.to_vec();
        cops.sort_unstable();
        if cops.contains(&robber) {
            return true;
        }
        let start = Pos { cops, robber, burned: 0, cop_turn: true };
        self.win(&start, &mut HashSet::new())
    }

    fn win(&self, p: &Pos, line: &mut HashSet<Pos>) -> bool {
        if !line.insert(p.clone()) {
            return false;
        }
        let result = if p.cop_turn {
            self.cop_moves(&p.cops, p.burned).into_iter().any(|cops| {
                cops.contains(&p.robber) || self.win(&Pos { cops, cop_turn: false, ..p.clone() }, line)
            })
        } else if self.isolated(p) {
            false
        } else {
            self.options(p.robber, p.burned).into_iter().all(|(w, e)| {
                p.cops.contains(&w) || self.win(&self.robber_step(p, w, e), line)
            })
        };
        line.remove(p);
        result
    }

    /// Whether the cops can force capture within `rounds` rounds.
    pub fn capture_within(&self, cops: &[usize], robber: usize, rounds: u32) -> bool {
        let mut cops = cops.to_vec();
        cops.sort_unstable();
        if cops.contains(&robber) {
            return true;
        }
        self.within(&Pos { cops, robber, burned: 0, cop_turn: true }, rounds)
    }

    fn within(&self, p: &Pos, rounds: u32) -> bool {
        if rounds == 0 {
            return false;
        }
        self.cop_moves(&p.cops, p.burned).into_iter().any(|cops| {
            if cops.contains(&p.robber) {
                return true;
            }
            let after = Pos { cops, cop_turn: false, ..p.clone() };
            !self.isolated(&after)
                && self.options(after.robber, after.burned).into_iter().all(|(w, e)| {
                    after.cops.contains(&w) || self.within(&self.robber_step(&after, w, e), rounds - 1)
                })
        })
    }

    /// Rounds needed from a start the cops win, by iterative deepening.
    pub fn capture_rounds(&self, cops: &[usize], robber: usize, limit: u32) -> Option<u32> {
        (0..=limit).find(|&d| self.capture_within(cops, robber, d))
    }

    /// Best worst-case capture time over single-cop placements.
    pub fn one_cop_capture_time(&self, limit: u32) -> Option<u32> {
        (0..self.n)
            .filter_map(|c| {
                (0..self.n)
                    .filter(|&r| r != c)
                    .map(|r| if self.cops_win(&[c], r) { self.capture_rounds(&[c], r, limit) } else { None })
                    .try_fold(0, |acc, x| x.map(|x| acc.max(x)))
            })
            .min()
    }

    /// Smallest k <= k_max with a winning placement, by brute force.
    pub fn cop_number(&self, k_max: usize) -> Option<usize> {
        (1..=k_max).find(|&k| {
            multisets(self.n, k).iter().any(|cops| (0..self.n).all(|r| self.cops_win(cops, r)))
        })
    }
}

pub fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in multisets(n, k - 1) {
        let lo = rest.last().copied().unwrap_or(0);
        for v in lo..n {
            let mut m = rest.clone();
            m.push(v);
            out.push(m);
        }
    }
    out
}

/// Tree with `seq.len() + 2` vertices encoded by a Prüfer sequence.
pub fn prufer_decode(seq: &[usize]) -> Vec<(usize, usize)> {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = leaves.pop_first().expect("a leaf exists");
        edges.push((leaf.min(v), leaf.max(v)));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Every Prüfer sequence of length `len` over `0..n`.
pub fn prufer_sequences(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let len = n.saturating_sub(2);
    let total = n.pow(len as u32);
    (0..total).map(move |mut x| {
        (0..len)
            .map(|_| {
                let d = x % n;
                x /= n;
                d
            })
            .collect()
    })
}

/// Canonical string of an unrooted tree: rooted encodings at its centres, the
/// smaller one wins.
pub fn tree_canon(n: usize, edges: &[(usize, usize)]) -> String {
    if n == 1 {
        return "()".into();
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    fn enc(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = adj[v].iter().filter(|&&w| w != parent).map(|&w| enc(adj, w, v)).collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    layer.iter().map(|&c| enc(&adj, c, usize::MAX)).min().unwrap()
}

/// One representative edge list per unlabeled tree on `n` vertices.
pub fn unlabeled_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    if n == 1 {
        return vec![Vec::new()];
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for seq in prufer_sequences(n) {
        let edges = prufer_decode(&seq);
        if seen.insert(tree_canon(n, &edges)) {
            out.push(edges);
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            let j = if k % 2 == 0 { i } else { 0 };
            p.swap(j, k - 1);
        }
    }
    heap(n, &mut p, &mut out);
    out
}

fn pair_bits(n: usize) -> Vec<Vec<usize>> {
    let mut bit = vec![vec![0; n]; n];
    let mut k = 0;
    for a in 0..n {
        for b in a + 1..n {
            bit[a][b] = k;
            bit[b][a] = k;
            k += 1;
        }
    }
    bit
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    let mut parts = n;
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            parts -= 1;
        }
    }
    parts == 1
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, by brute-force relabeling of every edge subset.
pub fn connected_graphs(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let bit = pair_bits(n);
    let perms = permutations(n);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        if n > 1 && (edges.len() < n - 1 || !connected(n, &edges)) {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| edges.iter().fold(0u32, |m, &(a, b)| m | 1 << bit[p[a]][p[b]]))
            .min()
            .unwrap_or(0);
        if seen.insert(canon) {
            out.push(edges);
        }
    }
    out
}

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges).unwrap()
}
