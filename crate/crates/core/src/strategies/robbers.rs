use crate::game::{apply_robber_move, robber_component_check, GameState};
use crate::graph::{generate, FamilySpec, Graph, GridShape, Vertex};

use super::{inapplicable, Memory, PolicyError, RobberPolicy};

fn min_cop_distance(dist_from: impl Fn(Vertex) -> Vec<Option<usize>>, cops: &[Vertex], n: usize) -> Vec<usize> {
    let mut best = vec![usize::MAX; n];
    for &c in cops {
        for (v, d) in dist_from(c).into_iter().enumerate() {
            if let Some(d) = d {
                best[v] = best[v].min(d);
            }
        }
    }
    best
}

/// Vertex furthest from every cop, smallest index among ties; cop vertices
/// only if nothing else is free.
fn furthest_from(g: &Graph, cops: &[Vertex]) -> Vertex {
    let far = min_cop_distance(|c| g.distances_from(c), cops, g.vertex_count());
    (0..g.vertex_count())
        .max_by_key(|&v| (!cops.contains(&v), far[v], std::cmp::Reverse(v)))
        .unwrap_or(0)
}

fn evade(g: &Graph, s: &GameState) -> Result<Vertex, PolicyError> {
    let mut options = vec![s.robber];
    options.extend(s.open_neighbors(g, s.robber).map(|(w, _)| w));
    let mut best: Option<((bool, usize), Vertex)> = None;
    for w in options {
        if s.cops.contains(&w) {
            continue;
        }
        let (next, _) = apply_robber_move(g, s, w, true)?;
        if !robber_component_check(g, &next) {
            return Ok(w);
        }
        let far = min_cop_distance(|c| next.distances_from(g, c), &next.cops, g.vertex_count());
        let key = (far[w] > 1, far[w]);
        if best.map_or(true, |(k, _)| key > k) {
            best = Some((key, w));
        }
    }
    Ok(best.map_or(s.robber, |(_, w)| w))
}

/// Starts far from the cops and keeps the largest live distance, taking any
/// move that cuts every cop off.
#[derive(Debug, Clone, Copy, Default)]
pub struct GreedyEvader;

impl RobberPolicy for GreedyEvader {
    fn name(&self) -> String {
        "greedy_evader".into()
    }

    fn placement(&self, g: &Graph, cops: &[Vertex]) -> Result<Vertex, PolicyError> {
        Ok(furthest_from(g, cops))
    }

    fn choose(&self, g: &Graph, s: &GameState, _mem: &Memory) -> Result<(Vertex, Memory), PolicyError> {
        Ok((evade(g, s)?, Vec::new()))
    }
}

/// Starts next to a leaf that no cop is within distance 2 of and steps onto
/// it, burning the only edge. Without such a leaf it evades greedily.
///
/// Memory: `[target leaf or -1]`.
#[derive(Debug, Clone, Copy, Default)]
pub struct LeafIsolate;

impl LeafIsolate {
    fn target(g: &Graph, cops: &[Vertex]) -> Option<Vertex> {
        let near = min_cop_distance(|c| g.distances_from(c), cops, g.vertex_count());
        (0..g.vertex_count()).find(|&v| g.degree(v) == 1 && near[v] > 2)
    }
}

impl RobberPolicy for LeafIsolate {
    fn name(&self) -> String {
        "leaf_isolate".into()
    }

    fn placement(&self, g: &Graph, cops: &[Vertex]) -> Result<Vertex, PolicyError> {
        Ok(match Self::target(g, cops) {
            Some(leaf) => g.neighbors(leaf)[0].0,
            None => furthest_from(g, cops),
        })
    }

    fn start(&self, g: &Graph, s: &GameState) -> Memory {
        let leaf = Self::target(g, &s.cops).filter(|&l| g.has_edge(l, s.robber));
        vec![leaf.map_or(-1, |l| l as i64)]
    }

    fn choose(&self, g: &Graph, s: &GameState, mem: &Memory) -> Result<(Vertex, Memory), PolicyError> {
        if mem[0] >= 0 {
            let leaf = mem[0] as usize;
            if s.robber == leaf {
                return Ok((leaf, mem.clone()));
            }
            if s.can_step(g, s.robber, leaf) {
                return Ok((leaf, mem.clone()));
            }
        }
        Ok((evade(g, s)?, vec![-1]))
    }
}

/// A fixed walk chosen at placement time from a list of candidates, then
/// standing still. With several candidates the one whose start is furthest
/// from the cops wins.
///
/// Memory: `[candidate index, steps taken]`.
#[derive(Debug, Clone)]
pub struct LoopScript {
    label: String,
    options: Vec<(Vertex, Vec<Vertex>)>,
}

impl LoopScript {
    fn new(g: &Graph, label: &str, options: Vec<(Vertex, Vec<Vertex>)>) -> Result<Self, PolicyError> {
        for (start, steps) in &options {
            let mut at = *start;
            for &w in steps {
                if w != at && !g.has_edge(at, w) {
                    return Err(inapplicable(label, format!("{at} -> {w} is not an edge")));
                }
                at = w;
            }
        }
        Ok(LoopScript { label: label.into(), options })
    }

    pub fn walks(&self) -> &[(Vertex, Vec<Vertex>)] {
        &self.options
    }
}

impl RobberPolicy for LoopScript {
    fn name(&self) -> String {
        self.label.clone()
    }

    fn placement(&self, g: &Graph, cops: &[Vertex]) -> Result<Vertex, PolicyError> {
        if self.options.len() == 1 {
            return free_start(&self.label, self.options[0].0, cops);
        }
        let far = min_cop_distance(|c| g.distances_from(c), cops, g.vertex_count());
        let (i, _) = self
            .options
            .iter()
            .enumerate()
            .max_by_key(|(i, (v, _))| (far[*v], std::cmp::Reverse(*i)))
            .expect("at least one option");
        free_start(&self.label, self.options[i].0, cops)
    }

    fn start(&self, _g: &Graph, s: &GameState) -> Memory {
        let i = self.options.iter().position(|(v, _)| *v == s.robber).unwrap_or(0);
        vec![i as i64, 0]
    }

    fn choose(&self, g: &Graph, s: &GameState, mem: &Memory) -> Result<(Vertex, Memory), PolicyError> {
        let steps = &self.options[mem[0] as usize].1;
        let i = mem[1] as usize;
        match steps.get(i) {
            Some(&w) if s.can_step(g, s.robber, w) => Ok((w, vec![mem[0], i as i64 + 1])),
            _ => Ok((s.robber, mem.clone())),
        }
    }
}

fn free_start(label: &str, v: Vertex, cops: &[Vertex]) -> Result<Vertex, PolicyError> {
    if cops.contains(&v) {
        return Err(inapplicable(label, format!("start {v} is occupied by a cop")));
    }
    Ok(v)
}

fn check_shape(label: &str, g: &Graph, shape: GridShape) -> Result<(), PolicyError> {
    if shape.rows < 2 || shape.cols < 2 || !shape.matches(g) {
        return Err(inapplicable(label, "graph does not match the grid shape"));
    }
    Ok(())
}

fn offsets(
    label: &str,
    shape: GridShape,
    (c, r): (usize, usize),
    moves: &[(i64, i64)],
) -> Result<Vec<Vertex>, PolicyError> {
    moves
        .iter()
        .map(|&(dc, dr)| {
            shape
                .offset(c, r, dc, dr)
                .ok_or_else(|| inapplicable(label, "walk leaves the grid"))
        })
        .collect()
}

/// Four-move loop that burns both edges at a grid corner. By default it goes
/// down, right, up, left (mirrored for other corners); `flip` reverses the
/// orientation. Without a given corner the one furthest from the cops is used.
pub fn corner_isolate(
    g: &Graph,
    shape: GridShape,
    corner: Option<(usize, usize)>,
    flip: bool,
) -> Result<LoopScript, PolicyError> {
    let label = "corner_isolate";
    check_shape(label, g, shape)?;
    if shape.wrap {
        return Err(inapplicable(label, "a torus has no corners"));
    }
    let corners = [
        (0, 0),
        (shape.cols - 1, 0),
        (0, shape.rows - 1),
        (shape.cols - 1, shape.rows - 1),
    ];
    let chosen: Vec<(usize, usize)> = match corner {
        Some(c) if corners.contains(&c) => vec![c],
        Some(c) => return Err(inapplicable(label, format!("{c:?} is not a corner"))),
        None => corners.to_vec(),
    };
    let mut options = Vec::new();
    for (c, r) in chosen {
        let dc = if c == 0 { 1 } else { -1 };
        let dr = if r == 0 { 1 } else { -1 };
        let moves = if flip {
            [(dc, 0), (dc, dr), (0, dr), (0, 0)]
        } else {
            [(0, dr), (dc, dr), (dc, 0), (0, 0)]
        };
        options.push((shape.index(c, r), offsets(label, shape, (c, r), &moves)?));
    }
    LoopScript::new(g, label, options)
}

/// Five-move walk isolating the border vertex `(i - 1, row)`: start at
/// `(i - 2, row)`, then right, inward, right, outward, left. `bottom` uses the
/// last row instead of row 0.
pub fn border_isolate(
    g: &Graph,
    shape: GridShape,
    i: usize,
    bottom: bool,
) -> Result<LoopScript, PolicyError> {
    let label = "border_isolate";
    check_shape(label, g, shape)?;
    if i < 2 || i >= shape.cols {
        return Err(inapplicable(label, format!("column {i} leaves no room")));
    }
    let (row, dr) = if bottom { (shape.rows - 1, -1) } else { (0, 1) };
    let steps = offsets(label, shape, (i - 2, row), &[(1, 0), (1, dr), (2, dr), (2, 0), (1, 0)])?;
    LoopScript::new(g, label, vec![(shape.index(i - 2, row), steps)])
}

/// Five-move walk isolating `(j + 3, row)` next to a cop column `j`: start at
/// `(j + 2, row)`, then right, across, right, back, left. `leftward` mirrors
/// the columns.
pub fn gap_isolate(
    g: &Graph,
    shape: GridShape,
    j: usize,
    row: usize,
    leftward: bool,
) -> Result<LoopScript, PolicyError> {
    let label = "gap_isolate";
    check_shape(label, g, shape)?;
    let dr = if row == 0 {
        1
    } else if row == shape.rows - 1 {
        -1
    } else {
        return Err(inapplicable(label, "row must be on the border"));
    };
    let d: i64 = if leftward { -1 } else { 1 };
    let start = shape
        .offset(j, row, 2 * d, 0)
        .filter(|_| shape.wrap || (j as i64 + 4 * d) >= 0 && ((j as i64 + 4 * d) as usize) < shape.cols)
        .ok_or_else(|| inapplicable(label, format!("column {j} leaves no room")))?;
    let (sc, sr) = shape.coords(start);
    let steps = offsets(label, shape, (sc, sr), &[(d, 0), (d, dr), (2 * d, dr), (2 * d, 0), (d, 0)])?;
    LoopScript::new(g, label, vec![(start, steps)])
}

/// Isolates a degree-4 vertex with two four-move loops. With no cop within
/// distance 9 the loops are fixed; otherwise the first loop goes toward the
/// nearest cop and the second takes whichever side that cop cannot reach in
/// three steps.
///
/// Memory: `[mode, steps taken, dx, dy]`; mode 0 is the fixed plan, 1 the
/// first adaptive loop, 2 and 3 the two possible second loops.
#[derive(Debug, Clone)]
pub struct Degree4Isolate {
    shape: GridShape,
    center: (usize, usize),
}

impl Degree4Isolate {
    pub fn new(g: &Graph, shape: GridShape, col: usize, row: usize) -> Result<Self, PolicyError> {
        let label = "degree4_isolate";
        check_shape(label, g, shape)?;
        if col >= shape.cols || row >= shape.rows {
            return Err(inapplicable(label, "center is off the grid"));
        }
        let v = shape.index(col, row);
        if g.degree(v) != 4 || shape.rows < 3 || shape.cols < 3 {
            return Err(inapplicable(label, "center must have degree 4"));
        }
        Ok(Degree4Isolate { shape, center: (col, row) })
    }

    fn plan(mode: i64, dx: i64, dy: i64) -> [(i64, i64); 8] {
        match mode {
            0 => [(1, 0), (1, -1), (0, -1), (0, 0), (-1, 0), (-1, 1), (0, 1), (0, 0)],
            1 | 2 => [
                (0, dy), (dx, dy), (dx, 0), (0, 0),
                (-dx, 0), (-dx, -dy), (0, -dy), (0, 0),
            ],
            _ => [
                (0, dy), (dx, dy), (dx, 0), (0, 0),
                (0, -dy), (-dx, -dy), (-dx, 0), (0, 0),
            ],
        }
    }

    fn at(&self, dc: i64, dr: i64) -> Vertex {
        self.shape
            .offset(self.center.0, self.center.1, dc, dr)
            .expect("degree-4 center has all four neighbors")
    }
}

impl RobberPolicy for Degree4Isolate {
    fn name(&self) -> String {
        "degree4_isolate".into()
    }

    fn placement(&self, _g: &Graph, cops: &[Vertex]) -> Result<Vertex, PolicyError> {
        free_start("degree4_isolate", self.at(0, 0), cops)
    }

    fn start(&self, g: &Graph, s: &GameState) -> Memory {
        let v = self.at(0, 0);
        let dist = g.distances_from(v);
        let nearest = s
            .cops
            .iter()
            .filter_map(|&c| dist[c].map(|d| (d, c)))
            .min()
            .filter(|&(d, _)| d <= 9);
        match nearest {
            None => vec![0, 0, 0, 0],
            Some((_, c)) => {
                let (dc, dr) = self.shape.displacement(v, c);
                let dx = if dc <= 0 { -1 } else { 1 };
                let dy = if dr <= 0 { -1 } else { 1 };
                vec![1, 0, dx, dy]
            }
        }
    }

    fn choose(&self, g: &Graph, s: &GameState, mem: &Memory) -> Result<(Vertex, Memory), PolicyError> {
        let (mut mode, step, dx, dy) = (mem[0], mem[1] as usize, mem[2], mem[3]);
        if step >= 8 {
            return Ok((s.robber, mem.clone()));
        }
        if mode == 1 && step == 4 {
            // Second loop passes (i, j - dy) last; take it only if no cop can
            // get there within three steps.
            let target = self.at(0, -dy);
            let reach = s
                .cops
                .iter()
                .filter_map(|&c| s.distances_from(g, c)[target])
                .min()
                .unwrap_or(usize::MAX);
            mode = if reach > 3 { 2 } else { 3 };
        }
        let (dc, dr) = Self::plan(mode, dx, dy)[step];
        let w = self.at(dc, dr);
        let w = if s.can_step(g, s.robber, w) { w } else { s.robber };
        Ok((w, vec![mode, step as i64 + 1, dx, dy]))
    }
}

/// Robber on the quadratic-capture-time family: waits inside the
/// multipartite part, advancing along a fixed Euler circuit only when the
/// cop sits on the clique vertex of his part, and runs for a pendant vertex
/// whenever the cop leaves the clique.
///
/// Memory: `[mode, circuit start, position in circuit]`; mode 0 stalls,
/// 1 runs for the pendant, 2 is done.
#[derive(Debug, Clone)]
pub struct EulerianStall {
    m: usize,
    k: usize,
    circuits: Vec<Vec<Vertex>>,
}

impl EulerianStall {
    pub fn new(g: &Graph, m: usize, k: usize) -> Result<Self, PolicyError> {
        let label = "eulerian_stall";
        if (m * (k.saturating_sub(1))) % 2 == 1 {
            return Err(inapplicable(label, "m(k-1) must be even"));
        }
        if k < 2 || m < 1 {
            return Err(inapplicable(label, "needs at least two nonempty parts"));
        }
        match generate(&FamilySpec::capture_family(m, k)) {
            Ok(expected) if expected == *g => {}
            _ => return Err(inapplicable(label, "graph does not match the family")),
        }
        let base = 2 * k;
        let circuits = (base..base + m * k).map(|s| euler_circuit(g, base, s)).collect();
        Ok(EulerianStall { m, k, circuits })
    }

    fn part(&self, v: Vertex) -> Option<usize> {
        (v >= 2 * self.k).then(|| (v - 2 * self.k) / self.m)
    }

    pub fn circuit_from(&self, start: Vertex) -> &[Vertex] {
        &self.circuits[start - 2 * self.k]
    }
}

/// Euler circuit of the subgraph induced by vertices `>= base`, from `start`.
fn euler_circuit(g: &Graph, base: usize, start: Vertex) -> Vec<Vertex> {
    let mut used = vec![false; g.edge_count()];
    let mut next = vec![0usize; g.vertex_count()];
    let mut stack = vec![start];
    let mut circuit = Vec::new();
    while let Some(&v) = stack.last() {
        let adj = g.neighbors(v);
        while next[v] < adj.len() && (used[adj[next[v]].1] || adj[next[v]].0 < base) {
            next[v] += 1;
        }
        if next[v] == adj.len() {
            circuit.push(v);
            stack.pop();
        } else {
            let (w, e) = adj[next[v]];
            used[e] = true;
            stack.push(w);
        }
    }
    circuit.reverse();
    circuit
}

impl RobberPolicy for EulerianStall {
    fn name(&self) -> String {
        "eulerian_stall".into()
    }

    fn placement(&self, g: &Graph, cops: &[Vertex]) -> Result<Vertex, PolicyError> {
        let &[c] = cops else {
            return Err(inapplicable("eulerian_stall", "plays against exactly one cop"));
        };
        if c < self.k {
            let j = (0..self.k).find(|&j| j != c).expect("k >= 2");
            Ok(2 * self.k + j * self.m)
        } else {
            (0..self.k)
                .find(|&j| !g.has_edge(c, j))
                .ok_or_else(|| inapplicable("eulerian_stall", "every clique vertex is covered"))
        }
    }

    fn start(&self, _g: &Graph, s: &GameState) -> Memory {
        if s.robber < self.k {
            vec![1, 0, 0]
        } else {
            vec![0, s.robber as i64, 0]
        }
    }

    fn choose(&self, g: &Graph, s: &GameState, mem: &Memory) -> Result<(Vertex, Memory), PolicyError> {
        let r = s.robber;
        let stay = Ok((r, mem.clone()));
        match mem[0] {
            0 => {
                let c = s.cops[0];
                let j = self.part(r).expect("stalling robber is in the multipartite part");
                if c >= self.k {
                    Ok((j, vec![1, mem[1], mem[2]]))
                } else if c == j {
                    let circuit = self.circuit_from(mem[1] as usize);
                    let pos = mem[2] as usize;
                    match circuit.get(pos + 1) {
                        Some(&w) if s.can_step(g, r, w) => Ok((w, vec![0, mem[1], pos as i64 + 1])),
                        _ => stay,
                    }
                } else {
                    stay
                }
            }
            1 => match self.part(r) {
                Some(j) => Ok((j, mem.clone())),
                None if r < self.k => Ok((self.k + r, vec![2, mem[1], mem[2]])),
                None => stay,
            },
            _ => stay,
        }
    }
}

/// Case analysis on the six-vertex stalemate graph (vertices u, v, w, x, y, z
/// numbered 0 to 5).
#[derive(Debug, Clone, Copy)]
pub struct StalematePolicy;

const U: Vertex = 0;
const V: Vertex = 1;
const W: Vertex = 2;
const X: Vertex = 3;
const Y: Vertex = 4;
const Z: Vertex = 5;

impl StalematePolicy {
    pub fn new(g: &Graph) -> Result<Self, PolicyError> {
        if generate(&FamilySpec::stalemate()).ok().as_ref() != Some(g) {
            return Err(inapplicable("stalemate_policy", "graph is not the stalemate graph"));
        }
        Ok(StalematePolicy)
    }
}

impl RobberPolicy for StalematePolicy {
    fn name(&self) -> String {
        "stalemate_policy".into()
    }

    fn placement(&self, _g: &Graph, cops: &[Vertex]) -> Result<Vertex, PolicyError> {
        if cops.len() != 1 {
            return Err(inapplicable("stalemate_policy", "plays against exactly one cop"));
        }
        Ok(match cops[0] {
            V | Y => X,
            X | Z => V,
            U => W,
            _ => U,
        })
    }

    fn choose(&self, _g: &Graph, s: &GameState, mem: &Memory) -> Result<(Vertex, Memory), PolicyError> {
        let c = s.cops[0];
        let to = match s.robber {
            X if c != Z => Z,
            V if c != Y => Y,
            W | U if c == V => X,
            W | U if c == X => V,
            r => r,
        };
        Ok((to, mem.clone()))
    }
}

/// Follows a fixed walk (first entry is the start), then stands still.
#[derive(Debug, Clone)]
pub struct ScriptedWalk {
    walk: Vec<Vertex>,
}

impl ScriptedWalk {
    pub fn new(g: &Graph, walk: Vec<Vertex>) -> Result<Self, PolicyError> {
        if walk.is_empty() {
            return Err(inapplicable("scripted_walk", "empty walk"));
        }
        if let Some(&v) = walk.iter().find(|&&v| v >= g.vertex_count()) {
            return Err(inapplicable("scripted_walk", format!("vertex {v} out of range")));
        }
        if let Some(w) = walk.windows(2).find(|w| w[0] != w[1] && !g.has_edge(w[0], w[1])) {
            return Err(inapplicable("scripted_walk", format!("{} -> {} is not an edge", w[0], w[1])));
        }
        Ok(ScriptedWalk { walk })
    }
}

impl RobberPolicy for ScriptedWalk {
    fn name(&self) -> String {
        "scripted_walk".into()
    }

    fn placement(&self, _g: &Graph, cops: &[Vertex]) -> Result<Vertex, PolicyError> {
        free_start("scripted_walk", self.walk[0], cops)
    }

    fn start(&self, _g: &Graph, _s: &GameState) -> Memory {
        vec![0]
    }

    fn choose(&self, g: &Graph, s: &GameState, mem: &Memory) -> Result<(Vertex, Memory), PolicyError> {
        let i = mem[0] as usize;
        match self.walk.get(i + 1) {
            Some(&w) if s.can_step(g, s.robber, w) => Ok((w, vec![i as i64 + 1])),
            _ => Ok((s.robber, mem.clone())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corner_loop_from_origin() {
        let g = generate(&FamilySpec::grid(2, 8)).unwrap();
        let p = corner_isolate(&g, GridShape::grid(2, 8), Some((0, 0)), false).unwrap();
        assert_eq!(p.walks()[0], (0, vec![8, 9, 1, 0]));
        let f = corner_isolate(&g, GridShape::grid(2, 8), Some((0, 0)), true).unwrap();
        assert_eq!(f.walks()[0], (0, vec![1, 9, 8, 0]));
        let any = corner_isolate(&g, GridShape::grid(2, 8), None, false).unwrap();
        assert_eq!(any.placement(&g, &[1]).unwrap(), 15);
    }

    #[test]
    fn border_and_gap_walks() {
        let g = generate(&FamilySpec::grid(2, 13)).unwrap();
        let shape = GridShape::grid(2, 13);
        let b = border_isolate(&g, shape, 5, false).unwrap();
        assert_eq!(b.walks()[0], (3, vec![4, 17, 18, 5, 4]));
        let gap = gap_isolate(&g, shape, 3, 0, false).unwrap();
        assert_eq!(gap.walks()[0], (5, vec![6, 19, 20, 7, 6]));
        let left = gap_isolate(&g, shape, 9, 1, true).unwrap();
        assert_eq!(left.walks()[0], (20, vec![19, 6, 5, 18, 19]));
        assert!(gap_isolate(&g, shape, 10, 0, false).is_err());
    }

    #[test]
    fn euler_circuit_uses_each_edge_once() {
        let g = generate(&FamilySpec::capture_family(2, 3)).unwrap();
        let p = EulerianStall::new(&g, 2, 3).unwrap();
        let c = p.circuit_from(6);
        assert_eq!(c.first(), Some(&6));
        assert_eq!(c.last(), Some(&6));
        assert_eq!(c.len(), 2 * 2 * 3 * 2 / 2 + 1);
        let mut seen = std::collections::HashSet::new();
        for w in c.windows(2) {
            let e = g.edge_between(w[0], w[1]).unwrap();
            assert!(seen.insert(e));
        }
    }

    #[test]
    fn eulerian_needs_even_degree() {
        let g = generate(&FamilySpec::capture_family(2, 2)).unwrap();
        assert!(EulerianStall::new(&g, 2, 2).is_ok());
        assert!(EulerianStall::new(&g, 1, 2).is_err());
    }

    #[test]
    fn stalemate_placements() {
        let g = generate(&FamilySpec::stalemate()).unwrap();
        let p = StalematePolicy::new(&g).unwrap();
        let starts: Vec<Vertex> = (0..6).map(|c| p.placement(&g, &[c]).unwrap()).collect();
        assert_eq!(starts, vec![W, X, U, V, X, V]);
    }

    #[test]
    fn degree4_fixed_loop() {
        let shape = GridShape::torus(11, 11);
        let g = generate(&FamilySpec::torus(11, 11)).unwrap();
        let p = Degree4Isolate::new(&g, shape, 5, 5).unwrap();
        let mut s = GameState::initial(&g, &[0], p.placement(&g, &[0]).unwrap());
        let mut mem = p.start(&g, &s);
        assert_eq!(mem[0], 0);
        let mut walk = vec![];
        for _ in 0..8 {
            s.phase = crate::game::Phase::RobberTurn;
            let (w, m) = p.choose(&g, &s, &mem).unwrap();
            s = apply_robber_move(&g, &s, w, true).unwrap().0;
            walk.push(shape.coords(w));
            mem = m;
        }
        assert_eq!(
            walk,
            vec![(6, 5), (6, 4), (5, 4), (5, 5), (4, 5), (4, 6), (5, 6), (5, 5)]
        );
        assert!(s.open_neighbors(&g, s.robber).next().is_none());
    }

    #[test]
    fn scripted_walk_validates() {
        let g = generate(&FamilySpec::path(4)).unwrap();
        assert!(ScriptedWalk::new(&g, vec![0, 1, 1, 2]).is_ok());
        assert!(ScriptedWalk::new(&g, vec![0, 2]).is_err());
    }
}
