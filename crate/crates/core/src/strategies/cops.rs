use crate::bounds::placement_generators;
use crate::game::GameState;
use crate::graph::{generate, FamilySpec, Graph, GridShape, Vertex};
use crate::solver::{cop_wins_with_k, Side, SolveOptions, Strategy};

use super::{inapplicable, pair_cop_moves, step_down, CopPolicy, Memory, PolicyError};

fn check_vertices(policy: &str, g: &Graph, vs: &[Vertex]) -> Result<(), PolicyError> {
    if vs.is_empty() {
        return Err(inapplicable(policy, "no cops"));
    }
    match vs.iter().find(|&&v| v >= g.vertex_count()) {
        Some(v) => Err(inapplicable(policy, format!("vertex {v} out of range"))),
        None => Ok(()),
    }
}

fn greedy_moves(g: &Graph, s: &GameState) -> Vec<(Vertex, Vertex)> {
    let dist = s.distances_from(g, s.robber);
    s.cops
        .iter()
        .map(|&c| {
            if s.can_step(g, c, s.robber) {
                (c, s.robber)
            } else {
                (c, step_down(g, s, c, &dist))
            }
        })
        .collect()
}

/// Every cop steps along a shortest live path to the robber.
#[derive(Debug, Clone)]
pub struct GreedyCloser {
    placement: Vec<Vertex>,
    label: String,
}

impl GreedyCloser {
    pub fn new(g: &Graph, placement: Vec<Vertex>) -> Result<Self, PolicyError> {
        check_vertices("greedy_closer", g, &placement)?;
        Ok(GreedyCloser { placement, label: "greedy_closer".into() })
    }
}

impl CopPolicy for GreedyCloser {
    fn name(&self) -> String {
        self.label.clone()
    }

    fn placement(&self, _g: &Graph) -> Result<Vec<Vertex>, PolicyError> {
        Ok(self.placement.clone())
    }

    fn choose(
        &self,
        g: &Graph,
        s: &GameState,
        _mem: &Memory,
    ) -> Result<(Vec<(Vertex, Vertex)>, Memory), PolicyError> {
        Ok((greedy_moves(g, s), Vec::new()))
    }
}

/// Generator placement for a torus, then greedy pursuit.
pub fn torus_placement(g: &Graph, m: usize, n: usize) -> Result<GreedyCloser, PolicyError> {
    team_from_generator(g, FamilySpec::torus(m, n), "torus_placement")
}

/// Generator placement for a grid, then greedy pursuit.
pub fn grid_placement(g: &Graph, m: usize, n: usize) -> Result<GreedyCloser, PolicyError> {
    team_from_generator(g, FamilySpec::grid(m, n), "grid_placement")
}

fn team_from_generator(
    g: &Graph,
    spec: FamilySpec,
    label: &str,
) -> Result<GreedyCloser, PolicyError> {
    let expected = generate(&spec).map_err(|e| inapplicable(label, e.to_string()))?;
    if expected != *g {
        return Err(inapplicable(label, "graph does not match the family"));
    }
    let placement = placement_generators(&spec).map_err(|e| inapplicable(label, e.to_string()))?;
    Ok(GreedyCloser { placement, label: label.into() })
}

#[derive(Debug, Clone)]
pub struct Stationary {
    placement: Vec<Vertex>,
}

impl Stationary {
    pub fn new(g: &Graph, placement: Vec<Vertex>) -> Result<Self, PolicyError> {
        check_vertices("stationary", g, &placement)?;
        Ok(Stationary { placement })
    }
}

impl CopPolicy for Stationary {
    fn name(&self) -> String {
        "stationary".into()
    }

    fn placement(&self, _g: &Graph) -> Result<Vec<Vertex>, PolicyError> {
        Ok(self.placement.clone())
    }

    fn choose(
        &self,
        _g: &Graph,
        s: &GameState,
        _mem: &Memory,
    ) -> Result<(Vec<(Vertex, Vertex)>, Memory), PolicyError> {
        Ok((s.cops.iter().map(|&c| (c, c)).collect(), Vec::new()))
    }
}

/// Plays the exact solver's strategy from its optimal placement.
#[derive(Debug, Clone)]
pub struct OptimalCop {
    placement: Vec<Vertex>,
    strategy: Strategy,
}

impl OptimalCop {
    pub fn new(g: &Graph, k: usize, budget: u64) -> Result<Self, PolicyError> {
        let opts = SolveOptions { record_strategy: true, budget, ..Default::default() };
        let r = cop_wins_with_k(g, k, &opts).map_err(|e| match e {
            crate::solver::SolveError::BudgetExceeded { budget } => {
                PolicyError::BudgetExceeded { budget }
            }
            e => inapplicable("optimal", e.to_string()),
        })?;
        if r.winner != Side::Cop {
            return Err(inapplicable("optimal", format!("{k} cops cannot win")));
        }
        Ok(OptimalCop {
            placement: r.optimal_placement.expect("cop win has a placement"),
            strategy: r.strategy.expect("strategy was requested"),
        })
    }
}

impl CopPolicy for OptimalCop {
    fn name(&self) -> String {
        "optimal".into()
    }

    fn placement(&self, _g: &Graph) -> Result<Vec<Vertex>, PolicyError> {
        Ok(self.placement.clone())
    }

    fn choose(
        &self,
        g: &Graph,
        s: &GameState,
        _mem: &Memory,
    ) -> Result<(Vec<(Vertex, Vertex)>, Memory), PolicyError> {
        let moves = self
            .strategy
            .next(s)
            .and_then(|t| pair_cop_moves(g, s, &t.cops))
            .unwrap_or_else(|| greedy_moves(g, s));
        Ok((moves, Vec::new()))
    }
}

/// Single cop on a hypercube, starting at the all-ones vertex.
///
/// Memory: `[dimensions the robber has visited, robber position last turn]`.
#[derive(Debug, Clone)]
pub struct HypercubeMirror {
    dim: usize,
}

impl HypercubeMirror {
    pub fn new(g: &Graph) -> Result<Self, PolicyError> {
        let n = g.vertex_count();
        if !n.is_power_of_two() {
            return Err(inapplicable("hypercube_mirror", "vertex count is not a power of two"));
        }
        let dim = n.trailing_zeros() as usize;
        let ok = dim >= 1
            && g.edge_count() == dim * n / 2
            && g.edges().iter().all(|&(a, b)| (a ^ b).is_power_of_two());
        if !ok {
            return Err(inapplicable("hypercube_mirror", "graph is not a hypercube"));
        }
        Ok(HypercubeMirror { dim })
    }
}

impl CopPolicy for HypercubeMirror {
    fn name(&self) -> String {
        "hypercube_mirror".into()
    }

    fn placement(&self, _g: &Graph) -> Result<Vec<Vertex>, PolicyError> {
        Ok(vec![(1 << self.dim) - 1])
    }

    fn start(&self, _g: &Graph, s: &GameState, _placement: &[Vertex]) -> Memory {
        vec![s.robber as i64, s.robber as i64]
    }

    fn choose(
        &self,
        g: &Graph,
        s: &GameState,
        mem: &Memory,
    ) -> Result<(Vec<(Vertex, Vertex)>, Memory), PolicyError> {
        let c = s.cops[0];
        let r = s.robber;
        let prev = mem[1] as usize;
        let visited = mem[0] as usize | r;
        let next_mem = vec![visited as i64, r as i64];
        if s.can_step(g, c, r) {
            return Ok((vec![(c, r)], next_mem));
        }
        let gap = |x: usize| (x ^ c).count_ones();
        // Robber stepped away along bit j: copy the step.
        if r != prev && gap(r) > gap(prev) {
            let to = c ^ (r ^ prev);
            if s.can_step(g, c, to) {
                return Ok((vec![(c, to)], next_mem));
            }
        }
        // Close one differing coordinate, spending visited dimensions first
        // so the cop keeps a foothold in one the robber has never entered.
        let differ = c ^ r;
        let mut bits: Vec<usize> = (0..self.dim).filter(|b| differ >> b & 1 == 1).collect();
        bits.sort_by_key(|&b| (visited >> b & 1 == 0, b));
        let to = bits
            .into_iter()
            .map(|b| c ^ (1 << b))
            .find(|&w| s.can_step(g, c, w))
            .unwrap_or_else(|| step_down(g, s, c, &s.distances_from(g, r)));
        Ok((vec![(c, to)], next_mem))
    }
}

/// Single cop on a graph with all degrees even: walk to the robber's start,
/// then keep at least as close to it as the robber is.
///
/// Memory: `[robber start, reached start (0/1), robber's distance to start last turn]`.
#[derive(Debug, Clone)]
pub struct GuardStartVertex {
    home: Vertex,
}

impl GuardStartVertex {
    pub fn new(g: &Graph, home: Vertex) -> Result<Self, PolicyError> {
        if !g.all_degrees_even() {
            return Err(inapplicable("guard_start_vertex", "some vertex has odd degree"));
        }
        check_vertices("guard_start_vertex", g, &[home])?;
        Ok(GuardStartVertex { home })
    }
}

impl CopPolicy for GuardStartVertex {
    fn name(&self) -> String {
        "guard_start_vertex".into()
    }

    fn placement(&self, _g: &Graph) -> Result<Vec<Vertex>, PolicyError> {
        Ok(vec![self.home])
    }

    fn start(&self, _g: &Graph, s: &GameState, _placement: &[Vertex]) -> Memory {
        vec![s.robber as i64, 0, i64::MAX]
    }

    fn choose(
        &self,
        g: &Graph,
        s: &GameState,
        mem: &Memory,
    ) -> Result<(Vec<(Vertex, Vertex)>, Memory), PolicyError> {
        let c = s.cops[0];
        let r = s.robber;
        let v = mem[0] as usize;
        let to_v = s.distances_from(g, v);
        let robber_gap = to_v[r].map_or(i64::MAX, |d| d as i64);
        let reached = mem[1] == 1 || c == v;
        let next_mem = vec![v as i64, reached as i64, robber_gap];
        if s.can_step(g, c, r) {
            return Ok((vec![(c, r)], next_mem));
        }
        let to = if reached && robber_gap >= mem[2] {
            // Chase, keeping no further from v than the robber when possible.
            let to_r = s.distances_from(g, r);
            let here = to_r[c].unwrap_or(usize::MAX);
            g.neighbors(c)
                .iter()
                .map(|&(w, _)| w)
                .filter(|&w| s.can_step(g, c, w) && to_r[w].is_some_and(|d| d < here))
                .min_by_key(|&w| (to_v[w].map_or(i64::MAX, |d| d as i64) > robber_gap, w))
                .unwrap_or_else(|| step_down(g, s, c, &to_r))
        } else {
            step_down(g, s, c, &to_v)
        };
        Ok((vec![(c, to)], next_mem))
    }
}

/// Cops for the two-row grid: generator placement, then horizontal pursuit
/// that switches rows when the row ahead is broken.
#[derive(Debug, Clone)]
pub struct Grid2xnCop {
    shape: GridShape,
    placement: Vec<Vertex>,
}

pub fn grid2xn_cop(g: &Graph, rows: usize, cols: usize) -> Result<Grid2xnCop, PolicyError> {
    if rows != 2 {
        return Err(inapplicable("grid2xn_cop", "needs a grid with two rows"));
    }
    let spec = FamilySpec::grid(2, cols);
    if generate(&spec).ok().as_ref() != Some(g) {
        return Err(inapplicable("grid2xn_cop", "graph does not match the family"));
    }
    let placement =
        placement_generators(&spec).map_err(|e| inapplicable("grid2xn_cop", e.to_string()))?;
    Ok(Grid2xnCop { shape: GridShape::grid(2, cols), placement })
}

impl Grid2xnCop {
    fn open(&self, g: &Graph, s: &GameState, a: Vertex, b: Vertex) -> bool {
        g.edge_between(a, b).is_some_and(|e| s.is_open(e))
    }

    fn vertical_open(&self, g: &Graph, s: &GameState, col: usize) -> bool {
        self.open(g, s, self.shape.index(col, 0), self.shape.index(col, 1))
    }

    fn row_open(&self, g: &Graph, s: &GameState, row: usize, from: usize, to: usize) -> bool {
        let (lo, hi) = (from.min(to), from.max(to));
        (lo..hi).all(|c| self.open(g, s, self.shape.index(c, row), self.shape.index(c + 1, row)))
    }

    fn step(&self, g: &Graph, s: &GameState, c: Vertex, dist: &[Option<usize>]) -> Vertex {
        let r = s.robber;
        if s.can_step(g, c, r) {
            return r;
        }
        let (cc, cr) = self.shape.coords(c);
        let (rc, _) = self.shape.coords(r);
        if cc == rc {
            return step_down(g, s, c, dist);
        }
        let next_col = if rc > cc { cc + 1 } else { cc - 1 };
        let ahead = self.shape.index(next_col, cr);
        let across = self.shape.index(cc, 1 - cr);
        let here = dist[c].unwrap_or(usize::MAX);
        let closer = |w: Vertex| s.can_step(g, c, w) && dist[w].is_some_and(|d| d < here);
        if closer(ahead) && self.row_open(g, s, cr, cc, rc) && self.vertical_open(g, s, next_col) {
            ahead
        } else if closer(across) {
            across
        } else if closer(ahead) {
            ahead
        } else {
            step_down(g, s, c, dist)
        }
    }
}

impl CopPolicy for Grid2xnCop {
    fn name(&self) -> String {
        "grid2xn_cop".into()
    }

    fn placement(&self, _g: &Graph) -> Result<Vec<Vertex>, PolicyError> {
        Ok(self.placement.clone())
    }

    fn choose(
        &self,
        g: &Graph,
        s: &GameState,
        _mem: &Memory,
    ) -> Result<(Vec<(Vertex, Vertex)>, Memory), PolicyError> {
        let dist = s.distances_from(g, s.robber);
        Ok((s.cops.iter().map(|&c| (c, self.step(g, s, c, &dist))).collect(), Vec::new()))
    }
}
