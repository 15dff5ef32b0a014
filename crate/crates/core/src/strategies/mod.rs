//! Scripted cop and robber policies, a match runner, and an exhaustive
//! checker that plays one fixed policy against every opposing line.
//!
//! Policies are deterministic. Whatever they need to remember between turns
//! lives in an explicit [`Memory`] value that the caller threads through, so
//! the exhaustive checker can treat (position, memory) as a search node.

use thiserror::Error;

use crate::game::{GameError, GameState};
use crate::graph::{Family, FamilySpec, Graph, GridShape, Vertex};

mod arena;
mod cops;
mod robbers;

pub use arena::{
    exhaust_vs_policy, robber_distance_safe, run_match, ExhaustOptions, Verdict, VerdictOutcome,
};
pub use cops::{
    grid2xn_cop, grid_placement, torus_placement, GreedyCloser, GuardStartVertex, HypercubeMirror,
    OptimalCop, Stationary,
};
pub use robbers::{
    border_isolate, corner_isolate, gap_isolate, Degree4Isolate, EulerianStall, GreedyEvader,
    LeafIsolate, LoopScript, ScriptedWalk, StalematePolicy,
};

pub type Memory = Vec<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolicyError {
    #[error("policy {policy} is not applicable: {reason}")]
    Inapplicable { policy: String, reason: String },
    #[error("policy {policy} made an illegal move: {reason}")]
    Illegal { policy: String, reason: String },
    #[error("unknown policy {0}")]
    Unknown(String),
    #[error("bad policy parameters: {0}")]
    BadParams(String),
    #[error("explored-state budget of {budget} exhausted")]
    BudgetExceeded { budget: u64 },
    #[error(transparent)]
    Game(#[from] GameError),
}

pub(crate) fn inapplicable(policy: &str, reason: impl Into<String>) -> PolicyError {
    PolicyError::Inapplicable { policy: policy.to_string(), reason: reason.into() }
}

pub trait CopPolicy: Send + Sync {
    fn name(&self) -> String;
    /// Initial positions, one per cop.
    fn placement(&self, g: &Graph) -> Result<Vec<Vertex>, PolicyError>;
    /// Called once the robber has been placed.
    fn start(&self, _g: &Graph, _s: &GameState, _placement: &[Vertex]) -> Memory {
        Vec::new()
    }
    /// One `(from, to)` pair per cop.
    fn choose(
        &self,
        g: &Graph,
        s: &GameState,
        mem: &Memory,
    ) -> Result<(Vec<(Vertex, Vertex)>, Memory), PolicyError>;
}

pub trait RobberPolicy: Send + Sync {
    fn name(&self) -> String;
    fn placement(&self, g: &Graph, cops: &[Vertex]) -> Result<Vertex, PolicyError>;
    fn start(&self, _g: &Graph, _s: &GameState) -> Memory {
        Vec::new()
    }
    fn choose(&self, g: &Graph, s: &GameState, mem: &Memory)
        -> Result<(Vertex, Memory), PolicyError>;
}

pub enum Policy {
    Cop(Box<dyn CopPolicy>),
    Robber(Box<dyn RobberPolicy>),
}

impl Policy {
    pub fn name(&self) -> String {
        match self {
            Policy::Cop(p) => p.name(),
            Policy::Robber(p) => p.name(),
        }
    }

    pub fn is_cop(&self) -> bool {
        matches!(self, Policy::Cop(_))
    }
}

impl std::fmt::Debug for Policy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let side = if self.is_cop() { "cop" } else { "robber" };
        write!(f, "Policy({side}:{})", self.name())
    }
}

/// One step from `from` that strictly lowers `dist`, smallest vertex among
/// the best; stays put when no neighbor is closer.
pub(crate) fn step_down(g: &Graph, s: &GameState, from: Vertex, dist: &[Option<usize>]) -> Vertex {
    let here = dist[from].unwrap_or(usize::MAX);
    s.open_neighbors(g, from)
        .filter_map(|(w, _)| dist[w].filter(|&d| d < here).map(|d| (d, w)))
        .min()
        .map_or(from, |(_, w)| w)
}

/// Assigns each cop of `s` to one entry of `targets` so that every cop either
/// stays or crosses an intact edge.
pub fn pair_cop_moves(
    g: &Graph,
    s: &GameState,
    targets: &[Vertex],
) -> Option<Vec<(Vertex, Vertex)>> {
    fn rec(
        g: &Graph,
        s: &GameState,
        i: usize,
        targets: &[Vertex],
        used: &mut [bool],
        out: &mut Vec<(Vertex, Vertex)>,
    ) -> bool {
        if i == s.cops.len() {
            return true;
        }
        let from = s.cops[i];
        for (j, &t) in targets.iter().enumerate() {
            if !used[j] && s.can_step(g, from, t) {
                used[j] = true;
                out.push((from, t));
                if rec(g, s, i + 1, targets, used, out) {
                    return true;
                }
                out.pop();
                used[j] = false;
            }
        }
        false
    }
    if targets.len() != s.cops.len() {
        return None;
    }
    let mut used = vec![false; targets.len()];
    let mut out = Vec::with_capacity(targets.len());
    rec(g, s, 0, targets, &mut used, &mut out).then_some(out)
}

/// What the catalog may need beyond the graph itself.
#[derive(Debug, Clone, Copy)]
pub struct PolicyContext<'a> {
    pub graph: &'a Graph,
    pub family: Option<&'a FamilySpec>,
    pub budget: u64,
}

impl PolicyContext<'_> {
    fn shape(&self, policy: &str) -> Result<GridShape, PolicyError> {
        match self.family {
            Some(f) if f.family == Family::Grid => Ok(GridShape::grid(f.params[0], f.params[1])),
            Some(f) if f.family == Family::Torus => Ok(GridShape::torus(f.params[0], f.params[1])),
            _ => Err(inapplicable(policy, "needs a grid or torus family")),
        }
    }
}

/// Splits `NAME[:a,b,...]` into the name and its integer parameters.
pub fn parse_policy_spec(spec: &str) -> Result<(String, Vec<usize>), PolicyError> {
    let (name, rest) = spec.split_once(':').unwrap_or((spec, ""));
    let params = rest
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| PolicyError::BadParams(format!("{p:?} in {spec:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((name.trim().to_string(), params))
}

pub const COP_POLICIES: &[&str] = &[
    "greedy_closer",
    "stationary",
    "optimal",
    "hypercube_mirror",
    "guard_start_vertex",
    "grid2xn_cop",
    "torus_placement",
    "grid_placement",
];

pub const ROBBER_POLICIES: &[&str] = &[
    "greedy_evader",
    "leaf_isolate",
    "corner_isolate",
    "border_isolate",
    "gap_isolate",
    "degree4_isolate",
    "eulerian_stall",
    "stalemate_policy",
    "scripted_walk",
];

/// Builds a named policy. Vertex lists default to `[0]` where one is needed.
pub fn build_policy(ctx: &PolicyContext<'_>, spec: &str) -> Result<Policy, PolicyError> {
    let (name, p) = parse_policy_spec(spec)?;
    let g = ctx.graph;
    let verts = |p: &[usize]| if p.is_empty() { vec![0] } else { p.to_vec() };
    let need = |n: usize| {
        if p.len() < n {
            Err(PolicyError::BadParams(format!("{name} needs {n} parameters")))
        } else {
            Ok(())
        }
    };
    let family_params = |fam: Family| match ctx.family {
        Some(f) if f.family == fam => Ok(f.params.clone()),
        _ => Err(inapplicable(&name, format!("needs the {} family", fam.name()))),
    };
    let cop = |c: Box<dyn CopPolicy>| Ok(Policy::Cop(c));
    let robber = |r: Box<dyn RobberPolicy>| Ok(Policy::Robber(r));
    match name.as_str() {
        "greedy_closer" => cop(Box::new(GreedyCloser::new(g, verts(&p))?)),
        "stationary" => cop(Box::new(Stationary::new(g, verts(&p))?)),
        "optimal" => cop(Box::new(OptimalCop::new(g, p.first().copied().unwrap_or(1), ctx.budget)?)),
        "hypercube_mirror" => cop(Box::new(HypercubeMirror::new(g)?)),
        "guard_start_vertex" => {
            cop(Box::new(GuardStartVertex::new(g, p.first().copied().unwrap_or(0))?))
        }
        "grid2xn_cop" => {
            let fp = family_params(Family::Grid)?;
            cop(Box::new(grid2xn_cop(g, fp[0], fp[1])?))
        }
        "torus_placement" => {
            let fp = family_params(Family::Torus)?;
            cop(Box::new(torus_placement(g, fp[0], fp[1])?))
        }
        "grid_placement" => {
            let fp = family_params(Family::Grid)?;
            cop(Box::new(grid_placement(g, fp[0], fp[1])?))
        }
        "greedy_evader" => robber(Box::new(GreedyEvader)),
        "leaf_isolate" => robber(Box::new(LeafIsolate)),
        "stalemate_policy" => robber(Box::new(StalematePolicy::new(g)?)),
        "eulerian_stall" => {
            let fp = family_params(Family::CaptureFamily)?;
            robber(Box::new(EulerianStall::new(g, fp[0], fp[1])?))
        }
        "scripted_walk" => {
            need(1)?;
            robber(Box::new(ScriptedWalk::new(g, p.clone())?))
        }
        "corner_isolate" => {
            let shape = ctx.shape(&name)?;
            let corner = if p.len() >= 2 { Some((p[0], p[1])) } else { None };
            let flip = p.get(2).is_some_and(|&f| f != 0);
            robber(Box::new(corner_isolate(g, shape, corner, flip)?))
        }
        "border_isolate" => {
            need(1)?;
            let shape = ctx.shape(&name)?;
            robber(Box::new(border_isolate(g, shape, p[0], p.get(1).is_some_and(|&b| b != 0))?))
        }
        "gap_isolate" => {
            need(1)?;
            let shape = ctx.shape(&name)?;
            let row = p.get(1).copied().unwrap_or(0);
            let leftward = p.get(2).is_some_and(|&d| d != 0);
            robber(Box::new(gap_isolate(g, shape, p[0], row, leftward)?))
        }
        "degree4_isolate" => {
            need(2)?;
            let shape = ctx.shape(&name)?;
            robber(Box::new(Degree4Isolate::new(g, shape, p[0], p[1])?))
        }
        _ => Err(PolicyError::Unknown(name)),
    }
}
