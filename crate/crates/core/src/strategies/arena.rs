use std::collections::{HashMap, VecDeque};
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::game::{
    apply_cop_moves, apply_robber_move, cop_moves, robber_component_check, Actor, EscapeReason,
    GameState, MoveRecord, Outcome, Transcript,
};
use crate::graph::{Graph, Vertex};
use crate::solver::cop_multisets;

use super::{pair_cop_moves, CopPolicy, Memory, Policy, PolicyError, RobberPolicy};

fn illegal(policy: &str, reason: impl ToString) -> PolicyError {
    PolicyError::Illegal { policy: policy.to_string(), reason: reason.to_string() }
}

fn check_cop_placement(g: &Graph, cop: &dyn CopPolicy, cops: &[Vertex]) -> Result<(), PolicyError> {
    if cops.is_empty() {
        return Err(illegal(&cop.name(), "placed no cops"));
    }
    if let Some(v) = cops.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(illegal(&cop.name(), format!("placed a cop on missing vertex {v}")));
    }
    Ok(())
}

fn robber_start_allowed(g: &Graph, cops: &[Vertex], r: Vertex) -> bool {
    r < g.vertex_count() && (!cops.contains(&r) || (0..g.vertex_count()).all(|v| cops.contains(&v)))
}

fn cop_records(moves: &[(Vertex, Vertex)]) -> impl Iterator<Item = MoveRecord> + '_ {
    moves.iter().enumerate().map(|(i, &(from, to))| MoveRecord {
        actor: Actor::Cop(i),
        from,
        to,
        burned_edge: None,
    })
}

/// Plays one match. Cops are placed first, then the robber (who sees them).
/// The match ends on capture, when the robber's component holds no cop, or
/// after `max_rounds` rounds.
pub fn run_match(
    g: &Graph,
    cop: &dyn CopPolicy,
    robber: &dyn RobberPolicy,
    max_rounds: u32,
) -> Result<Transcript, PolicyError> {
    let cops0 = cop.placement(g)?;
    check_cop_placement(g, cop, &cops0)?;
    let robber0 = robber.placement(g, &cops0)?;
    if !robber_start_allowed(g, &cops0, robber0) {
        return Err(illegal(&robber.name(), format!("cannot start on {robber0}")));
    }
    let mut s = GameState::initial(g, &cops0, robber0);
    let mut moves = Vec::new();
    let finish = |moves, outcome| Transcript {
        graph: g.clone(),
        cops0: cops0.clone(),
        robber0,
        moves,
        outcome,
    };
    if s.is_capture() {
        return Ok(finish(moves, Outcome::CopWin { round: 0 }));
    }
    let mut cop_mem = cop.start(g, &s, &cops0);
    let mut rob_mem = robber.start(g, &s);
    for round in 1..=max_rounds {
        let (mv, m) = cop.choose(g, &s, &cop_mem)?;
        cop_mem = m;
        s = apply_cop_moves(g, &s, &mv).map_err(|e| illegal(&cop.name(), e))?;
        moves.extend(cop_records(&mv));
        if s.is_capture() {
            return Ok(finish(moves, Outcome::CopWin { round }));
        }
        let (to, m) = robber.choose(g, &s, &rob_mem)?;
        rob_mem = m;
        let (next, rec) =
            apply_robber_move(g, &s, to, true).map_err(|e| illegal(&robber.name(), e))?;
        s = next;
        moves.push(rec);
        if s.is_capture() {
            return Ok(finish(moves, Outcome::CopWin { round }));
        }
        if !robber_component_check(g, &s) {
            return Ok(finish(moves, Outcome::RobberEscape { reason: EscapeReason::Isolated }));
        }
    }
    Ok(finish(moves, Outcome::RoundLimit { rounds: max_rounds }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerdictOutcome {
    PolicyWinsAlways,
    /// A replayable line of play that defeats the fixed policy.
    PolicyBeatenBy(Transcript),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: VerdictOutcome,
    pub nodes_searched: u64,
    /// Fixed cop that always wins: worst-case capture round.
    /// Fixed robber that gets caught: earliest capture round.
    pub rounds: Option<u32>,
}

impl Verdict {
    pub fn policy_wins(&self) -> bool {
        self.outcome == VerdictOutcome::PolicyWinsAlways
    }

    pub fn counterexample(&self) -> Option<&Transcript> {
        match &self.outcome {
            VerdictOutcome::PolicyBeatenBy(t) => Some(t),
            VerdictOutcome::PolicyWinsAlways => None,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::json!({
            "outcome": if self.policy_wins() { "policy_wins_always" } else { "policy_beaten" },
            "nodesSearched": self.nodes_searched,
            "rounds": self.rounds,
        });
        if let Some(t) = self.counterexample() {
            v["counterexample"] =
                serde_json::from_str(&t.to_json()).expect("transcript json is valid");
        }
        v
    }
}

#[derive(Debug, Clone)]
pub struct ExhaustOptions {
    pub budget: u64,
    /// Cops on the free side when the robber is fixed.
    pub free_cops: usize,
    /// Restricts the free robber's starting vertices.
    pub robber_starts: Option<Vec<Vertex>>,
    /// Restricts the free cops' placements.
    pub cop_placements: Option<Vec<Vec<Vertex>>>,
}

impl Default for ExhaustOptions {
    fn default() -> Self {
        ExhaustOptions {
            budget: crate::solver::DEFAULT_BUDGET,
            free_cops: 1,
            robber_starts: None,
            cop_placements: None,
        }
    }
}

struct Shared<'a> {
    used: &'a AtomicU64,
    limit: u64,
}

impl Shared<'_> {
    fn charge(&self) -> Result<(), PolicyError> {
        if self.used.fetch_add(1, Ordering::Relaxed) + 1 > self.limit {
            Err(PolicyError::BudgetExceeded { budget: self.limit })
        } else {
            Ok(())
        }
    }
}

/// Plays `fixed` against every line of the other side. The search is over
/// (cop-turn position, fixed policy memory); a reachable repeat or an
/// isolated robber counts as a robber win.
pub fn exhaust_vs_policy(
    g: &Graph,
    fixed: &Policy,
    opts: &ExhaustOptions,
) -> Result<Verdict, PolicyError> {
    let used = AtomicU64::new(0);
    let shared = Shared { used: &used, limit: opts.budget };
    let verdict = match fixed {
        Policy::Cop(cop) => exhaust_fixed_cop(g, cop.as_ref(), opts, &shared)?,
        Policy::Robber(robber) => exhaust_fixed_robber(g, robber.as_ref(), opts, &shared)?,
    };
    Ok(Verdict { nodes_searched: used.load(Ordering::Relaxed), ..verdict })
}

enum CopLine {
    /// Worst-case capture round from this root.
    Wins(u32),
    Beaten(Transcript),
}

fn exhaust_fixed_cop(
    g: &Graph,
    cop: &dyn CopPolicy,
    opts: &ExhaustOptions,
    shared: &Shared<'_>,
) -> Result<Verdict, PolicyError> {
    let cops0 = cop.placement(g)?;
    check_cop_placement(g, cop, &cops0)?;
    let starts: Vec<Vertex> = match &opts.robber_starts {
        Some(list) => list.clone(),
        None => (0..g.vertex_count()).filter(|&r| robber_start_allowed(g, &cops0, r)).collect(),
    };
    let lines: Vec<Result<CopLine, PolicyError>> = starts
        .par_iter()
        .map(|&r| search_fixed_cop(g, cop, &cops0, r, shared))
        .collect();
    let mut worst = 0;
    for line in lines {
        match line? {
            CopLine::Wins(r) => worst = worst.max(r),
            CopLine::Beaten(t) => {
                return Ok(Verdict {
                    outcome: VerdictOutcome::PolicyBeatenBy(t),
                    nodes_searched: 0,
                    rounds: None,
                })
            }
        }
    }
    Ok(Verdict { outcome: VerdictOutcome::PolicyWinsAlways, nodes_searched: 0, rounds: Some(worst) })
}

struct Frame {
    key: (GameState, Memory),
    cop_moves: Vec<(Vertex, Vertex)>,
    /// Robber options after the cop move, with the position they lead to.
    children: Vec<(MoveRecord, GameState)>,
    next: usize,
    cop_mem: Memory,
    worst: u32,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mark {
    OnPath,
    Done(u32),
}

fn search_fixed_cop(
    g: &Graph,
    cop: &dyn CopPolicy,
    cops0: &[Vertex],
    robber0: Vertex,
    shared: &Shared<'_>,
) -> Result<CopLine, PolicyError> {
    let root = GameState::initial(g, cops0, robber0);
    if root.is_capture() {
        return Ok(CopLine::Wins(0));
    }
    let transcript = |path: &[Frame], outcome| {
        let mut moves = Vec::new();
        for f in path {
            moves.extend(cop_records(&f.cop_moves));
            if f.next > 0 {
                moves.push(f.children[f.next - 1].0.clone());
            }
        }
        Transcript { graph: g.clone(), cops0: cops0.to_vec(), robber0, moves, outcome }
    };
    let mem0 = cop.start(g, &root, cops0);
    let mut marks: HashMap<(GameState, Memory), Mark> = HashMap::new();
    let mut path: Vec<Frame> = Vec::new();
    let expand = |key: (GameState, Memory)| -> Result<Frame, PolicyError> {
        shared.charge()?;
        let (s, mem) = &key;
        let (mv, cop_mem) = cop.choose(g, s, mem)?;
        let after = apply_cop_moves(g, s, &mv).map_err(|e| illegal(&cop.name(), e))?;
        let children = if after.is_capture() {
            Vec::new()
        } else {
            let mut out = vec![];
            for to in std::iter::once(after.robber).chain(after.open_neighbors(g, after.robber).map(|(w, _)| w)) {
                let (next, rec) = apply_robber_move(g, &after, to, true)?;
                out.push((rec, next));
            }
            out
        };
        Ok(Frame { key, cop_moves: mv, children, next: 0, cop_mem, worst: 0 })
    };
    marks.insert((root.clone(), mem0.clone()), Mark::OnPath);
    path.push(expand((root, mem0))?);
    loop {
        let top = path.last_mut().expect("path is non-empty inside the loop");
        if top.next == top.children.len() {
            let done = top.worst + 1;
            let frame = path.pop().expect("top exists");
            marks.insert(frame.key, Mark::Done(done));
            match path.last_mut() {
                Some(parent) => parent.worst = parent.worst.max(done),
                None => return Ok(CopLine::Wins(done)),
            }
            continue;
        }
        let next = top.children[top.next].1.clone();
        top.next += 1;
        let cop_mem = top.cop_mem.clone();
        if next.is_capture() {
            continue;
        }
        if !robber_component_check(g, &next) {
            let t = transcript(&path, Outcome::RobberEscape { reason: EscapeReason::Isolated });
            return Ok(CopLine::Beaten(t));
        }
        let key = (next, cop_mem);
        match marks.get(&key) {
            Some(Mark::OnPath) => {
                let t = transcript(&path, Outcome::RobberEscape { reason: EscapeReason::Repetition });
                return Ok(CopLine::Beaten(t));
            }
            Some(&Mark::Done(v)) => {
                let top = path.last_mut().expect("top exists");
                top.worst = top.worst.max(v);
            }
            None => {
                marks.insert(key.clone(), Mark::OnPath);
                let frame = expand(key)?;
                path.push(frame);
            }
        }
    }
}

struct Node {
    state: GameState,
    mem: Memory,
    parent: usize,
    moves: Vec<MoveRecord>,
    depth: u32,
}

/// Earliest capture of a fixed robber from one cop placement, with the line.
fn search_fixed_robber(
    g: &Graph,
    robber: &dyn RobberPolicy,
    cops0: &[Vertex],
    shared: &Shared<'_>,
) -> Result<Option<(u32, Transcript)>, PolicyError> {
    let robber0 = robber.placement(g, cops0)?;
    if robber0 >= g.vertex_count() {
        return Err(illegal(&robber.name(), format!("cannot start on {robber0}")));
    }
    let root = GameState::initial(g, cops0, robber0);
    let make = |nodes: &[Node], mut i: usize, last: Vec<MoveRecord>, round: u32| {
        let mut chunks = vec![last];
        while i != usize::MAX {
            chunks.push(nodes[i].moves.clone());
            i = nodes[i].parent;
        }
        let moves = chunks.into_iter().rev().flatten().collect();
        Transcript {
            graph: g.clone(),
            cops0: cops0.to_vec(),
            robber0,
            moves,
            outcome: Outcome::CopWin { round },
        }
    };
    if root.is_capture() {
        return Ok(Some((0, make(&[], usize::MAX, vec![], 0))));
    }
    let mem0 = robber.start(g, &root);
    let mut seen: HashMap<(GameState, Memory), ()> = HashMap::new();
    seen.insert((root.clone(), mem0.clone()), ());
    let mut nodes = vec![Node { state: root, mem: mem0, parent: usize::MAX, moves: vec![], depth: 0 }];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        shared.charge()?;
        let (s, mem, depth) = (nodes[i].state.clone(), nodes[i].mem.clone(), nodes[i].depth);
        let round = depth + 1;
        for cops in cop_moves(g, &s) {
            let mv = pair_cop_moves(g, &s, &cops).expect("successor multisets are reachable");
            let after = apply_cop_moves(g, &s, &mv)?;
            let mut recs: Vec<MoveRecord> = cop_records(&mv).collect();
            if after.is_capture() {
                return Ok(Some((round, make(&nodes, i, recs, round))));
            }
            let (to, next_mem) = robber.choose(g, &after, &mem)?;
            let (next, rec) =
                apply_robber_move(g, &after, to, true).map_err(|e| illegal(&robber.name(), e))?;
            recs.push(rec);
            if next.is_capture() {
                return Ok(Some((round, make(&nodes, i, recs, round))));
            }
            if !robber_component_check(g, &next) {
                continue;
            }
            let key = (next, next_mem);
            if seen.contains_key(&key) {
                continue;
            }
            seen.insert(key.clone(), ());
            nodes.push(Node { state: key.0, mem: key.1, parent: i, moves: recs, depth: round });
            queue.push_back(nodes.len() - 1);
        }
    }
    Ok(None)
}

fn exhaust_fixed_robber(
    g: &Graph,
    robber: &dyn RobberPolicy,
    opts: &ExhaustOptions,
    shared: &Shared<'_>,
) -> Result<Verdict, PolicyError> {
    let placements = match &opts.cop_placements {
        Some(p) => p.clone(),
        None => cop_multisets(g.vertex_count(), opts.free_cops),
    };
    let results: Vec<Result<Option<(u32, Transcript)>, PolicyError>> = placements
        .par_iter()
        .map(|p| search_fixed_robber(g, robber, p, shared))
        .collect();
    let mut best: Option<(u32, Transcript)> = None;
    for r in results {
        if let Some((round, t)) = r? {
            if best.as_ref().map_or(true, |(b, _)| round < *b) {
                best = Some((round, t));
            }
        }
    }
    Ok(match best {
        None => Verdict { outcome: VerdictOutcome::PolicyWinsAlways, nodes_searched: 0, rounds: None },
        Some((round, t)) => Verdict {
            outcome: VerdictOutcome::PolicyBeatenBy(t),
            nodes_searched: 0,
            rounds: Some(round),
        },
    })
}

/// Whether a planned robber walk `plan = [p0, ..., pk]` stays safe from
/// cops that all start more than `d` from `v`: every `i < k` must satisfy
/// `i + dist(p_i, v) < d`, distances taken in the unburned graph.
pub fn robber_distance_safe(
    g: &Graph,
    v: Vertex,
    d: usize,
    plan: &[Vertex],
    cops: &[Vertex],
) -> Result<bool, PolicyError> {
    let bad = |reason: String| PolicyError::BadParams(reason);
    g.check_vertex(v).map_err(|e| bad(e.to_string()))?;
    for &p in plan.iter().chain(cops) {
        g.check_vertex(p).map_err(|e| bad(e.to_string()))?;
    }
    if plan.is_empty() {
        return Err(bad("empty plan".into()));
    }
    if let Some(w) = plan.windows(2).find(|w| w[0] != w[1] && !g.has_edge(w[0], w[1])) {
        return Err(bad(format!("plan step {} -> {} is not an edge", w[0], w[1])));
    }
    let dist = g.distances_from(v);
    let far = |u: Vertex| dist[u].map_or(true, |x| x > d);
    let k = plan.len() - 1;
    let plan_ok = plan[..k].iter().enumerate().all(|(i, &p)| dist[p].is_some_and(|x| i + x < d));
    Ok(plan_ok && cops.iter().all(|&c| far(c)))
}
