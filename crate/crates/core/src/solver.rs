//! Exact solving by retrograde attractor computation.
//!
//! For a fixed initial cop placement the solver enumerates every position
//! reachable from it (all robber starts at once), then computes the least
//! fixed point of cop-winning positions level by level. A cop-turn position
//! is won in `r` rounds when its best successor is won in `r - 1`; a
//! robber-turn position is resolved once all of its successors are, taking
//! the largest value. Anything never resolved, including every cycle of
//! play, is a robber win.
//!
//! Two kinds of positions are closed off without expansion: captures, and
//! positions where no cop shares the robber's component (burned edges only
//! accumulate, so those are permanent robber wins). A cop-turn position with
//! a cop next to the robber is resolved as a one-round win directly.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::game::{
    cop_moves, robber_component_check, robber_successors_variant, Cops, GameError, GameState,
    Phase,
};
use crate::graph::{Graph, Vertex};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("the graph is disconnected")]
    Disconnected,
    #[error("at least one cop is required")]
    ZeroCops,
    #[error("the graph has no vertices")]
    EmptyGraph,
    #[error(transparent)]
    InvalidState(#[from] GameError),
    #[error("explored-state budget of {budget} exhausted")]
    BudgetExceeded { budget: u64 },
    #[error("one cop cannot win on this graph, so capture time is undefined")]
    NotCopWin,
    #[error("invalid symmetry: {0}")]
    InvalidSymmetry(String),
}

/// Classic Cops and Robbers is the same game without burning.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Variant {
    pub burning: bool,
}

impl Variant {
    pub const BRIDGE_BURNING: Variant = Variant { burning: true };
    pub const CLASSIC: Variant = Variant { burning: false };
}

impl Default for Variant {
    fn default() -> Self {
        Variant::BRIDGE_BURNING
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Cop,
    Robber,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PositionValue {
    /// Capture happens within this many further rounds (0 = already captured).
    CopWin(u32),
    RobberWin,
}

impl PositionValue {
    pub fn is_cop_win(self) -> bool {
        matches!(self, PositionValue::CopWin(_))
    }
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub variant: Variant,
    /// Cap on positions explored across all placements.
    pub budget: u64,
    pub record_strategy: bool,
    /// Vertex relabelings (automorphisms); placements mapped to a smaller
    /// placement by any of them are skipped.
    pub symmetries: Vec<Vec<Vertex>>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            variant: Variant::BRIDGE_BURNING,
            budget: DEFAULT_BUDGET,
            record_strategy: false,
            symmetries: Vec::new(),
        }
    }
}

impl SolveOptions {
    pub fn classic() -> Self {
        SolveOptions { variant: Variant::CLASSIC, ..Default::default() }
    }

    pub fn with_budget(budget: u64) -> Self {
        SolveOptions { budget, ..Default::default() }
    }
}

/// Optimal cop responses: cop-turn position to the position after the cop move.
#[derive(Debug, Clone, Default)]
pub struct Strategy {
    pub moves: HashMap<GameState, GameState>,
}

impl Strategy {
    pub fn next(&self, s: &GameState) -> Option<&GameState> {
        self.moves.get(s)
    }
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub winner: Side,
    pub k: usize,
    pub optimal_placement: Option<Vec<Vertex>>,
    pub capture_time_rounds: Option<u32>,
    pub explored_states: u64,
    pub strategy: Option<Strategy>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct SolveResultJson<'a> {
    winner: Side,
    k: usize,
    placement: &'a [Vertex],
    capture_time_rounds: Option<u32>,
    explored_states: u64,
}

impl SolveResult {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SolveResultJson {
            winner: self.winner,
            k: self.k,
            placement: self.optimal_placement.as_deref().unwrap_or(&[]),
            capture_time_rounds: self.capture_time_rounds,
            explored_states: self.explored_states,
        })
        .expect("solve result serializes")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CopNumber {
    Exact(usize),
    Exceeds(usize),
}

const CAPTURED: u32 = 0;
const ESCAPED: u32 = 1;
const UNRESOLVED: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Captured,
    Escaped,
    Cop,
    Robber,
}

/// Explicit reachable game graph plus its solved values.
struct Arena<'g> {
    graph: &'g Graph,
    variant: Variant,
    states: Vec<Option<GameState>>,
    kinds: Vec<Kind>,
    index: HashMap<GameState, u32>,
    succ_start: Vec<u32>,
    succ: Vec<u32>,
    values: Vec<u32>,
}

struct Budget<'a> {
    used: &'a AtomicU64,
    limit: u64,
}

impl Budget<'_> {
    fn charge(&self) -> Result<(), SolveError> {
        if self.used.fetch_add(1, Ordering::Relaxed) + 1 > self.limit {
            Err(SolveError::BudgetExceeded { budget: self.limit })
        } else {
            Ok(())
        }
    }
}

impl<'g> Arena<'g> {
    fn build(
        graph: &'g Graph,
        variant: Variant,
        roots: &[GameState],
        budget: &Budget<'_>,
    ) -> Result<(Self, Vec<u32>), SolveError> {
        let mut arena = Arena {
            graph,
            variant,
            states: vec![None, None],
            kinds: vec![Kind::Captured, Kind::Escaped],
            index: HashMap::new(),
            succ_start: Vec::new(),
            succ: Vec::new(),
            values: Vec::new(),
        };
        let mut root_ids = Vec::with_capacity(roots.len());
        for r in roots {
            root_ids.push(arena.intern(r.clone(), budget)?);
        }
        // Node ids are assigned in BFS order, so expanding them in id order
        // is the breadth-first sweep.
        let mut succ_lists: Vec<Vec<u32>> = vec![Vec::new(), Vec::new()];
        let mut next = 2;
        while next < arena.states.len() {
            let state = arena.states[next].clone().expect("interior node has a state");
            let mut out = arena.expand(&state, budget)?;
            out.sort_unstable();
            out.dedup();
            succ_lists.push(out);
            next += 1;
        }
        let mut start = Vec::with_capacity(succ_lists.len() + 1);
        let mut flat = Vec::new();
        for l in &succ_lists {
            start.push(flat.len() as u32);
            flat.extend_from_slice(l);
        }
        start.push(flat.len() as u32);
        arena.succ_start = start;
        arena.succ = flat;
        arena.solve();
        Ok((arena, root_ids))
    }

    fn intern(&mut self, s: GameState, budget: &Budget<'_>) -> Result<u32, SolveError> {
        if s.is_capture() {
            return Ok(CAPTURED);
        }
        if let Some(&id) = self.index.get(&s) {
            return Ok(id);
        }
        if self.variant.burning && !s.burned.is_empty() && !robber_component_check(self.graph, &s)
        {
            return Ok(ESCAPED);
        }
        budget.charge()?;
        let id = self.states.len() as u32;
        self.kinds.push(match s.phase {
            Phase::CopTurn => Kind::Cop,
            Phase::RobberTurn => Kind::Robber,
        });
        self.index.insert(s.clone(), id);
        self.states.push(Some(s));
        Ok(id)
    }

    fn expand(&mut self, s: &GameState, budget: &Budget<'_>) -> Result<Vec<u32>, SolveError> {
        match s.phase {
            Phase::CopTurn => {
                if cop_adjacent_to_robber(self.graph, s) {
                    return Ok(vec![CAPTURED]);
                }
                let mut out = Vec::new();
                for cops in cop_moves(self.graph, s) {
                    let next = GameState {
                        burned: s.burned.clone(),
                        cops,
                        robber: s.robber,
                        phase: Phase::RobberTurn,
                    };
                    out.push(self.intern(next, budget)?);
                }
                Ok(out)
            }
            Phase::RobberTurn => {
                let mut out = Vec::new();
                for (next, _) in robber_successors_variant(self.graph, s, self.variant.burning)? {
                    out.push(self.intern(next, budget)?);
                }
                Ok(out)
            }
        }
    }

    fn successors(&self, id: u32) -> &[u32] {
        let i = id as usize;
        &self.succ[self.succ_start[i] as usize..self.succ_start[i + 1] as usize]
    }

    fn solve(&mut self) {
        let n = self.kinds.len();
        let mut pred_count = vec![0u32; n + 1];
        for id in 2..n as u32 {
            for &t in self.successors(id) {
                pred_count[t as usize + 1] += 1;
            }
        }
        for i in 0..n {
            pred_count[i + 1] += pred_count[i];
        }
        let pred_start = pred_count;
        let mut fill = pred_start.clone();
        let mut preds = vec![0u32; pred_start[n] as usize];
        for id in 2..n as u32 {
            for &t in self.successors(id) {
                preds[fill[t as usize] as usize] = id;
                fill[t as usize] += 1;
            }
        }
        let mut pending: Vec<u32> = (0..n as u32)
            .map(|id| self.successors(id).len() as u32)
            .collect();
        let mut values = vec![UNRESOLVED; n];
        values[CAPTURED as usize] = 0;
        let mut buckets: Vec<Vec<u32>> = vec![vec![CAPTURED]];
        let mut level = 0;
        while level < buckets.len() {
            let mut i = 0;
            while i < buckets[level].len() {
                let v = buckets[level][i] as usize;
                i += 1;
                for &p in &preds[pred_start[v] as usize..pred_start[v + 1] as usize] {
                    let p = p as usize;
                    if values[p] != UNRESOLVED {
                        continue;
                    }
                    match self.kinds[p] {
                        Kind::Cop => {
                            values[p] = level as u32 + 1;
                            if buckets.len() <= level + 1 {
                                buckets.push(Vec::new());
                            }
                            buckets[level + 1].push(p as u32);
                        }
                        Kind::Robber => {
                            pending[p] -= 1;
                            if pending[p] == 0 {
                                values[p] = level as u32;
                                buckets[level].push(p as u32);
                            }
                        }
                        Kind::Captured | Kind::Escaped => {}
                    }
                }
            }
            level += 1;
        }
        self.values = values;
    }

    fn value(&self, id: u32) -> PositionValue {
        match self.values[id as usize] {
            UNRESOLVED => PositionValue::RobberWin,
            v => PositionValue::CopWin(v),
        }
    }

    fn strategy(&self) -> Strategy {
        let mut moves = HashMap::new();
        for id in 2..self.kinds.len() as u32 {
            if self.kinds[id as usize] != Kind::Cop {
                continue;
            }
            let PositionValue::CopWin(v) = self.value(id) else { continue };
            let state = self.states[id as usize].as_ref().expect("interior node");
            let best = self
                .successors(id)
                .iter()
                .copied()
                .find(|&t| self.values[t as usize] == v - 1)
                .expect("a resolved cop node has a witnessing successor");
            let next = if best == CAPTURED {
                capture_move(self.graph, state)
            } else {
                self.states[best as usize].clone().expect("interior node")
            };
            moves.insert(state.clone(), next);
        }
        Strategy { moves }
    }
}

fn cop_adjacent_to_robber(g: &Graph, s: &GameState) -> bool {
    s.cops.iter().any(|&c| c == s.robber || s.can_step(g, c, s.robber))
}

/// The cop-turn move that captures immediately, with other cops standing still.
fn capture_move(g: &Graph, s: &GameState) -> GameState {
    let mut cops: Cops = s.cops.clone();
    if let Some(c) = cops.iter_mut().find(|c| s.can_step(g, **c, s.robber)) {
        *c = s.robber;
    }
    cops.sort_unstable();
    GameState { burned: s.burned.clone(), cops, robber: s.robber, phase: Phase::RobberTurn }
}

/// Exact value of a single position.
pub fn solve_position(
    g: &Graph,
    s: &GameState,
    variant: Variant,
) -> Result<PositionValue, SolveError> {
    solve_position_with_budget(g, s, variant, DEFAULT_BUDGET)
}

pub fn solve_position_with_budget(
    g: &Graph,
    s: &GameState,
    variant: Variant,
    budget: u64,
) -> Result<PositionValue, SolveError> {
    s.validate(g)?;
    if s.is_capture() {
        return Ok(PositionValue::CopWin(0));
    }
    let used = AtomicU64::new(0);
    let budget = Budget { used: &used, limit: budget };
    let (arena, roots) = Arena::build(g, variant, std::slice::from_ref(s), &budget)?;
    Ok(arena.value(roots[0]))
}

/// All sorted `k`-multisets over `0..n`, in lexicographic order.
pub fn cop_multisets(n: usize, k: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, lo: usize, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in lo..n {
            cur.push(v);
            rec(n, k, v, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

struct PlacementEval {
    /// Worst case over robber starts; `None` when some start escapes.
    worst: Option<u32>,
}

fn evaluate_placement(
    g: &Graph,
    placement: &[Vertex],
    variant: Variant,
    budget: &Budget<'_>,
) -> Result<PlacementEval, SolveError> {
    let roots: Vec<GameState> = (0..g.vertex_count())
        .filter(|v| !placement.contains(v))
        .map(|r| GameState::initial(g, placement, r))
        .collect();
    if roots.is_empty() {
        return Ok(PlacementEval { worst: Some(0) });
    }
    let (arena, ids) = Arena::build(g, variant, &roots, budget)?;
    let mut worst = 0;
    for id in ids {
        match arena.value(id) {
            PositionValue::CopWin(r) => worst = worst.max(r),
            PositionValue::RobberWin => return Ok(PlacementEval { worst: None }),
        }
    }
    Ok(PlacementEval { worst: Some(worst) })
}

fn check_symmetries(g: &Graph, symmetries: &[Vec<Vertex>]) -> Result<(), SolveError> {
    for sigma in symmetries {
        if sigma.len() != g.vertex_count() {
            return Err(SolveError::InvalidSymmetry("relabeling has the wrong length".into()));
        }
        let mut seen = vec![false; sigma.len()];
        for &v in sigma {
            if v >= sigma.len() || std::mem::replace(&mut seen[v], true) {
                return Err(SolveError::InvalidSymmetry("relabeling is not a permutation".into()));
            }
        }
        if g.edges().iter().any(|&(a, b)| !g.has_edge(sigma[a], sigma[b])) {
            return Err(SolveError::InvalidSymmetry("relabeling is not an automorphism".into()));
        }
    }
    Ok(())
}

fn skipped_by_symmetry(placement: &[Vertex], symmetries: &[Vec<Vertex>]) -> bool {
    symmetries.iter().any(|sigma| {
        let mut image: Vec<Vertex> = placement.iter().map(|&v| sigma[v]).collect();
        image.sort_unstable();
        image.as_slice() < placement
    })
}

/// Decides whether `k` cops win from some initial placement, and reports the
/// lexicographically least placement with the smallest worst-case capture time.
pub fn cop_wins_with_k(
    g: &Graph,
    k: usize,
    opts: &SolveOptions,
) -> Result<SolveResult, SolveError> {
    if k == 0 {
        return Err(SolveError::ZeroCops);
    }
    if g.vertex_count() == 0 {
        return Err(SolveError::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    check_symmetries(g, &opts.symmetries)?;
    let placements: Vec<Vec<Vertex>> = cop_multisets(g.vertex_count(), k)
        .into_iter()
        .filter(|p| !skipped_by_symmetry(p, &opts.symmetries))
        .collect();
    let used = AtomicU64::new(0);
    let budget = Budget { used: &used, limit: opts.budget };
    let evals: Vec<Result<PlacementEval, SolveError>> = placements
        .par_iter()
        .map(|p| evaluate_placement(g, p, opts.variant, &budget))
        .collect();
    let mut best: Option<(u32, usize)> = None;
    for (i, e) in evals.into_iter().enumerate() {
        if let Some(w) = e?.worst {
            if best.map_or(true, |(bw, _)| w < bw) {
                best = Some((w, i));
            }
        }
    }
    let explored = used.load(Ordering::Relaxed);
    Ok(match best {
        None => SolveResult {
            winner: Side::Robber,
            k,
            optimal_placement: None,
            capture_time_rounds: None,
            explored_states: explored,
            strategy: None,
        },
        Some((rounds, i)) => {
            let placement = placements[i].clone();
            let strategy = if opts.record_strategy {
                Some(placement_strategy(g, &placement, opts.variant)?)
            } else {
                None
            };
            SolveResult {
                winner: Side::Cop,
                k,
                optimal_placement: Some(placement),
                capture_time_rounds: Some(rounds),
                explored_states: explored,
                strategy,
            }
        }
    })
}

/// Optimal cop play from a fixed placement, for every reachable position.
pub fn placement_strategy(
    g: &Graph,
    placement: &[Vertex],
    variant: Variant,
) -> Result<Strategy, SolveError> {
    let roots: Vec<GameState> = (0..g.vertex_count())
        .filter(|v| !placement.contains(v))
        .map(|r| GameState::initial(g, placement, r))
        .collect();
    let used = AtomicU64::new(0);
    let budget = Budget { used: &used, limit: u64::MAX };
    let (arena, _) = Arena::build(g, variant, &roots, &budget)?;
    Ok(arena.strategy())
}

/// Least `k <= k_max` for which the cops win. Relies on monotonicity in `k`.
pub fn bridge_burning_cop_number(
    g: &Graph,
    k_max: usize,
    opts: &SolveOptions,
) -> Result<CopNumber, SolveError> {
    if k_max == 0 {
        return Err(SolveError::ZeroCops);
    }
    for k in 1..=k_max {
        if cop_wins_with_k(g, k, opts)?.winner == Side::Cop {
            return Ok(CopNumber::Exact(k));
        }
    }
    Ok(CopNumber::Exceeds(k_max))
}

/// Worst-case rounds for one optimally placed cop; defined only when one cop wins.
pub fn capture_time_bb(g: &Graph, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    let opts = SolveOptions { variant: Variant::BRIDGE_BURNING, ..opts.clone() };
    let r = cop_wins_with_k(g, 1, &opts)?;
    if r.winner != Side::Cop {
        return Err(SolveError::NotCopWin);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn g(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }

    #[test]
    fn k2_first_turn_capture() {
        let k2 = g(FamilySpec::complete(2));
        let s = GameState::initial(&k2, &[0], 1);
        assert_eq!(solve_position(&k2, &s, Variant::BRIDGE_BURNING).unwrap(), PositionValue::CopWin(1));
    }

    #[test]
    fn captured_position_is_round_zero() {
        let p = g(FamilySpec::path(3));
        let s = GameState::initial(&p, &[1], 1);
        assert_eq!(solve_position(&p, &s, Variant::BRIDGE_BURNING).unwrap(), PositionValue::CopWin(0));
    }

    #[test]
    fn stalemate_position_is_robber_win() {
        let s = g(FamilySpec::stalemate());
        let st = GameState::initial(&s, &[0], 2);
        assert_eq!(solve_position(&s, &st, Variant::BRIDGE_BURNING).unwrap(), PositionValue::RobberWin);
    }

    #[test]
    fn classic_c5_one_cop_loses_everywhere() {
        let c5 = g(FamilySpec::cycle(5));
        let r = cop_wins_with_k(&c5, 1, &SolveOptions::classic()).unwrap();
        assert_eq!(r.winner, Side::Robber);
    }

    #[test]
    fn small_families() {
        let opts = SolveOptions::default();
        assert_eq!(cop_wins_with_k(&g(FamilySpec::cycle(7)), 1, &opts).unwrap().winner, Side::Cop);
        let p6 = g(FamilySpec::path(6));
        assert_eq!(cop_wins_with_k(&p6, 1, &opts).unwrap().winner, Side::Robber);
        assert_eq!(cop_wins_with_k(&p6, 2, &opts).unwrap().winner, Side::Cop);
        assert_eq!(
            cop_wins_with_k(&g(FamilySpec::stalemate()), 1, &opts).unwrap().winner,
            Side::Robber
        );
        assert_eq!(
            bridge_burning_cop_number(&g(FamilySpec::complete(5)), 3, &opts).unwrap(),
            CopNumber::Exact(1)
        );
        assert_eq!(
            bridge_burning_cop_number(&g(FamilySpec::complete_bipartite(2, 3)), 3, &opts).unwrap(),
            CopNumber::Exact(1)
        );
        assert_eq!(
            bridge_burning_cop_number(&g(FamilySpec::stalemate()), 3, &opts).unwrap(),
            CopNumber::Exact(2)
        );
        assert_eq!(
            bridge_burning_cop_number(&g(FamilySpec::grid(2, 5)), 3, &opts).unwrap(),
            CopNumber::Exact(1)
        );
        assert_eq!(
            bridge_burning_cop_number(&g(FamilySpec::path(6)), 1, &opts).unwrap(),
            CopNumber::Exceeds(1)
        );
    }

    #[test]
    fn capture_time_examples() {
        let opts = SolveOptions::default();
        let r = capture_time_bb(&g(FamilySpec::complete(4)), &opts).unwrap();
        assert_eq!(r.capture_time_rounds, Some(1));
        assert_eq!(
            capture_time_bb(&g(FamilySpec::path(6)), &opts).unwrap_err(),
            SolveError::NotCopWin
        );
    }

    #[test]
    fn input_errors() {
        let two = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let opts = SolveOptions::default();
        assert_eq!(cop_wins_with_k(&two, 1, &opts).unwrap_err(), SolveError::Disconnected);
        let p = g(FamilySpec::path(3));
        assert_eq!(cop_wins_with_k(&p, 0, &opts).unwrap_err(), SolveError::ZeroCops);
        let bad = GameState::initial(&p, &[7], 1);
        assert!(matches!(
            solve_position(&p, &bad, Variant::BRIDGE_BURNING),
            Err(SolveError::InvalidState(_))
        ));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let p = g(FamilySpec::grid(2, 4));
        let err = cop_wins_with_k(&p, 1, &SolveOptions::with_budget(10)).unwrap_err();
        assert_eq!(err, SolveError::BudgetExceeded { budget: 10 });
    }

    #[test]
    fn every_vertex_occupied_is_round_zero() {
        let k2 = g(FamilySpec::complete(2));
        let r = cop_wins_with_k(&k2, 2, &SolveOptions::default()).unwrap();
        assert_eq!(r.capture_time_rounds, Some(0));
        assert_eq!(r.optimal_placement, Some(vec![0, 1]));
    }

    #[test]
    fn multisets_enumerate_in_order() {
        assert_eq!(
            cop_multisets(3, 2),
            vec![vec![0, 0], vec![0, 1], vec![0, 2], vec![1, 1], vec![1, 2], vec![2, 2]]
        );
        assert_eq!(cop_multisets(6, 3).len(), 56);
    }

    #[test]
    fn symmetry_pruning_keeps_the_answer() {
        let c6 = g(FamilySpec::cycle(6));
        let rotation: Vec<Vertex> = (0..6).map(|v| (v + 1) % 6).collect();
        let plain = cop_wins_with_k(&c6, 1, &SolveOptions::default()).unwrap();
        let pruned = cop_wins_with_k(
            &c6,
            1,
            &SolveOptions { symmetries: vec![rotation], ..Default::default() },
        )
        .unwrap();
        assert_eq!(plain.optimal_placement, pruned.optimal_placement);
        assert_eq!(plain.capture_time_rounds, pruned.capture_time_rounds);
        assert!(pruned.explored_states < plain.explored_states);
        let bogus = vec![1, 0, 2, 3, 4, 5];
        let p6 = g(FamilySpec::path(6));
        assert!(matches!(
            cop_wins_with_k(&p6, 1, &SolveOptions { symmetries: vec![bogus], ..Default::default() }),
            Err(SolveError::InvalidSymmetry(_))
        ));
    }

    #[test]
    fn strategy_covers_reachable_cop_positions() {
        let p5 = g(FamilySpec::path(5));
        let r = cop_wins_with_k(
            &p5,
            1,
            &SolveOptions { record_strategy: true, ..Default::default() },
        )
        .unwrap();
        let strat = r.strategy.unwrap();
        let place = r.optimal_placement.unwrap();
        for robber in (0..5).filter(|v| !place.contains(v)) {
            let s = GameState::initial(&p5, &place, robber);
            assert!(strat.next(&s).is_some());
        }
    }
}
