//! Positions, legal moves and terminal conditions of the bridge-burning game.
//!
//! A round is a cop half-turn followed by a robber half-turn. Every edge the
//! robber crosses is burned and unusable by either side afterwards. Capture is
//! positional: it ends the game on whichever half-turn produces it.

use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use thiserror::Error;

use crate::graph::{EdgeId, Graph, GraphJson, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("expected a {expected:?} position")]
    PhaseMismatch { expected: Phase },
    #[error("the position is already a capture")]
    AlreadyCaptured,
    #[error("vertex {0} is not in the graph")]
    InvalidVertex(Vertex),
    #[error("burned edge {0} is not in the graph")]
    InvalidEdge(EdgeId),
    #[error("illegal move: {0}")]
    IllegalMove(String),
    #[error("malformed transcript: {0}")]
    Transcript(String),
}

/// Bitmask over edge ids; a set bit means the edge has been burned.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct EdgeSet(SmallVec<[u64; 2]>);

impl EdgeSet {
    pub fn empty(edge_count: usize) -> Self {
        EdgeSet(SmallVec::from_elem(0, edge_count.div_ceil(64).max(1)))
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.0
            .get(e / 64)
            .map_or(false, |w| w >> (e % 64) & 1 == 1)
    }

    pub fn insert(&mut self, e: EdgeId) {
        self.0[e / 64] |= 1 << (e % 64);
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
            && self.0.len() <= other.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &w)| {
            (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| i * 64 + b)
        })
    }

    pub fn words(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Phase {
    CopTurn,
    RobberTurn,
}

pub type Cops = SmallVec<[Vertex; 4]>;

/// Full-information game position. Cops are kept sorted so that positions
/// differing only by cop labelling compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GameState {
    pub burned: EdgeSet,
    pub cops: Cops,
    pub robber: Vertex,
    pub phase: Phase,
}

impl fmt::Debug for GameState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{:?} cops={:?} robber={} burned={:?}]",
            self.phase,
            self.cops.as_slice(),
            self.robber,
            self.burned
        )
    }
}

impl GameState {
    /// Start of round 1: nothing burned, cops to move.
    pub fn initial(g: &Graph, cops: &[Vertex], robber: Vertex) -> Self {
        let mut cops: Cops = cops.iter().copied().collect();
        cops.sort_unstable();
        GameState { burned: EdgeSet::empty(g.edge_count()), cops, robber, phase: Phase::CopTurn }
    }

    pub fn validate(&self, g: &Graph) -> Result<(), GameError> {
        for &v in self.cops.iter().chain(std::iter::once(&self.robber)) {
            if v >= g.vertex_count() {
                return Err(GameError::InvalidVertex(v));
            }
        }
        if let Some(e) = self.burned.iter().find(|&e| e >= g.edge_count()) {
            return Err(GameError::InvalidEdge(e));
        }
        if self.burned.words().len() != EdgeSet::empty(g.edge_count()).words().len() {
            return Err(GameError::InvalidEdge(g.edge_count()));
        }
        if self.cops.windows(2).any(|w| w[0] > w[1]) {
            return Err(GameError::IllegalMove("cops are not in canonical order".into()));
        }
        Ok(())
    }

    pub fn is_capture(&self) -> bool {
        self.cops.contains(&self.robber)
    }

    pub fn is_open(&self, e: EdgeId) -> bool {
        !self.burned.contains(e)
    }

    /// Intact neighbors of `v`.
    pub fn open_neighbors<'g>(
        &'g self,
        g: &'g Graph,
        v: Vertex,
    ) -> impl Iterator<Item = (Vertex, EdgeId)> + 'g {
        g.neighbors(v).iter().copied().filter(move |&(_, e)| self.is_open(e))
    }

    pub fn can_step(&self, g: &Graph, from: Vertex, to: Vertex) -> bool {
        from == to || g.edge_between(from, to).map_or(false, |e| self.is_open(e))
    }

    /// Distances in the graph with burned edges removed.
    pub fn distances_from(&self, g: &Graph, v: Vertex) -> Vec<Option<usize>> {
        g.distances_from_filtered(v, |e| self.burned.contains(e))
    }
}

/// Whether the robber shares its component (burned edges removed) with at
/// least one cop. `false` means no cop can ever reach the robber again.
pub fn robber_component_check(g: &Graph, s: &GameState) -> bool {
    let dist = s.distances_from(g, s.robber);
    s.cops.iter().any(|&c| dist[c].is_some())
}

pub fn is_capture(s: &GameState) -> bool {
    s.is_capture()
}

/// All cop-team moves: each cop stays or crosses one intact edge.
/// Results are canonical and deduplicated, in ascending order.
pub fn cop_successors(g: &Graph, s: &GameState) -> Result<Vec<GameState>, GameError> {
    if s.phase != Phase::CopTurn {
        return Err(GameError::PhaseMismatch { expected: Phase::CopTurn });
    }
    if s.is_capture() {
        return Err(GameError::AlreadyCaptured);
    }
    Ok(cop_moves(g, s)
        .into_iter()
        .map(|cops| GameState {
            burned: s.burned.clone(),
            cops,
            robber: s.robber,
            phase: Phase::RobberTurn,
        })
        .collect())
}

/// Sorted, deduplicated cop multisets reachable in one cop turn.
pub(crate) fn cop_moves(g: &Graph, s: &GameState) -> Vec<Cops> {
    let options: Vec<Vec<Vertex>> = s
        .cops
        .iter()
        .map(|&c| {
            let mut o: Vec<Vertex> = std::iter::once(c)
                .chain(s.open_neighbors(g, c).map(|(w, _)| w))
                .collect();
            o.sort_unstable();
            o
        })
        .collect();
    let mut out: Vec<Cops> = Vec::new();
    let mut current: Cops = SmallVec::new();
    fn rec(options: &[Vec<Vertex>], current: &mut Cops, out: &mut Vec<Cops>) {
        match options.split_first() {
            None => {
                let mut c = current.clone();
                c.sort_unstable();
                out.push(c);
            }
            Some((first, rest)) => {
                for &v in first {
                    current.push(v);
                    rec(rest, current, out);
                    current.pop();
                }
            }
        }
    }
    rec(&options, &mut current, &mut out);
    out.sort_unstable();
    out.dedup();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Actor {
    Cop(usize),
    Robber,
}

/// One piece moving (or staying) during a half-turn.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveRecord {
    pub actor: Actor,
    pub from: Vertex,
    pub to: Vertex,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub burned_edge: Option<EdgeId>,
}

/// Robber options: stay first, then one per intact incident edge in adjacency
/// order. Moving onto a cop is legal and yields a captured state.
pub fn robber_successors(
    g: &Graph,
    s: &GameState,
) -> Result<Vec<(GameState, MoveRecord)>, GameError> {
    robber_successors_variant(g, s, true)
}

pub(crate) fn robber_successors_variant(
    g: &Graph,
    s: &GameState,
    burning: bool,
) -> Result<Vec<(GameState, MoveRecord)>, GameError> {
    if s.phase != Phase::RobberTurn {
        return Err(GameError::PhaseMismatch { expected: Phase::RobberTurn });
    }
    if s.is_capture() {
        return Err(GameError::AlreadyCaptured);
    }
    let stay = GameState { phase: Phase::CopTurn, ..s.clone() };
    let mut out = vec![(
        stay,
        MoveRecord { actor: Actor::Robber, from: s.robber, to: s.robber, burned_edge: None },
    )];
    for (w, e) in s.open_neighbors(g, s.robber) {
        let mut next = GameState { robber: w, phase: Phase::CopTurn, ..s.clone() };
        if burning {
            next.burned.insert(e);
        }
        out.push((
            next,
            MoveRecord {
                actor: Actor::Robber,
                from: s.robber,
                to: w,
                burned_edge: burning.then_some(e),
            },
        ));
    }
    Ok(out)
}

/// Applies a cop-team move given as `(from, to)` pairs, one per cop.
pub fn apply_cop_moves(
    g: &Graph,
    s: &GameState,
    moves: &[(Vertex, Vertex)],
) -> Result<GameState, GameError> {
    if s.phase != Phase::CopTurn {
        return Err(GameError::PhaseMismatch { expected: Phase::CopTurn });
    }
    let mut froms: Vec<Vertex> = moves.iter().map(|m| m.0).collect();
    froms.sort_unstable();
    if froms.as_slice() != s.cops.as_slice() {
        return Err(GameError::IllegalMove(format!(
            "cop moves start from {:?} but cops stand on {:?}",
            froms,
            s.cops.as_slice()
        )));
    }
    for &(a, b) in moves {
        if b >= g.vertex_count() {
            return Err(GameError::InvalidVertex(b));
        }
        if !s.can_step(g, a, b) {
            return Err(GameError::IllegalMove(format!("cop cannot move {a} -> {b}")));
        }
    }
    let mut cops: Cops = moves.iter().map(|m| m.1).collect();
    cops.sort_unstable();
    Ok(GameState { burned: s.burned.clone(), cops, robber: s.robber, phase: Phase::RobberTurn })
}

pub fn apply_robber_move(
    g: &Graph,
    s: &GameState,
    to: Vertex,
    burning: bool,
) -> Result<(GameState, MoveRecord), GameError> {
    if s.phase != Phase::RobberTurn {
        return Err(GameError::PhaseMismatch { expected: Phase::RobberTurn });
    }
    if to == s.robber {
        let next = GameState { phase: Phase::CopTurn, ..s.clone() };
        return Ok((
            next,
            MoveRecord { actor: Actor::Robber, from: to, to, burned_edge: None },
        ));
    }
    let e = g
        .edge_between(s.robber, to)
        .filter(|&e| s.is_open(e))
        .ok_or_else(|| GameError::IllegalMove(format!("robber cannot move {} -> {to}", s.robber)))?;
    let mut next = GameState { robber: to, phase: Phase::CopTurn, ..s.clone() };
    if burning {
        next.burned.insert(e);
    }
    Ok((
        next,
        MoveRecord {
            actor: Actor::Robber,
            from: s.robber,
            to,
            burned_edge: burning.then_some(e),
        },
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Outcome {
    CopWin { round: u32 },
    RobberEscape { reason: EscapeReason },
    RoundLimit { rounds: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EscapeReason {
    /// The robber's component holds no cop.
    Isolated,
    /// Play returned to an earlier position, so it can repeat forever.
    Repetition,
}

/// A recorded play. Each cop turn lists every cop once; each robber turn is a
/// single record (possibly a stay).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transcript {
    pub graph: Graph,
    pub cops0: Vec<Vertex>,
    pub robber0: Vertex,
    pub moves: Vec<MoveRecord>,
    pub outcome: Outcome,
}

#[derive(Serialize, Deserialize)]
struct TranscriptJson {
    graph: GraphJson,
    cops0: Vec<Vertex>,
    robber0: Vertex,
    turns: Vec<MoveRecord>,
    outcome: Outcome,
}

impl Transcript {
    pub fn initial_state(&self) -> GameState {
        GameState::initial(&self.graph, &self.cops0, self.robber0)
    }

    /// Every state of the play, starting with the initial one.
    pub fn replay(&self) -> Result<Vec<GameState>, GameError> {
        let g = &self.graph;
        let mut state = self.initial_state();
        state.validate(g)?;
        let k = self.cops0.len();
        let mut states = vec![state.clone()];
        let mut i = 0;
        while i < self.moves.len() {
            match state.phase {
                Phase::CopTurn => {
                    let turn = self.moves.get(i..i + k).ok_or_else(|| {
                        GameError::Transcript("truncated cop turn".into())
                    })?;
                    if turn.iter().enumerate().any(|(j, m)| m.actor != Actor::Cop(j)) {
                        return Err(GameError::Transcript(format!(
                            "expected cop records 0..{k} at move {i}"
                        )));
                    }
                    let pairs: Vec<_> = turn.iter().map(|m| (m.from, m.to)).collect();
                    state = apply_cop_moves(g, &state, &pairs)?;
                    i += k;
                }
                Phase::RobberTurn => {
                    let m = &self.moves[i];
                    if m.actor != Actor::Robber || m.from != state.robber {
                        return Err(GameError::Transcript(format!(
                            "expected a robber record from {} at move {i}",
                            state.robber
                        )));
                    }
                    let (next, rec) = apply_robber_move(g, &state, m.to, true)?;
                    if rec.burned_edge != m.burned_edge {
                        return Err(GameError::Transcript(format!(
                            "burned edge mismatch at move {i}"
                        )));
                    }
                    state = next;
                    i += 1;
                }
            }
            states.push(state.clone());
            if state.is_capture() && i < self.moves.len() {
                return Err(GameError::Transcript("moves recorded after capture".into()));
            }
        }
        Ok(states)
    }

    pub fn final_state(&self) -> Result<GameState, GameError> {
        Ok(self.replay()?.pop().expect("replay yields the initial state"))
    }

    pub fn robber_move_count(&self) -> usize {
        self.moves
            .iter()
            .filter(|m| m.actor == Actor::Robber && m.from != m.to)
            .count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&TranscriptJson {
            graph: GraphJson::from(&self.graph),
            cops0: self.cops0.clone(),
            robber0: self.robber0,
            turns: self.moves.clone(),
            outcome: self.outcome.clone(),
        })
        .expect("transcript serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, GameError> {
        let t: TranscriptJson =
            serde_json::from_str(text).map_err(|e| GameError::Transcript(e.to_string()))?;
        let graph = Graph::try_from(t.graph).map_err(|e| GameError::Transcript(e.to_string()))?;
        Ok(Transcript {
            graph,
            cops0: t.cops0,
            robber0: t.robber0,
            moves: t.turns,
            outcome: t.outcome,
        })
    }
}
