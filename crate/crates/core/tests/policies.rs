//! Policy behaviour checked by exhaustive search and random play.

use bridgeburn::game::{GameState, Outcome};
use bridgeburn::graph::*;
use bridgeburn::strategies::*;
use proptest::prelude::*;

fn graph(f: &FamilySpec) -> Graph {
    generate(f).unwrap()
}

fn verdict(g: &Graph, p: Policy, opts: &ExhaustOptions) -> Verdict {
    exhaust_vs_policy(g, &p, opts).unwrap()
}

fn only_cops(placements: impl IntoIterator<Item = Vertex>) -> ExhaustOptions {
    ExhaustOptions {
        cop_placements: Some(placements.into_iter().map(|c| vec![c]).collect()),
        ..Default::default()
    }
}

#[test]
fn mirror_cop_wins_on_small_hypercubes() {
    for d in 2..=4 {
        let g = graph(&FamilySpec::hypercube(d));
        let v = verdict(&g, Policy::Cop(Box::new(HypercubeMirror::new(&g).unwrap())), &Default::default());
        assert!(v.policy_wins(), "Q{d}: {:?}", v.counterexample().map(|t| t.to_json()));
    }
}

#[test]
fn stalemate_robber_is_never_caught_by_one_cop() {
    let g = graph(&FamilySpec::stalemate());
    let v = verdict(&g, Policy::Robber(Box::new(StalematePolicy::new(&g).unwrap())), &Default::default());
    assert!(v.policy_wins());
}

#[test]
fn eulerian_stall_lasts_at_least_five_rounds() {
    let g = graph(&FamilySpec::capture_family(2, 2));
    let v = verdict(&g, Policy::Robber(Box::new(EulerianStall::new(&g, 2, 2).unwrap())), &Default::default());
    // A lone cop does win here, just not quickly.
    assert!(!v.policy_wins());
    assert!(v.rounds.unwrap() >= 5, "{:?}", v.rounds);
}

#[test]
fn two_row_cop_wins_up_to_nine_columns() {
    for n in 1..=9 {
        let g = graph(&FamilySpec::grid(2, n));
        let v = verdict(&g, Policy::Cop(Box::new(grid2xn_cop(&g, 2, n).unwrap())), &Default::default());
        assert!(v.policy_wins(), "2x{n}: {:?}", v.counterexample().map(|t| t.to_json()));
    }
}

#[test]
fn gap_robber_beats_far_apart_cop() {
    let shape = GridShape::grid(2, 13);
    let g = graph(&FamilySpec::grid(2, 13));
    // The walk covers columns 3..=5; cops sit on column 1 or ten or more columns right of it.
    let mut cops: Vec<Vertex> = (0..26).filter(|&v| shape.coords(v).0 >= 11).collect();
    cops.push(shape.index(1, 0));
    let robber = gap_isolate(&g, shape, 1, 0, false).unwrap();
    assert!(verdict(&g, Policy::Robber(Box::new(robber)), &only_cops(cops)).policy_wins());
}

#[test]
fn gap_robber_needs_the_full_gap() {
    let shape = GridShape::grid(2, 13);
    let g = graph(&FamilySpec::grid(2, 13));
    let robber = gap_isolate(&g, shape, 1, 0, false).unwrap();
    let v = verdict(&g, Policy::Robber(Box::new(robber)), &only_cops([shape.index(10, 0)]));
    assert!(!v.policy_wins());
}

#[test]
fn degree4_robber_beats_a_distant_cop() {
    let shape = GridShape::torus(11, 11);
    let g = graph(&FamilySpec::torus(11, 11));
    let center = shape.index(5, 5);
    let dist = g.distances_from(center);
    let far: Vec<Vertex> = (0..121).filter(|&v| dist[v].unwrap() >= 10).collect();
    assert_eq!(far.len(), 4);
    let robber = Degree4Isolate::new(&g, shape, 5, 5).unwrap();
    assert!(verdict(&g, Policy::Robber(Box::new(robber)), &only_cops(far)).policy_wins());
}

#[test]
fn guard_cop_wins_after_reaching_the_start() {
    for f in [FamilySpec::cycle(6), FamilySpec::torus(3, 4), FamilySpec::complete(5)] {
        let g = graph(&f);
        let dist = g.distances_from(0);
        let starts: Vec<Vertex> = (0..g.vertex_count()).filter(|&v| dist[v] == Some(2)).collect();
        let opts = ExhaustOptions { robber_starts: Some(starts), ..Default::default() };
        let v = verdict(&g, Policy::Cop(Box::new(GuardStartVertex::new(&g, 0).unwrap())), &opts);
        assert!(v.policy_wins(), "{f:?}");
    }
}

#[test]
fn guard_cop_is_beaten_on_larger_tori() {
    // Chasing can pull the cop further from the start than the robber.
    let g = graph(&FamilySpec::torus(4, 4));
    let dist = g.distances_from(0);
    let starts: Vec<Vertex> = (0..16).filter(|&v| dist[v] == Some(2)).collect();
    let opts = ExhaustOptions { robber_starts: Some(starts), ..Default::default() };
    let v = verdict(&g, Policy::Cop(Box::new(GuardStartVertex::new(&g, 0).unwrap())), &opts);
    let t = v.counterexample().expect("robber line");
    t.replay().unwrap();
}

#[test]
fn mirror_beats_greedy_robber_on_q3() {
    let g = graph(&FamilySpec::hypercube(3));
    let t = run_match(&g, &HypercubeMirror::new(&g).unwrap(), &GreedyEvader, 100).unwrap();
    assert!(matches!(t.outcome, Outcome::CopWin { .. }));
}

#[test]
fn leaf_robber_escapes_a_stationary_cop_on_p6() {
    let g = graph(&FamilySpec::path(6));
    for c in 0..6 {
        let t = run_match(&g, &Stationary::new(&g, vec![c]).unwrap(), &LeafIsolate, 50).unwrap();
        assert!(matches!(t.outcome, Outcome::RobberEscape { .. }), "cop on {c}");
    }
}

#[test]
fn eulerian_stall_survives_four_rounds_against_greedy() {
    let g = graph(&FamilySpec::capture_family(2, 2));
    let robber = EulerianStall::new(&g, 2, 2).unwrap();
    for c in 0..g.vertex_count() {
        let t = run_match(&g, &GreedyCloser::new(&g, vec![c]).unwrap(), &robber, 200).unwrap();
        if let Outcome::CopWin { round } = t.outcome {
            assert!(round >= 5, "cop on {c} won in round {round}");
        }
    }
}

/// Cops that move at random, driven by a seed kept in memory.
struct RandomCops {
    seed: u64,
    count: usize,
}

/// Robber that moves at random.
struct RandomRobber {
    seed: u64,
}

fn next(x: u64) -> u64 {
    x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407)
}

fn pick<T: Copy>(xs: &[T], r: u64) -> T {
    xs[((r >> 33) % xs.len() as u64) as usize]
}

fn options(g: &Graph, s: &GameState, v: Vertex) -> Vec<Vertex> {
    let mut out = vec![v];
    out.extend(g.neighbors(v).iter().map(|&(w, _)| w).filter(|&w| s.can_step(g, v, w)));
    out
}

impl CopPolicy for RandomCops {
    fn name(&self) -> String {
        "random_cops".into()
    }

    fn placement(&self, g: &Graph) -> Result<Vec<Vertex>, PolicyError> {
        let mut r = self.seed;
        let mut out = Vec::new();
        for _ in 0..self.count {
            r = next(r);
            out.push(((r >> 33) % g.vertex_count() as u64) as usize);
        }
        Ok(out)
    }

    fn start(&self, _g: &Graph, _s: &GameState, _p: &[Vertex]) -> Memory {
        vec![self.seed as i64]
    }

    fn choose(&self, g: &Graph, s: &GameState, mem: &Memory) -> Result<(Vec<(Vertex, Vertex)>, Memory), PolicyError> {
        let mut r = mem[0] as u64;
        let mut moves = Vec::new();
        for &c in &s.cops {
            r = next(r);
            moves.push((c, pick(&options(g, s, c), r)));
        }
        Ok((moves, vec![r as i64]))
    }
}

impl RobberPolicy for RandomRobber {
    fn name(&self) -> String {
        "random_robber".into()
    }

    fn placement(&self, g: &Graph, cops: &[Vertex]) -> Result<Vertex, PolicyError> {
        let free: Vec<Vertex> = (0..g.vertex_count()).filter(|v| !cops.contains(v)).collect();
        Ok(pick(&free, next(self.seed)))
    }

    fn start(&self, _g: &Graph, _s: &GameState) -> Memory {
        vec![self.seed as i64]
    }

    fn choose(&self, g: &Graph, s: &GameState, mem: &Memory) -> Result<(Vertex, Memory), PolicyError> {
        let r = next(mem[0] as u64);
        Ok((pick(&options(g, s, s.robber), r), vec![r as i64]))
    }
}

/// Family, policy spec, and how many cops the opponent needs.
fn corpus() -> Vec<(FamilySpec, &'static str, usize)> {
    vec![
        (FamilySpec::hypercube(3), "hypercube_mirror", 1),
        (FamilySpec::cycle(6), "guard_start_vertex:0", 1),
        (FamilySpec::torus(4, 4), "guard_start_vertex:5", 1),
        (FamilySpec::grid(2, 8), "grid2xn_cop", 1),
        (FamilySpec::grid(2, 20), "grid2xn_cop", 1),
        (FamilySpec::torus(16, 14), "torus_placement", 1),
        (FamilySpec::grid(10, 10), "grid_placement", 1),
        (FamilySpec::grid(4, 4), "greedy_closer:0,15", 1),
        (FamilySpec::grid(4, 4), "stationary:5", 1),
        (FamilySpec::cycle(5), "optimal:2", 1),
        (FamilySpec::path(6), "leaf_isolate", 1),
        (FamilySpec::grid(2, 8), "corner_isolate:0,0,0", 1),
        (FamilySpec::grid(4, 6), "corner_isolate:5,3,1", 2),
        (FamilySpec::grid(2, 13), "border_isolate:5,0", 1),
        (FamilySpec::grid(2, 13), "gap_isolate:1,0,0", 2),
        (FamilySpec::torus(11, 11), "degree4_isolate:5,5", 1),
        (FamilySpec::capture_family(2, 2), "eulerian_stall", 1),
        (FamilySpec::stalemate(), "stalemate_policy", 1),
        (FamilySpec::grid(3, 3), "greedy_evader", 1),
        (FamilySpec::path(5), "scripted_walk:2,3,4", 1),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn policies_only_make_legal_moves(seed in any::<u64>(), which in 0usize..20) {
        let all = corpus();
        let (family, spec, opponents) = &all[which % all.len()];
        let g = graph(family);
        let ctx = PolicyContext { graph: &g, family: Some(family), budget: 1_000_000 };
        let policy = build_policy(&ctx, spec).unwrap();
        let rounds = 60;
        let t = match &policy {
            Policy::Cop(c) => run_match(&g, c.as_ref(), &RandomRobber { seed }, rounds),
            Policy::Robber(r) => run_match(&g, &RandomCops { seed, count: *opponents }, r.as_ref(), rounds),
        };
        match t {
            // A scripted start may be taken by a random cop.
            Err(PolicyError::Inapplicable { .. }) => {}
            Err(e) => return Err(TestCaseError::fail(format!("{spec}: {e}"))),
            Ok(t) => prop_assert!(t.replay().is_ok()),
        }
    }
}
