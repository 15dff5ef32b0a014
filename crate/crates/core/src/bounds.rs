//! Domination parameters by exhaustive search, closed-form family values,
//! and the explicit cop placements behind the grid and torus upper bounds.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Family, FamilySpec, GridShape, Graph, Vertex};
use crate::tree::tree_cop_number;

pub const DEFAULT_BOUNDS_BUDGET: u64 = 10_000_000;
const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("search budget of {budget} exhausted")]
    BudgetExceeded { budget: u64 },
    #[error("graph has {0} vertices, more than exhaustive search supports")]
    TooLarge(usize),
    #[error("the graph has no vertices")]
    EmptyGraph,
    #[error("no formula for {0}")]
    Unsupported(String),
    #[error("placement needs larger dimensions: {0}")]
    TooSmall(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Witnesses {
    pub gamma: Vec<Vertex>,
    pub gamma2: Vec<Vertex>,
    pub clique_cover_dom: Vec<Vec<Vertex>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundsReport {
    pub gamma: usize,
    pub gamma2: usize,
    pub clique_cover_dom: usize,
    pub witnesses: Witnesses,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FamilyFormulaResult {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper: Option<usize>,
    /// Lower bound on one-cop capture time, where a formula gives one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub capture_time_lower: Option<usize>,
    pub source: String,
}

impl FamilyFormulaResult {
    fn exact(v: usize, source: &str) -> Self {
        FamilyFormulaResult {
            exact: Some(v),
            lower: Some(v),
            upper: Some(v),
            capture_time_lower: None,
            source: source.to_string(),
        }
    }

    fn range(lower: usize, upper: usize, source: &str) -> Self {
        let mut r = FamilyFormulaResult::exact(lower, source);
        r.upper = Some(upper);
        if lower != upper {
            r.exact = None;
        }
        r
    }
}

struct Counter {
    used: u64,
    limit: u64,
}

impl Counter {
    fn tick(&mut self) -> Result<(), BoundsError> {
        self.used += 1;
        if self.used > self.limit {
            Err(BoundsError::BudgetExceeded { budget: self.limit })
        } else {
            Ok(())
        }
    }
}

fn mask_of(vs: &[Vertex]) -> u64 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Smallest `k` and lexicographically first `k`-subset whose coverage is total.
fn min_cover(
    cover: &[u64],
    full: u64,
    counter: &mut Counter,
) -> Result<Vec<usize>, BoundsError> {
    for k in 1..=cover.len() {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            counter.tick()?;
            if idx.iter().fold(0, |m, &i| m | cover[i]) == full {
                return Ok(idx);
            }
            // Advance to the next k-combination.
            let mut i = k;
            while i > 0 && idx[i - 1] == cover.len() - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    unreachable!("the full index set always covers")
}

/// All complete vertex subsets, each listed in increasing order.
pub fn all_cliques(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn extend(g: &Graph, from: Vertex, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        for v in from..g.vertex_count() {
            if cur.iter().all(|&u| g.has_edge(u, v)) {
                cur.push(v);
                out.push(cur.clone());
                extend(g, v + 1, cur, out);
                cur.pop();
            }
        }
    }
    extend(g, 0, &mut cur, &mut out);
    out
}

pub fn domination_numbers(g: &Graph) -> Result<BoundsReport, BoundsError> {
    domination_numbers_with_budget(g, DEFAULT_BOUNDS_BUDGET)
}

pub fn domination_numbers_with_budget(g: &Graph, budget: u64) -> Result<BoundsReport, BoundsError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(BoundsError::EmptyGraph);
    }
    if n > MAX_VERTICES {
        return Err(BoundsError::TooLarge(n));
    }
    let mut counter = Counter { used: 0, limit: budget };
    let full = full_mask(n);
    let closed: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(1u64 << v, |m, &(w, _)| m | 1 << w))
        .collect();
    let ball2: Vec<u64> = (0..n)
        .map(|v| {
            g.neighbors(v).iter().fold(closed[v], |m, &(w, _)| m | closed[w])
        })
        .collect();
    let gamma = min_cover(&closed, full, &mut counter)?;
    let gamma2 = min_cover(&ball2, full, &mut counter)?;

    // A clique's superset clique dominates at least as much, so maximal
    // cliques are enough for the minimum.
    let cliques = all_cliques(g);
    let masks: Vec<u64> = cliques.iter().map(|c| mask_of(c)).collect();
    let maximal: Vec<usize> = (0..cliques.len())
        .filter(|&i| !masks.iter().any(|&m| m != masks[i] && m & masks[i] == masks[i]))
        .collect();
    let reach: Vec<u64> = maximal
        .iter()
        .map(|&i| cliques[i].iter().fold(0, |m, &v| m | closed[v]))
        .collect();
    let cover = min_cover(&reach, full, &mut counter)?;
    Ok(BoundsReport {
        gamma: gamma.len(),
        gamma2: gamma2.len(),
        clique_cover_dom: cover.len(),
        witnesses: Witnesses {
            gamma,
            gamma2,
            clique_cover_dom: cover.iter().map(|&i| cliques[maximal[i]].clone()).collect(),
        },
    })
}

fn two_row_grid(n: usize) -> usize {
    (n + 2).div_ceil(9)
}

fn grid_upper(m: usize, n: usize) -> usize {
    2 * (m / 16) * (n / 14) + 3 * (m / 5 + n / 5) + 4
}

fn torus_upper(m: usize, n: usize) -> usize {
    2 * m.div_ceil(16) * n.div_ceil(14)
}

fn path_value(n: usize) -> usize {
    if n <= 5 {
        1
    } else {
        2
    }
}

pub fn family_formula(spec: &FamilySpec) -> Result<FamilyFormulaResult, BoundsError> {
    spec.validate().map_err(|e| BoundsError::Unsupported(e.to_string()))?;
    let p = &spec.params;
    Ok(match spec.family {
        Family::Path => FamilyFormulaResult::exact(path_value(p[0]), "path"),
        Family::Cycle => FamilyFormulaResult::exact(1, "cycle"),
        Family::Complete => FamilyFormulaResult::exact(1, "complete"),
        Family::CompleteBipartite => FamilyFormulaResult::exact(1, "complete-bipartite"),
        Family::Hypercube => FamilyFormulaResult::exact(1, "hypercube"),
        Family::Stalemate => FamilyFormulaResult::exact(2, "stalemate"),
        Family::Grid => {
            let (m, n) = (p[0], p[1]);
            if m == 1 || n == 1 {
                FamilyFormulaResult::exact(path_value(m * n), "path")
            } else if m == 2 || n == 2 {
                FamilyFormulaResult::exact(two_row_grid(m * n / 2), "grid-2xn")
            } else {
                FamilyFormulaResult::range((m * n).div_ceil(121), grid_upper(m, n), "grid-bounds")
            }
        }
        Family::Torus => {
            let (m, n) = (p[0], p[1]);
            FamilyFormulaResult::range((m * n).div_ceil(121), torus_upper(m, n), "torus-bounds")
        }
        Family::CaptureFamily => {
            let (m, k) = (p[0], p[1]);
            FamilyFormulaResult {
                capture_time_lower: Some(m * m * k * (k - 1) / 2 + 1),
                ..FamilyFormulaResult::exact(1, "capture-family")
            }
        }
        Family::Spider => {
            let g = crate::graph::generate(spec).map_err(|e| BoundsError::Unsupported(e.to_string()))?;
            let r = tree_cop_number(&g, None).expect("spiders are trees");
            FamilyFormulaResult::exact(r.n, "tree-algorithm")
        }
    })
}

/// Initial cop multiset used by the constructive upper bounds, sorted.
pub fn placement_generators(spec: &FamilySpec) -> Result<Vec<Vertex>, BoundsError> {
    spec.validate().map_err(|e| BoundsError::Unsupported(e.to_string()))?;
    let p = &spec.params;
    let mut cops = match spec.family {
        Family::Grid if p[0] == 2 => two_row_placement(p[1]),
        Family::Grid => grid_placement(p[0], p[1])?,
        Family::Torus => torus_placement(p[0], p[1]),
        _ => return Err(BoundsError::Unsupported(spec.family.name().to_string())),
    };
    cops.sort_unstable();
    Ok(cops)
}

/// Cops in row 0, nine columns apart starting at column 3, the last one
/// pulled back to column `n - 1` if it would fall off the end.
fn two_row_placement(n: usize) -> Vec<Vertex> {
    let shape = GridShape::grid(2, n);
    if n <= 3 {
        return vec![shape.index(n - 1, 0)];
    }
    (0..two_row_grid(n)).map(|i| shape.index((3 + 9 * i).min(n - 1), 0)).collect()
}

/// Cops on the odd-parity points of a lattice with column step 7 and row step 8.
fn torus_placement(m: usize, n: usize) -> Vec<Vertex> {
    let shape = GridShape::torus(m, n);
    let mut out = Vec::new();
    for k in 0..2 * n.div_ceil(14) {
        for l in 0..2 * m.div_ceil(16) {
            if (k + l) % 2 == 1 {
                out.push(shape.index((7 * k) % n, (8 * l) % m));
            }
        }
    }
    out
}

/// Border patrol, central lattice, and peripheral cops for an `m`-row, `n`-column grid.
fn grid_placement(m: usize, n: usize) -> Result<Vec<Vertex>, BoundsError> {
    if m < 10 || n < 10 {
        return Err(BoundsError::TooSmall(format!("grid({m},{n}) needs both sides at least 10")));
    }
    let s = GridShape::grid(m, n);
    let mut out = Vec::new();
    for k in 0..m / 5 {
        out.push(s.index(1, 5 * k + 2));
        out.push(s.index(n - 2, 5 * k + 2));
    }
    out.push(s.index(1, m - 1));
    out.push(s.index(n - 2, m - 1));
    for l in 0..n / 5 {
        out.push(s.index(5 * l + 2, 1));
        out.push(s.index(5 * l + 2, m - 2));
    }
    out.push(s.index(n - 1, 1));
    out.push(s.index(n - 1, m - 2));
    for k in 0..2 * (n / 14) {
        for l in 0..2 * (m / 16) {
            if (k + l) % 2 == 1 {
                out.push(s.index(7 * k, 8 * l));
            }
        }
    }
    for t in 0..n / 5 {
        out.push(s.index(5 * t, if t % 2 == 0 { m - 8 } else { m - 2 }));
    }
    for t in 0..m / 5 {
        out.push(s.index(if t % 2 == 0 { n - 2 } else { n - 8 }, 5 * t));
    }
    Ok(out)
}
