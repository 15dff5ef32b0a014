//! Cop number of trees by greedy leaf guarding.
//!
//! A leaf is guarded once some cop starts within distance 2 of it. The
//! furthest unguarded leaf from the root gets a cop at its grandparent (or at
//! the root, when the leaf is the root or one of its children), until every
//! leaf is guarded. The number of cops placed is the answer.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("input is not a tree")]
    NotATree,
    #[error("root {0} is not a vertex")]
    InvalidRoot(Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TraceStep {
    pub leaf: Vertex,
    pub depth: usize,
    pub placed: Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GuardReport {
    pub root: Vertex,
    pub placements: Vec<Vertex>,
    #[serde(rename = "N")]
    pub n: usize,
    /// Each leaf mapped to a placement within distance 2 of it.
    pub guarded_certificate: BTreeMap<Vertex, Vertex>,
    pub trace: Vec<TraceStep>,
}

pub fn tree_cop_number(t: &Graph, root: Option<Vertex>) -> Result<GuardReport, TreeError> {
    if !t.is_tree() {
        return Err(TreeError::NotATree);
    }
    let n = t.vertex_count();
    let root = root.unwrap_or(0);
    if root >= n {
        return Err(TreeError::InvalidRoot(root));
    }
    let mut depth = vec![0usize; n];
    let mut parent = vec![root; n];
    let mut order = vec![root];
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for &(w, _) in t.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                depth[w] = depth[v] + 1;
                parent[w] = v;
                order.push(w);
            }
        }
    }
    let mut leaves: Vec<Vertex> = (0..n).filter(|&v| t.degree(v) <= 1).collect();
    // Furthest first, smallest index among equals.
    leaves.sort_by_key(|&v| (std::cmp::Reverse(depth[v]), v));

    let mut guard_of: Vec<Option<Vertex>> = vec![None; n];
    let mut placements = Vec::new();
    let mut trace = Vec::new();
    for &leaf in &leaves {
        if guard_of[leaf].is_some() {
            continue;
        }
        let placed = if depth[leaf] <= 1 { root } else { parent[parent[leaf]] };
        placements.push(placed);
        trace.push(TraceStep { leaf, depth: depth[leaf], placed });
        for (v, d) in t.distances_from(placed).into_iter().enumerate() {
            if d.is_some_and(|d| d <= 2) && guard_of[v].is_none() {
                guard_of[v] = Some(placed);
            }
        }
    }
    let guarded_certificate = leaves
        .iter()
        .map(|&l| (l, guard_of[l].expect("loop guards every leaf")))
        .collect();
    Ok(GuardReport { root, n: placements.len(), placements, guarded_certificate, trace })
}
