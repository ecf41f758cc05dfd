//! Exhaustive enumeration of small compressed injective LOIs.
//!
//! Every LOI on `k` vertices is drawn on the fixed path `0 — 1 — … — k−1`,
//! so two LOIs are the same up to vertex renaming exactly when they agree
//! or one is the path reversal of the other. Counts are taken over these
//! classes; the girth cross-check runs over every raw labelling.

use std::fmt;

use serde::Serialize;

use crate::log::{Edge, LabeledOrientedGraph};
use crate::npc::{log_link_girth, verdict};

/// Largest vertex count `search_small_lois` accepts.
pub const MAX_SEARCH_VERTICES: usize = 7;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("max_vertices must be at least 2, got {0}")]
    TooSmall(usize),
    #[error("max_vertices {requested} exceeds the search ceiling {ceiling}")]
    TooLarge { requested: usize, ceiling: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchRow {
    pub vertices: usize,
    /// Compressed injective LOIs up to path reversal.
    pub instances: usize,
    pub npc: usize,
    pub theorem2_applicable: usize,
    /// Compressed injective labellings of the fixed path.
    pub raw_instances: usize,
    /// Raw labellings where `npc` agrees with link girth ≥ 4.
    pub oracle_agreements: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub rows: Vec<SearchRow>,
    /// Serialized LOIs on which the verdict and the girth oracle disagree.
    pub disagreements: Vec<String>,
}

impl SearchReport {
    pub fn consistent(&self) -> bool {
        self.disagreements.is_empty() && self.rows.iter().all(|r| r.oracle_agreements == r.raw_instances)
    }
}

impl fmt::Display for SearchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices\tinstances\tnpc\ttheorem2\traw\tgirth-agree")?;
        for r in &self.rows {
            writeln!(
                f,
                "{}\t{}\t{}\t{}\t{}\t{}",
                r.vertices, r.instances, r.npc, r.theorem2_applicable, r.raw_instances, r.oracle_agreements
            )?;
        }
        for d in &self.disagreements {
            writeln!(f, "disagreement:\n{d}")?;
        }
        Ok(())
    }
}

/// One path edge: `forward` runs `i → i+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Slot {
    forward: bool,
    label: usize,
}

fn build(k: usize, slots: &[Slot]) -> LabeledOrientedGraph {
    let names = (0..k).map(|i| i.to_string()).collect();
    let edges = slots
        .iter()
        .enumerate()
        .map(|(i, s)| if s.forward { Edge::new(i, s.label, i + 1) } else { Edge::new(i + 1, s.label, i) })
        .collect();
    LabeledOrientedGraph::new(names, edges).expect("path edges are distinct and in range")
}

fn reversed(k: usize, slots: &[Slot]) -> Vec<Slot> {
    // vertex i ↦ k-1-i; edge i ↦ edge k-2-i and its direction flips
    slots.iter().rev().map(|s| Slot { forward: !s.forward, label: k - 1 - s.label }).collect()
}

/// Calls `visit` on every compressed injective labelling of the `k`-vertex
/// path, with a flag telling whether it is the representative of its
/// reversal class.
fn for_each_labelling(k: usize, mut visit: impl FnMut(&[Slot], bool)) {
    fn go(k: usize, slots: &mut Vec<Slot>, used: &mut [bool], visit: &mut dyn FnMut(&[Slot], bool)) {
        let i = slots.len();
        if i + 1 == k {
            let rev = reversed(k, slots);
            visit(slots, *slots <= rev);
            return;
        }
        for label in 0..k {
            if used[label] || label == i || label == i + 1 {
                continue;
            }
            used[label] = true;
            for forward in [true, false] {
                slots.push(Slot { forward, label });
                go(k, slots, used, visit);
                slots.pop();
            }
            used[label] = false;
        }
    }
    if k >= 2 {
        go(k, &mut Vec::with_capacity(k), &mut vec![false; k], &mut visit);
    }
}

/// All compressed injective LOIs on the `k`-vertex path; with
/// `representatives_only`, one per reversal class.
pub fn enumerate_lois(k: usize, representatives_only: bool) -> Vec<LabeledOrientedGraph> {
    let mut out = Vec::new();
    for_each_labelling(k, |slots, rep| {
        if rep || !representatives_only {
            out.push(build(k, slots));
        }
    });
    out
}

pub fn search_small_lois(max_vertices: usize) -> Result<SearchReport, SearchError> {
    if max_vertices < 2 {
        return Err(SearchError::TooSmall(max_vertices));
    }
    if max_vertices > MAX_SEARCH_VERTICES {
        return Err(SearchError::TooLarge { requested: max_vertices, ceiling: MAX_SEARCH_VERTICES });
    }
    let mut rows = Vec::new();
    let mut disagreements = Vec::new();
    for k in 2..=max_vertices {
        let mut row = SearchRow {
            vertices: k,
            instances: 0,
            npc: 0,
            theorem2_applicable: 0,
            raw_instances: 0,
            oracle_agreements: 0,
        };
        for_each_labelling(k, |slots, rep| {
            let g = build(k, slots);
            let v = verdict(&g);
            row.raw_instances += 1;
            if v.npc == log_link_girth(&g).at_least(4) {
                row.oracle_agreements += 1;
            } else {
                disagreements.push(g.serialize());
            }
            if rep {
                row.instances += 1;
                row.npc += usize::from(v.npc);
                row.theorem2_applicable += usize::from(v.theorem2_applicable);
            }
        });
        rows.push(row);
    }
    Ok(SearchReport { rows, disagreements })
}
