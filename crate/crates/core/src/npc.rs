//! Forbidden edge combinations, vertex links and the applicability verdict.
//!
//! For an injective, compressed LOG the presentation complex is a
//! non-positively curved square complex exactly when none of the
//! two-edge (`fig1`) and three-edge (`fig2`) combinations below occur; the
//! girth of the vertex link is the independent check of that statement.
//! All three combinations ignore edge orientation.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::log::{validate, Edge, LabeledOrientedGraph, Shape};
use crate::presentation::{log_presentation, Presentation};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum NpcError {
    #[error("graph is not compressed (edges {0:?} are labeled by an endpoint)")]
    NotCompressed(Vec<usize>),
    #[error("relator {0} is not cyclically reduced")]
    NotCyclicallyReduced(usize),
    #[error("link node {node} is out of range for {generators} generators")]
    NodeOutOfRange { node: usize, generators: usize },
}

/// Occurrences of the forbidden combinations, by edge index.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PatternReport {
    /// Unordered pairs `{e, f}`, stored with `e < f`: each edge's label is an
    /// endpoint of the other.
    pub fig1: Vec<(usize, usize)>,
    /// Cyclic triples `(e, f, h)`, rotated so the smallest index comes first:
    /// label(e) ∈ ends(f), label(f) ∈ ends(h), label(h) ∈ ends(e).
    pub fig2: Vec<(usize, usize, usize)>,
    /// Ordered pairs `(e, f)` sharing an endpoint with label(e) ∈ ends(f).
    pub fig3: Vec<(usize, usize)>,
}

impl PatternReport {
    pub fn is_empty(&self) -> bool {
        self.fig1.is_empty() && self.fig2.is_empty() && self.fig3.is_empty()
    }
}

fn label_hits(e: &Edge, f: &Edge) -> bool {
    f.has_endpoint(e.label)
}

/// Scans a compressed graph for the three forbidden edge combinations.
pub fn find_forbidden_patterns(g: &LabeledOrientedGraph) -> Result<PatternReport, NpcError> {
    let report = validate(g);
    if !report.compressed {
        return Err(NpcError::NotCompressed(report.degenerate_edges));
    }
    Ok(scan_patterns(g.edges()))
}

fn scan_patterns(edges: &[Edge]) -> PatternReport {
    let m = edges.len();
    // hits[e] = edges f != e whose endpoints contain label(e)
    let hits: Vec<Vec<usize>> =
        (0..m).map(|e| (0..m).filter(|&f| f != e && label_hits(&edges[e], &edges[f])).collect()).collect();

    let mut report = PatternReport::default();
    for e in 0..m {
        for &f in &hits[e] {
            if e < f && hits[f].contains(&e) {
                report.fig1.push((e, f));
            }
            if edges[e].shares_endpoint(&edges[f]) {
                report.fig3.push((e, f));
            }
            for &h in &hits[f] {
                if e < f && e < h && h != e && hits[h].contains(&e) {
                    report.fig2.push((e, f, h));
                }
            }
        }
    }
    report.fig1.sort_unstable();
    report.fig2.sort_unstable();
    report.fig3.sort_unstable();
    report
}

/// End of a generator in the vertex link: `2g` is the start of `g`, `2g + 1`
/// its terminal end.
pub type LinkNode = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Arc {
    pub ends: (LinkNode, LinkNode),
    pub relator: usize,
    pub corner: usize,
}

/// Vertex link of the presentation complex: one arc per corner of each
/// relator cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkGraph {
    generators: Vec<String>,
    pub arcs: Vec<Arc>,
}

impl LinkGraph {
    /// A link given directly by its arcs, each tagged as corner `i` of
    /// relator 0.
    pub fn from_arcs(generators: Vec<String>, arcs: &[(LinkNode, LinkNode)]) -> Result<Self, NpcError> {
        let nodes = 2 * generators.len();
        if let Some(node) = arcs.iter().flat_map(|&(x, y)| [x, y]).find(|&x| x >= nodes) {
            return Err(NpcError::NodeOutOfRange { node, generators: generators.len() });
        }
        let arcs = arcs.iter().enumerate().map(|(i, &ends)| Arc { ends, relator: 0, corner: i }).collect();
        Ok(LinkGraph { generators, arcs })
    }

    pub fn node_count(&self) -> usize {
        2 * self.generators.len()
    }

    pub fn node_name(&self, node: LinkNode) -> String {
        let suffix = if node.is_multiple_of(2) { "s" } else { "t" };
        format!("{}_{}", self.generators[node / 2], suffix)
    }

    /// Arcs as unordered pairs of node names, each pair sorted.
    pub fn named_arcs(&self) -> Vec<(String, String)> {
        self.arcs
            .iter()
            .map(|a| {
                let (x, y) = (self.node_name(a.ends.0), self.node_name(a.ends.1));
                if x <= y {
                    (x, y)
                } else {
                    (y, x)
                }
            })
            .collect()
    }
}

pub fn start_node(generator: usize, inverse: bool) -> LinkNode {
    2 * generator + usize::from(inverse)
}

pub fn end_node(generator: usize, inverse: bool) -> LinkNode {
    2 * generator + usize::from(!inverse)
}

/// Builds the vertex link: for each cyclic adjacency `(u, v)` of letters in
/// a relator, an arc from the end of `u` to the start of `v`.
pub fn build_link_graph(p: &Presentation) -> Result<LinkGraph, NpcError> {
    let mut arcs = Vec::new();
    for (ri, r) in p.relators().iter().enumerate() {
        if !r.is_cyclically_reduced() {
            return Err(NpcError::NotCyclicallyReduced(ri));
        }
        let l = r.letters();
        for i in 0..l.len() {
            let (u, v) = (l[i], l[(i + 1) % l.len()]);
            arcs.push(Arc {
                ends: (end_node(u.generator, u.inverse), start_node(v.generator, v.inverse)),
                relator: ri,
                corner: i,
            });
        }
    }
    Ok(LinkGraph { generators: p.generators().to_vec(), arcs })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= k,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("infinite"),
        }
    }
}

/// Length of a shortest cycle; loops count as 1-cycles and parallel arcs as
/// 2-cycles.
pub fn girth(l: &LinkGraph) -> Girth {
    if l.arcs.iter().any(|a| a.ends.0 == a.ends.1) {
        return Girth::Finite(1);
    }
    let mut pairs = HashSet::new();
    for a in &l.arcs {
        let key = (a.ends.0.min(a.ends.1), a.ends.0.max(a.ends.1));
        if !pairs.insert(key) {
            return Girth::Finite(2);
        }
    }
    let n = l.node_count();
    let mut adj = vec![Vec::new(); n];
    for &(x, y) in &pairs {
        adj[x].push(y);
        adj[y].push(x);
    }
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.fill(usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &v in &adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v {
                    best = best.min(dist[u] + dist[v] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// Girth of the vertex link of the LOG-presentation complex.
pub fn log_link_girth(g: &LabeledOrientedGraph) -> Girth {
    let p = log_presentation(g);
    match build_link_graph(&p) {
        Ok(l) => girth(&l),
        // a LOG relator a b c^-1 b^-1 fails to be reduced only when b = c or
        // a = b, i.e. the edge is not compressed; its link has a loop
        Err(_) => Girth::Finite(1),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Reason {
    pub clause: String,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub npc: bool,
    pub theorem2_applicable: bool,
    pub reasons: Vec<Reason>,
}

/// `npc` = compressed, injective, no `fig1` and no `fig2`.
/// `theorem2_applicable` additionally needs no `fig3` and a tree shape.
///
/// The pattern scan needs compressedness, so for a non-compressed graph
/// only the compressed, injective and tree clauses are reported.
pub fn verdict(g: &LabeledOrientedGraph) -> Verdict {
    let report = validate(g);
    let mut reasons = Vec::new();
    let edges = |idx: &[usize]| idx.iter().map(|&i| g.edge_string(&g.edges()[i])).collect::<Vec<_>>().join(", ");

    if !report.compressed {
        reasons.push(Reason { clause: "compressed".into(), witness: edges(&report.degenerate_edges) });
    }
    if !report.injective {
        let names: Vec<&str> = report.repeated_labels.iter().map(|&v| g.name(v)).collect();
        reasons.push(Reason { clause: "injective".into(), witness: names.join(", ") });
    }
    let patterns = report.compressed.then(|| scan_patterns(g.edges()));
    if let Some(p) = &patterns {
        if let Some(&(e, f)) = p.fig1.first() {
            reasons.push(Reason { clause: "fig1".into(), witness: edges(&[e, f]) });
        }
        if let Some(&(e, f, h)) = p.fig2.first() {
            reasons.push(Reason { clause: "fig2".into(), witness: edges(&[e, f, h]) });
        }
    }
    let npc = report.compressed
        && report.injective
        && patterns.as_ref().is_some_and(|p| p.fig1.is_empty() && p.fig2.is_empty());

    if let Some(p) = &patterns {
        if let Some(&(e, f)) = p.fig3.first() {
            reasons.push(Reason { clause: "fig3".into(), witness: edges(&[e, f]) });
        }
    }
    if !report.shape.is_tree() {
        let witness = match report.shape {
            Shape::Forest => "underlying graph is disconnected".to_string(),
            _ => "underlying graph has a cycle".to_string(),
        };
        reasons.push(Reason { clause: "tree".into(), witness });
    }
    let theorem2_applicable = npc && patterns.as_ref().is_some_and(|p| p.fig3.is_empty()) && report.shape.is_tree();
    Verdict { npc, theorem2_applicable, reasons }
}
