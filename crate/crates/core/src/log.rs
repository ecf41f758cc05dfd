//! Labeled oriented graphs: the data model, the `source | label | target`
//! text format, hypothesis checks, the cyclic-shift family and tree collapse
//! orders.
//!
//! An edge `(a|b|c)` runs from `a` to `c` and carries the vertex `b` as its
//! label. Vertex names are opaque strings; `"0"` gets no special treatment.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

/// Index of a vertex inside its [`LabeledOrientedGraph`].
pub type VertexId = usize;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum LogError {
    #[error("empty input: no edges and no vertices")]
    EmptyInput,
    #[error("line {line}: malformed edge {text:?} (expected `source | label | target`)")]
    Malformed { line: usize, text: String },
    #[error("line {line}: invalid vertex name {name:?}")]
    InvalidName { line: usize, name: String },
    #[error("duplicate edge ({0})")]
    DuplicateEdge(String),
    #[error("duplicate vertex name {0:?}")]
    DuplicateVertex(String),
    #[error("edge refers to vertex index {0}, which does not exist")]
    VertexOutOfRange(VertexId),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("not a tree (shape {0:?})")]
    NotATree(Shape),
}

/// A labeled edge `(source | label | target)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub source: VertexId,
    pub label: VertexId,
    pub target: VertexId,
}

impl Edge {
    pub fn new(source: VertexId, label: VertexId, target: VertexId) -> Self {
        Self { source, label, target }
    }

    pub fn endpoints(&self) -> [VertexId; 2] {
        [self.source, self.target]
    }

    pub fn has_endpoint(&self, v: VertexId) -> bool {
        self.source == v || self.target == v
    }

    /// The edge is labeled by one of its own endpoints.
    pub fn is_degenerate(&self) -> bool {
        self.has_endpoint(self.label)
    }

    pub fn shares_endpoint(&self, other: &Edge) -> bool {
        self.has_endpoint(other.source) || self.has_endpoint(other.target)
    }
}

/// Vertices plus directed, vertex-labeled edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledOrientedGraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

impl LabeledOrientedGraph {
    /// Builds a graph, checking that names are unique, every edge refers to
    /// existing vertices and no edge triple repeats.
    pub fn new(vertices: Vec<String>, edges: Vec<Edge>) -> Result<Self, LogError> {
        let mut seen = HashSet::new();
        for name in &vertices {
            if !seen.insert(name.as_str()) {
                return Err(LogError::DuplicateVertex(name.clone()));
            }
        }
        let mut triples = HashSet::new();
        for e in &edges {
            for v in [e.source, e.label, e.target] {
                if v >= vertices.len() {
                    return Err(LogError::VertexOutOfRange(v));
                }
            }
            if !triples.insert(*e) {
                let text = format!("{}|{}|{}", vertices[e.source], vertices[e.label], vertices[e.target]);
                return Err(LogError::DuplicateEdge(text));
            }
        }
        Ok(Self { vertices, edges })
    }

    /// Builds a graph from name triples; vertices are taken in first-appearance
    /// order (source, label, target).
    pub fn from_triples<S: AsRef<str>>(triples: &[(S, S, S)]) -> Result<Self, LogError> {
        let mut builder = Builder::default();
        for (a, b, c) in triples {
            builder.edge(a.as_ref(), b.as_ref(), c.as_ref());
        }
        builder.finish()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.vertices[v]
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.vertices.iter().position(|n| n == name)
    }

    /// `(a|b|c)` rendering of an edge.
    pub fn edge_string(&self, e: &Edge) -> String {
        format!("({}|{}|{})", self.name(e.source), self.name(e.label), self.name(e.target))
    }

    /// Returns a copy with one more isolated vertex.
    pub fn with_vertex(&self, name: &str) -> Result<Self, LogError> {
        let mut vertices = self.vertices.clone();
        vertices.push(name.to_string());
        Self::new(vertices, self.edges.clone())
    }

    /// Returns a copy with one more edge.
    pub fn with_edge(&self, edge: Edge) -> Result<Self, LogError> {
        let mut edges = self.edges.clone();
        edges.push(edge);
        Self::new(self.vertices.clone(), edges)
    }

    /// Applies a renaming to every vertex; fails if the renaming is not injective.
    pub fn renamed<F: FnMut(&str) -> String>(&self, mut f: F) -> Result<Self, LogError> {
        let vertices = self.vertices.iter().map(|n| f(n)).collect();
        Self::new(vertices, self.edges.clone())
    }

    /// Canonical text form. A `#! vertices:` header is emitted when the vertex
    /// order is not recoverable from the edge lines alone.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        if self.first_appearance_order() != (0..self.vertices.len()).collect::<Vec<_>>() {
            out.push_str(VERTICES_PRAGMA);
            for v in &self.vertices {
                out.push(' ');
                out.push_str(v);
            }
            out.push('\n');
        }
        for e in &self.edges {
            out.push_str(&format!("{} | {} | {}\n", self.name(e.source), self.name(e.label), self.name(e.target)));
        }
        out
    }

    fn first_appearance_order(&self) -> Vec<VertexId> {
        let mut seen = vec![false; self.vertices.len()];
        let mut order = Vec::with_capacity(self.vertices.len());
        for e in &self.edges {
            for v in [e.source, e.label, e.target] {
                if !seen[v] {
                    seen[v] = true;
                    order.push(v);
                }
            }
        }
        order
    }

    /// Adjacency lists of the underlying undirected graph (labels ignored).
    pub(crate) fn neighbours(&self) -> Vec<Vec<(VertexId, usize)>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.source].push((e.target, i));
            if e.source != e.target {
                adj[e.target].push((e.source, i));
            }
        }
        adj
    }
}

impl fmt::Display for LabeledOrientedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

const VERTICES_PRAGMA: &str = "#! vertices:";

#[derive(Default)]
struct Builder {
    names: Vec<String>,
    index: HashMap<String, VertexId>,
    edges: Vec<Edge>,
}

impl Builder {
    fn vertex(&mut self, name: &str) -> VertexId {
        if let Some(&v) = self.index.get(name) {
            return v;
        }
        let v = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), v);
        v
    }

    fn edge(&mut self, a: &str, b: &str, c: &str) {
        let e = Edge::new(self.vertex(a), self.vertex(b), self.vertex(c));
        self.edges.push(e);
    }

    fn finish(self) -> Result<LabeledOrientedGraph, LogError> {
        LabeledOrientedGraph::new(self.names, self.edges)
    }
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && !name.chars().any(|c| c.is_whitespace() || matches!(c, '|' | '^' | '#'))
}

/// Parses the LOG text format: one `source | label | target` per line, `#`
/// comment lines, blank lines ignored.
pub fn parse_log(text: &str) -> Result<LabeledOrientedGraph, LogError> {
    let mut builder = Builder::default();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = i + 1;
        if let Some(rest) = line.strip_prefix(VERTICES_PRAGMA) {
            for name in rest.split_whitespace() {
                if !valid_name(name) {
                    return Err(LogError::InvalidName { line: lineno, name: name.into() });
                }
                builder.vertex(name);
            }
            continue;
        }
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = line.split('|').map(str::trim).collect();
        if parts.len() != 3 || parts.iter().any(|p| p.is_empty()) {
            return Err(LogError::Malformed { line: lineno, text: raw.to_string() });
        }
        if let Some(bad) = parts.iter().find(|p| !valid_name(p)) {
            return Err(LogError::InvalidName { line: lineno, name: bad.to_string() });
        }
        builder.edge(parts[0], parts[1], parts[2]);
    }
    if builder.names.is_empty() {
        return Err(LogError::EmptyInput);
    }
    builder.finish()
}

/// Shape of the underlying undirected graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Shape {
    /// A tree whose vertices all have degree at most two.
    Interval,
    Tree,
    Forest,
    HasCycle,
}

impl Shape {
    pub fn is_tree(self) -> bool {
        matches!(self, Shape::Interval | Shape::Tree)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub compressed: bool,
    /// Indices of edges labeled by one of their own endpoints.
    pub degenerate_edges: Vec<usize>,
    pub injective: bool,
    /// Vertices that occur more than once as an edge label.
    pub repeated_labels: Vec<VertexId>,
    pub shape: Shape,
    pub connected: bool,
}

/// Checks compressedness, injectivity and the shape of the underlying graph.
pub fn validate(g: &LabeledOrientedGraph) -> ValidationReport {
    let degenerate_edges: Vec<usize> =
        g.edges().iter().enumerate().filter(|(_, e)| e.is_degenerate()).map(|(i, _)| i).collect();

    let mut label_count = vec![0usize; g.vertex_count()];
    for e in g.edges() {
        label_count[e.label] += 1;
    }
    let repeated_labels: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| label_count[v] > 1).collect();

    let (shape, connected) = shape_of(g);
    ValidationReport {
        compressed: degenerate_edges.is_empty(),
        degenerate_edges,
        injective: repeated_labels.is_empty(),
        repeated_labels,
        shape,
        connected,
    }
}

fn shape_of(g: &LabeledOrientedGraph) -> (Shape, bool) {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut cyclic = false;
    let mut components = n;
    let mut degree = vec![0usize; n];
    for e in g.edges() {
        degree[e.source] += 1;
        degree[e.target] += 1;
        let (a, b) = (find(&mut parent, e.source), find(&mut parent, e.target));
        if a == b {
            cyclic = true;
        } else {
            parent[a] = b;
            components -= 1;
        }
    }
    let connected = components == 1;
    let shape = if cyclic {
        Shape::HasCycle
    } else if !connected {
        Shape::Forest
    } else if degree.iter().all(|&d| d <= 2) {
        Shape::Interval
    } else {
        Shape::Tree
    };
    (shape, connected)
}

/// Vertices `0..n`, edge `i -> i+1` labeled `(i+3) mod n`.
pub fn cyclic_shift_family(n: usize) -> Result<LabeledOrientedGraph, LogError> {
    if n < 2 {
        return Err(LogError::InvalidParameter(format!("cyclic shift family needs n >= 2, got {n}")));
    }
    let vertices = (0..n).map(|i| i.to_string()).collect();
    let edges = (0..n - 1).map(|i| Edge::new(i, (i + 3) % n, i + 1)).collect();
    LabeledOrientedGraph::new(vertices, edges)
}

/// An order in which the edges of a tree can be collapsed onto `z`: each
/// removed edge has an endpoint that is a current leaf other than `z`.
///
/// Edges are removed farthest-leaf first; ties go to the lower edge index.
pub fn collapse_order(t: &LabeledOrientedGraph, z: &str) -> Result<Vec<Edge>, LogError> {
    let shape = validate(t).shape;
    if !shape.is_tree() {
        return Err(LogError::NotATree(shape));
    }
    let root = t.vertex(z).ok_or_else(|| LogError::UnknownVertex(z.to_string()))?;

    let adj = t.neighbours();
    let mut depth = vec![usize::MAX; t.vertex_count()];
    let mut edge_depth = vec![0usize; t.edges().len()];
    depth[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &(w, ei) in &adj[v] {
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                edge_depth[ei] = depth[w];
                queue.push_back(w);
            }
        }
    }

    let mut order: Vec<usize> = (0..t.edges().len()).collect();
    order.sort_by(|&a, &b| edge_depth[b].cmp(&edge_depth[a]).then(a.cmp(&b)));
    Ok(order.into_iter().map(|i| t.edges()[i]).collect())
}
