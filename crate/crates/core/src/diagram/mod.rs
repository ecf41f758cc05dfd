//! Surface diagrams over a presentation.
//!
//! A diagram is a cell structure on a compact orientable surface. Faces list
//! their boundary clockwise as directed edge references; the word read from
//! the face's basepoint must be a relator (sign `+`) or its inverse (sign
//! `-`). Vertices and edges are addressed by position, and the JSON form uses
//! those positions as ids.

mod cancel;
mod curvature;
mod validate;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use cancel::{apply_cancellation, find_cancellation_pairs, CancellationPair};
pub use curvature::{curvature_report, AngleAssignment, CurvatureReport, FaceCurvature, VertexCurvature};
pub use validate::{classify_face, validate_diagram, DiagramFailure, DiagramReport, FaceClass};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("degenerate construction: {0}")]
    Degenerate(String),
    #[error("malformed diagram: {0}")]
    Malformed(String),
    #[error("no angle given for corner {corner} of face {face}")]
    MissingAngle { face: usize, corner: usize },
    #[error("face {0} is neither a square nor a power cell")]
    UnclassifiedFace(usize),
    #[error("faces {first} and {second} do not cancel at the given corners")]
    InvalidPair { first: usize, second: usize },
    #[error("sewing would not produce a closed surface: {0}")]
    NonSurfaceResult(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.is_minus() { "-" } else { "+" })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramEdge {
    pub label: String,
    pub from: usize,
    pub to: usize,
}

/// A directed use of an edge on a face boundary; `Plus` runs `from → to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Side {
    pub edge: usize,
    pub dir: Sign,
}

impl Side {
    pub fn new(edge: usize, dir: Sign) -> Self {
        Side { edge, dir }
    }

    pub fn plus(edge: usize) -> Self {
        Side { edge, dir: Sign::Plus }
    }

    pub fn minus(edge: usize) -> Self {
        Side { edge, dir: Sign::Minus }
    }

    pub fn reversed(self) -> Self {
        Side { edge: self.edge, dir: self.dir.flip() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub boundary: Vec<Side>,
    pub sign: Sign,
    pub basepoint: usize,
}

impl Face {
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SurfaceDiagram {
    pub vertex_count: usize,
    pub edges: Vec<DiagramEdge>,
    pub faces: Vec<Face>,
}

impl SurfaceDiagram {
    pub fn is_empty(&self) -> bool {
        self.vertex_count == 0 && self.edges.is_empty() && self.faces.is_empty()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    pub fn side_start(&self, s: Side) -> usize {
        let e = &self.edges[s.edge];
        if s.dir.is_minus() {
            e.to
        } else {
            e.from
        }
    }

    pub fn side_end(&self, s: Side) -> usize {
        self.side_start(s.reversed())
    }

    /// Clockwise boundary word of a face starting at corner `corner` (the
    /// corner at the start of side `corner`), as (label, inverse) letters.
    pub fn word_from(&self, face: usize, corner: usize) -> Vec<(&str, bool)> {
        let b = &self.faces[face].boundary;
        (0..b.len())
            .map(|i| {
                let s = b[(corner + i) % b.len()];
                (self.edges[s.edge].label.as_str(), s.dir.is_minus())
            })
            .collect()
    }

    /// Clockwise boundary word read from the face's basepoint.
    pub fn face_word(&self, face: usize) -> Vec<(&str, bool)> {
        self.word_from(face, self.faces[face].basepoint)
    }

    /// Builds a diagram from faces given as side lists over edges
    /// `0..labels.len()`. Vertices come from gluing face corners along edges
    /// used twice; an edge used once is a boundary edge. Basepoints are 0.
    pub fn from_faces(labels: Vec<String>, faces: Vec<(Vec<Side>, Sign)>) -> Result<Self, DiagramError> {
        let boundaries: Vec<Vec<Side>> = faces.iter().map(|(b, _)| b.clone()).collect();
        let uses = side_uses(&boundaries, labels.len())
            .map_err(|(f, j)| DiagramError::Malformed(format!("face {f} side {j} references a missing edge")))?;
        for (e, u) in uses.iter().enumerate() {
            match u.as_slice() {
                [_] => {}
                [(f, j), (g, k)] if boundaries[*f][*j].dir != boundaries[*g][*k].dir => {}
                [] => return Err(DiagramError::Malformed(format!("edge {e} is not on any face"))),
                _ => return Err(DiagramError::Malformed(format!("edge {e} is not used once or twice oppositely"))),
            }
        }
        if let Some(f) = boundaries.iter().position(Vec::is_empty) {
            return Err(DiagramError::Malformed(format!("face {f} has no sides")));
        }
        let gluing = glue_corners(&boundaries, &uses);
        let mut ends = vec![(usize::MAX, usize::MAX); labels.len()];
        for (f, b) in boundaries.iter().enumerate() {
            for (j, s) in b.iter().enumerate() {
                let (a, z) = (gluing.vertex(f, j), gluing.vertex(f, (j + 1) % b.len()));
                ends[s.edge] = if s.dir.is_minus() { (z, a) } else { (a, z) };
            }
        }
        let edges = labels.into_iter().zip(ends).map(|(label, (from, to))| DiagramEdge { label, from, to }).collect();
        let faces = faces.into_iter().map(|(boundary, sign)| Face { boundary, sign, basepoint: 0 }).collect();
        Ok(SurfaceDiagram { vertex_count: gluing.class_count, edges, faces })
    }

    pub fn to_json(&self) -> String {
        let wire = WireDiagram {
            edges: self
                .edges
                .iter()
                .enumerate()
                .map(|(id, e)| WireEdge { from: e.from, id, label: e.label.clone(), to: e.to })
                .collect(),
            faces: self
                .faces
                .iter()
                .enumerate()
                .map(|(id, f)| WireFace {
                    basepoint: f.basepoint,
                    boundary: f.boundary.iter().map(|s| WireSide { dir: s.dir, edge: s.edge }).collect(),
                    id,
                    sign: f.sign,
                })
                .collect(),
            vertices: (0..self.vertex_count).collect(),
        };
        serde_json::to_string_pretty(&wire).expect("diagram serializes") + "\n"
    }

    /// Parses the JSON form. Ids may be any distinct integers; they are
    /// renumbered to positions in increasing id order.
    pub fn from_json(text: &str) -> Result<Self, DiagramError> {
        let wire: WireDiagram = serde_json::from_str(text).map_err(|e| DiagramError::Malformed(e.to_string()))?;
        let index =
            |ids: &mut dyn Iterator<Item = usize>, what: &str| -> Result<BTreeMap<usize, usize>, DiagramError> {
                let mut sorted: Vec<usize> = ids.collect();
                let n = sorted.len();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted.len() != n {
                    return Err(DiagramError::Malformed(format!("duplicate {what} id")));
                }
                Ok(sorted.into_iter().enumerate().map(|(i, id)| (id, i)).collect())
            };
        let vmap = index(&mut wire.vertices.iter().copied(), "vertex")?;
        let emap = index(&mut wire.edges.iter().map(|e| e.id), "edge")?;
        let fmap = index(&mut wire.faces.iter().map(|f| f.id), "face")?;
        let lookup = |m: &BTreeMap<usize, usize>, id: usize, what: &str| {
            m.get(&id).copied().ok_or_else(|| DiagramError::Malformed(format!("unknown {what} id {id}")))
        };

        let mut edges = vec![None; emap.len()];
        for e in &wire.edges {
            edges[emap[&e.id]] = Some(DiagramEdge {
                label: e.label.clone(),
                from: lookup(&vmap, e.from, "vertex")?,
                to: lookup(&vmap, e.to, "vertex")?,
            });
        }
        let mut faces = vec![None; fmap.len()];
        for f in &wire.faces {
            let boundary = f
                .boundary
                .iter()
                .map(|s| Ok(Side { edge: lookup(&emap, s.edge, "edge")?, dir: s.dir }))
                .collect::<Result<Vec<_>, DiagramError>>()?;
            if f.basepoint >= boundary.len() {
                return Err(DiagramError::Malformed(format!("face {} basepoint out of range", f.id)));
            }
            faces[fmap[&f.id]] = Some(Face { boundary, sign: f.sign, basepoint: f.basepoint });
        }
        Ok(SurfaceDiagram {
            vertex_count: vmap.len(),
            edges: edges.into_iter().map(Option::unwrap).collect(),
            faces: faces.into_iter().map(Option::unwrap).collect(),
        })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WireDiagram {
    edges: Vec<WireEdge>,
    faces: Vec<WireFace>,
    vertices: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WireEdge {
    from: usize,
    id: usize,
    label: String,
    to: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WireFace {
    basepoint: usize,
    boundary: Vec<WireSide>,
    id: usize,
    sign: Sign,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WireSide {
    dir: Sign,
    edge: usize,
}

/// (face, side index)
pub(crate) type SideRef = (usize, usize);

/// For every edge, the (face, side index) pairs that use it. Fails with the
/// first side naming a missing edge.
pub(crate) fn side_uses(faces: &[Vec<Side>], edge_count: usize) -> Result<Vec<Vec<SideRef>>, SideRef> {
    let mut uses = vec![Vec::new(); edge_count];
    for (f, b) in faces.iter().enumerate() {
        for (j, s) in b.iter().enumerate() {
            uses.get_mut(s.edge).ok_or((f, j))?.push((f, j));
        }
    }
    Ok(uses)
}

/// Corners glued across edges used exactly twice in opposite directions.
/// Corner `(f, j)` sits at the start of side `j` of face `f`.
pub(crate) struct CornerGluing {
    offsets: Vec<usize>,
    class: Vec<usize>,
    pub class_count: usize,
}

impl CornerGluing {
    pub fn vertex(&self, face: usize, corner: usize) -> usize {
        self.class[self.offsets[face] + corner]
    }
}

pub(crate) fn glue_corners(faces: &[Vec<Side>], uses: &[Vec<(usize, usize)>]) -> CornerGluing {
    let mut offsets = Vec::with_capacity(faces.len());
    let mut total = 0;
    for b in faces {
        offsets.push(total);
        total += b.len();
    }
    let corner = |f: usize, j: usize| offsets[f] + j % faces[f].len();
    let mut uf = UnionFind::new(total);
    for u in uses {
        if let [(f, j), (g, k)] = u[..] {
            if faces[f][j].dir != faces[g][k].dir {
                uf.union(corner(f, j), corner(g, k + 1));
                uf.union(corner(f, j + 1), corner(g, k));
            }
        }
    }
    // number classes by first corner in face order
    let mut label = vec![usize::MAX; total];
    let mut class = vec![0; total];
    let mut class_count = 0;
    for (c, slot) in class.iter_mut().enumerate() {
        let r = uf.find(c);
        if label[r] == usize::MAX {
            label[r] = class_count;
            class_count += 1;
        }
        *slot = label[r];
    }
    CornerGluing { offsets, class, class_count }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn parent_of(&self, x: usize) -> usize {
        self.parent[x]
    }

    pub fn set_parent(&mut self, x: usize, p: usize) {
        self.parent[x] = p;
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        true
    }
}

/// Sphere made of two `n`-gons reading `gⁿ`, one of each sign, glued along
/// their whole boundary. The basepoints sit one edge apart.
pub fn canonical_power_sphere(g: &str, n: usize) -> Result<SurfaceDiagram, DiagramError> {
    if n < 2 {
        return Err(DiagramError::Degenerate(format!("power sphere needs n >= 2, got {n}")));
    }
    let edges = (0..n).map(|i| DiagramEdge { label: g.to_string(), from: i, to: (i + 1) % n }).collect();
    let plus = Face { boundary: (0..n).map(Side::plus).collect(), sign: Sign::Plus, basepoint: 0 };
    // side k is edge n-1-k run backwards; side n-1 leaves vertex 1
    let minus = Face { boundary: (0..n).rev().map(Side::minus).collect(), sign: Sign::Minus, basepoint: n - 1 };
    Ok(SurfaceDiagram { vertex_count: n, edges, faces: vec![plus, minus] })
}

/// Sphere with bottom face `aⁿ`, top face `cⁿ` and a ring of `n` squares
/// reading `a b c⁻¹ b⁻¹` between them.
///
/// Vertices `0..n` form the bottom ring and `n..2n` the top ring. Edges are
/// `Aᵢ = i → i+1` (label a), then `Cᵢ` along the top ring (label c), then
/// the rungs `Bᵢ` from bottom to top (label b). Each square is based at its
/// corner on the bottom ring.
pub fn canonical_edge_sphere(a: &str, b: &str, c: &str, n: usize) -> Result<SurfaceDiagram, DiagramError> {
    if n < 2 {
        return Err(DiagramError::Degenerate(format!("edge sphere needs n >= 2, got {n}")));
    }
    if b == a || b == c {
        return Err(DiagramError::Degenerate(format!("edge ({a}|{b}|{c}) is labeled by an endpoint")));
    }
    let (ai, ci, bi) = (|i: usize| i % n, |i: usize| n + i % n, |i: usize| 2 * n + i % n);
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push(DiagramEdge { label: a.into(), from: i, to: (i + 1) % n });
    }
    for i in 0..n {
        edges.push(DiagramEdge { label: c.into(), from: n + i, to: n + (i + 1) % n });
    }
    for i in 0..n {
        edges.push(DiagramEdge { label: b.into(), from: i, to: n + i });
    }
    let mut faces: Vec<Face> = (0..n)
        .map(|i| Face {
            boundary: vec![Side::plus(ai(i)), Side::plus(bi(i + 1)), Side::minus(ci(i)), Side::minus(bi(i))],
            sign: Sign::Plus,
            basepoint: 0,
        })
        .collect();
    faces.push(Face { boundary: (0..n).rev().map(|i| Side::minus(ai(i))).collect(), sign: Sign::Minus, basepoint: 0 });
    faces.push(Face { boundary: (0..n).map(|i| Side::plus(ci(i))).collect(), sign: Sign::Plus, basepoint: 0 });
    Ok(SurfaceDiagram { vertex_count: 2 * n, edges, faces })
}
