use serde::Serialize;

use super::{DiagramError, Side, SurfaceDiagram, UnionFind};

/// Faces `first < second` meeting at `vertex`, where the clockwise word of
/// `first` from corner `first_corner` equals the anticlockwise word of
/// `second` from corner `second_corner`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CancellationPair {
    pub first: usize,
    pub second: usize,
    pub vertex: usize,
    pub first_corner: usize,
    pub second_corner: usize,
}

fn mirrored(s: &SurfaceDiagram, pair: &CancellationPair) -> bool {
    let (d, e) = (&s.faces[pair.first], &s.faces[pair.second]);
    if d.len() != e.len() || pair.first_corner >= d.len() || pair.second_corner >= e.len() {
        return false;
    }
    let cw = s.word_from(pair.first, pair.first_corner);
    let other = s.word_from(pair.second, pair.second_corner);
    cw.iter().zip(other.iter().rev()).all(|(&(a, x), &(b, y))| a == b && x != y)
}

/// Every mirror pair of faces, one entry per shared vertex and matching
/// corner choice.
pub fn find_cancellation_pairs(s: &SurfaceDiagram) -> Vec<CancellationPair> {
    let mut out = Vec::new();
    for first in 0..s.faces.len() {
        for second in first + 1..s.faces.len() {
            if s.faces[first].len() != s.faces[second].len() {
                continue;
            }
            for (i, &a) in s.faces[first].boundary.iter().enumerate() {
                let vertex = s.side_start(a);
                for (k, &b) in s.faces[second].boundary.iter().enumerate() {
                    if s.side_start(b) != vertex {
                        continue;
                    }
                    let pair = CancellationPair { first, second, vertex, first_corner: i, second_corner: k };
                    if mirrored(s, &pair) {
                        out.push(pair);
                    }
                }
            }
        }
    }
    out
}

/// Edge classes with the orientation of each edge relative to its root.
struct ParityUnion {
    uf: UnionFind,
    flip: Vec<bool>,
}

impl ParityUnion {
    fn new(n: usize) -> Self {
        ParityUnion { uf: UnionFind::new(n), flip: vec![false; n] }
    }

    fn find(&mut self, x: usize) -> (usize, bool) {
        // walk up without path compression so parities stay simple
        let mut parity = self.flip[x];
        let mut r = x;
        while self.uf.parent_of(r) != r {
            r = self.uf.parent_of(r);
            parity ^= self.flip[r];
        }
        (r, parity)
    }

    /// Identify `a` with `b` reversed when `flip` is set. Returns false on
    /// an inconsistent identification.
    fn union(&mut self, a: usize, b: usize, flip: bool) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return pa ^ pb == flip;
        }
        let (lo, hi, p) = if ra < rb { (ra, rb, pa ^ pb ^ flip) } else { (rb, ra, pa ^ pb ^ flip) };
        self.uf.set_parent(hi, lo);
        self.flip[hi] = p;
        true
    }
}

/// Removes the two faces of `pair` and sews the hole shut by identifying
/// the two boundary paths read from the shared vertex.
///
/// The input is never modified; on [`DiagramError::NonSurfaceResult`] the
/// caller still holds the original diagram. Removing the last two faces
/// gives the empty diagram.
pub fn apply_cancellation(s: &SurfaceDiagram, pair: &CancellationPair) -> Result<SurfaceDiagram, DiagramError> {
    let invalid = DiagramError::InvalidPair { first: pair.first, second: pair.second };
    if pair.first == pair.second || pair.first.max(pair.second) >= s.faces.len() || !mirrored(s, pair) {
        return Err(invalid);
    }
    let (d, e) = (&s.faces[pair.first], &s.faces[pair.second]);
    if s.side_start(d.boundary[pair.first_corner]) != s.side_start(e.boundary[pair.second_corner]) {
        return Err(invalid);
    }

    let m = d.len();
    let mut classes = ParityUnion::new(s.edges.len());
    for i in 0..m {
        let p = d.boundary[(pair.first_corner + i) % m];
        let q = e.boundary[(pair.second_corner + m - 1 - i) % m].reversed();
        if !classes.union(p.edge, q.edge, p.dir != q.dir) {
            return Err(DiagramError::NonSurfaceResult(format!("edge {} would be glued to its reverse", p.edge)));
        }
    }

    let kept: Vec<usize> = (0..s.faces.len()).filter(|&f| f != pair.first && f != pair.second).collect();
    if kept.is_empty() {
        return Ok(SurfaceDiagram::default());
    }

    // renumber surviving edge classes by first use
    let mut number = vec![usize::MAX; s.edges.len()];
    let mut labels = Vec::new();
    let mut faces = Vec::with_capacity(kept.len());
    for &f in &kept {
        let boundary = s.faces[f]
            .boundary
            .iter()
            .map(|side| {
                let (root, flip) = classes.find(side.edge);
                if number[root] == usize::MAX {
                    number[root] = labels.len();
                    labels.push(s.edges[root].label.clone());
                }
                Side { edge: number[root], dir: if flip { side.dir.flip() } else { side.dir } }
            })
            .collect();
        faces.push((boundary, s.faces[f].sign));
    }

    let mut out = SurfaceDiagram::from_faces(labels, faces).map_err(|err| match err {
        DiagramError::Malformed(msg) => DiagramError::NonSurfaceResult(msg),
        other => other,
    })?;
    for (new, &old) in out.faces.iter_mut().zip(&kept) {
        new.basepoint = s.faces[old].basepoint;
    }
    // a closed result: every surviving edge class is used exactly twice
    let boundaries: Vec<_> = out.faces.iter().map(|f| f.boundary.clone()).collect();
    let uses = super::side_uses(&boundaries, out.edges.len()).expect("renumbered sides are in range");
    if let Some(edge) = uses.iter().position(|u| u.len() != 2) {
        return Err(DiagramError::NonSurfaceResult(format!("edge class {edge} would lie on a boundary")));
    }
    let mut uf = UnionFind::new(out.vertex_count);
    let mut components = out.vertex_count;
    for edge in &out.edges {
        if uf.union(edge.from, edge.to) {
            components -= 1;
        }
    }
    if components != 1 {
        return Err(DiagramError::NonSurfaceResult("result would be disconnected".into()));
    }
    if out.euler_characteristic() != s.euler_characteristic() {
        return Err(DiagramError::NonSurfaceResult(format!(
            "euler characteristic would change from {} to {}",
            s.euler_characteristic(),
            out.euler_characteristic()
        )));
    }
    Ok(out)
}
