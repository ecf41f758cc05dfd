use serde::Serialize;

use super::{glue_corners, side_uses, SurfaceDiagram, UnionFind};
use crate::presentation::{Letter, Presentation, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FaceClass {
    Square,
    Power { generator: String, exponent: usize },
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DiagramFailure {
    /// An edge endpoint or side reference points outside the diagram.
    BadReference {
        detail: String,
    },
    EmptyFace {
        face: usize,
    },
    BasepointOutOfRange {
        face: usize,
    },
    /// Side `side` does not end where side `side + 1` starts.
    BrokenBoundary {
        face: usize,
        side: usize,
    },
    /// Edge used other than once, or twice in opposite directions.
    EdgeUse {
        edge: usize,
        uses: usize,
        same_direction: bool,
    },
    BoundaryWord {
        face: usize,
    },
    /// The corners at a vertex do not form a single disc or half-disc.
    VertexLink {
        vertex: usize,
        classes: usize,
    },
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagramReport {
    pub valid: bool,
    pub closed: bool,
    pub faces: Vec<FaceClass>,
    /// Index of the relator each face reads, when it reads one.
    pub relators: Vec<Option<usize>>,
    pub failures: Vec<DiagramFailure>,
}

pub fn classify_face(s: &SurfaceDiagram, face: usize) -> FaceClass {
    let word = s.face_word(face);
    let Some(&first) = word.first() else {
        return FaceClass::Other;
    };
    if word.len() >= 2 && word.iter().all(|&l| l == first) {
        FaceClass::Power { generator: first.0.to_string(), exponent: word.len() }
    } else if word.len() == 4 {
        FaceClass::Square
    } else {
        FaceClass::Other
    }
}

/// Checks the structural invariants and the boundary words against `p`.
/// Never fails; problems are listed in the report.
pub fn validate_diagram(s: &SurfaceDiagram, p: &Presentation) -> DiagramReport {
    let mut failures = Vec::new();
    let report = |failures: Vec<DiagramFailure>, closed, faces, relators| DiagramReport {
        valid: failures.is_empty(),
        closed,
        faces,
        relators,
        failures,
    };

    // references first: everything below indexes freely
    for (i, e) in s.edges.iter().enumerate() {
        if e.from >= s.vertex_count || e.to >= s.vertex_count {
            failures.push(DiagramFailure::BadReference { detail: format!("edge {i} endpoint") });
        }
    }
    let boundaries: Vec<_> = s.faces.iter().map(|f| f.boundary.clone()).collect();
    let uses = match side_uses(&boundaries, s.edges.len()) {
        Ok(u) => u,
        Err((f, j)) => {
            failures.push(DiagramFailure::BadReference { detail: format!("face {f} side {j}") });
            Vec::new()
        }
    };
    for (f, face) in s.faces.iter().enumerate() {
        if face.is_empty() {
            failures.push(DiagramFailure::EmptyFace { face: f });
        } else if face.basepoint >= face.len() {
            failures.push(DiagramFailure::BasepointOutOfRange { face: f });
        }
    }
    if !failures.is_empty() {
        return report(failures, false, vec![FaceClass::Other; s.faces.len()], vec![None; s.faces.len()]);
    }

    for (f, face) in s.faces.iter().enumerate() {
        let b = &face.boundary;
        for j in 0..b.len() {
            if s.side_end(b[j]) != s.side_start(b[(j + 1) % b.len()]) {
                failures.push(DiagramFailure::BrokenBoundary { face: f, side: j });
            }
        }
    }

    let mut closed = true;
    for (e, u) in uses.iter().enumerate() {
        match u.as_slice() {
            [_] => closed = false,
            [(f, j), (g, k)] if boundaries[*f][*j].dir != boundaries[*g][*k].dir => {}
            _ => failures.push(DiagramFailure::EdgeUse { edge: e, uses: u.len(), same_direction: u.len() == 2 }),
        }
    }

    let classes: Vec<FaceClass> = (0..s.faces.len()).map(|f| classify_face(s, f)).collect();
    let relators: Vec<Option<usize>> = (0..s.faces.len()).map(|f| matching_relator(s, f, p)).collect();
    for (f, r) in relators.iter().enumerate() {
        if r.is_none() {
            failures.push(DiagramFailure::BoundaryWord { face: f });
        }
    }

    // each vertex must carry exactly one class of glued corners
    if failures.iter().all(|f| !matches!(f, DiagramFailure::BrokenBoundary { .. })) {
        let gluing = glue_corners(&boundaries, &uses);
        let mut seen: Vec<Vec<usize>> = vec![Vec::new(); s.vertex_count];
        for (f, b) in boundaries.iter().enumerate() {
            for (j, side) in b.iter().enumerate() {
                let v = s.side_start(*side);
                let c = gluing.vertex(f, j);
                if !seen[v].contains(&c) {
                    seen[v].push(c);
                }
            }
        }
        for (v, cs) in seen.iter().enumerate() {
            if cs.len() != 1 {
                failures.push(DiagramFailure::VertexLink { vertex: v, classes: cs.len() });
            }
        }
    }

    let mut uf = UnionFind::new(s.vertex_count);
    let mut components = s.vertex_count;
    for e in &s.edges {
        if uf.union(e.from, e.to) {
            components -= 1;
        }
    }
    if components > 1 {
        failures.push(DiagramFailure::Disconnected);
    }

    report(failures, closed, classes, relators)
}

fn matching_relator(s: &SurfaceDiagram, face: usize, p: &Presentation) -> Option<usize> {
    let letters: Option<Vec<Letter>> = s
        .face_word(face)
        .into_iter()
        .map(|(label, inverse)| p.generator(label).map(|generator| Letter { generator, inverse }))
        .collect();
    let mut word = Word::new(letters?);
    if s.faces[face].sign.is_minus() {
        word = word.inverse();
    }
    p.relators().iter().position(|r| *r == word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{canonical_edge_sphere, canonical_power_sphere, Face, Side, Sign};
    use crate::presentation::parse_presentation;

    #[test]
    fn power_sphere_is_valid() {
        let s = canonical_power_sphere("g", 3).unwrap();
        let p = parse_presentation("gen: g\nrel: g^3").unwrap();
        let r = validate_diagram(&s, &p);
        assert!(r.valid, "{:?}", r.failures);
        assert!(r.closed);
        let power = FaceClass::Power { generator: "g".into(), exponent: 3 };
        assert_eq!(r.faces, [power.clone(), power]);
    }

    #[test]
    fn edge_sphere_is_valid() {
        let s = canonical_edge_sphere("a", "b", "c", 3).unwrap();
        let p = parse_presentation("gen: a b c\nrel: a b c^-1 b^-1\nrel: a^3\nrel: c^3").unwrap();
        let r = validate_diagram(&s, &p);
        assert!(r.valid, "{:?}", r.failures);
        assert_eq!(r.relators, [Some(0), Some(0), Some(0), Some(1), Some(2)]);
        assert_eq!(r.faces.iter().filter(|c| **c == FaceClass::Square).count(), 3);
    }

    #[test]
    fn single_square_is_a_disc() {
        let labels = ["a", "b", "c", "b"].iter().map(|s| s.to_string()).collect();
        let square = vec![Side::plus(0), Side::plus(1), Side::minus(2), Side::minus(3)];
        let d = SurfaceDiagram::from_faces(labels, vec![(square, Sign::Plus)]).unwrap();
        let p = parse_presentation("gen: a b c\nrel: a b c^-1 b^-1").unwrap();
        let r = validate_diagram(&d, &p);
        assert!(r.valid && !r.closed);
    }

    #[test]
    fn wrong_word_is_reported() {
        let s = canonical_power_sphere("g", 3).unwrap();
        let p = parse_presentation("gen: g\nrel: g^4").unwrap();
        let r = validate_diagram(&s, &p);
        assert!(!r.valid);
        assert_eq!(r.failures, [DiagramFailure::BoundaryWord { face: 0 }, DiagramFailure::BoundaryWord { face: 1 }]);
    }

    #[test]
    fn wrong_sign_is_reported() {
        let mut s = canonical_power_sphere("g", 3).unwrap();
        s.faces[1].sign = Sign::Plus;
        let p = parse_presentation("gen: g\nrel: g^3").unwrap();
        assert_eq!(validate_diagram(&s, &p).failures, [DiagramFailure::BoundaryWord { face: 1 }]);
    }

    #[test]
    fn pinched_vertex_is_reported() {
        // two power spheres sharing vertex 0
        let mut s = canonical_power_sphere("g", 2).unwrap();
        let t = canonical_power_sphere("g", 2).unwrap();
        let shift = |v: usize| if v == 0 { 0 } else { v + 1 };
        s.vertex_count = 3;
        for e in &t.edges {
            s.edges.push(crate::diagram::DiagramEdge { label: e.label.clone(), from: shift(e.from), to: shift(e.to) });
        }
        for f in &t.faces {
            let boundary = f.boundary.iter().map(|x| Side::new(x.edge + 2, x.dir)).collect();
            s.faces.push(Face { boundary, sign: f.sign, basepoint: f.basepoint });
        }
        let p = parse_presentation("gen: g\nrel: g^2").unwrap();
        let r = validate_diagram(&s, &p);
        assert_eq!(r.failures, [DiagramFailure::VertexLink { vertex: 0, classes: 2 }]);
    }

    #[test]
    fn bad_references_stop_early() {
        let mut s = canonical_power_sphere("g", 3).unwrap();
        s.faces[0].boundary[0].edge = 99;
        let p = parse_presentation("gen: g\nrel: g^3").unwrap();
        let r = validate_diagram(&s, &p);
        assert!(matches!(r.failures[0], DiagramFailure::BadReference { .. }));
    }
}
