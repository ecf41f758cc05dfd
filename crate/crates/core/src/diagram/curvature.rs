use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::validate::{classify_face, FaceClass};
use super::{side_uses, DiagramError, SurfaceDiagram};

/// One exact angle per face corner; corner `j` of a face sits at the start
/// of side `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AngleAssignment {
    angles: Vec<Vec<BigRational>>,
}

impl AngleAssignment {
    pub fn new(angles: Vec<Vec<BigRational>>) -> Self {
        AngleAssignment { angles }
    }

    /// `1/2` at square corners and `(m-2)/m` at corners of an `m`-gon power
    /// cell.
    pub fn paper_scheme(s: &SurfaceDiagram) -> Result<Self, DiagramError> {
        let angles = (0..s.faces.len())
            .map(|f| {
                let m = s.faces[f].len();
                let a = match classify_face(s, f) {
                    FaceClass::Square => rational(1, 2),
                    FaceClass::Power { exponent, .. } => rational(exponent as i64 - 2, exponent as i64),
                    FaceClass::Other => return Err(DiagramError::UnclassifiedFace(f)),
                };
                Ok(vec![a; m])
            })
            .collect::<Result<_, _>>()?;
        Ok(AngleAssignment { angles })
    }

    pub fn get(&self, face: usize, corner: usize) -> Option<&BigRational> {
        self.angles.get(face)?.get(corner)
    }
}

pub(crate) fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn ser_rational<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(q)
}

fn ser_opt_rational<S: Serializer>(q: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
    match q {
        Some(q) => s.collect_str(q),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexCurvature {
    pub vertex: usize,
    pub valency: usize,
    pub interior: bool,
    /// Number of distinct power faces with a corner here.
    pub power_faces: usize,
    #[serde(serialize_with = "ser_rational")]
    pub kappa: BigRational,
    /// `kappa / power_faces`, when there is at least one power face.
    #[serde(serialize_with = "ser_opt_rational")]
    pub kappa_tilde: Option<BigRational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceCurvature {
    pub face: usize,
    pub sides: usize,
    #[serde(serialize_with = "ser_rational")]
    pub kappa: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurvatureReport {
    pub vertices: Vec<VertexCurvature>,
    pub faces: Vec<FaceCurvature>,
    #[serde(serialize_with = "ser_rational")]
    pub vertex_total: BigRational,
    #[serde(serialize_with = "ser_rational")]
    pub face_total: BigRational,
    pub euler_characteristic: i64,
    pub gauss_bonnet_holds: bool,
}

impl CurvatureReport {
    pub fn total(&self) -> BigRational {
        &self.vertex_total + &self.face_total
    }
}

/// Combinatorial curvature of every vertex and face.
///
/// Interior vertices get `2 − Σα`, vertices on the boundary `1 − Σα`, and a
/// face with `m` sides gets `Σα − (m − 2)`. Valency counts edge ends, so a
/// loop contributes two.
pub fn curvature_report(s: &SurfaceDiagram, angles: &AngleAssignment) -> Result<CurvatureReport, DiagramError> {
    let boundaries: Vec<_> = s.faces.iter().map(|f| f.boundary.clone()).collect();
    let uses = side_uses(&boundaries, s.edges.len())
        .map_err(|(f, j)| DiagramError::Malformed(format!("face {f} side {j} references a missing edge")))?;
    if let Some(e) = s.edges.iter().find(|e| e.from >= s.vertex_count || e.to >= s.vertex_count) {
        return Err(DiagramError::Malformed(format!("edge endpoint {} out of range", e.from.max(e.to))));
    }

    let n = s.vertex_count;
    let mut valency = vec![0usize; n];
    let mut interior = vec![true; n];
    for (e, edge) in s.edges.iter().enumerate() {
        valency[edge.from] += 1;
        valency[edge.to] += 1;
        if uses[e].len() == 1 {
            interior[edge.from] = false;
            interior[edge.to] = false;
        }
    }

    let mut angle_sum = vec![BigRational::zero(); n];
    let mut power_faces: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut faces = Vec::with_capacity(s.faces.len());
    for (f, face) in s.faces.iter().enumerate() {
        let is_power = matches!(classify_face(s, f), FaceClass::Power { .. });
        let mut sum = BigRational::zero();
        for (j, side) in face.boundary.iter().enumerate() {
            let a = angles.get(f, j).ok_or(DiagramError::MissingAngle { face: f, corner: j })?;
            let v = s.side_start(*side);
            angle_sum[v] += a;
            sum += a;
            if is_power && !power_faces[v].contains(&f) {
                power_faces[v].push(f);
            }
        }
        let m = face.len() as i64;
        faces.push(FaceCurvature { face: f, sides: face.len(), kappa: sum - rational(m - 2, 1) });
    }

    let vertices: Vec<VertexCurvature> = (0..n)
        .map(|v| {
            let base = if interior[v] { 2 } else { 1 };
            let kappa = rational(base, 1) - &angle_sum[v];
            let k = power_faces[v].len();
            let kappa_tilde = (k > 0).then(|| &kappa / rational(k as i64, 1));
            VertexCurvature {
                vertex: v,
                valency: valency[v],
                interior: interior[v],
                power_faces: k,
                kappa,
                kappa_tilde,
            }
        })
        .collect();

    let vertex_total: BigRational = vertices.iter().map(|v| &v.kappa).sum();
    let face_total: BigRational = faces.iter().map(|f| &f.kappa).sum();
    let chi = s.euler_characteristic();
    let gauss_bonnet_holds = &vertex_total + &face_total == rational(2 * chi, 1);
    Ok(CurvatureReport { vertices, faces, vertex_total, face_total, euler_characteristic: chi, gauss_bonnet_holds })
}

impl fmt::Display for CurvatureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertex\tvalency\tinterior\tk\tkappa\tkappa~")?;
        for v in &self.vertices {
            let tilde = v.kappa_tilde.as_ref().map_or("-".to_string(), |q| q.to_string());
            writeln!(f, "{}\t{}\t{}\t{}\t{}\t{}", v.vertex, v.valency, v.interior, v.power_faces, v.kappa, tilde)?;
        }
        writeln!(f, "face\tsides\tkappa")?;
        for d in &self.faces {
            writeln!(f, "{}\t{}\t{}", d.face, d.sides, d.kappa)?;
        }
        writeln!(f, "vertex total {}", self.vertex_total)?;
        writeln!(f, "face total {}", self.face_total)?;
        writeln!(f, "euler characteristic {}", self.euler_characteristic)?;
        write!(f, "gauss-bonnet {}", if self.gauss_bonnet_holds { "holds" } else { "fails" })
    }
}

impl AngleAssignment {
    /// The same angle at every corner.
    pub fn constant(s: &SurfaceDiagram, angle: BigRational) -> Self {
        AngleAssignment { angles: s.faces.iter().map(|f| vec![angle.clone(); f.len()]).collect() }
    }

    pub fn is_total_for(&self, s: &SurfaceDiagram) -> bool {
        self.angles.len() == s.faces.len() && self.angles.iter().zip(&s.faces).all(|(a, f)| a.len() == f.len())
    }
}
