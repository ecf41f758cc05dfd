//! Generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use logkit::diagram::{DiagramEdge, Face, Side, Sign, SurfaceDiagram};
use logkit::log::{Edge, LabeledOrientedGraph};
use logkit::presentation::{Letter, Presentation, Word};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

/// Random labeled oriented tree on `k` vertices named `v0..`: each vertex
/// after the first hangs off an earlier one, orientation and label uniform.
pub fn random_lot<R: Rng>(rng: &mut R, k: usize) -> LabeledOrientedGraph {
    let names = (0..k).map(|i| format!("v{i}")).collect();
    let edges = (1..k)
        .map(|i| {
            let j = rng.gen_range(0..i);
            let label = rng.gen_range(0..k);
            if rng.gen_bool(0.5) {
                Edge::new(i, label, j)
            } else {
                Edge::new(j, label, i)
            }
        })
        .collect();
    LabeledOrientedGraph::new(names, edges).unwrap()
}

/// Random compressed injective LOT, by rejection.
pub fn random_compressed_injective_lot<R: Rng>(rng: &mut R, k: usize) -> LabeledOrientedGraph {
    loop {
        let names: Vec<String> = (0..k).map(|i| format!("v{i}")).collect();
        let mut labels: Vec<usize> = (0..k).collect();
        labels.shuffle(rng);
        let edges: Vec<Edge> = (1..k)
            .map(|i| {
                let j = rng.gen_range(0..i);
                if rng.gen_bool(0.5) {
                    Edge::new(i, labels[i], j)
                } else {
                    Edge::new(j, labels[i], i)
                }
            })
            .collect();
        if edges.iter().all(|e| !e.is_degenerate()) {
            return LabeledOrientedGraph::new(names, edges).unwrap();
        }
    }
}

/// Closed connected orientable diagram from a random pairing of polygon
/// sides, together with the presentation formed by its face words.
pub fn random_closed_diagram<R: Rng>(rng: &mut R, max_faces: usize, labels: &[&str]) -> (SurfaceDiagram, Presentation) {
    loop {
        let faces = rng.gen_range(1..=max_faces);
        let mut lengths: Vec<usize> = (0..faces).map(|_| rng.gen_range(1..=5)).collect();
        if lengths.iter().sum::<usize>() % 2 == 1 {
            lengths[0] += 1;
        }
        let mut slots: Vec<(usize, usize)> =
            lengths.iter().enumerate().flat_map(|(f, &m)| (0..m).map(move |j| (f, j))).collect();
        slots.shuffle(rng);
        let mut boundaries: Vec<Vec<Side>> = lengths.iter().map(|&m| vec![Side::plus(0); m]).collect();
        let mut edge_labels = Vec::new();
        for (e, pair) in slots.chunks(2).enumerate() {
            boundaries[pair[0].0][pair[0].1] = Side::plus(e);
            boundaries[pair[1].0][pair[1].1] = Side::minus(e);
            edge_labels.push(labels.choose(rng).unwrap().to_string());
        }
        let d =
            SurfaceDiagram::from_faces(edge_labels, boundaries.into_iter().map(|b| (b, Sign::Plus)).collect()).unwrap();
        if !is_connected(&d) {
            continue;
        }
        let p = face_presentation(&d);
        return (d, p);
    }
}

pub fn is_connected(d: &SurfaceDiagram) -> bool {
    if d.vertex_count == 0 {
        return true;
    }
    let mut adj = vec![Vec::new(); d.vertex_count];
    for e in &d.edges {
        adj[e.from].push(e.to);
        adj[e.to].push(e.from);
    }
    let mut seen = vec![false; d.vertex_count];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Presentation whose relators are exactly the (sign-corrected) face words.
pub fn face_presentation(d: &SurfaceDiagram) -> Presentation {
    let mut names: Vec<String> = Vec::new();
    for e in &d.edges {
        if !names.contains(&e.label) {
            names.push(e.label.clone());
        }
    }
    let mut relators: Vec<Word> = Vec::new();
    for f in 0..d.faces.len() {
        let w = Word::new(
            d.face_word(f)
                .into_iter()
                .map(|(l, inverse)| Letter { generator: names.iter().position(|n| n == l).unwrap(), inverse })
                .collect(),
        );
        let w = if d.faces[f].sign == Sign::Minus { w.inverse() } else { w };
        if !relators.contains(&w) {
            relators.push(w);
        }
    }
    Presentation::new(names, relators).unwrap()
}

/// Splits `edge` into two parallel copies and fills the bigon between them
/// with a mirror pair of triangles `x⁻¹ y z` through a new vertex. Returns
/// the diagram and the triangle relator over `p` extended by `y`, `z`.
pub fn insert_dipole(
    d: &SurfaceDiagram,
    p: &Presentation,
    edge: usize,
    y: &str,
    z: &str,
) -> (SurfaceDiagram, Presentation) {
    let mut s = d.clone();
    let (u, v) = (s.edges[edge].from, s.edges[edge].to);
    let m = s.vertex_count;
    s.vertex_count += 1;
    let twin = s.edges.len();
    s.edges.push(s.edges[edge].clone());
    // the face using the edge backwards now uses the twin
    'outer: for f in &mut s.faces {
        for side in &mut f.boundary {
            if side.edge == edge && side.dir == Sign::Minus {
                side.edge = twin;
                break 'outer;
            }
        }
    }
    let f1 = s.edges.len();
    s.edges.push(DiagramEdge { label: y.into(), from: u, to: m });
    s.edges.push(DiagramEdge { label: z.into(), from: m, to: v });
    s.faces.push(Face {
        boundary: vec![Side::minus(edge), Side::plus(f1), Side::plus(f1 + 1)],
        sign: Sign::Plus,
        basepoint: 0,
    });
    s.faces.push(Face {
        boundary: vec![Side::minus(f1 + 1), Side::minus(f1), Side::plus(twin)],
        sign: Sign::Minus,
        basepoint: 0,
    });

    let mut names = p.generators().to_vec();
    for g in [y, z] {
        if !names.iter().any(|n| n == g) {
            names.push(g.to_string());
        }
    }
    let idx = |n: &str| names.iter().position(|x| x == n).unwrap();
    let x = idx(&s.edges[edge].label);
    let tri = Word::new(vec![Letter::neg(x), Letter::pos(idx(y)), Letter::pos(idx(z))]);
    let mut relators = p.relators().to_vec();
    relators.push(tri);
    let q = Presentation::new(names, relators).unwrap();
    (s, q)
}

pub fn random_rational<R: Rng>(rng: &mut R) -> BigRational {
    let n: i64 = rng.gen_range(-40..=40);
    let d: i64 = rng.gen_range(1..=12);
    BigRational::new(n.into(), d.into())
}

pub fn big_matrix(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

/// Fraction-free Gaussian elimination (Bareiss) determinant.
pub fn bareiss_determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Invariant factors from determinantal divisors: `d_k` is the gcd of all
/// `k × k` minors, and the `k`-th factor is `d_k / d_{k-1}`.
pub fn invariant_factors_by_minors(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut prev = BigInt::one();
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<BigInt>> =
                    rs.iter().map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect()).collect();
                g = g.gcd(&bareiss_determinant(&minor));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push((&g / &prev).abs());
        prev = g;
    }
    out
}
