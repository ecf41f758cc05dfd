//! Mirror pairs of faces and the cancellation move.

use logkit::diagram::{DiagramEdge, Face, Side, Sign};
use logkit::presentation::parse_presentation;
use logkit::{
    apply_cancellation, canonical_edge_sphere, canonical_power_sphere, find_cancellation_pairs, validate_diagram,
};

fn main() {
    let s = canonical_power_sphere("g", 5).unwrap();
    let pairs = find_cancellation_pairs(&s);
    println!("power sphere g^5: {} pairs, first {:?}", pairs.len(), pairs[0]);
    let out = apply_cancellation(&s, &pairs[0]).unwrap();
    println!("after cancelling: empty = {}", out.is_empty());

    let e = canonical_edge_sphere("a", "b", "c", 5).unwrap();
    println!("edge sphere n=5: {} pairs", find_cancellation_pairs(&e).len());

    // Insert a mirror pair of triangles along edge 0 of a g^3 sphere, then
    // cancel it again.
    let mut d = canonical_power_sphere("g", 3).unwrap();
    let (u, v) = (d.edges[0].from, d.edges[0].to);
    let m = d.vertex_count;
    d.vertex_count += 1;
    let twin = d.edges.len();
    d.edges.push(d.edges[0].clone());
    for side in d.faces[1].boundary.iter_mut().filter(|x| x.edge == 0) {
        side.edge = twin;
    }
    let y = d.edges.len();
    d.edges.push(DiagramEdge { label: "y".into(), from: u, to: m });
    d.edges.push(DiagramEdge { label: "z".into(), from: m, to: v });
    d.faces.push(Face {
        boundary: vec![Side::minus(0), Side::plus(y), Side::plus(y + 1)],
        sign: Sign::Plus,
        basepoint: 0,
    });
    d.faces.push(Face {
        boundary: vec![Side::minus(y + 1), Side::minus(y), Side::plus(twin)],
        sign: Sign::Minus,
        basepoint: 0,
    });
    let p = parse_presentation("gen: g y z\nrel: g^3\nrel: g^-1 y z").unwrap();
    println!(
        "\nwith dipole: valid = {}, F = {}, chi = {}",
        validate_diagram(&d, &p).valid,
        d.faces.len(),
        d.euler_characteristic()
    );
    for pair in find_cancellation_pairs(&d) {
        match apply_cancellation(&d, &pair) {
            Ok(r) => println!(
                "  cancel faces {} and {} at vertex {}: F = {}, chi = {}, valid = {}",
                pair.first,
                pair.second,
                pair.vertex,
                r.faces.len(),
                r.euler_characteristic(),
                r.is_empty() || validate_diagram(&r, &p).valid
            ),
            Err(err) => println!("  faces {} and {}: {err}", pair.first, pair.second),
        }
    }
}
