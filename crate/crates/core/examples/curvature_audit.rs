//! Curvature of the canonical spheres under the angle scheme that gives
//! square corners 1/2 and power corners (n-2)/n.

use logkit::{canonical_edge_sphere, canonical_power_sphere, curvature_report, AngleAssignment};

fn main() {
    for n in [3, 5, 8] {
        let s = canonical_edge_sphere("a", "b", "c", n).unwrap();
        let r = curvature_report(&s, &AngleAssignment::paper_scheme(&s).unwrap()).unwrap();
        let v = &r.vertices[0];
        println!(
            "edge sphere n={n}: V={} E={} F={}  kappa(v)={}  kappa~(v)={}  total={}  gauss-bonnet {}",
            s.vertex_count,
            s.edges.len(),
            s.faces.len(),
            v.kappa,
            v.kappa_tilde.as_ref().unwrap(),
            r.total(),
            r.gauss_bonnet_holds
        );
    }

    let s = canonical_power_sphere("g", 4).unwrap();
    let r = curvature_report(&s, &AngleAssignment::paper_scheme(&s).unwrap()).unwrap();
    println!("\npower sphere g^4:\n{r}");
}
