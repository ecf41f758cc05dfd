//! Abelian invariants of LOG groups and their power quotients, plus a
//! look at the Smith normal form underneath.

use logkit::presentation::relation_matrix;
use logkit::{abelianization, cyclic_shift_family, log_presentation, smith_normal_form, with_power};

fn main() {
    let g = log_presentation(&cyclic_shift_family(11).unwrap());
    println!("family(11): {}", abelianization(&g));
    for n in 2..=7 {
        println!("family(11), 0^{n}: {}", abelianization(&with_power(&g, "0", n).unwrap()));
    }

    let q = with_power(&g, "0", 5).unwrap();
    let snf = smith_normal_form(&relation_matrix(&q));
    let diag: Vec<String> = snf.diagonal.iter().map(ToString::to_string).collect();
    println!("\nrelation matrix {}x{}, invariant factors [{}]", q.relators().len(), q.rank(), diag.join(", "));
}
