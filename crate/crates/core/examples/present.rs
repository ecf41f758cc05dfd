//! Presentations in both output formats, the braid quotients, and the
//! order in which a tree collapses onto a vertex.

use logkit::{braid_quotient, collapse_order, cyclic_shift_family, log_presentation, parse_log, with_power};

fn main() {
    let trefoil = parse_log("a|b|c\nb|c|a").unwrap();
    let p = with_power(&log_presentation(&trefoil), "a", 3).unwrap();
    println!("{p}\n");
    print!("{}", p.to_plain());
    println!("\n{}", p.to_algebra());
    println!("B(4, 3) = {}", braid_quotient(4, 3).unwrap());

    let t = cyclic_shift_family(6).unwrap();
    let order: Vec<String> = collapse_order(&t, "0").unwrap().iter().map(|e| t.edge_string(e)).collect();
    println!("\ncollapse family(6) onto 0: {}", order.join(" "));
}
