//! Sweep the cyclic-shift family and report which members satisfy the
//! hypotheses, with the first witness for those that do not.

use logkit::{cyclic_shift_family, npc::log_link_girth, verdict};

fn main() {
    println!("n\tnpc\ttheorem2\tgirth\tfirst failure");
    for n in 4..=30 {
        let g = cyclic_shift_family(n).unwrap();
        let v = verdict(&g);
        let why = v.reasons.first().map_or(String::new(), |r| format!("{}: {}", r.clause, r.witness));
        println!("{n}\t{}\t{}\t{}\t{why}", v.npc, v.theorem2_applicable, log_link_girth(&g));
    }
}
