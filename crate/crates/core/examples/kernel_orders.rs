//! The kernel of the map to Z_n sending every generator to 1, for the
//! trefoil quotients. Its order times n recovers the order of the quotient.

use logkit::{
    abelianization, log_presentation, parse_log, reidemeister_schreier_kernel, todd_coxeter, with_power, Limits,
};

fn main() {
    let trefoil = log_presentation(&parse_log("a|b|c\nb|c|a").unwrap());
    for n in 2..=5 {
        let quotient = with_power(&trefoil, "a", n as i64).unwrap();
        let kernel = reidemeister_schreier_kernel(&quotient, n).unwrap();
        let order = todd_coxeter(&kernel, Limits::default());
        println!(
            "n={n}: {} generators, {} relators, order {order}, abelianization {}",
            kernel.rank(),
            kernel.relators().len(),
            abelianization(&kernel)
        );
    }

    let small = with_power(&trefoil, "a", 3).unwrap();
    println!("\nkernel for n=3:\n{}", reidemeister_schreier_kernel(&small, 3).unwrap().to_plain());
}
