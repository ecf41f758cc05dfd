//! Orders of the trefoil quotients `x^n = 1` next to the braid quotients
//! B(3, n), and what happens from n = 6 on.
//!
//! ```text
//! cargo run --release --example coxeter_ladder
//! ```

use std::time::Instant;

use logkit::{
    braid_quotient, log_presentation, parse_log, todd_coxeter, verify_table, with_power, EnumerationResult, Limits,
};

fn main() {
    let trefoil = log_presentation(&parse_log("a|b|c\nb|c|a").unwrap());
    let limits = Limits::new(100_000);

    println!("n\ttrefoil\tbraid\tcosets\ttime");
    for n in 2..=6 {
        let start = Instant::now();
        let quotient = with_power(&trefoil, "a", n).unwrap();
        let r = todd_coxeter(&quotient, limits);
        let braid = todd_coxeter(&braid_quotient(3, n).unwrap(), limits);
        if let EnumerationResult::Finite { table, .. } = &r {
            assert_eq!(verify_table(table, &quotient), Ok(None));
        }
        println!("{n}\t{r}\t{braid}\t{}\t{:.2?}", r.stats().max_live, start.elapsed());
    }
}
