//! Enumerations that are expected to run out of room: the trefoil quotient
//! with a^6 and the quotients of the n = 11 cyclic-shift LOI. Running out
//! of room is not a proof of anything, only consistency.

use std::time::Instant;

use logkit::{cyclic_shift_family, log_presentation, parse_log, todd_coxeter, with_power, Limits};

fn main() {
    let limits = Limits::from_env();
    println!("max_cosets = {}", limits.max_cosets);

    let trefoil = log_presentation(&parse_log("a|b|c\nb|c|a").unwrap());
    let start = Instant::now();
    let r = todd_coxeter(&with_power(&trefoil, "a", 6).unwrap(), limits);
    println!("trefoil, a^6: {r} ({:.2?}, {:?})", start.elapsed(), r.stats());

    let family = log_presentation(&cyclic_shift_family(11).unwrap());
    for n in 2..=5 {
        let start = Instant::now();
        let r = todd_coxeter(&with_power(&family, "0", n).unwrap(), limits);
        println!("family(11), 0^{n}: {r} ({:.2?}, {:?})", start.elapsed(), r.stats());
    }
}
