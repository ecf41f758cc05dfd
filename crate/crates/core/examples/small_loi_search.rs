//! Exhaustive count of compressed injective LOIs on up to six vertices,
//! with every instance cross-checked against the link-girth oracle.

use std::time::Instant;

use logkit::search_small_lois;

fn main() {
    let max = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    let start = Instant::now();
    let report = search_small_lois(max).unwrap_or_else(|e| panic!("{e}"));
    print!("{report}");
    println!("consistent: {} ({:.2?})", report.consistent(), start.elapsed());
}
