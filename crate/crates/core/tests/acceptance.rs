//! Acceptance criteria 1 to 9, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the summary lines always reach the
//! terminal. Exits non-zero when any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use logkit::diagram::validate_diagram;
use logkit::{
    abelianization, apply_cancellation, braid_quotient, canonical_edge_sphere, canonical_power_sphere,
    curvature_report, cyclic_shift_family, find_cancellation_pairs, find_forbidden_patterns, log_presentation,
    parse_log, reidemeister_schreier_kernel, search_small_lois, todd_coxeter, verdict, verify_table, with_power,
    AngleAssignment, EnumerationResult, Limits, Presentation,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn trefoil() -> Presentation {
    log_presentation(&parse_log("a|b|c\nb|c|a").unwrap())
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    check(t < limit, || format!("{what} took {t:.2?}, limit {limit:?}"))
}

fn ladder() -> Outcome {
    let limits = Limits::new(100_000);
    let expected = [(2, 6), (3, 24), (4, 96), (5, 600)];
    let mut seen = Vec::new();
    for (n, order) in expected {
        let start = Instant::now();
        let p = with_power(&trefoil(), "a", n).unwrap();
        let r = todd_coxeter(&p, limits);
        within(start, Duration::from_secs(5), &format!("trefoil n={n}"))?;
        let EnumerationResult::Finite { order: got, table } = &r else {
            return Err(format!("trefoil n={n}: {r}"));
        };
        check(*got == order, || format!("trefoil n={n}: order {got}, expected {order}"))?;
        check(r.stats().max_live < 100_000, || format!("trefoil n={n}: {} cosets", r.stats().max_live))?;
        check(verify_table(table, &p) == Ok(None), || format!("trefoil n={n}: table fails verification"))?;

        let start = Instant::now();
        let b = braid_quotient(3, n).unwrap();
        let rb = todd_coxeter(&b, limits);
        within(start, Duration::from_secs(5), &format!("B(3,{n})"))?;
        let EnumerationResult::Finite { order: got, table } = &rb else {
            return Err(format!("B(3,{n}): {rb}"));
        };
        check(*got == order, || format!("B(3,{n}): order {got}, expected {order}"))?;
        check(verify_table(table, &b) == Ok(None), || format!("B(3,{n}): table fails verification"))?;
        seen.push(order.to_string());
    }
    Ok(format!("orders {}", seen.join(", ")))
}

fn infinite_probes() -> Outcome {
    let limits = Limits::new(100_000);
    let mut probes = vec![("trefoil n=6".to_string(), with_power(&trefoil(), "a", 6).unwrap())];
    let family = log_presentation(&cyclic_shift_family(11).unwrap());
    for n in 2..=5 {
        probes.push((format!("family(11) n={n}"), with_power(&family, "0", n).unwrap()));
    }
    for (name, p) in &probes {
        let start = Instant::now();
        let r = todd_coxeter(p, limits);
        within(start, Duration::from_secs(60), name)?;
        check(r.order().is_none(), || format!("{name}: closed with order {r}"))?;
        let text = r.to_string();
        check(text.contains("consistent with infinite"), || format!("{name}: wording {text:?}"))?;
    }
    Ok(format!("{} probes exceeded the limit", probes.len()))
}

fn family_scan() -> Outcome {
    let start = Instant::now();
    for n in 10..=30 {
        let v = verdict(&cyclic_shift_family(n).unwrap());
        check(v.theorem2_applicable, || format!("family({n}) rejected: {:?}", v.reasons))?;
    }
    let seven = cyclic_shift_family(7).unwrap();
    let v = verdict(&seven);
    check(!v.theorem2_applicable, || "family(7) accepted".into())?;
    let fig2 = find_forbidden_patterns(&seven).unwrap().fig2;
    check(fig2.contains(&(0, 2, 4)), || format!("family(7) fig2 witnesses {fig2:?}"))?;
    check(v.reasons.iter().any(|r| r.clause == "fig2"), || "no fig2 reason for family(7)".into())?;
    within(start, Duration::from_secs(1), "family scan")?;
    Ok("10..=30 applicable, n=7 fails with fig2 (e0, e2, e4)".into())
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let report = search_small_lois(6).map_err(|e| e.to_string())?;
    within(start, Duration::from_secs(120), "search")?;
    check(report.consistent(), || format!("disagreements:\n{}", report.disagreements.join("\n")))?;
    let raw: usize = report.rows.iter().map(|r| r.raw_instances).sum();
    Ok(format!("{raw} labellings, all agree with link girth >= 4"))
}

fn gauss_bonnet() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for trial in 0..1000 {
        let (d, p) = common::random_closed_diagram(&mut rng, 6, &["x", "y", "z"]);
        let report = validate_diagram(&d, &p);
        check(report.valid && report.closed, || format!("trial {trial}: invalid diagram {:?}", report.failures))?;
        let angles = AngleAssignment::new(
            d.faces.iter().map(|f| (0..f.len()).map(|_| common::random_rational(&mut rng)).collect()).collect(),
        );
        let c = curvature_report(&d, &angles).map_err(|e| e.to_string())?;
        let chi = BigRational::from_integer(BigInt::from(2 * d.euler_characteristic()));
        check(c.total() == chi && c.gauss_bonnet_holds, || format!("trial {trial}: total {} vs {chi}", c.total()))?;
    }
    within(start, Duration::from_secs(30), "1000 diagrams")?;
    Ok("1000 random closed diagrams, exact equality".into())
}

fn sphere_audits() -> Outcome {
    let start = Instant::now();
    let four = BigRational::from_integer(4.into());
    for n in 3..=12 {
        let s = canonical_edge_sphere("a", "b", "c", n).map_err(|e| e.to_string())?;
        let c = curvature_report(&s, &AngleAssignment::paper_scheme(&s).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let expect = BigRational::new(2.into(), BigInt::from(n));
        check(c.faces.iter().all(|f| f.kappa == BigRational::default()), || format!("S_e({n}) has a curved face"))?;
        check(c.vertices.iter().all(|v| v.kappa == expect), || format!("S_e({n}) vertex curvature not 2/{n}"))?;
        check(c.total() == four, || format!("S_e({n}) total {}", c.total()))?;

        let g = canonical_power_sphere("g", n).map_err(|e| e.to_string())?;
        let c = curvature_report(&g, &AngleAssignment::paper_scheme(&g).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        check(c.total() == four, || format!("S_g^{n} total {}", c.total()))?;
    }
    within(start, Duration::from_secs(1), "sphere audits")?;
    Ok("S_e(n) and S_g^n for 3..=12".into())
}

fn abelianizations() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..100 {
        let k = rng.gen_range(2..=8);
        let t = common::random_lot(&mut rng, k);
        let p = log_presentation(&t);
        let ab = abelianization(&p);
        check(ab.free_rank == 1 && ab.torsion.is_empty(), || format!("trial {trial}: P(T) abelianizes to {ab}"))?;
        let x = t.vertices()[rng.gen_range(0..k)].clone();
        for n in 2..=7u64 {
            let q = with_power(&p, &x, n as i64).unwrap();
            let ab = abelianization(&q);
            check(ab.is_cyclic_of_order(n), || format!("trial {trial}, n={n}: {ab}"))?;
        }
    }
    within(start, Duration::from_secs(10), "abelianizations")?;
    Ok("100 random LOTs: Z, and Z_n for n = 2..7".into())
}

fn kernels() -> Outcome {
    let start = Instant::now();
    let mut seen = Vec::new();
    for (n, order) in [(2usize, 3usize), (3, 8), (4, 24), (5, 120)] {
        let q = with_power(&trefoil(), "a", n as i64).unwrap();
        let k = reidemeister_schreier_kernel(&q, n).map_err(|e| e.to_string())?;
        let r = todd_coxeter(&k, Limits::new(100_000));
        check(r.order() == Some(order), || format!("kernel n={n}: {r}, expected {order}"))?;
        seen.push(order.to_string());
    }
    within(start, Duration::from_secs(30), "kernels")?;
    Ok(format!("kernel orders {}", seen.join(", ")))
}

fn cancellation() -> Outcome {
    let start = Instant::now();
    for n in 2..=8 {
        let s = canonical_power_sphere("g", n).map_err(|e| e.to_string())?;
        let pairs = find_cancellation_pairs(&s);
        check(!pairs.is_empty(), || format!("S_g^{n}: no pairs"))?;
        let out = apply_cancellation(&s, &pairs[0]).map_err(|e| e.to_string())?;
        check(out.is_empty(), || format!("S_g^{n}: {} faces left", out.faces.len()))?;
    }
    for n in 2..=12 {
        let s = canonical_edge_sphere("a", "b", "c", n).map_err(|e| e.to_string())?;
        check(find_cancellation_pairs(&s).is_empty(), || format!("S_e({n}) has pairs"))?;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut applied = 0;
    for trial in 0..200 {
        let (d, p) = common::random_closed_diagram(&mut rng, 4, &["x", "y"]);
        let edge = rng.gen_range(0..d.edges.len());
        let (s, q) = common::insert_dipole(&d, &p, edge, "u", "w");
        let r = validate_diagram(&s, &q);
        check(r.valid && r.closed, || format!("trial {trial}: dipole diagram invalid {:?}", r.failures))?;
        let dipole = (s.faces.len() - 2, s.faces.len() - 1);
        let pairs = find_cancellation_pairs(&s);
        check(pairs.iter().any(|c| (c.first, c.second) == dipole), || format!("trial {trial}: dipole not found"))?;
        for pair in &pairs {
            let Ok(out) = apply_cancellation(&s, pair) else {
                check((pair.first, pair.second) != dipole, || format!("trial {trial}: dipole refused"))?;
                continue;
            };
            applied += 1;
            check(out.faces.len() + 2 == s.faces.len(), || format!("trial {trial}: face count"))?;
            if out.is_empty() {
                continue;
            }
            check(out.euler_characteristic() == s.euler_characteristic(), || format!("trial {trial}: chi changed"))?;
            let r = validate_diagram(&out, &q);
            check(r.valid && r.closed, || format!("trial {trial}: result invalid {:?}", r.failures))?;
        }
    }
    within(start, Duration::from_secs(5), "cancellation")?;
    Ok(format!("spheres reduce as expected, {applied} random moves kept validity and chi"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("coxeter ladder", ladder),
        ("infiniteness probes", infinite_probes),
        ("cyclic shift family", family_scan),
        ("oracle equivalence", oracle_equivalence),
        ("gauss-bonnet", gauss_bonnet),
        ("canonical spheres", sphere_audits),
        ("abelianization", abelianizations),
        ("kernel orders", kernels),
        ("cancellation", cancellation),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {}: {name} ({t:.2?}) {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}: {name} ({t:.2?}) {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
