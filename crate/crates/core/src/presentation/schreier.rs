use std::collections::HashSet;

use super::{Letter, Presentation, PresentationError, Word};

/// Presentation of the kernel of `G → ℤ_n` sending every generator to 1.
///
/// Uses the Schreier transversal `{x₀⁰, …, x₀ⁿ⁻¹}` on the first generator
/// `x₀`. The generator `y_{i,g} = x₀ⁱ · g · (x₀^{i+1 mod n})⁻¹` is named
/// `g_i`; the `n − 1` generators `y_{i,x₀}` with `i < n − 1` are trivial and
/// never appear. Output is simplified by [`simplify`].
pub fn reidemeister_schreier_kernel(p: &Presentation, n: usize) -> Result<Presentation, PresentationError> {
    if n < 2 {
        return Err(PresentationError::InvalidParameter(format!("kernel index must be >= 2, got {n}")));
    }
    if p.rank() == 0 {
        return Err(PresentationError::InvalidParameter("presentation has no generators".into()));
    }
    for (i, r) in p.relators().iter().enumerate() {
        let sum = r.total_exponent();
        if sum.rem_euclid(n as i64) != 0 {
            return Err(PresentationError::NotInKernelMap { relator: i, sum, n });
        }
    }

    // Schreier generator (coset i, generator g) -> index in the new presentation.
    let k = p.rank();
    let mut index = vec![None; n * k];
    let mut names = Vec::new();
    for g in 0..k {
        for i in 0..n {
            if g == 0 && i + 1 < n {
                continue;
            }
            index[i * k + g] = Some(names.len());
            names.push(format!("{}_{}", p.generators()[g], i));
        }
    }

    let mut relators = Vec::with_capacity(n * p.relators().len());
    for r in p.relators() {
        for start in 0..n {
            let mut coset = start;
            let mut out = Vec::new();
            for l in r.letters() {
                if l.inverse {
                    coset = (coset + n - 1) % n;
                    if let Some(y) = index[coset * k + l.generator] {
                        out.push(Letter::neg(y));
                    }
                } else {
                    if let Some(y) = index[coset * k + l.generator] {
                        out.push(Letter::pos(y));
                    }
                    coset = (coset + 1) % n;
                }
            }
            debug_assert_eq!(coset, start);
            relators.push(Word::new(out));
        }
    }

    Ok(simplify(names, relators))
}

/// Bounded Tietze simplification: reduce relators, drop trivial and repeated
/// ones, and eliminate generators through relators of length one or two.
/// No search; the result is a deterministic function of the input.
pub(crate) fn simplify(mut names: Vec<String>, mut relators: Vec<Word>) -> Presentation {
    let mut alive = vec![true; names.len()];
    loop {
        relators = relators.iter().map(Word::cyclically_reduced).filter(|w| !w.is_empty()).collect();
        let mut seen = HashSet::new();
        relators.retain(|w| seen.insert(canonical_cyclic(w)));

        let mut elimination = None;
        for (ri, r) in relators.iter().enumerate() {
            let l = r.letters();
            match l.len() {
                1 => {
                    elimination = Some((ri, l[0].generator, Word::empty()));
                    break;
                }
                2 if l[0].generator != l[1].generator => {
                    // x^e y^f = 1: eliminate the later generator
                    let (keep, drop) = if l[0].generator < l[1].generator { (l[0], l[1]) } else { (l[1], l[0]) };
                    // drop^f = keep^-e  =>  drop = keep^(-e*f)
                    let image = if drop.inverse { keep } else { keep.inv() };
                    elimination = Some((ri, drop.generator, Word::new(vec![image])));
                    break;
                }
                _ => {}
            }
        }
        let Some((ri, gen, image)) = elimination else { break };
        relators.remove(ri);
        alive[gen] = false;
        relators = relators.iter().map(|w| w.substitute(gen, &image)).collect();
    }

    let mut renumber = vec![usize::MAX; names.len()];
    let mut kept = Vec::new();
    for (g, name) in names.drain(..).enumerate() {
        if alive[g] {
            renumber[g] = kept.len();
            kept.push(name);
        }
    }
    let relators = relators
        .into_iter()
        .map(|w| w.letters().iter().map(|l| Letter { generator: renumber[l.generator], inverse: l.inverse }).collect())
        .collect();
    Presentation::new(kept, relators).expect("renumbered relators stay in range")
}

/// Least rotation of the word or of its inverse; identifies relators that
/// define the same normal closure trivially.
fn canonical_cyclic(w: &Word) -> Word {
    let inv = w.inverse();
    (0..w.len()).flat_map(|i| [w.rotated(i), inv.rotated(i)]).min().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{abelianization, parse_presentation};

    #[test]
    fn free_rank_one_kernel() {
        let p = Presentation::new(vec!["x".into()], vec![]).unwrap();
        let k = reidemeister_schreier_kernel(&p, 3).unwrap();
        assert_eq!(k.generators(), ["x_2"]);
        assert!(k.relators().is_empty());
    }

    #[test]
    fn free_rank_two_kernel() {
        let p = Presentation::new(vec!["a".into(), "b".into()], vec![]).unwrap();
        let k = reidemeister_schreier_kernel(&p, 2).unwrap();
        assert_eq!(k.rank(), 3);
        assert!(k.relators().is_empty());
    }

    #[test]
    fn cyclic_kernel_is_trivial() {
        let p = parse_presentation("gen: x\nrel: x^3").unwrap();
        let k = reidemeister_schreier_kernel(&p, 3).unwrap();
        assert_eq!(k.rank(), 0);
        assert!(k.relators().is_empty());
    }

    #[test]
    fn exponent_sum_precondition() {
        let p = parse_presentation("gen: x\nrel: x^4").unwrap();
        assert!(matches!(
            reidemeister_schreier_kernel(&p, 3),
            Err(PresentationError::NotInKernelMap { relator: 0, sum: 4, n: 3 })
        ));
    }

    #[test]
    fn simplify_length_two() {
        // a b^-1 = 1 identifies b with a; b^2 then becomes a^2
        let names = vec!["a".to_string(), "b".to_string()];
        let r = vec![Word::new(vec![Letter::pos(0), Letter::neg(1)]), Word::new(vec![Letter::pos(1), Letter::pos(1)])];
        let p = simplify(names, r);
        assert_eq!(p.to_plain(), "gen: a\nrel: a^2\n");

        // a b = 1 makes b = a^-1
        let names = vec!["a".to_string(), "b".to_string()];
        let r = vec![Word::new(vec![Letter::pos(0), Letter::pos(1)]), Word::new(vec![Letter::pos(1); 3])];
        assert_eq!(simplify(names, r).to_plain(), "gen: a\nrel: a^-3\n");
    }

    #[test]
    fn kernel_abelianization_of_z_mod_six() {
        // kernel of Z_6 -> Z_2 is Z_3
        let p = parse_presentation("gen: x\nrel: x^6").unwrap();
        let k = reidemeister_schreier_kernel(&p, 2).unwrap();
        assert!(abelianization(&k).is_cyclic_of_order(3));
    }
}
