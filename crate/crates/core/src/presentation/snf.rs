use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Nonzero invariant factors `d₁ | d₂ | … | d_rank`, all positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
}

/// Smith normal form of an integer matrix given as rows.
///
/// Pivots on the entry of least absolute value, so intermediate entries stay
/// small for the sparse relation matrices met in practice.
pub fn smith_normal_form(rows: &[Vec<BigInt>]) -> SmithForm {
    let m = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    debug_assert!(a.iter().all(|r| r.len() == n));

    let mut diagonal = Vec::new();
    for t in 0..m.min(n) {
        let Some((pi, pj)) = min_abs_entry(&a, t, t..m, t..n) else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);

        loop {
            // clear column t below and row t to the right
            for i in t + 1..m {
                if !a[i][t].is_zero() {
                    let q = &a[i][t] / &a[t][t];
                    sub_row(&mut a, i, t, &q);
                }
            }
            for j in t + 1..n {
                if !a[t][j].is_zero() {
                    let q = &a[t][j] / &a[t][t];
                    sub_col(&mut a, j, t, &q);
                }
            }
            let col_rest = (t + 1..m).find(|&i| !a[i][t].is_zero());
            let row_rest = (t + 1..n).find(|&j| !a[t][j].is_zero());
            if col_rest.is_some() || row_rest.is_some() {
                // a remainder is smaller than the pivot: make it the pivot
                let (pi, pj) = min_abs_entry(&a, t, t..m, t..n).expect("nonzero entries remain");
                if pi == t || pj == t {
                    a.swap(t, pi);
                    swap_cols(&mut a, t, pj);
                } else {
                    unreachable!("remainders live in row or column t");
                }
                continue;
            }
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match bad {
                Some(i) => {
                    let one = BigInt::from(-1);
                    sub_row(&mut a, t, i, &one);
                }
                None => break,
            }
        }
        diagonal.push(a[t][t].abs());
    }
    let rank = diagonal.len();
    SmithForm { diagonal, rank }
}

/// Entry of least absolute value in the given window, restricted to row `t`
/// and column `t` when any of those is nonzero.
fn min_abs_entry(
    a: &[Vec<BigInt>],
    t: usize,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    let consider = |i: usize, j: usize, best: &mut Option<(usize, usize)>| {
        if a[i][j].is_zero() {
            return;
        }
        if best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
            *best = Some((i, j));
        }
    };
    if !a[t][t].is_zero() {
        for i in rows.clone() {
            consider(i, t, &mut best);
        }
        for j in cols.clone() {
            consider(t, j, &mut best);
        }
        return best;
    }
    for i in rows {
        for j in cols.clone() {
            consider(i, j, &mut best);
        }
    }
    best
}

fn swap_cols(a: &mut [Vec<BigInt>], x: usize, y: usize) {
    if x != y {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
    }
}

/// row[i] -= q * row[t]
fn sub_row(a: &mut [Vec<BigInt>], i: usize, t: usize, q: &BigInt) {
    let src = a[t].clone();
    for (x, s) in a[i].iter_mut().zip(src.iter()) {
        if !s.is_zero() {
            *x -= q * s;
        }
    }
}

/// col[j] -= q * col[t]
fn sub_col(a: &mut [Vec<BigInt>], j: usize, t: usize, q: &BigInt) {
    for row in a.iter_mut() {
        if !row[t].is_zero() {
            let d = q * &row[t];
            row[j] -= d;
        }
    }
}
