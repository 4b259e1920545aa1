//! The bosonic Fock space on the Schur basis: `q` removes a box, `p` adds
//! one, and the divided powers add or remove horizontal and vertical strips.

use num_traits::One;

use crate::lincomb::SchurVector;
use crate::partition::Partition;
use crate::rational::Rational;

fn unit(p: Partition) -> (Partition, Rational) {
    (p, Rational::one())
}

pub fn apply_q(v: &SchurVector) -> SchurVector {
    v.flat_map(|mu| mu.res_set().into_iter().map(unit))
}

pub fn apply_p(v: &SchurVector) -> SchurVector {
    v.flat_map(|mu| mu.ind_set().into_iter().map(unit))
}

/// All `μ ⊇ λ` with `μ/λ` a horizontal strip of `m` boxes.
pub fn add_horizontal_strips(lam: &Partition, m: usize) -> Vec<Partition> {
    let rows = lam.len() + 1;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rows);
    grow(lam, 1, rows, m, &mut cur, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

// row i may grow from λ_i up to λ_{i-1} (unbounded for the first row)
fn grow(lam: &Partition, i: usize, rows: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if i > rows {
        if left == 0 {
            out.push(Partition::from_decreasing(cur.clone()));
        }
        return;
    }
    let base = lam.row(i);
    let cap = if i == 1 { left } else { (lam.row(i - 1) - base).min(left) };
    for extra in 0..=cap {
        cur.push(base + extra);
        grow(lam, i + 1, rows, left - extra, cur, out);
        cur.pop();
    }
}

/// All `ν ⊆ λ` with `λ/ν` a horizontal strip of `m` boxes.
pub fn remove_horizontal_strips(lam: &Partition, m: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(lam.len());
    shrink(lam, 1, m, &mut cur, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

// row i may shrink from λ_i down to λ_{i+1}
fn shrink(lam: &Partition, i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if i > lam.len() {
        if left == 0 {
            out.push(Partition::from_decreasing(cur.clone()));
        }
        return;
    }
    let cap = (lam.row(i) - lam.row(i + 1)).min(left);
    for cut in 0..=cap {
        cur.push(lam.row(i) - cut);
        shrink(lam, i + 1, left - cut, cur, out);
        cur.pop();
    }
}

fn transpose_all(v: Vec<Partition>) -> Vec<Partition> {
    let mut v: Vec<Partition> = v.iter().map(Partition::dual).collect();
    v.sort_by(|a, b| b.cmp(a));
    v
}

/// `p^{(m)}`: add a horizontal `m`-strip in all ways.
pub fn apply_p_row(m: usize, v: &SchurVector) -> SchurVector {
    v.flat_map(|mu| add_horizontal_strips(mu, m).into_iter().map(unit))
}

/// `p^{(1^m)}`: add a vertical `m`-strip in all ways.
pub fn apply_p_col(m: usize, v: &SchurVector) -> SchurVector {
    v.flat_map(|mu| transpose_all(add_horizontal_strips(&mu.dual(), m)).into_iter().map(unit))
}

/// `q^{(n)}`: remove a horizontal `n`-strip in all ways.
pub fn apply_q_row(n: usize, v: &SchurVector) -> SchurVector {
    v.flat_map(|mu| remove_horizontal_strips(mu, n).into_iter().map(unit))
}

/// `q^{(1^n)}`: remove a vertical `n`-strip in all ways.
pub fn apply_q_col(n: usize, v: &SchurVector) -> SchurVector {
    v.flat_map(|mu| transpose_all(remove_horizontal_strips(&mu.dual(), n)).into_iter().map(unit))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn s(p: Partition) -> SchurVector {
        SchurVector::basis(p)
    }

    fn sum(ps: &[Partition]) -> SchurVector {
        ps.iter().cloned().map(unit).collect()
    }

    #[test]
    fn q_and_p_examples() {
        assert_eq!(apply_q(&s(part![2, 1])), sum(&[part![2], part![1, 1]]));
        assert!(apply_q(&s(part![])).is_zero());
        assert_eq!(apply_q(&s(part![1])), s(part![]));
        assert_eq!(apply_p(&s(part![])), s(part![1]));
        assert_eq!(apply_p(&s(part![1])), sum(&[part![2], part![1, 1]]));
        assert!(apply_p(&SchurVector::zero()).is_zero());
        assert_eq!(apply_q(&s(part![2, 1])).to_string(), "(2) + (1,1)");
    }

    #[test]
    fn strip_examples() {
        assert_eq!(apply_p_row(2, &s(part![1])), sum(&[part![3], part![2, 1]]));
        assert_eq!(apply_p_row(2, &s(part![])), s(part![2]));
        assert_eq!(apply_p_col(2, &s(part![])), s(part![1, 1]));
        assert_eq!(apply_q_row(2, &s(part![2, 1])), s(part![1]));
        assert_eq!(apply_q_col(2, &s(part![2, 1])), s(part![1]));
        assert_eq!(apply_q_row(3, &s(part![2, 1])), SchurVector::zero());
        for p in Partition::all_up_to(5) {
            assert_eq!(apply_p_row(1, &s(p.clone())), apply_p(&s(p.clone())));
            assert_eq!(apply_p_col(1, &s(p.clone())), apply_p(&s(p.clone())));
            assert_eq!(apply_q_col(1, &s(p.clone())), apply_q(&s(p.clone())));
            assert_eq!(apply_q_row(0, &s(p.clone())), s(p));
        }
    }

    /// Brute force: every partition of the right size containing `λ` whose
    /// skew cells share no column.
    fn horizontal_oracle(lam: &Partition, m: usize) -> Vec<Partition> {
        let mut v: Vec<Partition> = Partition::all_of_size(lam.size() + m)
            .into_iter()
            .filter(|mu| {
                let cells = mu.skew_cells(lam);
                lam.is_subset_of(mu) && {
                    let mut cols: Vec<usize> = cells.iter().map(|c| c.col).collect();
                    cols.sort_unstable();
                    cols.windows(2).all(|w| w[0] != w[1])
                }
            })
            .collect();
        v.sort_by(|a, b| b.cmp(a));
        v
    }

    #[test]
    fn strips_match_brute_force() {
        for lam in Partition::all_up_to(6) {
            for m in 0..=3 {
                assert_eq!(add_horizontal_strips(&lam, m), horizontal_oracle(&lam, m));
                let removed: Vec<Partition> = Partition::all_of_size(lam.size().saturating_sub(m))
                    .into_iter()
                    .filter(|nu| m <= lam.size() && horizontal_oracle(nu, m).contains(&lam))
                    .collect();
                assert_eq!(remove_horizontal_strips(&lam, m), removed);
            }
        }
    }
}
