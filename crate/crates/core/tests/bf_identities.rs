use bfcat::bf::{cauchy_det, det_a_closed, f_closed, f_sum, matrix_c, subclaim_identity, wtq_tensor, wtq_tensor_padded};
use bfcat::rational::int;
use bfcat::{Partition, Rational};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn leibniz(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = Rational::zero();
    loop {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        let term = (0..n).fold(Rational::one(), |acc, r| acc * &m[r][perm[r]]);
        total += if inversions % 2 == 0 { term } else { -term };
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else { break };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    total
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

#[test]
fn det_c_matches_closed_form_and_leibniz() {
    for lam in Partition::all_up_to(8) {
        for k in lam.width().max(1)..=lam.width() + 1 {
            let c = matrix_c(&lam, k).unwrap();
            let det = leibniz(&c.to_rows());
            assert_eq!(c.det().unwrap(), det, "{lam} k={k}");
            assert!(!det.is_zero(), "{lam} k={k}");
            assert_eq!(det_a_closed(&lam, k).unwrap(), det, "{lam} k={k}");
        }
    }
}

#[test]
fn residual_slots_are_removable_cells() {
    for lam in Partition::all_up_to(10).into_iter().filter(|l| !l.is_empty()) {
        let mut got = wtq_tensor(&lam).quotient_labels();
        let mut want = lam.res_set();
        got.sort();
        want.sort();
        assert_eq!(got, want, "{lam}");
        assert!(wtq_tensor(&lam).copies_cancel(), "{lam}");
    }
}

#[test]
fn padding_keeps_labels() {
    for lam in Partition::all_up_to(6).into_iter().filter(|l| !l.is_empty()) {
        let base = wtq_tensor(&lam).quotient_labels();
        assert_eq!(wtq_tensor_padded(&lam, lam.width() + 2).unwrap().quotient_labels(), base, "{lam}");
    }
    assert!(wtq_tensor_padded(&Partition::new(vec![3]).unwrap(), 2).is_err());
}

#[test]
fn factorial_identity_by_hand() {
    // t rows, s columns: hook-type products collapse to (s+t)!.
    for mu in Partition::all_up_to(12) {
        let (t, s) = (mu.len() as u64, mu.width() as u64);
        let dual = mu.dual();
        let lhs: u64 = (1..=s).map(|j| j + t - dual.row(j as usize) as u64).product::<u64>()
            * (1..=t).map(|i| mu.row(i as usize) as u64 + t + 1 - i).product::<u64>();
        assert_eq!(lhs, factorial(s + t), "{mu}");
        assert!(subclaim_identity(&mu), "{mu}");
    }
}

proptest! {
    #[test]
    fn f_sum_equals_closed_form(s in -8i64..=12, t in 1i64..=10) {
        prop_assert_eq!(f_sum(s, t).unwrap(), f_closed(s, t).unwrap());
    }

    #[test]
    fn cauchy_matches_leibniz(
        pairs in prop::collection::vec(((-40i64..=40, 1i64..=9), (-40i64..=40, 1i64..=9)), 1..=5)
    ) {
        let a: Vec<Rational> = pairs.iter().map(|((n, d), _)| Rational::new((*n).into(), (*d).into())).collect();
        let b: Vec<Rational> = pairs.iter().map(|(_, (n, d))| Rational::new((*n).into(), (*d).into())).collect();
        prop_assume!(a.iter().all(|x| b.iter().all(|y| !(x + y).is_zero())));
        let m: Vec<Vec<Rational>> = a.iter().map(|x| b.iter().map(|y| (x + y).recip()).collect()).collect();
        prop_assert_eq!(cauchy_det(&a, &b).unwrap(), leibniz(&m));
    }
}

#[test]
fn cauchy_rejects_singular_entries() {
    assert!(cauchy_det(&[int(1)], &[int(-1)]).is_err());
}
