use bfcat::rational::{frac, int};
use bfcat::vershik_okounkov::{a_coeff, a_coeff_expanded, a_oracle, basis, h_coeff, rep_action, Path};
use bfcat::{Partition, Rational, RationalMatrix};
use num_traits::{One, Zero};

fn hook_dim(mu: &Partition) -> u64 {
    let dual = mu.dual();
    let n = mu.size() as u64;
    let hooks: u64 = mu
        .cells()
        .iter()
        .map(|c| (mu.row(c.row) - c.col + dual.row(c.col) - c.row + 1) as u64)
        .product();
    (1..=n).product::<u64>() / hooks
}

fn trace(m: &RationalMatrix) -> Rational {
    (0..m.rows()).fold(Rational::zero(), |acc, i| acc + &m.row(i)[i])
}

#[test]
fn dimensions_match_hook_length() {
    for mu in Partition::all_up_to(9) {
        assert_eq!(basis(&mu).dim() as u64, hook_dim(&mu), "{mu}");
    }
}

// Character of a transposition: f^mu * (sum of contents) / C(n,2).
#[test]
fn transposition_traces_match_character() {
    for mu in Partition::all_up_to(8).into_iter().filter(|m| m.size() >= 2) {
        let n = mu.size() as i64;
        let contents: i64 = mu.cells().iter().map(|c| c.content()).sum();
        let expected = int(hook_dim(&mu) as i64) * int(contents) / int(n * (n - 1) / 2);
        for i in 1..n as usize {
            assert_eq!(trace(&rep_action(i, &mu).unwrap().to_dense()), expected, "s_{i} on {mu}");
        }
    }
}

#[test]
fn coxeter_relations() {
    for mu in Partition::all_up_to(7).into_iter().filter(|m| m.size() >= 2) {
        let n = mu.size();
        let s: Vec<RationalMatrix> = (1..n).map(|i| rep_action(i, &mu).unwrap().to_dense()).collect();
        let id = RationalMatrix::identity(s[0].rows());
        for i in 0..s.len() {
            assert_eq!(s[i].checked_mul(&s[i]).unwrap(), id, "s_{} squared on {mu}", i + 1);
            if i + 1 < s.len() {
                let l = s[i].checked_mul(&s[i + 1]).unwrap().checked_mul(&s[i]).unwrap();
                let r = s[i + 1].checked_mul(&s[i]).unwrap().checked_mul(&s[i + 1]).unwrap();
                assert_eq!(l, r, "braid {} on {mu}", i + 1);
            }
            for j in i + 2..s.len() {
                assert_eq!(s[i].checked_mul(&s[j]).unwrap(), s[j].checked_mul(&s[i]).unwrap());
            }
        }
    }
}

#[test]
fn coefficients_agree_with_decomposition() {
    for mu in Partition::all_up_to(7) {
        for path in Path::all_into(&mu) {
            for b in path.branches() {
                let a = a_coeff(&path.lam1, &path.lam, &mu, b).unwrap();
                assert_eq!(a, a_oracle(&path.lam1, &path.lam, &mu, b).unwrap(), "{} {} {mu} {b}", path.lam1, path.lam);
            }
            if let Some(e) = a_coeff_expanded(&path.lam1, &path.lam, &mu).unwrap() {
                assert_eq!(e, a_coeff(&path.lam1, &path.lam, &mu, bfcat::vershik_okounkov::Branch::Lambda).unwrap());
            }
        }
    }
}

#[test]
fn known_h_values() {
    let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
    assert_eq!(h_coeff(&p(&[1]), &p(&[2])).unwrap(), frac(-1, 2));
    assert_eq!(h_coeff(&p(&[2]), &p(&[2, 1])).unwrap(), int(2));
    assert_eq!(h_coeff(&Partition::empty(), &p(&[1])).unwrap(), Rational::one());
}
