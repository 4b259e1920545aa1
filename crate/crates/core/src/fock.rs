//! The fermionic Fock space on charged sequences and the Clifford action.
//!
//! `ψ_j` wedges `2j` into a sequence, `ψ*_j` contracts it out, and the
//! Clifford generators are `t_{2j} = ψ_j`, `t_{2j-1} = ψ*_j + ψ*_{j-1}`.

use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::error::{Error, Result};
use crate::lincomb::FockVector;
use crate::rational::{sign, Rational};
use crate::sequence::ChargedSequence;

/// `ψ_j` on a basis sequence: inserts `2j` after the `n` smaller entries
/// with sign `(-1)^n`; zero if `2j` is already present.
pub fn psi_basis(j: i64, x: &ChargedSequence) -> Option<(i64, ChargedSequence)> {
    let v = 2 * j;
    if x.contains(v) {
        return None;
    }
    let n = x.count_below(v);
    let mut head = x.head().to_vec();
    head.insert(n, v);
    let s = if n.is_multiple_of(2) { 1 } else { -1 };
    Some((s, ChargedSequence::canonical(x.charge() - 1, head)))
}

/// `ψ*_j` on a basis sequence: deletes `2j = x_n` with sign `(-1)^(n-1)`.
pub fn psi_star_basis(j: i64, x: &ChargedSequence) -> Option<(i64, ChargedSequence)> {
    let n = x.position(2 * j)?;
    let mut head = x.prefix(n.max(x.head().len()));
    head.remove(n - 1);
    let s = if n % 2 == 1 { 1 } else { -1 };
    Some((s, ChargedSequence::canonical(x.charge() + 1, head)))
}

fn lift(r: Option<(i64, ChargedSequence)>) -> Option<(ChargedSequence, Rational)> {
    r.map(|(s, x)| (x, Rational::from_integer(s.into())))
}

pub fn apply_psi(j: i64, v: &FockVector) -> FockVector {
    v.flat_map(|x| lift(psi_basis(j, x)))
}

pub fn apply_psi_star(j: i64, v: &FockVector) -> FockVector {
    v.flat_map(|x| lift(psi_star_basis(j, x)))
}

/// `t_i` on a basis sequence, as at most two signed terms.
pub fn t_basis(i: i64, x: &ChargedSequence) -> Vec<(ChargedSequence, Rational)> {
    if i.rem_euclid(2) == 0 {
        lift(psi_basis(i / 2, x)).into_iter().collect()
    } else {
        let j = (i + 1) / 2;
        lift(psi_star_basis(j, x)).into_iter().chain(lift(psi_star_basis(j - 1, x))).collect()
    }
}

pub fn apply_t(i: i64, v: &FockVector) -> FockVector {
    v.flat_map(|x| t_basis(i, x))
}

/// A monomial `t_{i_1} t_{i_2} ⋯ t_{i_m}` in the Clifford generators.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CliffordWord {
    pub factors: Vec<i64>,
}

impl CliffordWord {
    pub fn new(factors: Vec<i64>) -> Self {
        Self { factors }
    }
}

impl fmt::Display for CliffordWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let s: Vec<String> = self.factors.iter().map(|i| format!("t{i}")).collect();
        write!(f, "{}", s.join(" "))
    }
}

impl FromStr for CliffordWord {
    type Err = Error;
    /// Whitespace- or comma-separated `t<i>` tokens, e.g. `t1 t-2`.
    fn from_str(s: &str) -> Result<Self> {
        let factors = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.strip_prefix('t')
                    .and_then(|n| n.parse::<i64>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad Clifford generator {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { factors })
    }
}

/// Applies the rightmost factor first.
pub fn apply_word(w: &CliffordWord, v: &FockVector) -> FockVector {
    w.factors.iter().rev().fold(v.clone(), |acc, &i| apply_t(i, &acc))
}

/// `τ^steps`: every entry moves by `2·steps`, the charge by `steps`.
pub fn tau(v: &FockVector, steps: i64) -> FockVector {
    v.flat_map(|x| [(x.shift(steps), Rational::one())])
}

/// `S̄_n = τ⁻¹ ∘ Σ_{i ≤ n} (-1)^i t_{2i+1}`. Below `i = x_1/2 - 1` neither
/// contraction in `t_{2i+1}` can fire, so the sum is finite on each basis
/// sequence.
pub fn s_bar_n(n: i64, v: &FockVector) -> FockVector {
    let summed = v.apply(|x| {
        let lo = x.entry(1) / 2 - 1;
        let mut out = FockVector::zero();
        for i in lo..=n {
            for (y, c) in t_basis(2 * i + 1, x) {
                out.add_term(y, c * sign(i));
            }
        }
        out
    });
    tau(&summed, -1)
}

/// `S_n = τ ∘ Σ_{i ≥ -n} (-1)^i t_{2i}`. Insertions at or past the first
/// tail entry vanish, which bounds the sum.
pub fn s_n_op(n: i64, v: &FockVector) -> FockVector {
    let summed = v.apply(|x| {
        let hi = x.tail_start() / 2 - 1;
        let mut out = FockVector::zero();
        for i in -n..=hi {
            for (y, c) in t_basis(2 * i, x) {
                out.add_term(y, c * sign(i));
            }
        }
        out
    });
    tau(&summed, 1)
}

fn two_step(outer: i64, inner: i64, v: &FockVector) -> FockVector {
    apply_t(outer, &apply_t(inner, v))
}

/// `Σ_{-N≤i≤0} t_{2i} t_{2i-1} − Σ_{0<i≤N} t_{2i-1} t_{2i}`.
pub fn g_q_trunc(n: i64, v: &FockVector) -> FockVector {
    let mut out = FockVector::zero();
    for i in -n..=0 {
        out = out + two_step(2 * i, 2 * i - 1, v);
    }
    for i in 1..=n {
        out = out - two_step(2 * i - 1, 2 * i, v);
    }
    out
}

/// `Σ_{-N≤i≤0} t_{2i} t_{2i+1} − Σ_{0<i≤N} t_{2i+1} t_{2i}`.
pub fn g_p_trunc(n: i64, v: &FockVector) -> FockVector {
    let mut out = FockVector::zero();
    for i in -n..=0 {
        out = out + two_step(2 * i, 2 * i + 1, v);
    }
    for i in 1..=n {
        out = out - two_step(2 * i + 1, 2 * i, v);
    }
    out
}

/// Smallest truncation from which `g_q_trunc` and `g_p_trunc` agree with
/// their limits on `𝔵(λ)`: the sums must reach every entry below zero and
/// every hole above it, and one step past the addable boxes.
pub fn stable_truncation(lam: &crate::partition::Partition) -> i64 {
    lam.width().max(lam.len()) as i64 + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::partition::Partition;
    use crate::sequence::{to_sequence, to_sequence_charged};
    use proptest::prelude::*;

    fn seq(k: i64, head: &[i64]) -> ChargedSequence {
        ChargedSequence::new(k, head.to_vec()).unwrap()
    }

    fn b(x: ChargedSequence) -> FockVector {
        FockVector::basis(x)
    }

    fn x(p: &Partition) -> FockVector {
        b(to_sequence(p))
    }

    #[test]
    fn psi_examples() {
        let one = Rational::one();
        assert_eq!(apply_psi(0, &b(seq(1, &[]))), FockVector::term(seq(0, &[0]), one.clone()));
        assert!(apply_psi(1, &b(seq(0, &[]))).is_zero());
        assert!(apply_psi(2, &b(seq(0, &[]))).is_zero());
        // (2,6,8,...) has charge 1 and head (2)
        let v = b(seq(1, &[2]));
        assert_eq!(apply_psi(2, &v), FockVector::term(seq(0, &[]), -one.clone()));
    }

    #[test]
    fn psi_star_examples() {
        let one = Rational::one();
        let vac = b(seq(0, &[]));
        assert_eq!(apply_psi_star(1, &vac), FockVector::term(seq(1, &[]), one.clone()));
        assert!(apply_psi_star(0, &vac).is_zero());
        assert_eq!(apply_psi_star(2, &vac), FockVector::term(seq(1, &[2]), -one));
        assert_eq!(seq(1, &[2]).to_string(), "(2,6,8,...)");
    }

    #[test]
    fn t_examples() {
        let vac0 = b(seq(0, &[]));
        assert_eq!(apply_t(2, &b(seq(1, &[]))), vac0);
        assert_eq!(apply_t(1, &vac0), b(seq(1, &[])));
        assert_eq!(apply_t(0, &vac0), b(seq(-1, &[])));
        assert_eq!(seq(-1, &[]).to_string(), "(0,2,...)");
    }

    #[test]
    fn words() {
        let vac = b(seq(0, &[]));
        assert_eq!(apply_word(&CliffordWord::default(), &vac), vac);
        let sum = apply_word(&"t1 t2".parse().unwrap(), &vac) + apply_word(&"t2 t1".parse().unwrap(), &vac);
        assert_eq!(sum, vac);
        for p in Partition::all_up_to(4) {
            assert!(apply_word(&CliffordWord::new(vec![3, 3]), &x(&p)).is_zero());
        }
        assert_eq!(CliffordWord::new(vec![1, -2]).to_string(), "t1 t-2");
        assert!("x1".parse::<CliffordWord>().is_err());
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&b(seq(0, &[])), 1), b(seq(1, &[])));
        assert_eq!(tau(&x(&part![2]), 1), b(seq(1, &[2, 4])));
        let v = x(&part![3, 1]) + x(&part![2]).scale(&Rational::new(3.into(), 2.into()));
        assert_eq!(tau(&tau(&v, 1), -1), v);
    }

    #[test]
    fn partial_sum_examples() {
        assert_eq!(s_bar_n(1, &x(&part![])), x(&part![1]));
        assert_eq!(s_bar_n(2, &x(&part![1])), x(&part![2, 1].dual()));
        assert!(s_bar_n(3, &FockVector::zero()).is_zero());
        assert_eq!(s_n_op(0, &x(&part![])), x(&part![]));
        assert_eq!(s_n_op(2, &x(&part![1])), x(&part![2, 1]) - x(&part![2]) + x(&part![]));
        assert!(s_n_op(2, &FockVector::zero()).is_zero());
    }

    #[test]
    fn g_examples() {
        assert_eq!(g_q_trunc(3, &x(&part![2, 1])), x(&part![2]) + x(&part![1, 1]));
        for n in 1..5 {
            assert!(g_q_trunc(n, &x(&part![])).is_zero());
            assert!(g_p_trunc(n, &FockVector::zero()).is_zero());
        }
        assert_eq!(g_q_trunc(2, &x(&part![1])), x(&part![]));
        assert_eq!(g_p_trunc(2, &x(&part![])), x(&part![1]));
        assert_eq!(g_p_trunc(3, &x(&part![1])), x(&part![2]) + x(&part![1, 1]));
    }

    fn basis_vectors(max_energy: usize, charges: std::ops::RangeInclusive<i64>) -> Vec<ChargedSequence> {
        let mut out = Vec::new();
        for k in charges {
            for p in Partition::all_up_to(max_energy) {
                out.push(to_sequence_charged(&p, k));
            }
        }
        out
    }

    #[test]
    fn psi_psi_star_is_an_occupation_projector() {
        for xs in basis_vectors(6, -1..=1) {
            let v = b(xs.clone());
            for j in -6..=6 {
                let p = apply_psi(j, &apply_psi_star(j, &v));
                let expected = if xs.contains(2 * j) { v.clone() } else { FockVector::zero() };
                assert_eq!(p, expected);
                assert_eq!(apply_psi(j, &apply_psi_star(j, &p)), p);
            }
        }
    }

    proptest! {
        #[test]
        fn psi_relations(k in -2i64..=2, n in 0usize..=6, idx in 0usize..11, i in -6i64..=6, j in -6i64..=6) {
            let all = Partition::all_of_size(n);
            let p = &all[idx % all.len()];
            let v = b(to_sequence_charged(p, k));
            // ψ_i ψ*_j + ψ*_j ψ_i = δ_ij
            let anti = apply_psi(i, &apply_psi_star(j, &v)) + apply_psi_star(j, &apply_psi(i, &v));
            prop_assert_eq!(anti, if i == j { v.clone() } else { FockVector::zero() });
            let pp = apply_psi(i, &apply_psi(j, &v)) + apply_psi(j, &apply_psi(i, &v));
            prop_assert!(pp.is_zero());
        }
    }
}
