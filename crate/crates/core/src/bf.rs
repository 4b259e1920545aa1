//! Coefficients of the fermionic complex `Q̃ ⊗ P(𝔵(λ))` and their agreement
//! with the representation-theoretic coefficients `a`.
//!
//! Charge-zero sequences are labelled by partitions through
//! [`to_sequence`]. With `k` columns tracked, the degree-zero part has a
//! slot for every index `i ∈ [−λ̄_1+1, k]`, the degree-one part has `k`
//! copies of `P(𝔵(λ))`, and the differential from slot `i` to copy `j`
//! is `1/(j−i)!`.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fock::s_n_op;
use crate::lincomb::FockVector;
use crate::matrix::RationalMatrix;
use crate::partition::Partition;
use crate::quiver::q_step_label;
use crate::rational::{factorial, format_rational, int, inv_factorial, serde_rational, sign, Rational};
use crate::sequence::{to_sequence, ChargedSequence};
use crate::vershik_okounkov::{a_coeff, a_oracle, Branch, Path};

/// `Σ_{0≤j≤t−1} (−1)^{s+t−1−j} / ((s+t−1−j)! j!)`.
pub fn f_sum(s: i64, t: i64) -> Result<Rational> {
    if t < 1 {
        return Err(Error::InvalidArgument(format!("t = {t} must be positive")));
    }
    Ok((0..t).map(|j| sign(s + t - 1 - j) * inv_factorial(s + t - 1 - j) * inv_factorial(j)).sum())
}

pub fn f_closed(s: i64, t: i64) -> Result<Rational> {
    if t < 1 {
        return Err(Error::InvalidArgument(format!("t = {t} must be positive")));
    }
    if s <= 0 {
        return Ok(if s + t == 1 { Rational::one() } else { Rational::zero() });
    }
    Ok(sign(s) * inv_factorial(s - 1) * inv_factorial(t - 1) / int(s + t - 1))
}

/// `det((a_i + b_j)^{-1}) = ∏(a_i+b_j)^{-1} ∏_{i<i'}(a_i−a_{i'}) ∏_{j<j'}(b_j−b_{j'})`.
pub fn cauchy_det(a: &[Rational], b: &[Rational]) -> Result<Rational> {
    if a.len() != b.len() {
        return Err(Error::Dimension(format!("{} row parameters, {} column parameters", a.len(), b.len())));
    }
    let mut det = Rational::one();
    for x in a {
        for y in b {
            let s = x + y;
            if s.is_zero() {
                return Err(Error::Singular(format!("pole at a = {}, b = {}", format_rational(x), format_rational(y))));
            }
            det /= s;
        }
    }
    for v in [a, b] {
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                det *= &v[i] - &v[j];
            }
        }
    }
    Ok(det)
}

/// `λ̄` padded with zeros to `k` entries, 1-based through `col`.
fn padded_dual(lam: &Partition, k: usize) -> Result<Vec<i64>> {
    if k < lam.width() {
        return Err(Error::Dimension(format!("k = {k} is smaller than the {} columns of {lam}", lam.width())));
    }
    Ok((1..=k).map(|j| lam.col(j) as i64).collect())
}

/// `c_{ij} = 1/(i − (−λ̄_j + j))!`, zero below the diagonal band.
pub fn matrix_c(lam: &Partition, k: usize) -> Result<RationalMatrix> {
    let d = padded_dual(lam, k)?;
    Ok(RationalMatrix::from_fn(k, k, |i, j| inv_factorial(i as i64 + 1 - (j as i64 + 1 - d[j]))))
}

pub fn matrix_b(k: usize) -> RationalMatrix {
    RationalMatrix::from_fn(k, k, |i, j| if i >= j { sign((i - j) as i64) * inv_factorial((i - j) as i64) } else { Rational::zero() })
}

/// Number of `j` with `λ̄_j ≥ j`.
fn durfee(d: &[i64]) -> usize {
    d.iter().enumerate().take_while(|(j, &v)| v > *j as i64).count()
}

/// Closed form of `B·C`.
pub fn matrix_a_closed(lam: &Partition, k: usize) -> Result<RationalMatrix> {
    let d = padded_dual(lam, k)?;
    let p = durfee(&d);
    Ok(RationalMatrix::from_fn(k, k, |i, j| {
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        let e = d[j as usize - 1] - j;
        if (j as usize) <= p {
            sign(i + 1) * inv_factorial(e) * inv_factorial(i - 1) / int(e + i)
        } else if i == -e {
            Rational::one()
        } else {
            Rational::zero()
        }
    }))
}

/// `|A|` from the unit columns and the Cauchy determinant of the rest.
pub fn det_a_closed(lam: &Partition, k: usize) -> Result<Rational> {
    let d = padded_dual(lam, k)?;
    let p = durfee(&d);
    let unit_rows: Vec<i64> = (p + 1..=k).map(|j| j as i64 - d[j - 1]).collect();
    let rows: Vec<i64> = (1..=k as i64).filter(|i| !unit_rows.contains(i)).collect();
    let order: Vec<i64> = rows.iter().chain(&unit_rows).copied().collect();
    let inversions = (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).filter(|&(a, b)| order[a] > order[b]).count();
    let mut det = sign(inversions as i64);
    for &i in &rows {
        det *= sign(i + 1) * inv_factorial(i - 1);
    }
    let shifts: Vec<i64> = (1..=p).map(|j| d[j - 1] - j as i64).collect();
    for &e in &shifts {
        det *= inv_factorial(e);
    }
    let a: Vec<Rational> = rows.iter().map(|&i| int(i)).collect();
    let b: Vec<Rational> = shifts.iter().map(|&e| int(e)).collect();
    Ok(det * cauchy_det(&a, &b)?)
}

/// What `T(2i)T(2i−1) ⊗ P(𝔵(λ))` is at window index `i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Slot {
    /// `i = −λ̄_j + j`: a copy of `P(𝔵(λ))`.
    Copy { column: usize },
    /// `i = −λ̄_l + l + 1` with `λ̄_l > λ̄_{l+1}`: `P(𝔵(λˡ))`.
    Residual { column: usize, label: Partition },
    Zero,
}

#[derive(Clone, Debug)]
pub struct WtqComplex {
    pub lam: Partition,
    pub k: usize,
    /// `(i, slot)` for `i` from `−λ̄_1+1` to `k`.
    pub window: Vec<(i64, Slot)>,
    pub c: RationalMatrix,
}

/// The complex with `k = λ_1` columns.
pub fn wtq_tensor(lam: &Partition) -> WtqComplex {
    wtq_tensor_padded(lam, lam.width()).expect("k equals the width")
}

pub fn wtq_tensor_padded(lam: &Partition, k: usize) -> Result<WtqComplex> {
    let d = padded_dual(lam, k)?;
    let first = 1 - d.first().copied().unwrap_or(0);
    let window = (first..=k as i64).map(|i| (i, classify(lam, &d, i))).collect();
    Ok(WtqComplex { lam: lam.clone(), k, window, c: matrix_c(lam, k)? })
}

fn classify(lam: &Partition, d: &[i64], i: i64) -> Slot {
    let k = d.len();
    for j in 1..=k {
        if i == j as i64 - d[j - 1] {
            return Slot::Copy { column: j };
        }
        let next = d.get(j).copied().unwrap_or(0);
        if d[j - 1] > next && i == j as i64 + 1 - d[j - 1] {
            let cell = crate::partition::Cell::new(d[j - 1] as usize, j);
            let label = lam.remove_cell(cell).expect("bottom cell of a column with a step");
            return Slot::Residual { column: j, label };
        }
    }
    Slot::Zero
}

impl WtqComplex {
    pub fn slot(&self, i: i64) -> &Slot {
        self.window.iter().find(|(j, _)| *j == i).map_or(&Slot::Zero, |(_, s)| s)
    }

    /// Window index of the copy in column `j`.
    pub fn copy_index(&self, j: usize) -> i64 {
        j as i64 - self.lam.col(j) as i64
    }

    pub fn degree0(&self) -> Vec<(i64, ChargedSequence)> {
        self.window
            .iter()
            .filter_map(|(i, s)| match s {
                Slot::Copy { .. } => Some((*i, to_sequence(&self.lam))),
                Slot::Residual { label, .. } => Some((*i, to_sequence(label))),
                Slot::Zero => None,
            })
            .collect()
    }

    pub fn degree1(&self) -> Vec<ChargedSequence> {
        vec![to_sequence(&self.lam); self.k]
    }

    /// Rows are the degree-one copies `j = 1..k`, columns the nonzero slots.
    pub fn differential(&self) -> RationalMatrix {
        let slots = self.degree0();
        RationalMatrix::from_fn(self.k, slots.len(), |j, c| inv_factorial(j as i64 + 1 - slots[c].0))
    }

    /// Labels left after cancelling the `2k` copies against each other.
    pub fn quotient_labels(&self) -> Vec<Partition> {
        self.window
            .iter()
            .filter_map(|(_, s)| match s {
                Slot::Residual { label, .. } => Some(label.clone()),
                _ => None,
            })
            .collect()
    }

    /// The copies cancel exactly when `C` is invertible.
    pub fn copies_cancel(&self) -> bool {
        self.c.det().map(|d| !d.is_zero()).unwrap_or(false)
    }
}

impl fmt::Display for WtqComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Q~ (x) P(x({})), k = {}", self.lam, self.k)?;
        writeln!(f, "degree 0:")?;
        for (i, s) in &self.window {
            match s {
                Slot::Copy { column } => writeln!(f, "  i={i}: P({}) copy j={column}", to_sequence(&self.lam))?,
                Slot::Residual { label, .. } => writeln!(f, "  i={i}: P({}) from {label}", to_sequence(label))?,
                Slot::Zero => writeln!(f, "  i={i}: 0")?,
            }
        }
        writeln!(f, "degree 1:")?;
        for j in 1..=self.k {
            writeln!(f, "  j={j}: P({})", to_sequence(&self.lam))?;
        }
        write!(f, "arrows:")?;
        for (i, _) in self.degree0() {
            for j in 1..=self.k as i64 {
                let c = inv_factorial(j - i);
                if !c.is_zero() {
                    write!(f, "\n  i={i} -> j={j}: {}", format_rational(&c))?;
                }
            }
        }
        Ok(())
    }
}

/// Solution of `C·g = f` with `f_i = −1/(i − (−λ̄_{j₁} + j₁ + 1))!`, where
/// `j₁` is the column of `λ∖λ'`; `k = λ_1`.
pub fn g_vector(lam: &Partition, lam1: &Partition) -> Result<Vec<Rational>> {
    g_vector_padded(lam, lam1, lam.width())
}

pub fn g_vector_padded(lam: &Partition, lam1: &Partition, k: usize) -> Result<Vec<Rational>> {
    let cell = lam.added_cell(lam1).ok_or_else(|| Error::InvalidEdge(format!("{lam1} -> {lam}")))?;
    let c = matrix_c(lam, k)?;
    let j1 = cell.col as i64;
    let start = j1 + 1 - lam.col(cell.col) as i64;
    let f: Vec<Rational> = (1..=k as i64).map(|i| -inv_factorial(i - start)).collect();
    c.solve(&f).map_err(|e| Error::Singular(format!("C for {lam}: {e}")))
}

/// `ã` as the composite `P(𝔵(λ')) → Q̃⊗P(𝔵(λ)) → Q̃⊗P(𝔵(μ)) → P(𝔵(μ'))`:
/// the section `g` puts `g_j` on the copy in column `j` and the identity on
/// the slot of `λ'`; the middle map is slotwise, and the projection keeps
/// the slot labelled `μ'`.
pub fn tilde_a(lam1: &Partition, lam: &Partition, mu: &Partition, branch: Branch) -> Result<Rational> {
    let path = Path::new(lam1, lam, mu)?;
    let target = match (branch, &path.nu) {
        (Branch::Lambda, _) => lam.clone(),
        (Branch::Nu, Some(nu)) => nu.clone(),
        (Branch::Nu, None) => return Err(Error::InvalidPath(format!("{lam1} -> {lam} -> {mu} has no second corner"))),
    };
    let k = mu.width();
    let small = wtq_tensor_padded(lam, k)?;
    let big = wtq_tensor_padded(mu, k)?;
    let g = g_vector_padded(lam, lam1, k)?;
    let mut total = Rational::zero();
    for (i, slot) in &big.window {
        let Slot::Residual { label, .. } = slot else { continue };
        if *label != target {
            continue;
        }
        let (coeff, source) = match small.slot(*i) {
            Slot::Copy { column } => (g[column - 1].clone(), lam),
            Slot::Residual { label, .. } if label == lam1 => (Rational::one(), lam1),
            _ => continue,
        };
        if source == label || source.ind_set().contains(label) {
            total += coeff;
        }
    }
    Ok(total)
}

/// `g_{j₀}` with `j₀` the column of `μ∖λ`.
pub fn tilde_a_component(lam1: &Partition, lam: &Partition, mu: &Partition) -> Result<Rational> {
    let path = Path::new(lam1, lam, mu)?;
    let g = g_vector_padded(lam, lam1, mu.width())?;
    Ok(g[path.b2.col - 1].clone())
}

#[derive(Clone, Debug, Serialize)]
pub struct BfHclCase {
    pub lam1: Partition,
    pub lam: Partition,
    pub branch: Branch,
    #[serde(with = "serde_rational")]
    pub a: Rational,
    #[serde(with = "serde_rational")]
    pub a_oracle: Rational,
    #[serde(with = "serde_rational")]
    pub a_tilde: Rational,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BfHclReport {
    pub mu: Partition,
    pub cases: Vec<BfHclCase>,
}

impl BfHclReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }
}

/// `ã = a = oracle` on every path into `μ` and every branch.
pub fn verify_bf_hcl(mu: &Partition) -> Result<BfHclReport> {
    let mut cases = Vec::new();
    for path in Path::all_into(mu) {
        for branch in path.branches() {
            let a = a_coeff(&path.lam1, &path.lam, mu, branch)?;
            let oracle = a_oracle(&path.lam1, &path.lam, mu, branch)?;
            let tilde = tilde_a(&path.lam1, &path.lam, mu, branch)?;
            let pass = a == oracle && a == tilde;
            cases.push(BfHclCase { lam1: path.lam1.clone(), lam: path.lam.clone(), branch, a, a_oracle: oracle, a_tilde: tilde, pass });
        }
    }
    Ok(BfHclReport { mu: mu.clone(), cases })
}

/// `∏_{j≤s}(j+t−μ̄_j) · ∏_{i≤t}(μ_i+t+1−i) = (s+t)!` with `t` rows, `s` columns.
pub fn subclaim_identity(mu: &Partition) -> bool {
    let (t, s) = (mu.len() as i64, mu.width() as i64);
    let mut lhs = num_bigint::BigInt::one();
    for j in 1..=s {
        lhs *= j + t - mu.col(j as usize) as i64;
    }
    for i in 1..=t {
        lhs *= mu.row(i as usize) as i64 + t + 1 - i;
    }
    lhs == factorial((s + t) as u32)
}

/// `S_n 𝔵(λ) = Σ_t (−1)^{t+n} 𝔵(λᵗ)` with `λᵗ` the labels of the
/// resolution of `Q(λ)`.
pub fn theorem_sn_bridge(lam: &Partition, n: usize) -> Result<bool> {
    let lhs = s_n_op(n as i64, &FockVector::basis(to_sequence(lam)));
    let mut rhs = FockVector::zero();
    for t in 0..=n {
        rhs.add_term(to_sequence(&q_step_label(lam, n, t)?), sign((t + n) as i64));
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::rational::frac;

    #[test]
    fn f_examples() {
        assert_eq!(f_sum(1, 1).unwrap(), int(-1));
        assert_eq!(f_sum(0, 1).unwrap(), int(1));
        assert_eq!(f_sum(-2, 3).unwrap(), int(1));
        assert_eq!(f_closed(1, 1).unwrap(), int(-1));
        assert_eq!(f_closed(0, 1).unwrap(), int(1));
        assert_eq!(f_closed(2, 3).unwrap(), frac(1, 8));
        assert!(f_sum(1, 0).is_err());
        assert!(f_closed(1, 0).is_err());
    }

    #[test]
    fn cauchy_examples() {
        assert_eq!(cauchy_det(&[int(0)], &[int(1)]).unwrap(), int(1));
        assert_eq!(cauchy_det(&[int(1), int(2)], &[int(0), int(1)]).unwrap(), frac(1, 12));
        assert!(cauchy_det(&[int(1), int(-1)], &[int(1), int(-1)]).is_err());
        assert!(cauchy_det(&[int(1)], &[]).is_err());
    }

    #[test]
    fn matrix_examples() {
        let c = matrix_c(&part![2], 2).unwrap();
        assert_eq!(c.to_rows(), vec![vec![int(1), int(1)], vec![frac(1, 2), int(1)]]);
        assert_eq!(c.det().unwrap(), frac(1, 2));
        assert_eq!(matrix_c(&part![], 1).unwrap(), RationalMatrix::identity(1));
        assert!(matrix_c(&part![3], 2).is_err());
        assert_eq!(matrix_b(1), RationalMatrix::identity(1));
        assert_eq!(matrix_b(2).to_rows(), vec![vec![int(1), int(0)], vec![int(-1), int(1)]]);
        let a = matrix_a_closed(&part![2], 2).unwrap();
        assert_eq!(a.to_rows(), vec![vec![int(1), int(1)], vec![frac(-1, 2), int(0)]]);
        assert_eq!(&matrix_b(2) * &c, a);
        assert_eq!(matrix_a_closed(&part![], 1).unwrap(), RationalMatrix::identity(1));
        assert_eq!(det_a_closed(&part![2], 2).unwrap(), frac(1, 2));
        assert_eq!(det_a_closed(&part![], 1).unwrap(), int(1));
        assert_eq!(det_a_closed(&part![1], 1).unwrap(), matrix_c(&part![1], 1).unwrap().det().unwrap());
    }

    #[test]
    fn complex_example() {
        let w = wtq_tensor(&part![2]);
        let labels: Vec<String> = w.degree0().iter().map(|(_, x)| x.to_string()).collect();
        assert_eq!(labels, vec![to_sequence(&part![2]).to_string(), to_sequence(&part![2]).to_string(), to_sequence(&part![1]).to_string()]);
        assert_eq!(to_sequence(&part![1]).head(), [0]);
        assert_eq!(w.degree1().len(), 2);
        let mut arrows: Vec<Rational> = w.differential().to_rows().into_iter().flatten().filter(|x| !x.is_zero()).collect();
        arrows.sort();
        assert_eq!(arrows, vec![frac(1, 2), int(1), int(1), int(1), int(1)]);
        assert_eq!(w.quotient_labels(), vec![part![1]]);
        assert!(w.copies_cancel());
        let empty = wtq_tensor(&part![]);
        assert!(empty.window.is_empty() && empty.degree1().is_empty());
    }

    #[test]
    fn golden_coefficients() {
        assert_eq!(g_vector(&part![2], &part![1]).unwrap(), vec![int(2), int(-2)]);
        let (l1, l, m) = (part![1], part![2], part![2, 1]);
        assert_eq!(tilde_a(&l1, &l, &m, Branch::Lambda).unwrap(), int(2));
        assert_eq!(tilde_a(&l1, &l, &m, Branch::Nu).unwrap(), int(1));
        assert_eq!(tilde_a_component(&l1, &l, &m).unwrap(), int(2));
        assert_eq!(tilde_a(&part![], &part![1], &part![2], Branch::Lambda).unwrap(), frac(-1, 2));
        assert_eq!(tilde_a(&part![], &part![1], &part![1, 1], Branch::Lambda).unwrap(), int(-1));
        assert!(tilde_a(&part![], &part![1], &part![2], Branch::Nu).is_err());
    }

    #[test]
    fn report_examples() {
        let r = verify_bf_hcl(&part![2, 1]).unwrap();
        assert!(r.passed());
        assert_eq!(r.cases.len(), 4);
        assert!(verify_bf_hcl(&part![1]).unwrap().cases.is_empty());
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["mu"], serde_json::json!([2, 1]));
        assert!(json["cases"].as_array().unwrap().iter().any(|c| c["a_tilde"] == "2" && c["branch"] == "lambda"));
    }

    #[test]
    fn subclaim_examples() {
        assert!(subclaim_identity(&part![1]));
        assert!(subclaim_identity(&part![2, 1]));
        assert!(subclaim_identity(&part![]));
    }

    #[test]
    fn bridge_examples() {
        assert!(theorem_sn_bridge(&part![1], 2).unwrap());
        assert!(theorem_sn_bridge(&part![], 1).unwrap());
    }
}
