//! The quiver algebra on Young's lattice with basis `(λ||μ)` for interlacing
//! pairs, its truncations, projective modules and the projective resolutions
//! used for the Serre-type twists.
//!
//! Right modules throughout: `P(μ)` has basis `(η||μ)` and a map
//! `P(a) → P(b)` is right multiplication by a multiple of `(a||b)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::One;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lincomb::{Basis, LinearCombination};
use crate::matrix::RationalMatrix;
use crate::partition::Partition;
use crate::rational::{format_rational, int, Rational};

/// `e_λ F e_μ ≠ 0`, i.e. `μ_i ≥ λ_i ≥ μ_{i+1}` for all `i`.
pub fn exists_hom(lam: &Partition, mu: &Partition) -> bool {
    lam.interlaces(mu)
}

/// A basis element `(source||target)` of the algebra.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ArrowElement {
    source: Partition,
    target: Partition,
}

impl ArrowElement {
    pub fn new(source: Partition, target: Partition) -> Result<Self> {
        if !exists_hom(&source, &target) {
            return Err(Error::InvalidEdge(format!("({source}||{target}) does not interlace")));
        }
        Ok(Self { source, target })
    }

    /// The idempotent `(λ)`.
    pub fn idempotent(lam: Partition) -> Self {
        Self { source: lam.clone(), target: lam }
    }

    pub fn source(&self) -> &Partition {
        &self.source
    }

    pub fn target(&self) -> &Partition {
        &self.target
    }

    /// `|target| − |source|`.
    pub fn degree(&self) -> usize {
        self.target.size() - self.source.size()
    }
}

impl fmt::Display for ArrowElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}||{})", self.source, self.target)
    }
}

impl Serialize for ArrowElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ArrowElement", 2)?;
        st.serialize_field("source", &self.source)?;
        st.serialize_field("target", &self.target)?;
        st.end()
    }
}

impl Basis for ArrowElement {
    const FIELD: &'static str = "arrow";
}

pub type FElement = LinearCombination<ArrowElement>;

pub fn multiply(a: &ArrowElement, b: &ArrowElement) -> FElement {
    if a.target != b.source || !exists_hom(&a.source, &b.target) {
        return FElement::zero();
    }
    FElement::basis(ArrowElement { source: a.source.clone(), target: b.target.clone() })
}

/// Bilinear extension of [`multiply`].
pub fn multiply_elements(x: &FElement, y: &FElement) -> FElement {
    let mut out = FElement::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_scaled(&multiply(a, b), &(ca * cb));
        }
    }
    out
}

/// Which idempotents survive in a truncated algebra.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum Truncation {
    #[default]
    None,
    /// At most `n` rows.
    Rows(usize),
    /// At most `n` columns.
    Columns(usize),
    /// At most `n` rows and `m` boxes.
    RowsAndSize(usize, usize),
}

impl Truncation {
    pub fn admits(&self, p: &Partition) -> bool {
        match *self {
            Truncation::None => true,
            Truncation::Rows(n) => p.len() <= n,
            Truncation::Columns(n) => p.width() <= n,
            Truncation::RowsAndSize(n, m) => p.len() <= n && p.size() <= m,
        }
    }

    /// Every admitted partition, when there are finitely many.
    pub fn partitions(&self) -> Result<Vec<Partition>> {
        match *self {
            Truncation::RowsAndSize(n, m) => Ok(Partition::all_with_rows(n, m)),
            _ => Err(Error::InvalidTruncation(format!("{self} admits infinitely many partitions"))),
        }
    }
}

impl fmt::Display for Truncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Truncation::None => write!(f, "F"),
            Truncation::Rows(n) => write!(f, "F_{n}"),
            Truncation::Columns(n) => write!(f, "Fbar_{n}"),
            Truncation::RowsAndSize(n, m) => write!(f, "F_{n}^{m}"),
        }
    }
}

/// All `η` with `λ_i ≥ η_i ≥ λ_{i+1}`, descending.
fn interlacing_below(lam: &Partition) -> Vec<Partition> {
    let mut out = vec![Vec::new()];
    for i in 1..=lam.len() {
        let (hi, lo) = (lam.row(i), lam.row(i + 1));
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                (lo..=hi).rev().map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out.into_iter().map(Partition::from_decreasing).collect()
}

/// Basis `{(η||λ)}` of `P(λ)`. Always finite since `η ⊆ λ`.
pub fn projective_basis(lam: &Partition, tr: Truncation) -> Result<Vec<ArrowElement>> {
    if !tr.admits(lam) {
        return Err(Error::InvalidTruncation(format!("{lam} is not in {tr}")));
    }
    Ok(interlacing_below(lam)
        .into_iter()
        .filter(|eta| tr.admits(eta))
        .map(|eta| ArrowElement { source: eta, target: lam.clone() })
        .collect())
}

/// Basis `{(η∪1ⁿ||λ∪1ⁿ) : (η||λ) ≠ 0}` of `Q(λ)` inside `F_n^m`.
pub fn q_module_basis(lam: &Partition, n: usize, m: usize) -> Result<Vec<ArrowElement>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let tr = Truncation::RowsAndSize(n, m);
    let top = lam.union_columns(n)?;
    if !tr.admits(&top) {
        return Err(Error::InvalidTruncation(format!("{top} is not in {tr}")));
    }
    interlacing_below(lam)
        .into_iter()
        .map(|eta| eta.union_columns(n).map(|e| ArrowElement { source: e, target: top.clone() }))
        .filter(|a| a.as_ref().map_or(true, |a| tr.admits(&a.source)))
        .collect()
}

/// A summand of a term in a resolution.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Label {
    Projective(Partition),
    /// `P(μ^∞)`, the direct limit of `P((k, μ_1, …, μ_{n−1}))`.
    Limit { mu: Partition, n: usize },
}

impl Label {
    /// Dimension of `e_η·P` for this summand.
    pub fn multiplicity(&self, eta: &Partition) -> usize {
        match self {
            Label::Projective(lam) => usize::from(exists_hom(eta, lam)),
            Label::Limit { mu, n } => {
                let head = Partition::from_decreasing(mu.parts().iter().take(n - 1).copied().collect());
                usize::from(eta.len() <= *n && head.interlaces(eta))
            }
        }
    }

    pub fn partition(&self) -> Option<&Partition> {
        match self {
            Label::Projective(p) => Some(p),
            Label::Limit { .. } => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Projective(p) => write!(f, "P({p})"),
            Label::Limit { mu, .. } => write!(f, "P({mu}^inf)"),
        }
    }
}

/// Component `coefficient·(labels[source]||next.labels[target])` of a boundary.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundaryEntry {
    pub source: usize,
    pub target: usize,
    pub coefficient: Rational,
}

impl Serialize for BoundaryEntry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("BoundaryEntry", 3)?;
        st.serialize_field("source", &self.source)?;
        st.serialize_field("target", &self.target)?;
        st.serialize_field("coefficient", &format_rational(&self.coefficient))?;
        st.end()
    }
}

/// One homological degree; `boundary` maps into degree `degree − 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Term {
    pub degree: usize,
    pub labels: Vec<Label>,
    pub boundary: Vec<BoundaryEntry>,
}

impl Serialize for Term {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Term", 3)?;
        st.serialize_field("degree", &self.degree)?;
        let labels: Vec<String> = self.labels.iter().map(Label::to_string).collect();
        st.serialize_field("labels", &labels)?;
        st.serialize_field("boundary", &self.boundary)?;
        st.end()
    }
}

/// A complex of projectives, `terms[d]` in homological degree `d`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(transparent)]
pub struct Resolution {
    pub terms: Vec<Term>,
}

impl Resolution {
    pub fn length(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    pub fn labels(&self, degree: usize) -> &[Label] {
        self.terms.get(degree).map_or(&[], |t| &t.labels)
    }

    /// `Σ_d (−1)^d dim e_η·C_d`.
    pub fn euler_multiplicity(&self, eta: &Partition) -> i64 {
        self.terms
            .iter()
            .map(|t| {
                let m: usize = t.labels.iter().map(|l| l.multiplicity(eta)).sum();
                if t.degree % 2 == 0 {
                    m as i64
                } else {
                    -(m as i64)
                }
            })
            .sum()
    }
}

impl fmt::Display for Resolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|t| {
                if t.labels.is_empty() {
                    "0".to_string()
                } else {
                    t.labels.iter().map(Label::to_string).collect::<Vec<_>>().join(" ⊕ ")
                }
            })
            .collect();
        write!(f, "{}", terms.join(" → "))
    }
}

fn require_rows(lam: &Partition, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    if lam.len() > n {
        return Err(Error::TooManyRows { partition: lam.to_string(), n });
    }
    Ok(())
}

/// `λᵗ = (λ_1+1, …, λ_{n−t}+1, λ_{n−t+2}, …, λ_n, 0)`, with `λ⁰ = λ ∪ 1ⁿ`.
pub fn q_step_label(lam: &Partition, n: usize, t: usize) -> Result<Partition> {
    require_rows(lam, n)?;
    if t > n {
        return Err(Error::InvalidArgument(format!("step {t} exceeds {n}")));
    }
    let parts = lam.padded(n).expect("checked row count");
    let mut out: Vec<usize> = parts[..n - t].iter().map(|p| p + 1).collect();
    if t > 0 {
        out.extend_from_slice(&parts[n - t + 1..]);
    }
    Ok(Partition::from_decreasing(out))
}

/// The length-`n` resolution of `Q(λ)` with boundaries `(λᵗ||λᵗ⁻¹)`.
pub fn resolution_q(lam: &Partition, n: usize) -> Result<Resolution> {
    let labels: Vec<Partition> = (0..=n).map(|t| q_step_label(lam, n, t)).collect::<Result<_>>()?;
    let terms = labels
        .iter()
        .enumerate()
        .map(|(t, l)| Term {
            degree: t,
            labels: vec![Label::Projective(l.clone())],
            boundary: if t == 0 {
                Vec::new()
            } else {
                vec![BoundaryEntry { source: 0, target: 0, coefficient: Rational::one() }]
            },
        })
        .collect();
    Ok(Resolution { terms })
}

/// Removes one box from each row in `rows` (1-based), if still a partition.
fn remove_from_rows(parts: &[usize], rows: &[usize]) -> Option<Partition> {
    let mut p = parts.to_vec();
    for &j in rows {
        p[j - 1] = p[j - 1].checked_sub(1)?;
    }
    if p.windows(2).any(|w| w[0] < w[1]) {
        return None;
    }
    Some(Partition::from_decreasing(p))
}

fn subsets(range: std::ops::RangeInclusive<usize>, size: usize) -> Vec<Vec<usize>> {
    let items: Vec<usize> = range.collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(items: &[usize], size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for (k, &x) in items.iter().enumerate() {
            cur.push(x);
            go(&items[k + 1..], size, cur, out);
            cur.pop();
        }
    }
    go(&items, size, &mut cur, &mut out);
    out
}

/// Koszul-type complex over the subsets of `rows`: the term of degree
/// `offset + s` has the valid removals for `s`-subsets, and the boundary
/// drops one row from the subset with sign `(−1)^position`.
fn subset_complex(parts: &[usize], rows: usize, offset: usize) -> Vec<Term> {
    let mut keys: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut terms = Vec::new();
    for s in 0..=rows {
        let valid: Vec<(Vec<usize>, Partition)> = subsets(1..=rows, s)
            .into_iter()
            .filter_map(|j| remove_from_rows(parts, &j).map(|p| (j, p)))
            .collect();
        let index: HashMap<&Vec<usize>, usize> =
            keys.last().map(|k: &Vec<Vec<usize>>| k.iter().enumerate().map(|(i, j)| (j, i)).collect()).unwrap_or_default();
        let mut boundary = Vec::new();
        if s > 0 {
            for (src, (j, _)) in valid.iter().enumerate() {
                for pos in 0..j.len() {
                    let mut smaller = j.clone();
                    smaller.remove(pos);
                    if let Some(&tgt) = index.get(&smaller) {
                        let coefficient = if pos % 2 == 0 { int(1) } else { int(-1) };
                        boundary.push(BoundaryEntry { source: src, target: tgt, coefficient });
                    }
                }
            }
        }
        terms.push(Term {
            degree: offset + s,
            labels: valid.iter().map(|(_, p)| Label::Projective(p.clone())).collect(),
            boundary,
        });
        keys.push(valid.into_iter().map(|(j, _)| j).collect());
    }
    terms
}

/// Resolution of `DF_n ⊗ P(μ)` ending in the symbolic `P(μ^∞)`.
pub fn resolution_df_p(mu: &Partition, n: usize) -> Result<Resolution> {
    require_rows(mu, n)?;
    let limit = Label::Limit { mu: mu.clone(), n };
    let parts = mu.padded(n).expect("checked row count");
    if parts[n - 1] == 0 {
        return Ok(Resolution { terms: vec![Term { degree: 0, labels: vec![limit], boundary: Vec::new() }] });
    }
    let mut first = parts.clone();
    first[n - 1] -= 1;
    let mut terms = vec![Term { degree: 0, labels: vec![limit], boundary: Vec::new() }];
    let mut rest = subset_complex(&first, n - 1, 1);
    rest[0].boundary = vec![BoundaryEntry { source: 0, target: 0, coefficient: Rational::one() }];
    terms.extend(rest);
    Ok(Resolution { terms })
}

/// Resolution of the simple module `L(λ)` of length `ℓ(λ)`.
pub fn resolution_simple(lam: &Partition, n: usize) -> Result<Resolution> {
    require_rows(lam, n)?;
    Ok(Resolution { terms: subset_complex(lam.parts(), lam.len(), 0) })
}

/// Per-label multiplicities of the modules the resolutions resolve.
pub mod targets {
    use super::*;

    /// `dim e_η Q(λ)` in `F_n`.
    pub fn q_module(lam: &Partition, n: usize) -> impl Fn(&Partition) -> i64 + '_ {
        move |eta| {
            if eta.len() != n {
                return 0;
            }
            let inner = Partition::from_decreasing(eta.parts().iter().map(|p| p - 1).collect());
            i64::from(exists_hom(&inner, lam))
        }
    }

    /// `dim e_η L(λ)`.
    pub fn simple(lam: &Partition) -> impl Fn(&Partition) -> i64 + '_ {
        move |eta| i64::from(eta == lam)
    }

    /// `dim e_η (DF_n ⊗ P(μ))`: the basis is `[η|μ]` with `(μ)F_n(η) ≠ 0`.
    pub fn df_p(mu: &Partition, n: usize) -> impl Fn(&Partition) -> i64 + '_ {
        move |eta| i64::from(eta.len() <= n && exists_hom(mu, eta))
    }
}

/// Alternating sum of `η`-multiplicities equals `target(η)` for every `η`
/// admitted by a finite truncation.
pub fn graded_euler_check(r: &Resolution, target: impl Fn(&Partition) -> i64, tr: Truncation) -> Result<bool> {
    Ok(euler_mismatches(r, target, tr)?.is_empty())
}

/// The labels where [`graded_euler_check`] fails, with `(euler, target)`.
pub fn euler_mismatches(
    r: &Resolution,
    target: impl Fn(&Partition) -> i64,
    tr: Truncation,
) -> Result<Vec<(Partition, i64, i64)>> {
    Ok(tr
        .partitions()?
        .into_iter()
        .filter_map(|eta| {
            let (e, t) = (r.euler_multiplicity(&eta), target(&eta));
            (e != t).then_some((eta, e, t))
        })
        .collect())
}

/// Boundary matrices over the truncated bases of each term.
pub struct RealizedComplex {
    pub dims: Vec<usize>,
    /// `boundaries[d]` maps degree `d+1` to degree `d`.
    pub boundaries: Vec<RationalMatrix>,
}

pub fn realize(r: &Resolution, tr: Truncation) -> Result<RealizedComplex> {
    let mut bases: Vec<Vec<(usize, ArrowElement)>> = Vec::new();
    for t in &r.terms {
        let mut basis = Vec::new();
        for (k, l) in t.labels.iter().enumerate() {
            let p = l
                .partition()
                .ok_or_else(|| Error::InvalidTruncation(format!("{l} cannot be realized in {tr}")))?;
            basis.extend(projective_basis(p, tr)?.into_iter().map(|a| (k, a)));
        }
        bases.push(basis);
    }
    let mut boundaries = Vec::new();
    for d in 1..r.terms.len() {
        let (src, tgt) = (&bases[d], &bases[d - 1]);
        let index: HashMap<(usize, &ArrowElement), usize> =
            tgt.iter().enumerate().map(|(i, (k, a))| ((*k, a), i)).collect();
        let mut m = RationalMatrix::zeros(tgt.len(), src.len());
        let term = &r.terms[d];
        let prev = &r.terms[d - 1];
        for (c, (k, a)) in src.iter().enumerate() {
            for e in term.boundary.iter().filter(|e| e.source == *k) {
                let from = term.labels[e.source].partition().expect("realized");
                let to = prev.labels[e.target].partition().expect("realized");
                if !exists_hom(from, to) {
                    continue;
                }
                let arrow = ArrowElement { source: from.clone(), target: to.clone() };
                for (b, x) in multiply(a, &arrow).iter() {
                    let row = index[&(e.target, b)];
                    m[(row, c)] += x * &e.coefficient;
                }
            }
        }
        boundaries.push(m);
    }
    Ok(RealizedComplex { dims: bases.iter().map(Vec::len).collect(), boundaries })
}

impl RealizedComplex {
    pub fn squares_to_zero(&self) -> bool {
        self.boundaries.windows(2).all(|w| (&w[0] * &w[1]).is_zero())
    }

    /// Exact in every positive degree, including injectivity at the top.
    pub fn is_exact_above_zero(&self) -> bool {
        let ranks: Vec<usize> = self.boundaries.iter().map(RationalMatrix::rank).collect();
        (1..self.dims.len()).all(|d| {
            let incoming = ranks.get(d).copied().unwrap_or(0);
            ranks[d - 1] + incoming == self.dims[d]
        })
    }

    pub fn cokernel_dim(&self) -> usize {
        self.dims[0] - self.boundaries.first().map_or(0, RationalMatrix::rank)
    }
}

/// `d∘d = 0` and exactness in positive degrees.
pub fn rank_exactness(r: &Resolution, tr: Truncation) -> bool {
    realize(r, tr).map(|c| c.squares_to_zero() && c.is_exact_above_zero()).unwrap_or(false)
}

/// Label of `DF̄_n ⊗ P(λ̄)`: the dual of `λ ∪ 1ⁿ`.
pub fn serre_bar_k0(lam: &Partition, n: usize) -> Result<Partition> {
    require_rows(lam, n)?;
    Ok(lam.union_columns(n)?.dual())
}

/// `Hom(DF_n ⊗ P(μ), L(λ)[n])` is one dimensional exactly when `λ ∪ 1ⁿ = μ`:
/// the top term of the resolution of `DF_n ⊗ P(μ)` is `P(λ)` for that `λ`.
/// Also checks that `resolution_q` has the graded dimensions of `Q(λ)`.
pub fn lemma_sn_k0(lam: &Partition, n: usize, m: usize) -> Result<bool> {
    let mu = lam.union_columns(n)?;
    let r = resolution_df_p(&mu, n)?;
    let top = r.labels(n);
    let top_ok = r.length() == n && top == [Label::Projective(lam.clone())];
    let tr = Truncation::RowsAndSize(n, m);
    let q = q_module_basis(lam, n, m)?;
    let mut dims: BTreeMap<Partition, i64> = BTreeMap::new();
    for a in &q {
        *dims.entry(a.source.clone()).or_default() += 1;
    }
    let rq = resolution_q(lam, n)?;
    let graded = tr
        .partitions()?
        .iter()
        .all(|eta| rq.euler_multiplicity(eta) == dims.get(eta).copied().unwrap_or(0));
    let realized = realize(&rq, tr)?;
    Ok(top_ok && graded && realized.cokernel_dim() == q.len())
}
