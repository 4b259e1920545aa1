//! Irreducible representations of the symmetric group in a rescaled
//! Vershik–Okounkov (Young seminormal) basis, the restriction maps between
//! them, and the edge coefficients `h` and `a`.
//!
//! With `d = a_{i+1} − a_i` read off the contents of `T`, the rescaled basis
//! satisfies the uniform rule
//! `s_i ṽ_T = (1/d) ṽ_T + ((d−1)/d) ṽ_{s_i T}`,
//! where the second term is absent when `|d| = 1`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::partition::{Cell, Partition};
use crate::rational::{int, sign, Rational};

/// A standard filling, stored as the cell of each entry: `cells[k]` holds `k+1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tableau {
    shape: Partition,
    cells: Vec<Cell>,
}

impl Tableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    /// `α(T) = (a_1, …, a_n)`, `a_k` the content of the cell holding `k`.
    pub fn contents(&self) -> Vec<i64> {
        self.cells.iter().map(Cell::content).collect()
    }

    /// `a_{i+1} − a_i` for 1-based `i`.
    pub fn axial_distance(&self, i: usize) -> i64 {
        self.cells[i].content() - self.cells[i - 1].content()
    }

    /// `s_i T`, when the swap of `i` and `i+1` keeps the filling standard.
    pub fn swap(&self, i: usize) -> Option<Tableau> {
        if self.axial_distance(i).abs() == 1 {
            return None;
        }
        let mut cells = self.cells.clone();
        cells.swap(i - 1, i);
        Some(Tableau { shape: self.shape.clone(), cells })
    }

    /// The filling restricted to `1..n-1`.
    pub fn restrict(&self) -> Option<Tableau> {
        let last = *self.cells.last()?;
        let shape = self.shape.remove_cell(last)?;
        Some(Tableau { shape, cells: self.cells[..self.cells.len() - 1].to_vec() })
    }

    /// Rows of entries.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let mut rows: Vec<Vec<usize>> = self.shape.parts().iter().map(|&p| vec![0; p]).collect();
        for (k, c) in self.cells.iter().enumerate() {
            rows[c.row - 1][c.col - 1] = k + 1;
        }
        rows
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows().iter().map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// Standard tableaux of one shape in the fixed order, with `c_T` and an index.
#[derive(Debug)]
pub struct TableauBasis {
    pub shape: Partition,
    pub tableaux: Vec<Tableau>,
    pub scale: Vec<Rational>,
    index: HashMap<Vec<Cell>, usize>,
}

impl TableauBasis {
    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn index_of(&self, t: &Tableau) -> Option<usize> {
        if t.shape != self.shape {
            return None;
        }
        self.index.get(&t.cells).copied()
    }
}

fn enumerate(shape: &Partition) -> Vec<Tableau> {
    if shape.is_empty() {
        return vec![Tableau { shape: Partition::empty(), cells: Vec::new() }];
    }
    let mut out = Vec::new();
    for c in shape.removable_cells() {
        let smaller = shape.remove_cell(c).expect("removable cell");
        for mut t in enumerate(&smaller) {
            t.cells.push(c);
            t.shape = shape.clone();
            out.push(t);
        }
    }
    out
}

fn build(shape: &Partition) -> TableauBasis {
    let mut tableaux = enumerate(shape);
    // descending lexicographic order on content vectors
    tableaux.sort_by_key(|t| std::cmp::Reverse(t.contents()));
    let index: HashMap<Vec<Cell>, usize> = tableaux.iter().enumerate().map(|(k, t)| (t.cells.clone(), k)).collect();
    let scale = scale_constants(&tableaux, &index);
    TableauBasis { shape: shape.clone(), tableaux, scale, index }
}

/// `c_{T^μ} = 1`, and `c_{s_i T} = d/(d−1)·c_T` whenever the swap is a step
/// up, which is the case exactly when `d ≤ −2`. The first tableau in the
/// order is the row reading `T^μ`.
fn scale_constants(tableaux: &[Tableau], index: &HashMap<Vec<Cell>, usize>) -> Vec<Rational> {
    let mut scale: Vec<Option<Rational>> = vec![None; tableaux.len()];
    if tableaux.is_empty() {
        return Vec::new();
    }
    scale[0] = Some(Rational::one());
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        let t = &tableaux[k];
        let c = scale[k].clone().expect("visited");
        for i in 1..t.size() {
            let d = t.axial_distance(i);
            if d > -2 {
                continue;
            }
            let up = t.swap(i).expect("|d| ≥ 2");
            let u = index[&up.cells];
            if scale[u].is_none() {
                scale[u] = Some(&c * Rational::new(d.into(), (d - 1).into()));
                queue.push_back(u);
            }
        }
    }
    scale.into_iter().map(|c| c.expect("every tableau lies above the row reading")).collect()
}

fn cache() -> &'static Mutex<HashMap<Partition, Arc<TableauBasis>>> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, Arc<TableauBasis>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The ordered basis of a shape, memoized.
pub fn basis(shape: &Partition) -> Arc<TableauBasis> {
    if let Some(b) = cache().lock().expect("cache lock").get(shape) {
        return b.clone();
    }
    let b = Arc::new(build(shape));
    cache().lock().expect("cache lock").entry(shape.clone()).or_insert(b).clone()
}

/// All standard tableaux of `shape`, descending lexicographically by contents.
pub fn tableaux(shape: &Partition) -> Vec<Tableau> {
    basis(shape).tableaux.clone()
}

/// The rescaling constant `c_T`.
pub fn c_scale(t: &Tableau) -> Rational {
    let b = basis(&t.shape);
    let k = b.index_of(t).expect("tableau of its own shape");
    b.scale[k].clone()
}

/// Matrix of `s_i` in the rescaled basis, stored by columns: column `c`
/// lists the nonzero coefficients of `s_i ṽ_{T_c}`, so entry `(r, c)` of
/// [`RepMatrix::to_dense`] is the coefficient of `ṽ_{T_r}` in `s_i ṽ_{T_c}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMatrix {
    pub shape: Partition,
    pub generator: usize,
    columns: Vec<Vec<(usize, Rational)>>,
}

impl RepMatrix {
    pub fn dim(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, c: usize) -> &[(usize, Rational)] {
        &self.columns[c]
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); v.len()];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, m) in &self.columns[c] {
                out[*r] += m * x;
            }
        }
        out
    }

    pub fn to_dense(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.dim(), self.dim());
        for (c, col) in self.columns.iter().enumerate() {
            for (r, x) in col {
                m[(*r, c)] = x.clone();
            }
        }
        m
    }
}

impl Serialize for RepMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_dense().serialize(s)
    }
}

pub fn rep_action(i: usize, shape: &Partition) -> Result<RepMatrix> {
    let n = shape.size();
    if i == 0 || i >= n {
        return Err(Error::GeneratorOutOfRange { i, n });
    }
    let b = basis(shape);
    let columns = b
        .tableaux
        .iter()
        .enumerate()
        .map(|(c, t)| {
            let d = t.axial_distance(i);
            let diag = Rational::new(1.into(), d.into());
            match t.swap(i) {
                None => vec![(c, diag)],
                Some(u) => {
                    let r = b.index_of(&u).expect("swapped tableau is standard");
                    vec![(c, diag), (r, Rational::new((d - 1).into(), d.into()))]
                }
            }
        })
        .collect();
    Ok(RepMatrix { shape: shape.clone(), generator: i, columns })
}

/// For each tableau of `λ`, the index of `T ∪ {n}` among tableaux of `μ`.
pub fn f_indices(lam: &Partition, mu: &Partition) -> Result<Vec<usize>> {
    let cell = mu.added_cell(lam).ok_or_else(|| Error::InvalidEdge(format!("{mu} is not {lam} plus a box")))?;
    let small = basis(lam);
    let big = basis(mu);
    Ok(small
        .tableaux
        .iter()
        .map(|t| {
            let mut cells = t.cells.clone();
            cells.push(cell);
            big.index.get(&cells).copied().expect("extension is standard")
        })
        .collect())
}

/// The map `f_{λμ}`: `ṽ_T ↦ ṽ_{T∪{n}}`, as a `dim μ × dim λ` matrix.
pub fn f_map(lam: &Partition, mu: &Partition) -> Result<RationalMatrix> {
    let idx = f_indices(lam, mu)?;
    let mut m = RationalMatrix::zeros(basis(mu).dim(), idx.len());
    for (c, &r) in idx.iter().enumerate() {
        m[(r, c)] = Rational::one();
    }
    Ok(m)
}

/// Which intermediate partition a coefficient refers to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    /// Through `λ` itself.
    Lambda,
    /// Through the other corner `ν` of the square.
    Nu,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Lambda => "lambda",
            Branch::Nu => "nu",
        })
    }
}

/// A path `λ' → λ → μ` adding the cells `b1` then `b2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    pub lam1: Partition,
    pub lam: Partition,
    pub mu: Partition,
    pub b1: Cell,
    pub b2: Cell,
    /// `λ' ∪ b2`, when it is a partition; then the square is two dimensional.
    pub nu: Option<Partition>,
}

impl Path {
    pub fn new(lam1: &Partition, lam: &Partition, mu: &Partition) -> Result<Self> {
        let bad = || Error::InvalidPath(format!("{lam1} -> {lam} -> {mu}"));
        let b1 = lam.added_cell(lam1).ok_or_else(bad)?;
        let b2 = mu.added_cell(lam).ok_or_else(bad)?;
        let nu = lam1.add_cell(b2);
        Ok(Self { lam1: lam1.clone(), lam: lam.clone(), mu: mu.clone(), b1, b2, nu })
    }

    /// `d = c(μ∖λ) − c(λ∖λ')`.
    pub fn d(&self) -> i64 {
        self.b2.content() - self.b1.content()
    }

    pub fn branches(&self) -> Vec<Branch> {
        if self.nu.is_some() {
            vec![Branch::Lambda, Branch::Nu]
        } else {
            vec![Branch::Lambda]
        }
    }

    /// Every path ending at `μ`, in a fixed order.
    pub fn all_into(mu: &Partition) -> Vec<Path> {
        let mut out = Vec::new();
        for lam in mu.res_set() {
            for lam1 in lam.res_set() {
                out.push(Path::new(&lam1, &lam, mu).expect("res_set edges"));
            }
        }
        out
    }
}

/// Solves `s_n·F1 = α·F1 + β·F2` for the composites through `λ` and `ν`.
pub fn square_coeffs(lam1: &Partition, lam: &Partition, nu: &Partition, mu: &Partition) -> Result<(Rational, Rational)> {
    let path = Path::new(lam1, lam, mu).map_err(|_| Error::NotASquare(format!("{lam1} -> {lam} -> {mu}")))?;
    if path.nu.as_ref() != Some(nu) {
        return Err(Error::NotASquare(format!("{lam1} -> {lam} (+) {nu} -> {mu}")));
    }
    let (alpha, beta) = decompose(&path)?;
    Ok((alpha, beta.expect("two-dimensional square")))
}

fn composite(lam1: &Partition, mid: &Partition, mu: &Partition) -> Result<Vec<usize>> {
    let first = f_indices(lam1, mid)?;
    let second = f_indices(mid, mu)?;
    Ok(first.into_iter().map(|k| second[k]).collect())
}

/// Coefficients of `s_{n−1}` applied to the composite through `λ`, in terms
/// of the composites through `λ` and (when present) `ν`, found by an exact
/// least-squares-free solve of the stacked entrywise equations.
fn decompose(path: &Path) -> Result<(Rational, Option<Rational>)> {
    let n = path.mu.size();
    let s = rep_action(n - 1, &path.mu)?;
    let f1 = composite(&path.lam1, &path.lam, &path.mu)?;
    let f2 = match &path.nu {
        Some(nu) => Some(composite(&path.lam1, nu, &path.mu)?),
        None => None,
    };
    let unknowns = if f2.is_some() { 2 } else { 1 };
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (c, &p) in f1.iter().enumerate() {
        let image = s.column(p);
        let mut touched: Vec<usize> = image.iter().map(|(r, _)| *r).collect();
        touched.push(p);
        if let Some(f2) = &f2 {
            touched.push(f2[c]);
        }
        touched.sort_unstable();
        touched.dedup();
        for r in touched {
            let lhs = image.iter().find(|(q, _)| *q == r).map(|(_, x)| x.clone()).unwrap_or_else(Rational::zero);
            let mut row = vec![if r == p { Rational::one() } else { Rational::zero() }];
            if let Some(f2) = &f2 {
                row.push(if r == f2[c] { Rational::one() } else { Rational::zero() });
            }
            rows.push(row);
            rhs.push(lhs);
        }
    }
    let system = RationalMatrix::from_rows(rows)?;
    if system.rank() < unknowns {
        return Err(Error::NotASquare("composites are linearly dependent".into()));
    }
    let sol = system.solve(&rhs)?;
    Ok((sol[0].clone(), sol.get(1).cloned()))
}

/// `h_{λ'λ}` for the edge adding the cell at row `t+1`, column `s+1`.
pub fn h_coeff(lam1: &Partition, lam: &Partition) -> Result<Rational> {
    let cell = lam.added_cell(lam1).ok_or_else(|| Error::InvalidEdge(format!("{lam1} -> {lam}")))?;
    let (t, s) = (cell.row - 1, cell.col - 1);
    let mut h = sign(s as i64);
    for i in 1..=t {
        let x = lam.row(i) as i64 - (s as i64 + 1);
        h *= int(x + t as i64 + 1 - i as i64);
    }
    for j in 1..=s {
        let y = lam.col(j) as i64 - (t as i64 + 1);
        h /= int(y + s as i64 + 2 - j as i64);
    }
    Ok(h)
}

/// The closed form of `a^{μ'μ}_{λ'λ}`: `1` on the `ν` branch, and
/// `(1/d)·h_{λμ}/h_{λ'λ}` on the `λ` branch. For a domino the sign is
/// `+1` for `(2)` and `−1` for `(1²)`, which is again `1/d`.
pub fn a_coeff(lam1: &Partition, lam: &Partition, mu: &Partition, branch: Branch) -> Result<Rational> {
    let path = Path::new(lam1, lam, mu)?;
    let ratio = h_coeff(lam, mu)? / h_coeff(lam1, lam)?;
    match (branch, &path.nu) {
        (Branch::Nu, Some(_)) => Ok(Rational::one()),
        (Branch::Nu, None) => Err(Error::InvalidPath(format!("{lam1} -> {lam} -> {mu} has no second corner"))),
        (Branch::Lambda, Some(_)) => Ok(ratio / int(path.d())),
        (Branch::Lambda, None) => {
            let eps = if path.b1.row == path.b2.row { int(1) } else { int(-1) };
            Ok(eps * ratio)
        }
    }
}

/// The same coefficient from first principles: decompose `s_n` on the
/// composite `f_{λμ}∘f_{λ'λ}` in the rescaled basis and convert with
/// `q_{μ'μ} = h_{μ'μ}^{-1} f_{μ'μ}`.
pub fn a_oracle(lam1: &Partition, lam: &Partition, mu: &Partition, branch: Branch) -> Result<Rational> {
    let path = Path::new(lam1, lam, mu)?;
    let (alpha, beta) = decompose(&path)?;
    let h_first = h_coeff(lam1, lam)?;
    match (branch, beta, &path.nu) {
        (Branch::Lambda, _, _) => Ok(alpha * h_coeff(lam, mu)? / h_first),
        (Branch::Nu, Some(beta), Some(nu)) => Ok(beta * h_coeff(nu, mu)? / h_first),
        _ => Err(Error::InvalidPath(format!("{lam1} -> {lam} -> {mu} has no second corner"))),
    }
}

/// The expanded product formula for the `λ` branch, valid when the cell
/// `λ∖λ'` lies strictly above and to the right of `μ∖λ`. `None` otherwise.
pub fn a_coeff_expanded(lam1: &Partition, lam: &Partition, mu: &Partition) -> Result<Option<Rational>> {
    let path = Path::new(lam1, lam, mu)?;
    let (r1, c1, r2, c2) = (path.b1.row as i64, path.b1.col as i64, path.b2.row as i64, path.b2.col as i64);
    if !(r1 < r2 && c1 > c2) {
        return Ok(None);
    }
    let (s1, s2, t1, t2) = (c2 - 1, c1 - c2 - 1, r1 - 1, r2 - r1 - 1);
    let row = |i: i64| mu.row(i as usize) as i64;
    let col = |j: i64| mu.col(j as usize) as i64;
    let mut a = sign(s2) * int(s2 + t2 + 2);
    for j in 1..=s1 {
        let y = col(j) - r2;
        a *= Rational::new((y + s1 + s2 + t2 - j + 4).into(), (y + s1 - j + 2).into());
    }
    for i in 1..=t1 {
        let x = row(i) - c1;
        a *= Rational::new((x + s2 + t2 + t1 - i + 3).into(), (x + t1 - i + 1).into());
    }
    for j in 1..=s2 {
        let z = col(c2 + j) - r1;
        a *= int(z + s2 - j + 2);
    }
    for i in 1..=t2 {
        let z = row(r1 + i) - c2;
        a *= int(z + t2 - i + 1);
    }
    Ok(Some(a))
}
