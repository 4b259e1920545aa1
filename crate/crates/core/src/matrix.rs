//! Dense exact-rational matrices.
//!
//! Determinants, ranks and solves run fraction-free: every row is first
//! scaled to integers, then reduced with Bareiss' one-step division so the
//! intermediate entries stay integral minors of the input.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, Rational};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let n = rows.len();
        Ok(Self { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::Dimension("sum of differently shaped matrices".into()));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        })
    }

    /// Determinant by Bareiss elimination.
    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::Dimension(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        if self.rows == 0 {
            return Ok(Rational::one());
        }
        let (mut ints, scale) = integer_rows(self);
        let ech = bareiss(&mut ints, self.cols);
        if ech.rank < self.rows {
            return Ok(Rational::zero());
        }
        let last = ints[self.rows - 1][self.cols - 1].clone();
        let signed = if ech.swaps.is_multiple_of(2) { last } else { -last };
        Ok(Rational::new(signed, scale))
    }

    pub fn rank(&self) -> usize {
        let (mut ints, _) = integer_rows(self);
        bareiss(&mut ints, self.cols).rank
    }

    /// Unique solution of `self * x = b`, for any consistent system of full
    /// column rank (square nonsingular systems included).
    pub fn solve(&self, b: &[Rational]) -> Result<Vec<Rational>> {
        if b.len() != self.rows {
            return Err(Error::Dimension(format!("right-hand side of length {} for {} rows", b.len(), self.rows)));
        }
        let augmented = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let (mut ints, _) = integer_rows(&augmented);
        let ech = bareiss(&mut ints, self.cols);
        if ech.rank < self.cols {
            return Err(Error::Singular(format!("rank {} < {} unknowns", ech.rank, self.cols)));
        }
        if ints[ech.rank..].iter().any(|row| !row[self.cols].is_zero()) {
            return Err(Error::Singular("inconsistent system".into()));
        }
        let mut x = vec![Rational::zero(); self.cols];
        for r in (0..ech.rank).rev() {
            let c = ech.pivots[r];
            let mut acc = Rational::from_integer(ints[r][self.cols].clone());
            for j in c + 1..self.cols {
                if !ints[r][j].is_zero() {
                    acc -= Rational::from_integer(ints[r][j].clone()) * &x[j];
                }
            }
            x[c] = acc / Rational::from_integer(ints[r][c].clone());
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut out = Self::zeros(n, n);
        for j in 0..n {
            let e: Vec<Rational> = (0..n).map(|i| if i == j { Rational::one() } else { Rational::zero() }).collect();
            let col = self.solve(&e)?;
            for (i, v) in col.into_iter().enumerate() {
                out[(i, j)] = v;
            }
        }
        Ok(out)
    }

    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(format_rational).collect()).collect()
    }
}

struct Echelon {
    rank: usize,
    swaps: usize,
    pivots: Vec<usize>,
}

/// Clears denominators row by row; returns the integer rows and the product
/// of the row multipliers.
fn integer_rows(m: &RationalMatrix) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut scale = BigInt::one();
    let rows = (0..m.rows)
        .map(|i| {
            let l = m.row(i).iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            m.row(i).iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    (rows, scale)
}

/// In-place fraction-free row echelon form over the first `pivot_cols`
/// columns (trailing columns ride along, e.g. an augmented right-hand side).
fn bareiss(m: &mut [Vec<BigInt>], pivot_cols: usize) -> Echelon {
    let rows = m.len();
    let width = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut swaps = 0;
    let mut pivots = Vec::new();
    for c in 0..pivot_cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            swaps += 1;
        }
        for i in r + 1..rows {
            for j in c + 1..width {
                let v = (&m[r][c] * &m[i][j] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        // rows above the pivot row keep their entries; rows below now hold
        // (r+1)-minors, so the next division by this pivot is exact
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    // entries left of the pivot in lower rows are already zero; scale the
    // untouched rows below the rank so consistency checks see exact zeros
    Echelon { rank: r, swaps, pivots }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;
    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.checked_mul(rhs).expect("matrix dimensions must agree")
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells = self.to_string_rows();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for (i, row) in cells.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{c:>width$}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// Row-major list of `"p/q"` strings.
impl Serialize for RationalMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_string_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<String>> = Vec::deserialize(d)?;
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|x| parse_rational(x)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        RationalMatrix::from_rows(parsed).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    /// Leibniz expansion; only for tiny matrices.
    fn leibniz(a: &RationalMatrix) -> Rational {
        use itertools::Itertools;
        let n = a.rows();
        (0..n)
            .permutations(n)
            .map(|p| {
                let inv = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
                let prod: Rational = (0..n).map(|i| a[(i, p[i])].clone()).product();
                if inv % 2 == 0 { prod } else { -prod }
            })
            .sum()
    }

    #[test]
    fn det_matches_leibniz() {
        let a = RationalMatrix::from_fn(4, 4, |i, j| frac((i * 3 + j * 7 % 5) as i64 - 4, (i + j + 1) as i64));
        assert_eq!(a.det().unwrap(), leibniz(&a));
        let b = m(&[&[0, 1, 2], &[3, 0, 1], &[1, 1, 0]]);
        assert_eq!(b.det().unwrap(), leibniz(&b));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).det().unwrap(), int(0));
        assert_eq!(RationalMatrix::zeros(0, 0).det().unwrap(), int(1));
    }

    #[test]
    fn rank_and_solve() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(a.rank(), 2);
        assert_eq!(RationalMatrix::zeros(3, 2).rank(), 0);
        let c = RationalMatrix::from_rows(vec![vec![int(1), int(1)], vec![frac(1, 2), int(1)]]).unwrap();
        let g = c.solve(&[int(0), int(-1)]).unwrap();
        assert_eq!(g, vec![int(2), int(-2)]);
        assert!(m(&[&[1, 1], &[1, 1]]).solve(&[int(1), int(2)]).is_err());
        // overdetermined but consistent
        let tall = m(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(tall.solve(&[int(2), int(3), int(5)]).unwrap(), vec![int(2), int(3)]);
        assert!(tall.solve(&[int(2), int(3), int(6)]).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let a = RationalMatrix::from_fn(3, 3, |i, j| frac(1, (i + j + 1) as i64));
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, RationalMatrix::identity(3));
    }

    #[test]
    fn serde_is_row_major_strings() {
        let c = RationalMatrix::from_rows(vec![vec![int(1), int(1)], vec![frac(1, 2), int(1)]]).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"[["1","1"],["1/2","1"]]"#);
        let back: RationalMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
    }
}
