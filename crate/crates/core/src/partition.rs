//! Integer partitions, Young diagrams and the interlacing relation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing list of positive parts. Trailing zeros are dropped on
/// construction, so `(1,0)` and `(1)` are the same value.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A cell of a Young diagram, 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1);
        Self { row, col }
    }

    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.row, self.col)
    }
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self::from_decreasing(parts))
    }

    /// Like [`Partition::new`] for callers that already know the order holds.
    pub(crate) fn from_decreasing(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Self { parts }
    }

    /// Accepts any finite list; `None` unless it is weakly decreasing.
    pub fn try_from_parts(parts: &[i64]) -> Option<Self> {
        if parts.iter().any(|&p| p < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Self::from_decreasing(parts.iter().map(|&p| p as usize).collect()))
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length of row `i` (1-based), zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Length of column `j` (1-based), i.e. part `j` of the dual.
    pub fn col(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= j).count()
    }

    /// Number of columns.
    pub fn width(&self) -> usize {
        self.row(1)
    }

    /// Parts padded with zeros to length `n`; `None` if there are more rows.
    pub fn padded(&self, n: usize) -> Option<Vec<usize>> {
        if self.len() > n {
            return None;
        }
        let mut v = self.parts.clone();
        v.resize(n, 0);
        Some(v)
    }

    pub fn dual(&self) -> Self {
        Self { parts: (1..=self.width()).map(|j| self.col(j)).collect() }
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        self.row(c.row) >= c.col
    }

    pub fn cells(&self) -> Vec<Cell> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
            .collect()
    }

    /// Cells whose removal leaves a partition, top to bottom.
    pub fn removable_cells(&self) -> Vec<Cell> {
        (1..=self.len())
            .filter(|&i| self.row(i) > self.row(i + 1))
            .map(|i| Cell::new(i, self.row(i)))
            .collect()
    }

    /// Cells whose addition gives a partition, top to bottom.
    pub fn addable_cells(&self) -> Vec<Cell> {
        (1..=self.len() + 1)
            .filter(|&i| i == 1 || self.row(i - 1) > self.row(i))
            .map(|i| Cell::new(i, self.row(i) + 1))
            .collect()
    }

    pub fn remove_cell(&self, c: Cell) -> Option<Self> {
        if c.row == 0 || self.row(c.row) != c.col || self.row(c.row + 1) >= c.col {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[c.row - 1] -= 1;
        Some(Self::from_decreasing(parts))
    }

    pub fn add_cell(&self, c: Cell) -> Option<Self> {
        if c.row == 0 || self.row(c.row) + 1 != c.col || (c.row > 1 && self.row(c.row - 1) < c.col) {
            return None;
        }
        let mut parts = self.parts.clone();
        if c.row > parts.len() {
            parts.push(0);
        }
        parts[c.row - 1] += 1;
        Some(Self::from_decreasing(parts))
    }

    /// `Res(λ)`: remove one corner, listed in descending order.
    pub fn res_set(&self) -> Vec<Self> {
        let mut v: Vec<Self> = self.removable_cells().into_iter().filter_map(|c| self.remove_cell(c)).collect();
        v.sort_by(|a, b| b.cmp(a));
        v
    }

    /// `Ind(λ)`: add one box, listed in descending order.
    pub fn ind_set(&self) -> Vec<Self> {
        let mut v: Vec<Self> = self.addable_cells().into_iter().filter_map(|c| self.add_cell(c)).collect();
        v.sort_by(|a, b| b.cmp(a));
        v
    }

    /// `λ ⊆ μ` as diagrams.
    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.len() <= other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Cells of `self` not in `inner`. Empty if `inner` is not contained in `self`.
    pub fn skew_cells(&self, inner: &Self) -> Vec<Cell> {
        if !inner.is_subset_of(self) {
            return Vec::new();
        }
        (1..=self.len())
            .flat_map(|i| (inner.row(i) + 1..=self.row(i)).map(move |j| Cell::new(i, j)))
            .collect()
    }

    /// The single cell of `self / inner` when `self ∈ Ind(inner)`.
    pub fn added_cell(&self, inner: &Self) -> Option<Cell> {
        match self.skew_cells(inner).as_slice() {
            [c] if self.size() == inner.size() + 1 => Some(*c),
            _ => None,
        }
    }

    /// `λ ∪ 1ⁿ`: one more box on each of the first `n` rows.
    pub fn union_columns(&self, n: usize) -> Result<Self> {
        let parts = self.padded(n).ok_or_else(|| Error::TooManyRows { partition: self.to_string(), n })?;
        Ok(Self::from_decreasing(parts.into_iter().map(|p| p + 1).collect()))
    }

    /// Whether `μ_i ≥ λ_i ≥ μ_{i+1}` for all `i`, with `self = λ`.
    /// Equivalently `μ/λ` is a horizontal strip.
    pub fn interlaces(&self, mu: &Self) -> bool {
        let rows = self.len().max(mu.len());
        (1..=rows).all(|i| mu.row(i) >= self.row(i) && self.row(i) >= mu.row(i + 1))
    }

    /// All partitions of `n`, in descending lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions with at most `max` boxes, by size then descending.
    pub fn all_up_to(max: usize) -> Vec<Self> {
        (0..=max).flat_map(Self::all_of_size).collect()
    }

    /// Partitions with at most `rows` rows and at most `max` boxes.
    pub fn all_with_rows(rows: usize, max: usize) -> Vec<Self> {
        Self::all_up_to(max).into_iter().filter(|p| p.len() <= rows).collect()
    }
}

fn fill(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=rest.min(cap)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `(2,1)`, `()`, `2,1` or `(1,0)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(t).trim();
        if inner.is_empty() {
            return Ok(Self::empty());
        }
        let parts = inner
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad partition {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Shorthand for literals in tests and examples; panics on bad input.
#[macro_export]
macro_rules! part {
    () => { $crate::partition::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partition::Partition::new(vec![$($p),+]).expect("weakly decreasing parts")
    };
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn dual_examples() {
        assert_eq!(part![2].dual(), part![1, 1]);
        assert_eq!(part![].dual(), part![]);
        assert_eq!(part![3, 1].dual(), part![2, 1, 1]);
    }

    #[test]
    fn res_and_ind_examples() {
        assert_eq!(part![2, 1].res_set(), vec![part![2], part![1, 1]]);
        assert!(part![].res_set().is_empty());
        assert_eq!(part![2].res_set(), vec![part![1]]);
        assert_eq!(part![].ind_set(), vec![part![1]]);
        assert_eq!(part![1].ind_set(), vec![part![2], part![1, 1]]);
        assert_eq!(part![2, 1].ind_set(), vec![part![3, 1], part![2, 2], part![2, 1, 1]]);
    }

    #[test]
    fn union_columns_examples() {
        assert_eq!(part![1].union_columns(2).unwrap(), part![2, 1]);
        assert_eq!(part![].union_columns(1).unwrap(), part![1]);
        assert_eq!(part![3].union_columns(1).unwrap(), part![4]);
        assert!(part![1, 1].union_columns(1).is_err());
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!("(2,1)".parse::<Partition>().unwrap(), part![2, 1]);
        assert_eq!("()".parse::<Partition>().unwrap(), part![]);
        assert_eq!("(1,0)".parse::<Partition>().unwrap(), part![1]);
        assert_eq!(" 3, 3 ".parse::<Partition>().unwrap(), part![3, 3]);
        assert!("(1,2)".parse::<Partition>().is_err());
        assert!("(a)".parse::<Partition>().is_err());
        assert_eq!(part![2, 1].to_string(), "(2,1)");
        assert_eq!(part![].to_string(), "()");
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn interlacing() {
        assert!(part![1].interlaces(&part![2, 1]));
        assert!(!part![].interlaces(&part![1, 1]));
        assert!(part![2, 1].interlaces(&part![2, 1]));
        assert!(!part![2].interlaces(&part![1, 1]));
    }

    #[test]
    fn cells_and_contents() {
        let p = part![2, 1];
        assert_eq!(p.cells().len(), 3);
        assert_eq!(p.removable_cells(), vec![Cell::new(1, 2), Cell::new(2, 1)]);
        assert_eq!(p.addable_cells(), vec![Cell::new(1, 3), Cell::new(2, 2), Cell::new(3, 1)]);
        assert_eq!(Cell::new(2, 1).content(), -1);
        assert_eq!(part![2, 1].added_cell(&part![2]), Some(Cell::new(2, 1)));
        assert_eq!(part![2, 1].added_cell(&part![1]), None);
    }

    fn arb_partition(max: usize) -> impl Strategy<Value = Partition> {
        (0..=max).prop_flat_map(|n| {
            let all = Partition::all_of_size(n);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
    }

    proptest! {
        #[test]
        fn dual_is_an_involution(p in arb_partition(12)) {
            prop_assert_eq!(p.dual().dual(), p.clone());
            prop_assert_eq!(p.dual().size(), p.size());
        }

        #[test]
        fn res_ind_adjoint(p in arb_partition(12)) {
            for mu in p.ind_set() {
                prop_assert!(mu.res_set().contains(&p));
            }
            for lam in p.res_set() {
                prop_assert!(lam.ind_set().contains(&p));
            }
        }

        #[test]
        fn dual_of_union_columns(p in arb_partition(10), n in 1usize..=5) {
            prop_assume!(p.len() <= n);
            let mut expected = vec![n];
            expected.extend(p.dual().parts());
            prop_assert_eq!(p.union_columns(n).unwrap().dual(), Partition::new(expected).unwrap());
        }

        #[test]
        fn serde_roundtrip(p in arb_partition(10)) {
            let s = serde_json::to_string(&p).unwrap();
            prop_assert_eq!(serde_json::from_str::<Partition>(&s).unwrap(), p.clone());
            prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
        }
    }
}
