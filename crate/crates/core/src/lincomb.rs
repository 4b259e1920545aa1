//! Finite formal sums with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::partition::Partition;
use crate::rational::{format_combination, format_rational, Rational};
use crate::sequence::ChargedSequence;

/// Basis labels usable as keys of a [`LinearCombination`].
pub trait Basis: Ord + Clone + fmt::Display + Serialize {
    /// Field name of the label in serialized term records.
    const FIELD: &'static str;
}

impl Basis for Partition {
    const FIELD: &'static str = "partition";
}

impl Basis for ChargedSequence {
    const FIELD: &'static str = "sequence";
}

/// No zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearCombination<K: Basis> {
    terms: BTreeMap<K, Rational>,
}

pub type FockVector = LinearCombination<ChargedSequence>;
pub type SchurVector = LinearCombination<Partition>;

impl<K: Basis> Default for LinearCombination<K> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Basis> LinearCombination<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, Rational::one())
    }

    pub fn term(k: K, c: Rational) -> Self {
        let mut v = Self::zero();
        v.add_term(k, c);
        v
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (K, Rational)>) -> Self {
        let mut v = Self::zero();
        for (k, c) in terms {
            v.add_term(k, c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, k: &K) -> Rational {
        self.terms.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rational)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, k: K, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    /// Linear extension of a map on basis elements.
    pub fn flat_map<L: Basis, I>(&self, mut f: impl FnMut(&K) -> I) -> LinearCombination<L>
    where
        I: IntoIterator<Item = (L, Rational)>,
    {
        let mut out = LinearCombination::zero();
        for (k, c) in &self.terms {
            for (l, d) in f(k) {
                out.add_term(l, d * c);
            }
        }
        out
    }

    /// Linear extension of a map from basis elements to vectors.
    pub fn apply<L: Basis>(&self, mut f: impl FnMut(&K) -> LinearCombination<L>) -> LinearCombination<L> {
        let mut out = LinearCombination::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }
}

impl<K: Basis> FromIterator<(K, Rational)> for LinearCombination<K> {
    fn from_iter<T: IntoIterator<Item = (K, Rational)>>(iter: T) -> Self {
        Self::from_terms(iter)
    }
}

impl<K: Basis> Add for LinearCombination<K> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl<K: Basis> Sub for LinearCombination<K> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<K: Basis> Neg for LinearCombination<K> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect() }
    }
}

impl<K: Basis> fmt::Display for LinearCombination<K> {
    /// Terms in descending key order, e.g. `(2) - 3/2*(1,1)`; `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = format_combination(self.terms.iter().rev().map(|(k, c)| (c, k.to_string())));
        f.write_str(&s)
    }
}

/// A list of `{<label>, coefficient}` records, coefficients as `"p/q"`.
impl<K: Basis> Serialize for LinearCombination<K> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Record<'a, K: Serialize> {
            #[serde(flatten)]
            label: Labelled<'a, K>,
            coefficient: String,
        }
        struct Labelled<'a, K>(&'static str, &'a K);
        impl<K: Serialize> Serialize for Labelled<'_, K> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                use serde::ser::SerializeMap;
                let mut m = s.serialize_map(Some(1))?;
                m.serialize_entry(self.0, self.1)?;
                m.end()
            }
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (k, c) in self.terms.iter().rev() {
            seq.serialize_element(&Record { label: Labelled(K::FIELD, k), coefficient: format_rational(c) })?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::rational::{frac, int};

    #[test]
    fn cancellation_drops_terms() {
        let mut v = SchurVector::basis(part![2]);
        v.add_term(part![1, 1], frac(-3, 2));
        assert_eq!(v.to_string(), "(2) - 3/2*(1,1)");
        v.add_term(part![2], int(-1));
        assert_eq!(v.len(), 1);
        let w = v.clone() - v;
        assert!(w.is_zero());
        assert_eq!(w.to_string(), "0");
    }

    #[test]
    fn json_records() {
        let v = SchurVector::from_terms([(part![2], int(1)), (part![1, 1], frac(1, 2))]);
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"[{"partition":[2],"coefficient":"1"},{"partition":[1,1],"coefficient":"1/2"}]"#
        );
        let f = FockVector::basis(ChargedSequence::vacuum(0));
        assert_eq!(
            serde_json::to_string(&f).unwrap(),
            r#"[{"sequence":{"charge":0,"head":[]},"coefficient":"1"}]"#
        );
    }
}
