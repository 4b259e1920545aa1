//! Charged sequences: semi-infinite strictly increasing even sequences that
//! agree with the vacuum `x_i = 2i + 2k` from some index on.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Stored as the charge and the shortest head after which the vacuum tail
/// takes over, so structural equality is equality of sequences.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawSequence")]
pub struct ChargedSequence {
    charge: i64,
    head: Vec<i64>,
}

#[derive(Deserialize)]
struct RawSequence {
    charge: i64,
    head: Vec<i64>,
}

impl TryFrom<RawSequence> for ChargedSequence {
    type Error = Error;
    fn try_from(r: RawSequence) -> Result<Self> {
        ChargedSequence::new(r.charge, r.head)
    }
}

/// Value of the charge-`k` vacuum at position `i` (1-based).
pub fn vacuum_entry(k: i64, i: usize) -> i64 {
    2 * i as i64 + 2 * k
}

impl ChargedSequence {
    pub fn vacuum(charge: i64) -> Self {
        Self { charge, head: Vec::new() }
    }

    /// Validates a head: even, strictly increasing, and below the first tail entry.
    pub fn new(charge: i64, head: Vec<i64>) -> Result<Self> {
        if head.iter().any(|x| x.rem_euclid(2) != 0) {
            return Err(Error::InvalidSequence(format!("odd entry in {head:?}")));
        }
        if head.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSequence(format!("{head:?} is not strictly increasing")));
        }
        if let Some(&last) = head.last() {
            if last >= vacuum_entry(charge, head.len() + 1) {
                return Err(Error::InvalidSequence(format!("{head:?} collides with the charge {charge} tail")));
            }
        }
        Ok(Self::canonical(charge, head))
    }

    pub(crate) fn canonical(charge: i64, mut head: Vec<i64>) -> Self {
        while let Some(&last) = head.last() {
            if last == vacuum_entry(charge, head.len()) {
                head.pop();
            } else {
                break;
            }
        }
        Self { charge, head }
    }

    pub fn charge(&self) -> i64 {
        self.charge
    }

    pub fn head(&self) -> &[i64] {
        &self.head
    }

    /// Entry `x_i`, 1-based.
    pub fn entry(&self, i: usize) -> i64 {
        assert!(i >= 1, "sequence positions start at 1");
        self.head.get(i - 1).copied().unwrap_or_else(|| vacuum_entry(self.charge, i))
    }

    /// First tail entry, `x_{L+1}` for head length `L`.
    pub fn tail_start(&self) -> i64 {
        vacuum_entry(self.charge, self.head.len() + 1)
    }

    /// `x_1 .. x_len`.
    pub fn prefix(&self, len: usize) -> Vec<i64> {
        (1..=len).map(|i| self.entry(i)).collect()
    }

    /// 1-based position of `v`, if present.
    pub fn position(&self, v: i64) -> Option<usize> {
        if v >= self.tail_start() {
            return (v.rem_euclid(2) == 0).then(|| ((v - 2 * self.charge) / 2) as usize);
        }
        self.head.binary_search(&v).ok().map(|p| p + 1)
    }

    pub fn contains(&self, v: i64) -> bool {
        self.position(v).is_some()
    }

    /// Number of entries strictly below `v`.
    pub fn count_below(&self, v: i64) -> usize {
        if v > self.tail_start() {
            let extra = (v - self.tail_start() + 1) / 2;
            return self.head.len() + extra as usize;
        }
        self.head.partition_point(|&x| x < v)
    }

    pub fn shift(&self, steps: i64) -> Self {
        Self { charge: self.charge + steps, head: self.head.iter().map(|x| x + 2 * steps).collect() }
    }

    pub fn energy(&self) -> i64 {
        energy(&self.head, self.charge)
    }

    /// The partition `λ` with `λ̄_i = i + k - x_i/2`; inverse of
    /// [`to_sequence_charged`].
    pub fn shape(&self) -> Partition {
        let dual: Vec<usize> =
            self.head.iter().enumerate().map(|(i, &x)| (i as i64 + 1 + self.charge - x / 2) as usize).collect();
        Partition::from_decreasing(dual).dual()
    }
}

/// `½ Σ (2k + 2i − x_i)` over an explicit head followed by the vacuum tail.
/// Repeated entries are allowed.
pub fn energy(head: &[i64], k: i64) -> i64 {
    let twice: i64 = head.iter().enumerate().map(|(i, &x)| vacuum_entry(k, i + 1) - x).sum();
    twice / 2
}

/// Sorts a head (followed by the charge-`k` tail) into a strictly increasing
/// sequence. Returns the sign of the sorting permutation, or `None` when an
/// entry repeats.
pub fn normalize(head: &[i64], k: i64) -> Option<(i64, ChargedSequence)> {
    let mut v = head.to_vec();
    if v.iter().any(|x| x.rem_euclid(2) != 0) {
        return None;
    }
    // absorb tail entries until every head entry sits below the tail
    let max = v.iter().copied().max();
    if let Some(max) = max {
        while vacuum_entry(k, v.len() + 1) <= max {
            v.push(vacuum_entry(k, v.len() + 1));
        }
    }
    let mut inversions = 0usize;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            match v[i].cmp(&v[j]) {
                std::cmp::Ordering::Greater => inversions += 1,
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    v.sort_unstable();
    let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
    Some((sign, ChargedSequence::canonical(k, v)))
}

/// `𝔵(λ) = (2 − 2λ̄_1, 4 − 2λ̄_2, …)`, charge zero.
pub fn to_sequence(p: &Partition) -> ChargedSequence {
    to_sequence_charged(p, 0)
}

/// The charge-`k` sequence `x_i = 2i + 2k − 2λ̄_i`.
pub fn to_sequence_charged(p: &Partition, k: i64) -> ChargedSequence {
    let dual = p.dual();
    let head = dual.parts().iter().enumerate().map(|(i, &d)| vacuum_entry(k, i + 1) - 2 * d as i64).collect();
    ChargedSequence::canonical(k, head)
}

pub fn from_sequence(s: &ChargedSequence) -> Result<Partition> {
    if s.charge != 0 {
        return Err(Error::NonzeroCharge(s.charge));
    }
    Ok(s.shape())
}

impl fmt::Display for ChargedSequence {
    /// The head and two tail entries: `(0,2,6,8,...)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for x in self.prefix(self.head.len() + 2) {
            write!(f, "{x},")?;
        }
        write!(f, "...)")
    }
}

impl FromStr for ChargedSequence {
    type Err = Error;

    /// `vac:k` or `seq:k:x1,x2,...`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::Parse(format!("bad sequence {s:?}; expected vac:k or seq:k:x1,x2,..."));
        if let Some(k) = t.strip_prefix("vac:") {
            let k: i64 = k.trim().parse().map_err(|_| bad())?;
            return Ok(Self::vacuum(k));
        }
        let rest = t.strip_prefix("seq:").ok_or_else(bad)?;
        let (k, head) = rest.split_once(':').unwrap_or((rest, ""));
        let k: i64 = k.trim().parse().map_err(|_| bad())?;
        let head = if head.trim().is_empty() {
            Vec::new()
        } else {
            head.split(',').map(|x| x.trim().parse::<i64>().map_err(|_| bad())).collect::<Result<Vec<_>>>()?
        };
        Self::new(k, head)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use proptest::prelude::*;

    fn seq(k: i64, head: &[i64]) -> ChargedSequence {
        ChargedSequence::new(k, head.to_vec()).unwrap()
    }

    #[test]
    fn bijection_examples() {
        assert_eq!(to_sequence(&part![2]).prefix(4), vec![0, 2, 6, 8]);
        assert_eq!(to_sequence(&part![2, 1]).prefix(4), vec![-2, 2, 6, 8]);
        assert_eq!(to_sequence(&part![]), ChargedSequence::vacuum(0));
        assert_eq!(from_sequence(&seq(0, &[0])).unwrap(), part![1]);
        assert_eq!(from_sequence(&ChargedSequence::vacuum(0)).unwrap(), part![]);
        assert_eq!(from_sequence(&seq(0, &[-2])).unwrap(), part![1, 1]);
        assert!(from_sequence(&ChargedSequence::vacuum(1)).is_err());
    }

    #[test]
    fn energy_examples() {
        assert_eq!(ChargedSequence::vacuum(0).energy(), 0);
        assert_eq!(energy(&[0, 2], 0), 2);
        assert_eq!(energy(&[2, 2], 0), 1);
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize(&[2, 4], 0), Some((1, ChargedSequence::vacuum(0))));
        assert_eq!(normalize(&[4, 2], 0), Some((-1, ChargedSequence::vacuum(0))));
        assert_eq!(normalize(&[2, 2], 0), None);
        // an entry that collides with the tail
        assert_eq!(normalize(&[8, 2], 0), None);
        // every even number past the head is in the tail
        assert_eq!(normalize(&[10, 2, 4], 0), None);
        let (s, x) = normalize(&[0, -2, 4], 0).unwrap();
        assert_eq!((s, x.head().to_vec()), (-1, vec![-2, 0, 4]));
    }

    #[test]
    fn canonical_form_and_display() {
        assert_eq!(seq(0, &[2, 4]), ChargedSequence::vacuum(0));
        assert_eq!(seq(0, &[0, 2]).to_string(), "(0,2,6,8,...)");
        assert_eq!(ChargedSequence::vacuum(1).to_string(), "(4,6,...)");
        assert_eq!(ChargedSequence::vacuum(0).shift(1), ChargedSequence::vacuum(1));
        assert_eq!(seq(0, &[0, 2]).shift(1), seq(1, &[2, 4]));
        assert!(ChargedSequence::new(0, vec![2, 6]).is_err());
        assert!(ChargedSequence::new(0, vec![1]).is_err());
        assert!(ChargedSequence::new(0, vec![4, 2]).is_err());
        assert_eq!("vac:1".parse::<ChargedSequence>().unwrap(), ChargedSequence::vacuum(1));
        assert_eq!("seq:0:0,2".parse::<ChargedSequence>().unwrap(), seq(0, &[0, 2]));
        assert!("nope".parse::<ChargedSequence>().is_err());
    }

    #[test]
    fn positions() {
        let x = seq(0, &[0, 2]);
        assert_eq!(x.position(0), Some(1));
        assert_eq!(x.position(6), Some(3));
        assert_eq!(x.position(4), None);
        assert_eq!(x.count_below(4), 2);
        assert_eq!(x.count_below(10), 4);
        assert_eq!(x.count_below(-4), 0);
    }

    #[test]
    fn serde_shape() {
        let x = seq(0, &[0, 2]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"charge":0,"head":[0,2]}"#);
        assert_eq!(serde_json::from_str::<ChargedSequence>(&s).unwrap(), x);
        assert!(serde_json::from_str::<ChargedSequence>(r#"{"charge":0,"head":[2,0]}"#).is_err());
    }

    fn arb_partition(max: usize) -> impl Strategy<Value = Partition> {
        (0..=max).prop_flat_map(|n| {
            let all = Partition::all_of_size(n);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
    }

    proptest! {
        #[test]
        fn bijection_roundtrip(p in arb_partition(12), k in -3i64..=3) {
            let x = to_sequence(&p);
            prop_assert_eq!(from_sequence(&x).unwrap(), p.clone());
            prop_assert_eq!(x.energy(), p.size() as i64);
            let y = to_sequence_charged(&p, k);
            prop_assert_eq!(y.clone(), x.shift(k));
            prop_assert_eq!(y.shape(), p.clone());
            prop_assert_eq!(y.energy(), p.size() as i64);
        }

        #[test]
        fn normalize_sign_matches_swap_parity(p in arb_partition(8), i in 0usize..6, j in 0usize..6) {
            let x = to_sequence(&p);
            let mut v = x.prefix(x.head().len().max(6));
            prop_assume!(i != j);
            v.swap(i, j);
            let (s, y) = normalize(&v, 0).unwrap();
            prop_assert_eq!(s, -1);
            prop_assert_eq!(y, x);
        }
    }
}
