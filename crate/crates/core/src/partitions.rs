//! Partitions, type-D weights, complements inside a box and the coordinate
//! systems used by the multiplicity formulas and measures.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exact::HalfInt;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing and nonnegative: {0:?}")]
    NotAPartition(Vec<i64>),
    #[error("not a dominant type D weight: {0:?}")]
    NotDominantD(Vec<i64>),
    #[error("{lambda} does not fit in a box with {rows} rows and {cols} columns")]
    OutOfBox { lambda: String, rows: i64, cols: i64 },
    #[error("cannot parse {0:?} as a weight")]
    Parse(String),
    #[error("parity parameter p must be 0 or 1, got {0}")]
    BadParity(i64),
}

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    pub fn new(mut parts: Vec<i64>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.iter().any(|&x| x < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotAPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// `cols^rows`, the full rectangle.
    pub fn rectangle(rows: i64, cols: i64) -> Self {
        if cols <= 0 || rows <= 0 {
            return Self::empty();
        }
        Partition {
            parts: vec![cols; rows as usize],
        }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Zero-based part access, zero past the end.
    pub fn part(&self, i: usize) -> i64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// `sum_i (i-1) * lambda_i` with one-based `i`.
    pub fn weighted_size(&self) -> i64 {
        self.parts.iter().enumerate().map(|(i, &x)| i as i64 * x).sum()
    }

    /// The parts padded with zeros to length `n` (never truncates).
    pub fn padded(&self, n: usize) -> Vec<i64> {
        let mut v = self.parts.clone();
        if v.len() < n {
            v.resize(n, 0);
        }
        v
    }

    pub fn fits_in(&self, rows: i64, cols: i64) -> bool {
        self.parts.len() as i64 <= rows && self.part(0) <= cols
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.part(0);
        let parts = (1..=w)
            .map(|c| self.parts.iter().filter(|&&x| x >= c).count() as i64)
            .collect();
        Partition { parts }
    }

    /// `lambda-bar`: parts `k - lambda_{n+1-i}` inside the `n x k` box.
    pub fn complement(&self, n: i64, k: i64) -> Result<Partition, PartitionError> {
        self.check_box(n, k)?;
        let nn = n as usize;
        let parts = (0..nn).map(|i| k - self.part(nn - 1 - i)).collect();
        Partition::new(parts)
    }

    pub fn check_box(&self, n: i64, k: i64) -> Result<(), PartitionError> {
        if self.fits_in(n, k) {
            Ok(())
        } else {
            Err(PartitionError::OutOfBox {
                lambda: self.to_string(),
                rows: n,
                cols: k,
            })
        }
    }

    /// Add one box in row `i` (zero-based) if the result is still a partition.
    pub fn add_box(&self, i: usize) -> Option<Partition> {
        if i > self.parts.len() || (i > 0 && self.part(i - 1) <= self.part(i)) {
            return None;
        }
        let mut v = self.padded(i + 1);
        v[i] += 1;
        Some(Partition { parts: v })
    }

    /// Remove one box from row `i` if the result is still a partition.
    pub fn remove_box(&self, i: usize) -> Option<Partition> {
        if i >= self.parts.len() || self.part(i) <= self.part(i + 1) {
            return None;
        }
        let mut v = self.parts.clone();
        v[i] -= 1;
        Partition::new(v).ok()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[i64]) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

fn parse_list(s: &str) -> Result<Vec<i64>, PartitionError> {
    let t = s.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| PartitionError::Parse(s.to_string())))
        .collect()
}

impl FromStr for Partition {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Partition::new(parse_list(s)?)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

/// A dominant type D weight of fixed rank: `w_1 >= ... >= w_{n-1} >= |w_n|`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeDWeight {
    parts: Vec<i64>,
}

impl TypeDWeight {
    pub fn new(parts: Vec<i64>) -> Result<Self, PartitionError> {
        let n = parts.len();
        let ok = match n {
            0 => true,
            _ => {
                let head_ok = parts[..n - 1].windows(2).all(|w| w[0] >= w[1]);
                let tail_ok = if n >= 2 {
                    parts[n - 2] >= parts[n - 1].abs()
                } else {
                    true
                };
                head_ok && tail_ok
            }
        };
        if ok {
            Ok(TypeDWeight { parts })
        } else {
            Err(PartitionError::NotDominantD(parts))
        }
    }

    pub fn from_partition(lambda: &Partition, n: usize) -> Result<Self, PartitionError> {
        if lambda.len() > n {
            return Err(PartitionError::NotDominantD(lambda.parts().to_vec()));
        }
        TypeDWeight::new(lambda.padded(n))
    }

    pub fn rank(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    /// The partition obtained by replacing the last entry with its absolute value.
    pub fn abs_partition(&self) -> Partition {
        let mut v = self.parts.clone();
        if let Some(x) = v.last_mut() {
            *x = x.abs();
        }
        Partition::new(v).expect("abs of a dominant D weight is a partition")
    }

    pub fn negate_last(&self) -> TypeDWeight {
        let mut v = self.parts.clone();
        if let Some(x) = v.last_mut() {
            *x = -*x;
        }
        TypeDWeight { parts: v }
    }
}

impl fmt::Display for TypeDWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl TypeDWeight {
    /// Parse a comma list and pad to rank `n`.
    pub fn parse(s: &str, n: usize) -> Result<Self, PartitionError> {
        let mut v = parse_list(s)?;
        if v.len() > n {
            return Err(PartitionError::NotDominantD(v));
        }
        v.resize(n, 0);
        TypeDWeight::new(v)
    }
}

impl Serialize for TypeDWeight {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

/// Which coordinate change to apply to a weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CoordSeries {
    A,
    BC,
    D,
    SoOddMeasure,
    SpMeasure,
    SoEvenMeasure,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeriesCoords {
    pub series: CoordSeries,
    pub values: Vec<HalfInt>,
}

impl SeriesCoords {
    /// Integer coordinates; panics on half-integers. Only call for series
    /// whose coordinates are integral for the given parity.
    pub fn as_ints(&self) -> Vec<i64> {
        self.values
            .iter()
            .map(|h| h.as_int().expect("integral coordinate"))
            .collect()
    }
}

/// Coordinates of a dominant weight of length `n` (zero-padded).
///
/// `weight` may have a negative last entry only for [`CoordSeries::D`].
pub fn coordinates(
    weight: &[i64],
    series: CoordSeries,
    n: usize,
    p: i64,
) -> Result<SeriesCoords, PartitionError> {
    if !(0..=1).contains(&p) {
        return Err(PartitionError::BadParity(p));
    }
    if weight.len() > n {
        return Err(PartitionError::NotAPartition(weight.to_vec()));
    }
    let mut w = weight.to_vec();
    w.resize(n, 0);
    match series {
        CoordSeries::D => {
            TypeDWeight::new(w.clone())?;
        }
        _ => {
            Partition::new(w.clone())?;
        }
    }
    let ni = n as i64;
    let values = w
        .iter()
        .enumerate()
        .map(|(idx, &x)| {
            let i = idx as i64 + 1;
            let base = x + ni - i;
            match series {
                CoordSeries::A => HalfInt::from_int(base),
                CoordSeries::BC => HalfInt::from_doubled(2 * base + p + 1),
                CoordSeries::D => HalfInt::from_doubled(2 * base + p),
                CoordSeries::SoOddMeasure => HalfInt::from_int(2 * base + 1),
                CoordSeries::SpMeasure => HalfInt::from_int(base + 1),
                CoordSeries::SoEvenMeasure => HalfInt::from_int(2 * base),
            }
        })
        .collect();
    Ok(SeriesCoords { series, values })
}

/// Every partition inside the `n x k` box, in increasing lexicographic order
/// of the zero-padded part vector.
pub fn enumerate_in_box(n: usize, k: i64) -> BoxPartitions {
    BoxPartitions {
        cur: Some(vec![0; n]),
        k,
    }
}

pub struct BoxPartitions {
    cur: Option<Vec<i64>>,
    k: i64,
}

impl Iterator for BoxPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.cur.take()?;
        let out = Partition::new(cur.clone()).expect("box iterator yields partitions");
        let mut nxt = cur;
        let pos = (0..nxt.len())
            .rev()
            .find(|&i| nxt[i] < self.k && (i == 0 || nxt[i] < nxt[i - 1]));
        if let Some(i) = pos {
            nxt[i] += 1;
            for x in nxt.iter_mut().skip(i + 1) {
                *x = 0;
            }
            self.cur = Some(nxt);
        }
        Some(out)
    }
}

/// All dominant type D weights of rank `n` with every `|w_i| <= k`.
pub fn enumerate_type_d(n: usize, k: i64) -> Vec<TypeDWeight> {
    let mut out = Vec::new();
    for lam in enumerate_in_box(n, k) {
        let w = TypeDWeight::from_partition(&lam, n).expect("fits");
        if n > 0 && w.parts()[n - 1] > 0 {
            out.push(w.negate_last());
        }
        out.push(w);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[i64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Independent conjugate: mark boxes in a grid and read column heights.
    fn conjugate_by_grid(l: &Partition) -> Partition {
        let w = l.part(0) as usize;
        let h = l.len();
        let mut grid = vec![vec![false; w]; h];
        for (r, &x) in l.parts().iter().enumerate() {
            grid[r][..x as usize].fill(true);
        }
        let cols = (0..w).map(|c| (0..h).filter(|&r| grid[r][c]).count() as i64).collect();
        Partition::new(cols).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[5, 4, 2, 2, 1]).conjugate(), p(&[5, 4, 2, 2, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), conjugate_by_grid(&p(&[3, 1])));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Partition::empty().complement(3, 2).unwrap(), Partition::rectangle(3, 2));
        assert_eq!(Partition::rectangle(3, 2).complement(3, 2).unwrap(), Partition::empty());
        let bar = p(&[5, 4, 4, 2, 1]).complement(5, 6).unwrap();
        assert_eq!(bar, p(&[5, 4, 2, 2, 1]));
        assert_eq!(bar.conjugate().padded(6), vec![5, 4, 2, 2, 1, 0]);
        assert!(p(&[3]).complement(1, 2).is_err());
        assert!(p(&[1, 1]).complement(1, 2).is_err());
    }

    #[test]
    fn weighted_size_examples() {
        assert_eq!(Partition::empty().weighted_size(), 0);
        assert_eq!(p(&[2, 1]).weighted_size(), 1);
        assert_eq!(p(&[5, 4, 4, 2, 1]).weighted_size(), 22);
    }

    #[test]
    fn coordinate_examples() {
        let ints = |c: SeriesCoords| c.as_ints();
        assert_eq!(ints(coordinates(&[], CoordSeries::A, 3, 0).unwrap()), vec![2, 1, 0]);
        assert_eq!(
            ints(coordinates(&[5, 4, 4, 2, 1], CoordSeries::A, 5, 0).unwrap()),
            vec![9, 7, 6, 3, 1]
        );
        assert_eq!(ints(coordinates(&[], CoordSeries::SoOddMeasure, 2, 0).unwrap()), vec![3, 1]);
        let bc = coordinates(&[1], CoordSeries::BC, 2, 0).unwrap();
        assert_eq!(bc.values, vec![HalfInt::from_doubled(5), HalfInt::from_doubled(1)]);
        let d = coordinates(&[2, -1], CoordSeries::D, 2, 1).unwrap();
        assert_eq!(d.values, vec![HalfInt::from_doubled(7), HalfInt::from_doubled(-1)]);
        assert!(coordinates(&[1, 2], CoordSeries::A, 2, 0).is_err());
        assert!(coordinates(&[1, -1], CoordSeries::A, 2, 0).is_err());
        assert!(coordinates(&[1], CoordSeries::BC, 1, 2).is_err());
    }

    #[test]
    fn box_enumeration_counts() {
        assert_eq!(enumerate_in_box(0, 3).collect::<Vec<_>>(), vec![Partition::empty()]);
        assert_eq!(enumerate_in_box(2, 2).count(), 6);
        assert_eq!(enumerate_in_box(3, 3).count(), 20);
        for n in 0..=6usize {
            for k in 0..=6i64 {
                let all: Vec<_> = enumerate_in_box(n, k).collect();
                let want = crate::exact::binomial(n as i64 + k, n as i64);
                assert_eq!(num_bigint::BigInt::from(all.len()), want);
                let set: std::collections::BTreeSet<_> = all.iter().cloned().collect();
                assert_eq!(set.len(), all.len());
                for l in &all {
                    assert!(l.fits_in(n as i64, k));
                    let bar = l.complement(n as i64, k).unwrap();
                    assert_eq!(l.size() + bar.size(), n as i64 * k);
                }
            }
        }
    }

    #[test]
    fn type_d_enumeration_and_parse() {
        // rank 2, bound 1: (0,0),(1,0),(1,1),(1,-1)
        assert_eq!(enumerate_type_d(2, 1).len(), 4);
        let w = TypeDWeight::parse("2,-1", 2).unwrap();
        assert_eq!(w.parts(), &[2, -1]);
        assert_eq!(w.abs_partition(), p(&[2, 1]));
        assert!(TypeDWeight::parse("1,-2", 2).is_err());
        assert_eq!("5,4,4,2,1".parse::<Partition>().unwrap(), p(&[5, 4, 4, 2, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,x".parse::<Partition>().is_err());
        assert_eq!(p(&[3, 1]).to_string(), "3,1");
    }

    #[test]
    fn box_moves() {
        let l = p(&[2, 1]);
        assert_eq!(l.add_box(0), Some(p(&[3, 1])));
        assert_eq!(l.add_box(1), Some(p(&[2, 2])));
        assert_eq!(l.add_box(2), Some(p(&[2, 1, 1])));
        assert_eq!(l.add_box(3), None);
        assert_eq!(l.remove_box(0), Some(p(&[1, 1])));
        assert_eq!(l.remove_box(1), Some(p(&[2])));
        assert_eq!(p(&[1, 1]).remove_box(0), None);
    }

    fn boxed() -> impl Strategy<Value = (Partition, i64, i64)> {
        (0i64..7, 0i64..7).prop_flat_map(|(n, k)| {
            proptest::collection::vec(0..=k, n as usize).prop_map(move |mut v| {
                v.sort_unstable_by(|a, b| b.cmp(a));
                (Partition::new(v).unwrap(), n, k)
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn prop_involutions((l, n, k) in boxed()) {
            prop_assert_eq!(l.conjugate().conjugate(), l.clone());
            prop_assert_eq!(l.conjugate(), conjugate_by_grid(&l));
            let bar = l.complement(n, k).unwrap();
            prop_assert_eq!(bar.complement(n, k).unwrap(), l.clone());
            // complement of the conjugate in the transposed box is the
            // conjugate of the complement
            prop_assert_eq!(l.conjugate().complement(k, n).unwrap(), bar.conjugate());
            prop_assert_eq!(l.size() + bar.size(), n * k);
        }

        #[test]
        fn prop_coords_strictly_decrease((l, n, _k) in boxed(), p in 0i64..2) {
            for s in [CoordSeries::A, CoordSeries::BC, CoordSeries::D, CoordSeries::SoOddMeasure,
                      CoordSeries::SpMeasure, CoordSeries::SoEvenMeasure] {
                let c = coordinates(l.parts(), s, n as usize, p).unwrap();
                prop_assert!(c.values.windows(2).all(|w| w[0] > w[1]));
            }
        }
    }
}
