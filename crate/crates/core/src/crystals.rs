//! Brute-force crystal oracle. Single-factor crystals are tabulated once,
//! tensor words are acted on with the signature rule, and highest weight
//! words of a tensor power are counted by weight.
//!
//! Tensor words are stored with index 0 as the rightmost factor.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::exact::HalfInt;
use crate::multiplicity::{mult_a_int, mult_bc_int, mult_d_int, weyl_dim, LieType};
use crate::partitions::{Partition, TypeDWeight};

/// Default cap on `|B|^k` for [`multiplicity_oracle`].
pub const DEFAULT_BUDGET: u128 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CrystalError {
    #[error("crystal has {size} words, budget is {budget}")]
    BudgetExceeded { size: u128, budget: u128 },
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("index {i} outside the index set 1..={max}")]
    BadIndex { i: usize, max: usize },
    #[error("letter {0:?} is not in this crystal")]
    UnknownLetter(Letter),
    #[error("internal: type C letter count {got} differs from {expected}")]
    LetterCount { got: usize, expected: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Raise,
    Lower,
}

/// Content of one tensor factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Letter {
    /// Type A column: a subset of `1..=n`, sorted.
    Subset(Vec<u8>),
    /// Type B/D spinor: signs `+1` / `-1`.
    Spinor(Vec<i8>),
    /// Type C: exterior degree tag and a Kashiwara-Nakashima column, written as
    /// a word in the vector crystal (`j` for letter j, `-j` for j-bar).
    Kn { degree: u8, column: Vec<i8> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorWord {
    pub factors: Vec<Letter>,
}

/// A finite crystal with tabulated operators.
#[derive(Debug, Clone)]
pub struct LetterCrystal {
    ty: LieType,
    rank: usize,
    letters: Vec<Letter>,
    index: HashMap<Letter, usize>,
    /// Twice the weight of each letter.
    wt2: Vec<Vec<i64>>,
    e: Vec<Vec<Option<usize>>>,
    f: Vec<Vec<Option<usize>>>,
    eps: Vec<Vec<u32>>,
    phi: Vec<Vec<u32>>,
}

fn num_ops(ty: LieType, n: usize) -> usize {
    match ty {
        LieType::A => n.saturating_sub(1),
        LieType::D if n == 1 => 0,
        _ => n,
    }
}

impl LetterCrystal {
    fn build(
        ty: LieType,
        rank: usize,
        letters: Vec<Letter>,
        wt2: Vec<Vec<i64>>,
        f_op: impl Fn(usize, &Letter) -> Option<Letter>,
    ) -> Self {
        let m = letters.len();
        let index: HashMap<Letter, usize> =
            letters.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        let r = num_ops(ty, rank);
        let mut f = vec![vec![None; m]; r];
        let mut e = vec![vec![None; m]; r];
        for i in 0..r {
            for b in 0..m {
                if let Some(l) = f_op(i + 1, &letters[b]) {
                    let t = index[&l];
                    f[i][b] = Some(t);
                    assert!(e[i][t].is_none(), "f_{} is not injective", i + 1);
                    e[i][t] = Some(b);
                }
            }
        }
        let string_len = |tab: &Vec<Option<usize>>, mut b: usize| {
            let mut c = 0;
            while let Some(t) = tab[b] {
                b = t;
                c += 1;
            }
            c
        };
        let eps = (0..r).map(|i| (0..m).map(|b| string_len(&e[i], b)).collect()).collect();
        let phi = (0..r).map(|i| (0..m).map(|b| string_len(&f[i], b)).collect()).collect();
        LetterCrystal { ty, rank, letters, index, wt2, e, f, eps, phi }
    }

    pub fn lie_type(&self) -> LieType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Size of the index set `I`; operators are numbered `1..=index_count()`.
    pub fn index_count(&self) -> usize {
        self.e.len()
    }

    /// Twice the weight of a letter.
    pub fn letter_weight2(&self, b: usize) -> &[i64] {
        &self.wt2[b]
    }

    pub fn index_of(&self, l: &Letter) -> Option<usize> {
        self.index.get(l).copied()
    }

    /// `<wt, alpha_i^v>` from a doubled weight.
    pub fn coroot_pairing(&self, w2: &[i64], i: usize) -> i64 {
        let n = self.rank;
        if i < n {
            (w2[i - 1] - w2[i]) / 2
        } else {
            match self.ty {
                LieType::B => w2[n - 1],
                LieType::C => w2[n - 1] / 2,
                LieType::D => (w2[n - 2] + w2[n - 1]) / 2,
                LieType::A => unreachable!("gl_n has no node n"),
            }
        }
    }

    /// Reduced signature of a word for operator `i`: the positions (factor
    /// indices) of uncancelled minuses and pluses, each listed left to right.
    fn reduced(&self, word: &[usize], i: usize) -> (Vec<usize>, Vec<usize>) {
        let mut minus: Vec<usize> = Vec::new();
        let mut plus: Vec<usize> = Vec::new();
        // Read from the leftmost factor (highest index) to the rightmost.
        for pos in (0..word.len()).rev() {
            let b = word[pos];
            for _ in 0..self.phi[i - 1][b] {
                if plus.pop().is_none() {
                    minus.push(pos);
                }
            }
            for _ in 0..self.eps[i - 1][b] {
                plus.push(pos);
            }
        }
        (minus, plus)
    }

    fn check_index(&self, i: usize) -> Result<(), CrystalError> {
        if i == 0 || i > self.index_count() {
            Err(CrystalError::BadIndex { i, max: self.index_count() })
        } else {
            Ok(())
        }
    }

    /// Signature rule on an index word. `None` is the zero element.
    pub fn apply_indices(&self, word: &[usize], i: usize, dir: Direction) -> Result<Option<Vec<usize>>, CrystalError> {
        self.check_index(i)?;
        let (minus, plus) = self.reduced(word, i);
        let target = match dir {
            Direction::Raise => plus.first().copied(),
            Direction::Lower => minus.last().copied(),
        };
        Ok(target.map(|pos| {
            let mut w = word.to_vec();
            let tab = match dir {
                Direction::Raise => &self.e[i - 1],
                Direction::Lower => &self.f[i - 1],
            };
            w[pos] = tab[w[pos]].expect("signature position admits the operator");
            w
        }))
    }

    /// `(epsilon_i, phi_i)` of a word.
    pub fn string_lengths(&self, word: &[usize], i: usize) -> (usize, usize) {
        let (minus, plus) = self.reduced(word, i);
        (plus.len(), minus.len())
    }

    pub fn word_weight2(&self, word: &[usize]) -> Vec<i64> {
        let mut w = vec![0i64; self.rank];
        for &b in word {
            for (x, y) in w.iter_mut().zip(&self.wt2[b]) {
                *x += y;
            }
        }
        w
    }

    pub fn to_indices(&self, w: &TensorWord) -> Result<Vec<usize>, CrystalError> {
        w.factors
            .iter()
            .map(|l| self.index_of(l).ok_or_else(|| CrystalError::UnknownLetter(l.clone())))
            .collect()
    }

    pub fn to_word(&self, idx: &[usize]) -> TensorWord {
        TensorWord { factors: idx.iter().map(|&b| self.letters[b].clone()).collect() }
    }

    /// `e~_i` or `f~_i` of a tensor word.
    pub fn apply_operator(&self, w: &TensorWord, i: usize, dir: Direction) -> Result<Option<TensorWord>, CrystalError> {
        let idx = self.to_indices(w)?;
        Ok(self.apply_indices(&idx, i, dir)?.map(|v| self.to_word(&v)))
    }
}

/// Single-factor crystal `V` for the duality of the given type and rank:
/// exterior algebra of the natural representation for A and C, spinors for B
/// and D.
pub fn letter_crystal(ty: LieType, n: usize) -> Result<LetterCrystal, CrystalError> {
    if n == 0 {
        return Err(CrystalError::ZeroRank);
    }
    match ty {
        LieType::A => Ok(type_a_crystal(n)),
        LieType::B | LieType::D => Ok(spinor_crystal(ty, n)),
        LieType::C => type_c_crystal(n),
    }
}

fn type_a_crystal(n: usize) -> LetterCrystal {
    let mut letters = Vec::new();
    let mut wt2 = Vec::new();
    for mask in 0u32..(1 << n) {
        let s: Vec<u8> = (0..n).filter(|&j| mask >> j & 1 == 1).map(|j| j as u8 + 1).collect();
        wt2.push((0..n).map(|j| 2 * (mask >> j & 1) as i64).collect());
        letters.push(Letter::Subset(s));
    }
    LetterCrystal::build(LieType::A, n, letters, wt2, |i, l| {
        let Letter::Subset(s) = l else { unreachable!() };
        let (a, b) = (i as u8, i as u8 + 1);
        if s.contains(&a) && !s.contains(&b) {
            let mut t: Vec<u8> = s.iter().map(|&x| if x == a { b } else { x }).collect();
            t.sort_unstable();
            Some(Letter::Subset(t))
        } else {
            None
        }
    })
}

fn spinor_crystal(ty: LieType, n: usize) -> LetterCrystal {
    let mut letters = Vec::new();
    let mut wt2 = Vec::new();
    for mask in 0u32..(1 << n) {
        let s: Vec<i8> = (0..n).map(|j| if mask >> j & 1 == 1 { -1 } else { 1 }).collect();
        wt2.push(s.iter().map(|&x| x as i64).collect());
        letters.push(Letter::Spinor(s));
    }
    LetterCrystal::build(ty, n, letters, wt2, move |i, l| {
        let Letter::Spinor(s) = l else { unreachable!() };
        let mut t = s.clone();
        if i < n {
            if s[i - 1] == 1 && s[i] == -1 {
                t[i - 1] = -1;
                t[i] = 1;
                return Some(Letter::Spinor(t));
            }
            return None;
        }
        match ty {
            LieType::B if s[n - 1] == 1 => {
                t[n - 1] = -1;
                Some(Letter::Spinor(t))
            }
            LieType::D if s[n - 2] == 1 && s[n - 1] == 1 => {
                t[n - 2] = -1;
                t[n - 1] = -1;
                Some(Letter::Spinor(t))
            }
            _ => None,
        }
    })
}

/// Vector representation of `C_n`: letters `1..n` then `-n..-1`.
fn vector_c(n: usize) -> LetterCrystal {
    let ni = n as i8;
    let vals: Vec<i8> = (1..=ni).chain((1..=ni).rev().map(|x| -x)).collect();
    let letters: Vec<Letter> = vals.iter().map(|&v| Letter::Kn { degree: 1, column: vec![v] }).collect();
    let wt2 = vals
        .iter()
        .map(|&v| {
            let mut w = vec![0i64; n];
            w[v.unsigned_abs() as usize - 1] = if v > 0 { 2 } else { -2 };
            w
        })
        .collect();
    LetterCrystal::build(LieType::C, n, letters, wt2, move |i, l| {
        let Letter::Kn { column, .. } = l else { unreachable!() };
        let v = column[0];
        let ii = i as i8;
        let out = if i < n {
            if v == ii {
                Some(ii + 1)
            } else if v == -(ii + 1) {
                Some(-ii)
            } else {
                None
            }
        } else if v == ni {
            Some(-ni)
        } else {
            None
        };
        out.map(|x| Letter::Kn { degree: 1, column: vec![x] })
    })
}

/// Words of the connected component of `B(varpi_h)` inside `B(varpi_1)^{h}`.
fn kn_columns(base: &LetterCrystal, h: usize) -> Vec<Vec<usize>> {
    if h == 0 {
        return vec![Vec::new()];
    }
    let n = base.rank();
    let m = base.len();
    let mut target = vec![0i64; n];
    for x in target.iter_mut().take(h) {
        *x = 2;
    }
    // Find the highest weight word of weight varpi_h.
    let total = m.pow(h as u32);
    let mut start = None;
    for code in 0..total {
        let mut c = code;
        let word: Vec<usize> = (0..h)
            .map(|_| {
                let d = c % m;
                c /= m;
                d
            })
            .collect();
        if base.word_weight2(&word) != target {
            continue;
        }
        let hw = (1..=base.index_count()).all(|i| base.string_lengths(&word, i).0 == 0);
        if hw {
            start = Some(word);
            break;
        }
    }
    let start = start.expect("varpi_h occurs in the tensor power");
    let mut seen = vec![start.clone()];
    let mut set: std::collections::HashSet<Vec<usize>> = [start.clone()].into_iter().collect();
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        for i in 1..=base.index_count() {
            if let Some(v) = base.apply_indices(&w, i, Direction::Lower).expect("valid index") {
                if set.insert(v.clone()) {
                    seen.push(v.clone());
                    queue.push_back(v);
                }
            }
        }
    }
    seen
}

fn type_c_crystal(n: usize) -> Result<LetterCrystal, CrystalError> {
    let base = vector_c(n);
    let base_val = |b: usize| match &base.letters()[b] {
        Letter::Kn { column, .. } => column[0],
        _ => unreachable!(),
    };
    let columns: Vec<Vec<Vec<usize>>> = (0..=n).map(|h| kn_columns(&base, h)).collect();
    let mut letters = Vec::new();
    let mut wt2 = Vec::new();
    let mut inner: HashMap<Letter, Vec<usize>> = HashMap::new();
    for j in 0..=2 * n {
        let top = j.min(2 * n - j);
        for h in (0..=top).rev().filter(|h| (j - h) % 2 == 0) {
            for w in &columns[h] {
                let l = Letter::Kn { degree: j as u8, column: w.iter().map(|&b| base_val(b)).collect() };
                wt2.push(base.word_weight2(w));
                inner.insert(l.clone(), w.clone());
                letters.push(l);
            }
        }
    }
    let expected = 1usize << (2 * n);
    if letters.len() != expected {
        return Err(CrystalError::LetterCount { got: letters.len(), expected });
    }
    Ok(LetterCrystal::build(LieType::C, n, letters, wt2, |i, l| {
        let Letter::Kn { degree, .. } = l else { unreachable!() };
        let w = &inner[l];
        base.apply_indices(w, i, Direction::Lower)
            .expect("valid index")
            .map(|v| Letter::Kn { degree: *degree, column: v.iter().map(|&b| base_val(b)).collect() })
    }))
}

/// Highest weight counts of `V^{tensor k}`, keyed by the doubled weight.
#[derive(Debug, Clone, Serialize)]
pub struct OracleTable {
    pub ty: LieType,
    pub n: usize,
    /// Number of tensor factors.
    pub k: usize,
    pub counts: BTreeMap<Vec<i64>, u64>,
}

/// A dominant weight of the tensor power, translated to the shape that the
/// multiplicity formulas take.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum OracleWeight {
    Partition(Partition),
    TypeD(TypeDWeight),
}

impl OracleTable {
    pub fn weight(&self, w2: &[i64]) -> Vec<HalfInt> {
        w2.iter().map(|&x| HalfInt::from_doubled(x)).collect()
    }

    /// Translate a doubled weight to `(formula weight, p)`. For B and D with
    /// an odd number of factors the spin shift `p = 1` is removed.
    pub fn formula_weight(&self, w2: &[i64]) -> (OracleWeight, i64) {
        let p = (self.k % 2) as i64;
        match self.ty {
            LieType::A | LieType::C => {
                let v = w2.iter().map(|x| x / 2).collect();
                (OracleWeight::Partition(Partition::new(v).expect("dominant")), 0)
            }
            LieType::B => {
                let v = w2.iter().map(|x| (x - p) / 2).collect();
                (OracleWeight::Partition(Partition::new(v).expect("dominant")), p)
            }
            LieType::D => {
                let n = w2.len();
                let mut v: Vec<i64> = w2.iter().map(|x| (x - p) / 2).collect();
                if p == 1 {
                    v[n - 1] = (w2[n - 1].abs() - 1) / 2;
                    (OracleWeight::Partition(Partition::new(v).expect("dominant")), 1)
                } else {
                    (OracleWeight::TypeD(TypeDWeight::new(v).expect("dominant")), 0)
                }
            }
        }
    }

    /// `sum_lambda count(lambda) * dim V(lambda)`.
    pub fn dimension_sum(&self) -> BigInt {
        self.counts
            .iter()
            .map(|(w2, &c)| {
                weyl_dim(self.ty, self.n, &self.weight(w2)).expect("dominant weight") * BigInt::from(c)
            })
            .sum()
    }
}

/// Count highest weight words of `V^{tensor k}` by weight.
pub fn multiplicity_oracle(ty: LieType, n: usize, k: usize) -> Result<OracleTable, CrystalError> {
    multiplicity_oracle_with_budget(ty, n, k, DEFAULT_BUDGET)
}

pub fn multiplicity_oracle_with_budget(
    ty: LieType,
    n: usize,
    k: usize,
    budget: u128,
) -> Result<OracleTable, CrystalError> {
    let c = letter_crystal(ty, n)?;
    let size = (c.len() as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if size > budget {
        return Err(CrystalError::BudgetExceeded { size, budget });
    }
    let r = c.index_count();
    let counts = if k == 0 {
        BTreeMap::from([(vec![0i64; n], 1u64)])
    } else {
        (0..c.len())
            .into_par_iter()
            .map(|first| {
                let mut acc = BTreeMap::new();
                let unmatched = vec![0u32; r];
                extend(&c, k, first, &unmatched, &vec![0i64; n], 0, &mut acc);
                acc
            })
            .reduce(BTreeMap::new, |mut a, b| {
                for (w, x) in b {
                    *a.entry(w).or_insert(0) += x;
                }
                a
            })
    };
    Ok(OracleTable { ty, n, k, counts })
}

/// Prepend letter `b` on the left of a partial word of length `depth` that is
/// highest weight so far, tracking the uncancelled minus count per index.
fn extend(
    c: &LetterCrystal,
    k: usize,
    b: usize,
    unmatched: &[u32],
    wt: &[i64],
    depth: usize,
    acc: &mut BTreeMap<Vec<i64>, u64>,
) {
    let mut next = Vec::with_capacity(unmatched.len());
    for (i, &m) in unmatched.iter().enumerate() {
        let eps = c.eps[i][b];
        if eps > m {
            return;
        }
        next.push(c.phi[i][b] + m - eps);
    }
    let w: Vec<i64> = wt.iter().zip(&c.wt2[b]).map(|(x, y)| x + y).collect();
    if depth + 1 == k {
        *acc.entry(w).or_insert(0) += 1;
        return;
    }
    for nb in 0..c.len() {
        extend(c, k, nb, &next, &w, depth + 1, acc);
    }
}

/// A highest weight whose crystal count differs from the product formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleMismatch {
    pub weight: Vec<HalfInt>,
    pub oracle: u64,
    pub formula: BigInt,
}

/// Compare every count in `t` with the q = 1 product formula of the matching
/// dual pair (`k` factors of type A or C; `2k + p` factors of type B or D).
pub fn formula_mismatches(t: &OracleTable) -> Vec<OracleMismatch> {
    let n = t.n;
    let half = t.k / 2;
    t.counts
        .iter()
        .filter_map(|(w2, &c)| {
            let (w, p) = t.formula_weight(w2);
            let formula = match (t.ty, &w) {
                (LieType::A, OracleWeight::Partition(l)) => mult_a_int(l, n, t.k),
                (LieType::C, OracleWeight::Partition(l)) => mult_bc_int(l, n, t.k, 1),
                (LieType::B, OracleWeight::Partition(l)) => mult_bc_int(l, n, half, p),
                (LieType::D, OracleWeight::Partition(l)) => mult_d_int(l, n, half, p),
                (LieType::D, OracleWeight::TypeD(d)) => mult_d_int(&d.abs_partition(), n, half, p),
                _ => BigInt::from(-1),
            };
            (formula != BigInt::from(c)).then(|| OracleMismatch { weight: t.weight(w2), oracle: c, formula })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_words(m: usize, k: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for _ in 0..k {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (0..m).map(move |b| {
                        let mut v = w.clone();
                        v.push(b);
                        v
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn operator_examples() {
        let b = letter_crystal(LieType::B, 1).unwrap();
        let w = TensorWord { factors: vec![Letter::Spinor(vec![-1])] };
        let r = b.apply_operator(&w, 1, Direction::Raise).unwrap().unwrap();
        assert_eq!(r.factors, vec![Letter::Spinor(vec![1])]);
        assert_eq!(b.apply_operator(&r, 1, Direction::Raise).unwrap(), None);

        let a = letter_crystal(LieType::A, 2).unwrap();
        let one = Letter::Subset(vec![1]);
        let w = TensorWord { factors: vec![one.clone(), one.clone()] };
        let low = a.apply_operator(&w, 1, Direction::Lower).unwrap().unwrap();
        // rightmost factor is index 0: [{1}] (x) [{2}] in left-to-right notation
        assert_eq!(low.factors, vec![Letter::Subset(vec![2]), one]);
        assert!(a.apply_operator(&w, 2, Direction::Lower).is_err());
    }

    #[test]
    fn letter_counts() {
        for n in 1..=3 {
            assert_eq!(letter_crystal(LieType::A, n).unwrap().len(), 1 << n);
            assert_eq!(letter_crystal(LieType::B, n).unwrap().len(), 1 << n);
            assert_eq!(letter_crystal(LieType::C, n).unwrap().len(), 1 << (2 * n));
            assert_eq!(letter_crystal(LieType::D, n).unwrap().len(), 1 << n);
        }
        assert_eq!(letter_crystal(LieType::D, 1).unwrap().index_count(), 0);
        assert!(letter_crystal(LieType::A, 0).is_err());
    }

    #[test]
    fn oracle_examples() {
        let t = multiplicity_oracle(LieType::A, 2, 2).unwrap();
        let want: BTreeMap<Vec<i64>, u64> = [
            (vec![0, 0], 1),
            (vec![2, 0], 2),
            (vec![2, 2], 3),
            (vec![4, 0], 1),
            (vec![4, 2], 2),
            (vec![4, 4], 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(t.counts, want);
        assert_eq!(t.dimension_sum(), BigInt::from(16));

        let t = multiplicity_oracle(LieType::B, 1, 2).unwrap();
        let want: BTreeMap<Vec<i64>, u64> = [(vec![0], 1), (vec![2], 1)].into_iter().collect();
        assert_eq!(t.counts, want);

        for ty in [LieType::A, LieType::B, LieType::C, LieType::D] {
            let t = multiplicity_oracle(ty, 2, 0).unwrap();
            assert_eq!(t.counts, BTreeMap::from([(vec![0, 0], 1)]));
        }
    }

    #[test]
    fn budget_is_enforced() {
        let e = multiplicity_oracle_with_budget(LieType::C, 2, 3, 1000).unwrap_err();
        assert!(matches!(e, CrystalError::BudgetExceeded { size: 4096, budget: 1000 }));
    }

    /// Highest weight counting by brute force over every word, as an
    /// independent check of the pruned search.
    fn brute_counts(c: &LetterCrystal, k: usize) -> BTreeMap<Vec<i64>, u64> {
        let mut out = BTreeMap::new();
        for w in all_words(c.len(), k) {
            let hw = (1..=c.index_count())
                .all(|i| c.apply_indices(&w, i, Direction::Raise).unwrap().is_none());
            if hw {
                *out.entry(c.word_weight2(&w)).or_insert(0) += 1;
            }
        }
        out
    }

    #[test]
    fn pruned_search_matches_brute_force() {
        for (ty, n, k) in [
            (LieType::A, 3, 3),
            (LieType::B, 2, 4),
            (LieType::C, 2, 2),
            (LieType::D, 2, 4),
            (LieType::D, 3, 3),
            (LieType::C, 1, 4),
        ] {
            let c = letter_crystal(ty, n).unwrap();
            let t = multiplicity_oracle(ty, n, k).unwrap();
            assert_eq!(t.counts, brute_counts(&c, k), "{ty:?} n={n} k={k}");
        }
    }

    #[test]
    fn raise_lower_inverse_and_string_axiom() {
        for (ty, n, k) in [
            (LieType::A, 3, 3),
            (LieType::B, 2, 3),
            (LieType::C, 2, 2),
            (LieType::D, 2, 3),
            (LieType::D, 3, 2),
            (LieType::C, 1, 3),
        ] {
            let c = letter_crystal(ty, n).unwrap();
            assert!(c.len().pow(k as u32) <= 10_000);
            for w in all_words(c.len(), k) {
                let w2 = c.word_weight2(&w);
                for i in 1..=c.index_count() {
                    let (eps, phi) = c.string_lengths(&w, i);
                    assert_eq!(c.coroot_pairing(&w2, i) + eps as i64, phi as i64);
                    if let Some(up) = c.apply_indices(&w, i, Direction::Raise).unwrap() {
                        assert_eq!(c.apply_indices(&up, i, Direction::Lower).unwrap(), Some(w.clone()));
                    }
                    if let Some(dn) = c.apply_indices(&w, i, Direction::Lower).unwrap() {
                        assert_eq!(c.apply_indices(&dn, i, Direction::Raise).unwrap(), Some(w.clone()));
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_agrees_with_product_formulas() {
        for (ty, n, k) in [(LieType::A, 2, 3), (LieType::B, 2, 3), (LieType::C, 2, 2), (LieType::D, 2, 4), (LieType::D, 2, 3)] {
            let t = multiplicity_oracle(ty, n, k).unwrap();
            assert_eq!(formula_mismatches(&t), vec![], "{ty:?} n={n} k={k}");
        }
    }

    #[test]
    fn dimension_sums_are_powers() {
        for (ty, n, k, log_dim) in [
            (LieType::A, 3, 3, 3),
            (LieType::B, 2, 3, 2),
            (LieType::C, 2, 2, 4),
            (LieType::D, 2, 4, 2),
            (LieType::D, 3, 3, 3),
        ] {
            let t = multiplicity_oracle(ty, n, k).unwrap();
            assert_eq!(t.dimension_sum(), BigInt::from(1) << (log_dim * k));
        }
    }
}
