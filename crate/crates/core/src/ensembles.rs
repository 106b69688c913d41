//! Probability measures on Young diagrams induced by the four skew Howe dual
//! pairs, their Krawtchouk coordinate form, the BC z-measure specialization,
//! q-deformed normalizations and samplers.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::exact::{
    binomial, factorial, gamma_half_integer, one_plus_q_pow, rational_json, ExactError, HalfInt,
    QLaurent, SqrtPiValue,
};
use crate::multiplicity::{
    int_weight, mult_a_int, mult_bc_int, mult_d_int, qdim, weyl_dim_int, LieType, MultError,
};
use crate::partitions::{enumerate_in_box, Partition, PartitionError};

/// Largest support (number of diagrams) that tables and inverse-CDF sampling accept.
pub const SUPPORT_LIMIT: u128 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnsembleError {
    #[error("kappa = {0} must be even for this dual pair")]
    Parity(usize),
    #[error("support of {0} diagrams exceeds the limit of {SUPPORT_LIMIT}")]
    SupportTooLarge(u128),
    #[error("unknown dual pair `{0}` (expected GL, SO-PIN, SP or O-SO)")]
    UnknownPair(String),
    #[error("|lambda| = {size} but m = {m}")]
    SizeMismatch { size: i64, m: i64 },
    #[error("epsilon orders differ ({0} vs {1}); the regularized values are not comparable")]
    PoleOrderMismatch(i64, i64),
    #[error("(alpha, beta) = ({0}, {1}) gives a non half-integral theta")]
    BadParameters(HalfInt, HalfInt),
    #[error("operation not defined for the GL pair")]
    NotForGl,
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Mult(#[from] MultError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// The dual pair acting on the exterior algebra.
///
/// For the non-GL pairs `n` is the rank `l` of the first group and `k` is
/// half the number of tensor factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pair {
    Gl,
    SoPin,
    Sp,
    OSo,
}

impl Pair {
    pub const ALL: [Pair; 4] = [Pair::Gl, Pair::SoPin, Pair::Sp, Pair::OSo];

    /// `(alpha, beta)` of the BC z-measure row matching this pair.
    pub fn jacobi_parameters(self) -> Option<(HalfInt, HalfInt)> {
        let h = HalfInt::from_doubled;
        match self {
            Pair::Gl => None,
            Pair::Sp => Some((h(1), h(1))),
            Pair::SoPin => Some((h(1), h(-1))),
            Pair::OSo => Some((h(-1), h(-1))),
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pair::Gl => "GL",
            Pair::SoPin => "SO-PIN",
            Pair::Sp => "SP",
            Pair::OSo => "O-SO",
        })
    }
}

impl FromStr for Pair {
    type Err = EnsembleError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().replace('_', "-").as_str() {
            "GL" => Ok(Pair::Gl),
            "SO-PIN" => Ok(Pair::SoPin),
            "SP" => Ok(Pair::Sp),
            "O-SO" => Ok(Pair::OSo),
            _ => Err(EnsembleError::UnknownPair(s.to_string())),
        }
    }
}

impl Serialize for Pair {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Number of diagrams in the `n x k` box.
pub fn box_count(n: usize, k: usize) -> u128 {
    binomial((n + k) as i64, n as i64).to_u128().unwrap_or(u128::MAX)
}

fn check_support(n: usize, k: usize) -> Result<(), EnsembleError> {
    let c = box_count(n, k);
    if c > SUPPORT_LIMIT {
        return Err(EnsembleError::SupportTooLarge(c));
    }
    Ok(())
}

/// `log2` of the total weight: `nk` for GL, `2nk` otherwise.
pub fn total_log2(pair: Pair, n: usize, k: usize) -> u64 {
    let nk = (n * k) as u64;
    match pair {
        Pair::Gl => nk,
        _ => 2 * nk,
    }
}

/// Unnormalized weight `dim V_{G1}(lambda) * mult(lambda)`; the weights sum to
/// `2^{total_log2}` over the box. The O-SO class of `lambda` with a nonzero
/// last row carries both signs of the last coordinate.
pub fn pair_weight(pair: Pair, n: usize, k: usize, lambda: &Partition) -> BigInt {
    let w = lambda.padded(n);
    match pair {
        Pair::Gl => weyl_dim_int(LieType::A, &w) * mult_a_int(lambda, n, k),
        Pair::SoPin => weyl_dim_int(LieType::B, &w) * mult_bc_int(lambda, n, k, 0),
        Pair::Sp => weyl_dim_int(LieType::C, &w) * mult_bc_int(lambda, n, k, 1),
        Pair::OSo => {
            let c = if w[n - 1] > 0 { 2 } else { 1 };
            weyl_dim_int(LieType::D, &w) * mult_d_int(lambda, n, k, 0) * c
        }
    }
}

/// Weights over the whole box in enumeration order, zero entries dropped.
pub fn measure_weights(pair: Pair, n: usize, k: usize) -> Result<Vec<(Partition, BigInt)>, EnsembleError> {
    check_support(n, k)?;
    let all: Vec<Partition> = enumerate_in_box(n, k as i64).collect();
    let weights: Vec<(Partition, BigInt)> = all
        .into_par_iter()
        .map(|l| {
            let w = if n == 0 { BigInt::one() } else { pair_weight(pair, n, k, &l) };
            (l, w)
        })
        .filter(|(_, w)| !w.is_zero())
        .collect();
    let total: BigInt = weights.iter().map(|(_, w)| w).sum();
    assert_eq!(
        total,
        BigInt::one() << total_log2(pair, n, k),
        "{pair} weights on the {n}x{k} box do not sum to the exterior algebra dimension"
    );
    Ok(weights)
}

/// Exact probability table of one dual pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasureTable {
    pub pair: Pair,
    pub n: usize,
    pub k: usize,
    pub entries: BTreeMap<Partition, BigRational>,
}

impl MeasureTable {
    pub fn prob(&self, lambda: &Partition) -> BigRational {
        self.entries.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn total(&self) -> BigRational {
        self.entries.values().sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|(l, p)| {
                serde_json::json!({
                    "lambda": l.parts(),
                    "prob": rational_json(p),
                    "decimal": format!("{:.12}", p.to_f64().unwrap_or(f64::NAN)),
                })
            })
            .collect();
        serde_json::json!({
            "pair": self.pair.to_string(),
            "n": self.n,
            "k": self.k,
            "total": rational_json(&self.total()),
            "entries": entries,
        })
    }
}

/// Exact measure table; panics if the probabilities fail to sum to 1.
pub fn measure_table(pair: Pair, n: usize, k: usize) -> Result<MeasureTable, EnsembleError> {
    let weights = measure_weights(pair, n, k)?;
    let denom = BigInt::one() << total_log2(pair, n, k);
    let entries: BTreeMap<Partition, BigRational> = weights
        .into_iter()
        .map(|(l, w)| (l, BigRational::new(w, denom.clone())))
        .collect();
    let t = MeasureTable { pair, n, k, entries };
    assert!(t.total().is_one(), "measure table does not sum to 1");
    Ok(t)
}

/// Same as [`measure_table`] but parametrized by the number `kappa` of
/// tensor factors; the non-GL pairs require `kappa` even.
pub fn measure_table_howe(pair: Pair, n: usize, kappa: usize) -> Result<MeasureTable, EnsembleError> {
    match pair {
        Pair::Gl => measure_table(pair, n, kappa),
        _ if kappa % 2 == 1 => Err(EnsembleError::Parity(kappa)),
        _ => measure_table(pair, n, kappa / 2),
    }
}

// ----- Krawtchouk coordinates -----

/// The GL measure written as a discrete orthogonal polynomial ensemble.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KrawtchoukForm {
    pub coordinates: Vec<i64>,
    pub vandermonde_sq: BigInt,
    pub weights: Vec<BigInt>,
    pub constant: BigRational,
}

impl KrawtchoukForm {
    pub fn probability(&self) -> BigRational {
        let w: BigInt = self.weights.iter().product();
        &self.constant * BigRational::from_integer(&self.vandermonde_sq * w)
    }
}

/// `prod_{m<n} (k+m)! / (m! (k+n-1)!) / 2^{nk}`.
pub fn krawtchouk_constant(n: usize, k: usize) -> BigRational {
    let (n, k) = (n as u64, k as u64);
    let mut c = BigRational::new(BigInt::one(), BigInt::one() << (n * k));
    for m in 0..n {
        c *= BigRational::new(factorial(k + m), factorial(m) * factorial(k + n - 1));
    }
    c
}

pub fn krawtchouk_decompose(lambda: &Partition, n: usize, k: usize) -> Result<KrawtchoukForm, EnsembleError> {
    lambda.check_box(n as i64, k as i64)?;
    let a: Vec<i64> = (0..n).map(|i| lambda.part(i) + (n - 1 - i) as i64).collect();
    let mut v = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            v *= a[i] - a[j];
        }
    }
    let top = (k + n) as i64 - 1;
    Ok(KrawtchoukForm {
        weights: a.iter().map(|&x| binomial(top, x)).collect(),
        coordinates: a,
        vandermonde_sq: &v * &v,
        constant: krawtchouk_constant(n, k),
    })
}

// ----- BC z-measure -----

/// Parameters of the BC z-measure weight on `l`-row diagrams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BCZMeasureParams {
    pub z: HalfInt,
    pub z_prime: HalfInt,
    pub alpha: HalfInt,
    pub beta: HalfInt,
    pub l: usize,
}

impl BCZMeasureParams {
    pub fn theta(&self) -> Result<HalfInt, EnsembleError> {
        let s = self.alpha + self.beta + HalfInt::from_int(1);
        if !s.is_integer() {
            return Err(EnsembleError::BadParameters(self.alpha, self.beta));
        }
        Ok(HalfInt::from_doubled(s.as_int().unwrap_or(0)))
    }

    /// `z = k`, `z' = 1/2 - l - theta` with `(alpha, beta)` of `pair`.
    pub fn specialization(pair: Pair, l: usize, k: usize) -> Result<Self, EnsembleError> {
        let (alpha, beta) = pair.jacobi_parameters().ok_or(EnsembleError::NotForGl)?;
        let mut p = BCZMeasureParams {
            z: HalfInt::from_int(k as i64),
            z_prime: HalfInt::from_int(0),
            alpha,
            beta,
            l,
        };
        p.z_prime = HalfInt::from_doubled(1) - HalfInt::from_int(l as i64) - p.theta()?;
        Ok(p)
    }
}

/// Leading term `value * eps^eps_order` of a quantity regularized along
/// `alpha + eps`, `beta + eps`, `z' - eps` (so `theta + eps`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Regularized {
    pub value: SqrtPiValue,
    pub eps_order: i64,
}

impl Regularized {
    fn one() -> Self {
        Regularized { value: SqrtPiValue::one(), eps_order: 0 }
    }

    fn mul_rational(&mut self, r: BigRational) {
        self.value = self.value.mul(&SqrtPiValue::rational(r));
    }

    /// Multiply by `Gamma(c + d eps)^sign`.
    fn mul_gamma(&mut self, c: HalfInt, d: i64, sign: i32) -> Result<(), EnsembleError> {
        let pole = c.as_int().filter(|&v| v <= 0);
        let g = match pole {
            None => gamma_half_integer(c)?,
            Some(_) if d == 0 => return Err(ExactError::GammaPole(c).into()),
            Some(v) => {
                // Gamma(-m + d eps) ~ (-1)^m / (m! d eps)
                let m = (-v) as u64;
                let mut r = BigRational::new(BigInt::one(), factorial(m) * d);
                if m % 2 == 1 {
                    r = -r;
                }
                self.eps_order -= sign as i64;
                SqrtPiValue::rational(r)
            }
        };
        self.value = if sign > 0 { self.value.mul(&g) } else { self.value.div(&g)? };
        Ok(())
    }

    /// `self / o` as a rational; requires matching eps orders.
    pub fn ratio(&self, o: &Regularized) -> Result<Option<BigRational>, EnsembleError> {
        if self.eps_order != o.eps_order {
            return Err(EnsembleError::PoleOrderMismatch(self.eps_order, o.eps_order));
        }
        Ok(self.value.ratio(&o.value))
    }
}

/// Unnormalized BC z-measure weight of `lambda` (the partition function is
/// omitted; it cancels in every ratio).
pub fn bc_z_measure(lambda: &Partition, params: &BCZMeasureParams) -> Result<Regularized, EnsembleError> {
    let l = params.l;
    lambda.check_box(l as i64, i64::MAX / 4)?;
    let th = params.theta()?;
    let li = HalfInt::from_int(l as i64);
    let one = HalfInt::from_int(1);
    let b: Vec<HalfInt> = (0..l)
        .map(|i| HalfInt::from_int(lambda.part(i) + (l - 1 - i) as i64))
        .collect();
    let mut out = Regularized::one();
    for i in 0..l {
        for j in i + 1..l {
            let (x, y) = ((b[i] + th).to_rational(), (b[j] + th).to_rational());
            let d = &x * &x - &y * &y;
            out.mul_rational(&d * &d);
        }
    }
    let (z, zp, al, be) = (params.z, params.z_prime, params.alpha, params.beta);
    for &x in &b {
        let lin = x + th;
        if lin == HalfInt::from_int(0) {
            out.eps_order += 1;
        } else {
            out.mul_rational(lin.to_rational());
        }
        out.mul_gamma(x + th + th, 2, 1)?;
        out.mul_gamma(x + al + one, 1, 1)?;
        out.mul_gamma(x + be + one, 1, -1)?;
        out.mul_gamma(x + one, 0, -1)?;
        out.mul_gamma(z - x + li, 0, -1)?;
        out.mul_gamma(zp - x + li, -1, -1)?;
        out.mul_gamma(z + x + li + th + th, 2, -1)?;
        out.mul_gamma(zp + x + li + th + th, 1, -1)?;
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct BcReport {
    pub pair: Pair,
    pub l: usize,
    pub k: usize,
    pub params: BCZMeasureParams,
    pub pairs_checked: usize,
    pub failures: Vec<(Partition, Partition)>,
}

impl BcReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `mu(lambda)/mu(nu) = (-1)^{|lambda|-|nu|} bc(lambda)/bc(nu)` for all
/// ordered pairs in the support of the `(pair, l, k)` measure.
pub fn verify_bc_specialization(pair: Pair, l: usize, k: usize) -> Result<BcReport, EnsembleError> {
    let params = BCZMeasureParams::specialization(pair, l, k)?;
    let table = measure_table(pair, l, k)?;
    let rows: Vec<(Partition, BigRational, Regularized)> = table
        .entries
        .iter()
        .map(|(lam, p)| Ok((lam.clone(), p.clone(), bc_z_measure(lam, &params)?)))
        .collect::<Result<_, EnsembleError>>()?;
    let mut failures = Vec::new();
    let mut checked = 0;
    for (la, pa, ba) in &rows {
        for (lb, pb, bb) in &rows {
            checked += 1;
            let lhs = pa / pb;
            let ok = match ba.ratio(bb)? {
                Some(r) if (la.size() - lb.size()).is_odd() => lhs == -r,
                Some(r) => lhs == r,
                None => false,
            };
            if !ok {
                failures.push((la.clone(), lb.clone()));
            }
        }
    }
    Ok(BcReport { pair, l, k, params, pairs_checked: checked, failures })
}

// ----- dual RSK -----

/// Row-insert `x`, bumping the leftmost entry `>= x` into the next row.
fn dual_insert(rows: &mut Vec<Vec<u32>>, mut x: u32) {
    for row in rows.iter_mut() {
        let pos = row.partition_point(|&y| y < x);
        if pos == row.len() {
            row.push(x);
            return;
        }
        std::mem::swap(&mut row[pos], &mut x);
    }
    rows.push(vec![x]);
}

fn dual_rsk_from_bits(n: usize, k: usize, bit: impl Fn(usize, usize) -> bool) -> Partition {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for i in 0..n {
        for j in 0..k {
            if bit(i, j) {
                dual_insert(&mut rows, j as u32);
            }
        }
    }
    Partition::new(rows.iter().map(|r| r.len() as i64).collect()).expect("insertion shape")
}

/// Shape of the insertion tableau of the dual RSK correspondence applied to
/// the biword of the ones of `m`, read row by row.
pub fn dual_rsk_shape(m: &[Vec<u8>]) -> Partition {
    let k = m.first().map_or(0, |r| r.len());
    assert!(m.iter().all(|r| r.len() == k && r.iter().all(|&e| e <= 1)), "expected a 0/1 matrix");
    dual_rsk_from_bits(m.len(), k, |i, j| m[i][j] == 1)
}

// ----- sampling -----

/// Generator for sample `index` under `seed`: ChaCha20 keyed by
/// `seed_from_u64(seed)` on stream `index`.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// One GL sample: a uniform `n x k` 0/1 matrix (row-major, 64 bits per draw)
/// pushed through dual RSK.
pub fn sample_gl_one(n: usize, k: usize, seed: u64, index: u64) -> Partition {
    let mut rng = sample_rng(seed, index);
    let mut bits = vec![false; n * k];
    for chunk in bits.chunks_mut(64) {
        let w = rng.next_u64();
        for (t, b) in chunk.iter_mut().enumerate() {
            *b = (w >> t) & 1 == 1;
        }
    }
    dual_rsk_from_bits(n, k, |i, j| bits[i * k + j])
}

/// Uniform integer with `bits` random bits.
fn random_bits(rng: &mut ChaCha20Rng, bits: u64) -> BigInt {
    let nbytes = bits.div_ceil(8) as usize;
    let mut buf = vec![0u8; nbytes];
    rng.fill_bytes(&mut buf);
    let extra = nbytes as u64 * 8 - bits;
    if extra > 0 {
        if let Some(last) = buf.last_mut() {
            *last >>= extra;
        }
    }
    BigInt::from_bytes_le(Sign::Plus, &buf)
}

/// Inverse-CDF sampler over an explicit weight table whose total is `2^bits`.
pub struct TableSampler {
    parts: Vec<Partition>,
    cumulative: Vec<BigInt>,
    bits: u64,
}

impl TableSampler {
    pub fn new(pair: Pair, n: usize, k: usize) -> Result<Self, EnsembleError> {
        let weights = measure_weights(pair, n, k)?;
        let mut acc = BigInt::zero();
        let mut parts = Vec::with_capacity(weights.len());
        let mut cumulative = Vec::with_capacity(weights.len());
        for (l, w) in weights {
            acc += w;
            parts.push(l);
            cumulative.push(acc.clone());
        }
        Ok(TableSampler { parts, cumulative, bits: total_log2(pair, n, k) })
    }

    pub fn draw(&self, seed: u64, index: u64) -> Partition {
        let mut rng = sample_rng(seed, index);
        let u = random_bits(&mut rng, self.bits);
        let pos = self.cumulative.partition_point(|c| c <= &u);
        self.parts[pos].clone()
    }
}

/// `count` independent diagrams; sample `s` uses stream `s` so the output
/// depends only on `(pair, n, k, count, seed)`.
pub fn sample(pair: Pair, n: usize, k: usize, count: usize, seed: u64) -> Result<Vec<Partition>, EnsembleError> {
    if count == 0 {
        return Ok(Vec::new());
    }
    match pair {
        Pair::Gl => Ok((0..count as u64)
            .into_par_iter()
            .map(|s| sample_gl_one(n, k, seed, s))
            .collect()),
        _ => {
            let sampler = TableSampler::new(pair, n, k)?;
            Ok((0..count as u64).into_par_iter().map(|s| sampler.draw(seed, s)).collect())
        }
    }
}

// ----- most probable diagram -----

/// Per-row coordinate in which the measure factorizes.
fn coord(pair: Pair, n: usize, i: usize, part: i64) -> i64 {
    let s = (n - 1 - i) as i64;
    match pair {
        Pair::Gl => part + s,
        Pair::SoPin => 2 * (part + s) + 1,
        Pair::Sp => part + s + 1,
        Pair::OSo => 2 * (part + s),
    }
}

/// Factorial arguments of the single-coordinate weight's denominator.
fn fact_args(pair: Pair, n: usize, k: usize, a: i64) -> [i64; 2] {
    let (n, k) = (n as i64, k as i64);
    match pair {
        Pair::Gl => [a, k + n - 1 - a],
        Pair::SoPin => [(2 * k + a + 2 * n - 1) / 2, (2 * k - a + 2 * n - 1) / 2],
        Pair::Sp => [k + n + a, k + n - a],
        Pair::OSo => [(2 * k + 2 * n - 2 - a) / 2, (2 * k + 2 * n - 2 + a) / 2],
    }
}

fn interaction(pair: Pair, x: i64, y: i64) -> BigInt {
    let d = match pair {
        Pair::Gl => BigInt::from(x - y),
        _ => BigInt::from(x - y) * BigInt::from(x + y),
    };
    &d * &d
}

/// Multiplies `top! / bottom!` into `num / den`.
fn push_fact_ratio(num: &mut BigInt, den: &mut BigInt, top: i64, bottom: i64) {
    if top >= bottom {
        for m in bottom + 1..=top {
            *num *= m;
        }
    } else {
        for m in top + 1..=bottom {
            *den *= m;
        }
    }
}

/// Exact weight ratio `mu(lambda') / mu(lambda)` when row `i` changes from
/// `old` to `new`, as `(numerator, denominator)` with positive denominator.
fn move_ratio(pair: Pair, n: usize, k: usize, parts: &[i64], i: usize, new: i64) -> (BigInt, BigInt) {
    let a = coord(pair, n, i, parts[i]);
    let b = coord(pair, n, i, new);
    let (mut num, mut den) = (BigInt::one(), BigInt::one());
    match pair {
        Pair::Gl | Pair::OSo => {}
        _ => {
            num *= b * b;
            den *= a * a;
        }
    }
    let [fa0, fa1] = fact_args(pair, n, k, a);
    let [fb0, fb1] = fact_args(pair, n, k, b);
    push_fact_ratio(&mut num, &mut den, fa0, fb0);
    push_fact_ratio(&mut num, &mut den, fa1, fb1);
    for (j, &pj) in parts.iter().enumerate() {
        if j != i {
            let c = coord(pair, n, j, pj);
            num *= interaction(pair, b, c);
            den *= interaction(pair, a, c);
        }
    }
    if pair == Pair::OSo && i == n - 1 {
        // class multiplicity: 2 when the last row is nonzero
        match (parts[i] > 0, new > 0) {
            (false, true) => num *= 2,
            (true, false) => den *= 2,
            _ => {}
        }
    }
    (num, den)
}

fn log_move_ratio(pair: Pair, n: usize, k: usize, parts: &[i64], i: usize, new: i64) -> f64 {
    let a = coord(pair, n, i, parts[i]);
    let b = coord(pair, n, i, new);
    // log(top! / bottom!)
    let step = |top: i64, bottom: i64| -> f64 {
        let (lo, hi, s) = if top >= bottom { (bottom, top, 1.0) } else { (top, bottom, -1.0) };
        s * (lo + 1..=hi).map(|t| (t as f64).ln()).sum::<f64>()
    };
    let mut r = 0.0;
    if !matches!(pair, Pair::Gl | Pair::OSo) {
        r += 2.0 * ((b as f64).abs().ln() - (a as f64).abs().ln());
    }
    let [fa0, fa1] = fact_args(pair, n, k, a);
    let [fb0, fb1] = fact_args(pair, n, k, b);
    r += step(fa0, fb0) + step(fa1, fb1);
    for (j, &pj) in parts.iter().enumerate() {
        if j != i {
            let c = coord(pair, n, j, pj) as f64;
            let (af, bf) = (a as f64, b as f64);
            r += match pair {
                Pair::Gl => 2.0 * ((bf - c).abs().ln() - (af - c).abs().ln()),
                _ => 2.0 * ((bf * bf - c * c).abs().ln() - (af * af - c * c).abs().ln()),
            };
        }
    }
    if pair == Pair::OSo && i == n - 1 {
        match (parts[i] > 0, new > 0) {
            (false, true) => r += std::f64::consts::LN_2,
            (true, false) => r -= std::f64::consts::LN_2,
            _ => {}
        }
    }
    r
}

fn legal_moves(parts: &[i64], k: i64) -> Vec<(usize, i64)> {
    let n = parts.len();
    let mut out = Vec::new();
    for i in 0..n {
        if parts[i] < k && (i == 0 || parts[i - 1] > parts[i]) {
            out.push((i, parts[i] + 1));
        }
        if parts[i] > 0 && (i + 1 == n || parts[i + 1] < parts[i]) {
            out.push((i, parts[i] - 1));
        }
    }
    out
}

fn with_move(parts: &[i64], i: usize, v: i64) -> Vec<i64> {
    let mut p = parts.to_vec();
    p[i] = v;
    p
}

/// Steepest ascent from `start`; a float pass moves fast, then exact ratios
/// certify the local maximum (and keep climbing if the floats stopped early).
fn climb(pair: Pair, n: usize, k: usize, start: Vec<i64>) -> Vec<i64> {
    let mut parts = start;
    loop {
        let best = legal_moves(&parts, k as i64)
            .into_iter()
            .map(|(i, v)| (log_move_ratio(pair, n, k, &parts, i, v), i, v))
            .filter(|(r, _, _)| *r > 1e-9)
            .max_by(|x, y| x.0.total_cmp(&y.0));
        match best {
            Some((_, i, v)) => parts[i] = v,
            None => break,
        }
    }
    loop {
        let mut best: Option<(BigInt, BigInt, Vec<i64>)> = None;
        for (i, v) in legal_moves(&parts, k as i64) {
            let (num, den) = move_ratio(pair, n, k, &parts, i, v);
            if num <= den {
                continue;
            }
            let cand = with_move(&parts, i, v);
            let better = match &best {
                None => true,
                Some((bn, bd, bp)) => {
                    let lhs = &num * bd;
                    let rhs = bn * &den;
                    lhs > rhs || (lhs == rhs && cand < *bp)
                }
            };
            if better {
                best = Some((num, den, cand));
            }
        }
        match best {
            Some((_, _, p)) => parts = p,
            None => return parts,
        }
    }
}

/// Seeds for the ascent: empty, full box and the straight staircase.
fn climb_seeds(n: usize, k: usize) -> Vec<Vec<i64>> {
    let k = k as i64;
    let stair = if n <= 1 {
        vec![k / 2; n]
    } else {
        let d = (n - 1) as i64;
        (0..n as i64).map(|i| ((d - i) * k + d / 2) / d).collect()
    };
    vec![vec![0; n], vec![k; n], stair]
}

/// A most probable diagram: the best of the single-box local maxima reached
/// from the seeds, ties broken by the lexicographically smallest partition.
pub fn most_probable_diagram(pair: Pair, n: usize, k: usize) -> Partition {
    if n == 0 || k == 0 {
        return Partition::empty();
    }
    let mut maxima: Vec<Vec<i64>> = climb_seeds(n, k)
        .into_par_iter()
        .map(|s| climb(pair, n, k, s))
        .collect();
    maxima.sort();
    maxima.dedup();
    let mut best: Option<(BigInt, Partition)> = None;
    for m in maxima {
        let p = Partition::new(m).expect("climb keeps a partition");
        let w = pair_weight(pair, n, k, &p);
        let better = match &best {
            None => true,
            Some((bw, bp)) => w > *bw || (w == *bw && p < *bp),
        };
        if better {
            best = Some((w, p));
        }
    }
    best.map(|(_, p)| p).unwrap_or_else(Partition::empty)
}

// ----- exterior power slices -----

/// `dim V_{GL_n}(lambda) dim V_{GL_k}(lambda-bar') / C(nk, m)`: the measure
/// on diagrams with `m` boxes coming from the `m`-th exterior power.
pub fn exterior_power_measure(lambda: &Partition, n: usize, k: usize, m: i64) -> Result<BigRational, EnsembleError> {
    lambda.check_box(n as i64, k as i64)?;
    if lambda.size() != m {
        return Err(EnsembleError::SizeMismatch { size: lambda.size(), m });
    }
    let dual = lambda.complement(n as i64, k as i64)?.conjugate();
    let num = weyl_dim_int(LieType::A, &lambda.padded(n)) * weyl_dim_int(LieType::A, &dual.padded(k));
    Ok(BigRational::new(num, binomial((n * k) as i64, m)))
}

#[derive(Debug, Clone, Serialize)]
pub struct BinomializationReport {
    pub n: usize,
    pub k: usize,
    pub checked: usize,
    /// Sizes `m` whose slice measure does not sum to 1.
    pub bad_levels: Vec<i64>,
    pub failures: Vec<Partition>,
}

impl BinomializationReport {
    pub fn passed(&self) -> bool {
        self.bad_levels.is_empty() && self.failures.is_empty()
    }
}

/// Checks `mu(lambda) 2^{nk} = C(nk, |lambda|) mu^<|lambda|>(lambda)` on the
/// whole box, and that every slice is a probability measure.
pub fn binomialization_check(n: usize, k: usize) -> Result<BinomializationReport, EnsembleError> {
    let table = measure_table(Pair::Gl, n, k)?;
    let scale = BigRational::from_integer(BigInt::one() << (n * k));
    let mut levels: BTreeMap<i64, BigRational> = BTreeMap::new();
    let mut failures = Vec::new();
    let mut checked = 0;
    for l in enumerate_in_box(n, k as i64) {
        let m = l.size();
        let e = exterior_power_measure(&l, n, k, m)?;
        *levels.entry(m).or_insert_with(BigRational::zero) += &e;
        let rhs = BigRational::from_integer(binomial((n * k) as i64, m)) * &e;
        if table.prob(&l) * &scale != rhs {
            failures.push(l);
        }
        checked += 1;
    }
    let bad_levels = levels.into_iter().filter(|(_, s)| !s.is_one()).map(|(m, _)| m).collect();
    Ok(BinomializationReport { n, k, checked, bad_levels, failures })
}

// ----- q-deformed normalizations -----

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum QVariant {
    A,
    A2,
    A3,
}

impl FromStr for QVariant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(QVariant::A),
            "A2" => Ok(QVariant::A2),
            "A3" => Ok(QVariant::A3),
            _ => Err(format!("unknown q-measure variant `{s}`")),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct QMeasureReport {
    pub variant: QVariant,
    pub n: usize,
    pub k: usize,
    pub sum: QLaurent,
    pub claimed: QLaurent,
    pub equal: bool,
}

fn qdim_a(rank: usize, lambda: &Partition) -> Result<QLaurent, EnsembleError> {
    if rank == 0 {
        return Ok(QLaurent::one());
    }
    Ok(qdim(LieType::A, rank, &int_weight(&lambda.padded(rank)))?.value)
}

/// Claimed normalization `N^A` for the box with sides `a <= b`.
pub fn n_a(a: usize, b: usize) -> QLaurent {
    let (a, b) = (a.min(b) as i64, a.max(b) as i64);
    let pyr = (a - 1) * a * (2 * a - 1) / 6;
    let mut out = QLaurent::monomial(pyr + (b - a) * a * (a - 1) / 2).scale(&(BigInt::one() << a as usize));
    for i in 1..a {
        out = out * one_plus_q_pow(i).pow((2 * (a - i)) as u32);
    }
    for j in a + 1..=b {
        for i in 1..=a {
            out = out * one_plus_q_pow(j - i);
        }
    }
    out
}

fn claimed(variant: QVariant, n: usize, k: usize) -> QLaurent {
    let (k, n) = (n.min(k) as i64, n.max(k) as i64);
    match variant {
        QVariant::A => n_a(k as usize, n as usize),
        QVariant::A2 => {
            let mut out = QLaurent::constant(2);
            for i in 1..=k + 1 {
                out = out * one_plus_q_pow(i).pow((k + 2 - i) as u32);
            }
            for j in k + 1..=n {
                for i in 1..=k {
                    out = out * one_plus_q_pow(j + 2 - i);
                }
            }
            out
        }
        QVariant::A3 => {
            let mut out = QLaurent::one();
            for i in 1..=2 * k {
                out = out * one_plus_q_pow(i).pow((k - (k - i).abs()) as u32);
            }
            for j in k + 1..=n {
                for i in 1..=k {
                    out = out * one_plus_q_pow(j + k - i);
                }
            }
            out
        }
    }
}

/// Sum of the q-deformed weights over the `n x k` box against the claimed
/// closed form. Only variant A is a theorem; the others are reported as is.
pub fn q_measure_normalization(variant: QVariant, n: usize, k: usize) -> Result<QMeasureReport, EnsembleError> {
    let mut sum = QLaurent::zero();
    for l in enumerate_in_box(n, k as i64) {
        let bar = l.complement(n as i64, k as i64)?;
        let dual = bar.conjugate();
        let dims = qdim_a(n, &l)? * qdim_a(k, &dual)?;
        let shift = match variant {
            QVariant::A => l.weighted_size() + dual.weighted_size(),
            QVariant::A2 => bar.weighted_size() + dual.weighted_size(),
            QVariant::A3 => bar.weighted_size() + dual.size() + dual.weighted_size(),
        };
        sum += &dims.shift(shift);
    }
    let claimed = claimed(variant, n, k);
    let equal = sum == claimed;
    if variant == QVariant::A {
        assert!(equal, "q-normalization of variant A fails at n={n}, k={k}");
    }
    Ok(QMeasureReport { variant, n, k, sum, claimed, equal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[i64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn r(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn gl_small_tables() {
        let t = measure_table(Pair::Gl, 1, 1).unwrap();
        assert_eq!(t.prob(&p(&[])), r(1, 2));
        assert_eq!(t.prob(&p(&[1])), r(1, 2));
        let t = measure_table(Pair::Gl, 2, 2).unwrap();
        let want = [
            (vec![], 1),
            (vec![1], 4),
            (vec![1, 1], 3),
            (vec![2], 3),
            (vec![2, 1], 4),
            (vec![2, 2], 1),
        ];
        assert_eq!(t.entries.len(), 6);
        for (l, w) in want {
            assert_eq!(t.prob(&p(&l)), r(w, 16), "{l:?}");
        }
    }

    #[test]
    fn sp_l1_k1() {
        let t = measure_table(Pair::Sp, 1, 1).unwrap();
        assert!(t.entries.keys().all(|l| l.fits_in(1, 1)));
        assert!(t.total().is_one());
    }

    #[test]
    fn odd_kappa_rejected() {
        assert_eq!(measure_table_howe(Pair::Sp, 2, 3), Err(EnsembleError::Parity(3)));
        assert!(measure_table_howe(Pair::Gl, 2, 3).is_ok());
        assert!(matches!(measure_table(Pair::Gl, 30, 30), Err(EnsembleError::SupportTooLarge(_))));
    }

    #[test]
    fn pair_parsing() {
        for pr in Pair::ALL {
            assert_eq!(pr.to_string().parse::<Pair>().unwrap(), pr);
        }
        assert_eq!("so_pin".parse::<Pair>().unwrap(), Pair::SoPin);
        assert!("U".parse::<Pair>().is_err());
    }

    #[test]
    fn krawtchouk_examples() {
        let f = krawtchouk_decompose(&p(&[]), 1, 1).unwrap();
        assert_eq!(f.weights, vec![BigInt::one()]);
        assert_eq!(f.constant, r(1, 2));
        let f = krawtchouk_decompose(&p(&[1, 1]), 2, 2).unwrap();
        assert_eq!(f.constant, r(1, 48));
        assert_eq!(f.probability(), r(3, 16));
    }

    #[test]
    fn krawtchouk_matches_tables() {
        for n in 1..=4 {
            for k in 0..=4 {
                let t = measure_table(Pair::Gl, n, k).unwrap();
                for l in enumerate_in_box(n, k as i64) {
                    let f = krawtchouk_decompose(&l, n, k).unwrap();
                    assert_eq!(f.probability(), t.prob(&l));
                    let bar = l.complement(n as i64, k as i64).unwrap();
                    assert_eq!(t.prob(&bar), t.prob(&l));
                }
            }
        }
    }

    #[test]
    fn bc_identity_small() {
        for pair in [Pair::Sp, Pair::SoPin, Pair::OSo] {
            let rep = verify_bc_specialization(pair, 2, 2).unwrap();
            assert!(rep.passed(), "{pair}: {:?}", rep.failures);
        }
    }

    #[test]
    fn bc_pole_orders() {
        let params = BCZMeasureParams::specialization(Pair::SoPin, 2, 2).unwrap();
        for l in enumerate_in_box(2, 2) {
            assert_eq!(bc_z_measure(&l, &params).unwrap().eps_order, 2);
        }
        let params = BCZMeasureParams::specialization(Pair::Sp, 2, 2).unwrap();
        let v = bc_z_measure(&p(&[]), &params).unwrap();
        assert_eq!(v.eps_order, 0);
        assert_eq!(v.ratio(&v).unwrap(), Some(BigRational::one()));
    }

    #[test]
    fn gamma_pole_without_direction() {
        let mut params = BCZMeasureParams::specialization(Pair::Sp, 1, 1).unwrap();
        params.z = HalfInt::from_int(-5);
        assert!(matches!(
            bc_z_measure(&p(&[]), &params),
            Err(EnsembleError::Exact(ExactError::GammaPole(_)))
        ));
    }

    #[test]
    fn dual_rsk_examples() {
        assert_eq!(dual_rsk_shape(&[vec![0, 0], vec![0, 0]]), p(&[]));
        for (n, k) in [(1, 3), (2, 2), (3, 2), (2, 5)] {
            let m = vec![vec![1u8; k]; n];
            assert_eq!(dual_rsk_shape(&m), Partition::rectangle(n as i64, k as i64));
        }
    }

    #[test]
    fn dual_rsk_pushforward_2x2() {
        let mut hist: BTreeMap<Partition, i64> = BTreeMap::new();
        for mask in 0u32..16 {
            let m: Vec<Vec<u8>> =
                (0..2).map(|i| (0..2).map(|j| ((mask >> (2 * i + j)) & 1) as u8).collect()).collect();
            *hist.entry(dual_rsk_shape(&m)).or_default() += 1;
        }
        let t = measure_table(Pair::Gl, 2, 2).unwrap();
        for (l, c) in hist {
            assert_eq!(r(c, 16), t.prob(&l));
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        assert!(sample(Pair::Gl, 3, 3, 0, 1).unwrap().is_empty());
        let a = sample(Pair::Gl, 4, 5, 50, 7).unwrap();
        assert_eq!(a, sample(Pair::Gl, 4, 5, 50, 7).unwrap());
        assert_ne!(a, sample(Pair::Gl, 4, 5, 50, 8).unwrap());
        let b = sample(Pair::OSo, 2, 2, 50, 7).unwrap();
        assert_eq!(b, sample(Pair::OSo, 2, 2, 50, 7).unwrap());
    }

    #[test]
    fn gl_sample_frequency() {
        let s = sample(Pair::Gl, 2, 2, 40_000, 11).unwrap();
        let hits = s.iter().filter(|l| **l == p(&[1, 1])).count() as f64;
        assert!((hits / 40_000.0 - 3.0 / 16.0).abs() < 0.01);
    }

    #[test]
    fn table_sampler_frequency() {
        let t = measure_table(Pair::Sp, 2, 1).unwrap();
        let s = sample(Pair::Sp, 2, 1, 20_000, 3).unwrap();
        for (l, pr) in &t.entries {
            let f = s.iter().filter(|x| *x == l).count() as f64 / 20_000.0;
            assert!((f - pr.to_f64().unwrap()).abs() < 0.02, "{l}");
        }
    }

    #[test]
    fn most_probable_examples() {
        assert_eq!(most_probable_diagram(Pair::Gl, 1, 2), p(&[1]));
        assert_eq!(most_probable_diagram(Pair::Gl, 2, 2), p(&[1]));
    }

    #[test]
    fn most_probable_is_global_on_small_boxes() {
        for pair in Pair::ALL {
            for n in 1..=3 {
                for k in 1..=3 {
                    let t = measure_table(pair, n, k).unwrap();
                    let max = t.entries.values().max().unwrap();
                    let got = most_probable_diagram(pair, n, k);
                    assert_eq!(t.prob(&got), *max, "{pair} {n}x{k}");
                }
            }
        }
    }

    #[test]
    fn move_ratio_matches_table() {
        for pair in Pair::ALL {
            let (n, k) = (3, 3);
            let t = measure_table(pair, n, k).unwrap();
            for l in enumerate_in_box(n, k as i64) {
                let parts = l.padded(n);
                for (i, v) in legal_moves(&parts, k as i64) {
                    let (num, den) = move_ratio(pair, n, k, &parts, i, v);
                    let to = Partition::new(with_move(&parts, i, v)).unwrap();
                    assert_eq!(t.prob(&to) / t.prob(&l), BigRational::new(num, den), "{pair} {l} -> {to}");
                    let lr = log_move_ratio(pair, n, k, &parts, i, v);
                    let exact = (t.prob(&to) / t.prob(&l)).to_f64().unwrap().ln();
                    assert!((lr - exact).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn staircase_near_square_maximum() {
        let n = 8;
        let m = most_probable_diagram(Pair::Gl, n, n);
        let stair: Vec<i64> = (0..n as i64).map(|i| n as i64 - 1 - i).collect();
        let dist: i64 = m.padded(n).iter().zip(&stair).map(|(a, b)| (a - b).abs()).max().unwrap();
        assert!(dist <= 1, "{m}");
    }

    #[test]
    fn exterior_power_examples() {
        assert_eq!(exterior_power_measure(&p(&[]), 3, 2, 0).unwrap(), BigRational::one());
        assert_eq!(exterior_power_measure(&p(&[1, 1]), 2, 2, 2).unwrap(), r(3, 6));
        assert_eq!(exterior_power_measure(&Partition::rectangle(2, 3), 2, 3, 6).unwrap(), BigRational::one());
        assert!(matches!(
            exterior_power_measure(&p(&[1]), 2, 2, 2),
            Err(EnsembleError::SizeMismatch { .. })
        ));
        assert!(binomialization_check(3, 3).unwrap().passed());
    }

    #[test]
    fn q_normalization_a() {
        let rep = q_measure_normalization(QVariant::A, 1, 1).unwrap();
        assert_eq!(rep.sum, QLaurent::constant(2));
        for n in 1..=3 {
            for k in 1..=3 {
                let rep = q_measure_normalization(QVariant::A, n, k).unwrap();
                assert!(rep.equal);
                assert_eq!(rep.sum.eval_at_one(), BigInt::one() << (n * k));
            }
        }
    }

    #[test]
    fn q_conjectures_reported() {
        let a2 = q_measure_normalization(QVariant::A2, 2, 2).unwrap();
        assert!(!a2.equal);
        let a3 = q_measure_normalization(QVariant::A3, 2, 2).unwrap();
        assert!(a3.equal);
    }

    proptest! {
        #[test]
        fn gl_complement_symmetry(n in 1usize..=5, k in 0usize..=5, seed in 0u64..1000) {
            let t = measure_table(Pair::Gl, n, k).unwrap();
            let l = sample_gl_one(n, k, seed, 0);
            let bar = l.complement(n as i64, k as i64).unwrap();
            prop_assert_eq!(t.prob(&l), t.prob(&bar));
        }

        #[test]
        fn samples_fit_the_box(n in 1usize..=6, k in 0usize..=6, seed in any::<u64>()) {
            let l = sample_gl_one(n, k, seed, 3);
            prop_assert!(l.fits_in(n as i64, k as i64));
        }
    }
}
