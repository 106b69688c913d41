//! Exact arithmetic: Laurent polynomials in `q` with big-integer
//! coefficients, q-factorials and q-binomials, half-integers, values of the
//! form `r * sqrt(pi)^s`, and a fraction-free determinant.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

pub use num_rational::BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("Gamma has a pole at {0}")]
    GammaPole(HalfInt),
}

/// Laurent polynomial `sum_i coeffs[i] * q^(min_exp + i)`.
///
/// Always canonical: either `coeffs` is empty (the zero polynomial, with
/// `min_exp == 0`) or both the first and last coefficient are nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QLaurent {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl QLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(0, vec![c.into()])
    }

    /// The monomial `q^e`.
    pub fn monomial(e: i64) -> Self {
        Self::from_coeffs(e, vec![BigInt::one()])
    }

    pub fn from_coeffs(min_exp: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = QLaurent { min_exp, coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(min_exp: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(min_exp, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_exp += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.min_exp = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// Exponent of the highest nonzero term; `None` for zero.
    pub fn max_exp(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_exp + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^e`.
    pub fn coeff(&self, e: i64) -> BigInt {
        let idx = e - self.min_exp;
        if idx < 0 {
            return BigInt::zero();
        }
        self.coeffs
            .get(idx as usize)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Evaluate at a rational `q`. Fails only for `q = 0` with a negative exponent.
    pub fn eval(&self, q: &BigRational) -> Result<BigRational, ExactError> {
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        if q.is_zero() && self.min_exp < 0 {
            return Err(ExactError::DivisionByZero);
        }
        // Horner from the top, then apply q^min_exp.
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + BigRational::from_integer(c.clone());
        }
        let shift = rational_pow(q, self.min_exp)?;
        Ok(acc * shift)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Multiply by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        QLaurent {
            min_exp: self.min_exp + e,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.min_exp, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Exact division. Errors if the remainder is nonzero or the divisor is zero.
    pub fn exact_div(&self, d: &QLaurent) -> Result<QLaurent, ExactError> {
        if d.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if self.coeffs.len() < d.coeffs.len() {
            return Err(ExactError::InexactDivision);
        }
        // Long division from the top coefficient down.
        let mut rem = self.coeffs.clone();
        let dl = d.coeffs.len();
        let ql = rem.len() - dl + 1;
        let lead = d.coeffs.last().expect("nonzero divisor");
        let mut quot = vec![BigInt::zero(); ql];
        for i in (0..ql).rev() {
            let top = &rem[i + dl - 1];
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(ExactError::InexactDivision);
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &qc * dc;
            }
            quot[i] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(ExactError::InexactDivision);
        }
        Ok(Self::from_coeffs(self.min_exp - d.min_exp, quot))
    }

    /// `{"min_exp": int, "coeffs": [decimal strings]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "min_exp": self.min_exp,
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }
}

fn rational_pow(q: &BigRational, e: i64) -> Result<BigRational, ExactError> {
    if e >= 0 {
        Ok(num_traits::pow(q.clone(), e as usize))
    } else if q.is_zero() {
        Err(ExactError::DivisionByZero)
    } else {
        Ok(num_traits::pow(q.recip(), (-e) as usize))
    }
}

impl Serialize for QLaurent {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("QLaurent", 2)?;
        st.serialize_field("min_exp", &self.min_exp)?;
        let cs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        st.serialize_field("coeffs", &cs)?;
        st.end()
    }
}

impl fmt::Debug for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QLaurent({self})")
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.min_exp + i as i64;
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}")?;
                    }
                    if e == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add<&QLaurent> for &QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: &QLaurent) -> QLaurent {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.min_exp.min(rhs.min_exp);
        let hi = self.max_exp().unwrap().max(rhs.max_exp().unwrap());
        let mut out = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[(self.min_exp - lo) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[(rhs.min_exp - lo) as usize + i] += c;
        }
        QLaurent::from_coeffs(lo, out)
    }
}

impl Add for QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: QLaurent) -> QLaurent {
        &self + &rhs
    }
}

impl AddAssign<&QLaurent> for QLaurent {
    fn add_assign(&mut self, rhs: &QLaurent) {
        *self = &*self + rhs;
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        QLaurent {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        -&self
    }
}

impl Sub<&QLaurent> for &QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: &QLaurent) -> QLaurent {
        self + &(-rhs)
    }
}

impl Sub for QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: QLaurent) -> QLaurent {
        &self - &rhs
    }
}

impl Mul<&QLaurent> for &QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &QLaurent) -> QLaurent {
        if self.is_zero() || rhs.is_zero() {
            return QLaurent::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QLaurent::from_coeffs(self.min_exp + rhs.min_exp, out)
    }
}

impl Mul for QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: QLaurent) -> QLaurent {
        &self * &rhs
    }
}

impl std::iter::Product for QLaurent {
    fn product<I: Iterator<Item = QLaurent>>(iter: I) -> QLaurent {
        iter.fold(QLaurent::one(), |acc, x| &acc * &x)
    }
}

impl std::iter::Sum for QLaurent {
    fn sum<I: Iterator<Item = QLaurent>>(iter: I) -> QLaurent {
        iter.fold(QLaurent::zero(), |acc, x| &acc + &x)
    }
}

/// The q-integer `[n]_q = (1 - q^n)/(1 - q)`, also for negative `n`.
pub fn q_int(n: i64) -> QLaurent {
    match n.cmp(&0) {
        Ordering::Equal => QLaurent::zero(),
        Ordering::Greater => QLaurent::from_coeffs(0, vec![BigInt::one(); n as usize]),
        Ordering::Less => -(q_int(-n).shift(n)),
    }
}

/// `1 + q^e`, a factor that shows up in spinor q-dimensions and q-measure totals.
pub fn one_plus_q_pow(e: i64) -> QLaurent {
    &QLaurent::one() + &QLaurent::monomial(e)
}

thread_local! {
    static Q_FACTORIALS: RefCell<Vec<QLaurent>> = RefCell::new(vec![QLaurent::one()]);
}

/// `[n]_q!` for `n >= 0`, memoized per thread.
pub fn q_factorial(n: usize) -> QLaurent {
    Q_FACTORIALS.with(|cell| {
        let mut table = cell.borrow_mut();
        while table.len() <= n {
            let m = table.len();
            let next = &table[m - 1] * &q_int(m as i64);
            table.push(next);
        }
        table[n].clone()
    })
}

/// Gaussian binomial; zero unless `0 <= m <= n`.
pub fn q_binomial(n: i64, m: i64) -> QLaurent {
    if n < 0 || m < 0 || m > n {
        return QLaurent::zero();
    }
    let num = q_factorial(n as usize);
    let den = &q_factorial(m as usize) * &q_factorial((n - m) as usize);
    num.exact_div(&den)
        .expect("q-binomial quotient is a polynomial")
}

/// q-analogue of the triangle Catalan number `C_{n,k}(q)`.
pub fn catalan_triangle_q(n: i64, k: i64) -> QLaurent {
    if n < 0 || k < 0 || k > n {
        return QLaurent::zero();
    }
    let num = &q_factorial((n + k) as usize) * &q_int(n - k + 1);
    let den = &q_factorial(k as usize) * &q_factorial((n + 1) as usize);
    num.exact_div(&den)
        .expect("q-Catalan triangle quotient is a polynomial")
}

/// Ordinary binomial as a big integer; zero outside `0 <= m <= n`.
pub fn binomial(n: i64, m: i64) -> BigInt {
    if n < 0 || m < 0 || m > n {
        return BigInt::zero();
    }
    let m = m.min(n - m);
    let mut acc = BigInt::one();
    for i in 0..m {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// A half-integer stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    pub doubled: i64,
}

impl HalfInt {
    pub const fn from_doubled(doubled: i64) -> Self {
        HalfInt { doubled }
    }

    pub const fn from_int(v: i64) -> Self {
        HalfInt { doubled: 2 * v }
    }

    pub fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }

    /// The integer value, if this is an integer.
    pub fn as_int(self) -> Option<i64> {
        self.is_integer().then_some(self.doubled / 2)
    }

    pub fn to_rational(self) -> BigRational {
        BigRational::new(BigInt::from(self.doubled), BigInt::from(2))
    }

    pub fn to_f64(self) -> f64 {
        self.doubled as f64 / 2.0
    }

    pub fn abs(self) -> Self {
        HalfInt::from_doubled(self.doubled.abs())
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_doubled(self.doubled + rhs.doubled)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_doubled(self.doubled - rhs.doubled)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_doubled(-self.doubled)
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `rational * sqrt(pi)^sqrt_pi_power`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqrtPiValue {
    pub rational: BigRational,
    pub sqrt_pi_power: i64,
}

impl SqrtPiValue {
    pub fn rational(r: BigRational) -> Self {
        SqrtPiValue {
            rational: r,
            sqrt_pi_power: 0,
        }
    }

    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    pub fn mul(&self, o: &SqrtPiValue) -> SqrtPiValue {
        SqrtPiValue {
            rational: &self.rational * &o.rational,
            sqrt_pi_power: self.sqrt_pi_power + o.sqrt_pi_power,
        }
    }

    pub fn div(&self, o: &SqrtPiValue) -> Result<SqrtPiValue, ExactError> {
        if o.rational.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(SqrtPiValue {
            rational: &self.rational / &o.rational,
            sqrt_pi_power: self.sqrt_pi_power - o.sqrt_pi_power,
        })
    }

    /// `self / o` as a rational, defined when the sqrt(pi) powers agree.
    pub fn ratio(&self, o: &SqrtPiValue) -> Option<BigRational> {
        if self.sqrt_pi_power != o.sqrt_pi_power || o.rational.is_zero() {
            return None;
        }
        Some(&self.rational / &o.rational)
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.rational.to_f64().unwrap_or(f64::NAN);
        r * std::f64::consts::PI.sqrt().powi(self.sqrt_pi_power as i32)
    }
}

/// `Gamma(t)` at an integer or half-odd-integer argument.
pub fn gamma_half_integer(t: HalfInt) -> Result<SqrtPiValue, ExactError> {
    if t.is_integer() {
        let v = t.doubled / 2;
        if v <= 0 {
            return Err(ExactError::GammaPole(t));
        }
        return Ok(SqrtPiValue::rational(BigRational::from_integer(
            factorial((v - 1) as u64),
        )));
    }
    // Walk from Gamma(1/2) = sqrt(pi) to t with Gamma(z+1) = z Gamma(z).
    let mut r = BigRational::one();
    let mut z = HalfInt::from_doubled(1);
    while z < t {
        r *= z.to_rational();
        z = z + HalfInt::from_int(1);
    }
    while z > t {
        z = z - HalfInt::from_int(1);
        r /= z.to_rational();
    }
    Ok(SqrtPiValue {
        rational: r,
        sqrt_pi_power: 1,
    })
}

/// Ring operations needed by the fraction-free determinant.
pub trait ExactRing: Clone {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn ring_is_zero(&self) -> bool;
    fn ring_add(&self, o: &Self) -> Self;
    fn ring_sub(&self, o: &Self) -> Self;
    fn ring_mul(&self, o: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    /// Division known to be exact; `None` if it is not.
    fn ring_exact_div(&self, o: &Self) -> Option<Self>;
}

impl ExactRing for BigInt {
    fn ring_zero() -> Self {
        BigInt::zero()
    }
    fn ring_one() -> Self {
        BigInt::one()
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_add(&self, o: &Self) -> Self {
        self + o
    }
    fn ring_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn ring_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn ring_exact_div(&self, o: &Self) -> Option<Self> {
        if o.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(o);
        r.is_zero().then_some(q)
    }
}

impl ExactRing for QLaurent {
    fn ring_zero() -> Self {
        QLaurent::zero()
    }
    fn ring_one() -> Self {
        QLaurent::one()
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn ring_add(&self, o: &Self) -> Self {
        self + o
    }
    fn ring_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn ring_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn ring_exact_div(&self, o: &Self) -> Option<Self> {
        self.exact_div(o).ok()
    }
}

/// Determinant by Bareiss elimination with row pivoting.
///
/// Every intermediate division is exact over an integral domain; a failed
/// division would mean a bug, so it panics rather than returning garbage.
pub fn determinant<R: ExactRing>(m: &[Vec<R>]) -> R {
    let n = m.len();
    if n == 0 {
        return R::ring_one();
    }
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    let mut a: Vec<Vec<R>> = m.to_vec();
    let mut negate = false;
    let mut prev = R::ring_one();
    for k in 0..n - 1 {
        if a[k][k].ring_is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].ring_is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return R::ring_zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j].ring_mul(&a[k][k]).ring_sub(&a[i][k].ring_mul(&a[k][j]));
                a[i][j] = t
                    .ring_exact_div(&prev)
                    .expect("Bareiss step divides exactly");
            }
            a[i][k] = R::ring_zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        d.ring_neg()
    } else {
        d
    }
}

/// Rational as `{"num": string, "den": string}`.
pub fn rational_json(r: &BigRational) -> serde_json::Value {
    serde_json::json!({"num": r.numer().to_string(), "den": r.denom().to_string()})
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn qp(c: &[i64]) -> QLaurent {
        QLaurent::from_i64s(0, c)
    }

    /// Independent oracle: q-binomials from the q-Pascal recurrence, as plain
    /// coefficient vectors.
    fn pascal_table(nmax: usize) -> Vec<Vec<Vec<i64>>> {
        let mut t: Vec<Vec<Vec<i64>>> = vec![vec![vec![1]]];
        for n in 1..=nmax {
            let mut row = Vec::new();
            for m in 0..=n {
                let mut c = vec![0i64; m * (n - m) + 1];
                if m >= 1 {
                    for (i, v) in t[n - 1][m - 1].iter().enumerate() {
                        c[i] += v;
                    }
                }
                if m < n {
                    for (i, v) in t[n - 1][m].iter().enumerate() {
                        c[i + m] += v;
                    }
                }
                row.push(c);
            }
            t.push(row);
        }
        t
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial(2, 1), qp(&[1, 1]));
        assert_eq!(q_binomial(4, 2), qp(&[1, 1, 2, 1, 1]));
        assert!(q_binomial(3, 5).is_zero());
        assert!(q_binomial(3, -1).is_zero());
    }

    #[test]
    fn q_binomial_matches_pascal_oracle() {
        let t = pascal_table(12);
        for (n, row) in t.iter().enumerate() {
            for (m, c) in row.iter().enumerate() {
                assert_eq!(q_binomial(n as i64, m as i64), qp(c), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn q_binomial_symmetry_and_recurrence() {
        for n in 0..=12i64 {
            for m in 0..=n {
                assert_eq!(q_binomial(n, m), q_binomial(n, n - m));
                if n >= 1 {
                    let rhs = &q_binomial(n - 1, m - 1) + &q_binomial(n - 1, m).shift(m);
                    assert_eq!(q_binomial(n, m), rhs);
                }
            }
        }
    }

    /// Count N/E paths from (0,0) to (n,k) that never go above the diagonal,
    /// by brute-force enumeration of step sequences.
    fn ballot_paths(n: usize, k: usize) -> u64 {
        let len = n + k;
        let mut count = 0;
        for mask in 0u32..(1 << len) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let (mut x, mut y) = (0i32, 0i32);
            let mut ok = true;
            for s in 0..len {
                if mask >> s & 1 == 1 {
                    y += 1;
                } else {
                    x += 1;
                }
                if y > x {
                    ok = false;
                    break;
                }
            }
            if ok {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn catalan_triangle_counts_ballot_paths() {
        for n in 0..=8i64 {
            for k in 0..=n {
                let v = catalan_triangle_q(n, k);
                assert!(v.has_nonnegative_coeffs());
                assert_eq!(
                    v.eval_at_one(),
                    BigInt::from(ballot_paths(n as usize, k as usize)),
                    "n={n} k={k}"
                );
            }
        }
        assert_eq!(catalan_triangle_q(5, 0), QLaurent::one());
        assert_eq!(catalan_triangle_q(2, 1), qp(&[1, 1]));
        assert_eq!(catalan_triangle_q(8, 4).eval_at_one(), BigInt::from(275));
        assert!(catalan_triangle_q(-1, 0).is_zero());
        assert!(catalan_triangle_q(2, 3).is_zero());
        assert!(catalan_triangle_q(2, -1).is_zero());
    }

    #[test]
    fn gamma_values() {
        let g = gamma_half_integer(HalfInt::from_int(1)).unwrap();
        assert_eq!(g, SqrtPiValue::one());
        let g = gamma_half_integer(HalfInt::from_doubled(1)).unwrap();
        assert_eq!(g.sqrt_pi_power, 1);
        assert_eq!(g.rational, BigRational::one());
        let g = gamma_half_integer(HalfInt::from_doubled(5)).unwrap();
        assert_eq!(g.rational, BigRational::new(3.into(), 4.into()));
        assert_eq!(g.sqrt_pi_power, 1);
        // Gamma(-1/2) = -2 sqrt(pi)
        let g = gamma_half_integer(HalfInt::from_doubled(-1)).unwrap();
        assert_eq!(g.rational, BigRational::from_integer((-2).into()));
        assert!(gamma_half_integer(HalfInt::from_int(0)).is_err());
        assert!(gamma_half_integer(HalfInt::from_int(-3)).is_err());
    }

    #[test]
    fn gamma_recurrence() {
        for d in 1..=20 {
            let t = HalfInt::from_doubled(d);
            let lhs = gamma_half_integer(t + HalfInt::from_int(1)).unwrap();
            let rhs = gamma_half_integer(t).unwrap();
            let rhs = SqrtPiValue {
                rational: rhs.rational * t.to_rational(),
                sqrt_pi_power: rhs.sqrt_pi_power,
            };
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn gamma_float_agrees_with_known_value() {
        let g = gamma_half_integer(HalfInt::from_doubled(5)).unwrap().to_f64();
        assert!((g - 1.329_340_388_179_137).abs() < 1e-12);
    }

    #[test]
    fn exact_division_rejects_remainder() {
        let a = qp(&[1, 0, 1]);
        let b = qp(&[1, 1]);
        assert_eq!(a.exact_div(&b), Err(ExactError::InexactDivision));
        let c = &a * &b;
        assert_eq!(c.exact_div(&b).unwrap(), a);
        assert_eq!(a.exact_div(&QLaurent::zero()), Err(ExactError::DivisionByZero));
    }

    #[test]
    fn negative_q_int() {
        // [-2] = -(q^-2 + q^-1)
        assert_eq!(q_int(-2), QLaurent::from_i64s(-2, &[-1, -1]));
        assert_eq!(q_int(-2).eval_at_one(), BigInt::from(-2));
    }

    #[test]
    fn display_and_json() {
        let p = QLaurent::from_i64s(-1, &[2, 0, -1, 1]);
        assert_eq!(p.to_string(), "2q^-1 - q + q^2");
        assert_eq!(QLaurent::zero().to_string(), "0");
        let j = q_binomial(2, 1).to_json();
        assert_eq!(j.to_string(), r#"{"coeffs":["1","1"],"min_exp":0}"#);
        assert_eq!(serde_json::to_value(q_binomial(2, 1)).unwrap(), j);
    }

    #[test]
    fn eval_at_rational() {
        let p = QLaurent::from_i64s(-1, &[1, 0, 1]);
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(p.eval(&half).unwrap(), BigRational::new(5.into(), 2.into()));
        assert!(p.eval(&BigRational::zero()).is_err());
    }

    #[test]
    fn bareiss_matches_cofactor() {
        fn cofactor(m: &[Vec<i64>]) -> i64 {
            let n = m.len();
            if n == 0 {
                return 1;
            }
            (0..n)
                .map(|j| {
                    let minor: Vec<Vec<i64>> = m[1..]
                        .iter()
                        .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| *v).collect())
                        .collect();
                    let s = if j % 2 == 0 { 1 } else { -1 };
                    s * m[0][j] * cofactor(&minor)
                })
                .sum()
        }
        let mats = vec![
            vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 9]],
            vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]],
            vec![vec![1, 2], vec![2, 4]],
            vec![vec![275, 297, 132], vec![75, 90, 42], vec![20, 28, 14]],
        ];
        for m in mats {
            let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
            assert_eq!(determinant(&big), BigInt::from(cofactor(&m)));
        }
    }

    proptest! {
        #[test]
        fn prop_eval_is_ring_hom(a in proptest::collection::vec(-5i64..5, 0..6),
                                 b in proptest::collection::vec(-5i64..5, 0..6),
                                 ea in -3i64..3, eb in -3i64..3) {
            let pa = QLaurent::from_i64s(ea, &a);
            let pb = QLaurent::from_i64s(eb, &b);
            prop_assert_eq!((&pa * &pb).eval_at_one(), pa.eval_at_one() * pb.eval_at_one());
            prop_assert_eq!((&pa + &pb).eval_at_one(), pa.eval_at_one() + pb.eval_at_one());
            if !pb.is_zero() {
                prop_assert_eq!((&pa * &pb).exact_div(&pb).unwrap(), pa.clone());
            }
            // canonical form: trailing and leading coefficients nonzero
            let prod = &pa * &pb;
            if !prod.is_zero() {
                prop_assert!(!prod.coeffs()[0].is_zero());
                prop_assert!(!prod.coeffs().last().unwrap().is_zero());
            }
        }

        #[test]
        fn prop_halfint_order_matches_rational(a in -40i64..40, b in -40i64..40) {
            let (x, y) = (HalfInt::from_doubled(a), HalfInt::from_doubled(b));
            prop_assert_eq!(x.cmp(&y), x.to_rational().cmp(&y.to_rational()));
            prop_assert_eq!((x + y).to_rational(), x.to_rational() + y.to_rational());
        }
    }
}
