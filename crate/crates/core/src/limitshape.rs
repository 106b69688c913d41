//! Limit densities and limit shapes of random diagrams, and the scaled
//! boundaries of finite diagrams they are compared against. Everything here
//! is binary64.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::ensembles::Pair;
use crate::partitions::Partition;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ShapeError {
    #[error("c must be positive, got {0}")]
    BadRatio(f64),
    #[error("x = {x} lies outside [0, {max}]")]
    OutOfDomain { x: f64, max: f64 },
    #[error("curves have different domains ({0} vs {1})")]
    DomainMismatch(f64, f64),
    #[error("unknown shape series `{0}` (expected GL or HALF)")]
    UnknownSeries(String),
    #[error("no curves to average")]
    Empty,
}

/// Which limit curve: the full GL curve or the half curve of the orthogonal
/// and symplectic pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ShapeSeries {
    Gl,
    Half,
}

impl ShapeSeries {
    pub fn of_pair(p: Pair) -> Self {
        if p == Pair::Gl {
            ShapeSeries::Gl
        } else {
            ShapeSeries::Half
        }
    }

    /// Right end of the domain of `x`.
    pub fn domain_end(self, c: f64) -> f64 {
        match self {
            ShapeSeries::Gl => c + 1.0,
            ShapeSeries::Half => (c + 1.0) / 2.0,
        }
    }
}

impl fmt::Display for ShapeSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ShapeSeries::Gl => "GL",
            ShapeSeries::Half => "HALF",
        })
    }
}

impl FromStr for ShapeSeries {
    type Err = ShapeError;
    fn from_str(s: &str) -> Result<Self, ShapeError> {
        match s.to_ascii_uppercase().as_str() {
            "GL" | "A" => Ok(ShapeSeries::Gl),
            "HALF" | "BC" | "D" | "B" | "C" => Ok(ShapeSeries::Half),
            _ => Err(ShapeError::UnknownSeries(s.to_string())),
        }
    }
}

/// Sampled curve `y = f(x)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ShapeCurve {
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
    pub series: ShapeSeries,
    pub c: f64,
}

impl ShapeCurve {
    /// Largest `|dy/dx|` between consecutive samples.
    pub fn max_slope(&self) -> f64 {
        self.xs
            .windows(2)
            .zip(self.ys.windows(2))
            .map(|(x, y)| ((y[1] - y[0]) / (x[1] - x[0])).abs())
            .fold(0.0, f64::max)
    }

    pub fn domain_end(&self) -> f64 {
        self.xs.last().copied().unwrap_or(0.0)
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("x,f\n");
        for (x, y) in self.xs.iter().zip(&self.ys) {
            s.push_str(&format!("{x:.9},{y:.9}\n"));
        }
        s
    }
}

fn check_c(c: f64) -> Result<(), ShapeError> {
    if c > 0.0 && c.is_finite() {
        Ok(())
    } else {
        Err(ShapeError::BadRatio(c))
    }
}

/// Limit density at the centered coordinate `xt`.
///
/// For `c > 1` this is the particle density supported on `[-sqrt c, sqrt c]`.
/// For `c < 1` it is the complementary density `rho_1` on the same interval,
/// with total mass `c`; the particle density is `1 - rho_1` on the whole
/// domain. At `c = 1` the density is `1/2` on `[-1, 1]`.
pub fn rho(xt: f64, c: f64) -> Result<f64, ShapeError> {
    check_c(c)?;
    let a = c.sqrt();
    if c == 1.0 {
        return Ok(if xt.abs() <= 1.0 { 0.5 } else { 0.0 });
    }
    // at the edges both arctan arguments blow up with opposite signs
    if xt.abs() >= a || c - xt * xt <= 1e-14 * c {
        return Ok(0.0);
    }
    let den = (c - 1.0).abs() * (c - xt * xt).max(0.0).sqrt();
    let v = ((-(c + 1.0) * xt + 2.0 * c).atan2(den) + ((c + 1.0) * xt + 2.0 * c).atan2(den)) / (2.0 * PI);
    Ok(v.clamp(0.0, 1.0))
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adapt(f: &impl Fn(f64) -> f64, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, tol: f64, depth: u32) -> f64 {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm), f(rm));
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    adapt(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) + adapt(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
}

/// Adaptive Simpson quadrature with absolute tolerance `tol` and at most
/// `2^16` subintervals.
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let (fa, fm, fb) = (f(a), f(0.5 * (a + b)), f(b));
    let whole = simpson(a, b, fa, fm, fb);
    adapt(&f, a, b, fa, fm, fb, whole, tol, 16)
}

pub const QUAD_TOL: f64 = 1e-9;

/// `int_{-inf}^{xt} rho`, integrated in `theta` with `xt = sqrt(c) sin(theta)`.
pub fn rho_mass(xt: f64, c: f64) -> Result<f64, ShapeError> {
    check_c(c)?;
    let a = c.sqrt();
    let t = xt.clamp(-a, a);
    if c == 1.0 {
        return Ok(0.5 * (t + 1.0));
    }
    let hi = (t / a).clamp(-1.0, 1.0).asin();
    let g = |th: f64| rho(a * th.sin(), c).unwrap_or(0.0) * a * th.cos();
    Ok(integrate(g, -PI / 2.0, hi, QUAD_TOL))
}

/// Limit shape `f(x)` of the rotated, rescaled diagram boundary.
pub fn limit_f(x: f64, c: f64, series: ShapeSeries) -> Result<f64, ShapeError> {
    check_c(c)?;
    let end = series.domain_end(c);
    let eps = 1e-12 * end.max(1.0);
    if !(-eps..=end + eps).contains(&x) {
        return Err(ShapeError::OutOfDomain { x, max: end });
    }
    let x = x.clamp(0.0, end);
    let (start, xt) = match series {
        ShapeSeries::Gl => (-(c + 1.0) / 2.0, x - (c + 1.0) / 2.0),
        ShapeSeries::Half => (0.0, x),
    };
    let mass = rho_mass(xt, c)? - rho_mass(start, c)?;
    Ok(if c >= 1.0 { 1.0 + x - 2.0 * mass } else { 1.0 - x + 2.0 * mass })
}

/// `limit_f` on `points + 1` equally spaced abscissae.
pub fn limit_curve(c: f64, series: ShapeSeries, points: usize) -> Result<ShapeCurve, ShapeError> {
    let end = series.domain_end(c);
    let xs: Vec<f64> = (0..=points).map(|i| end * i as f64 / points.max(1) as f64).collect();
    let ys = xs.iter().map(|&x| limit_f(x, c, series)).collect::<Result<_, _>>()?;
    Ok(ShapeCurve { xs, ys, series, c })
}

/// Boundary of `lambda` inside the `n x k` box, rotated and rescaled.
///
/// GL: each row gives a descent on `[a_i, a_i + 1] / n` with
/// `a_i = lambda_i + n - i`, over `[0, (n + k) / n]`, and `c = k / n`.
/// Other pairs (`n = l` rows, `k` = half the tensor factors): descents on
/// `[b_i, b_i + 1] / (2l)` with `b_i = lambda_i + l - i`, over
/// `[0, (k + l) / (2l)]`, and `c = k / l`. Both start at height 1.
pub fn diagram_boundary(lambda: &Partition, n: usize, k: usize, series: ShapeSeries) -> ShapeCurve {
    let cells = n + k;
    let scale = match series {
        ShapeSeries::Gl => n as f64,
        ShapeSeries::Half => 2.0 * n as f64,
    };
    let mut descent = vec![false; cells];
    for i in 0..n {
        let a = lambda.part(i) + (n - 1 - i) as i64;
        if (0..cells as i64).contains(&a) {
            descent[a as usize] = true;
        }
    }
    let mut xs = Vec::with_capacity(cells + 1);
    let mut ys = Vec::with_capacity(cells + 1);
    let mut y = 1.0;
    xs.push(0.0);
    ys.push(y);
    for (t, &d) in descent.iter().enumerate() {
        y += if d { -1.0 / scale } else { 1.0 / scale };
        xs.push((t + 1) as f64 / scale);
        ys.push(y);
    }
    ShapeCurve { xs, ys, series, c: k as f64 / n.max(1) as f64 }
}

/// Pointwise mean of boundaries sharing one grid.
pub fn mean_curve(curves: &[ShapeCurve]) -> Result<ShapeCurve, ShapeError> {
    let first = curves.first().ok_or(ShapeError::Empty)?;
    let mut ys = vec![0.0; first.ys.len()];
    for cv in curves {
        if cv.xs.len() != first.xs.len() {
            return Err(ShapeError::DomainMismatch(cv.domain_end(), first.domain_end()));
        }
        for (s, y) in ys.iter_mut().zip(&cv.ys) {
            *s += y;
        }
    }
    let m = curves.len() as f64;
    ys.iter_mut().for_each(|s| *s /= m);
    Ok(ShapeCurve { xs: first.xs.clone(), ys, series: first.series, c: first.c })
}

/// Mean boundary of a set of diagrams in the same box.
pub fn mean_boundary(diagrams: &[Partition], n: usize, k: usize, series: ShapeSeries) -> Result<ShapeCurve, ShapeError> {
    let curves: Vec<ShapeCurve> = diagrams.iter().map(|l| diagram_boundary(l, n, k, series)).collect();
    mean_curve(&curves)
}

/// `max |f_n(x) - f(x)|` over the abscissae of `curve`.
pub fn sup_distance(curve: &ShapeCurve, c: f64, series: ShapeSeries) -> Result<f64, ShapeError> {
    let end = series.domain_end(c);
    if (curve.domain_end() - end).abs() > 1e-9 * end.max(1.0) {
        return Err(ShapeError::DomainMismatch(curve.domain_end(), end));
    }
    let mut d: f64 = 0.0;
    for (&x, &y) in curve.xs.iter().zip(&curve.ys) {
        d = d.max((y - limit_f(x, c, series)?).abs());
    }
    Ok(d)
}

/// Predicted first row: `sqrt(kn) + (k - n)/2` for GL, `sqrt(2kl)` otherwise
/// (`n = l`, `k` half the tensor factors).
pub fn first_row_prediction(n: usize, k: usize, pair: Pair) -> f64 {
    let (n, k) = (n as f64, k as f64);
    match pair {
        Pair::Gl => (k * n).sqrt() + (k - n) / 2.0,
        _ => (2.0 * k * n).sqrt(),
    }
}
