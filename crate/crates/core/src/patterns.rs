//! Gelfand-Tsetlin and Proctor patterns, semistandard tableaux, lattice path
//! families, half-hexagon lozenge tilings, and plane partitions. Everything
//! here is an independent counting oracle for a dimension or a determinant.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exact::{binomial, catalan_triangle_q, determinant};
use crate::multiplicity::Series;
use crate::partitions::{Partition, PartitionError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PatternError {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("invalid pattern: {0}")]
    Invalid(String),
    #[error("invalid tiling: {0}")]
    InvalidTiling(String),
    #[error("exhaustive search needs {size} path tuples, budget is {budget}")]
    BudgetExceeded { size: BigInt, budget: u64 },
}

/// Default cap on path tuples for exhaustive NILP counts.
pub const NILP_BUDGET: u64 = 1_000_000;

// ---------------------------------------------------------------- GT patterns

/// Rows from the top: `rows[0]` has `k` entries, the last row has one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GTPattern {
    pub rows: Vec<Vec<i64>>,
}

fn interlaces(upper: &[i64], lower: &[i64]) -> bool {
    lower.len() + 1 == upper.len()
        && lower
            .iter()
            .enumerate()
            .all(|(i, &y)| upper[i] >= y && y >= upper[i + 1])
}

impl GTPattern {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, PatternError> {
        let k = rows.len();
        for (t, r) in rows.iter().enumerate() {
            if r.len() != k - t {
                return Err(PatternError::Invalid(format!("row {t} has {} entries", r.len())));
            }
        }
        for w in rows.windows(2) {
            if !interlaces(&w[0], &w[1]) {
                return Err(PatternError::Invalid(format!("{:?} does not interlace {:?}", w[1], w[0])));
            }
        }
        Ok(GTPattern { rows })
    }

    pub fn top(&self) -> &[i64] {
        self.rows.first().map(|r| r.as_slice()).unwrap_or(&[])
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    /// Row with `j` entries (`1 <= j <= k`).
    pub fn row_with(&self, j: usize) -> &[i64] {
        &self.rows[self.k() - j]
    }

    /// The semistandard tableau whose entries `<= j` fill the shape given by
    /// the row with `j` entries.
    pub fn to_tableau(&self) -> Tableau {
        let top = Partition::new(self.top().to_vec()).expect("top row of a GT pattern with nonnegative entries");
        let mut rows: Vec<Vec<i64>> = top.parts().iter().map(|&l| vec![0; l as usize]).collect();
        let mut prev = vec![0i64; self.k()];
        for j in 1..=self.k() {
            let row = self.row_with(j);
            for (r, &len) in row.iter().enumerate() {
                for c in prev[r]..len {
                    rows[r][c as usize] = j as i64;
                }
                prev[r] = len;
            }
        }
        Tableau { rows }
    }

    pub fn from_tableau(t: &Tableau, k: usize) -> Result<GTPattern, PatternError> {
        let rows = (1..=k as i64)
            .rev()
            .map(|j| {
                (0..j as usize)
                    .map(|r| t.rows.get(r).map_or(0, |row| row.iter().filter(|&&x| x <= j).count() as i64))
                    .collect()
            })
            .collect();
        GTPattern::new(rows)
    }
}

fn lower_rows(upper: &[i64]) -> Vec<Vec<i64>> {
    let m = upper.len() - 1;
    let mut out = vec![Vec::with_capacity(m)];
    for i in 0..m {
        let mut next = Vec::new();
        for v in &out {
            for y in upper[i + 1]..=upper[i] {
                let mut w = v.clone();
                w.push(y);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

/// Number of GT patterns with top row `lambda` padded to `k` entries.
pub fn count_gt(lambda: &Partition, k: usize) -> Result<BigInt, PatternError> {
    if lambda.len() > k {
        return Err(PatternError::Invalid(format!("{lambda} has more than {k} parts")));
    }
    if k == 0 {
        return Ok(BigInt::one());
    }
    let mut memo = HashMap::new();
    Ok(count_gt_rows(&lambda.padded(k), &mut memo))
}

fn count_gt_rows(row: &[i64], memo: &mut HashMap<Vec<i64>, BigInt>) -> BigInt {
    if row.len() == 1 {
        return BigInt::one();
    }
    if let Some(v) = memo.get(row) {
        return v.clone();
    }
    let total: BigInt = lower_rows(row).iter().map(|r| count_gt_rows(r, memo)).sum();
    memo.insert(row.to_vec(), total.clone());
    total
}

/// Every GT pattern with the given top row.
pub fn enumerate_gt(top: &[i64]) -> Vec<GTPattern> {
    if top.is_empty() {
        return vec![GTPattern { rows: Vec::new() }];
    }
    let mut partial: Vec<Vec<Vec<i64>>> = vec![vec![top.to_vec()]];
    for _ in 1..top.len() {
        partial = partial
            .into_iter()
            .flat_map(|rows| {
                lower_rows(rows.last().unwrap()).into_iter().map(move |r| {
                    let mut v = rows.clone();
                    v.push(r);
                    v
                })
            })
            .collect();
    }
    partial.into_iter().map(|rows| GTPattern { rows }).collect()
}

// ------------------------------------------------------------------ tableaux

/// A tableau stored by rows; entries are positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Tableau {
    pub rows: Vec<Vec<i64>>,
}

impl Tableau {
    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as i64).collect()).expect("tableau rows weakly decrease")
    }

    pub fn is_semistandard(&self) -> bool {
        let shape_ok = self.rows.windows(2).all(|w| w[0].len() >= w[1].len());
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]) && r.iter().all(|&x| x >= 1));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().enumerate().all(|(c, &x)| w[0][c] < x));
        shape_ok && rows_ok && cols_ok
    }

    pub fn max_entry(&self) -> i64 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }
}

/// `psi(T)(r, c) = T(c, r) + r - c` (one-based cells). An involution on
/// semistandard tableaux that transposes the shape.
pub fn psi_involution(t: &Tableau) -> Result<Tableau, PatternError> {
    if !t.is_semistandard() {
        return Err(PatternError::Invalid("psi needs a semistandard tableau".into()));
    }
    let conj = t.shape().conjugate();
    let rows = conj
        .parts()
        .iter()
        .enumerate()
        .map(|(r, &len)| (0..len as usize).map(|c| t.rows[c][r] + r as i64 - c as i64).collect())
        .collect();
    Ok(Tableau { rows })
}

/// Semistandard tableaux of `shape` with entries in row `i` at most `bounds[i]`.
pub fn enumerate_ssyt(shape: &Partition, bounds: &[i64]) -> Vec<Tableau> {
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &l)| (0..l as usize).map(move |c| (r, c)))
        .collect();
    let mut rows: Vec<Vec<i64>> = shape.parts().iter().map(|&l| vec![0; l as usize]).collect();
    let mut out = Vec::new();
    fill_ssyt(&cells, 0, &mut rows, bounds, &mut out);
    out
}

fn fill_ssyt(cells: &[(usize, usize)], idx: usize, rows: &mut Vec<Vec<i64>>, bounds: &[i64], out: &mut Vec<Tableau>) {
    if idx == cells.len() {
        out.push(Tableau { rows: rows.clone() });
        return;
    }
    let (r, c) = cells[idx];
    let mut lo = 1;
    if c > 0 {
        lo = lo.max(rows[r][c - 1]);
    }
    if r > 0 {
        lo = lo.max(rows[r - 1][c] + 1);
    }
    let hi = bounds.get(r).copied().unwrap_or(i64::MAX);
    for v in lo..=hi {
        rows[r][c] = v;
        fill_ssyt(cells, idx + 1, rows, bounds, out);
    }
    rows[r][c] = 0;
}

/// Flag bounds `f_i = i + 1 + lambda_{n-i}` for the rows of the complement.
pub fn flag_bounds(lambda: &Partition, n: usize) -> Vec<i64> {
    (0..n).map(|i| i as i64 + 1 + lambda.part(n - 1 - i)).collect()
}

// ----------------------------------------------------------------- lozenges

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Tile {
    R,
    G,
    B,
}

/// A tiling of the half hexagon attached to an `n x k` box: column `j`
/// (counted from the right, `1..=k`) holds the cells at heights
/// `k+1-j ..= n+k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LozengeTiling {
    pub n: usize,
    pub k: usize,
    pub boundary: Vec<i64>,
    /// `(height, column, tile)`, sorted by column then height.
    pub tiles: Vec<(i64, usize, Tile)>,
}

impl LozengeTiling {
    pub fn to_json(&self) -> serde_json::Value {
        let tiles: Vec<serde_json::Value> = self
            .tiles
            .iter()
            .map(|(h, c, t)| serde_json::json!([h, c, format!("{t:?}")]))
            .collect();
        serde_json::json!({
            "domain": {"shape": "half-hexagon", "n": self.n, "k": self.k, "boundary": self.boundary},
            "tiles": tiles,
        })
    }
}

fn column_range(n: usize, k: usize, j: usize) -> std::ops::RangeInclusive<i64> {
    (k as i64 + 1 - j as i64)..=(n + k) as i64
}

pub fn gt_to_lozenge(g: &GTPattern, n: usize, k: usize) -> Result<LozengeTiling, PatternError> {
    if g.k() != k {
        return Err(PatternError::InvalidTiling(format!("pattern has {} rows, k = {k}", g.k())));
    }
    if g.top().iter().any(|&x| x < 0 || x > n as i64) {
        return Err(PatternError::InvalidTiling(format!("top row {:?} does not fit height {n}", g.top())));
    }
    let b_heights = |j: usize| -> HashSet<i64> {
        if j == 0 {
            return HashSet::new();
        }
        g.row_with(j)
            .iter()
            .enumerate()
            .map(|(i, &m)| m + k as i64 - i as i64)
            .collect()
    };
    let mut tiles = Vec::new();
    for j in 1..=k {
        let here = b_heights(j);
        let left = b_heights(j - 1);
        for h in column_range(n, k, j) {
            let t = if here.contains(&h) {
                Tile::B
            } else {
                let above_here = here.iter().filter(|&&x| x > h).count();
                let above_left = left.iter().filter(|&&x| x > h).count();
                if above_here == above_left {
                    Tile::R
                } else {
                    Tile::G
                }
            };
            tiles.push((h, j, t));
        }
    }
    Ok(LozengeTiling { n, k, boundary: g.top().to_vec(), tiles })
}

pub fn lozenge_to_gt(t: &LozengeTiling) -> Result<GTPattern, PatternError> {
    let (n, k) = (t.n, t.k);
    let mut rows = Vec::new();
    for j in (1..=k).rev() {
        let mut hs: Vec<i64> = t
            .tiles
            .iter()
            .filter(|(_, c, tile)| *c == j && *tile == Tile::B)
            .map(|(h, _, _)| *h)
            .collect();
        if hs.len() != j {
            return Err(PatternError::InvalidTiling(format!("column {j} has {} B tiles", hs.len())));
        }
        hs.sort_unstable_by(|a, b| b.cmp(a));
        rows.push(hs.iter().enumerate().map(|(i, &h)| h - k as i64 + i as i64).collect());
    }
    let g = GTPattern::new(rows)?;
    // The R/G labels are determined by the B tiles; reject inconsistent input.
    if gt_to_lozenge(&g, n, k)? != *t {
        return Err(PatternError::InvalidTiling("R/G labels disagree with B tiles".into()));
    }
    Ok(g)
}

// -------------------------------------------------------------------- NILPs

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Step {
    E,
    N,
    /// The two parallel north steps onto the diagonal of the folded grid.
    NPlus,
    NMinus,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Nilp {
    pub starts: Vec<(i64, i64)>,
    pub ends: Vec<(i64, i64)>,
    pub paths: Vec<Vec<Step>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NilpMethod {
    LgvDeterminant,
    Exhaustive,
}

/// Lattice points `(x, y)`.
pub type Vertices = Vec<(i64, i64)>;

/// Start and end vertices of the path family for a multiplicity.
pub fn nilp_endpoints(
    series: Series,
    n: usize,
    k: usize,
    p: i64,
    lambda: &Partition,
) -> Result<(Vertices, Vertices), PatternError> {
    lambda.check_box(n as i64, k as i64)?;
    let (ni, ki) = (n as i64, k as i64);
    Ok(match series {
        Series::A => (
            (0..ni).map(|i| (0, -i)).collect(),
            (0..ni)
                .map(|j| {
                    let l = lambda.part((ni - 1 - j) as usize);
                    (j + l, ki - j - l)
                })
                .collect(),
        ),
        Series::BC => (
            (1..=ni).map(|i| (i - ni, i - ni)).collect(),
            (1..=ni)
                .map(|j| {
                    let l = lambda.part(j as usize - 1);
                    (ni - j + ki + p + l, j - ni + ki - l)
                })
                .collect(),
        ),
        Series::D => (
            (0..ni).map(|i| (-i, -i)).collect(),
            (0..ni)
                .map(|j| {
                    let l = lambda.part((ni - 1 - j) as usize);
                    (ki + p + j + l, ki - j - l)
                })
                .collect(),
        ),
    })
}

/// Number of single paths between two vertices in the grid of the series.
pub fn path_count(series: Series, from: (i64, i64), to: (i64, i64)) -> BigInt {
    let (dx, dy) = (to.0 - from.0, to.1 - from.1);
    if dx < 0 || dy < 0 {
        return BigInt::zero();
    }
    match series {
        Series::A => binomial(dx + dy, dx),
        // Both BC and D start on the diagonal.
        Series::BC => catalan_triangle_q(dx, dy).eval_at_one(),
        Series::D => {
            if to.1 > to.0 {
                BigInt::zero()
            } else {
                binomial(dx + dy, dy)
            }
        }
    }
}

fn below_diagonal(series: Series, v: (i64, i64)) -> bool {
    series == Series::A || v.1 <= v.0
}

/// Count NILPs for the multiplicity of `lambda`, either through the LGV
/// determinant or by exhaustive search.
pub fn nilp_count(
    series: Series,
    n: usize,
    k: usize,
    p: i64,
    lambda: &Partition,
    method: NilpMethod,
) -> Result<BigInt, PatternError> {
    let (s, t) = nilp_endpoints(series, n, k, p, lambda)?;
    match method {
        NilpMethod::LgvDeterminant => {
            let m: Vec<Vec<BigInt>> = s
                .iter()
                .map(|&a| t.iter().map(|&b| path_count(series, a, b)).collect())
                .collect();
            Ok(determinant(&m))
        }
        NilpMethod::Exhaustive => Ok(BigInt::from(enumerate_nilps(series, &s, &t, NILP_BUDGET)?.len())),
    }
}

/// All vertex-disjoint families with path `i` from `starts[i]` to `ends[i]`.
pub fn enumerate_nilps(
    series: Series,
    starts: &[(i64, i64)],
    ends: &[(i64, i64)],
    budget: u64,
) -> Result<Vec<Nilp>, PatternError> {
    let size: BigInt = starts
        .iter()
        .zip(ends)
        .map(|(&a, &b)| path_count(series, a, b))
        .product();
    if size > BigInt::from(budget) {
        return Err(PatternError::BudgetExceeded { size, budget });
    }
    let mut out = HashSet::new();
    let mut used = HashSet::new();
    let mut paths = Vec::new();
    search_family(series, starts, ends, 0, &mut used, &mut paths, &mut out);
    Ok(out.into_iter().collect())
}

fn search_family(
    series: Series,
    starts: &[(i64, i64)],
    ends: &[(i64, i64)],
    i: usize,
    used: &mut HashSet<(i64, i64)>,
    paths: &mut Vec<Vec<Step>>,
    out: &mut HashSet<Nilp>,
) {
    if i == starts.len() {
        out.insert(Nilp { starts: starts.to_vec(), ends: ends.to_vec(), paths: paths.clone() });
        return;
    }
    if used.contains(&starts[i]) {
        return;
    }
    let mut singles = Vec::new();
    let mut cur = Vec::new();
    let mut visited = vec![starts[i]];
    single_paths(series, starts[i], ends[i], used, &mut visited, &mut cur, &mut singles);
    for (steps, verts) in singles {
        for v in &verts {
            used.insert(*v);
        }
        paths.push(steps);
        search_family(series, starts, ends, i + 1, used, paths, out);
        paths.pop();
        for v in &verts {
            used.remove(v);
        }
    }
}

type PathWithVertices = (Vec<Step>, Vec<(i64, i64)>);

fn single_paths(
    series: Series,
    at: (i64, i64),
    end: (i64, i64),
    used: &HashSet<(i64, i64)>,
    visited: &mut Vec<(i64, i64)>,
    steps: &mut Vec<Step>,
    out: &mut Vec<PathWithVertices>,
) {
    if at == end {
        out.push((steps.clone(), visited.clone()));
        return;
    }
    let mut moves: Vec<(Step, (i64, i64))> = Vec::new();
    if at.0 < end.0 {
        moves.push((Step::E, (at.0 + 1, at.1)));
    }
    if at.1 < end.1 {
        let nxt = (at.0, at.1 + 1);
        if series == Series::D && nxt.0 == nxt.1 {
            moves.push((Step::NPlus, nxt));
            moves.push((Step::NMinus, nxt));
        } else {
            moves.push((Step::N, nxt));
        }
    }
    for (s, v) in moves {
        if !below_diagonal(series, v) || used.contains(&v) {
            continue;
        }
        steps.push(s);
        visited.push(v);
        single_paths(series, v, end, used, visited, steps, out);
        visited.pop();
        steps.pop();
    }
}

// ---------------------------------------------------------- Proctor patterns

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ProctorSeries {
    B,
    C,
    D,
}

/// Count Proctor-style half patterns with top row `lambda` at rank `k`. Entries
/// are stored doubled so that the half-integer entries of type B fit.
///
/// * C: rows of lengths `k, k, k-1, k-1, ..., 1, 1`; between two rows of equal
///   length the lower row also interlaces with 0 on the right.
/// * B: as C, but the last entry of the second row of each equal-length pair
///   may be a half-integer.
/// * D: orthogonal GT rows of lengths `k, k-1, k-1, k-2, ...` for
///   `so(2k) > so(2k-1) > ... > so(2)`, with a signed last entry on the even
///   rows and interlacing in absolute value.
pub fn count_proctor(series: ProctorSeries, lambda: &[i64], k: usize) -> Result<BigInt, PatternError> {
    if lambda.len() > k {
        return Err(PatternError::Invalid(format!("{lambda:?} has more than {k} entries")));
    }
    let mut top: Vec<i64> = lambda.to_vec();
    top.resize(k, 0);
    let dominant = match series {
        ProctorSeries::B | ProctorSeries::C => {
            top.windows(2).all(|w| w[0] >= w[1]) && top.last().is_none_or(|&x| x >= 0)
        }
        ProctorSeries::D => {
            k < 2 || (top[..k - 1].windows(2).all(|w| w[0] >= w[1]) && top[k - 2] >= top[k - 1].abs())
        }
    };
    if !dominant {
        return Err(PatternError::Invalid(format!("{lambda:?} is not dominant")));
    }
    if k == 0 {
        return Ok(BigInt::one());
    }
    let doubled: Vec<i64> = top.iter().map(|x| 2 * x).collect();
    let mut memo = HashMap::new();
    Ok(proctor_rows(series, &doubled, 0, k, &mut memo))
}

/// Candidates for the next row below `upper` (doubled entries). `step` is the
/// index of the row being produced (the top row has index 0).
fn proctor_next(series: ProctorSeries, upper: &[i64], step: usize) -> Vec<Vec<i64>> {
    let a = upper.len();
    // For B and C, even steps keep the length and odd steps drop one entry.
    // For D, odd steps drop to so(odd) and even steps keep the length.
    let same_len = match series {
        ProctorSeries::B | ProctorSeries::C => step % 2 == 1,
        ProctorSeries::D => step.is_multiple_of(2),
    };
    let len = if same_len { a } else { a - 1 };
    let abs_upper: Vec<i64> = upper.iter().map(|x| x.abs()).collect();
    let mut out = vec![Vec::with_capacity(len)];
    for i in 0..len {
        let hi = abs_upper[i];
        let lo = if i + 1 < a { abs_upper[i + 1] } else { 0 };
        let last = i + 1 == len;
        let half_ok = series == ProctorSeries::B && same_len && last;
        let signed = series == ProctorSeries::D && same_len && last;
        let mut vals: Vec<i64> = Vec::new();
        let stride = if half_ok { 1 } else { 2 };
        let mut v = lo;
        // lo and hi are doubled; for integer rows they are even.
        if !half_ok && v % 2 != 0 {
            v += 1;
        }
        while v <= hi {
            vals.push(v);
            if signed && v > 0 {
                vals.push(-v);
            }
            v += stride;
        }
        let mut next = Vec::new();
        for prefix in &out {
            for &x in &vals {
                let mut w = prefix.clone();
                w.push(x);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

fn proctor_rows(
    series: ProctorSeries,
    row: &[i64],
    step: usize,
    k: usize,
    memo: &mut HashMap<(Vec<i64>, usize), BigInt>,
) -> BigInt {
    let total_rows = match series {
        ProctorSeries::B | ProctorSeries::C => 2 * k,
        ProctorSeries::D => 2 * k - 1,
    };
    if step + 1 == total_rows {
        return BigInt::one();
    }
    let key = (row.to_vec(), step);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let total: BigInt = proctor_next(series, row, step + 1)
        .iter()
        .map(|r| proctor_rows(series, r, step + 1, k, memo))
        .sum();
    memo.insert(key, total.clone());
    total
}

// --------------------------------------------------------- plane partitions

/// MacMahon's box formula `prod (i+j+l-1)/(i+j+l-2)`.
pub fn plane_partition_count(a: usize, b: usize, c: usize) -> BigInt {
    let mut r = BigRational::one();
    for i in 1..=a {
        for j in 1..=b {
            for l in 1..=c {
                let s = (i + j + l) as i64;
                r *= BigRational::new(BigInt::from(s - 1), BigInt::from(s - 2));
            }
        }
    }
    assert!(r.is_integer());
    r.to_integer()
}

/// Count `a x b` arrays with entries in `0..=c`, weakly decreasing along rows
/// and columns, by a row-by-row transfer over weakly decreasing rows.
pub fn plane_partition_exhaustive(a: usize, b: usize, c: usize) -> BigInt {
    let rows: Vec<Vec<i64>> = crate::partitions::enumerate_in_box(b, c as i64)
        .map(|p| p.padded(b))
        .collect();
    let mut counts: Vec<BigInt> = vec![BigInt::one(); rows.len()];
    for _ in 1..a {
        counts = rows
            .iter()
            .map(|r| {
                rows.iter()
                    .zip(&counts)
                    .filter(|(up, _)| up.iter().zip(r).all(|(x, y)| x >= y))
                    .map(|(_, n)| n.clone())
                    .sum()
            })
            .collect();
    }
    if a == 0 {
        return BigInt::one();
    }
    counts.into_iter().sum()
}

/// The float value of a big integer, for reports.
pub fn approx(x: &BigInt) -> f64 {
    x.to_f64().unwrap_or(f64::INFINITY)
}
