use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use howe_core::crystals::{formula_mismatches, multiplicity_oracle};
use howe_core::ensembles::{measure_table, most_probable_diagram, sample, Pair};
use howe_core::exact::{rational_json, QLaurent};
use howe_core::limitshape::{
    diagram_boundary, limit_f, mean_boundary, rho, sup_distance, ShapeCurve, ShapeSeries,
};
use howe_core::multiplicity::{
    mult_det_a_q, mult_det_bc_q, mult_det_d_q, mult_prod_a_q, mult_prod_bc_q, mult_prod_d_q,
    verify_duality, DualitySpec, LieType, Series,
};
use howe_core::partitions::{Partition, TypeDWeight};
use howe_core::patterns::{enumerate_gt, gt_to_lozenge};

#[derive(Parser)]
#[command(name = "howe", version, about = "Skew Howe duality multiplicities, measures and limit shapes")]
struct Cli {
    /// Maximum number of worker threads.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// q-multiplicity of one highest weight.
    Mult(MultArgs),
    /// Check the determinant, product and q-dimension identities on a whole box.
    Verify(VerifyArgs),
    /// Exact probability table of a dual pair.
    Measure(MeasureArgs),
    /// Random diagrams, one JSON object per line.
    Sample(SampleArgs),
    /// Limit density and limit shape on a grid.
    Shape(ShapeArgs),
    /// Sup distance between sampled (or most probable) diagrams and the limit shape.
    Compare(CompareArgs),
    /// Lozenge tiling of a Gelfand-Tsetlin pattern.
    Tiling(TilingArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct Output {
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format; defaults to csv for `.csv` paths and json otherwise.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

impl Output {
    fn format(&self) -> Format {
        self.format.unwrap_or_else(|| match &self.out {
            Some(p) if p.extension().is_some_and(|e| e == "csv") => Format::Csv,
            _ => Format::Json,
        })
    }
}

fn parse_series(s: &str) -> Result<Series, String> {
    Series::from_str(s)
}

fn parse_pair(s: &str) -> Result<Pair, String> {
    Pair::from_str(s).map_err(|e| e.to_string())
}

fn parse_shape_series(s: &str) -> Result<ShapeSeries, String> {
    ShapeSeries::from_str(s).map_err(|e| e.to_string())
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    BigRational::from_str(s.trim()).map_err(|_| format!("not a rational number: {s:?}"))
}

fn parse_p(s: &str) -> Result<i64, String> {
    match s {
        "0" => Ok(0),
        "1" => Ok(1),
        _ => Err("p must be 0 or 1".into()),
    }
}

#[derive(Args)]
struct DualityArgs {
    #[arg(long, value_parser = parse_series)]
    series: Series,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value = "0", value_parser = parse_p)]
    p: i64,
}

#[derive(Args)]
struct MultArgs {
    #[command(flatten)]
    spec: DualityArgs,
    /// Highest weight as a comma list, e.g. "3,1"; the last entry may be negative for series D.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    lambda: String,
    /// Evaluate the q-multiplicity at this rational point.
    #[arg(long, conflicts_with = "q_poly")]
    q_at: Option<String>,
    /// Emit only the q-polynomial.
    #[arg(long)]
    q_poly: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    spec: DualityArgs,
    /// Also enumerate the tensor-power crystal and compare its counts.
    #[arg(long)]
    oracle: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct PairArgs {
    #[arg(long, value_parser = parse_pair)]
    pair: Pair,
    /// Rows of the box (the rank l for the non-GL pairs).
    #[arg(long)]
    n: usize,
    /// Columns of the box (half the number of tensor factors for the non-GL pairs).
    #[arg(long)]
    k: usize,
}

#[derive(Args)]
struct MeasureArgs {
    #[command(flatten)]
    pair: PairArgs,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct SampleArgs {
    #[command(flatten)]
    pair: PairArgs,
    #[arg(long, default_value_t = 1)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct ShapeArgs {
    #[arg(long)]
    c: f64,
    #[arg(long, default_value = "GL", value_parser = parse_shape_series)]
    series: ShapeSeries,
    /// Number of grid intervals.
    #[arg(long, default_value_t = 400)]
    points: usize,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    pair: PairArgs,
    #[arg(long, default_value_t = 200)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Compare the most probable diagram instead of the mean of samples.
    #[arg(long)]
    most_probable: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct TilingArgs {
    /// Height of the box; entries of the top row lie in 0..=n.
    #[arg(long)]
    n: usize,
    /// Length of the top row (number of pattern rows).
    #[arg(long)]
    k: usize,
    #[arg(long, default_value = "")]
    lambda: String,
    /// Which pattern with this top row, in enumeration order.
    #[arg(long, default_value_t = 0)]
    index: usize,
    #[command(flatten)]
    output: Output,
}

enum Failure {
    /// Bad input that clap could not catch; exit code 2.
    Usage(String),
    /// An identity check failed; exit code 1.
    Violation(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Res = Result<String, Failure>;

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn emit(output: &Output, text: &str) -> Result<(), Failure> {
    match &output.out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn series_name(s: Series) -> &'static str {
    match s {
        Series::A => "A",
        Series::BC => "BC",
        Series::D => "D",
    }
}

fn mult(a: &MultArgs) -> Res {
    let DualityArgs { series, n, k, p } = a.spec;
    DualitySpec::new(series, n, k, p)?;
    let (det, prod): (QLaurent, QLaurent) = match series {
        Series::A => {
            let l = Partition::from_str(&a.lambda)?;
            (mult_det_a_q(&l, n, k)?, mult_prod_a_q(&l, n, k)?)
        }
        Series::BC => {
            let l = Partition::from_str(&a.lambda)?;
            (mult_det_bc_q(&l, n, k, p)?, mult_prod_bc_q(&l, n, k, p)?)
        }
        Series::D => {
            let w = TypeDWeight::parse(&a.lambda, n)?;
            (mult_det_d_q(&w, n, k, p)?, mult_prod_d_q(&w, n, k, p)?)
        }
    };
    if det != prod {
        return Err(Failure::Violation(format!("determinant {det} and product {prod} disagree")));
    }
    let text = a.output.format() == Format::Text;
    if a.q_poly {
        return Ok(if text { format!("{det}\n") } else { pretty(&json!({"q_poly": det.to_json(), "text": det.to_string()})) });
    }
    if let Some(q) = &a.q_at {
        let q = parse_rational(q).map_err(Failure::Usage)?;
        let v = det.eval(&q)?;
        return Ok(if text { format!("{v}\n") } else { pretty(&json!({"q": q.to_string(), "value": rational_json(&v)})) });
    }
    let at1 = det.eval_at_one();
    if text {
        return Ok(format!("{at1}\n{det}\n"));
    }
    Ok(pretty(&json!({
        "series": series_name(series),
        "n": n,
        "k": k,
        "p": p,
        "lambda": a.lambda,
        "value": at1.to_string(),
        "q_poly": det.to_json(),
        "text": det.to_string(),
    })))
}

fn oracle_runs(series: Series, n: usize, k: usize, p: i64) -> Vec<(LieType, usize)> {
    let f = 2 * k + p as usize;
    match series {
        Series::A => vec![(LieType::A, k)],
        Series::BC if p == 1 => vec![(LieType::B, f), (LieType::C, k)],
        Series::BC => vec![(LieType::B, f)],
        Series::D => vec![(LieType::D, f)],
    }
    .into_iter()
    .filter(|_| n > 0)
    .collect()
}

fn verify(a: &VerifyArgs) -> Res {
    let DualityArgs { series, n, k, p } = a.spec;
    let report = verify_duality(DualitySpec::new(series, n, k, p)?);
    let mut passed = report.passed();
    let mut oracles = Vec::new();
    if a.oracle {
        for (ty, factors) in oracle_runs(series, n, k, p) {
            let t = multiplicity_oracle(ty, n, factors)?;
            let mism = formula_mismatches(&t);
            let per_factor = if ty == LieType::C { 2 * n } else { n };
            let expected = BigInt::from(1) << (per_factor * factors);
            let dim = t.dimension_sum();
            passed &= mism.is_empty() && dim == expected;
            oracles.push(json!({
                "type": format!("{ty}"),
                "n": n,
                "factors": factors,
                "highest_weights": t.counts.len(),
                "mismatches": mism,
                "dimension_sum": dim.to_string(),
                "dimension_expected": expected.to_string(),
            }));
        }
    }
    let out = pretty(&json!({"passed": passed, "duality": report, "oracle": oracles}));
    if passed {
        Ok(out)
    } else {
        emit(&a.output, &out)?;
        Err(Failure::Violation("identity violation".into()))
    }
}

fn measure(a: &MeasureArgs) -> Res {
    let PairArgs { pair, n, k } = a.pair;
    let t = measure_table(pair, n, k)?;
    Ok(match a.output.format() {
        Format::Csv | Format::Text => {
            let mut s = String::from("lambda,num,den\n");
            for (l, pr) in &t.entries {
                s.push_str(&format!("\"{l}\",{},{}\n", pr.numer(), pr.denom()));
            }
            s
        }
        Format::Json => pretty(&t.to_json()),
    })
}

fn sample_cmd(a: &SampleArgs) -> Res {
    let PairArgs { pair, n, k } = a.pair;
    let diagrams = sample(pair, n, k, a.count, a.seed)?;
    let mut s = String::new();
    for (i, l) in diagrams.iter().enumerate() {
        let line = json!({"pair": pair.to_string(), "n": n, "k": k, "seed": a.seed, "index": i, "lambda": l.parts()});
        s.push_str(&line.to_string());
        s.push('\n');
    }
    Ok(s)
}

fn centered(x: f64, c: f64, series: ShapeSeries) -> f64 {
    match series {
        ShapeSeries::Gl => x - (c + 1.0) / 2.0,
        ShapeSeries::Half => x,
    }
}

fn shape(a: &ShapeArgs) -> Res {
    let (c, series) = (a.c, a.series);
    let end = series.domain_end(c);
    let mut rows = Vec::with_capacity(a.points + 1);
    for i in 0..=a.points {
        let x = end * i as f64 / a.points.max(1) as f64;
        rows.push((x, limit_f(x, c, series)?, rho(centered(x, c, series), c)?));
    }
    Ok(match a.output.format() {
        Format::Csv | Format::Text => {
            let mut s = String::from("x,f,rho\n");
            for (x, f, r) in rows {
                s.push_str(&format!("{x:.9},{f:.9},{r:.9}\n"));
            }
            s
        }
        Format::Json => pretty(&json!({
            "c": c,
            "series": series.to_string(),
            "x": rows.iter().map(|r| r.0).collect::<Vec<_>>(),
            "f": rows.iter().map(|r| r.1).collect::<Vec<_>>(),
            "rho": rows.iter().map(|r| r.2).collect::<Vec<_>>(),
        })),
    })
}

fn compare(a: &CompareArgs) -> Res {
    let PairArgs { pair, n, k } = a.pair;
    if n == 0 || k == 0 {
        return Err(Failure::Usage("compare needs n, k > 0".into()));
    }
    let series = ShapeSeries::of_pair(pair);
    let c = k as f64 / n as f64;
    let curve: ShapeCurve = if a.most_probable {
        diagram_boundary(&most_probable_diagram(pair, n, k), n, k, series)
    } else {
        if a.count == 0 {
            return Err(Failure::Usage("compare needs --count > 0".into()));
        }
        mean_boundary(&sample(pair, n, k, a.count, a.seed)?, n, k, series)?
    };
    let d = sup_distance(&curve, c, series)?;
    Ok(pretty(&json!({
        "sup_distance": d,
        "n": n,
        "k": k,
        "count": if a.most_probable { 0 } else { a.count },
        "seed": a.seed,
        "pair": pair.to_string(),
        "c": c,
        "mode": if a.most_probable { "most-probable" } else { "mean-of-samples" },
    })))
}

fn tiling(a: &TilingArgs) -> Res {
    let l = Partition::from_str(&a.lambda)?;
    l.check_box(a.k as i64, a.n as i64)?;
    let patterns = enumerate_gt(&l.padded(a.k));
    let g = patterns
        .get(a.index)
        .ok_or_else(|| Failure::Usage(format!("index {} out of range ({} patterns)", a.index, patterns.len())))?;
    let t = gt_to_lozenge(g, a.n, a.k)?;
    let mut v = t.to_json();
    v["pattern"] = json!(g.rows);
    v["index"] = json!(a.index);
    v["count"] = json!(patterns.len());
    Ok(pretty(&v))
}

fn run(cli: &Cli) -> Result<(), Failure> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global()?;
    }
    let (text, output) = match &cli.cmd {
        Cmd::Mult(a) => (mult(a)?, &a.output),
        Cmd::Verify(a) => (verify(a)?, &a.output),
        Cmd::Measure(a) => (measure(a)?, &a.output),
        Cmd::Sample(a) => (sample_cmd(a)?, &a.output),
        Cmd::Shape(a) => (shape(a)?, &a.output),
        Cmd::Compare(a) => (compare(a)?, &a.output),
        Cmd::Tiling(a) => (tiling(a)?, &a.output),
    };
    emit(output, &text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation(m)) => {
            eprintln!("violation: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
