//! The `reslab` command line: point counts, grid verification, decompositions
//! of pointed maps and Betti tables.
//!
//! Exit status is 0 on success, 1 when methods disagree, 2 on malformed input
//! and 3 when a requested enumeration exceeds the budget.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use reslab::calculus::{cf_decompose, resultant_from_decomposition};
use reslab::cohom::{betti_report, BettiReport};
use reslab::count::{
    brute_force_count, count_convolution_form, count_divisor_form, count_mn, count_value_x, structured_count,
    verify_point, BruteForceConfig, CountQuery, Target, Variety,
};
use reslab::resultant::{pointed_resultant, resultant, Method as ResMethod};
use reslab::{Error, Fq, GaloisField, PointedMap, Poly, PrimePower};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISAGREE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Budget used when neither `--budget` nor `RESLAB_BUDGET` is set.
pub const DEFAULT_CLI_BUDGET: u64 = 10_000_000;

#[derive(Parser, Debug)]
#[command(name = "reslab", version, about = "Exact point counts and calculus for resultant varieties over finite fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count F_q-points of a variety by one or more methods.
    Count(CountArgs),
    /// Sweep an (n, q) grid and emit one JSON record per point.
    Verify(VerifyArgs),
    /// Decompose a pointed map A/B into a sum of polynomials over units.
    Decompose(DecomposeArgs),
    /// Print Betti ranks and, given q, Frobenius traces.
    Betti(BettiArgs),
    /// CSV of counts over a rectangular (n, q) grid.
    Table(TableArgs),
}

#[derive(Args, Debug, Clone, Copy)]
pub struct BruteArgs {
    /// Maximum number of points the brute-force oracle may enumerate.
    #[arg(long, env = "RESLAB_BUDGET", default_value_t = DEFAULT_CLI_BUDGET)]
    pub budget: u64,
    /// Worker threads for the oracle (default: all cores).
    #[arg(long)]
    pub workers: Option<usize>,
}

impl BruteArgs {
    fn config(&self) -> BruteForceConfig {
        BruteForceConfig {
            budget: self.budget,
            workers: self.workers,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarietyArg {
    Res,
    Mn,
    Xn,
    Fn,
}

impl From<VarietyArg> for Variety {
    fn from(v: VarietyArg) -> Self {
        match v {
            VarietyArg::Res => Variety::Res,
            VarietyArg::Mn => Variety::Mn,
            VarietyArg::Xn => Variety::Xn,
            VarietyArg::Fn => Variety::Fn,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MethodArg {
    Divisor,
    Convolution,
    Structured,
    Lefschetz,
    Brute,
    All,
}

impl MethodArg {
    const CONCRETE: [MethodArg; 5] = [
        MethodArg::Divisor,
        MethodArg::Convolution,
        MethodArg::Structured,
        MethodArg::Lefschetz,
        MethodArg::Brute,
    ];

    fn name(self) -> &'static str {
        match self {
            MethodArg::Divisor => "divisor",
            MethodArg::Convolution => "convolution",
            MethodArg::Structured => "structured",
            MethodArg::Lefschetz => "lefschetz",
            MethodArg::Brute => "brute",
            MethodArg::All => "all",
        }
    }

    fn expand(self) -> Vec<MethodArg> {
        if self == MethodArg::All {
            Self::CONCRETE.to_vec()
        } else {
            vec![self]
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct CountArgs {
    #[arg(long, value_enum, default_value = "res")]
    pub variety: VarietyArg,
    #[arg(long)]
    pub n: u64,
    /// Field order as `9`, `3^2` or `3,2`.
    #[arg(long)]
    pub q: PrimePower,
    #[arg(long, value_enum, default_value = "all")]
    pub method: MethodArg,
    /// Resultant value for `--variety fn`, as an element literal.
    #[arg(long)]
    pub x: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[command(flatten)]
    pub brute: BruteArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Verify a single degree instead of `1..=n-max`.
    #[arg(long, conflicts_with = "n_max")]
    pub n: Option<u64>,
    #[arg(long, default_value_t = 4)]
    pub n_max: u64,
    /// Verify a single field instead of every prime power up to `q-max`.
    #[arg(long, conflicts_with = "q_max")]
    pub q: Option<PrimePower>,
    #[arg(long, default_value_t = 9)]
    pub q_max: u64,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[command(flatten)]
    pub brute: BruteArgs,
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    #[arg(long)]
    pub q: PrimePower,
    /// Monic numerator A, ascending coefficient literals.
    #[arg(long)]
    pub num: String,
    /// Denominator B with deg B < deg A.
    #[arg(long)]
    pub den: String,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct BettiArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub q: Option<PrimePower>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, value_enum, default_value = "res")]
    pub variety: VarietyArg,
    #[arg(long, default_value_t = 6)]
    pub n_max: u64,
    #[arg(long, default_value_t = 16)]
    pub q_max: u64,
    #[arg(long, value_enum, default_value = "convolution")]
    pub method: MethodArg,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[command(flatten)]
    pub brute: BruteArgs,
}

/// An error carrying the exit status it should produce.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::input(format!("write failed: {e}"))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::input(format!("json: {e}"))
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run_from_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            e.exit_code()
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Count(a) => run_count(a, out),
        Command::Verify(a) => run_verify(a, out),
        Command::Decompose(a) => run_decompose(a, out),
        Command::Betti(a) => run_betti(a, out),
        Command::Table(a) => run_table(a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn field_of(q: PrimePower) -> Result<GaloisField, Failure> {
    Ok(GaloisField::new(q.p(), q.d())?)
}

/// One count request resolved to concrete method results.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub variety: String,
    pub n: u64,
    pub q: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<String>,
    pub counts: BTreeMap<String, String>,
    pub agree: bool,
    pub notes: Vec<String>,
}

enum MethodResult {
    Value(BigUint),
    Skipped(String),
}

fn divide_exact(total: BigUint, q: u64) -> Result<BigUint, Failure> {
    let q = BigUint::from(q);
    if &total % &q != BigUint::from(0u8) {
        return Err(Failure::input(format!("{total} is not divisible by {q}")));
    }
    Ok(total / q)
}

fn closed_form(
    method: MethodArg,
    variety: Variety,
    n: u64,
    q: PrimePower,
    field: &GaloisField,
    x: Fq,
) -> Result<MethodResult, Failure> {
    use MethodResult::{Skipped, Value};
    let coprime = reslab::algebra::integers::gcd(q.q(), n) == 1;
    let res_count = |m: MethodArg| -> Result<Option<BigUint>, Failure> {
        Ok(match m {
            MethodArg::Divisor => Some(count_divisor_form(n, q)),
            MethodArg::Convolution => Some(count_convolution_form(n, q)),
            MethodArg::Structured => Some(structured_count(n, q)),
            MethodArg::Lefschetz if coprime => Some(reslab::cohom::lefschetz_count(n, q.q())?),
            _ => None,
        })
    };
    Ok(match variety {
        Variety::Res => match res_count(method)? {
            Some(c) => Value(c),
            None => Skipped("lefschetz needs gcd(q, n) = 1".into()),
        },
        Variety::Xn => {
            if !coprime {
                return Err(Error::NotCoprimeToDegree { q: q.q(), n }.into());
            }
            match res_count(method)? {
                Some(c) => Value(divide_exact(c, q.q())?),
                None => Skipped("lefschetz needs gcd(q, n) = 1".into()),
            }
        }
        Variety::Mn => match method {
            MethodArg::Divisor => Value(count_mn(n, q)),
            MethodArg::Convolution => {
                let mut total = BigUint::from(0u8);
                for u in field.units() {
                    total += count_value_x(n, field, u)?;
                }
                Value(total)
            }
            other => Skipped(format!("{} has no form for mn", other.name())),
        },
        Variety::Fn => {
            if x == Fq::ONE {
                match res_count(method)? {
                    Some(c) => Value(c),
                    None => Skipped("lefschetz needs gcd(q, n) = 1".into()),
                }
            } else if method == MethodArg::Convolution {
                Value(count_value_x(n, field, x)?)
            } else {
                Skipped(format!("{} only counts the fibre over 1", method.name()))
            }
        }
    })
}

fn compute_counts(
    variety: Variety,
    n: u64,
    q: PrimePower,
    methods: &[MethodArg],
    x: Option<&str>,
    brute: &BruteArgs,
    strict_budget: bool,
) -> Result<CountReport, Failure> {
    if n == 0 {
        return Err(Failure::input("n must be at least 1"));
    }
    let field = field_of(q)?;
    let x_value = match x {
        Some(lit) => {
            if variety != Variety::Fn {
                return Err(Failure::input("--x applies only to --variety fn"));
            }
            let v = field.parse_element(lit)?;
            if v.is_zero() {
                return Err(Error::ZeroTarget.into());
            }
            v
        }
        None => Fq::ONE,
    };
    let mut counts = BTreeMap::new();
    let mut notes = Vec::new();
    for &m in methods {
        let result = if m == MethodArg::Brute {
            let mut query = CountQuery::new(variety, n as usize, &field)?;
            if variety == Variety::Fn {
                query = query.with_target(Target::Value(x_value))?;
            }
            match brute_force_count(&query, &brute.config()) {
                Ok(c) => MethodResult::Value(c),
                Err(e @ Error::BudgetExceeded { .. }) if !strict_budget => {
                    MethodResult::Skipped(format!("brute skipped: {e}"))
                }
                Err(e) => return Err(e.into()),
            }
        } else {
            closed_form(m, variety, n, q, &field, x_value)?
        };
        match result {
            MethodResult::Value(c) => {
                counts.insert(m.name().to_string(), c.to_string());
            }
            MethodResult::Skipped(why) => notes.push(why),
        }
    }
    let mut values = counts.values();
    let first = values.next();
    let agree = values.all(|v| Some(v) == first);
    Ok(CountReport {
        variety: variety_name(variety).to_string(),
        n,
        q: q.q(),
        x: x.map(|_| field.format_element(x_value)),
        counts,
        agree,
        notes,
    })
}

fn variety_name(v: Variety) -> &'static str {
    match v {
        Variety::Res => "res",
        Variety::Mn => "mn",
        Variety::Xn => "xn",
        Variety::Fn => "fn",
    }
}

fn run_count(a: &CountArgs, out: &mut dyn Write) -> Outcome {
    let strict = a.method == MethodArg::Brute;
    let report = compute_counts(
        a.variety.into(),
        a.n,
        a.q,
        &a.method.expand(),
        a.x.as_deref(),
        &a.brute,
        strict,
    )?;
    match a.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&report)?)?,
        Format::Csv => {
            writeln!(out, "n,q,method,count")?;
            for (m, c) in &report.counts {
                writeln!(out, "{},{},{},{}", report.n, report.q, m, c)?;
            }
        }
        Format::Text => {
            let mut s = format!("variety {}  n = {}  q = {}", report.variety, report.n, report.q);
            if let Some(x) = &report.x {
                let _ = write!(s, "  x = {x}");
            }
            writeln!(out, "{s}")?;
            for m in MethodArg::CONCRETE {
                if let Some(c) = report.counts.get(m.name()) {
                    writeln!(out, "  {:<12} {}", m.name(), c)?;
                }
            }
            for note in &report.notes {
                writeln!(out, "  note: {note}")?;
            }
            writeln!(out, "agree: {}", report.agree)?;
        }
    }
    Ok(if report.agree { EXIT_OK } else { EXIT_DISAGREE })
}

fn grid(n: Option<u64>, n_max: u64, q: Option<PrimePower>, q_max: u64) -> Result<(Vec<u64>, Vec<PrimePower>), Failure> {
    let ns: Vec<u64> = match n {
        Some(n) => vec![n],
        None => (1..=n_max).collect(),
    };
    let qs = match q {
        Some(q) => vec![q],
        None => PrimePower::up_to(q_max),
    };
    if ns.is_empty() || ns.contains(&0) || qs.is_empty() {
        return Err(Failure::input("empty (n, q) grid"));
    }
    Ok((ns, qs))
}

fn run_verify(a: &VerifyArgs, out: &mut dyn Write) -> Outcome {
    let (ns, qs) = grid(a.n, a.n_max, a.q, a.q_max)?;
    let config = a.brute.config();
    let mut all_agree = true;
    if a.format == Format::Csv {
        writeln!(out, "n,q,method,count")?;
    }
    for &q in &qs {
        for &n in &ns {
            let rec = verify_point(n, q, &config)?;
            all_agree &= rec.agree;
            match a.format {
                Format::Json => writeln!(out, "{}", serde_json::to_string(&rec)?)?,
                Format::Csv => {
                    let m = &rec.methods;
                    let rows = [
                        ("divisor", Some(&m.divisor)),
                        ("convolution", Some(&m.convolution)),
                        ("structured", Some(&m.structured)),
                        ("lefschetz", m.lefschetz.as_ref()),
                        ("brute", m.brute.as_ref()),
                    ];
                    for (name, value) in rows {
                        if let Some(v) = value {
                            writeln!(out, "{},{},{},{}", n, q.q(), name, v)?;
                        }
                    }
                }
                Format::Text => {
                    let brute = rec.methods.brute.as_deref().unwrap_or("-");
                    writeln!(
                        out,
                        "n={:<3} q={:<4} {:<24} brute={:<12} {}{}",
                        n,
                        q.q(),
                        rec.methods.convolution,
                        brute,
                        if rec.agree { "ok" } else { "DISAGREE" },
                        if rec.notes.is_empty() { String::new() } else { format!("  ({})", rec.notes) }
                    )?;
                }
            }
        }
    }
    Ok(if all_agree { EXIT_OK } else { EXIT_DISAGREE })
}

/// JSON form of `decompose`: the decomposition record plus resultant checks.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct DecomposeReport {
    pub parts: Vec<reslab::calculus::PartRecord>,
    pub epsilon: i8,
    pub resultant_decomposition: String,
    pub resultant_sylvester: String,
    pub resultant_euclid: String,
}

/// `z^2 + 2`, with extension-field coefficients in parentheses.
pub fn pretty_poly(p: &Poly, field: &GaloisField) -> String {
    let Some(deg) = p.degree() else {
        return "0".to_string();
    };
    let mut terms = Vec::new();
    for k in (0..=deg).rev() {
        let c = p.coeff(k);
        if c.is_zero() {
            continue;
        }
        let lit = field.format_element(c);
        let coeff = if lit.contains(':') { format!("({lit})") } else { lit };
        let mono = match k {
            0 => String::new(),
            1 => "z".to_string(),
            _ => format!("z^{k}"),
        };
        terms.push(match (k, c == Fq::ONE) {
            (0, _) => coeff,
            (_, true) => mono,
            _ => format!("{coeff}{mono}"),
        });
    }
    terms.join(" + ")
}

fn run_decompose(a: &DecomposeArgs, out: &mut dyn Write) -> Outcome {
    let field = field_of(a.q)?;
    let num = Poly::parse(&a.num, &field)?;
    let den = Poly::parse(&a.den, &field)?;
    let map = PointedMap::reduced(num, den, &field)?;
    let d = cf_decompose(&map, &field)?;
    let from_parts = resultant_from_decomposition(&d, &field);
    let sylvester = resultant(map.den(), map.num(), ResMethod::Sylvester, &field)?;
    let euclid = pointed_resultant(&map, &field);
    let agree = from_parts == sylvester && sylvester == euclid;
    let record = d.to_record(&field);
    match a.format {
        Format::Json => {
            let report = DecomposeReport {
                parts: record.parts,
                epsilon: record.epsilon,
                resultant_decomposition: field.format_element(from_parts),
                resultant_sylvester: field.format_element(sylvester),
                resultant_euclid: field.format_element(euclid),
            };
            writeln!(out, "{}", serde_json::to_string(&report)?)?;
        }
        Format::Csv => {
            writeln!(out, "index,poly,unit")?;
            for (i, p) in record.parts.iter().enumerate() {
                writeln!(out, "{},\"{}\",{}", i + 1, p.poly, p.unit)?;
            }
        }
        Format::Text => {
            writeln!(
                out,
                "({}) / ({}) over GF({})",
                pretty_poly(map.num(), &field),
                pretty_poly(map.den(), &field),
                a.q
            )?;
            for (i, p) in d.parts.iter().enumerate() {
                writeln!(
                    out,
                    "  part {}: ({}) / {}",
                    i + 1,
                    pretty_poly(&p.poly, &field),
                    field.format_element(p.unit)
                )?;
            }
            writeln!(out, "composition {:?}  epsilon {}", d.composition(), d.epsilon())?;
            writeln!(out, "resultant from parts  {}", field.format_element(from_parts))?;
            writeln!(out, "resultant (sylvester) {}", field.format_element(sylvester))?;
            writeln!(out, "resultant (euclid)    {}", field.format_element(euclid))?;
        }
    }
    Ok(if agree { EXIT_OK } else { EXIT_DISAGREE })
}

fn betti_text(r: &BettiReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "n = {}{}", r.n, r.q.map(|q| format!("  q = {q}")).unwrap_or_default());
    let with_q = r.q.is_some();
    let _ = write!(s, "{:>6} {:>6} {:>6} {:>6}", "degree", "a", "rank", "weight");
    if with_q {
        let _ = write!(s, " {:>6} {:>5} {:>24}", "fixed", "tate", "trace_contribution");
    }
    s.push('\n');
    for row in &r.rows {
        let _ = write!(s, "{:>6} {:>6} {:>6} {:>6}", row.degree, row.a, row.rank, row.weight);
        if with_q {
            let _ = write!(
                s,
                " {:>6} {:>5} {:>24}",
                row.fixed.unwrap_or(0),
                if row.tate == Some(true) { "yes" } else { "no" },
                row.trace_contribution.as_deref().unwrap_or("")
            );
        }
        s.push('\n');
    }
    let total: u64 = r.rows.iter().map(|x| x.rank).sum();
    let _ = writeln!(s, "total rank {total}");
    if let Some(l) = &r.lefschetz {
        let _ = writeln!(s, "lefschetz {l}");
    }
    s
}

fn run_betti(a: &BettiArgs, out: &mut dyn Write) -> Outcome {
    let report = betti_report(a.n, a.q.map(|q| q.q()))?;
    match a.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&report)?)?,
        Format::Csv => {
            writeln!(out, "degree,a,rank,weight,fixed,trace_contribution,tate")?;
            for row in &report.rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    row.degree,
                    row.a,
                    row.rank,
                    row.weight,
                    row.fixed.map(|f| f.to_string()).unwrap_or_default(),
                    row.trace_contribution.clone().unwrap_or_default(),
                    row.tate.map(|t| t.to_string()).unwrap_or_default()
                )?;
            }
        }
        Format::Text => write!(out, "{}", betti_text(&report))?,
    }
    Ok(EXIT_OK)
}

fn run_table(a: &TableArgs, out: &mut dyn Write) -> Outcome {
    if a.format != Format::Csv {
        return Err(Failure::input("table only writes csv"));
    }
    let (ns, qs) = grid(None, a.n_max, None, a.q_max)?;
    let methods = a.method.expand();
    let variety: Variety = a.variety.into();
    writeln!(out, "n,q,method,count")?;
    let mut all_agree = true;
    for &q in &qs {
        for &n in &ns {
            if variety == Variety::Xn && reslab::algebra::integers::gcd(q.q(), n) != 1 {
                continue;
            }
            let report = compute_counts(variety, n, q, &methods, None, &a.brute, a.method == MethodArg::Brute)?;
            all_agree &= report.agree;
            for m in &methods {
                if let Some(c) = report.counts.get(m.name()) {
                    writeln!(out, "{},{},{},{}", n, q.q(), m.name(), c)?;
                }
            }
        }
    }
    Ok(if all_agree { EXIT_OK } else { EXIT_DISAGREE })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pretty_printing() {
        let f3 = GaloisField::new(3, 1).unwrap();
        let f4 = GaloisField::new(2, 2).unwrap();
        assert_eq!(pretty_poly(&Poly::parse("2,0,1", &f3).unwrap(), &f3), "z^2 + 2");
        assert_eq!(pretty_poly(&Poly::parse("0,2", &f3).unwrap(), &f3), "2z");
        assert_eq!(pretty_poly(&Poly::parse("1:1,1", &f4).unwrap(), &f4), "z + (1:1)");
        assert_eq!(pretty_poly(&Poly::zero(), &f3), "0");
    }

    #[test]
    fn method_expansion() {
        assert_eq!(MethodArg::All.expand().len(), 5);
        assert_eq!(MethodArg::Brute.expand(), vec![MethodArg::Brute]);
    }
}
