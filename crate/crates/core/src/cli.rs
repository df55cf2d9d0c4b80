//! Command line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::MultiPoly;
use crate::arithmetic::{
    arithmetic_tutte, toric_identity_check, toric_point_profile, torsion_exponent,
    zonotope_evaluations, VectorConfig,
};
use crate::arrangement::Arrangement;
use crate::checks::{
    check_arrangement, check_family, check_vectors, combine, CheckOptions, CheckReport,
};
use crate::error::{Error, Result};
use crate::families::{
    build_family, oracle_char, oracle_coboundary, oracle_regions, oracle_tutte, pencil_coloop,
    FamilySpec, Graph, OracleResult, OracleValue,
};
use crate::finite_field::{coboundary_ffm, default_budget, FfmOptions, PrimeChoice, ReductionMode};
use crate::multivariate::{check_thickening, multivariate_tutte};
use crate::tutte::{
    char_poly, char_poly_whitney, coboundary_transform, scalar_invariants, tutte_activity,
    tutte_delcon, tutte_from_coboundary, tutte_subset, DelconOptions, TutteResult,
};

/// Largest arrangement for which `--method auto` uses subset expansion.
const AUTO_SUBSET_MAX: usize = 10;

#[derive(Parser, Debug)]
#[command(
    name = "tuttekit",
    version,
    about = "Exact Tutte, characteristic, coboundary and arithmetic Tutte polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tutte polynomial T(x, y).
    Tutte(ArrangementArgs),
    /// Characteristic polynomial in q.
    Char(ArrangementArgs),
    /// Coboundary polynomial in X, Y.
    Coboundary(CoboundaryArgs),
    /// Region counts, Poincaré polynomial and related evaluations.
    Invariants(ArrangementArgs),
    /// Flats of the intersection poset with their Möbius values.
    Poset(ArrangementArgs),
    /// Build a named family and run a verb on it.
    Family(FamilyArgs),
    /// Arithmetic Tutte polynomial of an integer vector configuration.
    Arith(ArithArgs),
    /// Toric arrangement evaluations, with a point count when --q is given.
    Toric(ToricArgs),
    /// Multivariate Tutte polynomial, or a thickened Tutte polynomial.
    Multivariate(MultivariateArgs),
    /// Cross-engine and oracle identity suites.
    Check(CheckArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Subset,
    Delcon,
    Activity,
    FiniteField,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Reduction {
    Bound,
    Verified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
    Latex,
}

#[derive(Args, Debug, Clone)]
struct EngineFlags {
    #[arg(long, value_enum, default_value = "auto")]
    method: Method,
    /// `auto` or a comma-separated list of primes.
    #[arg(long, default_value = "auto")]
    primes: String,
    #[arg(long, value_enum)]
    reduction: Option<Reduction>,
    /// Largest number of points to enumerate (default: TUTTEKIT_BUDGET or 10^8).
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Enumerate on one thread.
    #[arg(long)]
    serial: bool,
}

#[derive(Args, Debug)]
struct ArrangementArgs {
    /// Arrangement file (JSON).
    #[arg(long)]
    input: PathBuf,
    #[command(flatten)]
    engine: EngineFlags,
}

#[derive(Args, Debug)]
struct CoboundaryArgs {
    #[command(flatten)]
    inner: ArrangementArgs,
    /// Also print the point profiles `p,c_0,...,c_n` (finite field method).
    #[arg(long)]
    profiles: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyVerb {
    Tutte,
    Char,
    Coboundary,
    Invariants,
    Poset,
    /// Closed forms and generating functions.
    Oracle,
    /// The arrangement as JSON.
    Build,
    Check,
    Multivariate,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// coordinate, braid, graphical, bc, dn, generic, catalan, shi,
    /// threshold, all_linear, thickened, bipartite, complete.
    tag: String,
    #[arg(value_enum, default_value = "tutte")]
    verb: FamilyVerb,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    k: Option<usize>,
    /// Base family of a thickening; takes the other parameters.
    #[arg(long)]
    base: Option<String>,
    /// Edge list, one `i j` per line, 1-indexed.
    #[arg(long)]
    graph: Option<PathBuf>,
    #[command(flatten)]
    engine: EngineFlags,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ArithVerb {
    Tutte,
    Char,
    Zonotope,
    Toric,
    Check,
}

#[derive(Args, Debug)]
struct ArithArgs {
    #[arg(value_enum)]
    verb: ArithVerb,
    /// Vector file: the dimension, then one integer vector per line.
    #[arg(long)]
    input: PathBuf,
    /// Torus `(F_{q+1}^*)^d` for the point count; `q + 1` must be prime.
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct ToricArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct MultivariateArgs {
    #[arg(long)]
    input: PathBuf,
    /// Multiplicities `a_1,...,a_n`: print the Tutte polynomial of the
    /// arrangement with hyperplane `e` repeated `a_e` times.
    #[arg(long)]
    thicken: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Arrangement file; without a source the built-in catalog is checked.
    #[arg(long, conflicts_with = "vectors")]
    input: Option<PathBuf>,
    /// Vector configuration file.
    #[arg(long)]
    vectors: Option<PathBuf>,
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

/// Parses `args` (program name first), runs the command and writes to
/// `out`/`err`. Returns the exit status: 0 on success, 1 on bad input, 2
/// on a failed computation.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let first = e.to_string();
            let first = first
                .lines()
                .next()
                .unwrap_or("")
                .trim_start_matches("error: ");
            let _ = writeln!(err, "error: usage: {first}");
            return 1;
        }
    };
    match dispatch(cli.command) {
        Ok(Output { text, ok }) => {
            let _ = out.write_all(text.as_bytes());
            if ok {
                0
            } else {
                2
            }
        }
        Err(e) => {
            let msg = e.to_string().replace('\n', " ");
            let _ = writeln!(err, "error: {}: {msg}", e.code());
            if e.is_input_error() {
                1
            } else {
                2
            }
        }
    }
}

struct Output {
    text: String,
    /// False when a check suite reported a failure.
    ok: bool,
}

impl Output {
    fn ok(text: String) -> Result<Self> {
        Ok(Output { text, ok: true })
    }
}

fn dispatch(cmd: Command) -> Result<Output> {
    match cmd {
        Command::Tutte(a) => arrangement_verb(
            &load(&a.input)?,
            &source_of(&a.input),
            &a.engine,
            Verb::Tutte,
        ),
        Command::Char(a) => arrangement_verb(
            &load(&a.input)?,
            &source_of(&a.input),
            &a.engine,
            Verb::Char,
        ),
        Command::Coboundary(c) => {
            let a = load(&c.inner.input)?;
            let verb = if c.profiles {
                Verb::Profiles
            } else {
                Verb::Coboundary
            };
            arrangement_verb(&a, &source_of(&c.inner.input), &c.inner.engine, verb)
        }
        Command::Invariants(a) => arrangement_verb(
            &load(&a.input)?,
            &source_of(&a.input),
            &a.engine,
            Verb::Invariants,
        ),
        Command::Poset(a) => arrangement_verb(
            &load(&a.input)?,
            &source_of(&a.input),
            &a.engine,
            Verb::Poset,
        ),
        Command::Family(f) => family(f),
        Command::Arith(a) => arith(a),
        Command::Toric(t) => toric(t),
        Command::Multivariate(m) => multivariate(m),
        Command::Check(c) => check(c),
    }
}

fn source_of(p: &Path) -> String {
    p.display().to_string()
}

fn load(path: &Path) -> Result<Arrangement> {
    Arrangement::read_json(path)
}

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn budget(b: Option<u64>) -> u64 {
    b.unwrap_or_else(default_budget)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Verb {
    Tutte,
    Char,
    Coboundary,
    Profiles,
    Invariants,
    Poset,
}

fn ffm_options(flags: &EngineFlags) -> Result<FfmOptions> {
    let primes = if flags.primes.trim() == "auto" {
        PrimeChoice::Auto
    } else {
        let ps = flags
            .primes
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad prime `{}`", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        PrimeChoice::Given(ps)
    };
    Ok(FfmOptions {
        primes,
        mode: flags.reduction.map(|r| match r {
            Reduction::Bound => ReductionMode::Bound,
            Reduction::Verified => ReductionMode::Verified,
        }),
        budget: budget(flags.budget),
        parallel: !flags.serial,
    })
}

/// Picks the engine: `auto` is subset expansion up to 10 hyperplanes, then
/// the finite field method (deletion–contraction over `F_p`).
fn resolve(a: &Arrangement, m: Method) -> Method {
    match m {
        Method::Auto if a.len() <= AUTO_SUBSET_MAX => Method::Subset,
        Method::Auto if a.field().is_rational() => Method::FiniteField,
        Method::Auto => Method::Delcon,
        other => other,
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Auto => "auto",
        Method::Subset => "subset",
        Method::Delcon => "delcon",
        Method::Activity => "activity",
        Method::FiniteField => "finite-field",
    }
}

fn compute_tutte(a: &Arrangement, m: Method, flags: &EngineFlags) -> Result<TutteResult> {
    match m {
        Method::Subset | Method::Auto => tutte_subset(a),
        Method::Delcon => tutte_delcon(a, DelconOptions { memoize: true }),
        Method::Activity => {
            let order: Vec<usize> = (0..a.len()).collect();
            Ok(tutte_activity(a, &order)?.0)
        }
        Method::FiniteField => {
            let res = coboundary_ffm(a, &ffm_options(flags)?)?;
            Ok(TutteResult {
                tutte: tutte_from_coboundary(&res.coboundary, res.rank)?,
                rank: res.rank,
                n: a.len(),
                engine: crate::tutte::Engine::FiniteField,
            })
        }
    }
}

/// One polynomial in the requested format.
fn render_poly(p: &MultiPoly, format: Format, meta: Value) -> String {
    match format {
        Format::Text => format!("{}\n", p.to_text()),
        Format::Latex => format!("{}\n", p.to_latex()),
        Format::Structured => {
            let mut rec = meta;
            rec["variables"] = json!(p.vars());
            rec["terms"] = Value::Array(
                p.sorted_terms()
                    .into_iter()
                    .map(|(e, c)| json!({"coefficient": c.to_string(), "exponents": e}))
                    .collect(),
            );
            rec["polynomial"] = json!(p.to_text());
            format!("{}\n", serde_json::to_string(&rec).expect("json"))
        }
    }
}

enum Field {
    Int(String),
    Poly(MultiPoly),
    Str(String),
}

/// A flat `key: value` record.
fn render_record(fields: &[(&str, Field)], format: Format, meta: Value) -> String {
    match format {
        Format::Text | Format::Latex => {
            let mut s = String::new();
            for (k, v) in fields {
                let v = match v {
                    Field::Int(x) | Field::Str(x) => x.clone(),
                    Field::Poly(p) if format == Format::Latex => format!("${}$", p.to_latex()),
                    Field::Poly(p) => p.to_text(),
                };
                s.push_str(&format!("{k}: {v}\n"));
            }
            s
        }
        Format::Structured => {
            let mut rec = meta;
            for (k, v) in fields {
                rec[*k] = match v {
                    Field::Int(x) | Field::Str(x) => json!(x),
                    Field::Poly(p) => json!(p.to_text()),
                };
            }
            format!("{}\n", serde_json::to_string(&rec).expect("json"))
        }
    }
}

fn arrangement_verb(
    a: &Arrangement,
    source: &str,
    flags: &EngineFlags,
    verb: Verb,
) -> Result<Output> {
    let method = resolve(a, flags.method);
    let meta = |quantity: &str, rank: usize| {
        json!({"input": source, "quantity": quantity, "method": method_name(method),
               "dim": a.dim(), "rank": rank, "n": a.len()})
    };
    match verb {
        Verb::Tutte => {
            let t = compute_tutte(a, method, flags)?;
            Output::ok(render_poly(&t.tutte, flags.format, meta("tutte", t.rank)))
        }
        Verb::Char => {
            let chi = if method == Method::Subset {
                let t = tutte_subset(a)?;
                let m = char_poly(a)?;
                let w = char_poly_whitney(&t, a.dim())?;
                if m != w {
                    return Err(Error::IdentityFailure(format!(
                        "Möbius gives {m}, Tutte evaluation gives {w}"
                    )));
                }
                m
            } else {
                char_poly_whitney(&compute_tutte(a, method, flags)?, a.dim())?
            };
            Output::ok(render_poly(
                &chi,
                flags.format,
                meta("characteristic", a.rank()),
            ))
        }
        Verb::Coboundary | Verb::Profiles => {
            if verb == Verb::Profiles || method == Method::FiniteField {
                let res = coboundary_ffm(a, &ffm_options(flags)?)?;
                let mut text =
                    render_poly(&res.coboundary, flags.format, meta("coboundary", res.rank));
                if verb == Verb::Profiles {
                    for p in &res.profiles {
                        text.push_str(&p.csv_row());
                        text.push('\n');
                    }
                }
                return Output::ok(text);
            }
            let t = compute_tutte(a, method, flags)?;
            let cb = coboundary_transform(&t.tutte, t.rank)?;
            Output::ok(render_poly(&cb, flags.format, meta("coboundary", t.rank)))
        }
        Verb::Invariants => {
            let t = compute_tutte(a, method, flags)?;
            let inv = scalar_invariants(&t, a.dim(), a.is_central_arrangement())?;
            let fields = [
                ("regions", Field::Int(inv.regions.to_string())),
                (
                    "bounded_regions",
                    Field::Int(inv.bounded_regions.to_string()),
                ),
                ("characteristic", Field::Poly(inv.characteristic)),
                ("poincare", Field::Poly(inv.poincare)),
                (
                    "generic_section_bounded",
                    Field::Int(inv.generic_section_bounded.to_string()),
                ),
                (
                    "beta",
                    Field::Str(inv.beta.map_or("n/a".to_string(), |b| b.to_string())),
                ),
            ];
            Output::ok(render_record(
                &fields,
                flags.format,
                meta("invariants", t.rank),
            ))
        }
        Verb::Poset => {
            let poset = a.intersection_poset()?;
            let label = |hs: &[usize]| {
                let names: Vec<String> = hs.iter().map(|h| format!("H{}", h + 1)).collect();
                format!("{{{}}}", names.join(","))
            };
            match flags.format {
                Format::Structured => {
                    let mut rec = meta("poset", a.rank());
                    rec["flats"] = Value::Array(
                        poset
                            .flats()
                            .iter()
                            .zip(poset.mobius_values())
                            .map(|(f, m)| {
                                json!({"hyperplanes": f.hyperplanes.iter().map(|h| h + 1).collect::<Vec<_>>(),
                                       "rank": f.rank, "dim": f.dim, "mobius": m})
                            })
                            .collect(),
                    );
                    rec["covers"] = json!(poset.covers());
                    Output::ok(format!("{}\n", serde_json::to_string(&rec).expect("json")))
                }
                _ => {
                    let mut s = String::new();
                    for (f, m) in poset.flats().iter().zip(poset.mobius_values()) {
                        s.push_str(&format!(
                            "rank {} dim {} mobius {} {}\n",
                            f.rank,
                            f.dim,
                            m,
                            label(&f.hyperplanes)
                        ));
                    }
                    Output::ok(s)
                }
            }
        }
    }
}

fn family_spec(f: &FamilyArgs, tag: &str) -> Result<FamilySpec> {
    let need = |v: Option<usize>, name: &str| {
        v.ok_or_else(|| Error::InvalidFamily(format!("{tag} needs --{name}")))
    };
    Ok(match tag {
        "coordinate" => FamilySpec::Coordinate { n: need(f.n, "n")? },
        "braid" => FamilySpec::Braid { n: need(f.n, "n")? },
        "bc" => FamilySpec::Bc { n: need(f.n, "n")? },
        "dn" | "d" => FamilySpec::Dn { n: need(f.n, "n")? },
        "catalan" => FamilySpec::Catalan { n: need(f.n, "n")? },
        "shi" => FamilySpec::Shi { n: need(f.n, "n")? },
        "threshold" => FamilySpec::Threshold { n: need(f.n, "n")? },
        "generic" => FamilySpec::Generic {
            n: need(f.n, "n")?,
            d: need(f.d, "d")?,
        },
        "all_linear" | "all-linear" => FamilySpec::AllLinear {
            p: f.p
                .ok_or_else(|| Error::InvalidFamily("all_linear needs --p".into()))?,
            n: need(f.n, "n")?,
        },
        "graphical" => {
            let path = f
                .graph
                .as_ref()
                .ok_or_else(|| Error::InvalidFamily("graphical needs --graph".into()))?;
            FamilySpec::Graphical(Graph::parse(&read_text(path)?)?)
        }
        "complete" => FamilySpec::Graphical(Graph::complete(need(f.n, "n")?)),
        "bipartite" => {
            FamilySpec::Graphical(Graph::complete_bipartite(need(f.m, "m")?, need(f.n, "n")?))
        }
        "thickened" => {
            let base = f
                .base
                .as_deref()
                .ok_or_else(|| Error::InvalidFamily("thickened needs --base".into()))?;
            if base == "thickened" {
                return Err(Error::InvalidFamily(
                    "--base cannot itself be thickened".into(),
                ));
            }
            FamilySpec::Thickened {
                base: Box::new(family_spec(f, base)?),
                k: need(f.k, "k")?,
            }
        }
        other => return Err(Error::InvalidFamily(format!("unknown family `{other}`"))),
    })
}

fn oracle_fields(spec: &FamilySpec) -> Vec<(&'static str, Field)> {
    let mut fields = Vec::new();
    let mut push = |name: &'static str, r: Result<OracleResult>| match r {
        Ok(o) => match o.value {
            OracleValue::Poly(p) => {
                fields.push((name, Field::Poly(p)));
            }
            OracleValue::Regions { regions, bounded } => {
                let show =
                    |v: Option<num_bigint::BigInt>| v.map_or("n/a".to_string(), |b| b.to_string());
                fields.push(("regions", Field::Int(show(regions))));
                fields.push(("bounded_regions", Field::Int(show(bounded))));
            }
        },
        Err(Error::NoClosedForm(_)) => fields.push((name, Field::Str("n/a".into()))),
        Err(e) => fields.push((name, Field::Str(format!("error: {e}")))),
    };
    push("characteristic", oracle_char(spec));
    push("coboundary", oracle_coboundary(spec));
    push("tutte", oracle_tutte(spec));
    push("regions", oracle_regions(spec));
    fields
}

fn family(f: FamilyArgs) -> Result<Output> {
    let spec = family_spec(&f, &f.tag)?;
    let a = build_family(&spec)?;
    let source = spec.to_string();
    let meta = json!({"input": source, "dim": a.dim(), "n": a.len(), "rank": a.rank()});
    match f.verb {
        FamilyVerb::Tutte => arrangement_verb(&a, &source, &f.engine, Verb::Tutte),
        FamilyVerb::Char => arrangement_verb(&a, &source, &f.engine, Verb::Char),
        FamilyVerb::Coboundary => arrangement_verb(&a, &source, &f.engine, Verb::Coboundary),
        FamilyVerb::Invariants => arrangement_verb(&a, &source, &f.engine, Verb::Invariants),
        FamilyVerb::Poset => arrangement_verb(&a, &source, &f.engine, Verb::Poset),
        FamilyVerb::Oracle => {
            Output::ok(render_record(&oracle_fields(&spec), f.engine.format, meta))
        }
        FamilyVerb::Build => Output::ok(format!("{}\n", a.to_json())),
        FamilyVerb::Check => {
            let opts = CheckOptions {
                budget: budget(f.engine.budget),
                ..CheckOptions::default()
            };
            report(check_family(&spec, &opts)?, f.engine.format)
        }
        FamilyVerb::Multivariate => {
            let z = multivariate_tutte(&a)?;
            Output::ok(render_poly(&z.poly, f.engine.format, meta))
        }
    }
}

fn report(rep: CheckReport, format: Format) -> Result<Output> {
    let ok = rep.passed();
    let text = match format {
        Format::Structured => format!(
            "{}\n",
            serde_json::to_string(&json!({"passed": ok, "outcomes": rep.outcomes})).expect("json")
        ),
        _ => {
            let fails = rep.failures().count();
            format!("{rep}{} checks, {fails} failed\n", rep.outcomes.len())
        }
    };
    Ok(Output { text, ok })
}

fn load_vectors(path: &Path) -> Result<VectorConfig> {
    VectorConfig::parse(&read_text(path)?)
}

fn toric_profile_fields(
    c: &VectorConfig,
    q: u64,
    budget: u64,
) -> Result<Vec<(&'static str, Field)>> {
    let m = arithmetic_tutte(c)?;
    let prof = toric_point_profile(c, q, budget, true)?;
    let mut fields = vec![
        ("q", Field::Int(q.to_string())),
        ("profile", Field::Str(prof.csv_row())),
        ("complement", Field::Int(prof.counts[0].to_string())),
    ];
    match toric_identity_check(&m, &prof) {
        Ok(()) => fields.push(("identity", Field::Str("holds".into()))),
        Err(Error::IdentityFailure(msg)) => {
            let tor = torsion_exponent(c);
            return Err(Error::IdentityFailure(format!(
                "{msg} (torsion exponent {tor}; the identity is guaranteed when it divides q)"
            )));
        }
        Err(e) => return Err(e),
    }
    Ok(fields)
}

fn arith(a: ArithArgs) -> Result<Output> {
    let c = load_vectors(&a.input)?;
    let meta =
        json!({"input": source_of(&a.input), "dim": c.dim(), "n": c.len(), "rank": c.rank()});
    match a.verb {
        ArithVerb::Tutte => Output::ok(render_poly(&arithmetic_tutte(&c)?.poly, a.format, meta)),
        ArithVerb::Char => Output::ok(render_poly(
            &arithmetic_tutte(&c)?.characteristic(),
            a.format,
            meta,
        )),
        ArithVerb::Zonotope => {
            let z = zonotope_evaluations(&arithmetic_tutte(&c)?);
            let fields = [
                ("volume", Field::Int(z.volume.to_string())),
                ("lattice_points", Field::Int(z.lattice_points.to_string())),
                ("interior_points", Field::Int(z.interior_points.to_string())),
                ("ehrhart", Field::Poly(z.ehrhart)),
            ];
            Output::ok(render_record(&fields, a.format, meta))
        }
        ArithVerb::Toric => {
            let q =
                a.q.ok_or_else(|| Error::Parse("arith toric needs --q".into()))?;
            Output::ok(render_record(
                &toric_profile_fields(&c, q, budget(a.budget))?,
                a.format,
                meta,
            ))
        }
        ArithVerb::Check => {
            let opts = CheckOptions {
                budget: budget(a.budget),
                ..CheckOptions::default()
            };
            report(check_vectors(&c, &opts), a.format)
        }
    }
}

fn toric(t: ToricArgs) -> Result<Output> {
    let c = load_vectors(&t.input)?;
    let m = arithmetic_tutte(&c)?;
    let meta =
        json!({"input": source_of(&t.input), "dim": c.dim(), "n": c.len(), "rank": c.rank()});
    let mut fields = vec![
        ("compact_regions", Field::Int(m.toric_regions().to_string())),
        ("poincare", Field::Poly(m.toric_poincare())),
        ("characteristic", Field::Poly(m.characteristic())),
    ];
    if let Some(q) = t.q {
        fields.extend(toric_profile_fields(&c, q, budget(t.budget))?);
    }
    Output::ok(render_record(&fields, t.format, meta))
}

fn multivariate(m: MultivariateArgs) -> Result<Output> {
    let a = load(&m.input)?;
    let meta =
        json!({"input": source_of(&m.input), "dim": a.dim(), "n": a.len(), "rank": a.rank()});
    match &m.thicken {
        None => Output::ok(render_poly(&multivariate_tutte(&a)?.poly, m.format, meta)),
        Some(spec) => {
            let mult = spec
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad multiplicity `{}`", t.trim())))
                })
                .collect::<Result<Vec<_>>>()?;
            if mult.len() != a.len() {
                return Err(Error::DimensionMismatch {
                    expected: a.len(),
                    got: mult.len(),
                });
            }
            Output::ok(render_poly(&check_thickening(&a, &mult)?, m.format, meta))
        }
    }
}

/// Suites run by `check` without a source.
fn catalog(opts: &CheckOptions) -> Result<CheckReport> {
    let mut parts = vec![(
        "pencil_coloop".to_string(),
        check_arrangement(&pencil_coloop(), opts),
    )];
    let specs = [
        FamilySpec::Coordinate { n: 3 },
        FamilySpec::Braid { n: 4 },
        FamilySpec::Bc { n: 3 },
        FamilySpec::Dn { n: 3 },
        FamilySpec::Catalan { n: 3 },
        FamilySpec::Shi { n: 3 },
        FamilySpec::Threshold { n: 4 },
        FamilySpec::Generic { n: 5, d: 3 },
        FamilySpec::AllLinear { p: 2, n: 3 },
        FamilySpec::Graphical(Graph::complete_bipartite(2, 3)),
        FamilySpec::Thickened {
            base: Box::new(FamilySpec::Braid { n: 3 }),
            k: 2,
        },
    ];
    for spec in specs {
        parts.push((spec.to_string(), check_family(&spec, opts)?));
    }
    for (name, rows) in [
        ("vectors[(1,1),(1,-1)]", vec![vec![1, 1], vec![1, -1]]),
        ("vectors[(2,0),(0,1)]", vec![vec![2, 0], vec![0, 1]]),
    ] {
        parts.push((
            name.to_string(),
            check_vectors(&VectorConfig::from_ints(2, &rows)?, opts),
        ));
    }
    Ok(combine(parts))
}

fn check(c: CheckArgs) -> Result<Output> {
    let opts = CheckOptions {
        budget: budget(c.budget),
        ..CheckOptions::default()
    };
    let rep = match (&c.input, &c.vectors) {
        (Some(p), _) => check_arrangement(&load(p)?, &opts),
        (None, Some(p)) => check_vectors(&load_vectors(p)?, &opts),
        (None, None) => catalog(&opts)?,
    };
    report(rep, c.format)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("tuttekit").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn family_char() {
        let (code, out, _) = run_args(&["family", "braid", "--n", "3", "char"]);
        assert_eq!(code, 0);
        assert_eq!(out, "q^3 - 3*q^2 + 2*q\n");
    }

    #[test]
    fn exit_codes() {
        let (code, _, err) = run_args(&["tutte"]);
        assert_eq!(code, 1);
        assert!(err.starts_with("error: usage:"), "{err}");
        let (code, _, err) = run_args(&["family", "nope", "--n", "3"]);
        assert_eq!(code, 1);
        assert!(err.starts_with("error: invalid-family:"), "{err}");
        let (code, _, err) = run_args(&["family", "all_linear", "--p", "4", "--n", "2"]);
        assert_eq!(code, 2);
        assert!(err.starts_with("error: not-prime:"), "{err}");
        let (code, _, _) = run_args(&["--help"]);
        assert_eq!(code, 0);
    }

    #[test]
    fn methods_agree_on_families() {
        for m in ["subset", "delcon", "activity", "finite-field"] {
            let (code, out, err) = run_args(&["family", "shi", "--n", "3", "tutte", "--method", m]);
            assert_eq!(code, 0, "{err}");
            let (_, want, _) = run_args(&["family", "shi", "--n", "3", "tutte"]);
            assert_eq!(out, want, "{m}");
        }
    }

    #[test]
    fn thickened_spec() {
        let (code, out, _) = run_args(&[
            "family",
            "thickened",
            "--base",
            "coordinate",
            "--n",
            "1",
            "--k",
            "2",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out, "x + y\n");
    }
}
