//! The `gorlab` command line.
//!
//! Exit status: 0 on success, 1 when a verification (or a requested
//! certificate) fails, 2 on usage, I/O or validation errors.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::homology::{ext_from_resolution, tor_from_resolution, tor_induced_balanced};
use crate::io::{
    canonical, load_module, load_ring, parse_ring, resolution_to_json, ring_to_json,
    series_to_json, to_canonical, write_text, ModuleDoc, RingRef,
};
use crate::koszul::{koszul_series_check, KoszulContext};
use crate::module::{
    matlis_dual, radical_square_quotient, radical_submodule, random_presentation, socle_rows,
    FiniteModule, Presentation,
};
use crate::resolution::{canonical_presentation, resolve};
use crate::ring::{FormChoice, RingElement, ShortGorensteinRing};
use crate::series::{
    certify_rational, hilbert_series, poincare_from_resolution, series_from_table, SeriesKind,
};
use crate::verify::{run_check, Check, Selection, TrialConfig};

#[derive(Parser, Debug)]
#[command(
    name = "gorlab",
    version,
    about = "Homological algebra over short Gorenstein rings"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Human-readable view of the same data.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Create or validate ring files.
    #[command(subcommand)]
    Ring(RingCmd),
    /// Create, sample or describe module files.
    #[command(subcommand)]
    Module(ModuleCmd),
    /// Minimal free resolution: Betti numbers and differentials.
    Resolve {
        #[arg(long)]
        module: PathBuf,
        #[arg(long)]
        steps: usize,
    },
    /// Tor_i(M, N) over an inclusive degree range.
    Tor(HomArgs),
    /// Ext^i(M, N) over an inclusive degree range.
    Ext(HomArgs),
    /// Truncated generating series, optionally certified rational.
    Series(SeriesArgs),
    /// Koszulness verdict with witness.
    Koszul {
        #[arg(long)]
        module: PathBuf,
        /// Also compare P_M with H_M(-t)/H_R(-t) through this degree.
        #[arg(long)]
        series: Option<usize>,
    },
    /// Seeded property checks.
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug)]
enum RingCmd {
    New {
        #[arg(long, default_value_t = 101)]
        p: u64,
        #[arg(long)]
        e: usize,
        #[arg(long, value_enum, default_value_t = FormArg::Identity)]
        form: FormArg,
        /// Explicit form as a JSON matrix; overrides --form.
        #[arg(long)]
        matrix: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Check {
        file: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum ModuleCmd {
    New {
        #[arg(long)]
        ring: PathBuf,
        /// Presentation matrix as JSON (rows are generators).
        #[arg(long, group = "kind")]
        presentation: Option<String>,
        /// R/I for I generated by a JSON list of elements.
        #[arg(long, group = "kind")]
        ideal: Option<String>,
        #[arg(long, group = "kind")]
        residue_field: bool,
        #[arg(long, group = "kind")]
        free: Option<usize>,
        /// R/m^2.
        #[arg(long, group = "kind")]
        radical_square_quotient: bool,
        /// Matlis dual of the module in this file.
        #[arg(long, group = "kind")]
        dual_of: Option<PathBuf>,
        /// Refer to the ring file by path instead of inlining it.
        #[arg(long)]
        link_ring: bool,
    },
    Random {
        #[arg(long)]
        ring: PathBuf,
        #[arg(long)]
        generators: usize,
        #[arg(long)]
        relations: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        link_ring: bool,
    },
    Info {
        file: PathBuf,
    },
}

#[derive(Args, Debug)]
struct HomArgs {
    #[arg(long)]
    m: PathBuf,
    #[arg(long = "n-mod")]
    n_mod: PathBuf,
    /// Inclusive range `a..b` (or `a..=b`).
    #[arg(long, default_value = "0..5")]
    range: String,
    /// Add ranks of the maps induced by mM -> M.
    #[arg(long)]
    induced: bool,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    #[arg(value_enum)]
    kind: SeriesArg,
    #[arg(long, alias = "m")]
    module: PathBuf,
    #[arg(long = "n-mod")]
    n_mod: Option<PathBuf>,
    #[arg(long, default_value_t = 10)]
    steps: usize,
    #[arg(long)]
    certify: bool,
    #[arg(long, default_value_t = crate::series::DEFAULT_MARGIN)]
    margin: usize,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    check: CheckArg,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    cutoff: Option<usize>,
    #[arg(long)]
    e: Option<usize>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long, value_enum)]
    form: Option<FormArg>,
    #[arg(long)]
    margin: Option<usize>,
    #[arg(long)]
    max_generators: Option<usize>,
    #[arg(long)]
    max_relations: Option<usize>,
    #[arg(long)]
    max_dim: Option<usize>,
    #[arg(long)]
    max_entries: Option<u64>,
    #[arg(long)]
    max_work: Option<u64>,
    /// Restrict the lemma suite to one check.
    #[arg(long)]
    lemma: Option<String>,
    /// Run only this trial index.
    #[arg(long)]
    trial: Option<usize>,
    /// Include wall time in the report.
    #[arg(long)]
    timings: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FormArg {
    Identity,
    Hyperbolic,
    #[value(alias = "random", alias = "random_nondegenerate")]
    RandomNondegenerate,
}

impl From<FormArg> for FormChoice {
    fn from(f: FormArg) -> Self {
        match f {
            FormArg::Identity => FormChoice::Identity,
            FormArg::Hyperbolic => FormChoice::Hyperbolic,
            FormArg::RandomNondegenerate => FormChoice::RandomNondegenerate,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SeriesArg {
    Poincare,
    Hilbert,
    TorNu,
    TorLen,
    ExtNu,
    ExtLen,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CheckArg {
    Lofwall,
    MainTheorem,
    Vanishing,
    CounterexampleE2,
    LemmaSuite,
}

impl From<CheckArg> for Check {
    fn from(c: CheckArg) -> Self {
        match c {
            CheckArg::Lofwall => Check::Lofwall,
            CheckArg::MainTheorem => Check::MainTheorem,
            CheckArg::Vanishing => Check::Vanishing,
            CheckArg::CounterexampleE2 => Check::CounterexampleE2,
            CheckArg::LemmaSuite => Check::LemmaSuite,
        }
    }
}

/// Result of one command: the JSON document, and whether a check failed.
struct Output {
    value: Value,
    failed: bool,
    notes: Vec<String>,
}

impl Output {
    fn ok(value: Value) -> Self {
        Output {
            value,
            failed: false,
            notes: Vec::new(),
        }
    }
}

/// Parses `argv` (including the program name), runs the command and
/// returns the exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let text = if cli.pretty {
                render(&out.value)
            } else {
                canonical(&out.value)
            };
            let written = match &cli.out {
                Some(path) => write_text(path, &text),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return 2;
            }
            for n in &out.notes {
                eprintln!("{n}");
            }
            i32::from(out.failed)
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn execute(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Ring(cmd) => ring_cmd(cmd),
        Command::Module(cmd) => module_cmd(cmd),
        Command::Resolve { module, steps } => {
            let m = load_module(module)?.module();
            let res = resolve(&m, *steps)?;
            Ok(Output::ok(resolution_to_json(&res, *steps)))
        }
        Command::Tor(args) => homology_cmd(args, false),
        Command::Ext(args) => homology_cmd(args, true),
        Command::Series(args) => series_cmd(args),
        Command::Koszul { module, series } => {
            let m = load_module(module)?.module();
            match series {
                None => {
                    let v = KoszulContext::new(m.ring()).is_koszul(&m)?;
                    Ok(Output::ok(
                        serde_json::to_value(v).expect("verdicts serialize"),
                    ))
                }
                Some(n) => {
                    let rep = koszul_series_check(&m, *n)?;
                    let mut out =
                        Output::ok(serde_json::to_value(&rep).expect("reports serialize"));
                    if rep.flagged {
                        out.notes.push(
                            "note: formula and verdict disagree; flagged for inspection".into(),
                        );
                    }
                    Ok(out)
                }
            }
        }
        Command::Verify(args) => verify_cmd(args),
    }
}

fn ring_cmd(cmd: &RingCmd) -> Result<Output> {
    match cmd {
        RingCmd::New {
            p,
            e,
            form,
            matrix,
            seed,
        } => {
            let ring = match matrix {
                Some(text) => {
                    let form: Value = serde_json::from_str(text)
                        .map_err(|err| Error::schema("", format!("--matrix is not JSON: {err}")))?;
                    parse_ring(&json!({"p": p, "e": e, "form": form}), "")?
                }
                None => {
                    let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                    ShortGorensteinRing::with_choice(*p, *e, (*form).into(), &mut rng)?
                }
            };
            Ok(Output::ok(ring_to_json(&ring)))
        }
        RingCmd::Check { file } => {
            let ring = load_ring(file)?;
            Ok(Output::ok(json!({
                "valid": true,
                "ring": ring_to_json(&ring),
                "hilbert": ring.hilbert(),
            })))
        }
    }
}

fn store_doc(pres: Presentation, ring_path: &std::path::Path, link: bool) -> Value {
    let mut doc = ModuleDoc::inline(pres);
    if link {
        doc.ring_ref = RingRef::Path(ring_path.to_string_lossy().into_owned());
    }
    doc.to_json()
}

fn parse_elements(ring: &ShortGorensteinRing, text: &str) -> Result<Vec<RingElement>> {
    let v: Value =
        serde_json::from_str(text).map_err(|err| Error::schema("", format!("not JSON: {err}")))?;
    let list = v
        .as_array()
        .ok_or_else(|| Error::schema("", "expected an array of elements"))?;
    list.iter()
        .enumerate()
        .map(|(i, x)| {
            let c: Vec<i64> = x
                .as_array()
                .and_then(|a| a.iter().map(Value::as_i64).collect())
                .ok_or_else(|| Error::schema(format!("/{i}"), "expected an integer array"))?;
            ring.element(&c).map_err(|_| {
                Error::schema(
                    format!("/{i}"),
                    format!("expected {} integers, got {}", ring.dim(), c.len()),
                )
            })
        })
        .collect()
}

fn module_cmd(cmd: &ModuleCmd) -> Result<Output> {
    match cmd {
        ModuleCmd::New {
            ring,
            presentation,
            ideal,
            residue_field,
            free,
            radical_square_quotient: rsq,
            dual_of,
            link_ring,
        } => {
            let r = load_ring(ring)?;
            let pres = if let Some(text) = presentation {
                let v: Value = serde_json::from_str(text)
                    .map_err(|err| Error::schema("", format!("not JSON: {err}")))?;
                let doc = crate::io::parse_module(
                    &json!({"ring": ring_to_json(&r), "presentation": v}),
                    None,
                )?;
                doc.presentation
            } else if let Some(text) = ideal {
                let gens = parse_elements(&r, text)?;
                if let Some(i) = gens.iter().position(|g| g.is_unit()) {
                    return Err(Error::UnitIdeal(i));
                }
                Presentation::from_rows(&r, &[gens])?
            } else if *residue_field {
                canonical_presentation(&FiniteModule::residue_field(&r))?
            } else if let Some(g) = free {
                canonical_presentation(&FiniteModule::free(&r, *g))?
            } else if *rsq {
                canonical_presentation(&radical_square_quotient(&r))?
            } else if let Some(path) = dual_of {
                let m = load_module(path)?.module();
                if m.ring() != &r {
                    return Err(Error::RingMismatch);
                }
                canonical_presentation(&matlis_dual(&m))?
            } else {
                return Err(Error::Config(
                    "choose one of --presentation, --ideal, --residue-field, --free, --radical-square-quotient, --dual-of"
                        .into(),
                ));
            };
            Ok(Output::ok(store_doc(pres, ring, *link_ring)))
        }
        ModuleCmd::Random {
            ring,
            generators,
            relations,
            seed,
            link_ring,
        } => {
            let r = load_ring(ring)?;
            let pres = random_presentation(&r, *generators, *relations, *seed);
            Ok(Output::ok(store_doc(pres, ring, *link_ring)))
        }
        ModuleCmd::Info { file } => {
            let m = load_module(file)?.module();
            Ok(Output::ok(json!({
                "dim": m.dim(),
                "nu": m.nu(),
                "hilbert": hilbert_series(&m).coefficients.iter().map(crate::io::big_json).collect::<Vec<_>>(),
                "radical_square_zero": m.radical_square_zero(),
                "socle_dim": socle_rows(&m).rows(),
                "fingerprint": m.fingerprint(),
            })))
        }
    }
}

fn parse_range(text: &str) -> Result<(usize, usize)> {
    let bad = || Error::Config(format!("range {text:?} is not of the form a..b"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn homology_cmd(args: &HomArgs, is_ext: bool) -> Result<Output> {
    let m = load_module(&args.m)?.module();
    let n = load_module(&args.n_mod)?.module();
    if m.ring() != n.ring() {
        return Err(Error::RingMismatch);
    }
    let (a, b) = parse_range(&args.range)?;
    let res = resolve(&m, b + 1)?;
    let mut table = if is_ext {
        ext_from_resolution(&res, &n, b)?
    } else {
        tor_from_resolution(&res, &n, b)?
    };
    if args.induced {
        // Ext^i(ι_M, N) has the rank of Tor_i(ι_M, N^*)
        let partner = if is_ext { matlis_dual(&n) } else { n.clone() };
        let res_p = resolve(&partner, b + 1)?;
        let (_, iota) = radical_submodule(&m);
        for r in tor_induced_balanced(&iota, &res_p, b)? {
            table.degrees[r.i].induced_rank = Some(r.rank);
        }
    }
    table.degrees.drain(..a);
    Ok(Output::ok(json!({
        "kind": if is_ext { "ext" } else { "tor" },
        "degrees": serde_json::to_value(&table.degrees).expect("tables serialize"),
    })))
}

fn series_cmd(args: &SeriesArgs) -> Result<Output> {
    let doc = load_module(&args.module)?;
    let m = doc.module();
    let n = args.steps;
    let partner = || -> Result<FiniteModule> {
        let path = args
            .n_mod
            .as_ref()
            .ok_or_else(|| Error::Config("this series needs --n-mod".into()))?;
        let other = load_module(path)?.module();
        if other.ring() != m.ring() {
            return Err(Error::RingMismatch);
        }
        Ok(other)
    };
    let series = match args.kind {
        SeriesArg::Hilbert => hilbert_series(&m),
        SeriesArg::Poincare => poincare_from_resolution(&resolve(&m, n)?, n),
        kind => {
            let other = partner()?;
            let res = resolve(&m, n + 1)?;
            let (table, k) = match kind {
                SeriesArg::TorNu => (tor_from_resolution(&res, &other, n)?, SeriesKind::TorNu),
                SeriesArg::TorLen => (tor_from_resolution(&res, &other, n)?, SeriesKind::TorLength),
                SeriesArg::ExtNu => (ext_from_resolution(&res, &other, n)?, SeriesKind::ExtNu),
                _ => (ext_from_resolution(&res, &other, n)?, SeriesKind::ExtLength),
            };
            series_from_table(&table, k)
        }
    };
    if !args.certify {
        return Ok(Output::ok(series_to_json(&series, None)));
    }
    match certify_rational(&series, m.ring().e(), args.margin) {
        Ok(c) => Ok(Output::ok(series_to_json(&series, Some(&c)))),
        Err(err @ Error::InsufficientDegree { .. }) => Ok(Output {
            value: series_to_json(&series, None),
            failed: true,
            notes: vec![format!("certification failed: {err}")],
        }),
        Err(err) => Err(err),
    }
}

fn verify_cmd(args: &VerifyArgs) -> Result<Output> {
    let d = TrialConfig::default();
    let cfg = TrialConfig {
        seed: args.seed.unwrap_or(d.seed),
        trials: args.trials.unwrap_or(d.trials),
        p: args.p.unwrap_or(d.p),
        e: args.e.unwrap_or(d.e),
        form: args.form.map(Into::into).unwrap_or(d.form),
        max_generators: args.max_generators.unwrap_or(d.max_generators),
        max_relations: args.max_relations.unwrap_or(d.max_relations),
        max_dim: args.max_dim.unwrap_or(d.max_dim),
        cutoff: args.cutoff.unwrap_or(d.cutoff),
        margin: args.margin.unwrap_or(d.margin),
        max_entries: args.max_entries.unwrap_or(d.max_entries),
        max_work: args.max_work.unwrap_or(d.max_work),
    };
    let sel = args.trial.map_or(Selection::All, Selection::Only);
    let mut report = run_check(args.check.into(), &cfg, args.lemma.as_deref(), sel)?;
    if !args.timings {
        report = report.without_timing();
    }
    let notes = report
        .failures
        .iter()
        .map(|f| {
            format!(
                "FAIL {}: {}\n  reproduce: {}",
                f.label, f.reason, f.reproducer
            )
        })
        .collect();
    Ok(Output {
        failed: !report.pass,
        value: serde_json::from_str(&to_canonical(&report)).expect("canonical JSON parses"),
        notes,
    })
}

/// Plain-text view of a JSON document: `key: value` lines, arrays of
/// records as aligned tables.
pub fn render(v: &Value) -> String {
    let mut out = String::new();
    render_into(&mut out, v, 0);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => Some(
            a.iter()
                .map(|x| scalar(x).unwrap_or_default())
                .collect::<Vec<_>>()
                .join(" "),
        ),
        _ => None,
    }
}

fn render_into(out: &mut String, v: &Value, indent: usize) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_into(out, x, indent + 2);
                    }
                }
            }
        }
        Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_object) => {
            let mut cols: Vec<String> = Vec::new();
            for it in items {
                for (k, x) in it.as_object().expect("checked") {
                    if scalar(x).is_some() && !cols.contains(k) {
                        cols.push(k.clone());
                    }
                }
            }
            let rows: Vec<Vec<String>> = items
                .iter()
                .map(|it| {
                    cols.iter()
                        .map(|c| it.get(c).and_then(scalar).unwrap_or_else(|| "-".into()))
                        .collect()
                })
                .collect();
            let widths: Vec<usize> = cols
                .iter()
                .enumerate()
                .map(|(j, c)| {
                    rows.iter()
                        .map(|r| r[j].len())
                        .chain([c.len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |cells: Vec<&str>| {
                let s: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect();
                format!("{pad}{}\n", s.join("  ").trim_end())
            };
            out.push_str(&line(cols.iter().map(String::as_str).collect()));
            for r in &rows {
                out.push_str(&line(r.iter().map(String::as_str).collect()));
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}[{i}] {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}[{i}]\n"));
                        render_into(out, x, indent + 2);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("0..5").unwrap(), (0, 5));
        assert_eq!(parse_range("2..=4").unwrap(), (2, 4));
        assert!(parse_range("5..2").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn usage_error_exits_2() {
        assert_eq!(run(["gorlab", "frobnicate"]), 2);
        assert_eq!(run(["gorlab", "verify", "lofwall", "--cutoff", "3"]), 2);
    }
}
