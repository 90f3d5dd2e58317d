//! Batch interface: parse structure files, run validators, conversions,
//! Kleisli constructions and enumerations, and report deterministically.
//!
//! Exit codes: 0 valid, 1 well-formed but violating a law, 2 malformed
//! input or refused request.

mod canonical;
mod format;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

pub use canonical::to_canonical;
pub use format::{emit, monad_cells, parse, span_monad_of, to_document, MonadTable, Structure, KINDS};

use crate::correspond::{
    e_family_to_algebra, kleisli_category, monad_to_warping, validate_algebra, validate_e_family,
    validate_side_condition, warping_to_monad, warping_to_wreath, wreath_to_monad, wreath_to_warping,
};
use crate::enumerate::{
    enumerate_e_families, enumerate_monads_on_ab, enumerate_mw_monads, enumerate_warpings, enumerate_wreaths,
    object_maps, DEFAULT_LIMIT,
};
use crate::fincore::{validate_category, FinCategory, FinFunction};
use crate::monadwarp::{
    category_to_monad, mw_to_warping, mw_view, validate_mw, validate_warping, validate_wreath, Warping,
};
use crate::skew::{
    search_warping_cells, skew_kleisli, validate_skew_algebra, validate_skew_bicategory, validate_skew_warping,
};
use crate::spaneng::restrict_star;
use crate::{Error, Result, ValidationReport, Violation};

#[derive(Parser, Debug)]
#[command(
    name = "warp",
    version,
    about = "Validate, convert and enumerate warpings and related structures"
)]
pub struct Cli {
    /// Report layout.
    #[arg(long, value_enum, default_value = "canonical", global = true)]
    pub format: OutputFormat,
    /// Witnesses kept per violated rule.
    #[arg(long, value_enum, default_value = "all", global = true)]
    pub witnesses: WitnessMode,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check a structure file against the laws of its kind.
    Validate { file: PathBuf },
    /// Translate between warpings, wreaths, monads on AB and mw-monads.
    Convert {
        file: PathBuf,
        #[arg(long, value_enum)]
        to: Target,
        /// Write the structure here and print a report instead.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Build the Kleisli category (or skew bicategory) of a warping.
    Kleisli {
        file: PathBuf,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Count every valid structure of a kind over a base.
    Enumerate {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: EnumKind,
        #[arg(long, default_value_t = 2)]
        max_objects: usize,
        #[arg(long, default_value_t = 2)]
        max_hom: usize,
        /// Restrict to one object map, written `x=Tx,y=Ty`.
        #[arg(long)]
        object_map: Option<String>,
        /// Write every instance found into this directory.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Canonical,
    Pretty,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessMode {
    All,
    First,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Warping,
    Wreath,
    Monad,
    Mw,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumKind {
    #[value(name = "mw_monad")]
    MwMonad,
    Warping,
    Wreath,
    Monad,
    Algebra,
    #[value(name = "skew_warping")]
    SkewWarping,
}

#[derive(Serialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Valid,
    Invalid,
    Malformed,
    Refused,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Valid => 0,
            Verdict::Invalid => 1,
            Verdict::Malformed | Verdict::Refused => 2,
        }
    }
}

/// Outcome of one command. Everything but `wall_time` is a function of the
/// input bytes and flags; the wall time only appears in pretty output.
#[derive(Serialize, Clone, Debug)]
pub struct RunReport {
    pub command: String,
    pub input_digest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    pub structural: Vec<String>,
    pub witnesses: Vec<Violation>,
    pub counts: BTreeMap<String, u64>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl RunReport {
    fn new(command: &str, input: &[u8]) -> Self {
        let digest: String = Sha256::digest(input).iter().map(|b| format!("{b:02x}")).collect();
        RunReport {
            command: command.into(),
            input_digest: format!("sha256:{digest}"),
            kind: None,
            verdict: Verdict::Valid,
            message: None,
            structural: Vec::new(),
            witnesses: Vec::new(),
            counts: BTreeMap::new(),
            wall_time: Duration::ZERO,
        }
    }

    fn take(&mut self, r: ValidationReport) {
        self.verdict = if !r.is_structurally_sound() {
            Verdict::Malformed
        } else if r.is_valid() {
            Verdict::Valid
        } else {
            Verdict::Invalid
        };
        self.structural = r.structural;
        self.witnesses = r.violations;
    }

    fn fail(&mut self, e: &Error) {
        self.verdict = match e {
            Error::Invalid { .. } => Verdict::Invalid,
            Error::Bounds(_) | Error::Unsupported(_) => Verdict::Refused,
            _ => Verdict::Malformed,
        };
        self.message = Some(e.to_string());
    }

    pub fn exit_code(&self) -> i32 {
        self.verdict.exit_code()
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Canonical => to_canonical(&serde_json::to_value(self).expect("report serializes")),
            OutputFormat::Pretty => {
                let mut s = String::new();
                let _ = writeln!(s, "{}: {:?} (exit {})", self.command, self.verdict, self.exit_code());
                let _ = writeln!(s, "  input {}", self.input_digest);
                if let Some(k) = &self.kind {
                    let _ = writeln!(s, "  kind {k}");
                }
                if let Some(m) = &self.message {
                    let _ = writeln!(s, "  {m}");
                }
                for m in &self.structural {
                    let _ = writeln!(s, "  structural: {m}");
                }
                for v in &self.witnesses {
                    let _ = writeln!(s, "  {}: {}", v.rule, v.witness);
                }
                for (k, n) in &self.counts {
                    let _ = writeln!(s, "  {k}: {n}");
                }
                let _ = writeln!(s, "  wall time {:.3} ms", self.wall_time.as_secs_f64() * 1e3);
                s
            }
        }
    }
}

/// Result of running a command: the report, plus an emitted structure for
/// `convert` and `kleisli`.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: RunReport,
    pub structure: Option<String>,
}

/// Laws of a structure, dispatched on its kind.
pub fn validate_structure(s: &Structure) -> ValidationReport {
    match s {
        Structure::Category(c) => validate_category(c),
        Structure::Monad(m) => m.validate(),
        Structure::Warping(w) => validate_warping(w),
        Structure::MwMonad(m) => validate_mw(m),
        Structure::Wreath(w) => validate_wreath(w),
        Structure::Algebra(e) => {
            let mut r = validate_e_family(e);
            if r.is_valid() {
                match e_family_to_algebra(e) {
                    Ok(a) => r.absorb("span form", validate_algebra(&a)),
                    Err(err) => r.structural(err.to_string()),
                }
            }
            r
        }
        Structure::SkewBicategory(b) => validate_skew_bicategory(b),
        Structure::SkewWarping(w) => validate_skew_warping(w),
        Structure::SkewAlgebra(a) => validate_skew_algebra(a),
    }
}

fn unsupported(from: &str, to: &str) -> Error {
    Error::Unsupported(format!("no conversion from {from} to {to}"))
}

fn as_warping(s: &Structure) -> Result<Warping> {
    match s {
        Structure::Warping(w) => Ok(w.clone()),
        Structure::Wreath(w) => wreath_to_warping(w),
        Structure::Monad(m) => monad_to_warping(&m.to_monad_on_ab()?),
        Structure::MwMonad(m) => mw_to_warping(m),
        Structure::Category(c) => Ok(Warping::identity(&category_to_monad(c)?)),
        other => Err(unsupported(other.kind(), "warping")),
    }
}

/// Translates a valid structure to the target kind.
pub fn convert(s: &Structure, to: Target) -> Result<Structure> {
    Ok(match (to, s) {
        (Target::Warping, _) => Structure::Warping(as_warping(s)?),
        (Target::Wreath, Structure::Wreath(w)) => Structure::Wreath(w.clone()),
        (Target::Wreath, _) => Structure::Wreath(warping_to_wreath(&as_warping(s)?)?),
        (Target::Monad, Structure::Monad(m)) => Structure::Monad(m.clone()),
        (Target::Monad, Structure::Wreath(w)) => Structure::Monad(MonadTable::of_monad_on_ab(&wreath_to_monad(w)?)?),
        (Target::Monad, _) => Structure::Monad(MonadTable::of_monad_on_ab(&warping_to_monad(&as_warping(s)?)?)?),
        (Target::Mw, Structure::MwMonad(m)) => Structure::MwMonad(m.clone()),
        (Target::Mw, _) => Structure::MwMonad(mw_view(&as_warping(s)?)?),
    })
}

/// The Kleisli construction of a valid mw-monad, warping or skew warping.
pub fn kleisli(s: &Structure) -> Result<Structure> {
    match s {
        Structure::MwMonad(m) => Ok(Structure::Category(kleisli_category(m)?)),
        Structure::Warping(w) => Ok(Structure::Category(kleisli_category(&mw_view(w)?)?)),
        Structure::SkewWarping(w) => Ok(Structure::SkewBicategory(skew_kleisli(w)?)),
        other => Err(Error::Unsupported(format!(
            "no Kleisli construction for {}",
            other.kind()
        ))),
    }
}

/// Bounds on the base of an enumeration.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub max_objects: usize,
    pub max_hom: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_objects: 2,
            max_hom: 2,
        }
    }
}

fn check_bounds(c: &FinCategory, b: Bounds, what: &str) -> Result<()> {
    if c.objects().len() > b.max_objects {
        return Err(Error::Bounds(format!(
            "{what} has {} objects, over the limit --max-objects {}",
            c.objects().len(),
            b.max_objects
        )));
    }
    if let Some(((x, y), h)) = c.homs().iter().find(|(_, h)| h.len() > b.max_hom) {
        return Err(Error::Bounds(format!(
            "{what} hom ({x},{y}) has {} elements, over the limit --max-hom {}",
            h.len(),
            b.max_hom
        )));
    }
    Ok(())
}

fn parse_object_map(c: &FinCategory, spec: &str) -> Result<FinFunction> {
    let mut map = BTreeMap::new();
    for part in spec.split(',').filter(|p| !p.is_empty()) {
        let (x, y) = part.split_once('=').ok_or_else(|| Error::Parse {
            locus: "--object-map".into(),
            message: format!("expected x=Tx, got {part:?}"),
        })?;
        map.insert(x.trim().to_string(), y.trim().to_string());
    }
    FinFunction::new(c.objects().clone(), c.objects().clone(), map).map_err(|e| Error::Parse {
        locus: "--object-map".into(),
        message: e.to_string(),
    })
}

fn render_map(t: &FinFunction) -> String {
    let parts: Vec<String> = t.pairs().map(|(a, b)| format!("{a}->{b}")).collect();
    parts.join(",")
}

/// Every valid instance of `kind` over the base in `s`, with counts.
pub fn enumerate(
    s: &Structure,
    kind: EnumKind,
    bounds: Bounds,
    object_map: Option<&str>,
) -> Result<(BTreeMap<String, u64>, Vec<Structure>)> {
    let mut counts = BTreeMap::new();
    let mut found = Vec::new();
    match kind {
        EnumKind::MwMonad | EnumKind::Warping | EnumKind::Wreath | EnumKind::Monad => {
            let (c, fixed) = match s {
                Structure::Category(c) => (c.clone(), None),
                Structure::MwMonad(m) => (m.base.clone(), Some(m.obj_map.clone())),
                other => {
                    return Err(Error::Unsupported(format!(
                        "cannot enumerate over a {} file",
                        other.kind()
                    )))
                }
            };
            check_bounds(&c, bounds, "base")?;
            let maps = match (object_map, fixed) {
                (Some(spec), _) => vec![parse_object_map(&c, spec)?],
                (None, Some(t)) => vec![t],
                (None, None) => object_maps(c.objects()),
            };
            let base = category_to_monad(&c)?;
            counts.insert("object maps".into(), maps.len() as u64);
            for t in &maps {
                let before = found.len();
                match kind {
                    EnumKind::MwMonad => found.extend(
                        enumerate_mw_monads(&c, Some(t), DEFAULT_LIMIT)?
                            .into_iter()
                            .map(Structure::MwMonad),
                    ),
                    EnumKind::Warping => found.extend(
                        enumerate_warpings(&base, &restrict_star(t), DEFAULT_LIMIT)?
                            .into_iter()
                            .map(Structure::Warping),
                    ),
                    EnumKind::Wreath => found.extend(
                        enumerate_wreaths(&base, &restrict_star(t), DEFAULT_LIMIT)?
                            .into_iter()
                            .map(Structure::Wreath),
                    ),
                    _ => {
                        let all = enumerate_monads_on_ab(&base, &restrict_star(t), DEFAULT_LIMIT)?;
                        *counts.entry("monad structures (laws only)".into()).or_insert(0) += all.len() as u64;
                        for m in all.iter().filter(|m| validate_side_condition(m).is_valid()) {
                            found.push(Structure::Monad(MonadTable::of_monad_on_ab(m)?));
                        }
                    }
                }
                counts.insert(
                    format!("instances at T={}", render_map(t)),
                    (found.len() - before) as u64,
                );
            }
        }
        EnumKind::Algebra => {
            let Structure::MwMonad(m) = s else {
                return Err(Error::Unsupported(format!(
                    "algebras are enumerated over an mw_monad file, not {}",
                    s.kind()
                )));
            };
            check_bounds(&m.base, bounds, "base")?;
            let r = validate_mw(m);
            if !r.is_valid() {
                return Err(Error::invalid("mw-monad", &r));
            }
            for a in m.base.objects() {
                let fams = enumerate_e_families(m, a, DEFAULT_LIMIT)?;
                counts.insert(format!("instances at {a}"), fams.len() as u64);
                found.extend(fams.into_iter().map(Structure::Algebra));
            }
        }
        EnumKind::SkewWarping => {
            let Structure::SkewWarping(w) = s else {
                return Err(Error::Unsupported(format!(
                    "skew warpings are enumerated from a skew_warping file, not {}",
                    s.kind()
                )));
            };
            if w.base.objects.len() > bounds.max_objects {
                return Err(Error::Bounds(format!(
                    "base has {} objects, over the limit --max-objects {}",
                    w.base.objects.len(),
                    bounds.max_objects
                )));
            }
            for ((x, y), h) in &w.base.homs {
                check_bounds(
                    h,
                    Bounds {
                        max_objects: bounds.max_hom,
                        max_hom: usize::MAX,
                    },
                    &format!("hom ({x},{y})"),
                )?;
            }
            let (search, all) = search_warping_cells(w, DEFAULT_LIMIT)?;
            counts.insert("cell slots".into(), search.slots as u64);
            counts.insert("assignments".into(), search.assignments as u64);
            counts.insert("rigid".into(), search.rigid as u64);
            found.extend(all.into_iter().map(Structure::SkewWarping));
        }
    }
    counts.insert("instances".into(), found.len() as u64);
    Ok((counts, found))
}

fn read_structure(file: &Path, report: &mut RunReport) -> Option<Structure> {
    let bytes = match std::fs::read(file) {
        Ok(b) => b,
        Err(e) => {
            report.verdict = Verdict::Malformed;
            report.message = Some(format!("cannot read {}: {e}", file.display()));
            return None;
        }
    };
    let command = report.command.clone();
    *report = RunReport::new(&command, &bytes);
    let text = match String::from_utf8(bytes) {
        Ok(t) => t,
        Err(e) => {
            report.fail(&Error::Parse {
                locus: format!("byte {}", e.utf8_error().valid_up_to()),
                message: "input is not UTF-8".into(),
            });
            return None;
        }
    };
    match parse(&text) {
        Ok(s) => {
            report.kind = Some(s.kind().into());
            Some(s)
        }
        Err(e) => {
            report.fail(&e);
            None
        }
    }
}

fn write_output(path: &Path, text: &str, report: &mut RunReport) -> bool {
    match std::fs::write(path, text) {
        Ok(()) => true,
        Err(e) => {
            report.verdict = Verdict::Refused;
            report.message = Some(format!("cannot write {}: {e}", path.display()));
            false
        }
    }
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Outcome {
    let start = Instant::now();
    let mut structure = None;
    let mut report = match &cli.command {
        Command::Validate { file } => {
            let mut report = RunReport::new("validate", b"");
            if let Some(s) = read_structure(file, &mut report) {
                report.take(validate_structure(&s));
            }
            report
        }
        Command::Convert { file, to, output } => {
            let mut report = RunReport::new("convert", b"");
            structure = transform(file, output.as_deref(), &mut report, |s| convert(s, *to));
            report
        }
        Command::Kleisli { file, output } => {
            let mut report = RunReport::new("kleisli", b"");
            structure = transform(file, output.as_deref(), &mut report, kleisli);
            report
        }
        Command::Enumerate {
            file,
            kind,
            max_objects,
            max_hom,
            object_map,
            emit: emit_dir,
        } => {
            let mut report = RunReport::new("enumerate", b"");
            if let Some(s) = read_structure(file, &mut report) {
                let bounds = Bounds {
                    max_objects: *max_objects,
                    max_hom: *max_hom,
                };
                match enumerate(&s, *kind, bounds, object_map.as_deref()) {
                    Ok((counts, found)) => {
                        report.counts = counts;
                        if let Some(dir) = emit_dir {
                            let _ = std::fs::create_dir_all(dir);
                            for (i, inst) in found.iter().enumerate() {
                                let path = dir.join(format!("{}-{i:04}.json", inst.kind()));
                                if !write_output(&path, &emit(inst), &mut report) {
                                    break;
                                }
                            }
                        }
                    }
                    Err(e) => report.fail(&e),
                }
            }
            report
        }
    };
    if cli.witnesses == WitnessMode::First {
        let mut r = ValidationReport {
            subject: String::new(),
            structural: std::mem::take(&mut report.structural),
            violations: std::mem::take(&mut report.witnesses),
        };
        r.truncate_witnesses(1);
        report.structural = r.structural;
        report.witnesses = r.violations;
    }
    report.wall_time = start.elapsed();
    Outcome { report, structure }
}

/// Parse, validate, then apply `f`; emits the result if it is written to
/// stdout, or writes it to `output`.
fn transform(
    file: &Path,
    output: Option<&Path>,
    report: &mut RunReport,
    f: impl Fn(&Structure) -> Result<Structure>,
) -> Option<String> {
    let s = read_structure(file, report)?;
    let r = validate_structure(&s);
    if !r.is_valid() {
        report.take(r);
        return None;
    }
    match f(&s) {
        Ok(out) => {
            let text = emit(&out);
            report.counts.insert("output bytes".into(), text.len() as u64);
            match output {
                Some(path) => {
                    write_output(path, &text, report);
                    None
                }
                None => Some(text),
            }
        }
        Err(e) => {
            report.fail(&e);
            None
        }
    }
}

/// Runs the command line `args` (program name first) and returns the exit
/// code, standard output and standard error.
pub fn execute<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            return if e.use_stderr() {
                (2, String::new(), e.to_string())
            } else {
                (0, e.to_string(), String::new())
            };
        }
    };
    let out = run(&cli);
    let code = out.report.exit_code();
    match (out.structure, code) {
        (Some(text), 0) if cli.format == OutputFormat::Canonical => (code, text, String::new()),
        (Some(text), 0) => {
            let v: serde_json::Value = serde_json::from_str(&text).expect("emitted text parses");
            let pretty = serde_json::to_string_pretty(&v).expect("serializes") + "\n";
            (code, pretty, out.report.render(OutputFormat::Pretty))
        }
        _ => (code, out.report.render(cli.format), String::new()),
    }
}

/// Entry point of the `warp` binary.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let (code, stdout, stderr) = execute(args);
    print!("{stdout}");
    eprint!("{stderr}");
    code
}
