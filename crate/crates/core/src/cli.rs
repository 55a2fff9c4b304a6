//! Command-line front end.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;

use crate::components::{
    component_data, hessenberg_from_function, make_semisimple, report_json, standard_hessenberg_function,
    words,
};
use crate::error::Error;
use crate::gkm::{build_gkm, build_gkm_experimental, singular_subgraph, to_dot, to_json, Highlight};
use crate::patch::{
    patch_ideal, singular_scan, type_a_group, verify_against_combinatorics, LocalDimSource, Verdict,
};
use crate::rational::{format_rationals, parse_rationals};
use crate::root_system::CartanType;
use crate::table::{builtin_specs, compute_table, parse_spec, render_text};
use crate::weyl::WeylGroup;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "hessenberg", version, about = "Components, singular loci and GKM graphs of semisimple Hessenberg varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Irreducible components of B(S, H_Δ) and their intersections.
    Components(GroupArgs),
    /// GKM graph, optionally highlighted by component or singular locus.
    Gkm(GkmArgs),
    /// Patch ideal at one fixed point (type A).
    Patch(PatchArgs),
    /// Tangent-dimension scan over all fixed points (type A).
    Scan(ScanArgs),
    /// Compare the Jacobian criterion with the combinatorial singular locus (type A).
    Verify(VerifyArgs),
    /// Singular / irreducible / equidimensional table.
    Table(TableArgs),
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to FILE instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<std::path::PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct GroupArgs {
    /// Cartan type: A, B, C or D.
    #[arg(long = "type", default_value = "A")]
    cartan: CartanType,
    /// Matrix size (type A).
    #[arg(long)]
    n: Option<usize>,
    /// Rank of the root system.
    #[arg(long)]
    rank: Option<usize>,
    /// Diagonal of S, comma-separated integers or p/q.
    #[arg(long, allow_hyphen_values = true)]
    s: String,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
struct GkmArgs {
    #[command(flatten)]
    group: GroupArgs,
    #[arg(long, value_enum, default_value_t = HighlightArg::None)]
    highlight: HighlightArg,
    /// Hessenberg function for the experimental builder (type A).
    #[arg(long, value_delimiter = ',')]
    h: Option<Vec<usize>>,
    /// Build with `w⁻¹γ ∈ Φ_H⁻` for the Hessenberg space given by --h.
    #[arg(long)]
    experimental: bool,
}

#[derive(Args, Debug, Clone)]
struct TypeAArgs {
    /// Matrix size.
    #[arg(long)]
    n: Option<usize>,
    /// Diagonal of S, comma-separated integers or p/q.
    #[arg(long, allow_hyphen_values = true)]
    s: String,
    /// Hessenberg function, e.g. 2,3,4,4 (default: standard).
    #[arg(long, value_delimiter = ',')]
    h: Option<Vec<usize>>,
    /// Seed for the diagnostic rank sampler.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
struct PatchArgs {
    #[command(flatten)]
    a: TypeAArgs,
    /// Fixed point as a word, e.g. s2s1 or e.
    #[arg(long)]
    w: String,
}

#[derive(Args, Debug, Clone)]
struct ScanArgs {
    #[command(flatten)]
    a: TypeAArgs,
    /// Known local dimension; implies --dim-source supplied.
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long, value_enum)]
    dim_source: Option<DimSourceArg>,
}

#[derive(Args, Debug, Clone)]
struct VerifyArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    s: String,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
struct TableArgs {
    /// Only rows of this matrix size.
    #[arg(long)]
    n: Option<usize>,
    /// File with one `h ; s` row per line (default: built-in rows).
    #[arg(long, value_name = "FILE")]
    spec: Option<std::path::PathBuf>,
    #[command(flatten)]
    common: Common,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum HighlightArg {
    None,
    Components,
    Singular,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum DimSourceArg {
    Combinatorial,
    Supplied,
    MaxCell,
    Unknown,
}

/// Failure with its exit code and message.
struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Inconsistency { .. } => EXIT_INCONSISTENT,
            _ => EXIT_INPUT,
        };
        Failure(code, e.to_string())
    }
}

type CmdResult<T> = Result<T, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure(EXIT_USAGE, msg.into())
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let (common, result) = match &cli.command {
        Command::Components(a) => (a.common.clone(), cmd_components(a)),
        Command::Gkm(a) => (a.group.common.clone(), cmd_gkm(a)),
        Command::Patch(a) => (a.a.common.clone(), cmd_patch(a)),
        Command::Scan(a) => (a.a.common.clone(), cmd_scan(a)),
        Command::Verify(a) => (a.common.clone(), cmd_verify(a)),
        Command::Table(a) => (a.common.clone(), cmd_table(a)),
    };
    let text = match result {
        Ok(t) => t,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return code;
        }
    };
    match &common.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => {
            let _ = out.write_all(text.as_bytes());
        }
    }
    EXIT_OK
}

fn reject_dot(c: &Common) -> CmdResult<()> {
    if c.format == Format::Dot {
        return Err(usage("--format dot is only available for `gkm`"));
    }
    Ok(())
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serialisable") + "\n"
}

fn group_from(a: &GroupArgs) -> CmdResult<(WeylGroup, Vec<BigRational>)> {
    let values = parse_rationals(&a.s)?;
    let rank = match (a.cartan, a.n, a.rank) {
        (CartanType::A, Some(_), Some(_)) => return Err(usage("give either --n or --rank")),
        (CartanType::A, Some(n), None) => n.checked_sub(1).ok_or_else(|| usage("--n must be positive"))?,
        (_, Some(_), _) => return Err(usage("--n is the type A matrix size; use --rank for other types")),
        (_, None, Some(r)) => r,
        (CartanType::A, None, None) => values.len().saturating_sub(1),
        (_, None, None) => values.len(),
    };
    let wg = WeylGroup::of_type(a.cartan, rank)?;
    Ok((wg, values))
}

fn n_from(n: Option<usize>, values: &[BigRational]) -> CmdResult<usize> {
    match n {
        Some(n) if n != values.len() => {
            Err(Error::DimensionMismatch { expected: n, got: values.len() }.into())
        }
        _ => Ok(values.len()),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_components(a: &GroupArgs) -> CmdResult<String> {
    reject_dot(&a.common)?;
    let (wg, values) = group_from(a)?;
    let s = make_semisimple(wg.root_system(), values.clone())?;
    let r = component_data(&wg, &s)?;
    if a.common.format == Format::Json {
        return Ok(json(&report_json(&wg, &values, &r)));
    }
    let mut t = String::new();
    let _ = writeln!(t, "type {}{}  S = ({})", wg.root_system().cartan_type(), wg.rank(), format_rationals(&values));
    let _ = writeln!(t, "Delta_M = {}", r.delta_m);
    let _ = writeln!(t, "variety dimension: {}", r.variety_dim);
    let _ = writeln!(
        t,
        "irreducible: {}  equidimensional: {}",
        yes_no(r.is_irreducible()),
        yes_no(r.is_equidimensional())
    );
    let _ = writeln!(t, "components: {}", r.components.len());
    for (i, c) in r.components.iter().enumerate() {
        let _ = writeln!(
            t,
            "  [{i}] v = {}  R(v) = {}  x_v = {}  w_v = {}  dim = {}  fixed points = {}",
            c.v.compact(),
            c.r_v,
            c.x_v.compact(),
            c.w_v.compact(),
            c.dimension,
            c.vertices.len()
        );
    }
    let _ = writeln!(t, "singular fixed points: {}", r.all_singular.len());
    for p in &r.singular_pairs {
        let _ = writeln!(t, "  [{}] & [{}]: {}", p.first, p.second, words(&p.vertices).join(" "));
    }
    Ok(t)
}

fn cmd_gkm(a: &GkmArgs) -> CmdResult<String> {
    let (wg, values) = group_from(&a.group)?;
    let s = make_semisimple(wg.root_system(), values.clone())?;
    let report = component_data(&wg, &s)?;
    let mut g = if a.experimental {
        let h = a.h.as_ref().ok_or_else(|| usage("--experimental needs --h"))?;
        if wg.root_system().cartan_type() != CartanType::A {
            return Err(usage("--h is only available in type A"));
        }
        build_gkm_experimental(&wg, &s, &hessenberg_from_function(wg.root_system(), h)?)?
    } else {
        if a.h.is_some() {
            return Err(usage("--h requires --experimental"));
        }
        build_gkm(&wg, &s)?
    };
    g.annotate(&report);
    let highlight = match a.highlight {
        HighlightArg::None => Highlight::None,
        HighlightArg::Components => Highlight::Components,
        HighlightArg::Singular => Highlight::Singular,
    };
    Ok(match a.group.common.format {
        Format::Dot => to_dot(&g, &wg, highlight),
        Format::Json => json(&to_json(&g, &wg)),
        Format::Text => {
            let mut t = String::new();
            let _ = writeln!(t, "vertices: {}  edges: {}", g.vertices.len(), g.edges.len());
            for e in &g.edges {
                let _ = writeln!(
                    t,
                    "{} -> {}  [{}]",
                    e.src.compact(),
                    e.dst.compact(),
                    wg.root_system().pretty(e.label)
                );
            }
            if highlight == Highlight::Singular {
                let sub = singular_subgraph(&g, &report);
                let _ = writeln!(t, "singular vertices: {}", words(&sub.vertices).join(" "));
            }
            t
        }
    })
}

fn h_or_standard(h: &Option<Vec<usize>>, n: usize) -> Vec<usize> {
    h.clone().unwrap_or_else(|| standard_hessenberg_function(n))
}

fn cmd_patch(a: &PatchArgs) -> CmdResult<String> {
    reject_dot(&a.a.common)?;
    let values = parse_rationals(&a.a.s)?;
    let n = n_from(a.a.n, &values)?;
    let wg = type_a_group(n)?;
    let w = wg.parse_word(&a.w)?;
    let h = h_or_standard(&a.a.h, n);
    let p = patch_ideal(&w, &values, &h)?;
    let data = p.summary(a.a.seed)?;
    if a.a.common.format == Format::Json {
        return Ok(json(&data));
    }
    let mut t = String::new();
    let _ = writeln!(t, "w = {}  h = {:?}  S = ({})", data.w, data.h, format_rationals(&values));
    let _ = writeln!(t, "generators: {}", data.generators.len());
    for ((i, j), g) in p.positions.iter().zip(&data.generators) {
        let _ = writeln!(t, "  a{i}{j} = {g}");
    }
    let _ = writeln!(t, "reduced generators:");
    for g in &data.reduced_generators {
        let _ = writeln!(t, "  {g}");
    }
    let _ = writeln!(t, "groebner basis:");
    for g in &data.groebner_basis {
        let _ = writeln!(t, "  {g}");
    }
    let _ = writeln!(t, "radical_certified: {}", data.radical_certified);
    let _ = writeln!(t, "origin_rank: {}", data.origin_rank);
    let _ = writeln!(t, "tangent_dim: {}", data.tangent_dim);
    let _ = writeln!(t, "ambient_generic_rank: {} (diagnostic)", data.ambient_generic_rank);
    Ok(t)
}

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Smooth => "smooth",
        Verdict::Singular => "singular",
        Verdict::Unknown => "unknown",
    }
}

fn cmd_scan(a: &ScanArgs) -> CmdResult<String> {
    reject_dot(&a.a.common)?;
    let values = parse_rationals(&a.a.s)?;
    let n = n_from(a.a.n, &values)?;
    let h = h_or_standard(&a.a.h, n);
    let standard = h == standard_hessenberg_function(n);
    let source = match (a.dim_source, a.dim) {
        (Some(DimSourceArg::Supplied) | None, Some(d)) => LocalDimSource::Supplied(d),
        (Some(DimSourceArg::Supplied), None) => return Err(usage("--dim-source supplied needs --dim")),
        (Some(_), Some(_)) => return Err(usage("--dim implies --dim-source supplied")),
        (Some(DimSourceArg::Combinatorial), None) => LocalDimSource::Combinatorial,
        (Some(DimSourceArg::MaxCell), None) => LocalDimSource::MaxCell,
        (Some(DimSourceArg::Unknown), None) => LocalDimSource::Unknown,
        (None, None) if standard => LocalDimSource::Combinatorial,
        (None, None) => LocalDimSource::Unknown,
    };
    let r = singular_scan(&values, &h, source, a.a.seed)?;
    if a.a.common.format == Format::Json {
        return Ok(json(&r));
    }
    let mut t = String::new();
    let _ = writeln!(t, "h = {:?}  S = ({})  local dimension: {:?}", r.h, format_rationals(&values), r.local_dim_source);
    if let Some(c) = &r.caveat {
        let _ = writeln!(t, "note: {c}");
    }
    for p in &r.points {
        let local = p.local_dim.map_or("?".to_string(), |d| d.to_string());
        let multi = match p.multi_component {
            Some(true) => "  (several components)",
            _ => "",
        };
        let _ = writeln!(
            t,
            "{:<14} tangent {}  local {}  {:<8} radical {}{}",
            p.word,
            p.tangent_dim,
            local,
            verdict_str(p.verdict),
            p.radical_certified,
            multi
        );
    }
    let sing = r.singular_words();
    let _ = writeln!(t, "singular fixed points: {}", sing.len());
    if !sing.is_empty() {
        let _ = writeln!(t, "  {}", sing.join(" "));
    }
    Ok(t)
}

fn cmd_verify(a: &VerifyArgs) -> CmdResult<String> {
    reject_dot(&a.common)?;
    let values = parse_rationals(&a.s)?;
    n_from(a.n, &values)?;
    let r = verify_against_combinatorics(&values)?;
    if a.common.format == Format::Json {
        return Ok(json(&r));
    }
    let mut t = String::new();
    let _ = writeln!(t, "S = ({})  fixed points checked: {}", format_rationals(&values), r.checked);
    let _ = writeln!(t, "agreement: {}", r.agree);
    let _ = writeln!(t, "all patch ideals radical-certified: {}", r.all_radical_certified);
    for d in &r.disagreements {
        let _ = writeln!(
            t,
            "  {}: jacobian singular = {}, combinatorial singular = {}",
            d.word, d.jacobian_singular, d.combinatorial_singular
        );
    }
    Ok(t)
}

fn cmd_table(a: &TableArgs) -> CmdResult<String> {
    reject_dot(&a.common)?;
    let mut specs = match &a.spec {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
            parse_spec(&text)?
        }
        None => builtin_specs(),
    };
    if let Some(n) = a.n {
        specs.retain(|(_, s)| s.len() == n);
    }
    let rows = compute_table(&specs)?;
    Ok(match a.common.format {
        Format::Json => json(&rows),
        _ => render_text(&rows),
    })
}
