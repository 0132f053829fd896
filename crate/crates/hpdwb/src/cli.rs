//! Command-line front end: argument parsing, JSON/TSV rendering, the
//! content-addressed result cache, and the acceptance report runner.

use std::io::Read as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::characters::{decompose_virtual, irrep_character, Group, Label};
use crate::error::{Error, Result};
use crate::hpd::{
    build_window, cy_numerology_report, hom_dim_graded, kernel_decomposition_check,
    lefschetz_bands, witten_index, CaseTag, DualityParams, WindowRequest,
};
use crate::laurent::LaurentPoly;
use crate::lrcalc::{gl_to_sp_restrict, gl_to_sp_stable, ln_product, lr_coefficient};
use crate::partition::{enumerate_rect, Partition};
use crate::report::Report;
use crate::vdb::{
    characters_in_h_mu, local_cohomology_multiplicity, nonvanishing_parity_check, parity_count_c,
    vanishing_check, Budget, NonvanishingTarget,
};
use crate::weyl::GSpWeight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseArg {
    Odd,
    Even,
}

impl From<CaseArg> for CaseTag {
    fn from(c: CaseArg) -> CaseTag {
        match c {
            CaseArg::Odd => CaseTag::Odd,
            CaseArg::Even => CaseTag::Even,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum TargetArg {
    #[value(name = "canonical")]
    Canonical,
    #[value(name = "two_s")]
    TwoS,
}

impl From<TargetArg> for NonvanishingTarget {
    fn from(t: TargetArg) -> NonvanishingTarget {
        match t {
            TargetArg::Canonical => NonvanishingTarget::Canonical,
            TargetArg::TwoS => NonvanishingTarget::TwoS,
        }
    }
}

fn parse_partition(s: &str) -> std::result::Result<Partition, String> {
    let parts: Vec<u32> = serde_json::from_str(s)
        .map_err(|e| format!("expected a JSON integer array, e.g. [3,1]: {e}"))?;
    Partition::new(parts).map_err(|e| e.to_string())
}

fn parse_weight(s: &str) -> std::result::Result<GSpWeight, String> {
    serde_json::from_str(s)
        .map_err(|e| format!("expected a weight like {{\"t\":[1,0],\"d\":2}}: {e}"))
}

fn parse_ivec(s: &str) -> std::result::Result<Vec<i32>, String> {
    serde_json::from_str(s).map_err(|e| format!("expected a JSON integer array: {e}"))
}

#[derive(Parser, Debug)]
#[command(
    name = "hpdwb",
    version,
    about = "Window and weight combinatorics for symplectic duality pairs",
    disable_help_subcommand = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format (JSON is the contract; TSV is a flat projection)
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Option<Format>,

    /// Directory for the content-addressed result cache
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    /// Bypass the cache entirely
    #[arg(long, global = true)]
    pub no_cache: bool,

    /// Node budget for the enumeration-heavy subcommands
    #[arg(long, global = true)]
    pub budget: Option<u64>,
}

#[derive(Subcommand, Debug, Serialize)]
pub enum Command {
    /// Dual partition: complement in the s x q rectangle, then transpose
    Dual {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        q: u32,
        #[arg(long, value_parser = parse_partition)]
        partition: Partition,
    },
    /// All partitions fitting in an a x b rectangle, ascending
    Enumerate {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: u32,
    },
    /// Verify the kernel character decomposition at (s,q)
    Kernel {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        q: usize,
    },
    /// Invariant count C(q+s,q), cross-checked against the character route
    Witten {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        q: usize,
    },
    /// Irreducible character for a group like "GL(4)" or "Sp(4)"
    Schur {
        #[arg(long)]
        group: String,
        #[arg(long, value_parser = parse_partition)]
        partition: Partition,
    },
    /// Decompose a character (JSON on stdin or --input) into irreducibles
    Decompose {
        #[arg(long)]
        group: String,
        /// Path to the character JSON; reads stdin when omitted
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Littlewood-Richardson coefficient N^nu_{lambda,mu}
    Lr {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition)]
        nu: Partition,
    },
    /// Restrict the GL(2q) irrep S^alpha to Sp(2q)
    Restrict {
        #[arg(long, value_parser = parse_partition)]
        alpha: Partition,
        #[arg(long)]
        q: usize,
        /// Use the stable combinatorial rule (requires height <= q)
        #[arg(long)]
        stable: bool,
    },
    /// Tensor product decomposition over Sp(2q)
    Lnprod {
        #[arg(long, value_parser = parse_partition)]
        chi: Partition,
        #[arg(long, value_parser = parse_partition)]
        psi: Partition,
        #[arg(long)]
        q: usize,
    },
    /// Grade-restriction window contents
    Window {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, value_enum, default_value = "odd")]
        case: CaseArg,
        /// Odd case: lower edge of the [n, n+2l') window
        #[arg(long)]
        n: Option<i32>,
        #[arg(long)]
        l: Option<u64>,
        #[arg(long)]
        l_perp: Option<u64>,
    },
    /// Width-2 band structure of the window
    Lefschetz {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, value_enum, default_value = "odd")]
        case: CaseArg,
    },
    /// Graded Hom dimension between two window weights
    Homdim {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, value_enum, default_value = "odd")]
        case: CaseArg,
        #[arg(long, value_parser = parse_weight)]
        w1: GSpWeight,
        #[arg(long, value_parser = parse_weight)]
        w2: GSpWeight,
    },
    /// Dimension numerology report for the critical odd-case pair
    Cy {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        q: usize,
    },
    /// Local cohomology multiplicity of one character
    VdbMult {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        v: usize,
        #[arg(long, value_parser = parse_ivec)]
        t: std::vec::Vec<i32>,
        #[arg(long)]
        d: i32,
    },
    /// All appearing characters in a box
    VdbChars {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        v: usize,
        #[arg(long)]
        delta_lo: i32,
        #[arg(long)]
        delta_hi: i32,
        #[arg(long)]
        t_bound: i32,
    },
    /// Exclusion test for one character
    VdbVanish {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, value_enum, default_value = "even")]
        case: CaseArg,
        #[arg(long, value_parser = parse_ivec)]
        t: std::vec::Vec<i32>,
        #[arg(long)]
        d: i32,
    },
    /// Zero-sum parabolic pair count and its parity
    VdbParity {
        #[arg(long)]
        q: usize,
    },
    /// Mod-2 non-vanishing check for a distinguished character
    VdbNonvanish {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, value_enum)]
        target: TargetArg,
    },
    /// Run the acceptance suite (all criteria, or one via --criterion)
    Report {
        #[arg(long)]
        criterion: Option<usize>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Dual { .. } => "dual",
            Command::Enumerate { .. } => "enumerate",
            Command::Kernel { .. } => "kernel",
            Command::Witten { .. } => "witten",
            Command::Schur { .. } => "schur",
            Command::Decompose { .. } => "decompose",
            Command::Lr { .. } => "lr",
            Command::Restrict { .. } => "restrict",
            Command::Lnprod { .. } => "lnprod",
            Command::Window { .. } => "window",
            Command::Lefschetz { .. } => "lefschetz",
            Command::Homdim { .. } => "homdim",
            Command::Cy { .. } => "cy",
            Command::VdbMult { .. } => "vdb-mult",
            Command::VdbChars { .. } => "vdb-chars",
            Command::VdbVanish { .. } => "vdb-vanish",
            Command::VdbParity { .. } => "vdb-parity",
            Command::VdbNonvanish { .. } => "vdb-nonvanish",
            Command::Report { .. } => "report",
        }
    }

    /// Reading stdin makes the result depend on more than the flags.
    fn cacheable(&self) -> bool {
        !matches!(self, Command::Decompose { .. })
    }
}

fn count_value(n: u128) -> Value {
    match u64::try_from(n) {
        Ok(small) => json!(small),
        Err(_) => json!(n.to_string()),
    }
}

fn group_from_str(s: &str) -> Result<Group> {
    s.parse::<Group>()
}

fn execute(cli: &Cli) -> Result<Value> {
    let budget = match cli.budget {
        Some(limit) => Budget::new(limit),
        None => Budget::default(),
    };
    match &cli.command {
        Command::Dual { s, q, partition } => {
            let dual = partition.hpd_dual(*s, *q)?;
            Ok(serde_json::to_value(dual)?)
        }
        Command::Enumerate { a, b } => Ok(serde_json::to_value(enumerate_rect(*a, *b))?),
        Command::Kernel { s, q } => Ok(serde_json::to_value(kernel_decomposition_check(*s, *q)?)?),
        Command::Witten { s, q } => Ok(json!(witten_index(*s, *q)?)),
        Command::Schur { group, partition } => {
            let g = group_from_str(group)?;
            let f = irrep_character(g, &Label::One(partition.clone()))?;
            Ok(serde_json::to_value(f)?)
        }
        Command::Decompose { group, input } => {
            let g = group_from_str(group)?;
            let text = match input {
                Some(path) => std::fs::read_to_string(path)?,
                None => {
                    let mut buf = String::new();
                    std::io::stdin().read_to_string(&mut buf)?;
                    buf
                }
            };
            let f: LaurentPoly = serde_json::from_str(&text)?;
            Ok(serde_json::to_value(decompose_virtual(&f, g)?)?)
        }
        Command::Lr { lambda, mu, nu } => Ok(json!(lr_coefficient(lambda, mu, nu))),
        Command::Restrict { alpha, q, stable } => {
            let d = if *stable {
                gl_to_sp_stable(alpha, *q)?
            } else {
                gl_to_sp_restrict(alpha, *q)?
            };
            Ok(serde_json::to_value(d)?)
        }
        Command::Lnprod { chi, psi, q } => Ok(serde_json::to_value(ln_product(chi, psi, *q)?)?),
        Command::Window {
            s,
            q,
            case,
            n,
            l,
            l_perp,
        } => {
            let mut params = DualityParams::new(*s, *q, (*case).into());
            if let (Some(l), Some(lp)) = (l, l_perp) {
                params = params.with_section(*l, *lp)?;
            }
            let request = match (CaseTag::from(*case), n) {
                (CaseTag::Even, _) => WindowRequest::EvenProj,
                (CaseTag::Odd, Some(n)) => WindowRequest::Difficult(*n),
                (CaseTag::Odd, None) => WindowRequest::Easy,
            };
            Ok(serde_json::to_value(build_window(&params, request)?)?)
        }
        Command::Lefschetz { s, q, case } => {
            let params = DualityParams::new(*s, *q, (*case).into());
            Ok(serde_json::to_value(lefschetz_bands(&params)?)?)
        }
        Command::Homdim {
            s,
            q,
            case,
            w1,
            w2,
        } => {
            let params = DualityParams::new(*s, *q, (*case).into());
            Ok(json!(hom_dim_graded(w1, w2, &params)?))
        }
        Command::Cy { s, q } => {
            let params = DualityParams::new(*s, *q, CaseTag::Odd);
            Ok(serde_json::to_value(cy_numerology_report(&params)?)?)
        }
        Command::VdbMult { i, v, t, d } => {
            let chi = GSpWeight::new(t.clone(), *d)?;
            if *i > chi.t_part.len() {
                return Err(Error::InvalidParams(format!(
                    "i = {i} exceeds the rank {}",
                    chi.t_part.len()
                )));
            }
            Ok(count_value(local_cohomology_multiplicity(
                *i, &chi, *v, &budget,
            )?))
        }
        Command::VdbChars {
            i,
            q,
            v,
            delta_lo,
            delta_hi,
            t_bound,
        } => {
            let chars = characters_in_h_mu(*i, *v, *q, (*delta_lo, *delta_hi), *t_bound, &budget)?;
            let items: Vec<Value> = chars
                .into_iter()
                .map(|(w, m)| json!({ "char": w, "mult": count_value(m) }))
                .collect();
            Ok(Value::Array(items))
        }
        Command::VdbVanish { s, q, case, t, d } => {
            let chi = GSpWeight::new(t.clone(), *d)?;
            let params = DualityParams::new(*s, *q, (*case).into());
            Ok(serde_json::to_value(vanishing_check(&chi, &params, &budget)?)?)
        }
        Command::VdbParity { q } => {
            let (count, odd) = parity_count_c(*q, &budget)?;
            Ok(json!({ "count": count, "odd": odd }))
        }
        Command::VdbNonvanish { s, q, target } => {
            let params = DualityParams::new(*s, *q, CaseTag::Even);
            Ok(serde_json::to_value(nonvanishing_parity_check(
                &params,
                (*target).into(),
                &budget,
            )?)?)
        }
        Command::Report { criterion } => {
            let report = match criterion {
                Some(n) => crate::acceptance::run_criterion(*n)?,
                None => crate::acceptance::run_all(),
            };
            Ok(serde_json::to_value(report)?)
        }
    }
}

/// Flat TSV projection of the JSON contract.
fn render_tsv(value: &Value) -> String {
    if let Ok(report) = serde_json::from_value::<Report>(value.clone()) {
        if value.get("checks").is_some() {
            return report.to_tsv();
        }
    }
    match value {
        Value::Array(items) => {
            let mut out = String::new();
            for item in items {
                match item {
                    Value::Object(map) => {
                        let line: Vec<String> =
                            map.values().map(|v| compact_cell(v)).collect();
                        out.push_str(&line.join("\t"));
                    }
                    other => out.push_str(&compact_cell(other)),
                }
                out.push('\n');
            }
            out
        }
        Value::Object(map) => {
            let mut out = String::new();
            for (k, v) in map {
                out.push_str(&format!("{k}\t{}\n", compact_cell(v)));
            }
            out
        }
        scalar => format!("{}\n", compact_cell(scalar)),
    }
}

fn compact_cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => format!("{value}\n"),
        Format::Tsv => render_tsv(value),
    }
}

fn cache_dir(cli: &Cli) -> Option<PathBuf> {
    if cli.no_cache {
        return None;
    }
    cli.cache_dir
        .clone()
        .or_else(|| std::env::var_os("HPDWB_CACHE").map(PathBuf::from))
}

fn cache_key(cli: &Cli, format: Format) -> Result<(String, String)> {
    let flags = serde_json::to_value(&cli.command)?;
    let canonical = json!({
        "subcommand": cli.command.name(),
        "flags": flags,
        "format": format,
        "version": env!("CARGO_PKG_VERSION"),
    })
    .to_string();
    let digest = Sha256::digest(canonical.as_bytes());
    let mut hex = String::with_capacity(64);
    for byte in digest {
        hex.push_str(&format!("{byte:02x}"));
    }
    Ok((hex, canonical))
}

#[derive(Serialize, serde::Deserialize)]
struct CacheEntry {
    key: String,
    output: String,
    code: i32,
}

fn cache_lookup(dir: &PathBuf, hex: &str, canonical: &str) -> Option<(String, i32)> {
    let path = dir.join(format!("{hex}.json"));
    let text = std::fs::read_to_string(path).ok()?;
    let entry: CacheEntry = serde_json::from_str(&text).ok()?;
    // revalidate: the stored parameter string must match exactly
    (entry.key == canonical).then_some((entry.output, entry.code))
}

fn cache_store(dir: &PathBuf, hex: &str, canonical: &str, output: &str, code: i32) {
    if std::fs::create_dir_all(dir).is_err() {
        return;
    }
    let entry = CacheEntry {
        key: canonical.to_string(),
        output: output.to_string(),
        code,
    };
    if let Ok(text) = serde_json::to_string(&entry) {
        let _ = std::fs::write(dir.join(format!("{hex}.json")), text);
    }
}

/// A check table with any failing row exits 1 even though the table itself
/// is still printed.
fn verification_code(value: &Value) -> i32 {
    match value.get("checks").and_then(Value::as_array) {
        Some(checks)
            if checks
                .iter()
                .any(|c| c.get("pass").and_then(Value::as_bool) == Some(false)) =>
        {
            1
        }
        _ => 0,
    }
}

/// Run one parsed invocation, returning the rendered output and exit code.
pub fn run(cli: &Cli) -> Result<(String, i32)> {
    let format = cli.format.unwrap_or(Format::Json);
    let dir = cache_dir(cli);
    let keyed = if cli.command.cacheable() {
        Some(cache_key(cli, format)?)
    } else {
        None
    };
    if let (Some(dir), Some((hex, canonical))) = (&dir, &keyed) {
        if let Some(hit) = cache_lookup(dir, hex, canonical) {
            return Ok(hit);
        }
    }
    let value = execute(cli)?;
    let code = verification_code(&value);
    let output = render(&value, format);
    if let (Some(dir), Some((hex, canonical))) = (&dir, &keyed) {
        cache_store(dir, hex, canonical, &output, code);
    }
    Ok((output, code))
}

/// Full process entry point: parse, run, print, and map errors to the
/// documented exit codes with a JSON error object on stdout.
pub fn main_entry<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(
                e.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) {
                print!("{e}");
                return 0;
            }
            println!(
                "{}",
                json!({ "error": "USAGE", "detail": e.to_string() })
            );
            return 2;
        }
    };
    match run(&cli) {
        Ok((output, code)) => {
            print!("{output}");
            code
        }
        Err(e) => {
            println!(
                "{}",
                json!({ "error": e.code(), "detail": e.to_string() })
            );
            e.exit_code()
        }
    }
}
