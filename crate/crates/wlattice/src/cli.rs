//! Batch front-end: every pipeline stage behind a deterministic, scriptable
//! subcommand. Exit codes: 0 success, 1 validation error, 2 verification
//! failure.

use crate::bracket::{bracket_family, gamma, poisson_bracket};
use crate::decompose::{solve_decomposition, DecompConfig, LaurentBasis, VerifyMode};
use crate::generators::{annihilators_for, tau, tau_family, Orientation};
use crate::lattice::LatticeSpec;
use crate::reproduce;
use crate::ring::json::ratfunc_to_json;
use crate::ring::RatFunc;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::io::Write;

const LONG_ABOUT: &str = "Exact symbolic workbench for lattice W-algebras over Cartan data.\n\n\
Environment overrides: WLATTICE_SEED sets the sampling seed and\n\
WLATTICE_VERIFY (auto|symbolic|sampled) the verification mode whenever the\n\
corresponding flag is not given. Output is deterministic for a fixed\n\
command line and seed.";

#[derive(Parser)]
#[command(name = "wlattice", version, about = "Lattice W-algebra workbench", long_about = LONG_ABOUT)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrientationArg {
    Direct,
    Inverse,
}

impl From<OrientationArg> for Orientation {
    fn from(o: OrientationArg) -> Orientation {
        match o {
            OrientationArg::Direct => Orientation::Direct,
            OrientationArg::Inverse => Orientation::Inverse,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyArg {
    Auto,
    Symbolic,
    Sampled,
}

#[derive(Args)]
struct RankArg {
    /// n of sl_n (at least 2).
    #[arg(long)]
    rank: u32,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the Cartan matrix and bracket coefficient data for a rank.
    Lattice(RankArg),
    /// Print a generator tau_k.
    Tau {
        #[command(flatten)]
        rank: RankArg,
        /// Generator index (1-based; larger indices are chain shifts).
        #[arg(long, default_value_t = 1)]
        index: u64,
        /// Generator convention; the printed bracket tables use "inverse".
        #[arg(long, value_enum, default_value_t = OrientationArg::Direct)]
        orientation: OrientationArg,
    },
    /// Check that every screening and weight operator annihilates tau_k.
    Annihilate {
        #[command(flatten)]
        rank: RankArg,
        /// Check a single generator index; default sweeps one full period.
        #[arg(long)]
        index: Option<u64>,
    },
    /// Compute the bracket F_j = {tau_i, tau_j}.
    Bracket {
        #[command(flatten)]
        rank: RankArg,
        #[arg(long, default_value_t = 1)]
        i: u64,
        /// Second index; required unless --all is given.
        #[arg(long)]
        j: Option<u64>,
        /// Emit the whole locality window as a JSON array.
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = OrientationArg::Inverse)]
        orientation: OrientationArg,
    },
    /// Compute Gamma_i = {tau_1, tau_i} / (tau_1 tau_i).
    Gamma {
        #[command(flatten)]
        rank: RankArg,
        #[arg(long, default_value_t = 2)]
        i: u64,
        #[arg(long, value_enum, default_value_t = OrientationArg::Inverse)]
        orientation: OrientationArg,
    },
    /// Decompose {tau_i, tau_j} as an exact Laurent polynomial in tau_i..tau_j.
    Decompose {
        #[command(flatten)]
        rank: RankArg,
        #[arg(long, default_value_t = 1)]
        i: u64,
        #[arg(long)]
        j: u64,
        #[arg(long, default_value_t = -1)]
        min_exp: i64,
        #[arg(long, default_value_t = 3)]
        max_exp: i64,
        /// Sampling seed (default 20240; WLATTICE_SEED overrides).
        #[arg(long)]
        seed: Option<u64>,
        /// Verification mode (default auto; WLATTICE_VERIFY overrides).
        #[arg(long, value_enum)]
        verify: Option<VerifyArg>,
        /// Sampling bound B; coordinates are drawn from [1, B].
        #[arg(long, default_value_t = 11)]
        bound: u64,
        #[arg(long, value_enum, default_value_t = OrientationArg::Inverse)]
        orientation: OrientationArg,
    },
    /// Run the substitution-symmetry checks of the bracket data.
    Symmetry {
        /// Restrict to one data set.
        #[arg(long, value_enum)]
        data: Option<SymData>,
    },
    /// Run the full verification table and print one line per identity.
    Reproduce,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SymData {
    Sl3,
    Sl4,
}

/// Entry point used by the binary and the tests. Returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // help/version are successful exits
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = write!(out, "{e}");
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            1
        }
    }
}

fn env_seed() -> Option<u64> {
    std::env::var("WLATTICE_SEED").ok()?.parse().ok()
}

fn env_verify() -> Option<VerifyArg> {
    match std::env::var("WLATTICE_VERIFY").ok()?.as_str() {
        "auto" => Some(VerifyArg::Auto),
        "symbolic" => Some(VerifyArg::Symbolic),
        "sampled" => Some(VerifyArg::Sampled),
        _ => None,
    }
}

fn emit_ratfunc(out: &mut dyn Write, format: Format, r: &RatFunc) -> std::io::Result<()> {
    match format {
        Format::Text => writeln!(out, "{r}"),
        Format::Json => writeln!(out, "{}", serde_json::to_string(&ratfunc_to_json(r)).unwrap()),
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> crate::error::Result<i32> {
    let format = cli.format;
    match cli.cmd {
        Cmd::Lattice(RankArg { rank }) => {
            let spec = LatticeSpec::new(rank)?;
            match format {
                Format::Text => {
                    let _ = write!(out, "{spec}");
                    let m = spec.families();
                    let letters: Vec<String> = (0..m)
                        .map(|f| crate::ring::VarId::new(f, 1).name())
                        .collect();
                    let _ = writeln!(out, "chain: {} ... (period {})", letters.join(" - "), m);
                }
                Format::Json => {
                    let _ = writeln!(out, "{}", serde_json::to_string(&spec.to_json()).unwrap());
                }
            }
            Ok(0)
        }
        Cmd::Tau {
            rank,
            index,
            orientation,
        } => {
            let spec = LatticeSpec::new(rank.rank)?;
            let t = tau(&spec, index, orientation.into())?;
            let _ = emit_ratfunc(out, format, t.value());
            Ok(0)
        }
        Cmd::Annihilate { rank, index } => {
            let spec = LatticeSpec::new(rank.rank)?;
            let indices: Vec<u64> = match index {
                Some(k) => vec![k],
                None => (1..=3 * (rank.rank as u64 - 1)).collect(),
            };
            let mut all_zero = true;
            let mut report = Vec::new();
            for k in indices {
                let t = tau(&spec, k, Orientation::Direct)?;
                let ops = annihilators_for(&spec, k)?;
                for (idx, op) in ops.iter().enumerate() {
                    let family = (idx / 2) as u32;
                    let kind = if idx % 2 == 0 { "D" } else { "H" };
                    let name = crate::ring::VarId::new(family, 1).name();
                    let fam_letter = &name[..name.len() - 1];
                    let zero = op.apply(t.value()).is_zero();
                    all_zero &= zero;
                    report.push(json!({
                        "index": k,
                        "operator": format!("{kind}[{fam_letter}]"),
                        "annihilates": zero,
                    }));
                    if format == Format::Text {
                        let _ = writeln!(
                            out,
                            "{kind}[{fam_letter}] tau_{k} -> {}",
                            if zero { "0" } else { "nonzero" }
                        );
                    }
                }
            }
            if format == Format::Json {
                let _ = writeln!(out, "{}", serde_json::to_string(&Value::Array(report)).unwrap());
            } else {
                let _ = writeln!(out, "{}", if all_zero { "all zero" } else { "FAILED" });
            }
            Ok(if all_zero { 0 } else { 2 })
        }
        Cmd::Bracket {
            rank,
            i,
            j,
            all,
            orientation,
        } => {
            let spec = LatticeSpec::new(rank.rank)?;
            let span = 3 * (rank.rank as u64 - 1);
            if all {
                let taus = tau_family(&spec, orientation.into(), i + span)?;
                let fam = bracket_family(&spec, &taus, i)?;
                let arr: Vec<Value> = fam
                    .iter()
                    .map(|b| {
                        json!({
                            "i": b.i,
                            "j": b.j,
                            "value": ratfunc_to_json(&b.value),
                        })
                    })
                    .collect();
                match format {
                    Format::Json => {
                        let _ = writeln!(out, "{}", serde_json::to_string(&Value::Array(arr)).unwrap());
                    }
                    Format::Text => {
                        for b in &fam {
                            let _ = writeln!(out, "F[{}, {}] = {}", b.i, b.j, b.value);
                        }
                    }
                }
                return Ok(0);
            }
            let j = j.ok_or_else(|| {
                crate::error::Error::InvalidInput("--j is required unless --all is given".into())
            })?;
            let ti = tau(&spec, i, orientation.into())?;
            let tj = tau(&spec, j, orientation.into())?;
            let f = poisson_bracket(&spec, ti.value(), tj.value());
            let _ = emit_ratfunc(out, format, &f);
            Ok(0)
        }
        Cmd::Gamma {
            rank,
            i,
            orientation,
        } => {
            let spec = LatticeSpec::new(rank.rank)?;
            let count = i.max(1);
            let taus = tau_family(&spec, orientation.into(), count)?;
            let g = gamma(&spec, &taus, i)?;
            let _ = emit_ratfunc(out, format, &g);
            Ok(0)
        }
        Cmd::Decompose {
            rank,
            i,
            j,
            min_exp,
            max_exp,
            seed,
            verify,
            bound,
            orientation,
        } => {
            if j <= i {
                return Err(crate::error::Error::InvalidInput(
                    "--j must be larger than --i".into(),
                ));
            }
            let spec = LatticeSpec::new(rank.rank)?;
            let orientation: Orientation = orientation.into();
            let taus = tau_family(&spec, orientation, j)?;
            let f = poisson_bracket(
                &spec,
                taus[(i - 1) as usize].value(),
                taus[(j - 1) as usize].value(),
            );
            let gens: Vec<RatFunc> = taus[(i - 1) as usize..=(j - 1) as usize]
                .iter()
                .map(|t| t.value().clone())
                .collect();
            let basis = LaurentBasis::enumerate(gens.len(), min_exp, max_exp)?;
            let verify = verify.or_else(env_verify).unwrap_or(VerifyArg::Auto);
            let config = DecompConfig {
                seed: seed.or_else(env_seed).unwrap_or(20240),
                sample_bound: bound,
                verify: match verify {
                    VerifyArg::Auto => VerifyMode::Auto,
                    VerifyArg::Symbolic => VerifyMode::Symbolic,
                    VerifyArg::Sampled => VerifyMode::Sampled(50),
                },
                orientation: Some(orientation),
                ..DecompConfig::default()
            };
            match solve_decomposition(&f, &gens, &basis, &config) {
                Ok(r) => {
                    match format {
                        Format::Json => {
                            let _ = writeln!(out, "{}", serde_json::to_string(&r.to_json()).unwrap());
                        }
                        Format::Text => {
                            let _ = writeln!(out, "{r}");
                        }
                    }
                    Ok(0)
                }
                Err(crate::error::Error::VerificationFailed { witness }) => {
                    let _ = writeln!(out, "verification failed: {witness}");
                    Ok(2)
                }
                Err(e) => Err(e),
            }
        }
        Cmd::Symmetry { data } => {
            let mut checks = reproduce::criterion_6_symmetries();
            if let Some(d) = data {
                let prefix: &[&str] = match d {
                    SymData::Sl3 => &["6a", "6b"],
                    SymData::Sl4 => &["6c", "6d"],
                };
                checks.retain(|c| prefix.iter().any(|p| c.id.starts_with(p)));
            }
            let mut ok = true;
            for c in &checks {
                ok &= c.passed;
                let _ = writeln!(out, "{}", c.line());
            }
            Ok(if ok { 0 } else { 2 })
        }
        Cmd::Reproduce => {
            let checks = reproduce::run_full_suite();
            let mut ok = true;
            for c in &checks {
                ok &= c.passed;
                let _ = writeln!(out, "{}", c.line());
            }
            let _ = writeln!(
                out,
                "{}: {} checks",
                if ok { "ALL PASS" } else { "FAILURES PRESENT" },
                checks.len()
            );
            Ok(if ok { 0 } else { 2 })
        }
    }
}
