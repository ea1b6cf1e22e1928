//! Command-line surface. Subcommands map one-to-one onto the library:
//! `field` builds arithmetic contexts, `construct` emits rep-spec files for
//! the module families, `invariants`/`sigma`/`delta` compute on a spec,
//! `groebner origin-check` certifies a raw polynomial list, `bounds` runs
//! the inequality report across several specs, and `verify paper` runs the
//! acceptance suite.
//!
//! Exit codes: 0 success, 1 computation error, 2 verification failure.
//! Reports are JSON with no timestamps, so identical inputs give
//! byte-identical output.

use crate::gf::Field;
use crate::group::{Group, Subgroup};
use crate::inv::invariants_up_to;
use crate::poly::{parse_polynomial, Polynomial};
use crate::rep::{
    induce, normalizer_twist_module, p_times_a_module, subgroup_to_group, zqzd_summand,
    Representation,
};
use crate::repspec::{
    parse_permutation_list, parse_repspec, spec_from_representation, FieldBlock, GroupBlock,
    RepBlock, RepSpec,
};
use crate::sigdel::{bounds_report, delta, delta_vreg_fast, sigma, BoundsEntry};
use crate::{Error, Limits, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::sync::Arc;

#[derive(Parser, Debug)]
#[command(
    name = "minvar",
    version,
    about = "Exact workbench for modular invariant theory of finite groups"
)]
struct Cli {
    /// Cap on the group order a closure may reach.
    #[arg(long, global = true)]
    cap_group: Option<usize>,
    /// Cap on module dimensions.
    #[arg(long, global = true)]
    cap_dim: Option<usize>,
    /// Cap on monomials per graded piece.
    #[arg(long, global = true)]
    cap_monomials: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a field and print its description.
    Field {
        #[arg(long)]
        p: u32,
        /// Root-of-unity orders the field must contain, comma separated.
        #[arg(long, value_delimiter = ',')]
        root_orders: Vec<u32>,
    },
    /// Emit a rep-spec file for a module family.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Print graded invariant bases, one polynomial per line.
    Invariants {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        degree: u32,
    },
    /// Certify the sigma value of the module in a rep-spec.
    Sigma {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Certify the delta value of the module in a rep-spec.
    Delta {
        #[arg(long)]
        spec: PathBuf,
        /// Use the closed-form regular-module value and witness instead of
        /// the degree iteration (the spec's group and characteristic are
        /// used; the representation block is ignored).
        #[arg(long)]
        fast: bool,
    },
    /// Groebner tools over a raw polynomial list.
    Groebner {
        #[command(subcommand)]
        cmd: GroebnerCmd,
    },
    /// Run a verification suite.
    Verify {
        /// Only `paper` is available: the full acceptance suite.
        what: String,
    },
    /// Inequality report across the certificates of one or more specs
    /// sharing a group and characteristic.
    Bounds {
        #[arg(long = "spec", required = true)]
        specs: Vec<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum Family {
    /// Regular module of a permutation group.
    Regular {
        /// Generators in cycle notation, e.g. "(1 2); (1 2 3)".
        #[arg(long)]
        perms: String,
        #[arg(long = "char")]
        characteristic: u32,
        #[command(flatten)]
        out: EmitArgs,
    },
    /// Diagonal summand `i` of the regular module of `Z_q x| Z_d`.
    #[command(name = "zq-rtimes-zd")]
    ZqRtimesZd {
        q: u32,
        d: u32,
        i: u32,
        #[arg(long = "char")]
        characteristic: u32,
        #[command(flatten)]
        out: EmitArgs,
    },
    /// Scaled product module for `P x A`.
    #[command(name = "p-times-a")]
    PTimesA {
        /// Generators of the p-group `P` in cycle notation.
        #[arg(long)]
        perms: String,
        /// Cyclic factor orders of `A`, comma separated.
        #[arg(long, value_delimiter = ',')]
        a_orders: Vec<u32>,
        #[arg(long = "char")]
        characteristic: u32,
        #[command(flatten)]
        out: EmitArgs,
    },
    /// Twisted module for `P x| <t>` with `t` an automorphism of `P`.
    #[command(name = "normalizer-twist")]
    NormalizerTwist {
        /// Generators of the p-group `P` in cycle notation.
        #[arg(long)]
        perms: String,
        /// The automorphism as element images by index, e.g. "0,2,1".
        #[arg(long)]
        auto: String,
        /// Order of the twist.
        #[arg(long)]
        r: u32,
        #[arg(long = "char")]
        characteristic: u32,
        #[command(flatten)]
        out: EmitArgs,
    },
    /// Induced module from a subgroup of a permutation group.
    Induced {
        /// Generators of the parent group in cycle notation.
        #[arg(long)]
        perms: String,
        /// Element indices generating the subgroup, comma separated.
        #[arg(long, value_delimiter = ',')]
        subgroup_gens: Vec<u32>,
        /// Module of the subgroup to induce: `trivial` or `regular`.
        #[arg(long, default_value = "trivial")]
        h_module: String,
        #[arg(long = "char")]
        characteristic: u32,
        #[command(flatten)]
        out: EmitArgs,
    },
}

#[derive(Args, Debug)]
struct EmitArgs {
    /// Label recorded in the spec.
    #[arg(long)]
    label: Option<String>,
    /// Output file (stdout when absent).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum GroebnerCmd {
    /// Reduced basis and per-variable radical verdicts for the origin.
    #[command(name = "origin-check")]
    OriginCheck {
        #[arg(long)]
        p: u32,
        #[arg(long, value_delimiter = ',')]
        root_orders: Vec<u32>,
        /// File with one polynomial per line (stdin when absent).
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

/// Entry point for the binary; returns the process exit code.
pub fn main_entry() -> i32 {
    run(std::env::args())
}

/// Runs the CLI against explicit arguments (used directly by tests).
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let mut limits = Limits::default();
    if let Some(c) = cli.cap_group {
        limits.group_order = c;
    }
    if let Some(c) = cli.cap_dim {
        limits.module_dim = c;
    }
    if let Some(c) = cli.cap_monomials {
        limits.monomials = c;
    }
    match execute(cli.command, &limits) {
        Ok(Outcome::Text(text)) => {
            print!("{text}");
            0
        }
        Ok(Outcome::VerificationFailed(text)) => {
            print!("{text}");
            2
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BoundViolation(_) => 2,
                _ => 1,
            }
        }
    }
}

enum Outcome {
    Text(String),
    VerificationFailed(String),
}

fn execute(cmd: Command, limits: &Limits) -> Result<Outcome> {
    match cmd {
        Command::Field { p, root_orders } => {
            let field = Field::with_root_orders(p, &root_orders)?;
            let doc = json!({
                "p": field.characteristic(),
                "k": field.degree(),
                "modulus": field.modulus(),
            });
            Ok(Outcome::Text(format!("{}\n", pretty(&doc))))
        }
        Command::Construct { family } => construct(family, limits),
        Command::Invariants { spec, degree } => {
            let (_, _, rep) = load_spec(&spec, limits)?;
            let bases = invariants_up_to(&rep, degree, limits.monomials)?;
            let mut out = String::new();
            for b in &bases {
                for p in b.basis() {
                    out.push_str(&format!("{}: {}\n", b.degree(), p.render()));
                }
            }
            Ok(Outcome::Text(out))
        }
        Command::Sigma { spec } => {
            let (_, _, rep) = load_spec(&spec, limits)?;
            let cert = sigma(&rep, limits)?;
            Ok(Outcome::Text(format!("{}\n", pretty(&cert.to_json()))))
        }
        Command::Delta { spec, fast } => {
            let (field, group, rep) = load_spec(&spec, limits)?;
            let doc = if fast {
                delta_vreg_fast(&group, field.characteristic(), limits)?.to_json()
            } else {
                delta(&rep, limits)?.to_json()
            };
            Ok(Outcome::Text(format!("{}\n", pretty(&doc))))
        }
        Command::Groebner { cmd } => groebner(cmd, limits),
        Command::Verify { what } => {
            if what != "paper" {
                return Err(Error::Precondition(format!(
                    "unknown verification suite `{what}`"
                )));
            }
            let results = crate::acceptance::run_all(limits);
            let mut out = String::new();
            for r in &results {
                out.push_str(&format!(
                    "criterion {:>2} {} - {}: {}\n",
                    r.index,
                    if r.passed { "PASS" } else { "FAIL" },
                    r.name,
                    r.detail
                ));
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            out.push_str(&format!(
                "{} of {} criteria passed\n",
                results.len() - failed,
                results.len()
            ));
            if failed > 0 {
                Ok(Outcome::VerificationFailed(out))
            } else {
                Ok(Outcome::Text(out))
            }
        }
        Command::Bounds { specs } => bounds(&specs, limits),
    }
}

fn load_spec(path: &Path, limits: &Limits) -> Result<(Field, Arc<Group>, Representation)> {
    let text = std::fs::read_to_string(path)?;
    parse_repspec(&text)?.realize(limits)
}

fn emit_spec(spec: &RepSpec, out: &EmitArgs) -> Result<Outcome> {
    let text = spec.emit();
    match &out.output {
        Some(path) => {
            std::fs::write(path, &text)?;
            Ok(Outcome::Text(format!("wrote {}\n", path.display())))
        }
        None => Ok(Outcome::Text(text)),
    }
}

fn construct(family: Family, limits: &Limits) -> Result<Outcome> {
    match family {
        Family::Regular {
            perms,
            characteristic,
            out,
        } => {
            let (points, gens) = parse_permutation_list(&perms)?;
            let label = out
                .label
                .clone()
                .unwrap_or_else(|| format!("regular-char{characteristic}"));
            let spec = RepSpec {
                label,
                family: Some("regular".into()),
                field: FieldBlock::RootOrders {
                    p: characteristic,
                    root_orders: vec![],
                },
                group: GroupBlock::Permutations { points, gens },
                representation: RepBlock::Regular,
            };
            // validate before emitting
            spec.realize(limits)?;
            emit_spec(&spec, &out)
        }
        Family::ZqRtimesZd {
            q,
            d,
            i,
            characteristic,
            out,
        } => {
            let rep = zqzd_summand(q, d, characteristic, i, limits)?;
            let label = out
                .label
                .clone()
                .unwrap_or_else(|| format!("zq-rtimes-zd-{q}-{d}-{i}-char{characteristic}"));
            let spec = spec_from_representation(
                &label,
                Some("zq-rtimes-zd"),
                FieldBlock::RootOrders {
                    p: characteristic,
                    root_orders: vec![q],
                },
                &rep,
            )?;
            emit_spec(&spec, &out)
        }
        Family::PTimesA {
            perms,
            a_orders,
            characteristic,
            out,
        } => {
            let (_, gens) = parse_permutation_list(&perms)?;
            let p_group = Group::from_permutations(&gens, limits.group_order)?;
            let rep = p_times_a_module(&p_group, &a_orders, characteristic, limits)?;
            let e = a_orders.iter().fold(1u32, |acc, &n| acc / gcd(acc, n) * n);
            let label = out
                .label
                .clone()
                .unwrap_or_else(|| format!("p-times-a-char{characteristic}"));
            let spec = spec_from_representation(
                &label,
                Some("p-times-a"),
                FieldBlock::RootOrders {
                    p: characteristic,
                    root_orders: if e > 1 { vec![e] } else { vec![] },
                },
                &rep,
            )?;
            emit_spec(&spec, &out)
        }
        Family::NormalizerTwist {
            perms,
            auto,
            r,
            characteristic,
            out,
        } => {
            let (_, gens) = parse_permutation_list(&perms)?;
            let p_group = Group::from_permutations(&gens, limits.group_order)?;
            let auto_t: Vec<u32> = auto
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse()
                        .map_err(|_| Error::Precondition(format!("bad index `{t}`")))
                })
                .collect::<Result<_>>()?;
            let rep = normalizer_twist_module(&p_group, &auto_t, r, characteristic, limits)?;
            let label = out
                .label
                .clone()
                .unwrap_or_else(|| format!("normalizer-twist-r{r}-char{characteristic}"));
            let spec = spec_from_representation(
                &label,
                Some("normalizer-twist"),
                FieldBlock::RootOrders {
                    p: characteristic,
                    root_orders: if r > 1 { vec![r] } else { vec![] },
                },
                &rep,
            )?;
            emit_spec(&spec, &out)
        }
        Family::Induced {
            perms,
            subgroup_gens,
            h_module,
            characteristic,
            out,
        } => {
            let (_, gens) = parse_permutation_list(&perms)?;
            let group = Arc::new(Group::from_permutations(&gens, limits.group_order)?);
            let h = Subgroup::generated(&group, &subgroup_gens);
            let (h_group, _) = subgroup_to_group(&group, &h)?;
            let h_group = Arc::new(h_group);
            let field = Field::prime(characteristic)?;
            let h_rep = match h_module.as_str() {
                "trivial" => Representation::trivial(Arc::clone(&h_group), field),
                "regular" => Representation::regular(Arc::clone(&h_group), field, limits)?,
                other => {
                    return Err(Error::Precondition(format!(
                        "unknown subgroup module `{other}` (use trivial or regular)"
                    )))
                }
            };
            let rep = induce(&h_rep, &group, &h, limits)?;
            let label = out
                .label
                .clone()
                .unwrap_or_else(|| format!("induced-{h_module}-char{characteristic}"));
            let spec = spec_from_representation(
                &label,
                Some("induced"),
                FieldBlock::RootOrders {
                    p: characteristic,
                    root_orders: vec![],
                },
                &rep,
            )?;
            emit_spec(&spec, &out)
        }
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn groebner(cmd: GroebnerCmd, limits: &Limits) -> Result<Outcome> {
    match cmd {
        GroebnerCmd::OriginCheck {
            p,
            root_orders,
            input,
        } => {
            let text = match input {
                Some(path) => std::fs::read_to_string(path)?,
                None => {
                    use std::io::Read;
                    let mut buf = String::new();
                    std::io::stdin().read_to_string(&mut buf)?;
                    buf
                }
            };
            let field = Field::with_root_orders(p, &root_orders)?;
            let lines: Vec<&str> = text
                .lines()
                .map(|l| l.trim())
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .collect();
            let nvars = lines.iter().map(|l| max_variable_index(l)).max().unwrap_or(0);
            if nvars == 0 {
                return Err(Error::Precondition("no variables found in input".into()));
            }
            let gens: Vec<Polynomial> = lines
                .iter()
                .map(|l| parse_polynomial(&field, nvars, l))
                .collect::<Result<_>>()?;
            let check = crate::gb::cuts_out_origin(&gens, &field, limits.basis_elements)?;
            let doc = json!({
                "nvars": nvars,
                "order": crate::poly::MONOMIAL_ORDER,
                "holds": check.holds,
                "basis": check.basis.elements().iter().map(|e| e.render()).collect::<Vec<_>>(),
                "variables": check.variables.iter().map(|v| {
                    let (method, exponent) = match &v.method {
                        crate::gb::RadicalMethod::Staircase { exponent } => ("staircase", Some(*exponent)),
                        crate::gb::RadicalMethod::PowerMembership { exponent } => ("power-membership", Some(*exponent)),
                        crate::gb::RadicalMethod::Rabinowitsch => ("rabinowitsch", None),
                    };
                    json!({
                        "variable": format!("x{}", v.variable + 1),
                        "in_radical": v.in_radical,
                        "method": method,
                        "exponent": exponent,
                    })
                }).collect::<Vec<_>>(),
            });
            Ok(Outcome::Text(format!("{}\n", pretty(&doc))))
        }
    }
}

/// Largest `x<i>` index mentioned in a polynomial line.
fn max_variable_index(s: &str) -> usize {
    let bytes = s.as_bytes();
    let mut best = 0usize;
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'x' {
            let mut j = i + 1;
            let mut val = 0usize;
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                val = val * 10 + (bytes[j] - b'0') as usize;
                j += 1;
            }
            if j > i + 1 {
                best = best.max(val);
            }
            i = j;
        } else {
            i += 1;
        }
    }
    best
}

fn bounds(specs: &[PathBuf], limits: &Limits) -> Result<Outcome> {
    let mut entries = Vec::new();
    let mut shared: Option<(Arc<Group>, u32)> = None;
    for path in specs {
        let text = std::fs::read_to_string(path)?;
        let spec = parse_repspec(&text)?;
        let (field, group, rep) = spec.realize(limits)?;
        match &shared {
            None => shared = Some((Arc::clone(&group), field.characteristic())),
            Some((g, p)) => {
                // different constructions of the same group are fine; the
                // report only depends on the isomorphism class
                if **g != *group && !crate::group::are_isomorphic(g, &group) {
                    return Err(Error::GroupMismatch);
                }
                if *p != field.characteristic() {
                    return Err(Error::FieldMismatch(
                        "bounds entries must share the characteristic".into(),
                    ));
                }
            }
        }
        entries.push(BoundsEntry {
            label: spec.label.clone(),
            sigma: Some(sigma(&rep, limits)?),
            delta: Some(delta(&rep, limits)?),
            twist_lower_bound: spec.family.as_deref() == Some("normalizer-twist"),
        });
    }
    let (group, p) = shared.ok_or(Error::EmptyGenerators)?;
    let report = bounds_report(&group, p, &entries)?;
    Ok(Outcome::Text(format!("{}\n", pretty(&report.to_json()))))
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json rendering")
}
