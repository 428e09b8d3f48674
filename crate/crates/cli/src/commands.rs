//! Batch workbench commands: named checks over workspace entities, verified
//! constructions written to disk, and brute-force fixture generation.
//!
//! Exit codes are a stable contract: 0 pass, 1 semantic fail, 2 usage or
//! input error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use lbw_core::bialg::{self, MapPair};
use lbw_core::catalog;
use lbw_core::cybe;
use lbw_core::endo;
use lbw_core::error::Error;
use lbw_core::fixtures;
use lbw_core::json::{
    self as wsjson, AlgebraDto, BialgebraDto, ManinDto, MapDto, MapPairDto, OOperatorDto,
    PreLieDto, RMatrixDto, Workspace,
};
use lbw_core::lie::{self, BilinearForm};
use lbw_core::manin;
use lbw_core::oop_prelie as oop;
use lbw_core::report::{CheckItem, Report};
use lbw_core::Scalar;

#[derive(Parser)]
#[command(
    name = "lbw",
    version,
    about = "Exact-arithmetic workbench for Lie bialgebras, Manin triples, \
             r-matrices, O-operators and pre-Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named identity check against workspace entities.
    Check {
        /// Check name, e.g. `lie-bialgebra` (see README for the full list).
        name: String,
        /// Workspace JSON file holding the entities.
        #[arg(long)]
        ws: PathBuf,
        /// Entity identifiers, in the order the check expects.
        #[arg(long, num_args = 0.., value_name = "ID")]
        args: Vec<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a named construction and write the result entity to a file.
    Construct {
        /// Construction name, e.g. `manin` (see README for the full list).
        name: String,
        #[arg(long)]
        ws: PathBuf,
        #[arg(long, num_args = 0.., value_name = "ID")]
        args: Vec<String>,
        /// Output file, written in workspace format so it can be fed back
        /// into `check`; nothing is written when the construction fails.
        #[arg(long)]
        out: PathBuf,
        /// Identifier of the entity inside the output workspace.
        #[arg(long, default_value = "result", value_name = "ID")]
        r#as: String,
    },
    /// Exhaustively enumerate small fixtures and write them to a directory.
    Fixtures {
        /// One of: cybe-skew, prelie, endo-pair.
        kind: String,
        #[arg(long)]
        dim: usize,
        /// Comma-separated coefficient list, e.g. `-1,0,1` or `-1,0,1,1/4`.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        /// Output directory (created if missing).
        #[arg(long)]
        out: PathBuf,
        /// Base algebra by name (default picked by dimension:
        /// solvable2 at 2, sl2 at 3).
        #[arg(long)]
        algebra: Option<String>,
    },
}

enum Failure {
    /// A check or a construction postcondition did not hold.
    Semantic(String),
    /// Bad usage or malformed input.
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Input(e.to_string())
    }
}

type CmdResult<T> = Result<T, Failure>;

pub fn run() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Check {
            name,
            ws,
            args,
            format,
        } => run_check(&name, &ws, &args, format),
        Command::Construct {
            name,
            ws,
            args,
            out,
            r#as,
        } => run_construct(&name, &ws, &args, &out, &r#as),
        Command::Fixtures {
            kind,
            dim,
            coeffs,
            out,
            algebra,
        } => run_fixtures(&kind, dim, &coeffs, &out, algebra.as_deref()),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Semantic(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn expect_args<'a, const N: usize>(name: &str, args: &'a [String]) -> CmdResult<[&'a str; N]> {
    if args.len() != N {
        return Err(Failure::Input(format!(
            "`{name}` takes {N} argument(s), got {}",
            args.len()
        )));
    }
    let mut out = [""; N];
    for (slot, arg) in out.iter_mut().zip(args) {
        *slot = arg.as_str();
    }
    Ok(out)
}

fn gram_form(ws: &Workspace, name: &str) -> CmdResult<BilinearForm> {
    Ok(BilinearForm::new(ws.map(name)?.clone())?)
}

fn pair(ws: &Workspace, fwd: &str, bwd: &str) -> CmdResult<MapPair> {
    Ok(MapPair::new(ws.map(fwd)?.clone(), ws.map(bwd)?.clone())?)
}

fn manin_validity_report(mt: &manin::ManinTriple) -> Report {
    // re-stated load-time validation, as a reportable check
    let mut report = Report::new("manin-triple");
    let big = lie::check_lie_algebra(mt.big());
    report.push(CheckItem::flag(
        "big_lie_algebra",
        "antisymmetry and Jacobi on g ⋈ g*",
        big.pass(),
    ));
    report.push(CheckItem::flag(
        "blocks_closed",
        "[g,g] ⊆ g and [g*,g*] ⊆ g*",
        mt.big().block_subalgebra(0, mt.n()).is_ok()
            && mt.big().block_subalgebra(mt.n(), mt.n()).is_ok(),
    ));
    let form = lie::check_invariant_form(mt.big(), &manin::hyperbolic_form(mt.n()))
        .map(|r| r.pass())
        .unwrap_or(false);
    report.push(CheckItem::flag(
        "hyperbolic_form_invariant",
        "B_d([u,v],w) = B_d(u,[v,w])",
        form,
    ));
    report
}

fn dispatch_check(name: &str, ws: &Workspace, args: &[String]) -> CmdResult<Report> {
    let report = match name {
        "lie-algebra" => {
            let [a] = expect_args::<1>(name, args)?;
            lie::check_lie_algebra(ws.algebra(a)?)
        }
        "invariant-form" => {
            let [a, g] = expect_args::<2>(name, args)?;
            lie::check_invariant_form(ws.algebra(a)?, &gram_form(ws, g)?)?
        }
        "endo-lie" => {
            let [e] = expect_args::<1>(name, args)?;
            endo::check_endo_lie(ws.endo(e)?)
        }
        "dually-represents" => {
            let [e, b] = expect_args::<2>(name, args)?;
            let en = ws.endo(e)?;
            endo::check_dually_represents(en, &lie::adjoint_rep(en.algebra()), ws.map(b)?)?
        }
        "lie-coalgebra" => {
            let [b] = expect_args::<1>(name, args)?;
            bialg::check_lie_coalgebra(ws.bialgebra(b)?.delta())
        }
        "lie-bialgebra" => {
            let [b] = expect_args::<1>(name, args)?;
            bialg::check_lie_bialgebra(ws.bialgebra(b)?)?
        }
        "endo-lie-bialgebra" => {
            let [b, phi, psi] = expect_args::<3>(name, args)?;
            bialg::check_endo_lie_bialgebra(ws.bialgebra(b)?, ws.map(phi)?, ws.map(psi)?)?
        }
        "coherent-hom-bialg" => {
            let [bg, bh, fwd, bwd] = expect_args::<4>(name, args)?;
            bialg::check_coherent_hom(ws.bialgebra(bg)?, ws.bialgebra(bh)?, &pair(ws, fwd, bwd)?)?
        }
        "standard-hom" => {
            let [bg, bh, f] = expect_args::<3>(name, args)?;
            bialg::check_standard_hom(ws.bialgebra(bg)?, ws.bialgebra(bh)?, ws.map(f)?)?
        }
        "tbgs-weak-hom" => {
            let [bg, bh, fwd, bwd] = expect_args::<4>(name, args)?;
            bialg::check_tbgs_weak_hom(ws.bialgebra(bg)?, ws.bialgebra(bh)?, &pair(ws, fwd, bwd)?)?
        }
        "matched-pair" => {
            let mp = match args.len() {
                1 => (manin::standard_matched_pair(ws.bialgebra(&args[0])?)?, None),
                3 => (
                    manin::standard_matched_pair(ws.bialgebra(&args[0])?)?,
                    Some((ws.map(&args[1])?, ws.map(&args[2])?)),
                ),
                n => {
                    return Err(Failure::Input(format!(
                        "`matched-pair` takes 1 or 3 argument(s), got {n}"
                    )))
                }
            };
            manin::check_matched_pair(&mp.0, mp.1)
        }
        "manin-triple" => {
            let [m] = expect_args::<1>(name, args)?;
            manin_validity_report(ws.manin_triple(m)?)
        }
        "endo-manin" => {
            let [m, phi, psi] = expect_args::<3>(name, args)?;
            manin::check_endo_manin_triple(ws.manin_triple(m)?, ws.map(phi)?, ws.map(psi)?)?
        }
        "coherent-hom-manin" => {
            let [mg, mh, f] = expect_args::<3>(name, args)?;
            manin::check_coherent_hom_manin(ws.manin_triple(mg)?, ws.manin_triple(mh)?, ws.map(f)?)?
        }
        "strong-hom-manin" => {
            let [mg, mh, f] = expect_args::<3>(name, args)?;
            manin::check_strong_hom_manin(ws.manin_triple(mg)?, ws.manin_triple(mh)?, ws.map(f)?)?
        }
        "sym-invariance" => {
            let [r] = expect_args::<1>(name, args)?;
            cybe::check_sym_invariance(ws.rmatrix(r)?)
        }
        "cybe" => {
            let [r] = expect_args::<1>(name, args)?;
            cybe::check_cybe(ws.rmatrix(r)?)
        }
        "psi-cybe" => {
            let [e, psi, r] = expect_args::<3>(name, args)?;
            cybe::check_psi_cybe(ws.endo(e)?, ws.map(psi)?, ws.rmatrix(r)?)?
        }
        "coboundary-endo" => {
            let [e, psi, r] = expect_args::<3>(name, args)?;
            cybe::check_coboundary_endo(ws.endo(e)?, ws.map(psi)?, ws.rmatrix(r)?)?
        }
        "coherent-hom-r" => {
            let [rg, rh, fwd, bwd] = expect_args::<4>(name, args)?;
            cybe::check_coherent_hom_r(ws.rmatrix(rg)?, ws.rmatrix(rh)?, &pair(ws, fwd, bwd)?)?
        }
        "rsharp-bridge" => {
            let [e, psi, r] = expect_args::<3>(name, args)?;
            oop::check_rsharp_bridge(ws.endo(e)?, ws.map(psi)?, ws.rmatrix(r)?)?
        }
        "ooperator" => {
            let [o] = expect_args::<1>(name, args)?;
            oop::check_ooperator(ws.ooperator(o)?)
        }
        "hom-ooperators" => {
            let [og, oh, phi, alpha] = expect_args::<4>(name, args)?;
            oop::check_hom_ooperators(
                ws.ooperator(og)?,
                ws.ooperator(oh)?,
                ws.map(phi)?,
                ws.map(alpha)?,
            )?
        }
        "prelie" => {
            let [p] = expect_args::<1>(name, args)?;
            oop::check_prelie(ws.prelie_algebra(p)?)
        }
        "prelie-endo" => {
            let [p, phi] = expect_args::<2>(name, args)?;
            oop::check_prelie_endo_conditions(ws.prelie_algebra(p)?, ws.map(phi)?)?
        }
        other => {
            return Err(Failure::Input(format!(
                "unknown check `{other}` (see README for the list)"
            )))
        }
    };
    Ok(report)
}

fn run_check(name: &str, ws_path: &Path, args: &[String], format: Format) -> CmdResult<ExitCode> {
    let ws = wsjson::load_workspace(ws_path)?;
    let report = dispatch_check(name, &ws, args)?;
    match format {
        Format::Text => print!("{}", report.render_text()),
        Format::Json => println!("{}", serde_json::to_string_pretty(&report.render_json()).unwrap()),
    }
    Ok(if report.pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

/// A construction's output is re-verified against its defining check before
/// anything is written; a failed verification leaves no file behind. The
/// returned pair is (workspace section, entity value).
fn dispatch_construct(
    name: &str,
    ws: &Workspace,
    args: &[String],
    out_id: &str,
) -> CmdResult<(serde_json::Value, &'static str)> {
    let (kind, value) = match name {
        "bowtie" => {
            let [b] = expect_args::<1>(name, args)?;
            let mp = manin::standard_matched_pair(ws.bialgebra(b)?)?;
            let big = manin::bowtie(&mp);
            verify(name, lie::check_lie_algebra(&big))?;
            ("algebras", serde_json::to_value(AlgebraDto::of_algebra(&big)).unwrap())
        }
        "manin" => {
            let [b] = expect_args::<1>(name, args)?;
            let mt = manin::manin_from_bialgebra(ws.bialgebra(b)?)?;
            ("manin", serde_json::to_value(ManinDto::of_manin(&mt)).unwrap())
        }
        "bialgebra-from-manin" => {
            let [m] = expect_args::<1>(name, args)?;
            let b = manin::bialgebra_from_manin(ws.manin_triple(m)?)?;
            verify(name, bialg::check_lie_bialgebra(&b)?)?;
            ("bialgebras", serde_json::to_value(BialgebraDto::of_bialgebra(&b)).unwrap())
        }
        "dual-algebra" => {
            let [b] = expect_args::<1>(name, args)?;
            let dual = bialg::dualize(ws.bialgebra(b)?.delta())?;
            verify(name, lie::check_lie_algebra(&dual))?;
            ("algebras", serde_json::to_value(AlgebraDto::of_algebra(&dual)).unwrap())
        }
        "coboundary" => {
            let [r] = expect_args::<1>(name, args)?;
            let rm = ws.rmatrix(r)?;
            let b = bialg::LieBialgebra::new(
                rm.algebra().clone(),
                cybe::coboundary_cobracket(rm),
            )?;
            verify(name, bialg::check_lie_bialgebra(&b)?)?;
            ("bialgebras", serde_json::to_value(BialgebraDto::of_bialgebra(&b)).unwrap())
        }
        "double" => {
            let (b, endo_pair) = match args.len() {
                1 => (ws.bialgebra(&args[0])?, None),
                3 => (
                    ws.bialgebra(&args[0])?,
                    Some((ws.map(&args[1])?, ws.map(&args[2])?)),
                ),
                n => {
                    return Err(Failure::Input(format!(
                        "`double` takes 1 or 3 argument(s), got {n}"
                    )))
                }
            };
            let double = cybe::double_rmatrix(b, endo_pair)?;
            verify(name, double.report.clone())?;
            ("rmatrices", serde_json::to_value(RMatrixDto::of_rmatrix(&double.rmatrix)).unwrap())
        }
        "lift-rmatrix" => {
            let [o] = expect_args::<1>(name, args)?;
            let op = ws.ooperator(o)?;
            verify(name, oop::check_ooperator(op))?;
            let lifted = oop::lift_to_rmatrix(op);
            verify(name, cybe::check_cybe(&lifted))?;
            ("rmatrices", serde_json::to_value(RMatrixDto::of_rmatrix(&lifted)).unwrap())
        }
        "functor-f" => {
            let [p] = expect_args::<1>(name, args)?;
            let op = oop::functor_f_obj(ws.prelie_algebra(p)?)?;
            verify(name, oop::check_ooperator(&op))?;
            ("ooperators", serde_json::to_value(OOperatorDto::of_ooperator(&op)).unwrap())
        }
        "functor-g" => {
            let [o] = expect_args::<1>(name, args)?;
            let pre = oop::functor_g_obj(ws.ooperator(o)?)?;
            verify(name, oop::check_prelie(&pre))?;
            ("prelie", serde_json::to_value(PreLieDto::of_prelie(&pre)).unwrap())
        }
        "transport-to-manin" => {
            let [fwd, bwd] = expect_args::<2>(name, args)?;
            let p = pair(ws, fwd, bwd)?;
            let block = manin::transport_pair_to_block(&p);
            ("maps", serde_json::to_value(MapDto::of_map(&block)).unwrap())
        }
        "transport-to-bialg" => {
            let [f] = expect_args::<1>(name, args)?;
            let block = ws.map(f)?;
            if block.rows() % 2 != 0 || block.cols() % 2 != 0 {
                return Err(Failure::Input(
                    "transport expects a map between even-dimensional doubles".into(),
                ));
            }
            let p = manin::transport_block_to_pair(block, block.cols() / 2, block.rows() / 2)?;
            let dto = MapPairDto::of_pair(&p);
            // a pair lands as two named maps so it can be fed back in
            let value = json!({
                format!("{out_id}_fwd"): dto.fwd,
                format!("{out_id}_bwd"): dto.bwd,
            });
            return Ok((json!({ "maps": value }), "maps"));
        }
        other => {
            return Err(Failure::Input(format!(
                "unknown construction `{other}` (see README for the list)"
            )))
        }
    };
    Ok((json!({ kind: { out_id: value } }), kind))
}

fn verify(name: &str, report: Report) -> CmdResult<()> {
    if report.pass() {
        Ok(())
    } else {
        Err(Failure::Semantic(format!(
            "construction `{name}` failed verification:\n{}",
            report.render_text()
        )))
    }
}

fn run_construct(
    name: &str,
    ws_path: &Path,
    args: &[String],
    out: &Path,
    out_id: &str,
) -> CmdResult<ExitCode> {
    let ws = wsjson::load_workspace(ws_path)?;
    let (value, kind) = dispatch_construct(name, &ws, args, out_id)?;
    let text = serde_json::to_string_pretty(&value).unwrap();
    std::fs::write(out, text + "\n")
        .map_err(|e| Failure::Input(format!("cannot write {}: {e}", out.display())))?;
    println!("written {kind} `{out_id}` to {}", out.display());
    Ok(ExitCode::SUCCESS)
}

fn max_dim() -> usize {
    std::env::var("LBW_MAX_DIM")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(3)
}

fn parse_coeffs(text: &str) -> CmdResult<Vec<Scalar>> {
    text.split(',')
        .map(|s| s.trim().parse::<Scalar>().map_err(Failure::from))
        .collect()
}

fn run_fixtures(
    kind: &str,
    dim: usize,
    coeffs: &str,
    out_dir: &Path,
    algebra: Option<&str>,
) -> CmdResult<ExitCode> {
    let cap = max_dim();
    if dim > cap {
        return Err(Failure::Input(format!(
            "dimension {dim} exceeds the enumeration cap {cap} (set LBW_MAX_DIM to raise it)"
        )));
    }
    let coeffs = parse_coeffs(coeffs)?;
    std::fs::create_dir_all(out_dir)
        .map_err(|e| Failure::Input(format!("cannot create {}: {e}", out_dir.display())))?;

    let (file_name, value, count) = match kind {
        "cybe-skew" => {
            let (alg_name, alg) = match algebra {
                Some(name) => (
                    name.to_string(),
                    catalog::named_algebra(name).ok_or_else(|| {
                        Failure::Input(format!("unknown algebra `{name}`"))
                    })?,
                ),
                None => {
                    let (name, alg) = catalog::default_algebra_for_dim(dim).ok_or_else(|| {
                        Failure::Input(format!(
                            "no default algebra at dimension {dim}; pass --algebra"
                        ))
                    })?;
                    (name.to_string(), alg)
                }
            };
            if alg.dim() != dim {
                return Err(Failure::Input(format!(
                    "algebra `{alg_name}` has dimension {}, not {dim}",
                    alg.dim()
                )));
            }
            let found = fixtures::gen_cybe_fixtures(&alg, &coeffs)?;
            let count = found.len();
            let mut rmatrices = serde_json::Map::new();
            for (idx, rm) in found.iter().enumerate() {
                let mut entry = serde_json::to_value(RMatrixDto::of_rmatrix(rm)).unwrap();
                entry["skew"] = json!(rm.is_skew());
                rmatrices.insert(format!("r_{idx:04}"), entry);
            }
            (
                format!("cybe_skew_{alg_name}_dim{dim}.json"),
                json!({ "rmatrices": rmatrices }),
                count,
            )
        }
        "prelie" => {
            let found = fixtures::gen_prelie_fixtures(dim, &coeffs)?;
            let count = found.len();
            let mut prelie = serde_json::Map::new();
            for (idx, alg) in found.iter().enumerate() {
                prelie.insert(
                    format!("p_{idx:04}"),
                    serde_json::to_value(PreLieDto::of_prelie(alg)).unwrap(),
                );
            }
            (
                format!("prelie_dim{dim}.json"),
                json!({ "prelie": prelie }),
                count,
            )
        }
        "endo-pair" => {
            if dim != 2 {
                return Err(Failure::Input(
                    "endo-pair enumeration runs on the dimension-2 coboundary fixture; \
                     pass --dim 2"
                        .into(),
                ));
            }
            let base = catalog::coboundary_fixture();
            let found = fixtures::gen_endo_pairs(&base, &coeffs)?;
            let count = found.len();
            let mut maps = serde_json::Map::new();
            for (idx, (phi, psi)) in found.iter().enumerate() {
                maps.insert(
                    format!("pair_{idx:04}_fwd"),
                    serde_json::to_value(MapDto::of_map(phi)).unwrap(),
                );
                maps.insert(
                    format!("pair_{idx:04}_bwd"),
                    serde_json::to_value(MapDto::of_map(psi)).unwrap(),
                );
            }
            let mut bialgebras = serde_json::Map::new();
            bialgebras.insert(
                "base".to_string(),
                serde_json::to_value(BialgebraDto::of_bialgebra(&base)).unwrap(),
            );
            (
                format!("endo_pair_dim{dim}.json"),
                json!({ "bialgebras": bialgebras, "maps": maps }),
                count,
            )
        }
        other => {
            return Err(Failure::Input(format!(
                "unknown fixture kind `{other}` (expected cybe-skew, prelie or endo-pair)"
            )))
        }
    };

    let path = out_dir.join(file_name);
    let text = serde_json::to_string_pretty(&value).unwrap();
    std::fs::write(&path, text + "\n")
        .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?;
    println!("{count} fixture(s) written to {}", path.display());
    Ok(ExitCode::SUCCESS)
}
