//! `swd`: command-line front end emitting JSON documents.
//!
//! Exit status: 0 success, 1 verification mismatch, 2 input error,
//! 3 internal consistency error.

mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Map, Value};

use schur_whittaker::asfunctor::{compare_to_standard, functor_value_verma, whittaker_functor_value, FunctorValue};
use schur_whittaker::exactlin::rat::{fmt_rat, Rat};
use schur_whittaker::exactlin::Mat;
use schur_whittaker::hecke::{composition_factors, induced_standard, irr_quotient_certified, FactorSignature, HModule};
use schur_whittaker::multiseg::{delta, ms_classes, nilpotent_rep, zeta_weight, Multisegment};
use schur_whittaker::multtable::{irr_image_table, verify_mult_equal, BlockParams};
use schur_whittaker::orbitmaps::{graded_structure, phi, psi};
use schur_whittaker::verma::{block_projection, casimir_data, TensorBlock};
use schur_whittaker::weights::{stabilizer, Weight};
use schur_whittaker::weyl::{double_cosets, kl_polynomial, longest_in_coset, shortest_in_coset, ParabolicSet, Perm};
use schur_whittaker::Error;

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "swd", version, about = "Exact Whittaker-module and graded Hecke algebra computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the JSON document to this file instead of standard output.
    #[arg(long, global = true)]
    json_out: Option<PathBuf>,
    /// Include generator matrices in the output.
    #[arg(long, global = true)]
    emit_matrices: bool,
    /// Treat results that could not be certified as mismatches.
    #[arg(long, global = true)]
    certify: bool,
}

#[derive(Args, Clone)]
struct BlockArgs {
    #[arg(long = "n")]
    n: usize,
    /// Dominant integral weight, e.g. `0,0,0`.
    #[arg(long)]
    lambda: String,
    /// Tensor power; defaults to `n`.
    #[arg(short = 'l')]
    l: Option<usize>,
    /// Character support: simple indices or `auto` for the stabilizer of `λ`.
    #[arg(long, default_value = "auto")]
    eta: String,
}

#[derive(Subcommand, Clone)]
enum VerifyCommand {
    Dims(BlockArgs),
    As(BlockArgs),
    MultEqual(BlockArgs),
    Main(BlockArgs),
    All(BlockArgs),
}

#[derive(Subcommand)]
enum Command {
    /// Kazhdan-Lusztig polynomial `P_{x,w}` in `S_m`.
    Kl {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        x: String,
        #[arg(long)]
        w: String,
    },
    /// Double cosets `W_η \ S_n / W_λ`.
    Cosets {
        #[arg(long = "n")]
        n: usize,
        #[arg(long, default_value = "")]
        eta: String,
        /// Right parabolic taken as the stabilizer of this weight.
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Multisegments: canonical form of `--tau`, `δ(λ, μ, ℓ)`, or all classes of a block.
    Multiseg {
        #[arg(long)]
        tau: Option<String>,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        mu: Option<String>,
        #[arg(short = 'l')]
        l: Option<usize>,
    },
    /// `Φ` of a multisegment (`--tau`) or `Ψ` of a double coset (`--coset`).
    Orbitmap {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        tau: Option<String>,
        #[arg(long)]
        coset: Option<String>,
    },
    /// The induced standard module of a multisegment.
    HeckeStd {
        #[arg(long)]
        tau: String,
        #[arg(short = 'l')]
        l: Option<usize>,
    },
    /// Composition factors and simple head of a standard module.
    HeckeDecompose {
        #[arg(long)]
        tau: String,
        #[arg(short = 'l')]
        l: Option<usize>,
    },
    /// Weight block of `M(μ) ⊗ V^{⊗ℓ}` and its central projection.
    VermaBlock {
        #[arg(long = "n")]
        n: usize,
        #[arg(short = 'l')]
        l: usize,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
    /// Functor value on a Verma module (`--mu`) or a standard Whittaker module (`--coset`).
    Functor {
        #[arg(long = "n")]
        n: usize,
        #[arg(short = 'l')]
        l: usize,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: Option<String>,
        #[arg(long)]
        coset: Option<String>,
        #[arg(long, default_value = "auto")]
        eta: String,
    },
    VerifyDims(BlockArgs),
    VerifyAs(BlockArgs),
    VerifyMultEqual(BlockArgs),
    VerifyMain(BlockArgs),
    VerifyAll(BlockArgs),
    /// Verification suites, e.g. `verify mult-equal`.
    Verify {
        #[command(subcommand)]
        which: VerifyCommand,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Kl { .. } => "kl",
            Command::Cosets { .. } => "cosets",
            Command::Multiseg { .. } => "multiseg",
            Command::Orbitmap { .. } => "orbitmap",
            Command::HeckeStd { .. } => "hecke-std",
            Command::HeckeDecompose { .. } => "hecke-decompose",
            Command::VermaBlock { .. } => "verma-block",
            Command::Functor { .. } => "functor",
            Command::VerifyDims(_) | Command::Verify { which: VerifyCommand::Dims(_) } => "verify-dims",
            Command::VerifyAs(_) | Command::Verify { which: VerifyCommand::As(_) } => "verify-as",
            Command::VerifyMultEqual(_) | Command::Verify { which: VerifyCommand::MultEqual(_) } => {
                "verify-mult-equal"
            }
            Command::VerifyMain(_) | Command::Verify { which: VerifyCommand::Main(_) } => "verify-main",
            Command::VerifyAll(_) | Command::Verify { which: VerifyCommand::All(_) } => "verify-all",
        }
    }
}

/// Result of one command: JSON fields and whether every check passed.
struct Outcome {
    fields: Map<String, Value>,
    passed: bool,
}

impl Outcome {
    fn ok(fields: Value) -> Self {
        Self::checked(fields, true)
    }

    fn checked(fields: Value, passed: bool) -> Self {
        let fields = match fields {
            Value::Object(m) => m,
            other => Map::from_iter([("result".to_string(), other)]),
        };
        Outcome { fields, passed }
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable report")
}

fn rats(v: &[Rat]) -> Value {
    Value::from(v.iter().map(fmt_rat).collect::<Vec<_>>())
}

fn mat_json(m: &Mat) -> Value {
    Value::from((0..m.rows()).map(|i| rats(m.row(i))).collect::<Vec<_>>())
}

fn module_json(m: &HModule, emit: bool) -> schur_whittaker::Result<Value> {
    let mut doc = json!({
        "dim": m.dim,
        "strands": m.strands,
        "spectrum": to_value(&m.weight_spectrum()?),
        "central_scalar": m.central_scalar().map(|c| fmt_rat(&c)),
    });
    if let Some(labels) = &m.basis_labels {
        doc["basis"] = Value::from(labels.iter().map(|p| p.to_string()).collect::<Vec<_>>());
    }
    if emit {
        doc["s_mats"] = Value::from(m.s_mats.iter().map(mat_json).collect::<Vec<_>>());
        doc["eps_mats"] = Value::from(m.eps_mats.iter().map(mat_json).collect::<Vec<_>>());
    }
    Ok(doc)
}

fn parse_weight(s: &str, n: Option<usize>) -> schur_whittaker::Result<Weight> {
    let w = Weight::parse(s)?;
    if let Some(n) = n {
        if w.n() != n {
            return Err(Error::Parse(format!("weight {s:?} has {} entries, expected {n}", w.n())));
        }
    }
    Ok(w)
}

fn parse_perm(s: &str, n: usize) -> schur_whittaker::Result<Perm> {
    let p = Perm::parse(s)?;
    if p.degree() != n {
        return Err(Error::Parse(format!("permutation {s:?} has degree {}, expected {n}", p.degree())));
    }
    Ok(p)
}

fn parse_eta(s: &str, lam: &Weight) -> schur_whittaker::Result<ParabolicSet> {
    if s.trim() == "auto" {
        return stabilizer(lam);
    }
    let eta = ParabolicSet::parse(s)?;
    if !eta.fits(lam.n()) {
        return Err(Error::Parse(format!("simple indices {eta} out of range for n = {}", lam.n())));
    }
    Ok(eta)
}

fn functor_json(fv: &FunctorValue, emit: bool) -> schur_whittaker::Result<Value> {
    let mut doc = json!({
        "mu": to_value(&fv.mu),
        "lambda": to_value(&fv.lam),
        "l": fv.l,
        "eta": fv.eta.as_ref().map(|e| e.to_string()),
        "block_dim": fv.block_dim,
        "module": module_json(&fv.module, emit)?,
    });
    if !fv.is_zero() {
        let iso = compare_to_standard(fv)?;
        doc["standard"] = Value::from(delta(&fv.lam, &fv.mu, fv.l)?.to_string());
        doc["isomorphic_to_standard"] = Value::from(iso.isomorphic);
        doc["certified"] = Value::from(iso.certified);
        if emit {
            doc["witness"] = iso.witness.as_ref().map_or(Value::Null, mat_json);
        }
    }
    Ok(doc)
}

fn run_verify(which: &VerifyCommand, certify: bool) -> schur_whittaker::Result<Outcome> {
    let (VerifyCommand::Dims(a)
    | VerifyCommand::As(a)
    | VerifyCommand::MultEqual(a)
    | VerifyCommand::Main(a)
    | VerifyCommand::All(a)) = which;
    let lam = parse_weight(&a.lambda, Some(a.n))?;
    let l = a.l.unwrap_or(a.n);
    let bp = || BlockParams::new(lam.clone(), parse_eta(&a.eta, &lam)?);
    Ok(match which {
        VerifyCommand::Dims(_) => {
            let r = verify::verify_dims(&lam, l)?;
            Outcome::checked(to_value(&r), r.passed)
        }
        VerifyCommand::As(_) => {
            let r = verify::verify_as(&lam, l)?;
            let cert = r.rows.iter().all(|x| x.certified);
            Outcome::checked(to_value(&r), r.passed && (cert || !certify))
        }
        VerifyCommand::MultEqual(_) => {
            let r = verify_mult_equal(&bp()?)?;
            Outcome::checked(to_value(&r), r.passed && (r.certified || !certify))
        }
        VerifyCommand::Main(_) => {
            let r = irr_image_table(&bp()?)?;
            Outcome::checked(to_value(&r), r.passed && (r.certified || !certify))
        }
        VerifyCommand::All(_) => {
            bp()?;
            let r = verify::verify_all(&lam)?;
            let cert = r.mult_equal.certified && r.main.certified;
            Outcome::checked(to_value(&r), r.passed && (cert || !certify))
        }
    })
}

fn run(cli: &Cli) -> schur_whittaker::Result<Outcome> {
    let emit = cli.emit_matrices;
    match &cli.command {
        Command::Kl { m, x, w } => {
            let (x, w) = (parse_perm(x, *m)?, parse_perm(w, *m)?);
            let p = kl_polynomial(&x, &w);
            Ok(Outcome::ok(json!({
                "x": x.to_string(),
                "w": w.to_string(),
                "comparable": x.bruhat_leq(&w),
                "poly": p.coeffs(),
            })))
        }
        Command::Cosets { n, eta, lambda } => {
            let left = ParabolicSet::parse(eta)?;
            let right = match lambda {
                Some(s) => stabilizer(&parse_weight(s, Some(*n))?)?,
                None => ParabolicSet::empty(),
            };
            if !left.fits(*n) {
                return Err(Error::Parse(format!("simple indices {left} out of range for n = {n}")));
            }
            let cosets: Vec<Value> = double_cosets(&left, &right, *n)
                .iter()
                .map(|c| {
                    json!({
                        "longest": c.longest_rep.to_string(),
                        "shortest": shortest_in_coset(&c.longest_rep, &left, &right).to_string(),
                        "size": c.size,
                    })
                })
                .collect();
            Ok(Outcome::ok(json!({"left": left.to_string(), "right": right.to_string(), "cosets": cosets})))
        }
        Command::Multiseg { tau, lambda, mu, l } => {
            let class = match (tau, lambda, mu) {
                (Some(t), None, None) => Multisegment::parse(t)?.canonical(),
                (None, Some(lam), Some(mu)) => {
                    let lam = parse_weight(lam, None)?;
                    let mu = parse_weight(mu, Some(lam.n()))?;
                    delta(&lam, &mu, l.unwrap_or(lam.n()))?
                }
                (None, Some(lam), None) => {
                    let lam = parse_weight(lam, None)?;
                    let classes = ms_classes(&lam.plus_rho())?;
                    let list: Vec<String> = classes.iter().map(|c| c.to_string()).collect();
                    return Ok(Outcome::ok(json!({"classes": list})));
                }
                _ => return Err(Error::Parse("give --tau, or --lambda with optional --mu".into())),
            };
            let mut doc = json!({
                "class": class.to_string(),
                "lengths": class.lengths(),
                "zeta": rats(&zeta_weight(&class)),
            });
            if emit {
                doc["nilpotent"] = mat_json(&nilpotent_rep(&class));
            }
            Ok(Outcome::ok(doc))
        }
        Command::Orbitmap { lambda, tau, coset } => {
            let lam = parse_weight(lambda, None)?;
            let gs = graded_structure(&lam)?;
            match (tau, coset) {
                (Some(t), None) => {
                    let class = Multisegment::parse(t)?.canonical();
                    let q = phi(&class, &gs)?;
                    Ok(Outcome::ok(json!({"class": class.to_string(), "coset": q.longest_rep.to_string()})))
                }
                (None, Some(c)) => {
                    let w = parse_perm(c, lam.n())?;
                    let stab = stabilizer(&lam)?;
                    let rep = longest_in_coset(&w, &stab, &stab);
                    let q = double_cosets(&stab, &stab, lam.n())
                        .into_iter()
                        .find(|q| q.longest_rep == rep)
                        .ok_or_else(|| Error::NoMatchingCoset(rep.to_string()))?;
                    let image = psi(&q, &gs)?.map(|c| c.to_string());
                    Ok(Outcome::ok(json!({"coset": rep.to_string(), "class": image})))
                }
                _ => Err(Error::Parse("give exactly one of --tau or --coset".into())),
            }
        }
        Command::HeckeStd { tau, l } => {
            let class = Multisegment::parse(tau)?.canonical();
            let m = induced_standard(&class, l.unwrap_or(class.total_length()))?;
            m.check_relations()?;
            Ok(Outcome::ok(json!({"class": class.to_string(), "module": module_json(&m, emit)?})))
        }
        Command::HeckeDecompose { tau, l } => {
            let class = Multisegment::parse(tau)?.canonical();
            let m = induced_standard(&class, l.unwrap_or(class.total_length()))?;
            let (factors, cert_f) = composition_factors(&m)?;
            let (head, cert_h) = irr_quotient_certified(&m)?;
            let certified = cert_f && cert_h;
            Ok(Outcome::checked(
                json!({
                    "class": class.to_string(),
                    "dim": m.dim,
                    "factors": to_value(&factors),
                    "head": to_value(&FactorSignature::of(&head)?),
                    "certified": certified,
                }),
                certified || !cli.certify,
            ))
        }
        Command::VermaBlock { n, l, lambda, mu } => {
            let lam = parse_weight(lambda, Some(*n))?;
            let mu = parse_weight(mu, Some(*n))?;
            let tb = TensorBlock::new(&mu, &lam, *l);
            let proj = block_projection(&tb)?;
            let mut doc = json!({
                "dim": tb.dim(),
                "projection_dim": proj.dim(),
                "central": to_value(&casimir_data(&mu, *n)),
            });
            if emit {
                doc["casimir"] = mat_json(&tb.casimir()?);
            }
            Ok(Outcome::ok(doc))
        }
        Command::Functor { n, l, lambda, mu, coset, eta } => {
            let lam = parse_weight(lambda, Some(*n))?;
            let fv = match (mu, coset) {
                (Some(mu), None) => functor_value_verma(&parse_weight(mu, Some(*n))?, &lam, *l)?,
                (None, Some(c)) => {
                    let eta = parse_eta(eta, &lam)?;
                    let right = stabilizer(&lam)?;
                    let rep = longest_in_coset(&parse_perm(c, *n)?, &eta, &right);
                    let q = double_cosets(&eta, &right, *n)
                        .into_iter()
                        .find(|q| q.longest_rep == rep)
                        .ok_or_else(|| Error::NoMatchingCoset(rep.to_string()))?;
                    whittaker_functor_value(&q, &lam, *l)?
                }
                _ => return Err(Error::Parse("give exactly one of --mu or --coset".into())),
            };
            let doc = functor_json(&fv, emit)?;
            let passed = doc.get("isomorphic_to_standard").and_then(Value::as_bool).unwrap_or(true);
            Ok(Outcome::checked(doc, passed))
        }
        Command::VerifyDims(a) => run_verify(&VerifyCommand::Dims(a.clone()), cli.certify),
        Command::VerifyAs(a) => run_verify(&VerifyCommand::As(a.clone()), cli.certify),
        Command::VerifyMultEqual(a) => run_verify(&VerifyCommand::MultEqual(a.clone()), cli.certify),
        Command::VerifyMain(a) => run_verify(&VerifyCommand::Main(a.clone()), cli.certify),
        Command::VerifyAll(a) => run_verify(&VerifyCommand::All(a.clone()), cli.certify),
        Command::Verify { which } => run_verify(which, cli.certify),
    }
}

fn emit(cli: &Cli, doc: &Value) -> std::io::Result<()> {
    let text = serde_json::to_string_pretty(doc).expect("JSON value") + "\n";
    match &cli.json_out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut doc = Map::new();
    doc.insert("schema_version".into(), Value::from(SCHEMA_VERSION));
    doc.insert("command".into(), Value::from(cli.command.name()));
    let code = match run(&cli) {
        Ok(outcome) => {
            doc.insert("status".into(), Value::from(if outcome.passed { "ok" } else { "mismatch" }));
            doc.extend(outcome.fields);
            if outcome.passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            doc.insert("status".into(), Value::from("error"));
            doc.insert("error".into(), Value::from(e.to_string()));
            if e.is_internal() {
                3
            } else {
                2
            }
        }
    };
    if let Err(e) = emit(&cli, &Value::Object(doc)) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
