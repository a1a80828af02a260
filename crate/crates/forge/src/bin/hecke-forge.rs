use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hecke_forge::commands::{self, ExportKind, ExportParams, ModuleSource};
use hecke_forge::format::{self, Document};
use hecke_forge::{ForgeError, Result};
use hecke_forge_core::functor::ModuleKind;
use hecke_forge_core::heckealg::{AhaCheckOptions, HeckeMode};
use hecke_forge_core::{Bindings, VerificationReport, Var};
use num_rational::BigRational;
use serde::Serialize;

/// Exact verification of modified affine Hecke algebras, U_q(sl(n+1)),
/// Drinfeldians and the duality functor.
#[derive(Parser)]
#[command(name = "hecke-forge", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Write JSON here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Defining relations, associativity and limits of the affine Hecke algebra.
    VerifyHecke {
        /// Rank; all of 2, 3, 4 when omitted.
        #[arg(long)]
        l: Option<usize>,
        /// modified, classical_z, degenerate_q1, symmetric_q1_eta0 or all.
        #[arg(long, default_value = "all")]
        mode: String,
        #[arg(long, default_value_t = 0x5eed, value_parser = parse_u64)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        triples: usize,
        #[command(flatten)]
        out: Output,
    },
    /// U_q(sl(n+1)) relations on V and V⊗V plus the Hopf axioms.
    VerifyUq {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Drinfeldian relations on the evaluation representation or a given file.
    VerifyDrinfeldian {
        #[arg(long, required_unless_present = "rep")]
        n: Option<usize>,
        /// DrinfeldianRep JSON or a build-functor bundle.
        #[arg(long)]
        rep: Option<PathBuf>,
        /// Also check the antipode and counit axioms on ξ.
        #[arg(long)]
        hopf: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Yangian relations of the q=1 limit.
    VerifyYangian {
        #[arg(long, required_unless_present = "rep")]
        n: Option<usize>,
        #[arg(long)]
        rep: Option<PathBuf>,
        #[command(flatten)]
        out: Output,
    },
    /// The square of q=1 and η=0 limits.
    VerifyLimits {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Builds M ⊗ V^{⊗l} over the finite Hecke algebra with its Drinfeldian action.
    BuildFunctor {
        /// trivial, sign, or a HeckeModule JSON file.
        #[arg(long)]
        module: String,
        /// Rank of a builtin module.
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        n: usize,
        /// Value of the builtin module parameter a (symbolic when omitted).
        #[arg(long, value_parser = parse_rational)]
        a: Option<BigRational>,
        #[command(flatten)]
        out: Output,
    },
    /// Substitutes rational values for q, η, u, a in a JSON document.
    Specialize {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        bind: BindArgs,
        #[command(flatten)]
        out: Output,
    },
    /// Writes a builtin object as JSON.
    Export {
        /// eval-rep, t-operator, sigma, module, aha-sigma or aha-u.
        kind: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long, value_parser = parse_rational)]
        u: Option<BigRational>,
        #[arg(long, value_parser = parse_rational)]
        a: Option<BigRational>,
        /// trivial or sign, for `module`.
        #[arg(long)]
        module: Option<String>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct BindArgs {
    #[arg(long, value_parser = parse_rational)]
    q: Option<BigRational>,
    #[arg(long, value_parser = parse_rational)]
    eta: Option<BigRational>,
    #[arg(long, value_parser = parse_rational)]
    u: Option<BigRational>,
    #[arg(long, value_parser = parse_rational)]
    a: Option<BigRational>,
}

impl BindArgs {
    fn bindings(&self) -> Bindings {
        let mut b = Bindings::new();
        for (v, x) in [(Var::Q, &self.q), (Var::Eta, &self.eta), (Var::U, &self.u), (Var::A, &self.a)] {
            if let Some(x) = x {
                b.set(v, x.clone());
            }
        }
        b
    }
}

fn parse_rational(s: &str) -> std::result::Result<BigRational, String> {
    format::parse_rational(s).map_err(|e| e.to_string())
}

fn parse_u64(s: &str) -> std::result::Result<u64, String> {
    let r = match s.strip_prefix("0x") {
        Some(h) => u64::from_str_radix(h, 16),
        None => s.parse(),
    };
    r.map_err(|e| e.to_string())
}

fn read_doc(path: &Path) -> Result<Document> {
    let text = std::fs::read_to_string(path).map_err(|source| ForgeError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(serde_json::from_str(&text)?)
}

fn load_rep(path: &Path) -> Result<hecke_forge_core::drinfeld::DrinfeldianRep> {
    match read_doc(path)? {
        Document::Drinfeldian(r) => Ok(format::drinfeldian_from_json(&r)?),
        Document::Bundle(b) => Ok(format::drinfeldian_from_json(&b.rep)?),
        _ => Err(ForgeError::Usage(format!("{} is not a representation", path.display()))),
    }
}

fn write_json<T: Serialize>(x: &T, out: &Output) -> Result<()> {
    let mut text = serde_json::to_string_pretty(x)?;
    text.push('\n');
    match &out.out {
        Some(p) => std::fs::write(p, text).map_err(|source| ForgeError::Io { path: p.clone(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_report(r: &VerificationReport, out: &Output) -> Result<u8> {
    eprintln!("{r}");
    write_json(&format::report_to_json(r), out)?;
    Ok(if r.passed() { 0 } else { 1 })
}

fn check_n(n: usize, min: usize) -> Result<usize> {
    if n < min {
        return Err(ForgeError::Usage(format!("--n must be at least {min}")));
    }
    Ok(n)
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::VerifyHecke { l, mode, seed, triples, out } => {
            let ls = match l {
                Some(l) if l < 2 => return Err(ForgeError::Usage("--l must be at least 2".into())),
                Some(l) => vec![l],
                None => vec![2, 3, 4],
            };
            let modes = if mode == "all" {
                HeckeMode::ALL.to_vec()
            } else {
                vec![HeckeMode::from_name(&mode).ok_or_else(|| ForgeError::Usage(format!("unknown mode {mode}")))?]
            };
            let r = commands::verify_hecke(&ls, &modes, &AhaCheckOptions { seed, triples })?;
            emit_report(&r, &out)
        }
        Command::VerifyUq { n, out } => emit_report(&commands::verify_uq(check_n(n, 1)?)?, &out),
        Command::VerifyDrinfeldian { n, rep, hopf, out } => {
            let rep = match rep {
                Some(p) => load_rep(&p)?,
                None => commands::default_rep(check_n(n.unwrap_or(0), 2)?)?,
            };
            emit_report(&commands::verify_drinfeldian(&rep, hopf)?, &out)
        }
        Command::VerifyYangian { n, rep, out } => {
            let rep = match rep {
                Some(p) => load_rep(&p)?,
                None => commands::default_rep(check_n(n.unwrap_or(0), 2)?)?,
            };
            emit_report(&commands::verify_yangian(&rep)?, &out)
        }
        Command::VerifyLimits { n, out } => emit_report(&commands::verify_limits(check_n(n, 2)?)?, &out),
        Command::BuildFunctor { module, l, n, a, out } => {
            let src = match ModuleKind::from_name(&module) {
                Some(kind) => {
                    let l = l.ok_or_else(|| ForgeError::Usage("a builtin module needs --l".into()))?;
                    if l < 2 {
                        return Err(ForgeError::Usage("--l must be at least 2".into()));
                    }
                    ModuleSource::Builtin { kind, l, a }
                }
                None => match read_doc(Path::new(&module))? {
                    Document::Module(m) => ModuleSource::Given(format::module_from_json(&m)?),
                    _ => return Err(ForgeError::Usage(format!("{module} is not a module"))),
                },
            };
            let (bundle, report) = commands::build_functor(&src, check_n(n, 2)?)?;
            eprintln!("{report}");
            eprintln!("quotient dimension {}", bundle.quotient_dim);
            for w in &bundle.warnings {
                eprintln!("warning: {w}");
            }
            write_json(&bundle, &out)?;
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Specialize { input, bind, out } => {
            let doc = read_doc(&input)?;
            let res = commands::specialize(&doc, &bind.bindings())?;
            write_json(&res, &out)?;
            match res {
                Document::Bundle(b) if !b.report.passed => Ok(1),
                _ => Ok(0),
            }
        }
        Command::Export { kind, n, l, i, u, a, module, out } => {
            let k = ExportKind::from_name(&kind).ok_or_else(|| ForgeError::Usage(format!("unknown export kind {kind}")))?;
            let module = match module {
                Some(m) => Some(ModuleKind::from_name(&m).ok_or_else(|| ForgeError::Usage(format!("unknown module {m}")))?),
                None => None,
            };
            let v = commands::export(k, &ExportParams { n, l, i, u, a, module })?;
            write_json(&v, &out)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    hecke_forge::init_threads();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
