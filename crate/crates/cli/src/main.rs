use clap::{Args, Parser, Subcommand, ValueEnum};
use intform_core::arith::{check_condizione, check_criterion, ArithmeticFunction, CondizioneVerdict, Criterion};
use intform_core::commutative::{expand_hat_series, named_series, NamedSeries};
use intform_core::expr::parse_expression;
use intform_core::forms::{enumerate_basis, membership, BasisKind, FormKind, Membership};
use intform_core::lie::a22::{check_morphism22, jacobi_exhaust22, Morphism22};
use intform_core::lie::a4::{verify_a4_relations, verify_lemmatauuno, verify_lemmatauuno_literal, verify_techuno};
use intform_core::lie::embed::{check_embedding, EmbeddingMap};
use intform_core::lie::LieVerdict;
use intform_core::pbw::a4_algebra;
use intform_core::pbw::identities::{run_identity, summarize, verify_uea_identity, Params, Reading, UeaIdentity};
use intform_core::report::{run, RunConfig, Suite};
use intform_core::SequenceSpec;
use std::process::ExitCode;

/// Exact verification of integral forms of twisted affine enveloping algebras.
#[derive(Parser)]
#[command(name = "intform", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the degree-N coefficient of a named series or of ĥ^{a} for a sequence a.
    Expand(ExpandArgs),
    /// Decide membership of a polynomial in an integral form.
    ///
    /// Expressions use h(r), hhat(k), hbar(k), hcheck(k), htilde(k), hhatc(k), integers,
    /// parentheses and + - * / ^ (division by constants only).
    Member {
        #[arg(long, value_parser = parse_form)]
        form: FormKind,
        expression: String,
    },
    /// List a basis in one degree.
    Basis {
        #[arg(long, value_parser = parse_basis)]
        kind: BasisKind,
        #[arg(long)]
        degree: u32,
    },
    /// Evaluate an integrality criterion on a sequence.
    Criterion {
        #[arg(long, value_parser = parse_seq)]
        seq: SequenceSpec,
        #[arg(long, value_enum)]
        kind: CriterionKind,
        #[arg(long, default_value_t = 20)]
        bound: u64,
    },
    /// Run a structural check on a loop algebra.
    LieCheck {
        #[arg(long, value_enum)]
        check: LieCheckKind,
        #[arg(long, default_value_t = 3)]
        window: i64,
    },
    /// Verify a series identity in an enveloping algebra.
    UeaVerify(UeaArgs),
    /// Run verification suites and emit a JSON report.
    Suite(SuiteArgs),
}

#[derive(Args)]
struct ExpandArgs {
    #[arg(long, value_parser = parse_series, conflicts_with = "seq", required_unless_present = "seq")]
    series: Option<NamedSeries>,
    #[arg(long, value_parser = parse_seq)]
    seq: Option<SequenceSpec>,
    #[arg(long)]
    n: usize,
    /// Print every coefficient up to N with its label.
    #[arg(long)]
    all: bool,
}

#[derive(Args)]
struct UeaArgs {
    #[arg(long, value_parser = parse_identity)]
    id: UeaIdentity,
    /// Parameters as `r=0,s=1`; without them the whole grid runs.
    #[arg(long)]
    params: Option<String>,
    #[arg(long, value_parser = parse_reading)]
    reading: Option<Reading>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SuiteArgs {
    /// Comma-separated suite names: commutative, bases, criteria, lie22, lie4, uea22, uea4, all.
    #[arg(long, value_parser = parse_suites)]
    names: Option<SuiteList>,
    /// Flat key=value file with max_degree, uea_truncation, lie_window, suites, output.
    #[arg(long)]
    config: Option<std::path::PathBuf>,
    #[arg(long)]
    max_degree: Option<u32>,
    #[arg(long)]
    uea_truncation: Option<u32>,
    #[arg(long)]
    lie_window: Option<i64>,
    #[arg(long)]
    output: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CriterionKind {
    Condizione,
    Hat,
    Bar,
    Mix,
}

#[derive(Clone, Copy, ValueEnum)]
enum LieCheckKind {
    Jacobi22,
    Sigma,
    Omega,
    T,
    Relations4,
    Techuno,
    Lemmatauuno,
    LemmatauunoPrinted,
    PsiBar,
    PsiTilde,
}

fn parse_form(s: &str) -> Result<FormKind, String> {
    s.parse().map_err(|e: intform_core::Error| e.to_string())
}

fn parse_basis(s: &str) -> Result<BasisKind, String> {
    s.parse().map_err(|e: intform_core::Error| e.to_string())
}

fn parse_seq(s: &str) -> Result<SequenceSpec, String> {
    SequenceSpec::parse(s).map_err(|e| e.to_string())
}

fn parse_series(s: &str) -> Result<NamedSeries, String> {
    s.parse().map_err(|e: intform_core::Error| e.to_string())
}

fn parse_identity(s: &str) -> Result<UeaIdentity, String> {
    s.parse().map_err(|e: intform_core::Error| e.to_string())
}

fn parse_reading(s: &str) -> Result<Reading, String> {
    s.parse().map_err(|e: intform_core::Error| e.to_string())
}

#[derive(Clone)]
struct SuiteList(Vec<Suite>);

fn parse_suites(s: &str) -> Result<SuiteList, String> {
    Suite::parse_list(s).map(SuiteList).map_err(|e| e.to_string())
}

fn lie_verdict(v: LieVerdict) -> ExitCode {
    match v {
        LieVerdict::Pass { checked } => {
            println!("PASS ({checked} checks)");
            ExitCode::SUCCESS
        }
        LieVerdict::Fail(e) => {
            println!("FAIL {e}");
            ExitCode::FAILURE
        }
    }
}

fn expand(args: ExpandArgs) -> Result<ExitCode, String> {
    let (series, label) = match (&args.series, &args.seq) {
        (Some(name), _) => (named_series(*name, args.n), name.suffix().to_string()),
        (None, Some(seq)) => (expand_hat_series(seq, args.n).map_err(|e| e.to_string())?, seq.to_string()),
        (None, None) => unreachable!("clap requires one of them"),
    };
    if args.all {
        for (k, c) in series.coeffs().iter().enumerate() {
            println!("h{k}_{label} = {c}");
        }
    } else {
        println!("{}", series.coeff(args.n));
    }
    Ok(ExitCode::SUCCESS)
}

fn uea_verify(args: UeaArgs) -> Result<ExitCode, String> {
    let id = args.id;
    if let Some(p) = &args.params {
        let params = Params::parse(p).map_err(|e| e.to_string())?;
        let reading = args.reading.unwrap_or(id.operative());
        let n = args.n.unwrap_or(id.default_truncation());
        let out = verify_uea_identity(id, reading, &params, n).map_err(|e| e.to_string())?;
        if args.json {
            println!("{}", serde_json::to_string_pretty(&out).map_err(|e| e.to_string())?);
        } else {
            println!("{id} [{params}] {reading} N={n}: {out}");
        }
        return Ok(if out.is_equal() { ExitCode::SUCCESS } else { ExitCode::FAILURE });
    }
    let checks = run_identity(id, args.n).map_err(|e| e.to_string())?;
    let checks: Vec<_> = checks.into_iter().filter(|c| args.reading.is_none_or(|r| r == c.reading)).collect();
    let summary = summarize(id, &checks);
    if args.json {
        println!("{}", serde_json::to_string_pretty(&checks).map_err(|e| e.to_string())?);
    } else {
        for c in &checks {
            println!("{id} [{}] {} N={}: {}", c.params, c.reading, c.n, c.outcome);
        }
        println!("verified: {}", summary.verified);
    }
    let ok = if args.reading.is_some() { checks.iter().all(|c| c.outcome.is_equal()) } else { summary.verified };
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn suite(args: SuiteArgs) -> Result<ExitCode, String> {
    let mut cfg = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            RunConfig::parse(&text).map_err(|e| e.to_string())?
        }
        None => RunConfig::default(),
    };
    if let Some(n) = args.names {
        cfg.suites = n.0;
    }
    if let Some(v) = args.max_degree {
        cfg.max_degree = v;
    }
    if let Some(v) = args.uea_truncation {
        cfg.uea_truncation = v;
    }
    if let Some(v) = args.lie_window {
        cfg.lie_window = v;
    }
    if args.output.is_some() {
        cfg.output = args.output;
    }
    if cfg.max_degree == 0 || cfg.uea_truncation == 0 || cfg.lie_window <= 0 {
        return Err("bounds must be positive".into());
    }
    let report = run(&cfg);
    let json = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
    match &cfg.output {
        Some(path) => std::fs::write(path, json + "\n").map_err(|e| format!("{path}: {e}"))?,
        None => println!("{json}"),
    }
    eprintln!("pass {} fail {} skipped {}", report.summary.pass, report.summary.fail, report.summary.skipped);
    Ok(if report.ok() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn dispatch(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Expand(args) => expand(args),
        Command::Member { form, expression } => {
            let p = parse_expression(&expression).map_err(|e| e.to_string())?;
            match membership(&p, form) {
                Membership::In => println!("IN"),
                Membership::Out(w) => println!("OUT {w}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Basis { kind, degree } => {
            for el in enumerate_basis(kind, degree) {
                println!("{}: {}", el.index, el.poly);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Criterion { seq, kind, bound } => {
            let l: ArithmeticFunction = seq.into();
            let c = match kind {
                CriterionKind::Condizione => {
                    let v = check_condizione(&l, bound).map_err(|e| e.to_string())?;
                    match v {
                        CondizioneVerdict::Pass { bound } => println!("PASS through {bound}"),
                        CondizioneVerdict::Fail { m, p, s } => println!("FAIL (m,p,s)=({m},{p},{s})"),
                        CondizioneVerdict::NotApplicable { index } => println!("NOT APPLICABLE: non-integer at {index}"),
                    }
                    return Ok(ExitCode::SUCCESS);
                }
                CriterionKind::Hat => Criterion::Hat,
                CriterionKind::Bar => Criterion::Bar,
                CriterionKind::Mix => Criterion::Mix,
            };
            let report = check_criterion(c, &l, bound).map_err(|e| e.to_string())?;
            match report.first_failure() {
                None => println!("PASS through {bound}"),
                Some(f) => println!("FAIL at n={} ((mu*l)(n) = {})", f.n, f.mobius_convolution),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::LieCheck { check, window } => Ok(lie_verdict(match check {
            LieCheckKind::Jacobi22 => jacobi_exhaust22(window),
            LieCheckKind::Sigma => check_morphism22(Morphism22::Sigma, window),
            LieCheckKind::Omega => check_morphism22(Morphism22::Omega, window),
            LieCheckKind::T => check_morphism22(Morphism22::T, window),
            LieCheckKind::Relations4 => verify_a4_relations(window),
            LieCheckKind::Techuno => verify_techuno(window),
            LieCheckKind::Lemmatauuno => verify_lemmatauuno(window),
            LieCheckKind::LemmatauunoPrinted => verify_lemmatauuno_literal(window),
            LieCheckKind::PsiBar => check_embedding(EmbeddingMap::PsiBar, a4_algebra(), window),
            LieCheckKind::PsiTilde => check_embedding(EmbeddingMap::PsiTilde, a4_algebra(), window),
        })),
        Command::UeaVerify(args) => uea_verify(args),
        Command::Suite(args) => suite(args),
    }
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
