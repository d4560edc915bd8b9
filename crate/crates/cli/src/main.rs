use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use trialgebra::algebra::Algebra;
use trialgebra::catalog::{lookup, para_hurwitz_of_dim, tensor_sta, Entry, ENTRY_NAMES};
use trialgebra::exactmath::{Field, Scalar, Subspace};
use trialgebra::json::{
    algebra_from_json, algebra_to_json, delta_from_json, delta_to_json, lie_from_json, lie_to_json,
};
use trialgebra::kantor::{
    af_build, af_report, derivation_subspace, kantor_build, kantor_s4, kantor_s4_check, l_space, lrt_structure_check,
    psi_check, psi_iso_check, verify_kantor, DerivationChoice,
};
use trialgebra::liebuild::{
    construct_g_lrta, construct_g_sta, extract_coordinate_algebra, is_simple_with_action, verify_build, verify_grading,
    verify_jacobi, BuildOptions, GradedLieAlgebra, GroupAction, JacobiMode, Simplicity,
};
use trialgebra::report::{Mode, Report};
use trialgebra::triality::{check_lrta, check_sta, CheckOptions, DeltaMap};

#[derive(Parser)]
#[command(name = "trialgebra", version, about = "Triality algebras, their Lie algebras and verification reports")]
struct Cli {
    /// Emit JSON instead of the human-readable report.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for verification (results do not depend on it).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Field for data created by the command: Q, Qsqrt:-1, Qsqrt:-3, ...
    #[arg(long, global = true)]
    field: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Named example algebras.
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Check the axioms of an algebra file.
    Verify {
        kind: VerifyKind,
        #[command(flatten)]
        input: AlgebraInput,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Build, verify and analyse graded Lie algebras.
    #[command(subcommand)]
    Lie(LieCmd),
    /// Kantor constructions for structurable algebras.
    Kantor {
        verb: KantorVerb,
        #[command(flatten)]
        opts: KantorOpts,
    },
    /// Summary tables.
    #[command(subcommand)]
    Report(ReportCmd),
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// List entry names and their kind.
    List,
    /// Write an entry as JSON (δ, if any, goes to `<out>.delta.json`).
    Build {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        delta_out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyKind {
    Sta,
    Lrta,
    Composition,
}

#[derive(Args)]
struct AlgebraInput {
    /// Algebra JSON file or catalog name.
    #[arg(long)]
    algebra: String,
    /// δ JSON file; defaults to the δ of a catalog name or `<algebra>.delta.json`.
    #[arg(long)]
    delta: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SampleMode {
    Full,
    Sample,
}

#[derive(Args)]
struct Sampling {
    /// Exhaustive or sampled; chosen by dimension when omitted.
    #[arg(long)]
    mode: Option<SampleMode>,
    #[arg(long, default_value_t = 2000)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum ActionKind {
    A4,
    S4,
}

#[derive(Subcommand)]
enum LieCmd {
    /// g(A,δ) from an STA (A₄ action) or an LRTA (S₄ action).
    Construct {
        #[command(flatten)]
        input: AlgebraInput,
        #[arg(long)]
        action: ActionKind,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Skip the axiom check of the input.
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Jacobi, grading and group-action checks.
    Verify {
        #[arg(long)]
        lie: PathBuf,
        #[arg(long)]
        jacobi: Option<SampleMode>,
        #[arg(long, default_value_t = 20000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Recover the coordinate algebra and δ.
    Extract {
        #[arg(long)]
        lie: PathBuf,
        /// Writes `<out>` and `<out>.delta.json`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Simplicity with respect to the group action.
    Simple {
        #[arg(long)]
        lie: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KantorVerb {
    /// The 5-graded algebra K(A,¯,𝔡) and its structural checks.
    Build,
    /// The ψ map on the degree-zero block and the isomorphism with the Klein-graded model.
    PsiCheck,
    /// The Klein-graded model for given γ.
    Af,
    /// The S₄ action over a field with √−1.
    S4,
}

#[derive(Clone, Copy, ValueEnum)]
enum DerivationsArg {
    Inner,
    Full,
}

#[derive(Args)]
struct KantorOpts {
    /// Algebra JSON file or catalog name (a unital structurable algebra).
    #[arg(long)]
    algebra: String,
    #[arg(long, default_value = "2", allow_hyphen_values = true)]
    alpha: String,
    #[arg(long, value_enum, default_value_t = DerivationsArg::Inner)]
    derivations: DerivationsArg,
    /// γ₁,γ₂,γ₃ for `af`; defaults to 1,−1,2α.
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ReportCmd {
    /// dim g(S⊗S′) for para-Hurwitz algebras S, S′ of dimension ≤ max-dim.
    MagicSquare {
        #[arg(long, default_value_t = 8)]
        max_dim: usize,
        /// Also run the Jacobi, grading and action checks.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Input or format problem (exit code 2).
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct InputError(String);

fn input_err(e: impl std::fmt::Display) -> InputError {
    InputError(e.to_string())
}

type CliResult<T> = Result<T, InputError>;

/// Collected output of one command.
struct Outcome {
    reports: Vec<Report>,
    info: Vec<(String, Value)>,
    lines: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { reports: Vec::new(), info: Vec::new(), lines: Vec::new() }
    }

    fn info(&mut self, key: &str, value: impl Into<Value>) {
        let value = value.into();
        let shown = match &value {
            Value::String(s) => s.clone(),
            v => v.to_string(),
        };
        self.lines.push(format!("{key}: {shown}"));
        self.info.push((key.to_string(), value));
    }

    fn passed(&self) -> bool {
        self.reports.iter().all(Report::passed)
    }

    fn print(&self, as_json: bool) {
        if as_json {
            let info: serde_json::Map<String, Value> = self.info.iter().cloned().collect();
            let v = json!({ "passed": self.passed(), "info": info, "reports": self.reports });
            println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
            return;
        }
        for r in &self.reports {
            print!("{r}");
        }
        for l in &self.lines {
            println!("{l}");
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(out) => {
            out.print(cli.json);
            if out.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> CliResult<Outcome> {
    let field = cli.field.as_deref().map(Field::parse_cli).transpose().map_err(input_err)?;
    match &cli.command {
        Command::Catalog(CatalogCmd::List) => catalog_list(),
        Command::Catalog(CatalogCmd::Build { name, out, delta_out }) => {
            catalog_build(name, field, out.as_deref(), delta_out.as_deref())
        }
        Command::Verify { kind, input, sampling } => verify(*kind, input, sampling, field),
        Command::Lie(cmd) => lie(cmd, field),
        Command::Kantor { verb, opts } => kantor(*verb, opts, field),
        Command::Report(ReportCmd::MagicSquare { max_dim, verify, seed }) => magic_square(*max_dim, *verify, *seed),
    }
}

fn entry_kind(e: &Entry) -> &'static str {
    match e {
        Entry::Algebra(_) => "composition",
        Entry::Sta(..) => "sta",
        Entry::Lrta(..) => "lrta",
    }
}

fn catalog_list() -> CliResult<Outcome> {
    let mut out = Outcome::new();
    for name in ENTRY_NAMES {
        let e = lookup(name).map_err(input_err)?;
        out.info(name, json!({ "kind": entry_kind(&e), "dim": e.algebra().dim() }));
        out.lines.pop();
        out.lines.push(format!("{name:<40} {:<12} dim {}", entry_kind(&e), e.algebra().dim()));
    }
    Ok(out)
}

fn delta_sibling(path: &Path) -> PathBuf {
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    path.with_file_name(format!("{stem}.delta.json"))
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn with_field(a: &Algebra, field: Option<Field>) -> CliResult<Algebra> {
    match field {
        Some(f) => a.extend_scalars(f).map_err(input_err),
        None => Ok(a.clone()),
    }
}

fn catalog_build(name: &str, field: Option<Field>, out: Option<&Path>, delta_out: Option<&Path>) -> CliResult<Outcome> {
    let e = lookup(name).map_err(input_err)?;
    let a = with_field(e.algebra(), field)?;
    let mut res = Outcome::new();
    res.info("name", name);
    res.info("kind", entry_kind(&e));
    res.info("dim", a.dim());
    res.info("field", a.field().to_string());
    let text = algebra_to_json(&a);
    match out {
        Some(p) => {
            write(p, &text)?;
            res.info("algebra", p.display().to_string());
        }
        None if e.delta().is_none() => res.lines.push(text),
        None => {}
    }
    if let Some(d) = e.delta() {
        let target = delta_out.map(Path::to_path_buf).or_else(|| out.map(delta_sibling));
        if let Some(p) = target {
            write(&p, &delta_to_json(d, a.field()))?;
            res.info("delta", p.display().to_string());
        } else {
            res.lines.push("(use --out to write the algebra and its δ)".into());
        }
    }
    Ok(res)
}

/// An algebra given as a JSON file or a catalog name, with its δ if known.
fn load_algebra(spec: &str, delta: Option<&Path>, field: Option<Field>) -> CliResult<(Algebra, Option<DeltaMap>)> {
    let path = Path::new(spec);
    let (alg, d) = if path.exists() {
        let a = algebra_from_json(&read(path)?).map_err(input_err)?;
        a.validate().map_err(input_err)?;
        let sibling = delta_sibling(path);
        let d = match delta {
            Some(p) => Some(delta_from_json(&read(p)?).map_err(input_err)?),
            None if sibling.exists() => Some(delta_from_json(&read(&sibling)?).map_err(input_err)?),
            None => None,
        };
        (a, d)
    } else {
        let e = lookup(spec).map_err(|e| InputError(format!("{spec}: not a file, and {e}")))?;
        let d = match delta {
            Some(p) => Some(delta_from_json(&read(p)?).map_err(input_err)?),
            None => e.delta().cloned(),
        };
        (e.algebra().clone(), d)
    };
    Ok((with_field(&alg, field)?, d))
}

fn check_options(s: &Sampling) -> CheckOptions {
    let mode = s.mode.map(|m| match m {
        SampleMode::Full => Mode::Exhaustive,
        SampleMode::Sample => Mode::Sampled,
    });
    CheckOptions { samples: s.count, seed: s.seed, mode, ..CheckOptions::default() }
}

fn require_delta(d: Option<DeltaMap>) -> CliResult<DeltaMap> {
    d.ok_or_else(|| InputError("no δ given: pass --delta or place <algebra>.delta.json next to the algebra".into()))
}

fn verify(kind: VerifyKind, input: &AlgebraInput, s: &Sampling, field: Option<Field>) -> CliResult<Outcome> {
    let (a, d) = load_algebra(&input.algebra, input.delta.as_deref(), field)?;
    let opts = check_options(s);
    let report = match kind {
        VerifyKind::Composition => a.check_symmetric_composition().map_err(input_err)?,
        VerifyKind::Sta => check_sta(&a, &require_delta(d)?, &opts).map_err(input_err)?,
        VerifyKind::Lrta => check_lrta(&a, &require_delta(d)?, &opts).map_err(input_err)?,
    };
    let mut out = Outcome::new();
    out.reports.push(report);
    Ok(out)
}

fn jacobi_mode(m: Option<SampleMode>, count: usize, seed: u64) -> Option<JacobiMode> {
    m.map(|m| match m {
        SampleMode::Full => JacobiMode::Full,
        SampleMode::Sample => JacobiMode::Sampled { count, seed },
    })
}

fn load_lie(path: &Path) -> CliResult<(GradedLieAlgebra, Option<GroupAction>)> {
    lie_from_json(&read(path)?).map_err(input_err)
}

fn require_action(a: Option<GroupAction>) -> CliResult<GroupAction> {
    a.ok_or_else(|| InputError("the Lie algebra file has no group action".into()))
}

fn lie(cmd: &LieCmd, field: Option<Field>) -> CliResult<Outcome> {
    let mut out = Outcome::new();
    match cmd {
        LieCmd::Construct { input, action, out: path, force, sampling } => {
            let (a, d) = load_algebra(&input.algebra, input.delta.as_deref(), field)?;
            let d = require_delta(d)?;
            let opts = BuildOptions { force: *force, verify: true, check: check_options(sampling), jacobi: None };
            let c = match action {
                ActionKind::A4 => construct_g_sta(&a, &d, &opts),
                ActionKind::S4 => construct_g_lrta(&a, &d, &opts),
            }
            .map_err(input_err)?;
            out.info("dim", c.lie.dim());
            out.info(
                "blocks",
                c.lie.blocks().iter().map(|b| format!("{}:{}", b.label, b.dim)).collect::<Vec<_>>().join(" "),
            );
            if let Some(p) = path {
                write(p, &lie_to_json(&c.lie, Some(&c.action)))?;
                out.info("lie", p.display().to_string());
            }
            out.reports.push(c.report);
        }
        LieCmd::Verify { lie, jacobi, count, seed } => {
            let (l, action) = load_lie(lie)?;
            let mode = jacobi_mode(*jacobi, *count, *seed)
                .unwrap_or_else(|| trialgebra::liebuild::default_jacobi_mode(l.dim(), *seed));
            let report = match action {
                Some(a) => verify_build(&l, &a, mode),
                None => {
                    let mut r = Report::new("graded Lie algebra");
                    r.push(verify_jacobi(&l, mode));
                    r.push(verify_grading(&l));
                    r
                }
            };
            out.info("dim", l.dim());
            out.reports.push(report);
        }
        LieCmd::Extract { lie, out: path } => {
            let (l, action) = load_lie(lie)?;
            let ex = extract_coordinate_algebra(&l, &require_action(action)?).map_err(input_err)?;
            out.info("dim", ex.algebra.dim());
            out.info("t_dim", ex.t_dim);
            out.info("kernel_rho_dim", ex.kernel_rho_dim);
            out.info("involution", ex.algebra.involution().is_some());
            match path {
                Some(p) => {
                    write(p, &algebra_to_json(&ex.algebra))?;
                    let dp = delta_sibling(p);
                    write(&dp, &delta_to_json(&ex.delta, ex.algebra.field()))?;
                    out.info("algebra", p.display().to_string());
                    out.info("delta", dp.display().to_string());
                }
                None => out.lines.push(algebra_to_json(&ex.algebra)),
            }
        }
        LieCmd::Simple { lie } => {
            let (l, action) = load_lie(lie)?;
            let verdict = is_simple_with_action(&l, &require_action(action)?);
            let mut r = Report::new("simplicity with action");
            let (ok, detail) = match &verdict {
                Simplicity::Simple => (true, "simple".to_string()),
                Simplicity::InvariantIdeal(i) => (false, format!("invariant ideal of dimension {}", i.dim())),
                Simplicity::Inconclusive(why) => (false, format!("inconclusive: {why}")),
            };
            r.push(trialgebra::report::CheckResult::from_bool("no proper invariant ideal", ok, detail.clone()));
            out.info("verdict", detail);
            if let Simplicity::InvariantIdeal(i) = &verdict {
                out.info("ideal_basis", ideal_rows(i));
            }
            out.reports.push(r);
        }
    }
    Ok(out)
}

fn ideal_rows(i: &Subspace) -> Value {
    i.rows().iter().map(|r| r.iter().map(|(k, c)| json!([k, c.to_text()])).collect::<Vec<_>>()).collect()
}

fn parse_scalar(text: &str, field: Field) -> CliResult<Scalar> {
    Scalar::parse(text.trim(), &field).map_err(input_err)
}

fn kantor(verb: KantorVerb, o: &KantorOpts, field: Option<Field>) -> CliResult<Outcome> {
    // `s4` needs √−1; the other verbs work over the algebra's own field.
    let field = match (verb, field) {
        (KantorVerb::S4, None) => Some(Field::qsqrt(-1).map_err(input_err)?),
        (_, f) => f,
    };
    let (a, _) = load_algebra(&o.algebra, None, field)?;
    let f = a.field();
    let alpha = parse_scalar(&o.alpha, f)?;
    let choice = match o.derivations {
        DerivationsArg::Inner => DerivationChoice::Inner,
        DerivationsArg::Full => DerivationChoice::Full,
    };
    let d = derivation_subspace(&a, choice).map_err(input_err)?;
    let mut out = Outcome::new();
    let lie_out = |l: &GradedLieAlgebra, act: Option<&GroupAction>, out: &mut Outcome| -> CliResult<()> {
        if let Some(p) = &o.out {
            write(p, &lie_to_json(l, act))?;
            out.info("lie", p.display().to_string());
        }
        Ok(())
    };
    match verb {
        KantorVerb::Build => {
            let k = kantor_build(&a, &d, &alpha).map_err(input_err)?;
            out.info("dim", k.lie.dim());
            out.info(
                "blocks",
                k.lie.blocks().iter().map(|b| format!("{}:{}", b.label, b.dim)).collect::<Vec<_>>().join(" "),
            );
            out.reports.push(verify_kantor(&k, o.seed));
            lie_out(&k.lie, None, &mut out)?;
        }
        KantorVerb::PsiCheck => {
            out.reports.push(lrt_structure_check(&a, &d).map_err(input_err)?);
            out.reports.push(psi_check(&a, &d, &alpha).map_err(input_err)?);
            out.reports.push(psi_iso_check(&a, &d, &alpha).map_err(input_err)?);
        }
        KantorVerb::Af => {
            let gamma = match &o.gamma {
                Some(g) => {
                    let parts: Vec<&str> = g.split(',').collect();
                    if parts.len() != 3 {
                        return Err(InputError("--gamma expects three comma-separated scalars".into()));
                    }
                    [parse_scalar(parts[0], f)?, parse_scalar(parts[1], f)?, parse_scalar(parts[2], f)?]
                }
                None => [Scalar::one(), Scalar::int(-1), &alpha * &Scalar::int(2)],
            };
            let v = l_space(&a, &d).map_err(input_err)?;
            let af = af_build(&a, &gamma, &v).map_err(input_err)?;
            out.info("gamma", gamma.iter().map(Scalar::to_text).collect::<Vec<_>>().join(","));
            out.info("dim", af.lie.dim());
            out.reports.push(af_report(&af, o.seed));
            lie_out(&af.lie, None, &mut out)?;
        }
        KantorVerb::S4 => {
            let (l, act) = kantor_s4(&a, &d, f).map_err(input_err)?;
            out.info("dim", l.dim());
            out.reports.push(kantor_s4_check(&a, &d, f).map_err(input_err)?);
            lie_out(&l, Some(&act), &mut out)?;
        }
    }
    Ok(out)
}

fn magic_square(max_dim: usize, verify: bool, seed: u64) -> CliResult<Outcome> {
    if ![1, 2, 4, 8].contains(&max_dim) {
        return Err(InputError("--max-dim must be 1, 2, 4 or 8".into()));
    }
    let mut out = Outcome::new();
    let mut rows = Vec::new();
    let dims: Vec<usize> = [1, 2, 4, 8].into_iter().filter(|&d| d <= max_dim).collect();
    for &b in &dims {
        for &a in dims.iter().filter(|&&a| a <= b) {
            let s = para_hurwitz_of_dim(a).map_err(input_err)?;
            let s2 = para_hurwitz_of_dim(b).map_err(input_err)?;
            let (alg, d) = tensor_sta(&s, &s2).map_err(input_err)?;
            let mut opts = BuildOptions { verify, ..BuildOptions::default() };
            opts.check.seed = seed;
            let c = construct_g_sta(&alg, &d, &opts).map_err(input_err)?;
            let mut r = c.report;
            r.title = format!("g(para-{a} ⊗ para-{b})");
            if verify {
                out.reports.push(r);
            }
            rows.push((a, b, c.lie.dim()));
        }
    }
    for (a, b, dim) in &rows {
        out.info(&format!("{a}x{b}"), *dim);
    }
    out.lines = rows.iter().map(|(a, b, dim)| format!("{a}×{b} → {dim}")).collect();
    out.lines.insert(0, "dim S × dim S′ → dim g".into());
    Ok(out)
}
