//! Command line front end.

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::center::{algebra_center, central_sequence_with_budget, hopf_center, hopf_center_characterizations};
use crate::certificate::{Certificate, Check};
use crate::cocenter::{cocentral_sequence_with_budget, hopf_cocenter};
use crate::format::{parse_field, parse_str, AlgebraFile};
use crate::hopf::builtins::sweedler_coboundary_twist;
use crate::hopf::{
    coboundary_cocycle, drinfeld_twist, dual_hopf, function_algebra, group_algebra, group_algebra_check,
    small_quantum_sl2, sweedler_h4, taft, trivial, verify_axioms, verify_two_cocycle, Group, HopfAlgebra,
};
use crate::report::{self, InputInfo, Report};
use crate::scalar::{Field, Scalar};
use crate::sequence::{freeness_certificate, hopf_kernel_left, FreenessFailure, DEFAULT_FREENESS_BUDGET};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CERTIFICATE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hopfkit", version, about = "Exact Hopf centers, cocenters and exact sequences")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Seed for the randomized identity checks of `verify`.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct Input {
    /// Structure-constant file in the JSON format.
    #[arg(long, conflicts_with = "builtin")]
    pub file: Option<PathBuf>,
    /// Builtin algebra, `name[:key=value,...]`, e.g. `group-algebra:Q8` or `small-quantum-sl2:p=3`.
    #[arg(long)]
    pub builtin: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SequenceKind {
    Central,
    Cocentral,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Over {
    /// The Hopf center.
    HopfCenter,
    /// The Hopf kernel of the cocenter projection.
    HopfKernel,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the Hopf algebra axioms.
    Verify(Input),
    /// Center of the underlying algebra.
    Center(Input),
    /// Largest Hopf subalgebra inside the center.
    HopfCenter(Input),
    /// Universal cocentral quotient.
    Cocenter(Input),
    /// Central or cocentral exact sequence.
    Sequence {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = SequenceKind::Central)]
        kind: SequenceKind,
        #[arg(long, default_value_t = DEFAULT_FREENESS_BUDGET)]
        budget: u64,
    },
    /// Dual Hopf algebra, printed in the file format.
    Dual(Input),
    /// Drinfeld twist by the coboundary cocycle of an invertible element.
    Twist {
        #[command(flatten)]
        input: Input,
        /// Comma-separated coefficients of the element `u` on the basis.
        #[arg(long)]
        u: String,
    },
    /// Print the structure constants in the file format.
    Export(Input),
    /// Freeness certificate over a Hopf subalgebra.
    Freeness {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Over::HopfCenter)]
        over: Over,
        #[arg(long, default_value_t = DEFAULT_FREENESS_BUDGET)]
        budget: u64,
    },
}

/// Output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses arguments (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code }
            } else {
                Outcome { stdout: text, stderr: String::new(), code }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    if let Command::Export(input) = &cli.command {
        return match load(input) {
            Ok((h, _)) => Outcome {
                stdout: crate::format::serialize(&h) + "\n",
                stderr: String::new(),
                code: EXIT_OK,
            },
            Err(e) => Outcome {
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
                code: if e.is_input_error() { EXIT_INPUT } else { EXIT_CERTIFICATE },
            },
        };
    }
    let start = std::time::Instant::now();
    match execute(cli) {
        Ok(report) => Outcome {
            // timings only in text, so JSON stays byte-identical across runs
            stdout: match cli.format {
                OutputFormat::Json => report.to_json(),
                OutputFormat::Text => format!("{}elapsed {:.3}s\n", report.to_text(), start.elapsed().as_secs_f64()),
            },
            stderr: String::new(),
            code: if report.passed { EXIT_OK } else { EXIT_CERTIFICATE },
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: if e.is_input_error() { EXIT_INPUT } else { EXIT_CERTIFICATE },
        },
    }
}

fn input_of(cmd: &Command) -> &Input {
    match cmd {
        Command::Verify(i) | Command::Export(i) | Command::Center(i) | Command::HopfCenter(i) | Command::Cocenter(i) | Command::Dual(i) => i,
        Command::Sequence { input, .. } | Command::Twist { input, .. } | Command::Freeness { input, .. } => input,
    }
}

fn command_name(cmd: &Command) -> String {
    match cmd {
        Command::Verify(_) => "verify".into(),
        Command::Center(_) => "center".into(),
        Command::HopfCenter(_) => "hopf-center".into(),
        Command::Cocenter(_) => "cocenter".into(),
        Command::Sequence { kind, .. } => match kind {
            SequenceKind::Central => "sequence central".into(),
            SequenceKind::Cocentral => "sequence cocentral".into(),
        },
        Command::Dual(_) => "dual".into(),
        Command::Export(_) => "export".into(),
        Command::Twist { .. } => "twist".into(),
        Command::Freeness { .. } => "freeness".into(),
    }
}

fn load(input: &Input) -> Result<(HopfAlgebra, String), Error> {
    match (&input.file, &input.builtin) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)?;
            Ok((parse_str(&text)?, format!("file:{}", path.display())))
        }
        (None, Some(spec)) => Ok((builtin(spec)?, format!("builtin:{spec}"))),
        _ => Err(Error::InvalidParameter("exactly one of --file or --builtin is required".into())),
    }
}

/// `name[:params]` with params `key=value` or a single positional value.
pub fn builtin(spec: &str) -> Result<HopfAlgebra, Error> {
    let (name, params) = spec.split_once(':').unwrap_or((spec, ""));
    let mut positional = Vec::new();
    let mut named = std::collections::BTreeMap::new();
    for p in params.split(',').filter(|p| !p.is_empty()) {
        match p.split_once('=') {
            Some((k, v)) => {
                named.insert(k.trim().to_string(), v.trim().to_string());
            }
            None => positional.push(p.trim().to_string()),
        }
    }
    let mut take = |key: &str| -> Option<String> { named.remove(key).or_else(|| (!positional.is_empty()).then(|| positional.remove(0))) };
    let field = |v: Option<String>| -> Result<Field, Error> { v.map(|f| parse_field(&f)).unwrap_or(Ok(Field::rationals())) };
    let number = |v: Option<String>, key: &str, default: Option<usize>| -> Result<usize, Error> {
        match v {
            Some(s) => s.parse().map_err(|_| Error::InvalidParameter(format!("{key} must be a number, got {s:?}"))),
            None => default.ok_or_else(|| Error::InvalidParameter(format!("{name} needs {key}="))),
        }
    };
    let h = match name {
        "trivial" | "k" => trivial(&field(take("field"))?),
        "group-algebra" | "function-algebra" => {
            let g = take("group").ok_or_else(|| Error::InvalidParameter(format!("{name} needs a group, e.g. {name}:Q8")))?;
            let g = Group::by_name(&g)?;
            let f = field(take("field"))?;
            if name == "group-algebra" {
                group_algebra(&g, &f)
            } else {
                function_algebra(&g, &f)
            }
        }
        "sweedler" | "h4" | "H4" => sweedler_h4(&field(take("field"))?),
        "sweedler-twist" => sweedler_coboundary_twist(&field(take("field"))?)?.algebra,
        "taft" => {
            let n = number(take("n"), "n", None)?;
            let k = number(take("k"), "k", Some(1))?;
            taft(n, k as u64)?
        }
        "small-quantum-sl2" | "uq-sl2" => small_quantum_sl2(number(take("p"), "p", Some(3))?)?,
        _ => {
            return Err(Error::InvalidParameter(format!(
                "unknown builtin {name:?}; known: trivial, group-algebra, function-algebra, sweedler, sweedler-twist, taft, small-quantum-sl2"
            )))
        }
    };
    if let Some((k, _)) = named.into_iter().next() {
        return Err(Error::InvalidParameter(format!("unknown parameter {k:?} for {name}")));
    }
    if !positional.is_empty() {
        return Err(Error::InvalidParameter(format!("too many parameters for {name}")));
    }
    Ok(h)
}

fn execute(cli: &Cli) -> Result<Report, Error> {
    let (h, source) = load(input_of(&cli.command))?;
    let file = AlgebraFile::from_algebra(&h);
    let info = InputInfo {
        source,
        name: h.name().to_string(),
        field: h.field().to_string(),
        dim: h.dim(),
        digest: file.digest(),
    };
    let mut rep = Report::new(command_name(&cli.command), info, cli.seed);
    let axioms = verify_axioms(&h);
    let ok = axioms.all_passed();
    rep.certificate("axioms", axioms);
    if let (Some(seed), Command::Verify(_)) = (cli.seed, &cli.command) {
        rep.certificate("random_elements", random_checks(&h, seed, 16));
    }
    if !ok {
        return Ok(rep);
    }
    let h = Arc::new(h);
    match &cli.command {
        Command::Export(_) => {}
        Command::Verify(_) => {
            rep.result("commutative", h.is_commutative());
            rep.result("cocommutative", h.is_cocommutative());
            let g = group_algebra_check(&h);
            rep.result("grouplikes", g.grouplikes.len());
            rep.result("group_algebra", serde_json::to_value(g.verdict).unwrap());
        }
        Command::Center(_) => {
            let z = algebra_center(&h)?;
            rep.result("center", report::subspace(&h, &z));
            let mut c = Certificate::new();
            c.push(Check::pass("commutant_equals_ad_invariants"));
            rep.certificate("center", c);
        }
        Command::HopfCenter(_) => {
            let ch = hopf_center_characterizations(&h)?;
            rep.result("center_dim", ch.center.dim());
            rep.result("right_dim", ch.right.dim());
            rep.result("left_dim", ch.left.dim());
            rep.result("central_dim", ch.central.dim());
            let hz = hopf_center(&h)?;
            rep.result("hopf_center", report::subspace(&h, &hz.subspace));
            rep.certificate("hopf_center", hz.certificate);
        }
        Command::Cocenter(_) => {
            let c = hopf_cocenter(&h)?;
            rep.result("cocenter_dim", c.dim());
            rep.result("kernel", report::subspace(&h, &c.kernel));
            rep.result("cocentral_subspace", report::subspace(&h, &c.cocentral_subspace));
            rep.result("projection", report::matrix(c.projection().matrix()));
            let g = group_algebra_check(c.algebra());
            rep.result("cocenter_group_algebra", serde_json::to_value(g.verdict).unwrap());
            rep.certificate("cocenter", c.certificate);
        }
        Command::Sequence { kind, budget, .. } => {
            rep.result("convention", "k -> C -> A -> B -> k, iota: C -> A, pi: A -> B");
            match kind {
                SequenceKind::Central => {
                    let r = central_sequence_with_budget(&h, *budget)?;
                    let (c, a, b) = r.sequence.dims();
                    rep.result("dims", json!({"C": c, "A": a, "B": b}));
                    rep.result("hopf_center", report::subspace(&h, &r.hopf_center.subspace));
                    rep.result("kernel_of_pi", report::subspace(&h, &r.ideal));
                    rep.result("pi", report::matrix(r.quotient.projection.matrix()));
                    rep.result("normal", r.normal);
                    rep.result("freeness", freeness_value(&h, &r.freeness));
                    rep.certificate("central_sequence", r.certificate);
                }
                SequenceKind::Cocentral => {
                    let r = cocentral_sequence_with_budget(&h, *budget)?;
                    let (c, a, b) = r.sequence.dims();
                    rep.result("dims", json!({"C": c, "A": a, "B": b}));
                    rep.result("hopf_kernel", report::subspace(&h, &r.hopf_kernel));
                    rep.result("right_hopf_kernel", report::subspace(&h, &r.right_hopf_kernel));
                    rep.result("normal", r.normal);
                    rep.result("coefficient_coalgebra", report::subspace(&h, &r.d.coefficient_coalgebra));
                    rep.result("d", report::subspace(&h, &r.d.generated));
                    rep.result(
                        "d_flags",
                        json!({"bialgebra": r.d.bialgebra, "antipode_stable": r.d.antipode_stable, "ad_stable": r.d.ad_stable}),
                    );
                    rep.result("d_equals_hopf_kernel", r.d_equals_hopf_kernel);
                    rep.result("cocentral_subspace", report::subspace(&h, &r.cocenter.cocentral_subspace));
                    rep.result("pi", report::matrix(r.cocenter.projection().matrix()));
                    rep.result("cocenter_group_algebra", serde_json::to_value(r.grouplikes.verdict).unwrap());
                    rep.result("freeness", freeness_value(&h, &r.freeness));
                    rep.certificate("cocentral_sequence", r.certificate);
                }
            }
        }
        Command::Dual(_) => {
            let d = dual_hopf(&h);
            rep.certificate("dual_axioms", verify_axioms(&d));
            rep.result("algebra", serde_json::to_value(AlgebraFile::from_algebra(&d)).unwrap());
        }
        Command::Twist { u, .. } => {
            let coeffs: Vec<Scalar> = u
                .split(',')
                .enumerate()
                .map(|(i, s)| {
                    h.field().parse_scalar(s.trim()).map_err(|e| Error::Parse {
                        location: format!("--u entry {i}"),
                        message: e.to_string(),
                    })
                })
                .collect::<Result<_, _>>()?;
            if coeffs.len() != h.dim() {
                return Err(Error::InvalidParameter(format!(
                    "--u has {} entries, the algebra has dimension {}",
                    coeffs.len(),
                    h.dim()
                )));
            }
            let psi = coboundary_cocycle(&h, &coeffs)?;
            rep.certificate("cocycle", verify_two_cocycle(&h, &psi));
            let tw = drinfeld_twist(&h, &psi)?;
            rep.certificate("twisted_axioms", verify_axioms(&tw.algebra));
            let mut inv = Certificate::new();
            inv.push(Check::from_bool(
                "hopf_center_invariant",
                hopf_center(&tw.algebra)?.subspace == hopf_center(&h)?.subspace,
            ));
            rep.certificate("twist", inv);
            rep.result("cocycle_convention", "(Ψ⊗1)(Δ⊗id)(Ψ) = (1⊗Ψ)(id⊗Δ)(Ψ), Δ^Ψ(x) = Ψ Δ(x) Ψ⁻¹");
            rep.result("antipode_from_conjugation", tw.antipode_from_conjugation);
            rep.result("algebra", serde_json::to_value(AlgebraFile::from_algebra(&tw.algebra)).unwrap());
        }
        Command::Freeness { over, budget, .. } => {
            let sub = match over {
                Over::HopfCenter => hopf_center(&h)?.subspace,
                Over::HopfKernel => hopf_kernel_left(hopf_cocenter(&h)?.projection()),
            };
            rep.result("subalgebra", report::subspace(&h, &sub));
            let f = freeness_certificate(&h, &sub, *budget);
            let mut c = Certificate::new();
            c.push(match &f {
                Ok(cert) => Check::from_bool("free", cert.verify(&h)),
                Err(e) => Check::fail("free", vec![], format!("{e:?}")),
            });
            rep.result("freeness", freeness_value(&h, &f));
            rep.certificate("freeness", c);
        }
    }
    Ok(rep)
}

fn freeness_value(
    h: &HopfAlgebra,
    f: &Result<crate::sequence::FreenessCertificate, FreenessFailure>,
) -> Value {
    match f {
        Ok(c) => json!({
            "status": "found",
            "rank": c.rank(),
            "cofactors": c.cofactors.iter().map(|a| h.format_element(a)).collect::<Vec<_>>(),
        }),
        Err(e) => serde_json::to_value(e).unwrap(),
    }
}

/// Bialgebra and antipode identities on seeded random elements with small
/// integer coefficients.
pub fn random_checks(h: &HopfAlgebra, seed: u64, samples: usize) -> Certificate {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = h.field();
    let n = h.dim();
    let mut random = || -> Vec<Scalar> { (0..n).map(|_| f.from_i64(rng.gen_range(-3..=3))).collect() };
    let mut mult = None;
    let mut anti = None;
    let mut counit = None;
    for t in 0..samples {
        let (x, y) = (random(), random());
        if mult.is_none() && h.comultiply(&h.multiply(&x, &y)) != h.tensor_multiply(&h.comultiply(&x), &h.comultiply(&y)) {
            mult = Some((vec![t], "Δ(xy) != Δ(x)Δ(y)".to_string()));
        }
        if counit.is_none() && h.counit(&h.multiply(&x, &y)) != &h.counit(&x) * &h.counit(&y) {
            counit = Some((vec![t], "ε(xy) != ε(x)ε(y)".to_string()));
        }
        let mut s_x = h.zero();
        for (k, c) in crate::hopf::Terms::from_flat(&h.comultiply(&x), n, 2).iter() {
            let term = h.multiply(&h.antipode(&h.basis(k[0])), &h.basis(k[1]));
            for (slot, v) in s_x.iter_mut().zip(term) {
                *slot = &*slot + &(c * &v);
            }
        }
        let expected: Vec<Scalar> = h.unit().iter().map(|u| &h.counit(&x) * u).collect();
        if anti.is_none() && s_x != expected {
            anti = Some((vec![t], "S(x1)x2 != ε(x)1".to_string()));
        }
    }
    let mut c = Certificate::new();
    c.push(Check::from_search("comultiplication_multiplicative", mult));
    c.push(Check::from_search("counit_multiplicative", counit));
    c.push(Check::from_search("antipode", anti));
    c
}
