//! Command-line front end.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cat::{validate_category, CategoryView, MorphismScope};
use crate::duality::{build_adjoint_equivalence, AdjointEquivalence, Side};
use crate::error::{Error, Result};
use crate::functor::{Flavor, FunctorData, NatTransfData};
use crate::instances::{self, Builtin};
use crate::io::{self, FunctorFile, LinearFile, LoadedCategory};
use crate::linear::{
    adjudicate_when_lin_frob, check_linear, linear_diagnostic, unit_duals, LinearFunctorData,
};
use crate::report::{Audit, Report};
use crate::structures::{
    check_autonomous, check_comonoidal, check_frobenius, check_monoidal, check_nat_flavor,
    AutonomyOptions,
};
use crate::synthesis::{
    adjudicate_cor_frob, build_sigma_tau, complete_witness, default_kappa, kappa_transformation,
    lambda_transformation, synthesize_comonoidal, EquivalenceMatrix,
};

#[derive(Parser, Debug)]
#[command(
    name = "frobcat",
    version,
    about = "Check monoidal, Frobenius, autonomous and linear functors on finite strict monoidal categories"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Common {
    /// Emit structured JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Required quantification scope.
    #[arg(long, global = true, value_enum)]
    pub scope: Option<ScopeArg>,
    /// Refuse categories with more objects than this.
    #[arg(long, global = true)]
    pub max_objects: Option<usize>,
    /// Write the command's artifact to this path.
    #[arg(long, global = true)]
    pub emit: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScopeArg {
    Exhaustive,
    Generators,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Input {
    /// Builtin instance, e.g. `discrete:4`, `z4-to-z2`, `posetal-nat:6:A`.
    #[arg(long)]
    pub builtin: Option<String>,
    /// Category description file.
    #[arg(long)]
    pub category: Option<PathBuf>,
    /// Functor description file.
    #[arg(long)]
    pub functor: Option<PathBuf>,
    /// Linear-functor description file.
    #[arg(long)]
    pub linear: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
    Both,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum TransformationArg {
    Identity,
    Kappa,
    Lambda,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the strict monoidal category axioms.
    Validate(Input),
    /// Find left and right duals and check the snake equations.
    FindDuals(Input),
    /// Coherence of f2 and f0.
    CheckMonoidal(Input),
    /// Coherence of F2 and F0.
    CheckComonoidal(Input),
    /// Monoidal, comonoidal and both Frobenius squares.
    CheckFrobenius(Input),
    /// Autonomy diagrams for κ (left) and its mate λ (right).
    CheckAutonomous {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "both")]
        side: SideArg,
    },
    /// Naturality and flavor conditions of a transformation.
    CheckNat {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "identity")]
        transformation: TransformationArg,
        /// plain, monoidal, comonoidal, monoidal-comonoidal or comonoidal-monoidal.
        #[arg(long)]
        flavor: Option<String>,
    },
    /// lf1-lf5, strength naturality and the unit duals.
    CheckLinear(Input),
    /// Comonoidal structure from f2, f0 and κ.
    Synthesize(Input),
    /// Six equivalent conditions on an autonomous monoidal functor.
    AdjudicateCorFrob(Input),
    /// Six equivalent conditions on a linear functor between autonomous categories.
    AdjudicateLinFrob(Input),
    /// List catalog instances, or export one with `--builtin NAME --emit PATH`.
    Catalog(Input),
}

/// What a command produced.
pub struct Output {
    pub report: Report,
    pub text: String,
    pub json: String,
}

impl Output {
    fn report(r: Report) -> Output {
        Output {
            text: r.to_text(),
            json: r.to_json(),
            report: r,
        }
    }

    fn exit_code(&self) -> i32 {
        self.report.exit_code()
    }
}

/// Input errors, as opposed to verdicts.
fn is_usage(e: &Error) -> bool {
    matches!(
        e,
        Error::Input(_)
            | Error::Cat(_)
            | Error::HintInvalid(_)
            | Error::MissingStructure(_)
            | Error::TypeMismatch { .. }
            | Error::UnboundRef(_)
    )
}

/// A verdict-level error as a one-entry failing report.
fn failed(title: &str, id: &str, e: &Error) -> Report {
    let mut a = Audit::new();
    a.fact(id, vec![], false, Some(e.to_string()));
    Report::new(title, vec![], a, Instant::now())
}

/// Parse, run, print; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(out) => {
            use std::io::Write;
            let body = if cli.common.json {
                out.json.trim_end()
            } else {
                out.text.trim_end()
            };
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            out.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Output> {
    let common = &cli.common;
    match &cli.command {
        Command::Validate(i) => validate(i, common),
        Command::FindDuals(i) => find_duals(i, common),
        Command::CheckMonoidal(i) => functor_check(i, common, check_monoidal),
        Command::CheckComonoidal(i) => functor_check(i, common, check_comonoidal),
        Command::CheckFrobenius(i) => functor_check(i, common, check_frobenius),
        Command::CheckAutonomous { input, side } => autonomous(input, common, *side),
        Command::CheckNat {
            input,
            transformation,
            flavor,
        } => nat(input, common, *transformation, flavor.as_deref()),
        Command::CheckLinear(i) => linear_check(i, common),
        Command::Synthesize(i) => synthesize(i, common),
        Command::AdjudicateCorFrob(i) => cor_frob(i, common),
        Command::AdjudicateLinFrob(i) => lin_frob(i, common),
        Command::Catalog(i) => catalog(i, common),
    }
}

fn guard(c: &CategoryView, common: &Common) -> Result<()> {
    if let Some(k) = common.max_objects {
        let n = c.objects().len();
        if n > k {
            return Err(Error::Input(format!(
                "{} has {n} objects, more than --max-objects {k}",
                c.name()
            )));
        }
    }
    if common.scope == Some(ScopeArg::Exhaustive)
        && c.morphism_scope().1 == MorphismScope::Generators
    {
        return Err(Error::Input(format!(
            "{} only supports generator scope; pass --scope generators",
            c.name()
        )));
    }
    Ok(())
}

fn one_input(i: &Input) -> Result<()> {
    let n = [
        i.builtin.is_some(),
        i.category.is_some(),
        i.functor.is_some(),
        i.linear.is_some(),
    ]
    .iter()
    .filter(|&&b| b)
    .count();
    match n {
        1 => Ok(()),
        0 => Err(Error::Input(
            "no input: pass --builtin NAME or a description file".into(),
        )),
        _ => Err(Error::Input(
            "pass exactly one of --builtin, --category, --functor, --linear".into(),
        )),
    }
}

fn load_cat(i: &Input, common: &Common) -> Result<LoadedCategory> {
    one_input(i)?;
    let lc = if let Some(b) = &i.builtin {
        let view = instances::category(b)?;
        io::load_category(&crate::cat::CategoryFile {
            builtin: Some(view.name()),
            ..Default::default()
        })?
    } else if let Some(p) = &i.category {
        io::load_category(&io::read_json(p)?)?
    } else {
        return Err(Error::Input(
            "expected a category (--builtin or --category)".into(),
        ));
    };
    guard(&lc.view, common)?;
    Ok(lc)
}

struct LoadedF {
    f: FunctorData,
    src: LoadedCategory,
    tgt: LoadedCategory,
}

fn load_fun(i: &Input, common: &Common) -> Result<LoadedF> {
    one_input(i)?;
    let file = if let Some(b) = &i.builtin {
        FunctorFile {
            builtin: Some(b.clone()),
            ..Default::default()
        }
    } else if let Some(p) = &i.functor {
        io::read_json(p)?
    } else {
        return Err(Error::Input(
            "expected a functor (--builtin or --functor)".into(),
        ));
    };
    let lf = io::load_functor(&file)?;
    guard(&lf.source.view, common)?;
    guard(&lf.target.view, common)?;
    Ok(LoadedF {
        f: lf.functor,
        src: lf.source,
        tgt: lf.target,
    })
}

fn load_lin(
    i: &Input,
    common: &Common,
) -> Result<(LinearFunctorData, LoadedCategory, LoadedCategory)> {
    one_input(i)?;
    let file = if let Some(b) = &i.builtin {
        LinearFile {
            builtin: Some(b.clone()),
            ..Default::default()
        }
    } else if let Some(p) = &i.linear {
        io::read_json(p)?
    } else {
        return Err(Error::Input(
            "expected a linear functor (--builtin or --linear)".into(),
        ));
    };
    let (lf, s, t) = io::load_linear(&file)?;
    guard(&s.view, common)?;
    guard(&t.view, common)?;
    Ok((lf, s, t))
}

fn validate(i: &Input, common: &Common) -> Result<Output> {
    let start = Instant::now();
    let lc = load_cat(i, common)?;
    let v = validate_category(&lc.view)?;
    let mut a = Audit::new();
    for viol in &v.violations {
        a.fact(
            &format!("axiom:{}", viol.axiom),
            viol.witness.clone(),
            false,
            Some(viol.witness.join(" ")),
        );
    }
    a.fact(
        "validate",
        vec![lc.view.name()],
        v.is_ok(),
        Some(format!("{} violations", v.violations.len())),
    );
    Ok(Output::report(Report::new(
        format!("validation of {}", lc.view.name()),
        vec![v.scope.clone()],
        a,
        start,
    )))
}

fn find_duals(i: &Input, common: &Common) -> Result<Output> {
    let lc = load_cat(i, common)?;
    let c = lc.view.clone();
    let adj = match lc.adjoint() {
        Ok(a) => a,
        Err(e) if !is_usage(&e) => {
            return Ok(Output::report(failed(
                &format!("duals of {}", c.name()),
                "find-duals",
                &e,
            )))
        }
        Err(e) => return Err(e),
    };
    let mut r = adj.left.verify()?;
    r.absorb(adj.right.verify()?);
    let (_, eqv) = build_adjoint_equivalence(&adj.left, &adj.right)?;
    r.absorb(eqv);
    for x in c.objects() {
        r.notes.push(format!(
            "{}: S = {}, S' = {}",
            c.obj_label(x),
            c.obj_label(adj.s(x)?),
            c.obj_label(adj.sp(x)?)
        ));
    }
    if let Some(p) = &common.emit {
        let mut file = io::category_to_file(&c)?;
        file.duals = Some(io::duals_to_file(&adj)?);
        io::write_json(p, &file)?;
    }
    Ok(Output::report(r))
}

fn functor_check(
    i: &Input,
    common: &Common,
    check: fn(&FunctorData) -> Result<Report>,
) -> Result<Output> {
    let lf = load_fun(i, common)?;
    Ok(Output::report(check(&lf.f)?))
}

fn duals_of(l: &LoadedF) -> Result<(AdjointEquivalence, AdjointEquivalence)> {
    Ok((l.src.adjoint()?, l.tgt.adjoint()?))
}

fn autonomous(i: &Input, common: &Common, side: SideArg) -> Result<Output> {
    let l = load_fun(i, common)?;
    let (ac, ad) = duals_of(&l)?;
    let w = default_kappa(&l.f, &ac, &ad)
        .ok_or_else(|| Error::MissingStructure(format!("no κ available for {}", l.f.name)))?;
    let w = complete_witness(&w, &l.f, &ac, &ad)?;
    let opts = AutonomyOptions::default();
    let mut out: Option<Report> = None;
    let mut verdicts = Vec::new();
    for (s, a, d) in [
        (Side::Left, &ac.left, &ad.left),
        (Side::Right, &ac.right, &ad.right),
    ] {
        let wanted = matches!(
            (side, s),
            (SideArg::Both, _) | (SideArg::Left, Side::Left) | (SideArg::Right, Side::Right)
        );
        if !wanted {
            continue;
        }
        let r = check_autonomous(&l.f, a, d, &w, s, opts)?;
        verdicts.push(r.passed());
        match &mut out {
            None => out = Some(r),
            Some(o) => o.absorb(r),
        }
    }
    let mut r = out.expect("at least one side");
    if verdicts.len() == 2 {
        let mut a = Audit::new();
        a.fact(
            "rem:leftaut=rightaut",
            vec![],
            verdicts[0] == verdicts[1],
            Some(format!("left {} right {}", verdicts[0], verdicts[1])),
        );
        r.absorb(Report::new("", vec![], a, Instant::now()));
        r.title = format!("autonomy of {}", l.f.name);
    }
    Ok(Output::report(r))
}

fn nat(i: &Input, common: &Common, tr: TransformationArg, flavor: Option<&str>) -> Result<Output> {
    let l = load_fun(i, common)?;
    let parse =
        |s: &str| Flavor::parse(s).ok_or_else(|| Error::Input(format!("unknown flavor {s}")));
    let t = match tr {
        TransformationArg::Identity => {
            let fl = parse(flavor.unwrap_or("monoidal-comonoidal"))?;
            let f = l.f.clone();
            NatTransfData::new("1", l.f.clone(), l.f.clone(), fl, move |x| {
                f.target.identity(f.obj(x)?)
            })
        }
        TransformationArg::Kappa | TransformationArg::Lambda => {
            let (ac, ad) = duals_of(&l)?;
            let w = default_kappa(&l.f, &ac, &ad).ok_or_else(|| {
                Error::MissingStructure(format!("no κ available for {}", l.f.name))
            })?;
            let w = complete_witness(&w, &l.f, &ac, &ad)?;
            let fl = parse(flavor.unwrap_or("comonoidal-monoidal"))?;
            if tr == TransformationArg::Kappa {
                kappa_transformation(&l.f, w.kappa.expect("completed"), &ac, &ad, fl)?
            } else {
                lambda_transformation(&l.f, w.lambda.expect("completed"), &ac, &ad, fl)?
            }
        }
    };
    Ok(Output::report(check_nat_flavor(&t)?))
}

fn linear_check(i: &Input, common: &Common) -> Result<Output> {
    let (lf, _, _) = load_lin(i, common)?;
    let mut r = check_linear(&lf)?;
    match unit_duals(&lf) {
        Ok(u) => r.absorb(u),
        Err(e) => r.absorb(failed("unit duals", "ex:lin-left-dual", &e)),
    }
    Ok(Output::report(r))
}

fn synthesize(i: &Input, common: &Common) -> Result<Output> {
    let l = load_fun(i, common)?;
    let (ac, ad) = duals_of(&l)?;
    let w = default_kappa(&l.f, &ac, &ad)
        .ok_or_else(|| Error::MissingStructure(format!("no κ available for {}", l.f.name)))?;
    let mono = l.f.clone().without_comonoidal();
    let title = format!("synthesis for {}", l.f.name);
    let so = match build_sigma_tau(&mono, &w, &ac, &ad) {
        Ok(so) => so,
        Err(e) if !is_usage(&e) => return Ok(Output::report(failed(&title, "eq:ka-la", &e))),
        Err(e) => return Err(e),
    };
    let mut r = so.audit.clone();
    let syn = match synthesize_comonoidal(&mono, &so, &ac, &ad) {
        Ok(s) => s,
        Err(e) if !is_usage(&e) => {
            r.absorb(failed(&title, "synthesis", &e));
            return Ok(Output::report(r));
        }
        Err(e) => return Err(e),
    };
    r.absorb(syn.audit.clone());
    r.title = title;
    let (c, d) = (&mono.source, &mono.target);
    for x in c.objects() {
        for y in c.objects() {
            r.notes.push(format!(
                "F2[{}, {}] = {}",
                c.obj_label(x),
                c.obj_label(y),
                d.mor_label(&(syn.structure.two)(x, y)?)
            ));
        }
    }
    r.notes.push(format!(
        "F0 = {}",
        d.mor_label(&syn.structure.zero.clone()?)
    ));
    if let Some(p) = &common.emit {
        let patched = mono.with_comonoidal(syn.structure.clone());
        io::write_json(p, &io::functor_to_file(&patched)?)?;
    }
    Ok(Output::report(r))
}

#[derive(Serialize)]
struct MatrixJson<'a> {
    conditions: &'a [String],
    verdicts: &'a Option<Vec<bool>>,
    gate: &'a Option<crate::synthesis::Gate>,
    left_right: &'a Option<(bool, bool)>,
    lax_colax: &'a Option<[bool; 3]>,
    unanimous: bool,
    report: &'a Report,
}

fn matrix_output(m: EquivalenceMatrix) -> Output {
    let mut text = String::new();
    match &m.verdicts {
        Some(v) => {
            for (c, b) in m.conditions.iter().zip(v) {
                text.push_str(&format!("{c}: {b}\n"));
            }
            text.push_str(&format!("unanimous: {}\n", m.unanimous()));
        }
        None => {
            if let Some(g) = &m.gate {
                text.push_str(&format!(
                    "rejected at {}: {} [{}]\n",
                    g.stage, g.equation_id, g.detail
                ));
            }
        }
    }
    text.push_str(&m.report.to_text());
    let json = serde_json::to_string_pretty(&MatrixJson {
        conditions: &m.conditions,
        verdicts: &m.verdicts,
        gate: &m.gate,
        left_right: &m.left_right,
        lax_colax: &m.lax_colax,
        unanimous: m.unanimous(),
        report: &m.report,
    })
    .expect("matrices serialize");
    Output {
        report: m.report,
        text,
        json,
    }
}

fn cor_frob(i: &Input, common: &Common) -> Result<Output> {
    let l = load_fun(i, common)?;
    let (ac, ad) = duals_of(&l)?;
    let cands: Vec<_> = default_kappa(&l.f, &ac, &ad).into_iter().collect();
    let m = adjudicate_cor_frob(&l.f.clone().without_comonoidal(), &ac, &ad, &cands)?;
    Ok(matrix_output(m))
}

fn lin_frob(i: &Input, common: &Common) -> Result<Output> {
    let (lf, s, t) = load_lin(i, common)?;
    match (s.adjoint(), t.adjoint()) {
        (Ok(ac), Ok(ad)) => Ok(matrix_output(adjudicate_when_lin_frob(&lf, &ac, &ad)?)),
        (Err(e), _) | (_, Err(e)) if !is_usage(&e) => {
            let d = linear_diagnostic(&lf)?;
            let mut r = d.report.clone();
            r.notes.push(format!(
                "base is not autonomous ({e}); six-condition adjudication does not apply"
            ));
            let frob = |b: bool| if b { "Frobenius" } else { "not Frobenius" };
            r.notes.push(format!(
                "R {}, L {}",
                frob(d.r_frobenius),
                frob(d.l_frobenius)
            ));
            let json = serde_json::to_string_pretty(&d).expect("diagnostics serialize");
            Ok(Output {
                text: r.to_text(),
                json,
                report: r,
            })
        }
        (Err(e), _) | (_, Err(e)) => Err(e),
    }
}

fn catalog(i: &Input, common: &Common) -> Result<Output> {
    let start = Instant::now();
    if let (Some(name), Some(p)) = (&i.builtin, &common.emit) {
        export(name, p)?;
    } else if i.builtin.is_some() {
        return Err(Error::Input(
            "catalog --builtin NAME needs --emit PATH".into(),
        ));
    }
    let entries = instances::catalog();
    let mut a = Audit::new();
    let mut text = String::new();
    for e in &entries {
        text.push_str(&format!(
            "{:<32} {:<15} {:<20} {}{}\n",
            e.name,
            format!("{:?}", e.kind),
            e.parameters,
            e.description,
            if e.negative { " [negative]" } else { "" }
        ));
    }
    a.fact("catalog", vec![], true, None);
    let report = Report::new("catalog", vec![], a, start);
    let json = serde_json::to_string_pretty(&entries).expect("catalog serializes");
    Ok(Output { report, text, json })
}

fn export(name: &str, p: &Path) -> Result<()> {
    match instances::resolve(name)? {
        Builtin::Category(c) => {
            let mut file = instances::export_category(name, &c)?;
            if c.is_table() {
                if let Ok(adj) = instances::duals(&c) {
                    file.duals = Some(io::duals_to_file(&adj)?);
                }
            }
            io::write_json(p, &file)
        }
        Builtin::Functor(f) => match io::functor_to_file(&f) {
            Ok(file) => io::write_json(p, &file),
            Err(_) => io::write_json(
                p,
                &FunctorFile {
                    builtin: Some(name.into()),
                    ..Default::default()
                },
            ),
        },
        Builtin::Linear(l) => match io::linear_to_file(&l) {
            Ok(file) => io::write_json(p, &file),
            Err(_) => io::write_json(
                p,
                &LinearFile {
                    builtin: Some(name.into()),
                    ..Default::default()
                },
            ),
        },
    }
}
