//! Linear functors `(R, L)` between monoidal categories: coherence of the
//! strengths, the duals they induce, `Ω` and `Ψ`, the closedness squares,
//! and when a linear functor is Frobenius.

use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::cat::{CatResult, CategoryView, Mor, Obj};
use crate::duality::{build_duality_functor, AdjointEquivalence, DualityAssignment};
use crate::error::{Error, Result};
use crate::expr::{eval, o, t, Env, MorphExpr};
use crate::functor::{
    cat, unique, ComponentMap, Flavor, FunctorData, NatTransfData, PairMap, Structure,
};
use crate::report::{Audit, Report};
use crate::structures::{
    check_frobenius, check_monoidal, check_nat_flavor, comonoidal_entries, functoriality,
    monoidal_entries, AutonomyWitness,
};
use crate::synthesis::{
    adjudicate_cor_frob, build_sigma_tau, kappa_from_frobenius, EquivalenceMatrix,
};

/// `R` monoidal, `L` comonoidal, and the four strengths
/// `ν^r_R: R(X⊗Y) → LX⊗RY`, `ν^l_R: R(X⊗Y) → RX⊗LY`,
/// `ν^r_L: RX⊗LY → L(X⊗Y)`, `ν^l_L: LX⊗RY → L(X⊗Y)`.
#[derive(Clone)]
pub struct LinearFunctorData {
    pub name: String,
    pub r: FunctorData,
    pub l: FunctorData,
    pub nu_rr: PairMap,
    pub nu_lr: PairMap,
    pub nu_rl: PairMap,
    pub nu_ll: PairMap,
}

impl fmt::Debug for LinearFunctorData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LinearFunctorData {{ name: {}, r: {:?}, l: {:?} }}",
            self.name, self.r, self.l
        )
    }
}

fn swapped(p: &PairMap) -> PairMap {
    let p = p.clone();
    Arc::new(move |x, y| p(y, x))
}

impl LinearFunctorData {
    pub fn new(
        name: impl Into<String>,
        r: FunctorData,
        l: FunctorData,
        nu_rr: PairMap,
        nu_lr: PairMap,
        nu_rl: PairMap,
        nu_ll: PairMap,
    ) -> Self {
        LinearFunctorData {
            name: name.into(),
            r,
            l,
            nu_rr,
            nu_lr,
            nu_rl,
            nu_ll,
        }
    }

    /// Equal components `R = L = F` with `ν^r_R = ν^l_R = F₂` and `ν^r_L = ν^l_L = f₂`.
    pub fn from_frobenius(f: &FunctorData) -> Result<Self> {
        let (m, c) = (f.monoidal.clone(), f.comonoidal.clone());
        let (m, c) = match (m, c) {
            (Some(m), Some(c)) => (m, c),
            _ => {
                return Err(Error::MissingStructure(format!(
                    "{} must be monoidal and comonoidal",
                    f.name
                )))
            }
        };
        Ok(LinearFunctorData {
            name: format!("({0}, {0})", f.name),
            r: f.clone(),
            l: f.clone(),
            nu_rr: c.two.clone(),
            nu_lr: c.two,
            nu_rl: m.two.clone(),
            nu_ll: m.two,
        })
    }

    /// The same data read in `D^op`: `R′ = L^op`, `L′ = R^op`.
    pub fn op(&self) -> Self {
        LinearFunctorData {
            name: format!("{}^op", self.name),
            r: self.l.op(),
            l: self.r.op(),
            nu_rr: self.nu_rl.clone(),
            nu_lr: self.nu_ll.clone(),
            nu_rl: self.nu_rr.clone(),
            nu_ll: self.nu_lr.clone(),
        }
    }

    /// The same data read with reversed tensors.
    pub fn cop(&self) -> Self {
        LinearFunctorData {
            name: format!("{}^cop", self.name),
            r: self.r.cop(),
            l: self.l.cop(),
            nu_rr: swapped(&self.nu_lr),
            nu_lr: swapped(&self.nu_rr),
            nu_rl: swapped(&self.nu_ll),
            nu_ll: swapped(&self.nu_rl),
        }
    }

    pub fn source(&self) -> &CategoryView {
        &self.r.source
    }

    pub fn target(&self) -> &CategoryView {
        &self.r.target
    }

    fn env(&self) -> Env {
        Env::new()
            .with_functor_as("R", &self.r)
            .with_functor_as("L", &self.l)
    }

    fn lab(&self, x: Obj) -> String {
        self.source().obj_label(x)
    }

    fn rr(&self, x: Obj, y: Obj) -> Result<MorphExpr> {
        Ok(nm(
            format!("νrR_{},{}", self.lab(x), self.lab(y)),
            (self.nu_rr)(x, y)?,
        ))
    }

    fn lr(&self, x: Obj, y: Obj) -> Result<MorphExpr> {
        Ok(nm(
            format!("νlR_{},{}", self.lab(x), self.lab(y)),
            (self.nu_lr)(x, y)?,
        ))
    }

    fn rl(&self, x: Obj, y: Obj) -> Result<MorphExpr> {
        Ok(nm(
            format!("νrL_{},{}", self.lab(x), self.lab(y)),
            (self.nu_rl)(x, y)?,
        ))
    }

    fn ll(&self, x: Obj, y: Obj) -> Result<MorphExpr> {
        Ok(nm(
            format!("νlL_{},{}", self.lab(x), self.lab(y)),
            (self.nu_ll)(x, y)?,
        ))
    }

    fn r2(&self, x: Obj, y: Obj) -> Result<MorphExpr> {
        Ok(nm(
            format!("r2_{},{}", self.lab(x), self.lab(y)),
            self.r.f2(x, y)?,
        ))
    }

    fn r0(&self) -> Result<MorphExpr> {
        Ok(nm("r0", self.r.f0()?))
    }

    fn l2(&self, x: Obj, y: Obj) -> Result<MorphExpr> {
        Ok(nm(
            format!("L2_{},{}", self.lab(x), self.lab(y)),
            self.l.cf2(x, y)?,
        ))
    }

    fn l0(&self) -> Result<MorphExpr> {
        Ok(nm("L0", self.l.cf0()?))
    }

    fn ir(&self, x: Obj) -> Result<MorphExpr> {
        Ok(id(self.r.obj(x)?))
    }

    fn il(&self, x: Obj) -> Result<MorphExpr> {
        Ok(id(self.l.obj(x)?))
    }

    fn tx(&self, a: Obj, b: Obj) -> Result<Obj> {
        Ok(self.source().tensor_obj(a, b)?)
    }
}

fn nm(label: impl Into<String>, m: Mor) -> MorphExpr {
    MorphExpr::named(label, m)
}

fn id(x: Obj) -> MorphExpr {
    MorphExpr::id(x)
}

fn scope_of(lf: &LinearFunctorData) -> Vec<String> {
    vec![lf.source().scope_statement(), lf.target().scope_statement()]
}

/// The base relation of each group lf1–lf5.
fn lf_templates(lf: &LinearFunctorData, variant: &str, a: &mut Audit) {
    let c = lf.source().clone();
    let d = lf.target().clone();
    let env = lf.env();
    let objs = c.objects();
    let u = c.unit();
    for &x in &objs {
        a.equation(
            "lf1",
            vec![variant.into(), c.obj_label(x)],
            &d,
            &env,
            || Ok((o([t([lf.l0()?, lf.ir(x)?]), lf.rr(u, x)?]), lf.ir(x)?)),
        );
        for &y in &objs {
            for &z in &objs {
                let inst = vec![
                    variant.into(),
                    c.obj_label(x),
                    c.obj_label(y),
                    c.obj_label(z),
                ];
                a.equation("lf2", inst.clone(), &d, &env, || {
                    let (xy, yz) = (lf.tx(x, y)?, lf.tx(y, z)?);
                    Ok((
                        o([t([lf.il(x)?, lf.rr(y, z)?]), lf.rr(x, yz)?]),
                        o([t([lf.l2(x, y)?, lf.ir(z)?]), lf.rr(xy, z)?]),
                    ))
                });
                a.equation("lf3", inst.clone(), &d, &env, || {
                    let (xy, yz) = (lf.tx(x, y)?, lf.tx(y, z)?);
                    Ok((
                        o([t([lf.il(x)?, lf.lr(y, z)?]), lf.rr(x, yz)?]),
                        o([t([lf.rr(x, y)?, lf.il(z)?]), lf.lr(xy, z)?]),
                    ))
                });
                a.equation("lf4", inst.clone(), &d, &env, || {
                    let (xy, yz) = (lf.tx(x, y)?, lf.tx(y, z)?);
                    Ok((
                        o([t([lf.rl(x, y)?, lf.ir(z)?]), t([lf.ir(x)?, lf.rr(y, z)?])]),
                        o([lf.rr(xy, z)?, lf.r2(x, yz)?]),
                    ))
                });
                a.equation("lf5", inst, &d, &env, || {
                    let (xy, yz) = (lf.tx(x, y)?, lf.tx(y, z)?);
                    Ok((
                        o([t([lf.il(x)?, lf.r2(y, z)?]), t([lf.rr(x, y)?, lf.ir(z)?])]),
                        o([lf.rr(x, yz)?, lf.r2(xy, z)?]),
                    ))
                });
            }
        }
    }
}

/// Naturality of the four strengths in both variables.
fn strength_naturality(lf: &LinearFunctorData, a: &mut Audit) -> Result<()> {
    let c = lf.source().clone();
    let d = lf.target().clone();
    let env = lf.env();
    let (mors, _) = c.morphism_scope();
    let typed: Vec<(Mor, Obj, Obj)> = mors
        .iter()
        .map(|f| Ok((f.clone(), c.dom(f)?, c.cod(f)?)))
        .collect::<Result<_>>()?;
    let fr = |e: MorphExpr| MorphExpr::fmap("R", e);
    let fl = |e: MorphExpr| MorphExpr::fmap("L", e);
    for (f, x, x2) in &typed {
        for (g, y, y2) in &typed {
            let inst = vec![c.mor_label(f), c.mor_label(g)];
            let (fe, ge) = (nm(c.mor_label(f), f.clone()), nm(c.mor_label(g), g.clone()));
            a.equation("naturality:nu_r_R", inst.clone(), &d, &env, || {
                Ok((
                    o([lf.rr(*x2, *y2)?, fr(t([fe.clone(), ge.clone()]))]),
                    o([t([fl(fe.clone()), fr(ge.clone())]), lf.rr(*x, *y)?]),
                ))
            });
            a.equation("naturality:nu_l_R", inst.clone(), &d, &env, || {
                Ok((
                    o([lf.lr(*x2, *y2)?, fr(t([fe.clone(), ge.clone()]))]),
                    o([t([fr(fe.clone()), fl(ge.clone())]), lf.lr(*x, *y)?]),
                ))
            });
            a.equation("naturality:nu_r_L", inst.clone(), &d, &env, || {
                Ok((
                    o([lf.rl(*x2, *y2)?, t([fr(fe.clone()), fl(ge.clone())])]),
                    o([fl(t([fe.clone(), ge.clone()])), lf.rl(*x, *y)?]),
                ))
            });
            a.equation("naturality:nu_l_L", inst, &d, &env, || {
                Ok((
                    o([lf.ll(*x2, *y2)?, t([fl(fe.clone()), fr(ge.clone())])]),
                    o([fl(t([fe.clone(), ge.clone()])), lf.ll(*x, *y)?]),
                ))
            });
        }
    }
    Ok(())
}

pub const VARIANTS: [&str; 4] = ["base", "op", "cop", "op,cop"];

/// The four mechanically generated readings of `lf`.
pub fn variants(lf: &LinearFunctorData) -> Vec<(&'static str, LinearFunctorData)> {
    vec![
        ("base", lf.clone()),
        ("op", lf.op()),
        ("cop", lf.cop()),
        ("op,cop", lf.op().cop()),
    ]
}

/// Structure of `R` and `L`, lf1–lf5 in all four readings, and naturality of the strengths.
pub fn check_linear(lf: &LinearFunctorData) -> Result<Report> {
    let start = Instant::now();
    if lf.r.monoidal.is_none() {
        return Err(Error::MissingStructure(format!(
            "{} has no monoidal structure",
            lf.r.name
        )));
    }
    if lf.l.comonoidal.is_none() {
        return Err(Error::MissingStructure(format!(
            "{} has no comonoidal structure",
            lf.l.name
        )));
    }
    let mut a = Audit::new();
    let mut ra = Audit::new();
    functoriality(&lf.r, &mut ra)?;
    monoidal_entries(&lf.r, &mut ra)?;
    prefix_into(&mut a, ra, "R:");
    let mut la = Audit::new();
    functoriality(&lf.l, &mut la)?;
    comonoidal_entries(&lf.l, &mut la)?;
    prefix_into(&mut a, la, "L:");
    for (name, v) in variants(lf) {
        lf_templates(&v, name, &mut a);
    }
    strength_naturality(lf, &mut a)?;
    Ok(Report::new(
        format!("linear functor {}", lf.name),
        scope_of(lf),
        a,
        start,
    ))
}

fn prefix_into(a: &mut Audit, from: Audit, prefix: &str) {
    for mut e in from.entries {
        e.equation_id = format!("{prefix}{}", e.equation_id);
        a.entries.push(e);
    }
    a.notes.extend(from.notes);
}

fn prefix_report(a: &mut Audit, r: Report, prefix: &str) {
    prefix_into(
        a,
        Audit {
            entries: r.entries,
            notes: r.notes,
        },
        prefix,
    );
}

/// `L𝟙` as left dual of `R𝟙` via `d = ν^l_R ∘ r₀`, `e = L₀ ∘ ν^l_L`, and as
/// right dual via `d′ = ν^r_R ∘ r₀`, `e′ = L₀ ∘ ν^r_L`; both snake pairs.
pub fn unit_duals(lf: &LinearFunctorData) -> Result<Report> {
    let start = Instant::now();
    let c = lf.source();
    let d = lf.target();
    let env = lf.env();
    let u = c.unit();
    let (r1, l1) = (lf.r.obj(u)?, lf.l.obj(u)?);
    let mut a = Audit::new();
    let dl = || -> Result<MorphExpr> { Ok(o([lf.lr(u, u)?, lf.r0()?])) };
    let el = || -> Result<MorphExpr> { Ok(o([lf.l0()?, lf.ll(u, u)?])) };
    let dr = || -> Result<MorphExpr> { Ok(o([lf.rr(u, u)?, lf.r0()?])) };
    let er = || -> Result<MorphExpr> { Ok(o([lf.l0()?, lf.rl(u, u)?])) };
    a.equation("ex:lin-left-dual", vec!["first".into()], d, &env, || {
        Ok((o([t([id(r1), el()?]), t([dl()?, id(r1)])]), id(r1)))
    });
    a.equation("ex:lin-left-dual", vec!["second".into()], d, &env, || {
        Ok((o([t([el()?, id(l1)]), t([id(l1), dl()?])]), id(l1)))
    });
    a.equation("ex:lin-right-dual", vec!["first".into()], d, &env, || {
        Ok((o([t([er()?, id(r1)]), t([id(r1), dr()?])]), id(r1)))
    });
    a.equation("ex:lin-right-dual", vec!["second".into()], d, &env, || {
        Ok((o([t([id(l1), er()?]), t([dr()?, id(l1)])]), id(l1)))
    });
    let r = Report::new(format!("unit duals of {}", lf.name), scope_of(lf), a, start);
    if let Some(e) = r.failures().next() {
        return Err(Error::SnakeFailure(format!(
            "{} [{}]",
            e.equation_id,
            e.instantiation.join(", ")
        )));
    }
    Ok(r)
}

/// `𝔡, 𝔢, Ω` and the primed `𝔡′, 𝔢′, Ψ`, plus `ω` when constructed.
#[derive(Clone)]
pub struct LinearDualityWitness {
    pub frak_d: ComponentMap,
    pub frak_e: ComponentMap,
    pub big_omega: ComponentMap,
    pub frak_d2: ComponentMap,
    pub frak_e2: ComponentMap,
    pub psi: ComponentMap,
    pub omega: Option<ComponentMap>,
}

impl fmt::Debug for LinearDualityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LinearDualityWitness {{ omega: {} }}",
            self.omega.is_some()
        )
    }
}

type ExprAt = Arc<dyn Fn(Obj) -> Result<MorphExpr> + Send + Sync>;

fn to_component(d: &CategoryView, env: &Env, e: &ExprAt) -> ComponentMap {
    let (d, env, e) = (d.clone(), env.clone(), e.clone());
    Arc::new(move |x| eval(&d, &e(x).map_err(cat)?, &env).map_err(cat))
}

/// Left duals `(RSX, 𝔡, 𝔢)` of `LX` and `(LSX, 𝔡′, 𝔢′)` of `RX`, the induced
/// `Ω: RSX → SLX`, `Ψ: LSX → SRX`, and their compatibility diagrams.
pub fn build_omega(
    lf: &LinearFunctorData,
    lc: &DualityAssignment,
    ld: &DualityAssignment,
) -> Result<(LinearDualityWitness, Report)> {
    let start = Instant::now();
    let c = lf.source().clone();
    let d = lf.target().clone();
    if lc.category != c || ld.category != d {
        return Err(Error::Input(
            "duals must live on the source and target of the linear functor".into(),
        ));
    }
    let env = lf.env();
    let fr = |e: MorphExpr| MorphExpr::fmap("R", e);
    let fl = |e: MorphExpr| MorphExpr::fmap("L", e);
    let mk = |f: Box<
        dyn Fn(&LinearFunctorData, &DualityAssignment, &DualityAssignment, Obj) -> Result<MorphExpr>
            + Send
            + Sync,
    >|
     -> ExprAt {
        let (lf, lc, ld) = (lf.clone(), lc.clone(), ld.clone());
        Arc::new(move |x| f(&lf, &lc, &ld, x))
    };
    let frak_d = mk(Box::new(move |lf, lc, _, x| {
        let sx = lc.dual(x)?;
        Ok(o([
            lf.rr(x, sx)?,
            MorphExpr::fmap("R", lc.d_expr(x)?),
            lf.r0()?,
        ]))
    }));
    let frak_e = mk(Box::new(move |lf, lc, _, x| {
        let sx = lc.dual(x)?;
        Ok(o([
            lf.l0()?,
            MorphExpr::fmap("L", lc.e_expr(x)?),
            lf.rl(sx, x)?,
        ]))
    }));
    let frak_d2 = mk(Box::new(move |lf, lc, _, x| {
        let sx = lc.dual(x)?;
        Ok(o([
            lf.lr(x, sx)?,
            MorphExpr::fmap("R", lc.d_expr(x)?),
            lf.r0()?,
        ]))
    }));
    let frak_e2 = mk(Box::new(move |lf, lc, _, x| {
        let sx = lc.dual(x)?;
        Ok(o([
            lf.l0()?,
            MorphExpr::fmap("L", lc.e_expr(x)?),
            lf.ll(sx, x)?,
        ]))
    }));
    let big_omega = {
        let fe = frak_e.clone();
        mk(Box::new(move |lf, lc, ld, x| {
            let lx = lf.l.obj(x)?;
            let rsx = lf.r.obj(lc.dual(x)?)?;
            Ok(o([
                t([
                    nm(
                        format!("𝔢_{}", lf.lab(x)),
                        eval(lf.target(), &fe(x)?, &lf.env())?,
                    ),
                    id(ld.dual(lx)?),
                ]),
                t([id(rsx), ld.d_expr(lx)?]),
            ]))
        }))
    };
    let psi = {
        let fe = frak_e2.clone();
        mk(Box::new(move |lf, lc, ld, x| {
            let rx = lf.r.obj(x)?;
            let lsx = lf.l.obj(lc.dual(x)?)?;
            Ok(o([
                t([
                    nm(
                        format!("𝔢'_{}", lf.lab(x)),
                        eval(lf.target(), &fe(x)?, &lf.env())?,
                    ),
                    id(ld.dual(rx)?),
                ]),
                t([id(lsx), ld.d_expr(rx)?]),
            ]))
        }))
    };
    let mut a = Audit::new();
    let objs = c.objects();
    let ev = |e: &ExprAt, x: Obj| -> Result<MorphExpr> {
        Ok(nm(format!("{}", e(x)?), eval(&d, &e(x)?, &env)?))
    };
    let om = |x: Obj| -> Result<MorphExpr> {
        Ok(nm(
            format!("Ω_{}", c.obj_label(x)),
            eval(&d, &big_omega(x)?, &env)?,
        ))
    };
    let ps = |x: Obj| -> Result<MorphExpr> {
        Ok(nm(
            format!("Ψ_{}", c.obj_label(x)),
            eval(&d, &psi(x)?, &env)?,
        ))
    };
    for &x in &objs {
        let sx = lc.dual(x)?;
        let (lx, rx, rsx, lsx) = (lf.l.obj(x)?, lf.r.obj(x)?, lf.r.obj(sx)?, lf.l.obj(sx)?);
        let ix = c.obj_label(x);
        for (id_, dd, ee, obj, dual) in [
            ("frak-snake", &frak_d, &frak_e, lx, rsx),
            ("frak-snake'", &frak_d2, &frak_e2, rx, lsx),
        ] {
            a.equation(id_, vec![ix.clone(), "first".into()], &d, &env, || {
                Ok((
                    o([t([id(obj), ev(ee, x)?]), t([ev(dd, x)?, id(obj)])]),
                    id(obj),
                ))
            });
            a.equation(id_, vec![ix.clone(), "second".into()], &d, &env, || {
                Ok((
                    o([t([ev(ee, x)?, id(dual)]), t([id(dual), ev(dd, x)?])]),
                    id(dual),
                ))
            });
        }
        a.equation(
            "def-Omega",
            vec![ix.clone(), "unit".into()],
            &d,
            &env,
            || Ok((o([t([id(lx), om(x)?]), ev(&frak_d, x)?]), ld.d_expr(lx)?)),
        );
        a.equation(
            "def-Omega",
            vec![ix.clone(), "counit".into()],
            &d,
            &env,
            || Ok((o([ld.e_expr(lx)?, t([om(x)?, id(lx)])]), ev(&frak_e, x)?)),
        );
        a.equation("def-Psi", vec![ix.clone(), "unit".into()], &d, &env, || {
            Ok((o([t([id(rx), ps(x)?]), ev(&frak_d2, x)?]), ld.d_expr(rx)?))
        });
        a.equation(
            "def-Psi",
            vec![ix.clone(), "counit".into()],
            &d,
            &env,
            || Ok((o([ld.e_expr(rx)?, t([ps(x)?, id(rx)])]), ev(&frak_e2, x)?)),
        );
        let iso = |e: &ExprAt| eval(&d, &e(x)?, &env).map(|m| d.is_iso(&m));
        a.fact(
            "Omega-invertible",
            vec![ix.clone()],
            iso(&big_omega).unwrap_or(false),
            Some("Ω has no inverse".into()),
        );
        a.fact(
            "Psi-invertible",
            vec![ix.clone()],
            iso(&psi).unwrap_or(false),
            Some("Ψ has no inverse".into()),
        );
    }
    let (mors, _) = c.morphism_scope();
    for f in &mors {
        let (x, y) = (c.dom(f)?, c.cod(f)?);
        let fe = nm(c.mor_label(f), f.clone());
        a.equation("naturality:Omega", vec![c.mor_label(f)], &d, &env, || {
            let sf = nm(format!("S({})", c.mor_label(f)), lc.transpose(f)?);
            let slf = nm(
                format!("S(L({}))", c.mor_label(f)),
                ld.transpose(&lf.l.mor(f)?)?,
            );
            Ok((o([om(x)?, fr(sf)]), o([slf, om(y)?])))
        });
        a.equation("naturality:Psi", vec![c.mor_label(f)], &d, &env, || {
            let sf = nm(format!("S({})", c.mor_label(f)), lc.transpose(f)?);
            let srf = nm(
                format!("S(R({}))", c.mor_label(f)),
                ld.transpose(&lf.r.mor(f)?)?,
            );
            Ok((o([ps(x)?, fl(sf)]), o([srf, ps(y)?])))
        });
        let _ = fe;
    }
    let u = c.unit();
    for &x in &objs {
        for &y in &objs {
            let inst = vec![c.obj_label(x), c.obj_label(y)];
            a.equation("lem:Omega-comonoidal", inst.clone(), &d, &env, || {
                let (sx, sy) = (lc.dual(x)?, lc.dual(y)?);
                let (lx, ly) = (lf.l.obj(x)?, lf.l.obj(y)?);
                let s2c = nm("s2", lc.comparison(y, x)?);
                let s2d = nm("s2", ld.comparison(ly, lx)?);
                let sl2 = nm("S(L2)", ld.transpose(&lf.l.cf2(x, y)?)?);
                let xy = lf.tx(x, y)?;
                Ok((
                    o([om(xy)?, fr(s2c), lf.r2(sy, sx)?]),
                    o([sl2, s2d, t([om(y)?, om(x)?])]),
                ))
            });
            a.equation("Psi-monoidal", inst, &d, &env, || {
                let (sx, sy) = (lc.dual(x)?, lc.dual(y)?);
                let (rx, ry) = (lf.r.obj(x)?, lf.r.obj(y)?);
                let s2c = nm("s2", lc.comparison(y, x)?);
                let s2d = nm("s2", ld.comparison(ry, rx)?);
                let sr2 = nm("S(r2)", ld.transpose(&lf.r.f2(x, y)?)?);
                let xy = lf.tx(x, y)?;
                Ok((
                    o([s2d, t([ps(y)?, ps(x)?]), lf.l2(sy, sx)?]),
                    o([sr2, ps(xy)?, fl(s2c)]),
                ))
            });
        }
    }
    a.equation(
        "lem:Omega-comonoidal",
        vec!["unit".into()],
        &d,
        &env,
        || {
            let s0c = nm("s0", lc.comparison_unit()?);
            let s0d = nm("s0", ld.comparison_unit()?);
            let sl0 = nm("S(L0)", ld.transpose(&lf.l.cf0()?)?);
            Ok((o([om(u)?, fr(s0c), lf.r0()?]), o([sl0, s0d])))
        },
    );
    a.equation("Psi-monoidal", vec!["unit".into()], &d, &env, || {
        let s0c = nm("s0", lc.comparison_unit()?);
        let s0d = nm("s0", ld.comparison_unit()?);
        let sr0 = nm("S(r0)", ld.transpose(&lf.r.f0()?)?);
        Ok((o([sr0, ps(u)?, fl(s0c)]), o([s0d, lf.l0()?])))
    });
    let report = Report::new(format!("Ω and Ψ for {}", lf.name), scope_of(lf), a, start);
    if let Some(e) = report
        .failures()
        .find(|e| e.equation_id.starts_with("frak-snake"))
    {
        return Err(Error::SnakeFailure(format!(
            "{} [{}]",
            e.equation_id,
            e.instantiation.join(", ")
        )));
    }
    let w = LinearDualityWitness {
        frak_d: to_component(&d, &env, &frak_d),
        frak_e: to_component(&d, &env, &frak_e),
        big_omega: to_component(&d, &env, &big_omega),
        frak_d2: to_component(&d, &env, &frak_d2),
        frak_e2: to_component(&d, &env, &frak_e2),
        psi: to_component(&d, &env, &psi),
        omega: None,
    };
    Ok((w, report))
}

/// `θ = S′Ω ∘ αL: L → S′R^op S`.
fn theta(
    lf: &LinearFunctorData,
    w: &LinearDualityWitness,
    ad: &AdjointEquivalence,
) -> ComponentMap {
    let (lf, om, ad) = (lf.clone(), w.big_omega.clone(), ad.clone());
    Arc::new(move |x| {
        (|| -> Result<Mor> {
            let d = lf.target();
            Ok(d.compose(&ad.transpose_right(&om(x)?)?, &ad.alpha(lf.l.obj(x)?)?)?)
        })()
        .map_err(cat)
    })
}

/// `θ′ = ΨS′ ∘ Lβ: L → SRS′`, components in `D`.
fn theta_prime(
    lf: &LinearFunctorData,
    w: &LinearDualityWitness,
    ac: &AdjointEquivalence,
) -> ComponentMap {
    let (lf, ps, ac) = (lf.clone(), w.psi.clone(), ac.clone());
    Arc::new(move |x| {
        (|| -> Result<Mor> {
            let d = lf.target();
            Ok(d.compose(&ps(ac.sp(x)?)?, &lf.l.mor(&ac.beta(x)?)?)?)
        })()
        .map_err(cat)
    })
}

/// The two closedness squares and their op readings, plus the comonoidal
/// isomorphism `L → S′R^op S` and the monoidal isomorphism `L^op → SRS′`.
pub fn check_closedness_equations(
    lf: &LinearFunctorData,
    ac: &AdjointEquivalence,
    ad: &AdjointEquivalence,
) -> Result<Report> {
    let start = Instant::now();
    let mut a = Audit::new();
    for (tag, v, vac, vad) in [
        ("", lf.clone(), ac.clone(), ad.clone()),
        ("^op", lf.op(), ac.op(), ad.op()),
    ] {
        let (w, _) = build_omega(&v, &vac.left, &vad.left)?;
        closedness_template(&v, &w, &vac, &vad, tag, &mut a)?;
    }
    let (w, _) = build_omega(lf, &ac.left, &ad.left)?;
    let c = lf.source();
    let d = lf.target();
    let sc = build_duality_functor(&ac.left)?;
    let spc = build_duality_functor(&ac.right)?;
    let sd = build_duality_functor(&ad.left)?;
    let spd = build_duality_functor(&ad.right)?;
    let rop = lf.r.op().cop().renamed(format!("{}^op", lf.r.name));
    let lop = lf.l.op().cop().renamed(format!("{}^op", lf.l.name));
    let th = theta(lf, &w, ad);
    let target = sc.then(&rop)?.then(&spd)?;
    let tr = NatTransfData::new("θ", lf.l.clone(), target, Flavor::Comonoidal, {
        let th = th.clone();
        move |x| th(x)
    });
    prefix_report(&mut a, check_nat_flavor(&tr)?, "eq:Omega:");
    let iso = c
        .objects()
        .into_iter()
        .all(|x| th(x).map(|m| d.is_iso(&m)).unwrap_or(false));
    a.fact(
        "eq:Omega:invertible",
        vec![],
        iso,
        Some("S'Ω ∘ αL has no inverse".into()),
    );
    let thp = theta_prime(lf, &w, ac);
    let srs = spc.then(&lf.r)?.then(&sd)?;
    let trp = NatTransfData::new("θ'", srs, lop, Flavor::Monoidal, {
        let thp = thp.clone();
        move |x| thp(x)
    });
    prefix_report(&mut a, check_nat_flavor(&trp)?, "eq:Omega':");
    let iso = c
        .objects()
        .into_iter()
        .all(|x| thp(x).map(|m| d.is_iso(&m)).unwrap_or(false));
    a.fact(
        "eq:Omega':invertible",
        vec![],
        iso,
        Some("ΨS' ∘ Lβ has no inverse".into()),
    );
    Ok(Report::new(
        format!("closedness equations for {}", lf.name),
        scope_of(lf),
        a,
        start,
    ))
}

fn closedness_template(
    lf: &LinearFunctorData,
    w: &LinearDualityWitness,
    ac: &AdjointEquivalence,
    ad: &AdjointEquivalence,
    tag: &str,
    a: &mut Audit,
) -> Result<()> {
    let c = lf.source();
    let d = lf.target();
    let env = lf.env();
    let fr = |e: MorphExpr| MorphExpr::fmap("R", e);
    let fl = |e: MorphExpr| MorphExpr::fmap("L", e);
    let objs = c.objects();
    for &x in &objs {
        for &y in &objs {
            let inst = vec![c.obj_label(x), c.obj_label(y)];
            a.equation(
                &format!("nrr=right-closed{tag}"),
                inst.clone(),
                d,
                &env,
                || {
                    let sx = ac.s(x)?;
                    let rsx = lf.r.obj(sx)?;
                    let rspsx = ad.sp(rsx)?;
                    let lx = lf.l.obj(x)?;
                    let xy = lf.tx(x, y)?;
                    let ry = lf.r.obj(y)?;
                    let som = nm(
                        format!("S'(Ω_{})", c.obj_label(x)),
                        ad.transpose_right(&(w.big_omega)(x)?)?,
                    );
                    let al = nm(format!("α_L{}", c.obj_label(x)), ad.alpha(lx)?);
                    Ok((
                        o([
                            t([id(rspsx), fr(t([ac.left.e_expr(x)?, id(y)]))]),
                            t([id(rspsx), lf.r2(sx, xy)?]),
                            t([ad.right.d_expr(rsx)?, id(lf.r.obj(xy)?)]),
                        ]),
                        o([t([som, id(ry)]), t([al, id(ry)]), lf.rr(x, y)?]),
                    ))
                },
            );
            a.equation(&format!("nrl=left-closed{tag}"), inst, d, &env, || {
                let spy = ac.sp(y)?;
                let rspy = lf.r.obj(spy)?;
                let srspy = ad.s(rspy)?;
                let xy = lf.tx(x, y)?;
                let rx = lf.r.obj(x)?;
                let ps = nm(format!("Ψ_S'{}", c.obj_label(y)), (w.psi)(spy)?);
                let lb = fl(nm(format!("β_{}", c.obj_label(y)), ac.beta(y)?));
                Ok((
                    o([
                        t([fr(t([id(x), ac.right.e_expr(y)?])), id(srspy)]),
                        t([lf.r2(xy, spy)?, id(srspy)]),
                        t([id(lf.r.obj(xy)?), ad.left.d_expr(rspy)?]),
                    ]),
                    o([t([id(rx), ps]), t([id(rx), lb]), lf.lr(x, y)?]),
                ))
            });
        }
    }
    Ok(())
}

/// The four compatibility conditions of `ω: R → L` with the strengths.
pub fn omega_conditions(lf: &LinearFunctorData, omega: &ComponentMap) -> Result<Report> {
    let start = Instant::now();
    let c = lf.source();
    let d = lf.target();
    let env = lf.env();
    let mut a = Audit::new();
    let objs = c.objects();
    let w = |x: Obj| -> Result<MorphExpr> { Ok(nm(format!("ω_{}", c.obj_label(x)), omega(x)?)) };
    for &x in &objs {
        let ok = omega(x).map(|m| d.is_iso(&m)).unwrap_or(false);
        a.fact(
            "omega-invertible",
            vec![c.obj_label(x)],
            ok,
            Some("ω has no inverse".into()),
        );
    }
    for f in c.morphism_scope().0 {
        let (x, y) = (c.dom(&f)?, c.cod(&f)?);
        a.equation("naturality:omega", vec![c.mor_label(&f)], d, &env, || {
            let fe = nm(c.mor_label(&f), f.clone());
            Ok((
                o([w(y)?, MorphExpr::fmap("R", fe.clone())]),
                o([MorphExpr::fmap("L", fe), w(x)?]),
            ))
        });
    }
    for &x in &objs {
        for &y in &objs {
            let inst = vec![c.obj_label(x), c.obj_label(y)];
            let xy = lf.tx(x, y)?;
            a.equation("omega:1", inst.clone(), d, &env, || {
                Ok((
                    o([lf.rl(x, y)?, t([lf.ir(x)?, w(y)?])]),
                    o([w(xy)?, lf.r2(x, y)?]),
                ))
            });
            a.equation("omega:2", inst.clone(), d, &env, || {
                Ok((
                    o([lf.ll(x, y)?, t([w(x)?, lf.ir(y)?])]),
                    o([w(xy)?, lf.r2(x, y)?]),
                ))
            });
            a.equation("omega:3", inst.clone(), d, &env, || {
                Ok((
                    o([t([lf.il(x)?, w(y)?]), lf.rr(x, y)?]),
                    o([lf.l2(x, y)?, w(xy)?]),
                ))
            });
            a.equation("omega:4", inst, d, &env, || {
                Ok((
                    o([t([w(x)?, lf.il(y)?]), lf.lr(x, y)?]),
                    o([lf.l2(x, y)?, w(xy)?]),
                ))
            });
        }
    }
    Ok(Report::new(
        format!("ω compatibility for {}", lf.name),
        scope_of(lf),
        a,
        start,
    ))
}

/// `R` with the comonoidal structure carried over from `L` along `ω`, and
/// `L` with the monoidal structure carried over from `R`.
fn transported(lf: &LinearFunctorData, omega: &ComponentMap) -> (FunctorData, FunctorData) {
    let d = lf.target().clone();
    let inv = {
        let (d, om) = (d.clone(), omega.clone());
        move |x: Obj| -> CatResult<Mor> {
            let m = om(x)?;
            d.try_inverse(&m)
                .ok_or_else(|| crate::cat::CatError::TypeMismatch("ω is not invertible".into()))
        }
    };
    let (l, c) = (lf.l.clone(), lf.source().clone());
    let (d2, om2, inv2) = (d.clone(), omega.clone(), inv.clone());
    let r_co = Structure::new(
        move |x, y| {
            let xy = c.tensor_obj(x, y)?;
            let ii = d2.tensor(&inv2(x)?, &inv2(y)?)?;
            d2.seq(&[om2(xy)?, l.cf2(x, y).map_err(cat)?, ii])
        },
        lf.l.cf0()
            .map_err(cat)
            .and_then(|l0| d.compose(&l0, &omega(lf.source().unit())?)),
    );
    let (r, c) = (lf.r.clone(), lf.source().clone());
    let (d3, om3, inv3) = (d.clone(), omega.clone(), inv.clone());
    let l_mo = Structure::new(
        move |x, y| {
            let xy = c.tensor_obj(x, y)?;
            let ii = d3.tensor(&inv3(x)?, &inv3(y)?)?;
            d3.seq(&[ii, r.f2(x, y).map_err(cat)?, om3(xy)?])
        },
        lf.r.f0()
            .map_err(cat)
            .and_then(|r0| d.compose(&omega(lf.source().unit())?, &r0)),
    );
    (
        lf.r.clone()
            .with_comonoidal(r_co)
            .renamed(format!("{}+ω", lf.r.name)),
        lf.l.clone()
            .with_monoidal(l_mo)
            .renamed(format!("{}+ω", lf.l.name)),
    )
}

pub const WHEN_LIN_FROB_CONDITIONS: [&str; 6] = [
    "omega-compatible-iso",
    "R-frobenius",
    "R-autonomous",
    "L-frobenius",
    "L-autonomous",
    "monoidal-comonoidal-iso",
];

fn kappa_candidates(
    f: &FunctorData,
    ac: &AdjointEquivalence,
    ad: &AdjointEquivalence,
) -> Vec<AutonomyWitness> {
    if f.comonoidal.is_some() {
        if let Ok(w) = kappa_from_frobenius(f, ac, ad) {
            return vec![w];
        }
    }
    Vec::new()
}

/// Unique-arrow family `RX → LX` on a table target, if one exists at every object.
fn thin_iso_search(lf: &LinearFunctorData) -> Option<ComponentMap> {
    let d = lf.target().clone();
    if !d.is_table() {
        return None;
    }
    for x in lf.source().objects() {
        let m = d.unique_arrow(lf.r.obj(x).ok()?, lf.l.obj(x).ok()?)?;
        if !d.is_iso(&m) {
            return None;
        }
    }
    let (r, l) = (lf.r.clone(), lf.l.clone());
    Some(Arc::new(move |x| {
        unique(&d, r.obj(x)?, l.obj(x)?, "ω search")
    }))
}

/// The six conditions for a linear functor between autonomous categories.
pub fn adjudicate_when_lin_frob(
    lf: &LinearFunctorData,
    ac: &AdjointEquivalence,
    ad: &AdjointEquivalence,
) -> Result<EquivalenceMatrix> {
    let start = Instant::now();
    let c = lf.source();
    let d = lf.target();
    let conditions: Vec<String> = WHEN_LIN_FROB_CONDITIONS
        .iter()
        .map(|s| s.to_string())
        .collect();
    let mut a = Audit::new();
    let lin = check_linear(lf)?;
    let lin_fail = lin.failures().next().map(|e| crate::synthesis::Gate {
        stage: "check_linear".into(),
        equation_id: e.equation_id.clone(),
        detail: e.instantiation.join(", "),
    });
    if let Some(g) = lin_fail {
        prefix_report(&mut a, lin, "");
        return Ok(EquivalenceMatrix {
            conditions,
            verdicts: None,
            gate: Some(g),
            left_right: None,
            lax_colax: None,
            report: Report::new(
                format!("when-lin-frob adjudication for {}", lf.name),
                scope_of(lf),
                a,
                start,
            ),
        });
    }
    let (w, om_report) = build_omega(lf, &ac.left, &ad.left)?;
    a.fact(
        "Omega-built",
        vec![],
        om_report.passed(),
        Some("Ω/Ψ diagrams fail".into()),
    );
    let r_only = lf.r.clone().without_comonoidal();
    let r_cands = kappa_candidates(&lf.r, ac, ad);
    let rm = adjudicate_cor_frob(&r_only, ac, ad, &r_cands)?;
    let lop = lf.l.op();
    let (aco, ado) = (ac.op(), ad.op());
    let l_cands = kappa_candidates(&lop, &aco, &ado);
    let lop_only = lop.clone().without_comonoidal();
    let lm = adjudicate_cor_frob(&lop_only, &aco, &ado, &l_cands)?;
    let rv = rm.verdicts.clone().unwrap_or_else(|| vec![false; 6]);
    let lv = lm.verdicts.clone().unwrap_or_else(|| vec![false; 6]);
    if let Some(g) = &rm.gate {
        a.note(format!("R rejected at {}: {}", g.stage, g.equation_id));
    }
    if let Some(g) = &lm.gate {
        a.note(format!("L rejected at {}: {}", g.stage, g.equation_id));
    }
    let mut omega: Option<ComponentMap> = None;
    if rv[1] {
        if let Some(wk) = r_cands.first().cloned().or_else(|| None::<AutonomyWitness>) {
            if let Ok(so) = build_sigma_tau(&r_only, &wk, ac, ad) {
                let th = theta(lf, &w, ad);
                let (dd, sig) = (d.clone(), so.sigma.clone());
                let cand: ComponentMap = Arc::new(move |x| {
                    let m = dd.compose(&sig(x)?, &th(x)?)?;
                    dd.try_inverse(&m).ok_or_else(|| {
                        crate::cat::CatError::TypeMismatch("σ ∘ S'Ω ∘ αL is not invertible".into())
                    })
                });
                a.note("ω constructed as the inverse of σ ∘ S'Ω ∘ αL");
                omega = Some(cand);
            }
        }
    }
    if omega.is_none() {
        if let Some(s) = thin_iso_search(lf) {
            a.note("ω taken from exhaustive search on the table target");
            omega = Some(s);
        }
    }
    let mut v1 = false;
    let mut v6 = false;
    if let Some(om) = &omega {
        let oc = omega_conditions(lf, om)?;
        v1 = oc.passed();
        let mc = NatTransfData::new(
            "ω",
            lf.r.clone(),
            lf.l.clone(),
            Flavor::MonoidalComonoidal,
            {
                let om = om.clone();
                move |x| om(x)
            },
        );
        v6 = check_nat_flavor(&mc)?.passed() && oc.holds("omega-invertible");
        subset_analysis(lf, om, &oc, &mut a)?;
        prefix_report(&mut a, oc, "");
    } else {
        a.note("no candidate ω");
    }
    let v = vec![v1, rv[0], rv[1], lv[0], lv[1], v6];
    for (name, val) in conditions.iter().zip(&v) {
        a.fact(
            &format!("when-lin-frob:{name}"),
            vec![],
            *val,
            Some(format!("{name} is false")),
        );
    }
    a.fact(
        "when-lin-frob:agreement",
        vec![],
        v.iter().all(|&b| b == v[0]),
        Some(format!("{v:?}")),
    );
    let _ = c;
    Ok(EquivalenceMatrix {
        conditions,
        verdicts: Some(v),
        gate: None,
        left_right: rm.left_right,
        lax_colax: rm.lax_colax,
        report: Report::new(
            format!("when-lin-frob adjudication for {}", lf.name),
            scope_of(lf),
            a,
            start,
        ),
    })
}

const SUBSETS: [[usize; 2]; 6] = [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]];

/// For each pair of ω conditions: do they hold, and does the transported
/// structure make `R`, resp. `L`, Frobenius.
fn subset_analysis(
    lf: &LinearFunctorData,
    om: &ComponentMap,
    oc: &Report,
    a: &mut Audit,
) -> Result<()> {
    let (r_plus, l_plus) = transported(lf, om);
    let rf = check_frobenius(&r_plus)
        .map(|r| r.passed())
        .unwrap_or(false);
    let lfb = check_frobenius(&l_plus)
        .map(|r| r.passed())
        .unwrap_or(false);
    for s in SUBSETS {
        let holds = s.iter().all(|i| oc.holds(&format!("omega:{i}")));
        a.note(format!(
            "omega conditions {{{}, {}}}: hold = {holds}, transported R Frobenius = {rf}, transported L Frobenius = {lfb}",
            s[0], s[1]
        ));
    }
    let holds13 = oc.holds("omega:1") && oc.holds("omega:3");
    a.fact(
        "omega-subset:{1,3}=>R-frobenius",
        vec![],
        !holds13 || rf,
        Some("conditions 1 and 3 hold but R is not Frobenius".into()),
    );
    let holds24 = oc.holds("omega:2") && oc.holds("omega:4");
    a.fact(
        "omega-subset:{2,4}=>L-frobenius",
        vec![],
        !holds24 || lfb,
        Some("conditions 2 and 4 hold but L is not Frobenius".into()),
    );
    Ok(())
}

/// Outcome on a base without duals.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LinearDiagnostic {
    pub linear: bool,
    pub r_frobenius: bool,
    pub l_frobenius: bool,
    pub l_monoidal: bool,
    /// Whether a monoidal-comonoidal isomorphism `R ≅ L` was found.
    pub iso_found: bool,
    pub report: Report,
}

/// The thin structure when the functor lacks one, else the given structure.
fn with_thin(f: &FunctorData) -> FunctorData {
    let mut g = f.clone();
    if g.monoidal.is_none() {
        g = g.clone().with_monoidal(g.thin_monoidal());
    }
    if g.comonoidal.is_none() {
        g = g.clone().with_comonoidal(g.thin_comonoidal());
    }
    g
}

/// Frobenius status of each component and an exhaustive search for a
/// monoidal-comonoidal isomorphism, for linear functors on table bases.
pub fn linear_diagnostic(lf: &LinearFunctorData) -> Result<LinearDiagnostic> {
    let start = Instant::now();
    let mut a = Audit::new();
    let lin = check_linear(lf)?;
    let linear = lin.passed();
    a.fact(
        "diagnostic:linear",
        vec![],
        linear,
        Some("check_linear fails".into()),
    );
    let r = with_thin(&lf.r);
    let l = with_thin(&lf.l);
    let rf = check_frobenius(&r)?;
    let lfr = check_frobenius(&l)?;
    let lm = check_monoidal(&l)?;
    let note = |r: &Report| {
        r.failures().next().map(|e| {
            format!(
                "first failure {} [{}]",
                e.equation_id,
                e.instantiation.join(", ")
            )
        })
    };
    a.fact("diagnostic:R-frobenius", vec![], rf.passed(), note(&rf));
    a.fact("diagnostic:L-frobenius", vec![], lfr.passed(), note(&lfr));
    a.fact("diagnostic:L-monoidal", vec![], lm.passed(), note(&lm));
    let iso = match thin_iso_search(lf) {
        None => false,
        Some(om) => {
            let mc = NatTransfData::new(
                "ω",
                r.clone(),
                l.clone(),
                Flavor::MonoidalComonoidal,
                move |x| om(x),
            );
            check_nat_flavor(&mc)?.passed()
        }
    };
    a.fact(
        "diagnostic:iso-search",
        vec![],
        iso,
        Some("NotFound: no monoidal-comonoidal isomorphism R ≅ L".into()),
    );
    let report = Report::new(
        format!("non-autonomous diagnostic for {}", lf.name),
        scope_of(lf),
        a,
        start,
    );
    Ok(LinearDiagnostic {
        linear,
        r_frobenius: rf.passed(),
        l_frobenius: lfr.passed(),
        l_monoidal: lm.passed(),
        iso_found: iso,
        report,
    })
}

/// Equal-component linear functor as a Frobenius functor, checking `ν^r_R = ν^l_R = L₂` and `ν^r_L = ν^l_L = r₂`.
pub fn frobenius_from_linear(lf: &LinearFunctorData) -> Result<(FunctorData, Report)> {
    let start = Instant::now();
    let c = lf.source();
    let mut a = Audit::new();
    for x in c.objects() {
        let same_obj = lf.r.obj(x)? == lf.l.obj(x)?;
        a.fact("equal-components", vec![c.obj_label(x)], same_obj, None);
        for y in c.objects() {
            let inst = vec![c.obj_label(x), c.obj_label(y)];
            let l2 = lf.l.cf2(x, y)?;
            let r2 = lf.r.f2(x, y)?;
            a.fact(
                "nu=L2",
                inst.clone(),
                (lf.nu_rr)(x, y)? == l2 && (lf.nu_lr)(x, y)? == l2,
                None,
            );
            a.fact(
                "nu=r2",
                inst,
                (lf.nu_rl)(x, y)? == r2 && (lf.nu_ll)(x, y)? == r2,
                None,
            );
        }
    }
    for f in c.morphism_scope().0 {
        a.fact(
            "equal-components",
            vec![c.mor_label(&f)],
            lf.r.mor(&f)? == lf.l.mor(&f)?,
            None,
        );
    }
    let comono =
        lf.l.comonoidal
            .clone()
            .ok_or_else(|| Error::MissingStructure("L has no comonoidal structure".into()))?;
    let f = lf.r.clone().with_comonoidal(comono);
    let fr = check_frobenius(&f)?;
    a.absorb(fr);
    Ok((
        f,
        Report::new(
            format!("Frobenius functor from {}", lf.name),
            scope_of(lf),
            a,
            start,
        ),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::TableCategory;
    use crate::duality::autonomous_structure;

    fn z4_identity_linear() -> (LinearFunctorData, AdjointEquivalence) {
        let c = CategoryView::new(TableCategory::discrete_group(4));
        let adj = autonomous_structure(&c).unwrap();
        (
            LinearFunctorData::from_frobenius(&FunctorData::identity(&c)).unwrap(),
            adj,
        )
    }

    #[test]
    fn identity_pair_is_linear_with_unit_duals() {
        let (lf, _) = z4_identity_linear();
        let r = check_linear(&lf).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        assert!(r.holds("lf4") && r.holds("lf1"));
        assert!(unit_duals(&lf).unwrap().passed());
    }

    #[test]
    fn identity_pair_omega_and_closedness() {
        let (lf, adj) = z4_identity_linear();
        let (w, r) = build_omega(&lf, &adj.left, &adj.left).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        let c = lf.source();
        for x in c.objects() {
            assert_eq!(
                (w.big_omega)(x).unwrap(),
                c.identity(adj.s(x).unwrap()).unwrap()
            );
        }
        let cl = check_closedness_equations(&lf, &adj, &adj).unwrap();
        assert!(cl.passed(), "{}", cl.to_text());
    }

    #[test]
    fn identity_pair_six_conditions() {
        let (lf, adj) = z4_identity_linear();
        let m = adjudicate_when_lin_frob(&lf, &adj, &adj).unwrap();
        assert!(m.all_true(), "{}", m.report.to_text());
    }

    #[test]
    fn frobenius_round_trip() {
        let (lf, _) = z4_identity_linear();
        let (_, r) = frobenius_from_linear(&lf).unwrap();
        assert!(r.passed());
    }
}
