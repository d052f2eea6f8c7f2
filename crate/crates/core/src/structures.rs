//! Checks of functor-level structure: functoriality, monoidal, comonoidal,
//! Frobenius and autonomous functors, and structured natural transformations.

use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::cat::{CatResult, CategoryView, Mor, Obj};
use crate::duality::DualityAssignment;
use crate::error::{Error, Result};
use crate::expr::{o, t, Env, MorphExpr};
use crate::functor::{ComponentMap, Flavor, FunctorData, NatTransfData};
use crate::report::{Audit, Report};

fn nm(label: impl Into<String>, m: Mor) -> MorphExpr {
    MorphExpr::named(label, m)
}

fn id(x: Obj) -> MorphExpr {
    MorphExpr::id(x)
}

fn fm(e: MorphExpr) -> MorphExpr {
    MorphExpr::fmap("F", e)
}

fn env_for(f: &FunctorData) -> Env {
    Env::new().with_functor_as("F", f)
}

fn labels(c: &CategoryView, xs: &[Obj]) -> Vec<String> {
    xs.iter().map(|&x| c.obj_label(x)).collect()
}

fn scope_of(f: &FunctorData) -> Vec<String> {
    vec![f.source.scope_statement(), f.target.scope_statement()]
}

/// The source scope morphisms with their types.
fn typed_scope(c: &CategoryView) -> Result<Vec<(Mor, Obj, Obj)>> {
    let (mors, _) = c.morphism_scope();
    mors.iter()
        .map(|f| Ok((f.clone(), c.dom(f)?, c.cod(f)?)))
        .collect()
}

/// Functoriality on the source scope.
pub fn functoriality(f: &FunctorData, a: &mut Audit) -> Result<()> {
    let (c, d) = (&f.source, &f.target);
    let env = env_for(f);
    for x in c.objects() {
        a.equation("functor:identity", labels(c, &[x]), d, &env, || {
            Ok((fm(id(x)), id(f.obj(x)?)))
        });
    }
    let typed = typed_scope(c)?;
    for (g, x, y) in &typed {
        let ok = f
            .mor(g)
            .and_then(|fg| d.check_type(&fg, f.obj(*x)?, f.obj(*y)?, "image"));
        a.fact(
            "functor:typing",
            vec![c.mor_label(g)],
            ok.is_ok(),
            ok.err().map(|e| e.to_string()),
        );
    }
    for (g, _, y) in &typed {
        for (h, y2, _) in &typed {
            if y != y2 {
                continue;
            }
            a.equation(
                "functor:composition",
                vec![c.mor_label(h), c.mor_label(g)],
                d,
                &env,
                || {
                    let (ge, he) = (nm(c.mor_label(g), g.clone()), nm(c.mor_label(h), h.clone()));
                    Ok((
                        fm(MorphExpr::compose(he.clone(), ge.clone())),
                        MorphExpr::compose(fm(he), fm(ge)),
                    ))
                },
            );
        }
    }
    Ok(())
}

pub fn check_functor(f: &FunctorData) -> Result<Report> {
    let start = Instant::now();
    let mut a = Audit::new();
    functoriality(f, &mut a)?;
    Ok(Report::new(
        format!("functoriality of {}", f.name),
        scope_of(f),
        a,
        start,
    ))
}

fn f2e(f: &FunctorData, c: &CategoryView, x: Obj, y: Obj) -> Result<MorphExpr> {
    Ok(nm(
        format!("f2_{},{}", c.obj_label(x), c.obj_label(y)),
        f.f2(x, y)?,
    ))
}

fn f0e(f: &FunctorData) -> Result<MorphExpr> {
    Ok(nm("f0", f.f0()?))
}

fn cf2e(f: &FunctorData, c: &CategoryView, x: Obj, y: Obj) -> Result<MorphExpr> {
    Ok(nm(
        format!("F2_{},{}", c.obj_label(x), c.obj_label(y)),
        f.cf2(x, y)?,
    ))
}

fn cf0e(f: &FunctorData) -> Result<MorphExpr> {
    Ok(nm("F0", f.cf0()?))
}

/// Monoidal coherence (lax-functor0, lax-functor2) and naturality of `f₂`.
pub fn monoidal_entries(f: &FunctorData, a: &mut Audit) -> Result<()> {
    if f.monoidal.is_none() {
        return Err(Error::MissingStructure(format!(
            "{} has no monoidal structure",
            f.name
        )));
    }
    let (c, d) = (&f.source, &f.target);
    let env = env_for(f);
    let objs = c.objects();
    let u = c.unit();
    for &x in &objs {
        a.equation(
            "lax-functor0",
            vec!["left".into(), c.obj_label(x)],
            d,
            &env,
            || {
                Ok((
                    o([f2e(f, c, u, x)?, t([f0e(f)?, id(f.obj(x)?)])]),
                    id(f.obj(x)?),
                ))
            },
        );
        a.equation(
            "lax-functor0",
            vec!["right".into(), c.obj_label(x)],
            d,
            &env,
            || {
                Ok((
                    o([f2e(f, c, x, u)?, t([id(f.obj(x)?), f0e(f)?])]),
                    id(f.obj(x)?),
                ))
            },
        );
        for &y in &objs {
            for &z in &objs {
                a.equation("lax-functor2", labels(c, &[x, y, z]), d, &env, || {
                    let xy = c.tensor_obj(x, y)?;
                    let yz = c.tensor_obj(y, z)?;
                    Ok((
                        o([f2e(f, c, xy, z)?, t([f2e(f, c, x, y)?, id(f.obj(z)?)])]),
                        o([f2e(f, c, x, yz)?, t([id(f.obj(x)?), f2e(f, c, y, z)?])]),
                    ))
                });
            }
        }
    }
    let typed = typed_scope(c)?;
    for (g, x, x2) in &typed {
        for (h, y, y2) in &typed {
            a.equation(
                "naturality:f2",
                vec![c.mor_label(g), c.mor_label(h)],
                d,
                &env,
                || {
                    let (ge, he) = (nm(c.mor_label(g), g.clone()), nm(c.mor_label(h), h.clone()));
                    Ok((
                        o([fm(t([ge.clone(), he.clone()])), f2e(f, c, *x, *y)?]),
                        o([f2e(f, c, *x2, *y2)?, t([fm(ge), fm(he)])]),
                    ))
                },
            );
        }
    }
    Ok(())
}

/// Comonoidal coherence (colax_functor0, colax_functor2) and naturality of `F₂`.
pub fn comonoidal_entries(f: &FunctorData, a: &mut Audit) -> Result<()> {
    if f.comonoidal.is_none() {
        return Err(Error::MissingStructure(format!(
            "{} has no comonoidal structure",
            f.name
        )));
    }
    let (c, d) = (&f.source, &f.target);
    let env = env_for(f);
    let objs = c.objects();
    let u = c.unit();
    for &x in &objs {
        a.equation(
            "colax_functor0",
            vec!["left".into(), c.obj_label(x)],
            d,
            &env,
            || {
                Ok((
                    o([t([cf0e(f)?, id(f.obj(x)?)]), cf2e(f, c, u, x)?]),
                    id(f.obj(x)?),
                ))
            },
        );
        a.equation(
            "colax_functor0",
            vec!["right".into(), c.obj_label(x)],
            d,
            &env,
            || {
                Ok((
                    o([t([id(f.obj(x)?), cf0e(f)?]), cf2e(f, c, x, u)?]),
                    id(f.obj(x)?),
                ))
            },
        );
        for &y in &objs {
            for &z in &objs {
                a.equation("colax_functor2", labels(c, &[x, y, z]), d, &env, || {
                    let xy = c.tensor_obj(x, y)?;
                    let yz = c.tensor_obj(y, z)?;
                    Ok((
                        o([t([id(f.obj(x)?), cf2e(f, c, y, z)?]), cf2e(f, c, x, yz)?]),
                        o([t([cf2e(f, c, x, y)?, id(f.obj(z)?)]), cf2e(f, c, xy, z)?]),
                    ))
                });
            }
        }
    }
    let typed = typed_scope(c)?;
    for (g, x, x2) in &typed {
        for (h, y, y2) in &typed {
            a.equation(
                "naturality:F2",
                vec![c.mor_label(g), c.mor_label(h)],
                d,
                &env,
                || {
                    let (ge, he) = (nm(c.mor_label(g), g.clone()), nm(c.mor_label(h), h.clone()));
                    Ok((
                        o([cf2e(f, c, *x2, *y2)?, fm(t([ge.clone(), he.clone()]))]),
                        o([t([fm(ge), fm(he)]), cf2e(f, c, *x, *y)?]),
                    ))
                },
            );
        }
    }
    Ok(())
}

pub fn check_monoidal(f: &FunctorData) -> Result<Report> {
    let start = Instant::now();
    let mut a = Audit::new();
    functoriality(f, &mut a)?;
    monoidal_entries(f, &mut a)?;
    Ok(Report::new(
        format!("monoidal structure of {}", f.name),
        scope_of(f),
        a,
        start,
    ))
}

pub fn check_comonoidal(f: &FunctorData) -> Result<Report> {
    let start = Instant::now();
    let mut a = Audit::new();
    functoriality(f, &mut a)?;
    comonoidal_entries(f, &mut a)?;
    Ok(Report::new(
        format!("comonoidal structure of {}", f.name),
        scope_of(f),
        a,
        start,
    ))
}

/// The two Frobenius squares over all object triples.
pub fn frobenius_entries(f: &FunctorData, a: &mut Audit) -> Result<()> {
    let (c, d) = (&f.source, &f.target);
    let env = env_for(f);
    let objs = c.objects();
    for &x in &objs {
        for &y in &objs {
            for &z in &objs {
                let inst = labels(c, &[x, y, z]);
                a.equation("eq2:Frob", inst.clone(), d, &env, || {
                    let (xy, yz) = (c.tensor_obj(x, y)?, c.tensor_obj(y, z)?);
                    Ok((
                        o([
                            t([f2e(f, c, x, y)?, id(f.obj(z)?)]),
                            t([id(f.obj(x)?), cf2e(f, c, y, z)?]),
                        ]),
                        o([cf2e(f, c, xy, z)?, f2e(f, c, x, yz)?]),
                    ))
                });
                a.equation("eq1:Frob", inst, d, &env, || {
                    let (xy, yz) = (c.tensor_obj(x, y)?, c.tensor_obj(y, z)?);
                    Ok((
                        o([
                            t([id(f.obj(x)?), f2e(f, c, y, z)?]),
                            t([cf2e(f, c, x, y)?, id(f.obj(z)?)]),
                        ]),
                        o([cf2e(f, c, x, yz)?, f2e(f, c, xy, z)?]),
                    ))
                });
            }
        }
    }
    Ok(())
}

/// Functoriality, both structures, and the Frobenius squares.
pub fn check_frobenius(f: &FunctorData) -> Result<Report> {
    let start = Instant::now();
    if f.monoidal.is_none() || f.comonoidal.is_none() {
        return Err(Error::MissingStructure(format!(
            "{} needs both monoidal and comonoidal structure",
            f.name
        )));
    }
    let mut a = Audit::new();
    functoriality(f, &mut a)?;
    monoidal_entries(f, &mut a)?;
    comonoidal_entries(f, &mut a)?;
    frobenius_entries(f, &mut a)?;
    Ok(Report::new(
        format!("Frobenius structure of {}", f.name),
        scope_of(f),
        a,
        start,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Given,
    DerivedFromKappa,
    DerivedFromLambda,
    DerivedFromFrobenius,
}

/// `κ: SFX → FSX` and/or `λ: S′FX → FS′X`, components in the target category.
#[derive(Clone)]
pub struct AutonomyWitness {
    pub kappa: Option<ComponentMap>,
    pub lambda: Option<ComponentMap>,
    pub provenance: Provenance,
}

impl fmt::Debug for AutonomyWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AutonomyWitness {{ kappa: {}, lambda: {}, provenance: {:?} }}",
            self.kappa.is_some(),
            self.lambda.is_some(),
            self.provenance
        )
    }
}

impl AutonomyWitness {
    pub fn from_kappa(
        provenance: Provenance,
        k: impl Fn(Obj) -> CatResult<Mor> + Send + Sync + 'static,
    ) -> Self {
        AutonomyWitness {
            kappa: Some(Arc::new(k)),
            lambda: None,
            provenance,
        }
    }

    pub fn from_lambda(
        provenance: Provenance,
        l: impl Fn(Obj) -> CatResult<Mor> + Send + Sync + 'static,
    ) -> Self {
        AutonomyWitness {
            kappa: None,
            lambda: Some(Arc::new(l)),
            provenance,
        }
    }

    pub fn kappa(&self, x: Obj) -> Result<Mor> {
        let k = self
            .kappa
            .as_ref()
            .ok_or_else(|| Error::MissingStructure("witness has no kappa".into()))?;
        Ok(k(x)?)
    }

    pub fn lambda(&self, x: Obj) -> Result<Mor> {
        let l = self
            .lambda
            .as_ref()
            .ok_or_else(|| Error::MissingStructure("witness has no lambda".into()))?;
        Ok(l(x)?)
    }
}

/// Identifiers of the defining diagrams and alternative forms, per side.
struct AutIds {
    eq1: &'static str,
    eq2: &'static str,
    db: &'static str,
    ev: &'static str,
    db_ot: &'static str,
    ev_ot: &'static str,
    nat: &'static str,
    iso: &'static str,
    sym: &'static str,
}

const LEFT_IDS: AutIds = AutIds {
    eq1: "eq1:lax_pres_dual",
    eq2: "eq2:lax_pres_dual",
    db: "eq1:ka-db",
    ev: "eq2:ka-ev",
    db_ot: "ka-db-ot",
    ev_ot: "ka-ev-ot",
    nat: "naturality:kappa",
    iso: "kappa-invertible",
    sym: "κ",
};

const RIGHT_IDS: AutIds = AutIds {
    eq1: "eq1':lax_pres_dual",
    eq2: "eq2':lax_pres_dual",
    db: "eq1':ka-db",
    ev: "eq2':ka-ev",
    db_ot: "ka-db-ot'",
    ev_ot: "ka-ev-ot'",
    nat: "naturality:lambda",
    iso: "lambda-invertible",
    sym: "λ",
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AutonomyOptions {
    pub four_factor: bool,
}

impl Default for AutonomyOptions {
    fn default() -> Self {
        AutonomyOptions { four_factor: true }
    }
}

/// Left form of the autonomy diagrams, evaluated in `f.target`. The right
/// side is this template applied to `F^cop` with the reversed-tensor duals.
fn autonomy_template(
    f: &FunctorData,
    ls: &DualityAssignment,
    lt: &DualityAssignment,
    k: &ComponentMap,
    ids: &AutIds,
    opts: AutonomyOptions,
    a: &mut Audit,
) -> Result<()> {
    let (c, d) = (&f.source, &f.target);
    let env = env_for(f);
    let objs = c.objects();
    let ke =
        |x: Obj| -> Result<MorphExpr> { Ok(nm(format!("{}_{}", ids.sym, c.obj_label(x)), k(x)?)) };
    let fo = |x: Obj| -> Result<Obj> { Ok(f.obj(x)?) };
    let mut primary = [true, true];
    let mut alternative = [true, true];
    for &x in &objs {
        let inst = labels(c, &[x]);
        primary[0] &= a.equation(ids.eq1, inst.clone(), d, &env, || {
            let (fx, sx) = (fo(x)?, ls.dual(x)?);
            Ok((
                o([fm(ls.d_expr(x)?), f0e(f)?]),
                o([f2e(f, c, x, sx)?, t([id(fx), ke(x)?]), lt.d_expr(fx)?]),
            ))
        });
        primary[1] &= a.equation(ids.eq2, inst.clone(), d, &env, || {
            let (fx, sx) = (fo(x)?, ls.dual(x)?);
            Ok((
                o([f0e(f)?, lt.e_expr(fx)?]),
                o([fm(ls.e_expr(x)?), f2e(f, c, sx, x)?, t([ke(x)?, id(fx)])]),
            ))
        });
        let kx = k(x);
        let iso = kx.as_ref().map(|m| d.is_iso(m)).unwrap_or(false);
        a.fact(
            ids.iso,
            inst,
            iso,
            Some(format!("{} component has no inverse", ids.sym)),
        );
    }
    for (g, x, y) in typed_scope(c)? {
        a.equation(ids.nat, vec![c.mor_label(&g)], d, &env, || {
            let sfg = lt.transpose(&f.mor(&g)?)?;
            let sg = ls.transpose(&g)?;
            Ok((
                o([ke(x)?, nm(format!("SF({})", c.mor_label(&g)), sfg)]),
                o([fm(nm(format!("S({})", c.mor_label(&g)), sg)), ke(y)?]),
            ))
        });
    }
    for &x in &objs {
        for &y in &objs {
            alternative[0] &= a.equation(ids.db, labels(c, &[y, x]), d, &env, || {
                let (fx, fy, sx) = (fo(x)?, fo(y)?, ls.dual(x)?);
                let yx = c.tensor_obj(y, x)?;
                Ok((
                    fm(t([id(y), ls.d_expr(x)?])),
                    o([
                        f2e(f, c, yx, sx)?,
                        t([f2e(f, c, y, x)?, ke(x)?]),
                        t([id(fy), lt.d_expr(fx)?]),
                    ]),
                ))
            });
            alternative[1] &= a.equation(ids.ev, labels(c, &[x, y]), d, &env, || {
                let (fx, fy, sx) = (fo(x)?, fo(y)?, ls.dual(x)?);
                let xy = c.tensor_obj(x, y)?;
                Ok((
                    o([
                        fm(t([ls.e_expr(x)?, id(y)])),
                        f2e(f, c, sx, xy)?,
                        t([ke(x)?, f2e(f, c, x, y)?]),
                    ]),
                    t([lt.e_expr(fx)?, id(fy)]),
                ))
            });
            if opts.four_factor {
                a.equation(ids.db_ot, labels(c, &[x, y]), d, &env, || {
                    let (fx, fy, sx, sy) = (fo(x)?, fo(y)?, ls.dual(x)?, ls.dual(y)?);
                    let xy = c.tensor_obj(x, y)?;
                    let s2 = nm(
                        format!("s2_{},{}", c.obj_label(y), c.obj_label(x)),
                        ls.comparison(y, x)?,
                    );
                    Ok((
                        o([fm(ls.d_expr(xy)?), f0e(f)?]),
                        o([
                            fm(t([id(x), id(y), s2])),
                            f2_four(f, c, [x, y, sy, sx])?,
                            t([id(fx), id(fy), ke(y)?, ke(x)?]),
                            t([id(fx), lt.d_expr(fy)?, id(lt.dual(fx)?)]),
                            lt.d_expr(fx)?,
                        ]),
                    ))
                });
                a.equation(ids.ev_ot, labels(c, &[x, y]), d, &env, || {
                    let (fx, fy, sx, sy) = (fo(x)?, fo(y)?, ls.dual(x)?, ls.dual(y)?);
                    let fxy = d.tensor_obj(fx, fy)?;
                    let s2 = lt.comparison(fy, fx)?;
                    let s2inv = nm(
                        format!("s2_{},{}^-1", d.obj_label(fy), d.obj_label(fx)),
                        d.inverse(&s2, "target s2")?,
                    );
                    Ok((
                        o([f0e(f)?, lt.e_expr(fxy)?]),
                        o([
                            fm(ls.e_expr(y)?),
                            fm(t([id(sy), ls.e_expr(x)?, id(y)])),
                            f2_four(f, c, [sy, sx, x, y])?,
                            t([ke(y)?, ke(x)?, id(fx), id(fy)]),
                            t([s2inv, id(fx), id(fy)]),
                        ]),
                    ))
                });
            }
        }
    }
    for (i, which) in ["eq1", "eq2"].iter().enumerate() {
        a.fact(
            &format!(
                "alt-form-agreement:{}",
                if i == 0 { ids.eq1 } else { ids.eq2 }
            ),
            vec![(*which).into()],
            primary[i] == alternative[i],
            Some(format!(
                "primary verdict {} but alternative form verdict {}",
                primary[i], alternative[i]
            )),
        );
    }
    Ok(())
}

/// `f₂⁴ = f₂ ∘ (f₂ ⊗ 1) ∘ (f₂ ⊗ 1 ⊗ 1)`, left nested.
fn f2_four(f: &FunctorData, c: &CategoryView, [x, y, z, w]: [Obj; 4]) -> Result<MorphExpr> {
    let xy = c.tensor_obj(x, y)?;
    let xyz = c.tensor_obj(xy, z)?;
    Ok(o([
        f2e(f, c, xyz, w)?,
        t([f2e(f, c, xy, z)?, id(f.obj(w)?)]),
        t([f2e(f, c, x, y)?, id(f.obj(z)?), id(f.obj(w)?)]),
    ]))
}

/// Either side's autonomy diagrams. Duals are left duals for `Side::Left`
/// and right duals for `Side::Right`.
pub fn check_autonomous(
    f: &FunctorData,
    src: &DualityAssignment,
    tgt: &DualityAssignment,
    w: &AutonomyWitness,
    side: crate::duality::Side,
    opts: AutonomyOptions,
) -> Result<Report> {
    use crate::duality::Side;
    let start = Instant::now();
    if f.monoidal.is_none() {
        return Err(Error::MissingStructure(format!(
            "{} has no monoidal structure",
            f.name
        )));
    }
    if src.side != side || tgt.side != side {
        return Err(Error::Input(format!(
            "{side:?} autonomy needs {side:?} duals on both categories"
        )));
    }
    let mut a = Audit::new();
    match side {
        Side::Left => {
            let k = w
                .kappa
                .clone()
                .ok_or_else(|| Error::MissingStructure("witness has no kappa".into()))?;
            autonomy_template(f, src, tgt, &k, &LEFT_IDS, opts, &mut a)?;
        }
        Side::Right => {
            let l = w
                .lambda
                .clone()
                .ok_or_else(|| Error::MissingStructure("witness has no lambda".into()))?;
            autonomy_template(
                &f.cop(),
                &src.cop(),
                &tgt.cop(),
                &l,
                &RIGHT_IDS,
                opts,
                &mut a,
            )?;
        }
    }
    a.note(format!("witness provenance: {:?}", w.provenance));
    Ok(Report::new(
        format!("{side:?} autonomy of {}", f.name).to_lowercase(),
        scope_of(f),
        a,
        start,
    ))
}

fn nat_ids(flavor: Flavor) -> &'static str {
    match flavor {
        Flavor::Plain => "naturality",
        Flavor::Monoidal => "lax-nat",
        Flavor::Comonoidal => "lax-nat:dual",
        Flavor::MonoidalComonoidal => "lax-colax",
        Flavor::ComonoidalMonoidal => "comonoidal-monoidal",
    }
}

/// Naturality and the flavor conditions, evaluated in the transformation's category.
pub fn check_nat_flavor(tr: &NatTransfData) -> Result<Report> {
    let start = Instant::now();
    let (f, g) = (&tr.source, &tr.target);
    let v = tr.category().clone();
    let c = f.source.clone();
    let need = |fun: &FunctorData, mono: bool| -> Result<()> {
        let present = if mono {
            fun.monoidal.is_some()
        } else {
            fun.comonoidal.is_some()
        };
        if present {
            Ok(())
        } else {
            Err(Error::MissingStructure(format!(
                "{} needs {} structure on {}",
                tr.name,
                if mono { "monoidal" } else { "comonoidal" },
                fun.name
            )))
        }
    };
    match tr.flavor {
        Flavor::Plain => {}
        Flavor::Monoidal => {
            need(f, true)?;
            need(g, true)?
        }
        Flavor::Comonoidal => {
            need(f, false)?;
            need(g, false)?
        }
        Flavor::MonoidalComonoidal => {
            need(f, true)?;
            need(g, false)?
        }
        Flavor::ComonoidalMonoidal => {
            need(f, false)?;
            need(g, true)?
        }
    }
    let env = Env::new().with_functor_as("F", f).with_functor_as("G", g);
    let ae = |x: Obj| -> Result<MorphExpr> {
        Ok(nm(
            format!("{}_{}", tr.name, c.obj_label(x)),
            tr.component(x)?,
        ))
    };
    let mut a = Audit::new();
    for (h, x, y) in typed_scope(&c)? {
        a.equation("naturality", vec![c.mor_label(&h)], &v, &env, || {
            let he = nm(c.mor_label(&h), h.clone());
            Ok((
                o([ae(y)?, MorphExpr::fmap("F", he.clone())]),
                o([MorphExpr::fmap("G", he), ae(x)?]),
            ))
        });
    }
    let objs = c.objects();
    let u = c.unit();
    let eid = nat_ids(tr.flavor);
    let s2 = |fun: &FunctorData, x: Obj, y: Obj, mono: bool| -> Result<MorphExpr> {
        let (m, tag) = if mono {
            (fun.f2(x, y)?, "2")
        } else {
            (fun.cf2(x, y)?, "₂")
        };
        Ok(nm(
            format!("{}{}_{},{}", fun.name, tag, c.obj_label(x), c.obj_label(y)),
            m,
        ))
    };
    let s0 = |fun: &FunctorData, mono: bool| -> Result<MorphExpr> {
        let m = if mono { fun.f0()? } else { fun.cf0()? };
        Ok(nm(
            format!("{}{}", fun.name, if mono { "0" } else { "₀" }),
            m,
        ))
    };
    if tr.flavor != Flavor::Plain {
        for &x in &objs {
            for &y in &objs {
                a.equation(eid, labels(&c, &[x, y]), &v, &env, || {
                    let xy = c.tensor_obj(x, y)?;
                    let aa = t([ae(x)?, ae(y)?]);
                    Ok(match tr.flavor {
                        Flavor::Monoidal => (
                            o([ae(xy)?, s2(f, x, y, true)?]),
                            o([s2(g, x, y, true)?, aa]),
                        ),
                        Flavor::Comonoidal => (
                            o([s2(g, x, y, false)?, ae(xy)?]),
                            o([aa, s2(f, x, y, false)?]),
                        ),
                        Flavor::MonoidalComonoidal => {
                            (o([s2(g, x, y, false)?, ae(xy)?, s2(f, x, y, true)?]), aa)
                        }
                        Flavor::ComonoidalMonoidal => {
                            (ae(xy)?, o([s2(g, x, y, true)?, aa, s2(f, x, y, false)?]))
                        }
                        Flavor::Plain => unreachable!(),
                    })
                });
            }
        }
        a.equation(eid, vec!["unit".into()], &v, &env, || {
            Ok(match tr.flavor {
                Flavor::Monoidal => (o([ae(u)?, s0(f, true)?]), s0(g, true)?),
                Flavor::Comonoidal => (o([s0(g, false)?, ae(u)?]), s0(f, false)?),
                Flavor::MonoidalComonoidal => {
                    (o([s0(g, false)?, ae(u)?, s0(f, true)?]), id(v.unit()))
                }
                Flavor::ComonoidalMonoidal => (ae(u)?, o([s0(g, true)?, s0(f, false)?])),
                Flavor::Plain => unreachable!(),
            })
        });
    }
    Ok(Report::new(
        format!("{} ({:?})", tr.name, tr.flavor),
        vec![c.scope_statement(), v.scope_statement()],
        a,
        start,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::TableCategory;

    #[test]
    fn identity_functor_is_frobenius() {
        let c = CategoryView::new(TableCategory::discrete_group(4));
        let f = FunctorData::identity(&c);
        let r = check_frobenius(&f).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        assert!(r.holds("eq1:Frob") && r.holds("lax-functor2") && r.holds("colax_functor2"));
    }

    #[test]
    fn missing_structure_is_an_error() {
        let c = CategoryView::new(TableCategory::discrete_group(2));
        let f = FunctorData::identity(&c).without_comonoidal();
        assert!(matches!(
            check_comonoidal(&f),
            Err(Error::MissingStructure(_))
        ));
        assert!(matches!(
            check_frobenius(&f),
            Err(Error::MissingStructure(_))
        ));
    }

    #[test]
    fn thin_identity_on_poset_is_strong() {
        let c = CategoryView::new(TableCategory::truncated_nat(4));
        let f = FunctorData::thin("id", c.clone(), c.clone(), Ok);
        let f = f.clone().with_monoidal(f.thin_monoidal());
        let f = f.clone().with_comonoidal(f.thin_comonoidal());
        assert!(check_frobenius(&f).unwrap().passed());
    }

    #[test]
    fn identity_transformation_is_monoidal_comonoidal() {
        let c = CategoryView::new(TableCategory::discrete_group(3));
        let f = FunctorData::identity(&c);
        let cc = c.clone();
        let tr = NatTransfData::new("1", f.clone(), f, Flavor::MonoidalComonoidal, move |x| {
            cc.identity(x)
        });
        assert!(check_nat_flavor(&tr).unwrap().passed());
    }
}
