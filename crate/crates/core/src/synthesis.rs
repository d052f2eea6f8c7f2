//! From Frobenius structure to autonomy and back: κ from `(f₂, F₂)`, the
//! mates κ ↔ λ, the common composites σ and τ, the synthesized comonoidal
//! structure, and the six-way equivalence for monoidal functors.

use std::collections::HashMap;
use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::cat::{CategoryView, Mor, Obj};
use crate::duality::{build_duality_functor, AdjointEquivalence, Side};
use crate::error::{Error, Result};
use crate::expr::{eval, o, t, Env, MorphExpr};
use crate::functor::{cat, ComponentMap, Flavor, FunctorData, NatTransfData, Structure};
use crate::report::{Audit, Report};
use crate::structures::{
    check_autonomous, check_frobenius, check_monoidal, check_nat_flavor, comonoidal_entries,
    frobenius_entries, AutonomyOptions, AutonomyWitness, Provenance,
};

fn nm(label: impl Into<String>, m: Mor) -> MorphExpr {
    MorphExpr::named(label, m)
}

fn id(x: Obj) -> MorphExpr {
    MorphExpr::id(x)
}

fn check_pair(f: &FunctorData, ac: &AdjointEquivalence, ad: &AdjointEquivalence) -> Result<()> {
    if ac.category() != &f.source || ad.category() != &f.target {
        return Err(Error::Input(format!(
            "duals do not live on the source and target of {}",
            f.name
        )));
    }
    Ok(())
}

/// `κ_X = (e_FX⊗1)(1⊗F₂_{X,SX})(1⊗F d_X)(1⊗f₀)`, checked against the
/// composite `(F₀⊗1)(F e_X⊗1)(f₂_{SX,X}⊗1)(1⊗d_FX)` as a two-sided inverse.
pub fn kappa_from_frobenius(
    f: &FunctorData,
    ac: &AdjointEquivalence,
    ad: &AdjointEquivalence,
) -> Result<AutonomyWitness> {
    check_pair(f, ac, ad)?;
    let (lc, ld, d) = (ac.left.clone(), ad.left.clone(), f.target.clone());
    let env = Env::new().with_functor_as("F", f);
    let kexpr = {
        let (f, lc, ld) = (f.clone(), lc.clone(), ld.clone());
        move |x: Obj| -> Result<MorphExpr> {
            let fx = f.obj(x)?;
            let sfx = ld.dual(fx)?;
            let sx = lc.dual(x)?;
            Ok(o([
                t([ld.e_expr(fx)?, id(f.obj(sx)?)]),
                t([id(sfx), nm("F2", f.cf2(x, sx)?)]),
                t([id(sfx), MorphExpr::fmap("F", lc.d_expr(x)?)]),
                t([id(sfx), nm("f0", f.f0()?)]),
            ]))
        }
    };
    let kinv = |x: Obj| -> Result<MorphExpr> {
        let fx = f.obj(x)?;
        let sx = lc.dual(x)?;
        let sfx = ld.dual(fx)?;
        Ok(o([
            t([nm("F0", f.cf0()?), id(sfx)]),
            t([MorphExpr::fmap("F", lc.e_expr(x)?), id(sfx)]),
            t([nm("f2", f.f2(sx, x)?), id(sfx)]),
            t([id(f.obj(sx)?), ld.d_expr(fx)?]),
        ]))
    };
    for x in f.source.objects() {
        let k = eval(&d, &kexpr(x)?, &env)?;
        let ki = eval(&d, &kinv(x)?, &env)?;
        let label = f.source.obj_label(x);
        let (a, b) = (d.dom(&k)?, d.cod(&k)?);
        let ok = d.compose(&ki, &k).ok() == Some(d.identity(a)?)
            && d.compose(&k, &ki).ok() == Some(d.identity(b)?);
        if !ok {
            return Err(Error::InverseFailure {
                object: label,
                detail: format!(
                    "κ = {} and candidate inverse {} do not compose to identities",
                    d.mor_label(&k),
                    d.mor_label(&ki)
                ),
            });
        }
    }
    let (fc, dc) = (f.clone(), d);
    Ok(AutonomyWitness::from_kappa(
        Provenance::DerivedFromFrobenius,
        move |x| {
            let env = Env::new().with_functor_as("F", &fc);
            eval(&dc, &kexpr(x).map_err(cat)?, &env).map_err(cat)
        },
    ))
}

/// The mate `λ_X = α⁻¹_{FS′X} ∘ S′(κ_{S′X}) ∘ S′(F(β⁻¹_X))`.
pub fn mate_lambda(
    f: &FunctorData,
    kappa: ComponentMap,
    ac: &AdjointEquivalence,
    ad: &AdjointEquivalence,
) -> ComponentMap {
    let (f, ac, ad) = (f.clone(), ac.clone(), ad.clone());
    Arc::new(move |x| {
        (|| -> Result<Mor> {
            let d = &f.target;
            let spx = ac.sp(x)?;
            let fb = f.mor(&ac.beta_inv(x)?)?;
            let k = kappa(spx)?;
            let a = ad.alpha_inv(f.obj(spx)?)?;
            Ok(d.seq(&[ad.transpose_right(&fb)?, ad.transpose_right(&k)?, a])?)
        })()
        .map_err(cat)
    })
}

/// The mate `κ_X = β⁻¹_{FSX} ∘ S(λ_{SX}) ∘ S(F(α⁻¹_X))`.
pub fn mate_kappa(
    f: &FunctorData,
    lambda: ComponentMap,
    ac: &AdjointEquivalence,
    ad: &AdjointEquivalence,
) -> ComponentMap {
    let (f, ac, ad) = (f.clone(), ac.clone(), ad.clone());
    Arc::new(move |x| {
        (|| -> Result<Mor> {
            let d = &f.target;
            let sx = ac.s(x)?;
            let fa = f.mor(&ac.alpha_inv(x)?)?;
            let l = lambda(sx)?;
            let b = ad.beta_inv(f.obj(sx)?)?;
            Ok(d.seq(&[ad.transpose(&fa)?, ad.transpose(&l)?, b])?)
        })()
        .map_err(cat)
    })
}

/// Both κ and λ, deriving the missing one as a mate.
pub fn complete_witness(
    w: &AutonomyWitness,
    f: &FunctorData,
    ac: &AdjointEquivalence,
    ad: &AdjointEquivalence,
) -> Result<AutonomyWitness> {
    let (kappa, lambda) = match (&w.kappa, &w.lambda) {
        (Some(k), Some(l)) => (k.clone(), l.clone()),
        (Some(k), None) => (k.clone(), mate_lambda(f, k.clone(), ac, ad)),
        (None, Some(l)) => (mate_kappa(f, l.clone(), ac, ad), l.clone()),
        (None, None) => {
            return Err(Error::MissingStructure(
                "witness has neither kappa nor lambda".into(),
            ))
        }
    };
    Ok(AutonomyWitness {
        kappa: Some(kappa),
        lambda: Some(lambda),
        provenance: w.provenance,
    })
}

/// σ, τ and their audit.
#[derive(Clone)]
pub struct SynthesisOutputs {
    pub sigma: ComponentMap,
    pub tau: ComponentMap,
    pub witness: AutonomyWitness,
    pub audit: Report,
}

impl SynthesisOutputs {
    pub fn sigma(&self, x: Obj) -> Result<Mor> {
        Ok((self.sigma)(x)?)
    }

    pub fn tau(&self, x: Obj) -> Result<Mor> {
        Ok((self.tau)(x)?)
    }
}

/// `σ = α⁻¹F ∘ S′κ` and `τ = Fβ⁻¹ ∘ κS′`, each compared with its second
/// leg `Fα⁻¹ ∘ λS`, resp. `β⁻¹F ∘ Sλ`.
pub fn build_sigma_tau(
    f: &FunctorData,
    w: &AutonomyWitness,
    ac: &AdjointEquivalence,
    ad: &AdjointEquivalence,
) -> Result<SynthesisOutputs> {
    check_pair(f, ac, ad)?;
    let start = Instant::now();
    let w = complete_witness(w, f, ac, ad)?;
    let (k, l) = (
        w.kappa.clone().expect("completed"),
        w.lambda.clone().expect("completed"),
    );
    let d = f.target.clone();
    let sigma_legs = {
        let (f, ac, ad, k, l) = (f.clone(), ac.clone(), ad.clone(), k.clone(), l.clone());
        move |x: Obj| -> Result<(Mor, Mor)> {
            let d = &f.target;
            let one = d.compose(&ad.alpha_inv(f.obj(x)?)?, &ad.transpose_right(&k(x)?)?)?;
            let two = d.compose(&f.mor(&ac.alpha_inv(x)?)?, &l(ac.s(x)?)?)?;
            Ok((one, two))
        }
    };
    let tau_legs = {
        let (f, ac, ad, k, l) = (f.clone(), ac.clone(), ad.clone(), k.clone(), l.clone());
        move |x: Obj| -> Result<(Mor, Mor)> {
            let d = &f.target;
            let one = d.compose(&f.mor(&ac.beta_inv(x)?)?, &k(ac.sp(x)?)?)?;
            let two = d.compose(&ad.beta_inv(f.obj(x)?)?, &ad.transpose(&l(x)?)?)?;
            Ok((one, two))
        }
    };
    let mut a = Audit::new();
    for x in f.source.objects() {
        let inst = vec![f.source.obj_label(x)];
        for (id_, legs) in [
            ("eq:ka-la:sigma", sigma_legs(x)?),
            ("eq:ka-la:tau", tau_legs(x)?),
        ] {
            if legs.0 != legs.1 {
                return Err(Error::CommonCompositeMismatch(format!(
                    "{id_} at {}: {} vs {}",
                    inst[0],
                    d.mor_label(&legs.0),
                    d.mor_label(&legs.1)
                )));
            }
            a.fact(id_, inst.clone(), true, None);
        }
    }
    let sigma: ComponentMap = Arc::new(move |x| sigma_legs(x).map(|p| p.0).map_err(cat));
    let tau: ComponentMap = Arc::new(move |x| tau_legs(x).map(|p| p.0).map_err(cat));
    let audit = Report::new(
        format!("common composites for {}", f.name),
        vec![f.source.scope_statement()],
        a,
        start,
    );
    Ok(SynthesisOutputs {
        sigma,
        tau,
        witness: w,
        audit,
    })
}

fn invert(d: &CategoryView, m: Mor, what: String) -> Result<Mor> {
    d.try_inverse(&m).ok_or(Error::NotInvertible(what))
}

/// The σ-route structure: `F₂ = (σ⊗σ) ∘ s′₂⁻¹ ∘ S′f₂ ∘ S′F s₂ ∘ σ⁻¹`, `F₀ = s′₀⁻¹ ∘ S′f₀ ∘ S′F s₀ ∘ σ⁻¹`.
pub fn sigma_structure(
    f: &FunctorData,
    so: &SynthesisOutputs,
    ac: &AdjointEquivalence,
    ad: &AdjointEquivalence,
) -> Structure {
    let (f2, so2, ac2, ad2) = (f.clone(), so.clone(), ac.clone(), ad.clone());
    let two = move |x: Obj, y: Obj| -> Result<Mor> {
        let (f, so, ac, ad) = (&f2, &so2, &ac2, &ad2);
        let (c, d) = (&f.source, &f.target);
        let xy = c.tensor_obj(x, y)?;
        let (sx, sy) = (ac.s(x)?, ac.s(y)?);
        let sigma_inv = invert(d, so.sigma(xy)?, format!("σ at {}", c.obj_label(xy)))?;
        let sfs2 = ad.transpose_right(&f.mor(&ac.s2(y, x)?)?)?;
        let sf2 = ad.transpose_right(&f.f2(sy, sx)?)?;
        let s2p = ad.right.comparison(f.obj(sx)?, f.obj(sy)?)?;
        let s2p_inv = invert(d, s2p, "s'2".into())?;
        let ss = d.tensor(&so.sigma(x)?, &so.sigma(y)?)?;
        Ok(d.seq(&[sigma_inv, sfs2, sf2, s2p_inv, ss])?)
    };
    let zero = (|| -> Result<Mor> {
        let (c, d) = (&f.source, &f.target);
        let u = c.unit();
        let sigma_inv = invert(d, so.sigma(u)?, "σ at the unit".into())?;
        let sfs0 = ad.transpose_right(&f.mor(&ac.s0()?)?)?;
        let sf0 = ad.transpose_right(&f.f0()?)?;
        let s0p_inv = invert(d, ad.right.comparison_unit()?, "s'0".into())?;
        Ok(d.seq(&[sigma_inv, sfs0, sf0, s0p_inv])?)
    })();
    Structure::new(move |x, y| two(x, y).map_err(cat), zero.map_err(cat))
}

/// The τ-route structure: `F₂ = (τ⊗τ) ∘ s₂⁻¹ ∘ Sf₂ ∘ SF s′₂ ∘ τ⁻¹`, `F₀ = s₀⁻¹ ∘ Sf₀ ∘ SF s′₀ ∘ τ⁻¹`.
pub fn tau_structure(
    f: &FunctorData,
    so: &SynthesisOutputs,
    ac: &AdjointEquivalence,
    ad: &AdjointEquivalence,
) -> Structure {
    let (f2, so2, ac2, ad2) = (f.clone(), so.clone(), ac.clone(), ad.clone());
    let two = move |x: Obj, y: Obj| -> Result<Mor> {
        let (f, so, ac, ad) = (&f2, &so2, &ac2, &ad2);
        let (c, d) = (&f.source, &f.target);
        let xy = c.tensor_obj(x, y)?;
        let (spx, spy) = (ac.sp(x)?, ac.sp(y)?);
        let tau_inv = invert(d, so.tau(xy)?, format!("τ at {}", c.obj_label(xy)))?;
        let sfs2 = ad.transpose(&f.mor(&ac.right.comparison(y, x)?)?)?;
        let sf2 = ad.transpose(&f.f2(spy, spx)?)?;
        let s2 = ad.left.comparison(f.obj(spx)?, f.obj(spy)?)?;
        let s2_inv = invert(d, s2, "s2".into())?;
        let tt = d.tensor(&so.tau(x)?, &so.tau(y)?)?;
        Ok(d.seq(&[tau_inv, sfs2, sf2, s2_inv, tt])?)
    };
    let zero = (|| -> Result<Mor> {
        let (c, d) = (&f.source, &f.target);
        let u = c.unit();
        let tau_inv = invert(d, so.tau(u)?, "τ at the unit".into())?;
        let sfs0 = ad.transpose(&f.mor(&ac.right.comparison_unit()?)?)?;
        let sf0 = ad.transpose(&f.f0()?)?;
        let s0_inv = invert(d, ad.left.comparison_unit()?, "s0".into())?;
        Ok(d.seq(&[tau_inv, sfs0, sf0, s0_inv])?)
    })();
    Structure::new(move |x, y| two(x, y).map_err(cat), zero.map_err(cat))
}

/// The synthesized structure with its audit: both routes agree and the
/// completed functor passes the Frobenius check.
#[derive(Clone)]
pub struct Synthesized {
    pub structure: Structure,
    pub audit: Report,
    /// Number of Frobenius completions found by exhaustive search, when feasible.
    pub completions: Option<usize>,
}

impl std::fmt::Debug for Synthesized {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Synthesized {{ audit: {}, completions: {:?} }}",
            self.audit.title, self.completions
        )
    }
}

pub fn synthesize_comonoidal(
    f: &FunctorData,
    so: &SynthesisOutputs,
    ac: &AdjointEquivalence,
    ad: &AdjointEquivalence,
) -> Result<Synthesized> {
    check_pair(f, ac, ad)?;
    let start = Instant::now();
    let (c, d) = (&f.source, &f.target);
    for x in c.objects() {
        invert(d, so.sigma(x)?, format!("σ at {}", c.obj_label(x)))?;
    }
    let sig = sigma_structure(f, so, ac, ad);
    let tau = tau_structure(f, so, ac, ad);
    let mut a = Audit::new();
    let objs = c.objects();
    for &x in &objs {
        for &y in &objs {
            let (p, q) = ((sig.two)(x, y)?, (tau.two)(x, y)?);
            let inst = vec![c.obj_label(x), c.obj_label(y)];
            if p != q {
                return Err(Error::StructuresDisagree(format!(
                    "F2 at ({}, {}): {} vs {}",
                    inst[0],
                    inst[1],
                    d.mor_label(&p),
                    d.mor_label(&q)
                )));
            }
            a.fact("sigma-route=tau-route", inst, true, None);
        }
    }
    let (p, q) = (sig.zero.clone()?, tau.zero.clone()?);
    if p != q {
        return Err(Error::StructuresDisagree(format!(
            "F0: {} vs {}",
            d.mor_label(&p),
            d.mor_label(&q)
        )));
    }
    a.fact("sigma-route=tau-route", vec!["unit".into()], true, None);
    if let Some(inv) = strong_inverse(f) {
        for &x in &objs {
            for &y in &objs {
                let ok = (inv.two)(x, y).ok() == Some((sig.two)(x, y)?);
                a.fact(
                    "strong:F2=f2^-1",
                    vec![c.obj_label(x), c.obj_label(y)],
                    ok,
                    Some("synthesized F2 is not f2^-1".into()),
                );
            }
        }
        let ok = inv.zero.ok() == Some(sig.zero.clone()?);
        a.fact(
            "strong:F2=f2^-1",
            vec!["unit".into()],
            ok,
            Some("synthesized F0 is not f0^-1".into()),
        );
    }
    let completed = f
        .clone()
        .with_comonoidal(sig.clone())
        .renamed(format!("{}+synth", f.name));
    let frob = check_frobenius(&completed)?;
    let first_fail = frob
        .failures()
        .next()
        .map(|e| (e.equation_id.clone(), e.instantiation.join(", ")));
    a.absorb(frob);
    if let Some((eq, inst)) = first_fail {
        return Err(Error::CoherenceFailure {
            equation: eq,
            detail: format!("synthesized structure fails at [{inst}]"),
        });
    }
    let completions = search_frobenius_completions(f, 4096);
    if let Some(n) = completions {
        a.fact(
            "uniqueness-search",
            vec![format!("{n} completion(s)")],
            n == 1,
            Some(format!("exhaustive search found {n} Frobenius completions")),
        );
    } else {
        a.note("uniqueness search skipped: candidate space too large or not a table");
    }
    let audit = Report::new(
        format!("synthesized comonoidal structure for {}", f.name),
        vec![c.scope_statement(), d.scope_statement()],
        a,
        start,
    );
    Ok(Synthesized {
        structure: sig,
        audit,
        completions,
    })
}

/// `(f₂⁻¹, f₀⁻¹)` when every component on scope is invertible.
pub fn strong_inverse(f: &FunctorData) -> Option<Structure> {
    let (c, d) = (&f.source, &f.target);
    for x in c.objects() {
        for y in c.objects() {
            if !d.is_iso(&f.f2(x, y).ok()?) {
                return None;
            }
        }
    }
    if !d.is_iso(&f.f0().ok()?) {
        return None;
    }
    f.inverse_comonoidal().ok()
}

/// Count comonoidal structures completing `f` to a Frobenius functor by
/// enumerating all candidate families; `None` unless the target is a table
/// and the family count is at most `cap`.
pub fn search_frobenius_completions(f: &FunctorData, cap: usize) -> Option<usize> {
    let (c, d) = (&f.source, &f.target);
    if !d.is_table() {
        return None;
    }
    let objs = c.objects();
    let mut slots: Vec<(Option<(Obj, Obj)>, Vec<Mor>)> = Vec::new();
    for &x in &objs {
        for &y in &objs {
            let a = f.obj(c.tensor_obj(x, y).ok()?).ok()?;
            let b = d.tensor_obj(f.obj(x).ok()?, f.obj(y).ok()?).ok()?;
            slots.push((Some((x, y)), d.hom(a, b)?));
        }
    }
    slots.push((None, d.hom(f.obj(c.unit()).ok()?, d.unit())?));
    let mut total: usize = 1;
    for (_, h) in &slots {
        total = total.checked_mul(h.len())?;
        if total > cap {
            return None;
        }
    }
    let mut count = 0;
    for mut idx in 0..total {
        let mut two = HashMap::new();
        let mut zero = None;
        for (key, h) in &slots {
            let m = h[idx % h.len()].clone();
            idx /= h.len();
            match key {
                Some(k) => {
                    two.insert(*k, m);
                }
                None => zero = Some(m),
            }
        }
        let zero = zero.expect("unit slot");
        let s = Structure::new(
            move |x, y| {
                two.get(&(x, y))
                    .cloned()
                    .ok_or(crate::cat::CatError::UnknownObject(x))
            },
            Ok(zero),
        );
        let g = f.clone().with_comonoidal(s);
        let mut a = Audit::new();
        if comonoidal_entries(&g, &mut a).is_ok()
            && frobenius_entries(&g, &mut a).is_ok()
            && a.all_pass()
        {
            count += 1;
        }
    }
    Some(count)
}

/// The six conditions, in order.
pub const COR_FROB_CONDITIONS: [&str; 6] = [
    "frobenius-extendable",
    "autonomous",
    "kappa-monoidal-comonoidal-iso",
    "lambda-comonoidal-monoidal-iso",
    "sigma-comonoidal-monoidal-iso",
    "tau-monoidal-comonoidal-iso",
];

/// The stage at which an input was rejected before the conditions were evaluated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gate {
    pub stage: String,
    pub equation_id: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EquivalenceMatrix {
    pub conditions: Vec<String>,
    pub verdicts: Option<Vec<bool>>,
    pub gate: Option<Gate>,
    /// Left and right autonomy verdicts.
    pub left_right: Option<(bool, bool)>,
    /// Autonomy, κ monoidal-comonoidal, λ comonoidal-monoidal.
    pub lax_colax: Option<[bool; 3]>,
    pub report: Report,
}

impl EquivalenceMatrix {
    pub fn unanimous(&self) -> bool {
        match &self.verdicts {
            Some(v) => v.iter().all(|&b| b == v[0]),
            None => false,
        }
    }

    pub fn all_true(&self) -> bool {
        self.verdicts.as_ref().is_some_and(|v| v.iter().all(|&b| b))
    }

    pub fn agreement(&self) -> bool {
        self.unanimous()
            && self.left_right.is_some_and(|(l, r)| l == r)
            && self.lax_colax.is_some_and(|v| v.iter().all(|&b| b == v[0]))
    }
}

/// κ derived from the comonoidal structure when present, else the unique
/// arrows `SFX → FSX` of a table target.
pub fn default_kappa(
    f: &FunctorData,
    ac: &AdjointEquivalence,
    ad: &AdjointEquivalence,
) -> Option<AutonomyWitness> {
    if f.comonoidal.is_some() {
        if let Ok(w) = kappa_from_frobenius(f, ac, ad) {
            return Some(w);
        }
    }
    if !f.target.is_table() {
        return None;
    }
    let (ff, ac2, ad2) = (f.clone(), ac.clone(), ad.clone());
    Some(AutonomyWitness::from_kappa(Provenance::Given, move |x| {
        let a = ad2.s(ff.obj(x)?).map_err(cat)?;
        let b = ff.obj(ac2.s(x).map_err(cat)?)?;
        crate::functor::unique(&ff.target, a, b, "κ search")
    }))
}

/// κ as a transformation `F^op S ⇒ SF` in `D^{op,cop}`.
pub fn kappa_transformation(
    f: &FunctorData,
    k: ComponentMap,
    ac: &AdjointEquivalence,
    ad: &AdjointEquivalence,
    flavor: Flavor,
) -> Result<NatTransfData> {
    let ar = Around::new(f, ac, ad)?;
    Ok(NatTransfData::new(
        "κ",
        ar.fop_s,
        ar.s_f,
        flavor,
        move |x| k(x),
    ))
}

/// λ as a transformation `S′F^op ⇒ FS′` in `D`.
pub fn lambda_transformation(
    f: &FunctorData,
    l: ComponentMap,
    ac: &AdjointEquivalence,
    ad: &AdjointEquivalence,
    flavor: Flavor,
) -> Result<NatTransfData> {
    let ar = Around::new(f, ac, ad)?;
    Ok(NatTransfData::new(
        "λ",
        ar.sp_fop,
        ar.f_sp,
        flavor,
        move |x| l(x),
    ))
}

/// Functors around a monoidal `F` used to state the transformation conditions.
struct Around {
    /// `F^op S: C → D^{op,cop}` (comonoidal).
    fop_s: FunctorData,
    /// `SF: C → D^{op,cop}` (monoidal).
    s_f: FunctorData,
    /// `S′F^op: C^{op,cop} → D` (comonoidal).
    sp_fop: FunctorData,
    /// `FS′: C^{op,cop} → D` (monoidal).
    f_sp: FunctorData,
    /// `S′F^op S: C → D` (comonoidal).
    sp_fop_s: FunctorData,
    /// `F^op: C^{op,cop} → D^{op,cop}` (comonoidal).
    fop: FunctorData,
    /// `SFS′: C^{op,cop} → D^{op,cop}` (monoidal).
    s_f_sp: FunctorData,
}

impl Around {
    fn new(f: &FunctorData, ac: &AdjointEquivalence, ad: &AdjointEquivalence) -> Result<Around> {
        let sc = build_duality_functor(&ac.left)?;
        let spc = build_duality_functor(&ac.right)?;
        let sd = build_duality_functor(&ad.left)?;
        let spd = build_duality_functor(&ad.right)?;
        let fop = f.op().cop().renamed(format!("{}^op", f.name));
        Ok(Around {
            fop_s: sc.then(&fop)?,
            s_f: f.then(&sd)?,
            sp_fop: fop.then(&spd)?,
            f_sp: spc.then(f)?,
            sp_fop_s: sc.then(&fop)?.then(&spd)?,
            s_f_sp: spc.then(f)?.then(&sd)?,
            fop,
        })
    }
}

fn all_iso(c: &CategoryView, d: &CategoryView, k: &ComponentMap) -> bool {
    c.objects()
        .into_iter()
        .all(|x| k(x).map(|m| d.is_iso(&m)).unwrap_or(false))
}

fn gate_from(stage: &str, r: &Report) -> Option<Gate> {
    r.failures().next().map(|e| Gate {
        stage: stage.into(),
        equation_id: e.equation_id.clone(),
        detail: e.instantiation.join(", "),
    })
}

/// Evaluate the six conditions for `f` and the candidate witnesses.
/// `f` must pass the monoidal check and some candidate must be a natural
/// isomorphism; otherwise the matrix records the rejecting gate.
pub fn adjudicate_cor_frob(
    f: &FunctorData,
    ac: &AdjointEquivalence,
    ad: &AdjointEquivalence,
    candidates: &[AutonomyWitness],
) -> Result<EquivalenceMatrix> {
    check_pair(f, ac, ad)?;
    let start = Instant::now();
    let conditions: Vec<String> = COR_FROB_CONDITIONS.iter().map(|s| s.to_string()).collect();
    let (c, d) = (&f.source, &f.target);
    let scope = vec![c.scope_statement(), d.scope_statement()];
    let mut a = Audit::new();
    let gated = |gate: Gate, a: Audit| EquivalenceMatrix {
        conditions: conditions.clone(),
        verdicts: None,
        gate: Some(gate),
        left_right: None,
        lax_colax: None,
        report: Report::new(
            format!("cor:frob adjudication for {}", f.name),
            scope.clone(),
            a,
            start,
        ),
    };
    let mono = check_monoidal(f)?;
    if let Some(g) = gate_from("check_monoidal", &mono) {
        a.absorb(mono);
        return Ok(gated(g, a));
    }
    let mut cands: Vec<AutonomyWitness> = candidates.to_vec();
    if cands.is_empty() {
        if let Some(w) = default_kappa(f, ac, ad) {
            if w.provenance == Provenance::Given {
                a.note("candidate κ taken as the unique arrows SFX → FSX of the table target");
            }
            cands.push(w);
        }
    }
    if cands.is_empty() {
        return Ok(gated(
            Gate {
                stage: "candidates".into(),
                equation_id: "kappa".into(),
                detail: "no candidate κ".into(),
            },
            a,
        ));
    }
    let around = Around::new(f, ac, ad)?;
    let opts = AutonomyOptions { four_factor: false };
    let mut best: Option<(Vec<bool>, (bool, bool), [bool; 3])> = None;
    let mut gate: Option<Gate> = None;
    for (i, w) in cands.iter().enumerate() {
        let w = complete_witness(w, f, ac, ad)?;
        let (k, l) = (
            w.kappa.clone().expect("completed"),
            w.lambda.clone().expect("completed"),
        );
        let tag = format!("candidate {i}");
        if w.provenance == Provenance::DerivedFromFrobenius {
            a.note(format!("{tag}: κ derived from the comonoidal structure of the input; synthesis below uses only f2, f0 and κ"));
        }
        let kt = NatTransfData::new(
            "κ",
            around.fop_s.clone(),
            around.s_f.clone(),
            Flavor::ComonoidalMonoidal,
            {
                let k = k.clone();
                move |x| k(x)
            },
        );
        let nat = check_nat_flavor(&NatTransfData::new(
            "κ",
            around.fop_s.clone(),
            around.s_f.clone(),
            Flavor::Plain,
            {
                let k = k.clone();
                move |x| k(x)
            },
        ))?;
        let k_iso = all_iso(c, d, &k);
        if !nat.passed() || !k_iso {
            let g = gate_from("candidate natural isomorphism", &nat).unwrap_or(Gate {
                stage: "candidate natural isomorphism".into(),
                equation_id: "kappa-invertible".into(),
                detail: tag.clone(),
            });
            a.note(format!("{tag} rejected at {}: {}", g.stage, g.equation_id));
            gate.get_or_insert(g);
            continue;
        }
        let left = check_autonomous(f, &ac.left, &ad.left, &w, Side::Left, opts)?;
        let right = check_autonomous(f, &ac.right, &ad.right, &w, Side::Right, opts)?;
        let eq_agree = [
            ("eq1:lax_pres_dual", "eq1':lax_pres_dual"),
            ("eq2:lax_pres_dual", "eq2':lax_pres_dual"),
        ];
        for (lid, rid) in eq_agree {
            a.fact(
                "rem:leftaut=rightaut",
                vec![tag.clone(), lid.into()],
                left.holds(lid) == right.holds(rid),
                Some(format!(
                    "{lid} is {} but {rid} is {}",
                    left.holds(lid),
                    right.holds(rid)
                )),
            );
        }
        let (lv, rv) = (left.passed(), right.passed());
        let kappa_mc = check_nat_flavor(&kt)?.passed() && k_iso;
        let lt = NatTransfData::new(
            "λ",
            around.sp_fop.clone(),
            around.f_sp.clone(),
            Flavor::ComonoidalMonoidal,
            {
                let l = l.clone();
                move |x| l(x)
            },
        );
        let l_iso = all_iso(c, d, &l);
        let lambda_cm = check_nat_flavor(&lt)?.passed() && l_iso;
        let (sig_v, tau_v, frob_v) = match build_sigma_tau(f, &w, ac, ad) {
            Err(e) => {
                a.note(format!("{tag}: {e}"));
                (false, false, false)
            }
            Ok(so) => {
                let st = NatTransfData::new(
                    "σ",
                    around.sp_fop_s.clone(),
                    f.clone(),
                    Flavor::ComonoidalMonoidal,
                    {
                        let s = so.sigma.clone();
                        move |x| s(x)
                    },
                );
                let tt = NatTransfData::new(
                    "τ",
                    around.fop.clone(),
                    around.s_f_sp.clone(),
                    Flavor::ComonoidalMonoidal,
                    {
                        let s = so.tau.clone();
                        move |x| s(x)
                    },
                );
                let sig_v = check_nat_flavor(&st)?.passed() && all_iso(c, d, &so.sigma);
                let tau_v = check_nat_flavor(&tt)?.passed() && all_iso(c, d, &so.tau);
                let frob_v = match synthesize_comonoidal(f, &so, ac, ad) {
                    Ok(s) => {
                        a.note(format!(
                            "{tag}: synthesized structure passes the Frobenius check"
                        ));
                        if let Some(n) = s.completions {
                            a.note(format!(
                                "{tag}: exhaustive search found {n} Frobenius completion(s)"
                            ));
                        }
                        true
                    }
                    Err(e) => {
                        a.note(format!("{tag}: synthesis failed: {e}"));
                        false
                    }
                };
                (sig_v, tau_v, frob_v)
            }
        };
        let v = vec![frob_v, lv && rv, kappa_mc, lambda_cm, sig_v, tau_v];
        for (name, val) in conditions.iter().zip(&v) {
            a.fact(
                &format!("cor:frob:{name}"),
                vec![tag.clone()],
                *val,
                Some(format!("{name} is false")),
            );
        }
        a.fact(
            "rem:leftaut=rightaut",
            vec![tag.clone(), "verdict".into()],
            lv == rv,
            Some(format!("left {lv} right {rv}")),
        );
        let lc = [lv, kappa_mc, lambda_cm];
        a.fact(
            "prop:lax-colax",
            vec![tag.clone()],
            lc.iter().all(|&b| b == lc[0]),
            Some(format!("{lc:?}")),
        );
        let better = match &best {
            None => true,
            Some((bv, _, _)) => {
                v.iter().filter(|&&b| b).count() > bv.iter().filter(|&&b| b).count()
            }
        };
        if better {
            best = Some((v, (lv, rv), lc));
        }
    }
    let Some((v, lr, lc)) = best else {
        return Ok(gated(gate.expect("every candidate rejected"), a));
    };
    a.fact(
        "cor:frob:agreement",
        vec![],
        v.iter().all(|&b| b == v[0]),
        Some(format!("{v:?}")),
    );
    Ok(EquivalenceMatrix {
        conditions,
        verdicts: Some(v),
        gate: None,
        left_right: Some(lr),
        lax_colax: Some(lc),
        report: Report::new(
            format!("cor:frob adjudication for {}", f.name),
            scope,
            a,
            start,
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::TableCategory;
    use crate::duality::autonomous_structure;

    fn z4() -> CategoryView {
        CategoryView::new(TableCategory::discrete_group(4))
    }

    #[test]
    fn identity_kappa_is_identity_and_loop_closes() {
        let c = z4();
        let adj = autonomous_structure(&c).unwrap();
        let f = FunctorData::identity(&c);
        let w = kappa_from_frobenius(&f, &adj, &adj).unwrap();
        for x in c.objects() {
            assert_eq!(w.kappa(x).unwrap(), c.identity(adj.s(x).unwrap()).unwrap());
        }
        let so = build_sigma_tau(&f, &w, &adj, &adj).unwrap();
        let s = synthesize_comonoidal(&f, &so, &adj, &adj).unwrap();
        assert!(s.audit.passed(), "{}", s.audit.to_text());
        assert_eq!(s.completions, Some(1));
        for x in c.objects() {
            for y in c.objects() {
                assert_eq!((s.structure.two)(x, y).unwrap(), f.cf2(x, y).unwrap());
            }
        }
    }

    #[test]
    fn identity_on_z4_is_unanimous() {
        let c = z4();
        let adj = autonomous_structure(&c).unwrap();
        let f = FunctorData::identity(&c).without_comonoidal();
        let m = adjudicate_cor_frob(&f, &adj, &adj, &[]).unwrap();
        assert!(m.all_true() && m.agreement(), "{}", m.report.to_text());
    }

    #[test]
    fn mates_round_trip_on_identity() {
        let c = z4();
        let adj = autonomous_structure(&c).unwrap();
        let f = FunctorData::identity(&c);
        let w = kappa_from_frobenius(&f, &adj, &adj).unwrap();
        let l = mate_lambda(&f, w.kappa.clone().unwrap(), &adj, &adj);
        let k2 = mate_kappa(&f, l, &adj, &adj);
        for x in c.objects() {
            assert_eq!(k2(x).unwrap(), w.kappa(x).unwrap());
        }
    }
}
