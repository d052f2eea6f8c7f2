//! Left and right duals, the duality functors and the adjoint equivalence
//! between them.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::cat::{BoolMatrix, CatResult, CategoryView, Mor, Obj};
use crate::error::{Error, Result};
use crate::expr::{eval, o, t, Env, MorphExpr};
use crate::functor::{cat, FunctorData, Structure};
use crate::report::{Audit, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// A chosen dual of one object: `(SX, d, e)` on the left, `(S′X, d′, e′)` on the right.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualEntry {
    pub dual: Obj,
    pub unit: Mor,
    pub counit: Mor,
}

type EntryFn = Arc<dyn Fn(Obj) -> Result<DualEntry> + Send + Sync>;

/// A choice of duals for every object, possibly computed on demand.
#[derive(Clone)]
pub struct DualityAssignment {
    pub side: Side,
    pub category: CategoryView,
    entry: EntryFn,
}

impl fmt::Debug for DualityAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} duals on {}", self.side, self.category.name())
    }
}

fn nm(label: impl Into<String>, m: Mor) -> MorphExpr {
    MorphExpr::named(label, m)
}

fn id(x: Obj) -> MorphExpr {
    MorphExpr::id(x)
}

fn lbl(c: &CategoryView, x: Obj) -> String {
    c.obj_label(x)
}

/// The two snake equations for a candidate dual, in the given side's form.
fn snake_exprs(
    c: &CategoryView,
    side: Side,
    x: Obj,
    en: &DualEntry,
) -> Result<[(MorphExpr, MorphExpr); 2]> {
    let d = nm("d", en.unit.clone());
    let e = nm("e", en.counit.clone());
    let s = en.dual;
    let _ = c;
    Ok(match side {
        Side::Left => [
            (o([t([id(x), e.clone()]), t([d.clone(), id(x)])]), id(x)),
            (o([t([e, id(s)]), t([id(s), d])]), id(s)),
        ],
        Side::Right => [
            (o([t([e.clone(), id(x)]), t([id(x), d.clone()])]), id(x)),
            (o([t([id(s), e]), t([d, id(s)])]), id(s)),
        ],
    })
}

fn snake_id(side: Side) -> &'static str {
    match side {
        Side::Left => "left-dual",
        Side::Right => "eq:rightdual",
    }
}

/// Which snake equations fail for a candidate; empty when it is a dual.
fn snake_failures(c: &CategoryView, side: Side, x: Obj, en: &DualEntry) -> Vec<&'static str> {
    let Ok(pairs) = snake_exprs(c, side, x, en) else {
        return vec!["first", "second"];
    };
    let env = Env::new();
    let mut out = Vec::new();
    for ((l, r), which) in pairs.iter().zip(["first", "second"]) {
        match crate::expr::check_equation(c, l, r, &env) {
            Ok(v) if v.holds => {}
            _ => out.push(which),
        }
    }
    out
}

fn find_dual(c: &CategoryView, side: Side, x: Obj, hint: Option<DualEntry>) -> Result<DualEntry> {
    if let Some(h) = hint {
        let bad = snake_failures(c, side, x, &h);
        if bad.is_empty() {
            return Ok(h);
        }
        return Err(Error::HintInvalid(format!(
            "{} snake equation(s) {} fail for the hinted dual of {}",
            snake_id(side),
            bad.join(" and "),
            lbl(c, x)
        )));
    }
    let unit = c.unit();
    for y in c.objects() {
        let (dom_d, cod_e) = match side {
            Side::Left => (c.tensor_obj(x, y)?, c.tensor_obj(y, x)?),
            Side::Right => (c.tensor_obj(y, x)?, c.tensor_obj(x, y)?),
        };
        let (Some(ds), Some(es)) = (c.hom(unit, dom_d), c.hom(cod_e, unit)) else {
            continue;
        };
        for d in &ds {
            for e in &es {
                let en = DualEntry {
                    dual: y,
                    unit: d.clone(),
                    counit: e.clone(),
                };
                if snake_failures(c, side, x, &en).is_empty() {
                    return Ok(en);
                }
            }
        }
    }
    Err(Error::NotFound(
        format!("no {:?} dual of {} in {}", side, lbl(c, x), c.name()).to_lowercase(),
    ))
}

/// First `(SX, d, e)` in canonical order satisfying both snake equations.
pub fn find_left_dual(c: &CategoryView, x: Obj, hint: Option<DualEntry>) -> Result<DualEntry> {
    find_dual(c, Side::Left, x, hint)
}

/// First `(S′X, d′, e′)` in canonical order satisfying both snake equations.
pub fn find_right_dual(c: &CategoryView, x: Obj, hint: Option<DualEntry>) -> Result<DualEntry> {
    find_dual(c, Side::Right, x, hint)
}

impl DualityAssignment {
    pub fn from_fn(
        side: Side,
        category: CategoryView,
        f: impl Fn(Obj) -> Result<DualEntry> + Send + Sync + 'static,
    ) -> Self {
        DualityAssignment {
            side,
            category,
            entry: Arc::new(f),
        }
    }

    /// Search a dual of every object; fails at the first object without one.
    pub fn search(c: &CategoryView, side: Side) -> Result<Self> {
        let mut table = BTreeMap::new();
        for x in c.objects() {
            table.insert(x, find_dual(c, side, x, None)?);
        }
        Ok(Self::from_table(side, c.clone(), table))
    }

    pub fn from_table(side: Side, c: CategoryView, table: BTreeMap<Obj, DualEntry>) -> Self {
        let name = c.name();
        Self::from_fn(side, c, move |x| {
            table
                .get(&x)
                .cloned()
                .ok_or_else(|| Error::NotFound(format!("no assigned dual of {x} in {name}")))
        })
    }

    /// Self-duality of Boolean matrices: `SX = X` with cup and cap.
    pub fn bool_self_dual(c: &CategoryView, side: Side) -> Self {
        Self::from_fn(side, c.clone(), |x| {
            Ok(DualEntry {
                dual: x,
                unit: Mor::Matrix(BoolMatrix::cup(x.0)),
                counit: Mor::Matrix(BoolMatrix::cap(x.0)),
            })
        })
    }

    /// Verify every entry on the scope objects.
    pub fn verified(self) -> Result<Self> {
        for x in self.category.objects() {
            let en = self.entry(x)?;
            find_dual(&self.category, self.side, x, Some(en))?;
        }
        Ok(self)
    }

    pub fn entry(&self, x: Obj) -> Result<DualEntry> {
        (self.entry)(x)
    }

    pub fn dual(&self, x: Obj) -> Result<Obj> {
        Ok(self.entry(x)?.dual)
    }

    pub fn unit_mor(&self, x: Obj) -> Result<Mor> {
        Ok(self.entry(x)?.unit)
    }

    pub fn counit_mor(&self, x: Obj) -> Result<Mor> {
        Ok(self.entry(x)?.counit)
    }

    fn tag(&self) -> (&'static str, &'static str, &'static str) {
        match self.side {
            Side::Left => ("S", "d", "e"),
            Side::Right => ("S'", "d'", "e'"),
        }
    }

    pub fn d_expr(&self, x: Obj) -> Result<MorphExpr> {
        Ok(nm(
            format!("{}_{}", self.tag().1, lbl(&self.category, x)),
            self.unit_mor(x)?,
        ))
    }

    pub fn e_expr(&self, x: Obj) -> Result<MorphExpr> {
        Ok(nm(
            format!("{}_{}", self.tag().2, lbl(&self.category, x)),
            self.counit_mor(x)?,
        ))
    }

    /// The dual arrow of `f: X → Y`: `Sf: SY → SX`, resp. `S′f: S′Y → S′X`.
    pub fn transpose_expr(&self, f: MorphExpr, dom: Obj, cod: Obj) -> Result<MorphExpr> {
        let (sx, sy) = (self.dual(dom)?, self.dual(cod)?);
        Ok(match self.side {
            Side::Left => o([
                t([self.e_expr(cod)?, id(sx)]),
                t([id(sy), f, id(sx)]),
                t([id(sy), self.d_expr(dom)?]),
            ]),
            Side::Right => o([
                t([id(sx), self.e_expr(cod)?]),
                t([id(sx), f, id(sy)]),
                t([self.d_expr(dom)?, id(sy)]),
            ]),
        })
    }

    pub fn transpose(&self, f: &Mor) -> Result<Mor> {
        let c = &self.category;
        let (a, b) = (c.dom(f)?, c.cod(f)?);
        let e = self.transpose_expr(nm("f", f.clone()), a, b)?;
        eval(c, &e, &Env::new())
    }

    /// The canonical comparison `SX⊗SY → S(Y⊗X)`, resp. `S′X⊗S′Y → S′(Y⊗X)`.
    pub fn comparison(&self, x: Obj, y: Obj) -> Result<Mor> {
        let c = &self.category;
        let (sx, sy) = (self.dual(x)?, self.dual(y)?);
        let yx = c.tensor_obj(y, x)?;
        let s_yx = self.dual(yx)?;
        let e = match self.side {
            Side::Left => {
                let cand = o([self.e_expr(x)?, t([id(sx), self.e_expr(y)?, id(x)])]);
                o([t([cand, id(s_yx)]), t([id(sx), id(sy), self.d_expr(yx)?])])
            }
            Side::Right => {
                let cand = o([self.e_expr(y)?, t([id(y), self.e_expr(x)?, id(sy)])]);
                o([t([id(s_yx), cand]), t([self.d_expr(yx)?, id(sx), id(sy)])])
            }
        };
        eval(c, &e, &Env::new())
    }

    /// The unit comparison `𝟙 → S𝟙`, resp. `𝟙 → S′𝟙`.
    pub fn comparison_unit(&self) -> Result<Mor> {
        self.unit_mor(self.category.unit())
    }

    /// This choice of duals read in the opposite category.
    pub fn op(&self) -> Self {
        let base = self.clone();
        DualityAssignment::from_fn(self.side.flip(), self.category.op(), move |x| {
            let en = base.entry(x)?;
            Ok(DualEntry {
                dual: en.dual,
                unit: en.counit,
                counit: en.unit,
            })
        })
    }

    /// This choice of duals read with the reversed tensor.
    pub fn cop(&self) -> Self {
        let base = self.clone();
        DualityAssignment::from_fn(self.side.flip(), self.category.cop(), move |x| {
            base.entry(x)
        })
    }

    /// Snake equations, comparison maps and transpose laws on the scope.
    pub fn verify(&self) -> Result<Report> {
        let start = Instant::now();
        let c = &self.category;
        let env = Env::new();
        let mut a = Audit::new();
        let objs = c.objects();
        for &x in &objs {
            let en = self.entry(x)?;
            let pairs = snake_exprs(c, self.side, x, &en)?;
            for ((l, r), which) in pairs.into_iter().zip(["first", "second"]) {
                a.equation(
                    snake_id(self.side),
                    vec![lbl(c, x), which.into()],
                    c,
                    &env,
                    || Ok((l, r)),
                );
            }
        }
        if self.side == Side::Left {
            self.verify_s2(&mut a, &objs)?;
        }
        let (mors, _) = c.morphism_scope();
        let (sid, sdinat) = match self.side {
            Side::Left => ("transpose", "eq2:dinat"),
            Side::Right => ("transpose'", "eq2:dinat'"),
        };
        for &x in &objs {
            a.fact(
                &format!("{sid}:identity"),
                vec![lbl(c, x)],
                self.transpose(&c.identity(x)?)? == c.identity(self.dual(x)?)?,
                Some("S(1_X) differs from 1_SX".into()),
            );
        }
        let typed: Vec<(Mor, Obj, Obj)> = mors
            .iter()
            .map(|f| Ok((f.clone(), c.dom(f)?, c.cod(f)?)))
            .collect::<Result<_>>()?;
        let transposes: Vec<Mor> = typed
            .iter()
            .map(|(f, _, _)| self.transpose(f))
            .collect::<Result<_>>()?;
        for (i, (f, x, y)) in typed.iter().enumerate() {
            let sf = nm(
                format!("{}({})", self.tag().0, c.mor_label(f)),
                transposes[i].clone(),
            );
            let fe = nm(c.mor_label(f), f.clone());
            let inst = vec![c.mor_label(f)];
            let (sx, sy) = (self.dual(*x)?, self.dual(*y)?);
            match self.side {
                Side::Left => {
                    a.equation(sdinat, with(&inst, "unit"), c, &env, || {
                        Ok((
                            o([t([id(*y), sf.clone()]), self.d_expr(*y)?]),
                            o([t([fe.clone(), id(sx)]), self.d_expr(*x)?]),
                        ))
                    });
                    a.equation(sdinat, with(&inst, "counit"), c, &env, || {
                        Ok((
                            o([self.e_expr(*x)?, t([sf.clone(), id(*x)])]),
                            o([self.e_expr(*y)?, t([id(sy), fe.clone()])]),
                        ))
                    });
                }
                Side::Right => {
                    a.equation(sdinat, with(&inst, "unit"), c, &env, || {
                        Ok((
                            o([t([sf.clone(), id(*y)]), self.d_expr(*y)?]),
                            o([t([id(sx), fe.clone()]), self.d_expr(*x)?]),
                        ))
                    });
                    a.equation(sdinat, with(&inst, "counit"), c, &env, || {
                        Ok((
                            o([self.e_expr(*x)?, t([id(*x), sf.clone()])]),
                            o([self.e_expr(*y)?, t([fe.clone(), id(sy)])]),
                        ))
                    });
                }
            }
        }
        for (i, (f, _, b)) in typed.iter().enumerate() {
            for (j, (g, b2, _)) in typed.iter().enumerate() {
                if b != b2 {
                    continue;
                }
                let gf = c.compose(g, f)?;
                let lhs = self.transpose(&gf)?;
                let rhs = c.compose(&transposes[i], &transposes[j])?;
                a.fact(
                    &format!("{sid}:composition"),
                    vec![c.mor_label(g), c.mor_label(f)],
                    lhs == rhs,
                    Some(format!(
                        "S(g∘f) = {} but Sf∘Sg = {}",
                        c.mor_label(&lhs),
                        c.mor_label(&rhs)
                    )),
                );
            }
        }
        Ok(Report::new(
            format!("{:?} duals on {}", self.side, c.name()).to_lowercase(),
            vec![c.scope_statement()],
            a,
            start,
        ))
    }

    fn verify_s2(&self, a: &mut Audit, objs: &[Obj]) -> Result<()> {
        let c = &self.category;
        let env = Env::new();
        for &x in objs {
            for &y in objs {
                let s2 = self.comparison(y, x)?;
                let xy = c.tensor_obj(x, y)?;
                let (sx, sy) = (self.dual(x)?, self.dual(y)?);
                let s2e = nm(format!("s2_{},{}", lbl(c, y), lbl(c, x)), s2.clone());
                let inst = vec![lbl(c, x), lbl(c, y)];
                a.equation("eq:s2db", inst.clone(), c, &env, || {
                    Ok((
                        self.d_expr(xy)?,
                        o([
                            t([id(x), id(y), s2e.clone()]),
                            t([id(x), self.d_expr(y)?, id(sx)]),
                            self.d_expr(x)?,
                        ]),
                    ))
                });
                a.equation("eq:s2ev", inst.clone(), c, &env, || {
                    Ok((
                        o([self.e_expr(xy)?, t([s2e.clone(), id(x), id(y)])]),
                        o([self.e_expr(y)?, t([id(sy), self.e_expr(x)?, id(y)])]),
                    ))
                });
                a.fact(
                    "s2-invertible",
                    inst.clone(),
                    c.is_iso(&s2),
                    Some("s2 has no inverse".into()),
                );
                if c.is_table() {
                    let hom = c
                        .hom(c.tensor_obj(sy, sx)?, self.dual(xy)?)
                        .unwrap_or_default();
                    let lhs = self.unit_mor(xy)?;
                    let solutions = hom
                        .iter()
                        .filter(|cand| {
                            let rhs = (|| -> CatResult<Mor> {
                                let step = c.tensor_all(&[
                                    c.identity(x)?,
                                    self.unit_mor(y).map_err(cat)?,
                                    c.identity(sx)?,
                                ])?;
                                let last = c.tensor_all(&[
                                    c.identity(x)?,
                                    c.identity(y)?,
                                    (*cand).clone(),
                                ])?;
                                c.seq(&[self.unit_mor(x).map_err(cat)?, step, last])
                            })();
                            rhs.ok().as_ref() == Some(&lhs)
                        })
                        .count();
                    a.fact(
                        "s2-unique",
                        inst,
                        solutions == 1,
                        Some(format!("{solutions} solutions of the defining equation")),
                    );
                }
            }
        }
        let s0 = self.comparison_unit()?;
        a.fact(
            "s0-invertible",
            vec![],
            c.is_iso(&s0),
            Some("s0 has no inverse".into()),
        );
        Ok(())
    }
}

fn with(inst: &[String], s: &str) -> Vec<String> {
    let mut v = inst.to_vec();
    v.push(s.into());
    v
}

/// `S: C → C^{op,cop}`, resp. `S′: C^{op,cop} → C`, as a functor with strong
/// structure. The comparison maps must be invertible.
pub fn build_duality_functor(d: &DualityAssignment) -> Result<FunctorData> {
    let c = d.category.clone();
    let (dd, dm) = (d.clone(), d.clone());
    let (source, target, name) = match d.side {
        Side::Left => (c.clone(), c.op_cop(), "S"),
        Side::Right => (c.op_cop(), c.clone(), "S'"),
    };
    let f = FunctorData::new(
        name,
        source,
        target,
        move |x| dd.dual(x).map_err(cat),
        move |m| dm.transpose(m).map_err(cat),
    );
    let inv = |m: Mor, what: &str| -> CatResult<Mor> {
        c.try_inverse(&m)
            .ok_or_else(|| crate::cat::CatError::TypeMismatch(format!("{what} is not invertible")))
    };
    let s0 = d.comparison_unit().map_err(cat);
    let s0_inv = s0.clone().and_then(|m| inv(m, "s0"));
    let (da, db) = (d.clone(), d.clone());
    let (ca, _cb) = (c.clone(), c.clone());
    match d.side {
        Side::Left => {
            let mono = Structure::new(
                move |x, y| {
                    let m = da.comparison(y, x).map_err(cat)?;
                    ca.try_inverse(&m).ok_or_else(|| {
                        crate::cat::CatError::TypeMismatch("s2 is not invertible".into())
                    })
                },
                s0_inv,
            );
            let comono = Structure::new(move |x, y| db.comparison(y, x).map_err(cat), s0);
            Ok(f.with_monoidal(mono).with_comonoidal(comono))
        }
        Side::Right => {
            let mono = Structure::new(move |x, y| da.comparison(x, y).map_err(cat), s0);
            let comono = Structure::new(
                move |x, y| {
                    let m = db.comparison(x, y).map_err(cat)?;
                    ca.try_inverse(&m).ok_or_else(|| {
                        crate::cat::CatError::TypeMismatch("s'2 is not invertible".into())
                    })
                },
                s0_inv,
            );
            Ok(f.with_monoidal(mono).with_comonoidal(comono))
        }
    }
}

/// Search left duals of every object and build `S`; failures name the
/// first object without a dual.
pub fn duality_functor_for(c: &CategoryView) -> Result<FunctorData> {
    let d = DualityAssignment::search(c, Side::Left).map_err(|e| Error::CoherenceFailure {
        equation: "left-dual".into(),
        detail: e.to_string(),
    })?;
    build_duality_functor(&d)
}

/// The adjoint equivalence `S ⊣ S′` with unit `α: X → S′SX` and counit `β: X → SS′X`.
#[derive(Clone, Debug)]
pub struct AdjointEquivalence {
    pub left: DualityAssignment,
    pub right: DualityAssignment,
}

impl AdjointEquivalence {
    pub fn category(&self) -> &CategoryView {
        &self.left.category
    }

    pub fn s(&self, x: Obj) -> Result<Obj> {
        self.left.dual(x)
    }

    pub fn sp(&self, x: Obj) -> Result<Obj> {
        self.right.dual(x)
    }

    pub fn alpha(&self, x: Obj) -> Result<Mor> {
        let c = self.category();
        let sx = self.s(x)?;
        let spsx = self.sp(sx)?;
        c.seq(&[
            c.tensor(&self.right.unit_mor(sx)?, &c.identity(x)?)?,
            c.tensor(&c.identity(spsx)?, &self.left.counit_mor(x)?)?,
        ])
        .map_err(Error::from)
    }

    pub fn beta(&self, x: Obj) -> Result<Mor> {
        let c = self.category();
        let spx = self.sp(x)?;
        let sspx = self.s(spx)?;
        c.seq(&[
            c.tensor(&c.identity(x)?, &self.left.unit_mor(spx)?)?,
            c.tensor(&self.right.counit_mor(x)?, &c.identity(sspx)?)?,
        ])
        .map_err(Error::from)
    }

    pub fn alpha_inv(&self, x: Obj) -> Result<Mor> {
        let a = self.alpha(x)?;
        self.category()
            .try_inverse(&a)
            .ok_or_else(|| Error::NotInvertible(format!("alpha at {}", lbl(self.category(), x))))
    }

    pub fn beta_inv(&self, x: Obj) -> Result<Mor> {
        let b = self.beta(x)?;
        self.category()
            .try_inverse(&b)
            .ok_or_else(|| Error::NotInvertible(format!("beta at {}", lbl(self.category(), x))))
    }

    pub fn s2(&self, x: Obj, y: Obj) -> Result<Mor> {
        self.left.comparison(x, y)
    }

    pub fn s0(&self) -> Result<Mor> {
        self.left.comparison_unit()
    }

    /// `s′₂ = S′(β⊗β) ∘ S′(s₂) ∘ α`, the mate of `s₂`.
    pub fn s2p(&self, x: Obj, y: Obj) -> Result<Mor> {
        let c = self.category();
        let (spx, spy) = (self.sp(x)?, self.sp(y)?);
        let a = self.alpha(c.tensor_obj(spx, spy)?)?;
        let s2 = self.right.transpose(&self.s2(spy, spx)?)?;
        let bb = self
            .right
            .transpose(&c.tensor(&self.beta(y)?, &self.beta(x)?)?)?;
        Ok(c.seq(&[a, s2, bb])?)
    }

    /// `s′₀ = S′(s₀) ∘ α_𝟙`.
    pub fn s0p(&self) -> Result<Mor> {
        let c = self.category();
        Ok(c.compose(&self.right.transpose(&self.s0()?)?, &self.alpha(c.unit())?)?)
    }

    pub fn inv(&self, m: &Mor, what: &str) -> Result<Mor> {
        self.category()
            .try_inverse(m)
            .ok_or_else(|| Error::NotInvertible(what.to_owned()))
    }

    pub fn transpose(&self, f: &Mor) -> Result<Mor> {
        self.left.transpose(f)
    }

    pub fn transpose_right(&self, f: &Mor) -> Result<Mor> {
        self.right.transpose(f)
    }

    /// The same duals read in `C^op`.
    pub fn op(&self) -> Self {
        AdjointEquivalence {
            left: self.right.op(),
            right: self.left.op(),
        }
    }

    /// The same duals read in `C^cop`.
    pub fn cop(&self) -> Self {
        AdjointEquivalence {
            left: self.right.cop(),
            right: self.left.cop(),
        }
    }
}

/// Build `α, β` from both assignments and verify invertibility, eq.
/// d'-beta-d and the mate description of `s′₂, s′₀`.
pub fn build_adjoint_equivalence(
    left: &DualityAssignment,
    right: &DualityAssignment,
) -> Result<(AdjointEquivalence, Report)> {
    let start = Instant::now();
    if left.side != Side::Left || right.side != Side::Right || left.category != right.category {
        return Err(Error::Input(
            "expected left and right duals on the same category".into(),
        ));
    }
    let adj = AdjointEquivalence {
        left: left.clone(),
        right: right.clone(),
    };
    let c = adj.category().clone();
    let env = Env::new();
    let mut a = Audit::new();
    let objs = c.objects();
    for &x in &objs {
        adj.alpha_inv(x)?;
        adj.beta_inv(x)?;
        let spx = adj.sp(x)?;
        let inst = vec![lbl(&c, x)];
        let beta = nm(format!("β_{}", lbl(&c, x)), adj.beta(x)?);
        a.equation("d'-beta-d", with(&inst, "unit"), &c, &env, || {
            Ok((
                o([t([id(spx), beta.clone()]), right.d_expr(x)?]),
                left.d_expr(spx)?,
            ))
        });
        a.equation("d'-beta-d", with(&inst, "counit"), &c, &env, || {
            Ok((
                right.e_expr(x)?,
                o([left.e_expr(spx)?, t([beta.clone(), id(spx)])]),
            ))
        });
    }
    for &x in &objs {
        for &y in &objs {
            let inst = vec![lbl(&c, x), lbl(&c, y)];
            let mate = adj.s2p(x, y)?;
            let canonical = right.comparison(x, y)?;
            a.fact(
                "eq:S2doctrinalS'2",
                inst.clone(),
                mate == canonical,
                Some(format!(
                    "mate {} differs from canonical {}",
                    c.mor_label(&mate),
                    c.mor_label(&canonical)
                )),
            );
            let yx = c.tensor_obj(y, x)?;
            let spx = adj.sp(x)?;
            a.equation("eq:S2doctrinalS'2", with(&inst, "d'"), &c, &env, || {
                Ok((
                    right.d_expr(yx)?,
                    o([
                        t([nm("s'2", mate.clone()), id(y), id(x)]),
                        t([id(spx), right.d_expr(y)?, id(x)]),
                        right.d_expr(x)?,
                    ]),
                ))
            });
        }
    }
    let s0p = adj.s0p()?;
    a.fact(
        "eq:S2doctrinalS'2",
        vec!["unit".into()],
        s0p == right.comparison_unit()?,
        Some("s'0 mate differs".into()),
    );
    let (mors, _) = c.morphism_scope();
    for f in &mors {
        let (x, y) = (c.dom(f)?, c.cod(f)?);
        let ssf = adj.transpose_right(&adj.transpose(f)?)?;
        let lhs = c.compose(&adj.alpha(y)?, f)?;
        let rhs = c.compose(&ssf, &adj.alpha(x)?)?;
        a.fact("alpha-naturality", vec![c.mor_label(f)], lhs == rhs, None);
        let ssf = adj.transpose(&adj.transpose_right(f)?)?;
        let lhs = c.compose(&adj.beta(y)?, f)?;
        let rhs = c.compose(&ssf, &adj.beta(x)?)?;
        a.fact("beta-naturality", vec![c.mor_label(f)], lhs == rhs, None);
    }
    let report = Report::new(
        format!("adjoint equivalence on {}", c.name()),
        vec![c.scope_statement()],
        a,
        start,
    );
    Ok((adj, report))
}

/// Left and right duals found by search (tables) or the cup/cap choice
/// (Boolean matrices), with their adjoint equivalence.
pub fn autonomous_structure(c: &CategoryView) -> Result<AdjointEquivalence> {
    let (l, r) = if c.is_table() {
        (
            DualityAssignment::search(c, Side::Left)?,
            DualityAssignment::search(c, Side::Right)?,
        )
    } else {
        (
            DualityAssignment::bool_self_dual(c, Side::Left).verified()?,
            DualityAssignment::bool_self_dual(c, Side::Right).verified()?,
        )
    };
    Ok(AdjointEquivalence { left: l, right: r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::{BoolMatrixCategory, TableCategory};

    fn z4() -> CategoryView {
        CategoryView::new(TableCategory::discrete_group(4))
    }

    #[test]
    fn group_duals_are_inverses() {
        let c = z4();
        let en = find_left_dual(&c, Obj(1), None).unwrap();
        assert_eq!(en.dual, Obj(3));
        assert_eq!(en.unit, c.identity(Obj(0)).unwrap());
        assert_eq!(en.counit, c.identity(Obj(0)).unwrap());
    }

    #[test]
    fn posetal_nat_has_no_left_dual_of_one() {
        let c = CategoryView::new(TableCategory::truncated_nat(6));
        assert!(matches!(
            find_left_dual(&c, Obj(1), None),
            Err(Error::NotFound(_))
        ));
        assert!(matches!(
            duality_functor_for(&c),
            Err(Error::CoherenceFailure { .. })
        ));
    }

    #[test]
    fn bool_hint_is_accepted_and_bad_hint_rejected() {
        let c = CategoryView::new(BoolMatrixCategory::new(2).unwrap());
        let hint = DualEntry {
            dual: Obj(2),
            unit: Mor::Matrix(BoolMatrix::cup(2)),
            counit: Mor::Matrix(BoolMatrix::cap(2)),
        };
        assert_eq!(
            find_left_dual(&c, Obj(2), Some(hint.clone())).unwrap(),
            hint
        );
        let bad = DualEntry {
            counit: Mor::Matrix(BoolMatrix::from_bits(1, 4, 0b1111)),
            ..hint
        };
        assert!(matches!(
            find_left_dual(&c, Obj(2), Some(bad)),
            Err(Error::HintInvalid(_))
        ));
    }

    #[test]
    fn transpose_of_identity_is_identity() {
        let c = z4();
        let d = DualityAssignment::search(&c, Side::Left).unwrap();
        for x in c.objects() {
            assert_eq!(
                d.transpose(&c.identity(x).unwrap()).unwrap(),
                c.identity(d.dual(x).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn z4_duality_verifies_and_alpha_beta_are_identities() {
        let c = z4();
        let adj = autonomous_structure(&c).unwrap();
        assert!(adj.left.verify().unwrap().passed());
        assert!(adj.right.verify().unwrap().passed());
        let (adj, rep) = build_adjoint_equivalence(&adj.left, &adj.right).unwrap();
        assert!(rep.passed(), "{}", rep.to_text());
        for x in c.objects() {
            assert_eq!(adj.alpha(x).unwrap(), c.identity(x).unwrap());
            assert_eq!(adj.beta(x).unwrap(), c.identity(x).unwrap());
        }
    }

    #[test]
    fn bool_s2_is_the_swap() {
        let c = CategoryView::new(BoolMatrixCategory::new(2).unwrap());
        let d = DualityAssignment::bool_self_dual(&c, Side::Left);
        for m in 0..=3 {
            for n in 0..=3 {
                assert_eq!(
                    d.comparison(Obj(m), Obj(n)).unwrap(),
                    Mor::Matrix(BoolMatrix::swap(m, n)),
                    "{m} {n}"
                );
            }
        }
    }

    #[test]
    fn mismatched_right_duals_are_rejected() {
        let c = z4();
        let left = DualityAssignment::search(&c, Side::Left).unwrap();
        let right = DualityAssignment::from_fn(Side::Right, c.clone(), |x| {
            Ok(DualEntry {
                dual: Obj((x.0 + 1) % 4),
                unit: Mor::Table(0),
                counit: Mor::Table(0),
            })
        });
        assert!(build_adjoint_equivalence(&left, &right).is_err());
    }

    #[test]
    fn view_duals_still_satisfy_snakes() {
        let c = CategoryView::new(BoolMatrixCategory::new(2).unwrap());
        let d = DualityAssignment::bool_self_dual(&c, Side::Left);
        for v in [d.op(), d.cop(), d.op().cop()] {
            for x in c.objects() {
                let en = v.entry(x).unwrap();
                assert!(snake_failures(&v.category, v.side, x, &en).is_empty());
            }
        }
    }
}
