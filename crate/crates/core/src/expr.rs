//! Morphism expressions and their evaluation.
//!
//! Every coherence diagram is checked by building its two legs as
//! [`MorphExpr`] trees and handing them to [`check_equation`]. Leaves hold
//! concrete morphisms, so a failing verdict can be replayed with [`eval`].

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cat::{CategoryView, Mor, Obj};
use crate::error::{Error, Result};
use crate::functor::{FunctorData, NatTransfData};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MorphExpr {
    Id(Obj),
    Named {
        label: String,
        mor: Mor,
    },
    /// `left ∘ right`.
    Compose(Box<MorphExpr>, Box<MorphExpr>),
    Tensor(Box<MorphExpr>, Box<MorphExpr>),
    FMap {
        functor: String,
        arg: Box<MorphExpr>,
    },
    NatComponent {
        transformation: String,
        obj: Obj,
    },
}

impl MorphExpr {
    pub fn id(x: Obj) -> Self {
        MorphExpr::Id(x)
    }

    pub fn named(label: impl Into<String>, mor: Mor) -> Self {
        MorphExpr::Named {
            label: label.into(),
            mor,
        }
    }

    pub fn fmap(functor: impl Into<String>, arg: MorphExpr) -> Self {
        MorphExpr::FMap {
            functor: functor.into(),
            arg: Box::new(arg),
        }
    }

    pub fn component(transformation: impl Into<String>, obj: Obj) -> Self {
        MorphExpr::NatComponent {
            transformation: transformation.into(),
            obj,
        }
    }

    pub fn compose(left: MorphExpr, right: MorphExpr) -> Self {
        MorphExpr::Compose(Box::new(left), Box::new(right))
    }

    pub fn tensor(left: MorphExpr, right: MorphExpr) -> Self {
        MorphExpr::Tensor(Box::new(left), Box::new(right))
    }

    pub fn size(&self) -> usize {
        match self {
            MorphExpr::Id(_) | MorphExpr::Named { .. } | MorphExpr::NatComponent { .. } => 1,
            MorphExpr::Compose(a, b) | MorphExpr::Tensor(a, b) => 1 + a.size() + b.size(),
            MorphExpr::FMap { arg, .. } => 1 + arg.size(),
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, inside: bool) -> fmt::Result {
        match self {
            MorphExpr::Id(x) => write!(f, "1_{x}"),
            MorphExpr::Named { label, .. } => write!(f, "{label}"),
            MorphExpr::NatComponent {
                transformation,
                obj,
            } => write!(f, "{transformation}_{obj}"),
            MorphExpr::FMap { functor, arg } => {
                write!(f, "{functor}(")?;
                arg.fmt_prec(f, false)?;
                write!(f, ")")
            }
            MorphExpr::Compose(a, b) => {
                if inside {
                    write!(f, "(")?;
                }
                a.fmt_prec(f, false)?;
                write!(f, " ∘ ")?;
                b.fmt_prec(f, false)?;
                if inside {
                    write!(f, ")")?;
                }
                Ok(())
            }
            MorphExpr::Tensor(a, b) => {
                write!(f, "(")?;
                a.fmt_prec(f, true)?;
                write!(f, " ⊗ ")?;
                b.fmt_prec(f, true)?;
                write!(f, ")")
            }
        }
    }
}

impl fmt::Display for MorphExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, false)
    }
}

/// `a ∘ b ∘ … ∘ z`, written in the usual right-to-left order.
pub fn o(parts: impl IntoIterator<Item = MorphExpr>) -> MorphExpr {
    let mut parts: Vec<MorphExpr> = parts.into_iter().collect();
    let mut acc = parts.pop().expect("empty composite");
    while let Some(g) = parts.pop() {
        acc = MorphExpr::compose(g, acc);
    }
    acc
}

/// Left-nested tensor `((a ⊗ b) ⊗ c) …`.
pub fn t(parts: impl IntoIterator<Item = MorphExpr>) -> MorphExpr {
    let mut it = parts.into_iter();
    let first = it.next().expect("empty tensor");
    it.fold(first, MorphExpr::tensor)
}

/// Functors and transformations referenced by name from expressions.
#[derive(Clone, Debug, Default)]
pub struct Env {
    functors: BTreeMap<String, FunctorData>,
    transformations: BTreeMap<String, NatTransfData>,
}

impl Env {
    pub fn new() -> Self {
        Env::default()
    }

    pub fn with_functor(mut self, f: &FunctorData) -> Self {
        self.functors.insert(f.name.clone(), f.clone());
        self
    }

    pub fn with_functor_as(mut self, name: &str, f: &FunctorData) -> Self {
        self.functors.insert(name.to_owned(), f.clone());
        self
    }

    pub fn with_transformation(mut self, t: &NatTransfData) -> Self {
        self.transformations.insert(t.name.clone(), t.clone());
        self
    }

    pub fn functor(&self, name: &str) -> Result<&FunctorData> {
        self.functors
            .get(name)
            .ok_or_else(|| Error::UnboundRef(format!("functor {name}")))
    }

    pub fn transformation(&self, name: &str) -> Result<&NatTransfData> {
        self.transformations
            .get(name)
            .ok_or_else(|| Error::UnboundRef(format!("transformation {name}")))
    }
}

/// The view in which the argument of `F(-)` lives when `F(-)` is read in `v`.
fn arg_view(f: &FunctorData, v: &CategoryView, e: &MorphExpr) -> Result<CategoryView> {
    if !f.target.same_base(v) {
        return Err(Error::TypeMismatch {
            subtree: e.to_string(),
            detail: format!(
                "{} lands in {}, expression read in {}",
                f.name,
                f.target.name(),
                v.name()
            ),
        });
    }
    let mut s = f.source.clone();
    if f.target.is_op() != v.is_op() {
        s = s.op();
    }
    if f.target.is_cop() != v.is_cop() {
        s = s.cop();
    }
    Ok(s)
}

fn mismatch(e: &MorphExpr, detail: impl Into<String>) -> Error {
    Error::TypeMismatch {
        subtree: e.to_string(),
        detail: detail.into(),
    }
}

/// Domain and codomain of `e` in `v`, computed without composing anything.
pub fn infer_type(v: &CategoryView, e: &MorphExpr, env: &Env) -> Result<(Obj, Obj)> {
    match e {
        MorphExpr::Id(x) => Ok((*x, *x)),
        MorphExpr::Named { mor, .. } => Ok((
            v.dom(mor).map_err(|c| mismatch(e, c.to_string()))?,
            v.cod(mor)?,
        )),
        MorphExpr::NatComponent {
            transformation,
            obj,
        } => {
            let a = env.transformation(transformation)?;
            let m = a.component(*obj)?;
            Ok((v.dom(&m)?, v.cod(&m)?))
        }
        MorphExpr::FMap { functor, arg } => {
            let f = env.functor(functor)?;
            let s = arg_view(f, v, e)?;
            let (a, b) = infer_type(&s, arg, env)?;
            Ok((f.obj(a)?, f.obj(b)?))
        }
        MorphExpr::Compose(g, f) => {
            let (a, b) = infer_type(v, f, env)?;
            let (b2, c) = infer_type(v, g, env)?;
            if b != b2 {
                return Err(mismatch(
                    e,
                    format!(
                        "codomain {} of the right factor is not domain {} of the left",
                        v.obj_label(b),
                        v.obj_label(b2)
                    ),
                ));
            }
            Ok((a, c))
        }
        MorphExpr::Tensor(f, g) => {
            let (a, b) = infer_type(v, f, env)?;
            let (c, d) = infer_type(v, g, env)?;
            Ok((v.tensor_obj(a, c)?, v.tensor_obj(b, d)?))
        }
    }
}

/// Evaluate `e` in the view `v`.
pub fn eval(v: &CategoryView, e: &MorphExpr, env: &Env) -> Result<Mor> {
    infer_type(v, e, env)?;
    eval_unchecked(v, e, env)
}

fn eval_unchecked(v: &CategoryView, e: &MorphExpr, env: &Env) -> Result<Mor> {
    Ok(match e {
        MorphExpr::Id(x) => v.identity(*x)?,
        MorphExpr::Named { mor, .. } => mor.clone(),
        MorphExpr::NatComponent {
            transformation,
            obj,
        } => env.transformation(transformation)?.component(*obj)?,
        MorphExpr::FMap { functor, arg } => {
            let f = env.functor(functor)?;
            let s = arg_view(f, v, e)?;
            f.mor(&eval_unchecked(&s, arg, env)?)?
        }
        MorphExpr::Compose(g, f) => {
            v.compose(&eval_unchecked(v, g, env)?, &eval_unchecked(v, f, env)?)?
        }
        MorphExpr::Tensor(f, g) => {
            v.tensor(&eval_unchecked(v, f, env)?, &eval_unchecked(v, g, env)?)?
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationVerdict {
    pub holds: bool,
    pub lhs_expr: MorphExpr,
    pub rhs_expr: MorphExpr,
    pub lhs: Mor,
    pub rhs: Mor,
}

/// Compare two parallel expressions. Types are compared before evaluation.
pub fn check_equation(
    v: &CategoryView,
    lhs: &MorphExpr,
    rhs: &MorphExpr,
    env: &Env,
) -> Result<EquationVerdict> {
    let tl = infer_type(v, lhs, env)?;
    let tr = infer_type(v, rhs, env)?;
    if tl != tr {
        return Err(Error::TypeMismatch {
            subtree: format!("{lhs} = {rhs}"),
            detail: format!(
                "sides have types {} -> {} and {} -> {}",
                v.obj_label(tl.0),
                v.obj_label(tl.1),
                v.obj_label(tr.0),
                v.obj_label(tr.1)
            ),
        });
    }
    let l = eval_unchecked(v, lhs, env)?;
    let r = eval_unchecked(v, rhs, env)?;
    Ok(EquationVerdict {
        holds: l == r,
        lhs_expr: lhs.clone(),
        rhs_expr: rhs.clone(),
        lhs: l,
        rhs: r,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::{BoolMatrix, BoolMatrixCategory, TableCategory};

    fn z4() -> CategoryView {
        CategoryView::new(TableCategory::discrete_group(4))
    }

    #[test]
    fn identity_law_on_leaves() {
        let c = z4();
        let f = c.identity(Obj(2)).unwrap();
        let e = MorphExpr::compose(MorphExpr::id(Obj(2)), MorphExpr::named("f", f.clone()));
        assert_eq!(eval(&c, &e, &Env::new()).unwrap(), f);
    }

    #[test]
    fn tensor_of_identities_adds() {
        let c = z4();
        let e = MorphExpr::tensor(MorphExpr::id(Obj(1)), MorphExpr::id(Obj(2)));
        assert_eq!(
            eval(&c, &e, &Env::new()).unwrap(),
            c.identity(Obj(3)).unwrap()
        );
    }

    #[test]
    fn compose_mismatch_is_an_error() {
        let c = z4();
        let e = MorphExpr::compose(MorphExpr::id(Obj(1)), MorphExpr::id(Obj(2)));
        assert!(matches!(
            eval(&c, &e, &Env::new()),
            Err(Error::TypeMismatch { .. })
        ));
    }

    #[test]
    fn fmap_needs_a_binding() {
        let c = z4();
        let e = MorphExpr::fmap("F", MorphExpr::id(Obj(0)));
        assert!(matches!(
            eval(&c, &e, &Env::new()),
            Err(Error::UnboundRef(_))
        ));
        let env = Env::new().with_functor_as("F", &FunctorData::identity(&c));
        assert_eq!(eval(&c, &e, &env).unwrap(), c.identity(Obj(0)).unwrap());
    }

    #[test]
    fn op_view_reverses_compose() {
        let c = CategoryView::new(BoolMatrixCategory::new(2).unwrap());
        let f = Mor::Matrix(BoolMatrix::from_rows(&[&[true, true]]));
        let g = Mor::Matrix(BoolMatrix::from_rows(&[&[true], &[false]]));
        let e = MorphExpr::compose(
            MorphExpr::named("f", f.clone()),
            MorphExpr::named("g", g.clone()),
        );
        let in_op = eval(&c.op(), &e, &Env::new()).unwrap();
        assert_eq!(in_op, c.compose(&g, &f).unwrap());
        assert_eq!(
            o([MorphExpr::named("g", g), MorphExpr::named("f", f)]).to_string(),
            "g ∘ f"
        );
    }

    #[test]
    fn rendering_brackets_tensors() {
        let e = o([
            t([MorphExpr::named("e", Mor::Table(0)), MorphExpr::id(Obj(1))]),
            MorphExpr::named("d", Mor::Table(0)),
        ]);
        assert_eq!(e.to_string(), "(e ⊗ 1_1) ∘ d");
    }
}
