//! Finite strict monoidal categories.
//!
//! A category is anything implementing [`MonoidalCategory`]. Two backends are
//! provided: [`TableCategory`] stores every hom set, composite and tensor
//! explicitly, and [`BoolMatrixCategory`] computes composites of Boolean
//! matrices on demand. All consumers go through a [`CategoryView`], which can
//! reverse arrows (`op`) or the tensor (`cop`) without copying the base.

mod matrix;
mod table;
mod validate;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use matrix::{BoolMatrix, BoolMatrixCategory, MAX_BOOL_DIMENSION};
pub use table::{
    CategoryFile, DualEntryFile, DualsFile, HomFile, TableCategory, TableCategoryBuilder,
};
pub use validate::{validate_category, ValidationReport, Violation};

/// An object of a category. In table categories this is an index into the
/// object list; in the Boolean-matrix category it is the dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Obj(pub u32);

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A concrete morphism. Equality is on-the-nose: identity of ids in the
/// table backend, entrywise equality in the matrix backend.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mor {
    Table(u32),
    Matrix(BoolMatrix),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatError {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error("unknown object {0}")]
    UnknownObject(Obj),
    #[error("morphism does not belong to category {category}")]
    ForeignMorphism { category: String },
    #[error("no arrow {dom} -> {cod}: {context}")]
    MissingArrow {
        dom: String,
        cod: String,
        context: String,
    },
    #[error("scope too large: {0}")]
    ScopeTooLarge(String),
}

pub type CatResult<T> = Result<T, CatError>;

/// How morphisms are quantified over in coherence checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MorphismScope {
    /// Every morphism of the category.
    Exhaustive,
    /// A declared generator set plus all identities of scope objects.
    Generators,
}

/// The backend-level interface of a finite strict monoidal category.
///
/// `compose(g, f)` is `g ∘ f` and must reject pairs with `cod f != dom g`.
pub trait MonoidalCategory: Send + Sync + fmt::Debug {
    fn name(&self) -> String;
    /// Objects quantified over by coherence checks. For table backends this
    /// is every object.
    fn objects(&self) -> Vec<Obj>;
    fn contains_obj(&self, x: Obj) -> bool;
    fn unit(&self) -> Obj;
    fn tensor_obj(&self, a: Obj, b: Obj) -> CatResult<Obj>;
    fn dom(&self, f: &Mor) -> CatResult<Obj>;
    fn cod(&self, f: &Mor) -> CatResult<Obj>;
    fn identity(&self, x: Obj) -> CatResult<Mor>;
    fn compose(&self, g: &Mor, f: &Mor) -> CatResult<Mor>;
    fn tensor_mor(&self, f: &Mor, g: &Mor) -> CatResult<Mor>;
    /// The full hom set, or `None` when it is too large to enumerate.
    fn hom(&self, a: Obj, b: Obj) -> Option<Vec<Mor>>;
    /// Morphisms quantified over by naturality and functoriality checks.
    fn morphism_scope(&self) -> (Vec<Mor>, MorphismScope);
    fn obj_label(&self, x: Obj) -> String {
        x.to_string()
    }
    fn mor_label(&self, f: &Mor) -> String;
    /// Two-sided inverse, if one exists.
    fn try_inverse(&self, f: &Mor) -> Option<Mor> {
        let (a, b) = (self.dom(f).ok()?, self.cod(f).ok()?);
        let ida = self.identity(a).ok()?;
        let idb = self.identity(b).ok()?;
        self.hom(b, a)?.into_iter().find(|g| {
            self.compose(g, f).ok().as_ref() == Some(&ida)
                && self.compose(f, g).ok().as_ref() == Some(&idb)
        })
    }
    /// True when every hom set is enumerable.
    fn is_table(&self) -> bool;
}

/// A category seen possibly with reversed arrows and/or reversed tensor.
///
/// Views share morphism values with their base, so one `Mor` means the same
/// arrow in 𝒞, 𝒞^op, 𝒞^cop and 𝒞^{op,cop}.
#[derive(Clone)]
pub struct CategoryView {
    base: Arc<dyn MonoidalCategory>,
    op: bool,
    cop: bool,
}

impl fmt::Debug for CategoryView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl PartialEq for CategoryView {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.base, &other.base) && self.op == other.op && self.cop == other.cop
    }
}

impl CategoryView {
    pub fn new(base: impl MonoidalCategory + 'static) -> Self {
        Self::from_arc(Arc::new(base))
    }

    pub fn from_arc(base: Arc<dyn MonoidalCategory>) -> Self {
        CategoryView {
            base,
            op: false,
            cop: false,
        }
    }

    pub fn base(&self) -> &Arc<dyn MonoidalCategory> {
        &self.base
    }

    pub fn is_op(&self) -> bool {
        self.op
    }

    pub fn is_cop(&self) -> bool {
        self.cop
    }

    pub fn op(&self) -> Self {
        CategoryView {
            base: self.base.clone(),
            op: !self.op,
            cop: self.cop,
        }
    }

    pub fn cop(&self) -> Self {
        CategoryView {
            base: self.base.clone(),
            op: self.op,
            cop: !self.cop,
        }
    }

    pub fn op_cop(&self) -> Self {
        self.op().cop()
    }

    /// The view with both flags cleared.
    pub fn plain(&self) -> Self {
        CategoryView {
            base: self.base.clone(),
            op: false,
            cop: false,
        }
    }

    pub fn same_base(&self, other: &CategoryView) -> bool {
        Arc::ptr_eq(&self.base, &other.base)
    }

    pub fn name(&self) -> String {
        let mut n = self.base.name();
        match (self.op, self.cop) {
            (false, false) => {}
            (true, false) => n.push_str("^op"),
            (false, true) => n.push_str("^cop"),
            (true, true) => n.push_str("^{op,cop}"),
        }
        n
    }

    pub fn objects(&self) -> Vec<Obj> {
        self.base.objects()
    }

    pub fn contains_obj(&self, x: Obj) -> bool {
        self.base.contains_obj(x)
    }

    pub fn unit(&self) -> Obj {
        self.base.unit()
    }

    pub fn is_table(&self) -> bool {
        self.base.is_table()
    }

    pub fn tensor_obj(&self, a: Obj, b: Obj) -> CatResult<Obj> {
        if self.cop {
            self.base.tensor_obj(b, a)
        } else {
            self.base.tensor_obj(a, b)
        }
    }

    /// Left-nested tensor of a list of objects; the empty list gives the unit.
    pub fn tensor_objs(&self, xs: &[Obj]) -> CatResult<Obj> {
        let mut acc = self.unit();
        for &x in xs {
            acc = self.tensor_obj(acc, x)?;
        }
        Ok(acc)
    }

    pub fn dom(&self, f: &Mor) -> CatResult<Obj> {
        if self.op {
            self.base.cod(f)
        } else {
            self.base.dom(f)
        }
    }

    pub fn cod(&self, f: &Mor) -> CatResult<Obj> {
        if self.op {
            self.base.dom(f)
        } else {
            self.base.cod(f)
        }
    }

    pub fn identity(&self, x: Obj) -> CatResult<Mor> {
        self.base.identity(x)
    }

    /// `g ∘ f` in this view.
    pub fn compose(&self, g: &Mor, f: &Mor) -> CatResult<Mor> {
        if self.op {
            self.base.compose(f, g)
        } else {
            self.base.compose(g, f)
        }
    }

    /// Composite of a path given in diagram order: `seq([f, g, h]) = h ∘ g ∘ f`.
    pub fn seq(&self, path: &[Mor]) -> CatResult<Mor> {
        let (first, rest) = path
            .split_first()
            .ok_or_else(|| CatError::TypeMismatch("empty composite".into()))?;
        rest.iter()
            .try_fold(first.clone(), |acc, g| self.compose(g, &acc))
    }

    pub fn tensor(&self, f: &Mor, g: &Mor) -> CatResult<Mor> {
        if self.cop {
            self.base.tensor_mor(g, f)
        } else {
            self.base.tensor_mor(f, g)
        }
    }

    /// Left-nested tensor of several morphisms.
    pub fn tensor_all(&self, fs: &[Mor]) -> CatResult<Mor> {
        let (first, rest) = fs
            .split_first()
            .ok_or_else(|| CatError::TypeMismatch("empty tensor".into()))?;
        rest.iter()
            .try_fold(first.clone(), |acc, g| self.tensor(&acc, g))
    }

    pub fn hom(&self, a: Obj, b: Obj) -> Option<Vec<Mor>> {
        if self.op {
            self.base.hom(b, a)
        } else {
            self.base.hom(a, b)
        }
    }

    /// The unique arrow `a -> b` in a category whose hom set is enumerable
    /// and has at most one element.
    pub fn unique_arrow(&self, a: Obj, b: Obj) -> Option<Mor> {
        let hom = self.hom(a, b)?;
        if hom.len() == 1 {
            hom.into_iter().next()
        } else {
            None
        }
    }

    pub fn morphism_scope(&self) -> (Vec<Mor>, MorphismScope) {
        self.base.morphism_scope()
    }

    pub fn try_inverse(&self, f: &Mor) -> Option<Mor> {
        self.base.try_inverse(f)
    }

    pub fn is_iso(&self, f: &Mor) -> bool {
        self.try_inverse(f).is_some()
    }

    pub fn inverse(&self, f: &Mor, context: &str) -> CatResult<Mor> {
        self.try_inverse(f).ok_or_else(|| {
            CatError::TypeMismatch(format!(
                "{context}: {} is not invertible",
                self.mor_label(f)
            ))
        })
    }

    pub fn obj_label(&self, x: Obj) -> String {
        self.base.obj_label(x)
    }

    pub fn mor_label(&self, f: &Mor) -> String {
        self.base.mor_label(f)
    }

    pub fn type_label(&self, f: &Mor) -> String {
        match (self.dom(f), self.cod(f)) {
            (Ok(a), Ok(b)) => format!(
                "{}: {} -> {}",
                self.mor_label(f),
                self.obj_label(a),
                self.obj_label(b)
            ),
            _ => self.mor_label(f),
        }
    }

    pub fn check_type(&self, f: &Mor, dom: Obj, cod: Obj, what: &str) -> CatResult<()> {
        let (a, b) = (self.dom(f)?, self.cod(f)?);
        if a == dom && b == cod {
            Ok(())
        } else {
            Err(CatError::TypeMismatch(format!(
                "{what}: expected {} -> {}, got {} -> {}",
                self.obj_label(dom),
                self.obj_label(cod),
                self.obj_label(a),
                self.obj_label(b)
            )))
        }
    }

    /// Scope statement used in reports.
    pub fn scope_statement(&self) -> String {
        let (mors, kind) = self.morphism_scope();
        let objs = self.objects().len();
        match kind {
            MorphismScope::Exhaustive => {
                format!("{}: exhaustive over {objs} objects and {} morphisms", self.name(), mors.len())
            }
            MorphismScope::Generators => format!(
                "{}: exhaustive over {objs} objects; morphisms sampled from {} generators plus identities",
                self.name(),
                mors.len()
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn view_flags_are_involutive() {
        let c = CategoryView::new(TableCategory::discrete_group(3));
        assert_eq!(c.op().op(), c);
        assert_eq!(c.cop().cop(), c);
        assert_eq!(c.op().cop(), c.op_cop());
        assert_ne!(c.op(), c);
    }

    #[test]
    fn cop_reverses_tensor_and_op_reverses_compose() {
        let c = CategoryView::new(BoolMatrixCategory::new(3).unwrap());
        let f = Mor::Matrix(BoolMatrix::from_rows(&[
            &[true, false],
            &[true, true],
            &[false, true],
        ]));
        let g = Mor::Matrix(BoolMatrix::from_rows(&[&[true]]));
        assert_eq!(c.cop().tensor(&f, &g).unwrap(), c.tensor(&g, &f).unwrap());
        let h = Mor::Matrix(BoolMatrix::from_rows(&[&[true, false, true]]));
        assert_eq!(c.op().compose(&f, &h).unwrap(), c.compose(&h, &f).unwrap());
        assert_eq!(c.op().dom(&f).unwrap(), Obj(3));
    }
}
