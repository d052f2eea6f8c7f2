//! Functors between category views, with optional monoidal and comonoidal
//! structure, and natural transformations between them.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cat::{CatError, CatResult, CategoryView, Mor, Obj};
use crate::error::{Error, Result};

pub type ObjMap = Arc<dyn Fn(Obj) -> CatResult<Obj> + Send + Sync>;
pub type MorMap = Arc<dyn Fn(&Mor) -> CatResult<Mor> + Send + Sync>;
pub type PairMap = Arc<dyn Fn(Obj, Obj) -> CatResult<Mor> + Send + Sync>;
pub type ComponentMap = Arc<dyn Fn(Obj) -> CatResult<Mor> + Send + Sync>;

/// Structure maps `(two, zero)`: `f₂, f₀` for monoidal, `F₂, F₀` for comonoidal.
#[derive(Clone)]
pub struct Structure {
    pub two: PairMap,
    pub zero: CatResult<Mor>,
}

impl Structure {
    pub fn new(
        two: impl Fn(Obj, Obj) -> CatResult<Mor> + Send + Sync + 'static,
        zero: CatResult<Mor>,
    ) -> Self {
        Structure {
            two: Arc::new(two),
            zero,
        }
    }

    fn swapped(&self) -> Structure {
        let two = self.two.clone();
        Structure {
            two: Arc::new(move |x, y| two(y, x)),
            zero: self.zero.clone(),
        }
    }
}

#[derive(Clone)]
pub struct FunctorData {
    pub name: String,
    pub source: CategoryView,
    pub target: CategoryView,
    obj_map: ObjMap,
    mor_map: MorMap,
    pub monoidal: Option<Structure>,
    pub comonoidal: Option<Structure>,
}

impl fmt::Debug for FunctorData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} -> {} (monoidal: {}, comonoidal: {})",
            self.name,
            self.source.name(),
            self.target.name(),
            self.monoidal.is_some(),
            self.comonoidal.is_some()
        )
    }
}

impl FunctorData {
    pub fn new(
        name: impl Into<String>,
        source: CategoryView,
        target: CategoryView,
        obj_map: impl Fn(Obj) -> CatResult<Obj> + Send + Sync + 'static,
        mor_map: impl Fn(&Mor) -> CatResult<Mor> + Send + Sync + 'static,
    ) -> Self {
        FunctorData {
            name: name.into(),
            source,
            target,
            obj_map: Arc::new(obj_map),
            mor_map: Arc::new(mor_map),
            monoidal: None,
            comonoidal: None,
        }
    }

    /// Identity functor with identity monoidal and comonoidal structure.
    pub fn identity(c: &CategoryView) -> Self {
        let ids = |c: CategoryView| {
            let zero = c.identity(c.unit());
            Structure::new(move |x, y| c.identity(c.tensor_obj(x, y)?), zero)
        };
        FunctorData::new(format!("Id[{}]", c.name()), c.clone(), c.clone(), Ok, |f| {
            Ok(f.clone())
        })
        .with_monoidal(ids(c.clone()))
        .with_comonoidal(ids(c.clone()))
    }

    /// A functor between thin categories sending each arrow to the unique
    /// arrow between the images.
    pub fn thin(
        name: impl Into<String>,
        source: CategoryView,
        target: CategoryView,
        obj_map: impl Fn(Obj) -> CatResult<Obj> + Send + Sync + 'static,
    ) -> Self {
        let obj_map: ObjMap = Arc::new(obj_map);
        let (om, s, t) = (obj_map.clone(), source.clone(), target.clone());
        FunctorData::new(
            name,
            source,
            target,
            move |x| obj_map(x),
            move |m| {
                let (a, b) = (om(s.dom(m)?)?, om(s.cod(m)?)?);
                unique(&t, a, b, "image of an arrow")
            },
        )
    }

    pub fn with_monoidal(mut self, s: Structure) -> Self {
        self.monoidal = Some(s);
        self
    }

    pub fn with_comonoidal(mut self, s: Structure) -> Self {
        self.comonoidal = Some(s);
        self
    }

    pub fn without_comonoidal(mut self) -> Self {
        self.comonoidal = None;
        self
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Monoidal structure made of the unique arrows `FX⊗FY → F(X⊗Y)`, `𝟙 → F𝟙`.
    pub fn thin_monoidal(&self) -> Structure {
        let (f, t) = (self.clone(), self.target.clone());
        let (f0, t0) = (self.clone(), self.target.clone());
        Structure::new(
            move |x, y| {
                let a = t.tensor_obj(f.obj(x)?, f.obj(y)?)?;
                let b = f.obj(f.source.tensor_obj(x, y)?)?;
                unique(&t, a, b, "monoidal structure map")
            },
            f0.obj(f0.source.unit())
                .and_then(|b| unique(&t0, t0.unit(), b, "monoidal unit map")),
        )
    }

    /// Comonoidal structure made of the unique arrows `F(X⊗Y) → FX⊗FY`, `F𝟙 → 𝟙`.
    pub fn thin_comonoidal(&self) -> Structure {
        let (f, t) = (self.clone(), self.target.clone());
        let (f0, t0) = (self.clone(), self.target.clone());
        Structure::new(
            move |x, y| {
                let a = f.obj(f.source.tensor_obj(x, y)?)?;
                let b = t.tensor_obj(f.obj(x)?, f.obj(y)?)?;
                unique(&t, a, b, "comonoidal structure map")
            },
            f0.obj(f0.source.unit())
                .and_then(|a| unique(&t0, a, t0.unit(), "comonoidal unit map")),
        )
    }

    /// Comonoidal structure `F₂ = f₂⁻¹`, `F₀ = f₀⁻¹` of a strong monoidal functor.
    pub fn inverse_comonoidal(&self) -> Result<Structure> {
        let m = self
            .monoidal
            .clone()
            .ok_or_else(|| missing(self, "monoidal"))?;
        let (t, t0) = (self.target.clone(), self.target.clone());
        let two = m.two.clone();
        let zero = m.zero.clone().and_then(|f0| inv(&t0, &f0, "f0"));
        Ok(Structure::new(move |x, y| inv(&t, &two(x, y)?, "f2"), zero))
    }

    pub fn obj(&self, x: Obj) -> CatResult<Obj> {
        (self.obj_map)(x)
    }

    pub fn mor(&self, f: &Mor) -> CatResult<Mor> {
        (self.mor_map)(f)
    }

    pub fn f2(&self, x: Obj, y: Obj) -> Result<Mor> {
        let m = self
            .monoidal
            .as_ref()
            .ok_or_else(|| missing(self, "monoidal"))?;
        Ok((m.two)(x, y)?)
    }

    pub fn f0(&self) -> Result<Mor> {
        let m = self
            .monoidal
            .as_ref()
            .ok_or_else(|| missing(self, "monoidal"))?;
        Ok(m.zero.clone()?)
    }

    pub fn cf2(&self, x: Obj, y: Obj) -> Result<Mor> {
        let m = self
            .comonoidal
            .as_ref()
            .ok_or_else(|| missing(self, "comonoidal"))?;
        Ok((m.two)(x, y)?)
    }

    pub fn cf0(&self) -> Result<Mor> {
        let m = self
            .comonoidal
            .as_ref()
            .ok_or_else(|| missing(self, "comonoidal"))?;
        Ok(m.zero.clone()?)
    }

    /// `F^op: C^op → D^op`; monoidal and comonoidal structure trade places.
    pub fn op(&self) -> Self {
        FunctorData {
            name: format!("{}^op", self.name),
            source: self.source.op(),
            target: self.target.op(),
            obj_map: self.obj_map.clone(),
            mor_map: self.mor_map.clone(),
            monoidal: self.comonoidal.clone(),
            comonoidal: self.monoidal.clone(),
        }
    }

    /// `F^cop: C^cop → D^cop` with structure maps taken at swapped arguments.
    pub fn cop(&self) -> Self {
        FunctorData {
            name: format!("{}^cop", self.name),
            source: self.source.cop(),
            target: self.target.cop(),
            obj_map: self.obj_map.clone(),
            mor_map: self.mor_map.clone(),
            monoidal: self.monoidal.as_ref().map(Structure::swapped),
            comonoidal: self.comonoidal.as_ref().map(Structure::swapped),
        }
    }

    /// The composite `G ∘ F`, with composite structure where both carry it.
    pub fn then(&self, g: &FunctorData) -> Result<FunctorData> {
        if !(self.target.same_base(&g.source)
            && self.target.is_op() == g.source.is_op()
            && self.target.is_cop() == g.source.is_cop())
        {
            return Err(Error::TypeMismatch {
                subtree: format!("{} then {}", self.name, g.name),
                detail: format!(
                    "target {} is not source {}",
                    self.target.name(),
                    g.source.name()
                ),
            });
        }
        let (f1, g1) = (self.clone(), g.clone());
        let (f2, g2) = (self.clone(), g.clone());
        let mut out = FunctorData::new(
            format!("{}{}", g.name, self.name),
            self.source.clone(),
            g.target.clone(),
            move |x| g1.obj(f1.obj(x)?),
            move |m| g2.mor(&f2.mor(m)?),
        );
        if self.monoidal.is_some() && g.monoidal.is_some() {
            let (f, gg, d) = (self.clone(), g.clone(), g.target.clone());
            let zero = (|| -> Result<Mor> { Ok(d.compose(&g.mor(&self.f0()?)?, &g.f0()?)?) })();
            out.monoidal = Some(Structure::new(
                move |x, y| {
                    let inner = gg.f2(f.obj(x)?, f.obj(y)?).map_err(cat)?;
                    let outer = gg.mor(&f.f2(x, y).map_err(cat)?)?;
                    d.compose(&outer, &inner)
                },
                zero.map_err(cat),
            ));
        }
        if self.comonoidal.is_some() && g.comonoidal.is_some() {
            let (f, gg, d) = (self.clone(), g.clone(), g.target.clone());
            let zero = (|| -> Result<Mor> { Ok(d.compose(&g.cf0()?, &g.mor(&self.cf0()?)?)?) })();
            out.comonoidal = Some(Structure::new(
                move |x, y| {
                    let inner = gg.mor(&f.cf2(x, y).map_err(cat)?)?;
                    let outer = gg.cf2(f.obj(x)?, f.obj(y)?).map_err(cat)?;
                    d.compose(&outer, &inner)
                },
                zero.map_err(cat),
            ));
        }
        Ok(out)
    }
}

fn missing(f: &FunctorData, what: &str) -> Error {
    Error::MissingStructure(format!("{} has no {what} structure", f.name))
}

/// Flatten a crate error into a category error for use inside structure closures.
pub(crate) fn cat(e: Error) -> CatError {
    match e {
        Error::Cat(c) => c,
        other => CatError::TypeMismatch(other.to_string()),
    }
}

pub(crate) fn unique(t: &CategoryView, a: Obj, b: Obj, context: &str) -> CatResult<Mor> {
    t.unique_arrow(a, b).ok_or_else(|| CatError::MissingArrow {
        dom: t.obj_label(a),
        cod: t.obj_label(b),
        context: context.into(),
    })
}

fn inv(t: &CategoryView, f: &Mor, what: &str) -> CatResult<Mor> {
    t.try_inverse(f).ok_or_else(|| {
        CatError::TypeMismatch(format!(
            "{what} component {} is not invertible",
            t.mor_label(f)
        ))
    })
}

/// Which structure a natural transformation is asked to respect.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flavor {
    Plain,
    Monoidal,
    Comonoidal,
    MonoidalComonoidal,
    ComonoidalMonoidal,
}

impl Flavor {
    pub fn parse(s: &str) -> Option<Flavor> {
        Some(match s {
            "plain" => Flavor::Plain,
            "monoidal" => Flavor::Monoidal,
            "comonoidal" => Flavor::Comonoidal,
            "monoidal-comonoidal" => Flavor::MonoidalComonoidal,
            "comonoidal-monoidal" => Flavor::ComonoidalMonoidal,
            _ => return None,
        })
    }
}

/// A transformation `α: F → G` between parallel functors, components in `G.target`.
#[derive(Clone)]
pub struct NatTransfData {
    pub name: String,
    pub source: FunctorData,
    pub target: FunctorData,
    component: ComponentMap,
    pub flavor: Flavor,
}

impl fmt::Debug for NatTransfData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} => {} ({:?})",
            self.name, self.source.name, self.target.name, self.flavor
        )
    }
}

impl NatTransfData {
    pub fn new(
        name: impl Into<String>,
        source: FunctorData,
        target: FunctorData,
        flavor: Flavor,
        component: impl Fn(Obj) -> CatResult<Mor> + Send + Sync + 'static,
    ) -> Self {
        NatTransfData {
            name: name.into(),
            source,
            target,
            component: Arc::new(component),
            flavor,
        }
    }

    pub fn component(&self, x: Obj) -> CatResult<Mor> {
        (self.component)(x)
    }

    pub fn category(&self) -> &CategoryView {
        &self.target.target
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::TableCategory;

    #[test]
    fn op_swaps_structure_and_views() {
        let c = CategoryView::new(TableCategory::discrete_group(4));
        let f = FunctorData::identity(&c).without_comonoidal();
        let g = f.op();
        assert!(g.monoidal.is_none() && g.comonoidal.is_some());
        assert!(g.target.is_op());
        assert_eq!(g.op().target, c);
    }

    #[test]
    fn thin_functor_reports_missing_arrows() {
        let n = CategoryView::new(TableCategory::truncated_nat(3));
        let down = FunctorData::thin("down", n.clone(), n.clone(), |x| Ok(Obj(3 - x.0)));
        let f = n.unique_arrow(Obj(0), Obj(1)).unwrap();
        assert!(matches!(down.mor(&f), Err(CatError::MissingArrow { .. })));
    }

    #[test]
    fn composite_structure_of_identities_is_identity() {
        let c = CategoryView::new(TableCategory::discrete_group(3));
        let id = FunctorData::identity(&c);
        let gf = id.then(&id).unwrap();
        assert_eq!(gf.f2(Obj(1), Obj(2)).unwrap(), c.identity(Obj(0)).unwrap());
        assert_eq!(gf.cf0().unwrap(), c.identity(Obj(0)).unwrap());
    }
}
