//! JSON file formats for categories, duals, functors and linear functors.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cat::{
    CatError, CategoryFile, CategoryView, DualEntryFile, DualsFile, HomFile, MonoidalCategory, Mor,
    Obj, TableCategory,
};
use crate::duality::{
    build_adjoint_equivalence, AdjointEquivalence, DualEntry, DualityAssignment, Side,
};
use crate::error::{Error, Result};
use crate::functor::{FunctorData, PairMap, Structure};
use crate::instances;
use crate::linear::LinearFunctorData;

/// A loaded category together with its name tables when it came from a table.
#[derive(Clone, Debug)]
pub struct LoadedCategory {
    pub view: CategoryView,
    table: Option<Arc<TableCategory>>,
    pub duals: Option<AdjointEquivalence>,
}

impl LoadedCategory {
    pub fn obj(&self, name: &str) -> Result<Obj> {
        match &self.table {
            Some(t) => t
                .obj_by_name(name)
                .ok_or_else(|| Error::Input(format!("unknown object {name}"))),
            None => name
                .parse()
                .map(Obj)
                .map_err(|_| Error::Input(format!("unknown object {name}"))),
        }
    }

    pub fn mor(&self, name: &str) -> Result<Mor> {
        match &self.table {
            Some(t) => t
                .mor_by_name(name)
                .ok_or_else(|| Error::Input(format!("unknown morphism {name}"))),
            None => Err(Error::Input(format!(
                "morphism {name} cannot be named in a builtin category"
            ))),
        }
    }

    /// The file's duals if present, otherwise the standard choice.
    pub fn adjoint(&self) -> Result<AdjointEquivalence> {
        match &self.duals {
            Some(a) => Ok(a.clone()),
            None => instances::duals(&self.view),
        }
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let s = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&s).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

pub fn write_json<T: Serialize>(path: &Path, v: &T) -> Result<()> {
    let s = serde_json::to_string_pretty(v).map_err(|e| Error::Input(e.to_string()))?;
    std::fs::write(path, s + "\n").map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

pub fn load_category(file: &CategoryFile) -> Result<LoadedCategory> {
    if let Some(b) = &file.builtin {
        let view = instances::category(b)?;
        return Ok(LoadedCategory {
            view,
            table: None,
            duals: None,
        });
    }
    let t = Arc::new(TableCategory::from_file(file)?);
    let view = CategoryView::from_arc(t.clone() as Arc<dyn MonoidalCategory>);
    let mut lc = LoadedCategory {
        view,
        table: Some(t),
        duals: None,
    };
    if let Some(d) = &file.duals {
        let left = load_duals(&lc, Side::Left, &d.left)?;
        let right = load_duals(&lc, Side::Right, &d.right)?;
        let (adj, _) = build_adjoint_equivalence(&left, &right)?;
        lc.duals = Some(adj);
    }
    Ok(lc)
}

fn load_duals(
    lc: &LoadedCategory,
    side: Side,
    m: &BTreeMap<String, DualEntryFile>,
) -> Result<DualityAssignment> {
    if m.is_empty() {
        return DualityAssignment::search(&lc.view, side);
    }
    let mut table = BTreeMap::new();
    for (x, e) in m {
        table.insert(
            lc.obj(x)?,
            DualEntry {
                dual: lc.obj(&e.dual)?,
                unit: lc.mor(&e.unit)?,
                counit: lc.mor(&e.counit)?,
            },
        );
    }
    DualityAssignment::from_table(side, lc.view.clone(), table).verified()
}

/// Full table form of an enumerable category, read through the view.
pub fn category_to_file(c: &CategoryView) -> Result<CategoryFile> {
    let objs = c.objects();
    let on = |x: Obj| c.obj_label(x);
    let mut homs = Vec::new();
    let mut all = Vec::new();
    for &a in &objs {
        for &b in &objs {
            let h = c.hom(a, b).ok_or_else(|| {
                Error::Cat(CatError::ScopeTooLarge(format!(
                    "hom({a}, {b}) is not enumerable"
                )))
            })?;
            if !h.is_empty() {
                homs.push(HomFile {
                    dom: on(a),
                    cod: on(b),
                    morphisms: h.iter().map(|f| c.mor_label(f)).collect(),
                });
            }
            all.extend(h);
        }
    }
    let mut compose = Vec::new();
    let mut tensor_mor = Vec::new();
    for g in &all {
        for f in &all {
            if c.dom(g)? == c.cod(f)? {
                compose.push([
                    c.mor_label(g),
                    c.mor_label(f),
                    c.mor_label(&c.compose(g, f)?),
                ]);
            }
            tensor_mor.push([
                c.mor_label(f),
                c.mor_label(g),
                c.mor_label(&c.tensor(f, g)?),
            ]);
        }
    }
    let mut tensor_obj = Vec::new();
    for &a in &objs {
        for &b in &objs {
            tensor_obj.push([on(a), on(b), on(c.tensor_obj(a, b)?)]);
        }
    }
    compose.sort();
    tensor_obj.sort();
    tensor_mor.sort();
    let identity = objs
        .iter()
        .map(|&x| Ok((on(x), c.mor_label(&c.identity(x)?))))
        .collect::<Result<_>>()?;
    Ok(CategoryFile {
        name: Some(c.name()),
        builtin: None,
        objects: objs.iter().map(|&x| on(x)).collect(),
        homs,
        identity,
        compose,
        tensor_obj,
        tensor_mor,
        unit: Some(on(c.unit())),
        duals: None,
    })
}

/// Duals of a table category in file form.
pub fn duals_to_file(adj: &AdjointEquivalence) -> Result<DualsFile> {
    let c = adj.category();
    let side = |d: &DualityAssignment| -> Result<BTreeMap<String, DualEntryFile>> {
        c.objects()
            .into_iter()
            .map(|x| {
                let e = d.entry(x)?;
                Ok((
                    c.obj_label(x),
                    DualEntryFile {
                        dual: c.obj_label(e.dual),
                        unit: c.mor_label(&e.unit),
                        counit: c.mor_label(&e.counit),
                    },
                ))
            })
            .collect()
    };
    Ok(DualsFile {
        left: side(&adj.left)?,
        right: side(&adj.right)?,
    })
}

/// Structure maps as `[x, y, morphism]` triples plus the unit component.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct StructureFile {
    pub two: Vec<[String; 3]>,
    pub zero: String,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct FunctorFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    /// Builtin functor reference; when set the remaining fields are ignored.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<String>,
    #[serde(default)]
    pub source: CategoryFile,
    #[serde(default)]
    pub target: CategoryFile,
    #[serde(default)]
    pub obj_map: BTreeMap<String, String>,
    #[serde(default)]
    pub mor_map: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monoidal: Option<StructureFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comonoidal: Option<StructureFile>,
}

pub struct LoadedFunctor {
    pub functor: FunctorData,
    pub source: LoadedCategory,
    pub target: LoadedCategory,
}

fn structure_from_file(
    s: &StructureFile,
    src: &LoadedCategory,
    tgt: &LoadedCategory,
) -> Result<Structure> {
    let mut two = HashMap::new();
    for [x, y, m] in &s.two {
        two.insert((src.obj(x)?, src.obj(y)?), tgt.mor(m)?);
    }
    let zero = tgt.mor(&s.zero)?;
    Ok(Structure::new(
        move |x, y| {
            two.get(&(x, y)).cloned().ok_or_else(|| {
                CatError::TypeMismatch(format!("no structure component at ({x}, {y})"))
            })
        },
        Ok(zero),
    ))
}

pub fn load_functor(file: &FunctorFile) -> Result<LoadedFunctor> {
    if let Some(b) = &file.builtin {
        let f = instances::functor(b)?;
        let source = LoadedCategory {
            view: f.source.clone(),
            table: None,
            duals: None,
        };
        let target = LoadedCategory {
            view: f.target.clone(),
            table: None,
            duals: None,
        };
        return Ok(LoadedFunctor {
            functor: f,
            source,
            target,
        });
    }
    let src = load_category(&file.source)?;
    let tgt = load_category(&file.target)?;
    let functor = functor_in(file, &src, &tgt)?;
    Ok(LoadedFunctor {
        functor,
        source: src,
        target: tgt,
    })
}

/// A functor file's maps read against already loaded categories.
fn functor_in(
    file: &FunctorFile,
    src: &LoadedCategory,
    tgt: &LoadedCategory,
) -> Result<FunctorData> {
    let mut om = HashMap::new();
    for (a, b) in &file.obj_map {
        om.insert(src.obj(a)?, tgt.obj(b)?);
    }
    let mut mm = HashMap::new();
    for (a, b) in &file.mor_map {
        mm.insert(src.mor(a)?, tgt.mor(b)?);
    }
    let mut f = FunctorData::new(
        file.name.clone().unwrap_or_else(|| "F".into()),
        src.view.clone(),
        tgt.view.clone(),
        move |x| om.get(&x).copied().ok_or(CatError::UnknownObject(x)),
        move |m| {
            mm.get(m)
                .cloned()
                .ok_or_else(|| CatError::TypeMismatch(format!("{m:?} is not in the morphism map")))
        },
    );
    if let Some(s) = &file.monoidal {
        f = f.with_monoidal(structure_from_file(s, src, tgt)?);
    }
    if let Some(s) = &file.comonoidal {
        f = f.with_comonoidal(structure_from_file(s, src, tgt)?);
    }
    Ok(f)
}

pub fn structure_to_file(s: &Structure, f: &FunctorData) -> Result<StructureFile> {
    let (c, d) = (&f.source, &f.target);
    let mut two = Vec::new();
    for x in c.objects() {
        for y in c.objects() {
            two.push([c.obj_label(x), c.obj_label(y), d.mor_label(&(s.two)(x, y)?)]);
        }
    }
    Ok(StructureFile {
        two,
        zero: d.mor_label(&s.zero.clone()?),
    })
}

/// File form of a functor between table categories.
pub fn functor_to_file(f: &FunctorData) -> Result<FunctorFile> {
    let (c, d) = (&f.source, &f.target);
    if !c.is_table() || !d.is_table() {
        return Err(Error::Input(format!(
            "{} is not between table categories; refer to it by builtin name",
            f.name
        )));
    }
    let mut obj_map = BTreeMap::new();
    for x in c.objects() {
        obj_map.insert(c.obj_label(x), d.obj_label(f.obj(x)?));
    }
    let mut mor_map = BTreeMap::new();
    for m in c.morphism_scope().0 {
        mor_map.insert(c.mor_label(&m), d.mor_label(&f.mor(&m)?));
    }
    Ok(FunctorFile {
        name: Some(f.name.clone()),
        builtin: None,
        source: category_to_file(c)?,
        target: category_to_file(d)?,
        obj_map,
        mor_map,
        monoidal: f
            .monoidal
            .as_ref()
            .map(|s| structure_to_file(s, f))
            .transpose()?,
        comonoidal: f
            .comonoidal
            .as_ref()
            .map(|s| structure_to_file(s, f))
            .transpose()?,
    })
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct LinearFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<String>,
    #[serde(default)]
    pub r: FunctorFile,
    #[serde(default)]
    pub l: FunctorFile,
    #[serde(default)]
    pub nu_r_r: Vec<[String; 3]>,
    #[serde(default)]
    pub nu_l_r: Vec<[String; 3]>,
    #[serde(default)]
    pub nu_r_l: Vec<[String; 3]>,
    #[serde(default)]
    pub nu_l_l: Vec<[String; 3]>,
}

fn pair_table(
    rows: &[[String; 3]],
    src: &LoadedCategory,
    tgt: &LoadedCategory,
    what: &'static str,
) -> Result<PairMap> {
    let mut m = HashMap::new();
    for [x, y, f] in rows {
        m.insert((src.obj(x)?, src.obj(y)?), tgt.mor(f)?);
    }
    Ok(Arc::new(move |x, y| {
        m.get(&(x, y))
            .cloned()
            .ok_or_else(|| CatError::TypeMismatch(format!("no {what} component at ({x}, {y})")))
    }))
}

pub fn load_linear(
    file: &LinearFile,
) -> Result<(LinearFunctorData, LoadedCategory, LoadedCategory)> {
    if let Some(b) = &file.builtin {
        let lf = instances::linear(b)?;
        let s = LoadedCategory {
            view: lf.source().clone(),
            table: None,
            duals: None,
        };
        let t = LoadedCategory {
            view: lf.target().clone(),
            table: None,
            duals: None,
        };
        return Ok((lf, s, t));
    }
    let r = load_functor(&file.r)?;
    let (s, t) = (&r.source, &r.target);
    let l = functor_in(&file.l, s, t)?;
    let lf = LinearFunctorData::new(
        file.name.clone().unwrap_or_else(|| "(R, L)".into()),
        r.functor.clone().renamed("R"),
        l.renamed("L"),
        pair_table(&file.nu_r_r, s, t, "nu_r_R")?,
        pair_table(&file.nu_l_r, s, t, "nu_l_R")?,
        pair_table(&file.nu_r_l, s, t, "nu_r_L")?,
        pair_table(&file.nu_l_l, s, t, "nu_l_L")?,
    );
    Ok((lf, r.source, r.target))
}

/// File form of a linear functor between table categories.
pub fn linear_to_file(lf: &LinearFunctorData) -> Result<LinearFile> {
    let (c, d) = (lf.source(), lf.target());
    let table = |p: &PairMap| -> Result<Vec<[String; 3]>> {
        let mut out = Vec::new();
        for x in c.objects() {
            for y in c.objects() {
                out.push([c.obj_label(x), c.obj_label(y), d.mor_label(&p(x, y)?)]);
            }
        }
        Ok(out)
    };
    Ok(LinearFile {
        name: Some(lf.name.clone()),
        builtin: None,
        r: functor_to_file(&lf.r)?,
        l: functor_to_file(&lf.l)?,
        nu_r_r: table(&lf.nu_rr)?,
        nu_l_r: table(&lf.nu_lr)?,
        nu_r_l: table(&lf.nu_rl)?,
        nu_l_l: table(&lf.nu_ll)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::TableCategory;

    #[test]
    fn category_file_round_trip() {
        let c = CategoryView::new(TableCategory::truncated_nat(3));
        let f = category_to_file(&c).unwrap();
        let back = load_category(&f).unwrap();
        assert_eq!(category_to_file(&back.view).unwrap(), f);
    }

    #[test]
    fn functor_file_round_trip() {
        let f = instances::functor("z4-to-z2").unwrap();
        let file = functor_to_file(&f).unwrap();
        let g = load_functor(&file).unwrap();
        assert_eq!(functor_to_file(&g.functor).unwrap(), file);
    }

    #[test]
    fn duals_round_trip() {
        let c = instances::category("discrete:4").unwrap();
        let mut file = category_to_file(&c).unwrap();
        file.duals = Some(duals_to_file(&instances::duals(&c).unwrap()).unwrap());
        let back = load_category(&file).unwrap();
        assert_eq!(back.adjoint().unwrap().s(Obj(1)).unwrap(), Obj(3));
    }

    #[test]
    fn linear_file_round_trip() {
        let lf = instances::linear("posetal-nat:3:A").unwrap();
        let file = linear_to_file(&lf).unwrap();
        let (back, _, _) = load_linear(&file).unwrap();
        assert_eq!(linear_to_file(&back).unwrap().nu_r_l, file.nu_r_l);
        assert!(crate::linear::check_linear(&back).unwrap().passed());
    }
}
