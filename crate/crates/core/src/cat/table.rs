use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::{CatError, CatResult, MonoidalCategory, Mor, MorphismScope, Obj};

/// A finite strict monoidal category given by explicit tables.
#[derive(Debug, Clone, PartialEq)]
pub struct TableCategory {
    name: String,
    obj_names: Vec<String>,
    mor_names: Vec<String>,
    dom: Vec<Obj>,
    cod: Vec<Obj>,
    identity: Vec<u32>,
    compose: HashMap<(u32, u32), u32>,
    tensor_obj: HashMap<(Obj, Obj), Obj>,
    tensor_mor: HashMap<(u32, u32), u32>,
    unit: Obj,
    homs: BTreeMap<(Obj, Obj), Vec<u32>>,
}

/// Incremental construction of a [`TableCategory`].
#[derive(Debug, Default)]
pub struct TableCategoryBuilder {
    name: String,
    obj_names: Vec<String>,
    mor_names: Vec<String>,
    dom: Vec<Obj>,
    cod: Vec<Obj>,
    identity: HashMap<Obj, u32>,
    compose: HashMap<(u32, u32), u32>,
    tensor_obj: HashMap<(Obj, Obj), Obj>,
    tensor_mor: HashMap<(u32, u32), u32>,
    unit: Option<Obj>,
}

impl TableCategoryBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        TableCategoryBuilder {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn object(&mut self, name: impl Into<String>) -> Obj {
        self.obj_names.push(name.into());
        Obj(self.obj_names.len() as u32 - 1)
    }

    pub fn morphism(&mut self, name: impl Into<String>, dom: Obj, cod: Obj) -> u32 {
        self.mor_names.push(name.into());
        self.dom.push(dom);
        self.cod.push(cod);
        self.mor_names.len() as u32 - 1
    }

    pub fn identity(&mut self, x: Obj, f: u32) -> &mut Self {
        self.identity.insert(x, f);
        self
    }

    /// Record `g ∘ f = h`.
    pub fn compose(&mut self, g: u32, f: u32, h: u32) -> &mut Self {
        self.compose.insert((g, f), h);
        self
    }

    pub fn tensor_obj(&mut self, a: Obj, b: Obj, c: Obj) -> &mut Self {
        self.tensor_obj.insert((a, b), c);
        self
    }

    pub fn tensor_mor(&mut self, f: u32, g: u32, h: u32) -> &mut Self {
        self.tensor_mor.insert((f, g), h);
        self
    }

    pub fn unit(&mut self, x: Obj) -> &mut Self {
        self.unit = Some(x);
        self
    }

    pub fn build(self) -> CatResult<TableCategory> {
        let n_obj = self.obj_names.len() as u32;
        let n_mor = self.mor_names.len() as u32;
        let obj_ok = |x: Obj| x.0 < n_obj;
        let mor_ok = |f: u32| f < n_mor;
        let unit = self
            .unit
            .ok_or_else(|| CatError::MalformedTable("no unit object".into()))?;
        if !obj_ok(unit) {
            return Err(CatError::MalformedTable(format!(
                "unit {unit} is not an object"
            )));
        }
        for (i, (&a, &b)) in self.dom.iter().zip(&self.cod).enumerate() {
            if !obj_ok(a) || !obj_ok(b) {
                return Err(CatError::MalformedTable(format!(
                    "morphism {} has unknown endpoint",
                    self.mor_names[i]
                )));
            }
        }
        let mut identity = Vec::with_capacity(n_obj as usize);
        for x in 0..n_obj {
            let f = *self.identity.get(&Obj(x)).ok_or_else(|| {
                CatError::MalformedTable(format!(
                    "object {} has no identity",
                    self.obj_names[x as usize]
                ))
            })?;
            if !mor_ok(f) {
                return Err(CatError::MalformedTable(format!(
                    "identity of object {x} is unknown"
                )));
            }
            identity.push(f);
        }
        for (&(g, f), &h) in &self.compose {
            if !mor_ok(g) || !mor_ok(f) || !mor_ok(h) {
                return Err(CatError::MalformedTable(format!(
                    "compose entry ({g}, {f}) -> {h} references unknown ids"
                )));
            }
        }
        for (&(a, b), &c) in &self.tensor_obj {
            if !obj_ok(a) || !obj_ok(b) || !obj_ok(c) {
                return Err(CatError::MalformedTable(format!(
                    "tensor_obj entry ({a}, {b}) -> {c} references unknown ids"
                )));
            }
        }
        for (&(f, g), &h) in &self.tensor_mor {
            if !mor_ok(f) || !mor_ok(g) || !mor_ok(h) {
                return Err(CatError::MalformedTable(format!(
                    "tensor_mor entry ({f}, {g}) -> {h} references unknown ids"
                )));
            }
        }
        let mut homs: BTreeMap<(Obj, Obj), Vec<u32>> = BTreeMap::new();
        for a in 0..n_obj {
            for b in 0..n_obj {
                homs.insert((Obj(a), Obj(b)), Vec::new());
            }
        }
        for f in 0..n_mor {
            homs.get_mut(&(self.dom[f as usize], self.cod[f as usize]))
                .unwrap()
                .push(f);
        }
        Ok(TableCategory {
            name: self.name,
            obj_names: self.obj_names,
            mor_names: self.mor_names,
            dom: self.dom,
            cod: self.cod,
            identity,
            compose: self.compose,
            tensor_obj: self.tensor_obj,
            tensor_mor: self.tensor_mor,
            unit,
            homs,
        })
    }
}

impl TableCategory {
    /// The discrete category on ℤ_n with tensor given by addition mod n.
    pub fn discrete_group(n: u32) -> TableCategory {
        assert!(n >= 1, "group order must be positive");
        let mut b = TableCategoryBuilder::new(format!("discrete:{n}"));
        for g in 0..n {
            let x = b.object(g.to_string());
            let id = b.morphism(format!("id{g}"), x, x);
            b.identity(x, id);
            b.compose(id, id, id);
        }
        for g in 0..n {
            for h in 0..n {
                b.tensor_obj(Obj(g), Obj(h), Obj((g + h) % n));
                b.tensor_mor(g, h, (g + h) % n);
            }
        }
        b.unit(Obj(0));
        b.build().expect("discrete group table is well formed")
    }

    /// The poset `{0..=bound}` under `≤`, with saturating addition as tensor.
    pub fn truncated_nat(bound: u32) -> TableCategory {
        let mut b = TableCategoryBuilder::new(format!("posetal-nat:{bound}"));
        for n in 0..=bound {
            b.object(n.to_string());
        }
        let mut arrow = HashMap::new();
        for m in 0..=bound {
            for n in m..=bound {
                let f = b.morphism(format!("{m}<={n}"), Obj(m), Obj(n));
                arrow.insert((m, n), f);
                if m == n {
                    b.identity(Obj(m), f);
                }
            }
        }
        for (&(a, b1), &f) in &arrow {
            for (&(b2, c), &g) in &arrow {
                if b1 == b2 {
                    b.compose(g, f, arrow[&(a, c)]);
                }
            }
        }
        let sat = |x: u32, y: u32| (x + y).min(bound);
        for m in 0..=bound {
            for n in 0..=bound {
                b.tensor_obj(Obj(m), Obj(n), Obj(sat(m, n)));
            }
        }
        for (&(a, b1), &f) in &arrow {
            for (&(c, d), &g) in &arrow {
                b.tensor_mor(f, g, arrow[&(sat(a, c), sat(b1, d))]);
            }
        }
        b.unit(Obj(0));
        b.build().expect("truncated poset table is well formed")
    }

    pub fn object_count(&self) -> usize {
        self.obj_names.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.mor_names.len()
    }

    pub fn obj_by_name(&self, name: &str) -> Option<Obj> {
        self.obj_names
            .iter()
            .position(|n| n == name)
            .map(|i| Obj(i as u32))
    }

    pub fn mor_by_name(&self, name: &str) -> Option<Mor> {
        self.mor_names
            .iter()
            .position(|n| n == name)
            .map(|i| Mor::Table(i as u32))
    }

    pub fn obj_name(&self, x: Obj) -> &str {
        &self.obj_names[x.0 as usize]
    }

    pub fn mor_name(&self, f: &Mor) -> Option<&str> {
        match f {
            Mor::Table(i) => self.mor_names.get(*i as usize).map(String::as_str),
            Mor::Matrix(_) => None,
        }
    }

    fn id_of(&self, f: &Mor) -> CatResult<u32> {
        match f {
            Mor::Table(i) if (*i as usize) < self.mor_names.len() => Ok(*i),
            _ => Err(CatError::ForeignMorphism {
                category: self.name.clone(),
            }),
        }
    }

    /// Overwrite one composite; used to construct corrupted tables in tests.
    pub fn with_composite(mut self, g: &Mor, f: &Mor, h: &Mor) -> CatResult<Self> {
        let (g, f, h) = (self.id_of(g)?, self.id_of(f)?, self.id_of(h)?);
        self.compose.insert((g, f), h);
        Ok(self)
    }

    pub fn to_file(&self) -> CategoryFile {
        let on = |x: Obj| self.obj_names[x.0 as usize].clone();
        let mn = |f: u32| self.mor_names[f as usize].clone();
        let homs = self
            .homs
            .iter()
            .filter(|(_, v)| !v.is_empty())
            .map(|(&(a, b), v)| HomFile {
                dom: on(a),
                cod: on(b),
                morphisms: v.iter().map(|&f| mn(f)).collect(),
            })
            .collect();
        let mut compose: Vec<[String; 3]> = self
            .compose
            .iter()
            .map(|(&(g, f), &h)| [mn(g), mn(f), mn(h)])
            .collect();
        compose.sort();
        let mut tensor_obj: Vec<[String; 3]> = self
            .tensor_obj
            .iter()
            .map(|(&(a, b), &c)| [on(a), on(b), on(c)])
            .collect();
        tensor_obj.sort();
        let mut tensor_mor: Vec<[String; 3]> = self
            .tensor_mor
            .iter()
            .map(|(&(f, g), &h)| [mn(f), mn(g), mn(h)])
            .collect();
        tensor_mor.sort();
        CategoryFile {
            name: Some(self.name.clone()),
            builtin: None,
            objects: self.obj_names.clone(),
            homs,
            identity: (0..self.obj_names.len())
                .map(|x| (self.obj_names[x].clone(), mn(self.identity[x])))
                .collect(),
            compose,
            tensor_obj,
            tensor_mor,
            unit: Some(on(self.unit)),
            duals: None,
        }
    }

    pub fn from_file(file: &CategoryFile) -> CatResult<TableCategory> {
        if let Some(b) = &file.builtin {
            return Err(CatError::MalformedTable(format!(
                "builtin category {b} has no table form; load it through the instance catalog"
            )));
        }
        let mut b = TableCategoryBuilder::new(file.name.clone().unwrap_or_else(|| "file".into()));
        let mut objs = HashMap::new();
        for name in &file.objects {
            if objs.insert(name.clone(), b.object(name.clone())).is_some() {
                return Err(CatError::MalformedTable(format!("duplicate object {name}")));
            }
        }
        let obj = |n: &str| {
            objs.get(n)
                .copied()
                .ok_or_else(|| CatError::MalformedTable(format!("unknown object {n}")))
        };
        let mut mors = HashMap::new();
        for hom in &file.homs {
            let (a, c) = (obj(&hom.dom)?, obj(&hom.cod)?);
            for m in &hom.morphisms {
                if mors
                    .insert(m.clone(), b.morphism(m.clone(), a, c))
                    .is_some()
                {
                    return Err(CatError::MalformedTable(format!("duplicate morphism {m}")));
                }
            }
        }
        let mor = |n: &str| {
            mors.get(n)
                .copied()
                .ok_or_else(|| CatError::MalformedTable(format!("unknown morphism {n}")))
        };
        for (x, f) in &file.identity {
            b.identity(obj(x)?, mor(f)?);
        }
        for [g, f, h] in &file.compose {
            b.compose(mor(g)?, mor(f)?, mor(h)?);
        }
        for [x, y, z] in &file.tensor_obj {
            b.tensor_obj(obj(x)?, obj(y)?, obj(z)?);
        }
        for [f, g, h] in &file.tensor_mor {
            b.tensor_mor(mor(f)?, mor(g)?, mor(h)?);
        }
        let unit = file
            .unit
            .as_deref()
            .ok_or_else(|| CatError::MalformedTable("no unit object".into()))?;
        b.unit(obj(unit)?);
        b.build()
    }
}

impl MonoidalCategory for TableCategory {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn objects(&self) -> Vec<Obj> {
        (0..self.obj_names.len() as u32).map(Obj).collect()
    }

    fn contains_obj(&self, x: Obj) -> bool {
        (x.0 as usize) < self.obj_names.len()
    }

    fn unit(&self) -> Obj {
        self.unit
    }

    fn tensor_obj(&self, a: Obj, b: Obj) -> CatResult<Obj> {
        self.tensor_obj
            .get(&(a, b))
            .copied()
            .ok_or_else(|| CatError::MalformedTable(format!("tensor_obj undefined on ({a}, {b})")))
    }

    fn dom(&self, f: &Mor) -> CatResult<Obj> {
        Ok(self.dom[self.id_of(f)? as usize])
    }

    fn cod(&self, f: &Mor) -> CatResult<Obj> {
        Ok(self.cod[self.id_of(f)? as usize])
    }

    fn identity(&self, x: Obj) -> CatResult<Mor> {
        self.identity
            .get(x.0 as usize)
            .map(|&f| Mor::Table(f))
            .ok_or(CatError::UnknownObject(x))
    }

    fn compose(&self, g: &Mor, f: &Mor) -> CatResult<Mor> {
        let (gi, fi) = (self.id_of(g)?, self.id_of(f)?);
        if self.cod[fi as usize] != self.dom[gi as usize] {
            return Err(CatError::TypeMismatch(format!(
                "cannot compose {} after {}: codomain {} != domain {}",
                self.mor_names[gi as usize],
                self.mor_names[fi as usize],
                self.obj_names[self.cod[fi as usize].0 as usize],
                self.obj_names[self.dom[gi as usize].0 as usize]
            )));
        }
        self.compose
            .get(&(gi, fi))
            .map(|&h| Mor::Table(h))
            .ok_or_else(|| {
                CatError::MalformedTable(format!(
                    "compose undefined on ({}, {})",
                    self.mor_names[gi as usize], self.mor_names[fi as usize]
                ))
            })
    }

    fn tensor_mor(&self, f: &Mor, g: &Mor) -> CatResult<Mor> {
        let (fi, gi) = (self.id_of(f)?, self.id_of(g)?);
        self.tensor_mor
            .get(&(fi, gi))
            .map(|&h| Mor::Table(h))
            .ok_or_else(|| {
                CatError::MalformedTable(format!(
                    "tensor_mor undefined on ({}, {})",
                    self.mor_names[fi as usize], self.mor_names[gi as usize]
                ))
            })
    }

    fn hom(&self, a: Obj, b: Obj) -> Option<Vec<Mor>> {
        Some(
            self.homs
                .get(&(a, b))?
                .iter()
                .map(|&f| Mor::Table(f))
                .collect(),
        )
    }

    fn morphism_scope(&self) -> (Vec<Mor>, MorphismScope) {
        (
            (0..self.mor_names.len() as u32).map(Mor::Table).collect(),
            MorphismScope::Exhaustive,
        )
    }

    fn obj_label(&self, x: Obj) -> String {
        self.obj_names
            .get(x.0 as usize)
            .cloned()
            .unwrap_or_else(|| format!("?{x}"))
    }

    fn mor_label(&self, f: &Mor) -> String {
        self.mor_name(f)
            .map(str::to_owned)
            .unwrap_or_else(|| format!("{f:?}"))
    }

    fn is_table(&self) -> bool {
        true
    }
}

/// Category description file. Either a full table or a `builtin` reference.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct CategoryFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    /// Builtin instance reference such as `bool:2` or `discrete:4`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<String>,
    #[serde(default)]
    pub objects: Vec<String>,
    #[serde(default)]
    pub homs: Vec<HomFile>,
    #[serde(default)]
    pub identity: BTreeMap<String, String>,
    /// Triples `[g, f, g∘f]`.
    #[serde(default)]
    pub compose: Vec<[String; 3]>,
    #[serde(default)]
    pub tensor_obj: Vec<[String; 3]>,
    #[serde(default)]
    pub tensor_mor: Vec<[String; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub duals: Option<DualsFile>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HomFile {
    pub dom: String,
    pub cod: String,
    pub morphisms: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct DualsFile {
    #[serde(default)]
    pub left: BTreeMap<String, DualEntryFile>,
    #[serde(default)]
    pub right: BTreeMap<String, DualEntryFile>,
}

/// One chosen dual: the dual object and its unit and counit morphism ids.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DualEntryFile {
    pub dual: String,
    pub unit: String,
    pub counit: String,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discrete_tensor_is_addition() {
        let z4 = TableCategory::discrete_group(4);
        assert_eq!(z4.tensor_obj(Obj(1), Obj(2)).unwrap(), Obj(3));
        assert_eq!(z4.tensor_obj(Obj(3), Obj(2)).unwrap(), Obj(1));
        assert_eq!(
            z4.tensor_mor(&Mor::Table(1), &Mor::Table(2)).unwrap(),
            Mor::Table(3)
        );
    }

    #[test]
    fn truncated_nat_saturates() {
        let n = TableCategory::truncated_nat(6);
        assert_eq!(n.tensor_obj(Obj(4), Obj(5)).unwrap(), Obj(6));
        assert_eq!(n.hom(Obj(2), Obj(1)).unwrap().len(), 0);
        assert_eq!(n.hom(Obj(1), Obj(2)).unwrap().len(), 1);
        assert_eq!(n.morphism_count(), 28);
    }

    #[test]
    fn file_round_trip() {
        let n = TableCategory::truncated_nat(3);
        let back = TableCategory::from_file(&n.to_file()).unwrap();
        assert_eq!(back.to_file(), n.to_file());
    }

    #[test]
    fn unknown_ids_are_malformed() {
        let mut file = TableCategory::discrete_group(2).to_file();
        file.compose
            .push(["id0".into(), "nope".into(), "id0".into()]);
        assert!(matches!(
            TableCategory::from_file(&file),
            Err(CatError::MalformedTable(_))
        ));
    }

    #[test]
    fn compose_rejects_incomposable_pairs() {
        let n = TableCategory::truncated_nat(3);
        let f = n.mor_by_name("0<=1").unwrap();
        let g = n.mor_by_name("2<=3").unwrap();
        assert!(matches!(n.compose(&g, &f), Err(CatError::TypeMismatch(_))));
    }
}
