use serde::{Deserialize, Serialize};

use super::{CatError, CatResult, CategoryView, Mor, Obj};

/// One violated axiom with the objects or morphisms witnessing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub category: String,
    pub scope: String,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn axioms(&self) -> Vec<&str> {
        self.violations.iter().map(|v| v.axiom.as_str()).collect()
    }
}

struct Checker<'a> {
    c: &'a CategoryView,
    out: Vec<Violation>,
}

impl Checker<'_> {
    fn fail(&mut self, axiom: &str, witness: Vec<String>) {
        self.out.push(Violation {
            axiom: axiom.into(),
            witness,
        });
    }

    fn ml(&self, f: &Mor) -> String {
        self.c.mor_label(f)
    }

    fn ol(&self, x: Obj) -> String {
        self.c.obj_label(x)
    }

    /// Turns missing table entries into violations and keeps other errors.
    fn lift<T>(
        &mut self,
        r: CatResult<T>,
        axiom: &str,
        witness: impl FnOnce() -> Vec<String>,
    ) -> CatResult<Option<T>> {
        match r {
            Ok(v) => Ok(Some(v)),
            Err(CatError::MalformedTable(msg)) | Err(CatError::TypeMismatch(msg)) => {
                let mut w = witness();
                w.push(msg);
                self.fail(axiom, w);
                Ok(None)
            }
            Err(e) => Err(e),
        }
    }
}

/// Check every strict monoidal category axiom on the view's quantification scope.
pub fn validate_category(c: &CategoryView) -> CatResult<ValidationReport> {
    let c = &c.plain();
    let mut ck = Checker { c, out: Vec::new() };
    let objs = c.objects();
    let (mors, _) = c.morphism_scope();
    let unit = c.unit();

    let typed: Vec<(Mor, Obj, Obj)> = mors
        .iter()
        .map(|f| Ok((f.clone(), c.dom(f)?, c.cod(f)?)))
        .collect::<CatResult<_>>()?;

    for &x in &objs {
        let id = c.identity(x)?;
        if c.dom(&id)? != x || c.cod(&id)? != x {
            ck.fail("identity typing", vec![ck.ol(x)]);
        }
    }

    let mut composable = Vec::new();
    for (f, a, b) in &typed {
        for (g, b2, cc) in &typed {
            if b != b2 {
                continue;
            }
            let gf = ck.lift(c.compose(g, f), "composition closure", || {
                vec![ck_label(c, g), ck_label(c, f)]
            })?;
            if let Some(gf) = gf {
                if c.dom(&gf)? != *a || c.cod(&gf)? != *cc {
                    ck.fail("composite typing", vec![ck.ml(g), ck.ml(f), ck.ml(&gf)]);
                }
                composable.push((f.clone(), g.clone(), gf));
            }
        }
    }

    for (f, a, b) in &typed {
        let ida = c.identity(*a)?;
        let idb = c.identity(*b)?;
        let left = ck.lift(c.compose(&idb, f), "identity neutrality", || {
            vec![ck_label(c, f)]
        })?;
        let right = ck.lift(c.compose(f, &ida), "identity neutrality", || {
            vec![ck_label(c, f)]
        })?;
        if left.as_ref().is_some_and(|l| l != f) || right.as_ref().is_some_and(|r| r != f) {
            let mut w = vec![ck.ml(f)];
            if left.as_ref() != Some(f) {
                w.push(format!("at object {}", ck.ol(*b)));
            }
            if right.as_ref() != Some(f) {
                w.push(format!("at object {}", ck.ol(*a)));
            }
            ck.fail("identity neutrality", w);
        }
    }

    for (f, g, gf) in &composable {
        let b = c.cod(g)?;
        for (h, d, _) in &typed {
            if *d != b {
                continue;
            }
            let Some(hg) = ck.lift(c.compose(h, g), "composition closure", || {
                vec![ck_label(c, h), ck_label(c, g)]
            })?
            else {
                continue;
            };
            let l = ck.lift(c.compose(h, gf), "composition closure", Vec::new)?;
            let r = ck.lift(c.compose(&hg, f), "composition closure", Vec::new)?;
            if let (Some(l), Some(r)) = (l, r) {
                if l != r {
                    ck.fail("associativity", vec![ck.ml(h), ck.ml(g), ck.ml(f)]);
                }
            }
        }
    }

    for &x in &objs {
        let lu = c.tensor_obj(unit, x);
        let ru = c.tensor_obj(x, unit);
        if lu.as_ref().ok() != Some(&x) || ru.as_ref().ok() != Some(&x) {
            ck.fail("unit neutrality on objects", vec![ck.ol(x)]);
        }
        for &y in &objs {
            let Some(xy) = ck.lift(c.tensor_obj(x, y), "tensor closure", || {
                vec![ck_ol(c, x), ck_ol(c, y)]
            })?
            else {
                continue;
            };
            for &z in &objs {
                let l = ck.lift(c.tensor_obj(xy, z), "tensor closure", Vec::new)?;
                let r = c.tensor_obj(y, z).and_then(|yz| c.tensor_obj(x, yz));
                let r = ck.lift(r, "tensor closure", Vec::new)?;
                if let (Some(l), Some(r)) = (l, r) {
                    if l != r {
                        ck.fail(
                            "tensor associativity on objects",
                            vec![ck.ol(x), ck.ol(y), ck.ol(z)],
                        );
                    }
                }
            }
        }
        let idx = c.identity(x)?;
        for &y in &objs {
            let idy = c.identity(y)?;
            let t = ck.lift(c.tensor(&idx, &idy), "tensor closure", || {
                vec![ck_ol(c, x), ck_ol(c, y)]
            })?;
            let expect = c.tensor_obj(x, y).and_then(|xy| c.identity(xy)).ok();
            if t.is_some() && t != expect {
                ck.fail("tensor preserves identities", vec![ck.ol(x), ck.ol(y)]);
            }
        }
    }

    let id_unit = c.identity(unit)?;
    for (f, a, b) in &typed {
        let l = ck.lift(c.tensor(&id_unit, f), "tensor closure", || {
            vec![ck_label(c, f)]
        })?;
        let r = ck.lift(c.tensor(f, &id_unit), "tensor closure", || {
            vec![ck_label(c, f)]
        })?;
        if l.as_ref().is_some_and(|l| l != f) || r.as_ref().is_some_and(|r| r != f) {
            ck.fail("unit neutrality on morphisms", vec![ck.ml(f)]);
        }
        for (g, a2, b2) in &typed {
            let Some(fg) = ck.lift(c.tensor(f, g), "tensor closure", || {
                vec![ck_label(c, f), ck_label(c, g)]
            })?
            else {
                continue;
            };
            let want = (c.tensor_obj(*a, *a2)?, c.tensor_obj(*b, *b2)?);
            if (c.dom(&fg)?, c.cod(&fg)?) != want {
                ck.fail("tensor typing", vec![ck.ml(f), ck.ml(g)]);
                continue;
            }
            let f1 = c.tensor(f, &c.identity(*a2)?)?;
            let g1 = c.tensor(&c.identity(*b)?, g)?;
            let f2 = c.tensor(f, &c.identity(*b2)?)?;
            let g2 = c.tensor(&c.identity(*a)?, g)?;
            let via1 = ck.lift(c.compose(&g1, &f1), "composition closure", Vec::new)?;
            let via2 = ck.lift(c.compose(&f2, &g2), "composition closure", Vec::new)?;
            if via1.as_ref().is_some_and(|m| *m != fg) || via2.as_ref().is_some_and(|m| *m != fg) {
                ck.fail("interchange", vec![ck.ml(f), ck.ml(g)]);
            }
            for (h, _, _) in &typed {
                let l = c.tensor(&fg, h);
                let r = c.tensor(g, h).and_then(|gh| c.tensor(f, &gh));
                if let (Ok(l), Ok(r)) = (l, r) {
                    if l != r {
                        ck.fail(
                            "tensor associativity on morphisms",
                            vec![ck.ml(f), ck.ml(g), ck.ml(h)],
                        );
                    }
                }
            }
        }
    }

    for (f, g, gf) in &composable {
        for (f2, g2, gf2) in &composable {
            let lhs = c
                .tensor(g, g2)
                .and_then(|gg| c.tensor(f, f2).and_then(|ff| c.compose(&gg, &ff)));
            let rhs = c.tensor(gf, gf2);
            if let (Ok(l), Ok(r)) = (lhs, rhs) {
                if l != r {
                    ck.fail(
                        "tensor bifunctoriality",
                        vec![ck.ml(g), ck.ml(f), ck.ml(g2), ck.ml(f2)],
                    );
                }
            }
        }
    }

    Ok(ValidationReport {
        category: c.name(),
        scope: c.scope_statement(),
        violations: ck.out,
    })
}

fn ck_label(c: &CategoryView, f: &Mor) -> String {
    c.mor_label(f)
}

fn ck_ol(c: &CategoryView, x: Obj) -> String {
    c.obj_label(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::{BoolMatrixCategory, TableCategory};

    #[test]
    fn z2_is_valid() {
        let c = CategoryView::new(TableCategory::discrete_group(2));
        assert!(validate_category(&c).unwrap().is_ok());
    }

    #[test]
    fn corrupted_identity_is_named() {
        let z2 = TableCategory::discrete_group(2);
        let id1 = z2.mor_by_name("id1").unwrap();
        let id0 = z2.mor_by_name("id0").unwrap();
        let bad = z2.with_composite(&id1, &id1, &id0).unwrap();
        let rep = validate_category(&CategoryView::new(bad)).unwrap();
        let v = rep
            .violations
            .iter()
            .find(|v| v.axiom == "identity neutrality")
            .unwrap();
        assert!(v.witness.iter().any(|w| w == "at object 1"));
    }

    #[test]
    fn truncated_nat_is_valid() {
        let c = CategoryView::new(TableCategory::truncated_nat(6));
        assert!(validate_category(&c).unwrap().is_ok());
    }

    #[test]
    fn bool_matrices_are_valid() {
        let c = CategoryView::new(BoolMatrixCategory::new(2).unwrap());
        let rep = validate_category(&c).unwrap();
        assert!(rep.is_ok(), "{:?}", rep.violations.first());
    }
}
