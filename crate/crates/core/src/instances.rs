//! The instance catalog: concrete categories, functors and linear functors,
//! including deliberately broken variants.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cat::{
    BoolMatrix, BoolMatrixCategory, CatError, CatResult, CategoryFile, CategoryView, Mor, Obj,
    TableCategory,
};
use crate::duality::{autonomous_structure, AdjointEquivalence};
use crate::error::{Error, Result};
use crate::functor::{unique, FunctorData, PairMap, Structure};
use crate::linear::LinearFunctorData;
use crate::structures::{AutonomyWitness, Provenance};

/// What a builtin name resolves to.
#[derive(Clone, Debug)]
pub enum Builtin {
    Category(CategoryView),
    Functor(FunctorData),
    Linear(LinearFunctorData),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InstanceKind {
    PosetalMonoid,
    DiscreteGroup,
    BoolMatrix,
    Functor,
    Linear,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub kind: InstanceKind,
    pub parameters: String,
    pub description: String,
    /// Broken on purpose.
    pub negative: bool,
}

pub fn build_discrete_group(n: u32) -> Result<CategoryView> {
    if n == 0 {
        return Err(Error::Input("group order must be at least 1".into()));
    }
    Ok(CategoryView::new(TableCategory::discrete_group(n)))
}

pub fn build_bool_matrix(n: u32) -> Result<CategoryView> {
    Ok(CategoryView::new(BoolMatrixCategory::new(n)?))
}

pub fn build_posetal_category(n: u32) -> Result<CategoryView> {
    if n < 3 {
        return Err(Error::Input(format!(
            "posetal-nat bound must be at least 3, got {n}"
        )));
    }
    Ok(CategoryView::new(TableCategory::truncated_nat(n)))
}

/// `(ℕ≤N, +)` with the two linear functors `(R, L)`: `R = 0`, and `L` the
/// modified successor (variant A) or the identity (variant B).
pub fn build_posetal_nat(n: u32) -> Result<(CategoryView, LinearFunctorData, LinearFunctorData)> {
    let c = build_posetal_category(n)?;
    let a = posetal_linear(&c, n, 'A');
    let b = posetal_linear(&c, n, 'B');
    Ok((c, a, b))
}

fn posetal_linear(c: &CategoryView, n: u32, variant: char) -> LinearFunctorData {
    let r = FunctorData::thin("R", c.clone(), c.clone(), |_| Ok(Obj(0)));
    let r = r.clone().with_monoidal(r.thin_monoidal());
    let l = if variant == 'A' {
        FunctorData::thin("L", c.clone(), c.clone(), move |x| {
            Ok(if x.0 == 0 { x } else { Obj((x.0 + 1).min(n)) })
        })
    } else {
        FunctorData::thin("L", c.clone(), c.clone(), Ok)
    };
    let l = l.clone().with_comonoidal(l.thin_comonoidal());
    let st = |lhs: fn(
        &FunctorData,
        &FunctorData,
        &CategoryView,
        Obj,
        Obj,
    ) -> CatResult<(Obj, Obj)>|
     -> PairMap {
        let (r, l, c) = (r.clone(), l.clone(), c.clone());
        Arc::new(move |x, y| {
            let (a, b) = lhs(&r, &l, &c, x, y)?;
            unique(&c, a, b, "strength")
        })
    };
    let nu_rr = st(|r, l, c, x, y| {
        Ok((
            r.obj(c.tensor_obj(x, y)?)?,
            c.tensor_obj(l.obj(x)?, r.obj(y)?)?,
        ))
    });
    let nu_lr = st(|r, l, c, x, y| {
        Ok((
            r.obj(c.tensor_obj(x, y)?)?,
            c.tensor_obj(r.obj(x)?, l.obj(y)?)?,
        ))
    });
    let nu_rl = st(|r, l, c, x, y| {
        Ok((
            c.tensor_obj(r.obj(x)?, l.obj(y)?)?,
            l.obj(c.tensor_obj(x, y)?)?,
        ))
    });
    let nu_ll = st(|r, l, c, x, y| {
        Ok((
            c.tensor_obj(l.obj(x)?, r.obj(y)?)?,
            l.obj(c.tensor_obj(x, y)?)?,
        ))
    });
    LinearFunctorData::new(
        format!("posetal-nat:{n}:{variant}"),
        r,
        l,
        nu_rr,
        nu_lr,
        nu_rl,
        nu_ll,
    )
}

/// The homomorphism `ℤ_n → ℤ_m`, `g ↦ k·g`, strong with identity structure maps.
pub fn group_hom(name: &str, n: u32, m: u32, k: u32) -> Result<FunctorData> {
    if !(n * k).is_multiple_of(m) {
        return Err(Error::Input(format!(
            "g -> {k}g is not a homomorphism Z{n} -> Z{m}"
        )));
    }
    let (c, d) = (build_discrete_group(n)?, build_discrete_group(m)?);
    let img = move |g: u32| (g * k) % m;
    let f = FunctorData::new(
        name,
        c.clone(),
        d.clone(),
        move |x| Ok(Obj(img(x.0))),
        move |f| match f {
            Mor::Table(g) => Ok(Mor::Table(img(*g))),
            other => Err(CatError::TypeMismatch(format!(
                "{other:?} is not a morphism of Z{n}"
            ))),
        },
    );
    Ok(with_identity_structure(f))
}

fn with_identity_structure(f: FunctorData) -> FunctorData {
    let ids = |f: &FunctorData| {
        let (g, d) = (f.clone(), f.target.clone());
        let zero = f.obj(f.source.unit()).and_then(|x| d.identity(x));
        Structure::new(
            move |x, y| d.identity(g.obj(g.source.tensor_obj(x, y)?)?),
            zero,
        )
    };
    let (m, c) = (ids(&f), ids(&f));
    f.with_monoidal(m).with_comonoidal(c)
}

/// A permutation of `0..k` for every dimension `k`.
pub type PermFamily = Arc<dyn Fn(u32) -> Vec<u32> + Send + Sync>;

fn perm_matrix(p: &[u32]) -> BoolMatrix {
    BoolMatrix::from_function(p.len() as u32, p)
}

fn perm_inverse(p: &[u32]) -> BoolMatrix {
    perm_matrix(p).transpose()
}

fn matrix(f: &Mor) -> CatResult<&BoolMatrix> {
    match f {
        Mor::Matrix(m) => Ok(m),
        Mor::Table(_) => Err(CatError::ForeignMorphism {
            category: "bool".into(),
        }),
    }
}

/// `F(f) = P_n f P_m⁻¹` for a permutation family `P` with `P_1 = 1`, and
/// `f₂ = P_{mn}(P_m⁻¹ ⊗ P_n⁻¹)`, `F₂ = f₂⁻¹`.
pub fn bool_conjugation(
    name: impl Into<String>,
    n: u32,
    family: PermFamily,
) -> Result<FunctorData> {
    let c = build_bool_matrix(n)?;
    let p = family.clone();
    let f = FunctorData::new(name, c.clone(), c.clone(), Ok, move |f| {
        let m = matrix(f)?;
        perm_matrix(&p(m.rows()))
            .mul(m)
            .and_then(|pm| pm.mul(&perm_inverse(&p(m.cols()))))
            .map(Mor::Matrix)
            .ok_or_else(|| CatError::TypeMismatch("dimension mismatch in relabeling".into()))
    });
    let p = family;
    let f2 = move |x: Obj, y: Obj| -> CatResult<Mor> {
        let inv = perm_inverse(&p(x.0)).kronecker(&perm_inverse(&p(y.0)));
        perm_matrix(&p(x.0 * y.0))
            .mul(&inv)
            .map(Mor::Matrix)
            .ok_or_else(|| CatError::TypeMismatch("bad permutation family".into()))
    };
    let mono = Structure::new(f2, Ok(Mor::Matrix(BoolMatrix::identity(1))));
    let f = f.with_monoidal(mono);
    let co = f.inverse_comonoidal()?;
    Ok(f.with_comonoidal(co))
}

/// Conjugation by the cyclic shifts `j ↦ j + 1 mod k`.
pub fn bool_relabel(n: u32) -> Result<FunctorData> {
    bool_conjugation(
        format!("bool-relabel:{n}"),
        n,
        Arc::new(|k| (0..k).map(|j| (j + 1) % k).collect()),
    )
}

pub fn bool_identity(n: u32) -> Result<FunctorData> {
    let c = build_bool_matrix(n)?;
    Ok(FunctorData::identity(&c).renamed(format!("bool-identity:{n}")))
}

/// Relabeling with `f₂ = 1`: not natural.
pub fn bool_relabel_bad_f2(n: u32) -> Result<FunctorData> {
    let f = bool_relabel(n)?.without_comonoidal();
    let mono = Structure::new(
        |x: Obj, y: Obj| Ok(Mor::Matrix(BoolMatrix::identity(x.0 * y.0))),
        Ok(Mor::Matrix(BoolMatrix::identity(1))),
    );
    Ok(f.with_monoidal(mono)
        .renamed(format!("bool-relabel-bad-f2:{n}")))
}

/// Identity with `f₀ = 0`: breaks the unit laws.
pub fn bool_identity_bad_f0(n: u32) -> Result<FunctorData> {
    let f = bool_identity(n)?.without_comonoidal();
    let two = f.monoidal.clone().expect("identity is monoidal").two;
    let mono = Structure {
        two,
        zero: Ok(Mor::Matrix(BoolMatrix::zeros(1, 1))),
    };
    Ok(f.with_monoidal(mono)
        .renamed(format!("bool-identity-bad-f0:{n}")))
}

/// `κ = 0`: natural, not invertible.
pub fn zero_kappa() -> AutonomyWitness {
    AutonomyWitness::from_kappa(Provenance::Given, |x| {
        Ok(Mor::Matrix(BoolMatrix::zeros(x.0, x.0)))
    })
}

/// Linear functor whose `ν^r_R_{2,1}` is zeroed.
pub fn bool_relabel_linear_bad_nu(n: u32) -> Result<LinearFunctorData> {
    let mut lf = LinearFunctorData::from_frobenius(&bool_relabel(n)?)?;
    let good = lf.nu_rr.clone();
    lf.nu_rr = Arc::new(move |x, y| {
        if (x.0, y.0) == (2, 1) {
            Ok(Mor::Matrix(BoolMatrix::zeros(2, 2)))
        } else {
            good(x, y)
        }
    });
    lf.name = format!("bool-relabel-linear-bad-nu:{n}");
    Ok(lf)
}

/// Linear functor whose `ν^l_R_{1,2}` is zeroed.
pub fn bool_relabel_linear_bad_nu_l(n: u32) -> Result<LinearFunctorData> {
    let mut lf = LinearFunctorData::from_frobenius(&bool_relabel(n)?)?;
    let good = lf.nu_lr.clone();
    lf.nu_lr = Arc::new(move |x, y| {
        if (x.0, y.0) == (1, 2) {
            Ok(Mor::Matrix(BoolMatrix::zeros(2, 2)))
        } else {
            good(x, y)
        }
    });
    lf.name = format!("bool-relabel-linear-bad-nu-l:{n}");
    Ok(lf)
}

fn parse_param(name: &str, p: Option<&str>, default: u32) -> Result<u32> {
    match p {
        None => Ok(default),
        Some(s) => s
            .parse()
            .map_err(|_| Error::Input(format!("bad parameter {s:?} in builtin {name}"))),
    }
}

/// Resolve a builtin name such as `discrete:4`, `bool-relabel:2` or `posetal-nat:6:A`.
pub fn resolve(name: &str) -> Result<Builtin> {
    let mut parts = name.split(':');
    let head = parts.next().unwrap_or_default();
    let p1 = parts.next();
    let p2 = parts.next();
    let num = |d| parse_param(name, p1, d);
    use Builtin::*;
    Ok(match head {
        "discrete" => Category(build_discrete_group(num(4)?)?),
        "posetal-nat" => match p2 {
            None => Category(build_posetal_category(num(6)?)?),
            Some(v) => {
                let (_, a, b) = build_posetal_nat(num(6)?)?;
                match v {
                    "A" => Linear(a),
                    "B" => Linear(b),
                    _ => return Err(Error::Input(format!("unknown posetal-nat variant {v}"))),
                }
            }
        },
        "bool" => Category(build_bool_matrix(num(2)?)?),
        "z4-identity" => {
            Functor(FunctorData::identity(&build_discrete_group(4)?).renamed("z4-identity"))
        }
        "z4-negation" => Functor(group_hom("z4-negation", 4, 4, 3)?),
        "z4-to-z2" => Functor(group_hom("z4-to-z2", 4, 2, 1)?),
        "z2-to-z4" => Functor(group_hom("z2-to-z4", 2, 4, 2)?),
        "bool-identity" => Functor(bool_identity(num(2)?)?),
        "bool-relabel" => Functor(bool_relabel(num(2)?)?),
        "bool-relabel-bad-f2" => Functor(bool_relabel_bad_f2(num(2)?)?),
        "bool-identity-bad-f0" => Functor(bool_identity_bad_f0(num(2)?)?),
        "z4-identity-linear" => Linear(LinearFunctorData::from_frobenius(
            &FunctorData::identity(&build_discrete_group(4)?).renamed("z4-identity"),
        )?),
        "z4-negation-linear" => Linear(LinearFunctorData::from_frobenius(&group_hom(
            "z4-negation",
            4,
            4,
            3,
        )?)?),
        "bool-relabel-linear" => {
            Linear(LinearFunctorData::from_frobenius(&bool_relabel(num(2)?)?)?)
        }
        "bool-relabel-linear-bad-nu" => Linear(bool_relabel_linear_bad_nu(num(2)?)?),
        "bool-relabel-linear-bad-nu-l" => Linear(bool_relabel_linear_bad_nu_l(num(2)?)?),
        _ => return Err(Error::Input(format!("unknown builtin {name}"))),
    })
}

pub fn category(name: &str) -> Result<CategoryView> {
    match resolve(name)? {
        Builtin::Category(c) => Ok(c),
        _ => Err(Error::Input(format!("{name} is not a category"))),
    }
}

pub fn functor(name: &str) -> Result<FunctorData> {
    match resolve(name)? {
        Builtin::Functor(f) => Ok(f),
        _ => Err(Error::Input(format!("{name} is not a functor"))),
    }
}

pub fn linear(name: &str) -> Result<LinearFunctorData> {
    match resolve(name)? {
        Builtin::Linear(l) => Ok(l),
        _ => Err(Error::Input(format!("{name} is not a linear functor"))),
    }
}

/// Chosen left and right duals with their adjoint equivalence.
pub fn duals(c: &CategoryView) -> Result<AdjointEquivalence> {
    autonomous_structure(c)
}

/// Category file form: full tables for table categories, a `builtin` reference otherwise.
pub fn export_category(name: &str, c: &CategoryView) -> Result<CategoryFile> {
    if c.is_table() {
        return crate::io::category_to_file(c);
    }
    Ok(CategoryFile {
        name: Some(name.into()),
        builtin: Some(c.name()),
        ..Default::default()
    })
}

fn entry(
    name: &str,
    kind: InstanceKind,
    parameters: &str,
    description: &str,
    negative: bool,
) -> CatalogEntry {
    CatalogEntry {
        name: name.into(),
        kind,
        parameters: parameters.into(),
        description: description.into(),
        negative,
    }
}

pub fn catalog() -> Vec<CatalogEntry> {
    use InstanceKind::*;
    vec![
        entry(
            "discrete:N",
            DiscreteGroup,
            "N >= 1, default 4",
            "Z_N as a discrete category, tensor = addition",
            false,
        ),
        entry(
            "posetal-nat:N",
            PosetalMonoid,
            "N >= 3, default 6",
            "{0..N} under <=, tensor = min(m+n, N)",
            false,
        ),
        entry(
            "bool:N",
            BoolMatrix,
            "N <= 3, default 2",
            "Boolean matrices, Kronecker tensor, self-dual objects",
            false,
        ),
        entry("z4-identity", Functor, "", "identity on Z_4", false),
        entry("z4-negation", Functor, "", "g -> -g on Z_4", false),
        entry("z4-to-z2", Functor, "", "reduction Z_4 -> Z_2", false),
        entry("z2-to-z4", Functor, "", "g -> 2g, Z_2 -> Z_4", false),
        entry(
            "bool-identity:N",
            Functor,
            "N <= 3, default 2",
            "identity on bool:N",
            false,
        ),
        entry(
            "bool-relabel:N",
            Functor,
            "N <= 3, default 2",
            "conjugation by cyclic basis shifts",
            false,
        ),
        entry(
            "bool-relabel-bad-f2:N",
            Functor,
            "N <= 3, default 2",
            "relabeling with identity f2",
            true,
        ),
        entry(
            "bool-identity-bad-f0:N",
            Functor,
            "N <= 3, default 2",
            "identity with zero f0",
            true,
        ),
        entry(
            "posetal-nat:N:A",
            Linear,
            "N >= 3, default 6",
            "R = 0, L = modified successor",
            false,
        ),
        entry(
            "posetal-nat:N:B",
            Linear,
            "N >= 3, default 6",
            "R = 0, L = identity",
            false,
        ),
        entry("z4-identity-linear", Linear, "", "(Id, Id) on Z_4", false),
        entry(
            "z4-negation-linear",
            Linear,
            "",
            "(F, F) for negation on Z_4",
            false,
        ),
        entry(
            "bool-relabel-linear:N",
            Linear,
            "N <= 3, default 2",
            "(F, F) for the relabeling",
            false,
        ),
        entry(
            "bool-relabel-linear-bad-nu:N",
            Linear,
            "N <= 3, default 2",
            "relabeling pair with one strength component zeroed",
            true,
        ),
        entry(
            "bool-relabel-linear-bad-nu-l:N",
            Linear,
            "N <= 3, default 2",
            "relabeling pair with one left strength component zeroed",
            true,
        ),
    ]
}

/// Default-parameter names of every catalog entry.
pub fn catalog_names() -> Vec<String> {
    catalog()
        .into_iter()
        .map(|e| match e.name.strip_suffix(":N") {
            Some(h) => format!("{h}:{}", if h == "posetal-nat" { 6 } else { 2 }),
            None => e.name.replace(":N:", ":6:"),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::validate_category;
    use crate::structures::{check_frobenius, check_monoidal};

    #[test]
    fn every_catalog_name_resolves_and_categories_validate() {
        for n in catalog_names() {
            match resolve(&n).unwrap_or_else(|e| panic!("{n}: {e}")) {
                Builtin::Category(c) => assert!(validate_category(&c).unwrap().is_ok(), "{n}"),
                Builtin::Functor(f) => {
                    assert!(validate_category(&f.source).unwrap().is_ok(), "{n}")
                }
                Builtin::Linear(_) => {}
            }
        }
    }

    #[test]
    fn positive_functors_are_frobenius_and_negatives_are_not_monoidal() {
        for n in [
            "z4-identity",
            "z4-negation",
            "z4-to-z2",
            "z2-to-z4",
            "bool-identity:2",
            "bool-relabel:2",
        ] {
            let r = check_frobenius(&functor(n).unwrap()).unwrap();
            assert!(r.passed(), "{n}: {}", r.to_text());
        }
        for n in ["bool-relabel-bad-f2:2", "bool-identity-bad-f0:2"] {
            assert!(
                !check_monoidal(&functor(n).unwrap()).unwrap().passed(),
                "{n}"
            );
        }
    }

    #[test]
    fn relabel_is_nontrivial() {
        let f = bool_relabel(2).unwrap();
        let m = Mor::Matrix(BoolMatrix::from_rows(&[&[true, true], &[false, false]]));
        assert_eq!(
            f.mor(&m).unwrap(),
            Mor::Matrix(BoolMatrix::from_rows(&[&[false, false], &[true, true]]))
        );
    }

    #[test]
    fn scope_guards() {
        assert!(build_bool_matrix(4).is_err());
        assert!(build_posetal_category(2).is_err());
        assert!(build_discrete_group(0).is_err());
        assert!(resolve("nope").is_err());
    }

    #[test]
    fn corrupted_kappa_on_bool_identity_fails_eq1() {
        use crate::duality::Side;
        use crate::structures::{check_autonomous, AutonomyOptions};
        let f = bool_identity(2).unwrap();
        let adj = duals(&f.source).unwrap();
        let w = AutonomyWitness::from_kappa(Provenance::Given, |x| {
            Ok(Mor::Matrix(if x.0 == 2 {
                BoolMatrix::from_bits(2, 2, 0b0110)
            } else {
                BoolMatrix::identity(x.0)
            }))
        });
        let r = check_autonomous(
            &f,
            &adj.left,
            &adj.left,
            &w,
            Side::Left,
            AutonomyOptions::default(),
        )
        .unwrap();
        assert!(!r.holds("eq1:lax_pres_dual"), "{}", r.to_text());
    }

    #[test]
    fn corrupted_nu_breaks_linearity_and_closedness() {
        use crate::linear::{check_closedness_equations, check_linear};
        let lf = bool_relabel_linear_bad_nu(2).unwrap();
        let r = check_linear(&lf).unwrap();
        assert!(!r.holds("lf4"), "{}", r.to_text());
        let lf = bool_relabel_linear_bad_nu_l(2).unwrap();
        let adj = duals(lf.source()).unwrap();
        let cl = check_closedness_equations(&lf, &adj, &adj).unwrap();
        assert!(!cl.holds("nrl=left-closed"), "{}", cl.to_text());
    }
}
