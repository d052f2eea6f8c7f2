//! Property tests. Set FROBCAT_SEED to a number to make sampling reproducible.

use std::sync::Arc;
use std::time::Instant;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use frobcat::cat::{BoolMatrix, CategoryView, Mor, Obj};
use frobcat::duality::{find_left_dual, Side};
use frobcat::expr::{check_equation, eval, o, t, Env, MorphExpr};
use frobcat::functor::FunctorData;
use frobcat::instances;
use frobcat::linear::{build_omega, check_linear, frobenius_from_linear, LinearFunctorData};
use frobcat::report::{Audit, Report};
use frobcat::structures::{
    check_autonomous, check_frobenius, AutonomyOptions, AutonomyWitness, Provenance,
};
use frobcat::synthesis::{
    adjudicate_cor_frob, build_sigma_tau, kappa_from_frobenius, mate_kappa, mate_lambda,
    sigma_structure, synthesize_comonoidal, tau_structure,
};

fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    match std::env::var("FROBCAT_SEED")
        .ok()
        .and_then(|s| s.parse::<u64>().ok())
    {
        Some(seed) => {
            let mut bytes = [0u8; 32];
            bytes[..8].copy_from_slice(&seed.to_le_bytes());
            TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &bytes))
        }
        None => TestRunner::new(config),
    }
}

fn bool2() -> CategoryView {
    instances::category("bool:2").unwrap()
}

fn matrix(rows: u32, cols: u32) -> impl Strategy<Value = BoolMatrix> {
    (0..1u64 << (rows * cols)).prop_map(move |b| BoolMatrix::from_bits(rows, cols, b))
}

/// Dimensions `a → b → c` and matrices `f: a → b`, `g: b → c`.
fn composable() -> impl Strategy<Value = (BoolMatrix, BoolMatrix)> {
    (0..=3u32, 0..=3u32, 0..=3u32).prop_flat_map(|(a, b, c)| (matrix(b, a), matrix(c, b)))
}

fn em(m: &BoolMatrix) -> MorphExpr {
    MorphExpr::named(m.to_string(), Mor::Matrix(m.clone()))
}

fn mm(m: &BoolMatrix) -> Mor {
    Mor::Matrix(m.clone())
}

#[test]
fn table_composition_is_associative_and_unital() {
    let c = instances::category("posetal-nat:6").unwrap();
    let strat = (0..=6u32, 0..=6u32, 0..=6u32, 0..=6u32).prop_map(|(a, b, x, y)| {
        let mut v = [a, b, x, y];
        v.sort();
        v
    });
    runner(128)
        .run(&strat, |[a, b, x, y]| {
            let f = c.unique_arrow(Obj(a), Obj(b)).unwrap();
            let g = c.unique_arrow(Obj(b), Obj(x)).unwrap();
            let h = c.unique_arrow(Obj(x), Obj(y)).unwrap();
            let l = c.compose(&h, &c.compose(&g, &f).unwrap()).unwrap();
            let r = c.compose(&c.compose(&h, &g).unwrap(), &f).unwrap();
            prop_assert_eq!(l, r);
            prop_assert_eq!(
                c.compose(&c.identity(Obj(b)).unwrap(), &f).unwrap(),
                f.clone()
            );
            prop_assert_eq!(c.compose(&f, &c.identity(Obj(a)).unwrap()).unwrap(), f);
            Ok(())
        })
        .unwrap();
}

#[test]
fn evaluation_is_total_and_invariant_under_double_op() {
    let c = bool2();
    let cc = c.op().op();
    let strat = (composable(), composable());
    runner(128)
        .run(&strat, |((f, g), (h, k))| {
            let e = o([t([em(&g), em(&k)]), t([em(&f), em(&h)])]);
            let v = eval(&c, &e, &Env::new());
            prop_assert!(v.is_ok(), "well-typed expression failed: {:?}", v);
            prop_assert_eq!(v.unwrap(), eval(&cc, &e, &Env::new()).unwrap());
            Ok(())
        })
        .unwrap();
}

#[test]
fn check_equation_is_symmetric() {
    let c = bool2();
    let strat = (0..=3u32, 0..=3u32).prop_flat_map(|(a, b)| (matrix(b, a), matrix(b, a)));
    runner(128)
        .run(&strat, |(f, g)| {
            let (l, r) = (em(&f), em(&g));
            let v1 = check_equation(&c, &l, &r, &Env::new()).unwrap().holds;
            let v2 = check_equation(&c, &r, &l, &Env::new()).unwrap().holds;
            prop_assert_eq!(v1, v2);
            prop_assert_eq!(v1, f == g);
            Ok(())
        })
        .unwrap();
}

/// Entrywise transpose, computed directly.
fn oracle_transpose(f: &BoolMatrix) -> BoolMatrix {
    let mut t = BoolMatrix::zeros(f.cols(), f.rows());
    for i in 0..f.rows() {
        for j in 0..f.cols() {
            t.set(j, i, f.get(i, j));
        }
    }
    t
}

#[test]
fn transpose_is_contravariant_and_matches_oracle() {
    let c = bool2();
    let adj = instances::duals(&c).unwrap();
    runner(128)
        .run(&composable(), |(f, g)| {
            let gf = c.compose(&mm(&g), &mm(&f)).unwrap();
            let s = |m: &Mor| adj.left.transpose(m).unwrap();
            prop_assert_eq!(s(&gf), c.compose(&s(&mm(&f)), &s(&mm(&g))).unwrap());
            prop_assert_eq!(s(&mm(&f)), mm(&oracle_transpose(&f)));
            prop_assert_eq!(
                adj.right.transpose(&mm(&f)).unwrap(),
                mm(&oracle_transpose(&f))
            );
            Ok(())
        })
        .unwrap();
}

#[test]
fn group_duals_are_inverses() {
    runner(32)
        .run(&(1..=8u32).prop_flat_map(|n| (Just(n), 0..n)), |(n, g)| {
            let c = instances::category(&format!("discrete:{n}")).unwrap();
            let e = find_left_dual(&c, Obj(g), None).unwrap();
            prop_assert_eq!(e.dual, Obj((n - g) % n));
            Ok(())
        })
        .unwrap();
}

/// Group homomorphisms `ℤ_n → ℤ_m`, `g ↦ k·g`.
fn group_homs() -> impl Strategy<Value = (u32, u32, u32)> {
    (1..=6u32, 1..=6u32, 0..6u32)
        .prop_filter("homomorphism", |&(n, m, k)| k < m && (n * k) % m == 0)
}

fn hom(n: u32, m: u32, k: u32) -> FunctorData {
    instances::group_hom(&format!("Z{n}->Z{m} x{k}"), n, m, k).unwrap()
}

/// Conjugation functors for random permutations of dimensions 2 and 3.
fn conjugations() -> impl Strategy<Value = FunctorData> {
    (
        Just(vec![0u32, 1]).prop_shuffle(),
        Just(vec![0u32, 1, 2]).prop_shuffle(),
    )
        .prop_map(|(p2, p3)| {
            let fam = move |k: u32| match k {
                2 => p2.clone(),
                3 => p3.clone(),
                _ => (0..k).collect(),
            };
            instances::bool_conjugation("conj".to_string(), 2, Arc::new(fam)).unwrap()
        })
}

fn frobenius_loop(f: &FunctorData) -> Result<(), TestCaseError> {
    let (ac, ad) = (
        instances::duals(&f.source).unwrap(),
        instances::duals(&f.target).unwrap(),
    );
    prop_assert!(check_frobenius(f).unwrap().passed());
    let w = kappa_from_frobenius(f, &ac, &ad).unwrap();
    let opts = AutonomyOptions::default();
    let left = check_autonomous(f, &ac.left, &ad.left, &w, Side::Left, opts).unwrap();
    prop_assert!(left.passed(), "{}", left.to_text());
    for (p, q) in [
        ("eq1:lax_pres_dual", "eq1:ka-db"),
        ("eq2:lax_pres_dual", "eq2:ka-ev"),
    ] {
        prop_assert_eq!(left.holds(p), left.holds(q));
    }
    let k = w.kappa.clone().unwrap();
    let l = mate_lambda(f, k.clone(), &ac, &ad);
    let k2 = mate_kappa(f, l.clone(), &ac, &ad);
    let l2 = mate_lambda(f, k2.clone(), &ac, &ad);
    for x in f.source.objects() {
        prop_assert_eq!(k(x).unwrap(), k2(x).unwrap());
        prop_assert_eq!(l(x).unwrap(), l2(x).unwrap());
    }
    let mono = f.clone().without_comonoidal();
    let so = build_sigma_tau(&mono, &w, &ac, &ad).unwrap();
    let (s, t) = (
        sigma_structure(&mono, &so, &ac, &ad),
        tau_structure(&mono, &so, &ac, &ad),
    );
    let syn = synthesize_comonoidal(&mono, &so, &ac, &ad).unwrap();
    for x in f.source.objects() {
        for y in f.source.objects() {
            prop_assert_eq!((s.two)(x, y).unwrap(), (t.two)(x, y).unwrap());
            prop_assert_eq!((syn.structure.two)(x, y).unwrap(), f.cf2(x, y).unwrap());
        }
    }
    prop_assert_eq!(syn.structure.zero.clone().unwrap(), f.cf0().unwrap());
    Ok(())
}

#[test]
fn frobenius_group_homs_close_the_loop() {
    runner(24)
        .run(&group_homs(), |(n, m, k)| frobenius_loop(&hom(n, m, k)))
        .unwrap();
}

#[test]
fn frobenius_conjugations_close_the_loop() {
    runner(6)
        .run(&conjugations(), |f| frobenius_loop(&f))
        .unwrap();
}

#[test]
fn six_conditions_agree_on_group_homs() {
    runner(12)
        .run(&group_homs(), |(n, m, k)| {
            let f = hom(n, m, k);
            let (ac, ad) = (
                instances::duals(&f.source).unwrap(),
                instances::duals(&f.target).unwrap(),
            );
            let w = kappa_from_frobenius(&f, &ac, &ad).unwrap();
            let mm = adjudicate_cor_frob(&f.clone().without_comonoidal(), &ac, &ad, &[w]).unwrap();
            prop_assert!(mm.agreement() && mm.all_true(), "{:?}", mm.verdicts);
            Ok(())
        })
        .unwrap();
}

#[test]
fn kappa_iso_iff_lambda_iso_and_sigma_iso_iff_tau_iso() {
    let f = instances::functor("bool-relabel:2").unwrap();
    let (ac, ad) = (
        instances::duals(&f.source).unwrap(),
        instances::duals(&f.target).unwrap(),
    );
    let mono = f.clone().without_comonoidal();
    let strat = (matrix(2, 2), matrix(3, 3), any::<bool>());
    runner(48)
        .run(&strat, |(k2, k3, zero0)| {
            let (k2c, k3c) = (k2.clone(), k3.clone());
            let kappa = move |x: Obj| -> frobcat::cat::CatResult<Mor> {
                Ok(Mor::Matrix(match x.0 {
                    0 if zero0 => BoolMatrix::zeros(0, 0),
                    2 => k2c.clone(),
                    3 => k3c.clone(),
                    n => BoolMatrix::identity(n),
                }))
            };
            let k: frobcat::functor::ComponentMap = Arc::new(kappa.clone());
            let lam = mate_lambda(&mono, k.clone(), &ac, &ad);
            let d = &f.target;
            let iso = |c: &frobcat::functor::ComponentMap| {
                f.source
                    .objects()
                    .into_iter()
                    .all(|x| d.is_iso(&c(x).unwrap()))
            };
            prop_assert_eq!(iso(&k), iso(&lam));
            let w = AutonomyWitness::from_kappa(Provenance::Given, kappa);
            if let Ok(so) = build_sigma_tau(&mono, &w, &ac, &ad) {
                prop_assert_eq!(iso(&so.sigma), iso(&so.tau));
            }
            Ok(())
        })
        .unwrap();
}

#[test]
fn frobenius_embeds_as_linear_and_back() {
    runner(16)
        .run(&group_homs(), |(n, m, k)| {
            let f = hom(n, m, k);
            let lf = LinearFunctorData::from_frobenius(&f).unwrap();
            let r = check_linear(&lf).unwrap();
            prop_assert!(r.passed(), "{}", r.to_text());
            let (_, back) = frobenius_from_linear(&lf).unwrap();
            prop_assert!(back.passed());
            let (ac, ad) = (
                instances::duals(&f.source).unwrap(),
                instances::duals(&f.target).unwrap(),
            );
            let (_, om) = build_omega(&lf, &ac.left, &ad.left).unwrap();
            prop_assert!(om.holds("frak-snake") && om.holds("frak-snake'"));
            Ok(())
        })
        .unwrap();
}

fn arb_report() -> impl Strategy<Value = Report> {
    let entry = (
        "[a-z:]{1,8}",
        proptest::collection::vec("[a-z0-9]{1,3}", 0..3),
        any::<bool>(),
        proptest::option::of("[a-z ]{0,10}"),
    );
    (
        proptest::collection::vec(entry, 0..8),
        proptest::collection::vec("[a-z ]{0,10}", 0..3),
    )
        .prop_map(|(es, notes)| {
            let mut a = Audit::new();
            for (id, inst, ok, note) in es {
                a.fact(&id, inst, ok, note);
            }
            for n in notes {
                a.note(n);
            }
            Report::new("r", vec!["s".into()], a, Instant::now())
        })
}

#[test]
fn reports_round_trip_and_exit_code_follows_summary() {
    runner(128)
        .run(&arb_report(), |r| {
            prop_assert_eq!(&Report::from_json(&r.to_json()).unwrap(), &r);
            prop_assert_eq!(r.exit_code(), if r.summary.failed == 0 { 0 } else { 1 });
            prop_assert_eq!(
                r.summary.failed,
                r.entries.iter().filter(|e| !e.verdict.passed()).count()
            );
            Ok(())
        })
        .unwrap();
}
