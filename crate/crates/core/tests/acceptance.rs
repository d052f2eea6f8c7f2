//! One line per acceptance criterion. Every criterion is exact; the time
//! budgets are pinned below.

use std::time::{Duration, Instant};

use frobcat::cat::{BoolMatrix, CategoryView, Mor, Obj};
use frobcat::duality::{AdjointEquivalence, Side};
use frobcat::functor::FunctorData;
use frobcat::instances::{self, zero_kappa};
use frobcat::linear::{adjudicate_when_lin_frob, check_linear, linear_diagnostic};
use frobcat::structures::{check_autonomous, AutonomyOptions, AutonomyWitness};
use frobcat::synthesis::{
    adjudicate_cor_frob, build_sigma_tau, complete_witness, kappa_from_frobenius, mate_kappa,
    mate_lambda, sigma_structure, strong_inverse, tau_structure,
};

const BUDGET_1: Duration = Duration::from_secs(1);
const BUDGET_2: Duration = Duration::from_secs(5);
const BUDGET_3: Duration = Duration::from_secs(10);
const BUDGET_4: Duration = Duration::from_secs(5);
const BUDGET_7: Duration = Duration::from_secs(5);

const FROBENIUS: [&str; 6] = [
    "z4-identity",
    "z4-negation",
    "z4-to-z2",
    "z2-to-z4",
    "bool-identity:2",
    "bool-relabel:2",
];
const NON_MONOIDAL: [&str; 2] = ["bool-relabel-bad-f2:2", "bool-identity-bad-f0:2"];
const LINEAR_AUTONOMOUS: [&str; 3] = [
    "z4-identity-linear",
    "z4-negation-linear",
    "bool-relabel-linear:2",
];

struct Outcome {
    ok: bool,
    detail: String,
}

fn adj(c: &CategoryView) -> AdjointEquivalence {
    instances::duals(c).expect("catalog categories are autonomous")
}

fn setup(name: &str) -> (FunctorData, AdjointEquivalence, AdjointEquivalence) {
    let f = instances::functor(name).unwrap();
    let (ac, ad) = (adj(&f.source), adj(&f.target));
    (f, ac, ad)
}

fn timed(budget: Duration, run: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = run();
    let el = start.elapsed();
    if el > budget {
        o.ok = false;
        o.detail
            .push_str(&format!("; took {el:?} over budget {:?}", budget));
    } else {
        o.detail.push_str(&format!("; {el:?}"));
    }
    o
}

fn criterion_1() -> Outcome {
    timed(BUDGET_1, || {
        let a = linear_diagnostic(&instances::linear("posetal-nat:6:A").unwrap()).unwrap();
        let b = linear_diagnostic(&instances::linear("posetal-nat:6:B").unwrap()).unwrap();
        let ok = a.linear
            && a.r_frobenius
            && !a.l_monoidal
            && b.linear
            && b.r_frobenius
            && b.l_frobenius
            && !b.iso_found;
        Outcome {
            ok,
            detail: format!(
                "A: linear={} R-Frob={} L-monoidal={}; B: linear={} R-Frob={} L-Frob={} iso={}",
                a.linear,
                a.r_frobenius,
                a.l_monoidal,
                b.linear,
                b.r_frobenius,
                b.l_frobenius,
                b.iso_found
            ),
        }
    })
}

fn criterion_2() -> Outcome {
    timed(BUDGET_2, || {
        let mut bad = Vec::new();
        for name in FROBENIUS {
            let (f, ac, ad) = setup(name);
            let w = match kappa_from_frobenius(&f, &ac, &ad) {
                Ok(w) => w,
                Err(e) => {
                    bad.push(format!("{name}: {e}"));
                    continue;
                }
            };
            let r = check_autonomous(
                &f,
                &ac.left,
                &ad.left,
                &w,
                Side::Left,
                AutonomyOptions::default(),
            )
            .unwrap();
            if !r.passed() {
                bad.push(format!("{name}: autonomy fails"));
            }
            for x in f.source.objects() {
                let k = w.kappa(x).unwrap();
                if !f.target.is_iso(&k) {
                    bad.push(format!("{name}: κ_{x} not invertible"));
                }
            }
        }
        Outcome {
            ok: bad.is_empty(),
            detail: format!("{} Frobenius functors; {}", FROBENIUS.len(), fails(&bad)),
        }
    })
}

fn fails(bad: &[String]) -> String {
    if bad.is_empty() {
        "no failures".into()
    } else {
        bad.join("; ")
    }
}

fn criterion_3() -> Outcome {
    timed(BUDGET_3, || {
        let mut bad = Vec::new();
        let mut pairs = 0;
        for name in FROBENIUS {
            let (f, ac, ad) = setup(name);
            let m = adjudicate_cor_frob(
                &f.clone().without_comonoidal(),
                &ac,
                &ad,
                &kappa_candidates(&f, &ac, &ad),
            )
            .unwrap();
            pairs += 1;
            if !(m.all_true() && m.agreement()) {
                bad.push(format!("{name}: {:?}", m.verdicts));
            }
        }
        for name in NON_MONOIDAL {
            let (f, ac, ad) = setup(name);
            let m = adjudicate_cor_frob(&f, &ac, &ad, &[]).unwrap();
            pairs += 1;
            if m.gate.as_ref().map(|g| g.stage.as_str()) != Some("check_monoidal") {
                bad.push(format!(
                    "{name}: expected the monoidal gate, got {:?}",
                    m.gate
                ));
            }
        }
        let (f, ac, ad) = setup("bool-relabel:2");
        let m = adjudicate_cor_frob(&f.without_comonoidal(), &ac, &ad, &[zero_kappa()]).unwrap();
        pairs += 1;
        if m.gate.as_ref().map(|g| g.stage.as_str()) != Some("candidate natural isomorphism") {
            bad.push(format!(
                "zero κ: expected the candidate gate, got {:?}",
                m.gate
            ));
        }
        Outcome {
            ok: bad.is_empty() && pairs >= 6,
            detail: format!("{pairs} pairs; {}", fails(&bad)),
        }
    })
}

/// κ from the catalog's comonoidal structure, handed over as a candidate so
/// the adjudicated functor carries only its monoidal structure.
fn kappa_candidates(
    f: &FunctorData,
    ac: &AdjointEquivalence,
    ad: &AdjointEquivalence,
) -> Vec<AutonomyWitness> {
    vec![kappa_from_frobenius(f, ac, ad).unwrap()]
}

fn criterion_4() -> Outcome {
    timed(BUDGET_4, || {
        let mut bad = Vec::new();
        for name in FROBENIUS {
            let (f, ac, ad) = setup(name);
            let w = kappa_from_frobenius(&f, &ac, &ad).unwrap();
            let k = w.kappa.clone().unwrap();
            let l = mate_lambda(&f, k.clone(), &ac, &ad);
            let k2 = mate_kappa(&f, l.clone(), &ac, &ad);
            let l2 = mate_lambda(&f, k2.clone(), &ac, &ad);
            for x in f.source.objects() {
                if k(x).unwrap() != k2(x).unwrap() {
                    bad.push(format!("{name}: κ→λ→κ at {x}"));
                }
                if l(x).unwrap() != l2(x).unwrap() {
                    bad.push(format!("{name}: λ→κ→λ at {x}"));
                }
            }
            let from_l = complete_witness(
                &AutonomyWitness::from_lambda(w.provenance, move |x| l(x)),
                &f,
                &ac,
                &ad,
            )
            .unwrap();
            for x in f.source.objects() {
                if from_l.kappa(x).unwrap() != w.kappa(x).unwrap() {
                    bad.push(format!("{name}: κ from λ at {x}"));
                }
            }
            let mono = f.clone().without_comonoidal();
            let so = build_sigma_tau(&mono, &w, &ac, &ad).unwrap();
            let (s, t) = (
                sigma_structure(&mono, &so, &ac, &ad),
                tau_structure(&mono, &so, &ac, &ad),
            );
            let strong = strong_inverse(&mono);
            for x in f.source.objects() {
                for y in f.source.objects() {
                    if (s.two)(x, y).unwrap() != (t.two)(x, y).unwrap() {
                        bad.push(format!("{name}: σ and τ routes differ at ({x}, {y})"));
                    }
                    if let Some(st) = &strong {
                        if (s.two)(x, y).unwrap() != (st.two)(x, y).unwrap() {
                            bad.push(format!("{name}: F2 != f2^-1 at ({x}, {y})"));
                        }
                    }
                }
            }
            if s.zero != t.zero {
                bad.push(format!("{name}: σ and τ units differ"));
            }
            if strong.is_none() {
                bad.push(format!("{name}: expected a strong functor"));
            }
        }
        Outcome {
            ok: bad.is_empty(),
            detail: format!("{} witnesses; {}", FROBENIUS.len(), fails(&bad)),
        }
    })
}

fn criterion_5() -> Outcome {
    let mut bad = Vec::new();
    let mut total = 0;
    let mut cases: Vec<(
        String,
        FunctorData,
        AdjointEquivalence,
        AdjointEquivalence,
        AutonomyWitness,
    )> = Vec::new();
    for name in FROBENIUS {
        let (f, ac, ad) = setup(name);
        let w = kappa_from_frobenius(&f, &ac, &ad).unwrap();
        cases.push((name.into(), f, ac, ad, w));
    }
    for (label, w) in [
        ("zero κ", zero_kappa()),
        ("identity κ", identity_kappa()),
        ("shifted κ", shifted_kappa()),
    ] {
        let (f, ac, ad) = setup("bool-relabel:2");
        cases.push((format!("bool-relabel:2 with {label}"), f, ac, ad, w));
    }
    let mut negatives = 0;
    for (name, f, ac, ad, w) in cases {
        let w = complete_witness(&w, &f, &ac, &ad).unwrap();
        let opts = AutonomyOptions::default();
        let l = check_autonomous(&f, &ac.left, &ad.left, &w, Side::Left, opts).unwrap();
        let r = check_autonomous(&f, &ac.right, &ad.right, &w, Side::Right, opts).unwrap();
        total += 1;
        if !l.passed() {
            negatives += 1;
        }
        if l.passed() != r.passed() {
            bad.push(format!("{name}: left {} right {}", l.passed(), r.passed()));
        }
    }
    Outcome {
        ok: bad.is_empty() && negatives >= 1,
        detail: format!("{total} functors, {negatives} negative; {}", fails(&bad)),
    }
}

fn identity_kappa() -> AutonomyWitness {
    AutonomyWitness::from_kappa(frobcat::structures::Provenance::Given, |x| {
        Ok(Mor::Matrix(BoolMatrix::identity(x.0)))
    })
}

/// `κ_X` the cyclic shift on `X`: invertible, not natural.
fn shifted_kappa() -> AutonomyWitness {
    AutonomyWitness::from_kappa(frobcat::structures::Provenance::Given, |x| {
        let perm: Vec<u32> = (0..x.0).map(|j| (j + 1) % x.0.max(1)).collect();
        Ok(Mor::Matrix(BoolMatrix::from_function(x.0, &perm)))
    })
}

fn criterion_6() -> Outcome {
    let mut bad = Vec::new();
    for name in LINEAR_AUTONOMOUS {
        let lf = instances::linear(name).unwrap();
        if !check_linear(&lf).unwrap().passed() {
            bad.push(format!("{name}: not linear"));
            continue;
        }
        let (ac, ad) = (adj(lf.source()), adj(lf.target()));
        let m = adjudicate_when_lin_frob(&lf, &ac, &ad).unwrap();
        let omega = (1..=4).all(|i| m.report.holds(&format!("omega:{i}")));
        if !(m.unanimous() && m.all_true() && omega) {
            bad.push(format!("{name}: {:?}, ω conditions {omega}", m.verdicts));
        }
    }
    Outcome {
        ok: bad.is_empty(),
        detail: format!(
            "{} linear functors; {}",
            LINEAR_AUTONOMOUS.len(),
            fails(&bad)
        ),
    }
}

fn criterion_7() -> Outcome {
    timed(BUDGET_7, || {
        let c = instances::category("bool:2").unwrap();
        let a = adj(&c);
        let mut bad = Vec::new();
        let mut count = 0;
        for (m, n) in [(2u32, 2u32), (2, 3)] {
            for bits in 0..1u64 << (m * n) {
                let f = BoolMatrix::from_bits(n, m, bits);
                let oracle = oracle_transpose(&f);
                count += 1;
                if a.left.transpose(&Mor::Matrix(f.clone())).unwrap() != Mor::Matrix(oracle) {
                    bad.push(format!("{f}"));
                }
            }
        }
        let snakes = a.left.verify().unwrap().passed() && a.right.verify().unwrap().passed();
        for x in 0..=3 {
            let (d, e) = (
                a.left.unit_mor(Obj(x)).unwrap(),
                a.left.counit_mor(Obj(x)).unwrap(),
            );
            let one = Mor::Matrix(BoolMatrix::identity(x));
            let s1 = c
                .seq(&[c.tensor(&d, &one).unwrap(), c.tensor(&one, &e).unwrap()])
                .unwrap();
            if s1 != one {
                bad.push(format!("snake at {x}"));
            }
        }
        Outcome {
            ok: bad.is_empty() && snakes && count == 80,
            detail: format!("{count} morphisms, snakes {snakes}; {}", fails(&bad)),
        }
    })
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

fn criterion_8() -> Outcome {
    let mut bad = Vec::new();
    let mut cases: Vec<(
        String,
        FunctorData,
        AdjointEquivalence,
        AdjointEquivalence,
        AutonomyWitness,
    )> = Vec::new();
    for name in FROBENIUS {
        let (f, ac, ad) = setup(name);
        let w = kappa_from_frobenius(&f, &ac, &ad).unwrap();
        cases.push((name.into(), f, ac, ad, w));
    }
    for (label, w) in [
        ("zero κ", zero_kappa()),
        ("identity κ", identity_kappa()),
        ("shifted κ", shifted_kappa()),
    ] {
        let (f, ac, ad) = setup("bool-relabel:2");
        cases.push((format!("bool-relabel:2 with {label}"), f, ac, ad, w));
    }
    let mut negatives = 0;
    for (name, f, ac, ad, w) in &cases {
        let r = check_autonomous(
            f,
            &ac.left,
            &ad.left,
            w,
            Side::Left,
            AutonomyOptions::default(),
        )
        .unwrap();
        if !r.holds("eq1:lax_pres_dual") || !r.holds("eq2:lax_pres_dual") {
            negatives += 1;
        }
        for (p, q) in [
            ("eq1:lax_pres_dual", "eq1:ka-db"),
            ("eq2:lax_pres_dual", "eq2:ka-ev"),
        ] {
            if r.holds(p) != r.holds(q) {
                bad.push(format!("{name}: {p}={} {q}={}", r.holds(p), r.holds(q)));
            }
        }
    }
    Outcome {
        ok: bad.is_empty() && negatives >= 1,
        detail: format!(
            "{} functors, {negatives} negative; {}",
            cases.len(),
            fails(&bad)
        ),
    }
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("counterexample reproduction", criterion_1),
        ("Frobenius implies autonomous", criterion_2),
        ("six-condition agreement", criterion_3),
        ("mate round-trips and synthesis routes", criterion_4),
        ("left and right autonomy agree", criterion_5),
        ("linear functor agreement", criterion_6),
        ("duality oracle", criterion_7),
        ("alternative-form agreement", criterion_8),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        println!(
            "criterion {}: {} {name}: {}",
            i + 1,
            if o.ok { "PASS" } else { "FAIL" },
            o.detail
        );
        if !o.ok {
            failed.push(i + 1);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
