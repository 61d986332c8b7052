//! Acceptance run: one PASS/FAIL line per criterion. Built without the test
//! harness so the lines come out in order and unbuffered.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use leibniz_cohomology::algebra::{builtin, validate, BUILTIN_NAMES};
use leibniz_cohomology::cochain::{self, homotopy, leibniz_d_at, lie_d_at, Functional};
use leibniz_cohomology::cohomology::{
    alpha_cocycle, cohomology_with, diagonal_s1_dims, pirashvili_report, theta_cocycle,
    w1_closed_form_dim, EngineOptions,
};
use leibniz_cohomology::cup::{alpha_powers, cup, zinbiel_defect};
use leibniz_cohomology::linalg::{self, Solution, SparseMatrix, SparseVector};
use leibniz_cohomology::scalar::{Field, Rational};
use leibniz_cohomology::witt::{
    certify_nontrivial, compare_up_to_scalar, integral_contraction, verify_cocycle,
    verify_second_method, window_tuples, LocalFamily, WittCocycle,
};
use leibniz_cohomology::{Cochain, GaussianRational as G, GradedLieAlgebra, Theory};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn opts() -> EngineOptions {
    EngineOptions {
        representative_budget: 0,
        ..Default::default()
    }
}

static W1_DIMS: OnceLock<Vec<usize>> = OnceLock::new();

fn criterion_1() -> Outcome {
    let w1 = builtin("w1", 1).map_err(|e| e.to_string())?;
    let t = Instant::now();
    let low = cohomology_with(&w1, Theory::Leibniz, 6, &opts()).map_err(|e| e.to_string())?;
    let t6 = t.elapsed();
    let t = Instant::now();
    let full = cohomology_with(&w1, Theory::Leibniz, 8, &opts()).map_err(|e| e.to_string())?;
    let t8 = t.elapsed();
    let dims = full.dims();
    W1_DIMS.get_or_init(|| dims.clone());
    ensure(full.d_squared_verified, || {
        "d² = 0 not verified on the slices".into()
    })?;
    ensure(dims == [1, 0, 0, 1, 1, 0, 0, 1, 1], || {
        format!("HL dims {dims:?}")
    })?;
    ensure(low.dims() == dims[..7], || {
        format!("q ≤ 6 run gave {:?}", low.dims())
    })?;
    ensure(t6 < Duration::from_secs(10), || {
        format!("q ≤ 6 took {t6:?}")
    })?;
    ensure(t8 < Duration::from_secs(300), || {
        format!("q ≤ 8 took {t8:?}")
    })?;
    Ok(format!(
        "HL^0..8 = {dims:?}; q≤6 in {:.2}s, q≤8 in {:.2}s",
        t6.as_secs_f64(),
        t8.as_secs_f64()
    ))
}

fn criterion_2() -> Outcome {
    let w1 = builtin("w1", 1).map_err(|e| e.to_string())?;
    let dims = cohomology_with(&w1, Theory::Lie, 6, &opts())
        .map_err(|e| e.to_string())?
        .dims();
    let oracle = common::dense_dims("w1", true, 6, |n| common::w1_zero_weight_basis(true, n));
    ensure(dims == [1, 0, 0, 1, 0, 0, 0], || format!("H dims {dims:?}"))?;
    ensure(oracle == dims, || format!("dense oracle gives {oracle:?}"))?;
    Ok(format!("H^0..6 = {dims:?}, dense oracle agrees"))
}

fn criterion_3() -> Outcome {
    let computed = match W1_DIMS.get() {
        Some(d) => d.clone(),
        None => {
            let w1 = builtin("w1", 1).map_err(|e| e.to_string())?;
            cohomology_with(&w1, Theory::Leibniz, 8, &opts())
                .map_err(|e| e.to_string())?
                .dims()
        }
    };
    for (q, &d) in computed.iter().enumerate() {
        ensure(d == w1_closed_form_dim(q), || {
            format!("computed HL^{q} = {d} disagrees with the closed form")
        })?;
    }
    let table: Vec<usize> = (0..=13)
        .map(|q| {
            computed
                .get(q)
                .copied()
                .unwrap_or_else(|| w1_closed_form_dim(q))
        })
        .collect();
    let t = Instant::now();
    let asm = diagonal_s1_dims(&table, 12).map_err(|e| e.to_string())?;
    let elapsed = t.elapsed();
    let dims = asm.dims();
    let expected: Vec<usize> = (1..=12).map(|m| [0, 1, 2, 1][(m - 1) % 4]).collect();
    ensure(dims == expected, || format!("diagonal dims {dims:?}"))?;
    for d in &asm.degrees {
        ensure(d.generators.len() == d.dim, || {
            format!("degree {} has {} labels", d.degree, d.generators.len())
        })?;
    }
    ensure(elapsed < Duration::from_secs(1), || {
        format!("assembly took {elapsed:?}")
    })?;
    let labels: Vec<String> = asm.degrees[..4]
        .iter()
        .map(|d| {
            d.generators
                .iter()
                .map(|g| g.name.clone())
                .collect::<Vec<_>>()
                .join("+")
        })
        .collect();
    Ok(format!("m=1..12 dims {dims:?}; first period {labels:?}"))
}

fn criterion_4() -> Outcome {
    let t = Instant::now();
    let mut parts = Vec::new();
    for (name, c) in [("omega", WittCocycle::OMEGA), ("beta1", WittCocycle::BETA1)] {
        let check = verify_cocycle(&c, 8).map_err(|e| e.to_string())?;
        ensure(check.passed(), || {
            format!("d{name} ≠ 0 at {:?}", check.violations.first())
        })?;
        parts.push(format!("d{name}=0 on {} tuples", check.tuples_checked));
    }
    for (name, c, n) in [
        ("omega", WittCocycle::OMEGA, 8),
        ("beta1", WittCocycle::BETA1, 6),
    ] {
        let decision = certify_nontrivial(&c, n).map_err(|e| e.to_string())?;
        ensure(decision.is_nontrivial(), || {
            format!("{name} has a primitive on window {n}")
        })?;
        parts.push(format!("{name} certified at N={n}"));
    }
    let elapsed = t.elapsed();
    ensure(elapsed < Duration::from_secs(120), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "{} in {:.2}s",
        parts.join(", "),
        elapsed.as_secs_f64()
    ))
}

fn criterion_5() -> Outcome {
    let theta = integral_contraction(LocalFamily::Theta);
    let alpha = integral_contraction(LocalFamily::Alpha);
    let c1 = compare_up_to_scalar(
        |t| theta.eval(t),
        |t| WittCocycle::OMEGA.eval(t),
        &window_tuples(2, 6),
    );
    let c2 = compare_up_to_scalar(
        |t| alpha.eval(t),
        |t| WittCocycle::BETA1.eval(t),
        &window_tuples(3, 5),
    );
    ensure(c1.passed(), || {
        format!("theta contraction vs omega: {:?}", c1.mismatches.first())
    })?;
    ensure(c2.passed(), || {
        format!("alpha contraction vs beta1: {:?}", c2.mismatches.first())
    })?;
    let [s1, s2] = verify_second_method(5, 4);
    for s in [&s1, &s2] {
        ensure(s.passed(), || {
            format!("{} fails at {:?}", s.identity, s.mismatches.first())
        })?;
    }
    Ok(format!(
        "i∮θ = ({})·ω on {} pairs, i∮α = ({})·β₁ on {} triples; second method scalars {} / {}",
        c1.scalar.unwrap(),
        c1.tuples_checked,
        c2.scalar.unwrap(),
        c2.tuples_checked,
        s1.scalar.clone().unwrap(),
        s2.scalar.clone().unwrap()
    ))
}

fn criterion_6() -> Outcome {
    let w1 = builtin("w1", 1).map_err(|e| e.to_string())?;
    let theta = theta_cocycle(&w1, Theory::Leibniz).map_err(|e| e.to_string())?;
    let alpha = alpha_cocycle(&w1).map_err(|e| e.to_string())?;
    let tt = cup(&theta, &theta).map_err(|e| e.to_string())?;
    let at = cup(&alpha, &theta).map_err(|e| e.to_string())?;
    ensure(tt.is_zero(), || format!("θ∪θ has {} entries", tt.len()))?;
    ensure(at.is_zero(), || format!("α∪θ has {} entries", at.len()))?;
    let z = zinbiel_defect(&alpha, &alpha, &alpha, &w1).map_err(|e| e.to_string())?;
    ensure(z.decision.is_exact(), || {
        "Zinbiel defect of (α,α,α) is not exact".into()
    })?;
    let a2 = alpha_powers(&w1, 2).map_err(|e| e.to_string())?;
    let lhs = cup(&a2, &alpha).map_err(|e| e.to_string())?;
    let rhs = cup(&alpha, &a2)
        .map_err(|e| e.to_string())?
        .scale(&G::from_int(2));
    let diff = lhs.sub(&rhs);
    ensure(diff.is_zero(), || {
        format!("α²∪α − 2α∪α² has {} entries", diff.len())
    })?;
    Ok(format!(
        "θ∪θ = 0 and α∪θ = 0 strictly; Zinbiel defect strict zero: {}; α²∪α = 2α∪α² ({} entries each)",
        z.strict_zero,
        lhs.len()
    ))
}

fn random_scalar(rng: &mut ChaCha8Rng) -> G {
    let v = rng.gen_range(-4i64..=4);
    if rng.gen_bool(0.3) {
        G::new(
            Rational::from_integer(v.into()),
            Rational::from_integer(rng.gen_range(-3i64..=3).into()),
        )
    } else {
        G::from_int(if v == 0 { 1 } else { v })
    }
}

fn random_cochain(
    rng: &mut ChaCha8Rng,
    weights: &[i64],
    degree: usize,
    theory: Theory,
    terms: usize,
) -> Cochain {
    Cochain::from_entries(
        degree,
        theory,
        (0..terms).map(|_| {
            let idx: Vec<i64> = (0..degree)
                .map(|_| weights[rng.gen_range(0..weights.len())])
                .collect();
            (idx, random_scalar(rng))
        }),
    )
}

/// `d c` evaluated pointwise, so that `d d c` can be sampled on a Witt
/// window without materialising `d c`.
struct Pointwise<'a> {
    c: &'a Cochain,
    alg: &'a GradedLieAlgebra,
}

impl Functional for Pointwise<'_> {
    fn degree(&self) -> usize {
        self.c.degree() + 1
    }

    fn eval(&self, args: &[i64]) -> G {
        match self.c.theory() {
            Theory::Leibniz => leibniz_d_at(self.c, self.alg, args).unwrap(),
            Theory::Lie => lie_d_at(self.c, self.alg, args).unwrap(),
        }
    }
}

fn d_squared_suite(rng: &mut ChaCha8Rng) -> Result<usize, String> {
    let mut cases = 0;
    for &name in BUILTIN_NAMES {
        for theory in [Theory::Leibniz, Theory::Lie] {
            for degree in 0..=5 {
                for _ in 0..3 {
                    if name == "witt" {
                        let alg = builtin("witt", 64).map_err(|e| e.to_string())?;
                        let c = random_cochain(rng, &[-3, -2, -1, 0, 1, 2, 3], degree, theory, 4);
                        let dc = Pointwise { c: &c, alg: &alg };
                        for _ in 0..20 {
                            let target: Vec<i64> =
                                (0..degree + 2).map(|_| rng.gen_range(-4..=4)).collect();
                            let v = match theory {
                                Theory::Leibniz => leibniz_d_at(&dc, &alg, &target),
                                Theory::Lie => lie_d_at(&dc, &alg, &target),
                            }
                            .map_err(|e| e.to_string())?;
                            ensure(v.is_zero(), || {
                                format!("ddc ≠ 0 on witt {theory} at {target:?}")
                            })?;
                        }
                    } else {
                        let alg = builtin(name, 4).map_err(|e| e.to_string())?;
                        let weights: Vec<i64> = if name == "w1" {
                            vec![-1, 0, 1, 2, 3]
                        } else {
                            alg.support().weights_between(-10, 10)
                        };
                        let c = random_cochain(rng, &weights, degree, theory, 4);
                        let dc = cochain::d(&c, &alg).map_err(|e| e.to_string())?;
                        let ddc = cochain::d(&dc, &alg).map_err(|e| e.to_string())?;
                        ensure(ddc.is_zero(), || {
                            format!("ddc ≠ 0 on {name} {theory} degree {degree}")
                        })?;
                    }
                    cases += 1;
                }
            }
        }
    }
    Ok(cases)
}

fn homotopy_suite(rng: &mut ChaCha8Rng) -> Result<usize, String> {
    let mut cases = 0;
    for (name, weights) in [("w1", vec![-1, 0, 1, 2, 3, 4]), ("sl2", vec![-2, 0, 2])] {
        let alg = builtin(name, 1).map_err(|e| e.to_string())?;
        for degree in 1..=4 {
            for _ in 0..10 {
                let c = random_cochain(rng, &weights, degree, Theory::Leibniz, 5);
                let c = Cochain::from_entries(
                    degree,
                    Theory::Leibniz,
                    c.entries()
                        .iter()
                        .filter(|(k, _)| k.iter().sum::<i64>() != 0)
                        .map(|(k, v)| (k.clone(), v.clone())),
                );
                let lhs = cochain::d(&homotopy(&c, &alg).map_err(|e| e.to_string())?, &alg)
                    .map_err(|e| e.to_string())?
                    .add(
                        &homotopy(&cochain::d(&c, &alg).map_err(|e| e.to_string())?, &alg)
                            .map_err(|e| e.to_string())?,
                    );
                let rhs = Cochain::from_entries(
                    degree,
                    Theory::Leibniz,
                    c.entries()
                        .iter()
                        .map(|(k, v)| (k.clone(), v.mul(&G::from_int(k.iter().sum())))),
                );
                ensure(lhs == rhs, || {
                    format!("homotopy identity fails on {name} degree {degree}")
                })?;
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn linalg_suite(rng: &mut ChaCha8Rng) -> Result<usize, String> {
    for case in 0..200 {
        let rows = rng.gen_range(1..=50);
        let cols = rng.gen_range(1..=50);
        let density = rng.gen_range(0.02..0.6);
        // low-rank products exercise dependent rows
        let dense: Vec<Vec<i64>> = if rng.gen_bool(0.3) {
            let k = rng.gen_range(1..=rows.min(cols));
            let a: Vec<Vec<i64>> = (0..rows)
                .map(|_| (0..k).map(|_| rng.gen_range(-3..=3)).collect())
                .collect();
            let b: Vec<Vec<i64>> = (0..k)
                .map(|_| (0..cols).map(|_| rng.gen_range(-3..=3)).collect())
                .collect();
            (0..rows)
                .map(|r| {
                    (0..cols)
                        .map(|c| (0..k).map(|i| a[r][i] * b[i][c]).sum())
                        .collect()
                })
                .collect()
        } else {
            (0..rows)
                .map(|_| {
                    (0..cols)
                        .map(|_| {
                            if rng.gen_bool(density) {
                                rng.gen_range(-9..=9)
                            } else {
                                0
                            }
                        })
                        .collect()
                })
                .collect()
        };
        let oracle: Vec<Vec<common::Q>> = dense
            .iter()
            .map(|r| r.iter().map(|&v| common::q(v)).collect())
            .collect();
        let m = SparseMatrix::from_dense(
            &dense
                .iter()
                .map(|r| r.iter().map(|&v| G::from_int(v)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        );
        let r = linalg::rank(&m);
        let expected = common::dense_rank(&oracle);
        ensure(r == expected, || {
            format!("case {case}: rank {r} vs dense {expected}")
        })?;
        let kernel = linalg::kernel_basis(&m);
        ensure(kernel.len() == cols - r, || {
            format!("case {case}: kernel dimension {}", kernel.len())
        })?;
        for v in &kernel {
            ensure(m.mul_vec(v).is_zero(), || {
                format!("case {case}: kernel vector not annihilated")
            })?;
        }
        let b_dense: Vec<i64> = (0..rows).map(|_| rng.gen_range(-5..=5)).collect();
        let b =
            SparseVector::from_dense(&b_dense.iter().map(|&v| G::from_int(v)).collect::<Vec<_>>());
        let solvable = common::dense_solvable(
            &oracle,
            &b_dense.iter().map(|&v| common::q(v)).collect::<Vec<_>>(),
        );
        match linalg::solve(&m, &b) {
            Solution::Feasible(x) => {
                ensure(solvable, || {
                    format!("case {case}: solved an inconsistent system")
                })?;
                ensure(m.mul_vec(&x) == b, || {
                    format!("case {case}: wrong solution")
                })?;
            }
            Solution::Infeasible(y) => {
                ensure(!solvable, || format!("case {case}: missed a solution"))?;
                ensure(
                    m.transpose().mul_vec(&y).is_zero() && y.dot(&b) == G::from_int(1),
                    || format!("case {case}: bad certificate"),
                )?;
            }
        }
    }
    Ok(200)
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1e1b);
    let dd = d_squared_suite(&mut rng)?;
    let h = homotopy_suite(&mut rng)?;
    for &name in BUILTIN_NAMES {
        let alg = builtin(name, 6).map_err(|e| e.to_string())?;
        let report = validate(&alg, 6);
        ensure(report.is_valid(), || {
            format!("{name} fails validation: {report:?}")
        })?;
    }
    let la = linalg_suite(&mut rng)?;
    Ok(format!(
        "d∘d = 0 on {dd} random cochains, homotopy identity on {h}, {} builtins valid, {la} linear systems match the dense oracle",
        BUILTIN_NAMES.len()
    ))
}

fn criterion_8() -> Outcome {
    let mut parts = Vec::new();
    for name in ["w1", "sl2", "abelian1", "heisenberg"] {
        let alg = builtin(name, 1).map_err(|e| e.to_string())?;
        let r = pirashvili_report(&alg, 3).map_err(|e| e.to_string())?;
        ensure(r.low_degrees_agree, || {
            format!("{name}: HL⁰/HL¹ differ from H⁰/H¹")
        })?;
        ensure(r.h2_injects, || format!("{name}: dim H² > dim HL²"))?;
        let lie: Vec<usize> = r.rows.iter().map(|row| row.lie).collect();
        let leib: Vec<usize> = r.rows.iter().map(|row| row.leibniz).collect();
        parts.push(format!("{name} H={lie:?} HL={leib:?}"));
    }
    Ok(parts.join("; "))
}

fn main() {
    let criteria: [(usize, fn() -> Outcome); 8] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
    ];
    let filter: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let mut failed = 0;
    for (n, f) in criteria {
        if !filter.is_empty() && !filter.contains(&n) {
            continue;
        }
        let t = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let secs = t.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {n}: PASS ({secs:.2}s) {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {n}: FAIL ({secs:.2}s) {why}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
