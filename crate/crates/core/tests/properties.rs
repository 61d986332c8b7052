mod common;

use leibniz_cohomology::algebra::builtin;
use leibniz_cohomology::cochain::{self, homotopy, weight_basis, weight_basis_len, Functional};
use leibniz_cohomology::cohomology::{alpha_cocycle, theta_cocycle};
use leibniz_cohomology::cup::{cup, shuffles};
use leibniz_cohomology::linalg::{self, SparseMatrix};
use leibniz_cohomology::scalar::{Field, Rational};
use leibniz_cohomology::witt::{omega, taylor_pullback, FourierVectorField};
use leibniz_cohomology::{Cochain, GaussianRational as G, Theory};
use proptest::prelude::*;

fn binom(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn scalar() -> impl Strategy<Value = G> {
    (-5i64..=5, -2i64..=2).prop_map(|(re, im)| {
        G::new(
            Rational::from_integer(re.into()),
            Rational::from_integer(im.into()),
        )
    })
}

fn entries(
    weights: Vec<i64>,
    degree: usize,
    max: usize,
) -> impl Strategy<Value = Vec<(Vec<i64>, G)>> {
    prop::collection::vec(
        (
            prop::collection::vec(prop::sample::select(weights), degree),
            scalar(),
        ),
        0..=max,
    )
}

fn cochain(
    name: &'static str,
    theory: Theory,
    max_degree: usize,
) -> impl Strategy<Value = Cochain> {
    let weights = match name {
        "w1" => vec![-1, 0, 1, 2, 3],
        "sl2" => vec![-2, 0, 2],
        "heisenberg" => vec![1, 2, 3],
        _ => vec![1, 2],
    };
    (0..=max_degree).prop_flat_map(move |n| {
        entries(weights.clone(), n, 4).prop_map(move |e| Cochain::from_entries(n, theory, e))
    })
}

fn field() -> impl Strategy<Value = FourierVectorField> {
    prop::collection::vec((-3i64..=3, scalar()), 1..=3).prop_map(FourierVectorField::from_modes)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn d_squared_vanishes(
        (name, c) in (prop::sample::select(vec!["w1", "sl2", "heisenberg", "abelian2"]), any::<bool>())
            .prop_flat_map(|(name, lie)| {
                let theory = if lie { Theory::Lie } else { Theory::Leibniz };
                cochain(name, theory, 4).prop_map(move |c| (name, c))
            }),
    ) {
        let alg = builtin(name, 4).unwrap();
        let ddc = cochain::d(&cochain::d(&c, &alg).unwrap(), &alg).unwrap();
        prop_assert!(ddc.is_zero());
    }

    #[test]
    fn homotopy_identity_on_w1(c in cochain("w1", Theory::Leibniz, 4)) {
        prop_assume!(c.degree() > 0);
        let alg = builtin("w1", 1).unwrap();
        let lhs = cochain::d(&homotopy(&c, &alg).unwrap(), &alg)
            .unwrap()
            .add(&homotopy(&cochain::d(&c, &alg).unwrap(), &alg).unwrap());
        let rhs = Cochain::from_entries(
            c.degree(),
            Theory::Leibniz,
            c.entries().iter().map(|(k, v)| (k.clone(), v.mul(&G::from_int(k.iter().sum())))),
        );
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn d_preserves_weight(c in cochain("w1", Theory::Leibniz, 4)) {
        let alg = builtin("w1", 1).unwrap();
        let parts = c.weight_components();
        for (w, part) in cochain::d(&c, &alg).unwrap().weight_components() {
            prop_assert_eq!(cochain::d(&parts[&w], &alg).unwrap(), part);
        }
    }

    #[test]
    fn rank_matches_dense_oracle(
        rows in 1usize..=12,
        cols in 1usize..=12,
        values in prop::collection::vec(-3i64..=3, 144),
        sparsity in prop::collection::vec(any::<bool>(), 144),
    ) {
        let dense: Vec<Vec<i64>> = (0..rows)
            .map(|r| (0..cols).map(|c| if sparsity[r * 12 + c] { values[r * 12 + c] } else { 0 }).collect())
            .collect();
        let m = SparseMatrix::from_dense(&dense.iter().map(|r| r.iter().map(|&v| G::from_int(v)).collect::<Vec<_>>()).collect::<Vec<_>>());
        let oracle: Vec<Vec<common::Q>> = dense.iter().map(|r| r.iter().map(|&v| common::q(v)).collect()).collect();
        let r = linalg::rank(&m);
        prop_assert_eq!(r, common::dense_rank(&oracle));
        prop_assert_eq!(linalg::rank(&m.transpose()), r);
        let real = m.map(|v| v.re.clone());
        prop_assert_eq!(linalg::rank(&real), r);
    }

    #[test]
    fn w1_basis_count_is_stars_and_bars(n in 0usize..=7, s in -3i64..=6) {
        let alg = builtin("w1", 1).unwrap();
        // n entries ≥ −1 summing to s: shift by one to get C(s + 2n − 1, n − 1)
        let expected = if n == 0 {
            u128::from(s == 0)
        } else if s + (n as i64) < 0 {
            0
        } else {
            binom((s + 2 * n as i64 - 1) as u128, n as u128 - 1)
        };
        prop_assert_eq!(weight_basis_len(&alg, n, s, Theory::Leibniz).unwrap(), expected);
        let lie = common::increasing_tuples(-1, s.max(0) + n as i64, n).into_iter().filter(|t| t.iter().sum::<i64>() == s).count();
        prop_assert_eq!(weight_basis_len(&alg, n, s, Theory::Lie).unwrap(), lie as u128);
        prop_assert_eq!(weight_basis(&alg, n, s, Theory::Lie).unwrap().len(), lie);
    }

    #[test]
    fn cup_is_bilinear(
        a in cochain("w1", Theory::Leibniz, 3),
        b in cochain("w1", Theory::Leibniz, 3),
        b2 in cochain("w1", Theory::Leibniz, 3),
        s in scalar(),
    ) {
        prop_assume!(a.degree() > 0 && b.degree() == b2.degree());
        let sum = b.add(&b2.scale(&s));
        let lhs = cup(&a, &sum).unwrap();
        let rhs = cup(&a, &b).unwrap().add(&cup(&a, &b2).unwrap().scale(&s));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cup_of_cocycles_is_a_cocycle(x in cochain("w1", Theory::Leibniz, 2), pick in 0usize..3) {
        let alg = builtin("w1", 1).unwrap();
        let a = cochain::d(&x, &alg).unwrap();
        let b = match pick {
            0 => theta_cocycle(&alg, Theory::Leibniz).unwrap(),
            1 => alpha_cocycle(&alg).unwrap(),
            _ => a.clone(),
        };
        let ab = cup(&a, &b).unwrap();
        prop_assert!(cochain::d(&ab, &alg).unwrap().is_zero());
        let theta = theta_cocycle(&alg, Theory::Leibniz).unwrap();
        let ta = cup(&theta, &b).unwrap();
        prop_assert!(cochain::d(&ta, &alg).unwrap().is_zero());
    }

    #[test]
    fn shuffle_counts(p in 1usize..=6, q in 0usize..=6) {
        let s = shuffles(p, q).unwrap();
        prop_assert_eq!(s.len() as u128, binom((p - 1 + q) as u128, q as u128));
        for sh in s.iter() {
            prop_assert_eq!(sh.images.len(), p - 1 + q);
        }
    }

    #[test]
    fn brackets_match_hand_tables(
        name in prop::sample::select(vec!["w1", "sl2", "heisenberg"]),
        a in -2i64..=6,
        b in -2i64..=6,
    ) {
        let alg = builtin(name, 1).unwrap();
        prop_assume!(alg.contains(a) && alg.contains(b));
        let lib = alg.bracket(a, b).unwrap();
        let oracle = common::oracle_bracket(name, a, b).filter(|(w, _)| alg.contains(*w));
        match (lib, oracle) {
            (None, None) => {}
            (Some((w, c)), Some((wo, co))) => {
                prop_assert_eq!(w, wo);
                prop_assert_eq!(c, G::real(co));
            }
            (l, o) => prop_assert!(false, "{:?} vs {:?}", l, o),
        }
    }

    #[test]
    fn jacobi_brute_force(
        name in prop::sample::select(vec!["w1", "sl2", "heisenberg", "witt"]),
        x in -3i64..=4,
        y in -3i64..=4,
        z in -3i64..=4,
    ) {
        // [[x,y],z] + [[y,z],x] + [[z,x],y] summed term by term
        let alg = builtin(name, 16).unwrap();
        prop_assume!(alg.contains(x) && alg.contains(y) && alg.contains(z));
        let mut total = G::zero();
        for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
            if let Some((w, s)) = alg.bracket(a, b).unwrap() {
                if let Some((_, t)) = alg.bracket(w, c).unwrap() {
                    total = total.add(&s.mul(&t));
                }
            }
        }
        prop_assert!(total.is_zero());
    }

    #[test]
    fn omega_is_antisymmetric_and_linear(f in field(), g in field(), h in field(), s in scalar()) {
        prop_assert_eq!(omega(&f, &g), omega(&g, &f).neg());
        let lhs = omega(&f.add(&h.scale(&s)), &g);
        prop_assert_eq!(lhs, omega(&f, &g).add(&s.mul(&omega(&h, &g))));
    }

    #[test]
    fn taylor_pullback_commutes_with_d(
        c in cochain("w1", Theory::Leibniz, 3),
        fields in prop::collection::vec(field(), 4),
    ) {
        let alg = builtin("w1", 1).unwrap();
        let n = c.degree();
        let fields = &fields[..n + 1];
        let lhs = taylor_pullback(&cochain::d(&c, &alg).unwrap()).unwrap().eval_fields(fields);
        let pulled = taylor_pullback(&c).unwrap();
        let mut rhs = G::zero();
        for j in 1..fields.len() {
            for i in 0..j {
                let mut args: Vec<FourierVectorField> = fields[..j].to_vec();
                args[i] = fields[i].bracket(&fields[j]);
                args.extend_from_slice(&fields[j + 1..]);
                let v = pulled.eval_fields(&args);
                rhs = if j % 2 == 0 { rhs.add(&v) } else { rhs.sub(&v) };
            }
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lie_cochains_are_antisymmetric(c in cochain("w1", Theory::Lie, 4), i in 0usize..3) {
        prop_assume!(c.degree() >= 2);
        let i = i % (c.degree() - 1);
        for k in c.entries().keys() {
            let mut swapped = k.clone();
            swapped.swap(i, i + 1);
            prop_assert_eq!(c.eval(&swapped), c.eval(k).neg());
        }
    }
}
