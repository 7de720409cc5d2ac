//! Cross-module property suites: field axioms, oracle agreement, and the
//! exact identities that tie the fusion, category and braid layers together.

use excat::braid::{en_series_spectrum, sigma_spectrum};
use excat::category::{witness_rows, CategorySpec};
use excat::cyclo::CycloNumber;
use excat::freudenthal::DEFAULT_SIZE_BOUND as BOUND;
use excat::fusion;
use excat::rootdata::{Algebra, RootSystem, Weight};
use excat::{CycloMatrix, Rat};
use num_complex::Complex64;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn zeta(n: u64, k: i64) -> CycloNumber {
    CycloNumber::root_of_unity(n, k)
}

/// Sparse random cyclotomic numbers over a handful of conductors.
fn arb_cyclo() -> impl Strategy<Value = CycloNumber> {
    let conductor = prop::sample::select(vec![1u64, 3, 4, 5, 8, 9, 12, 15, 16, 20, 24, 48]);
    (conductor, prop::collection::vec((0i64..24, -4i64..=4, 1i64..=3), 1..4)).prop_map(
        |(n, terms)| {
            let mut acc = CycloNumber::zero();
            for (exp, num, den) in terms {
                let c = CycloNumber::from_rat(Rat::new(num.into(), den.into()));
                let z = zeta(n, exp);
                acc = &acc + &(&c * &z);
            }
            acc
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in arb_cyclo(), b in arb_cyclo(), c in arb_cyclo()) {
        // Associativity and distributivity, exactly.
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        // Multiplicative inverse.
        if !a.is_zero() {
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn galois_is_a_field_automorphism(a in arb_cyclo(), b in arb_cyclo(), j in 1i64..60) {
        let m = excat::lcm(a.conductor(), b.conductor());
        prop_assume!(excat::gcd(j.unsigned_abs(), m) == 1);
        let sum = &a + &b;
        let prod = &a * &b;
        // The automorphism must be applied at a common conductor.
        let aj = a.lift_to(m).galois(j).unwrap();
        let bj = b.lift_to(m).galois(j).unwrap();
        prop_assert_eq!(sum.lift_to(m).galois(j).unwrap(), &aj + &bj);
        prop_assert_eq!(prod.lift_to(m).galois(j).unwrap(), &aj * &bj);
    }

    #[test]
    fn embedding_is_multiplicative(a in arb_cyclo(), b in arb_cyclo()) {
        let lhs = (&a * &b).embed();
        let rhs = a.embed() * b.embed();
        let scale = 1.0 + a.embed().norm() * b.embed().norm();
        prop_assert!((lhs - rhs).norm() / scale < 1e-9);
    }

    #[test]
    fn to_dominant_is_idempotent(alg in prop::sample::select(vec![Algebra::G2, Algebra::F4, Algebra::E6]),
                                 coords in prop::collection::vec(-6i64..=6, 6)) {
        let rs = RootSystem::get(alg);
        let w = Weight(coords[..rs.rank].to_vec());
        let (dom, _, _) = rs.to_dominant(&w);
        let (dom2, sign2, _) = rs.to_dominant(&dom);
        prop_assert_eq!(dom2, dom);
        prop_assert_eq!(sign2, 1);
    }
}

#[test]
fn roots_of_unity_have_exact_order_n() {
    // zeta_N^k to the N-th power is 1, for every N up to 100 and every k.
    for n in 1..=100u64 {
        for k in 0..n {
            let z = zeta(n, k as i64);
            assert!(z.pow(n as i64).unwrap().is_one(), "N={n} k={k}");
        }
    }
}

#[test]
fn root_of_unity_order_brute_force() {
    // Against a plain multiplication loop, for +-zeta_N^k with N <= 60.
    for n in 1..=60u64 {
        for k in 0..n {
            for sign in [1, -1] {
                let mut z = zeta(n, k as i64);
                if sign < 0 {
                    z = -&z;
                }
                let bound = excat::lcm(2, n);
                let mut acc = CycloNumber::one();
                let mut brute = None;
                for t in 1..=bound {
                    acc = &acc * &z;
                    if acc.is_one() {
                        brute = Some(t);
                        break;
                    }
                }
                assert_eq!(z.root_of_unity_order(), brute, "n={n} k={k} sign={sign}");
            }
        }
    }
}

#[test]
fn qnumber_matches_sine_ratio() {
    // |[n] - sin(n pi / l) / sin(pi / l)| < 1e-9 for all 1 <= n < l <= 60.
    for ell in 2..=60u64 {
        let spec = match CategorySpec::new(Algebra::G2, ell) {
            Ok(s) => s,
            Err(_) => CategorySpec { algebra: Algebra::G2, ell, q: zeta(2 * ell, 1) },
        };
        let denom = (std::f64::consts::PI / ell as f64).sin();
        for n in 1..ell {
            let exact = spec.qnumber(n as i64).embed();
            let numeric = (n as f64 * std::f64::consts::PI / ell as f64).sin() / denom;
            assert!(
                (exact - Complex64::new(numeric, 0.0)).norm() < 1e-9,
                "l={ell} n={n}: {exact} vs {numeric}"
            );
        }
    }
}

#[test]
fn dimension_sum_identity_for_classical_squares() {
    let cases = [
        (Algebra::G2, 1),
        (Algebra::G2, 2),
        (Algebra::F4, 1),
        (Algebra::F4, 4),
        (Algebra::E6, 1),
        (Algebra::E7, 7),
    ];
    for (alg, node) in cases {
        let rs = RootSystem::get(alg);
        let lam = Weight::fundamental(rs.rank, node);
        let d = fusion::tensor_square_classical(rs, &lam, BOUND).unwrap();
        assert!(fusion::verify_dimension_sum(rs, &d).unwrap(), "{alg} node {node}");
        // Parity blocks have dimensions d(d+1)/2 and d(d-1)/2.
        let dim = rs.weyl_dim(&lam).unwrap();
        let block = |parity| -> excat::Int {
            d.summands
                .iter()
                .filter(|s| s.parity == parity)
                .map(|s| excat::Int::from(s.mult) * rs.weyl_dim(&s.weight).unwrap())
                .sum()
        };
        assert_eq!(block(fusion::Parity::Symmetric), (&dim * (&dim + 1u32)) / 2u32);
        assert_eq!(block(fusion::Parity::Antisymmetric), (&dim * (&dim - 1u32)) / 2u32);
    }
}

#[test]
fn fpdim_is_a_fusion_homomorphism() {
    // sum mult * FPdim(summand) = FPdim(lambda)^2 for truncated squares,
    // including the cancellation-heavy pointed cases.
    let cases = [
        (Algebra::G2, 8, 1),
        (Algebra::G2, 15, 1),
        (Algebra::G2, 18, 1),
        (Algebra::F4, 15, 1),
        (Algebra::F4, 24, 1),
        (Algebra::F4, 24, 4),
        (Algebra::E8, 32, 8),
        (Algebra::E6, 13, 1),
    ];
    for (alg, ell, node) in cases {
        let spec = CategorySpec::new(alg, ell).unwrap();
        let lam = Weight::fundamental(spec.rs().rank, node);
        if !spec.in_alcove(&lam) {
            continue;
        }
        let sq = fusion::tensor_square_truncated(&spec, &lam, BOUND).unwrap();
        let mut total = CycloNumber::zero();
        for s in &sq.summands {
            let term = spec.fpdim(&s.weight).unwrap();
            for _ in 0..s.mult {
                total = &total + &term;
            }
        }
        let d = spec.fpdim(&lam).unwrap();
        assert_eq!(total, &d * &d, "{alg} ell={ell} node={node}");
    }
    // And for general truncated products over a small category.
    let spec = CategorySpec::new(Algebra::F4, 24).unwrap();
    let labels = spec.alcove();
    for a in &labels {
        for b in labels.iter().take(4) {
            let prod = fusion::tensor_truncated(&spec, a, b, BOUND).unwrap();
            let mut total = CycloNumber::zero();
            for (w, m) in prod.iter() {
                let term = spec.fpdim(w).unwrap();
                for _ in 0..*m {
                    total = &total + &term;
                }
            }
            let expected = &spec.fpdim(a).unwrap() * &spec.fpdim(b).unwrap();
            assert_eq!(total, expected, "{a} (x) {b}");
        }
    }
}

#[test]
fn dual_square_contains_trivial_once() {
    for (alg, node) in [(Algebra::G2, 1), (Algebra::F4, 1), (Algebra::E6, 1), (Algebra::E7, 7)] {
        let rs = RootSystem::get(alg);
        let mu = Weight::fundamental(rs.rank, node);
        let d = fusion::tensor_with_dual_classical(rs, &mu, BOUND).unwrap();
        assert_eq!(d.multiplicity(&Weight::zero(rs.rank)), 1, "{alg}");
    }
}

#[test]
fn witness_objects_lie_in_dual_squares_classically() {
    // Every witness row: V_nu inside V_mu (x) V_mu-dual.
    for alg in Algebra::ALL {
        let rs = RootSystem::get(alg);
        for row in witness_rows(alg) {
            let d = fusion::tensor_with_dual_classical(rs, &row.mu, BOUND).unwrap();
            assert!(d.contains(&row.nu), "{alg} {:?}", row.parity);
        }
    }
}

#[test]
fn truncation_becomes_classical_beyond_threshold() {
    // For l beyond a computable threshold the truncated square drops
    // nothing: the threshold is the largest wall level of the classical
    // summands.
    for (alg, node) in [(Algebra::G2, 1), (Algebra::F4, 1)] {
        let rs = RootSystem::get(alg);
        let lam = Weight::fundamental(rs.rank, node);
        let classical = fusion::tensor_square_classical(rs, &lam, BOUND).unwrap();
        for m_mult in 1..=2u64 {
            let ell0: i64 = classical
                .summands
                .iter()
                .map(|s| {
                    let spec_like = s.weight.add(&rs.rho);
                    rs.pairing(
                        &spec_like,
                        if (rs.m as u64 * m_mult) % rs.m as u64 == 0 { rs.theta0() } else { rs.theta1() },
                        excat::rootdata::RootKind::Root,
                    )
                })
                .max()
                .unwrap();
            let ell = (ell0 as u64) + 1;
            let ell = if ell % rs.m as u64 == 0 { ell + 1 } else { ell };
            let spec = CategorySpec::new(alg, ell).unwrap();
            let truncated = fusion::tensor_square_truncated(&spec, &lam, BOUND).unwrap();
            assert!(truncated.discarded.is_empty(), "{alg} ell={ell}");
            assert_eq!(truncated.summands, classical.summands, "{alg} ell={ell}");
        }
    }
}

#[test]
fn e6_duality_swap_leaves_results_invariant() {
    // The vector node of E6 could equally be node 6; the diagram automorphism
    // (1 6)(3 5) must leave every reported quantity unchanged.
    let swap = |w: &Weight| -> Weight {
        let c = w.coords();
        Weight(vec![c[5], c[1], c[4], c[3], c[2], c[0]])
    };
    let rs = RootSystem::get(Algebra::E6);
    for ell in [13u64, 14, 20, 33] {
        let spec = CategorySpec::new(Algebra::E6, ell).unwrap();
        let labels = spec.alcove();
        // The alcove is stable under the swap, label by label.
        for w in &labels {
            assert!(labels.contains(&swap(w)), "ell={ell} {w}");
            assert_eq!(
                spec.fpdim(w).unwrap(),
                spec.fpdim(&swap(w)).unwrap(),
                "ell={ell} {w}"
            );
        }
    }
    // The braid representation space is swap-invariant, so the spectrum and
    // verdict cannot depend on the choice.
    let v1 = Weight::fundamental(6, 1);
    let target = v1.add(&Weight::fundamental(6, 6));
    assert_eq!(swap(&target), target);
    // Dual objects: node 1 and node 6 are exchanged.
    assert_eq!(rs.dual_weight(&v1), Weight::fundamental(6, 6));
    let spec = CategorySpec::new(Algebra::E6, 14).unwrap();
    let spectrum = en_series_spectrum(&spec).unwrap();
    let swapped_summands: Vec<Weight> =
        spectrum.entries.iter().map(|e| swap(&e.summand)).collect();
    for e in &spectrum.entries {
        // The carrier set {2 l1, l3, l6} maps to {2 l6, l5, l1}: the swapped
        // spectrum belongs to the swapped analysis and has equal values.
        let exponent_twin = spectrum
            .entries
            .iter()
            .find(|f| swapped_summands.contains(&f.summand) || swap(&f.summand) == e.summand);
        assert!(exponent_twin.is_some());
    }
}

#[test]
fn matrix_eigenvalues_tie_to_braid_spectrum() {
    // diag(A) is exactly the ratio-normalised G2 spectrum.
    for ell in [18u64, 24, 30] {
        let spec = CategorySpec::new(Algebra::G2, ell).unwrap();
        let (a, _) = excat::matrixrep::build_ab(ell).unwrap();
        let diag: Vec<CycloNumber> = (0..4).map(|i| a[(i, i)].clone()).collect();
        let s = sigma_spectrum(&spec, &Weight::fundamental(2, 1)).unwrap();
        let normalized = excat::braid::normalize_ratios(&spec, &s).unwrap();
        assert!(normalized.same_values(&diag), "ell={ell}");
    }
}

#[test]
fn determinant_of_c_is_root_of_unity() {
    for ell in [18u64, 20, 24, 30] {
        let (a, b) = excat::matrixrep::build_ab(ell).unwrap();
        let c: CycloMatrix = a.mul(&b.inverse().unwrap());
        let det = c.determinant();
        assert!(det.root_of_unity_order().is_some(), "ell={ell}");
        assert!(c.proportional_to_identity().is_none(), "ell={ell}");
    }
}
