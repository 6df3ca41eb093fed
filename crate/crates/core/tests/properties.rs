use mdeg_core::degree_estimates::{semigroup_member, su_lower_bound, DegreeBoundQuery};
use mdeg_core::h_reduction::express_in_h;
use mdeg_core::lemma_verifier::{decompose_top_pair, TopPairDecomposition};
use mdeg_core::mdeg_criteria::{classify_dim2, classify_dim3, matching_rules, MdegTriple, Verdict};
use mdeg_core::poisson::bracket;
use mdeg_core::poly::{int, random, Division, Monomial, Root};
use mdeg_core::{Degree, Polynomial, Rational};
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const N: usize = 3;

fn poly_with(max_exp: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, N), -6i64..=6), 0..=max_terms)
        .prop_map(|terms| Polynomial::from_terms(N, terms.into_iter().map(|(e, c)| (Monomial::new(e), int(c)))))
}

fn poly() -> impl Strategy<Value = Polynomial> {
    poly_with(3, 5)
}

fn nonzero_poly() -> impl Strategy<Value = Polynomial> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

/// Kept small: primitive-PRS gcd grows quickly with degree.
fn small_poly() -> impl Strategy<Value = Polynomial> {
    poly_with(2, 3).prop_filter("nonzero", |p| !p.is_zero())
}

fn form(d: u32) -> impl Strategy<Value = Polynomial> {
    any::<u64>().prop_map(move |s| random::nonzero_homogeneous(&mut ChaCha8Rng::seed_from_u64(s), N, d, 4))
}

fn scalar() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(f in poly(), g in poly(), h in poly()) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &Polynomial::one(N), f.clone());
    }

    #[test]
    fn degree_of_product_is_additive(f in poly(), g in poly()) {
        prop_assert_eq!((&f * &g).total_degree(), f.total_degree().add(g.total_degree()));
    }

    #[test]
    fn exact_divide_undoes_multiplication(f in poly(), g in nonzero_poly()) {
        prop_assert_eq!((&f * &g).exact_divide(&g).unwrap(), Division::Exact(f));
    }

    #[test]
    fn exact_divide_rejects_remainders(f in nonzero_poly(), g in nonzero_poly()) {
        // f g + 1 is never divisible by a nonconstant g.
        prop_assume!(!g.is_constant());
        let p = &(&f * &g) + &Polynomial::one(N);
        prop_assert_eq!(p.exact_divide(&g).unwrap(), Division::Indivisible);
    }

    #[test]
    fn kth_root_recovers_powers(h in nonzero_poly(), k in 1u32..=4) {
        prop_assume!(h.total_degree() <= Degree::Finite(4));
        let root = h.pow(k).kth_root(k).unwrap().exact().expect("a power has a root");
        prop_assert_eq!(root.pow(k), h.pow(k));
        prop_assert!(root == h || root == -&h);
    }

    #[test]
    fn kth_root_rejects_non_powers(h in nonzero_poly(), k in 2u32..=3) {
        prop_assume!(!h.is_constant());
        let p = &h.pow(k) + &Polynomial::var(N, 0);
        if let Root::Exact(r) = p.kth_root(k).unwrap() {
            prop_assert_eq!(r.pow(k), p);
        }
    }

    #[test]
    fn gcd_is_a_common_divisor_up_to_scalar(f in small_poly(), g in small_poly(), c in small_poly()) {
        let (a, b) = (&f * &c, &g * &c);
        let d = a.gcd(&b).unwrap();
        prop_assert!(a.exact_divide(&d).unwrap().exact().is_some());
        prop_assert!(b.exact_divide(&d).unwrap().exact().is_some());
        // c divides the gcd.
        prop_assert!(d.exact_divide(&c).unwrap().exact().is_some());
        let swapped = b.gcd(&a).unwrap();
        prop_assert_eq!(d.monic(), swapped.monic());
    }

    #[test]
    fn linear_change_preserves_degree(f in poly(), seed in any::<u64>()) {
        let l = random::invertible_matrix(&mut ChaCha8Rng::seed_from_u64(seed), N);
        prop_assert!(!l.determinant().is_zero());
        prop_assert_eq!(f.apply_linear_change(&l).unwrap().total_degree(), f.total_degree());
    }

    #[test]
    fn display_parse_round_trip(f in poly()) {
        prop_assert_eq!(Polynomial::parse(&f.to_string(), N).unwrap(), f);
    }

    #[test]
    fn bracket_is_antisymmetric_and_alternating(f in poly(), g in poly()) {
        prop_assert_eq!(bracket(&f, &g).unwrap(), -&bracket(&g, &f).unwrap());
        prop_assert!(bracket(&f, &f).unwrap().is_zero());
    }

    #[test]
    fn bracket_degree_is_subadditive(f in poly(), g in poly()) {
        prop_assert!(bracket(&f, &g).unwrap().degree() <= f.total_degree().add(g.total_degree()));
    }

    #[test]
    fn bracket_with_function_of_f_vanishes(f in nonzero_poly(), a in scalar(), b in scalar()) {
        prop_assume!(f.total_degree() <= Degree::Finite(3));
        let g = &f.pow(2).scale(&a) + &f.scale(&b);
        prop_assert!(bracket(&f, &g).unwrap().is_zero());
    }

    #[test]
    fn express_in_h_round_trips(
        h in form(2),
        coeffs in prop::collection::vec(scalar(), 1..=4),
    ) {
        prop_assume!(h.is_squarefree().unwrap());
        let mut p = Polynomial::zero(N);
        for (l, a) in coeffs.iter().enumerate() {
            p += &h.pow(l as u32).scale(a);
        }
        let got = express_in_h(&h, &p).unwrap().expect("a polynomial in H commutes with H");
        let mut back = Polynomial::zero(N);
        for (l, a) in got.iter().enumerate() {
            back += &h.pow(l as u32).scale(a);
        }
        prop_assert_eq!(back, p);
    }

    #[test]
    fn express_in_h_rejects_independent(h in form(2)) {
        prop_assume!(h.is_squarefree().unwrap());
        let p = &h + &Polynomial::var(N, 0).pow(3);
        prop_assert_eq!(express_in_h(&h, &p).unwrap(), None);
    }

    #[test]
    fn su_bound_is_monotone_in_q_and_bracket(
        deg_f in 2u32..12, gap in 1u32..12, deg_bracket in 2u32..20, q in 0u32..6,
    ) {
        let deg_g = deg_f + gap;
        let base = DegreeBoundQuery { deg_f, deg_g, deg_bracket, q, r: 0 };
        let p = base.p();
        let b0 = su_lower_bound(&base).unwrap();
        let b1 = su_lower_bound(&DegreeBoundQuery { deg_bracket: deg_bracket + 1, ..base }).unwrap();
        prop_assert!(b1 >= b0);
        // q (p dg - dg - df + b) is nondecreasing in q once the coefficient is nonnegative.
        let coef = p as i64 * deg_g as i64 - deg_g as i64 - deg_f as i64 + deg_bracket as i64;
        let bq = su_lower_bound(&DegreeBoundQuery { q: q + 1, ..base }).unwrap();
        prop_assert_eq!(bq - b0, coef);
        if p > 1 {
            let br = su_lower_bound(&DegreeBoundQuery { r: 1, ..base }).unwrap();
            prop_assert_eq!(br - b0, deg_g as i64);
        }
    }

    #[test]
    fn su_bound_rejects_bad_queries(deg_f in 1u32..10, deg_g in 1u32..10) {
        let q = DegreeBoundQuery { deg_f, deg_g, deg_bracket: 2, q: 0, r: 0 };
        prop_assert_eq!(su_lower_bound(&q).is_ok(), deg_f < deg_g);
        let r = DegreeBoundQuery { deg_f: 4, deg_g: 6, deg_bracket: 2, q: 0, r: 2 };
        prop_assert!(su_lower_bound(&r).is_err());
    }

    #[test]
    fn semigroup_beyond_frobenius(a in 1u32..15, b in 1u32..15, extra in 0u32..50) {
        prop_assume!(num_integer::gcd(a, b) == 1);
        let frob = (a * b) as i64 - a as i64 - b as i64;
        prop_assert!(semigroup_member(a, b, (frob + 1 + extra as i64).max(0) as u32));
        prop_assert!(semigroup_member(a, b, 0));
    }

    #[test]
    fn matching_rules_agree(d1 in 1u32..=12, d2 in 1u32..=30, d3 in 1u32..=30) {
        let t = MdegTriple::new(d1, d2, d3);
        let rules = matching_rules(t);
        if let Some(first) = rules.first() {
            for r in &rules {
                prop_assert_eq!(r.verdict, first.verdict, "{} vs {} on {:?}", r.rule_id, first.rule_id, t);
            }
        }
        let c = classify_dim3(t);
        prop_assert!(!c.citation.is_empty());
        prop_assert_eq!(classify_dim3(MdegTriple::new(d3, d1, d2)), c);
    }

    #[test]
    fn semigroup_rules_match_oracle(d2 in 3u32..=30, d3 in 3u32..=40) {
        prop_assume!(d2 <= d3);
        let brute = |a: u32, b: u32, n: u32| (0..=n / a).any(|s| (0..=n / b).any(|t| s * a + t * b == n));
        let (d1, d2, d3) = MdegTriple::new(3, d2, d3).degrees();
        let c = classify_dim3(MdegTriple::new(d1, d2, d3));
        if c.rule_id == "R4" {
            let want = d2 % 3 == 0 || brute(3, d2, d3);
            prop_assert_eq!(c.verdict == Verdict::Realizable, want);
        }
        if d2 >= 5 {
            let c5 = classify_dim3(MdegTriple::new(5, d2, d3));
            if c5.rule_id == "R5" {
                prop_assert_eq!(c5.verdict == Verdict::Realizable, d2 % 5 == 0 || brute(5, d2, d3));
            }
        }
        if d2 >= 4 && d2 % 2 == 1 && d3 % 2 == 1 {
            let c4 = classify_dim3(MdegTriple::new(4, d2, d3));
            prop_assert_eq!(c4.rule_id.as_str(), "R7");
            prop_assert_eq!(c4.verdict == Verdict::Realizable, brute(4, d2, d3));
        }
    }

    #[test]
    fn prime_pairs_match_oracle(i in 0usize..6, j in 0usize..6, d3 in 1u32..=80) {
        let primes = [3u32, 5, 7, 11, 13, 17];
        prop_assume!(i < j && primes[j] <= d3);
        let (p1, p2) = (primes[i], primes[j]);
        let c = classify_dim3(MdegTriple::new(p1, p2, d3));
        prop_assume!(c.rule_id == "R3");
        let brute = (0..=d3 / p1).any(|s| (d3 - s * p1) % p2 == 0);
        prop_assert_eq!(c.verdict == Verdict::Realizable, brute);
    }

    #[test]
    fn dim2_is_symmetric(a in 1u32..=40, b in 1u32..=40) {
        let (x, y) = (classify_dim2(a, b), classify_dim2(b, a));
        prop_assert_eq!(x.verdict, y.verdict);
        prop_assert!(!x.citation.is_empty());
        prop_assert_eq!(x.verdict == Verdict::Realizable, a % b == 0 || b % a == 0);
    }

    #[test]
    fn squarefree_decomposition_round_trips(seed in any::<u64>(), alpha in scalar()) {
        prop_assume!(!alpha.is_zero());
        let h = random::squarefree_quadratic(&mut ChaCha8Rng::seed_from_u64(seed), N);
        match decompose_top_pair(&h.pow(2), &h.pow(3).scale(&alpha)).unwrap() {
            TopPairDecomposition::Squarefree { h: h2, alpha: a2 } => {
                prop_assert_eq!(h2.pow(2), h.pow(2));
                prop_assert_eq!(h2.pow(3).scale(&a2), h.pow(3).scale(&alpha));
            }
            other => prop_assert!(false, "unexpected {:?}", other),
        }
    }

    #[test]
    fn power_decomposition_round_trips(h in form(1), alpha in scalar()) {
        prop_assume!(!alpha.is_zero());
        match decompose_top_pair(&h.pow(4), &h.pow(6).scale(&alpha)).unwrap() {
            TopPairDecomposition::Power { h: h2, alpha: a2 } => {
                prop_assert_eq!(h2.pow(4), h.pow(4));
                prop_assert_eq!(h2.pow(6).scale(&a2), h.pow(6).scale(&alpha));
            }
            other => prop_assert!(false, "unexpected {:?}", other),
        }
    }

    #[test]
    fn independent_top_pairs_are_reported(f4 in form(4), g6 in form(6)) {
        let d = decompose_top_pair(&f4, &g6).unwrap();
        let commuting = bracket(&f4, &g6).unwrap().is_zero();
        prop_assert_eq!(d == TopPairDecomposition::NotDependent, !commuting);
    }
}
