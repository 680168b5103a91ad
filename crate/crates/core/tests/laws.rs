mod common;

use common::*;
use proptest::prelude::*;
use superpoisson::brackets::{canonical_poisson, de_rham, schouten};
use superpoisson::graded::{GradedPoly, PrintMode, RandomSpec, VarKind, DEFAULT_TRUNCATION};
use superpoisson::koszul::{self, DifferentialPattern, EpsilonRule};
use superpoisson::lang::{print, read_poly, Session};
use superpoisson::{legendre, verify};

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 48,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn product_laws(s in any::<u64>(), t in any::<u64>(), u in any::<u64>()) {
        let c = super22();
        let (a, b, d) = (seeded(&c, &mixed_spec(), s), seeded(&c, &mixed_spec(), t), seeded(&c, &mixed_spec(), u));
        prop_assert!(supercommutativity(&a, &b).is_zero());
        prop_assert!(associativity(&a, &b, &d).is_zero());
    }

    #[test]
    fn de_rham_squares_to_zero(s in any::<u64>()) {
        let c = super22();
        let w = seeded(&c, &RandomSpec::form(3, 2).terms(4), s);
        prop_assert!(d_squared(&w).is_zero());
    }

    #[test]
    fn schouten_laws(s in any::<u64>(), t in any::<u64>(), u in any::<u64>()) {
        let c = super22();
        let spec = RandomSpec::multivector(2, 2).terms(3);
        let (p, q, r) = (seeded(&c, &spec, s), seeded(&c, &spec, t), seeded(&c, &spec, u));
        prop_assert!(schouten_leibniz(&p, &q, &r).is_zero());
        prop_assert!(schouten_jacobi(&p, &q, &r).is_zero());
    }

    #[test]
    fn canonical_poisson_laws(s in any::<u64>(), t in any::<u64>(), u in any::<u64>()) {
        let c = super22();
        let spec = phase_spec();
        let (f, g, h) = (seeded(&c, &spec, s), seeded(&c, &spec, t), seeded(&c, &spec, u));
        prop_assert!(poisson_leibniz(&f, &g, &h).is_zero());
        prop_assert!(poisson_jacobi(&f, &g, &h).is_zero());
    }

    #[test]
    fn alpha_is_a_morphism(s in any::<u64>(), t in any::<u64>()) {
        let c = super22();
        let spec = RandomSpec::multivector(2, 3).terms(3);
        let (p, q) = (seeded(&c, &spec, s), seeded(&c, &spec, t));
        let lhs = koszul::alpha(&schouten(&p, &q).unwrap()).unwrap().into_poly();
        let rhs = canonical_poisson(koszul::alpha(&p).unwrap().k(), koszul::alpha(&q).unwrap().k()).unwrap();
        let sign = koszul::morphism_sign(p.parity_of().unwrap(), q.parity_of().unwrap());
        prop_assert_eq!(lhs, rhs.scale_int(sign));
    }

    #[test]
    fn weight_identity(s in any::<u64>(), t in any::<u64>()) {
        let c = super22();
        let p = seeded(&c, &RandomSpec::multivector(2, 3).terms(3), s);
        let q = seeded(&c, &RandomSpec::multivector(2, 3).terms(3), t);
        prop_assert!(verify::check_weight_identities(&p, &q).unwrap().pass);
    }

    #[test]
    fn calibrated_epsilon_holds(s in any::<u64>(), n in 1usize..=3, pick in 0usize..3) {
        let c = super22();
        let p = superpoisson::graded::random_poly(
            &c, &RandomSpec::multivector(1, 3).terms(5), superpoisson::graded::Parity::Even, s,
        ).unwrap();
        let fs: Vec<GradedPoly> = (0..n as u64)
            .map(|i| seeded(&c, &RandomSpec::function(2).terms(2), s.wrapping_add(i + 1)))
            .collect();
        let pattern = [
            DifferentialPattern::Functions,
            DifferentialPattern::LeadingFunction,
            DifferentialPattern::Differentials,
        ][pick];
        let cmp = koszul::koszul_on_differentials_with(&p, &fs, pattern, EpsilonRule::Calibrated).unwrap();
        prop_assert!(cmp.difference.is_zero());
    }

    #[test]
    fn exact_shift_round_trips(s in any::<u64>()) {
        let shifted = superpoisson::fixtures::shifted().unwrap();
        let c = &shifted.chart;
        let chi = seeded(c, &RandomSpec::function(2).terms(3), s | 1);
        let w = de_rham(&chi).unwrap() + shifted.omega2.clone();
        prop_assert!(verify::check_roundtrip(&w, &DEFAULT_TRUNCATION).unwrap().pass);
        let p = legendre::legendre_inverse(&w, &DEFAULT_TRUNCATION).unwrap();
        prop_assert!(schouten(&p, &p).unwrap().is_zero());
    }

    #[test]
    fn print_then_read(s in any::<u64>()) {
        let c = super22();
        let spec = RandomSpec::new(&[(VarKind::Base, 2), (VarKind::Fiber, 2), (VarKind::AntiFiber, 2)]).terms(4);
        let u = seeded(&c, &spec, s);
        let mut session = Session::default();
        session.run("chart R2|2;").unwrap();
        let back = read_poly(&mut session, &print(&u, PrintMode::Canonical)).unwrap();
        prop_assert_eq!(back, u);
    }
}
