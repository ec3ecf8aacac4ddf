use proptest::prelude::*;

use fracsuper::fracderiv::{frac_deriv_power, FracOracle};
use fracsuper::orthopoly::{jacobi_eval, PowerBasisPoly};
use fracsuper::pgsolver::{solve_fivp, FivpProblem};
use fracsuper::specialfn::gamma_ratio;
use fracsuper::superpoints::{interp_superpoints, pg_value_superpoints};
use fracsuper::{FracKind, FracSpec, JacobiParam, NodeFamily, Side};

fn family() -> impl Strategy<Value = NodeFamily> {
    prop::sample::select(NodeFamily::LEGENDRE.to_vec())
}

fn kind() -> impl Strategy<Value = FracKind> {
    prop::sample::select(vec![FracKind::RiemannLiouville, FracKind::Caputo])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gamma_ratio_chains(a in 0.5f64..60.0, b in 0.5f64..60.0, c in 0.5f64..60.0) {
        let lhs = gamma_ratio(a, b).unwrap() * gamma_ratio(b, c).unwrap();
        let rhs = gamma_ratio(a, c).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs());
    }

    #[test]
    fn jacobi_reflection(a in -0.9f64..2.0, b in -0.9f64..2.0, n in 0usize..20, x in -1.0f64..1.0) {
        let p = jacobi_eval(JacobiParam::new(a, b), n, -x);
        let q = jacobi_eval(JacobiParam::new(b, a), n, x);
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        prop_assert!((p - sign * q).abs() <= 1e-12 * (1.0 + q.abs()));
    }

    #[test]
    fn power_rule_is_linear(
        c in prop::collection::vec(-2.0f64..2.0, 1..8),
        d in prop::collection::vec(-2.0f64..2.0, 1..8),
        (a, b) in (-3.0f64..3.0, -3.0f64..3.0),
        mu in 0.05f64..0.95,
        kind in kind(),
        x in -0.99f64..1.0,
    ) {
        let spec = FracSpec::new(mu, Side::Left, kind).unwrap();
        let p = PowerBasisPoly::new(Side::Left, &c);
        let q = PowerBasisPoly::new(Side::Left, &d);
        let combo = p.scale(a).add_scaled(&q, b).unwrap();
        let lhs = frac_deriv_power(&combo, spec).unwrap().eval(x).unwrap();
        let rhs = a * frac_deriv_power(&p, spec).unwrap().eval(x).unwrap()
            + b * frac_deriv_power(&q, spec).unwrap().eval(x).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + lhs.abs()));
    }

    #[test]
    fn power_rule_matches_quadrature(
        c in prop::collection::vec(-1.0f64..1.0, 1..6),
        mu in 0.05f64..0.95,
        kind in kind(),
        x in -0.9f64..1.0,
    ) {
        let spec = FracSpec::new(mu, Side::Left, kind).unwrap();
        let p = PowerBasisPoly::new(Side::Left, &c);
        let dp = p.derivative_t();
        let oracle = FracOracle::new(spec, 0.0, 32).unwrap();
        let want = oracle.eval(&|y| p.eval(y), &|y| dp.eval(y), x).unwrap();
        let got = frac_deriv_power(&p, spec).unwrap().eval(x).unwrap();
        prop_assert!((got - want).abs() <= 1e-10 * (1.0 + want.abs()));
    }

    #[test]
    fn superpoints_are_sorted_and_mirror(family in family(), n in 2usize..14, mu in 0.05f64..0.95) {
        let right = interp_superpoints(family, n, FracSpec::right_rl(mu).unwrap()).unwrap();
        let left = interp_superpoints(family.mirrored(), n, FracSpec::left_rl(mu).unwrap()).unwrap();
        prop_assert_eq!(right.len(), n + 1);
        prop_assert!(right.points.windows(2).all(|w| w[0] < w[1]));
        for (a, b) in left.points.iter().rev().zip(&right.points) {
            prop_assert!((a + b).abs() <= 1e-11);
        }
    }

    #[test]
    fn pg_value_points_are_interior(s in 0.01f64..0.99, n in 0usize..20) {
        let set = pg_value_superpoints(s, n).unwrap();
        prop_assert_eq!(set.len(), n + 1);
        prop_assert!(set.points.iter().all(|&x| x > -1.0 && x < 1.0));
        let p = JacobiParam::new(s, -s);
        for &x in &set.points {
            prop_assert!(jacobi_eval(p, n + 1, x).abs() <= 1e-10);
        }
    }

    #[test]
    fn pg_solver_is_linear(s in 0.05f64..0.95, a in -3.0f64..3.0, k in 0.5f64..3.0) {
        let f = move |x: f64| (k * x).sin();
        let g = move |x: f64| (x + 2.0).ln();
        let uf = solve_fivp(&FivpProblem::new(f, s).unwrap(), 10).unwrap();
        let ug = solve_fivp(&FivpProblem::new(g, s).unwrap(), 10).unwrap();
        let uh = solve_fivp(&FivpProblem::new(move |x| a * f(x) + g(x), s).unwrap(), 10).unwrap();
        for i in 0..uh.coeffs.len() {
            let want = a * uf.coeffs[i] + ug.coeffs[i];
            prop_assert!((uh.coeffs[i] - want).abs() <= 1e-12 * (1.0 + want.abs()));
        }
    }
}
