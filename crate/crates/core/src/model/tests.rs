use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::formulas::{self, ModelVars};
use super::geometry::*;
use super::mechanics::*;
use super::polynomials::*;
use super::ModelError;
use crate::bpoly::Sym;
use crate::numeric::{parse_rational, Interval};
use crate::scalar::Scalar;
use crate::{Rational, RationalInterval};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn dec(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

fn iv(a: &str, b: &str) -> RationalInterval {
    Interval::new(dec(a), dec(b)).unwrap()
}

fn f(x: &Rational) -> f64 {
    x.to_f64().unwrap()
}

fn mid(x: &RationalInterval) -> f64 {
    f(&x.midpoint())
}

/// Exact model variables at a rational parameter point.
fn vars_at(s: &Rational, t: &Rational) -> ModelVars<Rational> {
    let p = parameterisation();
    let ev = |k: Sym| p[&k].eval(s, t).unwrap();
    ModelVars {
        x3: ev(Sym::X3),
        y5: ev(Sym::Y5),
        e1: ev(Sym::E1),
        e2: ev(Sym::E2),
        e3: ev(Sym::E3),
    }
}

fn geometry_at_t(lo: &str, hi: &str, branch: Branch) -> PentagonGeometry {
    let y5 = y5_of_t(&iv(lo, hi)).unwrap();
    geometry_from_y5(&y5, branch).unwrap()
}

#[test]
fn parameterisation_satisfies_distance_relations() {
    for (s, t) in [(q(3, 5), q(1, 2)), (q(7, 10), q(1, 3)), (q(2, 3), q(5, 7))] {
        let v = vars_at(&s, &t);
        let one = Rational::one();
        assert_eq!(&v.e1 * &v.e1, &one + q(2, 1) * &v.x3);
        assert_eq!(
            &v.e2 * &v.e2,
            q(3, 1) + q(4, 1) * &v.x3 - q(4, 1) * &v.x3 * &v.x3
        );
        let w = &one + q(4, 1) * &v.y5 * &v.y5;
        assert_eq!(&v.e3 * &v.e3, &w * &w * &w);
    }
}

#[test]
fn h1_forms_agree_exactly() {
    for (s, t) in [
        (q(3, 5), q(1, 2)),
        (q(7, 10), q(1, 3)),
        (q(2, 3), q(5, 7)),
        (q(9, 10), q(3, 4)),
    ] {
        let v = vars_at(&s, &t);
        assert_eq!(formulas::h1(&v), formulas::h1_expanded(&v));
    }
    // the forms agree as polynomials, not only on the variety
    let v = ModelVars {
        x3: q(2, 7),
        y5: q(-3, 5),
        e1: q(11, 3),
        e2: q(1, 9),
        e3: q(-5, 2),
    };
    assert_eq!(formulas::h1(&v), formulas::h1_expanded(&v));
}

#[test]
fn reduced_identities_hold_on_the_parameterised_variety() {
    for (s, t) in [
        (q(3, 5), q(1, 2)),
        (q(7, 10), q(1, 3)),
        (q(2, 3), q(5, 7)),
        (q(4, 5), q(9, 10)),
    ] {
        let v = vars_at(&s, &t);
        let m = mass_internals(&v).unwrap();
        assert_eq!(
            &m.g1 * &m.l2 * &m.l2,
            formulas::h1_bar(&v),
            "g1 L2^2 = hbar1 at ({s}, {t})"
        );
        assert!(m.g4.is_zero());
        assert!(m.g3.is_zero());
        let (_, m1, m3, m5) = masses_generic(&v).unwrap();
        assert_eq!(m5, Rational::one() - q(2, 1) * (&m1 + &m3));
        assert_eq!(formulas::m5_factored(&v).unwrap(), m5);
    }
}

#[test]
fn h2_two_path_evaluation() {
    let model = model_polynomials().unwrap();
    let (s, t) = (q(3, 5), q(1, 2));
    let v = vars_at(&s, &t);
    let direct = formulas::h2(&v.x3, &v.y5);
    let d = q(5, 1) * &s * &s - q(4, 1) * &s + Rational::one();
    let via_h2 = model.h2.eval_rational(&s, &t) / (q(16, 1) * d.pow(4) * t.pow(4));
    assert!(
        direct == via_h2 || direct == -via_h2.clone(),
        "{direct} vs {via_h2}"
    );
    assert_eq!(
        model.h2_scale.eval(&s, &t).unwrap() * model.h2.eval_rational(&s, &t),
        direct
    );
}

#[test]
fn h1_two_path_evaluation() {
    let model = model_polynomials().unwrap();
    for (s, t) in [(q(3, 5), q(1, 2)), (q(5, 8), q(2, 9))] {
        let v = vars_at(&s, &t);
        let direct = formulas::h1(&v);
        let via = model.h1_scale.eval(&s, &t).unwrap() * model.h1.eval_rational(&s, &t);
        assert_eq!(direct, via);
        assert_eq!(
            model.h1.eval_rational(&s, &t),
            model.printed_h1.eval_rational(&s, &t)
        );
    }
}

#[test]
fn model_polynomial_shapes() {
    let model = model_polynomials().unwrap();
    assert_eq!(model.h1.total_degree(), Some(34));
    assert_eq!(model.h1.degree_in(0), Some(24));
    assert_eq!(model.h1.degree_in(1), Some(10));
    assert_eq!(model.h1, model.printed_h1.primitive_part());
    assert_eq!(model.h2, printed_h2().primitive_part());
    assert_eq!(model.printed_r60.degree(), Some(60));
    assert!(verify_embedded_data().is_ok());
    assert_eq!(embedded_data_digest().len(), 64);
}

#[test]
fn h2_examples() {
    assert_eq!(h2_eval(&q(1, 4), &Rational::zero()), Rational::zero());
    assert_eq!(h2_eval(&q(1, 2), &q(1, 2)), q(-12, 1));
}

#[test]
fn regular_pentagon_geometry_and_masses() {
    // t2 = 1 + sqrt5 - sqrt(5 + 2 sqrt5) = 0.15838444032453...
    let g = geometry_at_t("0.158384440324", "0.158384440325", Branch::Plus);
    assert_eq!(g.shape, Shape::Convex);
    let golden = (1.0 + 5f64.sqrt()) / 4.0;
    assert!(f(g.x3.lo()) <= golden && golden <= f(g.x3.hi()));
    let m = solve_masses(&g).unwrap();
    let fifth = q(1, 5);
    assert!(m.m1.contains(&fifth) && m.m3.contains(&fifth) && m.m5.contains(&fifth));
    assert!(m.lambda.is_positive());
    assert!((mid(&m.lambda) - 1.0 / 5f64.sqrt()).abs() < 1e-9);
    let r = cc_residuals(&g, &m).unwrap();
    assert!(r.iter().all(|e| e.contains_zero()), "{r:?}");
    assert!(h1_eval(&g).contains_zero());

    let lopsided = [
        RationalInterval::point(q(1, 2)),
        RationalInterval::point(q(1, 2)),
        RationalInterval::zero(),
        RationalInterval::zero(),
        RationalInterval::zero(),
    ];
    let r = cc_residuals_with(&g, &lopsided, &m.lambda).unwrap();
    assert!(r.iter().any(|e| !e.contains_zero()));
}

#[test]
fn geometry_distances() {
    let g = geometry_at_t("0.7332148085", "0.7332148086", Branch::Plus);
    let p = g.positions();
    let d2 = |i: usize, j: usize| {
        (p[i].0.clone() - p[j].0.clone()).powi(2) + (p[i].1.clone() - p[j].1.clone()).powi(2)
    };
    let one = Rational::one();
    for (i, j) in [(0, 1), (0, 2), (2, 4), (3, 4), (1, 3)] {
        let d = d2(i, j);
        assert!(
            d.contains(&one) && f(&d.width()) < 1e-8,
            "r{}{} = {d:?}",
            i + 1,
            j + 1
        );
    }
    let r14 = d2(0, 3) - (RationalInterval::one() + RationalInterval::from_i64(2) * g.x3.clone());
    assert!(r14.contains_zero());
}

#[test]
fn boundary_geometry() {
    // enclosure of sqrt3/2
    let y5 = iv("0.86602540378", "0.86602540379");
    let g = geometry_from_y5(&y5, Branch::Plus).unwrap();
    assert!(g.x3.contains(&Rational::one()));
    assert_eq!(g.shape, Shape::Degenerate);
    assert_eq!(
        geometry_from_y5(&iv("1.9", "2"), Branch::Plus),
        Err(ModelError::OutOfBranchDomain)
    );
    assert_eq!(
        geometry_from_y5(&iv("1.5", "1.6"), Branch::Minus),
        Err(ModelError::OutOfBranchDomain)
    );
    let g = geometry_from_y5(&iv("1.9", "1.91"), Branch::Minus).unwrap();
    assert_eq!(g.shape, Shape::Concave);
    assert_eq!(
        branch_domain_status(&iv("1.8", "1.9"), Branch::Minus),
        DomainStatus::Straddles
    );
    assert_eq!(
        branch_domain_status(&iv("0", "0.1"), Branch::Plus),
        DomainStatus::Straddles
    );
}

#[test]
fn concave_solution_masses() {
    let g = geometry_at_t("0.73321480855", "0.73321480856", Branch::Plus);
    assert_eq!(g.shape, Shape::Concave);
    assert!((mid(&g.x3) - 0.540209156826).abs() < 1e-9);
    assert!((mid(&g.y5) - 0.157660497004).abs() < 1e-9);
    let m = solve_masses(&g).unwrap();
    assert!(m.is_admissible());
    for (x, v) in [
        (&m.m1, 0.0922539097493),
        (&m.m3, 0.386094876598),
        (&m.m5, 0.043302427305),
    ] {
        assert!((mid(x) - v).abs() < 1e-9, "{} vs {v}", mid(x));
        assert!(f(&x.width()) < 1e-8);
    }
    let r = cc_residuals(&g, &m).unwrap();
    assert!(r.iter().all(|e| e.contains_zero()));
    let fs = formulas::f_system(&g.vars(), &m.reduced_lambda, &m.m1, &m.m3).unwrap();
    assert!(fs.iter().all(|e| e.contains_zero()));
}

#[test]
fn candidate_with_negative_m5() {
    // t9 = 0.99581847746589...
    let g = geometry_at_t("0.995818477465", "0.995818477466", Branch::Plus);
    assert!((mid(&g.x3) - 0.2540572).abs() < 1e-7);
    let m = solve_masses(&g).unwrap();
    assert!(m.m5.hi() < &Rational::zero());
}

#[test]
fn h1_bracket_and_sign_change() {
    let g = geometry_from_y5(&y5_of_t(&iv("0.1871", "0.1872")).unwrap(), Branch::Plus).unwrap();
    assert!(h1_eval(&g).lo() > &q(242, 1), "{:?}", h1_eval(&g));
    let at = |t: &str| {
        let g = geometry_from_y5(&y5_of_t(&iv(t, t)).unwrap(), Branch::Plus).unwrap();
        h1_eval(&g).sign()
    };
    let (a, b) = (at("0.7332"), at("0.7333"));
    assert!(a.is_some() && b.is_some() && a != b);
}

#[test]
fn monotonicity_on_rational_grid() {
    let grid: Vec<Rational> = (1..400).map(|k| q(k, 400)).collect();
    let y5 = |t: &Rational| (Rational::one() - t * t) / (q(4, 1) * t);
    assert!(grid.windows(2).all(|w| y5(&w[0]) > y5(&w[1])));
    // (y Phi)^2 rises to y = sqrt3/2 and falls after; Psi+ = 1/4 + y Phi / 2
    let g2 = |y: &Rational| {
        let z = y * y;
        &z * (q(15, 1) - q(4, 1) * &z) / (Rational::one() + q(4, 1) * &z)
    };
    let ys: Vec<Rational> = (1..194).map(|k| q(k, 100)).collect();
    for w in ys.windows(2) {
        let rising = &w[1] * &w[1] <= q(3, 4);
        let falling = &w[0] * &w[0] >= q(3, 4);
        if rising {
            assert!(g2(&w[0]) < g2(&w[1]));
        }
        if falling {
            assert!(g2(&w[0]) > g2(&w[1]));
        }
    }
    let xs: Vec<Rational> = (-49..100).map(|k| q(k, 100)).collect();
    let psi1 = |x: &Rational| Rational::one() + q(2, 1) * x;
    let psi2 = |x: &Rational| q(3, 1) + q(4, 1) * x - q(4, 1) * x * x;
    for w in xs.windows(2) {
        assert!(psi1(&w[0]) < psi1(&w[1]));
        if w[1] <= q(1, 2) {
            assert!(psi2(&w[0]) < psi2(&w[1]));
        } else if w[0] >= q(1, 2) {
            assert!(psi2(&w[0]) > psi2(&w[1]));
        }
    }
    let psi3 = |y: &Rational| Rational::one() + q(4, 1) * y * y;
    assert!(ys.windows(2).all(|w| psi3(&w[0]) < psi3(&w[1])));
}

#[test]
fn point_geometry_matches_enclosure() {
    let p = point_geometry(0.157660497004, Branch::Plus).unwrap();
    assert!((p.x3 - 0.540209156826).abs() < 1e-9);
    assert!((p.y3 - 0.999191284844).abs() < 1e-9);
    assert!(point_geometry(2.0, Branch::Plus).is_none());
}
