//! Curve parsing, polynomial algebra, and Newton diagram tests.

mod common;

use locvol::newton::{initial_form_factorization, newton_diagram, refined_initial_forms};
use locvol::poly::{gcd, gcd_free_refine, squarefree_decomposition, UniPoly};
use locvol::{curves_coprime, int, rat, Error, PlaneCurve, Rat};
use num_traits::One;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn curve(s: &str) -> PlaneCurve {
    PlaneCurve::parse(s).unwrap()
}

fn upoly(coeffs: &[i64]) -> UniPoly {
    UniPoly::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
}

#[test]
fn parse_accepts_standard_forms() {
    let f = curve("y^2 - x^3 - x^7");
    let terms: Vec<((u32, u32), Rat)> = f.terms().map(|(e, c)| (*e, c.clone())).collect();
    assert_eq!(
        terms,
        vec![((0, 2), int(1)), ((3, 0), int(-1)), ((7, 0), int(-1))]
    );
    assert_eq!(curve("x*y"), curve("x y"));
    assert_eq!(curve("2x^2"), curve("2*x^2"));
    assert_eq!(curve("x^2 + x^2"), curve("2x^2"));
    assert_eq!(curve("1/2 x + y"), curve("y + 1/2*x"));
    assert_eq!(curve("x*x*x"), curve("x^3"));
    assert_eq!(curve("-x + 2x"), curve("x"));
}

#[test]
fn parse_rejects_degenerate_input() {
    assert!(PlaneCurve::parse("").is_err());
    assert!(matches!(PlaneCurve::parse("3"), Err(Error::ConstantTerm)));
    assert!(matches!(PlaneCurve::parse("x - x"), Err(Error::EmptyCurve)));
    assert!(PlaneCurve::parse("x +").is_err());
    assert!(matches!(PlaneCurve::parse("z"), Err(Error::Parse(_))));
}

#[test]
fn display_round_trips_random_curves() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let n = rng.random_range(1..=5usize);
        let terms: Vec<((u32, u32), Rat)> = (0..n)
            .map(|_| {
                (
                    (rng.random_range(0..6u32), rng.random_range(0..6u32)),
                    rat(rng.random_range(-5..=5i64), rng.random_range(1..=4i64)),
                )
            })
            .collect();
        let Ok(f) = PlaneCurve::new(terms) else {
            continue;
        };
        let round = PlaneCurve::parse(&f.to_string()).unwrap();
        assert_eq!(f, round, "display output: {f}");
    }
}

#[test]
fn weighted_order_matches_direct_minimum() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..300 {
        let n = rng.random_range(1..=4usize);
        let terms: Vec<((u32, u32), Rat)> = (0..n)
            .map(|_| {
                (
                    (rng.random_range(0..7u32), rng.random_range(0..7u32)),
                    int(rng.random_range(1..=3i64)),
                )
            })
            .collect();
        let Ok(f) = PlaneCurve::new(terms) else {
            continue;
        };
        let w1 = rat(rng.random_range(1..=6i64), rng.random_range(1..=3i64));
        let w2 = rat(rng.random_range(1..=6i64), rng.random_range(1..=3i64));
        let direct = f
            .support()
            .map(|&(p, q)| Rat::from_integer(p.into()) * &w1 + Rat::from_integer(q.into()) * &w2)
            .min()
            .unwrap();
        assert_eq!(f.weighted_order(&w1, &w2), direct);
        let m1 = rng.random_range(1..=9u64);
        let m2 = rng.random_range(1..=9u64);
        let integer_direct = f
            .support()
            .map(|&(p, q)| p as u128 * m1 as u128 + q as u128 * m2 as u128)
            .min()
            .unwrap();
        assert_eq!(f.integer_weighted_order(m1, m2), integer_direct);
    }
}

#[test]
fn truncation_keeps_low_degree_terms() {
    let f = curve("y^2 - x^3 - x^7");
    assert_eq!(f.truncate(4).unwrap(), curve("y^2 - x^3"));
    assert_eq!(f.truncate(8).unwrap(), f);
    assert_eq!(f.truncate(3).unwrap(), curve("y^2"));
    assert!(matches!(f.truncate(2), Err(Error::EmptyTruncation)));
}

#[test]
fn diagram_of_the_cusp_with_tail() {
    let d = newton_diagram(&curve("y^2 - x^3 - x^7"));
    assert_eq!(d.vertices(), &[(3, 0), (0, 2)]);
    let facets = d.facets();
    assert_eq!(facets.len(), 1);
    assert_eq!(facets[0].normal, (2, 3));
    assert_eq!(facets[0].value, 6);
    assert_eq!(d.breakpoints(), vec![rat(3, 2)]);
    assert_eq!(d.active_vertex(&rat(1, 2)), (0, 2));
    assert_eq!(d.active_vertex(&int(2)), (3, 0));
    assert_eq!(d.active_vertex(&rat(3, 2)), (3, 0));
    assert_eq!(d.min_p(), 0);
    assert_eq!(d.min_q(), 0);
}

#[test]
fn diagram_of_a_monomial_has_no_facets() {
    let d = newton_diagram(&curve("x^2*y"));
    assert_eq!(d.vertices(), &[(2, 1)]);
    assert!(d.facets().is_empty());
    assert!(d.breakpoints().is_empty());
    assert_eq!(d.min_p(), 2);
    assert_eq!(d.min_q(), 1);
}

#[test]
fn diagram_weighted_order_matches_curve_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let n = rng.random_range(1..=5usize);
        let terms: Vec<((u32, u32), Rat)> = (0..n)
            .map(|_| {
                (
                    (rng.random_range(0..8u32), rng.random_range(0..8u32)),
                    int(1),
                )
            })
            .collect();
        let Ok(f) = PlaneCurve::new(terms) else {
            continue;
        };
        let d = newton_diagram(&f);
        let t = rat(rng.random_range(1..=9i64), rng.random_range(1..=9i64));
        assert_eq!(
            d.weighted_order(&Rat::one(), &t),
            f.weighted_order(&Rat::one(), &t)
        );
    }
}

#[test]
fn gcd_handles_zero_and_normalizes() {
    let p = upoly(&[2, 4]);
    assert_eq!(gcd(&p, &UniPoly::zero()), upoly(&[1, 2]).monic());
    assert_eq!(gcd(&UniPoly::zero(), &p), p.monic());
    let a = upoly(&[-1, 0, 1]);
    let b = upoly(&[1, 1]);
    assert_eq!(gcd(&a, &b), b.monic());
    assert_eq!(gcd(&upoly(&[1, 2]), &upoly(&[3])), UniPoly::constant(int(1)));
}

#[test]
fn squarefree_decomposition_traces() {
    let sq = upoly(&[1, -2, 1]);
    let parts = squarefree_decomposition(&sq);
    assert_eq!(parts, vec![(upoly(&[-1, 1]), 2)]);

    let cube = upoly(&[0, 0, 0, 1]);
    assert_eq!(squarefree_decomposition(&cube), vec![(upoly(&[0, 1]), 3)]);

    let mixed = upoly(&[0, 0, -1, 1]);
    assert_eq!(
        squarefree_decomposition(&mixed),
        vec![(upoly(&[-1, 1]), 1), (upoly(&[0, 1]), 2)]
    );

    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..100 {
        let roots: Vec<i64> = (0..rng.random_range(1..=3usize))
            .map(|_| rng.random_range(-3..=3i64))
            .collect();
        let mut f = UniPoly::constant(int(1));
        let mut expected_degree = 0u32;
        for (i, r) in roots.iter().enumerate() {
            let mult = (i + 1) as u32;
            expected_degree += mult;
            for _ in 0..mult {
                f = f.mul(&upoly(&[-r, 1]));
            }
        }
        let parts = squarefree_decomposition(&f);
        let rebuilt = parts.iter().fold(UniPoly::constant(int(1)), |acc, (g, m)| {
            let mut acc = acc;
            for _ in 0..*m {
                acc = acc.mul(g);
            }
            acc
        });
        assert_eq!(rebuilt.monic(), f.monic());
        assert_eq!(rebuilt.degree(), expected_degree as usize);
        for (g, _) in &parts {
            let d = g.derivative();
            assert!(gcd(g, &d).is_constant(), "factor not squarefree: {roots:?}");
        }
    }
}

#[test]
fn gcd_free_refinement_splits_shared_factors() {
    let s = upoly(&[0, 1]);
    let s_minus_1 = upoly(&[-1, 1]);
    let s_plus_1 = upoly(&[1, 1]);
    let first = vec![(s.mul(&s_minus_1), 1u32)];
    let second = vec![(s_minus_1.mul(&s_plus_1), 2u32)];
    let refined = gcd_free_refine(&[first, second]);
    let mut found_shared = false;
    for f in &refined {
        for g in &refined {
            if f.poly != g.poly {
                assert!(gcd(&f.poly, &g.poly).is_constant());
            }
        }
        if f.poly == s_minus_1.monic() {
            found_shared = true;
            assert_eq!(f.mults, vec![1, 2]);
        }
    }
    assert!(found_shared);
    let degree_first: usize = refined
        .iter()
        .map(|f| f.poly.degree() * f.mults[0] as usize)
        .sum();
    assert_eq!(degree_first, 2);
}

#[test]
fn initial_forms_of_the_cusp() {
    let f = curve("y^2 - x^3 - x^7");
    let fact = initial_form_factorization(&f, (2, 3)).unwrap();
    assert_eq!(fact.axis_x_mult, 0);
    assert_eq!(fact.axis_y_mult, 0);
    assert_eq!(fact.factors.len(), 1);
    assert_eq!(fact.factors[0].degree, 1);
    assert_eq!(fact.factors[0].multiplicity, 1);
    assert_eq!(fact.edge_length(), 1);
}

#[test]
fn initial_forms_pick_up_axis_multiplicities() {
    let f = curve("x^2*y - x*y^3");
    let fact = initial_form_factorization(&f, (1, 1)).unwrap();
    assert_eq!(fact.axis_x_mult, 2);
    assert_eq!(fact.axis_y_mult, 1);
    assert_eq!(fact.factors.len(), 0);
    let fact = initial_form_factorization(&f, (2, 1)).unwrap();
    assert_eq!((fact.axis_x_mult, fact.axis_y_mult), (1, 1));
    assert_eq!(fact.factors.len(), 1);
    assert_eq!(fact.factors[0].degree, 1);
    assert_eq!(fact.edge_length(), 1);
}

#[test]
fn refined_forms_share_common_branches() {
    let f = curve("y^2 - x^3");
    let g = curve("y^2 - x^3 + x^4");
    let refined = refined_initial_forms(&[&f, &g], (2, 3)).unwrap();
    assert_eq!(refined.classes.len(), 1);
    assert_eq!(refined.classes[0].degree, 1);
    assert_eq!(refined.classes[0].multiplicities, vec![1, 1]);

    let h = curve("y^2 + x^3");
    let refined = refined_initial_forms(&[&f, &h], (2, 3)).unwrap();
    assert_eq!(refined.classes.len(), 2);
    for cl in &refined.classes {
        assert_eq!(cl.multiplicities.iter().filter(|&&m| m > 0).count(), 1);
    }
}

#[test]
fn coprimality_detects_shared_components() {
    assert!(curves_coprime(&curve("x"), &curve("y")));
    assert!(curves_coprime(&curve("y^2 - x^3"), &curve("y")));
    assert!(curves_coprime(&curve("y^2 - x^3"), &curve("y^2 + x^3")));
    assert!(!curves_coprime(&curve("x*y"), &curve("x")));
    assert!(!curves_coprime(&curve("y^2 - x^2"), &curve("y - x")));
    assert!(!curves_coprime(
        &curve("x^2*y - x*y^3"),
        &curve("x^3 + x*y")
    ));
}
