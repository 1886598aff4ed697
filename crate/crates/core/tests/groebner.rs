mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{gf, oracle, poly, polys, random_form, ring};
use regseq::groebner::{
    buchberger, colon_ideal, elimination, ideal_intersection, radical_membership, saturation,
    syzygy_basis,
};
use regseq::poly::Monomial;
use regseq::{Error, FPModule, Field, FreeElement, Ideal, PolyRing, Polynomial, Ring, TermOrder};

fn build(r: &Ring, terms: &[(Vec<u32>, i64)]) -> Polynomial {
    let mut acc = Polynomial::zero(r);
    for (e, c) in terms {
        acc = &acc + &Polynomial::monomial(r, Monomial::from_exponents(e), r.field().from_i64(*c));
    }
    acc
}

fn gens_strategy() -> impl Strategy<Value = Vec<Vec<(Vec<u32>, i64)>>> {
    let term = (prop::collection::vec(0u32..=2, 3), -3i64..=3);
    prop::collection::vec(prop::collection::vec(term, 1..4), 1..4)
}

fn orders() -> Vec<Ring> {
    vec![
        ring(3, gf()),
        PolyRing::new(&["x", "y", "z"], gf(), TermOrder::Lex).unwrap(),
        PolyRing::new(&["x", "y", "z"], Field::Rational, TermOrder::Grevlex).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generators_reduce_to_zero(g in gens_strategy()) {
        for r in orders() {
            let gens: Vec<Polynomial> = g.iter().map(|t| build(&r, t)).collect();
            let gb = buchberger(&r, &gens).unwrap();
            prop_assert!(gb.verify());
            for p in &gens {
                prop_assert!(gb.contains_poly(p).unwrap());
            }
        }
    }

    #[test]
    fn reduced_basis_is_canonical(g in gens_strategy(), h in prop::collection::vec(prop::collection::vec((prop::collection::vec(0u32..=1, 3), -2i64..=2), 0..3), 3)) {
        let r = ring(3, gf());
        let gens: Vec<Polynomial> = g.iter().map(|t| build(&r, t)).collect();
        let a = Ideal::new(&r, gens.clone()).unwrap().reduced().unwrap();
        let mut mixed: Vec<Polynomial> = gens.iter().rev().cloned().collect();
        // Adding combinations of the generators leaves the ideal unchanged.
        let mut extra = Polynomial::zero(&r);
        for (hi, gi) in h.iter().zip(&gens) {
            extra = &extra + &(&build(&r, hi) * gi);
        }
        mixed.push(extra.clone());
        let b = Ideal::new(&r, mixed).unwrap().reduced().unwrap();
        prop_assert_eq!(a.generators(), b.generators());
        prop_assert!(a.contains(&extra).unwrap());
    }

    #[test]
    fn syzygies_are_relations(g in gens_strategy()) {
        let r = ring(3, gf());
        let gens: Vec<Polynomial> = g.iter().map(|t| build(&r, t)).collect();
        let gb = buchberger(&r, &gens).unwrap();
        let basis = gb.polynomials();
        let syz = syzygy_basis(&gb).unwrap();
        for s in syz.generators() {
            let mut acc = Polynomial::zero(&r);
            for (a, b) in s.components().iter().zip(&basis) {
                acc = &acc + &(a * b);
            }
            prop_assert!(acc.is_zero());
        }
    }
}

/// Exact degree-wise membership oracle for homogeneous ideals.
#[test]
fn membership_matches_linear_algebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let r = ring(3, gf());
    let one = FPModule::free(&r, 1);
    let g = oracle::graded(&one);
    for _ in 0..40 {
        let gens: Vec<Polynomial> = (0..rng.gen_range(1..=3))
            .map(|_| {
                let d = rng.gen_range(1..=2);
                random_form(&mut rng, &r, d, 3)
            })
            .filter(|p| !p.is_zero())
            .collect();
        let ideal = Ideal::new(&r, gens.clone()).unwrap();
        let vecs: Vec<FreeElement> = gens.iter().map(|p| FreeElement::new(&r, vec![p.clone()]).unwrap()).collect();
        for _ in 0..5 {
            let d = rng.gen_range(2..=4);
            let mut f = random_form(&mut rng, &r, d, 2);
            if rng.gen_bool(0.5) && !gens.is_empty() {
                let i = rng.gen_range(0..gens.len());
                let dg = gens[i].total_degree().unwrap();
                if dg <= d {
                    let h = random_form(&mut rng, &r, d - dg, 3);
                    f = &(&h * &gens[i]) + &f.pow(0).scale(&r.field().zero());
                }
            }
            let v = FreeElement::new(&r, vec![f.clone()]).unwrap();
            assert_eq!(ideal.contains(&f).unwrap(), g.contains(&vecs, &v), "{f} in {ideal}");
        }
    }
}

#[test]
fn implicitization() {
    let r = PolyRing::new(&["t", "x", "y"], Field::Rational, TermOrder::Grevlex).unwrap();
    let i = Ideal::parse(&r, &["x - t^2", "y - t^3"]).unwrap();
    let e = elimination(&i, &[0]).unwrap();
    assert_eq!(e.generators().len(), 1);
    let g = &e.generators()[0];
    assert!(Ideal::parse(&r, &["x^3 - y^2"]).unwrap().contains(g).unwrap());
    assert!(e.contains(&poly(&r, "y^2 - x^3")).unwrap());
}

#[test]
fn intersection_colon_saturation() {
    let r = ring(3, Field::Rational);
    let a = Ideal::parse(&r, &["x"]).unwrap();
    let b = Ideal::parse(&r, &["y"]).unwrap();
    assert!(ideal_intersection(&a, &b).unwrap().equals(&Ideal::parse(&r, &["x*y"]).unwrap()).unwrap());

    let i = Ideal::parse(&r, &["y*(x-1)", "y*z"]).unwrap();
    let c = colon_ideal(&i, &poly(&r, "z")).unwrap();
    assert!(c.equals(&Ideal::parse(&r, &["y"]).unwrap()).unwrap());
    let c = colon_ideal(&i, &poly(&r, "y")).unwrap();
    assert!(c.equals(&Ideal::parse(&r, &["x - 1", "z"]).unwrap()).unwrap());
    assert_eq!(colon_ideal(&i, &Polynomial::zero(&r)), Err(Error::ZeroElement));

    let j = Ideal::parse(&r, &["x^2*y", "x^3"]).unwrap();
    assert!(saturation(&j, &poly(&r, "x")).unwrap().is_unit().unwrap());
    let k = Ideal::parse(&r, &["x*y", "x*z"]).unwrap();
    assert!(saturation(&k, &poly(&r, "y")).unwrap().equals(&Ideal::parse(&r, &["x"]).unwrap()).unwrap());
}

#[test]
fn radical_membership_examples() {
    let r = ring(2, gf());
    let g = Ideal::parse(&r, &["x + y", "x*y"]).unwrap();
    assert!(radical_membership(&poly(&r, "x"), &g).unwrap());
    assert!(radical_membership(&poly(&r, "y"), &g).unwrap());
    assert!(!g.contains(&poly(&r, "x")).unwrap());
    assert!(!radical_membership(&poly(&r, "x + 1"), &g).unwrap());
}

#[test]
fn degree_cap_aborts() {
    let r = ring(3, Field::Rational).with_degree_cap(3);
    let gens = polys(&r, &["x^3 - y*z^2", "y^3 - x^2*z", "z^3 - x*y^2"]);
    match buchberger(&r, &gens) {
        Err(Error::DegreeCap { cap: 3, .. }) => {}
        other => panic!("expected a degree-cap error, got {other:?}"),
    }
}

#[test]
fn dimension_of_ideals() {
    let r = ring(3, gf());
    assert_eq!(Ideal::parse(&r, &["x*y", "x*z"]).unwrap().dimension().unwrap(), 2);
    assert_eq!(Ideal::parse(&r, &["x", "y", "z"]).unwrap().dimension().unwrap(), 0);
    assert_eq!(Ideal::unit(&r).dimension().unwrap(), -1);
    assert_eq!(Ideal::zero(&r).dimension().unwrap(), 3);
    assert_eq!(Ideal::zero(&r).to_string(), "(0)");
}
