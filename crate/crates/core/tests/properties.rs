mod common;

use std::sync::Arc;

use dtcalc::dcritical::{embedding_quadform, lambda_map};
use dtcalc::laurent::HLaurent;
use dtcalc::matrix::Matrix;
use dtcalc::monodromy::{eigen_decompose, in_section, lattice_reduce, rh_inverse, Block, MonodromyData};
use dtcalc::parse::parse_poly;
use dtcalc::poly::{names, Poly};
use dtcalc::scalar::{rat, Scalar};
use dtcalc::symplectic::{chain_map, maslov_form, LagrangianSubspace, SymplecticSpace};
use dtcalc::torsor::{torsor_sum, QuadForm, TorsorElement};
use dtcalc::vanishing::{milnor_algebra, spectrum, thom_sebastiani_poly};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=9, -20i64..=20, 1i64..=9)
        .prop_map(|(a, b, c, d)| Scalar::from_ratio(a, b) + Scalar::from_ratio(c, d) * Scalar::i())
}

fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |s| !s.is_zero())
}

fn symmetric(n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(scalar(), n * n).prop_map(move |v| {
        let m = Matrix::from_fn(n, n, |i, j| v[i * n + j].clone());
        m.add(&m.transpose()).unwrap()
    })
}

fn monodromy() -> impl Strategy<Value = MonodromyData> {
    proptest::collection::vec((1i64..=12, 0i64..12, proptest::collection::vec(1usize..=4, 1..=2)), 1..=3).prop_map(|bs| {
        MonodromyData::new(bs.into_iter().map(|(d, a, jordan)| Block { exponent: rat(-(a % d), d), jordan }).collect())
            .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_field_laws(a in scalar(), b in scalar(), c in nonzero_scalar()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&c * &c.inv().unwrap(), Scalar::one());
        prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a);
    }

    #[test]
    fn poly_render_parse_round_trip(coeffs in proptest::collection::vec((scalar(), 0u32..4, 0u32..4), 0..6)) {
        let vars = names(&["x", "y"]);
        let mut p = Poly::zero(&vars);
        for (c, a, b) in coeffs {
            p = p.add(&Poly::var(&vars, 0).pow(a).mul(&Poly::var(&vars, 1).pow(b)).scale(&c));
        }
        prop_assert_eq!(parse_poly(&p.render(), Some(&vars)).unwrap(), p);
    }

    #[test]
    fn maslov_form_of_graph(a in symmetric(3)) {
        let space = Arc::new(SymplecticSpace::standard(3));
        let l = LagrangianSubspace::base(space.clone()).unwrap();
        let g = LagrangianSubspace::graph(space.clone(), &a).unwrap();
        let ls = LagrangianSubspace::fiber(space).unwrap();
        match maslov_form(&l, &g, &ls) {
            Ok(q) => prop_assert_eq!(q.matrix(), &a.neg()),
            Err(e) => prop_assert!(a.det().unwrap().is_zero(), "unexpected {}", e),
        }
    }

    #[test]
    fn maslov_form_is_symmetric(seed in any::<u64>(), n in 1usize..=3) {
        let mut r = common::rng(seed);
        let space = Arc::new(SymplecticSpace::standard(n));
        let chain = common::random_transverse_chain(&mut r, &space, 3);
        if chain[2].is_transverse_to(&chain[0]) {
            let q = maslov_form(&chain[0], &chain[1], &chain[2]).unwrap();
            prop_assert!(q.matrix().is_symmetric());
        }
    }

    #[test]
    fn chain_map_of_pair_is_pairing(seed in any::<u64>(), n in 1usize..=3) {
        let mut r = common::rng(seed);
        let space = Arc::new(SymplecticSpace::standard(n));
        let chain = common::random_transverse_chain(&mut r, &space, 2);
        let c = chain_map(&chain).unwrap();
        prop_assert!(c.dual_flag());
        prop_assert_eq!(c.matrix(), &space.pairing_matrix(chain[0].basis(), chain[1].basis()).transpose());
    }

    #[test]
    fn torsor_flip_and_sum(t in nonzero_scalar(), u in nonzero_scalar()) {
        let a = TorsorElement::base_point(t.clone(), "a");
        prop_assert_eq!(a.flip().flip(), a.clone());
        prop_assert_eq!(a.flip().sign_relative(&a), Some(-1));
        let b = TorsorElement::base_point(u.clone(), "b");
        let s = torsor_sum(&a, &b);
        prop_assert_eq!(s.target(), &(&t * &u));
        prop_assert_eq!(torsor_sum(&a.flip(), &b).sign_relative(&s), Some(-1));
    }

    #[test]
    fn lambda_map_equivariant(s in nonzero_scalar(), u in nonzero_scalar(), w in nonzero_scalar()) {
        let (s2, u2) = (&s * &s, &u * &u);
        let se = TorsorElement::from_scalar(s2.clone(), s, "s").unwrap();
        let ue = TorsorElement::from_scalar(u2.clone(), u, "u").unwrap();
        let out = lambda_map(&se, &ue, &w).unwrap();
        prop_assert_eq!(out.target(), &(&u2 * &w).checked_div(&s2).unwrap());
        prop_assert_eq!(out.rep().square(), out.target().clone());
        prop_assert_eq!(lambda_map(&se.flip(), &ue, &w).unwrap().sign_relative(&out), Some(-1));
        prop_assert_eq!(lambda_map(&se, &ue.flip(), &w).unwrap().sign_relative(&out), Some(-1));
    }

    #[test]
    fn rh_round_trip(m in monodromy()) {
        prop_assert!(m.exponents().iter().all(in_section));
        prop_assert_eq!(lattice_reduce(&rh_inverse(&m)).unwrap(), m);
    }

    #[test]
    fn monodromy_algebra(a in monodromy(), b in monodromy()) {
        prop_assert_eq!(a.tensor(&b).dim(), a.dim() * b.dim());
        prop_assert_eq!(a.tensor(&b), b.tensor(&a));
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
        prop_assert_eq!(a.twist_sign(2), a.clone());
        prop_assert_eq!(a.twist_sign(1).twist_sign(1), a);
    }

    #[test]
    fn permutations_decompose(perm in Just((0..5usize).collect::<Vec<_>>()).prop_shuffle(), seed in any::<u64>()) {
        let n = perm.len();
        let p = Matrix::from_fn(n, n, |i, j| if perm[j] == i { Scalar::one() } else { Scalar::zero() });
        let mut r = common::rng(seed);
        let g = common::random_invertible(&mut r, n);
        let t = g.try_mul(&p).unwrap().try_mul(&g.inverse().unwrap()).unwrap();
        let d = eigen_decompose(&t, 64).unwrap();
        prop_assert_eq!(d.reconstruct().unwrap(), t);
        prop_assert!(d.data.is_semisimple());
        prop_assert_eq!(d.data.dim(), n);
    }

    #[test]
    fn laurent_product_commutes(a in proptest::collection::vec(scalar(), 1..5), b in proptest::collection::vec(scalar(), 1..5), la in -3i32..3, lb in -3i32..3) {
        let x = HLaurent::exact(la, a);
        let y = HLaurent::exact(lb, b);
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        let z = x.mul(&y).sub(&y.mul(&x));
        prop_assert!(z.is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn brieskorn_spectrum(a in 2u32..7, b in 2u32..7) {
        let f = parse_poly(&format!("x^{a} + y^{b}"), None).unwrap();
        let s = spectrum(&f).unwrap();
        prop_assert_eq!(s.len(), ((a - 1) * (b - 1)) as usize);
        prop_assert!(s.is_symmetric());
        prop_assert_eq!(milnor_algebra(&f).unwrap().mu(), s.len());
    }

    #[test]
    fn thom_sebastiani_brieskorn(a in 2u32..6, b in 2u32..6) {
        let f = parse_poly(&format!("x^{a}"), None).unwrap();
        let g = parse_poly(&format!("x^{b}"), None).unwrap();
        let h = thom_sebastiani_poly(&f, &g);
        prop_assert_eq!(spectrum(&h).unwrap(), spectrum(&f).unwrap().minkowski(&spectrum(&g).unwrap()));
    }

    #[test]
    fn split_embedding_recovers_form(k in 2u32..6, q in symmetric(2)) {
        prop_assume!(!q.det().unwrap().is_zero());
        let half = QuadForm::new(q.scale(&Scalar::from_ratio(1, 2))).unwrap();
        let h = parse_poly(&format!("x^{k}"), Some(&names(&["x", "y", "z"]))).unwrap()
            .add(&half.to_potential(&names(&["y", "z"])).unwrap());
        let e = embedding_quadform(&h, &names(&["x"]), &names(&["y", "z"])).unwrap();
        prop_assert_eq!(e.q_xi.matrix(), &q);
        prop_assert_eq!(e.f, parse_poly(&format!("x^{k}"), None).unwrap());
    }
}
