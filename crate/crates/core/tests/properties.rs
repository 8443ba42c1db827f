use mcmtop::arith::{int, Monomial, PolyRing, Polynomial};
use mcmtop::groebner::GroebnerBasis;
use mcmtop::ideals::Ideal;
use mcmtop::spaces::{FiniteAlexandrovSpace, PointSet};
use proptest::prelude::*;

fn ring() -> PolyRing {
    PolyRing::degrevlex(&["x", "y", "z"]).unwrap()
}

fn term() -> impl Strategy<Value = (Vec<u32>, i64)> {
    (prop::collection::vec(0u32..4, 3), -5i64..=5)
}

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(term(), 0..5).prop_map(|ts| {
        let r = ring();
        Polynomial::from_terms(&r, ts.into_iter().map(|(e, c)| (Monomial::from_exponents(&e), int(c))))
    })
}

fn monomial_ideal() -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0u32..4, 2), 1..4)
}

fn space_from(ideals: Vec<Vec<Vec<u32>>>) -> FiniteAlexandrovSpace {
    let r = PolyRing::degrevlex(&["x", "y"]).unwrap();
    let ideals: Vec<Ideal> = ideals
        .into_iter()
        .map(|gens| {
            let gens = gens.iter().map(|e| Polynomial::monomial(&r, Monomial::from_exponents(e), int(1))).collect();
            Ideal::new(&r, gens).unwrap()
        })
        .collect();
    let labels = (0..ideals.len()).map(|i| format!("p{i}")).collect();
    FiniteAlexandrovSpace::from_ideals(labels, ideals).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert!((a.clone() - a.clone()).is_zero());
        prop_assert_eq!(a.clone() * ring().one(), a);
    }

    #[test]
    fn print_parse_round_trip(a in poly()) {
        let r = ring();
        prop_assert_eq!(r.parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn division_contract(p in poly(), divs in prop::collection::vec(poly(), 1..4)) {
        let divs: Vec<Polynomial> = divs.into_iter().filter(|d| !d.is_zero()).collect();
        prop_assume!(!divs.is_empty());
        let (q, r) = p.divide_by(&divs).unwrap();
        let mut back = r.clone();
        for (qi, gi) in q.iter().zip(&divs) {
            back = back + qi.clone() * gi.clone();
        }
        prop_assert_eq!(back, p);
        for (m, _) in r.terms() {
            prop_assert!(divs.iter().all(|g| !g.leading_monomial().unwrap().divides(m)));
        }
    }

    #[test]
    fn basis_independent_of_generator_order(gens in prop::collection::vec(poly(), 1..4), rot in 0usize..4) {
        let r = ring();
        let gb = GroebnerBasis::new(&r, &gens).unwrap();
        let mut other = gens.clone();
        let k = rot % other.len();
        other.rotate_left(k);
        other.reverse();
        prop_assert_eq!(&GroebnerBasis::new(&r, &other).unwrap(), &gb);
        for g in &gens {
            prop_assert!(gb.contains(g).unwrap());
        }
    }

    #[test]
    fn closure_is_kuratowski(ideals in prop::collection::vec(monomial_ideal(), 1..7), a in any::<u64>(), b in any::<u64>()) {
        let s = space_from(ideals);
        let mask = s.full_set().bits();
        let (a, b) = (PointSet::from_bits(a & mask), PointSet::from_bits(b & mask));
        let cl = |u: PointSet| s.closure_of(u).unwrap();
        prop_assert_eq!(cl(PointSet::EMPTY), PointSet::EMPTY);
        prop_assert!(a.is_subset(cl(a)));
        prop_assert_eq!(cl(cl(a)), cl(a));
        prop_assert_eq!(cl(a.union(b)), cl(a).union(cl(b)));
    }

    #[test]
    fn cl_n_grows_with_n(ideals in prop::collection::vec(monomial_ideal(), 1..7)) {
        let s = space_from(ideals);
        for n in 1..4 {
            let lo = s.cl_n_all(n).unwrap();
            let hi = s.cl_n_all(n + 1).unwrap();
            for (l, h) in lo.iter().zip(&hi) {
                prop_assert!(l.is_subset(*h));
            }
        }
        prop_assert_eq!(s.cl_n_all(1).unwrap(), (0..s.len()).map(|i| s.point_closure(i).unwrap()).collect::<Vec<_>>());
    }
}
