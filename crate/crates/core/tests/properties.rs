use modcat_core::cat_d::CategoryD;
use modcat_core::chartable::character_table;
use modcat_core::matched_pair::CosetFactorization;
use modcat_core::modular::build_modular_data;
use modcat_core::{Cyclotomic, FiniteGroup};
use num_rational::BigRational;
use proptest::prelude::*;

const N: u32 = 12;

fn cyc() -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec((-4i64..5, 1i64..4), 4).prop_map(|c| {
        let p = c.into_iter().map(|(a, b)| BigRational::new(a.into(), b.into())).collect();
        Cyclotomic::from_poly(N, p)
    })
}

fn perm(deg: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..deg).collect::<Vec<_>>()).prop_shuffle()
}

fn small_group() -> impl Strategy<Value = FiniteGroup> {
    (3usize..5)
        .prop_flat_map(|d| prop::collection::vec(perm(d), 1..3).prop_map(move |g| (d, g)))
        .prop_map(|(d, g)| FiniteGroup::from_permutations(d, &g).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in cyc(), b in cyc(), c in cyc()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
        prop_assert_eq!(Cyclotomic::parse(&a.render(), N).unwrap(), a);
    }

    #[test]
    fn character_tables_are_consistent(g in small_group()) {
        let t = character_table(&g).unwrap();
        prop_assert!(t.check_orthogonality());
        let s: usize = t.degrees.iter().map(|d| d * d).sum();
        prop_assert_eq!(s, g.order());
        prop_assert_eq!(t.rows.len(), g.conjugacy_classes().len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn double_of_random_factorization(g in small_group(), pick in prop::collection::vec(any::<prop::sample::Index>(), 0..2)) {
        let gens: Vec<usize> = pick.iter().map(|i| i.index(g.order())).collect();
        let h = g.generate(&gens);
        let f = CosetFactorization::build_auto(&g, &h);
        prop_assume!(f.is_ok());
        let f = f.unwrap();
        prop_assert!(f.check_invariants().iter().all(|c| c.holds));
        let cat = CategoryD::new(&f).unwrap();
        let total: usize = (0..cat.len()).map(|k| cat.dim(k) * cat.dim(k)).sum();
        prop_assert_eq!(total, g.order() * g.order());
        let md = build_modular_data(&cat);
        prop_assert!(md.all_hold(), "{:?}", md.report.iter().filter(|r| r.holds == Some(false)).map(|r| &r.name).collect::<Vec<_>>());
    }
}
