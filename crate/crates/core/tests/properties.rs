use deutsch_core::path::{
    compose, decompose, parse_path, render_path, validate, Decomposition, DeutschPath, Mountain,
    Step,
};
use deutsch_core::series::{
    rational, series_div, series_mul, star_identity_holds, TruncatedSeries,
};
use deutsch_core::tree::{path_to_tree, tree_to_path, MarkedTree};
use num_rational::BigRational;
use proptest::prelude::*;

const ORDER: usize = 16;

fn composition(max_parts: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1u32..=4, 1..=max_parts)
}

fn mountain() -> impl Strategy<Value = Mountain> {
    composition(3).prop_map(|parts| {
        let ups = parts.iter().sum();
        Mountain::new(ups, parts).unwrap()
    })
}

fn decomposition() -> impl Strategy<Value = Decomposition> {
    prop_oneof![
        Just(Decomposition::empty()),
        composition(3).prop_flat_map(|homerun| {
            let height: u32 = homerun.iter().sum();
            prop::collection::vec(prop::collection::vec(mountain(), 0..=2), height as usize)
                .prop_map(move |bundles| Decomposition {
                    height,
                    bundles,
                    homerun: homerun.clone(),
                })
        }),
    ]
}

fn step() -> impl Strategy<Value = Step> {
    prop_oneof![Just(Step::Up), (1u32..=1000).prop_map(|k| Step::down(k).unwrap())]
}

fn series(constant_zero: bool) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec((-9i64..=9, 1i64..=5), 1..=6).prop_map(move |pairs| {
        let coeffs: Vec<BigRational> = pairs
            .into_iter()
            .enumerate()
            .map(|(i, (n, d))| {
                if i == 0 && constant_zero {
                    rational(0)
                } else {
                    BigRational::new(n.into(), d.into())
                }
            })
            .collect();
        TruncatedSeries::from_coeffs(coeffs, ORDER)
    })
}

proptest! {
    #[test]
    fn render_then_parse(steps in prop::collection::vec(step(), 0..20)) {
        let path = DeutschPath::new(steps);
        let text = render_path(&path);
        prop_assert_eq!(parse_path(&text).unwrap(), path);
    }

    #[test]
    fn compose_then_decompose(dec in decomposition()) {
        prop_assert!(dec.check().is_ok());
        let path = compose(&dec);
        prop_assert_eq!(path.len(), dec.len());
        prop_assert!(path.is_nondecreasing());
        prop_assert_eq!(decompose(&path).unwrap(), dec);
    }

    #[test]
    fn composed_paths_survive_the_tree(dec in decomposition()) {
        let path = compose(&dec);
        let tree = path_to_tree(&path).unwrap();
        let stats = tree.stats();
        prop_assert_eq!(stats.edge_count + stats.double_count, path.len());
        let reparsed = MarkedTree::from_json(&tree.to_json()).unwrap();
        prop_assert_eq!(&reparsed, &tree);
        prop_assert_eq!(tree_to_path(&reparsed).unwrap(), path);
    }

    #[test]
    fn validation_agrees_with_heights(steps in prop::collection::vec(
        prop_oneof![3 => Just(Step::Up), 1 => (1u32..=3).prop_map(|k| Step::down(k).unwrap())],
        0..14,
    )) {
        let mut h = 0i64;
        let mut ok = true;
        for s in &steps {
            h += s.rise();
            ok &= h >= 0;
        }
        ok &= h == 0;
        prop_assert_eq!(validate(&DeutschPath::new(steps)).is_ok(), ok);
    }

    #[test]
    fn multiplication_is_commutative_and_associative(
        a in series(false), b in series(false), c in series(false)
    ) {
        prop_assert_eq!(series_mul(&a, &b), series_mul(&b, &a));
        prop_assert_eq!(
            series_mul(&series_mul(&a, &b), &c),
            series_mul(&a, &series_mul(&b, &c))
        );
    }

    #[test]
    fn division_undoes_multiplication(a in series(false), b in series(true)) {
        let b = &b + &TruncatedSeries::one(ORDER);
        let q = series_div(&series_mul(&a, &b), &b).unwrap();
        prop_assert_eq!(q, a);
    }

    #[test]
    fn star_of_a_sum(a in series(true), b in series(true)) {
        prop_assert!(star_identity_holds(&a, &b, ORDER).unwrap());
    }
}
