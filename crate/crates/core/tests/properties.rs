use nakayama::bijections::{
    canonical_rotation, dyck_to_bounded_product, dyck_to_linear, dyck_to_sincere, linear_to_dyck,
    bounded_product_to_dyck, sincere_to_dyck,
};
use nakayama::cartan::{cartan_determinant, magnitude, magnitude_via_ext};
use nakayama::trees::{dyck_to_tree, tau, tau_inverse, tree_to_dyck};
use nakayama::{DyckPath, HomDim, KupischSeries, Rational, Step};
use proptest::prelude::*;

/// Random Dyck path: a walk that goes up on heads while up steps remain,
/// and is forced up at height zero.
fn dyck_path(max_semilength: usize) -> impl Strategy<Value = DyckPath> {
    (0..=max_semilength)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(any::<bool>(), 2 * n)))
        .prop_map(|(n, coins)| {
            let mut steps = Vec::with_capacity(2 * n);
            let (mut ups, mut height) = (0, 0);
            for coin in coins {
                let up = ups < n && (height == 0 || coin);
                if up {
                    ups += 1;
                    height += 1;
                    steps.push(Step::Up);
                } else {
                    height -= 1;
                    steps.push(Step::Down);
                }
            }
            DyckPath::new(steps).expect("balanced by construction")
        })
}

/// Random cyclic series with `n` simples and entries in `2..=2n+2`.
fn cyclic_series(max_n: usize) -> impl Strategy<Value = KupischSeries> {
    (1..=max_n)
        .prop_flat_map(|n| prop::collection::vec(2..=(2 * n + 2), n))
        .prop_filter_map("not a Kupisch series", |v| KupischSeries::cyclic(v).ok())
}

fn linear_series(max_n: usize) -> impl Strategy<Value = KupischSeries> {
    dyck_path(max_n).prop_map(|d| dyck_to_linear(&d))
}

proptest! {
    #[test]
    fn area_sequence_round_trips(d in dyck_path(14)) {
        let area = d.area_sequence();
        prop_assert_eq!(DyckPath::from_area(&area).unwrap(), d.clone());
        let word = d.to_string();
        prop_assert_eq!(word.parse::<DyckPath>().unwrap(), d);
    }

    #[test]
    fn tree_codec_round_trips(d in dyck_path(14)) {
        let t = dyck_to_tree(&d);
        prop_assert_eq!(t.vertex_count(), d.semilength() + 1);
        prop_assert_eq!(t.depth(), d.height());
        prop_assert_eq!(tree_to_dyck(&t), d.clone());
        let labeled = t.natural_labeling();
        prop_assert!(labeled.is_naturally_labeled());
        prop_assert_eq!(labeled.forget_labels().unwrap(), t.clone());
        prop_assert_eq!(t.to_string().parse::<nakayama::OrderedTree>().unwrap(), t);
    }

    #[test]
    fn prime_factors_concatenate_back(d in dyck_path(14)) {
        let factors = d.prime_factors();
        prop_assert!(factors.iter().all(DyckPath::is_prime));
        prop_assert_eq!(DyckPath::concat(&factors), d);
    }

    #[test]
    fn bounce_path_stays_below(d in dyck_path(14)) {
        let b = d.bounce_path();
        prop_assert_eq!(b.semilength(), d.semilength());
        prop_assert!(b.heights().iter().zip(d.heights()).all(|(x, y)| *x <= y));
        prop_assert_eq!(d.bounce().points.len(), d.bounce_count());
    }

    #[test]
    fn linear_algebras_round_trip_with_small_gldim(d in dyck_path(12)) {
        let a = dyck_to_linear(&d);
        prop_assert!(a.is_connected());
        prop_assert_eq!(linear_to_dyck(&a).unwrap(), d.clone());
        // Every connected linear algebra has finite global dimension below
        // its number of simples.
        let g = a.global_dimension().finite().unwrap();
        prop_assert!(g < a.len().max(1));
    }

    #[test]
    fn sincere_bijection(d in dyck_path(10).prop_filter("nonempty", |d| d.semilength() > 0)) {
        let a = dyck_to_sincere(&d).unwrap();
        prop_assert!(a.is_sincere());
        prop_assert_eq!(a.global_dimension(), HomDim::Finite(2 * d.bounce_count()));
        prop_assert_eq!(sincere_to_dyck(&a).unwrap(), d);
    }

    #[test]
    fn bounded_bijection_round_trips(d in dyck_path(11), g in 0usize..7) {
        match dyck_to_bounded_product(&d, g) {
            Ok(a) => {
                prop_assert!(d.height() <= g + 1);
                prop_assert!(a.global_dimension().finite().unwrap() <= g);
                prop_assert_eq!(a.len(), d.semilength());
                prop_assert_eq!(bounded_product_to_dyck(&a, g).unwrap(), d);
            }
            Err(_) => prop_assert!(d.semilength() == 0 || d.height() > g + 1),
        }
    }

    #[test]
    fn path_decomposition_round_trips(d in dyck_path(12), g in 0usize..7) {
        prop_assume!(d.height() <= g + 1);
        let parts = d.decompose_bounded(g).unwrap();
        prop_assert_eq!(parts.left.len(), parts.m());
        let total: usize = parts.left.iter().chain(&parts.right).map(DyckPath::semilength).sum();
        prop_assert_eq!(total + parts.middle.semilength() + parts.m(), d.semilength());
        prop_assert_eq!(DyckPath::recompose_bounded(&parts, g).unwrap(), d);
    }

    #[test]
    fn tau_round_trips_and_measures_pdim(a in linear_series(12)) {
        let t = tau(&a).unwrap();
        prop_assert_eq!(tau_inverse(&t).unwrap(), a.clone());
        for (i, pd) in a.simple_projective_dimensions().into_iter().enumerate() {
            prop_assert_eq!(pd, HomDim::Finite(t.pdim_via_tree(i).unwrap()));
        }
    }

    #[test]
    fn opposite_is_an_involution(a in cyclic_series(7)) {
        let op = a.opposite();
        prop_assert_eq!(op.opposite(), a.clone());
        prop_assert_eq!(op.dimension(), a.dimension());
        prop_assert_eq!(op.global_dimension(), a.global_dimension());
    }

    #[test]
    fn syzygy_dimensions_add_up(a in cyclic_series(7)) {
        for m in a.indecomposables() {
            let omega = a.syzygy(m).unwrap();
            let cover = a.projective(m.vertex).unwrap();
            prop_assert_eq!(omega.length + m.length, cover.length);
        }
    }

    #[test]
    fn rotation_preserves_invariants(a in cyclic_series(7), shift in 0usize..7) {
        let r = a.rotated(shift % a.len()).unwrap();
        prop_assert_eq!(r.global_dimension(), a.global_dimension());
        prop_assert_eq!(cartan_determinant(&r).unwrap(), cartan_determinant(&a).unwrap());
        prop_assert_eq!(
            canonical_rotation(&r).unwrap().representative,
            canonical_rotation(&a).unwrap().representative
        );
    }

    #[test]
    fn finite_gldim_has_determinant_one_and_ext_magnitude(a in cyclic_series(6)) {
        if a.global_dimension().is_finite() {
            prop_assert_eq!(cartan_determinant(&a).unwrap(), 1);
            let m = magnitude(&a).unwrap();
            prop_assert_eq!(m, Rational::from_integer(magnitude_via_ext(&a).unwrap() as i128));
            prop_assert!(a.loewy_length() < 2 * a.len());
        }
    }

    #[test]
    fn series_text_round_trips(a in cyclic_series(8)) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<KupischSeries>().unwrap(), a);
    }
}
