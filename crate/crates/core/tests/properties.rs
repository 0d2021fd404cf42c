use desops::imaging::{decode_png, encode_png, region_pixels, render_mask, RegionSpec};
use desops::nerve::{convex_hull_2d, cross};
use desops::oracle::{oracle_descriptive_op, OpKind};
use desops::{
    descriptive_intersection, descriptive_union, is_digitally_convex, Description, ElementSet,
    Entry, Glossa, LatticeSet, Point, Variant,
};
use proptest::prelude::*;

fn glossa_and_sets() -> impl Strategy<Value = (Glossa, ElementSet, ElementSet)> {
    (1usize..=2, 1usize..=24).prop_flat_map(|(dim, len)| {
        let descs = prop::collection::vec(
            prop::collection::vec(prop::sample::select(vec![0.0, 0.5, 1.0, 3.0]), dim),
            len,
        );
        let masks = (
            prop::collection::vec(any::<bool>(), len),
            prop::collection::vec(any::<bool>(), len),
        );
        (descs, masks).prop_map(move |(descs, (ma, mb))| {
            let entries = descs
                .into_iter()
                .enumerate()
                .map(|(i, d)| Entry::new(format!("e{i}"), d))
                .collect();
            let g = Glossa::new(dim, Description::zeros(dim), entries).unwrap();
            let pick = |m: &[bool]| -> ElementSet {
                m.iter()
                    .enumerate()
                    .filter(|(_, &on)| on)
                    .map(|(i, _)| format!("e{i}"))
                    .collect()
            };
            (g, pick(&ma), pick(&mb))
        })
    })
}

fn eta() -> impl Strategy<Value = f64> {
    prop::sample::select(vec![0.0, 0.25, 0.5, 1.0, 2.5])
}

proptest! {
    #[test]
    fn glossa_json_round_trips((g, a, _) in glossa_and_sets()) {
        let back: Glossa = serde_json::from_str(&serde_json::to_string(&g).unwrap()).unwrap();
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), serde_json::to_string(&g).unwrap());
        let set: ElementSet = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
        prop_assert_eq!(set, a);
    }

    #[test]
    fn intersection_matches_oracle((g, a, b) in glossa_and_sets(), eta in eta()) {
        let fast = descriptive_intersection(&g, &a, &b, eta).unwrap();
        let slow = oracle_descriptive_op(&g, &a, &b, &OpKind::Intersection { eta }).unwrap();
        prop_assert_eq!(fast, slow.elements);
    }

    #[test]
    fn unions_match_oracle_and_stay_in_ambient((g, a, b) in glossa_and_sets(), eta in eta(), t in prop::sample::select(vec![0.0, 1.0, 3.0])) {
        let targets = vec![Description::from(vec![t; g.dim()])];
        for v in Variant::ALL {
            let cfg = v.config(&targets, eta);
            let fast = descriptive_union(&g, &a, &b, &cfg).unwrap();
            let slow = oracle_descriptive_op(&g, &a, &b, &OpKind::Union(cfg)).unwrap();
            prop_assert_eq!(&fast, &slow);
            prop_assert!(fast.elements.is_subset(&a.union(&b)));
        }
    }

    #[test]
    fn hull_vertices_are_extreme(points in prop::collection::btree_set((-6i64..6, -6i64..6), 1..20)) {
        let set: LatticeSet = points.iter().copied().collect();
        let hull = convex_hull_2d(&set).unwrap();
        prop_assert!(hull.iter().all(|p| set.contains(*p)));
        if hull.len() >= 3 {
            for i in 0..hull.len() {
                let (o, a) = (hull[i], hull[(i + 1) % hull.len()]);
                prop_assert!(set.iter().all(|q| cross(o, a, q) >= 0));
            }
        }
    }

    #[test]
    fn rectangles_are_convex_and_holes_are_not(x0 in -5i64..5, y0 in -5i64..5, w in 1i64..6, h in 1i64..6) {
        let rect: LatticeSet = (y0..y0 + h).flat_map(|y| (x0..x0 + w).map(move |x| Point::new(x, y))).collect();
        prop_assert!(is_digitally_convex(&rect));
        if w >= 3 && h >= 3 {
            let mut holed = rect.clone();
            holed.points.remove(&Point::new(x0 + 1, y0 + 1));
            prop_assert!(!is_digitally_convex(&holed));
        }
    }

    #[test]
    fn polygon_region_matches_pixel_scan(
        verts in prop::collection::vec((-3.0f64..20.0, -3.0f64..20.0), 3..7),
        (w, h) in (1u32..16, 1u32..16),
    ) {
        let spec = RegionSpec::Polygon { vertices: verts.iter().map(|&(x, y)| [x, y]).collect() };
        let fast = region_pixels(w, h, &spec);
        let scan: Vec<usize> = (0..h)
            .flat_map(|r| (0..w).map(move |c| (r, c)))
            .filter(|&(r, c)| spec.contains(c as f64, r as f64))
            .map(|(r, c)| (r * w + c) as usize)
            .collect();
        prop_assert_eq!(fast, scan);
    }

    #[test]
    fn masks_round_trip_through_png((w, h) in (1u32..40, 1u32..40), seed in any::<u64>()) {
        let selected: Vec<usize> = (0..(w * h) as usize).filter(|i| (seed >> (i % 64)) & 1 == 1).collect();
        let mask = render_mask(w, h, &selected);
        prop_assert_eq!(decode_png(&encode_png(&mask).unwrap()).unwrap(), mask);
    }
}
