use degloci::cache::{cached_table, DiskCache};
use degloci::cells::{cell_histogram, chow_ranks_decomposition};
use degloci::chern::{
    dual_total_class, generic_total_class, poly_determinant, schur_delta, series_inverse, ChernPoly,
};
use degloci::degeneracy::{
    betti_degeneracy, betti_skew, fibration_betti, lefschetz_max_m_general, lefschetz_max_m_skew, AmbientData, Fiber,
};
use degloci::partitions::{
    count_box_partitions, enumerate_box_partitions, merge_doubled, split_doubled, BoxConstraint, Partition,
    StrictPartition,
};
use degloci::rings::{hilbert_function, PresentationKind};
use num_bigint::BigInt;
use proptest::prelude::*;

fn scaled_total_class(scales: &[i64]) -> Vec<ChernPoly> {
    let mut c = vec![ChernPoly::one()];
    for (i, &k) in scales.iter().enumerate() {
        c.push(ChernPoly::gen(i + 1).scale(&BigInt::from(k)));
    }
    c
}

fn strict_from_mask(mask: u32, r: u32) -> StrictPartition {
    StrictPartition::new((1..=r).rev().filter(|i| mask >> (i - 1) & 1 == 1).collect()).unwrap()
}

/// Even-only Betti numbers `1, b_2, ..., b_{2n}` mirrored to be palindromic.
fn even_ambient(dim: u32, seeds: &[u64]) -> AmbientData {
    let mut betti = vec![0u64; 2 * dim as usize + 1];
    for i in 0..=dim as usize {
        let s = if i == 0 { 1 } else { 1 + seeds[i.min(dim as usize - i) % seeds.len()] };
        betti[2 * i] = s;
    }
    for i in 0..=dim as usize {
        betti[2 * (dim as usize - i)] = betti[2 * i.min(dim as usize - i)];
    }
    AmbientData::new(dim, betti).unwrap()
}

fn as_ambient(dim: u32, t: &degloci::table::BettiTable) -> AmbientData {
    AmbientData::new(dim, t.ranks().to_vec()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn box_counts_are_conjugation_symmetric(q in 0u32..25, r in 0u32..7, l in 0usize..7) {
        let a = count_box_partitions(q, BoxConstraint::new(r, l));
        let b = count_box_partitions(q, BoxConstraint::new(l as u32, r as usize));
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a, count_box_partitions(q, BoxConstraint::new(r, l)));
    }

    #[test]
    fn enumeration_is_deterministic_and_conjugation_maps_boxes(q in 0u32..14, r in 1u32..5, l in 1usize..5) {
        let first = enumerate_box_partitions(q, BoxConstraint::new(r, l));
        prop_assert_eq!(&first, &enumerate_box_partitions(q, BoxConstraint::new(r, l)));
        let swapped = BoxConstraint::new(l as u32, r as usize);
        for p in &first {
            prop_assert!(swapped.contains(&p.conjugate()));
        }
    }

    #[test]
    fn doubling_split_merge_round_trip(r in 1u32..8, mask in 0u32..256, lambda in prop::collection::vec(1u32..8, 0..6)) {
        let mu = strict_from_mask(mask & ((1 << r) - 1), r);
        let lambda = Partition::from_unsorted(lambda.into_iter().map(|x| x.min(r)).collect());
        let nu = merge_doubled(&lambda, &mu);
        prop_assert_eq!(nu.weight(), mu.weight() + 2 * lambda.weight());
        prop_assert!(nu.largest() <= r);
        prop_assert_eq!(split_doubled(&nu), (mu, lambda));
    }

    #[test]
    fn series_inverse_is_an_involution(scales in prop::collection::vec(-3i64..=3, 1..5), cap in 1usize..7) {
        let c = scaled_total_class(&scales);
        let s = series_inverse(&c, cap).unwrap();
        let back = series_inverse(&s, cap).unwrap();
        for (j, b) in back.iter().enumerate() {
            let expected = c.get(j).cloned().unwrap_or_default();
            prop_assert_eq!(b, &expected);
            prop_assert!(b.is_zero() || b.homogeneous_weight() == Some(j as u32));
        }
    }

    #[test]
    fn one_row_schur_of_dual_inverse_is_complete_homogeneous(n in 1usize..5, j in 0u32..7) {
        // 1/c(S*) has components h_j; Δ_(j) reads off the j-th component.
        let h = series_inverse(&dual_total_class(&generic_total_class(n)), 8).unwrap();
        let lambda = if j == 0 { Partition::empty() } else { Partition::new(vec![j]).unwrap() };
        prop_assert_eq!(schur_delta(&lambda, &h, 1), h[j as usize].clone());
    }

    #[test]
    fn schur_delta_is_homogeneous(parts in prop::collection::vec(0u32..4, 1..4), n in 1usize..5) {
        let lambda = Partition::from_unsorted(parts);
        let size = lambda.len().max(1);
        let d = schur_delta(&lambda, &generic_total_class(n), size);
        prop_assert!(d.is_zero() || d.homogeneous_weight() == Some(lambda.weight()));
    }

    #[test]
    fn determinant_is_linear_in_each_row(
        entries in prop::collection::vec(-2i64..=2, 9),
        extra in prop::collection::vec(-2i64..=2, 3),
        row in 0usize..3,
    ) {
        let gens: Vec<ChernPoly> = (1..=3).map(ChernPoly::gen).collect();
        let entry = |k: i64, g: usize| gens[g].scale(&BigInt::from(k));
        let base: Vec<Vec<ChernPoly>> = (0..3).map(|i| (0..3).map(|j| entry(entries[3 * i + j], (i + j) % 3)).collect()).collect();
        let other: Vec<ChernPoly> = (0..3).map(|j| entry(extra[j], (row + j) % 3)).collect();
        let mut alt = base.clone();
        alt[row] = other.clone();
        let mut sum = base.clone();
        sum[row] = base[row].iter().zip(&other).map(|(a, b)| a + b).collect();
        prop_assert_eq!(poly_determinant(&sum), poly_determinant(&base) + poly_determinant(&alt));
    }

    #[test]
    fn grassmannian_hilbert_function_is_box_count(n in 1usize..7, d_seed in 0usize..7) {
        let d = 1 + d_seed % n;
        let h = hilbert_function(PresentationKind::Grassmannian { d, n }).unwrap();
        let counts: Vec<u64> = (0..=(d * (n - d)) as u32)
            .map(|q| count_box_partitions(q, BoxConstraint::new((n - d) as u32, d)).try_into().unwrap())
            .collect();
        prop_assert_eq!(h, counts);
    }

    #[test]
    fn histogram_equals_decomposition(n in 1u32..=10, r_seed in 0u32..6, d_seed in 0usize..10) {
        let r = r_seed % (n / 2 + 1);
        let d = 1 + d_seed % (n - r) as usize;
        let hist = cell_histogram(n, d, r).unwrap();
        let dec = chow_ranks_decomposition(n, d, r, hist.len() as u32 - 1).unwrap();
        prop_assert_eq!(dec.ranks(), hist.as_slice());
    }

    #[test]
    fn nondegenerate_ranks_are_palindromic(r in 1u32..=5, d_seed in 0usize..5) {
        let d = 1 + d_seed % r as usize;
        let hist = cell_histogram(2 * r, d, r).unwrap();
        let mut rev = hist.clone();
        rev.reverse();
        prop_assert_eq!(&hist, &rev);
        if d == r as usize {
            prop_assert_eq!(hist.iter().sum::<u64>(), 1 << r);
        }
    }

    #[test]
    fn ample_divisor_has_lefschetz_shape(dim in 2u32..14, seeds in prop::collection::vec(0u64..9, 1..5)) {
        let x = even_ambient(dim, &seeds);
        let t = betti_degeneracy(&x, 1, 1, 0).unwrap();
        prop_assert_eq!(t.valid_below, Some(dim - 1));
        for p in 0..dim - 1 {
            prop_assert_eq!(t.ranks()[p as usize], x.h(p as i64));
        }
    }

    #[test]
    fn line_bundle_zero_loci_agree(dim in 2u32..14) {
        // A section of a line bundle: D_0 for e = f = 1, A_0 for e = 2.
        let x = AmbientData::projective_space(dim);
        prop_assert_eq!(betti_degeneracy(&x, 1, 1, 0).unwrap(), betti_skew(&x, 2, 0).unwrap());
    }

    #[test]
    fn even_ambient_gives_even_outputs(
        dim in 1u32..16,
        seeds in prop::collection::vec(0u64..5, 1..4),
        e in 1u32..6,
        extra in 0u32..3,
        r_seed in 0u32..6,
    ) {
        let x = even_ambient(dim, &seeds);
        let tables = [
            betti_degeneracy(&x, e, e + extra, r_seed % e).unwrap(),
            betti_skew(&x, e + 1, r_seed % (e.div_ceil(2) + 1)).unwrap(),
            fibration_betti(&x, Fiber::Grassmann { d: 1 + r_seed % e, e: e + 1 }).unwrap(),
            fibration_betti(&x, Fiber::Lagrangian { r: e }).unwrap(),
        ];
        for t in &tables {
            prop_assert!(t.ranks().iter().skip(1).step_by(2).all(|&b| b == 0));
        }
    }

    #[test]
    fn fibration_towers_are_associative(n in 0u32..5, d1 in 1u32..3, e1 in 3u32..5, r in 1u32..4) {
        let x = AmbientData::projective_space(n);
        let f1 = Fiber::Grassmann { d: d1, e: e1 };
        let f2 = Fiber::Lagrangian { r };
        let one = fibration_betti(&x, f1).unwrap();
        let two = fibration_betti(&as_ambient(n + f1.dimension(), &one), f2).unwrap();
        let other = fibration_betti(&as_ambient(n + f2.dimension(), &fibration_betti(&x, f2).unwrap()), f1).unwrap();
        prop_assert_eq!(&two, &other);
        // Direct: X times the product of the two fibres.
        let fibres = fibration_betti(&as_ambient(f1.dimension(), &fibration_betti(&AmbientData::point(), f1).unwrap()), f2).unwrap();
        let total = two.ranks().len();
        for p in 0..total {
            let direct: u64 = (0..=p).map(|i| x.h(i as i64) * fibres.ranks().get(p - i).copied().unwrap_or(0)).sum();
            prop_assert_eq!(two.ranks()[p], direct);
        }
    }

    #[test]
    fn lefschetz_range_is_monotone_in_dimension(dim in 0u32..40, e in 1u32..8, extra in 0u32..4, r_seed in 0u32..8) {
        let (f, r) = (e + extra, r_seed % e);
        let key = |m: Option<u32>| m.map_or(-1, i64::from);
        prop_assert!(key(lefschetz_max_m_general(dim, e, f, r)) <= key(lefschetz_max_m_general(dim + 1, e, f, r)));
        let rs = r_seed % (e / 2 + 1);
        prop_assert!(key(lefschetz_max_m_skew(dim, e, rs)) <= key(lefschetz_max_m_skew(dim + 1, e, rs)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn cache_hit_equals_miss(grass in any::<bool>(), a in 1usize..5, b in 0usize..3, deg in 0u32..20) {
        let kind = if grass {
            PresentationKind::Grassmannian { d: a, n: a + b + 1 }
        } else {
            PresentationKind::Isotropic { d: a.min(a + b - 1).max(1), r: a + b }
        };
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskCache::new(dir.path());
        let miss = cached_table(Some(&cache), kind, deg).unwrap();
        let hit = cached_table(Some(&cache), kind, deg).unwrap();
        prop_assert_eq!(&miss, &hit);
        prop_assert_eq!(miss, cached_table(None, kind, deg).unwrap());
    }
}
