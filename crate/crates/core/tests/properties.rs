mod common;

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::One;
use proptest::prelude::*;

use common::{big, naive_counts};
use residue_lab::exact;
use residue_lab::scanner::{self, Check, ScanConfig, ScanReport};
use residue_lab::trajectory::{self, DEFAULT_STEP_BUDGET};
use residue_lab::Verdict;

fn all_checks() -> BTreeSet<Check> {
    Check::ALL.into_iter().collect()
}

fn biguint_from_limbs(limbs: &[u32]) -> BigUint {
    BigUint::new(limbs.to_vec()).max(BigUint::one())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn counts_match_naive(limbs in prop::collection::vec(any::<u32>(), 1..5)) {
        let n = biguint_from_limbs(&limbs);
        let c = trajectory::trajectory_stats(&n, DEFAULT_STEP_BUDGET).unwrap();
        prop_assert_eq!((c.total, c.odd, c.even), naive_counts(&n));
    }

    #[test]
    fn scale_invariance(n in 1u64..1_000_000_000, k in 0u32..80) {
        let base = exact::residue_of(&big(n), DEFAULT_STEP_BUDGET).unwrap();
        let scaled = exact::residue_of(&(big(n) << k), DEFAULT_STEP_BUDGET).unwrap();
        prop_assert_eq!(&base, &scaled);
        let c = trajectory::trajectory_stats(&big(n), DEFAULT_STEP_BUDGET).unwrap();
        let cs = trajectory::trajectory_stats(&(big(n) << k), DEFAULT_STEP_BUDGET).unwrap();
        prop_assert_eq!((cs.odd, cs.even), (c.odd, c.even + k as u64));
    }

    #[test]
    fn formulas_and_bounds_hold(limbs in prop::collection::vec(any::<u32>(), 1..4)) {
        let n = biguint_from_limbs(&limbs);
        let c = trajectory::trajectory_stats(&n, DEFAULT_STEP_BUDGET).unwrap();
        let fc = exact::predict_all(&n, c).unwrap();
        prop_assert!(fc.all_match(), "{:?}", fc);
        prop_assert_eq!(exact::check_lower(&n, DEFAULT_STEP_BUDGET).unwrap().verdict, Verdict::Pass);
        prop_assert_eq!(exact::check_wrc(&n, DEFAULT_STEP_BUDGET).unwrap().verdict, Verdict::Pass);
        prop_assert_ne!(exact::check_theorem2(&n, DEFAULT_STEP_BUDGET).unwrap().verdict, Verdict::Fail);
    }

    #[test]
    fn product_form_equals_residue(n in 0u64..50_000_000) {
        let n = big(2 * n + 1);
        let prod = exact::residue_product(&n, DEFAULT_STEP_BUDGET).unwrap();
        let r = exact::residue_of(&n, DEFAULT_STEP_BUDGET).unwrap();
        prop_assert_eq!(prod, r.to_rational());
    }

    #[test]
    fn floor_ceil_duality(
        base in 2u32..12,
        num in prop::collection::vec(any::<u32>(), 1..6),
        den in prop::collection::vec(any::<u32>(), 1..4),
    ) {
        let num = biguint_from_limbs(&num);
        let den = biguint_from_limbs(&den);
        prop_assume!(num >= den);
        let f = exact::floor_log_ratio(base, &num, &den).unwrap();
        let c = exact::ceil_log_ratio(base, &num, &den).unwrap();
        let b = BigUint::from(base);
        prop_assert!(b.pow(f as u32) * &den <= num);
        prop_assert!(b.pow(f as u32 + 1) * &den > num);
        let exact_power = b.pow(f as u32) * &den == num;
        prop_assert_eq!(c, if exact_power { f } else { f + 1 });
    }

    #[test]
    fn residue_order_matches_cross_multiplication(a in 1u64..100_000, b in 1u64..100_000) {
        let ra = exact::residue_of(&big(a), DEFAULT_STEP_BUDGET).unwrap();
        let rb = exact::residue_of(&big(b), DEFAULT_STEP_BUDGET).unwrap();
        prop_assert_eq!(exact::residue_compare(&ra, &rb), ra.to_rational().cmp(&rb.to_rational()));
    }

    #[test]
    fn decimal_parse_round_trip(limbs in prop::collection::vec(any::<u32>(), 1..12)) {
        let n = BigUint::new(limbs);
        prop_assert_eq!(residue_lab::parse_biguint(&n.to_string()).unwrap(), n);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn merge_is_partition_and_order_independent(
        start in 1u64..5_000,
        len in 1u64..600,
        cuts in prop::collection::vec(any::<prop::sample::Index>(), 0..6),
        order in any::<prop::sample::Index>(),
    ) {
        let end = start + len - 1;
        let mut points: Vec<u64> = cuts.iter().map(|c| start + c.index(len as usize) as u64).collect();
        points.push(start);
        points.sort();
        points.dedup();
        let mut pieces: Vec<(u64, u64)> = points
            .iter()
            .enumerate()
            .map(|(i, &lo)| (lo, points.get(i + 1).map_or(end, |next| next - 1)))
            .collect();
        let rotate = order.index(pieces.len());
        pieces.rotate_left(rotate);

        let whole = scanner::scan_chunk(&big(start), &big(end), &all_checks(), DEFAULT_STEP_BUDGET).unwrap();
        let mut merged = ScanReport::empty();
        for (lo, hi) in pieces.iter().rev() {
            let c = scanner::scan_chunk(&big(*lo), &big(*hi), &all_checks(), DEFAULT_STEP_BUDGET).unwrap();
            merged = scanner::merge(merged, c).unwrap();
        }
        prop_assert_eq!(&merged, &ScanReport::from(whole));

        let mut tree = ScanReport::empty();
        let halves: Vec<ScanReport> = pieces
            .chunks(2)
            .map(|pair| {
                pair.iter().fold(ScanReport::empty(), |acc, (lo, hi)| {
                    let c = scanner::scan_chunk(&big(*lo), &big(*hi), &all_checks(), DEFAULT_STEP_BUDGET).unwrap();
                    scanner::merge(acc, c).unwrap()
                })
            })
            .collect();
        for h in halves {
            tree = h.merge(tree).unwrap();
        }
        prop_assert_eq!(&tree, &merged);
    }

    #[test]
    fn report_independent_of_chunk_size_and_workers(
        start in 1u64..100_000,
        len in 1u64..3_000,
        chunk in 1u64..700,
        workers in 1usize..5,
    ) {
        let mut a = ScanConfig::new(big(start), big(start + len - 1));
        let reference = scanner::run_scan(&a).unwrap();
        a.chunk_size = chunk;
        a.workers = workers;
        let other = scanner::run_scan(&a).unwrap();
        prop_assert_eq!(
            serde_json::to_string(&other.to_json(false)).unwrap(),
            serde_json::to_string(&reference.to_json(false)).unwrap()
        );
    }
}
