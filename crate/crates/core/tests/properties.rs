use num_complex::Complex64;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use plunnecke_core::campaign::{random_group, random_set, random_states, random_system};
use plunnecke_core::magnification::{mag_ratio, mag_ratio_delta, mag_ratio_oracle};
use plunnecke_core::rational::{ratio, Rational};
use plunnecke_core::spectral::group_dft_real;
use plunnecke_core::{FiniteSet, GroupSpec, Tail, ZSetDesc};

fn group_and_sets(seed: u64, max_order: usize) -> (GroupSpec, FiniteSet, FiniteSet, FiniteSet) {
    let rng = &mut ChaCha8Rng::seed_from_u64(seed);
    let g = random_group(rng, max_order);
    let (a, b, c) = (random_set(rng, &g), random_set(rng, &g), random_set(rng, &g));
    (g, a, b, c)
}

fn tail() -> impl Strategy<Value = Option<Tail>> {
    prop_oneof![
        1 => Just(None),
        4 => (1u64..=6).prop_flat_map(|p| proptest::collection::vec(0..p, 0..=p as usize)
            .prop_map(move |r| Some(Tail::new(p, r).unwrap()))),
    ]
}

fn zset() -> impl Strategy<Value = ZSetDesc> {
    (-12i64..=0, 0i64..=12, proptest::collection::vec(-12i64..12, 0..8), tail(), tail()).prop_map(|(lo, hi, head, l, r)| {
        let head: Vec<i64> = head.into_iter().filter(|x| (lo..hi).contains(x)).collect();
        ZSetDesc::new(lo, hi, head, l, r).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn sumset_laws(seed in any::<u64>()) {
        let (g, a, b, c) = group_and_sets(seed, 40);
        prop_assert_eq!(a.sumset(&b).unwrap(), b.sumset(&a).unwrap());
        prop_assert_eq!(a.sumset(&b).unwrap().sumset(&c).unwrap(), a.sumset(&b.sumset(&c).unwrap()).unwrap());
        let s = a.sumset(&b).unwrap();
        prop_assert!(s.len() >= a.len().max(b.len()));
        for x in 0..g.order() {
            let direct = a.iter().any(|y| b.contains(g.add(x, g.neg(y))));
            prop_assert_eq!(s.contains(x), direct);
        }
        let mut rep = a.clone();
        for k in 1..=4 {
            prop_assert_eq!(a.iterated(k).unwrap(), rep.clone());
            rep = rep.sumset(&a).unwrap();
        }
    }

    #[test]
    fn zsumset_matches_membership(a in zset(), b in zset()) {
        prop_assume!(!a.is_empty() && !b.is_empty());
        let s = a.sumset(&b).unwrap();
        for x in -40i64..40 {
            let direct = (x - 120..x + 120).any(|y| a.contains(y) && b.contains(x - y));
            prop_assert_eq!(s.contains(x), direct, "x = {}", x);
        }
        prop_assert!(s.upper_density() >= a.upper_density().max(b.upper_density()));
    }

    #[test]
    fn normal_form_keeps_set_and_densities(a in zset()) {
        let n = a.normalized();
        prop_assert!(n.same_set(&a));
        prop_assert_eq!(n.normalized(), n.clone());
        prop_assert!(a.upper_density() >= a.lower_density());
        prop_assert_eq!(n.upper_density(), a.upper_density());
        prop_assert_eq!(n.lower_density(), a.lower_density());
        for x in -60i64..60 {
            prop_assert_eq!(n.contains(x), a.contains(x));
        }
    }

    #[test]
    fn flow_matches_enumeration(seed in any::<u64>()) {
        let rng = &mut ChaCha8Rng::seed_from_u64(seed);
        let g = random_group(rng, 14);
        let sys = random_system(rng, &g);
        let a = random_set(rng, &g);
        let b = random_states(rng, &sys, 12);
        let flow = mag_ratio(&sys, &a, &b).unwrap();
        let oracle = mag_ratio_oracle(&sys, &a, &b).unwrap();
        prop_assert_eq!(&flow.value, &oracle.value);
        prop_assert!(flow.value >= Rational::one());
        let w = &flow.witness;
        prop_assert!(w.is_subset(&b));
        prop_assert_eq!(sys.measure_of(&sys.apply_set(&a, w).unwrap()) / sys.measure_of(w), flow.value.clone());
        prop_assert!(oracle.witness.len() >= w.len());
        let full = mag_ratio_delta(&sys, &a, &b, &Rational::one()).unwrap();
        prop_assert_eq!(full.value, sys.measure_of(&sys.apply_set(&a, &b).unwrap()) / sys.measure_of(&b));
        let half = mag_ratio_delta(&sys, &a, &b, &ratio(1, 2)).unwrap();
        prop_assert!(half.value >= flow.value);
    }

    #[test]
    fn parseval(seed in any::<u64>(), orders in proptest::collection::vec(1usize..=9, 1..=3)) {
        let g = GroupSpec::new(&orders).unwrap();
        let rng = &mut ChaCha8Rng::seed_from_u64(seed);
        let w: Vec<f64> = (0..g.order()).map(|_| rand::Rng::gen_range(rng, -1.0..1.0)).collect();
        let f = group_dft_real(&g, &w).unwrap();
        let lhs: f64 = f.iter().map(Complex64::norm_sqr).sum();
        let rhs: f64 = g.order() as f64 * w.iter().map(|x| x * x).sum::<f64>();
        prop_assert!((lhs - rhs).abs() < 1e-8 * (1.0 + rhs));
    }
}

#[test]
fn empty_zset_has_zero_density() {
    let e = ZSetDesc::finite([]);
    assert!(e.upper_density().is_zero() && e.lower_density().is_zero());
}
