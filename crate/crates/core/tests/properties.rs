use std::collections::HashSet;

use hyperbent_core::criteria::{mobius_map, MobiusContext, MobiusPoint};
use hyperbent_core::families::{dickson, kloosterman};
use hyperbent_core::field::{FieldSpec, QuadraticExtension};
use proptest::prelude::*;

fn field_and_elements() -> impl Strategy<Value = (u32, u32, u32, u32)> {
    (2u32..=16).prop_flat_map(|n| {
        let size = 1u32 << n;
        (Just(n), 0..size, 0..size, 0..size)
    })
}

proptest! {
    #[test]
    fn field_axioms((n, a, b, c) in field_and_elements()) {
        let f = FieldSpec::new(n, None).unwrap();
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, b ^ c), f.mul(a, b) ^ f.mul(a, c));
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        prop_assert_eq!(f.pow(a, 1u64 << n), a);
        prop_assert_eq!(f.abs_trace(f.square(a) ^ a), 0);
    }

    /// `D_r(x + 1/x) = x^r + 1/x^r` for nonzero `x`.
    #[test]
    fn dickson_matches_power_sums(n in 2u32..=12, x in 1u32..4096, r in 0u64..200) {
        let f = FieldSpec::new(n, None).unwrap();
        let x = x % (f.size() - 1) + 1;
        let y = f.inv(x);
        prop_assert_eq!(dickson(&f, r, x ^ y), f.pow(x, r) ^ f.pow(y, r));
    }

    #[test]
    fn dickson_composes(n in 2u32..=10, x in 0u32..1024, r in 0u64..40, s in 0u64..40) {
        let f = FieldSpec::new(n, None).unwrap();
        let x = x % f.size();
        prop_assert_eq!(dickson(&f, r, dickson(&f, s, x)), dickson(&f, r * s, x));
    }
}

#[test]
fn kloosterman_sums_are_divisible_by_four_and_within_weil() {
    for m in 2..=10 {
        let f = FieldSpec::new(m, None).unwrap();
        for a in 1..f.size() {
            let k = kloosterman(&f, a);
            assert_eq!(k.rem_euclid(4), 0, "m={m} a={a}");
            // |K - 1| <= 2^{m/2 + 1}
            assert!((k - 1).pow(2) <= 1 << (m + 2), "m={m} a={a} K={k}");
        }
    }
}

#[test]
fn mobius_map_is_a_bijection_onto_the_unit_circle() {
    for m in [2, 3, 4, 5, 7] {
        let ext = QuadraticExtension::with_defaults(m).unwrap();
        let units: HashSet<u32> = ext.units().iter().copied().collect();
        for &u0 in &ext.units()[1..] {
            let ctx = MobiusContext::new(&ext, u0).unwrap();
            let image: HashSet<u32> = MobiusPoint::all(&ext).map(|x| mobius_map(&ext, &ctx, x)).collect();
            assert_eq!(image, units, "m={m} u0={u0:#x}");
        }
    }
}
