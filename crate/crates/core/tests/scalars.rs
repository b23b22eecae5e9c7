use num_bigint::BigInt;
use proptest::prelude::*;

use qdtop_core::scalar::{is_irreducible, reduce_mod, scalar_gcd, scalar_lcm, Poly, Scalar, ScalarDomain};

fn int(n: i64) -> Scalar {
    Scalar::from(n)
}

fn brute_gcd(a: i64, b: i64) -> i64 {
    let (a, b) = (a.abs(), b.abs());
    (1..=a.max(b)).rev().find(|d| a % d == 0 && b % d == 0).unwrap_or(0)
}

/// Every polynomial of degree below `d` over F_p.
fn all_polys(p: u64, d: usize) -> Vec<Poly> {
    (0..(p as usize).pow(d as u32))
        .map(|mut k| {
            Poly::new(
                p,
                (0..d).map(|_| {
                    let c = (k % p as usize) as u64;
                    k /= p as usize;
                    c
                }),
            )
        })
        .collect()
}

proptest! {
    #[test]
    fn integer_gcd_matches_divisor_search(a in -200i64..200, b in -200i64..200) {
        prop_assume!(a != 0 || b != 0);
        prop_assert_eq!(scalar_gcd(&int(a), &int(b)).unwrap(), int(brute_gcd(a, b)));
    }

    #[test]
    fn integer_lcm_is_least_common_multiple(a in 1i64..120, b in 1i64..120) {
        let l = scalar_lcm(&int(a), &int(b)).unwrap().to_u64().unwrap() as i64;
        let brute = (1..=a * b).find(|m| m % a == 0 && m % b == 0).unwrap();
        prop_assert_eq!(l, brute);
    }

    #[test]
    fn reduction_lands_in_range(a in -10_000i64..10_000, m in 2i64..500) {
        let r = reduce_mod(&int(a), &int(m)).unwrap().to_u64().unwrap() as i64;
        prop_assert!((0..m).contains(&r));
        prop_assert_eq!((a - r).rem_euclid(m), 0);
    }

    #[test]
    fn poly_division_identity(a in proptest::collection::vec(0u64..3, 0..8), b in proptest::collection::vec(0u64..3, 1..5)) {
        let (a, b) = (Poly::new(3, a), Poly::new(3, b));
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b);
        prop_assert_eq!(q.mul(&b).add(&r), a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn poly_gcd_divides_both_and_is_largest(a in proptest::collection::vec(0u64..2, 1..7), b in proptest::collection::vec(0u64..2, 1..7)) {
        let (a, b) = (Poly::new(2, a), Poly::new(2, b));
        prop_assume!(!a.is_zero() || !b.is_zero());
        let g = a.gcd(&b);
        prop_assert!(a.rem(&g).is_zero() && b.rem(&g).is_zero());
        let best = all_polys(2, 7)
            .into_iter()
            .filter(|d| !d.is_zero() && a.rem(d).is_zero() && b.rem(d).is_zero())
            .filter_map(|d| d.degree())
            .max();
        prop_assert_eq!(g.degree(), best);
    }
}

#[test]
fn irreducibility_matches_factor_search() {
    for p in [2u64, 3] {
        let small: Vec<Poly> = all_polys(p, 3).into_iter().filter(|f| f.degree().is_some_and(|d| d >= 1)).collect();
        for d in 1..=4 {
            for f in all_polys(p, d + 1).into_iter().filter(|f| f.degree() == Some(d) && f.is_monic()) {
                let has_factor = small
                    .iter()
                    .any(|g| g.degree().unwrap() < d && f.rem(g).is_zero());
                assert_eq!(is_irreducible(&Scalar::Poly(f.clone())).unwrap(), !has_factor, "{f}");
            }
        }
    }
}

#[test]
fn scalar_parsing() {
    let z = ScalarDomain::Integers;
    assert_eq!(z.parse_scalar("-12").unwrap(), int(-12));
    let f2 = ScalarDomain::poly_over(2).unwrap();
    let x2x = f2.parse_scalar("x^2+x").unwrap();
    assert_eq!(x2x.to_string(), "x^2+x");
    assert!(ScalarDomain::poly_over(4).is_err());
    assert!(f2.parse_scalar("x^").is_err());
    assert_eq!(
        reduce_mod(&int(-1), &int(8)).unwrap(),
        Scalar::Int(BigInt::from(7))
    );
    assert!(reduce_mod(&int(5), &int(1)).is_err());
}
