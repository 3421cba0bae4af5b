use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use sigma_core::{CycloNum, Ring};

/// Complex embedding ζ_N ↦ exp(2πi/N), used as an independent oracle.
fn embed(x: &CycloNum) -> (f64, f64) {
    let n = x.level() as f64;
    x.coords()
        .iter()
        .enumerate()
        .fold((0.0, 0.0), |(re, im), (k, c)| {
            let v = c.to_f64().unwrap();
            let t = std::f64::consts::TAU * k as f64 / n;
            (re + v * t.cos(), im + v * t.sin())
        })
}

fn close(a: (f64, f64), b: (f64, f64)) -> bool {
    let scale = 1.0 + a.0.abs() + a.1.abs() + b.0.abs() + b.1.abs();
    (a.0 - b.0).abs() < 1e-7 * scale && (a.1 - b.1).abs() < 1e-7 * scale
}

fn cmul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

const LEVELS: [u32; 8] = [1, 3, 4, 5, 6, 8, 9, 12];

fn cyclo() -> impl Strategy<Value = CycloNum> {
    (
        0..LEVELS.len(),
        prop::collection::vec((-6i64..=6, 1i64..=4), 1..6),
    )
        .prop_map(|(li, terms)| {
            let n = LEVELS[li];
            terms
                .iter()
                .enumerate()
                .fold(CycloNum::zero(), |acc, (k, &(p, q))| {
                    let c = CycloNum::from_rational(&BigRational::new(
                        BigInt::from(p),
                        BigInt::from(q),
                    ));
                    acc + c * CycloNum::zeta(n, k as i64)
                })
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(a in cyclo(), b in cyclo(), c in cyclo()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &CycloNum::zero(), a.clone());
        prop_assert_eq!(&a * &CycloNum::one(), a.clone());
        prop_assert!((&a + &(-a.clone())).is_zero());
    }

    #[test]
    fn matches_complex_embedding(a in cyclo(), b in cyclo()) {
        let (ea, eb) = (embed(&a), embed(&b));
        let s = embed(&(&a + &b));
        prop_assert!(close(s, (ea.0 + eb.0, ea.1 + eb.1)));
        prop_assert!(close(embed(&(&a * &b)), cmul(ea, eb)));
    }

    #[test]
    fn inverse_is_two_sided(a in cyclo()) {
        prop_assume!(!a.is_zero());
        let inv = a.inverse().unwrap();
        prop_assert!((&a * &inv).is_one());
        prop_assert!(close(cmul(embed(&a), embed(&inv)), (1.0, 0.0)));
    }

    #[test]
    fn zeta_orders(n in 1u32..=24, k in 0i64..48) {
        let z = CycloNum::zeta(n, k);
        let expect = (n as i64 / num_integer::gcd(n as i64, k.rem_euclid(n as i64)).max(1)) as u64;
        let expect = if k.rem_euclid(n as i64) == 0 { 1 } else { expect };
        prop_assert_eq!(z.root_of_unity_order(), Some(expect));
        prop_assert!(z.pow_u(n as u64).is_one());
    }
}

#[test]
fn non_roots_of_unity() {
    assert_eq!(CycloNum::from_int(2).root_of_unity_order(), None);
    let x = CycloNum::one() + CycloNum::zeta(5, 1);
    assert_eq!(x.root_of_unity_order(), None);
    assert_eq!(CycloNum::from_int(-1).root_of_unity_order(), Some(2));
}
