use althecke::exactfield::{poincare, quantum_int, sqrt_bracket, BaseScalar, ExtScalar, GaussRat};
use proptest::prelude::*;

fn t() -> BaseScalar {
    BaseScalar::t_pow(1)
}

#[test]
fn quantum_integers() {
    assert_eq!(quantum_int(3), BaseScalar::t_poly(&[1, 1, 1]));
    let minus_two = BaseScalar::t_pow(-1).add(&BaseScalar::t_pow(-2)).neg();
    assert_eq!(quantum_int(-2), minus_two);
    assert!(quantum_int(0).is_zero());
    assert_eq!(quantum_int(1), BaseScalar::one());
}

#[test]
fn quantum_integer_closed_form() {
    // [k](t − 1) = t^k − 1 for every integer k
    let tm1 = t().sub(&BaseScalar::one());
    for k in -8..=8 {
        let lhs = quantum_int(k).mul(&tm1);
        let rhs = BaseScalar::t_pow(k).sub(&BaseScalar::one());
        assert_eq!(lhs, rhs, "k = {k}");
    }
}

#[test]
fn negative_bracket_sign_identity() {
    for k in 1..=8 {
        let rhs = BaseScalar::t_pow(-k).mul(&quantum_int(k)).neg();
        assert_eq!(quantum_int(-k), rhs);
    }
}

#[test]
fn roots_square_to_brackets() {
    let two = sqrt_bracket(2).unwrap();
    assert_eq!(&two * &two, ExtScalar::qint(2));
    for h in -8i64..=8 {
        if h == 0 {
            assert!(sqrt_bracket(0).is_err());
            continue;
        }
        let r = sqrt_bracket(h).unwrap();
        assert_eq!(&r * &r, ExtScalar::qint(h), "h = {h}");
    }
    let expected = ExtScalar::i() * ExtScalar::u_pow(-2) * sqrt_bracket(2).unwrap();
    assert_eq!(sqrt_bracket(-2).unwrap(), expected);
}

#[test]
fn inverse_of_root() {
    let r3 = sqrt_bracket(3).unwrap();
    let expected = r3.mul_ref(&ExtScalar::qint(3).inv().unwrap());
    assert_eq!(r3.inv().unwrap(), expected);
    assert!(ExtScalar::zero().inv().is_err());
}

#[test]
fn alternating_coefficient_square() {
    // (i·u·√[3]/[2])² = −t[3]/[2]²
    let a = ExtScalar::i() * ExtScalar::u_pow(1) * sqrt_bracket(3).unwrap() * ExtScalar::qint(2).inv().unwrap();
    let two_sq = ExtScalar::qint(2) * ExtScalar::qint(2);
    let expected = -(ExtScalar::t_pow(1) * ExtScalar::qint(3) * two_sq.inv().unwrap());
    assert_eq!(&a * &a, expected);
}

#[test]
fn poincare_polynomials() {
    assert_eq!(poincare(1), BaseScalar::one());
    assert_eq!(poincare(3), BaseScalar::t_poly(&[1, 1]).mul(&BaseScalar::t_poly(&[1, 1, 1])));
    for n in 1..=8 {
        assert!(!poincare(n).is_zero());
    }
}

#[test]
fn json_form() {
    let x = sqrt_bracket(3).unwrap().scale_base(&BaseScalar::u_pow(-1));
    let j = serde_json::to_value(&x).unwrap();
    assert_eq!(j, serde_json::json!([{"subset": [3], "num": "1", "den": "u"}]));
}

fn small_base() -> impl Strategy<Value = BaseScalar> {
    (prop::collection::vec(-3i64..=3, 1..4), prop::collection::vec(-3i64..=3, 1..3), -3i64..=3, any::<bool>()).prop_map(
        |(num, den, shift, gauss)| {
            let mut n = BaseScalar::from_int(0);
            for (k, c) in num.iter().enumerate() {
                n = n.add(&BaseScalar::from_int(*c).mul(&BaseScalar::u_pow(k as i64)));
            }
            let mut d = BaseScalar::one();
            for (k, c) in den.iter().enumerate() {
                d = d.add(&BaseScalar::from_int(*c).mul(&BaseScalar::u_pow(k as i64 + 1)));
            }
            if d.is_zero() {
                d = BaseScalar::one();
            }
            let mut x = n.mul(&d.inv().unwrap()).mul(&BaseScalar::u_pow(shift));
            if gauss {
                x = x.mul(&BaseScalar::from_gauss(GaussRat::from_ints(1, 2)));
            }
            x
        },
    )
}

fn small_ext() -> impl Strategy<Value = ExtScalar> {
    prop::collection::vec((prop::sample::select(vec![0u32, 1 << 2, 1 << 3, (1 << 2) | (1 << 4), 1 << 5]), small_base()), 0..3)
        .prop_map(|terms| {
            terms.into_iter().fold(ExtScalar::zero(), |acc, (m, c)| acc + ExtScalar::monomial(m, c))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]
    #[test]
    fn field_axioms(a in small_ext(), b in small_ext(), c in small_ext()) {
        prop_assert_eq!((&a * &b) * c.clone(), &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
        // supports stay inside the roots that appear
        let m = (&a * &b).support_mask();
        prop_assert_eq!(m & !(a.support_mask() | b.support_mask()), 0);
    }
}
