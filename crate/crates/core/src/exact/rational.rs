//! Rational and integer vector helpers.
//!
//! `Rational` is `num_rational::BigRational`, which always stores values in
//! lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int_to_rat(n: &Int) -> Rational {
    Rational::from_integer(n.clone())
}

pub fn rat_vec(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rat(x)).collect()
}

pub fn int_vec_to_rat(v: &[Int]) -> Vec<Rational> {
    v.iter().map(int_to_rat).collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn dot_int_rat(a: &[Int], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + y * x)
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Parses `"p/q"` or `"p"`. Rejects zero denominators and stray whitespace.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let parse_int = |t: &str| -> Option<Int> {
        let digits = t.strip_prefix('-').unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        t.parse().ok()
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let n = parse_int(n)?;
            let d = parse_int(d)?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => parse_int(s).map(Rational::from_integer),
    }
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Scales a rational vector by a positive factor so that it becomes a
/// primitive integer vector. The zero vector maps to the zero vector.
pub fn primitive_integer(v: &[Rational]) -> Vec<Int> {
    let lcm = v.iter().fold(Int::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<Int> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    primitive(ints)
}

/// Divides an integer vector by the gcd of its entries.
pub fn primitive(v: Vec<Int>) -> Vec<Int> {
    let g = v.iter().fold(Int::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        return v;
    }
    v.into_iter().map(|x| x / &g).collect()
}

pub fn is_zero_vec(v: &[Int]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn abs_rat(r: &Rational) -> Rational {
    r.abs()
}

pub fn factorial(n: usize) -> Int {
    (1..=n).fold(Int::one(), |acc, k| acc * Int::from(k))
}

pub fn binomial(n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("3/6"), Some(ratio(1, 2)));
        assert_eq!(parse_rational("-4/2"), Some(rat(-2)));
        assert_eq!(parse_rational("7"), Some(rat(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational(" 1"), None);
        assert_eq!(parse_rational("+1"), None);
        assert_eq!(parse_rational(""), None);
        assert_eq!(parse_rational("1/-2"), Some(ratio(-1, 2)));
        assert_eq!(format_rational(&ratio(4, -6)), "-2/3");
        assert_eq!(format_rational(&rat(0)), "0");
    }

    #[test]
    fn primitive_scaling() {
        let v = vec![ratio(1, 2), ratio(-3, 4), rat(0)];
        assert_eq!(
            primitive_integer(&v),
            vec![Int::from(2), Int::from(-3), Int::from(0)]
        );
        assert_eq!(
            primitive(vec![Int::from(4), Int::from(-6)]),
            vec![Int::from(2), Int::from(-3)]
        );
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), Int::from(10));
        assert_eq!(binomial(3, 5), Int::from(0));
        assert_eq!(factorial(4), Int::from(24));
    }

    proptest::proptest! {
        #[test]
        fn format_parse_round_trip(n in -10_000i64..10_000, d in 1i64..500) {
            let r = ratio(n, d);
            proptest::prop_assert_eq!(parse_rational(&format_rational(&r)), Some(r));
        }
    }
}
