//! Exact scalar arithmetic.
//!
//! Every quantity in this crate is a [`Rational`]: an arbitrary-precision
//! fraction kept in canonical form (reduced, positive denominator). There are
//! no floats anywhere, so equality against zero is decidable and every
//! reported residual is exact.

use num::bigint::BigInt;
use num::rational::BigRational;
use rand::Rng;

use crate::error::Error;

/// Arbitrary-precision rational number in canonical reduced form.
pub type Rational = BigRational;

/// Shorthand for a rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Shorthand for the fraction `n / d`. Panics on `d == 0`; use
/// [`parse_rational`] for untrusted input.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"` with optional sign. Rejects `q == 0` and any
/// malformed text instead of panicking.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let bad = || Error::ParseRational(text.to_string());
    let trimmed = text.trim();
    let (numer_text, denom_text) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let numer: BigInt = numer_text.parse().map_err(|_| bad())?;
    let denom: BigInt = denom_text.parse().map_err(|_| bad())?;
    if denom == BigInt::from(0) {
        return Err(Error::ParseRational(format!("{text} (zero denominator)")));
    }
    Ok(Rational::new(numer, denom))
}

/// Formats in the same `"p"` / `"p/q"` shape accepted by [`parse_rational`].
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// Uniform small rational used by every sampling harness: numerator in
/// [-20, 20], denominator in [1, 10].
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let numer = rng.gen_range(-20i64..=20);
    let denom = rng.gen_range(1i64..=10);
    ratio(numer, denom)
}

/// Like [`random_rational`] but redrawn until nonzero.
pub fn random_nonzero_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    use num::Zero;
    loop {
        let value = random_rational(rng);
        if !value.is_zero() {
            return value;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::{One, Signed, Zero};
    use proptest::prelude::*;
    use rand::SeedableRng;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("3").unwrap(), rat(3));
        assert_eq!(parse_rational("-7/2").unwrap(), ratio(-7, 2));
        assert_eq!(parse_rational("4/6").unwrap(), ratio(2, 3));
        assert_eq!(parse_rational(" 1/3 ").unwrap(), ratio(1, 3));
    }

    #[test]
    fn rejects_zero_denominator_and_garbage() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("1/2/3").is_err());
    }

    #[test]
    fn formats_without_unit_denominator() {
        assert_eq!(format_rational(&rat(5)), "5");
        assert_eq!(format_rational(&ratio(-1, 2)), "-1/2");
        assert_eq!(format_rational(&ratio(6, 4)), "3/2");
    }

    #[test]
    fn sampler_is_deterministic_and_in_range() {
        let mut a = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut b = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let x = random_rational(&mut a);
            assert_eq!(x, random_rational(&mut b));
            assert!(x.numer().abs() <= BigInt::from(20 * 10));
        }
    }

    proptest! {
        #[test]
        fn round_trips_canonical_form(n in -1000i64..1000, d in 1i64..200) {
            let value = ratio(n, d);
            let text = format_rational(&value);
            prop_assert_eq!(parse_rational(&text).unwrap(), value);
        }

        #[test]
        fn canonical_form_has_positive_denominator(n in -1000i64..1000, d in 1i64..200) {
            let value = ratio(n, -d);
            prop_assert!(value.denom().is_positive() || value.is_zero());
            if value.is_zero() {
                prop_assert!(value.denom().is_one());
            }
        }
    }
}
