//! Exact-or-real bound values and the fixed decimal rendering used in reports.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// `p / q` as a [`BigRational`].
pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Rational square root when both numerator and denominator are perfect squares.
pub fn sqrt_exact(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let (p, q) = (r.numer(), r.denom());
    let (sp, sq) = (p.sqrt(), q.sqrt());
    (&sp * &sp == *p && &sq * &sq == *q).then(|| BigRational::new(sp, sq))
}

/// A bound value. `exact` is present when every input and operation was
/// rational (square roots of perfect squares included).
#[derive(Debug, Clone, PartialEq)]
pub struct BoundValue {
    pub exact: Option<BigRational>,
    pub value: f64,
}

impl BoundValue {
    pub fn exact(r: BigRational) -> Self {
        BoundValue { value: r.to_f64().unwrap_or(f64::NAN), exact: Some(r) }
    }

    pub fn real(value: f64) -> Self {
        BoundValue { exact: None, value }
    }

    pub fn exact_value(&self) -> Option<&BigRational> {
        self.exact.as_ref()
    }

    /// `measured >= self`: exact when both sides are rational, otherwise
    /// with `slack` absolute tolerance.
    pub fn le_measured(&self, measured: &BigRational, slack: f64) -> bool {
        match &self.exact {
            Some(b) => b <= measured,
            None => self.value <= measured.to_f64().unwrap_or(f64::NAN) + slack,
        }
    }
}

/// Why a closed-form bound produced no value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NoBound {
    /// The formula's radicand is negative; `n` lies outside its regime.
    Vacuous(String),
    /// The parameters fall outside the bound's hypotheses.
    NotApplicable(String),
}

impl std::fmt::Display for NoBound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NoBound::Vacuous(why) => write!(f, "vacuous: {why}"),
            NoBound::NotApplicable(why) => write!(f, "not applicable: {why}"),
        }
    }
}

/// Renders `x` with 12 significant digits, trimming trailing zeros;
/// scientific notation outside `[1e-5, 1e12)`.
pub fn fmt_sig(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.11e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..12).contains(&exp) {
        let m = trim_zeros(mantissa);
        return format!("{m}e{exp}");
    }
    let decimals = (11 - exp).max(0) as usize;
    let fixed = format!("{:.*}", decimals, x);
    let fixed = trim_zeros(&fixed);
    if fixed == "-0" {
        "0".into()
    } else {
        fixed
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// `p/q` text for a rational (`p` when integral).
pub fn fmt_rational(r: &BigRational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else if r.is_zero() {
        "0".into()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_square_roots() {
        assert_eq!(sqrt_exact(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(sqrt_exact(&rat(2, 1)), None);
        assert_eq!(sqrt_exact(&rat(-1, 1)), None);
        assert_eq!(sqrt_exact(&rat(0, 1)), Some(rat(0, 1)));
    }

    #[test]
    fn significant_digits() {
        assert_eq!(fmt_sig(2.0), "2");
        assert_eq!(fmt_sig(0.6180339887498949), "0.61803398875");
        assert_eq!(fmt_sig(1.0 / 3.0), "0.333333333333");
        assert_eq!(fmt_sig(-2.0000000000000004), "-2");
        assert_eq!(fmt_sig(1e-9), "1e-9");
        assert_eq!(fmt_sig(123456789012345.0), "1.23456789012e14");
        assert_eq!(fmt_sig(-1e-17), "-1e-17");
        assert_eq!(fmt_sig(0.0), "0");
    }

    #[test]
    fn rational_text() {
        assert_eq!(fmt_rational(&rat(6, 7)), "6/7");
        assert_eq!(fmt_rational(&rat(4, 2)), "2");
    }
}
