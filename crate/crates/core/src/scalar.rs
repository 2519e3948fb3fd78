//! Exact scalar arithmetic: Gaussian rationals (complex numbers with exact
//! rational real and imaginary parts).
//!
//! All symbolic layers (group points, enveloping-algebra elements, polynomial
//! test functions) use these so that identity audits are exact; floating-point
//! scalars appear only in the numeric layers.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;
/// Gaussian rational: `re + im*i` with exact rational parts.
pub type CRat = Complex<Rat>;
pub type C64 = Complex<f64>;

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn crat(re: Rat, im: Rat) -> CRat {
    Complex::new(re, im)
}

pub fn crat_int(v: i64) -> CRat {
    Complex::new(rat_int(v), rat_int(0))
}

pub fn crat_ratio(num: i64, den: i64) -> CRat {
    Complex::new(rat(num, den), rat_int(0))
}

/// The imaginary unit.
pub fn crat_i() -> CRat {
    Complex::new(rat_int(0), rat_int(1))
}

pub fn crat_zero() -> CRat {
    Complex::new(rat_int(0), rat_int(0))
}

pub fn crat_one() -> CRat {
    Complex::new(rat_int(1), rat_int(0))
}

/// Exact conversion from an `f64` (every finite float is rational).
pub fn rat_from_f64(v: f64) -> Option<Rat> {
    Rat::from_float(v)
}

pub fn crat_from_c64(v: C64) -> Option<CRat> {
    Some(Complex::new(rat_from_f64(v.re)?, rat_from_f64(v.im)?))
}

pub fn rat_to_f64(v: &Rat) -> f64 {
    v.to_f64().unwrap_or_else(|| {
        // falls back to a quotient of leading digits for extreme magnitudes
        let n = v.numer().to_f64().unwrap_or(f64::NAN);
        let d = v.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

pub fn crat_to_c64(v: &CRat) -> C64 {
    Complex::new(rat_to_f64(&v.re), rat_to_f64(&v.im))
}

pub fn crat_pow(base: &CRat, exp: u32) -> CRat {
    let mut acc = crat_one();
    for _ in 0..exp {
        acc *= base.clone();
    }
    acc
}

pub fn fmt_rat(v: &Rat) -> String {
    if v.denom().is_one() {
        format!("{}", v.numer())
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Canonical text form of a Gaussian rational, parseable by the expression
/// grammar: `0`, `3/4`, `-2`, `1i`, `-1/2i`, `(3/4 + 1/2i)`, `(-1 - 2i)`.
pub fn fmt_crat(v: &CRat) -> String {
    let re_zero = v.re.is_zero();
    let im_zero = v.im.is_zero();
    match (re_zero, im_zero) {
        (true, true) => "0".to_string(),
        (false, true) => fmt_rat(&v.re),
        (true, false) => format!("{}i", fmt_rat(&v.im)),
        (false, false) => {
            let sign = if v.im.is_negative() { '-' } else { '+' };
            format!("({} {} {}i)", fmt_rat(&v.re), sign, fmt_rat(&v.im.abs()))
        }
    }
}

/// Parse a rational of the form `p` or `p/q` (with optional leading `-`).
pub fn parse_rat(text: &str) -> Option<Rat> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(n, d))
        }
        None => {
            let n: BigInt = text.parse().ok()?;
            Some(Rat::from_integer(n))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_field_ops() {
        let a = crat(rat(1, 3), rat(-2, 7));
        let b = crat(rat(5, 2), rat(1, 3));
        let prod = a.clone() * b.clone();
        let back = prod / b;
        assert_eq!(back, a);
    }

    #[test]
    fn formatting_round_trips_rationals() {
        for s in ["3/4", "-2", "17", "-5/9"] {
            assert_eq!(fmt_rat(&parse_rat(s).unwrap()), s);
        }
    }

    #[test]
    fn canonical_complex_forms() {
        assert_eq!(fmt_crat(&crat_zero()), "0");
        assert_eq!(fmt_crat(&crat_ratio(3, 4)), "3/4");
        assert_eq!(fmt_crat(&crat(rat_int(0), rat(1, 2))), "1/2i");
        assert_eq!(fmt_crat(&crat(rat(3, 4), rat(-1, 2))), "(3/4 - 1/2i)");
    }

    #[test]
    fn f64_conversion_is_exact() {
        let v = rat_from_f64(0.375).unwrap();
        assert_eq!(v, rat(3, 8));
    }
}
