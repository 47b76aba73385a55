//! Exact Gaussian rationals `a + b·i` with `a, b ∈ ℚ`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Build a rational from small integers. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical `p/q` rendering (`p` alone when the denominator is 1).
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Exact square root of a nonnegative rational, when it is rational.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// `⌈r⌉` for a rational.
pub fn rational_ceil(r: &Rational) -> Rational {
    r.ceil()
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    re: Rational,
    im: Rational,
}

impl Scalar {
    pub fn new(re: Rational, im: Rational) -> Self {
        Scalar { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        Scalar { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(Rational::from_integer(n.into()))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar::from_rational(rat(num, den))
    }

    pub fn i() -> Self {
        Scalar { re: Rational::zero(), im: Rational::one() }
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// The rational value, if the imaginary part vanishes.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_real().then_some(&self.re)
    }

    pub fn conj(&self) -> Self {
        Scalar { re: self.re.clone(), im: -&self.im }
    }

    /// `|z|² = a² + b²`.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar { re: &self.re / &n, im: -&self.im / &n })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Canonical sign normalization used to pick a preferred square root:
    /// positive real part, or zero real part and positive imaginary part.
    pub fn is_principal(&self) -> bool {
        self.re.is_positive() || (self.re.is_zero() && !self.im.is_negative())
    }

    pub fn to_complex(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }

    pub fn lcm_denominator(&self) -> BigInt {
        num_integer::Integer::lcm(self.re.denom(), self.im.denom())
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar { re: Rational::zero(), im: Rational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::from_int(1)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::from_rational(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        Scalar { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        Scalar { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        Scalar {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -&self.re, im: -&self.im }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re, im: -self.im }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = &*self * o;
    }
}

impl fmt::Display for Scalar {
    /// `3/2`, `1-2i`, `-i`, `1/2i` (meaning `(1/2)·i`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rational(&self.re));
        }
        let mut out = String::new();
        if !self.re.is_zero() {
            out.push_str(&fmt_rational(&self.re));
            out.push(if self.im.is_negative() { '-' } else { '+' });
        } else if self.im.is_negative() {
            out.push('-');
        }
        let mag = self.im.abs();
        if !mag.is_one() {
            out.push_str(&fmt_rational(&mag));
        }
        out.push('i');
        f.write_str(&out)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts the canonical rendering (`a`, `a+bi`, `bi`, `-i`, ...) and
    /// falls back to any constant expression of the polynomial grammar.
    fn from_str(text: &str) -> Result<Self> {
        if let Some(s) = parse_simple_scalar(text) {
            return Ok(s);
        }
        let p = crate::parse::parse_poly(text, Some(&[] as &[String]))?;
        p.constant_value().ok_or(Error::Syntax {
            offset: 0,
            message: format!("'{text}' is not a constant"),
        })
    }
}

fn parse_simple_scalar(text: &str) -> Option<Scalar> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return None;
    }
    if !t.ends_with('i') {
        return parse_rational(&t).map(Scalar::from_rational);
    }
    let body = &t[..t.len() - 1];
    let body = body.strip_suffix('*').unwrap_or(body);
    // split the real part off at the last sign that is not leading
    let split = body
        .char_indices()
        .skip(1)
        .filter(|&(_, c)| c == '+' || c == '-')
        .map(|(i, _)| i)
        .last();
    let (re_text, im_text) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let re = parse_rational(re_text)?;
    let im = match im_text {
        "" | "+" => Rational::one(),
        "-" => -Rational::one(),
        s => parse_rational(s.strip_prefix('+').unwrap_or(s))?,
    };
    Some(Scalar::new(re, im))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(re: (i64, i64), im: (i64, i64)) -> Scalar {
        Scalar::new(rat(re.0, re.1), rat(im.0, im.1))
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::from_ratio(3, 2).to_string(), "3/2");
        assert_eq!(s((1, 1), (-2, 1)).to_string(), "1-2i");
        assert_eq!((-Scalar::i()).to_string(), "-i");
        assert_eq!(s((0, 1), (1, 2)).to_string(), "1/2i");
        assert_eq!(s((-1, 3), (5, 7)).to_string(), "-1/3+5/7i");
    }

    #[test]
    fn parse_round_trip() {
        for z in [
            s((1, 1), (-2, 1)),
            s((0, 1), (1, 2)),
            s((-1, 3), (5, 7)),
            Scalar::i(),
            -Scalar::i(),
            Scalar::from_ratio(-7, 4),
            Scalar::zero(),
        ] {
            assert_eq!(z.to_string().parse::<Scalar>().unwrap(), z);
        }
        assert_eq!("(1/2)*i".parse::<Scalar>().unwrap(), s((0, 1), (1, 2)));
        assert!("x".parse::<Scalar>().is_err());
    }

    #[test]
    fn division_by_zero_rejected() {
        assert_eq!(Scalar::zero().inv(), Err(Error::DivisionByZero));
        assert!(Scalar::one().checked_div(&Scalar::zero()).is_err());
    }

    #[test]
    fn inverse_exact() {
        let z = s((3, 4), (-5, 2));
        assert_eq!(&z * &z.inv().unwrap(), Scalar::one());
        assert_eq!(&Scalar::i() * &Scalar::i(), -Scalar::one());
    }
}
