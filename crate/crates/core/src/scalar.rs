//! Exact scalar arithmetic over the Gaussian rationals Q(i).
//!
//! Every value is kept in canonical reduced form (coprime numerator and
//! denominator, positive denominator), so equality is plain structural
//! equality and rendering is deterministic.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Rational = num_rational::BigRational;

/// `re + im*i` with arbitrary-precision rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

/// Rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational::real(rat(n, 1))
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational {
            re,
            im: Rational::zero(),
        }
    }

    pub fn imaginary(im: Rational) -> Self {
        GaussianRational {
            re: Rational::zero(),
            im,
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        GaussianRational::from_int(1)
    }

    pub fn i() -> Self {
        GaussianRational::imaginary(Rational::one())
    }

    /// `i^k`, cycling with period 4.
    pub fn i_pow(k: usize) -> Self {
        match k % 4 {
            0 => Self::one(),
            1 => Self::i(),
            2 => -Self::one(),
            _ => -Self::i(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `re^2 + im^2`, the squared modulus. Zero only for zero.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "division by zero");
        GaussianRational {
            re: &self.re / &n,
            im: -(&self.im / &n),
        }
    }

    /// Rough size in bits, used to prefer small pivots during elimination.
    pub fn bit_size(&self) -> u64 {
        self.re.numer().bits()
            + self.re.denom().bits()
            + self.im.numer().bits()
            + self.im.denom().bits()
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> Self {
        GaussianRational {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl<'a> Add<&'a GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &'a GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> Self {
        GaussianRational {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl<'a> Sub<&'a GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &'a GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> Self {
        (&self).mul(&rhs)
    }
}

impl<'a> Mul<&'a GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &'a GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = (&*self).mul(rhs);
    }
}

impl Div for GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: Self) -> Self {
        (&self).div(&rhs)
    }
}

impl<'a> Div<&'a GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &'a GaussianRational) -> GaussianRational {
        self.mul(&rhs.inv())
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> Self {
        GaussianRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

/// Canonical rational rendering: `n` when the denominator is 1, else `n/d`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    let mut parts = s.splitn(2, '/');
    let numer: BigInt = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    let denom: BigInt = match parts.next() {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

impl fmt::Display for GaussianRational {
    /// Canonical form with no whitespace: `0`, `3/2`, `i`, `-2/5*i`, `1/2-3/4*i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn imag_body(im: &Rational) -> String {
            let a = im.abs();
            if a.is_one() {
                "i".to_string()
            } else {
                format!("{}*i", format_rational(&a))
            }
        }
        if self.im.is_zero() {
            return write!(f, "{}", format_rational(&self.re));
        }
        if self.re.is_zero() {
            let sign = if self.im.is_negative() { "-" } else { "" };
            return write!(f, "{}{}", sign, imag_body(&self.im));
        }
        let sign = if self.im.is_negative() { "-" } else { "+" };
        write!(
            f,
            "{}{}{}",
            format_rational(&self.re),
            sign,
            imag_body(&self.im)
        )
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("bad scalar {s:?}"));
        if s.is_empty() || s.contains(char::is_whitespace) {
            return Err(bad());
        }
        let parse_imag = |body: &str| -> Result<Rational, Error> {
            // `body` is the part before `*i`, or empty for a bare `i`.
            if body.is_empty() {
                Ok(Rational::one())
            } else {
                let body = body.strip_suffix('*').ok_or_else(bad)?;
                parse_rational(body)
            }
        };
        // A sign past position 0 separates the real and imaginary parts.
        let split = s
            .char_indices()
            .skip(1)
            .find(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k);
        match split {
            Some(k) => {
                let re = parse_rational(&s[..k])?;
                let (sign, rest) = (&s[k..k + 1], &s[k + 1..]);
                let body = rest.strip_suffix('i').ok_or_else(bad)?;
                let mut im = parse_imag(body)?;
                if sign == "-" {
                    im = -im;
                }
                Ok(GaussianRational::new(re, im))
            }
            None => match s.strip_suffix('i') {
                Some(body) => {
                    let (neg, body) = match body.strip_prefix('-') {
                        Some(b) => (true, b),
                        None => (false, body),
                    };
                    let mut im = parse_imag(body)?;
                    if neg {
                        im = -im;
                    }
                    Ok(GaussianRational::imaginary(im))
                }
                None => Ok(GaussianRational::real(parse_rational(s)?)),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: Rational, im: Rational) -> GaussianRational {
        GaussianRational::new(re, im)
    }

    #[test]
    fn arithmetic_routes_agree_on_canonical_form() {
        assert_eq!(rat(1, 2) + rat(1, 3), rat(5, 6));
        assert_eq!(rat(2, 4), rat(1, 2));
        let a = g(rat(1, 2), rat(-1, 3));
        let b = g(rat(3, 4), rat(2, 1));
        let lhs = (&a + &b) * (&a + &b).clone();
        let sum = &a + &b;
        let rhs = &sum * &sum;
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn complex_multiplication() {
        let a = g(rat(1, 1), rat(2, 1));
        let b = g(rat(3, 1), rat(-1, 1));
        assert_eq!(&a * &b, g(rat(5, 1), rat(5, 1)));
        assert_eq!(
            GaussianRational::i() * GaussianRational::i(),
            -GaussianRational::one()
        );
    }

    #[test]
    fn inverse_and_division() {
        let a = g(rat(1, 1), rat(1, 1));
        assert_eq!(&a * &a.inv(), GaussianRational::one());
        let b = g(rat(-2, 3), rat(5, 7));
        assert_eq!(&(&a / &b) * &b, a);
    }

    #[test]
    fn i_powers_cycle() {
        assert_eq!(GaussianRational::i_pow(0), GaussianRational::one());
        assert_eq!(GaussianRational::i_pow(1), GaussianRational::i());
        assert_eq!(GaussianRational::i_pow(2), -GaussianRational::one());
        assert_eq!(GaussianRational::i_pow(3), -GaussianRational::i());
        assert_eq!(GaussianRational::i_pow(6), -GaussianRational::one());
    }

    #[test]
    fn display_is_canonical() {
        let cases = [
            (g(rat(0, 1), rat(0, 1)), "0"),
            (g(rat(5, 1), rat(0, 1)), "5"),
            (g(rat(-3, 2), rat(0, 1)), "-3/2"),
            (g(rat(0, 1), rat(1, 1)), "i"),
            (g(rat(0, 1), rat(-1, 1)), "-i"),
            (g(rat(0, 1), rat(2, 1)), "2*i"),
            (g(rat(0, 1), rat(-2, 5)), "-2/5*i"),
            (g(rat(1, 2), rat(-3, 4)), "1/2-3/4*i"),
            (g(rat(-1, 1), rat(1, 1)), "-1+i"),
            (g(rat(2, 1), rat(-1, 1)), "2-i"),
        ];
        for (value, text) in cases {
            assert_eq!(value.to_string(), text);
            let back: GaussianRational = text.parse().unwrap();
            assert_eq!(back, value, "round trip of {text}");
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "1/0", "1 + i", "i*i", "2**i", "++i", "1/2/3"] {
            assert!(
                s.parse::<GaussianRational>().is_err(),
                "{s:?} should not parse"
            );
        }
    }
}
