//! Exact scalars in the eighth cyclotomic field and its real subfield.
//!
//! A [`Scalar`] is `a0 + a1*z + a2*z^2 + a3*z^3` with rational coefficients,
//! where `z = exp(i*pi/4)` satisfies `z^4 = -1`. The field contains
//! `i = z^2` and `sqrt2 = z - z^3`, which is everything the computations in
//! this crate need: Gaussian-rational matrix entries, their conjugates, and
//! square-root-of-two normalizations, all with decidable equality and sign.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Rational coefficient type used throughout the crate.
pub type Rat = BigRational;

/// Errors from scalar arithmetic and parsing.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar from {0:?}")]
    Parse(String),
    #[error("scalar {0} is not real")]
    NotReal(String),
}

/// Element of the eighth cyclotomic field, as coefficients of `1, z, z^2, z^3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scalar {
    c: [Rat; 4],
}

fn rat_zero() -> Rat {
    Rat::zero()
}

fn rat_from_i64(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `p` or `p/q` into a rational, rejecting zero denominators.
fn rat_from_str(s: &str) -> Result<Rat, NumError> {
    let err = || NumError::Parse(s.to_string());
    let (numer, denom) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let numer = BigInt::from_str(numer.trim()).map_err(|_| err())?;
    let denom = BigInt::from_str(denom.trim()).map_err(|_| err())?;
    if denom.is_zero() {
        return Err(err());
    }
    Ok(Rat::new(numer, denom))
}

fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Scalar {
    pub fn new(c0: Rat, c1: Rat, c2: Rat, c3: Rat) -> Self {
        Scalar { c: [c0, c1, c2, c3] }
    }

    pub fn zero() -> Self {
        Scalar::new(rat_zero(), rat_zero(), rat_zero(), rat_zero())
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::new(rat_from_i64(n), rat_zero(), rat_zero(), rat_zero())
    }

    pub fn from_rat(r: Rat) -> Self {
        Scalar::new(r, rat_zero(), rat_zero(), rat_zero())
    }

    /// `p/q` as a scalar; panics if `q == 0` (intended for literals).
    pub fn rational(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator in scalar literal");
        Scalar::from_rat(Rat::new(BigInt::from(p), BigInt::from(q)))
    }

    /// The imaginary unit `i = z^2`.
    pub fn i() -> Self {
        Scalar::new(rat_zero(), rat_zero(), Rat::one(), rat_zero())
    }

    /// `sqrt2 = z - z^3`.
    pub fn sqrt2() -> Self {
        Scalar::new(rat_zero(), Rat::one(), rat_zero(), -Rat::one())
    }

    /// `1/sqrt2 = sqrt2/2`.
    pub fn inv_sqrt2() -> Self {
        let half = Rat::new(BigInt::from(1), BigInt::from(2));
        Scalar::new(rat_zero(), half.clone(), rat_zero(), -half)
    }

    /// Gaussian integer `re + im*i`.
    pub fn gauss(re: i64, im: i64) -> Self {
        Scalar::new(rat_from_i64(re), rat_zero(), rat_from_i64(im), rat_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rat::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero()
    }

    /// True when the value lies in the real subfield `a + b*sqrt2`.
    pub fn is_real(&self) -> bool {
        self.c[2].is_zero() && self.c[1] == -self.c[3].clone()
    }

    pub fn is_rational(&self) -> bool {
        self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero()
    }

    pub fn coeffs(&self) -> &[Rat; 4] {
        &self.c
    }

    /// Complex conjugate (the Galois map `z -> z^7 = -z^3`).
    pub fn conj(&self) -> Scalar {
        Scalar::new(
            self.c[0].clone(),
            -self.c[3].clone(),
            -self.c[2].clone(),
            -self.c[1].clone(),
        )
    }

    /// Galois image under `z -> z^k` for odd `k` (mod 8).
    fn galois(&self, k: u8) -> Scalar {
        let [a0, a1, a2, a3] = self.c.clone();
        match k % 8 {
            1 => Scalar::new(a0, a1, a2, a3),
            3 => Scalar::new(a0, a3, -a2, a1),
            5 => Scalar::new(a0, -a1, a2, -a3),
            7 => Scalar::new(a0, -a3, -a2, -a1),
            _ => unreachable!("galois index must be odd"),
        }
    }

    fn add_ref(&self, rhs: &Scalar) -> Scalar {
        Scalar::new(
            &self.c[0] + &rhs.c[0],
            &self.c[1] + &rhs.c[1],
            &self.c[2] + &rhs.c[2],
            &self.c[3] + &rhs.c[3],
        )
    }

    fn sub_ref(&self, rhs: &Scalar) -> Scalar {
        Scalar::new(
            &self.c[0] - &rhs.c[0],
            &self.c[1] - &rhs.c[1],
            &self.c[2] - &rhs.c[2],
            &self.c[3] - &rhs.c[3],
        )
    }

    fn mul_ref(&self, rhs: &Scalar) -> Scalar {
        let mut out = [rat_zero(), rat_zero(), rat_zero(), rat_zero()];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let term = a * b;
                let k = (i + j) % 4;
                if i + j >= 4 {
                    out[k] -= term;
                } else {
                    out[k] += term;
                }
            }
        }
        let [o0, o1, o2, o3] = out;
        Scalar::new(o0, o1, o2, o3)
    }

    fn neg_ref(&self) -> Scalar {
        Scalar::new(
            -self.c[0].clone(),
            -self.c[1].clone(),
            -self.c[2].clone(),
            -self.c[3].clone(),
        )
    }

    /// Multiply every coefficient by a rational.
    pub fn scale_rat(&self, r: &Rat) -> Scalar {
        Scalar::new(&self.c[0] * r, &self.c[1] * r, &self.c[2] * r, &self.c[3] * r)
    }

    /// Multiplicative inverse via the Galois norm: the product of all four
    /// Galois conjugates is rational, so `1/x = (s3*s5*s7)(x) / norm(x)`.
    pub fn inv(&self) -> Result<Scalar, NumError> {
        if self.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        let w = self.galois(3).mul_ref(&self.galois(5)).mul_ref(&self.galois(7));
        let norm = self.mul_ref(&w);
        debug_assert!(
            norm.is_rational(),
            "Galois norm must be rational, got {norm}"
        );
        let n = norm.c[0].clone();
        if n.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        Ok(w.scale_rat(&n.recip()))
    }

    /// Real part as an element of the real subfield.
    pub fn re_part(&self) -> RealScalar {
        let two = rat_from_i64(2);
        RealScalar::new(self.c[0].clone(), (&self.c[1] - &self.c[3]) / &two)
    }

    /// Imaginary part (the real number `y` in `x + i*y`).
    pub fn im_part(&self) -> RealScalar {
        let two = rat_from_i64(2);
        RealScalar::new(self.c[2].clone(), (&self.c[1] + &self.c[3]) / &two)
    }

    /// Squared modulus `x * conj(x)` as a real-subfield element.
    pub fn abs2(&self) -> RealScalar {
        let p = self.mul_ref(&self.conj());
        debug_assert!(p.is_real(), "x*conj(x) must be real, got {p}");
        p.re_part()
    }

    /// Converts to the real subfield, failing when the value is not real.
    pub fn to_real(&self) -> Result<RealScalar, NumError> {
        if self.is_real() {
            Ok(self.re_part())
        } else {
            Err(NumError::NotReal(self.to_string()))
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$imp(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$imp(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$imp(&rhs)
            }
        }
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$imp(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Div for &Scalar {
    type Output = Result<Scalar, NumError>;
    fn div(self, rhs: &Scalar) -> Result<Scalar, NumError> {
        Ok(self.mul_ref(&rhs.inv()?))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let re = self.re_part();
        let im = self.im_part();
        let terms: [(Rat, &str); 4] = [
            (re.a, ""),
            (re.b, "sqrt2"),
            (im.a, "i"),
            (im.b, "i*sqrt2"),
        ];
        let mut rendered = Vec::new();
        for (coeff, sym) in terms {
            if coeff.is_zero() {
                continue;
            }
            let body = if sym.is_empty() {
                rat_to_string(&coeff)
            } else if coeff.is_one() {
                sym.to_string()
            } else if (-coeff.clone()).is_one() {
                format!("-{sym}")
            } else {
                format!("{}*{}", rat_to_string(&coeff), sym)
            };
            rendered.push(body);
        }
        if rendered.is_empty() {
            return write!(f, "0");
        }
        let mut out = rendered[0].clone();
        for term in &rendered[1..] {
            if let Some(rest) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(term);
            }
        }
        write!(f, "{out}")
    }
}

impl FromStr for Scalar {
    type Err = NumError;

    /// Shorthand forms: optional sign, then a rational, `i`, `sqrt2`, a
    /// rational with an `i` or `*i` suffix, and any of these over `sqrt2`
    /// (e.g. `1`, `-3/4`, `i`, `2i`, `sqrt2`, `1/sqrt2`, `i/sqrt2`).
    fn from_str(input: &str) -> Result<Self, NumError> {
        let err = || NumError::Parse(input.to_string());
        let mut s = input.trim();
        if s.is_empty() {
            return Err(err());
        }
        let mut negative = false;
        if let Some(rest) = s.strip_prefix('-') {
            negative = true;
            s = rest.trim_start();
        } else if let Some(rest) = s.strip_prefix('+') {
            s = rest.trim_start();
        }
        let mut over_sqrt2 = false;
        if let Some(rest) = s.strip_suffix("/sqrt2") {
            over_sqrt2 = true;
            s = rest;
        }
        let mut times_sqrt2 = false;
        if s == "sqrt2" {
            times_sqrt2 = true;
            s = "";
        } else if let Some(rest) = s.strip_suffix("*sqrt2").or_else(|| s.strip_suffix("sqrt2")) {
            times_sqrt2 = true;
            s = rest;
        }
        let mut imaginary = false;
        if s == "i" {
            imaginary = true;
            s = "";
        } else if let Some(rest) = s.strip_suffix("*i").or_else(|| s.strip_suffix('i')) {
            imaginary = true;
            s = rest;
        }
        let coeff = if s.is_empty() {
            if !imaginary && !times_sqrt2 && !over_sqrt2 {
                return Err(err());
            }
            Rat::one()
        } else {
            if s.starts_with('+') || s.starts_with('-') {
                return Err(err());
            }
            rat_from_str(s).map_err(|_| err())?
        };
        let mut value = Scalar::from_rat(coeff);
        if imaginary {
            value = value * Scalar::i();
        }
        if times_sqrt2 {
            value = value * Scalar::sqrt2();
        }
        if over_sqrt2 {
            value = value * Scalar::inv_sqrt2();
        }
        if negative {
            value = -value;
        }
        Ok(value)
    }
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    a0: String,
    a1: String,
    a2: String,
    a3: String,
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ScalarRepr {
            a0: rat_to_string(&self.c[0]),
            a1: rat_to_string(&self.c[1]),
            a2: rat_to_string(&self.c[2]),
            a3: rat_to_string(&self.c[3]),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Wire {
            Repr(ScalarRepr),
            Short(String),
        }
        match Wire::deserialize(deserializer)? {
            Wire::Repr(r) => {
                let get = |s: &str| rat_from_str(s).map_err(D::Error::custom);
                Ok(Scalar::new(get(&r.a0)?, get(&r.a1)?, get(&r.a2)?, get(&r.a3)?))
            }
            Wire::Short(s) => Scalar::from_str(&s).map_err(D::Error::custom),
        }
    }
}

/// Element `a + b*sqrt2` of the real subfield, with exact sign decisions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealScalar {
    a: Rat,
    b: Rat,
}

impl RealScalar {
    pub fn new(a: Rat, b: Rat) -> Self {
        RealScalar { a, b }
    }

    pub fn zero() -> Self {
        RealScalar::new(rat_zero(), rat_zero())
    }

    pub fn from_rat(a: Rat) -> Self {
        RealScalar::new(a, rat_zero())
    }

    pub fn rational_part(&self) -> &Rat {
        &self.a
    }

    pub fn sqrt2_part(&self) -> &Rat {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Exact sign in `{-1, 0, 1}`. When the two terms disagree in sign the
    /// comparison `a^2` vs `2*b^2` decides which dominates; equality there is
    /// impossible for nonzero rationals since sqrt2 is irrational.
    pub fn sign(&self) -> i32 {
        let sa = rat_sign(&self.a);
        let sb = rat_sign(&self.b);
        if sa == 0 {
            return sb;
        }
        if sb == 0 || sa == sb {
            return sa;
        }
        let a2 = &self.a * &self.a;
        let b2 = (&self.b * &self.b) * rat_from_i64(2);
        match a2.cmp(&b2) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => {
                debug_assert!(false, "a^2 = 2*b^2 is impossible for nonzero rationals");
                0
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn to_scalar(&self) -> Scalar {
        Scalar::from_rat(self.a.clone()) + Scalar::from_rat(self.b.clone()) * Scalar::sqrt2()
    }

    /// Divide by a nonzero rational.
    pub fn div_rat(&self, r: &Rat) -> Result<RealScalar, NumError> {
        if r.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        Ok(RealScalar::new(&self.a / r, &self.b / r))
    }
}

fn rat_sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl Add for &RealScalar {
    type Output = RealScalar;
    fn add(self, rhs: &RealScalar) -> RealScalar {
        RealScalar::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &RealScalar {
    type Output = RealScalar;
    fn sub(self, rhs: &RealScalar) -> RealScalar {
        RealScalar::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &RealScalar {
    type Output = RealScalar;
    fn mul(self, rhs: &RealScalar) -> RealScalar {
        let two = rat_from_i64(2);
        RealScalar::new(
            &self.a * &rhs.a + &(&self.b * &rhs.b) * &two,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl Neg for &RealScalar {
    type Output = RealScalar;
    fn neg(self) -> RealScalar {
        RealScalar::new(-self.a.clone(), -self.b.clone())
    }
}

impl PartialOrd for RealScalar {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RealScalar {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self - other).sign().cmp(&0)
    }
}

impl fmt::Display for RealScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_scalar())
    }
}

#[derive(Serialize, Deserialize)]
struct RealRepr {
    a: String,
    b: String,
}

impl Serialize for RealScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RealRepr {
            a: rat_to_string(&self.a),
            b: rat_to_string(&self.b),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RealScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let r = RealRepr::deserialize(deserializer)?;
        Ok(RealScalar::new(
            rat_from_str(&r.a).map_err(D::Error::custom)?,
            rat_from_str(&r.b).map_err(D::Error::custom)?,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta() -> Scalar {
        Scalar::new(rat_zero(), Rat::one(), rat_zero(), rat_zero())
    }

    #[test]
    fn eighth_root_relations() {
        let z = zeta();
        let z2 = &z * &z;
        let z4 = &z2 * &z2;
        assert_eq!(z4, -Scalar::one());
        assert_eq!(&z4 * &z4, Scalar::one());
        assert_eq!(z2, Scalar::i());
        assert_eq!(&Scalar::i() * &Scalar::i(), -Scalar::one());
    }

    #[test]
    fn sqrt2_squares_to_two() {
        assert_eq!(&Scalar::sqrt2() * &Scalar::sqrt2(), Scalar::from_int(2));
        assert_eq!(&Scalar::inv_sqrt2() * &Scalar::sqrt2(), Scalar::one());
    }

    #[test]
    fn conjugation_matches_galois_seven() {
        let z = zeta();
        // conj(z) = z^7 = -z^3.
        assert_eq!(z.conj(), Scalar::new(rat_zero(), rat_zero(), rat_zero(), -Rat::one()));
        let x = Scalar::gauss(3, -2) + Scalar::sqrt2();
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn inverse_of_inv_sqrt2_is_sqrt2() {
        assert_eq!(Scalar::inv_sqrt2().inv().unwrap(), Scalar::sqrt2());
    }

    #[test]
    fn inverse_of_composite_element() {
        let x = Scalar::gauss(3, 5) + Scalar::sqrt2() * Scalar::gauss(-1, 2);
        let inv = x.inv().unwrap();
        assert_eq!(&x * &inv, Scalar::one());
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(Scalar::zero().inv(), Err(NumError::DivisionByZero));
    }

    #[test]
    fn real_imaginary_decomposition_of_zeta() {
        // z = (sqrt2 + i*sqrt2)/2.
        let z = zeta();
        let half = Rat::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(z.re_part(), RealScalar::new(rat_zero(), half.clone()));
        assert_eq!(z.im_part(), RealScalar::new(rat_zero(), half));
        assert!(!z.is_real());
        assert!((z.clone() + z.conj()).is_real());
    }

    #[test]
    fn squared_modulus() {
        assert_eq!(zeta().abs2(), RealScalar::from_rat(Rat::one()));
        assert_eq!(Scalar::gauss(1, 1).abs2(), RealScalar::from_rat(rat_from_i64(2)));
        let x = Scalar::one() + Scalar::sqrt2();
        // |1+sqrt2|^2 = 3 + 2*sqrt2.
        assert_eq!(x.abs2(), RealScalar::new(rat_from_i64(3), rat_from_i64(2)));
    }

    #[test]
    fn real_sign_decisions() {
        // -3 + 2*sqrt2 is negative: 9 > 8.
        let x = RealScalar::new(rat_from_i64(-3), rat_from_i64(2));
        assert_eq!(x.sign(), -1);
        // 2 - sqrt2 is positive: 4 > 2.
        assert_eq!(RealScalar::new(rat_from_i64(2), rat_from_i64(-1)).sign(), 1);
        // 1 - sqrt2 is negative: 1 < 2.
        assert_eq!(RealScalar::new(rat_from_i64(1), rat_from_i64(-1)).sign(), -1);
        assert_eq!(RealScalar::zero().sign(), 0);
        // Ordering agrees with sign of the difference.
        let three = RealScalar::from_rat(rat_from_i64(3));
        let rt = RealScalar::new(rat_zero(), Rat::one());
        assert!(rt < three && three > rt);
    }

    #[test]
    fn shorthand_parsing() {
        let cases = [
            ("1", Scalar::one()),
            ("i", Scalar::i()),
            ("1/2", Scalar::rational(1, 2)),
            ("-3/4", Scalar::rational(-3, 4)),
            ("sqrt2", Scalar::sqrt2()),
            ("1/sqrt2", Scalar::inv_sqrt2()),
            ("i/sqrt2", Scalar::i() * Scalar::inv_sqrt2()),
            ("2i", Scalar::gauss(0, 2)),
            ("-2*i", Scalar::gauss(0, -2)),
            ("3*sqrt2", Scalar::from_int(3) * Scalar::sqrt2()),
            ("0", Scalar::zero()),
        ];
        for (text, want) in cases {
            assert_eq!(Scalar::from_str(text).unwrap(), want, "parsing {text:?}");
        }
        for bad in ["", "foo", "1/0", "--1", "i2", "sqrt3"] {
            assert!(Scalar::from_str(bad).is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn json_round_trip_and_shorthand_input() {
        let x = Scalar::i() * Scalar::inv_sqrt2();
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, r#"{"a0":"0","a1":"1/2","a2":"0","a3":"1/2"}"#);
        assert_eq!(serde_json::from_str::<Scalar>(&json).unwrap(), x);
        assert_eq!(serde_json::from_str::<Scalar>(r#""i/sqrt2""#).unwrap(), x);
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(Scalar::gauss(1, -1).to_string(), "1 - i");
        assert_eq!(Scalar::inv_sqrt2().to_string(), "1/2*sqrt2");
        let x = Scalar::rational(-3, 2) + Scalar::i() * Scalar::sqrt2();
        assert_eq!(x.to_string(), "-3/2 + i*sqrt2");
    }
}
