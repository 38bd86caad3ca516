//! Elements of Q, Q(sqrt(-1)) and Q(sqrt(-3)).
//!
//! An element is stored as `re + im * s` where `s = sqrt(-d)`, `d = 1` for the
//! Gaussian field and `d = 3` for the Eisenstein field. The sixth root of unity
//! is `(1 + s)/2` in the Eisenstein field.

use super::rat::{format_rat, is_integer, parse_rat, rat, rat_int, Rat};
use crate::error::{Error, Result};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    #[serde(rename = "Q")]
    Rational,
    /// Q(sqrt(-1)) = Q(zeta_4).
    #[serde(rename = "Qi")]
    Gaussian,
    /// Q(sqrt(-3)) = Q(zeta_6).
    #[serde(rename = "Qw")]
    Eisenstein,
}

impl Field {
    /// The `d` in `s = sqrt(-d)`; zero for Q.
    pub fn d(self) -> i64 {
        match self {
            Field::Rational => 0,
            Field::Gaussian => 1,
            Field::Eisenstein => 3,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Field::Rational => "Q",
            Field::Gaussian => "Qi",
            Field::Eisenstein => "Qw",
        }
    }

    pub fn from_tag(tag: &str) -> Result<Field> {
        match tag {
            "Q" => Ok(Field::Rational),
            "Qi" => Ok(Field::Gaussian),
            "Qw" => Ok(Field::Eisenstein),
            other => Err(Error::Parse(format!("unknown field tag {other:?}"))),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElem {
    field: Field,
    re: Rat,
    im: Rat,
}

impl FieldElem {
    pub fn new(field: Field, re: Rat, im: Rat) -> Result<Self> {
        if field == Field::Rational && !im.is_zero() {
            return Err(Error::Parse(format!(
                "element of Q with imaginary part {}",
                format_rat(&im)
            )));
        }
        Ok(FieldElem { field, re, im })
    }

    pub fn from_rat(field: Field, re: Rat) -> Self {
        FieldElem {
            field,
            re,
            im: Rat::zero(),
        }
    }

    pub fn from_int(field: Field, n: i64) -> Self {
        Self::from_rat(field, rat_int(n))
    }

    pub fn zero(field: Field) -> Self {
        Self::from_int(field, 0)
    }

    pub fn one(field: Field) -> Self {
        Self::from_int(field, 1)
    }

    /// `sqrt(-d)`; fails over Q.
    pub fn sqrt_neg_d(field: Field) -> Result<Self> {
        Self::new(field, Rat::zero(), Rat::one())
    }

    /// `zeta_4 = sqrt(-1)`.
    pub fn zeta4() -> Self {
        FieldElem::new(Field::Gaussian, Rat::zero(), Rat::one()).unwrap()
    }

    /// `zeta_6 = (1 + sqrt(-3))/2`.
    pub fn zeta6() -> Self {
        FieldElem::new(Field::Eisenstein, rat(1, 2), rat(1, 2)).unwrap()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn re(&self) -> &Rat {
        &self.re
    }

    pub fn im(&self) -> &Rat {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        FieldElem {
            field: self.field,
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `x * conj(x) = re^2 + d im^2`.
    pub fn herm_norm(&self) -> Rat {
        &self.re * &self.re + rat_int(self.field.d()) * &self.im * &self.im
    }

    /// Membership in Z, Z[i] or Z[zeta_6]. For the Eisenstein ring the two
    /// coordinates must be both integers or both half-odd-integers.
    pub fn is_integral(&self) -> bool {
        match self.field {
            Field::Rational | Field::Gaussian => is_integer(&self.re) && is_integer(&self.im),
            Field::Eisenstein => {
                let two = rat_int(2);
                let a = &self.re * &two;
                let b = &self.im * &two;
                if !is_integer(&a) || !is_integer(&b) {
                    return false;
                }
                let diff = (a - b).to_integer();
                num_integer::Integer::is_even(&diff)
            }
        }
    }

    /// Coordinates `(a, b)` with `self = a + b*tau`, where `tau` is `sqrt(-1)`
    /// for the Gaussian field and `zeta_6` for the Eisenstein field.
    pub fn ring_coords(&self) -> (Rat, Rat) {
        match self.field {
            Field::Rational | Field::Gaussian => (self.re.clone(), self.im.clone()),
            Field::Eisenstein => {
                let b = &self.im * rat_int(2);
                (&self.re - &self.im, b)
            }
        }
    }

    /// Inverse of [`ring_coords`](Self::ring_coords).
    pub fn from_ring_coords(field: Field, a: Rat, b: Rat) -> Result<Self> {
        match field {
            Field::Rational | Field::Gaussian => FieldElem::new(field, a, b),
            Field::Eisenstein => {
                let half = rat(1, 2);
                let im = &b * &half;
                FieldElem::new(field, a + &im, im)
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            Err(Error::FieldMismatch {
                left: self.field,
                right: other.field,
            })
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(FieldElem {
            field: self.field,
            re: &self.re + &other.re,
            im: &self.im + &other.im,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(FieldElem {
            field: self.field,
            re: &self.re - &other.re,
            im: &self.im - &other.im,
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let d = rat_int(self.field.d());
        Ok(FieldElem {
            field: self.field,
            re: &self.re * &other.re - d * &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        })
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.herm_norm();
        let c = self.conjugate();
        Ok(FieldElem {
            field: self.field,
            re: &c.re / &n,
            im: &c.im / &n,
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        self.checked_mul(&other.inverse()?)
    }

    pub fn scale(&self, r: &Rat) -> Self {
        FieldElem {
            field: self.field,
            re: &self.re * r,
            im: &self.im * r,
        }
    }

    /// Parses the exact encoding produced by `Display`: `"a/b"` or
    /// `"a/b+c/d*s"`; integers and a bare `s` are accepted too.
    pub fn parse(field: Field, text: &str) -> Result<Self> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse("empty field element".into()));
        }
        let Some(body) = t.strip_suffix('s') else {
            return FieldElem::new(field, parse_rat(&t)?, Rat::zero());
        };
        if field == Field::Rational {
            return Err(Error::Parse(format!("{text:?}: Q has no sqrt(-d) part")));
        }
        let body = body.strip_suffix('*').unwrap_or(body);
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        let (re_txt, im_txt) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("", body),
        };
        let re = if re_txt.is_empty() {
            Rat::zero()
        } else {
            parse_rat(re_txt)?
        };
        let im = match im_txt {
            "" | "+" => Rat::one(),
            "-" => -Rat::one(),
            other => parse_rat(other.strip_prefix('+').unwrap_or(other))?,
        };
        FieldElem::new(field, re, im)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field == Field::Rational {
            return f.write_str(&format_rat(&self.re));
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(
            f,
            "{}{}{}*s",
            format_rat(&self.re),
            sign,
            format_rat(&self.im.abs())
        )
    }
}

impl Serialize for FieldElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

// Operator sugar. These panic on mixed fields; use the `checked_*` methods for
// values that have not been validated to share a field.
macro_rules! forward_op {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&FieldElem> for &FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: &FieldElem) -> FieldElem {
                self.$checked(rhs).expect("mixed-field arithmetic")
            }
        }
        impl $tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: FieldElem) -> FieldElem {
                (&self).$checked(&rhs).expect("mixed-field arithmetic")
            }
        }
    };
}

forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem {
            field: self.field,
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(a: i64, b: i64) -> FieldElem {
        FieldElem::new(Field::Gaussian, rat_int(a), rat_int(b)).unwrap()
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(gi(1, 1).conjugate(), gi(1, -1));
        let q = FieldElem::from_rat(Field::Rational, rat(5, 3));
        assert_eq!(q.conjugate(), q);
        let z = FieldElem::zeta6();
        let zbar = FieldElem::new(Field::Eisenstein, rat(1, 2), rat(-1, 2)).unwrap();
        assert_eq!(z.conjugate(), zbar);
    }

    #[test]
    fn norm_examples() {
        assert_eq!(gi(1, 1).herm_norm(), rat_int(2));
        let one_plus_z6 = FieldElem::one(Field::Eisenstein) + FieldElem::zeta6();
        assert_eq!(one_plus_z6.herm_norm(), rat_int(3));
        assert_eq!(FieldElem::zero(Field::Gaussian).herm_norm(), rat_int(0));
    }

    #[test]
    fn zeta6_is_primitive_sixth_root() {
        let z = FieldElem::zeta6();
        let mut p = FieldElem::one(Field::Eisenstein);
        for k in 1..=6 {
            p = &p * &z;
            assert_eq!(p.is_one(), k == 6);
        }
        // zeta6 - conj(zeta6) = sqrt(-3)
        assert_eq!(&z - &z.conjugate(), FieldElem::sqrt_neg_d(Field::Eisenstein).unwrap());
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = FieldElem::one(Field::Gaussian);
        let b = FieldElem::one(Field::Eisenstein);
        assert!(matches!(a.checked_add(&b), Err(Error::FieldMismatch { .. })));
        assert!(a.checked_mul(&FieldElem::one(Field::Rational)).is_err());
        assert!(FieldElem::new(Field::Rational, rat_int(1), rat_int(1)).is_err());
    }

    #[test]
    fn eisenstein_integrality() {
        let half = FieldElem::new(Field::Eisenstein, rat(1, 2), rat(1, 2)).unwrap();
        assert!(half.is_integral());
        let mixed = FieldElem::new(Field::Eisenstein, rat(1, 2), rat_int(1)).unwrap();
        assert!(!mixed.is_integral());
        assert!(FieldElem::sqrt_neg_d(Field::Eisenstein).unwrap().is_integral());
        let gauss_half = FieldElem::new(Field::Gaussian, rat(1, 2), rat(1, 2)).unwrap();
        assert!(!gauss_half.is_integral());
    }

    #[test]
    fn ring_coords_roundtrip() {
        let z = FieldElem::zeta6();
        assert_eq!(z.ring_coords(), (rat_int(0), rat_int(1)));
        let s = FieldElem::sqrt_neg_d(Field::Eisenstein).unwrap();
        // sqrt(-3) = 2 zeta6 - 1
        assert_eq!(s.ring_coords(), (rat_int(-1), rat_int(2)));
        let back = FieldElem::from_ring_coords(Field::Eisenstein, rat_int(-1), rat_int(2)).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn display_and_parse() {
        let x = FieldElem::new(Field::Eisenstein, rat_int(3), rat(-1, 2)).unwrap();
        assert_eq!(x.to_string(), "3/1-1/2*s");
        assert_eq!(FieldElem::parse(Field::Eisenstein, "3/1-1/2*s").unwrap(), x);
        assert_eq!(
            FieldElem::parse(Field::Gaussian, "s").unwrap(),
            FieldElem::zeta4()
        );
        assert_eq!(FieldElem::parse(Field::Gaussian, "-s").unwrap(), -FieldElem::zeta4());
        assert_eq!(FieldElem::parse(Field::Gaussian, "-2").unwrap(), gi(-2, 0));
        assert_eq!(FieldElem::parse(Field::Gaussian, "-1/1+1/1*s").unwrap(), gi(-1, 1));
        assert!(FieldElem::parse(Field::Rational, "1+s").is_err());
        assert_eq!(FieldElem::parse(Field::Rational, "7/14").unwrap().to_string(), "1/2");
    }

    #[test]
    fn division() {
        let a = gi(3, 4);
        let b = gi(1, 1);
        let q = a.checked_div(&b).unwrap();
        assert_eq!(&q * &b, a);
        assert_eq!(
            FieldElem::zero(Field::Gaussian).inverse(),
            Err(Error::DivisionByZero)
        );
    }
}
