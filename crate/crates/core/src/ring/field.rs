//! Coefficient fields: the rationals and prime fields.
//!
//! Every coefficient is stored as a [`BigRational`]. Over a prime field the
//! value is kept as an integer in `0..p`, so structural equality of
//! coefficients is field equality in both cases.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Coeff = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    /// Integers modulo a prime below 2^31.
    Prime(u32),
}

impl Field {
    pub fn from_characteristic(characteristic: u64) -> Result<Field> {
        if characteristic == 0 {
            return Ok(Field::Rationals);
        }
        if characteristic >= 1 << 31 {
            return Err(Error::invalid(format!(
                "characteristic {characteristic} is not below 2^31"
            )));
        }
        if !is_prime(characteristic) {
            return Err(Error::invalid(format!(
                "characteristic {characteristic} is not prime"
            )));
        }
        Ok(Field::Prime(characteristic as u32))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p as u64,
        }
    }

    /// Maps an arbitrary rational into the field. Fails over 𝔽_p when the
    /// denominator is divisible by p.
    pub fn try_normalize(&self, c: &BigRational) -> Option<Coeff> {
        match self {
            Field::Rationals => Some(c.clone()),
            Field::Prime(p) => {
                let p = *p as i64;
                let num = residue(c.numer(), p);
                let den = residue(c.denom(), p);
                if den == 0 {
                    return None;
                }
                let v = (num as i128 * inv_mod(den, p) as i128).rem_euclid(p as i128) as i64;
                Some(BigRational::from_integer(BigInt::from(v)))
            }
        }
    }

    pub fn normalize(&self, c: &BigRational) -> Coeff {
        self.try_normalize(c)
            .expect("denominator divisible by the field characteristic")
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        self.normalize(&BigRational::from_integer(BigInt::from(v)))
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match self {
            Field::Rationals => a + b,
            Field::Prime(p) => small(prime_val(a) + prime_val(b), *p),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match self {
            Field::Rationals => a - b,
            Field::Prime(p) => small(prime_val(a) - prime_val(b), *p),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match self {
            Field::Rationals => a * b,
            Field::Prime(p) => small(prime_val(a) * prime_val(b), *p),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match self {
            Field::Rationals => -a,
            Field::Prime(p) => small(-prime_val(a), *p),
        }
    }

    pub fn inv(&self, a: &Coeff) -> Option<Coeff> {
        if a.is_zero() {
            return None;
        }
        match self {
            Field::Rationals => Some(a.recip()),
            Field::Prime(p) => {
                let v = prime_val(a) as i64;
                Some(small(inv_mod(v, *p as i64) as i128, *p))
            }
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Option<Coeff> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }
}

fn prime_val(a: &Coeff) -> i128 {
    debug_assert!(a.is_integer());
    a.numer().to_i128().expect("prime field element fits in i128")
}

fn small(v: i128, p: u32) -> Coeff {
    BigRational::from_integer(BigInt::from(v.rem_euclid(p as i128)))
}

fn residue(v: &BigInt, p: i64) -> i64 {
    let r = v.mod_floor(&BigInt::from(p));
    r.to_i64().expect("residue fits")
}

fn inv_mod(a: i64, p: i64) -> i64 {
    // extended Euclid; p prime and a != 0 mod p
    let (mut old_r, mut r) = (a.rem_euclid(p), p);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    old_s.rem_euclid(p)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Formats a coefficient the way the polynomial printer expects: integers
/// bare, rationals as `num/den`.
pub(crate) fn format_coeff(c: &Coeff) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub(crate) fn is_one(c: &Coeff) -> bool {
    c.is_one()
}

pub(crate) fn is_negative(c: &Coeff) -> bool {
    c.is_negative()
}
