//! Coefficient fields: the rationals and prime fields of odd characteristic.

use alloc::string::{String, ToString};
use core::fmt;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Description of the coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Q,
    Fp(u64),
}

impl Field {
    /// Builds a prime field, rejecting characteristic 2 and composites.
    pub fn prime(p: u64) -> Result<Field> {
        if p == 2 || !is_prime_u64(p) {
            return Err(Error::BadModulus);
        }
        Ok(Field::Fp(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Q => 0,
            Field::Fp(p) => *p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Q => write!(f, "q"),
            Field::Fp(p) => write!(f, "fp:{p}"),
        }
    }
}

/// An exact element of the configured field. Rationals are kept reduced with
/// positive denominator; prime-field values as least nonnegative residues.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldElem {
    Q(BigRational),
    Fp { p: u64, val: u64 },
}

impl FieldElem {
    pub fn zero(field: Field) -> FieldElem {
        match field {
            Field::Q => FieldElem::Q(BigRational::zero()),
            Field::Fp(p) => FieldElem::Fp { p, val: 0 },
        }
    }

    pub fn one(field: Field) -> FieldElem {
        match field {
            Field::Q => FieldElem::Q(BigRational::one()),
            Field::Fp(p) => FieldElem::Fp { p, val: 1 },
        }
    }

    pub fn from_i64(field: Field, n: i64) -> FieldElem {
        match field {
            Field::Q => FieldElem::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Fp(p) => FieldElem::Fp {
                p,
                val: ((n as i128).rem_euclid(p as i128)) as u64,
            },
        }
    }

    /// Parses a decimal integer of arbitrary length.
    pub fn from_decimal(field: Field, digits: &str, negative: bool) -> Option<FieldElem> {
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        match field {
            Field::Q => {
                let mut n: BigInt = digits.parse().ok()?;
                if negative {
                    n = -n;
                }
                Some(FieldElem::Q(BigRational::from_integer(n)))
            }
            Field::Fp(p) => {
                let mut val: u64 = 0;
                for b in digits.bytes() {
                    let d = (b - b'0') as u128;
                    val = ((val as u128 * 10 + d) % p as u128) as u64;
                }
                if negative && val != 0 {
                    val = p - val;
                }
                Some(FieldElem::Fp { p, val })
            }
        }
    }

    pub fn field(&self) -> Field {
        match self {
            FieldElem::Q(_) => Field::Q,
            FieldElem::Fp { p, .. } => Field::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Q(r) => r.is_zero(),
            FieldElem::Fp { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Q(r) => r.is_one(),
            FieldElem::Fp { val, .. } => *val == 1,
        }
    }

    pub fn add(&self, other: &FieldElem) -> FieldElem {
        match (self, other) {
            (FieldElem::Q(a), FieldElem::Q(b)) => FieldElem::Q(a + b),
            (FieldElem::Fp { p, val: a }, FieldElem::Fp { p: q, val: b }) if p == q => {
                FieldElem::Fp {
                    p: *p,
                    val: ((*a as u128 + *b as u128) % *p as u128) as u64,
                }
            }
            _ => panic!("field mismatch"),
        }
    }

    pub fn sub(&self, other: &FieldElem) -> FieldElem {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FieldElem {
        match self {
            FieldElem::Q(a) => FieldElem::Q(-a),
            FieldElem::Fp { p, val } => FieldElem::Fp {
                p: *p,
                val: if *val == 0 { 0 } else { p - val },
            },
        }
    }

    pub fn mul(&self, other: &FieldElem) -> FieldElem {
        match (self, other) {
            (FieldElem::Q(a), FieldElem::Q(b)) => FieldElem::Q(a * b),
            (FieldElem::Fp { p, val: a }, FieldElem::Fp { p: q, val: b }) if p == q => {
                FieldElem::Fp {
                    p: *p,
                    val: ((*a as u128 * *b as u128) % *p as u128) as u64,
                }
            }
            _ => panic!("field mismatch"),
        }
    }

    pub fn inv(&self) -> Result<FieldElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            FieldElem::Q(a) => FieldElem::Q(a.recip()),
            FieldElem::Fp { p, val } => FieldElem::Fp {
                p: *p,
                val: mod_inv(*val, *p),
            },
        })
    }

    pub fn div(&self, other: &FieldElem) -> Result<FieldElem> {
        Ok(self.mul(&other.inv()?))
    }

    /// Exact square root within the field, when one exists. Over the
    /// rationals the nonnegative root is returned; over a prime field the
    /// least residue of the two roots.
    pub fn square_root(&self) -> Option<FieldElem> {
        match self {
            FieldElem::Q(r) => {
                if r.is_negative() {
                    return None;
                }
                let num = exact_sqrt_bigint(r.numer())?;
                let den = exact_sqrt_bigint(r.denom())?;
                Some(FieldElem::Q(BigRational::new(num, den)))
            }
            FieldElem::Fp { p, val } => {
                let r = sqrt_mod_p(*val, *p)?;
                Some(FieldElem::Fp {
                    p: *p,
                    val: if r == 0 { 0 } else { r.min(p - r) },
                })
            }
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Q(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            FieldElem::Fp { val, .. } => write!(f, "{val}"),
        }
    }
}

/// Splits a rational into (negative?, magnitude string) for term printing.
pub(crate) fn split_sign(c: &FieldElem) -> (bool, String) {
    match c {
        FieldElem::Q(r) => {
            if r.is_negative() {
                (true, FieldElem::Q(-r).to_string())
            } else {
                (false, c.to_string())
            }
        }
        FieldElem::Fp { .. } => (false, c.to_string()),
    }
}

fn exact_sqrt_bigint(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

fn mod_pow(base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b: u128 = (base % p) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p as u128;
        }
        b = b * b % p as u128;
        exp >>= 1;
    }
    acc as u64
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // extended euclid on signed 128-bit intermediates
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    s0.rem_euclid(p as i128) as u64
}

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Tonelli-Shanks square root modulo an odd prime; None for nonresidues.
fn sqrt_mod_p(a: u64, p: u64) -> Option<u64> {
    if a == 0 {
        return Some(0);
    }
    if mod_pow(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(mod_pow(a, (p + 1) / 4, p));
    }
    // write p-1 = q * 2^s with q odd
    let mut q = p - 1;
    let mut s = 0u32;
    while q & 1 == 0 {
        q >>= 1;
        s += 1;
    }
    // find a quadratic nonresidue z
    let mut z = 2u64;
    while mod_pow(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = mod_pow(z, q, p);
    let mut t = mod_pow(a, q, p);
    let mut r = mod_pow(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0u32;
        let mut tt = t;
        while tt != 1 {
            tt = ((tt as u128 * tt as u128) % p as u128) as u64;
            i += 1;
            if i == m {
                return None;
            }
        }
        let b = mod_pow(c, 1u64 << (m - i - 1), p);
        m = i;
        c = ((b as u128 * b as u128) % p as u128) as u64;
        t = ((t as u128 * c as u128) % p as u128) as u64;
        r = ((r as u128 * b as u128) % p as u128) as u64;
    }
    Some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> FieldElem {
        FieldElem::Q(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    #[test]
    fn modulus_validation() {
        assert_eq!(Field::prime(2), Err(Error::BadModulus));
        assert_eq!(Field::prime(1), Err(Error::BadModulus));
        assert_eq!(Field::prime(9), Err(Error::BadModulus));
        assert_eq!(Field::prime(91), Err(Error::BadModulus));
        assert!(Field::prime(5).is_ok());
        assert!(Field::prime(7).is_ok());
        assert!(Field::prime(1_000_003).is_ok());
    }

    #[test]
    fn rational_inverse_law() {
        let a = q(-3, 7);
        assert!(a.mul(&a.inv().unwrap()).is_one());
        assert_eq!(FieldElem::zero(Field::Q).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn prime_field_ops() {
        let f = Field::prime(7).unwrap();
        let a = FieldElem::from_i64(f, -2);
        assert_eq!(a, FieldElem::Fp { p: 7, val: 5 });
        assert!(a.mul(&a.inv().unwrap()).is_one());
        let b = FieldElem::from_i64(f, 13);
        assert_eq!(b, FieldElem::Fp { p: 7, val: 6 });
    }

    #[test]
    fn square_roots_in_q() {
        assert_eq!(q(9, 4).square_root(), Some(q(3, 2)));
        assert_eq!(q(2, 1).square_root(), None);
        assert_eq!(q(-4, 1).square_root(), None);
        assert_eq!(q(0, 1).square_root(), Some(q(0, 1)));
        assert_eq!(q(25, 1).square_root(), Some(q(5, 1)));
    }

    #[test]
    fn square_roots_mod_p() {
        let f7 = Field::prime(7).unwrap();
        // 2 = 3^2 = 4^2 mod 7; least residue root is 3
        assert_eq!(
            FieldElem::from_i64(f7, 2).square_root(),
            Some(FieldElem::from_i64(f7, 3))
        );
        assert_eq!(FieldElem::from_i64(f7, 3).square_root(), None);
        let f5 = Field::prime(5).unwrap();
        assert_eq!(
            FieldElem::from_i64(f5, 4).square_root(),
            Some(FieldElem::from_i64(f5, 2))
        );
        assert_eq!(FieldElem::from_i64(f5, 2).square_root(), None);
        // a 1 mod 4 prime exercises the general descent
        let f13 = Field::prime(13).unwrap();
        let r = FieldElem::from_i64(f13, 10).square_root().unwrap();
        assert_eq!(r.mul(&r), FieldElem::from_i64(f13, 10));
    }

    #[test]
    fn decimal_parsing_reduces() {
        let f = Field::prime(5).unwrap();
        assert_eq!(
            FieldElem::from_decimal(f, "123456789012345678901234567", false).unwrap(),
            FieldElem::Fp { p: 5, val: 2 }
        );
        assert_eq!(
            FieldElem::from_decimal(Field::Q, "12", true).unwrap(),
            FieldElem::from_i64(Field::Q, -12)
        );
    }
}
