use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::LinalgError;

/// Coefficient field: the rationals or a prime field F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u64),
}

/// An element of a [`Field`]. Rational elements are exact fractions;
/// prime-field elements are residues in `0..p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Field, LinalgError> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(LinalgError::NotPrime(p))
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::zero()),
            Field::Prime(_) => Scalar::Residue(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::one()),
            Field::Prime(_) => Scalar::Residue(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => {
                let p = *p as i128;
                Scalar::Residue((((n as i128 % p) + p) % p) as u64)
            }
        }
    }

    /// Parses "a", "-a" or "a/b" (decimal strings) into a field element.
    pub fn parse(&self, s: &str) -> Result<Scalar, LinalgError> {
        let bad = || LinalgError::BadEntry(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        match self {
            Field::Rationals => Ok(Scalar::Rational(BigRational::new(num, den))),
            Field::Prime(p) => {
                let p_big = BigInt::from(*p);
                let reduce = |x: &BigInt| -> u64 {
                    let m = ((x % &p_big) + &p_big) % &p_big;
                    m.try_into().expect("residue fits in u64")
                };
                let n = reduce(&num);
                let d = reduce(&den);
                if d == 0 {
                    return Err(bad());
                }
                Ok(self.mul(&Scalar::Residue(n), &self.inv(&Scalar::Residue(d))?))
            }
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => {
                Scalar::Rational(x + y)
            }
            (Field::Prime(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(((*x as u128 + *y as u128) % *p as u128) as u64)
            }
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (Field::Rationals, Scalar::Rational(x)) => Scalar::Rational(-x),
            (Field::Prime(p), Scalar::Residue(x)) => Scalar::Residue((p - x) % p),
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Field::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => {
                Scalar::Rational(x * y)
            }
            (Field::Prime(p), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar, LinalgError> {
        if self.is_zero(a) {
            return Err(LinalgError::DivisionByZero("field inverse"));
        }
        match (self, a) {
            (Field::Rationals, Scalar::Rational(x)) => Ok(Scalar::Rational(x.recip())),
            (Field::Prime(p), Scalar::Residue(x)) => {
                // Fermat: x^(p-2) mod p.
                let mut base = *x as u128;
                let mut exp = *p - 2;
                let m = *p as u128;
                let mut acc: u128 = 1;
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % m;
                    }
                    base = base * base % m;
                    exp >>= 1;
                }
                Ok(Scalar::Residue(acc as u64))
            }
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, LinalgError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rational(x) => x.is_zero(),
            Scalar::Residue(x) => *x == 0,
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rational(x) => x.is_one(),
            Scalar::Residue(x) => *x == 1,
        }
    }

    /// (-1)^n in this field.
    pub fn sign(&self, n: u64) -> Scalar {
        if n % 2 == 0 {
            self.one()
        } else {
            self.neg(&self.one())
        }
    }

    pub fn format(&self, a: &Scalar) -> String {
        match a {
            Scalar::Rational(x) => {
                if x.denom().is_one() {
                    x.numer().to_string()
                } else if x.is_negative() && x.numer().magnitude() == x.denom().magnitude() {
                    "-1".to_string()
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
            Scalar::Residue(x) => x.to_string(),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        let f = Field::prime(7).unwrap();
        for x in 1..7 {
            let a = Scalar::Residue(x);
            let inv = f.inv(&a).unwrap();
            assert!(f.is_one(&f.mul(&a, &inv)), "x={x}");
        }
    }

    #[test]
    fn rejects_composite_modulus() {
        assert_eq!(Field::prime(6), Err(LinalgError::NotPrime(6)));
        assert_eq!(Field::prime(1), Err(LinalgError::NotPrime(1)));
    }

    #[test]
    fn parses_fractions() {
        let q = Field::Rationals;
        let half = q.parse("1/2").unwrap();
        assert!(q.is_one(&q.add(&half, &half)));
        let f5 = Field::prime(5).unwrap();
        // 1/2 = 3 mod 5
        assert_eq!(f5.parse("1/2").unwrap(), Scalar::Residue(3));
        assert_eq!(f5.parse("-1").unwrap(), Scalar::Residue(4));
    }
}
