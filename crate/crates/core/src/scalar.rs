//! Exact field scalars: arbitrary-precision rationals and prime fields GF(p).
//!
//! Every value is kept in canonical form: rationals in lowest terms with a
//! positive denominator, prime-field residues reduced into `[0, p)`. Scalars
//! carry their field so that mixed-field arithmetic is detected rather than
//! silently coerced.

use alloc::string::{String, ToString};
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The base field of a computation: the rationals or GF(p) with p prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rational,
    Prime(u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalarError {
    DivisionByZero,
    FieldMismatch,
    NotPrime(u32),
    Parse(String),
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::DivisionByZero => write!(f, "division by zero"),
            ScalarError::FieldMismatch => write!(f, "operands belong to different fields"),
            ScalarError::NotPrime(p) => write!(f, "{p} is not prime"),
            ScalarError::Parse(s) => write!(f, "cannot parse scalar: {s}"),
        }
    }
}

fn is_prime_u32(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    let n = n as u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    /// A validated prime field. `p` must be prime and below 2^31.
    pub fn prime(p: u32) -> Result<FieldSpec, ScalarError> {
        if p >= 1 << 31 || !is_prime_u32(p) {
            return Err(ScalarError::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rat(BigRational::zero()),
            FieldSpec::Prime(p) => Scalar::Fp { p: *p, val: 0 },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rat(BigRational::one()),
            FieldSpec::Prime(p) => Scalar::Fp { p: *p, val: 1 % *p },
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::Prime(p) => {
                let m = *p as i64;
                Scalar::Fp {
                    p: *p,
                    val: v.rem_euclid(m) as u32,
                }
            }
        }
    }

    /// Parses the serialized form: "a/b" or an integer string; for GF(p) the
    /// result is reduced into `[0, p)` and "a/b" means a * b^-1.
    pub fn parse(&self, s: &str) -> Result<Scalar, ScalarError> {
        let s = s.trim();
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let num: BigInt = num_str
            .parse()
            .map_err(|_| ScalarError::Parse(s.to_string()))?;
        let den: BigInt = match den_str {
            Some(d) => d.parse().map_err(|_| ScalarError::Parse(s.to_string()))?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        match self {
            FieldSpec::Rational => Ok(Scalar::Rat(BigRational::new(num, den))),
            FieldSpec::Prime(p) => {
                let n = Scalar::fp_from_bigint(*p, &num);
                let d = Scalar::fp_from_bigint(*p, &den);
                n.arith(&d, ArithOp::Div)
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// An exact field element together with its field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp { p: u32, val: u32 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Rational,
            Scalar::Fp { p, .. } => FieldSpec::Prime(*p),
        }
    }

    fn fp_from_bigint(p: u32, v: &BigInt) -> Scalar {
        let m = BigInt::from(p);
        let mut r = v % &m;
        if r.is_negative() {
            r += &m;
        }
        let digits = r.to_u32_digits().1;
        Scalar::Fp {
            p,
            val: digits.first().copied().unwrap_or(0),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { val, .. } => *val == 1,
        }
    }

    /// Exact field arithmetic; both operands must live in the same field.
    pub fn arith(&self, other: &Scalar, op: ArithOp) -> Result<Scalar, ScalarError> {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => {
                let r = match op {
                    ArithOp::Add => a + b,
                    ArithOp::Sub => a - b,
                    ArithOp::Mul => a * b,
                    ArithOp::Div => {
                        if b.is_zero() {
                            return Err(ScalarError::DivisionByZero);
                        }
                        a / b
                    }
                };
                Ok(Scalar::Rat(r))
            }
            (Scalar::Fp { p, val: a }, Scalar::Fp { p: q, val: b }) => {
                if p != q {
                    return Err(ScalarError::FieldMismatch);
                }
                let m = *p as u64;
                let (a, b) = (*a as u64, *b as u64);
                let r = match op {
                    ArithOp::Add => (a + b) % m,
                    ArithOp::Sub => (a + m - b) % m,
                    ArithOp::Mul => a * b % m,
                    ArithOp::Div => {
                        if b == 0 {
                            return Err(ScalarError::DivisionByZero);
                        }
                        a * mod_inverse(b, m) % m
                    }
                };
                Ok(Scalar::Fp {
                    p: *p,
                    val: r as u32,
                })
            }
            _ => Err(ScalarError::FieldMismatch),
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.arith(other, ArithOp::Add).expect("scalar add")
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.arith(other, ArithOp::Sub).expect("scalar sub")
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.arith(other, ArithOp::Mul).expect("scalar mul")
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Fp { p, val } => Scalar::Fp {
                p: *p,
                val: if *val == 0 { 0 } else { p - val },
            },
        }
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        self.field().one().arith(self, ArithOp::Div)
    }
}

/// Inverse of `a` modulo the prime `m`, for `a` nonzero mod `m`.
fn mod_inverse(a: u64, m: u64) -> u64 {
    // extended Euclid on (a, m); coefficients fit in i128
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "not invertible mod {m}");
    old_s.rem_euclid(m as i128) as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { val, .. } => write!(f, "{val}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rational;

    #[test]
    fn rational_add_normalizes() {
        let a = Q.parse("1/2").unwrap();
        let b = Q.parse("1/3").unwrap();
        let sum = a.arith(&b, ArithOp::Add).unwrap();
        assert_eq!(sum.to_string(), "5/6");
    }

    #[test]
    fn prime_field_mul_reduces() {
        let f = FieldSpec::prime(7).unwrap();
        let r = f.from_i64(3).arith(&f.from_i64(5), ArithOp::Mul).unwrap();
        assert_eq!(r, f.from_i64(1));
    }

    #[test]
    fn division_by_zero_is_reported() {
        let a = Q.one();
        let z = Q.zero();
        assert_eq!(a.arith(&z, ArithOp::Div), Err(ScalarError::DivisionByZero));
        let f = FieldSpec::prime(5).unwrap();
        assert_eq!(
            f.one().arith(&f.zero(), ArithOp::Div),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let f = FieldSpec::prime(5).unwrap();
        assert_eq!(
            Q.one().arith(&f.one(), ArithOp::Add),
            Err(ScalarError::FieldMismatch)
        );
        let f11 = FieldSpec::prime(11).unwrap();
        assert_eq!(
            f.one().arith(&f11.one(), ArithOp::Add),
            Err(ScalarError::FieldMismatch)
        );
    }

    #[test]
    fn prime_validation() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(2147483647).is_ok()); // 2^31 - 1
        assert_eq!(FieldSpec::prime(1), Err(ScalarError::NotPrime(1)));
        assert_eq!(FieldSpec::prime(91), Err(ScalarError::NotPrime(91)));
    }

    #[test]
    fn serialized_form_round_trips() {
        for s in ["0", "-3", "5/6", "-7/3"] {
            let v = Q.parse(s).unwrap();
            assert_eq!(v.to_string(), s);
        }
        // non-canonical input normalizes
        assert_eq!(Q.parse("2/4").unwrap().to_string(), "1/2");
        assert_eq!(Q.parse("1/-2").unwrap().to_string(), "-1/2");
        let f = FieldSpec::prime(7).unwrap();
        assert_eq!(f.parse("-1").unwrap(), f.from_i64(6));
        assert_eq!(f.parse("3/2").unwrap(), f.from_i64(5)); // 3 * 2^-1 = 3*4 = 12 = 5
    }

    #[test]
    fn inverse_of_residue() {
        let f = FieldSpec::prime(7).unwrap();
        for v in 1..7 {
            let x = f.from_i64(v);
            assert_eq!(x.inv().unwrap().mul(&x), f.one());
        }
    }
}
