//! Arithmetic in GF(16) = F₂[X]/(X⁴ + X³ + 1).
//!
//! An element is stored as four bits: bit `i` is the coefficient of ζⁱ, where
//! ζ is the class of `X`. Equality and hashing use this canonical layout, so
//! rendered values are stable across runs.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Reduction of X⁴: X⁴ = X³ + 1.
const REDUCE_X4: u8 = 0b1001;

const fn mul_slow(mut a: u8, mut b: u8) -> u8 {
    let mut acc = 0u8;
    while b != 0 {
        if b & 1 != 0 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a & 0x10 != 0 {
            a = (a & 0x0f) ^ REDUCE_X4;
        }
    }
    acc
}

const fn build_mul_table() -> [[u8; 16]; 16] {
    let mut t = [[0u8; 16]; 16];
    let mut a = 0;
    while a < 16 {
        let mut b = 0;
        while b < 16 {
            t[a][b] = mul_slow(a as u8, b as u8);
            b += 1;
        }
        a += 1;
    }
    t
}

const fn build_exp_table() -> [u8; 15] {
    let mut t = [0u8; 15];
    let mut x = 1u8;
    let mut k = 0;
    while k < 15 {
        t[k] = x;
        x = mul_slow(x, 0b0010);
        k += 1;
    }
    t
}

const fn build_log_table(exp: [u8; 15]) -> [u8; 16] {
    // log[0] is unused
    let mut t = [0u8; 16];
    let mut k = 0;
    while k < 15 {
        t[exp[k] as usize] = k as u8;
        k += 1;
    }
    t
}

pub(crate) const MUL: [[u8; 16]; 16] = build_mul_table();
const EXP: [u8; 15] = build_exp_table();
const LOG: [u8; 16] = build_log_table(EXP);

/// An element of GF(16).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Scalar16(u8);

impl Scalar16 {
    pub const ZERO: Scalar16 = Scalar16(0);
    pub const ONE: Scalar16 = Scalar16(1);
    /// ζ, a root of X⁴ + X³ + 1 and a generator of GF(16)*.
    pub const ZETA: Scalar16 = Scalar16(0b0010);
    /// ω = ζ⁵, a primitive cube root of unity, generating F₄ inside GF(16).
    pub const OMEGA: Scalar16 = Scalar16(EXP[5]);

    /// Builds a scalar from its bit pattern. Only the low four bits are used.
    pub const fn from_bits(bits: u8) -> Self {
        Scalar16(bits & 0x0f)
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    /// ζᵏ for any integer `k` (exponents are taken mod 15).
    pub fn zeta_pow(k: i64) -> Self {
        Scalar16(EXP[k.rem_euclid(15) as usize])
    }

    /// All 16 elements in bit-pattern order.
    pub fn all() -> impl Iterator<Item = Scalar16> + Clone {
        (0u8..16).map(Scalar16)
    }

    /// The 15 nonzero elements in bit-pattern order.
    pub fn nonzero() -> impl Iterator<Item = Scalar16> + Clone {
        (1u8..16).map(Scalar16)
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// The discrete logarithm to base ζ, in `0..15`.
    pub fn log(self) -> Option<u8> {
        (!self.is_zero()).then(|| LOG[self.0 as usize])
    }

    pub fn pow(self, e: u64) -> Self {
        match self.log() {
            None if e == 0 => Scalar16::ONE,
            None => Scalar16::ZERO,
            Some(l) => Scalar16(EXP[((l as u64 * (e % 15)) % 15) as usize]),
        }
    }

    pub fn inverse(self) -> Result<Self> {
        match self.log() {
            None => Err(Error::Domain("inverse of zero in GF(16)".into())),
            Some(l) => Ok(Scalar16(EXP[(15 - l as usize) % 15])),
        }
    }

    /// The Frobenius automorphism a ↦ a².
    pub fn frobenius(self) -> Self {
        self * self
    }

    /// The inverse Frobenius a ↦ a⁸.
    pub fn frobenius_inv(self) -> Self {
        self.pow(8)
    }

    /// a + a² + a⁴ + a⁸, which always lies in F₂.
    pub fn trace2(self) -> u8 {
        let t = self + self.frobenius() + self.pow(4) + self.pow(8);
        debug_assert!(t.0 <= 1);
        t.0
    }

    /// `F(a) = a`, i.e. `a ∈ F₂`.
    pub fn is_rational(self) -> bool {
        self.0 <= 1
    }

    /// Renders as `z^k` (or `0`, `1`, `z`).
    pub fn symbolic(self) -> String {
        match self.log() {
            None => "0".into(),
            Some(0) => "1".into(),
            Some(1) => "z".into(),
            Some(k) => format!("z^{k}"),
        }
    }

    /// Parses a symbolic rendering `0`, `1`, `z`, `z^k` (k may be negative).
    pub fn parse_symbolic(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "0" => return Ok(Scalar16::ZERO),
            "1" => return Ok(Scalar16::ONE),
            "z" => return Ok(Scalar16::ZETA),
            _ => {}
        }
        let k = s
            .strip_prefix("z^")
            .and_then(|e| e.trim().parse::<i64>().ok())
            .ok_or_else(|| Error::Parse(format!("not a scalar: {s:?}")))?;
        Ok(Scalar16::zeta_pow(k))
    }
}

#[allow(clippy::suspicious_arithmetic_impl, clippy::suspicious_op_assign_impl)]
impl Add for Scalar16 {
    type Output = Scalar16;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        Scalar16(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl, clippy::suspicious_op_assign_impl)]
impl AddAssign for Scalar16 {
    #[inline]
    fn add_assign(&mut self, rhs: Self) {
        self.0 ^= rhs.0;
    }
}

#[allow(clippy::suspicious_arithmetic_impl, clippy::suspicious_op_assign_impl)]
impl Sub for Scalar16 {
    type Output = Scalar16;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Scalar16(self.0 ^ rhs.0)
    }
}

impl Mul for Scalar16 {
    type Output = Scalar16;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        Scalar16(MUL[self.0 as usize][rhs.0 as usize])
    }
}

impl MulAssign for Scalar16 {
    #[inline]
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl std::iter::Sum for Scalar16 {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Scalar16::ZERO, |a, b| a + b)
    }
}

impl std::iter::Product for Scalar16 {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Scalar16::ONE, |a, b| a * b)
    }
}

/// Hex digit of the bit pattern.
impl fmt::Display for Scalar16 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.0)
    }
}

impl fmt::Debug for Scalar16 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbolic())
    }
}

/// Accepts either a single hex digit or the symbolic `z^k` form.
impl FromStr for Scalar16 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with('z') {
            return Scalar16::parse_symbolic(t);
        }
        let digits = t.strip_prefix("0x").unwrap_or(t);
        match u8::from_str_radix(digits, 16) {
            Ok(v) if v < 16 => Ok(Scalar16(v)),
            _ => Err(Error::Parse(format!("not a GF(16) element: {s:?}"))),
        }
    }
}

impl From<Scalar16> for String {
    fn from(s: Scalar16) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for Scalar16 {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// A univariate polynomial over GF(16), coefficients in increasing degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly16(Vec<Scalar16>);

impl Poly16 {
    pub fn new(mut coeffs: Vec<Scalar16>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly16(coeffs)
    }

    /// Polynomial with coefficient 1 at each listed exponent (repeats cancel).
    pub fn from_exponents(exps: &[usize]) -> Self {
        let deg = exps.iter().copied().max().unwrap_or(0);
        let mut c = vec![Scalar16::ZERO; deg + 1];
        for &e in exps {
            c[e] += Scalar16::ONE;
        }
        Poly16::new(c)
    }

    pub fn coeffs(&self) -> &[Scalar16] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn eval(&self, x: Scalar16) -> Scalar16 {
        self.0.iter().rev().fold(Scalar16::ZERO, |acc, &c| acc * x + c)
    }

    pub fn mul(&self, other: &Poly16) -> Poly16 {
        if self.is_zero() || other.is_zero() {
            return Poly16(Vec::new());
        }
        let mut out = vec![Scalar16::ZERO; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly16::new(out)
    }
}

/// All zeros of `poly` in GF(16), in bit-pattern order, by exhaustive evaluation.
pub fn roots(poly: &Poly16) -> Result<Vec<Scalar16>> {
    if poly.is_zero() {
        return Err(Error::Domain("roots of the zero polynomial".into()));
    }
    Ok(Scalar16::all().filter(|&x| poly.eval(x).is_zero()).collect())
}

/// A solution μ of μ² + μ = λ, or `None` when trace2(λ) = 1.
///
/// The two solutions are μ and μ + 1; the one with the smaller bit pattern
/// is returned.
pub fn solve_artin_schreier(lambda: Scalar16) -> Option<Scalar16> {
    Scalar16::all().find(|&m| m * m + m == lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(k: i64) -> Scalar16 {
        Scalar16::zeta_pow(k)
    }

    #[test]
    fn modulus_reduction() {
        assert_eq!(Scalar16::ZETA * z(3), z(3) + Scalar16::ONE);
        assert_eq!(z(4), Scalar16::from_bits(0b1001));
        assert_eq!(z(7) * z(8), Scalar16::ONE);
        for a in Scalar16::all() {
            assert_eq!(a * Scalar16::ZERO, Scalar16::ZERO);
        }
    }

    #[test]
    fn zeta_is_primitive() {
        let mut x = Scalar16::ONE;
        for k in 1..=15 {
            x *= Scalar16::ZETA;
            assert_eq!(x == Scalar16::ONE, k == 15, "ζ^{k}");
        }
    }

    #[test]
    fn inverse() {
        assert_eq!(Scalar16::ONE.inverse().unwrap(), Scalar16::ONE);
        assert_eq!(Scalar16::ZETA.inverse().unwrap(), z(14));
        assert!(Scalar16::ZERO.inverse().is_err());
        for a in Scalar16::nonzero() {
            assert_eq!(a * a.inverse().unwrap(), Scalar16::ONE);
        }
    }

    #[test]
    fn frobenius() {
        assert_eq!(Scalar16::ONE.frobenius(), Scalar16::ONE);
        assert_eq!(z(5).frobenius(), z(10));
        for a in Scalar16::all() {
            let f4 = a.frobenius().frobenius().frobenius().frobenius();
            assert_eq!(f4, a);
            assert_eq!(a.frobenius().frobenius_inv(), a);
            assert_eq!(a.frobenius() == a, a.is_rational());
            let in_f4 = a.pow(4) == a;
            assert_eq!(a.frobenius().frobenius() == a, in_f4);
        }
        assert_eq!(Scalar16::all().filter(|a| a.pow(4) == *a).count(), 4);
    }

    #[test]
    fn trace() {
        // ζ⁸ + ζ⁴ + ζ² + ζ = 1
        assert_eq!(Scalar16::ZETA.trace2(), 1);
        assert_eq!(Scalar16::ZERO.trace2(), 0);
        assert_eq!(Scalar16::ONE.trace2(), 0);
        assert_eq!(Scalar16::all().filter(|a| a.trace2() == 0).count(), 8);
        for a in Scalar16::all() {
            for b in Scalar16::all() {
                assert_eq!((a + b).trace2(), a.trace2() ^ b.trace2());
            }
        }
    }

    #[test]
    fn omega_is_cube_root() {
        let w = Scalar16::OMEGA;
        assert_ne!(w, Scalar16::ONE);
        assert_eq!(w.pow(3), Scalar16::ONE);
        assert_eq!(w * w + w + Scalar16::ONE, Scalar16::ZERO);
    }

    #[test]
    fn trace_polynomial_roots() {
        let p = Poly16::from_exponents(&[8, 4, 2, 1]);
        let r = roots(&p).unwrap();
        assert_eq!(r.len(), 8);
        assert!(r.contains(&Scalar16::ZERO));
        for &a in &r {
            for &b in &r {
                assert!(r.contains(&(a + b)));
            }
            assert_eq!(a.trace2(), 0);
        }
        // (X⁸+X⁴+X²+X)(X⁸+X⁴+X²+X+1) = X¹⁶ + X
        let q = Poly16::from_exponents(&[8, 4, 2, 1, 0]);
        assert_eq!(p.mul(&q), Poly16::from_exponents(&[16, 1]));
    }

    #[test]
    fn seven_roots() {
        let p = Poly16::from_exponents(&[7, 3, 1, 0]);
        let r = roots(&p).unwrap();
        assert_eq!(r.len(), 7);
        for &l in &r {
            assert!(!l.is_zero());
            assert_eq!(l.trace2(), 0);
            assert!(solve_artin_schreier(l).is_some());
        }
        // X·(X⁷+X³+X+1) = X⁸+X⁴+X²+X
        assert_eq!(
            Poly16::from_exponents(&[1]).mul(&p),
            Poly16::from_exponents(&[8, 4, 2, 1])
        );
        assert_eq!(roots(&Poly16::from_exponents(&[1, 0])).unwrap(), vec![Scalar16::ONE]);
        assert!(roots(&Poly16::new(vec![])).is_err());
    }

    #[test]
    fn artin_schreier() {
        assert_eq!(solve_artin_schreier(Scalar16::ZERO), Some(Scalar16::ZERO));
        for l in Scalar16::all() {
            match solve_artin_schreier(l) {
                Some(m) => {
                    assert_eq!(l.trace2(), 0);
                    assert_eq!(m * m + m, l);
                    assert!(m.bits() < (m + Scalar16::ONE).bits());
                }
                None => assert_eq!(l.trace2(), 1),
            }
        }
    }

    #[test]
    fn text_round_trip() {
        for a in Scalar16::all() {
            assert_eq!(a.to_string().parse::<Scalar16>().unwrap(), a);
            assert_eq!(a.symbolic().parse::<Scalar16>().unwrap(), a);
        }
        assert_eq!("z^-1".parse::<Scalar16>().unwrap(), z(14));
        assert!("g".parse::<Scalar16>().is_err());
    }
}
