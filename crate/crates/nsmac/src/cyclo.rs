//! Exact arithmetic in cyclotomic extensions `Q(zeta_a)` and in the rational
//! function field `Q(zeta_a)(u)` used by the root-of-unity specializations.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::factored::cyclotomic_coeffs;

/// The field `Q(zeta_a)` presented as `Q[z] / Phi_a(z)`.
#[derive(Clone, Debug)]
pub struct CycloField {
    order: u32,
    /// monic modulus, low degree first
    modulus: Vec<BigRational>,
}

/// An element of the field: a residue of degree < phi(order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloNum {
    coeffs: Vec<BigRational>,
}

impl CycloNum {
    pub fn zero() -> Self {
        CycloNum { coeffs: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("{c}*w"),
                _ => format!("{c}*w^{k}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl CycloField {
    pub fn new(order: u32) -> Self {
        let ints = cyclotomic_coeffs(order.max(1));
        let modulus = ints.into_iter().map(BigRational::from_integer).collect();
        CycloField { order, modulus }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn from_rational(&self, r: BigRational) -> CycloNum {
        let mut n = CycloNum { coeffs: vec![r] };
        n.trim();
        n
    }

    pub fn from_int(&self, k: i64) -> CycloNum {
        self.from_rational(BigRational::from_integer(BigInt::from(k)))
    }

    pub fn one(&self) -> CycloNum {
        self.from_int(1)
    }

    /// `zeta^k`, reduced into the residue basis.
    pub fn root_pow(&self, k: i64) -> CycloNum {
        let a = self.order.max(1) as i64;
        let k = k.rem_euclid(a) as usize;
        let mut raw = vec![BigRational::zero(); k + 1];
        raw[k] = BigRational::one();
        self.reduce(raw)
    }

    fn reduce(&self, mut raw: Vec<BigRational>) -> CycloNum {
        let d = self.degree();
        while raw.len() > d {
            let top = raw.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = raw.len() - d;
            for i in 0..d {
                let m = &self.modulus[i] * &top;
                raw[shift + i] -= m;
            }
        }
        let mut n = CycloNum { coeffs: raw };
        n.trim();
        n
    }

    pub fn add(&self, a: &CycloNum, b: &CycloNum) -> CycloNum {
        let mut coeffs = vec![BigRational::zero(); a.coeffs.len().max(b.coeffs.len())];
        for (i, c) in a.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in b.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        let mut n = CycloNum { coeffs };
        n.trim();
        n
    }

    pub fn neg(&self, a: &CycloNum) -> CycloNum {
        CycloNum { coeffs: a.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, a: &CycloNum, b: &CycloNum) -> CycloNum {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &CycloNum, b: &CycloNum) -> CycloNum {
        if a.is_zero() || b.is_zero() {
            return CycloNum::zero();
        }
        let mut raw = vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            for (j, y) in b.coeffs.iter().enumerate() {
                raw[i + j] += x * y;
            }
        }
        self.reduce(raw)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(&self, a: &CycloNum) -> Result<CycloNum> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // work in Q[z]: r0 = modulus, r1 = a; maintain s only for r1 side
        let mut r0 = self.modulus.clone();
        let mut r1 = a.coeffs.clone();
        let mut s0: Vec<BigRational> = vec![];
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        let trim = |v: &mut Vec<BigRational>| {
            while v.last().map_or(false, |c| c.is_zero()) {
                v.pop();
            }
        };
        loop {
            trim(&mut r1);
            if r1.is_empty() {
                return Err(Error::Internal("cyclotomic inverse of zero divisor".into()));
            }
            if r1.len() == 1 {
                let c = r1[0].recip();
                let mut out: Vec<BigRational> = s1.iter().map(|x| x * &c).collect();
                trim(&mut out);
                let mut n = CycloNum { coeffs: out };
                n.trim();
                return Ok(self.reduce(n.coeffs));
            }
            // r0 = q r1 + r2
            let mut rem = r0.clone();
            let d1 = r1.len() - 1;
            let lc = r1[d1].clone();
            let mut q = vec![BigRational::zero(); rem.len().saturating_sub(d1)];
            while rem.len() > d1 {
                let top = rem.last().unwrap().clone();
                let deg = rem.len() - 1;
                let qc = &top / &lc;
                q[deg - d1] = qc.clone();
                for i in 0..=d1 {
                    let m = &r1[i] * &qc;
                    rem[deg - d1 + i] -= m;
                }
                trim(&mut rem);
                if rem.is_empty() {
                    break;
                }
            }
            // s2 = s0 - q s1
            let mut s2 = s0.clone();
            let target = q.len() + s1.len();
            s2.resize(s2.len().max(target.saturating_sub(1)).max(1), BigRational::zero());
            for (i, qc) in q.iter().enumerate() {
                if qc.is_zero() {
                    continue;
                }
                for (j, sc) in s1.iter().enumerate() {
                    if i + j >= s2.len() {
                        s2.resize(i + j + 1, BigRational::zero());
                    }
                    let m = qc * sc;
                    s2[i + j] -= m;
                }
            }
            trim(&mut s2);
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s2;
        }
    }
}

/// Dense univariate polynomial in `u` over `Q(zeta_a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloPoly {
    coeffs: Vec<CycloNum>,
}

impl CycloPoly {
    pub fn zero() -> Self {
        CycloPoly { coeffs: vec![] }
    }

    pub fn constant(c: CycloNum) -> Self {
        let mut p = CycloPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    pub fn monomial(c: CycloNum, e: usize) -> Self {
        if c.is_zero() {
            return CycloPoly::zero();
        }
        let mut coeffs = vec![CycloNum::zero(); e + 1];
        coeffs[e] = c;
        CycloPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn add(&self, f: &CycloField, other: &Self) -> Self {
        let mut coeffs = vec![CycloNum::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] = f.add(&coeffs[i], c);
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] = f.add(&coeffs[i], c);
        }
        let mut p = CycloPoly { coeffs };
        p.trim();
        p
    }

    pub fn neg(&self, f: &CycloField) -> Self {
        CycloPoly { coeffs: self.coeffs.iter().map(|c| f.neg(c)).collect() }
    }

    pub fn sub(&self, f: &CycloField, other: &Self) -> Self {
        self.add(f, &other.neg(f))
    }

    pub fn mul(&self, f: &CycloField, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return CycloPoly::zero();
        }
        let mut coeffs = vec![CycloNum::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let m = f.mul(a, b);
                coeffs[i + j] = f.add(&coeffs[i + j], &m);
            }
        }
        let mut p = CycloPoly { coeffs };
        p.trim();
        p
    }

    /// Division with remainder; the divisor must be nonzero.
    pub fn divrem(&self, f: &CycloField, d: &Self) -> Result<(Self, Self)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = d.coeffs.len() - 1;
        let lc_inv = f.inv(d.coeffs.last().unwrap())?;
        let mut rem = self.clone();
        let mut quo = vec![CycloNum::zero(); self.coeffs.len().saturating_sub(dd)];
        while !rem.is_zero() && rem.coeffs.len() - 1 >= dd {
            let deg = rem.coeffs.len() - 1;
            let qc = f.mul(rem.coeffs.last().unwrap(), &lc_inv);
            let shift = deg - dd;
            quo[shift] = qc.clone();
            for i in 0..=dd {
                let m = f.mul(&d.coeffs[i], &qc);
                rem.coeffs[shift + i] = f.sub(&rem.coeffs[shift + i], &m);
            }
            rem.trim();
        }
        let mut q = CycloPoly { coeffs: quo };
        q.trim();
        Ok((q, rem))
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, f: &CycloField, other: &Self) -> Result<Self> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(f, &b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            return Ok(a);
        }
        let lc_inv = f.inv(a.coeffs.last().unwrap())?;
        Ok(CycloPoly { coeffs: a.coeffs.iter().map(|c| f.mul(c, &lc_inv)).collect() })
    }
}

impl fmt::Display for CycloPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| match e {
                0 => format!("({c})"),
                1 => format!("({c})*u"),
                _ => format!("({c})*u^{e}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Reduced fraction of univariate polynomials over the cyclotomic field.
///
/// Invariants: denominator nonzero and monic, gcd(num, den) = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloFraction {
    pub num: CycloPoly,
    pub den: CycloPoly,
}

impl CycloFraction {
    pub fn zero() -> Self {
        CycloFraction { num: CycloPoly::zero(), den: CycloPoly::constant(CycloNum { coeffs: vec![BigRational::one()] }) }
    }

    pub fn from_poly(f: &CycloField, p: CycloPoly) -> Self {
        let _ = f;
        CycloFraction { num: p, den: CycloPoly::monomial(CycloNum { coeffs: vec![BigRational::one()] }, 0) }
    }

    pub fn new(f: &CycloField, num: CycloPoly, den: CycloPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(CycloFraction::zero());
        }
        if den.degree() == 0 {
            let c = &den.coeffs[0];
            if c == &f.one() {
                return Ok(CycloFraction { num, den });
            }
            let inv = f.inv(c)?;
            let num = CycloPoly { coeffs: num.coeffs.iter().map(|x| f.mul(x, &inv)).collect() };
            return Ok(CycloFraction { num, den: CycloPoly::monomial(f.one(), 0) });
        }
        let g = num.gcd(f, &den)?;
        let (num, den) = if g.degree() > 0 {
            (num.divrem(f, &g)?.0, den.divrem(f, &g)?.0)
        } else {
            (num, den)
        };
        // make the denominator monic
        let lc_inv = f.inv(den.coeffs.last().unwrap())?;
        let den = CycloPoly { coeffs: den.coeffs.iter().map(|c| f.mul(c, &lc_inv)).collect() };
        let num = CycloPoly { coeffs: num.coeffs.iter().map(|c| f.mul(c, &lc_inv)).collect() };
        Ok(CycloFraction { num, den })
    }

    fn den_is_one(&self, f: &CycloField) -> bool {
        self.den.degree() == 0 && self.den.coeffs[0] == f.one()
    }

    /// True when the reduced denominator is the constant 1.
    pub fn den_is_trivial(&self, f: &CycloField) -> bool {
        self.den_is_one(f)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, f: &CycloField, other: &Self) -> Result<Self> {
        if self.den_is_one(f) && other.den_is_one(f) {
            return Ok(CycloFraction { num: self.num.add(f, &other.num), den: self.den.clone() });
        }
        if self.den == other.den {
            return CycloFraction::new(f, self.num.add(f, &other.num), self.den.clone());
        }
        let num = self.num.mul(f, &other.den).add(f, &other.num.mul(f, &self.den));
        let den = self.den.mul(f, &other.den);
        CycloFraction::new(f, num, den)
    }

    pub fn sub(&self, f: &CycloField, other: &Self) -> Result<Self> {
        if self.den_is_one(f) && other.den_is_one(f) {
            return Ok(CycloFraction { num: self.num.sub(f, &other.num), den: self.den.clone() });
        }
        let num = self.num.mul(f, &other.den).sub(f, &other.num.mul(f, &self.den));
        let den = self.den.mul(f, &other.den);
        CycloFraction::new(f, num, den)
    }

    pub fn mul(&self, f: &CycloField, other: &Self) -> Result<Self> {
        if self.den_is_one(f) && other.den_is_one(f) {
            return Ok(CycloFraction { num: self.num.mul(f, &other.num), den: self.den.clone() });
        }
        CycloFraction::new(f, self.num.mul(f, &other.num), self.den.mul(f, &other.den))
    }

    pub fn div(&self, f: &CycloField, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        CycloFraction::new(f, self.num.mul(f, &other.den), self.den.mul(f, &other.num))
    }
}

impl fmt::Display for CycloFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_basics() {
        let f = CycloField::new(3);
        assert_eq!(f.degree(), 2);
        let z = f.root_pow(1);
        // 1 + z + z^2 = 0 in Q(zeta_3)
        let s = f.add(&f.add(&f.one(), &z), &f.mul(&z, &z));
        assert!(s.is_zero());
        // z * z^2 = 1
        let p = f.mul(&z, &f.root_pow(2));
        assert_eq!(p, f.one());
    }

    #[test]
    fn field_inverse() {
        for order in [1u32, 2, 3, 4, 6] {
            let f = CycloField::new(order);
            for k in 0..order.max(1) as i64 {
                let x = f.add(&f.root_pow(k), &f.from_int(2));
                if x.is_zero() {
                    continue;
                }
                let xi = f.inv(&x).unwrap();
                assert_eq!(f.mul(&x, &xi), f.one(), "order {order}, k {k}");
            }
        }
    }

    #[test]
    fn poly_gcd_and_fraction_reduce() {
        let f = CycloField::new(1);
        let one = f.one();
        // (u^2 - 1)/(u - 1) = u + 1
        let u2m1 = CycloPoly {
            coeffs: vec![f.from_int(-1), CycloNum::zero(), one.clone()],
        };
        let um1 = CycloPoly { coeffs: vec![f.from_int(-1), one.clone()] };
        let fr = CycloFraction::new(&f, u2m1, um1).unwrap();
        assert_eq!(fr.den.degree(), 0);
        assert_eq!(fr.num.degree(), 1);
        assert_eq!(fr.num.coeffs[0], f.one());
        assert_eq!(fr.num.coeffs[1], f.one());
    }
}
