//! Sparse exact arithmetic for bivariate polynomials in the parameters q and t.
//!
//! Terms are kept sorted by a packed exponent key (q-exponent first, then
//! t-exponent), so the canonical lexicographic term order is maintained by
//! construction, printing is deterministic, and the additive operations are
//! linear merges.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[inline]
fn key(dq: u32, dt: u32) -> u64 {
    ((dq as u64) << 32) | dt as u64
}

#[inline]
fn unkey(k: u64) -> (u32, u32) {
    ((k >> 32) as u32, k as u32)
}

/// A polynomial in `q` and `t` with arbitrary-precision integer coefficients.
///
/// Invariants: terms sorted by exponent key, no stored zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QtPoly {
    terms: Vec<(u64, BigInt)>,
}

impl QtPoly {
    pub fn zero() -> Self {
        QtPoly::default()
    }

    pub fn one() -> Self {
        QtPoly::monomial(0, 0, BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        QtPoly::monomial(0, 0, c.into())
    }

    /// `c * q^dq * t^dt`
    pub fn monomial(dq: u32, dt: u32, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = Vec::new();
        if !c.is_zero() {
            terms.push((key(dq, dt), c));
        }
        QtPoly { terms }
    }

    /// The variable `q`.
    pub fn q() -> Self {
        QtPoly::monomial(1, 0, 1)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        QtPoly::monomial(0, 1, 1)
    }

    /// `1 - q^a t^b` for `b >= 0`, or `t^|b| - q^a` for `b < 0`.
    ///
    /// The latter is the polynomial form of the Laurent factor `1 - q^a t^b`,
    /// normalized so that the lexicographically smallest term has coefficient +1.
    pub fn one_minus_qt(a: u32, b: i64) -> Self {
        let mut p = QtPoly::zero();
        if b >= 0 {
            p.add_term(0, 0, BigInt::one());
            p.add_term(a, b as u32, -BigInt::one());
        } else {
            p.add_term(0, (-b) as u32, BigInt::one());
            p.add_term(a, 0, -BigInt::one());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == 0)
    }

    /// True when the polynomial is a single term.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> {
        self.terms.iter().map(|(k, c)| (unkey(*k), c))
    }

    pub fn coeff(&self, dq: u32, dt: u32) -> BigInt {
        match self.terms.binary_search_by_key(&key(dq, dt), |(k, _)| *k) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn add_term(&mut self, dq: u32, dt: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let k = key(dq, dt);
        match self.terms.binary_search_by_key(&k, |(k, _)| *k) {
            Ok(i) => {
                self.terms[i].1 += c;
                if self.terms[i].1.is_zero() {
                    self.terms.remove(i);
                }
            }
            Err(i) => {
                self.terms.insert(i, (k, c));
            }
        }
    }

    pub fn deg_q(&self) -> u32 {
        self.terms.last().map(|&(k, _)| unkey(k).0).unwrap_or(0)
    }

    pub fn deg_t(&self) -> u32 {
        self.terms.iter().map(|&(k, _)| unkey(k).1).max().unwrap_or(0)
    }

    pub fn min_deg_q(&self) -> u32 {
        self.terms.first().map(|&(k, _)| unkey(k).0).unwrap_or(0)
    }

    pub fn min_deg_t(&self) -> u32 {
        self.terms.iter().map(|&(k, _)| unkey(k).1).min().unwrap_or(0)
    }

    /// Leading term in the lexicographic (q, t) order.
    pub fn leading(&self) -> Option<((u32, u32), &BigInt)> {
        self.terms.last().map(|(k, c)| (unkey(*k), c))
    }

    /// Trailing (lexicographically smallest) term.
    pub fn trailing(&self) -> Option<((u32, u32), &BigInt)> {
        self.terms.first().map(|(k, c)| (unkey(*k), c))
    }

    /// Positive gcd of all coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides every coefficient by `d` (must be exact).
    pub fn div_content(&mut self, d: &BigInt) {
        if d.is_one() {
            return;
        }
        for (_, c) in &mut self.terms {
            *c /= d;
        }
    }

    pub fn neg(&self) -> Self {
        QtPoly { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(ka, _)), Some(&&(kb, _))) => match ka.cmp(&kb) {
                    Ordering::Less => out.push(a.next().unwrap().clone()),
                    Ordering::Greater => out.push(b.next().unwrap().clone()),
                    Ordering::Equal => {
                        let (k, ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        let s = ca + cb;
                        if !s.is_zero() {
                            out.push((*k, s));
                        }
                    }
                },
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap().clone()),
                (None, None) => break,
            }
        }
        QtPoly { terms: out }
    }

    /// In-place merge-add, reusing the left buffer where possible.
    pub fn add_assign(&mut self, other: &Self) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = other.clone();
            return;
        }
        // fast path: disjoint tails
        if self.terms.last().unwrap().0 < other.terms.first().unwrap().0 {
            self.terms.extend(other.terms.iter().cloned());
            return;
        }
        let merged = self.add(other);
        *self = merged;
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return QtPoly::zero();
        }
        if other.is_monomial() {
            let (k, c) = &other.terms[0];
            let (dq, dt) = unkey(*k);
            return self.mul_monomial(dq, dt, c);
        }
        if self.is_monomial() {
            return other.mul(self);
        }
        // accumulate shifted copies, smaller operand outside
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = QtPoly::zero();
        for (k, c) in &small.terms {
            let (dq, dt) = unkey(*k);
            acc.add_assign(&large.mul_monomial(dq, dt, c));
        }
        acc
    }

    pub fn mul_monomial(&self, dq: u32, dt: u32, c: &BigInt) -> Self {
        if c.is_zero() {
            return QtPoly::zero();
        }
        let shift = key(dq, dt);
        // shifting never reorders: both exponents move up uniformly
        let terms = self.terms.iter().map(|(k, v)| (k + shift, v * c)).collect();
        QtPoly { terms }
    }

    /// Shifts all exponents down by `(dq, dt)`; requires every term to allow it.
    pub fn div_monomial(&self, dq: u32, dt: u32) -> Option<Self> {
        if dq == 0 && dt == 0 {
            return Some(self.clone());
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (k, c) in &self.terms {
            let (a, b) = unkey(*k);
            if a < dq || b < dt {
                return None;
            }
            terms.push((key(a - dq, b - dt), c.clone()));
        }
        Some(QtPoly { terms })
    }

    /// Exact polynomial division; returns `None` when `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(QtPoly::zero());
        }
        if divisor.is_monomial() {
            let (k, dc) = &divisor.terms[0];
            let (dq, dt) = unkey(*k);
            let mut terms = Vec::with_capacity(self.terms.len());
            for (k, c) in &self.terms {
                let (a, b) = unkey(*k);
                if a < dq || b < dt {
                    return None;
                }
                let (quo, rem) = c.div_rem(dc);
                if !rem.is_zero() {
                    return None;
                }
                terms.push((key(a - dq, b - dt), quo));
            }
            return Some(QtPoly { terms });
        }
        let ((lq, lt), lc) = divisor.leading().unwrap();
        let lk = key(lq, lt);
        let mut rem = self.clone();
        let mut quot = QtPoly::zero();
        while let Some((k, c)) = rem.terms.last() {
            let (a, b) = unkey(*k);
            if a < lq || b < lt || *k < lk {
                return None;
            }
            let (qc, qr) = c.div_rem(lc);
            if !qr.is_zero() {
                return None;
            }
            let (ea, eb) = (a - lq, b - lt);
            let scaled = divisor.mul_monomial(ea, eb, &-&qc);
            rem.add_assign(&scaled);
            quot.add_term(ea, eb, qc);
        }
        Some(quot)
    }

    /// Evaluates at integer points (used in tests).
    pub fn eval_int(&self, zq: &BigInt, zt: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for ((a, b), c) in self.iter() {
            acc += c * zq.pow(a) * zt.pow(b);
        }
        acc
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = QtPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Greatest common divisor, primitive and with positive trailing coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalized_sign();
        }
        if other.is_zero() {
            return self.normalized_sign();
        }
        let a = TPoly::from_qt(self);
        let b = TPoly::from_qt(other);
        let g = TPoly::gcd(a, b);
        let ic = self.content().gcd(&other.content());
        let mut out = g.into_qt();
        let c = out.content();
        out.div_content(&c);
        let mut out = out.mul_monomial(0, 0, &ic);
        if out.trailing().map_or(false, |(_, c)| c.is_negative()) {
            out = out.neg();
        }
        out
    }

    /// Flips the overall sign when the lexicographic leading coefficient is negative.
    pub fn normalized_sign(&self) -> Self {
        if self.leading().map_or(false, |(_, c)| c.is_negative()) {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Compares the polynomial to `1 - q^a t^b` (Laurent-normalized for `b < 0`).
    pub fn is_one_minus_qt(&self, a: u32, b: i64) -> bool {
        *self == QtPoly::one_minus_qt(a, b)
    }
}

impl fmt::Display for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((a, b), c) in self.iter() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || (a == 0 && b == 0) {
                parts.push(abs.to_string());
            }
            if a > 0 {
                parts.push(if a == 1 { "q".into() } else { format!("q^{a}") });
            }
            if b > 0 {
                parts.push(if b == 1 { "t".into() } else { format!("t^{b}") });
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

/// Dense view as a polynomial in t with Z[q] coefficients; only used for gcd.
struct TPoly {
    coeffs: Vec<QPoly>,
}

/// Dense univariate polynomial in q.
#[derive(Clone, PartialEq, Eq)]
struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
    fn deg(&self) -> isize {
        self.coeffs.len() as isize - 1
    }
    fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        let mut p = QPoly { coeffs };
        p.trim();
        p
    }
    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            coeffs[i] += a;
        }
        for (i, b) in other.coeffs.iter().enumerate() {
            coeffs[i] -= b;
        }
        let mut p = QPoly { coeffs };
        p.trim();
        p
    }
    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }
    fn div_exact(&self, d: &BigInt) -> Self {
        QPoly { coeffs: self.coeffs.iter().map(|c| c / d).collect() }
    }
    fn gcd(mut a: QPoly, mut b: QPoly) -> QPoly {
        // primitive PRS over Z
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        let ca = a.content();
        let cb = b.content();
        a = a.div_exact(&ca);
        b = b.div_exact(&cb);
        let cg = ca.gcd(&cb);
        while !b.is_zero() {
            let r = QPoly::prem(&a, &b);
            a = b;
            b = r;
            if !b.is_zero() {
                let c = b.content();
                b = b.div_exact(&c);
            }
        }
        let mut g = a.mul(&QPoly { coeffs: vec![cg] });
        if g.lc().is_negative() {
            g = QPoly { coeffs: g.coeffs.iter().map(|c| -c).collect() };
        }
        g
    }
    /// Pseudo-remainder of a by b.
    fn prem(a: &QPoly, b: &QPoly) -> QPoly {
        let mut r = a.clone();
        let db = b.deg();
        let lb = b.lc();
        while !r.is_zero() && r.deg() >= db {
            let shift = (r.deg() - db) as usize;
            let lr = r.lc();
            let mut scaled = QPoly { coeffs: r.coeffs.iter().map(|c| c * &lb).collect() };
            let mut sb = vec![BigInt::zero(); shift];
            sb.extend(b.coeffs.iter().map(|c| c * &lr));
            scaled = scaled.sub(&QPoly { coeffs: sb });
            scaled.trim();
            r = scaled;
        }
        r
    }
}

impl TPoly {
    fn from_qt(p: &QtPoly) -> Self {
        let dt = p.deg_t() as usize;
        let mut coeffs = vec![QPoly::zero(); dt + 1];
        for ((a, b), c) in p.iter() {
            let qp = &mut coeffs[b as usize];
            if qp.coeffs.len() <= a as usize {
                qp.coeffs.resize(a as usize + 1, BigInt::zero());
            }
            qp.coeffs[a as usize] = c.clone();
        }
        for qp in &mut coeffs {
            qp.trim();
        }
        let mut tp = TPoly { coeffs };
        tp.trim();
        tp
    }

    fn into_qt(self) -> QtPoly {
        let mut out = QtPoly::zero();
        for (b, qp) in self.coeffs.iter().enumerate() {
            for (a, c) in qp.coeffs.iter().enumerate() {
                out.add_term(a as u32, b as u32, c.clone());
            }
        }
        out
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn deg(&self) -> isize {
        self.coeffs.len() as isize - 1
    }
    fn lc(&self) -> QPoly {
        self.coeffs.last().cloned().unwrap_or_else(QPoly::zero)
    }
    /// Content with respect to t: gcd in Z[q] of the t-coefficients.
    fn content(&self) -> QPoly {
        let mut g = QPoly::zero();
        for c in &self.coeffs {
            g = QPoly::gcd(g, c.clone());
            if g.deg() == 0 && g.lc().is_one() {
                break;
            }
        }
        g
    }
    fn divide_content(&mut self, g: &QPoly) {
        if g.deg() == 0 && g.lc().is_one() {
            return;
        }
        for c in &mut self.coeffs {
            *c = TPoly::qdiv_exact(c, g);
        }
    }
    /// Exact division in Z[q].
    fn qdiv_exact(a: &QPoly, b: &QPoly) -> QPoly {
        let mut r = a.clone();
        let db = b.deg();
        let lb = b.lc();
        let mut quot = vec![BigInt::zero(); (a.deg() - db + 1).max(0) as usize];
        while !r.is_zero() && r.deg() >= db {
            let shift = (r.deg() - db) as usize;
            let qc = r.lc() / &lb;
            quot[shift] = qc.clone();
            let mut sb = vec![BigInt::zero(); shift];
            sb.extend(b.coeffs.iter().map(|c| c * &qc));
            r = r.sub(&QPoly { coeffs: sb });
            r.trim();
        }
        let mut q = QPoly { coeffs: quot };
        q.trim();
        q
    }

    fn gcd(mut a: TPoly, mut b: TPoly) -> TPoly {
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        let ca = a.content();
        let cb = b.content();
        a.divide_content(&ca);
        b.divide_content(&cb);
        let cg = QPoly::gcd(ca, cb);
        while !b.is_zero() {
            let r = TPoly::prem(&a, &b);
            a = b;
            b = r;
            if !b.is_zero() {
                let c = b.content();
                b.divide_content(&c);
            }
        }
        let mut out = TPoly { coeffs: a.coeffs.iter().map(|c| c.mul(&cg)).collect() };
        out.trim();
        out
    }

    /// Pseudo-remainder with respect to t.
    fn prem(a: &TPoly, b: &TPoly) -> TPoly {
        let mut r = TPoly { coeffs: a.coeffs.clone() };
        let db = b.deg();
        let lb = b.lc();
        while !r.is_zero() && r.deg() >= db {
            let shift = (r.deg() - db) as usize;
            let lr = r.lc();
            let mut coeffs: Vec<QPoly> = r.coeffs.iter().map(|c| c.mul(&lb)).collect();
            for (i, c) in b.coeffs.iter().enumerate() {
                let prod = c.mul(&lr);
                coeffs[i + shift] = coeffs[i + shift].sub(&prod);
            }
            let mut nr = TPoly { coeffs };
            nr.trim();
            r = nr;
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &[(u32, u32, i64)]) -> QtPoly {
        let mut out = QtPoly::zero();
        for &(a, b, c) in s {
            out.add_term(a, b, BigInt::from(c));
        }
        out
    }

    #[test]
    fn mul_and_exact_div_roundtrip() {
        let a = p(&[(0, 0, 1), (1, 1, -1)]); // 1 - qt
        let b = p(&[(0, 0, 1), (1, 1, 1)]); // 1 + qt
        let prod = a.mul(&b);
        assert_eq!(prod, p(&[(0, 0, 1), (2, 2, -1)]));
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert!(prod.exact_div(&p(&[(0, 0, 1), (0, 1, -1)])).is_none());
    }

    #[test]
    fn gcd_of_products() {
        let a = QtPoly::one_minus_qt(1, 1);
        let b = QtPoly::one_minus_qt(1, 2);
        let c = QtPoly::one_minus_qt(2, 1);
        let g = a.mul(&b).gcd(&b.mul(&c));
        assert_eq!(g, b);
        // (1-qt)(1-q^2t^2) divides (1-q^2t^2)^2, so the gcd is the former
        let x = a.mul(&QtPoly::one_minus_qt(2, 2));
        let y = QtPoly::one_minus_qt(2, 2).mul(&QtPoly::one_minus_qt(2, 2));
        assert_eq!(x.gcd(&y), x);
    }

    #[test]
    fn display_is_canonical() {
        let a = p(&[(0, 0, 1), (1, 1, -1), (2, 0, 3)]);
        assert_eq!(a.to_string(), "1 - q*t + 3*q^2");
    }

    #[test]
    fn one_minus_qt_negative_b() {
        // t^2 - q
        let f = QtPoly::one_minus_qt(1, -2);
        assert_eq!(f, p(&[(0, 2, 1), (1, 0, -1)]));
    }

    #[test]
    fn lex_term_order_iteration() {
        let a = p(&[(2, 0, 1), (0, 5, 2), (1, 1, 3)]);
        let keys: Vec<(u32, u32)> = a.iter().map(|(k, _)| k).collect();
        assert_eq!(keys, vec![(0, 5), (1, 1), (2, 0)]);
    }
}
