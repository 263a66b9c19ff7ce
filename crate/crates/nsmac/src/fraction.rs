//! Rational functions in (q, t) with denominators kept in factored form.
//!
//! Denominators of Macdonald coefficients only ever acquire monomial parts
//! and `(1 - q^a t^b)`-type factors, so the denominator is stored as
//! `int * q^e * t^f * prod Phi_e(q^a t^b)^m * residual`. Reduction then
//! amounts to exact-division attempts against the finitely many irreducible
//! factors actually present instead of a generic bivariate gcd; the
//! `residual` (normally 1) keeps the type closed under arbitrary division.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::factored::{
    multiset_max, peel, CycloFactor, CycloMultiset, FactoredQt,
};
use crate::qtpoly::QtPoly;

/// Factored denominator. Always nonzero; the zero fraction has the trivial one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Denom {
    int: BigInt,
    qexp: u32,
    texp: u32,
    cyclo: CycloMultiset,
    residual: QtPoly,
}

impl Default for Denom {
    fn default() -> Self {
        Denom::one()
    }
}

impl Denom {
    pub fn one() -> Self {
        Denom {
            int: BigInt::one(),
            qexp: 0,
            texp: 0,
            cyclo: CycloMultiset::new(),
            residual: QtPoly::one(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.int.is_one()
            && self.qexp == 0
            && self.texp == 0
            && self.cyclo.is_empty()
            && self.residual.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.cyclo.is_empty() && self.residual.is_one() && self.int.is_one()
    }

    pub fn qexp(&self) -> u32 {
        self.qexp
    }

    pub fn texp(&self) -> u32 {
        self.texp
    }

    pub fn cyclo(&self) -> &CycloMultiset {
        &self.cyclo
    }

    pub fn int_part(&self) -> &BigInt {
        &self.int
    }

    pub fn push_cyclo(&mut self, f: CycloFactor, mult: u32) {
        if mult > 0 {
            *self.cyclo.entry(f).or_insert(0) += mult;
        }
    }

    pub fn remove_cyclo_once(&mut self, f: &CycloFactor) {
        if let Some(m) = self.cyclo.get_mut(f) {
            if *m <= 1 {
                self.cyclo.remove(f);
            } else {
                *m -= 1;
            }
        }
    }

    pub fn mul_qexp(&mut self, k: u32) {
        self.qexp += k;
    }

    pub fn mul_texp(&mut self, k: u32) {
        self.texp += k;
    }

    pub fn div_qexp(&mut self, k: u32) {
        debug_assert!(self.qexp >= k);
        self.qexp -= k;
    }

    pub fn div_texp(&mut self, k: u32) {
        debug_assert!(self.texp >= k);
        self.texp -= k;
    }

    pub fn div_int(&mut self, g: &BigInt) {
        debug_assert!((&self.int % g).is_zero());
        self.int /= g;
    }

    /// Cofactor polynomial `target / self`; `target` must be a multiple.
    pub fn cofactor_poly(&self, target: &Self) -> QtPoly {
        self.cofactor(target)
    }

    /// Expansion as a plain polynomial (times the integer part).
    pub fn to_poly(&self) -> QtPoly {
        let mut p = QtPoly::monomial(self.qexp, self.texp, self.int.clone());
        for (f, &m) in &self.cyclo {
            let fp = f.poly();
            for _ in 0..m {
                p = p.mul(&fp);
            }
        }
        if !self.residual.is_one() {
            p = p.mul(&self.residual);
        }
        p
    }

    fn mul(&self, other: &Self) -> Self {
        let mut cyclo = self.cyclo.clone();
        for (f, m) in &other.cyclo {
            *cyclo.entry(*f).or_insert(0) += m;
        }
        Denom {
            int: &self.int * &other.int,
            qexp: self.qexp + other.qexp,
            texp: self.texp + other.texp,
            cyclo,
            residual: if other.residual.is_one() {
                self.residual.clone()
            } else if self.residual.is_one() {
                other.residual.clone()
            } else {
                self.residual.mul(&other.residual)
            },
        }
    }

    fn lcm(&self, other: &Self) -> Self {
        let residual = if self.residual == other.residual {
            self.residual.clone()
        } else if self.residual.is_one() {
            other.residual.clone()
        } else if other.residual.is_one() {
            self.residual.clone()
        } else {
            let g = self.residual.gcd(&other.residual);
            self.residual.mul(&other.residual.exact_div(&g).unwrap())
        };
        Denom {
            int: self.int.lcm(&other.int),
            qexp: self.qexp.max(other.qexp),
            texp: self.texp.max(other.texp),
            cyclo: multiset_max(&self.cyclo, &other.cyclo),
            residual,
        }
    }

    /// Cofactor polynomial `target / self`; `target` must be a multiple.
    fn cofactor(&self, target: &Self) -> QtPoly {
        let mut p = QtPoly::monomial(
            target.qexp - self.qexp,
            target.texp - self.texp,
            &target.int / &self.int,
        );
        for (f, &m) in &target.cyclo {
            let have = self.cyclo.get(f).copied().unwrap_or(0);
            let fp = f.poly();
            for _ in have..m {
                p = p.mul(&fp);
            }
        }
        if self.residual != target.residual {
            let quot = target.residual.exact_div(&self.residual).unwrap();
            p = p.mul(&quot);
        }
        p
    }
}

/// A reduced fraction of bivariate integer polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QtFraction {
    num: QtPoly,
    den: Denom,
}

impl QtFraction {
    pub fn zero() -> Self {
        QtFraction { num: QtPoly::zero(), den: Denom::one() }
    }

    pub fn one() -> Self {
        QtFraction { num: QtPoly::one(), den: Denom::one() }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        QtFraction { num: QtPoly::constant(c), den: Denom::one() }
    }

    pub fn from_poly(p: QtPoly) -> Self {
        QtFraction { num: p, den: Denom::one() }
    }

    /// `q^a t^b` with possibly negative exponents.
    pub fn monomial(a: i64, b: i64) -> Self {
        let mut f = QtFraction::one();
        f = f.mul_q_pow(a);
        f.mul_t_pow(b)
    }

    /// Builds and reduces `n / d`.
    pub fn ratio(n: QtPoly, d: QtPoly) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (sign, den) = extract_denominator(d);
        let num = if sign { n.neg() } else { n };
        Ok(QtFraction::reduced(num, den))
    }

    fn reduced(mut num: QtPoly, mut den: Denom) -> Self {
        reduce_in_place(&mut num, &mut den);
        QtFraction { num, den }
    }

    /// Builds and reduces `num / den` from an already-factored denominator.
    pub fn with_denom(num: QtPoly, den: Denom) -> Self {
        QtFraction::reduced(num, den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn num(&self) -> &QtPoly {
        &self.num
    }

    pub fn den(&self) -> &Denom {
        &self.den
    }

    pub fn den_poly(&self) -> QtPoly {
        self.den.to_poly()
    }

    /// Denominator in factored display form.
    pub fn den_factored(&self) -> Result<FactoredQt> {
        if !self.den.residual.is_one() {
            return Err(Error::NotProductForm { residual: self.den.residual.to_string() });
        }
        let factors = peel(&self.den.cyclo).ok_or_else(|| Error::NotProductForm {
            residual: format!("{:?}", self.den.cyclo),
        })?;
        let mut texp = self.den.texp as i64;
        for (&(_, b), &m) in &factors {
            if b < 0 {
                texp -= b * m as i64;
            }
        }
        Ok(FactoredQt {
            unit: BigRational::from_integer(self.den.int.clone()),
            qexp: self.den.qexp,
            texp,
            factors,
        })
    }

    pub fn neg(&self) -> Self {
        QtFraction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return QtFraction::reduced(self.num.add(&other.num), self.den.clone());
        }
        let den = self.den.lcm(&other.den);
        let ca = self.den.cofactor(&den);
        let cb = other.den.cofactor(&den);
        let num = self.num.mul(&ca).add(&other.num.mul(&cb));
        QtFraction::reduced(num, den)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return QtFraction::zero();
        }
        // cross-reduce before multiplying
        let mut na = self.num.clone();
        let mut db = other.den.clone();
        reduce_in_place(&mut na, &mut db);
        let mut nb = other.num.clone();
        let mut da = self.den.clone();
        reduce_in_place(&mut nb, &mut da);
        let mut num = na.mul(&nb);
        let mut den = da.mul(&db);
        // cross reductions leave no common polynomial factors, but integer
        // content can still appear in the product of numerators
        reduce_int(&mut num, &mut den);
        debug_assert!(!den.to_poly().is_zero());
        QtFraction { num, den }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = self.den.to_poly();
        QtFraction::ratio(d, self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// Multiplies by `q^k`.
    pub fn mul_q_pow(&self, k: i64) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut out = self.clone();
        if k > 0 {
            out.num = out.num.mul_monomial(k as u32, 0, &BigInt::one());
        } else {
            out.den.qexp += (-k) as u32;
        }
        let strip = out.num.min_deg_q().min(out.den.qexp);
        if strip > 0 {
            out.num = out.num.div_monomial(strip, 0).unwrap();
            out.den.qexp -= strip;
        }
        out
    }

    /// Multiplies by `t^k`.
    pub fn mul_t_pow(&self, k: i64) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut out = self.clone();
        if k > 0 {
            out.num = out.num.mul_monomial(0, k as u32, &BigInt::one());
        } else {
            out.den.texp += (-k) as u32;
        }
        let strip = out.num.min_deg_t().min(out.den.texp);
        if strip > 0 {
            out.num = out.num.div_monomial(0, strip).unwrap();
            out.den.texp -= strip;
        }
        out
    }

    /// When the value is exactly `q^a t^b`, returns `(a, b)`.
    pub fn as_monomial(&self) -> Option<(i64, i64)> {
        if !self.num.is_monomial() || !self.den.is_monomial() {
            return None;
        }
        let ((a, b), c) = self.num.leading().unwrap();
        if !c.is_one() {
            return None;
        }
        Some((a as i64 - self.den.qexp as i64, b as i64 - self.den.texp as i64))
    }

    /// Exact rational evaluation at integer points (tests only).
    pub fn eval_rational(&self, zq: &BigInt, zt: &BigInt) -> Option<BigRational> {
        let n = self.num.eval_int(zq, zt);
        let d = self.den.to_poly().eval_int(zq, zt);
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    }
}

/// Splits a nonzero polynomial into a sign flag and a factored denominator.
fn extract_denominator(d: QtPoly) -> (bool, Denom) {
    let mut work = d;
    let mut int = work.content();
    let trailing_neg = work.trailing().map_or(false, |(_, c)| c.is_negative());
    if trailing_neg {
        int = -int;
    }
    work.div_content(&int);
    let sign = int.is_negative();
    let int = int.abs();
    let qexp = work.min_deg_q();
    let texp = work.min_deg_t();
    work = work.div_monomial(qexp, texp).unwrap();

    let mut cyclo = CycloMultiset::new();
    let max_a = work.deg_q();
    let max_b = work.deg_t() as i64;
    for a in 0..=max_a {
        for b in -max_b..=max_b {
            if (a == 0 && b <= 0) || (a as u64).gcd(&b.unsigned_abs()) != 1 {
                continue;
            }
            let mut e = 1u32;
            let e_cap = 4 * (max_a + max_b as u32) + 4;
            while e <= e_cap {
                let phi = crate::factored::euler_phi(e);
                if (a > 0 && phi * a > max_a) || (b != 0 && (phi as u64) * b.unsigned_abs() > max_b as u64)
                {
                    break;
                }
                let f = CycloFactor { e, a, b };
                let fp = f.poly();
                while let Some(quot) = work.exact_div(&fp) {
                    work = quot;
                    *cyclo.entry(f).or_insert(0) += 1;
                }
                e += 1;
            }
        }
    }
    // canonical residual: trailing coefficient positive (it already is: the
    // content strip normalized the trailing sign, and every extracted factor
    // has trailing +1)
    debug_assert!(work.trailing().map_or(true, |(_, c)| c.is_positive()));
    (
        sign,
        Denom { int, qexp, texp, cyclo, residual: work },
    )
}

fn reduce_int(num: &mut QtPoly, den: &mut Denom) {
    if den.int.is_one() {
        return;
    }
    let g = num.content().gcd(&den.int);
    if !g.is_one() {
        num.div_content(&g);
        den.int /= g;
    }
}

fn reduce_in_place(num: &mut QtPoly, den: &mut Denom) {
    if num.is_zero() {
        *den = Denom::one();
        return;
    }
    reduce_int(num, den);
    let kq = num.min_deg_q().min(den.qexp);
    let kt = num.min_deg_t().min(den.texp);
    if kq > 0 || kt > 0 {
        *num = num.div_monomial(kq, kt).unwrap();
        den.qexp -= kq;
        den.texp -= kt;
    }
    if !den.cyclo.is_empty() {
        let factors: Vec<CycloFactor> = den.cyclo.keys().copied().collect();
        for f in factors {
            let fp = f.poly();
            loop {
                let m = den.cyclo.get(&f).copied().unwrap_or(0);
                if m == 0 {
                    break;
                }
                match num.exact_div(&fp) {
                    Some(q) => {
                        *num = q;
                        if m == 1 {
                            den.cyclo.remove(&f);
                        } else {
                            den.cyclo.insert(f, m - 1);
                        }
                    }
                    None => break,
                }
            }
        }
    }
    if !den.residual.is_one() {
        let g = num.gcd(&den.residual);
        if !g.is_constant() {
            *num = num.exact_div(&g).unwrap();
            den.residual = den.residual.exact_div(&g).unwrap();
            if den.residual.trailing().map_or(false, |(_, c)| c.is_negative()) {
                den.residual = den.residual.neg();
                *num = num.neg();
            }
        }
    }
}

impl fmt::Display for QtFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num_str = if self.num.num_terms() > 1 {
            format!("({})", self.num)
        } else {
            format!("{}", self.num)
        };
        let den_wrapped = match self.den_factored() {
            Ok(fq) => {
                let components = usize::from(!fq.unit.is_one())
                    + usize::from(fq.qexp > 0)
                    + usize::from(fq.texp != 0)
                    + fq.factors.len();
                if components > 1 {
                    format!("[{fq}]")
                } else {
                    format!("{fq}")
                }
            }
            Err(_) => format!("({})", self.den.to_poly()),
        };
        write!(f, "{num_str}/{den_wrapped}")
    }
}

/// Convenience constructors used across the crate and in tests.
impl QtFraction {
    /// `1 - t`
    pub fn one_minus_t() -> QtFraction {
        QtFraction::from_poly(QtPoly::one_minus_qt(0, 1))
    }

    /// `(1 - t) / (1 - alpha)` for a monomial `alpha = q^a t^b`.
    pub fn yang_scalar(alpha: &QtFraction) -> Result<QtFraction> {
        if alpha.is_one() {
            return Err(Error::AlphaIsOne);
        }
        let one = QtFraction::one();
        QtFraction::one_minus_t().div(&one.sub(alpha))
    }
}

/// Least common multiple of coefficient denominators, as a factored denominator.
pub fn den_lcm<'a>(items: impl Iterator<Item = &'a QtFraction>) -> Denom {
    let mut acc = Denom::one();
    for f in items {
        acc = acc.lcm(&f.den);
    }
    acc
}

/// Turns an accumulated denominator into the public factored form.
///
/// Errors with `NotProductForm` when a residual remains or the cyclotomic
/// multiset cannot be written as a product of `(1 - q^a t^b)` factors.
pub fn denom_to_factored(d: &Denom) -> Result<FactoredQt> {
    if !d.residual.is_one() {
        return Err(Error::NotProductForm { residual: d.residual.to_string() });
    }
    let factors = peel(&d.cyclo).ok_or_else(|| Error::NotProductForm {
        residual: format!("{:?}", d.cyclo),
    })?;
    let mut texp = d.texp as i64;
    for (&(_, b), &m) in &factors {
        if b < 0 {
            texp -= b * m as i64;
        }
    }
    Ok(FactoredQt {
        unit: BigRational::from_integer(d.int.clone()),
        qexp: d.qexp,
        texp,
        factors,
    })
}

/// Ratio of two denominators as reduced (numerator, denominator) polynomials,
/// monomial parts included.
pub fn denom_ratio(new: &Denom, old: &Denom) -> (QtPoly, QtPoly) {
    let mut num = QtPoly::one();
    let mut den = QtPoly::one();
    let q = new.qexp as i64 - old.qexp as i64;
    if q >= 0 {
        num = num.mul_monomial(q as u32, 0, &BigInt::one());
    } else {
        den = den.mul_monomial((-q) as u32, 0, &BigInt::one());
    }
    let t = new.texp as i64 - old.texp as i64;
    if t >= 0 {
        num = num.mul_monomial(0, t as u32, &BigInt::one());
    } else {
        den = den.mul_monomial(0, (-t) as u32, &BigInt::one());
    }
    let keys: CycloMultiset = multiset_max(&new.cyclo, &old.cyclo);
    for (f, _) in keys {
        let n = new.cyclo.get(&f).copied().unwrap_or(0) as i64;
        let o = old.cyclo.get(&f).copied().unwrap_or(0) as i64;
        let fp = f.poly();
        // negative-direction factors carry an implicit t-monomial in their
        // normalized polynomial form; it cancels in ratios of true dens
        for _ in 0..(n - o).abs() {
            if n > o {
                num = num.mul(&fp);
            } else {
                den = den.mul(&fp);
            }
        }
    }
    debug_assert!(new.residual.is_one() && old.residual.is_one());
    let g = new.int.gcd(&old.int);
    let ni = &new.int / &g;
    let oi = &old.int / &g;
    if !ni.is_one() {
        num = num.mul_monomial(0, 0, &ni);
    }
    if !oi.is_one() {
        den = den.mul_monomial(0, 0, &oi);
    }
    (num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frac(n: QtPoly, d: QtPoly) -> QtFraction {
        QtFraction::ratio(n, d).unwrap()
    }

    #[test]
    fn additive_identity() {
        let f = frac(QtPoly::one_minus_qt(0, 1), QtPoly::one_minus_qt(1, 1));
        assert_eq!(f.add(&QtFraction::zero()), f);
    }

    #[test]
    fn reciprocal_product_is_one() {
        let a = frac(QtPoly::one_minus_qt(1, 1), QtPoly::one_minus_qt(0, 1));
        let b = frac(QtPoly::one_minus_qt(0, 1), QtPoly::one_minus_qt(1, 1));
        assert!(a.mul(&b).is_one());
    }

    #[test]
    fn reduction_splits_difference_of_squares() {
        // (1-q^2t^2)/(1-qt) -> 1+qt
        let f = frac(QtPoly::one_minus_qt(2, 2), QtPoly::one_minus_qt(1, 1));
        assert!(f.den.is_one());
        let mut expect = QtPoly::one();
        expect.add_term(1, 1, BigInt::one());
        assert_eq!(f.num, expect);
    }

    #[test]
    fn reduction_is_idempotent() {
        let f = frac(
            QtPoly::one_minus_qt(1, 1).mul(&QtPoly::one_minus_qt(2, 1)),
            QtPoly::one_minus_qt(1, 1).mul(&QtPoly::one_minus_qt(1, 2)),
        );
        let g = QtFraction::reduced(f.num.clone(), f.den.clone());
        assert_eq!(f, g);
    }

    #[test]
    fn add_with_cancellation() {
        // t + (1-t)/(1-qt) = (1 - qt^2)/(1 - qt)
        let t = QtFraction::from_poly(QtPoly::t());
        let c = frac(QtPoly::one_minus_qt(0, 1), QtPoly::one_minus_qt(1, 1));
        let s = t.add(&c);
        assert_eq!(s.num, QtPoly::one_minus_qt(1, 2));
        assert_eq!(s.den_poly(), QtPoly::one_minus_qt(1, 1));
    }

    #[test]
    fn division_by_zero_errors() {
        let z = QtFraction::zero();
        assert!(matches!(QtFraction::one().div(&z), Err(Error::DivisionByZero)));
    }

    #[test]
    fn monomial_normalization() {
        let f = QtFraction::monomial(-2, 1);
        assert_eq!(f.as_monomial(), Some((-2, 1)));
        let g = f.mul_q_pow(3);
        assert_eq!(g.as_monomial(), Some((1, 1)));
    }

    #[test]
    fn general_residual_division() {
        // 1/(1+q+t) has an out-of-form denominator; arithmetic must still work
        let mut d = QtPoly::one();
        d.add_term(1, 0, BigInt::one());
        d.add_term(0, 1, BigInt::one());
        let f = frac(QtPoly::one(), d.clone());
        let back = f.inv().unwrap();
        assert_eq!(back.num, d);
        assert!(back.den.is_one());
        let prod = f.mul(&back);
        assert!(prod.is_one());
    }
}
