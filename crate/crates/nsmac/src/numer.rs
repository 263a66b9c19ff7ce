//! Common-denominator representation used by the graph walker.
//!
//! A polynomial is stored as integer-coefficient numerators over one shared
//! factored denominator, mirroring `M_v = P_v / Den(v)`. Operators touch only
//! the numerators; a step that introduces a `(1 - q^a t^b)` denominator
//! multiplies the shared one and the reduction afterwards is a handful of
//! divide-them-all probes instead of per-coefficient gcd work.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::factored::{split_one_minus_qt, CycloFactor};
use crate::fraction::{den_lcm, Denom, QtFraction};
use crate::macpoly::{MacPoly, XMono};
use crate::qtpoly::QtPoly;

/// Image of one variable under a monomial substitution:
/// `x_i -> q^{q_pow} t^{t_pow} * y_{var}` (0-based target index).
#[derive(Clone, Copy, Debug)]
pub struct MonomialImage {
    pub var: Option<usize>,
    pub q_pow: u32,
    pub t_pow: u32,
}

/// Numerators over a shared factored denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumerPoly {
    nvars: usize,
    den: Denom,
    terms: BTreeMap<XMono, QtPoly>,
}

impl NumerPoly {
    pub fn one(nvars: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(XMono::from_elem(0, nvars), QtPoly::one());
        NumerPoly { nvars, den: Denom::one(), terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn den(&self) -> &Denom {
        &self.den
    }

    pub fn iter(&self) -> impl Iterator<Item = (&XMono, &QtPoly)> {
        self.terms.iter()
    }

    /// Reduced per-coefficient fraction view.
    pub fn to_macpoly(&self) -> MacPoly {
        MacPoly::from_terms(
            self.nvars,
            self.terms
                .iter()
                .map(|(e, n)| (e.clone(), QtFraction::with_denom(n.clone(), self.den.clone()))),
        )
    }

    /// Builds the shared-denominator form of an ordinary polynomial.
    pub fn from_macpoly(p: &MacPoly) -> Self {
        let den = den_lcm(p.iter().map(|(_, c)| c));
        let terms = p
            .iter()
            .map(|(e, c)| {
                let cof = c.den().cofactor_poly(&den);
                (e.clone(), c.num().mul(&cof))
            })
            .collect();
        NumerPoly { nvars: p.nvars(), den, terms }
    }

    fn add_num(&mut self, e: XMono, n: QtPoly) {
        if n.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(n);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&n);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Cancels denominator factors, integer content and monomial content
    /// shared by every numerator.
    fn reduce(&mut self) {
        if self.terms.is_empty() {
            self.den = Denom::one();
            return;
        }
        // factor probes, cheapest rejection first: try each distinct factor
        let factors: Vec<CycloFactor> = self.den.cyclo().keys().copied().collect();
        for f in factors {
            let fp = f.poly();
            loop {
                if self.den.cyclo().get(&f).copied().unwrap_or(0) == 0 {
                    break;
                }
                let mut quotients = Vec::with_capacity(self.terms.len());
                let mut all = true;
                for n in self.terms.values() {
                    match n.exact_div(&fp) {
                        Some(q) => quotients.push(q),
                        None => {
                            all = false;
                            break;
                        }
                    }
                }
                if !all {
                    break;
                }
                for (n, q) in self.terms.values_mut().zip(quotients) {
                    *n = q;
                }
                self.den.remove_cyclo_once(&f);
            }
        }
        // integer content
        if !self.den.int_part().is_one() {
            let mut g = BigInt::zero();
            for n in self.terms.values() {
                g = g.gcd(&n.content());
                if g.is_one() {
                    break;
                }
            }
            let g = g.gcd(self.den.int_part());
            if !g.is_one() {
                for n in self.terms.values_mut() {
                    n.div_content(&g);
                }
                self.den.div_int(&g);
            }
        }
        // monomial content
        if self.den.qexp() > 0 {
            let mut k = self.den.qexp();
            for n in self.terms.values() {
                k = k.min(n.min_deg_q());
                if k == 0 {
                    break;
                }
            }
            if k > 0 {
                for n in self.terms.values_mut() {
                    *n = n.div_monomial(k, 0).unwrap();
                }
                self.den.div_qexp(k);
            }
        }
        if self.den.texp() > 0 {
            let mut k = self.den.texp();
            for n in self.terms.values() {
                k = k.min(n.min_deg_t());
                if k == 0 {
                    break;
                }
            }
            if k > 0 {
                for n in self.terms.values_mut() {
                    *n = n.div_monomial(0, k).unwrap();
                }
                self.den.div_texp(k);
            }
        }
    }

    /// Substitutes each variable by a monomial `q^a t^b * y_j` (or a bare
    /// monomial when `var` is `None`) over a new variable set. Colliding
    /// images accumulate.
    pub fn substitute_monomials(
        &self,
        images: &[MonomialImage],
        out_nvars: usize,
    ) -> Result<Self> {
        if images.len() != self.nvars {
            return Err(Error::NvarsMismatch { left: self.nvars, right: images.len() });
        }
        let mut out =
            NumerPoly { nvars: out_nvars, den: self.den.clone(), terms: BTreeMap::new() };
        for (e, n) in &self.terms {
            let mut e2 = XMono::from_elem(0, out_nvars);
            let mut qp = 0u32;
            let mut tp = 0u32;
            for (exp, im) in e.iter().zip(images) {
                if *exp == 0 {
                    continue;
                }
                if let Some(j) = im.var {
                    e2[j] += exp;
                }
                qp += im.q_pow * *exp as u32;
                tp += im.t_pow * *exp as u32;
            }
            out.add_num(e2, n.mul_monomial(qp, tp, &BigInt::one()));
        }
        out.reduce();
        Ok(out)
    }

    /// Transposition of `x_i`, `x_{i+1}` (1-based).
    pub fn si_op(&self, i: usize) -> Result<Self> {
        check_index(i, self.nvars)?;
        let mut out = NumerPoly { nvars: self.nvars, den: self.den.clone(), terms: BTreeMap::new() };
        for (e, n) in &self.terms {
            let mut e2 = e.clone();
            e2.swap(i - 1, i);
            out.add_num(e2, n.clone());
        }
        Ok(out)
    }

    /// Demazure-Lusztig operator; denominators are untouched.
    pub fn ti_op(&self, i: usize) -> Result<Self> {
        check_index(i, self.nvars)?;
        let t_minus_one = {
            let mut p = QtPoly::zero();
            p.add_term(0, 1, BigInt::one());
            p.add_term(0, 0, -BigInt::one());
            p
        };
        let mut out = NumerPoly { nvars: self.nvars, den: self.den.clone(), terms: BTreeMap::new() };
        for (e, n) in &self.terms {
            // s_i part
            let mut es = e.clone();
            es.swap(i - 1, i);
            out.add_num(es, n.clone());
            // (t-1) pi_i part: telescoping of del_i(x_i x^e); note that
            // equal exponents still contribute the term x^e itself
            let a = e[i - 1];
            let b = e[i];
            let tn = n.mul(&t_minus_one);
            let (lo, hi, neg) = if a >= b {
                (b, a + 1, false)
            } else {
                (a + 1, b, true)
            };
            // exponent pairs (j, a + b - j) for j in lo..hi
            for j in lo..hi {
                let mut e2 = e.clone();
                e2[i - 1] = j;
                e2[i] = a + b - j;
                out.add_num(e2, if neg { tn.neg() } else { tn.clone() });
            }
        }
        Ok(out)
    }

    /// Affine step `A = tau X_N`: exponent rotation with a `q` denominator.
    pub fn aff_op(&self) -> Self {
        let n = self.nvars;
        let max_first = self.terms.keys().map(|e| e[0]).max().unwrap_or(0) as u32;
        let mut out = NumerPoly { nvars: n, den: self.den.clone(), terms: BTreeMap::new() };
        out.den.mul_qexp(max_first);
        for (e, num) in &self.terms {
            let mut e2 = XMono::with_capacity(n);
            e2.extend_from_slice(&e[1..]);
            e2.push(e[0] + 1);
            let scaled = num.mul_monomial(max_first - e[0] as u32, 0, &BigInt::one());
            out.add_num(e2, scaled);
        }
        out.reduce();
        out
    }

    /// Yang operator with a monomial parameter `alpha = q^a t^b != 1`.
    pub fn yang_op(&self, i: usize, alpha: (u32, i64)) -> Result<Self> {
        if alpha == (0, 0) {
            return Err(Error::AlphaIsOne);
        }
        let ti = self.ti_op(i)?;
        Ok(self.yang_combine(&ti, &[], alpha))
    }

    /// `chain + (1-t)/(1-alpha) (self + sum extras)`, the shared combination
    /// behind Yang and jump operators. All inputs share `self.den`.
    fn yang_combine(&self, chain: &NumerPoly, extras: &[&NumerPoly], alpha: (u32, i64)) -> Self {
        let one_minus_alpha = QtPoly::one_minus_qt(alpha.0, alpha.1);
        let one_minus_t = QtPoly::one_minus_qt(0, 1);
        // t-normalization for negative alpha directions: the denominator
        // gains the normalized polynomial (t^{|b|} - q^a), so numerators are
        // multiplied by the same normalized form
        let mut out =
            NumerPoly { nvars: self.nvars, den: self.den.clone(), terms: BTreeMap::new() };
        for f in split_one_minus_qt(alpha.0, alpha.1) {
            out.den.push_cyclo(f, 1);
        }
        if alpha.1 < 0 {
            out.den.mul_texp((-alpha.1) as u32);
        }
        for (e, n) in &chain.terms {
            out.add_num(e.clone(), n.mul(&one_minus_alpha));
        }
        let mut tail: BTreeMap<XMono, QtPoly> = self.terms.clone();
        for extra in extras {
            for (e, n) in &extra.terms {
                match tail.entry(e.clone()) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(n.clone());
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        let s = o.get().add(n);
                        if s.is_zero() {
                            o.remove();
                        } else {
                            *o.get_mut() = s;
                        }
                    }
                }
            }
        }
        for (e, n) in tail {
            out.add_num(e, n.mul(&one_minus_t));
        }
        out.reduce();
        out
    }

    /// Elementary jump `J^{gamma}_{m+1,k}` (gamma a monomial exponent pair).
    pub fn elem_jump_op(&self, m1: usize, k: usize, gamma: (u32, i64)) -> Result<Self> {
        if gamma == (0, 0) {
            return Err(Error::AlphaIsOne);
        }
        if k == 0 {
            return Err(Error::RangeViolation("elem_jump: k must be >= 1".into()));
        }
        let m = m1 - 1;
        let mut partials = Vec::with_capacity(k + 1);
        partials.push(self.clone());
        for step in 0..k {
            let idx = m + k - step;
            let next = partials.last().unwrap().ti_op(idx)?;
            partials.push(next);
        }
        let chain = partials[k].clone();
        let extras: Vec<&NumerPoly> = (2..=k).map(|i| &partials[k - i + 1]).collect();
        Ok(self.yang_combine(&chain, &extras, gamma))
    }

    /// Elementary dual jump `Jdag^{gamma}_{m+1,ell}`.
    pub fn elem_jump_dual_op(&self, m1: usize, ell: usize, gamma: (u32, i64)) -> Result<Self> {
        if gamma == (0, 0) {
            return Err(Error::AlphaIsOne);
        }
        if ell == 0 {
            return Err(Error::RangeViolation("elem_jump_dual: ell must be >= 1".into()));
        }
        let m = m1 - 1;
        let mut partials = Vec::with_capacity(ell + 1);
        partials.push(self.clone());
        for i in 1..=ell {
            let next = partials.last().unwrap().ti_op(m + i)?;
            partials.push(next);
        }
        let chain = partials[ell].clone();
        let extras: Vec<&NumerPoly> = (1..ell).map(|i| &partials[i]).collect();
        Ok(self.yang_combine(&chain, &extras, gamma))
    }
}

fn check_index(i: usize, nvars: usize) -> Result<()> {
    if i < 1 || i + 1 > nvars {
        return Err(Error::IndexOutOfRange { index: i, nvars });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke;

    #[test]
    fn numer_ops_match_macpoly_ops() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..8 {
            let p = hecke::random_macpoly(&mut rng, 3, 3, 4);
            let np = NumerPoly::from_macpoly(&p);
            assert_eq!(np.to_macpoly(), p);
            for i in 1..3 {
                assert_eq!(np.ti_op(i).unwrap().to_macpoly(), hecke::apply_ti(&p, i).unwrap());
                assert_eq!(np.si_op(i).unwrap().to_macpoly(), hecke::apply_si(&p, i).unwrap());
            }
            assert_eq!(np.aff_op().to_macpoly(), hecke::apply_aff(&p));
            let alpha = QtFraction::monomial(1, 2);
            assert_eq!(
                np.yang_op(1, (1, 2)).unwrap().to_macpoly(),
                hecke::apply_yang(&p, 1, &alpha).unwrap()
            );
        }
    }
}
