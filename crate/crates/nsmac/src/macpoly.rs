//! Sparse polynomials in `x_1 .. x_N` over the fraction field in (q, t).

use std::collections::BTreeMap;
use std::fmt;

use serde_json::json;
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::fraction::QtFraction;

/// Exponent vector of a monomial in the x-variables.
pub type XMono = SmallVec<[u16; 12]>;

/// A sparse multivariate polynomial; coefficients are reduced (q, t)-fractions.
///
/// Invariants: no zero coefficients, every exponent tuple has length `nvars`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MacPoly {
    nvars: usize,
    terms: BTreeMap<XMono, QtFraction>,
}

impl MacPoly {
    pub fn zero(nvars: usize) -> Self {
        MacPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        MacPoly::constant(nvars, QtFraction::one())
    }

    pub fn constant(nvars: usize, c: QtFraction) -> Self {
        let mut p = MacPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(XMono::from_elem(0, nvars), c);
        }
        p
    }

    /// The variable `x_i`, 1-based.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= nvars);
        let mut e = XMono::from_elem(0, nvars);
        e[i - 1] = 1;
        let mut p = MacPoly::zero(nvars);
        p.terms.insert(e, QtFraction::one());
        p
    }

    pub fn from_terms(nvars: usize, it: impl IntoIterator<Item = (XMono, QtFraction)>) -> Self {
        let mut p = MacPoly::zero(nvars);
        for (e, c) in it {
            debug_assert_eq!(e.len(), nvars);
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&XMono, &QtFraction)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u16]) -> QtFraction {
        self.terms.get(e).cloned().unwrap_or_else(QtFraction::zero)
    }

    pub fn add_term(&mut self, e: XMono, c: QtFraction) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_nvars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.neg());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        MacPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        let mut out = MacPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let mut e = e1.clone();
                for (a, b) in e.iter_mut().zip(e2.iter()) {
                    *a += b;
                }
                out.add_term(e, c1.mul(c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &QtFraction) -> Self {
        if c.is_zero() {
            return MacPoly::zero(self.nvars);
        }
        MacPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k.mul(c))).collect(),
        }
    }

    /// Multiplies every term by `x_i` (1-based).
    pub fn mul_var(&self, i: usize) -> Result<Self> {
        if i < 1 || i > self.nvars {
            return Err(Error::IndexOutOfRange { index: i, nvars: self.nvars });
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e[i - 1] += 1;
                (e, c.clone())
            })
            .collect();
        Ok(MacPoly { nvars: self.nvars, terms })
    }

    /// Product of all variables times the polynomial.
    pub fn mul_all_vars(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                for a in e.iter_mut() {
                    *a += 1;
                }
                (e, c.clone())
            })
            .collect();
        MacPoly { nvars: self.nvars, terms }
    }

    /// Substitutes every `x_i` by `images[i-1]`; all images must share a
    /// variable count, which becomes the variable count of the result.
    pub fn substitute_x(&self, images: &[MacPoly]) -> Result<Self> {
        if images.len() != self.nvars {
            return Err(Error::NvarsMismatch { left: self.nvars, right: images.len() });
        }
        let out_vars = images.first().map(|p| p.nvars).unwrap_or(0);
        for im in images {
            if im.nvars != out_vars {
                return Err(Error::NvarsMismatch { left: out_vars, right: im.nvars });
            }
        }
        if self.nvars == 0 {
            return Ok(self.clone());
        }
        // cache powers of each image
        let mut powers: Vec<Vec<MacPoly>> = images
            .iter()
            .map(|im| vec![MacPoly::one(out_vars), im.clone()])
            .collect();
        let mut out = MacPoly::zero(out_vars);
        for (e, c) in &self.terms {
            let mut term = MacPoly::constant(out_vars, c.clone());
            for (i, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= exp as usize {
                    let next = cache.last().unwrap().mul(&images[i])?;
                    cache.push(next);
                }
                term = term.mul(&cache[exp as usize])?;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Total degree of the polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().map(|&a| a as u32).sum()).max().unwrap_or(0)
    }

    /// Canonical JSON rendering: `{"nvars":N,"terms":[{"x":[..],"num":"..","den":".."}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                json!({
                    "x": e.iter().map(|&a| a as u64).collect::<Vec<_>>(),
                    "num": c.num().to_string(),
                    "den": c.den_poly().to_string(),
                })
            })
            .collect();
        json!({ "nvars": self.nvars, "terms": terms })
    }
}

impl fmt::Display for MacPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // descending exponent order puts the dominant monomial first
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| {
                    if a == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, a)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                let cs = c.to_string();
                if cs.contains(' ') {
                    write!(f, "({})*{}", cs, mono.join("*"))?;
                } else {
                    write!(f, "{}*{}", cs, mono.join("*"))?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qtpoly::QtPoly;

    #[test]
    fn add_identity_and_commutative_mul() {
        let x1 = MacPoly::var(2, 1);
        let x2 = MacPoly::var(2, 2);
        assert_eq!(x1.add(&MacPoly::zero(2)).unwrap(), x1);
        assert_eq!(x1.mul(&x2).unwrap(), x2.mul(&x1).unwrap());
    }

    #[test]
    fn difference_of_squares() {
        let x1 = MacPoly::var(2, 1);
        let x2 = MacPoly::var(2, 2);
        let s = x1.add(&x2).unwrap();
        let d = x1.sub(&x2).unwrap();
        let prod = s.mul(&d).unwrap();
        let expect = x1.mul(&x1).unwrap().sub(&x2.mul(&x2).unwrap()).unwrap();
        assert_eq!(prod, expect);
    }

    #[test]
    fn nvars_mismatch_rejected() {
        let a = MacPoly::var(2, 1);
        let b = MacPoly::var(3, 1);
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn substitution_identity_and_monomials() {
        let p = MacPoly::var(2, 1).mul(&MacPoly::var(2, 2)).unwrap();
        // identity map
        let id = vec![MacPoly::var(2, 1), MacPoly::var(2, 2)];
        assert_eq!(p.substitute_x(&id).unwrap(), p);
        // x1 -> t*y, x2 -> y  gives t*y^2
        let t = QtFraction::from_poly(QtPoly::t());
        let images = vec![MacPoly::var(1, 1).scale(&t), MacPoly::var(1, 1)];
        let out = p.substitute_x(&images).unwrap();
        let mut e = XMono::new();
        e.push(2);
        assert_eq!(out.num_terms(), 1);
        assert_eq!(out.coeff(&e), t);
    }
}
