//! Specialization at `q^a t^b = 1`: degeneration detection, the substitution
//! `q = omega u^{-b/d}, t = u^{a/d}` over a cyclotomic extension, specialized
//! polynomial evaluation and factorization-identity checking.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::cyclo::{CycloField, CycloFraction, CycloNum, CycloPoly};
use crate::denom::den_of;
use crate::error::{Error, Result};
use crate::factored::divides_spec;
use crate::fraction::QtFraction;
use crate::graph::{Composition, MacEngine};
use crate::macpoly::{MacPoly, XMono};
use crate::numer::MonomialImage;
use crate::qtpoly::QtPoly;

/// A specialization point `q^a t^b = 1`.
///
/// The substitution is `q = omega u^{-b/d}`, `t = u^{a/d}` with
/// `d = gcd(a, b)` and `omega = zeta_a^omega_pow`. The root must satisfy
/// `ord(omega^{a/d}) = d`, which for `omega = zeta_a^K` means `gcd(K, d) = 1`;
/// this keeps `q^{a'} t^{b'}` away from 1 for every pair that is not a
/// multiple of `(a, b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpecPoint {
    pub a: u32,
    pub b: u32,
    pub omega_pow: u32,
}

impl SpecPoint {
    pub fn new(a: u32, b: u32, omega_pow: u32) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::RangeViolation(format!(
                "specialization point needs positive exponents, got ({a}, {b})"
            )));
        }
        let d = a.gcd(&b);
        if omega_pow.gcd(&d) != 1 {
            return Err(Error::RangeViolation(format!(
                "omega = zeta_{a}^{omega_pow} has ord(omega^(a/d)) != d = {d}"
            )));
        }
        Ok(SpecPoint { a, b, omega_pow })
    }

    /// Default root `zeta_a`.
    pub fn standard(a: u32, b: u32) -> Result<Self> {
        SpecPoint::new(a, b, 1)
    }

    pub fn d(&self) -> u32 {
        self.a.gcd(&self.b)
    }

    /// Parses `q^a*t^b=1` (also `q^a t^b`, `qt^2=1`, `q*t=1`).
    pub fn parse(s: &str) -> Result<(u32, u32)> {
        let cleaned: String =
            s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
        let cleaned = cleaned.strip_suffix("=1").unwrap_or(&cleaned);
        let rest = cleaned
            .strip_prefix('q')
            .ok_or_else(|| Error::Parse(format!("bad specialization point {s:?}")))?;
        let (a, rest) = if let Some(r) = rest.strip_prefix('^') {
            let digits: String = r.chars().take_while(|c| c.is_ascii_digit()).collect();
            let a = digits.parse::<u32>().map_err(|e| Error::Parse(e.to_string()))?;
            (a, &r[digits.len()..])
        } else {
            (1, rest)
        };
        let rest = rest
            .strip_prefix('t')
            .ok_or_else(|| Error::Parse(format!("bad specialization point {s:?}")))?;
        let b = if let Some(r) = rest.strip_prefix('^') {
            r.parse::<u32>().map_err(|e| Error::Parse(e.to_string()))?
        } else if rest.is_empty() {
            1
        } else {
            return Err(Error::Parse(format!("bad specialization point {s:?}")));
        };
        Ok((a, b))
    }
}

/// Field and exponent bookkeeping for one specialization point.
pub struct SpecContext {
    pub point: SpecPoint,
    pub field: CycloField,
}

impl SpecContext {
    pub fn new(point: SpecPoint) -> Self {
        SpecContext { point, field: CycloField::new(point.a) }
    }

    /// Image of `q^i t^j`: `(root power, u exponent)`.
    fn mono_image(&self, i: u32, j: u32) -> (i64, i64) {
        let d = self.point.d() as i64;
        let a = self.point.a as i64;
        let b = self.point.b as i64;
        let w = self.point.omega_pow as i64 * i as i64;
        let e = (a * j as i64 - b * i as i64) / d;
        (w, e)
    }

    /// Specializes a bivariate polynomial into a Laurent pair
    /// `(poly, shift)` meaning `u^shift * poly`.
    pub fn spec_qtpoly(&self, p: &QtPoly) -> (CycloPoly, i64) {
        if p.is_zero() {
            return (CycloPoly::zero(), 0);
        }
        let mut acc: BTreeMap<i64, CycloNum> = BTreeMap::new();
        for ((i, j), c) in p.iter() {
            let (w, e) = self.mono_image(i, j);
            let root = self.field.root_pow(w);
            let val = self
                .field
                .mul(&root, &self.field.from_rational(BigRational::from_integer(c.clone())));
            let entry = acc.entry(e).or_insert_with(CycloNum::zero);
            *entry = self.field.add(entry, &val);
        }
        acc.retain(|_, v| !v.is_zero());
        if acc.is_empty() {
            return (CycloPoly::zero(), 0);
        }
        let min = *acc.keys().next().unwrap();
        let max = *acc.keys().next_back().unwrap();
        let mut coeffs = vec![CycloNum::zero(); (max - min + 1) as usize];
        for (e, v) in acc {
            coeffs[(e - min) as usize] = v;
        }
        let mut poly = CycloPoly::zero();
        for (e, c) in coeffs.into_iter().enumerate() {
            if !c.is_zero() {
                poly = poly.add(&self.field, &CycloPoly::monomial(c, e));
            }
        }
        (poly, min)
    }

    /// Specializes a reduced (q, t)-fraction; errors when the denominator
    /// vanishes at the point.
    pub fn spec_fraction(&self, c: &QtFraction) -> Result<CycloFraction> {
        let (pn, sn) = self.spec_qtpoly(c.num());
        if pn.is_zero() {
            return Ok(CycloFraction::zero());
        }
        let dp = c.den_poly();
        let (pd, sd) = self.spec_qtpoly(&dp);
        if pd.is_zero() {
            return Err(Error::DegeneratePolynomial { a: self.point.a, b: self.point.b as i64 });
        }
        let shift = sn - sd;
        let (num, den) = if shift >= 0 {
            (mul_upow(&self.field, &pn, shift as usize), pd)
        } else {
            (pn, mul_upow(&self.field, &pd, (-shift) as usize))
        };
        CycloFraction::new(&self.field, num, den)
    }
}

fn mul_upow(f: &CycloField, p: &CycloPoly, e: usize) -> CycloPoly {
    if e == 0 {
        return p.clone();
    }
    let one = f.one();
    p.mul(f, &CycloPoly::monomial(one, e))
}

/// Whether `M_v` degenerates at `q^a t^b = 1`: some denominator factor
/// `(1 - q^{a'} t^{b'})` is divisible by `1 - q^a t^b`.
pub fn degenerates(engine: &mut MacEngine, v: &Composition, a: u32, b: u32) -> Result<bool> {
    if a == 0 && b == 0 {
        return Err(Error::RangeViolation("degenerates: (a, b) must be nonzero".into()));
    }
    let den = den_of(engine, v)?;
    Ok(den.factors.keys().any(|&(fa, fb)| divides_spec((a, b as i64), (fa, fb))))
}

/// A polynomial in the x-variables with specialized coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecMacPoly {
    nvars: usize,
    terms: BTreeMap<XMono, CycloFraction>,
}

impl SpecMacPoly {
    pub fn zero(nvars: usize) -> Self {
        SpecMacPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: CycloFraction) -> Self {
        let mut p = SpecMacPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(XMono::from_elem(0, nvars), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&XMono, &CycloFraction)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, f: &CycloField, e: XMono, c: CycloFraction) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(f, &c)?;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, f: &CycloField, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(f, e.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn mul(&self, f: &CycloField, other: &Self) -> Result<Self> {
        let mut out = SpecMacPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let mut e = e1.clone();
                for (x, y) in e.iter_mut().zip(e2.iter()) {
                    *x += y;
                }
                out.add_term(f, e, c1.mul(f, c2)?)?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for SpecMacPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
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
                .map(|(i, &a)| if a == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, a) })
                .collect();
            if mono.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Specializes `M_v` at the point; errors when `M_v` degenerates there.
pub fn specialize_mac(
    engine: &mut MacEngine,
    v: &Composition,
    point: SpecPoint,
) -> Result<SpecMacPoly> {
    if degenerates(engine, v, point.a, point.b)? {
        let den = den_of(engine, v)?;
        let (fa, fb) = den
            .factors
            .keys()
            .copied()
            .find(|&(fa, fb)| divides_spec((point.a, point.b as i64), (fa, fb)))
            .unwrap();
        return Err(Error::DegeneratePolynomial { a: fa, b: fb });
    }
    let ctx = SpecContext::new(point);
    let m = engine.mac(v)?;
    spec_macpoly(&ctx, &m)
}

/// Specializes every coefficient of an explicit polynomial.
pub fn spec_macpoly(ctx: &SpecContext, p: &MacPoly) -> Result<SpecMacPoly> {
    let mut out = SpecMacPoly::zero(p.nvars());
    for (e, c) in p.iter() {
        let sc = ctx.spec_fraction(c)?;
        out.add_term(&ctx.field, e.clone(), sc)?;
    }
    Ok(out)
}

/// One multiplicand of an identity right-hand side: a signed monomial
/// `sign * u^uexp * w^wexp * var` (the variable is optional).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhsTerm {
    pub coeff: BigInt,
    pub uexp: u32,
    pub wexp: u32,
    pub var: Option<usize>,
}

/// A linear factor `term` or `term1 +- term2`.
#[derive(Clone, Debug)]
pub struct RhsFactor {
    pub terms: Vec<RhsTerm>,
}

/// A declarative factorization identity.
#[derive(Clone, Debug)]
pub struct IdentitySpec {
    pub name: String,
    pub v: Composition,
    pub point: SpecPoint,
    pub var_names: Vec<String>,
    /// per-position images of the original variables (identity when empty)
    pub subs: Vec<MacPoly>,
    pub rhs: Vec<RhsFactor>,
}

impl IdentitySpec {
    fn term_to_spec(&self, ctx: &SpecContext, t: &RhsTerm) -> SpecMacPoly {
        let f = &ctx.field;
        let root = f.root_pow(ctx.point.omega_pow as i64 * t.wexp as i64);
        let c = f.mul(&root, &f.from_rational(BigRational::from_integer(t.coeff.clone())));
        let num = CycloPoly::monomial(c, t.uexp as usize);
        let frac = CycloFraction::from_poly(f, num);
        match t.var {
            None => SpecMacPoly::constant(self.var_names.len(), frac),
            Some(i) => {
                let mut e = XMono::from_elem(0, self.var_names.len());
                e[i] = 1;
                let mut p = SpecMacPoly::zero(self.var_names.len());
                p.add_term(f, e, frac).unwrap();
                p
            }
        }
    }

    /// Expands the declared right-hand side product.
    pub fn rhs_poly(&self, ctx: &SpecContext) -> Result<SpecMacPoly> {
        let f = &ctx.field;
        let mut acc = SpecMacPoly::constant(
            self.var_names.len(),
            CycloFraction::from_poly(f, CycloPoly::monomial(f.one(), 0)),
        );
        for factor in &self.rhs {
            let mut fp = SpecMacPoly::zero(self.var_names.len());
            for t in &factor.terms {
                fp = fp.add(f, &self.term_to_spec(ctx, t))?;
            }
            acc = acc.mul(f, &fp)?;
        }
        Ok(acc)
    }

    /// Evaluates the left-hand side: `M_v`, substituted, then specialized.
    pub fn lhs_poly(&self, engine: &mut MacEngine) -> Result<SpecMacPoly> {
        if degenerates(engine, &self.v, self.point.a, self.point.b)? {
            return Err(Error::DegeneratePolynomial {
                a: self.point.a,
                b: self.point.b as i64,
            });
        }
        let m = engine.mac(&self.v)?;
        let substituted = if self.subs.is_empty() {
            if self.v.len() != self.var_names.len() {
                return Err(Error::NvarsMismatch {
                    left: self.v.len(),
                    right: self.var_names.len(),
                });
            }
            (*m).clone()
        } else {
            m.substitute_x(&self.subs)?
        };
        let ctx = SpecContext::new(self.point);
        spec_macpoly(&ctx, &substituted)
    }

    /// When every substitution image is a plain monomial, returns the
    /// per-variable exponent data for the fraction-free route.
    fn monomial_images(&self) -> Option<Vec<MonomialImage>> {
        if self.subs.is_empty() {
            return None;
        }
        let mut out = Vec::with_capacity(self.subs.len());
        for im in &self.subs {
            if im.num_terms() != 1 {
                return None;
            }
            let (e, c) = im.iter().next().unwrap();
            let var = match e.iter().filter(|&&x| x > 0).count() {
                0 => None,
                1 => {
                    let (j, &exp) = e.iter().enumerate().find(|(_, &x)| x > 0).unwrap();
                    if exp != 1 {
                        return None;
                    }
                    Some(j)
                }
                _ => return None,
            };
            if !c.den().is_one() || c.num().num_terms() != 1 {
                return None;
            }
            let ((q_pow, t_pow), coeff) = c.num().leading().unwrap();
            if !coeff.is_one() {
                return None;
            }
            out.push(MonomialImage { var, q_pow, t_pow });
        }
        Some(out)
    }

    /// Exact comparison of both sides.
    ///
    /// Runs fraction-free on the shared-denominator form whenever the
    /// substitution images are monomials: with `M_v = N_v / D`, the identity
    /// holds iff `spec(N_v) = RHS * spec(D)` term by term.
    pub fn check(&self, engine: &mut MacEngine) -> Result<bool> {
        let ctx = SpecContext::new(self.point);
        if degenerates(engine, &self.v, self.point.a, self.point.b)? {
            return Err(Error::DegeneratePolynomial {
                a: self.point.a,
                b: self.point.b as i64,
            });
        }
        let images = self.monomial_images();
        if self.subs.is_empty() || images.is_some() {
            let np = engine.walk(&self.v)?;
            let np = match images {
                Some(images) => np.substitute_monomials(&images, self.var_names.len())?,
                None => {
                    if self.v.len() != self.var_names.len() {
                        return Err(Error::NvarsMismatch {
                            left: self.v.len(),
                            right: self.var_names.len(),
                        });
                    }
                    (*np).clone()
                }
            };
            let f = &ctx.field;
            let (pd, sd) = ctx.spec_qtpoly(&np.den().to_poly());
            if pd.is_zero() {
                return Err(Error::DegeneratePolynomial {
                    a: self.point.a,
                    b: self.point.b as i64,
                });
            }
            let rhs = self.rhs_poly(&ctx)?;
            // every RHS key must appear with a matching coefficient, and
            // every LHS key must be covered
            let lhs_map: BTreeMap<&XMono, &crate::qtpoly::QtPoly> = np.iter().collect();
            let mut lhs_keys: std::collections::BTreeSet<&XMono> =
                lhs_map.keys().copied().collect();
            for (e, c) in rhs.iter() {
                lhs_keys.remove(e);
                let num = match lhs_map.get(e) {
                    Some(n) => (*n).clone(),
                    None => crate::qtpoly::QtPoly::zero(),
                };
                let (pn, sn) = ctx.spec_qtpoly(&num);
                if !c.den_is_trivial(f) {
                    return Err(Error::Internal(
                        "identity right-hand side has a fractional coefficient".into(),
                    ));
                }
                let mut lhs_side = pn;
                let mut rhs_side = c.num.mul(f, &pd);
                let s = sn - sd;
                if s >= 0 {
                    lhs_side = mul_upow(f, &lhs_side, s as usize);
                } else {
                    rhs_side = mul_upow(f, &rhs_side, (-s) as usize);
                }
                if lhs_side != rhs_side {
                    return Ok(false);
                }
            }
            // remaining LHS terms must specialize to zero
            for e in lhs_keys {
                let (pn, _) = ctx.spec_qtpoly(lhs_map[e]);
                if !pn.is_zero() {
                    return Ok(false);
                }
            }
            return Ok(true);
        }
        Ok(self.lhs_poly(engine)? == self.rhs_poly(&ctx)?)
    }
}

/// Parses the declarative identity format.
///
/// ```text
/// # name
/// mac 2,1,0,2,1,0
/// point q t^3
/// omega 1
/// vars x1 x2 x3 x4 x5 x6
/// sub x3 = t y1          (optional, one line per original variable)
/// rhs u^6                (prefactor)
/// rhs u x2 - x1          (one line per linear factor)
/// ```
pub fn parse_identity(text: &str) -> Result<IdentitySpec> {
    let mut name = String::from("identity");
    let mut v: Option<Composition> = None;
    let mut point_ab: Option<(u32, u32)> = None;
    let mut omega: u32 = 1;
    let mut var_names: Vec<String> = Vec::new();
    let mut sub_lines: Vec<(String, String)> = Vec::new();
    let mut rhs_lines: Vec<String> = Vec::new();

    for raw in text.lines() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            if name == "identity" {
                name = rest.trim().to_string();
            }
            continue;
        }
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match key {
            "mac" => v = Some(rest.parse()?),
            "point" => point_ab = Some(SpecPoint::parse(rest)?),
            "omega" => {
                omega = rest.parse().map_err(|e| Error::Parse(format!("omega: {e}")))?
            }
            "vars" => var_names = rest.split_whitespace().map(|s| s.to_string()).collect(),
            "sub" => {
                let (lhs, rhs) = rest
                    .split_once('=')
                    .ok_or_else(|| Error::Parse(format!("sub line without '=': {line}")))?;
                sub_lines.push((lhs.trim().to_string(), rhs.trim().to_string()));
            }
            "rhs" => rhs_lines.push(rest.to_string()),
            other => return Err(Error::Parse(format!("unknown identity key {other:?}"))),
        }
    }

    let v = v.ok_or_else(|| Error::Parse("identity lacks a mac line".into()))?;
    let (a, b) = point_ab.ok_or_else(|| Error::Parse("identity lacks a point line".into()))?;
    let point = SpecPoint::new(a, b, omega)?;
    if var_names.is_empty() {
        return Err(Error::Parse("identity lacks a vars line".into()));
    }
    let var_index = |name: &str| -> Result<usize> {
        var_names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))
    };

    // substitution images: monomials [t^e] [q^e] var over the declared vars
    let mut subs = Vec::new();
    if !sub_lines.is_empty() {
        let mut images: Vec<Option<MacPoly>> = vec![None; v.len()];
        for (lhs, rhs) in &sub_lines {
            let idx = lhs
                .strip_prefix('x')
                .and_then(|s| s.parse::<usize>().ok())
                .filter(|&i| i >= 1 && i <= v.len())
                .ok_or_else(|| Error::Parse(format!("bad sub target {lhs:?}")))?;
            let mut coeff = QtFraction::one();
            let mut var: Option<usize> = None;
            for tok in rhs.split_whitespace() {
                if let Some(e) = parse_power(tok, 't') {
                    coeff = coeff.mul_t_pow(e as i64);
                } else if let Some(e) = parse_power(tok, 'q') {
                    coeff = coeff.mul_q_pow(e as i64);
                } else {
                    var = Some(var_index(tok)?);
                }
            }
            let image = match var {
                Some(i) => MacPoly::var(var_names.len(), i + 1).scale(&coeff),
                None => MacPoly::constant(var_names.len(), coeff),
            };
            images[idx - 1] = Some(image);
        }
        for (i, im) in images.into_iter().enumerate() {
            subs.push(im.ok_or_else(|| {
                Error::Parse(format!("missing substitution for x{}", i + 1))
            })?);
        }
    }

    let mut rhs = Vec::new();
    for line in &rhs_lines {
        rhs.push(parse_rhs_factor(line, &var_index)?);
    }
    Ok(IdentitySpec { name, v, point, var_names, subs, rhs })
}

fn parse_power(tok: &str, var: char) -> Option<u32> {
    let rest = tok.strip_prefix(var)?;
    if rest.is_empty() {
        return Some(1);
    }
    rest.strip_prefix('^').and_then(|e| e.parse().ok())
}

fn parse_rhs_factor(line: &str, var_index: &impl Fn(&str) -> Result<usize>) -> Result<RhsFactor> {
    // tokenize, treating +/- as separators
    let spaced = line.replace('+', " + ").replace('-', " - ");
    let tokens: Vec<&str> = spaced.split_whitespace().collect();
    let mut terms = Vec::new();
    let mut sign = BigInt::one();
    let mut cur: Option<RhsTerm> = None;
    let flush = |cur: &mut Option<RhsTerm>, terms: &mut Vec<RhsTerm>| {
        if let Some(t) = cur.take() {
            terms.push(t);
        }
    };
    for tok in tokens {
        match tok {
            "+" => {
                flush(&mut cur, &mut terms);
                sign = BigInt::one();
            }
            "-" => {
                flush(&mut cur, &mut terms);
                sign = -BigInt::one();
            }
            _ => {
                let t = cur.get_or_insert_with(|| RhsTerm {
                    coeff: sign.clone(),
                    uexp: 0,
                    wexp: 0,
                    var: None,
                });
                if let Some(e) = parse_power(tok, 'u') {
                    t.uexp += e;
                } else if let Some(e) = parse_power(tok, 'w') {
                    t.wexp += e;
                } else if let Ok(k) = tok.parse::<i64>() {
                    t.coeff *= BigInt::from(k);
                } else {
                    if t.var.is_some() {
                        return Err(Error::Parse(format!(
                            "factor {line:?} multiplies two variables in one term"
                        )));
                    }
                    t.var = Some(var_index(tok)?);
                }
            }
        }
    }
    flush(&mut cur, &mut terms);
    if terms.is_empty() {
        return Err(Error::Parse(format!("empty rhs factor {line:?}")));
    }
    Ok(RhsFactor { terms })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    #[test]
    fn point_parsing() {
        assert_eq!(SpecPoint::parse("q^2*t^3=1").unwrap(), (2, 3));
        assert_eq!(SpecPoint::parse("qt^2=1").unwrap(), (1, 2));
        assert_eq!(SpecPoint::parse("q t").unwrap(), (1, 1));
        assert!(SpecPoint::parse("2t").is_err());
    }

    #[test]
    fn point_validation() {
        assert!(SpecPoint::new(2, 3, 0).is_ok()); // d = 1: any root works
        assert!(SpecPoint::new(2, 4, 1).is_ok()); // d = 2, omega = zeta_2
        assert!(SpecPoint::new(2, 4, 0).is_err()); // omega = 1 but d = 2
        assert!(SpecPoint::new(0, 1, 1).is_err());
    }

    #[test]
    fn substitution_kills_target_only() {
        // q^a t^b -> 1 exactly for multiples of (a, b)
        let ctx = SpecContext::new(SpecPoint::standard(2, 3).unwrap());
        for ap in 0..=6u32 {
            for bp in 0..=6u32 {
                if ap == 0 && bp == 0 {
                    continue;
                }
                let p = QtPoly::one_minus_qt(ap, bp as i64);
                let (sp, _) = ctx.spec_qtpoly(&p);
                let vanishes = sp.is_zero();
                let expected = divides_spec((2, 3), (ap, bp as i64));
                assert_eq!(vanishes, expected, "(a', b') = ({ap}, {bp})");
            }
        }
    }

    #[test]
    fn degenerates_310() {
        let mut eng = MacEngine::new();
        assert!(degenerates(&mut eng, &c(&[3, 1, 0]), 1, 1).unwrap());
        assert!(!degenerates(&mut eng, &c(&[3, 1, 0]), 2, 2).unwrap());
    }

    #[test]
    fn specialize_zero_vector_is_one() {
        let mut eng = MacEngine::new();
        let point = SpecPoint::standard(1, 2).unwrap();
        let s = specialize_mac(&mut eng, &c(&[0, 0, 0]), point).unwrap();
        assert_eq!(s.num_terms(), 1);
    }

    #[test]
    fn identity_parser_roundtrip() {
        let text = "\
# demo
mac 1,0
point q t^2
vars x1 x2
rhs u^2
rhs u x2 - x1
";
        let id = parse_identity(text).unwrap();
        assert_eq!(id.v, c(&[1, 0]));
        assert_eq!((id.point.a, id.point.b), (1, 2));
        assert_eq!(id.rhs.len(), 2);
        assert_eq!(id.rhs[1].terms.len(), 2);
        assert_eq!(id.rhs[1].terms[0].uexp, 1);
        assert_eq!(id.rhs[1].terms[0].var, Some(1));
        assert_eq!(id.rhs[1].terms[1].coeff, BigInt::from(-1));
    }
}
