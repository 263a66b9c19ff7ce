//! Closed-form jump operators moving a block past another in one stroke,
//! their composite block form, and the divisor bound attached to a block jump.

use crate::error::{Error, Result};
use crate::factored::FactoredQt;
use crate::fraction::QtFraction;
use crate::graph::{jump_block_values, Composition};
use crate::hecke::{apply_ti, apply_yang};
use crate::macpoly::MacPoly;
use crate::spectral::spectre_hat;

/// Parameters of a block jump `u' a^k b^ell u'' -> u' b^ell a^k u''`.
///
/// `pos` is the 1-based position of the first entry of the `a`-block;
/// `alpha_exp` and `beta_exp` are the t-exponents of the spectral entries at
/// the last `a` and the first `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JumpSpec {
    pub pos: usize,
    pub k: usize,
    pub ell: usize,
    pub a: u32,
    pub b: u32,
    pub alpha_exp: i64,
    pub beta_exp: i64,
}

impl JumpSpec {
    /// Reads every parameter off the source vertex and validates the shape.
    pub fn from_vertex(v: &Composition, pos: usize, k: usize, ell: usize) -> Result<JumpSpec> {
        let (a, b) = jump_block_values(v, pos, k, ell).ok_or_else(|| {
            Error::SpectralMismatch(format!(
                "vertex {v} has no a^{k} b^{ell} block pattern at position {pos}"
            ))
        })?;
        let zh = spectre_hat(v.parts());
        let za = zh.get(pos + k - 1);
        let zb = zh.get(pos + k);
        if za.q != a as i64 || zb.q != b as i64 {
            return Err(Error::SpectralMismatch(format!(
                "spectral q-exponents at {v} disagree with block values ({a}, {b})"
            )));
        }
        Ok(JumpSpec { pos, k, ell, a, b, alpha_exp: za.t, beta_exp: zb.t })
    }

    /// Re-checks a caller-supplied spec against a concrete vertex.
    pub fn validate_against(&self, v: &Composition) -> Result<()> {
        let fresh = JumpSpec::from_vertex(v, self.pos, self.k, self.ell)?;
        if fresh != *self {
            return Err(Error::SpectralMismatch(format!(
                "jump spec {self:?} does not match vertex {v}: expected {fresh:?}"
            )));
        }
        Ok(())
    }

    pub(crate) fn delta(&self) -> i64 {
        self.beta_exp - self.alpha_exp
    }

    pub fn target(&self, v: &Composition) -> Result<Composition> {
        crate::graph::step_apply(
            v,
            crate::graph::PathStep::Jump { pos: self.pos, k: self.k, ell: self.ell },
        )
    }
}

/// Elementary jump `J^gamma_{m+1, k}`: moves one `b` left across `a^k`.
///
/// `J = T_{m+k} .. T_{m+1} + (1-t)/(1-gamma) (1 + sum_{i=2}^k T_{m+k} .. T_{m+i})`
pub fn elem_jump(p: &MacPoly, m1: usize, k: usize, gamma: &QtFraction) -> Result<MacPoly> {
    if gamma.is_one() {
        return Err(Error::AlphaIsOne);
    }
    if k == 0 {
        return Err(Error::RangeViolation("elem_jump: k must be >= 1".into()));
    }
    if k == 1 {
        return apply_yang(p, m1, gamma);
    }
    let m = m1 - 1;
    // partials[i] = p T_{m+k} T_{m+k-1} .. T_{m+k-i+1}, so partials[k-i+1]
    // is the product ending at T_{m+i}
    let mut partials = Vec::with_capacity(k + 1);
    partials.push(p.clone());
    for step in 0..k {
        let idx = m + k - step;
        let next = apply_ti(partials.last().unwrap(), idx)?;
        partials.push(next);
    }
    let main = partials[k].clone();
    let mut tail = p.clone();
    for i in 2..=k {
        tail = tail.add(&partials[k - i + 1])?;
    }
    let scalar = QtFraction::yang_scalar(gamma)?;
    main.add(&tail.scale(&scalar))
}

/// Elementary dual jump `Jdag^gamma_{m+1, ell}`: moves one `a` right across `b^ell`.
///
/// `Jdag = T_{m+1} .. T_{m+ell} + (1-t)/(1-gamma) (1 + sum_{i=1}^{ell-1} T_{m+1} .. T_{m+i})`
pub fn elem_jump_dual(p: &MacPoly, m1: usize, ell: usize, gamma: &QtFraction) -> Result<MacPoly> {
    if gamma.is_one() {
        return Err(Error::AlphaIsOne);
    }
    if ell == 0 {
        return Err(Error::RangeViolation("elem_jump_dual: ell must be >= 1".into()));
    }
    if ell == 1 {
        return apply_yang(p, m1, gamma);
    }
    let m = m1 - 1;
    let mut partials = Vec::with_capacity(ell + 1);
    partials.push(p.clone());
    for i in 1..=ell {
        let next = apply_ti(partials.last().unwrap(), m + i)?;
        partials.push(next);
    }
    let main = partials[ell].clone();
    let mut tail = p.clone();
    for partial in partials.iter().take(ell).skip(1) {
        tail = tail.add(partial)?;
    }
    let scalar = QtFraction::yang_scalar(gamma)?;
    main.add(&tail.scale(&scalar))
}

fn gamma_mono(spec: &JumpSpec, texp: i64) -> QtFraction {
    QtFraction::monomial((spec.b - spec.a) as i64, texp)
}

/// Block jump via the factorization into `ell` elementary jumps.
pub fn block_jump(p: &MacPoly, spec: &JumpSpec) -> Result<MacPoly> {
    let d = spec.delta();
    let mut cur = p.clone();
    for j in 0..spec.ell {
        let gamma = gamma_mono(spec, d - spec.k as i64 + 1 - j as i64);
        cur = elem_jump(&cur, spec.pos + j, spec.k, &gamma)?;
    }
    Ok(cur)
}

/// The same block jump via the dual factorization into `k` elementary dual jumps.
pub fn block_jump_dual_route(p: &MacPoly, spec: &JumpSpec) -> Result<MacPoly> {
    let d = spec.delta();
    let mut cur = p.clone();
    for j in 0..spec.k {
        let gamma = gamma_mono(spec, d - spec.ell as i64 + 1 - j as i64);
        cur = elem_jump_dual(&cur, spec.pos + spec.k - 1 - j, spec.ell, &gamma)?;
    }
    Ok(cur)
}

/// Block jump in the shared-denominator representation.
pub fn block_jump_numer(p: &crate::numer::NumerPoly, spec: &JumpSpec) -> Result<crate::numer::NumerPoly> {
    let d = spec.delta();
    let mut cur = p.clone();
    for j in 0..spec.ell {
        let gamma = (spec.b - spec.a, d - spec.k as i64 + 1 - j as i64);
        cur = cur.elem_jump_op(spec.pos + j, spec.k, gamma)?;
    }
    Ok(cur)
}

/// The dual route in the shared-denominator representation.
pub fn block_jump_dual_numer(
    p: &crate::numer::NumerPoly,
    spec: &JumpSpec,
) -> Result<crate::numer::NumerPoly> {
    let d = spec.delta();
    let mut cur = p.clone();
    for j in 0..spec.k {
        let gamma = (spec.b - spec.a, d - spec.ell as i64 + 1 - j as i64);
        cur = cur.elem_jump_dual_op(spec.pos + spec.k - 1 - j, spec.ell, gamma)?;
    }
    Ok(cur)
}

/// Divisor bound of the block jump rule:
/// `prod_{i = max(k, ell) - 1}^{k + ell - 2} (1 - q^{b-a} t^{beta - alpha - i})`.
pub fn block_divisor_bound(spec: &JumpSpec) -> FactoredQt {
    let d = spec.delta();
    let mut out = FactoredQt::one();
    let lo = spec.k.max(spec.ell) as i64 - 1;
    let hi = spec.k as i64 + spec.ell as i64 - 2;
    for i in lo..=hi {
        out.push_factor(spec.b - spec.a, d - i, 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{MacEngine, PathStep};

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    #[test]
    fn spec_from_vertex_reads_spectrum() {
        // 0223330: zhat = [t, q^2t^3, q^2t^2, q^3t^6, q^3t^5, q^3t^4, 1]
        let v = c(&[0, 2, 2, 3, 3, 3, 0]);
        let spec = JumpSpec::from_vertex(&v, 2, 2, 3).unwrap();
        assert_eq!((spec.a, spec.b), (2, 3));
        assert_eq!(spec.alpha_exp, 2);
        assert_eq!(spec.beta_exp, 6);
    }

    #[test]
    fn single_step_blocks_reduce_to_yang() {
        let mut eng = MacEngine::new();
        let v = c(&[0, 1, 2, 0]);
        let p = eng.mac(&v).unwrap();
        let spec = JumpSpec::from_vertex(&v, 2, 1, 1).unwrap();
        let jumped = block_jump(&p, &spec).unwrap();
        let stepwise = eng
            .edge_apply(&p, &v, PathStep::S(2))
            .unwrap();
        assert_eq!(jumped, stepwise);
        let dual = block_jump_dual_route(&p, &spec).unwrap();
        assert_eq!(dual, stepwise);
    }

    #[test]
    fn block_jump_matches_path_0022() {
        let mut eng = MacEngine::new();
        let v = c(&[0, 0, 2, 2]);
        // a-block 0^2 at position 1, b-block 2^2
        let spec = JumpSpec::from_vertex(&v, 1, 2, 2).unwrap();
        let p = eng.mac(&v).unwrap();
        let jumped = block_jump(&p, &spec).unwrap();
        let target = spec.target(&v).unwrap();
        assert_eq!(target, c(&[2, 2, 0, 0]));
        let direct = eng.mac(&target).unwrap();
        assert_eq!(jumped, *direct);
        let dual = block_jump_dual_route(&p, &spec).unwrap();
        assert_eq!(dual, *direct);
    }

    #[test]
    fn divisor_bound_022330() {
        let v = c(&[0, 2, 2, 3, 3, 0]);
        let spec = JumpSpec::from_vertex(&v, 2, 2, 2).unwrap();
        let bound = block_divisor_bound(&spec);
        // (1-qt)(1-qt^2)
        let mut expect = FactoredQt::one();
        expect.push_factor(1, 1, 1);
        expect.push_factor(1, 2, 1);
        assert_eq!(bound.factors, expect.factors);
    }

    #[test]
    fn divisor_bound_degenerate_product() {
        // min(k, ell) = 1 gives the single jump-lemma factor
        let v = c(&[1, 1, 1, 3]);
        let spec = JumpSpec::from_vertex(&v, 1, 3, 1).unwrap();
        let bound = block_divisor_bound(&spec);
        assert_eq!(bound.factor_count(), 1);
    }
}
