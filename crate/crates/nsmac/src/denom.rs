//! Factored denominators of Macdonald polynomials, the path-annotation
//! algorithms `triv` and `jump`, and the conjunction/disjunction combinators
//! on the certificates they produce.

use serde_json::json;

use crate::error::{Error, Result};
use crate::factored::{denominator_divides, FactoredQt};
use crate::fraction::{denom_ratio, denom_to_factored};
use crate::graph::{step_apply, Composition, MacEngine, Path, PathStep};
use crate::jumps::{block_divisor_bound, JumpSpec};
use crate::qtpoly::QtPoly;
use crate::spectral::spectre_hat;

/// Brute-force denominator of `M_v`: the least common multiple of the reduced
/// coefficient denominators, in factored form.
pub fn den_of(engine: &mut MacEngine, v: &Composition) -> Result<FactoredQt> {
    let d = engine.den(v)?;
    denom_to_factored(&d)
}

/// Numerator of the reduced ratio `Den(v) / Den(u)`.
pub fn ratio_numerator(engine: &mut MacEngine, u: &Composition, v: &Composition) -> Result<QtPoly> {
    Ok(ratio(engine, u, v)?.0)
}

/// Reduced ratio `Den(v) / Den(u)` as (numerator, denominator) polynomials.
pub fn ratio(
    engine: &mut MacEngine,
    u: &Composition,
    v: &Composition,
) -> Result<(QtPoly, QtPoly)> {
    let dv = engine.den(v)?;
    let du = engine.den(u)?;
    Ok(denom_ratio(&dv, &du))
}

/// The q-power rule of the `triv` algorithm, taken verbatim: an affine step
/// from vertex `w` on a path started at `u` contributes
/// `q^{(1/2) sum_i (w_i - u_i)(w_i - u_i - 1)}`.
///
/// The exponent can be fractional-looking but the sum of `d(d-1)` terms is
/// always even.
fn triv_phi_exponent(start: &Composition, w: &Composition) -> u32 {
    let s: i64 = start
        .parts()
        .iter()
        .zip(w.parts())
        .map(|(&u, &w)| {
            let d = w as i64 - u as i64;
            d * (d - 1)
        })
        .sum();
    debug_assert!(s >= 0 && s % 2 == 0);
    (s / 2) as u32
}

fn yang_factor_at(vertex: &Composition, i: usize) -> Result<(u32, i64)> {
    let zh = spectre_hat(vertex.parts());
    let alpha = zh.get(i + 1).div(zh.get(i));
    if alpha.q <= 0 {
        return Err(Error::InvalidStep { step: format!("s{i}"), vertex: vertex.to_string() });
    }
    Ok((alpha.q as u32, alpha.t))
}

/// The `triv` annotation: every Yang edge with parameter `q^a t^b`
/// contributes `(1 - q^a t^b)`; affine edges contribute the verbatim q-power.
///
/// Jump markers are expanded into their elementary swap sequences first.
pub fn algo_triv(path: &Path) -> Result<FactoredQt> {
    let flat = path.expand_jumps()?;
    let mut out = FactoredQt::one();
    let mut vertex = flat.start.clone();
    for &step in &flat.steps {
        match step {
            PathStep::Phi => {
                out.qexp += triv_phi_exponent(&flat.start, &vertex);
            }
            PathStep::S(i) => {
                let (a, b) = yang_factor_at(&vertex, i)?;
                out.push_factor(a, b, 1);
            }
            _ => unreachable!("expand_jumps leaves only S and Phi steps"),
        }
        vertex = step_apply(&vertex, step)?;
    }
    Ok(out)
}

/// The `jump` annotation: declared jump segments contribute the block-jump
/// divisor bound; all remaining steps follow the `triv` rules.
pub fn algo_jump(path: &Path) -> Result<FactoredQt> {
    let mut out = FactoredQt::one();
    let mut vertex = path.start.clone();
    for &step in &path.steps {
        match step {
            PathStep::Phi => {
                out.qexp += triv_phi_exponent(&path.start, &vertex);
            }
            PathStep::S(i) => {
                let (a, b) = yang_factor_at(&vertex, i)?;
                out.push_factor(a, b, 1);
            }
            PathStep::Jump { pos, k, ell } | PathStep::JumpDual { pos, k, ell } => {
                let spec = JumpSpec::from_vertex(&vertex, pos, k, ell)?;
                out = out.mul(&block_divisor_bound(&spec));
            }
        }
        vertex = step_apply(&vertex, step)?;
    }
    Ok(out)
}

/// A path together with a factored divisor bound for `num(Den(end)/Den(start))`.
#[derive(Clone, Debug)]
pub struct DenCertificate {
    pub path: Path,
    pub bound: FactoredQt,
    pub algo: String,
}

impl DenCertificate {
    pub fn triv(path: Path) -> Result<Self> {
        let bound = algo_triv(&path)?;
        Ok(DenCertificate { path, bound, algo: "triv".into() })
    }

    pub fn jump(path: Path) -> Result<Self> {
        let bound = algo_jump(&path)?;
        Ok(DenCertificate { path, bound, algo: "jump".into() })
    }

    /// Checks the divisibility contract against the brute-force ratio.
    /// Units and monomial parts are ignored; the comparison is on the
    /// `(1 - q^a t^b)` content.
    pub fn sound(&self, engine: &mut MacEngine) -> Result<bool> {
        let u = self.path.start.clone();
        let v = self.path.end()?;
        let (num, _) = ratio(engine, &u, &v)?;
        Ok(denominator_divides(&num, &self.bound))
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "path": self.path.steps.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            "start": self.path.start.to_string(),
            "algo": self.algo,
            "bound": factored_json(&self.bound),
        })
    }
}

pub fn factored_json(f: &FactoredQt) -> serde_json::Value {
    json!({
        "unit": f.unit.to_string(),
        "q": f.qexp,
        "t": f.texp,
        "factors": f
            .factors
            .iter()
            .rev()
            .map(|(&(a, b), &m)| json!([a, b, m]))
            .collect::<Vec<_>>(),
    })
}

/// Concatenates two certificates; the bound is the product of the bounds.
pub fn conjunction(c1: &DenCertificate, c2: &DenCertificate) -> Result<DenCertificate> {
    let path = c1.path.concat(&c2.path)?;
    Ok(DenCertificate {
        path,
        bound: c1.bound.mul(&c2.bound),
        algo: format!("{}*{}", c1.algo, c2.algo),
    })
}

/// Combines two certificates with equal endpoints; the bound is the gcd.
pub fn disjunction(c1: &DenCertificate, c2: &DenCertificate) -> Result<DenCertificate> {
    if c1.path.start != c2.path.start {
        return Err(Error::EndpointMismatch {
            left: c1.path.start.to_string(),
            right: c2.path.start.to_string(),
        });
    }
    let e1 = c1.path.end()?;
    let e2 = c2.path.end()?;
    if e1 != e2 {
        return Err(Error::EndpointMismatch { left: e1.to_string(), right: e2.to_string() });
    }
    Ok(DenCertificate {
        path: c1.path.clone(),
        bound: c1.bound.gcd_factors(&c2.bound)?,
        algo: format!("gcd({},{})", c1.algo, c2.algo),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_path;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    fn fq(qexp: u32, factors: &[(u32, i64)]) -> FactoredQt {
        let mut f = FactoredQt::monomial(qexp, 0);
        for &(a, b) in factors {
            f.push_factor(a, b, 1);
        }
        f
    }

    #[test]
    fn den_102() {
        let mut eng = MacEngine::new();
        let d = den_of(&mut eng, &c(&[1, 0, 2])).unwrap();
        let expect = fq(1, &[(1, 1)]);
        assert_eq!(d.qexp, expect.qexp);
        assert_eq!(d.factors, expect.factors);
    }

    #[test]
    fn den_310() {
        let mut eng = MacEngine::new();
        let d = den_of(&mut eng, &c(&[3, 1, 0])).unwrap();
        let expect = fq(3, &[(2, 1), (1, 1), (3, 2)]);
        assert_eq!(d.qexp, 3);
        assert_eq!(d.factors, expect.factors);
    }

    #[test]
    fn ratio_numerator_basics() {
        let mut eng = MacEngine::new();
        let v = c(&[1, 0, 2]);
        assert!(ratio_numerator(&mut eng, &v, &v).unwrap().is_one());
    }

    #[test]
    fn triv_on_paper_path() {
        // the explicit 000 -> 102 path: factors (1-qt^2)(1-qt), q-power 0
        let path = Path::new(
            c(&[0, 0, 0]),
            vec![PathStep::Phi, PathStep::S(2), PathStep::Phi, PathStep::Phi, PathStep::S(1)],
        );
        let bound = algo_triv(&path).unwrap();
        assert_eq!(bound.factors, fq(0, &[(1, 2), (1, 1)]).factors);
        // brute force Den(102) = q (1-qt): factor content divides the bound
        let mut eng = MacEngine::new();
        let den = den_of(&mut eng, &c(&[1, 0, 2])).unwrap();
        assert!(den.factor_content_divides(&bound));
    }

    #[test]
    fn triv_empty_path() {
        let path = Path::empty(c(&[0, 0]));
        assert!(algo_triv(&path).unwrap().is_one());
    }

    #[test]
    fn jump_falls_back_to_triv() {
        let path = canonical_path(&c(&[2, 1, 0]));
        assert_eq!(algo_jump(&path).unwrap(), algo_triv(&path).unwrap());
    }

    #[test]
    fn disjunction_gcd_of_coprime() {
        let path = Path::empty(c(&[0, 0]));
        let mut c1 = DenCertificate::triv(path.clone()).unwrap();
        c1.bound = fq(0, &[(1, 2)]);
        let mut c2 = DenCertificate::triv(path).unwrap();
        c2.bound = fq(0, &[(1, 3)]);
        let d = disjunction(&c1, &c2).unwrap();
        assert!(d.bound.factors.is_empty());
    }

    #[test]
    fn conjunction_concatenates() {
        let p1 = Path::new(c(&[0, 0]), vec![PathStep::Phi]);
        let p2 = Path::new(c(&[0, 1]), vec![PathStep::S(1)]);
        let c1 = DenCertificate::triv(p1).unwrap();
        let c2 = DenCertificate::triv(p2).unwrap();
        let both = conjunction(&c1, &c2).unwrap();
        assert_eq!(both.path.end().unwrap(), c(&[1, 0]));
        assert_eq!(both.bound.factor_count(), 1);
    }
}
