//! Staircase and quasi-staircase compositions, the raise/add-step/up path
//! generators that climb to them, and the mechanical pole-absence verifier.

use serde_json::json;

use crate::denom::{den_of, factored_json, ratio};
use crate::error::{Error, Result};
use crate::factored::{denominator_divides, divides_spec, FactoredQt};
use crate::graph::{step_apply, Composition, MacEngine, Path, PathStep};
use crate::jumps::{block_divisor_bound, JumpSpec};

/// `staircase(k, a, n) = ((n-1)a)^k ((n-2)a)^k .. a^k 0^k`.
pub fn staircase(k: usize, a: u32, n: usize) -> Result<Composition> {
    check_params(k, a, n)?;
    let mut parts = Vec::with_capacity(n * k);
    for level in (0..n).rev() {
        for _ in 0..k {
            parts.push(level as u32 * a);
        }
    }
    Ok(Composition::new(parts))
}

/// `Qsc(k, a, n; m, b) = ((m-1)a + b)^k .. (a+b)^k b^k 0^{k(n-m)}`.
///
/// `b = 0` is allowed and coincides with `Qsc(k, a, n; m-1, a)`.
pub fn qsc(k: usize, a: u32, n: usize, m: usize, b: u32) -> Result<Composition> {
    check_params(k, a, n)?;
    if m > n {
        return Err(Error::RangeViolation(format!("qsc: m = {m} out of range 0..={n}")));
    }
    if b > a {
        return Err(Error::RangeViolation(format!("qsc: b = {b} out of range 0..={a}")));
    }
    let mut parts = Vec::with_capacity(n * k);
    for level in (0..m).rev() {
        for _ in 0..k {
            parts.push(level as u32 * a + b);
        }
    }
    parts.resize(n * k, 0);
    Ok(Composition::new(parts))
}

fn check_params(k: usize, a: u32, n: usize) -> Result<()> {
    if k < 1 || a < 1 || n < 1 {
        return Err(Error::RangeViolation(format!(
            "staircase parameters must be positive, got k={k} a={a} n={n}"
        )));
    }
    Ok(())
}

/// Expected intermediate vertex of the raise path, after `i` of the `m` jumps.
fn raise_vertex(k: usize, a: u32, n: usize, m: usize, b: u32, i: usize) -> Composition {
    let mut parts = Vec::with_capacity(n * k);
    for level in (m - i..m).rev() {
        for _ in 0..k {
            parts.push(level as u32 * a + b + 1);
        }
    }
    for _ in 0..k * (n - m) {
        parts.push(0);
    }
    for level in (0..m - i).rev() {
        for _ in 0..k {
            parts.push(level as u32 * a + b + 1);
        }
    }
    Composition::new(parts)
}

/// Path `Qsc(k,a,n;m,b) -> Qsc(k,a,n;m,b+1)`: `mk` affine steps followed by
/// `m` block jumps carrying each raised block back over the zero block.
pub fn raise_path(k: usize, a: u32, n: usize, m: usize, b: u32) -> Result<Path> {
    check_params(k, a, n)?;
    if m < 1 || m > n - 1 {
        return Err(Error::RangeViolation(format!("raise: m = {m} out of range 1..={}", n - 1)));
    }
    if b >= a {
        return Err(Error::RangeViolation(format!("raise: b = {b} must be < a = {a}")));
    }
    let start = qsc(k, a, n, m, b)?;
    let mut steps = vec![PathStep::Phi; m * k];
    let zero_len = k * (n - m);
    for j in 0..m {
        steps.push(PathStep::Jump { pos: j * k + 1, k: zero_len, ell: k });
    }
    let path = Path::new(start, steps);
    // hard internal check: the jumps land on the predicted intermediates
    let verts = path.vertices()?;
    for i in 0..=m {
        let expect = raise_vertex(k, a, n, m, b, i);
        let got = &verts[m * k + i];
        if *got != expect {
            return Err(Error::Internal(format!(
                "raise path intermediate mismatch: {got} vs {expect}"
            )));
        }
    }
    debug_assert_eq!(*verts.last().unwrap(), qsc(k, a, n, m, b + 1)?);
    Ok(path)
}

/// Path `Qsc(k,a,n;m,a) -> Qsc(k,a,n;m+1,1)`: `(m+1)k` affine steps followed
/// by `m+1` block jumps. For `m = n-1` the rotation already lands on the
/// target and no jumps are needed.
pub fn add_step_path(k: usize, a: u32, n: usize, m: usize) -> Result<Path> {
    check_params(k, a, n)?;
    if m >= n {
        return Err(Error::RangeViolation(format!("add_step: m = {m} must be < n = {n}")));
    }
    let start = qsc(k, a, n, m, a)?;
    let mut steps = vec![PathStep::Phi; (m + 1) * k];
    let zero_len = k * (n - m - 1);
    if zero_len > 0 {
        for j in 0..=m {
            steps.push(PathStep::Jump { pos: j * k + 1, k: zero_len, ell: k });
        }
    }
    let path = Path::new(start, steps);
    let end = path.end()?;
    let expect = qsc(k, a, n, m + 1, 1)?;
    if end != expect {
        return Err(Error::Internal(format!("add_step path lands on {end}, expected {expect}")));
    }
    Ok(path)
}

/// `up(k,a;m)`: one add-step followed by the raises `b = 1 .. a-1`.
pub fn up_path(k: usize, a: u32, n: usize, m: usize) -> Result<Path> {
    let mut path = add_step_path(k, a, n, m)?;
    for b in 1..a {
        path = path.concat(&raise_path(k, a, n, m + 1, b)?)?;
    }
    Ok(path)
}

/// The full climb `0^{nk} -> staircase(k, a, n)` as a labeled sequence of
/// raise/add-step segments.
pub fn staircase_segments(k: usize, a: u32, n: usize) -> Result<Vec<(String, Path)>> {
    check_params(k, a, n)?;
    let mut out = Vec::new();
    for m in 0..n.saturating_sub(1) {
        out.push((format!("add_step({m})"), add_step_path(k, a, n, m)?));
        for b in 1..a {
            out.push((format!("raise({},{b})", m + 1), raise_path(k, a, n, m + 1, b)?));
        }
    }
    Ok(out)
}

/// Concatenation of the staircase segments into a single path.
pub fn staircase_path(k: usize, a: u32, n: usize) -> Result<Path> {
    let segments = staircase_segments(k, a, n)?;
    let mut path = Path::empty(Composition::zeros(n * k));
    for (_, seg) in segments {
        path = path.concat(&seg)?;
    }
    debug_assert_eq!(path.end()?, staircase(k, a, n)?);
    Ok(path)
}

/// Per-jump certificate inside the staircase climb.
#[derive(Clone, Debug)]
pub struct JumpCertificate {
    pub segment: String,
    pub source: Composition,
    pub spec: JumpSpec,
    pub bound: FactoredQt,
    /// No factor of the bound is divisible by `1 - q^a t^{k+1}`.
    pub pole_free: bool,
    /// `num(Den(target)/Den(source))` divides the bound (brute-force check);
    /// `None` when brute force was skipped.
    pub ratio_divides: Option<bool>,
}

impl JumpCertificate {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "segment": self.segment,
            "source": self.source.to_string(),
            "jump": {"pos": self.spec.pos, "k": self.spec.k, "ell": self.spec.ell},
            "bound": factored_json(&self.bound),
            "pole_free": self.pole_free,
            "ratio_divides": self.ratio_divides,
        })
    }
}

/// Result of the mechanical pole-absence verification for one staircase.
#[derive(Clone, Debug)]
pub struct PoleReport {
    pub k: usize,
    pub a: u32,
    pub n: usize,
    /// The inspected factor `1 - q^a t^{k+1}` as an exponent pair.
    pub target_factor: (u32, i64),
    pub den: FactoredQt,
    /// The target factor divides no factor of the brute-force denominator.
    pub absent: bool,
    pub certificates: Vec<JumpCertificate>,
    /// Every certificate bound avoids the target factor.
    pub certificates_pole_free: bool,
    /// Brute force and certificates agree (absence plus divisor soundness).
    pub consistent: bool,
}

impl PoleReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "k": self.k,
            "a": self.a,
            "n": self.n,
            "den": factored_json(&self.den),
            "target_factor": [self.target_factor.0, self.target_factor.1],
            "absent": self.absent,
            "certificates": self.certificates.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
            "certificates_pole_free": self.certificates_pole_free,
            "consistent": self.consistent,
        })
    }
}

/// Resource guard for the brute-force walk.
#[derive(Clone, Copy, Debug)]
pub struct CellLimits {
    /// Abort when an intermediate polynomial exceeds this many terms.
    pub max_terms: usize,
    /// Abort when the cell exceeds this wall-clock budget (0 disables).
    pub max_millis: u64,
}

impl Default for CellLimits {
    fn default() -> Self {
        CellLimits { max_terms: 1_000_000, max_millis: 0 }
    }
}

/// Verifies that `1 - q^a t^{k+1}` does not divide `Den(staircase(k,a,n))`,
/// along two routes: the jump-bound certificates mirroring the block-jump
/// analysis, and the brute-force factored denominator. The two routes are
/// cross-checked per jump (the denominator ratio must divide the bound).
pub fn verify_unreachable_pole(
    engine: &mut MacEngine,
    k: usize,
    a: u32,
    n: usize,
    limits: CellLimits,
) -> Result<PoleReport> {
    check_params(k, a, n)?;
    let target: (u32, i64) = (a, k as i64 + 1);
    let segments = staircase_segments(k, a, n)?;

    // certificate route: jump bounds never contain the target factor
    let mut certificates = Vec::new();
    for (label, seg) in &segments {
        let mut vertex = seg.start.clone();
        for &step in &seg.steps {
            if let PathStep::Jump { pos, k: bk, ell } | PathStep::JumpDual { pos, k: bk, ell } =
                step
            {
                let spec = JumpSpec::from_vertex(&vertex, pos, bk, ell)?;
                let bound = block_divisor_bound(&spec);
                let pole_free =
                    bound.factors.keys().all(|&(fa, fb)| !divides_spec(target, (fa, fb)));
                certificates.push(JumpCertificate {
                    segment: label.clone(),
                    source: vertex.clone(),
                    spec,
                    bound,
                    pole_free,
                    ratio_divides: None,
                });
            }
            vertex = step_apply(&vertex, step)?;
        }
    }

    // brute-force route along the very same path, with a resource guard
    let started = std::time::Instant::now();
    let full = staircase_path(k, a, n)?;
    let mut vertex = full.start.clone();
    let mut poly = engine.walk(&vertex)?;
    for &step in &full.steps {
        let next_vertex = step_apply(&vertex, step)?;
        let next = match engine.walk_cached(&next_vertex) {
            Some(p) => p,
            None => {
                let p = engine.edge_op(&poly, &vertex, step)?;
                if p.num_terms() > limits.max_terms {
                    return Err(Error::ResourceLimit(format!(
                        "staircase({k},{a},{n}): intermediate {next_vertex} has {} terms (limit {})",
                        p.num_terms(),
                        limits.max_terms
                    )));
                }
                if limits.max_millis > 0 && started.elapsed().as_millis() as u64 > limits.max_millis
                {
                    return Err(Error::ResourceLimit(format!(
                        "staircase({k},{a},{n}): exceeded {} ms at {next_vertex}",
                        limits.max_millis
                    )));
                }
                engine.walk_insert(&next_vertex, p)
            }
        };
        poly = next;
        vertex = next_vertex;
    }

    let sc = staircase(k, a, n)?;
    let den = den_of(engine, &sc)?;
    let absent = den.factors.keys().all(|&(fa, fb)| !divides_spec(target, (fa, fb)));

    // cross-check each certificate against the brute-force denominators
    for cert in &mut certificates {
        let src = cert.source.clone();
        let tgt = cert.spec.target(&src)?;
        let (num, _) = ratio(engine, &src, &tgt)?;
        cert.ratio_divides = Some(denominator_divides(&num, &cert.bound));
    }

    let certificates_pole_free = certificates.iter().all(|c| c.pole_free);
    let consistent = absent
        && certificates_pole_free
        && certificates.iter().all(|c| c.ratio_divides == Some(true));
    Ok(PoleReport {
        k,
        a,
        n,
        target_factor: target,
        den,
        absent,
        certificates,
        certificates_pole_free,
        consistent,
    })
}

/// The default verification grid: all `(k, a, n)` with `n k <= max_len`,
/// `a <= max_a`, `n >= 2`, ordered by staircase weight (cheap cells first).
pub fn grid(max_len: usize, max_a: u32) -> Vec<(usize, u32, usize)> {
    let mut cells = Vec::new();
    for k in 1..=max_len {
        for n in 2..=max_len {
            if n * k > max_len {
                continue;
            }
            for a in 1..=max_a {
                cells.push((k, a, n));
            }
        }
    }
    cells.sort_by_key(|&(k, a, n)| {
        let weight = (k as u64) * (a as u64) * (n as u64) * (n as u64 - 1) / 2;
        (weight, n * k, a)
    });
    cells
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    #[test]
    fn staircase_examples() {
        assert_eq!(
            staircase(3, 2, 4).unwrap(),
            c(&[6, 6, 6, 4, 4, 4, 2, 2, 2, 0, 0, 0])
        );
        assert_eq!(staircase(1, 1, 2).unwrap(), c(&[1, 0]));
        assert_eq!(qsc(2, 2, 4, 2, 1).unwrap(), c(&[3, 3, 1, 1, 0, 0, 0, 0]));
        assert_eq!(qsc(2, 2, 3, 0, 2).unwrap(), c(&[0, 0, 0, 0, 0, 0]));
        // b = 0 coincides with the previous full level
        assert_eq!(qsc(2, 2, 4, 2, 0).unwrap(), qsc(2, 2, 4, 1, 2).unwrap());
    }

    #[test]
    fn raise_path_33110000() {
        // 33110000 -Phi^4-> 00004422 -jump(1;4,2)-> 44000022 -jump(3;4,2)-> 44220000
        let p = raise_path(2, 2, 4, 2, 1).unwrap();
        let verts = p.vertices().unwrap();
        assert_eq!(verts[0], c(&[3, 3, 1, 1, 0, 0, 0, 0]));
        assert_eq!(verts[4], c(&[0, 0, 0, 0, 4, 4, 2, 2]));
        assert_eq!(verts[5], c(&[4, 4, 0, 0, 0, 0, 2, 2]));
        assert_eq!(verts[6], c(&[4, 4, 2, 2, 0, 0, 0, 0]));
        assert_eq!(
            p.steps[4..],
            [
                PathStep::Jump { pos: 1, k: 4, ell: 2 },
                PathStep::Jump { pos: 3, k: 4, ell: 2 }
            ]
        );
    }

    #[test]
    fn add_step_44220000() {
        // 44220000 -Phi^6-> 00553311 -jump(1;2,2)->.. 55331100
        let p = add_step_path(2, 2, 4, 2).unwrap();
        let verts = p.vertices().unwrap();
        assert_eq!(verts[0], c(&[4, 4, 2, 2, 0, 0, 0, 0]));
        assert_eq!(verts[6], c(&[0, 0, 5, 5, 3, 3, 1, 1]));
        assert_eq!(verts[7], c(&[5, 5, 0, 0, 3, 3, 1, 1]));
        assert_eq!(verts[8], c(&[5, 5, 3, 3, 0, 0, 1, 1]));
        assert_eq!(verts[9], c(&[5, 5, 3, 3, 1, 1, 0, 0]));
    }

    #[test]
    fn up_chain_reaches_staircase() {
        // 000000000000 -> 222000000000 -> 444222000000 -> 666444222000
        let p0 = up_path(3, 2, 4, 0).unwrap();
        assert_eq!(p0.end().unwrap(), qsc(3, 2, 4, 1, 2).unwrap());
        let p1 = up_path(3, 2, 4, 1).unwrap();
        assert_eq!(p1.end().unwrap(), qsc(3, 2, 4, 2, 2).unwrap());
        let full = staircase_path(3, 2, 4).unwrap();
        assert_eq!(full.end().unwrap(), staircase(3, 2, 4).unwrap());
    }

    #[test]
    fn path_replay_grid() {
        // every generated path is valid and lands on its declared target
        for k in 1..=4usize {
            for n in 2..=4usize {
                if n * k > 12 {
                    continue;
                }
                for a in 1..=3u32 {
                    let full = staircase_path(k, a, n).unwrap();
                    assert_eq!(full.end().unwrap(), staircase(k, a, n).unwrap());
                }
            }
        }
    }

    #[test]
    fn spectral_anchor_of_raise_intermediates() {
        // zhat_{V_{j-1}}[(j-1)k + 1] = t^{(n-m)k - 1}
        use crate::spectral::spectre_hat;
        let (k, a, n, m, b) = (2usize, 2u32, 3usize, 2usize, 1u32);
        for j in 1..=m {
            let v = raise_vertex(k, a, n, m, b, j - 1);
            let zh = spectre_hat(v.parts());
            let entry = zh.get((j - 1) * k + 1);
            assert_eq!(entry.q, 0);
            assert_eq!(entry.t, ((n - m) * k) as i64 - 1);
        }
    }

    #[test]
    fn verify_small_cells() {
        let mut eng = MacEngine::new();
        for (k, a, n) in [(1, 1, 2), (2, 1, 2), (1, 2, 3)] {
            let report =
                verify_unreachable_pole(&mut eng, k, a, n, CellLimits::default()).unwrap();
            assert!(report.absent, "pole unexpectedly present for ({k},{a},{n})");
            assert!(report.consistent, "inconsistent report for ({k},{a},{n})");
        }
    }

    #[test]
    fn grid_is_sorted_by_weight() {
        let g = grid(6, 2);
        assert!(g.contains(&(1, 1, 2)));
        assert!(g.contains(&(3, 2, 2)));
        let weights: Vec<u64> = g
            .iter()
            .map(|&(k, a, n)| (k as u64) * (a as u64) * (n as u64) * (n as u64 - 1) / 2)
            .collect();
        assert!(weights.windows(2).all(|w| w[0] <= w[1]));
    }
}
