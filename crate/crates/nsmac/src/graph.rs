//! The Yang-Baxter graph on compositions: steps, paths, the memoized
//! polynomial walker, and the orders used for leading-term statements.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fraction::{Denom, QtFraction};
use crate::hecke::{apply_aff, apply_yang};
use crate::jumps::{
    block_jump, block_jump_dual_numer, block_jump_dual_route, block_jump_numer, JumpSpec,
};
use crate::macpoly::{MacPoly, XMono};
use crate::numer::NumerPoly;
use crate::spectral::spectre_hat;

/// The Yang parameter `alpha = zhat[i+1] / zhat[i]` at a vertex, as a
/// monomial exponent pair; errors when the edge is not a valid ascent.
pub fn yang_alpha(vertex: &Composition, i: usize) -> Result<(u32, i64)> {
    if i < 1 || i >= vertex.len() || vertex.parts()[i - 1] >= vertex.parts()[i] {
        return Err(Error::InvalidStep { step: format!("s{i}"), vertex: vertex.to_string() });
    }
    let zh = spectre_hat(vertex.parts());
    let alpha = zh.get(i + 1).div(zh.get(i));
    debug_assert!(alpha.q >= 1 && alpha.t >= 1);
    Ok((alpha.q as u32, alpha.t))
}

/// A length-N tuple of nonnegative integers indexing `M_v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Composition(parts)
    }

    pub fn zeros(n: usize) -> Self {
        Composition(vec![0; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Weakly decreasing rearrangement.
    pub fn sorted_desc(&self) -> Composition {
        let mut p = self.0.clone();
        p.sort_unstable_by(|a, b| b.cmp(a));
        Composition(p)
    }

    /// `v Phi = (v_2, .., v_N, v_1 + 1)`.
    pub fn phi(&self) -> Composition {
        let mut p: Vec<u32> = self.0[1..].to_vec();
        p.push(self.0[0] + 1);
        Composition(p)
    }

    /// Swap of parts i, i+1 (1-based).
    pub fn swapped(&self, i: usize) -> Composition {
        let mut p = self.0.clone();
        p.swap(i - 1, i);
        Composition(p)
    }

    pub fn leading_monomial(&self) -> XMono {
        self.0.iter().map(|&a| a as u16).collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&a| a <= 9) && !self.0.is_empty() {
            for a in &self.0 {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
            write!(f, "[{}]", parts.join(","))
        }
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Accepts `1,0,2` or the digit word `102`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty composition".into()));
        }
        if s.contains(',') {
            let parts: Result<Vec<u32>> = s
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<u32>()
                        .map_err(|e| Error::Parse(format!("bad part {p:?}: {e}")))
                })
                .collect();
            return Ok(Composition(parts?));
        }
        let parts: Result<Vec<u32>> = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u32)
                    .ok_or_else(|| Error::Parse(format!("bad digit {c:?} in composition")))
            })
            .collect();
        Ok(Composition(parts?))
    }
}

/// One edge of the Yang-Baxter graph, or a declared jump segment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathStep {
    /// Swap edge `s_i`, valid when `v_i < v_{i+1}`.
    S(usize),
    /// Affine edge `Phi`.
    Phi,
    /// Block jump `a^k b^ell -> b^ell a^k` starting at `pos` (1-based).
    Jump { pos: usize, k: usize, ell: usize },
    /// The same move along the dual elementary-jump route.
    JumpDual { pos: usize, k: usize, ell: usize },
}

impl fmt::Display for PathStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathStep::S(i) => write!(f, "s{i}"),
            PathStep::Phi => write!(f, "Phi"),
            PathStep::Jump { pos, k, ell } => write!(f, "jump({pos};{k},{ell})"),
            PathStep::JumpDual { pos, k, ell } => write!(f, "jump\u{2020}({pos};{k},{ell})"),
        }
    }
}

/// Applies one step to a composition, validating the edge condition.
pub fn step_apply(v: &Composition, step: PathStep) -> Result<Composition> {
    match step {
        PathStep::Phi => Ok(v.phi()),
        PathStep::S(i) => {
            if i < 1 || i >= v.len() {
                return Err(Error::InvalidStep { step: step.to_string(), vertex: v.to_string() });
            }
            if v.parts()[i - 1] >= v.parts()[i] {
                return Err(Error::InvalidStep { step: step.to_string(), vertex: v.to_string() });
            }
            Ok(v.swapped(i))
        }
        PathStep::Jump { pos, k, ell } | PathStep::JumpDual { pos, k, ell } => {
            let (a, b) = jump_block_values(v, pos, k, ell)
                .ok_or_else(|| Error::InvalidStep { step: step.to_string(), vertex: v.to_string() })?;
            debug_assert!(b > a);
            let mut parts = v.parts().to_vec();
            for x in parts.iter_mut().skip(pos - 1).take(ell) {
                *x = b;
            }
            for x in parts.iter_mut().skip(pos - 1 + ell).take(k) {
                *x = a;
            }
            Ok(Composition(parts))
        }
    }
}

/// Reads the block values `(a, b)` of a jump pattern `u' a^k b^ell u''`.
pub fn jump_block_values(v: &Composition, pos: usize, k: usize, ell: usize) -> Option<(u32, u32)> {
    let p = v.parts();
    if pos < 1 || k < 1 || ell < 1 || pos - 1 + k + ell > p.len() {
        return None;
    }
    let a = p[pos - 1];
    let b = p[pos - 1 + k];
    if b <= a {
        return None;
    }
    if !p[pos - 1..pos - 1 + k].iter().all(|&x| x == a) {
        return None;
    }
    if !p[pos - 1 + k..pos - 1 + k + ell].iter().all(|&x| x == b) {
        return None;
    }
    Some((a, b))
}

/// A walk in the Yang-Baxter graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    pub start: Composition,
    pub steps: Vec<PathStep>,
}

impl Path {
    pub fn new(start: Composition, steps: Vec<PathStep>) -> Self {
        Path { start, steps }
    }

    pub fn empty(start: Composition) -> Self {
        Path { start, steps: Vec::new() }
    }

    /// All vertices visited, start included; validates every step.
    pub fn vertices(&self) -> Result<Vec<Composition>> {
        let mut out = vec![self.start.clone()];
        for &s in &self.steps {
            let next = step_apply(out.last().unwrap(), s)?;
            out.push(next);
        }
        Ok(out)
    }

    pub fn end(&self) -> Result<Composition> {
        Ok(self.vertices()?.pop().unwrap())
    }

    /// Replaces jump markers by their elementary swap sequences.
    pub fn expand_jumps(&self) -> Result<Path> {
        let mut steps = Vec::new();
        let mut cur = self.start.clone();
        for &s in &self.steps {
            match s {
                PathStep::S(_) | PathStep::Phi => {
                    steps.push(s);
                    cur = step_apply(&cur, s)?;
                }
                PathStep::Jump { pos, k, ell } => {
                    jump_block_values(&cur, pos, k, ell).ok_or_else(|| Error::InvalidStep {
                        step: s.to_string(),
                        vertex: cur.to_string(),
                    })?;
                    for j in 0..ell {
                        for idx in (pos + j..pos + j + k).rev() {
                            steps.push(PathStep::S(idx));
                        }
                    }
                    cur = step_apply(&cur, s)?;
                }
                PathStep::JumpDual { pos, k, ell } => {
                    jump_block_values(&cur, pos, k, ell).ok_or_else(|| Error::InvalidStep {
                        step: s.to_string(),
                        vertex: cur.to_string(),
                    })?;
                    for p in (pos..pos + k).rev() {
                        for idx in p..p + ell {
                            steps.push(PathStep::S(idx));
                        }
                    }
                    cur = step_apply(&cur, s)?;
                }
            }
        }
        Ok(Path { start: self.start.clone(), steps })
    }

    pub fn concat(&self, other: &Path) -> Result<Path> {
        let end = self.end()?;
        if end != other.start {
            return Err(Error::EndpointMismatch {
                left: end.to_string(),
                right: other.start.to_string(),
            });
        }
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        Ok(Path { start: self.start.clone(), steps })
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut cur = self.start.clone();
        write!(f, "{cur}")?;
        for &s in &self.steps {
            match step_apply(&cur, s) {
                Ok(next) => {
                    write!(f, " -{s}-> {next}")?;
                    cur = next;
                }
                Err(_) => {
                    write!(f, " -{s}-> <invalid>")?;
                    return Ok(());
                }
            }
        }
        Ok(())
    }
}

/// The reverse of the canonical construction: one predecessor step.
///
/// Descents are unswapped at the smallest index first; weakly increasing
/// nonzero vectors reverse the affine step.
fn reverse_step(v: &Composition) -> Option<(Composition, PathStep)> {
    let p = v.parts();
    let n = p.len();
    for i in 1..n {
        if p[i - 1] > p[i] {
            return Some((v.swapped(i), PathStep::S(i)));
        }
    }
    if v.is_zero() {
        return None;
    }
    // weakly increasing, so the raised entry is the last one
    let mut prev = Vec::with_capacity(n);
    prev.push(p[n - 1] - 1);
    prev.extend_from_slice(&p[..n - 1]);
    Some((Composition(prev), PathStep::Phi))
}

/// A canonical valid path from `0^N` to `v`.
pub fn canonical_path(v: &Composition) -> Path {
    let mut steps_rev = Vec::new();
    let mut cur = v.clone();
    while let Some((prev, step)) = reverse_step(&cur) {
        steps_rev.push(step);
        cur = prev;
    }
    steps_rev.reverse();
    Path { start: Composition::zeros(v.len()), steps: steps_rev }
}

/// Dominance order: `u >= v` iff every prefix sum of `u` dominates that of `v`.
pub fn cmp_dominance(u: &Composition, v: &Composition) -> Result<Option<Ordering>> {
    if u.len() != v.len() {
        return Err(Error::NvarsMismatch { left: u.len(), right: v.len() });
    }
    let mut su = 0i64;
    let mut sv = 0i64;
    let mut ge = true;
    let mut le = true;
    for (a, b) in u.parts().iter().zip(v.parts()) {
        su += *a as i64;
        sv += *b as i64;
        if su < sv {
            ge = false;
        }
        if su > sv {
            le = false;
        }
    }
    Ok(match (ge, le) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Greater),
        (false, true) => Some(Ordering::Less),
        (false, false) => None,
    })
}

/// The triangle order: dominance on sorted rearrangements first, dominance on
/// the vectors themselves to break ties.
pub fn cmp_triangle(u: &Composition, v: &Composition) -> Result<Option<Ordering>> {
    match cmp_dominance(&u.sorted_desc(), &v.sorted_desc())? {
        None => Ok(None),
        Some(Ordering::Equal) => cmp_dominance(u, v),
        Some(o) => Ok(Some(o)),
    }
}

/// Memoizing Macdonald polynomial walker.
///
/// Internally the walk uses the shared-denominator representation
/// (`M_v = P_v / Den(v)`); the memo maps each visited composition to that
/// form. Lookups are idempotent (a key always maps to the same value), so
/// separate engines may be used concurrently on independent work without
/// coordination.
#[derive(Default)]
pub struct MacEngine {
    memo: HashMap<Composition, Arc<NumerPoly>>,
    macs: HashMap<Composition, Arc<MacPoly>>,
    dens: HashMap<Composition, Denom>,
}

impl MacEngine {
    pub fn new() -> Self {
        MacEngine::default()
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Drops cached polynomials not satisfying the predicate; keeps `0^N`.
    /// Cached denominators are kept (they are small).
    pub fn retain(&mut self, mut pred: impl FnMut(&Composition) -> bool) {
        self.memo.retain(|k, _| k.is_zero() || pred(k));
        self.macs.retain(|k, _| k.is_zero() || pred(k));
    }

    pub fn clear(&mut self) {
        self.memo.clear();
        self.macs.clear();
        self.dens.clear();
    }

    /// Cache lookup without computing.
    pub fn walk_cached(&self, v: &Composition) -> Option<Arc<NumerPoly>> {
        self.memo.get(v).cloned()
    }

    /// Inserts a computed polynomial into the walk memo.
    pub fn walk_insert(&mut self, v: &Composition, p: NumerPoly) -> Arc<NumerPoly> {
        let arc = Arc::new(p);
        self.dens.insert(v.clone(), arc.den().clone());
        self.memo.insert(v.clone(), arc.clone());
        arc
    }

    /// Applies the operator attached to one graph edge at `vertex`, in the
    /// shared-denominator representation.
    pub fn edge_op(&self, p: &NumerPoly, vertex: &Composition, step: PathStep) -> Result<NumerPoly> {
        match step {
            PathStep::Phi => Ok(p.aff_op()),
            PathStep::S(i) => {
                let alpha = yang_alpha(vertex, i)?;
                p.yang_op(i, alpha)
            }
            PathStep::Jump { pos, k, ell } => {
                let spec = JumpSpec::from_vertex(vertex, pos, k, ell)?;
                block_jump_numer(p, &spec)
            }
            PathStep::JumpDual { pos, k, ell } => {
                let spec = JumpSpec::from_vertex(vertex, pos, k, ell)?;
                block_jump_dual_numer(p, &spec)
            }
        }
    }

    /// Applies one graph edge to an ordinary polynomial (small-scale use).
    pub fn edge_apply(&self, p: &MacPoly, vertex: &Composition, step: PathStep) -> Result<MacPoly> {
        match step {
            PathStep::Phi => Ok(apply_aff(p)),
            PathStep::S(i) => {
                let (a, b) = yang_alpha(vertex, i)?;
                let alpha = QtFraction::monomial(a as i64, b);
                apply_yang(p, i, &alpha)
            }
            PathStep::Jump { pos, k, ell } => {
                let spec = JumpSpec::from_vertex(vertex, pos, k, ell)?;
                block_jump(p, &spec)
            }
            PathStep::JumpDual { pos, k, ell } => {
                let spec = JumpSpec::from_vertex(vertex, pos, k, ell)?;
                block_jump_dual_route(p, &spec)
            }
        }
    }

    /// The shared-denominator form of `M_v`, memoized by `v`.
    pub fn walk(&mut self, v: &Composition) -> Result<Arc<NumerPoly>> {
        if let Some(p) = self.memo.get(v) {
            return Ok(p.clone());
        }
        let mut pending: Vec<(Composition, PathStep)> = Vec::new();
        let mut cur = v.clone();
        let mut base: Option<Arc<NumerPoly>> = None;
        loop {
            if let Some(p) = self.memo.get(&cur) {
                base = Some(p.clone());
                break;
            }
            match reverse_step(&cur) {
                Some((prev, step)) => {
                    pending.push((cur.clone(), step));
                    cur = prev;
                }
                None => break,
            }
        }
        let mut poly = match base {
            Some(p) => p,
            None => {
                let one = Arc::new(NumerPoly::one(v.len()));
                self.memo.insert(cur.clone(), one.clone());
                one
            }
        };
        let mut vertex = cur;
        while let Some((target, step)) = pending.pop() {
            let next = self.edge_op(&poly, &vertex, step)?;
            let arc = Arc::new(next);
            self.dens.insert(target.clone(), arc.den().clone());
            self.memo.insert(target.clone(), arc.clone());
            poly = arc;
            vertex = target;
        }
        Ok(poly)
    }

    /// The nonsymmetric Macdonald polynomial `M_v`, memoized by `v`.
    pub fn mac(&mut self, v: &Composition) -> Result<Arc<MacPoly>> {
        if let Some(p) = self.macs.get(v) {
            return Ok(p.clone());
        }
        let np = self.walk(v)?;
        let arc = Arc::new(np.to_macpoly());
        self.macs.insert(v.clone(), arc.clone());
        Ok(arc)
    }

    /// Walks an explicit path, memoizing every intermediate vertex, and
    /// returns the shared-denominator polynomials at all vertices.
    pub fn walk_along(&mut self, path: &Path) -> Result<Vec<(Composition, Arc<NumerPoly>)>> {
        let mut out = Vec::with_capacity(path.steps.len() + 1);
        let mut vertex = path.start.clone();
        let mut poly = self.walk(&vertex)?;
        out.push((vertex.clone(), poly.clone()));
        for &step in &path.steps {
            let target = step_apply(&vertex, step)?;
            let next = match self.memo.get(&target) {
                Some(p) => p.clone(),
                None => {
                    let p = Arc::new(self.edge_op(&poly, &vertex, step)?);
                    self.dens.insert(target.clone(), p.den().clone());
                    self.memo.insert(target.clone(), p.clone());
                    p
                }
            };
            out.push((target.clone(), next.clone()));
            poly = next;
            vertex = target;
        }
        Ok(out)
    }

    /// The reduced common denominator of `M_v`, cached independently of the
    /// (evictable) polynomial memo.
    pub fn den(&mut self, v: &Composition) -> Result<Denom> {
        if let Some(d) = self.dens.get(v) {
            return Ok(d.clone());
        }
        let np = self.walk(v)?;
        let d = np.den().clone();
        self.dens.insert(v.clone(), d.clone());
        Ok(d)
    }

    /// The triangle-maximal monomial of `M_v` and its coefficient.
    pub fn leading_data(&mut self, v: &Composition) -> Result<(XMono, QtFraction)> {
        let p = self.mac(v)?;
        let mut best: Option<Composition> = None;
        for (e, _) in p.iter() {
            let cand = Composition(e.iter().map(|&a| a as u32).collect());
            best = Some(match best {
                None => cand,
                Some(b) => match cmp_triangle(&cand, &b)? {
                    Some(Ordering::Greater) => cand,
                    _ => b,
                },
            });
        }
        let best = best.ok_or_else(|| Error::Internal("leading_data of zero polynomial".into()))?;
        for (e, _) in p.iter() {
            let other = Composition(e.iter().map(|&a| a as u32).collect());
            if other != best && cmp_triangle(&best, &other)? != Some(Ordering::Greater) {
                return Err(Error::Internal(format!(
                    "no triangle-maximal monomial in M_{v}: {best} vs {other}"
                )));
            }
        }
        let mono = best.leading_monomial();
        let coeff = p.coeff(&mono);
        Ok((mono, coeff))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qtpoly::QtPoly;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    #[test]
    fn phi_examples() {
        assert_eq!(c(&[0, 0, 1]).phi(), c(&[0, 1, 1]));
        assert_eq!(c(&[0, 0, 0]).phi(), c(&[0, 0, 1]));
        assert_eq!(step_apply(&c(&[0, 1, 2]), PathStep::S(1)).unwrap(), c(&[1, 0, 2]));
        assert!(step_apply(&c(&[1, 0, 2]), PathStep::S(1)).is_err());
    }

    #[test]
    fn canonical_path_replays() {
        for v in [c(&[0, 0, 0]), c(&[1, 0, 2]), c(&[3, 1, 0]), c(&[2, 2, 0, 1])] {
            let p = canonical_path(&v);
            assert_eq!(p.start, Composition::zeros(v.len()));
            assert_eq!(p.end().unwrap(), v);
        }
        assert!(canonical_path(&c(&[0, 0])).steps.is_empty());
    }

    #[test]
    fn exhaustive_replay_small() {
        // every v with |v| <= 5, N <= 4
        for n in 1..=4usize {
            let mut stack = vec![vec![]];
            while let Some(cur) = stack.pop() {
                if cur.len() == n {
                    let v = c(&cur);
                    if v.weight() <= 5 {
                        assert_eq!(canonical_path(&v).end().unwrap(), v);
                    }
                    continue;
                }
                for a in 0..=5u32 {
                    if cur.iter().sum::<u32>() + a <= 5 {
                        let mut next = cur.clone();
                        next.push(a);
                        stack.push(next);
                    }
                }
            }
        }
    }

    #[test]
    fn mac_zero_and_102() {
        let mut eng = MacEngine::new();
        assert!(eng.mac(&c(&[0, 0, 0])).unwrap().num_terms() == 1);

        let m102 = eng.mac(&c(&[1, 0, 2])).unwrap();
        // M_102 = x1 x3^2 / q + (1-t)/(1-qt) x1x2x3 + (1-t)/(q(1-qt)) x2 x3^2
        let mut expect = MacPoly::zero(3);
        let e = |a: &[u16]| -> XMono { a.iter().copied().collect() };
        expect.add_term(e(&[1, 0, 2]), QtFraction::monomial(-1, 0));
        let c1 = QtFraction::ratio(QtPoly::one_minus_qt(0, 1), QtPoly::one_minus_qt(1, 1)).unwrap();
        expect.add_term(e(&[1, 1, 1]), c1.clone());
        expect.add_term(e(&[0, 1, 2]), c1.mul_q_pow(-1));
        assert_eq!(*m102, expect);
    }

    #[test]
    fn leading_data_law() {
        let mut eng = MacEngine::new();
        for v in [c(&[1, 0, 2]), c(&[3, 1, 0]), c(&[0, 0, 0])] {
            let (mono, coeff) = eng.leading_data(&v).unwrap();
            assert_eq!(mono, v.leading_monomial());
            let s: i64 = v.parts().iter().map(|&a| (a as i64) * (a as i64 - 1) / 2).sum();
            assert_eq!(coeff, QtFraction::monomial(-s, 0));
        }
    }

    #[test]
    fn triangle_order_examples() {
        // [0,1,2] s1 = [1,0,2] is strictly above [0,1,2]
        assert_eq!(
            cmp_triangle(&c(&[1, 0, 2]), &c(&[0, 1, 2])).unwrap(),
            Some(Ordering::Greater)
        );
        assert_eq!(cmp_triangle(&c(&[1, 0]), &c(&[1, 0])).unwrap(), Some(Ordering::Equal));
        // along any valid path each vertex strictly increases
        let path = canonical_path(&c(&[2, 0, 1]));
        let verts = path.vertices().unwrap();
        for w in verts.windows(2) {
            assert_eq!(cmp_triangle(&w[1], &w[0]).unwrap(), Some(Ordering::Greater));
        }
    }

    #[test]
    fn composition_parsing() {
        assert_eq!("102".parse::<Composition>().unwrap(), c(&[1, 0, 2]));
        assert_eq!("1,0,12".parse::<Composition>().unwrap(), c(&[1, 0, 12]));
        assert!("1,x".parse::<Composition>().is_err());
        assert_eq!(c(&[1, 0, 12]).to_string(), "[1,0,12]");
        assert_eq!(c(&[1, 0, 2]).to_string(), "102");
    }

    #[test]
    fn path_rendering_matches_notation() {
        let p = Path::new(
            c(&[0, 0, 0]),
            vec![PathStep::Phi, PathStep::S(2), PathStep::Phi, PathStep::Phi, PathStep::S(1)],
        );
        assert_eq!(
            p.to_string(),
            "000 -Phi-> 001 -s2-> 010 -Phi-> 101 -Phi-> 012 -s1-> 102"
        );
    }
}
