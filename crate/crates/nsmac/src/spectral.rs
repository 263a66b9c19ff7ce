//! Standardization, spectral vectors and the rotation walk that tracks them.

use serde_json::json;

use crate::error::{Error, Result};
use crate::fraction::QtFraction;

/// A monomial `q^a t^b`; spectral entries are always of this shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QtMono {
    pub q: i64,
    pub t: i64,
}

impl QtMono {
    pub fn new(q: i64, t: i64) -> Self {
        QtMono { q, t }
    }

    pub fn one() -> Self {
        QtMono { q: 0, t: 0 }
    }

    /// `self / other` as a monomial.
    pub fn div(self, other: Self) -> Self {
        QtMono { q: self.q - other.q, t: self.t - other.t }
    }

    pub fn to_fraction(self) -> QtFraction {
        QtFraction::monomial(self.q, self.t)
    }
}

impl std::fmt::Display for QtMono {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.q == 0 && self.t == 0 {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        match self.q {
            0 => {}
            1 => parts.push("q".to_string()),
            e => parts.push(format!("q^{e}")),
        }
        match self.t {
            0 => {}
            1 => parts.push("t".to_string()),
            e => parts.push(format!("t^{e}")),
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// A length-N vector of (q, t)-monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralVector {
    pub entries: Vec<QtMono>,
}

impl SpectralVector {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// 1-based access.
    pub fn get(&self, i: usize) -> QtMono {
        self.entries[i - 1]
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!(self
            .entries
            .iter()
            .map(|m| json!({"q": m.q, "t": m.t}))
            .collect::<Vec<_>>())
    }
}

impl std::fmt::Display for SpectralVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|m| m.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// The standardization of `v`: the unique permutation with
/// `sigma_i > sigma_j` iff `v_i > v_j` or (`v_i = v_j` and `i < j`).
pub fn std_perm(v: &[u32]) -> Vec<usize> {
    let n = v.len();
    let mut idx: Vec<usize> = (0..n).collect();
    // ascending by value, ties broken by descending index
    idx.sort_by(|&a, &b| v[a].cmp(&v[b]).then(b.cmp(&a)));
    let mut sigma = vec![0usize; n];
    for (rank, &i) in idx.iter().enumerate() {
        sigma[i] = rank + 1;
    }
    sigma
}

/// `zhat_v[i] = q^{v_i} t^{std(v)_i - 1}`.
pub fn spectre_hat(v: &[u32]) -> SpectralVector {
    let sigma = std_perm(v);
    let entries = v
        .iter()
        .zip(sigma.iter())
        .map(|(&vi, &si)| QtMono::new(vi as i64, si as i64 - 1))
        .collect();
    SpectralVector { entries }
}

/// `z_v[i] = q^{v_i} t^{#{j : v_j < v_i or (v_j = v_i and j >= i)} - i}`.
pub fn spectre_y(v: &[u32]) -> SpectralVector {
    let n = v.len();
    let entries = (0..n)
        .map(|i| {
            let count = (0..n)
                .filter(|&j| v[j] < v[i] || (v[j] == v[i] && j >= i))
                .count() as i64;
            QtMono::new(v[i] as i64, count - (i as i64 + 1))
        })
        .collect();
    SpectralVector { entries }
}

/// Initial spectral state `[t^{N-1}, .., t, 1]`.
pub fn initial_spectral(n: usize) -> SpectralVector {
    let entries = (0..n).map(|i| QtMono::new(0, (n - 1 - i) as i64)).collect();
    SpectralVector { entries }
}

/// `[a_1, .., a_N] Lambda = [a_2, .., a_N, q a_1]`.
pub fn lambda_step(s: &SpectralVector) -> SpectralVector {
    let mut entries: Vec<QtMono> = s.entries[1..].to_vec();
    let mut first = s.entries[0];
    first.q += 1;
    entries.push(first);
    SpectralVector { entries }
}

/// Swap of entries i, i+1 (1-based).
pub fn si_step(s: &SpectralVector, i: usize) -> Result<SpectralVector> {
    if i < 1 || i >= s.len() {
        return Err(Error::IndexOutOfRange { index: i, nvars: s.len() });
    }
    let mut entries = s.entries.clone();
    entries.swap(i - 1, i);
    Ok(SpectralVector { entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn std_paper_example() {
        assert_eq!(std_perm(&[1, 0, 2, 2, 0, 1]), vec![4, 2, 6, 5, 1, 3]);
        assert_eq!(std_perm(&[0, 0, 0]), vec![3, 2, 1]);
        assert_eq!(std_perm(&[5]), vec![1]);
    }

    #[test]
    fn spectre_hat_paper_example() {
        let s = spectre_hat(&[1, 0, 2, 2, 0, 1]);
        let expect = vec![
            QtMono::new(1, 3),
            QtMono::new(0, 1),
            QtMono::new(2, 5),
            QtMono::new(2, 4),
            QtMono::new(0, 0),
            QtMono::new(1, 2),
        ];
        assert_eq!(s.entries, expect);
    }

    #[test]
    fn spectre_hat_zero_vector() {
        let s = spectre_hat(&[0, 0, 0, 0]);
        assert_eq!(s, initial_spectral(4));
    }

    #[test]
    fn spectre_y_paper_example() {
        let s = spectre_y(&[1, 0, 2, 2, 0, 1]);
        let expect = vec![
            QtMono::new(1, 3),
            QtMono::new(0, 0),
            QtMono::new(2, 3),
            QtMono::new(2, 1),
            QtMono::new(0, -4),
            QtMono::new(1, -3),
        ];
        assert_eq!(s.entries, expect);
    }

    #[test]
    fn hat_is_t_shift_of_y() {
        for v in [[1u32, 0, 2].as_slice(), &[0, 0], &[3, 1, 2, 2]] {
            let hat = spectre_hat(v);
            let y = spectre_y(v);
            for i in 1..=v.len() {
                let mut shifted = y.get(i);
                shifted.t += i as i64 - 1;
                assert_eq!(hat.get(i), shifted);
            }
        }
    }

    #[test]
    fn lambda_walk_paper_chain() {
        // [t^2,t,1] -L-> [t,1,qt^2] -s2-> [t,qt^2,1] -L-> [qt^2,1,qt]
        //   -L-> [1,qt,q^2t^2] -s1-> [qt,1,q^2t^2]
        let s0 = initial_spectral(3);
        let s1 = lambda_step(&s0);
        assert_eq!(
            s1.entries,
            vec![QtMono::new(0, 1), QtMono::new(0, 0), QtMono::new(1, 2)]
        );
        let s2 = si_step(&s1, 2).unwrap();
        assert_eq!(
            s2.entries,
            vec![QtMono::new(0, 1), QtMono::new(1, 2), QtMono::new(0, 0)]
        );
        let s3 = lambda_step(&s2);
        let s4 = lambda_step(&s3);
        let s5 = si_step(&s4, 1).unwrap();
        assert_eq!(
            s5.entries,
            vec![QtMono::new(1, 1), QtMono::new(0, 0), QtMono::new(2, 2)]
        );
        assert_eq!(s5, spectre_hat(&[1, 0, 2]));
    }

    #[test]
    fn repeated_parts_ratio_is_t() {
        // claim: v_i = v_{i+1} implies zhat[i] / zhat[i+1] = t
        for v in [[2u32, 2, 0].as_slice(), &[0, 1, 1, 1], &[3, 3]] {
            let s = spectre_hat(v);
            for i in 1..v.len() {
                if v[i - 1] == v[i] {
                    let r = s.get(i).div(s.get(i + 1));
                    assert_eq!(r, QtMono::new(0, 1));
                }
            }
        }
    }
}
