//! Right-acting operator kernels on polynomials: the Demazure-Lusztig
//! operators `T_i`, their inverses, the affine operators `tau` and
//! `A = tau x_N`, the Yang operators `T_i + (1-t)/(1-alpha)`, and the
//! Cherednik-Dunkl operators `Y_i`, `Yhat_i`.
//!
//! All operators act on their left: `p.apply(T_i T_j)` is
//! `apply_ti(apply_ti(p, i), j)`. Indices are 1-based throughout.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::fraction::QtFraction;
use crate::macpoly::{MacPoly, XMono};
use crate::qtpoly::QtPoly;

fn check_index(i: usize, nvars: usize) -> Result<()> {
    if i < 1 || i + 1 > nvars {
        return Err(Error::IndexOutOfRange { index: i, nvars });
    }
    Ok(())
}

/// Transposition of `x_i` and `x_{i+1}`.
pub fn apply_si(p: &MacPoly, i: usize) -> Result<MacPoly> {
    check_index(i, p.nvars())?;
    let mut out = MacPoly::zero(p.nvars());
    for (e, c) in p.iter() {
        let mut e = e.clone();
        e.swap(i - 1, i);
        out.add_term(e, c.clone());
    }
    Ok(out)
}

/// Divided difference `(p - p s_i) / (x_i - x_{i+1})`; always exact.
pub fn apply_del(p: &MacPoly, i: usize) -> Result<MacPoly> {
    check_index(i, p.nvars())?;
    let mut out = MacPoly::zero(p.nvars());
    for (e, c) in p.iter() {
        let a = e[i - 1];
        let b = e[i];
        if a == b {
            continue;
        }
        // (x_i^a x_{i+1}^b - x_i^b x_{i+1}^a) / (x_i - x_{i+1})
        // telescopes to +/- sum of x_i^u x_{i+1}^v with u+v = a+b-1
        let (lo, hi, neg) = if a > b { (b, a, false) } else { (a, b, true) };
        let coeff = if neg { c.neg() } else { c.clone() };
        for u in lo..hi {
            let mut e2 = e.clone();
            e2[i - 1] = u;
            e2[i] = (hi + lo).saturating_sub(1).saturating_sub(u);
            debug_assert_eq!(e2[i - 1] + e2[i], a + b - 1);
            out.add_term(e2, coeff.clone());
        }
    }
    Ok(out)
}

/// Isobaric divided difference `pi_i = X_i del_i`.
pub fn apply_pi(p: &MacPoly, i: usize) -> Result<MacPoly> {
    apply_del(&p.mul_var(i)?, i)
}

/// Demazure-Lusztig operator `T_i = (t-1) pi_i + s_i`.
pub fn apply_ti(p: &MacPoly, i: usize) -> Result<MacPoly> {
    let t_minus_1 = QtFraction::from_poly(QtPoly::one_minus_qt(0, 1)).neg();
    let part = apply_pi(p, i)?.scale(&t_minus_1);
    part.add(&apply_si(p, i)?)
}

/// Inverse intertwiner `T_i^{-1} = (T_i + 1 - t) / t`.
pub fn apply_ti_inv(p: &MacPoly, i: usize) -> Result<MacPoly> {
    let one_minus_t = QtFraction::one_minus_t();
    let sum = apply_ti(p, i)?.add(&p.scale(&one_minus_t))?;
    Ok(sum.scale(&QtFraction::monomial(0, -1)))
}

/// Affine rotation: `(p tau)(x_1, .., x_N) = p(x_N / q, x_1, .., x_{N-1})`.
///
/// On a monomial `x^u` this is `q^{-u_1} x^{(u_2, .., u_N, u_1)}`.
pub fn apply_tau(p: &MacPoly) -> MacPoly {
    let n = p.nvars();
    let mut out = MacPoly::zero(n);
    for (e, c) in p.iter() {
        let mut e2 = XMono::with_capacity(n);
        e2.extend_from_slice(&e[1..]);
        e2.push(e[0]);
        out.add_term(e2, c.mul_q_pow(-(e[0] as i64)));
    }
    out
}

/// Inverse affine rotation: on a monomial `x^u` this is
/// `q^{u_N} x^{(u_N, u_1, .., u_{N-1})}`.
///
/// The Cherednik-Dunkl operators are built on this rotation; it is the
/// composition inverse of [`apply_tau`] and the one that makes the spectral
/// eigenvalue formulas come out.
pub fn apply_tau_inv(p: &MacPoly) -> MacPoly {
    let n = p.nvars();
    let mut out = MacPoly::zero(n);
    for (e, c) in p.iter() {
        let last = e[n - 1];
        let mut e2 = XMono::with_capacity(n);
        e2.push(last);
        e2.extend_from_slice(&e[..n - 1]);
        out.add_term(e2, c.mul_q_pow(last as i64));
    }
    out
}

/// The affine step `A = tau X_N`.
pub fn apply_aff(p: &MacPoly) -> MacPoly {
    let n = p.nvars();
    let mut out = MacPoly::zero(n);
    for (e, c) in p.iter() {
        let mut e2 = XMono::with_capacity(n);
        e2.extend_from_slice(&e[1..]);
        e2.push(e[0] + 1);
        out.add_term(e2, c.mul_q_pow(-(e[0] as i64)));
    }
    out
}

/// Yang operator `T_i + (1 - t)/(1 - alpha)`; `alpha` must differ from 1.
pub fn apply_yang(p: &MacPoly, i: usize, alpha: &QtFraction) -> Result<MacPoly> {
    let scalar = QtFraction::yang_scalar(alpha)?;
    apply_ti(p, i)?.add(&p.scale(&scalar))
}

/// Cherednik-Dunkl operator `Y_i = T_i .. T_{N-1} tau^{-1} T_1^{-1} .. T_{i-1}^{-1}`.
///
/// The rotation here is the inverse of [`apply_tau`]: with it the Macdonald
/// polynomial `M_v` is a simultaneous eigenfunction with eigenvalues given by
/// the spectral vector of `v`.
pub fn apply_y(p: &MacPoly, i: usize) -> Result<MacPoly> {
    let n = p.nvars();
    if i < 1 || i > n {
        return Err(Error::IndexOutOfRange { index: i, nvars: n });
    }
    let mut cur = p.clone();
    for j in i..n {
        cur = apply_ti(&cur, j)?;
    }
    cur = apply_tau_inv(&cur);
    for j in 1..i {
        cur = apply_ti_inv(&cur, j)?;
    }
    Ok(cur)
}

/// `Yhat_i = t^{i-1} Y_i`.
pub fn apply_yhat(p: &MacPoly, i: usize) -> Result<MacPoly> {
    let y = apply_y(p, i)?;
    Ok(y.scale(&QtFraction::monomial(0, i as i64 - 1)))
}

/// Stable identifiers of the relation catalog.
pub const RELATION_IDS: &[&str] = &[
    "quad", "braid", "com", "blr", "dual-blr", "cross", "dcross", "dbl-hat", "tau-t", "tau-x",
    "tau-y",
];

/// Checks one relation of the catalog on a concrete polynomial, over every
/// valid index combination. Returns `Ok(true)` when both sides agree exactly.
pub fn check_relation(id: &str, p: &MacPoly) -> Result<bool> {
    let n = p.nvars();
    let q1 = QtFraction::monomial(1, 0);
    let t1 = QtFraction::monomial(0, 1);
    match id {
        "quad" => {
            // (T_i - t)(T_i + 1) = 0
            for i in 1..n {
                let ti = apply_ti(p, i)?;
                let lhs = apply_ti(&ti, i)?;
                let rhs = ti.scale(&t1.sub(&QtFraction::one())).add(&p.scale(&t1))?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        "braid" => {
            for i in 1..n.saturating_sub(1) {
                let lhs = apply_ti(&apply_ti(&apply_ti(p, i)?, i + 1)?, i)?;
                let rhs = apply_ti(&apply_ti(&apply_ti(p, i + 1)?, i)?, i + 1)?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        "com" => {
            for i in 1..n {
                for j in i + 2..n {
                    let lhs = apply_ti(&apply_ti(p, i)?, j)?;
                    let rhs = apply_ti(&apply_ti(p, j)?, i)?;
                    if lhs != rhs {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
        "blr" => {
            // T_i X_{i+1} T_i = t X_i in this realization
            for i in 1..n {
                let lhs = apply_ti(&apply_ti(p, i)?.mul_var(i + 1)?, i)?;
                let rhs = p.mul_var(i)?.scale(&t1);
                if lhs != rhs {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        "dual-blr" => {
            // T_i Y_{i+1} T_i = Y_i
            for i in 1..n {
                let lhs = apply_ti(&apply_y(&apply_ti(p, i)?, i + 1)?, i)?;
                let rhs = apply_y(p, i)?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        "cross" => {
            // Y_i X_1 .. X_N = q^{-1} X_1 .. X_N Y_i in this realization
            for i in 1..=n {
                let lhs = apply_y(p, i)?.mul_all_vars();
                let rhs = apply_y(&p.mul_all_vars(), i)?.scale(&QtFraction::monomial(-1, 0));
                if lhs != rhs {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        "dcross" => {
            // X_i Y_1 .. Y_N = q Y_1 .. Y_N X_i
            for i in 1..=n {
                let mut lhs = p.mul_var(i)?;
                for j in 1..=n {
                    lhs = apply_y(&lhs, j)?;
                }
                let mut rhs = p.clone();
                for j in 1..=n {
                    rhs = apply_y(&rhs, j)?;
                }
                let rhs = rhs.mul_var(i)?.scale(&q1);
                if lhs != rhs {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        "dbl-hat" => {
            // T_i Yhat_{i+1} T_i = t Yhat_i
            for i in 1..n {
                let lhs = apply_ti(&apply_yhat(&apply_ti(p, i)?, i + 1)?, i)?;
                let rhs = apply_yhat(p, i)?.scale(&t1);
                if lhs != rhs {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        "tau-t" => {
            // T_{i+1} tau = tau T_i for 1 <= i <= N-2
            for i in 1..n.saturating_sub(1) {
                let lhs = apply_tau(&apply_ti(p, i + 1)?);
                let rhs = apply_ti(&apply_tau(p), i)?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        "tau-x" => {
            // X_i tau = tau X_{i-1} (i > 1) and X_1 tau = q^{-1} tau X_N
            for i in 2..=n {
                let lhs = apply_tau(&p.mul_var(i)?);
                let rhs = apply_tau(p).mul_var(i - 1)?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
            let lhs = apply_tau(&p.mul_var(1)?);
            let rhs = apply_tau(p).mul_var(n)?.scale(&QtFraction::monomial(-1, 0));
            Ok(lhs == rhs)
        }
        "tau-y" => {
            // Affine rotation of the Cherednik-Dunkl spectrum:
            // A Yhat_i = Yhat_{i+1} A for i < N, and A Yhat_N = q Yhat_1 A.
            for i in 1..n {
                let lhs = apply_yhat(&apply_aff(p), i)?;
                let rhs = apply_aff(&apply_yhat(p, i + 1)?);
                if lhs != rhs {
                    return Ok(false);
                }
            }
            let lhs = apply_yhat(&apply_aff(p), n)?;
            let rhs = apply_aff(&apply_yhat(p, 1)?).scale(&q1);
            Ok(lhs == rhs)
        }
        other => Err(Error::Parse(format!("unknown relation id {other:?}"))),
    }
}

/// Deterministic pseudo-random polynomials for the relation suite.
pub fn random_macpoly(
    rng: &mut impl rand::Rng,
    nvars: usize,
    max_deg: u16,
    max_terms: usize,
) -> MacPoly {
    let mut p = MacPoly::zero(nvars);
    let nterms = rng.gen_range(1..=max_terms);
    for _ in 0..nterms {
        let mut e = XMono::with_capacity(nvars);
        for _ in 0..nvars {
            e.push(rng.gen_range(0..=max_deg));
        }
        // small polynomial coefficients in q and t
        let mut num = QtPoly::zero();
        for _ in 0..rng.gen_range(1..=2usize) {
            num.add_term(
                rng.gen_range(0..=2u32),
                rng.gen_range(0..=2u32),
                BigInt::from(rng.gen_range(-3i64..=3)),
            );
        }
        if num.is_zero() {
            num = QtPoly::one();
        }
        p.add_term(e, QtFraction::from_poly(num));
    }
    if p.is_zero() {
        MacPoly::one(nvars)
    } else {
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn x(n: usize, i: usize) -> MacPoly {
        MacPoly::var(n, i)
    }

    #[test]
    fn si_swaps() {
        let p = x(3, 1);
        assert_eq!(apply_si(&p, 1).unwrap(), x(3, 2));
        let sym = x(3, 1).add(&x(3, 2)).unwrap();
        assert_eq!(apply_si(&sym, 1).unwrap(), sym);
        let p = x(3, 1).mul(&x(3, 1)).unwrap().mul(&x(3, 3)).unwrap();
        let q = x(3, 1).mul(&x(3, 1)).unwrap().mul(&x(3, 2)).unwrap();
        assert_eq!(apply_si(&p, 2).unwrap(), q);
    }

    #[test]
    fn del_examples() {
        // x1^2 del_1 = x1 + x2
        let p = x(2, 1).mul(&x(2, 1)).unwrap();
        assert_eq!(apply_del(&p, 1).unwrap(), x(2, 1).add(&x(2, 2)).unwrap());
        // 1 del_1 = 0
        assert!(apply_del(&MacPoly::one(2), 1).unwrap().is_zero());
        // x2 del_1 = -1
        assert_eq!(
            apply_del(&x(2, 2), 1).unwrap(),
            MacPoly::constant(2, QtFraction::from_int(-1))
        );
    }

    #[test]
    fn ti_on_constants_and_symmetric() {
        let t = QtFraction::monomial(0, 1);
        let one = MacPoly::one(2);
        assert_eq!(apply_ti(&one, 1).unwrap(), one.scale(&t));
        let sym = x(2, 1).add(&x(2, 2)).unwrap();
        assert_eq!(apply_ti(&sym, 1).unwrap(), sym.scale(&t));
    }

    #[test]
    fn ti_moves_x2_to_x1() {
        // derived by evaluating del_1 (t X_2 - X_1) + t on x2
        assert_eq!(apply_ti(&x(2, 2), 1).unwrap(), x(2, 1));
    }

    #[test]
    fn ti_inv_roundtrip() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let p = random_macpoly(&mut rng, 3, 3, 4);
            for i in 1..3 {
                let there = apply_ti(&p, i).unwrap();
                let back = apply_ti_inv(&there, i).unwrap();
                assert_eq!(back, p);
            }
        }
    }

    #[test]
    fn tau_and_aff() {
        // 1 * A = x_N
        assert_eq!(apply_aff(&MacPoly::one(3)), x(3, 3));
        // x1 tau = x_N / q
        let expect = x(3, 3).scale(&QtFraction::monomial(-1, 0));
        assert_eq!(apply_tau(&x(3, 1)), expect);
        // x1 A = x_N^2 / q
        let expect = x(3, 3).mul(&x(3, 3)).unwrap().scale(&QtFraction::monomial(-1, 0));
        assert_eq!(apply_aff(&x(3, 1)), expect);
    }

    #[test]
    fn yang_on_constants() {
        // 1 Yang(alpha, 1) = (t + (1-t)/(1-alpha)) 1
        let alpha = QtFraction::monomial(1, 1);
        let out = apply_yang(&MacPoly::one(2), 1, &alpha).unwrap();
        let scalar = QtFraction::monomial(0, 1).add(&QtFraction::yang_scalar(&alpha).unwrap());
        assert_eq!(out, MacPoly::constant(2, scalar));
        assert!(matches!(
            apply_yang(&MacPoly::one(2), 1, &QtFraction::one()),
            Err(Error::AlphaIsOne)
        ));
    }

    #[test]
    fn relation_catalog_random() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for n in 2..=3usize {
            for _ in 0..4 {
                let p = random_macpoly(&mut rng, n, 2, 3);
                for id in RELATION_IDS {
                    assert!(check_relation(id, &p).unwrap(), "relation {id} failed at N={n}");
                }
            }
        }
    }

    #[test]
    fn kernel_characterization() {
        // p s_i = p  iff  p (T_i - t) = 0
        let sym = x(2, 1).add(&x(2, 2)).unwrap();
        let t = QtFraction::monomial(0, 1);
        let lhs = apply_ti(&sym, 1).unwrap().sub(&sym.scale(&t)).unwrap();
        assert!(lhs.is_zero());
        let asym = x(2, 1);
        let lhs = apply_ti(&asym, 1).unwrap().sub(&asym.scale(&t)).unwrap();
        assert!(!lhs.is_zero());
        assert_eq!(apply_si(&asym, 1).unwrap() == asym, lhs.is_zero());
    }
}
