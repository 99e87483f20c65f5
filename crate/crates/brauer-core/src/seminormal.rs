//! Jucys-Murphy elements, contents, the rational idempotents F_t, the
//! normalization scalars gamma_t, and the seminormal basis f_st of QS_n.
//!
//! Everything here is characteristic-zero machinery: F_t and gamma_t divide
//! by small content differences, so the ring is pinned to the rationals.

use crate::error::{Error, Result};
use crate::exact::{Ring, Scalar};
use crate::perm::Permutation;
use crate::symgroup::{murphy_x, GroupAlgebraElement, StandardTableau};

/// L_k, defined by L_1 = 0 and L_{k+1} = s_k L_k s_k + s_k.
pub fn jm_element(k: usize, n: usize, ring: Ring) -> Result<GroupAlgebraElement> {
    if k < 1 || k > n {
        return Err(Error::OutOfRange(format!(
            "jm element index {k} outside 1..={n}"
        )));
    }
    let mut l = GroupAlgebraElement::zero(n, ring);
    for i in 1..k {
        let s = GroupAlgebraElement::from_permutation(&Permutation::simple(n, i)?, ring);
        l = s.multiply(&l)?.multiply(&s)?.add(&s)?;
    }
    Ok(l)
}

/// The admissible contents R(k): all d with |d| < k, excluding 0 when
/// k is 2 or 3.
pub fn admissible_contents(k: usize) -> Vec<i64> {
    let bound = k as i64;
    (1 - bound..bound)
        .filter(|&d| d != 0 || !(k == 2 || k == 3))
        .collect()
}

/// The idempotent F_t: over all k and all admissible contents c other than
/// cont_t(k), the product of (L_k - c) / (cont_t(k) - c). Rational only.
pub fn f_t(t: &StandardTableau) -> Result<GroupAlgebraElement> {
    let ring = Ring::Rational;
    let n = t.n();
    let mut out = GroupAlgebraElement::identity(n, ring);
    for k in 1..=n {
        let ck = t.content(k)?;
        let lk = jm_element(k, n, ring)?;
        for c in admissible_contents(k) {
            if c == ck {
                continue;
            }
            let mut factor = lk.clone();
            factor.add_term(Permutation::identity(n), ring.from_i64(-c))?;
            let factor = factor.scale(&ring.from_i64(ck - c).inverse()?)?;
            out = out.multiply(&factor)?;
        }
    }
    Ok(out)
}

/// gamma_t: for each k, over the addable and removable nodes of the
/// shape of the subtableau t_k lying strictly below the cell of k, the
/// quotient of products of content differences.
pub fn gamma(t: &StandardTableau) -> Result<Scalar> {
    let ring = Ring::Rational;
    let mut num = ring.one();
    let mut den = ring.one();
    for k in 1..=t.n() {
        let (row, _) = t.position(k)?;
        let ck = t.content(k)?;
        let shape_k = t.shape_after(k);
        for (i, j) in shape_k.addable_nodes() {
            if i > row {
                num = num.mul(&ring.from_i64(ck - (j as i64 - i as i64)))?;
            }
        }
        for (i, j) in shape_k.removable_nodes() {
            if i > row {
                den = den.mul(&ring.from_i64(ck - (j as i64 - i as i64)))?;
            }
        }
    }
    num.div(&den)
}

/// The seminormal element f_st = F_s X_st F_t, over the rationals.
pub fn f_st(s: &StandardTableau, t: &StandardTableau) -> Result<GroupAlgebraElement> {
    let x = murphy_x(s, t, Ring::Rational)?;
    f_t(s)?.multiply(&x)?.multiply(&f_t(t)?)
}
