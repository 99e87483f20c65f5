//! The rational seminormal machinery: idempotents, matrix units, the
//! normalization scalars, the cellular sandwich element z_lambda, and the
//! verified truth tables of two sandwich identities that hold only in
//! degenerate ranges.

use brauer_core::exact::{ExactMatrix, Ring, SpanBasis};
use brauer_core::perm::Permutation;
use brauer_core::seminormal::{f_st, f_t, gamma, jm_element};
use brauer_core::symgroup::{
    murphy_x, std_tableaux, w_lambda, x_lambda, y_lambda, z_lambda, GroupAlgebraElement,
    Partition, PermIndex, StandardTableau,
};

const Q: Ring = Ring::Rational;

fn all_std(n: usize) -> Vec<StandardTableau> {
    Partition::all(n)
        .into_iter()
        .flat_map(|shape| std_tableaux(&shape).unwrap())
        .collect()
}

fn ge(w: &Permutation, ring: Ring) -> GroupAlgebraElement {
    GroupAlgebraElement::from_permutation(w, ring)
}

#[test]
fn idempotents_are_orthogonal_and_resolve_identity() {
    for n in 2..=5usize {
        let tabs = all_std(n);
        let fs: Vec<GroupAlgebraElement> = tabs.iter().map(|t| f_t(t).unwrap()).collect();
        let mut total = GroupAlgebraElement::zero(n, Q);
        for (i, fi) in fs.iter().enumerate() {
            total = total.add(fi).unwrap();
            for (j, fj) in fs.iter().enumerate() {
                let prod = fi.multiply(fj).unwrap();
                let expect = if i == j {
                    fi.clone()
                } else {
                    GroupAlgebraElement::zero(n, Q)
                };
                assert!(
                    prod.sub(&expect).unwrap().is_zero(),
                    "F_s F_t != delta_st F_s at n={n}, i={i}, j={j}"
                );
            }
        }
        assert!(
            total.sub(&GroupAlgebraElement::identity(n, Q)).unwrap().is_zero(),
            "sum of F_t != 1 at n={n}"
        );
    }
}

#[test]
fn block_idempotents_are_central() {
    for n in 2..=5usize {
        for shape in Partition::all(n) {
            let mut f_shape = GroupAlgebraElement::zero(n, Q);
            for t in std_tableaux(&shape).unwrap() {
                f_shape = f_shape.add(&f_t(&t).unwrap()).unwrap();
            }
            for i in 1..n {
                let s = ge(&Permutation::simple(n, i).unwrap(), Q);
                assert!(
                    f_shape
                        .multiply(&s)
                        .unwrap()
                        .sub(&s.multiply(&f_shape).unwrap())
                        .unwrap()
                        .is_zero(),
                    "F_lambda not central at n={n}, shape {:?}, s_{i}",
                    shape.parts()
                );
            }
        }
    }
}

#[test]
fn normalized_elements_are_matrix_units() {
    for n in 2..=4usize {
        for shape in Partition::all(n) {
            let tabs = std_tableaux(&shape).unwrap();
            let f_tilde = |s: &StandardTableau, t: &StandardTableau| {
                let g = gamma(t).unwrap();
                f_st(s, t).unwrap().scale(&g.inverse().unwrap()).unwrap()
            };
            for s in &tabs {
                for t in &tabs {
                    for u in &tabs {
                        for v in &tabs {
                            let prod = f_tilde(s, t).multiply(&f_tilde(u, v)).unwrap();
                            let expect = if t == u {
                                f_tilde(s, v)
                            } else {
                                GroupAlgebraElement::zero(n, Q)
                            };
                            assert!(
                                prod.sub(&expect).unwrap().is_zero(),
                                "matrix-unit law fails at n={n}, shape {:?}",
                                shape.parts()
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn jm_elements_commute() {
    for n in 2..=5usize {
        let ls: Vec<GroupAlgebraElement> =
            (1..=n).map(|k| jm_element(k, n, Q).unwrap()).collect();
        for a in &ls {
            for b in &ls {
                assert!(
                    a.multiply(b).unwrap().sub(&b.multiply(a).unwrap()).unwrap().is_zero(),
                    "JM elements fail to commute at n={n}"
                );
            }
        }
    }
}

#[test]
fn sandwich_element_has_seminormal_form() {
    for n in 2..=5usize {
        for shape in Partition::all(n) {
            let z = z_lambda(&shape, Q).unwrap();
            let g = gamma(&StandardTableau::row_fill(&shape.conjugate())).unwrap();
            let f = f_st(
                &StandardTableau::row_fill(&shape),
                &StandardTableau::column_fill(&shape),
            )
            .unwrap();
            assert!(
                z.sub(&f.scale(&g).unwrap()).unwrap().is_zero(),
                "z != gamma * f at n={n}, shape {:?}",
                shape.parts()
            );
        }
    }
}

// For the two-row shape (n-k, k) the conjugate column factorials collapse to
// 2^k, so the seminormal form specializes to z = 2^k f.
#[test]
fn two_row_sandwich_scalar_is_a_power_of_two() {
    for n in 2..=5usize {
        for k in 0..=n / 2 {
            let shape = Partition::new(&[n - k, k]).unwrap();
            let z = z_lambda(&shape, Q).unwrap();
            let f = f_st(
                &StandardTableau::row_fill(&shape),
                &StandardTableau::column_fill(&shape),
            )
            .unwrap();
            assert!(
                z.sub(&f.scale(&Q.from_i64(1 << k)).unwrap()).unwrap().is_zero(),
                "z != 2^k f at n={n}, k={k}"
            );
        }
    }
}

fn strictly_dominating_span(shape: &Partition, n: usize, index: &PermIndex) -> SpanBasis {
    let mut span = SpanBasis::new(index.len(), Q).unwrap();
    for other in Partition::all(n) {
        if other.dominates(shape).unwrap() && &other != shape {
            let tabs = std_tableaux(&other).unwrap();
            for s in &tabs {
                for t in &tabs {
                    span.insert(murphy_x(s, t, Q).unwrap().to_vector(index).unwrap())
                        .unwrap();
                }
            }
        }
    }
    span
}

// Truth table: z - 2^k X_{(row-fill, column-fill)} lies in the strictly
// dominating cell span only for k = 0 and for (n, k) = (2, 1). From n = 3 on,
// in-cell correction terms survive (see the explicit witness below), so the
// naive leading-term congruence for z is false in general.
#[test]
fn leading_term_congruence_truth_table() {
    for n in 2..=5usize {
        let index = PermIndex::new(n).unwrap();
        for k in 0..=n / 2 {
            let shape = Partition::new(&[n - k, k]).unwrap();
            let z = z_lambda(&shape, Q).unwrap();
            let x = murphy_x(
                &StandardTableau::row_fill(&shape),
                &StandardTableau::column_fill(&shape),
                Q,
            )
            .unwrap();
            let diff = z.sub(&x.scale(&Q.from_i64(1 << k)).unwrap()).unwrap();
            let span = strictly_dominating_span(&shape, n, &index);
            let inside = span.contains(&diff.to_vector(&index).unwrap()).unwrap();
            let expected = k == 0 || (n, k) == (2, 1);
            assert_eq!(
                inside, expected,
                "leading-term congruence truth table broken at n={n}, k={k}"
            );
        }
    }
}

// The explicit n = 3 witness behind the failing congruence:
// z_(2,1) = 2 X_(t-row, t-col) + X_(t-row, t-row) - X_(3).
#[test]
fn explicit_in_cell_correction_witness() {
    let n = 3;
    let shape = Partition::new(&[2, 1]).unwrap();
    let z = z_lambda(&shape, Q).unwrap();
    let tr = StandardTableau::row_fill(&shape);
    let tc = StandardTableau::column_fill(&shape);
    let rhs = murphy_x(&tr, &tc, Q)
        .unwrap()
        .scale(&Q.from_i64(2))
        .unwrap()
        .add(&murphy_x(&tr, &tr, Q).unwrap())
        .unwrap()
        .sub(&x_lambda(&Partition::new(&[3]).unwrap(), Q).unwrap())
        .unwrap();
    assert!(z.sub(&rhs).unwrap().is_zero());
    let _ = n;
}

// Truth table for the two-sided sandwich identity
// Y w' X w Y = 2^k (Y w' X w) over Z: holds only for k = 0 and (n,k) = (2,1).
#[test]
fn sandwich_identity_truth_table() {
    let ring = Ring::Integer;
    for n in 2..=6usize {
        for k in 0..=n / 2 {
            let shape = Partition::new(&[n - k, k]).unwrap();
            let conj = shape.conjugate();
            let y = y_lambda(&conj, ring).unwrap();
            let x = x_lambda(&shape, ring).unwrap();
            let head = y
                .multiply(&ge(&w_lambda(&conj), ring))
                .unwrap()
                .multiply(&x)
                .unwrap()
                .multiply(&ge(&w_lambda(&shape), ring))
                .unwrap();
            let holds = head
                .multiply(&y)
                .unwrap()
                .sub(&head.scale(&ring.from_i64(1 << k)).unwrap())
                .unwrap()
                .is_zero();
            let expected = k == 0 || (n, k) == (2, 1);
            assert_eq!(
                holds, expected,
                "sandwich identity truth table broken at n={n}, k={k}"
            );
        }
    }
}

// Expands every f_st in Murphy coordinates and checks the triangularity:
// besides the leading X_st, only X_uv with u >= s, v >= t (tableau dominance,
// not both equal) inside the cell, plus strictly dominating shapes, occur.
#[test]
fn seminormal_to_murphy_triangularity() {
    fn tab_dominates(u: &StandardTableau, s: &StandardTableau) -> bool {
        let n = u.n();
        (1..=n).all(|k| u.shape_after(k).dominates(&s.shape_after(k)).unwrap())
    }
    for n in 2..=4usize {
        let index = PermIndex::new(n).unwrap();
        let mut labels = Vec::new();
        let mut rows = Vec::new();
        for shape in Partition::all(n) {
            let tabs = std_tableaux(&shape).unwrap();
            for s in &tabs {
                for t in &tabs {
                    labels.push((shape.clone(), s.clone(), t.clone()));
                    let mut row = murphy_x(s, t, Q).unwrap().to_vector(&index).unwrap();
                    let mut tail = vec![Q.zero(); labels.len() - 1];
                    tail.push(Q.one());
                    tail.resize(index.len(), Q.zero());
                    row.extend(tail);
                    rows.push(row);
                }
            }
        }
        let aug = ExactMatrix::from_rows(Q, rows).unwrap();
        let (_, basis) = aug.rref().unwrap();
        for (i, (shape, s, t)) in labels.iter().enumerate() {
            let f = f_st(s, t).unwrap();
            let mut v = f.to_vector(&index).unwrap();
            v.resize(2 * index.len(), Q.zero());
            basis.reduce(&mut v).unwrap();
            assert!(
                v[..index.len()].iter().all(|c| c.is_zero()),
                "f_st outside the Murphy span at n={n}"
            );
            for (j, c) in v[index.len()..].iter().enumerate() {
                if c.is_zero() || j >= labels.len() {
                    continue;
                }
                let (ref osh, ref u, ref w) = labels[j];
                if osh != shape {
                    assert!(
                        osh.dominates(shape).unwrap(),
                        "non-dominating foreign shape in f_st expansion at n={n}"
                    );
                    continue;
                }
                if j == i {
                    assert!(
                        c.sub(&Q.one().neg()).unwrap().is_zero(),
                        "leading coefficient of f_st is not 1 at n={n}, shape {:?}",
                        shape.parts()
                    );
                    continue;
                }
                assert!(
                    tab_dominates(u, s) && tab_dominates(w, t),
                    "in-cell correction outside the dominance cone at n={n}, shape {:?}",
                    shape.parts()
                );
            }
        }
    }
}

// The cell-killing law: Y_{lambda'} annihilates every Murphy element of
// strictly dominating shape, on both sides, integrally.
#[test]
fn signed_sum_kills_dominating_cells() {
    let ring = Ring::Integer;
    for n in 2..=4usize {
        for shape in Partition::all(n) {
            let y = y_lambda(&shape.conjugate(), ring).unwrap();
            for other in Partition::all(n) {
                if !(other.dominates(&shape).unwrap() && other != shape) {
                    continue;
                }
                let tabs = std_tableaux(&other).unwrap();
                for s in &tabs {
                    for t in &tabs {
                        let x = murphy_x(s, t, ring).unwrap();
                        assert!(
                            x.multiply(&y).unwrap().is_zero()
                                && y.multiply(&x).unwrap().is_zero(),
                            "Y_conj does not kill shape {:?} at n={n}",
                            other.parts()
                        );
                    }
                }
            }
        }
    }
}

// X_lambda w Y_{lambda'} = 0 for every w != w_lambda of length at most
// l(w_lambda).
#[test]
fn short_sandwiches_vanish() {
    let ring = Ring::Integer;
    for n in 2..=4usize {
        for shape in Partition::all(n) {
            let wl = w_lambda(&shape);
            let x = x_lambda(&shape, ring).unwrap();
            let y = y_lambda(&shape.conjugate(), ring).unwrap();
            for w in Permutation::enumerate(n).unwrap() {
                if w == wl || w.length() > wl.length() {
                    continue;
                }
                let sandwich = x.multiply(&ge(&w, ring)).unwrap().multiply(&y).unwrap();
                assert!(
                    sandwich.is_zero(),
                    "X w Y != 0 for short w={w} at n={n}, shape {:?}",
                    shape.parts()
                );
            }
        }
    }
}

// gamma is multiplicative over the factorials of the shape for the row
// filling, and nonzero everywhere.
#[test]
fn gamma_values() {
    for n in 2..=5usize {
        for shape in Partition::all(n) {
            let mut factorial_product = Q.one();
            for &part in shape.parts() {
                for i in 2..=part {
                    factorial_product = factorial_product.mul(&Q.from_i64(i as i64)).unwrap();
                }
            }
            let g = gamma(&StandardTableau::row_fill(&shape)).unwrap();
            assert!(g.sub(&factorial_product).unwrap().is_zero());
            for t in std_tableaux(&shape).unwrap() {
                assert!(!gamma(&t).unwrap().is_zero(), "gamma vanished at n={n}");
            }
        }
    }
}

// Scalar check used by the two-row collapse: the conjugate of (n-k, k) is
// (2^k, 1^(n-2k)), whose row factorials multiply to 2^k.
#[test]
fn conjugate_two_row_gamma_is_two_to_the_k() {
    for n in 2..=6usize {
        for k in 0..=n / 2 {
            let conj = Partition::new(&[n - k, k]).unwrap().conjugate();
            let g = gamma(&StandardTableau::row_fill(&conj)).unwrap();
            assert!(g.sub(&Q.from_i64(1 << k)).unwrap().is_zero(), "n={n}, k={k}");
        }
    }
}
