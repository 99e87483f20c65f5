//! Partitions, standard Young tableaux, and the symmetric group algebra
//! KS_n with its Murphy cellular bases.
//!
//! The combinatorial side covers dominance order, conjugation, hook-length
//! dimensions and the two-row closed forms, the Catalan-type dimension
//! identity, and the doubled-partition index count that predicts annihilator
//! dimensions. The algebraic side builds X_lambda, Y_lambda, the Murphy
//! elements X_st and Y_st, z_lambda, and the sign twist tau, all over any
//! scalar ring, with an embedding into the Brauer algebra by permutation
//! diagrams.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;

use num::bigint::BigInt;
use num::One;

use crate::algebra::AlgebraElement;
use crate::diagram::BrauerDiagram;
use crate::error::{Error, Result};
use crate::exact::{Ring, Scalar};
use crate::perm::Permutation;

/// Tableau enumeration is capped at this many boxes.
pub const MAX_TABLEAU_BOXES: usize = 12;

/// A partition: weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Build from parts; trailing zeros are stripped, other violations are
    /// rejected.
    pub fn new(parts: &[usize]) -> Result<Partition> {
        let mut parts = parts.to_vec();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "interior zero part in {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// |lambda|, the number of boxes.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Dominance order: self dominates other when all prefix sums of self
    /// are at least those of other. Requires equal size.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::InvalidPartition(format!(
                "dominance undefined between sizes {} and {}",
                self.n(),
                other.n()
            )));
        }
        let rows = self.rows().max(other.rows());
        let mut a = 0usize;
        let mut b = 0usize;
        for i in 0..rows {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All partitions of n in descending lexicographic order, (n) first.
    pub fn all(n: usize) -> Vec<Partition> {
        fn extend(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for next in (1..=remaining.min(max)).rev() {
                prefix.push(next);
                extend(remaining - next, next, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        extend(n, n, &mut Vec::new(), &mut out);
        out
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && col <= self.part(row - 1)
    }

    /// Hook length of the cell (row, col), 1-based.
    pub fn hook(&self, row: usize, col: usize) -> usize {
        let conj = self.conjugate();
        self.part(row - 1) + conj.part(col - 1) - row - col + 1
    }

    /// dim S^lambda by the hook-length formula, exact.
    pub fn hook_dim(&self) -> BigInt {
        let n = self.n();
        let mut num = BigInt::one();
        for k in 1..=n {
            num *= BigInt::from(k);
        }
        let mut den = BigInt::one();
        for (i, &row_len) in self.parts.iter().enumerate() {
            for j in 1..=row_len {
                den *= BigInt::from(self.hook(i + 1, j));
            }
        }
        num / den
    }

    /// Cells (row, col), 1-based, whose addition leaves a partition shape.
    pub fn addable_nodes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.rows() + 1 {
            if i == 1 || self.part(i - 2) > self.part(i - 1) {
                out.push((i, self.part(i - 1) + 1));
            }
        }
        out
    }

    /// Cells (row, col), 1-based, whose removal leaves a partition shape.
    pub fn removable_nodes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.rows() {
            if self.part(i - 1) > self.part(i) {
                out.push((i, self.part(i - 1)));
            }
        }
        out
    }

    /// The doubled partition (p1, p1, p2, p2, ...).
    pub fn doubled(&self) -> Partition {
        let parts = self
            .parts
            .iter()
            .flat_map(|&p| [p, p])
            .collect();
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = self
            .parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "({body})")
    }
}

/// Closed form for dim S^{(m+1-k,k)}: 1 for k = 0, otherwise
/// (m+1)m...(m-k+3) * (m-2k+2) / k!.
pub fn two_row_dim(m: usize, k: usize) -> Result<BigInt> {
    if 2 * k > m + 1 {
        return Err(Error::OutOfRange(format!(
            "two-row shape needs 2k <= m+1, got m = {m}, k = {k}"
        )));
    }
    if k == 0 {
        return Ok(BigInt::one());
    }
    let mut num = BigInt::one();
    for v in m - k + 3..=m + 1 {
        num *= BigInt::from(v);
    }
    num *= BigInt::from(m + 2 - 2 * k);
    let mut den = BigInt::one();
    for v in 1..=k {
        den *= BigInt::from(v);
    }
    Ok(num / den)
}

/// Both sides of the dimension identity
/// sum_k (dim S^{(m+1-k,k)})^2 = dim S^{(m+1,m+1)},
/// together with the closed form (2m+2)(2m+1)...(m+3) / (m+1)!.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalanCheck {
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub closed_form: BigInt,
}

impl CatalanCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs && self.rhs == self.closed_form
    }
}

pub fn catalan_identity(m: usize) -> Result<CatalanCheck> {
    if m == 0 {
        return Err(Error::OutOfRange("identity needs m >= 1".into()));
    }
    let mut lhs = BigInt::from(0);
    for k in 0..=m.div_ceil(2) {
        let d = two_row_dim(m, k)?;
        lhs += &d * &d;
    }
    let rhs = Partition::new(&[m + 1, m + 1])?.hook_dim();
    let mut num = BigInt::one();
    for v in m + 3..=2 * m + 2 {
        num *= BigInt::from(v);
    }
    let mut den = BigInt::one();
    for v in 1..=m + 1 {
        den *= BigInt::from(v);
    }
    Ok(CatalanCheck {
        lhs,
        rhs,
        closed_form: num / den,
    })
}

/// Sum of hook_dim of the doubled partition over all nu of n dominating the
/// hook (m+1, 1^{n-m-1}); the combinatorial prediction for dim Ker phi on
/// n-fold m-dimensional tensor space.
pub fn kernel_index_count(m: usize, n: usize) -> Result<BigInt> {
    if m == 0 || n <= m {
        return Err(Error::OutOfRange(format!(
            "index count needs n > m >= 1, got m = {m}, n = {n}"
        )));
    }
    let mut hook = vec![m + 1];
    hook.extend(std::iter::repeat_n(1, n - m - 1));
    let hook = Partition::new(&hook)?;
    let mut total = BigInt::from(0);
    for nu in Partition::all(n) {
        if nu.dominates(&hook)? {
            total += nu.doubled().hook_dim();
        }
    }
    Ok(total)
}

/// A standard tableau: shape filled bijectively by 1..n, increasing along
/// rows and down columns.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<StandardTableau> {
        let shape = Partition::new(&rows.iter().map(|r| r.len()).collect::<Vec<_>>())?;
        let n = shape.n();
        let mut seen = vec![false; n + 1];
        for row in &rows {
            for &e in row {
                if e < 1 || e > n || seen[e] {
                    return Err(Error::InvalidTableau(format!(
                        "entries must be a bijection onto 1..{n}"
                    )));
                }
                seen[e] = true;
            }
        }
        for row in &rows {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau("rows must increase".into()));
            }
        }
        for i in 1..rows.len() {
            for (above, below) in rows[i - 1].iter().zip(&rows[i]) {
                if above >= below {
                    return Err(Error::InvalidTableau("columns must increase".into()));
                }
            }
        }
        Ok(StandardTableau { shape, rows })
    }

    /// t^lambda: fill rows left to right, top to bottom.
    pub fn row_fill(shape: &Partition) -> StandardTableau {
        let mut next = 1;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                let row: Vec<usize> = (next..next + len).collect();
                next += len;
                row
            })
            .collect();
        StandardTableau {
            shape: shape.clone(),
            rows,
        }
    }

    /// t_lambda: fill columns top to bottom, left to right.
    pub fn column_fill(shape: &Partition) -> StandardTableau {
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
        let conj = shape.conjugate();
        let mut next = 1;
        for (j, &col_len) in conj.parts().iter().enumerate() {
            for row in rows.iter_mut().take(col_len) {
                row[j] = next;
                next += 1;
            }
        }
        StandardTableau {
            shape: shape.clone(),
            rows,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    /// 1-based (row, column) of the cell holding k.
    pub fn position(&self, k: usize) -> Result<(usize, usize)> {
        for (i, row) in self.rows.iter().enumerate() {
            if let Some(j) = row.iter().position(|&e| e == k) {
                return Ok((i + 1, j + 1));
            }
        }
        Err(Error::OutOfRange(format!("no entry {k} in tableau")))
    }

    /// Content of k: column minus row.
    pub fn content(&self, k: usize) -> Result<i64> {
        let (r, c) = self.position(k)?;
        Ok(c as i64 - r as i64)
    }

    /// Shape of the subtableau of entries 1..k.
    pub fn shape_after(&self, k: usize) -> Partition {
        let parts: Vec<usize> = self
            .rows
            .iter()
            .map(|row| row.iter().filter(|&&e| e <= k).count())
            .take_while(|&len| len > 0)
            .collect();
        Partition { parts }
    }

    /// The permutation d(t) with t^lambda d(t) = t: cell by cell it sends
    /// the row-fill entry to this tableau's entry.
    pub fn d(&self) -> Permutation {
        let n = self.n();
        let initial = StandardTableau::row_fill(&self.shape);
        let mut images = vec![0; n];
        for (i, row) in initial.rows.iter().enumerate() {
            for (j, &a) in row.iter().enumerate() {
                images[a - 1] = self.rows[i][j];
            }
        }
        Permutation::from_one_line(images).expect("cellwise bijection")
    }

    /// Entries read row by row.
    pub fn row_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let line = row
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// All standard tableaux of the given shape, sorted by row word. Guarded at
/// MAX_TABLEAU_BOXES boxes.
pub fn std_tableaux(shape: &Partition) -> Result<Vec<StandardTableau>> {
    let n = shape.n();
    if n > MAX_TABLEAU_BOXES {
        return Err(Error::GuardExceeded {
            what: "tableau boxes".into(),
            limit: MAX_TABLEAU_BOXES as u128,
            requested: n as u128,
        });
    }
    fn place(
        shape: &Partition,
        k: usize,
        n: usize,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<StandardTableau>,
    ) {
        if k > n {
            out.push(StandardTableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        for i in 0..shape.rows() {
            let filled = rows[i].len();
            if filled >= shape.part(i) {
                continue;
            }
            if i > 0 && rows[i - 1].len() <= filled {
                continue;
            }
            rows[i].push(k);
            place(shape, k + 1, n, rows, out);
            rows[i].pop();
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); shape.rows()];
    place(shape, 1, n, &mut rows, &mut out);
    out.sort_by_key(|t| t.row_word());
    Ok(out)
}

/// w_lambda = d(t_lambda), carrying the row fill to the column fill.
pub fn w_lambda(shape: &Partition) -> Permutation {
    StandardTableau::column_fill(shape).d()
}

/// Element of the group algebra of Sym_n over a scalar ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    n: usize,
    ring: Ring,
    support: BTreeMap<Permutation, Scalar>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize, ring: Ring) -> GroupAlgebraElement {
        GroupAlgebraElement {
            n,
            ring,
            support: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize, ring: Ring) -> GroupAlgebraElement {
        GroupAlgebraElement::from_permutation(&Permutation::identity(n), ring)
    }

    pub fn from_permutation(w: &Permutation, ring: Ring) -> GroupAlgebraElement {
        let mut e = GroupAlgebraElement::zero(w.degree(), ring);
        e.add_term(w.clone(), ring.one()).expect("fresh element");
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn support(&self) -> &BTreeMap<Permutation, Scalar> {
        &self.support
    }

    pub fn coeff(&self, w: &Permutation) -> Scalar {
        self.support.get(w).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn add_term(&mut self, w: Permutation, c: Scalar) -> Result<()> {
        if w.degree() != self.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: w.degree(),
            });
        }
        if c.ring() != self.ring {
            return Err(Error::RingMismatch {
                left: self.ring,
                right: c.ring(),
            });
        }
        if c.is_zero() {
            return Ok(());
        }
        match self.support.remove(&w) {
            None => {
                self.support.insert(w, c);
            }
            Some(old) => {
                let sum = old.add(&c)?;
                if !sum.is_zero() {
                    self.support.insert(w, sum);
                }
            }
        }
        Ok(())
    }

    fn check_compatible(&self, other: &GroupAlgebraElement) -> Result<()> {
        if self.n != other.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: other.n,
            });
        }
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring,
                right: other.ring,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &GroupAlgebraElement) -> Result<GroupAlgebraElement> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (w, c) in &other.support {
            out.add_term(w.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> GroupAlgebraElement {
        let mut out = self.clone();
        for c in out.support.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn sub(&self, other: &GroupAlgebraElement) -> Result<GroupAlgebraElement> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Result<GroupAlgebraElement> {
        if c.ring() != self.ring {
            return Err(Error::RingMismatch {
                left: self.ring,
                right: c.ring(),
            });
        }
        let mut out = GroupAlgebraElement::zero(self.n, self.ring);
        for (w, x) in &self.support {
            out.add_term(w.clone(), x.mul(c)?)?;
        }
        Ok(out)
    }

    pub fn multiply(&self, other: &GroupAlgebraElement) -> Result<GroupAlgebraElement> {
        self.check_compatible(other)?;
        let mut out = GroupAlgebraElement::zero(self.n, self.ring);
        for (v, c1) in &self.support {
            for (w, c2) in &other.support {
                out.add_term(v.compose(w)?, c1.mul(c2)?)?;
            }
        }
        Ok(out)
    }

    /// The sign twist: w picks up (-1)^{length(w)}. An algebra automorphism
    /// of order two sending each simple reflection to its negative.
    pub fn tau(&self) -> GroupAlgebraElement {
        let mut out = GroupAlgebraElement::zero(self.n, self.ring);
        for (w, c) in &self.support {
            let c = if w.sign() < 0 { c.neg() } else { c.clone() };
            out.add_term(w.clone(), c).expect("same ring");
        }
        out
    }

    /// Embed into the Brauer algebra by permutation diagrams.
    pub fn to_brauer(&self, delta: Scalar) -> Result<AlgebraElement> {
        let mut out = AlgebraElement::zero(self.n, self.ring, delta)?;
        for (w, c) in &self.support {
            out.add_term(BrauerDiagram::from_permutation(w), c.clone())?;
        }
        Ok(out)
    }

    /// Coordinates in the frozen lexicographic order on Sym_n.
    pub fn to_vector(&self, index: &PermIndex) -> Result<Vec<Scalar>> {
        if index.n() != self.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: index.n(),
            });
        }
        let mut v = vec![self.ring.zero(); index.len()];
        for (w, c) in &self.support {
            v[index.position(w)?] = c.clone();
        }
        Ok(v)
    }
}

/// Frozen lexicographic enumeration of Sym_n with positions.
#[derive(Debug, Clone)]
pub struct PermIndex {
    n: usize,
    order: Vec<Permutation>,
    pos: HashMap<Permutation, usize>,
}

impl PermIndex {
    pub fn new(n: usize) -> Result<PermIndex> {
        let order = Permutation::enumerate(n)?;
        let pos = order
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        Ok(PermIndex { n, order, pos })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn permutation(&self, i: usize) -> &Permutation {
        &self.order[i]
    }

    pub fn position(&self, w: &Permutation) -> Result<usize> {
        self.pos
            .get(w)
            .copied()
            .ok_or_else(|| Error::InvalidPermutation(format!("{w} not in index")))
    }
}

/// Young subgroup of the composition given by lambda's parts: iterates all
/// block-diagonal permutations.
fn young_subgroup(shape: &Partition) -> Result<Vec<Permutation>> {
    let n = shape.n();
    let mut members = vec![Permutation::identity(n)];
    let mut offset = 0;
    for &len in shape.parts() {
        let mut next = Vec::with_capacity(members.len() * (1..=len).product::<usize>());
        for block in Permutation::enumerate(len)? {
            for w in &members {
                let mut images = w.one_line().to_vec();
                for k in 1..=len {
                    images[offset + k - 1] = offset + block.apply(k);
                }
                next.push(Permutation::from_one_line(images)?);
            }
        }
        members = next;
        offset += len;
    }
    Ok(members)
}

/// X_lambda: the sum over the Young subgroup.
pub fn x_lambda(shape: &Partition, ring: Ring) -> Result<GroupAlgebraElement> {
    let n = shape.n();
    let mut out = GroupAlgebraElement::zero(n, ring);
    for w in young_subgroup(shape)? {
        out.add_term(w, ring.one())?;
    }
    Ok(out)
}

/// Y_lambda: the signed sum over the Young subgroup.
pub fn y_lambda(shape: &Partition, ring: Ring) -> Result<GroupAlgebraElement> {
    let n = shape.n();
    let mut out = GroupAlgebraElement::zero(n, ring);
    for w in young_subgroup(shape)? {
        let c = ring.from_i64(w.sign());
        out.add_term(w, c)?;
    }
    Ok(out)
}

fn check_same_shape(s: &StandardTableau, t: &StandardTableau) -> Result<()> {
    if s.shape() != t.shape() {
        return Err(Error::InvalidTableau(format!(
            "shape mismatch {} vs {}",
            s.shape(),
            t.shape()
        )));
    }
    Ok(())
}

/// Murphy element X_st = d(s)^{-1} X_lambda d(t).
pub fn murphy_x(s: &StandardTableau, t: &StandardTableau, ring: Ring) -> Result<GroupAlgebraElement> {
    check_same_shape(s, t)?;
    let left = GroupAlgebraElement::from_permutation(&s.d().inverse(), ring);
    let right = GroupAlgebraElement::from_permutation(&t.d(), ring);
    left.multiply(&x_lambda(s.shape(), ring)?)?.multiply(&right)
}

/// Signed Murphy element Y_st = d(s)^{-1} Y_lambda d(t).
pub fn murphy_y(s: &StandardTableau, t: &StandardTableau, ring: Ring) -> Result<GroupAlgebraElement> {
    check_same_shape(s, t)?;
    let left = GroupAlgebraElement::from_permutation(&s.d().inverse(), ring);
    let right = GroupAlgebraElement::from_permutation(&t.d(), ring);
    left.multiply(&y_lambda(s.shape(), ring)?)?.multiply(&right)
}

/// z_lambda = X_lambda w_lambda Y_{lambda'}.
pub fn z_lambda(shape: &Partition, ring: Ring) -> Result<GroupAlgebraElement> {
    let w = GroupAlgebraElement::from_permutation(&w_lambda(shape), ring);
    x_lambda(shape, ring)?
        .multiply(&w)?
        .multiply(&y_lambda(&shape.conjugate(), ring)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts).unwrap()
    }

    #[test]
    fn partition_basics() {
        assert_eq!(p(&[3, 1, 0]).parts(), &[3, 1]);
        assert!(Partition::new(&[1, 2]).is_err());
        assert_eq!(p(&[3, 1]).n(), 4);
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[4, 2, 1]).conjugate().conjugate(), p(&[4, 2, 1]));
        assert_eq!(p(&[2, 1]).doubled(), p(&[2, 2, 1, 1]));
    }

    #[test]
    fn partition_enumeration() {
        let all = Partition::all(4);
        assert_eq!(
            all,
            vec![
                p(&[4]),
                p(&[3, 1]),
                p(&[2, 2]),
                p(&[2, 1, 1]),
                p(&[1, 1, 1, 1])
            ]
        );
        assert_eq!(Partition::all(6).len(), 11);
        assert_eq!(Partition::all(10).len(), 42);
    }

    #[test]
    fn node_sets() {
        assert_eq!(p(&[2, 1]).addable_nodes(), vec![(1, 3), (2, 2), (3, 1)]);
        assert_eq!(p(&[2, 1]).removable_nodes(), vec![(1, 2), (2, 1)]);
        assert_eq!(p(&[3, 3]).addable_nodes(), vec![(1, 4), (3, 1)]);
        assert_eq!(p(&[3, 3]).removable_nodes(), vec![(2, 3)]);
        assert_eq!(Partition::new(&[]).unwrap().addable_nodes(), vec![(1, 1)]);
        // Adding any addable node, then removing it, round-trips.
        for shape in Partition::all(6) {
            for (i, j) in shape.addable_nodes() {
                let mut parts = shape.parts().to_vec();
                if i > parts.len() {
                    parts.push(1);
                } else {
                    parts[i - 1] += 1;
                }
                let bigger = Partition::new(&parts).unwrap();
                assert!(bigger.removable_nodes().contains(&(i, j)));
            }
        }
    }

    #[test]
    fn dominance_examples() {
        let n4 = Partition::all(4);
        for mu in &n4 {
            assert!(p(&[4]).dominates(mu).unwrap());
        }
        assert!(p(&[3, 1]).dominates(&p(&[2, 2])).unwrap());
        assert!(!p(&[2, 2]).dominates(&p(&[3, 1])).unwrap());
        assert!(p(&[2, 2]).dominates(&p(&[2, 1, 1])).unwrap());
        assert!(p(&[3, 1]).dominates(&p(&[3, 1])).unwrap());
        assert!(p(&[2, 2]).dominates(&p(&[3])).is_err());
    }

    #[test]
    fn hook_dims() {
        assert_eq!(p(&[2, 1]).hook_dim(), BigInt::from(2));
        assert_eq!(p(&[3, 3]).hook_dim(), BigInt::from(5));
        assert_eq!(p(&[3, 3, 1, 1]).hook_dim(), BigInt::from(56));
        assert_eq!(p(&[2, 2, 1, 1]).hook_dim(), BigInt::from(9));
        assert_eq!(p(&[1]).hook_dim(), BigInt::from(1));
        for m in 1..=6 {
            assert_eq!(p(&[m, 1]).hook_dim(), BigInt::from(m));
        }
    }

    #[test]
    fn hook_dim_counts_tableaux() {
        for n in 1..=7 {
            for shape in Partition::all(n) {
                let count = std_tableaux(&shape).unwrap().len();
                assert_eq!(shape.hook_dim(), BigInt::from(count), "shape {shape}");
            }
        }
    }

    #[test]
    fn tableau_enumeration_order() {
        let shape = p(&[2, 1]);
        let all = std_tableaux(&shape).unwrap();
        assert_eq!(all.len(), 2);
        assert_eq!(all[0], StandardTableau::row_fill(&shape));
        assert_eq!(all[0].row_word(), vec![1, 2, 3]);
        assert_eq!(all[1].row_word(), vec![1, 3, 2]);
        assert_eq!(std_tableaux(&p(&[3, 3])).unwrap().len(), 5);
        assert_eq!(std_tableaux(&p(&[5])).unwrap().len(), 1);
        assert!(std_tableaux(&p(&[7, 6])).is_err());
    }

    #[test]
    fn tableau_validation() {
        assert!(StandardTableau::new(vec![vec![1, 2], vec![3]]).is_ok());
        assert!(StandardTableau::new(vec![vec![2, 1], vec![3]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 2], vec![2]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 3], vec![2, 4], vec![5]]).is_ok());
        // Column decrease.
        assert!(StandardTableau::new(vec![vec![2, 3], vec![1]]).is_err());
    }

    #[test]
    fn fills_and_d() {
        let shape = p(&[2, 1]);
        let initial = StandardTableau::row_fill(&shape);
        assert_eq!(initial.rows(), &[vec![1, 2], vec![3]]);
        let last = StandardTableau::column_fill(&shape);
        assert_eq!(last.rows(), &[vec![1, 3], vec![2]]);
        assert!(initial.d().is_identity());
        assert_eq!(last.d().one_line(), &[1, 3, 2]);
        assert_eq!(w_lambda(&shape).one_line(), &[1, 3, 2]);
        assert!(w_lambda(&p(&[1, 1])).is_identity());
    }

    #[test]
    fn d_round_trip() {
        // Applying d(t) to the row-fill entries recovers t.
        for n in 1..=5 {
            for shape in Partition::all(n) {
                let initial = StandardTableau::row_fill(&shape);
                for t in std_tableaux(&shape).unwrap() {
                    let d = t.d();
                    let rows: Vec<Vec<usize>> = initial
                        .rows()
                        .iter()
                        .map(|row| row.iter().map(|&a| d.apply(a)).collect())
                        .collect();
                    assert_eq!(rows, t.rows());
                }
            }
        }
    }

    #[test]
    fn positions_and_contents() {
        let t = StandardTableau::new(vec![vec![1, 3], vec![2, 4]]).unwrap();
        assert_eq!(t.position(3).unwrap(), (1, 2));
        assert_eq!(t.content(1).unwrap(), 0);
        assert_eq!(t.content(2).unwrap(), -1);
        assert_eq!(t.content(3).unwrap(), 1);
        assert_eq!(t.content(4).unwrap(), 0);
        assert_eq!(t.shape_after(2), p(&[1, 1]));
        assert_eq!(t.shape_after(3), p(&[2, 1]));
        assert_eq!(t.shape_after(4), p(&[2, 2]));
    }

    #[test]
    fn young_subgroup_sums() {
        let ring = Ring::Integer;
        let x = x_lambda(&p(&[1, 1]), ring).unwrap();
        assert_eq!(x, GroupAlgebraElement::identity(2, ring));
        let x2 = x_lambda(&p(&[2]), ring).unwrap();
        assert_eq!(x2.support().len(), 2);
        assert_eq!(x2.coeff(&Permutation::simple(2, 1).unwrap()), ring.one());
        let y2 = y_lambda(&p(&[2]), ring).unwrap();
        assert_eq!(
            y2.coeff(&Permutation::simple(2, 1).unwrap()),
            ring.from_i64(-1)
        );
        assert_eq!(x_lambda(&p(&[2, 2]), ring).unwrap().support().len(), 4);
        // X_lambda is unisigned; Y_lambda coefficients match permutation sign.
        let y = y_lambda(&p(&[3, 2]), ring).unwrap();
        for (w, c) in y.support() {
            assert_eq!(c, &ring.from_i64(w.sign()));
        }
        assert_eq!(y.support().len(), 12);
    }

    #[test]
    fn murphy_examples() {
        let ring = Ring::Integer;
        let shape = p(&[2, 1]);
        let initial = StandardTableau::row_fill(&shape);
        let x = murphy_x(&initial, &initial, ring).unwrap();
        assert_eq!(x, x_lambda(&shape, ring).unwrap());
        let other = std_tableaux(&p(&[2, 2])).unwrap();
        assert!(murphy_x(&initial, &other[0], ring).is_err());
    }

    #[test]
    fn murphy_rank_n3() {
        let ring = Ring::Rational;
        let index = PermIndex::new(3).unwrap();
        let mut rows = Vec::new();
        for shape in Partition::all(3) {
            let tabs = std_tableaux(&shape).unwrap();
            for s in &tabs {
                for t in &tabs {
                    rows.push(murphy_x(s, t, ring).unwrap().to_vector(&index).unwrap());
                }
            }
        }
        assert_eq!(rows.len(), 6);
        let m = crate::exact::ExactMatrix::from_rows(ring, rows).unwrap();
        let (rank, _) = m.rref().unwrap();
        assert_eq!(rank, 6);
    }

    #[test]
    fn z_examples() {
        let ring = Ring::Integer;
        let s1 = GroupAlgebraElement::from_permutation(&Permutation::simple(2, 1).unwrap(), ring);
        let id = GroupAlgebraElement::identity(2, ring);
        assert_eq!(z_lambda(&p(&[1, 1]), ring).unwrap(), id.sub(&s1).unwrap());
        assert_eq!(z_lambda(&p(&[2]), ring).unwrap(), id.add(&s1).unwrap());
    }

    #[test]
    fn tau_properties() {
        let ring = Ring::Integer;
        for n in 1..=4 {
            for shape in Partition::all(n) {
                let y = y_lambda(&shape, ring).unwrap();
                assert_eq!(y.tau(), x_lambda(&shape, ring).unwrap(), "shape {shape}");
            }
        }
        let z = z_lambda(&p(&[2, 1]), ring).unwrap();
        assert_eq!(z.tau().tau(), z);
        let id = GroupAlgebraElement::identity(3, ring);
        assert_eq!(id.tau(), id);
    }

    #[test]
    fn group_algebra_multiplication() {
        let ring = Ring::Integer;
        // (1 + s1)(1 - s1) = 0 in ZS_2.
        let s1 = GroupAlgebraElement::from_permutation(&Permutation::simple(2, 1).unwrap(), ring);
        let id = GroupAlgebraElement::identity(2, ring);
        let prod = id.add(&s1).unwrap().multiply(&id.sub(&s1).unwrap()).unwrap();
        assert!(prod.is_zero());
        // Young symmetrizer square: X_{(2)}^2 = 2 X_{(2)}.
        let x = x_lambda(&p(&[2]), ring).unwrap();
        assert_eq!(
            x.multiply(&x).unwrap(),
            x.scale(&ring.from_i64(2)).unwrap()
        );
    }

    #[test]
    fn brauer_embedding_is_homomorphism() {
        let ring = Ring::Integer;
        let delta = ring.from_i64(2);
        let a = x_lambda(&p(&[2, 1]), ring).unwrap();
        let b = z_lambda(&p(&[2, 1]), ring).unwrap();
        let lhs = a.multiply(&b).unwrap().to_brauer(delta.clone()).unwrap();
        let rhs = a
            .to_brauer(delta.clone())
            .unwrap()
            .multiply(&b.to_brauer(delta).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn two_row_dims() {
        assert_eq!(two_row_dim(2, 1).unwrap(), BigInt::from(2));
        assert_eq!(two_row_dim(3, 2).unwrap(), BigInt::from(2));
        assert_eq!(two_row_dim(9, 0).unwrap(), BigInt::from(1));
        assert!(two_row_dim(3, 3).is_err());
        for m in 1..=12usize {
            for k in 0..=m.div_ceil(2) {
                let shape = if k == 0 { p(&[m + 1]) } else { p(&[m + 1 - k, k]) };
                assert_eq!(
                    two_row_dim(m, k).unwrap(),
                    shape.hook_dim(),
                    "m={m} k={k}"
                );
            }
        }
    }

    #[test]
    fn catalan_identity_anchors() {
        let c = catalan_identity(2).unwrap();
        assert_eq!(c.lhs, BigInt::from(5));
        assert_eq!(c.rhs, BigInt::from(5));
        assert!(c.holds());
        let c = catalan_identity(3).unwrap();
        assert_eq!(c.rhs, BigInt::from(14));
        assert!(c.holds());
        let c = catalan_identity(1).unwrap();
        assert_eq!(c.lhs, BigInt::from(2));
        assert!(c.holds());
        assert!(catalan_identity(0).is_err());
    }

    #[test]
    fn kernel_index_counts() {
        let expected = [
            ((1usize, 2usize), 2u64),
            ((1, 3), 14),
            ((2, 3), 5),
            ((2, 4), 70),
            ((3, 4), 14),
        ];
        for ((m, n), v) in expected {
            assert_eq!(kernel_index_count(m, n).unwrap(), BigInt::from(v), "({m},{n})");
        }
        assert!(kernel_index_count(2, 2).is_err());
    }

    #[test]
    fn perm_index_round_trip() {
        let index = PermIndex::new(4).unwrap();
        assert_eq!(index.len(), 24);
        for i in 0..index.len() {
            assert_eq!(index.position(index.permutation(i)).unwrap(), i);
        }
    }
}
