//! The Brauer algebra B_n(delta): free module on Brauer n-diagrams with
//! concatenation product D1 * D2 = delta^{loops} (D1 composed with D2).
//!
//! Besides the generic element arithmetic, this module builds the signed
//! diagram sums E_{a,b} (with the sign of each diagram computed from its
//! normal form) and the alternating sums b(S, S', beta) attached to a
//! pairing specification (with the permutation sign). Agreement of the two
//! constructions certifies the sign function and the enumeration together.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;

use crate::diagram::{bottom_label, BrauerDiagram};
use crate::error::{Error, Result};
use crate::exact::{Ring, Scalar};
use crate::perm::Permutation;

/// Element of B_n(delta) over a scalar ring. The loop parameter delta is
/// carried by the element; mixing distinct deltas is an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    n: usize,
    ring: Ring,
    delta: Scalar,
    support: BTreeMap<BrauerDiagram, Scalar>,
}

impl AlgebraElement {
    pub fn zero(n: usize, ring: Ring, delta: Scalar) -> Result<AlgebraElement> {
        if delta.ring() != ring {
            return Err(Error::RingMismatch {
                left: ring,
                right: delta.ring(),
            });
        }
        Ok(AlgebraElement {
            n,
            ring,
            delta,
            support: BTreeMap::new(),
        })
    }

    pub fn from_diagram(d: &BrauerDiagram, ring: Ring, delta: Scalar) -> Result<AlgebraElement> {
        let mut e = AlgebraElement::zero(d.n(), ring, delta)?;
        e.add_term(d.clone(), ring.one())?;
        Ok(e)
    }

    pub fn identity(n: usize, ring: Ring, delta: Scalar) -> Result<AlgebraElement> {
        AlgebraElement::from_diagram(&BrauerDiagram::identity(n), ring, delta)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn delta(&self) -> &Scalar {
        &self.delta
    }

    pub fn support(&self) -> &BTreeMap<BrauerDiagram, Scalar> {
        &self.support
    }

    pub fn coeff(&self, d: &BrauerDiagram) -> Scalar {
        self.support.get(d).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    /// Add c * d to the element, dropping the term if it cancels.
    pub fn add_term(&mut self, d: BrauerDiagram, c: Scalar) -> Result<()> {
        if d.n() != self.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: d.n(),
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
        match self.support.remove(&d) {
            None => {
                self.support.insert(d, c);
            }
            Some(old) => {
                let sum = old.add(&c)?;
                if !sum.is_zero() {
                    self.support.insert(d, sum);
                }
            }
        }
        Ok(())
    }

    fn check_compatible(&self, other: &AlgebraElement) -> Result<()> {
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
        if self.delta != other.delta {
            return Err(Error::DeltaMismatch {
                carried: self.delta.to_string(),
                required: other.delta.to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (d, c) in &other.support {
            out.add_term(d.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> AlgebraElement {
        let mut out = self.clone();
        for c in out.support.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Result<AlgebraElement> {
        if c.ring() != self.ring {
            return Err(Error::RingMismatch {
                left: self.ring,
                right: c.ring(),
            });
        }
        let mut out = AlgebraElement::zero(self.n, self.ring, self.delta.clone())?;
        for (d, x) in &self.support {
            out.add_term(d.clone(), x.mul(c)?)?;
        }
        Ok(out)
    }

    /// Bilinear extension of diagram concatenation, with each concatenation
    /// contributing delta^{loops}.
    pub fn multiply(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_compatible(other)?;
        let mut out = AlgebraElement::zero(self.n, self.ring, self.delta.clone())?;
        for (d1, c1) in &self.support {
            for (d2, c2) in &other.support {
                let (d, loops) = d1.concat(d2)?;
                let mut c = c1.mul(c2)?;
                if loops > 0 {
                    c = c.mul(&self.delta.pow(loops as u32)?)?;
                }
                out.add_term(d, c)?;
            }
        }
        Ok(out)
    }

    /// Coordinates in the frozen diagram enumeration order.
    pub fn to_vector(&self, index: &DiagramIndex) -> Result<Vec<Scalar>> {
        if index.n() != self.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: index.n(),
            });
        }
        let mut v = vec![self.ring.zero(); index.len()];
        for (d, c) in &self.support {
            v[index.position(d)?] = c.clone();
        }
        Ok(v)
    }

    pub fn from_vector(
        v: &[Scalar],
        index: &DiagramIndex,
        ring: Ring,
        delta: Scalar,
    ) -> Result<AlgebraElement> {
        if v.len() != index.len() {
            return Err(Error::DimensionMismatch {
                expected: index.len(),
                got: v.len(),
            });
        }
        let mut out = AlgebraElement::zero(index.n(), ring, delta)?;
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out.add_term(index.diagram(i).clone(), c.clone())?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}; ring={}; delta={}", self.n, self.ring, self.delta)?;
        for (d, c) in &self.support {
            writeln!(f, "{c} * {d}")?;
        }
        Ok(())
    }
}

/// Parse the element text format emitted by `Display`.
pub fn parse_element(text: &str) -> Result<AlgebraElement> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty element text".into()))?;
    let bad = |m: String| Error::Parse(m);
    let mut n: Option<usize> = None;
    let mut ring: Option<Ring> = None;
    let mut delta_text: Option<String> = None;
    for field in header.split(';') {
        let field = field.trim();
        if let Some(v) = field.strip_prefix("n=") {
            n = Some(v.trim().parse().map_err(|_| bad(format!("bad n in `{header}`")))?);
        } else if let Some(v) = field.strip_prefix("ring=") {
            let v = v.trim();
            ring = Some(match v {
                "Z" => Ring::Integer,
                "Q" => Ring::Rational,
                "Z[x]" => Ring::IntPolynomial,
                _ => {
                    let p = v
                        .strip_prefix("GF(")
                        .and_then(|t| t.strip_suffix(')'))
                        .and_then(|t| t.parse::<u64>().ok())
                        .ok_or_else(|| bad(format!("bad ring tag `{v}`")))?;
                    Ring::prime_field(p)?
                }
            });
        } else if let Some(v) = field.strip_prefix("delta=") {
            delta_text = Some(v.trim().to_string());
        }
    }
    let n = n.ok_or_else(|| bad("header missing n".into()))?;
    let ring = ring.ok_or_else(|| bad("header missing ring".into()))?;
    let delta_text = delta_text.ok_or_else(|| bad("header missing delta".into()))?;
    let delta = crate::exact::parse_scalar(&delta_text, ring)?;
    let mut out = AlgebraElement::zero(n, ring, delta)?;
    for line in lines {
        let (c, d) = line
            .split_once('*')
            .ok_or_else(|| bad(format!("bad term `{line}`")))?;
        let coeff = crate::exact::parse_scalar(c.trim(), ring)?;
        let diagram: BrauerDiagram = d.trim().parse()?;
        out.add_term(diagram, coeff)?;
    }
    Ok(out)
}

/// Frozen enumeration order of all Brauer n-diagrams with positions.
#[derive(Debug, Clone)]
pub struct DiagramIndex {
    n: usize,
    order: Vec<BrauerDiagram>,
    pos: HashMap<BrauerDiagram, usize>,
}

impl DiagramIndex {
    pub fn new(n: usize) -> Result<DiagramIndex> {
        let order = BrauerDiagram::enumerate(n)?;
        let pos = order
            .iter()
            .enumerate()
            .map(|(i, d)| (d.clone(), i))
            .collect();
        Ok(DiagramIndex { n, order, pos })
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

    pub fn diagram(&self, i: usize) -> &BrauerDiagram {
        &self.order[i]
    }

    pub fn position(&self, d: &BrauerDiagram) -> Result<usize> {
        self.pos
            .get(d)
            .copied()
            .ok_or_else(|| Error::InvalidDiagram(format!("{d} not in index")))
    }
}

/// A pairing specification (S, S', beta): two disjoint tuples of distinct
/// vertex labels of equal length N >= 1, plus a perfect matching beta of the
/// remaining 2(n - N) labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingSpec {
    pub s: Vec<usize>,
    pub s_prime: Vec<usize>,
    pub beta: Vec<(usize, usize)>,
}

impl PairingSpec {
    pub fn validate(&self, n: usize) -> Result<()> {
        let m = self.s.len();
        if m == 0 || m != self.s_prime.len() {
            return Err(Error::InvalidSpec(format!(
                "S and S' must be nonempty tuples of equal length, got {} and {}",
                m,
                self.s_prime.len()
            )));
        }
        let mut seen = vec![false; 2 * n + 1];
        let mut mark = |v: usize| -> Result<()> {
            if v < 1 || v > 2 * n {
                return Err(Error::InvalidSpec(format!("label {v} out of range")));
            }
            if seen[v] {
                return Err(Error::InvalidSpec(format!("label {v} repeated")));
            }
            seen[v] = true;
            Ok(())
        };
        for &v in self.s.iter().chain(&self.s_prime) {
            mark(v)?;
        }
        for &(a, b) in &self.beta {
            mark(a)?;
            mark(b)?;
        }
        if seen[1..].iter().filter(|&&b| b).count() != 2 * n {
            return Err(Error::InvalidSpec(
                "S, S' and beta must cover all 2n labels".into(),
            ));
        }
        Ok(())
    }
}

/// b(S, S', beta) = sum over w in Sym_N of sign(w) D_w, where D_w joins
/// S[k] to S'[(k)w] and includes the fixed edges beta.
pub fn b_element(spec: &PairingSpec, n: usize, ring: Ring, delta: Scalar) -> Result<AlgebraElement> {
    spec.validate(n)?;
    let big_n = spec.s.len();
    let mut out = AlgebraElement::zero(n, ring, delta)?;
    for w in Permutation::enumerate(big_n)? {
        let mut edges = spec.beta.clone();
        for k in 1..=big_n {
            edges.push((spec.s[k - 1], spec.s_prime[w.apply(k) - 1]));
        }
        let d = BrauerDiagram::from_edges(n, &edges)?;
        out.add_term(d, ring.from_i64(w.sign()))?;
    }
    Ok(out)
}

/// The distinguished pairing for E_{a,b}: S lists 1..a then (a+1)^-..(a+b)^-,
/// S' lists the vertically opposite labels 1^-..a^- then a+1..a+b, and beta
/// joins s to s^- for s > a+b. With this alignment the identity-like diagram
/// arises from w = id, and b(S, S', beta) reproduces E_{a,b} on the nose.
pub fn standard_pairing(a: usize, b: usize, n: usize) -> Result<PairingSpec> {
    if a + b > n || a + b == 0 {
        return Err(Error::OutOfRange(format!(
            "pairing for (a,b) = ({a},{b}) undefined on {n} strands"
        )));
    }
    let mut s = Vec::with_capacity(a + b);
    let mut s_prime = Vec::with_capacity(a + b);
    for i in 1..=a {
        s.push(i);
        s_prime.push(bottom_label(i, n));
    }
    for j in a + 1..=a + b {
        s.push(bottom_label(j, n));
        s_prime.push(j);
    }
    let beta = (a + b + 1..=n).map(|r| (r, bottom_label(r, n))).collect();
    Ok(PairingSpec { s, s_prime, beta })
}

/// Membership predicate for Bd(a,b): every strand above a+b is vertical at
/// its own position, and every label in {1..a} or {(a+1)^-..(a+b)^-} is
/// joined to a label in {1^-..a^-} or {a+1..a+b}.
pub fn in_bd(d: &BrauerDiagram, a: usize, b: usize) -> bool {
    let n = d.n();
    for s in a + b + 1..=n {
        if d.partner(s) != bottom_label(s, n) {
            return false;
        }
    }
    let targets: Vec<usize> = (1..=a)
        .map(|i| bottom_label(i, n))
        .chain(a + 1..=a + b)
        .collect();
    let sources = (1..=a).chain((a + 1..=a + b).map(|j| bottom_label(j, n)));
    for s in sources {
        if !targets.contains(&d.partner(s)) {
            return false;
        }
    }
    true
}

/// E_{a,b} = sum over D in Bd(a,b) of sign(D) D, built through the bijection
/// w -> D_w with the standard pairing; the coefficient of each diagram is its
/// own normal-form sign, so this is the direct signed sum over Bd(a,b).
pub fn e_element(a: usize, b: usize, n: usize, ring: Ring, delta: Scalar) -> Result<AlgebraElement> {
    let spec = standard_pairing(a, b, n)?;
    let big_n = a + b;
    let mut out = AlgebraElement::zero(n, ring, delta)?;
    for w in Permutation::enumerate(big_n)? {
        let mut edges = spec.beta.clone();
        for k in 1..=big_n {
            edges.push((spec.s[k - 1], spec.s_prime[w.apply(k) - 1]));
        }
        let d = BrauerDiagram::from_edges(n, &edges)?;
        let sign = d.sign();
        out.add_term(d, ring.from_i64(sign))?;
    }
    Ok(out)
}

/// E_i = E_{i, m+1-i} inside B_n, defined for 0 <= i <= m+1 <= n.
pub fn e_i_element(i: usize, m: usize, n: usize, ring: Ring, delta: Scalar) -> Result<AlgebraElement> {
    if m + 1 > n {
        return Err(Error::OutOfRange(format!(
            "E_i needs m+1 <= n, got m = {m}, n = {n}"
        )));
    }
    if i > m + 1 {
        return Err(Error::OutOfRange(format!("E_{i} undefined for m = {m}")));
    }
    e_element(i, m + 1 - i, n, ring, delta)
}

/// The generator diagrams s_1..s_{n-1}, e_1..e_{n-1}.
pub fn generator_diagrams(n: usize) -> Result<Vec<BrauerDiagram>> {
    let mut gens = Vec::new();
    for j in 1..n {
        gens.push(BrauerDiagram::generator_s(j, n)?);
    }
    for j in 1..n {
        gens.push(BrauerDiagram::generator_e(j, n)?);
    }
    Ok(gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elt(d: &BrauerDiagram, ring: Ring, delta: &Scalar) -> AlgebraElement {
        AlgebraElement::from_diagram(d, ring, delta.clone()).unwrap()
    }

    fn gen_e(j: usize, n: usize) -> BrauerDiagram {
        BrauerDiagram::generator_e(j, n).unwrap()
    }

    fn gen_s(j: usize, n: usize) -> BrauerDiagram {
        BrauerDiagram::generator_s(j, n).unwrap()
    }

    #[test]
    fn multiply_generic_parameter() {
        let ring = Ring::IntPolynomial;
        let x = Scalar::poly_x();
        let e1 = elt(&gen_e(1, 2), ring, &x);
        let prod = e1.multiply(&e1).unwrap();
        assert_eq!(prod, e1.scale(&x).unwrap());

        let s1 = elt(&gen_s(1, 2), ring, &x);
        assert_eq!(s1.multiply(&e1).unwrap(), e1);
        assert_eq!(e1.multiply(&s1).unwrap(), e1);
    }

    #[test]
    fn idempotent_at_delta_one() {
        let ring = Ring::Rational;
        let one = ring.one();
        let id = AlgebraElement::identity(2, ring, one.clone()).unwrap();
        let e1 = elt(&gen_e(1, 2), ring, &one);
        let u = id.sub(&e1).unwrap();
        assert_eq!(u.multiply(&u).unwrap(), u);
    }

    #[test]
    fn delta_mismatch_is_an_error() {
        let ring = Ring::Rational;
        let a = AlgebraElement::identity(2, ring, ring.from_i64(1)).unwrap();
        let b = AlgebraElement::identity(2, ring, ring.from_i64(2)).unwrap();
        assert!(matches!(a.multiply(&b), Err(Error::DeltaMismatch { .. })));
    }

    /// Independent route to E_{a,b}: filter the full diagram enumeration by
    /// the membership conditions and sum with normal-form signs.
    fn e_by_filter(a: usize, b: usize, n: usize, ring: Ring, delta: Scalar) -> AlgebraElement {
        let mut out = AlgebraElement::zero(n, ring, delta).unwrap();
        for d in BrauerDiagram::enumerate(n).unwrap() {
            if in_bd(&d, a, b) {
                let sign = d.sign();
                out.add_term(d, ring.from_i64(sign)).unwrap();
            }
        }
        out
    }

    #[test]
    fn e_small_examples() {
        let ring = Ring::Integer;
        let delta = ring.from_i64(2);
        // E_{1,1} in B_2 = identity - e_1.
        let e11 = e_element(1, 1, 2, ring, delta.clone()).unwrap();
        let expected = AlgebraElement::identity(2, ring, delta.clone())
            .unwrap()
            .sub(&elt(&gen_e(1, 2), ring, &delta))
            .unwrap();
        assert_eq!(e11, expected);
        // E_{0,2} in B_2 = identity - s_1.
        let e02 = e_element(0, 2, 2, ring, delta.clone()).unwrap();
        let expected = AlgebraElement::identity(2, ring, delta.clone())
            .unwrap()
            .sub(&elt(&gen_s(1, 2), ring, &delta))
            .unwrap();
        assert_eq!(e02, expected);
        // Support size is (a+b)!.
        let e12 = e_element(1, 2, 3, ring, delta.clone()).unwrap();
        assert_eq!(e12.support().len(), 6);
    }

    #[test]
    fn e_matches_filter_enumeration() {
        let ring = Ring::Integer;
        for n in 1..=4 {
            let delta = ring.from_i64(3);
            for a in 0..=n {
                for b in 0..=n - a {
                    if a + b == 0 {
                        continue;
                    }
                    let via_bijection = e_element(a, b, n, ring, delta.clone()).unwrap();
                    let via_filter = e_by_filter(a, b, n, ring, delta.clone());
                    assert_eq!(via_bijection, via_filter, "(a,b,n)=({a},{b},{n})");
                    assert_eq!(
                        via_bijection.support().len(),
                        (1..=a + b).product::<usize>()
                    );
                }
            }
        }
    }

    #[test]
    fn b_element_singleton_is_identity_diagram() {
        let ring = Ring::Integer;
        let spec = PairingSpec {
            s: vec![1],
            s_prime: vec![2],
            beta: vec![],
        };
        let b = b_element(&spec, 1, ring, ring.from_i64(1)).unwrap();
        assert_eq!(
            b,
            AlgebraElement::identity(1, ring, ring.from_i64(1)).unwrap()
        );
    }

    #[test]
    fn b_equals_e_with_standard_pairing() {
        let ring = Ring::Integer;
        for n in 1..=4 {
            let delta = ring.from_i64(2);
            for a in 0..=n {
                for b in 0..=n - a {
                    if a + b == 0 {
                        continue;
                    }
                    let spec = standard_pairing(a, b, n).unwrap();
                    let via_b = b_element(&spec, n, ring, delta.clone()).unwrap();
                    let via_e = e_element(a, b, n, ring, delta.clone()).unwrap();
                    assert_eq!(via_b, via_e, "(a,b,n)=({a},{b},{n})");
                }
            }
        }
    }

    #[test]
    fn reordering_s_prime_flips_the_sign() {
        let ring = Ring::Integer;
        let delta = ring.from_i64(2);
        let mut spec = standard_pairing(1, 1, 2).unwrap();
        let plain = b_element(&spec, 2, ring, delta.clone()).unwrap();
        spec.s_prime.swap(0, 1);
        let swapped = b_element(&spec, 2, ring, delta.clone()).unwrap();
        assert_eq!(swapped, plain.neg());
    }

    #[test]
    fn pairing_spec_validation() {
        // Overlapping S and S'.
        let spec = PairingSpec {
            s: vec![1],
            s_prime: vec![1],
            beta: vec![(2, 3), (4, 5)],
        };
        assert!(spec.validate(3).is_err());
        // Incomplete coverage.
        let spec = PairingSpec {
            s: vec![1],
            s_prime: vec![2],
            beta: vec![],
        };
        assert!(spec.validate(2).is_err());
        // Valid.
        let spec = standard_pairing(1, 1, 3).unwrap();
        assert!(spec.validate(3).is_ok());
    }

    #[test]
    fn multiply_is_associative() {
        let ring = Ring::IntPolynomial;
        let x = Scalar::poly_x();
        let all = BrauerDiagram::enumerate(3).unwrap();
        let sample: Vec<AlgebraElement> = all.iter().step_by(4).map(|d| elt(d, ring, &x)).collect();
        let sum: AlgebraElement = sample
            .iter()
            .fold(AlgebraElement::zero(3, ring, x.clone()).unwrap(), |acc, e| {
                acc.add(e).unwrap()
            });
        let a = sum.clone();
        let b = sum.scale(&Scalar::poly_x()).unwrap().add(&sample[0]).unwrap();
        let c = sample[1].sub(&sample[2]).unwrap();
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn element_text_round_trip() {
        let ring = Ring::IntPolynomial;
        let x = Scalar::poly_x();
        let e = e_element(1, 1, 2, ring, x).unwrap();
        let text = e.to_string();
        let back = parse_element(&text).unwrap();
        assert_eq!(back, e);

        let ring = Ring::prime_field(7).unwrap();
        let e = e_element(1, 2, 3, ring, ring.from_i64(3)).unwrap();
        assert_eq!(parse_element(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn vector_round_trip() {
        let ring = Ring::Rational;
        let delta = ring.from_i64(2);
        let index = DiagramIndex::new(3).unwrap();
        let e = e_element(1, 2, 3, ring, delta.clone()).unwrap();
        let v = e.to_vector(&index).unwrap();
        assert_eq!(v.len(), 15);
        let back = AlgebraElement::from_vector(&v, &index, ring, delta).unwrap();
        assert_eq!(back, e);
    }
}
