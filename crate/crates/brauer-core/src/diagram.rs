//! Brauer n-diagrams: perfect matchings on 2n vertices.
//!
//! The top row is labelled 1..n left to right; the bottom-row vertex under
//! position i carries the label i^- := 2n+1-i, so the bottom row reads
//! 2n, 2n-1, ..., n+1 left to right. Edges are stored as (min, max) pairs
//! sorted by first coordinate, which makes the representation canonical.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const MAX_DIAGRAM_STRANDS: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrauerDiagram {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Bottom label of strand position i (1-based): i^- = 2n+1-i.
pub fn bottom_label(i: usize, n: usize) -> usize {
    2 * n + 1 - i
}

/// Normal-form data: the diagram equals d1^{-1} e_1 e_3 ... e_{2f-1} sigma d2
/// with d1, d2 distinguished coset representatives and sigma a permutation of
/// {2f+1, ..., n}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub d1: Permutation,
    pub f: usize,
    pub sigma: Permutation,
    pub d2: Permutation,
}

impl NormalForm {
    /// Coset-representative conditions on d for a given number of horizontal
    /// pairs f: (2j-1)d < (2j)d for j <= f, (1)d < (3)d < ..., and the tail
    /// (2f+1)d < ... < (n)d.
    pub fn is_coset_rep(d: &Permutation, f: usize) -> bool {
        let n = d.degree();
        if 2 * f > n {
            return false;
        }
        for j in 1..=f {
            if d.apply(2 * j - 1) >= d.apply(2 * j) {
                return false;
            }
        }
        for j in 1..f {
            if d.apply(2 * j - 1) >= d.apply(2 * j + 1) {
                return false;
            }
        }
        for j in (2 * f + 1)..n {
            if d.apply(j) >= d.apply(j + 1) {
                return false;
            }
        }
        true
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.d1.degree();
        if self.d2.degree() != n || self.sigma.degree() != n {
            return Err(Error::StrandMismatch {
                left: n,
                right: self.d2.degree().max(self.sigma.degree()),
            });
        }
        if 2 * self.f > n {
            return Err(Error::OutOfRange(format!(
                "normal form with f = {} on {} strands",
                self.f, n
            )));
        }
        if !NormalForm::is_coset_rep(&self.d1, self.f)
            || !NormalForm::is_coset_rep(&self.d2, self.f)
        {
            return Err(Error::InvalidDiagram(
                "d1/d2 are not distinguished coset representatives".into(),
            ));
        }
        for j in 1..=2 * self.f {
            if self.sigma.apply(j) != j {
                return Err(Error::InvalidDiagram(format!(
                    "sigma must fix 1..{}",
                    2 * self.f
                )));
            }
        }
        Ok(())
    }
}

impl BrauerDiagram {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<BrauerDiagram> {
        if edges.len() != n {
            return Err(Error::InvalidDiagram(format!(
                "expected {n} edges, got {}",
                edges.len()
            )));
        }
        let mut seen = vec![false; 2 * n + 1];
        let mut canon: Vec<(usize, usize)> = Vec::with_capacity(n);
        for &(a, b) in edges {
            if a < 1 || b < 1 || a > 2 * n || b > 2 * n || a == b {
                return Err(Error::InvalidDiagram(format!(
                    "edge ({a},{b}) out of range for n = {n}"
                )));
            }
            if seen[a] || seen[b] {
                return Err(Error::InvalidDiagram(format!(
                    "vertex repeated in edge ({a},{b})"
                )));
            }
            seen[a] = true;
            seen[b] = true;
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        Ok(BrauerDiagram { n, edges: canon })
    }

    pub fn identity(n: usize) -> BrauerDiagram {
        let edges: Vec<(usize, usize)> = (1..=n).map(|i| (i, bottom_label(i, n))).collect();
        BrauerDiagram::from_edges(n, &edges).expect("identity diagram is valid")
    }

    /// Generator s_j: strands j and j+1 crossed, all others vertical.
    pub fn generator_s(j: usize, n: usize) -> Result<BrauerDiagram> {
        if j < 1 || j + 1 > n {
            return Err(Error::OutOfRange(format!("s_{j} undefined on {n} strands")));
        }
        let mut edges = vec![(j, bottom_label(j + 1, n)), (j + 1, bottom_label(j, n))];
        for k in 1..=n {
            if k != j && k != j + 1 {
                edges.push((k, bottom_label(k, n)));
            }
        }
        BrauerDiagram::from_edges(n, &edges)
    }

    /// Generator e_j: horizontal pairs {j, j+1} on top and bottom.
    pub fn generator_e(j: usize, n: usize) -> Result<BrauerDiagram> {
        if j < 1 || j + 1 > n {
            return Err(Error::OutOfRange(format!("e_{j} undefined on {n} strands")));
        }
        let mut edges = vec![
            (j, j + 1),
            (bottom_label(j + 1, n), bottom_label(j, n)),
        ];
        for k in 1..=n {
            if k != j && k != j + 1 {
                edges.push((k, bottom_label(k, n)));
            }
        }
        BrauerDiagram::from_edges(n, &edges)
    }

    pub fn from_permutation(w: &Permutation) -> BrauerDiagram {
        let n = w.degree();
        let edges: Vec<(usize, usize)> = (1..=n)
            .map(|i| (i, bottom_label(w.apply(i), n)))
            .collect();
        BrauerDiagram::from_edges(n, &edges).expect("permutation diagram is valid")
    }

    pub fn to_permutation(&self) -> Option<Permutation> {
        let mut images = vec![0; self.n];
        for &(a, b) in &self.edges {
            if a > self.n || b <= self.n {
                return None;
            }
            images[a - 1] = 2 * self.n + 1 - b;
        }
        Permutation::from_one_line(images).ok()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn partner(&self, v: usize) -> usize {
        for &(a, b) in &self.edges {
            if a == v {
                return b;
            }
            if b == v {
                return a;
            }
        }
        unreachable!("vertex {v} out of range")
    }

    /// Number of horizontal edges in the top row; equals the bottom count.
    pub fn horizontal_count(&self) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a <= self.n && b <= self.n)
            .count()
    }

    pub fn is_permutation_diagram(&self) -> bool {
        self.horizontal_count() == 0
    }

    /// Concatenation: self on top, other below. Returns the composite
    /// diagram along with the number of interior loops removed.
    pub fn concat(&self, other: &BrauerDiagram) -> Result<(BrauerDiagram, usize)> {
        if self.n != other.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let n = self.n;
        // Junction vertex i is strand position i of self's bottom row, which
        // is glued to strand position i of other's top row.
        // Step from a vertex inside one diagram: returns (vertex, is_mid).
        #[derive(Clone, Copy, PartialEq, Eq, Debug)]
        enum V {
            Top(usize),
            Mid(usize),
            Bot(usize),
        }
        let step_upper = |v: V| -> V {
            let label = match v {
                V::Top(i) => i,
                V::Mid(i) => bottom_label(i, n),
                V::Bot(_) => unreachable!(),
            };
            let p = self.partner(label);
            if p <= n {
                V::Top(p)
            } else {
                V::Mid(2 * n + 1 - p)
            }
        };
        let step_lower = |v: V| -> V {
            let label = match v {
                V::Mid(i) => i,
                V::Bot(i) => bottom_label(i, n),
                V::Top(_) => unreachable!(),
            };
            let p = other.partner(label);
            if p <= n {
                V::Mid(p)
            } else {
                V::Bot(2 * n + 1 - p)
            }
        };
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(n);
        let mut endpoint_done = vec![false; 2 * n + 1]; // composite labels
        let mut mid_on_path = vec![false; n + 1];
        let endpoint_label = |v: V| -> usize {
            match v {
                V::Top(i) => i,
                V::Bot(i) => bottom_label(i, n),
                V::Mid(_) => unreachable!(),
            }
        };
        for start_label in 1..=2 * n {
            if endpoint_done[start_label] {
                continue;
            }
            let start = if start_label <= n {
                V::Top(start_label)
            } else {
                V::Bot(2 * n + 1 - start_label)
            };
            // First step uses the diagram the endpoint belongs to.
            let mut use_upper = matches!(start, V::Top(_));
            let mut cur = start;
            loop {
                cur = if use_upper { step_upper(cur) } else { step_lower(cur) };
                match cur {
                    V::Mid(i) => {
                        mid_on_path[i] = true;
                        use_upper = !use_upper;
                    }
                    _ => break,
                }
            }
            let a = endpoint_label(start);
            let b = endpoint_label(cur);
            endpoint_done[a] = true;
            endpoint_done[b] = true;
            edges.push((a, b));
        }
        // Remaining junction vertices lie on interior cycles; each cycle is
        // one removed loop.
        let mut loops = 0;
        let mut mid_seen = vec![false; n + 1];
        for i in 1..=n {
            if mid_on_path[i] || mid_seen[i] {
                continue;
            }
            loops += 1;
            let mut cur = V::Mid(i);
            let mut use_upper = true;
            loop {
                if let V::Mid(j) = cur {
                    if mid_seen[j] {
                        break;
                    }
                    mid_seen[j] = true;
                }
                cur = if use_upper { step_upper(cur) } else { step_lower(cur) };
                use_upper = !use_upper;
            }
        }
        Ok((BrauerDiagram::from_edges(n, &edges)?, loops))
    }

    /// Decompose into the distinguished normal form.
    pub fn normal_form(&self) -> NormalForm {
        let n = self.n;
        let mut top_pairs: Vec<(usize, usize)> = vec![];
        let mut bot_pairs: Vec<(usize, usize)> = vec![];
        let mut verticals: Vec<(usize, usize)> = vec![]; // (top, bottom strand)
        for &(a, b) in &self.edges {
            if b <= n {
                top_pairs.push((a, b));
            } else if a > n {
                // Bottom pair: store strand positions in increasing order.
                let u = 2 * n + 1 - b;
                let v = 2 * n + 1 - a;
                bot_pairs.push((u, v));
            } else {
                verticals.push((a, 2 * n + 1 - b));
            }
        }
        let f = top_pairs.len();
        top_pairs.sort_unstable();
        bot_pairs.sort_unstable();
        let build_rep = |pairs: &[(usize, usize)]| -> Permutation {
            let mut images = vec![0usize; n];
            let mut used = vec![false; n + 1];
            for (j, &(a, b)) in pairs.iter().enumerate() {
                images[2 * j] = a;
                images[2 * j + 1] = b;
                used[a] = true;
                used[b] = true;
            }
            let mut rest: Vec<usize> = (1..=n).filter(|&v| !used[v]).collect();
            rest.sort_unstable();
            for (k, v) in rest.into_iter().enumerate() {
                images[2 * f + k] = v;
            }
            Permutation::from_one_line(images).expect("coset representative is a permutation")
        };
        let d1 = build_rep(&top_pairs);
        let d2 = build_rep(&bot_pairs);
        let d1_inv = d1.inverse();
        let d2_inv = d2.inverse();
        let mut sigma_images: Vec<usize> = (1..=n).collect();
        for &(t, b) in &verticals {
            // Vertical edge joins (j)d1 on top with ((j sigma) d2)^- below.
            let j = d1_inv.apply(t);
            sigma_images[j - 1] = d2_inv.apply(b);
        }
        let sigma = Permutation::from_one_line(sigma_images)
            .expect("vertical matching induces a permutation");
        let nf = NormalForm { d1, f, sigma, d2 };
        debug_assert!(nf.validate().is_ok());
        nf
    }

    pub fn from_normal_form(nf: &NormalForm) -> Result<BrauerDiagram> {
        nf.validate()?;
        let n = nf.d1.degree();
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(n);
        for i in 1..=nf.f {
            edges.push((nf.d1.apply(2 * i - 1), nf.d1.apply(2 * i)));
            edges.push((
                bottom_label(nf.d2.apply(2 * i - 1), n),
                bottom_label(nf.d2.apply(2 * i), n),
            ));
        }
        for j in (2 * nf.f + 1)..=n {
            edges.push((
                nf.d1.apply(j),
                bottom_label(nf.d2.apply(nf.sigma.apply(j)), n),
            ));
        }
        BrauerDiagram::from_edges(n, &edges)
    }

    /// Length l(D) = l(d1) + l(d2) + l(sigma) of the normal form.
    pub fn length(&self) -> usize {
        let nf = self.normal_form();
        nf.d1.length() + nf.d2.length() + nf.sigma.length()
    }

    /// sign(D) = (-1)^f (-1)^{l(D)}.
    pub fn sign(&self) -> i64 {
        let nf = self.normal_form();
        let l = nf.d1.length() + nf.d2.length() + nf.sigma.length();
        if (nf.f + l).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// All Brauer n-diagrams in the frozen enumeration order: lexicographic
    /// on the canonical sorted edge list. Count is (2n-1)!!.
    pub fn enumerate(n: usize) -> Result<Vec<BrauerDiagram>> {
        if !(1..=MAX_DIAGRAM_STRANDS).contains(&n) {
            return Err(Error::GuardExceeded {
                what: "diagram strand count".into(),
                limit: MAX_DIAGRAM_STRANDS as u128,
                requested: n as u128,
            });
        }
        let mut out = Vec::new();
        let mut used = vec![false; 2 * n + 1];
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(n);
        fn rec(
            n: usize,
            used: &mut Vec<bool>,
            edges: &mut Vec<(usize, usize)>,
            out: &mut Vec<BrauerDiagram>,
        ) {
            let a = (1..=2 * n).find(|&v| !used[v]);
            let Some(a) = a else {
                out.push(BrauerDiagram {
                    n,
                    edges: edges.clone(),
                });
                return;
            };
            used[a] = true;
            for b in a + 1..=2 * n {
                if used[b] {
                    continue;
                }
                used[b] = true;
                edges.push((a, b));
                rec(n, used, edges, out);
                edges.pop();
                used[b] = false;
            }
            used[a] = false;
        }
        rec(n, &mut used, &mut edges, &mut out);
        Ok(out)
    }
}

/// First pair (D1, D2), in enumeration order, whose composite diagram has
/// sign(D1 * D2) != sign(D1) * sign(D2). The sign is not multiplicative in
/// general; this exhibits a concrete witness.
pub fn sign_nonmultiplicative_witness(
    n: usize,
) -> Result<Option<(BrauerDiagram, BrauerDiagram, BrauerDiagram)>> {
    let all = BrauerDiagram::enumerate(n)?;
    for d1 in &all {
        for d2 in &all {
            let (prod, _) = d1.concat(d2)?;
            if prod.sign() != d1.sign() * d2.sign() {
                return Ok(Some((d1.clone(), d2.clone(), prod)));
            }
        }
    }
    Ok(None)
}

impl fmt::Display for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; edges=", self.n)?;
        for &(a, b) in &self.edges {
            write!(f, "({a},{b})")?;
        }
        Ok(())
    }
}

impl FromStr for BrauerDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<BrauerDiagram> {
        let s = s.trim();
        let bad = |m: &str| Error::Parse(format!("bad diagram `{s}`: {m}"));
        let (n_part, rest) = s.split_once(';').ok_or_else(|| bad("missing `;`"))?;
        let n: usize = n_part
            .trim()
            .strip_prefix("n=")
            .ok_or_else(|| bad("missing `n=`"))?
            .trim()
            .parse()
            .map_err(|_| bad("bad strand count"))?;
        let body = rest
            .trim()
            .strip_prefix("edges=")
            .ok_or_else(|| bad("missing `edges=`"))?;
        let mut edges = Vec::new();
        let mut remaining = body.trim();
        while !remaining.is_empty() {
            let inner_end = remaining.find(')').ok_or_else(|| bad("unclosed `(`"))?;
            let chunk = remaining[..inner_end]
                .strip_prefix('(')
                .ok_or_else(|| bad("expected `(`"))?;
            let (a, b) = chunk.split_once(',').ok_or_else(|| bad("expected `a,b`"))?;
            let a: usize = a.trim().parse().map_err(|_| bad("bad vertex"))?;
            let b: usize = b.trim().parse().map_err(|_| bad("bad vertex"))?;
            edges.push((a, b));
            remaining = &remaining[inner_end + 1..];
        }
        BrauerDiagram::from_edges(n, &edges)
    }
}
