//! The tensor-space representation phi: B_n(m) acting on the right of the
//! n-fold tensor power of an m-dimensional space V.
//!
//! V carries the bilinear form (v_i, v_j) = [i + j = m + 1]. A diagram acts
//! on a basis tensor by contracting top horizontal edges against the form,
//! copying along vertical edges, and expanding bottom horizontal edges into
//! a sum over the form's dual pairs; every matrix entry is 0 or 1. Matrices
//! compose in diagram order under the row-vector convention, so act(h1 h2) =
//! act(h1) act(h2).

use crate::algebra::AlgebraElement;
use crate::diagram::BrauerDiagram;
use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, Ring, SpanBasis};

/// Cap on the tensor space dimension m^n.
pub const MAX_TENSOR_DIM: usize = 4096;
/// Default cap on the flattened action length m^{2n}.
pub const MAX_PHI_ENTRIES: usize = 10_000;
/// Cap on m^{2n} behind the large flag.
pub const MAX_PHI_ENTRIES_LARGE: usize = 65_536;

/// The n-fold tensor power of an m-dimensional space over a ring, with the
/// basis indexed by tuples (i_1, ..., i_n) in {1..m}^n, lexicographic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TensorSpace {
    m: usize,
    n: usize,
    ring: Ring,
}

fn checked_power(base: usize, exp: usize, cap: usize) -> Option<usize> {
    let mut acc = 1usize;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
        if acc > cap {
            return None;
        }
    }
    Some(acc)
}

impl TensorSpace {
    pub fn new(m: usize, n: usize, ring: Ring) -> Result<TensorSpace> {
        if m == 0 {
            return Err(Error::OutOfRange("tensor factor dimension must be >= 1".into()));
        }
        if checked_power(m, n, MAX_TENSOR_DIM).is_none() {
            return Err(Error::GuardExceeded {
                what: format!("tensor dimension {m}^{n}"),
                limit: MAX_TENSOR_DIM as u128,
                requested: (m as u128).pow(n as u32),
            });
        }
        Ok(TensorSpace { m, n, ring })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.m.pow(self.n as u32)
    }

    /// The tuple (i_1, ..., i_n), entries in 1..=m, for a basis index;
    /// i_1 is the most significant digit.
    pub fn tuple_of_index(&self, mut idx: usize) -> Vec<usize> {
        let mut tuple = vec![1; self.n];
        for slot in (0..self.n).rev() {
            tuple[slot] = idx % self.m + 1;
            idx /= self.m;
        }
        tuple
    }

    pub fn index_of_tuple(&self, tuple: &[usize]) -> Result<usize> {
        if tuple.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: tuple.len(),
            });
        }
        let mut idx = 0;
        for &i in tuple {
            if i < 1 || i > self.m {
                return Err(Error::OutOfRange(format!(
                    "tuple entry {i} outside 1..={}",
                    self.m
                )));
            }
            idx = idx * self.m + (i - 1);
        }
        Ok(idx)
    }

    /// The dim x dim matrix of a single diagram's right action.
    pub fn act_diagram(&self, d: &BrauerDiagram) -> Result<ExactMatrix> {
        if d.n() != self.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: d.n(),
            });
        }
        let n = self.n;
        let m = self.m;
        // Classify edges by endpoint rows; bottom labels map to positions
        // via label = 2n + 1 - position.
        let mut top_pairs = Vec::new();
        let mut verticals = Vec::new();
        let mut bottom_pairs = Vec::new();
        for &(u, v) in d.edges() {
            match (u <= n, v <= n) {
                (true, true) => top_pairs.push((u, v)),
                (true, false) => verticals.push((u, 2 * n + 1 - v)),
                (false, false) => bottom_pairs.push((2 * n + 1 - u, 2 * n + 1 - v)),
                (false, true) => verticals.push((v, 2 * n + 1 - u)),
            }
        }
        let dim = self.dim();
        let one = self.ring.one();
        let mut mat = ExactMatrix::zeros(dim, dim, self.ring);
        let free_count = bottom_pairs.len();
        let fan_out = m.pow(free_count as u32);
        for row in 0..dim {
            let input = self.tuple_of_index(row);
            if top_pairs
                .iter()
                .any(|&(a, b)| input[a - 1] + input[b - 1] != m + 1)
            {
                continue;
            }
            let mut base = vec![0usize; n];
            for &(a, c) in &verticals {
                base[c - 1] = input[a - 1];
            }
            for assignment in 0..fan_out {
                let mut output = base.clone();
                let mut rem = assignment;
                for &(c, d) in &bottom_pairs {
                    let k = rem % m + 1;
                    rem /= m;
                    output[c - 1] = k;
                    output[d - 1] = m + 1 - k;
                }
                let col = self.index_of_tuple(&output)?;
                mat.set(row, col, one.clone())?;
            }
        }
        Ok(mat)
    }

    /// Linear extension to algebra elements. The element's loop parameter
    /// must equal m in this ring.
    pub fn act_element(&self, h: &AlgebraElement) -> Result<ExactMatrix> {
        if h.ring() != self.ring {
            return Err(Error::RingMismatch {
                left: self.ring,
                right: h.ring(),
            });
        }
        let required = self.ring.from_i64(self.m as i64);
        if h.delta() != &required {
            return Err(Error::DeltaMismatch {
                carried: h.delta().to_string(),
                required: required.to_string(),
            });
        }
        let dim = self.dim();
        let mut out = ExactMatrix::zeros(dim, dim, self.ring);
        for (d, c) in h.support() {
            out = out.add(&self.act_diagram(d)?.scale(c)?)?;
        }
        Ok(out)
    }
}

fn check_phi_guard(m: usize, n: usize, large: bool) -> Result<()> {
    let cap = if large {
        MAX_PHI_ENTRIES_LARGE
    } else {
        MAX_PHI_ENTRIES
    };
    if checked_power(m, 2 * n, cap).is_none() {
        return Err(Error::GuardExceeded {
            what: format!("flattened action length {m}^{}", 2 * n),
            limit: cap as u128,
            requested: (m as u128).pow(2 * n as u32),
        });
    }
    Ok(())
}

/// The (2n-1)!! x m^{2n} matrix of phi: row D is the flattened action
/// matrix of the diagram D, rows in the frozen enumeration order.
pub fn phi_matrix(m: usize, n: usize, ring: Ring, large: bool) -> Result<ExactMatrix> {
    check_phi_guard(m, n, large)?;
    let space = TensorSpace::new(m, n, ring)?;
    let diagrams = BrauerDiagram::enumerate(n)?;
    let dim = space.dim();
    let mut rows = Vec::with_capacity(diagrams.len());
    for d in &diagrams {
        let action = space.act_diagram(d)?;
        let mut flat = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            flat.extend(action.row(r).iter().cloned());
        }
        rows.push(flat);
    }
    ExactMatrix::from_rows(ring, rows)
}

/// Ker phi as coordinates in the diagram basis: the left nullspace of
/// phi_matrix. Requires a field of characteristic other than two.
pub fn kernel(m: usize, n: usize, ring: Ring, large: bool) -> Result<SpanBasis> {
    if ring.characteristic() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    if !ring.is_field() {
        return Err(Error::UnsupportedRing {
            ring,
            op: "kernel computation (needs a field)",
        });
    }
    phi_matrix(m, n, ring, large)?.nullspace()
}
