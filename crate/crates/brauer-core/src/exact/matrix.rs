use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exact::{Ring, Scalar, SpanBasis};

/// Dense row-major matrix over a single scalar ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    ring: Ring,
    data: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize, ring: Ring) -> ExactMatrix {
        ExactMatrix {
            rows,
            cols,
            ring,
            data: vec![ring.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, ring: Ring) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(n, n, ring);
        for i in 0..n {
            m.data[i * n + i] = ring.one();
        }
        m
    }

    pub fn from_rows(ring: Ring, rows: Vec<Vec<Scalar>>) -> Result<ExactMatrix> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            if r.len() != ncols {
                return Err(Error::DimensionMismatch {
                    expected: ncols,
                    got: r.len(),
                });
            }
            for s in &r {
                if s.ring() != ring {
                    return Err(Error::RingMismatch {
                        left: ring,
                        right: s.ring(),
                    });
                }
            }
            data.extend(r);
        }
        Ok(ExactMatrix {
            rows: nrows,
            cols: ncols,
            ring,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) -> Result<()> {
        if v.ring() != self.ring {
            return Err(Error::RingMismatch {
                left: self.ring,
                right: v.ring(),
            });
        }
        self.data[i * self.cols + j] = v;
        Ok(())
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|s| s.is_zero())
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring,
                right: other.ring,
            });
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = ExactMatrix::zeros(self.rows, other.cols, self.ring);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].add(&a.mul(b)?)?;
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring,
                right: other.ring,
            });
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                got: other.rows * other.cols,
            });
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = a.add(b)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Result<ExactMatrix> {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.mul(c)?;
        }
        Ok(out)
    }

    pub fn trace(&self) -> Result<Scalar> {
        let mut t = self.ring.zero();
        for i in 0..self.rows.min(self.cols) {
            t = t.add(self.get(i, i))?;
        }
        Ok(t)
    }

    fn require_field(&self, op: &'static str) -> Result<()> {
        if !self.ring.is_field() {
            return Err(Error::UnsupportedRing { ring: self.ring, op });
        }
        Ok(())
    }

    /// Row-reduce; returns the rank together with the reduced basis of the
    /// row space. The reduced form is unique, so the result is deterministic.
    pub fn rref(&self) -> Result<(usize, SpanBasis)> {
        self.require_field("rref")?;
        let mut basis = SpanBasis::new(self.cols, self.ring)?;
        for i in 0..self.rows {
            basis.insert(self.row(i).to_vec())?;
        }
        Ok((basis.rank(), basis))
    }

    /// Basis of the left nullspace { v : v * M = 0 }, i.e. the coefficient
    /// vectors of vanishing combinations of the rows. Dimension equals
    /// rows - rank.
    pub fn nullspace(&self) -> Result<SpanBasis> {
        self.require_field("nullspace")?;
        // Augmented elimination [ row | e_i ]: pivots are chosen among the
        // first `cols` coordinates only (left to right, first nonzero), so a
        // row whose left part vanishes exposes a kernel coefficient vector.
        struct AugRow {
            left: Vec<Scalar>,
            right: Vec<Scalar>,
            pivot: usize,
        }
        let mut stored: Vec<AugRow> = vec![];
        let mut kernel = SpanBasis::new(self.rows, self.ring)?;
        for i in 0..self.rows {
            let mut left = self.row(i).to_vec();
            let mut right = vec![self.ring.zero(); self.rows];
            right[i] = self.ring.one();
            for s in &stored {
                if left[s.pivot].is_zero() {
                    continue;
                }
                let c = left[s.pivot].clone();
                for (j, x) in s.left.iter().enumerate() {
                    if !x.is_zero() {
                        left[j] = left[j].sub(&c.mul(x)?)?;
                    }
                }
                for (j, x) in s.right.iter().enumerate() {
                    if !x.is_zero() {
                        right[j] = right[j].sub(&c.mul(x)?)?;
                    }
                }
            }
            match left.iter().position(|s| !s.is_zero()) {
                None => {
                    kernel.insert(right)?;
                }
                Some(p) => {
                    let inv = left[p].inverse()?;
                    for s in left.iter_mut() {
                        if !s.is_zero() {
                            *s = s.mul(&inv)?;
                        }
                    }
                    for s in right.iter_mut() {
                        if !s.is_zero() {
                            *s = s.mul(&inv)?;
                        }
                    }
                    stored.push(AugRow { left, right, pivot: p });
                }
            }
        }
        Ok(kernel)
    }

    /// Simple text export: a `rows cols` header line, then one line per row.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.rows, self.cols);
        for i in 0..self.rows {
            let entries: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            let _ = writeln!(out, "{}", entries.join(" "));
        }
        out
    }
}
