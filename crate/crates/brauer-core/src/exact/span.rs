use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exact::{Ring, Scalar};

/// An incrementally maintained reduced-row-echelon basis of a subspace of
/// K^ambient. Rows are kept sorted by pivot column, every pivot entry is 1,
/// and pivot columns are cleared in all other rows, so two `SpanBasis` values
/// describe the same subspace exactly when their rows are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanBasis {
    ambient: usize,
    ring: Ring,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl SpanBasis {
    pub fn new(ambient: usize, ring: Ring) -> Result<SpanBasis> {
        if !ring.is_field() {
            return Err(Error::UnsupportedRing { ring, op: "span basis" });
        }
        Ok(SpanBasis {
            ambient,
            ring,
            rows: vec![],
            pivots: vec![],
        })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: v.len(),
            });
        }
        for s in v {
            if s.ring() != self.ring {
                return Err(Error::RingMismatch {
                    left: self.ring,
                    right: s.ring(),
                });
            }
        }
        Ok(())
    }

    /// Fully reduce `v` against the stored rows, in place.
    pub fn reduce(&self, v: &mut [Scalar]) -> Result<()> {
        self.check_vector(v)?;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (j, rj) in row.iter().enumerate() {
                if rj.is_zero() {
                    continue;
                }
                v[j] = v[j].sub(&c.mul(rj)?)?;
            }
        }
        Ok(())
    }

    /// Insert a vector; returns true when it enlarges the span. The basis
    /// stays in reduced row-echelon form with pivots strictly increasing.
    pub fn insert(&mut self, v: Vec<Scalar>) -> Result<bool> {
        let mut v = v;
        self.reduce(&mut v)?;
        // Deterministic pivot rule: first nonzero coordinate, scanning left
        // to right.
        let Some(p) = v.iter().position(|s| !s.is_zero()) else {
            return Ok(false);
        };
        let inv = v[p].inverse()?;
        for s in v.iter_mut() {
            if !s.is_zero() {
                *s = s.mul(&inv)?;
            }
        }
        for (row, &rp) in self.rows.iter_mut().zip(&self.pivots) {
            debug_assert_ne!(rp, p);
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                row[j] = row[j].sub(&c.mul(vj)?)?;
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        Ok(true)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        let mut w = v.to_vec();
        self.reduce(&mut w)?;
        Ok(w.iter().all(|s| s.is_zero()))
    }

    pub fn is_subspace_of(&self, other: &SpanBasis) -> Result<bool> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: other.ambient,
                got: self.ambient,
            });
        }
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring,
                right: other.ring,
            });
        }
        for row in &self.rows {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Row-space equality via mutual membership.
    pub fn space_eq(&self, other: &SpanBasis) -> Result<bool> {
        Ok(self.rank() == other.rank()
            && self.is_subspace_of(other)?
            && other.is_subspace_of(self)?)
    }

    /// Canonical one-line-per-row text dump; stable across runs because the
    /// reduced form is unique for a given row space.
    pub fn canonical_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "ambient={} ring={} rank={}", self.ambient, self.ring, self.rank());
        for row in &self.rows {
            let entries: Vec<String> = row.iter().map(|s| s.to_string()).collect();
            let _ = writeln!(out, "{}", entries.join(" "));
        }
        out
    }
}
