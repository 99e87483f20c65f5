//! Two-sided ideal closures in the Brauer algebra B_n(delta) and the group
//! algebra KS_n, with membership and equality tests.
//!
//! Closure runs a worklist: seed the row space with the generators, then for
//! every newly inserted element multiply by each algebra generator (s_j and
//! e_j for the Brauer algebra, s_j for the symmetric group) on both sides
//! and insert whatever falls outside the current span. Multiplication is
//! linear, so once every processed item has both-sided products inside the
//! span, the span is a two-sided ideal.

use std::collections::VecDeque;

use num::bigint::BigInt;

use crate::algebra::{generator_diagrams, AlgebraElement, DiagramIndex};
use crate::diagram::BrauerDiagram;
use crate::error::{Error, Result};
use crate::exact::{Ring, Scalar, SpanBasis};
use crate::perm::Permutation;
use crate::symgroup::{GroupAlgebraElement, Partition, PermIndex};

/// Result of a closure run: the reduced row space plus iteration counters.
#[derive(Debug, Clone)]
pub struct IdealClosure {
    pub descriptor: String,
    span: SpanBasis,
    rounds: usize,
    products: usize,
}

impl IdealClosure {
    pub fn span(&self) -> &SpanBasis {
        &self.span
    }

    pub fn dim(&self) -> usize {
        self.span.rank()
    }

    /// Worklist items processed.
    pub fn rounds(&self) -> usize {
        self.rounds
    }

    /// Generator products computed.
    pub fn products(&self) -> usize {
        self.products
    }
}

fn check_theorem_ring(ring: Ring) -> Result<()> {
    if ring.characteristic() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    if !ring.is_field() {
        return Err(Error::UnsupportedRing {
            ring,
            op: "ideal closure (needs a field)",
        });
    }
    Ok(())
}

fn run_closure<T, VF, NF>(
    ambient: usize,
    ring: Ring,
    seeds: Vec<T>,
    vectorize: VF,
    neighbors: NF,
) -> Result<(SpanBasis, usize, usize)>
where
    VF: Fn(&T) -> Result<Vec<Scalar>>,
    NF: Fn(&T) -> Result<Vec<T>>,
{
    let mut span = SpanBasis::new(ambient, ring)?;
    let mut queue: VecDeque<T> = VecDeque::new();
    for seed in seeds {
        if span.insert(vectorize(&seed)?)? {
            queue.push_back(seed);
        }
    }
    let mut rounds = 0;
    let mut products = 0;
    while let Some(item) = queue.pop_front() {
        rounds += 1;
        for product in neighbors(&item)? {
            products += 1;
            if span.insert(vectorize(&product)?)? {
                queue.push_back(product);
            }
        }
    }
    Ok((span, rounds, products))
}

/// A two-sided ideal of B_n(delta), held as a reduced row space over the
/// frozen diagram order.
#[derive(Debug, Clone)]
pub struct BrauerIdeal {
    closure: IdealClosure,
    index: DiagramIndex,
    n: usize,
    ring: Ring,
    delta: Scalar,
}

impl BrauerIdeal {
    /// Close the given generators under two-sided multiplication. The ring
    /// must be a field of characteristic other than two.
    pub fn generate(
        n: usize,
        ring: Ring,
        delta: &Scalar,
        gens: &[AlgebraElement],
    ) -> Result<BrauerIdeal> {
        check_theorem_ring(ring)?;
        if delta.ring() != ring {
            return Err(Error::RingMismatch {
                left: ring,
                right: delta.ring(),
            });
        }
        for g in gens {
            if g.n() != n {
                return Err(Error::StrandMismatch {
                    left: n,
                    right: g.n(),
                });
            }
            if g.ring() != ring {
                return Err(Error::RingMismatch {
                    left: ring,
                    right: g.ring(),
                });
            }
            if g.delta() != delta {
                return Err(Error::DeltaMismatch {
                    carried: g.delta().to_string(),
                    required: delta.to_string(),
                });
            }
        }
        let index = DiagramIndex::new(n)?;
        let multipliers: Vec<AlgebraElement> = generator_diagrams(n)?
            .iter()
            .map(|d| AlgebraElement::from_diagram(d, ring, delta.clone()))
            .collect::<Result<_>>()?;
        let (span, rounds, products) = run_closure(
            index.len(),
            ring,
            gens.to_vec(),
            |h| h.to_vector(&index),
            |h| {
                let mut out = Vec::with_capacity(2 * multipliers.len());
                for g in &multipliers {
                    out.push(g.multiply(h)?);
                    out.push(h.multiply(g)?);
                }
                Ok(out)
            },
        )?;
        Ok(BrauerIdeal {
            closure: IdealClosure {
                descriptor: format!("Brauer(n={n}, delta={delta}, ring={ring})"),
                span,
                rounds,
                products,
            },
            index,
            n,
            ring,
            delta: delta.clone(),
        })
    }

    pub fn closure(&self) -> &IdealClosure {
        &self.closure
    }

    pub fn span(&self) -> &SpanBasis {
        self.closure.span()
    }

    pub fn dim(&self) -> usize {
        self.closure.dim()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn index(&self) -> &DiagramIndex {
        &self.index
    }

    pub fn contains(&self, h: &AlgebraElement) -> Result<bool> {
        self.span().contains(&h.to_vector(&self.index)?)
    }

    pub fn equals_span(&self, other: &SpanBasis) -> Result<bool> {
        self.span().space_eq(other)
    }

    pub fn equals(&self, other: &BrauerIdeal) -> Result<bool> {
        if self.n != other.n || self.ring != other.ring || self.delta != other.delta {
            return Err(Error::AmbientMismatch(format!(
                "{} vs {}",
                self.closure.descriptor, other.closure.descriptor
            )));
        }
        self.span().space_eq(other.span())
    }

    /// Post-hoc check that the span really is a two-sided ideal.
    pub fn verify_closed(&self) -> Result<bool> {
        let multipliers: Vec<AlgebraElement> = generator_diagrams(self.n)?
            .iter()
            .map(|d| AlgebraElement::from_diagram(d, self.ring, self.delta.clone()))
            .collect::<Result<_>>()?;
        for row in self.span().rows() {
            let h = AlgebraElement::from_vector(row, &self.index, self.ring, self.delta.clone())?;
            for g in &multipliers {
                if !self.contains(&g.multiply(&h)?)? || !self.contains(&h.multiply(g)?)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// A two-sided ideal of KS_n over the frozen lexicographic permutation
/// order.
#[derive(Debug, Clone)]
pub struct SymIdeal {
    closure: IdealClosure,
    index: PermIndex,
    n: usize,
    ring: Ring,
}

impl SymIdeal {
    pub fn generate(n: usize, ring: Ring, gens: &[GroupAlgebraElement]) -> Result<SymIdeal> {
        check_theorem_ring(ring)?;
        for g in gens {
            if g.n() != n {
                return Err(Error::StrandMismatch {
                    left: n,
                    right: g.n(),
                });
            }
            if g.ring() != ring {
                return Err(Error::RingMismatch {
                    left: ring,
                    right: g.ring(),
                });
            }
        }
        let index = PermIndex::new(n)?;
        let multipliers: Vec<GroupAlgebraElement> = (1..n)
            .map(|i| Ok(GroupAlgebraElement::from_permutation(&Permutation::simple(n, i)?, ring)))
            .collect::<Result<_>>()?;
        let (span, rounds, products) = run_closure(
            index.len(),
            ring,
            gens.to_vec(),
            |h| h.to_vector(&index),
            |h| {
                let mut out = Vec::with_capacity(2 * multipliers.len());
                for g in &multipliers {
                    out.push(g.multiply(h)?);
                    out.push(h.multiply(g)?);
                }
                Ok(out)
            },
        )?;
        Ok(SymIdeal {
            closure: IdealClosure {
                descriptor: format!("SymGroup(n={n}, ring={ring})"),
                span,
                rounds,
                products,
            },
            index,
            n,
            ring,
        })
    }

    pub fn closure(&self) -> &IdealClosure {
        &self.closure
    }

    pub fn span(&self) -> &SpanBasis {
        self.closure.span()
    }

    pub fn dim(&self) -> usize {
        self.closure.dim()
    }

    pub fn index(&self) -> &PermIndex {
        &self.index
    }

    pub fn contains(&self, h: &GroupAlgebraElement) -> Result<bool> {
        self.span().contains(&h.to_vector(&self.index)?)
    }

    pub fn equals(&self, other: &SymIdeal) -> Result<bool> {
        if self.n != other.n || self.ring != other.ring {
            return Err(Error::AmbientMismatch(format!(
                "{} vs {}",
                self.closure.descriptor, other.closure.descriptor
            )));
        }
        self.span().space_eq(other.span())
    }

    pub fn verify_closed(&self) -> Result<bool> {
        let multipliers: Vec<GroupAlgebraElement> = (1..self.n)
            .map(|i| {
                Ok(GroupAlgebraElement::from_permutation(
                    &Permutation::simple(self.n, i)?,
                    self.ring,
                ))
            })
            .collect::<Result<_>>()?;
        for row in self.span().rows() {
            let mut h = GroupAlgebraElement::zero(self.n, self.ring);
            for (i, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    h.add_term(self.index.permutation(i).clone(), c.clone())?;
                }
            }
            for g in &multipliers {
                if !self.contains(&g.multiply(&h)?)? || !self.contains(&h.multiply(g)?)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Predicted dimension of the dominance ideal generated by X_{(n-a,a)}:
/// the sum over lambda dominating (n-a,a) of the squared count of standard
/// tableaux.
pub fn dominance_ideal_dim(n: usize, a: usize) -> Result<BigInt> {
    if 2 * a > n {
        return Err(Error::OutOfRange(format!(
            "two-row shape needs 2a <= n, got n = {n}, a = {a}"
        )));
    }
    let two_row = Partition::new(&[n - a, a])?;
    let mut total = BigInt::from(0);
    for lam in Partition::all(n) {
        if lam.dominates(&two_row)? {
            let d = lam.hook_dim();
            total += &d * &d;
        }
    }
    Ok(total)
}

/// The diagram e_1 e_3 ... e_{2f-1}: f nested horizontal pairs in matching
/// top and bottom positions, verticals elsewhere.
pub fn horizontal_seed_diagram(n: usize, f: usize) -> Result<BrauerDiagram> {
    if 2 * f > n {
        return Err(Error::OutOfRange(format!(
            "seed diagram needs 2f <= n, got n = {n}, f = {f}"
        )));
    }
    let mut edges = Vec::new();
    for i in 1..=f {
        edges.push((2 * i - 1, 2 * i));
        edges.push((2 * n + 1 - (2 * i - 1), 2 * n + 1 - 2 * i));
    }
    for k in 2 * f + 1..=n {
        edges.push((k, 2 * n + 1 - k));
    }
    BrauerDiagram::from_edges(n, &edges)
}

/// Dimension of the cell ideal generated by e_1 e_3 ... e_{2f-1} in
/// B_n(delta).
pub fn cell_ideal_dim_brauer(n: usize, f: usize, ring: Ring, delta: &Scalar) -> Result<usize> {
    let seed = horizontal_seed_diagram(n, f)?;
    let gen = AlgebraElement::from_diagram(&seed, ring, delta.clone())?;
    Ok(BrauerIdeal::generate(n, ring, delta, &[gen])?.dim())
}

/// Count of diagrams with at least f horizontal edges per row; the expected
/// cell ideal dimension.
pub fn diagrams_with_min_horizontals(n: usize, f: usize) -> Result<usize> {
    Ok(BrauerDiagram::enumerate(n)?
        .iter()
        .filter(|d| d.horizontal_count() >= f)
        .count())
}
