//! Verification campaigns over the diagram algebra engine: each function
//! runs one named check suite and produces a machine-readable report whose
//! assertions compare computed values against combinatorial oracles or
//! printed claims.

pub mod report;

use brauer_core::algebra::{
    b_element, e_element, e_i_element, generator_diagrams, standard_pairing, AlgebraElement,
    DiagramIndex,
};
use brauer_core::diagram::BrauerDiagram;
use brauer_core::exact::{Ring, Scalar, SpanBasis};
use brauer_core::ideals::{dominance_ideal_dim, BrauerIdeal, SymIdeal};
use brauer_core::perm::Permutation;
use brauer_core::seminormal::{f_st, f_t, gamma, jm_element};
use brauer_core::symgroup::{
    catalan_identity, kernel_index_count, murphy_x, std_tableaux, w_lambda, x_lambda, y_lambda,
    z_lambda, GroupAlgebraElement, Partition, PermIndex, StandardTableau,
};
use brauer_core::tensor::kernel;
use brauer_core::{Error, Result};
use report::{Report, ReportBuilder};
use serde_json::json;

/// Coefficient field selection shared by the field-parameterized commands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldChoice {
    Rational,
    Char(u64),
}

impl FieldChoice {
    pub fn ring(self) -> Result<Ring> {
        match self {
            FieldChoice::Rational => Ok(Ring::Rational),
            FieldChoice::Char(2) => Err(Error::CharacteristicTwo),
            FieldChoice::Char(p) => Ring::prime_field(p),
        }
    }

    pub fn label(self) -> String {
        match self {
            FieldChoice::Rational => "rational".to_string(),
            FieldChoice::Char(p) => format!("char{p}"),
        }
    }
}

fn guard(condition: bool, what: &str, limit: u128, requested: u128) -> Result<()> {
    if condition {
        Ok(())
    } else {
        Err(Error::GuardExceeded {
            what: what.to_string(),
            limit,
            requested,
        })
    }
}

fn double_factorial_odd(n: usize) -> usize {
    (1..=n).map(|k| 2 * k - 1).product()
}

fn progress(msg: &str) {
    eprintln!("[brauer] {msg}");
}

// ---------------------------------------------------------------------------
// dims
// ---------------------------------------------------------------------------

/// Diagram counts against (2n-1)!!, normal-form round trips, and the algebra
/// dimension, for every strand count up to `n`.
pub fn run_dims(n: usize) -> Result<Report> {
    guard(n >= 1, "dims strand count (minimum 1)", 1, n as u128)?;
    guard(n <= 6, "dims strand count", 6, n as u128)?;
    let mut rb = ReportBuilder::new("dims");
    rb.param("n", n);
    for k in 1..=n {
        progress(&format!("dims: enumerating {k}-strand diagrams"));
        let diagrams = BrauerDiagram::enumerate(k)?;
        rb.check_usize(
            &format!("diagram_count_n{k}"),
            double_factorial_odd(k),
            diagrams.len(),
        );
        let roundtrips = diagrams
            .iter()
            .filter(|d| BrauerDiagram::from_normal_form(&d.normal_form()).as_ref() == Ok(d))
            .count();
        rb.check_usize(
            &format!("normal_form_roundtrip_n{k}"),
            diagrams.len(),
            roundtrips,
        );
        rb.check_usize(
            &format!("algebra_dim_n{k}"),
            double_factorial_odd(k),
            DiagramIndex::new(k)?.len(),
        );
        for d in &diagrams {
            rb.absorb(&format!("{d:?}"));
        }
    }
    Ok(rb.finish())
}

// ---------------------------------------------------------------------------
// relations
// ---------------------------------------------------------------------------

struct PresentationGens {
    s: Vec<AlgebraElement>,
    e: Vec<AlgebraElement>,
    one: AlgebraElement,
    x: Scalar,
}

fn presentation_gens(n: usize) -> Result<PresentationGens> {
    let ring = Ring::IntPolynomial;
    let x = Scalar::poly_x();
    let diagrams = generator_diagrams(n)?;
    let mut elements = Vec::with_capacity(diagrams.len());
    for d in &diagrams {
        elements.push(AlgebraElement::from_diagram(d, ring, x.clone())?);
    }
    let (s, e) = elements.split_at(n - 1);
    Ok(PresentationGens {
        s: s.to_vec(),
        e: e.to_vec(),
        one: AlgebraElement::identity(n, ring, x.clone())?,
        x,
    })
}

/// Returns (family name, instances checked, instances holding) for the
/// defining relations at strand count `n`, evaluated over the integral
/// polynomial ring with the parameter kept symbolic.
fn relation_families(n: usize) -> Result<Vec<(&'static str, usize, usize)>> {
    let g = presentation_gens(n)?;
    let eq = |l: &AlgebraElement, r: &AlgebraElement| -> Result<bool> {
        Ok(l.sub(r)?.is_zero())
    };
    let mul = |l: &AlgebraElement, r: &AlgebraElement| l.multiply(r);
    let mut out = Vec::new();

    let mut tally = |name: &'static str, results: Vec<bool>| {
        let total = results.len();
        let holds = results.iter().filter(|&&b| b).count();
        out.push((name, total, holds));
    };

    let mut involution = Vec::new();
    let mut quadratic = Vec::new();
    let mut absorption = Vec::new();
    for i in 0..n - 1 {
        involution.push(eq(&mul(&g.s[i], &g.s[i])?, &g.one)?);
        quadratic.push(eq(&mul(&g.e[i], &g.e[i])?, &g.e[i].scale(&g.x)?)?);
        absorption.push(
            eq(&mul(&g.e[i], &g.s[i])?, &g.e[i])? && eq(&mul(&g.s[i], &g.e[i])?, &g.e[i])?,
        );
    }
    tally("involution", involution);
    tally("quadratic", quadratic);
    tally("absorption", absorption);

    let mut commute = Vec::new();
    for i in 0..n - 1 {
        for j in i + 2..n - 1 {
            for (a, b) in [
                (&g.s[i], &g.s[j]),
                (&g.s[i], &g.e[j]),
                (&g.e[i], &g.s[j]),
                (&g.e[i], &g.e[j]),
            ] {
                commute.push(eq(&mul(a, b)?, &mul(b, a)?)?);
            }
        }
    }
    tally("distant_commutation", commute);

    let mut braid = Vec::new();
    let mut tangle = Vec::new();
    let mut mixed = Vec::new();
    for i in 0..n.saturating_sub(2) {
        let (s1, s2) = (&g.s[i], &g.s[i + 1]);
        let (e1, e2) = (&g.e[i], &g.e[i + 1]);
        braid.push(eq(&mul(&mul(s1, s2)?, s1)?, &mul(&mul(s2, s1)?, s2)?)?);
        tangle.push(
            eq(&mul(&mul(e1, e2)?, e1)?, e1)? && eq(&mul(&mul(e2, e1)?, e2)?, e2)?,
        );
        mixed.push(
            eq(&mul(&mul(s1, e2)?, e1)?, &mul(s2, e1)?)?
                && eq(&mul(&mul(e2, e1)?, s2)?, &mul(e2, s1)?)?,
        );
    }
    tally("braid", braid);
    tally("tangle", tangle);
    tally("mixed_tangle", mixed);

    Ok(out)
}

/// The defining presentation, checked relation by relation over the
/// polynomial ring (parameter symbolic) at strand count `n`.
pub fn run_relations(n: usize) -> Result<Report> {
    guard(n >= 2, "relations strand count (minimum 2)", 2, n as u128)?;
    guard(n <= 6, "relations strand count", 6, n as u128)?;
    let mut rb = ReportBuilder::new("relations");
    rb.param("n", n);
    progress(&format!("relations: checking the presentation at n={n}"));
    for (name, total, holds) in relation_families(n)? {
        rb.check_usize(name, total, holds);
    }
    Ok(rb.finish())
}

// ---------------------------------------------------------------------------
// specht
// ---------------------------------------------------------------------------

/// Hook-length dimension against direct tableau enumeration for one shape.
pub fn run_specht(parts: &[usize]) -> Result<Report> {
    let shape = Partition::new(parts)?;
    guard(shape.n() <= 12, "partition size", 12, shape.n() as u128)?;
    let mut rb = ReportBuilder::new("specht");
    rb.param("lambda", json!(shape.parts()));
    progress(&format!("specht: enumerating tableaux of {:?}", shape.parts()));
    let tableaux = std_tableaux(&shape)?;
    rb.push(
        "hook_formula_vs_enumeration",
        json!(shape.hook_dim().to_string()),
        json!(tableaux.len().to_string()),
    );
    let conj = std_tableaux(&shape.conjugate())?;
    rb.check_usize("conjugate_count_symmetry", tableaux.len(), conj.len());
    for t in &tableaux {
        rb.absorb(&format!("{:?}", t.rows()));
    }
    Ok(rb.finish())
}

// ---------------------------------------------------------------------------
// identity
// ---------------------------------------------------------------------------

/// The Catalan-type dimension identity at parameter `m`, in big integers.
pub fn run_identity(m: usize) -> Result<Report> {
    guard(m <= 200, "identity parameter", 200, m as u128)?;
    let mut rb = ReportBuilder::new("identity");
    rb.param("m", m);
    progress(&format!("identity: evaluating the dimension identity at m={m}"));
    let check = catalan_identity(m)?;
    rb.check_str(
        "square_sum_equals_central_count",
        &check.lhs.to_string(),
        &check.rhs.to_string(),
    );
    rb.check_str(
        "central_count_equals_closed_form",
        &check.rhs.to_string(),
        &check.closed_form.to_string(),
    );
    Ok(rb.finish())
}

// ---------------------------------------------------------------------------
// kernel
// ---------------------------------------------------------------------------

fn kernel_cell(m: usize, n: usize, ring: Ring) -> Result<(usize, SpanBasis)> {
    let oracle = kernel_index_count(m, n)?;
    let oracle = usize::try_from(&oracle)
        .map_err(|_| Error::OutOfRange(format!("kernel count for (m,n)=({m},{n}) overflows")))?;
    let ker = kernel(m, n, ring, false)?;
    Ok((oracle, ker))
}

/// dim Ker of the tensor-space representation against the combinatorial
/// oracle.
pub fn run_kernel(m: usize, n: usize, field: FieldChoice) -> Result<Report> {
    guard(m >= 1, "tensor parameter m (minimum 1)", 1, m as u128)?;
    let ring = field.ring()?;
    let mut rb = ReportBuilder::new("kernel");
    rb.param("m", m);
    rb.param("n", n);
    rb.param("field", field.label());
    progress(&format!(
        "kernel: computing the representation kernel at (m,n)=({m},{n}) over {}",
        field.label()
    ));
    let (oracle, ker) = kernel_cell(m, n, ring)?;
    rb.check_usize("kernel_dim", oracle, ker.rank());
    rb.absorb(&ker.canonical_text());
    Ok(rb.finish())
}

// ---------------------------------------------------------------------------
// verify-main
// ---------------------------------------------------------------------------

struct MainCell {
    oracle: usize,
    kernel_rank: usize,
    principal_equal: bool,
    multi_equal: bool,
    kernel_text: String,
    ideal_text: String,
}

fn main_cell(m: usize, n: usize, ring: Ring) -> Result<MainCell> {
    let delta = ring.from_i64(m as i64);
    let (oracle, ker) = kernel_cell(m, n, ring)?;
    let half = m.div_ceil(2);
    let principal = BrauerIdeal::generate(
        n,
        ring,
        &delta,
        &[e_i_element(half, m, n, ring, delta.clone())?],
    )?;
    let mut gens = Vec::new();
    for i in 0..=half {
        gens.push(e_i_element(i, m, n, ring, delta.clone())?);
    }
    let multi = BrauerIdeal::generate(n, ring, &delta, &gens)?;
    Ok(MainCell {
        oracle,
        kernel_rank: ker.rank(),
        principal_equal: principal.equals_span(&ker)?,
        multi_equal: multi.equals_span(&ker)?,
        kernel_text: ker.canonical_text(),
        ideal_text: principal.span().canonical_text(),
    })
}

/// The annihilator as a principal ideal: the middle quasi-idempotent
/// generates the kernel, and so does the full quasi-idempotent family.
pub fn run_verify_main(m: usize, n: usize, field: FieldChoice) -> Result<Report> {
    guard(m >= 1, "tensor parameter m (minimum 1)", 1, m as u128)?;
    guard(m < n, "profile bound m+1 <= n", n as u128, (m + 1) as u128)?;
    let ring = field.ring()?;
    let mut rb = ReportBuilder::new("verify-main");
    rb.param("m", m);
    rb.param("n", n);
    rb.param("field", field.label());
    progress(&format!(
        "verify-main: comparing ideal and kernel at (m,n)=({m},{n}) over {}",
        field.label()
    ));
    let cell = main_cell(m, n, ring)?;
    rb.check_usize("kernel_dim", cell.oracle, cell.kernel_rank);
    rb.check_bool("principal_ideal_equals_kernel", cell.principal_equal);
    rb.check_bool("multi_generator_equals_kernel", cell.multi_equal);
    rb.absorb(&cell.kernel_text);
    rb.absorb(&cell.ideal_text);
    Ok(rb.finish())
}

// ---------------------------------------------------------------------------
// ideal-sym
// ---------------------------------------------------------------------------

fn sym_cell(n: usize, a: usize, ring: Ring) -> Result<(usize, SymIdeal)> {
    let lam = Partition::new(&[n - a, a])?;
    let expected = dominance_ideal_dim(n, a)?;
    let expected = usize::try_from(&expected)
        .map_err(|_| Error::OutOfRange(format!("ideal dimension for (n,a)=({n},{a}) overflows")))?;
    let ideal = SymIdeal::generate(n, ring, &[x_lambda(&lam, ring)?])?;
    Ok((expected, ideal))
}

/// Dimension of the two-sided ideal generated by the two-row symmetrizer
/// against the dominance count of cellular elements.
pub fn run_ideal_sym(n: usize, a: usize, field: FieldChoice) -> Result<Report> {
    guard(n >= 2, "symmetric group degree (minimum 2)", 2, n as u128)?;
    guard(n <= 6, "symmetric group degree", 6, n as u128)?;
    if a > n / 2 {
        return Err(Error::OutOfRange(format!(
            "row profile needs a <= n/2, got a = {a}, n = {n}"
        )));
    }
    let ring = field.ring()?;
    let mut rb = ReportBuilder::new("ideal-sym");
    rb.param("n", n);
    rb.param("a", a);
    rb.param("field", field.label());
    progress(&format!(
        "ideal-sym: closing the ideal of the ({}, {a}) symmetrizer over {}",
        n - a,
        field.label()
    ));
    let (expected, ideal) = sym_cell(n, a, ring)?;
    rb.check_usize("ideal_dim", expected, ideal.dim());
    rb.absorb(&ideal.span().canonical_text());
    Ok(rb.finish())
}

// ---------------------------------------------------------------------------
// seminormal
// ---------------------------------------------------------------------------

fn all_std(n: usize) -> Result<Vec<StandardTableau>> {
    let mut out = Vec::new();
    for shape in Partition::all(n) {
        out.extend(std_tableaux(&shape)?);
    }
    Ok(out)
}

fn ge(w: &Permutation, ring: Ring) -> GroupAlgebraElement {
    GroupAlgebraElement::from_permutation(w, ring)
}

struct SeminormalOutcome {
    idempotents_orthogonal: bool,
    resolution_of_identity: bool,
    block_central: bool,
    jm_commute: bool,
    gamma_factorial: bool,
    seminormal_form: bool,
    two_row_scalar: bool,
    matrix_units: Option<bool>,
    triangular: Option<bool>,
    cell_annihilation: Option<bool>,
    short_sandwich: Option<bool>,
    congruence: Vec<(usize, bool)>,
    sandwich: Vec<(usize, bool)>,
}

fn strictly_dominating_span(shape: &Partition, n: usize, index: &PermIndex) -> Result<SpanBasis> {
    let ring = Ring::Rational;
    let mut span = SpanBasis::new(index.len(), ring)?;
    for other in Partition::all(n) {
        if other.dominates(shape)? && &other != shape {
            let tabs = std_tableaux(&other)?;
            for s in &tabs {
                for t in &tabs {
                    span.insert(murphy_x(s, t, ring)?.to_vector(index)?)?;
                }
            }
        }
    }
    Ok(span)
}

fn tab_dominates(u: &StandardTableau, s: &StandardTableau) -> Result<bool> {
    for k in 1..=u.n() {
        if !u.shape_after(k).dominates(&s.shape_after(k))? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn seminormal_data(n: usize) -> Result<SeminormalOutcome> {
    let q = Ring::Rational;
    let tabs = all_std(n)?;
    let fs: Vec<GroupAlgebraElement> = {
        let mut v = Vec::with_capacity(tabs.len());
        for t in &tabs {
            v.push(f_t(t)?);
        }
        v
    };

    progress(&format!("seminormal: idempotent laws at n={n}"));
    let mut idempotents_orthogonal = true;
    let mut total = GroupAlgebraElement::zero(n, q);
    for (i, fi) in fs.iter().enumerate() {
        total = total.add(fi)?;
        for (j, fj) in fs.iter().enumerate() {
            let prod = fi.multiply(fj)?;
            let expect = if i == j {
                fi.clone()
            } else {
                GroupAlgebraElement::zero(n, q)
            };
            if !prod.sub(&expect)?.is_zero() {
                idempotents_orthogonal = false;
            }
        }
    }
    let resolution_of_identity = total.sub(&GroupAlgebraElement::identity(n, q))?.is_zero();

    let mut block_central = true;
    for shape in Partition::all(n) {
        let mut f_shape = GroupAlgebraElement::zero(n, q);
        for t in std_tableaux(&shape)? {
            f_shape = f_shape.add(&f_t(&t)?)?;
        }
        for i in 1..n {
            let s = ge(&Permutation::simple(n, i)?, q);
            if !f_shape.multiply(&s)?.sub(&s.multiply(&f_shape)?)?.is_zero() {
                block_central = false;
            }
        }
    }

    let mut jm_commute = true;
    let ls: Vec<GroupAlgebraElement> = {
        let mut v = Vec::with_capacity(n);
        for k in 1..=n {
            v.push(jm_element(k, n, q)?);
        }
        v
    };
    for a in &ls {
        for b in &ls {
            if !a.multiply(b)?.sub(&b.multiply(a)?)?.is_zero() {
                jm_commute = false;
            }
        }
    }

    progress(&format!("seminormal: normalization scalars at n={n}"));
    let mut gamma_factorial = true;
    for shape in Partition::all(n) {
        let mut factorial_product = q.one();
        for &part in shape.parts() {
            for i in 2..=part {
                factorial_product = factorial_product.mul(&q.from_i64(i as i64))?;
            }
        }
        if !gamma(&StandardTableau::row_fill(&shape))?
            .sub(&factorial_product)?
            .is_zero()
        {
            gamma_factorial = false;
        }
    }

    let mut seminormal_form = true;
    for shape in Partition::all(n) {
        let z = z_lambda(&shape, q)?;
        let g = gamma(&StandardTableau::row_fill(&shape.conjugate()))?;
        let f = f_st(
            &StandardTableau::row_fill(&shape),
            &StandardTableau::column_fill(&shape),
        )?;
        if !z.sub(&f.scale(&g)?)?.is_zero() {
            seminormal_form = false;
        }
    }

    let mut two_row_scalar = true;
    let mut congruence = Vec::new();
    let index = PermIndex::new(n)?;
    for k in 0..=n / 2 {
        let shape = Partition::new(&[n - k, k])?;
        let z = z_lambda(&shape, q)?;
        let f = f_st(
            &StandardTableau::row_fill(&shape),
            &StandardTableau::column_fill(&shape),
        )?;
        if !z.sub(&f.scale(&q.from_i64(1 << k))?)?.is_zero() {
            two_row_scalar = false;
        }
        let x = murphy_x(
            &StandardTableau::row_fill(&shape),
            &StandardTableau::column_fill(&shape),
            q,
        )?;
        let diff = z.sub(&x.scale(&q.from_i64(1 << k))?)?;
        let span = strictly_dominating_span(&shape, n, &index)?;
        congruence.push((k, span.contains(&diff.to_vector(&index)?)?));
    }

    progress(&format!("seminormal: integral sandwich identities at n={n}"));
    let zint = Ring::Integer;
    let mut sandwich = Vec::new();
    for k in 0..=n / 2 {
        let shape = Partition::new(&[n - k, k])?;
        let conj = shape.conjugate();
        let y = y_lambda(&conj, zint)?;
        let head = y
            .multiply(&ge(&w_lambda(&conj), zint))?
            .multiply(&x_lambda(&shape, zint)?)?
            .multiply(&ge(&w_lambda(&shape), zint))?;
        let holds = head
            .multiply(&y)?
            .sub(&head.scale(&zint.from_i64(1 << k))?)?
            .is_zero();
        sandwich.push((k, holds));
    }

    let (matrix_units, triangular, cell_annihilation, short_sandwich) = if n <= 4 {
        progress(&format!("seminormal: matrix units and expansions at n={n}"));
        let mut units = true;
        for shape in Partition::all(n) {
            let shape_tabs = std_tableaux(&shape)?;
            let mut tilde = Vec::new();
            for s in &shape_tabs {
                for t in &shape_tabs {
                    tilde.push(((s, t), f_st(s, t)?.scale(&gamma(t)?.inverse()?)?));
                }
            }
            for ((s, t), fst) in &tilde {
                for ((u, v), fuv) in &tilde {
                    let prod = fst.multiply(fuv)?;
                    let expect = if t == u {
                        let g = gamma(v)?.inverse()?;
                        f_st(s, v)?.scale(&g)?
                    } else {
                        GroupAlgebraElement::zero(n, q)
                    };
                    if !prod.sub(&expect)?.is_zero() {
                        units = false;
                    }
                }
            }
        }

        let mut triangular = true;
        {
            let mut labels = Vec::new();
            let mut rows = Vec::new();
            for shape in Partition::all(n) {
                let shape_tabs = std_tableaux(&shape)?;
                for s in &shape_tabs {
                    for t in &shape_tabs {
                        labels.push((shape.clone(), s.clone(), t.clone()));
                        let mut row = murphy_x(s, t, q)?.to_vector(&index)?;
                        let mut tail = vec![q.zero(); labels.len() - 1];
                        tail.push(q.one());
                        tail.resize(index.len(), q.zero());
                        row.extend(tail);
                        rows.push(row);
                    }
                }
            }
            let aug = brauer_core::exact::ExactMatrix::from_rows(q, rows)?;
            let (_, basis) = aug.rref()?;
            for (i, (shape, s, t)) in labels.iter().enumerate() {
                let mut v = f_st(s, t)?.to_vector(&index)?;
                v.resize(2 * index.len(), q.zero());
                basis.reduce(&mut v)?;
                if v[..index.len()].iter().any(|c| !c.is_zero()) {
                    triangular = false;
                    continue;
                }
                for (j, c) in v[index.len()..].iter().enumerate() {
                    if c.is_zero() || j >= labels.len() || j == i {
                        continue;
                    }
                    let (ref osh, ref u, ref w) = labels[j];
                    if osh != shape {
                        if !osh.dominates(shape)? {
                            triangular = false;
                        }
                    } else if !(tab_dominates(u, s)? && tab_dominates(w, t)?) {
                        triangular = false;
                    }
                }
            }
        }

        let mut annihilation = true;
        let mut short_vanish = true;
        for shape in Partition::all(n) {
            let y = y_lambda(&shape.conjugate(), zint)?;
            for other in Partition::all(n) {
                if !(other.dominates(&shape)? && other != shape) {
                    continue;
                }
                let other_tabs = std_tableaux(&other)?;
                for s in &other_tabs {
                    for t in &other_tabs {
                        let x = murphy_x(s, t, zint)?;
                        if !x.multiply(&y)?.is_zero() || !y.multiply(&x)?.is_zero() {
                            annihilation = false;
                        }
                    }
                }
            }
            let wl = w_lambda(&shape);
            let x = x_lambda(&shape, zint)?;
            for w in Permutation::enumerate(n)? {
                if w == wl || w.length() > wl.length() {
                    continue;
                }
                if !x.multiply(&ge(&w, zint))?.multiply(&y)?.is_zero() {
                    short_vanish = false;
                }
            }
        }
        (Some(units), Some(triangular), Some(annihilation), Some(short_vanish))
    } else {
        (None, None, None, None)
    };

    Ok(SeminormalOutcome {
        idempotents_orthogonal,
        resolution_of_identity,
        block_central,
        jm_commute,
        gamma_factorial,
        seminormal_form,
        two_row_scalar,
        matrix_units,
        triangular,
        cell_annihilation,
        short_sandwich,
        congruence,
        sandwich,
    })
}

/// The rational seminormal suite at degree `n`: idempotent laws, matrix
/// units, normalization scalars, cellular expansions, and the two claimed
/// two-row identities (which the suite evaluates rather than assumes).
pub fn run_seminormal(n: usize) -> Result<Report> {
    guard(n >= 2, "seminormal degree (minimum 2)", 2, n as u128)?;
    guard(n <= 5, "seminormal degree", 5, n as u128)?;
    let mut rb = ReportBuilder::new("seminormal");
    rb.param("n", n);
    let outcome = seminormal_data(n)?;
    rb.check_bool("idempotents_orthogonal", outcome.idempotents_orthogonal);
    rb.check_bool("resolution_of_identity", outcome.resolution_of_identity);
    rb.check_bool("block_idempotents_central", outcome.block_central);
    rb.check_bool("jm_elements_commute", outcome.jm_commute);
    rb.check_bool("gamma_row_fill_factorial", outcome.gamma_factorial);
    rb.check_bool("sandwich_seminormal_form", outcome.seminormal_form);
    rb.check_bool("two_row_scalar", outcome.two_row_scalar);
    if let Some(units) = outcome.matrix_units {
        rb.check_bool("matrix_units", units);
    }
    if let Some(tri) = outcome.triangular {
        rb.check_bool("triangular_expansion", tri);
    }
    if let Some(ann) = outcome.cell_annihilation {
        rb.check_bool("dominating_cell_annihilation", ann);
    }
    if let Some(sv) = outcome.short_sandwich {
        rb.check_bool("short_sandwich_vanishing", sv);
    }
    for (k, holds) in &outcome.congruence {
        rb.check_bool(&format!("leading_term_congruence_k{k}"), *holds);
    }
    for (k, holds) in &outcome.sandwich {
        rb.check_bool(&format!("sandwich_identity_k{k}"), *holds);
    }
    Ok(rb.finish())
}

// ---------------------------------------------------------------------------
// basis-cor
// ---------------------------------------------------------------------------

struct BasisCell {
    kernel_rank: usize,
    family_size: usize,
    independent: bool,
    spans: bool,
    text: String,
}

fn basis_cell(m: usize, ring: Ring) -> Result<BasisCell> {
    let n = m + 1;
    let delta = ring.from_i64(m as i64);
    let index = DiagramIndex::new(n)?;
    let ker = kernel(m, n, ring, false)?;
    let mut span = SpanBasis::new(index.len(), ring)?;
    let mut family_size = 0usize;
    let mut independent = true;
    for k in 0..=m.div_ceil(2) {
        let e = e_element(m + 1 - k, k, n, ring, delta.clone())?;
        let shape = Partition::new(&[m + 1 - k, k])?;
        let tabs = std_tableaux(&shape)?;
        for s in &tabs {
            for t in &tabs {
                let left = AlgebraElement::from_diagram(
                    &BrauerDiagram::from_permutation(&s.d().inverse()),
                    ring,
                    delta.clone(),
                )?;
                let right = AlgebraElement::from_diagram(
                    &BrauerDiagram::from_permutation(&t.d()),
                    ring,
                    delta.clone(),
                )?;
                let v = left.multiply(&e)?.multiply(&right)?;
                family_size += 1;
                if !span.insert(v.to_vector(&index)?)? {
                    independent = false;
                }
            }
        }
    }
    Ok(BasisCell {
        kernel_rank: ker.rank(),
        family_size,
        independent,
        spans: span.space_eq(&ker)?,
        text: span.canonical_text(),
    })
}

/// The explicit cellular basis of the annihilator at n = m + 1: tableau
/// conjugates of the per-shape quasi-idempotent, over the rationals and over
/// the field of three elements.
pub fn run_basis_cor(m: usize) -> Result<Report> {
    guard(m >= 1, "basis parameter m (minimum 1)", 1, m as u128)?;
    guard(m <= 3, "basis parameter m", 3, m as u128)?;
    let mut rb = ReportBuilder::new("basis-cor");
    rb.param("m", m);
    for field in [FieldChoice::Rational, FieldChoice::Char(3)] {
        let label = field.label();
        progress(&format!("basis-cor: testing the tableau family at m={m} over {label}"));
        let cell = basis_cell(m, field.ring()?)?;
        rb.check_usize(
            &format!("family_count_{label}"),
            cell.kernel_rank,
            cell.family_size,
        );
        rb.check_bool(&format!("independent_{label}"), cell.independent);
        rb.check_bool(&format!("spans_kernel_{label}"), cell.spans);
        rb.absorb(&cell.text);
    }
    Ok(rb.finish())
}

// ---------------------------------------------------------------------------
// campaign
// ---------------------------------------------------------------------------

/// Checks that the signed diagram sum of each profile equals its alternating
/// pairing element, jointly certifying the sign convention and the profile
/// enumeration, for all profiles with a + b <= n <= n_max.
pub fn sign_certification_ok(n_max: usize) -> Result<bool> {
    let ring = Ring::IntPolynomial;
    let x = Scalar::poly_x();
    for n in 1..=n_max {
        for a in 0..=n {
            for b in 0..=n - a {
                if a + b == 0 {
                    continue;
                }
                let e = e_element(a, b, n, ring, x.clone())?;
                let spec = standard_pairing(a, b, n)?;
                let bb = b_element(&spec, n, ring, x.clone())?;
                if !e.sub(&bb)?.is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Negative controls: the identity stays outside the three-strand
/// annihilator ideal, and the diagram sign admits a non-multiplicativity
/// witness. Returns (identity outside, witness found).
pub fn negative_controls() -> Result<(bool, bool)> {
    // Identity outside the annihilator ideal on three strands.
    let ring = Ring::Rational;
    let delta = ring.from_i64(2);
    let gen = e_i_element(1, 2, 3, ring, delta.clone())?;
    let ideal = BrauerIdeal::generate(3, ring, &delta, &[gen])?;
    let one = AlgebraElement::identity(3, ring, delta)?;
    let identity_outside = !ideal.contains(&one)?;

    // The diagram sign is not multiplicative: search three strands for a
    // witness pair.
    let diagrams = BrauerDiagram::enumerate(3)?;
    let mut witness = false;
    'outer: for d1 in &diagrams {
        for d2 in &diagrams {
            let (prod, _) = d1.concat(d2)?;
            if prod.sign() != d1.sign() * d2.sign() {
                witness = true;
                break 'outer;
            }
        }
    }
    Ok((identity_outside, witness))
}

const KERNEL_GRID: [(usize, usize); 5] = [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)];

fn field_grid() -> [FieldChoice; 4] {
    [
        FieldChoice::Rational,
        FieldChoice::Char(3),
        FieldChoice::Char(5),
        FieldChoice::Char(7),
    ]
}

/// The full verification campaign: every desk-scale claim in one report.
pub fn run_campaign() -> Result<Report> {
    let mut rb = ReportBuilder::new("campaign");

    progress("campaign: structural checks");
    for k in 1..=5usize {
        let diagrams = BrauerDiagram::enumerate(k)?;
        rb.check_usize(
            &format!("diagram_count_n{k}"),
            double_factorial_odd(k),
            diagrams.len(),
        );
        let roundtrips = diagrams
            .iter()
            .filter(|d| BrauerDiagram::from_normal_form(&d.normal_form()).as_ref() == Ok(d))
            .count();
        rb.check_usize(
            &format!("normal_form_roundtrip_n{k}"),
            diagrams.len(),
            roundtrips,
        );
    }

    progress("campaign: presentation");
    for n in 2..=5usize {
        let ok = relation_families(n)?
            .iter()
            .all(|(_, total, holds)| total == holds);
        rb.check_bool(&format!("relations_n{n}"), ok);
    }

    progress("campaign: sign certification");
    rb.check_bool("sign_certification", sign_certification_ok(4)?);

    progress("campaign: kernel and annihilator grid");
    for (m, n) in KERNEL_GRID {
        for field in field_grid() {
            let label = field.label();
            let cell = main_cell(m, n, field.ring()?)?;
            rb.check_usize(
                &format!("kernel_dim_m{m}_n{n}_{label}"),
                cell.oracle,
                cell.kernel_rank,
            );
            rb.check_bool(
                &format!("principal_ideal_equals_kernel_m{m}_n{n}_{label}"),
                cell.principal_equal,
            );
            rb.check_bool(
                &format!("multi_generator_equals_kernel_m{m}_n{n}_{label}"),
                cell.multi_equal,
            );
            rb.absorb(&cell.kernel_text);
            rb.absorb(&cell.ideal_text);
        }
    }

    progress("campaign: symmetrizer ideal census");
    for n in 2..=6usize {
        for a in 0..=n / 2 {
            for field in field_grid() {
                let label = field.label();
                let (expected, ideal) = sym_cell(n, a, field.ring()?)?;
                rb.check_usize(&format!("sym_ideal_dim_n{n}_a{a}_{label}"), expected, ideal.dim());
                rb.absorb(&ideal.span().canonical_text());
            }
        }
    }

    progress("campaign: dimension identity");
    let mut catalan_ok = true;
    for m in 1..=50usize {
        let check = catalan_identity(m)?;
        if !check.holds() {
            catalan_ok = false;
        }
    }
    rb.check_bool("catalan_identity_m1_to_50", catalan_ok);

    for n in 2..=5usize {
        progress(&format!("campaign: seminormal suite at n={n}"));
        let o = seminormal_data(n)?;
        let core = o.idempotents_orthogonal
            && o.resolution_of_identity
            && o.block_central
            && o.jm_commute
            && o.gamma_factorial
            && o.seminormal_form
            && o.two_row_scalar
            && o.matrix_units.unwrap_or(true)
            && o.triangular.unwrap_or(true)
            && o.cell_annihilation.unwrap_or(true)
            && o.short_sandwich.unwrap_or(true);
        rb.check_bool(&format!("seminormal_core_n{n}"), core);
        for (k, holds) in &o.congruence {
            rb.check_bool(&format!("leading_term_congruence_n{n}_k{k}"), *holds);
        }
        for (k, holds) in &o.sandwich {
            rb.check_bool(&format!("sandwich_identity_n{n}_k{k}"), *holds);
        }
    }

    progress("campaign: kernel basis family");
    for m in 1..=3usize {
        for field in [FieldChoice::Rational, FieldChoice::Char(3)] {
            let label = field.label();
            let cell = basis_cell(m, field.ring()?)?;
            let ok = cell.family_size == cell.kernel_rank && cell.independent && cell.spans;
            rb.check_bool(&format!("kernel_basis_m{m}_{label}"), ok);
            rb.absorb(&cell.text);
        }
    }

    progress("campaign: negative controls");
    let (identity_outside, witness) = negative_controls()?;
    rb.check_bool("identity_outside_annihilator_b3", identity_outside);
    rb.check_bool("sign_not_multiplicative_witness", witness);

    Ok(rb.finish())
}

/// Maps engine errors onto the exit-code contract: parameter refusals are
/// usage errors (2), resource guards are refusals (3).
pub fn exit_code_for_error(e: &Error) -> i32 {
    match e {
        Error::GuardExceeded { .. } => 3,
        _ => 2,
    }
}
