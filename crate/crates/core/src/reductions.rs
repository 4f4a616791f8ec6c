//! Diagonal minimal reductions and reduction numbers.
//!
//! `J ⊆ I` is a reduction with `r_J(I) ≤ r` iff `J·I^r = I^{r+1}`. Since every
//! summand of a `J`-generator is a generator of `I`, `J·I^r ⊆ I^{r+1}`, and
//! equality amounts to the products `g·u` (`g ∈ J`, `u ∈ gens(I^r)`) spanning
//! all `|gens(I^{r+1})|` monomials of that degree.

use std::sync::Arc;

use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::{self, initial_ideal_numerator, Variant};
use crate::ideals::{
    ferrers_ideal, ideal_power_with_budget, minors_s, minors_t, specialized_ferrers_ideal,
    tableau_ring, DegreeSlice, MonomialIdeal, DEFAULT_POWER_BUDGET,
};
use crate::polyring::{
    buchberger, format_polynomial, initial_ideal, Monomial, Polynomial, Rational, TermOrder,
    Variable, VariableSet,
};
use crate::shapes::{Cell, Direction, Partition, SkewShape};

/// A base monomial ideal `I` together with homogeneous generators of a
/// candidate reduction `J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionCandidate {
    pub ideal: MonomialIdeal,
    pub generators: Vec<Polynomial>,
    /// The fiber dimension, i.e. the size of a minimal reduction.
    pub expected_generators: usize,
    pub notes: Vec<String>,
}

impl ReductionCandidate {
    pub fn new(ideal: MonomialIdeal, generators: Vec<Polynomial>, expected: usize) -> Result<Self> {
        for g in &generators {
            if g.is_zero() || !g.monomials().all(|m| ideal.gens().contains(m)) {
                return Err(Error::PreconditionViolated(
                    "every summand of a candidate generator must be a generator of I".into(),
                ));
            }
        }
        Ok(ReductionCandidate {
            ideal,
            generators,
            expected_generators: expected,
            notes: Vec::new(),
        })
    }

    pub fn is_minimal_size(&self) -> bool {
        self.generators.len() == self.expected_generators
    }

    pub fn display_generators(&self) -> Vec<String> {
        self.generators
            .iter()
            .map(|g| format_polynomial(g, self.ideal.vars()))
            .collect()
    }
}

fn sum_of(monomials: impl IntoIterator<Item = Monomial>) -> Polynomial {
    let terms = monomials
        .into_iter()
        .map(|m| (Rational::one(), m))
        .collect();
    Polynomial::from_terms(terms, TermOrder::LexRowwise)
}

fn diagonal_cells(shape: &SkewShape) -> Vec<(String, Vec<Cell>)> {
    let upper = (0..shape.m()).map(|k| (format!("upper {k}"), shape.diagonal(k, Direction::Upper)));
    let lower = (1..shape.n()).map(|k| (format!("lower {k}"), shape.diagonal(k, Direction::Lower)));
    upper.chain(lower).collect()
}

fn diagonal_candidate(
    ideal: MonomialIdeal,
    diagonals: Vec<(String, Vec<Cell>)>,
    cell_monomial: impl Fn(Cell) -> Monomial,
    expected: usize,
) -> ReductionCandidate {
    let mut notes = Vec::new();
    let mut gens = Vec::new();
    for (name, cells) in diagonals {
        if cells.is_empty() {
            notes.push(format!("{name} diagonal is empty"));
        } else {
            gens.push(sum_of(cells.into_iter().map(&cell_monomial)));
        }
    }
    let mut c =
        ReductionCandidate::new(ideal, gens, expected).expect("diagonal summands are generators");
    c.notes = notes;
    c
}

/// The `m + n − 1` diagonal sums `Σ x_i y_{k+i}` and `Σ x_{k+i} y_i` of the
/// Ferrers tableau of `λ`.
pub fn diagonal_reduction_ferrers(lambda: &Partition) -> ReductionCandidate {
    let shape = SkewShape::ferrers(lambda.parts().to_vec()).expect("a partition is a valid shape");
    let ideal = ferrers_ideal(&shape);
    let vars = ideal.vars().clone();
    let mono = |(i, j): Cell| {
        Monomial::from_pairs([
            (vars.id(Variable::X(i)).expect("row"), 1),
            (vars.id(Variable::Y(j)).expect("column"), 1),
        ])
    };
    let expected = hilbert::ferrers_fiber_dimension(&shape);
    diagonal_candidate(ideal, diagonal_cells(&shape), mono, expected)
}

fn specialized_monomial(vars: &VariableSet, (i, j): Cell) -> Monomial {
    Monomial::from_pairs([
        (vars.id(Variable::X(i)).expect("variable"), 1),
        (vars.id(Variable::X(j)).expect("variable"), 1),
    ])
}

fn upper_diagonals(shape: &SkewShape) -> Vec<(String, Vec<Cell>)> {
    (0..shape.m())
        .map(|k| (format!("upper {k}"), shape.diagonal(k, Direction::Upper)))
        .collect()
}

/// The `m` diagonal sums `Σ x_i x_{k+i}` of a shape with `μ = (0, 1, ..., n−1)`
/// and `λ_n ≥ n`.
pub fn diagonal_reduction_specialized(shape: &SkewShape) -> Result<ReductionCandidate> {
    if !hilbert::is_strongly_stable_shape(shape) {
        return Err(Error::PreconditionViolated(
            "needs mu = (0, 1, ..., n-1) and lambda_n >= n".into(),
        ));
    }
    let ideal = specialized_ferrers_ideal(shape)?;
    let vars = ideal.vars().clone();
    let expected = hilbert::fiber_dimension(shape)?;
    Ok(diagonal_candidate(
        ideal,
        upper_diagonals(shape),
        |c| specialized_monomial(&vars, c),
        expected,
    ))
}

/// The diagonal sums of any shape (upper and lower for Ferrers, upper only
/// for specialized) followed by `extra`, with no claim that they form a
/// reduction.
pub fn diagonals_with_extra(
    shape: &SkewShape,
    variant: Variant,
    extra: Vec<Polynomial>,
) -> Result<ReductionCandidate> {
    let mut c = match variant {
        Variant::Ferrers => {
            let ideal = ferrers_ideal(shape);
            let vars = ideal.vars().clone();
            let mono = |(i, j): Cell| {
                Monomial::from_pairs([
                    (vars.id(Variable::X(i)).expect("row"), 1),
                    (vars.id(Variable::Y(j)).expect("column"), 1),
                ])
            };
            let expected = hilbert::ferrers_fiber_dimension(shape);
            diagonal_candidate(ideal, diagonal_cells(shape), mono, expected)
        }
        Variant::Specialized => {
            let ideal = specialized_ferrers_ideal(shape)?;
            let vars = ideal.vars().clone();
            let expected = hilbert::fiber_dimension(shape)?;
            diagonal_candidate(
                ideal,
                upper_diagonals(shape),
                |c| specialized_monomial(&vars, c),
                expected,
            )
        }
    };
    let checked = ReductionCandidate::new(c.ideal.clone(), extra, c.expected_generators)?;
    c.generators.extend(checked.generators);
    Ok(c)
}

/// `λ = (4,4,4)`, `μ = (1,2,3)`: the three nonempty diagonals, plus
/// `x1x2 + x1x3 + x1x4 + x2x4 + x3x4` when `with_extra` is set.
pub fn k4_candidate(with_extra: bool) -> ReductionCandidate {
    let shape = crate::shapes::validate_shape(vec![4, 4, 4], vec![1, 2, 3]).expect("valid shape");
    let vars = VariableSet::x(4);
    let extra = [(1, 2), (1, 3), (1, 4), (2, 4), (3, 4)]
        .into_iter()
        .map(|cell| specialized_monomial(&vars, cell));
    let extra = if with_extra {
        vec![sum_of(extra)]
    } else {
        Vec::new()
    };
    diagonals_with_extra(&shape, Variant::Specialized, extra).expect("summands are generators")
}

/// One degree slice of a reduction test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SliceRecord {
    pub r: usize,
    pub degree: u32,
    pub products: usize,
    pub rank: usize,
    /// `|gens(I^{r+1})|`.
    pub target: usize,
    pub equal: bool,
}

/// Does `J·I^r = I^{r+1}` hold?
pub fn is_reduction_at(c: &ReductionCandidate, r: usize) -> Result<bool> {
    Ok(slice_record(c, r, DEFAULT_POWER_BUDGET)?.equal)
}

pub fn slice_record(c: &ReductionCandidate, r: usize, budget: usize) -> Result<SliceRecord> {
    let base = ideal_power_with_budget(&c.ideal, r, budget)?;
    let next = ideal_power_with_budget(&c.ideal, r + 1, budget)?;
    let products = c.generators.len().saturating_mul(base.num_gens());
    if products > budget {
        return Err(Error::BudgetExceeded(format!(
            "slice at r = {r} needs {products} products (budget {budget})"
        )));
    }
    let one = Rational::one();
    let polys: Vec<Polynomial> = c
        .generators
        .iter()
        .flat_map(|g| base.gens().iter().map(|u| g.mul_term(&one, u)))
        .collect();
    let degree = c.ideal.generator_degree().unwrap_or(0) * (r as u32 + 1);
    let rank = DegreeSlice::new(&polys, degree)?.rank();
    Ok(SliceRecord {
        r,
        degree,
        products,
        rank,
        target: next.num_gens(),
        equal: rank == next.num_gens(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionOutcome {
    Reduction(usize),
    NotAReduction { r_max: usize },
}

impl ReductionOutcome {
    pub fn value(self) -> Option<usize> {
        match self {
            ReductionOutcome::Reduction(r) => Some(r),
            ReductionOutcome::NotAReduction { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionReport {
    pub r_found: ReductionOutcome,
    pub r_predicted: Option<usize>,
    pub generators: Vec<String>,
    pub expected_generators: usize,
    pub minimal: bool,
    pub slices: Vec<SliceRecord>,
    /// The slice at `r_found + 1` also closed up.
    pub persistence_checked: bool,
    pub notes: Vec<String>,
}

/// Smallest `r ≤ r_max` with `J·I^r = I^{r+1}`, confirmed at `r + 1`.
pub fn reduction_number(c: &ReductionCandidate, r_max: usize) -> Result<ReductionReport> {
    reduction_number_with_budget(c, r_max, DEFAULT_POWER_BUDGET)
}

pub fn reduction_number_with_budget(
    c: &ReductionCandidate,
    r_max: usize,
    budget: usize,
) -> Result<ReductionReport> {
    let mut slices = Vec::new();
    let mut found = None;
    for r in 0..=r_max {
        let rec = slice_record(c, r, budget)?;
        let equal = rec.equal;
        slices.push(rec);
        if equal {
            found = Some(r);
            break;
        }
    }
    let persistence_checked = match found {
        Some(r) => {
            let rec = slice_record(c, r + 1, budget)?;
            let ok = rec.equal;
            slices.push(rec);
            ok
        }
        None => false,
    };
    let notes = c.notes.clone();
    Ok(ReductionReport {
        r_found: found.map_or(
            ReductionOutcome::NotAReduction { r_max },
            ReductionOutcome::Reduction,
        ),
        r_predicted: None,
        generators: c.display_generators(),
        expected_generators: c.expected_generators,
        minimal: c.is_minimal_size(),
        slices,
        persistence_checked,
        notes,
    })
}

/// `min{n−1, λ_i + i − 3 : 2 ≤ i ≤ n}` for Ferrers shapes and
/// `min{n−1, ⌊(λ_i + i)/2⌋ − 1 : 2 ≤ i ≤ n}` for specialized shapes with
/// `μ = (0, ..., n−1)`, `λ_n ≥ n`. Both are 0 when `n = 1`.
pub fn predicted_reduction_number(shape: &SkewShape, variant: Variant) -> Result<usize> {
    let n = shape.n();
    let lam = shape.lambda().parts();
    let minimands: Vec<usize> = match variant {
        Variant::Ferrers => {
            if shape.mu().iter().any(|&m| m != 0) {
                return Err(Error::PreconditionViolated("needs mu = 0".into()));
            }
            (2..=n).map(|i| lam[i - 1] + i - 3).collect()
        }
        Variant::Specialized => {
            if !hilbert::is_strongly_stable_shape(shape) {
                return Err(Error::PreconditionViolated(
                    "needs mu = (0, 1, ..., n-1) and lambda_n >= n".into(),
                ));
            }
            (2..=n).map(|i| (lam[i - 1] + i) / 2 - 1).collect()
        }
    };
    if minimands.is_empty() {
        return Ok(0);
    }
    Ok(minimands.into_iter().fold(n - 1, usize::min))
}

/// The diagonal candidate of `shape` for `variant`.
pub fn diagonal_candidate_for(shape: &SkewShape, variant: Variant) -> Result<ReductionCandidate> {
    match variant {
        Variant::Ferrers => {
            if shape.mu().iter().any(|&m| m != 0) {
                return Err(Error::PreconditionViolated("needs mu = 0".into()));
            }
            Ok(diagonal_reduction_ferrers(shape.lambda()))
        }
        Variant::Specialized => diagonal_reduction_specialized(shape),
    }
}

pub fn default_r_max(shape: &SkewShape) -> usize {
    shape.n() + 2
}

/// Computed reduction number of the diagonal candidate next to the printed
/// formula, the regularity formula and the degree of the numerator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegCheck {
    pub report: ReductionReport,
    pub predicted: usize,
    pub regularity_formula: usize,
    pub numerator_degree: usize,
    pub agrees: bool,
}

pub fn reg_equals_r(shape: &SkewShape, variant: Variant, r_max: usize) -> Result<RegCheck> {
    reg_equals_r_with_budget(shape, variant, r_max, DEFAULT_POWER_BUDGET)
}

pub fn reg_equals_r_with_budget(
    shape: &SkewShape,
    variant: Variant,
    r_max: usize,
    budget: usize,
) -> Result<RegCheck> {
    let candidate = diagonal_candidate_for(shape, variant)?;
    let predicted = predicted_reduction_number(shape, variant)?;
    let mut report = reduction_number_with_budget(&candidate, r_max, budget)?;
    report.r_predicted = Some(predicted);
    if shape.n() == 1 {
        report
            .notes
            .push("single row: J = I and the reduction number is 0 by definition".into());
    }
    let regularity_formula = hilbert::regularity(shape, variant)?;
    let numerator_degree = initial_ideal_numerator(shape, variant)?.regularity();
    let agrees = report.r_found == ReductionOutcome::Reduction(predicted)
        && report.persistence_checked
        && regularity_formula == predicted
        && numerator_degree == predicted;
    Ok(RegCheck {
        report,
        predicted,
        regularity_formula,
        numerator_degree,
        agrees,
    })
}

pub fn reg_equals_r_check(shape: &SkewShape, variant: Variant) -> Result<bool> {
    Ok(reg_equals_r(shape, variant, default_r_max(shape))?.agrees)
}

/// Gröbner basis of `I_2 + L` under [`TermOrder::RevLexRowwise`], where `L`
/// holds the diagonal sums in the tableau variables, and checks that
/// `T_{ij}^j` lies in its initial ideal for every cell.
pub fn power_membership_check(shape: &SkewShape, variant: Variant) -> Result<bool> {
    let order = TermOrder::RevLexRowwise;
    let ring: Arc<VariableSet> = tableau_ring(shape);
    let (minors, diagonals) = match variant {
        Variant::Ferrers => {
            if shape.mu().iter().any(|&m| m != 0) {
                return Err(Error::PreconditionViolated("needs mu = 0".into()));
            }
            (minors_t(shape).polys(), diagonal_cells(shape))
        }
        Variant::Specialized => {
            if !hilbert::is_strongly_stable_shape(shape) {
                return Err(Error::PreconditionViolated(
                    "needs mu = (0, 1, ..., n-1) and lambda_n >= n".into(),
                ));
            }
            (minors_s(shape)?.polys(), upper_diagonals(shape))
        }
    };
    let mut gens: Vec<Polynomial> = minors.iter().map(|p| p.with_order(order)).collect();
    for (_, cells) in diagonals {
        if !cells.is_empty() {
            let terms = cells
                .into_iter()
                .map(|(i, j)| {
                    (
                        Rational::one(),
                        Monomial::var(ring.id(Variable::T(i, j)).expect("tableau cell")),
                    )
                })
                .collect();
            gens.push(Polynomial::from_terms(terms, order));
        }
    }
    let gb = buchberger(&gens, order);
    let init = MonomialIdeal::new(ring.clone(), initial_ideal(&gb, order));
    Ok(shape.cells().iter().all(|(i, j)| {
        let v = ring.id(Variable::T(i, j)).expect("tableau cell");
        init.contains(&Monomial::var_pow(v, j as u32))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::validate_shape;

    fn shape(l: &[usize], m: &[usize]) -> SkewShape {
        validate_shape(l.to_vec(), m.to_vec()).unwrap()
    }

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn ferrers_diagonals() {
        let c = diagonal_reduction_ferrers(&part(&[2, 2]));
        assert_eq!(
            c.display_generators(),
            vec!["x[1]*y[1] + x[2]*y[2]", "x[1]*y[2]", "x[2]*y[1]"]
        );
        assert!(c.is_minimal_size());
        let c = diagonal_reduction_ferrers(&part(&[2, 1]));
        assert_eq!(c.generators.len(), 3);
        assert_eq!(c.ideal.num_gens(), 3);
        let c = diagonal_reduction_ferrers(&part(&[5, 5, 5, 2, 1]));
        assert_eq!(c.generators.len(), 9);
        assert!(c.notes.is_empty());
    }

    #[test]
    fn specialized_diagonals() {
        let c = diagonal_reduction_specialized(&shape(&[5, 5, 4], &[0, 1, 2])).unwrap();
        assert_eq!(c.generators.len(), 5);
        assert_eq!(c.display_generators()[0], "x[1]^2 + x[2]^2 + x[3]^2");
        let c = diagonal_reduction_specialized(&shape(&[3, 3, 3], &[0, 1, 2])).unwrap();
        assert_eq!(c.generators.len(), 3);
        assert!(matches!(
            diagonal_reduction_specialized(&shape(&[4, 4, 4], &[1, 2, 3])),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn example_with_extra_generator() {
        let three = k4_candidate(false);
        assert_eq!(three.generators.len(), 3);
        assert_eq!(three.notes, vec!["upper 0 diagonal is empty".to_string()]);
        for r in 0..=5 {
            assert!(!is_reduction_at(&three, r).unwrap());
        }
        let four = k4_candidate(true);
        assert_eq!(four.generators.len(), 4);
        assert!(four.is_minimal_size());
        let rep = reduction_number(&four, 5).unwrap();
        assert!(rep.r_found.value().is_some());
        assert!(rep.persistence_checked);
    }

    #[test]
    fn reduction_tests() {
        let c = diagonal_reduction_ferrers(&part(&[2, 2]));
        assert!(!is_reduction_at(&c, 0).unwrap());
        assert!(is_reduction_at(&c, 1).unwrap());
        let i = c.ideal.clone();
        let itself: Vec<Polynomial> = i
            .gens()
            .iter()
            .map(|g| Polynomial::monomial(g.clone(), TermOrder::LexRowwise))
            .collect();
        let n = i.num_gens();
        assert!(is_reduction_at(&ReductionCandidate::new(i, itself, n).unwrap(), 0).unwrap());
        for m in 2..=3 {
            for n in 2..=3 {
                let c = diagonal_reduction_ferrers(&part(&vec![m; n]));
                let rep = reduction_number(&c, n + 2).unwrap();
                assert_eq!(rep.r_found, ReductionOutcome::Reduction(m.min(n) - 1));
            }
        }
        let c = diagonal_reduction_ferrers(&part(&[6, 4, 4, 2, 1]));
        assert_eq!(
            reduction_number(&c, 7).unwrap().r_found,
            ReductionOutcome::Reduction(3)
        );
        let c = diagonal_reduction_ferrers(&part(&[4]));
        assert_eq!(
            reduction_number(&c, 3).unwrap().r_found,
            ReductionOutcome::Reduction(0)
        );
        let skew = shape(&[3, 3], &[1, 1]);
        let c = diagonals_with_extra(&skew, Variant::Ferrers, Vec::new()).unwrap();
        assert_eq!(c.expected_generators, 3);
        assert_eq!(c.generators.len(), 3);
        let stray = Polynomial::monomial(Monomial::var(0), TermOrder::LexRowwise);
        assert!(diagonals_with_extra(&skew, Variant::Ferrers, vec![stray]).is_err());
    }

    #[test]
    fn predictions() {
        let f = |p: &[usize]| SkewShape::ferrers(p.to_vec()).unwrap();
        assert_eq!(
            predicted_reduction_number(&f(&[6, 4, 4, 2, 1]), Variant::Ferrers).unwrap(),
            3
        );
        assert_eq!(
            predicted_reduction_number(&f(&[3]), Variant::Ferrers).unwrap(),
            0
        );
        assert_eq!(
            predicted_reduction_number(&f(&[3, 3]), Variant::Ferrers).unwrap(),
            1
        );
        let s = shape(&[5, 5, 4], &[0, 1, 2]);
        assert_eq!(
            predicted_reduction_number(&s, Variant::Specialized).unwrap(),
            2
        );
        assert!(
            predicted_reduction_number(&shape(&[4, 4, 4], &[1, 2, 3]), Variant::Specialized)
                .is_err()
        );
    }

    #[test]
    fn reg_and_r() {
        assert!(
            reg_equals_r_check(&SkewShape::ferrers(vec![2, 2]).unwrap(), Variant::Ferrers).unwrap()
        );
        assert!(
            reg_equals_r_check(&SkewShape::ferrers(vec![3]).unwrap(), Variant::Ferrers).unwrap()
        );
        let s = shape(&[3, 3, 3], &[0, 1, 2]);
        let rc = reg_equals_r(&s, Variant::Specialized, 5).unwrap();
        assert!(rc.agrees);
        assert_eq!(rc.predicted, 1);
    }

    #[test]
    fn power_membership() {
        assert!(
            power_membership_check(&SkewShape::ferrers(vec![2, 2]).unwrap(), Variant::Ferrers)
                .unwrap()
        );
        assert!(
            power_membership_check(&SkewShape::ferrers(vec![3]).unwrap(), Variant::Ferrers)
                .unwrap()
        );
        assert!(
            power_membership_check(&shape(&[3, 3, 3], &[0, 1, 2]), Variant::Specialized).unwrap()
        );
    }
}
