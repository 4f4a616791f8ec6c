//! Ferrers and specialized Ferrers ideals, the 2-minor ideals of a tableau
//! and of its symmetrization, monomial ideal powers, and degree slices.

use std::collections::HashSet;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, SparseRow};
use crate::polyring::{
    buchberger, canonical_cmp, format_polynomial, initial_ideal, minimalize, Monomial, Polynomial,
    Rational, TermOrder, VarId, Variable, VariableSet,
};
use crate::shapes::{Cell, SkewShape};

/// Default cap on the number of generator products formed per power step.
pub const DEFAULT_POWER_BUDGET: usize = 1_000_000;

/// A monomial ideal given by its minimal generators, sorted by degree and
/// then with larger monomials first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    vars: Arc<VariableSet>,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(vars: Arc<VariableSet>, gens: Vec<Monomial>) -> Self {
        MonomialIdeal {
            vars,
            gens: minimalize(gens),
        }
    }

    pub fn zero(vars: Arc<VariableSet>) -> Self {
        MonomialIdeal {
            vars,
            gens: Vec::new(),
        }
    }

    pub fn vars(&self) -> &Arc<VariableSet> {
        &self.vars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Degree shared by all generators, if any.
    pub fn generator_degree(&self) -> Option<u32> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.mul(b)))
            .collect();
        MonomialIdeal::new(self.vars.clone(), gens)
    }

    /// `I : m` for a monomial `m`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        MonomialIdeal::new(
            self.vars.clone(),
            self.gens.iter().map(|g| g.colon(m)).collect(),
        )
    }

    /// `I + (x)` for the variable with id `v`.
    pub fn add_variable(&self, v: VarId) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.push(Monomial::var(v));
        MonomialIdeal::new(self.vars.clone(), gens)
    }

    /// The same generators read in a larger ring, matching variables by name.
    pub fn extend_to(&self, target: &Arc<VariableSet>) -> Result<MonomialIdeal> {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let pairs = g
                    .pairs()
                    .iter()
                    .map(|&(id, e)| {
                        let v = self.vars.var(id);
                        target.id(v).map(|t| (t, e)).ok_or_else(|| {
                            Error::PreconditionViolated(format!("{v} missing from target ring"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Monomial::from_pairs(pairs))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal::new(target.clone(), gens))
    }

    /// Generators as one-term polynomials.
    pub fn polynomials(&self, order: TermOrder) -> Vec<Polynomial> {
        self.gens
            .iter()
            .map(|g| Polynomial::monomial(g.clone(), order))
            .collect()
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson {
            vars: self.vars.vars().iter().map(|v| v.to_string()).collect(),
            gens: self.gens.iter().map(|g| g.pairs().to_vec()).collect(),
        }
    }

    /// Generators in readable form, e.g. `x[1]*y[2]`.
    pub fn display_gens(&self) -> Vec<String> {
        self.gens
            .iter()
            .map(|g| self.vars.display_monomial(g).to_string())
            .collect()
    }
}

/// `{"vars": [...], "gens": [[[id, exp], ...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealJson {
    pub vars: Vec<String>,
    pub gens: Vec<Vec<(VarId, u32)>>,
}

/// `I_{λ−μ} = (x_i y_j : (i,j) ∈ T_{λ−μ})` in `x_1..x_n, y_1..y_m`.
pub fn ferrers_ideal(shape: &SkewShape) -> MonomialIdeal {
    let vars = Arc::new(VariableSet::xy(shape.n(), shape.m()));
    let gens = shape
        .cells()
        .iter()
        .map(|(i, j)| {
            let x = vars.id(Variable::X(i)).expect("row variable");
            let y = vars.id(Variable::Y(j)).expect("column variable");
            Monomial::from_pairs([(x, 1), (y, 1)])
        })
        .collect();
    MonomialIdeal::new(vars, gens)
}

/// `Ī_{λ−μ} = (x_i x_j : (i,j) ∈ T_{λ−μ})` in `x_1..x_m`.
pub fn specialized_ferrers_ideal(shape: &SkewShape) -> Result<MonomialIdeal> {
    if !shape.is_symmetric_capable() {
        return Err(Error::NotSymmetricCapable);
    }
    let vars = Arc::new(VariableSet::x(shape.n().max(shape.m())));
    let gens = shape
        .cells()
        .iter()
        .map(|(i, j)| {
            let a = vars.id(Variable::X(i)).expect("variable");
            let b = vars.id(Variable::X(j)).expect("variable");
            Monomial::from_pairs([(a, 1), (b, 1)])
        })
        .collect();
    Ok(MonomialIdeal::new(vars, gens))
}

/// A 2-minor `T_{ac} T_{bd} − T_{ad} T_{bc}` with its rows and columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minor {
    pub rows: (usize, usize),
    pub cols: (usize, usize),
    pub poly: Polynomial,
}

/// 2-minors over the tableau variables `T_{ij}`, `(i,j) ∈ T_{λ−μ}`, written
/// monic under [`TermOrder::LexRowwise`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialIdealPresentation {
    vars: Arc<VariableSet>,
    minors: Vec<Minor>,
}

impl BinomialIdealPresentation {
    pub fn vars(&self) -> &Arc<VariableSet> {
        &self.vars
    }

    pub fn minors(&self) -> &[Minor] {
        &self.minors
    }

    pub fn len(&self) -> usize {
        self.minors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.minors.is_empty()
    }

    pub fn polys(&self) -> Vec<Polynomial> {
        self.minors.iter().map(|m| m.poly.clone()).collect()
    }

    /// Reduced Gröbner basis of the minors.
    pub fn groebner_basis(&self, order: TermOrder) -> Vec<Polynomial> {
        buchberger(&self.polys(), order)
    }

    /// Leading-term ideal, computed from the reduced Gröbner basis.
    pub fn initial_ideal(&self, order: TermOrder) -> MonomialIdeal {
        MonomialIdeal::new(
            self.vars.clone(),
            initial_ideal(&self.groebner_basis(order), order),
        )
    }

    pub fn to_json(&self) -> Vec<MinorJson> {
        self.minors
            .iter()
            .map(|m| MinorJson {
                rows: [m.rows.0, m.rows.1],
                cols: [m.cols.0, m.cols.1],
                poly: format_polynomial(&m.poly, &self.vars),
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinorJson {
    pub rows: [usize; 2],
    pub cols: [usize; 2],
    pub poly: String,
}

/// The ring `K[T_{ij} : (i,j) ∈ T_{λ−μ}]` with variables ranked row by row.
pub fn tableau_ring(shape: &SkewShape) -> Arc<VariableSet> {
    Arc::new(VariableSet::cells(shape.cells().iter()))
}

/// `I_2(T_{λ−μ})`.
pub fn minors_t(shape: &SkewShape) -> BinomialIdealPresentation {
    let vars = tableau_ring(shape);
    let cells: Vec<Cell> = shape.cells().to_vec();
    let var = |(i, j): Cell| Monomial::var(vars.id(Variable::T(i, j)).expect("tableau cell"));
    let minors = collect_minors(&cells, shape.n(), |c| shape.contains(c), var);
    BinomialIdealPresentation { vars, minors }
}

/// `I_2(S_{λ−μ})` with `T_{ji}` read as `T_{ij}`; zero and repeated minors
/// are dropped.
pub fn minors_s(shape: &SkewShape) -> Result<BinomialIdealPresentation> {
    let s = shape.symmetrize()?;
    let vars = tableau_ring(shape);
    let cells = s.to_vec();
    let rows = cells.iter().map(|c| c.0).max().unwrap_or(0);
    let minors = collect_minors(&cells, rows, |c| s.contains(c), |c| vars.cell_monomial(c));
    Ok(BinomialIdealPresentation { vars, minors })
}

fn collect_minors(
    cells: &[Cell],
    rows: usize,
    inside: impl Fn(Cell) -> bool,
    var: impl Fn(Cell) -> Monomial,
) -> Vec<Minor> {
    let order = TermOrder::LexRowwise;
    let mut row_cols: Vec<Vec<usize>> = vec![Vec::new(); rows + 1];
    for &(i, j) in cells {
        row_cols[i].push(j);
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (a, cols_a) in row_cols.iter().enumerate().skip(1) {
        for b in a + 1..=rows {
            let shared: Vec<usize> = cols_a.iter().copied().filter(|&j| inside((b, j))).collect();
            for (x, &c) in shared.iter().enumerate() {
                for &d in &shared[x + 1..] {
                    let main = var((a, c)).mul(&var((b, d)));
                    let anti = var((a, d)).mul(&var((b, c)));
                    let poly = Polynomial::binomial(main, anti, order).normalize_sign();
                    if poly.is_zero() || !seen.insert(poly.clone()) {
                        continue;
                    }
                    out.push(Minor {
                        rows: (a, b),
                        cols: (c, d),
                        poly,
                    });
                }
            }
        }
    }
    out
}

/// `I^k` with the default budget.
pub fn ideal_power(ideal: &MonomialIdeal, k: usize) -> Result<MonomialIdeal> {
    ideal_power_with_budget(ideal, k, DEFAULT_POWER_BUDGET)
}

/// `I^k` built as `I^{k-1} · I`; fails when a single step would form more
/// than `budget` products.
pub fn ideal_power_with_budget(
    ideal: &MonomialIdeal,
    k: usize,
    budget: usize,
) -> Result<MonomialIdeal> {
    if k == 0 {
        return Ok(MonomialIdeal::new(
            ideal.vars.clone(),
            vec![Monomial::one()],
        ));
    }
    let mut acc = ideal.clone();
    for step in 2..=k {
        let products = acc.num_gens().saturating_mul(ideal.num_gens());
        if products > budget {
            return Err(Error::BudgetExceeded(format!(
                "power {step} needs {products} products (budget {budget})"
            )));
        }
        acc = acc.product(ideal);
    }
    Ok(acc)
}

/// Polynomials of one degree written in coordinates over the sorted list of
/// monomials they involve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSlice {
    pub degree: u32,
    pub columns: Vec<Monomial>,
    pub rows: Vec<SparseRow<Rational>>,
}

impl DegreeSlice {
    pub fn new(polys: &[Polynomial], degree: u32) -> Result<Self> {
        for p in polys {
            if !p.is_zero() && p.homogeneous_degree() != Some(degree) {
                return Err(Error::InhomogeneousInput(degree));
            }
        }
        let mut columns: Vec<Monomial> =
            polys.iter().flat_map(|p| p.monomials().cloned()).collect();
        columns.sort_by(|a, b| canonical_cmp(a, b).reverse());
        columns.dedup();
        let index: std::collections::HashMap<&Monomial, usize> =
            columns.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let rows = polys
            .iter()
            .filter(|p| !p.is_zero())
            .map(|p| {
                let mut r: SparseRow<Rational> = p
                    .terms()
                    .iter()
                    .map(|(c, m)| (index[m], c.clone()))
                    .collect();
                r.sort_by_key(|e| e.0);
                r
            })
            .collect();
        Ok(DegreeSlice {
            degree,
            columns,
            rows,
        })
    }

    /// Rank by sparse elimination (modular pre-pass, exact confirmation).
    pub fn rank(&self) -> usize {
        linalg::sparse_rank(&linalg::integer_rows(&self.rows), self.columns.len())
    }

    /// Rank by dense Bareiss elimination.
    pub fn rank_bareiss(&self) -> usize {
        let ints = linalg::integer_rows(&self.rows);
        linalg::bareiss_rank(linalg::to_dense(&ints, self.columns.len()))
    }
}

/// Dimension of the span of homogeneous polynomials of degree `d`.
pub fn slice_span_dimension(polys: &[Polynomial], d: u32) -> Result<usize> {
    Ok(DegreeSlice::new(polys, d)?.rank_bareiss())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{is_groebner, parse_polynomial};
    use crate::shapes::validate_shape;

    fn shape(l: &[usize], m: &[usize]) -> SkewShape {
        validate_shape(l.to_vec(), m.to_vec()).unwrap()
    }

    fn texts(p: &BinomialIdealPresentation) -> Vec<String> {
        p.to_json().into_iter().map(|m| m.poly).collect()
    }

    #[test]
    fn ferrers_generators() {
        let f = ferrers_ideal(&SkewShape::ferrers(vec![6, 4, 4, 2, 1]).unwrap());
        assert_eq!(f.num_gens(), 17);
        assert_eq!(f.generator_degree(), Some(2));
        let one = ferrers_ideal(&shape(&[1], &[0]));
        assert_eq!(one.display_gens(), vec!["x[1]*y[1]"]);
        assert_eq!(ferrers_ideal(&shape(&[5, 5, 4], &[1, 3, 3])).num_gens(), 7);
    }

    #[test]
    fn specialized_generators() {
        let s = specialized_ferrers_ideal(&shape(&[4, 4, 4], &[1, 2, 3])).unwrap();
        assert_eq!(
            s.display_gens(),
            vec![
                "x[1]*x[2]",
                "x[1]*x[3]",
                "x[1]*x[4]",
                "x[2]*x[3]",
                "x[2]*x[4]",
                "x[3]*x[4]"
            ]
        );
        let v = specialized_ferrers_ideal(&shape(&[3, 3, 3], &[0, 1, 2])).unwrap();
        assert_eq!(v.num_gens(), 6);
        assert!(!v.is_squarefree());
        let t = specialized_ferrers_ideal(&shape(&[2, 2], &[1, 1])).unwrap();
        assert_eq!(t.display_gens(), vec!["x[1]*x[2]", "x[2]^2"]);
        assert_eq!(
            specialized_ferrers_ideal(&shape(&[3, 3], &[0, 0])),
            Err(Error::NotSymmetricCapable)
        );
    }

    #[test]
    fn tableau_minors() {
        let s = shape(&[5, 5, 4], &[1, 3, 3]);
        assert_eq!(texts(&minors_t(&s)), vec!["T[1,4]*T[2,5] - T[1,5]*T[2,4]"]);
        assert_eq!(
            texts(&minors_s(&s).unwrap()),
            vec![
                "T[1,4]*T[2,5] - T[1,5]*T[2,4]",
                "T[1,2]*T[3,4] - T[1,3]*T[2,4]"
            ]
        );
        assert!(minors_t(&shape(&[4], &[0])).is_empty());
        assert!(minors_s(&shape(&[4], &[0])).unwrap().is_empty());
        let m = minors_t(&shape(&[3, 3], &[0, 0]));
        let cols: Vec<_> = m.minors().iter().map(|m| m.cols).collect();
        assert_eq!(cols, vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(
            minors_s(&shape(&[3, 3], &[0, 0])),
            Err(Error::NotSymmetricCapable)
        );
    }

    #[test]
    fn no_new_minors_when_mu1_is_large() {
        let s = shape(&[8, 7, 6], &[4, 4, 4]);
        assert_eq!(minors_s(&s).unwrap().polys(), minors_t(&s).polys());
    }

    #[test]
    fn generic_symmetric_minors_form_a_basis() {
        let s = shape(&[3, 3, 3], &[0, 1, 2]);
        let p = minors_s(&s).unwrap();
        // 2-minors of a generic symmetric 3x3 matrix.
        assert_eq!(p.len(), 6);
        assert!(is_groebner(&p.polys(), TermOrder::LexRowwise).is_groebner);
        let diag = minors_s(&shape(&[2, 2], &[0, 1])).unwrap();
        assert_eq!(texts(&diag), vec!["T[1,1]*T[2,2] - T[1,2]^2"]);
    }

    #[test]
    fn powers() {
        let i = ferrers_ideal(&shape(&[1], &[0]));
        assert_eq!(
            ideal_power(&i, 3).unwrap().display_gens(),
            vec!["x[1]^3*y[1]^3"]
        );
        let sq = specialized_ferrers_ideal(&shape(&[2, 2], &[0, 1])).unwrap();
        assert_eq!(ideal_power(&sq, 2).unwrap().num_gens(), 5);
        let b = ferrers_ideal(&SkewShape::ferrers(vec![2, 2]).unwrap());
        assert_eq!(ideal_power(&b, 2).unwrap().num_gens(), 9);
        assert_eq!(ideal_power(&b, 1).unwrap(), b);
        assert!(matches!(
            ideal_power_with_budget(&b, 3, 20),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn slices() {
        let v = VariableSet::xy(2, 2);
        let o = TermOrder::LexRowwise;
        let p = |s: &str| parse_polynomial(s, &v, o).unwrap();
        assert_eq!(
            slice_span_dimension(&[p("x[1]*y[1]"), p("x[2]*y[1]")], 2).unwrap(),
            2
        );
        assert_eq!(
            slice_span_dimension(&[p("x[1]*y[1] - y[2]^2"), p("2*x[1]*y[1] - 2*y[2]^2")], 2)
                .unwrap(),
            1
        );
        assert_eq!(
            slice_span_dimension(&[p("x[1]*y[1] + y[2]")], 2),
            Err(Error::InhomogeneousInput(2))
        );
        // J·I for the 2x2 box spans all of I^2.
        let b = ferrers_ideal(&SkewShape::ferrers(vec![2, 2]).unwrap());
        let j = [p("x[1]*y[1] + x[2]*y[2]"), p("x[1]*y[2]"), p("x[2]*y[1]")];
        let prods: Vec<Polynomial> = j
            .iter()
            .flat_map(|g| {
                b.gens()
                    .iter()
                    .map(move |u| g.mul_term(&Rational::from_integer(1.into()), u))
            })
            .collect();
        let slice = DegreeSlice::new(&prods, 4).unwrap();
        assert_eq!(slice.rank_bareiss(), 9);
        assert_eq!(slice.rank(), 9);
    }
}
