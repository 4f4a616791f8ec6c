//! Exact multivariate polynomial arithmetic over the rationals, with the
//! row-wise lexicographic and reverse-lexicographic orders, the division
//! algorithm, S-polynomials and Buchberger's algorithm.

mod groebner;
mod monomial;
mod order;
mod poly;
mod text;

pub use text::{format_polynomial, parse_polynomial};

use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};

pub use groebner::{
    buchberger, buchberger_with_budget, divide, initial_ideal, is_groebner, reduces_to_zero,
    s_polynomial, Division, GroebnerCheck,
};
pub use monomial::{canonical_cmp, minimalize, Monomial, VarId};
pub use order::TermOrder;
pub use poly::{Polynomial, Rational, Term};

use crate::shapes::Cell;

/// A named ring variable: a tableau entry `T[i,j]`, or `x[i]` / `y[j]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variable {
    T(usize, usize),
    X(usize),
    Y(usize),
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variable::T(i, j) => write!(f, "T[{i},{j}]"),
            Variable::X(i) => write!(f, "x[{i}]"),
            Variable::Y(j) => write!(f, "y[{j}]"),
        }
    }
}

impl Serialize for Variable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Variables with dense ids `0..N`. The id order is the variable ranking:
/// id 0 is the largest variable under both term orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableSet {
    vars: Vec<Variable>,
    index: HashMap<Variable, VarId>,
}

impl VariableSet {
    pub fn new(vars: Vec<Variable>) -> Self {
        let index = vars
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i as VarId))
            .collect();
        VariableSet { vars, index }
    }

    /// `T[i,j]` for each cell, ranked row by row.
    pub fn cells<I: IntoIterator<Item = Cell>>(cells: I) -> Self {
        let mut cells: Vec<Cell> = cells.into_iter().collect();
        cells.sort_unstable();
        cells.dedup();
        VariableSet::new(cells.into_iter().map(|(i, j)| Variable::T(i, j)).collect())
    }

    /// `x_1 > ... > x_n > y_1 > ... > y_m`.
    pub fn xy(n: usize, m: usize) -> Self {
        let vars = (1..=n)
            .map(Variable::X)
            .chain((1..=m).map(Variable::Y))
            .collect();
        VariableSet::new(vars)
    }

    /// `x_1 > ... > x_k`.
    pub fn x(k: usize) -> Self {
        VariableSet::new((1..=k).map(Variable::X).collect())
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn id(&self, v: Variable) -> Option<VarId> {
        self.index.get(&v).copied()
    }

    pub fn var(&self, id: VarId) -> Variable {
        self.vars[id as usize]
    }

    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }

    /// Id of the tableau variable for `cell`, reading `T_{ij} = T_{ji}`.
    pub fn cell_id(&self, (i, j): Cell) -> Option<VarId> {
        self.id(Variable::T(i.min(j), i.max(j)))
    }

    /// `cell` as a degree-one monomial, panicking if it is not a variable.
    pub fn cell_monomial(&self, cell: Cell) -> Monomial {
        Monomial::var(
            self.cell_id(cell)
                .unwrap_or_else(|| panic!("cell {cell:?} is not a ring variable")),
        )
    }

    pub fn display_monomial<'a>(&'a self, m: &'a Monomial) -> impl fmt::Display + 'a {
        MonomialDisplay { vars: self, m }
    }
}

struct MonomialDisplay<'a> {
    vars: &'a VariableSet,
    m: &'a Monomial,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return write!(f, "1");
        }
        for (k, &(id, e)) in self.m.pairs().iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "{}", self.vars.var(id))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
