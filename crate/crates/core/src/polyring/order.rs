use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::Monomial;

/// Monomial orders used by the determinantal computations.
///
/// Both orders rank variables by their id inside the ambient
/// [`VariableSet`](super::VariableSet): id 0 is the largest variable. For
/// tableau rings the ids follow the cells row by row, so
/// `T_{rc} > T_{r'c'}` iff `r < r'`, or `r = r'` and `c < c'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TermOrder {
    /// Pure lexicographic order; a diagonal order on 2-minors.
    LexRowwise,
    /// Degree reverse-lexicographic order; leading terms of 2-minors are
    /// their antidiagonal products.
    RevLexRowwise,
}

impl TermOrder {
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::LexRowwise => lex(a, b),
            TermOrder::RevLexRowwise => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| revlex_tiebreak(a, b)),
        }
    }
}

fn lex(a: &Monomial, b: &Monomial) -> Ordering {
    let (x, y) = (a.pairs(), b.pairs());
    for (p, q) in x.iter().zip(y) {
        if p.0 != q.0 {
            // The side holding the smaller id has a larger variable the other lacks.
            return q.0.cmp(&p.0);
        }
        if p.1 != q.1 {
            return p.1.cmp(&q.1);
        }
    }
    x.len().cmp(&y.len())
}

/// Among equal degrees, the monomial with the smaller exponent in the
/// smallest variable where they differ is larger.
fn revlex_tiebreak(a: &Monomial, b: &Monomial) -> Ordering {
    let (x, y) = (a.pairs(), b.pairs());
    let (mut i, mut j) = (x.len(), y.len());
    while i > 0 && j > 0 {
        let (p, q) = (x[i - 1], y[j - 1]);
        if p.0 != q.0 {
            // The side holding the larger id has a positive exponent in a
            // smaller variable where the other has zero.
            return p.0.cmp(&q.0).reverse();
        }
        if p.1 != q.1 {
            return q.1.cmp(&p.1);
        }
        i -= 1;
        j -= 1;
    }
    match (i, j) {
        (0, 0) => Ordering::Equal,
        (0, _) => Ordering::Greater,
        _ => Ordering::Less,
    }
}
