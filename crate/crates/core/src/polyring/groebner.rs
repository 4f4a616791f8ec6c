use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::{minimalize, Monomial, Polynomial, TermOrder};
use crate::error::{Error, Result};

/// Outcome of the division algorithm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Division {
    pub remainder: Polynomial,
    /// Number of reduction steps (subtractions of a basis multiple).
    pub steps: usize,
}

/// Result of Buchberger's criterion applied to a generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerCheck {
    pub is_groebner: bool,
    /// First S-pair `(i, j)` with nonzero remainder, scanning pairs in
    /// lexicographic index order.
    pub certificate: Option<(usize, usize, Polynomial)>,
    pub pairs_checked: usize,
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: TermOrder) -> Result<Polynomial> {
    let f = f.with_order(order);
    let g = g.with_order(order);
    let (cf, mf) = f.leading_term()?;
    let (cg, mg) = g.leading_term()?;
    let l = mf.lcm(mg);
    let uf = l.div(mf).expect("lcm is a multiple");
    let ug = l.div(mg).expect("lcm is a multiple");
    Ok(f.mul_term(&cf.recip(), &uf)
        .sub(&g.mul_term(&cg.recip(), &ug)))
}

/// Full reduction of `f` modulo `basis`. When several basis elements divide
/// a term, the one with the lowest index is used. Zero basis entries are
/// ignored.
pub fn divide(f: &Polynomial, basis: &[Polynomial], order: TermOrder) -> Division {
    let basis: Vec<Polynomial> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.with_order(order))
        .collect();
    let leads: Vec<(&crate::polyring::Rational, &Monomial)> = basis
        .iter()
        .map(|g| {
            let (c, m) = g.leading_term().expect("nonzero");
            (c, m)
        })
        .collect();
    let mut p = f.with_order(order);
    let mut rem = Vec::new();
    let mut steps = 0;
    while let Some((c, m)) = p.terms().first().cloned() {
        match leads.iter().position(|(_, lm)| lm.divides(&m)) {
            Some(k) => {
                let (lc, lm) = leads[k];
                let q = m.div(lm).expect("divisible");
                p = p.sub(&basis[k].mul_term(&(c / lc), &q));
                steps += 1;
            }
            None => {
                rem.push((c, m));
                p = p.tail();
            }
        }
    }
    Division {
        remainder: Polynomial::from_terms(rem, order),
        steps,
    }
}

/// Reduced Gröbner basis: monic, pairwise irreducible, sorted by leading
/// monomial in decreasing order.
pub fn buchberger(gens: &[Polynomial], order: TermOrder) -> Vec<Polynomial> {
    buchberger_with_budget(gens, order, usize::MAX).expect("unbounded run")
}

/// Buchberger's algorithm with the normal selection strategy and the
/// coprime criterion; fails once more than `max_pairs` S-pairs were reduced.
pub fn buchberger_with_budget(
    gens: &[Polynomial],
    order: TermOrder,
    max_pairs: usize,
) -> Result<Vec<Polynomial>> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        let g = g.with_order(order);
        if g.is_zero() {
            continue;
        }
        let g = g.monic();
        if !basis.contains(&g) {
            basis.push(g);
        }
    }
    let mut queue: BinaryHeap<Reverse<(u32, usize, usize)>> = BinaryHeap::new();
    for j in 0..basis.len() {
        for i in 0..j {
            push_pair(&mut queue, &basis, i, j);
        }
    }
    let mut processed = 0usize;
    while let Some(Reverse((_, i, j))) = queue.pop() {
        processed += 1;
        if processed > max_pairs {
            return Err(Error::BudgetExceeded(format!(
                "more than {max_pairs} S-pairs"
            )));
        }
        let s = s_polynomial(&basis[i], &basis[j], order)?;
        let r = divide(&s, &basis, order).remainder;
        if r.is_zero() {
            continue;
        }
        basis.push(r.monic());
        let k = basis.len() - 1;
        for i in 0..k {
            push_pair(&mut queue, &basis, i, k);
        }
    }
    Ok(reduce_basis(basis, order))
}

fn push_pair(
    queue: &mut BinaryHeap<Reverse<(u32, usize, usize)>>,
    basis: &[Polynomial],
    i: usize,
    j: usize,
) {
    let a = basis[i].leading_monomial().expect("nonzero");
    let b = basis[j].leading_monomial().expect("nonzero");
    if a.is_coprime(b) {
        return;
    }
    queue.push(Reverse((a.lcm(b).degree(), i, j)));
}

fn reduce_basis(basis: Vec<Polynomial>, order: TermOrder) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = basis.into_iter().filter(|g| !g.is_zero()).collect();
    basis.sort_by(|a, b| {
        order.compare(
            a.leading_monomial().expect("nonzero"),
            b.leading_monomial().expect("nonzero"),
        )
    });
    // Keep elements whose leading monomial is not divisible by an earlier
    // (smaller or equal) leading monomial.
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().expect("nonzero");
        if !minimal
            .iter()
            .any(|h| h.leading_monomial().expect("nonzero").divides(lm))
        {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, g)| g.clone())
            .collect();
        let g = &minimal[k];
        let (c, m) = g.leading_term().expect("nonzero").clone();
        let tail = g.tail();
        let r = divide(&tail, &others, order).remainder;
        let full = Polynomial::from_terms(
            std::iter::once((c, m))
                .chain(r.terms().iter().cloned())
                .collect(),
            order,
        );
        reduced.push(full.monic());
    }
    reduced.sort_by(|a, b| {
        order.compare(
            b.leading_monomial().expect("nonzero"),
            a.leading_monomial().expect("nonzero"),
        )
    });
    reduced
}

/// Buchberger's criterion: every S-polynomial of the (nonzero) generators
/// reduces to zero modulo them.
pub fn is_groebner(gens: &[Polynomial], order: TermOrder) -> GroebnerCheck {
    let basis: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.with_order(order))
        .collect();
    let mut pairs_checked = 0;
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            pairs_checked += 1;
            let s = s_polynomial(&basis[i], &basis[j], order).expect("nonzero");
            let r = divide(&s, &basis, order).remainder;
            if !r.is_zero() {
                return GroebnerCheck {
                    is_groebner: false,
                    certificate: Some((i, j, r)),
                    pairs_checked,
                };
            }
        }
    }
    GroebnerCheck {
        is_groebner: true,
        certificate: None,
        pairs_checked,
    }
}

/// Minimal generators of the leading-term ideal of a Gröbner basis.
pub fn initial_ideal(gb: &[Polynomial], order: TermOrder) -> Vec<Monomial> {
    minimalize(
        gb.iter()
            .filter(|g| !g.is_zero())
            .map(|g| {
                g.with_order(order)
                    .leading_monomial()
                    .expect("nonzero")
                    .clone()
            })
            .collect(),
    )
}

/// Is `f` in the ideal spanned by the Gröbner basis `gb`?
pub fn reduces_to_zero(f: &Polynomial, gb: &[Polynomial], order: TermOrder) -> bool {
    divide(f, gb, order).remainder.is_zero()
}
