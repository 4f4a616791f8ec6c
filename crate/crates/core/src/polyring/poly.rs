use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Monomial, TermOrder};
use crate::error::{Error, Result};

/// Exact rational coefficients.
pub type Rational = BigRational;

/// A coefficient together with its monomial.
pub type Term = (Rational, Monomial);

/// A polynomial in canonical form: nonzero coefficients, monomials strictly
/// decreasing under `order`. Zero is the empty term list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    order: TermOrder,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(order: TermOrder) -> Self {
        Polynomial {
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(c: Rational, order: TermOrder) -> Self {
        Polynomial::from_terms(vec![(c, Monomial::one())], order)
    }

    pub fn monomial(m: Monomial, order: TermOrder) -> Self {
        Polynomial {
            order,
            terms: vec![(Rational::one(), m)],
        }
    }

    /// Sorts, merges equal monomials and drops zero coefficients.
    pub fn from_terms(mut terms: Vec<Term>, order: TermOrder) -> Self {
        terms.sort_by(|a, b| order.compare(&b.1, &a.1));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some(last) if last.1 == m => last.0 += c,
                _ => out.push((c, m)),
            }
        }
        out.retain(|t| !t.0.is_zero());
        Polynomial { order, terms: out }
    }

    /// `a - b` for two monomials, the shape of every 2-minor.
    pub fn binomial(a: Monomial, b: Monomial, order: TermOrder) -> Self {
        Polynomial::from_terms(vec![(Rational::one(), a), (-Rational::one(), b)], order)
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Re-sorts the terms under another order.
    pub fn with_order(&self, order: TermOrder) -> Self {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.compare(&b.1, &a.1));
        Polynomial { order, terms }
    }

    /// All terms but the leading one.
    pub fn tail(&self) -> Polynomial {
        Polynomial {
            order: self.order,
            terms: self.terms.get(1..).unwrap_or_default().to_vec(),
        }
    }

    pub fn leading_term(&self) -> Result<&Term> {
        self.terms.first().ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Result<&Monomial> {
        self.leading_term().map(|t| &t.1)
    }

    pub fn leading_coefficient(&self) -> Result<&Rational> {
        self.leading_term().map(|t| &t.0)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, true)
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let order = self.order;
        let other = other.with_order(order);
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let signed = |c: &Rational| if negate { -c.clone() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match order.compare(&a[i].1, &b[j].1) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((signed(&b[j].0), b[j].1.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a[i].0 + signed(&b[j].0);
                    if !c.is_zero() {
                        out.push((c, a[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|t| (signed(&t.0), t.1.clone())));
        Polynomial { order, terms: out }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            order: self.order,
            terms: self.terms.iter().map(|(c, m)| (-c, m.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.order);
        }
        Polynomial {
            order: self.order,
            terms: self.terms.iter().map(|(a, m)| (a * c, m.clone())).collect(),
        }
    }

    /// `c * m * self`; multiplication by a monomial preserves term order.
    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.order);
        }
        Polynomial {
            order: self.order,
            terms: self.terms.iter().map(|(a, u)| (a * c, u.mul(m))).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .flat_map(|(a, u)| other.terms.iter().map(move |(b, v)| (a * b, u.mul(v))))
            .collect();
        Polynomial::from_terms(terms, self.order)
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((c, _)) if c.is_one() => self.clone(),
            Some((c, _)) => self.scale(&c.recip()),
        }
    }

    /// Multiplies by `-1` when the leading coefficient is negative.
    pub fn normalize_sign(&self) -> Polynomial {
        match self.terms.first() {
            Some((c, _)) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// Degree of every term when all agree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.1.degree();
        self.terms.iter().all(|t| t.1.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.1.degree()).max()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|t| &t.1)
    }
}
