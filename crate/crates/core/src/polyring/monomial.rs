use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Dense id of a variable inside a [`VariableSet`](super::VariableSet).
pub type VarId = u32;

/// A product of variables, stored as sorted `(id, exponent)` pairs with
/// positive exponents. The total degree is cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Monomial {
    exps: Vec<(VarId, u32)>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(id: VarId) -> Self {
        Monomial::var_pow(id, 1)
    }

    pub fn var_pow(id: VarId, e: u32) -> Self {
        if e == 0 {
            return Monomial::one();
        }
        Monomial {
            exps: vec![(id, e)],
            degree: e,
        }
    }

    /// Builds a monomial from arbitrary `(id, exponent)` pairs; repeated ids
    /// are summed and zero exponents dropped.
    pub fn from_pairs<I: IntoIterator<Item = (VarId, u32)>>(pairs: I) -> Self {
        let mut v: Vec<(VarId, u32)> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        v.sort_unstable_by_key(|p| p.0);
        let mut exps: Vec<(VarId, u32)> = Vec::with_capacity(v.len());
        for (id, e) in v {
            match exps.last_mut() {
                Some(last) if last.0 == id => last.1 += e,
                _ => exps.push((id, e)),
            }
        }
        let degree = exps.iter().map(|p| p.1).sum();
        Monomial { exps, degree }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn pairs(&self) -> &[(VarId, u32)] {
        &self.exps
    }

    pub fn exponent(&self, id: VarId) -> u32 {
        self.exps
            .binary_search_by_key(&id, |p| p.0)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = VarId> + '_ {
        self.exps.iter().map(|p| p.0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|p| p.1 == 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    exps.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    exps.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&a[i..]);
        exps.extend_from_slice(&b[j..]);
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    /// Does `self` divide `other`?
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree || self.exps.len() > other.exps.len() {
            return false;
        }
        let b = &other.exps;
        let mut j = 0;
        for &(id, e) in &self.exps {
            while j < b.len() && b[j].0 < id {
                j += 1;
            }
            if j == b.len() || b[j].0 != id || b[j].1 < e {
                return false;
            }
            j += 1;
        }
        true
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps = self
            .exps
            .iter()
            .filter_map(|&(id, e)| {
                let r = e - other.exponent(id);
                (r > 0).then_some((id, r))
            })
            .collect();
        Some(Monomial {
            exps,
            degree: self.degree - other.degree,
        })
    }

    /// `self : other`, i.e. `self / gcd(self, other)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        let exps: Vec<_> = self
            .exps
            .iter()
            .filter_map(|&(id, e)| {
                let r = e.saturating_sub(other.exponent(id));
                (r > 0).then_some((id, r))
            })
            .collect();
        let degree = exps.iter().map(|p| p.1).sum();
        Monomial { exps, degree }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    exps.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    exps.push((a[i].0, a[i].1.max(b[j].1)));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&a[i..]);
        exps.extend_from_slice(&b[j..]);
        let degree = exps.iter().map(|p| p.1).sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (k, &(id, e)) in self.exps.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "v{id}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Drops duplicates and non-minimal elements; the survivors are sorted by
/// degree, then lexicographically with lower ids ranking higher.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(canonical_cmp);
    gens.dedup();
    if gens.first().map(Monomial::degree) == gens.last().map(Monomial::degree) {
        return gens;
    }
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

/// Degree first, then lex with lower variable ids ranking higher (larger
/// monomials first inside a degree).
pub fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree
        .cmp(&b.degree)
        .then_with(|| super::TermOrder::LexRowwise.compare(b, a))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(VarId, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn arithmetic() {
        let a = m(&[(0, 1), (2, 2)]);
        let b = m(&[(2, 1), (3, 1)]);
        assert_eq!(a.mul(&b), m(&[(0, 1), (2, 3), (3, 1)]));
        assert_eq!(a.lcm(&b), m(&[(0, 1), (2, 2), (3, 1)]));
        assert!(!a.is_coprime(&b));
        assert!(m(&[(1, 1)]).is_coprime(&b));
        assert!(m(&[(2, 1)]).divides(&a));
        assert!(!m(&[(2, 3)]).divides(&a));
        assert_eq!(a.div(&m(&[(2, 1)])), Some(m(&[(0, 1), (2, 1)])));
        assert_eq!(a.div(&b), None);
        assert_eq!(a.colon(&b), m(&[(0, 1), (2, 1)]));
        assert_eq!(a.degree(), 3);
        assert_eq!(m(&[(1, 1), (1, 2), (0, 0)]), m(&[(1, 3)]));
    }

    #[test]
    fn minimalize_removes_multiples() {
        let gens = vec![
            m(&[(0, 1), (1, 1)]),
            m(&[(0, 1)]),
            m(&[(0, 1)]),
            m(&[(2, 2)]),
        ];
        assert_eq!(minimalize(gens), vec![m(&[(0, 1)]), m(&[(2, 2)])]);
    }
}
