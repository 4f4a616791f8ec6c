//! Simplicial complexes on at most [`MAX_VERTICES`] vertices, stored as
//! bitmask facet lists.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideals::MonomialIdeal;
use crate::polyring::Variable;
use crate::shapes::SkewShape;

pub const MAX_VERTICES: usize = 24;

type Mask = u32;

/// A simplicial complex given by its facets. The vertex labels form the
/// ground set; a label need not lie in any face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<Variable>,
    /// Maximal faces, sorted increasingly; empty means the void complex.
    facets: Vec<Mask>,
}

/// Outcome of the vertex-decomposability search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VdOutcome {
    pub decomposable: bool,
    /// Shedding vertices in preorder: the vertex, then the witness for its
    /// link, then the witness for its deletion.
    pub witness: Vec<Variable>,
}

impl SimplicialComplex {
    /// Builds a complex from arbitrary faces (indices into `labels`); only
    /// the maximal ones are kept.
    pub fn from_faces(labels: Vec<Variable>, faces: &[Vec<usize>]) -> Result<Self> {
        check_size(labels.len())?;
        let mut masks = Vec::with_capacity(faces.len());
        for f in faces {
            let mut m = 0;
            for &v in f {
                if v >= labels.len() {
                    return Err(Error::UnknownVertex(v));
                }
                m |= 1 << v;
            }
            masks.push(m);
        }
        Ok(SimplicialComplex {
            labels,
            facets: maximal(masks),
        })
    }

    /// The full simplex on `labels`.
    pub fn simplex(labels: Vec<Variable>) -> Result<Self> {
        let all = (0..labels.len()).collect::<Vec<_>>();
        SimplicialComplex::from_faces(labels, &[all])
    }

    pub fn labels(&self) -> &[Variable] {
        &self.labels
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|&f| bits(f)).collect()
    }

    pub fn facet_labels(&self) -> Vec<Vec<Variable>> {
        self.facets
            .iter()
            .map(|&f| bits(f).into_iter().map(|v| self.labels[v]).collect())
            .collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Largest face size minus one; `-1` for `{∅}` and the void complex.
    pub fn dim(&self) -> i32 {
        self.facets
            .iter()
            .map(|f| f.count_ones() as i32)
            .max()
            .unwrap_or(0)
            - 1
    }

    pub fn is_pure(&self) -> bool {
        let mut sizes = self.facets.iter().map(|f| f.count_ones());
        match sizes.next() {
            None => true,
            Some(s) => sizes.all(|t| t == s),
        }
    }

    pub fn contains_face(&self, face: &[usize]) -> bool {
        let m = face.iter().fold(0, |acc, &v| acc | (1 << v));
        self.facets.iter().any(|&f| f & m == m)
    }

    /// Every face, as sorted vertex lists, in increasing mask order.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut all = HashSet::new();
        for &f in &self.facets {
            let mut sub = f;
            loop {
                all.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        let mut v: Vec<Mask> = all.into_iter().collect();
        v.sort_unstable();
        v.into_iter().map(bits).collect()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.labels.len() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn link(&self, v: usize) -> Result<SimplicialComplex> {
        self.check_vertex(v)?;
        Ok(self.with_facets(link_facets(&self.facets, v)))
    }

    pub fn deletion(&self, v: usize) -> Result<SimplicialComplex> {
        self.check_vertex(v)?;
        Ok(self.with_facets(deletion_facets(&self.facets, v)))
    }

    /// Adds a new vertex joined to every face.
    pub fn cone(&self, apex: Variable) -> Result<SimplicialComplex> {
        check_size(self.labels.len() + 1)?;
        let bit = 1 << self.labels.len();
        let mut labels = self.labels.clone();
        labels.push(apex);
        Ok(SimplicialComplex {
            labels,
            facets: self.facets.iter().map(|f| f | bit).collect(),
        })
    }

    fn with_facets(&self, facets: Vec<Mask>) -> SimplicialComplex {
        SimplicialComplex {
            labels: self.labels.clone(),
            facets,
        }
    }

    /// Searches for a vertex decomposition. Shedding candidates are tried
    /// from the highest label index down, so for tableau rings the last
    /// cell of the last row comes first.
    pub fn vertex_decomposition(&self) -> VdOutcome {
        let mut memo = HashMap::new();
        let mut witness = Vec::new();
        let decomposable = vd(&self.facets, &mut memo, &mut witness);
        VdOutcome {
            decomposable,
            witness: if decomposable {
                witness.into_iter().map(|v| self.labels[v]).collect()
            } else {
                Vec::new()
            },
        }
    }

    pub fn is_vertex_decomposable(&self) -> bool {
        self.vertex_decomposition().decomposable
    }

    pub fn to_json(&self) -> ComplexJson {
        ComplexJson {
            vertices: self.labels.iter().map(|v| v.to_string()).collect(),
            facets: self
                .facet_labels()
                .into_iter()
                .map(|f| f.into_iter().map(|v| v.to_string()).collect())
                .collect(),
            dim: self.dim(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexJson {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
    pub dim: i32,
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::BudgetExceeded(format!(
            "{n} vertices (cap {MAX_VERTICES})"
        )));
    }
    Ok(())
}

fn bits(m: Mask) -> Vec<usize> {
    (0..Mask::BITS as usize)
        .filter(|&v| m >> v & 1 == 1)
        .collect()
}

fn maximal(mut masks: Vec<Mask>) -> Vec<Mask> {
    masks.sort_unstable_by_key(|m| std::cmp::Reverse(m.count_ones()));
    masks.dedup();
    let mut kept: Vec<Mask> = Vec::with_capacity(masks.len());
    for m in masks {
        if !kept.iter().any(|&k| k & m == m) {
            kept.push(m);
        }
    }
    kept.sort_unstable();
    kept
}

fn link_facets(facets: &[Mask], v: usize) -> Vec<Mask> {
    let bit = 1 << v;
    let mut out: Vec<Mask> = facets
        .iter()
        .filter(|&&f| f & bit != 0)
        .map(|f| f & !bit)
        .collect();
    out.sort_unstable();
    out
}

fn deletion_facets(facets: &[Mask], v: usize) -> Vec<Mask> {
    maximal(facets.iter().map(|f| f & !(1 << v)).collect())
}

fn dim_of(facets: &[Mask]) -> i32 {
    facets
        .iter()
        .map(|f| f.count_ones() as i32)
        .max()
        .unwrap_or(0)
        - 1
}

fn pure(facets: &[Mask]) -> bool {
    facets
        .windows(2)
        .all(|w| w[0].count_ones() == w[1].count_ones())
}

/// Memoized on the canonical (sorted) facet list; on success the
/// witness for `facets` is appended to `out`.
fn vd(
    facets: &[Mask],
    memo: &mut HashMap<Vec<Mask>, Option<Vec<usize>>>,
    out: &mut Vec<usize>,
) -> bool {
    if facets.len() <= 1 {
        return true;
    }
    if let Some(hit) = memo.get(facets) {
        return match hit {
            Some(w) => {
                out.extend_from_slice(w);
                true
            }
            None => false,
        };
    }
    let verts = facets.iter().fold(0, |a, f| a | f);
    let d = dim_of(facets);
    let mut found = None;
    for v in bits(verts).into_iter().rev() {
        let lk = link_facets(facets, v);
        let del = deletion_facets(facets, v);
        if dim_of(&del) != d || dim_of(&lk) + 1 != d || !pure(&lk) || !pure(&del) {
            continue;
        }
        let mut w = vec![v];
        if vd(&lk, memo, &mut w) && vd(&del, memo, &mut w) {
            found = Some(w);
            break;
        }
    }
    let ok = found.is_some();
    if let Some(w) = &found {
        out.extend_from_slice(w);
    }
    memo.insert(facets.to_vec(), found);
    ok
}

/// The complex whose faces are the squarefree monomials outside `ideal`;
/// vertices are the ideal's variables. Facets are the complements of the
/// minimal vertex covers of the generator supports.
pub fn stanley_reisner(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let n = ideal.nvars();
    check_size(n)?;
    let gens: Vec<Mask> = ideal
        .gens()
        .iter()
        .map(|g| g.support().fold(0, |acc, v| acc | (1 << v)))
        .collect();
    let full: Mask = (1 << n) - 1;
    let mut covers = Vec::new();
    let mut seen = HashSet::new();
    transversals(&gens, 0, &mut seen, &mut covers);
    let covers = minimal_sets(covers);
    Ok(SimplicialComplex {
        labels: ideal.vars().vars().to_vec(),
        facets: maximal(covers.into_iter().map(|c| full & !c).collect()),
    })
}

fn transversals(gens: &[Mask], chosen: Mask, seen: &mut HashSet<Mask>, out: &mut Vec<Mask>) {
    if !seen.insert(chosen) {
        return;
    }
    match gens.iter().find(|&&g| g & chosen == 0) {
        None => out.push(chosen),
        Some(&g) => {
            for v in bits(g) {
                transversals(gens, chosen | (1 << v), seen, out);
            }
        }
    }
}

fn minimal_sets(mut sets: Vec<Mask>) -> Vec<Mask> {
    sets.sort_unstable_by_key(|m| m.count_ones());
    sets.dedup();
    let mut kept: Vec<Mask> = Vec::new();
    for s in sets {
        if !kept.iter().any(|&k| k & !s == 0) {
            kept.push(s);
        }
    }
    kept
}

/// `#vertices − (dim Δ + 1)` for the Stanley–Reisner complex of `ideal`.
pub fn height_of_squarefree(ideal: &MonomialIdeal) -> Result<usize> {
    let delta = stanley_reisner(ideal)?;
    Ok(ideal.nvars() - (delta.dim() + 1) as usize)
}

/// `Σ_{i=2}^n (λ_i − μ_i − 1)` for `in(I_2(T))`, plus `max{0, n−1−μ_1}` for
/// `in(I_2(S))` when `symmetric` is set.
pub fn predicted_height(shape: &SkewShape, symmetric: bool) -> usize {
    let (lam, mu) = (shape.lambda().parts(), shape.mu());
    let base: usize = (1..shape.n()).map(|i| lam[i] - mu[i] - 1).sum();
    if symmetric {
        base + (shape.n() - 1).saturating_sub(mu[0])
    } else {
        base
    }
}
