//! Partitions, skew shapes `T_{λ-μ}`, their symmetrizations `S_{λ-μ}`, and the
//! derived shapes used by the liaison recursion and the Rees augmentation.
//!
//! Rows and columns are 1-indexed throughout, so the cell `(i, j)` is row `i`,
//! column `j` of the tableau.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A tableau cell `(row, col)`, 1-indexed.
pub type Cell = (usize, usize);

/// Weakly decreasing list of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::ChainViolation(format!(
                "lambda {parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of rows `n`.
    pub fn rows(&self) -> usize {
        self.0.len()
    }

    /// Largest part `m = λ_1`.
    pub fn largest(&self) -> usize {
        self.0[0]
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }
}

/// The pair `(λ, μ)` describing the skew tableau `T_{λ-μ}`.
///
/// Row `i` holds the cells `(i, j)` with `μ_i < j <= λ_i`. Shapes with
/// `μ = 0` are plain Ferrers tableaux. `symmetric_ok` records whether
/// `μ_i >= i - 1` holds for every row, which is what the symmetrized
/// tableau and the specialized ideal require.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    lambda: Partition,
    mu: Vec<usize>,
    symmetric_ok: bool,
}

/// Checks the chain `0 <= μ_1 <= ... <= μ_n < λ_n <= ... <= λ_1` and builds the shape.
pub fn validate_shape(lambda: Vec<usize>, mu: Vec<usize>) -> Result<SkewShape> {
    if lambda.len() != mu.len() {
        return Err(Error::LengthMismatch {
            lambda: lambda.len(),
            mu: mu.len(),
        });
    }
    let lambda = Partition::new(lambda)?;
    if mu.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::ChainViolation(format!(
            "mu {mu:?} is not weakly increasing"
        )));
    }
    let n = lambda.rows();
    if mu[n - 1] >= lambda.parts()[n - 1] {
        return Err(Error::ChainViolation(format!(
            "mu_n = {} is not below lambda_n = {}",
            mu[n - 1],
            lambda.parts()[n - 1]
        )));
    }
    let symmetric_ok = mu.iter().enumerate().all(|(i, &m)| m >= i);
    Ok(SkewShape {
        lambda,
        mu,
        symmetric_ok,
    })
}

/// Which family of diagonals to read off a tableau.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// Cells `(i, k + i)`, `k = 0..m-1`.
    Upper,
    /// Cells `(k + i, i)`, `k = 1..n-1`.
    Lower,
}

/// Result of removing the right-most cell of the last row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Strip {
    /// Row `n` still has cells.
    Shrunk(SkewShape),
    /// Row `n` became empty and was dropped; `None` when nothing is left.
    RowEmptied(Option<SkewShape>),
}

impl Strip {
    /// The remaining shape, if any.
    pub fn into_shape(self) -> Option<SkewShape> {
        match self {
            Strip::Shrunk(s) => Some(s),
            Strip::RowEmptied(s) => s,
        }
    }
}

impl SkewShape {
    /// Plain Ferrers tableau `T_λ` (`μ = 0`).
    pub fn ferrers(parts: Vec<usize>) -> Result<Self> {
        let n = parts.len();
        validate_shape(parts, vec![0; n])
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &[usize] {
        &self.mu
    }

    /// Number of rows `n`.
    pub fn n(&self) -> usize {
        self.lambda.rows()
    }

    /// `m = λ_1`.
    pub fn m(&self) -> usize {
        self.lambda.largest()
    }

    pub fn is_symmetric_capable(&self) -> bool {
        self.symmetric_ok
    }

    /// Row lengths `λ_i - μ_i`, indexed from row 1 at position 0.
    pub fn row_lengths(&self) -> Vec<usize> {
        self.lambda
            .parts()
            .iter()
            .zip(&self.mu)
            .map(|(l, m)| l - m)
            .collect()
    }

    pub fn num_cells(&self) -> usize {
        self.row_lengths().iter().sum()
    }

    pub fn contains(&self, (i, j): Cell) -> bool {
        i >= 1 && i <= self.n() && self.mu[i - 1] < j && j <= self.lambda.parts()[i - 1]
    }

    /// Is `μ = (0, 1, ..., n-1)`?
    pub fn is_staircase_mu(&self) -> bool {
        self.mu.iter().enumerate().all(|(i, &m)| m == i)
    }

    /// The cells of `T_{λ-μ}`.
    pub fn cells(&self) -> CellSet {
        let cells = self
            .lambda
            .parts()
            .iter()
            .zip(&self.mu)
            .enumerate()
            .flat_map(|(r, (&l, &m))| (m + 1..=l).map(move |c| (r + 1, c)))
            .collect();
        CellSet {
            cells,
            n_rows: self.n(),
            n_cols: self.m(),
        }
    }

    /// `S_{λ-μ}`: the cells of `T_{λ-μ}` together with their mirror images.
    pub fn symmetrize(&self) -> Result<CellSet> {
        if !self.symmetric_ok {
            return Err(Error::NotSymmetricCapable);
        }
        let t = self.cells();
        let side = self.n().max(self.m());
        let cells = t
            .cells
            .iter()
            .flat_map(|&(i, j)| [(i, j), (j, i)])
            .collect();
        Ok(CellSet {
            cells,
            n_rows: side,
            n_cols: side,
        })
    }

    /// The in-shape cells on the `k`-th upper or lower diagonal.
    pub fn diagonal(&self, k: usize, direction: Direction) -> Vec<Cell> {
        let n = self.n();
        match direction {
            Direction::Upper => (1..=n)
                .map(|i| (i, k + i))
                .filter(|&c| self.contains(c))
                .collect(),
            Direction::Lower if k == 0 => Vec::new(),
            Direction::Lower => (1..=n)
                .map(|i| (k + i, i))
                .filter(|&c| self.contains(c))
                .collect(),
        }
    }

    /// `(λ', μ')` with `λ' = (λ_1+1, λ_1+1, λ_2+1, ..., λ_n+1)` and
    /// `μ' = (1, μ_1+1, ..., μ_n+1)`; its fiber ring is the Rees algebra of
    /// the specialized ideal of `self`.
    pub fn augment(&self) -> Result<SkewShape> {
        let n = self.n();
        if self.mu[0] > n {
            return Err(Error::Mu1TooLarge { mu1: self.mu[0], n });
        }
        let mut lambda = vec![self.m() + 1];
        lambda.extend(self.lambda.parts().iter().map(|l| l + 1));
        let mut mu = vec![1];
        mu.extend(self.mu.iter().map(|m| m + 1));
        validate_shape(lambda, mu)
    }

    /// Removes the right-most cell of row `n`, dropping the row if it empties.
    pub fn strip_last_cell(&self) -> Strip {
        let n = self.n();
        let mut lambda = self.lambda.parts().to_vec();
        let mut mu = self.mu.clone();
        lambda[n - 1] -= 1;
        if lambda[n - 1] > mu[n - 1] {
            return Strip::Shrunk(SkewShape {
                lambda: Partition(lambda),
                mu,
                symmetric_ok: self.symmetric_ok,
            });
        }
        lambda.pop();
        mu.pop();
        if lambda.is_empty() {
            return Strip::RowEmptied(None);
        }
        let symmetric_ok = mu.iter().enumerate().all(|(i, &m)| m >= i);
        Strip::RowEmptied(Some(SkewShape {
            lambda: Partition(lambda),
            mu,
            symmetric_ok,
        }))
    }

    /// The `(n-1)`-row shape with `λ'_i = λ_i - (λ_n - μ_n - 1)` and
    /// `μ'_i = max(n-1, μ_i)` that carries the link in the liaison recursion.
    pub fn liaison_reduce(&self) -> Result<SkewShape> {
        let n = self.n();
        if n < 2 {
            return Err(Error::TooFewRows);
        }
        let c = self.lambda.parts()[n - 1] - self.mu[n - 1] - 1;
        let lambda = self.lambda.parts()[..n - 1].iter().map(|l| l - c).collect();
        let mu = self.mu[..n - 1].iter().map(|&m| m.max(n - 1)).collect();
        validate_shape(lambda, mu)
    }

    /// Shifts columns left so that `μ_1 <= n` for symmetric-capable shapes.
    ///
    /// Columns `n+1..=μ_1` carry no generator of the specialized ideal, so the
    /// shifted shape has isomorphic ideals and fiber rings.
    pub fn canonical_shift(&self) -> SkewShape {
        let n = self.n();
        if !self.symmetric_ok || self.mu[0] <= n {
            return self.clone();
        }
        let s = self.mu[0] - n;
        SkewShape {
            lambda: Partition(self.lambda.parts().iter().map(|l| l - s).collect()),
            mu: self.mu.iter().map(|m| m - s).collect(),
            symmetric_ok: true,
        }
    }

    pub fn to_json(&self) -> ShapeJson {
        ShapeJson {
            lambda: self.lambda.parts().to_vec(),
            mu: self.mu.clone(),
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}-{:?}", self.lambda.parts(), self.mu)
    }
}

/// Wire form `{"lambda":[...],"mu":[...]}`; `mu` defaults to zeros.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeJson {
    pub lambda: Vec<usize>,
    #[serde(default)]
    pub mu: Vec<usize>,
}

impl ShapeJson {
    pub fn into_shape(self) -> Result<SkewShape> {
        let mu = if self.mu.is_empty() {
            vec![0; self.lambda.len()]
        } else {
            self.mu
        };
        validate_shape(self.lambda, mu)
    }
}

impl Serialize for SkewShape {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SkewShape {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        ShapeJson::deserialize(d)?
            .into_shape()
            .map_err(serde::de::Error::custom)
    }
}

/// A set of cells inside an `n_rows x n_cols` box, kept sorted row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellSet {
    pub cells: BTreeSet<Cell>,
    pub n_rows: usize,
    pub n_cols: usize,
}

impl CellSet {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.contains(&c)
    }

    pub fn iter(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<Cell> {
        self.iter().collect()
    }
}

impl Serialize for CellSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<[usize; 2]> = self.cells.iter().map(|&(i, j)| [i, j]).collect();
        v.serialize(s)
    }
}

/// Bounds for exhaustive shape enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepBounds {
    pub max_rows: usize,
    pub max_cols: usize,
    pub max_cells: usize,
    /// Keep only shapes with `μ_i >= i - 1`.
    pub symmetric_only: bool,
    /// Skip shapes that are column shifts of one with `μ_1 <= n`.
    pub canonical_only: bool,
}

impl SweepBounds {
    pub fn new(max_rows: usize, max_cols: usize, max_cells: usize) -> Self {
        SweepBounds {
            max_rows,
            max_cols,
            max_cells,
            symmetric_only: false,
            canonical_only: false,
        }
    }

    pub fn symmetric(mut self) -> Self {
        self.symmetric_only = true;
        self
    }

    pub fn canonical(mut self) -> Self {
        self.canonical_only = true;
        self
    }
}

/// All valid shapes within `bounds`, ordered by `(n, λ, μ)`.
pub fn enumerate_shapes(bounds: &SweepBounds) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for n in 1..=bounds.max_rows {
        let mut lambda = Vec::with_capacity(n);
        partitions_into(n, bounds.max_cols, &mut lambda, &mut |lam| {
            let mut mu = Vec::with_capacity(n);
            mus_for(lam, 0, &mut mu, &mut |mu| {
                let cells: usize = lam.iter().zip(mu).map(|(l, m)| l - m).sum();
                if cells > bounds.max_cells {
                    return;
                }
                let shape = validate_shape(lam.to_vec(), mu.to_vec())
                    .expect("enumeration only produces valid chains");
                if bounds.symmetric_only && !shape.symmetric_ok {
                    return;
                }
                if bounds.canonical_only && shape.canonical_shift() != shape {
                    return;
                }
                out.push(shape);
            });
        });
    }
    out
}

fn partitions_into(n: usize, cap: usize, acc: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if acc.len() == n {
        f(acc);
        return;
    }
    let hi = acc.last().copied().unwrap_or(cap);
    for p in (1..=hi).rev() {
        acc.push(p);
        partitions_into(n, cap, acc, f);
        acc.pop();
    }
}

fn mus_for(lambda: &[usize], lo: usize, acc: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    let n = lambda.len();
    if acc.len() == n {
        f(acc);
        return;
    }
    // μ_i <= μ_n < λ_n keeps every row nonempty.
    for m in lo..lambda[n - 1] {
        acc.push(m);
        mus_for(lambda, m, acc, f);
        acc.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(l: &[usize], m: &[usize]) -> SkewShape {
        validate_shape(l.to_vec(), m.to_vec()).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(shape(&[5, 5, 4], &[1, 3, 3]).is_symmetric_capable());
        assert!(!shape(&[3, 3], &[0, 0]).is_symmetric_capable());
        assert!(matches!(
            validate_shape(vec![2, 3], vec![0, 0]),
            Err(Error::ChainViolation(_))
        ));
        assert!(matches!(
            validate_shape(vec![3, 3], vec![0]),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            validate_shape(vec![3, 3], vec![2, 1]),
            Err(Error::ChainViolation(_))
        ));
        assert!(matches!(
            validate_shape(vec![3, 2], vec![0, 2]),
            Err(Error::ChainViolation(_))
        ));
        assert!(matches!(
            validate_shape(vec![], vec![]),
            Err(Error::InvalidPartition(_))
        ));
    }

    #[test]
    fn t_cells() {
        let s = shape(&[5, 5, 4], &[1, 3, 3]);
        let expected = vec![(1, 2), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 4)];
        assert_eq!(s.cells().to_vec(), expected);
        assert_eq!(shape(&[1], &[0]).cells().to_vec(), vec![(1, 1)]);
        assert_eq!(
            SkewShape::ferrers(vec![6, 4, 4, 2, 1])
                .unwrap()
                .cells()
                .len(),
            17
        );
    }

    #[test]
    fn symmetrization() {
        let s = shape(&[5, 5, 4], &[1, 3, 3]).symmetrize().unwrap();
        assert_eq!(s.len(), 14);
        let one = shape(&[1], &[0]).symmetrize().unwrap();
        assert_eq!(one.to_vec(), vec![(1, 1)]);
        let wide = shape(&[8, 7, 6], &[4, 4, 4]);
        assert_eq!(wide.symmetrize().unwrap().len(), 2 * wide.num_cells());
        assert_eq!(
            shape(&[3, 3], &[0, 0]).symmetrize(),
            Err(Error::NotSymmetricCapable)
        );
    }

    #[test]
    fn diagonals() {
        let f = SkewShape::ferrers(vec![5, 5, 5, 2, 1]).unwrap();
        assert_eq!(
            f.diagonal(0, Direction::Upper),
            vec![(1, 1), (2, 2), (3, 3)]
        );
        let box2 = SkewShape::ferrers(vec![2, 2]).unwrap();
        assert_eq!(box2.diagonal(1, Direction::Upper), vec![(1, 2)]);
        let s = shape(&[5, 5, 4], &[0, 1, 2]);
        assert_eq!(s.diagonal(2, Direction::Upper), vec![(1, 3), (2, 4)]);
        assert!(s.diagonal(9, Direction::Upper).is_empty());
        assert!(s.diagonal(0, Direction::Lower).is_empty());
        assert_eq!(f.diagonal(3, Direction::Lower), vec![(4, 1)]);
        assert_eq!(f.diagonal(1, Direction::Lower), vec![(2, 1), (3, 2)]);
    }

    #[test]
    fn augmentation() {
        let a = shape(&[4, 4, 4], &[1, 2, 3]).augment().unwrap();
        assert_eq!(a.lambda().parts(), &[5, 5, 5, 5]);
        assert_eq!(a.mu(), &[1, 2, 3, 4]);
        let a = shape(&[1], &[0]).augment().unwrap();
        assert_eq!((a.lambda().parts(), a.mu()), (&[2, 2][..], &[1, 1][..]));
        let a = shape(&[5, 5, 4], &[0, 1, 2]).augment().unwrap();
        assert_eq!(
            (a.lambda().parts(), a.mu()),
            (&[6, 6, 6, 5][..], &[1, 1, 2, 3][..])
        );
        assert_eq!(
            shape(&[8, 7, 6], &[4, 4, 4]).augment(),
            Err(Error::Mu1TooLarge { mu1: 4, n: 3 })
        );
    }

    #[test]
    fn stripping() {
        match shape(&[5, 5, 4], &[1, 3, 3]).strip_last_cell() {
            Strip::RowEmptied(Some(s)) => assert_eq!(s, shape(&[5, 5], &[1, 3])),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            shape(&[5, 5, 5], &[1, 3, 3]).strip_last_cell(),
            Strip::Shrunk(shape(&[5, 5, 4], &[1, 3, 3]))
        );
        assert_eq!(
            shape(&[2, 2], &[0, 1]).strip_last_cell(),
            Strip::RowEmptied(Some(shape(&[2], &[0])))
        );
        assert_eq!(shape(&[1], &[0]).strip_last_cell(), Strip::RowEmptied(None));
    }

    #[test]
    fn liaison() {
        assert_eq!(
            shape(&[5, 5, 4], &[1, 3, 3]).liaison_reduce().unwrap(),
            shape(&[5, 5], &[2, 3])
        );
        assert_eq!(
            shape(&[4, 4, 4], &[0, 1, 2]).liaison_reduce().unwrap(),
            shape(&[3, 3], &[2, 2])
        );
        // λ = (m, m): λ' = (m - c), μ' = (max(1, μ_1)).
        assert_eq!(
            shape(&[6, 6], &[0, 2]).liaison_reduce().unwrap(),
            shape(&[3], &[1])
        );
        assert_eq!(shape(&[3], &[0]).liaison_reduce(), Err(Error::TooFewRows));
    }

    #[test]
    fn canonical_shift_drops_unused_columns() {
        let s = shape(&[8, 7, 6], &[4, 4, 4]);
        assert_eq!(s.canonical_shift(), shape(&[7, 6, 5], &[3, 3, 3]));
        let t = shape(&[5, 5, 4], &[1, 3, 3]);
        assert_eq!(t.canonical_shift(), t);
    }

    #[test]
    fn json_round_trip() {
        let s = shape(&[5, 5, 4], &[1, 3, 3]);
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"lambda":[5,5,4],"mu":[1,3,3]}"#);
        let back: SkewShape = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
        let ferrers: SkewShape = serde_json::from_str(r#"{"lambda":[2,1]}"#).unwrap();
        assert_eq!(ferrers.mu(), &[0, 0]);
        assert!(serde_json::from_str::<SkewShape>(r#"{"lambda":[2,3],"mu":[0,0]}"#).is_err());
        assert_eq!(
            serde_json::to_string(&s.cells()).unwrap(),
            "[[1,2],[1,3],[1,4],[1,5],[2,4],[2,5],[3,4]]"
        );
    }

    #[test]
    fn enumeration_counts() {
        // Partitions with at most 2 rows and parts <= 2: (1), (2), (1,1), (2,1), (2,2).
        let ferrers: Vec<_> = enumerate_shapes(&SweepBounds::new(2, 2, 10))
            .into_iter()
            .filter(|s| s.mu().iter().all(|&m| m == 0))
            .collect();
        assert_eq!(ferrers.len(), 5);
        let all = enumerate_shapes(&SweepBounds::new(3, 4, 20).symmetric().canonical());
        assert!(all
            .iter()
            .all(|s| s.is_symmetric_capable() && s.mu()[0] <= s.n()));
        let mut dedup = all.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), all.len());
    }
}
