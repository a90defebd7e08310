use std::collections::HashMap;

use num_traits::Zero;

use super::{monomial_basis, rref, Matrix, MultiIndex, Poly, Scalar, Side};
use crate::error::{Error, Result};

/// A linear subspace of polynomials of degree `<= bound` in `nvars` variables,
/// held as a reduced row-echelon basis.
///
/// Columns are the monomials of degree `<= bound` in *decreasing* deg-lex order,
/// so the pivot of every basis row is its leading monomial. Two subspaces over the
/// same `(nvars, bound)` are equal iff their bases are identical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    nvars: usize,
    bound: u32,
    columns: Vec<MultiIndex>,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

fn column_labels(nvars: usize, bound: u32) -> Vec<MultiIndex> {
    let mut cols = monomial_basis(nvars, bound);
    cols.reverse();
    cols
}

impl Subspace {
    /// Builds the subspace spanned by coordinate vectors given in column order.
    pub fn from_vectors(nvars: usize, bound: u32, vectors: Vec<Vec<Scalar>>) -> Self {
        let columns = column_labels(nvars, bound);
        if vectors.is_empty() {
            return Self {
                nvars,
                bound,
                columns,
                rows: Vec::new(),
                pivots: Vec::new(),
            };
        }
        assert!(vectors.iter().all(|v| v.len() == columns.len()), "vector length mismatch");
        let r = rref(&Matrix::from_rows(vectors));
        let rows = (0..r.rank).map(|i| r.matrix.row(i).to_vec()).collect();
        Self {
            nvars,
            bound,
            columns,
            rows,
            pivots: r.pivots,
        }
    }

    pub fn zero(nvars: usize, bound: u32) -> Self {
        Self::from_vectors(nvars, bound, Vec::new())
    }

    /// All polynomials of degree `<= bound`.
    pub fn full(nvars: usize, bound: u32) -> Self {
        let n = column_labels(nvars, bound).len();
        let vectors = (0..n)
            .map(|i| {
                let mut v = vec![Scalar::zero(); n];
                v[i] = Scalar::from_integer(1.into());
                v
            })
            .collect();
        Self::from_vectors(nvars, bound, vectors)
    }

    pub fn span<S: Side>(nvars: usize, bound: u32, polys: &[Poly<S>]) -> Result<Self> {
        let index = Self::index_of(nvars, bound);
        let vectors = polys
            .iter()
            .map(|p| Self::coords_with(&index, nvars, bound, p))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_vectors(nvars, bound, vectors))
    }

    fn index_of(nvars: usize, bound: u32) -> HashMap<MultiIndex, usize> {
        column_labels(nvars, bound)
            .into_iter()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect()
    }

    fn coords_with<S: Side>(
        index: &HashMap<MultiIndex, usize>,
        nvars: usize,
        bound: u32,
        p: &Poly<S>,
    ) -> Result<Vec<Scalar>> {
        if p.nvars() != nvars {
            return Err(Error::VariableMismatch {
                left: nvars,
                right: p.nvars(),
            });
        }
        let mut v = vec![Scalar::zero(); index.len()];
        for (m, c) in p.terms() {
            let Some(&i) = index.get(m) else {
                return Err(Error::Dimension(format!(
                    "term of degree {} exceeds subspace bound {}",
                    m.degree(),
                    bound
                )));
            };
            v[i] = c.clone();
        }
        Ok(v)
    }

    /// Coordinates of `p` in the column order.
    pub fn coords<S: Side>(&self, p: &Poly<S>) -> Result<Vec<Scalar>> {
        Self::coords_with(&Self::index_of(self.nvars, self.bound), self.nvars, self.bound, p)
    }

    pub fn poly_from_coords<S: Side>(&self, v: &[Scalar]) -> Poly<S> {
        Poly::from_terms(
            self.nvars,
            self.columns.iter().cloned().zip(v.iter().cloned()),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn columns(&self) -> &[MultiIndex] {
        &self.columns
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    /// Leading monomial of each basis row.
    pub fn leading_monomials(&self) -> impl Iterator<Item = &MultiIndex> + '_ {
        self.pivots.iter().map(|&p| &self.columns[p])
    }

    /// The reduced basis, leading monomials decreasing.
    pub fn basis<S: Side>(&self) -> Vec<Poly<S>> {
        self.rows.iter().map(|r| self.poly_from_coords(r)).collect()
    }

    fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (a, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    *a -= &f * b;
                }
            }
        }
        v
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        self.reduce(v.to_vec()).iter().all(Zero::is_zero)
    }

    /// Membership test; polynomials with terms beyond the bound are never members.
    pub fn contains<S: Side>(&self, p: &Poly<S>) -> bool {
        match self.coords(p) {
            Ok(v) => self.contains_vector(&v),
            Err(_) => false,
        }
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains_vector(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!((self.nvars, self.bound), (other.nvars, other.bound));
        let vectors = self.rows.iter().chain(other.rows.iter()).cloned().collect();
        Subspace::from_vectors(self.nvars, self.bound, vectors)
    }

    /// Number of basis rows whose leading monomial has degree `i`, for `i = 0..=bound`.
    ///
    /// For a subspace `V` this is `dim (V ∩ P_{<=i} + P_{<i}) / P_{<i}`.
    pub fn leading_degree_profile(&self) -> Vec<usize> {
        let mut counts = vec![0; self.bound as usize + 1];
        for m in self.leading_monomials() {
            counts[m.degree() as usize] += 1;
        }
        counts
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dualcore::{parse_dual, DualPoly};

    #[test]
    fn span_membership_and_profile() {
        let polys: Vec<DualPoly> = ["y1^2 + y2", "y2", "1"]
            .iter()
            .map(|s| parse_dual(s).unwrap().embed(2))
            .collect();
        let v = Subspace::span(2, 2, &polys).unwrap();
        assert_eq!(v.dim(), 3);
        assert!(v.contains(&parse_dual("y1^2 + 5").unwrap().embed(2)));
        assert!(!v.contains(&parse_dual("y1").unwrap().embed(2)));
        assert_eq!(v.leading_degree_profile(), vec![1, 1, 1]);
        let full = Subspace::full(2, 2);
        assert_eq!(full.dim(), 6);
        assert!(v.is_subspace_of(&full));
        assert_eq!(v.sum(&full), full);
    }

    #[test]
    fn out_of_bound_is_rejected() {
        let p = parse_dual("y1^3").unwrap();
        assert!(Subspace::span(1, 2, std::slice::from_ref(&p)).is_err());
        assert!(!Subspace::full(1, 2).contains(&p));
    }
}
