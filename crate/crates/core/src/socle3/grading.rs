//! The non-degeneracy matrix of a cubic form and the linear systems whose
//! solutions remove quadratic terms by a change of coordinates.

use num_traits::Zero;

use crate::dualcore::{
    binomial, monomial_basis, monomials_of_degree, rref, solve_linear, DualPoly, JetElement,
    Matrix, MultiIndex, Scalar, SeriesPoly,
};
use crate::error::{Error, Result};

use super::aut::AutMap;

fn check_cubic_form(f3: &DualPoly) -> Result<()> {
    if f3.is_zero() || !f3.is_homogeneous() || f3.degree() != Some(3) {
        return Err(Error::precondition(
            "cubic form",
            format!("expected a nonzero homogeneous cubic, got {f3}"),
        ));
    }
    Ok(())
}

/// `Δ`: entry `(j, q)` is the dual coefficient `α_{q + δ_j}` of the cubic, for `|q| = 2`.
///
/// Row `j` holds the dual coordinates of `x_j o F3`, so the rank is the
/// dimension of the space of second partials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaMatrix {
    pub n: usize,
    /// Degree-two multi-indices labelling the columns (increasing deg-lex).
    pub columns: Vec<MultiIndex>,
    pub matrix: Matrix,
    pub rank: usize,
}

pub fn delta_matrix(f3: &DualPoly) -> Result<DeltaMatrix> {
    check_cubic_form(f3)?;
    let n = f3.nvars();
    let columns = monomials_of_degree(n, 2);
    let mut matrix = Matrix::zeros(n, columns.len());
    for j in 0..n {
        for (c, q) in columns.iter().enumerate() {
            matrix[(j, c)] = f3.dual_coefficient(&q.with_increment(j));
        }
    }
    let rank = matrix.rank();
    Ok(DeltaMatrix {
        n,
        columns,
        matrix,
        rank,
    })
}

/// A cubic form in `n` variables is non-degenerate when its second partials span all linear forms.
pub fn is_nondegenerate(f3: &DualPoly) -> Result<bool> {
    let d = delta_matrix(f3)?;
    Ok(d.rank == d.n)
}

/// Linear system for `phi(x_l) = x_l + sum_q a^l_q x^q` (`q` of degree two in the
/// first `n` variables) such that `phi^*(F3 + C) = F3 + C + D` for a quadric `D`.
///
/// Rows are the monomials `x_i x_j` with `i <= n`, `i <= j <= m`; row `(i, j)`
/// expresses the dual coordinate of `D` at `x_i x_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingSystem {
    pub n: usize,
    pub m: usize,
    /// `(i, j)` with `i <= j`, zero-based.
    pub rows: Vec<(usize, usize)>,
    /// `(l, q)`: the coefficient of `x^q` in `phi(x_l)`.
    pub unknowns: Vec<(usize, MultiIndex)>,
    pub matrix: Matrix,
}

pub fn grading_system(f3: &DualPoly, m: usize) -> Result<GradingSystem> {
    let delta = delta_matrix(f3)?;
    let n = delta.n;
    if delta.rank != n {
        return Err(Error::precondition(
            "canonical grading",
            format!("the cubic form {f3} is degenerate (rank of Δ is {} < {n})", delta.rank),
        ));
    }
    if m < n {
        return Err(Error::precondition(
            "canonical grading",
            format!("total variable count {m} is below the cubic's {n}"),
        ));
    }
    let quads = monomials_of_degree(n, 2);
    let alpha = |q: &MultiIndex, i: usize| -> Scalar {
        if i < n {
            f3.dual_coefficient(&q.with_increment(i))
        } else {
            Scalar::zero()
        }
    };
    let rows: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..m).map(move |j| (i, j))).collect();
    let unknowns: Vec<(usize, MultiIndex)> = (0..m)
        .flat_map(|l| quads.iter().map(move |q| (l, q.clone())))
        .collect();
    let mut matrix = Matrix::zeros(rows.len(), unknowns.len());
    for (r, &(i, j)) in rows.iter().enumerate() {
        for (c, (l, q)) in unknowns.iter().enumerate() {
            let mut v = Scalar::zero();
            if *l == j {
                v += alpha(q, i);
            }
            if *l == i {
                v += alpha(q, j);
            }
            matrix[(r, c)] = v;
        }
    }
    Ok(GradingSystem {
        n,
        m,
        rows,
        unknowns,
        matrix,
    })
}

impl GradingSystem {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// The rank a non-degenerate cubic guarantees.
    pub fn expected_rank(&self) -> usize {
        let base = binomial(self.n as u64 + 1, 2);
        let base: usize = base.try_into().expect("small");
        base + self.n * (self.m - self.n)
    }

    /// Right-hand side `β`: dual coordinates of the quadric `D` at the row monomials.
    pub fn rhs(&self, d: &DualPoly) -> Result<Vec<Scalar>> {
        if d.nvars() != self.m {
            return Err(Error::VariableMismatch {
                left: self.m,
                right: d.nvars(),
            });
        }
        Ok(self
            .rows
            .iter()
            .map(|&(i, j)| d.dual_coefficient(&MultiIndex::unit(self.m, i).with_increment(j)))
            .collect())
    }

    /// Solves for `a` and returns the corresponding map modulo `M^4`.
    pub fn solve(&self, d: &DualPoly) -> Result<AutMap> {
        let a = solve_linear(&self.matrix, &self.rhs(d)?)?;
        Ok(self.map_from_solution(&a))
    }

    pub fn map_from_solution(&self, a: &[Scalar]) -> AutMap {
        let m = self.m;
        let mut images: Vec<SeriesPoly> = (0..m).map(|l| SeriesPoly::var(m, l)).collect();
        for ((l, q), c) in self.unknowns.iter().zip(a) {
            if !c.is_zero() {
                images[*l].add_term(q.padded(m), c.clone());
            }
        }
        AutMap::new(images, 3).expect("identity linear part")
    }
}

/// Finds a unit `u` such that `u o F` has no constant or linear term; returns `(u o F, u)`.
pub(crate) fn remove_low_degree(f: &DualPoly) -> Result<(DualPoly, JetElement)> {
    let nvars = f.nvars();
    let s = f.degree().unwrap_or(0);
    let targets = monomial_basis(nvars, 1);
    let unknowns: Vec<MultiIndex> = monomial_basis(nvars, s).into_iter().filter(|a| a.degree() > 0).collect();
    let mut a = Matrix::zeros(targets.len(), unknowns.len());
    for (r, e) in targets.iter().enumerate() {
        for (c, mono) in unknowns.iter().enumerate() {
            a[(r, c)] = f.dual_coefficient(&e.add(mono));
        }
    }
    let rhs: Vec<Scalar> = targets.iter().map(|e| -f.dual_coefficient(e)).collect();
    let sol = solve_linear(&a, &rhs).map_err(|e| match e {
        Error::Incompatible => Error::Inconsistent(
            "low-degree terms cannot be absorbed: P_{<=1} is not inside the derivative span".into(),
        ),
        other => other,
    })?;
    let mut u = SeriesPoly::one(nvars);
    for (mono, c) in unknowns.into_iter().zip(sol) {
        u.add_term(mono, c);
    }
    let u = JetElement::new(u, s);
    let g = u.act(f)?;
    Ok((g, u))
}

/// `F -> F3 + F2'` with the same derivative span, for a cubic `F` with non-degenerate top form.
pub fn reduce_to_f2f3(f: &DualPoly) -> Result<DualPoly> {
    if f.degree() != Some(3) {
        return Err(Error::precondition(
            "reduction to F2 + F3",
            format!("F must have degree 3, got {:?}", f.degree()),
        ));
    }
    if !is_nondegenerate(&f.top_form())? {
        return Err(Error::precondition(
            "reduction to F2 + F3",
            "the cubic part of F is degenerate",
        ));
    }
    Ok(remove_low_degree(f)?.0)
}

/// Basis of linear forms `l` with `l o F3 = 0`, in reduced echelon form (rows of length `m`).
pub(crate) fn linear_annihilator(f3: &DualPoly) -> Vec<Vec<Scalar>> {
    let m = f3.nvars();
    let quads = monomials_of_degree(m, 2);
    let mut a = Matrix::zeros(quads.len(), m);
    for k in 0..m {
        for (r, q) in quads.iter().enumerate() {
            a[(r, k)] = f3.dual_coefficient(&q.with_increment(k));
        }
    }
    let kernel = Matrix::from_rows_or_empty(a.nullspace(), m);
    let red = rref(&kernel);
    (0..red.rank).map(|i| red.matrix.row(i).to_vec()).collect()
}

impl Matrix {
    pub(crate) fn from_rows_or_empty(rows: Vec<Vec<Scalar>>, cols: usize) -> Matrix {
        if rows.is_empty() {
            Matrix::zeros(0, cols)
        } else {
            Matrix::from_rows(rows)
        }
    }
}
