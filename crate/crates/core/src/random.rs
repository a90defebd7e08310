//! Seeded generators of random inputs for property suites and self-tests.

use num_traits::Zero;
use rand::Rng;

use crate::dualcore::{monomial_basis, monomials_of_degree, DualPoly, Matrix, MultiIndex, Scalar, SeriesPoly};
use crate::invsys::hilbert_function;
use crate::socle3::is_nondegenerate;

fn coefficient<R: Rng>(rng: &mut R, range: i64) -> Scalar {
    Scalar::from_integer(rng.gen_range(-range..=range).into())
}

/// Homogeneous form of degree `d` with integer coefficients in `[-range, range]`.
pub fn form<R: Rng>(rng: &mut R, nvars: usize, d: u32, range: i64) -> DualPoly {
    DualPoly::from_terms(nvars, monomials_of_degree(nvars, d).into_iter().map(|m| (m, coefficient(rng, range))))
}

/// Dual polynomial of degree `<= d`; roughly `density` of the monomials get a nonzero coefficient.
pub fn dual_poly<R: Rng>(rng: &mut R, nvars: usize, d: u32, range: i64, density: f64) -> DualPoly {
    DualPoly::from_terms(
        nvars,
        monomial_basis(nvars, d)
            .into_iter()
            .filter_map(|m| rng.gen_bool(density).then(|| (m, coefficient(rng, range)))),
    )
}

/// Series polynomial of degree `<= d`.
pub fn series_poly<R: Rng>(rng: &mut R, nvars: usize, d: u32, range: i64, density: f64) -> SeriesPoly {
    SeriesPoly::from_terms(
        nvars,
        monomial_basis(nvars, d)
            .into_iter()
            .filter_map(|m| rng.gen_bool(density).then(|| (m, coefficient(rng, range)))),
    )
}

/// A non-degenerate cubic form in `n` variables.
pub fn nondegenerate_cubic<R: Rng>(rng: &mut R, n: usize, range: i64) -> DualPoly {
    loop {
        let f = form(rng, n, 3, range);
        if !f.is_zero() && is_nondegenerate(&f).unwrap_or(false) {
            return f;
        }
    }
}

/// Invertible `n x n` integer matrix with entries in `[-range, range]`.
pub fn invertible_matrix<R: Rng>(rng: &mut R, n: usize, range: i64) -> Matrix {
    loop {
        let m = Matrix::from_rows((0..n).map(|_| (0..n).map(|_| coefficient(rng, range)).collect()).collect());
        if !m.determinant().expect("square").is_zero() {
            return m;
        }
    }
}

/// A cubic dual generator with Hilbert function `{1, m, n, 1}`, its structure hidden by a
/// random linear change and random lower-order terms.
pub fn socle3_generator<R: Rng>(rng: &mut R, m: usize, n: usize, range: i64) -> DualPoly {
    assert!(n >= 1 && m >= n);
    loop {
        let mut f = nondegenerate_cubic(rng, n, range).embed(m);
        for k in n..m {
            let mut e = vec![0; m];
            e[k] = 2;
            let mut c = coefficient(rng, range);
            if c.is_zero() {
                c = Scalar::from_integer(1.into());
            }
            f.add_term(MultiIndex::new(e), c);
        }
        // mixed quadratic terms touching the cubic's variables, plus linear and constant terms
        for mono in monomial_basis(m, 2) {
            let touches = mono.exps()[..n].iter().any(|&e| e > 0);
            if (mono.degree() < 2 || touches) && rng.gen_bool(0.5) {
                f.add_term(mono, coefficient(rng, range));
            }
        }
        let f = f.linear_substitution(&invertible_matrix(rng, m, 2));
        if hilbert_function(&f).ok() == Some(vec![1, m, n, 1]) {
            return f;
        }
    }
}
