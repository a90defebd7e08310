//! Canonical-grading witnesses and the `F3 + sum λ_i y_i^2` normal form for
//! Gorenstein algebras of socle degree three.

use num_traits::Zero;

use crate::dualcore::{DualPoly, Matrix, MultiIndex, Scalar};
use crate::error::{Error, Result};
use crate::invsys::hilbert_function;

use super::aut::{AutMap, IsoWitness};
use super::grading::{grading_system, linear_annihilator, remove_low_degree};

/// `(m, n)` for a Hilbert function `{1, m, n, 1}` with `m` equal to the variable count.
fn socle3_shape(f: &DualPoly, result: &'static str) -> Result<(usize, usize)> {
    if f.degree() != Some(3) {
        return Err(Error::precondition(
            result,
            format!("socle degree must be 3, but deg F = {}", f.degree().map_or("-".into(), |d| d.to_string())),
        ));
    }
    let hf = hilbert_function(f)?;
    let (m, n) = (hf[1], hf[2]);
    if hf[3] != 1 {
        return Err(Error::Inconsistent(format!("Hilbert function {hf:?} has HF(3) != 1")));
    }
    if m != f.nvars() {
        return Err(Error::precondition(
            result,
            format!(
                "F uses {} variables but its embedding dimension is {m}; remove the redundant variables first",
                f.nvars()
            ),
        ));
    }
    if m < n {
        return Err(Error::precondition(
            result,
            format!("Hilbert function {hf:?} is inadmissible: HF(1) = {m} < HF(2) = {n}"),
        ));
    }
    Ok((m, n))
}

/// Witness `(phi, u)` with `F = phi^*(u o F3)` and `phi(x_j) = x_j + (quadratic)`, for HF `{1,n,n,1}`.
pub fn canonical_grading_witness(f: &DualPoly) -> Result<IsoWitness> {
    let (m, n) = socle3_shape(f, "canonical grading")?;
    if m != n {
        return Err(Error::precondition(
            "canonical grading",
            format!("Hilbert function must be symmetric {{1,{m},{m},1}}, got {{1,{m},{n},1}}"),
        ));
    }
    let (g, _) = remove_low_degree(f)?;
    let f3 = g.top_form();
    let sys = grading_system(&f3, n)?;
    let phi = sys
        .solve(&(&g - &f3))
        .map_err(|_| Error::Inconsistent("grading system has no solution despite full rank".into()))?;
    IsoWitness::complete(f, &f3, phi)?
        .ok_or_else(|| Error::Inconsistent("no unit completes the canonical-grading map".into()))
}

/// Result of bringing `F` to the form `F3(y_1..y_n) + sum_{i>n} λ_i y_i^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub m: usize,
    pub n: usize,
    /// Non-degenerate cubic form in `y_1..y_n`.
    pub cubic: DualPoly,
    /// `λ_{n+1}..λ_m`; nonzero, meaningful up to rational squares.
    pub lambdas: Vec<Scalar>,
    /// `F3 + sum λ_i y_i^2` in all `m` variables.
    pub normal: DualPoly,
    /// Certifies `R / Ann F ≅ R / Ann(normal)`: `F = phi^*(u o normal)`.
    pub witness: IsoWitness,
}

/// Congruence diagonalization: returns `(P, d)` with `P^t B P = diag(d)`.
pub(crate) fn diagonalize_symmetric(b: &Matrix) -> (Matrix, Vec<Scalar>) {
    let k = b.rows();
    let mut b = b.clone();
    let mut p = Matrix::identity(k);
    let swap = |mat: &mut Matrix, i: usize, j: usize, rows_too: bool| {
        for r in 0..mat.rows() {
            let t = mat[(r, i)].clone();
            mat[(r, i)] = mat[(r, j)].clone();
            mat[(r, j)] = t;
        }
        if rows_too {
            for c in 0..mat.cols() {
                let t = mat[(i, c)].clone();
                mat[(i, c)] = mat[(j, c)].clone();
                mat[(j, c)] = t;
            }
        }
    };
    // column j += c * column i (and the same on rows for b)
    let add = |mat: &mut Matrix, j: usize, i: usize, c: &Scalar, rows_too: bool| {
        for r in 0..mat.rows() {
            let v = &mat[(r, i)] * c;
            mat[(r, j)] += v;
        }
        if rows_too {
            for col in 0..mat.cols() {
                let v = &mat[(i, col)] * c;
                mat[(j, col)] += v;
            }
        }
    };
    for i in 0..k {
        if b[(i, i)].is_zero() {
            if let Some(j) = (i + 1..k).find(|&j| !b[(j, j)].is_zero()) {
                swap(&mut b, i, j, true);
                swap(&mut p, i, j, false);
            } else if let Some(j) = (i + 1..k).find(|&j| !b[(i, j)].is_zero()) {
                let one = Scalar::from_integer(1.into());
                add(&mut b, i, j, &one, true);
                add(&mut p, i, j, &one, false);
            } else {
                continue;
            }
        }
        for j in i + 1..k {
            if b[(j, i)].is_zero() {
                continue;
            }
            let c = -(&b[(j, i)] / &b[(i, i)]);
            add(&mut b, j, i, &c, true);
            add(&mut p, j, i, &c, false);
        }
    }
    let d = (0..k).map(|i| b[(i, i)].clone()).collect();
    (p, d)
}

/// Normal form of a socle-degree-three Gorenstein algebra with HF `{1, m, n, 1}`.
pub fn normalize_socle3(f: &DualPoly) -> Result<NormalForm> {
    let (m, n) = socle3_shape(f, "normal form")?;

    // Move the linear forms killing the cubic part to the last m - n variables.
    let kernel = linear_annihilator(&f.top_form());
    if kernel.len() != m - n {
        return Err(Error::Inconsistent(format!(
            "cubic part has {} annihilating linear forms, expected {}",
            kernel.len(),
            m - n
        )));
    }
    let pivots: Vec<usize> = kernel
        .iter()
        .map(|row| row.iter().position(|c| !c.is_zero()).expect("nonzero kernel row"))
        .collect();
    let mut t = Matrix::zeros(m, m);
    let mut next = 0;
    for k in (0..m).filter(|k| !pivots.contains(k)) {
        t[(next, k)] = Scalar::from_integer(1.into());
        next += 1;
    }
    for row in &kernel {
        for (k, c) in row.iter().enumerate() {
            t[(next, k)] = c.clone();
        }
        next += 1;
    }
    let psi = AutMap::linear(&t, 3)?;
    let g1 = psi.pullback(f)?;
    let phi1 = psi.inverse();

    let (g2, _) = remove_low_degree(&g1)?;

    // Diagonalize the part of the quadric living purely in the last m - n variables.
    let k = m - n;
    let mut b = Matrix::zeros(k, k);
    let quad = g2.homogeneous_part(2);
    for (mono, c) in quad.terms() {
        let vars: Vec<usize> = mono.support().flat_map(|(j, e)| std::iter::repeat_n(j, e as usize)).collect();
        if vars.iter().all(|&j| j >= n) {
            let (a, bb) = (vars[0] - n, vars[1] - n);
            if a == bb {
                b[(a, a)] = c.clone();
            } else {
                let half = c / Scalar::from_integer(2.into());
                b[(a, bb)] = half.clone();
                b[(bb, a)] = half;
            }
        }
    }
    let (p, lambdas) = diagonalize_symmetric(&b);
    if lambdas.iter().any(Zero::is_zero) {
        return Err(Error::Inconsistent(format!(
            "a quadratic coefficient vanished after diagonalization, contradicting HF(1) = {m}"
        )));
    }
    // psi2^* G(y) = G(S y) with S = diag(I_n, P); psi2 has linear part S^t.
    let mut st = Matrix::identity(m);
    for a in 0..k {
        for c in 0..k {
            st[(n + a, n + c)] = p[(c, a)].clone();
        }
    }
    let psi2 = AutMap::linear(&st, 3)?;
    let g3 = psi2.pullback(&g2)?;
    let phi2 = psi2.inverse();

    let cubic_m = g3.top_form();
    let mut normal = cubic_m.clone();
    for (i, l) in lambdas.iter().enumerate() {
        let mut e = vec![0; m];
        e[n + i] = 2;
        normal.add_term(MultiIndex::new(e), l.clone());
    }
    let sys = grading_system(
        &cubic_m.restrict(n).ok_or_else(|| Error::Inconsistent("cubic part escaped the first n variables".into()))?,
        m,
    )?;
    let phi_g = sys
        .solve(&(&g3 - &normal))
        .map_err(|_| Error::Inconsistent("extended grading system has no solution despite full rank".into()))?;

    let phi = phi_g.compose(&phi2).compose(&phi1);
    let witness = IsoWitness::complete(f, &normal, phi)?
        .ok_or_else(|| Error::Inconsistent("no unit completes the normal-form map".into()))?;
    Ok(NormalForm {
        m,
        n,
        cubic: cubic_m.restrict(n).expect("checked above"),
        lambdas,
        normal,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dualcore::{frac, int, parse_dual, parse_series};
    use crate::socle3::verify_iso;

    fn y(s: &str) -> DualPoly {
        parse_dual(s).unwrap()
    }

    #[test]
    fn one_variable_witness() {
        let f = y("y1^3 + y1^2");
        let w = canonical_grading_witness(&f).unwrap();
        assert_eq!(w.phi.images()[0], parse_series("x1 + 1/6*x1^2").unwrap());
        assert!(verify_iso(&f, &y("y1^3"), &w).unwrap());
    }

    #[test]
    fn homogeneous_input_gives_identity() {
        let f = y("y1*y2*y3");
        let w = canonical_grading_witness(&f).unwrap();
        assert_eq!(w, IsoWitness::identity(3, 3));
    }

    #[test]
    fn two_variable_witness() {
        let f = y("y1^3 - y2^3 + y1^2");
        let w = canonical_grading_witness(&f).unwrap();
        assert!(w.phi.is_tangent_to_identity());
        assert!(verify_iso(&f, &y("y1^3 - y2^3"), &w).unwrap());
    }

    #[test]
    fn canonical_rejects_other_shapes() {
        assert!(matches!(
            canonical_grading_witness(&y("y1^3*y2 + y2^3")),
            Err(Error::Precondition { .. })
        ));
        assert!(matches!(
            canonical_grading_witness(&y("y1^3 + y2^2")),
            Err(Error::Precondition { .. })
        ));
        assert!(canonical_grading_witness(&y("y1^3").embed(2)).is_err());
    }

    #[test]
    fn diagonalization() {
        let b = Matrix::from_rows(vec![vec![int(0), frac(1, 2)], vec![frac(1, 2), int(0)]]);
        let (p, d) = diagonalize_symmetric(&b);
        let got = &(&p.transpose() * &b) * &p;
        assert_eq!(got, Matrix::from_rows(vec![vec![d[0].clone(), int(0)], vec![int(0), d[1].clone()]]));
        assert!(d.iter().all(|l| !l.is_zero()));
        let b = Matrix::from_rows(vec![vec![int(1), int(2)], vec![int(2), int(4)]]);
        let (_, d) = diagonalize_symmetric(&b);
        assert_eq!(d, vec![int(1), int(0)]);
    }

    #[test]
    fn normal_form_examples() {
        let nf = normalize_socle3(&y("y1^3 + y2^2")).unwrap();
        assert_eq!((nf.m, nf.n), (2, 1));
        assert_eq!(nf.cubic, y("y1^3"));
        assert_eq!(nf.lambdas, vec![int(1)]);

        let f = y("y1^3 + y2^2 + y1*y2");
        let nf = normalize_socle3(&f).unwrap();
        assert_eq!(nf.cubic.degree(), Some(3));
        assert!(verify_iso(&f, &nf.normal, &nf.witness).unwrap());

        let f = y("y1^2*y2 + y3^2");
        assert_eq!(hilbert_function(&f).unwrap(), vec![1, 3, 2, 1]);
        let nf = normalize_socle3(&f).unwrap();
        assert_eq!(nf.cubic, y("y1^2*y2"));
        assert_eq!(nf.lambdas, vec![int(1)]);
        assert!(verify_iso(&f, &nf.normal, &nf.witness).unwrap());
    }

    #[test]
    fn normal_form_with_hidden_structure() {
        // the cubic involves y3, and the quadric in the annihilated directions is not diagonal
        let f = y("y1^3 + 3*y1^2*y3 + 3*y1*y3^2 + y3^3 + y2^3 + y2*y3 - y1*y2 + 2*y2 + 7 + y4^2 - y3*y4 + y1*y4");
        let nf = normalize_socle3(&f).unwrap();
        assert!(verify_iso(&f, &nf.normal, &nf.witness).unwrap());
        assert_eq!((nf.m, nf.n), (4, 2));
        assert_eq!(nf.lambdas.len(), 2);
        assert!(nf.lambdas.iter().all(|l| !l.is_zero()));
    }

    #[test]
    fn normal_form_rejects() {
        assert!(normalize_socle3(&y("y1^3*y2")).is_err());
        assert!(matches!(normalize_socle3(&y("y1^3").embed(2)), Err(Error::Precondition { .. })));
    }
}
