//! Dense univariate polynomials over the rationals, enough for root counting.

use num_traits::{One, Zero};

use crate::dualcore::Scalar;

/// Coefficients in increasing degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly(Vec<Scalar>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, t: &Scalar) -> Scalar {
        self.0.iter().rev().fold(Scalar::zero(), |acc, c| acc * t + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Scalar::from_integer((i as i64).into()))
                .collect(),
        )
    }

    fn monic(&self) -> Self {
        match self.0.last() {
            None => self.clone(),
            Some(lead) => Self(self.0.iter().map(|c| c / lead).collect()),
        }
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.0[dd].clone();
        let mut r = self.0.clone();
        let mut q = vec![Scalar::zero(); self.0.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = &r[r.len() - 1] / &lead;
            for (i, dc) in d.0.iter().enumerate() {
                r[k + i] -= &c * dc;
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        (UniPoly::new(q), UniPoly::new(r))
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p')`: same roots, all simple.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        self.div_rem(&self.gcd(&self.derivative())).0.monic()
    }

    /// Lagrange interpolation through `(t_i, v_i)` with distinct `t_i`.
    pub fn interpolate(points: &[(Scalar, Scalar)]) -> UniPoly {
        let mut acc = UniPoly::new(vec![]);
        for (i, (ti, vi)) in points.iter().enumerate() {
            let mut basis = UniPoly::new(vec![Scalar::one()]);
            let mut denom = Scalar::one();
            for (j, (tj, _)) in points.iter().enumerate() {
                if i != j {
                    basis = basis.mul(&UniPoly::new(vec![-tj.clone(), Scalar::one()]));
                    denom *= ti - tj;
                }
            }
            acc = acc.add(&basis.scale(&(vi / denom)));
        }
        acc
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::new(vec![]);
        }
        let mut out = vec![Scalar::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.0.len().max(other.0.len());
        UniPoly::new(
            (0..n)
                .map(|i| {
                    self.0.get(i).cloned().unwrap_or_else(Scalar::zero)
                        + other.0.get(i).cloned().unwrap_or_else(Scalar::zero)
                })
                .collect(),
        )
    }

    pub fn scale(&self, c: &Scalar) -> UniPoly {
        UniPoly::new(self.0.iter().map(|a| a * c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dualcore::int;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::new(c.iter().map(|&v| int(v)).collect())
    }

    #[test]
    fn arithmetic() {
        // (t - 1)^2 (t + 2) = t^3 - 3t + 2
        let f = p(&[2, -3, 0, 1]);
        assert_eq!(f.gcd(&f.derivative()), p(&[-1, 1]));
        assert_eq!(f.squarefree_part(), p(&[-2, 1, 1]));
        assert_eq!(f.eval(&int(1)), int(0));
        let (q, r) = f.div_rem(&p(&[-1, 1]));
        assert_eq!(q, p(&[-2, 1, 1]));
        assert!(r.is_zero());
        assert_eq!(p(&[0, 0]).degree(), None);
        assert_eq!(p(&[5]).squarefree_part(), p(&[1]));
    }

    #[test]
    fn interpolation() {
        let f = p(&[3, 0, -1, 2, 1]);
        let pts: Vec<_> = (0..5).map(|t| (int(t), f.eval(&int(t)))).collect();
        assert_eq!(UniPoly::interpolate(&pts), f);
    }
}
