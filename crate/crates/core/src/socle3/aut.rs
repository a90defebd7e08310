//! Automorphisms of `R / M^{s+1}`, their matrices, and isomorphism witnesses.
//!
//! Conventions. `E` is the monomial basis of `R / M^{s+1}` in increasing
//! deg-lex order and `[G]` is the row vector of dual coordinates `<e, G>`.
//! `M(phi)` has the coordinates of `phi(e_k)` in column `k`, so that
//! `[G] M(phi) = [phi^* G]` with `<e, phi^* G> = <phi(e), G>`. Composition is
//! `(phi ∘ psi)(f) = phi(psi(f))`, and then `M(phi ∘ psi) = M(phi) M(psi)`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::dualcore::{
    contract, monomial_basis, parse_series, DualPoly, JetElement, Matrix, MultiIndex, Scalar,
    SeriesPoly,
};
use crate::error::{Error, Result};
use crate::invsys::{dual_coordinates, from_dual_coordinates};

/// A local automorphism `x_j -> z_j`, stored modulo `M^{s+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutMap {
    images: Vec<SeriesPoly>,
    bound: u32,
}

impl AutMap {
    /// Builds the map from the images of the variables; rejects constant terms and singular linear parts.
    pub fn new(images: Vec<SeriesPoly>, bound: u32) -> Result<Self> {
        let nvars = images.len();
        for z in &images {
            if z.nvars() != nvars {
                return Err(Error::VariableMismatch {
                    left: nvars,
                    right: z.nvars(),
                });
            }
            if !z.constant_term().is_zero() {
                return Err(Error::precondition(
                    "local automorphism",
                    format!("image {z} has a nonzero constant term"),
                ));
            }
        }
        let map = Self {
            images: images.into_iter().map(|z| z.truncated(bound)).collect(),
            bound,
        };
        if map.linear_part().inverse().is_none() {
            return Err(Error::precondition(
                "local automorphism",
                "the linear part is singular, so the images do not generate the maximal ideal",
            ));
        }
        Ok(map)
    }

    pub fn identity(nvars: usize, bound: u32) -> Self {
        Self {
            images: (0..nvars).map(|j| SeriesPoly::var(nvars, j)).collect(),
            bound,
        }
    }

    /// `x_j -> sum_k t[j][k] x_k`.
    pub fn linear(t: &Matrix, bound: u32) -> Result<Self> {
        let n = t.rows();
        if t.cols() != n {
            return Err(Error::Dimension(format!("linear part must be square, got {n}x{}", t.cols())));
        }
        let images = (0..n)
            .map(|j| SeriesPoly::from_terms(n, (0..n).map(|k| (MultiIndex::unit(n, k), t[(j, k)].clone()))))
            .collect();
        Self::new(images, bound)
    }

    pub fn nvars(&self) -> usize {
        self.images.len()
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn images(&self) -> &[SeriesPoly] {
        &self.images
    }

    /// Same map stored with a different truncation.
    pub fn with_bound(&self, bound: u32) -> Self {
        Self {
            images: self.images.iter().map(|z| z.truncated(bound)).collect(),
            bound,
        }
    }

    /// Entry `(j, k)` is the coefficient of `x_k` in `phi(x_j)`.
    pub fn linear_part(&self) -> Matrix {
        let n = self.nvars();
        let mut t = Matrix::zeros(n, n);
        for (j, z) in self.images.iter().enumerate() {
            for k in 0..n {
                t[(j, k)] = z.coeff(&MultiIndex::unit(n, k));
            }
        }
        t
    }

    /// Whether every image has identity linear part, i.e. `phi(x_j) = x_j + (higher order)`.
    pub fn is_tangent_to_identity(&self) -> bool {
        self.linear_part() == Matrix::identity(self.nvars())
    }

    pub fn apply(&self, f: &SeriesPoly) -> SeriesPoly {
        f.substitute(&self.images, Some(self.bound))
    }

    /// `self ∘ inner`: first `inner`, then `self`.
    pub fn compose(&self, inner: &AutMap) -> AutMap {
        let bound = self.bound.min(inner.bound);
        AutMap {
            images: inner
                .images
                .iter()
                .map(|z| z.substitute(&self.images, Some(bound)))
                .collect(),
            bound,
        }
    }

    pub fn inverse(&self) -> AutMap {
        let m = aut_matrix(self, self.bound).expect("bound matches");
        let inv = m.inverse().expect("automorphism matrices are invertible");
        let basis = monomial_basis(self.nvars(), self.bound);
        let images = (0..self.nvars())
            .map(|j| {
                let col = basis
                    .iter()
                    .position(|b| *b == MultiIndex::unit(self.nvars(), j))
                    .expect("variables are basis elements");
                SeriesPoly::from_terms(
                    self.nvars(),
                    basis.iter().enumerate().map(|(i, b)| (b.clone(), inv[(i, col)].clone())),
                )
            })
            .collect();
        AutMap {
            images,
            bound: self.bound,
        }
    }

    /// `phi^* G`, defined by `<e, phi^* G> = <phi(e), G>`.
    pub fn pullback(&self, g: &DualPoly) -> Result<DualPoly> {
        self.check_arity(g.nvars())?;
        let s = g.degree().unwrap_or(0);
        if s > self.bound {
            return Err(Error::Dimension(format!(
                "pullback of a degree {s} polynomial needs the map modulo M^{}, stored only modulo M^{}",
                s + 1,
                self.bound + 1
            )));
        }
        let images: Vec<SeriesPoly> = self.images.iter().map(|z| z.truncated(s)).collect();
        let mut out = Vec::new();
        for e in monomial_basis(g.nvars(), s) {
            let img = SeriesPoly::monomial(e.clone(), Scalar::one()).substitute(&images, Some(s));
            let c = crate::dualcore::pairing(&img, g)?;
            if !c.is_zero() {
                out.push((e, c));
            }
        }
        Ok(DualPoly::from_dual_coefficients(g.nvars(), out))
    }

    fn check_arity(&self, nvars: usize) -> Result<()> {
        if nvars != self.nvars() {
            return Err(Error::VariableMismatch {
                left: self.nvars(),
                right: nvars,
            });
        }
        Ok(())
    }
}

/// `M(phi)` on `R / M^{s+1}`.
pub fn aut_matrix(phi: &AutMap, s: u32) -> Result<Matrix> {
    if s > phi.bound {
        return Err(Error::Dimension(format!(
            "map stored modulo M^{} cannot act on R/M^{}",
            phi.bound + 1,
            s + 1
        )));
    }
    let images: Vec<SeriesPoly> = phi.images.iter().map(|z| z.truncated(s)).collect();
    let basis = monomial_basis(phi.nvars(), s);
    let mut m = Matrix::zeros(basis.len(), basis.len());
    for (k, e) in basis.iter().enumerate() {
        let img = SeriesPoly::monomial(e.clone(), Scalar::one()).substitute(&images, Some(s));
        for (i, b) in basis.iter().enumerate() {
            m[(i, k)] = img.coeff(b);
        }
    }
    Ok(m)
}

/// `N(u)`: the matrix of `g -> u o g` on `P_{<=s}` in the dual basis.
pub fn unit_matrix(u: &JetElement, s: u32) -> Result<Matrix> {
    if !u.is_unit() {
        return Err(Error::precondition("unit matrix", "u(0) = 0, so u is not a unit"));
    }
    let nvars = u.nvars();
    let basis = monomial_basis(nvars, s);
    let mut n = Matrix::zeros(basis.len(), basis.len());
    for (k, e) in basis.iter().enumerate() {
        let dual = DualPoly::from_dual_coefficients(nvars, [(e.clone(), Scalar::one())]);
        let img = contract(&u.poly().truncated(s), &dual)?;
        for (i, c) in dual_coordinates(&img, s)?.into_iter().enumerate() {
            n[(i, k)] = c;
        }
    }
    Ok(n)
}

/// Solves `u o G = H` for a series `u` of degree `<= s`; `None` if no unit works.
pub fn solve_unit(g: &DualPoly, h: &DualPoly, s: u32) -> Result<Option<JetElement>> {
    if g.nvars() != h.nvars() {
        return Err(Error::VariableMismatch {
            left: g.nvars(),
            right: h.nvars(),
        });
    }
    let nvars = g.nvars();
    let basis = monomial_basis(nvars, s);
    let target = dual_coordinates(h, s)?;
    let mut a = Matrix::zeros(basis.len(), basis.len());
    for (k, e) in basis.iter().enumerate() {
        let img = contract(&SeriesPoly::monomial(e.clone(), Scalar::one()), g)?;
        for (i, c) in dual_coordinates(&img, s)?.into_iter().enumerate() {
            a[(i, k)] = c;
        }
    }
    let coeffs = match crate::dualcore::solve_linear(&a, &target) {
        Ok(c) => c,
        Err(Error::Incompatible) => return Ok(None),
        Err(e) => return Err(e),
    };
    let u = SeriesPoly::from_terms(nvars, basis.into_iter().zip(coeffs));
    let u = JetElement::new(u, s);
    Ok(u.is_unit().then_some(u))
}

/// A pair `(phi, u)` with `[G] N(u)^t M(phi) = [F]`, i.e. `F = phi^*(u o G)`.
///
/// Such a witness gives `phi(Ann F) = Ann G`, hence `R / Ann F ≅ R / Ann G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub phi: AutMap,
    pub unit: JetElement,
}

impl IsoWitness {
    pub fn identity(nvars: usize, s: u32) -> Self {
        Self {
            phi: AutMap::identity(nvars, s),
            unit: JetElement::one(nvars, s),
        }
    }

    /// Completes `phi` with the unit forced by `F = phi^*(u o G)`, if one exists.
    pub fn complete(f: &DualPoly, g: &DualPoly, phi: AutMap) -> Result<Option<Self>> {
        let s = f.degree().unwrap_or(0).max(g.degree().unwrap_or(0));
        let phi = if phi.bound() < s { phi } else { phi.with_bound(s) };
        let h = phi.inverse().pullback(f)?;
        Ok(solve_unit(g, &h, s)?.map(|unit| Self { phi, unit }))
    }

    pub fn to_document(&self) -> WitnessDocument {
        WitnessDocument {
            socle_bound: self.phi.bound(),
            substitutions: self
                .phi
                .images()
                .iter()
                .enumerate()
                .map(|(j, z)| Substitution {
                    var: format!("x{}", j + 1),
                    image: z.to_string(),
                })
                .collect(),
            unit: self.unit.to_string(),
        }
    }

    pub fn from_document(doc: &WitnessDocument) -> Result<Self> {
        let nvars = doc.substitutions.len();
        let mut images = vec![None; nvars];
        for sub in &doc.substitutions {
            let j = sub
                .var
                .strip_prefix('x')
                .and_then(|i| i.parse::<usize>().ok())
                .filter(|i| (1..=nvars).contains(i))
                .ok_or_else(|| Error::Dimension(format!("unknown substitution variable '{}'", sub.var)))?;
            let z = parse_series(&sub.image)?;
            if z.nvars() > nvars {
                return Err(Error::VariableMismatch {
                    left: nvars,
                    right: z.nvars(),
                });
            }
            images[j - 1] = Some(z.embed(nvars));
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(j, z)| z.ok_or_else(|| Error::Dimension(format!("missing substitution for x{}", j + 1))))
            .collect::<Result<Vec<_>>>()?;
        let u = parse_series(&doc.unit)?;
        if u.nvars() > nvars {
            return Err(Error::VariableMismatch {
                left: nvars,
                right: u.nvars(),
            });
        }
        let unit = JetElement::new(u.embed(nvars), doc.socle_bound);
        if !unit.is_unit() {
            return Err(Error::precondition("isomorphism witness", "the unit has zero constant term"));
        }
        Ok(Self {
            phi: AutMap::new(images, doc.socle_bound)?,
            unit,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Substitution {
    pub var: String,
    pub image: String,
}

/// Serialized form of an [`IsoWitness`]: polynomial text in the shared grammar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDocument {
    pub socle_bound: u32,
    pub substitutions: Vec<Substitution>,
    pub unit: String,
}

/// Row vector `[G] N(u)^t M(phi)`.
pub fn witness_product(g: &DualPoly, w: &IsoWitness, s: u32) -> Result<Vec<Scalar>> {
    let n = unit_matrix(&w.unit, s)?;
    let m = aut_matrix(&w.phi, s)?;
    let row = dual_coordinates(g, s)?;
    n.transpose().left_mul(&row).and_then(|r| m.left_mul(&r))
}

/// `[G] N(u)^t M(phi)` read back as a dual polynomial.
pub fn witness_image(g: &DualPoly, w: &IsoWitness, s: u32) -> Result<DualPoly> {
    Ok(from_dual_coordinates(g.nvars(), s, &witness_product(g, w, s)?))
}
