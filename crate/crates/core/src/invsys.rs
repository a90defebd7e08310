//! The Macaulay correspondence between ideals `I ⊇ M^{s+1}` of `R` and
//! finitely generated `R`-submodules of `P`.
//!
//! Hilbert functions are always read off the dual side: for a submodule `V`
//! of `P`, `HF(i)` is the number of reduced basis elements of `V` whose
//! leading form has degree `i`.

use num_traits::Zero;

use crate::dualcore::{
    contract, monomial_basis, DualPoly, JetElement, Matrix, Poly, Scalar, SeriesPoly,
    Subspace,
};
use crate::error::{Error, Result};

/// `<F>_R`: the span of `F` and all of its partial derivatives.
pub fn derivative_span(f: &DualPoly) -> Subspace {
    let bound = f.degree().unwrap_or(0);
    let images: Vec<DualPoly> = monomial_basis(f.nvars(), bound)
        .into_iter()
        .map(|a| {
            contract(&SeriesPoly::monomial(a, Scalar::from_integer(1.into())), f)
                .expect("same arity")
        })
        .filter(|g| !g.is_zero())
        .collect();
    Subspace::span(f.nvars(), bound, &images).expect("derivatives stay within the degree bound")
}

fn require_nonzero(f: &DualPoly, result: &'static str) -> Result<()> {
    if f.is_zero() {
        return Err(Error::precondition(result, "the zero polynomial generates no algebra"));
    }
    Ok(())
}

/// Hilbert function of `A_F = R / Ann_R(F)` for `i = 0..=deg F`.
pub fn hilbert_function(f: &DualPoly) -> Result<Vec<usize>> {
    require_nonzero(f, "Hilbert function")?;
    Ok(derivative_span(f).leading_degree_profile())
}

/// An ideal `I` of `R` with `M^{s+1} ⊆ I`, described inside `R / M^{s+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealDescription {
    /// A basis of `I / M^{s+1}`.
    pub kbasis: Subspace,
    /// Representatives of a basis of `I / M I`. These generate `I` in `R`; some may
    /// have degree `s + 1` when `M^{s+1}` is not already inside `M I`.
    pub generators: Vec<JetElement>,
}

impl IdealDescription {
    /// The ideal generated by `gens` together with `M^{s+1}`.
    pub fn from_generators(gens: &[SeriesPoly], nvars: usize, s: u32) -> Result<Self> {
        let kbasis = ideal_span(gens, nvars, s)?;
        let wider = ideal_span(gens, nvars, s + 1)?;
        Ok(Self {
            kbasis,
            generators: minimal_generators(&wider),
        })
    }

    pub fn nvars(&self) -> usize {
        self.kbasis.nvars()
    }

    pub fn socle_bound(&self) -> u32 {
        self.kbasis.bound()
    }

    pub fn contains(&self, f: &SeriesPoly) -> bool {
        self.kbasis.contains(&f.truncated(self.socle_bound()))
    }

    /// `dim_K R / I`.
    pub fn colength(&self) -> usize {
        self.kbasis.columns().len() - self.kbasis.dim()
    }

    pub fn generator_polys(&self) -> Vec<SeriesPoly> {
        self.generators.iter().map(|g| g.poly().clone()).collect()
    }
}

fn check_arity(polys: &[SeriesPoly], nvars: usize) -> Result<()> {
    for g in polys {
        if g.nvars() != nvars {
            return Err(Error::VariableMismatch {
                left: nvars,
                right: g.nvars(),
            });
        }
    }
    Ok(())
}

/// `(gens) + M^{s+1}` intersected with `R_{<=s}`: every monomial multiple of a generator, truncated.
fn ideal_span(gens: &[SeriesPoly], nvars: usize, s: u32) -> Result<Subspace> {
    check_arity(gens, nvars)?;
    let mut polys = Vec::new();
    for g in gens {
        let g = g.truncated(s);
        if g.is_zero() {
            continue;
        }
        let low = g.min_degree().unwrap_or(0);
        for m in monomial_basis(nvars, s.saturating_sub(low)) {
            let shifted = SeriesPoly::monomial(m, Scalar::from_integer(1.into())).mul_truncated(&g, s);
            if !shifted.is_zero() {
                polys.push(shifted);
            }
        }
    }
    Subspace::span(nvars, s, &polys)
}

/// Lifts a basis of `I / M I` out of a basis of `I` (given inside `R / M^{s+1}`).
///
/// Candidates are taken in increasing order of leading monomial, so the chosen
/// representatives have minimal degree and deg-lex least leading monomials.
fn minimal_generators(kbasis: &Subspace) -> Vec<JetElement> {
    let (nvars, s) = (kbasis.nvars(), kbasis.bound());
    let basis: Vec<SeriesPoly> = kbasis.basis();
    let mut products = Vec::new();
    for b in &basis {
        for k in 0..nvars {
            let p = b.mul_truncated(&SeriesPoly::var(nvars, k), s);
            if !p.is_zero() {
                products.push(p);
            }
        }
    }
    let mut span = Subspace::span(nvars, s, &products).expect("products stay within bound");
    let mut gens = Vec::new();
    for b in basis.into_iter().rev() {
        if !span.contains(&b) {
            span = span.sum(&Subspace::span(nvars, s, std::slice::from_ref(&b)).expect("bounded"));
            gens.push(JetElement::new(b, s));
        }
    }
    gens
}

/// Kernel of the linear map `R_{<=s} -> P`, `f -> f o F`.
fn annihilator_kbasis(f: &DualPoly, s: u32) -> Subspace {
    let nvars = f.nvars();
    let target = Subspace::zero(nvars, f.degree().unwrap_or(0));
    let cols = Subspace::zero(nvars, s).columns().to_vec();
    let mut a = Matrix::zeros(target.columns().len(), cols.len());
    for (j, m) in cols.iter().enumerate() {
        let img = contract(&SeriesPoly::monomial(m.clone(), Scalar::from_integer(1.into())), f)
            .expect("same arity");
        let v = target.coords(&img).expect("image degree is bounded");
        for (i, c) in v.into_iter().enumerate() {
            a[(i, j)] = c;
        }
    }
    Subspace::from_vectors(nvars, s, a.nullspace())
}

/// `Ann_R(F)` with socle bound `s` (at least `deg F`).
pub fn annihilator(f: &DualPoly, s: u32) -> Result<IdealDescription> {
    require_nonzero(f, "annihilator")?;
    let deg = f.degree().unwrap_or(0);
    if s < deg {
        return Err(Error::precondition(
            "annihilator",
            format!("socle bound {s} is below deg F = {deg}"),
        ));
    }
    Ok(IdealDescription {
        kbasis: annihilator_kbasis(f, s),
        generators: minimal_generators(&annihilator_kbasis(f, s + 1)),
    })
}

/// `Ann_R(F)` with the default socle bound `deg F`.
pub fn annihilator_default(f: &DualPoly) -> Result<IdealDescription> {
    annihilator(f, f.degree().unwrap_or(0))
}

/// `I^⊥` for `I = (gens) + M^{s+1}`: all `g` of degree `<= s` with `gens[i] o g = 0`.
pub fn perp(gens: &[SeriesPoly], nvars: usize, s: u32) -> Result<Subspace> {
    check_arity(gens, nvars)?;
    if gens.iter().any(Poly::is_zero) {
        return Err(Error::precondition("perp", "ideal generators must be nonzero"));
    }
    let space = Subspace::zero(nvars, s);
    let cols = space.columns().to_vec();
    if gens.is_empty() {
        return Ok(Subspace::full(nvars, s));
    }
    let width = cols.len();
    let mut a = Matrix::zeros(width * gens.len(), width);
    for (j, m) in cols.iter().enumerate() {
        let y = DualPoly::monomial(m.clone(), Scalar::from_integer(1.into()));
        for (gi, g) in gens.iter().enumerate() {
            let img = contract(g, &y)?;
            for (i, c) in space.coords(&img)?.into_iter().enumerate() {
                a[(gi * width + i, j)] = c;
            }
        }
    }
    Ok(Subspace::from_vectors(nvars, s, a.nullspace()))
}

/// Whether `(g1) + M^{s+1}` and `(g2) + M^{s+1}` coincide, compared through their perps.
pub fn ideal_equal(g1: &[SeriesPoly], g2: &[SeriesPoly], nvars: usize, s: u32) -> Result<bool> {
    let nonzero = |g: &[SeriesPoly]| -> Vec<SeriesPoly> {
        g.iter().map(|p| p.truncated(s)).filter(|p| !p.is_zero()).collect()
    };
    Ok(perp(&nonzero(g1), nvars, s)? == perp(&nonzero(g2), nvars, s)?)
}

/// `V` is closed under every first partial derivative and contains `P_{<=1}`.
pub fn is_stable_subspace(v: &Subspace) -> bool {
    let nvars = v.nvars();
    let closed = v.basis::<crate::dualcore::Dual>().iter().all(|b| {
        (0..nvars).all(|k| v.contains(&b.derivative(k)))
    });
    let linear_in = v.bound() >= 1
        && v.contains(&DualPoly::one(nvars))
        && (0..nvars).all(|k| v.contains(&DualPoly::var(nvars, k)));
    closed && linear_in
}

/// How the algebra was specified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Presentation {
    DualGenerator(DualPoly),
    /// Ideal generators; `M^{s+1}` is implicitly part of the ideal.
    IdealGenerators(Vec<SeriesPoly>),
}

/// Outcome of the Gorenstein test on an inverse system `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GorensteinReport {
    pub gorenstein: bool,
    /// `dim M / (m o M)`, the socle dimension of the algebra.
    pub socle_dimension: usize,
    /// A cyclic generator of `M` when the algebra is Gorenstein.
    pub generator: Option<DualPoly>,
}

/// An Artinian local algebra `R / I` with its invariants computed at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPresentation {
    pub nvars: usize,
    pub socle_bound: u32,
    pub source: Presentation,
    pub inverse_system: Subspace,
    /// `HF(0..=socle degree)`.
    pub hilbert_function: Vec<usize>,
    pub multiplicity: usize,
    pub embedding_dimension: usize,
    pub socle_degree: u32,
    pub gorenstein: GorensteinReport,
}

impl AlgebraPresentation {
    /// `A_F = R / Ann_R(F)`.
    pub fn from_dual(f: &DualPoly) -> Result<Self> {
        require_nonzero(f, "algebra presentation")?;
        let s = f.degree().unwrap_or(0);
        Ok(Self::build(
            f.nvars(),
            s,
            Presentation::DualGenerator(f.clone()),
            derivative_span(f),
        ))
    }

    /// `R / ((gens) + M^{s+1})`.
    pub fn from_ideal(gens: &[SeriesPoly], nvars: usize, s: u32) -> Result<Self> {
        let gens: Vec<SeriesPoly> = gens.iter().map(|g| g.truncated(s)).filter(|g| !g.is_zero()).collect();
        let v = perp(&gens, nvars, s)?;
        Ok(Self::build(nvars, s, Presentation::IdealGenerators(gens), v))
    }

    fn build(nvars: usize, s: u32, source: Presentation, v: Subspace) -> Self {
        let mut hf = v.leading_degree_profile();
        while hf.len() > 1 && hf.last() == Some(&0) {
            hf.pop();
        }
        let gorenstein = gorenstein_report(&v);
        Self {
            nvars,
            socle_bound: s,
            source,
            multiplicity: v.dim(),
            embedding_dimension: hf.get(1).copied().unwrap_or(0),
            socle_degree: (hf.len() - 1) as u32,
            hilbert_function: hf,
            inverse_system: v,
            gorenstein,
        }
    }

    pub fn annihilator(&self) -> Result<IdealDescription> {
        match &self.source {
            Presentation::DualGenerator(f) => annihilator(f, self.socle_bound),
            Presentation::IdealGenerators(g) => {
                IdealDescription::from_generators(g, self.nvars, self.socle_bound)
            }
        }
    }
}

fn gorenstein_report(v: &Subspace) -> GorensteinReport {
    let nvars = v.nvars();
    let basis: Vec<DualPoly> = v.basis();
    let partials: Vec<DualPoly> = basis
        .iter()
        .flat_map(|b| (0..nvars).map(move |k| b.derivative(k)))
        .filter(|p| !p.is_zero())
        .collect();
    let inner = Subspace::span(nvars, v.bound(), &partials).expect("derivatives lower degree");
    let socle_dimension = v.dim() - inner.dim();
    let generator = if socle_dimension == 1 {
        basis.into_iter().find(|b| !inner.contains(b))
    } else {
        None
    };
    GorensteinReport {
        gorenstein: socle_dimension == 1,
        socle_dimension,
        generator,
    }
}

/// Gorenstein test: the inverse system is cyclic, i.e. the socle has dimension one.
pub fn is_gorenstein(a: &AlgebraPresentation) -> &GorensteinReport {
    &a.gorenstein
}

/// `Q(0) = R / Ann_R(F_s)` where `F_s` is the top-degree form of `F`.
pub fn top_form_quotient(f: &DualPoly) -> Result<AlgebraPresentation> {
    require_nonzero(f, "top-form quotient")?;
    AlgebraPresentation::from_dual(&f.top_form())
}

/// True iff `HF(A_F)` is a palindrome (then the associated graded ring is Gorenstein and equals `Q(0)`).
pub fn symmetric_hf_criterion(f: &DualPoly) -> Result<bool> {
    let hf = hilbert_function(f)?;
    Ok(hf.iter().eq(hf.iter().rev()))
}

/// Dual coordinate vector `[G]_{E*}` on the basis `E` of `R / M^{s+1}` (increasing deg-lex).
pub fn dual_coordinates(g: &DualPoly, s: u32) -> Result<Vec<Scalar>> {
    if g.degree().unwrap_or(0) > s {
        return Err(Error::Dimension(format!(
            "polynomial of degree {} does not lie in P_<={s}",
            g.degree().unwrap_or(0)
        )));
    }
    Ok(monomial_basis(g.nvars(), s)
        .iter()
        .map(|m| g.dual_coefficient(m))
        .collect())
}

/// Inverse of [`dual_coordinates`].
pub fn from_dual_coordinates(nvars: usize, s: u32, coords: &[Scalar]) -> DualPoly {
    DualPoly::from_dual_coefficients(
        nvars,
        monomial_basis(nvars, s)
            .into_iter()
            .zip(coords.iter().cloned())
            .filter(|(_, c)| !c.is_zero()),
    )
}
