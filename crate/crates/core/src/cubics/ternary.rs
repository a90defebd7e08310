//! Plane cubic curves: Aronhold invariants, the j-invariant, singular-point
//! profiles and the classification of non-degenerate ternary cubics.

use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dualcore::{monomials_of_degree, DualPoly, Matrix, Scalar, Subspace};
use crate::error::{Error, Result};
use crate::socle3::delta_matrix;

use super::tables::{S_DENOMINATOR, S_TERMS, T_DENOMINATOR, T_TERMS};
use super::unipoly::UniPoly;

/// Seed used when the caller does not pick one.
pub const DEFAULT_SEED: u64 = 0x5eed_cafe;

/// Projective type of a non-degenerate plane cubic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TernaryCubicClass {
    ThreeLines,
    ConicTangentLine,
    ConicTransversalLine,
    NodalIrreducible,
    CuspidalIrreducible,
    EllipticFermat,
    EllipticGeneral { j: Scalar },
}

impl TernaryCubicClass {
    pub fn name(&self) -> &'static str {
        match self {
            Self::ThreeLines => "ThreeLines",
            Self::ConicTangentLine => "ConicTangentLine",
            Self::ConicTransversalLine => "ConicTransversalLine",
            Self::NodalIrreducible => "NodalIrreducible",
            Self::CuspidalIrreducible => "CuspidalIrreducible",
            Self::EllipticFermat => "EllipticFermat",
            Self::EllipticGeneral { .. } => "EllipticGeneral",
        }
    }

    pub fn j(&self) -> Option<Scalar> {
        match self {
            Self::EllipticFermat => Some(Scalar::zero()),
            Self::EllipticGeneral { j } => Some(j.clone()),
            _ => None,
        }
    }
}

impl fmt::Display for TernaryCubicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EllipticGeneral { j } => write!(f, "EllipticGeneral(j = {j})"),
            other => f.write_str(other.name()),
        }
    }
}

pub(crate) fn ternary_form(f: &DualPoly) -> Result<DualPoly> {
    if f.used_vars() > 3 {
        return Err(Error::precondition(
            "ternary cubic",
            format!("expected at most 3 variables, got {}", f.used_vars()),
        ));
    }
    if f.is_zero() || !f.is_homogeneous() || f.degree() != Some(3) {
        return Err(Error::precondition(
            "ternary cubic",
            format!("expected a nonzero homogeneous cubic, got {f}"),
        ));
    }
    Ok(if f.nvars() > 3 { f.restrict(3).expect("checked") } else { f.embed(3) })
}

/// The ten coefficients in increasing deg-lex order of the cubic monomials.
fn coefficients(f: &DualPoly) -> Vec<Scalar> {
    monomials_of_degree(3, 3).iter().map(|m| f.coeff(m)).collect()
}

fn evaluate<const K: usize>(terms: &[(i64, [usize; K])], denominator: i64, c: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero();
    for (k, idx) in terms {
        let mut term = Scalar::from_integer((*k).into());
        for &i in idx {
            if c[i].is_zero() {
                term = Scalar::zero();
                break;
            }
            term *= &c[i];
        }
        acc += term;
    }
    acc / Scalar::from_integer(denominator.into())
}

/// The degree-4 and degree-6 invariants and the discriminant `T^2 + 64 S^3`.
///
/// Normalized so that on `y1^3 + y2^3 + y3^3 + 6m y1 y2 y3` one gets
/// `S = m - m^4` and `T = 1 - 20 m^3 - 8 m^6`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AronholdInvariants {
    pub s: Scalar,
    pub t: Scalar,
    pub discriminant: Scalar,
}

pub fn aronhold_invariants(f: &DualPoly) -> Result<AronholdInvariants> {
    let f = ternary_form(f)?;
    let c = coefficients(&f);
    let s = evaluate(S_TERMS, S_DENOMINATOR, &c);
    let t = evaluate(T_TERMS, T_DENOMINATOR, &c);
    let discriminant = &t * &t + Scalar::from_integer(64.into()) * &s * &s * &s;
    Ok(AronholdInvariants { s, t, discriminant })
}

/// `j = 1728 * 64 S^3 / (T^2 + 64 S^3)`; equals `2^8 (λ^2-λ+1)^3 / (λ^2 (λ-1)^2)` on Legendre cubics.
pub fn j_invariant(f: &DualPoly) -> Result<Scalar> {
    let inv = aronhold_invariants(f)?;
    if inv.discriminant.is_zero() {
        return Err(Error::precondition(
            "j-invariant",
            format!("the curve {f} is singular (discriminant 0)"),
        ));
    }
    Ok(Scalar::from_integer(110_592.into()) * &inv.s * &inv.s * &inv.s / inv.discriminant)
}

/// `L_λ = y2^2 y3 - y1 (y1 - y3)(y1 - λ y3)`.
pub fn legendre_cubic(lambda: &Scalar) -> Result<DualPoly> {
    if lambda.is_zero() || lambda.is_one() {
        return Err(Error::precondition(
            "Legendre cubic",
            format!("λ = {lambda} gives a singular curve"),
        ));
    }
    let n = 3;
    let m = |e: [u32; 3]| crate::dualcore::MultiIndex::new(e.to_vec());
    let one = Scalar::one();
    Ok(DualPoly::from_terms(
        n,
        [
            (m([0, 2, 1]), one.clone()),
            (m([3, 0, 0]), -one.clone()),
            (m([2, 0, 1]), &one + lambda),
            (m([1, 0, 2]), -lambda.clone()),
        ],
    ))
}

/// `j` of the Legendre cubic directly from `λ`.
pub fn legendre_j(lambda: &Scalar) -> Scalar {
    let num = lambda * lambda - lambda + Scalar::one();
    let den = lambda * lambda * (lambda - Scalar::one()) * (lambda - Scalar::one());
    Scalar::from_integer(256.into()) * &num * &num * &num / den
}

fn jacobian_quotient_dimension(partials: &[DualPoly], d: u32) -> Result<usize> {
    let total = monomials_of_degree(3, d).len();
    if d < 2 {
        return Ok(total);
    }
    let gens: Vec<DualPoly> = monomials_of_degree(3, d - 2)
        .into_iter()
        .flat_map(|mu| {
            let mono = DualPoly::monomial(mu, Scalar::one());
            partials.iter().map(move |p| &mono * p).collect::<Vec<_>>()
        })
        .collect();
    Ok(total - Subspace::span(3, d, &gens)?.dim())
}

fn partials(f: &DualPoly) -> Vec<DualPoly> {
    (0..3).map(|k| f.derivative(k)).filter(|p| !p.is_zero()).collect()
}

/// `dim K[y]_d / J_d` for `d = 0..=max_degree`, `J` the ideal of first partials.
pub fn jacobian_quotient_dimensions(f: &DualPoly, max_degree: u32) -> Result<Vec<usize>> {
    let f = ternary_form(f)?;
    let p = partials(&f);
    (0..=max_degree).map(|d| jacobian_quotient_dimension(&p, d)).collect()
}

const COLENGTH_CUTOFF: u32 = 10;

/// Length of the singular scheme: the graded quotient dimensions, computed for
/// `d = 2, 3, ...`, are taken as stable at the first two equal consecutive values.
pub fn jacobian_colength(f: &DualPoly) -> Result<usize> {
    let f = ternary_form(f)?;
    let p = partials(&f);
    let mut previous = jacobian_quotient_dimension(&p, 2)?;
    for d in 3..=COLENGTH_CUTOFF + 1 {
        let current = jacobian_quotient_dimension(&p, d)?;
        if current == previous {
            return Ok(current);
        }
        previous = current;
    }
    Err(Error::Inconsistent(format!(
        "graded quotient dimensions did not stabilize by degree {COLENGTH_CUTOFF}"
    )))
}

fn random_invertible(rng: &mut ChaCha8Rng) -> Matrix {
    loop {
        let rows = (0..3)
            .map(|_| (0..3).map(|_| Scalar::from_integer(rng.gen_range(-30i64..=30).into())).collect())
            .collect();
        let m = Matrix::from_rows(rows);
        if !m.determinant().expect("square").is_zero() {
            return m;
        }
    }
}

/// Coefficients `[c0, c1, c2]` of a conic as a polynomial in `y3`, at `y1 = t`, `y2 = 1`.
fn conic_in_y3(h: &DualPoly, t: &Scalar) -> [Scalar; 3] {
    let mut out = [Scalar::zero(), Scalar::zero(), Scalar::zero()];
    for (m, c) in h.terms() {
        let mut v = c.clone();
        for _ in 0..m.exp(0) {
            v *= t;
        }
        out[m.exp(2) as usize] += v;
    }
    out
}

fn sylvester_quadratic(a: &[Scalar; 3], b: &[Scalar; 3]) -> Scalar {
    let z = Scalar::zero;
    let rows = vec![
        vec![a[2].clone(), a[1].clone(), a[0].clone(), z()],
        vec![z(), a[2].clone(), a[1].clone(), a[0].clone()],
        vec![b[2].clone(), b[1].clone(), b[0].clone(), z()],
        vec![z(), b[2].clone(), b[1].clone(), b[0].clone()],
    ];
    Matrix::from_rows(rows).determinant().expect("square")
}

/// `Res_{y3}(h1, h2)` on the chart `y2 = 1`, `y1 = t`, as a polynomial in `t`.
fn conic_resultant(h1: &DualPoly, h2: &DualPoly) -> UniPoly {
    let points: Vec<(Scalar, Scalar)> = (0..5)
        .map(|t| {
            let t = Scalar::from_integer(t.into());
            let r = sylvester_quadratic(&conic_in_y3(h1, &t), &conic_in_y3(h2, &t));
            (t, r)
        })
        .collect();
    UniPoly::interpolate(&points)
}

/// One projection attempt; `None` when the random choices were unlucky.
fn count_points_once(f: &DualPoly, rng: &mut ChaCha8Rng) -> Option<usize> {
    let g = f.linear_substitution(&random_invertible(rng));
    let partials: Vec<DualPoly> = (0..3).map(|k| g.derivative(k)).collect();
    let mut combo = || {
        let mut h = DualPoly::zero(3);
        for p in &partials {
            h = &h + &p.scale(&Scalar::from_integer(rng.gen_range(-30i64..=30).into()));
        }
        h
    };
    let (h1, h2, h3) = (combo(), combo(), combo());
    let y3_squared = crate::dualcore::MultiIndex::new(vec![0, 0, 2]);
    if [&h1, &h2, &h3].iter().any(|h| h.coeff(&y3_squared).is_zero() || h.degree() != Some(2)) {
        return None;
    }
    let r1 = conic_resultant(&h1, &h2);
    let r2 = conic_resultant(&h1, &h3);
    if r1.degree() != Some(4) || r2.degree() != Some(4) {
        return None;
    }
    r1.gcd(&r2).squarefree_part().degree()
}

/// Number of distinct singular points of a plane cubic, by randomized projection.
///
/// Each projection can merge points sharing a coordinate or pick up a spurious
/// common root, so the count is a strict majority over independent projections.
pub fn singular_point_count(f: &DualPoly, seed: u64) -> Result<usize> {
    const VOTES: usize = 5;
    let f = ternary_form(f)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = Vec::new();
    for _ in 0..200 {
        if let Some(p) = count_points_once(&f, &mut rng) {
            counts.push(p);
        }
        if counts.len() == VOTES {
            break;
        }
    }
    counts.sort_unstable();
    if counts.len() == VOTES {
        let median = counts[VOTES / 2];
        if counts.iter().filter(|&&c| c == median).count() > VOTES / 2 {
            return Ok(median);
        }
    }
    Err(Error::Inconsistent(format!(
        "singular point count did not stabilize over random projections: {counts:?}"
    )))
}

/// `(c, p)`: length of the singular scheme and number of singular points.
pub fn jacobian_scheme_profile(f: &DualPoly, seed: u64) -> Result<(usize, usize)> {
    let inv = aronhold_invariants(f)?;
    if !inv.discriminant.is_zero() {
        return Err(Error::precondition(
            "singularity profile",
            "the curve is smooth, so its singular scheme is empty",
        ));
    }
    Ok((jacobian_colength(f)?, singular_point_count(f, seed)?))
}

/// Classifies a non-degenerate plane cubic; `seed` drives the randomized point count.
pub fn classify_ternary_cubic_seeded(f: &DualPoly, seed: u64) -> Result<TernaryCubicClass> {
    let f = ternary_form(f)?;
    let rank = delta_matrix(&f)?.rank;
    if rank < 3 {
        return Err(Error::precondition(
            "plane cubic classification",
            format!("the cubic is degenerate (second partials span only {rank} linear forms); it is a cone over a form in {rank} variables"),
        ));
    }
    let inv = aronhold_invariants(&f)?;
    if !inv.discriminant.is_zero() {
        let j = j_invariant(&f)?;
        return Ok(if j.is_zero() {
            TernaryCubicClass::EllipticFermat
        } else {
            TernaryCubicClass::EllipticGeneral { j }
        });
    }
    let profile = jacobian_scheme_profile(&f, seed)?;
    match profile {
        (1, _) => Ok(TernaryCubicClass::NodalIrreducible),
        (2, 1) => Ok(TernaryCubicClass::CuspidalIrreducible),
        (2, 2) => Ok(TernaryCubicClass::ConicTransversalLine),
        (3, 3) => Ok(TernaryCubicClass::ThreeLines),
        (3, 1) => Ok(TernaryCubicClass::ConicTangentLine),
        other => Err(Error::Inconsistent(format!("unrecognized singularity profile {other:?}"))),
    }
}

pub fn classify_ternary_cubic(f: &DualPoly) -> Result<TernaryCubicClass> {
    classify_ternary_cubic_seeded(f, DEFAULT_SEED)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dualcore::{frac, int, parse_dual};

    fn y(s: &str) -> DualPoly {
        parse_dual(s).unwrap()
    }

    #[test]
    fn hesse_normalization() {
        for m in [int(0), int(1), frac(1, 2), int(-3)] {
            let mut f = y("y1^3 + y2^3 + y3^3");
            f.add_term(crate::dualcore::MultiIndex::new(vec![1, 1, 1]), int(6) * &m);
            let inv = aronhold_invariants(&f).unwrap();
            let m3 = &m * &m * &m;
            assert_eq!(inv.s, &m - &m3 * &m);
            assert_eq!(inv.t, int(1) - int(20) * &m3 - int(8) * &m3 * &m3);
        }
    }

    #[test]
    fn invariant_examples() {
        assert!(aronhold_invariants(&y("y1^3 + y2^3 + y3^3")).unwrap().s.is_zero());
        let cusp = aronhold_invariants(&y("y2^2*y3 - y1^3")).unwrap();
        assert!(cusp.s.is_zero() && cusp.t.is_zero());
        assert_eq!(j_invariant(&y("y1^3 + y2^3 + y3^3")).unwrap(), int(0));
        assert_eq!(j_invariant(&legendre_cubic(&int(-1)).unwrap()).unwrap(), int(1728));
        assert!(j_invariant(&y("y1*y2*y3")).is_err());
    }

    #[test]
    fn legendre_family() {
        assert_eq!(legendre_cubic(&int(-1)).unwrap(), y("y2^2*y3 - y1^3 + y1*y3^2"));
        assert_eq!(legendre_cubic(&int(2)).unwrap(), y("y2^2*y3 - y1^3 + 3*y1^2*y3 - 2*y1*y3^2"));
        assert!(legendre_cubic(&int(0)).is_err());
        assert!(legendre_cubic(&int(1)).is_err());
        for l in [int(2), int(3), frac(5, 2), frac(-7, 3)] {
            let f = legendre_cubic(&l).unwrap();
            assert_eq!(j_invariant(&f).unwrap(), legendre_j(&l));
            assert!(matches!(classify_ternary_cubic(&f).unwrap(), TernaryCubicClass::EllipticGeneral { .. }));
        }
        assert_eq!(j_invariant(&legendre_cubic(&int(2)).unwrap()).unwrap(), j_invariant(&legendre_cubic(&frac(1, 2)).unwrap()).unwrap());
    }

    #[test]
    fn profiles() {
        assert_eq!(jacobian_scheme_profile(&y("y2^2*y3 - y1^3"), 1).unwrap(), (2, 1));
        assert_eq!(jacobian_scheme_profile(&y("y1*y2*y3"), 1).unwrap(), (3, 3));
        assert_eq!(jacobian_scheme_profile(&y("y2^2*y3 - y1^3 - y1^2*y3"), 1).unwrap(), (1, 1));
        assert!(jacobian_scheme_profile(&y("y1^3 + y2^3 + y3^3"), 1).is_err());
        assert_eq!(jacobian_quotient_dimensions(&y("y1^3 + y2^3 + y3^3"), 5).unwrap(), vec![1, 3, 3, 1, 0, 0]);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_ternary_cubic(&y("y1*y2*y3")).unwrap(), TernaryCubicClass::ThreeLines);
        assert_eq!(classify_ternary_cubic(&y("y1*y2^2 - y2*y3^2")).unwrap(), TernaryCubicClass::ConicTangentLine);
        assert_eq!(classify_ternary_cubic(&y("y1^3 + y2^3 + y3^3")).unwrap(), TernaryCubicClass::EllipticFermat);
        assert!(matches!(classify_ternary_cubic(&y("y1^3 + y2^3")), Err(Error::Precondition { .. })));
        assert!(classify_ternary_cubic(&y("y1^3 + y2^3 + y3^3 + y4^3")).is_err());
    }
}
