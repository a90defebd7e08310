//! Certified isomorphisms between Gorenstein algebras of socle degree three.

use crate::cubics::{classify_binary_cubic, classify_ternary_cubic, BinaryCubicClass};
use crate::dualcore::{DualPoly, Matrix};
use crate::error::{Error, Result};
use crate::invsys::{annihilator, dual_coordinates, hilbert_function, ideal_equal};

use super::aut::{witness_product, IsoWitness};
use super::grading::delta_matrix;
use super::normal::{normalize_socle3, NormalForm};

/// Checks `[G] N(u)^t M(phi) = [F]` exactly.
///
/// When the identity holds, the induced ideal transport `phi(Ann F) = Ann G`
/// is confirmed as well; a disagreement there is reported as an internal error.
pub fn verify_iso(f: &DualPoly, g: &DualPoly, w: &IsoWitness) -> Result<bool> {
    let nvars = f.nvars();
    for other in [g.nvars(), w.phi.nvars(), w.unit.nvars()] {
        if other != nvars {
            return Err(Error::VariableMismatch { left: nvars, right: other });
        }
    }
    let s = f.degree().unwrap_or(0).max(g.degree().unwrap_or(0));
    if w.phi.bound() < s {
        return Err(Error::Dimension(format!(
            "witness is stored modulo M^{} but the algebras need M^{}",
            w.phi.bound() + 1,
            s + 1
        )));
    }
    if !w.unit.is_unit() {
        return Ok(false);
    }
    let holds = witness_product(g, w, s)? == dual_coordinates(f, s)?;
    if holds && !f.is_zero() {
        let ann_f = annihilator(f, s)?.generator_polys();
        let moved: Vec<_> = ann_f.iter().map(|p| w.phi.apply(p)).collect();
        let ann_g = annihilator(g, s)?.generator_polys();
        if !ideal_equal(&moved, &ann_g, nvars, s)? {
            return Err(Error::Inconsistent(
                "matrix identity holds but the annihilators are not transported".into(),
            ));
        }
    }
    Ok(holds)
}

/// Checks `[G] NT M = [F]` for explicitly given matrices (`NT` standing for `N(u)^t`).
pub fn verify_matrix_identity(f: &DualPoly, g: &DualPoly, nt: &Matrix, m: &Matrix) -> Result<bool> {
    if f.nvars() != g.nvars() {
        return Err(Error::VariableMismatch { left: f.nvars(), right: g.nvars() });
    }
    let s = f.degree().unwrap_or(0).max(g.degree().unwrap_or(0));
    let row = dual_coordinates(g, s)?;
    Ok(m.left_mul(&nt.left_mul(&row)?)? == dual_coordinates(f, s)?)
}

/// Outcome of the isomorphism test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoDecision {
    /// Isomorphic (over the algebraic closure). A rational witness is attached when one was built.
    Isomorphic { witness: Option<IsoWitness>, reason: String },
    NotIsomorphic { reason: String },
    /// Equal discrete invariants, but no decision procedure for cubic forms in this many variables.
    Undecided { hf: Vec<usize>, delta_rank: usize },
}

fn top_forms_equivalent(a: &DualPoly, b: &DualPoly) -> Result<Option<(bool, String)>> {
    let n = a.nvars();
    Ok(match n {
        1 => Some((true, "both cubic parts are cubes of a linear form".into())),
        2 => {
            let (ca, cb) = (classify_binary_cubic(a)?, classify_binary_cubic(b)?);
            if ca == BinaryCubicClass::PerfectCube || cb == BinaryCubicClass::PerfectCube {
                return Err(Error::Inconsistent("normal-form cubic is degenerate".into()));
            }
            Some((ca == cb, format!("binary cubic types {ca:?} and {cb:?}")))
        }
        3 => {
            let (ca, cb) = (classify_ternary_cubic(a)?, classify_ternary_cubic(b)?);
            Some((ca == cb, format!("plane cubic types {ca} and {cb}")))
        }
        _ => None,
    })
}

/// Decides whether `A_F ≅ A_G` for Gorenstein algebras of socle degree three.
///
/// The algebras are isomorphic exactly when the Hilbert functions agree and
/// the cubic parts of their normal forms are projectively equivalent.
pub fn iso_socle3(f: &DualPoly, g: &DualPoly) -> Result<IsoDecision> {
    for p in [f, g] {
        if p.degree() != Some(3) {
            return Err(Error::precondition(
                "socle-three isomorphism",
                format!("input {p} is not a cubic"),
            ));
        }
    }
    let (hf_f, hf_g) = (hilbert_function(f)?, hilbert_function(g)?);
    if hf_f != hf_g {
        return Ok(IsoDecision::NotIsomorphic {
            reason: format!("Hilbert functions differ: {hf_f:?} vs {hf_g:?}"),
        });
    }
    let (nf, ng): (NormalForm, NormalForm) = (normalize_socle3(f)?, normalize_socle3(g)?);
    let witness = if nf.normal == ng.normal {
        let phi = ng.witness.phi.inverse().compose(&nf.witness.phi);
        IsoWitness::complete(f, g, phi)?
    } else {
        None
    };
    if let Some(w) = witness {
        if verify_iso(f, g, &w)? {
            return Ok(IsoDecision::Isomorphic {
                witness: Some(w),
                reason: "both reduce to the same normal form".into(),
            });
        }
    }
    match top_forms_equivalent(&nf.cubic, &ng.cubic)? {
        Some((true, reason)) => Ok(IsoDecision::Isomorphic { witness: None, reason }),
        Some((false, reason)) => Ok(IsoDecision::NotIsomorphic { reason }),
        None => Ok(IsoDecision::Undecided {
            hf: hf_f,
            delta_rank: delta_matrix(&nf.cubic)?.rank,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubics::legendre_cubic;
    use crate::dualcore::{frac, int, parse_dual, parse_series, JetElement};
    use crate::socle3::{canonical_grading_witness, AutMap};

    fn y(s: &str) -> DualPoly {
        parse_dual(s).unwrap()
    }

    #[test]
    fn identity_witness() {
        let f = y("y1^2*y2 + y1*y3^2");
        assert!(verify_iso(&f, &f, &IsoWitness::identity(3, 3)).unwrap());
    }

    #[test]
    fn one_variable_certificate() {
        let f = y("y1^3 + y1^2");
        let g = y("y1^3");
        let w = canonical_grading_witness(&f).unwrap();
        assert!(verify_iso(&f, &g, &w).unwrap());
        let bad = IsoWitness {
            phi: AutMap::new(vec![parse_series("x1 + 1/5*x1^2").unwrap()], 3).unwrap(),
            unit: w.unit.clone(),
        };
        assert!(!verify_iso(&f, &g, &bad).unwrap());
    }

    #[test]
    fn inequivalent_models_reject_witnesses() {
        let f = y("y1^2*y2");
        let g = y("y1^3 - y2^3");
        assert!(!verify_iso(&f, &g, &IsoWitness::identity(2, 3)).unwrap());
        let w = IsoWitness {
            phi: AutMap::new(vec![parse_series("x1 + x2").unwrap(), parse_series("x1 - x2 + x1^2").unwrap()], 3).unwrap(),
            unit: JetElement::new(parse_series("3 + x1").unwrap().embed(2), 3),
        };
        assert!(!verify_iso(&f, &g, &w).unwrap());
    }

    #[test]
    fn mismatched_arity() {
        assert!(verify_iso(&y("y1^3"), &y("y1^3 + y2^3"), &IsoWitness::identity(1, 3)).is_err());
    }

    #[test]
    fn decisions() {
        assert!(matches!(iso_socle3(&y("y1^2*y2"), &y("y1^3 - y2^3")).unwrap(), IsoDecision::NotIsomorphic { .. }));
        match iso_socle3(&y("y1*y2*y3 + y1^2"), &y("y1*y2*y3")).unwrap() {
            IsoDecision::Isomorphic { witness: Some(w), .. } => {
                assert!(verify_iso(&y("y1*y2*y3 + y1^2"), &y("y1*y2*y3"), &w).unwrap())
            }
            other => panic!("{other:?}"),
        }
        let (a, b) = (legendre_cubic(&int(2)).unwrap(), legendre_cubic(&frac(1, 2)).unwrap());
        assert!(matches!(iso_socle3(&a, &b).unwrap(), IsoDecision::Isomorphic { .. }));
        let c = legendre_cubic(&int(3)).unwrap();
        assert!(matches!(iso_socle3(&a, &legendre_cubic(&int(-1)).unwrap()).unwrap(), IsoDecision::Isomorphic { .. }));
        assert!(matches!(iso_socle3(&a, &c).unwrap(), IsoDecision::NotIsomorphic { .. }));
        assert!(matches!(iso_socle3(&y("y1^3 + y2^2"), &y("y1^3 - 2*y2^2 + y1*y2")).unwrap(), IsoDecision::Isomorphic { .. }));
        assert!(matches!(iso_socle3(&y("y1^3 + y2^2"), &y("y1^2*y2")).unwrap(), IsoDecision::NotIsomorphic { .. }));
        assert!(matches!(iso_socle3(&y("y1^3 + y2^2"), &y("y1^3 + y1*y2")).unwrap(), IsoDecision::NotIsomorphic { .. }));
        let quartic = y("y1*y2*y3*y4");
        assert!(iso_socle3(&quartic, &quartic).is_err());
        let s4 = y("y1^3 + y2^3 + y3^3 + y4^3");
        assert!(matches!(iso_socle3(&s4, &y("y1^3 + y2^3 + y3^3 + y1*y2*y4 + y4^3")).unwrap(), IsoDecision::Undecided { .. }));
        assert!(matches!(iso_socle3(&s4, &s4).unwrap(), IsoDecision::Isomorphic { witness: Some(_), .. }));
    }
}
