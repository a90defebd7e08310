//! Binary cubic forms up to linear change of coordinates.

use std::fmt;

use num_traits::Zero;

use crate::dualcore::{DualPoly, MultiIndex, Scalar};
use crate::error::{Error, Result};
use crate::socle3::delta_matrix;

/// Configuration of the three roots of a binary cubic in `P^1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BinaryCubicClass {
    /// `L^3`: degenerate, gives no `{1,2,2,1}` algebra.
    PerfectCube,
    DoublePlusSimple,
    ThreeDistinct,
}

impl BinaryCubicClass {
    pub fn name(self) -> &'static str {
        match self {
            Self::PerfectCube => "PerfectCube",
            Self::DoublePlusSimple => "DoublePlusSimple",
            Self::ThreeDistinct => "ThreeDistinct",
        }
    }

    pub fn is_degenerate(self) -> bool {
        self == Self::PerfectCube
    }
}

impl fmt::Display for BinaryCubicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub(crate) fn binary_form(f: &DualPoly) -> Result<DualPoly> {
    if f.nvars() > 2 && f.used_vars() > 2 {
        return Err(Error::precondition(
            "binary cubic",
            format!("expected at most 2 variables, got {}", f.nvars()),
        ));
    }
    if f.is_zero() || !f.is_homogeneous() || f.degree() != Some(3) {
        return Err(Error::precondition(
            "binary cubic",
            format!("expected a nonzero homogeneous cubic, got {f}"),
        ));
    }
    Ok(if f.nvars() > 2 { f.restrict(2).expect("checked") } else { f.embed(2) })
}

/// `(a, b, c, d)` for `a y1^3 + b y1^2 y2 + c y1 y2^2 + d y2^3`.
pub(crate) fn binary_coefficients(f: &DualPoly) -> [Scalar; 4] {
    [3, 2, 1, 0].map(|e| f.coeff(&MultiIndex::new(vec![e, 3 - e])))
}

/// `b^2c^2 - 4ac^3 - 4b^3d - 27a^2d^2 + 18abcd`.
pub fn binary_discriminant(f: &DualPoly) -> Result<Scalar> {
    let f = binary_form(f)?;
    let [a, b, c, d] = binary_coefficients(&f);
    let n = |v: i64| Scalar::from_integer(v.into());
    Ok(&b * &b * &c * &c - n(4) * &a * &c * &c * &c - n(4) * &b * &b * &b * &d
        - n(27) * &a * &a * &d * &d
        + n(18) * &a * &b * &c * &d)
}

pub fn classify_binary_cubic(f: &DualPoly) -> Result<BinaryCubicClass> {
    let f = binary_form(f)?;
    if delta_matrix(&f)?.rank == 1 {
        return Ok(BinaryCubicClass::PerfectCube);
    }
    Ok(if binary_discriminant(&f)?.is_zero() {
        BinaryCubicClass::DoublePlusSimple
    } else {
        BinaryCubicClass::ThreeDistinct
    })
}
