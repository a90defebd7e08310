//! Normal forms of Gorenstein algebras with small Hilbert functions, as data.

use crate::dualcore::{parse_dual, parse_series, DualPoly, Scalar, SeriesPoly};

/// One model algebra `R / I` together with its dual generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelRow {
    /// Class identifier (a binary or plane cubic type, or a socle-four family).
    pub class: &'static str,
    pub geometry: String,
    pub hilbert_function: Vec<usize>,
    pub nvars: usize,
    pub ideal: Vec<SeriesPoly>,
    pub dual_generator: DualPoly,
}

fn row(class: &'static str, geometry: &str, hf: &[usize], nvars: usize, ideal: &[&str], dual: &str) -> ModelRow {
    ModelRow {
        class,
        geometry: geometry.to_string(),
        hilbert_function: hf.to_vec(),
        nvars,
        ideal: ideal.iter().map(|g| parse_series(g).expect("table entry").embed(nvars)).collect(),
        dual_generator: parse_dual(dual).expect("table entry").embed(nvars),
    }
}

/// The smooth plane cubic `L_λ` with its complete-intersection annihilator `(x1 x2, H1, H2)`.
pub fn legendre_model(lambda: &Scalar) -> ModelRow {
    use crate::dualcore::MultiIndex;
    let one = Scalar::from_integer(1.into());
    let l2 = lambda * lambda;
    let x = |e: [u32; 3], c: Scalar| (MultiIndex::new(e.to_vec()), c);
    let h1 = SeriesPoly::from_terms(
        3,
        [
            x([2, 0, 0], l2.clone()),
            x([1, 0, 1], lambda * (&one + lambda)),
            x([0, 0, 2], &l2 - lambda + &one),
        ],
    );
    let h2 = SeriesPoly::from_terms(
        3,
        [
            x([0, 2, 0], l2.clone()),
            x([1, 0, 1], lambda.clone()),
            x([0, 0, 2], &one + lambda),
        ],
    );
    ModelRow {
        class: "EllipticGeneral",
        geometry: format!("Elliptic non Fermat curve (λ = {lambda})"),
        hilbert_function: vec![1, 3, 3, 1],
        nvars: 3,
        ideal: vec![parse_series("x1*x2").expect("literal").embed(3), h1, h2],
        dual_generator: super::legendre_cubic(lambda).expect("λ = 0, 1 excluded by callers"),
    }
}

/// Every published model, with the elliptic family instantiated at `λ = 2`.
pub fn model_table() -> Vec<ModelRow> {
    const BIN: &[usize] = &[1, 2, 2, 1];
    const TER: &[usize] = &[1, 3, 3, 1];
    const QUA: &[usize] = &[1, 2, 2, 2, 1];
    vec![
        row("DoublePlusSimple", "Double point plus a simple point", BIN, 2, &["x1^3", "x2^2"], "y1^2*y2"),
        // the published ideal has x1^3 - x2^3, which annihilates y1^3 + y2^3 instead
        row("ThreeDistinct", "Three distinct points", BIN, 2, &["x1*x2", "x1^3 + x2^3"], "y1^3 - y2^3"),
        row("ThreeLines", "Three independent lines", TER, 3, &["x1^2", "x2^2", "x3^2"], "y1*y2*y3"),
        row(
            "ConicTangentLine",
            "Conic and a tangent line",
            TER,
            3,
            &["x1^2", "x1*x3", "x3*x2^2", "x2^3", "x3^2 + x1*x2"],
            "y2*y1*y2 - y2*y3^2",
        ),
        row(
            "ConicTransversalLine",
            "Conic and a non-tangent line",
            TER,
            3,
            &["x1^2", "x2^2", "x3^2 + 6*x1*x2"],
            "y3*y1*y2 - y3^3",
        ),
        row(
            "NodalIrreducible",
            "Irreducible nodal cubic",
            TER,
            3,
            &["x3^2", "x1*x2", "x1^2 + x2^2 - 3*x1*x3"],
            "y2^2*y3 - y1^3 - y1^2*y3",
        ),
        row(
            "CuspidalIrreducible",
            "Irreducible cuspidal cubic",
            TER,
            3,
            &["x3^2", "x1*x2", "x1*x3", "x2^3", "x1^3 + 3*x2^2*x3"],
            "y2^2*y3 - y1^3",
        ),
        row(
            "EllipticFermat",
            "Elliptic Fermat curve",
            TER,
            3,
            &["x2*x3", "x1*x3", "x1*x2", "x2^3 - x3^3", "x1^3 - x3^3"],
            "y1^3 + y2^3 + y3^3",
        ),
        legendre_model(&Scalar::from_integer(2.into())),
        row("SocleFourGraded", "Canonically graded, monomial inverse system", QUA, 2, &["x1^4", "x2^2"], "y1^3*y2"),
        row("SocleFourNonGraded", "Not canonically graded", QUA, 2, &["x1^4", "-x1^3 + x2^2"], "y1^3*y2 + y2^3"),
        row(
            "SocleFourBinomial",
            "Canonically graded, binomial inverse system",
            QUA,
            2,
            &["x1^2 + x2^2", "x2^4"],
            "y1^3*y2 - y1*y2^3",
        ),
    ]
}
