//! Built-in self check: every model-table row plus seeded runs of the main identities.
//!
//! Suites are independent and run on worker threads; the report lists them in a fixed order.

use std::panic::{catch_unwind, AssertUnwindSafe};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cubics::{
    classify_ternary_cubic, j_invariant, jacobian_scheme_profile, legendre_cubic, legendre_j, legendre_model,
    model_table,
};
use crate::dualcore::{binomial, contract, monomials_of_degree, parse_dual, Scalar, SeriesPoly};
use crate::invsys::{annihilator, annihilator_default, derivative_span, hilbert_function, ideal_equal};
use crate::random;
use crate::socle3::{aut_matrix, grading_system, normalize_socle3, verify_iso, AutMap, IsoWitness};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelftestCase {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelftestReport {
    pub seed: u64,
    pub total: usize,
    pub failed: usize,
    pub cases: Vec<SelftestCase>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn run_case(name: String, body: impl FnOnce() -> Check) -> SelftestCase {
    let outcome = catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Err(format!("panicked: {msg}"))
    });
    SelftestCase {
        name,
        passed: outcome.is_ok(),
        detail: outcome.err(),
    }
}

fn fixtures() -> Vec<SelftestCase> {
    let mut cases: Vec<SelftestCase> = model_table()
        .into_iter()
        .map(|row| {
            run_case(format!("fixture/{}", row.class), move || {
                let f = &row.dual_generator;
                let s = f.degree().unwrap_or(0);
                let ann = annihilator_default(f).map_err(err)?;
                ensure(
                    ideal_equal(&row.ideal, &ann.generator_polys(), row.nvars, s).map_err(err)?,
                    || "annihilator differs from the tabulated ideal".into(),
                )?;
                let hf = hilbert_function(f).map_err(err)?;
                ensure(hf == row.hilbert_function, || format!("Hilbert function {hf:?}"))
            })
        })
        .collect();
    for (num, den) in [(2, 1), (3, 1), (-1, 1), (5, 2)] {
        let l = Scalar::new(num.into(), den.into());
        cases.push(run_case(format!("fixture/legendre {l}"), move || {
            let row = legendre_model(&l);
            let ann = annihilator(&row.dual_generator, 3).map_err(err)?;
            ensure(
                ideal_equal(&row.ideal, &ann.generator_polys(), 3, 3).map_err(err)?,
                || "annihilator differs from (x1 x2, H1, H2)".into(),
            )
        }));
    }
    cases
}

fn duality(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    for _ in 0..trials {
        let m = rng.gen_range(1..=3);
        let d = rng.gen_range(1..=4);
        let g = random::dual_poly(rng, m, d, 5, 0.5);
        let f = random::series_poly(rng, m, 2, 5, 0.6);
        let h = random::series_poly(rng, m, 2, 5, 0.6);
        let lhs = contract(&(&f * &h), &g).map_err(err)?;
        let rhs = contract(&f, &contract(&h, &g).map_err(err)?).map_err(err)?;
        ensure(lhs == rhs, || format!("composition law fails on {g}"))?;
        if g.is_zero() {
            continue;
        }
        let s = g.degree().unwrap();
        let span = derivative_span(&g);
        let ann = annihilator(&g, s).map_err(err)?;
        let total: usize = binomial((m as u32 + s) as u64, s as u64).try_into().unwrap();
        ensure(ann.kbasis.dim() + span.dim() == total, || format!("rank-nullity fails on {g}"))?;
        let hf = hilbert_function(&g).map_err(err)?;
        ensure(hf.iter().sum::<usize>() == span.dim(), || format!("multiplicity differs on {g}"))?;
        for mono in monomials_of_degree(m, s + 1) {
            let x = SeriesPoly::monomial(mono, Scalar::one());
            ensure(contract(&x, &g).map_err(err)?.is_zero(), || format!("M^(s+1) misses {g}"))?;
        }
    }
    Ok(())
}

fn aut_products(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    let make = |rng: &mut ChaCha8Rng, m: usize, s: u32| {
        let t = random::invertible_matrix(rng, m, 3);
        let lin = AutMap::linear(&t, s).map_err(err)?;
        let images = lin
            .images()
            .iter()
            .map(|z| z + &random::series_poly(rng, m, s, 3, 0.4).filter(|e| e.degree() >= 2))
            .collect();
        AutMap::new(images, s).map_err(err)
    };
    for _ in 0..trials {
        let m = rng.gen_range(1..=3);
        let s = rng.gen_range(1..=3);
        let (phi, psi) = (make(rng, m, s)?, make(rng, m, s)?);
        let lhs = aut_matrix(&phi.compose(&psi), s).map_err(err)?;
        let rhs = aut_matrix(&phi, s)
            .map_err(err)?
            .try_mul(&aut_matrix(&psi, s).map_err(err)?)
            .map_err(err)?;
        ensure(lhs == rhs, || "matrix of a composition is not the product".into())?;
    }
    Ok(())
}

fn grading(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    for case in 0..trials {
        let n = 1 + case % 4;
        let f3 = random::nondegenerate_cubic(rng, n, 9);
        let f = &f3 + &random::form(rng, n, 2, 9);
        let sys = grading_system(&f3, n).map_err(err)?;
        ensure(sys.rank() == sys.expected_rank(), || format!("rank deficit for {f3}"))?;
        let phi = sys.solve(&f.homogeneous_part(2)).map_err(err)?;
        let w = IsoWitness::complete(&f, &f3, phi)
            .map_err(err)?
            .ok_or_else(|| format!("no unit for {f}"))?;
        ensure(verify_iso(&f, &f3, &w).map_err(err)?, || format!("witness rejected for {f}"))?;
    }
    Ok(())
}

fn normal_forms(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    for _ in 0..trials {
        let n = rng.gen_range(1..=3);
        let m = rng.gen_range(n.max(2)..=5);
        let f = random::socle3_generator(rng, m, n, 5);
        let nf = normalize_socle3(&f).map_err(err)?;
        ensure(verify_iso(&f, &nf.normal, &nf.witness).map_err(err)?, || format!("witness rejected for {f}"))?;
        ensure(nf.lambdas.iter().all(|l| !l.is_zero()), || format!("zero square coefficient for {f}"))?;
    }
    Ok(())
}

fn classifier(rng: &mut ChaCha8Rng, trials: usize) -> Check {
    let three = Scalar::from_integer(3.into());
    let mut forms: Vec<_> = [
        "y1*y2*y3",
        "y1*y2^2 - y2*y3^2",
        "y1*y2*y3 - y3^3",
        "y2^2*y3 - y1^3 - y1^2*y3",
        "y2^2*y3 - y1^3",
        "y1^3 + y2^3 + y3^3",
    ]
    .iter()
    .map(|s| parse_dual(s).expect("fixed form"))
    .collect();
    forms.push(legendre_cubic(&three).map_err(err)?);
    for f in &forms {
        let class = classify_ternary_cubic(f).map_err(err)?;
        for _ in 0..trials {
            let g = f.linear_substitution(&random::invertible_matrix(rng, 3, 3));
            let moved = classify_ternary_cubic(&g).map_err(err)?;
            ensure(moved == class, || format!("{f} is {class} but {g} is {moved}"))?;
        }
    }
    let j = j_invariant(&forms[6]).map_err(err)?;
    ensure(j == legendre_j(&three), || format!("j = {j} on the Legendre form"))?;
    let expected = [(3, 3), (3, 1), (2, 2), (1, 1), (2, 1)];
    for (f, want) in forms.iter().zip(expected) {
        let got = jacobian_scheme_profile(f, rng.gen()).map_err(err)?;
        ensure(got == want, || format!("profile {got:?} for {f}"))?;
    }
    Ok(())
}

/// Runs the fixture corpus and the seeded property suites.
pub fn selftest(seed: u64) -> SelftestReport {
    type Suite = (&'static str, fn(&mut ChaCha8Rng, usize) -> Check, usize);
    let suites: [Suite; 5] = [
        ("property/duality invariants", duality, 60),
        ("property/automorphism matrices", aut_products, 30),
        ("property/canonical grading", grading, 24),
        ("property/normal form", normal_forms, 12),
        ("property/classifier invariance", classifier, 5),
    ];
    let mut cases = std::thread::scope(|scope| {
        let fixtures = scope.spawn(fixtures);
        let handles: Vec<_> = suites
            .iter()
            .enumerate()
            .map(|(k, &(name, suite, trials))| {
                scope.spawn(move || {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64));
                    run_case(name.to_string(), || suite(&mut rng, trials))
                })
            })
            .collect();
        let mut cases = fixtures.join().expect("fixture thread");
        cases.extend(handles.into_iter().map(|h| h.join().expect("suite thread")));
        cases
    });
    cases.sort_by(|a, b| a.name.cmp(&b.name));
    let failed = cases.iter().filter(|c| !c.passed).count();
    SelftestReport {
        seed,
        total: cases.len(),
        failed,
        cases,
    }
}
