use std::fs;
use std::path::Path;

use macaulay_core::cubics::{
    aronhold_invariants, binary_discriminant, classify_binary_cubic, classify_ternary_cubic_seeded, j_invariant,
    jacobian_scheme_profile, legendre_cubic, legendre_j, legendre_model, model_table, ModelRow, TernaryCubicClass,
    DEFAULT_SEED,
};
use macaulay_core::dualcore::{parse_poly, DualPoly, ParsedPoly, Scalar, SeriesPoly};
use macaulay_core::invsys::{
    annihilator, hilbert_function, is_gorenstein, symmetric_hf_criterion, top_form_quotient, AlgebraPresentation,
};
use macaulay_core::selftest::selftest;
use macaulay_core::socle3::{
    canonical_grading_witness, delta_matrix, iso_socle3, normalize_socle3, verify_iso, IsoDecision, IsoWitness,
    WitnessDocument,
};
use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

use crate::args::{Cli, Command};
use crate::document::{Document, Failure, InputEcho};

type Outcome = Result<Map<String, Value>, Failure>;

/// Reads polynomial arguments, tracking the echo shown in the output.
struct Inputs {
    nvars_override: Option<usize>,
    echo: Vec<InputEcho>,
}

#[derive(Copy, Clone, PartialEq, Eq)]
enum Side {
    Dual,
    Series,
}

impl Inputs {
    fn parse(&self, text: &str) -> Result<ParsedPoly, Failure> {
        parse_poly(text).map_err(|e| Failure::parse(text, e))
    }

    fn arity(&self, used: usize) -> Result<(usize, bool), Failure> {
        match self.nvars_override {
            Some(n) if n < used => Err(Failure::input(format!(
                "--nvars {n} is smaller than the {used} variables used"
            ))),
            Some(n) => Ok((n, false)),
            None => Ok((used.max(1), true)),
        }
    }

    /// Parses several arguments of one side, embedded in a common number of variables.
    fn many(&mut self, roles: &[String], texts: &[String], side: Side) -> Result<Vec<ParsedPoly>, Failure> {
        let mut parsed = Vec::new();
        for text in texts {
            let p = self.parse(text)?;
            let wrong = match (&p, side) {
                (ParsedPoly::Series(_), Side::Dual) => Some("dual generators use y variables"),
                (ParsedPoly::Dual(_), Side::Series) => Some("ideal generators use x variables"),
                _ => None,
            };
            if let Some(msg) = wrong {
                return Err(Failure::Input {
                    message: msg.into(),
                    text: Some(text.clone()),
                    position: Some(0),
                });
            }
            parsed.push(p);
        }
        let used = parsed.iter().map(used_vars).max().unwrap_or(0);
        let (nvars, inferred) = self.arity(used)?;
        for (role, text) in roles.iter().zip(texts) {
            self.echo.push(InputEcho {
                role: role.clone(),
                text: text.clone(),
                nvars,
                inferred,
            });
        }
        Ok(parsed.into_iter().map(|p| embed(p, nvars, side)).collect())
    }

    fn duals(&mut self, roles: &[&str], texts: &[&String]) -> Result<Vec<DualPoly>, Failure> {
        let roles: Vec<String> = roles.iter().map(|r| r.to_string()).collect();
        let texts: Vec<String> = texts.iter().map(|t| t.to_string()).collect();
        Ok(self
            .many(&roles, &texts, Side::Dual)?
            .into_iter()
            .map(|p| match p {
                ParsedPoly::Dual(d) => d,
                _ => unreachable!("embedded as dual"),
            })
            .collect())
    }

    fn dual(&mut self, role: &str, text: &String) -> Result<DualPoly, Failure> {
        Ok(self.duals(&[role], &[text])?.remove(0))
    }

    fn series(&mut self, texts: &[String]) -> Result<Vec<SeriesPoly>, Failure> {
        let roles: Vec<String> = (1..=texts.len()).map(|k| format!("g{k}")).collect();
        self.series_with_roles(&roles, texts)
    }

    fn series_with_roles(&mut self, roles: &[String], texts: &[String]) -> Result<Vec<SeriesPoly>, Failure> {
        Ok(self
            .many(roles, texts, Side::Series)?
            .into_iter()
            .map(|p| match p {
                ParsedPoly::Series(s) => s,
                _ => unreachable!("embedded as series"),
            })
            .collect())
    }
}

fn used_vars(p: &ParsedPoly) -> usize {
    match p {
        ParsedPoly::Series(s) => s.nvars(),
        ParsedPoly::Dual(d) => d.nvars(),
        ParsedPoly::Constant(_) => 0,
    }
}

/// A constant argument takes the side the command asks for.
fn embed(p: ParsedPoly, nvars: usize, side: Side) -> ParsedPoly {
    match (p, side) {
        (ParsedPoly::Series(s), _) => ParsedPoly::Series(s.embed(nvars)),
        (ParsedPoly::Dual(d), _) => ParsedPoly::Dual(d.embed(nvars)),
        (ParsedPoly::Constant(c), Side::Dual) => ParsedPoly::Dual(DualPoly::constant(nvars, c)),
        (ParsedPoly::Constant(c), Side::Series) => ParsedPoly::Series(SeriesPoly::constant(nvars, c)),
    }
}

fn scalar(text: &str) -> Result<Scalar, Failure> {
    match parse_poly(text).map_err(|e| Failure::parse(text, e))? {
        ParsedPoly::Constant(c) => Ok(c),
        _ => Err(Failure::Input {
            message: "expected a rational number".into(),
            text: Some(text.into()),
            position: Some(0),
        }),
    }
}

fn strings<T: ToString>(items: impl IntoIterator<Item = T>) -> Value {
    Value::Array(items.into_iter().map(|x| Value::String(x.to_string())).collect())
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("json! object literal"),
    }
}

fn witness_json(w: &IsoWitness) -> Value {
    serde_json::to_value(w.to_document()).expect("witness document serializes")
}

fn save_witness(path: Option<&Path>, w: &IsoWitness) -> Result<(), Failure> {
    if let Some(path) = path {
        let text = serde_json::to_string_pretty(&w.to_document()).expect("witness document serializes");
        fs::write(path, text + "\n")
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn ann(inp: &mut Inputs, f: &String, socle: Option<u32>) -> Outcome {
    let f = inp.dual("F", f)?;
    let s = socle.unwrap_or_else(|| f.degree().unwrap_or(0));
    let ideal = annihilator(&f, s)?;
    Ok(object(json!({
        "socle_bound": s,
        "generators": strings(ideal.generator_polys()),
        "generator_count": ideal.generators.len(),
        "kbasis_size": ideal.kbasis.dim(),
        "colength": ideal.colength(),
    })))
}

fn presentation_json(a: &AlgebraPresentation) -> Map<String, Value> {
    object(json!({
        "hilbert_function": a.hilbert_function,
        "multiplicity": a.multiplicity,
        "embedding_dimension": a.embedding_dimension,
        "socle_degree": a.socle_degree,
    }))
}

fn hf(inp: &mut Inputs, f: &String) -> Outcome {
    let f = inp.dual("F", f)?;
    let a = AlgebraPresentation::from_dual(&f)?;
    let mut out = presentation_json(&a);
    out.insert("symmetric".into(), symmetric_hf_criterion(&f)?.into());
    Ok(out)
}

fn perp(inp: &mut Inputs, gens: &[String], s: u32) -> Outcome {
    let gens = inp.series(gens)?;
    let nvars = gens[0].nvars();
    let a = AlgebraPresentation::from_ideal(&gens, nvars, s)?;
    let basis: Vec<DualPoly> = a.inverse_system.basis();
    let mut out = object(json!({
        "socle_bound": s,
        "dimension": a.inverse_system.dim(),
        "basis": strings(basis),
    }));
    out.extend(presentation_json(&a));
    Ok(out)
}

fn gorenstein(inp: &mut Inputs, texts: &[String], socle: Option<u32>) -> Outcome {
    let roles: Vec<String> = if texts.len() == 1 {
        vec!["input".into()]
    } else {
        (1..=texts.len()).map(|k| format!("g{k}")).collect()
    };
    let first = inp.parse(&texts[0])?;
    let dual_input = !matches!(first, ParsedPoly::Series(_)) && socle.is_none();
    let a = if dual_input {
        if texts.len() > 1 {
            return Err(Failure::input("give a single dual generator, or ideal generators with --socle"));
        }
        let f = inp.many(&roles, texts, Side::Dual)?.remove(0);
        let ParsedPoly::Dual(f) = f else { unreachable!("embedded as dual") };
        AlgebraPresentation::from_dual(&f)?
    } else {
        let s = socle.ok_or_else(|| Failure::input("ideal generators need --socle"))?;
        let gens = inp.series_with_roles(&roles, texts)?;
        let nvars = gens[0].nvars();
        AlgebraPresentation::from_ideal(&gens, nvars, s)?
    };
    let report = is_gorenstein(&a);
    let mut out = object(json!({
        "presentation": if dual_input { "dual generator" } else { "ideal generators" },
        "gorenstein": report.gorenstein,
        "socle_dimension": report.socle_dimension,
        "dual_generator": report.generator.as_ref().map(|g| g.to_string()),
    }));
    out.extend(presentation_json(&a));
    Ok(out)
}

fn q0(inp: &mut Inputs, f: &String) -> Outcome {
    let f = inp.dual("F", f)?;
    let q = top_form_quotient(&f)?;
    let hf_f = hilbert_function(&f)?;
    Ok(object(json!({
        "top_form": f.top_form().to_string(),
        "hilbert_function": q.hilbert_function,
        "hilbert_function_of_f": hf_f,
        "symmetric": symmetric_hf_criterion(&f)?,
        "same_hilbert_function": q.hilbert_function == hf_f,
    })))
}

fn delta(inp: &mut Inputs, f3: &String) -> Outcome {
    let f3 = inp.dual("F3", f3)?;
    let d = delta_matrix(&f3)?;
    let columns = d
        .columns
        .iter()
        .map(|e| DualPoly::monomial(e.clone(), Scalar::one()).to_string());
    let rows: Vec<Value> = d.matrix.to_rows().into_iter().map(strings).collect();
    Ok(object(json!({
        "columns": strings(columns),
        "rows": rows,
        "rank": d.rank,
        "nondegenerate": d.rank == d.n,
    })))
}

fn canonical(inp: &mut Inputs, f: &String, save: Option<&Path>) -> Outcome {
    let f = inp.dual("F", f)?;
    let w = canonical_grading_witness(&f)?;
    save_witness(save, &w)?;
    let target = f.homogeneous_part(3);
    Ok(object(json!({
        "graded_form": target.to_string(),
        "verified": verify_iso(&f, &target, &w)?,
        "witness": witness_json(&w),
    })))
}

fn normalize(inp: &mut Inputs, f: &String, save: Option<&Path>) -> Outcome {
    let f = inp.dual("F", f)?;
    let nf = normalize_socle3(&f)?;
    save_witness(save, &nf.witness)?;
    Ok(object(json!({
        "m": nf.m,
        "n": nf.n,
        "cubic": nf.cubic.to_string(),
        "square_coefficients": strings(&nf.lambdas),
        "normal_form": nf.normal.to_string(),
        "verified": verify_iso(&f, &nf.normal, &nf.witness)?,
        "witness": witness_json(&nf.witness),
    })))
}

fn iso(inp: &mut Inputs, f: &String, g: &String, save: Option<&Path>) -> Outcome {
    let v = inp.duals(&["F", "G"], &[f, g])?;
    Ok(match iso_socle3(&v[0], &v[1])? {
        IsoDecision::Isomorphic { witness, reason } => {
            if let Some(w) = &witness {
                save_witness(save, w)?;
            }
            let mut out = object(json!({
                "decision": "isomorphic",
                "reason": reason,
                "witness": witness.as_ref().map(witness_json),
            }));
            if let Some(path) = save {
                let note = match witness {
                    Some(_) => path.display().to_string(),
                    None => "not written: no rational witness was built".to_string(),
                };
                out.insert("witness_file".into(), note.into());
            }
            out
        }
        IsoDecision::NotIsomorphic { reason } => object(json!({"decision": "not isomorphic", "reason": reason})),
        IsoDecision::Undecided { hf, delta_rank } => object(json!({
            "decision": "undecided",
            "reason": "equal Hilbert functions; cubic forms in this many variables are not classified",
            "hilbert_function": hf,
            "delta_rank": delta_rank,
        })),
    })
}

fn verify(inp: &mut Inputs, f: &String, g: &String, path: &Path) -> Outcome {
    let v = inp.duals(&["F", "G"], &[f, g])?;
    let text = fs::read_to_string(path).map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    let doc: WitnessDocument = serde_json::from_str(&text)
        .map_err(|e| Failure::input(format!("{} is not a witness document: {e}", path.display())))?;
    let w = IsoWitness::from_document(&doc)?;
    Ok(object(json!({"verified": verify_iso(&v[0], &v[1], &w)?})))
}

fn ternary_json(f: &DualPoly, seed: u64) -> Outcome {
    let class = classify_ternary_cubic_seeded(f, seed)?;
    let inv = aronhold_invariants(f)?;
    let profile = if inv.discriminant.is_zero() {
        let (c, p) = jacobian_scheme_profile(f, seed)?;
        json!({"colength": c, "singular_points": p})
    } else {
        Value::Null
    };
    Ok(object(json!({
        "kind": "ternary cubic",
        "class": class.name(),
        "j_invariant": class.j().map(|j| j.to_string()),
        "invariant_s": inv.s.to_string(),
        "invariant_t": inv.t.to_string(),
        "discriminant": inv.discriminant.to_string(),
        "singularity_profile": profile,
    })))
}

fn classify(inp: &mut Inputs, f: &String, seed: u64) -> Outcome {
    let f = inp.dual("F", f)?;
    match f.nvars() {
        2 => {
            let class = classify_binary_cubic(&f)?;
            Ok(object(json!({
                "kind": "binary cubic",
                "class": class.name(),
                "discriminant": binary_discriminant(&f)?.to_string(),
            })))
        }
        3 => ternary_json(&f, seed),
        n => Err(Failure::Domain(format!(
            "classification covers cubic forms in 2 or 3 variables, got {n}"
        ))),
    }
}

fn jinv(inp: &mut Inputs, f: Option<&String>, lambda: Option<&String>) -> Outcome {
    if let Some(l) = lambda {
        let l = scalar(l)?;
        if l.is_zero() || l.is_one() {
            return Err(Failure::Domain("the Legendre cubic is singular for λ = 0 and λ = 1".into()));
        }
        let f = legendre_cubic(&l)?;
        return Ok(object(json!({
            "lambda": l.to_string(),
            "cubic": f.to_string(),
            "j_invariant": legendre_j(&l).to_string(),
        })));
    }
    let f = inp.dual("F", f.expect("clap requires F or --lambda"))?;
    let j = j_invariant(&f)?;
    let class = classify_ternary_cubic_seeded(&f, DEFAULT_SEED)?;
    Ok(object(json!({
        "j_invariant": j.to_string(),
        "fermat_type": matches!(class, TernaryCubicClass::EllipticFermat),
    })))
}

fn parse_hf(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| Failure::input(format!("--hf expects numbers like 1,3,3,1, got {text:?}")))
        })
        .collect()
}

fn model_json(row: &ModelRow) -> Value {
    json!({
        "class": row.class,
        "geometry": row.geometry,
        "hilbert_function": row.hilbert_function,
        "nvars": row.nvars,
        "ideal": strings(&row.ideal),
        "dual_generator": row.dual_generator.to_string(),
    })
}

fn models(class: Option<&String>, hf: Option<&String>, lambda: Option<&String>) -> Outcome {
    let mut rows = model_table();
    if let Some(l) = lambda {
        let l = scalar(l)?;
        if l.is_zero() || l.is_one() {
            return Err(Failure::Domain("the Legendre cubic is singular for λ = 0 and λ = 1".into()));
        }
        let legendre = legendre_model(&l);
        for row in rows.iter_mut().filter(|r| r.class == legendre.class) {
            *row = legendre.clone();
        }
    }
    let wanted_hf = hf.map(|h| parse_hf(h)).transpose()?;
    let needle = class.map(|c| c.to_lowercase());
    let rows: Vec<Value> = rows
        .iter()
        .filter(|r| needle.as_ref().is_none_or(|n| r.class.to_lowercase().contains(n.as_str())))
        .filter(|r| wanted_hf.as_ref().is_none_or(|h| &r.hilbert_function == h))
        .map(model_json)
        .collect();
    Ok(object(json!({"count": rows.len(), "rows": rows})))
}

fn run_selftest(seed: u64) -> Outcome {
    let report = selftest(seed);
    let mut out = object(serde_json::to_value(&report).expect("report serializes"));
    out.insert("passed".into(), report.passed().into());
    Ok(out)
}

pub fn run(cli: &Cli) -> Document {
    let mut inp = Inputs {
        nvars_override: cli.nvars,
        echo: Vec::new(),
    };
    let seed = cli.seed.unwrap_or(DEFAULT_SEED);
    let outcome = match &cli.command {
        Command::Ann { f, socle } => ann(&mut inp, f, *socle),
        Command::Hf { f } => hf(&mut inp, f),
        Command::Perp { generators, socle } => perp(&mut inp, generators, *socle),
        Command::Gorenstein { inputs, socle } => gorenstein(&mut inp, inputs, *socle),
        Command::Q0 { f } => q0(&mut inp, f),
        Command::Delta { f3 } => delta(&mut inp, f3),
        Command::Canonical { f, save_witness } => canonical(&mut inp, f, save_witness.as_deref()),
        Command::Normalize { f, save_witness } => normalize(&mut inp, f, save_witness.as_deref()),
        Command::Iso { f, g, save_witness } => iso(&mut inp, f, g, save_witness.as_deref()),
        Command::VerifyIso { f, g, witness } => verify(&mut inp, f, g, witness),
        Command::Classify { f } => classify(&mut inp, f, seed),
        Command::Jinv { f, lambda } => jinv(&mut inp, f.as_ref(), lambda.as_ref()),
        Command::Models { class, hf, lambda } => models(class.as_ref(), hf.as_ref(), lambda.as_ref()),
        Command::Selftest => run_selftest(cli.seed.unwrap_or(0)),
    };
    Document {
        command: cli.command.name(),
        inputs: inp.echo,
        outcome,
    }
}
