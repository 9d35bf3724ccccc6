//! Command dispatch: each command runs a group of checks and turns them
//! into report records.

use std::str::FromStr;

use serde_json::{json, Map, Value};

use super::problem::{Problem, BUILTIN_MODULES};
use super::report::{timed, Record, Report};
use crate::cohomology::{
    alpha, alpha_cocycle, alpha_on_wedge, ce_differential, complement_independent, connecting_cocycle, find_extension,
    is_trivial, pushout_module, Cochain,
};
use crate::error::{Error, Result};
use crate::koszul::{bg_conditions, koszul_acyclicity, qa_graded_dimension};
use crate::lie::{hom_module, tensor_module, InclusionPair};
use crate::linalg::scalar::format_scalar;
use crate::linalg::{Matrix, Scalar};
use crate::pbw::filtration::expected_level_dim;
use crate::pbw::splitting::splitting_s_in;
use crate::pbw::{
    build_filtration, closed_form_mismatches, equivalence_check, f2_class_check, pbw_splitting_i, section_oracle,
    twisted_verdict, MapSummary, Side, TMaps, VerifiedMap,
};

pub const DEFAULT_MAX_DEGREE: usize = 4;
/// Degree cap for twisted checks run as part of `all`.
pub const ALL_TWISTED_MAX_DEGREE: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Validate,
    Alpha,
    Extend,
    Split,
    Oracle,
    Twisted,
    Koszul,
    All,
}

impl Command {
    pub const ALL: [Command; 8] = [
        Command::Validate,
        Command::Alpha,
        Command::Extend,
        Command::Split,
        Command::Oracle,
        Command::Twisted,
        Command::Koszul,
        Command::All,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Alpha => "alpha",
            Command::Extend => "extend",
            Command::Split => "split",
            Command::Oracle => "oracle",
            Command::Twisted => "twisted",
            Command::Koszul => "koszul",
            Command::All => "all",
        }
    }
}

impl FromStr for Command {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Command::ALL.into_iter().find(|c| c.as_str() == s).ok_or_else(|| Error::UnknownCommand(s.to_string()))
    }
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub max_degree: Option<usize>,
    pub module: Option<String>,
}

fn record(check: &str, anchor: &str, verdict: impl Into<String>, witness: Value, millis: u64, consistent: bool) -> Record {
    Record { check: check.into(), anchor: anchor.into(), verdict: verdict.into(), witness, millis, consistent }
}

/// `{label: "coefficient"}` over the nonzero entries.
pub fn vector_witness(labels: &[String], v: &[Scalar]) -> Value {
    let mut m = Map::new();
    for (l, x) in labels.iter().zip(v) {
        if *x != Scalar::from_integer(0.into()) {
            m.insert(l.clone(), Value::String(format_scalar(x)));
        }
    }
    Value::Object(m)
}

pub fn matrix_witness(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|r| Value::Array(m.row(r).iter().map(|x| Value::String(format_scalar(x))).collect())).collect())
}

/// `c(a)(n̄) ∈ h` for every `h`-letter `a` and `n`-letter `n̄`.
pub fn connecting_witness(pair: &InclusionPair, c: &Cochain) -> Value {
    let (dh, dn) = (pair.dim_h(), pair.dim_n());
    let mut out = Map::new();
    for (a, la) in pair.h_labels().iter().enumerate() {
        let v = c.value(a);
        let mut per = Map::new();
        for (x, lx) in pair.n_labels().iter().enumerate() {
            let col: Vec<Scalar> = (0..dh).map(|j| v[j * dn + x].clone()).collect();
            per.insert(lx.clone(), vector_witness(pair.h_labels(), &col));
        }
        out.insert(la.clone(), Value::Object(per));
    }
    Value::Object(out)
}

/// `a(z)(x̄⊗ȳ) ∈ n` keyed by `"x⊗y"`.
pub fn alpha_witness(pair: &InclusionPair, a: &Cochain) -> Value {
    let dn = pair.dim_n();
    let labels = pair.n_labels();
    let mut out = Map::new();
    for (z, lz) in pair.h_labels().iter().enumerate() {
        let v = a.value(z);
        let mut per = Map::new();
        for x in 0..dn {
            for y in 0..dn {
                let col: Vec<Scalar> = (0..dn).map(|w| v[w * dn * dn + x * dn + y].clone()).collect();
                per.insert(format!("{}⊗{}", labels[x], labels[y]), vector_witness(labels, &col));
            }
        }
        out.insert(lz.clone(), Value::Object(per));
    }
    Value::Object(out)
}

fn maps_witness(maps: &[VerifiedMap]) -> Value {
    Value::Array(
        maps.iter()
            .map(|m| {
                let mut v = serde_json::to_value(MapSummary::from(m)).expect("summary serializes");
                v["matrix"] = matrix_witness(&m.map.matrix);
                v
            })
            .collect(),
    )
}

pub fn run_command(command: Command, problem: &Problem, opts: &RunOptions) -> Result<Report> {
    let k = opts.max_degree.or(problem.file.settings.max_degree).unwrap_or(DEFAULT_MAX_DEGREE);
    let mut report = Report::new(problem.name(), command.as_str());
    let negative = problem.file.negative_control;
    match command {
        Command::Validate => report.extend(validate(problem)?),
        Command::Koszul => report.extend(koszul(problem, k)?),
        Command::All => {
            let wanted = |c: Command| {
                problem.file.settings.checks.as_ref().is_none_or(|list| list.iter().any(|s| s == c.as_str()))
            };
            if wanted(Command::Validate) {
                report.extend(validate(problem)?);
            }
            if !negative {
                if wanted(Command::Alpha) {
                    report.extend(alpha_checks(problem)?);
                }
                if wanted(Command::Extend) {
                    report.extend(extend(problem, opts.module.as_deref())?);
                }
                if wanted(Command::Split) {
                    report.extend(split(problem, k)?);
                }
                if wanted(Command::Oracle) {
                    report.extend(oracle(problem, k)?);
                }
                if wanted(Command::Twisted) {
                    let tk = k.min(ALL_TWISTED_MAX_DEGREE);
                    let mut names: Vec<String> = BUILTIN_MODULES.iter().map(|s| s.to_string()).collect();
                    names.extend(problem.modules.keys().cloned());
                    for name in names {
                        report.push(twisted(problem, &name, tk)?);
                    }
                }
            }
            if wanted(Command::Koszul) {
                report.extend(koszul(problem, k)?);
            }
        }
        _ if negative => report.push(record(
            command.as_str(),
            "negative control: only input validation and the quadratic-algebra conditions apply",
            "skipped",
            Value::Null,
            0,
            true,
        )),
        Command::Alpha => report.extend(alpha_checks(problem)?),
        Command::Extend => report.extend(extend(problem, opts.module.as_deref())?),
        Command::Split => report.extend(split(problem, k)?),
        Command::Oracle => report.extend(oracle(problem, k)?),
        Command::Twisted => {
            let name = opts.module.as_deref().ok_or_else(|| Error::MissingModule("`twisted` needs --module".into()))?;
            report.push(twisted(problem, name, k)?);
        }
    }
    Ok(report)
}

fn validate(problem: &Problem) -> Result<Vec<Record>> {
    let v = &problem.validation;
    let pair = &problem.pair;
    let valid = v.is_valid();
    let mut out = vec![record(
        "lie-algebra",
        "structure constants are antisymmetric and satisfy the Jacobi identity",
        if valid { "valid Lie algebra" } else { "not a Lie algebra" },
        serde_json::to_value(v).expect("validation serializes"),
        0,
        valid != problem.file.negative_control,
    )];
    out.push(record(
        "subalgebra",
        "h is closed under the bracket of g; n = g/h is an h-module",
        "closed",
        json!({
            "dim_g": pair.dim_g(),
            "dim_h": pair.dim_h(),
            "dim_n": pair.dim_n(),
            "h": pair.h_labels(),
            "n": pair.n_labels(),
        }),
        0,
        true,
    ));
    let n_valid = pair.quotient_module().is_valid();
    let mut modules = Map::new();
    modules.insert("n".into(), json!(n_valid));
    for (name, m) in &problem.modules {
        modules.insert(name.clone(), json!(m.is_valid()));
    }
    let all_valid = modules.values().all(|v| v == &json!(true));
    out.push(record(
        "modules",
        "module actions respect the bracket of h",
        if all_valid { "all modules valid" } else { "invalid module" },
        Value::Object(modules),
        0,
        all_valid || problem.file.negative_control,
    ));
    Ok(out)
}

fn alpha_checks(problem: &Problem) -> Result<Vec<Record>> {
    let pair = &problem.pair;
    let mut out = Vec::new();

    let (c, ms) = timed(|| Ok(connecting_cocycle(pair)))?;
    out.push(record(
        "connecting-cocycle",
        "c(a)(x̄) = σ(a·x̄) - [a, σ(x̄)] is a 1-cocycle of h with values in Hom(n, h)",
        if c.is_zero() { "c = 0" } else { "c ≠ 0" },
        json!({ "c": connecting_witness(pair, &c) }),
        ms,
        c.is_cocycle(),
    ));

    let (a, ms) = timed(|| Ok(alpha(pair)))?;
    out.push(record(
        "alpha-cocycle",
        "a(z)(x̄⊗ȳ) = c(z)(x̄)·ȳ is a 1-cocycle representing α ∈ Ext¹_h(n⊗n, n)",
        "cocycle computed",
        json!({ "a": alpha_witness(pair, &a) }),
        ms,
        a.is_cocycle(),
    ));

    let (pre, ms) = timed(|| is_trivial(&a))?;
    let (verdict, witness, ok) = match &pre {
        Some(b) => ("α trivial", json!({ "preimage": matrix_witness(b.values()) }), b.differential().to_vector() == a.to_vector()),
        None => ("α non-trivial", Value::Null, true),
    };
    out.push(record("alpha-class", "α = 0 exactly when a is a coboundary", verdict, witness, ms, ok));

    let (squares, ms) = timed(|| {
        let n = pair.quotient_module();
        let m = hom_module(&tensor_module(&n, &n)?, &n)?;
        Ok((0..3).map(|p| (&ce_differential(&m, p + 1) * &ce_differential(&m, p)).is_zero()).collect::<Vec<_>>())
    })?;
    out.push(record(
        "ce-complex",
        "the Chevalley–Eilenberg differential squares to zero (degrees 0, 1, 2)",
        if squares.iter().all(|&b| b) { "d∘d = 0" } else { "d∘d ≠ 0" },
        json!({ "d_squared_zero": squares }),
        ms,
        squares.iter().all(|&b| b),
    ));

    let (indep, ms) = timed(|| complement_independent(pair))?;
    out.push(record(
        "complement-independence",
        "the class of a does not depend on the complement σ",
        if indep { "difference is a coboundary" } else { "difference is not exact" },
        Value::Null,
        ms,
        indep,
    ));

    let (wedge, ms) = timed(|| is_trivial(&alpha_on_wedge(pair)))?;
    out.push(record(
        "wedge-restriction",
        "the restriction of a to ∧²n is a coboundary",
        if wedge.is_some() { "exact on ∧²n" } else { "not exact on ∧²n" },
        Value::Null,
        ms,
        wedge.is_some(),
    ));
    Ok(out)
}

fn alpha_e_trivial(pair: &InclusionPair, e: &crate::lie::LieModule) -> Result<bool> {
    Ok(is_trivial(&alpha_cocycle(pair, e)?)?.is_some())
}

fn extend(problem: &Problem, module: Option<&str>) -> Result<Vec<Record>> {
    let pair = &problem.pair;
    let mut names = vec!["n".to_string()];
    match module {
        Some(m) if m != "n" => names.push(m.to_string()),
        Some(_) => {}
        None => names.extend(problem.modules.keys().cloned()),
    }
    let mut out = Vec::new();
    for name in names {
        let e = problem.module(&name)?;
        let ((datum, trivial), ms) = timed(|| Ok((find_extension(pair, &e)?, alpha_e_trivial(pair, &e)?)))?;
        let witness = match &datum {
            Some(d) => {
                let mut rho = Map::new();
                for (c, l) in pair.n_labels().iter().enumerate() {
                    rho.insert(l.clone(), matrix_witness(d.rho_n(c)));
                }
                json!({ "module": name, "rho": rho })
            }
            None => json!({ "module": name }),
        };
        out.push(record(
            &format!("extension[{name}]"),
            "α_E = 0 exactly when the h-action on E extends to an h-equivariant ρ: g → End(E)",
            if datum.is_some() { "ρ exists" } else { "no extension" },
            witness,
            ms,
            datum.is_some() == trivial,
        ));

        let ((split, dim), ms) = timed(|| {
            let po = pushout_module(pair, &e)?;
            Ok((section_oracle(&po.inclusion, &po.projection)?.is_some(), po.module.dim()))
        })?;
        out.push(record(
            &format!("pushout[{name}]"),
            "0 → E → Q → n⊗E → 0 (pushout along the action) splits exactly when α_E = 0",
            if split { "splits" } else { "does not split" },
            json!({ "module": name, "dim_q": dim, "alpha_trivial": trivial }),
            ms,
            split == trivial,
        ));
    }
    Ok(out)
}

fn split(problem: &Problem, k: usize) -> Result<Vec<Record>> {
    let pair = &problem.pair;
    let n = pair.quotient_module();
    let Some(datum) = find_extension(pair, &n)? else {
        let trivial = alpha_e_trivial(pair, &n)?;
        return Ok(vec![record(
            "splitting",
            "α = 0 is required for the splittings s_k and I_k",
            "not constructed: α non-trivial",
            Value::Null,
            0,
            !trivial,
        )]);
    };
    let mut out = Vec::new();
    let (maps, ms) = timed(|| {
        let f = build_filtration(pair, Side::F, k.max(1), None)?;
        let mut tmaps = TMaps::new(&datum)?;
        (1..=k).map(|j| splitting_s_in(&f, &mut tmaps, j)).collect::<Result<Vec<_>>>()
    })?;
    let ok = maps.iter().all(VerifiedMap::passed);
    out.push(record(
        "splitting-s",
        "α = 0 ⇒ s_k = t_1∘…∘t_k is an h-equivariant section n^{⊗k} → F^k",
        if ok { format!("equivariant sections for k ≤ {k}") } else { "check failed".into() },
        maps_witness(&maps),
        ms,
        ok,
    ));

    let (maps, ms) = timed(|| pbw_splitting_i(pair, &datum, k))?;
    let ok = maps.iter().all(VerifiedMap::passed);
    out.push(record(
        "splitting-i",
        "α = 0 ⇒ symmetrized s_k composed with F → R is an h-equivariant section S^k n → R^k",
        if ok { format!("equivariant sections for k ≤ {k}") } else { "check failed".into() },
        maps_witness(&maps),
        ms,
        ok,
    ));

    let ((checked, bad), ms) = timed(|| closed_form_mismatches(&datum))?;
    out.push(record(
        "closed-forms",
        "s₂ = x₁x₂ - ρ(x₁)x₂ and the six-term closed form of s₃",
        if bad.is_empty() { format!("{checked} tensors match") } else { format!("{} mismatches", bad.len()) },
        json!({ "checked": checked, "mismatches": bad }),
        ms,
        bad.is_empty(),
    ));
    Ok(out)
}

fn oracle(problem: &Problem, k: usize) -> Result<Vec<Record>> {
    let pair = &problem.pair;
    let mut out = Vec::new();
    let (tables, ms) = timed(|| {
        let mut t = Map::new();
        let mut ok = true;
        for side in [Side::F, Side::R] {
            let f = build_filtration(pair, side, k, None)?;
            let dims: Vec<usize> = (0..=k).map(|j| f.level_dim(j)).collect();
            let expected: Vec<usize> = (0..=k).map(|j| expected_level_dim(side, pair.dim_n(), 1, j)).collect();
            ok &= dims == expected;
            t.insert(format!("{side:?}"), json!({ "computed": dims, "expected": expected }));
        }
        Ok((t, ok))
    })?;
    out.push(record(
        "filtration-dimensions",
        "gr F = T(n) and gr R = S(n): dim F^k = Σ (dim n)^i, dim R^k = Σ C(dim n + i - 1, i)",
        if tables.1 { "dimensions match" } else { "dimension mismatch" },
        Value::Object(tables.0),
        ms,
        tables.1,
    ));

    let (eq, ms) = timed(|| equivalence_check(pair, k))?;
    out.push(record(
        "equivalence",
        "α = 0 ⇔ F̃^k splits ⇔ R̃^k splits equivariantly (level 1 always splits)",
        if eq.alpha_trivial { "α trivial, all levels split" } else { "α non-trivial, levels k ≥ 2 do not split" },
        serde_json::to_value(&eq).expect("report serializes"),
        ms,
        eq.consistent,
    ));

    let (f2, ms) = timed(|| f2_class_check(pair))?;
    let ok = f2.first_failure().is_none();
    out.push(record(
        "pushout-f2",
        "the pushout extension of α is 0 → n → F̃² → n⊗n → 0",
        match f2.first_failure() {
            None => "Q ≅ F̃² compatibly".to_string(),
            Some(what) => format!("failed: {what}"),
        },
        serde_json::to_value(&f2).expect("report serializes"),
        ms,
        ok,
    ));
    Ok(out)
}

fn twisted(problem: &Problem, name: &str, k: usize) -> Result<Record> {
    let v = problem.module(name)?;
    let (t, ms) = timed(|| twisted_verdict(&problem.pair, &v, k))?;
    let verdict = match (t.predicted_split, t.f_split && t.r_split) {
        (true, true) => "α, α_V trivial; F⊗V and R⊗V split",
        (false, false) => "obstruction present; filtrations do not split",
        _ => "prediction and oracle disagree",
    };
    let mut witness = serde_json::to_value(&t).expect("report serializes");
    witness["module"] = json!(name);
    Ok(record(
        &format!("twisted[{name}]"),
        "α = 0 and α_V = 0 ⇔ the filtrations of F⊗V and R⊗V split equivariantly",
        verdict,
        witness,
        ms,
        t.consistent,
    ))
}

fn koszul(problem: &Problem, k: usize) -> Result<Vec<Record>> {
    let pair = &problem.pair;
    let negative = problem.file.negative_control;
    let mut out = Vec::new();
    let (bg, ms) = timed(|| Ok(bg_conditions(pair)))?;
    let ok = if negative {
        !bg.condition2
    } else {
        bg.condition1 && bg.condition2 && bg.phi_well_defined && bg.relation_dim == bg.expected_relation_dim
    };
    out.push(record(
        "bg-conditions",
        "Braverman–Gaitsgory conditions on (qR, φ): Im(φ⊗id - id⊗φ) ⊂ qR and φ∘(φ⊗id - id⊗φ) = 0",
        format!("({}, {})", bg.condition1, bg.condition2),
        serde_json::to_value(&bg).expect("report serializes"),
        ms,
        ok,
    ));

    let (dims, ms) = timed(|| Ok((0..=k).map(|j| qa_graded_dimension(pair, j)).collect::<Vec<_>>()))?;
    let ok = dims.iter().all(|d| d.computed == d.closed_form);
    out.push(record(
        "qa-dimensions",
        "qA ≅ T(n) ⊗ S(h) as graded vector spaces",
        if ok { format!("match for k ≤ {k}") } else { "mismatch".into() },
        serde_json::to_value(&dims).expect("report serializes"),
        ms,
        ok,
    ));

    let (kr, ms) = timed(|| Ok(koszul_acyclicity(pair, k.max(1))))?;
    let ok = kr.passed();
    out.push(record(
        "koszul-slices",
        "qA ⊗ K̃^• with K̃^i = (∧^{i-1}h)∧g is exact away from the rightmost term",
        if ok { format!("exact at interior positions for internal degree ≤ {}", k.max(1)) } else { "not exact".into() },
        serde_json::to_value(&kr).expect("report serializes"),
        ms,
        ok,
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::catalog::catalog_get;

    fn problem(name: &str) -> Problem {
        Problem::build(catalog_get(name).unwrap()).unwrap()
    }

    #[test]
    fn commands_parse() {
        for c in Command::ALL {
            assert_eq!(c.as_str().parse::<Command>().unwrap(), c);
        }
        assert!(matches!("nope".parse::<Command>(), Err(Error::UnknownCommand(_))));
    }

    #[test]
    fn alpha_witnesses_on_borel() {
        let r = run_command(Command::Alpha, &problem("sl2-borel"), &RunOptions::default()).unwrap();
        assert!(r.consistent);
        let c = &r.record("connecting-cocycle").unwrap().witness["c"];
        assert_eq!(c["e"]["f"], json!({ "h": "-1" }));
        assert_eq!(c["h"]["f"], json!({}));
        let a = &r.record("alpha-cocycle").unwrap().witness["a"];
        assert_eq!(a["e"]["f⊗f"], json!({ "f": "2" }));
        assert_eq!(a["h"]["f⊗f"], json!({}));
        assert_eq!(r.record("alpha-class").unwrap().verdict, "α non-trivial");
        assert!(r.records.iter().all(|x| !x.anchor.is_empty()));
    }

    #[test]
    fn twisted_needs_a_module() {
        let p = problem("sl2-borel");
        assert!(matches!(run_command(Command::Twisted, &p, &RunOptions::default()), Err(Error::MissingModule(_))));
        let opts = RunOptions { max_degree: Some(2), module: Some("n".into()) };
        assert!(run_command(Command::Twisted, &p, &opts).unwrap().consistent);
    }

    #[test]
    fn negative_control_is_consistent() {
        let p = problem("jacobi-broken-negative-control");
        let r = run_command(Command::All, &p, &RunOptions { max_degree: Some(2), module: None }).unwrap();
        assert!(r.consistent, "{}", r.render());
        assert_eq!(r.record("lie-algebra").unwrap().verdict, "not a Lie algebra");
        assert_eq!(r.record("bg-conditions").unwrap().verdict, "(true, false)");
    }

    #[test]
    fn split_on_abelian() {
        let r = run_command(Command::Split, &problem("abelian-inclusion"), &RunOptions { max_degree: Some(3), module: None })
            .unwrap();
        assert!(r.consistent, "{}", r.render());
        assert_eq!(r.records.len(), 3);
    }
}
