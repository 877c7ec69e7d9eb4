use std::path::Path;
use std::time::Instant;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use acspec_core::equivalences::{class_count_with, RelationId, Universe};
use acspec_core::formulas::{self, BigCount};
use acspec_core::groupoids::{catalog, lookup, verify_identity, FiniteTable, GroupoidSpec};
use acspec_core::spectrum::{
    exponentiation_sanity, fine_spectrum, fingerprint, spectrum, SpectrumKind, SpectrumOptions,
};
use acspec_core::{Error, TermTree};

use crate::report::{Format, ReportDocument, ReportEntry, Verdict, VERSION};
use crate::table1::{row_for, rows, Expected};
use crate::CliError;

/// Settings shared by every command.
#[derive(Clone, Debug)]
pub struct Context {
    pub format: Format,
    pub timing: bool,
    pub opts: SpectrumOptions,
}

/// A rendered command result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    /// Checks whose computed value disagreed with the expected one.
    pub mismatches: usize,
}

impl Outcome {
    fn clean(output: String) -> Self {
        Outcome { output, mismatches: 0 }
    }

    fn report(doc: &ReportDocument, format: Format) -> Self {
        Outcome { output: doc.render(format), mismatches: doc.mismatches() }
    }
}

/// A catalog id, or else a path to a JSON table.
pub fn resolve_groupoid(arg: &str) -> Result<(String, GroupoidSpec), CliError> {
    if let Some(g) = lookup(arg) {
        return Ok((arg.to_string(), g));
    }
    let path = Path::new(arg);
    let looks_like_path = path.exists() || arg.contains('/') || arg.ends_with(".json");
    if !looks_like_path {
        return Err(CliError::unknown_id(format!("unknown groupoid {arg:?}; `acspec list` shows the catalog")));
    }
    let text =
        std::fs::read_to_string(path).map_err(|e| CliError::malformed_file(format!("cannot read {arg}: {e}")))?;
    let table = FiniteTable::from_json(&text).map_err(|e| CliError::malformed_file(format!("{arg}: {e}")))?;
    Ok((arg.to_string(), GroupoidSpec::FiniteTable(table)))
}

fn millis(ctx: &Context, start: Instant) -> Option<u64> {
    ctx.timing.then(|| start.elapsed().as_millis() as u64)
}

fn entry(
    ctx: &Context,
    id: &str,
    g: &GroupoidSpec,
    kind: SpectrumKind,
    n: usize,
    expected: Expected,
) -> Result<ReportEntry, CliError> {
    let start = Instant::now();
    let count = spectrum(g, n, kind, &ctx.opts)?.count;
    let expected = expected.value(n, kind, &ctx.opts)?;
    Ok(ReportEntry {
        groupoid: id.to_string(),
        kind: kind.name().to_string(),
        n,
        count,
        expected,
        verdict: Verdict::of(count, expected),
        millis: millis(ctx, start),
        check: None,
    })
}

pub fn cmd_spectrum(ctx: &Context, groupoid: &str, kind: SpectrumKind, n_max: usize) -> Result<Outcome, CliError> {
    let (id, g) = resolve_groupoid(groupoid)?;
    let expected = if lookup(groupoid).is_some() {
        row_for(groupoid).map_or(Expected::None, |r| r.expected(kind))
    } else {
        Expected::None
    };
    let mut doc = ReportDocument::new(format!("spectrum {id} --kind {kind} --n-max {n_max}"));
    for n in 1..=n_max {
        doc.entries.push(entry(ctx, &id, &g, kind, n, expected)?);
    }
    Ok(Outcome::report(&doc, ctx.format))
}

pub fn cmd_table1(ctx: &Context, n_max: usize) -> Result<Outcome, CliError> {
    let mut doc = ReportDocument::new(format!("table1 --n-max {n_max}"));
    for row in rows() {
        let g = lookup(row.id).expect("table rows name catalog entries");
        for kind in [SpectrumKind::Ac, SpectrumKind::Assoc] {
            for n in 1..=n_max {
                doc.entries.push(entry(ctx, row.id, &g, kind, n, row.expected(kind))?);
            }
        }
    }
    Ok(Outcome::report(&doc, ctx.format))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListedGroupoid {
    pub id: String,
    pub kind: String,
    pub commutative: bool,
    pub associative: bool,
    pub description: String,
}

fn identity_holds(g: &GroupoidSpec, lhs: &str, rhs: &str) -> Result<bool, CliError> {
    let (s, t): (TermTree, TermTree) = (lhs.parse()?, rhs.parse()?);
    Ok(match g {
        // the structural fingerprint is the term operation itself
        GroupoidSpec::Structural(_) => fingerprint(g, &s)? == fingerprint(g, &t)?,
        _ => verify_identity(g, &s, &t)?.holds,
    })
}

pub fn list_groupoids() -> Result<Vec<ListedGroupoid>, CliError> {
    catalog()
        .into_iter()
        .map(|e| {
            Ok(ListedGroupoid {
                id: e.id.to_string(),
                kind: e.spec.kind().name().to_string(),
                commutative: identity_holds(&e.spec, "(x1 x2)", "(x2 x1)")?,
                associative: identity_holds(&e.spec, "((x1 x2) x3)", "(x1 (x2 x3))")?,
                description: e.description.to_string(),
            })
        })
        .collect()
}

pub fn cmd_list(ctx: &Context) -> Result<Outcome, CliError> {
    let items = list_groupoids()?;
    let yn = |b: bool| if b { "yes" } else { "no" };
    Ok(Outcome::clean(match ctx.format {
        Format::Text => {
            let mut out =
                format!("{:<22} {:<10} {:<11} {:<11} description\n", "id", "kind", "commutative", "associative");
            for g in &items {
                out.push_str(&format!(
                    "{:<22} {:<10} {:<11} {:<11} {}\n",
                    g.id,
                    g.kind,
                    yn(g.commutative),
                    yn(g.associative),
                    g.description
                ));
            }
            out
        }
        Format::Json => {
            let doc = serde_json::json!({ "version": VERSION, "command": "list", "groupoids": items });
            serde_json::to_string_pretty(&doc).unwrap() + "\n"
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["id", "kind", "commutative", "associative", "description"]).unwrap();
            for g in &items {
                let (c, a) = (g.commutative.to_string(), g.associative.to_string());
                w.write_record([g.id.as_str(), g.kind.as_str(), &c, &a, g.description.as_str()]).unwrap();
            }
            String::from_utf8(w.into_inner().unwrap()).unwrap()
        }
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub size: usize,
    pub representative: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub members: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassesDocument {
    pub version: String,
    pub command: String,
    pub groupoid: String,
    pub kind: String,
    pub n: usize,
    pub classes: Vec<ClassRecord>,
}

pub fn cmd_classes(
    ctx: &Context,
    groupoid: &str,
    kind: SpectrumKind,
    n: usize,
    members: bool,
) -> Result<Outcome, CliError> {
    let (id, g) = resolve_groupoid(groupoid)?;
    let fine = fine_spectrum(&g, n, kind, &ctx.opts)?;
    let classes = fine
        .classes
        .iter()
        .map(|c| ClassRecord {
            size: c.len(),
            representative: fine.term(c[0]).to_string(),
            members: members.then(|| c.iter().map(|&i| fine.term(i).to_string()).collect()),
        })
        .collect();
    let doc = ClassesDocument {
        version: VERSION.to_string(),
        command: format!("classes {id} --kind {kind} --n {n}{}", if members { " --members" } else { "" }),
        groupoid: id,
        kind: kind.name().to_string(),
        n,
        classes,
    };
    Ok(Outcome::clean(match ctx.format {
        Format::Text => {
            let mut out = format!("# {}\n{} classes\n", doc.command, doc.classes.len());
            for (i, c) in doc.classes.iter().enumerate() {
                out.push_str(&format!("{:>4}  size {:<6} {}\n", i + 1, c.size, c.representative));
                for m in c.members.iter().flatten() {
                    out.push_str(&format!("          {m}\n"));
                }
            }
            out
        }
        Format::Json => serde_json::to_string_pretty(&doc).unwrap() + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["class", "size", "representative"]).unwrap();
            for (i, c) in doc.classes.iter().enumerate() {
                w.write_record([(i + 1).to_string(), c.size.to_string(), c.representative.clone()]).unwrap();
            }
            String::from_utf8(w.into_inner().unwrap()).unwrap()
        }
    }))
}

/// Named counting functions and their arities.
pub const FORMULAS: &[(&str, usize)] = &[
    ("factorial", 1),
    ("binomial", 2),
    ("catalan", 1),
    ("double-factorial", 1),
    ("stirling2", 2),
    ("tree-power", 1),
    ("ac_right_k", 2),
    ("jacobsthal", 1),
    ("floor-two-thirds", 1),
    ("two-pow-minus-two", 1),
    ("compositions-of-one", 1),
];

pub fn evaluate_formula(name: &str, args: &[u32]) -> Result<BigCount, CliError> {
    let arity = FORMULAS.iter().find(|(f, _)| *f == name).map(|&(_, a)| a).ok_or_else(|| {
        let names: Vec<&str> = FORMULAS.iter().map(|(f, _)| *f).collect();
        CliError::unknown_id(format!("unknown formula {name:?}; known: {}", names.join(", ")))
    })?;
    if args.len() != arity {
        return Err(CliError::usage(format!("{name} takes {arity} argument(s), got {}", args.len())));
    }
    let need = |ok: bool, what: &str| if ok { Ok(()) } else { Err(CliError::usage(format!("{name}: {what}"))) };
    let a = args[0];
    Ok(match name {
        "factorial" => formulas::factorial(a),
        "binomial" => formulas::binomial(a, args[1]),
        "catalan" => formulas::catalan(a),
        "double-factorial" => formulas::double_factorial_d(a),
        "stirling2" => formulas::stirling2(a, args[1]),
        "tree-power" => formulas::tree_power(a),
        "ac_right_k" => {
            need(a >= 1 && args[1] >= 2, "needs n >= 1 and k >= 2")?;
            formulas::ac_right_k(a, args[1])
        }
        "jacobsthal" => formulas::jacobsthal_ac(a),
        "floor-two-thirds" => formulas::floor_two_thirds(a),
        "two-pow-minus-two" => formulas::two_pow_minus_two(a),
        _ => formulas::compositions_of_one(a),
    })
}

pub fn cmd_formula(ctx: &Context, name: &str, args: &[u32]) -> Result<Outcome, CliError> {
    let value = evaluate_formula(name, args)?.to_string();
    let joined: Vec<String> = args.iter().map(u32::to_string).collect();
    Ok(Outcome::clean(match ctx.format {
        Format::Text => format!("{value}\n"),
        Format::Json => {
            let doc = serde_json::json!({
                "version": VERSION,
                "command": format!("formula {name} {}", joined.join(" ")),
                "name": name,
                "args": args,
                "value": value,
            });
            serde_json::to_string_pretty(&doc).unwrap() + "\n"
        }
        Format::Csv => format!("name,args,value\n{name},{},{value}\n", joined.join(" ")),
    }))
}

/// Tree relations paired with the groupoid whose operations they should count.
pub fn relation_pairs() -> Vec<(RelationId, &'static str, Vec<SpectrumKind>)> {
    use SpectrumKind::{Ac, Assoc};
    let mut v = vec![];
    for (k, id) in [(2, "plus-zeta2"), (3, "plus-zeta3"), (4, "plus-zeta4")] {
        v.push((RelationId::KRightDepth(k), id, vec![Ac, Assoc]));
    }
    v.push((RelationId::KRightDepth(2), "subtraction", vec![Ac, Assoc]));
    v.push((RelationId::KDepth(2), "double-minus", vec![Ac, Assoc]));
    for (k, id) in [(2, "zeta2-sum"), (3, "zeta3-sum"), (4, "zeta4-sum")] {
        v.push((RelationId::KDepth(k), id, vec![Ac, Assoc]));
    }
    v.push((RelationId::CommutativeUnordered, "free-commutative", vec![Ac, Assoc]));
    v.push((RelationId::PTreeUnordered, "exponentiation", vec![Ac, Assoc]));
    v.push((RelationId::SyntacticEquality, "free", vec![Ac, Assoc]));
    v.push((RelationId::LeafOrder, "free-semigroup2", vec![Ac, Assoc]));
    v
}

pub fn cmd_verify(ctx: &Context, n_max: usize, seed: u64, trials: usize) -> Result<Outcome, CliError> {
    let mut doc = ReportDocument::new(format!("verify --n-max {n_max} --seed {seed} --trials {trials}"));
    for (r, id, kinds) in relation_pairs() {
        let g = lookup(id).expect("paired ids are catalog entries");
        for kind in kinds {
            for n in 1..=n_max {
                let start = Instant::now();
                let count = spectrum(&g, n, kind, &ctx.opts)?.count;
                let expected = class_count_with(r, n, Universe::from(kind), &ctx.opts)?;
                doc.entries.push(ReportEntry {
                    groupoid: id.to_string(),
                    kind: kind.name().to_string(),
                    n,
                    count,
                    expected: Some(expected),
                    verdict: Verdict::of(count, Some(expected)),
                    millis: millis(ctx, start),
                    check: Some(r.to_string()),
                });
            }
        }
    }
    // left and right depth relations count the same bracketings
    for k in 2..=4 {
        for n in 1..=n_max {
            let start = Instant::now();
            let right = class_count_with(RelationId::KRightDepth(k), n, Universe::Bracketings, &ctx.opts)?;
            let left = class_count_with(RelationId::KLeftDepth(k), n, Universe::Bracketings, &ctx.opts)?;
            doc.entries.push(ReportEntry {
                groupoid: format!("left-depth:{k}"),
                kind: "assoc".into(),
                n,
                count: left,
                expected: Some(right),
                verdict: Verdict::of(left, Some(right)),
                millis: millis(ctx, start),
                check: Some(format!("right-depth:{k}")),
            });
        }
    }
    for n in 1..=n_max.min(acspec_core::spectrum::SANITY_MAX_N) {
        let start = Instant::now();
        let report = exponentiation_sanity(n, trials, seed)?;
        let expected = formulas::tree_power(n as u32).to_u64();
        let verdict = if report.passed() { Verdict::of(report.classes as u64, expected) } else { Verdict::Mismatch };
        doc.entries.push(ReportEntry {
            groupoid: "exponentiation".into(),
            kind: "ac".into(),
            n,
            count: report.classes as u64,
            expected,
            verdict,
            millis: millis(ctx, start),
            check: Some(format!("sampled {trials} points, seed {seed}, max gap {:.1e}", report.max_agreement_gap)),
        });
    }
    Ok(Outcome::report(&doc, ctx.format))
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Size { .. } => CliError::cap_exceeded(e.to_string()),
            _ => CliError::usage(e.to_string()),
        }
    }
}
