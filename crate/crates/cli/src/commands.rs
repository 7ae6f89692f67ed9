//! The subcommands: load the input, compute, render.

use std::fmt::Write as _;

use jointinv_core::catalog::{self, CatalogEntry, Payload};
use jointinv_core::io::json::{StructureDocument, SystemDocument};
use jointinv_core::io::print::paren_factor;
use jointinv_core::io::{parse_darboux, parse_scalar, parse_structure, parse_system, print_system};
use jointinv_core::lie::Representation;
use jointinv_core::{
    frobenius, invariants, EchelonSystem, FieldSystem, StructureConstants, VectorField,
};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::{read_document, Command, Failure, Input, Source};

/// Both renderings of a result and the exit code it carries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rendered {
    pub code: i32,
    pub human: String,
    pub json: String,
}

impl Rendered {
    fn new<T: Serialize>(human: String, doc: &T) -> Self {
        let mut json = serde_json::to_string(doc).expect("reports serialize");
        json.push('\n');
        Rendered {
            code: 0,
            human,
            json,
        }
    }
}

enum Loaded {
    System(FieldSystem),
    Structure(StructureConstants),
}

fn load(source: &Source) -> Result<Loaded, Failure> {
    if let Some(arg) = &source.system {
        return Ok(Loaded::System(parse_system(&read_document(arg)?)?));
    }
    if let Some(arg) = &source.structure {
        return Ok(Loaded::Structure(parse_structure(&read_document(arg)?)?));
    }
    let name = source.catalog.as_deref().expect("clap enforces one source");
    Ok(match catalog::lookup(name)?.payload() {
        Payload::Fields(s) => Loaded::System(s.clone()),
        Payload::Structure(sc) => Loaded::Structure(sc.clone()),
    })
}

fn load_system(input: &Input) -> Result<FieldSystem, Failure> {
    Ok(match load(&input.source)? {
        Loaded::System(s) => s,
        Loaded::Structure(sc) => sc.fields(input.representation.into()),
    })
}

pub fn dispatch(command: &Command) -> Result<Rendered, Failure> {
    match command {
        Command::Reduce(input) => reduce(&load_system(input)?),
        Command::Closure(input) => closure(&load_system(input)?),
        Command::BracketTable(input) => match load(&input.source)? {
            Loaded::System(s) => field_brackets(&s),
            Loaded::Structure(sc) => structure_table(&sc),
        },
        Command::Generate(input) => match load(&input.source)? {
            Loaded::Structure(sc) => Ok(generate(&sc, input.representation.into())),
            Loaded::System(_) => Err(Failure::input("generate needs structure constants")),
        },
        Command::Invariants { input, max_degree } => {
            if *max_degree == 0 {
                return Err(Failure::input("--max-degree must be at least 1"));
            }
            Ok(search(&load_system(input)?, *max_degree))
        }
        Command::Verify { input, darboux } => verify(&load_system(input)?, darboux),
        Command::Catalog { name } => match name {
            None => Ok(catalog_list()),
            Some(n) => Ok(catalog_entry(&catalog::lookup(n)?)),
        },
        Command::Rank { input, at } => rank(&load_system(input)?, at.as_deref()),
    }
}

fn row_strings(row: &VectorField) -> Vec<String> {
    row.coeffs().iter().map(ToString::to_string).collect()
}

fn tuple(row: &VectorField) -> String {
    format!("({})", row_strings(row).join(", "))
}

/// Genericity factors as one product; `1` when there are none.
fn genericity(e: &EchelonSystem) -> String {
    let factors = e.genericity_factors();
    if factors.is_empty() {
        return "1".to_string();
    }
    if factors.len() == 1 {
        return factors[0].to_string();
    }
    factors
        .iter()
        .map(paren_factor)
        .collect::<Vec<_>>()
        .join("*")
}

fn one_based(pivots: &[usize]) -> Vec<usize> {
    pivots.iter().map(|p| p + 1).collect()
}

fn echelon_lines(out: &mut String, e: &EchelonSystem) {
    let n = e.ctx().num_vars();
    let pivots: Vec<String> = one_based(e.pivots())
        .iter()
        .map(ToString::to_string)
        .collect();
    writeln!(out, "rank {} of {n}, pivots {}", e.len(), pivots.join(" ")).unwrap();
    for (i, row) in e.rows().iter().enumerate() {
        writeln!(out, "row {}: {}", i + 1, tuple(row)).unwrap();
    }
    writeln!(out, "genericity: {}", genericity(e)).unwrap();
}

#[derive(Serialize)]
struct ReduceReport {
    pivots: Vec<usize>,
    rows: Vec<Vec<String>>,
    genericity: String,
}

fn reduce(s: &FieldSystem) -> Result<Rendered, Failure> {
    let e = frobenius::rref(s);
    let mut human = String::new();
    echelon_lines(&mut human, &e);
    let abelian = e.is_abelian();
    writeln!(human, "commuting: {}", if abelian { "yes" } else { "no" }).unwrap();
    let doc = ReduceReport {
        pivots: one_based(e.pivots()),
        rows: e.rows().iter().map(row_strings).collect(),
        genericity: genericity(&e),
    };
    Ok(Rendered::new(human, &doc))
}

#[derive(Serialize)]
struct StepReport {
    pair: [usize; 2],
    bracket: Vec<String>,
}

#[derive(Serialize)]
struct ClosureReport {
    iterations: usize,
    steps: Vec<StepReport>,
    pivots: Vec<usize>,
    rows: Vec<Vec<String>>,
    genericity: String,
    expected_invariants: usize,
}

fn closure(s: &FieldSystem) -> Result<Rendered, Failure> {
    let c = frobenius::commuting_closure(s);
    let expected = s.ctx().num_vars() - c.system.len();
    let brackets: Vec<VectorField> = c.steps.iter().map(|st| st.bracket()).collect();
    let mut human = String::new();
    writeln!(human, "iterations: {}", c.iterations).unwrap();
    for (st, b) in c.steps.iter().zip(&brackets) {
        let (i, j) = st.pair;
        writeln!(
            human,
            "appended [row {}, row {}] = {}",
            i + 1,
            j + 1,
            tuple(b)
        )
        .unwrap();
    }
    echelon_lines(&mut human, &c.system);
    writeln!(
        human,
        "expected invariants: {expected}; search them with `jointinv invariants`"
    )
    .unwrap();
    let doc = ClosureReport {
        iterations: c.iterations,
        steps: c
            .steps
            .iter()
            .zip(&brackets)
            .map(|(st, b)| StepReport {
                pair: [st.pair.0 + 1, st.pair.1 + 1],
                bracket: row_strings(b),
            })
            .collect(),
        pivots: one_based(c.system.pivots()),
        rows: c.system.rows().iter().map(row_strings).collect(),
        genericity: genericity(&c.system),
        expected_invariants: expected,
    };
    Ok(Rendered::new(human, &doc))
}

#[derive(Serialize)]
struct FieldBracket {
    i: usize,
    j: usize,
    bracket: Vec<String>,
}

fn field_brackets(s: &FieldSystem) -> Result<Rendered, Failure> {
    let x = s.members();
    let mut human = String::new();
    let mut doc = Vec::new();
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            let b = x[i].bracket(&x[j])?;
            writeln!(human, "[X{}, X{}] = {}", i + 1, j + 1, tuple(&b)).unwrap();
            doc.push(FieldBracket {
                i: i + 1,
                j: j + 1,
                bracket: row_strings(&b),
            });
        }
    }
    Ok(Rendered::new(human, &doc))
}

/// `Σ c_k e_k` with unit coefficients elided.
fn combination(prefix: &str, coeffs: &[BigRational]) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let sign = if c.is_negative() {
            "-"
        } else if out.is_empty() {
            ""
        } else {
            "+"
        };
        let mag = c.abs();
        let head = if mag.is_one() {
            String::new()
        } else {
            format!("{mag}*")
        };
        write!(out, "{sign}{head}{prefix}{}", k + 1).unwrap();
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Serialize)]
struct TableEntry {
    i: usize,
    j: usize,
    bracket: String,
}

#[derive(Serialize)]
struct TableReport {
    dim: usize,
    jacobi: bool,
    brackets: Vec<TableEntry>,
}

fn structure_table(sc: &StructureConstants) -> Result<Rendered, Failure> {
    let prefix = sc.basis_prefix();
    let mut human = String::new();
    let mut entries = Vec::new();
    for i in 0..sc.dim() {
        for j in i + 1..sc.dim() {
            let b = sc.bracket(i, j);
            if b.iter().all(Zero::is_zero) {
                continue;
            }
            let text = combination(prefix, &b);
            writeln!(human, "[{prefix}{}, {prefix}{}] = {text}", i + 1, j + 1).unwrap();
            entries.push(TableEntry {
                i: i + 1,
                j: j + 1,
                bracket: text,
            });
        }
    }
    let jacobi = sc.validate_jacobi();
    writeln!(
        human,
        "dimension {}, {} nonzero brackets, Jacobi identity {}",
        sc.dim(),
        entries.len(),
        if jacobi { "holds" } else { "fails" }
    )
    .unwrap();
    let doc = TableReport {
        dim: sc.dim(),
        jacobi,
        brackets: entries,
    };
    Ok(Rendered::new(human, &doc))
}

/// The system document in both formats, so the output can be fed back in.
fn generate(sc: &StructureConstants, rep: Representation) -> Rendered {
    let mut text = print_system(&sc.fields(rep));
    text.push('\n');
    Rendered {
        code: 0,
        human: text.clone(),
        json: text,
    }
}

#[derive(Serialize)]
struct InvariantReport {
    max_degree: u32,
    expected: usize,
    dimension: usize,
    independent: usize,
    basis: Vec<String>,
}

fn search(s: &FieldSystem, max_degree: u32) -> Rendered {
    let basis = invariants::polynomial_invariants(s, max_degree);
    let expected = invariants::expected_invariant_count(s);
    let mut human = String::new();
    writeln!(
        human,
        "degree <= {max_degree}: {} polynomial invariants, {} functionally independent, {expected} expected",
        basis.dimension(),
        basis.independent_count()
    )
    .unwrap();
    for (k, p) in basis.basis().iter().enumerate() {
        writeln!(human, "I{} = {p}", k + 1).unwrap();
    }
    let doc = InvariantReport {
        max_degree,
        expected,
        dimension: basis.dimension(),
        independent: basis.independent_count(),
        basis: basis.basis().iter().map(ToString::to_string).collect(),
    };
    Rendered::new(human, &doc)
}

#[derive(Serialize)]
struct VerifyReport {
    verified: bool,
    residuals: Vec<String>,
}

fn verify(s: &FieldSystem, darboux: &str) -> Result<Rendered, Failure> {
    let f = parse_darboux(&read_document(darboux)?, s.ctx())?;
    let residuals = invariants::darboux_residuals(s, &f)?;
    let verified = residuals.iter().all(|r| r.is_zero());
    let mut human = String::from(if verified {
        "VERIFIED\n"
    } else {
        "NOT VERIFIED\n"
    });
    for (k, r) in residuals.iter().enumerate() {
        if !r.is_zero() {
            writeln!(human, "X{}(log F) = {r}", k + 1).unwrap();
        }
    }
    let doc = VerifyReport {
        verified,
        residuals: residuals.iter().map(ToString::to_string).collect(),
    };
    let mut out = Rendered::new(human, &doc);
    out.code = if verified { 0 } else { 3 };
    Ok(out)
}

fn describe(name: &str) -> &'static str {
    match name {
        "so3" => "rotation fields on R^3",
        "so_pq" => "generators of so(p,q) on R^(p+q), written so_pq(p,q)",
        "sl2_triple" => "the sl(2) triple on R^3",
        "olver_r4" => "two non-commuting fields on R^4",
        "sl3" => "structure constants of sl(3)",
        "so4" => "structure constants of so(4)",
        "so22" => "structure constants of so(2,2)",
        _ => "",
    }
}

#[derive(Serialize)]
struct ListEntry {
    name: &'static str,
    description: &'static str,
}

fn catalog_list() -> Rendered {
    let entries: Vec<ListEntry> = catalog::NAMES
        .iter()
        .map(|&name| ListEntry {
            name,
            description: describe(name),
        })
        .collect();
    let mut human = String::new();
    for e in &entries {
        writeln!(human, "{:<12} {}", e.name, e.description).unwrap();
    }
    Rendered::new(human, &entries)
}

#[derive(Serialize)]
#[serde(rename_all = "lowercase")]
enum EntryPayload {
    System(SystemDocument),
    Structure(StructureDocument),
}

#[derive(Serialize)]
struct EntryReport {
    name: String,
    #[serde(flatten)]
    payload: EntryPayload,
    invariants: Vec<RepInvariants>,
}

#[derive(Serialize)]
struct RepInvariants {
    representation: String,
    polynomials: Vec<String>,
}

fn catalog_entry(entry: &CatalogEntry) -> Rendered {
    let mut human = format!("{}\n", entry.name());
    let (payload, reps) = match entry.payload() {
        Payload::Fields(s) => {
            for (k, m) in s.members().iter().enumerate() {
                writeln!(human, "X{} = {m}", k + 1).unwrap();
            }
            (
                EntryPayload::System(SystemDocument::from_system(s)),
                vec![Representation::Coadjoint],
            )
        }
        Payload::Structure(sc) => {
            writeln!(human, "Lie algebra of dimension {}", sc.dim()).unwrap();
            (
                EntryPayload::Structure(StructureDocument::from_structure(sc)),
                vec![Representation::Adjoint, Representation::Coadjoint],
            )
        }
    };
    let invariants: Vec<RepInvariants> = reps
        .into_iter()
        .map(|rep| RepInvariants {
            representation: rep.to_string(),
            polynomials: entry
                .expected_invariants(rep)
                .iter()
                .map(ToString::to_string)
                .collect(),
        })
        .filter(|r| !r.polynomials.is_empty())
        .collect();
    for r in &invariants {
        for p in &r.polynomials {
            writeln!(human, "invariant ({}): {p}", r.representation).unwrap();
        }
    }
    let doc = EntryReport {
        name: entry.name().to_string(),
        payload,
        invariants,
    };
    Rendered::new(human, &doc)
}

#[derive(Serialize)]
struct RankReport {
    vars: usize,
    generic_rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    rank_at_point: Option<usize>,
}

/// Parses `name=value,...` into one value per name of the context.
fn parse_point(s: &FieldSystem, text: &str) -> Result<Vec<BigRational>, Failure> {
    let ctx = s.ctx();
    let mut point: Vec<Option<BigRational>> = vec![None; ctx.len()];
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (name, value) = part
            .split_once('=')
            .ok_or_else(|| Failure::input(format!("expected name=value, found `{part}`")))?;
        let index = ctx
            .index_of(name.trim())
            .ok_or_else(|| Failure::input(format!("unknown name `{}`", name.trim())))?;
        let v = parse_scalar(value, ctx)?
            .constant_value()
            .ok_or_else(|| Failure::input(format!("`{value}` is not a number")))?;
        point[index] = Some(v);
    }
    point
        .into_iter()
        .enumerate()
        .map(|(k, v)| {
            v.ok_or_else(|| Failure::input(format!("no value assigned to `{}`", ctx.name(k))))
        })
        .collect()
}

fn rank(s: &FieldSystem, at: Option<&str>) -> Result<Rendered, Failure> {
    let generic = s.generic_rank();
    let n = s.ctx().num_vars();
    let mut human = format!("generic rank {generic} of {n}\n");
    let at_point = match at {
        Some(text) => {
            let r = s.rank_at_point(&parse_point(s, text)?)?;
            writeln!(human, "rank at point {r}").unwrap();
            Some(r)
        }
        None => None,
    };
    let doc = RankReport {
        vars: n,
        generic_rank: generic,
        rank_at_point: at_point,
    };
    Ok(Rendered::new(human, &doc))
}
