//! Command implementations. Each returns the text for stdout and an exit code.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use eqorder_core::grp::Subgroup;
use eqorder_core::pairs::{classify_pair, PairReport};
use eqorder_core::structure::normal_subgroups;
use eqorder_core::verify::{default_catalog, run_harness, select_theorems, CatalogEntry, HarnessReport, Verdict};
use serde::Serialize;

use crate::error::CliError;
use crate::eval::{evaluate, evaluate_subgroup, Env, Value};
use crate::spec::parse_spec;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "eqorder", version, about = "Equal order pairs of finite groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Table {
    Elements,
    Classes,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify (G, N) for one N, every normal N, or the construction's designated N.
    Classify {
        #[arg(long)]
        group: String,
        #[arg(long, conflicts_with = "all_normal")]
        normal: Option<String>,
        #[arg(long)]
        all_normal: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run the theorem harness over a catalog.
    Verify {
        /// `default`, or a file with one group spec per line.
        #[arg(long, default_value = "default")]
        catalog: String,
        /// Comma-separated theorem ids or prefixes; empty means all.
        #[arg(long, value_delimiter = ',')]
        theorems: Vec<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// List every proper nontrivial normal subgroup and whether it forms an equal order pair.
    Survey {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Element table or conjugacy classes as CSV.
    Export {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value = "elements")]
        table: Table,
    },
}

pub struct Output {
    pub stdout: String,
    pub code: i32,
}

pub fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Classify { group, normal, all_normal, format } => classify(&group, normal.as_deref(), all_normal, format),
        Command::Verify { catalog, theorems, format, jobs, output } => {
            let out = verify(&catalog, &theorems, format, jobs)?;
            match output {
                Some(path) => {
                    std::fs::write(path, &out.stdout)?;
                    Ok(Output { stdout: String::new(), code: out.code })
                }
                None => Ok(out),
            }
        }
        Command::Survey { group, format } => survey(&group, format),
        Command::Export { group, table } => export(&group, table),
    }
}

pub fn load_group(text: &str) -> Result<Value, CliError> {
    evaluate(&parse_spec(text)?, &Env::default())
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn proper_normals(g: &Value) -> Result<Vec<(String, Subgroup)>, CliError> {
    Ok(normal_subgroups(&g.group())?
        .into_iter()
        .enumerate()
        .filter(|(_, n)| !n.is_trivial() && !n.is_whole())
        .map(|(i, n)| (format!("normal[{i}]"), n))
        .collect())
}

#[derive(Serialize)]
struct ClassifiedPair {
    n_label: String,
    n_order: usize,
    report: PairReport,
}

#[derive(Serialize)]
struct ClassifyOutput {
    schema_version: u32,
    group: String,
    order: usize,
    pairs: Vec<ClassifiedPair>,
}

pub fn classify(group: &str, normal: Option<&str>, all_normal: bool, format: Format) -> Result<Output, CliError> {
    let spec = parse_spec(group)?;
    let g = evaluate(&spec, &Env::default())?;
    let targets: Vec<(String, Subgroup)> = if all_normal {
        proper_normals(&g)?
    } else if let Some(text) = normal {
        let n_spec = parse_spec(text)?;
        vec![(n_spec.to_string(), evaluate_subgroup(&n_spec, &g)?)]
    } else {
        let n = g.kernel().cloned().ok_or_else(|| {
            CliError::Usage(format!("`{spec}` has no designated normal subgroup; pass --normal or --all-normal"))
        })?;
        vec![("kernel".into(), n)]
    };
    let pairs = targets
        .into_iter()
        .map(|(label, n)| {
            let report = classify_pair(&n).map_err(|e| CliError::eval(&label, e))?;
            Ok(ClassifiedPair { n_label: label, n_order: n.order(), report })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let out = ClassifyOutput { schema_version: SCHEMA_VERSION, group: spec.to_string(), order: g.group().order(), pairs };
    let stdout = match format {
        Format::Json => json(&out),
        _ => {
            let mut s = format!("G = {} (order {})\n", out.group, out.order);
            for p in &out.pairs {
                let r = &p.report;
                s.push_str(&format!(
                    "N = {} (order {}): equal_order: {}, camina: {}, ab: {}, nilpotent N: {}, outside orders {:?}\n",
                    p.n_label, p.n_order, r.is_equal_order, r.is_camina, r.is_ab, r.nilpotent_n,
                    r.coset_profile.outside_orders
                ));
                if let Some((rep, a, b)) = &r.coset_profile.witness {
                    s.push_str(&format!("  mixed coset of {rep}: orders {a} and {b}\n"));
                }
            }
            s
        }
    };
    Ok(Output { stdout, code: 0 })
}

/// One catalog entry per non-empty, non-comment line.
pub fn load_catalog_file(text: &str) -> Result<Vec<CatalogEntry>, CliError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let spec = parse_spec(line).map_err(|e| match e {
            CliError::Syntax { col, expected, .. } => CliError::Syntax { line: i + 1, col, expected },
            e => e,
        })?;
        let v = evaluate(&spec, &Env::default())?;
        let name = spec.to_string();
        let g = v.group();
        let entry = if g.order() <= eqorder_core::structure::NORMAL_ENUMERATION_MAX {
            CatalogEntry::exhaustive(name, g)?
        } else {
            let n = v.kernel().cloned().ok_or_else(|| {
                CliError::Usage(format!("line {}: `{name}` is too large to enumerate and has no designated N", i + 1))
            })?;
            CatalogEntry::designated(name, "kernel", n)?
        };
        out.push(entry);
    }
    if out.is_empty() {
        return Err(CliError::Usage("the catalog is empty".into()));
    }
    Ok(out)
}

pub fn verify(catalog: &str, theorems: &[String], format: Format, jobs: Option<usize>) -> Result<Output, CliError> {
    let ids = select_theorems(theorems).map_err(|e| CliError::Usage(e.to_string()))?;
    let entries = if catalog == "default" {
        default_catalog()?
    } else {
        load_catalog_file(&std::fs::read_to_string(catalog)?)?
    };
    let report = run_harness(&entries, &ids, jobs)?;
    let stdout = match format {
        Format::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
        Format::Text => verify_text(&report),
        Format::Csv => report.to_csv(),
    };
    Ok(Output { stdout, code: if report.total_fails() == 0 { 0 } else { 1 } })
}

fn verify_text(report: &HarnessReport) -> String {
    let mut s = String::new();
    for r in &report.reports {
        let t = r.totals;
        s.push_str(&format!(
            "{}: {} pass, {} fail, {} hypothesis not met\n",
            r.theorem_id, t.pass, t.fail, t.hypothesis_not_met
        ));
        for p in r.pairs.iter().filter(|p| p.verdict == Verdict::Fail) {
            s.push_str(&format!("  FAIL {} / {} (order {})", p.group, p.n_label, p.n_order));
            if let Some(w) = &p.witness {
                s.push_str(&format!(": {w}"));
            }
            s.push('\n');
        }
    }
    s
}

#[derive(Serialize)]
struct SurveyPair {
    n_label: String,
    n_order: usize,
    is_equal_order: bool,
    is_camina: bool,
    is_ab: bool,
    outside_orders: Vec<u32>,
}

#[derive(Serialize)]
struct SurveyOutput {
    schema_version: u32,
    group: String,
    order: usize,
    equal_order_count: usize,
    pairs: Vec<SurveyPair>,
}

pub fn survey(group: &str, format: Format) -> Result<Output, CliError> {
    let spec = parse_spec(group)?;
    let g = evaluate(&spec, &Env::default())?;
    let pairs = proper_normals(&g)?
        .into_iter()
        .map(|(label, n)| {
            let r = classify_pair(&n).map_err(|e| CliError::eval(&label, e))?;
            Ok(SurveyPair {
                n_label: label,
                n_order: n.order(),
                is_equal_order: r.is_equal_order,
                is_camina: r.is_camina,
                is_ab: r.is_ab,
                outside_orders: r.coset_profile.outside_orders.into_iter().collect(),
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let out = SurveyOutput {
        schema_version: SCHEMA_VERSION,
        group: spec.to_string(),
        order: g.group().order(),
        equal_order_count: pairs.iter().filter(|p| p.is_equal_order).count(),
        pairs,
    };
    let stdout = match format {
        Format::Json => json(&out),
        _ => {
            let mut s = format!(
                "G = {} (order {}): {} of {} proper normal subgroups give equal order pairs\n",
                out.group,
                out.order,
                out.equal_order_count,
                out.pairs.len()
            );
            for p in out.pairs.iter().filter(|p| p.is_equal_order) {
                s.push_str(&format!("  {} (order {}), outside orders {:?}\n", p.n_label, p.n_order, p.outside_orders));
            }
            s
        }
    };
    Ok(Output { stdout, code: 0 })
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn export(group: &str, table: Table) -> Result<Output, CliError> {
    let g = load_group(group)?.group();
    let mut s = String::new();
    match table {
        Table::Elements => {
            s.push_str("index,element,order,inverse\n");
            for x in g.elements() {
                s.push_str(&format!("{x},{},{},{}\n", csv_field(&g.format_element(x)), g.element_order(x), g.inv(x)));
            }
        }
        Table::Classes => {
            s.push_str("class,size,order,representative,members\n");
            for (i, c) in g.conjugacy_classes().classes.iter().enumerate() {
                let members: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                s.push_str(&format!(
                    "{i},{},{},{},{}\n",
                    c.len(),
                    g.element_order(c[0]),
                    csv_field(&g.format_element(c[0])),
                    members.join(" ")
                ));
            }
        }
    }
    Ok(Output { stdout: s, code: 0 })
}
