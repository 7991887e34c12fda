//! Command-line front end. [`run`] parses arguments, writes to the given
//! sinks and returns the process exit code: 0 on success, 1 when a
//! verification fails, 2 on usage or parse errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::compositions::{
    covering_injection_pairs, enumerate_injections, overlapping_shuffles, Composition,
};
use crate::lrcalc::{
    product_expand, structure_coefficient, support, sweep_compositions, verify_sweep,
};
use crate::poly::Poly;
use crate::qsym::check_qsym2_relation;
use crate::tableaux::{enumerate_skylines, enumerate_tableaux, WeightConvention};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Human,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    PaperLiteral,
    OracleConsistent,
}

#[derive(Debug, Parser)]
#[command(
    name = "dqsym",
    version,
    about = "Products and structure coefficients of double monomial quasisymmetric functions"
)]
struct Cli {
    /// Sign convention for tableau weights.
    #[arg(long, global = true, value_enum, default_value = "oracle-consistent")]
    convention: ConventionArg,

    /// Shorthand for `--convention paper-literal`.
    #[arg(long, global = true)]
    paper_literal: bool,

    #[arg(long, global = true, value_enum, default_value = "human")]
    format: OutputFormat,

    /// List every gamma allowed by the support bounds, including zero coefficients.
    #[arg(long, global = true)]
    explicit_zeros: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Expand M_alpha * M_beta in the M basis.
    Product {
        alpha: Composition,
        beta: Composition,
    },
    /// A single structure coefficient c^gamma_{alpha,beta}.
    Coefficient {
        alpha: Composition,
        beta: Composition,
        gamma: Composition,
    },
    /// Skew edge-labeled tableaux of shape c/a and content b with weights.
    Tableaux { c: u32, a: u32, b: u32 },
    /// All skyline tableaux contributing to c^gamma_{alpha,beta}.
    Skylines {
        alpha: Composition,
        beta: Composition,
        gamma: Composition,
    },
    /// Overlapping shuffle multiplicities (the y = 0 product).
    Shuffles {
        alpha: Composition,
        beta: Composition,
    },
    /// Check the combinatorial rule against exact polynomial multiplication.
    Verify {
        size: Option<u32>,
        length: Option<usize>,
        #[arg(long = "max-size", conflicts_with = "size")]
        max_size: Option<u32>,
        #[arg(long = "max-length", conflicts_with = "length")]
        max_length: Option<usize>,
    },
    /// Coefficient table as JSON lines, one record per (alpha, beta, gamma).
    Table {
        #[arg(long = "max-size", default_value_t = 2)]
        max_size: u32,
        #[arg(long = "max-length", default_value_t = 2)]
        max_length: usize,
    },
    /// Expand the candidate relations among x1*x2, x1+x2, x1^2*x2.
    RelationCheck,
}

#[derive(Debug, Clone, Copy)]
pub struct CliConfig {
    pub convention: WeightConvention,
    pub output_format: OutputFormat,
    pub explicit_zeros: bool,
}

#[derive(Serialize)]
struct ExpansionEntry<'a> {
    gamma: &'a Composition,
    coeff: &'a Poly,
}

#[derive(Serialize)]
struct CoefficientRecord<'a> {
    alpha: &'a Composition,
    beta: &'a Composition,
    gamma: &'a Composition,
    coeff: &'a Poly,
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let convention = if cli.paper_literal {
        WeightConvention::PaperLiteral
    } else {
        match cli.convention {
            ConventionArg::PaperLiteral => WeightConvention::PaperLiteral,
            ConventionArg::OracleConsistent => WeightConvention::OracleConsistent,
        }
    };
    let cfg = CliConfig {
        convention,
        output_format: cli.format,
        explicit_zeros: cli.explicit_zeros,
    };
    match execute(cli.command, cfg, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILURE
        }
    }
}

fn banner(cfg: CliConfig, out: &mut dyn Write) -> std::io::Result<()> {
    if cfg.output_format == OutputFormat::Human {
        writeln!(out, "# convention: {}", cfg.convention)?;
    }
    Ok(())
}

fn json_line(out: &mut dyn Write, value: &impl Serialize) -> std::io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

fn execute(command: Command, cfg: CliConfig, out: &mut dyn Write) -> std::io::Result<i32> {
    match command {
        Command::Product { alpha, beta } => cmd_product(&alpha, &beta, cfg, out),
        Command::Coefficient { alpha, beta, gamma } => {
            let coeff = structure_coefficient(&alpha, &beta, &gamma, cfg.convention);
            match cfg.output_format {
                OutputFormat::Human => {
                    banner(cfg, out)?;
                    writeln!(out, "c^{gamma}_{{{alpha},{beta}}} = {coeff}")?;
                }
                OutputFormat::Json => json_line(
                    out,
                    &CoefficientRecord {
                        alpha: &alpha,
                        beta: &beta,
                        gamma: &gamma,
                        coeff: &coeff,
                    },
                )?,
            }
            Ok(EXIT_OK)
        }
        Command::Tableaux { c, a, b } => cmd_tableaux(c, a, b, cfg, out),
        Command::Skylines { alpha, beta, gamma } => {
            #[derive(Serialize)]
            struct Entry<'a> {
                skyline: &'a crate::tableaux::SkylineTableau,
                weight: Poly,
            }
            let mut all = Vec::new();
            for iota in enumerate_injections(alpha.len(), gamma.len()) {
                for jota in enumerate_injections(beta.len(), gamma.len()) {
                    all.extend(enumerate_skylines(&alpha, &beta, &gamma, &iota, &jota));
                }
            }
            match cfg.output_format {
                OutputFormat::Human => {
                    banner(cfg, out)?;
                    for s in &all {
                        let rows: Vec<String> = s.rows.iter().map(|r| r.to_string()).collect();
                        writeln!(
                            out,
                            "iota={:?} jota={:?} rows=[{}] wt = {}",
                            s.iota.images(),
                            s.jota.images(),
                            rows.join("; "),
                            s.weight(cfg.convention)
                        )?;
                    }
                    writeln!(out, "{} skyline(s)", all.len())?;
                }
                OutputFormat::Json => {
                    let entries: Vec<Entry> = all
                        .iter()
                        .map(|s| Entry {
                            skyline: s,
                            weight: s.weight(cfg.convention),
                        })
                        .collect();
                    json_line(out, &entries)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Shuffles { alpha, beta } => {
            #[derive(Serialize)]
            struct Entry<'a> {
                gamma: &'a Composition,
                multiplicity: u64,
            }
            let shuffles = overlapping_shuffles(&alpha, &beta);
            match cfg.output_format {
                OutputFormat::Human => {
                    for (g, m) in &shuffles {
                        writeln!(out, "{g}: {m}")?;
                    }
                    let pairs = covering_injection_pairs(alpha.len(), beta.len()).len();
                    writeln!(out, "# {pairs} covering injection pair(s)")?;
                }
                OutputFormat::Json => {
                    let entries: Vec<Entry> = shuffles
                        .iter()
                        .map(|(gamma, &multiplicity)| Entry {
                            gamma,
                            multiplicity,
                        })
                        .collect();
                    json_line(out, &entries)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            size,
            length,
            max_size,
            max_length,
        } => {
            let max_size = size.or(max_size).unwrap_or(3);
            let max_length = length.or(max_length).unwrap_or(2);
            cmd_verify(max_size, max_length, cfg, out)
        }
        Command::Table {
            max_size,
            max_length,
        } => {
            let comps = sweep_compositions(max_size, max_length);
            for alpha in &comps {
                for beta in &comps {
                    let expansion = product_expand(alpha, beta, cfg.convention);
                    let gammas: Vec<Composition> = if cfg.explicit_zeros {
                        let mut g = support(alpha, beta);
                        g.extend(expansion.iter().map(|(g, _)| g.clone()));
                        g.sort();
                        g.dedup();
                        g
                    } else {
                        expansion.iter().map(|(g, _)| g.clone()).collect()
                    };
                    for gamma in &gammas {
                        let coeff = expansion.coefficient(gamma);
                        match cfg.output_format {
                            OutputFormat::Json => json_line(
                                out,
                                &CoefficientRecord {
                                    alpha,
                                    beta,
                                    gamma,
                                    coeff: &coeff,
                                },
                            )?,
                            OutputFormat::Human => {
                                writeln!(out, "{alpha}\t{beta}\t{gamma}\t{coeff}")?
                            }
                        }
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::RelationCheck => cmd_relation_check(cfg, out),
    }
}

pub fn cmd_product(
    alpha: &Composition,
    beta: &Composition,
    cfg: CliConfig,
    out: &mut dyn Write,
) -> std::io::Result<i32> {
    let expansion = product_expand(alpha, beta, cfg.convention);
    let zero = Poly::zero();
    let mut rows: Vec<(Composition, &Poly)> =
        expansion.iter().map(|(g, c)| (g.clone(), c)).collect();
    if cfg.explicit_zeros {
        for g in support(alpha, beta) {
            if expansion.get(&g).is_none() {
                rows.push((g, &zero));
            }
        }
        rows.sort_by(|a, b| a.0.cmp(&b.0));
    }
    match cfg.output_format {
        OutputFormat::Human => {
            banner(cfg, out)?;
            writeln!(out, "# M{alpha} * M{beta}")?;
            for (g, c) in &rows {
                writeln!(out, "{g}: {c}")?;
            }
        }
        OutputFormat::Json => {
            let entries: Vec<ExpansionEntry> = rows
                .iter()
                .map(|(gamma, coeff)| ExpansionEntry { gamma, coeff })
                .collect();
            json_line(out, &entries)?;
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_tableaux(
    c: u32,
    a: u32,
    b: u32,
    cfg: CliConfig,
    out: &mut dyn Write,
) -> std::io::Result<i32> {
    #[derive(Serialize)]
    struct Entry<'a> {
        c: u32,
        a: u32,
        edges: &'a [u32],
        weight: Poly,
    }
    let tableaux = enumerate_tableaux(c, a, b);
    match cfg.output_format {
        OutputFormat::Human => {
            banner(cfg, out)?;
            for t in &tableaux {
                let edges: Vec<String> = t.edges().iter().map(u32::to_string).collect();
                writeln!(
                    out,
                    "E={{{}}}  wt = {}",
                    edges.join(","),
                    t.weight(cfg.convention)
                )?;
            }
            writeln!(
                out,
                "# {} tableau(x) of shape {c}/{a} and content {b}",
                tableaux.len()
            )?;
        }
        OutputFormat::Json => {
            let entries: Vec<Entry> = tableaux
                .iter()
                .map(|t| Entry {
                    c,
                    a,
                    edges: t.edges(),
                    weight: t.weight(cfg.convention),
                })
                .collect();
            json_line(out, &entries)?;
        }
    }
    Ok(EXIT_OK)
}

pub fn cmd_verify(
    max_size: u32,
    max_length: usize,
    cfg: CliConfig,
    out: &mut dyn Write,
) -> std::io::Result<i32> {
    let report = verify_sweep(max_size, max_length, cfg.convention);
    match cfg.output_format {
        OutputFormat::Human => {
            banner(cfg, out)?;
            writeln!(
                out,
                "verified {}/{} pairs with |.| <= {max_size}, l(.) <= {max_length}",
                report.passed, report.total
            )?;
            if let Some(f) = &report.first_failure {
                writeln!(
                    out,
                    "FAIL: first counterexample alpha={} beta={} (product identity: {}, expansion match: {})",
                    f.alpha, f.beta, f.product_identity, f.expansion_matches
                )?;
            }
        }
        OutputFormat::Json => json_line(out, &report)?,
    }
    Ok(if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}

pub fn cmd_relation_check(cfg: CliConfig, out: &mut dyn Write) -> std::io::Result<i32> {
    let report = check_qsym2_relation();
    match cfg.output_format {
        OutputFormat::Human => {
            writeln!(out, "t = x1*x2, z = x1 + x2, w = x1^2*x2")?;
            writeln!(
                out,
                "t^3 - t*z*w + w^2 = {}  ({})",
                report.corrected,
                if report.corrected_vanishes() {
                    "vanishes identically"
                } else {
                    "nonzero"
                }
            )?;
            writeln!(
                out,
                "z^3 - t*z*w + w^2 = {}  ({})",
                report.printed,
                if report.printed_vanishes() {
                    "vanishes identically"
                } else {
                    "nonzero"
                }
            )?;
            writeln!(
                out,
                "z^3 - t*z*w + w^2 at x1 = x2 = 1: {}",
                report.printed_witness
            )?;
            writeln!(
                out,
                "top x-degree: {} and {}",
                report.corrected_top_degree, report.printed_top_degree
            )?;
        }
        OutputFormat::Json => json_line(out, &report)?,
    }
    Ok(if report.corrected_vanishes() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}
