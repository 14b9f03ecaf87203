//! Subcommands and their text reports.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use semibrace::constructions::{
    decompose, enumerate_circ, example_c6, isomorphism_classes, matched_product, product_semibrace,
    verify_matched_data, zero_semibrace, Side, DEFAULT_ENUMERATION_CAP,
};
use semibrace::finite_tables::group_by_name;
use semibrace::ideals::{all_ideals, quotient, socle, SubsetMask, DEFAULT_IDEAL_CAP};
use semibrace::structure_monoid::{growth_series, presentation, DEFAULT_WORD_CAP};
use semibrace::ybe::{
    degeneracy_report, power_properties, solution_from_semibrace, solution_from_semibrace_forced,
    verify_ybe, SetSolution,
};
use semibrace::{Error, GroupTable, LeftSemiBrace};

use crate::document::{parse_dot_table, DocumentError, MatchedDocument, SemibraceDocument};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error(transparent)]
    Library(#[from] Error),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("writing output: {0}")]
    Output(#[from] io::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 1 validation, 2 hypothesis not met, 3 cap exceeded, 4 I/O,
    /// 5 internal inconsistency.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Document(_) | CliError::Usage(_) => 1,
            CliError::Io { .. } | CliError::Output(_) => 4,
            CliError::Library(e) => match e {
                Error::CapExceeded { .. } => 3,
                Error::RhoNotAntihomomorphism(_)
                | Error::NotCompletelySimple(_)
                | Error::NotSkewBrace
                | Error::NotInK(_)
                | Error::NotAnIdeal(_)
                | Error::CongruenceBroken { .. }
                | Error::NotZeroSemibrace => 2,
                Error::Inconsistency(_) => 5,
                _ => 1,
            },
        }
    }
}

pub type CliResult<T = ()> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "semibrace",
    version,
    about = "Finite left semi-braces and their Yang-Baxter solutions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a document is a left semi-brace.
    Verify { file: PathBuf },
    /// Corners, idempotents, socle, decomposition and ideals.
    Analyze {
        file: PathBuf,
        /// Largest carrier for which ideals are enumerated.
        #[arg(long, default_value_t = DEFAULT_IDEAL_CAP)]
        ideal_cap: usize,
    },
    /// Tabulate the associated solution `r(x, y) = (λ_x(y), ρ_y(x))`.
    Solve(SolveArgs),
    /// Class counts of the structure monoid by degree.
    Growth {
        file: PathBuf,
        #[arg(long)]
        max_degree: usize,
        /// Write `degree,count,cumulative` rows here.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_WORD_CAP)]
        word_cap: usize,
        /// Proceed even if ρ is not an anti-homomorphism.
        #[arg(long)]
        force: bool,
    },
    /// Build a semi-brace document.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
        /// Output file; standard output if absent.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// All circ groups compatible with a dot table.
    Enumerate {
        /// A document or a bare JSON matrix.
        #[arg(long)]
        dot: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
        /// Write each structure as a document in this directory.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Quotient by an ideal.
    Quotient {
        file: PathBuf,
        /// Comma-separated 0-based elements.
        #[arg(long, value_delimiter = ',', required = true)]
        ideal: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    file: PathBuf,
    #[arg(long)]
    check_ybe: bool,
    #[arg(long)]
    powers: bool,
    #[arg(long)]
    degeneracy: bool,
    /// Tabulate the map even if ρ is not an anti-homomorphism.
    #[arg(long)]
    force: bool,
    /// Write the pair table here.
    #[arg(long)]
    export: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SideArg {
    #[value(name = "l", alias = "left")]
    Left,
    #[value(name = "r", alias = "right")]
    Right,
}

#[derive(Debug, Subcommand)]
pub enum ConstructKind {
    /// The six-element example on `Z₃ × Z₂` with circ `C₆`.
    C6,
    /// Left or right zero dot over a catalog group.
    Zero {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum)]
        side: SideArg,
    },
    /// Product over a skew brace document and two catalog groups.
    Product {
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        i: String,
        #[arg(long)]
        j: String,
    },
    /// Matched product from a data file.
    Matched { datafile: PathBuf },
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_file(path: &Path, text: &str) -> CliResult {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load(path: &Path) -> CliResult<(SemibraceDocument, LeftSemiBrace)> {
    let doc = SemibraceDocument::parse(&read(path)?)?;
    let b = doc.to_brace()?;
    Ok((doc, b))
}

fn catalog(name: &str) -> CliResult<GroupTable> {
    group_by_name(name).ok_or_else(|| CliError::Usage(format!("unknown group `{name}`")))
}

fn list(xs: &[usize]) -> String {
    let parts: Vec<String> = xs.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(", "))
}

pub fn run(cli: Cli, out: &mut dyn Write) -> CliResult {
    match cli.command {
        Command::Verify { file } => verify(&file, out),
        Command::Analyze { file, ideal_cap } => analyze(&file, ideal_cap, out),
        Command::Solve(args) => solve(args, out),
        Command::Growth {
            file,
            max_degree,
            csv,
            word_cap,
            force,
        } => growth(&file, max_degree, csv.as_deref(), word_cap, force, out),
        Command::Construct { kind, out: path } => construct(kind, path.as_deref(), out),
        Command::Enumerate { dot, cap, out_dir } => enumerate(&dot, cap, out_dir.as_deref(), out),
        Command::Quotient {
            file,
            ideal,
            out: path,
        } => quotient_cmd(&file, &ideal, path.as_deref(), out),
    }
}

fn verify(file: &Path, out: &mut dyn Write) -> CliResult {
    let doc = SemibraceDocument::parse(&read(file)?)?;
    match doc.to_brace() {
        Ok(b) => {
            writeln!(out, "valid: true")?;
            writeln!(out, "size: {}", b.size())?;
            writeln!(out, "circ identity: {}", doc.label(b.one()))?;
            Ok(())
        }
        Err(e) => {
            writeln!(out, "valid: false")?;
            writeln!(out, "reason: {e}")?;
            let witnesses = match &e {
                Error::DotNotSemigroup(w) | Error::IdentityFails(w) => w.clone(),
                _ => Vec::new(),
            };
            for (a, b, c) in witnesses {
                writeln!(out, "witness: ({a}, {b}, {c})")?;
            }
            Err(e.into())
        }
    }
}

fn analyze(file: &Path, ideal_cap: usize, out: &mut dyn Write) -> CliResult {
    let (doc, b) = load(file)?;
    writeln!(out, "name: {}", doc.name)?;
    writeln!(out, "size: {}", b.size())?;
    writeln!(out, "circ identity: {}", b.one())?;
    let idem = b.idempotents();
    writeln!(out, "idempotents: {}", idem.len())?;
    writeln!(out, "idempotent set: {}", list(&idem))?;
    writeln!(out, "idempotents circ-closed: {}", b.is_circ_closed(&idem))?;
    let anti = b.is_rho_antihomomorphism()?;
    writeln!(out, "rho_antihom: {}", anti.holds)?;
    if let Some((x, y, z)) = anti.witness {
        writeln!(out, "rho_antihom witness: ({x}, {y}, {z})")?;
    }
    writeln!(out, "skew brace: {}", b.is_skew_brace()?)?;

    let c = b.corners()?;
    writeln!(out, "K = B1∘: {} {}", c.k.len(), list(&c.k))?;
    writeln!(out, "R = 1∘B: {} {}", c.r.len(), list(&c.r))?;
    writeln!(out, "G = 1∘B1∘: {} {}", c.g.len(), list(&c.g))?;
    writeln!(out, "E(K): {}", list(&c.idempotents_k))?;
    writeln!(out, "E(R): {}", list(&c.idempotents_r))?;
    writeln!(
        out,
        "rees: group order {}, {} rows, {} columns",
        c.rees.group.size(),
        c.rees.rows,
        c.rees.cols
    )?;
    for x in 0..b.size() {
        let rc = c.rees.coord(x);
        writeln!(
            out,
            "  {} = ({}, {}, {})",
            doc.label(x),
            rc.g + 1,
            rc.i + 1,
            rc.j + 1
        )?;
    }
    writeln!(out, "socle: {}", list(&socle(&b)?.elements()))?;

    if !anti.holds {
        writeln!(
            out,
            "decomposition: skipped, rho is not an anti-homomorphism"
        )?;
        writeln!(out, "ideals: skipped, rho is not an anti-homomorphism")?;
        return Ok(());
    }
    let d = decompose(&b)?;
    writeln!(
        out,
        "decomposition: B ≅ K ⋈ E(R) with |K| = {}, |E(R)| = {}; K ≅ G ⋈ E(K) with |G| = {}, |E(K)| = {}",
        d.k_elements.len(),
        d.r_elements.len(),
        d.g_elements.len(),
        d.e_elements.len()
    )?;
    let ideals = all_ideals(&b, ideal_cap)?;
    writeln!(out, "ideals: {}", ideals.len())?;
    for i in &ideals {
        writeln!(out, "  {}", list(&i.elements()))?;
    }
    Ok(())
}

fn solve(args: SolveArgs, out: &mut dyn Write) -> CliResult {
    let (_, b) = load(&args.file)?;
    let s = if args.force {
        solution_from_semibrace_forced(&b)
    } else {
        solution_from_semibrace(&b)?
    };
    out.write_all(s.to_pair_table().as_bytes())?;
    if args.check_ybe {
        let r = verify_ybe(&s);
        writeln!(out, "ybe: {}", r.holds)?;
        if let Some((x, y, z)) = r.witness {
            writeln!(out, "ybe witness: ({x}, {y}, {z})")?;
        }
    }
    if args.powers {
        let p = power_properties(&s);
        writeln!(out, "bijective: {}", p.bijective)?;
        writeln!(out, "involutive: {}", p.involutive)?;
        writeln!(out, "r^2 = r: {}", p.idempotent_r2)?;
        writeln!(out, "r^3 = r: {}", p.cubic_r3)?;
    }
    if args.degeneracy {
        let d = degeneracy_report(&s);
        writeln!(out, "left nondegenerate: {}", d.left_nondegenerate)?;
        writeln!(out, "right nondegenerate: {}", d.right_nondegenerate)?;
    }
    if let Some(path) = args.export {
        write_file(&path, &s.to_pair_table())?;
    }
    Ok(())
}

fn growth(
    file: &Path,
    max_degree: usize,
    csv: Option<&Path>,
    word_cap: usize,
    force: bool,
    out: &mut dyn Write,
) -> CliResult {
    let (_, b) = load(file)?;
    let s: SetSolution = if force {
        solution_from_semibrace_forced(&b)
    } else {
        solution_from_semibrace(&b)?
    };
    let g = growth_series(&presentation(&s), max_degree, word_cap)?;
    let counts: Vec<String> = g.per_degree.iter().map(usize::to_string).collect();
    writeln!(out, "counts: {}", counts.join(","))?;
    writeln!(out, "degree count cumulative")?;
    for (d, (c, cum)) in g.per_degree.iter().zip(&g.cumulative).enumerate() {
        writeln!(out, "{d} {c} {cum}")?;
    }
    match &g.gk_estimate {
        Some(e) => writeln!(
            out,
            "gk estimate: {:.4} (degree doubling at m = {}; cumulative doubling {:.4})",
            e.value, e.m, e.cumulative_doubling
        )?,
        None => writeln!(out, "gk estimate: needs max degree at least 2")?,
    }
    if let Some(path) = csv {
        write_file(path, &g.to_csv())?;
    }
    Ok(())
}

fn emit(doc: &SemibraceDocument, path: Option<&Path>, out: &mut dyn Write) -> CliResult {
    match path {
        Some(p) => write_file(p, &doc.serialize()),
        None => Ok(out.write_all(doc.serialize().as_bytes())?),
    }
}

fn construct(kind: ConstructKind, path: Option<&Path>, out: &mut dyn Write) -> CliResult {
    let (name, b) = match kind {
        ConstructKind::C6 => ("C6 example".to_string(), example_c6()),
        ConstructKind::Zero { group, side } => {
            let h = catalog(&group)?;
            let (side, word) = match side {
                SideArg::Left => (Side::Left, "left"),
                SideArg::Right => (Side::Right, "right"),
            };
            (
                format!("{word} zero over {group}"),
                zero_semibrace(&h, side),
            )
        }
        ConstructKind::Product { g, i, j } => {
            let (doc, gb) = load(&g)?;
            let (b, _) = product_semibrace(&gb, &catalog(&i)?, &catalog(&j)?)?;
            (format!("product of {} with {i} and {j}", doc.name), b)
        }
        ConstructKind::Matched { datafile } => {
            let doc = MatchedDocument::parse(&read(&datafile)?)?;
            let data = doc.to_data()?;
            if let Some(f) = verify_matched_data(&data).failure {
                return Err(Error::InvalidMatchedData(f).into());
            }
            (doc.name, matched_product(&data)?)
        }
    };
    emit(&SemibraceDocument::from_brace(name, &b), path, out)
}

fn enumerate(dot: &Path, cap: usize, out_dir: Option<&Path>, out: &mut dyn Write) -> CliResult {
    let table = parse_dot_table(&read(dot)?)?;
    let found = enumerate_circ(&table, cap)?;
    writeln!(out, "structures: {}", found.len())?;
    let classes = isomorphism_classes(&found)?;
    writeln!(out, "isomorphism classes: {}", classes.len())?;
    for (k, b) in found.iter().enumerate() {
        let rows: Vec<String> = b.circ_group().table().rows().map(list).collect();
        writeln!(out, "#{k} circ: {}", rows.join(" "))?;
        if let Some(dir) = out_dir {
            let doc = SemibraceDocument::from_brace(format!("structure {k}"), b);
            write_file(&dir.join(format!("structure-{k}.json")), &doc.serialize())?;
        }
    }
    Ok(())
}

fn quotient_cmd(
    file: &Path,
    ideal: &[usize],
    path: Option<&Path>,
    out: &mut dyn Write,
) -> CliResult {
    let (doc, b) = load(file)?;
    let mask = SubsetMask::from_elements(b.size(), ideal)?;
    let q = quotient(&b, &mask)?;
    let qdoc =
        SemibraceDocument::from_brace(format!("{} modulo {}", doc.name, list(ideal)), &q.brace);
    emit(&qdoc, path, out)?;
    if path.is_some() {
        writeln!(out, "classes: {}", q.classes.len())?;
        for c in &q.classes {
            writeln!(out, "  {}", list(c))?;
        }
    }
    Ok(())
}
