use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use grassmann_bordism::flag::FlagContext;
use grassmann_bordism::grassmann::{
    nu, sp_pullback_closed_form, sp_pullback_via_newton, sw_vector_of, PartitionIndex,
};
use grassmann_bordism::verify::{
    check_block_form, enumerate_gd, fossum_check, proposition_matrix, verify_range, verify_theorem,
    MemberRecord,
};
use grassmann_bordism::{
    Error, Field, GrassmannianDesc, Method, Partition, VerificationReport, VerifyOptions,
};
use serde::Serialize;

mod render;

use render::{json_line, tsv_line};

#[derive(Parser)]
#[command(
    name = "grassmann-bordism",
    version,
    about = "Mod-2 characteristic numbers of Grassmannians and bordism independence checks"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Allow Stiefel-Whitney vector computations above dimension 24.
    #[arg(long, global = true)]
    allow_large: bool,

    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Text,
}

#[derive(Args)]
struct GrassmannianArgs {
    #[arg(long)]
    field: Field,
    #[arg(long)]
    k: u32,
    #[arg(long)]
    n: u32,
}

impl GrassmannianArgs {
    fn desc(&self) -> Result<GrassmannianDesc, Error> {
        GrassmannianDesc::new(self.field, self.k, self.n)
    }
}

#[derive(Subcommand)]
enum Command {
    /// 2-adic valuation of a positive integer.
    Nu { m: u64 },
    /// Whether G_k(F^{n+k}) is a boundary.
    Bounds(GrassmannianArgs),
    /// Non-bounding Grassmannians of a given dimension.
    Enumerate {
        #[arg(long)]
        dim: u32,
        /// Comma-separated subset of R,C,H.
        #[arg(long, value_delimiter = ',', default_values_t = Field::ALL)]
        fields: Vec<Field>,
        #[arg(long)]
        real_only: bool,
    },
    /// One Stiefel-Whitney number.
    SwNumber {
        #[command(flatten)]
        grassmannian: GrassmannianArgs,
        /// Descending parts, e.g. 4,2,1,1.
        #[arg(long)]
        partition: Partition,
    },
    /// All Stiefel-Whitney numbers, one per partition of the dimension.
    SwVector(GrassmannianArgs),
    /// Compares the two computations of the power-sum class S_p.
    SpCheck {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: u32,
    },
    /// The f_l characteristic-number matrix of the real members.
    PropMatrix {
        #[arg(long)]
        dim: u32,
    },
    /// Checks linear independence for one dimension.
    Verify {
        #[arg(long)]
        dim: u32,
        #[arg(long, default_value = "both")]
        method: Method,
    },
    /// Checks every even dimension up to a bound.
    VerifyRange {
        #[arg(long)]
        max_dim: u32,
        #[arg(long, default_value = "both")]
        method: Method,
    },
    /// Compares G_{2k}(R^{2n+2k}) with the fourth power of G_k(R^{n+k}).
    Fossum {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u32,
    },
}

/// Whether the computed claim held.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Verdict {
    Holds,
    Falsified,
}

impl Verdict {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Holds
        } else {
            Verdict::Falsified
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let mut out = io::stdout().lock();
    match run(&cli, &mut out) {
        Ok(Verdict::Holds) => ExitCode::SUCCESS,
        Ok(Verdict::Falsified) => ExitCode::from(1),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

#[derive(Debug)]
enum CliError {
    Core(Error),
    Io(io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => e.fmt(f),
            CliError::Io(e) => e.fmt(f),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult = Result<Verdict, CliError>;

fn run(cli: &Cli, out: &mut impl Write) -> CliResult {
    let opts = VerifyOptions {
        allow_large: cli.allow_large,
    };
    let format = cli.format;
    match &cli.command {
        Command::Nu { m } => cmd_nu(*m, format, out),
        Command::Bounds(g) => cmd_bounds(&g.desc()?, format, out),
        Command::Enumerate {
            dim,
            fields,
            real_only,
        } => {
            let fields = if *real_only {
                vec![Field::R]
            } else {
                fields.clone()
            };
            cmd_enumerate(*dim, &fields, format, out)
        }
        Command::SwNumber {
            grassmannian,
            partition,
        } => cmd_sw_number(&grassmannian.desc()?, partition, opts, format, out),
        Command::SwVector(g) => cmd_sw_vector(&g.desc()?, opts, format, out),
        Command::SpCheck { k, n, p } => cmd_sp_check(*k, *n, *p, format, out),
        Command::PropMatrix { dim } => cmd_prop_matrix(*dim, format, out),
        Command::Verify { dim, method } => {
            let report = verify_theorem(*dim, *method, opts)?;
            write_reports(std::slice::from_ref(&report), false, format, out)
        }
        Command::VerifyRange { max_dim, method } => {
            let reports = verify_range(*max_dim, *method, opts)?;
            write_reports(&reports, true, format, out)
        }
        Command::Fossum { k, n } => cmd_fossum(*k, *n, opts, format, out),
    }
}

fn cmd_nu(m: u64, format: Format, out: &mut impl Write) -> CliResult {
    let v = nu(m)?;
    match format {
        Format::Text => writeln!(out, "{v}")?,
        Format::Tsv => {
            tsv_line(out, ["m", "nu"])?;
            tsv_line(out, [m.to_string(), v.to_string()])?;
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Row {
                m: u64,
                nu: u32,
            }
            json_line(out, &Row { m, nu: v })?;
        }
    }
    Ok(Verdict::Holds)
}

fn cmd_bounds(g: &GrassmannianDesc, format: Format, out: &mut impl Write) -> CliResult {
    let ambient = g.ambient();
    let nu_ambient = nu(ambient.into())?;
    let nu_k = nu(g.k.into())?;
    let bounds = g.bounds();
    match format {
        Format::Text => {
            let op = if bounds { ">" } else { "<=" };
            writeln!(
                out,
                "bounds: {bounds} (nu({ambient})={nu_ambient} {op} nu({})={nu_k})",
                g.k
            )?;
        }
        Format::Tsv => {
            tsv_line(out, ["field", "k", "n", "bounds", "nu_ambient", "nu_k"])?;
            tsv_line(
                out,
                [
                    g.field.to_string(),
                    g.k.to_string(),
                    g.n.to_string(),
                    bounds.to_string(),
                    nu_ambient.to_string(),
                    nu_k.to_string(),
                ],
            )?;
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Row {
                field: Field,
                k: u32,
                n: u32,
                bounds: bool,
                nu_ambient: u32,
                nu_k: u32,
            }
            json_line(
                out,
                &Row {
                    field: g.field,
                    k: g.k,
                    n: g.n,
                    bounds,
                    nu_ambient,
                    nu_k,
                },
            )?;
        }
    }
    Ok(Verdict::Holds)
}

fn block_str(m: &MemberRecord) -> &'static str {
    m.block.map_or("-", |b| b.as_str())
}

fn cmd_enumerate(dim: u32, fields: &[Field], format: Format, out: &mut impl Write) -> CliResult {
    if dim == 0 {
        return Err(Error::InvalidParameters("dimension must be positive".into()).into());
    }
    let e = enumerate_gd(dim, fields);
    let records: Vec<MemberRecord> = e.members.iter().map(MemberRecord::from).collect();
    match format {
        Format::Text => {
            for (g, m) in e.members.iter().zip(&records) {
                writeln!(out, "{}\t{}\t{}", g.label(), g, block_str(m))?;
            }
        }
        Format::Tsv => {
            tsv_line(out, ["field", "k", "n", "label", "block"])?;
            for (g, m) in e.members.iter().zip(&records) {
                tsv_line(
                    out,
                    [
                        g.field.to_string(),
                        g.k.to_string(),
                        g.n.to_string(),
                        g.label(),
                        block_str(m).to_string(),
                    ],
                )?;
            }
        }
        Format::Json => json_line(out, &records)?,
    }
    Ok(Verdict::Holds)
}

fn cmd_sw_number(
    g: &GrassmannianDesc,
    partition: &Partition,
    opts: VerifyOptions,
    format: Format,
    out: &mut impl Write,
) -> CliResult {
    let dim = g.real_dimension();
    if partition.weight() != dim {
        return Err(Error::WeightMismatch {
            weight: partition.weight(),
            dim,
        }
        .into());
    }
    opts.check_dim(dim)?;
    let value = sw_vector_of(g)?
        .get(partition)
        .expect("weight matches the dimension");
    let bit = u8::from(value);
    match format {
        Format::Text => writeln!(out, "{bit}")?,
        Format::Tsv => {
            tsv_line(out, ["grassmannian", "partition", "value"])?;
            tsv_line(out, [g.to_string(), partition.to_string(), bit.to_string()])?;
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Row {
                field: Field,
                k: u32,
                n: u32,
                partition: String,
                value: u8,
            }
            json_line(
                out,
                &Row {
                    field: g.field,
                    k: g.k,
                    n: g.n,
                    partition: partition.to_string(),
                    value: bit,
                },
            )?;
        }
    }
    Ok(Verdict::Holds)
}

fn cmd_sw_vector(
    g: &GrassmannianDesc,
    opts: VerifyOptions,
    format: Format,
    out: &mut impl Write,
) -> CliResult {
    opts.check_dim(g.real_dimension())?;
    let v = sw_vector_of(g)?;
    let entries = v.entries();
    match format {
        Format::Text => {
            for (p, b) in &entries {
                writeln!(out, "{p}\t{}", u8::from(*b))?;
            }
        }
        Format::Tsv => {
            tsv_line(out, ["partition", "value"])?;
            for (p, b) in &entries {
                tsv_line(out, [p.to_string(), u8::from(*b).to_string()])?;
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Row {
                field: Field,
                k: u32,
                n: u32,
                dim: u32,
                partitions: Vec<String>,
                bits: String,
            }
            let index = PartitionIndex::of(v.dim());
            json_line(
                out,
                &Row {
                    field: g.field,
                    k: g.k,
                    n: g.n,
                    dim: v.dim(),
                    partitions: index.list().iter().map(ToString::to_string).collect(),
                    bits: v.to_bitstring(),
                },
            )?;
        }
    }
    Ok(Verdict::Holds)
}

fn cmd_sp_check(k: u32, n: u32, p: u32, format: Format, out: &mut impl Write) -> CliResult {
    let g = GrassmannianDesc::real(k, n)?;
    let ctx = FlagContext::new(g.ambient() as usize)?;
    let closed = sp_pullback_closed_form(&g, p)?;
    let newton = sp_pullback_via_newton(&g, p, p)?;
    let closed_nf = ctx.normal_form(&closed)?;
    let newton_nf = ctx.normal_form(&newton)?;
    let agree = closed_nf == newton_nf;
    match format {
        Format::Text => {
            writeln!(out, "closed form: {closed}")?;
            writeln!(out, "substitution: {newton}")?;
            writeln!(out, "agree: {agree}")?;
        }
        Format::Tsv => {
            tsv_line(
                out,
                ["grassmannian", "p", "closed_form", "substitution", "agree"],
            )?;
            tsv_line(
                out,
                [
                    g.to_string(),
                    p.to_string(),
                    closed.to_string(),
                    newton.to_string(),
                    agree.to_string(),
                ],
            )?;
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Row {
                k: u32,
                n: u32,
                p: u32,
                closed_form: String,
                substitution: String,
                agree: bool,
            }
            json_line(
                out,
                &Row {
                    k,
                    n,
                    p,
                    closed_form: closed.to_string(),
                    substitution: newton.to_string(),
                    agree,
                },
            )?;
        }
    }
    Ok(Verdict::from_bool(agree))
}

fn cmd_prop_matrix(dim: u32, format: Format, out: &mut impl Write) -> CliResult {
    let (e, m) = proposition_matrix(dim)?;
    let failures = check_block_form(&e, &m);
    let cols: Vec<String> = e.real_members().iter().map(|g| g.label()).collect();
    let rows: Vec<String> = e.o_members().iter().map(|g| g.label()).collect();
    match format {
        Format::Text => {
            let width = rows.iter().map(String::len).max().unwrap_or(0);
            for (label, bits) in rows.iter().zip(m.row_strings()) {
                writeln!(out, "{label:width$}  {bits}")?;
            }
            for f in &failures {
                writeln!(out, "falsified: {f}")?;
            }
        }
        Format::Tsv => {
            tsv_line(out, &cols)?;
            for r in 0..m.rows() {
                tsv_line(out, m.row(r).iter().map(|&b| u8::from(b).to_string()))?;
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Matrix {
                dim: u32,
                rows: Vec<String>,
                cols: Vec<String>,
                matrix: Vec<String>,
                verified: bool,
            }
            json_line(
                out,
                &Matrix {
                    dim,
                    rows,
                    cols,
                    matrix: m.row_strings(),
                    verified: failures.is_empty(),
                },
            )?;
        }
    }
    for f in &failures {
        eprintln!("falsified: {f}");
    }
    Ok(Verdict::from_bool(failures.is_empty()))
}

fn write_reports(
    reports: &[VerificationReport],
    as_list: bool,
    format: Format,
    out: &mut impl Write,
) -> CliResult {
    match format {
        Format::Text => {
            for r in reports {
                let verdict = if r.verified { "verified" } else { "falsified" };
                writeln!(
                    out,
                    "d={}: {verdict} (method {}, {} members, rank {}, {} ms)",
                    r.dim,
                    r.method,
                    r.members.len(),
                    r.rank,
                    r.elapsed_ms
                )?;
                for f in &r.failures {
                    writeln!(out, "  {f}")?;
                }
            }
        }
        Format::Tsv => {
            tsv_line(
                out,
                ["dim", "method", "members", "rank", "verified", "elapsed_ms"],
            )?;
            for r in reports {
                tsv_line(
                    out,
                    [
                        r.dim.to_string(),
                        r.method.to_string(),
                        r.members.len().to_string(),
                        r.rank.to_string(),
                        r.verified.to_string(),
                        r.elapsed_ms.to_string(),
                    ],
                )?;
            }
        }
        Format::Json if as_list => json_line(out, &reports)?,
        Format::Json => json_line(out, &reports[0])?,
    }
    Ok(Verdict::from_bool(reports.iter().all(|r| r.verified)))
}

fn cmd_fossum(
    k: u32,
    n: u32,
    opts: VerifyOptions,
    format: Format,
    out: &mut impl Write,
) -> CliResult {
    let outcome = fossum_check(k, n, opts)?;
    let holds = outcome.holds();
    let doubled = GrassmannianDesc::real(2 * k, 2 * n)?;
    let base = GrassmannianDesc::real(k, n)?;
    match format {
        Format::Text => {
            let rel = if holds { "=" } else { "!=" };
            writeln!(out, "{} {rel} {}^4", doubled.label(), base.label())?;
            writeln!(out, "doubled:      {}", outcome.doubled.to_bitstring())?;
            writeln!(out, "fourth power: {}", outcome.fourth_power.to_bitstring())?;
        }
        Format::Tsv => {
            tsv_line(out, ["k", "n", "doubled", "fourth_power", "holds"])?;
            tsv_line(
                out,
                [
                    k.to_string(),
                    n.to_string(),
                    outcome.doubled.to_bitstring(),
                    outcome.fourth_power.to_bitstring(),
                    holds.to_string(),
                ],
            )?;
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Row {
                k: u32,
                n: u32,
                doubled: String,
                fourth_power: String,
                holds: bool,
            }
            json_line(
                out,
                &Row {
                    k,
                    n,
                    doubled: outcome.doubled.to_bitstring(),
                    fourth_power: outcome.fourth_power.to_bitstring(),
                    holds,
                },
            )?;
        }
    }
    Ok(Verdict::from_bool(holds))
}
