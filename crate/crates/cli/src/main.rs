use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use robin_dd::dd::{DnRhs, InnerSolver};
use robin_dd::experiments::{
    operator_table, run_operator, run_spectrum, run_table1, run_table2, run_table3, run_von_neumann,
    spectrum_summary_table, spectrum_table, table1_table, table2_table, table3_table, von_neumann_table,
    ExperimentConfig, Table, TableKind, TABLE2_DEEP_N,
};
use robin_dd::fem::{GridSpec, LoadRule, Side, SubdomainSystem};
use robin_dd::operator::Coordinates;
use robin_dd::Error;

#[derive(Parser, Debug)]
#[command(name = "robin-dd", version, about = "Robin-Robin domain decomposition experiments")]
#[command(arg_required_else_help = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    opts: Options,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Command {
    /// Discretisation errors and Robin-Robin iteration counts
    Table1,
    /// Measured reduction rates over h and theta
    Table2,
    /// Dirichlet-Neumann iteration counts over h and theta
    Table3,
    /// Closed-form error modes and spectral radius per grid
    Spectrum,
    /// Fourier-mode parameter advice (--n lists the cut-offs K)
    VonNeumann,
    /// Interface operator analysis on symmetric and off-centre splits
    Operator,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Md,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Solver {
    Auto,
    Cg,
    Fast,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Load {
    Interpolated,
    Exact,
}

#[derive(clap::Args, Debug)]
struct Options {
    /// Grid parameters n (h = 1/(2n)), comma separated
    #[arg(long, global = true, value_delimiter = ',')]
    n: Option<Vec<usize>>,
    /// Robin parameter on the left subdomain
    #[arg(long, global = true)]
    gamma1: Option<f64>,
    /// Coefficient c in gamma2 = c/h
    #[arg(long = "gamma2-coeff", global = true)]
    gamma2_coeff: Option<f64>,
    /// Relaxation parameters, comma separated
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    theta: Option<Vec<f64>>,
    /// Stopping tolerance on the sup-norm of the interface update
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Iteration cap per run
    #[arg(long = "max-iter", global = true)]
    max_iter: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write the report to FILE instead of standard output
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Add the h = 1/72, 1/288, 1/1152 rows to table2
    #[arg(long, global = true)]
    deep: bool,
    /// Write the subdomain matrices of every listed grid as MatrixMarket files
    #[arg(long = "dump-matrices", global = true, value_name = "DIR")]
    dump_matrices: Option<PathBuf>,
    /// Add the left-subdomain source to the Dirichlet-Neumann interface rows
    #[arg(long = "dn-with-left-source", global = true)]
    dn_with_left_source: bool,
    /// Analyse interface operators in nodal instead of mass-orthonormal coordinates
    #[arg(long, global = true)]
    euclidean: bool,
    /// Subdomain solver
    #[arg(long, global = true, value_enum, default_value_t = Solver::Auto)]
    solver: Solver,
    /// Load-vector quadrature
    #[arg(long, global = true, value_enum, default_value_t = Load::Interpolated)]
    load: Load,
    /// Seed for random initial interface data
    #[arg(long, global = true)]
    seed: Option<u64>,
}

enum Failure {
    Config(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(m) => Failure::Config(m),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

fn build_config(command: Command, o: &Options) -> ExperimentConfig {
    let kind = match command {
        Command::Table1 => TableKind::Table1,
        Command::Table2 => TableKind::Table2,
        Command::Table3 => TableKind::Table3,
        Command::Spectrum => TableKind::Spectrum,
        Command::VonNeumann => TableKind::VonNeumann,
        Command::Operator => TableKind::Operator,
    };
    let mut c = ExperimentConfig::defaults(kind);
    match &o.n {
        Some(n) => c.n_list = n.clone(),
        None if o.deep && kind == TableKind::Table2 => c.n_list.extend(TABLE2_DEEP_N),
        None => {}
    }
    if let Some(v) = o.gamma1 {
        c.gamma1 = v;
    }
    if let Some(v) = o.gamma2_coeff {
        c.gamma2_coeff = v;
    }
    if let Some(v) = &o.theta {
        c.theta_list = v.clone();
    }
    if let Some(v) = o.tol {
        c.stop_tol = v;
    }
    if let Some(v) = o.max_iter {
        c.max_iter = v;
    }
    if let Some(v) = o.seed {
        c.seed = v;
    }
    c.inner = match o.solver {
        Solver::Auto => None,
        Solver::Cg => Some(InnerSolver::default()),
        Solver::Fast => Some(InnerSolver::FastSine),
    };
    c.load_rule = match o.load {
        Load::Interpolated => LoadRule::Interpolated,
        Load::Exact => LoadRule::Exact,
    };
    if o.dn_with_left_source {
        c.dn_rhs = DnRhs::WithLeftSource;
    }
    if o.euclidean {
        c.coordinates = Coordinates::Euclidean;
    }
    c
}

fn write_csv(table: &Table, out: &mut dyn Write) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(&table.headers)?;
    for r in &table.rows {
        w.write_record(r)?;
    }
    w.flush()?;
    Ok(())
}

fn emit(tables: &[Table], format: Format, out: Option<&Path>) -> Result<(), Failure> {
    let mut sink: Box<dyn Write> = match out {
        Some(p) => Box::new(io::BufWriter::new(fs::File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    };
    match format {
        Format::Md => {
            for (k, t) in tables.iter().enumerate() {
                if k > 0 {
                    writeln!(sink)?;
                }
                write!(sink, "{}", t.to_markdown())?;
            }
        }
        Format::Csv => {
            // the first table is the data; the rest are summaries for stderr
            if let Some(first) = tables.first() {
                write_csv(first, &mut sink)?;
            }
            for t in tables.iter().skip(1) {
                write_csv(t, &mut io::stderr().lock())?;
            }
        }
    }
    sink.flush()?;
    Ok(())
}

fn dump_matrices(dir: &Path, config: &ExperimentConfig) -> Result<(), Failure> {
    fs::create_dir_all(dir)?;
    for &n in &config.n_list {
        let grid = GridSpec::new(n)?;
        for (side, name) in [(Side::Left, "left"), (Side::Right, "right")] {
            let s = SubdomainSystem::homogeneous(&grid, side);
            fs::write(
                dir.join(format!("stiffness_{name}_n{n}.mtx")),
                s.stiffness().to_matrix_market(),
            )?;
        }
        let s = SubdomainSystem::homogeneous(&grid, Side::Left);
        let mass = robin_dd::linalg::SparseMatrix::from_dense(&s.interface_mass().to_dense());
        let stiff = robin_dd::linalg::SparseMatrix::from_dense(&s.interface_stiffness().to_dense());
        fs::write(dir.join(format!("interface_mass_n{n}.mtx")), mass.to_matrix_market())?;
        fs::write(
            dir.join(format!("interface_stiffness_n{n}.mtx")),
            stiff.to_matrix_market(),
        )?;
    }
    Ok(())
}

/// Produces the tables and reports whether every iteration converged.
fn run(command: Command, config: &ExperimentConfig) -> Result<(Vec<Table>, bool), Failure> {
    Ok(match command {
        Command::Table1 => {
            let rows = run_table1(config)?;
            let ok = rows.iter().all(|r| r.converged);
            (vec![table1_table(&rows)], ok)
        }
        Command::Table2 => {
            let rows = run_table2(config)?;
            let ok = rows.iter().flatten().all(|c| c.converged);
            (vec![table2_table(&rows, &config.theta_list)], ok)
        }
        Command::Table3 => {
            let rows = run_table3(config)?;
            let ok = rows.iter().flatten().all(|c| c.converged);
            (vec![table3_table(&rows, &config.theta_list)], ok)
        }
        Command::Spectrum => {
            let r = run_spectrum(config)?;
            (vec![spectrum_table(&r), spectrum_summary_table(&r)], true)
        }
        Command::VonNeumann => (vec![von_neumann_table(&run_von_neumann(config)?)], true),
        Command::Operator => (vec![operator_table(&run_operator(config)?)], true),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let config = build_config(cli.command, &cli.opts);
    if let Err(e) = config.validate() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let result = (|| -> Result<bool, Failure> {
        if let Some(dir) = &cli.opts.dump_matrices {
            dump_matrices(dir, &config)?;
        }
        let (tables, converged) = run(cli.command, &config)?;
        emit(&tables, cli.opts.format, cli.opts.out.as_deref())?;
        Ok(converged)
    })();
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("warning: at least one iteration stopped at the cap without converging");
            ExitCode::from(3)
        }
        Err(Failure::Config(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
