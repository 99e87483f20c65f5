use std::path::PathBuf;
use std::process::exit;

use brauer_cli::{
    exit_code_for_error, run_basis_cor, run_campaign, run_dims, run_ideal_sym, run_identity,
    run_kernel, run_relations, run_seminormal, run_specht, run_verify_main, FieldChoice,
};
use clap::{Args, Parser, Subcommand};

/// Exact verification of diagram-algebra and symmetric-group claims. Every
/// subcommand prints a JSON report on standard output (progress goes to
/// standard error) and exits 0 when all assertions pass, 1 when any fails,
/// 2 on usage errors, 3 on resource-guard refusals.
#[derive(Parser)]
#[command(name = "brauer", version, about)]
struct Cli {
    /// Also write the JSON report to this file
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

/// Coefficient field: exactly one of --char P or --rational.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct FieldArgs {
    /// Work over the prime field GF(P)
    #[arg(long = "char", value_name = "P")]
    characteristic: Option<u64>,

    /// Work over the rational numbers
    #[arg(long)]
    rational: bool,
}

impl FieldArgs {
    fn choice(&self) -> FieldChoice {
        match self.characteristic {
            Some(p) => FieldChoice::Char(p),
            None => FieldChoice::Rational,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Diagram counts, normal-form round trips, and algebra dimensions up to n strands
    Dims {
        #[arg(long)]
        n: usize,
    },
    /// The defining presentation over the integral polynomial ring at n strands
    Relations {
        #[arg(long)]
        n: usize,
    },
    /// Hook-length dimension versus direct tableau enumeration for one shape
    Specht {
        /// Partition as comma-separated parts, e.g. 3,2,1
        #[arg(long, value_delimiter = ',', value_name = "PARTS")]
        lambda: Vec<usize>,
    },
    /// The Catalan-type dimension identity at parameter m
    Identity {
        #[arg(long)]
        m: usize,
    },
    /// Kernel dimension of the tensor representation against the oracle
    Kernel {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// The annihilator as a principal ideal of the middle quasi-idempotent
    VerifyMain {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Dimension of the two-sided ideal of a two-row symmetrizer
    IdealSym {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: usize,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// The rational seminormal suite at degree n
    Seminormal {
        #[arg(long)]
        n: usize,
    },
    /// The explicit tableau basis of the annihilator at n = m + 1
    BasisCor {
        #[arg(long)]
        m: usize,
    },
    /// The full verification campaign in one aggregated report
    Campaign,
}

fn main() {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Dims { n } => run_dims(*n),
        Command::Relations { n } => run_relations(*n),
        Command::Specht { lambda } => run_specht(lambda),
        Command::Identity { m } => run_identity(*m),
        Command::Kernel { m, n, field } => run_kernel(*m, *n, field.choice()),
        Command::VerifyMain { m, n, field } => run_verify_main(*m, *n, field.choice()),
        Command::IdealSym { n, a, field } => run_ideal_sym(*n, *a, field.choice()),
        Command::Seminormal { n } => run_seminormal(*n),
        Command::BasisCor { m } => run_basis_cor(*m),
        Command::Campaign => run_campaign(),
    };
    match result {
        Ok(report) => {
            let json = report.to_json();
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, format!("{json}\n")) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    exit(2);
                }
            }
            println!("{json}");
            exit(report.exit_code());
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit(exit_code_for_error(&e));
        }
    }
}
