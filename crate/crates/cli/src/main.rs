use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use sect_shell::{
    cover_label, hidden_rooks, increasing_chain, partial_permutation, sect_covers, to_dot, to_json,
    verify_el_sect, Clan, ELSummary, Error, IntervalOutcome, Limits, Partition, SectPoset,
    DEFAULT_CHAIN_LIMIT,
};

#[derive(Parser)]
#[command(
    name = "sect-shell",
    version,
    about = "Bruhat order on sects of (p,q)-clans"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Dims {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    p: u32,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    q: u32,
}

impl Dims {
    fn get(&self) -> (usize, usize) {
        (self.p as usize, self.q as usize)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// List clans with rank and partial permutation.
    Enumerate {
        #[command(flatten)]
        dims: Dims,
        /// Only this sect, e.g. 3,2,1.
        #[arg(long)]
        sect: Option<Partition>,
    },
    /// Export the Hasse diagram of one sect.
    Poset {
        #[command(flatten)]
        dims: Dims,
        #[arg(long)]
        sect: Partition,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Check the EL property on every interval.
    #[command(group(ArgGroup::new("scope").required(true).args(["sect", "all_sects", "max_sum"])))]
    VerifyEl {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..), required_unless_present = "max_sum")]
        p: Option<u32>,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..), required_unless_present = "max_sum")]
        q: Option<u32>,
        #[arg(long)]
        sect: Option<Partition>,
        /// Every sect of the p x q box.
        #[arg(long)]
        all_sects: bool,
        /// Every sect of every box with p, q >= 1 and p + q <= S.
        #[arg(long, value_name = "S", conflicts_with_all = ["p", "q"])]
        max_sum: Option<usize>,
        #[arg(long, env = "SECT_SHELL_THREADS")]
        threads: Option<usize>,
        /// Intervals with more maximal chains are reported as failures.
        #[arg(long, default_value_t = DEFAULT_CHAIN_LIMIT)]
        max_chains: u128,
    },
    /// The chain of minimal covering clans from GAMMA up to TAU.
    Chain {
        #[command(flatten)]
        dims: Dims,
        #[arg(allow_hyphen_values = true)]
        gamma: String,
        #[arg(allow_hyphen_values = true)]
        tau: String,
    },
    /// The label of the covering pair GAMMA < TAU.
    Label {
        #[command(flatten)]
        dims: Dims,
        #[arg(allow_hyphen_values = true)]
        gamma: String,
        #[arg(allow_hyphen_values = true)]
        tau: String,
    },
    /// Covers of GAMMA inside its sect.
    Covers {
        #[command(flatten)]
        dims: Dims,
        #[arg(allow_hyphen_values = true)]
        gamma: String,
    },
    /// The partial permutation of GAMMA; hidden rooks are starred.
    Phi {
        #[command(flatten)]
        dims: Dims,
        #[arg(allow_hyphen_values = true)]
        gamma: String,
    },
}

enum Failure {
    Input(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    print!("{out}");
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn clan(text: &str, dims: &Dims) -> Result<Clan, Error> {
    let (p, q) = dims.get();
    Clan::parse(text, p, q)
}

fn run(command: Command, out: &mut String) -> Result<(), Failure> {
    match command {
        Command::Enumerate { dims, sect } => {
            let (p, q) = dims.get();
            let shapes = match sect {
                Some(l) => vec![l],
                None => Partition::all_in_box(p, q),
            };
            writeln!(out, "sect\trank\tclan\tphi").unwrap();
            for lambda in shapes {
                let poset = SectPoset::build(p, q, &lambda)?;
                for x in 0..poset.len() {
                    writeln!(
                        out,
                        "{lambda}\t{}\t{}\t{}",
                        poset.rank(x),
                        poset.element(x),
                        poset.phi(x)
                    )
                    .unwrap();
                }
            }
        }
        Command::Poset { dims, sect, format } => {
            let (p, q) = dims.get();
            let poset = SectPoset::build(p, q, &sect)?;
            out.push_str(&match format {
                Format::Dot => to_dot(&poset),
                Format::Json => to_json(&poset),
            });
        }
        Command::VerifyEl {
            p,
            q,
            sect,
            all_sects,
            max_sum,
            threads,
            max_chains,
        } => {
            let mut jobs: Vec<(usize, usize, Partition)> = Vec::new();
            if let Some(s) = max_sum {
                for n in 2..=s {
                    for p in 1..n {
                        for l in Partition::all_in_box(p, n - p) {
                            jobs.push((p, n - p, l));
                        }
                    }
                }
            } else {
                let (p, q) = (p.unwrap() as usize, q.unwrap() as usize);
                match sect {
                    Some(l) => {
                        l.check_fits(p, q)?;
                        jobs.push((p, q, l));
                    }
                    None => {
                        debug_assert!(all_sects);
                        for l in Partition::all_in_box(p, q) {
                            jobs.push((p, q, l));
                        }
                    }
                }
            }
            let mut builder = rayon::ThreadPoolBuilder::new();
            if let Some(n) = threads {
                builder = builder.num_threads(n);
            }
            let pool = builder
                .build()
                .map_err(|e| Failure::Input(format!("thread pool: {e}")))?;
            let limits = Limits { max_chains };
            let single = jobs.len() == 1;
            let mut ok = true;
            let mut elements = 0;
            let mut intervals = 0;
            writeln!(out, "p\tq\tsect\telements\tintervals\tmax chains\tresult").unwrap();
            for (p, q, lambda) in &jobs {
                let poset = SectPoset::build(*p, *q, lambda)?;
                let summary = pool.install(|| verify_el_sect(&poset, limits));
                let pass = summary.passes();
                ok &= pass;
                elements += summary.elements;
                intervals += summary.intervals();
                writeln!(
                    out,
                    "{p}\t{q}\t{lambda}\t{}\t{}\t{}\t{}",
                    summary.elements,
                    summary.intervals(),
                    summary.max_chain_count(),
                    if pass { "PASS" } else { "FAIL" }
                )
                .unwrap();
                if !pass {
                    describe_failure(&poset, &summary, out);
                }
            }
            let verdict = if ok { "PASS" } else { "FAIL" };
            let what = if ok {
                "all intervals EL"
            } else {
                "EL violated"
            };
            if single {
                writeln!(out, "{verdict}: {elements} elements, {what}").unwrap();
            } else {
                writeln!(
                    out,
                    "{verdict}: {} sects, {elements} elements, {intervals} intervals, {what}",
                    jobs.len()
                )
                .unwrap();
            }
            if !ok {
                return Err(Failure::Verification);
            }
        }
        Command::Chain { dims, gamma, tau } => {
            let gamma = clan(&gamma, &dims)?;
            let tau = clan(&tau, &dims)?;
            writeln!(out, "{gamma}").unwrap();
            for (c, label) in increasing_chain(&gamma, &tau)? {
                writeln!(out, "{label}\t{c}").unwrap();
            }
        }
        Command::Label { dims, gamma, tau } => {
            let label = cover_label(&clan(&gamma, &dims)?, &clan(&tau, &dims)?)?;
            writeln!(out, "{label}").unwrap();
        }
        Command::Covers { dims, gamma } => {
            for c in sect_covers(&clan(&gamma, &dims)?) {
                writeln!(
                    out,
                    "{}\t{}\t({},{})\t{}",
                    c.label,
                    c.mv.kind,
                    c.mv.rise.i + 1,
                    c.mv.rise.j + 1,
                    c.target
                )
                .unwrap();
            }
        }
        Command::Phi { dims, gamma } => {
            let gamma = clan(&gamma, &dims)?;
            let phi = partial_permutation(&gamma);
            let hidden = hidden_rooks(&gamma);
            let marked: Vec<String> = (1..=gamma.q())
                .map(|k| {
                    let star = if hidden.iter().any(|h| h.column == k) {
                        "*"
                    } else {
                        ""
                    };
                    format!("{}{star}", phi.get(k))
                })
                .collect();
            writeln!(out, "{phi}").unwrap();
            writeln!(out, "marked ({})", marked.join(",")).unwrap();
            for h in &hidden {
                writeln!(
                    out,
                    "hidden column {} height {} round {}",
                    h.column, h.height, h.round
                )
                .unwrap();
            }
        }
    }
    Ok(())
}

fn describe_failure(poset: &SectPoset, summary: &ELSummary, out: &mut String) {
    for outcome in &summary.outcomes {
        match outcome {
            IntervalOutcome::LimitExceeded {
                lower,
                upper,
                count,
            } => {
                writeln!(
                    out,
                    "  [{}, {}]: {count} maximal chains exceed the limit",
                    poset.element(*lower),
                    poset.element(*upper)
                )
                .unwrap();
                return;
            }
            IntervalOutcome::Checked(r) if !r.passes() => {
                writeln!(
                    out,
                    "  [{}, {}]: {} increasing chains, lex-least increasing {}, mcc chain {}, least atom {}",
                    poset.element(r.lower),
                    poset.element(r.upper),
                    r.increasing_chain_count,
                    r.lex_least_is_increasing,
                    r.mcc_chain_matches,
                    r.atom_minimal
                )
                .unwrap();
                return;
            }
            IntervalOutcome::Checked(_) => {}
        }
    }
}
