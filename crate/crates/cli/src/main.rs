use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use rookstack::machine::MachineState;
use rookstack::perm::parse_basis;
use rookstack::series::{catalan, gf_av1342, gf_av3124_1234};
use rookstack::verify::{self, Suite};
use rookstack::{
    chi, enumerate_avoiders, execute_traced, greedy_word, pi_map, sortable, ChainReport, Error, Permutation,
    PowerSeries,
};

mod render;

const MAX_ORDER: usize = 1000;

#[derive(Parser)]
#[command(
    name = "rookstack",
    version,
    about = "Permutations, rook placements, labeled Dyck paths and two-stack sorting"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Follow a permutation through the board, path, word and sorting stages.
    Chain {
        #[arg(long, value_parser = parse_perm)]
        perm: Permutation,
    },
    /// Count the avoiders of a basis for n = 1..max-n.
    Count {
        /// Comma-separated patterns, e.g. 3124,1234.
        #[arg(long)]
        basis: String,
        #[arg(long)]
        max_n: usize,
    },
    /// Coefficients of a generating function.
    Series {
        #[arg(long, value_enum)]
        name: SeriesName,
        #[arg(long)]
        order: usize,
    },
    /// Sortability by two increasing stacks in series, for one permutation or
    /// counted for n = 1..max-n.
    Sortable {
        #[arg(long, value_parser = parse_perm, conflicts_with = "max_n", required_unless_present = "max_n")]
        perm: Option<Permutation>,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Run exhaustive cross-checks.
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Draw the placement, labeled path or sorting trace of a permutation.
    Render {
        #[arg(long, value_parser = parse_perm)]
        perm: Permutation,
        #[arg(long, value_enum, default_value = "board")]
        what: RenderWhat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesName {
    Catalan,
    Av1342,
    #[value(name = "av3124-1234")]
    Av3124_1234,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderWhat {
    Board,
    Path,
    Trace,
}

fn parse_perm(s: &str) -> Result<Permutation, String> {
    let p: Permutation = s.parse().map_err(|e: Error| e.to_string())?;
    if p.is_empty() {
        return Err("permutation is empty".into());
    }
    Ok(p)
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Verification,
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn print_json(value: &impl serde::Serialize) -> Outcome {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn cmd_chain(perm: &Permutation, as_json: bool) -> Outcome {
    let r = ChainReport::compute(perm)?;
    if let Some(note) = &r.diagnostic {
        eprintln!("warning: {note}");
    }
    if as_json {
        return print_json(&r);
    }
    let heights: Vec<String> = r.heights.iter().map(|h| h.to_string()).collect();
    let rooks: Vec<String> = r.rooks.iter().map(|(c, row)| format!("({c},{row})")).collect();
    let labels: Vec<String> = r.labels.iter().map(|l| l.to_string()).collect();
    println!("permutation: {}", r.permutation);
    println!("board:       {}", heights.join(","));
    println!("rooks:       {}", rooks.join(" "));
    println!("path:        {}", r.steps);
    println!("labels:      {}", labels.join(","));
    println!("word:        {}", r.word.as_deref().unwrap_or("-"));
    println!(
        "sorts:       {}",
        r.sorts.as_ref().map_or_else(|| "-".to_string(), |p| p.to_string())
    );
    println!("av3124:      {}", r.in_av3124);
    println!("av3124,1234: {}", r.in_av3124_1234);
    println!("lx312:       {}", r.is_lx312);
    println!("max label:   {}", r.max_label);
    Ok(())
}

fn cmd_count(basis: &str, max_n: usize, as_json: bool) -> Outcome {
    let basis = parse_basis(basis)?;
    let mut counts = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        counts.push(enumerate_avoiders(n, &basis)?.len());
    }
    if as_json {
        let patterns: Vec<String> = basis.iter().map(|p| p.to_string()).collect();
        return print_json(&json!({ "basis": patterns, "counts": counts }));
    }
    for (i, c) in counts.iter().enumerate() {
        println!("{}: {c}", i + 1);
    }
    Ok(())
}

fn cmd_series(name: SeriesName, order: usize, as_json: bool) -> Outcome {
    if order > MAX_ORDER {
        return Err(Error::TooLarge {
            what: "series order",
            n: order,
            limit: MAX_ORDER,
        }
        .into());
    }
    let s: PowerSeries = match name {
        SeriesName::Catalan => catalan(order),
        SeriesName::Av1342 => gf_av1342(order)?,
        SeriesName::Av3124_1234 => gf_av3124_1234(order)?,
    };
    if as_json {
        return print_json(&s);
    }
    print!("{s}");
    Ok(())
}

fn cmd_sortable(perm: Option<&Permutation>, max_n: Option<usize>, as_json: bool) -> Outcome {
    if let Some(p) = perm {
        let ok = sortable(p)?;
        let word = if ok {
            greedy_word(p)?.map(|w| w.to_string())
        } else {
            None
        };
        if as_json {
            return print_json(&json!({ "permutation": p, "sortable": ok, "word": word }));
        }
        println!("{p}: {}", if ok { "sortable" } else { "not sortable" });
        if let Some(w) = word {
            println!("word: {w}");
        }
        return Ok(());
    }
    let max_n = max_n.expect("clap requires --perm or --max-n");
    let mut counts = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let mut count = 0;
        for p in rookstack::all_permutations(n) {
            count += sortable(&p)? as usize;
        }
        counts.push(count);
    }
    if as_json {
        return print_json(&json!({ "counts": counts }));
    }
    for (i, c) in counts.iter().enumerate() {
        println!("{}: {c}", i + 1);
    }
    Ok(())
}

fn cmd_verify(suite: Suite, max_n: usize, as_json: bool) -> Outcome {
    let outcomes = verify::run(suite, max_n)?;
    let failed = outcomes.iter().filter(|o| !o.passed()).count();
    if as_json {
        let rows: Vec<_> = outcomes
            .iter()
            .map(|o| match &o.result {
                Ok(summary) => json!({ "name": o.name, "passed": true, "summary": summary }),
                Err(counter) => json!({ "name": o.name, "passed": false, "counterexample": counter }),
            })
            .collect();
        print_json(&json!({ "checks": rows, "failed": failed }))?;
    } else {
        for o in &outcomes {
            println!("{o}");
        }
        println!("{} passed, {failed} failed", outcomes.len() - failed);
    }
    if failed > 0 {
        return Err(Failure::Verification);
    }
    Ok(())
}

fn cmd_render(perm: &Permutation, what: RenderWhat, as_json: bool) -> Outcome {
    match what {
        RenderWhat::Board => {
            let rp = chi(perm)?;
            if as_json {
                return print_json(&rp);
            }
            print!("{}", render::board(&rp));
        }
        RenderWhat::Path => {
            let l = pi_map(&chi(perm)?);
            if as_json {
                return print_json(&l);
            }
            print!("{}", render::path(&l));
        }
        RenderWhat::Trace => {
            let word = greedy_word(perm)?
                .ok_or_else(|| Failure::Usage(format!("{perm} is not sortable by two increasing stacks")))?;
            let steps = execute_traced(&word, perm, true)?;
            if as_json {
                return print_json(&json!({ "word": word, "trace": steps }));
            }
            println!("word: {word}");
            print!("{}", render::trace(&MachineState::new(perm), &steps));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let j = cli.json;
    let outcome = match &cli.command {
        Command::Chain { perm } => cmd_chain(perm, j),
        Command::Count { basis, max_n } => cmd_count(basis, *max_n, j),
        Command::Series { name, order } => cmd_series(*name, *order, j),
        Command::Sortable { perm, max_n } => cmd_sortable(perm.as_ref(), *max_n, j),
        Command::Verify { suite, max_n } => cmd_verify(*suite, *max_n, j),
        Command::Render { perm, what } => cmd_render(perm, *what, j),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
