use clap::{Parser, Subcommand};

use lateq::cli;

/// Finite-lattice complementarity checks and lattice-game equilibria.
#[derive(Parser)]
#[command(name = "lateq", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a property of a function, two-variable function, or subset.
    Check(cli::CheckArgs),
    /// Solve a game by monotone fixed-point iteration and analyze its
    /// equilibrium set.
    Solve(cli::SolveArgs),
    /// Evaluate a theorem's hypothesis set on a game, condition by
    /// condition.
    Hypotheses(cli::HypothesesArgs),
    /// Exhaustively map implications between all unary properties.
    Atlas(cli::AtlasArgs),
    /// Search for separating functions or games.
    Search(cli::SearchArgs),
    /// List or emit the built-in instances.
    Builtin(cli::BuiltinArgs),
}

fn main() {
    let cli = Cli::parse();
    let mut out = std::io::stdout();
    let code = match cli.command {
        Command::Check(args) => cli::cmd_check(&args, &mut out),
        Command::Solve(args) => cli::cmd_solve(&args, &mut out),
        Command::Hypotheses(args) => cli::cmd_hypotheses(&args, &mut out),
        Command::Atlas(args) => cli::cmd_atlas(&args, &mut out),
        Command::Search(args) => cli::cmd_search(&args, &mut out),
        Command::Builtin(args) => cli::cmd_builtin(&args, &mut out),
    };
    std::process::exit(code);
}
