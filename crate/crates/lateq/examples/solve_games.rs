//! Solve a lattice game two ways: brute-force equilibrium enumeration and
//! Tarski iteration over an increasing best-response selection, with the
//! hypothesis report that licenses the fixed-point route.
//!
//! Run with `cargo run --example solve_games`.

use lateq::builtins;
use lateq::game::{Polarity, SelectionPolicy, ALL_THEOREMS};
use lateq::optima::FixpointSide;

fn main() {
    let game = builtins::builtin_game("coordination_2x2", None).unwrap().game;
    println!("coordination game on {{0,1}} x {{0,1}} (payoff 1 iff strategies match)");

    println!();
    println!("hypothesis reports:");
    for theorem in ALL_THEOREMS {
        let report = game.check_hypotheses(theorem, Polarity::Plain);
        println!("  {theorem}: {}", if report.overall { "pass" } else { "fail" });
    }

    println!();
    let nash = game.enumerate_nash(1_000).unwrap();
    println!("equilibria by enumeration: {:?}", nash.ids());

    for (side, label) in [(FixpointSide::Least, "least"), (FixpointSide::Greatest, "greatest")] {
        for (policy, pname) in [
            (SelectionPolicy::Extremal, "extremal"),
            (SelectionPolicy::Backtracking, "backtracking"),
        ] {
            let sol = game.solve_fixed_point(side, policy).unwrap();
            println!(
                "fixed point ({label}, {pname}): {} in {} iterations, verified Nash: {}",
                sol.profile, sol.iterations, sol.verified_nash
            );
        }
    }

    println!();
    println!("best responses, player p1 against each opponent strategy:");
    for minus in 0..2 {
        let br: Vec<&str> = game
            .best_response(0, minus)
            .into_iter()
            .map(|i| game.strategy_lattice(0).id(i))
            .collect();
        println!("  against {}: {:?}", game.minus_id(0, minus), br);
    }

    // the joint best-response values here are singletons, so they are
    // trivially sublattices and the sublattice fixed-point route applies too
    let zhou = game.zhou_applicability(1_000).unwrap();
    println!();
    println!("{}", zhou.note);
}
