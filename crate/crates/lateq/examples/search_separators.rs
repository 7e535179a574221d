//! Seeded search for separating examples: functions in one property class
//! but not another, and games matching an equilibrium-structure pattern.
//!
//! Run with `cargo run --example search_separators`.

use lateq::catalog;
use lateq::game::TheoremId;
use lateq::properties::PropertyId;
use lateq::search::{
    find_separating_function, find_separating_game, FunctionSearchOutcome, FunctionSearchSpec,
    GamePredicate, GameSearchOutcome, GameSearchSpec,
};

fn main() {
    // a function that is superextremal but not weakly quasisupermodular
    let spec = FunctionSearchSpec {
        domain: catalog::diamond(),
        codomain_size: 2,
        satisfy: vec![PropertyId::Superext],
        violate: vec![PropertyId::Wqsm],
        budget: 1_000_000,
        seed: 0,
    };
    match find_separating_function(&spec) {
        FunctionSearchOutcome::Found { function, mode, draws } => {
            let values: Vec<String> = function
                .domain()
                .ids()
                .iter()
                .enumerate()
                .map(|(i, id)| format!("{id}={}", function.value(i)))
                .collect();
            println!(
                "SUPEREXT but not WQSM: {{{}}} ({mode:?} mode, {draws} candidates)",
                values.join(", ")
            );
        }
        miss => println!("unexpected miss: {miss:?}"),
    }

    // impossible specs are refuted by exhaustion, which proves nonexistence
    let spec = FunctionSearchSpec {
        domain: catalog::diamond(),
        codomain_size: 2,
        satisfy: vec![PropertyId::Qsm],
        violate: vec![PropertyId::Qsm],
        budget: 1_000_000,
        seed: 0,
    };
    match find_separating_function(&spec) {
        FunctionSearchOutcome::NotFound { exhausted, draws, .. } => {
            println!("QSM and not QSM: nonexistent (exhausted {draws} candidates: {exhausted})");
        }
        hit => println!("unexpected hit: {hit:?}"),
    }

    // a game whose equilibrium set has a largest element but no least one,
    // while the largest-equilibrium hypotheses hold
    let c2 = catalog::chain(2);
    let spec = GameSearchSpec {
        strategies: vec![c2.clone(), c2],
        payoff_levels: 2,
        satisfy: vec![
            GamePredicate::Passes(TheoremId::Largest47),
            GamePredicate::HasLargest,
        ],
        violate: vec![GamePredicate::HasLeast],
        budget: 10_000,
        seed: 0,
    };
    match find_separating_game(&spec).unwrap() {
        GameSearchOutcome::Found { game, mode, draws } => {
            println!();
            println!("game with a largest but no least equilibrium ({mode:?} mode, {draws} candidates):");
            for (i, p) in game.players().iter().enumerate() {
                let row: Vec<String> = (0..game.joint_lattice().len())
                    .map(|s| format!("{}:{}", game.joint_lattice().id(s), game.payoff(i, s)))
                    .collect();
                println!("  {p}: {}", row.join(" "));
            }
            let report = game.analyze_equilibria(1_000).unwrap();
            println!(
                "  equilibria: {:?}, largest = {:?}, least = {:?}",
                report.equilibria, report.structure.has_largest, report.structure.has_least
            );
        }
        miss => println!("unexpected miss: {miss:?}"),
    }
}
