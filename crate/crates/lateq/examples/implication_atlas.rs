//! Map the implication order between all unary properties by exhaustive
//! enumeration over a function space, confirming each implication or
//! producing the first counterexample.
//!
//! Run with `cargo run --example implication_atlas`.

use lateq::catalog;
use lateq::properties::{verify_implication, ImplicationOutcome, PropertyId, ALL_PROPERTIES};

fn main() {
    let diamond = catalog::diamond();
    let codomain = 3;
    let budget = 1_000_000;

    // the implication chain that always holds
    let chain = [
        (PropertyId::LatSuperext, PropertyId::Qsm),
        (PropertyId::Qsm, PropertyId::Psm),
        (PropertyId::Psm, PropertyId::Wpsm),
        (PropertyId::Wpsm, PropertyId::MeetSuperext),
        (PropertyId::Qsm, PropertyId::Wqsm),
        (PropertyId::Wqsm, PropertyId::Superext),
    ];
    println!("confirmed implications (exhaustive over {} functions):", 81);
    for (p, q) in chain {
        let outcome =
            verify_implication(&[p], &[q], &diamond, codomain, budget, 1).unwrap();
        assert!(outcome.is_confirmed(), "{p} => {q}");
        println!("  {p} => {q}");
    }

    println!();
    println!("refuted converses, with the first counterexample found:");
    for (p, q) in chain {
        match verify_implication(&[q], &[p], &diamond, codomain, budget, 1).unwrap() {
            ImplicationOutcome::Counterexample { function, index } => {
                let values: Vec<String> = function
                    .domain()
                    .ids()
                    .iter()
                    .enumerate()
                    .map(|(i, id)| format!("{id}={}", function.value(i)))
                    .collect();
                println!("  {q} => {p}: refuted by #{index} {{{}}}", values.join(", "));
            }
            ImplicationOutcome::Confirmed { .. } => {
                println!("  {q} => {p}: holds as well (equivalent on this domain)");
            }
        }
    }

    // the full 13 x 13 matrix, counting confirmations
    let mut held = 0;
    let mut total = 0;
    for &p in &ALL_PROPERTIES {
        for &q in &ALL_PROPERTIES {
            if p == q {
                continue;
            }
            total += 1;
            let outcome =
                verify_implication(&[p], &[q], &diamond, codomain, budget, 1).unwrap();
            if outcome.is_confirmed() {
                held += 1;
            }
        }
    }
    println!();
    println!("full atlas on the diamond with a 3-valued codomain: {held} of {total} ordered implications hold");
}
