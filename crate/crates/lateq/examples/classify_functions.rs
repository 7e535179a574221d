//! Classify chain-valued functions on a lattice against the full property
//! taxonomy, and check the four equivalent forms of one-sided
//! subextremality.
//!
//! Run with `cargo run --example classify_functions`.

use lateq::builtins;
use lateq::properties::{check_equivalence_family, ALL_PROPERTIES};

fn main() {
    println!("property taxonomy on the diamond fixtures:");
    println!();
    let names: Vec<&str> = ALL_PROPERTIES.iter().map(|p| p.name()).collect();
    println!("{:16} {}", "function", names.join(" "));
    for name in builtins::builtin_function_names() {
        let inst = builtins::builtin_function(name).unwrap();
        let set = inst.function.classify();
        let row: Vec<String> = ALL_PROPERTIES
            .iter()
            .map(|p| {
                let mark = if set.contains(p) { "+" } else { "-" };
                format!("{mark:^width$}", width = p.name().len())
            })
            .collect();
        println!("{:16} {}", inst.name, row.join(" "));
        for a in &inst.annotations {
            println!("{:16}   note: {a}", "");
        }
    }

    println!();
    println!("witnesses name the violated clause and re-check against it:");
    let f = builtins::builtin_function("diamond_f").unwrap().function;
    let verdict = f.check(lateq::PropertyId::JoinSuperext);
    println!("  diamond_f JOIN_SUPEREXT: {verdict}");
    let w = verdict.witness.unwrap();
    let x = f.domain().index_of(&w.x).unwrap();
    let y = f.domain().index_of(&w.y).unwrap();
    assert_eq!(
        f.check_pair(lateq::PropertyId::JoinSuperext, x, y),
        Some(w.clause.as_str())
    );
    println!("  re-checked: the pair ({}, {}) violates [{}]", w.x, w.y, w.clause);

    println!();
    println!("one-sided subextremality is the same condition in four guises:");
    let report = check_equivalence_family(&f);
    println!(
        "  on itself: {} | opposite domain: {} | opposite codomain: {} | both: {} -> agree: {}",
        report.meet_subext.holds,
        report.join_subext_on_opposite_domain.holds,
        report.meet_superext_into_opposite_codomain.holds,
        report.join_superext_on_both_opposites.holds,
        report.all_agree
    );
    assert!(report.all_agree);
}
