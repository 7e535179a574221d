//! Argmin/argmax structure: one-sided extremality makes the optimizer set a
//! nonempty quasisublattice, even when it is not a lattice.
//!
//! Run with `cargo run --example extremum_structure`.

use lateq::builtins;
use lateq::lattice::{induced_structure, is_quasisublattice};
use lateq::optima::{argopt, verify_extremum_structure, ExtremumVariant, OptMode};

fn main() {
    // the superextremal function with maximizer set {a, b, 1}
    let g = builtins::builtin_function("diamond_g").unwrap().function;
    let argmax = argopt(&g, OptMode::Max);
    println!("diamond_g maximizers: {:?}", argmax.ids());
    println!("  quasisublattice: {}", is_quasisublattice(&argmax));
    println!(
        "  lattice in induced order: {} (the pair (a, b) has no meet inside the set)",
        induced_structure(&argmax).is_lattice_induced
    );

    let report = verify_extremum_structure(&g, ExtremumVariant::ArgmaxMeetSuperext);
    println!(
        "  hypotheses (meet-superextremal + level-set conditions): {}",
        report.hypotheses_hold
    );
    println!("  conclusion (nonempty quasisublattice argmax): {}", report.conclusion_holds);

    println!();
    // the band indicator: subextremal, minimizer set {0, 0.5, 2}
    let band = builtins::builtin_function("band_indicator").unwrap();
    let f = &band.function;
    let argmin = argopt(f, OptMode::Min);
    println!("band_indicator minimizers: {:?}", argmin.ids());
    for note in &band.annotations {
        println!("  note: {note}");
    }
    let report = verify_extremum_structure(f, ExtremumVariant::ArgminMeetSubext);
    println!(
        "  level sets checked: {} ({})",
        report.thresholds_checked, report.level_set_note
    );
    println!("  conclusion: {}", report.conclusion_holds);
    assert!(report.conclusion_holds);

    println!();
    // all four dual variants on one function
    for variant in [
        ExtremumVariant::ArgminMeetSubext,
        ExtremumVariant::ArgminJoinSubext,
        ExtremumVariant::ArgmaxMeetSuperext,
        ExtremumVariant::ArgmaxJoinSuperext,
    ] {
        let r = verify_extremum_structure(&g, variant);
        println!(
            "diamond_g {variant}: property={}, conclusion={}",
            r.property.holds, r.conclusion_holds
        );
    }
}
