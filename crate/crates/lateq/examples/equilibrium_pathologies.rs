//! The grid games whose equilibrium sets certify the limits of the
//! general theory: a non-lattice equilibrium set, a largest equilibrium
//! without a least one, a complete-lattice equilibrium set reached without
//! sublattice-valued best responses, and a continuum pathology that
//! discretization erases.
//!
//! Run with `cargo run --example equilibrium_pathologies`.

use lateq::builtins;
use lateq::game::{Polarity, TheoremId};

fn main() {
    for name in [
        "post44_nolattice_grid3",
        "eg48_nomin_grid3",
        "eg412_zhou_grid5",
        "post44_interior_grid3",
    ] {
        let inst = builtins::builtin_game(name, None).unwrap();
        let report = inst.game.analyze_equilibria(100_000).unwrap();
        println!("{name}:");
        println!("  equilibria ({}): {}", report.count, report.equilibria.join(" "));
        println!(
            "  largest: {}  least: {}  minimal: {:?}",
            report.structure.has_largest.as_deref().unwrap_or("none"),
            report.structure.has_least.as_deref().unwrap_or("none"),
            report.structure.minimal_elements,
        );
        println!(
            "  lattice in induced order: {}  complete lattice: {}",
            report.structure.is_lattice_induced, report.structure.is_complete_lattice_induced
        );
        if let Some(w) = &report.structure.induced_witness {
            println!("  witness pair without an induced {}: ({}, {})", w.bound, w.x, w.y);
        }
        for theorem in [TheoremId::Existence44, TheoremId::Largest47, TheoremId::Complete49] {
            let hyp = inst.game.check_hypotheses(theorem, Polarity::Plain);
            println!("  {theorem}: {}", if hyp.overall { "pass" } else { "fail" });
        }
        let zhou = inst.game.zhou_applicability(100_000).unwrap();
        println!("  best-response values all sublattices: {}", zhou.all_values_sublattices);
        for a in &inst.annotations {
            println!("  note: {a}");
        }
        println!();
    }

    // finer grids keep the order-combinatorial pathologies
    let fine = builtins::builtin_game("eg48_nomin", Some(8)).unwrap();
    let report = fine.game.analyze_equilibria(100_000).unwrap();
    println!(
        "{}: largest = {:?}, least = {:?} (pathology persists at finer grids)",
        fine.name, report.structure.has_largest, report.structure.has_least
    );
}
