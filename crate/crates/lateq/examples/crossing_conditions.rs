//! The crossing conditions for two-variable maps, their separations, and
//! the implication chain single => modular => upper, checked exhaustively.
//!
//! Run with `cargo run --example crossing_conditions`.

use std::sync::Arc;

use lateq::builtins;
use lateq::catalog;
use lateq::crossing::{CrossingProperty, TwoVarFunction, ALL_CROSSINGS};
use lateq::lattice::FiniteChain;

fn main() {
    let m = builtins::builtin_twovar("mod_not_sc").unwrap().function;
    println!("f on {{0,1}} x {{0,1}} with f(1,0)=1, all else 0:");
    for p in ALL_CROSSINGS {
        println!("  {p}: {}", m.check(p));
    }

    println!();
    let u = builtins::builtin_twovar("upper_not_mod").unwrap().function;
    println!("f on {{0,1,2}} x {{0,1}} with f(1,1)=-1, all else 0:");
    for p in ALL_CROSSINGS {
        println!("  {p}: {}", u.check(p));
    }

    // exhaustive implication chain over all f: {0,1} x {0,1} -> {0,1,2}
    let x = catalog::chain(2);
    let t = Arc::new(catalog::chain(2).poset().clone());
    let codomain = FiniteChain::range(3);
    let mut single = 0;
    let mut modular = 0;
    let mut upper = 0;
    for idx in 0..81u64 {
        let mut values = vec![0i64; 4];
        let mut rem = idx;
        for v in values.iter_mut().rev() {
            *v = (rem % 3) as i64;
            rem /= 3;
        }
        let f = TwoVarFunction::new(x.clone(), t.clone(), codomain.clone(), values).unwrap();
        let s = f.check(CrossingProperty::SingleCrossing).holds;
        let mo = f.check(CrossingProperty::ModularCrossing).holds;
        let up = f.check(CrossingProperty::UpperCrossing).holds;
        assert!(!s || mo, "single crossing implies modular crossing");
        assert!(!mo || up, "modular crossing implies upper crossing");
        single += s as u32;
        modular += mo as u32;
        upper += up as u32;
    }
    println!();
    println!(
        "over all 81 maps {{0,1}} x {{0,1}} -> {{0,1,2}}: single {single} <= modular {modular} <= upper {upper}"
    );
}
