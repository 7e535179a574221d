//! Weakly ascending correspondences, deterministic increasing selections,
//! and fixed points of monotone self-maps by bottom-up / top-down iteration.
//!
//! Run with `cargo run --example selections_and_fixed_points`.

use std::sync::Arc;

use lateq::catalog;
use lateq::optima::{
    increasing_selection, is_weakly_ascending, tarski_fixed_point, Correspondence, FixpointSide,
    MonotoneMap, SelectionError,
};

fn main() {
    let src = Arc::new(catalog::chain(2).poset().clone());
    let tgt = catalog::chain(2);

    // weakly ascending: for x < x', either the join lands in F(x') or the
    // meet in F(x)
    let f = Correspondence::new(src.clone(), tgt.clone(), vec![vec![0, 1], vec![0]]).unwrap();
    println!("F(0) = {{0,1}}, F(1) = {{0}}: weakly ascending = {}", is_weakly_ascending(&f).holds);
    let sel = increasing_selection(&f).unwrap();
    println!(
        "  increasing selection: r(0) = {}, r(1) = {}",
        tgt.id(sel.assignment(0)),
        tgt.id(sel.assignment(1))
    );
    assert!(sel.is_valid_for(&f));

    // a decreasing correspondence is refused, with a witness
    let g = Correspondence::new(src.clone(), tgt.clone(), vec![vec![1], vec![0]]).unwrap();
    let v = is_weakly_ascending(&g);
    let w = v.witness.unwrap();
    println!(
        "F(0) = {{1}}, F(1) = {{0}}: fails at (x={} < x'={}, y={}, y'={})",
        w.x, w.x_hi, w.y, w.y_hi
    );
    match increasing_selection(&g) {
        Err(SelectionError::NotWeaklyAscending(_)) => {
            println!("  increasing_selection refuses the input");
        }
        other => panic!("unexpected: {other:?}"),
    }

    println!();
    // Tarski iteration on a monotone self-map of a chain
    let c3 = catalog::chain(3);
    let map = MonotoneMap::new(c3.clone(), vec![1, 1, 2]).unwrap();
    println!("g on chain {{0,1,2}} with g(0)=g(1)=1, g(2)=2:");
    println!("  fixed points (by scan): {:?}", map.fixed_points());
    let least = tarski_fixed_point(&map, FixpointSide::Least);
    let greatest = tarski_fixed_point(&map, FixpointSide::Greatest);
    println!(
        "  least = {} after {} steps, greatest = {} after {} steps (height {})",
        least.point,
        least.iterations,
        greatest.point,
        greatest.iterations,
        c3.height()
    );
    assert!(least.iterations <= c3.height());

    // non-monotone maps are rejected up front
    let err = MonotoneMap::new(catalog::chain(2), vec![1, 0]).unwrap_err();
    println!("  swap map on a 2-chain: {err}");
}
