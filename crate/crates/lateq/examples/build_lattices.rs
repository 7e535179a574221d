//! Construct and validate finite lattices: order axioms, meet/join tables,
//! products, opposites, and subset structure.
//!
//! Run with `cargo run --example build_lattices`.

use std::sync::Arc;

use lateq::lattice::{
    chain_predicates, induced_structure, is_quasisublattice, product, validate_lattice,
    FinitePoset, Subset,
};
use lateq::catalog;

fn main() {
    // The four-element lattice with two incomparable middle elements, from
    // its cover relation.
    let poset = FinitePoset::from_covers(
        vec!["0".into(), "a".into(), "b".into(), "1".into()],
        &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
    )
    .unwrap();
    let diamond = Arc::new(validate_lattice(poset).unwrap());
    let a = diamond.index_of("a").unwrap();
    let b = diamond.index_of("b").unwrap();
    println!(
        "diamond: a ^ b = {}, a v b = {}, bottom = {}, top = {}",
        diamond.id(diamond.meet(a, b)),
        diamond.id(diamond.join(a, b)),
        diamond.id(diamond.bottom()),
        diamond.id(diamond.top()),
    );

    // Validation failures name the offending pair.
    let antichain = FinitePoset::from_relation(
        vec!["x".into(), "y".into()],
        &[] as &[(&str, &str)],
    )
    .unwrap();
    println!("antichain: {}", validate_lattice(antichain).unwrap_err());
    let cyclic = FinitePoset::from_relation(
        vec!["x".into(), "y".into()],
        &[("x", "y"), ("y", "x")],
    );
    println!("cyclic relation: {}", cyclic.unwrap_err());

    // Products order componentwise; the opposite reverses everything.
    let square = Arc::new(product(&[catalog::chain(2), catalog::chain(2)]).unwrap());
    println!(
        "square: ids {:?}, (0,1) ^ (1,0) = {}",
        square.ids(),
        square.id(square.meet(
            square.index_of("0,1").unwrap(),
            square.index_of("1,0").unwrap()
        ))
    );
    let opposite = diamond.opposite();
    println!(
        "opposite diamond: bottom = {}, double opposite equals the original: {}",
        opposite.id(opposite.bottom()),
        opposite.opposite() == *diamond
    );

    // Quasisublattices: closed under at least one of meet/join per pair.
    let s = Subset::from_ids(diamond.clone(), &["a", "b", "1"]).unwrap();
    println!("{{a, b, 1}} quasisublattice: {}", is_quasisublattice(&s));
    let s2 = Subset::from_ids(diamond.clone(), &["a", "b"]).unwrap();
    println!("{{a, b}} quasisublattice: {}", is_quasisublattice(&s2));

    // Induced order structure of a subset, bounds computed within the
    // subset.
    let corner = Subset::from_ids(square, &["1,0", "0,1", "1,1"]).unwrap();
    let flags = induced_structure(&corner);
    println!(
        "{{(1,0),(0,1),(1,1)}}: lattice in induced order = {}, largest = {:?}, minimal = {:?}",
        flags.is_lattice_induced, flags.has_largest, flags.minimal_elements
    );

    // Chain predicates are automatic on finite subsets; the report carries
    // the enumeration evidence.
    let preds = chain_predicates(&s);
    println!(
        "chain predicates of {{a, b, 1}}: all hold = {}, {} chains enumerated",
        preds.all(),
        preds.chains_checked
    );
}
