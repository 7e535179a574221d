//! Named small lattices and exhaustive lattice enumeration.
//!
//! The named shapes (diamond, M3, N5, chains, grids) are the recurring test
//! domains of the toolkit. `all_up_to` enumerates every lattice with at most
//! `n` elements up to isomorphism, which backs the exhaustive sweeps.

use std::sync::Arc;

use crate::lattice::{product, validate_lattice, FiniteLattice, FinitePoset};

fn build(elements: &[&str], covers: &[(&str, &str)]) -> Arc<FiniteLattice> {
    let poset = FinitePoset::from_covers(
        elements.iter().map(|s| s.to_string()).collect(),
        covers,
    )
    .expect("catalog poset");
    Arc::new(validate_lattice(poset).expect("catalog lattice"))
}

/// `{0, a, b, 1}` with `a`, `b` incomparable: the four-element lattice where
/// `a ^ b = 0` and `a v b = 1`.
pub fn diamond() -> Arc<FiniteLattice> {
    build(
        &["0", "a", "b", "1"],
        &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
    )
}

/// Three incomparable atoms between bottom and top.
pub fn m3() -> Arc<FiniteLattice> {
    build(
        &["0", "a", "b", "c", "1"],
        &[
            ("0", "a"),
            ("0", "b"),
            ("0", "c"),
            ("a", "1"),
            ("b", "1"),
            ("c", "1"),
        ],
    )
}

/// The pentagon: `0 < a < 1` and `0 < b < c < 1`, with `a` incomparable to
/// both `b` and `c`.
pub fn n5() -> Arc<FiniteLattice> {
    build(
        &["0", "a", "b", "c", "1"],
        &[("0", "a"), ("a", "1"), ("0", "b"), ("b", "c"), ("c", "1")],
    )
}

/// Diamond with an extra element above the old top.
pub fn diamond_top() -> Arc<FiniteLattice> {
    build(
        &["0", "a", "b", "m", "1"],
        &[("0", "a"), ("0", "b"), ("a", "m"), ("b", "m"), ("m", "1")],
    )
}

/// Diamond with an extra element below the old bottom.
pub fn diamond_bottom() -> Arc<FiniteLattice> {
    build(
        &["0", "m", "a", "b", "1"],
        &[("0", "m"), ("m", "a"), ("m", "b"), ("a", "1"), ("b", "1")],
    )
}

/// Chain `0 < 1 < .. < n-1`.
pub fn chain(n: usize) -> Arc<FiniteLattice> {
    assert!(n > 0);
    let ids = (0..n).map(|i| i.to_string()).collect();
    Arc::new(FiniteLattice::chain(ids).expect("chain lattice"))
}

/// Uniform grid on `[0, 1]` with `k` subdivisions: elements `0, 1/k, .., 1`
/// named by reduced fractions.
pub fn unit_grid(k: usize) -> Arc<FiniteLattice> {
    assert!(k > 0);
    let ids = (0..=k).map(|j| fraction_id(j, k)).collect();
    Arc::new(FiniteLattice::chain(ids).expect("grid chain"))
}

/// Reduced-fraction label for `j/k`; `0` and `1` stay bare.
pub fn fraction_id(j: usize, k: usize) -> String {
    if j == 0 {
        "0".to_string()
    } else if j == k {
        "1".to_string()
    } else {
        let g = gcd(j, k);
        format!("{}/{}", j / g, k / g)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The grid point `j/k` as an exact rational comparison against `p/q`:
/// returns `j/k <= p/q`.
pub fn grid_leq(j: usize, k: usize, p: usize, q: usize) -> bool {
    j * q <= p * k
}

/// Looks a named lattice up; grid names have the form `gridN` (an N-point
/// unit grid) and chain names `chainN`.
pub fn by_name(name: &str) -> Option<Arc<FiniteLattice>> {
    match name {
        "diamond" => Some(diamond()),
        "m3" => Some(m3()),
        "n5" => Some(n5()),
        "diamond_top" => Some(diamond_top()),
        "diamond_bottom" => Some(diamond_bottom()),
        "square" => {
            let c2 = chain(2);
            Some(Arc::new(product(&[c2.clone(), c2]).expect("square")))
        }
        _ => {
            if let Some(rest) = name.strip_prefix("chain") {
                let n: usize = rest.parse().ok().filter(|&n| (1..=64).contains(&n))?;
                Some(chain(n))
            } else if let Some(rest) = name.strip_prefix("grid") {
                let points: usize = rest.parse().ok().filter(|&n| (2..=64).contains(&n))?;
                Some(unit_grid(points - 1))
            } else {
                None
            }
        }
    }
}

pub fn named_lattice_names() -> Vec<&'static str> {
    vec![
        "diamond",
        "m3",
        "n5",
        "diamond_top",
        "diamond_bottom",
        "square",
        "chainN (N-element chain)",
        "gridN (N-point unit grid)",
    ]
}

/// The named finite shapes, used by law tests.
pub fn all_named() -> Vec<Arc<FiniteLattice>> {
    vec![
        chain(1),
        chain(2),
        chain(3),
        chain(4),
        diamond(),
        m3(),
        n5(),
        diamond_top(),
        diamond_bottom(),
        unit_grid(4),
    ]
}

/// Every lattice with at most `max_elements` elements, one per isomorphism
/// class. Posets are enumerated as downward-closed relations over an index
/// order (every finite poset relabels onto a linear extension), filtered to
/// lattices, and deduplicated by a canonical relation signature.
pub fn all_up_to(max_elements: usize) -> Vec<Arc<FiniteLattice>> {
    let mut out = Vec::new();
    for n in 1..=max_elements {
        out.extend(all_of_size(n));
    }
    out
}

fn all_of_size(n: usize) -> Vec<Arc<FiniteLattice>> {
    assert!(n <= 6, "enumeration envelope");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (b, &(i, j)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                leq[i * n + j] = true;
            }
        }
        // transitive closure keeps the relation inside the upper triangle,
        // so antisymmetry is automatic
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        if !is_lattice_relation(n, &leq) {
            continue;
        }
        if seen.insert(canonical_signature(n, &leq)) {
            let ids = (0..n).map(|i| format!("e{i}")).collect::<Vec<_>>();
            let mut rel = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if leq[i * n + j] {
                        rel.push((ids[i].clone(), ids[j].clone()));
                    }
                }
            }
            let poset = FinitePoset::from_relation(ids, &rel).expect("enumerated poset");
            out.push(Arc::new(validate_lattice(poset).expect("enumerated lattice")));
        }
    }
    out
}

fn is_lattice_relation(n: usize, leq: &[bool]) -> bool {
    for i in 0..n {
        for j in 0..n {
            let mut has_meet = false;
            let mut has_join = false;
            for c in 0..n {
                if leq[c * n + i]
                    && leq[c * n + j]
                    && (0..n).all(|k| !(leq[k * n + i] && leq[k * n + j]) || leq[k * n + c])
                {
                    has_meet = true;
                }
                if leq[i * n + c]
                    && leq[j * n + c]
                    && (0..n).all(|k| !(leq[i * n + k] && leq[j * n + k]) || leq[c * n + k])
                {
                    has_join = true;
                }
            }
            if !has_meet || !has_join {
                return false;
            }
        }
    }
    true
}

/// Minimal relation bitstring over all permutations of the elements.
fn canonical_signature(n: usize, leq: &[bool]) -> u64 {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    permute(&mut perm, 0, &mut |p| {
        let mut sig = 0u64;
        for i in 0..n {
            for j in 0..n {
                sig <<= 1;
                if leq[p[i] * n + p[j]] {
                    sig |= 1;
                }
            }
        }
        best = best.min(sig);
    });
    best
}

fn permute(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, f);
        perm.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_counts_up_to_iso() {
        // 1, 1, 1, 2, 5 lattices on 1..=5 elements
        assert_eq!(all_of_size(1).len(), 1);
        assert_eq!(all_of_size(2).len(), 1);
        assert_eq!(all_of_size(3).len(), 1);
        assert_eq!(all_of_size(4).len(), 2);
        assert_eq!(all_of_size(5).len(), 5);
    }

    #[test]
    fn named_shapes_appear_in_enumeration() {
        let five: Vec<_> = all_of_size(5);
        for named in [m3(), n5(), diamond_top(), diamond_bottom(), chain(5)] {
            let sig = {
                let n = named.len();
                let mut leq = vec![false; n * n];
                for i in 0..n {
                    for j in 0..n {
                        leq[i * n + j] = named.leq(i, j);
                    }
                }
                canonical_signature(n, &leq)
            };
            assert!(
                five.iter().any(|l| {
                    let n = l.len();
                    let mut leq = vec![false; n * n];
                    for i in 0..n {
                        for j in 0..n {
                            leq[i * n + j] = l.leq(i, j);
                        }
                    }
                    canonical_signature(n, &leq) == sig
                }),
                "missing a named 5-element lattice"
            );
        }
    }

    #[test]
    fn grid_ids_are_reduced_fractions() {
        let g = unit_grid(4);
        assert_eq!(
            g.ids(),
            &["0", "1/4", "1/2", "3/4", "1"]
        );
        let g = unit_grid(2);
        assert_eq!(g.ids(), &["0", "1/2", "1"]);
    }

    #[test]
    fn by_name_resolves_families() {
        assert_eq!(by_name("chain4").unwrap().len(), 4);
        assert_eq!(by_name("grid5").unwrap().len(), 5);
        assert!(by_name("diamond").is_some());
        assert!(by_name("nope").is_none());
    }

    #[test]
    fn grid_predicates_are_exact() {
        // 2/4 <= 1/2 and 3/4 > 1/2
        assert!(grid_leq(2, 4, 1, 2));
        assert!(!grid_leq(3, 4, 1, 2));
    }
}
