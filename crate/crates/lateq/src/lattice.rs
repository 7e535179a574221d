//! Finite posets, lattices, chains, and subsets.
//!
//! The order is stored as a full boolean relation (not a cover relation), so
//! comparability queries are O(1) table lookups. Meet and join tables are
//! computed once, when a poset is validated as a lattice; everything
//! downstream is lookups. The design envelope is a few hundred elements per
//! lattice.
//!
//! Element ids are opaque strings at the API boundary and dense indices
//! internally. All types are immutable after construction and safe to share
//! across threads.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Which bound was missing when a poset failed lattice validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundKind {
    Meet,
    Join,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundKind::Meet => write!(f, "meet"),
            BoundKind::Join => write!(f, "join"),
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum OrderError {
    #[error("not a poset: {axiom} violated by pair ({a}, {b})")]
    NotAPoset {
        axiom: &'static str,
        a: String,
        b: String,
    },
    #[error("not a lattice: pair ({a}, {b}) has no {bound}")]
    NotALattice {
        bound: BoundKind,
        a: String,
        b: String,
    },
    #[error("poset has no elements")]
    Empty,
    #[error("product of an empty factor list")]
    EmptyFactorList,
    #[error("unknown element id {0:?}")]
    UnknownElement(String),
    #[error("duplicate element id {0:?}")]
    DuplicateElement(String),
    #[error("chain has no values")]
    EmptyChain,
}

/// A finite partially ordered set with the full `<=` relation materialized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    ids: Vec<String>,
    index: HashMap<String, usize>,
    leq: Vec<bool>, // row-major n*n, leq[i*n + j] == (e_i <= e_j)
}

impl FinitePoset {
    /// Builds a poset from the full order relation. Reflexive pairs may be
    /// omitted; antisymmetry and transitivity are validated and the first
    /// violating pair is reported.
    pub fn from_relation<S: AsRef<str>>(
        elements: Vec<String>,
        relation: &[(S, S)],
    ) -> Result<Self, OrderError> {
        let (ids, index) = check_ids(elements)?;
        let n = ids.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (a, b) in relation {
            let i = *index
                .get(a.as_ref())
                .ok_or_else(|| OrderError::UnknownElement(a.as_ref().to_string()))?;
            let j = *index
                .get(b.as_ref())
                .ok_or_else(|| OrderError::UnknownElement(b.as_ref().to_string()))?;
            leq[i * n + j] = true;
        }
        let poset = FinitePoset { ids, index, leq };
        poset.check_axioms()?;
        Ok(poset)
    }

    /// Builds a poset from a cover (Hasse) relation: the reflexive-transitive
    /// closure is taken first, then the axioms are validated (a cycle in the
    /// covers shows up as an antisymmetry violation).
    pub fn from_covers<S: AsRef<str>>(
        elements: Vec<String>,
        covers: &[(S, S)],
    ) -> Result<Self, OrderError> {
        let (ids, index) = check_ids(elements)?;
        let n = ids.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (a, b) in covers {
            let i = *index
                .get(a.as_ref())
                .ok_or_else(|| OrderError::UnknownElement(a.as_ref().to_string()))?;
            let j = *index
                .get(b.as_ref())
                .ok_or_else(|| OrderError::UnknownElement(b.as_ref().to_string()))?;
            leq[i * n + j] = true;
        }
        // Warshall closure.
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
        let poset = FinitePoset { ids, index, leq };
        poset.check_axioms()?;
        Ok(poset)
    }

    /// A chain ordered by list position.
    pub fn total_order(elements: Vec<String>) -> Result<Self, OrderError> {
        let (ids, index) = check_ids(elements)?;
        let n = ids.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in i..n {
                leq[i * n + j] = true;
            }
        }
        Ok(FinitePoset { ids, index, leq })
    }

    fn check_axioms(&self) -> Result<(), OrderError> {
        let n = self.len();
        for i in 0..n {
            for j in 0..n {
                if i != j && self.leq(i, j) && self.leq(j, i) {
                    return Err(OrderError::NotAPoset {
                        axiom: "antisymmetry",
                        a: self.ids[i].clone(),
                        b: self.ids[j].clone(),
                    });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !self.leq(i, j) {
                    continue;
                }
                for k in 0..n {
                    if self.leq(j, k) && !self.leq(i, k) {
                        return Err(OrderError::NotAPoset {
                            axiom: "transitivity",
                            a: self.ids[i].clone(),
                            b: self.ids[k].clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn id(&self, i: usize) -> &str {
        &self.ids[i]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.ids.len() + j]
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    #[inline]
    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    pub fn is_total(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..n).all(|j| self.comparable(i, j)))
    }

    /// Same elements, order reversed.
    pub fn opposite(&self) -> FinitePoset {
        let n = self.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = self.leq(j, i);
            }
        }
        FinitePoset {
            ids: self.ids.clone(),
            index: self.index.clone(),
            leq,
        }
    }

    /// A linear extension: whenever `i < j` in the order, `i` appears before
    /// `j`. Ties are broken by element index, so the result is deterministic.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.len();
        let mut placed = vec![false; n];
        let mut out = Vec::with_capacity(n);
        while out.len() < n {
            let next = (0..n)
                .find(|&i| {
                    !placed[i] && (0..n).all(|j| placed[j] || !self.lt(j, i))
                })
                .expect("acyclic order always has a minimal unplaced element");
            placed[next] = true;
            out.push(next);
        }
        out
    }

    /// Number of elements in a longest chain.
    pub fn height(&self) -> usize {
        let order = self.linear_extension();
        let n = self.len();
        let mut best = vec![1usize; n];
        for &i in &order {
            for &j in &order {
                if self.lt(j, i) {
                    best[i] = best[i].max(best[j] + 1);
                }
            }
        }
        best.iter().copied().max().unwrap_or(0)
    }
}

fn check_ids(elements: Vec<String>) -> Result<(Vec<String>, HashMap<String, usize>), OrderError> {
    if elements.is_empty() {
        return Err(OrderError::Empty);
    }
    let mut index = HashMap::with_capacity(elements.len());
    for (i, id) in elements.iter().enumerate() {
        if index.insert(id.clone(), i).is_some() {
            return Err(OrderError::DuplicateElement(id.clone()));
        }
    }
    Ok((elements, index))
}

/// A finite lattice: a poset in which every pair has a greatest lower bound
/// and a least upper bound, with both tables precomputed. Finite lattices are
/// complete, so `bottom` and `top` always exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    poset: FinitePoset,
    meet: Vec<u32>,
    join: Vec<u32>,
    bottom: usize,
    top: usize,
}

/// Checks that every pair of elements has a meet and a join and returns the
/// lattice with both tables filled in. The first pair lacking a bound is
/// named in the error.
pub fn validate_lattice(poset: FinitePoset) -> Result<FiniteLattice, OrderError> {
    let n = poset.len();
    let mut meet = vec![0u32; n * n];
    let mut join = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            match bound_of_pair(&poset, i, j, BoundKind::Meet) {
                Some(m) => meet[i * n + j] = m as u32,
                None => {
                    return Err(OrderError::NotALattice {
                        bound: BoundKind::Meet,
                        a: poset.id(i).to_string(),
                        b: poset.id(j).to_string(),
                    })
                }
            }
            match bound_of_pair(&poset, i, j, BoundKind::Join) {
                Some(m) => join[i * n + j] = m as u32,
                None => {
                    return Err(OrderError::NotALattice {
                        bound: BoundKind::Join,
                        a: poset.id(i).to_string(),
                        b: poset.id(j).to_string(),
                    })
                }
            }
        }
    }
    let mut bottom = 0;
    let mut top = 0;
    for i in 1..n {
        bottom = meet[bottom * n + i] as usize;
        top = join[top * n + i] as usize;
    }
    Ok(FiniteLattice {
        poset,
        meet,
        join,
        bottom,
        top,
    })
}

/// Greatest lower / least upper bound of `{i, j}` inside the whole poset, if
/// it exists.
fn bound_of_pair(poset: &FinitePoset, i: usize, j: usize, kind: BoundKind) -> Option<usize> {
    let n = poset.len();
    let within = |k: usize| match kind {
        BoundKind::Meet => poset.leq(k, i) && poset.leq(k, j),
        BoundKind::Join => poset.leq(i, k) && poset.leq(j, k),
    };
    (0..n).find(|&c| {
        within(c)
            && (0..n).all(|k| {
                !within(k)
                    || match kind {
                        BoundKind::Meet => poset.leq(k, c),
                        BoundKind::Join => poset.leq(c, k),
                    }
            })
    })
}

impl FiniteLattice {
    /// A chain lattice ordered by list position.
    pub fn chain(elements: Vec<String>) -> Result<FiniteLattice, OrderError> {
        validate_lattice(FinitePoset::total_order(elements)?)
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        self.poset.ids()
    }

    pub fn id(&self, i: usize) -> &str {
        self.poset.id(i)
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.poset.index_of(id)
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.poset.leq(i, j)
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.poset.lt(i, j)
    }

    #[inline]
    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.poset.len() + j] as usize
    }

    #[inline]
    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i * self.poset.len() + j] as usize
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn is_chain(&self) -> bool {
        self.poset.is_total()
    }

    pub fn height(&self) -> usize {
        self.poset.height()
    }

    /// Order reversed; the meet and join tables swap roles.
    pub fn opposite(&self) -> FiniteLattice {
        FiniteLattice {
            poset: self.poset.opposite(),
            meet: self.join.clone(),
            join: self.meet.clone(),
            bottom: self.top,
            top: self.bottom,
        }
    }
}

/// Componentwise product of lattices. Element ids are the factor ids joined
/// with `,`; the component order follows the factor list, with the last
/// factor varying fastest.
pub fn product(factors: &[Arc<FiniteLattice>]) -> Result<FiniteLattice, OrderError> {
    product_labeled(factors, ',')
}

/// Product with a caller-chosen id separator (games join player strategies
/// with `|`).
pub fn product_labeled(
    factors: &[Arc<FiniteLattice>],
    separator: char,
) -> Result<FiniteLattice, OrderError> {
    if factors.is_empty() {
        return Err(OrderError::EmptyFactorList);
    }
    let sizes: Vec<usize> = factors.iter().map(|f| f.len()).collect();
    let total: usize = sizes.iter().product();
    let decode = |mut idx: usize| -> Vec<usize> {
        let mut parts = vec![0usize; sizes.len()];
        for p in (0..sizes.len()).rev() {
            parts[p] = idx % sizes[p];
            idx /= sizes[p];
        }
        parts
    };
    let sep = separator.to_string();
    let mut ids = Vec::with_capacity(total);
    for idx in 0..total {
        let parts = decode(idx);
        let id = parts
            .iter()
            .enumerate()
            .map(|(p, &c)| factors[p].id(c))
            .collect::<Vec<_>>()
            .join(&sep);
        ids.push(id);
    }
    let mut index = HashMap::with_capacity(total);
    for (i, id) in ids.iter().enumerate() {
        if index.insert(id.clone(), i).is_some() {
            return Err(OrderError::DuplicateElement(id.clone()));
        }
    }
    let mut leq = vec![false; total * total];
    let mut meet = vec![0u32; total * total];
    let mut join = vec![0u32; total * total];
    let encode = |parts: &[usize]| -> usize {
        let mut idx = 0usize;
        for (p, &c) in parts.iter().enumerate() {
            idx = idx * sizes[p] + c;
        }
        idx
    };
    for i in 0..total {
        let pi = decode(i);
        for j in 0..total {
            let pj = decode(j);
            leq[i * total + j] = pi
                .iter()
                .zip(&pj)
                .enumerate()
                .all(|(p, (&a, &b))| factors[p].leq(a, b));
            let m: Vec<usize> = pi
                .iter()
                .zip(&pj)
                .enumerate()
                .map(|(p, (&a, &b))| factors[p].meet(a, b))
                .collect();
            let v: Vec<usize> = pi
                .iter()
                .zip(&pj)
                .enumerate()
                .map(|(p, (&a, &b))| factors[p].join(a, b))
                .collect();
            meet[i * total + j] = encode(&m) as u32;
            join[i * total + j] = encode(&v) as u32;
        }
    }
    let poset = FinitePoset { ids, index, leq };
    let mut bottom = 0;
    let mut top = 0;
    for i in 1..total {
        bottom = meet[bottom * total + i] as usize;
        top = join[top * total + i] as usize;
    }
    Ok(FiniteLattice {
        poset,
        meet,
        join,
        bottom,
        top,
    })
}

/// A finite chain of integer values, strictly ascending. Used as the codomain
/// of every function in the toolkit: any finite chain order-embeds into the
/// integers, and integer values keep all comparisons exact.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteChain {
    values: Vec<i64>,
}

impl FiniteChain {
    pub fn new(mut values: Vec<i64>) -> Result<Self, OrderError> {
        values.sort_unstable();
        values.dedup();
        if values.is_empty() {
            return Err(OrderError::EmptyChain);
        }
        Ok(FiniteChain { values })
    }

    /// The chain `{0, 1, .., size-1}`.
    pub fn range(size: u32) -> Self {
        FiniteChain {
            values: (0..size as i64).collect(),
        }
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, v: i64) -> bool {
        self.values.binary_search(&v).is_ok()
    }

    pub fn min_value(&self) -> i64 {
        self.values[0]
    }

    pub fn max_value(&self) -> i64 {
        *self.values.last().unwrap()
    }

    pub fn strictly_below(&self, v: i64) -> impl Iterator<Item = i64> + '_ {
        self.values.iter().copied().take_while(move |&t| t < v)
    }

    pub fn strictly_above(&self, v: i64) -> impl Iterator<Item = i64> + '_ {
        self.values.iter().copied().skip_while(move |&t| t <= v)
    }

    /// The opposite chain, order-embedded back into the integers by negation.
    pub fn negated(&self) -> FiniteChain {
        let mut values: Vec<i64> = self.values.iter().map(|v| -v).collect();
        values.reverse();
        FiniteChain { values }
    }
}

/// A subset of a lattice's elements, carrying its carrier.
#[derive(Debug, Clone)]
pub struct Subset {
    lattice: Arc<FiniteLattice>,
    members: Vec<bool>,
}

impl Subset {
    pub fn empty(lattice: Arc<FiniteLattice>) -> Self {
        let members = vec![false; lattice.len()];
        Subset { lattice, members }
    }

    pub fn full(lattice: Arc<FiniteLattice>) -> Self {
        let members = vec![true; lattice.len()];
        Subset { lattice, members }
    }

    pub fn from_ids<S: AsRef<str>>(
        lattice: Arc<FiniteLattice>,
        ids: &[S],
    ) -> Result<Self, OrderError> {
        let mut members = vec![false; lattice.len()];
        for id in ids {
            let i = lattice
                .index_of(id.as_ref())
                .ok_or_else(|| OrderError::UnknownElement(id.as_ref().to_string()))?;
            members[i] = true;
        }
        Ok(Subset { lattice, members })
    }

    pub fn from_mask(lattice: Arc<FiniteLattice>, members: Vec<bool>) -> Self {
        assert_eq!(members.len(), lattice.len());
        Subset { lattice, members }
    }

    pub fn carrier(&self) -> &Arc<FiniteLattice> {
        &self.lattice
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members[i]
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
    }

    pub fn ids(&self) -> Vec<String> {
        self.indices().map(|i| self.lattice.id(i).to_string()).collect()
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.members.iter().any(|&m| m)
    }

    /// Some member has no member strictly above it. False on the empty set.
    pub fn has_maximal(&self) -> bool {
        self.indices()
            .any(|i| self.indices().all(|j| !self.lattice.lt(i, j)))
    }

    /// Some member has no member strictly below it. False on the empty set.
    pub fn has_minimal(&self) -> bool {
        self.indices()
            .any(|i| self.indices().all(|j| !self.lattice.lt(j, i)))
    }
}

impl PartialEq for Subset {
    fn eq(&self, other: &Self) -> bool {
        self.lattice == other.lattice && self.members == other.members
    }
}

/// Outcome of a property check: either the property holds, or a witness pair
/// (with the violated clause) shows where it breaks. Witnesses are always
/// re-checkable against the definitional clause they name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub x: String,
    pub y: String,
    pub clause: String,
}

impl Verdict {
    pub fn holds() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    pub fn fails(x: String, y: String, clause: &str) -> Self {
        Verdict {
            holds: false,
            witness: Some(Witness {
                x,
                y,
                clause: clause.to_string(),
            }),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "holds"),
            Some(w) => write!(f, "fails at ({}, {}) [{}]", w.x, w.y, w.clause),
        }
    }
}

/// True iff for every pair in the subset at least one of the pair's carrier
/// meet and join lies in the subset. Empty subsets hold vacuously. The
/// witness is the first failing pair in element order.
pub fn is_quasisublattice(s: &Subset) -> Verdict {
    let lat = s.carrier();
    let members: Vec<usize> = s.indices().collect();
    for &i in &members {
        for &j in &members {
            if !s.contains(lat.meet(i, j)) && !s.contains(lat.join(i, j)) {
                return Verdict::fails(
                    lat.id(i).to_string(),
                    lat.id(j).to_string(),
                    "neither meet nor join in subset",
                );
            }
        }
    }
    Verdict::holds()
}

/// Order structure of a subset under the order it inherits from the carrier.
///
/// `is_lattice_induced` asks for pairwise bounds *within* the subset: a least
/// upper bound and greatest lower bound computed over subset members only,
/// which need not agree with the carrier meet/join. For finite subsets,
/// complete-lattice status is nonempty + lattice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureFlags {
    pub has_largest: Option<String>,
    pub has_least: Option<String>,
    pub is_lattice_induced: bool,
    pub induced_witness: Option<InducedWitness>,
    pub is_complete_lattice_induced: bool,
    pub minimal_elements: Vec<String>,
    pub maximal_elements: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducedWitness {
    pub x: String,
    pub y: String,
    pub bound: BoundKind,
}

/// Least/greatest element of `candidates` under the carrier order, if any.
fn extreme_of(lat: &FiniteLattice, candidates: &[usize], greatest: bool) -> Option<usize> {
    candidates.iter().copied().find(|&c| {
        candidates.iter().all(|&k| {
            if greatest {
                lat.leq(k, c)
            } else {
                lat.leq(c, k)
            }
        })
    })
}

/// Bound of `(i, j)` within the subset in the induced order.
pub fn induced_bound(s: &Subset, i: usize, j: usize, kind: BoundKind) -> Option<usize> {
    let lat = s.carrier();
    let bounds: Vec<usize> = s
        .indices()
        .filter(|&k| match kind {
            BoundKind::Meet => lat.leq(k, i) && lat.leq(k, j),
            BoundKind::Join => lat.leq(i, k) && lat.leq(j, k),
        })
        .collect();
    extreme_of(lat, &bounds, kind == BoundKind::Meet)
}

pub fn induced_structure(s: &Subset) -> StructureFlags {
    let lat = s.carrier();
    let members: Vec<usize> = s.indices().collect();
    let largest = extreme_of(lat, &members, true);
    let least = extreme_of(lat, &members, false);
    let mut induced_witness = None;
    'pairs: for &i in &members {
        for &j in &members {
            for kind in [BoundKind::Meet, BoundKind::Join] {
                if induced_bound(s, i, j, kind).is_none() {
                    induced_witness = Some(InducedWitness {
                        x: lat.id(i).to_string(),
                        y: lat.id(j).to_string(),
                        bound: kind,
                    });
                    break 'pairs;
                }
            }
        }
    }
    let is_lattice = induced_witness.is_none();
    let minimal = members
        .iter()
        .copied()
        .filter(|&i| members.iter().all(|&j| !lat.lt(j, i)))
        .map(|i| lat.id(i).to_string())
        .collect();
    let maximal = members
        .iter()
        .copied()
        .filter(|&i| members.iter().all(|&j| !lat.lt(i, j)))
        .map(|i| lat.id(i).to_string())
        .collect();
    StructureFlags {
        has_largest: largest.map(|i| lat.id(i).to_string()),
        has_least: least.map(|i| lat.id(i).to_string()),
        is_lattice_induced: is_lattice,
        induced_witness,
        is_complete_lattice_induced: is_lattice && !members.is_empty(),
        minimal_elements: minimal,
        maximal_elements: maximal,
    }
}

/// Chain-completeness and chain-boundedness of a subset, decided by literally
/// enumerating every nonempty chain of the subset. For nonempty subsets of a
/// finite lattice all four are true; the operation exists so reports can cite
/// the exact hypothesis that was checked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainPredicates {
    pub chain_complete_down: bool,
    pub chain_complete_up: bool,
    pub chain_bounded_above: bool,
    pub chain_bounded_below: bool,
    pub chains_checked: u64,
}

impl ChainPredicates {
    pub fn all(&self) -> bool {
        self.chain_complete_down
            && self.chain_complete_up
            && self.chain_bounded_above
            && self.chain_bounded_below
    }
}

pub fn chain_predicates(s: &Subset) -> ChainPredicates {
    let lat = s.carrier();
    let members: Vec<usize> = s.indices().collect();
    let mut report = ChainPredicates {
        chain_complete_down: true,
        chain_complete_up: true,
        chain_bounded_above: true,
        chain_bounded_below: true,
        chains_checked: 0,
    };
    // Chains are built in increasing element-index order, so each chain is
    // visited exactly once.
    let mut chain: Vec<usize> = Vec::new();
    fn visit(
        lat: &FiniteLattice,
        members: &[usize],
        s: &Subset,
        chain: &mut Vec<usize>,
        from: usize,
        report: &mut ChainPredicates,
    ) {
        for (pos, &m) in members.iter().enumerate().skip(from) {
            if chain.iter().all(|&c| lat.poset().comparable(c, m)) {
                chain.push(m);
                report.chains_checked += 1;
                let lower: Vec<usize> = s
                    .indices()
                    .filter(|&k| chain.iter().all(|&c| lat.leq(k, c)))
                    .collect();
                let upper: Vec<usize> = s
                    .indices()
                    .filter(|&k| chain.iter().all(|&c| lat.leq(c, k)))
                    .collect();
                if extreme_of(lat, &lower, true).is_none() {
                    report.chain_complete_down = false;
                }
                if extreme_of(lat, &upper, false).is_none() {
                    report.chain_complete_up = false;
                }
                if upper.is_empty() {
                    report.chain_bounded_above = false;
                }
                if lower.is_empty() {
                    report.chain_bounded_below = false;
                }
                visit(lat, members, s, chain, pos + 1, report);
                chain.pop();
            }
        }
    }
    visit(lat, &members, s, &mut chain, 0, &mut report);
    report
}
