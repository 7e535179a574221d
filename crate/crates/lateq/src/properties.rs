//! Ordinal complementarity properties of chain-valued lattice functions.
//!
//! Thirteen property families are decided with witnesses: quasisupermodular
//! and quasisubmodular, weakly quasisupermodular, pseudo-supermodular and its
//! weak form, sub/superextremal, their lattice variants with an existential
//! threshold, and the four one-sided (meet/join) extremality conditions.
//!
//! Every check quantifies over *ordered* pairs `(x, y)`: several definitions
//! treat `x` and `y` asymmetrically, and one loop shape serves all of them.
//! `verify_implication` exhaustively enumerates function spaces to confirm an
//! implication between properties or to produce the first counterexample in
//! a documented order.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{FiniteChain, FiniteLattice, OrderError, Subset, Verdict};
use crate::BudgetExceeded;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum PropertyId {
    Qsm,
    Qsbm,
    Wqsm,
    Psm,
    Wpsm,
    Subext,
    Superext,
    LatSubext,
    LatSuperext,
    MeetSubext,
    JoinSubext,
    MeetSuperext,
    JoinSuperext,
}

pub const ALL_PROPERTIES: [PropertyId; 13] = [
    PropertyId::Qsm,
    PropertyId::Qsbm,
    PropertyId::Wqsm,
    PropertyId::Psm,
    PropertyId::Wpsm,
    PropertyId::Subext,
    PropertyId::Superext,
    PropertyId::LatSubext,
    PropertyId::LatSuperext,
    PropertyId::MeetSubext,
    PropertyId::JoinSubext,
    PropertyId::MeetSuperext,
    PropertyId::JoinSuperext,
];

impl PropertyId {
    pub fn name(self) -> &'static str {
        match self {
            PropertyId::Qsm => "QSM",
            PropertyId::Qsbm => "QSBM",
            PropertyId::Wqsm => "WQSM",
            PropertyId::Psm => "PSM",
            PropertyId::Wpsm => "WPSM",
            PropertyId::Subext => "SUBEXT",
            PropertyId::Superext => "SUPEREXT",
            PropertyId::LatSubext => "LAT_SUBEXT",
            PropertyId::LatSuperext => "LAT_SUPEREXT",
            PropertyId::MeetSubext => "MEET_SUBEXT",
            PropertyId::JoinSubext => "JOIN_SUBEXT",
            PropertyId::MeetSuperext => "MEET_SUPEREXT",
            PropertyId::JoinSuperext => "JOIN_SUPEREXT",
        }
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("unknown property {0:?}")]
pub struct UnknownProperty(pub String);

impl FromStr for PropertyId {
    type Err = UnknownProperty;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ALL_PROPERTIES
            .iter()
            .copied()
            .find(|p| p.name() == s)
            .ok_or_else(|| UnknownProperty(s.to_string()))
    }
}

impl From<PropertyId> for String {
    fn from(p: PropertyId) -> String {
        p.name().to_string()
    }
}

impl TryFrom<String> for PropertyId {
    type Error = UnknownProperty;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FunctionError {
    #[error("no value for element {0:?}")]
    MissingValue(String),
    #[error("value {value} of element {element:?} is not in the codomain chain")]
    ValueOutsideCodomain { element: String, value: i64 },
    #[error(transparent)]
    Order(#[from] OrderError),
}

/// A total map from a finite lattice into a finite integer chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeFunction {
    domain: Arc<FiniteLattice>,
    codomain: FiniteChain,
    values: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LevelDirection {
    AtMost,
    AtLeast,
}

impl LatticeFunction {
    pub fn new(
        domain: Arc<FiniteLattice>,
        codomain: FiniteChain,
        values: Vec<i64>,
    ) -> Result<Self, FunctionError> {
        if values.len() != domain.len() {
            let missing = domain.ids().get(values.len()).cloned().unwrap_or_default();
            return Err(FunctionError::MissingValue(missing));
        }
        for (i, &v) in values.iter().enumerate() {
            if !codomain.contains(v) {
                return Err(FunctionError::ValueOutsideCodomain {
                    element: domain.id(i).to_string(),
                    value: v,
                });
            }
        }
        Ok(LatticeFunction {
            domain,
            codomain,
            values,
        })
    }

    /// Builds a function from `(element id, value)` pairs; every domain
    /// element must receive a value.
    pub fn from_pairs<S: AsRef<str>>(
        domain: Arc<FiniteLattice>,
        codomain: FiniteChain,
        pairs: &[(S, i64)],
    ) -> Result<Self, FunctionError> {
        let mut values = vec![None; domain.len()];
        for (id, v) in pairs {
            let i = domain
                .index_of(id.as_ref())
                .ok_or_else(|| OrderError::UnknownElement(id.as_ref().to_string()))?;
            values[i] = Some(*v);
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| FunctionError::MissingValue(domain.id(i).to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        LatticeFunction::new(domain, codomain, values)
    }

    pub fn domain(&self) -> &Arc<FiniteLattice> {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteChain {
        &self.codomain
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    #[inline]
    pub fn value(&self, i: usize) -> i64 {
        self.values[i]
    }

    /// Same values over the opposite domain lattice.
    pub fn on_opposite_domain(&self) -> LatticeFunction {
        LatticeFunction {
            domain: Arc::new(self.domain.opposite()),
            codomain: self.codomain.clone(),
            values: self.values.clone(),
        }
    }

    /// Values negated: the codomain chain reversed, re-embedded into the
    /// integers.
    pub fn into_opposite_codomain(&self) -> LatticeFunction {
        LatticeFunction {
            domain: self.domain.clone(),
            codomain: self.codomain.negated(),
            values: self.values.iter().map(|v| -v).collect(),
        }
    }

    /// The exact preimage `[f <= t]` or `[f >= t]`.
    pub fn level_set(&self, t: i64, direction: LevelDirection) -> Subset {
        let mask = self
            .values
            .iter()
            .map(|&v| match direction {
                LevelDirection::AtMost => v <= t,
                LevelDirection::AtLeast => v >= t,
            })
            .collect();
        Subset::from_mask(self.domain.clone(), mask)
    }

    /// Decides a property by evaluating its defining clause over all ordered
    /// pairs; the witness is the first violating pair in element order.
    pub fn check(&self, p: PropertyId) -> Verdict {
        check_values(&self.domain, &self.codomain, &self.values, p)
    }

    /// Re-evaluates the defining clause on one ordered pair; `Some` names the
    /// violated clause.
    pub fn check_pair(&self, p: PropertyId, x: usize, y: usize) -> Option<&'static str> {
        violated_clause(&self.domain, &self.codomain, &self.values, p, x, y)
    }

    /// Exactly the properties that hold.
    pub fn classify(&self) -> BTreeSet<PropertyId> {
        ALL_PROPERTIES
            .iter()
            .copied()
            .filter(|&p| self.check(p).holds)
            .collect()
    }
}

/// Property check over raw value slices; used by the enumeration loops so no
/// per-candidate allocation is needed.
pub(crate) fn check_values(
    domain: &FiniteLattice,
    codomain: &FiniteChain,
    values: &[i64],
    p: PropertyId,
) -> Verdict {
    let n = domain.len();
    for x in 0..n {
        for y in 0..n {
            if let Some(clause) = violated_clause(domain, codomain, values, p, x, y) {
                return Verdict::fails(domain.id(x).to_string(), domain.id(y).to_string(), clause);
            }
        }
    }
    Verdict::holds()
}

fn holds_on_values(
    domain: &FiniteLattice,
    codomain: &FiniteChain,
    values: &[i64],
    p: PropertyId,
) -> bool {
    let n = domain.len();
    (0..n).all(|x| (0..n).all(|y| violated_clause(domain, codomain, values, p, x, y).is_none()))
}

/// The defining clause of each property on one ordered pair. `fm`, `fj` are
/// the values at the meet and join; `min`/`max` are meet/join in the chain.
fn violated_clause(
    domain: &FiniteLattice,
    codomain: &FiniteChain,
    values: &[i64],
    p: PropertyId,
    x: usize,
    y: usize,
) -> Option<&'static str> {
    let fx = values[x];
    let fy = values[y];
    let fm = values[domain.meet(x, y)];
    let fj = values[domain.join(x, y)];
    match p {
        PropertyId::Qsm => {
            if fx >= fm && !(fj >= fy) {
                Some("weak")
            } else if fx > fm && !(fj > fy) {
                Some("strict")
            } else {
                None
            }
        }
        PropertyId::Qsbm => {
            if fx <= fm && !(fj <= fy) {
                Some("weak")
            } else if fx < fm && !(fj < fy) {
                Some("strict")
            } else {
                None
            }
        }
        PropertyId::Wqsm => {
            if fm < fx && !(fx.min(fy) < fj) {
                Some("meet-side")
            } else if fj < fx && !(fx.min(fy) < fm) {
                Some("join-side")
            } else {
                None
            }
        }
        PropertyId::Psm => {
            if fx.max(fy) >= fm && !(fj >= fx.min(fy)) {
                Some("weak")
            } else if fx.max(fy) > fm && !(fj > fx.min(fy)) {
                Some("strict")
            } else {
                None
            }
        }
        PropertyId::Wpsm => {
            if fj < fx.min(fy) && !(fm > fx) {
                Some("main")
            } else {
                None
            }
        }
        PropertyId::Subext => {
            if fm.max(fj) <= fx.max(fy) || fm.min(fj) <= fx.min(fy) {
                None
            } else {
                Some("disjunction")
            }
        }
        PropertyId::Superext => {
            if fm.max(fj) >= fx.max(fy) || fm.min(fj) >= fx.min(fy) {
                None
            } else {
                Some("disjunction")
            }
        }
        PropertyId::LatSubext => {
            if codomain
                .strictly_below(fy)
                .any(|t| fm.max(fj) <= fx.max(t) || fm.min(fj) <= fx.min(t))
            {
                None
            } else {
                Some("existential")
            }
        }
        PropertyId::LatSuperext => {
            if codomain
                .strictly_above(fy)
                .any(|t| fm.max(fj) >= fx.max(t) || fm.min(fj) >= fx.min(t))
            {
                None
            } else {
                Some("existential")
            }
        }
        PropertyId::MeetSubext => {
            if fm <= fx || fj <= fx.max(fy) {
                None
            } else {
                Some("disjunction")
            }
        }
        PropertyId::JoinSubext => {
            if fm <= fx.max(fy) || fj <= fx {
                None
            } else {
                Some("disjunction")
            }
        }
        PropertyId::MeetSuperext => {
            if fm >= fx || fj >= fx.min(fy) {
                None
            } else {
                Some("disjunction")
            }
        }
        PropertyId::JoinSuperext => {
            if fm >= fx.min(fy) || fj >= fx {
                None
            } else {
                Some("disjunction")
            }
        }
    }
}

/// The four equivalent forms of one-sided subextremality: the check on the
/// function itself, on the opposite domain, into the opposite codomain, and
/// with both reversed. All four must agree.
#[derive(Debug, Clone, Serialize)]
pub struct EquivalenceFamilyReport {
    pub meet_subext: Verdict,
    pub join_subext_on_opposite_domain: Verdict,
    pub meet_superext_into_opposite_codomain: Verdict,
    pub join_superext_on_both_opposites: Verdict,
    pub all_agree: bool,
}

pub fn check_equivalence_family(f: &LatticeFunction) -> EquivalenceFamilyReport {
    let direct = f.check(PropertyId::MeetSubext);
    let opp_domain = f.on_opposite_domain().check(PropertyId::JoinSubext);
    let opp_codomain = f.into_opposite_codomain().check(PropertyId::MeetSuperext);
    let both = f
        .on_opposite_domain()
        .into_opposite_codomain()
        .check(PropertyId::JoinSuperext);
    let all_agree = [&opp_domain, &opp_codomain, &both]
        .iter()
        .all(|v| v.holds == direct.holds);
    EquivalenceFamilyReport {
        meet_subext: direct,
        join_subext_on_opposite_domain: opp_domain,
        meet_superext_into_opposite_codomain: opp_codomain,
        join_superext_on_both_opposites: both,
        all_agree,
    }
}

/// Result of an exhaustive implication check over a function space.
#[derive(Debug, Clone)]
pub enum ImplicationOutcome {
    Confirmed { functions_checked: u64 },
    Counterexample { function: LatticeFunction, index: u64 },
}

impl ImplicationOutcome {
    pub fn is_confirmed(&self) -> bool {
        matches!(self, ImplicationOutcome::Confirmed { .. })
    }
}

/// Enumerates every function `domain -> {0..codomain_size-1}` and reports
/// the first (in enumeration order) that satisfies every premise property
/// and violates at least one conclusion property, or confirms the
/// implication.
///
/// Enumeration order is row-major over the element list: the candidate with
/// index `c` assigns element `j` the value `(c / size^(n-1-j)) % size`, so
/// the first counterexample is the lexicographically least value table. With
/// `jobs > 1` the index space is scanned in parallel; the reported
/// counterexample is still the global minimum index.
pub fn verify_implication(
    premise: &[PropertyId],
    conclusion: &[PropertyId],
    domain: &Arc<FiniteLattice>,
    codomain_size: u32,
    budget: u64,
    jobs: usize,
) -> Result<ImplicationOutcome, BudgetExceeded> {
    let n = domain.len();
    let space = (codomain_size as u128)
        .checked_pow(n as u32)
        .unwrap_or(u128::MAX);
    if space > budget as u128 {
        return Err(BudgetExceeded {
            space,
            budget,
        });
    }
    let total = space as u64;
    let codomain = FiniteChain::range(codomain_size);
    let is_counterexample = |c: u64, values: &mut Vec<i64>| -> bool {
        decode_function(c, codomain_size, n, values);
        premise
            .iter()
            .all(|&p| holds_on_values(domain, &codomain, values, p))
            && !conclusion
                .iter()
                .all(|&q| holds_on_values(domain, &codomain, values, q))
    };

    let first = if jobs <= 1 {
        let mut values = vec![0i64; n];
        (0..total).find(|&c| is_counterexample(c, &mut values))
    } else {
        let best = AtomicU64::new(u64::MAX);
        let chunk = total.div_ceil(jobs as u64).max(1);
        std::thread::scope(|scope| {
            for w in 0..jobs as u64 {
                let best = &best;
                let is_counterexample = &is_counterexample;
                scope.spawn(move || {
                    let mut values = vec![0i64; n];
                    let lo = w * chunk;
                    let hi = total.min(lo + chunk);
                    for c in lo..hi {
                        if best.load(Ordering::Relaxed) < lo {
                            return; // an earlier chunk already found one
                        }
                        if is_counterexample(c, &mut values) {
                            best.fetch_min(c, Ordering::Relaxed);
                            return;
                        }
                    }
                });
            }
        });
        let b = best.load(Ordering::Relaxed);
        (b != u64::MAX).then_some(b)
    };

    match first {
        None => Ok(ImplicationOutcome::Confirmed {
            functions_checked: total,
        }),
        Some(index) => {
            let mut values = vec![0i64; n];
            decode_function(index, codomain_size, n, &mut values);
            let function = LatticeFunction::new(domain.clone(), codomain, values)
                .expect("enumerated function is valid");
            Ok(ImplicationOutcome::Counterexample { function, index })
        }
    }
}

/// Checks an implication in both directions.
pub fn verify_equivalence(
    left: &[PropertyId],
    right: &[PropertyId],
    domain: &Arc<FiniteLattice>,
    codomain_size: u32,
    budget: u64,
    jobs: usize,
) -> Result<(ImplicationOutcome, ImplicationOutcome), BudgetExceeded> {
    Ok((
        verify_implication(left, right, domain, codomain_size, budget, jobs)?,
        verify_implication(right, left, domain, codomain_size, budget, jobs)?,
    ))
}

pub(crate) fn decode_function(index: u64, size: u32, n: usize, out: &mut Vec<i64>) {
    out.clear();
    out.resize(n, 0);
    let mut rem = index;
    for j in (0..n).rev() {
        out[j] = (rem % size as u64) as i64;
        rem /= size as u64;
    }
}

/// All value tables of functions from `n` elements into `{0..size-1}`, in
/// enumeration order.
pub fn decode_all(size: u32, n: usize) -> impl Iterator<Item = Vec<i64>> {
    let total = (size as u64)
        .checked_pow(n as u32)
        .expect("function space fits in u64");
    (0..total).map(move |index| {
        let mut values = Vec::new();
        decode_function(index, size, n, &mut values);
        values
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use proptest::prelude::*;

    fn diamond_fn(vals: [i64; 4]) -> LatticeFunction {
        // element order 0, a, b, 1
        let top = 1 + vals.iter().copied().max().unwrap();
        LatticeFunction::new(
            catalog::diamond(),
            FiniteChain::new((vals.iter().copied().min().unwrap()..=top).collect()).unwrap(),
            vals.to_vec(),
        )
        .unwrap()
    }

    #[test]
    fn separating_function_f() {
        // f(0)=0, f(a)=2, f(b)=f(1)=1: one-sided on the meet side only
        let f = diamond_fn([0, 2, 1, 1]);
        assert!(f.check(PropertyId::MeetSuperext).holds);
        let j = f.check(PropertyId::JoinSuperext);
        assert!(!j.holds);
        let w = j.witness.unwrap();
        assert_eq!((w.x.as_str(), w.y.as_str()), ("a", "b"));
        assert!(!f.check(PropertyId::Qsm).holds);
        let set = f.classify();
        assert!(set.contains(&PropertyId::MeetSuperext));
        assert!(!set.contains(&PropertyId::JoinSuperext));
        assert!(!set.contains(&PropertyId::Qsm));
        assert!(!set.contains(&PropertyId::Wqsm));
    }

    #[test]
    fn separating_function_g() {
        let g = diamond_fn([0, 1, 1, 1]);
        assert!(g.check(PropertyId::Superext).holds);
        let v = g.check(PropertyId::Wqsm);
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!((w.x.as_str(), w.y.as_str()), ("a", "b"));
    }

    #[test]
    fn separating_function_h_v() {
        let h = diamond_fn([2, 2, 1, 0]);
        assert!(h.check(PropertyId::Wqsm).holds);
        let v = h.check(PropertyId::Wpsm);
        assert!(!v.holds);
        assert_eq!(v.witness.unwrap().clause, "main");
    }

    #[test]
    fn separating_function_u() {
        let u = diamond_fn([0, 1, 1, 1]);
        // same table as g; also separates the pseudo-supermodular family
        assert!(u.check(PropertyId::Wpsm).holds);
        assert!(!u.check(PropertyId::Psm).holds);
        assert!(!u.check(PropertyId::Wqsm).holds);
    }

    #[test]
    fn separating_function_w() {
        let w = diamond_fn([0, 3, 1, 2]);
        assert!(w.check(PropertyId::Psm).holds);
        assert!(!w.check(PropertyId::Wqsm).holds);
        assert!(!w.check(PropertyId::JoinSuperext).holds);
        let set = w.classify();
        assert!(set.contains(&PropertyId::Psm));
        assert!(set.contains(&PropertyId::Wpsm));
        assert!(!set.contains(&PropertyId::Wqsm));
    }

    #[test]
    fn constant_functions() {
        let chain = FiniteChain::new(vec![0, 1, 2, 3, 4]).unwrap();
        let d = catalog::diamond();
        // interior constant: everything holds, including the lattice variants
        let mid = LatticeFunction::new(d.clone(), chain.clone(), vec![2; 4]).unwrap();
        for p in ALL_PROPERTIES {
            assert!(mid.check(p).holds, "{p} on interior constant");
        }
        // constant at the codomain minimum: lattice subextremality fails
        let bot = LatticeFunction::new(d.clone(), chain.clone(), vec![0; 4]).unwrap();
        assert!(!bot.check(PropertyId::LatSubext).holds);
        assert!(bot.check(PropertyId::Qsbm).holds);
        // constant at the codomain maximum: the dual lattice variant fails
        let top = LatticeFunction::new(d, chain, vec![4; 4]).unwrap();
        assert!(!top.check(PropertyId::LatSuperext).holds);
        assert!(top.check(PropertyId::Qsm).holds);
        for p in ALL_PROPERTIES {
            if p != PropertyId::LatSubext {
                assert!(bot.check(p).holds, "{p} on bottom constant");
            }
            if p != PropertyId::LatSuperext {
                assert!(top.check(p).holds, "{p} on top constant");
            }
        }
    }

    #[test]
    fn chains_satisfy_everything_but_lattice_variants() {
        // on a totally ordered domain every condition except the lattice
        // variants holds for every function
        for n in 1..=4usize {
            let c = catalog::chain(n);
            let k = 3u32;
            let total = (k as u64).pow(n as u32);
            let codomain = FiniteChain::range(k);
            let mut values = Vec::new();
            for idx in 0..total {
                decode_function(idx, k, n, &mut values);
                for p in ALL_PROPERTIES {
                    if matches!(p, PropertyId::LatSubext | PropertyId::LatSuperext) {
                        continue;
                    }
                    assert!(
                        holds_on_values(&c, &codomain, &values, p),
                        "{p} must hold on a chain domain, values {values:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn equivalence_family_on_examples() {
        // f = [0,2,1,1] satisfies all four transformed checks: on the
        // diamond the first clause handles every comparable pair and
        // f(a^b) = 0 sits below both f(a) and f(b)
        let f = diamond_fn([0, 2, 1, 1]);
        let report = check_equivalence_family(&f);
        assert!(report.all_agree);
        assert!(report.meet_subext.holds);

        // push the meet value above f(a) and the join above both to break it
        let f = diamond_fn([2, 0, 1, 3]);
        let report = check_equivalence_family(&f);
        assert!(report.all_agree);
        assert!(!report.meet_subext.holds);

        let c = diamond_fn([1, 1, 1, 1]);
        let report = check_equivalence_family(&c);
        assert!(report.all_agree);
        assert!(report.meet_subext.holds);
    }

    #[test]
    fn equivalence_family_exhaustive_on_diamond() {
        let d = catalog::diamond();
        let codomain = FiniteChain::range(3);
        let mut values = Vec::new();
        for idx in 0..81 {
            decode_function(idx, 3, 4, &mut values);
            let f = LatticeFunction::new(d.clone(), codomain.clone(), values.clone()).unwrap();
            assert!(check_equivalence_family(&f).all_agree, "values {values:?}");
        }
    }

    #[test]
    fn implication_checks_on_diamond() {
        let d = catalog::diamond();
        let lat_implies_qsm = verify_implication(
            &[PropertyId::LatSuperext],
            &[PropertyId::Qsm],
            &d,
            4,
            1_000_000,
            1,
        )
        .unwrap();
        assert!(lat_implies_qsm.is_confirmed());

        let wqsm_superext = verify_implication(
            &[PropertyId::Wqsm],
            &[PropertyId::Superext],
            &d,
            4,
            1_000_000,
            1,
        )
        .unwrap();
        assert!(wqsm_superext.is_confirmed());

        let (fwd, back) = verify_equivalence(
            &[PropertyId::Subext],
            &[PropertyId::MeetSubext, PropertyId::JoinSubext],
            &d,
            4,
            1_000_000,
            1,
        )
        .unwrap();
        assert!(fwd.is_confirmed() && back.is_confirmed());

        match verify_implication(
            &[PropertyId::Psm],
            &[PropertyId::Wqsm],
            &d,
            4,
            1_000_000,
            1,
        )
        .unwrap()
        {
            ImplicationOutcome::Counterexample { function, .. } => {
                assert!(function.check(PropertyId::Psm).holds);
                assert!(!function.check(PropertyId::Wqsm).holds);
            }
            _ => panic!("expected a counterexample"),
        }

        // constant at the codomain maximum defeats the converse of the
        // lattice-variant implication
        match verify_implication(
            &[PropertyId::Qsm],
            &[PropertyId::LatSuperext],
            &d,
            3,
            1_000_000,
            1,
        )
        .unwrap()
        {
            ImplicationOutcome::Counterexample { function, .. } => {
                assert!(function.check(PropertyId::Qsm).holds);
                assert!(!function.check(PropertyId::LatSuperext).holds);
            }
            _ => panic!("expected a counterexample"),
        }
    }

    #[test]
    fn implication_budget_is_enforced() {
        let d = catalog::diamond();
        let err =
            verify_implication(&[PropertyId::Qsm], &[PropertyId::Psm], &d, 10, 100, 1).unwrap_err();
        assert_eq!(err.space, 10_000);
    }

    #[test]
    fn parallel_scan_matches_sequential() {
        let d = catalog::diamond();
        for (p, q) in [
            (PropertyId::Psm, PropertyId::Wqsm),
            (PropertyId::Superext, PropertyId::Wqsm),
            (PropertyId::LatSuperext, PropertyId::Qsm),
        ] {
            let seq = verify_implication(&[p], &[q], &d, 3, 1_000_000, 1).unwrap();
            let par = verify_implication(&[p], &[q], &d, 3, 1_000_000, 4).unwrap();
            match (seq, par) {
                (
                    ImplicationOutcome::Counterexample { index: a, .. },
                    ImplicationOutcome::Counterexample { index: b, .. },
                ) => assert_eq!(a, b),
                (ImplicationOutcome::Confirmed { .. }, ImplicationOutcome::Confirmed { .. }) => {}
                _ => panic!("parallel and sequential outcomes disagree for {p} => {q}"),
            }
        }
    }

    #[test]
    fn level_sets() {
        let f = diamond_fn([0, 2, 1, 1]);
        let up2 = f.level_set(2, LevelDirection::AtLeast);
        assert_eq!(up2.ids(), vec!["a"]);
        let up0 = f.level_set(0, LevelDirection::AtLeast);
        assert_eq!(up0.len(), 4);
    }

    #[test]
    fn property_parse_roundtrip() {
        for p in ALL_PROPERTIES {
            assert_eq!(p.name().parse::<PropertyId>().unwrap(), p);
        }
        assert!("NOPE".parse::<PropertyId>().is_err());
    }

    proptest! {
        // Witness soundness: a failing verdict's pair violates the clause it
        // names when re-substituted into the definition.
        #[test]
        fn witness_soundness(vals in proptest::collection::vec(0i64..4, 5), which in 0usize..4) {
            let lat = match which {
                0 => catalog::diamond(),
                1 => catalog::m3(),
                2 => catalog::n5(),
                _ => catalog::chain(5),
            };
            let n = lat.len();
            let vals = &vals[..n.min(vals.len())];
            prop_assume!(vals.len() == n);
            let f = LatticeFunction::new(
                lat.clone(),
                FiniteChain::range(4),
                vals.to_vec(),
            ).unwrap();
            for p in ALL_PROPERTIES {
                let v = f.check(p);
                if let Some(w) = v.witness {
                    let x = lat.index_of(&w.x).unwrap();
                    let y = lat.index_of(&w.y).unwrap();
                    prop_assert_eq!(f.check_pair(p, x, y), Some(w.clause.as_str()));
                }
            }
        }
    }
}
