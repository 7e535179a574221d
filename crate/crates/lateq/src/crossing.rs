//! Crossing conditions for maps on a lattice times a poset.
//!
//! These express that the preference for higher first-coordinate values
//! persists as the second coordinate rises. Single crossing is the strongest;
//! modular crossing drops the strict clause; upper (lower) crossing only asks
//! for *some* rescuing point above `x'` (below `x`).

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{FiniteChain, FiniteLattice, FinitePoset, OrderError};
use crate::properties::FunctionError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum CrossingProperty {
    SingleCrossing,
    ModularCrossing,
    UpperCrossing,
    LowerCrossing,
}

pub const ALL_CROSSINGS: [CrossingProperty; 4] = [
    CrossingProperty::SingleCrossing,
    CrossingProperty::ModularCrossing,
    CrossingProperty::UpperCrossing,
    CrossingProperty::LowerCrossing,
];

impl CrossingProperty {
    pub fn name(self) -> &'static str {
        match self {
            CrossingProperty::SingleCrossing => "SINGLE_CROSSING",
            CrossingProperty::ModularCrossing => "MODULAR_CROSSING",
            CrossingProperty::UpperCrossing => "UPPER_CROSSING",
            CrossingProperty::LowerCrossing => "LOWER_CROSSING",
        }
    }
}

impl fmt::Display for CrossingProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("unknown crossing property {0:?}")]
pub struct UnknownCrossing(pub String);

impl FromStr for CrossingProperty {
    type Err = UnknownCrossing;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ALL_CROSSINGS
            .iter()
            .copied()
            .find(|p| p.name() == s)
            .ok_or_else(|| UnknownCrossing(s.to_string()))
    }
}

impl From<CrossingProperty> for String {
    fn from(p: CrossingProperty) -> String {
        p.name().to_string()
    }
}

impl TryFrom<String> for CrossingProperty {
    type Error = UnknownCrossing;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

/// A total map `X x T -> C` with `X` a lattice, `T` any finite poset, and
/// `C` an integer chain. Values are stored x-major.
#[derive(Debug, Clone)]
pub struct TwoVarFunction {
    xdomain: Arc<FiniteLattice>,
    tdomain: Arc<FinitePoset>,
    codomain: FiniteChain,
    values: Vec<i64>,
}

impl TwoVarFunction {
    pub fn new(
        xdomain: Arc<FiniteLattice>,
        tdomain: Arc<FinitePoset>,
        codomain: FiniteChain,
        values: Vec<i64>,
    ) -> Result<Self, FunctionError> {
        if values.len() != xdomain.len() * tdomain.len() {
            return Err(FunctionError::MissingValue(format!(
                "expected {} values, got {}",
                xdomain.len() * tdomain.len(),
                values.len()
            )));
        }
        for (pos, &v) in values.iter().enumerate() {
            if !codomain.contains(v) {
                let x = pos / tdomain.len();
                let t = pos % tdomain.len();
                return Err(FunctionError::ValueOutsideCodomain {
                    element: format!("{}|{}", xdomain.id(x), tdomain.id(t)),
                    value: v,
                });
            }
        }
        Ok(TwoVarFunction {
            xdomain,
            tdomain,
            codomain,
            values,
        })
    }

    pub fn from_pairs<S: AsRef<str>>(
        xdomain: Arc<FiniteLattice>,
        tdomain: Arc<FinitePoset>,
        codomain: FiniteChain,
        pairs: &[(S, S, i64)],
    ) -> Result<Self, FunctionError> {
        let nt = tdomain.len();
        let mut values = vec![None; xdomain.len() * nt];
        for (xid, tid, v) in pairs {
            let x = xdomain
                .index_of(xid.as_ref())
                .ok_or_else(|| OrderError::UnknownElement(xid.as_ref().to_string()))?;
            let t = tdomain
                .index_of(tid.as_ref())
                .ok_or_else(|| OrderError::UnknownElement(tid.as_ref().to_string()))?;
            values[x * nt + t] = Some(*v);
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(pos, v)| {
                v.ok_or_else(|| {
                    FunctionError::MissingValue(format!(
                        "{}|{}",
                        xdomain.id(pos / nt),
                        tdomain.id(pos % nt)
                    ))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        TwoVarFunction::new(xdomain, tdomain, codomain, values)
    }

    pub fn xdomain(&self) -> &Arc<FiniteLattice> {
        &self.xdomain
    }

    pub fn tdomain(&self) -> &Arc<FinitePoset> {
        &self.tdomain
    }

    pub fn codomain(&self) -> &FiniteChain {
        &self.codomain
    }

    #[inline]
    pub fn value(&self, x: usize, t: usize) -> i64 {
        self.values[x * self.tdomain.len() + t]
    }

    /// First coordinate reversed together with the codomain; modular crossing
    /// is invariant under this reversal.
    pub fn reversed_x_and_codomain(&self) -> TwoVarFunction {
        TwoVarFunction {
            xdomain: Arc::new(self.xdomain.opposite()),
            tdomain: self.tdomain.clone(),
            codomain: self.codomain.negated(),
            values: self.values.iter().map(|v| -v).collect(),
        }
    }

    /// Both coordinates reversed (element indexing is unchanged by
    /// `opposite`, so the value table carries over); swaps the two
    /// existential crossing conditions.
    pub fn reversed_both_domains(&self) -> TwoVarFunction {
        TwoVarFunction {
            xdomain: Arc::new(self.xdomain.opposite()),
            tdomain: Arc::new(self.tdomain.opposite()),
            codomain: self.codomain.clone(),
            values: self.values.clone(),
        }
    }

    /// Decides a crossing property; quantifies over all `x < x'` and
    /// `t < t'`. The witness is the first violating quadruple in element
    /// order, and for the existential conditions it records how many
    /// candidate points were searched.
    pub fn check(&self, p: CrossingProperty) -> CrossingVerdict {
        let nx = self.xdomain.len();
        let nt = self.tdomain.len();
        for x in 0..nx {
            for xp in 0..nx {
                if !self.xdomain.lt(x, xp) {
                    continue;
                }
                for t in 0..nt {
                    for tp in 0..nt {
                        if !self.tdomain.lt(t, tp) {
                            continue;
                        }
                        if let Some((clause, searched)) = self.violated_quad(p, x, xp, t, tp) {
                            return CrossingVerdict {
                                holds: false,
                                witness: Some(CrossingWitness {
                                    x: self.xdomain.id(x).to_string(),
                                    x_hi: self.xdomain.id(xp).to_string(),
                                    t: self.tdomain.id(t).to_string(),
                                    t_hi: self.tdomain.id(tp).to_string(),
                                    clause: clause.to_string(),
                                    searched,
                                }),
                            };
                        }
                    }
                }
            }
        }
        CrossingVerdict {
            holds: true,
            witness: None,
        }
    }

    /// Re-evaluates one quadruple `x < x'`, `t < t'`; `Some` carries the
    /// violated clause and, for existential clauses, the size of the
    /// exhausted search set.
    pub fn violated_quad(
        &self,
        p: CrossingProperty,
        x: usize,
        xp: usize,
        t: usize,
        tp: usize,
    ) -> Option<(&'static str, Option<u64>)> {
        let lo_t = self.value(x, t);
        let hi_t = self.value(xp, t);
        let lo_tp = self.value(x, tp);
        let hi_tp = self.value(xp, tp);
        match p {
            CrossingProperty::ModularCrossing => {
                (lo_t <= hi_t && !(lo_tp <= hi_tp)).then_some(("weak", None))
            }
            CrossingProperty::SingleCrossing => {
                if lo_t <= hi_t && !(lo_tp <= hi_tp) {
                    Some(("weak", None))
                } else if lo_t < hi_t && !(lo_tp < hi_tp) {
                    Some(("strict", None))
                } else {
                    None
                }
            }
            CrossingProperty::UpperCrossing => {
                if lo_t > hi_t {
                    return None;
                }
                let above: Vec<usize> = (0..self.xdomain.len())
                    .filter(|&u| self.xdomain.leq(xp, u))
                    .collect();
                if above.iter().any(|&u| lo_tp <= self.value(u, tp)) {
                    None
                } else {
                    Some(("existential", Some(above.len() as u64)))
                }
            }
            CrossingProperty::LowerCrossing => {
                // order-dual of upper crossing: when the lower strategy is
                // weakly better at the higher parameter, some point below x
                // must do at least as well as x' at the lower parameter
                if hi_tp > lo_tp {
                    return None;
                }
                let below: Vec<usize> = (0..self.xdomain.len())
                    .filter(|&v| self.xdomain.leq(v, x))
                    .collect();
                if below.iter().any(|&v| hi_t <= self.value(v, t)) {
                    None
                } else {
                    Some(("existential", Some(below.len() as u64)))
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingVerdict {
    pub holds: bool,
    pub witness: Option<CrossingWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingWitness {
    pub x: String,
    pub x_hi: String,
    pub t: String,
    pub t_hi: String,
    pub clause: String,
    /// For existential clauses, how many candidates were exhausted.
    pub searched: Option<u64>,
}

impl fmt::Display for CrossingVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "holds"),
            Some(w) => {
                write!(
                    f,
                    "fails at (x={} < x'={}, t={} < t'={}) [{}]",
                    w.x, w.x_hi, w.t, w.t_hi, w.clause
                )?;
                if let Some(n) = w.searched {
                    write!(f, " after searching {n} candidates")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::properties::decode_function;

    fn two_by_two(values: [i64; 4]) -> TwoVarFunction {
        // values indexed (x, t) with x-major order over {0,1} x {0,1}
        let x = catalog::chain(2);
        let t = Arc::new(catalog::chain(2).poset().clone());
        TwoVarFunction::new(
            x,
            t,
            FiniteChain::new(values.to_vec()).unwrap(),
            values.to_vec(),
        )
        .unwrap()
    }

    #[test]
    fn modular_but_not_single_crossing() {
        // f(0,0)=f(0,1)=f(1,1)=0, f(1,0)=1
        let f = two_by_two([0, 0, 1, 0]);
        assert!(f.check(CrossingProperty::ModularCrossing).holds);
        let v = f.check(CrossingProperty::SingleCrossing);
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!((w.x.as_str(), w.x_hi.as_str()), ("0", "1"));
        assert_eq!((w.t.as_str(), w.t_hi.as_str()), ("0", "1"));
        assert_eq!(w.clause, "strict");
    }

    #[test]
    fn upper_but_not_modular_crossing() {
        // on {0,1,2} x {0,1}: f(1,1) = -1, everything else 0
        let x = catalog::chain(3);
        let t = Arc::new(catalog::chain(2).poset().clone());
        let f = TwoVarFunction::new(
            x,
            t,
            FiniteChain::new(vec![-1, 0]).unwrap(),
            vec![0, 0, 0, -1, 0, 0],
        )
        .unwrap();
        assert!(f.check(CrossingProperty::UpperCrossing).holds);
        let v = f.check(CrossingProperty::ModularCrossing);
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!((w.x.as_str(), w.x_hi.as_str()), ("0", "1"));
    }

    #[test]
    fn independent_of_t_satisfies_all() {
        let x = catalog::chain(3);
        let t = Arc::new(catalog::chain(3).poset().clone());
        let values: Vec<i64> = [5, 1, 3]
            .iter()
            .flat_map(|&v| [v; 3])
            .collect();
        let f = TwoVarFunction::new(x, t, FiniteChain::new(vec![1, 3, 5]).unwrap(), values)
            .unwrap();
        for p in ALL_CROSSINGS {
            assert!(f.check(p).holds, "{p}");
        }
    }

    #[test]
    fn implication_chain_exhaustive() {
        // single => modular => upper over all f: {0,1} x {0,1} -> {0,1,2}
        let x = catalog::chain(2);
        let t = Arc::new(catalog::chain(2).poset().clone());
        let codomain = FiniteChain::range(3);
        let mut values = Vec::new();
        for idx in 0..81u64 {
            decode_function(idx, 3, 4, &mut values);
            let f = TwoVarFunction::new(
                x.clone(),
                t.clone(),
                codomain.clone(),
                values.clone(),
            )
            .unwrap();
            let single = f.check(CrossingProperty::SingleCrossing).holds;
            let modular = f.check(CrossingProperty::ModularCrossing).holds;
            let upper = f.check(CrossingProperty::UpperCrossing).holds;
            if single {
                assert!(modular, "single => modular, values {values:?}");
            }
            if modular {
                assert!(upper, "modular => upper, values {values:?}");
            }
        }
        // and over all f: {0,1,2} x {0,1} -> {0,1}
        let x = catalog::chain(3);
        let codomain = FiniteChain::range(2);
        for idx in 0..64u64 {
            decode_function(idx, 2, 6, &mut values);
            let f = TwoVarFunction::new(
                x.clone(),
                t.clone(),
                codomain.clone(),
                values.clone(),
            )
            .unwrap();
            if f.check(CrossingProperty::SingleCrossing).holds {
                assert!(f.check(CrossingProperty::ModularCrossing).holds);
            }
            if f.check(CrossingProperty::ModularCrossing).holds {
                assert!(f.check(CrossingProperty::UpperCrossing).holds);
            }
        }
    }

    #[test]
    fn modular_self_dual_under_x_and_codomain_reversal() {
        let x = catalog::chain(2);
        let t = Arc::new(catalog::chain(2).poset().clone());
        let codomain = FiniteChain::range(3);
        let mut values = Vec::new();
        for idx in 0..81u64 {
            decode_function(idx, 3, 4, &mut values);
            let f = TwoVarFunction::new(
                x.clone(),
                t.clone(),
                codomain.clone(),
                values.clone(),
            )
            .unwrap();
            assert_eq!(
                f.check(CrossingProperty::ModularCrossing).holds,
                f.reversed_x_and_codomain()
                    .check(CrossingProperty::ModularCrossing)
                    .holds,
                "values {values:?}"
            );
        }
    }

    #[test]
    fn lower_is_upper_on_reversed_domains() {
        let x = catalog::chain(2);
        let t = Arc::new(catalog::chain(2).poset().clone());
        let codomain = FiniteChain::range(3);
        let mut values = Vec::new();
        for idx in 0..81u64 {
            decode_function(idx, 3, 4, &mut values);
            let f = TwoVarFunction::new(
                x.clone(),
                t.clone(),
                codomain.clone(),
                values.clone(),
            )
            .unwrap();
            assert_eq!(
                f.check(CrossingProperty::LowerCrossing).holds,
                f.reversed_both_domains()
                    .check(CrossingProperty::UpperCrossing)
                    .holds,
                "values {values:?}"
            );
        }
    }

    #[test]
    fn witnesses_recheck() {
        let f = two_by_two([0, 0, 1, 0]);
        let v = f.check(CrossingProperty::SingleCrossing);
        let w = v.witness.unwrap();
        let x = f.xdomain().index_of(&w.x).unwrap();
        let xp = f.xdomain().index_of(&w.x_hi).unwrap();
        let t = f.tdomain().index_of(&w.t).unwrap();
        let tp = f.tdomain().index_of(&w.t_hi).unwrap();
        let (clause, _) = f
            .violated_quad(CrossingProperty::SingleCrossing, x, xp, t, tp)
            .unwrap();
        assert_eq!(clause, w.clause);
    }
}
