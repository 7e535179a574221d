//! Finite normal-form games on product lattices.
//!
//! A game carries one strategy lattice and one integer payoff table per
//! player. Equilibria are computed two independent ways: `enumerate_nash`
//! sweeps every joint profile (the oracle), and `solve_fixed_point` runs
//! Tarski iteration on an increasing selection of the joint best-response
//! correspondence. `check_hypotheses` evaluates, player by player and
//! condition by condition, the assumption sets under which existence, a
//! largest equilibrium, or a complete-lattice equilibrium set is guaranteed,
//! annotating the conditions that finiteness makes automatic.
//!
//! Joint profiles are identified by their `|`-joined strategy ids, matching
//! the payoff-table keys of the interchange format.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::crossing::{CrossingProperty, CrossingVerdict, TwoVarFunction};
use crate::lattice::{
    chain_predicates, induced_structure, product_labeled, BoundKind, FiniteChain, FiniteLattice, OrderError, StructureFlags, Subset,
};
use crate::optima::{
    increasing_selection, tarski_fixed_point, Correspondence, FixpointSide,
    MonotoneMap, MonotoneMapError, SelectionError,
};
use crate::properties::{LatticeFunction, LevelDirection, PropertyId};
use crate::BudgetExceeded;

#[derive(Debug, Clone, Error)]
pub enum GameError {
    #[error("unknown player {0:?}")]
    UnknownPlayer(String),
    #[error("player {player:?}: payoff table has {got} entries, expected {expected}")]
    PayoffArity {
        player: String,
        got: usize,
        expected: usize,
    },
    #[error("strategy ids must not contain '|' (player {player:?}, id {id:?})")]
    ReservedSeparator { player: String, id: String },
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error("best responses of player {player:?} at opponents {opponents:?} are not closed under {bound}: ({a}, {b})")]
    NotClosedUnderBound {
        player: String,
        opponents: String,
        bound: BoundKind,
        a: String,
        b: String,
    },
    #[error("best-response correspondence of player {player:?} is not weakly ascending")]
    NotWeaklyAscending { player: String },
    #[error("backtracking selection for player {player:?} exhausted its search; this indicates a precondition violation or a bug")]
    SelectionSearchFailed { player: String },
    #[error("selected joint map is not increasing ({x} <= {y} fails); the selection hypotheses do not hold")]
    SelectionNotMonotone { x: String, y: String },
    #[error("unknown theorem {0:?}")]
    UnknownTheorem(String),
}

/// Theorem hypothesis sets checked by `check_hypotheses`. The ids are the
/// interchange names used by reports and the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum TheoremId {
    Existence44,
    Largest47,
    Complete49,
}

pub const ALL_THEOREMS: [TheoremId; 3] = [
    TheoremId::Existence44,
    TheoremId::Largest47,
    TheoremId::Complete49,
];

impl TheoremId {
    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Existence44 => "EXISTENCE_4.4",
            TheoremId::Largest47 => "LARGEST_4.7",
            TheoremId::Complete49 => "COMPLETE_4.9",
        }
    }

    /// The per-slice payoff property of condition 2.
    pub fn slice_property(self, polarity: Polarity) -> PropertyId {
        match (self, polarity) {
            (TheoremId::Existence44, Polarity::Plain) => PropertyId::MeetSuperext,
            (TheoremId::Existence44, Polarity::Parenthesized) => PropertyId::JoinSuperext,
            (TheoremId::Largest47, _) => PropertyId::Wpsm,
            (TheoremId::Complete49, _) => PropertyId::Wqsm,
        }
    }

    /// The payoff crossing condition of condition 3.
    pub fn crossing_property(self) -> CrossingProperty {
        match self {
            TheoremId::Existence44 => CrossingProperty::ModularCrossing,
            TheoremId::Largest47 => CrossingProperty::UpperCrossing,
            TheoremId::Complete49 => CrossingProperty::SingleCrossing,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = GameError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ALL_THEOREMS
            .iter()
            .copied()
            .find(|t| t.name() == s)
            .ok_or_else(|| GameError::UnknownTheorem(s.to_string()))
    }
}

impl From<TheoremId> for String {
    fn from(t: TheoremId) -> String {
        t.name().to_string()
    }
}

impl TryFrom<String> for TheoremId {
    type Error = GameError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

/// Selects the parenthesized alternative where a theorem statement offers
/// one; conditions without an alternative are unaffected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    #[default]
    Plain,
    Parenthesized,
}

impl FromStr for Polarity {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plain" => Ok(Polarity::Plain),
            "parenthesized" => Ok(Polarity::Parenthesized),
            other => Err(format!("unknown polarity {other:?} (plain|parenthesized)")),
        }
    }
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Polarity::Plain => "plain",
            Polarity::Parenthesized => "parenthesized",
        })
    }
}

#[derive(Debug, Clone)]
pub struct NormalFormGame {
    players: Vec<String>,
    strategies: Vec<Arc<FiniteLattice>>,
    payoffs: Vec<Vec<i64>>, // [player][joint index]
    codomains: Vec<FiniteChain>,
    joint: Arc<FiniteLattice>,
}

impl NormalFormGame {
    pub fn new(
        players: Vec<String>,
        strategies: Vec<Arc<FiniteLattice>>,
        payoffs: Vec<Vec<i64>>,
    ) -> Result<Self, GameError> {
        assert!(!players.is_empty(), "player set must be nonempty");
        assert_eq!(players.len(), strategies.len());
        assert_eq!(players.len(), payoffs.len());
        for (p, lat) in players.iter().zip(&strategies) {
            if let Some(id) = lat.ids().iter().find(|id| id.contains('|')) {
                return Err(GameError::ReservedSeparator {
                    player: p.clone(),
                    id: id.clone(),
                });
            }
        }
        let joint = Arc::new(product_labeled(&strategies, '|')?);
        for (p, table) in players.iter().zip(&payoffs) {
            if table.len() != joint.len() {
                return Err(GameError::PayoffArity {
                    player: p.clone(),
                    got: table.len(),
                    expected: joint.len(),
                });
            }
        }
        let codomains = payoffs
            .iter()
            .map(|t| FiniteChain::new(t.clone()).expect("nonempty payoff table"))
            .collect();
        Ok(NormalFormGame {
            players,
            strategies,
            payoffs,
            codomains,
            joint,
        })
    }

    pub fn players(&self) -> &[String] {
        &self.players
    }

    pub fn player_index(&self, name: &str) -> Result<usize, GameError> {
        self.players
            .iter()
            .position(|p| p == name)
            .ok_or_else(|| GameError::UnknownPlayer(name.to_string()))
    }

    pub fn strategy_lattice(&self, i: usize) -> &Arc<FiniteLattice> {
        &self.strategies[i]
    }

    /// The joint strategy lattice `S`, with `|`-joined element ids.
    pub fn joint_lattice(&self) -> &Arc<FiniteLattice> {
        &self.joint
    }

    pub fn payoff_codomain(&self, i: usize) -> &FiniteChain {
        &self.codomains[i]
    }

    #[inline]
    pub fn payoff(&self, i: usize, joint: usize) -> i64 {
        self.payoffs[i][joint]
    }

    pub fn joint_of_profile(&self, profile: &[usize]) -> usize {
        debug_assert_eq!(profile.len(), self.players.len());
        profile
            .iter()
            .enumerate()
            .fold(0, |acc, (p, &x)| acc * self.strategies[p].len() + x)
    }

    pub fn profile_of_joint(&self, mut joint: usize) -> Vec<usize> {
        let mut profile = vec![0usize; self.players.len()];
        for p in (0..self.players.len()).rev() {
            profile[p] = joint % self.strategies[p].len();
            joint /= self.strategies[p].len();
        }
        profile
    }

    /// Index of the opponents' part of a profile (mixed radix over all
    /// players except `i`, in player order).
    pub fn minus_of_profile(&self, i: usize, profile: &[usize]) -> usize {
        profile
            .iter()
            .enumerate()
            .filter(|&(p, _)| p != i)
            .fold(0, |acc, (p, &x)| acc * self.strategies[p].len() + x)
    }

    pub fn minus_count(&self, i: usize) -> usize {
        self.strategies
            .iter()
            .enumerate()
            .filter(|&(p, _)| p != i)
            .map(|(_, l)| l.len())
            .product()
    }

    fn profile_from_minus(&self, i: usize, own: usize, mut minus: usize) -> Vec<usize> {
        let mut profile = vec![0usize; self.players.len()];
        for p in (0..self.players.len()).rev() {
            if p == i {
                continue;
            }
            profile[p] = minus % self.strategies[p].len();
            minus /= self.strategies[p].len();
        }
        profile[i] = own;
        profile
    }

    /// Human-readable opponents id: the other players' strategy ids joined
    /// with `|` in player order.
    pub fn minus_id(&self, i: usize, minus: usize) -> String {
        let profile = self.profile_from_minus(i, 0, minus);
        profile
            .iter()
            .enumerate()
            .filter(|&(p, _)| p != i)
            .map(|(p, &x)| self.strategies[p].id(x))
            .collect::<Vec<_>>()
            .join("|")
    }

    /// The opponents' strategy space `S_{-i}` as a product lattice (a single
    /// trivial point when there is only one player).
    pub fn opponent_lattice(&self, i: usize) -> Arc<FiniteLattice> {
        let others: Vec<Arc<FiniteLattice>> = self
            .strategies
            .iter()
            .enumerate()
            .filter(|&(p, _)| p != i)
            .map(|(_, l)| l.clone())
            .collect();
        if others.is_empty() {
            return Arc::new(
                FiniteLattice::chain(vec!["-".to_string()]).expect("trivial lattice"),
            );
        }
        Arc::new(product_labeled(&others, '|').expect("nonempty factor list"))
    }

    /// Player `i`'s payoff against fixed opponents, as a function on `S_i`.
    pub fn payoff_slice(&self, i: usize, minus: usize) -> LatticeFunction {
        let values: Vec<i64> = (0..self.strategies[i].len())
            .map(|own| self.payoff(i, self.joint_of_profile(&self.profile_from_minus(i, own, minus))))
            .collect();
        LatticeFunction::new(
            self.strategies[i].clone(),
            self.codomains[i].clone(),
            values,
        )
        .expect("payoff slice value in codomain")
    }

    /// Player `i`'s payoff as a two-variable map on `S_i x S_{-i}`.
    pub fn payoff_two_var(&self, i: usize) -> TwoVarFunction {
        let tdomain = Arc::new(self.opponent_lattice(i).poset().clone());
        let nx = self.strategies[i].len();
        let nm = self.minus_count(i);
        let mut values = Vec::with_capacity(nx * nm);
        for own in 0..nx {
            for minus in 0..nm {
                let joint = self.joint_of_profile(&self.profile_from_minus(i, own, minus));
                values.push(self.payoff(i, joint));
            }
        }
        TwoVarFunction::new(
            self.strategies[i].clone(),
            tdomain,
            self.codomains[i].clone(),
            values,
        )
        .expect("payoff values in codomain")
    }

    /// Crossing condition of player `i`'s payoff relative to
    /// `(S_i, S_{-i})`.
    pub fn payoff_crossing(&self, i: usize, p: CrossingProperty) -> CrossingVerdict {
        self.payoff_two_var(i).check(p)
    }

    /// Best responses of player `i` against fixed opponents: the argmax of
    /// the payoff slice, as sorted strategy indices. Nonempty.
    pub fn best_response(&self, i: usize, minus: usize) -> Vec<usize> {
        let slice = self.payoff_slice(i, minus);
        let best = slice.values().iter().copied().max().expect("nonempty");
        (0..self.strategies[i].len())
            .filter(|&own| slice.value(own) == best)
            .collect()
    }

    /// `true` iff no player has a strictly improving unilateral deviation.
    pub fn is_nash(&self, profile: &[usize]) -> bool {
        let joint = self.joint_of_profile(profile);
        (0..self.players.len()).all(|i| {
            let here = self.payoff(i, joint);
            (0..self.strategies[i].len()).all(|own| {
                let mut dev = profile.to_vec();
                dev[i] = own;
                self.payoff(i, self.joint_of_profile(&dev)) <= here
            })
        })
    }

    /// Brute-force oracle: exactly the joint profiles that are Nash
    /// equilibria, as a subset of the joint lattice.
    pub fn enumerate_nash(&self, budget: u64) -> Result<Subset, GameError> {
        let total = self.joint.len();
        if total as u128 > budget as u128 {
            return Err(BudgetExceeded {
                space: total as u128,
                budget,
            }
            .into());
        }
        // best payoff per (player, opponents) so the sweep is linear
        let best: Vec<Vec<i64>> = (0..self.players.len())
            .map(|i| {
                let nm = self.minus_count(i);
                (0..nm)
                    .map(|minus| {
                        (0..self.strategies[i].len())
                            .map(|own| {
                                let joint = self
                                    .joint_of_profile(&self.profile_from_minus(i, own, minus));
                                self.payoff(i, joint)
                            })
                            .max()
                            .expect("nonempty strategy space")
                    })
                    .collect()
            })
            .collect();
        let mask: Vec<bool> = (0..total)
            .map(|joint| {
                let profile = self.profile_of_joint(joint);
                (0..self.players.len()).all(|i| {
                    self.payoff(i, joint) == best[i][self.minus_of_profile(i, &profile)]
                })
            })
            .collect();
        Ok(Subset::from_mask(self.joint.clone(), mask))
    }

    /// Best-response correspondence of player `i` as a set-valued map
    /// `S_{-i} -> 2^{S_i}`.
    pub fn best_response_correspondence(&self, i: usize) -> Correspondence {
        let source = Arc::new(self.opponent_lattice(i).poset().clone());
        let values: Vec<Vec<usize>> = (0..self.minus_count(i))
            .map(|minus| self.best_response(i, minus))
            .collect();
        Correspondence::new(source, self.strategies[i].clone(), values)
            .expect("best responses are nonempty")
    }

    pub fn check_hypotheses(
        &self,
        theorem: TheoremId,
        polarity: Polarity,
    ) -> HypothesisReport {
        let property = theorem.slice_property(polarity);
        let crossing = theorem.crossing_property();
        let mut players = Vec::with_capacity(self.players.len());
        for i in 0..self.players.len() {
            let mut conditions = Vec::with_capacity(4);
            // 1: the strategy space is a complete lattice
            conditions.push(ConditionVerdict {
                id: 1,
                description: format!(
                    "strategy space is a complete lattice ({} elements)",
                    self.strategies[i].len()
                ),
                holds: !self.strategies[i].is_empty(),
                annotation: Some("finite nonempty lattice; complete".to_string()),
                witness: None,
            });
            // 2: one-sided extremality of every payoff slice
            let mut slice_witness = None;
            for minus in 0..self.minus_count(i) {
                let verdict = self.payoff_slice(i, minus).check(property);
                if let Some(w) = verdict.witness {
                    slice_witness = Some(format!(
                        "against opponents {}: fails at ({}, {}) [{}]",
                        self.minus_id(i, minus),
                        w.x,
                        w.y,
                        w.clause
                    ));
                    break;
                }
            }
            let polarity_note = match (theorem, polarity) {
                (TheoremId::Existence44, Polarity::Parenthesized) => " (parenthesized)",
                _ => "",
            };
            conditions.push(ConditionVerdict {
                id: 2,
                description: format!(
                    "payoff is {} in own strategy against every opponent profile{}",
                    property, polarity_note
                ),
                holds: slice_witness.is_none(),
                annotation: None,
                witness: slice_witness,
            });
            // 3: crossing condition of the payoff
            let cv = self.payoff_crossing(i, crossing);
            conditions.push(ConditionVerdict {
                id: 3,
                description: format!("payoff is {crossing} relative to (S_i, S_-i)"),
                holds: cv.holds,
                annotation: None,
                witness: cv.witness.map(|w| {
                    format!(
                        "fails at (x={} < x'={}, t={} < t'={}) [{}]",
                        w.x, w.x_hi, w.t, w.t_hi, w.clause
                    )
                }),
            });
            // 4: level-set chain conditions, automatic on finite lattices
            let (wants_down, wants_bound) = match theorem {
                TheoremId::Existence44 => (polarity == Polarity::Plain, false),
                TheoremId::Largest47 => (true, true),
                TheoremId::Complete49 => (polarity == Polarity::Plain, true),
            };
            let mut level_ok = true;
            let mut levels = 0usize;
            for minus in 0..self.minus_count(i) {
                let slice = self.payoff_slice(i, minus);
                for &t in self.codomains[i].values() {
                    levels += 1;
                    let level = slice.level_set(t, LevelDirection::AtLeast);
                    let preds = chain_predicates(&level);
                    let ok = if wants_down {
                        preds.chain_complete_down
                            && if wants_bound {
                                preds.chain_bounded_above
                            } else {
                                level.is_empty() || level.has_maximal()
                            }
                    } else {
                        preds.chain_complete_up
                            && if wants_bound {
                                preds.chain_bounded_below
                            } else {
                                level.is_empty() || level.has_minimal()
                            }
                    };
                    level_ok &= ok;
                }
            }
            let dir = if wants_down { "downwards" } else { "upwards" };
            let extra = match (theorem, wants_down) {
                (TheoremId::Existence44, true) => "admits maximal elements",
                (TheoremId::Existence44, false) => "admits minimal elements",
                (_, true) => "chain-bounded above",
                (_, false) => "chain-bounded below",
            };
            conditions.push(ConditionVerdict {
                id: 4,
                description: format!(
                    "every upper level set of every payoff slice is chain-complete {dir} and {extra} ({levels} level sets)"
                ),
                holds: level_ok,
                annotation: Some("trivially satisfied: finite".to_string()),
                witness: None,
            });
            players.push(PlayerHypotheses {
                player: self.players[i].clone(),
                conditions,
            });
        }
        let overall = players
            .iter()
            .all(|p| p.conditions.iter().all(|c| c.holds));
        HypothesisReport {
            theorem,
            polarity,
            players,
            overall,
        }
    }

    /// Equilibrium by Tarski iteration over an increasing selection of the
    /// joint best-response correspondence. The returned profile is verified
    /// to be a Nash equilibrium.
    pub fn solve_fixed_point(
        &self,
        side: FixpointSide,
        policy: SelectionPolicy,
    ) -> Result<SolveOutcome, GameError> {
        let n = self.players.len();
        let mut selections: Vec<Vec<usize>> = Vec::with_capacity(n);
        for i in 0..n {
            let nm = self.minus_count(i);
            match policy {
                SelectionPolicy::Extremal => {
                    let lat = &self.strategies[i];
                    let mut table = Vec::with_capacity(nm);
                    for minus in 0..nm {
                        let br = self.best_response(i, minus);
                        // the order-extremal choice exists only when the set
                        // is closed under the bound being taken
                        let mut acc = br[0];
                        for &x in &br[1..] {
                            acc = match side {
                                FixpointSide::Least => lat.meet(acc, x),
                                FixpointSide::Greatest => lat.join(acc, x),
                            };
                        }
                        if !br.contains(&acc) {
                            // find a violating pair for the error report
                            let (a, b) = violating_pair(lat, &br, side);
                            return Err(GameError::NotClosedUnderBound {
                                player: self.players[i].clone(),
                                opponents: self.minus_id(i, minus),
                                bound: match side {
                                    FixpointSide::Least => BoundKind::Meet,
                                    FixpointSide::Greatest => BoundKind::Join,
                                },
                                a: lat.id(a).to_string(),
                                b: lat.id(b).to_string(),
                            });
                        }
                        table.push(acc);
                    }
                    selections.push(table);
                }
                SelectionPolicy::Backtracking => {
                    let correspondence = self.best_response_correspondence(i);
                    let selection =
                        increasing_selection(&correspondence).map_err(|e| match e {
                            SelectionError::NotWeaklyAscending(_) => {
                                GameError::NotWeaklyAscending {
                                    player: self.players[i].clone(),
                                }
                            }
                            SelectionError::SearchFailed => GameError::SelectionSearchFailed {
                                player: self.players[i].clone(),
                            },
                        })?;
                    selections.push(selection.assignments().to_vec());
                }
            }
        }
        // joint selection s -> (r_i(s_-i))_i, validated increasing
        let map: Vec<usize> = (0..self.joint.len())
            .map(|joint| {
                let profile = self.profile_of_joint(joint);
                let image: Vec<usize> = (0..n)
                    .map(|i| selections[i][self.minus_of_profile(i, &profile)])
                    .collect();
                self.joint_of_profile(&image)
            })
            .collect();
        let monotone = MonotoneMap::new(self.joint.clone(), map).map_err(|e| match e {
            MonotoneMapError::NotMonotone { x, y } => GameError::SelectionNotMonotone { x, y },
            MonotoneMapError::WrongArity(..) => unreachable!("map is total by construction"),
        })?;
        let run = tarski_fixed_point(&monotone, side);
        let joint = self
            .joint
            .index_of(&run.point)
            .expect("fixed point is a joint profile");
        let profile = self.profile_of_joint(joint);
        assert!(
            self.is_nash(&profile),
            "fixed point of a best-response selection must be a Nash equilibrium"
        );
        Ok(SolveOutcome {
            profile: run.point,
            strategies: profile
                .iter()
                .enumerate()
                .map(|(p, &x)| self.strategies[p].id(x).to_string())
                .collect(),
            iterations: run.iterations,
            verified_nash: true,
        })
    }

    /// Full order analysis of the equilibrium set.
    pub fn analyze_equilibria(&self, budget: u64) -> Result<EquilibriumReport, GameError> {
        let equilibria = self.enumerate_nash(budget)?;
        let structure = induced_structure(&equilibria);
        // a finite lattice has a least and a largest element, each the unique
        // minimal/maximal one; anything else would be an internal
        // inconsistency
        let order_consistent = if structure.is_lattice_induced && !equilibria.is_empty() {
            structure.has_least.is_some()
                && structure.has_largest.is_some()
                && structure.minimal_elements.len() == 1
                && structure.maximal_elements.len() == 1
        } else {
            true
        };
        Ok(EquilibriumReport {
            count: equilibria.len(),
            equilibria: equilibria.ids(),
            structure,
            order_consistent,
        })
    }

    /// For every joint profile, is the best-response value `R(s)` a
    /// sublattice of `S` (closed under the carrier meet and join)? On finite
    /// lattices subcomplete and sublattice coincide, so this decides whether
    /// the sublattice-valued fixed-point route applies, as opposed to the
    /// weaker hypotheses that only need increasing selections.
    pub fn zhou_applicability(&self, budget: u64) -> Result<ZhouReport, GameError> {
        if self.joint.len() as u128 > budget as u128 {
            return Err(BudgetExceeded {
                space: self.joint.len() as u128,
                budget,
            }
            .into());
        }
        let mut failures = Vec::new();
        for i in 0..self.players.len() {
            let lat = &self.strategies[i];
            for minus in 0..self.minus_count(i) {
                let br = self.best_response(i, minus);
                'scan: for &a in &br {
                    for &b in &br {
                        for (bound, c) in
                            [(BoundKind::Meet, lat.meet(a, b)), (BoundKind::Join, lat.join(a, b))]
                        {
                            if !br.contains(&c) {
                                failures.push(ZhouFailure {
                                    player: self.players[i].clone(),
                                    opponents: self.minus_id(i, minus),
                                    bound,
                                    a: lat.id(a).to_string(),
                                    b: lat.id(b).to_string(),
                                });
                                break 'scan;
                            }
                        }
                    }
                }
            }
        }
        let zhou_route = failures.is_empty();
        let theorem_route = self
            .check_hypotheses(TheoremId::Complete49, Polarity::Plain)
            .overall;
        let note = match (zhou_route, theorem_route) {
            (true, true) => {
                "every best-response value is a sublattice: both the sublattice-valued \
                 fixed-point route and the increasing-selection route apply"
            }
            (false, true) => {
                "some best-response value is not a sublattice, so the sublattice-valued \
                 fixed-point route does not apply; the increasing-selection hypotheses still hold"
            }
            (true, false) => {
                "best-response values are sublattices, but the per-player hypotheses fail"
            }
            (false, false) => "neither route applies",
        }
        .to_string();
        Ok(ZhouReport {
            all_values_sublattices: zhou_route,
            failures,
            theorem_route,
            zhou_route,
            note,
        })
    }
}

fn violating_pair(lat: &FiniteLattice, set: &[usize], side: FixpointSide) -> (usize, usize) {
    for &a in set {
        for &b in set {
            let c = match side {
                FixpointSide::Least => lat.meet(a, b),
                FixpointSide::Greatest => lat.join(a, b),
            };
            if !set.contains(&c) {
                return (a, b);
            }
        }
    }
    (set[0], set[0])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SelectionPolicy {
    /// `r_i(s_-i)` is the order-least/greatest best response; requires each
    /// best-response set to be closed under the corresponding bound.
    Extremal,
    /// Deterministic backtracking selection; requires each best-response
    /// correspondence to be weakly ascending.
    Backtracking,
}

impl FromStr for SelectionPolicy {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "extremal" => Ok(SelectionPolicy::Extremal),
            "backtracking" => Ok(SelectionPolicy::Backtracking),
            other => Err(format!("unknown policy {other:?} (extremal|backtracking)")),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SolveOutcome {
    /// Joint profile id (`|`-joined strategy ids).
    pub profile: String,
    pub strategies: Vec<String>,
    pub iterations: usize,
    pub verified_nash: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConditionVerdict {
    pub id: u8,
    pub description: String,
    pub holds: bool,
    pub annotation: Option<String>,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PlayerHypotheses {
    pub player: String,
    pub conditions: Vec<ConditionVerdict>,
}

#[derive(Debug, Clone, Serialize)]
pub struct HypothesisReport {
    pub theorem: TheoremId,
    pub polarity: Polarity,
    pub players: Vec<PlayerHypotheses>,
    pub overall: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct EquilibriumReport {
    pub count: usize,
    pub equilibria: Vec<String>,
    pub structure: StructureFlags,
    /// False would mean a lattice-induced equilibrium set with multiple
    /// minimal or maximal elements, which is impossible; kept as an explicit
    /// cross-check.
    pub order_consistent: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ZhouFailure {
    pub player: String,
    pub opponents: String,
    pub bound: BoundKind,
    pub a: String,
    pub b: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ZhouReport {
    pub all_values_sublattices: bool,
    pub failures: Vec<ZhouFailure>,
    /// The increasing-selection hypotheses (complete-lattice theorem) pass.
    pub theorem_route: bool,
    /// Every `R(s)` is a (sub)complete sublattice of `S`.
    pub zhou_route: bool,
    pub note: String,
}

/// Seeded random games over a fixed pool of strategy lattices. The same seed
/// and settings always produce the same sequence of games.
#[derive(Debug, Clone)]
pub struct GameGenerator {
    pub lattice_pool: Vec<Arc<FiniteLattice>>,
    pub min_players: usize,
    pub max_players: usize,
    /// Payoffs are drawn uniformly from `0..payoff_levels`.
    pub payoff_levels: i64,
}

impl GameGenerator {
    /// Two or three players; strategy lattices of at most six elements,
    /// weighted toward small chains so that hypothesis-conformant games stay
    /// frequent; payoffs in `{0, 1, 2}`.
    pub fn standard() -> Self {
        use crate::catalog;
        let mut pool = Vec::new();
        for _ in 0..3 {
            pool.push(catalog::chain(2));
        }
        for _ in 0..2 {
            pool.push(catalog::chain(3));
        }
        pool.push(catalog::chain(4));
        pool.push(catalog::diamond());
        pool.push(catalog::n5());
        pool.push(catalog::diamond_top());
        pool.push(Arc::new(
            crate::lattice::product(&[catalog::chain(2), catalog::chain(3)]).unwrap(),
        ));
        GameGenerator {
            lattice_pool: pool,
            min_players: 2,
            max_players: 3,
            payoff_levels: 3,
        }
    }

    pub fn generate(&self, rng: &mut ChaCha8Rng) -> NormalFormGame {
        let n = rng.gen_range(self.min_players..=self.max_players);
        // keep three-player joint spaces small
        let limit = if n >= 3 { 4 } else { 6 };
        let candidates: Vec<&Arc<FiniteLattice>> = self
            .lattice_pool
            .iter()
            .filter(|l| l.len() <= limit)
            .collect();
        let strategies: Vec<Arc<FiniteLattice>> = (0..n)
            .map(|_| (*candidates.choose(rng).expect("nonempty pool")).clone())
            .collect();
        let total: usize = strategies.iter().map(|l| l.len()).product();
        let payoffs: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..total).map(|_| rng.gen_range(0..self.payoff_levels)).collect())
            .collect();
        let players = (1..=n).map(|i| format!("p{i}")).collect();
        NormalFormGame::new(players, strategies, payoffs).expect("generated game is well-formed")
    }

    /// Rejection-samples games whose hypothesis report for `theorem` passes.
    /// Gives up once `draw_budget` candidates have been drawn.
    pub fn conformant(
        &self,
        theorem: TheoremId,
        polarity: Polarity,
        count: usize,
        rng: &mut ChaCha8Rng,
        draw_budget: usize,
    ) -> Vec<NormalFormGame> {
        let mut out = Vec::with_capacity(count);
        for _ in 0..draw_budget {
            if out.len() == count {
                break;
            }
            let g = self.generate(rng);
            if g.check_hypotheses(theorem, polarity).overall {
                out.push(g);
            }
        }
        out
    }
}
