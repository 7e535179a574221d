//! Seeded and exhaustive search for separating examples: functions that
//! satisfy one property family while violating another, and games whose
//! hypothesis reports or equilibrium structure match a requested pattern.
//!
//! When the search space fits inside the budget the scan is exhaustive in a
//! documented lexicographic order, so a miss is a proof of nonexistence at
//! that size. Otherwise candidates are sampled from a seeded stream and a
//! miss is only a failure to find. Every hit is re-verified through the
//! public checkers before it is returned.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::game::{GameError, NormalFormGame, Polarity, TheoremId};
use crate::lattice::{FiniteChain, FiniteLattice};
use crate::properties::{decode_function, LatticeFunction, PropertyId};
use crate::DEFAULT_BUDGET;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone)]
pub struct FunctionSearchSpec {
    pub domain: Arc<FiniteLattice>,
    pub codomain_size: u32,
    pub satisfy: Vec<PropertyId>,
    pub violate: Vec<PropertyId>,
    pub budget: u64,
    pub seed: u64,
}

#[derive(Debug, Clone)]
pub enum FunctionSearchOutcome {
    Found {
        function: LatticeFunction,
        mode: SearchMode,
        draws: u64,
    },
    NotFound {
        exhausted: bool,
        mode: SearchMode,
        draws: u64,
    },
}

fn function_matches(
    f: &LatticeFunction,
    satisfy: &[PropertyId],
    violate: &[PropertyId],
) -> bool {
    satisfy.iter().all(|&p| f.check(p).holds) && violate.iter().all(|&p| !f.check(p).holds)
}

/// Searches `domain -> {0..codomain_size-1}` for a function satisfying every
/// `satisfy` property and violating every `violate` property.
pub fn find_separating_function(spec: &FunctionSearchSpec) -> FunctionSearchOutcome {
    let n = spec.domain.len();
    let codomain = FiniteChain::range(spec.codomain_size);
    let space = (spec.codomain_size as u128)
        .checked_pow(n as u32)
        .unwrap_or(u128::MAX);
    if space <= spec.budget as u128 {
        let mut values = Vec::new();
        for index in 0..space as u64 {
            decode_function(index, spec.codomain_size, n, &mut values);
            let f = LatticeFunction::new(spec.domain.clone(), codomain.clone(), values.clone())
                .expect("enumerated function is valid");
            if function_matches(&f, &spec.satisfy, &spec.violate) {
                return FunctionSearchOutcome::Found {
                    function: f,
                    mode: SearchMode::Exhaustive,
                    draws: index + 1,
                };
            }
        }
        FunctionSearchOutcome::NotFound {
            exhausted: true,
            mode: SearchMode::Exhaustive,
            draws: space as u64,
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
        for draw in 0..spec.budget {
            let values: Vec<i64> = (0..n)
                .map(|_| rng.gen_range(0..spec.codomain_size as i64))
                .collect();
            let f = LatticeFunction::new(spec.domain.clone(), codomain.clone(), values)
                .expect("sampled function is valid");
            if function_matches(&f, &spec.satisfy, &spec.violate) {
                return FunctionSearchOutcome::Found {
                    function: f,
                    mode: SearchMode::Sampled,
                    draws: draw + 1,
                };
            }
        }
        FunctionSearchOutcome::NotFound {
            exhausted: false,
            mode: SearchMode::Sampled,
            draws: spec.budget,
        }
    }
}

/// Predicates a searched game must satisfy (or violate).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum GamePredicate {
    /// The hypothesis report of a theorem passes (plain polarity).
    Passes(TheoremId),
    EquilibriaNonempty,
    HasLargest,
    HasLeast,
    /// The equilibrium set is a lattice in the induced order.
    LatticeInduced,
    /// The equilibrium set is a nonempty complete lattice in the induced
    /// order.
    CompleteLatticeInduced,
}

impl GamePredicate {
    pub fn name(self) -> String {
        match self {
            GamePredicate::Passes(t) => format!("passes:{t}"),
            GamePredicate::EquilibriaNonempty => "equilibria_nonempty".to_string(),
            GamePredicate::HasLargest => "has_largest".to_string(),
            GamePredicate::HasLeast => "has_least".to_string(),
            GamePredicate::LatticeInduced => "equilibria_lattice".to_string(),
            GamePredicate::CompleteLatticeInduced => "equilibria_complete_lattice".to_string(),
        }
    }
}

impl fmt::Display for GamePredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Debug, Clone, Error)]
#[error("unknown game predicate {0:?}")]
pub struct UnknownPredicate(pub String);

impl FromStr for GamePredicate {
    type Err = UnknownPredicate;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(t) = s.strip_prefix("passes:") {
            return t
                .parse::<TheoremId>()
                .map(GamePredicate::Passes)
                .map_err(|_| UnknownPredicate(s.to_string()));
        }
        match s {
            "equilibria_nonempty" => Ok(GamePredicate::EquilibriaNonempty),
            "has_largest" => Ok(GamePredicate::HasLargest),
            "has_least" => Ok(GamePredicate::HasLeast),
            "equilibria_lattice" => Ok(GamePredicate::LatticeInduced),
            "equilibria_complete_lattice" => Ok(GamePredicate::CompleteLatticeInduced),
            other => Err(UnknownPredicate(other.to_string())),
        }
    }
}

impl From<GamePredicate> for String {
    fn from(p: GamePredicate) -> String {
        p.name()
    }
}

impl TryFrom<String> for GamePredicate {
    type Error = UnknownPredicate;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

pub fn evaluate_game_predicate(
    game: &NormalFormGame,
    p: GamePredicate,
) -> Result<bool, GameError> {
    match p {
        GamePredicate::Passes(theorem) => {
            Ok(game.check_hypotheses(theorem, Polarity::Plain).overall)
        }
        _ => {
            let report = game.analyze_equilibria(DEFAULT_BUDGET)?;
            Ok(match p {
                GamePredicate::EquilibriaNonempty => report.count > 0,
                GamePredicate::HasLargest => report.structure.has_largest.is_some(),
                GamePredicate::HasLeast => report.structure.has_least.is_some(),
                GamePredicate::LatticeInduced => report.structure.is_lattice_induced,
                GamePredicate::CompleteLatticeInduced => {
                    report.structure.is_complete_lattice_induced
                }
                GamePredicate::Passes(_) => unreachable!(),
            })
        }
    }
}

#[derive(Debug, Clone)]
pub struct GameSearchSpec {
    /// One strategy lattice per player.
    pub strategies: Vec<Arc<FiniteLattice>>,
    /// Payoffs are drawn from `0..payoff_levels`.
    pub payoff_levels: i64,
    pub satisfy: Vec<GamePredicate>,
    pub violate: Vec<GamePredicate>,
    pub budget: u64,
    pub seed: u64,
}

#[derive(Debug, Clone)]
pub enum GameSearchOutcome {
    Found {
        game: NormalFormGame,
        mode: SearchMode,
        draws: u64,
    },
    NotFound {
        exhausted: bool,
        mode: SearchMode,
        draws: u64,
    },
}

fn game_matches(
    game: &NormalFormGame,
    satisfy: &[GamePredicate],
    violate: &[GamePredicate],
) -> Result<bool, GameError> {
    for &p in satisfy {
        if !evaluate_game_predicate(game, p)? {
            return Ok(false);
        }
    }
    for &p in violate {
        if evaluate_game_predicate(game, p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Searches over integer payoff tables for the given strategy profile shape.
///
/// Exhaustive order: candidate index `c` is read as base-`payoff_levels`
/// digits, player-major then joint-profile-major, most significant digit
/// first.
pub fn find_separating_game(spec: &GameSearchSpec) -> Result<GameSearchOutcome, GameError> {
    let players: Vec<String> = (1..=spec.strategies.len())
        .map(|i| format!("p{i}"))
        .collect();
    let joint: usize = spec.strategies.iter().map(|l| l.len()).product();
    let cells = spec.strategies.len() * joint;
    let space = (spec.payoff_levels as u128)
        .checked_pow(cells as u32)
        .unwrap_or(u128::MAX);
    let build = |digits: &[i64]| -> NormalFormGame {
        let payoffs: Vec<Vec<i64>> = digits
            .chunks(joint)
            .map(|chunk| chunk.to_vec())
            .collect();
        NormalFormGame::new(players.clone(), spec.strategies.clone(), payoffs)
            .expect("searched game is well-formed")
    };
    if space <= spec.budget as u128 {
        let mut digits = vec![0i64; cells];
        for index in 0..space as u64 {
            let mut rem = index;
            for d in (0..cells).rev() {
                digits[d] = (rem % spec.payoff_levels as u64) as i64;
                rem /= spec.payoff_levels as u64;
            }
            let game = build(&digits);
            if game_matches(&game, &spec.satisfy, &spec.violate)? {
                return Ok(GameSearchOutcome::Found {
                    game,
                    mode: SearchMode::Exhaustive,
                    draws: index + 1,
                });
            }
        }
        Ok(GameSearchOutcome::NotFound {
            exhausted: true,
            mode: SearchMode::Exhaustive,
            draws: space as u64,
        })
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
        for draw in 0..spec.budget {
            let digits: Vec<i64> = (0..cells)
                .map(|_| rng.gen_range(0..spec.payoff_levels))
                .collect();
            let game = build(&digits);
            if game_matches(&game, &spec.satisfy, &spec.violate)? {
                return Ok(GameSearchOutcome::Found {
                    game,
                    mode: SearchMode::Sampled,
                    draws: draw + 1,
                });
            }
        }
        Ok(GameSearchOutcome::NotFound {
            exhausted: false,
            mode: SearchMode::Sampled,
            draws: spec.budget,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn finds_superextremal_not_wqsm_on_diamond() {
        let spec = FunctionSearchSpec {
            domain: catalog::diamond(),
            codomain_size: 2,
            satisfy: vec![PropertyId::Superext],
            violate: vec![PropertyId::Wqsm],
            budget: 1_000_000,
            seed: 0,
        };
        match find_separating_function(&spec) {
            FunctionSearchOutcome::Found { function, mode, .. } => {
                assert_eq!(mode, SearchMode::Exhaustive);
                assert!(function.check(PropertyId::Superext).holds);
                assert!(!function.check(PropertyId::Wqsm).holds);
            }
            other => panic!("expected a separator, got {other:?}"),
        }
    }

    #[test]
    fn finds_meet_not_join_superextremal() {
        let spec = FunctionSearchSpec {
            domain: catalog::diamond(),
            codomain_size: 3,
            satisfy: vec![PropertyId::MeetSuperext],
            violate: vec![PropertyId::JoinSuperext],
            budget: 1_000_000,
            seed: 0,
        };
        match find_separating_function(&spec) {
            FunctionSearchOutcome::Found { function, .. } => {
                assert!(function.check(PropertyId::MeetSuperext).holds);
                assert!(!function.check(PropertyId::JoinSuperext).holds);
            }
            other => panic!("expected a separator, got {other:?}"),
        }
    }

    #[test]
    fn self_contradiction_is_exhaustively_refuted() {
        let spec = FunctionSearchSpec {
            domain: catalog::diamond(),
            codomain_size: 2,
            satisfy: vec![PropertyId::Qsm],
            violate: vec![PropertyId::Qsm],
            budget: 1_000_000,
            seed: 0,
        };
        match find_separating_function(&spec) {
            FunctionSearchOutcome::NotFound { exhausted, mode, draws } => {
                assert!(exhausted);
                assert_eq!(mode, SearchMode::Exhaustive);
                assert_eq!(draws, 16);
            }
            other => panic!("expected exhaustive miss, got {other:?}"),
        }
    }

    #[test]
    fn sampled_search_is_reproducible() {
        let spec = FunctionSearchSpec {
            domain: catalog::diamond(),
            codomain_size: 4,
            satisfy: vec![PropertyId::Psm],
            violate: vec![PropertyId::Wqsm],
            budget: 200, // 256 candidates, so the budget forces sampling
            seed: 11,
        };
        let a = find_separating_function(&spec);
        let b = find_separating_function(&spec);
        match (a, b) {
            (
                FunctionSearchOutcome::Found { function: fa, draws: da, mode },
                FunctionSearchOutcome::Found { function: fb, draws: db, .. },
            ) => {
                assert_eq!(mode, SearchMode::Sampled);
                assert_eq!(fa.values(), fb.values());
                assert_eq!(da, db);
            }
            (a, b) => panic!("outcomes differ or missed: {a:?} vs {b:?}"),
        }
    }

    #[test]
    fn finds_game_with_nonlattice_equilibria() {
        let c2 = catalog::chain(2);
        let spec = GameSearchSpec {
            strategies: vec![c2.clone(), c2],
            payoff_levels: 2,
            satisfy: vec![GamePredicate::Passes(TheoremId::Existence44)],
            violate: vec![GamePredicate::LatticeInduced],
            budget: 1_000,
            seed: 0,
        };
        match find_separating_game(&spec).unwrap() {
            GameSearchOutcome::Found { game, mode, .. } => {
                assert_eq!(mode, SearchMode::Exhaustive);
                assert!(evaluate_game_predicate(&game, GamePredicate::Passes(TheoremId::Existence44)).unwrap());
                assert!(!evaluate_game_predicate(&game, GamePredicate::LatticeInduced).unwrap());
            }
            other => panic!("expected a game, got {other:?}"),
        }
    }

    #[test]
    fn finds_game_with_largest_but_no_least() {
        let c2 = catalog::chain(2);
        let spec = GameSearchSpec {
            strategies: vec![c2.clone(), c2],
            payoff_levels: 2,
            satisfy: vec![
                GamePredicate::Passes(TheoremId::Largest47),
                GamePredicate::HasLargest,
            ],
            violate: vec![GamePredicate::HasLeast],
            budget: 1_000,
            seed: 0,
        };
        match find_separating_game(&spec).unwrap() {
            GameSearchOutcome::Found { game, .. } => {
                let report = game.analyze_equilibria(1_000).unwrap();
                assert!(report.structure.has_largest.is_some());
                assert!(report.structure.has_least.is_none());
            }
            other => panic!("expected a game, got {other:?}"),
        }
    }

    #[test]
    fn sanity_direction_conformant_game_has_complete_equilibria() {
        // any game passing the complete-lattice hypotheses must also satisfy
        // the structural predicate, so a joint search finds one immediately
        let c2 = catalog::chain(2);
        let spec = GameSearchSpec {
            strategies: vec![c2.clone(), c2],
            payoff_levels: 2,
            satisfy: vec![
                GamePredicate::Passes(TheoremId::Complete49),
                GamePredicate::CompleteLatticeInduced,
            ],
            violate: vec![],
            budget: 1_000,
            seed: 0,
        };
        match find_separating_game(&spec).unwrap() {
            GameSearchOutcome::Found { game, .. } => {
                assert!(
                    evaluate_game_predicate(&game, GamePredicate::CompleteLatticeInduced).unwrap()
                );
            }
            other => panic!("expected a conformant game, got {other:?}"),
        }
    }

    #[test]
    fn predicate_strings_roundtrip() {
        let preds = [
            GamePredicate::Passes(TheoremId::Complete49),
            GamePredicate::EquilibriaNonempty,
            GamePredicate::HasLargest,
            GamePredicate::HasLeast,
            GamePredicate::LatticeInduced,
            GamePredicate::CompleteLatticeInduced,
        ];
        for p in preds {
            assert_eq!(p.name().parse::<GamePredicate>().unwrap(), p);
        }
        assert!("passes:NOPE".parse::<GamePredicate>().is_err());
    }
}
