//! Built-in named instances: the classification fixtures on the diamond, the
//! band indicator, the crossing separators, and the grid games whose
//! equilibrium sets exhibit the pathologies the toolkit certifies.
//!
//! The grid games discretize unit-interval games onto `{0, 1/k, .., 1}`.
//! Half-open continuum conditions are evaluated literally on grid points
//! (exact rational comparisons, no rounding). Where the continuum behavior
//! does not survive discretization, the instance says so in its annotations
//! instead of claiming the continuum conclusion.

use std::sync::Arc;

use crate::catalog::{self, grid_leq};
use crate::crossing::TwoVarFunction;
use crate::game::NormalFormGame;
use crate::lattice::{FiniteChain, FiniteLattice};
use crate::properties::LatticeFunction;

#[derive(Debug, Clone)]
pub struct FunctionInstance {
    pub name: String,
    pub function: LatticeFunction,
    pub annotations: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct TwoVarInstance {
    pub name: String,
    pub function: TwoVarFunction,
    pub annotations: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct GameInstance {
    pub name: String,
    pub game: NormalFormGame,
    pub annotations: Vec<String>,
}

fn diamond_function(values: [i64; 4], codomain_size: u32) -> LatticeFunction {
    LatticeFunction::new(
        catalog::diamond(),
        FiniteChain::range(codomain_size),
        values.to_vec(),
    )
    .expect("builtin diamond function")
}

/// The five-point chain over `[0, 2]` with step one half.
pub fn half_chain() -> Arc<FiniteLattice> {
    Arc::new(
        FiniteLattice::chain(
            ["0", "0.5", "1", "1.5", "2"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
        )
        .expect("half chain"),
    )
}

pub fn builtin_function_names() -> Vec<&'static str> {
    vec![
        "diamond_f",
        "diamond_g",
        "diamond_h_v",
        "diamond_u",
        "diamond_w",
        "band_indicator",
    ]
}

/// Named classification fixtures. Element order on the diamond is
/// `0, a, b, 1`.
pub fn builtin_function(name: &str) -> Option<FunctionInstance> {
    let (function, annotations): (LatticeFunction, Vec<String>) = match name {
        "diamond_f" => (diamond_function([0, 2, 1, 1], 3), vec![]),
        "diamond_g" => (diamond_function([0, 1, 1, 1], 2), vec![]),
        "diamond_h_v" => (
            diamond_function([2, 2, 1, 0], 3),
            vec![
                "two published variants of this separator carry identical value tables; \
                 a single canonical copy is shipped as h_v"
                    .to_string(),
            ],
        ),
        "diamond_u" => (
            diamond_function([0, 1, 1, 1], 2),
            vec![
                "shares its value table with diamond_g; named separately because it \
                 separates a different pair of property families"
                    .to_string(),
            ],
        ),
        "diamond_w" => (diamond_function([0, 3, 1, 2], 4), vec![]),
        "band_indicator" => (
            LatticeFunction::new(half_chain(), FiniteChain::range(2), vec![0, 0, 1, 1, 0])
                .expect("band indicator"),
            vec![
                "discretization of the indicator of a half-open band [1,2) on [0,2]; \
                 on the grid the minimizer set {0, 0.5, 2} is realized exactly"
                    .to_string(),
            ],
        ),
        _ => return None,
    };
    Some(FunctionInstance {
        name: name.to_string(),
        function,
        annotations,
    })
}

pub fn builtin_twovar_names() -> Vec<&'static str> {
    vec!["mod_not_sc", "upper_not_mod"]
}

/// The two crossing separators: modular-crossing without single crossing,
/// and upper-crossing without modular crossing.
pub fn builtin_twovar(name: &str) -> Option<TwoVarInstance> {
    match name {
        "mod_not_sc" => {
            let x = catalog::chain(2);
            let t = Arc::new(catalog::chain(2).poset().clone());
            let f = TwoVarFunction::new(
                x,
                t,
                FiniteChain::range(2),
                vec![0, 0, 1, 0], // f(1,0)=1, all others 0
            )
            .expect("builtin twovar");
            Some(TwoVarInstance {
                name: name.to_string(),
                function: f,
                annotations: vec![],
            })
        }
        "upper_not_mod" => {
            let x = catalog::chain(3);
            let t = Arc::new(catalog::chain(2).poset().clone());
            let f = TwoVarFunction::new(
                x,
                t,
                FiniteChain::new(vec![-1, 0]).unwrap(),
                vec![0, 0, 0, -1, 0, 0], // f(1,1) = -1, all others 0
            )
            .expect("builtin twovar");
            Some(TwoVarInstance {
                name: name.to_string(),
                function: f,
                annotations: vec![],
            })
        }
        _ => None,
    }
}

pub fn builtin_game_families() -> Vec<&'static str> {
    vec![
        "coordination_2x2",
        "post44_nolattice",
        "eg48_nomin",
        "eg412_zhou",
        "post44_interior",
    ]
}

/// Canonical instance names at their default grids.
pub fn builtin_game_names() -> Vec<String> {
    vec![
        "coordination_2x2".to_string(),
        "post44_nolattice_grid3".to_string(),
        "eg48_nomin_grid3".to_string(),
        "eg412_zhou_grid5".to_string(),
        "post44_interior_grid3".to_string(),
    ]
}

fn grid_game(
    k: usize,
    u1: impl Fn(usize, usize) -> i64,
    u2: impl Fn(usize, usize) -> i64,
) -> NormalFormGame {
    let grid = catalog::unit_grid(k);
    let points = k + 1;
    let mut t1 = Vec::with_capacity(points * points);
    let mut t2 = Vec::with_capacity(points * points);
    for j1 in 0..points {
        for j2 in 0..points {
            t1.push(u1(j1, j2));
            t2.push(u2(j1, j2));
        }
    }
    NormalFormGame::new(
        vec!["p1".to_string(), "p2".to_string()],
        vec![grid.clone(), grid],
        vec![t1, t2],
    )
    .expect("builtin grid game")
}

/// Resolves a built-in game by family name (`eg48_nomin`) or canonical name
/// (`eg48_nomin_grid3`); `grid` overrides the subdivision count `k` for the
/// grid families. The instance name always reflects the grid actually used.
pub fn builtin_game(name: &str, grid: Option<usize>) -> Option<GameInstance> {
    if name == "coordination_2x2" {
        let c2 = catalog::chain(2);
        let u = vec![1, 0, 0, 1];
        let game = NormalFormGame::new(
            vec!["p1".to_string(), "p2".to_string()],
            vec![c2.clone(), c2],
            vec![u.clone(), u],
        )
        .expect("coordination game");
        return Some(GameInstance {
            name: name.to_string(),
            game,
            annotations: vec![],
        });
    }
    let (family, k) = parse_grid_name(name, grid)?;
    let points = k + 1;
    let instance_name = format!("{family}_grid{points}");
    match family {
        "post44_nolattice" => {
            // u1 = 1 iff s2 <= 1/2 <= s1, u2 = 0
            let game = grid_game(
                k,
                |j1, j2| i64::from(grid_leq(j2, k, 1, 2) && grid_leq(1, 2, j1, k)),
                |_, _| 0,
            );
            Some(GameInstance {
                name: instance_name,
                game,
                annotations: vec![
                    "the non-lattice shape of the equilibrium set is order-combinatorial \
                     and survives discretization"
                        .to_string(),
                ],
            })
        }
        "eg48_nomin" => {
            // u1 = s1 if s2 <= 1/2 else 0, u2 = 0
            let game = grid_game(
                k,
                |j1, j2| if grid_leq(j2, k, 1, 2) { j1 as i64 } else { 0 },
                |_, _| 0,
            );
            Some(GameInstance {
                name: instance_name,
                game,
                annotations: vec![
                    "a largest equilibrium exists while no least one does; this \
                     order-combinatorial pathology survives discretization"
                        .to_string(),
                ],
            })
        }
        "eg412_zhou" => {
            // u1 = 1 iff s1 in [0,1/2) or s1 = 1, u2 = 0
            let game = grid_game(
                k,
                |j1, _| i64::from(!grid_leq(1, 2, j1, k) || j1 == k),
                |_, _| 0,
            );
            Some(GameInstance {
                name: instance_name,
                game,
                annotations: vec![
                    "on the continuum the best-response value is not subcomplete, so the \
                     sublattice-valued fixed-point route fails while the increasing-selection \
                     hypotheses hold; on a finite grid every chain subset is a sublattice, so \
                     that failure does not survive discretization"
                        .to_string(),
                ],
            })
        }
        "post44_interior" => {
            // u1 = s1 * s2 (payoff j1 * j2 order-embeds it), u2 = 1 iff 0 < s2 < 1
            let game = grid_game(
                k,
                |j1, j2| (j1 * j2) as i64,
                |_, j2| i64::from(j2 > 0 && j2 < k),
            );
            Some(GameInstance {
                name: instance_name,
                game,
                annotations: vec![
                    "on the continuum the equilibrium set is {1} x (0,1), with no largest \
                     and no least element; on a finite grid the open interval collapses to \
                     interior points and the set acquires both extremes; this pathology \
                     does not survive discretization"
                        .to_string(),
                ],
            })
        }
        _ => None,
    }
}

/// Splits `family[_gridN]`; an explicit `grid` argument overrides `N`.
/// Defaults: 3 points for the grid-3 families, 5 for `eg412_zhou`.
fn parse_grid_name(name: &str, grid: Option<usize>) -> Option<(&'static str, usize)> {
    for family in ["post44_nolattice", "eg48_nomin", "eg412_zhou", "post44_interior"] {
        let Some(rest) = name.strip_prefix(family) else {
            continue;
        };
        let suffix_points = if rest.is_empty() {
            None
        } else {
            rest.strip_prefix("_grid")?.parse::<usize>().ok()
        };
        let default_points = if family == "eg412_zhou" { 5 } else { 3 };
        let points = grid
            .map(|k| k + 1)
            .or(suffix_points)
            .unwrap_or(default_points);
        if !(2..=65).contains(&points) {
            return None;
        }
        return Some((family, points - 1));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{Polarity, TheoremId};
    use crate::lattice::BoundKind;
    use crate::optima::FixpointSide;
    use crate::game::SelectionPolicy;
    use crate::properties::PropertyId;

    #[test]
    fn diamond_fixtures_classify_as_published() {
        let f = builtin_function("diamond_f").unwrap().function;
        assert!(f.check(PropertyId::MeetSuperext).holds);
        assert!(!f.check(PropertyId::JoinSuperext).holds);
        assert!(!f.check(PropertyId::Qsm).holds);

        let g = builtin_function("diamond_g").unwrap().function;
        assert!(g.check(PropertyId::Superext).holds);
        assert!(!g.check(PropertyId::Wqsm).holds);

        let h = builtin_function("diamond_h_v").unwrap().function;
        assert!(h.check(PropertyId::Wqsm).holds);
        assert!(!h.check(PropertyId::Wpsm).holds);

        let u = builtin_function("diamond_u").unwrap().function;
        assert!(u.check(PropertyId::Wpsm).holds);
        assert!(!u.check(PropertyId::Psm).holds);
        assert!(!u.check(PropertyId::Wqsm).holds);

        let w = builtin_function("diamond_w").unwrap().function;
        assert!(w.check(PropertyId::Psm).holds);
        assert!(!w.check(PropertyId::Wqsm).holds);
        assert!(!w.check(PropertyId::JoinSuperext).holds);
    }

    #[test]
    fn nolattice_grid3_equilibria() {
        let inst = builtin_game("post44_nolattice_grid3", None).unwrap();
        let report = inst.game.analyze_equilibria(10_000).unwrap();
        let expected = vec![
            "0|1", "1/2|0", "1/2|1/2", "1/2|1", "1|0", "1|1/2", "1|1",
        ];
        let mut got = report.equilibria.clone();
        got.sort();
        let mut expected_sorted = expected.clone();
        expected_sorted.sort();
        assert_eq!(got, expected_sorted);
        assert!(!report.structure.is_lattice_induced);
        assert_eq!(report.structure.has_largest.as_deref(), Some("1|1"));
        // (1,0) and (0,1) sit in the set with no lower bound inside it
        let w = report.structure.induced_witness.unwrap();
        assert_eq!(w.bound, BoundKind::Meet);
    }

    #[test]
    fn eg48_grid3_has_largest_but_no_least() {
        let inst = builtin_game("eg48_nomin_grid3", None).unwrap();
        let report = inst.game.analyze_equilibria(10_000).unwrap();
        let mut got = report.equilibria.clone();
        got.sort();
        let mut expected = vec!["1|0", "1|1/2", "0|1", "1/2|1", "1|1"];
        expected.sort();
        assert_eq!(got, expected);
        assert_eq!(report.structure.has_largest.as_deref(), Some("1|1"));
        assert_eq!(report.structure.has_least, None);
        assert_eq!(report.structure.minimal_elements, vec!["0|1", "1|0"]);
        assert!(report.order_consistent);
        // hypotheses for the largest-equilibrium statement hold
        let hyp = inst.game.check_hypotheses(TheoremId::Largest47, Polarity::Plain);
        assert!(hyp.overall);
        // against the top opponent strategy the payoff slice is flat, so
        // every own strategy best-responds
        let game = &inst.game;
        let top_minus = game.strategy_lattice(1).index_of("1").unwrap();
        assert_eq!(game.best_response(0, top_minus), vec![0, 1, 2]);
        // below the threshold the payoff is the own coordinate, so only the
        // top of the chain best-responds
        let low_minus = game.strategy_lattice(1).index_of("0").unwrap();
        assert_eq!(game.best_response(0, low_minus), vec![2]);
    }

    #[test]
    fn eg412_grid5_complete_lattice_and_hypotheses() {
        let inst = builtin_game("eg412_zhou_grid5", None).unwrap();
        let report = inst.game.analyze_equilibria(10_000).unwrap();
        // equilibria are {0, 1/4, 1} x grid
        assert_eq!(report.count, 15);
        assert!(report.structure.is_complete_lattice_induced);
        let hyp = inst.game.check_hypotheses(TheoremId::Complete49, Polarity::Plain);
        assert!(hyp.overall);
        // on the grid the best-response values are sublattices, so the
        // sublattice route also applies; the annotation records the
        // continuum divergence
        let zhou = inst.game.zhou_applicability(10_000).unwrap();
        assert!(zhou.all_values_sublattices);
        assert!(zhou.theorem_route);
        assert!(!inst.annotations.is_empty());
        // the middle of the own chain never best-responds, so no profile
        // through it is an equilibrium
        let game = &inst.game;
        let mid = game.strategy_lattice(0).index_of("1/2").unwrap();
        for s2 in 0..game.strategy_lattice(1).len() {
            assert!(!game.is_nash(&[mid, s2]));
        }
    }

    #[test]
    fn interior_grid3_collapses_to_a_point() {
        let inst = builtin_game("post44_interior_grid3", None).unwrap();
        let report = inst.game.analyze_equilibria(10_000).unwrap();
        assert_eq!(report.equilibria, vec!["1|1/2"]);
        assert_eq!(report.structure.has_least.as_deref(), Some("1|1/2"));
        assert_eq!(report.structure.has_largest.as_deref(), Some("1|1/2"));
        // existence hypotheses hold on the grid
        let hyp = inst.game.check_hypotheses(TheoremId::Existence44, Polarity::Plain);
        assert!(hyp.overall);
        assert!(inst
            .annotations
            .iter()
            .any(|a| a.contains("does not survive discretization")));
    }

    #[test]
    fn grid_override_changes_resolution() {
        let inst = builtin_game("eg48_nomin", Some(4)).unwrap();
        assert_eq!(inst.name, "eg48_nomin_grid5");
        assert_eq!(inst.game.strategy_lattice(0).len(), 5);
        // the pathology persists at finer grids
        let report = inst.game.analyze_equilibria(10_000).unwrap();
        assert_eq!(report.structure.has_largest.as_deref(), Some("1|1"));
        assert_eq!(report.structure.has_least, None);
    }

    #[test]
    fn solving_the_zhou_game() {
        let inst = builtin_game("eg412_zhou_grid5", None).unwrap();
        let least = inst
            .game
            .solve_fixed_point(FixpointSide::Least, SelectionPolicy::Extremal)
            .unwrap();
        assert_eq!(least.profile, "0|0");
        let greatest = inst
            .game
            .solve_fixed_point(FixpointSide::Greatest, SelectionPolicy::Extremal)
            .unwrap();
        assert_eq!(greatest.profile, "1|1");
    }

    #[test]
    fn crossing_separators() {
        use crate::crossing::CrossingProperty;
        let m = builtin_twovar("mod_not_sc").unwrap().function;
        assert!(m.check(CrossingProperty::ModularCrossing).holds);
        assert!(!m.check(CrossingProperty::SingleCrossing).holds);
        let u = builtin_twovar("upper_not_mod").unwrap().function;
        assert!(u.check(CrossingProperty::UpperCrossing).holds);
        assert!(!u.check(CrossingProperty::ModularCrossing).holds);
    }
}
