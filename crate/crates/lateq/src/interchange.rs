//! Textual interchange formats and the named-object workspace.
//!
//! A workspace document is a single JSON object with one map per object
//! kind. Lattices are given either by the full order relation or by a cover
//! relation (the reflexive-transitive closure is applied before validation):
//!
//! ```json
//! {
//!   "lattices": {
//!     "diamond": { "elements": ["0","a","b","1"],
//!                  "covers": [["0","a"],["0","b"],["a","1"],["b","1"]] }
//!   },
//!   "functions": {
//!     "f": { "lattice": "diamond", "codomain": 3,
//!            "values": { "0": 0, "a": 2, "b": 1, "1": 1 } }
//!   },
//!   "games": {
//!     "coord": { "players": ["p1","p2"],
//!                "strategies": { "p1": "chain2", "p2": "chain2" },
//!                "payoffs": { "p1": { "0|0": 1, "0|1": 0, "1|0": 0, "1|1": 1 },
//!                             "p2": { "0|0": 1, "0|1": 0, "1|0": 0, "1|1": 1 } } }
//!   }
//! }
//! ```
//!
//! Lattice and poset references resolve against the document first and fall
//! back to the named catalog (`diamond`, `m3`, `n5`, `chainN`, `gridN`,
//! ...). A `codomain` is either an integer `k`, meaning the chain
//! `{0..k-1}`, or an explicit list of chain values. Game payoff tables are
//! keyed by `|`-joined strategy ids in player order and must be total.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::builtins;
use crate::catalog;
use crate::crossing::TwoVarFunction;
use crate::game::{GameError, NormalFormGame};
use crate::lattice::{FiniteChain, FiniteLattice, FinitePoset, OrderError, Subset};
use crate::optima::{Correspondence, CorrespondenceError};
use crate::properties::{FunctionError, LatticeFunction};

#[derive(Debug, Error)]
pub enum InterchangeError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unknown {kind} {name:?}")]
    UnknownReference { kind: &'static str, name: String },
    #[error("{object}: {source}")]
    BadOrder {
        object: String,
        source: OrderError,
    },
    #[error("{object}: {source}")]
    BadFunction {
        object: String,
        source: FunctionError,
    },
    #[error("{object}: {source}")]
    BadCorrespondence {
        object: String,
        source: CorrespondenceError,
    },
    #[error("{object}: {source}")]
    BadGame {
        object: String,
        source: Box<GameError>,
    },
    #[error("game {object}: payoff table of player {player:?} missing profile {profile:?}")]
    MissingProfile {
        object: String,
        player: String,
        profile: String,
    },
    #[error("game {object}: payoff table of player {player:?} has unknown profile key {profile:?}")]
    UnknownProfile {
        object: String,
        player: String,
        profile: String,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
pub struct WorkspaceDoc {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub lattices: BTreeMap<String, LatticeDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub posets: BTreeMap<String, LatticeDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub functions: BTreeMap<String, FunctionDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub twovar: BTreeMap<String, TwoVarDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub correspondences: BTreeMap<String, CorrespondenceDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub games: BTreeMap<String, GameDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub subsets: BTreeMap<String, SubsetDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub annotations: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateDoc>,
}

/// Order data: full relation (`relation`) or cover relation (`covers`).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticeDoc {
    pub elements: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relation: Option<Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub covers: Option<Vec<(String, String)>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CodomainDoc {
    /// The chain `{0..k-1}`.
    Size(u32),
    /// Explicit chain values.
    Values(Vec<i64>),
}

impl CodomainDoc {
    pub fn to_chain(&self) -> Result<FiniteChain, OrderError> {
        match self {
            CodomainDoc::Size(k) => Ok(FiniteChain::range(*k)),
            CodomainDoc::Values(v) => FiniteChain::new(v.clone()),
        }
    }

    pub fn from_chain(chain: &FiniteChain) -> CodomainDoc {
        let k = chain.len() as u32;
        if chain.values() == FiniteChain::range(k).values() {
            CodomainDoc::Size(k)
        } else {
            CodomainDoc::Values(chain.values().to_vec())
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FunctionDoc {
    pub lattice: String,
    pub codomain: CodomainDoc,
    pub values: BTreeMap<String, i64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TwoVarDoc {
    pub xlattice: String,
    pub tposet: String,
    pub codomain: CodomainDoc,
    /// Keys are `x|t`.
    pub values: BTreeMap<String, i64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorrespondenceDoc {
    pub source: String,
    pub target: String,
    pub values: BTreeMap<String, Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GameDoc {
    pub players: Vec<String>,
    pub strategies: BTreeMap<String, String>,
    /// Per player, profile key (`|`-joined strategy ids in player order) to
    /// payoff.
    pub payoffs: BTreeMap<String, BTreeMap<String, i64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubsetDoc {
    pub lattice: String,
    pub members: Vec<String>,
}

/// A self-contained, machine-re-checkable record of a failed check: the
/// object, the property, and the witness. Emitted by `lateq check
/// --certificate`; re-checked by `lateq check --input <certificate file>`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateDoc {
    /// `unary`, `crossing`, or `subset`.
    pub kind: String,
    pub object: String,
    pub property: String,
    pub witness: CertificateWitness,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateWitness {
    pub x: String,
    pub y: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_hi: Option<String>,
    pub clause: String,
}

/// Resolved registry of named objects.
#[derive(Debug, Default)]
pub struct Workspace {
    pub lattices: BTreeMap<String, Arc<FiniteLattice>>,
    pub posets: BTreeMap<String, Arc<FinitePoset>>,
    pub functions: BTreeMap<String, LatticeFunction>,
    pub twovars: BTreeMap<String, TwoVarFunction>,
    pub correspondences: BTreeMap<String, Correspondence>,
    pub games: BTreeMap<String, NormalFormGame>,
    pub subsets: BTreeMap<String, Subset>,
    pub annotations: BTreeMap<String, Vec<String>>,
    pub certificate: Option<CertificateDoc>,
}

impl Workspace {
    pub fn load(path: &Path) -> Result<Workspace, InterchangeError> {
        let text = std::fs::read_to_string(path).map_err(|source| InterchangeError::Io {
            path: path.display().to_string(),
            source,
        })?;
        let doc: WorkspaceDoc = serde_json::from_str(&text)?;
        Workspace::from_doc(&doc)
    }

    /// Document-local lattice, else catalog.
    pub fn lattice(&self, name: &str) -> Result<Arc<FiniteLattice>, InterchangeError> {
        if let Some(l) = self.lattices.get(name) {
            return Ok(l.clone());
        }
        catalog::by_name(name).ok_or(InterchangeError::UnknownReference {
            kind: "lattice",
            name: name.to_string(),
        })
    }

    /// Document-local poset, else lattice (as a poset), else catalog.
    pub fn poset(&self, name: &str) -> Result<Arc<FinitePoset>, InterchangeError> {
        if let Some(p) = self.posets.get(name) {
            return Ok(p.clone());
        }
        if let Some(l) = self.lattices.get(name) {
            return Ok(Arc::new(l.poset().clone()));
        }
        catalog::by_name(name)
            .map(|l| Arc::new(l.poset().clone()))
            .ok_or(InterchangeError::UnknownReference {
                kind: "poset",
                name: name.to_string(),
            })
    }

    pub fn from_doc(doc: &WorkspaceDoc) -> Result<Workspace, InterchangeError> {
        let mut ws = Workspace {
            annotations: doc.annotations.clone(),
            certificate: doc.certificate.clone(),
            ..Workspace::default()
        };
        for (name, ld) in &doc.lattices {
            let poset = build_poset(name, ld)?;
            let lattice =
                crate::lattice::validate_lattice(poset).map_err(|source| {
                    InterchangeError::BadOrder {
                        object: format!("lattice {name}"),
                        source,
                    }
                })?;
            ws.lattices.insert(name.clone(), Arc::new(lattice));
        }
        for (name, pd) in &doc.posets {
            ws.posets.insert(name.clone(), Arc::new(build_poset(name, pd)?));
        }
        for (name, fd) in &doc.functions {
            let lattice = ws.lattice(&fd.lattice)?;
            let codomain = fd.codomain.to_chain().map_err(|source| {
                InterchangeError::BadOrder {
                    object: format!("function {name}"),
                    source,
                }
            })?;
            let pairs: Vec<(&str, i64)> =
                fd.values.iter().map(|(k, &v)| (k.as_str(), v)).collect();
            let function = LatticeFunction::from_pairs(lattice, codomain, &pairs).map_err(
                |source| InterchangeError::BadFunction {
                    object: format!("function {name}"),
                    source,
                },
            )?;
            ws.functions.insert(name.clone(), function);
        }
        for (name, td) in &doc.twovar {
            let xlattice = ws.lattice(&td.xlattice)?;
            let tposet = ws.poset(&td.tposet)?;
            let codomain = td.codomain.to_chain().map_err(|source| {
                InterchangeError::BadOrder {
                    object: format!("twovar {name}"),
                    source,
                }
            })?;
            let mut triples = Vec::with_capacity(td.values.len());
            for (key, &v) in &td.values {
                let Some((x, t)) = key.split_once('|') else {
                    return Err(InterchangeError::BadFunction {
                        object: format!("twovar {name}"),
                        source: FunctionError::MissingValue(format!(
                            "key {key:?} is not of the form x|t"
                        )),
                    });
                };
                triples.push((x.to_string(), t.to_string(), v));
            }
            let function = TwoVarFunction::from_pairs(xlattice, tposet, codomain, &triples)
                .map_err(|source| InterchangeError::BadFunction {
                    object: format!("twovar {name}"),
                    source,
                })?;
            ws.twovars.insert(name.clone(), function);
        }
        for (name, cd) in &doc.correspondences {
            let source = ws.poset(&cd.source)?;
            let target = ws.lattice(&cd.target)?;
            let pairs: Vec<(String, Vec<String>)> = cd
                .values
                .iter()
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect();
            let correspondence = Correspondence::from_ids(source, target, &pairs).map_err(
                |source| InterchangeError::BadCorrespondence {
                    object: format!("correspondence {name}"),
                    source,
                },
            )?;
            ws.correspondences.insert(name.clone(), correspondence);
        }
        for (name, gd) in &doc.games {
            let game = build_game(&ws, name, gd)?;
            ws.games.insert(name.clone(), game);
        }
        for (name, sd) in &doc.subsets {
            let lattice = ws.lattice(&sd.lattice)?;
            let subset = Subset::from_ids(lattice, &sd.members).map_err(|source| {
                InterchangeError::BadOrder {
                    object: format!("subset {name}"),
                    source,
                }
            })?;
            ws.subsets.insert(name.clone(), subset);
        }
        Ok(ws)
    }
}

fn build_poset(name: &str, doc: &LatticeDoc) -> Result<FinitePoset, InterchangeError> {
    let wrap = |source: OrderError| InterchangeError::BadOrder {
        object: format!("order data for {name}"),
        source,
    };
    match (&doc.relation, &doc.covers) {
        (Some(rel), _) => {
            FinitePoset::from_relation(doc.elements.clone(), rel).map_err(wrap)
        }
        (None, Some(covers)) => {
            FinitePoset::from_covers(doc.elements.clone(), covers).map_err(wrap)
        }
        (None, None) => {
            // no pairs at all: an antichain (only valid as a poset or a
            // one-element lattice)
            FinitePoset::from_relation(doc.elements.clone(), &[] as &[(&str, &str)])
                .map_err(wrap)
        }
    }
}

fn build_game(ws: &Workspace, name: &str, doc: &GameDoc) -> Result<NormalFormGame, InterchangeError> {
    let mut strategies = Vec::with_capacity(doc.players.len());
    for p in &doc.players {
        let lattice_name =
            doc.strategies
                .get(p)
                .ok_or_else(|| InterchangeError::MissingProfile {
                    object: name.to_string(),
                    player: p.clone(),
                    profile: "(strategy lattice)".to_string(),
                })?;
        strategies.push(ws.lattice(lattice_name)?);
    }
    // joint ids determine the payoff-key layout
    let joint = crate::lattice::product_labeled(&strategies, '|').map_err(|source| {
        InterchangeError::BadOrder {
            object: format!("game {name}"),
            source,
        }
    })?;
    let mut payoffs = Vec::with_capacity(doc.players.len());
    for p in &doc.players {
        let table = doc
            .payoffs
            .get(p)
            .ok_or_else(|| InterchangeError::MissingProfile {
                object: name.to_string(),
                player: p.clone(),
                profile: "(payoff table)".to_string(),
            })?;
        for key in table.keys() {
            if joint.index_of(key).is_none() {
                return Err(InterchangeError::UnknownProfile {
                    object: name.to_string(),
                    player: p.clone(),
                    profile: key.clone(),
                });
            }
        }
        let mut values = Vec::with_capacity(joint.len());
        for id in joint.ids() {
            match table.get(id) {
                Some(&v) => values.push(v),
                None => {
                    return Err(InterchangeError::MissingProfile {
                        object: name.to_string(),
                        player: p.clone(),
                        profile: id.clone(),
                    })
                }
            }
        }
        payoffs.push(values);
    }
    NormalFormGame::new(doc.players.clone(), strategies, payoffs).map_err(|source| {
        InterchangeError::BadGame {
            object: name.to_string(),
            source: Box::new(source),
        }
    })
}

/// Serializes a lattice as its full relation.
pub fn lattice_to_doc(lattice: &FiniteLattice) -> LatticeDoc {
    let n = lattice.len();
    let mut relation = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if lattice.leq(i, j) {
                relation.push((lattice.id(i).to_string(), lattice.id(j).to_string()));
            }
        }
    }
    LatticeDoc {
        elements: lattice.ids().to_vec(),
        relation: Some(relation),
        covers: None,
    }
}

pub fn poset_to_doc(poset: &FinitePoset) -> LatticeDoc {
    let n = poset.len();
    let mut relation = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if poset.leq(i, j) {
                relation.push((poset.id(i).to_string(), poset.id(j).to_string()));
            }
        }
    }
    LatticeDoc {
        elements: poset.ids().to_vec(),
        relation: Some(relation),
        covers: None,
    }
}

pub fn function_to_doc(f: &LatticeFunction, lattice_name: &str) -> FunctionDoc {
    FunctionDoc {
        lattice: lattice_name.to_string(),
        codomain: CodomainDoc::from_chain(f.codomain()),
        values: f
            .domain()
            .ids()
            .iter()
            .enumerate()
            .map(|(i, id)| (id.clone(), f.value(i)))
            .collect(),
    }
}

pub fn twovar_to_doc(f: &TwoVarFunction, xlattice: &str, tposet: &str) -> TwoVarDoc {
    let mut values = BTreeMap::new();
    for (x, xid) in f.xdomain().ids().iter().enumerate() {
        for (t, tid) in f.tdomain().ids().iter().enumerate() {
            values.insert(format!("{xid}|{tid}"), f.value(x, t));
        }
    }
    TwoVarDoc {
        xlattice: xlattice.to_string(),
        tposet: tposet.to_string(),
        codomain: CodomainDoc::from_chain(f.codomain()),
        values,
    }
}

pub fn game_to_doc(game: &NormalFormGame, strategy_names: &[String]) -> GameDoc {
    let joint = game.joint_lattice();
    let payoffs = game
        .players()
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let table: BTreeMap<String, i64> = joint
                .ids()
                .iter()
                .enumerate()
                .map(|(s, id)| (id.clone(), game.payoff(i, s)))
                .collect();
            (p.clone(), table)
        })
        .collect();
    GameDoc {
        players: game.players().to_vec(),
        strategies: game
            .players()
            .iter()
            .cloned()
            .zip(strategy_names.iter().cloned())
            .collect(),
        payoffs,
    }
}

/// The full built-in registry as one workspace document: the diamond
/// fixtures, the band indicator, the crossing separators, and the named grid
/// games, with their annotations. `grid` overrides the subdivision count of
/// the grid games.
pub fn builtin_workspace(grid: Option<usize>) -> WorkspaceDoc {
    let mut doc = WorkspaceDoc::default();
    let mut note = |name: &str, annotations: &[String]| {
        if !annotations.is_empty() {
            doc.annotations
                .insert(name.to_string(), annotations.to_vec());
        }
    };
    for name in builtins::builtin_function_names() {
        let inst = builtins::builtin_function(name).expect("listed builtin");
        let lattice_name = if name == "band_indicator" {
            "half_chain"
        } else {
            "diamond"
        };
        doc.lattices
            .entry(lattice_name.to_string())
            .or_insert_with(|| lattice_to_doc(inst.function.domain()));
        doc.functions
            .insert(name.to_string(), function_to_doc(&inst.function, lattice_name));
        note(name, &inst.annotations);
    }
    for name in builtins::builtin_twovar_names() {
        let inst = builtins::builtin_twovar(name).expect("listed builtin");
        let xname = format!("{name}_x");
        let tname = format!("{name}_t");
        doc.lattices
            .insert(xname.clone(), lattice_to_doc(inst.function.xdomain()));
        doc.posets
            .insert(tname.clone(), poset_to_doc(inst.function.tdomain()));
        doc.twovar
            .insert(name.to_string(), twovar_to_doc(&inst.function, &xname, &tname));
        note(name, &inst.annotations);
    }
    for family in builtins::builtin_game_families() {
        let inst = builtins::builtin_game(family, grid).expect("listed builtin");
        let strategy_names: Vec<String> = (0..inst.game.players().len())
            .map(|i| {
                let lat = inst.game.strategy_lattice(i);
                let lattice_name = format!("{}_s{}", inst.name, i + 1);
                doc.lattices
                    .insert(lattice_name.clone(), lattice_to_doc(lat));
                lattice_name
            })
            .collect();
        doc.games
            .insert(inst.name.clone(), game_to_doc(&inst.game, &strategy_names));
        note(&inst.name, &inst.annotations);
    }
    doc
}
