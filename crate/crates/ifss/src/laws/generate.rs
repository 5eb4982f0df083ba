//! Deterministic instance generation for the law engine. Everything is
//! driven by a seeded ChaCha stream, so a seed pins the whole instance
//! sequence.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::IFValue;
use crate::relation::{IFSoftRelation, ParamPair};
use crate::softset::{IFSet, IFSoftSet, Universe};

/// Parameter pool shared across generated soft sets, so parameter sets
/// overlap, nest or miss one another.
const PARAM_POOL: [&str; 4] = ["p1", "p2", "p3", "p4"];

pub(crate) struct InstanceGen {
    rng: ChaCha8Rng,
    max_universe: usize,
    max_params: usize,
}

impl InstanceGen {
    pub fn new(seed: u64, max_universe: usize, max_params: usize) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_universe: max_universe.max(1),
            max_params: max_params.max(1),
        }
    }

    pub fn universe(&mut self) -> Arc<Universe> {
        let n = self.rng.random_range(1..=self.max_universe);
        Universe::new((1..=n).map(|i| format!("x{i}"))).unwrap()
    }

    /// `mu` uniform on [0, 1], then `nu` uniform on [0, 1 - mu].
    pub fn ifvalue(&mut self) -> IFValue {
        let mu: f64 = self.rng.random_range(0.0..=1.0);
        let nu: f64 = self.rng.random_range(0.0..=(1.0 - mu));
        IFValue::new(mu, nu).unwrap()
    }

    pub fn ifset(&mut self, universe: &Arc<Universe>) -> IFSet {
        let values = (0..universe.len()).map(|_| self.ifvalue()).collect();
        IFSet::new(Arc::clone(universe), values).unwrap()
    }

    /// A possibly-empty subset of the shared parameter pool.
    pub fn pool_params(&mut self) -> Vec<String> {
        let mut params: Vec<String> = PARAM_POOL
            .iter()
            .filter(|_| self.rng.random_bool(0.5))
            .map(|p| p.to_string())
            .collect();
        params.truncate(self.max_params);
        params
    }

    /// A fresh non-empty parameter set with the given prefix.
    pub fn fresh_params(&mut self, prefix: &str) -> Vec<String> {
        let n = self.rng.random_range(1..=self.max_params);
        (1..=n).map(|i| format!("{prefix}{i}")).collect()
    }

    pub fn soft_set(&mut self, universe: &Arc<Universe>, params: &[String]) -> IFSoftSet {
        let entries: Vec<(String, IFSet)> = params
            .iter()
            .map(|p| (p.clone(), self.ifset(universe)))
            .collect();
        IFSoftSet::new(Arc::clone(universe), entries).unwrap()
    }

    /// A relation with each pair of the full domain kept independently.
    pub fn relation(
        &mut self,
        universe: &Arc<Universe>,
        left: &[String],
        right: &[String],
        density: f64,
    ) -> IFSoftRelation {
        let mut entries = Vec::new();
        for a in left {
            for b in right {
                if self.rng.random_bool(density) {
                    entries.push((ParamPair::new(a.clone(), b.clone()), self.ifset(universe)));
                }
            }
        }
        IFSoftRelation::new(Arc::clone(universe), left.to_vec(), right.to_vec(), entries).unwrap()
    }

    pub fn square_relation(
        &mut self,
        universe: &Arc<Universe>,
        params: &[String],
        density: f64,
    ) -> IFSoftRelation {
        self.relation(universe, params, params, density)
    }

    /// Swap-closed relation: both orders of an unordered pair carry the
    /// same set.
    pub fn symmetric_relation(
        &mut self,
        universe: &Arc<Universe>,
        params: &[String],
        density: f64,
    ) -> IFSoftRelation {
        let mut entries = Vec::new();
        for (i, a) in params.iter().enumerate() {
            for b in &params[i..] {
                if !self.rng.random_bool(density) {
                    continue;
                }
                let set = self.ifset(universe);
                if a == b {
                    entries.push((ParamPair::new(a.clone(), b.clone()), set));
                } else {
                    entries.push((ParamPair::new(a.clone(), b.clone()), set.clone()));
                    entries.push((ParamPair::new(b.clone(), a.clone()), set));
                }
            }
        }
        IFSoftRelation::new(
            Arc::clone(universe),
            params.to_vec(),
            params.to_vec(),
            entries,
        )
        .unwrap()
    }

    /// Full-domain relation built from per-parameter levels:
    /// `R(a, b) = (min(f_a, f_b), max(g_a, g_b))` pointwise. Symmetric by
    /// construction and sup-min transitive, so it feeds the filtered law
    /// families without starving them.
    pub fn level_relation(&mut self, universe: &Arc<Universe>, params: &[String]) -> IFSoftRelation {
        let levels: Vec<Vec<(f64, f64)>> = params
            .iter()
            .map(|_| {
                (0..universe.len())
                    .map(|_| {
                        let v = self.ifvalue();
                        (v.mu(), v.nu())
                    })
                    .collect()
            })
            .collect();
        let mut entries = Vec::new();
        for (i, a) in params.iter().enumerate() {
            for (j, b) in params.iter().enumerate() {
                let values = (0..universe.len())
                    .map(|k| {
                        let (fa, ga) = levels[i][k];
                        let (fb, gb) = levels[j][k];
                        IFValue::new(fa.min(fb), ga.max(gb)).unwrap()
                    })
                    .collect();
                entries.push((
                    ParamPair::new(a.clone(), b.clone()),
                    IFSet::new(Arc::clone(universe), values).unwrap(),
                ));
            }
        }
        IFSoftRelation::new(
            Arc::clone(universe),
            params.to_vec(),
            params.to_vec(),
            entries,
        )
        .unwrap()
    }

    /// Relation whose diagonal values dominate every off-diagonal value.
    pub fn diagonal_dominant_relation(
        &mut self,
        universe: &Arc<Universe>,
        params: &[String],
    ) -> IFSoftRelation {
        let mut entries = Vec::new();
        for a in params {
            let values = (0..universe.len())
                .map(|_| {
                    let mu: f64 = self.rng.random_range(0.6..=1.0);
                    let nu = self.rng.random_range(0.0..=(1.0 - mu).min(0.25));
                    IFValue::new(mu, nu).unwrap()
                })
                .collect();
            entries.push((
                ParamPair::new(a.clone(), a.clone()),
                IFSet::new(Arc::clone(universe), values).unwrap(),
            ));
        }
        for a in params {
            for b in params {
                if a == b || !self.rng.random_bool(0.6) {
                    continue;
                }
                let values = (0..universe.len())
                    .map(|_| {
                        let mu: f64 = self.rng.random_range(0.0..=0.5);
                        let nu = self.rng.random_range(0.3..=(1.0 - mu));
                        IFValue::new(mu, nu).unwrap()
                    })
                    .collect();
                entries.push((
                    ParamPair::new(a.clone(), b.clone()),
                    IFSet::new(Arc::clone(universe), values).unwrap(),
                ));
            }
        }
        IFSoftRelation::new(
            Arc::clone(universe),
            params.to_vec(),
            params.to_vec(),
            entries,
        )
        .unwrap()
    }

    /// A sub-relation: a subset of the domain with values pushed down the
    /// Atanassov order.
    pub fn subrelation(&mut self, relation: &IFSoftRelation) -> IFSoftRelation {
        let mut entries = Vec::new();
        for (pair, set) in relation.iter() {
            if !self.rng.random_bool(0.7) {
                continue;
            }
            let values = set
                .iter()
                .map(|(_, v)| {
                    let mu = self.rng.random_range(0.0..=v.mu());
                    let nu = self.rng.random_range(v.nu()..=(1.0 - mu));
                    IFValue::new(mu, nu).unwrap()
                })
                .collect();
            entries.push((
                pair.clone(),
                IFSet::new(Arc::clone(relation.universe()), values).unwrap(),
            ));
        }
        IFSoftRelation::new(
            Arc::clone(relation.universe()),
            relation.left_params().to_vec(),
            relation.right_params().to_vec(),
            entries,
        )
        .unwrap()
    }
}
