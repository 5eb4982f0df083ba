//! Relation predicates (symmetric, transitive, reflexive, equivalence)
//! and a law-verification engine covering every algebraic claim, with
//! deterministic counterexample search.

mod generate;

use std::num::NonZeroU32;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use serde_json::Value;

use crate::algebra::NormPair;
use crate::error::Error;
use crate::io::{relation_to_value, soft_set_to_value};
use crate::relation::IFSoftRelation;
use crate::softset::IFSoftSet;
use generate::InstanceGen;

/// Stable identifier for every algebraic claim the engine can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LawId {
    UnionCommut,
    IntersectCommut,
    UnionAssoc,
    IntersectAssoc,
    DistribIntersectOverUnion,
    DistribUnionOverIntersect,
    InverseInvolution,
    InverseMonotone,
    InverseOfCompose,
    ComposeClosure,
    SymmetricIffInverseSymmetric,
    SymmetricIffEqualsInverse,
    ComposeSymmetricIffCommute,
    PowerSymmetric,
    TransitiveInverse,
    TransitiveSquare,
    ReflexiveInverse,
    SymTransImpliesRefl,
}

impl LawId {
    pub const ALL: [LawId; 18] = [
        LawId::UnionCommut,
        LawId::IntersectCommut,
        LawId::UnionAssoc,
        LawId::IntersectAssoc,
        LawId::DistribIntersectOverUnion,
        LawId::DistribUnionOverIntersect,
        LawId::InverseInvolution,
        LawId::InverseMonotone,
        LawId::InverseOfCompose,
        LawId::ComposeClosure,
        LawId::SymmetricIffInverseSymmetric,
        LawId::SymmetricIffEqualsInverse,
        LawId::ComposeSymmetricIffCommute,
        LawId::PowerSymmetric,
        LawId::TransitiveInverse,
        LawId::TransitiveSquare,
        LawId::ReflexiveInverse,
        LawId::SymTransImpliesRefl,
    ];

    /// The stable string used on the CLI and in verdict reports.
    pub fn as_str(self) -> &'static str {
        match self {
            LawId::UnionCommut => "union-commut",
            LawId::IntersectCommut => "intersect-commut",
            LawId::UnionAssoc => "union-assoc",
            LawId::IntersectAssoc => "intersect-assoc",
            LawId::DistribIntersectOverUnion => "distrib-intersect-over-union",
            LawId::DistribUnionOverIntersect => "distrib-union-over-intersect",
            LawId::InverseInvolution => "inverse-involution",
            LawId::InverseMonotone => "inverse-monotone",
            LawId::InverseOfCompose => "inverse-of-compose",
            LawId::ComposeClosure => "compose-closure",
            LawId::SymmetricIffInverseSymmetric => "symmetric-iff-inverse-symmetric",
            LawId::SymmetricIffEqualsInverse => "symmetric-iff-equals-inverse",
            LawId::ComposeSymmetricIffCommute => "compose-symmetric-iff-commute",
            LawId::PowerSymmetric => "power-symmetric",
            LawId::TransitiveInverse => "transitive-inverse",
            LawId::TransitiveSquare => "transitive-square",
            LawId::ReflexiveInverse => "reflexive-inverse",
            LawId::SymTransImpliesRefl => "sym-trans-implies-refl",
        }
    }

    /// Laws whose proofs lean on C1/C2 idempotence (or the composition
    /// associativity it buys). They are checked only under min/max; under
    /// the other pairs the verdict records the restriction instead.
    pub fn requires_idempotence(self) -> bool {
        matches!(
            self,
            LawId::ComposeClosure | LawId::TransitiveSquare | LawId::SymTransImpliesRefl
        )
    }
}

impl FromStr for LawId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LawId::ALL
            .iter()
            .copied()
            .find(|law| law.as_str() == s)
            .ok_or_else(|| {
                let known: Vec<&str> = LawId::ALL.iter().map(|l| l.as_str()).collect();
                Error::Invalid(format!("unknown law {s:?}; expected one of {known:?}"))
            })
    }
}

impl Serialize for LawId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// Instance sizes, grid resolution, trial count and seed for a law check.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchConfig {
    /// Grid step for value-level exhaustive checks.
    pub grid_step: f64,
    /// Random (or accepted, for filtered families) instance count.
    pub trials: u64,
    pub seed: u64,
    /// Largest universe generated, at most a handful of elements.
    pub max_universe: usize,
    /// Largest parameter set generated per side.
    pub max_params: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            grid_step: 0.25,
            trials: 1000,
            seed: 0,
            max_universe: 4,
            max_params: 3,
        }
    }
}

impl SearchConfig {
    /// Finer grid for counterexample hunts.
    pub fn hunt() -> Self {
        Self {
            grid_step: 0.1,
            ..Self::default()
        }
    }
}

/// A concrete violating instance: the full inputs and the first pointwise
/// comparison that failed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LawWitness {
    /// Role name -> input document.
    pub inputs: Value,
    /// The violated comparison, spelled out.
    pub violation: String,
}

/// The outcome of checking one law under one norm pair.
///
/// A witness is present exactly when the law does not hold. A restriction
/// note is present when the law is only meaningful under idempotent norms
/// and a non-idempotent pair was requested; such verdicts carry zero
/// trials and are not failures.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LawVerdict {
    pub law: LawId,
    pub norm_pair: NormPair,
    pub holds: bool,
    pub trials: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<LawWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub restriction: Option<String>,
}

impl LawVerdict {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("verdict serializes")
    }
}

/// Result of a single relation predicate, with a human-readable witness
/// when the predicate fails.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub holds: bool,
    pub witness: Option<String>,
}

impl CheckOutcome {
    fn ok() -> Self {
        Self {
            holds: true,
            witness: None,
        }
    }

    fn violated(witness: String) -> Self {
        Self {
            holds: false,
            witness: Some(witness),
        }
    }
}

fn require_square(relation: &IFSoftRelation) -> Result<(), Error> {
    if relation.is_square() {
        Ok(())
    } else {
        Err(Error::ParamMismatch {
            left: relation.left_params().to_vec(),
            right: relation.right_params().to_vec(),
        })
    }
}

/// `R(a, b) = R(b, a)` for every domain pair, the domain itself being
/// closed under swapping.
pub fn is_symmetric(relation: &IFSoftRelation) -> Result<CheckOutcome, Error> {
    require_square(relation)?;
    for (pair, set) in relation.iter() {
        match relation.get(&pair.second, &pair.first) {
            None => {
                return Ok(CheckOutcome::violated(format!(
                    "({}, {}) is in the domain but ({}, {}) is not",
                    pair.first, pair.second, pair.second, pair.first
                )))
            }
            Some(swapped) => {
                if !set.approx_eq(swapped) {
                    return Ok(CheckOutcome::violated(format!(
                        "R({}, {}) differs from R({}, {})",
                        pair.first, pair.second, pair.second, pair.first
                    )));
                }
            }
        }
    }
    Ok(CheckOutcome::ok())
}

/// `R ∘ R ⊆ R`: every composed pair stays inside the domain with values
/// below the original.
pub fn is_transitive(pair: NormPair, relation: &IFSoftRelation) -> Result<CheckOutcome, Error> {
    require_square(relation)?;
    let squared = relation.compose(relation, pair)?;
    for (composed, set) in squared.iter() {
        match relation.get(&composed.first, &composed.second) {
            None => {
                return Ok(CheckOutcome::violated(format!(
                    "compose(R, R) reaches ({}, {}) outside the domain",
                    composed.first, composed.second
                )))
            }
            Some(bound) => {
                if !set.leq(bound)? {
                    return Ok(CheckOutcome::violated(format!(
                        "compose(R, R)({}, {}) is not below R({}, {})",
                        composed.first, composed.second, composed.first, composed.second
                    )));
                }
            }
        }
    }
    Ok(CheckOutcome::ok())
}

/// Every parameter occurring in the domain carries its diagonal pair, and
/// every off-diagonal value sits below both end diagonals.
///
/// The quantification runs over pairs present in the domain. Checking the
/// off-diagonal value against *both* diagonals keeps the check symmetric
/// under swapping, so reflexivity survives inversion even on one-sided
/// domains.
pub fn is_reflexive(relation: &IFSoftRelation) -> Result<CheckOutcome, Error> {
    require_square(relation)?;
    for (pair, _) in relation.iter() {
        for param in [&pair.first, &pair.second] {
            if relation.get(param, param).is_none() {
                return Ok(CheckOutcome::violated(format!(
                    "{param:?} occurs in the domain but ({param}, {param}) is missing"
                )));
            }
        }
    }
    for (pair, set) in relation.iter() {
        if pair.first == pair.second {
            continue;
        }
        for param in [&pair.first, &pair.second] {
            let diagonal = relation.get(param, param).expect("checked above");
            if !set.leq(diagonal)? {
                return Ok(CheckOutcome::violated(format!(
                    "R({}, {}) is not below R({param}, {param})",
                    pair.first, pair.second
                )));
            }
        }
    }
    Ok(CheckOutcome::ok())
}

/// Symmetric, transitive and reflexive at once.
pub fn is_equivalence(pair: NormPair, relation: &IFSoftRelation) -> Result<CheckOutcome, Error> {
    for outcome in [
        is_symmetric(relation)?,
        is_transitive(pair, relation)?,
        is_reflexive(relation)?,
    ] {
        if !outcome.holds {
            return Ok(outcome);
        }
    }
    Ok(CheckOutcome::ok())
}

/// Checks one law under one norm pair. Deterministic given the seed: the
/// same config always yields the same verdict, including the witness,
/// which is the first violation in canonical instance order.
pub fn check_law(law: LawId, pair: NormPair, config: &SearchConfig) -> LawVerdict {
    if law.requires_idempotence() && !pair.is_idempotent() {
        return LawVerdict {
            law,
            norm_pair: pair,
            holds: true,
            trials: 0,
            witness: None,
            restriction: Some(
                "law relies on C1/C2 idempotence; checked only under minmax".to_string(),
            ),
        };
    }
    let (trials, witness) = run_law(law, pair, config);
    LawVerdict {
        law,
        norm_pair: pair,
        holds: witness.is_none(),
        trials,
        witness,
        restriction: None,
    }
}

/// The first violating instance in canonical order, or `None` when the
/// configured resolution finds nothing.
pub fn search_counterexample(
    law: LawId,
    pair: NormPair,
    config: &SearchConfig,
) -> Option<LawWitness> {
    check_law(law, pair, config).witness
}

fn run_law(law: LawId, pair: NormPair, config: &SearchConfig) -> (u64, Option<LawWitness>) {
    match law {
        LawId::DistribIntersectOverUnion | LawId::DistribUnionOverIntersect => {
            grid_distributivity(law, pair, config)
        }
        LawId::UnionCommut | LawId::IntersectCommut => soft_commutativity(law, pair, config),
        LawId::UnionAssoc | LawId::IntersectAssoc => soft_associativity(law, pair, config),
        LawId::InverseInvolution => inverse_involution(pair, config),
        LawId::InverseMonotone => inverse_monotone(pair, config),
        LawId::InverseOfCompose => inverse_of_compose(pair, config),
        LawId::ComposeClosure => compose_closure(pair, config),
        LawId::SymmetricIffInverseSymmetric | LawId::SymmetricIffEqualsInverse => {
            symmetry_iff(law, pair, config)
        }
        LawId::ComposeSymmetricIffCommute => compose_symmetric_iff_commute(pair, config),
        LawId::PowerSymmetric => power_symmetric(pair, config),
        LawId::TransitiveInverse | LawId::TransitiveSquare => transitive_family(law, pair, config),
        LawId::ReflexiveInverse => reflexive_inverse(pair, config),
        LawId::SymTransImpliesRefl => sym_trans_implies_refl(pair, config),
    }
}

// ---- witness plumbing -------------------------------------------------

fn soft_witness(roles: &[(&str, &IFSoftSet)], violation: String) -> LawWitness {
    let mut inputs = serde_json::Map::new();
    for (role, set) in roles {
        inputs.insert(role.to_string(), soft_set_to_value(set));
    }
    LawWitness {
        inputs: Value::Object(inputs),
        violation,
    }
}

fn relation_witness(roles: &[(&str, &IFSoftRelation)], violation: String) -> LawWitness {
    let mut inputs = serde_json::Map::new();
    for (role, relation) in roles {
        inputs.insert(role.to_string(), relation_to_value(relation));
    }
    LawWitness {
        inputs: Value::Object(inputs),
        violation,
    }
}

/// First pointwise difference between two soft sets that were expected to
/// be equal.
fn describe_soft_mismatch(label: &str, lhs: &IFSoftSet, rhs: &IFSoftSet) -> String {
    if lhs.parameters().len() != rhs.parameters().len()
        || lhs.iter().any(|(p, _)| rhs.get(p).is_none())
    {
        return format!(
            "{label}: parameter sets differ ({:?} vs {:?})",
            lhs.parameters(),
            rhs.parameters()
        );
    }
    for (param, set) in lhs.iter() {
        let other = rhs.get(param).expect("same parameters");
        for (element, v) in set.iter() {
            let w = other.value(element).expect("same universe");
            if !v.approx_eq(w) {
                return format!(
                    "{label}: at parameter {param:?}, element {element:?}: ({}, {}) vs ({}, {})",
                    v.mu(),
                    v.nu(),
                    w.mu(),
                    w.nu()
                );
            }
        }
    }
    format!("{label}: sides differ")
}

fn describe_relation_mismatch(label: &str, lhs: &IFSoftRelation, rhs: &IFSoftRelation) -> String {
    if lhs.len() != rhs.len() || lhs.domain().any(|p| !rhs.contains_pair(p)) {
        return format!(
            "{label}: domains differ ({:?} vs {:?})",
            lhs.domain().collect::<Vec<_>>(),
            rhs.domain().collect::<Vec<_>>()
        );
    }
    for (pair, set) in lhs.iter() {
        let other = rhs.get(&pair.first, &pair.second).expect("same domain");
        for (element, v) in set.iter() {
            let w = other.value(element).expect("same universe");
            if !v.approx_eq(w) {
                return format!(
                    "{label}: at pair ({}, {}), element {element:?}: ({}, {}) vs ({}, {})",
                    pair.first,
                    pair.second,
                    v.mu(),
                    v.nu(),
                    w.mu(),
                    w.nu()
                );
            }
        }
    }
    format!("{label}: sides differ")
}

// ---- grid-backed laws -------------------------------------------------

fn grid_points(step: f64) -> Vec<f64> {
    let n = (1.0 / step).round().max(1.0) as usize;
    (0..=n).map(|i| (i as f64 * step).min(1.0)).collect()
}

fn constrained_grid(step: f64) -> Vec<crate::algebra::IFValue> {
    let points = grid_points(step);
    let mut values = Vec::new();
    for &mu in &points {
        for &nu in &points {
            if mu + nu <= 1.0 + 1e-12 {
                values.push(crate::algebra::IFValue::new(mu, nu).unwrap());
            }
        }
    }
    values
}

/// Exhaustive sweep of one distributive identity on single-element,
/// single-parameter soft sets: the value algebra is where the law lives,
/// the parameter-set algebra being exact set identity.
fn grid_distributivity(
    law: LawId,
    pair: NormPair,
    config: &SearchConfig,
) -> (u64, Option<LawWitness>) {
    let values = constrained_grid(config.grid_step);
    let mut trials = 0;
    for &a in &values {
        for &b in &values {
            for &c in &values {
                trials += 1;
                let (lhs, rhs) = match law {
                    LawId::DistribIntersectOverUnion => (
                        a.meet(b.join(c, pair), pair),
                        a.meet(b, pair).join(a.meet(c, pair), pair),
                    ),
                    LawId::DistribUnionOverIntersect => (
                        a.join(b.meet(c, pair), pair),
                        a.join(b, pair).meet(a.join(c, pair), pair),
                    ),
                    _ => unreachable!("grid dispatch"),
                };
                if !lhs.approx_eq(rhs) {
                    let universe = crate::softset::Universe::new(["x"]).unwrap();
                    let single = |v: crate::algebra::IFValue| {
                        IFSoftSet::new(
                            std::sync::Arc::clone(&universe),
                            [(
                                "e",
                                crate::softset::IFSet::new(
                                    std::sync::Arc::clone(&universe),
                                    vec![v],
                                )
                                .unwrap(),
                            )],
                        )
                        .unwrap()
                    };
                    let (fa, ga, ha) = (single(a), single(b), single(c));
                    let violation = format!(
                        "{}: lhs ({}, {}) vs rhs ({}, {}) at parameter \"e\", element \"x\"",
                        law.as_str(),
                        lhs.mu(),
                        lhs.nu(),
                        rhs.mu(),
                        rhs.nu()
                    );
                    return (
                        trials,
                        Some(soft_witness(
                            &[("f", &fa), ("g", &ga), ("h", &ha)],
                            violation,
                        )),
                    );
                }
            }
        }
    }
    (trials, None)
}

// ---- randomized soft-set laws ------------------------------------------

fn soft_commutativity(
    law: LawId,
    pair: NormPair,
    config: &SearchConfig,
) -> (u64, Option<LawWitness>) {
    let mut gen = InstanceGen::new(config.seed, config.max_universe, config.max_params);
    for trial in 0..config.trials {
        let universe = gen.universe();
        let params_x = gen.pool_params();
        let x = gen.soft_set(&universe, &params_x);
        let params_y = gen.pool_params();
        let y = gen.soft_set(&universe, &params_y);
        let (lhs, rhs) = match law {
            LawId::UnionCommut => (x.union(&y, pair), y.union(&x, pair)),
            LawId::IntersectCommut => (x.intersection(&y, pair), y.intersection(&x, pair)),
            _ => unreachable!(),
        };
        let (lhs, rhs) = (lhs.expect("same universe"), rhs.expect("same universe"));
        if !lhs.approx_eq(&rhs) {
            let violation = describe_soft_mismatch(law.as_str(), &lhs, &rhs);
            return (
                trial + 1,
                Some(soft_witness(&[("left", &x), ("right", &y)], violation)),
            );
        }
    }
    (config.trials, None)
}

fn soft_associativity(
    law: LawId,
    pair: NormPair,
    config: &SearchConfig,
) -> (u64, Option<LawWitness>) {
    let mut gen = InstanceGen::new(config.seed, config.max_universe, config.max_params);
    for trial in 0..config.trials {
        let universe = gen.universe();
        let params_x = gen.pool_params();
        let x = gen.soft_set(&universe, &params_x);
        let params_y = gen.pool_params();
        let y = gen.soft_set(&universe, &params_y);
        let params_z = gen.pool_params();
        let z = gen.soft_set(&universe, &params_z);
        let (lhs, rhs) = match law {
            LawId::UnionAssoc => (
                x.union(&y.union(&z, pair).expect("same universe"), pair),
                x.union(&y, pair).expect("same universe").union(&z, pair),
            ),
            LawId::IntersectAssoc => (
                x.intersection(&y.intersection(&z, pair).expect("same universe"), pair),
                x.intersection(&y, pair)
                    .expect("same universe")
                    .intersection(&z, pair),
            ),
            _ => unreachable!(),
        };
        let (lhs, rhs) = (lhs.expect("same universe"), rhs.expect("same universe"));
        if !lhs.approx_eq(&rhs) {
            let violation = describe_soft_mismatch(law.as_str(), &lhs, &rhs);
            return (
                trial + 1,
                Some(soft_witness(
                    &[("left", &x), ("middle", &y), ("right", &z)],
                    violation,
                )),
            );
        }
    }
    (config.trials, None)
}

// ---- relation laws ------------------------------------------------------

fn inverse_involution(_pair: NormPair, config: &SearchConfig) -> (u64, Option<LawWitness>) {
    let mut gen = InstanceGen::new(config.seed, config.max_universe, config.max_params);
    for trial in 0..config.trials {
        let universe = gen.universe();
        let left = gen.fresh_params("a");
        let right = gen.fresh_params("b");
        let relation = gen.relation(&universe, &left, &right, 0.7);
        let back = relation.inverse().inverse();
        if !back.exact_eq(&relation) {
            let violation =
                describe_relation_mismatch("inverse-involution", &back, &relation);
            return (
                trial + 1,
                Some(relation_witness(&[("relation", &relation)], violation)),
            );
        }
    }
    (config.trials, None)
}

fn inverse_monotone(_pair: NormPair, config: &SearchConfig) -> (u64, Option<LawWitness>) {
    let mut gen = InstanceGen::new(config.seed, config.max_universe, config.max_params);
    for trial in 0..config.trials {
        let universe = gen.universe();
        let left = gen.fresh_params("a");
        let right = gen.fresh_params("b");
        let outer = gen.relation(&universe, &left, &right, 0.8);
        let inner = gen.subrelation(&outer);
        debug_assert!(inner.is_subset_of(&outer));
        if !inner.inverse().is_subset_of(&outer.inverse()) {
            return (
                trial + 1,
                Some(relation_witness(
                    &[("inner", &inner), ("outer", &outer)],
                    "inverse-monotone: inner is a subset of outer but the inverses are not"
                        .to_string(),
                )),
            );
        }
    }
    (config.trials, None)
}

fn inverse_of_compose(pair: NormPair, config: &SearchConfig) -> (u64, Option<LawWitness>) {
    let mut gen = InstanceGen::new(config.seed, config.max_universe, config.max_params);
    for trial in 0..config.trials {
        let universe = gen.universe();
        let a = gen.fresh_params("a");
        let b = gen.fresh_params("b");
        let c = gen.fresh_params("c");
        let r1 = gen.relation(&universe, &a, &b, 0.7);
        let r2 = gen.relation(&universe, &b, &c, 0.7);
        let lhs = r1.compose(&r2, pair).expect("aligned params").inverse();
        let rhs = r2
            .inverse()
            .compose(&r1.inverse(), pair)
            .expect("aligned params");
        if !lhs.approx_eq(&rhs) {
            let violation = describe_relation_mismatch("inverse-of-compose", &lhs, &rhs);
            return (
                trial + 1,
                Some(relation_witness(&[("r1", &r1), ("r2", &r2)], violation)),
            );
        }
    }
    (config.trials, None)
}

/// Closure theorem: composing two full cartesian products stays inside the
/// cartesian product of the outer soft sets.
fn compose_closure(pair: NormPair, config: &SearchConfig) -> (u64, Option<LawWitness>) {
    let mut gen = InstanceGen::new(config.seed, config.max_universe, config.max_params);
    for trial in 0..config.trials {
        let universe = gen.universe();
        let params_f = gen.fresh_params("a");
        let f = gen.soft_set(&universe, &params_f);
        let params_g = gen.fresh_params("b");
        let g = gen.soft_set(&universe, &params_g);
        let params_h = gen.fresh_params("c");
        let h = gen.soft_set(&universe, &params_h);
        let r1 = f.cartesian_product(&g, pair).expect("same universe");
        let r2 = g.cartesian_product(&h, pair).expect("same universe");
        let composed = r1.compose(&r2, pair).expect("aligned params");
        let bound = f.cartesian_product(&h, pair).expect("same universe");
        if !composed.is_subset_of(&bound) {
            return (
                trial + 1,
                Some(soft_witness(
                    &[("f", &f), ("g", &g), ("h", &h)],
                    "compose-closure: compose(FxG, GxH) escapes FxH".to_string(),
                )),
            );
        }
    }
    (config.trials, None)
}

fn symmetry_iff(law: LawId, _pair: NormPair, config: &SearchConfig) -> (u64, Option<LawWitness>) {
    let mut gen = InstanceGen::new(config.seed, config.max_universe, config.max_params);
    for trial in 0..config.trials {
        let universe = gen.universe();
        let params = gen.fresh_params("a");
        // Alternate symmetrized and raw square relations so both sides of
        // the iff get exercised.
        let relation = if trial % 2 == 0 {
            gen.symmetric_relation(&universe, &params, 0.7)
        } else {
            gen.square_relation(&universe, &params, 0.7)
        };
        let symmetric = is_symmetric(&relation).expect("square").holds;
        let other = match law {
            LawId::SymmetricIffInverseSymmetric => {
                is_symmetric(&relation.inverse()).expect("square").holds
            }
            LawId::SymmetricIffEqualsInverse => relation.approx_eq(&relation.inverse()),
            _ => unreachable!(),
        };
        if symmetric != other {
            return (
                trial + 1,
                Some(relation_witness(
                    &[("relation", &relation)],
                    format!(
                        "{}: is_symmetric = {symmetric} but the equivalent condition = {other}",
                        law.as_str()
                    ),
                )),
            );
        }
    }
    (config.trials, None)
}

fn compose_symmetric_iff_commute(
    pair: NormPair,
    config: &SearchConfig,
) -> (u64, Option<LawWitness>) {
    let mut gen = InstanceGen::new(config.seed, config.max_universe, config.max_params);
    for trial in 0..config.trials {
        let universe = gen.universe();
        let params = gen.fresh_params("a");
        let r1 = gen.symmetric_relation(&universe, &params, 0.7);
        let r2 = gen.symmetric_relation(&universe, &params, 0.7);
        let c12 = r1.compose(&r2, pair).expect("aligned params");
        let c21 = r2.compose(&r1, pair).expect("aligned params");
        let symmetric = is_symmetric(&c12).expect("square").holds;
        let commute = c12.approx_eq(&c21);
        if symmetric != commute {
            return (
                trial + 1,
                Some(relation_witness(
                    &[("r1", &r1), ("r2", &r2)],
                    format!(
                        "compose-symmetric-iff-commute: symmetric = {symmetric}, commute = {commute}"
                    ),
                )),
            );
        }
    }
    (config.trials, None)
}

fn power_symmetric(pair: NormPair, config: &SearchConfig) -> (u64, Option<LawWitness>) {
    let mut gen = InstanceGen::new(config.seed, config.max_universe, config.max_params);
    for trial in 0..config.trials {
        let universe = gen.universe();
        let params = gen.fresh_params("a");
        let relation = gen.symmetric_relation(&universe, &params, 0.7);
        for n in 2..=4u32 {
            let power = relation
                .power(pair, NonZeroU32::new(n).unwrap())
                .expect("square");
            if !is_symmetric(&power).expect("square").holds {
                return (
                    trial + 1,
                    Some(relation_witness(
                        &[("relation", &relation)],
                        format!("power-symmetric: R is symmetric but R^{n} is not"),
                    )),
                );
            }
        }
    }
    (config.trials, None)
}

/// Cap on candidates per accepted instance for the filtered families.
const FILTER_CANDIDATE_FACTOR: u64 = 500;

fn transitive_family(
    law: LawId,
    pair: NormPair,
    config: &SearchConfig,
) -> (u64, Option<LawWitness>) {
    let mut gen = InstanceGen::new(config.seed, config.max_universe, config.max_params);
    let mut accepted = 0;
    let mut candidates = 0;
    let cap = config.trials.saturating_mul(FILTER_CANDIDATE_FACTOR);
    while accepted < config.trials && candidates < cap {
        candidates += 1;
        let universe = gen.universe();
        let params = gen.fresh_params("a");
        // Level-structured instances keep the accepted family well fed;
        // plain random squares contribute irregular domains.
        let relation = match candidates % 3 {
            0 => gen.level_relation(&universe, &params),
            1 => gen.square_relation(&universe, &params, 0.7),
            _ => gen.square_relation(&universe, &params, 0.4),
        };
        if !is_transitive(pair, &relation).expect("square").holds {
            continue;
        }
        accepted += 1;
        let (ok, what) = match law {
            LawId::TransitiveInverse => (
                is_transitive(pair, &relation.inverse()).expect("square").holds,
                "the inverse",
            ),
            LawId::TransitiveSquare => (
                is_transitive(pair, &relation.compose(&relation, pair).expect("square"))
                    .expect("square")
                    .holds,
                "compose(R, R)",
            ),
            _ => unreachable!(),
        };
        if !ok {
            return (
                accepted,
                Some(relation_witness(
                    &[("relation", &relation)],
                    format!("{}: R is transitive but {what} is not", law.as_str()),
                )),
            );
        }
    }
    (accepted, None)
}

fn reflexive_inverse(_pair: NormPair, config: &SearchConfig) -> (u64, Option<LawWitness>) {
    let mut gen = InstanceGen::new(config.seed, config.max_universe, config.max_params);
    let mut accepted = 0;
    let mut candidates = 0;
    let cap = config.trials.saturating_mul(FILTER_CANDIDATE_FACTOR);
    while accepted < config.trials && candidates < cap {
        candidates += 1;
        let universe = gen.universe();
        let params = gen.fresh_params("a");
        let relation = if candidates % 3 == 0 {
            gen.square_relation(&universe, &params, 0.6)
        } else {
            gen.diagonal_dominant_relation(&universe, &params)
        };
        if !is_reflexive(&relation).expect("square").holds {
            continue;
        }
        accepted += 1;
        if !is_reflexive(&relation.inverse()).expect("square").holds {
            return (
                accepted,
                Some(relation_witness(
                    &[("relation", &relation)],
                    "reflexive-inverse: R is reflexive but the inverse is not".to_string(),
                )),
            );
        }
    }
    (accepted, None)
}

fn sym_trans_implies_refl(pair: NormPair, config: &SearchConfig) -> (u64, Option<LawWitness>) {
    let mut gen = InstanceGen::new(config.seed, config.max_universe, config.max_params);
    let mut accepted = 0;
    let mut candidates = 0;
    let cap = config.trials.saturating_mul(FILTER_CANDIDATE_FACTOR);
    while accepted < config.trials && candidates < cap {
        candidates += 1;
        let universe = gen.universe();
        let params = gen.fresh_params("a");
        let relation = if candidates % 3 == 0 {
            gen.level_relation(&universe, &params)
        } else {
            gen.symmetric_relation(&universe, &params, 0.7)
        };
        // Accepted instances must be found symmetric and transitive, with
        // at least one witnessed off-diagonal path so the claim is not
        // vacuous.
        let has_off_diagonal = relation.domain().any(|p| p.first != p.second);
        if !has_off_diagonal
            || !is_symmetric(&relation).expect("square").holds
            || !is_transitive(pair, &relation).expect("square").holds
        {
            continue;
        }
        accepted += 1;
        if !is_reflexive(&relation).expect("square").holds {
            return (
                accepted,
                Some(relation_witness(
                    &[("relation", &relation)],
                    "sym-trans-implies-refl: R is symmetric and transitive but not reflexive"
                        .to_string(),
                )),
            );
        }
    }
    (accepted, None)
}
