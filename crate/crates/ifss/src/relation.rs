//! Cartesian products of soft sets, soft relations, inverse, composition
//! and relation powers.

use std::collections::BTreeSet;
use std::num::NonZeroU32;
use std::sync::Arc;

use crate::algebra::NormPair;
use crate::error::Error;
use crate::softset::{IFSet, IFSoftSet, Universe};

/// An ordered pair of parameters, the index of a relation entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamPair {
    pub first: String,
    pub second: String,
}

impl ParamPair {
    pub fn new(first: impl Into<String>, second: impl Into<String>) -> Self {
        Self {
            first: first.into(),
            second: second.into(),
        }
    }

    pub fn swapped(&self) -> ParamPair {
        ParamPair::new(self.second.clone(), self.first.clone())
    }
}

/// The pair `(R, C)`: a domain `C ⊆ A × B` of parameter pairs, each
/// carrying an intuitionistic fuzzy subset of the universe.
///
/// Relations may exist detached from the soft sets that generated them;
/// containment in a cartesian product is guaranteed by construction only
/// for [`IFSoftSet::cartesian_product`] and [`IFSoftRelation::restrict`].
#[derive(Debug, Clone, PartialEq)]
pub struct IFSoftRelation {
    universe: Arc<Universe>,
    left_params: Vec<String>,
    right_params: Vec<String>,
    entries: Vec<(ParamPair, IFSet)>,
}

fn check_distinct(params: &[String], side: &str) -> Result<(), Error> {
    let mut seen = BTreeSet::new();
    for p in params {
        if !seen.insert(p.as_str()) {
            return Err(Error::Invalid(format!(
                "duplicate {side} parameter {p:?}"
            )));
        }
    }
    Ok(())
}

fn same_param_set(left: &[String], right: &[String]) -> bool {
    left.len() == right.len()
        && left.iter().collect::<BTreeSet<_>>() == right.iter().collect::<BTreeSet<_>>()
}

impl IFSoftRelation {
    pub fn new<I>(
        universe: Arc<Universe>,
        left_params: Vec<String>,
        right_params: Vec<String>,
        entries: I,
    ) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (ParamPair, IFSet)>,
    {
        check_distinct(&left_params, "left")?;
        check_distinct(&right_params, "right")?;
        let mut collected: Vec<(ParamPair, IFSet)> = Vec::new();
        let mut seen = BTreeSet::new();
        for (pair, set) in entries {
            if !left_params.contains(&pair.first) || !right_params.contains(&pair.second) {
                return Err(Error::Domain {
                    first: pair.first,
                    second: pair.second,
                });
            }
            if !seen.insert(pair.clone()) {
                return Err(Error::Invalid(format!(
                    "duplicate pair ({}, {})",
                    pair.first, pair.second
                )));
            }
            if !set.universe().same_elements(&universe) {
                return Err(Error::UniverseMismatch {
                    left: universe.elements().to_vec(),
                    right: set.universe().elements().to_vec(),
                });
            }
            collected.push((pair, set));
        }
        let mut relation = Self {
            universe,
            left_params,
            right_params,
            entries: collected,
        };
        relation.sort_entries();
        Ok(relation)
    }

    /// A relation with an empty domain.
    pub fn empty(
        universe: Arc<Universe>,
        left_params: Vec<String>,
        right_params: Vec<String>,
    ) -> Result<Self, Error> {
        Self::new(universe, left_params, right_params, [])
    }

    // Canonical entry order: by (left index, right index) of the pair.
    fn sort_entries(&mut self) {
        let index = |params: &[String], id: &str| params.iter().position(|p| p == id).unwrap();
        self.entries.sort_by_key(|(pair, _)| {
            (
                index(&self.left_params, &pair.first),
                index(&self.right_params, &pair.second),
            )
        });
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn left_params(&self) -> &[String] {
        &self.left_params
    }

    pub fn right_params(&self) -> &[String] {
        &self.right_params
    }

    /// Domain pairs in canonical order.
    pub fn domain(&self) -> impl Iterator<Item = &ParamPair> {
        self.entries.iter().map(|(pair, _)| pair)
    }

    /// `(pair, set)` entries in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&ParamPair, &IFSet)> {
        self.entries.iter().map(|(pair, set)| (pair, set))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, first: &str, second: &str) -> Option<&IFSet> {
        self.entries
            .iter()
            .find(|(pair, _)| pair.first == first && pair.second == second)
            .map(|(_, set)| set)
    }

    pub fn contains_pair(&self, pair: &ParamPair) -> bool {
        self.get(&pair.first, &pair.second).is_some()
    }

    /// True when the left and right parameter sets coincide.
    pub fn is_square(&self) -> bool {
        same_param_set(&self.left_params, &self.right_params)
    }

    /// The relation restricted to `keep`, which must lie inside the domain.
    /// Restricting a cartesian product is how relations in the strict sense
    /// are carved out of it.
    pub fn restrict(&self, keep: &[ParamPair]) -> Result<IFSoftRelation, Error> {
        let mut entries = Vec::new();
        for pair in keep {
            match self.get(&pair.first, &pair.second) {
                Some(set) => entries.push((pair.clone(), set.clone())),
                None => {
                    return Err(Error::Domain {
                        first: pair.first.clone(),
                        second: pair.second.clone(),
                    })
                }
            }
        }
        IFSoftRelation::new(
            Arc::clone(&self.universe),
            self.left_params.clone(),
            self.right_params.clone(),
            entries,
        )
    }

    /// The inverse relation: `R⁻¹(a, b) = R(b, a)`, with the parameter
    /// sides swapped. Pure relabeling, so no tolerance is involved.
    pub fn inverse(&self) -> IFSoftRelation {
        let entries = self
            .entries
            .iter()
            .map(|(pair, set)| (pair.swapped(), set.clone()))
            .collect::<Vec<_>>();
        let mut relation = IFSoftRelation {
            universe: Arc::clone(&self.universe),
            left_params: self.right_params.clone(),
            right_params: self.left_params.clone(),
            entries,
        };
        relation.sort_entries();
        relation
    }

    /// Composition `R₁ ∘ R₂` through the shared middle parameter set.
    ///
    /// A pair `(a, c)` enters the domain when at least one witness `b`
    /// exists with `(a, b) ∈ C₁` and `(b, c) ∈ C₂`. Its value meets the
    /// two relation values per witness and aggregates across witnesses
    /// with the join rule (`mu` under the t-conorm, `nu` under the
    /// t-norm), which reduces to classical sup-min composition under
    /// min/max and to the single meet whenever the witness is unique.
    pub fn compose(
        &self,
        other: &IFSoftRelation,
        pair: NormPair,
    ) -> Result<IFSoftRelation, Error> {
        if !self.universe.same_elements(&other.universe) {
            return Err(Error::UniverseMismatch {
                left: self.universe.elements().to_vec(),
                right: other.universe.elements().to_vec(),
            });
        }
        if !same_param_set(&self.right_params, &other.left_params) {
            return Err(Error::ParamMismatch {
                left: self.right_params.clone(),
                right: other.left_params.clone(),
            });
        }
        let mut entries = Vec::new();
        for a in &self.left_params {
            for c in &other.right_params {
                // Witnesses folded in this relation's middle-parameter order.
                let mut acc: Option<IFSet> = None;
                for b in &self.right_params {
                    let (Some(r1), Some(r2)) = (self.get(a, b), other.get(b, c)) else {
                        continue;
                    };
                    let term = r1.meet(r2, pair)?;
                    acc = Some(match acc {
                        None => term,
                        Some(sum) => sum.join(&term, pair)?,
                    });
                }
                if let Some(set) = acc {
                    entries.push((ParamPair::new(a.clone(), c.clone()), set));
                }
            }
        }
        IFSoftRelation::new(
            Arc::clone(&self.universe),
            self.left_params.clone(),
            other.right_params.clone(),
            entries,
        )
    }

    /// Left-associated n-fold composition of a square relation with itself.
    pub fn power(&self, pair: NormPair, n: NonZeroU32) -> Result<IFSoftRelation, Error> {
        if !self.is_square() {
            return Err(Error::ParamMismatch {
                left: self.left_params.clone(),
                right: self.right_params.clone(),
            });
        }
        let mut result = self.clone();
        for _ in 1..n.get() {
            result = result.compose(self, pair)?;
        }
        Ok(result)
    }

    /// Domain containment plus the pointwise Atanassov order on every
    /// shared pair. Relations over different universes are never subsets.
    pub fn is_subset_of(&self, outer: &IFSoftRelation) -> bool {
        if !self.universe.same_elements(&outer.universe) {
            return false;
        }
        self.iter().all(|(pair, set)| {
            outer
                .get(&pair.first, &pair.second)
                .is_some_and(|outer_set| set.leq(outer_set).unwrap_or(false))
        })
    }

    /// Same domain and values equal within the comparison tolerance.
    pub fn approx_eq(&self, other: &IFSoftRelation) -> bool {
        if !self.universe.same_elements(&other.universe) || self.len() != other.len() {
            return false;
        }
        self.iter().all(|(pair, set)| {
            other
                .get(&pair.first, &pair.second)
                .is_some_and(|other_set| set.approx_eq(other_set))
        })
    }

    /// Exact structural equality: same domain, bitwise-identical values.
    pub fn exact_eq(&self, other: &IFSoftRelation) -> bool {
        if !self.universe.same_elements(&other.universe) || self.len() != other.len() {
            return false;
        }
        self.iter().all(|(pair, set)| {
            other
                .get(&pair.first, &pair.second)
                .is_some_and(|other_set| {
                    set.iter()
                        .all(|(id, v)| other_set.value(id) == Some(v))
                })
        })
    }
}

impl IFSoftSet {
    /// The cartesian product `(F, A) × (G, B)`: the full domain `A × B`
    /// with value `F(a) ∩̃ G(b)` at each pair.
    pub fn cartesian_product(
        &self,
        other: &IFSoftSet,
        pair: NormPair,
    ) -> Result<IFSoftRelation, Error> {
        if !self.universe().same_elements(other.universe()) {
            return Err(Error::UniverseMismatch {
                left: self.universe().elements().to_vec(),
                right: other.universe().elements().to_vec(),
            });
        }
        let mut entries = Vec::new();
        for (a, f_set) in self.iter() {
            for (b, g_set) in other.iter() {
                entries.push((ParamPair::new(a, b), f_set.meet(g_set, pair)?));
            }
        }
        IFSoftRelation::new(
            Arc::clone(self.universe()),
            self.parameters().to_vec(),
            other.parameters().to_vec(),
            entries,
        )
    }
}
