//! Intuitionistic fuzzy soft sets over a finite universe: intersection,
//! union, subset and equality.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::algebra::{IFValue, NormPair};
use crate::error::Error;

/// The finite universe of discourse. Element order is fixed at construction
/// and drives serialization; equality between universes goes by identifier
/// set, not by order or reference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    elements: Vec<String>,
}

impl Universe {
    pub fn new<I, S>(elements: I) -> Result<Arc<Self>, Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        if elements.is_empty() {
            return Err(Error::Invalid("universe must not be empty".into()));
        }
        let mut seen = BTreeSet::new();
        for id in &elements {
            if !seen.insert(id.as_str()) {
                return Err(Error::Invalid(format!("duplicate universe element {id:?}")));
            }
        }
        Ok(Arc::new(Self { elements }))
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == id)
    }

    /// Equality by identifier set, ignoring order.
    pub fn same_elements(&self, other: &Universe) -> bool {
        self.elements.len() == other.elements.len()
            && self
                .elements
                .iter()
                .collect::<BTreeSet<_>>()
                .eq(&other.elements.iter().collect())
    }
}

fn universe_mismatch(left: &Universe, right: &Universe) -> Error {
    Error::UniverseMismatch {
        left: left.elements.clone(),
        right: right.elements.clone(),
    }
}

/// An intuitionistic fuzzy subset of a universe: exactly one [`IFValue`]
/// per element.
#[derive(Debug, Clone, PartialEq)]
pub struct IFSet {
    universe: Arc<Universe>,
    values: Vec<IFValue>,
}

impl IFSet {
    /// Builds a set from values aligned with the universe's element order.
    pub fn new(universe: Arc<Universe>, values: Vec<IFValue>) -> Result<Self, Error> {
        if values.len() != universe.len() {
            return Err(Error::Invalid(format!(
                "expected {} values, got {}",
                universe.len(),
                values.len()
            )));
        }
        Ok(Self { universe, values })
    }

    /// The same value at every element.
    pub fn constant(universe: Arc<Universe>, value: IFValue) -> Self {
        let values = vec![value; universe.len()];
        Self { universe, values }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn value(&self, element: &str) -> Option<IFValue> {
        self.universe.index_of(element).map(|i| self.values[i])
    }

    /// `(element, value)` pairs in the universe's stored order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, IFValue)> {
        self.universe
            .elements()
            .iter()
            .map(String::as_str)
            .zip(self.values.iter().copied())
    }

    /// Pointwise meet, aligned by element identifier.
    pub fn meet(&self, other: &IFSet, pair: NormPair) -> Result<IFSet, Error> {
        self.zip_with(other, |v, w| v.meet(w, pair))
    }

    /// Pointwise join, aligned by element identifier.
    pub fn join(&self, other: &IFSet, pair: NormPair) -> Result<IFSet, Error> {
        self.zip_with(other, |v, w| v.join(w, pair))
    }

    fn zip_with(
        &self,
        other: &IFSet,
        op: impl Fn(IFValue, IFValue) -> IFValue,
    ) -> Result<IFSet, Error> {
        if !self.universe.same_elements(&other.universe) {
            return Err(universe_mismatch(&self.universe, &other.universe));
        }
        let values = self
            .iter()
            .map(|(id, v)| op(v, other.value(id).expect("same universe")))
            .collect();
        Ok(IFSet {
            universe: Arc::clone(&self.universe),
            values,
        })
    }

    /// Pointwise Atanassov order over the shared universe.
    pub fn leq(&self, other: &IFSet) -> Result<bool, Error> {
        if !self.universe.same_elements(&other.universe) {
            return Err(universe_mismatch(&self.universe, &other.universe));
        }
        Ok(self
            .iter()
            .all(|(id, v)| v.leq(other.value(id).expect("same universe"))))
    }

    /// Componentwise equality within the comparison tolerance.
    pub fn approx_eq(&self, other: &IFSet) -> bool {
        self.universe.same_elements(&other.universe)
            && self
                .iter()
                .all(|(id, v)| v.approx_eq(other.value(id).expect("same universe")))
    }
}

/// The pair `(F, A)`: a map from parameters to intuitionistic fuzzy
/// subsets of a shared universe.
#[derive(Debug, Clone, PartialEq)]
pub struct IFSoftSet {
    universe: Arc<Universe>,
    parameters: Vec<String>,
    assignment: Vec<IFSet>,
}

impl IFSoftSet {
    pub fn new<I, S>(universe: Arc<Universe>, entries: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (S, IFSet)>,
        S: Into<String>,
    {
        let mut parameters = Vec::new();
        let mut assignment = Vec::new();
        let mut seen = BTreeSet::new();
        for (param, set) in entries {
            let param = param.into();
            if !seen.insert(param.clone()) {
                return Err(Error::Invalid(format!("duplicate parameter {param:?}")));
            }
            if !set.universe().same_elements(&universe) {
                return Err(universe_mismatch(&universe, set.universe()));
            }
            parameters.push(param);
            assignment.push(set);
        }
        Ok(Self {
            universe,
            parameters,
            assignment,
        })
    }

    /// A soft set with no parameters at all.
    pub fn empty(universe: Arc<Universe>) -> Self {
        Self {
            universe,
            parameters: Vec::new(),
            assignment: Vec::new(),
        }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    pub fn get(&self, param: &str) -> Option<&IFSet> {
        self.parameters
            .iter()
            .position(|p| p == param)
            .map(|i| &self.assignment[i])
    }

    /// `(parameter, set)` pairs in declaration order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &IFSet)> {
        self.parameters
            .iter()
            .map(String::as_str)
            .zip(self.assignment.iter())
    }

    /// Intersection over the shared parameters: pointwise meet on `A ∩ B`.
    /// A disjoint parameter intersection yields an empty soft set.
    pub fn intersection(&self, other: &IFSoftSet, pair: NormPair) -> Result<IFSoftSet, Error> {
        if !self.universe.same_elements(&other.universe) {
            return Err(universe_mismatch(&self.universe, &other.universe));
        }
        let mut entries = Vec::new();
        for (param, set) in self.iter() {
            if let Some(other_set) = other.get(param) {
                entries.push((param.to_string(), set.meet(other_set, pair)?));
            }
        }
        IFSoftSet::new(Arc::clone(&self.universe), entries)
    }

    /// Union over `A ∪ B`: values copied verbatim on `A − B` and `B − A`,
    /// pointwise join on `A ∩ B`.
    pub fn union(&self, other: &IFSoftSet, pair: NormPair) -> Result<IFSoftSet, Error> {
        if !self.universe.same_elements(&other.universe) {
            return Err(universe_mismatch(&self.universe, &other.universe));
        }
        let mut entries = Vec::new();
        for (param, set) in self.iter() {
            let merged = match other.get(param) {
                Some(other_set) => set.join(other_set, pair)?,
                None => set.clone(),
            };
            entries.push((param.to_string(), merged));
        }
        for (param, set) in other.iter() {
            if self.get(param).is_none() {
                entries.push((param.to_string(), set.clone()));
            }
        }
        IFSoftSet::new(Arc::clone(&self.universe), entries)
    }

    /// Soft-subset test: `A ⊆ B` and the Atanassov order pointwise on
    /// every shared parameter.
    pub fn is_subset_of(&self, other: &IFSoftSet) -> Result<bool, Error> {
        if !self.universe.same_elements(&other.universe) {
            return Err(universe_mismatch(&self.universe, &other.universe));
        }
        for (param, set) in self.iter() {
            match other.get(param) {
                Some(other_set) => {
                    if !set.leq(other_set)? {
                        return Ok(false);
                    }
                }
                None => return Ok(false),
            }
        }
        Ok(true)
    }

    /// Equality up to the comparison tolerance: same universe, same
    /// parameter set, all values componentwise close.
    pub fn approx_eq(&self, other: &IFSoftSet) -> bool {
        if !self.universe.same_elements(&other.universe)
            || self.parameters.len() != other.parameters.len()
        {
            return false;
        }
        self.iter().all(|(param, set)| {
            other
                .get(param)
                .is_some_and(|other_set| set.approx_eq(other_set))
        })
    }

    /// The soft set restricted to the given parameters, which must all be
    /// present.
    pub fn restrict(&self, params: &[impl AsRef<str>]) -> Result<IFSoftSet, Error> {
        let mut entries = Vec::new();
        for param in params {
            let param = param.as_ref();
            match self.get(param) {
                Some(set) => entries.push((param.to_string(), set.clone())),
                None => {
                    return Err(Error::Invalid(format!(
                        "parameter {param:?} not present in soft set"
                    )))
                }
            }
        }
        IFSoftSet::new(Arc::clone(&self.universe), entries)
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::algebra::EPS_CMP;
    use proptest::prelude::*;

    #[test]
    fn values_are_shareable_across_threads() {
        // Everything is immutable after construction; concurrent reads
        // need no synchronization.
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Universe>();
        assert_send_sync::<IFSet>();
        assert_send_sync::<IFSoftSet>();
        assert_send_sync::<crate::relation::IFSoftRelation>();
        assert_send_sync::<crate::algebra::IFValue>();
        assert_send_sync::<crate::algebra::NormPair>();
    }

    #[test]
    fn universe_construction() {
        let u = Universe::new(["a", "b"]).unwrap();
        assert_eq!(u.len(), 2);
        assert_eq!(u.index_of("b"), Some(1));
        assert!(Universe::new(Vec::<String>::new()).is_err());
        assert!(Universe::new(["a", "a"]).is_err());
    }

    #[test]
    fn universe_equality_is_by_identifier_set() {
        let u = Universe::new(["a", "b"]).unwrap();
        let v = Universe::new(["b", "a"]).unwrap();
        let w = Universe::new(["a", "c"]).unwrap();
        assert!(u.same_elements(&v));
        assert!(!u.same_elements(&w));
    }

    #[test]
    fn ifset_totality() {
        let u = Universe::new(["a", "b"]).unwrap();
        assert!(IFSet::new(Arc::clone(&u), vec![IFValue::TOP]).is_err());
        let s = IFSet::new(Arc::clone(&u), vec![IFValue::TOP, IFValue::BOTTOM]).unwrap();
        assert_eq!(s.value("a"), Some(IFValue::TOP));
        assert_eq!(s.value("c"), None);
    }

    #[test]
    fn intersection_reproduces_the_paper_table() {
        let u = medicine_universe();
        let f = medicine_f(&u);
        let g = medicine_g(&u);
        let h = f.intersection(&g, NormPair::PRODUCT_PROB_SUM).unwrap();

        assert_eq!(h.parameters(), ["f", "c"]);
        assert_row(
            h.get("f").unwrap(),
            [(0.765, 0.145), (0.05, 0.88), (0.325, 0.52), (0.64, 0.19)],
        );
        assert_row(
            h.get("c").unwrap(),
            [(0.39, 0.44), (0.09, 0.86), (0.81, 0.145), (0.595, 0.28)],
        );
    }

    #[test]
    fn union_reproduces_the_paper_table() {
        let u = medicine_universe();
        let f = medicine_f(&u);
        let g = medicine_g(&u);
        let h = f.union(&g, NormPair::PRODUCT_PROB_SUM).unwrap();

        assert_eq!(h.parameters(), ["f", "p", "c"]);
        assert_row(
            h.get("f").unwrap(),
            [(0.985, 0.005), (0.4, 0.42), (0.825, 0.08), (0.96, 0.01)],
        );
        // p is exclusive to (F, A): copied verbatim.
        assert!(h.get("p").unwrap().approx_eq(f.get("p").unwrap()));
        assert_row(
            h.get("c").unwrap(),
            [(0.86, 0.06), (0.51, 0.39), (0.99, 0.005), (0.955, 0.02)],
        );
    }

    #[test]
    fn disjoint_parameters_intersect_to_the_empty_soft_set() {
        let u = Universe::new(["x"]).unwrap();
        let a = IFSoftSet::new(
            Arc::clone(&u),
            [("p", IFSet::constant(Arc::clone(&u), IFValue::TOP))],
        )
        .unwrap();
        let b = IFSoftSet::new(
            Arc::clone(&u),
            [("q", IFSet::constant(Arc::clone(&u), IFValue::TOP))],
        )
        .unwrap();
        let h = a.intersection(&b, NormPair::MIN_MAX).unwrap();
        assert!(h.parameters().is_empty());
        // The empty soft set is a subset of anything over the same universe.
        assert!(h.is_subset_of(&a).unwrap());
    }

    #[test]
    fn union_with_itself_is_identity_under_min_max() {
        let u = medicine_universe();
        let f = medicine_f(&u);
        let h = f.union(&f, NormPair::MIN_MAX).unwrap();
        assert!(h.approx_eq(&f));
        let h = f.intersection(&f, NormPair::MIN_MAX).unwrap();
        assert!(h.approx_eq(&f));
    }

    #[test]
    fn universe_mismatch_is_rejected() {
        let u = Universe::new(["a"]).unwrap();
        let v = Universe::new(["b"]).unwrap();
        let x = IFSoftSet::empty(u);
        let y = IFSoftSet::empty(v);
        assert!(matches!(
            x.intersection(&y, NormPair::MIN_MAX),
            Err(Error::UniverseMismatch { .. })
        ));
        assert!(matches!(
            x.union(&y, NormPair::MIN_MAX),
            Err(Error::UniverseMismatch { .. })
        ));
        assert!(matches!(
            x.is_subset_of(&y),
            Err(Error::UniverseMismatch { .. })
        ));
        assert!(!x.approx_eq(&y));
    }

    #[test]
    fn subset_basics() {
        let u = medicine_universe();
        let f = medicine_f(&u);
        assert!(f.is_subset_of(&f).unwrap());

        let bottom = IFSoftSet::new(
            Arc::clone(&u),
            f.parameters()
                .iter()
                .map(|p| (p.clone(), IFSet::constant(Arc::clone(&u), IFValue::BOTTOM))),
        )
        .unwrap();
        assert!(bottom.is_subset_of(&f).unwrap());

        // Intersection lands below each argument restricted to the shared
        // parameters, for every built-in pair.
        let g = medicine_g(&u);
        for pair in NormPair::ALL {
            let h = f.intersection(&g, pair).unwrap();
            let shared: Vec<&String> = h.parameters().iter().collect();
            assert!(h.is_subset_of(&f.restrict(&shared).unwrap()).unwrap());
            assert!(h.is_subset_of(&g.restrict(&shared).unwrap()).unwrap());
        }
    }

    #[test]
    fn approx_eq_tolerance_boundaries() {
        let u = Universe::new(["x"]).unwrap();
        let mk = |mu: f64| {
            IFSoftSet::new(
                Arc::clone(&u),
                [(
                    "p",
                    IFSet::new(Arc::clone(&u), vec![IFValue::new(mu, 0.2).unwrap()]).unwrap(),
                )],
            )
            .unwrap()
        };
        let x = mk(0.5);
        assert!(x.approx_eq(&x));
        assert!(!x.approx_eq(&mk(0.5 + 1e-3)));
        assert!(x.approx_eq(&mk(0.5 + 1e-12)));
        // Different parameter sets are never equal.
        let y = IFSoftSet::empty(Arc::clone(&u));
        assert!(!x.approx_eq(&y));
    }

    #[test]
    fn restrict_rejects_unknown_parameters() {
        let u = medicine_universe();
        let f = medicine_f(&u);
        assert!(f.restrict(&["f", "zzz"]).is_err());
        let r = f.restrict(&["c"]).unwrap();
        assert_eq!(r.parameters(), ["c"]);
    }

    // Property tests: soft-set generation over small universes and a shared
    // parameter pool, so parameter sets overlap or miss one another.

    fn arb_ifvalue() -> impl Strategy<Value = IFValue> {
        (0.0..=1.0f64, 0.0..=1.0f64)
            .prop_map(|(mu, t)| IFValue::new(mu, t * (1.0 - mu)).unwrap())
    }

    fn arb_soft_set(universe: Arc<Universe>) -> impl Strategy<Value = IFSoftSet> {
        proptest::sample::subsequence(vec!["p1", "p2", "p3", "p4"], 0..=3).prop_flat_map(
            move |params| {
                let u = Arc::clone(&universe);
                let entries: Vec<_> = params
                    .into_iter()
                    .map(|p| {
                        let u2 = Arc::clone(&u);
                        proptest::collection::vec(arb_ifvalue(), u2.len()).prop_map(move |vs| {
                            (p.to_string(), IFSet::new(Arc::clone(&u2), vs).unwrap())
                        })
                    })
                    .collect();
                let u3 = Arc::clone(&u);
                entries.prop_map(move |entries| {
                    IFSoftSet::new(Arc::clone(&u3), entries).unwrap()
                })
            },
        )
    }

    fn three_sets() -> impl Strategy<Value = (IFSoftSet, IFSoftSet, IFSoftSet)> {
        let u = Universe::new(["x1", "x2", "x3"]).unwrap();
        (
            arb_soft_set(Arc::clone(&u)),
            arb_soft_set(Arc::clone(&u)),
            arb_soft_set(u),
        )
    }

    proptest! {
        #[test]
        fn union_and_intersection_commute((x, y, _) in three_sets()) {
            for pair in NormPair::ALL {
                prop_assert!(x.union(&y, pair).unwrap().approx_eq(&y.union(&x, pair).unwrap()));
                prop_assert!(x.intersection(&y, pair).unwrap()
                    .approx_eq(&y.intersection(&x, pair).unwrap()));
            }
        }

        #[test]
        fn union_and_intersection_associate((x, y, z) in three_sets()) {
            for pair in NormPair::ALL {
                let left = x.union(&y.union(&z, pair).unwrap(), pair).unwrap();
                let right = x.union(&y, pair).unwrap().union(&z, pair).unwrap();
                prop_assert!(left.approx_eq(&right));

                let left = x.intersection(&y.intersection(&z, pair).unwrap(), pair).unwrap();
                let right = x.intersection(&y, pair).unwrap().intersection(&z, pair).unwrap();
                prop_assert!(left.approx_eq(&right));
            }
        }

        #[test]
        fn intersection_is_a_subset_of_both_restrictions((x, y, _) in three_sets()) {
            for pair in NormPair::ALL {
                let h = x.intersection(&y, pair).unwrap();
                let shared: Vec<&String> = h.parameters().iter().collect();
                prop_assert!(h.is_subset_of(&x.restrict(&shared).unwrap()).unwrap());
                prop_assert!(h.is_subset_of(&y.restrict(&shared).unwrap()).unwrap());
            }
        }
    }

    /// Distributivity holds on the min/max grid and fails somewhere on the
    /// product/prob-sum grid.
    #[test]
    fn distributivity_dichotomy_pointwise() {
        let grid = [0.0, 0.25, 0.5, 0.75, 1.0];
        let mut values = Vec::new();
        for &mu in &grid {
            for &nu in &grid {
                if mu + nu <= 1.0 {
                    values.push(IFValue::new(mu, nu).unwrap());
                }
            }
        }
        let mut product_witness = None;
        for &a in &values {
            for &b in &values {
                for &c in &values {
                    let pair = NormPair::MIN_MAX;
                    let lhs = a.meet(b.join(c, pair), pair);
                    let rhs = a.meet(b, pair).join(a.meet(c, pair), pair);
                    assert!(lhs.approx_eq(rhs), "min/max distributivity (i)");
                    let lhs = a.join(b.meet(c, pair), pair);
                    let rhs = a.join(b, pair).meet(a.join(c, pair), pair);
                    assert!(lhs.approx_eq(rhs), "min/max distributivity (ii)");

                    let pair = NormPair::PRODUCT_PROB_SUM;
                    let lhs = a.meet(b.join(c, pair), pair);
                    let rhs = a.meet(b, pair).join(a.meet(c, pair), pair);
                    if !lhs.approx_eq(rhs) {
                        product_witness.get_or_insert((a, b, c));
                    }
                }
            }
        }
        assert!(
            product_witness.is_some(),
            "product/prob-sum distributivity must fail somewhere on the grid"
        );
    }

    #[test]
    fn soft_equal_perturbation_thresholds() {
        let u = medicine_universe();
        let f = medicine_f(&u);
        let perturb = |eps: f64| {
            let entries = f.iter().enumerate().map(|(i, (p, s))| {
                let values = s
                    .iter()
                    .enumerate()
                    .map(|(j, (_, v))| {
                        if i == 0 && j == 0 {
                            IFValue::new(v.mu() + eps, v.nu()).unwrap()
                        } else {
                            v
                        }
                    })
                    .collect();
                (p.to_string(), IFSet::new(Arc::clone(&u), values).unwrap())
            });
            IFSoftSet::new(Arc::clone(&u), entries.collect::<Vec<_>>()).unwrap()
        };
        assert!(f.approx_eq(&perturb(1e-12)));
        assert!(!f.approx_eq(&perturb(1e-3)));
        let _ = EPS_CMP;
    }
}
