//! Unit-interval arithmetic: intuitionistic fuzzy values and the
//! t-norm/t-conorm pairs behind every soft-set operation.

use serde::{Serialize, Serializer};

use crate::error::Error;

/// Slack allowed when validating `mu + nu <= 1`. Products like `0.9 * 0.85`
/// pick up floating-point round-off that exact decimal arithmetic does not.
pub const EPS_CONSTRAINT: f64 = 1e-9;

/// Absolute tolerance for value comparisons and equalities.
pub const EPS_CMP: f64 = 1e-9;

/// A real number in `[0, 1]`. Out-of-range inputs are rejected at
/// construction, never clamped.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct UnitScalar(f64);

impl UnitScalar {
    pub fn new(value: f64) -> Result<Self, Error> {
        if value.is_finite() && (0.0..=1.0).contains(&value) {
            Ok(Self(value))
        } else {
            Err(Error::Range { value })
        }
    }

    /// Wraps the output of a norm evaluation. The exact result is in `[0, 1]`
    /// by the norm axioms; this only shaves sub-ulp rounding spill.
    fn from_norm(value: f64) -> Self {
        Self(value.clamp(0.0, 1.0))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// Built-in continuous t-norms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TnormKind {
    /// `min(a, b)`
    Min,
    /// `a * b`
    Product,
    /// `max(a + b - 1, 0)`
    Lukasiewicz,
}

impl TnormKind {
    pub fn apply(self, a: UnitScalar, b: UnitScalar) -> UnitScalar {
        let (a, b) = (a.get(), b.get());
        UnitScalar::from_norm(match self {
            TnormKind::Min => a.min(b),
            TnormKind::Product => a * b,
            TnormKind::Lukasiewicz => (a + b - 1.0).max(0.0),
        })
    }
}

/// Built-in continuous t-conorms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TconormKind {
    /// `max(a, b)`
    Max,
    /// `a + b - ab`
    ProbSum,
    /// `min(a + b, 1)`
    BoundedSum,
}

impl TconormKind {
    pub fn apply(self, a: UnitScalar, b: UnitScalar) -> UnitScalar {
        let (a, b) = (a.get(), b.get());
        UnitScalar::from_norm(match self {
            TconormKind::Max => a.max(b),
            TconormKind::ProbSum => a + b - a * b,
            TconormKind::BoundedSum => (a + b).min(1.0),
        })
    }
}

/// A t-norm together with its dual t-conorm.
///
/// Only the three dual combinations are constructible, which makes
/// preservation of `mu + nu <= 1` under [`IFValue::meet`]/[`IFValue::join`]
/// a theorem rather than a runtime hazard.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NormPair {
    tnorm: TnormKind,
    tconorm: TconormKind,
}

impl NormPair {
    pub const MIN_MAX: NormPair = NormPair {
        tnorm: TnormKind::Min,
        tconorm: TconormKind::Max,
    };
    pub const PRODUCT_PROB_SUM: NormPair = NormPair {
        tnorm: TnormKind::Product,
        tconorm: TconormKind::ProbSum,
    };
    pub const LUKASIEWICZ_BOUNDED_SUM: NormPair = NormPair {
        tnorm: TnormKind::Lukasiewicz,
        tconorm: TconormKind::BoundedSum,
    };

    /// All built-in pairs, in a fixed order.
    pub const ALL: [NormPair; 3] = [
        NormPair::MIN_MAX,
        NormPair::PRODUCT_PROB_SUM,
        NormPair::LUKASIEWICZ_BOUNDED_SUM,
    ];

    /// Builds a pair, rejecting any combination that is not one of the
    /// three dual pairings.
    pub fn new(tnorm: TnormKind, tconorm: TconormKind) -> Result<Self, Error> {
        let pair = NormPair { tnorm, tconorm };
        if NormPair::ALL.contains(&pair) {
            Ok(pair)
        } else {
            Err(Error::NonDualNorms { tnorm, tconorm })
        }
    }

    pub fn tnorm(self) -> TnormKind {
        self.tnorm
    }

    pub fn tconorm(self) -> TconormKind {
        self.tconorm
    }

    /// True exactly when both C1 (`a * a = a`) and C2 (`a <> a = a`) hold,
    /// i.e. for the min/max pair.
    pub fn is_idempotent(self) -> bool {
        self.tnorm == TnormKind::Min
    }

    /// Stable name used by the CLI and in verdict reports.
    pub fn name(self) -> &'static str {
        match self.tnorm {
            TnormKind::Min => "minmax",
            TnormKind::Product => "prodsum",
            TnormKind::Lukasiewicz => "lukasiewicz",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        NormPair::ALL.iter().copied().find(|p| p.name() == name)
    }
}

impl Serialize for NormPair {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// An intuitionistic fuzzy value: a membership degree `mu` and a
/// non-membership degree `nu` with `mu + nu <= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IFValue {
    mu: UnitScalar,
    nu: UnitScalar,
}

impl IFValue {
    /// Full non-membership, the bottom of the Atanassov order.
    pub const BOTTOM: IFValue = IFValue {
        mu: UnitScalar(0.0),
        nu: UnitScalar(1.0),
    };
    /// Full membership, the top of the Atanassov order.
    pub const TOP: IFValue = IFValue {
        mu: UnitScalar(1.0),
        nu: UnitScalar(0.0),
    };

    pub fn new(mu: f64, nu: f64) -> Result<Self, Error> {
        let mu = UnitScalar::new(mu)?;
        let nu = UnitScalar::new(nu)?;
        if mu.get() + nu.get() > 1.0 + EPS_CONSTRAINT {
            return Err(Error::Constraint {
                mu: mu.get(),
                nu: nu.get(),
            });
        }
        Ok(Self { mu, nu })
    }

    pub fn mu(self) -> f64 {
        self.mu.get()
    }

    pub fn nu(self) -> f64 {
        self.nu.get()
    }

    /// Pointwise intersection rule: `mu` under the t-norm, `nu` under the
    /// t-conorm.
    pub fn meet(self, other: IFValue, pair: NormPair) -> IFValue {
        let mu = pair.tnorm().apply(self.mu, other.mu);
        let nu = pair.tconorm().apply(self.nu, other.nu);
        debug_assert!(mu.get() + nu.get() <= 1.0 + EPS_CONSTRAINT);
        IFValue { mu, nu }
    }

    /// Pointwise union rule: `mu` under the t-conorm, `nu` under the t-norm.
    pub fn join(self, other: IFValue, pair: NormPair) -> IFValue {
        let mu = pair.tconorm().apply(self.mu, other.mu);
        let nu = pair.tnorm().apply(self.nu, other.nu);
        debug_assert!(mu.get() + nu.get() <= 1.0 + EPS_CONSTRAINT);
        IFValue { mu, nu }
    }

    /// The Atanassov order: `mu` no larger and `nu` no smaller, within
    /// [`EPS_CMP`].
    pub fn leq(self, other: IFValue) -> bool {
        self.mu() <= other.mu() + EPS_CMP && self.nu() >= other.nu() - EPS_CMP
    }

    /// Componentwise equality within [`EPS_CMP`].
    pub fn approx_eq(self, other: IFValue) -> bool {
        (self.mu() - other.mu()).abs() <= EPS_CMP && (self.nu() - other.nu()).abs() <= EPS_CMP
    }
}
