//! Exact distribution-function machinery for finite-support positions.
//!
//! A [`DiscretePosition`] is the law of a bounded random variable with
//! finitely many outcomes. All quantile and integral operations on it are
//! exact finite sums over the step functions involved; nothing here samples
//! or approximates.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance accepted on the probability sum at ingestion. After validation
/// the probabilities are renormalized by their exact sum.
pub const PROB_SUM_TOL: f64 = 1e-9;

/// A probability level in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuantileLevel(f64);

impl QuantileLevel {
    pub fn new(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Domain(format!("quantile level {p} outside [0,1]")));
        }
        Ok(QuantileLevel(p))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// A financial position with finite support: pairs `(value, probability)`.
///
/// Canonical form is maintained as an invariant: atoms sorted by value
/// ascending, equal values merged, probabilities strictly positive and
/// summing to one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscretePosition {
    atoms: Vec<(f64, f64)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    label: Option<String>,
}

impl DiscretePosition {
    /// Builds a canonical position from raw atoms.
    pub fn new(atoms: Vec<(f64, f64)>) -> Result<Self> {
        Self::with_label(atoms, None)
    }

    pub fn with_label(mut atoms: Vec<(f64, f64)>, label: Option<String>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::Invalid("position needs at least one atom".into()));
        }
        for &(v, p) in &atoms {
            if !v.is_finite() {
                return Err(Error::Invalid(format!("non-finite atom value {v}")));
            }
            if !(p > 0.0) || !p.is_finite() {
                return Err(Error::Invalid(format!(
                    "atom probability {p} must be strictly positive"
                )));
            }
        }
        let sum: f64 = atoms.iter().map(|&(_, p)| p).sum();
        if (sum - 1.0).abs() > PROB_SUM_TOL {
            return Err(Error::Invalid(format!(
                "probabilities sum to {sum}, expected 1 within {PROB_SUM_TOL}"
            )));
        }
        atoms.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite values"));
        let mut merged: Vec<(f64, f64)> = Vec::with_capacity(atoms.len());
        for (v, p) in atoms {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += p,
                _ => merged.push((v, p)),
            }
        }
        for a in &mut merged {
            a.1 /= sum;
        }
        Ok(DiscretePosition {
            atoms: merged,
            label,
        })
    }

    /// The degenerate position paying `c` with certainty.
    pub fn constant(c: f64) -> Self {
        DiscretePosition::new(vec![(c, 1.0)]).expect("constant position is valid")
    }

    pub fn atoms(&self) -> &[(f64, f64)] {
        &self.atoms
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn essinf(&self) -> f64 {
        self.atoms[0].0
    }

    pub fn esssup(&self) -> f64 {
        self.atoms[self.atoms.len() - 1].0
    }

    /// `max |X|` over the support.
    pub fn sup_norm(&self) -> f64 {
        self.essinf().abs().max(self.esssup().abs())
    }

    pub fn is_constant(&self) -> bool {
        self.atoms.len() == 1
    }

    /// `P(X <= x)`; right-continuous step function.
    pub fn cdf(&self, x: f64) -> Result<f64> {
        if !x.is_finite() {
            return Err(Error::Domain(format!("cdf argument {x} is not finite")));
        }
        let mut acc = 0.0;
        for &(v, p) in &self.atoms {
            if v <= x {
                acc += p;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    /// `P(X < x)` (left limit of the CDF).
    pub fn cdf_left(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for &(v, p) in &self.atoms {
            if v < x {
                acc += p;
            } else {
                break;
            }
        }
        acc
    }

    /// Left quantile `q_X(p) = inf{x : F(x) >= p}`, with `q_X(0) = essinf X`.
    pub fn left_quantile(&self, p: QuantileLevel) -> f64 {
        let p = p.get();
        if p == 0.0 {
            return self.essinf();
        }
        let mut acc = 0.0;
        for &(v, q) in &self.atoms {
            acc += q;
            if acc >= p {
                return v;
            }
        }
        // Accumulated rounding can leave acc a hair under p = 1.
        self.esssup()
    }

    /// Right quantile `q_X^+(p) = inf{x : F(x) > p}`, with `q_X^+(1) = esssup X`.
    pub fn right_quantile(&self, p: QuantileLevel) -> f64 {
        let p = p.get();
        if p == 1.0 {
            return self.esssup();
        }
        let mut acc = 0.0;
        for &(v, q) in &self.atoms {
            acc += q;
            if acc > p {
                return v;
            }
        }
        self.esssup()
    }

    /// Mean and variance of the position.
    pub fn moments(&self) -> (f64, f64) {
        let mean = self.mean();
        let var = self
            .atoms
            .iter()
            .map(|&(v, p)| (v - mean) * (v - mean) * p)
            .sum::<f64>();
        (mean, var)
    }

    pub fn mean(&self) -> f64 {
        self.atoms.iter().map(|&(v, p)| v * p).sum()
    }

    pub fn variance(&self) -> f64 {
        self.moments().1
    }

    /// Law of `f(X)`; the result is re-canonicalized (values produced equal
    /// by `f` are merged).
    pub fn map(&self, f: impl Fn(f64) -> f64) -> Result<Self> {
        DiscretePosition::with_label(
            self.atoms.iter().map(|&(v, p)| (f(v), p)).collect(),
            self.label.clone(),
        )
    }

    /// Law of `min(X, 0)`, the loss part `-X^-`.
    pub fn negative_part_transform(&self) -> Self {
        self.map(|v| v.min(0.0)).expect("clamp keeps values finite")
    }

    /// Law of `max(X, 0)`, the surplus part `X^+`.
    pub fn positive_part_transform(&self) -> Self {
        self.map(|v| v.max(0.0)).expect("clamp keeps values finite")
    }

    /// Law of `-X`.
    pub fn negate(&self) -> Self {
        self.map(|v| -v).expect("negation keeps values finite")
    }

    /// Law of `X + b`.
    pub fn shift(&self, b: f64) -> Result<Self> {
        if !b.is_finite() {
            return Err(Error::Domain(format!("shift {b} is not finite")));
        }
        self.map(|v| v + b)
    }

    /// Law of `s * X` for `s >= 0`.
    pub fn scale(&self, s: f64) -> Result<Self> {
        if !s.is_finite() || s < 0.0 {
            return Err(Error::Domain(format!("scale {s} must be finite and >= 0")));
        }
        if s == 0.0 {
            return Ok(DiscretePosition::constant(0.0));
        }
        self.map(|v| s * v)
    }

    /// Mixture law `lambda * F1 + (1 - lambda) * F2` (a mixture of the
    /// distributions, not of the random variables).
    pub fn mixture(lambda: f64, f1: &Self, f2: &Self) -> Result<Self> {
        if !(0.0..=1.0).contains(&lambda) {
            return Err(Error::Domain(format!("mixture weight {lambda} outside [0,1]")));
        }
        if lambda == 0.0 {
            return Ok(f2.clone());
        }
        if lambda == 1.0 {
            return Ok(f1.clone());
        }
        let mut atoms: Vec<(f64, f64)> = Vec::with_capacity(f1.atoms.len() + f2.atoms.len());
        atoms.extend(f1.atoms.iter().map(|&(v, p)| (v, lambda * p)));
        atoms.extend(f2.atoms.iter().map(|&(v, p)| (v, (1.0 - lambda) * p)));
        DiscretePosition::new(atoms)
    }

    /// Exact integral of the lower quantile tail, `int_0^p q_X(t) dt`.
    ///
    /// The quantile is a step function constant on the cumulative-probability
    /// cells, so the integral is the finite sum of `value * overlap` terms.
    pub fn lower_quantile_integral(&self, p: f64) -> f64 {
        debug_assert!((0.0..=1.0).contains(&p));
        let mut acc = 0.0;
        let mut cum = 0.0;
        for &(v, q) in &self.atoms {
            let lo = cum;
            cum += q;
            let hi = cum.min(p);
            if hi > lo {
                acc += v * (hi - lo);
            }
            if cum >= p {
                break;
            }
        }
        acc
    }
}

impl std::fmt::Display for DiscretePosition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if let Some(l) = &self.label {
            write!(f, "{l}: ")?;
        }
        write!(f, "{{")?;
        for (i, (v, p)) in self.atoms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({v}, {p})")?;
        }
        write!(f, "}}")
    }
}
