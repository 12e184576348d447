//! Averaged indicators and their level sets.
//!
//! `f = Σ_k p_k 1_{B_k}` with positive weights of total at most 1, so
//! `0 <= f <= 1`. `E_t = {f >= t}` only changes at the distinct positive
//! values `v_1 < .. < v_r` of `f`, so every integral over `t ∈ [0, 1]` is a
//! finite sum over the intervals `(v_{i-1}, v_i]` with `v_0 = 0`.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::group::FiniteSet;
use crate::gspace::{ActionSystem, StateSubset};
use crate::rational::Rational;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct LevelProfile {
    sets: Vec<StateSubset>,
    weights: Vec<Rational>,
    values: Vec<Rational>,
    thresholds: Vec<Rational>,
}

impl LevelProfile {
    /// Equal weights `1/m` when `weights` is `None`.
    pub fn new(sets: Vec<StateSubset>, weights: Option<Vec<Rational>>) -> Result<Self> {
        let first = sets.first().ok_or(Error::EmptyOperand("level profile"))?;
        let states = first.states();
        if sets.iter().any(|s| s.states() != states) {
            return Err(Error::InvalidInput("profile sets over different state spaces".into()));
        }
        let weights = match weights {
            None => alloc::vec![Rational::new(1.into(), sets.len().into()); sets.len()],
            Some(w) => {
                if w.len() != sets.len() {
                    return Err(Error::InvalidInput(alloc::format!("{} weights for {} sets", w.len(), sets.len())));
                }
                if w.iter().any(|p| *p <= Rational::zero()) {
                    return Err(Error::InvalidInput("profile weights must be positive".into()));
                }
                if w.iter().sum::<Rational>() > Rational::one() {
                    return Err(Error::InvalidInput("profile weights sum above 1".into()));
                }
                w
            }
        };
        let mut values = alloc::vec![Rational::zero(); states];
        for (s, p) in sets.iter().zip(&weights) {
            for x in s.iter() {
                values[x] += p;
            }
        }
        let mut thresholds: Vec<Rational> = values.iter().filter(|v| !v.is_zero()).cloned().collect();
        thresholds.sort();
        thresholds.dedup();
        Ok(LevelProfile { sets, weights, values, thresholds })
    }

    pub fn states(&self) -> usize {
        self.values.len()
    }

    pub fn sets(&self) -> &[StateSubset] {
        &self.sets
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    /// `f(x)`.
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Distinct positive values of `f`, ascending.
    pub fn thresholds(&self) -> &[Rational] {
        &self.thresholds
    }

    /// `E_t = {f >= t}`.
    pub fn level_set(&self, t: &Rational) -> StateSubset {
        let members = (0..self.states()).filter(|&x| self.values[x] >= *t);
        StateSubset::new(self.states(), members).expect("indices are states")
    }

    /// Interval lengths `v_i - v_{i-1}` paired with `E_{v_i}`.
    pub fn layers(&self) -> Vec<(Rational, StateSubset)> {
        let mut prev = Rational::zero();
        self.thresholds
            .iter()
            .map(|v| {
                let len = v - &prev;
                prev = v.clone();
                (len, self.level_set(v))
            })
            .collect()
    }

    /// The profile of `A·B_1, .., A·B_m` with the same weights; its level
    /// sets are the `F_t`.
    pub fn pushed(&self, sys: &ActionSystem, a: &FiniteSet) -> Result<LevelProfile> {
        let sets = self.sets.iter().map(|b| sys.apply_set(a, b)).collect::<Result<_>>()?;
        LevelProfile::new(sets, Some(self.weights.clone()))
    }

    fn check_system(&self, sys: &ActionSystem) -> Result<()> {
        if sys.states() != self.states() {
            return Err(Error::InvalidInput(alloc::format!(
                "profile over {} states, system has {}",
                self.states(),
                sys.states()
            )));
        }
        Ok(())
    }

    /// `Σ_x f(x) μ(x)`.
    pub fn integral(&self, sys: &ActionSystem) -> Result<Rational> {
        self.check_system(sys)?;
        Ok(self.values.iter().enumerate().map(|(x, v)| v * sys.weight(x)).sum())
    }

    /// `∫_0^1 μ(E_t) dt`.
    pub fn layer_cake(&self, sys: &ActionSystem) -> Result<Rational> {
        self.check_system(sys)?;
        Ok(self.layers().iter().map(|(len, e)| len * sys.measure_of(e)).sum())
    }

    /// Thresholds `t` at which `A·E_t ⊄ F_t`.
    pub fn inclusion_failures(&self, sys: &ActionSystem, a: &FiniteSet) -> Result<Vec<Rational>> {
        self.check_system(sys)?;
        let pushed = self.pushed(sys, a)?;
        let mut bad = Vec::new();
        for t in &self.thresholds {
            if !sys.apply_set(a, &self.level_set(t))?.is_subset(&pushed.level_set(t)) {
                bad.push(t.clone());
            }
        }
        Ok(bad)
    }

    /// The threshold measure `η` (density `μ(E_t) / ∫ μ(E_s) ds`) together
    /// with `φ(t) = μ(A·E_t) / μ(E_t)` on each interval of positive mass.
    /// `None` when `f = 0` almost everywhere.
    pub fn threshold_measure(&self, sys: &ActionSystem, a: &FiniteSet) -> Result<Option<Vec<ThresholdCell>>> {
        self.check_system(sys)?;
        let mut cells = Vec::new();
        let mut total = Rational::zero();
        for (v, (len, e)) in self.thresholds.iter().zip(self.layers()) {
            let me = sys.measure_of(&e);
            if me.is_zero() {
                continue;
            }
            let mae = sys.measure_of(&sys.apply_set(a, &e)?);
            let mass = len * &me;
            total += &mass;
            cells.push(ThresholdCell { upper: v.clone(), mass, phi: mae / me });
        }
        if total.is_zero() {
            return Ok(None);
        }
        for c in &mut cells {
            c.mass = &c.mass / &total;
        }
        Ok(Some(cells))
    }
}

/// One interval `(v_{i-1}, v_i]` of the threshold measure.
#[derive(Clone, PartialEq, Debug)]
pub struct ThresholdCell {
    /// `v_i`.
    pub upper: Rational,
    /// `η((v_{i-1}, v_i])`.
    pub mass: Rational,
    pub phi: Rational,
}

/// `(∫ φ dη, η{φ < ∫ φ dη + ε})`.
pub fn chebyshev(cells: &[ThresholdCell], eps: &Rational) -> (Rational, Rational) {
    let mean: Rational = cells.iter().map(|c| &c.mass * &c.phi).sum();
    let bound = &mean + eps;
    let mass = cells.iter().filter(|c| c.phi < bound).map(|c| c.mass.clone()).sum();
    (mean, mass)
}
