//! Orbit closures of eventually-periodic configurations.
//!
//! A set `S ⊆ Z` is a point `x_o` of `2^Z`; `Z` acts by `g·x = x - g`, and
//! `B = {x : 0 ∈ x}` is clopen, so `B_{x_o} = {g : g·x_o ∈ B} = S`.
//!
//! The closure of the orbit of an eventually-periodic `x_o` is the orbit
//! itself (infinitely many transient translates) together with the periodic
//! configurations of its two tails. Invariant measures give the transient
//! part zero mass, so only the limit orbits are materialized: the tail with
//! minimal period `p` is the `Z/p`-space of its `p` translates, state `j`
//! being the configuration `P - j`, with the uniform (ergodic) measure.
//! An absent tail contributes the fixed empty configuration.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::group::{FiniteSet, GroupSpec};
use crate::gspace::{ActionSystem, StateSubset};
use crate::rational::Rational;
use crate::verify::{CheckResult, Relation};
use crate::zdensity::{Tail, ZSetDesc};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
    /// Both tails generate the same periodic orbit.
    Both,
}

#[derive(Clone, Debug)]
pub struct LimitOrbit {
    pub side: Side,
    pub tail: Tail,
    pub system: ActionSystem,
    /// States whose configuration contains 0.
    pub clopen: StateSubset,
}

impl LimitOrbit {
    fn new(side: Side, tail: Tail) -> Result<Self> {
        let p = tail.period() as usize;
        let system = ActionSystem::regular(&GroupSpec::cyclic(p)?, None)?;
        let clopen = system.subset((0..p).filter(|&j| tail.contains(j as i64)))?;
        Ok(LimitOrbit { side, tail, system, clopen })
    }

    pub fn period(&self) -> usize {
        self.tail.period() as usize
    }

    /// A finite integer set acting through `Z -> Z/p`.
    pub fn reduce(&self, a: &[i64]) -> Result<FiniteSet> {
        let p = self.period() as i64;
        FiniteSet::new(self.system.group(), a.iter().map(|&x| x.rem_euclid(p) as usize))
    }

    /// Whether state `j`'s configuration contains `n`.
    pub fn config_contains(&self, j: usize, n: i64) -> bool {
        self.tail.contains(n + j as i64)
    }

    pub fn mass_of_clopen(&self) -> Rational {
        self.system.measure_of(&self.clopen)
    }

    /// `ν(A·B)`.
    pub fn mass_of_translates(&self, a: &[i64]) -> Result<Rational> {
        let a = self.reduce(a)?;
        Ok(self.system.measure_of(&self.system.apply_set(&a, &self.clopen)?))
    }
}

/// Points of the orbit closure.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Point {
    /// `x_o - t`.
    Transient(i64),
    Limit { orbit: usize, state: usize },
}

#[derive(Clone, Debug)]
pub struct OrbitSystem {
    pub base: ZSetDesc,
    pub limits: Vec<LimitOrbit>,
}

impl OrbitSystem {
    pub fn act(&self, g: i64, p: Point) -> Point {
        match p {
            Point::Transient(t) => Point::Transient(t + g),
            Point::Limit { orbit, state } => {
                let n = self.limits[orbit].period() as i64;
                Point::Limit { orbit, state: (state as i64 + g).rem_euclid(n) as usize }
            }
        }
    }

    /// Membership in the clopen set `{x : 0 ∈ x}`.
    pub fn in_clopen(&self, p: Point) -> bool {
        match p {
            Point::Transient(t) => self.base.contains(t),
            Point::Limit { orbit, state } => self.limits[orbit].clopen.contains(state),
        }
    }

    /// `B_{x_o}` restricted to `[lo, hi)`.
    pub fn pullback(&self, lo: i64, hi: i64) -> Vec<i64> {
        (lo..hi).filter(|&g| self.in_clopen(self.act(g, Point::Transient(0)))).collect()
    }

    /// `(A·B)_{x_o}` restricted to `[lo, hi)`: `g·x_o ∈ a·B` for some `a`.
    pub fn pullback_translates(&self, a: &[i64], lo: i64, hi: i64) -> Vec<i64> {
        (lo..hi)
            .filter(|&g| a.iter().any(|&s| self.in_clopen(self.act(g - s, Point::Transient(0)))))
            .collect()
    }

    /// Far translates of `x_o` agree with the limit configurations on
    /// `[-radius, radius]`.
    pub fn translates_converge(&self, radius: i64) -> bool {
        let reach = radius + self.limits.iter().map(|l| l.period() as i64).max().unwrap_or(1);
        let right = self.limits.iter().position(|l| l.side != Side::Left).expect("right limit exists");
        let left = self.limits.iter().position(|l| l.side != Side::Right).expect("left limit exists");
        let check = |orbit: usize, g: i64| {
            let lim = &self.limits[orbit];
            let j = g.rem_euclid(lim.period() as i64) as usize;
            (-radius..=radius).all(|n| self.base.contains(n + g) == lim.config_contains(j, n))
        };
        let g_right = self.base.hi() + reach;
        let g_left = self.base.lo() - reach;
        (g_right..g_right + reach).all(|g| check(right, g)) && (g_left - reach..g_left).all(|g| check(left, g))
    }
}

pub fn orbit_closure(s: &ZSetDesc) -> Result<OrbitSystem> {
    if s.is_finite() {
        return Err(Error::Degenerate("both tails empty: only the empty configuration carries mass"));
    }
    let left = s.left_or_empty().minimal();
    let right = s.right_or_empty().minimal();
    let limits = if left == right {
        alloc::vec![LimitOrbit::new(Side::Both, right)?]
    } else {
        alloc::vec![LimitOrbit::new(Side::Left, left)?, LimitOrbit::new(Side::Right, right)?]
    };
    Ok(OrbitSystem { base: s.clone(), limits })
}

#[derive(Clone, Debug)]
pub struct CorrespondenceReport {
    pub relations: Vec<CheckResult>,
    /// Limit orbit maximizing `μ(B)`.
    pub mu: usize,
    /// Limit orbit minimizing `ν(A·B)`.
    pub nu: usize,
}

impl CorrespondenceReport {
    pub fn all_hold(&self) -> bool {
        self.relations.iter().all(|r| r.holds)
    }
}

/// Checks `d*(S) = μ(B)`, `d_*(S) <= ν(B)`, `d*(A+S) >= μ(AB)` and
/// `d_*(A+S) >= ν(AB)`; densities come from the tail arithmetic in
/// [`crate::zdensity`], measures from the limit orbits.
pub fn verify_correspondence(s: &ZSetDesc, a: &[i64]) -> Result<CorrespondenceReport> {
    if a.is_empty() {
        return Err(Error::EmptyOperand("translating set"));
    }
    let orbit = orbit_closure(s)?;
    let mass_b: Vec<Rational> = orbit.limits.iter().map(LimitOrbit::mass_of_clopen).collect();
    let mass_ab: Vec<Rational> = orbit.limits.iter().map(|l| l.mass_of_translates(a)).collect::<Result<_>>()?;
    let argbest = |v: &[Rational], better: fn(&Rational, &Rational) -> bool| {
        (1..v.len()).fold(0, |best, i| if better(&v[i], &v[best]) { i } else { best })
    };
    let mu = argbest(&mass_b, |x, y| x > y);
    let nu = argbest(&mass_ab, |x, y| x < y);

    let sum = ZSetDesc::finite(a.iter().copied()).sumset(s)?;
    let instance = format!("S={} A={:?}", describe(s), a);
    let rel = |name: &'static str, lhs: Rational, rel: Relation, rhs: Rational| {
        CheckResult::compare(name, instance.clone(), lhs, rel, rhs, String::new())
    };
    let relations = alloc::vec![
        rel("corr_upper_set", s.upper_density(), Relation::Eq, mass_b[mu].clone()),
        rel("corr_lower_set", s.lower_density(), Relation::Le, mass_b[nu].clone()),
        rel("corr_upper_sum", sum.upper_density(), Relation::Ge, mass_ab[mu].clone()),
        rel("corr_lower_sum", sum.lower_density(), Relation::Ge, mass_ab[nu].clone()),
    ];
    Ok(CorrespondenceReport { relations, mu, nu })
}

pub fn describe(s: &ZSetDesc) -> String {
    let tail = |t: Option<&Tail>| match t {
        Some(t) => format!("{}:{:?}", t.period(), t.residues()),
        None => String::from("-"),
    };
    format!("[{},{}){:?} L{} R{}", s.lo(), s.hi(), s.head(), tail(s.left()), tail(s.right()))
}
