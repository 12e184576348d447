//! Seeded random instances for every check, and report aggregation.
//!
//! Instance `i` of check `c` draws from its own ChaCha8 stream: the
//! generator is seeded with `seed` through `SeedableRng::seed_from_u64` and
//! switched to stream `(c << 32) | i`, where `c` is the check's position in
//! [`CheckKind::ALL`]. Instances therefore do not depend on each other or on
//! the order in which they are run, and ChaCha output is identical on every
//! platform.
//!
//! Generated systems: regular actions, transitive quotient actions
//! (`Π Z/n_j` acting on `Π Z/m_j` with `m_j | n_j`), and disjoint unions of
//! two such systems with unequal weights (non-ergodic). Statements about
//! every ergodic system are only exercised on these.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::group::{FiniteSet, GroupSpec};
use crate::gspace::{ActionSystem, StateSubset};
use crate::levelset::LevelProfile;
use crate::magnification::{mag_ratio, mag_ratio_oracle, ENUMERATION_GUARD};
use crate::rational::{format as fmt_q, ratio, Rational};
use crate::verify::{self, CheckResult, Outcome, Relation};
use crate::zdensity::{Tail, ZSetDesc};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum CheckKind {
    Thm1,
    Thm2,
    Cor2Group,
    Zline,
    Prop12,
    PetridisLemma,
    PetridisK,
    Prop13,
    Prop2,
    Prop21,
    Prop22,
    Levelset,
    TransitivePoint,
    Correspondence,
    MagOracle,
}

impl CheckKind {
    pub const ALL: [CheckKind; 15] = [
        CheckKind::Thm1,
        CheckKind::Thm2,
        CheckKind::Cor2Group,
        CheckKind::Zline,
        CheckKind::Prop12,
        CheckKind::PetridisLemma,
        CheckKind::PetridisK,
        CheckKind::Prop13,
        CheckKind::Prop2,
        CheckKind::Prop21,
        CheckKind::Prop22,
        CheckKind::Levelset,
        CheckKind::TransitivePoint,
        CheckKind::Correspondence,
        CheckKind::MagOracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Thm1 => "thm1",
            CheckKind::Thm2 => "thm2",
            CheckKind::Cor2Group => "cor2",
            CheckKind::Zline => "zline",
            CheckKind::Prop12 => "prop12",
            CheckKind::PetridisLemma => "petridis",
            CheckKind::PetridisK => "petridis_k",
            CheckKind::Prop13 => "prop13",
            CheckKind::Prop2 => "prop2",
            CheckKind::Prop21 => "prop21",
            CheckKind::Prop22 => "prop22",
            CheckKind::Levelset => "levelset",
            CheckKind::TransitivePoint => "transitive",
            CheckKind::Correspondence => "correspondence",
            CheckKind::MagOracle => "mag_oracle",
        }
    }

    /// The statement each check implements, in root-free form.
    pub fn statement(self) -> &'static str {
        match self {
            CheckKind::Thm1 => "Theorem 1: mu(AB)^k >= mu(B)^(k-1) for an ergodic basis A of order k",
            CheckKind::Thm2 => "Theorem 2: d*(kA) mu(B)^(k-1) <= mu(AB)^k on ergodic systems",
            CheckKind::Cor2Group => "Corollary 2 (finite groups): |A+B|^k >= |kA| |B|^(k-1)",
            CheckKind::Zline => "Corollaries 1-3 on eventually periodic subsets of Z",
            CheckKind::Prop12 => "Proposition 1.2: c(A,B)^k >= c(kA,B)",
            CheckKind::PetridisLemma => "Petridis lemma: mu(FAB') <= ((1+e)mu(FB') + e|F|mu(B')) c(A,B)",
            CheckKind::PetridisK => "Petridis induction: mu((k+1)A B')/mu(B') <= (1+e)^(k+1)c^(k+1) + e D_k c^k",
            CheckKind::Prop13 => "Proposition 1.3: increment step for the magnification inequality",
            CheckKind::Prop2 => "Proposition 2: c_delta(A,B) = 1/mu(B) for an ergodic set A",
            CheckKind::Prop21 => "Proposition 2.1: c(kA,B) mu(B)^k <= mu(AB)^k",
            CheckKind::Prop22 => "Proposition 2.2: d*(A) <= mu(AB) and d*(A) <= c(A,B) mu(B)",
            CheckKind::Levelset => "Layer-cake identity, inclusion A E_t in F_t, Chebyshev positive mass",
            CheckKind::TransitivePoint => "Transitive point: mu(A_y^-1 B) is maximal at y_o",
            CheckKind::Correspondence => "Correspondence principle on eventually periodic sets",
            CheckKind::MagOracle => "Min-cut magnification ratio equals exhaustive enumeration",
        }
    }

    pub fn parse(s: &str) -> Result<CheckKind> {
        CheckKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown check '{s}'")))
    }

    fn index(self) -> u64 {
        CheckKind::ALL.iter().position(|&k| k == self).expect("listed") as u64
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CampaignConfig {
    pub seed: u64,
    /// Instances per check.
    pub instances: usize,
    /// Largest group order generated.
    pub max_order: usize,
    pub k_max: usize,
    pub deltas: Vec<Rational>,
    pub epsilons: Vec<Rational>,
    pub checks: Vec<CheckKind>,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            seed: 1,
            instances: 100,
            max_order: 16,
            k_max: 4,
            deltas: alloc::vec![ratio(1, 4), ratio(1, 2), ratio(3, 4)],
            epsilons: alloc::vec![ratio(1, 10), ratio(1, 100)],
            checks: CheckKind::ALL.to_vec(),
        }
    }
}

impl CampaignConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidInput(m));
        if self.max_order < 2 {
            return bad(format!("max order {} below 2", self.max_order));
        }
        if self.max_order > 4096 {
            return bad(format!("max order {} above 4096", self.max_order));
        }
        if self.k_max == 0 || self.k_max > 16 {
            return bad(format!("k range 1..={} outside 1..=16", self.k_max));
        }
        let open = |x: &Rational| *x > Rational::zero() && *x < Rational::one();
        if self.deltas.is_empty() || !self.deltas.iter().all(open) {
            return bad("deltas must be a non-empty list inside (0, 1)".into());
        }
        if self.epsilons.is_empty() || !self.epsilons.iter().all(open) {
            return bad("epsilons must be a non-empty list inside (0, 1)".into());
        }
        Ok(())
    }

    /// `(check, index)` for every instance, in report order.
    pub fn jobs(&self) -> Vec<(CheckKind, usize)> {
        self.checks.iter().flat_map(|&c| (0..self.instances).map(move |i| (c, i))).collect()
    }
}

pub fn instance_rng(seed: u64, kind: CheckKind, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(kind.index() << 32 | index as u64);
    rng
}

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// A cyclic group of order `2..=max_order`, or with probability 1/4 a
/// product of two non-trivial cyclic factors.
pub fn random_group<R: Rng>(rng: &mut R, max_order: usize) -> GroupSpec {
    let max_order = max_order.max(2);
    if max_order >= 4 && rng.gen_bool(0.25) {
        let n1 = rng.gen_range(2..=max_order / 2);
        let n2 = rng.gen_range(2..=max_order / n1);
        return GroupSpec::new(&[n1, n2]).expect("valid orders");
    }
    GroupSpec::cyclic(rng.gen_range(2..=max_order)).expect("valid order")
}

/// `Π Z/n_j` acting on `Π Z/m_j` by translation, for `m_j | n_j`.
pub fn quotient_system(group: &GroupSpec, moduli: &[usize]) -> Result<ActionSystem> {
    if moduli.len() != group.rank() {
        return Err(Error::InvalidInput(format!("{} moduli for {} factors", moduli.len(), group.rank())));
    }
    if let Some(j) = (0..moduli.len()).find(|&j| moduli[j] == 0 || group.orders()[j] % moduli[j] != 0) {
        return Err(Error::InvalidInput(format!("modulus {} does not divide {}", moduli[j], group.orders()[j])));
    }
    let states: usize = moduli.iter().product();
    let mut stride = 1;
    let mut gens = Vec::with_capacity(moduli.len());
    for &m in moduli {
        gens.push((0..states).map(|x| if (x / stride) % m == m - 1 { x + stride - m * stride } else { x + stride }).collect());
        stride *= m;
    }
    ActionSystem::new(group, states, gens, None)
}

/// Regular action (probability 1/2) or a random transitive quotient.
pub fn random_ergodic_system<R: Rng>(rng: &mut R, group: &GroupSpec) -> ActionSystem {
    if rng.gen_bool(0.5) {
        return ActionSystem::regular(group, None).expect("regular action");
    }
    let moduli: Vec<usize> = group
        .orders()
        .iter()
        .map(|&n| {
            let d = divisors(n);
            d[rng.gen_range(0..d.len())]
        })
        .collect();
    quotient_system(group, &moduli).expect("quotient action")
}

/// An ergodic system, or with probability 1/4 a disjoint union of two with
/// weights `w, 1 - w`, `w ∈ {1/5, .., 4/5}`.
pub fn random_system<R: Rng>(rng: &mut R, group: &GroupSpec) -> ActionSystem {
    if rng.gen_bool(0.25) {
        let s1 = random_ergodic_system(rng, group);
        let s2 = random_ergodic_system(rng, group);
        let w = ratio(rng.gen_range(1..=4), 5);
        let rest = Rational::one() - &w;
        return ActionSystem::disjoint_union(&[(&s1, w), (&s2, rest)]).expect("union of valid systems");
    }
    random_ergodic_system(rng, group)
}

/// Each of `0..n` independently with a random density; never empty.
pub fn random_indices<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let p = rng.gen_range(0.05..0.95);
    let mut out: Vec<usize> = (0..n).filter(|_| rng.gen_bool(p)).collect();
    if out.is_empty() {
        out.push(rng.gen_range(0..n));
    }
    out
}

/// Non-empty, at most `cap` elements (keeps a random subset of the draw).
pub fn random_indices_capped<R: Rng>(rng: &mut R, n: usize, cap: usize) -> Vec<usize> {
    let mut v = random_indices(rng, n);
    while v.len() > cap {
        let i = rng.gen_range(0..v.len());
        v.swap_remove(i);
    }
    v.sort_unstable();
    v
}

pub fn random_set<R: Rng>(rng: &mut R, group: &GroupSpec) -> FiniteSet {
    FiniteSet::new(group, random_indices(rng, group.order())).expect("in range")
}

/// Non-empty subset of `B` when possible, otherwise a random non-empty
/// set meeting the support.
pub fn random_states<R: Rng>(rng: &mut R, sys: &ActionSystem, cap: usize) -> StateSubset {
    let supp = sys.support().to_vec();
    let mut picked = random_indices_capped(rng, sys.states(), cap);
    if !picked.iter().any(|x| sys.support().contains(*x)) {
        picked[0] = supp[rng.gen_range(0..supp.len())];
    }
    sys.subset(picked).expect("in range")
}

fn random_tail<R: Rng>(rng: &mut R, max_period: u64) -> Option<Tail> {
    if rng.gen_bool(0.2) {
        return None;
    }
    let p = rng.gen_range(1..=max_period);
    let dens = rng.gen_range(0.0..1.0);
    Some(Tail::new(p, (0..p).filter(|_| rng.gen_bool(dens))).expect("residues below period"))
}

/// Eventually-periodic set with head inside `[-12, 12)` and tail periods at
/// most `max_period`; with `infinite` at least one tail is non-empty.
pub fn random_zset<R: Rng>(rng: &mut R, max_period: u64, infinite: bool) -> ZSetDesc {
    loop {
        let lo = rng.gen_range(-12..=0);
        let hi = rng.gen_range(lo..=12);
        let dens = rng.gen_range(0.0..1.0);
        let head: Vec<i64> = (lo..hi).filter(|_| rng.gen_bool(dens)).collect();
        let s = ZSetDesc::new(lo, hi, head, random_tail(rng, max_period), random_tail(rng, max_period))
            .expect("head inside window");
        if !s.is_empty() && (!infinite || !s.is_finite()) {
            return s;
        }
    }
}

fn pick<'a, R: Rng, T>(rng: &mut R, xs: &'a [T]) -> &'a T {
    &xs[rng.gen_range(0..xs.len())]
}

/// An ergodic set of `sys`: a random set grown until it qualifies.
pub fn random_ergodic_set<R: Rng>(rng: &mut R, sys: &ActionSystem) -> Result<FiniteSet> {
    let group = sys.group();
    let mut a = random_set(rng, group);
    while !sys.is_ergodic_set(&a)? {
        let missing: Vec<usize> = (0..group.order()).filter(|&g| !a.contains(g)).collect();
        a = a.union(&FiniteSet::singleton(group, *pick(rng, &missing))?)?;
    }
    Ok(a)
}

/// `B` for enumeration-backed checks: at most 12 states.
const SMALL_B: usize = 12;

pub fn run_instance(cfg: &CampaignConfig, kind: CheckKind, index: usize) -> Result<Vec<CheckResult>> {
    let rng = &mut instance_rng(cfg.seed, kind, index);
    let k = rng.gen_range(1..=cfg.k_max);
    let one = |r: Result<CheckResult>| r.map(|c| alloc::vec![c]);
    match kind {
        CheckKind::Thm1 | CheckKind::Thm2 | CheckKind::Prop22 => {
            let group = random_group(rng, cfg.max_order);
            let sys = random_ergodic_system(rng, &group);
            let a = random_set(rng, &group);
            let b = random_states(rng, &sys, usize::MAX);
            match kind {
                CheckKind::Thm1 => one(verify::check_thm1(&sys, &a, &b, k)),
                CheckKind::Thm2 => one(verify::check_thm2(&sys, &a, &b, k)),
                _ => verify::check_prop22(&sys, &a, &b),
            }
        }
        CheckKind::Cor2Group => {
            let group = GroupSpec::cyclic(rng.gen_range(1..=cfg.max_order))?;
            let (a, b) = (random_set(rng, &group), random_set(rng, &group));
            one(verify::check_cor2_group(&a, &b, k))
        }
        CheckKind::Zline => {
            let period = cfg.max_order.min(24) as u64;
            let (a, b) = (random_zset(rng, period, false), random_zset(rng, period, false));
            verify::check_cor1_cor3_zline(&a, &b, k)
        }
        CheckKind::Prop12 | CheckKind::Prop21 => {
            let group = random_group(rng, cfg.max_order);
            let sys = random_system(rng, &group);
            let a = random_set(rng, &group);
            let b = random_states(rng, &sys, usize::MAX);
            if kind == CheckKind::Prop12 {
                one(verify::check_prop12(&sys, &a, &b, k))
            } else {
                one(verify::check_prop21(&sys, &a, &b, k))
            }
        }
        CheckKind::PetridisLemma | CheckKind::PetridisK => {
            let group = random_group(rng, cfg.max_order);
            let sys = random_system(rng, &group);
            let a = random_set(rng, &group);
            let b = random_states(rng, &sys, usize::MAX);
            let bp = if rng.gen_bool(0.5) {
                mag_ratio(&sys, &a, &b)?.witness
            } else {
                let inside = b.intersection(sys.support()).to_vec();
                let chosen = random_indices(rng, inside.len());
                sys.subset(chosen.into_iter().map(|i| inside[i]))?
            };
            let eps = pick(rng, &cfg.epsilons).clone();
            if kind == CheckKind::PetridisLemma {
                let f = FiniteSet::new(&group, random_indices_capped(rng, group.order(), 4))?;
                one(verify::check_petridis_lemma(&sys, &a, &b, &bp, &f, &eps))
            } else {
                one(verify::check_petridis_k(&sys, &a, &b, &bp, &eps, k - 1))
            }
        }
        CheckKind::Prop13 => {
            let group = random_group(rng, cfg.max_order);
            let sys = random_system(rng, &group);
            let a = random_set(rng, &group);
            let b = random_states(rng, &sys, verify::INCREMENT_GUARD);
            let bp = if rng.gen_bool(0.5) {
                mag_ratio(&sys, &a.iterated(k)?, &b)?.witness
            } else {
                let inside = b.intersection(sys.support()).to_vec();
                let chosen = random_indices(rng, inside.len());
                sys.subset(chosen.into_iter().map(|i| inside[i]))?
            };
            let delta = pick(rng, &cfg.deltas).clone();
            one(verify::check_prop13_increment(&sys, &a, &b, &bp, &delta, k))
        }
        CheckKind::Prop2 => {
            let group = random_group(rng, cfg.max_order);
            let sys = random_ergodic_system(rng, &group);
            let a = random_ergodic_set(rng, &sys)?;
            let b = random_states(rng, &sys, SMALL_B);
            let delta = pick(rng, &cfg.deltas).clone();
            one(verify::check_prop2_minmax(&sys, &a, &b, &delta))
        }
        CheckKind::Levelset => {
            let group = random_group(rng, cfg.max_order);
            let sys = random_system(rng, &group);
            let profile = random_profile(rng, &sys)?;
            let a = random_set(rng, &group);
            verify::check_levelset(&profile, &sys, &a, &cfg.epsilons)
        }
        CheckKind::TransitivePoint => {
            let group = random_group(rng, cfg.max_order);
            let y = random_ergodic_system(rng, &group);
            let x = random_system(rng, &group);
            let a = y.subset(random_indices(rng, y.states()))?;
            let b = random_states(rng, &x, usize::MAX);
            one(verify::check_transitive_point(&y, &a, &x, &b))
        }
        CheckKind::Correspondence => {
            let s = random_zset(rng, 24, true);
            let len = rng.gen_range(1..=5);
            let a: Vec<i64> = (0..len).map(|_| rng.gen_range(-20..=20)).collect();
            Ok(crate::correspondence::verify_correspondence(&s, &a)?.relations)
        }
        CheckKind::MagOracle => {
            let group = random_group(rng, cfg.max_order.min(ENUMERATION_GUARD));
            let sys = random_system(rng, &group);
            let a = random_set(rng, &group);
            let b = random_states(rng, &sys, SMALL_B);
            one(mag_oracle_check(&sys, &a, &b))
        }
    }
}

/// `m ∈ 1..=8` random sets, equal weights or random positive weights
/// summing to at most 1.
pub fn random_profile<R: Rng>(rng: &mut R, sys: &ActionSystem) -> Result<LevelProfile> {
    let m = rng.gen_range(1..=8);
    let sets = (0..m)
        .map(|_| {
            let keep = rng.gen_range(0.0..1.0);
            sys.subset((0..sys.states()).filter(|_| rng.gen_bool(keep)))
        })
        .collect::<Result<Vec<_>>>()?;
    let weights = if rng.gen_bool(0.5) {
        None
    } else {
        let den = rng.gen_range(m as i64..=4 * m as i64);
        let mut left = den;
        let w = (0..m)
            .map(|i| {
                let room = left - (m - 1 - i) as i64;
                let take = rng.gen_range(1..=room);
                left -= take;
                ratio(take, den)
            })
            .collect();
        Some(w)
    };
    LevelProfile::new(sets, weights)
}

/// `mag_ratio` against `mag_ratio_oracle`, exact equality.
pub fn mag_oracle_check(sys: &ActionSystem, a: &FiniteSet, b: &StateSubset) -> Result<CheckResult> {
    let inst = verify::describe(sys, a, b);
    if a.is_empty() || sys.measure_of(b).is_zero() {
        return Ok(CheckResult::vacuous("mag_oracle", inst, "A empty or mu(B) = 0"));
    }
    let flow = mag_ratio(sys, a, b)?;
    let oracle = mag_ratio_oracle(sys, a, b)?;
    let w = format!("cuts={} subsets={}", flow.iterations, oracle.iterations);
    Ok(CheckResult::compare("mag_oracle", inst, flow.value, Relation::Eq, oracle.value, w))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Row {
    pub instance_id: String,
    pub result: CheckResult,
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CheckSummary {
    pub name: &'static str,
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub equalities: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct VerificationReport {
    pub rows: Vec<Row>,
    /// One entry per check name, in order of first appearance.
    pub summary: Vec<CheckSummary>,
    /// Indices into `rows` of violated checks.
    pub counterexamples: Vec<usize>,
    /// Smallest `μ(AB)^k / μ(B)^{k-1}` over passing Theorem 1 rows, with
    /// the row index.
    pub thm1_tightness: Option<(Rational, usize)>,
}

impl VerificationReport {
    /// `results[j]` belongs to `jobs[j]`; `instance_id` is `check-index`.
    pub fn from_results(jobs: &[(CheckKind, usize)], results: Vec<Vec<CheckResult>>) -> Self {
        let mut rep = VerificationReport::default();
        for (&(kind, i), batch) in jobs.iter().zip(results) {
            for r in batch {
                rep.push(format!("{}-{i}", kind.name()), r);
            }
        }
        rep
    }

    fn push(&mut self, instance_id: String, result: CheckResult) {
        let idx = self.rows.len();
        let pos = match self.summary.iter().position(|s| s.name == result.name) {
            Some(p) => p,
            None => {
                self.summary.push(CheckSummary { name: result.name, ..Default::default() });
                self.summary.len() - 1
            }
        };
        let s = &mut self.summary[pos];
        match result.outcome() {
            Outcome::Pass => s.pass += 1,
            Outcome::Fail => {
                s.fail += 1;
                self.counterexamples.push(idx);
            }
            Outcome::Vacuous => s.vacuous += 1,
        }
        if result.is_equality() {
            s.equalities += 1;
        }
        if result.name == "thm1" && result.outcome() == Outcome::Pass {
            let r = &result.lhs / &result.rhs;
            if self.thm1_tightness.as_ref().is_none_or(|(best, _)| r < *best) {
                self.thm1_tightness = Some((r, idx));
            }
        }
        self.rows.push(Row { instance_id, result });
    }

    pub fn all_hold(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn summary_lines(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .summary
            .iter()
            .map(|s| format!("{}: {} pass, {} fail, {} vacuous, {} equality", s.name, s.pass, s.fail, s.vacuous, s.equalities))
            .collect();
        if let Some((r, i)) = &self.thm1_tightness {
            out.push(format!("thm1 tightness: min mu(AB)^k/mu(B)^(k-1) = {} at {}", fmt_q(r), self.rows[*i].instance_id));
        }
        out
    }
}

/// Sequential campaign.
pub fn run_campaign(cfg: &CampaignConfig) -> Result<VerificationReport> {
    cfg.validate()?;
    let jobs = cfg.jobs();
    let results = jobs.iter().map(|&(c, i)| run_instance(cfg, c, i)).collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::from_results(&jobs, results))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(checks: &[CheckKind], instances: usize) -> CampaignConfig {
        CampaignConfig { instances, max_order: 12, k_max: 3, checks: checks.to_vec(), ..Default::default() }
    }

    #[test]
    fn names_round_trip() {
        for k in CheckKind::ALL {
            assert_eq!(CheckKind::parse(k.name()).unwrap(), k);
        }
        assert!(CheckKind::parse("nosuch").is_err());
    }

    #[test]
    fn quotient_systems_are_transitive() {
        let g = GroupSpec::new(&[4, 6]).unwrap();
        let s = quotient_system(&g, &[2, 3]).unwrap();
        assert_eq!(s.states(), 6);
        assert_eq!(s.orbits().orbits.len(), 1);
        assert!(quotient_system(&g, &[3, 3]).is_err());
    }

    #[test]
    fn every_check_runs_and_holds() {
        let rep = run_campaign(&small(&CheckKind::ALL, 15)).unwrap();
        let fails: Vec<_> = rep.counterexamples.iter().map(|&i| &rep.rows[i]).collect();
        assert!(fails.is_empty(), "{fails:#?}");
        assert!(rep.summary.iter().any(|s| s.name == "thm1"));
    }

    #[test]
    fn deterministic_and_order_free() {
        let cfg = small(&[CheckKind::Prop12, CheckKind::Levelset], 10);
        assert_eq!(run_campaign(&cfg).unwrap(), run_campaign(&cfg).unwrap());
        let jobs = cfg.jobs();
        let rev: Vec<_> = jobs.iter().rev().map(|&(c, i)| run_instance(&cfg, c, i).unwrap()).collect();
        let fwd: Vec<_> = jobs.iter().map(|&(c, i)| run_instance(&cfg, c, i).unwrap()).collect();
        assert_eq!(rev.into_iter().rev().collect::<Vec<_>>(), fwd);
    }

    #[test]
    fn empty_campaign() {
        let rep = run_campaign(&small(&[CheckKind::Prop12], 0)).unwrap();
        assert!(rep.rows.is_empty() && rep.all_hold());
    }
}
