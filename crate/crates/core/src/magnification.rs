//! Magnification ratios
//!
//! ```text
//! c(A, B)   = min { μ(AB') / μ(B') : B' ⊆ B, μ(B') > 0 }
//! c_δ(A, B) = min { μ(AB') / μ(B') : B' ⊆ B, μ(B') ≥ δ μ(B) }
//! ```
//!
//! On a finite space the infimum is attained, and candidates are restricted
//! to the support of `μ` (null states make the ratio undefined).
//!
//! # Flow solver
//!
//! `B' ↦ μ(AB')` is a weighted coverage function, hence submodular, and
//! `μ(AB') - t μ(B')` is submodular minus modular. Its minimum over `B'` is
//! a maximum-weight closure problem: selecting `b` earns `t μ(b)` and forces
//! paying `μ(x)` for every `x ∈ A·{b}`. The closure network is
//!
//! ```text
//! source --t μ(b)--> b --∞--> x --μ(x)--> sink      (x ∈ A·{b})
//! ```
//!
//! and `min_B' [μ(AB') - t μ(B')] = mincut - t μ(B)`. Dinkelbach iteration
//! starts from `t = μ(AB)/μ(B)` and replaces `t` by the ratio of the current
//! minimizer until the minimum is exactly zero. Capacities are scaled to
//! integers (common weight denominator times the denominator of `t`), so the
//! whole solve is exact.
//!
//! The cut used is the minimal one (residual reachability). Source arc
//! capacities grow with `t`, so these minimal closures are nested and shrink
//! strictly from one iteration to the next; the iteration count is at most
//! `|B| + 1` cuts.
//!
//! The supremum of `c_δ(A', B)` over finite `A' ⊆ A` equals `c_δ(A, B)` here
//! since every `A` is finite.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::bitset::BitSet;
use crate::flow::FlowNetwork;
use crate::group::FiniteSet;
use crate::gspace::{ActionSystem, StateSubset};
use crate::rational::Rational;
use crate::{Error, Result};

/// Largest candidate set the enumeration solvers accept.
pub const ENUMERATION_GUARD: usize = 24;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Method {
    Oracle,
    Flow,
    Enumeration,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Flow => "flow",
            Method::Enumeration => "enumeration",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MagnificationResult {
    pub value: Rational,
    pub witness: StateSubset,
    pub method: Method,
    /// Flow network size of the last cut (0 for enumeration).
    pub nodes: usize,
    pub arcs: usize,
    /// Cuts solved, or subsets visited for enumeration.
    pub iterations: usize,
}

// Shared preprocessing: candidates B ∩ supp(μ) and their A-neighbourhoods.
struct Instance {
    cands: Vec<usize>,
    /// Neighbourhood of each candidate, as indices into `covered`.
    hoods: Vec<Vec<usize>>,
    covered: Vec<usize>,
    weights: Vec<i128>,
}

impl Instance {
    fn build(sys: &ActionSystem, a: &FiniteSet, b: &StateSubset) -> Result<Instance> {
        sys.check_acting(a)?;
        sys.check_states(b)?;
        if a.is_empty() {
            return Err(Error::EmptyOperand("acting set"));
        }
        let cands: Vec<usize> = b.intersection(sys.support()).to_vec();
        if cands.is_empty() {
            return Err(Error::NullSet("B has zero measure"));
        }
        let weights = sys.int_weights_i128()?;
        let mut slot = vec![usize::MAX; sys.states()];
        let mut covered = Vec::new();
        let hoods = cands
            .iter()
            .map(|&c| {
                sys.orbit_piece(a, c)
                    .iter()
                    .map(|x| {
                        if slot[x] == usize::MAX {
                            slot[x] = covered.len();
                            covered.push(x);
                        }
                        slot[x]
                    })
                    .collect()
            })
            .collect();
        Ok(Instance { cands, hoods, covered, weights })
    }

    fn subset(&self, states: usize, mask: impl Fn(usize) -> bool) -> StateSubset {
        let bits = BitSet::from_indices(states, (0..self.cands.len()).filter(|&i| mask(i)).map(|i| self.cands[i]))
            .expect("candidates are states");
        StateSubset::from_bits(bits)
    }

    // (μ(A S), μ(S)) as integers over the common denominator.
    fn masses(&self, chosen: &[bool]) -> (i128, i128) {
        let mut hit = vec![false; self.covered.len()];
        let mut meas = 0;
        for (i, hood) in self.hoods.iter().enumerate() {
            if chosen[i] {
                meas += self.weights[self.cands[i]];
                for &j in hood {
                    hit[j] = true;
                }
            }
        }
        let cov = hit.iter().zip(&self.covered).filter(|(h, _)| **h).map(|(_, &x)| self.weights[x]).sum();
        (cov, meas)
    }
}

fn ratio_of(num: i128, den: i128) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

// The closure network for `min_S den·μ(AS) - num·μ(S)` over candidates with
// `within[i]`; candidate `forced` (if any) must be selected.
fn closure_cut(
    inst: &Instance,
    within: &[bool],
    forced: Option<usize>,
    num: i128,
    den: i128,
) -> Result<(Vec<bool>, i128, FlowNetwork)> {
    let nc = inst.cands.len();
    let (source, sink) = (0, 1);
    let mut net = FlowNetwork::new(2 + nc + inst.covered.len());
    let mut total_src: i128 = 0;
    let mut sink_total: i128 = 0;
    let mut sink_caps = vec![0; inst.covered.len()];
    for (j, &x) in inst.covered.iter().enumerate() {
        sink_caps[j] = den.checked_mul(inst.weights[x]).ok_or(Error::Overflow)?;
        sink_total = sink_total.checked_add(sink_caps[j]).ok_or(Error::Overflow)?;
    }
    for (_, &c) in inst.cands.iter().enumerate().filter(|&(i, _)| within[i]) {
        let cap = num.checked_mul(inst.weights[c]).ok_or(Error::Overflow)?;
        total_src = total_src.checked_add(cap).ok_or(Error::Overflow)?;
    }
    let inf = total_src.checked_add(sink_total).and_then(|x| x.checked_add(1)).ok_or(Error::Overflow)?;
    for (i, &c) in inst.cands.iter().enumerate().filter(|&(i, _)| within[i]) {
        let cap = if forced == Some(i) { inf } else { num * inst.weights[c] };
        net.add_edge(source, 2 + i, cap);
        for &j in &inst.hoods[i] {
            net.add_edge(2 + i, 2 + nc + j, inf);
        }
    }
    for (j, &cap) in sink_caps.iter().enumerate() {
        net.add_edge(2 + nc + j, sink, cap);
    }
    let cut = net.max_flow(source, sink);
    let side = net.source_side(source);
    let chosen = (0..nc).map(|i| within[i] && side[2 + i]).collect();
    // min over S of den·μ(AS) - num·μ(S), scaled; never positive when
    // nothing is forced (S = ∅).
    Ok((chosen, cut - total_src, net))
}

/// `c(A, B)` by Dinkelbach iteration over minimum cuts.
///
/// The witness is an inclusion-minimal minimizer of smallest size (ties go
/// to the lexicographically smallest): the minimal minimizer through each
/// point of the final minimizer is one more cut.
pub fn mag_ratio(sys: &ActionSystem, a: &FiniteSet, b: &StateSubset) -> Result<MagnificationResult> {
    let inst = Instance::build(sys, a, b)?;
    let nc = inst.cands.len();
    let all = vec![true; nc];
    let mut chosen = all.clone();
    let (mut num, mut den) = inst.masses(&chosen);
    let mut iterations = 0;
    loop {
        iterations += 1;
        let (next, gap, net) = closure_cut(&inst, &all, None, num, den)?;
        debug_assert!(gap <= 0);
        if gap == 0 {
            let (nodes, arcs) = (net.nodes(), net.arcs());
            let mut best: Option<Vec<bool>> = None;
            for i in (0..nc).filter(|&i| chosen[i]) {
                iterations += 1;
                let (s, gap, _) = closure_cut(&inst, &chosen, Some(i), num, den)?;
                debug_assert_eq!(gap, 0);
                let size = s.iter().filter(|&&x| x).count();
                let better = match &best {
                    None => true,
                    Some(b) => {
                        let bsize = b.iter().filter(|&&x| x).count();
                        size < bsize || (size == bsize && lex_before(&inst, &s, b))
                    }
                };
                if better {
                    best = Some(s);
                }
            }
            let w = best.expect("final minimizer is non-empty");
            debug_assert!({
                let (n2, d2) = inst.masses(&w);
                n2 * den == num * d2
            });
            return Ok(MagnificationResult {
                value: ratio_of(num, den),
                witness: inst.subset(sys.states(), |i| w[i]),
                method: Method::Flow,
                nodes,
                arcs,
                iterations,
            });
        }
        let (n2, d2) = inst.masses(&next);
        debug_assert!(d2 > 0 && n2 * den < num * d2, "Dinkelbach step must strictly decrease the ratio");
        chosen = next;
        num = n2;
        den = d2;
    }
}

// Lexicographic order of the sorted state lists selected by two masks.
fn lex_before(inst: &Instance, a: &[bool], b: &[bool]) -> bool {
    let list = |m: &[bool]| -> Vec<usize> {
        let mut v: Vec<usize> = (0..m.len()).filter(|&i| m[i]).map(|i| inst.cands[i]).collect();
        v.sort_unstable();
        v
    };
    list(a) < list(b)
}

// Gray-code walk over all non-empty subsets of the candidates. `accept`
// filters on the subset measure; ties keep the lexicographically smallest
// sorted state list.
fn enumerate(
    sys: &ActionSystem,
    a: &FiniteSet,
    b: &StateSubset,
    accept: impl Fn(i128) -> bool,
    method: Method,
) -> Result<Option<MagnificationResult>> {
    let inst = Instance::build(sys, a, b)?;
    let n = inst.cands.len();
    if n > ENUMERATION_GUARD {
        return Err(Error::GuardExceeded { size: n, limit: ENUMERATION_GUARD });
    }
    let mut counts = vec![0u32; inst.covered.len()];
    let (mut cov, mut meas) = (0i128, 0i128);
    let mut mask: u32 = 0;
    let mut best: Option<(i128, i128, u32)> = None;
    let total = 1u64 << n;
    for step in 1..total {
        let i = step.trailing_zeros() as usize;
        let c = inst.cands[i];
        if mask >> i & 1 == 0 {
            mask |= 1 << i;
            meas += inst.weights[c];
            for &j in &inst.hoods[i] {
                if counts[j] == 0 {
                    cov += inst.weights[inst.covered[j]];
                }
                counts[j] += 1;
            }
        } else {
            mask &= !(1 << i);
            meas -= inst.weights[c];
            for &j in &inst.hoods[i] {
                counts[j] -= 1;
                if counts[j] == 0 {
                    cov -= inst.weights[inst.covered[j]];
                }
            }
        }
        if !accept(meas) {
            continue;
        }
        let better = match best {
            None => true,
            Some((bc, bm, bmask)) => {
                let lhs = cov.checked_mul(bm).ok_or(Error::Overflow)?;
                let rhs = bc.checked_mul(meas).ok_or(Error::Overflow)?;
                lhs < rhs || (lhs == rhs && lex_less(mask, bmask))
            }
        };
        if better {
            best = Some((cov, meas, mask));
        }
    }
    Ok(best.map(|(cov, meas, m)| MagnificationResult {
        value: ratio_of(cov, meas),
        witness: inst.subset(sys.states(), |i| m >> i & 1 == 1),
        method,
        nodes: 0,
        arcs: 0,
        iterations: (total - 1) as usize,
    }))
}

// Lexicographic order of the sorted element lists encoded by two masks.
fn lex_less(a: u32, b: u32) -> bool {
    let d = a ^ b;
    if d == 0 {
        return false;
    }
    let low = d.trailing_zeros();
    let above = |m: u32| m.checked_shr(low + 1).unwrap_or(0);
    if a >> low & 1 == 1 {
        above(b) != 0
    } else {
        above(a) == 0
    }
}

/// `c(A, B)` by exhaustive enumeration; the witness is the lexicographically
/// smallest minimizer.
pub fn mag_ratio_oracle(sys: &ActionSystem, a: &FiniteSet, b: &StateSubset) -> Result<MagnificationResult> {
    Ok(enumerate(sys, a, b, |_| true, Method::Oracle)?.expect("non-empty candidate set"))
}

/// `c_δ(A, B)` for `0 < δ <= 1`, by exhaustive enumeration.
///
/// Restricting `μ(B')` from below breaks the closure structure (the feasible
/// family is no longer a lattice), so this solver trades scale for exactness.
/// `B' = B ∩ supp(μ)` is always feasible, so the minimum always exists.
pub fn mag_ratio_delta(sys: &ActionSystem, a: &FiniteSet, b: &StateSubset, delta: &Rational) -> Result<MagnificationResult> {
    if !crate::rational::in_unit_interval(delta) {
        return Err(Error::InvalidInput(alloc::format!("delta {} outside (0, 1]", crate::rational::format(delta))));
    }
    let weights = sys.int_weights_i128()?;
    let mass_b: i128 = b.intersection(sys.support()).iter().map(|x| weights[x]).sum();
    let p = i128::try_from(delta.numer()).map_err(|_| Error::Overflow)?;
    let q = i128::try_from(delta.denom()).map_err(|_| Error::Overflow)?;
    let threshold = p.checked_mul(mass_b).ok_or(Error::Overflow)?;
    let r = enumerate(sys, a, b, |m| q * m >= threshold, Method::Enumeration)?;
    Ok(r.expect("B itself satisfies the measure constraint"))
}
