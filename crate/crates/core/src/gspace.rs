//! Finite measure-preserving actions of finite abelian groups.
//!
//! An action is given by one permutation of the state space per cyclic
//! factor of the group. It extends to a homomorphism iff each generator
//! permutation has order dividing its factor order and the generators
//! commute; both are checked at construction, after which the full
//! `|G| x |X|` table is materialized.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::bitset::BitSet;
use crate::group::{FiniteSet, GroupSpec};
use crate::rational::{from_usize, Rational};
use crate::{Error, Result};

/// Largest materialized action table.
pub const MAX_TABLE: usize = 1 << 26;

/// A subset of the state space of an [`ActionSystem`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StateSubset(BitSet);

impl StateSubset {
    pub fn new<I: IntoIterator<Item = usize>>(states: usize, members: I) -> Result<Self> {
        BitSet::from_indices(states, members)
            .map(StateSubset)
            .map_err(|i| Error::InvalidInput(format!("state {i} out of range for {states} states")))
    }

    pub fn empty(states: usize) -> Self {
        StateSubset(BitSet::new(states))
    }

    pub fn full(states: usize) -> Self {
        StateSubset(BitSet::full(states))
    }

    pub fn from_bits(bits: BitSet) -> Self {
        StateSubset(bits)
    }

    pub fn bits(&self) -> &BitSet {
        &self.0
    }

    pub fn states(&self) -> usize {
        self.0.universe()
    }

    pub fn len(&self) -> usize {
        self.0.count()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.contains(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.0.to_vec()
    }

    pub fn is_subset(&self, other: &StateSubset) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn intersection(&self, other: &StateSubset) -> StateSubset {
        let mut b = self.0.clone();
        b.intersect_with(&other.0);
        StateSubset(b)
    }

    pub fn union(&self, other: &StateSubset) -> StateSubset {
        let mut b = self.0.clone();
        b.union_with(&other.0);
        StateSubset(b)
    }

    pub fn difference(&self, other: &StateSubset) -> StateSubset {
        let mut b = self.0.clone();
        b.difference_with(&other.0);
        StateSubset(b)
    }
}

/// Orbit decomposition of the state space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Orbits {
    /// Orbit id per state; ids follow the smallest state of each orbit.
    pub orbit_of: Vec<usize>,
    pub orbits: Vec<Vec<usize>>,
    /// Ids of the orbits carrying positive mass.
    pub charged: Vec<usize>,
}

/// A finite `G`-space with an exact invariant probability measure.
#[derive(Clone, Debug)]
pub struct ActionSystem {
    group: GroupSpec,
    states: usize,
    generators: Vec<Vec<usize>>,
    table: Vec<u32>,
    measure: Vec<Rational>,
    int_weights: Vec<BigInt>,
    denom: BigInt,
    support: StateSubset,
}

impl ActionSystem {
    /// Validates and builds a system. `measure = None` means uniform.
    pub fn new(
        group: &GroupSpec,
        states: usize,
        generators: Vec<Vec<usize>>,
        measure: Option<Vec<Rational>>,
    ) -> Result<Self> {
        if states == 0 {
            return Err(Error::InvalidInput("state space is empty".into()));
        }
        if states > u32::MAX as usize || group.order().saturating_mul(states) > MAX_TABLE {
            return Err(Error::InvalidInput(format!(
                "action table {} x {} exceeds {MAX_TABLE} entries",
                group.order(),
                states
            )));
        }
        if generators.len() != group.rank() {
            return Err(Error::NotHomomorphic(format!(
                "{} generator tables for a group with {} factors",
                generators.len(),
                group.rank()
            )));
        }
        for (j, gen) in generators.iter().enumerate() {
            check_permutation(j, gen, states)?;
            let n = group.orders()[j];
            let mut cur: Vec<usize> = (0..states).collect();
            for _ in 0..n {
                cur = cur.iter().map(|&x| gen[x]).collect();
            }
            if cur.iter().enumerate().any(|(x, &y)| x != y) {
                return Err(Error::NotHomomorphic(format!("generator {j} does not have order dividing {n}")));
            }
        }
        for i in 0..generators.len() {
            for j in i + 1..generators.len() {
                let (a, b) = (&generators[i], &generators[j]);
                if (0..states).any(|x| a[b[x]] != b[a[x]]) {
                    return Err(Error::NotHomomorphic(format!("generators {i} and {j} do not commute")));
                }
            }
        }

        let measure = match measure {
            Some(m) => m,
            None => vec![Rational::new(BigInt::one(), BigInt::from(states)); states],
        };
        if measure.len() != states {
            return Err(Error::InvalidInput(format!("{} weights for {states} states", measure.len())));
        }
        if let Some(x) = measure.iter().position(|w| w.is_negative()) {
            return Err(Error::InvalidInput(format!("negative weight at state {x}")));
        }
        let total: Rational = measure.iter().sum();
        if !total.is_one() {
            return Err(Error::BadTotalMass(crate::rational::format(&total)));
        }
        for (j, gen) in generators.iter().enumerate() {
            if let Some(x) = (0..states).find(|&x| measure[gen[x]] != measure[x]) {
                return Err(Error::NotInvariant(format!("generator {j} moves state {x} to {}", gen[x])));
            }
        }

        let denom = measure.iter().fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
        let int_weights = measure.iter().map(|w| w.numer() * (&denom / w.denom())).collect();
        let support = StateSubset(
            BitSet::from_indices(states, (0..states).filter(|&x| !measure[x].is_zero())).expect("in range"),
        );
        let table = build_table(group, states, &generators);
        Ok(ActionSystem { group: group.clone(), states, generators, table, measure, int_weights, denom, support })
    }

    /// Builds a system from a full `|G| x |X|` table (row per group element),
    /// verifying it is the homomorphism generated by its generator rows.
    pub fn from_table(group: &GroupSpec, states: usize, table: &[Vec<usize>], measure: Option<Vec<Rational>>) -> Result<Self> {
        if table.len() != group.order() {
            return Err(Error::InvalidInput(format!("{} table rows for a group of order {}", table.len(), group.order())));
        }
        if table[0].iter().enumerate().any(|(x, &y)| x != y) {
            return Err(Error::NotHomomorphic("identity does not act trivially".into()));
        }
        let gens = (0..group.rank()).map(|j| table[group.generator(j)].clone()).collect();
        let sys = ActionSystem::new(group, states, gens, measure)?;
        for (g, row) in table.iter().enumerate() {
            if row.len() != states {
                return Err(Error::InvalidInput(format!("table row {g} has {} entries", row.len())));
            }
            if let Some(x) = (0..states).find(|&x| sys.act(g, x) != row[x]) {
                return Err(Error::NotHomomorphic(format!("row {g} disagrees with the generated action at state {x}")));
            }
        }
        Ok(sys)
    }

    /// The group acting on itself by translation.
    pub fn regular(group: &GroupSpec, measure: Option<Vec<Rational>>) -> Result<Self> {
        let n = group.order();
        let gens = (0..group.rank())
            .map(|j| {
                let e = group.generator(j);
                (0..n).map(|x| group.add(x, e)).collect()
            })
            .collect();
        ActionSystem::new(group, n, gens, measure)
    }

    /// `Z/n` acting on `Z/m` by `g·x = x + (g mod m)`; requires `m | n`.
    pub fn cyclic_quotient(n: usize, m: usize) -> Result<Self> {
        if m == 0 || n % m != 0 {
            return Err(Error::InvalidInput(format!("quotient Z/{n} -> Z/{m} needs m | n")));
        }
        let group = GroupSpec::cyclic(n)?;
        ActionSystem::new(&group, m, vec![(0..m).map(|x| (x + 1) % m).collect()], None)
    }

    /// Disjoint union of systems over the same group, mixing their measures
    /// with the given convex weights.
    pub fn disjoint_union(parts: &[(&ActionSystem, Rational)]) -> Result<Self> {
        let first = parts.first().ok_or_else(|| Error::InvalidInput("empty disjoint union".into()))?.0;
        let group = first.group.clone();
        let mut gens = vec![Vec::new(); group.rank()];
        let mut measure = Vec::new();
        let mut offset = 0;
        for (sys, w) in parts {
            if sys.group != group {
                return Err(Error::GroupMismatch("disjoint union over different groups".into()));
            }
            for (j, g) in sys.generators.iter().enumerate() {
                gens[j].extend(g.iter().map(|&y| y + offset));
            }
            measure.extend(sys.measure.iter().map(|m| m * w));
            offset += sys.states;
        }
        ActionSystem::new(&group, offset, gens, Some(measure))
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn states(&self) -> usize {
        self.states
    }

    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    pub fn measure(&self) -> &[Rational] {
        &self.measure
    }

    pub fn weight(&self, x: usize) -> &Rational {
        &self.measure[x]
    }

    /// Weights as integers over the common denominator [`Self::denominator`].
    pub fn int_weights(&self) -> &[BigInt] {
        &self.int_weights
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denom
    }

    /// Integer weights narrowed to `i128`, for the combinatorial solvers.
    pub fn int_weights_i128(&self) -> Result<Vec<i128>> {
        self.int_weights.iter().map(|w| w.to_i128().ok_or(Error::Overflow)).collect()
    }

    pub fn support(&self) -> &StateSubset {
        &self.support
    }

    #[inline]
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.table[g * self.states + x] as usize
    }

    pub fn subset<I: IntoIterator<Item = usize>>(&self, members: I) -> Result<StateSubset> {
        StateSubset::new(self.states, members)
    }

    pub fn measure_of(&self, s: &StateSubset) -> Rational {
        let num: BigInt = s.iter().map(|x| &self.int_weights[x]).sum();
        Rational::new(num, self.denom.clone())
    }

    /// `A·B = ⋃_{a ∈ A} a·B`.
    pub fn apply_set(&self, a: &FiniteSet, b: &StateSubset) -> Result<StateSubset> {
        self.check_acting(a)?;
        self.check_states(b)?;
        if a.is_empty() {
            return Err(Error::EmptyOperand("acting set"));
        }
        let mut out = BitSet::new(self.states);
        for g in a.iter() {
            let row = &self.table[g * self.states..(g + 1) * self.states];
            for x in b.iter() {
                out.insert(row[x] as usize);
            }
        }
        Ok(StateSubset(out))
    }

    /// `A·{x}`.
    pub fn orbit_piece(&self, a: &FiniteSet, x: usize) -> BitSet {
        let mut out = BitSet::new(self.states);
        for g in a.iter() {
            out.insert(self.act(g, x));
        }
        out
    }

    pub fn orbits(&self) -> Orbits {
        let mut orbit_of = vec![usize::MAX; self.states];
        let mut orbits = Vec::new();
        for start in 0..self.states {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut members = vec![start];
            orbit_of[start] = id;
            let mut i = 0;
            while i < members.len() {
                let x = members[i];
                for gen in &self.generators {
                    let y = gen[x];
                    if orbit_of[y] == usize::MAX {
                        orbit_of[y] = id;
                        members.push(y);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            orbits.push(members);
        }
        let charged = (0..orbits.len())
            .filter(|&o| orbits[o].iter().any(|&x| self.support.contains(x)))
            .collect();
        Orbits { orbit_of, orbits, charged }
    }

    /// Ergodic iff the support of the measure is a single orbit. Invariant
    /// sets are unions of orbits, and an invariant measure is constant on
    /// each orbit, so this is exact.
    pub fn is_ergodic(&self) -> (bool, Orbits) {
        let o = self.orbits();
        (o.charged.len() == 1, o)
    }

    fn require_ergodic(&self) -> Result<()> {
        let (ergodic, o) = self.is_ergodic();
        if ergodic {
            Ok(())
        } else {
            Err(Error::NotErgodic(o.charged.len()))
        }
    }

    /// `μ(A·B) = 1` for every `B` of positive measure. By monotonicity in `B`
    /// it suffices that `A·{x}` covers the support for every `x` in it.
    pub fn is_ergodic_set(&self, a: &FiniteSet) -> Result<bool> {
        self.check_acting(a)?;
        self.require_ergodic()?;
        if a.is_empty() {
            return Ok(false);
        }
        let supp = self.support.bits();
        Ok(supp.iter().all(|x| supp.is_subset(&self.orbit_piece(a, x))))
    }

    /// `kA` is an ergodic set.
    pub fn is_ergodic_basis(&self, a: &FiniteSet, k: usize) -> Result<bool> {
        self.require_ergodic()?;
        self.is_ergodic_set(&a.iterated(k)?)
    }

    pub(crate) fn check_acting(&self, a: &FiniteSet) -> Result<()> {
        if a.group() != &self.group {
            return Err(Error::GroupMismatch(format!(
                "set over {:?}, system over {:?}",
                a.group().orders(),
                self.group.orders()
            )));
        }
        Ok(())
    }

    pub(crate) fn check_states(&self, s: &StateSubset) -> Result<()> {
        if s.states() != self.states {
            return Err(Error::InvalidInput(format!("subset over {} states, system has {}", s.states(), self.states)));
        }
        Ok(())
    }
}

fn check_permutation(j: usize, gen: &[usize], states: usize) -> Result<()> {
    if gen.len() != states {
        return Err(Error::NotHomomorphic(format!("generator {j} has {} entries for {states} states", gen.len())));
    }
    let mut seen = BitSet::new(states);
    for &y in gen {
        if y >= states || seen.contains(y) {
            return Err(Error::NotHomomorphic(format!("generator {j} is not a permutation")));
        }
        seen.insert(y);
    }
    Ok(())
}

// Row g is obtained from row g - e_j, with j the lowest non-zero digit of g.
fn build_table(group: &GroupSpec, states: usize, gens: &[Vec<usize>]) -> Vec<u32> {
    let n = group.order();
    let mut table = vec![0u32; n * states];
    for (x, t) in table[..states].iter_mut().enumerate() {
        *t = x as u32;
    }
    let orders = group.orders();
    for g in 1..n {
        let (mut rest, mut place, mut j) = (g, 1, 0);
        while rest % orders[j] == 0 {
            rest /= orders[j];
            place *= orders[j];
            j += 1;
        }
        let prev = g - place;
        let (done, todo) = table.split_at_mut(g * states);
        let prev_row = &done[prev * states..(prev + 1) * states];
        for (t, &p) in todo[..states].iter_mut().zip(prev_row) {
            *t = gens[j][p as usize] as u32;
        }
    }
    table
}

pub fn make_system(
    group: &GroupSpec,
    states: usize,
    generators: Vec<Vec<usize>>,
    measure: Option<Vec<Rational>>,
) -> Result<ActionSystem> {
    ActionSystem::new(group, states, generators, measure)
}

pub fn measure_of(sys: &ActionSystem, s: &StateSubset) -> Rational {
    sys.measure_of(s)
}

pub fn apply_set(sys: &ActionSystem, a: &FiniteSet, b: &StateSubset) -> Result<StateSubset> {
    sys.apply_set(a, b)
}

/// Uniform weight helper: `count / total` as a rational.
pub fn uniform_weight(count: usize, total: usize) -> Rational {
    from_usize(count) / from_usize(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn z8() -> ActionSystem {
        ActionSystem::regular(&GroupSpec::cyclic(8).unwrap(), None).unwrap()
    }

    fn set(g: &GroupSpec, xs: &[usize]) -> FiniteSet {
        FiniteSet::new(g, xs.iter().copied()).unwrap()
    }

    #[test]
    fn make_system_examples() {
        let s = z8();
        assert!(s.is_ergodic().0);
        let q = ActionSystem::cyclic_quotient(8, 4).unwrap();
        assert_eq!(q.act(5, 3), 0);
        assert!(q.is_ergodic().0);
        let g = GroupSpec::cyclic(8).unwrap();
        let mut w = vec![int(0); 8];
        w[0] = int(1);
        let gen = (0..8).map(|x| (x + 1) % 8).collect();
        assert!(matches!(ActionSystem::new(&g, 8, vec![gen], Some(w)), Err(Error::NotInvariant(_))));
    }

    #[test]
    fn rejects_bad_actions() {
        let g = GroupSpec::cyclic(4).unwrap();
        // order-3 cycle cannot represent Z/4
        assert!(matches!(ActionSystem::new(&g, 3, vec![vec![1, 2, 0]], None), Err(Error::NotHomomorphic(_))));
        assert!(matches!(ActionSystem::new(&g, 3, vec![vec![0, 0, 1]], None), Err(Error::NotHomomorphic(_))));
        let g2 = GroupSpec::new(&[2, 2]).unwrap();
        // two transpositions sharing a point do not commute
        assert!(matches!(
            ActionSystem::new(&g2, 3, vec![vec![1, 0, 2], vec![0, 2, 1]], None),
            Err(Error::NotHomomorphic(_))
        ));
        let bad_mass = vec![ratio(1, 2); 4];
        assert!(matches!(
            ActionSystem::new(&g, 4, vec![vec![1, 2, 3, 0]], Some(bad_mass)),
            Err(Error::BadTotalMass(_))
        ));
    }

    #[test]
    fn full_table_matches_generators() {
        let g = GroupSpec::new(&[3, 2, 2]).unwrap();
        let s = ActionSystem::regular(&g, None).unwrap();
        for a in 0..g.order() {
            for x in 0..g.order() {
                assert_eq!(s.act(a, x), g.add(x, a));
            }
        }
        let rows: Vec<Vec<usize>> = (0..g.order()).map(|a| (0..g.order()).map(|x| s.act(a, x)).collect()).collect();
        assert!(ActionSystem::from_table(&g, g.order(), &rows, None).is_ok());
        let mut broken = rows.clone();
        broken[5].swap(0, 1);
        assert!(ActionSystem::from_table(&g, g.order(), &broken, None).is_err());
    }

    #[test]
    fn apply_set_examples() {
        let s = z8();
        let g = s.group().clone();
        let b = s.subset([0]).unwrap();
        assert_eq!(s.apply_set(&set(&g, &[0, 1]), &b).unwrap().to_vec(), vec![0, 1]);
        let b = s.subset([3, 6]).unwrap();
        assert_eq!(s.apply_set(&set(&g, &[0]), &b).unwrap(), b);
        let b = s.subset([0, 4]).unwrap();
        assert_eq!(s.apply_set(&set(&g, &[0, 1]), &b).unwrap().to_vec(), vec![0, 1, 4, 5]);
        assert!(s.apply_set(&FiniteSet::empty(&g), &b).is_err());
    }

    #[test]
    fn measure_examples() {
        let s = z8();
        assert_eq!(s.measure_of(&s.subset([0, 1]).unwrap()), ratio(1, 4));
        assert_eq!(s.measure_of(&StateSubset::empty(8)), int(0));
        assert_eq!(s.measure_of(&StateSubset::full(8)), int(1));
    }

    #[test]
    fn ergodicity_examples() {
        let z4 = ActionSystem::regular(&GroupSpec::cyclic(4).unwrap(), None).unwrap();
        let two = ActionSystem::disjoint_union(&[(&z4, ratio(1, 2)), (&z4, ratio(1, 2))]).unwrap();
        let (erg, orbits) = two.is_ergodic();
        assert!(!erg);
        assert_eq!(orbits.orbits.len(), 2);
        assert!(matches!(two.is_ergodic_set(&FiniteSet::full(z4.group())), Err(Error::NotErgodic(2))));
        // mass on one copy only: ergodic again
        let one = ActionSystem::disjoint_union(&[(&z4, int(1)), (&z4, int(0))]).unwrap();
        assert!(one.is_ergodic().0);
    }

    #[test]
    fn ergodic_set_examples() {
        let s = z8();
        let g = s.group().clone();
        assert!(s.is_ergodic_set(&FiniteSet::full(&g)).unwrap());
        assert!(!s.is_ergodic_set(&set(&g, &[0, 1])).unwrap());
        let q = ActionSystem::cyclic_quotient(8, 4).unwrap();
        assert!(q.is_ergodic_set(&set(q.group(), &[0, 1, 2, 3])).unwrap());
    }

    #[test]
    fn ergodic_basis_examples() {
        let s = ActionSystem::regular(&GroupSpec::cyclic(4).unwrap(), None).unwrap();
        let g = s.group().clone();
        assert!(s.is_ergodic_basis(&set(&g, &[0, 1, 2]), 2).unwrap());
        assert!(!s.is_ergodic_basis(&set(&g, &[0, 1]), 2).unwrap());
        assert!(z8().is_ergodic_basis(&FiniteSet::full(z8().group()), 1).unwrap());
    }
}
