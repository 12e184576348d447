//! Finite abelian groups as products of cyclic factors, and their subsets.
//!
//! Elements are encoded mixed-radix over the factor list with `orders[0]`
//! least significant: `(g_0, .., g_{m-1}) ↦ g_0 + n_0 (g_1 + n_1 (g_2 + ..))`.
//! The encoding is part of every file format and must not change.

use alloc::format;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::rational::{from_usize, Rational};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupSpec {
    orders: Vec<usize>,
    cardinality: usize,
}

impl GroupSpec {
    pub fn new(orders: &[usize]) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::InvalidInput("group needs at least one cyclic factor".into()));
        }
        if let Some(p) = orders.iter().position(|&n| n == 0) {
            return Err(Error::InvalidInput(format!("factor {p} has order 0")));
        }
        let cardinality = orders
            .iter()
            .try_fold(1usize, |acc, &n| acc.checked_mul(n))
            .ok_or_else(|| Error::InvalidInput("group order overflows usize".into()))?;
        Ok(GroupSpec { orders: orders.to_vec(), cardinality })
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        GroupSpec::new(&[n])
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn order(&self) -> usize {
        self.cardinality
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn decode(&self, mut idx: usize) -> Vec<usize> {
        debug_assert!(idx < self.cardinality);
        self.orders
            .iter()
            .map(|&n| {
                let d = idx % n;
                idx /= n;
                d
            })
            .collect()
    }

    /// Encodes coordinates, reducing each modulo its factor order.
    pub fn encode(&self, coords: &[usize]) -> usize {
        debug_assert_eq!(coords.len(), self.orders.len());
        self.orders.iter().zip(coords).rev().fold(0, |acc, (&n, &c)| acc * n + c % n)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (mut a, mut b) = (a, b);
        let (mut out, mut place) = (0, 1);
        for &n in &self.orders {
            out += ((a % n + b % n) % n) * place;
            place *= n;
            a /= n;
            b /= n;
        }
        out
    }

    pub fn neg(&self, a: usize) -> usize {
        let mut a = a;
        let (mut out, mut place) = (0, 1);
        for &n in &self.orders {
            out += ((n - a % n) % n) * place;
            place *= n;
            a /= n;
        }
        out
    }

    /// Multiplies an element by an integer scalar.
    pub fn scale(&self, a: usize, k: i64) -> usize {
        let coords: Vec<usize> = self
            .decode(a)
            .iter()
            .zip(&self.orders)
            .map(|(&c, &n)| (c as i128 * k as i128).rem_euclid(n as i128) as usize)
            .collect();
        self.encode(&coords)
    }

    /// Unit vector of the `j`-th factor.
    pub fn generator(&self, j: usize) -> usize {
        if self.orders[j] == 1 {
            0
        } else {
            self.orders[..j].iter().product()
        }
    }

    fn check_same(&self, other: &GroupSpec) -> Result<()> {
        if self != other {
            return Err(Error::GroupMismatch(format!("{:?} vs {:?}", self.orders, other.orders)));
        }
        Ok(())
    }
}

/// A subset of a finite abelian group.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FiniteSet {
    group: GroupSpec,
    members: BitSet,
}

impl FiniteSet {
    pub fn new<I: IntoIterator<Item = usize>>(group: &GroupSpec, elems: I) -> Result<Self> {
        let members = BitSet::from_indices(group.order(), elems).map_err(|i| {
            Error::InvalidInput(format!("element {i} out of range for group of order {}", group.order()))
        })?;
        Ok(FiniteSet { group: group.clone(), members })
    }

    pub fn from_bits(group: &GroupSpec, members: BitSet) -> Result<Self> {
        if members.universe() != group.order() {
            return Err(Error::GroupMismatch(format!(
                "bit-set universe {} vs group order {}",
                members.universe(),
                group.order()
            )));
        }
        Ok(FiniteSet { group: group.clone(), members })
    }

    pub fn empty(group: &GroupSpec) -> Self {
        FiniteSet { group: group.clone(), members: BitSet::new(group.order()) }
    }

    pub fn full(group: &GroupSpec) -> Self {
        FiniteSet { group: group.clone(), members: BitSet::full(group.order()) }
    }

    pub fn singleton(group: &GroupSpec, g: usize) -> Result<Self> {
        FiniteSet::new(group, [g])
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn bits(&self) -> &BitSet {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.count()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.members.is_full()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.contains(g)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members.to_vec()
    }

    pub fn is_subset(&self, other: &FiniteSet) -> bool {
        self.group == other.group && self.members.is_subset(&other.members)
    }

    pub fn union(&self, other: &FiniteSet) -> Result<FiniteSet> {
        self.group.check_same(&other.group)?;
        let mut members = self.members.clone();
        members.union_with(&other.members);
        Ok(FiniteSet { group: self.group.clone(), members })
    }

    /// `|A| / |G|`: on a finite group the uniform average is the only
    /// invariant mean, so upper and lower Banach density coincide with it.
    pub fn density(&self) -> Rational {
        from_usize(self.len()) / from_usize(self.group.order())
    }

    pub fn translate(&self, g: usize) -> FiniteSet {
        let mut out = BitSet::new(self.group.order());
        or_translate(&self.group, &mut out, &self.members, g);
        FiniteSet { group: self.group.clone(), members: out }
    }

    pub fn negate(&self) -> FiniteSet {
        let mut out = BitSet::new(self.group.order());
        for a in self.members.iter() {
            out.insert(self.group.neg(a));
        }
        FiniteSet { group: self.group.clone(), members: out }
    }

    /// `A + B`, accumulated as a union of translates of the larger operand.
    pub fn sumset(&self, other: &FiniteSet) -> Result<FiniteSet> {
        self.group.check_same(&other.group)?;
        if self.is_empty() || other.is_empty() {
            return Err(Error::EmptyOperand("sumset operand"));
        }
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut out = BitSet::new(self.group.order());
        for a in small.members.iter() {
            or_translate(&self.group, &mut out, &large.members, a);
            if out.is_full() {
                break;
            }
        }
        Ok(FiniteSet { group: self.group.clone(), members: out })
    }

    /// `k`-fold sumset `A + .. + A` by repeated doubling.
    pub fn iterated(&self, k: usize) -> Result<FiniteSet> {
        if k == 0 {
            return Err(Error::InvalidInput("k-fold sumset needs k >= 1".into()));
        }
        if self.is_empty() {
            return Err(Error::EmptyOperand("iterated sumset operand"));
        }
        let mut acc: Option<FiniteSet> = None;
        let mut base = self.clone();
        let mut k = k;
        loop {
            if k & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.sumset(&base)?,
                });
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = base.sumset(&base)?;
        }
        Ok(acc.expect("k >= 1"))
    }
}

/// ORs `src + g` into `dst`.
///
/// The lowest factor occupies contiguous runs of `n_0` bits, so a translate is
/// a rotation inside each run followed by a move to the translated run index
/// of the remaining factors: two range copies per run.
fn or_translate(group: &GroupSpec, dst: &mut BitSet, src: &BitSet, g: usize) {
    let orders = group.orders();
    let n0 = orders[0];
    let runs = group.order() / n0;
    let g0 = g % n0;
    let gh = g / n0;
    let rest = &orders[1..];

    // Odometer over the run index h and its translate h + gh in the quotient factors.
    let mut h_digits = alloc::vec![0usize; rest.len()];
    let gh_digits: Vec<usize> = {
        let mut x = gh;
        rest.iter()
            .map(|&n| {
                let d = x % n;
                x /= n;
                d
            })
            .collect()
    };
    for h in 0..runs {
        let mut target = 0;
        let mut place = 1;
        for ((&d, &s), &n) in h_digits.iter().zip(&gh_digits).zip(rest) {
            target += ((d + s) % n) * place;
            place *= n;
        }
        let (src_base, dst_base) = (h * n0, target * n0);
        if g0 == 0 {
            dst.or_range_from(dst_base, src, src_base, n0);
        } else {
            dst.or_range_from(dst_base + g0, src, src_base, n0 - g0);
            dst.or_range_from(dst_base, src, src_base + n0 - g0, g0);
        }
        for (d, &n) in h_digits.iter_mut().zip(rest) {
            *d += 1;
            if *d < n {
                break;
            }
            *d = 0;
        }
    }
}

pub fn make_group(orders: &[usize]) -> Result<GroupSpec> {
    GroupSpec::new(orders)
}

pub fn sumset(a: &FiniteSet, b: &FiniteSet) -> Result<FiniteSet> {
    a.sumset(b)
}

pub fn iterated_sumset(a: &FiniteSet, k: usize) -> Result<FiniteSet> {
    a.iterated(k)
}

pub fn negate(a: &FiniteSet) -> FiniteSet {
    a.negate()
}

pub fn group_density(a: &FiniteSet) -> Rational {
    a.density()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn z(n: usize) -> GroupSpec {
        GroupSpec::cyclic(n).unwrap()
    }

    fn set(g: &GroupSpec, xs: &[usize]) -> FiniteSet {
        FiniteSet::new(g, xs.iter().copied()).unwrap()
    }

    #[test]
    fn make_group_examples() {
        assert_eq!(make_group(&[8]).unwrap().order(), 8);
        assert_eq!(make_group(&[2, 3]).unwrap().order(), 6);
        assert!(make_group(&[0]).is_err());
        assert!(make_group(&[]).is_err());
    }

    #[test]
    fn mixed_radix_least_significant_first() {
        let g = make_group(&[2, 3]).unwrap();
        assert_eq!(g.decode(1), vec![1, 0]);
        assert_eq!(g.decode(2), vec![0, 1]);
        assert_eq!(g.encode(&[1, 2]), 5);
        assert_eq!(g.add(5, 3), g.encode(&[0, 0]));
        assert_eq!(g.neg(2), g.encode(&[0, 2]));
        assert_eq!(g.generator(1), 2);
    }

    #[test]
    fn sumset_examples() {
        let g = z(8);
        assert_eq!(set(&g, &[0, 1]).sumset(&set(&g, &[0, 4])).unwrap().to_vec(), vec![0, 1, 4, 5]);
        let b = set(&g, &[2, 3, 7]);
        assert_eq!(set(&g, &[0]).sumset(&b).unwrap(), b);
        assert!(set(&g, &[0, 1]).sumset(&FiniteSet::full(&g)).unwrap().is_full());
        assert!(set(&g, &[0]).sumset(&FiniteSet::empty(&g)).is_err());
        assert!(set(&g, &[0]).sumset(&FiniteSet::full(&z(4))).is_err());
    }

    #[test]
    fn iterated_examples() {
        let g = z(8);
        assert_eq!(set(&g, &[0, 1]).iterated(3).unwrap().to_vec(), vec![0, 1, 2, 3]);
        let a = set(&g, &[1, 6]);
        assert_eq!(a.iterated(1).unwrap(), a);
        assert!(a.iterated(0).is_err());
        let z4 = z(4);
        assert!(set(&z4, &[0, 1, 2]).iterated(2).unwrap().is_full());
    }

    #[test]
    fn negate_examples() {
        let g = z(8);
        assert_eq!(set(&g, &[0, 1]).negate().to_vec(), vec![0, 7]);
        assert_eq!(set(&g, &[0]).negate().to_vec(), vec![0]);
        assert_eq!(set(&g, &[1, 7]).negate(), set(&g, &[1, 7]));
    }

    #[test]
    fn density_examples() {
        let g = z(8);
        assert_eq!(set(&g, &[0, 4]).density(), ratio(1, 4));
        assert_eq!(FiniteSet::full(&g).density(), int(1));
        assert_eq!(set(&g, &[0, 2]).density(), set(&g, &[1, 3]).density());
    }

    #[test]
    fn translate_in_product_group() {
        let g = make_group(&[3, 5, 2]).unwrap();
        let a = set(&g, &[0, 4, 7, 13, 29]);
        for t in 0..g.order() {
            let expect: Vec<usize> = {
                let mut v: Vec<usize> = a.iter().map(|x| g.add(x, t)).collect();
                v.sort();
                v
            };
            assert_eq!(a.translate(t).to_vec(), expect);
        }
    }
}
