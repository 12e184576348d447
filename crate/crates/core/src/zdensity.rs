//! Eventually-periodic subsets of the integers.
//!
//! A [`ZSetDesc`] is an explicit head on a window `[lo, hi)` plus a periodic
//! left tail governing every `n < lo` and a periodic right tail governing
//! every `n >= hi`. Tail membership uses absolute residues: `n` belongs to a
//! tail with period `p` iff `n.rem_euclid(p)` is in the pattern.
//!
//! This is the one class of infinite sets whose upper and lower Banach
//! densities are exactly computable:
//!
//! * An invariant mean ignores finite sets and is translation invariant, so
//!   it assigns a purely periodic set its pattern density. Means supported
//!   far to the right (resp. left) see only the right (resp. left) tail.
//! * Every interval `[a, a + n)` splits into a left-tail part, a bounded head
//!   part and a right-tail part; its count is at most
//!   `max(δ_l, δ_r) · n + O(1)` and at least `min(δ_l, δ_r) · n - O(1)`.
//!   So no window family, and therefore no invariant mean, exceeds the larger
//!   tail density or undercuts the smaller one.
//!
//! Hence `d* = max(δ_l, δ_r)` and `d_* = min(δ_l, δ_r)` with an absent tail
//! counting as density 0. Arbitrary subsets of `Z` have no such formula; they
//! enter only through [`window_density`], which is an empirical estimate.

use alloc::vec::Vec;
use core::cmp::{max, min};

use num_integer::Integer;

use crate::bitset::BitSet;
use crate::rational::{from_usize, int, Rational};
use crate::{Error, Result};

/// A periodic pattern: `n` is a member iff `n mod period` is in `pattern`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tail {
    period: u64,
    pattern: BitSet,
}

impl Tail {
    pub fn new<I: IntoIterator<Item = u64>>(period: u64, pattern: I) -> Result<Self> {
        if period == 0 {
            return Err(Error::InvalidInput("tail period must be >= 1".into()));
        }
        let bits = BitSet::from_indices(period as usize, pattern.into_iter().map(|r| r as usize))
            .map_err(|r| Error::InvalidInput(alloc::format!("pattern residue {r} >= period {period}")))?;
        Ok(Tail { period, pattern: bits })
    }

    pub fn full() -> Self {
        Tail { period: 1, pattern: BitSet::full(1) }
    }

    pub fn empty() -> Self {
        Tail { period: 1, pattern: BitSet::new(1) }
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn residues(&self) -> Vec<u64> {
        self.pattern.iter().map(|r| r as u64).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.pattern.is_empty()
    }

    #[inline]
    pub fn contains(&self, n: i64) -> bool {
        self.pattern.contains(n.rem_euclid(self.period as i64) as usize)
    }

    pub fn density(&self) -> Rational {
        from_usize(self.pattern.count()) / from_usize(self.period as usize)
    }

    /// Same set with the smallest period.
    pub fn minimal(&self) -> Tail {
        let p = self.period;
        for d in 1..=p {
            if p % d != 0 {
                continue;
            }
            if (0..p).all(|r| self.pattern.contains(r as usize) == self.pattern.contains((r % d) as usize)) {
                return self.with_period(d);
            }
        }
        self.clone()
    }

    /// Re-expresses the pattern over a multiple (or divisor, if valid) of the period.
    fn with_period(&self, q: u64) -> Tail {
        let bits =
            BitSet::from_indices(q as usize, (0..q).filter(|&r| self.contains(r as i64)).map(|r| r as usize))
                .expect("residues < q");
        Tail { period: q, pattern: bits }
    }

    fn shifted(&self, t: i64) -> Tail {
        let p = self.period as i64;
        let bits = BitSet::from_indices(
            p as usize,
            self.pattern.iter().map(|r| (r as i64 + t).rem_euclid(p) as usize),
        )
        .expect("residues < p");
        Tail { period: self.period, pattern: bits }
    }
}

/// Eventually-periodic subset of the integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ZSetDesc {
    lo: i64,
    hi: i64,
    head: Vec<i64>,
    left: Option<Tail>,
    right: Option<Tail>,
}

impl ZSetDesc {
    pub fn new<I: IntoIterator<Item = i64>>(
        lo: i64,
        hi: i64,
        head: I,
        left: Option<Tail>,
        right: Option<Tail>,
    ) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInput(alloc::format!("head window [{lo}, {hi}) is reversed")));
        }
        let mut head: Vec<i64> = head.into_iter().collect();
        head.sort_unstable();
        head.dedup();
        if let Some(&x) = head.iter().find(|&&x| x < lo || x >= hi) {
            return Err(Error::InvalidInput(alloc::format!("head member {x} outside [{lo}, {hi})")));
        }
        Ok(ZSetDesc { lo, hi, head, left, right })
    }

    /// Finite set; both tails absent.
    pub fn finite<I: IntoIterator<Item = i64>>(elems: I) -> Self {
        let mut head: Vec<i64> = elems.into_iter().collect();
        head.sort_unstable();
        head.dedup();
        let (lo, hi) = match (head.first(), head.last()) {
            (Some(&a), Some(&b)) => (a, b + 1),
            _ => (0, 0),
        };
        ZSetDesc { lo, hi, head, left: None, right: None }
    }

    /// Purely periodic set `{n : n mod period ∈ pattern}`.
    pub fn periodic<I: IntoIterator<Item = u64>>(period: u64, pattern: I) -> Result<Self> {
        let t = Tail::new(period, pattern)?;
        Ok(ZSetDesc { lo: 0, hi: 0, head: Vec::new(), left: Some(t.clone()), right: Some(t) })
    }

    pub fn integers() -> Self {
        ZSetDesc { lo: 0, hi: 0, head: Vec::new(), left: Some(Tail::full()), right: Some(Tail::full()) }
    }

    pub fn nonnegative() -> Self {
        ZSetDesc { lo: 0, hi: 0, head: Vec::new(), left: None, right: Some(Tail::full()) }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn head(&self) -> &[i64] {
        &self.head
    }

    pub fn left(&self) -> Option<&Tail> {
        self.left.as_ref()
    }

    pub fn right(&self) -> Option<&Tail> {
        self.right.as_ref()
    }

    /// Left tail with an absent tail read as the empty pattern.
    pub fn left_or_empty(&self) -> Tail {
        self.left.clone().unwrap_or_else(Tail::empty)
    }

    pub fn right_or_empty(&self) -> Tail {
        self.right.clone().unwrap_or_else(Tail::empty)
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < self.lo {
            self.left.as_ref().is_some_and(|t| t.contains(n))
        } else if n >= self.hi {
            self.right.as_ref().is_some_and(|t| t.contains(n))
        } else {
            self.head.binary_search(&n).is_ok()
        }
    }

    pub fn is_empty(&self) -> bool {
        self.head.is_empty()
            && self.left.as_ref().is_none_or(Tail::is_empty)
            && self.right.as_ref().is_none_or(Tail::is_empty)
    }

    /// True when both tails are absent or empty.
    pub fn is_finite(&self) -> bool {
        self.left.as_ref().is_none_or(Tail::is_empty) && self.right.as_ref().is_none_or(Tail::is_empty)
    }

    pub fn upper_density(&self) -> Rational {
        max(tail_density(&self.left), tail_density(&self.right))
    }

    pub fn lower_density(&self) -> Rational {
        min(tail_density(&self.left), tail_density(&self.right))
    }

    /// `S + t`.
    pub fn shift(&self, t: i64) -> ZSetDesc {
        ZSetDesc {
            lo: self.lo + t,
            hi: self.hi + t,
            head: self.head.iter().map(|x| x + t).collect(),
            left: self.left.as_ref().map(|s| s.shifted(t)),
            right: self.right.as_ref().map(|s| s.shifted(t)),
        }
    }

    /// Canonical form: minimal tail periods, empty tails dropped and the head
    /// window shrunk to `[first disagreement with the left tail, last
    /// disagreement with the right tail]`. Two descriptors denote the same set
    /// iff their normal forms are equal.
    pub fn normalized(&self) -> ZSetDesc {
        let left = self.left_or_empty().minimal();
        let right = self.right_or_empty().minimal();
        let q = left.period.lcm(&right.period) as i64;
        // Below `lo` the set follows the left tail, so one lcm period of
        // look-back finds every left/right disagreement there is.
        let last_off_right = (self.lo - q..self.hi).rev().find(|&n| self.contains(n) != right.contains(n));
        let first_off_left = (self.lo..self.hi + q).find(|&n| self.contains(n) != left.contains(n));
        let (lo, hi) = match (first_off_left, last_off_right) {
            (Some(l), Some(h)) if l <= h => (l, h + 1),
            (Some(_), Some(h)) => (h + 1, h + 1),
            _ => (0, 0),
        };
        let head = (lo..hi).filter(|&n| self.contains(n)).collect();
        ZSetDesc {
            lo,
            hi,
            head,
            left: (!left.is_empty()).then_some(left),
            right: (!right.is_empty()).then_some(right),
        }
    }

    /// Set equality.
    pub fn same_set(&self, other: &ZSetDesc) -> bool {
        self.normalized() == other.normalized()
    }

    /// Exact `A + B`.
    ///
    /// Beyond `hi_A + hi_B + P` (and below `lo_A + lo_B - P - 2`), with `P`
    /// the lcm of all tail periods, every piece-by-piece contribution is
    /// `P`-periodic, so membership on the widened head window plus one period
    /// on each side determines the result.
    pub fn sumset(&self, other: &ZSetDesc) -> Result<ZSetDesc> {
        if self.is_empty() || other.is_empty() {
            return Err(Error::EmptyOperand("zsumset operand"));
        }
        let period = [&self.left, &self.right, &other.left, &other.right]
            .iter()
            .filter_map(|t| t.as_ref().filter(|t| !t.is_empty()))
            .fold(1u64, |acc, t| acc.lcm(&t.period));
        let p = period as i64;
        let lo = self.lo + other.lo - p - 2;
        let hi = self.hi + other.hi + p;
        let pa = self.pieces();
        let pb = other.pieces();
        let member = |x: i64| pa.iter().any(|u| pb.iter().any(|v| piece_sum_contains(u, v, x)));

        let head: Vec<i64> = (lo..hi).filter(|&x| member(x)).collect();
        let tail_from = |start: i64| {
            let residues = (start..start + p).filter(|&x| member(x)).map(|x| x.rem_euclid(p) as u64);
            Tail::new(period, residues).expect("residues < period")
        };
        let right = tail_from(hi);
        let left = tail_from(lo - p);
        let d = ZSetDesc {
            lo,
            hi,
            head,
            left: (!left.is_empty()).then_some(left),
            right: (!right.is_empty()).then_some(right),
        };
        Ok(d.normalized())
    }

    /// `k`-fold sumset.
    pub fn iterated(&self, k: usize) -> Result<ZSetDesc> {
        if k == 0 {
            return Err(Error::InvalidInput("k-fold sumset needs k >= 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.sumset(self)?;
        }
        Ok(acc)
    }

    fn pieces(&self) -> Vec<Piece<'_>> {
        let mut out = Vec::with_capacity(3);
        if !self.head.is_empty() {
            out.push(Piece::Finite(&self.head));
        }
        if let Some(t) = self.left.as_ref().filter(|t| !t.is_empty()) {
            out.push(Piece::Below(self.lo, t));
        }
        if let Some(t) = self.right.as_ref().filter(|t| !t.is_empty()) {
            out.push(Piece::From(self.hi, t));
        }
        out
    }
}

fn tail_density(t: &Option<Tail>) -> Rational {
    t.as_ref().map_or_else(|| int(0), Tail::density)
}

enum Piece<'a> {
    Finite(&'a [i64]),
    /// `{n < bound : n ∈ tail}`
    Below(i64, &'a Tail),
    /// `{n >= bound : n ∈ tail}`
    From(i64, &'a Tail),
}

impl Piece<'_> {
    fn contains(&self, n: i64) -> bool {
        match *self {
            Piece::Finite(h) => h.binary_search(&n).is_ok(),
            Piece::Below(b, t) => n < b && t.contains(n),
            Piece::From(b, t) => n >= b && t.contains(n),
        }
    }
}

// Is x = a + b with a in u, b in v? Ray-by-ray cases reduce to a search over
// one lcm period because both residue conditions are periodic in a.
fn piece_sum_contains(u: &Piece<'_>, v: &Piece<'_>, x: i64) -> bool {
    match (u, v) {
        (Piece::Finite(h), _) => h.iter().any(|&a| v.contains(x - a)),
        (_, Piece::Finite(_)) => piece_sum_contains(v, u, x),
        (Piece::From(h1, t1), Piece::From(h2, t2)) => {
            let q = t1.period.lcm(&t2.period) as i64;
            let top = min(x - h2, h1 + q - 1);
            (*h1..=top).any(|a| t1.contains(a) && t2.contains(x - a))
        }
        (Piece::Below(l1, t1), Piece::Below(l2, t2)) => {
            let q = t1.period.lcm(&t2.period) as i64;
            let bottom = max(x - l2 + 1, l1 - q);
            (bottom..*l1).any(|a| t1.contains(a) && t2.contains(x - a))
        }
        (Piece::Below(l1, t1), Piece::From(h2, t2)) => {
            let q = t1.period.lcm(&t2.period) as i64;
            let top = min(l1 - 1, x - h2);
            (top - q + 1..=top).any(|a| t1.contains(a) && t2.contains(x - a))
        }
        (Piece::From(..), Piece::Below(..)) => piece_sum_contains(v, u, x),
    }
}

pub fn banach_upper(s: &ZSetDesc) -> Rational {
    s.upper_density()
}

pub fn banach_lower(s: &ZSetDesc) -> Rational {
    s.lower_density()
}

pub fn zsumset(a: &ZSetDesc, b: &ZSetDesc) -> Result<ZSetDesc> {
    a.sumset(b)
}

/// `|S ∩ [a, b)| / (b - a)`. An estimate only; not a Banach density.
pub fn window_density(s: &ZSetDesc, a: i64, b: i64) -> Result<Rational> {
    if a >= b {
        return Err(Error::InvalidInput(alloc::format!("empty window [{a}, {b})")));
    }
    let count = (a..b).filter(|&n| s.contains(n)).count();
    Ok(from_usize(count) / Rational::from_integer((b - a).into()))
}
