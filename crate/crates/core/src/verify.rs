//! One check per inequality, each comparing two exact rationals.
//!
//! Inequalities with `k`-th roots are raised to the `k`-th power first, so
//! no check ever leaves the rationals. A check whose hypotheses fail is
//! reported as vacuous and counted separately from passes.
//!
//! Statements quantified over every ergodic `G`-space are exercised on
//! whatever concrete systems the caller supplies; see [`crate::campaign`]
//! for the generated families.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::group::FiniteSet;
use crate::gspace::{ActionSystem, StateSubset};
use crate::levelset::{chebyshev, LevelProfile};
use crate::magnification::{mag_ratio, mag_ratio_delta};
use crate::rational::{format as fmt_q, from_usize, in_unit_interval, pow, Rational};
use crate::zdensity::ZSetDesc;
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Relation {
    Lt,
    Le,
    Eq,
    Ge,
    Gt,
}

impl Relation {
    pub fn eval(self, lhs: &Rational, rhs: &Rational) -> bool {
        let o = lhs.cmp(rhs);
        match self {
            Relation::Lt => o == Ordering::Less,
            Relation::Le => o != Ordering::Greater,
            Relation::Eq => o == Ordering::Equal,
            Relation::Ge => o != Ordering::Less,
            Relation::Gt => o == Ordering::Greater,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ge => ">=",
            Relation::Gt => ">",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Outcome {
    Pass,
    Fail,
    Vacuous,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub instance: String,
    pub lhs: Rational,
    pub relation: Relation,
    pub rhs: Rational,
    /// `relation.eval(lhs, rhs)`.
    pub holds: bool,
    /// A hypothesis failed; `lhs` and `rhs` are both zero.
    pub vacuous: bool,
    pub witness: String,
}

impl CheckResult {
    pub fn compare(
        name: &'static str,
        instance: String,
        lhs: Rational,
        relation: Relation,
        rhs: Rational,
        witness: String,
    ) -> Self {
        let holds = relation.eval(&lhs, &rhs);
        CheckResult { name, instance, lhs, relation, rhs, holds, vacuous: false, witness }
    }

    pub fn vacuous(name: &'static str, instance: String, reason: &str) -> Self {
        CheckResult {
            name,
            instance,
            lhs: Rational::zero(),
            relation: Relation::Eq,
            rhs: Rational::zero(),
            holds: true,
            vacuous: true,
            witness: format!("vacuous: {reason}"),
        }
    }

    pub fn outcome(&self) -> Outcome {
        match (self.vacuous, self.holds) {
            (true, _) => Outcome::Vacuous,
            (false, true) => Outcome::Pass,
            (false, false) => Outcome::Fail,
        }
    }

    pub fn is_equality(&self) -> bool {
        !self.vacuous && self.lhs == self.rhs
    }
}

fn list(it: impl Iterator<Item = usize>) -> String {
    let mut s = String::from("[");
    for (i, x) in it.enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{x}");
    }
    s.push(']');
    s
}

/// Compact description of `(system, A, B)` used as the instance label.
pub fn describe(sys: &ActionSystem, a: &FiniteSet, b: &StateSubset) -> String {
    format!("G={:?} X={} A={} B={}", sys.group().orders(), sys.states(), list(a.iter()), list(b.iter()))
}

fn mu(sys: &ActionSystem, s: &StateSubset) -> Rational {
    sys.measure_of(s)
}

fn mu_ab(sys: &ActionSystem, a: &FiniteSet, b: &StateSubset) -> Result<Rational> {
    Ok(sys.measure_of(&sys.apply_set(a, b)?))
}

fn exponent(k: usize) -> Result<u32> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    u32::try_from(k).map_err(|_| Error::Overflow)
}

fn check_eps(eps: &Rational) -> Result<()> {
    if *eps <= Rational::zero() {
        return Err(Error::InvalidInput(format!("epsilon {} must be positive", fmt_q(eps))));
    }
    Ok(())
}

/// `μ(AB)^k >= μ(B)^{k-1}` when `A` is an ergodic basis of order `k`.
pub fn check_thm1(sys: &ActionSystem, a: &FiniteSet, b: &StateSubset, k: usize) -> Result<CheckResult> {
    const NAME: &str = "thm1";
    let e = exponent(k)?;
    let inst = describe(sys, a, b);
    if !sys.is_ergodic().0 {
        return Ok(CheckResult::vacuous(NAME, inst, "system not ergodic"));
    }
    let mb = mu(sys, b);
    if mb.is_zero() {
        return Ok(CheckResult::vacuous(NAME, inst, "mu(B) = 0"));
    }
    if a.is_empty() || !sys.is_ergodic_basis(a, k)? {
        return Ok(CheckResult::vacuous(NAME, inst, "A is not an ergodic basis of order k"));
    }
    let mab = mu_ab(sys, a, b)?;
    Ok(CheckResult::compare(NAME, inst, pow(&mab, e), Relation::Ge, pow(&mb, e - 1), format!("k={k}")))
}

/// `d*(A^k) μ(B)^{k-1} <= μ(AB)^k`.
pub fn check_thm2(sys: &ActionSystem, a: &FiniteSet, b: &StateSubset, k: usize) -> Result<CheckResult> {
    const NAME: &str = "thm2";
    let e = exponent(k)?;
    let inst = describe(sys, a, b);
    if !sys.is_ergodic().0 {
        return Ok(CheckResult::vacuous(NAME, inst, "system not ergodic"));
    }
    let mb = mu(sys, b);
    if mb.is_zero() || a.is_empty() {
        return Ok(CheckResult::vacuous(NAME, inst, "mu(B) = 0 or A empty"));
    }
    sys.check_acting(a)?;
    let dk = a.iterated(k)?.density();
    let mab = mu_ab(sys, a, b)?;
    Ok(CheckResult::compare(
        NAME,
        inst,
        &dk * pow(&mb, e - 1),
        Relation::Le,
        pow(&mab, e),
        format!("k={k} d(kA)={}", fmt_q(&dk)),
    ))
}

/// `|A+B|^k >= |kA| |B|^{k-1}` in a finite group.
pub fn check_cor2_group(a: &FiniteSet, b: &FiniteSet, k: usize) -> Result<CheckResult> {
    let e = exponent(k)?;
    let inst = format!("G={:?} A={} B={}", a.group().orders(), list(a.iter()), list(b.iter()));
    if a.is_empty() || b.is_empty() {
        return Ok(CheckResult::vacuous("cor2_group", inst, "empty operand"));
    }
    let sum = a.sumset(b)?.len();
    let ka = a.iterated(k)?.len();
    let lhs = pow(&from_usize(sum), e);
    let rhs = from_usize(ka) * pow(&from_usize(b.len()), e - 1);
    Ok(CheckResult::compare("cor2_group", inst, lhs, Relation::Ge, rhs, format!("k={k} |A+B|={sum} |kA|={ka}")))
}

/// The four density bounds on the integers for eventually-periodic `A`, `B`:
/// `d*(A+B)^k >= d*(B)^{k-1}` and `d_*(A+B)^k >= d_*(B)^{k-1}` when `kA` is
/// thick (`d*(kA) = 1`, which makes it an ergodic set), and
/// `d*(A+B)^k >= d*(kA) d*(B)^{k-1}`, `d_*(A+B)^k >= d*(kA) d_*(B)^{k-1}`.
///
/// For `k = 1` the exponent `k - 1` is zero; a zero density base is then
/// treated as vacuous rather than as `0^0 = 1`.
pub fn check_cor1_cor3_zline(a: &ZSetDesc, b: &ZSetDesc, k: usize) -> Result<Vec<CheckResult>> {
    let e = exponent(k)?;
    let inst = format!("A={} B={} k={k}", crate::correspondence::describe(a), crate::correspondence::describe(b));
    let names = ["cor1_upper", "cor1_lower", "cor2_zline", "cor3_zline"];
    if a.is_empty() || b.is_empty() {
        return Ok(names.iter().map(|n| CheckResult::vacuous(n, inst.clone(), "empty operand")).collect());
    }
    let sum = a.sumset(b)?;
    let dka = a.iterated(k)?.upper_density();
    let (su, sl) = (sum.upper_density(), sum.lower_density());
    let (bu, bl) = (b.upper_density(), b.lower_density());
    let witness = format!("d*(kA)={} d*(A+B)={} d_*(A+B)={}", fmt_q(&dka), fmt_q(&su), fmt_q(&sl));
    let one = Rational::one();
    let mut out = Vec::with_capacity(4);
    let cases = [
        (names[0], &su, &bu, dka == one, "kA not thick"),
        (names[1], &sl, &bl, dka == one, "kA not thick"),
        (names[2], &su, &bu, !dka.is_zero(), "d*(kA) = 0"),
        (names[3], &sl, &bl, !dka.is_zero(), "d*(kA) = 0"),
    ];
    for (i, (name, lhs, base, hyp, why)) in cases.into_iter().enumerate() {
        if !hyp {
            out.push(CheckResult::vacuous(name, inst.clone(), why));
        } else if e == 1 && base.is_zero() {
            out.push(CheckResult::vacuous(name, inst.clone(), "k = 1 with zero density base"));
        } else {
            let factor = if i < 2 { one.clone() } else { dka.clone() };
            let rhs = factor * pow(base, e - 1);
            out.push(CheckResult::compare(name, inst.clone(), pow(lhs, e), Relation::Ge, rhs, witness.clone()));
        }
    }
    Ok(out)
}

/// `c(A,B)^k >= c(kA, B)`.
pub fn check_prop12(sys: &ActionSystem, a: &FiniteSet, b: &StateSubset, k: usize) -> Result<CheckResult> {
    const NAME: &str = "prop12";
    let e = exponent(k)?;
    let inst = describe(sys, a, b);
    if a.is_empty() || mu(sys, b).is_zero() {
        return Ok(CheckResult::vacuous(NAME, inst, "A empty or mu(B) = 0"));
    }
    let c1 = mag_ratio(sys, a, b)?;
    let ck = mag_ratio(sys, &a.iterated(k)?, b)?;
    let witness = format!(
        "k={k} c(A,B)={} via {} c(kA,B)={} via {}",
        fmt_q(&c1.value),
        list(c1.witness.iter()),
        fmt_q(&ck.value),
        list(ck.witness.iter())
    );
    Ok(CheckResult::compare(NAME, inst, pow(&c1.value, e), Relation::Ge, ck.value, witness))
}

fn sub_instance(sys: &ActionSystem, a: &FiniteSet, b: &StateSubset, bp: &StateSubset) -> Result<String> {
    sys.check_states(bp)?;
    Ok(format!("{} B'={}", describe(sys, a, b), list(bp.iter())))
}

/// `μ(AB') <= (1+ε) μ(B') c(A,B)`, with `c(A,B)`; `None` if `B'` is not a
/// positive-measure subset of `B` or the premise fails.
fn petridis_premise(
    sys: &ActionSystem,
    a: &FiniteSet,
    b: &StateSubset,
    bp: &StateSubset,
    eps: &Rational,
) -> Result<core::result::Result<Rational, &'static str>> {
    if a.is_empty() {
        return Ok(Err("A empty"));
    }
    if !bp.is_subset(b) || mu(sys, bp).is_zero() {
        return Ok(Err("B' is not a positive-measure subset of B"));
    }
    let c = mag_ratio(sys, a, b)?.value;
    let lhs = mu_ab(sys, a, bp)?;
    let rhs = (Rational::one() + eps) * mu(sys, bp) * &c;
    Ok(if lhs <= rhs { Ok(c) } else { Err("premise violated") })
}

/// `μ(FAB') <= ((1+ε) μ(FB') + ε |F| μ(B')) c(A,B)` under the premise.
pub fn check_petridis_lemma(
    sys: &ActionSystem,
    a: &FiniteSet,
    b: &StateSubset,
    bp: &StateSubset,
    f: &FiniteSet,
    eps: &Rational,
) -> Result<CheckResult> {
    const NAME: &str = "petridis_lemma";
    check_eps(eps)?;
    sys.check_acting(f)?;
    let inst = format!("{} F={} eps={}", sub_instance(sys, a, b, bp)?, list(f.iter()), fmt_q(eps));
    if f.is_empty() {
        return Ok(CheckResult::vacuous(NAME, inst, "F empty"));
    }
    let c = match petridis_premise(sys, a, b, bp, eps)? {
        Ok(c) => c,
        Err(why) => return Ok(CheckResult::vacuous(NAME, inst, why)),
    };
    let lhs = mu_ab(sys, &f.sumset(a)?, bp)?;
    let mfb = mu_ab(sys, f, bp)?;
    let rhs = ((Rational::one() + eps) * mfb + eps * from_usize(f.len()) * mu(sys, bp)) * &c;
    Ok(CheckResult::compare(NAME, inst, lhs, Relation::Le, rhs, format!("c(A,B)={}", fmt_q(&c))))
}

/// `D_0 = 0`, `D_k = 2 D_{k-1} + |A|^k`.
pub fn petridis_constant(k: usize, a_len: usize) -> BigInt {
    let mut d = BigInt::zero();
    let mut p = BigInt::one();
    for _ in 0..k {
        p *= a_len;
        d = d * 2 + &p;
    }
    d
}

/// `μ(A^{k+1}B') <= ((1+ε)^{k+1} c^{k+1} + ε D_k c^k) μ(B')` for `0 < ε < 1`
/// under the premise, `c = c(A,B)`.
pub fn check_petridis_k(
    sys: &ActionSystem,
    a: &FiniteSet,
    b: &StateSubset,
    bp: &StateSubset,
    eps: &Rational,
    k: usize,
) -> Result<CheckResult> {
    const NAME: &str = "petridis_k";
    check_eps(eps)?;
    if *eps >= Rational::one() {
        return Err(Error::InvalidInput(format!("epsilon {} must be below 1", fmt_q(eps))));
    }
    let e = u32::try_from(k).map_err(|_| Error::Overflow)?;
    let inst = format!("{} eps={} k={k}", sub_instance(sys, a, b, bp)?, fmt_q(eps));
    let c = match petridis_premise(sys, a, b, bp, eps)? {
        Ok(c) => c,
        Err(why) => return Ok(CheckResult::vacuous(NAME, inst, why)),
    };
    let d = petridis_constant(k, a.len());
    let lhs = mu_ab(sys, &a.iterated(k + 1)?, bp)?;
    let one_eps = Rational::one() + eps;
    let bound = pow(&one_eps, e + 1) * pow(&c, e + 1) + eps * Rational::from_integer(d.clone()) * pow(&c, e);
    let rhs = bound * mu(sys, bp);
    Ok(CheckResult::compare(NAME, inst, lhs, Relation::Le, rhs, format!("c(A,B)={} D_k={d}", fmt_q(&c))))
}

/// Largest `|B ∩ supp μ|` for the superset search of [`check_prop13_increment`].
pub const INCREMENT_GUARD: usize = 20;

/// Either `μ(B') >= δ μ(B)`, or some `B' ⊊ B'' ⊆ B` still satisfies
/// `μ(A^k B'') (1-δ)^k μ(B)^k <= μ(B'') μ(AB)^k`.
pub fn check_prop13_increment(
    sys: &ActionSystem,
    a: &FiniteSet,
    b: &StateSubset,
    bp: &StateSubset,
    delta: &Rational,
    k: usize,
) -> Result<CheckResult> {
    const NAME: &str = "prop13_increment";
    let e = exponent(k)?;
    if *delta <= Rational::zero() || *delta >= Rational::one() {
        return Err(Error::InvalidInput(format!("delta {} outside (0, 1)", fmt_q(delta))));
    }
    let inst = format!("{} delta={} k={k}", sub_instance(sys, a, b, bp)?, fmt_q(delta));
    let supp_b = b.intersection(sys.support());
    if supp_b.len() > INCREMENT_GUARD {
        return Err(Error::GuardExceeded { size: supp_b.len(), limit: INCREMENT_GUARD });
    }
    if a.is_empty() || !bp.is_subset(b) || mu(sys, bp).is_zero() {
        return Ok(CheckResult::vacuous(NAME, inst, "A empty or B' not a positive-measure subset of B"));
    }
    let ak = a.iterated(k)?;
    let scale = pow(&(Rational::one() - delta), e) * pow(&mu(sys, b), e);
    let growth = pow(&mu_ab(sys, a, b)?, e);
    let fits = |s: &StateSubset| -> Result<bool> { Ok(mu_ab(sys, &ak, s)? * &scale <= mu(sys, s) * &growth) };
    if !fits(bp)? {
        return Ok(CheckResult::vacuous(NAME, inst, "B' violates the increment inequality"));
    }
    let (mbp, mb) = (mu(sys, bp), mu(sys, b));
    if mbp >= delta * &mb {
        return Ok(CheckResult::compare(NAME, inst, mbp, Relation::Ge, delta * mb, String::from("first branch")));
    }
    let free: Vec<usize> = supp_b.difference(bp).to_vec();
    for mask in 1u32..(1u32 << free.len()) {
        let extra = StateSubset::new(sys.states(), (0..free.len()).filter(|&i| mask >> i & 1 == 1).map(|i| free[i]))?;
        let cand = bp.union(&extra);
        if fits(&cand)? {
            let lhs = mu_ab(sys, &ak, &cand)? * &scale;
            let rhs = mu(sys, &cand) * &growth;
            return Ok(CheckResult::compare(NAME, inst, lhs, Relation::Le, rhs, format!("B''={}", list(cand.iter()))));
        }
    }
    let w = String::from("no superset found");
    Ok(CheckResult::compare(NAME, inst, Rational::one(), Relation::Le, Rational::zero(), w))
}

/// `c_δ(A,B) = 1/μ(B)` for an ergodic set `A`.
pub fn check_prop2_minmax(sys: &ActionSystem, a: &FiniteSet, b: &StateSubset, delta: &Rational) -> Result<CheckResult> {
    const NAME: &str = "prop2_minmax";
    if !in_unit_interval(delta) {
        return Err(Error::InvalidInput(format!("delta {} outside (0, 1]", fmt_q(delta))));
    }
    let inst = format!("{} delta={}", describe(sys, a, b), fmt_q(delta));
    if !sys.is_ergodic().0 {
        return Ok(CheckResult::vacuous(NAME, inst, "system not ergodic"));
    }
    let mb = mu(sys, b);
    if mb.is_zero() {
        return Ok(CheckResult::vacuous(NAME, inst, "mu(B) = 0"));
    }
    if !sys.is_ergodic_set(a)? {
        return Ok(CheckResult::vacuous(NAME, inst, "A is not an ergodic set"));
    }
    let r = mag_ratio_delta(sys, a, b, delta)?;
    let w = format!("witness={}", list(r.witness.iter()));
    Ok(CheckResult::compare(NAME, inst, r.value, Relation::Eq, mb.recip(), w))
}

/// `c(kA, B) μ(B)^k <= μ(AB)^k`.
pub fn check_prop21(sys: &ActionSystem, a: &FiniteSet, b: &StateSubset, k: usize) -> Result<CheckResult> {
    const NAME: &str = "prop21";
    let e = exponent(k)?;
    let inst = describe(sys, a, b);
    let mb = mu(sys, b);
    if a.is_empty() || mb.is_zero() {
        return Ok(CheckResult::vacuous(NAME, inst, "A empty or mu(B) = 0"));
    }
    let ck = mag_ratio(sys, &a.iterated(k)?, b)?;
    let mab = mu_ab(sys, a, b)?;
    let w = format!("k={k} c(kA,B)={}", fmt_q(&ck.value));
    Ok(CheckResult::compare(NAME, inst, ck.value * pow(&mb, e), Relation::Le, pow(&mab, e), w))
}

/// `d*(A) <= μ(AB)` and `d*(A) <= c(A,B) μ(B)` on an ergodic system.
pub fn check_prop22(sys: &ActionSystem, a: &FiniteSet, b: &StateSubset) -> Result<Vec<CheckResult>> {
    let inst = describe(sys, a, b);
    let mb = mu(sys, b);
    let why = if !sys.is_ergodic().0 {
        Some("system not ergodic")
    } else if mb.is_zero() || a.is_empty() {
        Some("mu(B) = 0 or A empty")
    } else {
        None
    };
    if let Some(why) = why {
        return Ok(alloc::vec![
            CheckResult::vacuous("prop22", inst.clone(), why),
            CheckResult::vacuous("prop22_ratio", inst, why)
        ]);
    }
    sys.check_acting(a)?;
    let d = a.density();
    let c = mag_ratio(sys, a, b)?.value;
    Ok(alloc::vec![
        CheckResult::compare("prop22", inst.clone(), d.clone(), Relation::Le, mu_ab(sys, a, b)?, String::new()),
        CheckResult::compare("prop22_ratio", inst, d, Relation::Le, c.clone() * mb, format!("c(A,B)={}", fmt_q(&c))),
    ])
}

/// Layer-cake identity, `A·E_t ⊆ F_t` at every threshold, and positive
/// `η`-mass of `{φ < ∫ φ dη + ε}` for each `ε`.
pub fn check_levelset(
    profile: &LevelProfile,
    sys: &ActionSystem,
    a: &FiniteSet,
    epsilons: &[Rational],
) -> Result<Vec<CheckResult>> {
    sys.check_acting(a)?;
    for eps in epsilons {
        check_eps(eps)?;
    }
    let inst = format!(
        "G={:?} X={} A={} m={} f={}",
        sys.group().orders(),
        sys.states(),
        list(a.iter()),
        profile.sets().len(),
        profile.values().iter().map(fmt_q).collect::<Vec<_>>().join(",")
    );
    let mut out = Vec::with_capacity(2 + epsilons.len());
    out.push(CheckResult::compare(
        "layer_cake",
        inst.clone(),
        profile.integral(sys)?,
        Relation::Eq,
        profile.layer_cake(sys)?,
        format!("thresholds={}", profile.thresholds().len()),
    ));
    let bad = profile.inclusion_failures(sys, a)?;
    let w = match bad.first() {
        Some(t) => format!("first failure t={}", fmt_q(t)),
        None => String::new(),
    };
    out.push(CheckResult::compare("inclusion", inst.clone(), from_usize(bad.len()), Relation::Eq, Rational::zero(), w));
    let cells = profile.threshold_measure(sys, a)?;
    for eps in epsilons {
        out.push(match &cells {
            None => CheckResult::vacuous("chebyshev", inst.clone(), "f = 0 almost everywhere"),
            Some(cells) => {
                let (mean, mass) = chebyshev(cells, eps);
                let w = format!("eps={} mean={}", fmt_q(eps), fmt_q(&mean));
                CheckResult::compare("chebyshev", inst.clone(), mass, Relation::Gt, Rational::zero(), w)
            }
        });
    }
    Ok(out)
}

/// `μ(A_y^{-1} B)` is the same for every `y` of a transitive `Y`, where
/// `A_y = {g : g·y ∈ A}`; `lhs` is the largest value, `rhs` the smallest.
pub fn check_transitive_point(
    sys_y: &ActionSystem,
    a_clopen: &StateSubset,
    sys_x: &ActionSystem,
    b: &StateSubset,
) -> Result<CheckResult> {
    const NAME: &str = "transitive_point";
    if sys_y.group() != sys_x.group() {
        return Err(Error::GroupMismatch("Y and X carry different groups".into()));
    }
    sys_y.check_states(a_clopen)?;
    sys_x.check_states(b)?;
    let inst = format!(
        "G={:?} Y={} A={} X={} B={}",
        sys_x.group().orders(),
        sys_y.states(),
        list(a_clopen.iter()),
        sys_x.states(),
        list(b.iter())
    );
    let orbits = sys_y.orbits().orbits.len();
    if orbits != 1 {
        return Err(Error::NoTransitivePoint(orbits));
    }
    if a_clopen.is_empty() {
        return Ok(CheckResult::vacuous(NAME, inst, "A empty"));
    }
    let group = sys_y.group();
    let values = (0..sys_y.states())
        .map(|y| {
            let ay = FiniteSet::new(group, (0..group.order()).filter(|&g| a_clopen.contains(sys_y.act(g, y))))?;
            mu_ab(sys_x, &ay.negate(), b)
        })
        .collect::<Result<Vec<_>>>()?;
    let max = values.iter().max().expect("Y non-empty").clone();
    let min = values.iter().min().expect("Y non-empty").clone();
    let w = format!("value at y_o=0: {}", fmt_q(&values[0]));
    Ok(CheckResult::compare(NAME, inst, max, Relation::Eq, min, w))
}
