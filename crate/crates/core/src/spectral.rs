//! Characters and character sums on finite abelian groups.
//!
//! The dual of `Z/n_1 × .. × Z/n_m` is indexed like the group itself; the
//! character with index `χ` is `g ↦ exp(2πi Σ_j χ_j g_j / n_j)`. This is the
//! only module that uses floating point. Transform cross-checks use an
//! absolute tolerance of [`TOLERANCE`].

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::TAU;

use num_complex::Complex64;

use crate::group::{FiniteSet, GroupSpec};
use crate::{Error, Result};

pub const TOLERANCE: f64 = 1e-9;

fn unit(turns: f64) -> Complex64 {
    let (s, c) = libm::sincos(TAU * turns);
    Complex64::new(c, s)
}

/// `exp(2πi m / n)` with `m` reduced first.
fn root(m: u128, n: u128) -> Complex64 {
    unit((m % n) as f64 / n as f64)
}

pub fn char_value(group: &GroupSpec, chi: usize, g: usize) -> Complex64 {
    let turns: f64 = group
        .decode(chi)
        .iter()
        .zip(group.decode(g))
        .zip(group.orders())
        .map(|((&c, x), &n)| ((c * x) % n) as f64 / n as f64)
        .sum();
    unit(turns - libm::floor(turns))
}

/// `F(χ) = Σ_g w(g) conj(χ(g))` for every character, one cyclic factor at a
/// time: radix-2 FFT on power-of-two factors, direct transform otherwise.
pub fn group_dft(group: &GroupSpec, weights: &[Complex64]) -> Result<Vec<Complex64>> {
    if weights.len() != group.order() {
        return Err(Error::InvalidInput(alloc::format!(
            "{} weights for a group of order {}",
            weights.len(),
            group.order()
        )));
    }
    let mut data = weights.to_vec();
    let mut stride = 1;
    let mut line = Vec::new();
    for &n in group.orders() {
        let block = stride * n;
        let plan = Plan::new(n);
        for base in (0..data.len()).step_by(block) {
            for off in 0..stride {
                line.clear();
                line.extend((0..n).map(|k| data[base + off + k * stride]));
                plan.run(&mut line);
                for (k, v) in line.iter().enumerate() {
                    data[base + off + k * stride] = *v;
                }
            }
        }
        stride = block;
    }
    Ok(data)
}

pub fn group_dft_real(group: &GroupSpec, weights: &[f64]) -> Result<Vec<Complex64>> {
    let w: Vec<Complex64> = weights.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    group_dft(group, &w)
}

enum Plan {
    Radix2 { twiddles: Vec<Complex64>, bits: u32 },
    Direct { roots: Vec<Complex64> },
}

impl Plan {
    fn new(n: usize) -> Plan {
        if n.is_power_of_two() && n > 1 {
            let twiddles = (0..n / 2).map(|k| root((n - k) as u128, n as u128)).collect();
            Plan::Radix2 { twiddles, bits: n.trailing_zeros() }
        } else {
            Plan::Direct { roots: (0..n).map(|k| root(((n - k) % n) as u128, n as u128)).collect() }
        }
    }

    fn run(&self, x: &mut Vec<Complex64>) {
        let n = x.len();
        match self {
            Plan::Direct { roots } => {
                let out: Vec<Complex64> =
                    (0..n).map(|k| (0..n).map(|m| x[m] * roots[(m * k) % n]).sum()).collect();
                *x = out;
            }
            Plan::Radix2 { twiddles, bits } => {
                for i in 0..n {
                    let j = i.reverse_bits() >> (usize::BITS - bits);
                    if i < j {
                        x.swap(i, j);
                    }
                }
                let mut len = 2;
                while len <= n {
                    let step = n / len;
                    for start in (0..n).step_by(len) {
                        for k in 0..len / 2 {
                            let w = twiddles[k * step];
                            let u = x[start + k];
                            let v = x[start + k + len / 2] * w;
                            x[start + k] = u + v;
                            x[start + k + len / 2] = u - v;
                        }
                    }
                    len <<= 1;
                }
            }
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct EquidistReport {
    /// `max_{χ ≠ 1} |Σ_{g ∈ A} χ(g)| / |A|`; 0 for the trivial group.
    pub defect: f64,
    /// Smallest character index attaining the defect.
    pub worst: Option<usize>,
    /// `|Σ_{g ∈ A} χ(g)| / |A|` for every character, trivial one included.
    pub magnitudes: Vec<f64>,
}

pub fn equidist_defect(a: &FiniteSet) -> Result<EquidistReport> {
    if a.is_empty() {
        return Err(Error::EmptyOperand("equidistribution set"));
    }
    let group = a.group();
    let mut w = vec![0.0; group.order()];
    for g in a.iter() {
        w[g] = 1.0;
    }
    let size = a.len() as f64;
    let magnitudes: Vec<f64> = group_dft_real(group, &w)?.iter().map(|z| z.norm() / size).collect();
    let mut worst = None;
    let mut defect = 0.0;
    for (chi, &m) in magnitudes.iter().enumerate().skip(1) {
        if worst.is_none() || m > defect {
            defect = m;
            worst = Some(chi);
        }
    }
    Ok(EquidistReport { defect, worst, magnitudes })
}

#[derive(Clone, PartialEq, Debug)]
pub struct WeylReport {
    pub defect: f64,
    /// Grid frequency `num/den` attaining the defect.
    pub worst: (u64, u64),
    pub set_size: usize,
    pub window: u64,
}

/// `max_{α ∈ grid} |Σ_{a ∈ A} e^{2πi a α}| / |A|` over rational frequencies
/// `α = num/den` in `(0, 1)`. Phases are reduced exactly before rounding.
pub fn weyl_defect_window(a: &[u64], window: u64, grid: &[(u64, u64)]) -> Result<WeylReport> {
    if a.is_empty() {
        return Err(Error::EmptyOperand("Weyl set"));
    }
    if grid.is_empty() {
        return Err(Error::EmptyOperand("frequency grid"));
    }
    if let Some(&x) = a.iter().find(|&&x| x >= window) {
        return Err(Error::InvalidInput(alloc::format!("element {x} outside window [0, {window})")));
    }
    if let Some(&(p, q)) = grid.iter().find(|&&(p, q)| q == 0 || p == 0 || p >= q) {
        return Err(Error::InvalidInput(alloc::format!("frequency {p}/{q} outside (0, 1)")));
    }
    let mut best = (-1.0, grid[0]);
    for &(p, q) in grid {
        let s: Complex64 = a.iter().map(|&x| root(x as u128 * p as u128, q as u128)).sum();
        let m = s.norm() / a.len() as f64;
        if m > best.0 {
            best = (m, (p, q));
        }
    }
    Ok(WeylReport { defect: best.0, worst: best.1, set_size: a.len(), window })
}

/// `{ ⌊n^{3/2}⌋ : n >= 1 } ∩ [0, limit)`, computed as `isqrt(n³)`.
pub fn three_halves_powers(limit: u64) -> Vec<u64> {
    (1u64..)
        .map(|n| {
            let cube = (n as u128).pow(3);
            cube.isqrt() as u64
        })
        .take_while(|&v| v < limit)
        .collect()
}

/// Frequencies `k/den` for `1 <= k < den`.
pub fn uniform_grid(den: u64) -> Vec<(u64, u64)> {
    (1..den).map(|k| (k, den)).collect()
}
