//! Growth series, recurrences, partition counts and asymptotic estimates.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::family::check_m;
use crate::growth::{GrowthKind, GrowthTable, Provenance};

/// Outcome of an exact identity check over a range of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub checked: usize,
    pub first_failure: Option<usize>,
}

impl Verdict {
    fn scan(range: impl IntoIterator<Item = usize>, mut ok: impl FnMut(usize) -> bool) -> Self {
        let mut checked = 0;
        for n in range {
            if !ok(n) {
                return Self {
                    checked,
                    first_failure: Some(n),
                };
            }
            checked += 1;
        }
        Self {
            checked,
            first_failure: None,
        }
    }

    pub fn holds(&self) -> bool {
        self.first_failure.is_none()
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.first_failure {
            None => write!(f, "holds ({} values checked)", self.checked),
            Some(n) => write!(f, "fails at n = {n}"),
        }
    }
}

/// `δ(0) = 1`, `δ(n+1) = δ(n) + δ(⌊n/m⌋)`, for `n = 0..=max_n`.
pub fn delta_recurrence(m: usize, max_n: usize) -> Result<GrowthTable> {
    check_m(m)?;
    let mut values: Vec<BigUint> = Vec::with_capacity(max_n + 1);
    values.push(BigUint::one());
    for n in 0..max_n {
        let next = &values[n] + &values[n / m];
        values.push(next);
    }
    Ok(GrowthTable::new(m, GrowthKind::Word, Provenance::Recurrence, values))
}

/// Partial sums of [`delta_recurrence`]: the ball growth `γ`.
pub fn gamma_recurrence(m: usize, max_n: usize) -> Result<GrowthTable> {
    Ok(delta_recurrence(m, max_n)?.partial_sums())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    S,
    Delta,
    Gamma,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesCoefficients {
    pub m: usize,
    pub which: SeriesKind,
    pub coeffs: Vec<BigUint>,
}

impl SeriesCoefficients {
    pub fn to_table(&self) -> GrowthTable {
        let kind = match self.which {
            SeriesKind::Gamma => GrowthKind::Ball,
            _ => GrowthKind::Word,
        };
        GrowthTable::new(self.m, kind, Provenance::Series, self.coeffs.clone())
    }
}

/// `S`, `Δ = S/(1-X)` and `Γ = Δ/(1-X)` truncated at degree `max_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthSeries {
    pub s: SeriesCoefficients,
    pub delta: SeriesCoefficients,
    pub gamma: SeriesCoefficients,
}

fn partial_sums(c: &[BigUint]) -> Vec<BigUint> {
    let mut acc = BigUint::zero();
    c.iter()
        .map(|v| {
            acc += v;
            acc.clone()
        })
        .collect()
}

/// Expands `S = Σ_k Π_{i<k} X^{m^i}/(1 - X^{m^i})` up to degree `max_n`.
pub fn series_coeffs(m: usize, max_n: usize) -> Result<GrowthSeries> {
    check_m(m)?;
    let len = max_n + 1;
    let mut s = vec![BigUint::zero(); len];
    let mut term = vec![BigUint::zero(); len];
    term[0] = BigUint::one();
    let mut low = 0usize;
    let mut power = 1usize;
    loop {
        for (acc, t) in s.iter_mut().zip(&term).skip(low) {
            *acc += t;
        }
        // multiply by X^power / (1 - X^power)
        low = match low.checked_add(power) {
            Some(l) if l <= max_n => l,
            _ => break,
        };
        for n in (power..len).rev() {
            term[n] = std::mem::take(&mut term[n - power]);
        }
        for n in low + power..len {
            let add = term[n - power].clone();
            term[n] += add;
        }
        power = match power.checked_mul(m) {
            Some(p) => p,
            None => break,
        };
    }
    let delta = partial_sums(&s);
    let gamma = partial_sums(&delta);
    let wrap = |which, coeffs| SeriesCoefficients { m, which, coeffs };
    Ok(GrowthSeries {
        s: wrap(SeriesKind::S, s),
        delta: wrap(SeriesKind::Delta, delta),
        gamma: wrap(SeriesKind::Gamma, gamma),
    })
}

/// `γ(n) = (δ(m(n+1)) - 1)/m` with zero remainder, for `n = 0..=max_n`.
pub fn check_gamma_delta_identity(m: usize, max_n: usize) -> Result<Verdict> {
    let delta = delta_recurrence(m, m * (max_n + 1))?.values;
    let gamma = partial_sums(&delta[..=max_n]);
    Ok(Verdict::scan(0..=max_n, |n| {
        let (q, r) = (&delta[m * (n + 1)] - 1u32).div_rem(&BigUint::from(m));
        r.is_zero() && q == gamma[n]
    }))
}

/// `Σ_n δ(m(n+1)) X^n = 1/(1-X) + m S(X)/(1-X)^2`, coefficientwise to `max_n`.
pub fn check_multisection(m: usize, max_n: usize) -> Result<Verdict> {
    let delta = delta_recurrence(m, m * (max_n + 1))?.values;
    let s = series_coeffs(m, max_n)?.s.coeffs;
    let twice = partial_sums(&partial_sums(&s));
    Ok(Verdict::scan(0..=max_n, |n| delta[m * (n + 1)] == 1u32 + &twice[n] * m))
}

/// Number of ways to write `n = Σ_{i=0}^{k} p_i m^i` with every `p_i ≥ 1`.
pub fn partitions_sequential(n: usize, m: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::Domain("partitions are counted for n >= 1".into()));
    }
    Ok(partitions_table(m, n)?.pop().expect("table has n + 1 entries"))
}

/// [`partitions_sequential`] for `n = 0..=max_n`; entry 0 is 0.
///
/// Peeling `p_0` leaves a sequential partition of `(n - p_0)/m`, so
/// `c(n) = 1 + Σ_{q=1}^{⌊(n-1)/m⌋} c(q)`.
pub fn partitions_table(m: usize, max_n: usize) -> Result<Vec<BigUint>> {
    check_m(m)?;
    let mut counts = vec![BigUint::zero(); max_n + 1];
    // prefix[q] = c(1) + … + c(q)
    let mut prefix = vec![BigUint::zero(); max_n + 1];
    for n in 1..=max_n {
        counts[n] = &prefix[(n - 1) / m] + 1u32;
        prefix[n] = &prefix[n - 1] + &counts[n];
    }
    Ok(counts)
}

/// Brute-force count of [`partitions_sequential`]: enumerates every tuple
/// `(p_1, …, p_k)` with positive entries and `Σ p_i m^i < n`, each fixing
/// `p_0 = n - Σ p_i m^i`.
pub fn partitions_enumerated(n: usize, m: usize) -> u64 {
    fn extend(budget: usize, scale: usize, m: usize) -> u64 {
        // the tuple so far leaves `budget` for p_0 and higher digits
        let mut count = 1; // stop here: p_0 = budget
        let mut used = scale;
        while used < budget {
            count += extend(budget - used, scale * m, m);
            used += scale;
        }
        count
    }
    if n == 0 || m < 2 {
        return 0;
    }
    extend(n, m, m)
}

/// `γ''(n)` for `n = 0..=max_n`, using `γ''(0) = γ''(1) = γ''(2) = 1`.
pub fn gamma2_table(m: usize, max_n: usize) -> Result<Vec<BigUint>> {
    let delta = delta_recurrence(m, max_n)?.values;
    Ok((0..=max_n)
        .map(|n| if n <= 2 { BigUint::one() } else { &delta[n] - &delta[n - 1] })
        .collect())
}

/// The `order`-th finite difference `g(n) - g(n-1)`, iterated; `values[j]` is
/// the difference at `n = start + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceTable {
    pub order: usize,
    pub start: usize,
    pub values: Vec<BigInt>,
}

pub fn finite_difference(seq: &[BigUint], order: usize) -> Result<DifferenceTable> {
    if order == 0 {
        return Err(Error::Domain("difference order must be at least 1".into()));
    }
    if seq.len() <= order {
        return Err(Error::Domain(format!(
            "order {order} difference needs more than {order} values, got {}",
            seq.len()
        )));
    }
    let mut values: Vec<BigInt> = seq.iter().cloned().map(BigInt::from).collect();
    for _ in 0..order {
        values = values.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    Ok(DifferenceTable {
        order,
        start: order,
        values,
    })
}

/// `γ''(mn+1) = … = γ''(mn+m)` for every block inside `1..=max_n`.
pub fn second_diff_repetition_check(m: usize, max_n: usize) -> Result<Verdict> {
    let g = gamma2_table(m, max_n)?;
    Ok(Verdict::scan((0..).take_while(|b| b * m + m <= max_n), |b| {
        let first = &g[b * m + 1];
        (2..=m).all(|j| &g[b * m + j] == first)
    }))
}

/// Natural logarithm of an unbounded integer.
pub fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().expect("small enough").ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("64 bits");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

fn check_log_domain(m: usize, n: f64) -> Result<()> {
    check_m(m)?;
    if !(n >= 2.0) {
        return Err(Error::Domain(format!("argument must be at least 2, got {n}")));
    }
    Ok(())
}

/// `ln` of `n^{ln n / (2 ln m)}`.
pub fn ln_mahler_estimate(m: usize, n: f64) -> Result<f64> {
    check_log_domain(m, n)?;
    Ok(n.ln() * n.ln() / (2.0 * (m as f64).ln()))
}

/// `n^{ln n / (2 ln m)}`; infinite once it leaves the `f64` range.
pub fn mahler_estimate(m: usize, n: f64) -> Result<f64> {
    Ok(ln_mahler_estimate(m, n)?.exp())
}

/// The integer `n ≥ 1` with `m^{n-1} n ≤ z < m^n (n+1)`.
pub fn mahler_bracket(m: usize, z: f64) -> Result<u32> {
    check_m(m)?;
    if !(z >= 1.0) || !z.is_finite() {
        return Err(Error::Domain(format!("bracket needs finite z >= 1, got {z}")));
    }
    let lm = (m as f64).ln();
    let lz = z.ln();
    let mut n = 1u32;
    while lz >= n as f64 * lm + (n as f64 + 1.0).ln() {
        n += 1;
    }
    Ok(n)
}

/// `ln` of `m^{-n(n-1)/2} z^n / n!` with `n` from [`mahler_bracket`].
pub fn ln_mahler_f_estimate(m: usize, z: f64) -> Result<f64> {
    let n = mahler_bracket(m, z)? as f64;
    let ln_factorial: f64 = (2..=n as u64).map(|i| (i as f64).ln()).sum();
    Ok(-n * (n - 1.0) / 2.0 * (m as f64).ln() + n * z.ln() - ln_factorial)
}

pub fn mahler_f_estimate(m: usize, z: f64) -> Result<f64> {
    Ok(ln_mahler_f_estimate(m, z)?.exp())
}

/// `ln δ(N) · 2 ln m / (ln N)^2` from the exact recurrence.
pub fn slope_diagnostic(m: usize, n: usize) -> Result<f64> {
    check_log_domain(m, n as f64)?;
    let delta = delta_recurrence(m, n)?;
    Ok(slope_from_table(m, &delta.values, n))
}

/// [`slope_diagnostic`] read off an existing δ table.
pub fn slope_from_table(m: usize, delta: &[BigUint], n: usize) -> f64 {
    let ln_n = (n as f64).ln();
    ln_big(&delta[n]) * 2.0 * (m as f64).ln() / (ln_n * ln_n)
}

/// Growth `(n+1)(n+2)/2` of the pointwise limit monoid.
pub fn limit_growth_s(n: u64) -> BigUint {
    BigUint::from(n + 1) * BigUint::from(n + 2) / 2u32
}

/// Growth of the infinite-alphabet monoid: 1 at 0, `3n` afterwards.
pub fn limit_growth_sprime(n: u64) -> BigUint {
    if n == 0 {
        BigUint::one()
    } else {
        BigUint::from(3 * n)
    }
}

/// `γ''(1..=max_n)` from `γ''(n) = 2γ''(n-1) - γ''(n-2) + γ''(⌊(n-3)/2⌋)`
/// with initial values 1, 2, 3, 5. Index 0 of the result is `γ''(1)`.
pub fn final_remarks_recurrence(max_n: usize) -> Result<Vec<BigUint>> {
    if max_n < 4 {
        return Err(Error::Domain(format!("need at least the 4 initial values, asked for {max_n}")));
    }
    let mut g: Vec<BigUint> = [1u32, 2, 3, 5].into_iter().map(BigUint::from).collect();
    for n in 5..=max_n {
        let at = |i: usize| &g[i - 1];
        let next = at(n - 1) * 2u32 + at((n - 3) / 2) - at(n - 2);
        g.push(next);
    }
    Ok(g)
}
