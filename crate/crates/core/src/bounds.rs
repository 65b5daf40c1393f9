//! Lower and upper bounds on `f(n, k)`, the largest `f` such that every graph
//! on at most `f` vertices without odd cycles of length at most `2k - 1` is
//! `n`-colorable.
//!
//! Known exactly: `f(1, k) = 1` and `f(2, k) = 2k`. Upper bounds come from
//! `n^{4k+1}` and from the Schrijver graph `SG((n-1)(2k-1)+2, (n-1)(k-1)+1)`;
//! lower bounds from the Kierstead–Szemerédi–Trotter form
//! `(k / 2(n-1))^{n-1} - 1`, the quadratic bound `n + (k-1)(n-1)(n+2)/2`, the
//! rising-factorial bound `(n+k)^{(k)} / (2^{k-1} k^k)`, and the min-max
//! recurrence
//!
//! ```text
//! f(n,k) >= min_{t >= n(k-1)+1} max{ f(n-1,k) + t,
//!                                    t^{1/(k-1)} / (t^{1/(k-1)} - 1) * (f(n-2,k) + 1) - 1 }
//! ```
//!
//! Strict upper bounds (`f < X`) are stored as the inclusive `X - 1` only when
//! a [`BoundsRow`] is assembled.

use std::ops::RangeInclusive;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Largest `n` accepted by [`bounds_table`].
pub const MAX_TABLE_N: u64 = 200;
/// Largest `k` accepted by [`bounds_table`].
pub const MAX_TABLE_K: u64 = 24;

/// Slack subtracted before taking ceilings of real-valued bounds.
pub const ROUNDING_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("n must be at least {min}, got {n}")]
    InvalidN { n: u64, min: u64 },
    #[error("k must be at least 2, got {0}")]
    InvalidK(u64),
    #[error("range {what} = {lo}..={hi} is empty or exceeds the cap {cap}")]
    BadRange {
        what: &'static str,
        lo: u64,
        hi: u64,
        cap: u64,
    },
}

fn require(n: u64, n_min: u64, k: u64) -> Result<(), BoundsError> {
    if n < n_min {
        return Err(BoundsError::InvalidN { n, min: n_min });
    }
    if k < 2 {
        return Err(BoundsError::InvalidK(k));
    }
    Ok(())
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

/// `x (x+1) ... (x+k-1)`, with the empty product equal to 1.
pub fn rising_factorial(x: i64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(x + i as i64))
}

/// Exact value of `(k / (2(n-1)))^{n-1} - 1`. May be negative.
pub fn kst_lower_exact(n: u64, k: u64) -> Result<BigRational, BoundsError> {
    require(n, 2, k)?;
    let e = (n - 1) as u32;
    let base = BigRational::new(BigInt::from(k), BigInt::from(2 * (n - 1)));
    Ok(num_traits::pow(base, e as usize) - BigRational::one())
}

pub fn kst_lower(n: u64, k: u64) -> Result<f64, BoundsError> {
    Ok(to_f64(&kst_lower_exact(n, k)?))
}

/// `n^{4k+1}`, a strict upper bound.
pub fn erdos_upper(n: u64, k: u64) -> Result<BigUint, BoundsError> {
    require(n, 2, k)?;
    Ok(BigUint::from(n).pow((4 * k + 1) as u32))
}

/// `((n-1)(2k-1)+2) / ((n-1)k+1) * C((n-1)k+1, n-1)`, the vertex count of a
/// Schrijver graph with chromatic number `n + 1` and no odd cycle shorter than
/// `2k + 1`; a strict upper bound.
pub fn schrijver_upper(n: u64, k: u64) -> Result<BigUint, BoundsError> {
    require(n, 2, k)?;
    let num = BigUint::from((n - 1) * (2 * k - 1) + 2)
        * binomial(((n - 1) * k + 1) as usize, (n - 1) as usize);
    let den = BigUint::from((n - 1) * k + 1);
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "Schrijver vertex count must be integral");
    Ok(q)
}

/// `n + (k-1)(n-1)(n+2)/2`; `(n-1)(n+2)` is always even.
pub fn quad_lower(n: u64, k: u64) -> Result<u128, BoundsError> {
    require(n, 1, k)?;
    let (n, k) = (n as u128, k as u128);
    Ok(n + (k - 1) * ((n - 1) * (n + 2) / 2))
}

/// `c = 2^{1-k} k^{-k}`.
pub fn factorial_constant(k: u64) -> BigRational {
    let den = BigInt::from(2u32).pow((k - 1) as u32) * BigInt::from(k).pow(k as u32);
    BigRational::new(BigInt::one(), den)
}

/// `(n + k)^{(k)} / (2^{k-1} k^k)`, i.e. `c (n + a)^{(k)}` with shift `a = k`.
pub fn factorial_lower_exact(n: u64, k: u64) -> Result<BigRational, BoundsError> {
    require(n, 2, k)?;
    Ok(factorial_constant(k) * BigRational::from_integer(rising_factorial((n + k) as i64, k)))
}

pub fn factorial_lower(n: u64, k: u64) -> Result<f64, BoundsError> {
    Ok(to_f64(&factorial_lower_exact(n, k)?))
}

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Smallest integer not below the rational `r`.
fn ceil_exact(r: &BigRational) -> BigInt {
    r.ceil().to_integer()
}

/// Conservative integer ceiling of a floating-point bound: the slack scales
/// with the magnitude so large values are not rounded up past the truth.
fn ceil_conservative(x: f64) -> u128 {
    let slack = ROUNDING_SLACK * x.abs().max(1.0);
    (x - slack).ceil().max(0.0) as u128
}

/// Memoized recurrence bounds `L(n)` for a fixed `k`: `L(1) = 1`, `L(2) = 2k`,
/// and `L(n)` for `n >= 3` from the min-max recurrence applied to
/// `L(n-1)` and `L(n-2)`.
#[derive(Debug, Clone)]
pub struct RecurrenceTable {
    k: u64,
    values: Vec<u128>,
}

impl RecurrenceTable {
    pub fn new(k: u64) -> Result<Self, BoundsError> {
        require(1, 1, k)?;
        Ok(RecurrenceTable {
            k,
            values: vec![0, 1, 2 * k as u128],
        })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn get(&mut self, n: u64) -> Result<u128, BoundsError> {
        if n < 1 {
            return Err(BoundsError::InvalidN { n, min: 1 });
        }
        while (self.values.len() as u64) <= n {
            let m = self.values.len() as u64;
            let prev = self.values[m as usize - 1];
            let prev2 = self.values[m as usize - 2];
            self.values.push(recurrence_step(m, self.k, prev, prev2));
        }
        Ok(self.values[n as usize])
    }

    /// Entries computed so far, indexed by `n` (index 0 unused).
    pub fn values(&self) -> &[u128] {
        &self.values[1..]
    }
}

/// `t^{1/(k-1)} / (t^{1/(k-1)} - 1) * (prev2 + 1) - 1`.
fn second_term(t: u128, k: u64, prev2: u128) -> f64 {
    let r = (t as f64).powf(1.0 / (k - 1) as f64);
    r / (r - 1.0) * (prev2 as f64 + 1.0) - 1.0
}

/// One step of the min-max recurrence for `n >= 3`.
///
/// The first term grows and the second shrinks in `t`, so the minimum of
/// their maximum sits where they cross: at the first `t` with
/// `first >= second` or just before it.
fn recurrence_step(n: u64, k: u64, prev: u128, prev2: u128) -> u128 {
    let t_min = n as u128 * (k as u128 - 1) + 1;
    let first = |t: u128| prev + t;
    let crossed = |t: u128| first(t) as f64 >= second_term(t, k, prev2);
    if crossed(t_min) {
        return first(t_min);
    }
    let mut lo = t_min; // not crossed
    let mut hi = t_min.max(2) * 2;
    while !crossed(hi) {
        lo = hi;
        hi *= 2;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if crossed(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    first(hi).min(ceil_conservative(second_term(lo, k, prev2)))
}

/// Recurrence lower bound for a single `(n, k)`.
pub fn recurrent_lower(n: u64, k: u64) -> Result<u128, BoundsError> {
    require(n, 1, k)?;
    RecurrenceTable::new(k)?.get(n)
}

fn as_string<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.serialize_str(&x.to_string()),
        None => s.serialize_none(),
    }
}

/// Every bound for one `(n, k)`. Upper bounds are inclusive (`f <= value`).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsRow {
    pub n: u64,
    pub k: u64,
    pub kst_lower: Option<f64>,
    pub quad_lower: u128,
    pub factorial_lower: Option<f64>,
    pub recurrent_lower: u128,
    #[serde(serialize_with = "as_string")]
    pub schrijver_upper_incl: Option<BigUint>,
    #[serde(serialize_with = "as_string")]
    pub erdos_upper_incl: Option<BigUint>,
    pub best_lower: u128,
    #[serde(serialize_with = "as_string")]
    pub best_upper: Option<BigUint>,
}

pub fn bounds_row(n: u64, k: u64) -> Result<BoundsRow, BoundsError> {
    let mut table = RecurrenceTable::new(k)?;
    bounds_row_with(n, k, &mut table)
}

fn bounds_row_with(n: u64, k: u64, table: &mut RecurrenceTable) -> Result<BoundsRow, BoundsError> {
    require(n, 1, k)?;
    let quad = quad_lower(n, k)?;
    let recurrent = table.get(n)?;
    let mut best_lower = quad.max(recurrent).max(1);
    let (mut kst, mut factorial, mut schrijver, mut erdos) = (None, None, None, None);
    if n >= 2 {
        let kst_exact = kst_lower_exact(n, k)?;
        let fact_exact = factorial_lower_exact(n, k)?;
        for r in [&kst_exact, &fact_exact] {
            let c = ceil_exact(r);
            if c.is_positive() {
                best_lower = best_lower.max(c.to_u128().unwrap_or(u128::MAX));
            }
        }
        kst = Some(to_f64(&kst_exact));
        factorial = Some(to_f64(&fact_exact));
        schrijver = Some(schrijver_upper(n, k)? - 1u32);
        erdos = Some(erdos_upper(n, k)? - 1u32);
    }
    let best_upper = match (&schrijver, &erdos) {
        (Some(a), Some(b)) => Some(a.min(b).clone()),
        _ => None,
    };
    Ok(BoundsRow {
        n,
        k,
        kst_lower: kst,
        quad_lower: quad,
        factorial_lower: factorial,
        recurrent_lower: recurrent,
        schrijver_upper_incl: schrijver,
        erdos_upper_incl: erdos,
        best_lower,
        best_upper,
    })
}

/// Rows for every `(n, k)` in the ranges, `k` outer and `n` inner.
pub fn bounds_table(
    n_range: RangeInclusive<u64>,
    k_range: RangeInclusive<u64>,
) -> Result<Vec<BoundsRow>, BoundsError> {
    let check = |what, r: &RangeInclusive<u64>, min, cap| {
        if r.is_empty() || *r.start() < min || *r.end() > cap {
            Err(BoundsError::BadRange {
                what,
                lo: *r.start(),
                hi: *r.end(),
                cap,
            })
        } else {
            Ok(())
        }
    };
    check("n", &n_range, 1, MAX_TABLE_N)?;
    check("k", &k_range, 2, MAX_TABLE_K)?;
    let mut rows = Vec::new();
    for k in k_range {
        let mut table = RecurrenceTable::new(k)?;
        for n in n_range.clone() {
            rows.push(bounds_row_with(n, k, &mut table)?);
        }
    }
    Ok(rows)
}

pub const CSV_HEADER: &str = "n,k,kst_lower,quad_lower,factorial_lower,recurrent_lower,schrijver_upper_incl,erdos_upper_incl,best_lower,best_upper";

fn cells(r: &BoundsRow) -> [String; 10] {
    let f = |x: &Option<f64>| x.map(|v| v.to_string()).unwrap_or_default();
    let b = |x: &Option<BigUint>| x.as_ref().map(|v| v.to_string()).unwrap_or_default();
    [
        r.n.to_string(),
        r.k.to_string(),
        f(&r.kst_lower),
        r.quad_lower.to_string(),
        f(&r.factorial_lower),
        r.recurrent_lower.to_string(),
        b(&r.schrijver_upper_incl),
        b(&r.erdos_upper_incl),
        r.best_lower.to_string(),
        b(&r.best_upper),
    ]
}

pub fn to_csv(rows: &[BoundsRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&cells(r).join(","));
        out.push('\n');
    }
    out
}

pub fn to_markdown(rows: &[BoundsRow]) -> String {
    let header: Vec<&str> = CSV_HEADER.split(',').collect();
    let mut out = format!("| {} |\n", header.join(" | "));
    out.push_str(&format!("|{}\n", "---:|".repeat(header.len())));
    for r in rows {
        out.push_str(&format!("| {} |\n", cells(r).join(" | ")));
    }
    out
}
