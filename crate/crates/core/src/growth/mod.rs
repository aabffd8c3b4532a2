//! Growth series `f(n) = #{w ∈ L : |w| = n}` of generated languages.

use std::fmt::Write as _;

use crate::lsystem::{LSystem, SearchCaps};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GrowthError {
    #[error("enumeration up to length {max_len} hit a search cap after {visited} states; counts would be partial")]
    NotExhaustive { max_len: usize, visited: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthSeries {
    pub source: String,
    /// `counts[n]` for `n = 0..=max_len`.
    pub counts: Vec<u64>,
}

impl GrowthSeries {
    pub fn new(source: impl Into<String>, counts: Vec<u64>) -> Self {
        GrowthSeries { source: source.into(), counts }
    }

    pub fn max_len(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }

    pub fn get(&self, n: usize) -> u64 {
        self.counts.get(n).copied().unwrap_or(0)
    }

    /// `f(n) <= alphabet_size^n` for every `n`.
    pub fn within_free_bound(&self, alphabet_size: u64) -> bool {
        self.counts
            .iter()
            .enumerate()
            .all(|(n, &c)| alphabet_size.checked_pow(n as u32).map_or(true, |b| c <= b))
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,count\n");
        for (n, c) in self.counts.iter().enumerate() {
            writeln!(out, "{n},{c}").unwrap();
        }
        out
    }
}

/// Counts the words of each length up to `max_len`; refuses when the enumeration is
/// not exhaustive.
pub fn growth_of_system(
    sys: &LSystem,
    source: &str,
    max_len: usize,
    caps: SearchCaps,
) -> Result<GrowthSeries, GrowthError> {
    let found = sys.enumerate(max_len, caps);
    if !found.exhaustive {
        return Err(GrowthError::NotExhaustive { max_len, visited: found.visited });
    }
    let mut counts = vec![0; max_len + 1];
    for w in &found.words {
        counts[w.len()] += 1;
    }
    Ok(GrowthSeries::new(source, counts))
}

/// Partition numbers `p(0..=max_n)`, `p(0) = 1`.
pub fn partition_counts(max_n: usize) -> Vec<u64> {
    let mut p = vec![0u64; max_n + 1];
    p[0] = 1;
    for part in 1..=max_n {
        for n in part..=max_n {
            p[n] += p[n - part];
        }
    }
    p
}

/// Where `n^α < f(n) < β^n` holds, for `1 <= n <= max_len`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub alpha: f64,
    pub beta: f64,
    pub lower: Vec<(usize, usize)>,
    pub upper: Vec<(usize, usize)>,
    pub both: Vec<(usize, usize)>,
    /// `f(n+1)/f(n)` where `f(n) > 0`.
    pub ratios: Vec<(usize, f64)>,
}

impl BoundReport {
    pub fn lower_holds(&self, n: usize) -> bool {
        self.lower.iter().any(|&(a, b)| (a..=b).contains(&n))
    }

    pub fn upper_holds(&self, n: usize) -> bool {
        self.upper.iter().any(|&(a, b)| (a..=b).contains(&n))
    }
}

fn ranges(holds: impl Iterator<Item = (usize, bool)>) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for (n, ok) in holds {
        if !ok {
            continue;
        }
        match out.last_mut() {
            Some(last) if last.1 + 1 == n => last.1 = n,
            _ => out.push((n, n)),
        }
    }
    out
}

pub fn intermediate_growth_report(f: &GrowthSeries, alpha: f64, beta: f64) -> BoundReport {
    let ns = 1..=f.max_len();
    let lower = |n: usize| (n as f64).powf(alpha) < f.get(n) as f64;
    let upper = |n: usize| (f.get(n) as f64) < beta.powi(n as i32);
    BoundReport {
        alpha,
        beta,
        lower: ranges(ns.clone().map(|n| (n, lower(n)))),
        upper: ranges(ns.clone().map(|n| (n, upper(n)))),
        both: ranges(ns.clone().map(|n| (n, lower(n) && upper(n)))),
        ratios: (0..f.max_len())
            .filter(|&n| f.get(n) > 0)
            .map(|n| (n, f.get(n + 1) as f64 / f.get(n) as f64))
            .collect(),
    }
}

/// Growth of `{(b a^φ(k))^k : k ∈ U, k >= 1}`, whose word for `k` has length `k(1 + φ(k))`.
pub fn k_phi_u_growth(phi: impl Fn(u64) -> u64, in_u: impl Fn(u64) -> bool, max_len: usize) -> GrowthSeries {
    let mut counts = vec![0; max_len + 1];
    for k in 1..=max_len as u64 {
        if !in_u(k) {
            continue;
        }
        let len = k.checked_mul(1 + phi(k));
        if let Some(len) = len.filter(|&l| l <= max_len as u64) {
            counts[len as usize] += 1;
        }
    }
    GrowthSeries::new("K(phi,U)", counts)
}
