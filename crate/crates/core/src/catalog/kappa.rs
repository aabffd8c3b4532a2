use std::collections::BTreeSet;
use std::fmt;

use super::CatalogError;

/// A first-quadrant lattice point with `m > 0` and `n >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    m: u64,
    n: u64,
}

impl LatticePoint {
    pub fn new(m: i64, n: i64) -> Result<Self, CatalogError> {
        if m <= 0 || n < 0 {
            return Err(CatalogError::Domain { m, n });
        }
        Ok(LatticePoint { m: m as u64, n: n as u64 })
    }

    pub fn m(self) -> u64 {
        self.m
    }

    pub fn n(self) -> u64 {
        self.n
    }
}

/// The `h`/`v` record of grid lines crossed on the way from the origin to `(m, n⁺)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CrossingSequence(String);

impl CrossingSequence {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn verticals(&self) -> usize {
        self.0.bytes().filter(|&b| b == b'v').count()
    }

    pub fn horizontals(&self) -> usize {
        self.0.bytes().filter(|&b| b == b'h').count()
    }
}

impl fmt::Display for CrossingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Crossing sequence of the segment to `(m, n⁺)`.
///
/// Horizontal line `y = j` is met at parameter `j / n⁺` and vertical line `x = i` at `i / m`.
/// Lifting the endpoint slightly above `n` moves every horizontal crossing a little earlier,
/// so horizontal `j` comes first exactly when `j·m <= i·n`.
pub fn kappa(m: i64, n: i64) -> Result<CrossingSequence, CatalogError> {
    let p = LatticePoint::new(m, n)?;
    let (m, n) = (p.m, p.n);
    let mut out = String::with_capacity((m + n) as usize);
    let (mut i, mut j) = (1u64, 1u64);
    while i <= m || j <= n {
        if j <= n && (i > m || j * m <= i * n) {
            out.push('h');
            j += 1;
        } else {
            out.push('v');
            i += 1;
        }
    }
    Ok(CrossingSequence(out))
}

/// All crossing sequences of length at most `max_len`, i.e. of points with `m + n <= max_len`.
pub fn kappa_language(max_len: usize) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    for total in 1..=max_len as i64 {
        for m in 1..=total {
            out.insert(kappa(m, total - m).expect("in domain").0);
        }
    }
    out
}
