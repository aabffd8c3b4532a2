use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::StallingsError;

/// A word over `x_1^{±1}, …, x_k^{±1}`: letter `i > 0` is `x_i`, `-i` its inverse.
///
/// Text form uses `a`..`z` for `x_1`..`x_26` and uppercase for inverses; `x7`/`X7` names
/// any generator by index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FreeWord(Vec<i32>);

impl FreeWord {
    pub fn new(letters: Vec<i32>) -> Self {
        assert!(letters.iter().all(|&x| x != 0), "0 is not a letter");
        FreeWord(letters)
    }

    pub fn empty() -> Self {
        FreeWord(Vec::new())
    }

    pub fn generator(i: i32) -> Self {
        FreeWord::new(vec![i])
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<i32> {
        self.0.first().copied()
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|x| -x).collect())
    }

    /// Product, freely reduced across the seam only.
    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.0.clone();
        for &x in &other.0 {
            if out.last() == Some(&-x) {
                out.pop();
            } else {
                out.push(x);
            }
        }
        FreeWord(out)
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|p| p[0] != -p[1])
    }

    pub fn reduced(&self) -> FreeWord {
        FreeWord::empty().concat(self)
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_reduced() && (self.0.len() < 2 || self.0[0] != -self.0[self.0.len() - 1])
    }

    /// The cyclically reduced core of the free reduction.
    pub fn cyclically_reduced(&self) -> FreeWord {
        let r = self.reduced().0;
        let mut i = 0;
        while i + 1 < r.len() - i && r[i] == -r[r.len() - 1 - i] {
            i += 1;
        }
        FreeWord(r[i..r.len() - i].to_vec())
    }

    pub fn slice(&self, from: usize, to: usize) -> FreeWord {
        FreeWord(self.0[from..to].to_vec())
    }

    /// Length of the longest common prefix.
    pub fn common_prefix(&self, other: &FreeWord) -> usize {
        self.0.iter().zip(&other.0).take_while(|(x, y)| x == y).count()
    }

    /// Generator indices occurring, ignoring sign.
    pub fn generators(&self) -> BTreeSet<u32> {
        self.0.iter().map(|x| x.unsigned_abs()).collect()
    }

    pub fn max_generator(&self) -> u32 {
        self.0.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0)
    }

    /// Exponent sum of each of `x_1..x_k`.
    pub fn exponent_sums(&self, k: usize) -> Vec<i64> {
        let mut v = vec![0; k];
        for &x in &self.0 {
            let i = x.unsigned_abs() as usize - 1;
            if i < k {
                v[i] += x.signum() as i64;
            }
        }
        v
    }

    /// Whether `self` is a cyclic rotation of `other`.
    pub fn is_rotation_of(&self, other: &FreeWord) -> bool {
        self.len() == other.len()
            && (self.is_empty() || (0..self.len()).any(|s| self.0[s..].iter().chain(&self.0[..s]).eq(&other.0)))
    }

    /// All freely reduced words of length `len` over `x_1..x_k`.
    pub fn all_reduced(k: u32, len: usize) -> Vec<FreeWord> {
        let letters: Vec<i32> = (1..=k as i32).flat_map(|i| [i, -i]).collect();
        let mut out = vec![Vec::new()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w: Vec<i32>| {
                    letters
                        .iter()
                        .filter(|&&x| w.last() != Some(&-x))
                        .map(|&x| {
                            let mut v = w.clone();
                            v.push(x);
                            v
                        })
                        .collect::<Vec<_>>()
                })
                .collect();
        }
        out.into_iter().map(FreeWord).collect()
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let small = self.max_generator() <= 26;
        for &x in &self.0 {
            let i = x.unsigned_abs();
            if small {
                let c = (b'a' + (i - 1) as u8) as char;
                write!(f, "{}", if x > 0 { c } else { c.to_ascii_uppercase() })?;
            } else {
                write!(f, "{}{}", if x > 0 { 'x' } else { 'X' }, i)?;
            }
        }
        Ok(())
    }
}

impl FromStr for FreeWord {
    type Err = StallingsError;

    /// Does not reduce; `1` or an empty string is the empty word.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "1" {
            return Ok(FreeWord::empty());
        }
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut out = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let sign = if c.is_ascii_lowercase() { 1 } else { -1 };
            if !c.is_ascii_alphabetic() {
                return Err(StallingsError::Parse(s.to_string()));
            }
            let digits: String = chars[i + 1..].iter().take_while(|d| d.is_ascii_digit()).collect();
            if c.eq_ignore_ascii_case(&'x') && !digits.is_empty() {
                let n: i32 = digits.parse().map_err(|_| StallingsError::Parse(s.to_string()))?;
                if n == 0 {
                    return Err(StallingsError::Parse(s.to_string()));
                }
                out.push(sign * n);
                i += 1 + digits.len();
            } else {
                out.push(sign * (c.to_ascii_lowercase() as i32 - 'a' as i32 + 1));
                i += 1;
            }
        }
        Ok(FreeWord(out))
    }
}

/// Parses `w_1#…#w_n`.
pub fn parse_word_set(s: &str) -> Result<Vec<FreeWord>, StallingsError> {
    s.split('#').map(str::parse).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> FreeWord {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(w("aB").letters(), &[1, -2]);
        assert_eq!(w("x1X2").letters(), &[1, -2]);
        assert_eq!(w("x30").to_string(), "x30");
        assert_eq!(w("abC").to_string(), "abC");
        assert_eq!(w("xy").letters(), &[24, 25]);
        assert!("a1".parse::<FreeWord>().is_err());
        assert!("x0".parse::<FreeWord>().is_err());
        assert_eq!(parse_word_set("ab#B").unwrap(), vec![w("ab"), w("B")]);
    }

    #[test]
    fn reduction() {
        assert_eq!(w("abBA").reduced(), FreeWord::empty());
        assert_eq!(w("aabBc").reduced(), w("aac"));
        assert_eq!(w("baB").cyclically_reduced(), w("a"));
        assert_eq!(w("abcBA").cyclically_reduced(), w("c"));
        assert_eq!(w("abAB").cyclically_reduced(), w("abAB"));
        assert_eq!(w("aA").cyclically_reduced(), FreeWord::empty());
        assert!(w("abA").is_reduced() && !w("abA").is_cyclically_reduced());
        assert_eq!(w("ab").inverse(), w("BA"));
    }

    #[test]
    fn counting() {
        // 2k(2k-1)^{n-1} reduced words of length n
        assert_eq!(FreeWord::all_reduced(2, 4).len(), 4 * 27);
        assert_eq!(FreeWord::all_reduced(3, 3).len(), 6 * 25);
        assert!(FreeWord::all_reduced(2, 5).iter().all(FreeWord::is_reduced));
        assert!(w("abAB").is_rotation_of(&w("ABab")));
        assert!(!w("abAB").is_rotation_of(&w("baBA")));
    }
}
