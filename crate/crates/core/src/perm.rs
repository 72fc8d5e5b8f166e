//! k-permutations of `1..=n` and their lexicographic ranking.

use std::fmt;

use crate::error::{Error, Result};

/// Number of k-arrangements of `m` symbols, `m!/(m-j)!`. `None` on overflow
/// or when `j > m`.
pub fn falling_factorial(m: usize, j: usize) -> Option<usize> {
    if j > m {
        return None;
    }
    (0..j).try_fold(1usize, |acc, i| acc.checked_mul(m - i))
}

/// A vertex label: an ordered sequence of distinct symbols drawn from `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PermLabel {
    symbols: Vec<usize>,
}

impl PermLabel {
    /// Validates that every symbol lies in `1..=n` and that none repeats.
    pub fn new(symbols: Vec<usize>, n: usize) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for &s in &symbols {
            if s == 0 || s > n {
                return Err(Error::Label(format!("symbol {s} outside 1..={n}")));
            }
            if seen[s] {
                return Err(Error::Label(format!("symbol {s} repeated")));
            }
            seen[s] = true;
        }
        Ok(Self { symbols })
    }

    /// Builds a label without validation. Callers guarantee distinctness.
    pub(crate) fn from_raw(symbols: Vec<usize>) -> Self {
        Self { symbols }
    }

    pub fn symbols(&self) -> &[usize] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Symbol at 1-based position `pos`.
    pub fn bit(&self, pos: usize) -> usize {
        self.symbols[pos - 1]
    }

    /// Parses the text form produced by [`PermLabel::render`]: bare digits
    /// when `n <= 9`, comma-separated otherwise. Commas are accepted for any
    /// `n`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let text = text.trim();
        let symbols = if text.contains(',') || n > 9 {
            text.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Label(format!("bad symbol {tok:?} in {text:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Label(format!("bad symbol {c:?} in {text:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        if symbols.is_empty() {
            return Err(Error::Label("empty label".into()));
        }
        Self::new(symbols, n)
    }

    /// Text form for a graph on `n` symbols.
    pub fn render(&self, n: usize) -> String {
        let parts: Vec<String> = self.symbols.iter().map(|s| s.to_string()).collect();
        if n <= 9 {
            parts.concat()
        } else {
            parts.join(",")
        }
    }

    /// Position of this label in the lexicographic order of all
    /// k-permutations of `1..=n`, where `k = self.len()`.
    pub fn rank(&self, n: usize) -> Result<usize> {
        let k = self.len();
        if k == 0 || k > n {
            return Err(Error::Label(format!("length {k} invalid for n = {n}")));
        }
        let mut used = vec![false; n + 1];
        let mut index = 0usize;
        for (pos, &s) in self.symbols.iter().enumerate() {
            if s == 0 || s > n || used[s] {
                return Err(Error::Label(format!("symbol {s} invalid at position {}", pos + 1)));
            }
            let smaller_free = (1..s).filter(|&c| !used[c]).count();
            let block = falling_factorial(n - pos - 1, k - pos - 1)
                .ok_or_else(|| Error::Size(format!("label space of P({n},{k}) overflows")))?;
            index += smaller_free * block;
            used[s] = true;
        }
        Ok(index)
    }

    /// Inverse of [`PermLabel::rank`].
    pub fn unrank(index: usize, n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::Parameter(format!("need 1 <= k <= n, got n = {n}, k = {k}")));
        }
        let total = falling_factorial(n, k)
            .ok_or_else(|| Error::Size(format!("label space of P({n},{k}) overflows")))?;
        if index >= total {
            return Err(Error::Index { index, len: total });
        }
        let mut free: Vec<usize> = (1..=n).collect();
        let mut rest = index;
        let mut symbols = Vec::with_capacity(k);
        for pos in 0..k {
            let block = falling_factorial(n - pos - 1, k - pos - 1).expect("bounded by total");
            let choice = rest / block;
            rest %= block;
            symbols.push(free.remove(choice));
        }
        Ok(Self { symbols })
    }
}

impl fmt::Display for PermLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.symbols.iter().copied().max().unwrap_or(0);
        f.write_str(&self.render(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn falling_factorial_values() {
        assert_eq!(falling_factorial(4, 2), Some(12));
        assert_eq!(falling_factorial(5, 4), Some(120));
        assert_eq!(falling_factorial(5, 0), Some(1));
        assert_eq!(falling_factorial(3, 4), None);
    }

    #[test]
    fn lexicographic_extremes() {
        let first = PermLabel::parse("12", 4).unwrap();
        assert_eq!(first.rank(4).unwrap(), 0);
        assert_eq!(PermLabel::unrank(11, 4, 2).unwrap().render(4), "43");
    }

    #[test]
    fn round_trip_s42() {
        let mut prev: Option<PermLabel> = None;
        for i in 0..12 {
            let label = PermLabel::unrank(i, 4, 2).unwrap();
            assert_eq!(label.rank(4).unwrap(), i);
            if let Some(p) = prev {
                assert!(p < label);
            }
            prev = Some(label);
        }
        assert!(PermLabel::unrank(12, 4, 2).is_err());
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(PermLabel::parse("11", 4), Err(Error::Label(_))));
        assert!(matches!(PermLabel::parse("15", 4), Err(Error::Label(_))));
        assert!(matches!(PermLabel::parse("1x", 4), Err(Error::Label(_))));
        assert!(PermLabel::parse("", 4).is_err());
    }

    #[test]
    fn wide_labels_use_commas() {
        let l = PermLabel::parse("10,2,7", 12).unwrap();
        assert_eq!(l.render(12), "10,2,7");
        assert_eq!(PermLabel::parse(&l.render(12), 12).unwrap(), l);
    }
}
