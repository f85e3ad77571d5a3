//! Degree-sequence algebra: parsing, graphicness, complementation and the
//! bad/dull/good classification that the whole catalogue is built on.
//!
//! A degree is *bad* when the sequence also contains a degree one smaller,
//! *dull* when it contains a degree one larger, and *good* otherwise. These
//! three flags, together with the per-degree multiplicities, drive every
//! sufficient condition in [`crate::rules`].

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Maximum supported number of vertices: one adjacency row fits in a `u64`.
pub const MAX_VERTICES: usize = 64;

/// Errors produced while building or parsing a degree sequence.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SequenceError {
    /// A token could not be read as a non-negative integer (or input was empty).
    #[error("malformed degree token {0:?}")]
    MalformedToken(String),
    /// An entry does not fit in a simple graph on `n` vertices.
    #[error("degree {degree} out of range for a simple graph on {n} vertices")]
    DegreeOutOfRange {
        /// The offending degree.
        degree: usize,
        /// Number of entries in the sequence.
        n: usize,
    },
    /// More entries than [`MAX_VERTICES`].
    #[error("sequence has {0} entries; at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
}

/// A sorted multiset of vertex degrees.
///
/// Entries are kept non-descending and every entry lies in `[0, n-1]`.
///
/// ```
/// use dsforce::DegreeSequence;
/// let s: DegreeSequence = "3,1,2,2".parse().unwrap();
/// assert_eq!(s.degrees(), &[1, 2, 2, 3]);
/// assert_eq!(s.m2(), 8);
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    /// Builds a sequence from arbitrary-order degrees, sorting and validating.
    pub fn new(mut degrees: Vec<usize>) -> Result<Self, SequenceError> {
        let n = degrees.len();
        if n > MAX_VERTICES {
            return Err(SequenceError::TooManyVertices(n));
        }
        if let Some(&d) = degrees.iter().find(|&&d| d + 1 > n) {
            return Err(SequenceError::DegreeOutOfRange { degree: d, n });
        }
        degrees.sort_unstable();
        Ok(Self { degrees })
    }

    /// Parses comma- or whitespace-separated decimal degrees.
    pub fn parse(text: &str) -> Result<Self, SequenceError> {
        let tokens: Vec<&str> = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .collect();
        if tokens.is_empty() {
            return Err(SequenceError::MalformedToken(text.to_owned()));
        }
        let mut degrees = Vec::with_capacity(tokens.len());
        for t in tokens {
            let d: usize = t
                .parse()
                .map_err(|_| SequenceError::MalformedToken(t.to_owned()))?;
            degrees.push(d);
        }
        Self::new(degrees)
    }

    /// Number of entries (vertices of any realization).
    #[must_use]
    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    /// Sum of all degrees (twice the edge count when the sequence is graphic).
    #[must_use]
    pub fn m2(&self) -> usize {
        self.degrees.iter().sum()
    }

    /// The entries, sorted non-descending.
    #[must_use]
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Multiplicity of `d` in the sequence.
    #[must_use]
    pub fn count_of(&self, d: usize) -> usize {
        self.degrees.iter().filter(|&&x| x == d).count()
    }

    /// Whether some entry equals `d`.
    #[must_use]
    pub fn contains_degree(&self, d: usize) -> bool {
        self.degrees.binary_search(&d).is_ok()
    }

    /// Erdős–Gallai test: true iff some simple graph realizes the sequence.
    #[must_use]
    pub fn is_graphic(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        if self.m2() % 2 != 0 {
            return false;
        }
        // Work on the non-increasing ordering d[0] >= d[1] >= ...
        let desc: Vec<usize> = self.degrees.iter().rev().copied().collect();
        let mut left = 0usize;
        for k in 1..=n {
            left += desc[k - 1];
            let mut right = k * (k - 1);
            for &d in &desc[k..] {
                right += d.min(k);
            }
            if left > right {
                return false;
            }
        }
        true
    }

    /// The degree sequence of the complement of any realization:
    /// each entry `d` becomes `n - 1 - d`, re-sorted.
    #[must_use]
    pub fn complement(&self) -> DegreeSequence {
        let n = self.n();
        let degrees = self.degrees.iter().rev().map(|&d| n - 1 - d).collect();
        DegreeSequence { degrees }
    }

    /// Per-degree classes with bad/dull flags, ascending by degree.
    #[must_use]
    pub fn degree_classes(&self) -> Vec<DegreeClass> {
        let mut classes: Vec<DegreeClass> = Vec::new();
        for &d in &self.degrees {
            match classes.last_mut() {
                Some(c) if c.degree == d => c.count += 1,
                _ => classes.push(DegreeClass {
                    degree: d,
                    count: 1,
                    is_bad: false,
                    is_dull: false,
                }),
            }
        }
        for c in &mut classes {
            c.is_bad = c.degree > 0 && self.contains_degree(c.degree - 1);
            c.is_dull = self.contains_degree(c.degree + 1);
        }
        classes
    }

    /// True iff no two entries differ by exactly one
    /// (equivalently: no degree is bad, no degree is dull).
    #[must_use]
    pub fn all_degrees_good(&self) -> bool {
        self.degrees
            .windows(2)
            .all(|w| w[1] == w[0] || w[1] > w[0] + 1)
    }

    /// Canonical text form: comma-separated, ascending, no spaces.
    #[must_use]
    pub fn to_canonical_string(&self) -> String {
        let parts: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
        parts.join(",")
    }
}

impl FromStr for DegreeSequence {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

/// One degree value with its multiplicity and bad/dull flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeClass {
    /// The degree value.
    pub degree: usize,
    /// Number of sequence entries with this degree.
    pub count: usize,
    /// Whether `degree - 1` also occurs in the sequence.
    pub is_bad: bool,
    /// Whether `degree + 1` also occurs in the sequence.
    pub is_dull: bool,
}

impl DegreeClass {
    /// A degree is good when it is not bad.
    #[must_use]
    pub fn is_good(&self) -> bool {
        !self.is_bad
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(text: &str) -> DegreeSequence {
        DegreeSequence::parse(text).unwrap()
    }

    #[test]
    fn parse_sorts_and_validates() {
        assert_eq!(seq("3,1,2,0").degrees(), &[0, 1, 2, 3]);
        assert_eq!(seq("2 3, 3\t3 5,5,5 5 5 6").n(), 10);
        assert_eq!(seq("2,3,3,3,5,5,5,5,5,6").m2(), 42);
        assert!(matches!(
            DegreeSequence::parse(""),
            Err(SequenceError::MalformedToken(_))
        ));
        assert!(matches!(
            DegreeSequence::parse("1,x,2"),
            Err(SequenceError::MalformedToken(_))
        ));
        assert!(matches!(
            DegreeSequence::parse("3,1,2,9"),
            Err(SequenceError::DegreeOutOfRange { degree: 9, n: 4 })
        ));
    }

    #[test]
    fn graphicness_basics() {
        assert!(seq("1,1,1,1,2,2,3,5").is_graphic());
        assert!(seq("0").is_graphic());
        assert!(!seq("3,3,1,1").is_graphic()); // fails the stub-matching inequality
        assert!(!seq("1,1,1").is_graphic()); // odd sum
        assert!(seq("2,3,3,3,5,5,5,5,5,6").is_graphic());
        // Degrees at or above the order cannot fit a simple graph at all.
        assert!(matches!(
            DegreeSequence::parse("3,3,3"),
            Err(SequenceError::DegreeOutOfRange { degree: 3, n: 3 })
        ));
    }

    #[test]
    fn complement_formula_and_involution() {
        assert_eq!(seq("1,1,2,2,3,3").complement().degrees(), &[2, 2, 3, 3, 4, 4]);
        assert_eq!(seq("3,3,3,3").complement().degrees(), &[0, 0, 0, 0]);
        let s = seq("2,3,3,3,5,5,5,5,5,6");
        assert_eq!(s.complement().complement(), s);
    }

    #[test]
    fn classification_flags() {
        let classes = seq("2,2,3,3,3,5,5,7,7,8,9").degree_classes();
        let bad: Vec<usize> = classes.iter().filter(|c| c.is_bad).map(|c| c.degree).collect();
        let dull: Vec<usize> = classes.iter().filter(|c| c.is_dull).map(|c| c.degree).collect();
        assert_eq!(bad, vec![3, 8, 9]);
        assert_eq!(dull, vec![2, 7, 8]);

        let regular = seq("3,3,3,3").degree_classes();
        assert!(regular.iter().all(|c| !c.is_bad && !c.is_dull));

        let minimal = seq("1,1,2").degree_classes();
        assert!(minimal[1].is_bad && !minimal[1].is_dull);
        assert!(minimal[0].is_dull && !minimal[0].is_bad);
    }

    #[test]
    fn good_degree_test() {
        assert!(!seq("2,2,2,4,4,4,5,6,6,9").all_degrees_good());
        assert!(seq("3,3,3,3,3,3").all_degrees_good());
        assert!(seq("0,2,2,4,4").all_degrees_good());
        assert!(seq("0").all_degrees_good());
    }

    #[test]
    fn canonical_text_round_trip() {
        let s = seq("6, 5 5,5 5 5,3,3, 3,2");
        assert_eq!(s.to_canonical_string(), "2,3,3,3,5,5,5,5,5,6");
        assert_eq!(DegreeSequence::parse(&s.to_canonical_string()).unwrap(), s);
    }
}
