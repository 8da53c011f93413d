//! Permutations in one-line notation and their place among set
//! compositions.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::comp::{sorted_set, SetComposition};
use crate::error::{Error, ParseError, Result};

/// A permutation of `[n]` as the word `(σ(1), …, σ(n))`.
///
/// Composition follows `(π∘σ)(i) = π(σ(i))`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; word.len()];
        for &x in &word {
            let i = x as usize;
            if i == 0 || i > word.len() || seen[i - 1] {
                return Err(Error::NotAPermutation(word));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n as u32).collect(),
        }
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }

    /// `σ(i)` for `i ∈ [n]`.
    pub fn apply(&self, i: u32) -> u32 {
        self.word[i as usize - 1]
    }

    /// `self ∘ other`, both in `S_n`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degrees differ");
        Permutation {
            word: other.word.iter().map(|&i| self.apply(i)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.word.len()];
        for (i, &x) in self.word.iter().enumerate() {
            inv[x as usize - 1] = i as u32 + 1;
        }
        Permutation { word: inv }
    }

    /// The subsequence of values lying in `set`, without relabelling.
    pub fn restrict_values(&self, set: &[u32]) -> Result<Vec<u32>> {
        let set = sorted_set(set);
        if set.iter().any(|&x| x == 0 || x as usize > self.degree()) {
            let support = (1..=self.degree() as u32).collect();
            return Err(Error::NotSubset(set, support));
        }
        Ok(self
            .word
            .iter()
            .copied()
            .filter(|x| set.binary_search(x).is_ok())
            .collect())
    }

    /// `is_S(σ|_S)`: the value subsequence on `S`, standardized.
    pub fn restrict_std(&self, set: &[u32]) -> Result<Permutation> {
        let sub = self.restrict_values(set)?;
        Ok(Permutation {
            word: standardize_word(&sub),
        })
    }

    /// The concatenation `α × β`: `β` shifted past the values of `α`.
    pub fn concat(&self, other: &Permutation) -> Permutation {
        let n = self.degree() as u32;
        let mut word = self.word.clone();
        word.extend(other.word.iter().map(|&x| x + n));
        Permutation { word }
    }

    /// The set composition `({σ(1)}, …, {σ(n)})`.
    pub fn to_set_composition(&self) -> SetComposition {
        SetComposition::from_sorted_blocks(self.word.iter().map(|&x| vec![x]).collect())
    }

    /// Inverse of [`Permutation::to_set_composition`].
    pub fn from_set_composition(p: &SetComposition) -> Result<Permutation> {
        if let Some(b) = p.blocks().iter().find(|b| b.len() != 1) {
            return Err(Error::NonSingletonBlock(b.clone()));
        }
        if !p.has_initial_support() {
            return Err(Error::NotInitialSegment(p.support()));
        }
        Ok(Permutation {
            word: p.blocks().iter().map(|b| b[0]).collect(),
        })
    }
}

pub(crate) fn standardize_word(word: &[u32]) -> Vec<u32> {
    let sorted = sorted_set(word);
    word.iter()
        .map(|x| sorted.binary_search(x).expect("value present") as u32 + 1)
        .collect()
}

/// All permutations of `[n]` in lexicographic order.
pub fn enumerate_permutations(n: usize) -> Vec<Permutation> {
    let mut word: Vec<u32> = (1..=n as u32).collect();
    let mut out = vec![Permutation { word: word.clone() }];
    while next_permutation(&mut word) {
        out.push(Permutation { word: word.clone() });
    }
    out
}

fn next_permutation(a: &mut [u32]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let Some(i) = (0..a.len() - 1).rev().find(|&i| a[i] < a[i + 1]) else {
        return false;
    };
    let j = (i + 1..a.len()).rev().find(|&j| a[j] > a[i]).expect("pivot");
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

pub fn perm_to_setcomp(p: &Permutation) -> SetComposition {
    p.to_set_composition()
}

pub fn setcomp_to_perm(p: &SetComposition) -> Result<Permutation> {
    Permutation::from_set_composition(p)
}

pub fn perm_restrict_std(p: &Permutation, set: &[u32]) -> Result<Permutation> {
    p.restrict_std(set)
}

pub fn perm_inverse(p: &Permutation) -> Permutation {
    p.inverse()
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("p:")?;
        for (i, x) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let err = |reason: &str| ParseError::new("permutation", s, reason);
        let body = s.trim().strip_prefix("p:").ok_or_else(|| err("missing `p:` prefix"))?;
        if body.trim().is_empty() {
            return Ok(Permutation::default());
        }
        let word = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| err(&format!("`{}` is not a positive integer", t.trim())))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Permutation::new(word).map_err(|e| err(&e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("p:3,5,2,4,1").to_string(), "p:3,5,2,4,1");
        assert_eq!(p("p:"), Permutation::identity(0));
        assert!("p:1,1".parse::<Permutation>().is_err());
        assert!("p:2,3".parse::<Permutation>().is_err());
        assert!("3,1,2".parse::<Permutation>().is_err());
    }

    #[test]
    fn embedding_into_compositions() {
        let c: SetComposition = "2|3|1".parse().unwrap();
        assert_eq!(perm_to_setcomp(&p("p:2,3,1")), c);
        assert_eq!(perm_to_setcomp(&Permutation::identity(3)), "1|2|3".parse().unwrap());
        assert_eq!(perm_to_setcomp(&Permutation::identity(0)), SetComposition::empty());
        assert_eq!(setcomp_to_perm(&c).unwrap(), p("p:2,3,1"));
        assert!(matches!(
            setcomp_to_perm(&"1,2".parse().unwrap()),
            Err(Error::NonSingletonBlock(_))
        ));
        assert!(matches!(
            setcomp_to_perm(&"2|3".parse().unwrap()),
            Err(Error::NotInitialSegment(_))
        ));
        assert_eq!(
            setcomp_to_perm(&SetComposition::empty()).unwrap(),
            Permutation::identity(0)
        );
    }

    #[test]
    fn restriction_examples() {
        let s = p("p:3,5,2,4,1");
        assert_eq!(s.restrict_values(&[1, 3, 5]).unwrap(), vec![3, 5, 1]);
        assert_eq!(perm_restrict_std(&s, &[1, 3, 5]).unwrap(), p("p:2,3,1"));
        assert_eq!(perm_restrict_std(&s, &[1, 2, 3, 4, 5]).unwrap(), s);
        assert!(perm_restrict_std(&s, &[6]).is_err());
    }

    #[test]
    fn inverse_examples() {
        let s = p("p:2,3,1");
        assert_eq!(perm_inverse(&s), p("p:3,1,2"));
        assert_eq!(s.compose(&s.inverse()), Permutation::identity(3));
        assert_eq!(perm_inverse(&Permutation::identity(4)), Permutation::identity(4));
        assert_eq!(perm_inverse(&p("p:2,1")), p("p:2,1"));
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let all = enumerate_permutations(3);
        assert_eq!(all.len(), 6);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(enumerate_permutations(0), vec![Permutation::identity(0)]);
    }
}
