//! Permutations as a Hopf algebra: concatenation with the cosymmetrized
//! coproduct, and the Malvenuto–Reutenauer structure.

use std::fmt;
use std::str::FromStr;

use crate::bialgebra::GradedBialgebra;
use crate::error::ParseError;
use crate::hopf::subsets_of_size;
use crate::linear::{Integer, LinComb, Tensor};
use crate::perm::{enumerate_permutations, Permutation};

/// `α × β`: the word of `α` followed by `β` shifted by `n`.
pub fn concat_perm(a: &Permutation, b: &Permutation) -> Permutation {
    a.concat(b)
}

/// `q_(n,m)`: the permutations increasing on `1..n` and on `n+1..n+m`.
pub fn q_shuffle_sum(n: usize, m: usize) -> LinComb<Permutation> {
    let all: Vec<u32> = (1..=(n + m) as u32).collect();
    subsets_of_size(n + m, n)
        .into_iter()
        .map(|a| {
            let rest = all.iter().copied().filter(|x| a.binary_search(x).is_err());
            let word = a.iter().copied().chain(rest).collect();
            (Permutation::new(word).expect("shuffle"), Integer::from(1))
        })
        .collect()
}

/// `α ∗ β = q_(n,m) · (α × β)`, with `(π∘σ)(i) = π(σ(i))`.
pub fn mr_product(a: &Permutation, b: &Permutation) -> LinComb<Permutation> {
    let ab = a.concat(b);
    q_shuffle_sum(a.degree(), b.degree()).map_keys(|pi| pi.compose(&ab))
}

/// `δ̄(α) = Σ_i α|[i] ⊗ is(α|{i+1..n})`; the left side needs no relabelling.
pub fn mr_coproduct(a: &Permutation) -> Tensor<Permutation> {
    let n = a.degree() as u32;
    (0..=n)
        .map(|i| {
            let low: Vec<u32> = (1..=i).collect();
            let high: Vec<u32> = (i + 1..=n).collect();
            let left = Permutation::new(a.restrict_values(&low).expect("values in range")).expect("word on [i]");
            let right = a.restrict_std(&high).expect("values in range");
            ((left, right), Integer::from(1))
        })
        .collect()
}

/// `δ̂(α) = Σ_{S∐T=[n]} is_S(α|S) ⊗ is_T(α|T)`, with multiplicities.
pub fn cosym_coproduct_perm(a: &Permutation) -> Tensor<Permutation> {
    let n = a.degree();
    let mut out = LinComb::zero();
    for mask in 0..1u64 << n {
        let (s, t): (Vec<u32>, Vec<u32>) = (1..=n as u32).partition(|&x| mask >> (x - 1) & 1 == 1);
        let left = a.restrict_std(&s).expect("values in range");
        let right = a.restrict_std(&t).expect("values in range");
        out.add_term((left, right), Integer::from(1));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PermHopf {
    /// `(×, δ̂)`, cocommutative.
    ConcatCosym,
    /// Malvenuto–Reutenauer `(∗, δ̄)`.
    MalvenutoReutenauer,
}

impl PermHopf {
    pub const ALL: [PermHopf; 2] = [PermHopf::ConcatCosym, PermHopf::MalvenutoReutenauer];
}

impl fmt::Display for PermHopf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PermHopf::ConcatCosym => "concat-cosym",
            PermHopf::MalvenutoReutenauer => "malvenuto-reutenauer",
        })
    }
}

impl FromStr for PermHopf {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        match s {
            "concat-cosym" => Ok(PermHopf::ConcatCosym),
            "malvenuto-reutenauer" => Ok(PermHopf::MalvenutoReutenauer),
            _ => Err(ParseError::new("Hopf structure", s, "unknown name")),
        }
    }
}

impl GradedBialgebra for PermHopf {
    type Key = Permutation;

    fn name(&self) -> String {
        self.to_string()
    }

    fn basis(&self, n: usize) -> Vec<Permutation> {
        enumerate_permutations(n)
    }

    fn unit(&self) -> Permutation {
        Permutation::identity(0)
    }

    fn product(&self, a: &Permutation, b: &Permutation) -> LinComb<Permutation> {
        match self {
            PermHopf::ConcatCosym => LinComb::basis(a.concat(b)),
            PermHopf::MalvenutoReutenauer => mr_product(a, b),
        }
    }

    fn coproduct(&self, a: &Permutation) -> Tensor<Permutation> {
        match self {
            PermHopf::ConcatCosym => cosym_coproduct_perm(a),
            PermHopf::MalvenutoReutenauer => mr_coproduct(a),
        }
    }

    fn cocommutative(&self) -> bool {
        matches!(self, PermHopf::ConcatCosym)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::check_bialgebra;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn sum(words: &[&str]) -> LinComb<Permutation> {
        words.iter().map(|w| (p(w), Integer::from(1))).collect()
    }

    fn pair(a: &str, b: &str) -> (Permutation, Permutation) {
        (p(a), p(b))
    }

    #[test]
    fn concatenation() {
        assert_eq!(concat_perm(&p("p:1"), &p("p:1")), p("p:1,2"));
        assert_eq!(concat_perm(&p("p:2,1"), &p("p:1,2")), p("p:2,1,3,4"));
        assert_eq!(concat_perm(&p("p:2,1"), &p("p:")), p("p:2,1"));
    }

    #[test]
    fn shuffles() {
        assert_eq!(q_shuffle_sum(1, 1), sum(&["p:1,2", "p:2,1"]));
        assert_eq!(q_shuffle_sum(0, 3), sum(&["p:1,2,3"]));
        assert_eq!(q_shuffle_sum(2, 1), sum(&["p:1,2,3", "p:1,3,2", "p:2,3,1"]));
    }

    #[test]
    fn products() {
        assert_eq!(mr_product(&p("p:1"), &p("p:1")), sum(&["p:1,2", "p:2,1"]));
        assert_eq!(mr_product(&p("p:2,1"), &p("p:")), sum(&["p:2,1"]));
        assert_eq!(mr_product(&p("p:1"), &p("p:1,2")).len(), 3);
    }

    #[test]
    fn coproducts() {
        let one = |a, b| (pair(a, b), Integer::from(1));
        let expected: Tensor<Permutation> = [one("p:", "p:2,1"), one("p:1", "p:1"), one("p:2,1", "p:")]
            .into_iter()
            .collect();
        assert_eq!(mr_coproduct(&p("p:2,1")), expected);
        let d = cosym_coproduct_perm(&p("p:2,1"));
        assert_eq!(d.coeff(&pair("p:1", "p:1")), Integer::from(2));
        assert_eq!(d.coeff(&pair("p:2,1", "p:")), Integer::from(1));
        assert_eq!(d.coeff(&pair("p:", "p:2,1")), Integer::from(1));
        assert_eq!(d.len(), 3);
        let d = cosym_coproduct_perm(&p("p:1"));
        assert_eq!(d.len(), 2);
    }

    #[test]
    fn both_structures_pass_in_degree_three() {
        for h in PermHopf::ALL {
            let r = check_bialgebra(&h, 3).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
}
