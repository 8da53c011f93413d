//! Products and coproducts on set compositions, the two graded Hopf
//! algebras built from them, and their transport to trees.
//!
//! The twisted structure is `(∗, δ)` on compositions of arbitrary finite
//! sets. On compositions of initial segments `[n]` it induces
//! `(∗̄, δ̂)`, which is cocommutative, and `(∗̂, δ̄)`, which is not.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::bialgebra::{check_cap, is_primitive, ConvolutionPowers, GradedBialgebra, PER_ELEMENT_CAP};
use crate::comp::{enumerate_set_compositions, OrderIso, SetComposition};
use crate::error::{Error, ParseError, Result};
use crate::linear::{Integer, LinComb, Rational, Tensor};
use crate::report::{Check, Report};
use crate::tree::{enumerate_trees, fgt, inc, IncreasingTree, PlanarTree};

/// Splits `p` along a bitmask over its sorted support: `(P∩A)^# ⊗ (P∩B)^#`.
/// With `standardize`, both sides are relabelled onto initial segments.
fn split(p: &SetComposition, support: &[u32], mask: u64, standardize: bool) -> (SetComposition, SetComposition) {
    let inside = |x: u32| -> bool {
        let i = support.binary_search(&x).expect("element of support");
        mask >> i & 1 == 1
    };
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for block in p.blocks() {
        let (a, b): (Vec<u32>, Vec<u32>) = block.iter().partition(|&&x| inside(x));
        left.push(a);
        right.push(b);
    }
    let left = SetComposition::from_blocks_dropping_empty(left);
    let right = SetComposition::from_blocks_dropping_empty(right);
    if standardize {
        (left.standardize(), right.standardize())
    } else {
        (left, right)
    }
}

fn all_splits(p: &SetComposition, standardize: bool) -> Tensor<SetComposition> {
    let support = p.support();
    assert!(support.len() < 64, "support too large");
    let mut out = LinComb::zero();
    for mask in 0..1u64 << support.len() {
        out.add_term(split(p, &support, mask, standardize), Integer::from(1));
    }
    out
}

/// Twisted coproduct `δ`: all `2^n` splittings of the support, without
/// relabelling.
pub fn coproduct_delta(p: &SetComposition) -> Tensor<SetComposition> {
    all_splits(p, false)
}

/// The `(A, B)` component `P|A ⊗ P|B` of `δ(P)`, unstandardized.
pub fn delta_component(p: &SetComposition, a: &[u32], b: &[u32]) -> Result<Tensor<SetComposition>> {
    let support = p.support();
    let mut cover: Vec<u32> = a.iter().chain(b).copied().collect();
    cover.sort_unstable();
    if cover != support {
        return Err(Error::NotDisjointCover(a.to_vec(), b.to_vec()));
    }
    Ok(LinComb::basis((p.restrict(a)?, p.restrict(b)?)))
}

/// `δ̄(P) = Σ_{p+q=n} P|[p] ⊗ P|p+[q]`.
pub fn restricted_coproduct(p: &SetComposition) -> Result<Tensor<SetComposition>> {
    p.require_initial()?;
    let support = p.support();
    let n = support.len();
    Ok((0..=n)
        .map(|i| (split(p, &support, (1u64 << i) - 1, true), Integer::from(1)))
        .collect())
}

/// `δ̂(P) = Σ_{A∐B=[n]} P|A ⊗ P|B`, with multiplicities.
pub fn cosym_coproduct(p: &SetComposition) -> Result<Tensor<SetComposition>> {
    p.require_initial()?;
    Ok(all_splits(p, true))
}

/// `P ∗̄ Q`: `Q` shifted past the support of `P`, then concatenated.
pub fn restricted_product(p: &SetComposition, q: &SetComposition) -> Result<SetComposition> {
    p.require_initial()?;
    q.require_initial()?;
    Ok(p.concat_unchecked(&q.shift(p.degree() as u32)))
}

/// The `k`-subsets of `[n]` in lexicographic order.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<u32>> {
    fn go(start: u32, n: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            if (n - x + 1) as usize + cur.len() < k {
                break;
            }
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n as u32, k, &mut Vec::new(), &mut out);
    out
}

/// `P ∗̂ Q = Σ_{A∐B=[p+q], |A|=p} is_A(P) ∗ is_B(Q)`.
pub fn symmetrized_product(p: &SetComposition, q: &SetComposition) -> Result<LinComb<SetComposition>> {
    p.require_initial()?;
    q.require_initial()?;
    let (m, n) = (p.degree(), q.degree());
    let all: Vec<u32> = (1..=(m + n) as u32).collect();
    let mut out = LinComb::zero();
    for a in subsets_of_size(m + n, m) {
        let b: Vec<u32> = all.iter().copied().filter(|x| a.binary_search(x).is_err()).collect();
        let pa = p.relabel(&OrderIso::new(&p.support(), &a)?)?;
        let qb = q.relabel(&OrderIso::new(&q.support(), &b)?)?;
        out.add_term(pa.concat_unchecked(&qb), Integer::from(1));
    }
    Ok(out)
}

/// The two graded connected Hopf algebras on compositions of `[n]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CompHopf {
    /// `(∗̄, δ̂)`, cocommutative.
    RestrictedCosym,
    /// `(∗̂, δ̄)`.
    SymmetrizedRestricted,
}

impl CompHopf {
    pub const ALL: [CompHopf; 2] = [CompHopf::RestrictedCosym, CompHopf::SymmetrizedRestricted];
}

impl fmt::Display for CompHopf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CompHopf::RestrictedCosym => "restricted-cosym",
            CompHopf::SymmetrizedRestricted => "symmetrized-restricted",
        })
    }
}

impl FromStr for CompHopf {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        match s {
            "restricted-cosym" => Ok(CompHopf::RestrictedCosym),
            "symmetrized-restricted" => Ok(CompHopf::SymmetrizedRestricted),
            _ => Err(ParseError::new("Hopf structure", s, "unknown name")),
        }
    }
}

impl GradedBialgebra for CompHopf {
    type Key = SetComposition;

    fn name(&self) -> String {
        self.to_string()
    }

    fn basis(&self, n: usize) -> Vec<SetComposition> {
        enumerate_set_compositions(n)
    }

    fn unit(&self) -> SetComposition {
        SetComposition::empty()
    }

    fn product(&self, a: &SetComposition, b: &SetComposition) -> LinComb<SetComposition> {
        match self {
            CompHopf::RestrictedCosym => LinComb::basis(restricted_product(a, b).expect("initial supports")),
            CompHopf::SymmetrizedRestricted => symmetrized_product(a, b).expect("initial supports"),
        }
    }

    fn coproduct(&self, a: &SetComposition) -> Tensor<SetComposition> {
        match self {
            CompHopf::RestrictedCosym => cosym_coproduct(a),
            CompHopf::SymmetrizedRestricted => restricted_coproduct(a),
        }
        .expect("initial support")
    }

    fn cocommutative(&self) -> bool {
        matches!(self, CompHopf::RestrictedCosym)
    }
}

/// `P ∗̂ Q` equals `P ∗̄ Q` plus strictly `≪`-larger terms, all with
/// coefficient 1.
pub fn check_triangularity(p: &SetComposition, q: &SetComposition) -> Result<bool> {
    let hat = symmetrized_product(p, q)?;
    let bar = restricted_product(p, q)?;
    let one = Integer::from(1);
    let Some((lead, _)) = hat.leading() else {
        return Ok(false);
    };
    Ok(*lead == bar && hat.iter().all(|(_, c)| *c == one))
}

/// Number of reduced compositions of `[n]`, by filtering.
pub fn reduced_count(n: usize) -> usize {
    enumerate_set_compositions(n)
        .iter()
        .filter(|p| p.is_reduced().expect("initial support"))
        .count()
}

/// Product of a sequence in one of the two algebras.
pub fn product_of(h: CompHopf, factors: &[SetComposition]) -> LinComb<SetComposition> {
    let mut acc = LinComb::basis(SetComposition::empty());
    for f in factors {
        acc = crate::bialgebra::mul(&h, &acc, &LinComb::basis(f.clone()));
    }
    acc
}

/// The free generators `e¹(R)`, `R` reduced of degree `n`, of the
/// primitive Lie algebra of `(∗̄, δ̂)`, with `e¹` the convolution
/// logarithm of the identity. Pairs are in `≪` order of `R`.
pub fn primitive_generators(n: usize) -> Result<Vec<(SetComposition, LinComb<SetComposition, Rational>)>> {
    check_cap(n, PER_ELEMENT_CAP)?;
    let mut powers = ConvolutionPowers::new(CompHopf::RestrictedCosym);
    Ok(enumerate_set_compositions(n)
        .into_iter()
        .filter(|r| r.is_reduced().expect("initial support"))
        .map(|r| {
            let e = powers.log_identity(&r);
            (r, e)
        })
        .collect())
}

/// Freeness evidence up to degree `n_max`: factorization roundtrip, the
/// series identity `F = 1/(1 − R)`, and unitriangularity of the
/// `∗̂`-products of reduced factor sequences.
pub fn check_freeness(n_max: usize) -> Result<Report> {
    check_cap(n_max, 6)?;
    let mut report = Report::new("freeness");
    let by_degree: Vec<Vec<SetComposition>> = (0..=n_max).map(enumerate_set_compositions).collect();
    let elements: Vec<&SetComposition> = by_degree.iter().flatten().collect();

    let bad = elements.par_iter().find_map_first(|p| {
        let factors = p.factor_reduced().expect("initial support");
        let ok = factors.iter().all(|f| f.is_reduced() == Ok(true))
            && product_of(CompHopf::RestrictedCosym, &factors) == LinComb::basis((*p).clone());
        (!ok).then(|| p.to_string())
    });
    report.push(Check::from_search("reduced factorization", elements.len(), bad));

    let fubini: Vec<usize> = by_degree.iter().map(Vec::len).collect();
    let reduced: Vec<usize> = (0..=n_max).map(|n| if n == 0 { 0 } else { reduced_count(n) }).collect();
    let mut series = Check::pass("series F = 1/(1 - R)", n_max + 1);
    for n in 1..=n_max {
        let rhs: usize = (1..=n).map(|k| reduced[k] * fubini[n - k]).sum();
        if rhs != fubini[n] {
            series = Check::fail(
                "series F = 1/(1 - R)",
                n_max + 1,
                format!("degree {n}: {} != {rhs}", fubini[n]),
            );
            break;
        }
    }
    let counts: Vec<String> = reduced[1..].iter().map(usize::to_string).collect();
    report.push(series.with_detail(format!("r = {}", counts.join(","))));

    let bad = elements.par_iter().find_map_first(|p| {
        let factors = p.factor_reduced().expect("initial support");
        let row = product_of(CompHopf::SymmetrizedRestricted, &factors);
        let ok = matches!(row.leading(), Some((lead, c)) if lead == *p && *c == Integer::from(1));
        (!ok).then(|| p.to_string())
    });
    report.push(Check::from_search(
        "symmetrized basis unitriangular",
        elements.len(),
        bad,
    ));
    Ok(report)
}

/// `Σ_A contract(T, A) ⊗ contract(T, B)` over all splittings of the labels.
pub fn tree_cosym_coproduct(t: &IncreasingTree) -> Result<Tensor<IncreasingTree>> {
    let p = t.standardize().sigma()?;
    Ok(cosym_coproduct(&p)?.map_keys(|(a, b)| (IncreasingTree::tau(a), IncreasingTree::tau(b))))
}

/// `Σ_p contract(T, [p]) ⊗ contract(T, p+[q])`.
pub fn tree_restricted_coproduct(t: &IncreasingTree) -> Result<Tensor<IncreasingTree>> {
    let p = t.standardize().sigma()?;
    Ok(restricted_coproduct(&p)?.map_keys(|(a, b)| (IncreasingTree::tau(a), IncreasingTree::tau(b))))
}

/// Planar trees under left grafting, with the coproduct of left
/// increasing trees: `Δ(T) = Σ_A Fgt(Inc(T)|A) ⊗ Fgt(Inc(T)|B)`.
///
/// `Inc` embeds it into `(∗̄, δ̂)` on increasing trees.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct TreeHopf;

impl GradedBialgebra for TreeHopf {
    type Key = PlanarTree;

    fn name(&self) -> String {
        "planar-trees".into()
    }

    fn basis(&self, n: usize) -> Vec<PlanarTree> {
        enumerate_trees(n)
    }

    fn unit(&self) -> PlanarTree {
        PlanarTree::Leaf
    }

    fn product(&self, a: &PlanarTree, b: &PlanarTree) -> LinComb<PlanarTree> {
        LinComb::basis(PlanarTree::graft_left(a, b))
    }

    fn coproduct(&self, a: &PlanarTree) -> Tensor<PlanarTree> {
        tree_cosym_coproduct(&inc(a))
            .expect("left increasing trees are standard")
            .map_keys(|(x, y)| (fgt(x), fgt(y)))
    }

    fn cocommutative(&self) -> bool {
        true
    }
}

/// `e¹(R)` is `δ̂`-primitive.
pub fn is_cosym_primitive(x: &LinComb<SetComposition, Rational>) -> bool {
    is_primitive(&CompHopf::RestrictedCosym, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::{check_bialgebra, graded_log_identity};

    fn c(s: &str) -> SetComposition {
        s.parse().unwrap()
    }

    fn terms(x: &Tensor<SetComposition>) -> Vec<(String, String, i64)> {
        x.iter()
            .map(|((a, b), k)| (a.to_string(), b.to_string(), i64::try_from(k).unwrap()))
            .collect()
    }

    fn sorted(mut v: Vec<(String, String, i64)>) -> Vec<(String, String, i64)> {
        v.sort();
        v
    }

    fn t(a: &str, b: &str, k: i64) -> (String, String, i64) {
        (a.into(), b.into(), k)
    }

    #[test]
    fn twisted_coproduct_example() {
        let d = coproduct_delta(&c("1,4|7"));
        assert_eq!(d.len(), 8);
        let expected = vec![
            t("1,4|7", "0", 1),
            t("1,4", "7", 1),
            t("1|7", "4", 1),
            t("4|7", "1", 1),
            t("1", "4|7", 1),
            t("4", "1|7", 1),
            t("7", "1,4", 1),
            t("0", "1,4|7", 1),
        ];
        assert_eq!(sorted(terms(&d)), sorted(expected));
        assert_eq!(terms(&coproduct_delta(&SetComposition::empty())), vec![t("0", "0", 1)]);
    }

    #[test]
    fn delta_components() {
        let d = delta_component(&c("1,4|7"), &[1, 7], &[4]).unwrap();
        assert_eq!(terms(&d), vec![t("1|7", "4", 1)]);
        let d = delta_component(&c("2,6|3,4|1|5"), &[1, 2, 4, 6], &[3, 5]).unwrap();
        assert_eq!(terms(&d), vec![t("2,6|4|1", "3|5", 1)]);
        assert!(delta_component(&c("1|2"), &[1], &[1]).is_err());
    }

    #[test]
    fn restricted_coproduct_example() {
        let d = restricted_coproduct(&c("1,3|2")).unwrap();
        let expected = vec![
            t("0", "1,3|2", 1),
            t("1", "2|1", 1),
            t("1|2", "1", 1),
            t("1,3|2", "0", 1),
        ];
        assert_eq!(sorted(terms(&d)), sorted(expected));
        assert!(restricted_coproduct(&c("2|3")).is_err());
    }

    #[test]
    fn cosym_coproduct_example() {
        let d = cosym_coproduct(&c("1,2")).unwrap();
        let expected = vec![t("0", "1,2", 1), t("1", "1", 2), t("1,2", "0", 1)];
        assert_eq!(sorted(terms(&d)), sorted(expected));
        let d = cosym_coproduct(&c("1")).unwrap();
        assert_eq!(sorted(terms(&d)), sorted(vec![t("0", "1", 1), t("1", "0", 1)]));
    }

    #[test]
    fn product_examples() {
        assert_eq!(restricted_product(&c("1|2"), &c("1,2")).unwrap(), c("1|2|3,4"));
        assert_eq!(restricted_product(&c("1"), &c("1")).unwrap(), c("1|2"));
        assert_eq!(
            restricted_product(&SetComposition::empty(), &c("2|1")).unwrap(),
            c("2|1")
        );
        let s = symmetrized_product(&c("1"), &c("1")).unwrap();
        assert_eq!(
            s,
            [c("1|2"), c("2|1")]
                .into_iter()
                .map(|k| (k, Integer::from(1)))
                .collect()
        );
        let s = symmetrized_product(&c("1"), &c("1,2")).unwrap();
        let expected: Vec<_> = ["1|2,3", "2|1,3", "3|1,2"].iter().map(|x| c(x)).collect();
        assert_eq!(s.keys().cloned().collect::<Vec<_>>(), expected);
        assert!(symmetrized_product(&c("2"), &c("1")).is_err());
    }

    #[test]
    fn subsets_are_lexicographic() {
        assert_eq!(subsets_of_size(3, 2), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(subsets_of_size(2, 0), vec![Vec::<u32>::new()]);
        assert_eq!(subsets_of_size(5, 2).len(), 10);
    }

    #[test]
    fn triangularity_examples() {
        assert!(check_triangularity(&c("1"), &c("1")).unwrap());
        assert!(check_triangularity(&c("1,2"), &SetComposition::empty()).unwrap());
        assert!(check_triangularity(&c("2|1"), &c("1|2")).unwrap());
    }

    #[test]
    fn log_of_identity_in_low_degree() {
        let e = graded_log_identity(CompHopf::RestrictedCosym);
        assert!(e.on_basis(&SetComposition::empty()).is_zero());
        assert_eq!(e.on_basis(&c("1")), LinComb::basis(c("1")));
        let q = |x: i64| Rational::from_integer(Integer::from(x));
        let expected: LinComb<_, Rational> = [(c("1,2"), q(1)), (c("1|2"), q(-1))].into_iter().collect();
        assert_eq!(e.on_basis(&c("1,2")), expected);
        let expected: LinComb<_, Rational> = [(c("2|1"), q(1)), (c("1|2"), q(-1))].into_iter().collect();
        assert_eq!(e.on_basis(&c("2|1")), expected);
    }

    #[test]
    fn generators_are_primitive_in_degree_three() {
        let gens = primitive_generators(3).unwrap();
        assert_eq!(gens.len(), 8);
        assert!(gens.iter().all(|(_, e)| is_cosym_primitive(e)));
    }

    #[test]
    fn both_structures_pass_in_degree_three() {
        for h in CompHopf::ALL {
            let r = check_bialgebra(&h, 3).unwrap();
            assert!(r.passed(), "{r}");
        }
        let r = check_bialgebra(&CompHopf::SymmetrizedRestricted, 3).unwrap();
        let witness = r.checks.iter().find(|c| c.name == "non-cocommutativity").unwrap();
        assert_eq!(witness.detail.as_deref(), Some("witness 1|2,3"));
    }

    #[test]
    fn tree_hopf_passes_in_degree_three() {
        let r = check_bialgebra(&TreeHopf, 3).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn freeness_up_to_four() {
        let r = check_freeness(4).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.checks[1].detail.as_deref(), Some("r = 1,2,8,48"));
    }
}
