//! Degree-bounded verification suites. Every suite enumerates its cases
//! exhaustively and reports the first counterexample of each property.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::bialgebra::{
    check_bialgebra, check_cap, check_cocommutativity, exp_convolution, graded_log_identity, GradedBialgebra,
    PAIRWISE_CAP, PER_ELEMENT_CAP,
};
use crate::comp::{enumerate_set_compositions, SetComposition};
use crate::error::{ParseError, Result};
use crate::hopf::{
    check_freeness, check_triangularity, coproduct_delta, cosym_coproduct, is_cosym_primitive, primitive_generators,
    reduced_count, restricted_coproduct, restricted_product, symmetrized_product, tree_cosym_coproduct,
    tree_restricted_coproduct, CompHopf, TreeHopf,
};
use crate::linear::{flip, Integer, LinComb, Tensor};
use crate::perm::{enumerate_permutations, perm_to_setcomp, setcomp_to_perm, Permutation};
use crate::report::{Check, Report};
use crate::symgroups::{cosym_coproduct_perm, mr_coproduct, mr_product, PermHopf};
use crate::tree::{enumerate_increasing_trees, enumerate_trees, fgt, inc, IncreasingTree, PlanarTree};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Bijection,
    Counts,
    Hopf,
    Twisted,
    Freeness,
    Generators,
    Embeddings,
    Contraction,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Bijection,
        Suite::Counts,
        Suite::Hopf,
        Suite::Twisted,
        Suite::Freeness,
        Suite::Generators,
        Suite::Embeddings,
        Suite::Contraction,
    ];

    /// Largest accepted `n`.
    pub fn cap(self) -> usize {
        match self {
            Suite::Bijection | Suite::Counts | Suite::Generators => PER_ELEMENT_CAP,
            Suite::Freeness => 6,
            Suite::Hopf | Suite::Twisted | Suite::Embeddings | Suite::Contraction | Suite::All => PAIRWISE_CAP,
        }
    }

    pub fn run(self, n: usize) -> Result<Report> {
        check_cap(n, self.cap())?;
        Ok(match self {
            Suite::Bijection => bijection(n),
            Suite::Counts => counts(n),
            Suite::Hopf => hopf(n)?,
            Suite::Twisted => twisted(n),
            Suite::Freeness => freeness(n)?,
            Suite::Generators => generators(n)?,
            Suite::Embeddings => embeddings(n)?,
            Suite::Contraction => contraction(n),
            Suite::All => {
                let mut report = Report::new(format!("all (n = {n})"));
                for s in Suite::EACH {
                    report.extend(s.run(n.min(s.cap()))?);
                }
                report
            }
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Bijection => "bijection",
            Suite::Counts => "counts",
            Suite::Hopf => "hopf",
            Suite::Twisted => "twisted",
            Suite::Freeness => "freeness",
            Suite::Generators => "generators",
            Suite::Embeddings => "embeddings",
            Suite::Contraction => "contraction",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.to_string() == s)
            .ok_or_else(|| ParseError::new("suite", s, "unknown suite"))
    }
}

fn compositions_up_to(n: usize) -> Vec<SetComposition> {
    (0..=n).flat_map(enumerate_set_compositions).collect()
}

fn comp_pairs(n: usize) -> Vec<(SetComposition, SetComposition)> {
    let by_degree: Vec<_> = (0..=n).map(enumerate_set_compositions).collect();
    let mut out = Vec::new();
    for p in 0..=n {
        for q in 0..=n - p {
            for x in &by_degree[p] {
                for y in &by_degree[q] {
                    out.push((x.clone(), y.clone()));
                }
            }
        }
    }
    out
}

fn search<T: Sync>(name: &str, items: &[T], test: impl Fn(&T) -> Option<String> + Sync + Send) -> Check {
    Check::from_search(name, items.len(), items.par_iter().find_map_first(test))
}

fn exact(name: &str, got: &[usize], expected: &[usize]) -> Check {
    let show = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    if got == expected {
        Check::pass(name, got.len()).with_detail(show(got))
    } else {
        Check::fail(name, got.len(), format!("{} != {}", show(got), show(expected)))
    }
}

/// `σ∘τ = id` on compositions, `τ∘σ = id` on independently enumerated
/// increasing trees, and the worked examples.
pub fn bijection(n: usize) -> Report {
    let mut report = Report::new("bijection");
    let comps = compositions_up_to(n);
    report.push(search("sigma after tau", &comps, |p| {
        (IncreasingTree::tau(p).sigma().ok().as_ref() != Some(p)).then(|| p.to_string())
    }));
    let trees: Vec<IncreasingTree> = (0..=n).flat_map(enumerate_increasing_trees).collect();
    report.push(search("tau after sigma", &trees, |t| {
        let back = t.sigma().map(|p| IncreasingTree::tau(&p));
        (back.as_ref() != Ok(t)).then(|| t.to_string())
    }));
    let sizes: Vec<usize> = (0..=n).map(|d| enumerate_increasing_trees(d).len()).collect();
    let fubini: Vec<usize> = (0..=n).map(|d| enumerate_set_compositions(d).len()).collect();
    report.push(exact("increasing trees per degree", &sizes, &fubini));

    let examples: [(&str, &str); 4] = [
        ("2,6|3,4|1|5", "((*((**)**))(**))@4,3,2,1,1"),
        ("1|3,4|2,5", "((**)(***)*)@3,1,2"),
        ("1,3,4|2,5", "((**)(***)*)@2,1,1"),
        ("3,4|1|2,5", "((**)(***)*)@3,2,1"),
    ];
    let bad = examples.iter().find_map(|(p, t)| {
        let p: SetComposition = p.parse().expect("literal");
        let got = IncreasingTree::tau(&p).to_string();
        (got != *t).then(|| format!("tau({p}) = {got}"))
    });
    report.push(Check::from_search("worked examples", examples.len(), bad));
    report
}

/// Number of ordered set partitions of `[n]`, as `Σ_k k!·S(n,k)`.
pub fn fubini_by_stirling(n: usize) -> usize {
    let mut s = vec![vec![0usize; n + 1]; n + 1];
    s[0][0] = 1;
    for i in 1..=n {
        for k in 1..=i {
            s[i][k] = k * s[i - 1][k] + s[i - 1][k - 1];
        }
    }
    let mut fact = 1usize;
    let mut total = 0;
    for (k, stirling) in s[n].iter().enumerate() {
        if k > 0 {
            fact *= k;
        }
        total += fact * stirling;
    }
    total
}

/// Planar trees with `n` branchings: half the large Schröder number.
pub fn schroeder_trees(n: usize) -> usize {
    let mut large = vec![1usize];
    for m in 1..=n {
        let conv: usize = (0..m).map(|k| large[k] * large[m - 1 - k]).sum();
        large.push(large[m - 1] + conv);
    }
    if n == 0 {
        1
    } else {
        large[n] / 2
    }
}

pub fn catalan(n: usize) -> usize {
    let mut c = vec![1usize];
    for m in 1..=n {
        c.push((0..m).map(|k| c[k] * c[m - 1 - k]).sum());
    }
    c[n]
}

pub fn counts(n: usize) -> Report {
    let mut report = Report::new("counts");
    let degrees = 0..=n;
    let comps: Vec<usize> = degrees.clone().map(|d| enumerate_set_compositions(d).len()).collect();
    let fub: Vec<usize> = degrees.clone().map(fubini_by_stirling).collect();
    report.push(exact("set compositions (Fubini)", &comps, &fub));

    let trees: Vec<Vec<PlanarTree>> = degrees.clone().map(enumerate_trees).collect();
    let tree_counts: Vec<usize> = trees.iter().map(Vec::len).collect();
    let schroeder: Vec<usize> = degrees.clone().map(schroeder_trees).collect();
    report.push(exact("planar trees (Schroeder)", &tree_counts, &schroeder));

    let binary: Vec<usize> = trees
        .iter()
        .map(|ts| ts.iter().filter(|t| t.is_binary()).count())
        .collect();
    let cat: Vec<usize> = degrees.clone().map(catalan).collect();
    report.push(exact("binary trees (Catalan)", &binary, &cat));

    let inc_trees: Vec<Vec<IncreasingTree>> = degrees.clone().map(enumerate_increasing_trees).collect();
    let left: Vec<usize> = inc_trees
        .iter()
        .map(|ts| ts.iter().filter(|t| t.is_left_increasing()).count())
        .collect();
    report.push(exact("left increasing trees", &left, &tree_counts));

    let one_per_level = |t: &IncreasingTree| {
        let levels = t.branching_levels();
        let distinct: HashSet<u32> = levels.iter().copied().collect();
        distinct.len() == levels.len()
    };
    let factorial: Vec<usize> = degrees.clone().map(|d| (1..=d).product()).collect();
    let singles: Vec<usize> = inc_trees
        .iter()
        .map(|ts| ts.iter().filter(|t| one_per_level(t)).count())
        .collect();
    report.push(exact("increasing trees, one branching per level", &singles, &factorial));
    let left_singles: Vec<usize> = inc_trees
        .iter()
        .map(|ts| ts.iter().filter(|t| one_per_level(t) && t.is_left_increasing()).count())
        .collect();
    report.push(exact("left increasing, one branching per level", &left_singles, &cat));
    let perms: Vec<usize> = degrees.map(|d| enumerate_permutations(d).len()).collect();
    report.push(exact("permutations", &perms, &factorial));
    report
}

/// Bialgebra axioms for both structures up to `n`, cocommutativity of
/// `δ̂` one degree further, and the `δ̄` witness.
pub fn hopf(n: usize) -> Result<Report> {
    let mut report = Report::new("hopf");
    for h in CompHopf::ALL {
        report.extend(check_bialgebra(&h, n)?);
    }
    let further = (n + 1).min(PER_ELEMENT_CAP);
    report.push(
        check_cocommutativity(&CompHopf::RestrictedCosym, further).with_detail(format!("delta-hat up to {further}")),
    );

    let p: SetComposition = "1,3|2".parse().expect("literal");
    let d = restricted_coproduct(&p)?;
    let (a, b): (SetComposition, SetComposition) = ("1".parse().expect("literal"), "2|1".parse().expect("literal"));
    let ok = d.coeff(&(a.clone(), b.clone())) == Integer::from(1) && d.coeff(&(b, a)) == Integer::from(0);
    let check = if ok {
        Check::pass("delta-bar witness", 1).with_detail("delta-bar(1,3|2) has 1 ⊗ 2|1 but not 2|1 ⊗ 1")
    } else {
        Check::fail("delta-bar witness", 1, "1,3|2")
    };
    report.push(check);
    Ok(report)
}

/// `(∗, δ)` on compositions of subsets of `[n]`.
pub fn twisted(n: usize) -> Report {
    let mut report = Report::new("twisted");
    let support: Vec<u32> = (1..=n as u32).collect();
    // pairs of compositions with disjoint supports inside [n]
    let mut pairs = Vec::new();
    for mask in 0..3usize.pow(n as u32) {
        let (mut s, mut t) = (Vec::new(), Vec::new());
        let mut m = mask;
        for &x in &support {
            match m % 3 {
                1 => s.push(x),
                2 => t.push(x),
                _ => {}
            }
            m /= 3;
        }
        for p in crate::comp::compositions_of(&s) {
            for q in crate::comp::compositions_of(&t) {
                pairs.push((p.clone(), q));
            }
        }
    }
    report.push(search("delta multiplicative", &pairs, |(p, q)| {
        let left = coproduct_delta(&p.concat_unchecked(q));
        let right = coproduct_delta(p).bilinear(&coproduct_delta(q), |(a, b), (c, d)| {
            LinComb::basis((a.concat_unchecked(c), b.concat_unchecked(d)))
        });
        (left != right).then(|| format!("({p}, {q})"))
    }));
    let comps = compositions_up_to(n);
    report.push(search("delta coassociative", &comps, |p| {
        let d = coproduct_delta(p);
        let mut left = LinComb::<(SetComposition, SetComposition, SetComposition)>::zero();
        let mut right = LinComb::zero();
        for ((a, b), c) in d.iter() {
            for ((a1, a2), _) in coproduct_delta(a).iter() {
                left.add_term((a1.clone(), a2.clone(), b.clone()), c.clone());
            }
            for ((b1, b2), _) in coproduct_delta(b).iter() {
                right.add_term((a.clone(), b1.clone(), b2.clone()), c.clone());
            }
        }
        (left != right).then(|| p.to_string())
    }));
    report.push(search("delta cocommutative", &comps, |p| {
        let d = coproduct_delta(p);
        (flip(&d) != d).then(|| p.to_string())
    }));
    report
}

/// Freeness, plus triangularity of `∗̂` over `∗̄` for `p + q ≤ min(n, 5)`.
pub fn freeness(n: usize) -> Result<Report> {
    let mut report = check_freeness(n)?;
    let pairs = comp_pairs(n.min(PAIRWISE_CAP));
    report.push(search("triangularity", &pairs, |(p, q)| {
        (check_triangularity(p, q) != Ok(true)).then(|| format!("({p}, {q})"))
    }));
    Ok(report)
}

/// `e¹(R)` is primitive for every reduced `R`, and `exp⋆(e¹) = id`.
pub fn generators(n: usize) -> Result<Report> {
    let mut report = Report::new("generators");
    let mut total = 0;
    let mut bad = None;
    let mut counts = Vec::new();
    for d in 1..=n {
        let gens = primitive_generators(d)?;
        counts.push(gens.len().to_string());
        if gens.len() != reduced_count(d) && bad.is_none() {
            bad = Some(format!("degree {d}: {} generators", gens.len()));
        }
        total += gens.len();
        if bad.is_none() {
            bad = gens
                .par_iter()
                .find_map_first(|(r, e)| (!is_cosym_primitive(e)).then(|| r.to_string()));
        }
    }
    report.push(
        Check::from_search("generators primitive", total, bad)
            .with_detail(format!("{} per degree, {total} total", counts.join(","))),
    );

    let e = graded_log_identity(CompHopf::RestrictedCosym);
    let comps = compositions_up_to(n.min(4));
    report.push(search("exp of log is identity", &comps, |p| {
        (exp_convolution(&CompHopf::RestrictedCosym, &e, p) != LinComb::basis(p.clone())).then(|| p.to_string())
    }));
    Ok(report)
}

fn perm_pairs(n: usize) -> Vec<(Permutation, Permutation)> {
    let by_degree: Vec<_> = (0..=n).map(enumerate_permutations).collect();
    let mut out = Vec::new();
    for p in 0..=n {
        for q in 0..=n - p {
            for a in &by_degree[p] {
                for b in &by_degree[q] {
                    out.push((a.clone(), b.clone()));
                }
            }
        }
    }
    out
}

fn embed(x: &LinComb<Permutation>) -> LinComb<SetComposition> {
    x.map_keys(perm_to_setcomp)
}

fn embed2(x: &Tensor<Permutation>) -> Tensor<SetComposition> {
    x.map_keys(|(a, b)| (perm_to_setcomp(a), perm_to_setcomp(b)))
}

fn tree_pairs(n: usize) -> Vec<(PlanarTree, PlanarTree)> {
    let by_degree: Vec<_> = (0..=n).map(enumerate_trees).collect();
    let mut out = Vec::new();
    for p in 0..=n {
        for q in 0..=n - p {
            for a in &by_degree[p] {
                for b in &by_degree[q] {
                    out.push((a.clone(), b.clone()));
                }
            }
        }
    }
    out
}

/// Permutations and trees inside the Hopf algebras of compositions.
pub fn embeddings(n: usize) -> Result<Report> {
    let mut report = Report::new("embeddings");
    let perms: Vec<Permutation> = (0..=n).flat_map(enumerate_permutations).collect();
    let images: HashSet<SetComposition> = perms.iter().map(perm_to_setcomp).collect();
    let singletons = compositions_up_to(n)
        .into_iter()
        .filter(|p| p.is_singleton_blocks())
        .count();
    let ok = images.len() == perms.len() && singletons == perms.len();
    report.push(Check::from_search(
        "permutations are the singleton compositions",
        perms.len(),
        (!ok).then(|| format!("{} images, {singletons} singleton compositions", images.len())),
    ));
    report.push(search("setcomp_to_perm inverts the embedding", &perms, |a| {
        (setcomp_to_perm(&perm_to_setcomp(a)).as_ref() != Ok(a)).then(|| a.to_string())
    }));
    report.push(search("inverse is an involution", &perms, |a| {
        (a.inverse().inverse() != *a).then(|| a.to_string())
    }));

    let pairs = perm_pairs(n);
    report.push(search("concatenation to restricted product", &pairs, |(a, b)| {
        let got = perm_to_setcomp(&a.concat(b));
        (restricted_product(&perm_to_setcomp(a), &perm_to_setcomp(b)).ok() != Some(got)).then(|| format!("({a}, {b})"))
    }));
    report.push(search("MR product to symmetrized product", &pairs, |(a, b)| {
        let got = embed(&mr_product(a, b));
        (symmetrized_product(&perm_to_setcomp(a), &perm_to_setcomp(b)).ok() != Some(got)).then(|| format!("({a}, {b})"))
    }));
    report.push(search("cosymmetrized coproducts agree", &perms, |a| {
        (cosym_coproduct(&perm_to_setcomp(a)).ok() != Some(embed2(&cosym_coproduct_perm(a)))).then(|| a.to_string())
    }));
    report.push(search("MR coproduct to restricted coproduct", &perms, |a| {
        (restricted_coproduct(&perm_to_setcomp(a)).ok() != Some(embed2(&mr_coproduct(a)))).then(|| a.to_string())
    }));
    let small = n.min(4);
    for h in PermHopf::ALL {
        report.extend(check_bialgebra(&h, small)?);
    }

    let trees: Vec<PlanarTree> = (0..=n).flat_map(enumerate_trees).collect();
    report.push(search("Fgt after Inc is the identity", &trees, |t| {
        (fgt(&inc(t)) != *t).then(|| t.to_string())
    }));
    report.push(search("Inc is multiplicative", &tree_pairs(n), |(s, t)| {
        let left = inc(&PlanarTree::graft_left(s, t));
        (left != inc(s).restricted_product(&inc(t))).then(|| format!("({s}, {t})"))
    }));
    report.push(search("coproducts of left increasing trees", &trees, |t| {
        let it = inc(t);
        let factors_left =
            |d: Tensor<IncreasingTree>| d.keys().all(|(a, b)| a.is_left_increasing() && b.is_left_increasing());
        let ok = tree_cosym_coproduct(&it).map(factors_left) == Ok(true)
            && tree_restricted_coproduct(&it).map(factors_left) == Ok(true);
        (!ok).then(|| t.to_string())
    }));
    report.extend(check_bialgebra(&TreeHopf, small)?);

    let binary: Vec<PlanarTree> = trees.iter().filter(|t| t.is_binary()).cloned().collect();
    let words: Vec<Option<Permutation>> = binary
        .iter()
        .map(|t| inc(t).sigma().ok().and_then(|p| setcomp_to_perm(&p).ok()))
        .collect();
    let distinct: HashSet<&Permutation> = words.iter().flatten().collect();
    let ok = words.iter().all(Option::is_some) && distinct.len() == binary.len();
    report.push(Check::from_search(
        "binary trees give distinct permutations",
        binary.len(),
        (!ok).then(|| "non-singleton or repeated image".to_string()),
    ));
    report.push(search("binary trees closed under the coproduct", &binary, |t| {
        TreeHopf
            .coproduct(t)
            .keys()
            .any(|(a, b)| !a.is_binary() || !b.is_binary())
            .then(|| t.to_string())
    }));
    Ok(report)
}

/// Contraction against restriction, closure of left increasing trees, and
/// the tree form of `∗̄`.
pub fn contraction(n: usize) -> Report {
    let mut report = Report::new("contraction");
    let mut cases = Vec::new();
    for p in compositions_up_to(n) {
        let d = p.degree();
        for mask in 0..1u32 << d {
            let a: Vec<u32> = (1..=d as u32).filter(|x| mask >> (x - 1) & 1 == 1).collect();
            cases.push((p.clone(), a));
        }
    }
    report.push(search("contraction is restriction", &cases, |(p, a)| {
        let got = IncreasingTree::tau(p).contract(a).and_then(|t| t.sigma());
        (got.ok() != p.restrict_std(a).ok()).then(|| format!("({p}, {a:?})"))
    }));
    let left: Vec<IncreasingTree> = (0..=n).flat_map(enumerate_trees).map(|t| inc(&t)).collect();
    let mut left_cases = Vec::new();
    for t in &left {
        let b = t.branchings();
        for mask in 0..1u32 << b {
            let a: Vec<u32> = (1..=b as u32).filter(|x| mask >> (x - 1) & 1 == 1).collect();
            left_cases.push((t.clone(), a));
        }
    }
    report.push(search(
        "contractions of left increasing trees",
        &left_cases,
        |(t, a)| (t.contract(a).map(|c| c.is_left_increasing()) != Ok(true)).then(|| format!("({t}, {a:?})")),
    ));
    report.push(search(
        "grafting is the restricted product",
        &comp_pairs(n),
        |(p, q)| {
            let graft = IncreasingTree::tau(p).restricted_product(&IncreasingTree::tau(q));
            (graft.sigma().ok() != restricted_product(p, q).ok()).then(|| format!("({p}, {q})"))
        },
    ));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_sequences() {
        let f: Vec<usize> = (0..8).map(fubini_by_stirling).collect();
        assert_eq!(f, vec![1, 1, 3, 13, 75, 541, 4683, 47293]);
        let s: Vec<usize> = (0..7).map(schroeder_trees).collect();
        assert_eq!(s, vec![1, 1, 3, 11, 45, 197, 903]);
        let c: Vec<usize> = (0..5).map(catalan).collect();
        assert_eq!(c, vec![1, 1, 2, 5, 14]);
    }

    #[test]
    fn suites_pass_in_degree_three() {
        for s in Suite::EACH {
            let r = s.run(3).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn caps_are_enforced() {
        assert!(Suite::Hopf.run(6).is_err());
        assert!(Suite::Bijection.run(8).is_err());
        assert_eq!("hopf".parse::<Suite>().unwrap(), Suite::Hopf);
        assert!("nope".parse::<Suite>().is_err());
    }
}
