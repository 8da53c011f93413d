//! Graded connected bialgebras over a combinatorial basis: convolution,
//! the logarithm of the identity, the antipode, and exhaustive axiom
//! checks up to a degree bound.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linear::{lift, tensor, Basis, Coeff, GradedMap, Integer, LinComb, Rational, Tensor};
use crate::report::{Check, Report};

/// Largest degree accepted by checks that look at each basis element once.
pub const PER_ELEMENT_CAP: usize = 7;

/// Largest total degree accepted by checks over pairs and triples.
pub const PAIRWISE_CAP: usize = 5;

pub(crate) fn check_cap(requested: usize, cap: usize) -> Result<()> {
    if requested > cap {
        return Err(Error::DegreeTooLarge { requested, cap });
    }
    Ok(())
}

/// A graded connected bialgebra with integer structure constants.
///
/// The degree-0 part is spanned by [`GradedBialgebra::unit`].
pub trait GradedBialgebra: Sync {
    type Key: Basis;

    fn name(&self) -> String;

    /// Basis of the degree-`n` component, in a fixed order.
    fn basis(&self, n: usize) -> Vec<Self::Key>;

    fn unit(&self) -> Self::Key;

    fn product(&self, a: &Self::Key, b: &Self::Key) -> LinComb<Self::Key>;

    fn coproduct(&self, a: &Self::Key) -> Tensor<Self::Key>;

    /// Whether the coproduct is expected to be cocommutative.
    fn cocommutative(&self) -> bool;
}

pub fn mul<H: GradedBialgebra, R: Coeff>(h: &H, x: &LinComb<H::Key, R>, y: &LinComb<H::Key, R>) -> LinComb<H::Key, R> {
    x.bilinear(y, |a, b| lift(&h.product(a, b)))
}

pub fn comul<H: GradedBialgebra, R: Coeff>(h: &H, x: &LinComb<H::Key, R>) -> Tensor<H::Key, R> {
    x.apply(|a| lift(&h.coproduct(a)))
}

/// Componentwise product `(a⊗b)(c⊗d) = ac ⊗ bd`.
pub fn tensor_mul<H: GradedBialgebra, R: Coeff>(
    h: &H,
    x: &Tensor<H::Key, R>,
    y: &Tensor<H::Key, R>,
) -> Tensor<H::Key, R> {
    x.bilinear(y, |(a, b), (c, d)| {
        tensor(&lift(&h.product(a, c)), &lift(&h.product(b, d)))
    })
}

/// Coefficient of the unit.
pub fn counit<H: GradedBialgebra, R: Coeff>(h: &H, x: &LinComb<H::Key, R>) -> R {
    x.coeff(&h.unit())
}

/// `ηε`: keeps the degree-0 part.
pub fn unit_counit<K: Basis, R: Coeff>() -> GradedMap<K, R> {
    GradedMap::new(|k: &K| {
        if k.degree() == 0 {
            LinComb::basis(k.clone())
        } else {
            LinComb::zero()
        }
    })
}

/// `f ⋆ g = m ∘ (f ⊗ g) ∘ Δ`.
pub fn convolve<H, R>(h: &H, f: &GradedMap<H::Key, R>, g: &GradedMap<H::Key, R>) -> GradedMap<H::Key, R>
where
    H: GradedBialgebra + Clone + Send + 'static,
    R: Coeff,
{
    let (h, f, g) = (h.clone(), f.clone(), g.clone());
    GradedMap::new(move |k| {
        let mut out = LinComb::zero();
        for ((a, b), c) in h.coproduct(k).iter() {
            let fa = f.on_basis(a);
            if fa.is_zero() {
                continue;
            }
            let gb = g.on_basis(b);
            out.add_scaled(&mul(&h, &fa, &gb), &R::from_integer(c));
        }
        out
    })
}

/// Memoized convolution powers `J^{⋆k}` of `J = id − ηε`.
///
/// `J^{⋆k}(y) = Σ J(a)·J^{⋆(k−1)}(b)` over the terms `a⊗b` of `Δy` with
/// `a` of positive degree, so only integer arithmetic is needed.
pub struct ConvolutionPowers<H: GradedBialgebra> {
    h: H,
    cache: HashMap<(usize, H::Key), LinComb<H::Key>>,
}

impl<H: GradedBialgebra> ConvolutionPowers<H> {
    pub fn new(h: H) -> Self {
        ConvolutionPowers {
            h,
            cache: HashMap::new(),
        }
    }

    pub fn power(&mut self, k: usize, y: &H::Key) -> LinComb<H::Key> {
        if k == 0 {
            return if y.degree() == 0 {
                LinComb::basis(y.clone())
            } else {
                LinComb::zero()
            };
        }
        if y.degree() < k {
            return LinComb::zero();
        }
        if k == 1 {
            return LinComb::basis(y.clone());
        }
        if let Some(v) = self.cache.get(&(k, y.clone())) {
            return v.clone();
        }
        let mut out = LinComb::zero();
        for ((a, b), c) in self.h.coproduct(y).iter() {
            if a.degree() == 0 || b.degree() == 0 {
                continue;
            }
            let rest = self.power(k - 1, b);
            if rest.is_zero() {
                continue;
            }
            let term = mul(&self.h, &LinComb::basis(a.clone()), &rest);
            out.add_scaled(&term, c);
        }
        self.cache.insert((k, y.clone()), out.clone());
        out
    }

    /// `e¹(y) = Σ_{k=1}^{n} (−1)^{k−1}/k · J^{⋆k}(y)` for `y` of degree `n`.
    pub fn log_identity(&mut self, y: &H::Key) -> LinComb<H::Key, Rational> {
        let mut out = LinComb::zero();
        for k in 1..=y.degree() {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let c = Rational::new(Integer::from(sign), Integer::from(k));
            out.add_scaled(&self.power(k, y).to_rational(), &c);
        }
        out
    }
}

/// The graded logarithm `e¹` of the identity in the convolution algebra.
///
/// Values are cached across calls; coefficients are rational.
pub fn graded_log_identity<H>(h: H) -> GradedMap<H::Key, Rational>
where
    H: GradedBialgebra + Send + 'static,
{
    let powers = Arc::new(Mutex::new(ConvolutionPowers::new(h)));
    GradedMap::new(move |k| powers.lock().expect("cache lock").log_identity(k))
}

/// `Σ_k f^{⋆k}/k!` on one basis element, truncated at its degree.
///
/// `f` must vanish in degree 0.
pub fn exp_convolution<H: GradedBialgebra>(
    h: &H,
    f: &GradedMap<H::Key, Rational>,
    y: &H::Key,
) -> LinComb<H::Key, Rational> {
    type Memo<K> = HashMap<(usize, K), LinComb<K, Rational>>;
    let mut memo: Memo<H::Key> = HashMap::new();
    fn power<H: GradedBialgebra>(
        h: &H,
        f: &GradedMap<H::Key, Rational>,
        k: usize,
        y: &H::Key,
        memo: &mut Memo<H::Key>,
    ) -> LinComb<H::Key, Rational> {
        if k == 0 {
            return if y.degree() == 0 {
                LinComb::basis(y.clone())
            } else {
                LinComb::zero()
            };
        }
        if y.degree() < k {
            return LinComb::zero();
        }
        if k == 1 {
            return f.on_basis(y);
        }
        if let Some(v) = memo.get(&(k, y.clone())) {
            return v.clone();
        }
        let mut out = LinComb::zero();
        for ((a, b), c) in h.coproduct(y).iter() {
            if a.degree() == 0 || b.degree() == 0 {
                continue;
            }
            let fa = f.on_basis(a);
            let rest = power(h, f, k - 1, b, memo);
            if fa.is_zero() || rest.is_zero() {
                continue;
            }
            out.add_scaled(&mul(h, &fa, &rest), &Rational::from_integer(c.clone()));
        }
        memo.insert((k, y.clone()), out.clone());
        out
    }
    let mut out = LinComb::zero();
    let mut factorial = Integer::from(1);
    for k in 0..=y.degree() {
        if k > 0 {
            factorial *= k;
        }
        let term = power(h, f, k, y, &mut memo);
        out.add_scaled(&term, &Rational::new(Integer::from(1), factorial.clone()));
    }
    out
}

/// `Δx = x⊗1 + 1⊗x`.
pub fn is_primitive<H: GradedBialgebra, R: Coeff>(h: &H, x: &LinComb<H::Key, R>) -> bool {
    let one = LinComb::basis(h.unit());
    let expected = &tensor(x, &one) + &tensor(&one, x);
    comul(h, x) == expected
}

/// Antipode values on all basis elements up to a degree, computed by
/// `S(x) = −x − Σ S(x′)·x″` over the reduced coproduct.
pub struct Antipode<H: GradedBialgebra> {
    table: HashMap<H::Key, LinComb<H::Key>>,
}

impl<H: GradedBialgebra> Antipode<H> {
    pub fn up_to(h: &H, n_max: usize) -> Self {
        let mut table = HashMap::new();
        table.insert(h.unit(), LinComb::basis(h.unit()));
        for n in 1..=n_max {
            for x in h.basis(n) {
                let mut s = -&LinComb::basis(x.clone());
                for ((a, b), c) in h.coproduct(&x).iter() {
                    if a.degree() == 0 || b.degree() == 0 {
                        continue;
                    }
                    let sa = &table[a];
                    let term = mul(h, sa, &LinComb::basis(b.clone()));
                    s.add_scaled(&term, &-c.clone());
                }
                table.insert(x, s);
            }
        }
        Antipode { table }
    }

    /// `S(x)`; `x` must have degree at most the bound given to [`Antipode::up_to`].
    pub fn on_basis(&self, x: &H::Key) -> Option<&LinComb<H::Key>> {
        self.table.get(x)
    }

    pub fn apply(&self, x: &LinComb<H::Key>) -> Option<LinComb<H::Key>> {
        let mut out = LinComb::zero();
        for (k, c) in x.iter() {
            out.add_scaled(self.table.get(k)?, c);
        }
        Some(out)
    }
}

/// The antipode of one element, computed recursively.
pub fn antipode<H: GradedBialgebra>(h: &H, x: &LinComb<H::Key>) -> LinComb<H::Key> {
    let n = x.keys().map(|k| k.degree()).max().unwrap_or(0);
    Antipode::up_to(h, n).apply(x).expect("all degrees tabulated")
}

fn basis_by_degree<H: GradedBialgebra>(h: &H, n: usize) -> Vec<Vec<H::Key>> {
    (0..=n).map(|d| h.basis(d)).collect()
}

fn elements<H: GradedBialgebra>(by_degree: &[Vec<H::Key>]) -> Vec<H::Key> {
    by_degree.iter().flatten().cloned().collect()
}

fn pairs<H: GradedBialgebra>(by_degree: &[Vec<H::Key>], n: usize) -> Vec<(H::Key, H::Key)> {
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

fn first_failure<T: Sync>(items: &[T], test: impl Fn(&T) -> Option<String> + Sync + Send) -> Option<String> {
    items.par_iter().find_map_first(test)
}

fn lit<K: Basis>(k: &K) -> String {
    k.literal()
}

pub fn check_unit<H: GradedBialgebra>(h: &H, n: usize) -> Check {
    let xs = elements::<H>(&basis_by_degree(h, n));
    let one = h.unit();
    let bad = first_failure(&xs, |x| {
        let ok = h.product(&one, x) == LinComb::basis(x.clone()) && h.product(x, &one) == LinComb::basis(x.clone());
        (!ok).then(|| lit(x))
    });
    Check::from_search("unit", xs.len(), bad)
}

pub fn check_associativity<H: GradedBialgebra>(h: &H, n: usize) -> Check {
    let by_degree = basis_by_degree(h, n);
    let mut triples = Vec::new();
    for (x, y) in pairs::<H>(&by_degree, n) {
        let rest = n - x.degree() - y.degree();
        for zs in &by_degree[..=rest] {
            for z in zs {
                triples.push((x.clone(), y.clone(), z.clone()));
            }
        }
    }
    let bad = first_failure(&triples, |(x, y, z)| {
        let left = mul(h, &h.product(x, y), &LinComb::basis(z.clone()));
        let right = mul(h, &LinComb::basis(x.clone()), &h.product(y, z));
        (left != right).then(|| format!("({}, {}, {})", lit(x), lit(y), lit(z)))
    });
    Check::from_search("associativity", triples.len(), bad)
}

pub fn check_counit<H: GradedBialgebra>(h: &H, n: usize) -> Check {
    let xs = elements::<H>(&basis_by_degree(h, n));
    let one = h.unit();
    let bad = first_failure(&xs, |x| {
        let d = h.coproduct(x);
        let left: LinComb<H::Key> = d
            .iter()
            .filter(|((a, _), _)| *a == one)
            .map(|((_, b), c)| (b.clone(), c.clone()))
            .collect();
        let right: LinComb<H::Key> = d
            .iter()
            .filter(|((_, b), _)| *b == one)
            .map(|((a, _), c)| (a.clone(), c.clone()))
            .collect();
        let x = LinComb::basis(x.clone());
        (left != x || right != x).then(|| x.keys().map(lit).collect())
    });
    Check::from_search("counit", xs.len(), bad)
}

pub fn check_coassociativity<H: GradedBialgebra>(h: &H, n: usize) -> Check {
    let xs = elements::<H>(&basis_by_degree(h, n));
    let bad = first_failure(&xs, |x| {
        let d = h.coproduct(x);
        let mut left = LinComb::<(H::Key, H::Key, H::Key)>::zero();
        let mut right = LinComb::<(H::Key, H::Key, H::Key)>::zero();
        for ((a, b), c) in d.iter() {
            for ((a1, a2), c1) in h.coproduct(a).iter() {
                left.add_term((a1.clone(), a2.clone(), b.clone()), c.clone() * c1.clone());
            }
            for ((b1, b2), c2) in h.coproduct(b).iter() {
                right.add_term((a.clone(), b1.clone(), b2.clone()), c.clone() * c2.clone());
            }
        }
        (left != right).then(|| lit(x))
    });
    Check::from_search("coassociativity", xs.len(), bad)
}

pub fn check_compatibility<H: GradedBialgebra>(h: &H, n: usize) -> Check {
    let ps = pairs::<H>(&basis_by_degree(h, n), n);
    let bad = first_failure(&ps, |(x, y)| {
        let left = comul(h, &h.product(x, y));
        let right = tensor_mul(h, &h.coproduct(x), &h.coproduct(y));
        (left != right).then(|| format!("({}, {})", lit(x), lit(y)))
    });
    Check::from_search("compatibility", ps.len(), bad)
}

/// The first basis element, in degree then basis order, whose coproduct is
/// not fixed by the flip.
pub fn cocommutativity_witness<H: GradedBialgebra>(h: &H, n: usize) -> Option<H::Key> {
    let xs = elements::<H>(&basis_by_degree(h, n));
    xs.par_iter()
        .find_first(|x| {
            let d = h.coproduct(x);
            crate::linear::flip(&d) != d
        })
        .cloned()
}

/// For a cocommutative structure, passes iff no witness exists; otherwise
/// passes iff one is found, or if none can exist yet below degree 3.
pub fn check_cocommutativity<H: GradedBialgebra>(h: &H, n: usize) -> Check {
    let cases: usize = (0..=n).map(|d| h.basis(d).len()).sum();
    let witness = cocommutativity_witness(h, n);
    if h.cocommutative() {
        return Check::from_search("cocommutativity", cases, witness.map(|w| lit(&w)));
    }
    match witness {
        Some(w) => Check::pass("non-cocommutativity", cases).with_detail(format!("witness {}", lit(&w))),
        None if n < 3 => Check::pass("non-cocommutativity", cases).with_detail("no witness below degree 3"),
        None => Check::fail("non-cocommutativity", cases, "no witness found"),
    }
}

/// `m(S⊗id)Δ = ηε = m(id⊗S)Δ`.
pub fn check_antipode<H: GradedBialgebra>(h: &H, n: usize) -> Check {
    let s = Antipode::up_to(h, n);
    let xs = elements::<H>(&basis_by_degree(h, n));
    let bad = first_failure(&xs, |x| {
        let expected = if x.degree() == 0 {
            LinComb::basis(x.clone())
        } else {
            LinComb::zero()
        };
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for ((a, b), c) in h.coproduct(x).iter() {
            let sa = s.on_basis(a).expect("tabulated");
            let sb = s.on_basis(b).expect("tabulated");
            left.add_scaled(&mul(h, sa, &LinComb::basis(b.clone())), c);
            right.add_scaled(&mul(h, &LinComb::basis(a.clone()), sb), c);
        }
        (left != expected || right != expected).then(|| lit(x))
    });
    Check::from_search("antipode", xs.len(), bad)
}

/// All bialgebra axioms and the antipode identity up to total degree `n`.
pub fn check_bialgebra<H: GradedBialgebra>(h: &H, n: usize) -> Result<Report> {
    check_cap(n, PAIRWISE_CAP)?;
    let mut report = Report::new(h.name());
    report.push(check_unit(h, n));
    report.push(check_associativity(h, n));
    report.push(check_counit(h, n));
    report.push(check_coassociativity(h, n));
    report.push(check_compatibility(h, n));
    report.push(check_cocommutativity(h, n));
    report.push(check_antipode(h, n));
    Ok(report)
}
