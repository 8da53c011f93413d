//! Finitely supported linear combinations with exact coefficients.
//!
//! Coefficients are arbitrary-precision integers ([`Integer`]) by default;
//! [`Rational`] is used where division is needed. Terms are kept in a
//! `BTreeMap`, so iteration and serialization follow the [`Ord`] order of
//! the basis (`≪` for set compositions), and zero coefficients are never
//! stored.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::comp::SetComposition;
use crate::error::{Error, ParseError, Result};
use crate::perm::Permutation;
use crate::tree::{IncreasingTree, PlanarTree};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// Exact coefficient ring.
pub trait Coeff:
    Clone
    + Eq
    + Ord
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn to_rational(&self) -> Rational;

    fn from_rational(q: &Rational) -> Option<Self>;

    fn from_i64(x: i64) -> Self;

    fn from_integer(x: &Integer) -> Self;
}

impl Coeff for Integer {
    fn to_rational(&self) -> Rational {
        Rational::from_integer(self.clone())
    }

    fn from_rational(q: &Rational) -> Option<Self> {
        q.is_integer().then(|| q.to_integer())
    }

    fn from_i64(x: i64) -> Self {
        BigInt::from(x)
    }

    fn from_integer(x: &Integer) -> Self {
        x.clone()
    }
}

impl Coeff for Rational {
    fn to_rational(&self) -> Rational {
        self.clone()
    }

    fn from_rational(q: &Rational) -> Option<Self> {
        Some(q.clone())
    }

    fn from_i64(x: i64) -> Self {
        Rational::from_integer(BigInt::from(x))
    }

    fn from_integer(x: &Integer) -> Self {
        Rational::from_integer(x.clone())
    }
}

/// A basis element with a text literal and a degree.
pub trait Basis: Clone + Ord + Hash + fmt::Debug + Send + Sync + 'static {
    /// Kind tag used in serialized combinations.
    fn kind() -> String;

    fn degree(&self) -> usize;

    fn literal(&self) -> String;

    fn parse_literal(s: &str) -> std::result::Result<Self, ParseError>;
}

impl Basis for SetComposition {
    fn kind() -> String {
        "setcomp".into()
    }
    fn degree(&self) -> usize {
        SetComposition::degree(self)
    }
    fn literal(&self) -> String {
        self.to_string()
    }
    fn parse_literal(s: &str) -> std::result::Result<Self, ParseError> {
        s.parse()
    }
}

impl Basis for Permutation {
    fn kind() -> String {
        "perm".into()
    }
    fn degree(&self) -> usize {
        Permutation::degree(self)
    }
    fn literal(&self) -> String {
        self.to_string()
    }
    fn parse_literal(s: &str) -> std::result::Result<Self, ParseError> {
        s.parse()
    }
}

impl Basis for PlanarTree {
    fn kind() -> String {
        "tree".into()
    }
    fn degree(&self) -> usize {
        self.branchings()
    }
    fn literal(&self) -> String {
        self.to_string()
    }
    fn parse_literal(s: &str) -> std::result::Result<Self, ParseError> {
        s.parse()
    }
}

impl Basis for IncreasingTree {
    fn kind() -> String {
        "inctree".into()
    }
    fn degree(&self) -> usize {
        self.branchings()
    }
    fn literal(&self) -> String {
        self.standardize().to_string()
    }
    fn parse_literal(s: &str) -> std::result::Result<Self, ParseError> {
        s.parse()
    }
}

const TENSOR_SEP: &str = " ⊗ ";

impl<A: Basis, B: Basis> Basis for (A, B) {
    fn kind() -> String {
        format!("{}⊗{}", A::kind(), B::kind())
    }
    fn degree(&self) -> usize {
        self.0.degree() + self.1.degree()
    }
    fn literal(&self) -> String {
        format!("{}{TENSOR_SEP}{}", self.0.literal(), self.1.literal())
    }
    fn parse_literal(s: &str) -> std::result::Result<Self, ParseError> {
        let (a, b) = s
            .split_once(TENSOR_SEP)
            .ok_or_else(|| ParseError::new("tensor", s, "missing ` ⊗ `"))?;
        Ok((A::parse_literal(a)?, B::parse_literal(b)?))
    }
}

/// A finitely supported combination `Σ c_k · k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K, R = Integer> {
    terms: BTreeMap<K, R>,
}

/// Combinations of pairs `x ⊗ y`.
pub type Tensor<K, R = Integer> = LinComb<(K, K), R>;

/// Combinations of triples `x ⊗ y ⊗ z`.
pub type Tensor3<K, R = Integer> = LinComb<(K, K, K), R>;

impl<K: Ord, R> Default for LinComb<K, R> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, R: Coeff> LinComb<K, R> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single term `1 · key`.
    pub fn basis(key: K) -> Self {
        Self::term(key, R::one())
    }

    pub fn term(key: K, coeff: R) -> Self {
        let mut x = Self::zero();
        x.add_term(key, coeff);
        x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> R {
        self.terms.get(key).cloned().unwrap_or_else(R::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, R> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Smallest basis element with non-zero coefficient.
    pub fn leading(&self) -> Option<(&K, &R)> {
        self.terms.iter().next()
    }

    pub fn add_term(&mut self, key: K, coeff: R) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Self, c: &R) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.clone() * c.clone());
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Extends `f` linearly.
    pub fn apply<L: Ord + Clone>(&self, f: impl Fn(&K) -> LinComb<L, R>) -> LinComb<L, R> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Pushes every basis element through `f`.
    pub fn map_keys<L: Ord + Clone>(&self, f: impl Fn(&K) -> L) -> LinComb<L, R> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// Bilinear extension of a basis-level product.
    pub fn bilinear<L: Ord + Clone, M: Ord + Clone>(
        &self,
        other: &LinComb<L, R>,
        f: impl Fn(&K, &L) -> LinComb<M, R>,
    ) -> LinComb<M, R> {
        let mut out = LinComb::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_scaled(&f(a, b), &(ca.clone() * cb.clone()));
            }
        }
        out
    }

    pub fn to_rational(&self) -> LinComb<K, Rational> {
        LinComb {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v.to_rational())).collect(),
        }
    }
}

/// Changes the coefficient ring of an integer combination.
pub fn lift<K: Ord + Clone, R: Coeff>(x: &LinComb<K, Integer>) -> LinComb<K, R> {
    x.iter().map(|(k, c)| (k.clone(), R::from_integer(c))).collect()
}

/// `x ⊗ y`, extended bilinearly.
pub fn tensor<A: Ord + Clone, B: Ord + Clone, R: Coeff>(x: &LinComb<A, R>, y: &LinComb<B, R>) -> LinComb<(A, B), R> {
    x.bilinear(y, |a, b| LinComb::basis((a.clone(), b.clone())))
}

/// Exchanges the tensor factors.
pub fn flip<A: Ord + Clone, B: Ord + Clone, R: Coeff>(x: &LinComb<(A, B), R>) -> LinComb<(B, A), R> {
    x.map_keys(|(a, b)| (b.clone(), a.clone()))
}

impl<K: Ord + Clone, R: Coeff> Add for &LinComb<K, R> {
    type Output = LinComb<K, R>;
    fn add(self, rhs: Self) -> LinComb<K, R> {
        let mut out = self.clone();
        out.add_scaled(rhs, &R::one());
        out
    }
}

impl<K: Ord + Clone, R: Coeff> Sub for &LinComb<K, R> {
    type Output = LinComb<K, R>;
    fn sub(self, rhs: Self) -> LinComb<K, R> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-R::one());
        out
    }
}

impl<K: Ord + Clone, R: Coeff> Neg for &LinComb<K, R> {
    type Output = LinComb<K, R>;
    fn neg(self) -> LinComb<K, R> {
        self.scale(&-R::one())
    }
}

impl<K: Ord + Clone, R: Coeff> FromIterator<(K, R)> for LinComb<K, R> {
    fn from_iter<I: IntoIterator<Item = (K, R)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Basis, R: Coeff> fmt::Display for LinComb<K, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("(zero)");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            if c.is_one() {
                write!(f, "{}", k.literal())?;
            } else {
                write!(f, "{} * {}", c, k.literal())?;
            }
        }
        Ok(())
    }
}

impl<K: fmt::Debug, R: fmt::Display> fmt::Debug for LinComb<K, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|(k, v)| (k, v.to_string())))
            .finish()
    }
}

/// Serialized form of a combination.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombinationJson {
    pub basis_kind: String,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub key: String,
}

/// Writes `p/q` in lowest terms, `q ≥ 1`, also for integers.
pub fn format_coeff<R: Coeff>(c: &R) -> String {
    let q = c.to_rational();
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse_coeff<R: Coeff>(s: &str) -> std::result::Result<R, ParseError> {
    let err = |r: &str| ParseError::new("coefficient", s, r);
    let (p, q) = match s.trim().split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p: BigInt = p.parse().map_err(|_| err("bad numerator"))?;
    let q: BigInt = q.parse().map_err(|_| err("bad denominator"))?;
    if !q.is_positive() {
        return Err(err("denominator must be positive"));
    }
    R::from_rational(&Rational::new(p, q)).ok_or_else(|| err("not an integer"))
}

impl<K: Basis, R: Coeff> LinComb<K, R> {
    pub fn to_json_value(&self) -> CombinationJson {
        CombinationJson {
            basis_kind: K::kind(),
            terms: self
                .terms
                .iter()
                .map(|(k, c)| TermJson {
                    coeff: format_coeff(c),
                    key: k.literal(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("plain data serializes")
    }

    pub fn from_json_value(v: &CombinationJson) -> Result<Self> {
        if v.basis_kind != K::kind() {
            return Err(Error::KindMismatch {
                expected: K::kind(),
                found: v.basis_kind.clone(),
            });
        }
        let mut out = Self::zero();
        for t in &v.terms {
            out.add_term(K::parse_literal(&t.key)?, parse_coeff(&t.coeff)?);
        }
        Ok(out)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let v: CombinationJson =
            serde_json::from_str(s).map_err(|e| ParseError::new("combination JSON", s, e.to_string()))?;
        Self::from_json_value(&v)
    }

    /// Keeps only the terms of degree `n`.
    pub fn degree_part(&self, n: usize) -> Self {
        self.terms
            .iter()
            .filter(|(k, _)| k.degree() == n)
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect()
    }
}

type Rule<K, R> = dyn Fn(&K) -> LinComb<K, R> + Send + Sync;

/// A linear endomorphism given by its values on basis elements.
pub struct GradedMap<K, R = Integer> {
    rule: Arc<Rule<K, R>>,
}

impl<K, R> Clone for GradedMap<K, R> {
    fn clone(&self) -> Self {
        GradedMap {
            rule: Arc::clone(&self.rule),
        }
    }
}

impl<K: Ord + Clone + 'static, R: Coeff> GradedMap<K, R> {
    pub fn new(rule: impl Fn(&K) -> LinComb<K, R> + Send + Sync + 'static) -> Self {
        GradedMap { rule: Arc::new(rule) }
    }

    pub fn identity() -> Self {
        GradedMap::new(|k: &K| LinComb::basis(k.clone()))
    }

    pub fn on_basis(&self, k: &K) -> LinComb<K, R> {
        (self.rule)(k)
    }

    pub fn apply(&self, x: &LinComb<K, R>) -> LinComb<K, R> {
        x.apply(|k| self.on_basis(k))
    }

    /// `a·self + b·other`.
    pub fn combine(&self, a: R, other: &GradedMap<K, R>, b: R) -> GradedMap<K, R> {
        let (f, g) = (self.clone(), other.clone());
        GradedMap::new(move |k| {
            let mut out = f.on_basis(k).scale(&a);
            out.add_scaled(&g.on_basis(k), &b);
            out
        })
    }
}

pub fn lc_add<K: Ord + Clone, R: Coeff>(x: &LinComb<K, R>, y: &LinComb<K, R>) -> LinComb<K, R> {
    x + y
}

pub fn lc_scale<K: Ord + Clone, R: Coeff>(c: &R, x: &LinComb<K, R>) -> LinComb<K, R> {
    x.scale(c)
}

pub fn lc_apply<K: Ord + Clone + 'static, R: Coeff>(f: &GradedMap<K, R>, x: &LinComb<K, R>) -> LinComb<K, R> {
    f.apply(x)
}
