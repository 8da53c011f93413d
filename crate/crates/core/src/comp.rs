//! Set compositions: ordered tuples of disjoint non-empty finite sets of
//! positive integers.
//!
//! A composition is stored with every block as a strictly increasing
//! sequence, so structural equality is equality of compositions. The
//! [`Ord`] instance is the order `≪`: first by the size of the support,
//! then lexicographically on the word obtained by writing the blocks one
//! after the other, separated by a comma symbol that sorts below every
//! positive integer.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};

/// Token used for the block separator in [`SetComposition::word`].
pub const COMMA: u32 = 0;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SetComposition {
    blocks: Vec<Vec<u32>>,
}

/// The unique order-preserving bijection between two finite sets of
/// positive integers of the same size.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderIso {
    source: Vec<u32>,
    target: Vec<u32>,
}

impl OrderIso {
    pub fn new(source: &[u32], target: &[u32]) -> Result<Self> {
        let source = sorted_set(source);
        let target = sorted_set(target);
        if source.len() != target.len() {
            return Err(Error::SizeMismatch(source.len(), target.len()));
        }
        Ok(OrderIso { source, target })
    }

    /// The standardization of `source`, onto `[|source|]`.
    pub fn onto_initial(source: &[u32]) -> Self {
        let source = sorted_set(source);
        let target = (1..=source.len() as u32).collect();
        OrderIso { source, target }
    }

    pub fn source(&self) -> &[u32] {
        &self.source
    }

    pub fn target(&self) -> &[u32] {
        &self.target
    }

    pub fn apply(&self, x: u32) -> Option<u32> {
        self.source.binary_search(&x).ok().map(|i| self.target[i])
    }

    pub fn inverse(&self) -> OrderIso {
        OrderIso {
            source: self.target.clone(),
            target: self.source.clone(),
        }
    }
}

pub(crate) fn sorted_set(xs: &[u32]) -> Vec<u32> {
    let mut v = xs.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

fn is_subset(small: &[u32], big: &[u32]) -> bool {
    small.iter().all(|x| big.binary_search(x).is_ok())
}

impl SetComposition {
    /// Builds a composition from blocks given in any internal order.
    pub fn new<B: AsRef<[u32]>>(blocks: impl IntoIterator<Item = B>) -> Result<Self> {
        let mut out = Vec::new();
        let mut seen = Vec::new();
        for b in blocks {
            let mut block = b.as_ref().to_vec();
            block.sort_unstable();
            let len = block.len();
            block.dedup();
            if block.is_empty() || block.len() != len || block[0] == 0 {
                return Err(Error::InvalidBlocks);
            }
            seen.extend_from_slice(&block);
            out.push(block);
        }
        let total = seen.len();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != total {
            return Err(Error::InvalidBlocks);
        }
        Ok(SetComposition { blocks: out })
    }

    /// Caller guarantees sorted, non-empty, disjoint blocks.
    pub(crate) fn from_sorted_blocks(blocks: Vec<Vec<u32>>) -> Self {
        debug_assert!(blocks
            .iter()
            .all(|b| !b.is_empty() && b.windows(2).all(|w| w[0] < w[1])));
        SetComposition { blocks }
    }

    /// Drops empty blocks (the `#` operation).
    pub(crate) fn from_blocks_dropping_empty(blocks: Vec<Vec<u32>>) -> Self {
        SetComposition {
            blocks: blocks.into_iter().filter(|b| !b.is_empty()).collect(),
        }
    }

    /// The empty composition `∅`.
    pub fn empty() -> Self {
        SetComposition::default()
    }

    /// The one-block composition `(S)`, unit of the internal product on `S`.
    pub fn one_block(support: &[u32]) -> Self {
        let s = sorted_set(support);
        if s.is_empty() {
            SetComposition::empty()
        } else {
            SetComposition { blocks: vec![s] }
        }
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Size of the support.
    pub fn degree(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn support(&self) -> Vec<u32> {
        let mut s: Vec<u32> = self.blocks.iter().flatten().copied().collect();
        s.sort_unstable();
        s
    }

    /// True iff the support is `[n]` for some `n`.
    pub fn has_initial_support(&self) -> bool {
        self.support().iter().enumerate().all(|(i, &x)| x == i as u32 + 1)
    }

    pub(crate) fn require_initial(&self) -> Result<()> {
        if self.has_initial_support() {
            Ok(())
        } else {
            Err(Error::NotInitialSegment(self.support()))
        }
    }

    /// The word over `{,} ∪ ℕ` used by `≪`, with [`COMMA`] as separator.
    pub fn word(&self) -> Vec<u32> {
        let mut w = Vec::with_capacity(self.degree() + self.len());
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                w.push(COMMA);
            }
            w.extend_from_slice(b);
        }
        w
    }

    /// Block index (0-based) of every support element, in support order.
    pub fn block_of(&self) -> Vec<(u32, usize)> {
        let mut v: Vec<(u32, usize)> = self
            .blocks
            .iter()
            .enumerate()
            .flat_map(|(i, b)| b.iter().map(move |&x| (x, i)))
            .collect();
        v.sort_unstable();
        v
    }

    /// Intersects every block with `set` and deletes empty blocks. `set`
    /// must be sorted; elements outside the support are ignored.
    pub(crate) fn intersect(&self, set: &[u32]) -> SetComposition {
        SetComposition::from_blocks_dropping_empty(
            self.blocks
                .iter()
                .map(|b| b.iter().copied().filter(|x| set.binary_search(x).is_ok()).collect())
                .collect(),
        )
    }

    /// `(P_1∩A, …, P_k∩A)^#`, without relabelling.
    pub fn restrict(&self, set: &[u32]) -> Result<SetComposition> {
        let set = sorted_set(set);
        let support = self.support();
        if !is_subset(&set, &support) {
            return Err(Error::NotSubset(set, support));
        }
        Ok(self.intersect(&set))
    }

    /// Relabels the support onto `[n]` through the order isomorphism.
    pub fn standardize(&self) -> SetComposition {
        let iso = OrderIso::onto_initial(&self.support());
        self.map_elements(|x| iso.apply(x).expect("element of support"))
    }

    /// `P|_A`: restriction to `A` followed by standardization.
    pub fn restrict_std(&self, set: &[u32]) -> Result<SetComposition> {
        Ok(self.restrict(set)?.standardize())
    }

    pub fn relabel(&self, iso: &OrderIso) -> Result<SetComposition> {
        let support = self.support();
        if support != iso.source() {
            return Err(Error::SupportMismatch(support, iso.source().to_vec()));
        }
        Ok(self.map_elements(|x| iso.apply(x).expect("element of source")))
    }

    /// Applies an increasing map to every element.
    pub(crate) fn map_elements(&self, f: impl Fn(u32) -> u32) -> SetComposition {
        SetComposition {
            blocks: self.blocks.iter().map(|b| b.iter().map(|&x| f(x)).collect()).collect(),
        }
    }

    /// Adds `offset` to every element.
    pub fn shift(&self, offset: u32) -> SetComposition {
        self.map_elements(|x| x + offset)
    }

    /// Reducedness: no proper prefix of blocks covers a proper initial
    /// segment `[m]` of `[n]`.
    pub fn is_reduced(&self) -> Result<bool> {
        self.require_initial()?;
        Ok(self.cut_points().is_empty())
    }

    /// Block counts `a < k` after which the prefix union is exactly `[m]`.
    fn cut_points(&self) -> Vec<usize> {
        let mut cuts = Vec::new();
        let mut max = 0;
        let mut count = 0usize;
        for (a, b) in self.blocks.iter().enumerate().take(self.len().saturating_sub(1)) {
            count += b.len();
            max = max.max(*b.last().expect("non-empty block"));
            if max as usize == count {
                cuts.push(a + 1);
            }
        }
        cuts
    }

    /// The finest factorization into reduced compositions for the
    /// restricted product. The empty composition has no factors.
    pub fn factor_reduced(&self) -> Result<Vec<SetComposition>> {
        self.require_initial()?;
        if self.is_empty() {
            return Ok(Vec::new());
        }
        let mut bounds = self.cut_points();
        bounds.insert(0, 0);
        bounds.push(self.len());
        Ok(bounds
            .windows(2)
            .map(|w| SetComposition::from_sorted_blocks(self.blocks[w[0]..w[1]].to_vec()).standardize())
            .collect())
    }

    /// Tits product `∘` on compositions of the same set.
    pub fn internal_product(&self, other: &SetComposition) -> Result<SetComposition> {
        let (s, t) = (self.support(), other.support());
        if s != t {
            return Err(Error::SupportMismatch(s, t));
        }
        let mut blocks = Vec::with_capacity(self.len() * other.len());
        for p in &self.blocks {
            for q in &other.blocks {
                blocks.push(p.iter().copied().filter(|x| q.binary_search(x).is_ok()).collect());
            }
        }
        Ok(SetComposition::from_blocks_dropping_empty(blocks))
    }

    /// Twisted convolution product `∗`: block concatenation of
    /// compositions with disjoint supports.
    pub fn concat_disjoint(&self, other: &SetComposition) -> Result<SetComposition> {
        let (s, t) = (self.support(), other.support());
        if s.iter().any(|x| t.binary_search(x).is_ok()) {
            return Err(Error::SupportsOverlap(s, t));
        }
        Ok(self.concat_unchecked(other))
    }

    pub(crate) fn concat_unchecked(&self, other: &SetComposition) -> SetComposition {
        let mut blocks = self.blocks.clone();
        blocks.extend(other.blocks.iter().cloned());
        SetComposition { blocks }
    }

    /// True iff every block is a singleton.
    pub fn is_singleton_blocks(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }
}

impl Ord for SetComposition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.word().cmp(&other.word()))
    }
}

impl PartialOrd for SetComposition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Compares two compositions by `≪`.
pub fn order_ll(p: &SetComposition, q: &SetComposition) -> Ordering {
    p.cmp(q)
}

/// All set compositions of `[n]`, sorted by `≪`.
pub fn enumerate_set_compositions(n: usize) -> Vec<SetComposition> {
    let support: Vec<u32> = (1..=n as u32).collect();
    compositions_of(&support)
}

/// All set compositions of an arbitrary finite set, sorted by `≪`.
pub fn compositions_of(support: &[u32]) -> Vec<SetComposition> {
    let support = sorted_set(support);
    assert!(support.len() < 32, "support too large to enumerate");
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    let full = (1u32 << support.len()) - 1;
    extend_compositions(&support, full, &mut prefix, &mut out);
    out.sort();
    out
}

fn extend_compositions(support: &[u32], remaining: u32, prefix: &mut Vec<Vec<u32>>, out: &mut Vec<SetComposition>) {
    if remaining == 0 {
        out.push(SetComposition::from_sorted_blocks(prefix.clone()));
        return;
    }
    // every non-empty submask of `remaining` as the next block
    let mut sub = remaining;
    while sub != 0 {
        let block = support
            .iter()
            .enumerate()
            .filter(|(i, _)| sub >> i & 1 == 1)
            .map(|(_, &x)| x)
            .collect();
        prefix.push(block);
        extend_compositions(support, remaining & !sub, prefix, out);
        prefix.pop();
        sub = (sub - 1) & remaining;
    }
}

impl fmt::Display for SetComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return f.write_str("0");
        }
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for (j, x) in b.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SetComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetComposition({self})")
    }
}

impl FromStr for SetComposition {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let t = s.trim();
        let err = |reason: &str| ParseError::new("set composition", s, reason);
        if t == "0" {
            return Ok(SetComposition::empty());
        }
        if t.is_empty() {
            return Err(err("empty input (use `0` for the empty composition)"));
        }
        let mut blocks = Vec::new();
        for block in t.split('|') {
            let mut b = Vec::new();
            for tok in block.split(',') {
                let tok = tok.trim();
                let x: u32 = tok
                    .parse()
                    .map_err(|_| err(&format!("`{tok}` is not a positive integer")))?;
                if x == 0 {
                    return Err(err("elements must be positive"));
                }
                b.push(x);
            }
            blocks.push(b);
        }
        SetComposition::new(blocks).map_err(|e| err(&e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> SetComposition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(c("2,6|3,4|1|5").to_string(), "2,6|3,4|1|5");
        assert_eq!(c("6,2|4,3|1|5"), c("2,6|3,4|1|5"));
        assert_eq!(c("0"), SetComposition::empty());
        assert!("1|1".parse::<SetComposition>().is_err());
        assert!("1||2".parse::<SetComposition>().is_err());
        assert!("0,1".parse::<SetComposition>().is_err());
        assert!("".parse::<SetComposition>().is_err());
    }

    #[test]
    fn restriction_examples() {
        assert_eq!(c("2,6|3,4|1|5").restrict(&[1, 2, 4, 6]).unwrap(), c("2,6|4|1"));
        assert_eq!(c("3,5|6,2|1|4,7").restrict(&[1, 3, 5, 7]).unwrap(), c("3,5|1|7"));
        let p = c("2,6|3,4|1|5");
        assert_eq!(p.restrict(&p.support()).unwrap(), p);
        assert!(matches!(c("1|2").restrict(&[3]), Err(Error::NotSubset(..))));
    }

    #[test]
    fn standardization_examples() {
        assert_eq!(c("3,5|1|7").standardize(), c("2,3|1|4"));
        assert_eq!(c("2,6|4|1").standardize(), c("2,4|3|1"));
        assert_eq!(SetComposition::empty().standardize(), SetComposition::empty());
        assert_eq!(c("3,5|6,2|1|4,7").restrict_std(&[1, 3, 5, 7]).unwrap(), c("2,3|1|4"));
    }

    #[test]
    fn relabel_examples() {
        let iso = OrderIso::new(&[1, 2], &[3, 4]).unwrap();
        assert_eq!(c("1,2").relabel(&iso).unwrap(), c("3,4"));
        let iso = OrderIso::new(&[1, 2], &[5, 9]).unwrap();
        assert_eq!(c("1|2").relabel(&iso).unwrap(), c("5|9"));
        let iso = OrderIso::new(&[1, 2], &[3, 7]).unwrap();
        assert_eq!(c("2|1").relabel(&iso).unwrap(), c("7|3"));
        let iso = OrderIso::new(&[1, 3], &[3, 7]).unwrap();
        assert!(matches!(c("2|1").relabel(&iso), Err(Error::SupportMismatch(..))));
        assert!(OrderIso::new(&[1], &[1, 2]).is_err());
    }

    #[test]
    fn order_examples() {
        assert_eq!(order_ll(&c("2,4,5|1,6,9"), &c("2,4,5|1,7,8")), Ordering::Less);
        assert_eq!(order_ll(&c("2,3|4,5,6,9"), &c("2,3,4|1|9|5")), Ordering::Less);
        let p = c("1,3|2");
        assert_eq!(order_ll(&p, &p), Ordering::Equal);
        // integer tokens, not digit strings
        assert_eq!(order_ll(&c("2|10"), &c("10|2")), Ordering::Less);
        assert_eq!(order_ll(&c("1|10"), &c("1,2|3")), Ordering::Less);
    }

    #[test]
    fn reducedness() {
        assert!(!c("1|2").is_reduced().unwrap());
        assert!(c("2|1").is_reduced().unwrap());
        assert!(c("1,2").is_reduced().unwrap());
        assert!(SetComposition::empty().is_reduced().unwrap());
        assert!(matches!(c("2|3").is_reduced(), Err(Error::NotInitialSegment(_))));
    }

    #[test]
    fn factorization_examples() {
        assert_eq!(c("1|2").factor_reduced().unwrap(), vec![c("1"), c("1")]);
        assert_eq!(c("2|1").factor_reduced().unwrap(), vec![c("2|1")]);
        assert_eq!(c("1|2,3|4").factor_reduced().unwrap(), vec![c("1"), c("1,2"), c("1")]);
        assert!(SetComposition::empty().factor_reduced().unwrap().is_empty());
    }

    #[test]
    fn internal_product_examples() {
        assert_eq!(c("1,3|2").internal_product(&c("1,2|3")).unwrap(), c("1|3|2"));
        let unit = SetComposition::one_block(&[1, 2, 3]);
        let q = c("2|1,3");
        assert_eq!(unit.internal_product(&q).unwrap(), q);
        assert_eq!(q.internal_product(&unit).unwrap(), q);
        assert!(c("1").internal_product(&c("2")).is_err());
    }

    #[test]
    fn concatenation_examples() {
        assert_eq!(c("1").concat_disjoint(&c("2,3")).unwrap(), c("1|2,3"));
        assert_eq!(SetComposition::empty().concat_disjoint(&c("2,3")).unwrap(), c("2,3"));
        assert_eq!(c("1,4|7").concat_disjoint(&c("2,5")).unwrap(), c("1,4|7|2,5"));
        assert!(matches!(
            c("1").concat_disjoint(&c("1,2")),
            Err(Error::SupportsOverlap(..))
        ));
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_set_compositions(0), vec![SetComposition::empty()]);
        let two = enumerate_set_compositions(2);
        assert_eq!(two, vec![c("1|2"), c("1,2"), c("2|1")]);
        assert_eq!(enumerate_set_compositions(3).len(), 13);
    }
}
