//! The affine nilCoxeter algebra `𝔸` with basis `{u_w : w ∈ W}` and
//! `u_v u_w = u_{vw}` when lengths add, `0` otherwise.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::affine_weyl::{cyclically_decreasing, subsets_of_size, AffinePermutation, Rank, Word};
use crate::cores::BoundedPartition;
use crate::error::{Error, Result};

/// A finitely supported integer combination `Σ c_w u_w`.
///
/// Zero coefficients are never stored, so structural equality is equality
/// in `𝔸`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilCoxeterElement {
    rank: Rank,
    terms: BTreeMap<AffinePermutation, BigInt>,
}

/// `u_v u_w`: `Some(vw)` when `ℓ(vw) = ℓ(v) + ℓ(w)`.
pub fn basis_product(
    v: &AffinePermutation,
    w: &AffinePermutation,
) -> Result<Option<AffinePermutation>> {
    let vw = v.multiply(w)?;
    Ok((vw.length() == v.length() + w.length()).then_some(vw))
}

impl NilCoxeterElement {
    pub fn zero(rank: Rank) -> Self {
        NilCoxeterElement {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(rank: Rank) -> Self {
        Self::basis(AffinePermutation::identity(rank))
    }

    /// `u_w`.
    pub fn basis(w: AffinePermutation) -> Self {
        let rank = w.rank();
        let mut terms = BTreeMap::new();
        terms.insert(w, BigInt::one());
        NilCoxeterElement { rank, terms }
    }

    /// The monomial `u_{i_1} ... u_{i_m}`; zero when the word is not reduced.
    pub fn monomial(word: &Word) -> Self {
        let w = AffinePermutation::from_word(word);
        if w.length() == word.len() {
            Self::basis(w)
        } else {
            Self::zero(word.rank())
        }
    }

    pub fn from_terms<I>(rank: Rank, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (AffinePermutation, BigInt)>,
    {
        let mut out = Self::zero(rank);
        for (w, c) in terms {
            rank.ensure_same(w.rank())?;
            out.add_term(w, c);
        }
        Ok(out)
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &AffinePermutation) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Terms in window order (deterministic, but not the canonical order).
    pub fn terms(&self) -> impl Iterator<Item = (&AffinePermutation, &BigInt)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<AffinePermutation, BigInt> {
        self.terms
    }

    /// Terms sorted by length, then by canonical reduced word.
    pub fn canonical_terms(&self) -> Vec<(Word, &BigInt)> {
        let mut out: Vec<(Word, &BigInt)> = self
            .terms
            .iter()
            .map(|(w, c)| (w.canonical_reduced_word(), c))
            .collect();
        out.sort_by(|a, b| (a.0.len(), a.0.letters()).cmp(&(b.0.len(), b.0.letters())));
        out
    }

    /// Adds `coeff · u_w`, dropping the key if the sum vanishes.
    pub fn add_term(&mut self, w: AffinePermutation, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        debug_assert_eq!(w.rank(), self.rank);
        match self.terms.entry(w) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.rank.ensure_same(other.rank)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero(self.rank);
        }
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| (w.clone(), c * factor))
            .collect();
        NilCoxeterElement {
            rank: self.rank,
            terms,
        }
    }

    /// The algebra product, bilinear in the basis products.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.rank.ensure_same(other.rank)?;
        let mut out = Self::zero(self.rank);
        let right: Vec<(&AffinePermutation, usize, &BigInt)> = other
            .terms
            .iter()
            .map(|(w, c)| (w, w.length(), c))
            .collect();
        for (v, a) in &self.terms {
            let lv = v.length();
            for &(w, lw, b) in &right {
                let vw = v.multiply(w)?;
                if vw.length() == lv + lw {
                    out.add_term(vw, a * b);
                }
            }
        }
        Ok(out)
    }

    /// Restriction to the keys in `W^0`.
    pub fn grassmannian_part(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(w, _)| w.is_grassmannian())
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        NilCoxeterElement {
            rank: self.rank,
            terms,
        }
    }

    /// Whether every term has Coxeter length `degree`.
    pub fn is_homogeneous_of(&self, degree: usize) -> bool {
        self.terms.keys().all(|w| w.length() == degree)
    }
}

impl Add for &NilCoxeterElement {
    type Output = NilCoxeterElement;

    /// Panics on rank mismatch; use [`NilCoxeterElement::checked_add`] otherwise.
    fn add(self, rhs: Self) -> NilCoxeterElement {
        self.checked_add(rhs)
            .expect("rank mismatch in nilCoxeter addition")
    }
}

impl Sub for &NilCoxeterElement {
    type Output = NilCoxeterElement;

    fn sub(self, rhs: Self) -> NilCoxeterElement {
        self.checked_sub(rhs)
            .expect("rank mismatch in nilCoxeter subtraction")
    }
}

impl Neg for &NilCoxeterElement {
    type Output = NilCoxeterElement;

    fn neg(self) -> NilCoxeterElement {
        let terms = self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect();
        NilCoxeterElement {
            rank: self.rank,
            terms,
        }
    }
}

impl fmt::Display for NilCoxeterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (t, (word, c)) in self.canonical_terms().into_iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if t > 0 {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs}·")?;
            }
            write!(f, "u{word}")?;
        }
        Ok(())
    }
}

/// `h_i = Σ_{|S| = i} u_{w_S}`, for `0 ≤ i ≤ k`.
pub fn h_gen(rank: Rank, i: i64) -> Result<NilCoxeterElement> {
    if i < 0 || i as usize > rank.k() {
        return Err(Error::HIndexOutOfRange { i, k: rank.k() });
    }
    let mut out = NilCoxeterElement::zero(rank);
    for subset in subsets_of_size(rank, i as usize) {
        out.add_term(cyclically_decreasing(rank, &subset)?, BigInt::one());
    }
    Ok(out)
}

/// `h_{a_1} h_{a_2} ... h_{a_m}` for an arbitrary sequence of indices.
pub fn h_monomial(rank: Rank, indices: &[usize]) -> Result<NilCoxeterElement> {
    h_monomial_cached(rank, indices, &NoCache).map(Arc::unwrap_or_clone)
}

/// `h_λ = h_{λ_1} ... h_{λ_m}`.
pub fn h_product(lambda: &BoundedPartition) -> Result<NilCoxeterElement> {
    h_monomial(lambda.rank(), lambda.rows())
}

/// Memo for `h` products keyed by `(k, index sequence)`.
///
/// Entries are deterministic, so an implementation may race on insertion;
/// any stored value is as good as any other.
pub trait HProductCache {
    fn get(&self, rank: Rank, indices: &[usize]) -> Option<Arc<NilCoxeterElement>>;
    fn insert(&self, rank: Rank, indices: &[usize], value: Arc<NilCoxeterElement>);
}

/// Always recomputes.
#[derive(Debug, Default, Clone, Copy)]
pub struct NoCache;

impl HProductCache for NoCache {
    fn get(&self, _: Rank, _: &[usize]) -> Option<Arc<NilCoxeterElement>> {
        None
    }

    fn insert(&self, _: Rank, _: &[usize], _: Arc<NilCoxeterElement>) {}
}

type HKey = (Rank, Vec<usize>);

/// Single-threaded memo.
#[derive(Debug, Default)]
pub struct LocalCache {
    map: RefCell<BTreeMap<HKey, Arc<NilCoxeterElement>>>,
}

impl LocalCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.borrow().len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.borrow().is_empty()
    }
}

impl HProductCache for LocalCache {
    fn get(&self, rank: Rank, indices: &[usize]) -> Option<Arc<NilCoxeterElement>> {
        self.map.borrow().get(&(rank, indices.to_vec())).cloned()
    }

    fn insert(&self, rank: Rank, indices: &[usize], value: Arc<NilCoxeterElement>) {
        self.map
            .borrow_mut()
            .entry((rank, indices.to_vec()))
            .or_insert(value);
    }
}

/// `h_{a_1} ... h_{a_m}`, memoizing every suffix product.
pub fn h_monomial_cached(
    rank: Rank,
    indices: &[usize],
    cache: &dyn HProductCache,
) -> Result<Arc<NilCoxeterElement>> {
    if let Some(hit) = cache.get(rank, indices) {
        return Ok(hit);
    }
    let value = match indices {
        [] => NilCoxeterElement::unit(rank),
        [first, rest @ ..] => {
            let head = h_gen(rank, *first as i64)?;
            let tail = h_monomial_cached(rank, rest, cache)?;
            head.multiply(&tail)?
        }
    };
    let value = Arc::new(value);
    cache.insert(rank, indices, value.clone());
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn r(k: usize) -> Rank {
        Rank::new(k).unwrap()
    }

    fn u(k: usize, letters: &[usize]) -> NilCoxeterElement {
        NilCoxeterElement::monomial(&Word::new(r(k), letters.to_vec()).unwrap())
    }

    fn sum(parts: &[NilCoxeterElement]) -> NilCoxeterElement {
        let mut out = NilCoxeterElement::zero(parts[0].rank());
        for p in parts {
            out = &out + p;
        }
        out
    }

    #[test]
    fn multiply_examples() {
        assert!(u(2, &[0]).multiply(&u(2, &[0])).unwrap().is_zero());
        assert_eq!(u(2, &[1]).multiply(&u(2, &[0])).unwrap(), u(2, &[1, 0]));
        let h1 = h_gen(r(2), 1).unwrap();
        assert_eq!(
            h1.multiply(&u(2, &[1, 0])).unwrap(),
            &u(2, &[0, 1, 0]) + &u(2, &[2, 1, 0])
        );
        assert!(u(2, &[0]).multiply(&u(3, &[0])).is_err());
    }

    #[test]
    fn monomial_of_non_reduced_word_is_zero() {
        assert!(u(2, &[1, 0, 0]).is_zero());
        assert!(u(2, &[0, 1, 0, 1]).is_zero());
        assert_eq!(u(2, &[0, 1, 0]), u(2, &[1, 0, 1]));
    }

    #[test]
    fn h_gen_examples() {
        let h2 = h_gen(r(3), 2).unwrap();
        let expected = sum(&[
            u(3, &[2, 1]),
            u(3, &[1, 0]),
            u(3, &[0, 3]),
            u(3, &[3, 2]),
            u(3, &[0, 2]),
            u(3, &[1, 3]),
        ]);
        assert_eq!(h2, expected);
        assert_eq!(h_gen(r(3), 0).unwrap(), NilCoxeterElement::unit(r(3)));
        assert_eq!(
            h_gen(r(2), 1).unwrap(),
            sum(&[u(2, &[0]), u(2, &[1]), u(2, &[2])])
        );
        assert!(h_gen(r(3), 4).is_err());
        assert!(h_gen(r(3), -1).is_err());
    }

    #[test]
    fn h_gen_term_counts() {
        let binom =
            |n: usize, m: usize| -> usize { (0..m).fold(1, |acc, t| acc * (n - t) / (t + 1)) };
        for k in 2..=5 {
            for i in 0..=k {
                assert_eq!(h_gen(r(k), i as i64).unwrap().len(), binom(k + 1, i));
            }
        }
    }

    #[test]
    fn h_product_examples() {
        let rank = r(3);
        let two = BoundedPartition::new(rank, vec![2]).unwrap();
        assert_eq!(h_product(&two).unwrap(), h_gen(rank, 2).unwrap());
        assert_eq!(
            h_product(&BoundedPartition::empty(rank)).unwrap(),
            NilCoxeterElement::unit(rank)
        );
        let h11 = h_product(&BoundedPartition::new(r(2), vec![1, 1]).unwrap()).unwrap();
        let expected = sum(&[
            u(2, &[0, 1]),
            u(2, &[0, 2]),
            u(2, &[1, 0]),
            u(2, &[1, 2]),
            u(2, &[2, 0]),
            u(2, &[2, 1]),
        ]);
        assert_eq!(h11, expected);
        assert!(h11.terms().all(|(_, c)| c.is_one()));
    }

    #[test]
    fn h_generators_commute() {
        for k in 2..=4 {
            let rank = r(k);
            let hs: Vec<_> = (0..=k).map(|i| h_gen(rank, i as i64).unwrap()).collect();
            for a in &hs {
                for b in &hs {
                    assert_eq!(a.multiply(b).unwrap(), b.multiply(a).unwrap());
                }
            }
        }
    }

    #[test]
    fn grassmannian_part_examples() {
        let rank = r(3);
        assert!(NilCoxeterElement::zero(rank).grassmannian_part().is_zero());
        assert_eq!(h_gen(rank, 2).unwrap().grassmannian_part(), u(3, &[1, 0]));
    }

    #[test]
    fn cached_and_uncached_products_agree() {
        let rank = r(3);
        let cache = LocalCache::new();
        let a = h_monomial_cached(rank, &[2, 1, 1], &cache).unwrap();
        assert_eq!(cache.len(), 4);
        let b = h_monomial(rank, &[2, 1, 1]).unwrap();
        assert_eq!(*a, b);
        let again = h_monomial_cached(rank, &[2, 1, 1], &cache).unwrap();
        assert!(Arc::ptr_eq(&a, &again));
    }

    #[test]
    fn display_uses_canonical_order() {
        let e = &u(2, &[2, 1]).scale(&BigInt::from(2)) - &u(2, &[0]);
        assert_eq!(alloc::format!("{e}"), "-u[0] + 2·u[2,1]");
        assert_eq!(alloc::format!("{}", NilCoxeterElement::zero(r(2))), "0");
    }
}
