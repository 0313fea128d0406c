//! The affine symmetric group `W` of type `A_k^(1)`.
//!
//! Elements are stored in window notation: an affine permutation is a
//! bijection `f: Z -> Z` with `f(i + n) = f(i) + n` (`n = k + 1`) whose window
//! `[f(1), ..., f(n)]` sums to `n(n+1)/2`. The window is a canonical form, so
//! equality, ordering and hashing are plain comparisons of the window.
//!
//! Conventions: the word `[i_1, ..., i_m]` denotes `s_{i_1} s_{i_2} ... s_{i_m}`
//! and the product `v * w` is composition `v ∘ w`. Right multiplication by
//! `s_i` swaps positions `i, i+1` of the window; left multiplication swaps
//! the values congruent to `i, i+1` mod `n`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// The rank `k` of `A_k^(1)`; the generator indices are `I = {0, ..., k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rank(usize);

impl Rank {
    /// Rejects `k < 2`: the adjacency-based Cartan matrix needs three nodes.
    pub fn new(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::RankTooSmall(k));
        }
        Ok(Rank(k))
    }

    pub fn k(self) -> usize {
        self.0
    }

    /// Number of generators, `k + 1`.
    pub fn n(self) -> usize {
        self.0 + 1
    }

    /// Checks that `i` lies in `{0, ..., k}`.
    pub fn check_index(self, i: usize) -> Result<usize> {
        if i > self.0 {
            return Err(Error::IndexOutOfRange {
                index: i as i64,
                k: self.0,
            });
        }
        Ok(i)
    }

    /// Two indices are adjacent when `i - j = ±1 mod (k+1)`.
    pub fn adjacent(self, i: usize, j: usize) -> bool {
        let n = self.n();
        (i + 1) % n == j || (j + 1) % n == i
    }

    /// Reduces an arbitrary integer to an index in `{0, ..., k}`.
    pub fn wrap(self, i: i64) -> usize {
        i.rem_euclid(self.n() as i64) as usize
    }

    pub(crate) fn ensure_same(self, other: Rank) -> Result<()> {
        if self != other {
            return Err(Error::RankMismatch {
                left: self.0,
                right: other.0,
            });
        }
        Ok(())
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={}", self.0)
    }
}

/// A word in the generators; `[i_1, ..., i_m]` stands for `s_{i_1} ... s_{i_m}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    rank: Rank,
    letters: Vec<usize>,
}

impl Word {
    pub fn new(rank: Rank, letters: Vec<usize>) -> Result<Self> {
        for &i in &letters {
            rank.check_index(i)?;
        }
        Ok(Word { rank, letters })
    }

    pub fn empty(rank: Rank) -> Self {
        Word {
            rank,
            letters: Vec::new(),
        }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The word with the letter at 1-based `position` removed.
    pub fn delete(&self, position: usize) -> Word {
        let mut letters = self.letters.clone();
        letters.remove(position - 1);
        Word {
            rank: self.rank,
            letters,
        }
    }

    /// Adds `shift` to every letter modulo `k+1` (the diagram rotation).
    pub fn rotate(&self, shift: i64) -> Word {
        let letters = self
            .letters
            .iter()
            .map(|&i| self.rank.wrap(i as i64 + shift))
            .collect();
        Word {
            rank: self.rank,
            letters,
        }
    }

    pub(crate) fn from_raw(rank: Rank, letters: Vec<usize>) -> Self {
        Word { rank, letters }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (t, i) in self.letters.iter().enumerate() {
            if t > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "]")
    }
}

/// Left or right descents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Which right descent to strip first when extracting a reduced word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DescentPolicy {
    /// The canonical choice.
    #[default]
    Smallest,
    Largest,
}

/// A Bruhat cover `v ⋖ w` obtained by deleting the letter at the 1-based
/// `position` of a fixed reduced word of `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cover {
    pub element: AffinePermutation,
    pub position: usize,
}

/// An element of the affine symmetric group in window notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffinePermutation {
    rank: Rank,
    window: Vec<i64>,
}

impl AffinePermutation {
    pub fn identity(rank: Rank) -> Self {
        let window = (1..=rank.n() as i64).collect();
        AffinePermutation { rank, window }
    }

    /// Builds an element from its window, checking distinct residues and the
    /// normalized sum.
    pub fn from_window(rank: Rank, window: Vec<i64>) -> Result<Self> {
        let n = rank.n();
        if window.len() != n {
            return Err(Error::InvalidWindow(format!(
                "expected {n} entries, got {}",
                window.len()
            )));
        }
        let residues: BTreeSet<i64> = window.iter().map(|v| v.rem_euclid(n as i64)).collect();
        if residues.len() != n {
            return Err(Error::InvalidWindow(format!(
                "{window:?} has repeated residues mod {n}"
            )));
        }
        let sum: i64 = window.iter().sum();
        let expected = (n * (n + 1) / 2) as i64;
        if sum != expected {
            return Err(Error::InvalidWindow(format!(
                "{window:?} sums to {sum}, expected {expected}"
            )));
        }
        Ok(AffinePermutation { rank, window })
    }

    pub fn generator(rank: Rank, i: usize) -> Result<Self> {
        rank.check_index(i)?;
        let mut w = Self::identity(rank);
        w.swap_positions(i);
        Ok(w)
    }

    /// The product `s_{i_1} ... s_{i_m}`; the word need not be reduced.
    pub fn from_word(word: &Word) -> Self {
        let mut w = Self::identity(word.rank);
        for &i in &word.letters {
            w.swap_positions(i);
        }
        w
    }

    pub fn from_letters(rank: Rank, letters: &[usize]) -> Result<Self> {
        Ok(Self::from_word(&Word::new(rank, letters.to_vec())?))
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().zip(1..).all(|(&v, p)| v == p)
    }

    /// `w(p)` for any integer `p`.
    pub fn value_at(&self, p: i64) -> i64 {
        let n = self.rank.n() as i64;
        let q = (p - 1).div_euclid(n);
        let r = (p - 1).rem_euclid(n) as usize;
        self.window[r] + q * n
    }

    /// In-place right multiplication by `s_i`.
    fn swap_positions(&mut self, i: usize) {
        let n = self.window.len();
        if i == 0 {
            let first = self.window[0];
            let last = self.window[n - 1];
            self.window[0] = last - n as i64;
            self.window[n - 1] = first + n as i64;
        } else {
            self.window.swap(i - 1, i);
        }
    }

    /// In-place left multiplication by `s_i`.
    fn swap_values(&mut self, i: usize) {
        let n = self.rank.n() as i64;
        let up = i as i64;
        let down = (up + 1) % n;
        for v in self.window.iter_mut() {
            let r = v.rem_euclid(n);
            if r == up {
                *v += 1;
            } else if r == down {
                *v -= 1;
            }
        }
    }

    /// `w · s_i`.
    pub fn mul_generator_right(&self, i: usize) -> Result<Self> {
        self.rank.check_index(i)?;
        let mut w = self.clone();
        w.swap_positions(i);
        Ok(w)
    }

    /// `s_i · w`.
    pub fn mul_generator_left(&self, i: usize) -> Result<Self> {
        self.rank.check_index(i)?;
        let mut w = self.clone();
        w.swap_values(i);
        Ok(w)
    }

    /// The group product `self · other`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.rank.ensure_same(other.rank)?;
        let window = other.window.iter().map(|&p| self.value_at(p)).collect();
        Ok(AffinePermutation {
            rank: self.rank,
            window,
        })
    }

    pub fn inverse(&self) -> Self {
        let n = self.rank.n() as i64;
        let mut window = alloc::vec![0; n as usize];
        for (p, &v) in (1..).zip(&self.window) {
            let q = (v - 1).div_euclid(n);
            let r = (v - 1).rem_euclid(n) as usize;
            window[r] = p - q * n;
        }
        AffinePermutation {
            rank: self.rank,
            window,
        }
    }

    /// Coxeter length via the affine inversion count
    /// `Σ_{1≤i<j≤n} |⌊(w(j) − w(i)) / n⌋|`.
    pub fn length(&self) -> usize {
        let n = self.rank.n() as i64;
        let mut total = 0;
        for (a, &wi) in self.window.iter().enumerate() {
            for &wj in &self.window[a + 1..] {
                total += (wj - wi).div_euclid(n).unsigned_abs() as usize;
            }
        }
        total
    }

    pub fn has_right_descent(&self, i: usize) -> bool {
        let i = i as i64;
        self.value_at(i) > self.value_at(i + 1)
    }

    pub fn has_left_descent(&self, i: usize) -> bool {
        self.inverse().has_right_descent(i)
    }

    /// Sorted descent set on the given side.
    pub fn descents(&self, side: Side) -> Vec<usize> {
        let target = match side {
            Side::Right => self.clone(),
            Side::Left => self.inverse(),
        };
        (0..self.rank.n())
            .filter(|&i| target.has_right_descent(i))
            .collect()
    }

    /// Whether the right descents are contained in `{j}`, i.e. `w ∈ W^j`.
    pub fn is_min_coset_rep(&self, j: usize) -> bool {
        (0..self.rank.n()).all(|i| i == j || !self.has_right_descent(i))
    }

    /// Affine Grassmannian, i.e. `w ∈ W^0`.
    pub fn is_grassmannian(&self) -> bool {
        self.is_min_coset_rep(0)
    }

    /// Whether `w` lies in the parabolic subgroup `W_j` (generated by `s_i`, `i ≠ j`).
    pub fn in_parabolic(&self, j: usize) -> bool {
        let (min, _) = self.factor_unchecked(j);
        min.is_identity()
    }

    /// A reduced word obtained by repeatedly stripping a right descent.
    pub fn reduced_word(&self, policy: DescentPolicy) -> Word {
        let n = self.rank.n();
        let mut w = self.clone();
        let mut tail = Vec::new();
        loop {
            let pick = match policy {
                DescentPolicy::Smallest => (0..n).find(|&i| w.has_right_descent(i)),
                DescentPolicy::Largest => (0..n).rev().find(|&i| w.has_right_descent(i)),
            };
            match pick {
                Some(i) => {
                    w.swap_positions(i);
                    tail.push(i);
                }
                None => break,
            }
        }
        tail.reverse();
        Word::from_raw(self.rank, tail)
    }

    /// The deterministic reduced word: smallest right descent stripped first.
    pub fn canonical_reduced_word(&self) -> Word {
        self.reduced_word(DescentPolicy::Smallest)
    }

    /// All Bruhat covers `v ⋖ w`, read off the canonical reduced word.
    pub fn bruhat_covers_below(&self) -> Vec<Cover> {
        covers_along(&self.canonical_reduced_word())
    }

    /// Factors `w = w^j · w_j` with `w^j ∈ W^j`, `w_j ∈ W_j` and lengths adding.
    pub fn coset_factorize(&self, j: usize) -> Result<(Self, Self)> {
        self.rank.check_index(j)?;
        Ok(self.factor_unchecked(j))
    }

    fn factor_unchecked(&self, j: usize) -> (Self, Self) {
        let n = self.rank.n();
        let mut min = self.clone();
        let mut par = Self::identity(self.rank);
        while let Some(i) = (0..n).find(|&i| i != j && min.has_right_descent(i)) {
            min.swap_positions(i);
            par.swap_values(i);
        }
        (min, par)
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_reduced_word())
    }
}

/// Covers obtained by single-letter deletion from a reduced `word`; a
/// deletion is kept when its product has length `len(word) - 1`.
pub fn covers_along(word: &Word) -> Vec<Cover> {
    let m = word.len();
    (1..=m)
        .filter_map(|position| {
            let element = AffinePermutation::from_word(&word.delete(position));
            (element.length() + 1 == m).then_some(Cover { element, position })
        })
        .collect()
}

/// The cyclically decreasing word `w_S` for a proper subset `S ⊊ I`.
///
/// `S` splits into maximal cyclic intervals `[a..b]`; each contributes
/// `s_b s_{b-1} ... s_a`, and the intervals are concatenated by descending `b`.
pub fn cyclically_decreasing_word(rank: Rank, subset: &[usize]) -> Result<Word> {
    let n = rank.n();
    let mut member = alloc::vec![false; n];
    for &i in subset {
        rank.check_index(i)?;
        if member[i] {
            return Err(Error::DuplicateIndex(i));
        }
        member[i] = true;
    }
    if subset.len() == n {
        return Err(Error::FullSubset);
    }
    let mut intervals: Vec<(usize, Vec<usize>)> = Vec::new();
    for a in 0..n {
        if !member[a] || member[(a + n - 1) % n] {
            continue;
        }
        let mut run = alloc::vec![a];
        let mut b = a;
        while member[(b + 1) % n] {
            b = (b + 1) % n;
            run.push(b);
        }
        run.reverse();
        intervals.push((b, run));
    }
    intervals.sort_by_key(|x| core::cmp::Reverse(x.0));
    let letters = intervals.into_iter().flat_map(|(_, run)| run).collect();
    Ok(Word::from_raw(rank, letters))
}

/// The element `w_S`.
pub fn cyclically_decreasing(rank: Rank, subset: &[usize]) -> Result<AffinePermutation> {
    Ok(AffinePermutation::from_word(&cyclically_decreasing_word(
        rank, subset,
    )?))
}

/// All subsets of `{0, ..., k}` of the given size, as sorted index lists,
/// in lexicographic order.
pub fn subsets_of_size(rank: Rank, size: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if size <= rank.n() {
        rec(0, rank.n(), size, &mut Vec::new(), &mut out);
    }
    out
}

/// Every element of length at most `max_length`, grouped by length.
pub fn elements_by_length(rank: Rank, max_length: usize) -> Vec<Vec<AffinePermutation>> {
    let mut levels = alloc::vec![alloc::vec![AffinePermutation::identity(rank)]];
    for _ in 0..max_length {
        let mut next = BTreeSet::new();
        for w in levels.last().unwrap() {
            for i in 0..rank.n() {
                if !w.has_right_descent(i) {
                    let mut v = w.clone();
                    v.swap_positions(i);
                    next.insert(v);
                }
            }
        }
        levels.push(next.into_iter().collect());
    }
    levels
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn r(k: usize) -> Rank {
        Rank::new(k).unwrap()
    }

    fn w(k: usize, letters: &[usize]) -> AffinePermutation {
        AffinePermutation::from_letters(r(k), letters).unwrap()
    }

    #[test]
    fn rank_rejects_small_k() {
        assert_eq!(Rank::new(1), Err(Error::RankTooSmall(1)));
        assert_eq!(Rank::new(0), Err(Error::RankTooSmall(0)));
        assert!(Rank::new(2).is_ok());
    }

    #[test]
    fn from_word_examples() {
        assert_eq!(w(2, &[]).window(), &[1, 2, 3]);
        assert!(w(2, &[1, 1]).is_identity());
        assert_eq!(w(2, &[0, 1, 0]), w(2, &[1, 0, 1]));
        assert!(Word::new(r(2), vec![3]).is_err());
    }

    #[test]
    fn generator_windows() {
        assert_eq!(w(2, &[0]).window(), &[0, 2, 4]);
        assert_eq!(w(3, &[2]).window(), &[1, 3, 2, 4]);
    }

    #[test]
    fn window_validation() {
        assert!(AffinePermutation::from_window(r(2), vec![0, 2, 4]).is_ok());
        assert!(AffinePermutation::from_window(r(2), vec![1, 4, 3]).is_err());
        assert!(AffinePermutation::from_window(r(2), vec![1, 2, 6]).is_err());
        assert!(AffinePermutation::from_window(r(2), vec![1, 2]).is_err());
    }

    #[test]
    fn multiply_examples() {
        let s1 = w(2, &[1]);
        let s0 = w(2, &[0]);
        let p = s1.multiply(&s0).unwrap();
        assert_eq!(p.canonical_reduced_word().letters(), &[1, 0]);
        assert_eq!(p.length(), 2);
        assert!(p.multiply(&w(2, &[0, 1])).unwrap().is_identity());
        assert_eq!(p.multiply(&AffinePermutation::identity(r(2))).unwrap(), p);
        assert!(s1.multiply(&w(3, &[1])).is_err());
    }

    #[test]
    fn inverse_and_left_multiplication() {
        let x = w(3, &[2, 3, 0, 1, 2]);
        assert!(x.multiply(&x.inverse()).unwrap().is_identity());
        assert_eq!(x.mul_generator_left(1).unwrap(), w(3, &[1, 2, 3, 0, 1, 2]));
    }

    #[test]
    fn length_examples() {
        assert_eq!(AffinePermutation::identity(r(3)).length(), 0);
        assert_eq!(w(3, &[2, 3, 0, 1, 2, 3, 0]).length(), 7);
        assert_eq!(w(2, &[1, 1]).length(), 0);
    }

    #[test]
    fn descent_examples() {
        let x = w(2, &[1, 0]);
        assert_eq!(x.descents(Side::Right), vec![0]);
        assert_eq!(x.descents(Side::Left), vec![1]);
        assert_eq!(w(4, &[1, 0, 4, 2, 1, 0]).descents(Side::Right), vec![0]);
    }

    #[test]
    fn canonical_word_examples() {
        assert!(AffinePermutation::identity(r(2))
            .canonical_reduced_word()
            .is_empty());
        assert_eq!(
            w(2, &[0, 1, 0]).canonical_reduced_word().letters(),
            &[0, 1, 0]
        );
        assert_eq!(w(2, &[0]).canonical_reduced_word().letters(), &[0]);
    }

    #[test]
    fn covers_examples() {
        assert!(AffinePermutation::identity(r(2))
            .bruhat_covers_below()
            .is_empty());
        let covers = w(2, &[0, 1, 0]).bruhat_covers_below();
        assert_eq!(
            covers,
            vec![
                Cover {
                    element: w(2, &[1, 0]),
                    position: 1
                },
                Cover {
                    element: w(2, &[0, 1]),
                    position: 3
                },
            ]
        );
        assert_eq!(w(3, &[2, 3, 0, 1, 2, 3, 0]).bruhat_covers_below().len(), 6);
    }

    #[test]
    fn coset_examples() {
        let (min, par) = w(3, &[2, 3, 0, 1, 2, 3, 0, 2]).coset_factorize(0).unwrap();
        assert_eq!(min, w(3, &[2, 3, 0, 1, 2, 3, 0]));
        assert_eq!(par, w(3, &[2]));
        let id = AffinePermutation::identity(r(3));
        for j in 0..4 {
            assert_eq!(id.coset_factorize(j).unwrap(), (id.clone(), id.clone()));
        }
        assert_eq!(
            w(3, &[1]).coset_factorize(0).unwrap(),
            (id.clone(), w(3, &[1]))
        );
        assert!(id.coset_factorize(4).is_err());
    }

    #[test]
    fn cyclically_decreasing_examples() {
        assert_eq!(
            cyclically_decreasing_word(r(3), &[1, 2]).unwrap().letters(),
            &[2, 1]
        );
        assert_eq!(
            cyclically_decreasing_word(r(3), &[0, 3]).unwrap().letters(),
            &[0, 3]
        );
        assert_eq!(
            cyclically_decreasing_word(r(3), &[3, 0, 1])
                .unwrap()
                .letters(),
            &[1, 0, 3]
        );
        assert!(cyclically_decreasing(r(3), &[]).unwrap().is_identity());
        assert_eq!(
            cyclically_decreasing(r(3), &[0, 1, 2, 3]),
            Err(Error::FullSubset)
        );
        assert_eq!(
            cyclically_decreasing(r(3), &[1, 1]),
            Err(Error::DuplicateIndex(1))
        );
    }

    #[test]
    fn cyclically_decreasing_elements_are_distinct() {
        for k in 2..=4 {
            let rank = r(k);
            for m in 0..=k {
                let subsets = subsets_of_size(rank, m);
                let elems: BTreeSet<_> = subsets
                    .iter()
                    .map(|s| cyclically_decreasing(rank, s).unwrap())
                    .collect();
                assert_eq!(elems.len(), subsets.len());
                assert!(elems.iter().all(|e| e.length() == m));
            }
        }
    }

    #[test]
    fn level_sizes_for_k2() {
        // Poincaré series of affine A_2: 1 + 3q + 6q^2 + 9q^3 + ...
        let sizes: Vec<usize> = elements_by_length(r(2), 4).iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 3, 6, 9, 12]);
    }
}
