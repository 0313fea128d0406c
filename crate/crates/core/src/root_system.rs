//! Coroots, weights and the Cartan pairing for `A_k^(1)`.
//!
//! Coroot vectors use the simple-coroot basis `{α_0∨, ..., α_k∨}`. Weight
//! vectors use the basis `{Λ_0, ..., Λ_k, δ}`, in which the simple root is
//! `α_j = Σ_i ⟨α_i∨, α_j⟩ Λ_i + [j = 0] δ`, so that `α_0 + ... + α_k = δ`.

use alloc::vec;
use alloc::vec::Vec;

use crate::affine_weyl::{AffinePermutation, Rank, Word};
use crate::error::{Error, Result};

/// `⟨α_i∨, α_j⟩`: 2 on the diagonal, −1 for adjacent nodes, 0 otherwise.
pub fn cartan(rank: Rank, i: usize, j: usize) -> Result<i64> {
    rank.check_index(i)?;
    rank.check_index(j)?;
    Ok(cartan_entry(rank, i, j))
}

fn cartan_entry(rank: Rank, i: usize, j: usize) -> i64 {
    if i == j {
        2
    } else if rank.adjacent(i, j) {
        -1
    } else {
        0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CorootVector {
    rank: Rank,
    coords: Vec<i64>,
}

impl CorootVector {
    pub fn new(rank: Rank, coords: Vec<i64>) -> Result<Self> {
        if coords.len() != rank.n() {
            return Err(Error::IndexOutOfRange {
                index: coords.len() as i64,
                k: rank.k(),
            });
        }
        Ok(CorootVector { rank, coords })
    }

    pub fn zero(rank: Rank) -> Self {
        CorootVector {
            rank,
            coords: vec![0; rank.n()],
        }
    }

    /// `α_i∨`.
    pub fn simple(rank: Rank, i: usize) -> Result<Self> {
        rank.check_index(i)?;
        let mut v = Self::zero(rank);
        v.coords[i] = 1;
        Ok(v)
    }

    /// The canonical central element `c = α_0∨ + ... + α_k∨`.
    pub fn central(rank: Rank) -> Self {
        CorootVector {
            rank,
            coords: vec![1; rank.n()],
        }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.rank.ensure_same(other.rank)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CorootVector {
            rank: self.rank,
            coords,
        })
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    /// `⟨μ, α_j⟩`.
    fn pair_simple_root(&self, j: usize) -> i64 {
        self.coords
            .iter()
            .enumerate()
            .map(|(i, &c)| c * cartan_entry(self.rank, i, j))
            .sum()
    }

    /// `s_i(μ) = μ − ⟨μ, α_i⟩ α_i∨`.
    pub fn reflect(&self, i: usize) -> Result<Self> {
        self.rank.check_index(i)?;
        let mut out = self.clone();
        out.reflect_in_place(i);
        Ok(out)
    }

    fn reflect_in_place(&mut self, i: usize) {
        let p = self.pair_simple_root(i);
        self.coords[i] -= p;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVector {
    rank: Rank,
    fw_coords: Vec<i64>,
    delta_coord: i64,
}

impl WeightVector {
    pub fn new(rank: Rank, fw_coords: Vec<i64>, delta_coord: i64) -> Result<Self> {
        if fw_coords.len() != rank.n() {
            return Err(Error::IndexOutOfRange {
                index: fw_coords.len() as i64,
                k: rank.k(),
            });
        }
        Ok(WeightVector {
            rank,
            fw_coords,
            delta_coord,
        })
    }

    pub fn zero(rank: Rank) -> Self {
        WeightVector {
            rank,
            fw_coords: vec![0; rank.n()],
            delta_coord: 0,
        }
    }

    /// `Λ_i`.
    pub fn fundamental(rank: Rank, i: usize) -> Result<Self> {
        rank.check_index(i)?;
        let mut v = Self::zero(rank);
        v.fw_coords[i] = 1;
        Ok(v)
    }

    /// The null root `δ`.
    pub fn null_root(rank: Rank) -> Self {
        WeightVector {
            rank,
            fw_coords: vec![0; rank.n()],
            delta_coord: 1,
        }
    }

    /// `α_j`, column `j` of the Cartan matrix plus `δ` when `j = 0`.
    pub fn simple_root(rank: Rank, j: usize) -> Result<Self> {
        rank.check_index(j)?;
        let fw_coords = (0..rank.n()).map(|i| cartan_entry(rank, i, j)).collect();
        Ok(WeightVector {
            rank,
            fw_coords,
            delta_coord: i64::from(j == 0),
        })
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn fw_coords(&self) -> &[i64] {
        &self.fw_coords
    }

    pub fn delta_coord(&self) -> i64 {
        self.delta_coord
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.rank.ensure_same(other.rank)?;
        let fw_coords = self
            .fw_coords
            .iter()
            .zip(&other.fw_coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(WeightVector {
            rank: self.rank,
            fw_coords,
            delta_coord: self.delta_coord + other.delta_coord,
        })
    }

    /// `s_i(λ) = λ − ⟨α_i∨, λ⟩ α_i`.
    pub fn reflect(&self, i: usize) -> Result<Self> {
        self.rank.check_index(i)?;
        let mut out = self.clone();
        out.reflect_in_place(i);
        Ok(out)
    }

    fn reflect_in_place(&mut self, i: usize) {
        let p = self.fw_coords[i];
        if p == 0 {
            return;
        }
        for (j, c) in self.fw_coords.iter_mut().enumerate() {
            *c -= p * cartan_entry(self.rank, j, i);
        }
        if i == 0 {
            self.delta_coord -= p;
        }
    }
}

/// `⟨μ, λ⟩` with `⟨α_i∨, Λ_j⟩ = δ_ij` and `⟨α_i∨, δ⟩ = 0`.
pub fn pair(mu: &CorootVector, lam: &WeightVector) -> Result<i64> {
    mu.rank.ensure_same(lam.rank)?;
    Ok(mu
        .coords
        .iter()
        .zip(&lam.fw_coords)
        .map(|(a, b)| a * b)
        .sum())
}

/// `w(μ)`, applying the letters of a reduced word of `w` right to left.
pub fn act_coroot(w: &AffinePermutation, mu: &CorootVector) -> Result<CorootVector> {
    w.rank().ensure_same(mu.rank)?;
    let mut out = mu.clone();
    for &i in w.canonical_reduced_word().letters().iter().rev() {
        out.reflect_in_place(i);
    }
    Ok(out)
}

/// `w(λ)`, applying the letters of a reduced word of `w` right to left.
pub fn act_weight(w: &AffinePermutation, lam: &WeightVector) -> Result<WeightVector> {
    w.rank().ensure_same(lam.rank)?;
    let mut out = lam.clone();
    for &i in w.canonical_reduced_word().letters().iter().rev() {
        out.reflect_in_place(i);
    }
    Ok(out)
}

/// The coroot of the reflection removed when deleting the letter at 1-based
/// `position` from `word`.
///
/// Writing the word as `x · s_i · y`, the deleted product is `x · y` and
/// `(x y)^{-1} (x s_i y) = y^{-1} s_i y`, whose coroot is `y^{-1}(α_i∨)`.
/// The caller is responsible for `word` being reduced and the deletion
/// being a cover.
pub fn deletion_coroot(word: &Word, position: usize) -> CorootVector {
    let letters = word.letters();
    let mut out = CorootVector::zero(word.rank());
    out.coords[letters[position - 1]] = 1;
    for &i in &letters[position..] {
        out.reflect_in_place(i);
    }
    out
}

/// `α∨_{v,w}` for a Bruhat cover `v ⋖ w`.
pub fn cover_coroot(v: &AffinePermutation, w: &AffinePermutation) -> Result<CorootVector> {
    v.rank().ensure_same(w.rank())?;
    if v.length() + 1 != w.length() {
        return Err(Error::NotACover);
    }
    let word = w.canonical_reduced_word();
    let cover = crate::affine_weyl::covers_along(&word)
        .into_iter()
        .find(|c| &c.element == v)
        .ok_or(Error::NotACover)?;
    let coroot = deletion_coroot(&word, cover.position);
    if !coroot.is_nonnegative() {
        return Err(Error::Internal(alloc::format!(
            "cover coroot {:?} for {v} ⋖ {w} is not positive",
            coroot.coords
        )));
    }
    Ok(coroot)
}
