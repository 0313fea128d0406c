#![allow(dead_code)]

use kschur_core::{AffinePermutation, NilCoxeterElement, Rank, Word};
use num_bigint::BigInt;
use proptest::prelude::*;

pub fn rank(k: usize) -> Rank {
    Rank::new(k).unwrap()
}

pub fn el(k: usize, letters: &[usize]) -> AffinePermutation {
    AffinePermutation::from_letters(rank(k), letters).unwrap()
}

pub fn word(k: usize, letters: &[usize]) -> Word {
    Word::new(rank(k), letters.to_vec()).unwrap()
}

pub fn sum_of_words(k: usize, words: &[&[usize]]) -> NilCoxeterElement {
    NilCoxeterElement::from_terms(rank(k), words.iter().map(|w| (el(k, w), BigInt::from(1))))
        .unwrap()
}

/// A rank in 2..=max_k together with a random word of length at most `max_len`.
pub fn rank_and_word(max_k: usize, max_len: usize) -> impl Strategy<Value = (usize, Vec<usize>)> {
    (2..=max_k).prop_flat_map(move |k| (Just(k), proptest::collection::vec(0..=k, 0..=max_len)))
}

/// All elements of length at most `max_len`, flattened.
pub fn all_up_to(k: usize, max_len: usize) -> Vec<AffinePermutation> {
    kschur_core::affine_weyl::elements_by_length(rank(k), max_len)
        .into_iter()
        .flatten()
        .collect()
}

/// The affine permutation swapping the residue classes of positions `a` and `b`.
pub fn transposition(k: usize, a: i64, b: i64) -> AffinePermutation {
    let n = (k + 1) as i64;
    let window = (1..=n)
        .map(|p| {
            if (p - a).rem_euclid(n) == 0 {
                p + (b - a)
            } else if (p - b).rem_euclid(n) == 0 {
                p - (b - a)
            } else {
                p
            }
        })
        .collect();
    AffinePermutation::from_window(rank(k), window).unwrap()
}

/// The positive coroot of the reflection swapping positions `a < b`:
/// `α∨_a + α∨_{a+1} + ... + α∨_{b−1}`, indices mod n.
pub fn transposition_coroot(k: usize, a: i64, b: i64) -> Vec<i64> {
    let n = (k + 1) as i64;
    let mut coords = vec![0; k + 1];
    for p in a..b {
        coords[p.rem_euclid(n) as usize] += 1;
    }
    coords
}

/// `(a, b)` with `a` in the window and `a < b` for a reflection `t`.
pub fn reflection_positions(t: &AffinePermutation) -> (i64, i64) {
    let n = t.rank().n() as i64;
    let a = (1..=n)
        .find(|&p| t.value_at(p) > p)
        .expect("not a reflection");
    (a, t.value_at(a))
}
