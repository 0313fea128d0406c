//! The down operator `D_{Λ_j}` and the up operator `U`.
//!
//! `D_{Λ_j}(u_w) = Σ_{v ⋖ w} ⟨α∨_{v,w}, Λ_j⟩ u_v`, extended linearly. Two
//! independent implementations are provided:
//!
//! * [`DownMethod::Root`] evaluates the pairing from the cover coroot.
//! * [`DownMethod::Combinatorial`] factors `w = w^j · w_j`, counts addable
//!   cells of cores along a reduced word of `w^j` (indices shifted by `−j`),
//!   and right-multiplies by `u_{w_j}`.
//!
//! Weights other than fundamental ones are handled as sums, see
//! [`down_sum`].

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::affine_weyl::{covers_along, AffinePermutation, Word};
use crate::cores::Core;
use crate::error::{Error, Result};
use crate::nilcoxeter::{h_gen, NilCoxeterElement};
use crate::root_system::deletion_coroot;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DownMethod {
    Root,
    #[default]
    Combinatorial,
}

/// `D_{Λ_j}(a)`.
pub fn down(a: &NilCoxeterElement, j: usize, method: DownMethod) -> Result<NilCoxeterElement> {
    let rank = a.rank();
    rank.check_index(j)?;
    let mut out = NilCoxeterElement::zero(rank);
    for (w, c) in a.terms() {
        let image = down_basis(w, j, method)?;
        for (v, d) in image.terms() {
            out.add_term(v.clone(), c * d);
        }
    }
    Ok(out)
}

/// `D_{Λ_{j_1}} + ... + D_{Λ_{j_m}}`, i.e. `D_Λ` for `Λ = Σ Λ_{j_t}`.
pub fn down_sum(
    a: &NilCoxeterElement,
    js: &[usize],
    method: DownMethod,
) -> Result<NilCoxeterElement> {
    let mut out = NilCoxeterElement::zero(a.rank());
    for &j in js {
        out = out.checked_add(&down(a, j, method)?)?;
    }
    Ok(out)
}

/// `D_{Λ_j}(u_w)`.
pub fn down_basis(
    w: &AffinePermutation,
    j: usize,
    method: DownMethod,
) -> Result<NilCoxeterElement> {
    w.rank().check_index(j)?;
    match method {
        DownMethod::Root => Ok(down_root_along(&w.canonical_reduced_word(), j)),
        DownMethod::Combinatorial => down_combinatorial(w, j),
    }
}

/// Root-method image of `u_w` computed from a caller-chosen reduced word of `w`.
pub fn down_root_along(word: &Word, j: usize) -> NilCoxeterElement {
    let mut out = NilCoxeterElement::zero(word.rank());
    for cover in covers_along(word) {
        let coroot = deletion_coroot(word, cover.position);
        debug_assert!(coroot.is_nonnegative());
        out.add_term(cover.element, BigInt::from(coroot.coords()[j]));
    }
    out
}

fn down_combinatorial(w: &AffinePermutation, j: usize) -> Result<NilCoxeterElement> {
    let (min, par) = w.coset_factorize(j)?;
    let head = grassmannian_down(&min, j)?;
    head.multiply(&NilCoxeterElement::basis(par))
}

/// `(z, c_z^{w,j})` for `w ∈ W^j`: deleting position `t` of the reduced word
/// `[a_1, ..., a_m]` weighs `z` by the number of addable `(a_t − j)`-cells of
/// `s_{a_{t+1}−j} ... s_{a_m−j} ∅`.
pub fn grassmannian_cover_counts(
    w: &AffinePermutation,
    j: usize,
) -> Result<Vec<(AffinePermutation, usize)>> {
    let rank = w.rank();
    rank.check_index(j)?;
    if !w.is_min_coset_rep(j) {
        return Err(Error::Internal(alloc::format!(
            "{w} is not a minimal coset representative for j = {j}"
        )));
    }
    let word = w.canonical_reduced_word();
    let shifted = word.rotate(-(j as i64));
    let letters = shifted.letters();
    let m = letters.len();

    // cores[t] = s_{b_{t+1}} ... s_{b_m} ∅ for the shifted letters b.
    let mut cores = alloc::vec![Core::empty(rank); m + 1];
    for t in (0..m).rev() {
        cores[t] = cores[t + 1].apply_generator(letters[t])?;
    }

    let mut out = Vec::new();
    for cover in covers_along(&word) {
        let t = cover.position;
        let count = cores[t].addable_cells(letters[t - 1]).len();
        if count > 0 {
            out.push((cover.element, count));
        }
    }
    Ok(out)
}

fn grassmannian_down(w: &AffinePermutation, j: usize) -> Result<NilCoxeterElement> {
    let mut out = NilCoxeterElement::zero(w.rank());
    for (z, count) in grassmannian_cover_counts(w, j)? {
        out.add_term(z, BigInt::from(count));
    }
    Ok(out)
}

/// `⟨α∨_{v,w}, Λ_j⟩` for a cover `v ⋖ w`.
pub fn cover_coefficient(v: &AffinePermutation, w: &AffinePermutation, j: usize) -> Result<u64> {
    w.rank().check_index(j)?;
    let coroot = crate::root_system::cover_coroot(v, w)?;
    Ok(coroot.coords()[j] as u64)
}

/// `U_i(a) = h_i · a`; `U = U_1`.
pub fn up(i: i64, a: &NilCoxeterElement) -> Result<NilCoxeterElement> {
    h_gen(a.rank(), i)?.multiply(a)
}
