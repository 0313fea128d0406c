//! Exhaustive verification suites for the identities the library relies on.
//!
//! Every suite enumerates its inputs completely up to the given bound, so a
//! run is reproducible from `(suite, k, bound)` alone. Failures are data:
//! each records the identity name and the input that broke it, smallest
//! inputs first.

use std::collections::BTreeSet;

use kschur_core::affine_weyl::{
    covers_along, cyclically_decreasing, elements_by_length, subsets_of_size,
};
use kschur_core::down_operator::{
    cover_coefficient, down, down_basis, down_root_along, grassmannian_cover_counts, up,
};
use kschur_core::kschur::{
    as_k_rectangle, as_near_rectangle, klr_coefficient, klr_product_table, kschur_solve,
    near_rectangle_expansion, partitions_in_box, rectangle_expansion,
};
use kschur_core::nilcoxeter::{h_gen, h_monomial, h_product};
use kschur_core::root_system::{act_coroot, act_weight, cover_coroot, deletion_coroot, pair};
use kschur_core::{
    AffinePermutation, BoundedPartition, Core, CorootVector, DescentPolicy, DownMethod,
    ExpansionMethod, NilCoxeterElement, Rank, WeightVector,
};
use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::memo::SharedCache;

pub const SUITES: [&str; 11] = [
    "group",
    "roots",
    "coroot-sum",
    "cores",
    "heisenberg",
    "bracket",
    "derivation",
    "coset",
    "methods",
    "expansions",
    "klr",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub identity: String,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub k: usize,
    pub bound: usize,
    pub checks_run: u64,
    pub failures: Vec<Failure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Default)]
struct Checker {
    checks: u64,
    failures: Vec<Failure>,
}

impl Checker {
    fn check(&mut self, identity: &str, ok: bool, witness: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(Failure {
                identity: identity.into(),
                witness: witness(),
            });
        }
    }

    /// Like `check`, but an `Err` from the computation is itself a failure.
    fn check_result(
        &mut self,
        identity: &str,
        result: kschur_core::Result<bool>,
        witness: impl FnOnce() -> String,
    ) {
        match result {
            Ok(ok) => self.check(identity, ok, witness),
            Err(e) => {
                self.checks += 1;
                self.failures.push(Failure {
                    identity: identity.into(),
                    witness: format!("{}: {e}", witness()),
                });
            }
        }
    }

    fn absorb(&mut self, other: Checker) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
    }
}

/// Runs `f` on every case in parallel and merges in input order.
fn for_each_case<T: Sync>(cases: &[T], f: impl Fn(&T, &mut Checker) + Sync) -> Checker {
    let parts: Vec<Checker> = cases
        .par_iter()
        .map(|case| {
            let mut checker = Checker::default();
            f(case, &mut checker);
            checker
        })
        .collect();
    let mut out = Checker::default();
    for part in parts {
        out.absorb(part);
    }
    out
}

/// Runs one suite. `None` for an unknown suite name.
pub fn run_suite(name: &str, rank: Rank, bound: usize) -> Option<VerifyReport> {
    let checker = match name {
        "group" => group(rank, bound),
        "roots" => roots(rank, bound),
        "coroot-sum" => coroot_sum(rank),
        "cores" => cores(rank, bound),
        "heisenberg" => heisenberg(rank, bound),
        "bracket" => bracket(rank, bound),
        "derivation" => derivation(rank, bound),
        "coset" => coset(rank, bound),
        "methods" => methods(rank, bound),
        "expansions" => expansions(rank, bound),
        "klr" => klr(rank, bound),
        _ => return None,
    };
    Some(VerifyReport {
        suite: name.into(),
        k: rank.k(),
        bound,
        checks_run: checker.checks,
        failures: checker.failures,
    })
}

/// Every suite, run concurrently, reported in the order of [`SUITES`].
pub fn run_all(rank: Rank, bound: usize) -> Vec<VerifyReport> {
    SUITES
        .par_iter()
        .map(|name| run_suite(name, rank, bound).expect("listed suite"))
        .collect()
}

fn elements(rank: Rank, bound: usize) -> Vec<AffinePermutation> {
    elements_by_length(rank, bound)
        .into_iter()
        .flatten()
        .collect()
}

fn partitions_up_to(rank: Rank, bound: usize) -> Vec<BoundedPartition> {
    (0..=bound)
        .flat_map(|m| BoundedPartition::all_of_size(rank, m))
        .collect()
}

fn inversion_count(w: &AffinePermutation) -> usize {
    let n = w.rank().n() as i64;
    let window = w.window();
    let spread = window.iter().max().unwrap() - window.iter().min().unwrap();
    (1..=n)
        .flat_map(|i| ((i + 1)..=(i + spread + n)).map(move |j| (i, j)))
        .filter(|&(i, j)| w.value_at(i) > w.value_at(j))
        .count()
}

fn group(rank: Rank, bound: usize) -> Checker {
    let n = rank.n();
    for_each_case(&elements(rank, bound), |w, c| {
        let l = w.length();
        c.check(
            "length formula = inversion count",
            inversion_count(w) == l,
            || w.to_string(),
        );
        let canon = w.canonical_reduced_word();
        c.check(
            "canonical word is reduced",
            canon.len() == l && AffinePermutation::from_word(&canon) == *w,
            || w.to_string(),
        );
        for i in 0..n {
            let ws = w.mul_generator_right(i).expect("index in range");
            let step = ws.length();
            c.check(
                "l(w s_i) = l(w) ± 1",
                step == l + 1 || step + 1 == l,
                || format!("{w}, i = {i}"),
            );
            c.check(
                "s_i² = 1",
                ws.mul_generator_right(i).ok().as_ref() == Some(w),
                || format!("{w}, i = {i}"),
            );
            for j in (i + 1)..n {
                let word: &[usize] = if rank.adjacent(i, j) {
                    &[i, j, i]
                } else {
                    &[i, j]
                };
                let flipped: Vec<usize> =
                    word.iter().map(|&x| if x == i { j } else { i }).collect();
                let lhs = AffinePermutation::from_letters(rank, word).and_then(|u| w.multiply(&u));
                let rhs =
                    AffinePermutation::from_letters(rank, &flipped).and_then(|u| w.multiply(&u));
                c.check_result(
                    "braid relation",
                    lhs.and_then(|a| rhs.map(|b| a == b)),
                    || format!("{w}, ({i}, {j})"),
                );
            }
        }
        let first: Vec<_> = covers_along(&canon)
            .into_iter()
            .map(|cv| cv.element)
            .collect();
        let distinct: BTreeSet<_> = first.iter().cloned().collect();
        c.check(
            "deletions give distinct covers",
            distinct.len() == first.len(),
            || w.to_string(),
        );
        let second: BTreeSet<_> = covers_along(&w.reduced_word(DescentPolicy::Largest))
            .into_iter()
            .map(|cv| cv.element)
            .collect();
        c.check(
            "covers do not depend on the reduced word",
            second == distinct,
            || w.to_string(),
        );
    })
}

fn transposition_coroot(rank: Rank, t: &AffinePermutation) -> Option<Vec<i64>> {
    let n = rank.n() as i64;
    let a = (1..=n).find(|&p| t.value_at(p) > p)?;
    let b = t.value_at(a);
    let mut coords = vec![0; rank.n()];
    for p in a..b {
        coords[p.rem_euclid(n) as usize] += 1;
    }
    Some(coords)
}

fn roots(rank: Rank, bound: usize) -> Checker {
    let n = rank.n();
    let central = CorootVector::central(rank);
    let delta = WeightVector::null_root(rank);
    for_each_case(&elements(rank, bound), |w, c| {
        let word = w.canonical_reduced_word();
        let other = w.reduced_word(DescentPolicy::Largest);
        for cover in covers_along(&word) {
            let alpha = deletion_coroot(&word, cover.position);
            let t = cover.element.inverse().multiply(w).expect("same rank");
            c.check(
                "cover coroot = transposition coroot",
                transposition_coroot(rank, &t).as_deref() == Some(alpha.coords()),
                || format!("{} ⋖ {w}", cover.element),
            );
            c.check("cover coroot is positive", alpha.is_nonnegative(), || {
                format!("{} ⋖ {w}", cover.element)
            });
        }
        for cover in covers_along(&other) {
            c.check_result(
                "cover coroot does not depend on the reduced word",
                cover_coroot(&cover.element, w)
                    .map(|a| a == deletion_coroot(&other, cover.position)),
                || format!("{} ⋖ {w}", cover.element),
            );
        }
        c.check_result(
            "w(c) = c",
            act_coroot(w, &central).map(|x| x == central),
            || w.to_string(),
        );
        c.check_result(
            "w(δ) = δ",
            act_weight(w, &delta).map(|x| x == delta),
            || w.to_string(),
        );
        for i in 0..n {
            for j in 0..n {
                let result = (|| {
                    let mu = CorootVector::simple(rank, i)?;
                    let lam = WeightVector::fundamental(rank, j)?;
                    Ok(pair(&act_coroot(w, &mu)?, &act_weight(w, &lam)?)? == pair(&mu, &lam)?)
                })();
                c.check_result("pairing invariance", result, || {
                    format!("{w}, α∨_{i}, Λ_{j}")
                });
            }
            if w.in_parabolic(i) {
                let lam = WeightVector::fundamental(rank, i).expect("index in range");
                for cover in w.bruhat_covers_below() {
                    let result = cover_coroot(&cover.element, w)
                        .and_then(|a| pair(&a, &lam))
                        .map(|p| p == 0);
                    c.check_result("parabolic vanishing", result, || {
                        format!("{} ⋖ {w}, j = {i}", cover.element)
                    });
                }
            }
        }
    })
}

fn coroot_sum(rank: Rank) -> Checker {
    let subsets: Vec<Vec<usize>> = (0..rank.k())
        .flat_map(|m| subsets_of_size(rank, m))
        .collect();
    let central = CorootVector::central(rank);
    for_each_case(&subsets, |t, c| {
        let result = (|| {
            let w_t = cyclically_decreasing(rank, t)?;
            let mut total = CorootVector::zero(rank);
            for extra in (0..rank.n()).filter(|x| !t.contains(x)) {
                let mut s = t.clone();
                s.push(extra);
                s.sort_unstable();
                total =
                    total.checked_add(&cover_coroot(&w_t, &cyclically_decreasing(rank, &s)?)?)?;
            }
            Ok(total == central)
        })();
        c.check_result("coroot sum over S ⊃ T is c", result, || {
            format!("T = {t:?}")
        });
    })
}

fn cores(rank: Rank, bound: usize) -> Checker {
    let mut out = for_each_case(&partitions_up_to(rank, bound), |lam, c| {
        let result = (|| {
            let core = lam.to_core()?;
            let w = lam.grassmannian_element()?;
            Ok((
                core.to_bounded() == *lam,
                w.length() == lam.size() && w.is_grassmannian(),
                Core::of_element(&w) == core,
            ))
        })();
        match result {
            Ok((roundtrip, length, action)) => {
                c.check("bounded ∘ core = id", roundtrip, || lam.to_string());
                c.check("l(w_λ) = |λ|", length, || lam.to_string());
                c.check("w_λ ∅ = core(λ)", action, || lam.to_string());
            }
            Err(e) => c.check_result("bijection", Err(e), || lam.to_string()),
        }
    });
    // Breadth-first orbit of ∅ under growing generators, level by level.
    let mut level: BTreeSet<Core> = [Core::empty(rank)].into_iter().collect();
    for m in 0..=bound {
        let expected: Result<BTreeSet<Core>, _> = BoundedPartition::all_of_size(rank, m)
            .iter()
            .map(|lam| lam.to_core())
            .collect();
        out.check_result(
            "orbit of ∅ = image of the bijection",
            expected.map(|e| e == level),
            || format!("size {m}"),
        );
        let mut next = BTreeSet::new();
        for core in &level {
            for i in 0..rank.n() {
                if let Ok(grown) = core.apply_generator(i) {
                    if grown.size() > core.size() {
                        next.insert(grown);
                    }
                }
            }
        }
        level = next;
    }
    for i in 1..rank.n() {
        out.check_result(
            "finite Weyl group fixes ∅",
            Core::empty(rank)
                .apply_generator(i)
                .map(|c| c == Core::empty(rank)),
            || format!("s_{i}"),
        );
    }
    out
}

fn element_of(rank: Rank, terms: &[(i64, &[usize])]) -> kschur_core::Result<NilCoxeterElement> {
    let mut out = NilCoxeterElement::zero(rank);
    for (c, letters) in terms {
        out.add_term(
            AffinePermutation::from_letters(rank, letters)?,
            BigInt::from(*c),
        );
    }
    Ok(out)
}

fn heisenberg(rank: Rank, bound: usize) -> Checker {
    let mut out = for_each_case(&elements(rank, bound), |w, c| {
        let uw = NilCoxeterElement::basis(w.clone());
        for j in 0..rank.n() {
            let result = (|| {
                let du = down(&up(1, &uw)?, j, DownMethod::Combinatorial)?;
                let ud = up(1, &down(&uw, j, DownMethod::Combinatorial)?)?;
                Ok(du.checked_sub(&ud)? == uw)
            })();
            c.check_result("(D U − U D)(u_w) = u_w", result, || {
                format!("{w}, j = {j}")
            });
        }
    });
    if rank.k() == 2 && bound >= 3 {
        let result = (|| {
            let x = element_of(rank, &[(1, &[1, 0])])?;
            let du = down(&up(1, &x)?, 0, DownMethod::Root)?;
            let ud = up(1, &down(&x, 0, DownMethod::Root)?)?;
            let du_ok = du
                == element_of(
                    rank,
                    &[(1, &[0, 1]), (2, &[1, 0]), (1, &[2, 0]), (1, &[2, 1])],
                )?;
            let ud_ok = ud
                == element_of(
                    rank,
                    &[(1, &[1, 0]), (1, &[2, 0]), (1, &[0, 1]), (1, &[2, 1])],
                )?;
            Ok(du_ok && ud_ok && du.checked_sub(&ud)? == x)
        })();
        out.check_result("displayed witness at u_1u_0", result, || {
            "k = 2, j = 0".into()
        });
    }
    out
}

fn bracket(rank: Rank, bound: usize) -> Checker {
    let mut out = Checker::default();
    for i in 1..=rank.k() as i64 {
        for j in 0..rank.n() {
            let result = (|| {
                Ok(down(&h_gen(rank, i)?, j, DownMethod::Combinatorial)? == h_gen(rank, i - 1)?)
            })();
            out.check_result("D(h_i) = h_{i−1}", result, || format!("i = {i}, j = {j}"));
        }
    }
    out.absorb(for_each_case(&elements(rank, bound), |w, c| {
        let uw = NilCoxeterElement::basis(w.clone());
        for i in 1..=rank.k() as i64 {
            for j in 0..rank.n() {
                let result = (|| {
                    let hi = h_gen(rank, i)?;
                    let lhs = down(&hi.multiply(&uw)?, j, DownMethod::Combinatorial)?;
                    let rhs = h_gen(rank, i - 1)?
                        .multiply(&uw)?
                        .checked_add(&hi.multiply(&down(&uw, j, DownMethod::Combinatorial)?)?)?;
                    Ok(lhs == rhs)
                })();
                c.check_result("D(h_i u_w) = h_{i−1} u_w + h_i D(u_w)", result, || {
                    format!("i = {i}, w = {w}, j = {j}")
                });
            }
        }
    }));
    out
}

fn derivation(rank: Rank, bound: usize) -> Checker {
    for_each_case(&partitions_up_to(rank, bound), |lam, c| {
        let expected = (|| {
            let rows = lam.rows();
            let mut sum = NilCoxeterElement::zero(rank);
            for t in 0..rows.len() {
                let mut lowered = rows.to_vec();
                lowered[t] -= 1;
                sum = sum.checked_add(&h_monomial(rank, &lowered)?)?;
            }
            Ok::<_, kschur_core::Error>((h_product(lam)?, sum))
        })();
        let (h, expected) = match expected {
            Ok(pair) => pair,
            Err(e) => return c.check_result("derivation", Err(e), || lam.to_string()),
        };
        let mut images = Vec::new();
        for j in 0..rank.n() {
            let image = down(&h, j, DownMethod::Combinatorial);
            c.check_result(
                "D(h_λ) = Σ_t h_{λ_1}⋯h_{λ_t − 1}⋯h_{λ_m}",
                image.as_ref().map(|d| *d == expected).map_err(Clone::clone),
                || format!("{lam}, j = {j}"),
            );
            images.extend(image.ok());
        }
        c.check(
            "D_{Λ_j} agree on h_λ for all j",
            images.windows(2).all(|p| p[0] == p[1]),
            || lam.to_string(),
        );
    })
}

fn coset(rank: Rank, bound: usize) -> Checker {
    for_each_case(&elements(rank, bound), |w, c| {
        for j in 0..rank.n() {
            let result = (|| {
                let (min, par) = w.coset_factorize(j)?;
                let lhs = down_basis(w, j, DownMethod::Root)?;
                let rhs = down_basis(&min, j, DownMethod::Root)?
                    .multiply(&NilCoxeterElement::basis(par))?;
                Ok(lhs == rhs)
            })();
            c.check_result("D(u_{wv}) = D(u_w) u_v", result, || format!("{w}, j = {j}"));
            if !w.is_min_coset_rep(j) {
                continue;
            }
            let result = (|| {
                let counts = grassmannian_cover_counts(w, j)?;
                for cover in w.bruhat_covers_below() {
                    let expected = cover_coefficient(&cover.element, w, j)? as usize;
                    let got = counts
                        .iter()
                        .find(|(z, _)| *z == cover.element)
                        .map_or(0, |(_, n)| *n);
                    if got != expected {
                        return Ok(false);
                    }
                }
                Ok(true)
            })();
            c.check_result("addable-cell count = coroot pairing", result, || {
                format!("{w}, j = {j}")
            });
        }
    })
}

fn methods(rank: Rank, bound: usize) -> Checker {
    for_each_case(&elements(rank, bound), |w, c| {
        for j in 0..rank.n() {
            let result = (|| {
                let root = down_basis(w, j, DownMethod::Root)?;
                let comb = down_basis(w, j, DownMethod::Combinatorial)?;
                let second = down_root_along(&w.reduced_word(DescentPolicy::Largest), j);
                Ok(root == comb && root == second)
            })();
            c.check_result("root = combinatorial down operator", result, || {
                format!("{w}, j = {j}")
            });
        }
    })
}

fn rectangles(rank: Rank) -> Vec<(usize, usize)> {
    (1..=rank.k()).map(|c| (c, rank.n() - c)).collect()
}

const RECTANGLE_33_K4: [&[usize]; 10] = [
    &[1, 0, 4, 2, 1, 0],
    &[3, 1, 0, 4, 2, 1],
    &[4, 3, 1, 0, 4, 2],
    &[2, 3, 1, 0, 2, 1],
    &[2, 4, 3, 1, 0, 2],
    &[0, 4, 3, 1, 0, 4],
    &[3, 2, 4, 3, 1, 2],
    &[2, 0, 4, 3, 1, 0],
    &[3, 2, 0, 4, 3, 1],
    &[4, 3, 2, 0, 4, 3],
];

const NEAR_RECTANGLE_32_K4: [&[usize]; 30] = [
    &[1, 0, 4, 2, 1],
    &[4, 1, 0, 4, 2],
    &[3, 1, 0, 4, 2],
    &[2, 1, 0, 2, 1],
    &[3, 1, 0, 2, 1],
    &[2, 4, 1, 0, 2],
    &[2, 3, 1, 0, 2],
    &[4, 3, 1, 0, 2],
    &[4, 3, 1, 0, 4],
    &[0, 3, 1, 0, 4],
    &[0, 4, 1, 0, 4],
    &[2, 4, 3, 1, 2],
    &[3, 4, 3, 1, 2],
    &[3, 2, 3, 1, 2],
    &[3, 2, 4, 1, 2],
    &[0, 4, 3, 1, 0],
    &[2, 4, 3, 1, 0],
    &[2, 0, 3, 1, 0],
    &[2, 0, 4, 1, 0],
    &[2, 0, 4, 3, 1],
    &[3, 0, 4, 3, 1],
    &[3, 2, 4, 3, 1],
    &[3, 2, 0, 3, 1],
    &[3, 2, 0, 4, 1],
    &[3, 2, 0, 4, 3],
    &[4, 2, 0, 4, 3],
    &[4, 3, 0, 4, 3],
    &[4, 3, 2, 4, 3],
    &[4, 3, 2, 0, 3],
    &[4, 3, 2, 0, 4],
];

fn sum_of_words(rank: Rank, words: &[&[usize]]) -> kschur_core::Result<NilCoxeterElement> {
    let mut out = NilCoxeterElement::zero(rank);
    for w in words {
        out.add_term(AffinePermutation::from_letters(rank, w)?, BigInt::one());
    }
    Ok(out)
}

fn expansions(rank: Rank, bound: usize) -> Checker {
    let memo = SharedCache::new();
    let mut out = for_each_case(&rectangles(rank), |&(c, r), ch| {
        let shape = || format!("({c}^{r})");
        let result = (|| {
            let rect = rectangle_expansion(rank, c, r)?;
            let near = near_rectangle_expansion(rank, c, r)?;
            let rect_shape = BoundedPartition::new(rank, vec![c; r])?;
            let mut near_rows = vec![c; r - 1];
            near_rows.push(c - 1);
            let near_shape = BoundedPartition::new(rank, near_rows)?;
            let downs = (0..rank.n())
                .map(|j| down(&rect, j, DownMethod::Combinatorial))
                .collect::<kschur_core::Result<Vec<_>>>()?;
            let free = near.terms().all(|(_, coeff)| coeff.is_one());
            Ok((
                rect.clone() == kschur_solve(&rect_shape, &memo)?.element,
                near.clone() == kschur_solve(&near_shape, &memo)?.element,
                free,
                rect.len() == binomial(rank.n(), c)
                    && near.len()
                        == partitions_in_box(c, r)
                            .iter()
                            .map(|l| l.iter().sum::<usize>())
                            .sum::<usize>(),
                downs.iter().all(|d| *d == near),
            ))
        })();
        match result {
            Ok((rect_ok, near_ok, free, counts, down_ok)) => {
                ch.check("rectangle closed form = solver", rect_ok, shape);
                ch.check("near-rectangle closed form = solver", near_ok, shape);
                ch.check("near-rectangle coefficients are 1", free, shape);
                ch.check("closed-form term counts", counts, shape);
                ch.check("D_{Λ_j}(𝔰_R) = 𝔰_S for every j", down_ok, shape);
            }
            Err(e) => ch.check_result("closed forms", Err(e), shape),
        }
    });
    out.absorb(for_each_case(&partitions_up_to(rank, bound), |lam, c| {
        let result = (|| {
            let s = kschur_solve(lam, &memo)?;
            let expected = NilCoxeterElement::basis(lam.grassmannian_element()?);
            Ok(s.element.grassmannian_part() == expected)
        })();
        c.check_result("Grassmannian part of 𝔰_λ is u_{w_λ}", result, || {
            lam.to_string()
        });
    }));
    if rank.k() == 4 {
        let result = (|| {
            Ok(
                rectangle_expansion(rank, 3, 2)? == sum_of_words(rank, &RECTANGLE_33_K4)?
                    && near_rectangle_expansion(rank, 3, 2)?
                        == sum_of_words(rank, &NEAR_RECTANGLE_32_K4)?,
            )
        })();
        out.check_result("displayed 10-term and 30-term expansions", result, || {
            "k = 4, R = (3,3)".into()
        });
    }
    out
}

fn binomial(n: usize, m: usize) -> usize {
    (0..m).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

fn klr(rank: Rank, bound: usize) -> Checker {
    let memo = SharedCache::new();
    let mut cases = Vec::new();
    for (c, r) in rectangles(rank) {
        let mut near = vec![c; r - 1];
        near.push(c - 1);
        for rows in [vec![c; r], near] {
            let lam = BoundedPartition::new(rank, rows).expect("k-bounded");
            debug_assert!(as_k_rectangle(&lam).is_some() || as_near_rectangle(&lam).is_some());
            for m in 0..=bound.saturating_sub(lam.size()) {
                if lam.size() + m > bound {
                    continue;
                }
                for mu in BoundedPartition::all_of_size(rank, m) {
                    cases.push((lam.clone(), mu));
                }
            }
        }
    }
    for_each_case(&cases, |(lam, mu), c| {
        let table = match klr_product_table(lam, mu, &memo) {
            Ok(t) => t,
            Err(e) => {
                return c.check_result("k-LR product table", Err(e), || format!("{lam} · {mu}"))
            }
        };
        for nu in BoundedPartition::all_of_size(rank, lam.size() + mu.size()) {
            let expected = table.get(&nu).cloned().unwrap_or_default();
            let got = klr_coefficient(lam, mu, &nu, ExpansionMethod::Auto, &memo);
            c.check_result(
                "k-LR coefficient = product coefficient",
                got.map(|g| g == expected),
                || format!("{lam} · {mu} → {nu}"),
            );
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_small() {
        let rank = Rank::new(2).unwrap();
        for report in run_all(rank, 4) {
            assert!(report.passed(), "{report:?}");
            assert!(report.checks_run > 0, "{}", report.suite);
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", Rank::new(2).unwrap(), 3).is_none());
    }

    #[test]
    fn displayed_expansions_at_k4() {
        let report = run_suite("expansions", Rank::new(4).unwrap(), 3).unwrap();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn checker_records_errors_as_failures() {
        let mut c = Checker::default();
        c.check("x", true, String::new);
        c.check_result("y", Err(kschur_core::Error::NotACover), || "w".into());
        assert_eq!(c.checks, 2);
        assert_eq!(c.failures.len(), 1);
        assert!(c.failures[0].witness.starts_with("w: "));
    }
}
