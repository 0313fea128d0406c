//! `(k+1)`-cores, k-bounded partitions and the level-zero action of `W`.
//!
//! Cells are 1-indexed `(row, col)` in matrix convention; the residue of
//! `(i, j)` is `(j − i) mod (k+1)`, so `(1, 1)` has residue 0.

use alloc::vec::Vec;
use core::fmt;

use crate::affine_weyl::{AffinePermutation, Rank, Word};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1);
        Cell { row, col }
    }
}

pub fn residue(rank: Rank, cell: Cell) -> usize {
    rank.wrap(cell.col as i64 - cell.row as i64)
}

fn strip_zeros(mut rows: Vec<usize>) -> Vec<usize> {
    while rows.last() == Some(&0) {
        rows.pop();
    }
    rows
}

fn check_partition(rows: Vec<usize>) -> Result<Vec<usize>> {
    let rows = strip_zeros(rows);
    if rows.windows(2).any(|p| p[0] < p[1]) || rows.contains(&0) {
        return Err(Error::NotAPartition(rows));
    }
    Ok(rows)
}

fn column_length(rows: &[usize], col: usize) -> usize {
    rows.iter().take_while(|&&len| len >= col).count()
}

/// Hook length of a cell inside the shape.
pub(crate) fn hook_length(rows: &[usize], cell: Cell) -> usize {
    let arm = rows[cell.row - 1] - cell.col;
    let leg = column_length(rows, cell.col) - cell.row;
    arm + leg + 1
}

fn cells(rows: &[usize]) -> impl Iterator<Item = Cell> + '_ {
    rows.iter()
        .enumerate()
        .flat_map(|(i, &len)| (1..=len).map(move |j| Cell::new(i + 1, j)))
}

/// A partition is a `p`-core iff no cell has hook length exactly `p`.
fn is_core(rows: &[usize], p: usize) -> bool {
    cells(rows).all(|c| hook_length(rows, c) != p)
}

fn addable(rows: &[usize]) -> impl Iterator<Item = Cell> + '_ {
    let m = rows.len();
    (0..=m).filter_map(move |i| {
        let len = if i < m { rows[i] } else { 0 };
        (i == 0 || rows[i - 1] > len).then(|| Cell::new(i + 1, len + 1))
    })
}

fn removable(rows: &[usize]) -> impl Iterator<Item = Cell> + '_ {
    let m = rows.len();
    (0..m).filter_map(move |i| {
        let next = if i + 1 < m { rows[i + 1] } else { 0 };
        (rows[i] > next).then(|| Cell::new(i + 1, rows[i]))
    })
}

/// A `(k+1)`-core.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Core {
    rank: Rank,
    rows: Vec<usize>,
}

impl Core {
    pub fn new(rank: Rank, rows: Vec<usize>) -> Result<Self> {
        let rows = check_partition(rows)?;
        if !is_core(&rows, rank.n()) {
            return Err(Error::NotACore {
                parts: rows,
                p: rank.n(),
            });
        }
        Ok(Core { rank, rows })
    }

    pub fn empty(rank: Rank) -> Self {
        Core {
            rank,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn hook_length(&self, cell: Cell) -> usize {
        hook_length(&self.rows, cell)
    }

    /// Addable cells of residue `r`, top to bottom.
    pub fn addable_cells(&self, r: usize) -> Vec<Cell> {
        addable(&self.rows)
            .filter(|&c| residue(self.rank, c) == r)
            .collect()
    }

    /// Removable cells of residue `r`, top to bottom.
    pub fn removable_cells(&self, r: usize) -> Vec<Cell> {
        removable(&self.rows)
            .filter(|&c| residue(self.rank, c) == r)
            .collect()
    }

    /// `s_i` acting on the core: add every addable `i`-cell if there is one,
    /// otherwise remove every removable `i`-cell, otherwise do nothing.
    pub fn apply_generator(&self, i: usize) -> Result<Core> {
        self.rank.check_index(i)?;
        let add = self.addable_cells(i);
        let remove = self.removable_cells(i);
        debug_assert!(add.is_empty() || remove.is_empty());
        let mut rows = self.rows.clone();
        if !add.is_empty() {
            for c in add {
                if c.row > rows.len() {
                    rows.push(1);
                } else {
                    rows[c.row - 1] += 1;
                }
            }
        } else {
            for c in remove {
                rows[c.row - 1] -= 1;
            }
            rows = strip_zeros(rows);
        }
        debug_assert!(is_core(&rows, self.rank.n()));
        Ok(Core {
            rank: self.rank,
            rows,
        })
    }

    /// Applies `s_{i_1} ... s_{i_m}`: the rightmost letter acts first.
    pub fn apply_word(&self, word: &Word) -> Result<Core> {
        self.rank.ensure_same(word.rank())?;
        let mut core = self.clone();
        for &i in word.letters().iter().rev() {
            core = core.apply_generator(i)?;
        }
        Ok(core)
    }

    /// `w · ∅`.
    pub fn of_element(w: &AffinePermutation) -> Core {
        Core::empty(w.rank())
            .apply_word(&w.canonical_reduced_word())
            .expect("letters of a canonical word are in range")
    }

    /// The k-bounded partition `𝔭(μ)`: row `i` counts the cells of row `i`
    /// whose hook length is at most `k`.
    pub fn to_bounded(&self) -> BoundedPartition {
        let k = self.rank.k();
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, &len)| {
                (1..=len)
                    .filter(|&j| hook_length(&self.rows, Cell::new(i + 1, j)) <= k)
                    .count()
            })
            .collect();
        BoundedPartition {
            rank: self.rank,
            rows: strip_zeros(rows),
        }
    }
}

impl fmt::Display for Core {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows)
    }
}

fn write_rows(f: &mut fmt::Formatter<'_>, rows: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (t, r) in rows.iter().enumerate() {
        if t > 0 {
            write!(f, ",")?;
        }
        write!(f, "{r}")?;
    }
    write!(f, ")")
}

/// A partition whose parts are all at most `k`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoundedPartition {
    rank: Rank,
    rows: Vec<usize>,
}

impl BoundedPartition {
    pub fn new(rank: Rank, rows: Vec<usize>) -> Result<Self> {
        let rows = check_partition(rows)?;
        if rows.first().is_some_and(|&p| p > rank.k()) {
            return Err(Error::NotBounded {
                parts: rows,
                k: rank.k(),
            });
        }
        Ok(BoundedPartition { rank, rows })
    }

    pub fn empty(rank: Rank) -> Self {
        BoundedPartition {
            rank,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// All k-bounded partitions of `n`, parts in reverse lexicographic order
    /// (`(k, ...)` first, `(1, ..., 1)` last).
    pub fn all_of_size(rank: Rank, n: usize) -> Vec<BoundedPartition> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rest == 0 {
                out.push(cur.clone());
                return;
            }
            for part in (1..=max.min(rest)).rev() {
                cur.push(part);
                rec(rest - part, part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, rank.k(), &mut Vec::new(), &mut out);
        out.into_iter()
            .map(|rows| BoundedPartition { rank, rows })
            .collect()
    }

    /// The `(k+1)`-core `𝔠(λ)`.
    ///
    /// Built bottom-up: on top of the core `ν` of the lower rows, place a row
    /// of length `s + λ_i` for the smallest `s ≥ 0` giving a core whose new
    /// top row has exactly `λ_i` cells of hook length at most `k`.
    pub fn to_core(&self) -> Result<Core> {
        let k = self.rank.k();
        let p = self.rank.n();
        let mut below: Vec<usize> = Vec::new();
        for &part in self.rows.iter().rev() {
            let top_below = below.first().copied().unwrap_or(0);
            let mut found = None;
            for shift in 0..=top_below + p {
                let len = part + shift;
                if len < top_below {
                    continue;
                }
                let mut rows = Vec::with_capacity(below.len() + 1);
                rows.push(len);
                rows.extend_from_slice(&below);
                let short_hooks = (1..=len)
                    .filter(|&j| hook_length(&rows, Cell::new(1, j)) <= k)
                    .count();
                if short_hooks == part && is_core(&rows, p) {
                    found = Some(rows);
                    break;
                }
            }
            below = found.ok_or_else(|| {
                Error::Internal(alloc::format!("no core row found for {:?}", self.rows))
            })?;
        }
        let core = Core {
            rank: self.rank,
            rows: below,
        };
        if core.to_bounded() != *self {
            return Err(Error::Internal(alloc::format!(
                "core {core} does not map back to {self}"
            )));
        }
        Ok(core)
    }

    /// The affine Grassmannian element `w_λ ∈ W^0` with `w_λ ∅ = 𝔠(λ)`.
    ///
    /// Peels the core: repeatedly apply the smallest `s_r` that strictly
    /// shrinks it. If the peel sequence is `r_1, ..., r_m` then
    /// `𝔠(λ) = s_{r_1} ... s_{r_m} ∅`.
    pub fn grassmannian_element(&self) -> Result<AffinePermutation> {
        let rank = self.rank;
        let mut core = self.to_core()?;
        let mut letters = Vec::with_capacity(self.size());
        while !core.rows.is_empty() {
            let r = (0..rank.n())
                .find(|&r| core.addable_cells(r).is_empty() && !core.removable_cells(r).is_empty())
                .ok_or_else(|| Error::Internal(alloc::format!("core {core} cannot be peeled")))?;
            core = core.apply_generator(r)?;
            letters.push(r);
        }
        let w = AffinePermutation::from_letters(rank, &letters)?;
        if w.length() != self.size() || !w.is_grassmannian() {
            return Err(Error::Internal(alloc::format!(
                "peeling {self} gave {w}, which is not a Grassmannian element of length {}",
                self.size()
            )));
        }
        Ok(w)
    }
}

impl fmt::Display for BoundedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows)
    }
}

/// `𝔭(μ)` as a free function.
pub fn bounded_from_core(core: &Core) -> BoundedPartition {
    core.to_bounded()
}

/// `𝔠(λ)` as a free function.
pub fn core_from_bounded(lambda: &BoundedPartition) -> Result<Core> {
    lambda.to_core()
}

/// `w_λ` as a free function.
pub fn grassmannian_from_bounded(lambda: &BoundedPartition) -> Result<AffinePermutation> {
    lambda.grassmannian_element()
}

/// Applies a word to a core, rightmost letter first.
pub fn apply_word(core: &Core, word: &Word) -> Result<Core> {
    core.apply_word(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn r(k: usize) -> Rank {
        Rank::new(k).unwrap()
    }

    fn core(k: usize, rows: &[usize]) -> Core {
        Core::new(r(k), rows.to_vec()).unwrap()
    }

    fn bp(k: usize, rows: &[usize]) -> BoundedPartition {
        BoundedPartition::new(r(k), rows.to_vec()).unwrap()
    }

    fn word(k: usize, letters: &[usize]) -> Word {
        Word::new(r(k), letters.to_vec()).unwrap()
    }

    #[test]
    fn residue_examples() {
        assert_eq!(residue(r(3), Cell::new(1, 1)), 0);
        assert_eq!(residue(r(3), Cell::new(2, 1)), 3);
        assert_eq!(residue(r(4), Cell::new(3, 1)), 3);
    }

    #[test]
    fn constructors_validate() {
        assert!(matches!(
            Core::new(r(3), vec![1, 2]),
            Err(Error::NotAPartition(_))
        ));
        assert!(matches!(
            Core::new(r(3), vec![4]),
            Err(Error::NotACore { .. })
        ));
        assert!(matches!(
            BoundedPartition::new(r(3), vec![4, 1]),
            Err(Error::NotBounded { .. })
        ));
        assert_eq!(bp(3, &[2, 1, 0]).rows(), &[2, 1]);
    }

    #[test]
    fn addable_examples() {
        assert_eq!(Core::empty(r(3)).addable_cells(0), vec![Cell::new(1, 1)]);
        assert_eq!(
            core(3, &[2, 1, 1, 1]).addable_cells(0),
            vec![Cell::new(2, 2), Cell::new(5, 1)]
        );
        assert!(core(3, &[1]).addable_cells(2).is_empty());
    }

    #[test]
    fn action_examples() {
        let lam = core(3, &[5, 2, 1]);
        assert_eq!(
            lam.apply_word(&word(3, &[1])).unwrap().rows(),
            &[6, 3, 1, 1]
        );
        assert_eq!(lam.apply_word(&word(3, &[0])).unwrap().rows(), &[4, 1, 1]);
        assert_eq!(
            Core::empty(r(3))
                .apply_word(&word(3, &[1, 2, 3, 0]))
                .unwrap()
                .rows(),
            &[2, 1, 1, 1]
        );
        let got = core(4, &[2, 1])
            .apply_word(&word(4, &[2, 3, 1, 0, 2]))
            .unwrap();
        assert_eq!(got.rows(), &[4, 4, 1, 1]);
        assert_eq!(got.to_bounded().rows(), &[3, 3, 1, 1]);
    }

    #[test]
    fn generator_with_nothing_to_do_fixes_the_core() {
        let c = core(3, &[1]);
        assert!(c.addable_cells(2).is_empty() && c.removable_cells(2).is_empty());
        assert_eq!(c.apply_generator(2).unwrap(), c);
    }

    #[test]
    fn bijection_examples() {
        assert_eq!(core(3, &[1]).to_bounded().rows(), &[1]);
        assert_eq!(core(3, &[5, 2, 1]).to_bounded().rows(), &[3, 2, 1]);
        // (1,1) has hook 5, so only the arm cell of row 1 survives.
        assert_eq!(core(3, &[2, 1, 1, 1]).to_bounded().rows(), &[1, 1, 1, 1]);
        assert_eq!(
            bp(3, &[1, 1, 1, 1]).to_core().unwrap().rows(),
            &[2, 1, 1, 1]
        );
        assert_eq!(bp(3, &[1]).to_core().unwrap().rows(), &[1]);
        assert_eq!(bp(3, &[3, 2, 1]).to_core().unwrap().rows(), &[5, 2, 1]);
        assert_eq!(bp(4, &[3, 3]).to_core().unwrap().rows(), &[3, 3]);
    }

    #[test]
    fn grassmannian_examples() {
        assert!(BoundedPartition::empty(r(3))
            .grassmannian_element()
            .unwrap()
            .is_identity());
        assert_eq!(
            bp(3, &[1]).grassmannian_element().unwrap(),
            AffinePermutation::from_letters(r(3), &[0]).unwrap()
        );
        assert_eq!(
            bp(4, &[3, 3]).grassmannian_element().unwrap(),
            AffinePermutation::from_letters(r(4), &[1, 0, 4, 2, 1, 0]).unwrap()
        );
    }

    #[test]
    fn bounded_partition_counts() {
        // partitions of 6 with parts <= 3
        assert_eq!(BoundedPartition::all_of_size(r(3), 6).len(), 7);
        assert_eq!(
            BoundedPartition::all_of_size(r(2), 0),
            vec![BoundedPartition::empty(r(2))]
        );
        let all = BoundedPartition::all_of_size(r(2), 3);
        let rows: Vec<&[usize]> = all.iter().map(|p| p.rows()).collect();
        assert_eq!(rows, vec![&[2, 1][..], &[1, 1, 1][..]]);
    }
}
