//! Non-commutative k-Schur functions `𝔰_λ` and k-Littlewood–Richardson
//! coefficients.
//!
//! `𝔰_λ` is the unique element of the affine Fomin–Stanley subalgebra whose
//! Grassmannian support is exactly `u_{w_λ}` with coefficient 1. It is
//! obtained here three ways:
//!
//! * [`kschur_solve`]: exact rational solve in the `h_μ` basis;
//! * [`rectangle_expansion`]: reading words of `(R ∪ λ)/λ` for a k-rectangle `R`;
//! * [`near_rectangle_expansion`]: the same diagrams with one cell of the
//!   lower copy of `λ` deleted, giving `𝔰_{(c^{r-1}, c-1)}`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::affine_weyl::{AffinePermutation, Rank, Word};
use crate::cores::{residue, BoundedPartition, Cell};
use crate::error::{Error, Result};
use crate::nilcoxeter::{h_monomial_cached, HProductCache, NilCoxeterElement};

/// A finite set of cells, read for its residue word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    rank: Rank,
    cells: BTreeSet<Cell>,
}

impl Diagram {
    pub fn new(rank: Rank, cells: impl IntoIterator<Item = Cell>) -> Self {
        Diagram {
            rank,
            cells: cells.into_iter().collect(),
        }
    }

    /// All cells of a partition shape.
    pub fn of_shape(rank: Rank, rows: &[usize]) -> Self {
        let cells = rows
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Cell::new(i + 1, j)));
        Self::new(rank, cells)
    }

    /// `(R ∪ λ)/λ` for `R = (c^r)`: the stacked shape `(c, ..., c, λ_1, ..., λ_m)`
    /// with the top-left copy of `λ` removed.
    pub fn stacked_skew(rank: Rank, c: usize, r: usize, lambda: &[usize]) -> Self {
        let mut rows = alloc::vec![c; r];
        rows.extend_from_slice(lambda);
        let cells = Self::of_shape(rank, &rows)
            .cells
            .into_iter()
            .filter(|cell| !(cell.row <= lambda.len() && cell.col <= lambda[cell.row - 1]));
        Self::new(rank, cells)
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn cells(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn remove(&mut self, cell: Cell) -> bool {
        self.cells.remove(&cell)
    }

    /// Residues read right to left within a row, rows bottom to top.
    pub fn reading_word(&self) -> Word {
        let letters = self
            .cells
            .iter()
            .rev()
            .map(|&cell| residue(self.rank, cell))
            .collect();
        Word::new(self.rank, letters).expect("residues are in range")
    }
}

/// Partitions contained in the `c × r` box (`r` rows of length at most `c`),
/// generated in lexicographic order of their parts.
pub fn partitions_in_box(c: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(rows_left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        if rows_left == 0 {
            return;
        }
        for part in 1..=max {
            cur.push(part);
            rec(rows_left - 1, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(r, c, &mut Vec::new(), &mut out);
    out
}

fn check_k_rectangle(rank: Rank, c: usize, r: usize) -> Result<()> {
    if c == 0 || r == 0 || c + r != rank.n() {
        return Err(Error::NotAKRectangle { c, r, k: rank.k() });
    }
    Ok(())
}

fn reduced_monomial(word: &Word) -> Result<AffinePermutation> {
    let w = AffinePermutation::from_word(word);
    if w.length() != word.len() {
        return Err(Error::Internal(format!(
            "reading word {word} is not reduced"
        )));
    }
    Ok(w)
}

/// `𝔰_R = Σ_{λ ⊆ R} u_{word((R ∪ λ)/λ)}` for the k-rectangle `R = (c^r)`.
pub fn rectangle_expansion(rank: Rank, c: usize, r: usize) -> Result<NilCoxeterElement> {
    check_k_rectangle(rank, c, r)?;
    let mut out = NilCoxeterElement::zero(rank);
    for lambda in partitions_in_box(c, r) {
        let word = Diagram::stacked_skew(rank, c, r, &lambda).reading_word();
        out.add_term(reduced_monomial(&word)?, BigInt::one());
    }
    Ok(out)
}

/// `word(R, λ, x)`: the reading word of `(R ∪ λ)/λ` with the lower copy of
/// the cell `x ∈ λ` (at `(r + x.row, x.col)`) deleted.
pub fn near_rectangle_word(
    rank: Rank,
    c: usize,
    r: usize,
    lambda: &[usize],
    x: Cell,
) -> Result<Word> {
    check_k_rectangle(rank, c, r)?;
    if x.row == 0 || x.row > lambda.len() || x.col == 0 || x.col > lambda[x.row - 1] {
        return Err(Error::Internal(format!("cell {x:?} is not in {lambda:?}")));
    }
    let mut diagram = Diagram::stacked_skew(rank, c, r, lambda);
    let removed = diagram.remove(Cell::new(r + x.row, x.col));
    debug_assert!(removed);
    Ok(diagram.reading_word())
}

/// `𝔰_{(c^{r-1}, c-1)} = Σ_{λ ⊆ R} Σ_{x ∈ λ} u_{word(R, λ, x)}`.
pub fn near_rectangle_expansion(rank: Rank, c: usize, r: usize) -> Result<NilCoxeterElement> {
    check_k_rectangle(rank, c, r)?;
    let mut out = NilCoxeterElement::zero(rank);
    for lambda in partitions_in_box(c, r) {
        for (i, &len) in lambda.iter().enumerate() {
            for j in 1..=len {
                let word = near_rectangle_word(rank, c, r, &lambda, Cell::new(i + 1, j))?;
                out.add_term(reduced_monomial(&word)?, BigInt::one());
            }
        }
    }
    Ok(out)
}

/// `(c, r)` when `λ = (c^r)` is a k-rectangle.
pub fn as_k_rectangle(lambda: &BoundedPartition) -> Option<(usize, usize)> {
    let rows = lambda.rows();
    let c = *rows.first()?;
    let r = rows.len();
    (c + r == lambda.rank().n() && rows.iter().all(|&p| p == c)).then_some((c, r))
}

/// `(c, r)` when `λ = (c^{r-1}, c-1)` for a k-rectangle `(c^r)`.
pub fn as_near_rectangle(lambda: &BoundedPartition) -> Option<(usize, usize)> {
    let rank = lambda.rank();
    (1..=rank.k()).map(|c| (c, rank.n() - c)).find(|&(c, r)| {
        let mut shape = alloc::vec![c; r - 1];
        if c > 1 {
            shape.push(c - 1);
        }
        shape == lambda.rows()
    })
}

/// Coordinates of an element of `𝔹` in the basis `{h_μ}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HExpansion {
    rank: Rank,
    degree: usize,
    coeffs: BTreeMap<BoundedPartition, BigInt>,
}

impl HExpansion {
    pub fn new(
        rank: Rank,
        degree: usize,
        coeffs: BTreeMap<BoundedPartition, BigInt>,
    ) -> Result<Self> {
        for mu in coeffs.keys() {
            rank.ensure_same(mu.rank())?;
            if mu.size() != degree {
                return Err(Error::Internal(format!(
                    "{mu} has size {}, expected {degree}",
                    mu.size()
                )));
            }
        }
        let coeffs = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(HExpansion {
            rank,
            degree,
            coeffs,
        })
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficient(&self, mu: &BoundedPartition) -> BigInt {
        self.coeffs.get(mu).cloned().unwrap_or_default()
    }

    /// Nonzero coefficients keyed by partition.
    pub fn coeffs(&self) -> &BTreeMap<BoundedPartition, BigInt> {
        &self.coeffs
    }

    /// `Σ a_μ h_μ` evaluated in `𝔸`.
    pub fn to_element(&self, cache: &dyn HProductCache) -> Result<NilCoxeterElement> {
        let mut out = NilCoxeterElement::zero(self.rank);
        for (mu, a) in &self.coeffs {
            let h = h_monomial_cached(self.rank, mu.rows(), cache)?;
            out = out.checked_add(&h.scale(a))?;
        }
        Ok(out)
    }
}

/// `𝔰_λ` together with its `h`-coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KSchur {
    pub lambda: BoundedPartition,
    pub h_expansion: HExpansion,
    pub element: NilCoxeterElement,
}

/// The Grassmannian-support matrix in degree `n`: row `μ` holds the
/// coefficients of `u_{w_ν}` in `h_μ`, columns indexed by `ν`.
struct GrassmannianSystem {
    partitions: Vec<BoundedPartition>,
    grassmannians: Vec<AffinePermutation>,
    products: Vec<Arc<NilCoxeterElement>>,
    matrix: Vec<Vec<BigInt>>,
}

impl GrassmannianSystem {
    fn build(rank: Rank, n: usize, cache: &dyn HProductCache) -> Result<Self> {
        let partitions = BoundedPartition::all_of_size(rank, n);
        let grassmannians = partitions
            .iter()
            .map(BoundedPartition::grassmannian_element)
            .collect::<Result<Vec<_>>>()?;
        let products = partitions
            .iter()
            .map(|mu| h_monomial_cached(rank, mu.rows(), cache))
            .collect::<Result<Vec<_>>>()?;
        let matrix = products
            .iter()
            .map(|h| grassmannians.iter().map(|w| h.coefficient(w)).collect())
            .collect();
        Ok(GrassmannianSystem {
            partitions,
            grassmannians,
            products,
            matrix,
        })
    }

    /// Solves `a · M = target` exactly; `None` when `M` is singular.
    fn solve(&self, target: &[BigInt]) -> Option<Vec<BigRational>> {
        let size = self.partitions.len();
        // Augmented transpose: row ν is (M[·][ν] | target[ν]).
        let mut rows: Vec<Vec<BigRational>> = (0..size)
            .map(|nu| {
                let mut row: Vec<BigRational> = (0..size)
                    .map(|mu| BigRational::from_integer(self.matrix[mu][nu].clone()))
                    .collect();
                row.push(BigRational::from_integer(target[nu].clone()));
                row
            })
            .collect();
        for col in 0..size {
            let pivot = (col..size).find(|&i| !rows[i][col].is_zero())?;
            rows.swap(col, pivot);
            let inv = rows[col][col].recip();
            for entry in rows[col].iter_mut() {
                *entry *= &inv;
            }
            let pivot_row = rows[col].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == col || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (entry, p) in row.iter_mut().zip(&pivot_row) {
                    *entry -= &factor * p;
                }
            }
        }
        Some(rows.into_iter().map(|mut row| row.pop().unwrap()).collect())
    }

    fn combine(
        &self,
        rank: Rank,
        n: usize,
        coeffs: &[BigInt],
    ) -> Result<(HExpansion, NilCoxeterElement)> {
        let mut element = NilCoxeterElement::zero(rank);
        let mut map = BTreeMap::new();
        for ((mu, h), a) in self.partitions.iter().zip(&self.products).zip(coeffs) {
            if a.is_zero() {
                continue;
            }
            element = element.checked_add(&h.scale(a))?;
            map.insert(mu.clone(), a.clone());
        }
        Ok((HExpansion::new(rank, n, map)?, element))
    }
}

fn to_integers(values: Vec<BigRational>, what: &dyn core::fmt::Display) -> Result<Vec<BigInt>> {
    values
        .into_iter()
        .map(|q| {
            if q.is_integer() {
                Ok(q.to_integer())
            } else {
                Err(Error::Internal(format!(
                    "non-integral h-coefficient {q} for {what}"
                )))
            }
        })
        .collect()
}

/// `𝔰_λ` from its defining property, by exact elimination.
///
/// Unitriangularity is not assumed. The solve is a full rational
/// elimination; integrality and `a_λ = 1` are checked afterwards, as is
/// the Grassmannian support.
pub fn kschur_solve(lambda: &BoundedPartition, cache: &dyn HProductCache) -> Result<KSchur> {
    let rank = lambda.rank();
    let n = lambda.size();
    let system = GrassmannianSystem::build(rank, n, cache)?;
    let target: Vec<BigInt> = system
        .partitions
        .iter()
        .map(|nu| {
            if nu == lambda {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
        .collect();
    let solution = system
        .solve(&target)
        .ok_or_else(|| Error::Internal(format!("singular h-matrix in degree {n} at {rank}")))?;
    let coeffs = to_integers(solution, lambda)?;
    let (h_expansion, element) = system.combine(rank, n, &coeffs)?;
    if !h_expansion.coefficient(lambda).is_one() {
        return Err(Error::Internal(format!(
            "h-coefficient of {lambda} in its own k-Schur function is not 1"
        )));
    }
    let w_lambda = lambda.grassmannian_element()?;
    if element.grassmannian_part() != NilCoxeterElement::basis(w_lambda) {
        return Err(Error::Internal(format!(
            "Grassmannian part of the solved 𝔰_{lambda} is wrong"
        )));
    }
    Ok(KSchur {
        lambda: lambda.clone(),
        h_expansion,
        element,
    })
}

/// Coordinates of a homogeneous element of `𝔹` of the given degree in the
/// `h_μ` basis; fails if the element is not in `𝔹`.
pub fn h_expansion_of(
    element: &NilCoxeterElement,
    degree: usize,
    cache: &dyn HProductCache,
) -> Result<HExpansion> {
    let rank = element.rank();
    let system = GrassmannianSystem::build(rank, degree, cache)?;
    let target: Vec<BigInt> = system
        .grassmannians
        .iter()
        .map(|w| element.coefficient(w))
        .collect();
    let solution = system.solve(&target).ok_or_else(|| {
        Error::Internal(format!("singular h-matrix in degree {degree} at {rank}"))
    })?;
    let coeffs = to_integers(solution, &"h-expansion")?;
    let (expansion, rebuilt) = system.combine(rank, degree, &coeffs)?;
    if &rebuilt != element {
        return Err(Error::NotInSubalgebra(format!(
            "{} terms do not match any h-combination",
            element.len()
        )));
    }
    Ok(expansion)
}

/// How to obtain `𝔰_λ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExpansionMethod {
    /// Rectangle or near-rectangle closed form when one applies, else solve.
    #[default]
    Auto,
    Solve,
    Rectangle,
    NearRectangle,
}

impl ExpansionMethod {
    fn name(self) -> &'static str {
        match self {
            ExpansionMethod::Auto => "auto",
            ExpansionMethod::Solve => "solve",
            ExpansionMethod::Rectangle => "rectangle",
            ExpansionMethod::NearRectangle => "near-rectangle",
        }
    }
}

/// The `𝔸`-expansion of `𝔰_λ` by the requested method.
pub fn kschur_element(
    lambda: &BoundedPartition,
    method: ExpansionMethod,
    cache: &dyn HProductCache,
) -> Result<NilCoxeterElement> {
    let rank = lambda.rank();
    let not_applicable = || Error::MethodNotApplicable {
        method: method.name(),
        parts: lambda.rows().to_vec(),
        k: rank.k(),
    };
    match method {
        ExpansionMethod::Solve => Ok(kschur_solve(lambda, cache)?.element),
        ExpansionMethod::Rectangle => {
            let (c, r) = as_k_rectangle(lambda).ok_or_else(not_applicable)?;
            rectangle_expansion(rank, c, r)
        }
        ExpansionMethod::NearRectangle => {
            let (c, r) = as_near_rectangle(lambda).ok_or_else(not_applicable)?;
            near_rectangle_expansion(rank, c, r)
        }
        ExpansionMethod::Auto => {
            if let Some((c, r)) = as_k_rectangle(lambda) {
                rectangle_expansion(rank, c, r)
            } else if let Some((c, r)) = as_near_rectangle(lambda) {
                near_rectangle_expansion(rank, c, r)
            } else {
                Ok(kschur_solve(lambda, cache)?.element)
            }
        }
    }
}

/// `c_{λ,μ}^{ν,(k)}`: zero unless `|ν| = |λ| + |μ|` and `w_μ ≤ w_ν` in left
/// weak order, in which case it is the coefficient of `u_{w_ν w_μ^{-1}}` in `𝔰_λ`.
pub fn klr_coefficient(
    lambda: &BoundedPartition,
    mu: &BoundedPartition,
    nu: &BoundedPartition,
    method: ExpansionMethod,
    cache: &dyn HProductCache,
) -> Result<BigInt> {
    let rank = lambda.rank();
    rank.ensure_same(mu.rank())?;
    rank.ensure_same(nu.rank())?;
    if nu.size() != lambda.size() + mu.size() {
        return Ok(BigInt::zero());
    }
    let w_mu = mu.grassmannian_element()?;
    let w_nu = nu.grassmannian_element()?;
    let x = w_nu.multiply(&w_mu.inverse())?;
    if x.length() + w_mu.length() != w_nu.length() {
        return Ok(BigInt::zero());
    }
    Ok(kschur_element(lambda, method, cache)?.coefficient(&x))
}

/// Independent route: the coefficient of `u_{w_ν}` in `𝔰_λ 𝔰_μ` for every
/// k-bounded `ν` of size `|λ| + |μ|`. Only nonzero entries are returned.
pub fn klr_product_table(
    lambda: &BoundedPartition,
    mu: &BoundedPartition,
    cache: &dyn HProductCache,
) -> Result<BTreeMap<BoundedPartition, BigInt>> {
    let rank = lambda.rank();
    rank.ensure_same(mu.rank())?;
    let a = kschur_solve(lambda, cache)?.element;
    let b = kschur_solve(mu, cache)?.element;
    let product = a.multiply(&b)?;
    let mut table = BTreeMap::new();
    for nu in BoundedPartition::all_of_size(rank, lambda.size() + mu.size()) {
        let c = product.coefficient(&nu.grassmannian_element()?);
        if !c.is_zero() {
            table.insert(nu, c);
        }
    }
    Ok(table)
}
