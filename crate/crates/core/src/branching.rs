//! Restriction from `G(d,1,n)` to `S_n`, the labels `R(d,n)` of the
//! irreducible representations of the Yokonuma–Temperley–Lieb algebra, and its
//! dimension.
//!
//! The restriction of `E^λ` for a `d`-partition `λ` decomposes with the
//! coefficients of the iterated product `s_{λ^(0)} s_{λ^(1)} ... s_{λ^(d-1)}`.
//! A label belongs to `R(d,n)` exactly when the first parts of its components
//! sum to at most 2.

use crate::error::{Error, Result};
use crate::lr::{expansion_product, SchurExpansion};
use crate::partitions::{
    binomial, catalan, multipartitions_of, partitions_of, Multipartition, Partition,
};
use crate::tableaux::{count_standard_d_tableaux, count_standard_tableaux};

/// Multiplicities `c^ν_λ` of `E^ν` in the restriction of `E^λ` to `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchingTable {
    source: Multipartition,
    terms: SchurExpansion,
}

impl BranchingTable {
    pub fn source(&self) -> &Multipartition {
        &self.source
    }

    pub fn terms(&self) -> &SchurExpansion {
        &self.terms
    }

    pub fn multiplicity(&self, nu: &Partition) -> u64 {
        self.terms.coefficient(nu)
    }

    /// `Σ_ν c^ν_λ f^ν`, the dimension of the restricted module.
    pub fn dimension(&self) -> Result<u64> {
        self.terms.weighted_sum(count_standard_tableaux)
    }
}

/// The split `R(d,n) = R_1 ⊔ R_2`: `R_1` holds labels with a single nonempty
/// component of at most two columns, `R_2` those with exactly two nonempty
/// components, both single columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationResult {
    pub d: usize,
    pub n: usize,
    pub r1: Vec<Multipartition>,
    pub r2: Vec<Multipartition>,
}

impl ClassificationResult {
    pub fn total(&self) -> usize {
        self.r1.len() + self.r2.len()
    }

    pub fn members(&self) -> impl Iterator<Item = &Multipartition> + '_ {
        self.r1.iter().chain(&self.r2)
    }
}

fn require_n_at_least_3(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "n must be at least 3, got {n}"
        )));
    }
    Ok(())
}

fn require_d_positive(d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::InvalidArgument("d must be at least 1".into()));
    }
    Ok(())
}

pub fn restriction_multiplicities(mp: &Multipartition) -> Result<BranchingTable> {
    let mut components = mp.components().iter();
    let first = components
        .next()
        .expect("multipartitions have at least one component");
    let mut acc = SchurExpansion::single(first.clone());
    for c in components.filter(|c| !c.is_empty()) {
        acc = expansion_product(&acc, c)?;
    }
    Ok(BranchingTable {
        source: mp.clone(),
        terms: acc,
    })
}

/// `Σ_i λ^(i)_1`.
pub fn alpha(mp: &Multipartition) -> usize {
    mp.components().iter().map(Partition::first_part).sum()
}

pub fn is_in_r(mp: &Multipartition) -> Result<bool> {
    require_n_at_least_3(mp.size())?;
    Ok(alpha(mp) <= 2)
}

/// Whether the trivial representation of `S_3` occurs in the restriction of
/// `E^λ`, i.e. some `ν` with `c^ν_λ > 0` has a first row of length at least 3.
pub fn restriction_contains_trivial_s3(mp: &Multipartition) -> Result<bool> {
    require_n_at_least_3(mp.size())?;
    let table = restriction_multiplicities(mp)?;
    let found = table.terms().support().any(|nu| nu.first_part() >= 3);
    Ok(found)
}

pub fn classify_r(d: usize, n: usize) -> Result<ClassificationResult> {
    require_d_positive(d)?;
    require_n_at_least_3(n)?;
    let two_column: Vec<Partition> = partitions_of(n)
        .into_iter()
        .filter(|p| p.first_part() <= 2)
        .collect();
    let mut r1 = Vec::new();
    for i in 0..d {
        for p in &two_column {
            r1.push(Multipartition::single(d, i, p.clone())?);
        }
    }
    let mut r2 = Vec::new();
    for i1 in 0..d {
        for i2 in i1 + 1..d {
            for k in 1..n {
                let mut components = vec![Partition::empty(); d];
                components[i1] = Partition::column(k);
                components[i2] = Partition::column(n - k);
                r2.push(Multipartition::new(components)?);
            }
        }
    }
    Ok(ClassificationResult { d, n, r1, r2 })
}

/// `d(nd − n + d + 1)/2 · C_n − d(d − 1)`.
pub fn ytl_dimension_formula(d: usize, n: usize) -> Result<u64> {
    require_d_positive(d)?;
    require_n_at_least_3(n)?;
    let (d, n) = (d as u64, n as u64);
    // d(nd - n + d + 1) = d((d - 1)(n + 1) + 2) is always even
    let inner = (d - 1)
        .checked_mul(n + 1)
        .and_then(|x| x.checked_add(2))
        .and_then(|x| x.checked_mul(d))
        .ok_or(Error::Overflow)?;
    let leading = (inner / 2)
        .checked_mul(catalan(n as usize)?)
        .ok_or(Error::Overflow)?;
    Ok(leading - d * (d - 1))
}

/// `Σ_{λ ∈ R(d,n)} dim(E^λ)²`, summed over the classification.
pub fn ytl_dimension_sum(d: usize, n: usize) -> Result<u64> {
    classify_r(d, n)?.members().try_fold(0u64, |acc, mp| {
        let dim = count_standard_d_tableaux(mp)?;
        let sq = dim.checked_mul(dim).ok_or(Error::Overflow)?;
        acc.checked_add(sq).ok_or(Error::Overflow)
    })
}

/// The `R_2` contribution in closed form: `binom(d,2) · Σ_{k=1}^{n-1} binom(n,k)²`.
pub fn r2_square_sum(d: usize, n: usize) -> Result<u64> {
    let pairs = binomial(d, 2)?;
    let mut sum = 0u64;
    for k in 1..n {
        let b = binomial(n, k)?;
        sum = sum
            .checked_add(b.checked_mul(b).ok_or(Error::Overflow)?)
            .ok_or(Error::Overflow)?;
    }
    pairs.checked_mul(sum).ok_or(Error::Overflow)
}

/// Whether `outer / inner` is a horizontal strip (no two cells in a column).
fn is_horizontal_strip(outer: &Partition, inner: &Partition) -> bool {
    outer.contains(inner) && (0..outer.len()).all(|i| inner.part(i) >= outer.part(i + 1))
}

/// Some `μ ∈ P(d, |λ| − l)` such that each component of `λ` is obtained from
/// the matching component of `μ` by adding a horizontal strip, the strips
/// totalling `l` boxes. Columns of different components never clash. Returns
/// the first such `μ` in [`multipartitions_of`] order.
pub fn pieri_membership_witness(mp: &Multipartition, l: usize) -> Result<Option<Multipartition>> {
    if mp.size() < l {
        return Err(Error::InvalidArgument(format!(
            "cannot remove {l} boxes from a {}-box diagram",
            mp.size()
        )));
    }
    let candidates = multipartitions_of(mp.d(), mp.size() - l)?;
    Ok(candidates.into_iter().find(|mu| {
        mp.components()
            .iter()
            .zip(mu.components())
            .all(|(outer, inner)| is_horizontal_strip(outer, inner))
    }))
}
