//! Littlewood–Richardson coefficients and Schur-function products.
//!
//! `c^ν_{λ,μ}` is the number of LR tableaux of shape `ν/λ` and weight `μ`,
//! counted by enumerating semistandard fillings and keeping the ∅-dominant
//! ones. Results are memoized in a process-wide cache.

use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, skew_shape, Partition};
use crate::tableaux::{enumerate_ssyt, is_lr_tableau, Weight};

/// A homogeneous linear combination of Schur functions with positive integer
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion {
    degree: usize,
    terms: BTreeMap<Partition, u64>,
}

impl SchurExpansion {
    pub fn zero(degree: usize) -> Self {
        SchurExpansion {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// `s_λ` with coefficient 1.
    pub fn single(p: Partition) -> Self {
        let mut terms = BTreeMap::new();
        let degree = p.size();
        terms.insert(p, 1);
        SchurExpansion { degree, terms }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Adds `coeff · s_p`.
    pub fn add_term(&mut self, p: Partition, coeff: u64) -> Result<()> {
        if p.size() != self.degree {
            return Err(Error::InvalidArgument(format!(
                "partition ({p}) has size {}, expansion has degree {}",
                p.size(),
                self.degree
            )));
        }
        if coeff == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(p).or_insert(0);
        *slot = slot.checked_add(coeff).ok_or(Error::Overflow)?;
        Ok(())
    }

    pub fn coefficient(&self, p: &Partition) -> u64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    /// Terms in decreasing lexicographic order of partitions.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u64)> + '_ {
        self.terms.iter().rev().map(|(p, &c)| (p, c))
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> + '_ {
        self.terms.keys().rev()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest first part among the terms, 0 if there are none.
    pub fn max_first_part(&self) -> usize {
        self.terms
            .keys()
            .map(Partition::first_part)
            .max()
            .unwrap_or(0)
    }

    /// `Σ coeff · weights(p)`, checked.
    pub fn weighted_sum(&self, mut weight: impl FnMut(&Partition) -> Result<u64>) -> Result<u64> {
        self.terms.iter().try_fold(0u64, |acc, (p, &c)| {
            let term = c.checked_mul(weight(p)?).ok_or(Error::Overflow)?;
            acc.checked_add(term).ok_or(Error::Overflow)
        })
    }
}

type CacheKey = (Partition, Partition, Partition);

fn cache() -> &'static RwLock<HashMap<CacheKey, u64>> {
    static CACHE: OnceLock<RwLock<HashMap<CacheKey, u64>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Counts LR tableaux of shape `nu / lam` and weight `mu` without the cache.
pub fn lr_coefficient_uncached(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let Ok(shape) = skew_shape(nu.clone(), lam.clone()) else {
        return 0;
    };
    if shape.size() != mu.size() {
        return 0;
    }
    enumerate_ssyt(&shape, &Weight::from(mu))
        .expect("sizes checked above")
        .iter()
        .filter(|t| is_lr_tableau(t).expect("enumerated tableaux are semistandard"))
        .count() as u64
}

/// `c^ν_{λ,μ}`; zero when `λ ⊄ ν` or `|ν/λ| ≠ |μ|`.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !nu.contains(lam) || nu.size() != lam.size() + mu.size() {
        return 0;
    }
    let key = (lam.clone(), mu.clone(), nu.clone());
    if let Some(&c) = cache().read().unwrap_or_else(|e| e.into_inner()).get(&key) {
        return c;
    }
    let c = lr_coefficient_uncached(lam, mu, nu);
    cache()
        .write()
        .unwrap_or_else(|e| e.into_inner())
        .insert(key, c);
    c
}

/// Expansion of `s_λ · s_μ`.
pub fn schur_product(lam: &Partition, mu: &Partition) -> Result<SchurExpansion> {
    let degree = lam.size() + mu.size();
    let mut out = SchurExpansion::zero(degree);
    for nu in partitions_of(degree) {
        // c^ν_{λ,μ} = 0 unless both λ and μ fit inside ν
        if !nu.contains(lam) || !nu.contains(mu) {
            continue;
        }
        let c = lr_coefficient(lam, mu, &nu);
        out.add_term(nu, c)?;
    }
    Ok(out)
}

/// `e · s_μ`, extended linearly over the terms of `e`.
pub fn expansion_product(e: &SchurExpansion, mu: &Partition) -> Result<SchurExpansion> {
    let mut out = SchurExpansion::zero(e.degree() + mu.size());
    for (sigma, coeff) in e.iter() {
        for (pi, c) in schur_product(sigma, mu)?.iter() {
            out.add_term(pi.clone(), coeff.checked_mul(c).ok_or(Error::Overflow)?)?;
        }
    }
    Ok(out)
}

/// `s_λ · s_{(l)}` by horizontal strips: every `ν ⊇ λ` with `|ν/λ| = l` and no
/// two added boxes in one column, each with coefficient 1.
pub fn pieri_row(lam: &Partition, l: usize) -> Result<SchurExpansion> {
    fn go(
        lam: &Partition,
        row: usize,
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        // rows 0..len are λ's rows plus one new row underneath
        if row > lam.len() {
            if left == 0 {
                let parts = cur.iter().copied().filter(|&x| x > 0).collect();
                out.push(Partition::from_parts_unchecked(parts));
            }
            return;
        }
        let base = lam.part(row);
        let cap = if row == 0 {
            left
        } else {
            (lam.part(row - 1) - base).min(left)
        };
        for add in (0..=cap).rev() {
            cur.push(base + add);
            go(lam, row + 1, left - add, cur, out);
            cur.pop();
        }
    }
    let mut strips = Vec::new();
    go(lam, 0, l, &mut Vec::new(), &mut strips);
    let mut out = SchurExpansion::zero(lam.size() + l);
    for nu in strips {
        out.add_term(nu, 1)?;
    }
    Ok(out)
}

/// `max { ν_1 : c^ν_{λ,μ} > 0 }`, found by scanning the full product.
pub fn max_attained_first_row(lam: &Partition, mu: &Partition) -> Result<usize> {
    Ok(schur_product(lam, mu)?.max_first_part())
}
