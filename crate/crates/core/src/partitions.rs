//! Partitions, skew shapes and multipartitions.
//!
//! A partition is stored in canonical form: weakly decreasing positive parts
//! with no trailing zeros. Its text form is the comma-separated list of parts,
//! and the empty string denotes the empty partition.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::Parse(format!("part {} is zero", pos + 1)));
        }
        if let Some(pos) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "parts must be weakly decreasing, found {} before {}",
                parts[pos],
                parts[pos + 1]
            )));
        }
        Ok(Self::from_parts_unchecked(parts))
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The single-row partition `(l)`; empty when `l == 0`.
    pub fn row(l: usize) -> Self {
        if l == 0 {
            Self::empty()
        } else {
            Self::from_parts_unchecked(vec![l])
        }
    }

    /// The single-column partition `(1, ..., 1)` with `k` parts.
    pub fn column(k: usize) -> Self {
        Self::from_parts_unchecked(vec![1; k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of nonzero parts (rows of the Young diagram).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, 0-based; parts past the end read as zero.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Length of the first row, 0 for the empty partition.
    pub fn first_part(&self) -> usize {
        self.part(0)
    }

    /// Whether the Young diagram of `other` sits inside that of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn removable_nodes(&self) -> Vec<Node> {
        removable_nodes(self)
    }

    /// Removes `node` if it is removable; `None` otherwise.
    pub fn remove_node(&self, node: Node) -> Option<Partition> {
        let row = node.row.checked_sub(1)?;
        if self.part(row) != node.col || node.col == 0 || self.part(row + 1) >= node.col {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.pop();
        }
        Some(Self::from_parts_unchecked(parts))
    }

    /// Nodes that can be added while keeping a partition, in increasing row order.
    pub fn addable_nodes(&self) -> Vec<Node> {
        (0..=self.len())
            .filter(|&i| i == 0 || self.part(i) < self.part(i - 1))
            .map(|i| Node::new(i + 1, self.part(i) + 1))
            .collect()
    }

    pub fn add_node(&self, node: Node) -> Option<Partition> {
        if !self.addable_nodes().contains(&node) {
            return None;
        }
        let mut parts = self.parts.clone();
        if node.row > parts.len() {
            parts.push(1);
        } else {
            parts[node.row - 1] += 1;
        }
        Some(Self::from_parts_unchecked(parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

/// Parses the comma-separated text form. Unsorted input is rejected, never sorted.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = text
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<usize>()
                .map_err(|_| Error::Parse(format!("`{tok}` is not a nonnegative integer")))
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

/// A box of a Young diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1);
        Node { row, col }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

pub fn removable_nodes(p: &Partition) -> Vec<Node> {
    (0..p.len())
        .filter(|&i| p.part(i) > p.part(i + 1))
        .map(|i| Node::new(i + 1, p.part(i)))
        .collect()
}

/// The skew shape `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        skew_shape(outer, inner)
    }

    /// Straight shape `p / ∅`.
    pub fn straight(p: Partition) -> Self {
        SkewShape {
            outer: p,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Number of rows of the outer diagram, including rows with no skew cells.
    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    /// Number of skew cells in row `i` (0-based).
    pub fn row_len(&self, i: usize) -> usize {
        self.outer.part(i) - self.inner.part(i)
    }

    /// 1-based column of the first skew cell in row `i` (0-based).
    pub fn row_start(&self, i: usize) -> usize {
        self.inner.part(i) + 1
    }

    /// All cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Node> + '_ {
        (0..self.num_rows()).flat_map(move |i| {
            (self.inner.part(i) + 1..=self.outer.part(i)).map(move |c| Node::new(i + 1, c))
        })
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.outer, self.inner)
    }
}

pub fn skew_shape(outer: Partition, inner: Partition) -> Result<SkewShape> {
    if !outer.contains(&inner) {
        return Err(Error::NotContained {
            outer: outer.to_string(),
            inner: inner.to_string(),
        });
    }
    Ok(SkewShape { outer, inner })
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_parts_unchecked(cur.clone()));
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// A `d`-tuple of partitions, components indexed `0..d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition {
    components: Vec<Partition>,
    size: usize,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidArgument(
                "a multipartition needs at least one component".into(),
            ));
        }
        let size = components.iter().map(Partition::size).sum();
        Ok(Multipartition { components, size })
    }

    /// `(p, ∅, ..., ∅)` with `d` components.
    pub fn single(d: usize, index: usize, p: Partition) -> Result<Self> {
        if index >= d {
            return Err(Error::InvalidArgument(format!(
                "component {index} out of range for d = {d}"
            )));
        }
        let mut components = vec![Partition::empty(); d];
        components[index] = p;
        Self::new(components)
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Partition {
        &self.components[i]
    }

    pub fn d(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Sizes of the components, `(k_0, ..., k_{d-1})`.
    pub fn composition(&self) -> Vec<usize> {
        self.components.iter().map(Partition::size).collect()
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Multipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_multipartition(s)
    }
}

/// Parses `|`-separated partition texts. Empty components are significant:
/// `"2,1|1|"` has three components.
pub fn parse_multipartition(text: &str) -> Result<Multipartition> {
    let components = text
        .split('|')
        .map(parse_partition)
        .collect::<Result<Vec<_>>>()?;
    Multipartition::new(components)
}

/// Weak compositions of `n` into `d` parts, in lexicographic order.
pub(crate) fn compositions(n: usize, d: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in 0..=rest {
            cur.push(k);
            go(rest - k, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if d > 0 {
        go(n, d, &mut Vec::new(), &mut out);
    }
    out
}

/// All `d`-partitions of `n`: compositions `(k_0, ..., k_{d-1})` in lexicographic
/// order, then componentwise in [`partitions_of`] order.
pub fn multipartitions_of(d: usize, n: usize) -> Result<Vec<Multipartition>> {
    if d == 0 {
        return Err(Error::InvalidArgument("d must be at least 1".into()));
    }
    let by_size: Vec<Vec<Partition>> = (0..=n).map(partitions_of).collect();
    let mut out = Vec::new();
    for comp in compositions(n, d) {
        let mut acc: Vec<Vec<Partition>> = vec![Vec::new()];
        for &k in &comp {
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    by_size[k].iter().map(move |p| {
                        let mut next = prefix.clone();
                        next.push(p.clone());
                        next
                    })
                })
                .collect();
        }
        out.extend(acc.into_iter().map(|components| Multipartition {
            size: n,
            components,
        }));
    }
    Ok(out)
}

/// `binom(n, k)`, exact.
pub fn binomial(n: usize, k: usize) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = acc.checked_mul((n - i) as u128).ok_or(Error::Overflow)? / (i as u128 + 1);
    }
    u64::try_from(acc).map_err(|_| Error::Overflow)
}

/// `n! / (k_0! ... k_{d-1}!)` where `n = Σ k_i`.
pub fn multinomial(parts: &[usize]) -> Result<u64> {
    let mut total = 0usize;
    let mut acc = 1u64;
    for &k in parts {
        total += k;
        acc = acc
            .checked_mul(binomial(total, k)?)
            .ok_or(Error::Overflow)?;
    }
    Ok(acc)
}

/// The `n`-th Catalan number `binom(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> Result<u64> {
    let mut acc: u128 = 1;
    let two_n = 2 * n;
    for i in 0..n {
        acc = acc
            .checked_mul((two_n - i) as u128)
            .ok_or(Error::Overflow)?
            / (i as u128 + 1);
    }
    u64::try_from(acc / (n as u128 + 1)).map_err(|_| Error::Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_partition("4,3,2").unwrap(), p(&[4, 3, 2]));
        assert_eq!(parse_partition("").unwrap(), Partition::empty());
        assert!(matches!(parse_partition("2,3"), Err(Error::Parse(_))));
        assert!(parse_partition("3,0").is_err());
        assert!(parse_partition("3,-1").is_err());
        assert!(parse_partition("a").is_err());
        assert!(parse_partition("3,,1").is_err());
        assert_eq!(p(&[4, 3, 2]).to_string(), "4,3,2");
    }

    #[test]
    fn skew_shape_examples() {
        let s = skew_shape(p(&[4, 3, 2]), p(&[2, 1])).unwrap();
        assert_eq!(s.size(), 6);
        let lam = p(&[3, 1]);
        assert_eq!(skew_shape(lam.clone(), lam).unwrap().size(), 0);
        assert!(matches!(
            skew_shape(p(&[2]), p(&[3])),
            Err(Error::NotContained { .. })
        ));
        assert!(skew_shape(p(&[2]), p(&[1, 1])).is_err());
        let cells: Vec<_> = s.cells().collect();
        assert_eq!(cells.len(), 6);
        assert_eq!(cells[0], Node::new(1, 3));
        assert_eq!(cells[5], Node::new(3, 2));
    }

    #[test]
    fn removable_examples() {
        let nodes = |v: &[usize]| removable_nodes(&p(v));
        assert_eq!(
            nodes(&[4, 3, 2]),
            vec![Node::new(1, 4), Node::new(2, 3), Node::new(3, 2)]
        );
        assert!(nodes(&[]).is_empty());
        assert_eq!(nodes(&[1, 1, 1]), vec![Node::new(3, 1)]);
        assert_eq!(nodes(&[3, 3, 1]), vec![Node::new(2, 3), Node::new(3, 1)]);
    }

    #[test]
    fn removable_nodes_are_exactly_the_valid_end_of_row_nodes() {
        for n in 0..=8 {
            for lam in partitions_of(n) {
                let listed = lam.removable_nodes();
                for i in 0..lam.len() {
                    let node = Node::new(i + 1, lam.part(i));
                    // brute force: drop the node and check the shape
                    let mut parts = lam.parts().to_vec();
                    parts[i] -= 1;
                    let valid = parts.windows(2).all(|w| w[0] >= w[1]);
                    assert_eq!(listed.contains(&node), valid, "{lam} {node}");
                    if valid {
                        let smaller = lam.remove_node(node).unwrap();
                        assert_eq!(smaller.size(), n - 1);
                    } else {
                        assert!(lam.remove_node(node).is_none());
                    }
                }
            }
        }
    }

    #[test]
    fn addable_then_removable() {
        let lam = p(&[2, 1]);
        let added: Vec<_> = lam
            .addable_nodes()
            .iter()
            .map(|&n| lam.add_node(n).unwrap())
            .collect();
        assert_eq!(added, vec![p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])]);
    }

    #[test]
    fn partition_generation() {
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(6).len(), 11);
        let counts: Vec<_> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        for n in 0..=10 {
            let all = partitions_of(n);
            let mut dedup = all.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), all.len());
            for lam in &all {
                assert_eq!(Partition::new(lam.parts().to_vec()).as_ref(), Ok(lam));
                assert_eq!(lam.size(), n);
            }
            // decreasing lexicographic
            assert!(all.windows(2).all(|w| w[0] > w[1]));
        }
    }

    #[test]
    fn multipartition_generation() {
        assert!(matches!(
            multipartitions_of(0, 2),
            Err(Error::InvalidArgument(_))
        ));
        let one: Vec<_> = multipartitions_of(1, 3)
            .unwrap()
            .into_iter()
            .map(|m| m.component(0).clone())
            .collect();
        assert_eq!(one, partitions_of(3));
        assert_eq!(multipartitions_of(2, 2).unwrap().len(), 5);
        let empty = multipartitions_of(3, 0).unwrap();
        assert_eq!(empty.len(), 1);
        assert_eq!(
            empty[0].components(),
            &[Partition::empty(), Partition::empty(), Partition::empty()]
        );
    }

    #[test]
    fn multipartition_counts_match_composition_sum() {
        for d in 1..=4 {
            for n in 0..=8 {
                let expected: usize = compositions(n, d)
                    .iter()
                    .map(|c| c.iter().map(|&k| partitions_of(k).len()).product::<usize>())
                    .sum();
                let all = multipartitions_of(d, n).unwrap();
                assert_eq!(all.len(), expected, "d={d} n={n}");
                let mut dedup = all.clone();
                dedup.sort();
                dedup.dedup();
                assert_eq!(dedup.len(), all.len());
            }
        }
    }

    #[test]
    fn multipartition_text() {
        let m: Multipartition = "2,1|1|".parse().unwrap();
        assert_eq!(m.d(), 3);
        assert_eq!(m.size(), 4);
        assert_eq!(m.to_string(), "2,1|1|");
        let single: Multipartition = "".parse().unwrap();
        assert_eq!(single.d(), 1);
        assert!("1|2,3".parse::<Multipartition>().is_err());
    }

    #[test]
    fn catalan_values() {
        assert_eq!(catalan(0), Ok(1));
        assert_eq!(catalan(3), Ok(5));
        assert_eq!(catalan(4), Ok(14));
        assert_eq!(catalan(35), Ok(3_116_285_494_907_301_262));
        assert_eq!(catalan(36), Ok(11_959_798_385_860_453_492));
        assert_eq!(catalan(37), Err(Error::Overflow));
    }

    #[test]
    fn catalan_sum_of_squares_identity() {
        for n in 0..=12 {
            let sum: u64 = (0..=n).map(|k| binomial(n, k).unwrap().pow(2)).sum();
            assert_eq!((n as u64 + 1) * catalan(n).unwrap(), sum, "n={n}");
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), Ok(20));
        assert_eq!(binomial(3, 5), Ok(0));
        assert_eq!(multinomial(&[2, 1, 1]), Ok(12));
        assert_eq!(multinomial(&[]), Ok(1));
        assert_eq!(binomial(200, 100), Err(Error::Overflow));
    }
}
