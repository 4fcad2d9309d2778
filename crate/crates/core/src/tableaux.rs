//! Skew semistandard tableaux.
//!
//! A [`SkewTableau`] stores one entry list per row of the outer diagram; rows
//! that lie entirely inside the inner partition are present and empty.
//!
//! The Littlewood–Richardson condition is decided two ways. [`is_lr_tableau`]
//! builds the unique straight-shape companion (row `l` of the companion holds
//! `k` once for every entry `l` found in row `k`) and checks that it is a
//! semistandard tableau of shape equal to the weight. [`is_lattice_tableau`]
//! checks that the reverse reading word is a lattice word. The two must agree.

use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::{multinomial, Multipartition, Partition, SkewShape};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl SkewTableau {
    /// Checks row lengths against the shape and that entries are positive.
    /// Semistandardness is not checked here.
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != shape.num_rows() {
            return Err(Error::MalformedTableau(format!(
                "shape {shape} has {} rows, got {}",
                shape.num_rows(),
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(i) {
                return Err(Error::MalformedTableau(format!(
                    "row {} of {shape} has {} cells, got {}",
                    i + 1,
                    shape.row_len(i),
                    row.len()
                )));
            }
        }
        if rows.iter().flatten().any(|&e| e == 0) {
            return Err(Error::MalformedTableau("entries must be positive".into()));
        }
        Ok(SkewTableau { shape, rows })
    }

    /// A straight-shape tableau; the shape is read off the row lengths.
    pub fn straight(rows: Vec<Vec<usize>>) -> Result<Self> {
        let outer = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::MalformedTableau(e.to_string()))?;
        Self::new(SkewShape::straight(outer), rows)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Entry at 1-based `row` and absolute 1-based column `col`, if that cell is skew.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        let i = row.checked_sub(1)?;
        let start = self.shape.row_start(i);
        let j = col.checked_sub(start)?;
        self.rows.get(i)?.get(j).copied()
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn is_semistandard(&self) -> bool {
        is_semistandard(self)
    }

    pub fn weight(&self) -> Weight {
        weight_of(self)
    }
}

impl fmt::Display for SkewTableau {
    /// Rows separated by `/`, entries by `,`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

/// Entry multiplicities; `counts[i - 1]` is the number of entries equal to `i`.
/// Trailing zeros are dropped so equal weights compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Weight {
    counts: Vec<usize>,
}

impl Weight {
    pub fn new(mut counts: Vec<usize>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Weight { counts }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Count of entries equal to `value` (1-based); zero past the end.
    pub fn count(&self, value: usize) -> usize {
        value
            .checked_sub(1)
            .and_then(|i| self.counts.get(i))
            .copied()
            .unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// The weight read as a partition, if its counts are weakly decreasing.
    pub fn as_partition(&self) -> Option<Partition> {
        Partition::new(self.counts.clone()).ok()
    }
}

impl From<&Partition> for Weight {
    fn from(p: &Partition) -> Self {
        Weight {
            counts: p.parts().to_vec(),
        }
    }
}

pub fn is_semistandard(t: &SkewTableau) -> bool {
    let shape = &t.shape;
    if t.rows.iter().any(|row| row.windows(2).any(|w| w[0] > w[1])) {
        return false;
    }
    for i in 1..t.rows.len() {
        let lo = shape.row_start(i).max(shape.row_start(i - 1));
        let hi = shape.outer().part(i).min(shape.outer().part(i - 1));
        for col in lo..=hi {
            let above = t.rows[i - 1][col - shape.row_start(i - 1)];
            let below = t.rows[i][col - shape.row_start(i)];
            if above >= below {
                return false;
            }
        }
    }
    true
}

pub fn weight_of(t: &SkewTableau) -> Weight {
    let mut counts = vec![0; t.max_entry()];
    for &e in t.rows.iter().flatten() {
        counts[e - 1] += 1;
    }
    Weight::new(counts)
}

/// Number of entries equal to `l` in row `k` (both 1-based).
pub fn entry_count(t: &SkewTableau, k: usize, l: usize) -> usize {
    k.checked_sub(1)
        .and_then(|i| t.rows.get(i))
        .map_or(0, |row| row.iter().filter(|&&e| e == l).count())
}

/// `T^l_k == T'^k_l` for every row `k` and value `l`.
pub fn is_companion(t: &SkewTableau, t2: &SkewTableau) -> bool {
    let rows = t.rows.len().max(t2.max_entry());
    let values = t.max_entry().max(t2.rows.len());
    (1..=rows).all(|k| (1..=values).all(|l| entry_count(t, k, l) == entry_count(t2, l, k)))
}

/// Rows of the unique straight-shape filling that is companion to `t`: row `l`
/// lists, in increasing order, the row index of every entry `l` of `t`.
///
pub fn companion_rows(t: &SkewTableau) -> Vec<Vec<usize>> {
    let mut rows = vec![Vec::new(); t.max_entry()];
    for (k, row) in t.rows.iter().enumerate() {
        for &l in row {
            rows[l - 1].push(k + 1);
        }
    }
    for row in &mut rows {
        row.sort_unstable();
    }
    rows
}

/// Whether `t` is ∅-dominant: its straight companion has the weight of `t`
/// as shape and is semistandard.
pub fn is_lr_tableau(t: &SkewTableau) -> Result<bool> {
    if !t.is_semistandard() {
        return Err(Error::NotSemistandard);
    }
    let companion = companion_rows(t);
    // a straight shape needs weakly decreasing, gap-free row lengths
    if companion.windows(2).any(|w| w[0].len() < w[1].len()) {
        return Ok(false);
    }
    // rows are sorted by construction, so only columns can fail
    let columns_strict = companion
        .windows(2)
        .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| above < below));
    Ok(columns_strict)
}

/// Lattice-word criterion: reading rows top to bottom, each right to left,
/// every prefix has at least as many `i` as `i + 1`.
pub fn is_lattice_tableau(t: &SkewTableau) -> Result<bool> {
    if !t.is_semistandard() {
        return Err(Error::NotSemistandard);
    }
    let mut seen = vec![0usize; t.max_entry() + 1];
    for &e in t.rows.iter().flat_map(|row| row.iter().rev()) {
        seen[e] += 1;
        if e > 1 && seen[e] > seen[e - 1] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Row-major depth-first filler shared by the weighted and bounded enumerations.
struct Filler<'a> {
    shape: &'a SkewShape,
    rows: Vec<Vec<usize>>,
    remaining: Option<Vec<usize>>,
    max_entry: usize,
    out: Vec<SkewTableau>,
}

impl Filler<'_> {
    fn run(&mut self, row: usize, pos: usize) {
        let shape = self.shape;
        if row == shape.num_rows() {
            self.out.push(SkewTableau {
                shape: shape.clone(),
                rows: self.rows.clone(),
            });
            return;
        }
        if pos == shape.row_len(row) {
            return self.run(row + 1, 0);
        }
        let col = shape.row_start(row) + pos;
        let mut min = if pos > 0 { self.rows[row][pos - 1] } else { 1 };
        if row > 0 && col >= shape.row_start(row - 1) && col <= shape.outer().part(row - 1) {
            min = min.max(self.rows[row - 1][col - shape.row_start(row - 1)] + 1);
        }
        for v in min..=self.max_entry {
            if let Some(rem) = &mut self.remaining {
                if rem[v - 1] == 0 {
                    continue;
                }
                rem[v - 1] -= 1;
            }
            self.rows[row].push(v);
            self.run(row, pos + 1);
            self.rows[row].pop();
            if let Some(rem) = &mut self.remaining {
                rem[v - 1] += 1;
            }
        }
    }
}

/// All semistandard fillings of `shape` with the given weight, in row-major
/// lexicographic order of entries. The weight may be any composition.
pub fn enumerate_ssyt(shape: &SkewShape, weight: &Weight) -> Result<Vec<SkewTableau>> {
    if weight.total() != shape.size() {
        return Err(Error::SizeMismatch {
            weight: weight.total(),
            cells: shape.size(),
        });
    }
    let mut filler = Filler {
        shape,
        rows: vec![Vec::new(); shape.num_rows()],
        remaining: Some(weight.counts().to_vec()),
        max_entry: weight.counts().len(),
        out: Vec::new(),
    };
    filler.run(0, 0);
    Ok(filler.out)
}

/// All semistandard fillings of `shape` with entries in `1..=max_entry`, any weight.
pub fn enumerate_ssyt_bounded(shape: &SkewShape, max_entry: usize) -> Vec<SkewTableau> {
    let mut filler = Filler {
        shape,
        rows: vec![Vec::new(); shape.num_rows()],
        remaining: None,
        max_entry,
        out: Vec::new(),
    };
    filler.run(0, 0);
    filler.out
}

fn conjugate_parts(p: &Partition) -> Vec<usize> {
    (1..=p.first_part())
        .map(|c| p.parts().iter().filter(|&&r| r >= c).count())
        .collect()
}

/// Number of standard tableaux of shape `p`, by the hook length formula.
pub fn count_standard_tableaux(p: &Partition) -> Result<u64> {
    let conj = conjugate_parts(p);
    let mut factorial: u128 = 1;
    for k in 2..=p.size() as u128 {
        factorial = factorial.checked_mul(k).ok_or(Error::Overflow)?;
    }
    let mut hooks: u128 = 1;
    for (i, &row) in p.parts().iter().enumerate() {
        for (j, &col) in conj.iter().enumerate().take(row) {
            let hook = (row - j - 1) + (col - i - 1) + 1;
            hooks *= hook as u128;
        }
    }
    u64::try_from(factorial / hooks).map_err(|_| Error::Overflow)
}

/// Number of standard `d`-tableaux of shape `mp`: the multinomial coefficient
/// of the component sizes times the product of the component counts.
pub fn count_standard_d_tableaux(mp: &Multipartition) -> Result<u64> {
    let mut acc = multinomial(&mp.composition())?;
    for c in mp.components() {
        acc = acc
            .checked_mul(count_standard_tableaux(c)?)
            .ok_or(Error::Overflow)?;
    }
    Ok(acc)
}
