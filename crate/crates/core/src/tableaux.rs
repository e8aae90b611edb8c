//! Partitions, valences, fillings of Young diagrams and the orbit combinatorics
//! behind the fused Specht formula.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::{inversion_sign, next_permutation};

/// Weakly decreasing positive parts. The empty partition is allowed (Schur index).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Partition> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Drops zero parts and sorts; never fails.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(0);
        Partition((0..width).map(|c| self.0.iter().filter(|&&p| p > c).count()).collect())
    }

    /// Column lengths, left to right.
    pub fn column_lengths(&self) -> Vec<usize> {
        self.transpose().0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Partition> {
        let parts = parse_list(s)?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad integer list `{s}`"))))
        .collect()
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for first in (1..=n.min(max)).rev() {
            prefix.push(first);
            go(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Dominance order: every prefix sum of `a` is at least the matching prefix sum of `b`.
pub fn dominance_geq(a: &Partition, b: &Partition) -> bool {
    let len = a.len().max(b.len());
    let (mut sa, mut sb) = (0usize, 0usize);
    for i in 0..len {
        sa += a.part(i);
        sb += b.part(i);
        if sa < sb {
            return false;
        }
    }
    true
}

/// A composition `(s_1, ..., s_d)` of `n` with positive entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Valences(Vec<usize>);

impl Valences {
    pub fn new(entries: Vec<usize>) -> Result<Valences> {
        if entries.is_empty() {
            return Err(Error::InvalidValences("empty".into()));
        }
        if entries.contains(&0) {
            return Err(Error::InvalidValences(format!("{entries:?} has a zero entry")));
        }
        Ok(Valences(entries))
    }

    pub fn ones(n: usize) -> Valences {
        Valences(vec![1; n])
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn get(&self, k: usize) -> usize {
        self.0[k]
    }

    /// Number of marked points `d`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&s| s == 1)
    }

    /// Zero-based start of each block: `q_k - 1`.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut acc = 0;
        for &s in &self.0 {
            out.push(acc);
            acc += s;
        }
        out
    }

    /// Zero-based variable ranges of the consecutive blocks.
    pub fn blocks(&self) -> Vec<Range<usize>> {
        self.offsets().into_iter().zip(&self.0).map(|(q, &s)| q..q + s).collect()
    }

    /// Zero-based block index of each of the `n` variables.
    pub fn block_of(&self) -> Vec<usize> {
        self.0.iter().enumerate().flat_map(|(k, &s)| std::iter::repeat_n(k, s)).collect()
    }

    /// The entries sorted into a partition.
    pub fn ordered(&self) -> Partition {
        Partition::from_unsorted(self.0.clone())
    }

    /// Order of the block group `S_{s_1} × ... × S_{s_d}`.
    pub fn group_order(&self) -> u64 {
        self.0.iter().map(|&s| (1..=s as u64).product::<u64>()).product()
    }
}

impl fmt::Display for Valences {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Valences {
    type Err = Error;

    fn from_str(s: &str) -> Result<Valences> {
        Valences::new(parse_list(s)?)
    }
}

impl Serialize for Valences {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Tableau classes accepted by [`enumerate_tableaux`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableauClass {
    Standard,
    RowStrict,
    ColumnStrict,
    AllFillings,
}

impl FromStr for TableauClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<TableauClass> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "syt" | "standard" => Ok(TableauClass::Standard),
            "rsyt" | "row_strict" => Ok(TableauClass::RowStrict),
            "csyt" | "column_strict" | "ssyt" => Ok(TableauClass::ColumnStrict),
            "all" | "all_fillings" | "fill" => Ok(TableauClass::AllFillings),
            _ => Err(Error::Parse(format!("unknown tableau class `{s}`"))),
        }
    }
}

/// Positive integer entries on a Young diagram. The content is derived from the
/// entries: letter `k` occurs `s_k` times and every letter `1..=d` occurs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Filling {
    shape: Partition,
    rows: Vec<Vec<u32>>,
    content: Valences,
}

impl Filling {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Filling> {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect())
            .map_err(|_| Error::InvalidFilling(format!("row lengths of {rows:?} are not a partition")))?;
        if shape.is_empty() {
            return Err(Error::InvalidFilling("empty diagram".into()));
        }
        let max = *rows.iter().flatten().max().unwrap_or(&0) as usize;
        if rows.iter().flatten().any(|&e| e == 0) {
            return Err(Error::InvalidFilling("entries must be positive".into()));
        }
        let mut counts = vec![0usize; max];
        for &e in rows.iter().flatten() {
            counts[e as usize - 1] += 1;
        }
        if let Some(k) = counts.iter().position(|&c| c == 0) {
            return Err(Error::InvalidFilling(format!("letter {} does not occur", k + 1)));
        }
        Ok(Filling { shape, rows, content: Valences(counts) })
    }

    /// Builds a filling and checks its content against `content`.
    pub fn with_content(rows: Vec<Vec<u32>>, content: &Valences) -> Result<Filling> {
        let f = Filling::new(rows)?;
        if &f.content != content {
            return Err(Error::InvalidFilling(format!(
                "content {} does not match declared valences {}",
                f.content, content
            )));
        }
        Ok(f)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn content(&self) -> &Valences {
        &self.content
    }

    pub fn n(&self) -> usize {
        self.shape.size()
    }

    pub fn entry(&self, row: usize, col: usize) -> u32 {
        self.rows[row][col]
    }

    /// Columns top to bottom, left to right.
    pub fn columns(&self) -> Vec<Vec<u32>> {
        let width = self.shape.part(0);
        (0..width)
            .map(|c| self.rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect())
            .collect()
    }

    /// `(row, col)` positions in column-reading order.
    pub fn reading_positions(&self) -> Vec<(usize, usize)> {
        column_reading_positions(&self.shape)
    }

    pub fn column_reading_word(&self) -> Vec<u32> {
        self.columns().into_iter().flatten().collect()
    }

    /// Lexicographic comparison of column-reading words.
    pub fn cmp_column_reading(&self, other: &Filling) -> Ordering {
        self.column_reading_word().cmp(&other.column_reading_word())
    }

    pub fn is_numbering(&self) -> bool {
        self.content.is_unit()
    }

    pub fn is_standard(&self) -> bool {
        self.is_numbering() && self.rows_strict() && self.columns_strict()
    }

    /// Strict along rows, weak down columns.
    pub fn is_row_strict(&self) -> bool {
        self.rows_strict() && self.columns().iter().all(|c| c.windows(2).all(|w| w[0] <= w[1]))
    }

    /// Weak along rows, strict down columns.
    pub fn is_column_strict(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1])) && self.columns_strict()
    }

    fn rows_strict(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    fn columns_strict(&self) -> bool {
        self.columns().iter().all(|c| c.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn has_repeated_row_entry(&self) -> bool {
        self.rows.iter().any(|r| {
            let mut s = r.clone();
            s.sort_unstable();
            s.windows(2).any(|w| w[0] == w[1])
        })
    }

    pub fn transpose(&self) -> Filling {
        let cols = self.columns();
        Filling { shape: self.shape.transpose(), rows: cols, content: self.content.clone() }
    }

    /// Relabels letter `k` by `q_k` and then numbers repeated letters consecutively in
    /// column-reading order, producing a numbering.
    pub fn tilde(&self) -> Filling {
        let offsets = self.content.offsets();
        let mut used = vec![0u32; self.content.len()];
        let mut rows = self.rows.clone();
        for (r, c) in self.reading_positions() {
            let k = self.rows[r][c] as usize - 1;
            rows[r][c] = offsets[k] as u32 + used[k] + 1;
            used[k] += 1;
        }
        Filling { shape: self.shape.clone(), rows, content: Valences::ones(self.n()) }
    }

    /// Replaces every entry `e` by `map(e)`. The result must again be a valid filling.
    pub fn relabel(&self, map: impl Fn(u32) -> u32) -> Result<Filling> {
        Filling::new(self.rows.iter().map(|r| r.iter().map(|&e| map(e)).collect()).collect())
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join(";"))
    }
}

impl FromStr for Filling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Filling> {
        let rows = s
            .trim()
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad filling `{s}`")))
                    })
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Filling::new(rows)
    }
}

impl Serialize for Filling {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

pub fn column_reading_positions(shape: &Partition) -> Vec<(usize, usize)> {
    let cols = shape.column_lengths();
    cols.iter().enumerate().flat_map(|(c, &len)| (0..len).map(move |r| (r, c))).collect()
}

/// All fillings of `shape` with content `content` in the given class, ordered
/// lexicographically by column-reading word.
pub fn enumerate_tableaux(shape: &Partition, content: &Valences, class: TableauClass) -> Result<Vec<Filling>> {
    if shape.size() != content.n() {
        return Err(Error::SizeMismatch { shape: shape.size(), content: content.n() });
    }
    if class == TableauClass::Standard && !content.is_unit() {
        return Err(Error::InvalidValences("standard tableaux need content 1^n".into()));
    }
    let positions = column_reading_positions(shape);
    let mut grid: Vec<Vec<u32>> = shape.parts().iter().map(|&p| vec![0; p]).collect();
    let mut remaining: Vec<usize> = content.entries().to_vec();
    let mut out = Vec::new();

    fn fits(class: TableauClass, grid: &[Vec<u32>], r: usize, c: usize, v: u32) -> bool {
        let (row_strict, col_strict) = match class {
            TableauClass::AllFillings => return true,
            TableauClass::Standard => (true, true),
            TableauClass::RowStrict => (true, false),
            TableauClass::ColumnStrict => (false, true),
        };
        if c > 0 {
            let left = grid[r][c - 1];
            if (row_strict && left >= v) || (!row_strict && left > v) {
                return false;
            }
        }
        if r > 0 {
            let up = grid[r - 1][c];
            if (col_strict && up >= v) || (!col_strict && up > v) {
                return false;
            }
        }
        true
    }

    #[allow(clippy::too_many_arguments)]
    fn go(
        i: usize,
        positions: &[(usize, usize)],
        class: TableauClass,
        grid: &mut Vec<Vec<u32>>,
        remaining: &mut Vec<usize>,
        content: &Valences,
        shape: &Partition,
        out: &mut Vec<Filling>,
    ) {
        if i == positions.len() {
            out.push(Filling { shape: shape.clone(), rows: grid.clone(), content: content.clone() });
            return;
        }
        let (r, c) = positions[i];
        for k in 0..remaining.len() {
            if remaining[k] == 0 {
                continue;
            }
            let v = k as u32 + 1;
            if !fits(class, grid, r, c, v) {
                continue;
            }
            grid[r][c] = v;
            remaining[k] -= 1;
            go(i + 1, positions, class, grid, remaining, content, shape, out);
            remaining[k] += 1;
        }
        grid[r][c] = 0;
    }

    go(0, &positions, class, &mut grid, &mut remaining, content, shape, &mut out);
    Ok(out)
}

/// One surviving element `U` of the column-permutation orbit of a filling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignedOrbitElement {
    pub filling: Filling,
    /// Sign of the shortest column permutation taking `F` to `U`.
    pub sign: i32,
    /// Per letter, the sign of the permutation sorting its row indices decreasingly.
    pub tau_signs: Vec<i32>,
    /// Per letter, the partition built from its sorted row indices.
    pub lambdas: Vec<Partition>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignedOrbit {
    pub stab_order: u64,
    /// Size of the full orbit, before removing fillings with a repeated row entry.
    pub orbit_size: usize,
    pub elements: Vec<SignedOrbitElement>,
}

/// Orbit of `f` under permutations within columns, minus the fillings having a repeated
/// entry in some row, with the sign data entering the combinatorial fused Specht formula.
pub fn signed_orbit(f: &Filling) -> SignedOrbit {
    let cols = f.columns();
    let stab_order: u64 = cols
        .iter()
        .map(|col| {
            let mut sorted = col.clone();
            sorted.sort_unstable();
            let mut prod = 1u64;
            let mut run = 1u64;
            for w in sorted.windows(2) {
                if w[0] == w[1] {
                    run += 1;
                    prod *= run;
                } else {
                    run = 1;
                }
            }
            prod
        })
        .product();

    let choices: Vec<Vec<Vec<u32>>> = cols
        .iter()
        .map(|col| {
            let mut cur = col.clone();
            cur.sort_unstable();
            let mut all = vec![cur.clone()];
            while next_permutation(&mut cur) {
                all.push(cur.clone());
            }
            all
        })
        .collect();
    let col_signs: Vec<Vec<i32>> = cols
        .iter()
        .zip(&choices)
        .map(|(col, list)| list.iter().map(|u| matching_sign(col, u)).collect())
        .collect();

    let nrows = f.shape.len();
    let mut idx = vec![0usize; cols.len()];
    let mut orbit_size = 0usize;
    let mut elements = Vec::new();
    loop {
        orbit_size += 1;
        let mut rows: Vec<Vec<u32>> = f.shape.parts().iter().map(|&p| Vec::with_capacity(p)).collect();
        for (c, &i) in idx.iter().enumerate() {
            for (r, &v) in choices[c][i].iter().enumerate() {
                rows[r].push(v);
            }
        }
        debug_assert_eq!(rows.len(), nrows);
        let u = Filling { shape: f.shape.clone(), rows, content: f.content.clone() };
        if !u.has_repeated_row_entry() {
            let sign = idx.iter().enumerate().map(|(c, &i)| col_signs[c][i]).product();
            let (tau_signs, lambdas) = row_data(&u);
            elements.push(SignedOrbitElement { filling: u, sign, tau_signs, lambdas });
        }
        let mut c = 0;
        loop {
            if c == idx.len() {
                elements.sort_by(|a, b| a.filling.cmp_column_reading(&b.filling));
                return SignedOrbit { stab_order, orbit_size, elements };
            }
            idx[c] += 1;
            if idx[c] < choices[c].len() {
                break;
            }
            idx[c] = 0;
            c += 1;
        }
    }
}

/// Sign of the position-matching permutation taking column `from` to column `to`,
/// matching equal entries in order.
fn matching_sign(from: &[u32], to: &[u32]) -> i32 {
    let src: Vec<usize> = to
        .iter()
        .enumerate()
        .map(|(p, v)| {
            let occurrence = to[..p].iter().filter(|&&w| w == *v).count();
            from.iter()
                .enumerate()
                .filter(|(_, &w)| w == *v)
                .nth(occurrence)
                .map(|(q, _)| q)
                .expect("columns are rearrangements of each other")
        })
        .collect();
    inversion_sign(&src)
}

/// Per letter: sign of the sorting permutation of its one-based row indices (in
/// column-reading order) into decreasing order, and the partition with parts
/// `r_i - s + i - 1`.
fn row_data(u: &Filling) -> (Vec<i32>, Vec<Partition>) {
    let d = u.content.len();
    let mut rows_of: Vec<Vec<usize>> = vec![Vec::new(); d];
    for (r, c) in u.reading_positions() {
        rows_of[u.rows[r][c] as usize - 1].push(r + 1);
    }
    let mut signs = Vec::with_capacity(d);
    let mut lambdas = Vec::with_capacity(d);
    for rs in rows_of {
        let s = rs.len();
        let ascending_pairs = (0..s).flat_map(|i| (i + 1..s).map(move |j| (i, j))).filter(|&(i, j)| rs[i] < rs[j]).count();
        signs.push(if ascending_pairs % 2 == 0 { 1 } else { -1 });
        let mut ord = rs.clone();
        ord.sort_unstable_by(|a, b| b.cmp(a));
        let mut parts: Vec<usize> = ord.iter().enumerate().map(|(i, &r)| r + i - s).collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        lambdas.push(Partition(parts));
    }
    (signs, lambdas)
}

/// Planar pairing of `{1..2N}` read off a standard tableau of shape `(N,N)`: first-row
/// entries open, second-row entries close.
pub fn link_pattern(t: &Filling) -> Result<Vec<(usize, usize)>> {
    let parts = t.shape.parts();
    if parts.len() != 2 || parts[0] != parts[1] || !t.is_standard() {
        return Err(Error::WrongClass { expected: "standard (N,N)" });
    }
    let n = 2 * parts[0];
    let mut opener = vec![false; n + 1];
    for &a in &t.rows[0] {
        opener[a as usize] = true;
    }
    let mut stack = Vec::new();
    let mut pairs = Vec::new();
    for (x, &is_open) in opener.iter().enumerate().skip(1) {
        if is_open {
            stack.push(x);
        } else {
            let a = stack.pop().expect("standard tableau gives a balanced word");
            pairs.push((a, x));
        }
    }
    pairs.sort_unstable();
    Ok(pairs)
}

/// Inverse of [`link_pattern`].
pub fn from_link_pattern(pairs: &[(usize, usize)]) -> Result<Filling> {
    let mut top: Vec<u32> = pairs.iter().map(|&(a, b)| a.min(b) as u32).collect();
    let mut bottom: Vec<u32> = pairs.iter().map(|&(a, b)| a.max(b) as u32).collect();
    top.sort_unstable();
    bottom.sort_unstable();
    let t = Filling::new(vec![top, bottom])?;
    if !t.is_standard() || link_pattern(&t)? != {
        let mut p: Vec<(usize, usize)> = pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        p.sort_unstable();
        p
    } {
        return Err(Error::InvalidFilling("pairing is not planar".into()));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fl(s: &str) -> Filling {
        s.parse().unwrap()
    }

    fn all_compositions(n: usize) -> Vec<Valences> {
        (0..1u32 << (n - 1))
            .map(|mask| {
                let mut parts = vec![1usize];
                for i in 0..n - 1 {
                    if mask & (1 << i) != 0 {
                        parts.push(1);
                    } else {
                        *parts.last_mut().unwrap() += 1;
                    }
                }
                Valences::new(parts).unwrap()
            })
            .collect()
    }

    /// Brute force: every arrangement of the content multiset, filtered by predicate.
    fn brute(shape: &Partition, content: &Valences, pred: impl Fn(&Filling) -> bool) -> usize {
        let mut letters: Vec<u32> =
            content.entries().iter().enumerate().flat_map(|(k, &s)| std::iter::repeat_n(k as u32 + 1, s)).collect();
        let mut count = 0;
        loop {
            let mut it = letters.iter();
            let rows = shape.parts().iter().map(|&p| (0..p).map(|_| *it.next().unwrap()).collect()).collect();
            if pred(&Filling::new(rows).unwrap()) {
                count += 1;
            }
            if !next_permutation(&mut letters) {
                return count;
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| enumerate_partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        let p4: Vec<String> = enumerate_partitions(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(p4, vec!["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
    }

    #[test]
    fn dominance_examples() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        assert!(dominance_geq(&p("2,2"), &p("2,2")));
        assert!(dominance_geq(&p("2,2"), &p("2,1,1")));
        assert!(!dominance_geq(&p("1,1,1,1"), &p("2,2")));
    }

    #[test]
    fn transpose_is_involution() {
        for n in 1..=8 {
            for p in enumerate_partitions(n) {
                assert_eq!(p.transpose().transpose(), p);
            }
        }
    }

    #[test]
    fn parse_validation() {
        assert!("2,3".parse::<Partition>().is_err());
        assert!("2,0".parse::<Valences>().is_err());
        assert!("1,3;3".parse::<Filling>().is_err());
        assert!("1,2;3".parse::<Filling>().is_ok());
        assert!("1;2,3".parse::<Filling>().is_err());
        assert_eq!(fl("1,2;2,3").to_string(), "1,2;2,3");
        assert_eq!(fl("1,2;2,3").content().entries(), &[1, 2, 1]);
    }

    #[test]
    fn column_strict_count_for_four_doubled_points() {
        let shape: Partition = "4,4".parse().unwrap();
        let v: Valences = "2,2,2,2".parse().unwrap();
        let ts = enumerate_tableaux(&shape, &v, TableauClass::ColumnStrict).unwrap();
        let words: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
        assert_eq!(words, vec!["1,1,3,3;2,2,4,4", "1,1,2,3;2,3,4,4", "1,1,2,2;3,3,4,4"]);
    }

    #[test]
    fn standard_two_row_counts_are_catalan() {
        let catalan = [1, 2, 5, 14, 42];
        for n in 1..=5 {
            let shape = Partition::new(vec![n, n]).unwrap();
            let ts = enumerate_tableaux(&shape, &Valences::ones(2 * n), TableauClass::Standard).unwrap();
            assert_eq!(ts.len(), catalan[n - 1]);
        }
        let shape: Partition = "2,2".parse().unwrap();
        assert!(enumerate_tableaux(&shape, &"2,2".parse().unwrap(), TableauClass::Standard).is_err());
        assert!(enumerate_tableaux(&shape, &"2,1".parse().unwrap(), TableauClass::AllFillings).is_err());
    }

    #[test]
    fn enumeration_matches_brute_force_and_kostka() {
        for n in 1..=6 {
            for v in all_compositions(n) {
                for shape in enumerate_partitions(n) {
                    let get = |c| enumerate_tableaux(&shape, &v, c).unwrap();
                    let rs = get(TableauClass::RowStrict);
                    let cs = get(TableauClass::ColumnStrict);
                    if n <= 5 {
                        assert_eq!(rs.len(), brute(&shape, &v, |f| f.is_row_strict()));
                        assert_eq!(cs.len(), brute(&shape, &v, |f| f.is_column_strict()));
                        assert_eq!(get(TableauClass::AllFillings).len(), brute(&shape, &v, |_| true));
                    }
                    assert_eq!(rs.is_empty(), !dominance_geq(&shape.transpose(), &v.ordered()));
                    assert_eq!(cs.is_empty(), !dominance_geq(&shape, &v.ordered()));
                    let cs_t = enumerate_tableaux(&shape.transpose(), &v, TableauClass::ColumnStrict).unwrap();
                    assert_eq!(rs.len(), cs_t.len());
                    assert!(rs.windows(2).all(|w| w[0].cmp_column_reading(&w[1]) == Ordering::Less));
                }
            }
        }
    }

    #[test]
    fn sum_of_squares_of_standard_counts() {
        let mut fact = 1usize;
        for n in 1..=7 {
            fact *= n;
            let total: usize = enumerate_partitions(n)
                .iter()
                .map(|p| enumerate_tableaux(p, &Valences::ones(n), TableauClass::Standard).unwrap().len().pow(2))
                .sum();
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn tilde_examples() {
        let f = Filling::with_content(vec![vec![1, 3, 4], vec![3, 3, 1], vec![2]], &"2,1,3,1".parse().unwrap()).unwrap();
        assert_eq!(f.tilde().to_string(), "1,5,7;4,6,2;3");
        let t = fl("1,2,3;1,3,4;3");
        assert_eq!(t.tilde().to_string(), "1,3,6;2,5,7;4");
        let n = fl("1,3;2,4");
        assert_eq!(n.tilde(), n);
    }

    #[test]
    fn tilde_is_injective_and_standard_on_row_strict() {
        for n in 1..=6 {
            for v in all_compositions(n) {
                for shape in enumerate_partitions(n) {
                    let all = enumerate_tableaux(&shape, &v, TableauClass::AllFillings).unwrap();
                    let mut images: Vec<String> = all.iter().map(|f| f.tilde().to_string()).collect();
                    images.sort();
                    images.dedup();
                    assert_eq!(images.len(), all.len());
                    for f in all.iter().filter(|f| f.is_row_strict()) {
                        assert!(f.tilde().is_standard(), "{f}");
                    }
                }
            }
        }
    }

    #[test]
    fn orbit_examples() {
        let o = signed_orbit(&fl("1,2;2,3"));
        assert_eq!((o.stab_order, o.orbit_size, o.elements.len()), (1, 4, 2));
        let own = o.elements.iter().find(|e| e.filling == fl("1,2;2,3")).unwrap();
        assert_eq!(own.sign, 1);
        assert_eq!(own.lambdas, vec![Partition::empty(), Partition::empty(), Partition(vec![1])]);
        let other = o.elements.iter().find(|e| e.filling == fl("2,3;1,2")).unwrap();
        assert_eq!(other.sign, 1);
        assert_eq!(other.tau_signs[1], -1);

        let o = signed_orbit(&fl("2,3;1,2;2,3"));
        assert_eq!((o.stab_order, o.orbit_size, o.elements.len()), (4, 9, 3));
        let own = o.elements.iter().find(|e| e.filling == fl("2,3;1,2;2,3")).unwrap();
        assert_eq!(own.tau_signs, vec![1, 1, -1]);
        assert_eq!(own.lambdas, vec![Partition(vec![1]), Partition::empty(), Partition(vec![1])]);
    }

    #[test]
    fn orbit_stabilizer_and_sign_round_trip() {
        for n in 1..=5 {
            for v in all_compositions(n) {
                for shape in enumerate_partitions(n) {
                    let q_order: u64 =
                        shape.column_lengths().iter().map(|&l| (1..=l as u64).product::<u64>()).product();
                    for f in enumerate_tableaux(&shape, &v, TableauClass::AllFillings).unwrap() {
                        let o = signed_orbit(&f);
                        assert_eq!(o.stab_order * o.orbit_size as u64, q_order);
                        for e in &o.elements {
                            let back = signed_orbit(&e.filling);
                            let g = back.elements.iter().find(|b| b.filling == f);
                            if let Some(g) = g {
                                assert_eq!(g.sign * e.sign, 1);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn link_patterns() {
        assert_eq!(link_pattern(&fl("1,3;2,4")).unwrap(), vec![(1, 2), (3, 4)]);
        assert_eq!(link_pattern(&fl("1,2;3,4")).unwrap(), vec![(1, 4), (2, 3)]);
        assert_eq!(link_pattern(&fl("1;2")).unwrap(), vec![(1, 2)]);
        assert!(link_pattern(&fl("1,2;3")).is_err());
        for n in 1..=5 {
            let shape = Partition::new(vec![n, n]).unwrap();
            for t in enumerate_tableaux(&shape, &Valences::ones(2 * n), TableauClass::Standard).unwrap() {
                assert_eq!(from_link_pattern(&link_pattern(&t).unwrap()).unwrap(), t);
            }
        }
        assert!(from_link_pattern(&[(1, 3), (2, 4)]).is_err());
    }
}
