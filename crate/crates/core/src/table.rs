//! Cayley tables over the carrier `{0, .., n-1}`.

use std::fmt;

use crate::error::{Error, Result};

/// An element of a finite carrier, identified with its index.
pub type Element = usize;

/// A square `n x n` table with entries in `0..n`, stored row-major.
///
/// `get(i, j)` is `i * j` for an operation table and `R(i, j)` for a map
/// table; the two roles share this representation and differ only in the
/// axioms the validators impose.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Table {
    n: usize,
    entries: Vec<Element>,
}

/// A binary operation table (`*`, `*1`, `*2` and their right inverses).
pub type OpTable = Table;
/// A binary map table (`R1`, `R2`).
pub type MapTable = Table;

impl Table {
    pub fn from_fn(n: usize, mut f: impl FnMut(Element, Element) -> Element) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let value = f(i, j);
                if value >= n {
                    return Err(Error::OutOfRange { row: i, col: j, value, n });
                }
                entries.push(value);
            }
        }
        Ok(Table { n, entries })
    }

    pub fn from_rows<R: AsRef<[Element]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        for (row, r) in rows.iter().enumerate() {
            if r.as_ref().len() != n {
                return Err(Error::NotSquare { row, len: r.as_ref().len(), expected: n });
            }
        }
        Self::from_fn(n, |i, j| rows[i].as_ref()[j])
    }

    /// Builds a table from a row-major entry vector of length `n * n`.
    pub fn from_entries(n: usize, entries: Vec<Element>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if entries.len() != n * n {
            return Err(Error::NotSquare { row: entries.len() / n, len: entries.len() % n, expected: n });
        }
        if let Some(pos) = entries.iter().position(|&v| v >= n) {
            return Err(Error::OutOfRange { row: pos / n, col: pos % n, value: entries[pos], n });
        }
        Ok(Table { n, entries })
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: Element, j: Element) -> Element {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[Element] {
        &self.entries
    }

    pub fn row(&self, i: Element) -> &[Element] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Element]> {
        self.entries.chunks(self.n)
    }

    /// Returns a copy with the single entry `(i, j)` replaced.
    pub fn with_entry(&self, i: Element, j: Element, value: Element) -> Result<Self> {
        if i >= self.n || j >= self.n {
            return Err(Error::ElementOutOfRange { element: i.max(j), n: self.n });
        }
        if value >= self.n {
            return Err(Error::OutOfRange { row: i, col: j, value, n: self.n });
        }
        let mut t = self.clone();
        t.entries[i * self.n + j] = value;
        Ok(t)
    }

    /// Smallest column `j` whose map `i -> i * j` is not a bijection.
    pub fn first_non_bijective_column(&self) -> Option<Element> {
        let mut seen = vec![false; self.n];
        (0..self.n).find(|&j| {
            seen.iter_mut().for_each(|s| *s = false);
            (0..self.n).any(|i| std::mem::replace(&mut seen[self.get(i, j)], true))
        })
    }

    /// Transports the table along a permutation: `out(p(i), p(j)) = p(self(i, j))`.
    pub fn relabel(&self, perm: &[Element]) -> Self {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[perm[i] * n + perm[j]] = perm[self.get(i, j)];
            }
        }
        Table { n, entries }
    }

    /// Writes the rows as space-separated integers, one row per line,
    /// without a trailing newline.
    pub fn write_block(&self, out: &mut impl fmt::Write) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                out.write_char('\n')?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    out.write_char(' ')?;
                }
                write!(out, "{v}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_block(f)
    }
}

/// Derives the right-inverse table `b` of `t`, so that
/// `b(t(x, y), y) = x` and `t(b(x, y), y) = x`.
pub fn right_inverse_table(t: &OpTable) -> Result<OpTable> {
    if let Some(column) = t.first_non_bijective_column() {
        return Err(Error::NonBijectiveColumn { column });
    }
    let n = t.size();
    let mut entries = vec![0; n * n];
    for y in 0..n {
        for x in 0..n {
            entries[t.get(x, y) * n + y] = x;
        }
    }
    Ok(Table { n, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_rows_rejects_ragged_and_out_of_range() {
        assert_eq!(Table::from_rows(&[vec![0, 1], vec![0]]), Err(Error::NotSquare { row: 1, len: 1, expected: 2 }));
        assert_eq!(
            Table::from_rows(&[vec![0, 2], vec![0, 1]]),
            Err(Error::OutOfRange { row: 0, col: 1, value: 2, n: 2 })
        );
        assert_eq!(Table::from_rows::<Vec<usize>>(&[]), Err(Error::EmptyCarrier));
    }

    #[test]
    fn trivial_quandle_is_self_inverse() {
        let t = Table::from_fn(4, |i, _| i).unwrap();
        assert_eq!(right_inverse_table(&t).unwrap(), t);
    }

    #[test]
    fn inverse_of_affine_z10() {
        let t = Table::from_fn(10, |x, y| (3 * x + 8 * y) % 10).unwrap();
        let expected = Table::from_fn(10, |x, y| (7 * x + 4 * y) % 10).unwrap();
        assert_eq!(right_inverse_table(&t).unwrap(), expected);
    }

    #[test]
    fn inverse_of_affine_z60() {
        let t = Table::from_fn(60, |x, y| (7 * x + 54 * y) % 60).unwrap();
        let expected = Table::from_fn(60, |x, y| (43 * x + 18 * y) % 60).unwrap();
        assert_eq!(right_inverse_table(&t).unwrap(), expected);
    }

    #[test]
    fn inverse_names_offending_column() {
        let t = Table::from_rows(&[[0, 1, 2], [1, 1, 0], [2, 0, 1]]).unwrap();
        assert_eq!(right_inverse_table(&t), Err(Error::NonBijectiveColumn { column: 1 }));
    }

    #[test]
    fn block_rendering() {
        let t = Table::from_rows(&[[0, 1], [1, 0]]).unwrap();
        assert_eq!(t.to_string(), "0 1\n1 0");
    }
}
