//! Shared reader for the `n=<int>` + blank-line-separated integer block format.

use crate::error::{Error, Result};
use crate::table::{Element, Table};

/// A parsed block file: carrier size plus the raw rows of every block,
/// each row tagged with its 1-based source line.
pub(crate) struct BlockFile {
    pub n: usize,
    pub blocks: Vec<Vec<(usize, Vec<Element>)>>,
}

pub(crate) fn read_blocks(text: &str) -> Result<BlockFile> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let (header_line, header) =
        lines.by_ref().find(|(_, l)| !l.is_empty()).ok_or_else(|| Error::parse(1, 1, "missing `n=<int>` header"))?;
    let n = header
        .strip_prefix("n=")
        .and_then(|v| v.trim().parse::<usize>().ok())
        .ok_or_else(|| Error::parse(header_line, 1, format!("expected `n=<int>`, found `{header}`")))?;
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }

    let mut blocks: Vec<Vec<(usize, Vec<Element>)>> = Vec::new();
    let mut current = Vec::new();
    for (line_no, line) in lines {
        if line.is_empty() {
            if !current.is_empty() {
                blocks.push(std::mem::take(&mut current));
            }
            continue;
        }
        let mut row = Vec::new();
        let mut column = 1;
        for token in line.split_whitespace() {
            let value = token
                .parse::<i64>()
                .map_err(|_| Error::parse(line_no, column, format!("expected an integer, found `{token}`")))?;
            if value < 0 || value as usize >= n {
                let row_idx = current.len();
                return Err(Error::OutOfRange { row: row_idx, col: row.len(), value: value.max(0) as usize, n });
            }
            row.push(value as usize);
            column += token.len() + 1;
        }
        current.push((line_no, row));
    }
    if !current.is_empty() {
        blocks.push(current);
    }
    Ok(BlockFile { n, blocks })
}

/// Interprets one block as an `n x n` table.
pub(crate) fn block_table(n: usize, index: usize, block: &[(usize, Vec<Element>)]) -> Result<Table> {
    if block.len() != n {
        let line = block.first().map_or(0, |(l, _)| *l);
        return Err(Error::parse(line, 1, format!("block {} has {} rows, expected {n}", index + 1, block.len())));
    }
    let rows: Vec<&[Element]> = block.iter().map(|(_, r)| r.as_slice()).collect();
    Table::from_rows(&rows)
}
