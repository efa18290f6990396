//! Reader/writer for the alist interchange format for sparse parity-check
//! matrices: dimensions, maximum degrees, per-node degree lists, then
//! 1-indexed neighbor lists (columns first, then rows). Zero-padded neighbor
//! entries, as emitted by some tools, are accepted and ignored on read.

use crate::sim::SparseParity;
use crate::{Error, Result};

/// Serializes a parity-check matrix as alist text.
pub fn write_alist(h: &SparseParity) -> String {
    let n = h.cols();
    let m = h.rows();
    let col_degs: Vec<usize> = (0..n).map(|c| h.col_neighbors(c).len()).collect();
    let row_degs: Vec<usize> = (0..m).map(|r| h.row_neighbors(r).len()).collect();
    let mut out = String::new();
    out.push_str(&format!("{n} {m}\n"));
    out.push_str(&format!(
        "{} {}\n",
        col_degs.iter().max().copied().unwrap_or(0),
        row_degs.iter().max().copied().unwrap_or(0)
    ));
    let join = |v: &[usize]| {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    out.push_str(&join(&col_degs));
    out.push('\n');
    out.push_str(&join(&row_degs));
    out.push('\n');
    for c in 0..n {
        let neigh: Vec<usize> = h.col_neighbors(c).iter().map(|&r| r as usize + 1).collect();
        out.push_str(&join(&neigh));
        out.push('\n');
    }
    for r in 0..m {
        let neigh: Vec<usize> = h.row_neighbors(r).iter().map(|&c| c as usize + 1).collect();
        out.push_str(&join(&neigh));
        out.push('\n');
    }
    out
}

/// Parses alist text into a parity-check matrix. Neighbor lists are
/// line-oriented, so both the degree-exact and the zero-padded layout parse.
pub fn read_alist(text: &str) -> Result<SparseParity> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let mut ints = |what: &str| -> Result<Vec<usize>> {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("alist: missing {what}")))?;
        line.split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("alist: bad integer '{tok}' in {what}")))
            })
            .collect()
    };
    let header = ints("size header")?;
    let [n, m] = header[..] else {
        return Err(Error::Parse("alist: size header needs two values".into()));
    };
    let _ = ints("max degrees")?;
    let col_degs = ints("column degrees")?;
    let row_degs = ints("row degrees")?;
    if col_degs.len() != n || row_degs.len() != m {
        return Err(Error::Parse("alist: degree list length mismatch".into()));
    }

    let mut read_lists = |count: usize,
                          degs: &[usize],
                          limit: usize,
                          what: &str|
     -> Result<Vec<Vec<u32>>> {
        let mut adj = Vec::with_capacity(count);
        for (i, &deg) in degs.iter().enumerate().take(count) {
            let entries = ints(what)?;
            let neighbors: Vec<u32> = entries
                .iter()
                .filter(|&&x| x != 0)
                .map(|&x| {
                    if x > limit {
                        Err(Error::Parse(format!(
                            "alist: {what} index {x} exceeds {limit}"
                        )))
                    } else {
                        Ok((x - 1) as u32)
                    }
                })
                .collect::<Result<_>>()?;
            if neighbors.len() != deg {
                return Err(Error::Parse(format!(
                    "alist: {what} {i} lists {} neighbors, degree says {deg}",
                    neighbors.len()
                )));
            }
            adj.push(neighbors);
        }
        Ok(adj)
    };
    let col_adj = read_lists(n, &col_degs, m, "column list")?;
    let row_adj = read_lists(m, &row_degs, n, "row list")?;
    SparseParity::from_adjacency(m, n, row_adj, col_adj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::BitMatrix;
    use crate::qc::{example1_exponent, lift};

    #[test]
    fn roundtrip_example1() {
        let h = SparseParity::from_bitmatrix(&lift(&example1_exponent()));
        let text = write_alist(&h);
        let back = read_alist(&text).unwrap();
        assert_eq!(back.to_bitmatrix(), h.to_bitmatrix());
    }

    #[test]
    fn reads_zero_padded_lists() {
        // 2x3 matrix with rows 110 / 011, neighbor lists padded to the max
        // degree with zeros.
        let text = "3 2\n2 2\n1 2 1\n2 2\n1 0\n1 2\n2 0\n1 2 0\n2 3 0\n";
        let h = read_alist(text).unwrap();
        let m = h.to_bitmatrix();
        let expect = BitMatrix::from_strings(&["110", "011"]).unwrap();
        assert_eq!(m, expect);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(read_alist("2 1\n1 2\n1 1\n2\n5\n9\n1 2\n").is_err());
        assert!(read_alist("").is_err());
    }
}
