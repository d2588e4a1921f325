//! Permutation diagrams, rank and co-rank functions, essential sets.
//!
//! Everything is in matrix coordinates: row `i` runs downward and indexes
//! positions, column `j` runs rightward and indexes values, both 1-based. The
//! graph of `w` is the set of points `(i, w(i))`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A cell of `Ess(w)` with its co-rank `t_w(i, j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EssentialCell {
    pub i: usize,
    pub j: usize,
    #[serde(rename = "t")]
    pub corank: usize,
}

/// `r_w(i, j) = #{k <= i : w(k) <= j}` and `t_w(i, j) = min(i, j) - r_w(i, j)`
/// for `1 <= i, j <= n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankTable {
    n: usize,
    r: Vec<u16>,
    t: Vec<u16>,
}

impl RankTable {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rank(&self, i: usize, j: usize) -> usize {
        self.r[(i - 1) * self.n + (j - 1)] as usize
    }

    #[inline]
    pub fn corank(&self, i: usize, j: usize) -> usize {
        self.t[(i - 1) * self.n + (j - 1)] as usize
    }

    /// Co-rank values in row-major order.
    pub fn coranks(&self) -> &[u16] {
        &self.t
    }
}

/// Single prefix-sum sweep over the permutation matrix.
pub fn rank_table(w: &Permutation) -> RankTable {
    let n = w.rank();
    let mut r = vec![0u16; n * n];
    for i in 1..=n {
        let wi = w.get(i);
        for j in 1..=n {
            let above = if i > 1 { r[(i - 2) * n + (j - 1)] } else { 0 };
            r[(i - 1) * n + (j - 1)] = above + u16::from(wi <= j);
        }
    }
    let t = (0..n * n)
        .map(|idx| {
            let (i, j) = (idx / n + 1, idx % n + 1);
            i.min(j) as u16 - r[idx]
        })
        .collect();
    RankTable { n, r, t }
}

/// `{(i, j) : j < w(i) and i < w^{-1}(j)}`, sorted row-major. Its size is
/// `length(w)`.
pub fn diagram(w: &Permutation) -> Vec<(usize, usize)> {
    let n = w.rank();
    let inv = w.inverse();
    let mut cells = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if j < w.get(i) && i < inv.get(j) {
                cells.push((i, j));
            }
        }
    }
    cells
}

/// `Ess(w)` from the four defining inequalities, with co-ranks attached.
pub fn essential_set(w: &Permutation) -> Vec<EssentialCell> {
    let n = w.rank();
    let inv = w.inverse();
    let table = rank_table(w);
    let mut out = Vec::new();
    for i in 1..n {
        for j in 1..n {
            if i < inv.get(j) && j < w.get(i) && w.get(i + 1) <= j && inv.get(j + 1) <= i {
                out.push(EssentialCell {
                    i,
                    j,
                    corank: table.corank(i, j),
                });
            }
        }
    }
    out
}

/// `Ess(w)` as the south-east corners of [`diagram`]: diagram cells whose
/// southern and eastern neighbours are not in the diagram.
pub fn essential_set_from_diagram(w: &Permutation) -> Vec<EssentialCell> {
    let n = w.rank();
    let cells = diagram(w);
    let mut in_diagram = vec![false; (n + 2) * (n + 2)];
    for &(i, j) in &cells {
        in_diagram[i * (n + 2) + j] = true;
    }
    let table = rank_table(w);
    cells
        .iter()
        .filter(|&&(i, j)| !in_diagram[(i + 1) * (n + 2) + j] && !in_diagram[i * (n + 2) + j + 1])
        .map(|&(i, j)| EssentialCell {
            i,
            j,
            corank: table.corank(i, j),
        })
        .collect()
}

/// `t_u <= t_w` pointwise, which holds iff `u <= w` in Bruhat order.
pub fn corank_dominates(u: &Permutation, w: &Permutation) -> Result<bool> {
    if u.rank() != w.rank() {
        return Err(Error::RankMismatch(u.rank(), w.rank()));
    }
    let (tu, tw) = (rank_table(u), rank_table(w));
    Ok(tu.t.iter().zip(&tw.t).all(|(a, b)| a <= b))
}

/// ASCII picture of the diagram: ` o ` graph points, ` x ` diagram cells,
/// `[x]` essential cells, ` . ` everything else. One line per row.
pub fn render_diagram(w: &Permutation) -> String {
    let n = w.rank();
    let cells = diagram(w);
    let ess = essential_set(w);
    let mut out = String::new();
    for i in 1..=n {
        for j in 1..=n {
            let glyph = if w.get(i) == j {
                " o "
            } else if ess.iter().any(|c| c.i == i && c.j == j) {
                "[x]"
            } else if cells.contains(&(i, j)) {
                " x "
            } else {
                " . "
            };
            out.push_str(glyph);
        }
        out.push('\n');
    }
    out
}

/// The co-rank table as text, essential cells boxed with `[ ]`.
pub fn render_coranks(w: &Permutation) -> String {
    let n = w.rank();
    let table = rank_table(w);
    let ess = essential_set(w);
    let mut out = String::new();
    for i in 1..=n {
        for j in 1..=n {
            let t = table.corank(i, j);
            if ess.iter().any(|c| c.i == i && c.j == j) {
                let _ = write!(out, "[{t}]");
            } else {
                let _ = write!(out, " {t} ");
            }
        }
        out.push('\n');
    }
    out
}
