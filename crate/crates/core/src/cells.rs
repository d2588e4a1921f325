//! The penultimate two-sided cell `J`, i.e. the permutations of RS shape
//! `(2, 1^{n-2})`.
//!
//! Every element of `J` has exactly one left ascent `i` and one right ascent
//! `j`, and each pair `(i, j)` occurs exactly once; the element is written
//! `w_{i,j}`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::perm::{all_permutations, ascents, bruhat_leq, rs_shape, Permutation, Side, YoungShape};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellElement {
    pub n: usize,
    /// unique left ascent
    pub i: usize,
    /// unique right ascent
    pub j: usize,
    pub perm: Permutation,
}

impl CellElement {
    pub fn length(&self) -> usize {
        self.perm.length()
    }
}

#[derive(Debug)]
pub struct PenultimateCell {
    n: usize,
    /// row-major in `(i, j)`
    elements: Vec<CellElement>,
}

impl PenultimateCell {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[CellElement] {
        &self.elements
    }

    pub fn get(&self, i: usize, j: usize) -> Result<&CellElement> {
        check_indices(self.n, i, j)?;
        Ok(&self.elements[(i - 1) * (self.n - 1) + (j - 1)])
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Looks up the cell element equal to `w`, if any.
    pub fn find(&self, w: &Permutation) -> Option<&CellElement> {
        self.elements.iter().find(|c| &c.perm == w)
    }
}

/// Minimal `a`-value on `J`: `(n-1)(n-2)/2 = length(w_{1,1})`.
pub fn a_value(n: usize) -> usize {
    (n - 1) * (n - 2) / 2
}

fn check_indices(n: usize, i: usize, j: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::RankTooSmall { n, min: 3 });
    }
    if i == 0 || j == 0 || i >= n || j >= n {
        return Err(Error::CellIndexOutOfRange { n, i, j });
    }
    Ok(())
}

fn build_cell(n: usize) -> PenultimateCell {
    let hook = YoungShape::hook_two(n);
    let mut slots: Vec<Option<CellElement>> = vec![None; (n - 1) * (n - 1)];
    for w in all_permutations(n) {
        if rs_shape(&w) != hook {
            continue;
        }
        let left = ascents(&w, Side::Left);
        let right = ascents(&w, Side::Right);
        assert!(
            left.len() == 1 && right.len() == 1,
            "{w:?} in the hook cell must have one ascent on each side"
        );
        let (i, j) = (*left.first().unwrap(), *right.first().unwrap());
        let slot = &mut slots[(i - 1) * (n - 1) + (j - 1)];
        assert!(slot.is_none(), "two cell elements with ascents ({i}, {j})");
        *slot = Some(CellElement { n, i, j, perm: w });
    }
    let elements = slots
        .into_iter()
        .map(|s| s.expect("every ascent pair occurs in the hook cell"))
        .collect();
    PenultimateCell { n, elements }
}

/// The cell `J` of `S_n` (`n >= 3`), computed once per rank by filtering
/// `S_n` on RS shape and cached for the life of the process.
pub fn penultimate_cell(n: usize) -> Result<Arc<PenultimateCell>> {
    if n < 3 {
        return Err(Error::RankTooSmall { n, min: 3 });
    }
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<PenultimateCell>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(cell) = cache.lock().unwrap().get(&n) {
        return Ok(Arc::clone(cell));
    }
    let cell = Arc::new(build_cell(n));
    cache.lock().unwrap().entry(n).or_insert_with(|| Arc::clone(&cell));
    Ok(cell)
}

/// `w_{i,j}`.
pub fn cell_element(n: usize, i: usize, j: usize) -> Result<CellElement> {
    check_indices(n, i, j)?;
    Ok(penultimate_cell(n)?.get(i, j)?.clone())
}

/// `d(i, j) = min{i-1, j-1, n-1-i, n-1-j}`.
pub fn d_value(n: usize, i: usize, j: usize) -> Result<usize> {
    check_indices(n, i, j)?;
    Ok((i - 1).min(j - 1).min(n - 1 - i).min(n - 1 - j))
}

/// `p_{e, w_{i,j}} = v^l + v^{l-2} + ... + v^{l-2d}` with `l = length(w_{i,j})`.
pub fn closed_form_p(n: usize, i: usize, j: usize) -> Result<LaurentPolynomial> {
    let d = d_value(n, i, j)?;
    let l = cell_element(n, i, j)?.length() as i32;
    LaurentPolynomial::from_terms((0..=d as i32).map(|m| (l - 2 * m, 1)))
}

/// Whether `a` and `b` are joined in the Bruhat graph of `J`: one covers the
/// other in Bruhat order (comparable, lengths differing by one).
pub fn cell_bruhat_adjacent(a: &CellElement, b: &CellElement) -> Result<bool> {
    if a.n != b.n {
        return Err(Error::RankMismatch(a.n, b.n));
    }
    let (la, lb) = (a.length(), b.length());
    if la + 1 == lb {
        bruhat_leq(&a.perm, &b.perm)
    } else if lb + 1 == la {
        bruhat_leq(&b.perm, &a.perm)
    } else {
        Ok(false)
    }
}

/// Row of the JSON cell dump.
#[derive(Debug, Clone, Serialize)]
pub struct CellRow {
    pub i: usize,
    pub j: usize,
    pub perm: Permutation,
    pub length: usize,
    pub p: LaurentPolynomial,
}

pub fn cell_rows(n: usize) -> Result<Vec<CellRow>> {
    let cell = penultimate_cell(n)?;
    cell.elements()
        .iter()
        .map(|c| {
            Ok(CellRow {
                i: c.i,
                j: c.j,
                perm: c.perm.clone(),
                length: c.length(),
                p: closed_form_p(n, c.i, c.j)?,
            })
        })
        .collect()
}
