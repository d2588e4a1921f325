//! Bigrassmannian permutations: exactly one left descent and exactly one
//! right descent.
//!
//! They are parameterized by triples `(i, j, k)` with `1 <= i, j <= n-1` and
//! `0 <= k <= min{i-1, j-1, n-1-i, n-1-j}`. For `i <= j`
//!
//! ```text
//! b(i, j, k) = (s_i s_{i+1} ... s_{j+k}) (s_{i-1} ... s_{j+k-1}) ... (s_{i-k} ... s_j)
//! ```
//!
//! and `b(i, j, k) = b(j, i, k)^{-1}` for `j < i`. The left descent of
//! `b(i, j, k)` is `i`, the right descent is `j`.

use serde::Serialize;

use crate::cells::{cell_element, CellElement};
use crate::error::{Error, Result};
use crate::fulton::{rank_table, RankTable};
use crate::perm::{all_permutations, descents, Permutation, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BigrassTriple {
    pub n: usize,
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl BigrassTriple {
    pub fn new(n: usize, i: usize, j: usize, k: usize) -> Result<Self> {
        let ok = n >= 2 && (1..n).contains(&i) && (1..n).contains(&j) && k <= max_depth(n, i, j);
        if ok {
            Ok(BigrassTriple { n, i, j, k })
        } else {
            Err(Error::TripleOutOfBounds { n, i, j, k })
        }
    }
}

/// `min{i-1, j-1, n-1-i, n-1-j}`, the largest admissible `k`.
fn max_depth(n: usize, i: usize, j: usize) -> usize {
    (i - 1).min(j - 1).min(n - 1 - i).min(n - 1 - j)
}

/// Every valid triple for `S_n`, ordered by `(i, j, k)`.
pub fn triples(n: usize) -> Vec<BigrassTriple> {
    let mut out = Vec::new();
    for i in 1..n {
        for j in 1..n {
            for k in 0..=max_depth(n, i, j) {
                out.push(BigrassTriple { n, i, j, k });
            }
        }
    }
    out
}

pub fn is_bigrassmannian(w: &Permutation) -> bool {
    descents(w, Side::Left).len() == 1 && descents(w, Side::Right).len() == 1
}

/// Reference enumeration of `B_n`: filter `S_n` on descent counts.
pub fn enumerate_bigrassmannian(n: usize) -> Vec<Permutation> {
    all_permutations(n)
        .into_iter()
        .filter(is_bigrassmannian)
        .collect()
}

/// The word of `b(i, j, k)` for `i <= j`.
fn word_upper(i: usize, j: usize, k: usize) -> Vec<usize> {
    (0..=k).flat_map(|m| (i - m)..=(j + k - m)).collect()
}

pub fn b_element(t: &BigrassTriple) -> Permutation {
    let BigrassTriple { n, i, j, k } = *t;
    if i <= j {
        Permutation::from_word(n, &word_upper(i, j, k)).expect("triple bounds keep letters in range")
    } else {
        Permutation::from_word(n, &word_upper(j, i, k))
            .expect("triple bounds keep letters in range")
            .inverse()
    }
}

/// Recovers `(i, j, k)` from a bigrassmannian `w`: `i`, `j` are its left and
/// right descents and `k + 1 = t_w(j, i)`.
pub fn triple_of(w: &Permutation) -> Result<BigrassTriple> {
    let left = descents(w, Side::Left);
    let right = descents(w, Side::Right);
    if left.len() != 1 || right.len() != 1 {
        return Err(Error::NotBigrassmannian(w.to_string()));
    }
    let (i, j) = (*left.first().unwrap(), *right.first().unwrap());
    let t = rank_table(w).corank(j, i);
    BigrassTriple::new(w.rank(), i, j, t - 1)
}

/// `Φ(w) = w_{i,j}` where `i`, `j` are the left and right descents of `w`.
pub fn phi(w: &Permutation) -> Result<CellElement> {
    let left = descents(w, Side::Left);
    let right = descents(w, Side::Right);
    if left.len() != 1 || right.len() != 1 {
        return Err(Error::NotBigrassmannian(w.to_string()));
    }
    cell_element(w.rank(), *left.first().unwrap(), *right.first().unwrap())
}

/// `B_n^{(i,j)}` as the chain `b(i, j, 0) < b(i, j, 1) < ...`.
pub fn fiber(n: usize, i: usize, j: usize) -> Result<Vec<Permutation>> {
    BigrassTriple::new(n, i, j, 0)?;
    Ok((0..=max_depth(n, i, j))
        .map(|k| b_element(&BigrassTriple { n, i, j, k }))
        .collect())
}

fn dominated(small: &RankTable, big: &RankTable) -> bool {
    small.coranks().iter().zip(big.coranks()).all(|(a, b)| a <= b)
}

/// Triples of `B(x) = {y ∈ B_n : y <= x}`, in `(i, j, k)` order.
pub fn below_triples(x: &Permutation) -> Vec<BigrassTriple> {
    let tx = rank_table(x);
    triples(x.rank())
        .into_iter()
        .filter(|t| dominated(&rank_table(&b_element(t)), &tx))
        .collect()
}

/// `B(x)`.
pub fn below(x: &Permutation) -> Vec<Permutation> {
    below_triples(x).iter().map(b_element).collect()
}

/// Triples of `BM(x)`, the Bruhat-maximal elements of `B(x)`.
pub fn bruhat_maximal_below_triples(x: &Permutation) -> Vec<BigrassTriple> {
    let below = below_triples(x);
    let tables: Vec<RankTable> = below.iter().map(|t| rank_table(&b_element(t))).collect();
    below
        .iter()
        .enumerate()
        .filter(|&(a, _)| {
            !tables
                .iter()
                .enumerate()
                .any(|(b, tb)| a != b && dominated(&tables[a], tb))
        })
        .map(|(_, t)| *t)
        .collect()
}

/// `BM(x)`.
pub fn bruhat_maximal_below(x: &Permutation) -> Vec<Permutation> {
    bruhat_maximal_below_triples(x).iter().map(b_element).collect()
}

/// Row of the `bigrassmannian` listing.
#[derive(Debug, Clone, Serialize)]
pub struct BigrassRow {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub perm: Permutation,
    pub length: usize,
    pub left_descent: usize,
    pub right_descent: usize,
    pub phi: Option<Permutation>,
}

pub fn bigrassmannian_rows(n: usize) -> Vec<BigrassRow> {
    triples(n)
        .iter()
        .map(|t| {
            let perm = b_element(t);
            BigrassRow {
                i: t.i,
                j: t.j,
                k: t.k,
                length: perm.length(),
                left_descent: t.i,
                right_descent: t.j,
                phi: phi(&perm).ok().map(|c| c.perm),
                perm,
            }
        })
        .collect()
}
