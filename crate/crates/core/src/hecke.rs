//! The Hecke algebra of `S_n` over `Z[v, v^{-1}]` and its Kazhdan-Lusztig
//! basis.
//!
//! Normalization: generators `H_i` satisfy `(H_i + v)(H_i - v^{-1}) = 0`, the
//! bar involution sends `v ↦ v^{-1}` and `H_i ↦ H_i^{-1} = H_i + (v - v^{-1})`,
//! and the KL basis element is the unique bar-invariant
//! `\underline{H}_w = H_w + Σ_{x < w} p_{x,w} H_x` with `p_{x,w} ∈ vZ[v]`.
//!
//! This module makes no use of any closed form; it is the brute-force oracle
//! the rest of the crate is checked against.

use std::collections::BTreeMap;
use std::ops::{Add, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::perm::{all_permutations, reduced_word, Permutation, Side};

/// An element of the Hecke algebra in standard-basis coordinates.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Permutation, LaurentPolynomial>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The standard basis element `H_w`.
    pub fn standard(w: &Permutation) -> Self {
        let mut h = Self::zero(w.rank());
        h.terms.insert(w.clone(), LaurentPolynomial::one());
        h
    }

    /// `c H_w`.
    pub fn term(w: &Permutation, c: LaurentPolynomial) -> Self {
        let mut h = Self::zero(w.rank());
        if !c.is_zero() {
            h.terms.insert(w.clone(), c);
        }
        h
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coordinate of `H_w`.
    pub fn coefficient(&self, w: &Permutation) -> LaurentPolynomial {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &LaurentPolynomial)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn accumulate(&mut self, w: Permutation, c: &LaurentPolynomial) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        debug_assert_eq!(w.rank(), self.n);
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().checked_add(c)?;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.accumulate(w.clone(), c)?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.scale(&LaurentPolynomial::monomial(-1, 0))?)
    }

    /// Multiplies every coordinate by the scalar `c`.
    pub fn scale(&self, c: &LaurentPolynomial) -> Result<Self> {
        let mut out = Self::zero(self.n);
        for (w, p) in &self.terms {
            out.accumulate(w.clone(), &p.checked_mul(c)?)?;
        }
        Ok(out)
    }

    /// `H_i h` (left) or `h H_i` (right).
    ///
    /// On basis elements: `H_i H_w = H_{s_i w}` when `s_i w > w`, and
    /// `H_i H_w = H_{s_i w} + (v^{-1} - v) H_w` when `s_i w < w`.
    pub fn mul_gen(&self, i: usize, side: Side) -> Result<Self> {
        if i == 0 || i >= self.n {
            return Err(Error::GeneratorOutOfRange { index: i, n: self.n });
        }
        let quad = LaurentPolynomial::from_terms([(-1, 1), (1, -1)])?;
        let mut out = Self::zero(self.n);
        for (w, p) in &self.terms {
            let sw = w.mul_simple_unchecked(i, side);
            out.accumulate(sw, p)?;
            if w.has_descent(i, side) {
                out.accumulate(w.clone(), &p.checked_mul(&quad)?)?;
            }
        }
        Ok(out)
    }

    /// Image under the ring involution `v ↦ v^{-1}`, `H_i ↦ H_i^{-1}`.
    ///
    /// `\overline{H_w}` is expanded as `H_{i_1}^{-1} ⋯ H_{i_l}^{-1}` for the
    /// canonical reduced word `s_{i_1} ⋯ s_{i_l}` of `w`, built by left
    /// multiplications starting from `H_e` with the last letter first.
    pub fn bar_involution(&self) -> Result<Self> {
        let mut out = Self::zero(self.n);
        for (w, p) in &self.terms {
            let mut img = Self::standard(&Permutation::identity(self.n));
            for &i in reduced_word(w).iter().rev() {
                img = img.mul_gen_inverse(i)?;
            }
            out = out.checked_add(&img.scale(&p.bar())?)?;
        }
        Ok(out)
    }

    /// `H_i^{-1} h = (H_i + v - v^{-1}) h`.
    fn mul_gen_inverse(&self, i: usize) -> Result<Self> {
        let shift = LaurentPolynomial::from_terms([(1, 1), (-1, -1)])?;
        self.mul_gen(i, Side::Left)?.checked_add(&self.scale(&shift)?)
    }
}

impl Add for &HeckeElement {
    type Output = HeckeElement;
    fn add(self, rhs: &HeckeElement) -> HeckeElement {
        self.checked_add(rhs).expect("Hecke element addition")
    }
}

impl Sub for &HeckeElement {
    type Output = HeckeElement;
    fn sub(self, rhs: &HeckeElement) -> HeckeElement {
        self.checked_sub(rhs).expect("Hecke element subtraction")
    }
}

impl std::fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (w, p) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({p}) H[{w}]")?;
        }
        Ok(())
    }
}

/// Which left descent the KL recursion peels off.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DescentChoice {
    #[default]
    Smallest,
    Largest,
}

/// Lexicographic rank of a permutation among all of `S_n` (Lehmer code).
pub fn lex_index(w: &Permutation) -> usize {
    let n = w.rank();
    let mut idx = 0;
    for a in 1..=n {
        let smaller_after = (a + 1..=n).filter(|&b| w.get(b) < w.get(a)).count();
        idx = idx * (n + 1 - a) + smaller_after;
    }
    idx
}

/// All KL polynomials `p_{x,w}` of `S_n`, built eagerly by induction on
/// length and then read-only.
///
/// For `w ≠ e` with chosen left descent `s`, `y = s w`:
/// `\underline{H}_w = \underline{H}_s \underline{H}_y - Σ μ(x, y) \underline{H}_x`
/// over `x < y` with `s x < x`, where `\underline{H}_s = H_s + v`.
pub struct KlTable {
    n: usize,
    perms: Vec<Permutation>,
    lengths: Vec<u16>,
    /// `rows[w]`: `(x, p_{x,w})` for `x < w` with `p ≠ 0`, sorted by `x`.
    rows: Vec<Vec<(u32, LaurentPolynomial)>>,
}

impl KlTable {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_descent_choice(n, DescentChoice::Smallest)
    }

    pub fn with_descent_choice(n: usize, choice: DescentChoice) -> Result<Self> {
        let perms = all_permutations(n);
        let size = perms.len();
        let lengths: Vec<u16> = perms.iter().map(|w| w.length() as u16).collect();

        // left_mul[i - 1][w] = index of s_i w
        let left_mul: Vec<Vec<u32>> = (1..n)
            .map(|i| {
                perms
                    .iter()
                    .map(|w| lex_index(&w.mul_simple_unchecked(i, Side::Left)) as u32)
                    .collect()
            })
            .collect();

        let mut order: Vec<usize> = (0..size).collect();
        order.sort_by_key(|&w| lengths[w]);

        let mut rows: Vec<Vec<(u32, LaurentPolynomial)>> = vec![Vec::new(); size];
        let mut acc: Vec<LaurentPolynomial> = vec![LaurentPolynomial::zero(); size];
        let mut touched: Vec<usize> = Vec::new();
        let one = LaurentPolynomial::one();

        for &w in &order {
            if lengths[w] == 0 {
                continue;
            }
            let descents = (1..n).filter(|&i| lengths[left_mul[i - 1][w] as usize] < lengths[w]);
            let s = match choice {
                DescentChoice::Smallest => descents.min(),
                DescentChoice::Largest => descents.max(),
            }
            .expect("non-identity element has a left descent");
            let smul = &left_mul[s - 1];
            let y = smul[w] as usize;

            let mut add = |acc: &mut Vec<LaurentPolynomial>, z: usize, p: &LaurentPolynomial, c: i64, k: i32| -> Result<()> {
                if acc[z].is_zero() {
                    touched.push(z);
                }
                acc[z].add_scaled_shifted(p, c, k)
            };

            // (H_s + v) \underline{H}_y
            for (z, p) in full_row(&rows[y], y, &one) {
                let sz = smul[z] as usize;
                add(&mut acc, sz, p, 1, 0)?;
                if lengths[sz] > lengths[z] {
                    add(&mut acc, z, p, 1, 1)?;
                } else {
                    add(&mut acc, z, p, 1, -1)?;
                }
            }
            // - Σ μ(x, y) \underline{H}_x
            for (x, p) in &rows[y] {
                let x = *x as usize;
                if lengths[smul[x] as usize] < lengths[x] {
                    let mu = p.coefficient(1);
                    if mu != 0 {
                        for (z, q) in full_row(&rows[x], x, &one) {
                            add(&mut acc, z, q, -mu, 0)?;
                        }
                    }
                }
            }

            debug_assert_eq!(acc[w], one);
            touched.sort_unstable();
            touched.dedup();
            let mut row = Vec::new();
            for &z in &touched {
                let p = std::mem::take(&mut acc[z]);
                if z != w && !p.is_zero() {
                    row.push((z as u32, p));
                }
            }
            touched.clear();
            rows[w] = row;
        }

        Ok(KlTable {
            n,
            perms,
            lengths,
            rows,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn permutations(&self) -> &[Permutation] {
        &self.perms
    }

    /// `p_{x,w}`: 1 on the diagonal, 0 unless `x <= w`.
    pub fn kl_polynomial(&self, x: &Permutation, w: &Permutation) -> Result<LaurentPolynomial> {
        self.check(x)?;
        self.check(w)?;
        Ok(self.poly_by_index(lex_index(x), lex_index(w)))
    }

    fn poly_by_index(&self, x: usize, w: usize) -> LaurentPolynomial {
        if x == w {
            return LaurentPolynomial::one();
        }
        let row = &self.rows[w];
        row.binary_search_by_key(&(x as u32), |(z, _)| *z)
            .map(|k| row[k].1.clone())
            .unwrap_or_default()
    }

    /// Coefficient of `v` in `p_{x,y} + p_{y,x}`.
    pub fn mu(&self, x: &Permutation, y: &Permutation) -> Result<i64> {
        self.check(x)?;
        self.check(y)?;
        let (a, b) = (lex_index(x), lex_index(y));
        Ok(self.poly_by_index(a, b).coefficient(1) + self.poly_by_index(b, a).coefficient(1))
    }

    pub fn kl_basis_element(&self, w: &Permutation) -> Result<HeckeElement> {
        self.check(w)?;
        let wi = lex_index(w);
        let mut h = HeckeElement::standard(w);
        for (x, p) in &self.rows[wi] {
            h.terms.insert(self.perms[*x as usize].clone(), p.clone());
        }
        Ok(h)
    }

    /// Rows `(x, w, p_{x,w})` for every nonzero `p_{x,w}` with `x ≠ w`,
    /// ordered by `w` then `x` (lexicographic one-line order).
    pub fn dump(&self) -> Vec<KlRow> {
        let mut out = Vec::new();
        for (w, row) in self.rows.iter().enumerate() {
            for (x, p) in row {
                out.push(KlRow {
                    x: self.perms[*x as usize].clone(),
                    w: self.perms[w].clone(),
                    p: p.clone(),
                });
            }
        }
        out
    }

    pub fn length_of(&self, w: &Permutation) -> usize {
        self.lengths[lex_index(w)] as usize
    }

    fn check(&self, w: &Permutation) -> Result<()> {
        if w.rank() != self.n {
            Err(Error::RankMismatch(w.rank(), self.n))
        } else {
            Ok(())
        }
    }
}

fn full_row<'a>(
    row: &'a [(u32, LaurentPolynomial)],
    diag: usize,
    one: &'a LaurentPolynomial,
) -> impl Iterator<Item = (usize, &'a LaurentPolynomial)> {
    row.iter()
        .map(|(z, p)| (*z as usize, p))
        .chain(std::iter::once((diag, one)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KlRow {
    pub x: Permutation,
    pub w: Permutation,
    pub p: LaurentPolynomial,
}
