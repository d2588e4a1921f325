//! Permutations of `{1, ..., n}` in one-line notation.
//!
//! Conventions used throughout the crate:
//!
//! * positions and values are 1-based, `w.get(i) = w(i)`;
//! * [`compose`] is composition of functions, `compose(u, w)(i) = u(w(i))`,
//!   so a word `s_a s_b ... s_c` acts with its *rightmost* letter first;
//! * `s_i` is the transposition `(i, i+1)`. Left multiplication `s_i w`
//!   swaps the *values* `i` and `i+1`, right multiplication `w s_i` swaps
//!   the *positions* `i` and `i+1`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fulton;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u8>,
}

/// Which side a generator acts on (or which descents are meant).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// A partition of `n`, stored as weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct YoungShape {
    parts: Vec<usize>,
}

impl YoungShape {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{parts:?} is not a partition")));
        }
        Ok(YoungShape { parts })
    }

    /// The hook `(2, 1^{n-2})` labelling the penultimate cell.
    pub fn hook_two(n: usize) -> Self {
        assert!(n >= 2);
        let mut parts = vec![2];
        parts.extend(std::iter::repeat_n(1, n - 2));
        YoungShape { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl fmt::Display for YoungShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

impl Permutation {
    /// Builds a permutation from one-line notation, checking that `word` is a
    /// rearrangement of `1..=n`.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        if n == 0 || n > u8::MAX as usize {
            return Err(Error::InvalidPermutation(format!("unsupported rank {n}")));
        }
        let mut seen = vec![false; n + 1];
        for &x in &word {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{word:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            word: word.into_iter().map(|x| x as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1 && n <= u8::MAX as usize);
        Permutation {
            word: (1..=n as u8).collect(),
        }
    }

    /// The longest element `w_0 = [n, n-1, ..., 1]`.
    pub fn longest(n: usize) -> Self {
        assert!(n >= 1 && n <= u8::MAX as usize);
        Permutation {
            word: (1..=n as u8).rev().collect(),
        }
    }

    pub fn simple(n: usize, i: usize) -> Result<Self> {
        check_generator(n, i)?;
        let mut w = Self::identity(n);
        w.word.swap(i - 1, i);
        Ok(w)
    }

    /// Evaluates the word `s_{letters[0]} s_{letters[1]} ...` (rightmost letter
    /// applied first).
    pub fn from_word(n: usize, letters: &[usize]) -> Result<Self> {
        let mut w = Self::identity(n);
        for &i in letters {
            check_generator(n, i)?;
            w.word.swap(i - 1, i);
        }
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.word.len()
    }

    /// `w(i)` for 1-based `i`.
    #[inline]
    pub fn get(&self, i: usize) -> usize {
        self.word[i - 1] as usize
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.word.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(k, &x)| x as usize == k + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.rank()];
        for (k, &x) in self.word.iter().enumerate() {
            inv[x as usize - 1] = (k + 1) as u8;
        }
        Permutation { word: inv }
    }

    /// `s_i w` if `side` is left, `w s_i` if right.
    pub fn mul_simple(&self, i: usize, side: Side) -> Result<Self> {
        check_generator(self.rank(), i)?;
        Ok(self.mul_simple_unchecked(i, side))
    }

    pub(crate) fn mul_simple_unchecked(&self, i: usize, side: Side) -> Self {
        let mut w = self.clone();
        match side {
            Side::Right => w.word.swap(i - 1, i),
            Side::Left => {
                for x in w.word.iter_mut() {
                    if *x as usize == i {
                        *x += 1;
                    } else if *x as usize == i + 1 {
                        *x -= 1;
                    }
                }
            }
        }
        w
    }

    /// Swaps the entries in positions `a` and `b`, i.e. `w t_{ab}`.
    pub(crate) fn swap_positions(&self, a: usize, b: usize) -> Self {
        let mut w = self.clone();
        w.word.swap(a - 1, b - 1);
        w
    }

    pub fn length(&self) -> usize {
        length(self)
    }

    /// Whether `i` is a descent on the given side (`1 <= i < n`).
    #[inline]
    pub fn has_descent(&self, i: usize, side: Side) -> bool {
        match side {
            Side::Right => self.word[i - 1] > self.word[i],
            Side::Left => self.position_of(i + 1) < self.position_of(i),
        }
    }

    /// `w^{-1}(value)`.
    #[inline]
    pub fn position_of(&self, value: usize) -> usize {
        self.word.iter().position(|&x| x as usize == value).unwrap() + 1
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word.iter().join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.word.iter().join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses one-line notation such as `"5,2,4,1,3"`.
    fn from_str(s: &str) -> Result<Self> {
        let word = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad one-line entry {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(word)
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn check_generator(n: usize, i: usize) -> Result<()> {
    if i == 0 || i >= n {
        Err(Error::GeneratorOutOfRange { index: i, n })
    } else {
        Ok(())
    }
}

fn check_rank(u: &Permutation, w: &Permutation) -> Result<()> {
    if u.rank() != w.rank() {
        Err(Error::RankMismatch(u.rank(), w.rank()))
    } else {
        Ok(())
    }
}

/// Parses a word such as `"s3 s4 s1 s2"` (also accepts `"s_3"` and bare
/// integers) into its list of generator indices.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    s.split(|c: char| c.is_whitespace() || matches!(c, '*' | '.' | 's' | 'S'))
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.trim_start_matches('_')
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad generator {t:?} in {s:?}")))
        })
        .collect()
}

/// Accepts either one-line notation (`"4,2,3,1"`) or a word in the simple
/// reflections (`"s1 s2 s3 s2 s1"`, `"e"` for the identity). Words need the
/// rank; without one the smallest rank containing every letter is used.
pub fn parse_permutation(s: &str, n: Option<usize>) -> Result<Permutation> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty permutation".into()));
    }
    if t == "e" || t == "id" {
        let n = n.ok_or_else(|| Error::Parse("identity needs an explicit rank".into()))?;
        return Ok(Permutation::identity(n));
    }
    if t.contains(',') || t.chars().all(|c| c.is_ascii_digit()) {
        let w: Permutation = t.parse()?;
        if let Some(n) = n {
            if n != w.rank() {
                return Err(Error::RankMismatch(w.rank(), n));
            }
        }
        return Ok(w);
    }
    let letters = parse_word(t)?;
    let n = match n {
        Some(n) => n,
        None => letters.iter().copied().max().unwrap_or(0) + 1,
    };
    Permutation::from_word(n, &letters)
}

/// All of `S_n` in lexicographic order of one-line notation.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    (1..=n as u8)
        .permutations(n)
        .map(|word| Permutation { word })
        .collect()
}

/// `u ∘ w`, i.e. `i ↦ u(w(i))`.
pub fn compose(u: &Permutation, w: &Permutation) -> Result<Permutation> {
    check_rank(u, w)?;
    Ok(Permutation {
        word: w.word.iter().map(|&x| u.word[x as usize - 1]).collect(),
    })
}

/// Number of inversions.
pub fn length(w: &Permutation) -> usize {
    let word = &w.word;
    let mut count = 0;
    for a in 0..word.len() {
        for b in a + 1..word.len() {
            if word[a] > word[b] {
                count += 1;
            }
        }
    }
    count
}

pub fn descents(w: &Permutation, side: Side) -> BTreeSet<usize> {
    (1..w.rank()).filter(|&i| w.has_descent(i, side)).collect()
}

pub fn ascents(w: &Permutation, side: Side) -> BTreeSet<usize> {
    (1..w.rank()).filter(|&i| !w.has_descent(i, side)).collect()
}

/// Generators occurring in a reduced word of `w`.
pub fn support(w: &Permutation) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    let mut max = 0;
    for i in 1..w.rank() {
        max = max.max(w.get(i));
        if max > i {
            out.insert(i);
        }
    }
    out
}

/// Number of distinct generators in a reduced word, `|support(w)|`.
pub fn content(w: &Permutation) -> usize {
    support(w).len()
}

/// Canonical reduced word: strip the smallest right descent until the
/// identity is reached, then read the stripped letters backwards.
pub fn reduced_word(w: &Permutation) -> Vec<usize> {
    let mut cur = w.clone();
    let mut letters = Vec::with_capacity(length(w));
    while let Some(i) = (1..cur.rank()).find(|&i| cur.has_descent(i, Side::Right)) {
        cur.word.swap(i - 1, i);
        letters.push(i);
    }
    letters.reverse();
    letters
}

pub fn format_word(letters: &[usize]) -> String {
    if letters.is_empty() {
        "e".to_string()
    } else {
        letters.iter().map(|i| format!("s{i}")).join(" ")
    }
}

/// Bruhat order `u <= w`, decided by co-rank dominance `t_u <= t_w`.
pub fn bruhat_leq(u: &Permutation, w: &Permutation) -> Result<bool> {
    fulton::corank_dominates(u, w)
}

/// Bruhat order decided by greedy subword matching along the canonical
/// reduced word of `w`.
///
/// Reading `w = s_{i_1} s_{i_2} ... s_{i_l}` from the left, a letter is
/// consumed whenever it is a left descent of what remains of `u`; then
/// `u <= w` iff `u` is reduced to the identity. Independent of the rank
/// tables used by [`bruhat_leq`].
pub fn bruhat_leq_subword(u: &Permutation, w: &Permutation) -> Result<bool> {
    check_rank(u, w)?;
    let mut rest = u.clone();
    for i in reduced_word(w) {
        if rest.has_descent(i, Side::Left) {
            rest = rest.mul_simple_unchecked(i, Side::Left);
        }
    }
    Ok(rest.is_identity())
}

/// The lower Bruhat interval `[e, w]`, computed as the set of products of
/// all subwords of the canonical reduced word of `w`.
pub fn subword_products(w: &Permutation) -> HashSet<Permutation> {
    let mut reached: HashSet<Permutation> = HashSet::new();
    reached.insert(Permutation::identity(w.rank()));
    for i in reduced_word(w) {
        let extended: Vec<Permutation> = reached
            .iter()
            .map(|x| x.mul_simple_unchecked(i, Side::Right))
            .collect();
        reached.extend(extended);
    }
    reached
}

/// Elements covering `w` in Bruhat order.
pub fn covers(w: &Permutation) -> Vec<Permutation> {
    let n = w.rank();
    let l = length(w);
    let mut out: Vec<Permutation> = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            // w t_{ab} > w iff w(a) < w(b); the length jumps by one exactly
            // when no value strictly between sits in positions a+1..b-1.
            if w.get(a) < w.get(b) {
                let y = w.swap_positions(a, b);
                if length(&y) == l + 1 {
                    out.push(y);
                }
            }
        }
    }
    out.sort();
    out
}

/// Shape of the Robinson-Schensted insertion tableau of the one-line word.
pub fn rs_shape(w: &Permutation) -> YoungShape {
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for &x in &w.word {
        let mut carry = x;
        let mut placed = false;
        for row in rows.iter_mut() {
            match row.iter().position(|&y| y > carry) {
                Some(p) => carry = std::mem::replace(&mut row[p], carry),
                None => {
                    row.push(carry);
                    placed = true;
                    break;
                }
            }
        }
        if !placed {
            rows.push(vec![carry]);
        }
    }
    YoungShape {
        parts: rows.iter().map(Vec::len).collect(),
    }
}
