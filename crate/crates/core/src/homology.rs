//! Graded socles, `J`-subquotients and first extensions, as formulas on
//! permutations.
//!
//! A [`GradedSimple`] `(w_{i,j}, k)` stands for `L_{w_{i,j}}<-k>`, the point
//! `(i, j, k)` of the tetrahedron. Grading: `Δ_e` has top in degree 0, and the
//! socle of `Δ_e / Δ_w` is reported for the normalization
//! `N_w = Δ_e / (Δ_w<-length(w)>)`, so that shifts agree with the tetrahedron
//! coordinates.

use std::collections::BTreeSet;

use serde::{Serialize, Serializer};

use crate::bigrass::{b_element, below_triples, bruhat_maximal_below_triples, BigrassTriple};
use crate::cells::{a_value, cell_element, CellElement};
use crate::error::{Error, Result};
use crate::fulton::essential_set;
use crate::perm::{
    ascents, bruhat_leq, compose, content, descents, rs_shape, Permutation, Side, YoungShape,
};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradedSimple {
    pub cell: CellElement,
    pub shift: usize,
}

impl GradedSimple {
    pub fn i(&self) -> usize {
        self.cell.i
    }

    pub fn j(&self) -> usize {
        self.cell.j
    }

    /// `(i, j, k)`.
    pub fn point(&self) -> (usize, usize, usize) {
        (self.cell.i, self.cell.j, self.shift)
    }

    /// Lowest admissible shift for `w_{i,j}`: `(n-1)(n-2)/2 + |i-j|`.
    pub fn base_shift(&self) -> usize {
        a_value(self.cell.n) + self.cell.i.abs_diff(self.cell.j)
    }

    /// Bounds and parity of the shift.
    pub fn is_valid(&self) -> bool {
        let base = self.base_shift();
        base <= self.shift && self.shift <= self.cell.length() && (self.shift - base).is_multiple_of(2)
    }
}

impl Serialize for GradedSimple {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Point {
            i: usize,
            j: usize,
            shift: usize,
        }
        Point {
            i: self.cell.i,
            j: self.cell.j,
            shift: self.shift,
        }
        .serialize(serializer)
    }
}

/// `b(i, j, k) ↦ L_{w_{i,j}}<-((n-1)(n-2)/2 + |i-j| + 2k)>`.
pub fn bijection_image(t: &BigrassTriple) -> Result<GradedSimple> {
    let t = BigrassTriple::new(t.n, t.i, t.j, t.k)?;
    Ok(GradedSimple {
        cell: cell_element(t.n, t.i, t.j)?,
        shift: a_value(t.n) + t.i.abs_diff(t.j) + 2 * t.k,
    })
}

fn images(triples: &[BigrassTriple]) -> Result<Vec<GradedSimple>> {
    let mut out = triples.iter().map(bijection_image).collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// Composition factors `L_x<-k>`, `x ∈ J`, of `Δ_e / Δ_w`: the images of
/// `B(w)`. Multiplicity free.
pub fn j_subquotients(w: &Permutation) -> Result<Vec<GradedSimple>> {
    images(&below_triples(w))
}

/// `J`-factors of `Δ_v / Δ_w`: images of `{y ∈ B_n : y <= w, y ≰ v}`.
pub fn j_subquotients_between(v: &Permutation, w: &Permutation) -> Result<Vec<GradedSimple>> {
    check_strictly_below(v, w)?;
    let below_v: BTreeSet<BigrassTriple> = below_triples(v).into_iter().collect();
    let diff: Vec<BigrassTriple> = below_triples(w)
        .into_iter()
        .filter(|t| !below_v.contains(t))
        .collect();
    images(&diff)
}

/// Graded socle of `N_w` from the essential set: each `(i, j) ∈ Ess(w)`
/// contributes `L_{w_{j,i}}<-((n-1)(n-2)/2 + |i-j| + 2(t_w(i,j) - 1))>`.
pub fn socle_graded(w: &Permutation) -> Result<Vec<GradedSimple>> {
    let n = w.rank();
    let mut out = essential_set(w)
        .into_iter()
        .map(|c| {
            Ok(GradedSimple {
                cell: cell_element(n, c.j, c.i)?,
                shift: a_value(n) + c.i.abs_diff(c.j) + 2 * (c.corank - 1),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// Graded socle of `N_w` as the images of `BM(w)`.
pub fn socle_graded_via_bm(w: &Permutation) -> Result<Vec<GradedSimple>> {
    images(&bruhat_maximal_below_triples(w))
}

/// Ungraded socle labels: [`socle_graded`] with the shifts forgotten.
pub fn socle_ungraded(w: &Permutation) -> Result<Vec<CellElement>> {
    Ok(socle_graded(w)?.into_iter().map(|g| g.cell).collect())
}

/// Socle of `Δ_v / Δ_w` for `v < w`: images of `BM(w) \ BM(v)`.
pub fn socle_between(v: &Permutation, w: &Permutation) -> Result<Vec<GradedSimple>> {
    check_strictly_below(v, w)?;
    let bm_v: BTreeSet<BigrassTriple> = bruhat_maximal_below_triples(v).into_iter().collect();
    let diff: Vec<BigrassTriple> = bruhat_maximal_below_triples(w)
        .into_iter()
        .filter(|t| !bm_v.contains(t))
        .collect();
    images(&diff)
}

fn check_strictly_below(v: &Permutation, w: &Permutation) -> Result<()> {
    if v == w || !bruhat_leq(v, w)? {
        return Err(Error::NotBruhatBelow {
            v: v.to_string(),
            w: w.to_string(),
        });
    }
    Ok(())
}

/// Whether `x = Φ(b)` for some `b ∈ BM(y)`, i.e. `x` lies in `J` and its
/// ascent pair equals the descent pair of a Bruhat-maximal bigrassmannian
/// below `y`.
fn in_phi_of_maximal(x: &Permutation, y: &Permutation) -> bool {
    let n = x.rank();
    if n < 2 || rs_shape(x) != YoungShape::hook_two(n) {
        return false;
    }
    let (left, right) = (ascents(x, Side::Left), ascents(x, Side::Right));
    let (i, j) = (*left.first().unwrap(), *right.first().unwrap());
    bruhat_maximal_below_triples(y)
        .iter()
        .any(|t| t.i == i && t.j == j)
}

/// `dim Ext^1(L_x, Δ_y) = dim Ext^1(∇_y, L_x)`:
/// `content(x y)` if `x = w_0`, 1 if `x ∈ Φ(BM(y))`, otherwise 0.
pub fn ext1_dimension(x: &Permutation, y: &Permutation) -> Result<usize> {
    let xy = compose(x, y)?;
    if *x == Permutation::longest(x.rank()) {
        return Ok(content(&xy));
    }
    Ok(usize::from(in_phi_of_maximal(x, y)))
}

/// Simple reflections fixing a singular dominant weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WallSet {
    n: usize,
    walls: BTreeSet<usize>,
}

impl WallSet {
    pub fn new(n: usize, walls: impl IntoIterator<Item = usize>) -> Result<Self> {
        let walls: BTreeSet<usize> = walls.into_iter().collect();
        if let Some(&bad) = walls.iter().find(|&&i| i == 0 || i >= n) {
            return Err(Error::InvalidWall { index: bad, n });
        }
        Ok(WallSet { n, walls })
    }

    pub fn empty(n: usize) -> Self {
        WallSet {
            n,
            walls: BTreeSet::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        WallSet {
            n,
            walls: (1..n).collect(),
        }
    }

    /// Parses `"1,3"`; the empty string is the regular case.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let walls = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad wall index {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, walls)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.walls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walls.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.walls.contains(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.walls.iter().copied()
    }

    /// Longest element `w_I` of the parabolic subgroup generated by the walls:
    /// reverses every maximal run of consecutive walls.
    pub fn longest_parabolic(&self) -> Permutation {
        let mut word: Vec<usize> = (1..=self.n).collect();
        let mut run_start: Option<usize> = None;
        for i in 1..=self.n {
            let in_run = self.walls.contains(&i);
            match (in_run, run_start) {
                (true, None) => run_start = Some(i),
                (false, Some(a)) => {
                    // positions a..=i are permuted by s_a ... s_{i-1}
                    word[a - 1..i].reverse();
                    run_start = None;
                }
                _ => {}
            }
        }
        Permutation::new(word).expect("reversing runs keeps a permutation")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CosetKind {
    Shortest,
    Longest,
}

/// Shortest or longest representative of the coset `w S_I`.
pub fn coset_representative(w: &Permutation, walls: &WallSet, kind: CosetKind) -> Result<Permutation> {
    if w.rank() != walls.n {
        return Err(Error::RankMismatch(w.rank(), walls.n));
    }
    let mut short = w.clone();
    while let Some(i) = walls.iter().find(|&i| short.has_descent(i, Side::Right)) {
        short = short.mul_simple_unchecked(i, Side::Right);
    }
    match kind {
        CosetKind::Shortest => Ok(short),
        CosetKind::Longest => compose(&short, &walls.longest_parabolic()),
    }
}

/// `dim Ext^1(L(x·μ), Δ(y·μ))` for the singular block with walls `I`:
/// `content(x̄ y̲) - |I|` if `x̄ = w_0`, 1 if `x̄ ∈ Φ(BM(y̲))`, else 0, where
/// `x̄` is the longest representative of `x S_I` and `y̲` the shortest of
/// `y S_I`.
pub fn ext1_dimension_singular(x: &Permutation, y: &Permutation, walls: &WallSet) -> Result<usize> {
    if x.rank() != y.rank() {
        return Err(Error::RankMismatch(x.rank(), y.rank()));
    }
    let x_bar = coset_representative(x, walls, CosetKind::Longest)?;
    let y_low = coset_representative(y, walls, CosetKind::Shortest)?;
    if x_bar == Permutation::longest(x.rank()) {
        let c = content(&compose(&x_bar, &y_low)?);
        debug_assert!(c >= walls.len());
        return Ok(c.saturating_sub(walls.len()));
    }
    Ok(usize::from(in_phi_of_maximal(&x_bar, &y_low)))
}

/// Full `Ext^1` table for the block with walls `I`: rows are the longest
/// coset representatives `x̄`, columns the shortest `y̲`, both in
/// lexicographic order. With no walls this is `dim Ext^1(L_x, Δ_y)` over
/// `S_n × S_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtTable {
    pub rows: Vec<Permutation>,
    pub cols: Vec<Permutation>,
    pub entries: Vec<Vec<usize>>,
}

impl ExtTable {
    pub fn get(&self, x: &Permutation, y: &Permutation) -> Option<usize> {
        let r = self.rows.binary_search(x).ok()?;
        let c = self.cols.binary_search(y).ok()?;
        Some(self.entries[r][c])
    }
}

pub fn ext1_table(n: usize, walls: &WallSet) -> Result<ExtTable> {
    if walls.n != n {
        return Err(Error::RankMismatch(n, walls.n));
    }
    let perms = crate::perm::all_permutations(n);
    let mut rows = BTreeSet::new();
    let mut cols = BTreeSet::new();
    for w in &perms {
        rows.insert(coset_representative(w, walls, CosetKind::Longest)?);
        cols.insert(coset_representative(w, walls, CosetKind::Shortest)?);
    }
    let rows: Vec<Permutation> = rows.into_iter().collect();
    let cols: Vec<Permutation> = cols.into_iter().collect();
    let w0 = Permutation::longest(n);
    let hook = YoungShape::hook_two(n);
    // ascent pair of each row lying in J
    let row_pairs: Vec<Option<(usize, usize)>> = rows
        .iter()
        .map(|x| {
            (n >= 2 && rs_shape(x) == hook).then(|| {
                let (l, r) = (ascents(x, Side::Left), ascents(x, Side::Right));
                (*l.first().unwrap(), *r.first().unwrap())
            })
        })
        .collect();
    let mut entries = vec![vec![0; cols.len()]; rows.len()];
    for (c, y) in cols.iter().enumerate() {
        let targets: BTreeSet<(usize, usize)> = bruhat_maximal_below_triples(y)
            .iter()
            .map(|t| (t.i, t.j))
            .collect();
        for (r, x) in rows.iter().enumerate() {
            entries[r][c] = if *x == w0 {
                content(&compose(x, y)?).saturating_sub(walls.len())
            } else {
                usize::from(row_pairs[r].is_some_and(|p| targets.contains(&p)))
            };
        }
    }
    Ok(ExtTable { rows, cols, entries })
}

/// Socle labels of `Δ(x·μ) / Δ(y·μ)` for `x < y`, at the level of labels only:
/// the regular socle of `Δ_{x̲} / Δ_{y̲}` with every `L_w` dropped unless `w`
/// is the longest element of its coset `w S_I`. Grading shifts are not
/// tracked in singular blocks.
pub fn singular_socle_labels(x: &Permutation, y: &Permutation, walls: &WallSet) -> Result<Vec<CellElement>> {
    check_strictly_below(x, y)?;
    let x_low = coset_representative(x, walls, CosetKind::Shortest)?;
    let y_low = coset_representative(y, walls, CosetKind::Shortest)?;
    if x_low == y_low {
        return Ok(Vec::new());
    }
    let socle = socle_between(&x_low, &y_low)?;
    let mut out = Vec::new();
    for g in socle {
        let top = coset_representative(&g.cell.perm, walls, CosetKind::Longest)?;
        if top == g.cell.perm {
            out.push(g.cell);
        }
    }
    Ok(out)
}

/// Right descents of `w` contained in the walls; empty iff `w` is a
/// shortest coset representative.
pub fn wall_descents(w: &Permutation, walls: &WallSet) -> BTreeSet<usize> {
    descents(w, Side::Right)
        .into_iter()
        .filter(|i| walls.contains(*i))
        .collect()
}

/// Triples of `BM(w)` mapped to their bigrassmannians, for inspection.
pub fn maximal_bigrassmannians(w: &Permutation) -> Vec<(BigrassTriple, Permutation)> {
    bruhat_maximal_below_triples(w)
        .into_iter()
        .map(|t| (t, b_element(&t)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigrass::{is_bigrassmannian, triples};
    use crate::perm::all_permutations;

    fn word(n: usize, letters: &[usize]) -> Permutation {
        Permutation::from_word(n, letters).unwrap()
    }

    fn points(v: &[GradedSimple]) -> Vec<(usize, usize, usize)> {
        let mut p: Vec<_> = v.iter().map(GradedSimple::point).collect();
        p.sort();
        p
    }

    fn sorted(mut v: Vec<(usize, usize, usize)>) -> Vec<(usize, usize, usize)> {
        v.sort();
        v
    }

    #[test]
    fn bijection_examples() {
        let img = |n, i, j, k| bijection_image(&BigrassTriple::new(n, i, j, k).unwrap()).unwrap().point();
        assert_eq!(img(4, 2, 2, 0), (2, 2, 3));
        assert_eq!(img(4, 2, 2, 1), (2, 2, 5));
        assert_eq!(img(5, 4, 1, 0), (4, 1, 9));
        assert_eq!(img(3, 1, 1, 0), (1, 1, 1));
        let bad = BigrassTriple { n: 4, i: 2, j: 2, k: 3 };
        assert!(bijection_image(&bad).is_err());
    }

    #[test]
    fn reference_socles_rank_five() {
        let w = word(5, &[3, 4, 1, 2, 3, 2, 1]);
        assert_eq!(points(&socle_graded(&w).unwrap()), sorted(vec![(4, 1, 9), (1, 3, 8), (3, 3, 8)]));
        let w = word(5, &[1, 2, 3, 4, 2, 3, 1, 2]);
        assert_eq!(points(&socle_graded(&w).unwrap()), sorted(vec![(3, 2, 9), (1, 4, 9)]));
    }

    #[test]
    fn subquotients_examples() {
        assert!(j_subquotients(&Permutation::identity(4)).unwrap().is_empty());
        assert_eq!(j_subquotients(&Permutation::longest(5)).unwrap().len(), 20);
        let w = word(4, &[1, 2, 1]);
        assert_eq!(
            points(&j_subquotients(&w).unwrap()),
            sorted(vec![(1, 1, 3), (2, 1, 4), (1, 2, 4), (2, 2, 3)])
        );
    }

    #[test]
    fn bigrassmannian_socle_is_its_image() {
        for n in 3..=6 {
            for t in triples(n) {
                let b = b_element(&t);
                assert_eq!(socle_graded(&b).unwrap(), vec![bijection_image(&t).unwrap()]);
            }
        }
    }

    #[test]
    fn socle_between_cases() {
        let w = word(4, &[1, 2, 3, 2, 1]);
        let e = Permutation::identity(4);
        assert_eq!(socle_between(&e, &w).unwrap(), socle_graded(&w).unwrap());
        assert!(matches!(socle_between(&w, &w), Err(Error::NotBruhatBelow { .. })));
        assert!(socle_between(&w, &e).is_err());
        assert!(j_subquotients_between(&w, &e).is_err());
    }

    #[test]
    fn socle_between_against_brute_force() {
        // oracle: maximal elements of the bigrassmannians below w but not
        // below v, found by direct enumeration of S_4
        let v = word(4, &[2]);
        let w0 = Permutation::longest(4);
        let w = compose(&Permutation::simple(4, 2).unwrap(), &w0).unwrap();
        let all_b: Vec<Permutation> = all_permutations(4).into_iter().filter(is_bigrassmannian).collect();
        let bm = |x: &Permutation| -> BTreeSet<Permutation> {
            let below: Vec<&Permutation> = all_b.iter().filter(|y| bruhat_leq(y, x).unwrap()).collect();
            below
                .iter()
                .filter(|&&y| !below.iter().any(|&z| z != y && bruhat_leq(y, z).unwrap()))
                .map(|&y| y.clone())
                .collect()
        };
        let expected: BTreeSet<Permutation> = bm(&w).difference(&bm(&v)).cloned().collect();
        let got: BTreeSet<Permutation> = socle_between(&v, &w)
            .unwrap()
            .iter()
            .map(|g| {
                let t = triples(4).into_iter().find(|t| bijection_image(t).unwrap() == *g).unwrap();
                b_element(&t)
            })
            .collect();
        assert_eq!(got, expected);
        assert!(!got.is_empty());
    }

    #[test]
    fn ext_examples() {
        let w0 = Permutation::longest(4);
        let s2 = Permutation::simple(4, 2).unwrap();
        let x = compose(&s2, &w0).unwrap();
        assert_eq!(ext1_dimension(&x, &s2).unwrap(), 1);
        for n in 3..=6 {
            let e = Permutation::identity(n);
            assert_eq!(ext1_dimension(&Permutation::longest(n), &e).unwrap(), n - 1);
            for y in all_permutations(n).iter().take(50) {
                assert_eq!(ext1_dimension(&e, y).unwrap(), 0);
            }
        }
        assert!(ext1_dimension(&w0, &Permutation::identity(3)).is_err());
    }

    #[test]
    fn walls_and_cosets() {
        let s1 = Permutation::simple(3, 1).unwrap();
        let e = Permutation::identity(3);
        let walls = WallSet::new(3, [1]).unwrap();
        assert_eq!(coset_representative(&s1, &walls, CosetKind::Shortest).unwrap(), e);
        assert_eq!(coset_representative(&e, &walls, CosetKind::Longest).unwrap(), s1);
        let none = WallSet::empty(3);
        for w in all_permutations(3) {
            assert_eq!(coset_representative(&w, &none, CosetKind::Shortest).unwrap(), w);
            assert_eq!(coset_representative(&w, &none, CosetKind::Longest).unwrap(), w);
        }
        assert!(WallSet::new(3, [3]).is_err());
        assert!(WallSet::parse(4, "1,x").is_err());
        assert_eq!(WallSet::parse(4, "1, 3").unwrap().len(), 2);
        assert_eq!(WallSet::full(4).longest_parabolic(), Permutation::longest(4));
        assert_eq!(WallSet::new(5, [1, 3, 4]).unwrap().longest_parabolic(), "2,1,5,4,3".parse().unwrap());
    }

    #[test]
    fn coset_factorization() {
        for walls in [vec![1], vec![2, 3], vec![1, 3], vec![1, 2, 3]] {
            let walls = WallSet::new(4, walls).unwrap();
            let wi = walls.longest_parabolic().length();
            for w in all_permutations(4) {
                let lo = coset_representative(&w, &walls, CosetKind::Shortest).unwrap();
                let hi = coset_representative(&w, &walls, CosetKind::Longest).unwrap();
                assert_eq!(hi.length(), lo.length() + wi);
                assert!(wall_descents(&lo, &walls).is_empty());
                assert_eq!(wall_descents(&hi, &walls).len(), walls.len());
            }
        }
    }

    #[test]
    fn singular_ext_examples() {
        let w0 = Permutation::longest(3);
        let e = Permutation::identity(3);
        let walls = WallSet::new(3, [1]).unwrap();
        assert_eq!(ext1_dimension_singular(&w0, &e, &walls).unwrap(), 1);
        for n in 3..=4 {
            let full = WallSet::full(n);
            for x in all_permutations(n) {
                for y in all_permutations(n) {
                    assert_eq!(ext1_dimension_singular(&x, &y, &full).unwrap(), 0);
                }
            }
        }
    }

    #[test]
    fn table_matches_pointwise() {
        for walls in [vec![], vec![1], vec![2], vec![1, 3], vec![1, 2, 3]] {
            let walls = WallSet::new(4, walls).unwrap();
            let table = ext1_table(4, &walls).unwrap();
            for x in all_permutations(4) {
                for y in all_permutations(4) {
                    let xb = coset_representative(&x, &walls, CosetKind::Longest).unwrap();
                    let yl = coset_representative(&y, &walls, CosetKind::Shortest).unwrap();
                    assert_eq!(
                        table.get(&xb, &yl),
                        Some(ext1_dimension_singular(&x, &y, &walls).unwrap())
                    );
                }
            }
        }
        let regular = ext1_table(3, &WallSet::empty(3)).unwrap();
        assert_eq!(regular.rows.len(), 6);
        assert_eq!(regular.get(&Permutation::longest(3), &Permutation::identity(3)), Some(2));
    }

    #[test]
    fn singular_socle_regular_case_matches() {
        let w = word(4, &[1, 2, 3, 2, 1]);
        let e = Permutation::identity(4);
        let labels = singular_socle_labels(&e, &w, &WallSet::empty(4)).unwrap();
        assert_eq!(labels, socle_ungraded(&w).unwrap());
        // fully singular: nothing survives
        let full = WallSet::full(4);
        assert!(singular_socle_labels(&e, &w, &full).unwrap().is_empty());
    }

    #[test]
    fn graded_simples_serialize() {
        let w = word(5, &[3, 4, 1, 2, 3, 2, 1]);
        let json = serde_json::to_string(&socle_graded(&w).unwrap()).unwrap();
        assert_eq!(json, r#"[{"i":1,"j":3,"shift":8},{"i":3,"j":3,"shift":8},{"i":4,"j":1,"shift":9}]"#);
    }

    #[test]
    fn maximal_list_has_images() {
        let w = word(5, &[3, 4, 1, 2, 3, 2, 1]);
        assert_eq!(maximal_bigrassmannians(&w).len(), 3);
    }
}
