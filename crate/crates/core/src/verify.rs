//! Self-check suites behind `socle verify`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bigrass::{enumerate_bigrassmannian, fiber, is_bigrassmannian, triples};
use crate::cells::{closed_form_p, penultimate_cell};
use crate::error::{Error, Result};
use crate::hecke::KlTable;
use crate::homology::{
    ext1_dimension, ext1_dimension_singular, ext1_table, socle_graded, socle_graded_via_bm, WallSet,
};
use crate::perm::{all_permutations, bruhat_leq, bruhat_leq_subword, compose, content, Permutation};

/// Largest rank the oracle suite accepts without `force`.
pub const ORACLE_MAX_N: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Counting,
    Oracle,
    Socle,
    Ext,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "counting" => Ok(Suite::Counting),
            "oracle" => Ok(Suite::Oracle),
            "socle" => Ok(Suite::Socle),
            "ext" => Ok(Suite::Ext),
            other => Err(Error::Parse(format!("unknown suite {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    /// The identity being checked.
    pub reference: String,
    pub passed: bool,
    /// First counterexample, empty on success.
    pub detail: String,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] {}: {}", self.name, self.reference)?;
        if !self.passed {
            write!(f, "\n       {}", self.detail)?;
        }
        Ok(())
    }
}

fn check(name: &str, reference: &str, outcome: std::result::Result<(), String>) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        reference: reference.to_string(),
        passed: outcome.is_ok(),
        detail: outcome.err().unwrap_or_default(),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn internal(e: Error) -> String {
    format!("error: {e}")
}

/// Runs `suite` at rank `n`. Refuses the oracle suite above
/// [`ORACLE_MAX_N`] unless `force`. Sub-suites of `All` run on separate
/// threads; the report order is fixed.
pub fn run(n: usize, suite: Suite, force: bool) -> Result<Vec<CheckResult>> {
    if n < 2 {
        return Err(Error::RankTooSmall { n, min: 2 });
    }
    let wants_oracle = matches!(suite, Suite::All | Suite::Oracle);
    if wants_oracle && n > ORACLE_MAX_N && !force {
        return Err(Error::RankAboveLimit {
            what: "oracle verification",
            n,
            max: ORACLE_MAX_N,
        });
    }
    let suites: Vec<fn(usize) -> Vec<CheckResult>> = match suite {
        Suite::All => vec![counting, oracle, socle, ext],
        Suite::Counting => vec![counting],
        Suite::Oracle => vec![oracle],
        Suite::Socle => vec![socle],
        Suite::Ext => vec![ext],
    };
    let reports = std::thread::scope(|scope| {
        let handles: Vec<_> = suites.iter().map(|f| scope.spawn(move || f(n))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification thread panicked"))
            .collect::<Vec<_>>()
    });
    Ok(reports.into_iter().flatten().collect())
}

pub fn counting(n: usize) -> Vec<CheckResult> {
    let mut out = vec![check(
        "bigrassmannian count",
        "|B_n| = (n-1)n(n+1)/6",
        {
            let got = enumerate_bigrassmannian(n).len();
            let want = (n - 1) * n * (n + 1) / 6;
            ensure(got == want && triples(n).len() == want, || format!("got {got}, expected {want}"))
        },
    )];
    if n >= 3 {
        out.push(check("fiber sizes", "|B_n^(i,j)| = p_{e,w_{i,j}}(1)", (|| {
            for i in 1..n {
                for j in 1..n {
                    let size = fiber(n, i, j).map_err(internal)?.len() as i128;
                    let p = closed_form_p(n, i, j).map_err(internal)?.eval_at_one();
                    ensure(size == p, || format!("(i, j) = ({i}, {j}): fiber {size}, p(1) = {p}"))?;
                }
            }
            Ok(())
        })()));
        out.push(check("fiber chains", "each fiber is a Bruhat chain", (|| {
            for i in 1..n {
                for j in 1..n {
                    let f = fiber(n, i, j).map_err(internal)?;
                    for pair in f.windows(2) {
                        let ok = bruhat_leq(&pair[0], &pair[1]).map_err(internal)?;
                        ensure(ok, || format!("{} </= {}", pair[0], pair[1]))?;
                    }
                }
            }
            Ok(())
        })()));
    }
    out
}

pub fn oracle(n: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    if n >= 3 {
        out.push(check("closed-form KL polynomials", "p_{e,w_{i,j}} closed form = KL recursion", (|| {
            let table = KlTable::new(n).map_err(internal)?;
            let e = Permutation::identity(n);
            for c in penultimate_cell(n).map_err(internal)?.elements() {
                let want = table.kl_polynomial(&e, &c.perm).map_err(internal)?;
                let got = closed_form_p(n, c.i, c.j).map_err(internal)?;
                ensure(got == want, || format!("(i, j) = ({}, {}): closed form {got}, oracle {want}", c.i, c.j))?;
            }
            Ok(())
        })()));
    }
    out.push(check("Bruhat criteria", "co-rank dominance = subword criterion", (|| {
        let perms = all_permutations(n);
        let agree = |u: &Permutation, w: &Permutation| -> std::result::Result<(), String> {
            let a = bruhat_leq(u, w).map_err(internal)?;
            let b = bruhat_leq_subword(u, w).map_err(internal)?;
            ensure(a == b, || format!("({u}, {w}): co-rank {a}, subword {b}"))
        };
        if perms.len() <= 720 {
            for u in &perms {
                for w in &perms {
                    agree(u, w)?;
                }
            }
        } else {
            // forced runs: a fixed stride through S_n x S_n
            let len = perms.len();
            for a in 0..len {
                for step in [1, 7919, 104_729] {
                    agree(&perms[a], &perms[(a * step + step / 2) % len])?;
                }
            }
        }
        Ok(())
    })()));
    out
}

pub fn socle(n: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    if n < 3 {
        return out;
    }
    let perms = all_permutations(n);
    out.push(check("socle formulas agree", "essential-set socle = BM socle", (|| {
        for w in &perms {
            let a = socle_graded(w).map_err(internal)?;
            let b = socle_graded_via_bm(w).map_err(internal)?;
            ensure(a == b, || format!("w = {w}: {a:?} vs {b:?}"))?;
        }
        Ok(())
    })()));
    out.push(check("simple socle", "|soc| = 1 iff w bigrassmannian", (|| {
        for w in &perms {
            let size = socle_graded(w).map_err(internal)?.len();
            ensure((size == 1) == is_bigrassmannian(w), || format!("w = {w}: socle size {size}"))?;
        }
        Ok(())
    })()));
    out.push(check("degree parity", "socle shifts are admissible", (|| {
        for w in &perms {
            for g in socle_graded(w).map_err(internal)? {
                ensure(g.is_valid(), || format!("w = {w}: bad shift {:?}", g.point()))?;
            }
        }
        Ok(())
    })()));
    out
}

pub fn ext(n: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    if n < 3 {
        return out;
    }
    let w0 = Permutation::longest(n);
    let regular = match ext1_table(n, &WallSet::empty(n)) {
        Ok(t) => t,
        Err(e) => return vec![check("ext table", "Ext^1 table builds", Err(internal(e)))],
    };
    out.push(check("ext values", "Ext^1 in {0,1} off w_0, content(w_0 y) at w_0", (|| {
        for (x, row) in regular.rows.iter().zip(&regular.entries) {
            for (y, &d) in regular.cols.iter().zip(row) {
                if *x == w0 {
                    let c = content(&compose(x, y).map_err(internal)?);
                    ensure(d == c, || format!("(w_0, {y}): {d} vs content {c}"))?;
                } else {
                    ensure(d <= 1, || format!("({x}, {y}): {d}"))?;
                }
            }
        }
        Ok(())
    })()));
    if n <= 4 {
        out.push(check("ext table", "table = pointwise formula", (|| {
            for x in &regular.rows {
                for y in &regular.cols {
                    let d = ext1_dimension(x, y).map_err(internal)?;
                    ensure(regular.get(x, y) == Some(d), || format!("({x}, {y}): pointwise {d}"))?;
                }
            }
            Ok(())
        })()));
    }
    out.push(check("singular reduction", "no walls = regular; all walls = zero", (|| {
        let none = ext1_table(n, &WallSet::empty(n)).map_err(internal)?;
        ensure(none == regular, || "empty wall set changes the table".to_string())?;
        let full = ext1_table(n, &WallSet::full(n)).map_err(internal)?;
        ensure(full.entries.iter().flatten().all(|&d| d == 0), || format!("all walls: {:?}", full.entries))?;
        for x in all_permutations(n).iter().step_by(7) {
            for y in all_permutations(n).iter().step_by(5) {
                let d = ext1_dimension_singular(x, y, &WallSet::full(n)).map_err(internal)?;
                ensure(d == 0, || format!("({x}, {y}): all walls gives {d}"))?;
            }
        }
        Ok(())
    })()));
    out
}

/// Names of failing checks, for diff-style reporting.
pub fn failures(results: &[CheckResult]) -> BTreeSet<String> {
    results.iter().filter(|r| !r.passed).map(|r| r.name.clone()).collect()
}
