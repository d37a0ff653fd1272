//! Exhaustive generation of full relations and the idempotent census.
//!
//! Full relations on `n` points are enumerated as an odometer over rows, each
//! row running through the nonempty masks `1..2ⁿ`, row 0 most significant.
//! The census splits that odometer by the value of row 0 and merges the
//! per-partition tallies, so the report does not depend on the worker count.

use std::ops::AddAssign;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::relation::{low_bits, Permutation, PointSet, Relation, RelationError};
use crate::witness::gamma_witness;

/// Largest carrier the census scans (`31⁵ ≈ 2.9·10⁷` candidates).
pub const MAX_CENSUS_POINTS: usize = 5;
/// Largest carrier for the brute-force canonical form (`8! = 40320` relabelings).
pub const MAX_CANONICAL_POINTS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("n={n} is over the {what} cap of {cap}{hint}")]
    OverCap {
        n: usize,
        cap: usize,
        what: &'static str,
        hint: String,
    },
    #[error(transparent)]
    Relation(#[from] RelationError),
    #[error("worker count must be at least 1")]
    NoWorkers,
}

fn census_cap(n: usize) -> Result<PointSet, EnumError> {
    let ps = PointSet::new(n)?;
    if n > MAX_CENSUS_POINTS {
        let candidates = (low_bits(n) as u128).pow(n as u32);
        return Err(EnumError::OverCap {
            n,
            cap: MAX_CENSUS_POINTS,
            what: "census",
            hint: format!(" ({candidates} full relations would be scanned)"),
        });
    }
    Ok(ps)
}

/// Streams every full relation on `n` points exactly once, in odometer order.
pub struct FullRelations {
    rows: Vec<u64>,
    max: u64,
    done: bool,
}

impl Iterator for FullRelations {
    type Item = Relation;

    fn next(&mut self) -> Option<Relation> {
        if self.done {
            return None;
        }
        let out = Relation::from_rows_unchecked(self.rows.clone());
        self.done = !odometer_step(&mut self.rows, self.max);
        Some(out)
    }
}

/// Advances the rows as an odometer; `false` once it wraps around.
#[inline]
fn odometer_step(rows: &mut [u64], max: u64) -> bool {
    for r in rows.iter_mut().rev() {
        if *r < max {
            *r += 1;
            return true;
        }
        *r = 1;
    }
    false
}

pub fn enum_full(n: usize) -> Result<FullRelations, EnumError> {
    let ps = census_cap(n)?;
    Ok(FullRelations {
        rows: vec![1; ps.len()],
        max: low_bits(n),
        done: false,
    })
}

pub fn enum_idempotent(n: usize) -> Result<impl Iterator<Item = Relation>, EnumError> {
    Ok(enum_full(n)?.filter(Relation::is_idempotent))
}

/// `f = f²` on raw packed rows.
#[inline]
fn rows_idempotent(rows: &[u64]) -> bool {
    rows.iter().all(|&r| {
        let mut acc = 0u64;
        let mut m = r;
        while m != 0 {
            acc |= rows[m.trailing_zeros() as usize];
            m &= m - 1;
        }
        acc == r
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..left.len() {
            let x = left.remove(i);
            prefix.push(x);
            go(prefix, left, out);
            prefix.pop();
            left.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}

/// Least relabeling of `f` under the row-wise lexicographic order.
pub fn canonical_form(f: &Relation) -> Result<Relation, EnumError> {
    let n = f.n();
    if n > MAX_CANONICAL_POINTS {
        return Err(EnumError::OverCap {
            n,
            cap: MAX_CANONICAL_POINTS,
            what: "canonical form",
            hint: String::new(),
        });
    }
    let best = permutations(n)
        .into_iter()
        .map(|p| {
            f.apply_permutation(&Permutation::new(p).expect("generated permutation"))
                .expect("same size")
        })
        .min()
        .expect("at least one permutation");
    Ok(best)
}

/// Relabeling tables for the census: for each permutation, its inverse and
/// the image of every row mask.
struct Relabelings {
    inverse: Vec<Vec<usize>>,
    masks: Vec<Vec<u64>>,
    factorial: u64,
}

impl Relabelings {
    fn new(n: usize) -> Self {
        let perms = permutations(n);
        let factorial = perms.len() as u64;
        let mut inverse = Vec::new();
        let mut masks = Vec::new();
        // The identity comes first; skip it.
        for p in perms.into_iter().skip(1) {
            let mut inv = vec![0; n];
            for (x, &y) in p.iter().enumerate() {
                inv[y] = x;
            }
            let table = (0..1u64 << n)
                .map(|m| {
                    (0..n)
                        .filter(|&x| m >> x & 1 == 1)
                        .fold(0, |acc, x| acc | 1 << p[x])
                })
                .collect();
            inverse.push(inv);
            masks.push(table);
        }
        Relabelings {
            inverse,
            masks,
            factorial,
        }
    }

    /// `Some(|Aut(f)|)` when `rows` is the least member of its orbit.
    fn canonical_automorphisms(&self, rows: &[u64]) -> Option<u64> {
        let mut aut = 1;
        for (inv, table) in self.inverse.iter().zip(&self.masks) {
            let mut equal = true;
            for (i, &r) in rows.iter().enumerate() {
                let relabeled = table[rows[inv[i]] as usize];
                if relabeled != r {
                    if relabeled < r {
                        return None;
                    }
                    equal = false;
                    break;
                }
            }
            if equal {
                aut += 1;
            }
        }
        Some(aut)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SurveyMode {
    All,
    UpToIso,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub full: u64,
    pub idempotent_full: u64,
    pub nontrivial_idempotent: u64,
    pub trivial_idempotent: u64,
    pub gamma_idempotent: u64,
    pub surjective_idempotent: u64,
    pub identity_count: u64,
}

impl AddAssign for Counts {
    fn add_assign(&mut self, o: Counts) {
        self.full += o.full;
        self.idempotent_full += o.idempotent_full;
        self.nontrivial_idempotent += o.nontrivial_idempotent;
        self.trivial_idempotent += o.trivial_idempotent;
        self.gamma_idempotent += o.gamma_idempotent;
        self.surjective_idempotent += o.surjective_idempotent;
        self.identity_count += o.identity_count;
    }
}

impl Counts {
    fn scaled(self, k: u64) -> Counts {
        Counts {
            full: self.full * k,
            idempotent_full: self.idempotent_full * k,
            nontrivial_idempotent: self.nontrivial_idempotent * k,
            trivial_idempotent: self.trivial_idempotent * k,
            gamma_idempotent: self.gamma_idempotent * k,
            surjective_idempotent: self.surjective_idempotent * k,
            identity_count: self.identity_count * k,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub relation: Relation,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyReport {
    pub n: usize,
    pub mode: SurveyMode,
    /// Relation counts in `All` mode, isomorphism-class counts in `UpToIso`.
    pub counts: Counts,
    /// `UpToIso` only: class counts weighted by orbit size.
    pub orbit_weighted: Option<Counts>,
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Default)]
struct Tally {
    counts: Counts,
    weighted: Counts,
    counterexamples: Vec<Counterexample>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.counts += other.counts;
        self.weighted += other.weighted;
        self.counterexamples.extend(other.counterexamples);
        self
    }
}

/// Per-relation classification for an idempotent full `f`; returns the
/// contribution to the counts, or the first violated claim.
pub fn audit_idempotent(f: &Relation) -> Result<Counts, String> {
    let mut c = Counts {
        idempotent_full: 1,
        ..Counts::default()
    };
    let nontrivial = f
        .nontriviality_witness()
        .map_err(|e| e.to_string())?
        .is_some();
    let gamma = f.satisfies_gamma();
    let two = f.two_point_witness();
    if nontrivial != gamma.is_some() || gamma.is_some() != two.is_some() {
        return Err(format!(
            "nontrivial={nontrivial} gamma={gamma:?} two_point={two:?} disagree"
        ));
    }
    if nontrivial {
        c.nontrivial_idempotent = 1;
        let w = gamma_witness(f).map_err(|e| format!("gamma_witness: {e}"))?;
        let (x, y) = w.pair;
        if !(x != y && f.contains(x, x) && f.contains(x, y) && f.contains(y, y)) {
            return Err(format!("gamma_witness returned invalid pair {:?}", w.pair));
        }
        if !w.lemma1.validate(f) || !w.lemma2.validate(&f.inverse()) {
            return Err("witness chain failed validation".into());
        }
    } else {
        c.trivial_idempotent = 1;
    }
    if gamma.is_some() {
        c.gamma_idempotent = 1;
    }
    if f.is_surjective() {
        c.surjective_idempotent = 1;
        if (!nontrivial || f.is_single_valued()) && !f.is_identity() {
            return Err("trivial or single-valued idempotent surjection is not ι".into());
        }
    }
    if f.is_identity() {
        c.identity_count = 1;
    }
    let inv = f.inverse();
    if inv.square() != f.square().inverse() || !inv.is_idempotent() {
        return Err("(f⁻¹)² ≠ (f²)⁻¹".into());
    }
    Ok(c)
}

fn survey_partition(n: usize, row0: u64, relabel: Option<&Relabelings>) -> Tally {
    let max = low_bits(n);
    let mut rows = vec![1u64; n];
    rows[0] = row0;
    let mut tally = Tally::default();
    loop {
        let weight = match relabel {
            None => Some(1),
            Some(r) => r
                .canonical_automorphisms(&rows)
                .map(|aut| r.factorial / aut),
        };
        if let Some(weight) = weight {
            tally.counts.full += 1;
            tally.weighted.full += weight;
            if rows_idempotent(&rows) {
                let f = Relation::from_rows_unchecked(rows.clone());
                match audit_idempotent(&f) {
                    Ok(c) => {
                        tally.counts += Counts { full: 0, ..c };
                        tally.weighted += Counts { full: 0, ..c }.scaled(weight);
                    }
                    Err(reason) => tally.counterexamples.push(Counterexample {
                        relation: f,
                        reason,
                    }),
                }
            }
        }
        if !odometer_step(&mut rows[1..], max) {
            break;
        }
    }
    tally
}

/// Exhaustive census of all full relations on `n` points.
///
/// Every idempotent one is classified and checked: triviality, condition Γ and
/// the two-point condition agree; the constructive pipeline produces a valid Γ
/// pair when nontrivial; trivial surjections are the identity; inversion
/// commutes with squaring.
pub fn survey(n: usize, mode: SurveyMode, workers: usize) -> Result<SurveyReport, EnumError> {
    census_cap(n)?;
    if workers == 0 {
        return Err(EnumError::NoWorkers);
    }
    let start = Instant::now();
    let relabel = (mode == SurveyMode::UpToIso).then(|| Relabelings::new(n));
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool");
    let tally = pool.install(|| {
        (1..=low_bits(n))
            .into_par_iter()
            .map(|row0| survey_partition(n, row0, relabel.as_ref()))
            .reduce(Tally::default, Tally::merge)
    });
    let mut counterexamples = tally.counterexamples;
    counterexamples.sort_by(|a, b| a.relation.cmp(&b.relation));
    Ok(SurveyReport {
        n,
        mode,
        counts: tally.counts,
        orbit_weighted: relabel.is_some().then_some(tally.weighted),
        counterexamples,
        elapsed: start.elapsed(),
    })
}
