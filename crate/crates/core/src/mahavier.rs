//! Mahavier products `lim{X, f, L}` over finite chains `L = {0 < 1 < … < m-1}`.
//!
//! A thread is a tuple `(x_0, …, x_{m-1})` with `x_l ∈ f(x_{l'})` for all
//! `l < l'`: the bonding relation sends later coordinates to sets containing
//! the earlier ones. With [`Bonding::Adjacent`] only consecutive coordinates
//! are constrained.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::relation::{low_bits, Relation};

/// Largest `nᵐ` that [`threads_naive`] will filter.
pub const NAIVE_CAP: u128 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MahavierError {
    #[error("order length must be at least 1")]
    EmptyOrder,
    #[error("naive enumeration of {n}^{m} tuples exceeds the cap of {NAIVE_CAP}")]
    NaiveCap { n: usize, m: usize },
    #[error("thread count overflows 128 bits")]
    CountOverflow,
    #[error("worker count must be at least 1")]
    NoWorkers,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bonding {
    /// Every pair `l < l'` is constrained (the Mahavier product).
    #[default]
    AllPairs,
    /// Only `l' = l + 1`.
    Adjacent,
}

/// The relation `γ = {⟨0,0⟩, ⟨0,1⟩, ⟨1,1⟩}` on two points.
pub fn gamma_relation() -> Relation {
    Relation::from_rows_unchecked(vec![0b11, 0b10])
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Thread(pub Vec<usize>);

impl Thread {
    pub fn coords(&self) -> &[usize] {
        &self.0
    }

    pub fn satisfies(&self, f: &Relation, bonding: Bonding) -> bool {
        let c = &self.0;
        match bonding {
            Bonding::AllPairs => (0..c.len()).all(|j| (0..j).all(|i| f.contains(c[j], c[i]))),
            Bonding::Adjacent => c.windows(2).all(|w| f.contains(w[1], w[0])),
        }
    }

    /// Coordinatewise `≤`.
    pub fn le(&self, other: &Thread) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

/// All threads of one product, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThreadSet {
    pub n: usize,
    pub m: usize,
    pub threads: Vec<Thread>,
}

impl ThreadSet {
    pub fn len(&self) -> usize {
        self.threads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.threads.is_empty()
    }

    /// Drop the last coordinate of every thread.
    pub fn truncate_last(&self) -> ThreadSet {
        let mut threads: Vec<Thread> = self
            .threads
            .iter()
            .map(|t| Thread(t.0[..t.0.len() - 1].to_vec()))
            .collect();
        threads.dedup();
        ThreadSet {
            n: self.n,
            m: self.m - 1,
            threads,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OrderProfile {
    pub is_coordinatewise_chain: bool,
    pub count: usize,
}

/// Whether the threads are totally ordered coordinatewise.
///
/// A chain under the product order is sorted the same way lexicographically,
/// so comparing lexicographic neighbours suffices.
pub fn thread_order_profile(ts: &ThreadSet) -> OrderProfile {
    OrderProfile {
        is_coordinatewise_chain: ts.threads.windows(2).all(|w| w[0].le(&w[1])),
        count: ts.len(),
    }
}

/// Filter all `nᵐ` tuples.
pub fn threads_naive(f: &Relation, m: usize, bonding: Bonding) -> Result<ThreadSet, MahavierError> {
    if m == 0 {
        return Err(MahavierError::EmptyOrder);
    }
    let n = f.n();
    match (n as u128).checked_pow(m as u32) {
        Some(total) if total <= NAIVE_CAP => {}
        _ => return Err(MahavierError::NaiveCap { n, m }),
    }
    let mut tuple = vec![0usize; m];
    let mut threads = Vec::new();
    loop {
        let t = Thread(tuple.clone());
        if t.satisfies(f, bonding) {
            threads.push(t);
        }
        // Last coordinate fastest keeps the output lexicographic.
        let mut i = m;
        loop {
            if i == 0 {
                return Ok(ThreadSet { n, m, threads });
            }
            i -= 1;
            tuple[i] += 1;
            if tuple[i] < n {
                break;
            }
            tuple[i] = 0;
        }
    }
}

/// Depth-first thread builder with memoized completion counts.
///
/// The state after a prefix is the mask of values admissible for the next
/// coordinate; a branch is entered only when its state can still be
/// completed to full length.
struct Propagator {
    /// `preds[a] = {v : ⟨v,a⟩ ∈ f}`, the values a later coordinate may take above `a`.
    preds: Vec<u64>,
    bonding: Bonding,
    n: usize,
    /// `(state, remaining) ↦ completions`; `None` marks overflow.
    memo: HashMap<(u64, usize), Option<u128>>,
}

impl Propagator {
    fn new(f: &Relation, bonding: Bonding) -> Self {
        let inv = f.inverse();
        Propagator {
            preds: inv.rows().to_vec(),
            bonding,
            n: f.n(),
            memo: HashMap::new(),
        }
    }

    fn start(&self) -> u64 {
        low_bits(self.n)
    }

    #[inline]
    fn next_state(&self, state: u64, v: usize) -> u64 {
        match self.bonding {
            Bonding::AllPairs => state & self.preds[v],
            Bonding::Adjacent => self.preds[v],
        }
    }

    /// Number of ways to place `remaining` more coordinates from `state`.
    fn completions(&mut self, state: u64, remaining: usize) -> Option<u128> {
        if remaining == 0 {
            return Some(1);
        }
        if state == 0 {
            return Some(0);
        }
        if let Some(&c) = self.memo.get(&(state, remaining)) {
            return c;
        }
        let mut total = Some(0u128);
        let mut s = state;
        while s != 0 {
            let v = s.trailing_zeros() as usize;
            s &= s - 1;
            let sub = self.completions(self.next_state(state, v), remaining - 1);
            total = match (total, sub) {
                (Some(a), Some(b)) => a.checked_add(b),
                _ => None,
            };
        }
        self.memo.insert((state, remaining), total);
        total
    }

    fn alive(&mut self, state: u64, remaining: usize) -> bool {
        self.completions(state, remaining) != Some(0)
    }

    fn walk<F: FnMut(&[usize])>(
        &mut self,
        prefix: &mut Vec<usize>,
        state: u64,
        remaining: usize,
        visit: &mut F,
    ) {
        if remaining == 0 {
            visit(prefix);
            return;
        }
        let mut s = state;
        while s != 0 {
            let v = s.trailing_zeros() as usize;
            s &= s - 1;
            let next = self.next_state(state, v);
            if self.alive(next, remaining - 1) {
                prefix.push(v);
                self.walk(prefix, next, remaining - 1, visit);
                prefix.pop();
            }
        }
    }
}

/// Streams every thread of length `m` in lexicographic order.
pub fn for_each_thread<F: FnMut(&[usize])>(
    f: &Relation,
    m: usize,
    bonding: Bonding,
    mut visit: F,
) -> Result<(), MahavierError> {
    if m == 0 {
        return Err(MahavierError::EmptyOrder);
    }
    let mut p = Propagator::new(f, bonding);
    let start = p.start();
    p.walk(&mut Vec::with_capacity(m), start, m, &mut visit);
    Ok(())
}

pub fn threads_propagate(
    f: &Relation,
    m: usize,
    bonding: Bonding,
) -> Result<ThreadSet, MahavierError> {
    let mut threads = Vec::new();
    for_each_thread(f, m, bonding, |c| threads.push(Thread(c.to_vec())))?;
    Ok(ThreadSet {
        n: f.n(),
        m,
        threads,
    })
}

/// [`threads_propagate`] fanned out over the first coordinate; the branches
/// are concatenated in coordinate order, so the output is worker-independent.
pub fn threads_propagate_parallel(
    f: &Relation,
    m: usize,
    bonding: Bonding,
    workers: usize,
) -> Result<ThreadSet, MahavierError> {
    if m == 0 {
        return Err(MahavierError::EmptyOrder);
    }
    if workers == 0 {
        return Err(MahavierError::NoWorkers);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool");
    let branches: Vec<Vec<Thread>> = pool.install(|| {
        (0..f.n())
            .into_par_iter()
            .map(|v| {
                let mut p = Propagator::new(f, bonding);
                let next = p.next_state(p.start(), v);
                let mut out = Vec::new();
                if p.alive(next, m - 1) {
                    p.walk(&mut vec![v], next, m - 1, &mut |c: &[usize]| {
                        out.push(Thread(c.to_vec()))
                    });
                }
                out
            })
            .collect()
    });
    Ok(ThreadSet {
        n: f.n(),
        m,
        threads: branches.into_iter().flatten().collect(),
    })
}

/// Exact thread count without materializing threads.
pub fn count_threads(f: &Relation, m: usize, bonding: Bonding) -> Result<u128, MahavierError> {
    if m == 0 {
        return Err(MahavierError::EmptyOrder);
    }
    let mut p = Propagator::new(f, bonding);
    let start = p.start();
    p.completions(start, m).ok_or(MahavierError::CountOverflow)
}
