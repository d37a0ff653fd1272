//! Constructive witness extraction for idempotent bonding relations.
//!
//! [`lemma1_witness`] and [`lemma2_witness`] follow the chain constructions
//! literally: each step picks the least fresh successor of the last chain
//! point and stops at the first reflexive one. On a finite carrier the chain
//! cannot outgrow the carrier, so the compactness step of the infinite
//! argument never happens; running out of fresh points is a logic error and
//! panics. [`gamma_witness`] chains the two through the inverse relation.

use serde::Serialize;
use thiserror::Error;

use crate::relation::{Relation, Subset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("precondition violated: relation is not full (row {0} is empty)")]
    NotFull(usize),
    #[error("precondition violated: relation is not idempotent")]
    NotIdempotent,
    #[error("precondition violated: relation is trivial")]
    Trivial,
    #[error("precondition violated: seed ({x},{y}) needs distinct points with ⟨x,x⟩ and ⟨x,y⟩ in the relation")]
    BadSeed { x: usize, y: usize },
    #[error("chain invariant broken at step {step}: {detail}")]
    Invariant { step: usize, detail: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainKind {
    Lemma1,
    Lemma2,
}

/// Trace of one chain construction.
///
/// For [`ChainKind::Lemma1`], `result = (x, y)` with `⟨x,x⟩, ⟨y,x⟩ ∈ f`; an
/// empty chain means `ι ⊊ f` and the least off-diagonal pair was used.
/// For [`ChainKind::Lemma2`], `result = (x, z)` with `⟨x,x⟩, ⟨x,z⟩, ⟨z,z⟩ ∈ f`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessChain {
    pub kind: ChainKind,
    pub chain: Vec<usize>,
    pub seed: Option<(usize, usize)>,
    pub result: (usize, usize),
}

impl WitnessChain {
    /// Checks distinctness, consecutive membership, the length bound, and
    /// the result pattern against `f`.
    pub fn validate(&self, f: &Relation) -> bool {
        let distinct = {
            let s: Subset = self.chain.iter().copied().collect();
            s.len() == self.chain.len()
        };
        let linked = self.chain.windows(2).all(|w| f.contains(w[0], w[1]));
        let (a, b) = self.result;
        let pattern = match self.kind {
            ChainKind::Lemma1 => a != b && f.contains(a, a) && f.contains(b, a),
            ChainKind::Lemma2 => a != b && f.contains(a, a) && f.contains(a, b) && f.contains(b, b),
        };
        distinct && linked && self.chain.len() <= f.n() && pattern
    }
}

/// Output of the full pipeline: a condition-Γ pair for `f` plus both traces,
/// in the labels of `f`. `lemma1` is a chain of `f`, `lemma2` of `f⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaWitness {
    pub pair: (usize, usize),
    /// The range `f[X]` the chains ran on.
    pub core: Vec<usize>,
    pub lemma1: WitnessChain,
    pub lemma2: WitnessChain,
}

fn require_full_idempotent(f: &Relation) -> Result<(), WitnessError> {
    if let Some(row) = f.rows().iter().position(|&r| r == 0) {
        return Err(WitnessError::NotFull(row));
    }
    if !f.is_idempotent() {
        return Err(WitnessError::NotIdempotent);
    }
    Ok(())
}

fn fresh_successor(f: &Relation, from: usize, used: Subset, kind: &str) -> usize {
    let fresh = f.row(from).0 & !used.0;
    match Subset(fresh).first() {
        Some(x) => x,
        None => panic!(
            "{kind} chain exhausted fresh points at {from} in {f:?}; \
             impossible for a full idempotent relation"
        ),
    }
}

/// Finds distinct `x, y` with `⟨x,x⟩, ⟨y,x⟩ ∈ f`; returned as `result = (x, y)`.
pub fn lemma1_witness(f: &Relation) -> Result<WitnessChain, WitnessError> {
    require_full_idempotent(f)?;
    if f.nontriviality_witness().expect("full").is_none() {
        return Err(WitnessError::Trivial);
    }
    let n = f.n();
    let refl = f.reflexive_points();

    if refl.len() == n {
        // ι ⊊ f: any off-diagonal ⟨y,x⟩ pairs with ⟨x,x⟩.
        let (y, x) = f
            .pairs()
            .find(|&(a, b)| a != b)
            .expect("nontrivial relation containing ι has an off-diagonal pair");
        return Ok(WitnessChain {
            kind: ChainKind::Lemma1,
            chain: Vec::new(),
            seed: None,
            result: (x, y),
        });
    }

    let x0 = (0..n)
        .find(|&x| !refl.contains(x))
        .expect("some point is not reflexive");
    let mut chain = vec![x0];
    let mut used = Subset::singleton(x0);
    loop {
        let last = *chain.last().unwrap();
        let next = fresh_successor(f, last, used, "lemma1");
        let k = chain.len();
        // ⟨x_i, x_next⟩ ∈ f for all i by transitivity, and ⟨x_next, x_i⟩ ∉ f.
        for (i, &c) in chain.iter().enumerate() {
            if !f.contains(c, next) {
                return Err(WitnessError::Invariant {
                    step: k,
                    detail: format!("⟨x_{i},x_{k}⟩ = ⟨{c},{next}⟩ missing"),
                });
            }
            if f.contains(next, c) {
                return Err(WitnessError::Invariant {
                    step: k,
                    detail: format!("⟨x_{k},x_{i}⟩ = ⟨{next},{c}⟩ present"),
                });
            }
        }
        chain.push(next);
        used.insert(next);
        if refl.contains(next) {
            return Ok(WitnessChain {
                kind: ChainKind::Lemma1,
                chain,
                seed: None,
                result: (next, last),
            });
        }
    }
}

/// From `⟨x,x⟩, ⟨x,y⟩ ∈ f` with `x ≠ y`, finds `z ≠ x` with
/// `⟨x,x⟩, ⟨x,z⟩, ⟨z,z⟩ ∈ f`; returned as `result = (x, z)`.
pub fn lemma2_witness(f: &Relation, x: usize, y: usize) -> Result<WitnessChain, WitnessError> {
    require_full_idempotent(f)?;
    if x == y || !f.contains(x, x) || !f.contains(x, y) {
        return Err(WitnessError::BadSeed { x, y });
    }
    let refl = f.reflexive_points();
    let mut chain = vec![y];
    let mut used = Subset::singleton(y);
    let mut last = y;
    while !refl.contains(last) {
        let k = chain.len() - 1;
        if f.contains(last, x) {
            return Err(WitnessError::Invariant {
                step: k,
                detail: format!("⟨z_{k},x⟩ = ⟨{last},{x}⟩ present"),
            });
        }
        let next = fresh_successor(f, last, used, "lemma2");
        if !f.contains(x, next) {
            return Err(WitnessError::Invariant {
                step: k + 1,
                detail: format!("⟨x,z_{}⟩ = ⟨{x},{next}⟩ missing", k + 1),
            });
        }
        if let Some(i) = chain.iter().position(|&c| !f.contains(c, next)) {
            return Err(WitnessError::Invariant {
                step: k + 1,
                detail: format!("⟨z_{i},z_{}⟩ = ⟨{},{next}⟩ missing", k + 1, chain[i]),
            });
        }
        if let Some(i) = chain.iter().position(|&c| f.contains(next, c)) {
            return Err(WitnessError::Invariant {
                step: k + 1,
                detail: format!("⟨z_{},z_{i}⟩ = ⟨{next},{}⟩ present", k + 1, chain[i]),
            });
        }
        chain.push(next);
        used.insert(next);
        last = next;
    }
    Ok(WitnessChain {
        kind: ChainKind::Lemma2,
        chain,
        seed: Some((x, y)),
        result: (x, last),
    })
}

/// Nontrivial ⟹ Γ, constructively: Lemma-1 chain, then a Lemma-2 chain on
/// the inverse seeded with the transposed pair, then transpose the triple back.
///
/// Both chains run on `f` restricted to its range `f[X]` (relabeled in
/// increasing order, traces mapped back). That restriction is full,
/// surjective and idempotent, so its inverse is a bonding relation as the
/// second chain requires; `f⁻¹` itself can have empty rows when `f` is not
/// surjective, and the chain would then get stuck. For surjective `f` the
/// restriction is `f` itself.
///
/// The pair is a valid Γ witness but not necessarily the least one.
pub fn gamma_witness(f: &Relation) -> Result<GammaWitness, WitnessError> {
    require_full_idempotent(f)?;
    if f.nontriviality_witness().expect("full").is_none() {
        return Err(WitnessError::Trivial);
    }
    let core: Vec<usize> = f.range().iter().collect();
    let h = f
        .induced(&core)
        .expect("range of a full relation is nonempty");
    let relabel = |w: WitnessChain| WitnessChain {
        chain: w.chain.iter().map(|&c| core[c]).collect(),
        seed: w.seed.map(|(a, b)| (core[a], core[b])),
        result: (core[w.result.0], core[w.result.1]),
        kind: w.kind,
    };

    let lemma1 = lemma1_witness(&h)?;
    let (x, y) = lemma1.result;
    let lemma2 = lemma2_witness(&h.inverse(), x, y)?;
    let (a, b) = lemma2.result;
    // ⟨a,a⟩, ⟨a,b⟩, ⟨b,b⟩ ∈ h⁻¹  ⟹  ⟨b,b⟩, ⟨b,a⟩, ⟨a,a⟩ ∈ h ⊆ f.
    Ok(GammaWitness {
        pair: (core[b], core[a]),
        lemma1: relabel(lemma1),
        lemma2: relabel(lemma2),
        core,
    })
}
