//! Test-only oracles and generators.
//!
//! The oracle works on explicit sets of pairs with textbook loops and shares no
//! code with the packed-row implementation.

#![allow(dead_code)]

use std::collections::BTreeSet;

use idemrel::Relation;
use rand::Rng;

pub type Pairs = BTreeSet<(usize, usize)>;

pub fn pairs_of(f: &Relation) -> Pairs {
    let mut s = Pairs::new();
    for x in 0..f.n() {
        for y in 0..f.n() {
            if f.contains(x, y) {
                s.insert((x, y));
            }
        }
    }
    s
}

pub fn relation_of(n: usize, p: &Pairs) -> Relation {
    Relation::from_pairs(n, p.iter().copied()).unwrap()
}

/// `{⟨x,z⟩ : ∃y ⟨x,y⟩ ∈ f, ⟨y,z⟩ ∈ g}`.
pub fn compose(n: usize, f: &Pairs, g: &Pairs) -> Pairs {
    let mut out = Pairs::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if f.contains(&(x, y)) && g.contains(&(y, z)) {
                    out.insert((x, z));
                }
            }
        }
    }
    out
}

pub fn inverse(f: &Pairs) -> Pairs {
    f.iter().map(|&(x, y)| (y, x)).collect()
}

pub fn image_of(f: &Pairs, x: usize) -> BTreeSet<usize> {
    f.iter().filter(|p| p.0 == x).map(|p| p.1).collect()
}

pub fn is_full(n: usize, f: &Pairs) -> bool {
    (0..n).all(|x| f.iter().any(|p| p.0 == x))
}

pub fn is_surjective(n: usize, f: &Pairs) -> bool {
    (0..n).all(|y| f.iter().any(|p| p.1 == y))
}

pub fn is_idempotent(n: usize, f: &Pairs) -> bool {
    compose(n, f, f) == *f
}

/// For every x: the pairs of f with first coordinate in f(x) are exactly
/// the diagonal pairs over f(x).
pub fn is_trivial(f: &Pairs) -> bool {
    let firsts: BTreeSet<usize> = f.iter().map(|p| p.0).collect();
    firsts.iter().all(|&x| {
        let a = image_of(f, x);
        let restricted: Pairs = f.iter().filter(|p| a.contains(&p.0)).copied().collect();
        let iota: Pairs = a.iter().map(|&y| (y, y)).collect();
        restricted == iota
    })
}

pub fn has_gamma(n: usize, f: &Pairs) -> bool {
    (0..n).any(|x| {
        (0..n).any(|y| x != y && f.contains(&(x, x)) && f.contains(&(x, y)) && f.contains(&(y, y)))
    })
}

pub fn has_two_point(n: usize, f: &Pairs) -> bool {
    (0..n).any(|x| (0..n).any(|y| x != y && f.contains(&(x, x)) && f.contains(&(x, y))))
}

/// Every relation (full or not) on `n` points.
pub fn all_relations(n: usize) -> impl Iterator<Item = Relation> {
    let cells = n * n;
    (0u64..1 << cells).map(move |bits| {
        let pairs = (0..cells)
            .filter(|&i| bits >> i & 1 == 1)
            .map(|i| (i / n, i % n));
        Relation::from_pairs(n, pairs).unwrap()
    })
}

pub fn random_relation<R: Rng>(rng: &mut R, n: usize) -> Relation {
    let density: f64 = rng.gen_range(0.05..0.95);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|_| rng.gen_bool(density))
        .collect();
    Relation::from_pairs(n, pairs).unwrap()
}

pub fn random_full_relation<R: Rng>(rng: &mut R, n: usize) -> Relation {
    let f = random_relation(rng, n);
    let mut pairs: Vec<(usize, usize)> = f.pairs().collect();
    for x in 0..n {
        if f.row(x).is_empty() {
            pairs.push((x, rng.gen_range(0..n)));
        }
    }
    Relation::from_pairs(n, pairs).unwrap()
}

/// Random full idempotent relation: transitive closure of a random full
/// relation, then powers until they stabilize (`T ⊇ T² ⊇ …` stops at an
/// idempotent power).
pub fn random_idempotent<R: Rng>(rng: &mut R, n: usize) -> Relation {
    let mut t = random_full_relation(rng, n);
    loop {
        let next = Relation::from_pairs(n, t.pairs().chain(t.square().pairs())).unwrap();
        if next == t {
            break;
        }
        t = next;
    }
    let mut p = t.clone();
    loop {
        let next = p.compose(&t).unwrap();
        if next == p {
            break;
        }
        p = next;
    }
    assert!(p.is_idempotent() && p.is_full());
    p
}

/// A random permutation of `0..n`.
pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> idemrel::Permutation {
    use rand::seq::SliceRandom;
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    idemrel::Permutation::new(v).unwrap()
}
