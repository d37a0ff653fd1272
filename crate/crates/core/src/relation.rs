//! Binary relations on the finite discrete carrier `{0, …, n-1}`.
//!
//! A [`Relation`] stores one machine word per point: bit `y` of row `x` is set
//! iff `⟨x,y⟩` belongs to the relation, so `rows[x]` is the image `f(x)`.
//! Every finite Hausdorff space is discrete, which makes "closed" vacuous and
//! a bonding relation is just a full relation.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Largest supported carrier: one `u64` word per row.
pub const MAX_POINTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelationError {
    #[error("carrier must be nonempty")]
    EmptyCarrier,
    #[error("carrier of {n} points exceeds the supported maximum of {max}")]
    CarrierTooLarge { n: usize, max: usize },
    #[error("point {point} out of range 0..{n}")]
    PointOutOfRange { point: usize, n: usize },
    #[error("carrier size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("relation is not full: row {row} is empty")]
    NotFull { row: usize },
    #[error("not a permutation of 0..{n}")]
    NotBijection { n: usize },
}

/// The carrier `{0, …, n-1}`, `1 <= n <= MAX_POINTS`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet(usize);

impl PointSet {
    pub fn new(n: usize) -> Result<Self, RelationError> {
        if n == 0 {
            return Err(RelationError::EmptyCarrier);
        }
        if n > MAX_POINTS {
            return Err(RelationError::CarrierTooLarge { n, max: MAX_POINTS });
        }
        Ok(PointSet(n))
    }

    pub fn len(self) -> usize {
        self.0
    }

    /// Always false; carriers are nonempty by construction.
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Mask with one bit per point.
    pub fn all(self) -> Subset {
        Subset(low_bits(self.0))
    }
}

pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A set of points, packed as a bit mask.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn singleton(x: usize) -> Self {
        Subset(1u64 << x)
    }

    pub fn contains(self, x: usize) -> bool {
        x < 64 && self.0 >> x & 1 == 1
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1u64 << x;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Least member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> SubsetIter {
        SubsetIter(self.0)
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Subset::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl IntoIterator for Subset {
    type Item = usize;
    type IntoIter = SubsetIter;
    fn into_iter(self) -> SubsetIter {
        self.iter()
    }
}

/// Members of a [`Subset`] in increasing order.
pub struct SubsetIter(u64);

impl Iterator for SubsetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }
}

/// A bijection on `0..n`, stored as the image list `σ(0), …, σ(n-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, RelationError> {
        let n = images.len();
        let mut seen = 0u64;
        for &y in &images {
            if y >= n || seen >> y & 1 == 1 {
                return Err(RelationError::NotBijection { n });
            }
            seen |= 1 << y;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn map_subset(&self, s: Subset) -> Subset {
        s.iter().map(|x| self.0[x]).collect()
    }
}

/// A binary relation `f ⊆ X²` on `X = {0, …, n-1}`.
///
/// Ordering compares rows lexicographically as packed words (row 0 first),
/// which is the order canonical forms minimize over.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relation {
    n: usize,
    rows: Vec<u64>,
}

impl Relation {
    pub fn empty(ps: PointSet) -> Self {
        Relation {
            n: ps.len(),
            rows: vec![0; ps.len()],
        }
    }

    /// Build from packed rows. Bits at or above `n` are rejected.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self, RelationError> {
        let n = PointSet::new(rows.len())?.len();
        let mask = low_bits(n);
        for &r in &rows {
            if r & !mask != 0 {
                let point = (r & !mask).trailing_zeros() as usize;
                return Err(RelationError::PointOutOfRange { point, n });
            }
        }
        Ok(Relation { n, rows })
    }

    pub fn from_pairs<I>(n: usize, pairs: I) -> Result<Self, RelationError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut f = Relation::empty(PointSet::new(n)?);
        for (x, y) in pairs {
            f.check_point(x)?;
            f.check_point(y)?;
            f.rows[x] |= 1 << y;
        }
        Ok(f)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        Relation {
            n: rows.len(),
            rows,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn point_set(&self) -> PointSet {
        PointSet(self.n)
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// `f(x) = {y : ⟨x,y⟩ ∈ f}`.
    pub fn row(&self, x: usize) -> Subset {
        Subset(self.rows[x])
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        x < self.n && y < self.n && self.rows[x] >> y & 1 == 1
    }

    /// All pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |x| self.row(x).iter().map(move |y| (x, y)))
    }

    pub fn pair_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    fn check_point(&self, x: usize) -> Result<(), RelationError> {
        if x < self.n {
            Ok(())
        } else {
            Err(RelationError::PointOutOfRange {
                point: x,
                n: self.n,
            })
        }
    }

    fn check_subset(&self, a: Subset) -> Result<(), RelationError> {
        let stray = a.0 & !low_bits(self.n);
        if stray != 0 {
            return Err(RelationError::PointOutOfRange {
                point: stray.trailing_zeros() as usize,
                n: self.n,
            });
        }
        Ok(())
    }

    fn check_same_carrier(&self, other: &Relation) -> Result<(), RelationError> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(RelationError::SizeMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }

    /// `f[A] = ⋃_{x∈A} f(x)`; out-of-range members of `a` are rejected.
    pub fn image(&self, a: Subset) -> Result<Subset, RelationError> {
        self.check_subset(a)?;
        Ok(self.image_unchecked(a))
    }

    #[inline]
    pub(crate) fn image_unchecked(&self, a: Subset) -> Subset {
        Subset(a.iter().fold(0, |acc, x| acc | self.rows[x]))
    }

    /// `g ∘ f`, i.e. `x ↦ g[f(x)]`. `f.compose(&f)` is `f²`.
    pub fn compose(&self, g: &Relation) -> Result<Relation, RelationError> {
        self.check_same_carrier(g)?;
        Ok(self.compose_unchecked(g))
    }

    pub(crate) fn compose_unchecked(&self, g: &Relation) -> Relation {
        let rows = self
            .rows
            .iter()
            .map(|&r| g.image_unchecked(Subset(r)).0)
            .collect();
        Relation { n: self.n, rows }
    }

    pub fn square(&self) -> Relation {
        self.compose_unchecked(self)
    }

    /// Transpose: `{⟨y,x⟩ : ⟨x,y⟩ ∈ f}`.
    pub fn inverse(&self) -> Relation {
        let mut rows = vec![0u64; self.n];
        for (x, &r) in self.rows.iter().enumerate() {
            for y in Subset(r) {
                rows[y] |= 1 << x;
            }
        }
        Relation { n: self.n, rows }
    }

    /// `f↾A`: rows outside `a` are emptied; the carrier is not reindexed.
    pub fn restrict(&self, a: Subset) -> Result<Relation, RelationError> {
        self.check_subset(a)?;
        Ok(self.restrict_unchecked(a))
    }

    fn restrict_unchecked(&self, a: Subset) -> Relation {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(x, &r)| if a.contains(x) { r } else { 0 })
            .collect();
        Relation { n: self.n, rows }
    }

    /// `{⟨σ(x),σ(y)⟩ : ⟨x,y⟩ ∈ f}`.
    pub fn apply_permutation(&self, sigma: &Permutation) -> Result<Relation, RelationError> {
        if sigma.len() != self.n {
            return Err(RelationError::NotBijection { n: self.n });
        }
        let mut rows = vec![0u64; self.n];
        for (x, &r) in self.rows.iter().enumerate() {
            rows[sigma.apply(x)] = sigma.map_subset(Subset(r)).0;
        }
        Ok(Relation { n: self.n, rows })
    }

    /// The relation induced on `points` (in the given order), relabeled to
    /// `0..points.len()`: `⟨i,j⟩` iff `⟨points[i], points[j]⟩ ∈ f`.
    pub fn induced(&self, points: &[usize]) -> Result<Relation, RelationError> {
        PointSet::new(points.len())?;
        for &p in points {
            self.check_point(p)?;
        }
        let rows = points
            .iter()
            .map(|&p| {
                points
                    .iter()
                    .enumerate()
                    .filter(|&(_, &q)| self.contains(p, q))
                    .fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        Ok(Relation {
            n: points.len(),
            rows,
        })
    }

    /// `f[X]`.
    pub fn range(&self) -> Subset {
        Subset(self.rows.iter().fold(0, |acc, &r| acc | r))
    }

    pub fn is_full(&self) -> bool {
        self.rows.iter().all(|&r| r != 0)
    }

    pub fn is_idempotent(&self) -> bool {
        self.rows
            .iter()
            .all(|&r| self.image_unchecked(Subset(r)).0 == r)
    }

    pub fn is_surjective(&self) -> bool {
        self.range().0 == low_bits(self.n)
    }

    pub fn is_single_valued(&self) -> bool {
        self.rows.iter().all(|&r| r.count_ones() == 1)
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(x, &r)| r == 1u64 << x)
    }

    /// Least `(x, a)` with `a ∈ f(x)` and `f(a) ≠ {a}`, if any.
    ///
    /// This is the nontriviality test for full relations: `f↾f(x) = ι↾f(x)`
    /// for every `x` iff every `a ∈ f(x)` has `f(a) = {a}`.
    pub fn nontriviality_witness(&self) -> Result<Option<(usize, usize)>, RelationError> {
        if let Some(row) = self.rows.iter().position(|&r| r == 0) {
            return Err(RelationError::NotFull { row });
        }
        Ok(self.nontriviality_witness_unchecked())
    }

    fn nontriviality_witness_unchecked(&self) -> Option<(usize, usize)> {
        // Points whose row is not their own singleton.
        let bad: u64 = self
            .rows
            .iter()
            .enumerate()
            .filter(|&(a, &r)| r != 1u64 << a)
            .fold(0, |acc, (a, _)| acc | 1 << a);
        self.rows.iter().enumerate().find_map(|(x, &r)| {
            let hit = r & bad;
            (hit != 0).then(|| (x, hit.trailing_zeros() as usize))
        })
    }

    pub fn is_trivial(&self) -> Result<bool, RelationError> {
        Ok(self.nontriviality_witness()?.is_none())
    }

    /// Literal form of triviality: compares `f↾f(x)` with `ι↾f(x)` for every `x`.
    pub fn is_trivial_literal(&self) -> Result<bool, RelationError> {
        if let Some(row) = self.rows.iter().position(|&r| r == 0) {
            return Err(RelationError::NotFull { row });
        }
        let iota = identity(self.point_set());
        Ok(self.rows.iter().all(|&r| {
            let a = Subset(r);
            self.restrict_unchecked(a) == iota.restrict_unchecked(a)
        }))
    }

    /// Lexicographically least distinct `(x, y)` with `⟨x,x⟩, ⟨x,y⟩, ⟨y,y⟩ ∈ f`.
    pub fn satisfies_gamma(&self) -> Option<(usize, usize)> {
        let refl = self.reflexive_points();
        refl.iter().find_map(|x| {
            let hit = self.rows[x] & refl.0 & !(1u64 << x);
            (hit != 0).then(|| (x, hit.trailing_zeros() as usize))
        })
    }

    /// Lexicographically least distinct `(x, y)` with `⟨x,x⟩, ⟨x,y⟩ ∈ f`.
    pub fn two_point_witness(&self) -> Option<(usize, usize)> {
        self.reflexive_points().iter().find_map(|x| {
            let hit = self.rows[x] & !(1u64 << x);
            (hit != 0).then(|| (x, hit.trailing_zeros() as usize))
        })
    }

    /// `{x : ⟨x,x⟩ ∈ f}`.
    pub fn reflexive_points(&self) -> Subset {
        Subset(
            self.rows
                .iter()
                .enumerate()
                .filter(|&(x, &r)| r >> x & 1 == 1)
                .fold(0, |acc, (x, _)| acc | 1 << x),
        )
    }

    pub fn report(&self) -> PropertyReport {
        PropertyReport::of(self)
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.pairs().map(|(x, y)| Pair(x, y)))
            .finish()
    }
}

struct Pair(usize, usize);

impl fmt::Debug for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{},{}⟩", self.0, self.1)
    }
}

/// `ι = {⟨x,x⟩ : x ∈ X}`.
pub fn identity(ps: PointSet) -> Relation {
    Relation {
        n: ps.len(),
        rows: (0..ps.len()).map(|x| 1u64 << x).collect(),
    }
}

/// `X²`, every pair present.
pub fn full_square(ps: PointSet) -> Relation {
    Relation {
        n: ps.len(),
        rows: vec![low_bits(ps.len()); ps.len()],
    }
}

/// Predicate profile of one relation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub n: usize,
    pub full: bool,
    pub idempotent: bool,
    pub surjective: bool,
    pub single_valued: bool,
    /// `None` when the relation is not full; triviality is only defined for bonding relations.
    pub trivial: Option<bool>,
    pub gamma: bool,
    pub gamma_witness: Option<(usize, usize)>,
    pub two_point_witness: Option<(usize, usize)>,
    pub nontriviality_witness: Option<(usize, usize)>,
}

impl PropertyReport {
    pub fn of(f: &Relation) -> Self {
        let full = f.is_full();
        let nontriviality_witness = if full {
            f.nontriviality_witness_unchecked()
        } else {
            None
        };
        let gamma_witness = f.satisfies_gamma();
        PropertyReport {
            n: f.n(),
            full,
            idempotent: f.is_idempotent(),
            surjective: f.is_surjective(),
            single_valued: f.is_single_valued(),
            trivial: full.then_some(nontriviality_witness.is_none()),
            gamma: gamma_witness.is_some(),
            gamma_witness,
            two_point_witness: f.two_point_witness(),
            nontriviality_witness,
        }
    }

    /// Every reported witness holds in `f`, and flags agree with witnesses.
    pub fn validates_against(&self, f: &Relation) -> bool {
        let gamma_ok = match self.gamma_witness {
            Some((x, y)) => x != y && f.contains(x, x) && f.contains(x, y) && f.contains(y, y),
            None => true,
        };
        let two_ok = match self.two_point_witness {
            Some((x, y)) => x != y && f.contains(x, x) && f.contains(x, y),
            None => true,
        };
        let nontriv_ok = match self.nontriviality_witness {
            Some((x, a)) => f.contains(x, a) && f.row(a) != Subset::singleton(a),
            None => true,
        };
        let trivial_ok = match self.trivial {
            Some(t) => t == self.nontriviality_witness.is_none(),
            None => self.nontriviality_witness.is_none() && !self.full,
        };
        self.gamma == self.gamma_witness.is_some() && gamma_ok && two_ok && nontriv_ok && trivial_ok
    }

    /// Flags only; witnesses vary under relabeling.
    pub fn flags(&self) -> [Option<bool>; 7] {
        [
            Some(self.full),
            Some(self.idempotent),
            Some(self.surjective),
            Some(self.single_valued),
            self.trivial,
            Some(self.gamma),
            Some(self.two_point_witness.is_some()),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(n: usize, pairs: &[(usize, usize)]) -> Relation {
        Relation::from_pairs(n, pairs.iter().copied()).unwrap()
    }

    fn t() -> Relation {
        rel(3, &[(0, 0), (1, 1), (2, 0), (2, 1)])
    }

    fn gamma() -> Relation {
        rel(2, &[(0, 0), (0, 1), (1, 1)])
    }

    fn set(xs: &[usize]) -> Subset {
        xs.iter().copied().collect()
    }

    #[test]
    fn identity_small() {
        let i1 = identity(PointSet::new(1).unwrap());
        assert_eq!(i1, rel(1, &[(0, 0)]));
        let i3 = identity(PointSet::new(3).unwrap());
        assert_eq!(i3, rel(3, &[(0, 0), (1, 1), (2, 2)]));
        assert!(i3.is_full() && i3.is_idempotent() && i3.is_surjective());
        assert!(i3.is_single_valued());
        assert_eq!(i3.is_trivial(), Ok(true));
        assert_eq!(i3.satisfies_gamma(), None);
    }

    #[test]
    fn point_set_bounds() {
        assert_eq!(PointSet::new(0), Err(RelationError::EmptyCarrier));
        assert!(PointSet::new(64).is_ok());
        assert!(matches!(
            PointSet::new(65),
            Err(RelationError::CarrierTooLarge { .. })
        ));
    }

    #[test]
    fn compose_examples() {
        let f = t();
        let i = identity(f.point_set());
        assert_eq!(i.compose(&f).unwrap(), f);
        assert_eq!(f.compose(&i).unwrap(), f);
        assert_eq!(f.square(), f);

        let swap = rel(2, &[(0, 1), (1, 0)]);
        assert_eq!(swap.square(), identity(swap.point_set()));
        assert!(!swap.is_idempotent());

        assert_eq!(
            f.compose(&gamma()),
            Err(RelationError::SizeMismatch { left: 3, right: 2 })
        );
    }

    #[test]
    fn compose_argument_order() {
        // f: 0→1, g: 1→2; g∘f sends 0 to 2.
        let f = rel(3, &[(0, 1)]);
        let g = rel(3, &[(1, 2)]);
        assert_eq!(f.compose(&g).unwrap(), rel(3, &[(0, 2)]));
        assert_eq!(g.compose(&f).unwrap(), rel(3, &[]));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(gamma().inverse(), rel(2, &[(0, 0), (1, 0), (1, 1)]));
        let ti = t().inverse();
        assert_eq!(ti, rel(3, &[(0, 0), (0, 2), (1, 1), (1, 2)]));
        assert!(ti.row(2).is_empty());
        assert!(!ti.is_full());
        let i = identity(PointSet::new(4).unwrap());
        assert_eq!(i.inverse(), i);
    }

    #[test]
    fn image_examples() {
        assert_eq!(t().image(set(&[2])), Ok(set(&[0, 1])));
        assert_eq!(t().image(Subset::EMPTY), Ok(Subset::EMPTY));
        assert_eq!(gamma().image(set(&[0, 1])), Ok(set(&[0, 1])));
        assert_eq!(
            gamma().image(set(&[2])),
            Err(RelationError::PointOutOfRange { point: 2, n: 2 })
        );
        for x in 0..3 {
            assert_eq!(t().image(Subset::singleton(x)).unwrap(), t().row(x));
        }
    }

    #[test]
    fn restrict_examples() {
        let i = identity(PointSet::new(3).unwrap());
        let a = set(&[0, 1]);
        assert_eq!(t().restrict(a).unwrap(), rel(3, &[(0, 0), (1, 1)]));
        assert_eq!(t().restrict(a), i.restrict(a));
        assert_eq!(t().restrict(set(&[0, 1, 2])).unwrap(), t());
        assert_eq!(gamma().restrict(set(&[1])).unwrap(), rel(2, &[(1, 1)]));
        assert!(gamma().restrict(set(&[5])).is_err());
    }

    #[test]
    fn predicates_on_reference_relations() {
        let t = t();
        assert!(t.is_full());
        assert!(t.is_idempotent());
        assert!(!t.is_surjective());
        assert!(!t.is_single_valued());
        assert_eq!(t.is_trivial(), Ok(true));
        assert_eq!(t.satisfies_gamma(), None);
        assert_eq!(t.two_point_witness(), None);

        let g = gamma();
        assert!(g.is_full() && g.is_idempotent() && g.is_surjective());
        assert_eq!(g.nontriviality_witness(), Ok(Some((0, 0))));
        assert_eq!(g.satisfies_gamma(), Some((0, 1)));
        assert_eq!(g.two_point_witness(), Some((0, 1)));

        let sq = full_square(PointSet::new(2).unwrap());
        assert!(!sq.is_single_valued());
        assert_eq!(sq.two_point_witness(), Some((0, 1)));
    }

    #[test]
    fn trivial_rejects_partial_relations() {
        assert_eq!(
            t().inverse().is_trivial(),
            Err(RelationError::NotFull { row: 2 })
        );
        assert_eq!(t().inverse().report().trivial, None);
    }

    #[test]
    fn permutation_examples() {
        let g = gamma();
        let swap = Permutation::new(vec![1, 0]).unwrap();
        assert_eq!(g.apply_permutation(&swap).unwrap(), g.inverse());
        assert_eq!(g.apply_permutation(&Permutation::identity(2)).unwrap(), g);
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        assert!(g.apply_permutation(&Permutation::identity(3)).is_err());
    }

    #[test]
    fn from_rows_rejects_stray_bits() {
        assert!(matches!(
            Relation::from_rows(vec![0b100, 0b01]),
            Err(RelationError::PointOutOfRange { point: 2, n: 2 })
        ));
        assert!(Relation::from_rows(vec![]).is_err());
    }

    #[test]
    fn report_validates() {
        for f in [
            t(),
            gamma(),
            t().inverse(),
            full_square(PointSet::new(3).unwrap()),
        ] {
            let r = f.report();
            assert!(r.validates_against(&f), "{f:?}");
        }
    }

    #[test]
    fn induced_relabels() {
        let f = t();
        assert_eq!(f.range(), set(&[0, 1]));
        assert_eq!(
            f.induced(&[0, 1]).unwrap(),
            identity(PointSet::new(2).unwrap())
        );
        assert_eq!(f.induced(&[2, 0]).unwrap(), rel(2, &[(0, 1), (1, 1)]));
        assert!(f.induced(&[]).is_err());
        assert!(f.induced(&[3]).is_err());
    }

    #[test]
    fn wide_carrier() {
        let ps = PointSet::new(64).unwrap();
        let i = identity(ps);
        assert!(i.is_idempotent() && i.is_surjective());
        let sq = full_square(ps);
        assert!(sq.is_idempotent());
        assert_eq!(sq.satisfies_gamma(), Some((0, 1)));
        assert_eq!(sq.inverse(), sq);
    }
}
