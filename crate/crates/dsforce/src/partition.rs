//! Views of a degree sequence as named unions of whole degree classes.
//!
//! Every counting argument in [`crate::rules`] speaks about vertex sets that
//! are unions of degree classes (all vertices of equal degree always travel
//! together). [`PartitionView`] assigns role names to such unions and provides
//! the counting helpers: sizes, stub totals, per-degree multiplicities, the
//! guaranteed-edge lower bound, and the neighbourly-set predicates.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::degseq::{DegreeClass, DegreeSequence};

/// Errors raised by role lookups and role assignment.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RoleError {
    /// The requested role was never assigned.
    #[error("role {0:?} is not assigned in this view")]
    RoleMissing(String),
    /// Roles must be pairwise disjoint unions of whole degree classes.
    #[error("role {0:?} overlaps a previously assigned role")]
    RoleOverlap(String),
}

/// A set of degree classes, as a bitmask over class indices.
///
/// Class indices refer to the ascending-by-degree class list of the
/// [`PartitionView`] (or any other class list agreed on by the caller).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ClassSet(pub u64);

impl ClassSet {
    /// The empty set.
    pub const EMPTY: ClassSet = ClassSet(0);

    /// Set containing the single class `idx`.
    #[must_use]
    pub fn single(idx: usize) -> Self {
        ClassSet(1 << idx)
    }

    /// Set containing all of the first `count` classes.
    #[must_use]
    pub fn all(count: usize) -> Self {
        if count == 64 {
            ClassSet(!0)
        } else {
            ClassSet((1u64 << count) - 1)
        }
    }

    /// Whether class `idx` is a member.
    #[must_use]
    pub fn contains(self, idx: usize) -> bool {
        self.0 >> idx & 1 == 1
    }

    /// Number of member classes.
    #[must_use]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Whether the set has no members.
    #[must_use]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Union.
    #[must_use]
    pub fn union(self, other: ClassSet) -> ClassSet {
        ClassSet(self.0 | other.0)
    }

    /// Intersection.
    #[must_use]
    pub fn intersect(self, other: ClassSet) -> ClassSet {
        ClassSet(self.0 & other.0)
    }

    /// Set difference `self \ other`.
    #[must_use]
    pub fn minus(self, other: ClassSet) -> ClassSet {
        ClassSet(self.0 & !other.0)
    }

    /// Whether the two sets share no class.
    #[must_use]
    pub fn is_disjoint(self, other: ClassSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Whether every member of `self` is a member of `other`.
    #[must_use]
    pub fn is_subset(self, other: ClassSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Iterates member class indices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let idx = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(idx)
            }
        })
    }
}

impl fmt::Display for ClassSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, idx) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{idx}")?;
        }
        write!(f, "}}")
    }
}

/// A degree sequence seen as degree classes, with optional named roles.
///
/// Roles are pairwise disjoint unions of whole degree classes. All counting
/// helpers also accept raw [`ClassSet`]s so callers can work with unions that
/// never get a name.
#[derive(Debug, Clone)]
pub struct PartitionView {
    n: usize,
    classes: Vec<DegreeClass>,
    roles: BTreeMap<String, ClassSet>,
}

impl PartitionView {
    /// Builds the finest partition (one class per distinct degree), no roles.
    #[must_use]
    pub fn from_sequence(seq: &DegreeSequence) -> Self {
        PartitionView {
            n: seq.n(),
            classes: seq.degree_classes(),
            roles: BTreeMap::new(),
        }
    }

    /// Number of vertices in the underlying sequence.
    #[must_use]
    pub fn n(&self) -> usize {
        self.n
    }

    /// The degree classes, ascending by degree.
    #[must_use]
    pub fn classes(&self) -> &[DegreeClass] {
        &self.classes
    }

    /// The set of all classes.
    #[must_use]
    pub fn all(&self) -> ClassSet {
        ClassSet::all(self.classes.len())
    }

    /// The complement of `set` within all classes.
    #[must_use]
    pub fn complement_of(&self, set: ClassSet) -> ClassSet {
        self.all().minus(set)
    }

    /// The set of classes whose degree is bad.
    #[must_use]
    pub fn bad_classes(&self) -> ClassSet {
        self.collect(|c| c.is_bad)
    }

    /// The set of classes whose degree is dull.
    #[must_use]
    pub fn dull_classes(&self) -> ClassSet {
        self.collect(|c| c.is_dull)
    }

    /// The set of classes satisfying `pred`.
    #[must_use]
    pub fn collect(&self, pred: impl Fn(&DegreeClass) -> bool) -> ClassSet {
        let mut s = ClassSet::EMPTY;
        for (idx, c) in self.classes.iter().enumerate() {
            if pred(c) {
                s = s.union(ClassSet::single(idx));
            }
        }
        s
    }

    /// Index of the class with exactly degree `d`, if present.
    #[must_use]
    pub fn class_of_degree(&self, d: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.degree == d)
    }

    /// Assigns a role; roles must not overlap previously assigned ones.
    pub fn assign_role(&mut self, name: &str, set: ClassSet) -> Result<(), RoleError> {
        for (other, &s) in &self.roles {
            if other != name && !s.is_disjoint(set) {
                return Err(RoleError::RoleOverlap(name.to_owned()));
            }
        }
        self.roles.insert(name.to_owned(), set);
        Ok(())
    }

    /// Looks up a role by name.
    pub fn role(&self, name: &str) -> Result<ClassSet, RoleError> {
        self.roles
            .get(name)
            .copied()
            .ok_or_else(|| RoleError::RoleMissing(name.to_owned()))
    }

    /// All assigned roles with their degree lists (for reporting).
    #[must_use]
    pub fn role_degrees(&self) -> BTreeMap<String, Vec<usize>> {
        self.roles
            .iter()
            .map(|(name, set)| {
                let mut degrees = Vec::new();
                for idx in set.iter() {
                    let c = &self.classes[idx];
                    degrees.extend(std::iter::repeat(c.degree).take(c.count));
                }
                (name.clone(), degrees)
            })
            .collect()
    }

    /// n_i: number of vertices covered by `set`.
    #[must_use]
    pub fn n_of(&self, set: ClassSet) -> usize {
        set.iter().map(|i| self.classes[i].count).sum()
    }

    /// m_i: total number of stubs (sum of degrees) over `set`.
    #[must_use]
    pub fn m_of(&self, set: ClassSet) -> usize {
        set.iter().map(|i| self.classes[i].count * self.classes[i].degree).sum()
    }

    /// kappa(set, d): number of degree-`d` vertices inside `set`.
    #[must_use]
    pub fn kappa(&self, set: ClassSet, d: usize) -> usize {
        match self.class_of_degree(d) {
            Some(idx) if set.contains(idx) => self.classes[idx].count,
            _ => 0,
        }
    }

    /// xi_i = n - 1 - n_i: for any vertex outside `set`, the number of other
    /// vertices also outside it.
    #[must_use]
    pub fn xi(&self, set: ClassSet) -> isize {
        self.n as isize - 1 - self.n_of(set) as isize
    }

    /// chi_ij = m_j - (n - 1 - n_i) n_j: guaranteed number of edges between
    /// disjoint sets `i` and `j` (may be negative when vacuous).
    #[must_use]
    pub fn chi(&self, i: ClassSet, j: ClassSet) -> isize {
        self.m_of(j) as isize - self.xi(i) * self.n_of(j) as isize
    }

    /// Clamped variant of [`Self::chi`]: sums, over the vertices of `j`, the
    /// guaranteed number of their edges into `i`, clamping each vertex's
    /// contribution at zero. Never smaller than `chi`, and still a valid lower
    /// bound on the number of edges between disjoint `i` and `j`.
    #[must_use]
    pub fn chi_clamped(&self, i: ClassSet, j: ClassSet) -> usize {
        let ni = self.n_of(i) as isize;
        let n = self.n as isize;
        let mut total = 0isize;
        for idx in j.iter() {
            let c = &self.classes[idx];
            let per_vertex = ni - (n - 1 - c.degree as isize);
            if per_vertex > 0 {
                total += per_vertex * c.count as isize;
            }
        }
        total as usize
    }

    /// delta_i^j: 1 when the two sets intersect, else 0.
    #[must_use]
    pub fn delta(&self, i: ClassSet, j: ClassSet) -> usize {
        usize::from(!i.is_disjoint(j))
    }

    /// nu_i: whether `set` is neighbourly — no vertex outside it has a degree
    /// one less than that of a member.
    #[must_use]
    pub fn is_neighbourly_set(&self, set: ClassSet) -> bool {
        for inside in set.iter() {
            let d = self.classes[inside].degree;
            if d == 0 {
                continue;
            }
            if let Some(other) = self.class_of_degree(d - 1) {
                if !set.contains(other) {
                    return false;
                }
            }
        }
        true
    }

    /// mu_i: whether the complement of `set` is neighbourly.
    #[must_use]
    pub fn is_complement_neighbourly(&self, set: ClassSet) -> bool {
        self.is_neighbourly_set(self.complement_of(set))
    }

    /// Whether `set` is `d`-neighbourly: it contains a vertex `v` of degree
    /// `d`, and no vertex outside the set has a degree one less than that of
    /// any member other than `v`.
    #[must_use]
    pub fn is_d_neighbourly_set(&self, set: ClassSet, d: usize) -> bool {
        let Some(v_class) = self.class_of_degree(d) else {
            return false;
        };
        if !set.contains(v_class) {
            return false;
        }
        for inside in set.iter() {
            let c = &self.classes[inside];
            // One vertex of degree d is exempt; other members of its class are not.
            if c.degree == d && c.count == 1 {
                continue;
            }
            if c.degree == 0 {
                continue;
            }
            if let Some(other) = self.class_of_degree(c.degree - 1) {
                if !set.contains(other) {
                    return false;
                }
            }
        }
        true
    }

    /// Role-name variant of [`Self::is_neighbourly_set`].
    pub fn is_neighbourly(&self, role: &str) -> Result<bool, RoleError> {
        Ok(self.is_neighbourly_set(self.role(role)?))
    }

    /// Role-name variant of [`Self::is_d_neighbourly_set`].
    pub fn is_d_neighbourly(&self, role: &str, d: usize) -> Result<bool, RoleError> {
        Ok(self.is_d_neighbourly_set(self.role(role)?, d))
    }
}
