//! Finite bounded lattices: construction from cover relations, join/meet
//! tables, join-irreducibles, identity checks, the triple map and its
//! stabilization index, isomorphism testing, enumeration up to isomorphism,
//! a small catalog, and a line-based text format.
//!
//! Elements are `usize` indices; optional names are display-only.

mod catalog;
mod enumerate;
mod text;

pub use catalog::{boolean, chain, interval_lattice, m3, n5};
pub use enumerate::enumerate_lattices;
pub use text::{format_lattice, parse_lattice, TextError};

use std::fmt;

/// A triple of element indices, iterated by [`FiniteLattice::triple_step`].
pub type Triple = [usize; 3];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeError {
    /// A lattice needs at least one element.
    Empty,
    /// The cover relation has a directed cycle.
    CyclicCovers,
    /// The input relation is not reflexive, antisymmetric and transitive.
    NotAPartialOrder,
    /// The pair (x, y) has no unique least upper bound or greatest lower bound.
    NotALattice { x: usize, y: usize },
    /// An element index is not below `size`.
    IndexOutOfRange { index: usize, size: usize },
    /// A guarded operation was asked to exceed its size limit.
    SizeLimitExceeded { requested: usize, limit: usize },
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::Empty => write!(f, "a lattice needs at least one element"),
            LatticeError::CyclicCovers => write!(f, "cover relation contains a cycle"),
            LatticeError::NotAPartialOrder => {
                write!(f, "relation is not a partial order")
            }
            LatticeError::NotALattice { x, y } => {
                write!(f, "pair ({x}, {y}) has no unique lub or glb")
            }
            LatticeError::IndexOutOfRange { index, size } => {
                write!(f, "element index {index} out of range for size {size}")
            }
            LatticeError::SizeLimitExceeded { requested, limit } => {
                write!(f, "size {requested} exceeds guard limit {limit}")
            }
        }
    }
}

impl std::error::Error for LatticeError {}

/// Reads the `LATTICEFORGE_GUARD` override for a size guard, falling back to
/// the given default limit. The override replaces the limit of whichever
/// guard consults it.
pub(crate) fn guard_limit(default: usize) -> usize {
    match std::env::var("LATTICEFORGE_GUARD") {
        Ok(v) => v.trim().parse().unwrap_or(default),
        Err(_) => default,
    }
}

/// A finite bounded lattice: order relation plus eagerly computed join and
/// meet tables. Immutable after construction; all operations are pure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLattice {
    size: usize,
    leq: Vec<bool>,
    join_table: Vec<usize>,
    meet_table: Vec<usize>,
    names: Option<Vec<String>>,
    bottom: usize,
    top: usize,
}

/// Which lattice identity [`FiniteLattice::check_identity`] should test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeIdentity {
    Modular,
    Distributive,
    JoinSemidistributive,
}

impl std::str::FromStr for LatticeIdentity {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "modular" => Ok(LatticeIdentity::Modular),
            "distributive" => Ok(LatticeIdentity::Distributive),
            "join_semidistributive" | "join-semidistributive" => {
                Ok(LatticeIdentity::JoinSemidistributive)
            }
            other => Err(format!(
                "unknown identity {other:?} (expected modular, distributive, \
                 or join_semidistributive)"
            )),
        }
    }
}

/// Outcome of an exhaustive identity check; a failure carries the first
/// witness triple in lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityVerdict {
    Holds,
    Fails(Triple),
}

impl IdentityVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, IdentityVerdict::Holds)
    }

    pub fn witness(&self) -> Option<Triple> {
        match self {
            IdentityVerdict::Holds => None,
            IdentityVerdict::Fails(w) => Some(*w),
        }
    }
}

/// Result of [`FiniteLattice::h_modularity_index`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModularityIndex {
    /// Least h >= 1 with u^(h+1) = u^(h) for every triple u.
    Reached(usize),
    /// Some triple had not stabilized after `cutoff` steps.
    NotReached { cutoff: usize },
}

impl FiniteLattice {
    /// Builds a lattice from a cover relation (`lower` is covered by `upper`).
    /// The order is the reflexive-transitive closure of the covers; the poset
    /// must have unique lubs and glbs for all pairs.
    pub fn from_covers(
        size: usize,
        covers: &[(usize, usize)],
        names: Option<Vec<String>>,
    ) -> Result<FiniteLattice, LatticeError> {
        if size == 0 {
            return Err(LatticeError::Empty);
        }
        for &(lo, hi) in covers {
            for index in [lo, hi] {
                if index >= size {
                    return Err(LatticeError::IndexOutOfRange { index, size });
                }
            }
        }
        let mut leq = vec![false; size * size];
        for x in 0..size {
            leq[x * size + x] = true;
        }
        for &(lo, hi) in covers {
            leq[lo * size + hi] = true;
        }
        // Warshall transitive closure.
        for k in 0..size {
            for x in 0..size {
                if leq[x * size + k] {
                    for y in 0..size {
                        if leq[k * size + y] {
                            leq[x * size + y] = true;
                        }
                    }
                }
            }
        }
        for x in 0..size {
            for y in 0..size {
                if x != y && leq[x * size + y] && leq[y * size + x] {
                    return Err(LatticeError::CyclicCovers);
                }
            }
        }
        FiniteLattice::from_leq(size, leq, names)
    }

    /// Builds a lattice from a full order relation (`leq[x*size+y]` meaning
    /// x <= y). Validates the partial-order axioms and computes both tables.
    pub fn from_leq(
        size: usize,
        leq: Vec<bool>,
        names: Option<Vec<String>>,
    ) -> Result<FiniteLattice, LatticeError> {
        if size == 0 {
            return Err(LatticeError::Empty);
        }
        assert_eq!(leq.len(), size * size, "leq matrix has wrong dimensions");
        if let Some(ref ns) = names {
            assert_eq!(ns.len(), size, "names list has wrong length");
        }
        for x in 0..size {
            if !leq[x * size + x] {
                return Err(LatticeError::NotAPartialOrder);
            }
            for y in 0..size {
                if x != y && leq[x * size + y] && leq[y * size + x] {
                    return Err(LatticeError::NotAPartialOrder);
                }
                for z in 0..size {
                    if leq[x * size + y] && leq[y * size + z] && !leq[x * size + z] {
                        return Err(LatticeError::NotAPartialOrder);
                    }
                }
            }
        }
        let mut join_table = vec![0usize; size * size];
        let mut meet_table = vec![0usize; size * size];
        for x in 0..size {
            for y in x..size {
                let j = unique_bound(size, &leq, x, y, true)
                    .ok_or(LatticeError::NotALattice { x, y })?;
                let m = unique_bound(size, &leq, x, y, false)
                    .ok_or(LatticeError::NotALattice { x, y })?;
                join_table[x * size + y] = j;
                join_table[y * size + x] = j;
                meet_table[x * size + y] = m;
                meet_table[y * size + x] = m;
            }
        }
        let mut bottom = 0;
        let mut top = 0;
        for x in 1..size {
            bottom = meet_table[bottom * size + x];
            top = join_table[top * size + x];
        }
        Ok(FiniteLattice {
            size,
            leq,
            join_table,
            meet_table,
            names,
            bottom,
            top,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.size + y]
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join_table[x * self.size + y]
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet_table[x * self.size + y]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display label of an element: its name if present, else its index.
    pub fn name(&self, x: usize) -> String {
        match &self.names {
            Some(ns) => ns[x].clone(),
            None => x.to_string(),
        }
    }

    /// Looks an element up by name, falling back to a numeric index.
    pub fn element_by_name(&self, label: &str) -> Option<usize> {
        if let Some(ns) = &self.names {
            if let Some(i) = ns.iter().position(|n| n == label) {
                return Some(i);
            }
        }
        match label.parse::<usize>() {
            Ok(i) if i < self.size => Some(i),
            _ => None,
        }
    }

    /// All cover pairs (x, y) with x covered by y, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.size {
            for y in 0..self.size {
                if x != y && self.leq(x, y) && self.is_cover(x, y) {
                    out.push((x, y));
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn is_cover(&self, x: usize, y: usize) -> bool {
        (0..self.size).all(|z| {
            z == x || z == y || !(self.leq(x, z) && self.leq(z, y))
        })
    }

    /// Elements strictly below x that x covers.
    pub fn lower_covers(&self, x: usize) -> Vec<usize> {
        (0..self.size)
            .filter(|&z| z != x && self.leq(z, x) && self.is_cover(z, x))
            .collect()
    }

    /// Nonzero elements with exactly one lower cover.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&x| x != self.bottom && self.lower_covers(x).len() == 1)
            .collect()
    }

    /// Least subset containing `seed` and closed under join and meet; sorted.
    pub fn sublattice_generated(&self, seed: &[usize]) -> Vec<usize> {
        assert!(!seed.is_empty(), "sublattice seed must be nonempty");
        let mut member = vec![false; self.size];
        for &x in seed {
            member[x] = true;
        }
        loop {
            let current: Vec<usize> =
                (0..self.size).filter(|&x| member[x]).collect();
            let mut changed = false;
            for &x in &current {
                for &y in &current {
                    for z in [self.join(x, y), self.meet(x, y)] {
                        if !member[z] {
                            member[z] = true;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                return current;
            }
        }
    }

    /// Exhaustive check of a lattice identity over all element triples.
    pub fn check_identity(&self, which: LatticeIdentity) -> IdentityVerdict {
        let n = self.size;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let ok = match which {
                        LatticeIdentity::Modular => {
                            !self.leq(x, z)
                                || self.join(x, self.meet(y, z))
                                    == self.meet(self.join(x, y), z)
                        }
                        LatticeIdentity::Distributive => {
                            self.meet(x, self.join(y, z))
                                == self.join(self.meet(x, y), self.meet(x, z))
                        }
                        LatticeIdentity::JoinSemidistributive => {
                            self.join(x, z) != self.join(y, z)
                                || self.join(x, z)
                                    == self.join(self.meet(x, y), z)
                        }
                    };
                    if !ok {
                        return IdentityVerdict::Fails([x, y, z]);
                    }
                }
            }
        }
        IdentityVerdict::Holds
    }

    /// One application of u -> (x v (y ^ z), y v (x ^ z), z v (x ^ y)).
    /// Inflationary: u <= triple_step(u) componentwise.
    pub fn triple_step(&self, u: Triple) -> Triple {
        let [x, y, z] = u;
        [
            self.join(x, self.meet(y, z)),
            self.join(y, self.meet(x, z)),
            self.join(z, self.meet(x, y)),
        ]
    }

    /// Least h >= 1 such that the triple map stabilizes in h steps on every
    /// triple, or `NotReached` if some triple needs more than `cutoff` steps.
    pub fn h_modularity_index(&self, cutoff: usize) -> ModularityIndex {
        assert!(cutoff >= 1, "cutoff must be at least 1");
        let n = self.size;
        let mut worst = 0usize;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let mut u = [x, y, z];
                    let mut steps = 0usize;
                    loop {
                        let v = self.triple_step(u);
                        if v == u {
                            break;
                        }
                        u = v;
                        steps += 1;
                        if steps > cutoff {
                            return ModularityIndex::NotReached { cutoff };
                        }
                    }
                    worst = worst.max(steps);
                }
            }
        }
        ModularityIndex::Reached(worst.max(1))
    }
}

/// Unique least upper bound (or greatest lower bound) of x, y, if it exists:
/// the common bound that bounds every other common bound.
fn unique_bound(
    size: usize,
    leq: &[bool],
    x: usize,
    y: usize,
    upper: bool,
) -> Option<usize> {
    let bound_ok = |z: usize| {
        if upper {
            leq[x * size + z] && leq[y * size + z]
        } else {
            leq[z * size + x] && leq[z * size + y]
        }
    };
    let candidates: Vec<usize> = (0..size).filter(|&z| bound_ok(z)).collect();
    candidates
        .iter()
        .copied()
        .find(|&b| {
            candidates.iter().all(|&z| {
                if upper {
                    leq[b * size + z]
                } else {
                    leq[z * size + b]
                }
            })
        })
}

/// Order-isomorphism test. Returns a mapping `phi` with `phi[x]` the image of
/// x in `l2`, or None. A lattice isomorphism is determined by its action on
/// join-irreducibles, so the search backtracks over those only.
pub fn are_isomorphic(l1: &FiniteLattice, l2: &FiniteLattice) -> Option<Vec<usize>> {
    if l1.size != l2.size {
        return None;
    }
    if invariant_profile(l1) != invariant_profile(l2) {
        return None;
    }
    if l1.size == 1 {
        return Some(vec![0]);
    }
    let j1 = l1.join_irreducibles();
    let j2 = l2.join_irreducibles();
    if j1.len() != j2.len() {
        return None;
    }
    let inv1: Vec<_> = j1.iter().map(|&p| element_invariant(l1, p)).collect();
    let inv2: Vec<_> = j2.iter().map(|&p| element_invariant(l2, p)).collect();
    let mut sigma = vec![usize::MAX; j1.len()];
    let mut used = vec![false; j2.len()];
    if assign_ji(l1, l2, &j1, &j2, &inv1, &inv2, &mut sigma, &mut used, 0) {
        let mut phi = vec![usize::MAX; l1.size];
        for x in 0..l1.size {
            let mut img = l2.bottom;
            for (k, &p) in j1.iter().enumerate() {
                if l1.leq(p, x) {
                    img = l2.join(img, j2[sigma[k]]);
                }
            }
            phi[x] = img;
        }
        debug_assert!(is_isomorphism(l1, l2, &phi));
        Some(phi)
    } else {
        None
    }
}

fn assign_ji(
    l1: &FiniteLattice,
    l2: &FiniteLattice,
    j1: &[usize],
    j2: &[usize],
    inv1: &[(usize, usize, usize, usize)],
    inv2: &[(usize, usize, usize, usize)],
    sigma: &mut Vec<usize>,
    used: &mut Vec<bool>,
    k: usize,
) -> bool {
    if k == j1.len() {
        let mut phi = vec![usize::MAX; l1.size()];
        for x in 0..l1.size() {
            let mut img = l2.bottom();
            for (i, &p) in j1.iter().enumerate() {
                if l1.leq(p, x) {
                    img = l2.join(img, j2[sigma[i]]);
                }
            }
            phi[x] = img;
        }
        return is_isomorphism(l1, l2, &phi);
    }
    for cand in 0..j2.len() {
        if used[cand] || inv1[k] != inv2[cand] {
            continue;
        }
        let consistent = (0..k).all(|i| {
            l1.leq(j1[i], j1[k]) == l2.leq(j2[sigma[i]], j2[cand])
                && l1.leq(j1[k], j1[i]) == l2.leq(j2[cand], j2[sigma[i]])
        });
        if !consistent {
            continue;
        }
        sigma[k] = cand;
        used[cand] = true;
        if assign_ji(l1, l2, j1, j2, inv1, inv2, sigma, used, k + 1) {
            return true;
        }
        used[cand] = false;
        sigma[k] = usize::MAX;
    }
    false
}

fn is_isomorphism(l1: &FiniteLattice, l2: &FiniteLattice, phi: &[usize]) -> bool {
    let n = l1.size();
    let mut seen = vec![false; n];
    for x in 0..n {
        if phi[x] >= n || seen[phi[x]] {
            return false;
        }
        seen[phi[x]] = true;
    }
    for x in 0..n {
        for y in 0..n {
            if l1.leq(x, y) != l2.leq(phi[x], phi[y]) {
                return false;
            }
        }
    }
    true
}

/// Per-element invariant: (|down-set|, |up-set|, #lower covers, #upper covers).
fn element_invariant(l: &FiniteLattice, x: usize) -> (usize, usize, usize, usize) {
    let n = l.size();
    let down = (0..n).filter(|&z| l.leq(z, x)).count();
    let up = (0..n).filter(|&z| l.leq(x, z)).count();
    let lc = (0..n)
        .filter(|&z| z != x && l.leq(z, x) && l.is_cover(z, x))
        .count();
    let uc = (0..n)
        .filter(|&z| z != x && l.leq(x, z) && l.is_cover(x, z))
        .count();
    (down, up, lc, uc)
}

/// Sorted multiset of element invariants; equal for isomorphic lattices.
pub(crate) fn invariant_profile(l: &FiniteLattice) -> Vec<(usize, usize, usize, usize)> {
    let mut v: Vec<_> = (0..l.size()).map(|x| element_invariant(l, x)).collect();
    v.sort_unstable();
    v
}
