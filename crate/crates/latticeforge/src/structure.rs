//! Structural decision procedures over finite lattices: minimal nontrivial
//! join covers, the join-dependency relation and its acyclicity, finite
//! amenability, principal congruences, simplicity, the DPT meet condition,
//! and desk-scale exhaustive scans tying these together.

use std::collections::HashMap;

use crate::lattice::{
    enumerate_lattices, format_lattice, interval_lattice, FiniteLattice,
    LatticeIdentity,
};

/// A minimal nontrivial join cover: `target <= join(cover)` with the target
/// below no single member, the cover an antichain of join-irreducibles, and
/// no refinement (dropping members or replacing them by smaller
/// join-irreducibles) being a cover again.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinCover {
    pub target: usize,
    pub cover: Vec<usize>,
}

/// A lattice congruence as a partition, canonically numbered: class ids are
/// assigned by first occurrence, so equal partitions compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Congruence {
    class_of: Vec<usize>,
    class_count: usize,
}

impl Congruence {
    fn from_union_find(mut uf: UnionFind) -> Congruence {
        let n = uf.parent.len();
        let mut relabel: HashMap<usize, usize> = HashMap::new();
        let mut class_of = Vec::with_capacity(n);
        for i in 0..n {
            let root = uf.find(i);
            let next = relabel.len();
            class_of.push(*relabel.entry(root).or_insert(next));
        }
        Congruence {
            class_of,
            class_count: relabel.len(),
        }
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    pub fn is_identity(&self) -> bool {
        self.class_count == self.class_of.len()
    }

    pub fn is_full(&self) -> bool {
        self.class_count == 1
    }

    /// Blocks ordered by first occurrence, members ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.class_count];
        for (i, &c) in self.class_of.iter().enumerate() {
            out[c].push(i);
        }
        out
    }

    /// True when every block of `self` is contained in a block of `other`.
    pub fn refines(&self, other: &Congruence) -> bool {
        let n = self.class_of.len();
        (0..n).all(|a| (0..n).all(|b| !self.same(a, b) || other.same(a, b)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureError {
    NotJoinIrreducible { element: usize },
    TrivialLattice,
    /// A scan found a counterexample to a proved statement; a bug signal.
    TheoremViolated { size: usize, lattice: String },
    Lattice(crate::lattice::LatticeError),
}

impl std::fmt::Display for StructureError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StructureError::NotJoinIrreducible { element } => {
                write!(f, "element {element} is not join-irreducible")
            }
            StructureError::TrivialLattice => {
                write!(f, "lattice has fewer than two elements")
            }
            StructureError::TheoremViolated { size, lattice } => {
                write!(
                    f,
                    "scan found a simple lattice of size {size} whose \
                     join-dependency relation is acyclic; this signals a bug:\n{lattice}"
                )
            }
            StructureError::Lattice(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for StructureError {}

impl From<crate::lattice::LatticeError> for StructureError {
    fn from(e: crate::lattice::LatticeError) -> Self {
        StructureError::Lattice(e)
    }
}

/// All minimal nontrivial join covers of `p` by join-irreducibles.
///
/// Candidates are antichains S of join-irreducibles with |S| >= 2, p <= join(S)
/// and p below no member; minimality is under the refinement order (T refines
/// S when every member of T lies below some member of S).
pub fn minimal_join_covers(
    l: &FiniteLattice,
    p: usize,
) -> Result<Vec<JoinCover>, StructureError> {
    let js = l.join_irreducibles();
    if !js.contains(&p) {
        return Err(StructureError::NotJoinIrreducible { element: p });
    }
    assert!(js.len() <= 24, "join-irreducible subset scan is desk scale");
    let mut candidates: Vec<Vec<usize>> = Vec::new();
    for mask in 0u32..(1 << js.len()) {
        if mask.count_ones() < 2 {
            continue;
        }
        let s: Vec<usize> = (0..js.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| js[i])
            .collect();
        if !is_antichain(l, &s) {
            continue;
        }
        if s.iter().any(|&q| l.leq(p, q)) {
            continue;
        }
        let join = s.iter().fold(l.bottom(), |acc, &q| l.join(acc, q));
        if l.leq(p, join) {
            candidates.push(s);
        }
    }
    let mut minimal: Vec<JoinCover> = candidates
        .iter()
        .filter(|s| {
            candidates
                .iter()
                .all(|t| t == *s || !refines(l, t, s))
        })
        .map(|s| JoinCover {
            target: p,
            cover: s.clone(),
        })
        .collect();
    minimal.sort_by(|a, b| a.cover.cmp(&b.cover));
    Ok(minimal)
}

fn is_antichain(l: &FiniteLattice, s: &[usize]) -> bool {
    s.iter().all(|&a| {
        s.iter()
            .all(|&b| a == b || (!l.leq(a, b) && !l.leq(b, a)))
    })
}

/// Every member of `t` lies below some member of `s`.
fn refines(l: &FiniteLattice, t: &[usize], s: &[usize]) -> bool {
    t.iter().all(|&x| s.iter().any(|&y| l.leq(x, y)))
}

/// The join-dependency relation: p D q iff p != q and q occurs in some
/// minimal nontrivial join cover of p. Pairs sorted ascending.
pub fn join_dependency(l: &FiniteLattice) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for p in l.join_irreducibles() {
        for cover in minimal_join_covers(l, p).expect("p is join-irreducible") {
            for q in cover.cover {
                out.push((p, q));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Outcome of the join-dependency acyclicity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TJoinVerdict {
    Holds,
    /// Elements p0 D p1 D ... D pk D p0, without the closing repetition.
    Cycle(Vec<usize>),
}

impl TJoinVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, TJoinVerdict::Holds)
    }

    pub fn cycle(&self) -> Option<&[usize]> {
        match self {
            TJoinVerdict::Holds => None,
            TJoinVerdict::Cycle(c) => Some(c),
        }
    }
}

/// True iff the directed graph of the join-dependency relation has no cycle;
/// otherwise returns one cycle.
pub fn satisfies_t_join(l: &FiniteLattice) -> TJoinVerdict {
    let deps = join_dependency(l);
    let mut adjacency: HashMap<usize, Vec<usize>> = HashMap::new();
    for &(p, q) in &deps {
        adjacency.entry(p).or_default().push(q);
    }
    // 0 = unseen, 1 = on the current path, 2 = done.
    let mut state: HashMap<usize, u8> = HashMap::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut nodes: Vec<usize> = adjacency.keys().copied().collect();
    nodes.sort();
    for start in nodes {
        if let Some(cycle) = dfs_cycle(start, &adjacency, &mut state, &mut stack) {
            return TJoinVerdict::Cycle(cycle);
        }
    }
    TJoinVerdict::Holds
}

fn dfs_cycle(
    v: usize,
    adjacency: &HashMap<usize, Vec<usize>>,
    state: &mut HashMap<usize, u8>,
    stack: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    match state.get(&v) {
        Some(1) => {
            let from = stack.iter().position(|&x| x == v).unwrap();
            return Some(stack[from..].to_vec());
        }
        Some(_) => return None,
        None => {}
    }
    state.insert(v, 1);
    stack.push(v);
    if let Some(next) = adjacency.get(&v) {
        for &w in next {
            if let Some(cycle) = dfs_cycle(w, adjacency, state, stack) {
                return Some(cycle);
            }
        }
    }
    stack.pop();
    state.insert(v, 2);
    None
}

/// For a finite lattice, amenability reduces to acyclicity of the
/// join-dependency relation.
pub fn is_amenable_finite(l: &FiniteLattice) -> bool {
    satisfies_t_join(l).holds()
}

struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of a and b; true when they were distinct.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (hi, lo) = if self.rank[ra] >= self.rank[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[lo] = hi;
        if self.rank[ra] == self.rank[rb] {
            self.rank[hi] += 1;
        }
        true
    }
}

/// Smallest congruence collapsing x and y: the worklist closes every newly
/// merged pair under joining and meeting with each element, and transitivity
/// is carried by the union-find.
pub fn principal_congruence(l: &FiniteLattice, x: usize, y: usize) -> Congruence {
    let n = l.size();
    let mut uf = UnionFind::new(n);
    let mut queue = vec![(x, y)];
    while let Some((a, b)) = queue.pop() {
        if !uf.union(a, b) {
            continue;
        }
        for w in 0..n {
            queue.push((l.join(a, w), l.join(b, w)));
            queue.push((l.meet(a, w), l.meet(b, w)));
        }
    }
    Congruence::from_union_find(uf)
}

/// True iff every principal congruence on a pair x < y is the full relation.
pub fn is_simple(l: &FiniteLattice) -> Result<bool, StructureError> {
    if l.size() < 2 {
        return Err(StructureError::TrivialLattice);
    }
    for x in 0..l.size() {
        for y in 0..l.size() {
            if x != y && l.leq(x, y) && !principal_congruence(l, x, y).is_full() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Outcome of the DPT check; a failure carries (u0, u, v0, v).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DptVerdict {
    Holds,
    Fails { u0: usize, u: usize, v0: usize, v: usize },
}

impl DptVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, DptVerdict::Holds)
    }

    pub fn witness(&self) -> Option<(usize, usize, usize, usize)> {
        match *self {
            DptVerdict::Holds => None,
            DptVerdict::Fails { u0, u, v0, v } => Some((u0, u, v0, v)),
        }
    }
}

/// Exhaustive check that whenever two strictly comparable pairs u0 < u and
/// v0 < v generate the same principal congruence, the meet u ∧ v lies below
/// neither u0 nor v0.
pub fn dpt_holds(l: &FiniteLattice) -> DptVerdict {
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for a in 0..l.size() {
        for b in 0..l.size() {
            if a != b && l.leq(a, b) {
                pairs.push((a, b));
            }
        }
    }
    pairs.sort();
    let mut groups: HashMap<Congruence, Vec<(usize, usize)>> = HashMap::new();
    for &(a, b) in &pairs {
        groups
            .entry(principal_congruence(l, a, b))
            .or_default()
            .push((a, b));
    }
    let mut group_list: Vec<&Vec<(usize, usize)>> = groups.values().collect();
    group_list.sort();
    for group in group_list {
        for &(u0, u) in group {
            for &(v0, v) in group {
                let m = l.meet(u, v);
                if l.leq(m, u0) || l.leq(m, v0) {
                    return DptVerdict::Fails { u0, u, v0, v };
                }
            }
        }
    }
    DptVerdict::Holds
}

/// Per-size tallies from the simple-and-acyclic scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRow {
    pub size: usize,
    pub lattices: usize,
    pub simple: usize,
    pub t_join: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub max_size: usize,
    pub rows: Vec<ScanRow>,
}

impl ScanReport {
    pub fn total_checked(&self) -> usize {
        self.rows.iter().map(|r| r.lattices).sum()
    }
}

/// Scans all lattices with 3 to `max_size` elements (up to isomorphism) and
/// verifies that none is both simple and acyclic in join-dependency. Finding
/// one would contradict a proved statement, so it is returned as an error.
pub fn no_simple_amenable_scan(max_size: usize) -> Result<ScanReport, StructureError> {
    let mut rows = Vec::new();
    for n in 3..=max_size {
        let all = enumerate_lattices(n)?;
        let mut row = ScanRow {
            size: n,
            lattices: all.len(),
            simple: 0,
            t_join: 0,
        };
        for l in &all {
            let simple = is_simple(l).expect("size >= 3");
            let t_join = satisfies_t_join(l).holds();
            row.simple += simple as usize;
            row.t_join += t_join as usize;
            if simple && t_join {
                return Err(StructureError::TheoremViolated {
                    size: n,
                    lattice: format_lattice(l),
                });
            }
        }
        rows.push(row);
    }
    Ok(ScanReport { max_size, rows })
}

/// Equality record for a pair of atoms {u}, {v} of an interval lattice.
/// `margin` is true when the chain 0..n-1 has room on both sides (some
/// x < u and some v < y), the condition under which the congruences are
/// provably equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomPairEquality {
    pub u: usize,
    pub v: usize,
    pub margin: bool,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalProfile {
    pub n: usize,
    pub size: usize,
    pub join_semidistributive: bool,
    pub atom_pairs: Vec<AtomPairEquality>,
}

/// Profiles the interval lattice over the chain 0..n-1: join-semidistributivity
/// and, for every pair of atoms, whether the principal congruences collapsing
/// bottom with each atom coincide. Pairs with margins on both sides must agree.
pub fn interval_lattice_simplicity_profile(n: usize) -> IntervalProfile {
    assert!((3..=8).contains(&n), "supported chain sizes are 3..=8");
    let l = interval_lattice(n);
    let bottom = l.bottom();
    let thetas: Vec<Congruence> = (0..n)
        .map(|u| {
            let atom = l
                .element_by_name(&format!("{u}..{u}"))
                .expect("atom present");
            principal_congruence(&l, bottom, atom)
        })
        .collect();
    let mut atom_pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            let margin = u >= 1 && v <= n - 2;
            let equal = thetas[u] == thetas[v];
            assert!(
                !margin || equal,
                "margin atoms {u}, {v} must generate the same congruence"
            );
            atom_pairs.push(AtomPairEquality {
                u,
                v,
                margin,
                equal,
            });
        }
    }
    IntervalProfile {
        n,
        size: l.size(),
        join_semidistributive: l
            .check_identity(LatticeIdentity::JoinSemidistributive)
            .holds(),
        atom_pairs,
    }
}
