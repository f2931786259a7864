//! Tensor products of finite lattices with zero, in two representations:
//! the map form (each element is a map A -> B sending bottom to top and
//! joins to meets, the fast path) and the raw subset form (bi-ideals of
//! A x B as bitsets, kept as an independently computed oracle). Joins,
//! meets, the full tensor lattice, cappings, and the join-as-union
//! identity verifier live here.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::lattice::{guard_limit, FiniteLattice, LatticeError};
use crate::terms::{join as term_join, meet as term_meet, var, LatTerm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TensorError {
    SizeLimitExceeded { requested: usize, limit: usize },
    /// The union in the join-as-union check was still growing at the cutoff.
    DepthExhausted { depth: usize },
    Lattice(LatticeError),
}

impl std::fmt::Display for TensorError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TensorError::SizeLimitExceeded { requested, limit } => {
                write!(f, "size {requested} exceeds guard limit {limit}")
            }
            TensorError::DepthExhausted { depth } => {
                write!(f, "value union still growing after {depth} rounds")
            }
            TensorError::Lattice(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for TensorError {}

impl From<LatticeError> for TensorError {
    fn from(e: LatticeError) -> Self {
        TensorError::Lattice(e)
    }
}

/// An element of the tensor product in map form: `values[a]` is the largest
/// b with (a, b) in the bi-ideal. Invariants: values[0] = top of B and
/// values[a join a'] = values[a] meet values[a'].
#[derive(Clone, Debug)]
pub struct TensorElement<'l> {
    a: &'l FiniteLattice,
    b: &'l FiniteLattice,
    values: Vec<usize>,
}

impl PartialEq for TensorElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.values == other.values
    }
}

impl Eq for TensorElement<'_> {}

impl PartialOrd for TensorElement<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.values.cmp(&other.values))
    }
}

impl Ord for TensorElement<'_> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.values.cmp(&other.values)
    }
}

impl<'l> TensorElement<'l> {
    pub(crate) fn new(a: &'l FiniteLattice, b: &'l FiniteLattice, values: Vec<usize>) -> Self {
        let e = TensorElement { a, b, values };
        debug_assert!(e.is_valid());
        e
    }

    pub fn factors(&self) -> (&'l FiniteLattice, &'l FiniteLattice) {
        (self.a, self.b)
    }

    /// The largest b paired with `x` in the bi-ideal.
    pub fn value(&self, x: usize) -> usize {
        self.values[x]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Membership of the pair (x, y) in the bi-ideal.
    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.b.leq(y, self.values[x])
    }

    /// Bi-ideal inclusion, which is the pointwise order on values.
    pub fn leq(&self, other: &TensorElement<'l>) -> bool {
        assert!(self.same_context(other));
        (0..self.values.len()).all(|x| self.b.leq(self.values[x], other.values[x]))
    }

    pub fn is_bottom(&self) -> bool {
        (1..self.values.len()).all(|x| self.values[x] == self.b.bottom())
    }

    fn same_context(&self, other: &TensorElement<'l>) -> bool {
        (std::ptr::eq(self.a, other.a) || self.a == other.a)
            && (std::ptr::eq(self.b, other.b) || self.b == other.b)
    }

    /// Checks the map-form invariants.
    pub fn is_valid(&self) -> bool {
        let n = self.a.size();
        if self.values.len() != n || self.values[self.a.bottom()] != self.b.top() {
            return false;
        }
        for x in 0..n {
            for y in 0..n {
                let lhs = self.values[self.a.join(x, y)];
                let rhs = self.b.meet(self.values[x], self.values[y]);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// The bi-ideal as an explicit subset of A x B.
    pub fn raw(&self) -> RawBiIdeal {
        let mut raw = RawBiIdeal::empty(self.a.size(), self.b.size());
        for x in 0..self.a.size() {
            for y in 0..self.b.size() {
                if self.contains(x, y) {
                    raw.insert(x, y);
                }
            }
        }
        raw
    }
}

/// The pure tensor a (x) b: the least bi-ideal containing the pair (a, b).
pub fn pure_tensor<'l>(
    la: &'l FiniteLattice,
    lb: &'l FiniteLattice,
    a: usize,
    b: usize,
) -> TensorElement<'l> {
    assert!(a < la.size() && b < lb.size(), "element out of range");
    let values = (0..la.size())
        .map(|x| {
            if x == la.bottom() {
                lb.top()
            } else if la.leq(x, a) {
                b
            } else {
                lb.bottom()
            }
        })
        .collect();
    TensorElement::new(la, lb, values)
}

/// The least bi-ideal: bottom of A paired with everything, everything
/// paired with bottom of B.
pub fn bottom_tensor<'l>(la: &'l FiniteLattice, lb: &'l FiniteLattice) -> TensorElement<'l> {
    pure_tensor(la, lb, la.bottom(), lb.bottom())
}

/// Least upper bound: the least valid map above the pointwise join. The
/// fixpoint alternates two rules until stable: restore antitonicity
/// (g(u) >= g(w) for u <= w) and close under the homomorphism inequality
/// (g(x join y) >= g(x) meet g(y)). Each rule only raises values, so the
/// sweep count is bounded by |A| times the height of B.
pub fn tensor_join<'l>(x: &TensorElement<'l>, y: &TensorElement<'l>) -> TensorElement<'l> {
    assert!(x.same_context(y));
    let (la, lb) = (x.a, x.b);
    let n = la.size();
    let mut g: Vec<usize> = (0..n).map(|i| lb.join(x.values[i], y.values[i])).collect();
    loop {
        let mut changed = false;
        for u in 0..n {
            for w in 0..n {
                if u != w && la.leq(u, w) {
                    let t = lb.join(g[u], g[w]);
                    if t != g[u] {
                        g[u] = t;
                        changed = true;
                    }
                }
            }
        }
        for p in 0..n {
            for q in p..n {
                let target = la.join(p, q);
                let t = lb.join(g[target], lb.meet(g[p], g[q]));
                if t != g[target] {
                    g[target] = t;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    TensorElement::new(la, lb, g)
}

/// Greatest lower bound: intersection of bi-ideals, which is the pointwise
/// meet of the maps (no closure needed).
pub fn tensor_meet<'l>(x: &TensorElement<'l>, y: &TensorElement<'l>) -> TensorElement<'l> {
    assert!(x.same_context(y));
    let values = (0..x.values.len())
        .map(|i| x.b.meet(x.values[i], y.values[i]))
        .collect();
    TensorElement::new(x.a, x.b, values)
}

/// The tensor product lattice together with its elements in map form;
/// `elements[i]` corresponds to lattice element i.
#[derive(Clone, Debug)]
pub struct TensorLattice<'l> {
    pub lattice: FiniteLattice,
    pub elements: Vec<TensorElement<'l>>,
}

impl<'l> TensorLattice<'l> {
    pub fn index_of(&self, e: &TensorElement<'l>) -> Option<usize> {
        self.elements.iter().position(|x| x == e)
    }
}

/// All bi-ideals of A x B in map form: the closure of the pure tensors
/// under binary joins, ordered pointwise.
pub fn tensor_lattice<'l>(
    la: &'l FiniteLattice,
    lb: &'l FiniteLattice,
) -> Result<TensorLattice<'l>, TensorError> {
    let limit = guard_limit(1_000_000);
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut elems: Vec<TensorElement<'l>> = Vec::new();
    for a in 0..la.size() {
        for b in 0..lb.size() {
            let t = pure_tensor(la, lb, a, b);
            if !seen.contains_key(&t.values) {
                seen.insert(t.values.clone(), elems.len());
                elems.push(t);
            }
        }
    }
    let mut frontier: Vec<usize> = (0..elems.len()).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &i in &frontier {
            for j in 0..elems.len() {
                let joined = tensor_join(&elems[i].clone(), &elems[j].clone());
                if !seen.contains_key(&joined.values) {
                    if elems.len() >= limit {
                        return Err(TensorError::SizeLimitExceeded {
                            requested: elems.len() + 1,
                            limit,
                        });
                    }
                    seen.insert(joined.values.clone(), elems.len());
                    next.push(elems.len());
                    elems.push(joined);
                }
            }
        }
        frontier = next;
    }
    elems.sort();
    let n = elems.len();
    let mut leq = vec![false; n * n];
    for (i, x) in elems.iter().enumerate() {
        for (j, y) in elems.iter().enumerate() {
            leq[i * n + j] = x.leq(y);
        }
    }
    let lattice = FiniteLattice::from_leq(n, leq, None)?;
    Ok(TensorLattice {
        lattice,
        elements: elems,
    })
}

/// A subset of A x B as a bitset; pair (a, b) sits at bit a * |B| + b.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RawBiIdeal {
    rows: usize,
    cols: usize,
    bits: Vec<u64>,
}

impl RawBiIdeal {
    pub fn empty(rows: usize, cols: usize) -> RawBiIdeal {
        RawBiIdeal {
            rows,
            cols,
            bits: vec![0; (rows * cols).div_ceil(64)],
        }
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        let i = a * self.cols + b;
        self.bits[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn insert(&mut self, a: usize, b: usize) {
        let i = a * self.cols + b;
        self.bits[i / 64] |= 1 << (i % 64);
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &RawBiIdeal) -> bool {
        self.bits
            .iter()
            .zip(&other.bits)
            .all(|(x, y)| x & !y == 0)
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.rows {
            for b in 0..self.cols {
                if self.contains(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    fn union_with(&mut self, other: &RawBiIdeal) {
        for (x, y) in self.bits.iter_mut().zip(&other.bits) {
            *x |= y;
        }
    }

    /// Closed under lateral joins: two members sharing a coordinate admit
    /// the coordinatewise join as a member.
    pub fn is_lateral_closed(&self, la: &FiniteLattice, lb: &FiniteLattice) -> bool {
        let ps = self.pairs();
        for &(a0, b0) in &ps {
            for &(a1, b1) in &ps {
                if (a0 == a1 || b0 == b1)
                    && !self.contains(la.join(a0, a1), lb.join(b0, b1))
                {
                    return false;
                }
            }
        }
        true
    }

    /// Downward closed in the product order.
    pub fn is_hereditary(&self, la: &FiniteLattice, lb: &FiniteLattice) -> bool {
        for (a, b) in self.pairs() {
            for a2 in 0..la.size() {
                for b2 in 0..lb.size() {
                    if la.leq(a2, a) && lb.leq(b2, b) && !self.contains(a2, b2) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// The least subset of A x B containing the base pairs (everything paired
/// with bottom, both ways) and the seed, hereditary, and closed under
/// lateral joins.
pub fn raw_close(
    la: &FiniteLattice,
    lb: &FiniteLattice,
    seed: &[(usize, usize)],
) -> RawBiIdeal {
    let mut raw = RawBiIdeal::empty(la.size(), lb.size());
    for a in 0..la.size() {
        raw.insert(a, lb.bottom());
    }
    for b in 0..lb.size() {
        raw.insert(la.bottom(), b);
    }
    for &(a, b) in seed {
        raw.insert(a, b);
    }
    loop {
        let before = raw.bits.clone();
        // Hereditary closure.
        let ps = raw.pairs();
        for &(a, b) in &ps {
            for a2 in 0..la.size() {
                if la.leq(a2, a) {
                    for b2 in 0..lb.size() {
                        if lb.leq(b2, b) {
                            raw.insert(a2, b2);
                        }
                    }
                }
            }
        }
        // Lateral joins, per row and per column.
        for a in 0..la.size() {
            let row: Vec<usize> = (0..lb.size()).filter(|&b| raw.contains(a, b)).collect();
            for &b0 in &row {
                for &b1 in &row {
                    raw.insert(a, lb.join(b0, b1));
                }
            }
        }
        for b in 0..lb.size() {
            let col: Vec<usize> = (0..la.size()).filter(|&a| raw.contains(a, b)).collect();
            for &a0 in &col {
                for &a1 in &col {
                    raw.insert(la.join(a0, a1), b);
                }
            }
        }
        if raw.bits == before {
            return raw;
        }
    }
}

/// The lattice of raw bi-ideals with its elements; the oracle counterpart
/// of [`tensor_lattice`].
#[derive(Clone, Debug)]
pub struct RawTensorLattice {
    pub lattice: FiniteLattice,
    pub elements: Vec<RawBiIdeal>,
}

/// Every bi-ideal of A x B by direct subset search: close each antichain of
/// the product order and deduplicate. Independent of the map form.
pub fn brute_force_biideals(
    la: &FiniteLattice,
    lb: &FiniteLattice,
) -> Result<RawTensorLattice, TensorError> {
    let cells = la.size() * lb.size();
    let limit = guard_limit(64);
    if cells > limit {
        return Err(TensorError::SizeLimitExceeded {
            requested: cells,
            limit,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..la.size())
        .flat_map(|a| (0..lb.size()).map(move |b| (a, b)))
        .collect();
    let mut found: HashSet<RawBiIdeal> = HashSet::new();
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    antichain_scan(la, lb, &pairs, 0, &mut chosen, &mut found);
    let mut elems: Vec<RawBiIdeal> = found.into_iter().collect();
    elems.sort();
    let n = elems.len();
    let mut leq = vec![false; n * n];
    for (i, x) in elems.iter().enumerate() {
        for (j, y) in elems.iter().enumerate() {
            leq[i * n + j] = x.is_subset(y);
        }
    }
    let lattice = FiniteLattice::from_leq(n, leq, None)?;
    Ok(RawTensorLattice {
        lattice,
        elements: elems,
    })
}

fn antichain_scan(
    la: &FiniteLattice,
    lb: &FiniteLattice,
    pairs: &[(usize, usize)],
    from: usize,
    chosen: &mut Vec<(usize, usize)>,
    found: &mut HashSet<RawBiIdeal>,
) {
    found.insert(raw_close(la, lb, chosen));
    for i in from..pairs.len() {
        let (a, b) = pairs[i];
        let incomparable = chosen.iter().all(|&(x, y)| {
            !(la.leq(a, x) && lb.leq(b, y)) && !(la.leq(x, a) && lb.leq(y, b))
        });
        if incomparable {
            chosen.push(pairs[i]);
            antichain_scan(la, lb, pairs, i + 1, chosen, found);
            chosen.pop();
        }
    }
}

/// A finite capping: pairs whose hereditary closure together with the base
/// pairs regenerates the bi-ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Capping {
    pub pairs: Vec<(usize, usize)>,
}

impl Capping {
    /// Hereditary closure of the capping pairs plus the base pairs. No
    /// lateral-join step: a capping must regenerate by heredity alone.
    pub fn regenerate(&self, la: &FiniteLattice, lb: &FiniteLattice) -> RawBiIdeal {
        let mut raw = RawBiIdeal::empty(la.size(), lb.size());
        for a in 0..la.size() {
            raw.insert(a, lb.bottom());
        }
        for b in 0..lb.size() {
            raw.insert(la.bottom(), b);
        }
        for &(a, b) in &self.pairs {
            for a2 in 0..la.size() {
                if la.leq(a2, a) {
                    for b2 in 0..lb.size() {
                        if lb.leq(b2, b) {
                            raw.insert(a2, b2);
                        }
                    }
                }
            }
        }
        raw
    }
}

/// The unique minimal capping of a finite bi-ideal: its maximal pairs
/// outside the base rows, read off the map form.
pub fn capping_of(x: &TensorElement<'_>) -> Capping {
    let (la, lb) = (x.a, x.b);
    let mut candidates: Vec<(usize, usize)> = (0..la.size())
        .filter(|&a| a != la.bottom() && x.values[a] != lb.bottom())
        .map(|a| (a, x.values[a]))
        .collect();
    candidates.sort();
    let maximal: Vec<(usize, usize)> = candidates
        .iter()
        .filter(|&&(a, b)| {
            !candidates.iter().any(|&(a2, b2)| {
                (a, b) != (a2, b2) && la.leq(a, a2) && lb.leq(b, b2)
            })
        })
        .copied()
        .collect();
    Capping { pairs: maximal }
}

/// One contributing pure tensor of the value union, with the term that
/// produced it (variables x, y, z name the input pairs in order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuePairWitness {
    pub a: usize,
    pub b: usize,
    pub term: LatTerm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensunReport {
    /// The union of pure tensors equals the tensor join.
    pub equal: bool,
    /// Rounds run until the value set stabilized.
    pub rounds: usize,
    /// The union is closed under lateral joins (it is always hereditary).
    pub lateral_closed: bool,
    pub value_pairs: Vec<ValuePairWitness>,
}

/// Checks that the join of the pure tensors a_i (x) b_i equals the union of
/// the pure tensors P(a_0..) (x) Pd(b_0..) over all terms P, with Pd the
/// dual term. The term sweep is run as a closure over evaluated value pairs:
/// combining two reached pairs under (join, meet) and (meet, join) reaches
/// exactly the values of deeper terms, and the set stabilizes because it
/// lives inside A x B. Errors if it has not stabilized within `depth`
/// rounds.
pub fn tensun_verify(
    la: &FiniteLattice,
    lb: &FiniteLattice,
    pairs: &[(usize, usize)],
    depth: usize,
) -> Result<TensunReport, TensorError> {
    assert!(
        (1..=3).contains(&pairs.len()),
        "supported pair counts are 1..=3"
    );
    assert!((1..=4).contains(&depth), "supported depths are 1..=4");
    let names = ["x", "y", "z"];
    let tensors: Vec<TensorElement> = pairs
        .iter()
        .map(|&(a, b)| pure_tensor(la, lb, a, b))
        .collect();
    let mut lhs = tensors[0].clone();
    for t in &tensors[1..] {
        lhs = tensor_join(&lhs, t);
    }
    let lhs_raw = lhs.raw();

    let mut reached: BTreeMap<(usize, usize), LatTerm> = BTreeMap::new();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        reached.entry((a, b)).or_insert_with(|| var(names[i]));
    }
    let mut rounds = 0;
    let mut stabilized = false;
    for round in 1..=depth {
        let snapshot: Vec<((usize, usize), LatTerm)> = reached
            .iter()
            .map(|(&k, v)| (k, v.clone()))
            .collect();
        let mut added = false;
        for ((a0, b0), t0) in &snapshot {
            for ((a1, b1), t1) in &snapshot {
                let joined = (la.join(*a0, *a1), lb.meet(*b0, *b1));
                if !reached.contains_key(&joined) {
                    reached.insert(joined, term_join(vec![t0.clone(), t1.clone()]));
                    added = true;
                }
                let met = (la.meet(*a0, *a1), lb.join(*b0, *b1));
                if !reached.contains_key(&met) {
                    reached.insert(met, term_meet(vec![t0.clone(), t1.clone()]));
                    added = true;
                }
            }
        }
        rounds = round;
        if !added {
            stabilized = true;
            break;
        }
    }
    if !stabilized {
        return Err(TensorError::DepthExhausted { depth });
    }

    let mut union = bottom_tensor(la, lb).raw();
    for &(a, b) in reached.keys() {
        union.union_with(&pure_tensor(la, lb, a, b).raw());
    }
    Ok(TensunReport {
        equal: union == lhs_raw,
        rounds,
        lateral_closed: union.is_lateral_closed(la, lb),
        value_pairs: reached
            .into_iter()
            .map(|((a, b), term)| ValuePairWitness { a, b, term })
            .collect(),
    })
}
