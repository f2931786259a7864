//! Assignments from the join-irreducibles of K into a finite lattice L with
//! finite range, and the machinery built on them: the inflationary step
//! toward join compatibility, limit triples, closures, induced joins and
//! meets, the extension to all of K, the bi-ideal picture over finite
//! truncations, and finite cappings.
//!
//! An antitone map x on the join-irreducibles of K is stored by its value at
//! c, the two eventual (limit) values along the descending chains, and the
//! finite prefixes where the chains have not yet reached their limits. Such
//! an x determines the set of pairs (u, xi) with xi below the extension of x
//! at u, which is a bi-ideal of K x L once x is fixed by the step; joining
//! two fixed assignments is closure of the pointwise join, and the closure
//! stabilizes within h extra steps over an h-modular L.

use std::fmt;

use crate::klat::{k_elements, k_leq, k_truncation, KElem, KTruncation, KlatError};
use crate::lattice::{FiniteLattice, ModularityIndex, Triple};
use crate::tensor::{raw_close, TensorElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KClosureError {
    /// The carrier lattice did not stabilize triples within h steps.
    NotHModular { h: usize },
    /// A closure ran past its proved iteration bound; bug signal.
    BoundExceeded { bound: usize },
    /// The extension of an assignment is defined away from zero only.
    ZeroArgument,
    /// A truncation cross-check needs more index room than was given.
    TruncationTooSmall { required: usize, actual: usize },
    /// Maximal fiber elements shifted when the scan deepened; bug signal.
    FiberUnstable { value: usize },
    /// The closure path and the brute-force bi-ideal oracle disagree.
    MismatchWithOracle,
    Klat(KlatError),
}

impl fmt::Display for KClosureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KClosureError::NotHModular { h } => {
                write!(f, "carrier lattice is not {h}-modular")
            }
            KClosureError::BoundExceeded { bound } => {
                write!(f, "closure not stable within {bound} steps; this signals a bug")
            }
            KClosureError::ZeroArgument => {
                write!(f, "the extension is not defined at zero")
            }
            KClosureError::TruncationTooSmall { required, actual } => {
                write!(f, "truncation index {actual} is below the required {required}")
            }
            KClosureError::FiberUnstable { value } => {
                write!(
                    f,
                    "maximal fiber elements over value {value} shifted under a deeper scan; \
                     this signals a bug"
                )
            }
            KClosureError::MismatchWithOracle => {
                write!(f, "closure result disagrees with the brute-force oracle")
            }
            KClosureError::Klat(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for KClosureError {}

impl From<KlatError> for KClosureError {
    fn from(e: KlatError) -> Self {
        KClosureError::Klat(e)
    }
}

/// An antitone map from the join-irreducibles of K into L with finite range.
/// Values along each descending chain are nondecreasing and eventually
/// constant; the stored prefix ends strictly before the limit value.
#[derive(Clone, Debug)]
pub struct AntitoneAssignment<'l> {
    l: &'l FiniteLattice,
    c_val: usize,
    a_chain: Vec<usize>,
    a_lim: usize,
    b_chain: Vec<usize>,
    b_lim: usize,
}

impl PartialEq for AntitoneAssignment<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.c_val == other.c_val
            && self.a_chain == other.a_chain
            && self.a_lim == other.a_lim
            && self.b_chain == other.b_chain
            && self.b_lim == other.b_lim
    }
}

impl Eq for AntitoneAssignment<'_> {}

impl std::hash::Hash for AntitoneAssignment<'_> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.c_val.hash(state);
        self.a_chain.hash(state);
        self.a_lim.hash(state);
        self.b_chain.hash(state);
        self.b_lim.hash(state);
    }
}

impl<'l> AntitoneAssignment<'l> {
    /// Chain entries must be nondecreasing and below their limit; trailing
    /// entries equal to the limit are dropped, so the stored lengths give
    /// the degree directly.
    pub fn new(
        l: &'l FiniteLattice,
        c_val: usize,
        a_chain: Vec<usize>,
        a_lim: usize,
        b_chain: Vec<usize>,
        b_lim: usize,
    ) -> Self {
        let n = l.size();
        assert!(c_val < n && a_lim < n && b_lim < n, "element out of range");
        for (chain, lim) in [(&a_chain, a_lim), (&b_chain, b_lim)] {
            for w in chain.windows(2) {
                assert!(l.leq(w[0], w[1]), "chain values must be nondecreasing");
            }
            if let Some(&last) = chain.last() {
                assert!(l.leq(last, lim), "chain values must precede the limit");
            }
        }
        let mut x = AntitoneAssignment {
            l,
            c_val,
            a_chain,
            a_lim,
            b_chain,
            b_lim,
        };
        while x.a_chain.last() == Some(&x.a_lim) {
            x.a_chain.pop();
        }
        while x.b_chain.last() == Some(&x.b_lim) {
            x.b_chain.pop();
        }
        x
    }

    /// The assignment sending every join-irreducible to zero.
    pub fn bottom(l: &'l FiniteLattice) -> Self {
        let z = l.bottom();
        AntitoneAssignment::new(l, z, Vec::new(), z, Vec::new(), z)
    }

    pub fn lattice(&self) -> &'l FiniteLattice {
        self.l
    }

    pub fn c_value(&self) -> usize {
        self.c_val
    }

    /// Value at the n-th element of the descending a-chain.
    pub fn value_a(&self, n: usize) -> usize {
        self.a_chain.get(n).copied().unwrap_or(self.a_lim)
    }

    pub fn value_b(&self, n: usize) -> usize {
        self.b_chain.get(n).copied().unwrap_or(self.b_lim)
    }

    pub fn limit_a(&self) -> usize {
        self.a_lim
    }

    pub fn limit_b(&self) -> usize {
        self.b_lim
    }

    /// Least n from which both chains sit at their limit values.
    pub fn degree(&self) -> usize {
        self.a_chain.len().max(self.b_chain.len())
    }

    /// The limit triple (a-limit, b-limit, value at c).
    pub fn ell(&self) -> Triple {
        [self.a_lim, self.b_lim, self.c_val]
    }

    pub fn pointwise_leq(&self, other: &AntitoneAssignment<'l>) -> bool {
        let l = self.l;
        if !l.leq(self.c_val, other.c_val)
            || !l.leq(self.a_lim, other.a_lim)
            || !l.leq(self.b_lim, other.b_lim)
        {
            return false;
        }
        let top = self.degree().max(other.degree());
        (0..top).all(|n| {
            l.leq(self.value_a(n), other.value_a(n))
                && l.leq(self.value_b(n), other.value_b(n))
        })
    }

    pub fn is_step_fixed(&self) -> bool {
        step(self) == *self
    }

    /// Whether the limit triple is fixed by the triple map; the step then
    /// changes nothing at or beyond the degree.
    pub fn is_limit_stable(&self) -> bool {
        self.l.triple_step(self.ell()) == self.ell()
    }
}

/// One inflationary step toward join compatibility: c absorbs the meet of
/// the limits, each chain entry past the first absorbs the opposite entry
/// one level up met with the value at c, and the limits do likewise.
pub fn step<'l>(x: &AntitoneAssignment<'l>) -> AntitoneAssignment<'l> {
    let l = x.l;
    let c2 = l.join(x.c_val, l.meet(x.a_lim, x.b_lim));
    let a_lim2 = l.join(x.a_lim, l.meet(x.b_lim, x.c_val));
    let b_lim2 = l.join(x.b_lim, l.meet(x.a_lim, x.c_val));
    let top_len = x.a_chain.len().max(x.b_chain.len()) + 1;
    let mut a2 = Vec::with_capacity(top_len + 1);
    let mut b2 = Vec::with_capacity(top_len + 1);
    a2.push(x.value_a(0));
    b2.push(x.value_b(0));
    for n in 1..=top_len {
        a2.push(l.join(x.value_a(n), l.meet(x.value_b(n - 1), x.c_val)));
        b2.push(l.join(x.value_b(n), l.meet(x.value_a(n - 1), x.c_val)));
    }
    let out = AntitoneAssignment::new(l, c2, a2, a_lim2, b2, b_lim2);
    debug_assert!(out.degree() <= x.degree() + 1);
    debug_assert!(x.pointwise_leq(&out));
    out
}

/// Pointwise join; chains of unequal length are aligned by padding with the
/// limit values.
pub fn vee_c<'l>(
    x: &AntitoneAssignment<'l>,
    y: &AntitoneAssignment<'l>,
) -> AntitoneAssignment<'l> {
    assert!(std::ptr::eq(x.l, y.l), "assignments over different lattices");
    let l = x.l;
    let top = x.degree().max(y.degree());
    let a2 = (0..top).map(|n| l.join(x.value_a(n), y.value_a(n))).collect();
    let b2 = (0..top).map(|n| l.join(x.value_b(n), y.value_b(n))).collect();
    AntitoneAssignment::new(
        l,
        l.join(x.c_val, y.c_val),
        a2,
        l.join(x.a_lim, y.a_lim),
        b2,
        l.join(x.b_lim, y.b_lim),
    )
}

/// A step-fixed assignment; its extension over the nonzero part of K cuts
/// out a bi-ideal of K x L.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KTensorElement<'l> {
    x: AntitoneAssignment<'l>,
}

impl<'l> KTensorElement<'l> {
    pub fn new(x: AntitoneAssignment<'l>) -> Self {
        assert!(x.is_step_fixed(), "assignment is not step-fixed");
        KTensorElement { x }
    }

    pub fn assignment(&self) -> &AntitoneAssignment<'l> {
        &self.x
    }

    pub fn degree(&self) -> usize {
        self.x.degree()
    }
}

/// Driver tying a carrier lattice to its triple stabilization bound h; the
/// bound is validated once and then backs every closure's iteration check.
#[derive(Clone, Debug)]
pub struct KClosure<'l> {
    l: &'l FiniteLattice,
    h: usize,
}

impl<'l> KClosure<'l> {
    pub fn new(l: &'l FiniteLattice, h: usize) -> Result<KClosure<'l>, KClosureError> {
        assert!(h >= 1, "stabilization bounds start at 1");
        match l.h_modularity_index(h) {
            ModularityIndex::Reached(_) => Ok(KClosure { l, h }),
            ModularityIndex::NotReached { .. } => Err(KClosureError::NotHModular { h }),
        }
    }

    pub fn lattice(&self) -> &'l FiniteLattice {
        self.l
    }

    pub fn h(&self) -> usize {
        self.h
    }

    /// Least step-fixed assignment above x. Iterates to a literal fixed
    /// point; the proved bound of degree-after-one-step plus h is asserted
    /// rather than trusted as the loop condition.
    pub fn closure(
        &self,
        x: &AntitoneAssignment<'l>,
    ) -> Result<KTensorElement<'l>, KClosureError> {
        let bound = step(x).degree() + self.h;
        let mut cur = x.clone();
        for _ in 0..bound {
            let next = step(&cur);
            if next == cur {
                break;
            }
            cur = next;
        }
        if step(&cur) != cur {
            return Err(KClosureError::BoundExceeded { bound });
        }
        Ok(KTensorElement { x: cur })
    }

    /// Join of two fixed assignments: closure of the pointwise join.
    pub fn vee_star(
        &self,
        x: &KTensorElement<'l>,
        y: &KTensorElement<'l>,
    ) -> Result<KTensorElement<'l>, KClosureError> {
        self.closure(&vee_c(&x.x, &y.x))
    }
}

/// Meet of two fixed assignments: the pointwise meet is already fixed, as
/// the step is monotone and inflationary.
pub fn meet_star<'l>(
    x: &KTensorElement<'l>,
    y: &KTensorElement<'l>,
) -> KTensorElement<'l> {
    assert!(
        std::ptr::eq(x.x.l, y.x.l),
        "assignments over different lattices"
    );
    let l = x.x.l;
    let top = x.degree().max(y.degree());
    let a2 = (0..top)
        .map(|n| l.meet(x.x.value_a(n), y.x.value_a(n)))
        .collect();
    let b2 = (0..top)
        .map(|n| l.meet(x.x.value_b(n), y.x.value_b(n)))
        .collect();
    let z = AntitoneAssignment::new(
        l,
        l.meet(x.x.c_val, y.x.c_val),
        a2,
        l.meet(x.x.a_lim, y.x.a_lim),
        b2,
        l.meet(x.x.b_lim, y.x.b_lim),
    );
    KTensorElement::new(z)
}

/// The unique extension of a fixed assignment to a map sending joins in K
/// to meets in L, evaluated via the canonical two-generator decompositions.
pub fn extend_bar(x: &KTensorElement<'_>, e: KElem) -> Result<usize, KClosureError> {
    let v = &x.x;
    let l = v.l;
    match e {
        KElem::Zero => Err(KClosureError::ZeroArgument),
        KElem::C => Ok(v.c_val),
        KElem::A(m) => Ok(v.value_a(m)),
        KElem::B(m) => Ok(v.value_b(m)),
        KElem::AC(m) => Ok(l.meet(v.value_a(m), v.c_val)),
        KElem::BC(m) => Ok(l.meet(v.value_b(m), v.c_val)),
        KElem::T(m) => Ok(l.meet(v.value_a(m), v.value_b(m))),
    }
}

/// The bi-ideal of x restricted to a finite truncation of K, as a tensor
/// element over truncation x L: zero maps to the top of L, everything else
/// to the extension value.
pub fn epsilon_restricted<'t>(
    x: &KTensorElement<'t>,
    trunc: &'t KTruncation,
) -> Result<TensorElement<'t>, KClosureError> {
    let required = x.degree() + 2;
    if trunc.max_index < required {
        return Err(KClosureError::TruncationTooSmall {
            required,
            actual: trunc.max_index,
        });
    }
    let l = x.x.l;
    let values = trunc
        .elements
        .iter()
        .map(|&e| match e {
            KElem::Zero => l.top(),
            other => extend_bar(x, other).expect("nonzero element"),
        })
        .collect();
    Ok(TensorElement::new(&trunc.lattice, l, values))
}

/// The fixed assignment whose bi-ideal is the pure tensor of u and xi:
/// xi below u, zero elsewhere.
pub fn pure_preimage<'l>(l: &'l FiniteLattice, u: KElem, xi: usize) -> KTensorElement<'l> {
    let z = l.bottom();
    let (ja, jb, has_c) = u.ji_triple();
    let a_chain = vec![z; ja.unwrap_or(0)];
    let a_lim = if ja.is_some() { xi } else { z };
    let b_chain = vec![z; jb.unwrap_or(0)];
    let b_lim = if jb.is_some() { xi } else { z };
    let c_val = if has_c { xi } else { z };
    KTensorElement::new(AntitoneAssignment::new(l, c_val, a_chain, a_lim, b_chain, b_lim))
}

/// For each value xi in the range of the extension, the maximal elements of
/// its fiber; together these pairs cap the bi-ideal of x, regenerating it by
/// heredity alone. Fibers are scanned two indices past the degree and the
/// scan is repeated two deeper as a stability check.
pub fn gamma_capping(x: &KTensorElement<'_>) -> Result<Vec<(KElem, usize)>, KClosureError> {
    let scan = |bound: usize| -> Vec<(KElem, usize)> {
        let elems: Vec<KElem> = k_elements(bound)
            .into_iter()
            .filter(|&e| e != KElem::Zero)
            .collect();
        let vals: Vec<usize> = elems
            .iter()
            .map(|&e| extend_bar(x, e).expect("nonzero element"))
            .collect();
        let mut gamma: Vec<(KElem, usize)> = elems
            .iter()
            .enumerate()
            .filter(|&(i, &u)| {
                !elems.iter().enumerate().any(|(j, &v)| {
                    j != i && vals[j] == vals[i] && u != v && k_leq(u, v)
                })
            })
            .map(|(i, &u)| (u, vals[i]))
            .collect();
        gamma.sort();
        gamma
    };
    let d = x.degree();
    let near = scan(d + 2);
    let far = scan(d + 4);
    if near != far {
        let value = near
            .iter()
            .chain(&far)
            .find(|p| !(near.contains(p) && far.contains(p)))
            .map(|p| p.1)
            .unwrap_or(0);
        return Err(KClosureError::FiberUnstable { value });
    }
    for &(_, xi) in &near {
        let width = near.iter().filter(|&&(_, v)| v == xi).count();
        assert!(width <= 4, "fiber over value {xi} has {width} maximal elements");
    }
    Ok(near)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CappedReport {
    pub truncation_index: usize,
    pub degree: usize,
    /// Maximal fiber pairs; joined with the base pairs they regenerate the
    /// whole bi-ideal by heredity.
    pub gamma: Vec<(KElem, usize)>,
    pub largest_fiber: usize,
    /// Pairs in the bi-ideal within the checked truncation.
    pub ideal_size: usize,
}

/// Joins the given pure tensors along the closure path, caps the result,
/// and cross-checks the bi-ideal against a brute-force closure of the same
/// pure tensors inside the truncation at index n.
pub fn verify_capped<'l>(
    kc: &KClosure<'l>,
    tensors: &[(KElem, usize)],
    n: usize,
) -> Result<CappedReport, KClosureError> {
    let l = kc.lattice();
    let mut acc = KTensorElement::new(AntitoneAssignment::bottom(l));
    for &(u, xi) in tensors {
        assert!(xi < l.size(), "element out of range");
        acc = kc.vee_star(&acc, &pure_preimage(l, u, xi))?;
    }
    let degree = acc.degree();
    let required = tensors
        .iter()
        .filter_map(|&(u, _)| u.index())
        .fold(degree + 2, |need, m| need.max(m + 2));
    if n < required {
        return Err(KClosureError::TruncationTooSmall {
            required,
            actual: n,
        });
    }
    let trunc = k_truncation(n)?;
    let eps = epsilon_restricted(&acc, &trunc)?;
    let gamma = gamma_capping(&acc)?;
    let seed: Vec<(usize, usize)> = tensors
        .iter()
        .map(|&(u, xi)| {
            let ui = trunc.index_of(u).expect("input fits the truncation");
            (ui, xi)
        })
        .collect();
    let oracle = raw_close(&trunc.lattice, l, &seed);
    let mine = eps.raw();
    if mine != oracle {
        return Err(KClosureError::MismatchWithOracle);
    }
    let largest_fiber = gamma
        .iter()
        .map(|&(_, xi)| gamma.iter().filter(|&&(_, v)| v == xi).count())
        .max()
        .unwrap_or(0);
    Ok(CappedReport {
        truncation_index: n,
        degree,
        gamma,
        largest_fiber,
        ideal_size: mine.len(),
    })
}
