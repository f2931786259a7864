//! Exact arithmetic in the infinite lattice K: canonical element forms, the
//! order and both operations via sets of join-irreducibles, the triple map,
//! bounded 2-modularity checks, and finite truncations for oracle work.
//!
//! Join-irreducibles of K are c together with two strictly descending chains
//! a_0 > a_1 > ... and b_0 > b_1 > ...; the complete list of nontrivial
//! join covers is c < a_n v b_n, a_m < b_n v c and b_m < a_n v c for m > n.
//! Consequently every element is determined by the triple (least a-index,
//! least b-index, has c) of its join-irreducible down-set, and only seven
//! shapes of triple occur.

use std::fmt;
use std::str::FromStr;

use crate::lattice::{FiniteLattice, LatticeError};

/// Canonical forms: Zero; the join-irreducibles C, A(m) = a_m, B(m) = b_m;
/// and the joins AC(m) = a_m v c, BC(m) = b_m v c, T(m) = a_m v b_m.
/// The derived order of variants is not the lattice order; see [`k_leq`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KElem {
    Zero,
    C,
    A(usize),
    B(usize),
    AC(usize),
    BC(usize),
    T(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KlatError {
    BadElementSyntax { text: String },
    /// A bounded exhaustive check contradicted a proved statement; bug signal.
    TheoremViolated { triple: [KElem; 3] },
    Lattice(LatticeError),
}

impl fmt::Display for KlatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KlatError::BadElementSyntax { text } => {
                write!(f, "not a canonical element: {text:?}")
            }
            KlatError::TheoremViolated { triple } => {
                write!(
                    f,
                    "triple ({}, {}, {}) fails the 2-modularity bound; this signals a bug",
                    triple[0], triple[1], triple[2]
                )
            }
            KlatError::Lattice(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for KlatError {}

impl From<LatticeError> for KlatError {
    fn from(e: LatticeError) -> Self {
        KlatError::Lattice(e)
    }
}

/// (least a-index, least b-index, has c); None plays the role of infinity,
/// meaning the chain is absent.
type JiTriple = (Option<usize>, Option<usize>, bool);

impl KElem {
    /// The defining index of the canonical form, if any.
    pub fn index(self) -> Option<usize> {
        match self {
            KElem::Zero | KElem::C => None,
            KElem::A(m)
            | KElem::B(m)
            | KElem::AC(m)
            | KElem::BC(m)
            | KElem::T(m) => Some(m),
        }
    }

    pub fn is_join_irreducible(self) -> bool {
        matches!(self, KElem::C | KElem::A(_) | KElem::B(_))
    }

    pub(crate) fn ji_triple(self) -> JiTriple {
        match self {
            KElem::Zero => (None, None, false),
            KElem::C => (None, None, true),
            KElem::A(m) => (Some(m), None, false),
            KElem::B(m) => (None, Some(m), false),
            KElem::AC(m) => (Some(m), Some(m + 1), true),
            KElem::BC(m) => (Some(m + 1), Some(m), true),
            KElem::T(m) => (Some(m), Some(m), true),
        }
    }

    fn from_ji_triple(t: JiTriple) -> KElem {
        match t {
            (None, None, false) => KElem::Zero,
            (None, None, true) => KElem::C,
            (Some(m), None, false) => KElem::A(m),
            (None, Some(m), false) => KElem::B(m),
            (Some(m), Some(n), true) => {
                if m == n {
                    KElem::T(m)
                } else if m + 1 == n {
                    KElem::AC(m)
                } else if n + 1 == m {
                    KElem::BC(n)
                } else {
                    unreachable!("non-canonical intersection ({m}, {n}, c)")
                }
            }
            other => unreachable!("non-canonical intersection {other:?}"),
        }
    }
}

impl fmt::Display for KElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KElem::Zero => write!(f, "0"),
            KElem::C => write!(f, "c"),
            KElem::A(m) => write!(f, "a{m}"),
            KElem::B(m) => write!(f, "b{m}"),
            KElem::AC(m) => write!(f, "a{m}+c"),
            KElem::BC(m) => write!(f, "b{m}+c"),
            KElem::T(m) => write!(f, "a{m}+b{m}"),
        }
    }
}

impl FromStr for KElem {
    type Err = KlatError;

    /// Accepts exactly the canonical spellings: `0`, `c`, `a3`, `b0`,
    /// `a3+c`, `b2+c`, `a4+b4`.
    fn from_str(s: &str) -> Result<KElem, KlatError> {
        let bad = || KlatError::BadElementSyntax {
            text: s.to_string(),
        };
        match s {
            "0" => return Ok(KElem::Zero),
            "c" => return Ok(KElem::C),
            _ => {}
        }
        let parse_indexed = |part: &str| -> Option<(char, usize)> {
            let mut chars = part.chars();
            let head = chars.next()?;
            let digits = chars.as_str();
            if !(head == 'a' || head == 'b') || digits.is_empty() {
                return None;
            }
            let index: usize = digits.parse().ok()?;
            // Reject leading zeros so that round trips are exact.
            if digits.len() > 1 && digits.starts_with('0') {
                return None;
            }
            Some((head, index))
        };
        match s.split_once('+') {
            None => {
                let (head, m) = parse_indexed(s).ok_or_else(bad)?;
                Ok(if head == 'a' { KElem::A(m) } else { KElem::B(m) })
            }
            Some((left, "c")) => {
                let (head, m) = parse_indexed(left).ok_or_else(bad)?;
                Ok(if head == 'a' {
                    KElem::AC(m)
                } else {
                    KElem::BC(m)
                })
            }
            Some((left, right)) => {
                let (hl, m) = parse_indexed(left).ok_or_else(bad)?;
                let (hr, n) = parse_indexed(right).ok_or_else(bad)?;
                if hl == 'a' && hr == 'b' && m == n {
                    Ok(KElem::T(m))
                } else {
                    Err(bad())
                }
            }
        }
    }
}

fn min_index(x: Option<usize>, y: Option<usize>) -> Option<usize> {
    match (x, y) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (Some(a), None) | (None, Some(a)) => Some(a),
        (None, None) => None,
    }
}

fn max_index(x: Option<usize>, y: Option<usize>) -> Option<usize> {
    match (x, y) {
        (Some(a), Some(b)) => Some(a.max(b)),
        _ => None,
    }
}

/// None counts as infinity: the absent chain is above every index.
fn index_geq(x: Option<usize>, y: Option<usize>) -> bool {
    match (x, y) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(a), Some(b)) => a >= b,
    }
}

/// Order of K: containment of join-irreducible down-sets, componentwise on
/// the triples (chains are indexed downward, so deeper index means smaller).
pub fn k_leq(e: KElem, f: KElem) -> bool {
    let (ea, eb, ec) = e.ji_triple();
    let (fa, fb, fc) = f.ji_triple();
    index_geq(ea, fa) && index_geq(eb, fb) && (!ec || fc)
}

/// Join: combine the triples by least index and or, then close under the
/// join covers (both chains present forces c; each chain caps the other one
/// index deeper, since b_m v c lies above every a_k with k > m and dually).
pub fn k_join(e: KElem, f: KElem) -> KElem {
    let (ea, eb, ec) = e.ji_triple();
    let (fa, fb, fc) = f.ji_triple();
    let a = min_index(ea, fa);
    let b = min_index(eb, fb);
    let c = ec || fc;
    match (a, b, c) {
        (Some(m), Some(n), _) => {
            let a2 = m.min(n + 1);
            let b2 = n.min(m + 1);
            KElem::from_ji_triple((Some(a2), Some(b2), true))
        }
        (Some(m), None, true) => KElem::AC(m),
        (None, Some(n), true) => KElem::BC(n),
        other => KElem::from_ji_triple(other),
    }
}

/// Meet: intersection of join-irreducible down-sets, componentwise by
/// greatest index and and. The intersection of canonical triples is always
/// canonical; hitting a non-canonical shape is a bug and panics.
pub fn k_meet(e: KElem, f: KElem) -> KElem {
    let (ea, eb, ec) = e.ji_triple();
    let (fa, fb, fc) = f.ji_triple();
    KElem::from_ji_triple((max_index(ea, fa), max_index(eb, fb), ec && fc))
}

/// One application of the symmetric triple map.
pub fn k_triple_step(u: [KElem; 3]) -> [KElem; 3] {
    let [x, y, z] = u;
    [
        k_join(x, k_meet(y, z)),
        k_join(y, k_meet(x, z)),
        k_join(z, k_meet(x, y)),
    ]
}

/// k applications of the triple map.
pub fn k_iterate(u: [KElem; 3], k: usize) -> [KElem; 3] {
    let mut v = u;
    for _ in 0..k {
        v = k_triple_step(v);
    }
    v
}

/// Every canonical element with defining index at most `max_index`, plus
/// Zero and C; sorted by the derived element order.
pub fn k_elements(max_index: usize) -> Vec<KElem> {
    let mut out = vec![KElem::Zero, KElem::C];
    for m in 0..=max_index {
        out.extend([
            KElem::A(m),
            KElem::B(m),
            KElem::AC(m),
            KElem::BC(m),
            KElem::T(m),
        ]);
    }
    out.sort();
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KTwoModularReport {
    pub max_index: usize,
    pub triples_checked: usize,
    /// A triple whose second iterate differs from its first, witnessing that
    /// K is not modular. Present from max_index >= 2 on.
    pub nonmodular_witness: Option<[KElem; 3]>,
}

/// Exhaustively checks u^(3) = u^(2) over all triples of canonical elements
/// with indices at most `max_index` (arithmetic itself is exact, so iterates
/// may leave the index range freely), and searches the same range for a
/// non-modularity witness u^(2) != u^(1).
pub fn k_check_2modular(max_index: usize) -> Result<KTwoModularReport, KlatError> {
    assert!(max_index <= 8, "triple scan is desk scale");
    let elems = k_elements(max_index);
    let mut checked = 0;
    let mut witness = None;
    for &x in &elems {
        for &y in &elems {
            for &z in &elems {
                let u1 = k_triple_step([x, y, z]);
                let u2 = k_triple_step(u1);
                let u3 = k_triple_step(u2);
                checked += 1;
                if u3 != u2 {
                    return Err(KlatError::TheoremViolated { triple: [x, y, z] });
                }
                if witness.is_none() && u2 != u1 {
                    witness = Some([x, y, z]);
                }
            }
        }
    }
    Ok(KTwoModularReport {
        max_index,
        triples_checked: checked,
        nonmodular_witness: witness,
    })
}

/// A finite truncation of K: all canonical elements with indices at most
/// `max_index`, plus Zero, with the induced order. Joins agree with K
/// everywhere (the element set is join-closed); meets are the greatest lower
/// bounds within the truncation and may differ from K at the index boundary.
#[derive(Clone, Debug)]
pub struct KTruncation {
    pub max_index: usize,
    pub lattice: FiniteLattice,
    pub elements: Vec<KElem>,
}

impl KTruncation {
    pub fn index_of(&self, e: KElem) -> Option<usize> {
        self.elements.binary_search(&e).ok()
    }
}

/// Builds the truncation and validates it as a lattice from its cover
/// relation; a validation failure would mean the reconstruction of K is
/// wrong and is surfaced as an error.
pub fn k_truncation(max_index: usize) -> Result<KTruncation, KlatError> {
    assert!(max_index >= 1, "truncations start at index 1");
    let elements = k_elements(max_index);
    let n = elements.len();
    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j || !k_leq(elements[i], elements[j]) {
                continue;
            }
            let between = (0..n).any(|k| {
                k != i
                    && k != j
                    && k_leq(elements[i], elements[k])
                    && k_leq(elements[k], elements[j])
            });
            if !between {
                covers.push((i, j));
            }
        }
    }
    let names: Vec<String> = elements.iter().map(KElem::to_string).collect();
    let lattice = FiniteLattice::from_covers(n, &covers, Some(names))?;
    Ok(KTruncation {
        max_index,
        lattice,
        elements,
    })
}
