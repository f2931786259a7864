//! Free-lattice terms over named variables: parsing, printing, dualization,
//! evaluation in a finite lattice, Whitman's decision procedure for the
//! free-lattice order, bounded enumeration of canonical terms, and the
//! extraction of a pure meet polynomial below a term whose substituted
//! hypothesis inequality holds.
//!
//! Canonical form: argument lists of meets and joins are flattened (no meet
//! directly under a meet, ditto joins), duplicate-free, sorted, and have at
//! least two entries; singletons collapse to their argument. No free-lattice
//! equivalences beyond that are applied.

use std::collections::HashMap;
use std::fmt;

use crate::lattice::FiniteLattice;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LatTerm {
    Variable(String),
    Meet(Vec<LatTerm>),
    Join(Vec<LatTerm>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermError {
    Syntax { pos: usize, msg: String },
    UnboundVariable { name: String },
    /// The precondition inequality of the pure-meet extraction is refuted.
    HypothesisFails,
    /// No admissible branch in the join case of the extraction, or a branch
    /// the underlying argument rules out tested true; either way a bug signal.
    InternalCaseExhaustion,
}

impl fmt::Display for TermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermError::Syntax { pos, msg } => write!(f, "syntax error at byte {pos}: {msg}"),
            TermError::UnboundVariable { name } => write!(f, "unbound variable {name:?}"),
            TermError::HypothesisFails => {
                write!(f, "the hypothesis inequality does not hold")
            }
            TermError::InternalCaseExhaustion => {
                write!(f, "case analysis exhausted; this signals a bug")
            }
        }
    }
}

impl std::error::Error for TermError {}

/// Variable constructor.
pub fn var(name: impl Into<String>) -> LatTerm {
    LatTerm::Variable(name.into())
}

/// Canonical meet of the given terms. Flattens nested meets, removes
/// duplicates, sorts, and collapses singletons. Panics on an empty list.
pub fn meet(args: Vec<LatTerm>) -> LatTerm {
    canonical_op(args, true)
}

/// Canonical join of the given terms; dual of [`meet`].
pub fn join(args: Vec<LatTerm>) -> LatTerm {
    canonical_op(args, false)
}

fn canonical_op(args: Vec<LatTerm>, is_meet: bool) -> LatTerm {
    assert!(!args.is_empty(), "meet/join of an empty argument list");
    let mut flat = Vec::with_capacity(args.len());
    for a in args {
        match a {
            LatTerm::Meet(xs) if is_meet => flat.extend(xs),
            LatTerm::Join(xs) if !is_meet => flat.extend(xs),
            other => flat.push(other),
        }
    }
    flat.sort();
    flat.dedup();
    if flat.len() == 1 {
        flat.pop().unwrap()
    } else if is_meet {
        LatTerm::Meet(flat)
    } else {
        LatTerm::Join(flat)
    }
}

impl LatTerm {
    /// Nesting depth: variables are 0, a meet/join is 1 + max over arguments.
    pub fn depth(&self) -> usize {
        match self {
            LatTerm::Variable(_) => 0,
            LatTerm::Meet(xs) | LatTerm::Join(xs) => {
                1 + xs.iter().map(LatTerm::depth).max().unwrap()
            }
        }
    }

    /// Sorted list of distinct variable names occurring in the term.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_variables(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_variables(&self, out: &mut Vec<String>) {
        match self {
            LatTerm::Variable(v) => out.push(v.clone()),
            LatTerm::Meet(xs) | LatTerm::Join(xs) => {
                for x in xs {
                    x.collect_variables(out);
                }
            }
        }
    }
}

/// Swaps meets and joins recursively; an involution.
pub fn dual_term(p: &LatTerm) -> LatTerm {
    match p {
        LatTerm::Variable(v) => LatTerm::Variable(v.clone()),
        LatTerm::Meet(xs) => join(xs.iter().map(dual_term).collect()),
        LatTerm::Join(xs) => meet(xs.iter().map(dual_term).collect()),
    }
}

/// Replaces each variable by its image; variables without an image stay.
pub fn substitute(p: &LatTerm, map: &HashMap<String, LatTerm>) -> LatTerm {
    match p {
        LatTerm::Variable(v) => map.get(v).cloned().unwrap_or_else(|| p.clone()),
        LatTerm::Meet(xs) => meet(xs.iter().map(|x| substitute(x, map)).collect()),
        LatTerm::Join(xs) => join(xs.iter().map(|x| substitute(x, map)).collect()),
    }
}

/// Grammar: `term := var | '(' term (op term)+ ')'` with a uniform operator
/// (`&` or `|`) inside each parenthesis group; variables match
/// `[A-Za-z_][A-Za-z0-9_]*`; whitespace is free.
pub fn parse_term(text: &str) -> Result<LatTerm, TermError> {
    let bytes = text.as_bytes();
    let mut pos = 0usize;
    let term = parse_at(bytes, &mut pos)?;
    skip_ws(bytes, &mut pos);
    if pos != bytes.len() {
        return Err(TermError::Syntax {
            pos,
            msg: "trailing input after term".to_string(),
        });
    }
    Ok(term)
}

fn skip_ws(bytes: &[u8], pos: &mut usize) {
    while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
}

fn parse_at(bytes: &[u8], pos: &mut usize) -> Result<LatTerm, TermError> {
    skip_ws(bytes, pos);
    if *pos >= bytes.len() {
        return Err(TermError::Syntax {
            pos: *pos,
            msg: "expected a term".to_string(),
        });
    }
    if bytes[*pos] == b'(' {
        *pos += 1;
        let mut args = vec![parse_at(bytes, pos)?];
        skip_ws(bytes, pos);
        let op = match bytes.get(*pos) {
            Some(b'&') => b'&',
            Some(b'|') => b'|',
            _ => {
                return Err(TermError::Syntax {
                    pos: *pos,
                    msg: "expected '&' or '|'".to_string(),
                })
            }
        };
        while bytes.get(*pos) == Some(&op) {
            *pos += 1;
            args.push(parse_at(bytes, pos)?);
            skip_ws(bytes, pos);
        }
        match bytes.get(*pos) {
            Some(b')') => {
                *pos += 1;
            }
            Some(b'&') | Some(b'|') => {
                return Err(TermError::Syntax {
                    pos: *pos,
                    msg: "mixed operators in one group".to_string(),
                })
            }
            _ => {
                return Err(TermError::Syntax {
                    pos: *pos,
                    msg: "expected ')'".to_string(),
                })
            }
        }
        Ok(if op == b'&' { meet(args) } else { join(args) })
    } else {
        let start = *pos;
        let first = bytes[*pos];
        if !(first.is_ascii_alphabetic() || first == b'_') {
            return Err(TermError::Syntax {
                pos: *pos,
                msg: "expected a variable or '('".to_string(),
            });
        }
        while *pos < bytes.len()
            && (bytes[*pos].is_ascii_alphanumeric() || bytes[*pos] == b'_')
        {
            *pos += 1;
        }
        Ok(var(std::str::from_utf8(&bytes[start..*pos]).unwrap()))
    }
}

/// Canonical rendering; inverse of [`parse_term`] on canonical terms.
pub fn format_term(p: &LatTerm) -> String {
    match p {
        LatTerm::Variable(v) => v.clone(),
        LatTerm::Meet(xs) => group(xs, " & "),
        LatTerm::Join(xs) => group(xs, " | "),
    }
}

fn group(xs: &[LatTerm], sep: &str) -> String {
    let parts: Vec<String> = xs.iter().map(format_term).collect();
    format!("({})", parts.join(sep))
}

/// Whitman's decision procedure for `p <= q` in the free lattice over the
/// occurring variables. Memoized per call on structurally hashed pairs.
pub fn free_leq(p: &LatTerm, q: &LatTerm) -> bool {
    let mut memo = HashMap::new();
    whitman(p, q, &mut memo)
}

fn whitman(
    p: &LatTerm,
    q: &LatTerm,
    memo: &mut HashMap<(LatTerm, LatTerm), bool>,
) -> bool {
    let key = (p.clone(), q.clone());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let result = match (p, q) {
        (LatTerm::Variable(a), LatTerm::Variable(b)) => a == b,
        (LatTerm::Join(ps), _) => ps.iter().all(|pi| whitman(pi, q, memo)),
        (_, LatTerm::Meet(qs)) => qs.iter().all(|qj| whitman(p, qj, memo)),
        (LatTerm::Variable(_), LatTerm::Join(qs)) => {
            qs.iter().any(|qj| whitman(p, qj, memo))
        }
        (LatTerm::Meet(ps), LatTerm::Variable(_)) => {
            ps.iter().any(|pi| whitman(pi, q, memo))
        }
        (LatTerm::Meet(ps), LatTerm::Join(qs)) => {
            ps.iter().any(|pi| whitman(pi, q, memo))
                || qs.iter().any(|qj| whitman(p, qj, memo))
        }
    };
    memo.insert(key, result);
    result
}

/// Homomorphic evaluation of a term in a finite lattice.
pub fn eval_term(
    p: &LatTerm,
    l: &FiniteLattice,
    assignment: &HashMap<String, usize>,
) -> Result<usize, TermError> {
    match p {
        LatTerm::Variable(v) => {
            assignment
                .get(v)
                .copied()
                .ok_or_else(|| TermError::UnboundVariable { name: v.clone() })
        }
        LatTerm::Meet(xs) => {
            let mut acc = l.top();
            for x in xs {
                acc = l.meet(acc, eval_term(x, l, assignment)?);
            }
            Ok(acc)
        }
        LatTerm::Join(xs) => {
            let mut acc = l.bottom();
            for x in xs {
                acc = l.join(acc, eval_term(x, l, assignment)?);
            }
            Ok(acc)
        }
    }
}

/// All canonical terms over the first `k` of the variables x, y, z with
/// nesting depth at most `depth`, sorted. Desk scale only: the count explodes
/// combinatorially, so intermediate argument pools are capped.
pub fn enumerate_terms(k: usize, depth: usize) -> Vec<LatTerm> {
    assert!((1..=3).contains(&k), "supported variable counts are 1..=3");
    assert!(depth <= 4, "supported depths are 0..=4");
    let vars: Vec<LatTerm> = ["x", "y", "z"][..k].iter().map(|v| var(*v)).collect();
    // meets[d] / joins[d]: canonical terms of that shape with depth <= d.
    let mut meets: Vec<LatTerm> = Vec::new();
    let mut joins: Vec<LatTerm> = Vec::new();
    for _ in 0..depth {
        let meet_pool: Vec<LatTerm> =
            vars.iter().chain(joins.iter()).cloned().collect();
        let join_pool: Vec<LatTerm> =
            vars.iter().chain(meets.iter()).cloned().collect();
        assert!(
            meet_pool.len() <= 20 && join_pool.len() <= 20,
            "term enumeration explodes past this depth/variable count"
        );
        let mut next_meets = subsets_as(&meet_pool, true);
        let mut next_joins = subsets_as(&join_pool, false);
        next_meets.sort();
        next_joins.sort();
        meets = next_meets;
        joins = next_joins;
    }
    let mut out = vars;
    out.extend(meets);
    out.extend(joins);
    out.sort();
    out.dedup();
    out
}

/// Canonical meets (or joins) over all argument subsets of size >= 2.
fn subsets_as(pool: &[LatTerm], is_meet: bool) -> Vec<LatTerm> {
    let n = pool.len();
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        if mask.count_ones() < 2 {
            continue;
        }
        let args: Vec<LatTerm> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| pool[i].clone())
            .collect();
        out.push(if is_meet { meet(args) } else { join(args) });
    }
    out.sort();
    out.dedup();
    out
}

/// The substituted hypothesis pair of the pure-meet extraction: the left side
/// U(x)∧V(y) and the right side R with its j-th variable replaced by
/// U_j(x)∧V_j(y). The two variable families are made disjoint by tagging the
/// U-side with `x:` and the V-side with `y:`. R must use variables r0..r{n-1}.
pub fn pure_meet_hypothesis(
    u: &LatTerm,
    v: &LatTerm,
    u_list: &[LatTerm],
    v_list: &[LatTerm],
    r: &LatTerm,
) -> Result<(LatTerm, LatTerm), TermError> {
    assert_eq!(
        u_list.len(),
        v_list.len(),
        "U and V substitution lists must have equal length"
    );
    let lhs = meet(vec![tag(u, "x:"), tag(v, "y:")]);
    let rhs = subst_r(r, u_list, v_list)?;
    Ok((lhs, rhs))
}

fn tag(p: &LatTerm, prefix: &str) -> LatTerm {
    match p {
        LatTerm::Variable(w) => var(format!("{prefix}{w}")),
        LatTerm::Meet(xs) => meet(xs.iter().map(|x| tag(x, prefix)).collect()),
        LatTerm::Join(xs) => join(xs.iter().map(|x| tag(x, prefix)).collect()),
    }
}

fn subst_r(
    r: &LatTerm,
    u_list: &[LatTerm],
    v_list: &[LatTerm],
) -> Result<LatTerm, TermError> {
    match r {
        LatTerm::Variable(name) => {
            let j = r_index(name, u_list.len())?;
            Ok(meet(vec![tag(&u_list[j], "x:"), tag(&v_list[j], "y:")]))
        }
        LatTerm::Meet(xs) => {
            let parts = xs
                .iter()
                .map(|x| subst_r(x, u_list, v_list))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(meet(parts))
        }
        LatTerm::Join(xs) => {
            let parts = xs
                .iter()
                .map(|x| subst_r(x, u_list, v_list))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(join(parts))
        }
    }
}

fn r_index(name: &str, n: usize) -> Result<usize, TermError> {
    let unbound = || TermError::UnboundVariable {
        name: name.to_string(),
    };
    let digits = name.strip_prefix('r').ok_or_else(unbound)?;
    let j: usize = digits.parse().map_err(|_| unbound())?;
    if j < n {
        Ok(j)
    } else {
        Err(unbound())
    }
}

/// Extracts a pure meet polynomial R* <= R (a meet of variables of R, or a
/// single one) such that the substituted hypothesis inequality still holds
/// with R* in place of R.
///
/// R's variables must be named r0..r{n-1} with n = `u_list.len()`. Errors
/// with `HypothesisFails` if the precondition inequality is refuted, and
/// `InternalCaseExhaustion` if the join case offers no branch (provably
/// impossible; a bug signal).
pub fn pure_meet_extract(
    u: &LatTerm,
    v: &LatTerm,
    u_list: &[LatTerm],
    v_list: &[LatTerm],
    r: &LatTerm,
) -> Result<LatTerm, TermError> {
    let (lhs, rhs) = pure_meet_hypothesis(u, v, u_list, v_list, r)?;
    if !free_leq(&lhs, &rhs) {
        return Err(TermError::HypothesisFails);
    }
    let u_tagged = tag(u, "x:");
    let v_tagged = tag(v, "y:");
    extract(&lhs, &u_tagged, &v_tagged, u_list, v_list, r)
}

fn extract(
    lhs: &LatTerm,
    u_tagged: &LatTerm,
    v_tagged: &LatTerm,
    u_list: &[LatTerm],
    v_list: &[LatTerm],
    r: &LatTerm,
) -> Result<LatTerm, TermError> {
    match r {
        LatTerm::Variable(_) => Ok(r.clone()),
        LatTerm::Meet(rs) => {
            // lhs <= subst(meet(rs)) descends to every component.
            let parts = rs
                .iter()
                .map(|ri| extract(lhs, u_tagged, v_tagged, u_list, v_list, ri))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(meet(parts))
        }
        LatTerm::Join(rs) => {
            let whole = subst_r(r, u_list, v_list)?;
            // The one-sided comparisons can never hold: substituting bottom
            // for the other side's variables would refute them. Seeing one
            // hold means the decision procedure or the extraction is broken.
            if free_leq(u_tagged, &whole) || free_leq(v_tagged, &whole) {
                return Err(TermError::InternalCaseExhaustion);
            }
            for branch in rs {
                let sub = subst_r(branch, u_list, v_list)?;
                if free_leq(lhs, &sub) {
                    return extract(lhs, u_tagged, v_tagged, u_list, v_list, branch);
                }
            }
            Err(TermError::InternalCaseExhaustion)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{chain, m3};

    fn t(s: &str) -> LatTerm {
        parse_term(s).unwrap()
    }

    #[test]
    fn parse_basic_forms() {
        assert_eq!(t("(x & y)"), meet(vec![var("x"), var("y")]));
        assert_eq!(
            t("((x & y) | z)"),
            join(vec![meet(vec![var("x"), var("y")]), var("z")])
        );
    }

    #[test]
    fn mixed_operators_are_rejected() {
        let err = parse_term("(x & y | z)").unwrap_err();
        assert!(matches!(err, TermError::Syntax { .. }));
    }

    #[test]
    fn constructors_flatten_dedupe_sort_collapse() {
        let nested = meet(vec![meet(vec![var("y"), var("x")]), var("x")]);
        assert_eq!(nested, meet(vec![var("x"), var("y")]));
        assert_eq!(meet(vec![var("x"), var("x")]), var("x"));
        assert_eq!(join(vec![var("y"), var("x")]), join(vec![var("x"), var("y")]));
    }

    #[test]
    fn format_parse_round_trip() {
        for s in ["x", "(x & y)", "((x & y) | z)", "(x | y | z)"] {
            let p = t(s);
            assert_eq!(parse_term(&format_term(&p)).unwrap(), p);
        }
    }

    #[test]
    fn dual_swaps_and_is_involutive() {
        assert_eq!(dual_term(&var("x")), var("x"));
        assert_eq!(
            dual_term(&meet(vec![var("x"), var("y")])),
            join(vec![var("x"), var("y")])
        );
        let p = t("((x & y) | (x & z) | y)");
        assert_eq!(dual_term(&dual_term(&p)), p);
    }

    #[test]
    fn whitman_basic_inequalities() {
        assert!(free_leq(&var("x"), &t("(x | y)")));
        assert!(free_leq(&t("(x & y)"), &var("x")));
        assert!(!free_leq(&var("x"), &var("y")));
        assert!(free_leq(&t("(x & y)"), &t("(x | y)")));
    }

    #[test]
    fn distributive_inequality_fails_in_free_lattice() {
        let lhs = t("(x & (y | z))");
        let rhs = t("((x & y) | (x & z))");
        assert!(!free_leq(&lhs, &rhs));
        assert!(free_leq(&rhs, &lhs));
    }

    #[test]
    fn distributive_refutation_witnessed_in_m3() {
        let l = m3();
        let lhs = t("(x & (y | z))");
        let rhs = t("((x & y) | (x & z))");
        let assign: HashMap<String, usize> =
            [("x", 1), ("y", 2), ("z", 3)]
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect();
        let lv = eval_term(&lhs, &l, &assign).unwrap();
        let rv = eval_term(&rhs, &l, &assign).unwrap();
        assert_eq!(lv, 1);
        assert_eq!(rv, l.bottom());
        assert!(!l.leq(lv, rv));
    }

    #[test]
    fn eval_in_chain() {
        let l = chain(3);
        let assign: HashMap<String, usize> = [("x".to_string(), 1), ("y".to_string(), 2)]
            .into_iter()
            .collect();
        assert_eq!(eval_term(&t("(x | y)"), &l, &assign).unwrap(), 2);
        assert_eq!(eval_term(&t("(x & y)"), &l, &assign).unwrap(), 1);
        assert!(matches!(
            eval_term(&var("w"), &l, &assign),
            Err(TermError::UnboundVariable { .. })
        ));
    }

    #[test]
    fn enumerate_one_variable_collapses() {
        for depth in 0..=3 {
            assert_eq!(enumerate_terms(1, depth), vec![var("x")]);
        }
    }

    #[test]
    fn enumerate_two_variables_depth_one() {
        let terms = enumerate_terms(2, 1);
        assert_eq!(
            terms,
            vec![
                var("x"),
                var("y"),
                meet(vec![var("x"), var("y")]),
                join(vec![var("x"), var("y")]),
            ]
        );
    }

    #[test]
    fn enumerate_depth_two_counts() {
        // Hand count over {x, y}: the two variables, x&y and x|y at depth 1,
        // then meets over subsets of {x, y, (x|y)} give three new terms and
        // joins dually three more. Depth 3 adds 53 meets and 53 joins.
        let terms = enumerate_terms(2, 2);
        let target = join(vec![var("x"), meet(vec![var("x"), var("y")])]);
        assert!(terms.contains(&target));
        assert_eq!(terms.len(), 10);
        assert_eq!(enumerate_terms(2, 3).len(), 116);
    }

    #[test]
    fn extract_variable_case() {
        let x = var("x");
        let r = var("r0");
        let got = pure_meet_extract(&x, &x, &[x.clone()], &[x.clone()], &r).unwrap();
        assert_eq!(got, r);
    }

    #[test]
    fn extract_meet_case() {
        let x = var("x");
        let r = meet(vec![var("r0"), var("r1")]);
        let lists = [x.clone(), x.clone()];
        let got = pure_meet_extract(&x, &x, &lists, &lists, &r).unwrap();
        assert_eq!(got, meet(vec![var("r0"), var("r1")]));
    }

    #[test]
    fn extract_join_tie_collapses_to_variable() {
        // Join[r0, r0] canonicalizes to r0 before the extraction even runs.
        let x = var("x");
        let r = join(vec![var("r0"), var("r0")]);
        assert_eq!(r, var("r0"));
        let got = pure_meet_extract(&x, &x, &[x.clone()], &[x.clone()], &r).unwrap();
        assert_eq!(got, var("r0"));
    }

    #[test]
    fn extract_join_picks_first_valid_branch() {
        // lhs <= subst(r0) and <= subst(r1); the leftmost branch wins.
        let x = var("x");
        let u = meet(vec![var("x"), var("y")]);
        let u_list = [var("x"), var("y")];
        let v_list = [var("x"), var("x")];
        let r = join(vec![var("r0"), var("r1")]);
        let got = pure_meet_extract(&u, &x, &u_list, &v_list, &r).unwrap();
        assert_eq!(got, var("r0"));
    }

    #[test]
    fn extract_rejects_false_hypothesis() {
        let x = var("x");
        let y = var("y");
        // x(x) ∧ x(y) <= y(x) ∧ x(y) fails on the x side.
        let err = pure_meet_extract(&x, &x, &[y.clone()], &[x.clone()], &var("r0"))
            .unwrap_err();
        assert_eq!(err, TermError::HypothesisFails);
    }

    #[test]
    fn extract_output_is_pure_meet_and_below_r() {
        // U = U_0 ∧ U_1 and V = V_0 ∧ V_1 make the hypothesis hold for any R.
        let u_list = [var("x"), meet(vec![var("x"), var("y")])];
        let v_list = [join(vec![var("x"), var("y")]), var("y")];
        let u = meet(u_list.to_vec());
        let v = meet(v_list.to_vec());
        for r in enumerate_terms(2, 2) {
            let r = rename_to_r(&r);
            let star = pure_meet_extract(&u, &v, &u_list, &v_list, &r).unwrap();
            assert!(is_pure_meet(&star), "not a pure meet: {star:?}");
            assert!(free_leq(&star, &r));
            let (lhs, rhs_star) =
                pure_meet_hypothesis(&u, &v, &u_list, &v_list, &star).unwrap();
            assert!(free_leq(&lhs, &rhs_star));
        }
    }

    fn rename_to_r(p: &LatTerm) -> LatTerm {
        let map: HashMap<String, LatTerm> =
            [("x".to_string(), var("r0")), ("y".to_string(), var("r1"))]
                .into_iter()
                .collect();
        substitute(p, &map)
    }

    fn is_pure_meet(p: &LatTerm) -> bool {
        match p {
            LatTerm::Variable(_) => true,
            LatTerm::Meet(xs) => xs.iter().all(|x| matches!(x, LatTerm::Variable(_))),
            LatTerm::Join(_) => false,
        }
    }

    fn arb_term() -> impl proptest::strategy::Strategy<Value = LatTerm> {
        use proptest::prelude::*;
        let leaf = prop_oneof![Just(var("x")), Just(var("y")), Just(var("z"))];
        leaf.prop_recursive(3, 24, 3, |inner| {
            prop_oneof![
                proptest::collection::vec(inner.clone(), 2..4).prop_map(meet),
                proptest::collection::vec(inner, 2..4).prop_map(join),
            ]
        })
    }

    proptest::proptest! {
        #[test]
        fn prop_free_leq_reflexive(p in arb_term()) {
            proptest::prop_assert!(free_leq(&p, &p));
        }

        #[test]
        fn prop_free_leq_transitive(p in arb_term(), q in arb_term(), r in arb_term()) {
            if free_leq(&p, &q) && free_leq(&q, &r) {
                proptest::prop_assert!(free_leq(&p, &r));
            }
        }

        #[test]
        fn prop_meet_join_bound(p in arb_term(), q in arb_term()) {
            let m = meet(vec![p.clone(), q.clone()]);
            let j = join(vec![p.clone(), q.clone()]);
            proptest::prop_assert!(free_leq(&m, &p));
            proptest::prop_assert!(free_leq(&m, &q));
            proptest::prop_assert!(free_leq(&p, &j));
            proptest::prop_assert!(free_leq(&q, &j));
            proptest::prop_assert!(free_leq(&m, &j));
        }

        #[test]
        fn prop_dual_is_antitone_involution(p in arb_term(), q in arb_term()) {
            proptest::prop_assert_eq!(dual_term(&dual_term(&p)), p.clone());
            if free_leq(&p, &q) {
                proptest::prop_assert!(free_leq(&dual_term(&q), &dual_term(&p)));
            }
        }

        #[test]
        fn prop_format_parse_round_trip(p in arb_term()) {
            proptest::prop_assert_eq!(parse_term(&format_term(&p)).unwrap(), p);
        }
    }

    #[test]
    fn soundness_sample() {
        // free_leq(P, Q) must imply eval(P) <= eval(Q) everywhere.
        let terms = enumerate_terms(2, 2);
        let l = m3();
        for p in &terms {
            for q in &terms {
                if !free_leq(p, q) {
                    continue;
                }
                for a in 0..l.size() {
                    for b in 0..l.size() {
                        let assign: HashMap<String, usize> =
                            [("x".to_string(), a), ("y".to_string(), b)]
                                .into_iter()
                                .collect();
                        let pv = eval_term(p, &l, &assign).unwrap();
                        let qv = eval_term(q, &l, &assign).unwrap();
                        assert!(l.leq(pv, qv), "{p:?} <= {q:?} but eval fails");
                    }
                }
            }
        }
    }
}
