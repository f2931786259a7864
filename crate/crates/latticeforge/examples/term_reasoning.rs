//! Free-lattice terms: parsing, the word problem, duality, evaluation.

use latticeforge::{dual_term, enumerate_terms, eval_term, format_term, free_leq, m3, parse_term};
use std::collections::HashMap;

fn main() {
    // The word problem for free lattices decides u <= v structurally.
    let checks = [
        ("(x & (y | z))", "((x & y) | (x & z))", false),
        ("((x & y) | (x & z))", "(x & (y | z))", true),
        ("(x & (y | (x & z)))", "x", true),
        ("x", "(x | (y & z))", true),
        ("(x | y)", "(y | x)", true),
    ];
    for (u, v, expect) in checks {
        let pu = parse_term(u).unwrap();
        let pv = parse_term(v).unwrap();
        let got = free_leq(&pu, &pv);
        assert_eq!(got, expect);
        println!("{:<24} <= {:<24} : {}", u, v, got);
    }

    // Duality swaps joins and meets and reverses every inequality:
    // from (x & y) | (x & z) <= x & (y | z) we get the dual inequality
    // x | (y & z) <= (x | y) & (x | z).
    let u = parse_term("(x & (y | z))").unwrap();
    let d = dual_term(&u);
    println!("\ndual of {} is {}", format_term(&u), format_term(&d));
    assert!(free_leq(&d, &dual_term(&parse_term("((x & y) | (x & z))").unwrap())));

    // Free-lattice inequalities that fail can still hold in a particular
    // lattice: M3 is modular, so evaluate the modular law there.
    let l = m3();
    let lhs = parse_term("(x & (y | (x & z)))").unwrap();
    let rhs = parse_term("((x & y) | (x & z))").unwrap();
    println!(
        "\nfree_leq says {} <= {} : {}",
        format_term(&lhs),
        format_term(&rhs),
        free_leq(&lhs, &rhs)
    );
    let mut all_hold = true;
    for x in 0..l.size() {
        for y in 0..l.size() {
            for z in 0..l.size() {
                let env: HashMap<String, usize> =
                    [("x".into(), x), ("y".into(), y), ("z".into(), z)].into();
                let a = eval_term(&lhs, &l, &env).unwrap();
                let b = eval_term(&rhs, &l, &env).unwrap();
                all_hold &= l.leq(a, b);
            }
        }
    }
    println!("in M3 the inequality holds under every assignment: {all_hold}");

    // Term counts modulo free-lattice equivalence grow quickly with depth.
    for depth in 1..=3 {
        let terms = enumerate_terms(2, depth);
        println!("distinct 2-variable terms at depth {depth}: {}", terms.len());
    }
}
