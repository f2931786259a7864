//! When is a join of pure tensors just their union? Verify the value-set
//! identity for small families and inspect the witness terms.

use latticeforge::{format_term, m3, n5, tensun_verify};

fn main() {
    let a = m3();
    let b = n5();

    // Two pure tensors: the join's value pairs and the lattice terms that
    // produce them from the generators.
    let p = a.element_by_name("p").unwrap();
    let q = a.element_by_name("q").unwrap();
    let xb = b.element_by_name("b").unwrap();
    let xc = b.element_by_name("c").unwrap();

    let report = tensun_verify(&a, &b, &[(p, xb), (q, xc)], 3).unwrap();
    println!("pairs (p,b),(q,c) in M3 x N5:");
    println!("  union equals join: {}", report.equal);
    println!("  stabilized after {} rounds", report.rounds);
    println!("  union laterally closed: {}", report.lateral_closed);
    println!("  value pairs with producing terms:");
    for w in &report.value_pairs {
        println!(
            "    ({}, {})  via {}",
            a.name(w.a),
            b.name(w.b),
            format_term(&w.term)
        );
    }

    // Three generators still stabilize at small depth.
    let r = a.element_by_name("r").unwrap();
    let top_b = b.top();
    let report = tensun_verify(&a, &b, &[(p, xb), (q, xc), (r, top_b)], 4).unwrap();
    println!(
        "\npairs (p,b),(q,c),(r,1): equal={}, rounds={}, {} value pairs",
        report.equal,
        report.rounds,
        report.value_pairs.len()
    );
    assert!(report.equal);
}
