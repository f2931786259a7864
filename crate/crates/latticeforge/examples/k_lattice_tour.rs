//! The infinite lattice K: exact arithmetic on its elements, the triple
//! iteration, the 2-modularity check, and finite truncations.

use latticeforge::{
    k_check_2modular, k_elements, k_iterate, k_join, k_meet, k_truncation, KElem,
};

fn main() {
    // Elements parse from a compact syntax and print back canonically.
    let samples = ["0", "c", "a0", "b3", "a2+c", "b0+c", "a4+b4"];
    for s in samples {
        let e: KElem = s.parse().unwrap();
        println!("{s:>6}  parses to {e:?}, prints as {e}");
    }

    // Joins of chain elements collapse toward the pattern a{n}+b{n}.
    let a0: KElem = "a0".parse().unwrap();
    let b2: KElem = "b2".parse().unwrap();
    let c: KElem = "c".parse().unwrap();
    let b0: KElem = "b0".parse().unwrap();
    println!("\na0 v b2 = {}", k_join(a0, b2));
    println!("a0 v c  = {}", k_join(a0, c));
    println!("a0 ^ b2 = {}", k_meet(a0, b2));
    println!("(a0+c) ^ (b0+c) = {}", k_meet(k_join(a0, c), k_join(b0, c)));

    // The triple step drives joins of meets; iterating it can keep moving.
    let u = [c, a0, "b0+c".parse().unwrap()];
    for k in 0..=3 {
        let v = k_iterate(u, k);
        println!("step^{k} of (c, a0, b0+c) = ({}, {}, {})", v[0], v[1], v[2]);
    }

    // Two steps always suffice, and some triple needs both.
    let report = k_check_2modular(3).unwrap();
    println!(
        "\n2-modularity through index {}: {} triples checked",
        report.max_index, report.triples_checked
    );
    let [x, y, z] = report.nonmodular_witness.unwrap();
    println!("a witness needing the second step: ({x}, {y}, {z})");

    // Finite truncations keep all joins of K exactly.
    for n in 1..=4 {
        let t = k_truncation(n).unwrap();
        println!("truncation at index {n}: {} elements", t.lattice.size());
        assert_eq!(t.lattice.size(), k_elements(n).len());
    }
    let t = k_truncation(2).unwrap();
    let i = t.index_of("a1+c".parse().unwrap()).unwrap();
    let j = t.index_of("b1+c".parse().unwrap()).unwrap();
    println!(
        "inside the truncation: (a1+c) v (b1+c) = {}",
        t.lattice.name(t.lattice.join(i, j))
    );
}
