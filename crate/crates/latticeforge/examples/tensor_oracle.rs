//! Cross-check the map-form tensor lattice against the raw bi-ideal search.

use latticeforge::{are_isomorphic, boolean, brute_force_biideals, chain, m3, n5, tensor_lattice};

fn main() {
    let pairs = [
        ("chain(2) x chain(2)", chain(2), chain(2)),
        ("chain(3) x chain(3)", chain(3), chain(3)),
        ("boolean(2) x boolean(2)", boolean(2), boolean(2)),
        ("M3 x chain(3)", m3(), chain(3)),
        ("N5 x N5", n5(), n5()),
    ];

    println!("{:<24} {:>8} {:>8} {:>12}", "product", "map", "raw", "isomorphic");
    for (label, la, lb) in &pairs {
        // Map form: antitone maps generated from pure tensors by joins.
        let fast = tensor_lattice(la, lb).unwrap();
        // Oracle: every hereditary, laterally closed subset of A x B,
        // found by closing antichains of the product order.
        let slow = brute_force_biideals(la, lb).unwrap();
        let iso = are_isomorphic(&fast.lattice, &slow.lattice).is_some();
        println!(
            "{:<24} {:>8} {:>8} {:>12}",
            label,
            fast.lattice.size(),
            slow.lattice.size(),
            iso
        );
        assert_eq!(fast.lattice.size(), slow.lattice.size());
        assert!(iso);

        // Each map element's raw set must appear among the oracle's sets.
        for e in &fast.elements {
            assert!(slow.elements.contains(&e.raw()));
        }
    }
    println!("\nmap form and raw search agree on every product above");

    // Symmetry: A (x) B and B (x) A are isomorphic lattices.
    let (a, b) = (m3(), n5());
    let ab = tensor_lattice(&a, &b).unwrap();
    let ba = tensor_lattice(&b, &a).unwrap();
    println!(
        "M3 x N5 has {} elements; N5 x M3 has {}; isomorphic: {}",
        ab.lattice.size(),
        ba.lattice.size(),
        are_isomorphic(&ab.lattice, &ba.lattice).is_some()
    );
}
