//! Interval lattices of a finite chain: structure, congruences, and the
//! simplicity profile over atom pairs.

use latticeforge::{
    interval_lattice, interval_lattice_simplicity_profile, is_simple,
    principal_congruence, LatticeIdentity,
};

fn main() {
    // Elements are the nonempty subintervals of the chain 0..n-1, plus a
    // least element for the empty interval.
    for n in 3..=6 {
        let l = interval_lattice(n);
        println!(
            "n={n}: size {}, join-semidistributive: {}, simple: {}",
            l.size(),
            l.check_identity(LatticeIdentity::JoinSemidistributive).holds(),
            is_simple(&l).unwrap()
        );
    }

    // Collapsing the bottom with a single atom can force a large collapse.
    // Atoms with a margin on both sides always generate the same principal
    // congruence; extreme atoms may differ.
    let n = 5;
    let l = interval_lattice(n);
    let profile = interval_lattice_simplicity_profile(n);
    println!("\natom-pair congruence comparison for n={n}:");
    for pair in &profile.atom_pairs {
        println!(
            "  atoms {} and {}: margin={}, same congruence={}",
            pair.u, pair.v, pair.margin, pair.equal
        );
    }

    // The congruences behind one margin pair, spelled out.
    let bottom = l.bottom();
    let atom = |u: usize| l.element_by_name(&format!("{u}..{u}")).unwrap();
    let t1 = principal_congruence(&l, bottom, atom(1));
    let t2 = principal_congruence(&l, bottom, atom(2));
    println!(
        "\ncollapsing 0 with [1,1]: {} classes, full={}; with [2,2]: {} classes, full={}",
        t1.class_count(), t1.is_full(), t2.class_count(), t2.is_full()
    );
    assert_eq!(t1, t2);
    assert!(profile.join_semidistributive);
}
