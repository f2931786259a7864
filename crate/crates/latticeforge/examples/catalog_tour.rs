//! Tour of the built-in lattices: sizes, identities, modularity indices.

use latticeforge::{boolean, chain, interval_lattice, m3, n5, LatticeIdentity, ModularityIndex};

fn main() {
    let lattices = [
        ("chain(4)", chain(4)),
        ("boolean(2)", boolean(2)),
        ("boolean(3)", boolean(3)),
        ("M3", m3()),
        ("N5", n5()),
        ("interval(4)", interval_lattice(4)),
    ];

    println!("{:<14} {:>5} {:>4} {:>8} {:>13} {:>5}", "lattice", "size", "ji", "modular", "distributive", "h");
    for (label, l) in &lattices {
        let modular = l.check_identity(LatticeIdentity::Modular).holds();
        let distributive = l.check_identity(LatticeIdentity::Distributive).holds();
        let h = match l.h_modularity_index(16) {
            ModularityIndex::Reached(h) => h.to_string(),
            ModularityIndex::NotReached { cutoff } => format!(">{cutoff}"),
        };
        println!(
            "{:<14} {:>5} {:>4} {:>8} {:>13} {:>5}",
            label,
            l.size(),
            l.join_irreducibles().len(),
            modular,
            distributive,
            h
        );
    }

    // N5 is the standard non-modular witness; the failing triple is printed.
    let l = n5();
    if let latticeforge::IdentityVerdict::Fails([x, y, z]) = l.check_identity(LatticeIdentity::Modular) {
        println!(
            "\nN5 modularity fails at ({}, {}, {})",
            l.name(x),
            l.name(y),
            l.name(z)
        );
    }

    // Named access round-trips.
    let l = m3();
    let p = l.element_by_name("p").unwrap();
    let q = l.element_by_name("q").unwrap();
    println!("M3: p v q = {}, p ^ q = {}", l.name(l.join(p, q)), l.name(l.meet(p, q)));
}
