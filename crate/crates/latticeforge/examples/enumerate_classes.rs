//! Enumerate all lattices up to isomorphism and inspect the small classes.

use latticeforge::{are_isomorphic, boolean, enumerate_lattices, format_lattice, m3, n5};

fn main() {
    // One representative per isomorphism class, for each size.
    for n in 1..=7 {
        let classes = enumerate_lattices(n).unwrap();
        println!("lattices of size {n}: {}", classes.len());
    }

    // The five classes of size 5, in canonical text form.
    println!("\nall size-5 lattices:");
    for l in enumerate_lattices(5).unwrap() {
        println!("{}", format_lattice(&l));
    }

    // M3 and N5 each appear exactly once among the size-5 classes.
    let classes = enumerate_lattices(5).unwrap();
    let hits_m3 = classes.iter().filter(|l| are_isomorphic(l, &m3()).is_some()).count();
    let hits_n5 = classes.iter().filter(|l| are_isomorphic(l, &n5()).is_some()).count();
    println!("classes isomorphic to M3: {hits_m3}, to N5: {hits_n5}");

    // An isomorphism is returned as an explicit index map.
    let b2 = boolean(2);
    let diamond = enumerate_lattices(4)
        .unwrap()
        .into_iter()
        .find(|l| are_isomorphic(l, &b2).is_some())
        .unwrap();
    let map = are_isomorphic(&diamond, &b2).unwrap();
    println!("boolean(2) representative found, index map {map:?}");
}
