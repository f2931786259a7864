//! Tensor elements as antitone maps: pure tensors, joins, meets, cappings.

use latticeforge::{capping_of, chain, m3, n5, pure_tensor, tensor_join, tensor_lattice, tensor_meet};

fn main() {
    let a = m3();
    let b = n5();

    // A pure tensor p (x) q sends each s <= p to everything under q.
    let p = a.element_by_name("p").unwrap();
    let q = b.element_by_name("c").unwrap();
    let pq = pure_tensor(&a, &b, p, q);
    println!("pure tensor p (x) c over M3 x N5:");
    for s in 0..a.size() {
        println!("  {} -> {}", a.name(s), b.name(pq.value(s)));
    }

    // Joins need bi-ideal closure; meets are pointwise.
    let r = a.element_by_name("r").unwrap();
    let top_b = b.top();
    let rt = pure_tensor(&a, &b, r, top_b);
    let joined = tensor_join(&pq, &rt);
    let met = tensor_meet(&joined, &pure_tensor(&a, &b, a.top(), q));
    println!("\n(p (x) c) v (r (x) 1) at each argument:");
    for s in 0..a.size() {
        println!("  {} -> {}", a.name(s), b.name(joined.value(s)));
    }
    println!("meet with 1 (x) c at bottom argument: {}", b.name(met.value(a.bottom())));

    // A capping is the antichain of maximal pairs; it regenerates the
    // bi-ideal exactly.
    let cap = capping_of(&joined);
    println!("\ncapping of the join: {:?}", cap.pairs);
    assert_eq!(cap.regenerate(&a, &b), joined.raw());

    // Full tensor lattices at desk scale.
    for (la, lb, label) in [
        (chain(2), chain(2), "chain(2) x chain(2)"),
        (chain(3), chain(3), "chain(3) x chain(3)"),
        (m3(), n5(), "M3 x N5"),
    ] {
        let t = tensor_lattice(&la, &lb).unwrap();
        println!("{label}: {} elements", t.lattice.size());
    }
}
