//! Closure machinery over assignments into a finite lattice: the inflation
//! step, bounded closure, preimages of pure tensors, and capped verification.

use latticeforge::kclosure::step;
use latticeforge::{
    epsilon_restricted, extend_bar, gamma_capping, k_truncation, meet_star, n5,
    pure_preimage, verify_capped, AntitoneAssignment, KClosure, KElem, ModularityIndex,
};

fn main() {
    let l = n5();
    let (a, b, c) = (1, 2, 3);

    // An assignment fixes a value for c, two nondecreasing chains, and
    // their limits; entries equal to the limit are normalized away.
    let x = AntitoneAssignment::new(&l, a, vec![l.bottom()], b, Vec::new(), c);
    println!("degree {}, step-fixed: {}", x.degree(), x.is_step_fixed());

    // One step inflates every slot by the forced meets.
    let y = step(&x);
    println!(
        "after one step: c-value {} -> {}, degree {} -> {}",
        l.name(x.c_value()),
        l.name(y.c_value()),
        x.degree(),
        y.degree()
    );

    // The coordinates (a-limit, b-limit, c) step exactly like the lattice's
    // own triple iteration.
    assert_eq!(step(&x).ell(), l.triple_step(x.ell()));
    println!("limit triple commutes with the lattice triple step");

    // Closure terminates within the proved bound tied to the carrier's
    // modularity index.
    let h = match l.h_modularity_index(8) {
        ModularityIndex::Reached(h) => h,
        ModularityIndex::NotReached { cutoff } => panic!("no index within {cutoff}"),
    };
    let kc = KClosure::new(&l, h).unwrap();
    let fixed = kc.closure(&x).unwrap();
    println!("closure fixed at degree {} (h = {h})", fixed.degree());

    // Pure preimages: the least fixed assignment sending u to xi.
    let u: KElem = "a1".parse().unwrap();
    let v: KElem = "b0+c".parse().unwrap();
    let xu = pure_preimage(&l, u, c);
    let xv = pure_preimage(&l, v, b);
    let joined = kc.vee_star(&xu, &xv).unwrap();
    let met = meet_star(&xu, &xv);
    println!(
        "\npreimages of {u} and {v}: join degree {}, meet degree {}",
        joined.degree(),
        met.degree()
    );

    // A fixed assignment extends to all of K minus zero, antitonely.
    for e in ["c", "a0", "a1", "a3", "b0+c", "a2+b2"] {
        let k: KElem = e.parse().unwrap();
        println!("  join extension at {e:>6}: {}", l.name(extend_bar(&joined, k).unwrap()));
    }

    // The extension restricted to a truncation is a tensor element there.
    let t = k_truncation(joined.degree() + 2).unwrap();
    let tens = epsilon_restricted(&joined, &t).unwrap();
    println!(
        "\nrestriction to truncation {}: bi-ideal of {} pairs over {} x {} cells",
        t.max_index,
        tens.raw().len(),
        t.lattice.size(),
        l.size()
    );

    // Each value fiber has at most four maximal elements; they cap the
    // whole bi-ideal.
    let gamma = gamma_capping(&joined).unwrap();
    let shown: Vec<String> = gamma.iter().map(|(e, v)| format!("{e}:{}", l.name(*v))).collect();
    println!("fiber-maximal pairs: {}", shown.join(" "));

    // End to end: rebuild the join of pure tensors through the closure
    // system and check it against the raw bi-ideal oracle.
    let report = verify_capped(&kc, &[(u, c), (v, b)], 6).unwrap();
    println!(
        "\ncapped verification at truncation {}: degree {}, {} capping pairs, largest fiber {}, ideal size {}",
        report.truncation_index,
        report.degree,
        report.gamma.len(),
        report.largest_fiber,
        report.ideal_size
    );
}
