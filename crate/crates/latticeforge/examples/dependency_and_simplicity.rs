//! Structural probes: join dependency, minimal covers, the terminating
//! dependency condition, simplicity, and the scan tying them together.

use latticeforge::{
    boolean, dpt_holds, is_amenable_finite, is_simple, join_dependency, m3,
    minimal_join_covers, n5, no_simple_amenable_scan, satisfies_t_join,
};

fn main() {
    let l = n5();

    // The join-dependency relation D on join-irreducibles.
    println!("join dependency in N5:");
    for (p, q) in join_dependency(&l) {
        println!("  {} D {}", l.name(p), l.name(q));
    }

    // Minimal join covers witness each dependency.
    for &p in &l.join_irreducibles() {
        let covers = minimal_join_covers(&l, p).unwrap();
        let shown: Vec<String> = covers
            .iter()
            .map(|c| {
                let parts: Vec<String> = c.cover.iter().map(|&x| l.name(x)).collect();
                format!("{{{}}}", parts.join(", "))
            })
            .collect();
        println!("minimal covers of {}: {}", l.name(p), shown.join(" "));
    }

    // N5 has no D-cycle; M3 has one, printed as a closed walk.
    println!("\nT_join in N5: {}", satisfies_t_join(&n5()).holds());
    let verdict = satisfies_t_join(&m3());
    let cycle: Vec<String> = verdict.cycle().unwrap().iter().map(|&p| m3().name(p)).collect();
    println!("T_join in M3: false, cycle {}", cycle.join(" D "));

    // Simplicity: M3 is simple, N5 and boolean(2) are not.
    for (label, l) in [("M3", m3()), ("N5", n5()), ("boolean(2)", boolean(2))] {
        println!("{label} simple: {}", is_simple(&l).unwrap());
    }

    // The dependency-path condition and amenability agree on these.
    for (label, l) in [("M3", m3()), ("N5", n5())] {
        println!(
            "{label}: dpt={}, amenable={}",
            dpt_holds(&l).holds(),
            is_amenable_finite(&l)
        );
    }

    // No lattice through size 6 is both simple and amenable.
    let scan = no_simple_amenable_scan(6).unwrap();
    println!("\nscan through size {}:", scan.max_size);
    for row in &scan.rows {
        println!(
            "  size {}: {} lattices, {} simple, {} with T_join",
            row.size, row.lattices, row.simple, row.t_join
        );
    }
    println!("total checked: {}", scan.total_checked());
}
