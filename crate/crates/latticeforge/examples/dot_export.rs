//! Render order diagrams as Graphviz DOT: covers become edges, bottom at
//! the bottom (rankdir=BT).

use latticeforge::cli::render_dot;
use latticeforge::{k_truncation, m3, parse_lattice};

fn main() {
    // Any finite lattice renders; node labels are element names.
    println!("{}", render_dot(&m3()));

    // Lattices read from the text format render the same way.
    let hexagon = "\
lattice 6
names 0 u v w x 1
cover 0 1
cover 0 2
cover 1 3
cover 2 4
cover 3 5
cover 4 5
";
    let l = parse_lattice(hexagon).unwrap();
    println!("{}", render_dot(&l));

    // Truncations of K carry their canonical element names into the diagram.
    let t = k_truncation(1).unwrap();
    print!("{}", render_dot(&t.lattice));
}
