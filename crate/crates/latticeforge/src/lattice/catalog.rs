//! Standard small lattices used throughout the tests and examples.

use super::FiniteLattice;

/// The n-element chain 0 < 1 < ... < n-1.
pub fn chain(n: usize) -> FiniteLattice {
    assert!(n >= 1, "a chain needs at least one element");
    let covers: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    FiniteLattice::from_covers(n, &covers, None).unwrap()
}

/// The boolean lattice of subsets of a k-element set; 2^k elements, ordered
/// by the bitmask subset relation.
pub fn boolean(k: usize) -> FiniteLattice {
    assert!(k <= 16, "boolean lattice exponent too large");
    let size = 1usize << k;
    let mut covers = Vec::new();
    for x in 0..size {
        for bit in 0..k {
            if x & (1 << bit) == 0 {
                covers.push((x, x | (1 << bit)));
            }
        }
    }
    FiniteLattice::from_covers(size, &covers, None).unwrap()
}

/// The diamond: bottom, three atoms p, q, r, top. Modular, not distributive.
pub fn m3() -> FiniteLattice {
    FiniteLattice::from_covers(
        5,
        &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        Some(vec![
            "0".into(),
            "p".into(),
            "q".into(),
            "r".into(),
            "1".into(),
        ]),
    )
    .unwrap()
}

/// The pentagon {0, a, b, c, 1} with a < c and b incomparable to both.
/// Not modular.
pub fn n5() -> FiniteLattice {
    FiniteLattice::from_covers(
        5,
        &[(0, 1), (0, 2), (1, 3), (3, 4), (2, 4)],
        Some(vec![
            "0".into(),
            "a".into(),
            "b".into(),
            "c".into(),
            "1".into(),
        ]),
    )
    .unwrap()
}

/// The lattice of subintervals of the chain 0..n-1, including the empty
/// interval, ordered by containment: 1 + n(n+1)/2 elements.
pub fn interval_lattice(n: usize) -> FiniteLattice {
    assert!(n >= 1, "interval lattice needs a nonempty chain");
    // Element 0 is the empty interval; then [i, j] for 0 <= i <= j < n in
    // lexicographic order.
    let mut index = vec![vec![usize::MAX; n]; n];
    let mut names = vec!["empty".to_string()];
    let mut next = 1usize;
    for i in 0..n {
        for j in i..n {
            index[i][j] = next;
            names.push(format!("{i}..{j}"));
            next += 1;
        }
    }
    let size = next;
    let mut covers = Vec::new();
    for i in 0..n {
        covers.push((0, index[i][i]));
        for j in i..n {
            if i > 0 {
                covers.push((index[i][j], index[i - 1][j]));
            }
            if j + 1 < n {
                covers.push((index[i][j], index[i][j + 1]));
            }
        }
    }
    FiniteLattice::from_covers(size, &covers, Some(names)).unwrap()
}
