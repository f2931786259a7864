//! Pure-meet extraction: given U(x) ^ V(y) <= R(.., Uj(x) ^ Vj(y), ..),
//! recover a meet of R's variables that already suffices on the right.

use latticeforge::{format_term, free_leq, parse_term, pure_meet_extract, pure_meet_hypothesis, TermError};

fn main() {
    // R is a join, yet the hypothesis forces one of its branches alone.
    let u = parse_term("(x0 & x1)").unwrap();
    let v = parse_term("y0").unwrap();
    let u_list = [parse_term("x0").unwrap(), parse_term("x1").unwrap()];
    let v_list = [parse_term("y0").unwrap(), parse_term("y0").unwrap()];
    let r = parse_term("(r0 | r1)").unwrap();

    let (lhs, rhs) = pure_meet_hypothesis(&u, &v, &u_list, &v_list, &r).unwrap();
    println!("hypothesis: {} <= {}", format_term(&lhs), format_term(&rhs));
    assert!(free_leq(&lhs, &rhs));

    let r_star = pure_meet_extract(&u, &v, &u_list, &v_list, &r).unwrap();
    println!("extracted R* = {}", format_term(&r_star));
    assert!(free_leq(&r_star, &r), "R* lies below R in the free lattice");

    // The substituted inequality still holds with R* in place of R.
    let (lhs2, rhs2) = pure_meet_hypothesis(&u, &v, &u_list, &v_list, &r_star).unwrap();
    println!("strengthened: {} <= {} : {}", format_term(&lhs2), format_term(&rhs2), free_leq(&lhs2, &rhs2));
    assert!(free_leq(&lhs2, &rhs2));

    // A deeper R: the extraction digs through nested joins and meets.
    let r = parse_term("((r0 | r1) & (r1 | (r0 & r1)))").unwrap();
    let r_star = pure_meet_extract(&u, &v, &u_list, &v_list, &r).unwrap();
    println!("\nfor R = {}: R* = {}", format_term(&r), format_term(&r_star));
    assert!(free_leq(&r_star, &r));

    // If the hypothesis inequality is false, extraction reports it.
    let bad_u_list = [parse_term("x1").unwrap()];
    let bad_v_list = [parse_term("y0").unwrap()];
    let single = parse_term("r0").unwrap();
    let u0 = parse_term("x0").unwrap();
    match pure_meet_extract(&u0, &v, &bad_u_list, &bad_v_list, &single) {
        Err(TermError::HypothesisFails) => println!("\nfalse hypothesis rejected as expected"),
        other => panic!("expected HypothesisFails, got {other:?}"),
    }
}
