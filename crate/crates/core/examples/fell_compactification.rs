//! Limits of sequences and the Fell compactification of a finite space.
//!
//! cargo run --example fell_compactification

use specrank::fell::{fell_compactification, is_fell_convergent, limits_and_accumulation, separate, SequenceClass};
use specrank::topology::FiniteSpace;

fn main() {
    let s = FiniteSpace::sierpinski();
    println!("points {:?}", s.names());

    for q in SequenceClass::all(&s).expect("small space") {
        let (l, a) = limits_and_accumulation(&q);
        println!(
            "visits {:?}: limits {:?}, accumulation {:?}, Fell-convergent {}",
            s.names_of(q.visits()),
            s.names_of(&l),
            s.names_of(&a),
            is_fell_convergent(&q).is_some()
        );
    }

    let phi = fell_compactification(&s).expect("small space");
    println!("compactification {:?}", phi.named(&s));
    let m = phi.members();
    if let Ok(Some((u, v))) = separate(&s, &m[0], &m[1]) {
        println!("separated by {u:?} and {v:?}");
    }
}
