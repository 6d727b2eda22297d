//! Allowable terms: parsing, typing, evaluation, and composites that never
//! close a loop.
//!
//! ```text
//! cargo run --example allowable_terms
//! ```

use kmtree::term::{curry_term, permutation_term};
use kmtree::{Shape, Term};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let t: Term = "((d(1,1) * id(1)) ; e(1,1*1))".parse().unwrap();
    let (dom, cod) = t.signature().unwrap();
    println!("{t} : {dom} -> {cod}");
    println!("{}\n", t.eval().unwrap());

    let ill: Term = "(c(1,1) ; e(1,1))".parse().unwrap();
    println!("{ill}: {}\n", ill.signature().unwrap_err());

    let factors = [Shape::x_node(0), Shape::x_node(1), Shape::x_node(2)];
    let p = permutation_term(&[2, 0, 1], &factors).unwrap();
    println!("permutation [2,0,1]: {p}");

    let f = Term::E(Shape::unit(), Shape::unit());
    let back = curry_term(&f, &Shape::unit()).unwrap();
    println!("curry of e(1,1): {back}");
    let id = Term::Id(Shape::x_node(1));
    println!(
        "same graph as {id}: {}\n",
        back.eval().unwrap() == id.eval().unwrap()
    );

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..5 {
        let (f, g) = kmtree::gen::composable_pair(&mut rng, 3);
        let (_, loops) = f.eval().unwrap().then(&g.eval().unwrap()).unwrap();
        println!("{f}\n  then {g}\n  loops: {loops}");
    }
}
