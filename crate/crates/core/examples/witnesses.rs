//! For a pairing with an index cycle, an allowable morphism that closes a
//! loop against it, which shows the pairing is not allowable.
//!
//! ```text
//! cargo run --example witnesses
//! ```

use kmtree::certify::{decide, theta, Decision, Witnesser};
use kmtree::tree::{alpha_to_graph, AlphaBijection, Port};

fn main() {
    for (k, p) in [(1, 1), (2, 2), (3, 1)] {
        let th = theta(k, p).unwrap();
        println!("theta k={k} p={p}: {th}\n{}\n", th.eval().unwrap());
    }

    use Port::{Leaf, Out};
    let looped = alpha_to_graph(
        &AlphaBijection::new(
            vec![vec![Out(2), Leaf(3), Leaf(4)], vec![Out(1), Leaf(2)]],
            Leaf(1),
        )
        .unwrap(),
    );
    let w = Witnesser::new().witness(&looped).unwrap();
    println!("{w}\nverified: {}\n", w.verify().unwrap());

    let self_loop = alpha_to_graph(&AlphaBijection::new(vec![vec![Out(1)]], Leaf(1)).unwrap());
    match decide(&self_loop).unwrap() {
        Decision::Allowable(c) => println!("allowable: {}", c.term),
        Decision::NotAllowable(w) => {
            println!("not allowable, eta = {}, {} loop(s)", w.eta, w.loop_count)
        }
    }
}
