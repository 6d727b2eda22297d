//! Trees as bijections from node inputs and the root onto node outputs and
//! leaves, and the index cycles that stop a bijection from being a tree.
//!
//! ```text
//! cargo run --example tree_bijection
//! ```

use kmtree::tree::{detect_cycles, from_alpha, to_alpha, AlphaBijection, Port};
use kmtree::Tree;

fn main() {
    let t: Tree = "node#2(node#1(leaf, leaf, leaf), leaf) | rho=[1,3,4,2]"
        .parse()
        .unwrap();
    let alpha = to_alpha(&t);
    println!("{t}\n{alpha}\n");
    assert_eq!(from_alpha(&alpha).unwrap(), t);

    // plug node 1 into node 2 and node 2 into node 1
    use Port::{Leaf, Out};
    let looped = AlphaBijection::new(
        vec![vec![Out(2), Leaf(3), Leaf(4)], vec![Out(1), Leaf(2)]],
        Leaf(1),
    )
    .unwrap();
    let report = detect_cycles(&looped);
    println!("{looped}\n{report}");
    for c in &report.cycles {
        println!("  nodes {:?} through inputs {:?}", c.nodes, c.inputs);
    }
    println!("{}", from_alpha(&looped).unwrap_err());

    println!("\nnull tree: {}", to_alpha(&Tree::null()));
}
