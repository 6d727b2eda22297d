//! Grafting one tree onto a leaf of another, and substituting a tree for a
//! node, both carried out on graphs.
//!
//! ```text
//! cargo run --example tree_composition
//! ```

use kmtree::composition::{
    leaf_root, leaf_root_graph, node_replace, CompositionGraphSpec, NodeOrder,
};
use kmtree::tree::{decode, encode};
use kmtree::Tree;

fn main() {
    let spec = CompositionGraphSpec::new(2, 2, 2).unwrap();
    println!(
        "composition graph l=2 k=2 q=2:\n{}\n",
        leaf_root_graph(spec)
    );

    let s: Tree = "node#1(leaf, leaf) | rho=[2,1]".parse().unwrap();
    let t: Tree = "node#2(node#1(leaf, leaf, leaf), leaf) | rho=[1,3,4,2]"
        .parse()
        .unwrap();
    for q in 1..=t.leaf_count() {
        let g = leaf_root(&encode(&s), &encode(&t), q, NodeOrder::GraftedFirst).unwrap();
        let h = leaf_root(&encode(&s), &encode(&t), q, NodeOrder::BaseFirst).unwrap();
        println!("S on leaf {q} of T: {}", decode(&g).unwrap());
        println!("            T first: {}", decode(&h).unwrap());
    }

    // node 2 of T has two inputs, so S (two leaves) can replace it
    let g = node_replace(&encode(&s), &encode(&t), 2).unwrap();
    println!("\nS for node 2 of T: {}", decode(&g).unwrap());

    // two grafts onto different leaves of the same base, done in either
    // order: the graphs differ only by a swap of tensor factors, the
    // ordered trees do not agree
    let (a, b, base) = (
        encode(&Tree::corolla(1)),
        encode(&Tree::corolla(0)),
        encode(&Tree::corolla(2)),
    );
    let o = NodeOrder::GraftedFirst;
    let ab = leaf_root(&b, &leaf_root(&a, &base, 1, o).unwrap(), 2, o).unwrap();
    let ba = leaf_root(&a, &leaf_root(&b, &base, 2, o).unwrap(), 1, o).unwrap();
    println!("\na on leaf 1, then b on leaf 2: {}", decode(&ab).unwrap());
    println!("b on leaf 2, then a on leaf 1: {}", decode(&ba).unwrap());
}
