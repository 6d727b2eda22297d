//! Allowable terms whose graphs are exactly the graphs of given trees.
//!
//! ```text
//! cargo run --example certificates
//! ```

use kmtree::certify::{certificate, comp_graph_term};
use kmtree::composition::{leaf_root_graph, CompositionGraphSpec};
use kmtree::term::curry_term;
use kmtree::tree::enumerate_trees;
use kmtree::Tree;

fn main() {
    for t in [
        Tree::null(),
        Tree::corolla(3),
        "node#2(node#1(leaf))".parse().unwrap(),
        "node#2(node#1(leaf, leaf, leaf), leaf) | rho=[1,3,4,2]"
            .parse()
            .unwrap(),
    ] {
        let c = certificate(&t);
        println!(
            "{t}\n  term  {}\n  size  {}\n  ok    {}\n",
            c.term,
            c.term.size(),
            c.verify().unwrap()
        );
    }

    let term = comp_graph_term(2, 3, 2).unwrap();
    let spec = CompositionGraphSpec::new(2, 3, 2).unwrap();
    println!(
        "composition graph term (2,3,2) matches: {}",
        term.eval().unwrap() == leaf_root_graph(spec)
    );

    let trees = enumerate_trees(&[2, 1, 1]);
    let ok = trees
        .iter()
        .filter(|t| certificate(t).verify().unwrap())
        .count();
    println!(
        "arities (2,1,1): {ok} of {} certificates verify",
        trees.len()
    );

    // a tree is also a single allowable morphism out of I
    let t: Tree = "node#1(node#2(leaf), leaf) | rho=[2,1]".parse().unwrap();
    let c = certificate(&t);
    let point = curry_term(&c.term, c.target.dom()).unwrap();
    println!("\n{}", point.eval().unwrap());
    assert_eq!(point.eval().unwrap(), c.target.dual());
}
