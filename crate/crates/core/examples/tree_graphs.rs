//! Encoding trees as graphs `X_{m_1} ⊗ ⋯ ⊗ X_{m_k} → X_l`, decoding them
//! back, and listing every tree with given node arities.
//!
//! ```text
//! cargo run --example tree_graphs
//! ```

use kmtree::tree::{decode, encode, enumerate_trees};
use kmtree::Tree;

fn main() {
    let t: Tree = "node#2(node#1(leaf, leaf, leaf), leaf) | rho=[1,3,4,2]"
        .parse()
        .unwrap();
    let g = encode(&t);
    println!("{t}\n{g}\n");
    assert_eq!(decode(&g).unwrap(), t);

    println!("null tree:\n{}\n", encode(&Tree::null()));

    for arities in [vec![1, 1], vec![2, 0, 0], vec![2, 1]] {
        let trees = enumerate_trees(&arities);
        println!("arities {arities:?}: {} trees", trees.len());
        for t in trees.iter().take(6) {
            println!("  {t}");
        }
    }

    // different trees always give different graphs
    let trees = enumerate_trees(&[2, 2, 1]);
    let graphs: std::collections::HashSet<_> = trees.iter().map(encode).collect();
    println!(
        "\n(2,2,1): {} trees, {} distinct graphs",
        trees.len(),
        graphs.len()
    );
}
