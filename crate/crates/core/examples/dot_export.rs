//! Graphviz output for graphs.
//!
//! ```text
//! cargo run --example dot_export > tree.dot && dot -Tsvg tree.dot > tree.svg
//! ```

use kmtree::tree::encode;
use kmtree::Tree;

fn main() {
    let t: Tree = "node#2(node#1(leaf, leaf, leaf), leaf) | rho=[1,3,4,2]"
        .parse()
        .unwrap();
    print!("{}", encode(&t).to_dot());
}
