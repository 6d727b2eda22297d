//! Building graphs from generators, composing them and counting loops.
//!
//! ```text
//! cargo run --example graph_calculus
//! ```

use kmtree::{KmGraph, Shape, VariableRef};

fn main() {
    let one = Shape::unit();
    let i = Shape::i();

    // d followed by e is the identity on 1*1
    let two = Shape::units(2);
    let d = KmGraph::coevaluation(&one, &one).tensor(&KmGraph::identity(&one));
    let e = KmGraph::evaluation(&one, &two);
    println!("d(1,1) * id(1):\n{d}\n");
    let (triangle, loops) = d.then(&e).unwrap();
    println!("then e(1,1*1):\n{triangle}\nloops: {loops}\n");
    assert_eq!(triangle, KmGraph::identity(&two));

    // a cup followed by a cap leaves nothing but a closed loop
    let cup = KmGraph::coevaluation(&i, &one);
    let cap = KmGraph::from_pairs(
        Shape::x_node(1),
        i.clone(),
        [(VariableRef::dom(0), VariableRef::dom(1))],
    )
    .unwrap();
    let (empty, loops) = cup.then(&cap).unwrap();
    println!("cup then cap: {loops} loop(s), leaving\n{empty}\n");

    // currying only moves the boundary
    let c = KmGraph::symmetry(&one, &one);
    let curried = c.curry(&one).unwrap();
    println!("c(1,1) curried:\n{curried}\n");
    assert_eq!(curried.uncurry().unwrap(), c);
    println!("dual:\n{}", c.dual());
}
