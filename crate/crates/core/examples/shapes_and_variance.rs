//! Shapes, their normal forms and variances.
//!
//! ```text
//! cargo run --example shapes_and_variance
//! ```

use kmtree::shape::{normalize, twisted_sum, ShapeExpr};
use kmtree::Shape;

fn main() {
    let expr: ShapeExpr = "((1 * I) * [1 * (1 * 1), I]) * 1".parse().unwrap();
    let shape = normalize(&expr);
    println!("{expr}  normalizes to  {shape}");

    let s: Shape = "[[1,1]*1*1,I]*1".parse().unwrap();
    println!("v({s}) = {}", s.variance());

    for m in 0..4 {
        let x = Shape::x_node(m);
        println!("X_{m} = {x}, variance {}", x.variance());
    }

    let dom: Shape = "[1*1,1]*[1,1]".parse().unwrap();
    let cod = Shape::x_node(2);
    let sum = twisted_sum(&dom, &cod);
    println!("twisted sum of {dom} -> {cod}:");
    for (v, sign) in sum.refs.iter().zip(&sum.signs.0) {
        println!("  {v} {sign}");
    }
}
