//! Grafting trees on the graph side.
//!
//! Leaf-root composition plugs the root of `S` into leaf `q` of `T` by
//! composing `ξ_S ⊗ ξ_T` with a composition graph `X_l ⊗ X_k → X_{l+k−1}`.
//! Node replacement substitutes `S` for node `p` of `T` by composing
//! `1 ⊗ ⋯ ⊗ ξ_S ⊗ ⋯ ⊗ 1` with `ξ_T`.

use crate::error::{Error, Result};
use crate::graph::KmGraph;
use crate::shape::Shape;

/// Grafting a root of arity `l` onto leaf `q` of a tree with `k` leaves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CompositionGraphSpec {
    pub l: usize,
    pub k: usize,
    pub q: usize,
}

impl CompositionGraphSpec {
    pub fn new(l: usize, k: usize, q: usize) -> Result<CompositionGraphSpec> {
        if q == 0 || q > k {
            return Err(Error::PositionOutOfRange {
                position: q,
                max: k,
            });
        }
        Ok(CompositionGraphSpec { l, k, q })
    }

    pub fn output_arity(&self) -> usize {
        self.l + self.k - 1
    }
}

/// Which tree's nodes come first in a leaf-root composite.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum NodeOrder {
    /// Nodes of the grafted tree `S` first, then those of `T`.
    #[default]
    GraftedFirst,
    /// Nodes of `T` first, realized with `ξ_T ⊗ ξ_S`.
    BaseFirst,
}

/// The composition graph `X_l ⊗ X_k → X_{l+k−1}`. With domain variables
/// `A_1..A_l, A, B_1..B_k, B` and codomain `C_1..C_{l+k−1}, C`:
/// `A ↔ B_q`, `B ↔ C`, `A_i ↔ C_{q+i−1}`, `B_i ↔ C_i` for `i < q` and
/// `B_i ↔ C_{l+i−1}` for `i > q`.
pub fn leaf_root_graph(spec: CompositionGraphSpec) -> KmGraph {
    let CompositionGraphSpec { l, k, q } = spec;
    let n = spec.output_arity();
    let a = |i: usize| i - 1;
    let a_out = l;
    let b = |i: usize| l + 1 + i - 1;
    let b_out = l + 1 + k;
    let nd = l + k + 2;
    let c = |i: usize| nd + i - 1;
    let c_out = nd + n;

    let mut pairs = vec![(a_out, b(q)), (b_out, c_out)];
    pairs.extend((1..=l).map(|i| (a(i), c(q + i - 1))));
    pairs.extend((1..q).map(|i| (b(i), c(i))));
    pairs.extend((q + 1..=k).map(|i| (b(i), c(l + i - 1))));

    let mut mate = vec![0; c_out + 1];
    for (x, y) in pairs {
        mate[x] = y;
        mate[y] = x;
    }
    KmGraph::from_mates_unchecked(
        Shape::x_node(l).tensor(&Shape::x_node(k)),
        Shape::x_node(n),
        mate,
    )
}

fn check_loops(loops: crate::graph::LoopCount) -> Result<()> {
    if loops.is_zero() {
        Ok(())
    } else {
        Err(Error::ClosedLoops(loops.0))
    }
}

fn leaf_arity(g: &KmGraph, name: &str) -> Result<usize> {
    g.cod()
        .as_x_node()
        .ok_or_else(|| Error::ShapeMismatch(format!("codomain of {name} is {}, not X_l", g.cod())))
}

/// Grafts the root of the tree of `xi_s` onto leaf `q` of the tree of `xi_t`.
pub fn leaf_root(xi_s: &KmGraph, xi_t: &KmGraph, q: usize, order: NodeOrder) -> Result<KmGraph> {
    let l = leaf_arity(xi_s, "S")?;
    let k = leaf_arity(xi_t, "T")?;
    let spec = CompositionGraphSpec::new(l, k, q)?;
    let side_by_side = match order {
        NodeOrder::GraftedFirst => xi_s.tensor(xi_t),
        NodeOrder::BaseFirst => {
            let swap = KmGraph::symmetry(xi_t.cod(), xi_s.cod());
            let (g, loops) = xi_t.tensor(xi_s).then(&swap)?;
            check_loops(loops)?;
            g
        }
    };
    let (g, loops) = side_by_side.then(&leaf_root_graph(spec))?;
    check_loops(loops)?;
    Ok(g)
}

/// Substitutes the tree of `xi_s` for node `p` of the tree of `xi_t`:
/// `ξ_T ∘ (1 ⊗ ⋯ ⊗ ξ_S ⊗ ⋯ ⊗ 1)` with `ξ_S` in factor `p`.
pub fn node_replace(xi_s: &KmGraph, xi_t: &KmGraph, p: usize) -> Result<KmGraph> {
    let factors = xi_t.dom().factors();
    if p == 0 || p > factors.len() {
        return Err(Error::PositionOutOfRange {
            position: p,
            max: factors.len(),
        });
    }
    if xi_s.cod() != &factors[p - 1] {
        return Err(Error::ShapeMismatch(format!(
            "S has codomain {} but node {p} of T has shape {}",
            xi_s.cod(),
            factors[p - 1]
        )));
    }
    let before = KmGraph::identity(&Shape::tensor_all(factors[..p - 1].iter().cloned()));
    let after = KmGraph::identity(&Shape::tensor_all(factors[p..].iter().cloned()));
    let (g, loops) = before.tensor(xi_s).tensor(&after).then(xi_t)?;
    check_loops(loops)?;
    Ok(g)
}
