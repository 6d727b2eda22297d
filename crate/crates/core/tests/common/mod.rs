//! Oracles shared by the integration tests. Nothing here calls into the
//! tree module's own bijection or enumeration code.
#![allow(dead_code)]

use std::collections::HashMap;

use kmtree::shape::{twisted_sum, Shape, ShapeExpr, Sign};
use kmtree::tree::Planar;
use kmtree::{KmGraph, Term, Tree};
use rand::Rng;

/// Arity lists with `k ≤ 3`, `m_i ≤ 3`, plus `k = 4` with `m_i ≤ 2`, keeping
/// only those with a non-negative leaf count.
pub fn desk_family() -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut frontier = vec![vec![]];
    for k in 1..=4 {
        let max = if k == 4 { 2 } else { 3 };
        let mut next = Vec::new();
        for base in &frontier {
            for m in 0..=3 {
                let mut a: Vec<usize> = base.clone();
                a.push(m);
                next.push(a);
            }
        }
        for a in &next {
            if a.iter().all(|&m| m <= max) && a.iter().sum::<usize>() + 1 >= a.len() {
                out.push(a.clone());
            }
        }
        frontier = next;
    }
    out
}

pub fn tree_shape(arities: &[usize]) -> (Shape, Shape) {
    let l = arities.iter().sum::<usize>() + 1 - arities.len();
    let x = |m: usize| Shape::hom(Shape::units(m), Shape::Unit);
    (Shape::tensor_all(arities.iter().map(|&m| x(m))), x(l))
}

/// Calls `f` on every variance-respecting pairing of `dom → cod`.
pub fn for_each_pairing(dom: &Shape, cod: &Shape, mut f: impl FnMut(KmGraph)) {
    let signs = twisted_sum(dom, cod).signs.0;
    let plus: Vec<usize> = (0..signs.len())
        .filter(|&i| signs[i] == Sign::Plus)
        .collect();
    let mut minus: Vec<usize> = (0..signs.len())
        .filter(|&i| signs[i] == Sign::Minus)
        .collect();
    assert_eq!(plus.len(), minus.len());
    loop {
        let mut mate = vec![0; signs.len()];
        for (&a, &b) in plus.iter().zip(&minus) {
            mate[a] = b;
            mate[b] = a;
        }
        f(KmGraph::from_mates(dom.clone(), cod.clone(), mate).expect("opposite signs"));
        if !next_permutation(&mut minus) {
            break;
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Whether a tree-shaped pairing has a node whose output eventually feeds
/// back into itself. Reads the mate vector directly.
pub fn has_node_cycle(g: &KmGraph, arities: &[usize]) -> bool {
    let mut owner = Vec::new();
    let mut outputs = Vec::new();
    for (i, &m) in arities.iter().enumerate() {
        owner.extend(std::iter::repeat_n(Some(i), m));
        outputs.push(owner.len());
        owner.push(None);
    }
    let parent: Vec<Option<usize>> = outputs
        .iter()
        .map(|&o| {
            g.mates()
                .get(o)
                .and_then(|&y| owner.get(y).copied().flatten())
        })
        .collect();
    (0..arities.len()).any(|start| {
        let mut x = start;
        for _ in 0..arities.len() {
            match parent[x] {
                Some(p) => x = p,
                None => return false,
            }
        }
        true
    })
}

/// Every planar tree on the node set `mask` (bit `i` is node `i + 1`).
fn planar_on(mask: u32, arities: &[usize], memo: &mut HashMap<u32, Vec<Planar>>) -> Vec<Planar> {
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let mut out = Vec::new();
    for r in 0..arities.len() {
        if mask & (1 << r) == 0 {
            continue;
        }
        for children in fill(arities[r], mask & !(1 << r), arities, memo) {
            out.push(Planar::node(r + 1, children));
        }
    }
    memo.insert(mask, out.clone());
    out
}

fn fill(
    slots: usize,
    rest: u32,
    arities: &[usize],
    memo: &mut HashMap<u32, Vec<Planar>>,
) -> Vec<Vec<Planar>> {
    if slots == 0 {
        return if rest == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for tail in fill(slots - 1, rest, arities, memo) {
        let mut v = vec![Planar::Leaf];
        v.extend(tail);
        out.push(v);
    }
    let mut sub = rest;
    while sub != 0 {
        for head in planar_on(sub, arities, memo) {
            for tail in fill(slots - 1, rest & !sub, arities, memo) {
                let mut v = vec![head.clone()];
                v.extend(tail);
                out.push(v);
            }
        }
        sub = (sub - 1) & rest;
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut v: Vec<usize> = (1..=n).collect();
    let mut out = vec![v.clone()];
    while next_permutation(&mut v) {
        out.push(v.clone());
    }
    out
}

/// All combed trees with the given node arities, built top-down.
pub fn trees_by_recursion(arities: &[usize]) -> Vec<Tree> {
    let k = arities.len();
    if k == 0 {
        return vec![Tree::null()];
    }
    let Some(l) = (arities.iter().sum::<usize>() + 1).checked_sub(k) else {
        return vec![];
    };
    let planars = planar_on((1u32 << k) - 1, arities, &mut HashMap::new());
    let rhos = permutations(l);
    let mut out = Vec::with_capacity(planars.len() * rhos.len());
    for p in &planars {
        for rho in &rhos {
            out.push(Tree::new(p.clone(), rho.clone()).unwrap());
        }
    }
    out
}

/// A tree whose leaves carry their leaf numbers.
#[derive(Clone)]
enum Numbered {
    Leaf(usize),
    Node(usize, Vec<Numbered>),
}

fn numbered(t: &Tree) -> Numbered {
    fn go(p: &Planar, rho: &[usize], next: &mut usize) -> Numbered {
        match p {
            Planar::Leaf => {
                *next += 1;
                Numbered::Leaf(rho[*next - 1])
            }
            Planar::Node { label, children } => {
                Numbered::Node(*label, children.iter().map(|c| go(c, rho, next)).collect())
            }
        }
    }
    go(t.root(), t.rho(), &mut 0)
}

fn flatten(n: &Numbered) -> Tree {
    fn go(n: &Numbered, rho: &mut Vec<usize>) -> Planar {
        match n {
            Numbered::Leaf(p) => {
                rho.push(*p);
                Planar::Leaf
            }
            Numbered::Node(label, children) => {
                Planar::node(*label, children.iter().map(|c| go(c, rho)).collect())
            }
        }
    }
    let mut rho = Vec::new();
    let root = go(n, &mut rho);
    Tree::new(root, rho).unwrap()
}

/// Rewrites labels with `node` and leaves with `leaf`.
fn map(
    n: &Numbered,
    node: &impl Fn(usize) -> usize,
    leaf: &mut impl FnMut(usize) -> Numbered,
) -> Numbered {
    match n {
        Numbered::Leaf(p) => leaf(*p),
        Numbered::Node(label, children) => Numbered::Node(
            node(*label),
            children.iter().map(|c| map(c, node, leaf)).collect(),
        ),
    }
}

/// Root of `s` on the leaf numbered `q` of `t`. With `s_first`, nodes of
/// `s` keep their labels and those of `t` follow; otherwise the reverse.
pub fn graft(s: &Tree, t: &Tree, q: usize, s_first: bool) -> Tree {
    let (ks, kt) = (s.node_count(), t.node_count());
    let ls = s.leaf_count();
    let (s_shift, t_shift) = if s_first { (0, ks) } else { (kt, 0) };
    let s_moved = map(&numbered(s), &|x| x + s_shift, &mut |j| {
        Numbered::Leaf(q + j - 1)
    });
    let grafted = map(&numbered(t), &|x| x + t_shift, &mut |n| {
        if n == q {
            s_moved.clone()
        } else if n < q {
            Numbered::Leaf(n)
        } else {
            Numbered::Leaf(ls + n - 1)
        }
    });
    flatten(&grafted)
}

/// `s` substituted for node `p` of `t`: the leaf of `s` numbered `j`
/// becomes the `j`-th input subtree of node `p`.
pub fn substitute(s: &Tree, t: &Tree, p: usize) -> Tree {
    let ks = s.node_count();
    let s_tree = numbered(s);
    fn walk(n: &Numbered, p: usize, ks: usize, s: &Numbered) -> Numbered {
        match n {
            Numbered::Leaf(x) => Numbered::Leaf(*x),
            Numbered::Node(x, children) => {
                let inputs: Vec<Numbered> = children.iter().map(|c| walk(c, p, ks, s)).collect();
                if *x == p {
                    map(s, &|y| y + p - 1, &mut |j| inputs[j - 1].clone())
                } else {
                    Numbered::Node(if *x < p { *x } else { x + ks - 1 }, inputs)
                }
            }
        }
    }
    flatten(&walk(&numbered(t), p, ks, &s_tree))
}

/// Evaluates a tensor of terms factor by factor, evaluating each distinct
/// factor once.
pub fn eval_tensor_memo(term: &Term, cache: &mut HashMap<Term, KmGraph>) -> KmGraph {
    match term {
        Term::Tensor(a, b) => eval_tensor_memo(a, cache).tensor(&eval_tensor_memo(b, cache)),
        other => cache
            .entry(other.clone())
            .or_insert_with(|| other.eval().expect("allowable factor"))
            .clone(),
    }
}

pub fn shape_expr<R: Rng + ?Sized>(rng: &mut R, depth: usize) -> ShapeExpr {
    if depth == 0 {
        return if rng.gen_bool(0.8) {
            ShapeExpr::One
        } else {
            ShapeExpr::I
        };
    }
    match rng.gen_range(0..6) {
        0 => ShapeExpr::One,
        1 => ShapeExpr::I,
        2 | 3 => ShapeExpr::tensor(shape_expr(rng, depth - 1), shape_expr(rng, depth - 1)),
        _ => ShapeExpr::hom(shape_expr(rng, depth - 1), shape_expr(rng, depth - 1)),
    }
}

/// Trees with at most two nodes, each of arity at most two.
pub fn small_trees() -> Vec<Tree> {
    let mut out = Vec::new();
    let mut lists: Vec<Vec<usize>> = vec![vec![]];
    for a in 0..=2 {
        lists.push(vec![a]);
        for b in 0..=2 {
            lists.push(vec![a, b]);
        }
    }
    for a in lists {
        out.extend(trees_by_recursion(&a));
    }
    out
}
