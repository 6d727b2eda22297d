//! Combed trees and their presentation as bijections and as graphs.
//!
//! A tree with nodes `N_1..N_k` (node `i` has `m_i` inputs) and
//! `l = Σ m_i − k + 1` leaves is the same thing as a bijection
//!
//! ```text
//! α : { in(i,j) } ⨿ { root }  →  { out(i) } ⨿ { leaf(p) }
//! ```
//!
//! with no index cycle, and the same thing as a graph
//! `X_{m_1} ⊗ ⋯ ⊗ X_{m_k} → X_l` whose pairing transports `α`.
//!
//! Node numbers, input positions and leaf numbers are 1-based throughout
//! this module, matching the way trees are usually written down.
//!
//! Combing convention: planar leaves are read left to right, and `rho`
//! maps planar position to leaf number, so the `q`-th planar leaf is
//! `leaf(rho[q])`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::KmGraph;
use crate::parse::{Cursor, ParseError};
use crate::shape::Shape;

/// A rooted planar tree whose nodes carry their position in the node order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Planar {
    Leaf,
    Node { label: usize, children: Vec<Planar> },
}

impl Planar {
    pub fn node(label: usize, children: Vec<Planar>) -> Planar {
        Planar::Node { label, children }
    }

    pub fn leaves(&self) -> usize {
        match self {
            Planar::Leaf => 1,
            Planar::Node { children, .. } => children.iter().map(Planar::leaves).sum(),
        }
    }

    pub fn nodes(&self) -> usize {
        match self {
            Planar::Leaf => 0,
            Planar::Node { children, .. } => 1 + children.iter().map(Planar::nodes).sum::<usize>(),
        }
    }

    /// Maximum number of nodes on a path from a leaf to the root.
    pub fn height(&self) -> usize {
        match self {
            Planar::Leaf => 0,
            Planar::Node { children, .. } => {
                1 + children.iter().map(Planar::height).max().unwrap_or(0)
            }
        }
    }

    fn visit_nodes<'a>(&'a self, f: &mut impl FnMut(usize, &'a [Planar])) {
        if let Planar::Node { label, children } = self {
            f(*label, children);
            children.iter().for_each(|c| c.visit_nodes(f));
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tree {
    root: Planar,
    rho: Vec<usize>,
}

impl Tree {
    /// Checks that node labels are exactly `1..=k` and that `rho` is a
    /// permutation of `1..=l`.
    pub fn new(root: Planar, rho: Vec<usize>) -> Result<Tree> {
        let k = root.nodes();
        let mut seen = vec![false; k + 1];
        let mut arity_sum = 0;
        let mut bad_label = None;
        root.visit_nodes(&mut |label, children| {
            arity_sum += children.len();
            if label == 0 || label > k || std::mem::replace(&mut seen[label], true) {
                bad_label.get_or_insert(label);
            }
        });
        if let Some(label) = bad_label {
            return Err(Error::InvalidTree(format!(
                "node labels must be 1..={k} without repeats, found {label}"
            )));
        }
        let l = root.leaves();
        if rho.len() != l {
            return Err(Error::InvalidTree(format!(
                "{l} leaves but rho has {} entries",
                rho.len()
            )));
        }
        let mut hit = vec![false; l + 1];
        for &p in &rho {
            if p == 0 || p > l || std::mem::replace(&mut hit[p], true) {
                return Err(Error::InvalidTree(format!(
                    "rho {rho:?} is not a permutation of 1..={l}"
                )));
            }
        }
        assert_eq!(l + k, arity_sum + 1, "planar leaf count identity");
        Ok(Tree { root, rho })
    }

    /// The tree with no nodes and a single edge.
    pub fn null() -> Tree {
        Tree {
            root: Planar::Leaf,
            rho: vec![1],
        }
    }

    /// One node of arity `m` with its inputs as leaves `1..=m` in order.
    pub fn corolla(m: usize) -> Tree {
        Tree {
            root: Planar::node(1, vec![Planar::Leaf; m]),
            rho: (1..=m).collect(),
        }
    }

    pub fn root(&self) -> &Planar {
        &self.root
    }

    /// `rho[q]` is the leaf number of the `q`-th planar leaf (`q` 0-based).
    pub fn rho(&self) -> &[usize] {
        &self.rho
    }

    pub fn node_count(&self) -> usize {
        self.root.nodes()
    }

    pub fn leaf_count(&self) -> usize {
        self.rho.len()
    }

    pub fn height(&self) -> usize {
        self.root.height()
    }

    /// Arity of each node, in node order.
    pub fn arities(&self) -> Vec<usize> {
        let mut out = vec![0; self.node_count()];
        self.root
            .visit_nodes(&mut |label, children| out[label - 1] = children.len());
        out
    }
}

/// A target of the bijection: a node output or a leaf.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Port {
    Out(usize),
    Leaf(usize),
}

impl fmt::Display for Port {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Port::Out(r) => write!(f, "out({r})"),
            Port::Leaf(p) => write!(f, "leaf({p})"),
        }
    }
}

/// A source of the bijection: a node input or the root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Source {
    In(usize, usize),
    Root,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::In(i, j) => write!(f, "in({i},{j})"),
            Source::Root => f.write_str("root"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlphaBijection {
    inputs: Vec<Vec<Port>>,
    root: Port,
}

impl AlphaBijection {
    /// `inputs[i-1][j-1]` is the image of `in(i,j)`.
    pub fn new(inputs: Vec<Vec<Port>>, root: Port) -> Result<AlphaBijection> {
        let k = inputs.len();
        let l = leaf_count(&inputs.iter().map(Vec::len).collect::<Vec<_>>()).ok_or_else(|| {
            Error::NotBijective(format!("{k} nodes leave a negative number of leaves"))
        })?;
        let mut outs = vec![false; k + 1];
        let mut leaves = vec![false; l + 1];
        for port in inputs.iter().flatten().chain(std::iter::once(&root)) {
            let slot = match *port {
                Port::Out(r) if (1..=k).contains(&r) => &mut outs[r],
                Port::Leaf(p) if (1..=l).contains(&p) => &mut leaves[p],
                other => return Err(Error::NotBijective(format!("{other} does not exist"))),
            };
            if std::mem::replace(slot, true) {
                return Err(Error::NotBijective(format!("{port} is hit twice")));
            }
        }
        Ok(AlphaBijection { inputs, root })
    }

    pub fn arities(&self) -> Vec<usize> {
        self.inputs.iter().map(Vec::len).collect()
    }

    pub fn node_count(&self) -> usize {
        self.inputs.len()
    }

    pub fn leaf_count(&self) -> usize {
        self.inputs.iter().map(Vec::len).sum::<usize>() + 1 - self.inputs.len()
    }

    /// Panics if the source does not exist.
    pub fn image(&self, source: Source) -> Port {
        match source {
            Source::In(i, j) => self.inputs[i - 1][j - 1],
            Source::Root => self.root,
        }
    }

    /// All assignments, inputs in order and the root last.
    pub fn assignments(&self) -> Vec<(Source, Port)> {
        let mut out: Vec<(Source, Port)> = self
            .inputs
            .iter()
            .enumerate()
            .flat_map(|(i, ports)| {
                ports
                    .iter()
                    .enumerate()
                    .map(move |(j, &p)| (Source::In(i + 1, j + 1), p))
            })
            .collect();
        out.push((Source::Root, self.root));
        out
    }
}

impl fmt::Display for AlphaBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, (s, p)) in self.assignments().into_iter().enumerate() {
            if n > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{s} -> {p}")?;
        }
        Ok(())
    }
}

/// An index cycle: `α(in(t_j, b_j)) = out(t_{j-1})` for `j ≥ 2` and
/// `α(in(t_1, b_1)) = out(t_n)`. Starts at its smallest node.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cycle {
    pub nodes: Vec<usize>,
    pub inputs: Vec<usize>,
}

impl Cycle {
    /// Replays the defining equations against `alpha`.
    pub fn holds_in(&self, alpha: &AlphaBijection) -> bool {
        let n = self.nodes.len();
        n > 0
            && self.inputs.len() == n
            && (0..n).all(|j| {
                let prev = self.nodes[(j + n - 1) % n];
                let (t, b) = (self.nodes[j], self.inputs[j]);
                (1..=alpha.node_count()).contains(&t)
                    && (1..=alpha.inputs[t - 1].len()).contains(&b)
                    && alpha.image(Source::In(t, b)) == Port::Out(prev)
            })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CycleReport {
    pub cycles: Vec<Cycle>,
}

impl CycleReport {
    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

impl fmt::Display for CycleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.cycles.iter().enumerate() {
            if n > 0 {
                f.write_str("\n")?;
            }
            f.write_str("cycle:")?;
            for t in &c.nodes {
                write!(f, " {t}")?;
            }
        }
        Ok(())
    }
}

/// `Σ m_i − k + 1`, or `None` when negative.
pub fn leaf_count(arities: &[usize]) -> Option<usize> {
    (arities.iter().sum::<usize>() + 1).checked_sub(arities.len())
}

/// All index cycles of `alpha`, found on the functional graph sending each
/// node to the node whose input its output is plugged into.
pub fn detect_cycles(alpha: &AlphaBijection) -> CycleReport {
    let k = alpha.node_count();
    // parent[r] = (i, j) when α(in(i,j)) = out(r)
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; k + 1];
    for (i, ports) in alpha.inputs.iter().enumerate() {
        for (j, port) in ports.iter().enumerate() {
            if let Port::Out(r) = *port {
                parent[r] = Some((i + 1, j + 1));
            }
        }
    }
    // 0 = unvisited, otherwise the walk that first reached the node
    let mut walk_of = vec![0usize; k + 1];
    let mut cycles = Vec::new();
    for start in 1..=k {
        if walk_of[start] != 0 {
            continue;
        }
        let mut x = start;
        loop {
            walk_of[x] = start;
            match parent[x] {
                None => break,
                Some((p, _)) if walk_of[p] == 0 => x = p,
                Some((p, _)) => {
                    if walk_of[p] == start {
                        cycles.push(cycle_through(p, &parent));
                    }
                    break;
                }
            }
        }
    }
    cycles.sort_by_key(|c| c.nodes[0]);
    CycleReport { cycles }
}

fn cycle_through(entry: usize, parent: &[Option<(usize, usize)>]) -> Cycle {
    let mut members = vec![entry];
    let mut x = parent[entry].expect("cycle member has a parent").0;
    while x != entry {
        members.push(x);
        x = parent[x].expect("cycle member has a parent").0;
    }
    let lowest = (0..members.len()).min_by_key(|&i| members[i]).unwrap();
    members.rotate_left(lowest);
    let n = members.len();
    let inputs = (0..n)
        .map(|j| {
            let prev = members[(j + n - 1) % n];
            parent[prev].expect("cycle member has a parent").1
        })
        .collect();
    Cycle {
        nodes: members,
        inputs,
    }
}

/// The bijection presenting `tree`, with node `i` the node labelled `i`.
pub fn to_alpha(tree: &Tree) -> AlphaBijection {
    let k = tree.node_count();
    let mut inputs: Vec<Vec<Port>> = vec![Vec::new(); k];
    let mut next_leaf = 0;
    fn walk(node: &Planar, rho: &[usize], next_leaf: &mut usize, inputs: &mut [Vec<Port>]) -> Port {
        match node {
            Planar::Leaf => {
                *next_leaf += 1;
                Port::Leaf(rho[*next_leaf - 1])
            }
            Planar::Node { label, children } => {
                let ports = children
                    .iter()
                    .map(|c| walk(c, rho, next_leaf, inputs))
                    .collect();
                inputs[label - 1] = ports;
                Port::Out(*label)
            }
        }
    }
    let root = walk(&tree.root, &tree.rho, &mut next_leaf, &mut inputs);
    AlphaBijection { inputs, root }
}

/// Rebuilds the tree presented by an acyclic bijection.
pub fn from_alpha(alpha: &AlphaBijection) -> Result<Tree> {
    let report = detect_cycles(alpha);
    if !report.is_empty() {
        return Err(Error::HasCycle(report));
    }
    let mut rho = Vec::with_capacity(alpha.leaf_count());
    fn build(port: Port, alpha: &AlphaBijection, rho: &mut Vec<usize>) -> Planar {
        match port {
            Port::Leaf(p) => {
                rho.push(p);
                Planar::Leaf
            }
            Port::Out(r) => Planar::node(
                r,
                alpha.inputs[r - 1]
                    .iter()
                    .map(|&p| build(p, alpha, rho))
                    .collect(),
            ),
        }
    }
    let root = build(alpha.root, alpha, &mut rho);
    Tree::new(root, rho)
}

/// Domain and codomain `X_{m_1} ⊗ ⋯ ⊗ X_{m_k} → X_l` of a tree graph.
pub fn tree_shape(arities: &[usize]) -> Option<(Shape, Shape)> {
    let l = leaf_count(arities)?;
    Some((
        Shape::tensor_all(arities.iter().map(|&m| Shape::x_node(m))),
        Shape::x_node(l),
    ))
}

/// Node arities and leaf count of a graph of tree shape.
pub fn tree_arities(g: &KmGraph) -> Result<(Vec<usize>, usize)> {
    let arities = g
        .dom()
        .factors()
        .iter()
        .map(|f| f.as_x_node())
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::WrongShape(format!("domain {} is not a tensor of X_m", g.dom())))?;
    let l = g
        .cod()
        .as_x_node()
        .ok_or_else(|| Error::WrongShape(format!("codomain {} is not X_l", g.cod())))?;
    if leaf_count(&arities) != Some(l) {
        return Err(Error::WrongShape(format!(
            "{} nodes of arities {:?} need X_{} as codomain, found X_{}",
            arities.len(),
            arities,
            arities.iter().sum::<usize>() as isize - arities.len() as isize + 1,
            l
        )));
    }
    Ok((arities, l))
}

/// Positions of the variables of `X_{m_1} ⊗ ⋯ ⊗ X_{m_k} → X_l` in a graph's
/// joint index space: `A_{ij}` and `A_i` in the domain, `B_p` and `B` after.
struct TreeLayout {
    offsets: Vec<usize>,
    arities: Vec<usize>,
    n_dom: usize,
    l: usize,
}

impl TreeLayout {
    fn new(arities: &[usize], l: usize) -> TreeLayout {
        let mut offsets = Vec::with_capacity(arities.len());
        let mut acc = 0;
        for &m in arities {
            offsets.push(acc);
            acc += m + 1;
        }
        TreeLayout {
            offsets,
            arities: arities.to_vec(),
            n_dom: acc,
            l,
        }
    }

    fn source(&self, s: Source) -> usize {
        match s {
            Source::In(i, j) => self.offsets[i - 1] + j - 1,
            Source::Root => self.n_dom + self.l,
        }
    }

    fn port(&self, p: Port) -> usize {
        match p {
            Port::Out(r) => self.offsets[r - 1] + self.arities[r - 1],
            Port::Leaf(p) => self.n_dom + p - 1,
        }
    }

    /// Inverse of [`TreeLayout::port`]; `None` on source positions.
    fn port_at(&self) -> Vec<Option<Port>> {
        let mut table = vec![None; self.n_dom + self.l + 1];
        for r in 1..=self.arities.len() {
            table[self.port(Port::Out(r))] = Some(Port::Out(r));
        }
        for p in 1..=self.l {
            table[self.port(Port::Leaf(p))] = Some(Port::Leaf(p));
        }
        table
    }
}

/// The graph transporting `alpha`: `in(i,j) ↔ A_{ij}`, `out(i) ↔ A_i`,
/// `leaf(p) ↔ B_p`, `root ↔ B`.
pub fn alpha_to_graph(alpha: &AlphaBijection) -> KmGraph {
    let arities = alpha.arities();
    let (dom, cod) = tree_shape(&arities).expect("bijection has a leaf count");
    let layout = TreeLayout::new(&arities, alpha.leaf_count());
    let mut mate = vec![0; layout.n_dom + layout.l + 1];
    for (s, p) in alpha.assignments() {
        let (a, b) = (layout.source(s), layout.port(p));
        mate[a] = b;
        mate[b] = a;
    }
    KmGraph::from_mates_unchecked(dom, cod, mate)
}

/// Reads the bijection off a graph of tree shape.
pub fn graph_to_alpha(g: &KmGraph) -> Result<AlphaBijection> {
    let (arities, l) = tree_arities(g)?;
    let layout = TreeLayout::new(&arities, l);
    let port_at = layout.port_at();
    let mates = g.mates();
    let image = |s: Source| {
        port_at[mates[layout.source(s)]]
            .ok_or_else(|| Error::NotBijective(format!("{s} is paired with another source")))
    };
    let inputs = arities
        .iter()
        .enumerate()
        .map(|(i, &m)| (1..=m).map(|j| image(Source::In(i + 1, j))).collect())
        .collect::<Result<Vec<Vec<Port>>>>()?;
    let root = image(Source::Root)?;
    Ok(AlphaBijection { inputs, root })
}

/// `ξ_T : X_{m_1} ⊗ ⋯ ⊗ X_{m_k} → X_l`.
pub fn encode(tree: &Tree) -> KmGraph {
    alpha_to_graph(&to_alpha(tree))
}

pub fn decode(g: &KmGraph) -> Result<Tree> {
    from_alpha(&graph_to_alpha(g)?)
}

/// Every combed tree whose node `i` has arity `arities[i-1]`, in the
/// derived order of [`Tree`]. Bijections are built one assignment at a time and a partial
/// assignment is abandoned as soon as it closes an index cycle.
pub fn enumerate_trees(arities: &[usize]) -> Vec<Tree> {
    let Some(l) = leaf_count(arities) else {
        return Vec::new();
    };
    let k = arities.len();
    let sources: Vec<Source> = arities
        .iter()
        .enumerate()
        .flat_map(|(i, &m)| (1..=m).map(move |j| Source::In(i + 1, j)))
        .chain(std::iter::once(Source::Root))
        .collect();
    let targets: Vec<Port> = (1..=k)
        .map(Port::Out)
        .chain((1..=l).map(Port::Leaf))
        .collect();

    struct Search<'a> {
        arities: &'a [usize],
        sources: &'a [Source],
        targets: &'a [Port],
        used: Vec<bool>,
        chosen: Vec<Port>,
        parent: Vec<Option<usize>>,
        found: BTreeSet<Tree>,
    }

    impl Search<'_> {
        fn closes_cycle(&self, child: usize, node: usize) -> bool {
            let mut x = node;
            loop {
                if x == child {
                    return true;
                }
                match self.parent[x] {
                    Some(p) => x = p,
                    None => return false,
                }
            }
        }

        fn run(&mut self, depth: usize) {
            if depth == self.sources.len() {
                let mut it = self.chosen.iter().copied();
                let inputs = self
                    .arities
                    .iter()
                    .map(|&m| it.by_ref().take(m).collect())
                    .collect();
                let root = it.next().expect("root assigned last");
                let alpha = AlphaBijection { inputs, root };
                let tree = from_alpha(&alpha).expect("search keeps bijections acyclic");
                self.found.insert(tree);
                return;
            }
            for t in 0..self.targets.len() {
                if self.used[t] {
                    continue;
                }
                let target = self.targets[t];
                let edge = match (self.sources[depth], target) {
                    (Source::In(i, _), Port::Out(r)) => {
                        if self.closes_cycle(r, i) {
                            continue;
                        }
                        Some(r)
                    }
                    _ => None,
                };
                if let (Some(r), Source::In(i, _)) = (edge, self.sources[depth]) {
                    self.parent[r] = Some(i);
                }
                self.used[t] = true;
                self.chosen.push(target);
                self.run(depth + 1);
                self.chosen.pop();
                self.used[t] = false;
                if let Some(r) = edge {
                    self.parent[r] = None;
                }
            }
        }
    }

    let mut search = Search {
        arities,
        sources: &sources,
        targets: &targets,
        used: vec![false; targets.len()],
        chosen: Vec::with_capacity(sources.len()),
        parent: vec![None; k + 1],
        found: BTreeSet::new(),
    };
    search.run(0);
    search.found.into_iter().collect()
}

impl fmt::Display for Planar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Planar::Leaf => f.write_str("leaf"),
            Planar::Node { label, children } => {
                write!(f, "node#{label}(")?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.root == Planar::Leaf {
            return f.write_str("null");
        }
        write!(f, "{} | rho=[", self.root)?;
        for (i, p) in self.rho.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

fn parse_planar(cur: &mut Cursor<'_>) -> Result<Planar, ParseError> {
    if cur.eat_word("leaf") {
        return Ok(Planar::Leaf);
    }
    if !cur.eat_word("node") {
        return Err(cur.error("expected 'node' or 'leaf'"));
    }
    cur.expect('#')?;
    let label = cur.number()?;
    cur.expect('(')?;
    let mut children = Vec::new();
    if !cur.eat(')') {
        loop {
            children.push(parse_planar(cur)?);
            if cur.eat(')') {
                break;
            }
            cur.expect(',')?;
        }
    }
    Ok(Planar::node(label, children))
}

impl FromStr for Tree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let root = if cur.eat_word("null") {
            Planar::Leaf
        } else {
            parse_planar(&mut cur)?
        };
        let rho = if cur.eat('|') {
            if !cur.eat_word("rho") {
                return Err(cur.error("expected 'rho'").into());
            }
            cur.expect('=')?;
            cur.expect('[')?;
            let mut rho = Vec::new();
            if !cur.eat(']') {
                loop {
                    rho.push(cur.number()?);
                    if cur.eat(']') {
                        break;
                    }
                    cur.expect(',')?;
                }
            }
            rho
        } else {
            (1..=root.leaves()).collect()
        };
        cur.finish()?;
        Tree::new(root, rho)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    use Port::{Leaf, Out};

    /// Node 2 (arity 2) at the root, node 1 (arity 3) on its first input.
    pub(crate) fn example_tree() -> Tree {
        "node#2(node#1(leaf,leaf,leaf), leaf) | rho=[1,3,4,2]"
            .parse()
            .unwrap()
    }

    fn example_alpha() -> AlphaBijection {
        AlphaBijection::new(
            vec![vec![Leaf(1), Leaf(3), Leaf(4)], vec![Out(1), Leaf(2)]],
            Out(2),
        )
        .unwrap()
    }

    fn looping_alpha() -> AlphaBijection {
        AlphaBijection::new(
            vec![vec![Out(2), Leaf(3), Leaf(4)], vec![Out(1), Leaf(2)]],
            Leaf(1),
        )
        .unwrap()
    }

    #[test]
    fn example_tree_bijection() {
        assert_eq!(to_alpha(&example_tree()), example_alpha());
        assert_eq!(from_alpha(&example_alpha()).unwrap(), example_tree());
        assert!(detect_cycles(&example_alpha()).is_empty());
    }

    #[test]
    fn example_tree_prints_canonically() {
        assert_eq!(
            example_tree().to_string(),
            "node#2(node#1(leaf, leaf, leaf), leaf) | rho=[1,3,4,2]"
        );
    }

    #[test]
    fn null_tree() {
        let alpha = to_alpha(&Tree::null());
        assert_eq!(alpha.assignments(), vec![(Source::Root, Leaf(1))]);
        assert_eq!(from_alpha(&alpha).unwrap(), Tree::null());
        assert_eq!(Tree::null().to_string(), "null");
        assert_eq!("null".parse::<Tree>().unwrap(), Tree::null());
        let g = encode(&Tree::null());
        assert_eq!(g.to_string(), "dom I |- cod [1,1]\np C:0 C:1");
    }

    #[test]
    fn corolla_bijection_and_graph() {
        let t = Tree::corolla(3);
        let alpha = to_alpha(&t);
        for j in 1..=3 {
            assert_eq!(alpha.image(Source::In(1, j)), Leaf(j));
        }
        assert_eq!(alpha.image(Source::Root), Out(1));
        assert_eq!(encode(&t), KmGraph::identity(&Shape::x_node(3)));
        assert_eq!(decode(&KmGraph::identity(&Shape::x_node(3))).unwrap(), t);
    }

    #[test]
    fn loop_of_two_nodes() {
        let report = detect_cycles(&looping_alpha());
        assert_eq!(
            report.cycles,
            vec![Cycle {
                nodes: vec![1, 2],
                inputs: vec![1, 1]
            }]
        );
        assert!(report.cycles[0].holds_in(&looping_alpha()));
        assert_eq!(report.to_string(), "cycle: 1 2");
        assert_eq!(from_alpha(&looping_alpha()), Err(Error::HasCycle(report)));
    }

    #[test]
    fn self_loop() {
        let alpha = AlphaBijection::new(vec![vec![Out(1)]], Leaf(1)).unwrap();
        let report = detect_cycles(&alpha);
        assert_eq!(report.cycles.len(), 1);
        assert_eq!(report.cycles[0].nodes, vec![1]);
        assert_eq!(report.cycles[0].inputs, vec![1]);
    }

    #[test]
    fn disjoint_cycles_are_all_reported() {
        // nodes 1,2 loop; node 3 loops on itself; node 4 is the root
        let alpha = AlphaBijection::new(
            vec![
                vec![Out(2), Leaf(1)],
                vec![Out(1)],
                vec![Leaf(2), Out(3)],
                vec![Leaf(3), Leaf(4)],
            ],
            Out(4),
        )
        .unwrap();
        let report = detect_cycles(&alpha);
        let nodes: Vec<_> = report.cycles.iter().map(|c| c.nodes.clone()).collect();
        assert_eq!(nodes, vec![vec![1, 2], vec![3]]);
        assert!(report.cycles.iter().all(|c| c.holds_in(&alpha)));
    }

    #[test]
    fn non_bijections_are_rejected() {
        assert!(matches!(
            AlphaBijection::new(vec![vec![Leaf(1)]], Leaf(1)),
            Err(Error::NotBijective(_))
        ));
        assert!(matches!(
            AlphaBijection::new(vec![vec![Out(2)]], Leaf(1)),
            Err(Error::NotBijective(_))
        ));
        assert!(matches!(
            AlphaBijection::new(vec![vec![], vec![]], Out(1)),
            Err(Error::NotBijective(_))
        ));
    }

    #[test]
    fn example_graph() {
        let g = encode(&example_tree());
        assert_eq!(g.dom().to_string(), "[1*1*1,1]*[1*1,1]");
        assert_eq!(g.cod().to_string(), "[1*1*1*1,1]");
        // A_11..A_13 = D:0..2, A_1 = D:3, A_21 = D:4, A_22 = D:5, A_2 = D:6,
        // B_1..B_4 = C:0..3, B = C:4
        assert_eq!(
            g.to_string(),
            "dom [1*1*1,1]*[1*1,1] |- cod [1*1*1*1,1]\n\
             p D:0 C:0\np D:1 C:2\np D:2 C:3\np D:3 D:4\np D:5 C:1\np D:6 C:4"
        );
        assert_eq!(decode(&g).unwrap(), example_tree());
    }

    #[test]
    fn looping_graph_does_not_decode() {
        let g = alpha_to_graph(&looping_alpha());
        match decode(&g) {
            Err(Error::HasCycle(r)) => assert_eq!(r.cycles[0].nodes, vec![1, 2]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn decode_rejects_wrong_shapes() {
        let g = KmGraph::identity(&Shape::Unit);
        assert!(matches!(decode(&g), Err(Error::WrongShape(_))));
        let x1 = Shape::x_node(1);
        let g = KmGraph::identity(&x1).tensor(&KmGraph::identity(&Shape::i()));
        assert!(decode(&g).is_ok());
        let g = KmGraph::symmetry(&x1, &x1);
        assert!(matches!(decode(&g), Err(Error::WrongShape(_))));
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_trees(&[]), vec![Tree::null()]);
        let chains = enumerate_trees(&[1, 1]);
        assert_eq!(chains.len(), 2);
        assert_eq!(enumerate_trees(&[2, 0, 0]).len(), 2);
        assert!(enumerate_trees(&[0, 0]).is_empty());
        for t in &chains {
            assert_eq!(t.arities(), vec![1, 1]);
        }
    }

    #[test]
    fn tree_validation() {
        let bad_labels = Planar::node(2, vec![Planar::Leaf]);
        assert!(Tree::new(bad_labels, vec![1]).is_err());
        let dup = Planar::node(1, vec![Planar::node(1, vec![])]);
        assert!(Tree::new(dup, vec![]).is_err());
        assert!(Tree::new(Planar::node(1, vec![Planar::Leaf; 2]), vec![1, 1]).is_err());
        assert!("node#1(leaf) | rho=[2]".parse::<Tree>().is_err());
        assert_eq!(
            "node#1(leaf,leaf)".parse::<Tree>().unwrap(),
            Tree::corolla(2)
        );
    }

    #[test]
    fn heights() {
        assert_eq!(Tree::null().height(), 0);
        assert_eq!(Tree::corolla(0).height(), 1);
        assert_eq!(example_tree().height(), 2);
        assert_eq!(example_tree().arities(), vec![3, 2]);
    }
}
