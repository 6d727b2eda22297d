//! Deciding allowability of tree-shaped graphs, with evidence either way.
//!
//! An acyclic pairing gets a [`Certificate`]: an allowable term evaluating
//! to the graph. A cyclic one gets a [`Witness`]: an allowable `η` whose
//! composite with the graph closes a loop, which no allowable graph can do.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use crate::composition::CompositionGraphSpec;
use crate::error::{Error, Result};
use crate::graph::{KmGraph, LoopCount};
use crate::shape::Shape;
use crate::term::{curry_term, permutation_term, Term};
use crate::tree::{detect_cycles, encode, graph_to_alpha, tree_arities, Cycle, Planar, Tree};

/// True iff the pairing of a tree-shaped graph has no index cycle.
pub fn is_tree_allowable(g: &KmGraph) -> Result<bool> {
    Ok(detect_cycles(&graph_to_alpha(g)?).is_empty())
}

/// `HomT(σ, 1) : [1^n, 1] → [1^n, 1]` where `σ` is the permutation term of
/// `perm`; codomain input `i` is paired with domain input `perm[i]`.
fn relabel_inputs(perm: &[usize]) -> Term {
    let ones = vec![Shape::Unit; perm.len()];
    let sigma = permutation_term(perm, &ones).expect("caller passes a permutation");
    Term::hom(sigma, Term::Id(Shape::Unit))
}

fn is_identity(perm: &[usize]) -> bool {
    perm.iter().enumerate().all(|(i, &p)| i == p)
}

/// `θ_p : [1^{k−1}, I] → X_k`, shorting input `p` of a node to its output
/// and passing the other inputs through.
pub fn theta(k: usize, p: usize) -> Result<Term> {
    if p == 0 || p > k {
        return Err(Error::PositionOutOfRange {
            position: p,
            max: k,
        });
    }
    let y = Shape::units(k - 1);
    let short = Term::tensor(Term::E(y, Shape::i()), Term::Id(Shape::Unit));
    let last = curry_term(&short, &Shape::units(k))?;
    if p == k {
        return Ok(last);
    }
    let perm: Vec<usize> = (0..k)
        .map(|i| match (i + 1).cmp(&p) {
            std::cmp::Ordering::Less => i,
            std::cmp::Ordering::Equal => k - 1,
            std::cmp::Ordering::Greater => i - 1,
        })
        .collect();
    Ok(Term::comp(relabel_inputs(&perm), last))
}

/// An allowable term evaluating to `leaf_root_graph(l, k, q)`.
pub fn comp_graph_term(l: usize, k: usize, q: usize) -> Result<Term> {
    CompositionGraphSpec::new(l, k, q)?;
    let a_bar = Shape::units(l);
    let b_bar = Shape::units(k - 1);
    let (xl, xk) = (Shape::x_node(l), Shape::x_node(k));

    // [Ā,1] ⊗ [1⊗B̄,1] ⊗ Ā ⊗ B̄ → 1, feeding the output of the first node
    // into the first input of the second
    let swap = permutation_term(
        &[1, 0, 2, 3],
        &[xl.clone(), xk.clone(), a_bar.clone(), b_bar.clone()],
    )?;
    let apply_first = Term::tensor_all([
        Term::Id(xk),
        Term::E(a_bar.clone(), Shape::Unit),
        Term::Id(b_bar.clone()),
    ]);
    let apply_second = Term::E(Shape::units(k), Shape::Unit);
    let chain = Term::seq(Term::seq(swap, apply_first), apply_second);
    let mut term = curry_term(&chain, &a_bar.tensor(&b_bar))?;

    if q > 1 {
        // bring input q of the base node to the front
        let pre: Vec<usize> = (0..k)
            .map(|i| match i {
                0 => q - 1,
                i if i < q => i - 1,
                i => i,
            })
            .collect();
        // the q = 1 composite lists S's leaves, then the remaining base leaves
        let post: Vec<usize> = (0..l + k - 1)
            .map(|i| {
                if i < q - 1 {
                    l + i
                } else if i < q - 1 + l {
                    i + 1 - q
                } else {
                    i
                }
            })
            .collect();
        term = Term::comp(
            term,
            Term::tensor(Term::Id(Shape::x_node(l)), relabel_inputs(&pre)),
        );
        if !is_identity(&post) {
            term = Term::comp(relabel_inputs(&post), term);
        }
    }
    Ok(term)
}

thread_local! {
    static GRAFTS: RefCell<HashMap<(usize, usize, usize), Term>> = RefCell::new(HashMap::new());
    static RELABELS: RefCell<HashMap<Vec<usize>, Term>> = RefCell::new(HashMap::new());
}

/// Leaf permutations longer than this are rebuilt rather than remembered.
const RELABEL_CACHE_MAX_LEN: usize = 8;

fn cached_comp_graph_term(l: usize, k: usize, q: usize) -> Term {
    GRAFTS.with(|cache| {
        cache
            .borrow_mut()
            .entry((l, k, q))
            .or_insert_with(|| comp_graph_term(l, k, q).expect("q is a leaf"))
            .clone()
    })
}

fn cached_relabel_inputs(perm: &[usize]) -> Term {
    if perm.len() > RELABEL_CACHE_MAX_LEN {
        return relabel_inputs(perm);
    }
    RELABELS.with(|cache| {
        let mut cache = cache.borrow_mut();
        if let Some(t) = cache.get(perm) {
            return t.clone();
        }
        let t = relabel_inputs(perm);
        cache.insert(perm.to_vec(), t.clone());
        t
    })
}

/// An allowable term together with the graph it is claimed to evaluate to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub term: Term,
    pub target: KmGraph,
}

impl Certificate {
    /// Evaluates the term and compares with the target.
    pub fn verify(&self) -> Result<bool> {
        Ok(self.term.eval()? == self.target)
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "term {}\n{}", self.term, self.target)
    }
}

/// A term for the subtree at `node`, with leaves in planar order, and the
/// labels of its nodes in the order of its domain factors.
fn subtree_term(node: &Planar) -> (Term, Vec<usize>, usize) {
    let Planar::Node { label, children } = node else {
        unreachable!("leaves are handled by the caller");
    };
    let m = children.len();
    let mut acc = Term::Id(Shape::x_node(m));
    let mut order = vec![*label];
    let mut leaves = m;
    for (j, child) in children.iter().enumerate().rev() {
        if *child == Planar::Leaf {
            continue;
        }
        let (term, child_order, child_leaves) = subtree_term(child);
        let graft = cached_comp_graph_term(child_leaves, leaves, j + 1);
        acc = Term::comp(graft, Term::tensor(term, acc));
        order = child_order.into_iter().chain(order).collect();
        leaves = leaves + child_leaves - 1;
    }
    (acc, order, leaves)
}

/// An allowable term for `ξ_t`, built by induction on height: subtrees of
/// the root are grafted onto it with composition graphs, then symmetries
/// restore the node order and leaf numbering of `t`.
pub fn certificate(t: &Tree) -> Certificate {
    let target = encode(t);
    let term = match t.root() {
        Planar::Leaf => Term::D(Shape::i(), Shape::Unit),
        root => {
            let (mut term, order, _) = subtree_term(root);
            let mut position = vec![0; order.len()];
            for (pos, &label) in order.iter().enumerate() {
                position[label - 1] = pos;
            }
            if !is_identity(&position) {
                let factors: Vec<Shape> = t.arities().into_iter().map(Shape::x_node).collect();
                let reorder = permutation_term(&position, &factors).expect("labels are 1..=k");
                term = Term::comp(term, reorder);
            }
            let mut inverse = vec![0; t.leaf_count()];
            for (q, &p) in t.rho().iter().enumerate() {
                inverse[p - 1] = q;
            }
            if !is_identity(&inverse) {
                term = Term::comp(cached_relabel_inputs(&inverse), term);
            }
            term
        }
    };
    Certificate { term, target }
}

/// An allowable `η` whose composite with `target` has closed loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub eta: Term,
    pub target: KmGraph,
    pub cycle: Cycle,
    pub loop_count: LoopCount,
}

impl Witness {
    /// Evaluates `η`, composes with the target and checks for loops.
    pub fn verify(&self) -> Result<bool> {
        let (_, loops) = self.eta.eval()?.then(&self.target)?;
        Ok(!loops.is_zero() && loops == self.loop_count)
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nodes: Vec<String> = self.cycle.nodes.iter().map(usize::to_string).collect();
        let inputs: Vec<String> = self.cycle.inputs.iter().map(usize::to_string).collect();
        write!(
            f,
            "cycle: {}\ninputs: {}\neta {}\nloops {}\n{}",
            nodes.join(" "),
            inputs.join(" "),
            self.eta,
            self.loop_count,
            self.target
        )
    }
}

/// Builds witnesses, reusing the `θ` terms and graphs between calls.
#[derive(Default)]
pub struct Witnesser {
    thetas: HashMap<(usize, usize), (Term, KmGraph)>,
}

impl Witnesser {
    pub fn new() -> Witnesser {
        Witnesser::default()
    }

    fn theta(&mut self, k: usize, p: usize) -> Result<&(Term, KmGraph)> {
        if let std::collections::hash_map::Entry::Vacant(e) = self.thetas.entry((k, p)) {
            let term = theta(k, p)?;
            let graph = term.eval()?;
            e.insert((term, graph));
        }
        Ok(&self.thetas[&(k, p)])
    }

    /// `η = f_1 ⊗ ⋯ ⊗ f_k` with `f_{t_j} = θ_{b_j}` along the first index
    /// cycle of `g` and identities elsewhere. The composite is computed
    /// here, so a returned witness has already been checked.
    pub fn witness(&mut self, g: &KmGraph) -> Result<Witness> {
        let (arities, _) = tree_arities(g)?;
        let report = detect_cycles(&graph_to_alpha(g)?);
        let cycle = report.cycles.into_iter().next().ok_or(Error::NoCycle)?;
        let mut shorted = vec![None; arities.len()];
        for (&t, &b) in cycle.nodes.iter().zip(&cycle.inputs) {
            shorted[t - 1] = Some(b);
        }
        let mut terms = Vec::with_capacity(arities.len());
        let mut graph: Option<KmGraph> = None;
        for (&m, b) in arities.iter().zip(shorted) {
            let (term, factor) = match b {
                Some(b) => self.theta(m, b)?.clone(),
                None => {
                    let x = Shape::x_node(m);
                    (Term::Id(x.clone()), KmGraph::identity(&x))
                }
            };
            terms.push(term);
            graph = Some(match graph {
                Some(acc) => acc.tensor(&factor),
                None => factor,
            });
        }
        let eta_graph = graph.unwrap_or_else(|| KmGraph::identity(&Shape::i()));
        let (_, loop_count) = eta_graph.then(g)?;
        if loop_count.is_zero() {
            return Err(Error::NoCycle);
        }
        Ok(Witness {
            eta: Term::tensor_all(terms),
            target: g.clone(),
            cycle,
            loop_count,
        })
    }
}

pub fn witness(g: &KmGraph) -> Result<Witness> {
    Witnesser::new().witness(g)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Allowable(Certificate),
    NotAllowable(Witness),
}

/// Certificate or witness for a graph of tree shape.
pub fn decide(g: &KmGraph) -> Result<Decision> {
    match crate::tree::decode(g) {
        Ok(tree) => Ok(Decision::Allowable(certificate(&tree))),
        Err(Error::HasCycle(_)) => witness(g).map(Decision::NotAllowable),
        Err(e) => Err(e),
    }
}
