//! Random shapes, allowable terms and graphs for property tests and demos.
//!
//! Terms are grown from a fixed domain (`term_from`) or towards a fixed
//! codomain (`term_to`); the two recurse into each other through internal
//! homs, whose first argument is contravariant.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::KmGraph;
use crate::shape::{twisted_sum, Shape, Sign};
use crate::term::Term;

/// Shapes wider than this are only split or passed through, never grown.
const WIDTH_CAP: usize = 24;

pub fn shape<R: Rng + ?Sized>(rng: &mut R, depth: usize) -> Shape {
    if depth == 0 {
        return if rng.gen_bool(0.85) {
            Shape::Unit
        } else {
            Shape::i()
        };
    }
    match rng.gen_range(0..10) {
        0..=3 => Shape::Unit,
        4 => Shape::i(),
        5..=7 => {
            let n = rng.gen_range(2..=3);
            Shape::tensor_all((0..n).map(|_| shape(rng, depth - 1)))
        }
        _ => Shape::hom(shape(rng, depth - 1), shape(rng, depth - 1)),
    }
}

fn split<R: Rng + ?Sized>(rng: &mut R, s: &Shape) -> (Shape, Shape) {
    let fs = s.factors();
    let cut = rng.gen_range(0..=fs.len());
    (
        Shape::tensor_all(fs[..cut].iter().cloned()),
        Shape::tensor_all(fs[cut..].iter().cloned()),
    )
}

/// An allowable term with domain `dom`.
pub fn term_from<R: Rng + ?Sized>(rng: &mut R, dom: &Shape, depth: usize) -> Term {
    let roll = rng.gen_range(0..100);
    if depth == 0 {
        return leaf_from(rng, dom);
    }
    match roll {
        0..=39 => {
            let f = term_from(rng, dom, depth - 1);
            let mid = f.cod().expect("generated terms are well typed");
            if mid.width() > WIDTH_CAP {
                return f;
            }
            Term::seq(f, term_from(rng, &mid, depth - 1))
        }
        40..=64 => {
            let (a, b) = split(rng, dom);
            Term::tensor(term_from(rng, &a, depth - 1), term_from(rng, &b, depth - 1))
        }
        65..=79 => match dom.as_hom() {
            Some((t2, s)) => Term::hom(term_to(rng, t2, depth - 1), term_from(rng, s, depth - 1)),
            None => leaf_from(rng, dom),
        },
        _ => leaf_from(rng, dom),
    }
}

fn leaf_from<R: Rng + ?Sized>(rng: &mut R, dom: &Shape) -> Term {
    let fs = dom.factors();
    // e(T,S) applies when dom = [T,S] ⊗ T
    if let Some((t, s)) = fs.first().and_then(Shape::as_hom) {
        if Shape::tensor_all(fs[1..].iter().cloned()) == *t && rng.gen_bool(0.7) {
            return Term::E(t.clone(), s.clone());
        }
    }
    match rng.gen_range(0..3) {
        0 => Term::Id(dom.clone()),
        1 => {
            let (t, s) = split(rng, dom);
            Term::C(t, s)
        }
        _ if dom.width() <= WIDTH_CAP => Term::D(dom.clone(), shape(rng, 1)),
        _ => Term::Id(dom.clone()),
    }
}

/// An allowable term with codomain `cod`.
pub fn term_to<R: Rng + ?Sized>(rng: &mut R, cod: &Shape, depth: usize) -> Term {
    let roll = rng.gen_range(0..100);
    if depth == 0 {
        return leaf_to(rng, cod);
    }
    match roll {
        0..=39 => {
            let g = term_to(rng, cod, depth - 1);
            let mid = g.dom().expect("generated terms are well typed");
            if mid.width() > WIDTH_CAP {
                return g;
            }
            Term::seq(term_to(rng, &mid, depth - 1), g)
        }
        40..=64 => {
            let (a, b) = split(rng, cod);
            Term::tensor(term_to(rng, &a, depth - 1), term_to(rng, &b, depth - 1))
        }
        65..=79 => match cod.as_hom() {
            Some((t, s2)) => Term::hom(term_from(rng, t, depth - 1), term_to(rng, s2, depth - 1)),
            None => leaf_to(rng, cod),
        },
        _ => leaf_to(rng, cod),
    }
}

fn leaf_to<R: Rng + ?Sized>(rng: &mut R, cod: &Shape) -> Term {
    // d(T,S) applies when cod = [S, T ⊗ S]
    if let Some((s, target)) = cod.as_hom() {
        if let Some(t) = target.strip_suffix(s) {
            if rng.gen_bool(0.7) {
                return Term::D(t, s.clone());
            }
        }
    }
    match rng.gen_range(0..3) {
        0 => Term::Id(cod.clone()),
        1 => {
            let (s, t) = split(rng, cod);
            Term::C(t, s)
        }
        _ if cod.width() <= WIDTH_CAP => Term::E(shape(rng, 1), cod.clone()),
        _ => Term::Id(cod.clone()),
    }
}

/// A random allowable term on a random domain.
pub fn term<R: Rng + ?Sized>(rng: &mut R, depth: usize) -> Term {
    let dom = shape(rng, 2);
    term_from(rng, &dom, depth)
}

/// Two allowable terms `f`, `g` with `cod f = dom g`.
pub fn composable_pair<R: Rng + ?Sized>(rng: &mut R, depth: usize) -> (Term, Term) {
    let f = term(rng, depth);
    let mid = f.cod().expect("generated terms are well typed");
    let g = term_from(rng, &mid, depth);
    (f, g)
}

/// A uniformly random pairing between random shapes, padded with units so
/// that both signs occur equally often. Usually not allowable.
pub fn graph<R: Rng + ?Sized>(rng: &mut R, depth: usize) -> KmGraph {
    let mut dom = shape(rng, depth);
    let mut cod = shape(rng, depth);
    let signs = twisted_sum(&dom, &cod).signs;
    let (plus, minus) = (signs.count(Sign::Plus), signs.count(Sign::Minus));
    // a unit in the codomain counts +, one in the domain counts −
    if plus < minus {
        cod = cod.tensor(&Shape::units(minus - plus));
    } else {
        dom = dom.tensor(&Shape::units(plus - minus));
    }
    let signs = twisted_sum(&dom, &cod).signs.0;
    let (plus, mut minus): (Vec<usize>, Vec<usize>) =
        (0..signs.len()).partition(|&i| signs[i] == Sign::Plus);
    minus.shuffle(rng);
    let mut mate = vec![0; signs.len()];
    for (a, b) in plus.into_iter().zip(minus) {
        mate[a] = b;
        mate[b] = a;
    }
    KmGraph::from_mates(dom, cod, mate).expect("pairs opposite signs")
}
