//! Allowable morphisms as terms: the generators `id`, `c`, `d`, `e` closed
//! under tensor, internal hom and composition. Associators and unitors are
//! identities in the strict setting and have no term of their own.
//!
//! Text syntax: `id(S) | c(S,T) | d(S,T) | e(S,T) | (t * t) | [t,t] | (t ; t)`,
//! where `(f ; g)` means "first `f`, then `g`".

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{check_permutation, KmGraph};
use crate::parse::{Cursor, ParseError};
use crate::shape::{parse_shape, Shape};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    /// `1 : T → T`
    Id(Shape),
    /// `c : T ⊗ S → S ⊗ T`
    C(Shape, Shape),
    /// `d : T → [S, T ⊗ S]`
    D(Shape, Shape),
    /// `e : [T, S] ⊗ T → S`
    E(Shape, Shape),
    Tensor(Arc<Term>, Arc<Term>),
    /// `[f, g] : [T′, S] → [T, S′]` for `f : T → T′`, `g : S → S′`.
    HomT(Arc<Term>, Arc<Term>),
    /// `Comp(g, f)` is `g ∘ f`.
    Comp(Arc<Term>, Arc<Term>),
}

impl Term {
    pub fn tensor(a: Term, b: Term) -> Term {
        Term::Tensor(Arc::new(a), Arc::new(b))
    }

    pub fn hom(f: Term, g: Term) -> Term {
        Term::HomT(Arc::new(f), Arc::new(g))
    }

    /// `g ∘ f`.
    pub fn comp(g: Term, f: Term) -> Term {
        Term::Comp(Arc::new(g), Arc::new(f))
    }

    /// `f` followed by `g`.
    pub fn seq(f: Term, g: Term) -> Term {
        Term::comp(g, f)
    }

    /// Left-nested tensor of `terms`; `Id(I)` when empty.
    pub fn tensor_all<I: IntoIterator<Item = Term>>(terms: I) -> Term {
        terms
            .into_iter()
            .reduce(Term::tensor)
            .unwrap_or_else(|| Term::Id(Shape::i()))
    }

    /// Number of AST nodes.
    pub fn size(&self) -> usize {
        match self {
            Term::Id(_) | Term::C(..) | Term::D(..) | Term::E(..) => 1,
            Term::Tensor(a, b) | Term::HomT(a, b) | Term::Comp(a, b) => 1 + a.size() + b.size(),
        }
    }

    /// Domain and codomain, checking every composite along the way.
    pub fn signature(&self) -> Result<(Shape, Shape)> {
        Ok(match self {
            Term::Id(t) => (t.clone(), t.clone()),
            Term::C(t, s) => (t.tensor(s), s.tensor(t)),
            Term::D(t, s) => (t.clone(), Shape::hom(s.clone(), t.tensor(s))),
            Term::E(t, s) => (Shape::hom(t.clone(), s.clone()).tensor(t), s.clone()),
            Term::Tensor(a, b) => {
                let (da, ca) = a.signature()?;
                let (db, cb) = b.signature()?;
                (da.tensor(&db), ca.tensor(&cb))
            }
            Term::HomT(f, g) => {
                let (t, t2) = f.signature()?;
                let (s, s2) = g.signature()?;
                (Shape::hom(t2, s), Shape::hom(t, s2))
            }
            Term::Comp(g, f) => {
                let (df, cf) = f.signature()?;
                let (dg, cg) = g.signature()?;
                if cf != dg {
                    return Err(Error::ShapeMismatch(format!(
                        "ill-typed composite: {cf} is not {dg}"
                    )));
                }
                (df, cg)
            }
        })
    }

    pub fn dom(&self) -> Result<Shape> {
        self.signature().map(|(d, _)| d)
    }

    pub fn cod(&self) -> Result<Shape> {
        self.signature().map(|(_, c)| c)
    }

    /// The graph of this term. Composites of allowable graphs never close a
    /// loop, so a nonzero loop count surfaces as [`Error::InternalLoop`].
    pub fn eval(&self) -> Result<KmGraph> {
        Ok(match self {
            Term::Id(t) => KmGraph::identity(t),
            Term::C(t, s) => KmGraph::symmetry(t, s),
            Term::D(t, s) => KmGraph::coevaluation(t, s),
            Term::E(t, s) => KmGraph::evaluation(t, s),
            Term::Tensor(a, b) => a.eval()?.tensor(&b.eval()?),
            Term::HomT(f, g) => KmGraph::hom(&f.eval()?, &g.eval()?),
            Term::Comp(g, f) => {
                let (graph, loops) = f.eval()?.then(&g.eval()?)?;
                if !loops.is_zero() {
                    return Err(Error::InternalLoop(loops.0));
                }
                graph
            }
        })
    }
}

/// The graph of an allowable term.
pub fn eval(term: &Term) -> Result<KmGraph> {
    term.eval()
}

/// A composite of block symmetries `1 ⊗ c(B, X) ⊗ 1`, one for each position
/// whose factor has to be pulled forward over a block `B`, sending domain
/// factor `i` to codomain position `perm[i]` (0-based). The identity
/// permutation gives `Id` of the whole tensor.
pub fn permutation_term(perm: &[usize], factors: &[Shape]) -> Result<Term> {
    check_permutation(perm, factors.len())?;
    let n = factors.len();
    let mut source = vec![0; n];
    for (i, &p) in perm.iter().enumerate() {
        source[p] = i;
    }
    // arrangement[pos] = index of the domain factor currently at pos
    let mut arrangement: Vec<usize> = (0..n).collect();
    let block = |range: &[usize]| Shape::tensor_all(range.iter().map(|&i| factors[i].clone()));
    let mut steps = Vec::new();
    for pos in 0..n {
        let cur = pos
            + arrangement[pos..]
                .iter()
                .position(|&i| i == source[pos])
                .expect("each factor is somewhere");
        if cur == pos {
            continue;
        }
        let mut parts = Vec::with_capacity(3);
        if pos > 0 {
            parts.push(Term::Id(block(&arrangement[..pos])));
        }
        parts.push(Term::C(
            block(&arrangement[pos..cur]),
            factors[source[pos]].clone(),
        ));
        if cur + 1 < n {
            parts.push(Term::Id(block(&arrangement[cur + 1..])));
        }
        steps.push(Term::tensor_all(parts));
        arrangement[pos..=cur].rotate_right(1);
    }
    Ok(steps
        .into_iter()
        .reduce(Term::seq)
        .unwrap_or_else(|| Term::Id(Shape::tensor_all(factors.iter().cloned()))))
}

/// For `f : S ⊗ T → U` with `T = arg`, the term `[1_T, f] ∘ d_{S,T} : S → [T, U]`.
pub fn curry_term(f: &Term, arg: &Shape) -> Result<Term> {
    let dom = f.dom()?;
    let rest = dom
        .strip_suffix(arg)
        .ok_or_else(|| Error::ShapeMismatch(format!("domain {dom} does not end with {arg}")))?;
    Ok(Term::comp(
        Term::hom(Term::Id(arg.clone()), f.clone()),
        Term::D(rest, arg.clone()),
    ))
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Id(t) => write!(f, "id({t})"),
            Term::C(t, s) => write!(f, "c({t},{s})"),
            Term::D(t, s) => write!(f, "d({t},{s})"),
            Term::E(t, s) => write!(f, "e({t},{s})"),
            Term::Tensor(a, b) => write!(f, "({a} * {b})"),
            Term::HomT(a, b) => write!(f, "[{a},{b}]"),
            Term::Comp(g, h) => write!(f, "({h} ; {g})"),
        }
    }
}

fn parse_term(cur: &mut Cursor<'_>) -> Result<Term, ParseError> {
    match cur.peek() {
        Some('(') => {
            cur.bump();
            let mut acc = parse_term(cur)?;
            loop {
                if cur.eat('*') {
                    acc = Term::tensor(acc, parse_term(cur)?);
                } else if cur.eat(';') {
                    acc = Term::seq(acc, parse_term(cur)?);
                } else {
                    break;
                }
            }
            cur.expect(')')?;
            Ok(acc)
        }
        Some('[') => {
            cur.bump();
            let a = parse_term(cur)?;
            cur.expect(',')?;
            let b = parse_term(cur)?;
            cur.expect(']')?;
            Ok(Term::hom(a, b))
        }
        _ => {
            if cur.eat_word("id") {
                cur.expect('(')?;
                let t = parse_shape(cur)?;
                cur.expect(')')?;
                return Ok(Term::Id(t));
            }
            let make: fn(Shape, Shape) -> Term = if cur.eat_word("c") {
                Term::C
            } else if cur.eat_word("d") {
                Term::D
            } else if cur.eat_word("e") {
                Term::E
            } else {
                return Err(cur.error("expected a term"));
            };
            cur.expect('(')?;
            let a = parse_shape(cur)?;
            cur.expect(',')?;
            let b = parse_shape(cur)?;
            cur.expect(')')?;
            Ok(make(a, b))
        }
    }
}

impl FromStr for Term {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor::new(s);
        let t = parse_term(&mut cur)?;
        cur.finish()?;
        Ok(t)
    }
}
