//! Shapes in strict normal form, their variable lists, and the twisted sum
//! that governs which variables a graph may pair.
//!
//! A shape is built from the generating object `1`, the unit `I`, tensor
//! `⊗` and internal hom `[-,-]`. Associativity and the unit law hold on the
//! nose: a [`Shape::Tensor`] never has a tensor factor and `I` is simply the
//! empty tensor. Variables are the occurrences of `1`, numbered left to right.
//!
//! Text syntax: `shape := term ("*" term)*`, `term := 1 | I | [shape,shape] | (shape)`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::parse::{Cursor, ParseError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// The signs of a shape's variables, in left-to-right order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VarianceList(pub Vec<Sign>);

impl VarianceList {
    /// Reverses every sign; positions keep their order.
    pub fn flipped(&self) -> VarianceList {
        VarianceList(self.0.iter().map(|s| s.flip()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, sign: Sign) -> usize {
        self.0.iter().filter(|&&s| s == sign).count()
    }
}

impl fmt::Display for VarianceList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Domain,
    Codomain,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Domain => "D",
            Side::Codomain => "C",
        })
    }
}

/// Address of a variable of a graph: which side, and its 0-based position
/// among the `1`s of that side's shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VariableRef {
    pub side: Side,
    pub index: usize,
}

impl VariableRef {
    pub fn dom(index: usize) -> Self {
        VariableRef {
            side: Side::Domain,
            index,
        }
    }

    pub fn cod(index: usize) -> Self {
        VariableRef {
            side: Side::Codomain,
            index,
        }
    }
}

impl fmt::Display for VariableRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.side, self.index)
    }
}

/// A shape in strict normal form.
///
/// Build shapes through [`Shape::unit`], [`Shape::i`], [`Shape::tensor`],
/// [`Shape::hom`] and friends, which maintain the normal form. Children are
/// reference counted, so cloning is cheap.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    Unit,
    /// Factors are never tensors themselves; `Tensor([])` is `I` and a
    /// normal tensor never has exactly one factor.
    Tensor(Arc<[Shape]>),
    Hom(Arc<Shape>, Arc<Shape>),
}

impl Shape {
    pub fn unit() -> Shape {
        Shape::Unit
    }

    /// The unit object `I`.
    pub fn i() -> Shape {
        Shape::Tensor(Arc::from(Vec::new()))
    }

    pub fn hom(source: Shape, target: Shape) -> Shape {
        Shape::Hom(Arc::new(source), Arc::new(target))
    }

    pub fn tensor(&self, other: &Shape) -> Shape {
        Shape::tensor_all([self.clone(), other.clone()])
    }

    /// Strict tensor of a sequence of normal shapes.
    pub fn tensor_all<I: IntoIterator<Item = Shape>>(shapes: I) -> Shape {
        let mut factors = Vec::new();
        for s in shapes {
            match s {
                Shape::Tensor(fs) => factors.extend(fs.iter().cloned()),
                other => factors.push(other),
            }
        }
        if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            Shape::Tensor(Arc::from(factors))
        }
    }

    /// `1 ⊗ ⋯ ⊗ 1` with `n` factors.
    pub fn units(n: usize) -> Shape {
        Shape::tensor_all(std::iter::repeat_n(Shape::Unit, n))
    }

    /// `X_m = [1^{⊗m}, 1]`, the shape of a node with `m` inputs.
    pub fn x_node(m: usize) -> Shape {
        Shape::hom(Shape::units(m), Shape::Unit)
    }

    /// The arity `m` if this shape is `X_m`.
    pub fn as_x_node(&self) -> Option<usize> {
        match self {
            Shape::Hom(source, target) if **target == Shape::Unit => {
                let fs = source.factors();
                fs.iter().all(|f| *f == Shape::Unit).then_some(fs.len())
            }
            _ => None,
        }
    }

    pub fn is_i(&self) -> bool {
        matches!(self, Shape::Tensor(fs) if fs.is_empty())
    }

    /// Tensor factors; a non-tensor shape is its own single factor.
    pub fn factors(&self) -> &[Shape] {
        match self {
            Shape::Tensor(fs) => fs,
            other => std::slice::from_ref(other),
        }
    }

    pub fn as_hom(&self) -> Option<(&Shape, &Shape)> {
        match self {
            Shape::Hom(s, t) => Some((s, t)),
            _ => None,
        }
    }

    /// Number of variables (occurrences of `1`).
    pub fn width(&self) -> usize {
        match self {
            Shape::Unit => 1,
            Shape::Tensor(fs) => fs.iter().map(Shape::width).sum(),
            Shape::Hom(s, t) => s.width() + t.width(),
        }
    }

    pub fn variance(&self) -> VarianceList {
        let mut out = Vec::with_capacity(self.width());
        self.push_variance(false, &mut out);
        VarianceList(out)
    }

    fn push_variance(&self, flipped: bool, out: &mut Vec<Sign>) {
        match self {
            Shape::Unit => out.push(if flipped { Sign::Minus } else { Sign::Plus }),
            Shape::Tensor(fs) => fs.iter().for_each(|f| f.push_variance(flipped, out)),
            Shape::Hom(s, t) => {
                s.push_variance(!flipped, out);
                t.push_variance(flipped, out);
            }
        }
    }

    pub fn is_normal(&self) -> bool {
        match self {
            Shape::Unit => true,
            Shape::Tensor(fs) => {
                fs.len() != 1
                    && fs
                        .iter()
                        .all(|f| !matches!(f, Shape::Tensor(_)) && f.is_normal())
            }
            Shape::Hom(s, t) => s.is_normal() && t.is_normal(),
        }
    }

    /// Restores the normal form of a shape assembled directly from variants.
    pub fn normalized(&self) -> Shape {
        match self {
            Shape::Unit => Shape::Unit,
            Shape::Tensor(fs) => Shape::tensor_all(fs.iter().map(Shape::normalized)),
            Shape::Hom(s, t) => Shape::hom(s.normalized(), t.normalized()),
        }
    }

    /// If the factors of `self` end with the factors of `suffix`, the shape
    /// formed by the remaining prefix.
    pub fn strip_suffix(&self, suffix: &Shape) -> Option<Shape> {
        let fs = self.factors();
        let tail = suffix.factors();
        let cut = fs.len().checked_sub(tail.len())?;
        (fs[cut..] == *tail).then(|| Shape::tensor_all(fs[..cut].iter().cloned()))
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Unit => f.write_str("1"),
            Shape::Tensor(fs) if fs.is_empty() => f.write_str("I"),
            Shape::Tensor(fs) => {
                for (i, x) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str("*")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
            Shape::Hom(s, t) => write!(f, "[{s},{t}]"),
        }
    }
}

/// A shape expression before strictification: binary tensors and explicit `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShapeExpr {
    One,
    I,
    Tensor(Box<ShapeExpr>, Box<ShapeExpr>),
    Hom(Box<ShapeExpr>, Box<ShapeExpr>),
}

impl ShapeExpr {
    pub fn tensor(a: ShapeExpr, b: ShapeExpr) -> ShapeExpr {
        ShapeExpr::Tensor(Box::new(a), Box::new(b))
    }

    pub fn hom(a: ShapeExpr, b: ShapeExpr) -> ShapeExpr {
        ShapeExpr::Hom(Box::new(a), Box::new(b))
    }

    pub fn unit_count(&self) -> usize {
        match self {
            ShapeExpr::One => 1,
            ShapeExpr::I => 0,
            ShapeExpr::Tensor(a, b) | ShapeExpr::Hom(a, b) => a.unit_count() + b.unit_count(),
        }
    }

    pub fn normalize(&self) -> Shape {
        normalize(self)
    }
}

impl fmt::Display for ShapeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeExpr::One => f.write_str("1"),
            ShapeExpr::I => f.write_str("I"),
            ShapeExpr::Tensor(a, b) => write!(f, "({a}*{b})"),
            ShapeExpr::Hom(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

/// Strict normal form: flattens nested tensors and drops `I` factors,
/// keeping the left-to-right order of the `1`s.
pub fn normalize(expr: &ShapeExpr) -> Shape {
    match expr {
        ShapeExpr::One => Shape::Unit,
        ShapeExpr::I => Shape::i(),
        ShapeExpr::Tensor(a, b) => normalize(a).tensor(&normalize(b)),
        ShapeExpr::Hom(a, b) => Shape::hom(normalize(a), normalize(b)),
    }
}

/// `v(T)` of a normal shape.
pub fn variance(shape: &Shape) -> VarianceList {
    shape.variance()
}

/// `v(dom)^op ⨿ v(cod)` together with the variable each entry belongs to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedSum {
    pub signs: VarianceList,
    pub refs: Vec<VariableRef>,
}

pub fn twisted_sum(dom: &Shape, cod: &Shape) -> TwistedSum {
    let mut signs = dom.variance().flipped().0;
    let n_dom = signs.len();
    signs.extend(cod.variance().0);
    let refs = (0..signs.len())
        .map(|i| {
            if i < n_dom {
                VariableRef::dom(i)
            } else {
                VariableRef::cod(i - n_dom)
            }
        })
        .collect();
    TwistedSum {
        signs: VarianceList(signs),
        refs,
    }
}

pub(crate) fn parse_shape_expr(cur: &mut Cursor<'_>) -> Result<ShapeExpr, ParseError> {
    let mut acc = parse_shape_term(cur)?;
    while cur.eat('*') {
        let rhs = parse_shape_term(cur)?;
        acc = ShapeExpr::tensor(acc, rhs);
    }
    Ok(acc)
}

fn parse_shape_term(cur: &mut Cursor<'_>) -> Result<ShapeExpr, ParseError> {
    match cur.peek() {
        Some('1') => {
            cur.bump();
            Ok(ShapeExpr::One)
        }
        Some('I') => {
            cur.bump();
            Ok(ShapeExpr::I)
        }
        Some('[') => {
            cur.bump();
            let source = parse_shape_expr(cur)?;
            cur.expect(',')?;
            let target = parse_shape_expr(cur)?;
            cur.expect(']')?;
            Ok(ShapeExpr::hom(source, target))
        }
        Some('(') => {
            cur.bump();
            let inner = parse_shape_expr(cur)?;
            cur.expect(')')?;
            Ok(inner)
        }
        Some(c) => Err(cur.error(format!("expected a shape, found '{c}'"))),
        None => Err(cur.error("expected a shape, found end of input")),
    }
}

pub(crate) fn parse_shape(cur: &mut Cursor<'_>) -> Result<Shape, ParseError> {
    parse_shape_expr(cur).map(|e| normalize(&e))
}

impl FromStr for ShapeExpr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor::new(s);
        let e = parse_shape_expr(&mut cur)?;
        cur.finish()?;
        Ok(e)
    }
}

impl FromStr for Shape {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse::<ShapeExpr>().map(|e| normalize(&e))
    }
}
