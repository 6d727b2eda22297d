//! Kelly-Mac Lane graphs: fixed-point-free pairings of the variables of a
//! domain and a codomain shape such that mates have opposite signs in the
//! twisted sum.
//!
//! A graph stores its pairing as an involution over one index space: the
//! domain variables come first (`0..n_dom`), then the codomain variables.
//! Domain-domain and codomain-codomain pairs need no special treatment in
//! this form.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::parse::{Cursor, ParseError};
use crate::shape::{parse_shape, twisted_sum, Shape, Side, VariableRef};

/// Number of closed loops created while composing two graphs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LoopCount(pub usize);

impl LoopCount {
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for LoopCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KmGraph {
    dom: Shape,
    cod: Shape,
    n_dom: usize,
    mate: Vec<usize>,
}

impl KmGraph {
    /// Builds a graph from an involution over the joint index space,
    /// checking that it is fixed-point free and pairs opposite signs.
    pub fn from_mates(dom: Shape, cod: Shape, mate: Vec<usize>) -> Result<KmGraph> {
        let g = KmGraph {
            n_dom: dom.width(),
            dom,
            cod,
            mate,
        };
        g.validate()?;
        Ok(g)
    }

    pub(crate) fn from_mates_unchecked(dom: Shape, cod: Shape, mate: Vec<usize>) -> KmGraph {
        let g = KmGraph {
            n_dom: dom.width(),
            dom,
            cod,
            mate,
        };
        debug_assert!(g.validate().is_ok(), "{:?}", g.validate());
        g
    }

    pub fn from_pairs<I>(dom: Shape, cod: Shape, pairs: I) -> Result<KmGraph>
    where
        I: IntoIterator<Item = (VariableRef, VariableRef)>,
    {
        let n_dom = dom.width();
        let total = n_dom + cod.width();
        let flat = |v: VariableRef| -> Result<usize> {
            let (base, bound) = match v.side {
                Side::Domain => (0, n_dom),
                Side::Codomain => (n_dom, total - n_dom),
            };
            if v.index >= bound {
                return Err(Error::InvalidPairing(format!(
                    "variable {v} does not exist"
                )));
            }
            Ok(base + v.index)
        };
        let mut mate = vec![usize::MAX; total];
        for (a, b) in pairs {
            let (x, y) = (flat(a)?, flat(b)?);
            if mate[x] != usize::MAX || mate[y] != usize::MAX || x == y {
                return Err(Error::InvalidPairing(format!(
                    "variable paired more than once in {a} {b}"
                )));
            }
            mate[x] = y;
            mate[y] = x;
        }
        KmGraph::from_mates(dom, cod, mate)
    }

    fn validate(&self) -> Result<()> {
        let total = self.n_dom + self.cod.width();
        if self.mate.len() != total {
            return Err(Error::InvalidPairing(format!(
                "{} variables but {} mates",
                total,
                self.mate.len()
            )));
        }
        let signs = twisted_sum(&self.dom, &self.cod).signs.0;
        for (i, &j) in self.mate.iter().enumerate() {
            if j >= total {
                return Err(Error::InvalidPairing(format!(
                    "{} is unpaired",
                    self.var(i)
                )));
            }
            if j == i {
                return Err(Error::InvalidPairing(format!(
                    "{} is a fixed point",
                    self.var(i)
                )));
            }
            if self.mate[j] != i {
                return Err(Error::InvalidPairing(format!(
                    "pairing is not an involution at {}",
                    self.var(i)
                )));
            }
            if signs[i] == signs[j] {
                return Err(Error::InvalidPairing(format!(
                    "{} and {} have the same variance",
                    self.var(i),
                    self.var(j)
                )));
            }
        }
        Ok(())
    }

    pub fn dom(&self) -> &Shape {
        &self.dom
    }

    pub fn cod(&self) -> &Shape {
        &self.cod
    }

    pub fn n_dom(&self) -> usize {
        self.n_dom
    }

    pub fn n_cod(&self) -> usize {
        self.mate.len() - self.n_dom
    }

    /// The raw involution over the joint index space.
    pub fn mates(&self) -> &[usize] {
        &self.mate
    }

    fn var(&self, flat: usize) -> VariableRef {
        if flat < self.n_dom {
            VariableRef::dom(flat)
        } else {
            VariableRef::cod(flat - self.n_dom)
        }
    }

    fn flat(&self, v: VariableRef) -> usize {
        match v.side {
            Side::Domain => v.index,
            Side::Codomain => self.n_dom + v.index,
        }
    }

    /// The mate of a variable. Panics if `v` is out of range.
    pub fn mate(&self, v: VariableRef) -> VariableRef {
        self.var(self.mate[self.flat(v)])
    }

    /// Each pair once, smaller endpoint first, sorted.
    pub fn pairs(&self) -> Vec<(VariableRef, VariableRef)> {
        self.mate
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i < j)
            .map(|(i, &j)| (self.var(i), self.var(j)))
            .collect()
    }

    /// `1 : T → T`.
    pub fn identity(t: &Shape) -> KmGraph {
        let n = t.width();
        let mate = (0..2 * n)
            .map(|i| if i < n { i + n } else { i - n })
            .collect();
        KmGraph::from_mates_unchecked(t.clone(), t.clone(), mate)
    }

    /// `c : T ⊗ S → S ⊗ T`.
    pub fn symmetry(t: &Shape, s: &Shape) -> KmGraph {
        let (nt, ns) = (t.width(), s.width());
        let off = nt + ns;
        let mut mate = vec![0; 2 * off];
        for i in 0..nt {
            mate[i] = off + ns + i;
            mate[off + ns + i] = i;
        }
        for j in 0..ns {
            mate[nt + j] = off + j;
            mate[off + j] = nt + j;
        }
        KmGraph::from_mates_unchecked(t.tensor(s), s.tensor(t), mate)
    }

    /// `d : T → [S, T ⊗ S]`.
    pub fn coevaluation(t: &Shape, s: &Shape) -> KmGraph {
        let (nt, ns) = (t.width(), s.width());
        let mut mate = vec![0; 2 * (nt + ns)];
        // codomain layout: S (hom source), T, S
        for i in 0..nt {
            mate[i] = nt + ns + i;
            mate[nt + ns + i] = i;
        }
        for j in 0..ns {
            mate[nt + j] = nt + ns + nt + j;
            mate[nt + ns + nt + j] = nt + j;
        }
        let cod = Shape::hom(s.clone(), t.tensor(s));
        KmGraph::from_mates_unchecked(t.clone(), cod, mate)
    }

    /// `e : [T, S] ⊗ T → S`.
    pub fn evaluation(t: &Shape, s: &Shape) -> KmGraph {
        let (nt, ns) = (t.width(), s.width());
        let off = 2 * nt + ns;
        let mut mate = vec![0; off + ns];
        // domain layout: T (hom source), S (hom target), T (argument)
        for i in 0..nt {
            mate[i] = nt + ns + i;
            mate[nt + ns + i] = i;
        }
        for j in 0..ns {
            mate[nt + j] = off + j;
            mate[off + j] = nt + j;
        }
        let dom = Shape::hom(t.clone(), s.clone()).tensor(t);
        KmGraph::from_mates_unchecked(dom, s.clone(), mate)
    }

    /// Block permutation of `factors`: domain factor `i` is sent to codomain
    /// position `perm[i]` (0-based).
    pub fn permutation(perm: &[usize], factors: &[Shape]) -> Result<KmGraph> {
        check_permutation(perm, factors.len())?;
        let mut arranged = vec![Shape::i(); factors.len()];
        for (i, f) in factors.iter().enumerate() {
            arranged[perm[i]] = f.clone();
        }
        let widths: Vec<usize> = factors.iter().map(Shape::width).collect();
        let dom_off = prefix_sums(&widths);
        let cod_off = prefix_sums(&arranged.iter().map(Shape::width).collect::<Vec<_>>());
        let nd: usize = widths.iter().sum();
        let mut mate = vec![0; 2 * nd];
        for (i, &w) in widths.iter().enumerate() {
            for u in 0..w {
                let (a, b) = (dom_off[i] + u, nd + cod_off[perm[i]] + u);
                mate[a] = b;
                mate[b] = a;
            }
        }
        Ok(KmGraph::from_mates_unchecked(
            Shape::tensor_all(factors.iter().cloned()),
            Shape::tensor_all(arranged),
            mate,
        ))
    }

    /// `f ⊗ g`, side by side.
    pub fn tensor(&self, g: &KmGraph) -> KmGraph {
        let (fa, fb) = (self.n_dom, self.n_cod());
        let (ga, gb) = (g.n_dom, g.n_cod());
        let nd = fa + ga;
        let place_f = |x: usize| if x < fa { x } else { nd + x - fa };
        let place_g = |x: usize| if x < ga { fa + x } else { nd + fb + x - ga };
        let mut mate = vec![0; nd + fb + gb];
        for (x, &y) in self.mate.iter().enumerate() {
            mate[place_f(x)] = place_f(y);
        }
        for (x, &y) in g.mate.iter().enumerate() {
            mate[place_g(x)] = place_g(y);
        }
        KmGraph::from_mates_unchecked(self.dom.tensor(&g.dom), self.cod.tensor(&g.cod), mate)
    }

    /// `[f, g] : [T′, S] → [T, S′]` for `f : T → T′` and `g : S → S′`.
    pub fn hom(f: &KmGraph, g: &KmGraph) -> KmGraph {
        let (t, t2) = (f.n_dom, f.n_cod());
        let (s, s2) = (g.n_dom, g.n_cod());
        let nd = t2 + s;
        // f's domain sits in the codomain hom source, its codomain in the domain hom source.
        let place_f = |x: usize| if x < t { nd + x } else { x - t };
        let place_g = |x: usize| if x < s { t2 + x } else { nd + t + x - s };
        let mut mate = vec![0; nd + t + s2];
        for (x, &y) in f.mate.iter().enumerate() {
            mate[place_f(x)] = place_f(y);
        }
        for (x, &y) in g.mate.iter().enumerate() {
            mate[place_g(x)] = place_g(y);
        }
        KmGraph::from_mates_unchecked(
            Shape::hom(f.cod.clone(), g.dom.clone()),
            Shape::hom(f.dom.clone(), g.cod.clone()),
            mate,
        )
    }

    /// `g ∘ f` for `f = self`. Mates of the result are found by following
    /// pairs alternately through `f` and `g` until the path leaves the middle
    /// shape; alternating cycles that never leave it are counted as loops.
    pub fn then(&self, g: &KmGraph) -> Result<(KmGraph, LoopCount)> {
        if self.cod != g.dom {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose: codomain {} is not domain {}",
                self.cod, g.dom
            )));
        }
        let (nt, ns) = (self.n_dom, self.n_cod());
        let nr = g.n_cod();
        let mut mate = vec![usize::MAX; nt + nr];
        let mut seen = vec![false; ns];

        for start in 0..nt + nr {
            if mate[start] != usize::MAX {
                continue;
            }
            let mut in_f = start < nt;
            let mut idx = if in_f { start } else { ns + start - nt };
            let end = loop {
                if in_f {
                    let y = self.mate[idx];
                    if y < nt {
                        break y;
                    }
                    seen[y - nt] = true;
                    idx = y - nt;
                } else {
                    let y = g.mate[idx];
                    if y >= ns {
                        break nt + y - ns;
                    }
                    seen[y] = true;
                    idx = nt + y;
                }
                in_f = !in_f;
            };
            mate[start] = end;
            mate[end] = start;
        }

        let mut loops = 0;
        for s in 0..ns {
            if seen[s] {
                continue;
            }
            loops += 1;
            let mut cur = s;
            loop {
                seen[cur] = true;
                let across = self.mate[nt + cur] - nt;
                seen[across] = true;
                cur = g.mate[across];
                if cur == s {
                    break;
                }
            }
        }

        let graph = KmGraph::from_mates_unchecked(self.dom.clone(), g.cod.clone(), mate);
        Ok((graph, LoopCount(loops)))
    }

    /// Transposes `S ⊗ T → U` into `S → [T, U]`, where `T = arg` must be a
    /// trailing block of the domain's tensor factors. The pairing is
    /// unchanged: only the boundary between domain and codomain moves.
    pub fn curry(&self, arg: &Shape) -> Result<KmGraph> {
        let rest = self.dom.strip_suffix(arg).ok_or_else(|| {
            Error::ShapeMismatch(format!("domain {} does not end with {}", self.dom, arg))
        })?;
        Ok(KmGraph::from_mates_unchecked(
            rest,
            Shape::hom(arg.clone(), self.cod.clone()),
            self.mate.clone(),
        ))
    }

    /// Inverse of [`KmGraph::curry`]: `S → [T, U]` becomes `S ⊗ T → U`.
    pub fn uncurry(&self) -> Result<KmGraph> {
        let (arg, target) = self.cod.as_hom().ok_or_else(|| {
            Error::ShapeMismatch(format!("codomain {} is not an internal hom", self.cod))
        })?;
        Ok(KmGraph::from_mates_unchecked(
            self.dom.tensor(arg),
            target.clone(),
            self.mate.clone(),
        ))
    }

    /// The dual `I → [dom, cod]` of this graph.
    pub fn dual(&self) -> KmGraph {
        self.curry(&self.dom.clone())
            .expect("every shape is a suffix of itself")
    }

    /// Graphviz rendering: one record per side, a port per variable
    /// (labelled with its sign in the twisted sum) and an edge per pair.
    pub fn to_dot(&self) -> String {
        let signs = twisted_sum(&self.dom, &self.cod).signs.0;
        let record = |prefix: char, shape: &Shape, range: std::ops::Range<usize>| {
            let ports: Vec<String> = range
                .clone()
                .map(|i| format!("<{}{}> {}", prefix, i - range.start, signs[i]))
                .collect();
            let shape = escape_record(&shape.to_string());
            if ports.is_empty() {
                format!("\"{shape}\"")
            } else {
                format!("\"{{{shape}|{{{}}}}}\"", ports.join("|"))
            }
        };
        let total = self.mate.len();
        let mut out = String::from("graph kmgraph {\n  node [shape=record];\n");
        let _ = writeln!(
            out,
            "  dom [label={}];",
            record('d', &self.dom, 0..self.n_dom)
        );
        let _ = writeln!(
            out,
            "  cod [label={}];",
            record('c', &self.cod, self.n_dom..total)
        );
        for (a, b) in self.pairs() {
            let _ = writeln!(out, "  {} -- {};", dot_port(a), dot_port(b));
        }
        out.push_str("}\n");
        out
    }
}

fn dot_port(v: VariableRef) -> String {
    match v.side {
        Side::Domain => format!("dom:d{}", v.index),
        Side::Codomain => format!("cod:c{}", v.index),
    }
}

fn escape_record(s: &str) -> String {
    s.chars()
        .flat_map(|c| match c {
            '{' | '}' | '|' | '<' | '>' | '"' => vec!['\\', c],
            c => vec![c],
        })
        .collect()
}

fn prefix_sums(widths: &[usize]) -> Vec<usize> {
    widths
        .iter()
        .scan(0, |acc, &w| {
            let start = *acc;
            *acc += w;
            Some(start)
        })
        .collect()
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::InvalidPermutation(format!(
            "expected {n} entries, found {}",
            perm.len()
        )));
    }
    let mut hit = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut hit[p], true) {
            return Err(Error::InvalidPermutation(format!(
                "{perm:?} is not a bijection"
            )));
        }
    }
    Ok(())
}

/// `g ∘ f` together with the number of closed loops it creates.
pub fn compose(f: &KmGraph, g: &KmGraph) -> Result<(KmGraph, LoopCount)> {
    f.then(g)
}

impl fmt::Display for KmGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dom {} |- cod {}", self.dom, self.cod)?;
        for (a, b) in self.pairs() {
            write!(f, "\np {a} {b}")?;
        }
        Ok(())
    }
}

fn parse_var(cur: &mut Cursor<'_>) -> Result<VariableRef, ParseError> {
    let side = match cur.bump() {
        Some('D') => Side::Domain,
        Some('C') => Side::Codomain,
        _ => return Err(cur.error("expected D or C")),
    };
    cur.expect(':')?;
    Ok(VariableRef {
        side,
        index: cur.number()?,
    })
}

impl FromStr for KmGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        if !cur.eat_word("dom") {
            return Err(cur.error("expected 'dom'").into());
        }
        let dom = parse_shape(&mut cur)?;
        if !cur.eat_word("|-") || !cur.eat_word("cod") {
            return Err(cur.error("expected '|- cod'").into());
        }
        let cod = parse_shape(&mut cur)?;
        let mut pairs = Vec::new();
        while cur.eat('p') {
            let a = parse_var(&mut cur)?;
            let b = parse_var(&mut cur)?;
            pairs.push((a, b));
        }
        cur.finish()?;
        KmGraph::from_pairs(dom, cod, pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sh(s: &str) -> Shape {
        s.parse().unwrap()
    }

    fn pairs(g: &KmGraph) -> Vec<(String, String)> {
        g.pairs()
            .into_iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect()
    }

    fn p(a: &str, b: &str) -> (String, String) {
        (a.to_string(), b.to_string())
    }

    #[test]
    fn identity_on_unit() {
        let g = KmGraph::identity(&Shape::Unit);
        assert_eq!(pairs(&g), vec![p("D:0", "C:0")]);
    }

    #[test]
    fn coevaluation_on_unit_object() {
        let g = KmGraph::coevaluation(&Shape::i(), &Shape::Unit);
        assert_eq!(g.dom(), &Shape::i());
        assert_eq!(g.cod(), &sh("[1,1]"));
        assert_eq!(pairs(&g), vec![p("C:0", "C:1")]);
    }

    #[test]
    fn evaluation_on_units() {
        let g = KmGraph::evaluation(&Shape::Unit, &Shape::Unit);
        assert_eq!(g.dom(), &sh("[1,1]*1"));
        assert_eq!(pairs(&g), vec![p("D:0", "D:2"), p("D:1", "C:0")]);
    }

    #[test]
    fn generators_respect_variance() {
        let shapes = ["I", "1", "1*1", "[1,1]", "[1*1,I]*1", "[[1,1],1]*[I,1]"];
        for a in shapes {
            for b in shapes {
                let (a, b) = (sh(a), sh(b));
                for g in [
                    KmGraph::identity(&a),
                    KmGraph::symmetry(&a, &b),
                    KmGraph::coevaluation(&a, &b),
                    KmGraph::evaluation(&a, &b),
                ] {
                    g.validate().unwrap();
                }
            }
        }
    }

    #[test]
    fn tensor_with_unit_identity_is_neutral() {
        let f = KmGraph::evaluation(&Shape::Unit, &Shape::Unit);
        assert_eq!(f.tensor(&KmGraph::identity(&Shape::i())), f);
        let one = KmGraph::identity(&Shape::Unit);
        assert_eq!(one.tensor(&one), KmGraph::identity(&sh("1*1")));
    }

    #[test]
    fn hom_of_identities_is_identity() {
        let (t, s) = (sh("1*[1,1]"), sh("[I,1]"));
        let h = KmGraph::hom(&KmGraph::identity(&t), &KmGraph::identity(&s));
        assert_eq!(h, KmGraph::identity(&Shape::hom(t, s)));
    }

    #[test]
    fn hom_transports_a_swap() {
        let one = Shape::Unit;
        let h = KmGraph::hom(&KmGraph::symmetry(&one, &one), &KmGraph::identity(&one));
        assert_eq!(h.dom(), &sh("[1*1,1]"));
        assert_eq!(h.cod(), &sh("[1*1,1]"));
        assert_eq!(
            pairs(&h),
            vec![p("D:0", "C:1"), p("D:1", "C:0"), p("D:2", "C:2")]
        );
    }

    #[test]
    fn triangle_composite_is_identity() {
        let one = Shape::Unit;
        let f = KmGraph::coevaluation(&Shape::i(), &one).tensor(&KmGraph::identity(&one));
        let (g, loops) = f.then(&KmGraph::evaluation(&one, &one)).unwrap();
        assert_eq!(g, KmGraph::identity(&one));
        assert_eq!(loops, LoopCount(0));
    }

    #[test]
    fn capping_a_cup_closes_one_loop() {
        let cup = KmGraph::coevaluation(&Shape::i(), &Shape::Unit);
        let cap = KmGraph::from_pairs(
            sh("[1,1]"),
            Shape::i(),
            [(VariableRef::dom(0), VariableRef::dom(1))],
        )
        .unwrap();
        let (g, loops) = cup.then(&cap).unwrap();
        assert_eq!(g, KmGraph::identity(&Shape::i()));
        assert_eq!(loops, LoopCount(1));
    }

    #[test]
    fn compose_rejects_mismatched_shapes() {
        let a = KmGraph::identity(&Shape::Unit);
        let b = KmGraph::identity(&sh("1*1"));
        assert!(matches!(a.then(&b), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn identity_is_a_unit_for_composition() {
        let f = KmGraph::evaluation(&sh("1*1"), &sh("[1,I]"));
        let (left, l) = KmGraph::identity(f.dom()).then(&f).unwrap();
        let (right, r) = f.then(&KmGraph::identity(f.cod())).unwrap();
        assert_eq!((left, l), (f.clone(), LoopCount(0)));
        assert_eq!((right, r), (f, LoopCount(0)));
    }

    #[test]
    fn curry_of_evaluation_is_identity() {
        let (t, s) = (sh("1*1"), sh("[1,1]"));
        let e = KmGraph::evaluation(&t, &s);
        assert_eq!(e.curry(&t).unwrap(), KmGraph::identity(&Shape::hom(t, s)));
    }

    #[test]
    fn uncurry_of_coevaluation_is_identity() {
        let (t, s) = (sh("[1,1]*1"), sh("1"));
        let d = KmGraph::coevaluation(&t, &s);
        assert_eq!(d.uncurry().unwrap(), KmGraph::identity(&t.tensor(&s)));
    }

    #[test]
    fn dual_has_unit_domain() {
        let g = KmGraph::symmetry(&Shape::Unit, &sh("[1,1]"));
        let dual = g.dual();
        assert!(dual.dom().is_i());
        assert_eq!(dual.mates(), g.mates());
        assert_eq!(dual.uncurry().unwrap(), g);
    }

    #[test]
    fn curry_errors_on_missing_structure() {
        let g = KmGraph::identity(&sh("1*[1,1]"));
        assert!(matches!(
            g.curry(&Shape::Unit),
            Err(Error::ShapeMismatch(_))
        ));
        assert!(matches!(
            KmGraph::identity(&Shape::Unit).uncurry(),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn equality_distinguishes_pairings() {
        let one = Shape::Unit;
        assert_eq!(KmGraph::identity(&one), KmGraph::identity(&one));
        assert_ne!(KmGraph::identity(&sh("1*1")), KmGraph::symmetry(&one, &one));
    }

    #[test]
    fn permutation_graph_moves_blocks() {
        let factors = [sh("[1,1]"), Shape::Unit];
        let g = KmGraph::permutation(&[1, 0], &factors).unwrap();
        assert_eq!(g, KmGraph::symmetry(&factors[0], &factors[1]));
        assert!(KmGraph::permutation(&[0, 0], &factors).is_err());
        assert!(KmGraph::permutation(&[0], &factors).is_err());
    }

    #[test]
    fn from_pairs_rejects_bad_pairings() {
        let one = Shape::Unit;
        let same_sign = [(VariableRef::dom(0), VariableRef::cod(0))];
        assert!(KmGraph::from_pairs(sh("[1,1]"), one.clone(), same_sign).is_err());
        assert!(KmGraph::from_pairs(one.clone(), one.clone(), []).is_err());
        let twice = [
            (VariableRef::dom(0), VariableRef::cod(0)),
            (VariableRef::dom(0), VariableRef::cod(0)),
        ];
        assert!(KmGraph::from_pairs(one.clone(), one, twice).is_err());
    }

    #[test]
    fn text_format() {
        let g = KmGraph::evaluation(&Shape::Unit, &Shape::Unit);
        let text = g.to_string();
        assert_eq!(text, "dom [1,1]*1 |- cod 1\np D:0 D:2\np D:1 C:0");
        assert_eq!(text.parse::<KmGraph>().unwrap(), g);
        let empty = KmGraph::identity(&Shape::i());
        assert_eq!(empty.to_string(), "dom I |- cod I");
        assert_eq!("dom I |- cod I".parse::<KmGraph>().unwrap(), empty);
        assert!("dom 1 |- cod 1\np D:0 C:1".parse::<KmGraph>().is_err());
    }

    #[test]
    fn dot_lists_every_pair() {
        let g = KmGraph::evaluation(&Shape::Unit, &Shape::Unit);
        let dot = g.to_dot();
        assert!(dot.starts_with("graph kmgraph {"));
        assert!(dot.contains("dom:d0 -- dom:d2;"));
        assert!(dot.contains("dom:d1 -- cod:c0;"));
        assert!(dot.contains("<c0> +"));
    }
}
