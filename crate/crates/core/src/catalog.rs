//! Named algebras and quotient containment.
//!
//! Arrows of line and cycle patterns are `a1, a2, ...` in the order of the
//! underlying path, so `a1..a5` play the roles usually written
//! `alpha, beta, gamma, delta, sigma`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::AlgebraPresentation;
use crate::canonical::{canonical_form, isomorphic_by_search};
use crate::families;
use crate::quiver::{ArrowId, Path, VertexId};
use crate::shape::{graph_shape, ShapeKind};

/// A named algebra together with every nonzero path of length at least two;
/// those are the paths a quotient embedding has to keep alive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    pub name: String,
    pub presentation: AlgebraPresentation,
    pub required_nonzero: Vec<Path>,
}

impl Pattern {
    /// `presentation` must be finite dimensional.
    pub fn new(name: &str, presentation: AlgebraPresentation) -> Self {
        let required_nonzero = presentation
            .nonzero_paths(None)
            .expect("patterns are finite dimensional")
            .into_iter()
            .filter(|p| p.len() >= 2)
            .collect();
        Pattern { name: name.to_string(), presentation, required_nonzero }
    }

    pub fn size(&self) -> usize {
        self.presentation.vertex_count()
    }

    pub fn is_line(&self) -> bool {
        graph_shape(self.presentation.quiver()).is_line()
    }
}

/// Names with a fixed presentation, in catalog order.
pub const FIXED_NAMES: &[&str] = &[
    "A2", "A3++", "A3+-", "A3-+", "A4+++", "A4++-", "A4+-+", "A4-++", "B1", "B1op", "B2", "B2op", "B3", "B5", "B5op",
    "B6", "B6op", "B7", "B7op", "C1", "C2", "C3", "P2", "P3", "P4a", "P4b", "P4c", "P5a", "P5b", "P5c", "D4+++",
    "D4++-", "D4+-+", "D4--+",
];

fn line_zero(eps: &str, zeros: &[&[&str]]) -> AlgebraPresentation {
    let mut p = families::line(eps).expect("valid word");
    for z in zeros {
        p.add_zero(z).expect("line path");
    }
    p
}

fn cycle_zero(n: usize, zeros: &[&[&str]]) -> AlgebraPresentation {
    let mut p = families::cycle(n);
    for z in zeros {
        p.add_zero(z).expect("cycle path");
    }
    p
}

fn fixed(name: &str) -> Option<AlgebraPresentation> {
    let p = match name {
        "A2" => families::line("+").ok()?,
        "A3++" => families::line("++").ok()?,
        "A3+-" => families::line("+-").ok()?,
        "A3-+" => families::line("-+").ok()?,
        "A4+++" | "A4++-" | "A4+-+" | "A4-++" => families::line(&name[2..]).ok()?,
        "B1" => line_zero("++++", &[&["a1", "a2", "a3"], &["a2", "a3", "a4"]]),
        "B2" => line_zero("+++++", &[&["a1", "a2", "a3"], &["a3", "a4"]]),
        "B3" => line_zero("+++", &[&["a1", "a2", "a3"]]),
        "B5" => line_zero("+--", &[&["a3", "a2"]]),
        "B6" => line_zero("+--+", &[&["a3", "a2"]]),
        "B7" => line_zero("++--", &[&["a4", "a3"], &["a1", "a2"]]),
        "B1op" | "B2op" | "B5op" | "B6op" | "B7op" => fixed(&name[..2])?.opposite(),
        "C1" => cycle_zero(3, &[&["a1", "a2", "a3"], &["a3", "a1"]]),
        "C2" => cycle_zero(4, &[&["a1", "a2", "a3"], &["a2", "a3", "a4"], &["a4", "a1"]]),
        "C3" => cycle_zero(5, &[&["a1", "a2", "a3"], &["a3", "a4"], &["a5", "a1"]]),
        "P2" => cycle_zero(2, &[&["a2", "a1"]]),
        "P3" => cycle_zero(3, &[&["a2", "a3"], &["a3", "a1"]]),
        "P4a" => cycle_zero(4, &[&["a2", "a3"], &["a4", "a1"]]),
        "P4b" => cycle_zero(4, &[&["a2", "a3"], &["a3", "a4"], &["a4", "a1"]]),
        "P4c" => cycle_zero(4, &[&["a1", "a2", "a3"], &["a3", "a4"], &["a4", "a1"]]),
        "P5a" => cycle_zero(5, &[&["a2", "a3"], &["a3", "a4"], &["a5", "a1"]]),
        "P5b" => cycle_zero(5, &[&["a2", "a3"], &["a3", "a4"], &["a4", "a5"], &["a5", "a1"]]),
        "P5c" => cycle_zero(5, &[&["a1", "a2", "a3"], &["a3", "a4"], &["a4", "a5"], &["a5", "a1"]]),
        "D4+++" | "D4++-" | "D4+-+" | "D4--+" => families::d4(&name[2..]).ok()?.radical_square_zero_quotient(),
        _ => return None,
    };
    Some(p)
}

fn parametric(name: &str) -> Option<AlgebraPresentation> {
    let arg = |prefix: &str| -> Option<usize> { name.strip_prefix(prefix)?.strip_suffix(')')?.parse().ok() };
    if let Some(n) = arg("N(") {
        return (n >= 1).then(|| families::n_line(n));
    }
    if let Some(n) = arg("Ncirc(") {
        return (n >= 1).then(|| families::n_circ(n));
    }
    if let Some(n) = arg("local(") {
        return (n >= 2).then(|| families::local(n));
    }
    None
}

/// Presentation of a fixed or parametric (`N(4)`, `Ncirc(3)`, `local(2)`)
/// catalog name.
pub fn presentation(name: &str) -> Option<AlgebraPresentation> {
    fixed(name).or_else(|| parametric(name))
}

pub fn pattern(name: &str) -> Option<Pattern> {
    presentation(name).map(|p| Pattern::new(name, p))
}

/// The fixed part of the catalog; parametric members are built on demand.
#[derive(Clone, Debug)]
pub struct Catalog {
    patterns: Vec<Pattern>,
}

impl Default for Catalog {
    fn default() -> Self {
        Self::new()
    }
}

impl Catalog {
    pub fn new() -> Self {
        Catalog { patterns: FIXED_NAMES.iter().map(|n| pattern(n).expect("fixed name")).collect() }
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }

    pub fn get(&self, name: &str) -> Option<Pattern> {
        self.patterns.iter().find(|p| p.name == name).cloned().or_else(|| pattern(name))
    }

    pub fn line_patterns(&self) -> impl Iterator<Item = &Pattern> {
        self.patterns.iter().filter(|p| p.is_line())
    }
}

/// Isomorphism through canonical forms where they exist, else by search.
pub fn isomorphic(a: &AlgebraPresentation, b: &AlgebraPresentation) -> bool {
    match (canonical_form(a), canonical_form(b)) {
        (Ok(x), Ok(y)) => x == y,
        _ => isomorphic_by_search(a, b),
    }
}

/// Whether `host` has `pattern` as a quotient: an injective morphism of
/// quivers under which every required nonzero path stays nonzero in `host`.
pub fn contains_quotient(host: &AlgebraPresentation, pattern: &Pattern) -> bool {
    let (hq, pq) = (host.quiver(), pattern.presentation.quiver());
    let np = pq.vertex_count();
    if np > hq.vertex_count() || pq.arrow_count() > hq.arrow_count() {
        return false;
    }
    let order = bfs_order(pattern);
    let mut search = Embedding {
        host,
        pattern,
        order,
        vmap: vec![None; np],
        vused: vec![false; hq.vertex_count()],
        amap: Vec::with_capacity(pq.arrow_count()),
        aused: vec![false; hq.arrow_count()],
    };
    search.vertices(0)
}

fn bfs_order(p: &Pattern) -> Vec<VertexId> {
    let q = p.presentation.quiver();
    let mut order = Vec::with_capacity(q.vertex_count());
    let mut seen = vec![false; q.vertex_count()];
    for root in q.vertices() {
        if seen[root.0] {
            continue;
        }
        seen[root.0] = true;
        order.push(root);
        let mut head = order.len() - 1;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for w in q.neighbours(v) {
                if !seen[w.0] {
                    seen[w.0] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

struct Embedding<'a> {
    host: &'a AlgebraPresentation,
    pattern: &'a Pattern,
    order: Vec<VertexId>,
    vmap: Vec<Option<VertexId>>,
    vused: Vec<bool>,
    amap: Vec<ArrowId>,
    aused: Vec<bool>,
}

impl Embedding<'_> {
    fn vertices(&mut self, k: usize) -> bool {
        if k == self.order.len() {
            return self.arrows(0);
        }
        let (hq, pq) = (self.host.quiver(), self.pattern.presentation.quiver());
        let v = self.order[k];
        let anchor = pq.neighbours(v).into_iter().find_map(|u| self.vmap[u.0]);
        let candidates: Vec<VertexId> = match anchor {
            Some(img) => hq.neighbours(img),
            None => hq.vertices().collect(),
        };
        for w in candidates {
            if self.vused[w.0] {
                continue;
            }
            self.vmap[v.0] = Some(w);
            let fits = self.order[..=k].iter().all(|&u| {
                let fu = self.vmap[u.0].expect("placed");
                hq.arrows_between(fu, w).count() >= pq.arrows_between(u, v).count()
                    && hq.arrows_between(w, fu).count() >= pq.arrows_between(v, u).count()
            });
            if fits {
                self.vused[w.0] = true;
                if self.vertices(k + 1) {
                    return true;
                }
                self.vused[w.0] = false;
            }
            self.vmap[v.0] = None;
        }
        false
    }

    fn arrows(&mut self, idx: usize) -> bool {
        let (hq, pq) = (self.host.quiver(), self.pattern.presentation.quiver());
        if idx == pq.arrow_count() {
            return self.pattern.required_nonzero.iter().all(|p| {
                let image: Vec<ArrowId> = p.arrows().iter().map(|a| self.amap[a.0]).collect();
                self.host.is_nonzero_monomial(&image)
            });
        }
        let a = ArrowId(idx);
        let s = self.vmap[pq.source(a).0].expect("placed");
        let t = self.vmap[pq.target(a).0].expect("placed");
        let candidates: Vec<ArrowId> = hq.arrows_between(s, t).collect();
        for c in candidates {
            if self.aused[c.0] {
                continue;
            }
            self.aused[c.0] = true;
            self.amap.push(c);
            if self.arrows(idx + 1) {
                return true;
            }
            self.amap.pop();
            self.aused[c.0] = false;
        }
        false
    }
}

/// Some path algebra of type `A3` (any orientation) is a quotient of `host`.
pub fn contains_some_a3_quotient(host: &AlgebraPresentation) -> bool {
    ["A3++", "A3+-", "A3-+"].iter().any(|n| contains_quotient(host, &pattern(n).expect("fixed name")))
}

/// Catalog names isomorphic to `host`, parametric instances included.
pub fn match_named(host: &AlgebraPresentation) -> Vec<String> {
    let mut names: Vec<String> =
        FIXED_NAMES.iter().filter(|n| fixed(n).is_some_and(|p| isomorphic(&p, host))).map(|n| n.to_string()).collect();
    let n = host.vertex_count();
    let kind = graph_shape(host.quiver()).kind;
    let rad2 = host.is_monomial() && host.is_radical_square_zero();
    let linear =
        matches!(&kind, ShapeKind::Line(eps) if eps.chars().all(|c| c == '+') || eps.chars().all(|c| c == '-'));
    if rad2 && linear {
        names.push(format!("N({n})"));
    }
    if rad2 && matches!(kind, ShapeKind::OrientedCycle(_) | ShapeKind::TwoPointCycle | ShapeKind::SingleVertexLoop) {
        names.push(format!("Ncirc({n})"));
    }
    if let Some(k) = local_power(host) {
        names.push(format!("local({k})"));
    }
    names
}

/// `Some(n)` when `p` is `k[x]/(x^n)`.
pub fn local_power(p: &AlgebraPresentation) -> Option<usize> {
    if p.vertex_count() != 1 || p.quiver().arrow_count() != 1 || !p.is_monomial() {
        return None;
    }
    match p.minimal_zero_paths().as_slice() {
        [z] => Some(z.len()),
        _ => None,
    }
}
