//! Shape of the underlying graph of a quiver.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::AlgebraPresentation;
use crate::quiver::{ArrowId, Quiver, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShapeKind {
    /// Underlying graph is a path; the word is read from the endpoint with the
    /// smaller vertex index (`+` for `i -> i+1`). One vertex gives `""`.
    Line(String),
    /// `1 -> 2 -> ... -> n -> 1` with `n >= 3`.
    OrientedCycle(usize),
    /// Underlying cycle (`n >= 3`) with at least one sink.
    ZigzagCycle(usize, String),
    /// One vertex, one loop.
    SingleVertexLoop,
    /// `1 <-> 2`: exactly one arrow each way.
    TwoPointCycle,
    /// Acyclic underlying graph that is not a path.
    Tree,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphShape {
    pub kind: ShapeKind,
    pub has_loop: bool,
    pub has_double_arrow: bool,
    /// Some vertex has at least three distinct neighbours (a `D4` subgraph).
    pub has_d4_vertex: bool,
    /// The underlying graph (loops and parallel edges included) has a cycle.
    pub has_graph_cycle: bool,
}

impl GraphShape {
    /// Length of the oriented cycle for the three periodic shapes.
    pub fn period(&self) -> Option<usize> {
        match self.kind {
            ShapeKind::SingleVertexLoop => Some(1),
            ShapeKind::TwoPointCycle => Some(2),
            ShapeKind::OrientedCycle(n) => Some(n),
            _ => None,
        }
    }

    pub fn is_line(&self) -> bool {
        matches!(self.kind, ShapeKind::Line(_))
    }
}

/// Classifies the underlying graph of a connected quiver.
pub fn graph_shape(q: &Quiver) -> GraphShape {
    let n = q.vertex_count();
    let m = q.arrow_count();
    let has_loop = q.has_loop();
    let has_double_arrow = q
        .arrows()
        .iter()
        .enumerate()
        .any(|(i, a)| q.arrows()[i + 1..].iter().any(|b| b.source == a.source && b.target == a.target));
    let has_d4_vertex = q.vertices().any(|v| q.neighbours(v).len() >= 3);
    let has_graph_cycle = n > 0 && m >= n;
    let kind = shape_kind(q, has_loop, has_double_arrow);
    GraphShape { kind, has_loop, has_double_arrow, has_d4_vertex, has_graph_cycle }
}

fn shape_kind(q: &Quiver, has_loop: bool, has_double_arrow: bool) -> ShapeKind {
    let n = q.vertex_count();
    let m = q.arrow_count();
    if !q.is_connected() {
        return ShapeKind::Other;
    }
    if n == 1 {
        return match m {
            0 => ShapeKind::Line(String::new()),
            1 => ShapeKind::SingleVertexLoop,
            _ => ShapeKind::Other,
        };
    }
    if has_loop || has_double_arrow {
        return ShapeKind::Other;
    }
    if n == 2 && m == 2 {
        // no double arrow, so one arrow each way
        return ShapeKind::TwoPointCycle;
    }
    let max_deg = q.vertices().map(|v| q.neighbours(v).len()).max().unwrap_or(0);
    if m == n - 1 {
        if max_deg <= 2 {
            let t = Traversal::of_line(q).expect("path graph");
            return ShapeKind::Line(t.word(q));
        }
        return ShapeKind::Tree;
    }
    if m == n && max_deg == 2 && q.vertices().all(|v| q.neighbours(v).len() == 2) {
        let t = Traversal::of_cycle(q).expect("cycle graph");
        let signs = t.signs(q);
        if signs.iter().all(|&s| s) || signs.iter().all(|&s| !s) {
            return ShapeKind::OrientedCycle(n);
        }
        return ShapeKind::ZigzagCycle(n, t.word(q));
    }
    ShapeKind::Other
}

/// Nakayama: linearly oriented line, oriented cycle, or a single loop.
pub fn is_nakayama(p: &AlgebraPresentation) -> bool {
    match graph_shape(p.quiver()).kind {
        ShapeKind::Line(eps) => eps.chars().all(|c| c == '+') || eps.chars().all(|c| c == '-'),
        ShapeKind::OrientedCycle(_) | ShapeKind::TwoPointCycle | ShapeKind::SingleVertexLoop => true,
        _ => false,
    }
}

/// A walk along a line or cycle: `arrows[i]` joins `vertices[i]` and
/// `vertices[i + 1]` (cyclically when `cyclic`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Traversal {
    pub cyclic: bool,
    pub vertices: Vec<VertexId>,
    pub arrows: Vec<ArrowId>,
}

impl Traversal {
    pub(crate) fn of_line(q: &Quiver) -> Option<Traversal> {
        let n = q.vertex_count();
        if n == 1 {
            return Some(Traversal { cyclic: false, vertices: vec![VertexId(0)], arrows: vec![] });
        }
        let start = q.vertices().find(|&v| q.neighbours(v).len() == 1)?;
        Self::walk(q, start, false)
    }

    pub(crate) fn of_cycle(q: &Quiver) -> Option<Traversal> {
        if q.vertex_count() == 0 {
            return None;
        }
        Self::walk(q, VertexId(0), true)
    }

    fn walk(q: &Quiver, start: VertexId, cyclic: bool) -> Option<Traversal> {
        let n = q.vertex_count();
        let mut used = vec![false; q.arrow_count()];
        let mut vertices = vec![start];
        let mut arrows = Vec::new();
        let mut cur = start;
        let steps = if cyclic { n } else { n - 1 };
        for _ in 0..steps {
            let next = q.arrow_ids().find(|&a| !used[a.0] && (q.source(a) == cur || q.target(a) == cur))?;
            used[next.0] = true;
            let other = if q.source(next) == cur { q.target(next) } else { q.source(next) };
            arrows.push(next);
            cur = other;
            if vertices.len() < n {
                vertices.push(other);
            }
        }
        if cyclic && cur != start {
            return None;
        }
        Some(Traversal { cyclic, vertices, arrows })
    }

    pub(crate) fn len(&self) -> usize {
        self.vertices.len()
    }

    /// `true` when `arrows[i]` points from `vertices[i]` to the next vertex.
    pub(crate) fn signs(&self, q: &Quiver) -> Vec<bool> {
        (0..self.arrows.len()).map(|i| q.source(self.arrows[i]) == self.vertices[i]).collect()
    }

    pub(crate) fn word(&self, q: &Quiver) -> String {
        self.signs(q).into_iter().map(|s| if s { '+' } else { '-' }).collect()
    }

    /// All traversals related by the symmetries of the shape: reversal for a
    /// line, rotations and reflections for a cycle.
    pub(crate) fn symmetries(&self) -> Vec<Traversal> {
        let n = self.len();
        if !self.cyclic {
            let mut rv = self.vertices.clone();
            rv.reverse();
            let mut ra = self.arrows.clone();
            ra.reverse();
            return vec![self.clone(), Traversal { cyclic: false, vertices: rv, arrows: ra }];
        }
        let mut out = Vec::with_capacity(2 * n);
        for r in 0..n {
            out.push(Traversal {
                cyclic: true,
                vertices: (0..n).map(|i| self.vertices[(r + i) % n]).collect(),
                arrows: (0..n).map(|i| self.arrows[(r + i) % n]).collect(),
            });
            out.push(Traversal {
                cyclic: true,
                vertices: (0..n).map(|i| self.vertices[(r + n - i) % n]).collect(),
                arrows: (0..n).map(|i| self.arrows[(r + 2 * n - i - 1) % n]).collect(),
            });
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn line_word() {
        let p = families::line("++").unwrap();
        assert_eq!(graph_shape(p.quiver()).kind, ShapeKind::Line("++".into()));
        let s = graph_shape(families::line("+--").unwrap().quiver());
        assert_eq!(s.kind, ShapeKind::Line("+--".into()));
        assert!(!s.has_graph_cycle && !s.has_d4_vertex);
    }

    #[test]
    fn oriented_cycle_five() {
        let s = graph_shape(families::cycle(5).quiver());
        assert_eq!(s.kind, ShapeKind::OrientedCycle(5));
        assert!(s.has_graph_cycle);
        assert_eq!(s.period(), Some(5));
    }

    #[test]
    fn star_is_tree_with_d4() {
        let s = graph_shape(families::d4("+++").unwrap().quiver());
        assert_eq!(s.kind, ShapeKind::Tree);
        assert!(s.has_d4_vertex);
        assert!(!s.has_graph_cycle);
    }

    #[test]
    fn small_cases() {
        assert_eq!(graph_shape(families::local(3).quiver()).kind, ShapeKind::SingleVertexLoop);
        assert_eq!(graph_shape(families::cycle(2).quiver()).kind, ShapeKind::TwoPointCycle);
        assert_eq!(graph_shape(families::simple().quiver()).kind, ShapeKind::Line(String::new()));
        let z = graph_shape(families::cycle_with("++-").unwrap().quiver());
        assert!(matches!(z.kind, ShapeKind::ZigzagCycle(3, _)));
        let k = graph_shape(families::cycle_with("+-").unwrap().quiver());
        assert_eq!(k.kind, ShapeKind::Other);
        assert!(k.has_double_arrow && k.has_graph_cycle);
    }

    #[test]
    fn nakayama_examples() {
        let c = families::cycle(4).with_zero(&["a2", "a3"]).unwrap().with_zero(&["a4", "a1"]).unwrap();
        assert!(is_nakayama(&c));
        assert!(is_nakayama(&families::n_line(7)));
        assert!(!is_nakayama(&families::line("+--").unwrap()));
    }

    #[test]
    fn cycle_symmetries_preserve_adjacency() {
        let q = families::cycle_with("+-+-+").unwrap();
        let t = Traversal::of_cycle(q.quiver()).unwrap();
        let syms = t.symmetries();
        assert_eq!(syms.len(), 10);
        for s in syms {
            for i in 0..5 {
                let a = s.arrows[i];
                let ends = [q.quiver().source(a), q.quiver().target(a)];
                assert!(ends.contains(&s.vertices[i]) && ends.contains(&s.vertices[(i + 1) % 5]));
            }
        }
    }
}
