//! Separated quivers, Dynkin/Euclidean recognition, and the finiteness
//! criterion for radical-square-zero algebras.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::AlgebraPresentation;
use crate::quiver::Quiver;
use crate::{Error, Result};

/// Vertex `i+` is `2i`, vertex `i-` is `2i + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SepVertex(pub usize);

impl SepVertex {
    pub fn plus(i: usize) -> Self {
        SepVertex(2 * i)
    }
    pub fn minus(i: usize) -> Self {
        SepVertex(2 * i + 1)
    }
    pub fn base(self) -> usize {
        self.0 / 2
    }
    pub fn is_plus(self) -> bool {
        self.0.is_multiple_of(2)
    }
}

/// Undirected multigraph; edges are unordered pairs of vertex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedGraph {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
}

impl UndirectedGraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Self {
        UndirectedGraph { vertex_count, edges }
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return false;
        }
        let comps = components(self.vertex_count, &self.edges);
        comps.len() == 1
    }
}

fn components(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut root_slot: Vec<Option<usize>> = vec![None; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        match root_slot[r] {
            Some(k) => groups[k].push(v),
            None => {
                root_slot[r] = Some(groups.len());
                groups.push(vec![v]);
            }
        }
    }
    groups
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatedComponent {
    /// Sorted.
    pub vertices: Vec<SepVertex>,
    /// Arrows `i+ -> j-`, in arrow order of the base quiver.
    pub arrows: Vec<(SepVertex, SepVertex)>,
}

impl SeparatedComponent {
    pub fn graph(&self) -> UndirectedGraph {
        let pos = |v: SepVertex| self.vertices.binary_search(&v).expect("member");
        UndirectedGraph::new(self.vertices.len(), self.arrows.iter().map(|&(s, t)| (pos(s), pos(t))).collect())
    }

    pub fn graph_type(&self) -> GraphType {
        classify_component(&self.graph())
    }
}

/// Bipartite quiver on `{i+, i-}` with an arrow `s(a)+ -> t(a)-` per arrow
/// `a`. Components are ordered by their smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatedGraph {
    pub vertex_count: usize,
    pub arrows: Vec<(SepVertex, SepVertex)>,
    pub components: Vec<SeparatedComponent>,
}

pub fn separated_quiver(q: &Quiver) -> SeparatedGraph {
    let n = 2 * q.vertex_count();
    let arrows: Vec<(SepVertex, SepVertex)> =
        q.arrows().iter().map(|a| (SepVertex::plus(a.source.0), SepVertex::minus(a.target.0))).collect();
    let edges: Vec<(usize, usize)> = arrows.iter().map(|(s, t)| (s.0, t.0)).collect();
    let components = components(n, &edges)
        .into_iter()
        .map(|vs| {
            let vertices: Vec<SepVertex> = vs.into_iter().map(SepVertex).collect();
            let arrows = arrows.iter().copied().filter(|(s, _)| vertices.binary_search(s).is_ok()).collect();
            SeparatedComponent { vertices, arrows }
        })
        .collect();
    SeparatedGraph { vertex_count: n, arrows, components }
}

impl SeparatedGraph {
    pub fn vertex_name(q: &Quiver, v: SepVertex) -> String {
        format!("{}{}", q.label(crate::VertexId(v.base())), if v.is_plus() { '+' } else { '-' })
    }
}

/// Dynkin and Euclidean (extended Dynkin) types. Indices follow the usual
/// convention: `A(n)` and `D(n)` have `n` vertices, `ExtendedA(n)` and
/// `ExtendedD(n)` have `n + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GraphType {
    A(usize),
    D(usize),
    E(usize),
    ExtendedA(usize),
    ExtendedD(usize),
    ExtendedE(usize),
    Other,
}

impl GraphType {
    pub fn is_dynkin(self) -> bool {
        matches!(self, GraphType::A(_) | GraphType::D(_) | GraphType::E(_))
    }

    pub fn is_extended(self) -> bool {
        matches!(self, GraphType::ExtendedA(_) | GraphType::ExtendedD(_) | GraphType::ExtendedE(_))
    }
}

impl fmt::Display for GraphType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphType::A(n) => write!(f, "A({n})"),
            GraphType::D(n) => write!(f, "D({n})"),
            GraphType::E(n) => write!(f, "E({n})"),
            GraphType::ExtendedA(n) => write!(f, "ExtendedA({n})"),
            GraphType::ExtendedD(n) => write!(f, "ExtendedD({n})"),
            GraphType::ExtendedE(n) => write!(f, "ExtendedE({n})"),
            GraphType::Other => f.write_str("Other"),
        }
    }
}

/// Recognises a connected undirected multigraph by degrees and arm lengths.
pub fn classify_component(g: &UndirectedGraph) -> GraphType {
    let n = g.vertex_count;
    let m = g.edges.len();
    if n == 0 {
        return GraphType::Other;
    }
    if g.edges.iter().any(|&(a, b)| a == b) {
        return if n == 1 && m == 1 { GraphType::ExtendedA(0) } else { GraphType::Other };
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in &g.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    for list in &mut adj {
        let before = list.len();
        list.sort();
        list.dedup();
        if list.len() != before {
            // parallel edges: only the Kronecker graph is Euclidean
            return if n == 2 && m == 2 { GraphType::ExtendedA(1) } else { GraphType::Other };
        }
    }
    let deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    if m == n {
        return if deg.iter().all(|&d| d == 2) { GraphType::ExtendedA(n - 1) } else { GraphType::Other };
    }
    if m + 1 != n {
        return GraphType::Other;
    }
    // tree
    let branch: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
    match branch.as_slice() {
        [] => GraphType::A(n),
        [c] => {
            let c = *c;
            let mut arms: Vec<usize> = adj[c].iter().map(|&w| arm_length(&adj, c, w)).collect();
            arms.sort();
            match (deg[c], arms.as_slice()) {
                (4, [1, 1, 1, 1]) => GraphType::ExtendedD(4),
                (3, [1, 1, r]) => GraphType::D(r + 3),
                (3, [1, 2, 2]) => GraphType::E(6),
                (3, [1, 2, 3]) => GraphType::E(7),
                (3, [1, 2, 4]) => GraphType::E(8),
                (3, [2, 2, 2]) => GraphType::ExtendedE(6),
                (3, [1, 3, 3]) => GraphType::ExtendedE(7),
                (3, [1, 2, 5]) => GraphType::ExtendedE(8),
                _ => GraphType::Other,
            }
        }
        [b1, b2] => {
            let forked = |c: usize| deg[c] == 3 && adj[c].iter().filter(|&&w| deg[w] == 1).count() >= 2;
            if forked(*b1) && forked(*b2) {
                GraphType::ExtendedD(n - 1)
            } else {
                GraphType::Other
            }
        }
        _ => GraphType::Other,
    }
}

/// Vertices on the arm leaving `centre` through `first`, stopping at a leaf
/// or another branch vertex (which is counted).
fn arm_length(adj: &[Vec<usize>], centre: usize, first: usize) -> usize {
    let (mut prev, mut cur, mut len) = (centre, first, 1);
    while adj[cur].len() == 2 {
        let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
        prev = cur;
        cur = next;
        len += 1;
    }
    len
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Finiteness {
    Finite,
    Infinite,
}

/// Finiteness of a radical-square-zero algebra: finite iff every component
/// of the separated quiver is Dynkin.
pub fn gabriel_criterion(p: &AlgebraPresentation) -> Result<Finiteness> {
    if !p.is_radical_square_zero() {
        return Err(Error::NotRadicalSquareZero);
    }
    let sep = separated_quiver(p.quiver());
    let finite = sep.components.iter().all(|c| c.graph_type().is_dynkin());
    Ok(if finite { Finiteness::Finite } else { Finiteness::Infinite })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleOutcome {
    Infinite,
    Inconclusive,
}

/// One-sided test through the radical-square-zero quotient: a
/// representation-finite algebra has representation-finite quotients, so an
/// infinite quotient proves the algebra infinite. Never answers "finite".
pub fn sound_infinite_test(p: &AlgebraPresentation) -> OracleOutcome {
    match gabriel_criterion(&p.radical_square_zero_quotient()) {
        Ok(Finiteness::Infinite) => OracleOutcome::Infinite,
        _ => OracleOutcome::Inconclusive,
    }
}

/// A non-Dynkin component of the radical-square-zero quotient, if any.
pub fn first_non_dynkin(p: &AlgebraPresentation) -> Option<(SeparatedComponent, GraphType)> {
    separated_quiver(p.quiver())
        .components
        .into_iter()
        .map(|c| {
            let t = c.graph_type();
            (c, t)
        })
        .find(|(_, t)| !t.is_dynkin())
}
