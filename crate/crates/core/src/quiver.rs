//! Finite quivers (directed multigraphs with named vertices and arrows) and
//! paths in them.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArrowId(pub usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

impl Arrow {
    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }
}

/// A finite quiver. Vertex labels and arrow names are unique; every arrow
/// endpoint is a vertex of the quiver. Parallel arrows and loops are allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a quiver from vertex labels and `(name, source, target)` triples.
    pub fn from_parts<V, A>(vertices: V, arrows: A) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: AsRef<str>,
        A: IntoIterator<Item = (String, String, String)>,
    {
        let mut q = Quiver::new();
        for v in vertices {
            q.add_vertex(v.as_ref())?;
        }
        for (name, s, t) in arrows {
            let s = q.vertex_by_label(&s).ok_or(Error::UnknownVertex(s))?;
            let t = q.vertex_by_label(&t).ok_or(Error::UnknownVertex(t))?;
            q.add_arrow(&name, s, t)?;
        }
        Ok(q)
    }

    pub fn add_vertex(&mut self, label: &str) -> Result<VertexId> {
        if self.vertex_by_label(label).is_some() {
            return Err(Error::DuplicateVertex(label.to_string()));
        }
        self.vertices.push(label.to_string());
        Ok(VertexId(self.vertices.len() - 1))
    }

    pub fn add_arrow(&mut self, name: &str, source: VertexId, target: VertexId) -> Result<ArrowId> {
        for v in [source, target] {
            if v.0 >= self.vertices.len() {
                return Err(Error::UnknownVertex(alloc::format!("#{}", v.0)));
            }
        }
        if self.arrow_by_name(name).is_some() {
            return Err(Error::DuplicateArrow(name.to_string()));
        }
        self.arrows.push(Arrow { name: name.to_string(), source, target });
        Ok(ArrowId(self.arrows.len() - 1))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn arrow_ids(&self) -> impl Iterator<Item = ArrowId> + '_ {
        (0..self.arrows.len()).map(ArrowId)
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a.0]
    }

    pub fn source(&self, a: ArrowId) -> VertexId {
        self.arrows[a.0].source
    }

    pub fn target(&self, a: ArrowId) -> VertexId {
        self.arrows[a.0].target
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.vertices.iter().position(|l| l == label).map(VertexId)
    }

    pub fn arrow_by_name(&self, name: &str) -> Option<ArrowId> {
        self.arrows.iter().position(|a| a.name == name).map(ArrowId)
    }

    pub fn out_arrows(&self, v: VertexId) -> impl Iterator<Item = ArrowId> + '_ {
        self.arrow_ids().filter(move |&a| self.source(a) == v)
    }

    pub fn in_arrows(&self, v: VertexId) -> impl Iterator<Item = ArrowId> + '_ {
        self.arrow_ids().filter(move |&a| self.target(a) == v)
    }

    /// Arrows from `s` to `t`.
    pub fn arrows_between(&self, s: VertexId, t: VertexId) -> impl Iterator<Item = ArrowId> + '_ {
        self.arrow_ids().filter(move |&a| self.source(a) == s && self.target(a) == t)
    }

    /// Distinct neighbours of `v` in the underlying graph, `v` itself excluded.
    pub fn neighbours(&self, v: VertexId) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = self
            .arrows
            .iter()
            .filter_map(|a| {
                if a.source == v && a.target != v {
                    Some(a.target)
                } else if a.target == v && a.source != v {
                    Some(a.source)
                } else {
                    None
                }
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn has_loop(&self) -> bool {
        self.arrows.iter().any(Arrow::is_loop)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in self.neighbours(VertexId(v)) {
                if !seen[w.0] {
                    seen[w.0] = true;
                    stack.push(w.0);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// True when the quiver has an oriented cycle (loops included).
    pub fn has_oriented_cycle(&self) -> bool {
        // Kahn's algorithm; loops never get removed.
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target.0] += 1;
        }
        let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = queue.pop() {
            removed += 1;
            for a in &self.arrows {
                if a.source.0 == v {
                    indeg[a.target.0] -= 1;
                    if indeg[a.target.0] == 0 {
                        queue.push(a.target.0);
                    }
                }
            }
        }
        removed < n
    }

    /// The quiver with every arrow reversed.
    pub fn reversed(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }
}

/// A path: either trivial (a vertex, no arrows) or a composable arrow
/// sequence, read left to right.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    start: VertexId,
    end: VertexId,
    arrows: Vec<ArrowId>,
}

impl Path {
    pub fn trivial(v: VertexId) -> Self {
        Path { start: v, end: v, arrows: Vec::new() }
    }

    /// Checks that consecutive arrows compose (target of each is the source
    /// of the next). An empty arrow list is rejected; use [`Path::trivial`].
    pub fn new(q: &Quiver, arrows: Vec<ArrowId>) -> Result<Self> {
        let first = *arrows.first().ok_or(Error::EmptyPath)?;
        for a in &arrows {
            if a.0 >= q.arrow_count() {
                return Err(Error::UnknownArrow(alloc::format!("#{}", a.0)));
            }
        }
        for w in arrows.windows(2) {
            if q.target(w[0]) != q.source(w[1]) {
                return Err(Error::NotComposable {
                    first: q.arrow(w[0]).name.clone(),
                    second: q.arrow(w[1]).name.clone(),
                });
            }
        }
        let last = *arrows.last().unwrap();
        Ok(Path { start: q.source(first), end: q.target(last), arrows })
    }

    /// Builds a path from arrow names.
    pub fn from_names(q: &Quiver, names: &[&str]) -> Result<Self> {
        let ids = names
            .iter()
            .map(|n| q.arrow_by_name(n).ok_or_else(|| Error::UnknownArrow(n.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Path::new(q, ids)
    }

    pub fn source(&self) -> VertexId {
        self.start
    }

    pub fn target(&self) -> VertexId {
        self.end
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    /// Appends `a`; the caller guarantees that `a` starts at the end of `self`.
    pub(crate) fn extended(&self, q: &Quiver, a: ArrowId) -> Path {
        debug_assert_eq!(q.source(a), self.end);
        let mut arrows = self.arrows.clone();
        arrows.push(a);
        Path { start: self.start, end: q.target(a), arrows }
    }

    /// The same arrows read backwards, as a path of the reversed quiver.
    pub fn reversed(&self) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.reverse();
        Path { start: self.end, end: self.start, arrows }
    }

    /// Does `sub` occur in `self` as a contiguous run of arrows?
    pub fn contains_subpath(&self, sub: &[ArrowId]) -> bool {
        !sub.is_empty() && self.arrows.windows(sub.len()).any(|w| w == sub)
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            return alloc::format!("e_{}", q.label(self.start));
        }
        let names: Vec<&str> = self.arrows.iter().map(|&a| q.arrow(a).name.as_str()).collect();
        names.join("*")
    }
}
