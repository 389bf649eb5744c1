//! Bound quiver algebras given by zero relations and (for tensor products)
//! commutativity squares.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::quiver::{ArrowId, Path, Quiver, VertexId};
use crate::{Error, Result};

/// Relations of a presentation. Zero paths have length at least two; the two
/// sides of a commutativity pair share source and target and have length at
/// least two.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RelationSet {
    zero_paths: Vec<Path>,
    commutativity: Vec<(Path, Path)>,
}

impl RelationSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn zero_paths(&self) -> &[Path] {
        &self.zero_paths
    }

    pub fn commutativity_pairs(&self) -> &[(Path, Path)] {
        &self.commutativity
    }

    pub fn add_zero(&mut self, p: Path) -> Result<()> {
        if p.len() < 2 {
            return Err(Error::RelationTooShort(p.len()));
        }
        if !self.zero_paths.contains(&p) {
            self.zero_paths.push(p);
        }
        Ok(())
    }

    pub fn add_commutativity(&mut self, p: Path, q: Path) -> Result<()> {
        if p.len() < 2 {
            return Err(Error::RelationTooShort(p.len()));
        }
        if q.len() < 2 {
            return Err(Error::RelationTooShort(q.len()));
        }
        if p.source() != q.source() || p.target() != q.target() {
            return Err(Error::CommutativityEndpoints);
        }
        self.commutativity.push((p, q));
        Ok(())
    }

    pub fn is_monomial(&self) -> bool {
        self.commutativity.is_empty()
    }
}

/// `kQ/I` with `I` generated by the relation set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPresentation {
    quiver: Quiver,
    relations: RelationSet,
}

/// Outcome of [`AlgebraPresentation::validate`]. Double arrows and double
/// loops are reported rather than rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub connected: bool,
    pub finite_dimensional: bool,
    /// Pairs `(s, t)`, `s != t`, joined by at least two arrows `s -> t`.
    pub double_arrows: Vec<(VertexId, VertexId)>,
    /// Vertices carrying at least two loops.
    pub double_loops: Vec<VertexId>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.connected && self.finite_dimensional
    }

    pub fn has_double_arrow(&self) -> bool {
        !self.double_arrows.is_empty() || !self.double_loops.is_empty()
    }
}

impl AlgebraPresentation {
    pub fn new(quiver: Quiver, relations: RelationSet) -> Self {
        AlgebraPresentation { quiver, relations }
    }

    /// Path algebra with no relations.
    pub fn hereditary(quiver: Quiver) -> Self {
        Self::new(quiver, RelationSet::new())
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &RelationSet {
        &self.relations
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn is_monomial(&self) -> bool {
        self.relations.is_monomial()
    }

    /// Adds the zero relation spelled by arrow names.
    pub fn add_zero(&mut self, names: &[&str]) -> Result<()> {
        let p = Path::from_names(&self.quiver, names)?;
        self.relations.add_zero(p)
    }

    pub fn with_zero(mut self, names: &[&str]) -> Result<Self> {
        self.add_zero(names)?;
        Ok(self)
    }

    pub fn add_zero_path(&mut self, p: Path) -> Result<()> {
        self.relations.add_zero(p)
    }

    pub fn add_commutativity(&mut self, lhs: &[&str], rhs: &[&str]) -> Result<()> {
        let p = Path::from_names(&self.quiver, lhs)?;
        let q = Path::from_names(&self.quiver, rhs)?;
        self.relations.add_commutativity(p, q)
    }

    pub fn add_commutativity_paths(&mut self, p: Path, q: Path) -> Result<()> {
        self.relations.add_commutativity(p, q)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut parallel: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
        for a in self.quiver.arrows() {
            *parallel.entry((a.source, a.target)).or_default() += 1;
        }
        let mut double_arrows = Vec::new();
        let mut double_loops = Vec::new();
        for (&(s, t), &count) in &parallel {
            if count >= 2 {
                if s == t {
                    double_loops.push(s);
                } else {
                    double_arrows.push((s, t));
                }
            }
        }
        ValidationReport {
            connected: self.quiver.is_connected(),
            finite_dimensional: self.is_finite_dimensional(),
            double_arrows,
            double_loops,
        }
    }

    /// Zero paths that do not contain another zero path as a proper
    /// contiguous subpath. They generate the same monomial ideal.
    pub fn minimal_zero_paths(&self) -> Vec<Path> {
        let zs = self.relations.zero_paths();
        let mut out: Vec<Path> = zs
            .iter()
            .filter(|p| !zs.iter().any(|q| q.len() < p.len() && p.contains_subpath(q.arrows())))
            .cloned()
            .collect();
        out.sort();
        out.dedup();
        out
    }

    fn zero_index(&self) -> ZeroIndex {
        ZeroIndex::new(self.relations.zero_paths())
    }

    /// Is the arrow sequence free of zero subpaths? Commutativity pairs are
    /// ignored.
    pub fn is_nonzero_monomial(&self, arrows: &[ArrowId]) -> bool {
        self.zero_index().is_nonzero(arrows)
    }

    /// Nonzero paths (trivial ones included) under the zero relations only.
    /// `max_len = None` enumerates everything and fails if that set is
    /// infinite.
    pub fn nonzero_paths(&self, max_len: Option<usize>) -> Result<Vec<Path>> {
        if max_len.is_none() && !self.monomial_part_is_finite() {
            return Err(Error::InfiniteDimensional);
        }
        let idx = self.zero_index();
        let mut out: Vec<Path> = self.quiver.vertices().map(Path::trivial).collect();
        let mut frontier: Vec<Path> = Vec::new();
        if max_len.is_none_or(|m| m >= 1) {
            for a in self.quiver.arrow_ids() {
                frontier.push(Path::new(&self.quiver, vec![a]).expect("single arrow"));
            }
        }
        let mut len = 1;
        while !frontier.is_empty() {
            out.extend(frontier.iter().cloned());
            if max_len.is_some_and(|m| len >= m) {
                break;
            }
            let mut next = Vec::new();
            for p in &frontier {
                for a in self.quiver.out_arrows(p.target()) {
                    if idx.extension_is_nonzero(p.arrows(), a) {
                        next.push(p.extended(&self.quiver, a));
                    }
                }
            }
            frontier = next;
            len += 1;
        }
        Ok(out)
    }

    /// Nonzero paths of exactly length `len` (monomial semantics).
    pub fn nonzero_paths_of_length(&self, len: usize) -> Vec<Path> {
        let mut v = self.nonzero_paths(Some(len)).unwrap_or_default();
        v.retain(|p| p.len() == len);
        v
    }

    /// `rad^k A = 0`, i.e. every path of length `k` is zero. Commutativity
    /// pairs are ignored.
    pub fn radical_power_vanishes(&self, k: usize) -> bool {
        self.nonzero_paths_of_length(k).is_empty()
    }

    pub fn is_radical_square_zero(&self) -> bool {
        self.radical_power_vanishes(2)
    }

    /// Finite dimensionality of the monomial part (commutativity ignored).
    ///
    /// Exact: a state is the last `L - 1` arrows of a nonzero path (`L` the
    /// longest zero relation), and the nonzero paths are unbounded iff the
    /// reachable state graph has a cycle.
    fn monomial_part_is_finite(&self) -> bool {
        if !self.quiver.has_oriented_cycle() {
            return true;
        }
        let idx = self.zero_index();
        let Some(max_rel) = idx.max_len() else {
            return false;
        };
        let keep = max_rel - 1;
        // 0 = unvisited, 1 = on stack, 2 = done
        let mut colour: BTreeMap<Vec<ArrowId>, u8> = BTreeMap::new();
        let succ = |state: &[ArrowId]| -> Vec<Vec<ArrowId>> {
            let end = self.quiver.target(*state.last().unwrap());
            self.quiver
                .out_arrows(end)
                .filter(|&a| idx.extension_is_nonzero(state, a))
                .map(|a| {
                    let mut s: Vec<ArrowId> = state.to_vec();
                    s.push(a);
                    if s.len() > keep {
                        s.drain(..s.len() - keep);
                    }
                    s
                })
                .collect()
        };
        for a in self.quiver.arrow_ids() {
            let start = vec![a];
            if colour.get(&start).copied().unwrap_or(0) != 0 {
                continue;
            }
            // iterative DFS
            let mut stack: Vec<(Vec<ArrowId>, Vec<Vec<ArrowId>>)> = Vec::new();
            colour.insert(start.clone(), 1);
            let s = succ(&start);
            stack.push((start, s));
            while let Some((node, children)) = stack.last_mut() {
                if let Some(child) = children.pop() {
                    match colour.get(&child).copied().unwrap_or(0) {
                        1 => return false,
                        2 => {}
                        _ => {
                            colour.insert(child.clone(), 1);
                            let cs = succ(&child);
                            stack.push((child, cs));
                        }
                    }
                } else {
                    colour.insert(node.clone(), 2);
                    stack.pop();
                }
            }
        }
        true
    }

    /// Finite dimensionality of `kQ/I`. Commutativity pairs only identify
    /// paths, so a finite monomial part settles it; otherwise nonzero path
    /// classes (modulo the commutativity moves) are enumerated by length until
    /// they die out or a length cap is reached.
    pub fn is_finite_dimensional(&self) -> bool {
        if self.monomial_part_is_finite() {
            return true;
        }
        if self.is_monomial() {
            return false;
        }
        let idx = self.zero_index();
        let max_rel = idx
            .max_len()
            .into_iter()
            .chain(self.relations.commutativity.iter().map(|(p, _)| p.len()))
            .max()
            .unwrap_or(1);
        let cap = 2 * (self.vertex_count() + 1) * (max_rel + 1);
        let mut layer: BTreeSet<Vec<ArrowId>> = self.quiver.arrow_ids().map(|a| vec![a]).collect();
        for _ in 0..cap {
            let mut next = BTreeSet::new();
            for p in &layer {
                let end = self.quiver.target(*p.last().unwrap());
                for a in self.quiver.out_arrows(end) {
                    let mut w = p.clone();
                    w.push(a);
                    if let Some(rep) = self.class_representative(&idx, w) {
                        next.insert(rep);
                    }
                }
            }
            if next.is_empty() {
                return true;
            }
            layer = next;
        }
        false
    }

    /// Smallest member of the commutativity class of `w`, or `None` when the
    /// class contains a path with a zero subpath.
    fn class_representative(&self, idx: &ZeroIndex, w: Vec<ArrowId>) -> Option<Vec<ArrowId>> {
        let mut seen: BTreeSet<Vec<ArrowId>> = BTreeSet::new();
        let mut stack = vec![w];
        while let Some(p) = stack.pop() {
            if !seen.insert(p.clone()) {
                continue;
            }
            if !idx.is_nonzero(&p) {
                return None;
            }
            for (l, r) in &self.relations.commutativity {
                for (from, to) in [(l.arrows(), r.arrows()), (r.arrows(), l.arrows())] {
                    if from.len() > p.len() {
                        continue;
                    }
                    for i in 0..=p.len() - from.len() {
                        if &p[i..i + from.len()] == from {
                            let mut q = Vec::with_capacity(p.len() - from.len() + to.len());
                            q.extend_from_slice(&p[..i]);
                            q.extend_from_slice(to);
                            q.extend_from_slice(&p[i + from.len()..]);
                            if !seen.contains(&q) {
                                stack.push(q);
                            }
                        }
                    }
                }
            }
        }
        seen.into_iter().next()
    }

    /// Same quiver, every length-two path declared zero.
    pub fn radical_square_zero_quotient(&self) -> AlgebraPresentation {
        let q = &self.quiver;
        let mut rel = RelationSet::new();
        for a in q.arrow_ids() {
            for b in q.out_arrows(q.target(a)) {
                rel.add_zero(Path::new(q, vec![a, b]).expect("composable")).expect("length two");
            }
        }
        AlgebraPresentation::new(q.clone(), rel)
    }

    /// The opposite algebra: arrows and relations reversed.
    pub fn opposite(&self) -> AlgebraPresentation {
        let relations = RelationSet {
            zero_paths: self.relations.zero_paths.iter().map(Path::reversed).collect(),
            commutativity: self.relations.commutativity.iter().map(|(p, q)| (p.reversed(), q.reversed())).collect(),
        };
        AlgebraPresentation::new(self.quiver.reversed(), relations)
    }

    /// Restriction to a set of vertices and arrows between them. Zero paths
    /// that survive are kept; relations through deleted pieces vanish.
    pub fn restrict(&self, keep_vertices: &[VertexId], keep_arrows: &[ArrowId]) -> AlgebraPresentation {
        let mut q = Quiver::new();
        let mut vmap = BTreeMap::new();
        for &v in keep_vertices {
            let id = q.add_vertex(self.quiver.label(v)).expect("distinct labels");
            vmap.insert(v, id);
        }
        let mut amap = BTreeMap::new();
        for &a in keep_arrows {
            let arr = self.quiver.arrow(a);
            let (Some(&s), Some(&t)) = (vmap.get(&arr.source), vmap.get(&arr.target)) else {
                continue;
            };
            amap.insert(a, q.add_arrow(&arr.name, s, t).expect("distinct names"));
        }
        let mut rel = RelationSet::new();
        for z in self.relations.zero_paths() {
            let mapped: Option<Vec<ArrowId>> = z.arrows().iter().map(|a| amap.get(a).copied()).collect();
            if let Some(m) = mapped {
                rel.add_zero(Path::new(&q, m).expect("composable")).expect("length kept");
            }
        }
        AlgebraPresentation::new(q, rel)
    }
}

/// Lookup structure for "does this arrow word contain a zero path".
pub(crate) struct ZeroIndex {
    by_last: BTreeMap<ArrowId, Vec<Vec<ArrowId>>>,
    max_len: Option<usize>,
}

impl ZeroIndex {
    pub(crate) fn new(zero_paths: &[Path]) -> Self {
        let mut by_last: BTreeMap<ArrowId, Vec<Vec<ArrowId>>> = BTreeMap::new();
        let mut max_len = None;
        for z in zero_paths {
            let arrows = z.arrows().to_vec();
            max_len = max_len.max(Some(arrows.len()));
            by_last.entry(*arrows.last().unwrap()).or_default().push(arrows);
        }
        ZeroIndex { by_last, max_len }
    }

    pub(crate) fn max_len(&self) -> Option<usize> {
        self.max_len
    }

    /// Given a nonzero `prefix`, is `prefix + a` still nonzero?
    pub(crate) fn extension_is_nonzero(&self, prefix: &[ArrowId], a: ArrowId) -> bool {
        let Some(cands) = self.by_last.get(&a) else {
            return true;
        };
        cands.iter().all(|z| {
            let k = z.len() - 1;
            !(k <= prefix.len() && prefix[prefix.len() - k..] == z[..k])
        })
    }

    pub(crate) fn is_nonzero(&self, word: &[ArrowId]) -> bool {
        (1..word.len()).all(|i| self.extension_is_nonzero(&word[..i], word[i]))
    }
}
