//! Isomorphism-invariant keys for monomial algebras on lines and cycles, and
//! a backtracking isomorphism search for everything else.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::AlgebraPresentation;
use crate::quiver::{ArrowId, VertexId};
use crate::shape::{graph_shape, ShapeKind, Traversal};
use crate::{Error, Result};

/// Encoding of a presentation relative to one traversal of its line or cycle:
/// orientation signs plus each minimal zero path as
/// `(start position, runs forward, length)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey {
    cyclic: bool,
    size: usize,
    signs: Vec<bool>,
    zeros: Vec<(usize, bool, usize)>,
}

impl CanonicalKey {
    pub fn vertex_count(&self) -> usize {
        self.size
    }
}

fn encode(p: &AlgebraPresentation, t: &Traversal) -> CanonicalKey {
    let q = p.quiver();
    let signs = t.signs(q);
    let pos_of_vertex = |v: VertexId| t.vertices.iter().position(|&w| w == v).expect("on traversal");
    let pos_of_arrow = |a: ArrowId| t.arrows.iter().position(|&b| b == a).expect("on traversal");
    let mut zeros: Vec<(usize, bool, usize)> = p
        .minimal_zero_paths()
        .iter()
        .map(|z| {
            let start = pos_of_vertex(z.source());
            let first = z.arrows()[0];
            let i = pos_of_arrow(first);
            // forward when the first arrow leaves `start` towards position i+1
            let forward = i == start && signs[i];
            (start, forward, z.len())
        })
        .collect();
    zeros.sort();
    CanonicalKey { cyclic: t.cyclic, size: t.len(), signs, zeros }
}

fn base_traversal(p: &AlgebraPresentation) -> Result<Traversal> {
    if !p.is_monomial() {
        return Err(Error::NoCanonicalForm);
    }
    let q = p.quiver();
    match graph_shape(q).kind {
        ShapeKind::Line(_) => Traversal::of_line(q).ok_or(Error::NoCanonicalForm),
        ShapeKind::OrientedCycle(_)
        | ShapeKind::ZigzagCycle(..)
        | ShapeKind::SingleVertexLoop
        | ShapeKind::TwoPointCycle => Traversal::of_cycle(q).ok_or(Error::NoCanonicalForm),
        _ => Err(Error::NoCanonicalForm),
    }
}

/// Lexicographically least encoding over all symmetries of the shape.
pub fn canonical_form(p: &AlgebraPresentation) -> Result<CanonicalKey> {
    let base = base_traversal(p)?;
    Ok(base.symmetries().iter().map(|t| encode(p, t)).min().expect("at least one traversal"))
}

/// Isomorphism of monomial presentations on lines and cycles.
pub fn is_isomorphic(a: &AlgebraPresentation, b: &AlgebraPresentation) -> Result<bool> {
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Isomorphism by explicit search over vertex bijections: the quivers must
/// match arrow for arrow and carry minimal zero relations onto each other.
/// Commutativity pairs are compared as unordered pairs. Meant for small
/// quivers of any shape.
pub fn isomorphic_by_search(a: &AlgebraPresentation, b: &AlgebraPresentation) -> bool {
    let (qa, qb) = (a.quiver(), b.quiver());
    let n = qa.vertex_count();
    if n != qb.vertex_count() || qa.arrow_count() != qb.arrow_count() {
        return false;
    }
    let za = a.minimal_zero_paths();
    let zb = b.minimal_zero_paths();
    if za.len() != zb.len() || a.relations().commutativity_pairs().len() != b.relations().commutativity_pairs().len() {
        return false;
    }
    let degree =
        |p: &AlgebraPresentation, v: VertexId| (p.quiver().out_arrows(v).count(), p.quiver().in_arrows(v).count());
    let zb_set: BTreeSet<Vec<ArrowId>> = zb.iter().map(|z| z.arrows().to_vec()).collect();
    let comm_b: BTreeSet<(Vec<ArrowId>, Vec<ArrowId>)> = b
        .relations()
        .commutativity_pairs()
        .iter()
        .flat_map(|(x, y)| [(x.arrows().to_vec(), y.arrows().to_vec()), (y.arrows().to_vec(), x.arrows().to_vec())])
        .collect();

    let mut vmap: Vec<Option<VertexId>> = vec![None; n];
    let mut used = vec![false; n];

    // Arrow bijection given a vertex bijection; parallel arrows are tried in
    // every order.
    fn arrow_maps(
        a: &AlgebraPresentation,
        b: &AlgebraPresentation,
        vmap: &[Option<VertexId>],
        idx: usize,
        amap: &mut Vec<ArrowId>,
        used: &mut Vec<bool>,
        check: &mut dyn FnMut(&[ArrowId]) -> bool,
    ) -> bool {
        let qa = a.quiver();
        if idx == qa.arrow_count() {
            return check(amap);
        }
        let arr = qa.arrow(ArrowId(idx));
        let (s, t) = (vmap[arr.source.0].unwrap(), vmap[arr.target.0].unwrap());
        let cands: Vec<ArrowId> = b.quiver().arrows_between(s, t).collect();
        for c in cands {
            if used[c.0] {
                continue;
            }
            used[c.0] = true;
            amap.push(c);
            if arrow_maps(a, b, vmap, idx + 1, amap, used, check) {
                return true;
            }
            amap.pop();
            used[c.0] = false;
        }
        false
    }

    fn go(
        v: usize,
        a: &AlgebraPresentation,
        b: &AlgebraPresentation,
        vmap: &mut Vec<Option<VertexId>>,
        used: &mut Vec<bool>,
        degree: &dyn Fn(&AlgebraPresentation, VertexId) -> (usize, usize),
        check: &mut dyn FnMut(&[ArrowId]) -> bool,
    ) -> bool {
        let n = vmap.len();
        if v == n {
            let mut amap = Vec::new();
            let mut aused = vec![false; b.quiver().arrow_count()];
            return arrow_maps(a, b, vmap, 0, &mut amap, &mut aused, check);
        }
        for w in 0..n {
            if used[w] || degree(a, VertexId(v)) != degree(b, VertexId(w)) {
                continue;
            }
            vmap[v] = Some(VertexId(w));
            // prune: arrow multiplicities between already-mapped vertices
            let ok = (0..=v).all(|u| {
                let (x, y) = (VertexId(u), VertexId(v));
                let (fx, fy) = (vmap[u].unwrap(), VertexId(w));
                a.quiver().arrows_between(x, y).count() == b.quiver().arrows_between(fx, fy).count()
                    && a.quiver().arrows_between(y, x).count() == b.quiver().arrows_between(fy, fx).count()
            });
            if ok {
                used[w] = true;
                if go(v + 1, a, b, vmap, used, degree, check) {
                    return true;
                }
                used[w] = false;
            }
            vmap[v] = None;
        }
        false
    }

    let mut check = |amap: &[ArrowId]| -> bool {
        let map = |p: &[ArrowId]| -> Vec<ArrowId> { p.iter().map(|x| amap[x.0]).collect() };
        za.iter().all(|z| zb_set.contains(&map(z.arrows())))
            && a.relations()
                .commutativity_pairs()
                .iter()
                .all(|(x, y)| comm_b.contains(&(map(x.arrows()), map(y.arrows()))))
    };
    go(0, a, b, &mut vmap, &mut used, &degree, &mut check)
}
