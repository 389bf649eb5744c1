//! Finite windows of the Z-periodic coverings of `k[x]/(x^n)`, monomial
//! algebras on `1 <-> 2`, and monomial algebras on oriented cycles.

use alloc::format;
use alloc::vec::Vec;

use crate::algebra::AlgebraPresentation;
use crate::catalog::{contains_quotient, Pattern};
use crate::quiver::{ArrowId, Path, Quiver, VertexId};
use crate::shape::{graph_shape, Traversal};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverWindow {
    pub base: AlgebraPresentation,
    pub period: usize,
    pub window_length: usize,
    /// Line `0 -> 1 -> ... -> window_length - 1`.
    pub algebra: AlgebraPresentation,
    /// Base vertex under each window position.
    pub labels: Vec<VertexId>,
}

/// Base vertices and arrows in the order of the oriented cycle through
/// vertex 0.
fn walk(base: &AlgebraPresentation) -> Result<(usize, Traversal)> {
    let period = graph_shape(base.quiver()).period().ok_or(Error::NoPeriodicCovering)?;
    if !base.is_monomial() {
        return Err(Error::NotMonomial);
    }
    let t = Traversal::of_cycle(base.quiver()).ok_or(Error::NoPeriodicCovering)?;
    Ok((period, t))
}

pub fn cover_window(base: &AlgebraPresentation, window_length: usize) -> Result<CoverWindow> {
    if window_length == 0 {
        return Err(Error::EmptyWindow);
    }
    let (period, t) = walk(base)?;
    let bq = base.quiver();
    // the cycle walk from vertex 0 follows arrow direction
    let forward = period == 1 || bq.source(t.arrows[0]) == t.vertices[0];
    let (verts, arrs): (Vec<VertexId>, Vec<ArrowId>) = if forward {
        (t.vertices.clone(), t.arrows.clone())
    } else {
        let rev = t.symmetries().swap_remove(1);
        (rev.vertices, rev.arrows)
    };

    let mut q = Quiver::new();
    let labels: Vec<VertexId> = (0..window_length).map(|k| verts[k % period]).collect();
    for (k, &v) in labels.iter().enumerate() {
        q.add_vertex(&format!("{}_{k}", bq.label(v))).expect("fresh");
    }
    for k in 0..window_length.saturating_sub(1) {
        let name = format!("{}_{k}", bq.arrow(arrs[k % period]).name);
        q.add_arrow(&name, VertexId(k), VertexId(k + 1)).expect("fresh");
    }
    let mut algebra = AlgebraPresentation::hereditary(q);
    for z in base.minimal_zero_paths() {
        let s = verts.iter().position(|&v| v == z.source()).expect("on cycle");
        let len = z.len();
        let mut pos = s;
        while pos + len < window_length {
            let lifted = (pos..pos + len).map(ArrowId).collect();
            let path = Path::new(algebra.quiver(), lifted).expect("consecutive arrows");
            algebra.add_zero_path(path).expect("length >= 2");
            pos += period;
        }
    }
    Ok(CoverWindow { base: base.clone(), period, window_length, algebra, labels })
}

/// Window length used for containment: one period of start offsets with a
/// period of slack on each side of the pattern.
pub fn containment_window(period: usize, pattern_size: usize) -> usize {
    2 * period + pattern_size
}

pub fn cover_contains_pattern(base: &AlgebraPresentation, pattern: &Pattern) -> Result<bool> {
    let (period, _) = walk(base)?;
    cover_contains_pattern_at(base, pattern, containment_window(period, pattern.size()))
}

pub fn cover_contains_pattern_at(base: &AlgebraPresentation, pattern: &Pattern, window: usize) -> Result<bool> {
    Ok(contains_quotient(&cover_window(base, window)?.algebra, pattern))
}
