//! The product quiver `Q_A x Q_B` with its ideal: lifted zero relations of
//! both factors plus one commutativity square per pair of arrows.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{AlgebraPresentation, RelationSet};
use crate::classifier::{self, Rule, Verdict, VerdictKind};
use crate::quiver::{ArrowId, Path, Quiver, VertexId};

/// Where an arrow of the tensor quiver comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArrowOrigin {
    /// `alpha x j`: arrow of the first factor placed at vertex `j` of the second.
    Left { arrow: ArrowId, at: VertexId },
    /// `i x beta`: arrow of the second factor placed at vertex `i` of the first.
    Right { at: VertexId, arrow: ArrowId },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorPresentation {
    pub presentation: AlgebraPresentation,
    pub left: AlgebraPresentation,
    pub right: AlgebraPresentation,
    /// Indexed by arrow id of `presentation`.
    pub origins: Vec<ArrowOrigin>,
}

impl TensorPresentation {
    /// Vertex `(i, j)`.
    pub fn vertex(&self, i: VertexId, j: VertexId) -> VertexId {
        VertexId(i.0 * self.right.vertex_count() + j.0)
    }
}

fn unique_names(mut names: Vec<String>, fallback: &str) -> Vec<String> {
    let distinct: BTreeSet<&String> = names.iter().collect();
    if distinct.len() != names.len() {
        names = (0..names.len()).map(|k| format!("{fallback}{k}")).collect();
    }
    names
}

/// Builds `k(Q_A x Q_B)/(I_A <> I_B)`.
pub fn tensor(a: &AlgebraPresentation, b: &AlgebraPresentation) -> TensorPresentation {
    let (qa, qb) = (a.quiver(), b.quiver());
    let nb = qb.vertex_count();
    let vid = |i: VertexId, j: VertexId| VertexId(i.0 * nb + j.0);

    let labels: Vec<String> =
        qa.vertices().flat_map(|i| qb.vertices().map(move |j| format!("{}_{}", qa.label(i), qb.label(j)))).collect();
    let labels = unique_names(labels, "v");

    let mut origins = Vec::new();
    let mut names = Vec::new();
    let mut ends = Vec::new();
    for alpha in qa.arrow_ids() {
        for j in qb.vertices() {
            origins.push(ArrowOrigin::Left { arrow: alpha, at: j });
            names.push(format!("{}_{}", qa.arrow(alpha).name, qb.label(j)));
            ends.push((vid(qa.source(alpha), j), vid(qa.target(alpha), j)));
        }
    }
    for i in qa.vertices() {
        for beta in qb.arrow_ids() {
            origins.push(ArrowOrigin::Right { at: i, arrow: beta });
            names.push(format!("{}_{}", qa.label(i), qb.arrow(beta).name));
            ends.push((vid(i, qb.source(beta)), vid(i, qb.target(beta))));
        }
    }
    let names = unique_names(names, "t");

    let mut q = Quiver::new();
    for l in &labels {
        q.add_vertex(l).expect("unique labels");
    }
    for (name, &(s, t)) in names.iter().zip(&ends) {
        q.add_arrow(name, s, t).expect("unique names");
    }

    let left_id = |alpha: ArrowId, j: VertexId| ArrowId(alpha.0 * nb + j.0);
    let right_base = qa.arrow_count() * nb;
    let right_id = |i: VertexId, beta: ArrowId| ArrowId(right_base + i.0 * qb.arrow_count() + beta.0);

    let mut rel = RelationSet::new();
    for z in a.relations().zero_paths() {
        for j in qb.vertices() {
            let lifted = z.arrows().iter().map(|&x| left_id(x, j)).collect();
            rel.add_zero(Path::new(&q, lifted).expect("lift composes")).expect("len >= 2");
        }
    }
    for z in b.relations().zero_paths() {
        for i in qa.vertices() {
            let lifted = z.arrows().iter().map(|&y| right_id(i, y)).collect();
            rel.add_zero(Path::new(&q, lifted).expect("lift composes")).expect("len >= 2");
        }
    }
    for (p1, p2) in a.relations().commutativity_pairs() {
        for j in qb.vertices() {
            let l1 = p1.arrows().iter().map(|&x| left_id(x, j)).collect();
            let l2 = p2.arrows().iter().map(|&x| left_id(x, j)).collect();
            rel.add_commutativity(Path::new(&q, l1).unwrap(), Path::new(&q, l2).unwrap()).expect("lifted pair");
        }
    }
    for (p1, p2) in b.relations().commutativity_pairs() {
        for i in qa.vertices() {
            let l1 = p1.arrows().iter().map(|&y| right_id(i, y)).collect();
            let l2 = p2.arrows().iter().map(|&y| right_id(i, y)).collect();
            rel.add_commutativity(Path::new(&q, l1).unwrap(), Path::new(&q, l2).unwrap()).expect("lifted pair");
        }
    }
    // (i, beta)(alpha, t) = (alpha, s)(j, beta) for alpha: i -> j, beta: s -> t
    for alpha in qa.arrow_ids() {
        let (i, j) = (qa.source(alpha), qa.target(alpha));
        for beta in qb.arrow_ids() {
            let (s, t) = (qb.source(beta), qb.target(beta));
            let first = Path::new(&q, vec![right_id(i, beta), left_id(alpha, t)]).expect("square");
            let second = Path::new(&q, vec![left_id(alpha, s), right_id(j, beta)]).expect("square");
            rel.add_commutativity(first, second).expect("square endpoints");
        }
    }

    TensorPresentation { presentation: AlgebraPresentation::new(q, rel), left: a.clone(), right: b.clone(), origins }
}

fn is_simple(p: &AlgebraPresentation) -> bool {
    p.vertex_count() == 1 && p.quiver().arrow_count() == 0
}

/// Three factors: infinite as soon as all three are non-simple; otherwise
/// the pair of remaining factors is classified.
pub fn classify_triple(
    a: &AlgebraPresentation,
    b: &AlgebraPresentation,
    c: &AlgebraPresentation,
) -> crate::Result<Verdict> {
    let factors = [a, b, c];
    let rest: Vec<&AlgebraPresentation> = factors.iter().copied().filter(|f| !is_simple(f)).collect();
    match rest.len() {
        3 => {
            let all_a2 = factors.iter().all(|f| classifier::is_a2(f));
            let detail = if all_a2 {
                "three non-simple factors; tame since every factor is A2"
            } else {
                "three non-simple factors; wild since some factor is not A2"
            };
            let mut v = Verdict::new();
            v.push(Rule::ThreeFactors, detail.into());
            v.kind = VerdictKind::Infinite;
            Ok(v)
        }
        2 => {
            let mut v = classifier::classify(rest[0], rest[1])?;
            v.prepend(Rule::SimpleFactor, "a simple factor drops out of the triple product".into());
            Ok(v)
        }
        1 => classifier::classify(rest[0], &crate::families::simple()),
        _ => classifier::classify(a, b),
    }
}
