//! The rule ladder deciding representation-finiteness of `A (x) B`.
//!
//! Rules are tried in a fixed order and the first decisive one wins. Every
//! rule consulted leaves a trace entry; the last entry is the deciding rule.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::AlgebraPresentation;
use crate::catalog::{contains_quotient, contains_some_a3_quotient, isomorphic, local_power, match_named, pattern};
use crate::separated::{gabriel_criterion, sound_infinite_test, Finiteness, OracleOutcome};
use crate::shape::{graph_shape, is_nakayama, GraphShape, ShapeKind};
use crate::tensor::tensor;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VerdictKind {
    Finite,
    Infinite,
    Unsupported,
}

impl VerdictKind {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictKind::Finite => "finite",
            VerdictKind::Infinite => "infinite",
            VerdictKind::Unsupported => "unsupported",
        }
    }
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The only three ways a verdict may be `unsupported`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UnsupportedReason {
    /// `A2 (x) C` outside the local partners: the triangular-matrix family.
    TriangularMatrixFamily,
    /// Two-point quiver with loops against a line with no `N(3)` quotient.
    TwoPointReductionGap,
    /// A factor outside lines, cycles, local algebras and rad²-zero trees,
    /// or a commutativity relation the containment engine cannot read.
    OutOfDomainShape,
}

impl UnsupportedReason {
    pub fn as_str(self) -> &'static str {
        match self {
            UnsupportedReason::TriangularMatrixFamily => "triangular-matrix-family",
            UnsupportedReason::TwoPointReductionGap => "two-point-reduction-gap",
            UnsupportedReason::OutOfDomainShape => "out-of-domain-shape",
        }
    }
}

impl fmt::Display for UnsupportedReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    SimpleFactor,
    IndividualFiniteness,
    BothCyclic,
    D4Subgraph,
    ThreeByThree,
    A2Partner,
    LocalPartner,
    TwoPointPartner,
    CircPartner,
    CycleWithN,
    ZigzagWithN,
    BothLines,
    CommutativeSquare,
    Oracle,
    ThreeFactors,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::SimpleFactor => "R0",
            Rule::IndividualFiniteness => "R1",
            Rule::BothCyclic => "R2",
            Rule::D4Subgraph => "R3",
            Rule::ThreeByThree => "R4",
            Rule::A2Partner => "R5",
            Rule::LocalPartner => "R6",
            Rule::TwoPointPartner => "R7",
            Rule::CircPartner => "R8",
            Rule::CycleWithN => "R9",
            Rule::ZigzagWithN => "R10",
            Rule::BothLines => "R11",
            Rule::CommutativeSquare => "R12",
            Rule::Oracle => "R13",
            Rule::ThreeFactors => "R-triple",
        }
    }

    /// The mathematical statement the rule applies.
    pub fn cite(self) -> &'static str {
        match self {
            Rule::SimpleFactor => "A (x) k is isomorphic to A",
            Rule::IndividualFiniteness => {
                "A and B are quotients of A (x) B, and quotients of representation-finite algebras are representation-finite"
            }
            Rule::BothCyclic => "if both underlying graphs contain a cycle then A (x) B is representation-infinite",
            Rule::D4Subgraph => "if A is not A2 and the graph of B contains D4 then A (x) B is representation-infinite",
            Rule::ThreeByThree => "A3 (x) A3 is representation-infinite for every pair of orientations",
            Rule::A2Partner => "k[x]/(x^n) (x) A2 is representation-finite iff n = 2, 3",
            Rule::LocalPartner => {
                "k[x]/(x^n) (x) B on a line, |B| >= 3: finite iff n = 2 and B is A3, B5, B5op or Nakayama without a B3 quotient"
            }
            Rule::TwoPointPartner => {
                "quiver of A is 1 <-> 2, B on a line with |B| >= 3: finite iff A = kD2/<ba> and B = N(m), or A = Ncirc(2) and B is A3, B5, B5op or Nakayama without B3"
            }
            Rule::CircPartner => {
                "Ncirc(n) (x) B, n >= 3, B on a line with |B| >= 3: finite iff B is A3, B5, B5op or Nakayama without a B3 quotient"
            }
            Rule::CycleWithN => {
                "A on an oriented cycle, B = N(m), m >= 3: finite iff A is on the explicit list or |A| >= 6 with the rad^3 / B1 / B2 / B3 conditions"
            }
            Rule::ZigzagWithN => "A on a non-oriented cycle: A (x) N(m) is representation-infinite for m >= 3",
            Rule::BothLines => "A, B on lines with |A|, |B| >= 3: finite iff one factor is N(n) and the other meets the N(n)-partner conditions",
            Rule::CommutativeSquare => "a commutative square on a cycle is outside the monomial containment engine",
            Rule::Oracle => "an infinite radical-square-zero quotient forces A (x) B to be representation-infinite",
            Rule::ThreeFactors => "A (x) B (x) C with three non-simple factors is representation-infinite",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceEntry {
    pub rule: Rule,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub trace: Vec<TraceEntry>,
    pub unsupported_reason: Option<UnsupportedReason>,
}

impl Default for Verdict {
    fn default() -> Self {
        Self::new()
    }
}

impl Verdict {
    /// Empty trace; the caller pushes at least the deciding entry.
    pub fn new() -> Self {
        Verdict { kind: VerdictKind::Unsupported, trace: Vec::new(), unsupported_reason: None }
    }

    pub fn push(&mut self, rule: Rule, detail: String) {
        self.trace.push(TraceEntry { rule, detail });
    }

    pub fn prepend(&mut self, rule: Rule, detail: String) {
        self.trace.insert(0, TraceEntry { rule, detail });
    }

    pub fn deciding_rule(&self) -> Option<Rule> {
        self.trace.last().map(|e| e.rule)
    }

    fn decide(&mut self, rule: Rule, kind: VerdictKind, detail: String) {
        self.push(rule, detail);
        self.kind = kind;
        self.unsupported_reason = None;
    }

    fn unsupported(&mut self, rule: Rule, reason: UnsupportedReason, detail: String) {
        self.push(rule, detail);
        self.kind = VerdictKind::Unsupported;
        self.unsupported_reason = Some(reason);
    }
}

/// Representation type of a single factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RfStatus {
    Finite(String),
    Infinite(String),
    Unsupported(String),
}

impl RfStatus {
    pub fn kind(&self) -> VerdictKind {
        match self {
            RfStatus::Finite(_) => VerdictKind::Finite,
            RfStatus::Infinite(_) => VerdictKind::Infinite,
            RfStatus::Unsupported(_) => VerdictKind::Unsupported,
        }
    }

    pub fn reason(&self) -> &str {
        match self {
            RfStatus::Finite(r) | RfStatus::Infinite(r) | RfStatus::Unsupported(r) => r,
        }
    }
}

pub fn is_a2(p: &AlgebraPresentation) -> bool {
    p.vertex_count() == 2 && p.quiver().arrow_count() == 1
}

fn is_simple(p: &AlgebraPresentation) -> bool {
    p.vertex_count() == 1 && p.quiver().arrow_count() == 0
}

/// A cycle with one source and one sink, no zero relations, and one
/// commutativity relation identifying its two arcs.
pub fn is_commutative_square(p: &AlgebraPresentation) -> bool {
    let q = p.quiver();
    if !matches!(graph_shape(q).kind, ShapeKind::ZigzagCycle(..)) || !p.relations().zero_paths().is_empty() {
        return false;
    }
    let sources: Vec<_> = q.vertices().filter(|&v| q.in_arrows(v).next().is_none()).collect();
    let sinks: Vec<_> = q.vertices().filter(|&v| q.out_arrows(v).next().is_none()).collect();
    let ([s], [t], [(x, y)]) = (sources.as_slice(), sinks.as_slice(), p.relations().commutativity_pairs()) else {
        return false;
    };
    x.source() == *s
        && x.target() == *t
        && x.len() + y.len() == q.arrow_count()
        && x.arrows().iter().all(|a| !y.arrows().contains(a))
}

/// `N(n)` for the vertex count `n >= 2`.
fn n_line(p: &AlgebraPresentation, shape: &GraphShape) -> Option<usize> {
    let ShapeKind::Line(eps) = &shape.kind else { return None };
    let linear = eps.chars().all(|c| c == '+') || eps.chars().all(|c| c == '-');
    (p.vertex_count() >= 2 && linear && p.is_monomial() && p.is_radical_square_zero()).then(|| p.vertex_count())
}

/// `Ncirc(n)` for the vertex count `n`.
fn n_circ(p: &AlgebraPresentation, shape: &GraphShape) -> Option<usize> {
    (shape.period().is_some() && p.is_monomial() && p.is_radical_square_zero()).then(|| p.vertex_count())
}

fn is_named(p: &AlgebraPresentation, name: &str) -> bool {
    pattern(name).is_some_and(|pat| isomorphic(&pat.presentation, p))
}

fn has_quotient(p: &AlgebraPresentation, name: &str) -> bool {
    contains_quotient(p, &pattern(name).expect("catalog name"))
}

/// A short name for trace details.
pub fn describe(p: &AlgebraPresentation) -> String {
    if let Some(n) = match_named(p).into_iter().next() {
        return n;
    }
    let zeros = p.minimal_zero_paths().len();
    let comm = p.relations().commutativity_pairs().len();
    let rel = match (zeros, comm) {
        (0, 0) => String::from("no relations"),
        (z, 0) => format!("{z} zero relations"),
        (z, c) => format!("{z} zero and {c} commutativity relations"),
    };
    let shape = match graph_shape(p.quiver()).kind {
        ShapeKind::Line(eps) => format!("line {eps}"),
        ShapeKind::OrientedCycle(n) => format!("oriented {n}-cycle"),
        ShapeKind::ZigzagCycle(_, eps) => format!("cycle {eps}"),
        ShapeKind::SingleVertexLoop => String::from("loop"),
        ShapeKind::TwoPointCycle => String::from("2-cycle"),
        ShapeKind::Tree => format!("tree on {} vertices", p.vertex_count()),
        ShapeKind::Other => format!("quiver with {} vertices, {} arrows", p.vertex_count(), p.quiver().arrow_count()),
    };
    format!("{shape}, {rel}")
}

/// Representation type of one factor.
pub fn individual_rf(p: &AlgebraPresentation) -> RfStatus {
    let report = p.validate();
    if !report.double_arrows.is_empty() {
        return RfStatus::Infinite("double arrow: the Kronecker algebra is a quotient".into());
    }
    if !report.double_loops.is_empty() {
        return RfStatus::Infinite("two loops at one vertex: k<x,y>/(x,y)^2 is a quotient".into());
    }
    if is_commutative_square(p) {
        return RfStatus::Finite("commutative square on a cycle is simply connected and tilted of type A".into());
    }
    if !p.is_monomial() {
        return RfStatus::Unsupported("commutativity relations outside the commutative square".into());
    }
    let shape = graph_shape(p.quiver());
    match shape.kind {
        ShapeKind::Line(_) => RfStatus::Finite("monomial algebra on a line".into()),
        ShapeKind::OrientedCycle(_) | ShapeKind::TwoPointCycle => {
            RfStatus::Finite("Nakayama algebra on an oriented cycle".into())
        }
        ShapeKind::SingleVertexLoop => RfStatus::Finite("local algebra k[x]/(x^n)".into()),
        ShapeKind::ZigzagCycle(..) => {
            if p.relations().zero_paths().is_empty() {
                RfStatus::Infinite("hereditary of extended type A".into())
            } else {
                RfStatus::Finite("string algebra whose only band is blocked by a zero relation".into())
            }
        }
        ShapeKind::Tree | ShapeKind::Other => {
            if p.is_radical_square_zero() {
                match gabriel_criterion(p) {
                    Ok(Finiteness::Finite) => RfStatus::Finite("separated quiver is a union of Dynkin graphs".into()),
                    _ => RfStatus::Infinite("separated quiver has a non-Dynkin component".into()),
                }
            } else if sound_infinite_test(p) == OracleOutcome::Infinite {
                RfStatus::Infinite("radical-square-zero quotient is representation-infinite".into())
            } else {
                RfStatus::Unsupported("shape outside lines, cycles and radical-square-zero algebras".into())
            }
        }
    }
}

struct Factor<'a> {
    p: &'a AlgebraPresentation,
    name: String,
    shape: GraphShape,
    line: bool,
    a2: bool,
    local: Option<usize>,
    n_line: Option<usize>,
    n_circ: Option<usize>,
    square: bool,
}

impl<'a> Factor<'a> {
    fn new(p: &'a AlgebraPresentation) -> Self {
        let shape = graph_shape(p.quiver());
        Factor {
            p,
            name: describe(p),
            line: shape.is_line() && p.is_monomial(),
            a2: is_a2(p),
            local: local_power(p),
            n_line: n_line(p, &shape),
            n_circ: n_circ(p, &shape),
            square: is_commutative_square(p),
            shape,
        }
    }

    fn long_line(&self) -> bool {
        self.line && self.p.vertex_count() >= 3
    }
}

fn check_input(p: &AlgebraPresentation) -> Result<()> {
    let report = p.validate();
    if !report.connected {
        return Err(Error::Disconnected);
    }
    if !report.finite_dimensional {
        return Err(Error::InfiniteDimensional);
    }
    Ok(())
}

/// Decides `A (x) B`. Errors only on disconnected or infinite-dimensional
/// input.
pub fn classify(a: &AlgebraPresentation, b: &AlgebraPresentation) -> Result<Verdict> {
    check_input(a)?;
    check_input(b)?;
    let mut v = Verdict::new();
    ladder(&mut v, &Factor::new(a), &Factor::new(b));
    debug_assert!(
        v.kind != VerdictKind::Finite || sound_infinite_test(&tensor(a, b).presentation) == OracleOutcome::Inconclusive,
        "finite verdict contradicted by the radical-square-zero quotient"
    );
    Ok(v)
}

fn ladder(v: &mut Verdict, a: &Factor, b: &Factor) {
    use VerdictKind::*;

    // R0
    if is_simple(a.p) || is_simple(b.p) {
        let other = if is_simple(a.p) { b } else { a };
        let rf = individual_rf(other.p);
        let detail = format!("{} (x) k = {}: {}", other.name, other.name, rf.reason());
        match rf.kind() {
            Unsupported => v.unsupported(Rule::SimpleFactor, UnsupportedReason::OutOfDomainShape, detail),
            kind => v.decide(Rule::SimpleFactor, kind, detail),
        }
        return;
    }
    v.push(Rule::SimpleFactor, "no simple factor".into());

    // R1
    let (ra, rb) = (individual_rf(a.p), individual_rf(b.p));
    for (f, rf) in [(a, &ra), (b, &rb)] {
        if rf.kind() == Infinite {
            v.decide(
                Rule::IndividualFiniteness,
                Infinite,
                format!("{} is representation-infinite: {}", f.name, rf.reason()),
            );
            return;
        }
    }
    for (f, rf) in [(a, &ra), (b, &rb)] {
        if rf.kind() == Unsupported {
            let detail = format!("cannot decide {} alone: {}", f.name, rf.reason());
            v.unsupported(Rule::IndividualFiniteness, UnsupportedReason::OutOfDomainShape, detail);
            return;
        }
    }
    v.push(Rule::IndividualFiniteness, format!("{}: {}; {}: {}", a.name, ra.reason(), b.name, rb.reason()));

    // R2
    if a.shape.has_graph_cycle && b.shape.has_graph_cycle {
        v.decide(Rule::BothCyclic, Infinite, format!("{} and {} both have a cycle", a.name, b.name));
        return;
    }
    v.push(Rule::BothCyclic, "at most one factor has a cycle".into());

    // R3
    for (x, y) in [(a, b), (b, a)] {
        if !x.a2 && y.shape.has_d4_vertex {
            v.decide(
                Rule::D4Subgraph,
                Infinite,
                format!("{} has a vertex with three neighbours and {} is not A2", y.name, x.name),
            );
            return;
        }
    }
    v.push(Rule::D4Subgraph, "no D4 subgraph against a non-A2 partner".into());

    // R4
    if contains_some_a3_quotient(a.p) && contains_some_a3_quotient(b.p) {
        v.decide(Rule::ThreeByThree, Infinite, format!("{} and {} both have an A3 quotient", a.name, b.name));
        return;
    }
    v.push(Rule::ThreeByThree, "some factor has no A3 quotient".into());

    // R5
    for (x, y) in [(a, b), (b, a)] {
        if !x.a2 {
            continue;
        }
        match y.local {
            Some(n) => {
                let finite = n == 2 || n == 3;
                let note = if n == 4 { " (tame)" } else { "" };
                v.decide(Rule::A2Partner, if finite { Finite } else { Infinite }, format!("A2 (x) k[x]/(x^{n}){note}"));
            }
            None => v.unsupported(
                Rule::A2Partner,
                UnsupportedReason::TriangularMatrixFamily,
                format!("A2 (x) {} belongs to the triangular-matrix family, which is not decided here", y.name),
            ),
        }
        return;
    }
    v.push(Rule::A2Partner, "no factor is A2".into());

    // R6
    for (x, y) in [(a, b), (b, a)] {
        if let (Some(n), true) = (x.local, y.long_line()) {
            let finite = n == 2 && n_partner_list(y.p);
            v.decide(Rule::LocalPartner, kind_of(finite), format!("k[x]/(x^{n}) (x) {}", y.name));
            return;
        }
    }
    v.push(Rule::LocalPartner, "no local factor against a line".into());

    // R7
    for (x, y) in [(a, b), (b, a)] {
        if !y.long_line() || x.p.vertex_count() != 2 {
            continue;
        }
        if x.shape.kind == ShapeKind::TwoPointCycle {
            let finite = (is_named(x.p, "P2") && y.n_line.is_some()) || (x.n_circ == Some(2) && n_partner_list(y.p));
            v.decide(Rule::TwoPointPartner, kind_of(finite), format!("{} on 1 <-> 2 with {}", x.name, y.name));
            return;
        }
        if x.shape.has_loop {
            if has_quotient(y.p, "N(3)") {
                let detail = format!("{} has an arrow next to a loop and {} has N(3) as a quotient", x.name, y.name);
                v.decide(Rule::TwoPointPartner, Infinite, detail);
            } else if sound_infinite_test(&tensor(a.p, b.p).presentation) == OracleOutcome::Infinite {
                let detail =
                    format!("{} (x) {}: radical-square-zero quotient is representation-infinite", x.name, y.name);
                v.decide(Rule::TwoPointPartner, Infinite, detail);
            } else {
                let detail =
                    format!("two-point quiver with loops {} against {}, which has no N(3) quotient", x.name, y.name);
                v.unsupported(Rule::TwoPointPartner, UnsupportedReason::TwoPointReductionGap, detail);
            }
            return;
        }
    }
    v.push(Rule::TwoPointPartner, "no two-point factor against a line".into());

    // R8
    for (x, y) in [(a, b), (b, a)] {
        if let (Some(n), true) = (x.n_circ, y.long_line()) {
            if n >= 3 {
                let finite = n_partner_list(y.p);
                v.decide(Rule::CircPartner, kind_of(finite), format!("Ncirc({n}) (x) {}", y.name));
                return;
            }
        }
    }
    v.push(Rule::CircPartner, "no Ncirc(n), n >= 3, against a line".into());

    // R9
    for (x, y) in [(a, b), (b, a)] {
        if let (ShapeKind::OrientedCycle(p), Some(m), true) = (&x.shape.kind, y.n_line, x.p.is_monomial()) {
            if m >= 3 {
                let (finite, why) = cycle_with_n(x.p, *p, m);
                v.decide(Rule::CycleWithN, kind_of(finite), format!("{} (x) N({m}): {why}", x.name));
                return;
            }
        }
    }
    v.push(Rule::CycleWithN, "no oriented cycle against N(m), m >= 3".into());

    // R10
    for (x, y) in [(a, b), (b, a)] {
        if let (ShapeKind::ZigzagCycle(..), Some(m), true) = (&x.shape.kind, y.n_line, x.p.is_monomial()) {
            if m >= 3 {
                v.decide(Rule::ZigzagWithN, Infinite, format!("{} is on a non-oriented cycle, partner N({m})", x.name));
                return;
            }
        }
    }
    v.push(Rule::ZigzagWithN, "no non-oriented cycle against N(m), m >= 3".into());

    // R11
    if a.long_line() && b.long_line() {
        let mut best: Option<(bool, String)> = None;
        for (x, y) in [(a, b), (b, a)] {
            if let Some(n) = x.n_line {
                let (finite, why) = n_partner(y, n);
                let detail = format!("N({n}) (x) {}: {why}", y.name);
                if finite || best.is_none() {
                    best = Some((finite, detail));
                }
                if finite {
                    break;
                }
            }
        }
        let (finite, detail) = best.unwrap_or((false, format!("neither {} nor {} is N(n)", a.name, b.name)));
        v.decide(Rule::BothLines, kind_of(finite), detail);
        return;
    }
    v.push(Rule::BothLines, "not two lines with at least three vertices".into());

    // R12
    if a.square || b.square {
        let x = if a.square { a } else { b };
        let detail = format!("{} carries a commutativity relation", x.name);
        v.unsupported(Rule::CommutativeSquare, UnsupportedReason::OutOfDomainShape, detail);
        return;
    }
    v.push(Rule::CommutativeSquare, "no commutative square".into());

    // R13
    if sound_infinite_test(&tensor(a.p, b.p).presentation) == OracleOutcome::Infinite {
        v.decide(Rule::Oracle, Infinite, "separated quiver of the radical-square-zero quotient is not Dynkin".into());
    } else {
        let detail = format!("no rule covers {} (x) {} and the quotient test is inconclusive", a.name, b.name);
        v.unsupported(Rule::Oracle, UnsupportedReason::OutOfDomainShape, detail);
    }
}

fn kind_of(finite: bool) -> VerdictKind {
    if finite {
        VerdictKind::Finite
    } else {
        VerdictKind::Infinite
    }
}

/// The finite partners of `k[x]/(x^2)`, `Ncirc(n)` and of `Ncirc(2)` among
/// algebras on a line with at least three vertices.
fn n_partner_list(b: &AlgebraPresentation) -> bool {
    ["A3++", "A3+-", "A3-+", "B5", "B5op"].iter().any(|n| is_named(b, n)) || (is_nakayama(b) && !has_quotient(b, "B3"))
}

/// Partner conditions of `N(n)`, `n >= 3`, for a monomial algebra on a line.
fn n_partner(b: &Factor, n: usize) -> (bool, String) {
    let p = b.p;
    if b.n_line.is_some() {
        return (true, "both are N(n)".into());
    }
    if is_nakayama(p) {
        return if n == 3 {
            let bad = ["B1", "B2", "B1op", "B2op"].into_iter().find(|q| has_quotient(p, q));
            match (p.radical_power_vanishes(3), bad) {
                (false, _) => (false, "Nakayama with rad^3 != 0".into()),
                (true, Some(q)) => (false, format!("Nakayama with a {q} quotient")),
                (true, None) => (true, "Nakayama, rad^3 = 0, no B1 or B2 quotient or opposite".into()),
            }
        } else if has_quotient(p, "B3") {
            (false, "Nakayama with a B3 quotient".into())
        } else {
            (true, "Nakayama without a B3 quotient".into())
        };
    }
    if let Some(name) = ["A3+-", "A3-+", "B5", "B5op"].into_iter().find(|q| is_named(p, q)) {
        return (true, format!("isomorphic to {name}"));
    }
    if n >= 4 {
        return (false, "not Nakayama and not A3, B5 or B5op; for n >= 4 only the Nakayama conditions can apply (reading of an open case)".into());
    }
    if p.vertex_count() < 5 {
        return (false, "not Nakayama with fewer than five vertices".into());
    }
    let bad = ["A4+++", "A4++-", "A4+-+", "A4-++", "B6", "B6op", "B7", "B7op"].into_iter().find(|q| has_quotient(p, q));
    match bad {
        Some(q) => (false, format!("not Nakayama with a {q} quotient")),
        None => (true, "not Nakayama, at least five vertices, no A4, B6 or B7 quotient".into()),
    }
}

/// Oriented cycle on `p >= 3` vertices against `N(m)`, `m >= 3`.
fn cycle_with_n(a: &AlgebraPresentation, p: usize, m: usize) -> (bool, String) {
    if p <= 5 {
        let mut list: Vec<String> = ["P3", "P4a", "P4b", "P5a", "P5b"].iter().map(|s| s.to_string()).collect();
        list.push(format!("Ncirc({p})"));
        if m == 3 {
            list.extend(["P4c", "P5c"].iter().map(|s| s.to_string()));
        }
        return match list.iter().find(|n| is_named(a, n)) {
            Some(n) => (true, format!("isomorphic to {n}")),
            None => (false, "not on the explicit list for cycles of length at most five".into()),
        };
    }
    if m == 3 {
        if !a.radical_power_vanishes(3) {
            return (false, "rad^3 != 0".into());
        }
        if let Some(q) = ["B1", "B2", "B2op"].into_iter().find(|q| has_quotient(a, q)) {
            return (false, format!("has a {q} quotient"));
        }
        return (true, "at least six vertices, rad^3 = 0, no B1 or B2 quotient or opposite".into());
    }
    if has_quotient(a, "B3") {
        (false, "has a B3 quotient".into())
    } else {
        (true, "at least six vertices, no B3 quotient".into())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::presentation;
    use crate::families;

    fn named(n: &str) -> AlgebraPresentation {
        presentation(n).unwrap()
    }

    fn verdict(a: &AlgebraPresentation, b: &AlgebraPresentation) -> VerdictKind {
        classify(a, b).unwrap().kind
    }

    #[test]
    fn individual_examples() {
        assert_eq!(individual_rf(&families::local(5)).kind(), VerdictKind::Finite);
        assert_eq!(individual_rf(&families::cycle_with("+-+-").unwrap()).kind(), VerdictKind::Infinite);
        let one_relation = families::cycle_with("++-+").unwrap().with_zero(&["a1", "a2"]).unwrap();
        assert_eq!(individual_rf(&one_relation).kind(), VerdictKind::Finite);
        assert_eq!(individual_rf(&families::cycle_with("+-").unwrap()).kind(), VerdictKind::Infinite);
        assert_eq!(individual_rf(&named("D4+++")).kind(), VerdictKind::Finite);
    }

    #[test]
    fn a2_cases() {
        assert_eq!(verdict(&families::local(3), &named("A2")), VerdictKind::Finite);
        assert_eq!(verdict(&families::local(4), &named("A2")), VerdictKind::Infinite);
        let v = classify(&named("A2"), &named("A2")).unwrap();
        assert_eq!(v.kind, VerdictKind::Unsupported);
        assert_eq!(v.unsupported_reason, Some(UnsupportedReason::TriangularMatrixFamily));
    }

    #[test]
    fn trace_ends_with_deciding_rule() {
        let v = classify(&families::local(2), &families::n_line(6)).unwrap();
        assert_eq!(v.kind, VerdictKind::Finite);
        assert_eq!(v.deciding_rule(), Some(Rule::LocalPartner));
        assert_eq!(v.trace[0].rule, Rule::SimpleFactor);
    }

    #[test]
    fn commutative_square_detected() {
        let mut p = families::cycle_with("++--").unwrap();
        p.add_commutativity(&["a1", "a2"], &["a4", "a3"]).unwrap();
        assert!(is_commutative_square(&p));
        let v = classify(&p, &families::n_line(3)).unwrap();
        assert_eq!(v.unsupported_reason, Some(UnsupportedReason::OutOfDomainShape));
        assert_eq!(v.deciding_rule(), Some(Rule::CommutativeSquare));
    }

    #[test]
    fn simple_factor_passes_through() {
        assert_eq!(verdict(&families::simple(), &families::cycle_with("+-+-").unwrap()), VerdictKind::Infinite);
        assert_eq!(verdict(&families::n_circ(3), &families::simple()), VerdictKind::Finite);
    }

    #[test]
    fn invalid_input_is_an_error() {
        assert_eq!(classify(&families::cycle(3), &families::n_line(3)), Err(Error::InfiniteDimensional));
    }

    #[test]
    fn two_point_with_loop() {
        let mut q = crate::Quiver::new();
        let one = q.add_vertex("1").unwrap();
        let two = q.add_vertex("2").unwrap();
        q.add_arrow("a", one, two).unwrap();
        q.add_arrow("x", two, two).unwrap();
        let a = AlgebraPresentation::hereditary(q).radical_square_zero_quotient();
        assert_eq!(individual_rf(&a).kind(), VerdictKind::Finite);
        assert_eq!(verdict(&a, &families::n_line(3)), VerdictKind::Infinite);
        let zig = families::line("+-").unwrap();
        let v = classify(&a, &zig).unwrap();
        assert_ne!(v.kind, VerdictKind::Finite);
    }
}
