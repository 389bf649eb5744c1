//! Random generators and brute-force oracles shared by the integration tests.
//! None of the oracles call into the canonical-form, backtracking or
//! recognition code they check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use tensorfin_core::catalog::Pattern;
use tensorfin_core::families;
use tensorfin_core::{AlgebraPresentation, ArrowId, Path, Quiver, RelationSet, VertexId};

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

// ---------------------------------------------------------------- generators

/// A path of exactly `len` arrows following out-arrows from a random arrow.
pub fn random_path(rng: &mut ChaCha8Rng, q: &Quiver, len: usize) -> Option<Path> {
    if q.arrow_count() == 0 {
        return None;
    }
    let mut arrows = vec![ArrowId(rng.gen_range(0..q.arrow_count()))];
    while arrows.len() < len {
        let outs: Vec<ArrowId> = q.out_arrows(q.target(*arrows.last().unwrap())).collect();
        arrows.push(*outs.choose(rng)?);
    }
    Path::new(q, arrows).ok()
}

fn add_random_zeros(rng: &mut ChaCha8Rng, p: &mut AlgebraPresentation, count: usize, max_len: usize) {
    for _ in 0..count {
        let len = rng.gen_range(2..=max_len.max(2));
        if let Some(path) = random_path(rng, &p.quiver().clone(), len) {
            p.add_zero_path(path).unwrap();
        }
    }
}

/// Adds random zero paths until the algebra is finite dimensional.
fn close_up(rng: &mut ChaCha8Rng, p: &mut AlgebraPresentation, max_len: usize) {
    while !p.validate().finite_dimensional {
        add_random_zeros(rng, p, 1, max_len);
    }
}

pub fn random_word(rng: &mut ChaCha8Rng, len: usize) -> String {
    (0..len).map(|_| if rng.gen_bool(0.5) { '+' } else { '-' }).collect()
}

/// Monomial algebra on a line with `1..=max_vertices` vertices.
pub fn random_line(rng: &mut ChaCha8Rng, max_vertices: usize) -> AlgebraPresentation {
    let n = rng.gen_range(1..=max_vertices);
    let word = if rng.gen_bool(0.4) { "+".repeat(n - 1) } else { random_word(rng, n - 1) };
    let mut p = families::line(&word).unwrap();
    let zeros = rng.gen_range(0..=3);
    add_random_zeros(rng, &mut p, zeros, 4);
    p
}

/// Finite-dimensional monomial algebra on an oriented cycle with
/// `1..=max_vertices` vertices (a loop for one vertex).
pub fn random_oriented_cycle(rng: &mut ChaCha8Rng, min_vertices: usize, max_vertices: usize) -> AlgebraPresentation {
    let n = rng.gen_range(min_vertices..=max_vertices);
    if n == 1 {
        return families::local(rng.gen_range(2..=5));
    }
    let mut p = families::cycle(n);
    let max_len = rng.gen_range(2..=n + 2);
    close_up(rng, &mut p, max_len);
    p
}

/// Monomial algebra on a cycle with at least one sink.
pub fn random_zigzag_cycle(rng: &mut ChaCha8Rng, max_vertices: usize) -> AlgebraPresentation {
    let n = rng.gen_range(3..=max_vertices.max(3));
    let word = loop {
        let w = random_word(rng, n);
        if w.contains('+') && w.contains('-') {
            break w;
        }
    };
    let mut p = families::cycle_with(&word).unwrap();
    let zeros = rng.gen_range(0..=2);
    add_random_zeros(rng, &mut p, zeros, 3);
    p
}

pub fn random_d4(rng: &mut ChaCha8Rng) -> AlgebraPresentation {
    let w = random_word(rng, 3);
    families::d4(&w).unwrap().radical_square_zero_quotient()
}

/// Factor from the supported domain: lines, cycles, local algebras, the
/// radical-square-zero families and `D4` trees.
pub fn random_factor(rng: &mut ChaCha8Rng, max_vertices: usize) -> AlgebraPresentation {
    match rng.gen_range(0..10) {
        0..=2 => random_line(rng, max_vertices),
        3 | 4 => random_oriented_cycle(rng, 1, max_vertices),
        5 => random_zigzag_cycle(rng, max_vertices),
        6 => families::n_line(rng.gen_range(2..=max_vertices.max(2))),
        7 => families::n_circ(rng.gen_range(1..=max_vertices)),
        8 => random_oriented_cycle(rng, 2, 2),
        _ => {
            if rng.gen_bool(0.5) {
                random_d4(rng)
            } else {
                families::simple()
            }
        }
    }
}

/// Host for containment tests: monomial line or oriented/zigzag cycle.
pub fn random_host(rng: &mut ChaCha8Rng, max_vertices: usize) -> AlgebraPresentation {
    match rng.gen_range(0..3) {
        0 => random_line(rng, max_vertices),
        1 => random_oriented_cycle(rng, 1, max_vertices),
        _ => random_zigzag_cycle(rng, max_vertices),
    }
}

/// Same algebra with vertices and arrows renumbered.
pub fn relabel(rng: &mut ChaCha8Rng, p: &AlgebraPresentation) -> AlgebraPresentation {
    let q = p.quiver();
    let mut vperm: Vec<usize> = (0..q.vertex_count()).collect();
    vperm.shuffle(rng);
    let mut aperm: Vec<usize> = (0..q.arrow_count()).collect();
    aperm.shuffle(rng);
    // new vertex k is old vertex vperm[k]
    let mut new_of_old_v = vec![0; vperm.len()];
    for (k, &old) in vperm.iter().enumerate() {
        new_of_old_v[old] = k;
    }
    let mut new_of_old_a = vec![0; aperm.len()];
    for (k, &old) in aperm.iter().enumerate() {
        new_of_old_a[old] = k;
    }
    let mut nq = Quiver::new();
    for &old in &vperm {
        nq.add_vertex(&format!("w{old}")).unwrap();
    }
    for &old in &aperm {
        let a = q.arrow(ArrowId(old));
        nq.add_arrow(&format!("b{old}"), VertexId(new_of_old_v[a.source.0]), VertexId(new_of_old_v[a.target.0]))
            .unwrap();
    }
    let map = |path: &Path| -> Path {
        Path::new(&nq, path.arrows().iter().map(|a| ArrowId(new_of_old_a[a.0])).collect()).unwrap()
    };
    let mut rel = RelationSet::new();
    for z in p.relations().zero_paths() {
        rel.add_zero(map(z)).unwrap();
    }
    for (x, y) in p.relations().commutativity_pairs() {
        rel.add_commutativity(map(x), map(y)).unwrap();
    }
    AlgebraPresentation::new(nq, rel)
}

// ------------------------------------------------------------ permutations

/// Heap's algorithm over all permutations of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    out.push(a.clone());
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

// ----------------------------------------------------------- brute-force iso

/// Set of nonzero paths, as arrow words, of a finite-dimensional monomial
/// algebra; computed by direct extension without the library's automaton.
pub fn nonzero_words(p: &AlgebraPresentation) -> BTreeSet<Vec<usize>> {
    let q = p.quiver();
    let zeros: Vec<Vec<usize>> =
        p.relations().zero_paths().iter().map(|z| z.arrows().iter().map(|a| a.0).collect()).collect();
    let killed = |w: &[usize]| zeros.iter().any(|z| w.windows(z.len()).any(|s| s == z.as_slice()));
    let mut out = BTreeSet::new();
    let mut frontier: Vec<Vec<usize>> = (0..q.arrow_count()).map(|a| vec![a]).collect();
    while let Some(w) = frontier.pop() {
        if killed(&w) {
            continue;
        }
        assert!(w.len() <= 64, "algebra is not finite dimensional");
        let last = *w.last().unwrap();
        for b in q.out_arrows(q.target(ArrowId(last))) {
            let mut next = w.clone();
            next.push(b.0);
            frontier.push(next);
        }
        out.insert(w);
    }
    out
}

/// Monomial isomorphism by trying every vertex bijection and every arrow
/// bijection compatible with it; compares full sets of nonzero paths.
pub fn brute_force_isomorphic(a: &AlgebraPresentation, b: &AlgebraPresentation) -> bool {
    let (qa, qb) = (a.quiver(), b.quiver());
    let n = qa.vertex_count();
    if n != qb.vertex_count() || qa.arrow_count() != qb.arrow_count() {
        return false;
    }
    let (na, nb) = (nonzero_words(a), nonzero_words(b));
    if na.len() != nb.len() {
        return false;
    }
    for vp in permutations(n) {
        let ok = qa.arrows().iter().all(|x| {
            let want = qa.arrows().iter().filter(|y| y.source == x.source && y.target == x.target).count();
            qb.arrows_between(VertexId(vp[x.source.0]), VertexId(vp[x.target.0])).count() == want
        });
        if !ok {
            continue;
        }
        for ap in permutations(qa.arrow_count()) {
            let arrows_ok = qa.arrow_ids().all(|x| {
                let y = ArrowId(ap[x.0]);
                qb.source(y).0 == vp[qa.source(x).0] && qb.target(y).0 == vp[qa.target(x).0]
            });
            if arrows_ok && na.iter().all(|w| nb.contains(&w.iter().map(|&x| ap[x]).collect::<Vec<_>>())) {
                return true;
            }
        }
    }
    false
}

// --------------------------------------------------------- containment oracle

/// Quotient containment by brute force: pick a vertex subset and a bijection
/// onto it, keep exactly the arrows hit by the pattern's arrows, and compare
/// nonzero paths after imposing the pattern's zero paths. A quotient by extra
/// zero relations can only remove nonzero paths, so a match exists iff the
/// restricted algebra keeps every nonzero path of the pattern.
pub fn naive_contains(host: &AlgebraPresentation, pattern: &Pattern) -> bool {
    let (hq, pq) = (host.quiver(), pattern.presentation.quiver());
    let k = pq.vertex_count();
    if k > hq.vertex_count() {
        return false;
    }
    let host_nonzero = nonzero_words(host);
    let pattern_nonzero = nonzero_words(&pattern.presentation);
    for subset in combinations(hq.vertex_count(), k) {
        for perm in permutations(k) {
            let image: Vec<usize> = perm.iter().map(|&i| subset[i]).collect();
            // every arrow choice: parallel host arrows give several options
            let choices: Vec<Vec<usize>> = pq
                .arrows()
                .iter()
                .map(|a| {
                    hq.arrows_between(VertexId(image[a.source.0]), VertexId(image[a.target.0])).map(|x| x.0).collect()
                })
                .collect();
            if choices.iter().any(Vec::is_empty) {
                continue;
            }
            let mut idx = vec![0usize; choices.len()];
            loop {
                let amap: Vec<usize> = idx.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
                let distinct: BTreeSet<usize> = amap.iter().copied().collect();
                if distinct.len() == amap.len()
                    && pattern_nonzero
                        .iter()
                        .all(|w| host_nonzero.contains(&w.iter().map(|&x| amap[x]).collect::<Vec<_>>()))
                {
                    return true;
                }
                let mut j = 0;
                while j < idx.len() {
                    idx[j] += 1;
                    if idx[j] < choices[j].len() {
                        break;
                    }
                    idx[j] = 0;
                    j += 1;
                }
                if j == idx.len() {
                    break;
                }
            }
        }
    }
    false
}

// ----------------------------------------------------------------- Tits form

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Definiteness {
    Positive,
    SemidefiniteSingular,
    Indefinite,
}

/// Symmetric Cartan matrix `2I - A` of an undirected multigraph; a loop
/// contributes 2 to its diagonal adjacency entry.
pub fn cartan(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(a, b) in edges {
        if a == b {
            c[a][a] -= 2;
        } else {
            c[a][b] -= 1;
            c[b][a] -= 1;
        }
    }
    c
}

/// Exact symmetric elimination. A zero pivot is allowed only when its whole
/// remaining row vanishes.
pub fn definiteness(c: &[Vec<i64>]) -> Definiteness {
    let n = c.len();
    let mut m: Vec<Vec<Ratio<i128>>> =
        c.iter().map(|r| r.iter().map(|&x| Ratio::from_integer(x as i128)).collect()).collect();
    let mut alive: Vec<bool> = vec![true; n];
    let zero = Ratio::from_integer(0);
    loop {
        let live: Vec<usize> = (0..n).filter(|&i| alive[i]).collect();
        if live.is_empty() {
            return Definiteness::Positive;
        }
        if live.iter().any(|&i| m[i][i] < zero) {
            return Definiteness::Indefinite;
        }
        let Some(&k) = live.iter().find(|&&i| m[i][i] > zero) else {
            if live.iter().any(|&i| live.iter().any(|&j| m[i][j] != zero)) {
                return Definiteness::Indefinite;
            }
            return Definiteness::SemidefiniteSingular;
        };
        alive[k] = false;
        let p = m[k][k];
        for &i in &live {
            if i == k {
                continue;
            }
            let f = m[i][k] / p;
            for &j in &live {
                let delta = f * m[k][j];
                m[i][j] -= delta;
            }
        }
    }
}

/// Random connected multigraph: a random spanning tree plus extra edges
/// (loops and parallel edges allowed).
pub fn random_graph(rng: &mut ChaCha8Rng, max_vertices: usize, max_edges: usize) -> (usize, Vec<(usize, usize)>) {
    let n = rng.gen_range(1..=max_vertices);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let extra = rng.gen_range(0..=max_edges.saturating_sub(edges.len()).min(3));
    for _ in 0..extra {
        let a = rng.gen_range(0..n);
        let b = if rng.gen_bool(0.1) { a } else { rng.gen_range(0..n) };
        edges.push((a.min(b), a.max(b)));
    }
    (n, edges)
}

/// Tree decoded from a random Prüfer sequence.
pub fn random_pruefer_tree(rng: &mut ChaCha8Rng, n: usize) -> Vec<(usize, usize)> {
    if n < 2 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut edges = Vec::new();
    for &s in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

// ----------------------------------------------------------------- band search

/// Whether a monomial string algebra has a band: a closed walk in direct and
/// inverse letters, never stepping back along the arrow just used, whose
/// every power avoids the zero relations in both directions. Walks up to
/// twice the number of arrows are enumerated.
pub fn has_band(p: &AlgebraPresentation) -> bool {
    let q = p.quiver();
    let zeros: Vec<Vec<usize>> =
        p.relations().zero_paths().iter().map(|z| z.arrows().iter().map(|a| a.0).collect()).collect();
    let max_zero = zeros.iter().map(Vec::len).max().unwrap_or(0);
    // letter: (arrow, direct)
    let step = |v: VertexId, (a, direct): (usize, bool)| -> Option<VertexId> {
        let arr = q.arrow(ArrowId(a));
        if direct && arr.source == v {
            Some(arr.target)
        } else if !direct && arr.target == v {
            Some(arr.source)
        } else {
            None
        }
    };
    let avoids = |word: &[(usize, bool)]| -> bool {
        // enough repetitions to cover every cyclic subword of relation length
        let reps = 2 + max_zero / word.len();
        let w: Vec<(usize, bool)> = word.iter().cycle().take(reps * word.len()).copied().collect();
        let mut runs: Vec<Vec<usize>> = Vec::new();
        let mut cur: Vec<(usize, bool)> = Vec::new();
        for &l in &w {
            if cur.last().is_some_and(|&(_, d)| d != l.1) {
                runs.push(direct_path(&cur));
                cur.clear();
            }
            cur.push(l);
        }
        runs.push(direct_path(&cur));
        runs.iter().all(|r| !zeros.iter().any(|z| r.windows(z.len()).any(|s| s == z.as_slice())))
    };
    let limit = 2 * q.arrow_count();
    for start in q.vertices() {
        let mut stack: Vec<(VertexId, Vec<(usize, bool)>)> = vec![(start, Vec::new())];
        while let Some((v, word)) = stack.pop() {
            if !word.is_empty() && v == start {
                let (first, last) = (word[0], *word.last().unwrap());
                let reduced_wrap = !(first.0 == last.0 && first.1 != last.1);
                if reduced_wrap && avoids(&word) {
                    return true;
                }
            }
            if word.len() == limit {
                continue;
            }
            for a in 0..q.arrow_count() {
                for direct in [true, false] {
                    if word.last().is_some_and(|&(b, d)| b == a && d != direct) {
                        continue;
                    }
                    if let Some(w) = step(v, (a, direct)) {
                        let mut next = word.clone();
                        next.push((a, direct));
                        stack.push((w, next));
                    }
                }
            }
        }
    }
    false
}

/// Arrows of a constant-direction run, in path order.
fn direct_path(run: &[(usize, bool)]) -> Vec<usize> {
    let mut r: Vec<usize> = run.iter().map(|&(a, _)| a).collect();
    if run.first().is_some_and(|&(_, d)| !d) {
        r.reverse();
    }
    r
}
