//! Constructors for the standard families. Vertices are labelled `1..n` and
//! arrows `a1, a2, ...` along the line or cycle; the loop of `k[x]/(x^n)` is
//! called `x`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::AlgebraPresentation;
use crate::quiver::{Path, Quiver, VertexId};
use crate::{Error, Result};

fn labelled(n: usize) -> Quiver {
    let mut q = Quiver::new();
    for i in 1..=n {
        q.add_vertex(&format!("{i}")).expect("fresh labels");
    }
    q
}

fn parse_signs(word: &str) -> Result<Vec<bool>> {
    word.chars()
        .map(|c| match c {
            '+' => Ok(true),
            '-' => Ok(false),
            other => Err(Error::UnknownArrow(format!("orientation sign `{other}`"))),
        })
        .collect()
}

/// Path algebra of the line `1 - 2 - ... - n` with orientation word `eps`
/// (`+` at position `i` means `i -> i+1`).
pub fn line(eps: &str) -> Result<AlgebraPresentation> {
    let signs = parse_signs(eps)?;
    let mut q = labelled(signs.len() + 1);
    for (i, &plus) in signs.iter().enumerate() {
        let (s, t) = if plus { (i, i + 1) } else { (i + 1, i) };
        q.add_arrow(&format!("a{}", i + 1), VertexId(s), VertexId(t))?;
    }
    Ok(AlgebraPresentation::hereditary(q))
}

/// Path algebra of a cycle with orientation word `eps`; arrow `a_i` joins
/// `i` and `i+1` (indices mod `n`).
pub fn cycle_with(eps: &str) -> Result<AlgebraPresentation> {
    let signs = parse_signs(eps)?;
    let n = signs.len();
    let mut q = labelled(n);
    for (i, &plus) in signs.iter().enumerate() {
        let (s, t) = if plus { (i, (i + 1) % n) } else { ((i + 1) % n, i) };
        q.add_arrow(&format!("a{}", i + 1), VertexId(s), VertexId(t))?;
    }
    Ok(AlgebraPresentation::hereditary(q))
}

/// Hereditary oriented cycle `1 -> 2 -> ... -> n -> 1`. Not finite
/// dimensional until relations are added.
pub fn cycle(n: usize) -> AlgebraPresentation {
    let eps: String = core::iter::repeat_n('+', n).collect();
    cycle_with(&eps).expect("valid word")
}

/// `N(n)`: linearly oriented line modulo the square of the radical.
pub fn n_line(n: usize) -> AlgebraPresentation {
    let eps: String = core::iter::repeat_n('+', n.saturating_sub(1)).collect();
    line(&eps).expect("valid word").radical_square_zero_quotient()
}

/// `N°(n)`: oriented cycle modulo the square of the radical.
pub fn n_circ(n: usize) -> AlgebraPresentation {
    cycle(n).radical_square_zero_quotient()
}

/// `k[x]/(x^n)` as a loop with one zero relation.
pub fn local(n: usize) -> AlgebraPresentation {
    let mut q = labelled(1);
    let x = q.add_arrow("x", VertexId(0), VertexId(0)).expect("fresh");
    let mut p = AlgebraPresentation::hereditary(q);
    if n >= 2 {
        let path = Path::new(p.quiver(), alloc::vec![x; n]).expect("loop composes");
        p.add_zero_path(path).expect("length >= 2");
    }
    p
}

/// The one-vertex algebra `k`.
pub fn simple() -> AlgebraPresentation {
    AlgebraPresentation::hereditary(labelled(1))
}

/// Oriented cycle with zero relations given as `(start arrow index, length)`
/// pairs, indices starting at 1.
pub fn cycle_with_zeros(n: usize, zeros: &[(usize, usize)]) -> AlgebraPresentation {
    let mut p = cycle(n);
    for &(start, len) in zeros {
        let names: Vec<String> = (0..len).map(|k| format!("a{}", (start - 1 + k) % n + 1)).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        p.add_zero(&refs).expect("cycle paths compose");
    }
    p
}

/// `D4` with the orientation convention `(1-3, 2-3, 3-4)`: the first two signs
/// are `+` when the arrow points into the centre `3`, the last is `+` for
/// `3 -> 4`.
pub fn d4(eps: &str) -> Result<AlgebraPresentation> {
    let signs = parse_signs(eps)?;
    if signs.len() != 3 {
        return Err(Error::UnknownArrow(format!("D4 orientation `{eps}`")));
    }
    let mut q = labelled(4);
    let c = VertexId(2);
    let ends = [(VertexId(0), signs[0]), (VertexId(1), signs[1])];
    for (i, &(leaf, into)) in ends.iter().enumerate() {
        let (s, t) = if into { (leaf, c) } else { (c, leaf) };
        q.add_arrow(&format!("a{}", i + 1), s, t)?;
    }
    let (s, t) = if signs[2] { (c, VertexId(3)) } else { (VertexId(3), c) };
    q.add_arrow("a3", s, t)?;
    Ok(AlgebraPresentation::hereditary(q))
}
