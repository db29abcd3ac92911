//! Simplicial complexes on `[n]`, subword complexes, shellings and shiftedness.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::coxeter::{CoxeterSystem, GroupElement};
use crate::error::{Error, Result};
use crate::ideals::{MonomialIdeal, SquarefreeMonomial};
use crate::positions::PositionSet;
use crate::words::{self, Word};

pub const SHIFTED_VERTEX_LIMIT: usize = 9;

/// A simplicial complex on the vertex set `{1, ..., n}` given by its facets.
///
/// An empty facet list is the void complex; a single empty facet is `{∅}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<PositionSet>,
}

/// An ordered list of facets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ShellingOrder(pub Vec<PositionSet>);

impl ShellingOrder {
    pub fn facets(&self) -> &[PositionSet] {
        &self.0
    }
}

impl SimplicialComplex {
    /// Builds a complex from generating faces, dropping duplicates and non-maximal
    /// faces while keeping the order of first appearance.
    pub fn new(n: usize, faces: impl IntoIterator<Item = PositionSet>) -> Self {
        let faces: Vec<PositionSet> = faces.into_iter().collect();
        let mut facets: Vec<PositionSet> = Vec::with_capacity(faces.len());
        for (i, &f) in faces.iter().enumerate() {
            assert!(f.is_subset(PositionSet::full(n)), "face {f} outside [{n}]");
            let dominated = faces
                .iter()
                .enumerate()
                .any(|(j, &g)| f != g && f.is_subset(g) || (f == g && j < i));
            if !dominated {
                facets.push(f);
            }
        }
        SimplicialComplex { n, facets }
    }

    pub fn from_vertex_lists(n: usize, facets: &[&[usize]]) -> Self {
        Self::new(
            n,
            facets
                .iter()
                .map(|f| PositionSet::from_positions(f.iter().copied())),
        )
    }

    /// The full simplex on `[n]`.
    pub fn simplex(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: vec![PositionSet::full(n)],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[PositionSet] {
        &self.facets
    }

    /// Facets sorted by bitmask, for order-insensitive comparison.
    pub fn sorted_facets(&self) -> Vec<PositionSet> {
        let mut f = self.facets.clone();
        f.sort();
        f
    }

    pub fn same_faces(&self, other: &SimplicialComplex) -> bool {
        self.sorted_facets() == other.sorted_facets()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension, or `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn is_face(&self, s: PositionSet) -> bool {
        self.facets.iter().any(|&f| s.is_subset(f))
    }

    /// Vertices that lie in some face.
    pub fn support(&self) -> PositionSet {
        self.facets
            .iter()
            .fold(PositionSet::EMPTY, |a, &f| a.union(f))
    }

    /// Every face, sorted by size and then bitmask. Exponential in the facet size.
    pub fn faces(&self) -> Vec<PositionSet> {
        let mut all: HashSet<PositionSet> = HashSet::new();
        for &f in &self.facets {
            if all.contains(&f) {
                continue;
            }
            all.extend(f.subsets());
        }
        let mut out: Vec<_> = all.into_iter().collect();
        out.sort_by_key(|s| (s.len(), *s));
        out
    }

    /// Face counts `(f_{-1}, f_0, ..., f_d)`.
    pub fn f_vector(&self) -> Vec<u64> {
        let mut f = Vec::new();
        for s in self.faces() {
            if f.len() <= s.len() {
                f.resize(s.len() + 1, 0);
            }
            f[s.len()] += 1;
        }
        f
    }

    pub fn link(&self, v: usize) -> SimplicialComplex {
        SimplicialComplex::new(
            self.n,
            self.facets
                .iter()
                .filter(|f| f.contains(v))
                .map(|f| f.without(v)),
        )
    }

    pub fn deletion(&self, v: usize) -> SimplicialComplex {
        SimplicialComplex::new(self.n, self.facets.iter().map(|f| f.without(v)))
    }

    /// Generators `x_{[n] \ F}` of the Stanley–Reisner ideal of the Alexander dual.
    pub fn alexander_dual_ideal(&self) -> MonomialIdeal {
        let full = PositionSet::full(self.n);
        MonomialIdeal::new(
            self.n,
            self.facets
                .iter()
                .map(|&f| SquarefreeMonomial::new(full.difference(f))),
        )
    }

    /// The Stanley–Reisner ideal: inclusion-minimal non-faces.
    ///
    /// A set is a non-face exactly when it meets every facet complement, so the
    /// minimal non-faces are the minimal transversals of the complements.
    pub fn minimal_nonfaces(&self) -> MonomialIdeal {
        let full = PositionSet::full(self.n);
        let mut transversals = vec![PositionSet::EMPTY];
        for &f in &self.facets {
            let complement = full.difference(f);
            let mut next: Vec<PositionSet> = Vec::new();
            for &t in &transversals {
                if !t.is_disjoint(complement) {
                    next.push(t);
                } else {
                    next.extend(complement.iter().map(|v| t.with(v)));
                }
            }
            next.sort();
            next.dedup();
            transversals = next
                .iter()
                .copied()
                .filter(|&t| !next.iter().any(|&u| u != t && u.is_subset(t)))
                .collect();
        }
        let mut gens: Vec<SquarefreeMonomial> = transversals
            .into_iter()
            .map(SquarefreeMonomial::new)
            .collect();
        gens.sort_by(|a, b| {
            a.degree()
                .cmp(&b.degree())
                .then(crate::ideals::lex_compare(b, a))
        });
        MonomialIdeal::new(self.n, gens)
    }

    /// Pure shelling test: each facet after the first meets the earlier ones in a
    /// pure codimension-one subcomplex.
    pub fn is_shelling(&self, order: &ShellingOrder) -> Result<bool> {
        let mut given = order.0.clone();
        given.sort();
        if given != self.sorted_facets() {
            return Err(Error::NotAPermutation);
        }
        let f = &order.0;
        for j in 1..f.len() {
            let codim_one: PositionSet = (0..j)
                .map(|k| f[j].difference(f[k]))
                .filter(|d| d.len() == 1)
                .fold(PositionSet::EMPTY, |a, d| a.union(d));
            if (0..j).any(|i| f[j].difference(f[i]).is_disjoint(codim_one)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether some labeling of the vertices makes the complex shifted.
    pub fn is_shifted(&self) -> Result<bool> {
        if self.n > SHIFTED_VERTEX_LIMIT {
            return Err(Error::TooManyVertices {
                size: self.n,
                limit: SHIFTED_VERTEX_LIMIT,
            });
        }
        let vertices = self.support().to_vec();
        let k = vertices.len();
        // replaces[a][b]: vertex a may replace vertex b in every facet holding b but not a.
        let replaces: Vec<Vec<bool>> = (0..k)
            .map(|a| {
                (0..k)
                    .map(|b| {
                        let (u, v) = (vertices[a], vertices[b]);
                        self.facets
                            .iter()
                            .filter(|f| f.contains(v) && !f.contains(u))
                            .all(|f| self.is_face(f.without(v).with(u)))
                    })
                    .collect()
            })
            .collect();
        // Labels are handed out in increasing order. Whether a partial labeling
        // extends depends only on the set already labeled, so failures are cached
        // per set.
        fn extend(placed: u32, k: usize, replaces: &[Vec<bool>], dead: &mut HashSet<u32>) -> bool {
            if placed.count_ones() as usize == k {
                return true;
            }
            if dead.contains(&placed) {
                return false;
            }
            for v in (0..k).filter(|&v| placed & (1 << v) == 0) {
                let ok = (0..k)
                    .filter(|&u| placed & (1 << u) != 0)
                    .all(|u| replaces[u][v]);
                if ok && extend(placed | (1 << v), k, replaces, dead) {
                    return true;
                }
            }
            dead.insert(placed);
            false
        }
        Ok(extend(0, k, &replaces, &mut HashSet::new()))
    }
}

/// Facets `Q_sub \ P` over the representing subwords `P ⊆ Q_sub` of `pi`, in lex-dual order.
fn subword_facets(
    sys: &CoxeterSystem,
    q: &Word,
    sub: PositionSet,
    pi: &GroupElement,
) -> Vec<PositionSet> {
    words::representing_subwords(sys, q, sub, pi)
        .into_iter()
        .map(|p| sub.difference(p.positions()))
        .collect()
}

/// The subword complex `Δ(Q, π)`, facets listed as `Q \ P_1, ..., Q \ P_r`.
pub fn subword_complex(
    sys: &CoxeterSystem,
    q: &Word,
    pi: &GroupElement,
) -> Result<SimplicialComplex> {
    if pi.is_identity() {
        return Err(Error::DegeneratePi);
    }
    let reps = words::representations(sys, q, pi)?;
    if reps.is_empty() {
        return Err(Error::NotContained);
    }
    let full = q.positions();
    Ok(SimplicialComplex::new(
        q.len(),
        reps.subwords()
            .iter()
            .map(|p| full.difference(p.positions())),
    ))
}

/// The shelling `Q \ P_1, ..., Q \ P_r` read off the lex order of the dual generators.
pub fn lex_dual_shelling(
    sys: &CoxeterSystem,
    q: &Word,
    pi: &GroupElement,
) -> Result<ShellingOrder> {
    Ok(ShellingOrder(
        subword_complex(sys, q, pi)?.facets().to_vec(),
    ))
}

/// Shelling produced by vertex-decomposing `Δ(Q, π)` at the first letter, recursively.
///
/// When the first letter `σ` is a left descent of `π`, the deletion `Δ(Q', σπ)` is
/// shelled first and the link `Δ(Q', π)` follows with `σ` put back; otherwise `σ` is a
/// cone point and only `Δ(Q', π)` is shelled. Each level checks the recursive
/// complexes against the link and deletion taken directly.
pub fn vertex_decompose_shelling(
    sys: &CoxeterSystem,
    q: &Word,
    pi: &GroupElement,
) -> Result<ShellingOrder> {
    if !words::contains(sys, q, pi)? {
        return Err(Error::NotContained);
    }
    let n = q.len();
    let mut memo = HashMap::new();
    Ok(ShellingOrder(decompose(
        sys,
        q,
        n,
        q.positions(),
        pi,
        &mut memo,
    )?))
}

fn decompose(
    sys: &CoxeterSystem,
    q: &Word,
    n: usize,
    sub: PositionSet,
    pi: &GroupElement,
    memo: &mut HashMap<(PositionSet, GroupElement), Vec<PositionSet>>,
) -> Result<Vec<PositionSet>> {
    if let Some(done) = memo.get(&(sub, pi.clone())) {
        return Ok(done.clone());
    }
    let here = subword_facets(sys, q, sub, pi);
    debug_assert!(!here.is_empty());
    if here.len() == 1 {
        return Ok(here);
    }
    let first = sub.min().expect("a complex with two facets has a vertex");
    let rest = sub.without(first);
    let sigma = q.letter(first);
    let complex = SimplicialComplex::new(n, here.iter().copied());
    let link_part = subword_facets(sys, q, rest, pi);
    let mismatch = |what: &str| {
        Error::VertexDecompositionMismatch(format!(
            "{what} at vertex {first} of {}",
            q.restrict(sub)
        ))
    };
    if !complex
        .link(first)
        .same_faces(&SimplicialComplex::new(n, link_part.iter().copied()))
    {
        return Err(mismatch("link"));
    }
    let attach = |facets: Vec<PositionSet>| facets.into_iter().map(move |f| f.with(first));
    let sigma_pi = sys.lmul(sigma, pi);
    let order = if sigma_pi.length() < pi.length() {
        let deletion_part = subword_facets(sys, q, rest, &sigma_pi);
        if !complex
            .deletion(first)
            .same_faces(&SimplicialComplex::new(n, deletion_part))
        {
            return Err(mismatch("deletion"));
        }
        let mut order = decompose(sys, q, n, rest, &sigma_pi, memo)?;
        if !link_part.is_empty() {
            order.extend(attach(decompose(sys, q, n, rest, pi, memo)?));
        }
        order
    } else {
        if !complex.deletion(first).same_faces(&complex.link(first)) {
            return Err(mismatch("cone deletion"));
        }
        attach(decompose(sys, q, n, rest, pi, memo)?).collect()
    };
    memo.insert((sub, pi.clone()), order.clone());
    Ok(order)
}
