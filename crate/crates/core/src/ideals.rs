//! Squarefree monomial ideals: lex order, colon ideals, linear-quotient
//! certificates and the invariants read off them.
//!
//! Variables are ordered `x_1 > x_2 > ... > x_n`, matching word positions.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::complexes;
use crate::coxeter::{CoxeterSystem, GroupElement};
use crate::error::{Error, Result};
use crate::positions::PositionSet;
use crate::words::{Representations, Word};

/// The monomial `x_F = ∏_{i ∈ F} x_i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct SquarefreeMonomial(PositionSet);

impl SquarefreeMonomial {
    pub fn new(support: PositionSet) -> Self {
        SquarefreeMonomial(support)
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        SquarefreeMonomial(PositionSet::from_positions(indices.iter().copied()))
    }

    pub fn variable(i: usize) -> Self {
        SquarefreeMonomial(PositionSet::singleton(i))
    }

    pub fn one() -> Self {
        SquarefreeMonomial(PositionSet::EMPTY)
    }

    pub fn support(self) -> PositionSet {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.len()
    }

    pub fn divides(self, other: SquarefreeMonomial) -> bool {
        self.0.is_subset(other.0)
    }

    pub fn gcd(self, other: SquarefreeMonomial) -> SquarefreeMonomial {
        SquarefreeMonomial(self.0.intersection(other.0))
    }

    pub fn lcm(self, other: SquarefreeMonomial) -> SquarefreeMonomial {
        SquarefreeMonomial(self.0.union(other.0))
    }

    /// `self / gcd(self, other)`.
    pub fn quotient_by_gcd(self, other: SquarefreeMonomial) -> SquarefreeMonomial {
        SquarefreeMonomial(self.0.difference(other.0))
    }

    pub fn min_index(self) -> Option<usize> {
        self.0.min()
    }

    pub fn max_index(self) -> Option<usize> {
        self.0.max()
    }
}

impl fmt::Debug for SquarefreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SquarefreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for i in self.0.iter() {
            write!(f, "x{i}")?;
        }
        Ok(())
    }
}

/// Lexicographic comparison with `x_1 > ... > x_n`: `Greater` means `u >_lex v`.
pub fn lex_compare(u: &SquarefreeMonomial, v: &SquarefreeMonomial) -> Ordering {
    let diff = PositionSet::from_bits(u.0.bits() ^ v.0.bits());
    match diff.min() {
        None => Ordering::Equal,
        Some(i) if u.0.contains(i) => Ordering::Greater,
        Some(_) => Ordering::Less,
    }
}

/// A squarefree monomial ideal given by its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<SquarefreeMonomial>,
}

impl MonomialIdeal {
    /// Keeps the minimal generators in order of first appearance.
    pub fn new(n: usize, gens: impl IntoIterator<Item = SquarefreeMonomial>) -> Self {
        let all: Vec<SquarefreeMonomial> = gens.into_iter().collect();
        let mut minimal: Vec<SquarefreeMonomial> = Vec::with_capacity(all.len());
        for (i, &g) in all.iter().enumerate() {
            debug_assert!(g.0.is_subset(PositionSet::full(n)));
            let redundant = all
                .iter()
                .enumerate()
                .any(|(j, &h)| (h != g && h.divides(g)) || (h == g && j < i));
            if !redundant {
                minimal.push(g);
            }
        }
        MonomialIdeal { n, gens: minimal }
    }

    pub fn ambient_variables(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[SquarefreeMonomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.degree() == 0)
    }

    pub fn contains(&self, u: SquarefreeMonomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// Generators sorted `u_1 >_lex u_2 >_lex ...`.
    pub fn lex_order(&self) -> Vec<SquarefreeMonomial> {
        let mut order = self.gens.clone();
        order.sort_by(|a, b| lex_compare(b, a));
        order
    }

    /// Same generator set, ignoring order.
    pub fn same_generators(&self, other: &MonomialIdeal) -> bool {
        let mut a: Vec<_> = self.gens.iter().map(|g| g.0).collect();
        let mut b: Vec<_> = other.gens.iter().map(|g| g.0).collect();
        a.sort();
        b.sort();
        a == b
    }

    /// `I : u`, generated by `w / gcd(w, u)` for `w ∈ G(I)`.
    pub fn colon_by_monomial(&self, u: SquarefreeMonomial) -> MonomialIdeal {
        MonomialIdeal::new(self.n, self.gens.iter().map(|w| w.quotient_by_gcd(u)))
    }

    /// Minimum size of a set of variables meeting every generator support.
    pub fn height(&self) -> Result<usize> {
        if self.gens.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        fn cover(gens: &[SquarefreeMonomial], chosen: PositionSet, best: &mut usize) {
            if chosen.len() >= *best {
                return;
            }
            match gens.iter().find(|g| g.0.is_disjoint(chosen)) {
                None => *best = chosen.len(),
                Some(g) => {
                    for v in g.0.iter() {
                        cover(gens, chosen.with(v), best);
                    }
                }
            }
        }
        let mut best = usize::MAX;
        cover(&self.gens, PositionSet::EMPTY, &mut best);
        Ok(best)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Linear quotients witnessed along a generator order: each colon
/// `(u_1, ..., u_{i-1}) : u_i` is generated by the variables in `sets[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearQuotientsCertificate {
    pub order: Vec<SquarefreeMonomial>,
    pub sets: Vec<PositionSet>,
    pub d: Vec<usize>,
}

impl LinearQuotientsCertificate {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// `max d_i`, the projective dimension of the ideal.
    pub fn projdim(&self) -> usize {
        self.d.iter().copied().max().unwrap_or(0)
    }
}

/// Checks linear quotients along `order`; on failure reports the first 1-based
/// index whose colon ideal needs a generator of degree two or more.
pub fn linear_quotients_certificate(
    ideal: &MonomialIdeal,
    order: &[SquarefreeMonomial],
) -> Result<LinearQuotientsCertificate> {
    let mut given: Vec<_> = order.iter().map(|g| g.0).collect();
    let mut gens: Vec<_> = ideal.gens.iter().map(|g| g.0).collect();
    given.sort();
    gens.sort();
    if given != gens {
        return Err(Error::NotAPermutation);
    }
    let mut sets = Vec::with_capacity(order.len());
    for i in 0..order.len() {
        let colon =
            MonomialIdeal::new(ideal.n, order[..i].iter().copied()).colon_by_monomial(order[i]);
        if colon.gens.iter().any(|g| g.degree() != 1) {
            return Err(Error::FailureAt { index: i + 1 });
        }
        sets.push(
            colon
                .gens
                .iter()
                .fold(PositionSet::EMPTY, |s, g| s.union(g.0)),
        );
    }
    let d = sets.iter().map(|s| s.len()).collect();
    Ok(LinearQuotientsCertificate {
        order: order.to_vec(),
        sets,
        d,
    })
}

/// The certificate for the lex order of the generators.
pub fn lex_certificate(ideal: &MonomialIdeal) -> Result<LinearQuotientsCertificate> {
    linear_quotients_certificate(ideal, &ideal.lex_order())
}

/// `{min(supp(u_j) \ supp(u_i)) : j < i}` for each `i`, for an arbitrary generator list.
///
/// Agrees with the certificate sets for subword duals but not in general; see
/// [`set_via_min_formula`].
pub fn min_formula_sets(order: &[SquarefreeMonomial]) -> Vec<PositionSet> {
    (0..order.len())
        .map(|i| {
            order[..i]
                .iter()
                .filter_map(|u| u.quotient_by_gcd(order[i]).min_index())
                .collect()
        })
        .collect()
}

/// Colon sets of a subword dual ideal from the representing subwords alone.
pub fn set_via_min_formula(reps: &Representations) -> Vec<PositionSet> {
    let order: Vec<_> = reps
        .subwords()
        .iter()
        .map(|p| SquarefreeMonomial(p.positions()))
        .collect();
    min_formula_sets(&order)
}

/// Every colon set avoids the support and stays below the largest index:
/// `sets[i] ⊆ [max(u_i)] \ supp(u_i)`.
pub fn sets_within_bounds(cert: &LinearQuotientsCertificate) -> bool {
    cert.order.iter().zip(&cert.sets).all(|(u, s)| {
        let below = PositionSet::full(u.max_index().unwrap_or(0));
        s.is_subset(below.difference(u.0))
    })
}

/// If `d_i = i - 1` then `d_j = j - 1` for all `j < i`.
pub fn full_sets_propagate(cert: &LinearQuotientsCertificate) -> bool {
    match cert.d.iter().enumerate().rev().find(|&(i, &d)| d == i) {
        None => true,
        Some((i, _)) => cert.d[..i].iter().enumerate().all(|(j, &d)| d == j),
    }
}

/// Graded Betti numbers `β_{i,j}` of an ideal.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, i: usize, j: usize, value: u64) {
        if value > 0 {
            *self.entries.entry((i, j)).or_insert(0) += value;
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// `β_i = Σ_j β_{i,j}` for `i = 0..=projdim`.
    pub fn totals(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for (&(i, _), &v) in &self.entries {
            if out.len() <= i {
                out.resize(i + 1, 0);
            }
            out[i] += v;
        }
        out
    }

    pub fn projdim(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// `max { j - i : β_{i,j} ≠ 0 }`.
    pub fn regularity(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, j)| j - i).max()
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for (&(i, j), &v) in &self.entries {
            seq.serialize_element(&[i as u64, j as u64, v])?;
        }
        seq.end()
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// `β_{i, i+deg} = Σ_j C(d_j, i)` for an equigenerated ideal with linear quotients.
pub fn betti_from_certificate(cert: &LinearQuotientsCertificate) -> Result<BettiTable> {
    let mut table = BettiTable::new();
    let Some(first) = cert.order.first() else {
        return Ok(table);
    };
    let degree = first.degree();
    if cert.order.iter().any(|u| u.degree() != degree) {
        return Err(Error::MixedDegrees);
    }
    for i in 0..=cert.projdim() {
        let beta: u64 = cert.d.iter().map(|&d| binomial(d, i)).sum();
        table.add(i, i + degree, beta);
    }
    Ok(table)
}

/// `max d_i ≤ n - ℓ(π)`, and `d_i = i - 1` only for `i ≤ n - ℓ(π) + 1`.
pub fn projdim_bound_check(
    cert: &LinearQuotientsCertificate,
    n: usize,
    element_length: usize,
) -> bool {
    let slack = n.saturating_sub(element_length);
    cert.projdim() <= slack
        && cert
            .d
            .iter()
            .enumerate()
            .all(|(i, &d)| d != i || i < slack + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Regularity {
    pub value: usize,
    pub bound: usize,
    pub within_bound: bool,
}

/// `reg(I_Δ) = projdim(I_{Δ∨}) + 1`, with the bound `n - ℓ(π) + 1`.
pub fn regularity_of_sr_ideal(
    sys: &CoxeterSystem,
    q: &Word,
    pi: &GroupElement,
) -> Result<Regularity> {
    let complex = complexes::subword_complex(sys, q, pi)?;
    let cert = lex_certificate(&complex.alexander_dual_ideal())?;
    let value = cert.projdim() + 1;
    let bound = q.len() - pi.length() + 1;
    Ok(Regularity {
        value,
        bound,
        within_bound: value <= bound,
    })
}

/// Numerator `K(t)` of the Hilbert series of an ideal, optionally with its
/// fine-graded refinement.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HilbertNumerator {
    coeffs: BTreeMap<usize, i64>,
    fine: Option<BTreeMap<PositionSet, i64>>,
}

impl HilbertNumerator {
    pub fn from_coefficients(coeffs: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut out = HilbertNumerator::default();
        for (deg, c) in coeffs {
            *out.coeffs.entry(deg).or_insert(0) += c;
        }
        out.coeffs.retain(|_, c| *c != 0);
        out
    }

    /// `K(t) = Σ_{i,j} (-1)^i β_{i,j} t^j`.
    pub fn from_betti(betti: &BettiTable) -> Self {
        Self::from_coefficients(betti.entries().map(|((i, j), v)| {
            let v = v as i64;
            (j, if i % 2 == 0 { v } else { -v })
        }))
    }

    /// `Σ_P (-1)^{|P| - ℓ} t^P` over the given subwords, with the `ℤ`-grading as its image.
    pub fn from_subwords(subwords: &[PositionSet], element_length: usize) -> Self {
        let mut fine = BTreeMap::new();
        for &p in subwords {
            let sign = if (p.len() - element_length).is_multiple_of(2) {
                1
            } else {
                -1
            };
            *fine.entry(p).or_insert(0) += sign;
        }
        fine.retain(|_, c: &mut i64| *c != 0);
        let mut out = Self::from_coefficients(fine.iter().map(|(p, &c)| (p.len(), c)));
        out.fine = Some(fine);
        out
    }

    pub fn coefficient(&self, degree: usize) -> i64 {
        self.coeffs.get(&degree).copied().unwrap_or(0)
    }

    pub fn coefficients(&self) -> &BTreeMap<usize, i64> {
        &self.coeffs
    }

    pub fn fine(&self) -> Option<&BTreeMap<PositionSet, i64>> {
        self.fine.as_ref()
    }

    /// Coefficientwise equality of the `ℤ`-graded forms.
    pub fn same_polynomial(&self, other: &HilbertNumerator) -> bool {
        self.coeffs == other.coeffs
    }
}

impl fmt::Display for HilbertNumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (&deg, &c)) in self.coeffs.iter().enumerate() {
            let abs = c.unsigned_abs();
            match (k, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match (deg, abs) {
                (0, a) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, a) => write!(f, "{a}t")?,
                (d, 1) => write!(f, "t^{d}")?,
                (d, a) => write!(f, "{a}t^{d}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for HilbertNumerator {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Resolution route: the numerator from the Betti numbers of a certificate.
pub fn hilbert_numerator_from_certificate(
    cert: &LinearQuotientsCertificate,
) -> Result<HilbertNumerator> {
    Ok(HilbertNumerator::from_betti(&betti_from_certificate(cert)?))
}
