//! Brute-force ground truth used to check the fast routes: rational homology,
//! Hochster's formula, and literal subword enumeration.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, Signed};
use serde::Serialize;

use crate::complexes::SimplicialComplex;
use crate::coxeter::{CoxeterSystem, GroupElement};
use crate::error::{Error, Result};
use crate::ideals::{BettiTable, MonomialIdeal};
use crate::positions::PositionSet;
use crate::words::Word;

pub const HOMOLOGY_VERTEX_LIMIT: usize = 14;
pub const HOCHSTER_VARIABLE_LIMIT: usize = 10;
pub const EXHAUSTIVE_WORD_LIMIT: usize = 18;
pub const EXHAUSTIVE_BRUHAT_LIMIT: usize = 12;

/// Reduced Betti numbers over `ℚ`; `reduced_betti[k]` is the rank of `H̃_{k-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub reduced_betti: Vec<u64>,
}

impl HomologyProfile {
    /// Rank of `H̃_dim`, for `dim ≥ -1`.
    pub fn rank(&self, dim: isize) -> u64 {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|k| self.reduced_betti.get(k).copied())
            .unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.reduced_betti.iter().all(|&b| b == 0)
    }

    /// Rational homology of a `dim`-sphere.
    pub fn is_sphere_of_dim(&self, dim: isize) -> bool {
        let total: u64 = self.reduced_betti.iter().sum();
        total == 1 && self.rank(dim) == 1
    }

    /// Alternating sum `Σ (-1)^k rank H̃_k`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.reduced_betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 1 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// Rank over `ℚ` of a sparse integer matrix given as rows of `(column, entry)`
/// sorted by column. Fraction-free elimination; rows are divided by their
/// content after each step, and the computation restarts with big integers if
/// 64-bit arithmetic overflows.
pub fn rational_rank(rows: &[Vec<(usize, i64)>]) -> usize {
    if let Some(rank) = eliminate::<i64>(rows.to_vec()) {
        return rank;
    }
    let big = rows
        .iter()
        .map(|r| r.iter().map(|&(c, v)| (c, BigInt::from(v))).collect())
        .collect();
    eliminate::<BigInt>(big).expect("big integer elimination cannot overflow")
}

fn eliminate<T>(rows: Vec<Vec<(usize, T)>>) -> Option<usize>
where
    T: Integer + Signed + CheckedMul + CheckedSub + Clone,
{
    let mut pivots: HashMap<usize, Vec<(usize, T)>> = HashMap::new();
    for mut row in rows {
        row.retain(|(_, v)| !v.is_zero());
        while let Some((lead, _)) = row.first() {
            let Some(pivot) = pivots.get(lead) else {
                pivots.insert(*lead, row);
                break;
            };
            row = combine(&row, pivot)?;
        }
    }
    Some(pivots.len())
}

/// `a·row - b·pivot` with the leading entries cancelling, divided by its content.
fn combine<T>(row: &[(usize, T)], pivot: &[(usize, T)]) -> Option<Vec<(usize, T)>>
where
    T: Integer + Signed + CheckedMul + CheckedSub + Clone,
{
    let a = pivot[0].1.clone();
    let b = row[0].1.clone();
    let g = a.gcd(&b);
    let (a, b) = (a / g.clone(), b / g);
    let mut out: Vec<(usize, T)> = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let (col, value) = match (row.get(i), pivot.get(j)) {
            (Some((ci, vi)), Some((cj, _))) if ci < cj => {
                i += 1;
                (*ci, vi.checked_mul(&a)?)
            }
            (Some((ci, _)), Some((cj, vj))) if cj < ci => {
                j += 1;
                (*cj, T::zero().checked_sub(&vj.checked_mul(&b)?)?)
            }
            (Some((ci, vi)), Some((_, vj))) => {
                i += 1;
                j += 1;
                (*ci, vi.checked_mul(&a)?.checked_sub(&vj.checked_mul(&b)?)?)
            }
            (Some((ci, vi)), None) => {
                i += 1;
                (*ci, vi.checked_mul(&a)?)
            }
            (None, Some((cj, vj))) => {
                j += 1;
                (*cj, T::zero().checked_sub(&vj.checked_mul(&b)?)?)
            }
            (None, None) => unreachable!(),
        };
        if !value.is_zero() {
            out.push((col, value));
        }
    }
    let content = out.iter().fold(T::zero(), |g, (_, v)| g.gcd(v));
    if !content.is_zero() && !content.is_one() {
        for (_, v) in out.iter_mut() {
            *v = v.clone() / content.clone();
        }
    }
    Some(out)
}

/// Reduced rational homology of the complex whose faces are `faces` (closed
/// under subsets, possibly empty for the void complex).
fn homology_of_faces(faces: &[PositionSet]) -> HomologyProfile {
    if faces.is_empty() {
        return HomologyProfile {
            reduced_betti: vec![],
        };
    }
    let top = faces.iter().map(|f| f.len()).max().unwrap_or(0);
    let mut by_size: Vec<Vec<PositionSet>> = vec![Vec::new(); top + 1];
    for &f in faces {
        by_size[f.len()].push(f);
    }
    let index: Vec<HashMap<PositionSet, usize>> = by_size
        .iter()
        .map(|fs| fs.iter().enumerate().map(|(i, &f)| (f, i)).collect())
        .collect();
    // ranks[k] = rank of the boundary from faces of size k to faces of size k-1
    let mut ranks = vec![0usize; top + 2];
    for k in 1..=top {
        let rows: Vec<Vec<(usize, i64)>> = by_size[k]
            .iter()
            .map(|&f| {
                let mut row: Vec<(usize, i64)> = f
                    .iter()
                    .enumerate()
                    .map(|(pos, v)| {
                        (
                            index[k - 1][&f.without(v)],
                            if pos % 2 == 0 { 1 } else { -1 },
                        )
                    })
                    .collect();
                row.sort_unstable_by_key(|&(c, _)| c);
                row
            })
            .collect();
        ranks[k] = rational_rank(&rows);
    }
    let reduced_betti = (0..=top)
        .map(|k| (by_size[k].len() - ranks[k] - ranks[k + 1]) as u64)
        .collect();
    HomologyProfile { reduced_betti }
}

/// Reduced rational homology, indexed from dimension `-1`.
pub fn simplicial_homology(complex: &SimplicialComplex) -> Result<HomologyProfile> {
    let support = complex.support().len();
    if support > HOMOLOGY_VERTEX_LIMIT {
        return Err(Error::TooLarge(format!(
            "homology of a complex on {support} vertices (limit {HOMOLOGY_VERTEX_LIMIT})"
        )));
    }
    Ok(homology_of_faces(&complex.faces()))
}

/// Graded Betti numbers of a squarefree monomial ideal by Hochster's formula:
/// `β_{i,σ}(I_Γ) = dim H̃_{|σ|-i-2}(Γ|_σ)` where `I = I_Γ`.
pub fn hochster_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    let n = ideal.ambient_variables();
    if n > HOCHSTER_VARIABLE_LIMIT {
        return Err(Error::TooLarge(format!(
            "Hochster's formula over {n} variables (limit {HOCHSTER_VARIABLE_LIMIT})"
        )));
    }
    let mut table = BettiTable::new();
    if ideal.is_unit() {
        table.add(0, 0, 1);
        return Ok(table);
    }
    let gens: Vec<PositionSet> = ideal.gens().iter().map(|g| g.support()).collect();
    let is_face = |s: PositionSet| !gens.iter().any(|g| g.is_subset(s));
    for sigma in PositionSet::full(n).subsets() {
        // restrictions to faces are simplices, hence acyclic
        if is_face(sigma) {
            continue;
        }
        let faces: Vec<PositionSet> = sigma.subsets().filter(|&s| is_face(s)).collect();
        let profile = homology_of_faces(&faces);
        for (k, &b) in profile.reduced_betti.iter().enumerate() {
            // H̃_{k-1} contributes to i = |σ| - (k-1) - 2
            if b > 0 && sigma.len() > k {
                table.add(sigma.len() - k - 1, sigma.len(), b);
            }
        }
    }
    Ok(table)
}

/// Literal search over every subword of `q` for a reduced expression of `pi`.
pub fn exhaustive_contains(sys: &CoxeterSystem, q: &Word, pi: &GroupElement) -> Result<bool> {
    sys.check_word(q)?;
    if q.len() > EXHAUSTIVE_WORD_LIMIT {
        return Err(Error::TooLarge(format!(
            "{} letters (limit {EXHAUSTIVE_WORD_LIMIT})",
            q.len()
        )));
    }
    Ok(q.positions()
        .subsets()
        .filter(|p| p.len() == pi.length())
        .any(|p| represents(sys, &q.restrict(p), pi)))
}

/// Literal subword test on one reduced word of `w`.
pub fn exhaustive_bruhat(sys: &CoxeterSystem, u: &GroupElement, w: &GroupElement) -> Result<bool> {
    if w.length() > EXHAUSTIVE_BRUHAT_LIMIT {
        return Err(Error::TooLarge(format!(
            "length {} (limit {EXHAUSTIVE_BRUHAT_LIMIT})",
            w.length()
        )));
    }
    let word = sys.reduced_word(w);
    Ok(word
        .positions()
        .subsets()
        .filter(|p| p.len() == u.length())
        .any(|p| represents(sys, &word.restrict(p), u)))
}

fn represents(sys: &CoxeterSystem, word: &Word, g: &GroupElement) -> bool {
    word.len() == g.length() && sys.element_of_word(word).map(|h| &h == g).unwrap_or(false)
}
