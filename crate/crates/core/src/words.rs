//! Words, subwords, containment and the Demazure census.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::coxeter::{CoxeterSystem, GroupElement};
use crate::error::{Error, Result};
use crate::positions::PositionSet;
use crate::MAX_POSITIONS;

pub const DEFAULT_CENSUS_LIMIT: usize = 20;

/// An ordered sequence of generator indices. Position `p` (1-based) holds `letters()[p - 1]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Letter at 1-based position `p`.
    pub fn letter(&self, p: usize) -> usize {
        self.0[p - 1]
    }

    /// The letters at the given positions, in order.
    pub fn restrict(&self, positions: PositionSet) -> Word {
        Word(positions.iter().map(|p| self.letter(p)).collect())
    }

    /// All positions `{1, ..., n}`.
    pub fn positions(&self) -> PositionSet {
        PositionSet::full(self.len())
    }

    fn check_size(&self) -> Result<()> {
        if self.len() > MAX_POSITIONS {
            Err(Error::WordTooLarge {
                size: self.len(),
                limit: MAX_POSITIONS,
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::default());
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("invalid generator index {t:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

/// A strictly increasing set of positions in a word.
///
/// Ordered by comparing the increasing position sequences lexicographically, so a
/// smaller subword has the lex-larger monomial `x_P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Subword(PositionSet);

impl Subword {
    pub fn new(positions: PositionSet) -> Self {
        Subword(positions)
    }

    pub fn positions(self) -> PositionSet {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.len()
    }

    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }
}

impl Ord for Subword {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.iter().cmp(other.0.iter())
    }
}

impl PartialOrd for Subword {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The subwords of `Q` representing `π`, sorted so that `x_{P_1} >_lex ... >_lex x_{P_r}`.
///
/// Only [`representations`] builds this type, which is what lets
/// [`crate::ideals::set_via_min_formula`] rely on the provenance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Representations {
    n: usize,
    element_length: usize,
    subwords: Vec<Subword>,
}

impl Representations {
    pub fn word_size(&self) -> usize {
        self.n
    }

    pub fn element_length(&self) -> usize {
        self.element_length
    }

    pub fn subwords(&self) -> &[Subword] {
        &self.subwords
    }

    pub fn len(&self) -> usize {
        self.subwords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subwords.is_empty()
    }
}

/// Greedy containment test: scan `Q` right to left, absorbing letters that shorten the residual.
pub fn contains(sys: &CoxeterSystem, q: &Word, pi: &GroupElement) -> Result<bool> {
    sys.check_word(q)?;
    let mut residual = pi.clone();
    for &s in q.letters().iter().rev() {
        if residual.is_identity() {
            break;
        }
        let next = sys.rmul(&residual, s);
        if next.length() < residual.length() {
            residual = next;
        }
    }
    Ok(residual.is_identity())
}

/// All subwords of `q` that are reduced expressions for `pi`, lex-sorted by position sequence.
pub fn representations(
    sys: &CoxeterSystem,
    q: &Word,
    pi: &GroupElement,
) -> Result<Representations> {
    sys.check_word(q)?;
    q.check_size()?;
    let subwords = representing_subwords(sys, q, q.positions(), pi);
    Ok(Representations {
        n: q.len(),
        element_length: pi.length(),
        subwords,
    })
}

/// Representing subwords of `pi` using only the positions in `allowed`.
pub(crate) fn representing_subwords(
    sys: &CoxeterSystem,
    q: &Word,
    allowed: PositionSet,
    pi: &GroupElement,
) -> Vec<Subword> {
    let positions = allowed.to_vec();
    let mut out = Vec::new();
    // `residual` is `g^{-1} π` for the current prefix product `g`; a letter may be
    // taken only if it is a left descent of the residual.
    fn dfs(
        sys: &CoxeterSystem,
        q: &Word,
        positions: &[usize],
        from: usize,
        residual: &GroupElement,
        chosen: PositionSet,
        out: &mut Vec<Subword>,
    ) {
        if residual.is_identity() {
            out.push(Subword(chosen));
            return;
        }
        let need = residual.length();
        for k in from..positions.len() {
            if positions.len() - k < need {
                break;
            }
            let p = positions[k];
            let next = sys.lmul(q.letter(p), residual);
            if next.length() < residual.length() {
                dfs(sys, q, positions, k + 1, &next, chosen.with(p), out);
            }
        }
    }
    dfs(sys, q, &positions, 0, pi, PositionSet::EMPTY, &mut out);
    out.sort();
    out
}

/// Every subword `P ⊆ Q` with Demazure product `δ(P) = π`, by exhaustive search.
///
/// Branches are cut as soon as the running Demazure product leaves the Bruhat
/// interval below `π`; the product only grows along a branch.
pub fn demazure_subwords(
    sys: &CoxeterSystem,
    q: &Word,
    pi: &GroupElement,
    census_limit: usize,
) -> Result<Vec<PositionSet>> {
    sys.check_word(q)?;
    if q.len() > census_limit.min(MAX_POSITIONS) {
        return Err(Error::WordTooLarge {
            size: q.len(),
            limit: census_limit.min(MAX_POSITIONS),
        });
    }
    let below: HashSet<GroupElement> = sys
        .elements()
        .into_iter()
        .filter(|u| sys.bruhat_leq(u, pi))
        .collect();

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        sys: &CoxeterSystem,
        q: &Word,
        p: usize,
        d: &GroupElement,
        chosen: PositionSet,
        pi: &GroupElement,
        below: &HashSet<GroupElement>,
        out: &mut Vec<PositionSet>,
    ) {
        if p > q.len() {
            if d == pi {
                out.push(chosen);
            }
            return;
        }
        dfs(sys, q, p + 1, d, chosen, pi, below, out);
        let next = sys.rmul(d, q.letter(p));
        if next.length() > d.length() {
            if below.contains(&next) {
                dfs(sys, q, p + 1, &next, chosen.with(p), pi, below, out);
            }
        } else {
            dfs(sys, q, p + 1, d, chosen.with(p), pi, below, out);
        }
    }

    let mut out = Vec::new();
    dfs(
        sys,
        q,
        1,
        &sys.identity(),
        PositionSet::EMPTY,
        pi,
        &below,
        &mut out,
    );
    Ok(out)
}

/// Number of subwords `P` with `δ(P) = π`, keyed by `|P|`.
pub fn demazure_census(
    sys: &CoxeterSystem,
    q: &Word,
    pi: &GroupElement,
    census_limit: usize,
) -> Result<BTreeMap<usize, u64>> {
    let mut census = BTreeMap::new();
    for p in demazure_subwords(sys, q, pi, census_limit)? {
        *census.entry(p.len()).or_insert(0) += 1;
    }
    Ok(census)
}

/// The reduced word `rw` with its `i`-th letter repeated `reps` times.
pub fn make_repeated_word(sys: &CoxeterSystem, rw: &Word, i: usize, reps: usize) -> Result<Word> {
    if !sys.is_reduced_word(rw)? {
        return Err(Error::NotReduced);
    }
    if !(1..=rw.len()).contains(&i) {
        return Err(Error::IndexOutOfRange {
            index: i,
            len: rw.len(),
        });
    }
    if reps == 0 {
        return Err(Error::IndexOutOfRange {
            index: reps,
            len: 0,
        });
    }
    let mut letters = Vec::with_capacity(rw.len() + reps - 1);
    letters.extend_from_slice(&rw.letters()[..i - 1]);
    letters.extend(std::iter::repeat_n(rw.letter(i), reps));
    letters.extend_from_slice(&rw.letters()[i..]);
    Ok(Word(letters))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3() -> CoxeterSystem {
        CoxeterSystem::type_a(3).unwrap()
    }

    fn pos(v: &[usize]) -> Subword {
        Subword(PositionSet::from_positions(v.iter().copied()))
    }

    fn pi_1_2_4(sys: &CoxeterSystem) -> GroupElement {
        sys.element_from_one_line(&[2, 4, 3, 1]).unwrap()
    }

    #[test]
    fn word_parsing() {
        let w: Word = "1,2,1,3,1,2,3,1".parse().unwrap();
        assert_eq!(w.letters(), &[1, 2, 1, 3, 1, 2, 3, 1]);
        assert_eq!(w.to_string(), "1,2,1,3,1,2,3,1");
        assert!("".parse::<Word>().unwrap().is_empty());
        assert!("1,x".parse::<Word>().is_err());
    }

    #[test]
    fn containment() {
        let sys = a3();
        let q: Word = "1,2,1,3,1,2,3,1".parse().unwrap();
        assert!(contains(&sys, &q, &sys.identity()).unwrap());
        assert!(contains(&sys, &q, &pi_1_2_4(&sys)).unwrap());
        assert!(!contains(&sys, &"1,1".parse().unwrap(), &sys.generator(2).unwrap()).unwrap());
    }

    #[test]
    fn representations_examples() {
        let sys = a3();
        let pi = pi_1_2_4(&sys);
        let reps = representations(&sys, &"1,2,1,3,1,2,3,1".parse().unwrap(), &pi).unwrap();
        assert_eq!(
            reps.subwords(),
            &[
                pos(&[1, 2, 4, 6]),
                pos(&[1, 4, 6, 7]),
                pos(&[3, 4, 6, 7]),
                pos(&[4, 5, 6, 7])
            ]
        );
        let reps = representations(&sys, &"1,3,3,1,2,3".parse().unwrap(), &pi).unwrap();
        assert_eq!(
            reps.subwords(),
            &[
                pos(&[1, 2, 5, 6]),
                pos(&[1, 3, 5, 6]),
                pos(&[2, 4, 5, 6]),
                pos(&[3, 4, 5, 6])
            ]
        );
        let reps = representations(&sys, &"1,2,3,2".parse().unwrap(), &pi).unwrap();
        assert_eq!(reps.subwords(), &[pos(&[1, 2, 3, 4])]);
        let reps = representations(&sys, &"1,1".parse().unwrap(), &pi).unwrap();
        assert!(reps.is_empty());
    }

    #[test]
    fn census_examples() {
        let sys = a3();
        let q: Word = "1,2,2,2,3".parse().unwrap();
        let pi = sys.element_of_word(&"1,2,3".parse().unwrap()).unwrap();
        // C(3,1), C(3,2), C(3,3)
        assert_eq!(
            demazure_census(&sys, &q, &pi, DEFAULT_CENSUS_LIMIT).unwrap(),
            BTreeMap::from([(3, 3), (4, 3), (5, 1)])
        );
        let rw: Word = "1,2,3,2".parse().unwrap();
        let pi = sys.element_of_word(&rw).unwrap();
        assert_eq!(
            demazure_census(&sys, &rw, &pi, 20).unwrap(),
            BTreeMap::from([(4, 1)])
        );
        assert!(demazure_census(&sys, &"1,1".parse().unwrap(), &pi, 20)
            .unwrap()
            .is_empty());
        let long = Word::new(vec![1; 21]);
        assert_eq!(
            demazure_census(&sys, &long, &pi, 20),
            Err(Error::WordTooLarge {
                size: 21,
                limit: 20
            })
        );
    }

    #[test]
    fn repeated_word() {
        let sys = a3();
        let rw: Word = "1,2,3".parse().unwrap();
        assert_eq!(
            make_repeated_word(&sys, &rw, 2, 3).unwrap().letters(),
            &[1, 2, 2, 2, 3]
        );
        assert_eq!(make_repeated_word(&sys, &rw, 2, 1).unwrap(), rw);
        assert_eq!(
            make_repeated_word(&sys, &"1,2,3,2".parse().unwrap(), 1, 2)
                .unwrap()
                .letters(),
            &[1, 1, 2, 3, 2]
        );
        assert_eq!(
            make_repeated_word(&sys, &"1,1".parse().unwrap(), 1, 2),
            Err(Error::NotReduced)
        );
        assert_eq!(
            make_repeated_word(&sys, &rw, 4, 2),
            Err(Error::IndexOutOfRange { index: 4, len: 3 })
        );
    }

    #[test]
    fn repeated_word_representation_count() {
        let sys = a3();
        for pi in sys.elements().into_iter().filter(|g| !g.is_identity()) {
            for rw in sys.reduced_words(&pi) {
                for i in 1..=rw.len() {
                    for reps in 1..=4 {
                        let q = make_repeated_word(&sys, &rw, i, reps).unwrap();
                        let reps_found = representations(&sys, &q, &pi).unwrap();
                        assert_eq!(reps_found.len(), q.len() - pi.length() + 1);
                    }
                }
            }
        }
    }
}
