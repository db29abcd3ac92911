//! Exact arithmetic in the finite Coxeter groups of types `A`, `B` and `I2(m)`.
//!
//! Generators are indexed from 1. Conventions:
//!
//! * `A(n)`: permutations of `{1, ..., n+1}` in one-line notation. Right
//!   multiplication by `s_i` swaps the entries in positions `i` and `i+1`.
//! * `B(n)`: signed permutations of `{±1, ..., ±n}`. `s_1` negates the entry in
//!   position 1 and `s_{i+1}` swaps positions `i` and `i+1`, so `m(s_1, s_2) = 4`.
//! * `I2(m)`: the dihedral group of order `2m`, stored as `r^k` or `r^k s` with
//!   `s_1 = s` and `s_2 = r s`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::words::Word;

pub const MAX_RANK_A: usize = 7;
pub const MAX_RANK_B: usize = 5;
pub const MIN_DIHEDRAL: usize = 3;
pub const MAX_DIHEDRAL: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    A(usize),
    B(usize),
    I2(usize),
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A(n) => write!(f, "A{n}"),
            Family::B(n) => write!(f, "B{n}"),
            Family::I2(m) => write!(f, "I2({m})"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Repr {
    /// One-line notation; entries are positive for type `A`.
    Signed(Vec<i8>),
    Dihedral {
        rotation: u8,
        reflection: bool,
    },
}

/// An element of a finite Coxeter group together with its length.
#[derive(Clone)]
pub struct GroupElement {
    repr: Repr,
    length: usize,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.repr == other.repr
    }
}

impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.repr.hash(state);
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.repr.cmp(&other.repr)
    }
}

impl GroupElement {
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// One-line notation for types `A` and `B`; `None` for dihedral elements.
    pub fn one_line(&self) -> Option<Vec<i64>> {
        match &self.repr {
            Repr::Signed(v) => Some(v.iter().map(|&x| x as i64).collect()),
            Repr::Dihedral { .. } => None,
        }
    }

    /// `(rotation count, reflection flag)` for dihedral elements.
    pub fn dihedral(&self) -> Option<(usize, bool)> {
        match self.repr {
            Repr::Dihedral {
                rotation,
                reflection,
            } => Some((rotation as usize, reflection)),
            Repr::Signed(_) => None,
        }
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Signed(v) => {
                write!(f, "[")?;
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "]")
            }
            Repr::Dihedral {
                rotation,
                reflection,
            } => {
                write!(f, "r^{rotation}")?;
                if *reflection {
                    write!(f, " s")?;
                }
                Ok(())
            }
        }
    }
}

impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterSystem {
    family: Family,
    matrix: Vec<Vec<usize>>,
}

impl CoxeterSystem {
    pub fn new(family: Family) -> Result<Self> {
        let rank = match family {
            Family::A(n) if (1..=MAX_RANK_A).contains(&n) => n,
            Family::B(n) if (2..=MAX_RANK_B).contains(&n) => n,
            Family::I2(m) if (MIN_DIHEDRAL..=MAX_DIHEDRAL).contains(&m) => 2,
            _ => return Err(Error::UnsupportedSystem(family.to_string())),
        };
        let mut matrix = vec![vec![2; rank]; rank];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = 1;
        }
        for i in 0..rank.saturating_sub(1) {
            let m = match family {
                Family::A(_) => 3,
                Family::B(_) if i == 0 => 4,
                Family::B(_) => 3,
                Family::I2(m) => m,
            };
            matrix[i][i + 1] = m;
            matrix[i + 1][i] = m;
        }
        Ok(CoxeterSystem { family, matrix })
    }

    pub fn type_a(rank: usize) -> Result<Self> {
        Self::new(Family::A(rank))
    }

    pub fn type_b(rank: usize) -> Result<Self> {
        Self::new(Family::B(rank))
    }

    pub fn dihedral(m: usize) -> Result<Self> {
        Self::new(Family::I2(m))
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Number of simple generators.
    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn coxeter_matrix(&self) -> &[Vec<usize>] {
        &self.matrix
    }

    /// Size of the signed permutations used by types `A` and `B`.
    fn degree(&self) -> usize {
        match self.family {
            Family::A(n) => n + 1,
            Family::B(n) => n,
            Family::I2(_) => 0,
        }
    }

    fn modulus(&self) -> usize {
        match self.family {
            Family::I2(m) => m,
            _ => 0,
        }
    }

    pub fn check_generator(&self, s: usize) -> Result<()> {
        if (1..=self.rank()).contains(&s) {
            Ok(())
        } else {
            Err(Error::InvalidGenerator {
                index: s,
                rank: self.rank(),
            })
        }
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        w.letters()
            .iter()
            .try_for_each(|&s| self.check_generator(s))
    }

    fn make(&self, repr: Repr) -> GroupElement {
        let length = self.length_of(&repr);
        GroupElement { repr, length }
    }

    fn length_of(&self, repr: &Repr) -> usize {
        match repr {
            Repr::Signed(v) => {
                let mut inv = 0usize;
                for i in 0..v.len() {
                    for j in i + 1..v.len() {
                        if v[i] > v[j] {
                            inv += 1;
                        }
                    }
                }
                let neg: i64 = v.iter().filter(|&&x| x < 0).map(|&x| -(x as i64)).sum();
                inv + neg as usize
            }
            &Repr::Dihedral {
                rotation,
                reflection,
            } => {
                let m = self.modulus();
                let k = rotation as usize;
                if !reflection {
                    2 * k.min(m - k)
                } else if k == 0 {
                    1
                } else {
                    (2 * k - 1).min(2 * (m - k) + 1)
                }
            }
        }
    }

    pub fn identity(&self) -> GroupElement {
        match self.family {
            Family::I2(_) => GroupElement {
                repr: Repr::Dihedral {
                    rotation: 0,
                    reflection: false,
                },
                length: 0,
            },
            _ => GroupElement {
                repr: Repr::Signed((1..=self.degree() as i8).collect()),
                length: 0,
            },
        }
    }

    pub fn generator(&self, s: usize) -> Result<GroupElement> {
        self.check_generator(s)?;
        Ok(self.rmul(&self.identity(), s))
    }

    /// Builds an element of type `A` or `B` from one-line notation.
    pub fn element_from_one_line(&self, one_line: &[i64]) -> Result<GroupElement> {
        let n = self.degree();
        let signed = match self.family {
            Family::A(_) => false,
            Family::B(_) => true,
            Family::I2(_) => {
                return Err(Error::InvalidElement(
                    "one-line notation needs type A or B".into(),
                ));
            }
        };
        if one_line.len() != n {
            return Err(Error::InvalidElement(format!(
                "expected {n} entries, got {}",
                one_line.len()
            )));
        }
        let mut seen = vec![false; n + 1];
        for &x in one_line {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] || (!signed && x < 0) {
                return Err(Error::InvalidElement(format!(
                    "{one_line:?} is not a valid permutation"
                )));
            }
            seen[a] = true;
        }
        Ok(self.make(Repr::Signed(one_line.iter().map(|&x| x as i8).collect())))
    }

    /// Builds the dihedral element `r^rotation` or `r^rotation s`.
    pub fn element_from_dihedral(&self, rotation: usize, reflection: bool) -> Result<GroupElement> {
        let m = self.modulus();
        if m == 0 {
            return Err(Error::InvalidElement("dihedral pair needs type I2".into()));
        }
        if rotation >= m {
            return Err(Error::InvalidElement(format!(
                "rotation {rotation} not below {m}"
            )));
        }
        Ok(self.make(Repr::Dihedral {
            rotation: rotation as u8,
            reflection,
        }))
    }

    /// `g · s_s`. The generator must be valid.
    pub(crate) fn rmul(&self, g: &GroupElement, s: usize) -> GroupElement {
        debug_assert!(self.check_generator(s).is_ok());
        let repr = match (&g.repr, self.family) {
            (Repr::Signed(v), Family::A(_)) => {
                let mut v = v.clone();
                v.swap(s - 1, s);
                Repr::Signed(v)
            }
            (Repr::Signed(v), Family::B(_)) => {
                let mut v = v.clone();
                if s == 1 {
                    v[0] = -v[0];
                } else {
                    v.swap(s - 2, s - 1);
                }
                Repr::Signed(v)
            }
            (
                &Repr::Dihedral {
                    rotation,
                    reflection,
                },
                Family::I2(_),
            ) => self.dihedral_product((rotation, reflection), ((s - 1) as u8, true)),
            _ => unreachable!("element does not belong to {}", self.family),
        };
        self.make(repr)
    }

    /// `s_s · g`. The generator must be valid.
    pub(crate) fn lmul(&self, s: usize, g: &GroupElement) -> GroupElement {
        debug_assert!(self.check_generator(s).is_ok());
        let repr = match (&g.repr, self.family) {
            (Repr::Signed(v), Family::A(_)) => {
                let (a, b) = (s as i8, s as i8 + 1);
                Repr::Signed(
                    v.iter()
                        .map(|&x| {
                            if x == a {
                                b
                            } else if x == b {
                                a
                            } else {
                                x
                            }
                        })
                        .collect(),
                )
            }
            (Repr::Signed(v), Family::B(_)) => {
                let act = |x: i8| -> i8 {
                    let (sign, a) = (x.signum(), x.abs());
                    if s == 1 {
                        if a == 1 {
                            -x
                        } else {
                            x
                        }
                    } else if a == s as i8 - 1 {
                        sign * s as i8
                    } else if a == s as i8 {
                        sign * (s as i8 - 1)
                    } else {
                        x
                    }
                };
                Repr::Signed(v.iter().map(|&x| act(x)).collect())
            }
            (
                &Repr::Dihedral {
                    rotation,
                    reflection,
                },
                Family::I2(_),
            ) => self.dihedral_product(((s - 1) as u8, true), (rotation, reflection)),
            _ => unreachable!("element does not belong to {}", self.family),
        };
        self.make(repr)
    }

    fn dihedral_product(&self, (a, e): (u8, bool), (b, f): (u8, bool)) -> Repr {
        let m = self.modulus() as i64;
        let b = if e { -(b as i64) } else { b as i64 };
        let rotation = (a as i64 + b).rem_euclid(m) as u8;
        Repr::Dihedral {
            rotation,
            reflection: e ^ f,
        }
    }

    /// `g · h`.
    pub fn multiply(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        let repr = match (&g.repr, &h.repr) {
            (Repr::Signed(gv), Repr::Signed(hv)) => Repr::Signed(
                hv.iter()
                    .map(|&x| {
                        let y = gv[x.unsigned_abs() as usize - 1];
                        if x < 0 {
                            -y
                        } else {
                            y
                        }
                    })
                    .collect(),
            ),
            (
                &Repr::Dihedral {
                    rotation: a,
                    reflection: e,
                },
                &Repr::Dihedral {
                    rotation: b,
                    reflection: f,
                },
            ) => self.dihedral_product((a, e), (b, f)),
            _ => panic!("elements belong to different families"),
        };
        self.make(repr)
    }

    pub fn inverse(&self, g: &GroupElement) -> GroupElement {
        let repr = match &g.repr {
            Repr::Signed(v) => {
                let mut inv = vec![0i8; v.len()];
                for (i, &x) in v.iter().enumerate() {
                    let pos = i as i8 + 1;
                    inv[x.unsigned_abs() as usize - 1] = if x < 0 { -pos } else { pos };
                }
                Repr::Signed(inv)
            }
            &Repr::Dihedral {
                rotation,
                reflection,
            } => {
                if reflection {
                    Repr::Dihedral {
                        rotation,
                        reflection,
                    }
                } else {
                    let m = self.modulus() as u8;
                    Repr::Dihedral {
                        rotation: (m - rotation) % m,
                        reflection,
                    }
                }
            }
        };
        GroupElement {
            repr,
            length: g.length,
        }
    }

    pub fn length(&self, g: &GroupElement) -> usize {
        g.length
    }

    /// The ordered product of the letters of `w`.
    pub fn element_of_word(&self, w: &Word) -> Result<GroupElement> {
        self.check_word(w)?;
        Ok(w.letters()
            .iter()
            .fold(self.identity(), |g, &s| self.rmul(&g, s)))
    }

    /// True iff the length strictly increases at every prefix.
    pub fn is_reduced_word(&self, w: &Word) -> Result<bool> {
        self.check_word(w)?;
        let mut g = self.identity();
        for &s in w.letters() {
            let next = self.rmul(&g, s);
            if next.length < g.length {
                return Ok(false);
            }
            g = next;
        }
        Ok(true)
    }

    pub fn left_descents(&self, g: &GroupElement) -> Vec<usize> {
        (1..=self.rank())
            .filter(|&s| self.lmul(s, g).length < g.length)
            .collect()
    }

    pub fn right_descents(&self, g: &GroupElement) -> Vec<usize> {
        (1..=self.rank())
            .filter(|&s| self.rmul(g, s).length < g.length)
            .collect()
    }

    /// The lexicographically smallest reduced word of `g`.
    pub fn reduced_word(&self, g: &GroupElement) -> Word {
        let mut letters = Vec::with_capacity(g.length);
        let mut cur = g.clone();
        while !cur.is_identity() {
            let s = self.left_descents(&cur)[0];
            letters.push(s);
            cur = self.lmul(s, &cur);
        }
        Word::new(letters)
    }

    /// Every reduced word of `g`, sorted lexicographically.
    pub fn reduced_words(&self, g: &GroupElement) -> Vec<Word> {
        fn peel(
            sys: &CoxeterSystem,
            g: &GroupElement,
            prefix: &mut Vec<usize>,
            out: &mut Vec<Word>,
        ) {
            if g.is_identity() {
                out.push(Word::new(prefix.clone()));
                return;
            }
            for s in sys.left_descents(g) {
                prefix.push(s);
                peel(sys, &sys.lmul(s, g), prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        peel(self, g, &mut Vec::with_capacity(g.length), &mut out);
        out
    }

    /// Bruhat order test `u ≤ w` by a greedy right-to-left scan of one reduced word of `w`.
    pub fn bruhat_leq(&self, u: &GroupElement, w: &GroupElement) -> bool {
        if u.length > w.length {
            return false;
        }
        let word = self.reduced_word(w);
        let mut residual = u.clone();
        for &s in word.letters().iter().rev() {
            if residual.is_identity() {
                break;
            }
            let next = self.rmul(&residual, s);
            if next.length < residual.length {
                residual = next;
            }
        }
        residual.is_identity()
    }

    /// Demazure product: multiply letter by letter, skipping letters that would shorten.
    pub fn demazure_product(&self, w: &Word) -> Result<GroupElement> {
        self.check_word(w)?;
        Ok(self.demazure_of_letters(self.identity(), w.letters().iter().copied()))
    }

    pub(crate) fn demazure_of_letters(
        &self,
        start: GroupElement,
        letters: impl IntoIterator<Item = usize>,
    ) -> GroupElement {
        letters.into_iter().fold(start, |d, s| {
            let next = self.rmul(&d, s);
            if next.length > d.length {
                next
            } else {
                d
            }
        })
    }

    /// All group elements, in breadth-first order from the identity.
    pub fn elements(&self) -> Vec<GroupElement> {
        let id = self.identity();
        let mut seen: HashSet<GroupElement> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id.clone()]);
        let mut out = Vec::new();
        while let Some(g) = queue.pop_front() {
            for s in 1..=self.rank() {
                let h = self.rmul(&g, s);
                if seen.insert(h.clone()) {
                    queue.push_back(h);
                }
            }
            out.push(g);
        }
        out
    }

    pub fn longest_element(&self) -> GroupElement {
        let mut g = self.identity();
        loop {
            match (1..=self.rank()).find(|&s| self.rmul(&g, s).length > g.length) {
                Some(s) => g = self.rmul(&g, s),
                None => return g,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    fn w(letters: &[usize]) -> Word {
        Word::new(letters.to_vec())
    }

    fn systems() -> Vec<CoxeterSystem> {
        let mut out = Vec::new();
        for n in 1..=4 {
            out.push(CoxeterSystem::type_a(n).unwrap());
        }
        for n in 2..=4 {
            out.push(CoxeterSystem::type_b(n).unwrap());
        }
        for m in 3..=12 {
            out.push(CoxeterSystem::dihedral(m).unwrap());
        }
        out
    }

    /// Word length by breadth-first search in the Cayley graph.
    fn bfs_lengths(sys: &CoxeterSystem) -> HashMap<GroupElement, usize> {
        let id = sys.identity();
        let mut dist = HashMap::from([(id.clone(), 0usize)]);
        let mut queue = VecDeque::from([id]);
        while let Some(g) = queue.pop_front() {
            let d = dist[&g];
            for s in 1..=sys.rank() {
                let h = sys.rmul(&g, s);
                dist.entry(h.clone()).or_insert_with(|| {
                    queue.push_back(h);
                    d + 1
                });
            }
        }
        dist
    }

    #[test]
    fn group_orders() {
        assert_eq!(CoxeterSystem::type_a(3).unwrap().elements().len(), 24);
        assert_eq!(CoxeterSystem::type_b(3).unwrap().elements().len(), 48);
        assert_eq!(CoxeterSystem::dihedral(7).unwrap().elements().len(), 14);
    }

    #[test]
    fn cached_length_matches_cayley_distance() {
        for sys in systems() {
            for (g, d) in bfs_lengths(&sys) {
                assert_eq!(g.length(), d, "{} element {g}", sys.family());
            }
        }
    }

    #[test]
    fn coxeter_matrix_orders() {
        for sys in systems() {
            let m = sys.coxeter_matrix();
            for s in 1..=sys.rank() {
                for t in 1..=sys.rank() {
                    assert_eq!(m[s - 1][t - 1], m[t - 1][s - 1]);
                    let st = sys.multiply(&sys.generator(s).unwrap(), &sys.generator(t).unwrap());
                    let mut p = sys.identity();
                    let mut order = 0;
                    loop {
                        p = sys.multiply(&p, &st);
                        order += 1;
                        if p.is_identity() {
                            break;
                        }
                    }
                    assert_eq!(order, m[s - 1][t - 1], "{} ({s},{t})", sys.family());
                }
            }
        }
    }

    #[test]
    fn left_multiplication_agrees_with_product() {
        for sys in systems() {
            for g in sys.elements() {
                for s in 1..=sys.rank() {
                    let gen = sys.generator(s).unwrap();
                    assert_eq!(sys.lmul(s, &g), sys.multiply(&gen, &g));
                    assert_eq!(sys.rmul(&g, s), sys.multiply(&g, &gen));
                }
                assert!(sys.multiply(&g, &sys.inverse(&g)).is_identity());
            }
        }
    }

    #[test]
    fn length_changes_by_one() {
        for sys in systems() {
            for g in sys.elements() {
                for s in 1..=sys.rank() {
                    let h = sys.rmul(&g, s);
                    assert_eq!(h.length().abs_diff(g.length()), 1);
                }
            }
        }
    }

    #[test]
    fn element_of_word_examples() {
        let a3 = CoxeterSystem::type_a(3).unwrap();
        assert_eq!(
            a3.element_of_word(&w(&[])).unwrap().one_line().unwrap(),
            vec![1, 2, 3, 4]
        );
        let pi = a3.element_of_word(&w(&[1, 2, 3, 2])).unwrap();
        assert_eq!(pi.one_line().unwrap(), vec![2, 4, 3, 1]);
        assert_eq!(a3.length(&pi), 4);
        assert_eq!(a3.element_from_one_line(&[4, 3, 2, 1]).unwrap().length(), 6);
        assert_eq!(
            a3.element_of_word(&w(&[1, 4])),
            Err(Error::InvalidGenerator { index: 4, rank: 3 })
        );

        let i5 = CoxeterSystem::dihedral(5).unwrap();
        let g = i5.element_of_word(&w(&[1, 2, 1, 2, 1])).unwrap();
        assert_eq!(g, i5.longest_element());
        assert_eq!(g.length(), 5);
        // r^{-2} s, read off the multiplication table
        assert_eq!(g.dihedral(), Some((3, true)));
    }

    #[test]
    fn reduced_word_checks() {
        let a3 = CoxeterSystem::type_a(3).unwrap();
        assert!(a3.is_reduced_word(&w(&[1, 2, 3, 2])).unwrap());
        assert!(!a3.is_reduced_word(&w(&[1, 1])).unwrap());
        // prefix lengths of (2,1,3,2): 1,2,3,4
        assert!(a3.is_reduced_word(&w(&[2, 1, 3, 2])).unwrap());
        assert!(!a3.is_reduced_word(&w(&[1, 3, 1])).unwrap());
    }

    #[test]
    fn descents() {
        let a3 = CoxeterSystem::type_a(3).unwrap();
        assert!(a3.left_descents(&a3.identity()).is_empty());
        let pi = a3.element_from_one_line(&[2, 4, 3, 1]).unwrap();
        assert_eq!(a3.left_descents(&pi), vec![1, 3]);
        assert_eq!(a3.left_descents(&a3.longest_element()), vec![1, 2, 3]);
        assert_eq!(a3.right_descents(&pi), vec![2, 3]);
    }

    #[test]
    fn reduced_word_enumeration() {
        let a3 = CoxeterSystem::type_a(3).unwrap();
        let pi = a3.element_from_one_line(&[2, 4, 3, 1]).unwrap();
        assert_eq!(
            a3.reduced_words(&pi),
            vec![w(&[1, 2, 3, 2]), w(&[1, 3, 2, 3]), w(&[3, 1, 2, 3])]
        );
        assert_eq!(a3.reduced_words(&a3.identity()), vec![w(&[])]);
        let a2 = CoxeterSystem::type_a(2).unwrap();
        assert_eq!(
            a2.reduced_words(&a2.longest_element()),
            vec![w(&[1, 2, 1]), w(&[2, 1, 2])]
        );
        // 16 reduced words for the longest element of S_4
        assert_eq!(a3.reduced_words(&a3.longest_element()).len(), 16);
        for sys in systems() {
            for g in sys.elements().into_iter().take(60) {
                let words = sys.reduced_words(&g);
                assert!(words.windows(2).all(|p| p[0] < p[1]));
                for v in &words {
                    assert_eq!(v.len(), g.length());
                    assert_eq!(sys.element_of_word(v).unwrap(), g);
                }
            }
        }
    }

    #[test]
    fn bruhat_examples() {
        let a3 = CoxeterSystem::type_a(3).unwrap();
        let pi = a3.element_from_one_line(&[2, 4, 3, 1]).unwrap();
        assert!(a3.bruhat_leq(&a3.identity(), &pi));
        assert!(a3.bruhat_leq(&pi, &pi));
        let s2 = a3.generator(2).unwrap();
        let s1s3 = a3.element_of_word(&w(&[1, 3])).unwrap();
        assert!(!a3.bruhat_leq(&s2, &s1s3));
        assert!(a3.bruhat_leq(&pi, &a3.longest_element()));
    }

    #[test]
    fn demazure_examples() {
        let a3 = CoxeterSystem::type_a(3).unwrap();
        assert_eq!(
            a3.demazure_product(&w(&[1, 1])).unwrap(),
            a3.generator(1).unwrap()
        );
        let rw = w(&[1, 2, 3, 2]);
        assert_eq!(
            a3.demazure_product(&rw).unwrap(),
            a3.element_of_word(&rw).unwrap()
        );
        assert_eq!(
            a3.demazure_product(&w(&[1, 2, 2, 2, 3])).unwrap(),
            a3.element_of_word(&w(&[1, 2, 3])).unwrap()
        );
    }

    #[test]
    fn unsupported_systems() {
        assert!(CoxeterSystem::type_a(0).is_err());
        assert!(CoxeterSystem::type_a(8).is_err());
        assert!(CoxeterSystem::type_b(6).is_err());
        assert!(CoxeterSystem::dihedral(2).is_err());
        assert!(CoxeterSystem::dihedral(13).is_err());
        let a2 = CoxeterSystem::type_a(2).unwrap();
        assert!(a2.element_from_one_line(&[1, 1, 2]).is_err());
        assert!(a2.element_from_one_line(&[-1, 2, 3]).is_err());
        let b2 = CoxeterSystem::type_b(2).unwrap();
        assert_eq!(b2.element_from_one_line(&[-2, -1]).unwrap().length(), 3);
    }
}
