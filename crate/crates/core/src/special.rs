//! Subword complexes with `r ≤ n - ℓ(π) + 1` dual generators and `d_r = r - 1`.
//!
//! For these the dual ideal factors as `(x_{P_r} / x_l) · (x_{m_1}, ..., x_{m_{r-1}}, x_l)`
//! with `m_j = min(P_j \ P_r)`, which pins down the Betti numbers, the Hilbert
//! numerator, the Demazure census and the Stanley–Reisner ideal. Every closed
//! formula here is recomputed by a general route and a disagreement is an error.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::complexes::SimplicialComplex;
use crate::coxeter::{CoxeterSystem, GroupElement};
use crate::error::{Error, Result};
use crate::ideals::{
    self, binomial, BettiTable, HilbertNumerator, LinearQuotientsCertificate, MonomialIdeal,
    SquarefreeMonomial,
};
use crate::oracles;
use crate::positions::PositionSet;
use crate::verdict::Verdict;
use crate::words::{self, Representations, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SphereVerdict {
    /// `r == n - ℓ(π) + 1`.
    pub is_sphere: bool,
    /// `δ(Q) == π` agrees with `is_sphere`.
    pub demazure_agrees: bool,
    /// Rational homology is that of a sphere of dimension `n - ℓ(π) - 1` when
    /// `is_sphere`, and vanishes in that dimension otherwise.
    pub homology: Verdict,
}

impl SphereVerdict {
    pub fn consistent(&self) -> bool {
        self.demazure_agrees && !self.homology.is_fail()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialClassReport {
    pub r: usize,
    pub n: usize,
    pub element_length: usize,
    pub is_special: bool,
    /// The pivot `l`. For `r = 1` every index of `P_1` works; the largest is used.
    pub pivot_l: Option<usize>,
    pub common_factor: Option<SquarefreeMonomial>,
    /// `(min(P_1 \ P_r), ..., min(P_{r-1} \ P_r), l)`.
    pub linear_vars: Vec<usize>,
    pub height: Option<usize>,
    pub betti: Option<BettiTable>,
    pub numerator: Option<HilbertNumerator>,
    pub census_ok: Option<Verdict>,
    pub sphere: Option<SphereVerdict>,
    pub ci_generators: Option<MonomialIdeal>,
    pub is_complete_intersection: Option<bool>,
    pub cm_dual: Option<bool>,
    /// The principal-dual rule `r == 1`. It misses the case `ℓ(π) = 1`, where
    /// `I_Δ` is principal and `k[Δ∨]` is Cohen–Macaulay for every `r`.
    pub cm_dual_principal_rule: Option<bool>,
    /// `cm_dual` against the linearity of the resolution of `I_Δ` (Hochster route).
    pub cm_dual_check: Option<Verdict>,
}

impl SpecialClassReport {
    fn not_special(r: usize, n: usize, element_length: usize) -> Self {
        SpecialClassReport {
            r,
            n,
            element_length,
            is_special: false,
            pivot_l: None,
            common_factor: None,
            linear_vars: Vec::new(),
            height: None,
            betti: None,
            numerator: None,
            census_ok: None,
            sphere: None,
            ci_generators: None,
            is_complete_intersection: None,
            cm_dual: None,
            cm_dual_principal_rule: None,
            cm_dual_check: None,
        }
    }

    fn require_special(&self) -> Result<()> {
        if self.is_special {
            Ok(())
        } else {
            Err(Error::NotSpecial)
        }
    }

    /// Height of the dual ideal: a variable of the common factor is a minimal
    /// prime, unless the factor is trivial and the ideal is `r` variables.
    pub fn expected_height(&self) -> usize {
        if self.element_length == 1 {
            self.r
        } else {
            1
        }
    }

    /// Whether every computed check came out consistent.
    pub fn all_checks_pass(&self) -> bool {
        !self.is_special
            || (self.height == Some(self.expected_height())
                && !self.census_ok.is_some_and(Verdict::is_fail)
                && self.sphere.as_ref().is_none_or(SphereVerdict::consistent)
                && self.is_complete_intersection != Some(false)
                && !self.cm_dual_check.is_some_and(Verdict::is_fail))
    }
}

/// Detects the special class from a lex-order certificate and, when special,
/// finds the pivot and checks that the factorization reproduces the generators.
pub fn detect_and_factor(
    cert: &LinearQuotientsCertificate,
    reps: &Representations,
    n: usize,
    element_length: usize,
) -> Result<SpecialClassReport> {
    let subwords: Vec<PositionSet> = reps.subwords().iter().map(|p| p.positions()).collect();
    let r = subwords.len();
    let order: Vec<PositionSet> = cert.order.iter().map(|u| u.support()).collect();
    if order != subwords {
        return Err(Error::FactorizationMismatch(
            "certificate order is not the lex order of the representations".into(),
        ));
    }
    let mut report = SpecialClassReport::not_special(r, n, element_length);
    let Some(&last) = subwords.last() else {
        return Ok(report);
    };
    if r > n + 1 - element_length || cert.d[r - 1] != r - 1 {
        return Ok(report);
    }
    let mins: Vec<usize> = subwords[..r - 1]
        .iter()
        .map(|p| {
            p.difference(last)
                .min()
                .expect("distinct subwords of equal size")
        })
        .collect();
    let pivot = if r == 1 {
        last.max()
            .ok_or_else(|| Error::FactorizationMismatch("empty representation".into()))?
    } else {
        let candidates: Vec<usize> = last
            .iter()
            .filter(|&l| {
                subwords[..r - 1]
                    .iter()
                    .zip(&mins)
                    .all(|(&p, &m)| p == last.without(l).with(m))
            })
            .collect();
        match candidates[..] {
            [l] => l,
            _ => {
                return Err(Error::FactorizationMismatch(format!(
                    "expected one pivot in {last}, found {candidates:?}"
                )))
            }
        }
    };
    let common = last.without(pivot);
    let mut linear_vars = mins;
    linear_vars.push(pivot);

    let linear_set = PositionSet::from_positions(linear_vars.iter().copied());
    if linear_set.len() != r
        || !linear_set.is_disjoint(common)
        || linear_set.len() + common.len() != r + element_length - 1
    {
        return Err(Error::FactorizationMismatch(format!(
            "linear variables {linear_vars:?} and common factor {common} are not a regular sequence"
        )));
    }
    let mut product: Vec<PositionSet> = linear_vars.iter().map(|&v| common.with(v)).collect();
    let mut expected = subwords.clone();
    product.sort();
    expected.sort();
    if product != expected {
        return Err(Error::FactorizationMismatch(
            "factorization does not reproduce the generators".into(),
        ));
    }

    report.is_special = true;
    report.pivot_l = Some(pivot);
    report.common_factor = Some(SquarefreeMonomial::new(common));
    report.linear_vars = linear_vars;
    report.height =
        Some(MonomialIdeal::new(n, subwords.into_iter().map(SquarefreeMonomial::new)).height()?);
    Ok(report)
}

/// Fills in `β_i = C(r, i+1)` and `K(t) = Σ (-1)^i C(r, i+1) t^{i+ℓ}`, checking
/// both against the certificate route.
pub fn special_formulas(
    report: &mut SpecialClassReport,
    cert: &LinearQuotientsCertificate,
) -> Result<()> {
    report.require_special()?;
    let (r, ell) = (report.r, report.element_length);
    let mut betti = BettiTable::new();
    for i in 0..r {
        betti.add(i, i + ell, binomial(r, i + 1));
    }
    let numerator = HilbertNumerator::from_coefficients((0..r).map(|i| {
        let c = binomial(r, i + 1) as i64;
        (i + ell, if i % 2 == 0 { c } else { -c })
    }));
    let general = ideals::betti_from_certificate(cert)?;
    if general != betti {
        return Err(Error::FormulaMismatch(format!(
            "Betti numbers {:?} vs {:?}",
            betti.totals(),
            general.totals()
        )));
    }
    if !HilbertNumerator::from_betti(&general).same_polynomial(&numerator) {
        return Err(Error::FormulaMismatch(format!(
            "Hilbert numerator {numerator}"
        )));
    }
    report.betti = Some(betti);
    report.numerator = Some(numerator);
    Ok(())
}

/// Demazure census equals `C(r, j+1)` at size `j + ℓ` for `j < r`, and zero beyond.
pub fn census_check(
    sys: &CoxeterSystem,
    q: &Word,
    pi: &GroupElement,
    report: &SpecialClassReport,
    census_limit: usize,
) -> Result<bool> {
    report.require_special()?;
    let census = words::demazure_census(sys, q, pi, census_limit)?;
    let expected: BTreeMap<usize, u64> = (0..report.r)
        .map(|j| (j + report.element_length, binomial(report.r, j + 1)))
        .collect();
    Ok(census == expected)
}

/// Sphere verdict `r == n - ℓ(π) + 1` with its Demazure and homology cross-checks.
pub fn sphere_criterion(
    sys: &CoxeterSystem,
    q: &Word,
    pi: &GroupElement,
    report: &SpecialClassReport,
) -> Result<SphereVerdict> {
    report.require_special()?;
    let is_sphere = report.r == report.n + 1 - report.element_length;
    let demazure_agrees = (&sys.demazure_product(q)? == pi) == is_sphere;
    let complex = crate::complexes::subword_complex(sys, q, pi)?;
    let top = report.n as isize - report.element_length as isize - 1;
    let homology = match oracles::simplicial_homology(&complex) {
        Ok(h) if is_sphere => Verdict::from_bool(h.is_sphere_of_dim(top)),
        Ok(h) => Verdict::from_bool(h.rank(top) == 0),
        Err(Error::TooLarge(_)) => Verdict::Skipped,
        Err(e) => return Err(e),
    };
    Ok(SphereVerdict {
        is_sphere,
        demazure_agrees,
        homology,
    })
}

/// Builds `I_Δ = (x_{m_1} ⋯ x_{m_{r-1}} x_l) + (x_k : k ∈ supp(x_{P_r}/x_l))`, checks it
/// against the minimal non-faces of `Δ`, and records the complete-intersection
/// and Cohen–Macaulay verdicts.
pub fn ci_and_cm(report: &mut SpecialClassReport, complex: &SimplicialComplex) -> Result<()> {
    report.require_special()?;
    let common = report
        .common_factor
        .expect("special reports carry a common factor")
        .support();
    let product = SquarefreeMonomial::new(report.linear_vars.iter().copied().collect());
    let gens: Vec<SquarefreeMonomial> = std::iter::once(product)
        .chain(common.iter().map(SquarefreeMonomial::variable))
        .collect();
    let ci = MonomialIdeal::new(report.n, gens.iter().copied());
    let nonfaces = complex.minimal_nonfaces();
    if ci.len() != gens.len() || !ci.same_generators(&nonfaces) {
        return Err(Error::CIGeneratorMismatch(format!(
            "formula {ci} vs minimal non-faces {nonfaces}"
        )));
    }
    let disjoint = gens.iter().enumerate().all(|(i, a)| {
        gens[i + 1..]
            .iter()
            .all(|b| a.support().is_disjoint(b.support()))
    });
    // I_Δ has a linear resolution iff it is generated in one degree: either
    // only variables (r = 1) or only the product (empty common factor).
    let cm_dual = report.r == 1 || report.element_length == 1;
    report.cm_dual_check = Some(match oracles::hochster_betti(&nonfaces) {
        Ok(betti) => {
            let linear = betti
                .entries()
                .map(|((i, j), _)| j - i)
                .collect::<std::collections::BTreeSet<_>>()
                .len()
                == 1;
            Verdict::from_bool(linear == cm_dual)
        }
        Err(Error::TooLarge(_)) => Verdict::Skipped,
        Err(e) => return Err(e),
    });
    report.ci_generators = Some(ci);
    report.is_complete_intersection = Some(disjoint);
    report.cm_dual = Some(cm_dual);
    report.cm_dual_principal_rule = Some(report.r == 1);
    Ok(())
}

/// Runs detection and, for special instances, every formula and cross-check.
pub fn analyze_special(
    sys: &CoxeterSystem,
    q: &Word,
    pi: &GroupElement,
    census_limit: usize,
) -> Result<SpecialClassReport> {
    let complex = crate::complexes::subword_complex(sys, q, pi)?;
    let reps = words::representations(sys, q, pi)?;
    let cert = ideals::lex_certificate(&complex.alexander_dual_ideal())?;
    let mut report = detect_and_factor(&cert, &reps, q.len(), pi.length())?;
    if !report.is_special {
        return Ok(report);
    }
    special_formulas(&mut report, &cert)?;
    report.census_ok = Some(match census_check(sys, q, pi, &report, census_limit) {
        Ok(ok) => Verdict::from_bool(ok),
        Err(Error::WordTooLarge { .. }) => Verdict::Skipped,
        Err(e) => return Err(e),
    });
    report.sphere = Some(sphere_criterion(sys, q, pi, &report)?);
    ci_and_cm(&mut report, &complex)?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::DEFAULT_CENSUS_LIMIT;

    fn a3() -> CoxeterSystem {
        CoxeterSystem::type_a(3).unwrap()
    }

    fn m(v: &[usize]) -> SquarefreeMonomial {
        SquarefreeMonomial::from_indices(v)
    }

    #[test]
    fn repeated_letter_instance() {
        let sys = a3();
        let q: Word = "1,2,2,2,3".parse().unwrap();
        let pi = sys.element_of_word(&"1,2,3".parse().unwrap()).unwrap();
        let report = analyze_special(&sys, &q, &pi, DEFAULT_CENSUS_LIMIT).unwrap();
        assert!(report.is_special);
        assert_eq!(report.pivot_l, Some(4));
        assert_eq!(report.common_factor, Some(m(&[1, 5])));
        assert_eq!(report.linear_vars, vec![2, 3, 4]);
        assert_eq!(report.height, Some(1));
        assert_eq!(report.betti.as_ref().unwrap().totals(), vec![3, 3, 1]);
        assert_eq!(
            report.numerator.as_ref().unwrap().to_string(),
            "3t^3 - 3t^4 + t^5"
        );
        assert_eq!(report.census_ok, Some(Verdict::Pass));
        let sphere = report.sphere.as_ref().unwrap();
        assert!(sphere.is_sphere && sphere.demazure_agrees);
        assert_eq!(sphere.homology, Verdict::Pass);
        assert!(report
            .ci_generators
            .as_ref()
            .unwrap()
            .same_generators(&MonomialIdeal::new(5, [m(&[2, 3, 4]), m(&[1]), m(&[5])])));
        assert_eq!(report.is_complete_intersection, Some(true));
        assert_eq!(report.cm_dual, Some(false));
        assert_eq!(report.cm_dual_check, Some(Verdict::Pass));
        assert!(report.all_checks_pass());
    }

    #[test]
    fn single_representation() {
        let sys = a3();
        let q: Word = "1,3,2".parse().unwrap();
        let pi = sys.element_of_word(&q).unwrap();
        let report = analyze_special(&sys, &q, &pi, DEFAULT_CENSUS_LIMIT).unwrap();
        assert!(report.is_special);
        assert_eq!(report.r, 1);
        assert_eq!(report.numerator.as_ref().unwrap().to_string(), "t^3");
        // Δ = {∅}: a (-1)-sphere
        assert!(report.sphere.as_ref().unwrap().is_sphere);
        assert_eq!(report.sphere.as_ref().unwrap().homology, Verdict::Pass);
        // I_Δ is generated by the variables of P_1
        assert!(report
            .ci_generators
            .as_ref()
            .unwrap()
            .same_generators(&MonomialIdeal::new(3, [m(&[1]), m(&[2]), m(&[3])])));
        assert_eq!(report.cm_dual, Some(true));
        assert!(report.all_checks_pass());
    }

    #[test]
    fn example_with_two_colon_variables_is_not_special() {
        let sys = a3();
        let q: Word = "1,2,1,3,1,2,3,1".parse().unwrap();
        let pi = sys.element_from_one_line(&[2, 4, 3, 1]).unwrap();
        let report = analyze_special(&sys, &q, &pi, DEFAULT_CENSUS_LIMIT).unwrap();
        assert!(!report.is_special);
        assert_eq!(report.r, 4);
        let mut r = report.clone();
        let cert = ideals::lex_certificate(
            &crate::complexes::subword_complex(&sys, &q, &pi)
                .unwrap()
                .alexander_dual_ideal(),
        )
        .unwrap();
        assert_eq!(special_formulas(&mut r, &cert), Err(Error::NotSpecial));
        assert_eq!(
            census_check(&sys, &q, &pi, &report, 20),
            Err(Error::NotSpecial)
        );
    }

    #[test]
    fn special_but_not_a_sphere() {
        // (1,2,2,3) with π = s1 s2 s3 plus a trailing s1 that π never uses:
        // r = 2 < n - ℓ + 1 = 3
        let sys = a3();
        let q: Word = "1,2,2,3,1".parse().unwrap();
        let pi = sys.element_of_word(&"1,2,3".parse().unwrap()).unwrap();
        let report = analyze_special(&sys, &q, &pi, DEFAULT_CENSUS_LIMIT).unwrap();
        assert!(report.is_special);
        assert_eq!(report.r, 2);
        let sphere = report.sphere.as_ref().unwrap();
        assert!(!sphere.is_sphere);
        assert!(sphere.consistent());
        assert!(report.all_checks_pass());
    }

    #[test]
    fn length_one_dual_is_cohen_macaulay() {
        // Δ is two points, the dual ideal is (x1, x2) and k[Δ∨] = k
        let sys = a3();
        let q: Word = "1,1".parse().unwrap();
        let pi = sys.generator(1).unwrap();
        let report = analyze_special(&sys, &q, &pi, DEFAULT_CENSUS_LIMIT).unwrap();
        assert!(report.is_special);
        assert_eq!(report.r, 2);
        assert_eq!(report.common_factor, Some(SquarefreeMonomial::one()));
        assert_eq!(report.cm_dual, Some(true));
        assert_eq!(report.cm_dual_principal_rule, Some(false));
        assert_eq!(report.height, Some(2));
        assert_eq!(report.cm_dual_check, Some(Verdict::Pass));
        assert!(report.all_checks_pass());
    }
}
