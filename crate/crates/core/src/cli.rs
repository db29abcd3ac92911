//! Orchestration behind the `subword-shell` binary: instance parsing, the
//! analysis report, corpus sweeps and text rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::complexes::{self, ShellingOrder};
use crate::coxeter::{CoxeterSystem, Family, GroupElement};
use crate::error::{Error, Result};
use crate::ideals::{self, BettiTable, HilbertNumerator, Regularity, SquarefreeMonomial};
use crate::oracles::{self, HomologyProfile};
use crate::positions::PositionSet;
use crate::special::{self, SpecialClassReport};
use crate::verdict::Verdict;
use crate::words::{self, Subword, Word, DEFAULT_CENSUS_LIMIT};

pub const THREADS_ENV: &str = "SUBWORD_SHELL_THREADS";
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;

impl Error {
    /// Errors caused by the input rather than by a failed property.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidGenerator { .. }
                | Error::UnsupportedSystem(_)
                | Error::InvalidElement(_)
                | Error::NotReduced
                | Error::IndexOutOfRange { .. }
                | Error::NotContained
                | Error::DegeneratePi
                | Error::Parse(_)
                | Error::WordTooLarge { .. }
        )
    }

    pub fn exit_code(&self) -> i32 {
        if self.is_input_error() {
            EXIT_INVALID_INPUT
        } else {
            EXIT_VIOLATION
        }
    }
}

/// How `π` was given on the command line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PiSpec {
    /// One-line notation (types A and B) or `rotation,reflection` (type I2).
    OneLine(Vec<i64>),
    Word(Word),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceSpec {
    pub family: Family,
    pub word: Word,
    pub pi: PiSpec,
}

pub fn parse_family(tag: &str, rank: Option<usize>, m: Option<usize>) -> Result<Family> {
    match tag.to_ascii_uppercase().as_str() {
        "A" => rank
            .map(Family::A)
            .ok_or_else(|| Error::Parse("--rank is required for family A".into())),
        "B" => rank
            .map(Family::B)
            .ok_or_else(|| Error::Parse("--rank is required for family B".into())),
        "I2" => m
            .map(Family::I2)
            .ok_or_else(|| Error::Parse("--m is required for family I2".into())),
        other => Err(Error::Parse(format!("unknown family {other:?}"))),
    }
}

pub fn parse_integer_list(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("invalid integer {t:?}")))
        })
        .collect()
}

impl InstanceSpec {
    pub fn new(family: Family, word: Word, pi: PiSpec) -> Self {
        InstanceSpec { family, word, pi }
    }

    /// Builds the system and the element, validating letters and reducedness.
    pub fn resolve(&self) -> Result<(CoxeterSystem, Word, GroupElement)> {
        let sys = CoxeterSystem::new(self.family)?;
        sys.check_word(&self.word)?;
        let pi = match &self.pi {
            PiSpec::Word(w) => {
                if !sys.is_reduced_word(w)? {
                    return Err(Error::NotReduced);
                }
                sys.element_of_word(w)?
            }
            PiSpec::OneLine(v) => match self.family {
                Family::I2(_) => match v[..] {
                    [rot] if rot >= 0 => sys.element_from_dihedral(rot as usize, false)?,
                    [rot, refl] if rot >= 0 && (refl == 0 || refl == 1) => {
                        sys.element_from_dihedral(rot as usize, refl == 1)?
                    }
                    _ => return Err(Error::InvalidElement(format!("dihedral element {v:?}"))),
                },
                _ => sys.element_from_one_line(v)?,
            },
        };
        Ok((sys, self.word.clone(), pi))
    }

    /// Command-line arguments reproducing this instance.
    pub fn command_line(&self) -> String {
        let family = match self.family {
            Family::A(n) => format!("--family A --rank {n}"),
            Family::B(n) => format!("--family B --rank {n}"),
            Family::I2(m) => format!("--family I2 --m {m}"),
        };
        let pi = match &self.pi {
            PiSpec::Word(w) => format!("--pi-word {w}"),
            PiSpec::OneLine(v) => {
                format!(
                    "--pi {}",
                    v.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            }
        };
        let word = if self.word.is_empty() {
            "\"\"".to_string()
        } else {
            self.word.to_string()
        };
        format!("analyze {family} --word {word} {pi}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub census_limit: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            census_limit: DEFAULT_CENSUS_LIMIT,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceEcho {
    pub family: String,
    pub word: Word,
    pub pi: GroupElement,
    pub pi_reduced_word: Word,
    pub n: usize,
    pub pi_length: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateSection {
    pub sets: Vec<PositionSet>,
    pub d: Vec<usize>,
    pub min_formula_agrees: Verdict,
    pub sets_within_bounds: Verdict,
    pub full_sets_propagate: Verdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProjdimSection {
    pub value: usize,
    pub bound: usize,
    pub within_bound: Verdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct RegularitySection {
    #[serde(flatten)]
    pub regularity: Regularity,
    pub hochster_agrees: Verdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct ShellingSection {
    pub lex_order: ShellingOrder,
    pub is_shelling: Verdict,
    pub vertex_decomposition: ShellingOrder,
    pub coincides: Verdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct BettiSection {
    pub table: BettiTable,
    pub totals: Vec<u64>,
    pub hochster_agrees: Verdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct FineTerm {
    pub subword: PositionSet,
    pub coefficient: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct NumeratorSection {
    pub resolution: HilbertNumerator,
    pub census: Option<HilbertNumerator>,
    pub fine: Option<Vec<FineTerm>>,
    pub routes_agree: Verdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleSection {
    pub containment: Verdict,
    pub bruhat_demazure: Verdict,
    pub pure_dimension: Verdict,
    pub sr_ring_projdim: Verdict,
    pub homology: Option<HomologyProfile>,
    pub homology_below_top_vanishes: Verdict,
}

/// Everything computed for one `(Q, π)` instance.
#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub instance: InstanceEcho,
    pub representations: Vec<Subword>,
    pub facets: Vec<PositionSet>,
    pub dual_generators: Vec<SquarefreeMonomial>,
    pub linear_quotients: Verdict,
    pub certificate: CertificateSection,
    pub projdim: ProjdimSection,
    pub regularity: RegularitySection,
    pub shelling: ShellingSection,
    pub betti: BettiSection,
    pub hilbert_numerator: NumeratorSection,
    pub height: usize,
    /// `None` when the complex has too many vertices for the labeling search.
    pub shifted: Option<bool>,
    pub special: SpecialClassReport,
    pub oracles: OracleSection,
    pub violations: Vec<String>,
}

impl AnalysisReport {
    /// Named verdicts, in a fixed order. The special-class checks appear only
    /// for words in the special class.
    pub fn checks(&self) -> Vec<(&'static str, Verdict)> {
        let mut checks = vec![
            ("linear_quotients", self.linear_quotients),
            ("min_formula", self.certificate.min_formula_agrees),
            ("sets_within_bounds", self.certificate.sets_within_bounds),
            ("full_sets_propagate", self.certificate.full_sets_propagate),
            ("projdim_bound", self.projdim.within_bound),
            (
                "regularity_bound",
                Verdict::from_bool(self.regularity.regularity.within_bound),
            ),
            ("regularity_hochster", self.regularity.hochster_agrees),
            ("lex_shelling", self.shelling.is_shelling),
            ("vertex_decomposition", self.shelling.coincides),
            ("betti_hochster", self.betti.hochster_agrees),
            ("numerator_routes", self.hilbert_numerator.routes_agree),
            ("containment_oracle", self.oracles.containment),
            ("bruhat_demazure", self.oracles.bruhat_demazure),
            ("pure_dimension", self.oracles.pure_dimension),
            ("sr_ring_projdim", self.oracles.sr_ring_projdim),
            (
                "homology_vanishing",
                self.oracles.homology_below_top_vanishes,
            ),
        ];
        let special = &self.special;
        if special.is_special {
            let sphere = special.sphere.as_ref().map_or(Verdict::Skipped, |s| {
                if s.demazure_agrees {
                    s.homology
                } else {
                    Verdict::Fail
                }
            });
            checks.extend([
                (
                    "special_class",
                    Verdict::from_bool(special.all_checks_pass()),
                ),
                (
                    "special_census",
                    special.census_ok.unwrap_or(Verdict::Skipped),
                ),
                ("special_sphere", sphere),
                (
                    "special_cm_dual",
                    special.cm_dual_check.unwrap_or(Verdict::Skipped),
                ),
            ]);
        }
        checks
    }
}

fn fails(v: Verdict, name: &str, violations: &mut Vec<String>) -> Verdict {
    if v.is_fail() {
        violations.push(name.to_string());
    }
    v
}

fn gated<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::TooLarge(_))
        | Err(Error::WordTooLarge { .. })
        | Err(Error::TooManyVertices { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Runs the full pipeline on one instance.
///
/// Input problems are errors; failed properties are listed in `violations`.
/// Structural falsifications that stop the pipeline (a colon ideal that is not
/// linear, a vertex decomposition that disagrees with the direct link and
/// deletion, a special-class formula mismatch) are returned as errors.
pub fn run_analyze(spec: &InstanceSpec, options: &AnalyzeOptions) -> Result<AnalysisReport> {
    let (sys, q, pi) = spec.resolve()?;
    analyze_instance(&sys, &q, &pi, options)
}

pub fn analyze_instance(
    sys: &CoxeterSystem,
    q: &Word,
    pi: &GroupElement,
    options: &AnalyzeOptions,
) -> Result<AnalysisReport> {
    let n = q.len();
    let ell = pi.length();
    let mut violations = Vec::new();

    let complex = complexes::subword_complex(sys, q, pi)?;
    let reps = words::representations(sys, q, pi)?;
    let dual = complex.alexander_dual_ideal();
    let cert = ideals::lex_certificate(&dual)?;

    let certificate = CertificateSection {
        sets: cert.sets.clone(),
        d: cert.d.clone(),
        min_formula_agrees: fails(
            Verdict::from_bool(ideals::set_via_min_formula(&reps) == cert.sets),
            "min_formula",
            &mut violations,
        ),
        sets_within_bounds: fails(
            Verdict::from_bool(ideals::sets_within_bounds(&cert)),
            "sets_within_bounds",
            &mut violations,
        ),
        full_sets_propagate: fails(
            Verdict::from_bool(ideals::full_sets_propagate(&cert)),
            "full_sets_propagate",
            &mut violations,
        ),
    };

    let projdim = ProjdimSection {
        value: cert.projdim(),
        bound: n - ell,
        within_bound: fails(
            Verdict::from_bool(ideals::projdim_bound_check(&cert, n, ell)),
            "projdim_bound",
            &mut violations,
        ),
    };

    let betti_table = ideals::betti_from_certificate(&cert)?;
    let hochster_dual = gated(oracles::hochster_betti(&dual))?;
    let betti = BettiSection {
        totals: betti_table.totals(),
        hochster_agrees: fails(
            hochster_dual
                .as_ref()
                .map_or(Verdict::Skipped, |h| Verdict::from_bool(*h == betti_table)),
            "betti_hochster",
            &mut violations,
        ),
        table: betti_table.clone(),
    };

    let reg_value = cert.projdim() + 1;
    let regularity = Regularity {
        value: reg_value,
        bound: n - ell + 1,
        within_bound: reg_value <= n - ell + 1,
    };
    if !regularity.within_bound {
        violations.push("regularity_bound".into());
    }
    let nonfaces = complex.minimal_nonfaces();
    let hochster_sr = gated(oracles::hochster_betti(&nonfaces))?;
    let regularity = RegularitySection {
        regularity,
        hochster_agrees: fails(
            hochster_sr.as_ref().map_or(Verdict::Skipped, |h| {
                Verdict::from_bool(h.regularity() == Some(reg_value))
            }),
            "regularity_hochster",
            &mut violations,
        ),
    };

    let lex_order = ShellingOrder(complex.facets().to_vec());
    let vd = complexes::vertex_decompose_shelling(sys, q, pi)?;
    let shelling = ShellingSection {
        is_shelling: fails(
            Verdict::from_bool(complex.is_shelling(&lex_order)?),
            "lex_shelling",
            &mut violations,
        ),
        coincides: fails(
            Verdict::from_bool(vd == lex_order),
            "vertex_decomposition",
            &mut violations,
        ),
        lex_order,
        vertex_decomposition: vd,
    };

    let resolution = HilbertNumerator::from_betti(&betti_table);
    let census_subwords = gated(words::demazure_subwords(sys, q, pi, options.census_limit))?;
    let census = census_subwords
        .as_ref()
        .map(|s| HilbertNumerator::from_subwords(s, ell));
    let hilbert_numerator = NumeratorSection {
        routes_agree: fails(
            census.as_ref().map_or(Verdict::Skipped, |c| {
                Verdict::from_bool(c.same_polynomial(&resolution))
            }),
            "numerator_routes",
            &mut violations,
        ),
        fine: census.as_ref().and_then(|c| c.fine()).map(|fine| {
            let mut terms: Vec<FineTerm> = fine
                .iter()
                .map(|(&subword, &coefficient)| FineTerm {
                    subword,
                    coefficient,
                })
                .collect();
            terms.sort_by(|a, b| {
                (a.subword.len(), Subword::new(a.subword))
                    .cmp(&(b.subword.len(), Subword::new(b.subword)))
            });
            terms
        }),
        resolution,
        census,
    };

    let homology = gated(oracles::simplicial_homology(&complex))?;
    let top = n as isize - ell as isize - 1;
    let delta_q = sys.demazure_product(q)?;
    let oracle_section = OracleSection {
        containment: fails(
            match gated(oracles::exhaustive_contains(sys, q, pi))? {
                Some(exhaustive) => Verdict::from_bool(exhaustive && words::contains(sys, q, pi)?),
                None => Verdict::Skipped,
            },
            "containment_oracle",
            &mut violations,
        ),
        bruhat_demazure: fails(
            Verdict::from_bool(sys.bruhat_leq(pi, &delta_q)),
            "bruhat_demazure",
            &mut violations,
        ),
        pure_dimension: fails(
            Verdict::from_bool(complex.is_pure() && complex.dimension() == Some(top)),
            "pure_dimension",
            &mut violations,
        ),
        sr_ring_projdim: fails(
            hochster_sr.as_ref().map_or(Verdict::Skipped, |h| {
                Verdict::from_bool(h.projdim().map(|p| p + 1) == Some(ell))
            }),
            "sr_ring_projdim",
            &mut violations,
        ),
        homology_below_top_vanishes: fails(
            homology.as_ref().map_or(Verdict::Skipped, |h| {
                Verdict::from_bool((-1..top).all(|k| h.rank(k) == 0))
            }),
            "homology_vanishing",
            &mut violations,
        ),
        homology,
    };

    let linear_quotients = Verdict::Pass;
    let height = dual.height()?;
    let shifted = gated(complex.is_shifted())?;

    let mut special = special::detect_and_factor(&cert, &reps, n, ell)?;
    if special.is_special {
        special::special_formulas(&mut special, &cert)?;
        special.census_ok = Some(
            match special::census_check(sys, q, pi, &special, options.census_limit) {
                Ok(ok) => Verdict::from_bool(ok),
                Err(Error::WordTooLarge { .. }) => Verdict::Skipped,
                Err(e) => return Err(e),
            },
        );
        special.sphere = Some(special::sphere_criterion(sys, q, pi, &special)?);
        special::ci_and_cm(&mut special, &complex)?;
        if !special.all_checks_pass() {
            violations.push("special_class".into());
        }
    }

    Ok(AnalysisReport {
        instance: InstanceEcho {
            family: sys.family().to_string(),
            word: q.clone(),
            pi_reduced_word: sys.reduced_word(pi),
            pi: pi.clone(),
            n,
            pi_length: ell,
        },
        representations: reps.subwords().to_vec(),
        facets: complex.facets().to_vec(),
        dual_generators: cert.order.clone(),
        linear_quotients,
        certificate,
        projdim,
        regularity,
        shelling,
        betti,
        hilbert_numerator,
        height,
        shifted,
        special,
        oracles: oracle_section,
        violations,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Corpus {
    /// Random words with `π` the Demazure product of a random subword.
    Random,
    /// Every reduced word of every non-identity element with one letter repeated.
    Constructed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub family: Family,
    pub corpus: Corpus,
    pub max_word: usize,
    pub count: usize,
    pub seed: u64,
    pub max_reps: usize,
    pub census_limit: usize,
    pub threads: Option<usize>,
}

impl VerifyOptions {
    pub fn new(family: Family) -> Self {
        VerifyOptions {
            family,
            corpus: Corpus::Random,
            max_word: 8,
            count: 500,
            seed: 0,
            max_reps: 4,
            census_limit: DEFAULT_CENSUS_LIMIT,
            threads: None,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SuiteCount {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyFailure {
    pub instance: usize,
    pub suite: String,
    pub detail: String,
    /// Arguments reproducing a minimized failing instance.
    pub reproducer: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub family: String,
    pub corpus: Corpus,
    pub seed: u64,
    pub instances: usize,
    pub special_instances: usize,
    pub suites: BTreeMap<String, SuiteCount>,
    pub failures: Vec<VerifyFailure>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Random instance number `index` of a seeded corpus.
pub fn random_instance(
    sys: &CoxeterSystem,
    max_word: usize,
    seed: u64,
    index: u64,
) -> (Word, GroupElement) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    loop {
        let len = rng.random_range(1..=max_word.max(1));
        let q = Word::new((0..len).map(|_| rng.random_range(1..=sys.rank())).collect());
        let chosen = q.positions().iter().filter(|_| rng.random_bool(0.5));
        let pi = sys.demazure_of_letters(sys.identity(), chosen.map(|p| q.letter(p)));
        if !pi.is_identity() {
            return (q, pi);
        }
    }
}

pub fn constructed_instances(sys: &CoxeterSystem, max_reps: usize) -> Vec<(Word, GroupElement)> {
    let mut out = Vec::new();
    let mut elements = sys.elements();
    elements.sort_by_key(|g| (g.length(), sys.reduced_word(g)));
    for pi in elements.into_iter().filter(|g| !g.is_identity()) {
        for rw in sys.reduced_words(&pi) {
            for i in 1..=rw.len() {
                for reps in 1..=max_reps {
                    let q =
                        words::make_repeated_word(sys, &rw, i, reps).expect("reduced word splice");
                    out.push((q, pi.clone()));
                }
            }
        }
    }
    out
}

/// Failing `(suite, detail)` pairs of one instance, with its report when the pipeline ran.
type InstanceOutcome = (Vec<(String, String)>, Option<AnalysisReport>);

fn instance_spec(sys: &CoxeterSystem, q: &Word, pi: &GroupElement) -> InstanceSpec {
    InstanceSpec::new(sys.family(), q.clone(), PiSpec::Word(sys.reduced_word(pi)))
}

/// Failing suites of one instance, with pipeline errors reported as `pipeline`.
fn failing_suites(
    sys: &CoxeterSystem,
    q: &Word,
    pi: &GroupElement,
    options: &AnalyzeOptions,
) -> InstanceOutcome {
    match analyze_instance(sys, q, pi, options) {
        Ok(report) => {
            let failed = report
                .checks()
                .into_iter()
                .filter(|(_, v)| v.is_fail())
                .map(|(name, _)| (name.to_string(), String::new()))
                .collect();
            (failed, Some(report))
        }
        Err(e) => (vec![("pipeline".to_string(), e.to_string())], None),
    }
}

/// Drops letters from `q` while the same suite keeps failing.
fn minimize(
    sys: &CoxeterSystem,
    q: &Word,
    pi: &GroupElement,
    suite: &str,
    options: &AnalyzeOptions,
) -> Word {
    let mut current = q.clone();
    'outer: loop {
        for p in 1..=current.len() {
            let candidate = current.restrict(current.positions().without(p));
            if !words::contains(sys, &candidate, pi).unwrap_or(false) {
                continue;
            }
            let (failed, _) = failing_suites(sys, &candidate, pi, options);
            if failed.iter().any(|(s, _)| s == suite) {
                current = candidate;
                continue 'outer;
            }
        }
        return current;
    }
}

/// Runs every invariant suite over a corpus. Instances are distributed over a
/// worker pool; the summary is assembled in instance order.
pub fn run_verify(options: &VerifyOptions) -> Result<VerifySummary> {
    let sys = CoxeterSystem::new(options.family)?;
    let instances: Vec<(Word, GroupElement)> = match options.corpus {
        Corpus::Random => (0..options.count as u64)
            .map(|i| random_instance(&sys, options.max_word, options.seed, i))
            .collect(),
        Corpus::Constructed => constructed_instances(&sys, options.max_reps),
    };
    let analyze_options = AnalyzeOptions {
        census_limit: options.census_limit,
    };
    let work = || -> Vec<InstanceOutcome> {
        instances
            .par_iter()
            .map(|(q, pi)| failing_suites(&sys, q, pi, &analyze_options))
            .collect()
    };
    let results = match options.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::Parse(format!("thread pool: {e}")))?
            .install(work),
        None => work(),
    };

    let mut suites: BTreeMap<String, SuiteCount> = BTreeMap::new();
    let mut failures = Vec::new();
    let mut special_instances = 0;
    for (index, ((failed, report), (q, pi))) in results.into_iter().zip(&instances).enumerate() {
        if let Some(report) = &report {
            special_instances += report.special.is_special as usize;
            for (name, verdict) in report.checks() {
                let entry = suites.entry(name.to_string()).or_default();
                match verdict {
                    Verdict::Pass => entry.pass += 1,
                    Verdict::Fail => entry.fail += 1,
                    Verdict::Skipped => entry.skipped += 1,
                }
            }
        } else {
            suites.entry("pipeline".into()).or_default().fail += 1;
        }
        for (suite, detail) in failed {
            let small = minimize(&sys, q, pi, &suite, &analyze_options);
            failures.push(VerifyFailure {
                instance: index,
                suite,
                detail,
                reproducer: instance_spec(&sys, &small, pi).command_line(),
            });
        }
    }
    Ok(VerifySummary {
        family: sys.family().to_string(),
        corpus: options.corpus,
        seed: options.seed,
        instances: instances.len(),
        special_instances,
        suites,
        failures,
    })
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

pub fn render_betti(table: &BettiTable) -> String {
    let Some(pd) = table.projdim() else {
        return "  (zero)\n".into();
    };
    let rows: std::collections::BTreeSet<usize> =
        table.entries().map(|((i, j), _)| j - i).collect();
    let width = table
        .entries()
        .map(|(_, v)| v.to_string().len())
        .max()
        .unwrap_or(1)
        .max(pd.to_string().len());
    let mut out = String::new();
    let _ = write!(out, "  {:>6} ", "");
    for i in 0..=pd {
        let _ = write!(out, " {i:>width$}");
    }
    out.push('\n');
    for row in rows {
        let _ = write!(out, "  {:>6}:", row);
        for i in 0..=pd {
            let v = table.get(i, i + row);
            if v == 0 {
                let _ = write!(out, " {:>width$}", "-");
            } else {
                let _ = write!(out, " {v:>width$}");
            }
        }
        out.push('\n');
    }
    out
}

pub fn render_report_text(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let i = &r.instance;
    let _ = writeln!(
        out,
        "instance      {}  Q = ({})  π = {} = ({})",
        i.family, i.word, i.pi, i.pi_reduced_word
    );
    let _ = writeln!(
        out,
        "size          n = {}  ℓ(π) = {}  r = {}",
        i.n,
        i.pi_length,
        r.representations.len()
    );
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "{:<4} {:<22} {:<22} {:<14}",
        "i", "representation P_i", "facet Q \\ P_i", "set(x_P_i)"
    );
    for k in 0..r.representations.len() {
        let _ = writeln!(
            out,
            "{:<4} {:<22} {:<22} {:<14}",
            k + 1,
            r.representations[k].positions().to_string(),
            r.facets[k].to_string(),
            r.certificate.sets[k].to_string()
        );
    }
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "dual generators   {}",
        join(r.dual_generators.iter(), " > ")
    );
    let _ = writeln!(out, "linear quotients  {}", r.linear_quotients);
    let _ = writeln!(
        out,
        "d_i               {}",
        join(r.certificate.d.iter(), ", ")
    );
    let _ = writeln!(
        out,
        "projdim(I_dual)   {} ≤ {}  {}",
        r.projdim.value, r.projdim.bound, r.projdim.within_bound
    );
    let _ = writeln!(
        out,
        "reg(I_Δ)          {} ≤ {}  hochster {}",
        r.regularity.regularity.value, r.regularity.regularity.bound, r.regularity.hochster_agrees
    );
    let _ = writeln!(out, "height(I_dual)    {}", r.height);
    let _ = writeln!(
        out,
        "shifted           {}",
        r.shifted
            .map_or("skipped(size)".to_string(), |b| b.to_string())
    );
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "lex shelling      {}  {}",
        join(r.shelling.lex_order.facets(), " "),
        r.shelling.is_shelling
    );
    let _ = writeln!(
        out,
        "vertex decomp.    {}  coincides {}",
        join(r.shelling.vertex_decomposition.facets(), " "),
        r.shelling.coincides
    );
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "Betti table of I_dual (rows j-i, columns i)  hochster {}",
        r.betti.hochster_agrees
    );
    out.push_str(&render_betti(&r.betti.table));
    let _ = writeln!(out);
    let _ = writeln!(out, "K(t) resolution   {}", r.hilbert_numerator.resolution);
    let _ = writeln!(
        out,
        "K(t) census       {}  {}",
        r.hilbert_numerator
            .census
            .as_ref()
            .map_or("skipped(size)".to_string(), |c| c.to_string()),
        r.hilbert_numerator.routes_agree
    );
    let _ = writeln!(out);
    let s = &r.special;
    if s.is_special {
        let _ = writeln!(
            out,
            "special class     yes  l = {}",
            s.pivot_l.map_or("-".into(), |l| l.to_string())
        );
        let _ = writeln!(
            out,
            "factorization     I_dual = ({}) · ({})",
            s.common_factor.map_or("1".into(), |c| c.to_string()),
            join(s.linear_vars.iter().map(|v| format!("x{v}")), ", ")
        );
        if let Some(ci) = &s.ci_generators {
            let _ = writeln!(
                out,
                "I_Δ               {ci}  complete intersection {}",
                s.is_complete_intersection == Some(true)
            );
        }
        if let Some(sp) = &s.sphere {
            let _ = writeln!(
                out,
                "sphere            {}  δ(Q) check {}  homology {}",
                sp.is_sphere,
                Verdict::from_bool(sp.demazure_agrees),
                sp.homology
            );
        }
        let _ = writeln!(
            out,
            "census            {}",
            s.census_ok
                .map_or("skipped(size)".to_string(), |v| v.to_string())
        );
        let _ = writeln!(
            out,
            "k[Δ∨] CM          {}  check {}",
            s.cm_dual.unwrap_or(false),
            s.cm_dual_check
                .map_or("skipped(size)".to_string(), |v| v.to_string())
        );
    } else {
        let _ = writeln!(out, "special class     no");
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "checks");
    for (name, v) in r.checks() {
        let _ = writeln!(out, "  {name:<22} {v}");
    }
    if !r.violations.is_empty() {
        let _ = writeln!(out, "violations        {}", r.violations.join(", "));
    }
    out
}

pub fn render_summary_text(s: &VerifySummary) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "corpus {:?} on {}  seed {}  instances {}  special {}",
        s.corpus, s.family, s.seed, s.instances, s.special_instances
    );
    let _ = writeln!(
        out,
        "{:<24} {:>7} {:>7} {:>8}",
        "suite", "pass", "fail", "skipped"
    );
    for (name, c) in &s.suites {
        let _ = writeln!(
            out,
            "{:<24} {:>7} {:>7} {:>8}",
            name, c.pass, c.fail, c.skipped
        );
    }
    for f in &s.failures {
        let _ = writeln!(
            out,
            "FAIL instance {} suite {} {}",
            f.instance, f.suite, f.detail
        );
        let _ = writeln!(out, "  reproduce: subword-shell {}", f.reproducer);
    }
    out
}

/// Worker cap from `SUBWORD_SHELL_THREADS`, if set to a positive integer.
pub fn threads_from_env() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()?
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
}
