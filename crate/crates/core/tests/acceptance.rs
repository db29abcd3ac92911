//! Acceptance criteria. Each criterion prints one PASS/FAIL line; any failure
//! makes the target exit nonzero.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use subword_shell::cli::{constructed_instances, random_instance};
use subword_shell::complexes::{lex_dual_shelling, subword_complex, vertex_decompose_shelling};
use subword_shell::ideals::{
    betti_from_certificate, lex_certificate, linear_quotients_certificate, min_formula_sets,
    set_via_min_formula,
};
use subword_shell::special::analyze_special;
use subword_shell::words::{self, demazure_census, demazure_subwords, DEFAULT_CENSUS_LIMIT};
use subword_shell::{
    oracles, CoxeterSystem, GroupElement, HilbertNumerator, MonomialIdeal, PositionSet,
    SimplicialComplex, SquarefreeMonomial, Word,
};

const SEED: u64 = 20_240_601;
const RANDOM_INSTANCES: u64 = 500;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn set(v: &[usize]) -> PositionSet {
    PositionSet::from_positions(v.iter().copied())
}

fn mono(v: &[usize]) -> SquarefreeMonomial {
    SquarefreeMonomial::from_indices(v)
}

fn a3() -> CoxeterSystem {
    CoxeterSystem::type_a(3).unwrap()
}

fn running_example(sys: &CoxeterSystem) -> (Word, GroupElement) {
    let q: Word = "1,2,1,3,1,2,3,1".parse().unwrap();
    (q, sys.element_from_one_line(&[2, 4, 3, 1]).unwrap())
}

fn random_corpus(sys: &CoxeterSystem) -> Vec<(Word, GroupElement)> {
    (0..RANDOM_INSTANCES)
        .map(|i| random_instance(sys, 8, SEED, i))
        .collect()
}

fn full_corpus(sys: &CoxeterSystem) -> Vec<(Word, GroupElement)> {
    let mut corpus = random_corpus(sys);
    corpus.extend(constructed_instances(sys, 4));
    corpus
}

fn describe(q: &Word, pi: &GroupElement) -> String {
    format!("Q=({q}) π={pi}")
}

fn criterion_1() -> Outcome {
    let sys = a3();
    let (q, pi) = running_example(&sys);
    let start = Instant::now();
    let complex = subword_complex(&sys, &q, &pi).map_err(|e| e.to_string())?;
    let dual = complex.alexander_dual_ideal();
    let cert = lex_certificate(&dual).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();

    let facets = vec![
        set(&[3, 5, 7, 8]),
        set(&[2, 3, 5, 8]),
        set(&[1, 2, 5, 8]),
        set(&[1, 2, 3, 8]),
    ];
    ensure(complex.facets() == facets.as_slice(), || {
        format!("facets {:?}", complex.facets())
    })?;
    let gens = vec![
        mono(&[1, 2, 4, 6]),
        mono(&[1, 4, 6, 7]),
        mono(&[3, 4, 6, 7]),
        mono(&[4, 5, 6, 7]),
    ];
    ensure(cert.order == gens, || {
        format!("generators {:?}", cert.order)
    })?;
    let colons: Vec<MonomialIdeal> = (1..4)
        .map(|i| {
            MonomialIdeal::new(8, cert.order[..i].iter().copied()).colon_by_monomial(cert.order[i])
        })
        .collect();
    let expected = [
        MonomialIdeal::new(8, [mono(&[2])]),
        MonomialIdeal::new(8, [mono(&[1])]),
        MonomialIdeal::new(8, [mono(&[1]), mono(&[3])]),
    ];
    for (got, want) in colons.iter().zip(&expected) {
        ensure(got.same_generators(want), || {
            format!("colon ideal {:?}", got.gens())
        })?;
    }
    ensure(
        cert.sets == vec![PositionSet::EMPTY, set(&[2]), set(&[1]), set(&[1, 3])],
        || format!("sets {:?}", cert.sets),
    )?;
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "exact match in {:.1} ms",
        elapsed.as_secs_f64() * 1e3
    ))
}

fn criterion_2() -> Outcome {
    let sys = a3();
    let (q, pi) = running_example(&sys);
    let vd = vertex_decompose_shelling(&sys, &q, &pi).map_err(|e| e.to_string())?;
    let expected = vec![
        set(&[3, 5, 7, 8]),
        set(&[2, 3, 5, 8]),
        set(&[1, 2, 5, 8]),
        set(&[1, 2, 3, 8]),
    ];
    ensure(vd.facets() == expected.as_slice(), || {
        format!("example order {:?}", vd.facets())
    })?;
    ensure(vd == lex_dual_shelling(&sys, &q, &pi).unwrap(), || {
        "example orders differ".into()
    })?;
    let corpus = random_corpus(&sys);
    let mismatches: Vec<String> = corpus
        .iter()
        .filter(|(q, pi)| {
            vertex_decompose_shelling(&sys, q, pi).ok()
                != Some(lex_dual_shelling(&sys, q, pi).unwrap())
        })
        .map(|(q, pi)| describe(q, pi))
        .collect();
    ensure(mismatches.is_empty(), || {
        format!("{} mismatches, first {}", mismatches.len(), mismatches[0])
    })?;
    Ok(format!(
        "example exact; {} random instances, 0 mismatches",
        corpus.len()
    ))
}

fn criterion_3() -> Outcome {
    let sys = a3();
    let corpus = full_corpus(&sys);
    for (q, pi) in &corpus {
        let dual = subword_complex(&sys, q, pi).unwrap().alexander_dual_ideal();
        lex_certificate(&dual).map_err(|e| format!("{}: {e}", describe(q, pi)))?;
    }
    Ok(format!("{} instances certified", corpus.len()))
}

fn criterion_4() -> Outcome {
    let sys = a3();
    let corpus = full_corpus(&sys);
    let mut cross_checked = 0;
    for (q, pi) in &corpus {
        let (n, ell) = (q.len(), pi.length());
        let complex = subword_complex(&sys, q, pi).unwrap();
        let cert = lex_certificate(&complex.alexander_dual_ideal()).unwrap();
        ensure(cert.projdim() <= n - ell, || {
            format!("projdim {} at {}", cert.projdim(), describe(q, pi))
        })?;
        let reg = subword_shell::ideals::regularity_of_sr_ideal(&sys, q, pi)
            .map_err(|e| e.to_string())?;
        ensure(reg.value <= n - ell + 1, || {
            format!("reg {} at {}", reg.value, describe(q, pi))
        })?;
        if n <= 10 {
            let hochster =
                oracles::hochster_betti(&complex.minimal_nonfaces()).map_err(|e| e.to_string())?;
            ensure(hochster.regularity() == Some(reg.value), || {
                format!(
                    "reg {} vs Hochster {:?} at {}",
                    reg.value,
                    hochster.regularity(),
                    describe(q, pi)
                )
            })?;
            cross_checked += 1;
        }
    }
    Ok(format!(
        "{} instances within bounds, {cross_checked} regularities equal to Hochster",
        corpus.len()
    ))
}

fn criterion_5() -> Outcome {
    let sys = a3();
    let corpus = full_corpus(&sys);
    let mut checked = 0;
    for (q, pi) in corpus.iter().filter(|(q, _)| q.len() <= 10) {
        let complex = subword_complex(&sys, q, pi).unwrap();
        let betti =
            oracles::hochster_betti(&complex.minimal_nonfaces()).map_err(|e| e.to_string())?;
        // projdim k[Δ] = projdim I_Δ + 1
        ensure(betti.projdim().map(|p| p + 1) == Some(pi.length()), || {
            format!("projdim {:?} at {}", betti.projdim(), describe(q, pi))
        })?;
        checked += 1;
    }
    Ok(format!("{checked} instances with projdim k[Δ] = ℓ(π)"))
}

fn criterion_6() -> Outcome {
    let sys = a3();
    let corpus = full_corpus(&sys);
    for (q, pi) in &corpus {
        let reps = words::representations(&sys, q, pi).unwrap();
        let cert =
            lex_certificate(&subword_complex(&sys, q, pi).unwrap().alexander_dual_ideal()).unwrap();
        ensure(set_via_min_formula(&reps) == cert.sets, || {
            format!("sets differ at {}", describe(q, pi))
        })?;
    }
    let order = [mono(&[1, 2, 3]), mono(&[2, 3, 4]), mono(&[2, 4, 5])];
    let cert = linear_quotients_certificate(&MonomialIdeal::new(5, order), &order)
        .map_err(|e| e.to_string())?;
    ensure(
        cert.sets[1] == set(&[1]) && cert.sets[2] == set(&[3]),
        || format!("sets {:?}", cert.sets),
    )?;
    let formula = min_formula_sets(&order);
    ensure(
        formula[1] == cert.sets[1] && formula[2] != cert.sets[2],
        || format!("formula {formula:?}"),
    )?;
    Ok(format!(
        "{} subword duals agree; counterexample disagrees at w_3 ({} vs {})",
        corpus.len(),
        formula[2],
        cert.sets[2]
    ))
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let sys = a3();
    let corpus = constructed_instances(&sys, 4);
    let mut literal_height_failures = BTreeSet::new();
    let mut literal_cm_failures = BTreeSet::new();
    let mut length_one = BTreeSet::new();
    for (q, pi) in &corpus {
        let at = || describe(q, pi);
        let (n, ell) = (q.len(), pi.length());
        let complex = subword_complex(&sys, q, pi).unwrap();
        let dual = complex.alexander_dual_ideal();
        let cert = lex_certificate(&dual).unwrap();
        let r = cert.order.len();
        if ell == 1 && r > 1 {
            length_one.insert(at());
        }

        ensure(r == n - ell + 1, || format!("|G| = {r} at {}", at()))?;
        ensure(cert.d[r - 1] == r - 1, || {
            format!("d_r = {} at {}", cert.d[r - 1], at())
        })?;

        let report = analyze_special(&sys, q, pi, DEFAULT_CENSUS_LIMIT)
            .map_err(|e| format!("{}: {e}", at()))?;
        ensure(report.is_special, || format!("not detected at {}", at()))?;
        let common = report.common_factor.unwrap();
        let product = MonomialIdeal::new(
            n,
            report
                .linear_vars
                .iter()
                .map(|&v| SquarefreeMonomial::new(common.support().with(v))),
        );
        ensure(product.same_generators(&dual), || {
            format!("factorization at {}", at())
        })?;

        let height = dual.height().unwrap();
        ensure(report.height == Some(height), || {
            format!("height field at {}", at())
        })?;
        if height != 1 {
            literal_height_failures.insert(at());
        }
        let expected_height = if common.degree() == 0 { r } else { 1 };
        ensure(height == expected_height, || {
            format!("height {height} at {}", at())
        })?;

        let betti = betti_from_certificate(&cert).unwrap();
        let hochster = oracles::hochster_betti(&dual).map_err(|e| e.to_string())?;
        ensure(betti == hochster, || {
            format!("Betti vs Hochster at {}", at())
        })?;
        for i in 0..r {
            ensure(betti.get(i, i + ell) == binomial(r, i + 1), || {
                format!("β_{i} at {}", at())
            })?;
        }

        let subwords = demazure_subwords(&sys, q, pi, DEFAULT_CENSUS_LIMIT).unwrap();
        let census_numerator = HilbertNumerator::from_subwords(&subwords, ell);
        let resolution_numerator = HilbertNumerator::from_betti(&betti);
        ensure(
            census_numerator.coefficients() == resolution_numerator.coefficients(),
            || {
                format!(
                    "numerators {census_numerator} vs {resolution_numerator} at {}",
                    at()
                )
            },
        )?;
        let census = demazure_census(&sys, q, pi, DEFAULT_CENSUS_LIMIT).unwrap();
        for j in 0..=n - ell {
            let count = census.get(&(j + ell)).copied().unwrap_or(0);
            ensure(count == binomial(r, j + 1), || {
                format!("census m_{} = {count} at {}", j + ell, at())
            })?;
        }

        let homology = oracles::simplicial_homology(&complex).unwrap();
        let sphere = homology.is_sphere_of_dim(n as isize - ell as isize - 1);
        ensure(sphere == (r == n - ell + 1), || {
            format!("sphere {sphere} at {}", at())
        })?;
        let sphere_report = report.sphere.as_ref().unwrap();
        ensure(
            sphere_report.is_sphere == sphere && sphere_report.consistent(),
            || format!("sphere report at {}", at()),
        )?;

        let nonfaces = complex.minimal_nonfaces();
        let ci = report.ci_generators.as_ref().unwrap();
        ensure(ci.same_generators(&nonfaces), || {
            format!("I_Δ formula at {}", at())
        })?;
        ensure(report.is_complete_intersection == Some(true), || {
            format!("supports overlap at {}", at())
        })?;

        // Cohen–Macaulay dual ⇔ I_Δ has a linear resolution
        let sr_betti = oracles::hochster_betti(&nonfaces).unwrap();
        let linear = sr_betti
            .entries()
            .map(|((i, j), _)| j - i)
            .collect::<BTreeSet<_>>()
            .len()
            == 1;
        ensure(report.cm_dual == Some(linear), || {
            format!("cm_dual at {}", at())
        })?;
        if linear != (r == 1) {
            literal_cm_failures.insert(at());
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:?}")
    })?;
    // The stated height-one and principal-dual rules break exactly at ℓ(π) = 1,
    // where the common factor is 1 and the dual ideal is r variables.
    ensure(
        literal_height_failures == length_one && literal_cm_failures == length_one,
        || {
            format!(
            "unexpected exceptions: height {literal_height_failures:?}, cm {literal_cm_failures:?}, ℓ=1 {length_one:?}"
        )
        },
    )?;
    Ok(format!(
        "{} constructed instances in {:.1} s; height=1 and cm_dual⇔r=1 fail exactly on the {} instances with ℓ(π)=1, r>1 (height r, k[Δ∨] CM); corrected forms hold everywhere",
        corpus.len(),
        elapsed.as_secs_f64(),
        length_one.len()
    ))
}

fn criterion_8() -> Outcome {
    let complex = SimplicialComplex::from_vertex_lists(4, &[&[3, 4], &[2, 4], &[1, 3], &[1, 2]]);
    let shifted = complex.is_shifted().map_err(|e| e.to_string())?;
    ensure(!shifted, || "reported shifted".into())?;
    Ok("is_shifted = false".into())
}

fn criterion_9() -> Outcome {
    let sys = a3();
    let elements = sys.elements();
    let mut pairs = 0;
    for u in &elements {
        for w in &elements {
            let exhaustive = oracles::exhaustive_bruhat(&sys, u, w).unwrap();
            ensure(sys.bruhat_leq(u, w) == exhaustive, || {
                format!("bruhat {u} ≤ {w}")
            })?;
            let rw = sys.reduced_word(w);
            ensure(words::contains(&sys, &rw, u).unwrap() == exhaustive, || {
                format!("contains ({rw}) ⊇ {u}")
            })?;
            pairs += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut contained = 0;
    for _ in 0..1000 {
        let len = rng.random_range(0..=12);
        let q = Word::new((0..len).map(|_| rng.random_range(1..=3)).collect());
        let pi = &elements[rng.random_range(0..elements.len())];
        let greedy = words::contains(&sys, &q, pi).unwrap();
        ensure(
            greedy == oracles::exhaustive_contains(&sys, &q, pi).unwrap(),
            || describe(&q, pi),
        )?;
        contained += greedy as usize;
    }
    Ok(format!(
        "{pairs} pairs in S_4 and 1000 random pairs ({contained} contained) agree"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("worked example reproduction", criterion_1),
        ("vertex decomposition equals lex shelling", criterion_2),
        ("lex linear quotients", criterion_3),
        ("projdim and regularity bounds", criterion_4),
        ("projdim of the Stanley-Reisner ring", criterion_5),
        ("min-formula sets and counterexample", criterion_6),
        ("special class over the constructor family", criterion_7),
        ("non-shifted example", criterion_8),
        ("greedy containment and Bruhat", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
