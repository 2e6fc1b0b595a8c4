//! Acceptance suite. Each test prints one `PASS` or `FAIL` line for its
//! criterion straight to stdout, so the lines show up without `--nocapture`.
//!
//! Where the brute-force engine disagrees with a closed formula, the test
//! pins the exact set of disagreeing cases: the criterion line reads FAIL,
//! and the test itself fails only if that set changes.

use std::collections::BTreeSet;
use std::io::Write;

use hallq::gf::{enumerate_subspaces_of_dim, gaussian_binomial, Matrix, SubspaceBasis};
use hallq::hall::{HallConfig, HallEngine};
use hallq::hom::{decompose, is_iso};
use hallq::label::multisets_with_dims;
use hallq::lie::{build_bracket_table_with, verify_lie_axioms};
use hallq::poly::{
    proof_relations, verify_prop_table_with, verify_thm_identities, DegreeBound, PolyEngine, Verdict,
};
use hallq::quiver::{check_relation, make_indec, module_of};
use hallq::{AlgebraContext, IndecLabel, Multiset, Representation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use IndecLabel::*;

const DEFAULT_SEED: u64 = 20_240_601;
const PROP_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

fn report(criterion: u8, pass: bool, detail: &str) {
    let mut out = std::io::stdout().lock();
    let status = if pass { "PASS" } else { "FAIL" };
    writeln!(out, "criterion {criterion}: {status}: {detail}").unwrap();
}

fn seed() -> u64 {
    std::env::var("HALLQ_TEST_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

fn ctx(n: usize, p: u64) -> AlgebraContext {
    AlgebraContext::new(n, p).unwrap()
}

/// Dimension vector read off the pictures of the indecomposables.
fn oracle_dims(l: IndecLabel, n: usize) -> Vec<usize> {
    (1..=n)
        .map(|v| match l {
            W(i, j) => usize::from(i <= v && v <= j),
            V(i) => usize::from(v >= i),
            U(i, j) => {
                let (lo, hi) = (i.min(j), i.max(j));
                if v >= hi {
                    2
                } else if v >= lo {
                    1
                } else {
                    0
                }
            }
        })
        .collect()
}

#[test]
fn criterion_1_classification() {
    let mut problems = Vec::new();
    let mut checked = 0;
    for n in 2..=5 {
        let labels = IndecLabel::all(n);
        assert_eq!(labels.len(), n * n + n + n * (n - 1) / 2);
        for p in [2, 3] {
            let c = ctx(n, p);
            let reps: Vec<Representation> = labels.iter().map(|&l| make_indec(l, c).unwrap()).collect();
            for (l, r) in labels.iter().zip(&reps) {
                if !check_relation(r) {
                    problems.push(format!("{l} violates the relation at n={n} p={p}"));
                }
                if r.dims() != oracle_dims(*l, n).as_slice() {
                    problems.push(format!("{l} has dims {:?} at n={n}", r.dims()));
                }
            }
            for a in 0..reps.len() {
                for b in a + 1..reps.len() {
                    checked += 1;
                    if is_iso(&reps[a], &reps[b]).unwrap() {
                        problems.push(format!("{} ~ {} at n={n} p={p}", labels[a], labels[b]));
                    }
                }
            }
        }
    }
    report(
        1,
        problems.is_empty(),
        &format!("n=2..5, p=2,3: relation, dims, {checked} non-isomorphic pairs; problems {problems:?}"),
    );
    assert!(problems.is_empty());
}

/// Table rows where the brute force disagrees with the listed values.
///
/// For i != j the V-rows are transposed: U(i,j) has the unique submodule
/// V(i) with quotient V(j), consistent with the product `[V_i][V_j]` used
/// for the U-case of the existence proof. At n = 3 one unlisted triple is
/// nonzero.
fn known_table_mismatches(n: usize) -> BTreeSet<(IndecLabel, IndecLabel, IndecLabel, String)> {
    let mut out = BTreeSet::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.insert((V(i), V(j), U(i, j), "0".to_string()));
                out.insert((V(j), V(i), U(i, j), "1".to_string()));
            }
        }
    }
    if n == 3 {
        out.insert((W(1, 2), U(3, 2), U(2, 1), "T - 1".to_string()));
    }
    out
}

#[test]
fn criterion_2_and_3_hall_polynomial_table() {
    let mut all_match = true;
    let mut details = Vec::new();
    let mut ambiguous_lines = Vec::new();
    let mut ambiguous_ok = true;
    let mut unexpected = Vec::new();
    for n in [2, 3] {
        let engine = PolyEngine::new(n, &PROP_PRIMES, HallConfig::default(), DegreeBound::default()).unwrap();
        let rows = verify_prop_table_with(&engine).unwrap();
        assert!(!rows.is_empty());
        let mismatches: BTreeSet<_> = rows
            .iter()
            .filter(|r| r.verdict == Verdict::Mismatch)
            .map(|r| (r.triple.0, r.triple.1, r.triple.2, r.interpolated.to_string()))
            .collect();
        let matched = rows.iter().filter(|r| r.verdict == Verdict::Match).count();
        if !mismatches.is_empty() {
            all_match = false;
        }
        details.push(format!(
            "n={n}: {} triples, {matched} match, {} mismatch {:?}",
            rows.len(),
            mismatches.len(),
            mismatches.iter().map(|m| format!("({},{},{})={}", m.0, m.1, m.2, m.3)).collect::<Vec<_>>()
        ));
        if mismatches != known_table_mismatches(n) {
            unexpected.push(format!("n={n}: {mismatches:?}"));
        }

        for r in &rows {
            // every indecomposable triple has degree at most 1
            assert!(r.interpolated.degree().map_or(true, |d| d <= 1), "{r:?}");
            // evaluation consistency at every prime used
            let (x, y, m) = (Multiset::from(r.triple.0), Multiset::from(r.triple.1), Multiset::from(r.triple.2));
            let needed = engine.degree_bound(&x, &y, &m) + 2;
            for e in &engine.engines()[..needed] {
                let p = e.ctx().p() as i64;
                assert_eq!(r.interpolated.evaluate(p), e.hall_number(&x, &y, &m).unwrap() as i128);
            }
            if r.items.iter().any(|k| *k == 7 || *k == 9) {
                if !r.ambiguous_flag || r.note.is_empty() {
                    ambiguous_ok = false;
                }
                ambiguous_lines.push(format!(
                    "n={n} ({},{},{}) items {:?} -> {}",
                    r.triple.0, r.triple.1, r.triple.2, r.items, r.interpolated
                ));
            }
        }
    }
    report(2, all_match, &details.join("; "));
    report(
        3,
        ambiguous_ok && !ambiguous_lines.is_empty(),
        &format!("{} triples under items 7/9 reported: {}", ambiguous_lines.len(), ambiguous_lines.join("; ")),
    );
    assert!(ambiguous_ok);
    assert!(unexpected.is_empty(), "mismatch set changed: {unexpected:?}");
}

#[test]
fn criterion_4_proof_expansions() {
    let mut failures = BTreeSet::new();
    let mut total = 0;
    for n in [2, 3] {
        for p in [2, 3] {
            let checks = verify_thm_identities(n, p).unwrap();
            assert!(!checks.is_empty());
            total += checks.len();
            for c in checks.iter().filter(|c| !c.holds) {
                failures.insert((n, p, c.statement.clone(), c.computed.to_string()));
            }
        }
    }
    // [W(i,n-1)] * [P_j] for j < i: Hom(P_j, W(i,n-1)) = 0, so the split
    // extension and U(i,j) each appear once rather than q times
    let mut known = BTreeSet::new();
    for p in [2, 3] {
        known.insert((
            3,
            p,
            "[W2,2]*[U3,1] = q[W2,2+U3,1] + q[U2,1]".to_string(),
            "1*[W2,2+U3,1] + 1*[U2,1]".to_string(),
        ));
    }
    report(
        4,
        failures.is_empty(),
        &format!("{total} expansions at n=2,3 p=2,3; failing {failures:?}"),
    );
    assert_eq!(failures, known);
}

/// Every multiset whose total dimension is at most `max`.
fn multisets_up_to(n: usize, max: usize) -> Vec<Multiset> {
    let mut out = Vec::new();
    let mut dims = vec![0usize; n];
    loop {
        if dims.iter().sum::<usize>() <= max {
            out.extend(multisets_with_dims(n, &dims));
        }
        let mut v = 0;
        loop {
            if v == n {
                return out;
            }
            dims[v] += 1;
            if dims.iter().sum::<usize>() <= max {
                break;
            }
            dims[v] = 0;
            v += 1;
        }
    }
}

#[test]
fn criterion_5_composition_relations() {
    let mut summary = Vec::new();
    let mut failures = Vec::new();

    let engine = HallEngine::new(ctx(2, 2), HallConfig::default()).unwrap();
    let small = multisets_up_to(2, 6);
    let relations = proof_relations(2, 2);
    for (case, rel) in &relations {
        rel.check_hypothesis(&engine).unwrap();
        let mut count = 0;
        for y in &small {
            for m in &small {
                let inst = rel.instance(&engine, y, m).unwrap();
                count += 1;
                if !inst.holds() {
                    failures.push(format!("case {case} [{}] Y={y} M={m}: {} vs {}", rel.target, inst.lhs, inst.rhs));
                }
            }
        }
        summary.push(format!("case {case} target {} on {count} pairs", rel.target));
    }

    // the first relation needs a W with two vertices, so it runs at n = 3
    let engine3 = HallEngine::new(ctx(3, 2), HallConfig::default()).unwrap();
    let n3 = multisets_up_to(3, 6);
    for (case, rel) in proof_relations(3, 2).into_iter().filter(|(c, _)| *c == 1) {
        rel.check_hypothesis(&engine3).unwrap();
        let xd = rel.target.dims(3);
        let mut count = 0;
        for m in &n3 {
            let md = m.dims(3);
            if xd.iter().zip(&md).any(|(a, b)| a > b) {
                continue;
            }
            let yd: Vec<usize> = md.iter().zip(&xd).map(|(a, b)| a - b).collect();
            for y in multisets_with_dims(3, &yd) {
                let inst = rel.instance(&engine3, &y, m).unwrap();
                count += 1;
                if !inst.holds() {
                    failures.push(format!("case {case} [{}] Y={y} M={m}: {} vs {}", rel.target, inst.lhs, inst.rhs));
                }
            }
        }
        summary.push(format!("case {case} target {} on {count} pairs at n=3", rel.target));
    }
    report(
        5,
        failures.is_empty(),
        &format!("p=2, total dim <= 6: {}; failures {failures:?}", summary.join(", ")),
    );
    assert!(failures.is_empty());
}

#[test]
fn criterion_6_lie_algebra() {
    let mut pass = true;
    let mut details = Vec::new();
    for n in [2, 3, 4] {
        // the largest bracket at n = 4, [U1,1, U1,2], lives in total dimension 15
        let cfg = HallConfig {
            dim_ceiling: 16,
            hom_filter: true,
        };
        let engine = PolyEngine::new(n, &hallq::poly::DEFAULT_PRIMES, cfg, DegreeBound::default()).unwrap();
        let result = build_bracket_table_with(&engine);
        let table = match result {
            Ok(t) => t,
            Err(e) => {
                pass = false;
                details.push(format!("n={n}: {e}"));
                continue;
            }
        };
        let axioms = verify_lie_axioms(&table.table);
        let ok = table.mismatches.is_empty() && axioms.holds();
        pass &= ok;
        details.push(format!(
            "n={n}: {} pairs, {} formula mismatches, {} Jacobi triples, {} violations",
            table.table.entries.len(),
            table.mismatches.len(),
            axioms.triples_checked,
            axioms.violations.len()
        ));
    }
    report(6, pass, &details.join("; "));
    assert!(pass);
}

/// `[d choose k]_p` by the q-Pascal rule.
fn q_binomial(d: usize, k: usize, p: u128) -> u128 {
    if k == 0 || k == d {
        return 1;
    }
    if k > d {
        return 0;
    }
    q_binomial(d - 1, k - 1, p) + p.pow(k as u32) * q_binomial(d - 1, k, p)
}

fn random_invertible(rng: &mut ChaCha8Rng, p: u32, d: usize) -> Matrix {
    loop {
        let m = Matrix::from_fn(p, d, d, |_, _| rng.gen_range(0..p));
        if m.is_invertible() {
            return m;
        }
    }
}

fn random_multiset(rng: &mut ChaCha8Rng, n: usize, max_dim: usize, max_summands: usize) -> Multiset {
    let labels = IndecLabel::all(n);
    loop {
        let k = rng.gen_range(1..=max_summands);
        let m = Multiset::from_labels((0..k).map(|_| labels[rng.gen_range(0..labels.len())]));
        if m.total_dim(n) <= max_dim {
            return m;
        }
    }
}

fn disguise(rng: &mut ChaCha8Rng, m: &Multiset, c: AlgebraContext) -> Representation {
    let rep = module_of(m, c).unwrap();
    let g: Vec<Matrix> = rep.dims().iter().map(|&d| random_invertible(rng, c.p(), d)).collect();
    rep.change_basis(&g).unwrap()
}

/// Upper bound on the number of submodules: tuples of subspaces.
fn subspace_tuples(dims: &[usize], p: u32) -> u128 {
    dims.iter()
        .map(|&d| (0..=d).map(|k| q_binomial(d, k, p as u128)).sum::<u128>())
        .product()
}

/// Records a failed equality instead of panicking, so the criterion line is always printed.
macro_rules! check {
    ($problems:ident, $a:expr, $b:expr) => {
        check!($problems, $a, $b, "{}", stringify!($a))
    };
    ($problems:ident, $a:expr, $b:expr, $($fmt:tt)+) => {{
        let (a, b) = (&$a, &$b);
        if a != b {
            $problems.push(format!("{}: {:?} != {:?}", format!($($fmt)+), a, b));
        }
    }};
}

#[test]
fn criterion_7_oracle_cross_checks() {
    let seed = seed();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut parts = Vec::new();
    let mut problems: Vec<String> = Vec::new();

    // subspace counts
    let mut subspace_cases = 0;
    for p in [2u32, 3, 5] {
        for d in 0..=4 {
            for k in 0..=d {
                let lower = SubspaceBasis::zero(p, d);
                let count = enumerate_subspaces_of_dim(d, p, &lower, k).count() as u128;
                let oracle = q_binomial(d, k, p as u128);
                check!(problems, count, oracle, "d={d} k={k} p={p}");
                check!(problems, gaussian_binomial(d, k, p).unwrap(), oracle);
                subspace_cases += 1;
            }
        }
    }
    parts.push(format!("{subspace_cases} subspace counts"));

    // decompose round-trips on disguised direct sums
    for _ in 0..200 {
        let n = rng.gen_range(2..=4);
        let p = [2u64, 3, 5][rng.gen_range(0..3)];
        let c = ctx(n, p);
        let m = random_multiset(&mut rng, n, 16, 4);
        let rep = disguise(&mut rng, &m, c);
        check!(problems, decompose(&rep).unwrap(), m, "seed {seed}");
    }
    parts.push("200 decompositions".to_string());

    // submodule-count conservation
    let mut modules = 0;
    while modules < 30 {
        let n = rng.gen_range(2..=3);
        let p = [2u64, 3][rng.gen_range(0..2)];
        let c = ctx(n, p);
        let m = random_multiset(&mut rng, n, 8, 5);
        if subspace_tuples(&m.dims(n), c.p()) > 200_000 {
            continue;
        }
        modules += 1;
        let rep = disguise(&mut rng, &m, c);
        let engine = HallEngine::new(c, HallConfig::default()).unwrap();
        let classes = engine.classify_submodules(&rep).unwrap();
        let total = hallq::hall::enumerate_submodules(&rep).count() as u64;
        let mut sum = 0;
        for ((x, y), count) in &classes {
            let h = engine.hall_number(x, y, &m).unwrap();
            check!(problems, h, *count, "F^{m}_{{{x},{y}}} seed {seed}");
            sum += h;
        }
        check!(problems, sum, total, "{m} seed {seed}");
    }
    parts.push("30 conservation modules".to_string());

    // associativity
    let mut triples = 0;
    while triples < 50 {
        let n = rng.gen_range(2..=3);
        let p = [2u64, 3][rng.gen_range(0..2)];
        let labels = IndecLabel::all(n);
        let pick = |rng: &mut ChaCha8Rng| Multiset::single(labels[rng.gen_range(0..labels.len())]);
        let (a, b, cc) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        if a.total_dim(n) + b.total_dim(n) + cc.total_dim(n) > 10 {
            continue;
        }
        triples += 1;
        let engine = HallEngine::new(ctx(n, p), HallConfig::default()).unwrap();
        let mut left = hallq::hall::IsoClassCombo::zero();
        for (m, &k) in engine.product(&a, &b).unwrap().iter() {
            left = left.plus(&engine.product(m, &cc).unwrap().scaled(&k));
        }
        let mut right = hallq::hall::IsoClassCombo::zero();
        for (m, &k) in engine.product(&b, &cc).unwrap().iter() {
            right = right.plus(&engine.product(&a, m).unwrap().scaled(&k));
        }
        check!(problems, left, right, "({a} {b}) {cc} at n={n} p={p} seed {seed}");
    }
    parts.push("50 associativity triples".to_string());
    report(
        7,
        problems.is_empty(),
        &format!("seed {seed}: {}; problems {problems:?}", parts.join(", ")),
    );
    assert!(problems.is_empty());
}
