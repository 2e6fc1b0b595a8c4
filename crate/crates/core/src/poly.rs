//! Hall polynomials by exact interpolation over several prime fields, and
//! their reconciliation with the closed-form table for indecomposable triples.

use std::fmt;

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::combo::Combo;
use crate::error::{Error, Result};
use crate::exact;
use crate::gf::check_prime;
use crate::hall::{CompoRelation, CompoTerm, HallConfig, HallEngine, IsoClassCombo};
use crate::label::{IndecLabel, Multiset};
use crate::quiver::AlgebraContext;
use crate::Rational;

/// The primes tried, in order, when none are given.
pub const DEFAULT_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Interpolated,
    PaperExpected,
}

/// An integer polynomial in `T`; `coefficients[k]` is the coefficient of `T^k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HallPolynomial {
    coefficients: Vec<i64>,
    provenance: Provenance,
}

impl HallPolynomial {
    pub fn new(mut coefficients: Vec<i64>, provenance: Provenance) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        HallPolynomial {
            coefficients,
            provenance,
        }
    }

    pub fn zero(provenance: Provenance) -> Self {
        Self::new(Vec::new(), provenance)
    }

    pub fn one(provenance: Provenance) -> Self {
        Self::new(vec![1], provenance)
    }

    /// The polynomial `T`.
    pub fn t(provenance: Provenance) -> Self {
        Self::new(vec![0, 1], provenance)
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn evaluate(&self, t: i64) -> i128 {
        self.coefficients
            .iter()
            .rev()
            .fold(0i128, |acc, &c| acc * t as i128 + c as i128)
    }

    /// Same coefficients, ignoring provenance.
    pub fn same_as(&self, other: &HallPolynomial) -> bool {
        self.coefficients == other.coefficients
    }
}

impl fmt::Display for HallPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (k, &c) in self.coefficients.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let a = c.unsigned_abs();
            let mono = match k {
                0 => String::new(),
                1 => "T".to_string(),
                _ => format!("T^{k}"),
            };
            if k == 0 || a != 1 {
                out.push_str(&a.to_string());
            }
            out.push_str(&mono);
        }
        write!(f, "{out}")
    }
}

/// How the degree of a Hall polynomial is bounded before interpolating.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeBound {
    /// Total dimension of `M`.
    TotalDimension,
    /// `min(hom(Y,M) - end(Y), hom(M,X) - end(X), Σ_v dim Y_v · dim X_v)`,
    /// clamped at zero. The first term holds because the number of
    /// submodules isomorphic to `Y` is at most `|Hom(Y,M)| / |Aut Y|` and
    /// `|Aut Y| >= c · q^{end Y}`; the second is its dual; the third counts
    /// points of the product of Grassmannians.
    HomEstimate,
    Fixed(usize),
}

impl Default for DegreeBound {
    fn default() -> Self {
        DegreeBound::HomEstimate
    }
}

/// Hall engines at several primes, sharing one algebra.
pub struct PolyEngine {
    n: usize,
    engines: Vec<HallEngine>,
    bound: DegreeBound,
}

impl PolyEngine {
    pub fn new(n: usize, primes: &[u64], cfg: HallConfig, bound: DegreeBound) -> Result<Self> {
        let mut seen = Vec::new();
        let mut engines = Vec::new();
        for &p in primes {
            check_prime(p)?;
            if seen.contains(&p) {
                return Err(Error::Domain(format!("prime {p} listed twice")));
            }
            seen.push(p);
            engines.push(HallEngine::new(AlgebraContext::new(n, p)?, cfg)?);
        }
        if engines.is_empty() {
            return Err(Error::InsufficientPrimes { needed: 2, given: 0 });
        }
        Ok(PolyEngine { n, engines, bound })
    }

    /// Engines at the default primes.
    pub fn with_defaults(n: usize) -> Result<Self> {
        Self::new(n, &DEFAULT_PRIMES, HallConfig::default(), DegreeBound::default())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn primes(&self) -> Vec<u32> {
        self.engines.iter().map(|e| e.ctx().p()).collect()
    }

    pub fn engines(&self) -> &[HallEngine] {
        &self.engines
    }

    pub fn degree_bound_mode(&self) -> DegreeBound {
        self.bound
    }

    pub fn degree_bound(&self, x: &Multiset, y: &Multiset, m: &Multiset) -> usize {
        let n = self.n;
        match self.bound {
            DegreeBound::TotalDimension => m.total_dim(n),
            DegreeBound::Fixed(k) => k,
            DegreeBound::HomEstimate => {
                let grass: usize = x.dims(n).iter().zip(y.dims(n)).map(|(a, b)| a * b).sum();
                self.engines
                    .iter()
                    .map(|e| {
                        let t = e.table();
                        let sub = t.hom_multisets(y, m).saturating_sub(t.hom_multisets(y, y));
                        let quot = t.hom_multisets(m, x).saturating_sub(t.hom_multisets(x, x));
                        sub.min(quot).min(grass)
                    })
                    .max()
                    .unwrap_or(grass)
            }
        }
    }

    /// The Hall polynomial `φ^M_{X,Y}`.
    ///
    /// Interpolates through the first `bound + 1` primes and requires the
    /// next prime to agree; extra primes are not used.
    pub fn hall_poly(&self, x: &Multiset, y: &Multiset, m: &Multiset) -> Result<HallPolynomial> {
        let n = self.n;
        for s in [x, y, m] {
            s.validate(n)?;
        }
        let dims_add = x.dims(n).iter().zip(y.dims(n)).map(|(a, b)| a + b).eq(m.dims(n));
        if !dims_add {
            return Ok(HallPolynomial::zero(Provenance::Interpolated));
        }
        let bound = self.degree_bound(x, y, m);
        let needed = bound + 2;
        if self.engines.len() < needed {
            return Err(Error::InsufficientPrimes {
                needed,
                given: self.engines.len(),
            });
        }
        let mut xs = Vec::with_capacity(needed);
        let mut ys = Vec::with_capacity(needed);
        for e in &self.engines[..needed] {
            let v = e.hall_number(x, y, m)?;
            xs.push(Rational::from_integer(e.ctx().p().into()));
            ys.push(Rational::from_integer(v.into()));
        }
        let coeffs = exact::interpolate(&xs[..needed - 1], &ys[..needed - 1]);
        let held_out = exact::evaluate(&coeffs, &xs[needed - 1]);
        if held_out != ys[needed - 1] {
            return Err(Error::Interpolation(format!(
                "({x}, {y}, {m}): held-out prime {} gives {} but the fit predicts {held_out}",
                xs[needed - 1],
                ys[needed - 1]
            )));
        }
        let mut ints = Vec::with_capacity(coeffs.len());
        for c in &coeffs {
            if !c.is_integer() {
                return Err(Error::Interpolation(format!("({x}, {y}, {m}): coefficient {c} is not an integer")));
            }
            let v = c
                .to_integer()
                .to_i64()
                .ok_or_else(|| Error::Interpolation(format!("({x}, {y}, {m}): coefficient {c} overflows")))?;
            ints.push(v);
        }
        Ok(HallPolynomial::new(ints, Provenance::Interpolated))
    }
}

/// `φ^M_{X,Y}` at the given primes (default primes when empty).
pub fn interpolate_hall_poly(
    x: &Multiset,
    y: &Multiset,
    m: &Multiset,
    n: usize,
    primes: &[u64],
) -> Result<HallPolynomial> {
    let primes = if primes.is_empty() { &DEFAULT_PRIMES[..] } else { primes };
    PolyEngine::new(n, primes, HallConfig::default(), DegreeBound::default())?.hall_poly(x, y, m)
}

/// Value the table assigns to a listed triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ItemValue {
    T,
    One,
}

impl ItemValue {
    pub fn polynomial(self) -> HallPolynomial {
        match self {
            ItemValue::T => HallPolynomial::t(Provenance::PaperExpected),
            ItemValue::One => HallPolynomial::one(Provenance::PaperExpected),
        }
    }
}

/// Items whose index pattern is not well defined as printed.
pub const AMBIGUOUS_ITEMS: [u8; 2] = [7, 9];

/// Every numbered item of the table whose pattern the triple matches.
///
/// Item 7 prints a three-index `U`; it is matched on `X = W(i,j)`,
/// `M = U(l,i)` with `l < i <= j < n` and any `Y`. Item 9 carries no
/// constraint on `l`.
pub fn prop_items(x: IndecLabel, y: IndecLabel, m: IndecLabel, n: usize) -> Vec<(u8, ItemValue)> {
    use IndecLabel::*;
    use ItemValue::*;
    let mut out = Vec::new();
    match (x, y, m) {
        (W(i, j), U(a, l), U(b, c)) => {
            if a == j + 1 && b == i && c == l {
                if i <= l && l <= j && j < n {
                    out.push((1, T));
                }
                if l == j && i < j && j < n {
                    out.push((2, T));
                }
                if j + 1 < l && l <= n {
                    out.push((5, One));
                }
                if j < n {
                    out.push((9, One));
                }
            }
            // (W(i,j), U(l,j+1), U(l,i))
            if c == i && b == a && l == j + 1 {
                let l = a;
                if i <= j && j < l && l <= n {
                    out.push((6, One));
                }
                if i < l && l <= j && j < n {
                    out.push((8, One));
                }
            }
            if (b, c) == (i, i) && (a, l) == (i, j + 1) && j < n {
                out.push((10, One));
            }
        }
        (W(i, j), W(a, l), W(b, c)) if a == j + 1 && b == i && c == l => out.push((3, One)),
        (W(i, j), V(a), V(b)) if a == j + 1 && b == i && j < n => out.push((4, One)),
        (V(i), V(j), U(a, b)) if (a, b) == (i, j) => out.push((11, One)),
        _ => {}
    }
    if let (W(i, j), U(l, c)) = (x, m) {
        if c == i && l < i && i <= j && j < n {
            out.push((7, One));
        }
    }
    out.sort_by_key(|&(k, _)| k);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "polynomial")]
pub enum Expectation {
    Listed(HallPolynomial),
    /// Not listed, so the table claims 0.
    Unlisted,
    /// Only items with an unclear pattern apply.
    Ambiguous,
}

impl Expectation {
    pub fn polynomial(&self) -> Option<HallPolynomial> {
        match self {
            Expectation::Listed(p) => Some(p.clone()),
            Expectation::Unlisted => Some(HallPolynomial::zero(Provenance::PaperExpected)),
            Expectation::Ambiguous => None,
        }
    }
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expectation::Listed(p) => write!(f, "{p}"),
            Expectation::Unlisted => write!(f, "unlisted (0)"),
            Expectation::Ambiguous => write!(f, "ambiguous"),
        }
    }
}

/// What the table says about `φ^M_{X,Y}` for indecomposable `X, Y, M`.
///
/// A triple matching any well-defined item takes that item's value, even if
/// it also matches item 7 or 9. A triple matching only items 7 or 9 is
/// ambiguous. Conflicting values among well-defined items are also ambiguous.
pub fn prop_expected(x: IndecLabel, y: IndecLabel, m: IndecLabel, n: usize) -> Result<Expectation> {
    for l in [x, y, m] {
        l.validate(n)?;
    }
    let items = prop_items(x, y, m, n);
    if items.is_empty() {
        return Ok(Expectation::Unlisted);
    }
    let clear: Vec<ItemValue> = items
        .iter()
        .filter(|(k, _)| !AMBIGUOUS_ITEMS.contains(k))
        .map(|&(_, v)| v)
        .collect();
    match clear.first() {
        None => Ok(Expectation::Ambiguous),
        Some(&v) if clear.iter().all(|&w| w == v) => Ok(Expectation::Listed(v.polynomial())),
        Some(_) => Ok(Expectation::Ambiguous),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Match,
    Mismatch,
    PaperAmbiguous,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::PaperAmbiguous => "paper-ambiguous",
        })
    }
}

/// One row of the table check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReconciliationReport {
    pub triple: (IndecLabel, IndecLabel, IndecLabel),
    pub items: Vec<u8>,
    pub expected: Expectation,
    pub interpolated: HallPolynomial,
    pub verdict: Verdict,
    /// Set when the triple falls under item 7 or 9.
    pub ambiguous_flag: bool,
    pub note: String,
}

impl ReconciliationReport {
    /// Report columns in order; TSV and JSON output are both built from these.
    pub fn record(&self) -> Vec<(&'static str, String)> {
        let (x, y, m) = self.triple;
        let items: Vec<String> = self.items.iter().map(|k| k.to_string()).collect();
        vec![
            ("x", x.to_string()),
            ("y", y.to_string()),
            ("m", m.to_string()),
            ("items", if items.is_empty() { "-".to_string() } else { items.join(",") }),
            ("expected", self.expected.to_string()),
            ("interpolated", self.interpolated.to_string()),
            ("verdict", self.verdict.to_string()),
            ("note", self.note.clone()),
        ]
    }

    pub fn tsv_header() -> &'static str {
        "x\ty\tm\titems\texpected\tinterpolated\tverdict\tnote"
    }

    pub fn tsv_row(&self) -> String {
        self.record().into_iter().map(|(_, v)| v).collect::<Vec<_>>().join("\t")
    }
}

fn reconcile(
    engine: &PolyEngine,
    x: IndecLabel,
    y: IndecLabel,
    m: IndecLabel,
) -> Result<ReconciliationReport> {
    let n = engine.n();
    let interpolated = engine.hall_poly(&x.into(), &y.into(), &m.into())?;
    let items: Vec<u8> = prop_items(x, y, m, n).into_iter().map(|(k, _)| k).collect();
    let expected = prop_expected(x, y, m, n)?;
    let ambiguous_flag = items.iter().any(|k| AMBIGUOUS_ITEMS.contains(k));
    let verdict = match expected.polynomial() {
        None => Verdict::PaperAmbiguous,
        Some(p) if p.same_as(&interpolated) => Verdict::Match,
        Some(_) => Verdict::Mismatch,
    };
    let mut notes = Vec::new();
    if ambiguous_flag {
        let amb: Vec<String> = items
            .iter()
            .filter(|k| AMBIGUOUS_ITEMS.contains(k))
            .map(|k| format!("({k})"))
            .collect();
        notes.push(format!("paper-ambiguous item {} applies; computed {interpolated}", amb.join(",")));
    }
    Ok(ReconciliationReport {
        triple: (x, y, m),
        items,
        expected,
        interpolated,
        verdict,
        ambiguous_flag,
        note: notes.join("; "),
    })
}

/// Every ordered indecomposable triple with additive dimension vectors.
pub fn additive_triples(n: usize) -> Vec<(IndecLabel, IndecLabel, IndecLabel)> {
    let labels = IndecLabel::all(n);
    let dims: Vec<Vec<usize>> = labels.iter().map(|l| l.dims(n)).collect();
    let mut out = Vec::new();
    for (a, x) in labels.iter().enumerate() {
        for (b, y) in labels.iter().enumerate() {
            let sum: Vec<usize> = dims[a].iter().zip(&dims[b]).map(|(u, v)| u + v).collect();
            for (c, m) in labels.iter().enumerate() {
                if dims[c] == sum {
                    out.push((*x, *y, *m));
                }
            }
        }
    }
    out
}

/// Reconciles every additive indecomposable triple with the table.
///
/// Triples run in parallel on the current rayon pool; rows come back in
/// label order regardless.
pub fn verify_prop_table_with(engine: &PolyEngine) -> Result<Vec<ReconciliationReport>> {
    additive_triples(engine.n())
        .into_par_iter()
        .map(|(x, y, m)| reconcile(engine, x, y, m))
        .collect()
}

/// [`verify_prop_table_with`] using fresh engines at `primes`.
pub fn verify_prop_table(n: usize, primes: &[u64]) -> Result<Vec<ReconciliationReport>> {
    let primes = if primes.is_empty() { &DEFAULT_PRIMES[..] } else { primes };
    let engine = PolyEngine::new(n, primes, HallConfig::default(), DegreeBound::default())?;
    verify_prop_table_with(&engine)
}

/// One displayed product expansion, checked at one prime.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub case: u8,
    pub statement: String,
    pub computed: IsoClassCombo,
    pub expected: IsoClassCombo,
    pub holds: bool,
}

impl IdentityCheck {
    /// Report columns in order; TSV and JSON output are both built from these.
    pub fn record(&self) -> Vec<(&'static str, String)> {
        vec![
            ("case", self.case.to_string()),
            ("statement", self.statement.clone()),
            ("expected", self.expected.to_string()),
            ("computed", self.computed.to_string()),
            ("holds", self.holds.to_string()),
        ]
    }

    pub fn tsv_header() -> &'static str {
        "case\tstatement\texpected\tcomputed\tholds"
    }

    pub fn tsv_row(&self) -> String {
        self.record().into_iter().map(|(_, v)| v).collect::<Vec<_>>().join("\t")
    }
}

fn ms(labels: &[IndecLabel]) -> Multiset {
    Multiset::from_labels(labels.iter().copied())
}

/// The two product expansions of each proof case, for every admissible index tuple.
///
/// Each entry is `(case, statement, left, right, expected)` at `q`.
pub fn proof_expansions(n: usize, q: i64) -> Vec<(u8, String, Multiset, Multiset, IsoClassCombo)> {
    use IndecLabel::*;
    let mut out = Vec::new();
    let sn = V(n);
    for i in 1..n {
        for j in i + 1..n {
            let (a, b) = (W(i, i), W(i + 1, j));
            let sum = ms(&[a, b]);
            out.push((
                1,
                format!("[{a}]*[{b}] = [{sum}] + [{}]", W(i, j)),
                ms(&[a]),
                ms(&[b]),
                Combo::from_terms([(sum.clone(), 1), (ms(&[W(i, j)]), 1)]),
            ));
            out.push((1, format!("[{b}]*[{a}] = [{sum}]"), ms(&[b]), ms(&[a]), Combo::single(sum, 1)));
        }
    }
    for i in 1..n {
        let w = W(i, n - 1);
        let sum = ms(&[w, sn]);
        out.push((
            2,
            format!("[{w}]*[{sn}] = [{sum}] + [{}]", V(i)),
            ms(&[w]),
            ms(&[sn]),
            Combo::from_terms([(sum.clone(), 1), (ms(&[V(i)]), 1)]),
        ));
        out.push((2, format!("[{sn}]*[{w}] = [{sum}]"), ms(&[sn]), ms(&[w]), Combo::single(sum, 1)));
    }
    for i in 1..n {
        for j in 1..=i {
            let w = W(i, n - 1);
            let pj = U(n, j);
            let sum = ms(&[w, pj]);
            out.push((
                3,
                format!("[{w}]*[{pj}] = q[{sum}] + q[{}]", U(i, j)),
                ms(&[w]),
                ms(&[pj]),
                Combo::from_terms([(sum.clone(), q), (ms(&[U(i, j)]), q)]),
            ));
            out.push((3, format!("[{pj}]*[{w}] = [{sum}]"), ms(&[pj]), ms(&[w]), Combo::single(sum, 1)));
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let (vi, vj) = (V(i), V(j));
            let sum = ms(&[vi, vj]);
            out.push((
                4,
                format!("[{vi}]*[{vj}] = q[{sum}] + [{}]", U(j, i)),
                ms(&[vi]),
                ms(&[vj]),
                Combo::from_terms([(sum.clone(), q), (ms(&[U(j, i)]), 1)]),
            ));
            out.push((
                4,
                format!("[{vj}]*[{vi}] = [{sum}] + [{}]", U(i, j)),
                ms(&[vj]),
                ms(&[vi]),
                Combo::from_terms([(sum, 1), (ms(&[U(i, j)]), 1)]),
            ));
        }
    }
    out
}

/// Checks every proof-case expansion as an exact equality at `q = p`.
pub fn verify_thm_identities_with(engine: &HallEngine) -> Result<Vec<IdentityCheck>> {
    let n = engine.ctx().n();
    let q = engine.ctx().p() as i64;
    proof_expansions(n, q)
        .into_iter()
        .map(|(case, statement, a, b, expected)| {
            let computed = engine.product(&a, &b)?;
            let holds = computed == expected;
            Ok(IdentityCheck {
                case,
                statement,
                computed,
                expected,
                holds,
            })
        })
        .collect()
}

pub fn verify_thm_identities(n: usize, p: u64) -> Result<Vec<IdentityCheck>> {
    let engine = HallEngine::new(AlgebraContext::new(n, p)?, HallConfig::default())?;
    verify_thm_identities_with(&engine)
}

/// The relations obtained by solving each case's expansions for its target.
///
/// Returned as `(case, relation)`; case 1 needs `n >= 3`.
pub fn proof_relations(n: usize, q: i64) -> Vec<(u8, CompoRelation)> {
    use IndecLabel::*;
    let r = |k: i64| Rational::from_integer(k.into());
    let q_inv = Rational::new(1.into(), q.into());
    let term = |coef: Rational, left: Multiset, right: Multiset| CompoTerm { coef, left, right };
    let one = |l: IndecLabel| ms(&[l]);
    let mut out = Vec::new();
    for i in 1..n {
        for j in i + 1..n {
            out.push((
                1,
                CompoRelation {
                    target: one(W(i, j)),
                    terms: vec![
                        term(r(1), one(W(i, i)), one(W(i + 1, j))),
                        term(r(-1), one(W(i + 1, j)), one(W(i, i))),
                    ],
                },
            ));
        }
    }
    for i in 1..n {
        out.push((
            2,
            CompoRelation {
                target: one(V(i)),
                terms: vec![
                    term(r(1), one(W(i, n - 1)), one(V(n))),
                    term(r(-1), one(V(n)), one(W(i, n - 1))),
                ],
            },
        ));
    }
    for i in 1..n {
        for j in 1..=i {
            out.push((
                3,
                CompoRelation {
                    target: one(U(i, j)),
                    terms: vec![
                        term(q_inv.clone(), one(W(i, n - 1)), one(U(n, j))),
                        term(r(-1), one(U(n, j)), one(W(i, n - 1))),
                    ],
                },
            ));
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            out.push((
                4,
                CompoRelation {
                    target: one(U(i, j)),
                    terms: vec![
                        term(r(1), one(V(j)), one(V(i))),
                        term(q_inv.clone(), one(U(j, i)), Multiset::zero()),
                        term(-q_inv.clone(), one(V(i)), one(V(j))),
                    ],
                },
            ));
        }
    }
    out
}

/// Sum of coefficients, i.e. the value at `T = 1` of a coefficient list.
pub fn value_at_one(p: &HallPolynomial) -> i64 {
    p.coefficients().iter().sum()
}
