//! The degenerate Hall algebra at `T = 1` and the Lie algebra spanned by
//! indecomposable isoclasses inside it.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::combo::Combo;
use crate::error::{Error, Result};
use crate::hall::HallConfig;
use crate::label::{multisets_with_dims, IndecLabel, Multiset};
use crate::poly::{value_at_one, DegreeBound, PolyEngine, DEFAULT_PRIMES};

/// Integer combination of indecomposables.
pub type LieElement = Combo<IndecLabel, i64>;

/// `Σ_M φ^M_{x,y}(1) [M]`: the product in the degenerate Hall algebra.
pub fn degenerate_product(engine: &PolyEngine, x: &Multiset, y: &Multiset) -> Result<Combo<Multiset, i64>> {
    let n = engine.n();
    let target: Vec<usize> = x.dims(n).iter().zip(y.dims(n)).map(|(a, b)| a + b).collect();
    let mut out = Combo::zero();
    for m in multisets_with_dims(n, &target) {
        let phi = engine.hall_poly(x, y, &m)?;
        out.add_term(m, value_at_one(&phi));
    }
    Ok(out)
}

/// `[x, y] = Σ_M (φ^M_{x,y}(1) - φ^M_{y,x}(1)) [M]`.
///
/// Fails with [`Error::Invariant`] if a decomposable `M` keeps a nonzero
/// coefficient, since the indecomposables must span a subalgebra.
pub fn bracket_with(engine: &PolyEngine, x: IndecLabel, y: IndecLabel) -> Result<LieElement> {
    if x == y {
        return Ok(LieElement::zero());
    }
    let (xm, ym) = (Multiset::from(x), Multiset::from(y));
    let diff = degenerate_product(engine, &xm, &ym)?.minus(&degenerate_product(engine, &ym, &xm)?);
    let mut out = LieElement::zero();
    for (m, &c) in diff.iter() {
        match m.as_indecomposable() {
            Some(l) => out.add_term(l, c),
            None => {
                return Err(Error::Invariant(format!(
                    "[{x}, {y}] has coefficient {c} on decomposable {m}"
                )))
            }
        }
    }
    Ok(out)
}

/// [`bracket_with`] using engines at `primes` (the defaults when empty).
pub fn bracket(x: IndecLabel, y: IndecLabel, n: usize, primes: &[u64]) -> Result<LieElement> {
    let primes = if primes.is_empty() { &DEFAULT_PRIMES[..] } else { primes };
    let engine = PolyEngine::new(n, primes, HallConfig::default(), DegreeBound::default())?;
    bracket_with(&engine, x, y)
}

fn delta(a: usize, b: usize) -> i64 {
    i64::from(a == b)
}

fn expected_w_first(i: usize, j: usize, y: IndecLabel) -> LieElement {
    use IndecLabel::*;
    match y {
        W(l, m) => LieElement::from_terms([(W(i, m), delta(j + 1, l)), (W(l, j), -delta(m + 1, i))]),
        V(l) => LieElement::from_terms([(V(i), delta(j + 1, l))]),
        U(l, m) => LieElement::from_terms([(U(l, i), delta(j + 1, m)), (U(i, m), delta(j + 1, l))]),
    }
}

/// The bracket of two basis elements as given by the closed formulas.
///
/// `[W_ij, W_lm] = δ_{j+1,l} W_im - δ_{m+1,i} W_lj`, `[W_ij, V_l] = δ_{j+1,l} V_i`,
/// `[W_ij, U_lm] = δ_{j+1,m} U_li + δ_{j+1,l} U_im`, `[V_i, V_j] = U_ji - U_ij`,
/// all other pairs zero, and pairs with `W` second by antisymmetry. The
/// formula for `[W, U]` is only meaningful for `j <= n - 1`, which every
/// `W` label satisfies.
pub fn corollary_expected(x: IndecLabel, y: IndecLabel, n: usize) -> Result<LieElement> {
    use IndecLabel::*;
    x.validate(n)?;
    y.validate(n)?;
    if x == y {
        return Ok(LieElement::zero());
    }
    Ok(match (x, y) {
        (W(i, j), _) => expected_w_first(i, j, y),
        (_, W(i, j)) => expected_w_first(i, j, x).negated(),
        (V(i), V(j)) => LieElement::from_terms([(U(j, i), 1), (U(i, j), -1)]),
        _ => LieElement::zero(),
    })
}

/// Structure constants on the indecomposable basis.
///
/// `entries` holds `[x, y]` for `x < y`; `reversed` holds the independently
/// computed `[y, x]` for the same pairs, used only to check antisymmetry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketTable {
    pub n: usize,
    pub labels: Vec<IndecLabel>,
    pub entries: BTreeMap<(IndecLabel, IndecLabel), LieElement>,
    pub reversed: BTreeMap<(IndecLabel, IndecLabel), LieElement>,
}

impl BracketTable {
    /// `[x, y]`, derived by negation when `x > y`.
    pub fn get(&self, x: IndecLabel, y: IndecLabel) -> LieElement {
        if x == y {
            return LieElement::zero();
        }
        if x < y {
            self.entries.get(&(x, y)).cloned().unwrap_or_default()
        } else {
            self.entries.get(&(y, x)).map(|c| c.negated()).unwrap_or_default()
        }
    }

    /// Bilinear extension of the table.
    pub fn bracket_elements(&self, a: &LieElement, b: &LieElement) -> LieElement {
        let mut out = LieElement::zero();
        for (&x, &c) in a.iter() {
            for (&y, &d) in b.iter() {
                out = out.plus(&self.get(x, y).scaled(&(c * d)));
            }
        }
        out
    }

    pub fn tsv(&self) -> String {
        let mut s = String::from("x\ty\tbracket\n");
        for ((x, y), v) in &self.entries {
            let terms: Vec<String> = v.iter().map(|(l, c)| format!("{l}:{c}")).collect();
            s.push_str(&format!("{x}\t{y}\t{}\n", terms.join(",")));
        }
        s
    }

    pub fn json(&self) -> String {
        let rows: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|((x, y), v)| {
                serde_json::json!({
                    "x": x.to_string(),
                    "y": y.to_string(),
                    "bracket": v,
                })
            })
            .collect();
        serde_json::to_string_pretty(&serde_json::json!({ "n": self.n, "entries": rows }))
            .expect("table serializes")
    }

    /// Rows of a `tabular` environment, one per nonzero bracket.
    pub fn latex(&self) -> String {
        let mut s = String::from("\\begin{tabular}{lll}\n$x$ & $y$ & $[x,y]$ \\\\\n\\hline\n");
        for ((x, y), v) in &self.entries {
            if v.is_zero() {
                continue;
            }
            let mut terms = String::new();
            for (l, &c) in v.iter() {
                let sign = if c < 0 { "-" } else if terms.is_empty() { "" } else { "+" };
                let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
                terms.push_str(&format!("{sign}{mag}{}", l.latex()));
            }
            s.push_str(&format!("${}$ & ${}$ & ${terms}$ \\\\\n", x.latex(), y.latex()));
        }
        s.push_str("\\end{tabular}\n");
        s
    }
}

/// A pair where the computed bracket differs from the closed formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BracketMismatch {
    pub x: IndecLabel,
    pub y: IndecLabel,
    pub computed: LieElement,
    pub expected: LieElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketTableReport {
    pub table: BracketTable,
    pub mismatches: Vec<BracketMismatch>,
}

/// Brackets every pair of indecomposables and compares with [`corollary_expected`].
///
/// Pairs run in parallel on the current rayon pool and are merged in label order.
pub fn build_bracket_table_with(engine: &PolyEngine) -> Result<BracketTableReport> {
    let n = engine.n();
    log::info!("bracket formulas for [W(i,j), U(l,m)] applied with j <= {}", n - 1);
    let labels = IndecLabel::all(n);
    let pairs: Vec<(IndecLabel, IndecLabel)> = labels
        .iter()
        .enumerate()
        .flat_map(|(a, &x)| labels[a + 1..].iter().map(move |&y| (x, y)))
        .collect();
    let computed = pairs
        .into_par_iter()
        .map(|(x, y)| Ok((x, y, bracket_with(engine, x, y)?, bracket_with(engine, y, x)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut entries = BTreeMap::new();
    let mut reversed = BTreeMap::new();
    let mut mismatches = Vec::new();
    for (x, y, xy, yx) in computed {
        let expected = corollary_expected(x, y, n)?;
        if xy != expected {
            mismatches.push(BracketMismatch {
                x,
                y,
                computed: xy.clone(),
                expected,
            });
        }
        entries.insert((x, y), xy);
        reversed.insert((x, y), yx);
    }
    Ok(BracketTableReport {
        table: BracketTable {
            n,
            labels,
            entries,
            reversed,
        },
        mismatches,
    })
}

pub fn build_bracket_table(n: usize, primes: &[u64]) -> Result<BracketTableReport> {
    let primes = if primes.is_empty() { &DEFAULT_PRIMES[..] } else { primes };
    let engine = PolyEngine::new(n, primes, HallConfig::default(), DegreeBound::default())?;
    build_bracket_table_with(&engine)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum AxiomViolation {
    Antisymmetry {
        x: IndecLabel,
        y: IndecLabel,
        xy: LieElement,
        yx: LieElement,
    },
    Jacobi {
        x: IndecLabel,
        y: IndecLabel,
        z: IndecLabel,
        sum: LieElement,
    },
    Grading {
        x: IndecLabel,
        y: IndecLabel,
        term: IndecLabel,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub pairs_checked: usize,
    pub triples_checked: usize,
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Antisymmetry on every pair, the Jacobi identity on every triple of basis
/// elements (repetitions allowed), and homogeneity in the dimension vector.
pub fn verify_lie_axioms(table: &BracketTable) -> AxiomReport {
    let n = table.n;
    let mut report = AxiomReport::default();
    for (&(x, y), xy) in &table.entries {
        report.pairs_checked += 1;
        let yx = table.reversed.get(&(x, y)).cloned().unwrap_or_default();
        if xy.plus(&yx) != LieElement::zero() {
            report.violations.push(AxiomViolation::Antisymmetry {
                x,
                y,
                xy: xy.clone(),
                yx,
            });
        }
        let want: Vec<usize> = x.dims(n).iter().zip(y.dims(n)).map(|(a, b)| a + b).collect();
        for &term in xy.keys() {
            if term.dims(n) != want {
                report.violations.push(AxiomViolation::Grading { x, y, term });
            }
        }
    }
    let labels = &table.labels;
    let single = |l: IndecLabel| LieElement::single(l, 1);
    for (a, &x) in labels.iter().enumerate() {
        for (b, &y) in labels.iter().enumerate().skip(a) {
            for &z in labels.iter().skip(b) {
                report.triples_checked += 1;
                let sum = table
                    .bracket_elements(&single(x), &table.get(y, z))
                    .plus(&table.bracket_elements(&single(y), &table.get(z, x)))
                    .plus(&table.bracket_elements(&single(z), &table.get(x, y)));
                if !sum.is_zero() {
                    report.violations.push(AxiomViolation::Jacobi { x, y, z, sum });
                }
            }
        }
    }
    report
}
