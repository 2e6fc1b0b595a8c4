//! Names of indecomposable isoclasses and multisets of them.
//!
//! Wire syntax: `U<i>,<j>`, `V<i>`, `W<i>,<j>`; a multiset joins labels with
//! `+` (repeating a label for multiplicity) and the zero module is `0`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An indecomposable module, named by its family and indices (1-based).
///
/// The derived order puts every `W` first, then every `V`, then every `U`,
/// each family ordered lexicographically by its indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IndecLabel {
    /// String module supported on `i..=j`, `1 <= i <= j < n`.
    W(usize, usize),
    /// String module supported on `i..=n` with zero loop.
    V(usize),
    /// Module with a two-dimensional tail at vertices `max(i,j)..=n`.
    U(usize, usize),
}

impl IndecLabel {
    pub fn validate(&self, n: usize) -> Result<()> {
        let ok = match *self {
            IndecLabel::W(i, j) => 1 <= i && i <= j && j < n,
            IndecLabel::V(i) => 1 <= i && i <= n,
            IndecLabel::U(i, j) => 1 <= i && i <= n && 1 <= j && j <= n,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Label(format!("{self} is not a module when n = {n}")))
        }
    }

    /// Dimension vector, indexed by vertex `v - 1`.
    pub fn dims(&self, n: usize) -> Vec<usize> {
        (1..=n)
            .map(|v| match *self {
                IndecLabel::W(i, j) => usize::from(i <= v && v <= j),
                IndecLabel::V(i) => usize::from(i <= v),
                IndecLabel::U(i, j) => {
                    let (lo, hi) = (i.min(j), i.max(j));
                    if v < lo {
                        0
                    } else if v < hi {
                        1
                    } else {
                        2
                    }
                }
            })
            .collect()
    }

    pub fn total_dim(&self, n: usize) -> usize {
        self.dims(n).iter().sum()
    }

    /// Every label valid for `n` vertices, in the canonical order.
    pub fn all(n: usize) -> Vec<IndecLabel> {
        let mut out = Vec::new();
        for i in 1..n {
            for j in i..n {
                out.push(IndecLabel::W(i, j));
            }
        }
        out.extend((1..=n).map(IndecLabel::V));
        for i in 1..=n {
            for j in 1..=n {
                out.push(IndecLabel::U(i, j));
            }
        }
        out
    }

    /// The simple module at vertex `i`.
    pub fn simple(i: usize, n: usize) -> Result<IndecLabel> {
        if i == 0 || i > n {
            return Err(Error::Label(format!("no vertex {i} when n = {n}")));
        }
        Ok(if i == n {
            IndecLabel::V(n)
        } else {
            IndecLabel::W(i, i)
        })
    }

    /// The indecomposable projective cover of the simple at `j`.
    pub fn projective(j: usize, n: usize) -> Result<IndecLabel> {
        let l = IndecLabel::U(n, j);
        l.validate(n)?;
        Ok(l)
    }

    /// LaTeX rendering such as `U_{2,1}`.
    pub fn latex(&self) -> String {
        match *self {
            IndecLabel::W(i, j) => format!("W_{{{i},{j}}}"),
            IndecLabel::V(i) => format!("V_{{{i}}}"),
            IndecLabel::U(i, j) => format!("U_{{{i},{j}}}"),
        }
    }
}

impl fmt::Display for IndecLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            IndecLabel::W(i, j) => write!(f, "W{i},{j}"),
            IndecLabel::V(i) => write!(f, "V{i}"),
            IndecLabel::U(i, j) => write!(f, "U{i},{j}"),
        }
    }
}

impl FromStr for IndecLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::LabelSyntax(format!("cannot parse label `{s}`"));
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars.next().ok_or_else(bad)?;
        let rest = chars.as_str();
        let index = |t: &str| -> Result<usize> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse().map_err(|_| bad())
        };
        match family {
            'V' => Ok(IndecLabel::V(index(rest)?)),
            'U' | 'W' => {
                let (a, b) = rest.split_once(',').ok_or_else(bad)?;
                let (i, j) = (index(a)?, index(b)?);
                Ok(if family == 'U' {
                    IndecLabel::U(i, j)
                } else {
                    IndecLabel::W(i, j)
                })
            }
            _ => Err(bad()),
        }
    }
}

impl Serialize for IndecLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for IndecLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An isoclass, recorded as the multiplicity of each indecomposable summand.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DecompositionMultiset {
    counts: BTreeMap<IndecLabel, usize>,
}

pub type Multiset = DecompositionMultiset;

impl DecompositionMultiset {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(label: IndecLabel) -> Self {
        Self::from_labels([label])
    }

    pub fn from_labels(labels: impl IntoIterator<Item = IndecLabel>) -> Self {
        let mut m = Self::zero();
        for l in labels {
            m.insert(l, 1);
        }
        m
    }

    pub fn insert(&mut self, label: IndecLabel, mult: usize) {
        if mult > 0 {
            *self.counts.entry(label).or_insert(0) += mult;
        }
    }

    pub fn plus(&self, other: &Multiset) -> Multiset {
        let mut out = self.clone();
        for (&l, &m) in &other.counts {
            out.insert(l, m);
        }
        out
    }

    pub fn multiplicity(&self, label: IndecLabel) -> usize {
        self.counts.get(&label).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (IndecLabel, usize)> + '_ {
        self.counts.iter().map(|(&l, &m)| (l, m))
    }

    /// Labels with repetition, in canonical order.
    pub fn labels(&self) -> Vec<IndecLabel> {
        self.iter()
            .flat_map(|(l, m)| std::iter::repeat(l).take(m))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.counts.is_empty()
    }

    /// Number of indecomposable summands counted with multiplicity.
    pub fn summands(&self) -> usize {
        self.counts.values().sum()
    }

    /// The single label, when the isoclass is indecomposable.
    pub fn as_indecomposable(&self) -> Option<IndecLabel> {
        match self.labels().as_slice() {
            [l] => Some(*l),
            _ => None,
        }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        self.counts.keys().try_for_each(|l| l.validate(n))
    }

    pub fn dims(&self, n: usize) -> Vec<usize> {
        let mut d = vec![0; n];
        for (l, m) in self.iter() {
            for (acc, x) in d.iter_mut().zip(l.dims(n)) {
                *acc += m * x;
            }
        }
        d
    }

    pub fn total_dim(&self, n: usize) -> usize {
        self.dims(n).iter().sum()
    }

    pub fn latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.labels()
            .iter()
            .map(|l| l.latex())
            .collect::<Vec<_>>()
            .join("\\oplus ")
    }
}

impl From<IndecLabel> for DecompositionMultiset {
    fn from(l: IndecLabel) -> Self {
        Self::single(l)
    }
}

impl fmt::Display for DecompositionMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.labels().iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join("+"))
    }
}

impl FromStr for DecompositionMultiset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut m = Self::zero();
        for part in s.split('+') {
            m.insert(part.parse()?, 1);
        }
        Ok(m)
    }
}

impl Serialize for DecompositionMultiset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DecompositionMultiset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Every multiset of labels (valid at `n`) whose dimension vectors sum to `target`.
pub fn multisets_with_dims(n: usize, target: &[usize]) -> Vec<Multiset> {
    let labels: Vec<(IndecLabel, Vec<usize>)> = IndecLabel::all(n)
        .into_iter()
        .map(|l| (l, l.dims(n)))
        .collect();
    let mut out = Vec::new();
    let mut current = Multiset::zero();
    let mut remaining = target.to_vec();
    knapsack(&labels, 0, &mut remaining, &mut current, &mut out);
    out
}

fn knapsack(
    labels: &[(IndecLabel, Vec<usize>)],
    idx: usize,
    remaining: &mut Vec<usize>,
    current: &mut Multiset,
    out: &mut Vec<Multiset>,
) {
    if remaining.iter().all(|&r| r == 0) {
        out.push(current.clone());
        return;
    }
    if idx == labels.len() {
        return;
    }
    let (label, dims) = &labels[idx];
    // largest multiplicity that still fits
    let max = dims
        .iter()
        .zip(remaining.iter())
        .filter(|(d, _)| **d > 0)
        .map(|(d, r)| r / d)
        .min()
        .unwrap_or(0);
    for mult in (0..=max).rev() {
        for (r, d) in remaining.iter_mut().zip(dims) {
            *r -= mult * d;
        }
        if mult > 0 {
            current.insert(*label, mult);
        }
        knapsack(labels, idx + 1, remaining, current, out);
        if mult > 0 {
            let e = current.counts.get_mut(label).expect("just inserted");
            *e -= mult;
            if *e == 0 {
                current.counts.remove(label);
            }
        }
        for (r, d) in remaining.iter_mut().zip(dims) {
            *r += mult * d;
        }
    }
}

/// Every multiset whose dimension vector is componentwise at most `bound`.
pub fn multisets_below(n: usize, bound: &[usize]) -> Vec<Multiset> {
    let mut out = Vec::new();
    let mut target = vec![0; n];
    loop {
        out.extend(multisets_with_dims(n, &target));
        let mut pos = 0;
        loop {
            if pos == n {
                return out;
            }
            target[pos] += 1;
            if target[pos] <= bound[pos] {
                break;
            }
            target[pos] = 0;
            pos += 1;
        }
    }
}
