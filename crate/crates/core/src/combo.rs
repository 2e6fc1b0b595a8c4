use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::Serialize;

use crate::exact::Scalar;

/// Finite formal linear combination of keys; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Combo<K: Ord, C> {
    terms: BTreeMap<K, C>,
}

impl<K: Ord, C> Default for Combo<K, C> {
    fn default() -> Self {
        Combo {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone, C: Scalar> Combo<K, C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(key: K, coef: C) -> Self {
        let mut c = Self::zero();
        c.add_term(key, coef);
        c
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (K, C)>) -> Self {
        let mut c = Self::zero();
        for (k, v) in terms {
            c.add_term(k, v);
        }
        c
    }

    pub fn add_term(&mut self, key: K, coef: C) {
        if coef.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&key) {
            Some(old) => old + coef,
            None => coef,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn coefficient(&self, key: &K) -> C {
        self.terms.get(key).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &C)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn scaled(&self, factor: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, c)| (k.clone(), c.clone() * factor.clone())))
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }

    pub fn negated(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, c)| (k.clone(), -c.clone())))
    }

    /// Keeps the terms whose key satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&K) -> bool) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone())),
        )
    }

    /// Re-keys every term; colliding keys are summed.
    pub fn map_keys<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> K2) -> Combo<K2, C> {
        Combo::from_terms(self.terms.iter().map(|(k, c)| (f(k), c.clone())))
    }

    pub fn map_coefficients<C2: Scalar>(&self, mut f: impl FnMut(&C) -> C2) -> Combo<K, C2> {
        Combo::from_terms(self.terms.iter().map(|(k, c)| (k.clone(), f(c))))
    }
}

impl<K: Ord + fmt::Display, C: fmt::Display> fmt::Display for Combo<K, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(k, c)| format!("{c}*[{k}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<K: Ord + fmt::Display, C: fmt::Display> Serialize for Combo<K, C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (k, c) in &self.terms {
            map.serialize_entry(&k.to_string(), &c.to_string())?;
        }
        map.end()
    }
}
