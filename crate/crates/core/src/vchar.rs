//! Integer combinations of irreducible characters `Σ c_λ [λ]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A virtual character of `S_n`. Zero multiplicities are never stored.
///
/// Iteration, rendering and serialization all use decreasing lexicographic
/// order on the labels.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VirtualCharacter {
    n: usize,
    terms: BTreeMap<Partition, i64>,
}

/// A genuine (nonnegative) character: skew characters, outer products and
/// Kronecker products all use this name.
pub type Decomposition = VirtualCharacter;

impl VirtualCharacter {
    pub fn zero(n: usize) -> Self {
        VirtualCharacter {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The irreducible `[λ]`.
    pub fn irreducible(lambda: Partition) -> Self {
        let mut v = Self::zero(lambda.size());
        v.terms.insert(lambda, 1);
        v
    }

    /// Builds from `(partition, multiplicity)` terms; all partitions must have
    /// size `n`.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, i64)>,
    {
        let mut v = Self::zero(n);
        for (lambda, c) in terms {
            v.add_term(lambda, c)?;
        }
        Ok(v)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Adds `c·[λ]`.
    pub fn add_term(&mut self, lambda: Partition, c: i64) -> Result<()> {
        if lambda.size() != self.n {
            return Err(Error::size_mismatch(lambda.size(), self.n));
        }
        if c == 0 {
            return Ok(());
        }
        let entry = self.terms.entry(lambda).or_insert(0);
        *entry = entry
            .checked_add(c)
            .ok_or(Error::Overflow("character multiplicity"))?;
        if *entry == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
        Ok(())
    }

    pub fn get(&self, lambda: &Partition) -> i64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in decreasing lexicographic order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Partition, i64)> + '_ {
        self.terms.iter().rev().map(|(k, &v)| (k, v))
    }

    /// Labels with positive multiplicity, decreasing lexicographic order.
    pub fn constituents(&self) -> Vec<Partition> {
        self.iter()
            .filter(|(_, c)| *c > 0)
            .map(|(k, _)| k.clone())
            .collect()
    }

    /// Number of components with positive coefficient.
    pub fn component_count(&self) -> usize {
        self.terms.values().filter(|&&c| c > 0).count()
    }

    /// No negative multiplicities.
    pub fn is_character(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// Sum of multiplicities.
    pub fn total_multiplicity(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Keeps the terms whose label satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Partition) -> bool) -> Self {
        VirtualCharacter {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, &v)| (k.clone(), v))
                .collect(),
        }
    }

    /// Relabels every term by `f`, which must preserve sizes (up to the
    /// declared `n`) and be injective.
    pub fn map_labels(&self, n: usize, mut f: impl FnMut(&Partition) -> Partition) -> Self {
        let mut out = Self::zero(n);
        for (k, &v) in &self.terms {
            out.add_term(f(k), v).expect("relabeling preserves size");
        }
        out
    }

    /// `[λ] ↦ [λ']` on every term.
    pub fn conjugate(&self) -> Self {
        self.map_labels(self.n, Partition::conjugate)
    }

    pub fn scale(&self, factor: i64) -> Self {
        let mut out = Self::zero(self.n);
        for (k, &v) in &self.terms {
            out.add_term(k.clone(), v * factor).expect("same size");
        }
        out
    }

    fn combine(&self, other: &Self, sign: i64) -> Self {
        assert_eq!(self.n, other.n, "adding characters of different degrees");
        let mut out = self.clone();
        for (k, &v) in &other.terms {
            out.add_term(k.clone(), sign * v).expect("same size");
        }
        out
    }

    /// Plain-text rendering with exponent compression, e.g.
    /// `[3] + 2[2,1] - [1^3]`; the zero character renders as `0`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (lambda, c)) in self.iter().enumerate() {
            let magnitude = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            if magnitude != 1 {
                out.push_str(&magnitude.to_string());
            }
            out.push_str(&lambda.to_string());
        }
        out
    }
}

impl Add for &VirtualCharacter {
    type Output = VirtualCharacter;
    fn add(self, rhs: &VirtualCharacter) -> VirtualCharacter {
        self.combine(rhs, 1)
    }
}

impl Sub for &VirtualCharacter {
    type Output = VirtualCharacter;
    fn sub(self, rhs: &VirtualCharacter) -> VirtualCharacter {
        self.combine(rhs, -1)
    }
}

impl Neg for &VirtualCharacter {
    type Output = VirtualCharacter;
    fn neg(self) -> VirtualCharacter {
        self.scale(-1)
    }
}

impl fmt::Display for VirtualCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for VirtualCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (n={})", self.render(), self.n)
    }
}

impl FromStr for VirtualCharacter {
    type Err = Error;

    /// Parses the output of [`VirtualCharacter::render`]. The zero character
    /// parses with `n = 0` since its degree is not recorded in the text.
    fn from_str(input: &str) -> Result<Self> {
        let text: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if text == "0" {
            return Ok(Self::zero(0));
        }
        let mut terms = Vec::new();
        let mut rest = text.as_str();
        let mut sign = 1i64;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        }
        while !rest.is_empty() {
            let open = rest
                .find('[')
                .ok_or_else(|| Error::parse(input, "expected '['"))?;
            let coeff: i64 = if open == 0 {
                1
            } else {
                rest[..open]
                    .parse()
                    .map_err(|_| Error::parse(input, "bad coefficient"))?
            };
            let close = rest
                .find(']')
                .ok_or_else(|| Error::parse(input, "unterminated '['"))?;
            let lambda: Partition = rest[open + 1..close].parse()?;
            terms.push((lambda, sign * coeff));
            rest = &rest[close + 1..];
            if let Some(r) = rest.strip_prefix('+') {
                sign = 1;
                rest = r;
            } else if let Some(r) = rest.strip_prefix('-') {
                sign = -1;
                rest = r;
            } else if !rest.is_empty() {
                return Err(Error::parse(input, "expected '+' or '-' between terms"));
            }
        }
        let n = terms
            .first()
            .map(|(l, _)| l.size())
            .ok_or_else(|| Error::parse(input, "no terms"))?;
        Self::from_terms(n, terms)
    }
}

impl Serialize for VirtualCharacter {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (lambda, c) in self.iter() {
            map.serialize_entry(&lambda.to_grammar_string(), &c)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for VirtualCharacter {
    /// The degree is taken from the first key; an empty object gives the
    /// zero character with `n = 0`.
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct TermsVisitor;

        impl<'de> Visitor<'de> for TermsVisitor {
            type Value = VirtualCharacter;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an object mapping partitions to integers")
            }

            fn visit_map<A: MapAccess<'de>>(
                self,
                mut access: A,
            ) -> std::result::Result<VirtualCharacter, A::Error> {
                let mut terms = Vec::new();
                while let Some((key, value)) = access.next_entry::<String, i64>()? {
                    let lambda: Partition = key.parse().map_err(serde::de::Error::custom)?;
                    terms.push((lambda, value));
                }
                let n = terms.first().map(|(l, _)| l.size()).unwrap_or(0);
                VirtualCharacter::from_terms(n, terms).map_err(serde::de::Error::custom)
            }
        }

        deserializer.deserialize_map(TermsVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn render_orders_decreasing_and_compresses() {
        let v = VirtualCharacter::from_terms(
            3,
            [(p("1^3"), 4), (p("3"), 1), (p("2,1"), 5)],
        )
        .unwrap();
        assert_eq!(v.render(), "[3] + 5[2,1] + 4[1^3]");
        let w = VirtualCharacter::from_terms(3, [(p("1^3"), -1), (p("2,1"), 2)]).unwrap();
        assert_eq!(w.render(), "2[2,1] - [1^3]");
        assert_eq!((&w - &w).render(), "0");
        assert_eq!((-&w).render(), "-2[2,1] + [1^3]");
    }

    #[test]
    fn text_round_trip() {
        for text in ["[3] + 5[2,1] + 4[1^3]", "-2[2,1] + [1^3]", "[2^2,1^2]"] {
            let v: VirtualCharacter = text.parse().unwrap();
            assert_eq!(v.render(), text);
        }
        assert!("[3] + [2]".parse::<VirtualCharacter>().is_err());
        assert!("3".parse::<VirtualCharacter>().is_err());
    }

    #[test]
    fn json_round_trip_preserves_order() {
        let v: VirtualCharacter = "[4,1] + [3,2] + [3,1^2] + [2^2,1]".parse().unwrap();
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, r#"{"4,1":1,"3,2":1,"3,1^2":1,"2^2,1":1}"#);
        let back: VirtualCharacter = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn zero_terms_are_dropped() {
        let mut v = VirtualCharacter::zero(2);
        v.add_term(p("2"), 3).unwrap();
        v.add_term(p("2"), -3).unwrap();
        assert!(v.is_zero());
        assert!(v.add_term(p("3"), 1).is_err());
    }
}
