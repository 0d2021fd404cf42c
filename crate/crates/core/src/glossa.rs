//! Glossa: a finite carrier whose elements are paired with real-vector descriptions.
//!
//! A [`Glossa`] stores the probe function elementwise (`desc_of`), the value assigned
//! to the empty set, and an exact inverted index from descriptions back to elements.
//! The projection forgets the description of a pair; its inverse collects every
//! element whose description matches a target, exactly or within a tolerance.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of the probe codomain.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Description(Vec<f64>);

impl Description {
    pub fn new(values: Vec<f64>) -> Self {
        Description(values)
    }

    pub fn zeros(dim: usize) -> Self {
        Description(vec![0.0; dim])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|v| v.is_finite())
    }

    /// Euclidean distance. Both vectors must have the same length.
    pub fn distance(&self, other: &Description) -> f64 {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }

    /// Tolerance match: exact equality at `eta == 0`, otherwise `‖self − other‖₂ ≤ eta`.
    pub fn matches(&self, other: &Description, eta: f64) -> bool {
        if eta == 0.0 {
            self == other
        } else {
            self.distance(other) <= eta
        }
    }

    pub(crate) fn key(&self) -> DescKey {
        DescKey(
            self.0
                .iter()
                // -0.0 and 0.0 compare equal, so they must share a key
                .map(|v| if *v == 0.0 { 0u64 } else { v.to_bits() })
                .collect(),
        )
    }
}

impl From<Vec<f64>> for Description {
    fn from(values: Vec<f64>) -> Self {
        Description(values)
    }
}

impl<const N: usize> From<[f64; N]> for Description {
    fn from(values: [f64; N]) -> Self {
        Description(values.to_vec())
    }
}

/// Canonical byte-level encoding of a description, used as a hash key.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct DescKey(Box<[u64]>);

/// Integer lattice position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }
}

impl From<[i64; 2]> for Point {
    fn from([x, y]: [i64; 2]) -> Self {
        Point { x, y }
    }
}

impl From<Point> for [i64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Point { x, y }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    pub id: String,
    pub coords: Option<Point>,
}

/// One `(element, description)` entry, as it appears in the glossa JSON format.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub id: String,
    pub desc: Description,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coords: Option<Point>,
}

impl Entry {
    pub fn new(id: impl Into<String>, desc: impl Into<Description>) -> Self {
        Entry {
            id: id.into(),
            desc: desc.into(),
            coords: None,
        }
    }

    pub fn with_coords(mut self, coords: impl Into<Point>) -> Self {
        self.coords = Some(coords.into());
        self
    }
}

/// A finite subset of a glossa's carrier, by element id.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ElementSet {
    pub ids: BTreeSet<String>,
}

impl ElementSet {
    pub fn new() -> Self {
        ElementSet::default()
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn contains(&self, id: &str) -> bool {
        self.ids.contains(id)
    }

    pub fn insert(&mut self, id: impl Into<String>) -> bool {
        self.ids.insert(id.into())
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.ids.iter().map(String::as_str)
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        self.ids.union(&other.ids).cloned().collect()
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        self.ids.intersection(&other.ids).cloned().collect()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.ids.is_subset(&other.ids)
    }
}

impl<S: Into<String>> FromIterator<S> for ElementSet {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        ElementSet {
            ids: iter.into_iter().map(Into::into).collect(),
        }
    }
}

/// On-disk form of a glossa.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GlossaFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi_empty: Option<Description>,
    pub elements: Vec<Entry>,
}

/// The total space of a probe function over a finite carrier.
///
/// Immutable after construction.
#[derive(Clone, Debug)]
pub struct Glossa {
    dim: usize,
    empty_desc: Description,
    elements: Vec<Element>,
    descs: Vec<Description>,
    by_id: HashMap<String, usize>,
    by_desc: HashMap<DescKey, Vec<usize>>,
}

impl Glossa {
    /// Builds a glossa from `(id, description)` pairs.
    pub fn from_pairs<I, S, D>(
        pairs: I,
        dim: usize,
        empty_desc: impl Into<Description>,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = (S, D)>,
        S: Into<String>,
        D: Into<Description>,
    {
        let entries = pairs.into_iter().map(|(id, d)| Entry::new(id, d)).collect();
        Glossa::new(dim, empty_desc.into(), entries)
    }

    pub fn new(dim: usize, empty_desc: Description, entries: Vec<Entry>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        check_desc("∅", &empty_desc, dim)?;

        let mut elements = Vec::with_capacity(entries.len());
        let mut descs = Vec::with_capacity(entries.len());
        let mut by_id = HashMap::with_capacity(entries.len());
        let mut by_desc: HashMap<DescKey, Vec<usize>> = HashMap::new();
        for (idx, entry) in entries.into_iter().enumerate() {
            check_desc(&entry.id, &entry.desc, dim)?;
            if by_id.insert(entry.id.clone(), idx).is_some() {
                return Err(Error::DuplicateId(entry.id));
            }
            by_desc.entry(entry.desc.key()).or_default().push(idx);
            elements.push(Element {
                id: entry.id,
                coords: entry.coords,
            });
            descs.push(entry.desc);
        }

        Ok(Glossa {
            dim,
            empty_desc,
            elements,
            descs,
            by_id,
            by_desc,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The description assigned to the empty set.
    pub fn empty_desc(&self) -> &Description {
        &self.empty_desc
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> &Element {
        &self.elements[idx]
    }

    pub fn desc(&self, idx: usize) -> &Description {
        &self.descs[idx]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.by_id.get(id).copied()
    }

    pub fn desc_of(&self, id: &str) -> Option<&Description> {
        self.index_of(id).map(|i| &self.descs[i])
    }

    pub fn carrier(&self) -> ElementSet {
        self.elements.iter().map(|e| e.id.clone()).collect()
    }

    /// Resolves a set of ids to sorted element indices.
    pub fn resolve(&self, set: &ElementSet) -> Result<Vec<usize>> {
        let mut out = set
            .iter()
            .map(|id| {
                self.index_of(id)
                    .ok_or_else(|| Error::UnknownElement(id.to_owned()))
            })
            .collect::<Result<Vec<_>>>()?;
        out.sort_unstable();
        Ok(out)
    }

    pub fn ids_of(&self, indices: &[usize]) -> ElementSet {
        indices
            .iter()
            .map(|&i| self.elements[i].id.clone())
            .collect()
    }

    pub(crate) fn check_dim(&self, what: &str, desc: &Description) -> Result<()> {
        check_desc(what, desc, self.dim)
    }

    /// Elements carrying exactly `desc`, in index order.
    pub fn exact_lookup(&self, desc: &Description) -> &[usize] {
        self.by_desc
            .get(&desc.key())
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// π: forgets the description of a glossa pair.
    pub fn project<'a>(&'a self, id: &str, desc: &Description) -> Result<&'a str> {
        let idx = self
            .index_of(id)
            .ok_or_else(|| Error::NotAMember(id.to_owned()))?;
        if self.descs[idx] != *desc {
            return Err(Error::NotAMember(id.to_owned()));
        }
        Ok(&self.elements[idx].id)
    }

    /// φ(u) with duplicates collapsed, in carrier order. With `include_empty`, φ(∅) is
    /// appended unless already present.
    pub fn fiber(&self, u: &ElementSet, include_empty: bool) -> Result<Vec<Description>> {
        let idx = self.resolve(u)?;
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for &i in &idx {
            if seen.insert(self.descs[i].key()) {
                out.push(self.descs[i].clone());
            }
        }
        if include_empty && seen.insert(self.empty_desc.key()) {
            out.push(self.empty_desc.clone());
        }
        Ok(out)
    }

    /// Elements of `domain` whose description lies within `eta` of `target`.
    pub fn pi_inverse(
        &self,
        target: &Description,
        domain: &ElementSet,
        eta: f64,
    ) -> Result<ElementSet> {
        self.check_dim("target", target)?;
        check_eta(eta)?;
        let domain = self.resolve(domain)?;
        Ok(self.ids_of(&self.pi_inverse_idx(target, &domain, eta)))
    }

    /// Index form of [`Glossa::pi_inverse`]; `domain` must be sorted.
    pub fn pi_inverse_idx(&self, target: &Description, domain: &[usize], eta: f64) -> Vec<usize> {
        if eta == 0.0 {
            self.exact_lookup(target)
                .iter()
                .copied()
                .filter(|i| domain.binary_search(i).is_ok())
                .collect()
        } else {
            domain
                .iter()
                .copied()
                .filter(|&i| self.descs[i].matches(target, eta))
                .collect()
        }
    }

    /// Finite local-trivialization check over `u`.
    ///
    /// For each `x ∈ u` the pair `p = (x, φ(x))` is sent to `(x, φ(x)) ∈ u × φ(u)`;
    /// the triangle commutes when the first projection agrees with `π(p)` and the
    /// inverted index maps `φ(x)` back onto `x`.
    pub fn local_trivialization_check(&self, u: &ElementSet) -> bool {
        let Ok(idx) = self.resolve(u) else {
            return false;
        };
        let fibre: std::collections::HashSet<DescKey> =
            idx.iter().map(|&i| self.descs[i].key()).collect();
        idx.iter().all(|&i| {
            let id = self.elements[i].id.as_str();
            let desc = &self.descs[i];
            let gamma = (id, desc);
            fibre.contains(&gamma.1.key())
                && matches!(self.project(id, desc), Ok(p) if p == gamma.0)
                && self.exact_lookup(desc).contains(&i)
        })
    }

    pub fn to_file(&self) -> GlossaFile {
        GlossaFile {
            dim: self.dim,
            phi_empty: Some(self.empty_desc.clone()),
            elements: self
                .elements
                .iter()
                .zip(&self.descs)
                .map(|(e, d)| Entry {
                    id: e.id.clone(),
                    desc: d.clone(),
                    coords: e.coords,
                })
                .collect(),
        }
    }

    #[cfg(test)]
    pub(crate) fn corrupt_desc(&mut self, id: &str, desc: Description) {
        let i = self.by_id[id];
        self.descs[i] = desc;
    }
}

impl TryFrom<GlossaFile> for Glossa {
    type Error = Error;

    fn try_from(file: GlossaFile) -> Result<Self> {
        let empty = file
            .phi_empty
            .unwrap_or_else(|| Description::zeros(file.dim));
        Glossa::new(file.dim, empty, file.elements)
    }
}

impl Serialize for Glossa {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_file().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Glossa {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let file = GlossaFile::deserialize(d)?;
        Glossa::try_from(file).map_err(serde::de::Error::custom)
    }
}

fn check_desc(id: &str, desc: &Description, dim: usize) -> Result<()> {
    if desc.len() != dim {
        return Err(Error::DimensionMismatch {
            id: id.to_owned(),
            expected: dim,
            found: desc.len(),
        });
    }
    if !desc.is_finite() {
        return Err(Error::NonFinite(id.to_owned()));
    }
    Ok(())
}

pub(crate) fn check_eta(eta: f64) -> Result<()> {
    if eta.is_finite() && eta >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidTolerance(eta))
    }
}

/// Merge of two sorted, deduplicated index lists.
pub(crate) fn sorted_union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

pub(crate) fn sorted_intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len().min(b.len()));
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// Four balls: B1 and B3 blue (1), B2 black (2), B4 green (3).
    pub fn four_balls() -> Glossa {
        Glossa::from_pairs(
            [("B1", [1.0]), ("B2", [2.0]), ("B3", [1.0]), ("B4", [3.0])],
            1,
            [0.0],
        )
        .unwrap()
    }

    pub fn set(ids: &[&str]) -> ElementSet {
        ids.iter().copied().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::{four_balls, set};
    use super::*;

    #[test]
    fn build_empty_and_bad_dimension() {
        let g = Glossa::from_pairs(Vec::<(&str, [f64; 3])>::new(), 3, [0.0, 0.0, 0.0]).unwrap();
        assert!(g.is_empty());

        let err = Glossa::from_pairs([("a", vec![1.0, 2.0]), ("b", vec![1.0])], 2, [0.0, 0.0])
            .unwrap_err();
        assert!(
            matches!(err, Error::DimensionMismatch { ref id, .. } if id == "b"),
            "{err}"
        );

        let err = Glossa::from_pairs([("a", [1.0]), ("a", [2.0])], 1, [0.0]).unwrap_err();
        assert!(matches!(err, Error::DuplicateId(ref id) if id == "a"));

        let err = Glossa::from_pairs([("a", [f64::NAN])], 1, [0.0]).unwrap_err();
        assert!(matches!(err, Error::NonFinite(_)));

        assert!(matches!(
            Glossa::from_pairs([("a", [1.0])], 1, [0.0, 0.0]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn project_pairs() {
        let g = four_balls();
        assert_eq!(g.project("B1", &[1.0].into()).unwrap(), "B1");
        assert!(g.project("B1", &[2.0].into()).is_err());
        assert!(g.project("B9", &[1.0].into()).is_err());

        let empty = Glossa::from_pairs(Vec::<(&str, [f64; 1])>::new(), 1, [0.0]).unwrap();
        assert!(empty.project("B1", &[1.0].into()).is_err());
    }

    #[test]
    fn fiber_collapses_duplicates() {
        let g = four_balls();
        let all = g.fiber(&set(&["B1", "B2", "B3", "B4"]), false).unwrap();
        assert_eq!(all, vec![[1.0].into(), [2.0].into(), [3.0].into()]);
        assert!(g.fiber(&set(&[]), false).unwrap().is_empty());
        assert_eq!(
            g.fiber(&set(&[]), true).unwrap(),
            vec![Description::from([0.0])]
        );
        assert_eq!(
            g.fiber(&set(&["B1", "B3"]), false).unwrap(),
            vec![[1.0].into()]
        );
    }

    #[test]
    fn pi_inverse_examples() {
        let g = four_balls();
        let all = g.carrier();
        assert_eq!(
            g.pi_inverse(&[1.0].into(), &all, 0.0).unwrap(),
            set(&["B1", "B3"])
        );
        assert!(g.pi_inverse(&[7.0].into(), &all, 0.0).unwrap().is_empty());
        assert_eq!(
            g.pi_inverse(&[1.0].into(), &set(&["B1", "B2"]), 0.0)
                .unwrap(),
            set(&["B1"])
        );
        assert_eq!(
            g.pi_inverse(&[1.4].into(), &all, 0.5).unwrap(),
            set(&["B1", "B3"])
        );
        assert!(g.pi_inverse(&[1.0, 2.0].into(), &all, 0.0).is_err());
        assert!(g.pi_inverse(&[1.0].into(), &all, -1.0).is_err());
    }

    #[test]
    fn negative_zero_shares_key() {
        let g = Glossa::from_pairs([("z", [-0.0])], 1, [0.0]).unwrap();
        assert_eq!(g.exact_lookup(&[0.0].into()), &[0]);
    }

    #[test]
    fn local_trivialization() {
        let mut g = four_balls();
        assert!(g.local_trivialization_check(&set(&["B1", "B2"])));
        assert!(g.local_trivialization_check(&set(&[])));
        g.corrupt_desc("B2", [5.0].into());
        assert!(!g.local_trivialization_check(&set(&["B1", "B2"])));
        assert!(g.local_trivialization_check(&set(&["B1"])));
    }

    #[test]
    fn json_round_trip() {
        let text =
            r#"{"dim":1,"phi_empty":[0],"elements":[{"id":"p","desc":[2.5],"coords":[3,4]}]}"#;
        let g: Glossa = serde_json::from_str(text).unwrap();
        assert_eq!(g.element(0).coords, Some(Point::new(3, 4)));
        let back = serde_json::to_string(&g).unwrap();
        assert_eq!(
            back,
            r#"{"dim":1,"phi_empty":[0.0],"elements":[{"id":"p","desc":[2.5],"coords":[3,4]}]}"#
        );

        let bad = r#"{"dim":2,"elements":[{"id":"p","desc":[2.5]}]}"#;
        assert!(serde_json::from_str::<Glossa>(bad).is_err());
    }

    #[test]
    fn sorted_merges() {
        assert_eq!(sorted_union(&[1, 3, 5], &[2, 3, 6]), vec![1, 2, 3, 5, 6]);
        assert_eq!(sorted_intersection(&[1, 3, 5], &[2, 3, 5]), vec![3, 5]);
    }
}
