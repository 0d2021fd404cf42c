//! Descriptive intersection and the four descriptive unions.
//!
//! Every operation takes a tolerance `eta`. At `eta == 0` descriptions must be equal
//! (exact bitwise equality after canonicalizing signed zeros); above zero two
//! descriptions match when their Euclidean distance is at most `eta`. The distance
//! from a description to a fiber is the minimum over the fiber's members.
//!
//! The fiber of an empty operand is `{φ(∅)}`, so `∅ ⋂_Φ B = {x ∈ B : φ(x) = φ(∅)}`.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::glossa::{
    check_eta, sorted_intersection, sorted_union, DescKey, Description, ElementSet, Glossa,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spatial {
    /// Ambient set is `A ∩ B`.
    Restrictive,
    /// Ambient set is `A ∪ B`.
    Nonrestrictive,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(from = "SelectorRepr", into = "SelectorRepr")]
pub enum Selector {
    /// Keep ambient elements whose description is near either operand's fiber.
    Nondiscriminatory,
    /// Keep ambient elements whose description is near one of the preselected targets.
    Discriminatory { targets: Vec<Description> },
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum SelectorRepr {
    Plain(PlainTag),
    Targets { targets: Vec<Description> },
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum PlainTag {
    Nondiscriminatory,
}

impl From<SelectorRepr> for Selector {
    fn from(r: SelectorRepr) -> Self {
        match r {
            SelectorRepr::Plain(PlainTag::Nondiscriminatory) => Selector::Nondiscriminatory,
            SelectorRepr::Targets { targets } => Selector::Discriminatory { targets },
        }
    }
}

impl From<Selector> for SelectorRepr {
    fn from(s: Selector) -> Self {
        match s {
            Selector::Nondiscriminatory => SelectorRepr::Plain(PlainTag::Nondiscriminatory),
            Selector::Discriminatory { targets } => SelectorRepr::Targets { targets },
        }
    }
}

/// Which of the four descriptive unions to compute, and at what tolerance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnionConfig {
    pub spatial: Spatial,
    pub descriptive: Selector,
    #[serde(default)]
    pub eta: f64,
}

impl UnionConfig {
    pub fn new(spatial: Spatial, descriptive: Selector, eta: f64) -> Self {
        UnionConfig {
            spatial,
            descriptive,
            eta,
        }
    }

    pub fn discriminatory(spatial: Spatial, targets: Vec<Description>, eta: f64) -> Self {
        UnionConfig::new(spatial, Selector::Discriminatory { targets }, eta)
    }

    pub fn nondiscriminatory(spatial: Spatial, eta: f64) -> Self {
        UnionConfig::new(spatial, Selector::Nondiscriminatory, eta)
    }

    pub fn with_eta(&self, eta: f64) -> Self {
        UnionConfig {
            eta,
            ..self.clone()
        }
    }

    pub fn validate(&self, g: &Glossa) -> Result<()> {
        check_eta(self.eta)?;
        if let Selector::Discriminatory { targets } = &self.descriptive {
            if targets.is_empty() {
                return Err(Error::EmptyTargets);
            }
            for t in targets {
                g.check_dim("target", t)?;
            }
        }
        Ok(())
    }
}

/// The four descriptive unions, by spatial and descriptive behaviour.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    RestrictiveDiscriminatory,
    NonrestrictiveDiscriminatory,
    RestrictiveNondiscriminatory,
    NonrestrictiveNondiscriminatory,
}

impl Variant {
    pub const ALL: [Variant; 4] = [
        Variant::RestrictiveDiscriminatory,
        Variant::NonrestrictiveDiscriminatory,
        Variant::RestrictiveNondiscriminatory,
        Variant::NonrestrictiveNondiscriminatory,
    ];

    pub fn spatial(self) -> Spatial {
        match self {
            Variant::RestrictiveDiscriminatory | Variant::RestrictiveNondiscriminatory => {
                Spatial::Restrictive
            }
            _ => Spatial::Nonrestrictive,
        }
    }

    pub fn is_discriminatory(self) -> bool {
        matches!(
            self,
            Variant::RestrictiveDiscriminatory | Variant::NonrestrictiveDiscriminatory
        )
    }

    /// Targets are ignored by the nondiscriminatory variants.
    pub fn config(self, targets: &[Description], eta: f64) -> UnionConfig {
        if self.is_discriminatory() {
            UnionConfig::discriminatory(self.spatial(), targets.to_vec(), eta)
        } else {
            UnionConfig::nondiscriminatory(self.spatial(), eta)
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::RestrictiveDiscriminatory => "restrictive-discriminatory",
            Variant::NonrestrictiveDiscriminatory => "nonrestrictive-discriminatory",
            Variant::RestrictiveNondiscriminatory => "restrictive-nondiscriminatory",
            Variant::NonrestrictiveNondiscriminatory => "nonrestrictive-nondiscriminatory",
        }
    }
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| format!("unknown union variant `{s}`"))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescriptiveResult {
    #[serde(flatten)]
    pub elements: ElementSet,
    /// Set when the union contains the empty set itself (restrictive discriminatory
    /// union with an empty operand and `φ(∅)` near a target).
    pub includes_empty_set: bool,
}

/// Outcome of an injectivity check; `witness` names two distinct elements sharing a
/// description.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Injectivity {
    pub injective: bool,
    pub witness: Option<(String, String)>,
}

/// The set of descriptions of an operand, with an exact hash index in front of a
/// linear tolerance scan.
pub(crate) struct FiberIndex<'g> {
    keys: HashSet<DescKey>,
    members: Vec<&'g Description>,
}

impl<'g> FiberIndex<'g> {
    pub(crate) fn new(g: &'g Glossa, idx: &[usize]) -> Self {
        let mut keys = HashSet::new();
        let mut members = Vec::new();
        if idx.is_empty() {
            keys.insert(g.empty_desc().key());
            members.push(g.empty_desc());
        }
        for &i in idx {
            let d = g.desc(i);
            if keys.insert(d.key()) {
                members.push(d);
            }
        }
        FiberIndex { keys, members }
    }

    pub(crate) fn reaches(&self, d: &Description, key: &DescKey, eta: f64) -> bool {
        self.keys.contains(key) || (eta > 0.0 && self.members.iter().any(|m| d.distance(m) <= eta))
    }
}

/// Index form of [`descriptive_intersection`]; inputs sorted and deduplicated.
pub fn intersection_idx(g: &Glossa, a: &[usize], b: &[usize], eta: f64) -> Vec<usize> {
    let fa = FiberIndex::new(g, a);
    let fb = FiberIndex::new(g, b);
    sorted_union(a, b)
        .into_iter()
        .filter(|&x| {
            let d = g.desc(x);
            let k = d.key();
            fa.reaches(d, &k, eta) && fb.reaches(d, &k, eta)
        })
        .collect()
}

/// Index form of [`descriptive_union`]; the config must already be validated.
pub fn union_idx(g: &Glossa, a: &[usize], b: &[usize], cfg: &UnionConfig) -> (Vec<usize>, bool) {
    let ambient = match cfg.spatial {
        Spatial::Restrictive => sorted_intersection(a, b),
        Spatial::Nonrestrictive => sorted_union(a, b),
    };
    let eta = cfg.eta;
    match &cfg.descriptive {
        Selector::Discriminatory { targets } => {
            let selected = if eta == 0.0 {
                let mut hits: Vec<usize> = targets
                    .iter()
                    .flat_map(|t| g.pi_inverse_idx(t, &ambient, 0.0))
                    .collect();
                hits.sort_unstable();
                hits.dedup();
                hits
            } else {
                ambient
                    .into_iter()
                    .filter(|&x| targets.iter().any(|t| g.desc(x).matches(t, eta)))
                    .collect()
            };
            let empty_set = cfg.spatial == Spatial::Restrictive
                && (a.is_empty() || b.is_empty())
                && targets.iter().any(|t| g.empty_desc().matches(t, eta));
            (selected, empty_set)
        }
        Selector::Nondiscriminatory => {
            let fa = FiberIndex::new(g, a);
            let fb = FiberIndex::new(g, b);
            let selected = ambient
                .into_iter()
                .filter(|&x| {
                    let d = g.desc(x);
                    let k = d.key();
                    fa.reaches(d, &k, eta) || fb.reaches(d, &k, eta)
                })
                .collect();
            (selected, false)
        }
    }
}

/// `{x ∈ A ∪ B : dist(φ(x), φ(A)) ≤ η and dist(φ(x), φ(B)) ≤ η}`.
pub fn descriptive_intersection(
    g: &Glossa,
    a: &ElementSet,
    b: &ElementSet,
    eta: f64,
) -> Result<ElementSet> {
    check_eta(eta)?;
    let a = g.resolve(a)?;
    let b = g.resolve(b)?;
    Ok(g.ids_of(&intersection_idx(g, &a, &b, eta)))
}

pub fn descriptive_union(
    g: &Glossa,
    a: &ElementSet,
    b: &ElementSet,
    cfg: &UnionConfig,
) -> Result<DescriptiveResult> {
    cfg.validate(g)?;
    let a = g.resolve(a)?;
    let b = g.resolve(b)?;
    let (selected, includes_empty_set) = union_idx(g, &a, &b, cfg);
    Ok(DescriptiveResult {
        elements: g.ids_of(&selected),
        includes_empty_set,
    })
}

pub fn injective_witness_idx(g: &Glossa, domain: &[usize]) -> Option<(usize, usize)> {
    let mut seen: HashMap<DescKey, usize> = HashMap::with_capacity(domain.len());
    for &i in domain {
        if let Some(&j) = seen.get(&g.desc(i).key()) {
            return Some((j, i));
        }
        seen.insert(g.desc(i).key(), i);
    }
    None
}

pub fn check_injective(g: &Glossa, domain: &ElementSet) -> Result<Injectivity> {
    let idx = g.resolve(domain)?;
    Ok(match injective_witness_idx(g, &idx) {
        None => Injectivity {
            injective: true,
            witness: None,
        },
        Some((i, j)) => Injectivity {
            injective: false,
            witness: Some((g.element(i).id.clone(), g.element(j).id.clone())),
        },
    })
}

/// Common surface of the indexed implementation and the naive oracle, so the
/// verification harness can run against either.
pub trait DescriptiveOps: Sync {
    fn intersection(
        &self,
        g: &Glossa,
        a: &ElementSet,
        b: &ElementSet,
        eta: f64,
    ) -> Result<ElementSet>;
    fn union(
        &self,
        g: &Glossa,
        a: &ElementSet,
        b: &ElementSet,
        cfg: &UnionConfig,
    ) -> Result<DescriptiveResult>;
}

/// The indexed implementation in this module.
#[derive(Clone, Copy, Debug, Default)]
pub struct Indexed;

impl DescriptiveOps for Indexed {
    fn intersection(
        &self,
        g: &Glossa,
        a: &ElementSet,
        b: &ElementSet,
        eta: f64,
    ) -> Result<ElementSet> {
        descriptive_intersection(g, a, b, eta)
    }

    fn union(
        &self,
        g: &Glossa,
        a: &ElementSet,
        b: &ElementSet,
        cfg: &UnionConfig,
    ) -> Result<DescriptiveResult> {
        descriptive_union(g, a, b, cfg)
    }
}
