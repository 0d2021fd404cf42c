//! Convexity of descriptive unions of digitally convex lattice sets.

use serde::{Deserialize, Serialize};

use super::complex::{normalize_faces, SimplicialComplex};
use super::descriptive::{nerve_faces, Collection};
use super::hull::{is_digitally_convex, LatticeSet};
use crate::error::{Error, Result};
use crate::glossa::{
    check_eta, sorted_intersection, sorted_union, Description, ElementSet, Glossa,
};
use crate::setops::{union_idx, Spatial, UnionConfig};

/// Lattice positions of the given elements.
pub fn lattice_of_idx(g: &Glossa, idx: &[usize]) -> Result<LatticeSet> {
    idx.iter()
        .map(|&i| {
            let e = g.element(i);
            e.coords.ok_or_else(|| Error::MissingCoords(e.id.clone()))
        })
        .collect()
}

pub fn lattice_of(g: &Glossa, set: &ElementSet) -> Result<LatticeSet> {
    lattice_of_idx(g, &g.resolve(set)?)
}

/// Both sides of one biconditional, plus whether the underlying sets coincide.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Equivalence {
    pub lhs_convex: bool,
    pub rhs_convex: bool,
    pub sets_equal: bool,
    pub holds: bool,
}

impl Equivalence {
    fn new(g: &Glossa, lhs: &[usize], rhs: &[usize]) -> Result<Self> {
        let lhs_convex = is_digitally_convex(&lattice_of_idx(g, lhs)?);
        let rhs_convex = is_digitally_convex(&lattice_of_idx(g, rhs)?);
        Ok(Equivalence {
            lhs_convex,
            rhs_convex,
            sets_equal: lhs == rhs,
            holds: lhs_convex == rhs_convex,
        })
    }
}

/// The four convexity properties of descriptive unions of two convex sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvexityReport {
    /// `π̃(targets)` over `A ∩ B` vs. the restrictive discriminatory union.
    pub restricted_targets: Equivalence,
    /// `π̂(targets)` over `A ∪ B` vs. the nonrestrictive discriminatory union.
    pub unrestricted_targets: Equivalence,
    /// Restrictive nondiscriminatory union is convex.
    pub restricted_union_convex: bool,
    /// `A ∪ B` vs. the nonrestrictive nondiscriminatory union.
    pub plain_union: Equivalence,
}

impl ConvexityReport {
    pub fn all_hold(&self) -> bool {
        self.restricted_targets.holds
            && self.unrestricted_targets.holds
            && self.restricted_union_convex
            && self.plain_union.holds
    }
}

/// Evaluates the four convexity properties for digitally convex `a` and `b`.
pub fn check_convexity_theorem(
    g: &Glossa,
    a: &ElementSet,
    b: &ElementSet,
    targets: &[Description],
    eta: f64,
) -> Result<ConvexityReport> {
    check_eta(eta)?;
    if targets.is_empty() {
        return Err(Error::EmptyTargets);
    }
    for t in targets {
        g.check_dim("target", t)?;
    }
    let ai = g.resolve(a)?;
    let bi = g.resolve(b)?;
    if !is_digitally_convex(&lattice_of_idx(g, &ai)?) {
        return Err(Error::NotDigitallyConvex("operand A".into()));
    }
    if !is_digitally_convex(&lattice_of_idx(g, &bi)?) {
        return Err(Error::NotDigitallyConvex("operand B".into()));
    }

    let meet = sorted_intersection(&ai, &bi);
    let join = sorted_union(&ai, &bi);
    let pi_union = |domain: &[usize]| {
        let mut out: Vec<usize> = targets
            .iter()
            .flat_map(|t| g.pi_inverse_idx(t, domain, eta))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    };
    let run = |cfg: UnionConfig| union_idx(g, &ai, &bi, &cfg).0;

    let rd = run(UnionConfig::discriminatory(
        Spatial::Restrictive,
        targets.to_vec(),
        eta,
    ));
    let nd = run(UnionConfig::discriminatory(
        Spatial::Nonrestrictive,
        targets.to_vec(),
        eta,
    ));
    let rn = run(UnionConfig::nondiscriminatory(Spatial::Restrictive, eta));
    let nn = run(UnionConfig::nondiscriminatory(Spatial::Nonrestrictive, eta));

    Ok(ConvexityReport {
        restricted_targets: Equivalence::new(g, &pi_union(&meet), &rd)?,
        unrestricted_targets: Equivalence::new(g, &pi_union(&join), &nd)?,
        restricted_union_convex: is_digitally_convex(&lattice_of_idx(g, &rn)?),
        plain_union: Equivalence::new(g, &join, &nn)?,
    })
}

/// Which member unions must be convex for a complex to be union representable.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UnionMode {
    /// Every pair `Uᵢ, Uⱼ` with `i < j` (a lone member is paired with itself).
    #[default]
    Pairwise,
    /// The left fold of the configured union over all members.
    Total,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentabilityReport {
    pub nerve_matches: bool,
    pub unions_convex: bool,
    pub representable: bool,
    /// Faces of the descriptive nerve that are absent from the complex.
    pub missing_faces: Vec<Vec<usize>>,
    /// Faces of the complex that are absent from the descriptive nerve.
    pub extra_faces: Vec<Vec<usize>>,
    /// 1-based members whose union failed to be convex.
    pub non_convex_union: Option<Vec<usize>>,
}

pub fn check_d_convex_union_representable(
    k: &SimplicialComplex,
    g: &Glossa,
    coll: &Collection,
    cfg: &UnionConfig,
    mode: UnionMode,
) -> Result<RepresentabilityReport> {
    cfg.validate(g)?;
    let members = coll
        .members
        .iter()
        .map(|m| g.resolve(m))
        .collect::<Result<Vec<_>>>()?;
    for (i, m) in members.iter().enumerate() {
        if !is_digitally_convex(&lattice_of_idx(g, m)?) {
            return Err(Error::NotDigitallyConvex(format!(
                "collection member {}",
                i + 1
            )));
        }
    }

    let nerve = nerve_faces(g, coll, cfg.eta)?;
    let expected = normalize_faces(k.faces().to_vec());
    let missing_faces: Vec<Vec<usize>> = nerve
        .iter()
        .filter(|f| !expected.contains(f))
        .cloned()
        .collect();
    let extra_faces: Vec<Vec<usize>> = expected
        .iter()
        .filter(|f| !nerve.contains(f))
        .cloned()
        .collect();
    let nerve_matches = k.n() == coll.len() && missing_faces.is_empty() && extra_faces.is_empty();

    let mut non_convex_union = None;
    match mode {
        UnionMode::Pairwise => {
            let n = members.len();
            let pairs: Vec<(usize, usize)> = if n == 1 {
                vec![(0, 0)]
            } else {
                (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .collect()
            };
            for (i, j) in pairs {
                let (u, _) = union_idx(g, &members[i], &members[j], cfg);
                if !is_digitally_convex(&lattice_of_idx(g, &u)?) {
                    non_convex_union = Some(if i == j {
                        vec![i + 1]
                    } else {
                        vec![i + 1, j + 1]
                    });
                    break;
                }
            }
        }
        UnionMode::Total => {
            if let Some((first, rest)) = members.split_first() {
                let total = if rest.is_empty() {
                    union_idx(g, first, first, cfg).0
                } else {
                    rest.iter()
                        .fold(first.clone(), |acc, m| union_idx(g, &acc, m, cfg).0)
                };
                if !is_digitally_convex(&lattice_of_idx(g, &total)?) {
                    non_convex_union = Some((1..=members.len()).collect());
                }
            }
        }
    }
    let unions_convex = non_convex_union.is_none();

    Ok(RepresentabilityReport {
        nerve_matches,
        unions_convex,
        representable: nerve_matches && unions_convex,
        missing_faces,
        extra_faces,
        non_convex_union,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glossa::Entry;

    /// Grid glossa over `[0, w) × [0, h)` with descriptions from `colour(x, y)`.
    fn grid(w: i64, h: i64, colour: impl Fn(i64, i64) -> f64) -> Glossa {
        let entries = (0..h)
            .flat_map(|y| (0..w).map(move |x| (x, y)))
            .map(|(x, y)| Entry::new(format!("{x},{y}"), [colour(x, y)]).with_coords((x, y)))
            .collect();
        Glossa::new(1, [0.0].into(), entries).unwrap()
    }

    fn rect(x0: i64, y0: i64, x1: i64, y1: i64) -> ElementSet {
        (y0..=y1)
            .flat_map(|y| (x0..=x1).map(move |x| format!("{x},{y}")))
            .collect()
    }

    #[test]
    fn overlapping_rectangles() {
        let g = grid(8, 8, |x, _| if x < 4 { 1.0 } else { 2.0 });
        let r = check_convexity_theorem(
            &g,
            &rect(0, 0, 4, 4),
            &rect(2, 2, 6, 6),
            &[[1.0].into()],
            0.0,
        )
        .unwrap();
        assert!(r.restricted_union_convex);
        assert!(r.all_hold());
        assert!(
            r.restricted_targets.sets_equal
                && r.unrestricted_targets.sets_equal
                && r.plain_union.sets_equal
        );
        // A ∪ B is an L-ish union of two squares, not convex
        assert!(!r.plain_union.lhs_convex);
    }

    #[test]
    fn identical_operands_all_true() {
        let g = grid(5, 5, |x, y| ((x + y) % 3) as f64);
        let a = rect(1, 1, 3, 3);
        let targets: Vec<Description> = (0..3).map(|v| [v as f64].into()).collect();
        let r = check_convexity_theorem(&g, &a, &a, &targets, 0.0).unwrap();
        for e in [
            &r.restricted_targets,
            &r.unrestricted_targets,
            &r.plain_union,
        ] {
            assert!(e.lhs_convex && e.rhs_convex && e.holds && e.sets_equal);
        }
        assert!(r.restricted_union_convex);
    }

    #[test]
    fn disjoint_rectangles() {
        let g = grid(10, 3, |_, _| 1.0);
        let r = check_convexity_theorem(
            &g,
            &rect(0, 0, 1, 1),
            &rect(5, 0, 6, 1),
            &[[1.0].into()],
            0.0,
        )
        .unwrap();
        assert!(!r.plain_union.lhs_convex && !r.plain_union.rhs_convex && r.plain_union.holds);
    }

    #[test]
    fn preconditions() {
        let g = grid(4, 4, |_, _| 1.0);
        let ring: ElementSet = rect(0, 0, 2, 2).iter().filter(|id| *id != "1,1").collect();
        assert!(matches!(
            check_convexity_theorem(&g, &ring, &rect(0, 0, 1, 1), &[[1.0].into()], 0.0),
            Err(Error::NotDigitallyConvex(ref w)) if w == "operand A"
        ));
        let gap: ElementSet = ["0,0", "2,0"].into_iter().collect();
        assert!(matches!(
            check_convexity_theorem(&g, &rect(0, 0, 1, 1), &gap, &[[1.0].into()], 0.0),
            Err(Error::NotDigitallyConvex(ref w)) if w == "operand B"
        ));
        let bare = Glossa::from_pairs([("p", [1.0])], 1, [0.0]).unwrap();
        let p: ElementSet = ["p"].into_iter().collect();
        assert!(matches!(
            check_convexity_theorem(&bare, &p, &p, &[[1.0].into()], 0.0),
            Err(Error::MissingCoords(_))
        ));
    }

    #[test]
    fn representability() {
        let g = grid(4, 2, |_, _| 7.0);
        let coll = Collection::new(vec![rect(0, 0, 1, 1), rect(1, 0, 2, 1)]);
        let k = SimplicialComplex::full_simplex(2);
        let cfg = UnionConfig::nondiscriminatory(Spatial::Nonrestrictive, 0.0);
        let r =
            check_d_convex_union_representable(&k, &g, &coll, &cfg, UnionMode::Pairwise).unwrap();
        assert!(r.nerve_matches && r.unions_convex && r.representable);

        let k = SimplicialComplex::new(2, vec![vec![1], vec![2]]).unwrap();
        let r =
            check_d_convex_union_representable(&k, &g, &coll, &cfg, UnionMode::Pairwise).unwrap();
        assert!(!r.nerve_matches);
        assert_eq!(r.missing_faces, vec![vec![1, 2]]);

        let apart = Collection::new(vec![rect(0, 0, 0, 0), rect(3, 0, 3, 0)]);
        let k = SimplicialComplex::full_simplex(2);
        let r = check_d_convex_union_representable(&k, &g, &apart, &cfg, UnionMode::Total).unwrap();
        assert!(r.nerve_matches);
        assert!(!r.unions_convex);
        assert_eq!(r.non_convex_union, Some(vec![1, 2]));

        let bad = Collection::new(vec![rect(0, 0, 0, 0), ["0,0", "2,0"].into_iter().collect()]);
        assert!(matches!(
            check_d_convex_union_representable(&k, &g, &bad, &cfg, UnionMode::Pairwise),
            Err(Error::NotDigitallyConvex(ref w)) if w == "collection member 2"
        ));
    }
}
