//! Naive evaluator for the descriptive operations.
//!
//! Evaluates the set-builder definitions with nested loops over ids: no hash indexes,
//! no fiber deduplication, no sorted merges. Quadratic and slow; use it to check the
//! indexed path in [`crate::setops`], never in production code.

use crate::error::{Error, Result};
use crate::glossa::{Description, ElementSet, Glossa, Point};
use crate::nerve::LatticeSet;
use crate::setops::{DescriptiveOps, DescriptiveResult, Selector, Spatial, UnionConfig};

#[derive(Clone, Debug, PartialEq)]
pub enum OpKind {
    Intersection { eta: f64 },
    Union(UnionConfig),
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Naive;

fn member(set: &ElementSet, id: &str) -> bool {
    set.iter().any(|s| s == id)
}

fn check_ids(g: &Glossa, set: &ElementSet) -> Result<()> {
    for id in set.iter() {
        if !g.elements().iter().any(|e| e.id == id) {
            return Err(Error::UnknownElement(id.to_owned()));
        }
    }
    Ok(())
}

fn desc_of<'g>(g: &'g Glossa, id: &str) -> &'g Description {
    let pos = g
        .elements()
        .iter()
        .position(|e| e.id == id)
        .expect("checked id");
    g.desc(pos)
}

/// All descriptions of `set`, duplicates kept; `{φ(∅)}` for the empty set.
fn raw_fiber<'g>(g: &'g Glossa, set: &ElementSet) -> Vec<&'g Description> {
    if set.is_empty() {
        vec![g.empty_desc()]
    } else {
        set.iter().map(|id| desc_of(g, id)).collect()
    }
}

fn near(d: &Description, fiber: &[&Description], eta: f64) -> bool {
    fiber.iter().any(|m| d.matches(m, eta))
}

pub fn oracle_descriptive_op(
    g: &Glossa,
    a: &ElementSet,
    b: &ElementSet,
    op: &OpKind,
) -> Result<DescriptiveResult> {
    check_ids(g, a)?;
    check_ids(g, b)?;
    let fa = raw_fiber(g, a);
    let fb = raw_fiber(g, b);
    let mut out = DescriptiveResult::default();

    match op {
        OpKind::Intersection { eta } => {
            let eta = *eta;
            if !(eta.is_finite() && eta >= 0.0) {
                return Err(Error::InvalidTolerance(eta));
            }
            for e in g.elements() {
                let x = e.id.as_str();
                if !(member(a, x) || member(b, x)) {
                    continue;
                }
                let d = desc_of(g, x);
                if near(d, &fa, eta) && near(d, &fb, eta) {
                    out.elements.insert(x);
                }
            }
        }
        OpKind::Union(cfg) => {
            cfg.validate(g)?;
            let eta = cfg.eta;
            for e in g.elements() {
                let x = e.id.as_str();
                let in_ambient = match cfg.spatial {
                    Spatial::Restrictive => member(a, x) && member(b, x),
                    Spatial::Nonrestrictive => member(a, x) || member(b, x),
                };
                if !in_ambient {
                    continue;
                }
                let d = desc_of(g, x);
                let keep = match &cfg.descriptive {
                    Selector::Discriminatory { targets } => {
                        targets.iter().any(|t| d.matches(t, eta))
                    }
                    Selector::Nondiscriminatory => near(d, &fa, eta) || near(d, &fb, eta),
                };
                if keep {
                    out.elements.insert(x);
                }
            }
            if let (Spatial::Restrictive, Selector::Discriminatory { targets }) =
                (cfg.spatial, &cfg.descriptive)
            {
                out.includes_empty_set = (a.is_empty() || b.is_empty())
                    && targets.iter().any(|t| g.empty_desc().matches(t, eta));
            }
        }
    }
    Ok(out)
}

/// Naive k-wise descriptive intersection.
pub fn oracle_kwise(g: &Glossa, members: &[ElementSet], eta: f64) -> Result<ElementSet> {
    if members.is_empty() {
        return Err(Error::EmptyCollection);
    }
    for m in members {
        check_ids(g, m)?;
    }
    let fibers: Vec<Vec<&Description>> = members.iter().map(|m| raw_fiber(g, m)).collect();
    let mut out = ElementSet::new();
    for e in g.elements() {
        let x = e.id.as_str();
        if !members.iter().any(|m| member(m, x)) {
            continue;
        }
        let d = desc_of(g, x);
        if fibers.iter().all(|f| near(d, f, eta)) {
            out.insert(x);
        }
    }
    Ok(out)
}

/// Whether `q` lies in the convex hull of `points`, decided without building a hull:
/// `q` is outside exactly when every vector `p − q` lies in one open half-plane, i.e.
/// some vector has all others strictly to its left or pointing the same way.
pub fn in_hull_brute(points: &LatticeSet, q: Point) -> bool {
    if points.contains(q) {
        return true;
    }
    let vs: Vec<(i128, i128)> = points
        .iter()
        .map(|p| (p.x as i128 - q.x as i128, p.y as i128 - q.y as i128))
        .collect();
    if vs.is_empty() {
        return false;
    }
    let separated = vs.iter().any(|&(ux, uy)| {
        vs.iter().all(|&(wx, wy)| {
            let c = ux * wy - uy * wx;
            c > 0 || (c == 0 && ux * wx + uy * wy > 0)
        })
    });
    !separated
}

/// Digital convexity by scanning every lattice point of the bounding box.
pub fn brute_force_digitally_convex(points: &LatticeSet) -> bool {
    let Some((lo, hi)) = points.bounds() else {
        return true;
    };
    (lo.y..=hi.y).all(|y| {
        (lo.x..=hi.x).all(|x| {
            let q = Point::new(x, y);
            points.contains(q) || !in_hull_brute(points, q)
        })
    })
}

impl DescriptiveOps for Naive {
    fn intersection(
        &self,
        g: &Glossa,
        a: &ElementSet,
        b: &ElementSet,
        eta: f64,
    ) -> Result<ElementSet> {
        oracle_descriptive_op(g, a, b, &OpKind::Intersection { eta }).map(|r| r.elements)
    }

    fn union(
        &self,
        g: &Glossa,
        a: &ElementSet,
        b: &ElementSet,
        cfg: &UnionConfig,
    ) -> Result<DescriptiveResult> {
        oracle_descriptive_op(g, a, b, &OpKind::Union(cfg.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glossa::fixtures::{four_balls, set};
    use crate::setops::{descriptive_intersection, descriptive_union};

    #[test]
    fn mirrors_fast_path_examples() {
        let g = four_balls();
        let (a, b) = (set(&["B1", "B2"]), set(&["B3", "B4"]));
        let r = oracle_descriptive_op(&g, &a, &b, &OpKind::Intersection { eta: 0.0 }).unwrap();
        assert_eq!(
            r.elements,
            descriptive_intersection(&g, &a, &b, 0.0).unwrap()
        );
        assert_eq!(r.elements, set(&["B1", "B3"]));

        let (a, b) = (set(&["B1", "B2", "B3"]), set(&["B2", "B3", "B4"]));
        let cfg = UnionConfig::discriminatory(
            Spatial::Restrictive,
            vec![[1.0].into(), [2.0].into()],
            0.0,
        );
        let r = oracle_descriptive_op(&g, &a, &b, &OpKind::Union(cfg.clone())).unwrap();
        assert_eq!(r, descriptive_union(&g, &a, &b, &cfg).unwrap());
    }

    #[test]
    fn empty_glossa() {
        let g = Glossa::from_pairs(Vec::<(&str, [f64; 2])>::new(), 2, [0.0, 0.0]).unwrap();
        let e = ElementSet::new();
        let r = oracle_descriptive_op(&g, &e, &e, &OpKind::Intersection { eta: 0.0 }).unwrap();
        assert_eq!(r, DescriptiveResult::default());
        let cfg = UnionConfig::nondiscriminatory(Spatial::Nonrestrictive, 1.0);
        assert_eq!(
            oracle_descriptive_op(&g, &e, &e, &OpKind::Union(cfg)).unwrap(),
            DescriptiveResult::default()
        );
    }

    #[test]
    fn brute_force_convexity() {
        let seg: LatticeSet = [(0, 0), (1, 0), (2, 0)].into_iter().collect();
        assert!(brute_force_digitally_convex(&seg));
        let gap: LatticeSet = [(0, 0), (2, 0)].into_iter().collect();
        assert!(!brute_force_digitally_convex(&gap));
        assert!(brute_force_digitally_convex(&LatticeSet::default()));
        let tri: LatticeSet = [(0, 0), (2, 0), (0, 2)].into_iter().collect();
        assert!(in_hull_brute(&tri, Point::new(1, 1)));
        assert!(!in_hull_brute(&tri, Point::new(2, 1)));
    }

    #[test]
    fn rejects_foreign_ids() {
        let g = four_balls();
        assert!(oracle_descriptive_op(
            &g,
            &set(&["X"]),
            &set(&[]),
            &OpKind::Intersection { eta: 0.0 }
        )
        .is_err());
    }
}
