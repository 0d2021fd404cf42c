use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::complex::{
    downward_closure_violation, mask_to_face, normalize_faces, SimplicialComplex,
};
use crate::error::{Error, Result};
use crate::glossa::{check_eta, sorted_union, DescKey, ElementSet, Glossa};
use crate::setops::FiberIndex;

/// Largest collection accepted by [`descriptive_nerve`]; every one of the `2ⁿ − 1`
/// subcollections is examined.
pub const MAX_NERVE_MEMBERS: usize = 20;

/// An ordered collection `U₁..Uₙ` of subsets of one glossa.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Collection {
    pub members: Vec<ElementSet>,
}

impl Collection {
    pub fn new(members: Vec<ElementSet>) -> Self {
        Collection { members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// `{x ∈ ⋃ Uᵢ : dist(φ(x), φ(Uᵢ)) ≤ η for every i}`; sorted index inputs.
pub fn kwise_intersection_idx(g: &Glossa, members: &[Vec<usize>], eta: f64) -> Vec<usize> {
    let fibers: Vec<FiberIndex<'_>> = members.iter().map(|m| FiberIndex::new(g, m)).collect();
    let ambient = members
        .iter()
        .fold(Vec::new(), |acc, m| sorted_union(&acc, m));
    ambient
        .into_iter()
        .filter(|&x| {
            let d = g.desc(x);
            let k = d.key();
            fibers.iter().all(|f| f.reaches(d, &k, eta))
        })
        .collect()
}

pub fn kwise_descriptive_intersection(
    g: &Glossa,
    members: &[ElementSet],
    eta: f64,
) -> Result<ElementSet> {
    if members.is_empty() {
        return Err(Error::EmptyCollection);
    }
    check_eta(eta)?;
    let idx = members
        .iter()
        .map(|m| g.resolve(m))
        .collect::<Result<Vec<_>>>()?;
    Ok(g.ids_of(&kwise_intersection_idx(g, &idx, eta)))
}

/// Subcollections (as 1-based vertex lists) with a nonempty k-wise descriptive
/// intersection. No closure check.
pub fn nerve_faces(g: &Glossa, coll: &Collection, eta: f64) -> Result<Vec<Vec<usize>>> {
    let n = coll.len();
    if n > MAX_NERVE_MEMBERS {
        return Err(Error::CollectionTooLarge {
            found: n,
            max: MAX_NERVE_MEMBERS,
        });
    }
    check_eta(eta)?;
    let members = coll
        .members
        .iter()
        .map(|m| g.resolve(m))
        .collect::<Result<Vec<_>>>()?;
    let full = 1usize << n;
    let mut faces = Vec::new();

    if eta == 0.0 {
        // common[mask] = ⋂ φ(Uᵢ) over i ∈ mask, built from mask minus its lowest bit
        let keys: Vec<HashSet<DescKey>> = members
            .iter()
            .map(|m| {
                if m.is_empty() {
                    HashSet::from([g.empty_desc().key()])
                } else {
                    m.iter().map(|&i| g.desc(i).key()).collect()
                }
            })
            .collect();
        let mut common: Vec<Option<HashSet<DescKey>>> = vec![None; full];
        for mask in 1..full {
            let low = mask.trailing_zeros() as usize;
            let rest = mask & (mask - 1);
            let set = if rest == 0 {
                keys[low].clone()
            } else {
                let prev = common[rest].as_ref().expect("smaller mask computed first");
                prev.intersection(&keys[low]).cloned().collect()
            };
            // a common description is realized by an element once any member is nonempty
            let realized = (0..n).any(|i| mask & (1 << i) != 0 && !members[i].is_empty());
            if !set.is_empty() && realized {
                faces.push(mask_to_face(mask as u64, n));
            }
            common[mask] = Some(set);
        }
    } else {
        for mask in 1..full {
            let chosen: Vec<Vec<usize>> = (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| members[i].clone())
                .collect();
            if !kwise_intersection_idx(g, &chosen, eta).is_empty() {
                faces.push(mask_to_face(mask as u64, n));
            }
        }
    }
    Ok(normalize_faces(faces))
}

/// The descriptive nerve of a collection.
///
/// At `η = 0` with nonempty members the result is always a simplicial complex: a
/// description shared by every member of a face is shared by every member of each
/// subface. Tolerance matching is not transitive, so for `η > 0` (or empty members)
/// the face family can fail to be downward closed; that case is reported as
/// [`Error::NotDownwardClosed`].
pub fn descriptive_nerve(g: &Glossa, coll: &Collection, eta: f64) -> Result<SimplicialComplex> {
    let faces = nerve_faces(g, coll, eta)?;
    if let Some((face, missing)) = downward_closure_violation(&faces) {
        return Err(Error::NotDownwardClosed { face, missing });
    }
    SimplicialComplex::new(coll.len(), faces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glossa::fixtures::{four_balls, set};
    use crate::setops::descriptive_intersection;

    #[test]
    fn kwise_examples() {
        let g = four_balls();
        let r = kwise_descriptive_intersection(&g, &[set(&["B1", "B2"]), set(&["B3", "B4"])], 0.0)
            .unwrap();
        assert_eq!(r, set(&["B1", "B3"]));
        assert_eq!(
            r,
            descriptive_intersection(&g, &set(&["B1", "B2"]), &set(&["B3", "B4"]), 0.0).unwrap()
        );
        assert_eq!(
            kwise_descriptive_intersection(&g, &[set(&["B1"])], 0.0).unwrap(),
            set(&["B1"])
        );
        assert!(kwise_descriptive_intersection(
            &g,
            &[set(&["B1"]), set(&["B2"]), set(&["B4"])],
            0.0
        )
        .unwrap()
        .is_empty());
        assert!(matches!(
            kwise_descriptive_intersection(&g, &[], 0.0),
            Err(Error::EmptyCollection)
        ));
    }

    #[test]
    fn nerve_examples() {
        let g = four_balls();
        let coll = Collection::new(vec![set(&["B1"]), set(&["B3"]), set(&["B2"])]);
        let k = descriptive_nerve(&g, &coll, 0.0).unwrap();
        assert_eq!(k.faces(), &[vec![1], vec![2], vec![3], vec![1, 2]]);

        let k = descriptive_nerve(&g, &Collection::new(vec![set(&["B1"])]), 0.0).unwrap();
        assert_eq!(k.faces(), &[vec![1]]);

        let mono =
            Glossa::from_pairs([("a", [4.0]), ("b", [4.0]), ("c", [4.0])], 1, [0.0]).unwrap();
        let coll = Collection::new(vec![set(&["a"]), set(&["b", "c"]), set(&["c"])]);
        assert_eq!(
            descriptive_nerve(&mono, &coll, 0.0).unwrap(),
            SimplicialComplex::full_simplex(3)
        );
    }

    #[test]
    fn tolerance_nerve_can_be_open() {
        // 0 ~ 1 ~ 2 at η = 1, but nothing in {U₂, U₃} is within 1 of both 0 and 2 without U₁
        let g = Glossa::from_pairs([("a", [1.0]), ("b", [0.0]), ("c", [2.0])], 1, [9.0]).unwrap();
        let coll = Collection::new(vec![set(&["a"]), set(&["b"]), set(&["c"])]);
        let faces = nerve_faces(&g, &coll, 1.0).unwrap();
        assert!(faces.contains(&vec![1, 2, 3]));
        assert!(!faces.contains(&vec![2, 3]));
        assert!(matches!(
            descriptive_nerve(&g, &coll, 1.0),
            Err(Error::NotDownwardClosed { .. })
        ));
    }

    #[test]
    fn too_many_members() {
        let g = four_balls();
        let coll = Collection::new(vec![set(&["B1"]); MAX_NERVE_MEMBERS + 1]);
        assert!(matches!(
            descriptive_nerve(&g, &coll, 0.0),
            Err(Error::CollectionTooLarge { .. })
        ));
    }
}
