use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A downward-closed family of nonempty vertex sets over vertices `1..=n`.
///
/// Faces are kept sorted by size, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ComplexFile", into = "ComplexFile")]
pub struct SimplicialComplex {
    n: usize,
    faces: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct ComplexFile {
    n: usize,
    faces: Vec<Vec<usize>>,
}

impl TryFrom<ComplexFile> for SimplicialComplex {
    type Error = Error;

    fn try_from(f: ComplexFile) -> Result<Self> {
        SimplicialComplex::new(f.n, f.faces)
    }
}

impl From<SimplicialComplex> for ComplexFile {
    fn from(k: SimplicialComplex) -> Self {
        ComplexFile {
            n: k.n,
            faces: k.faces,
        }
    }
}

pub(crate) fn normalize_faces(faces: impl IntoIterator<Item = Vec<usize>>) -> Vec<Vec<usize>> {
    let set: BTreeSet<Vec<usize>> = faces
        .into_iter()
        .map(|mut f| {
            f.sort_unstable();
            f.dedup();
            f
        })
        .collect();
    let mut faces: Vec<Vec<usize>> = set.into_iter().collect();
    faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    faces
}

/// First face with a missing codimension-one subface, if any. Faces must be normalized.
pub fn downward_closure_violation(faces: &[Vec<usize>]) -> Option<(Vec<usize>, Vec<usize>)> {
    let present: BTreeSet<&Vec<usize>> = faces.iter().collect();
    for face in faces.iter().filter(|f| f.len() > 1) {
        for skip in 0..face.len() {
            let sub: Vec<usize> = face
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &v)| v)
                .collect();
            if !present.contains(&sub) {
                return Some((face.clone(), sub));
            }
        }
    }
    None
}

impl SimplicialComplex {
    pub fn new(n: usize, faces: Vec<Vec<usize>>) -> Result<Self> {
        for f in &faces {
            if f.is_empty() || f.iter().any(|&v| v == 0 || v > n) {
                return Err(Error::VertexOutOfRange(f.clone(), n));
            }
        }
        let faces = normalize_faces(faces);
        if let Some((face, missing)) = downward_closure_violation(&faces) {
            return Err(Error::NotDownwardClosed { face, missing });
        }
        Ok(SimplicialComplex { n, faces })
    }

    /// Every nonempty subset of `1..=n`.
    pub fn full_simplex(n: usize) -> Self {
        let faces: Vec<Vec<usize>> = (1u64..(1u64 << n))
            .map(|mask| mask_to_face(mask, n))
            .collect();
        SimplicialComplex {
            n,
            faces: normalize_faces(faces),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        let mut f = face.to_vec();
        f.sort_unstable();
        f.dedup();
        self.faces
            .binary_search_by(|g| g.len().cmp(&f.len()).then_with(|| g.cmp(&f)))
            .is_ok()
    }

    pub fn dimension(&self) -> Option<usize> {
        self.faces.last().map(|f| f.len() - 1)
    }
}

/// 1-based vertex list of a bit mask over `n` members.
pub(crate) fn mask_to_face(mask: u64, n: usize) -> Vec<usize> {
    (0..n)
        .filter(|i| mask & (1 << i) != 0)
        .map(|i| i + 1)
        .collect()
}
