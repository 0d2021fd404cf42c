//! Random instance generators for the verification harness.

use rand::seq::SliceRandom;
use rand::Rng;
use serde_json::json;

use crate::glossa::{Description, ElementSet, Entry, Glossa, Point};
use crate::nerve::LatticeSet;
use crate::oracle::in_hull_brute;

/// Small alphabet for description entries; collisions are the common case.
pub const ALPHABET: [f64; 4] = [0.0, 0.5, 1.0, 2.0];

/// Tolerances drawn by the suites.
pub const ETAS: [f64; 4] = [0.0, 0.5, 1.0, 60.0];

pub fn element_id(i: usize) -> String {
    format!("e{i}")
}

fn alphabet_desc<R: Rng>(rng: &mut R, dim: usize) -> Description {
    (0..dim)
        .map(|_| *ALPHABET.choose(rng).unwrap())
        .collect::<Vec<_>>()
        .into()
}

/// Carrier of 1..=max_len elements, dimension 1..=3, entries from [`ALPHABET`].
pub fn random_glossa<R: Rng>(rng: &mut R, max_len: usize) -> Glossa {
    let dim = rng.gen_range(1..=3);
    let len = rng.gen_range(1..=max_len);
    let entries = (0..len)
        .map(|i| Entry::new(element_id(i), alphabet_desc(rng, dim)))
        .collect();
    let empty = if rng.gen_bool(0.8) {
        Description::zeros(dim)
    } else {
        alphabet_desc(rng, dim)
    };
    Glossa::new(dim, empty, entries).expect("generated glossa is well formed")
}

/// Glossa whose probe function is injective on the whole carrier.
pub fn injective_glossa<R: Rng>(rng: &mut R, max_len: usize) -> Glossa {
    let dim = rng.gen_range(1..=3);
    let len = rng.gen_range(1..=max_len);
    let mut codes: Vec<u32> = (0..(64u32.pow(dim as u32)).min(4096)).collect();
    codes.shuffle(rng);
    let entries = codes[..len]
        .iter()
        .enumerate()
        .map(|(i, &c)| {
            let v: Vec<f64> = (0..dim).map(|k| ((c >> (6 * k)) & 63) as f64).collect();
            Entry::new(element_id(i), v)
        })
        .collect();
    Glossa::new(dim, Description::zeros(dim), entries).expect("generated glossa is well formed")
}

/// Random subset of the carrier; occasionally empty or the whole carrier.
pub fn random_subset<R: Rng>(rng: &mut R, g: &Glossa) -> ElementSet {
    match rng.gen_range(0..20) {
        0 => ElementSet::new(),
        1 => g.carrier(),
        _ => {
            let p = rng.gen_range(0.1..0.7);
            g.elements()
                .iter()
                .filter(|_| rng.gen_bool(p))
                .map(|e| e.id.clone())
                .collect()
        }
    }
}

pub fn nonempty_subset<R: Rng>(rng: &mut R, g: &Glossa) -> ElementSet {
    loop {
        let s = random_subset(rng, g);
        if !s.is_empty() {
            return s;
        }
        if g.is_empty() {
            return s;
        }
    }
}

/// A pair of operands; one time in ten the two are identical.
pub fn random_pair<R: Rng>(rng: &mut R, g: &Glossa) -> (ElementSet, ElementSet) {
    let a = random_subset(rng, g);
    let b = if rng.gen_bool(0.1) {
        a.clone()
    } else {
        random_subset(rng, g)
    };
    (a, b)
}

/// Target descriptions, mostly from the alphabet and sometimes off it.
pub fn random_target<R: Rng>(rng: &mut R, dim: usize) -> Description {
    if rng.gen_bool(0.15) {
        Description::from(vec![5.0; dim])
    } else {
        alphabet_desc(rng, dim)
    }
}

pub fn random_eta<R: Rng>(rng: &mut R) -> f64 {
    *ETAS.choose(rng).unwrap()
}

/// Side length of the lattice used by the convexity suite.
pub const GRID: i64 = 12;

/// `GRID × GRID` lattice glossa; element `x,y` sits at `(x, y)`.
pub fn grid_glossa<R: Rng>(rng: &mut R) -> Glossa {
    let dim = rng.gen_range(1..=2);
    let entries = (0..GRID)
        .flat_map(|y| (0..GRID).map(move |x| (x, y)))
        .map(|(x, y)| Entry::new(format!("{x},{y}"), alphabet_desc(rng, dim)).with_coords((x, y)))
        .collect();
    Glossa::new(dim, Description::zeros(dim), entries).expect("generated glossa is well formed")
}

/// Lattice points of the hull of a few random seed points: digitally convex by
/// construction.
pub fn random_convex<R: Rng>(rng: &mut R, must_contain: Option<Point>) -> LatticeSet {
    let k = rng.gen_range(1..=5);
    let (x0, y0) = (rng.gen_range(0..GRID), rng.gen_range(0..GRID));
    let span = rng.gen_range(1..=8);
    let mut seeds: LatticeSet = (0..k)
        .map(|_| {
            Point::new(
                (x0 + rng.gen_range(0..=span)).min(GRID - 1),
                (y0 + rng.gen_range(0..=span)).min(GRID - 1),
            )
        })
        .collect();
    if let Some(p) = must_contain {
        seeds.points.insert(p);
    }
    (0..GRID)
        .flat_map(|y| (0..GRID).map(move |x| Point::new(x, y)))
        .filter(|&q| in_hull_brute(&seeds, q))
        .collect()
}

pub fn lattice_ids(set: &LatticeSet) -> ElementSet {
    set.iter().map(|p| format!("{},{}", p.x, p.y)).collect()
}

pub fn instance_json(
    g: &Glossa,
    a: &ElementSet,
    b: &ElementSet,
    extra: serde_json::Value,
) -> serde_json::Value {
    json!({ "glossa": g, "a": a, "b": b, "params": extra })
}
