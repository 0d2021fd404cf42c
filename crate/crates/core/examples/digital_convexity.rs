// Digital convexity of lattice sets and the convexity report for two overlapping
// rectangles on a coloured grid.

use desops::nerve::convex_hull_2d;
use desops::{check_convexity_theorem, is_digitally_convex, ElementSet, Entry, Glossa, LatticeSet};

fn rect(x0: i64, y0: i64, x1: i64, y1: i64) -> ElementSet {
    (y0..=y1)
        .flat_map(|y| (x0..=x1).map(move |x| format!("{x},{y}")))
        .collect()
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let segment: LatticeSet = [(0, 0), (1, 0), (2, 0)].into_iter().collect();
    let gapped: LatticeSet = [(0, 0), (2, 0)].into_iter().collect();
    println!("hull of segment: {:?}", convex_hull_2d(&segment)?);
    assert!(is_digitally_convex(&segment));
    assert!(!is_digitally_convex(&gapped));

    // left half colour 1, right half colour 2
    let entries = (0..8)
        .flat_map(|y| (0..8).map(move |x| (x, y)))
        .map(|(x, y)| {
            Entry::new(format!("{x},{y}"), [if x < 4 { 1.0 } else { 2.0 }]).with_coords((x, y))
        })
        .collect();
    let g = Glossa::new(1, [0.0].into(), entries)?;
    let report = check_convexity_theorem(
        &g,
        &rect(0, 0, 4, 4),
        &rect(2, 2, 6, 6),
        &[[1.0].into()],
        0.0,
    )?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    assert!(report.restricted_union_convex);
    assert!(report.all_hold());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
