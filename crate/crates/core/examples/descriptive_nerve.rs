// Descriptive nerve of a small collection and its k-wise intersections.

use desops::{descriptive_nerve, kwise_descriptive_intersection, Collection, ElementSet, Glossa};

fn set(ids: &[&str]) -> ElementSet {
    ids.iter().copied().collect()
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = Glossa::from_pairs(
        [("B1", [1.0]), ("B2", [2.0]), ("B3", [1.0]), ("B4", [3.0])],
        1,
        [0.0],
    )?;
    let coll = Collection::new(vec![set(&["B1"]), set(&["B3"]), set(&["B2"])]);

    let k = descriptive_nerve(&g, &coll, 0.0)?;
    println!("nerve: {}", serde_json::to_string(&k)?);
    assert_eq!(k.faces(), &[vec![1], vec![2], vec![3], vec![1, 2]]);
    println!("dimension {:?}", k.dimension());

    let three =
        kwise_descriptive_intersection(&g, &[set(&["B1"]), set(&["B2"]), set(&["B4"])], 0.0)?;
    assert!(three.is_empty());
    let wide =
        kwise_descriptive_intersection(&g, &[set(&["B1"]), set(&["B2"]), set(&["B4"])], 2.0)?;
    println!("k-wise at η = 2: {:?}", wide.ids);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
