// The four descriptive unions on one pair of sets, plus their JSON configuration.

use desops::{descriptive_union, Description, ElementSet, Glossa, UnionConfig, Variant};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = Glossa::from_pairs(
        [
            ("B1", [1.0]),
            ("B2", [2.0]),
            ("B3", [1.0]),
            ("B4", [3.0]),
            ("B5", [2.0]),
        ],
        1,
        [0.0],
    )?;
    let a: ElementSet = ["B1", "B2", "B5"].into_iter().collect();
    let b: ElementSet = ["B3", "B4", "B5"].into_iter().collect();
    let targets: Vec<Description> = vec![[1.0].into(), [2.0].into()];

    for v in Variant::ALL {
        let r = descriptive_union(&g, &a, &b, &v.config(&targets, 0.0))?;
        println!("{:<34} {:?}", v.name(), r.elements.ids);
    }

    // restrictive unions live inside A ∩ B, nonrestrictive ones inside A ∪ B
    let rd = descriptive_union(
        &g,
        &a,
        &b,
        &Variant::RestrictiveDiscriminatory.config(&targets, 0.0),
    )?;
    assert_eq!(rd.elements, ["B5"].into_iter().collect());
    let nd = descriptive_union(
        &g,
        &a,
        &b,
        &Variant::NonrestrictiveDiscriminatory.config(&targets, 0.0),
    )?;
    assert_eq!(nd.elements, ["B1", "B2", "B3", "B5"].into_iter().collect());

    let cfg: UnionConfig = serde_json::from_str(
        r#"{"spatial":"nonrestrictive","descriptive":{"targets":[[3.0]]},"eta":0.0}"#,
    )?;
    let r = descriptive_union(&g, &a, &b, &cfg)?;
    println!("from JSON config: {}", serde_json::to_string(&r)?);
    assert_eq!(r.elements, ["B4"].into_iter().collect());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
