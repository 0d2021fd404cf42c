// Tolerance forms of the operations on RGB descriptions: widening η only grows the
// result, and the nondiscriminatory unions collapse to A ∩ B and A ∪ B.

use desops::{descriptive_intersection, descriptive_union, ElementSet, Glossa, Variant};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = Glossa::from_pairs(
        [
            ("skin", [254.0, 224.0, 198.0]),
            ("skin-ish", [240.0, 210.0, 180.0]),
            ("red", [208.0, 35.0, 37.0]),
            ("blue", [20.0, 40.0, 220.0]),
        ],
        3,
        [0.0, 0.0, 0.0],
    )?;
    let a: ElementSet = ["skin", "red"].into_iter().collect();
    let b: ElementSet = ["skin-ish", "blue"].into_iter().collect();
    let targets = vec![[254.0, 224.0, 198.0].into()];

    let mut previous = ElementSet::new();
    for eta in [0.0, 10.0, 30.0, 60.0, 400.0] {
        let meet = descriptive_intersection(&g, &a, &b, eta)?;
        let nd = descriptive_union(
            &g,
            &a,
            &b,
            &Variant::NonrestrictiveDiscriminatory.config(&targets, eta),
        )?;
        println!(
            "η = {eta:>5}: ⋂ = {:?}, targeted union = {:?}",
            meet.ids, nd.elements.ids
        );
        assert!(previous.is_subset(&nd.elements));
        previous = nd.elements;
    }

    for eta in [0.0, 0.5, 60.0] {
        let rn = descriptive_union(
            &g,
            &a,
            &b,
            &Variant::RestrictiveNondiscriminatory.config(&[], eta),
        )?;
        let nn = descriptive_union(
            &g,
            &a,
            &b,
            &Variant::NonrestrictiveNondiscriminatory.config(&[], eta),
        )?;
        assert_eq!(rn.elements, a.intersection(&b));
        assert_eq!(nn.elements, a.union(&b));
    }
    println!("nondiscriminatory unions reduce to A ∩ B and A ∪ B for every η");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
