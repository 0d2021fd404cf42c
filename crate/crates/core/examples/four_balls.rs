// Four balls, two of them blue: the descriptive intersection sees the colour match
// that the plain intersection misses.

use desops::{check_injective, descriptive_intersection, ElementSet, Glossa};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // 1.0 = blue, 2.0 = red, 3.0 = green
    let g = Glossa::from_pairs(
        [("B1", [1.0]), ("B2", [2.0]), ("B3", [1.0]), ("B4", [3.0])],
        1,
        [0.0],
    )?;
    let a: ElementSet = ["B1", "B2"].into_iter().collect();
    let b: ElementSet = ["B3", "B4"].into_iter().collect();

    let plain = a.intersection(&b);
    let described = descriptive_intersection(&g, &a, &b, 0.0)?;
    println!("A ∩ B   = {:?}", plain.ids);
    println!("A ⋂_Φ B = {:?}", described.ids);
    assert!(plain.is_empty());
    assert_eq!(described, ["B1", "B3"].into_iter().collect());

    let inj = check_injective(&g, &a.union(&b))?;
    println!(
        "φ injective on A ∪ B: {} (witness {:?})",
        inj.injective, inj.witness
    );
    assert!(!inj.injective);

    let fiber = g.fiber(&a, false)?;
    println!("φ(A) = {fiber:?}");
    println!(
        "π⁻¹(blue) over A ∪ B = {:?}",
        g.pi_inverse(&[1.0].into(), &a.union(&b), 0.0)?.ids
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
