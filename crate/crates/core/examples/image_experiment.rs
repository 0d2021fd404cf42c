// Targeted tolerance union on a synthetic two-colour image, written as mask and
// overlay PNGs to the system temp directory.

use desops::imaging::{render_overlay, run_experiment, save_png, ExperimentParams, RegionSpec};
use desops::Variant;
use image::{Rgb, RgbImage};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let img = RgbImage::from_fn(64, 64, |x, _| {
        if x < 32 {
            Rgb([254, 224, 198])
        } else {
            Rgb([10, 10, 10])
        }
    });
    let a = RegionSpec::Polygon {
        vertices: vec![[8.0, 8.0], [40.0, 8.0], [40.0, 40.0], [8.0, 40.0]],
    };
    let b = RegionSpec::Hexagon {
        center: [36.0, 36.0],
        radius: 18.0,
    };

    let out = std::env::temp_dir().join("desops-image-example");
    std::fs::create_dir_all(&out)?;
    for v in Variant::ALL {
        let exp = run_experiment(&img, &a, &b, &ExperimentParams::reference(v))?;
        println!("{:<34} {:>5} pixels selected", v.name(), exp.selected.len());
        save_png(&exp.mask, out.join(format!("{v}-mask.png")))?;
        if v == Variant::NonrestrictiveDiscriminatory {
            // only the pale half of A ∪ B matches a target
            assert!(exp.selected.iter().all(|&i| i % 64 < 32));
            let overlay = render_overlay(&img, &exp.region_a, &exp.region_b, &exp.selected);
            save_png(&overlay, out.join("overlay.png"))?;
        }
    }
    println!("wrote PNGs to {}", out.display());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
