//! Descriptive unions on RGB images.
//!
//! Every pixel is an element whose description is its raw `[R, G, B]` triple. Pixel
//! centres sit at integer coordinates `(x, y) = (column, row)`; region membership is
//! decided on pixel centres and is boundary inclusive.

use std::io::Cursor;
use std::path::Path;

use image::{ImageFormat, Rgb, RgbImage};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::glossa::{Description, ElementSet, Entry, Glossa};
use crate::setops::{union_idx, DescriptiveResult, Variant};

/// Tolerance used for the reference two-target experiment.
pub const DEFAULT_ETA: f64 = 60.0;

/// The two reference target colours: a pale skin tone and a saturated red.
pub const DEFAULT_TARGETS: [[f64; 3]; 2] = [[254.0, 224.0, 198.0], [208.0, 35.0, 37.0]];

pub const BLACK: Rgb<u8> = Rgb([0, 0, 0]);
pub const WHITE: Rgb<u8> = Rgb([255, 255, 255]);
pub const GREEN: Rgb<u8> = Rgb([0, 255, 0]);
pub const RED: Rgb<u8> = Rgb([255, 0, 0]);

const EDGE_EPS: f64 = 1e-9;

pub fn pixel_id(row: u32, col: u32) -> String {
    format!("{row},{col}")
}

/// One element per pixel in row-major order, so element index `row * width + col`.
pub fn build_image_glossa(img: &RgbImage) -> Result<Glossa> {
    if img.width() == 0 || img.height() == 0 {
        return Err(Error::EmptyImage);
    }
    let entries = img
        .enumerate_pixels()
        .map(|(x, y, px)| {
            let Rgb([r, g, b]) = *px;
            Entry::new(pixel_id(y, x), [r as f64, g as f64, b as f64])
                .with_coords((x as i64, y as i64))
        })
        .collect();
    Glossa::new(3, Description::zeros(3), entries)
}

/// A geometric region in pixel units.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RegionSpec {
    Polygon {
        vertices: Vec<[f64; 2]>,
    },
    /// Regular hexagon with vertices at `center + radius·(cos k·60°, sin k·60°)`.
    Hexagon {
        center: [f64; 2],
        radius: f64,
    },
    Disc {
        center: [f64; 2],
        radius: f64,
    },
}

impl RegionSpec {
    pub fn hexagon_vertices(center: [f64; 2], radius: f64) -> Vec<[f64; 2]> {
        (0..6)
            .map(|k| {
                let theta = std::f64::consts::FRAC_PI_3 * k as f64;
                [
                    center[0] + radius * theta.cos(),
                    center[1] + radius * theta.sin(),
                ]
            })
            .collect()
    }

    pub fn contains(&self, x: f64, y: f64) -> bool {
        match self {
            RegionSpec::Polygon { vertices } => polygon_contains(vertices, x, y),
            RegionSpec::Hexagon { center, radius } => {
                polygon_contains(&RegionSpec::hexagon_vertices(*center, *radius), x, y)
            }
            RegionSpec::Disc { center, radius } => {
                let (dx, dy) = (x - center[0], y - center[1]);
                dx * dx + dy * dy <= radius * radius
            }
        }
    }

    /// `(min_x, min_y, max_x, max_y)`.
    fn bounds(&self) -> Option<(f64, f64, f64, f64)> {
        let fold = |vs: &[[f64; 2]]| {
            vs.iter()
                .fold(None, |acc: Option<(f64, f64, f64, f64)>, v| {
                    Some(match acc {
                        None => (v[0], v[1], v[0], v[1]),
                        Some((a, b, c, d)) => (a.min(v[0]), b.min(v[1]), c.max(v[0]), d.max(v[1])),
                    })
                })
        };
        match self {
            RegionSpec::Polygon { vertices } => fold(vertices),
            RegionSpec::Hexagon { center, radius } | RegionSpec::Disc { center, radius } => Some((
                center[0] - radius,
                center[1] - radius,
                center[0] + radius,
                center[1] + radius,
            )),
        }
    }
}

fn on_segment(a: [f64; 2], b: [f64; 2], x: f64, y: f64) -> bool {
    let cross = (b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0]);
    let len = ((b[0] - a[0]).powi(2) + (b[1] - a[1]).powi(2))
        .sqrt()
        .max(1.0);
    cross.abs() <= EDGE_EPS * len
        && x >= a[0].min(b[0]) - EDGE_EPS
        && x <= a[0].max(b[0]) + EDGE_EPS
        && y >= a[1].min(b[1]) - EDGE_EPS
        && y <= a[1].max(b[1]) + EDGE_EPS
}

/// Even-odd rule, with every point on an edge counted as inside.
fn polygon_contains(vertices: &[[f64; 2]], x: f64, y: f64) -> bool {
    let n = vertices.len();
    if n == 0 {
        return false;
    }
    let mut inside = false;
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        if on_segment(a, b, x, y) {
            return true;
        }
        if (a[1] > y) != (b[1] > y) {
            let xc = a[0] + (y - a[1]) * (b[0] - a[0]) / (b[1] - a[1]);
            if x < xc {
                inside = !inside;
            }
        }
    }
    inside
}

/// Row-major pixel indices whose centres fall inside `spec`, clipped to the image.
pub fn region_pixels(width: u32, height: u32, spec: &RegionSpec) -> Vec<usize> {
    let Some((x0, y0, x1, y1)) = spec.bounds() else {
        return Vec::new();
    };
    if width == 0 || height == 0 || x1 < 0.0 || y1 < 0.0 {
        return Vec::new();
    }
    let clamp = |v: f64, hi: u32| v.max(0.0).min(hi as f64 - 1.0);
    let (cx0, cx1) = (
        clamp(x0.floor(), width) as u32,
        clamp(x1.ceil(), width) as u32,
    );
    let (cy0, cy1) = (
        clamp(y0.floor(), height) as u32,
        clamp(y1.ceil(), height) as u32,
    );
    let mut out = Vec::new();
    for row in cy0..=cy1 {
        for col in cx0..=cx1 {
            if spec.contains(col as f64, row as f64) {
                out.push(row as usize * width as usize + col as usize);
            }
        }
    }
    out
}

pub fn region_to_set(g: &Glossa, img: &RgbImage, spec: &RegionSpec) -> Result<ElementSet> {
    let idx = region_pixels(img.width(), img.height(), spec);
    if idx.is_empty() {
        return Err(Error::EmptyRegion);
    }
    Ok(g.ids_of(&idx))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentParams {
    pub variant: Variant,
    pub eta: f64,
    pub targets: Vec<Description>,
}

impl ExperimentParams {
    /// The reference setting: tolerance 60 around the two default targets.
    pub fn reference(variant: Variant) -> Self {
        ExperimentParams {
            variant,
            eta: DEFAULT_ETA,
            targets: DEFAULT_TARGETS
                .iter()
                .map(|&t| Description::from(t))
                .collect(),
        }
    }

    fn validate(&self) -> Result<()> {
        for t in &self.targets {
            if let Some(&v) = t.as_slice().iter().find(|v| !(0.0..=255.0).contains(*v)) {
                return Err(Error::ChannelOutOfRange(v));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct Experiment {
    pub result: DescriptiveResult,
    /// Row-major indices of selected pixels.
    pub selected: Vec<usize>,
    pub region_a: Vec<usize>,
    pub region_b: Vec<usize>,
    pub mask: RgbImage,
}

/// Applies the configured descriptive union to two regions of `img`.
pub fn run_experiment(
    img: &RgbImage,
    a: &RegionSpec,
    b: &RegionSpec,
    params: &ExperimentParams,
) -> Result<Experiment> {
    params.validate()?;
    let g = build_image_glossa(img)?;
    let region_a = region_pixels(img.width(), img.height(), a);
    let region_b = region_pixels(img.width(), img.height(), b);
    if region_a.is_empty() || region_b.is_empty() {
        return Err(Error::EmptyRegion);
    }
    let cfg = params.variant.config(&params.targets, params.eta);
    cfg.validate(&g)?;
    let (selected, includes_empty_set) = union_idx(&g, &region_a, &region_b, &cfg);
    let mask = render_mask(img.width(), img.height(), &selected);
    Ok(Experiment {
        result: DescriptiveResult {
            elements: g.ids_of(&selected),
            includes_empty_set,
        },
        selected,
        region_a,
        region_b,
        mask,
    })
}

/// White where selected, black elsewhere.
pub fn render_mask(width: u32, height: u32, selected: &[usize]) -> RgbImage {
    let mut mask = RgbImage::from_pixel(width, height, BLACK);
    for &i in selected {
        mask.put_pixel(i as u32 % width, i as u32 / width, WHITE);
    }
    mask
}

fn flags(len: usize, idx: &[usize]) -> Vec<bool> {
    let mut f = vec![false; len];
    for &i in idx {
        f[i] = true;
    }
    f
}

/// Selected pixels keep their colour, everything else is shown in greyscale; region A
/// is outlined in green and region B in red.
pub fn render_overlay(
    img: &RgbImage,
    region_a: &[usize],
    region_b: &[usize],
    selected: &[usize],
) -> RgbImage {
    let (w, h) = img.dimensions();
    let len = (w * h) as usize;
    let sel = flags(len, selected);
    let mut out = RgbImage::new(w, h);
    for (x, y, px) in img.enumerate_pixels() {
        let i = (y * w + x) as usize;
        let Rgb([r, g, b]) = *px;
        let shown = if sel[i] {
            *px
        } else {
            let luma = ((299 * r as u32 + 587 * g as u32 + 114 * b as u32) / 1000) as u8;
            Rgb([luma, luma, luma])
        };
        out.put_pixel(x, y, shown);
    }
    for (region, colour) in [(region_a, GREEN), (region_b, RED)] {
        let inside = flags(len, region);
        for &i in region {
            let (x, y) = (i as u32 % w, i as u32 / w);
            let boundary = x == 0
                || y == 0
                || x + 1 == w
                || y + 1 == h
                || !inside[i - 1]
                || !inside[i + 1]
                || !inside[i - w as usize]
                || !inside[i + w as usize];
            if boundary {
                out.put_pixel(x, y, colour);
            }
        }
    }
    out
}

/// Decodes any supported image, dropping alpha.
pub fn load_rgb(path: impl AsRef<Path>) -> Result<RgbImage> {
    Ok(image::open(path)?.to_rgb8())
}

pub fn save_png(img: &RgbImage, path: impl AsRef<Path>) -> Result<()> {
    img.save_with_format(path, ImageFormat::Png)?;
    Ok(())
}

pub fn encode_png(img: &RgbImage) -> Result<Vec<u8>> {
    let mut buf = Cursor::new(Vec::new());
    img.write_to(&mut buf, ImageFormat::Png)?;
    Ok(buf.into_inner())
}

pub fn decode_png(bytes: &[u8]) -> Result<RgbImage> {
    Ok(image::load_from_memory_with_format(bytes, ImageFormat::Png)?.to_rgb8())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn img_from(w: u32, h: u32, f: impl Fn(u32, u32) -> [u8; 3]) -> RgbImage {
        RgbImage::from_fn(w, h, |x, y| Rgb(f(x, y)))
    }

    #[test]
    fn glossa_from_pixels() {
        let img = img_from(2, 1, |x, _| if x == 0 { [255, 0, 0] } else { [0, 0, 255] });
        let g = build_image_glossa(&img).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(
            g.desc_of("0,0").unwrap(),
            &Description::from([255.0, 0.0, 0.0])
        );
        assert_eq!(
            g.desc_of("0,1").unwrap(),
            &Description::from([0.0, 0.0, 255.0])
        );
        assert_eq!(g.dim(), 3);

        let black = build_image_glossa(&img_from(1, 1, |_, _| [0, 0, 0])).unwrap();
        assert_eq!(black.desc(0), &Description::zeros(3));
        assert!(matches!(
            build_image_glossa(&RgbImage::new(0, 0)),
            Err(Error::EmptyImage)
        ));
    }

    #[test]
    fn region_examples() {
        let img = img_from(3, 3, |_, _| [1, 2, 3]);
        let g = build_image_glossa(&img).unwrap();
        let dot = RegionSpec::Disc {
            center: [1.0, 1.0],
            radius: 0.0,
        };
        assert_eq!(
            region_to_set(&g, &img, &dot).unwrap(),
            ["1,1"].into_iter().collect()
        );

        let img2 = img_from(2, 2, |_, _| [0, 0, 0]);
        let g2 = build_image_glossa(&img2).unwrap();
        let square = RegionSpec::Polygon {
            vertices: vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]],
        };
        assert_eq!(region_to_set(&g2, &img2, &square).unwrap(), g2.carrier());

        let away = RegionSpec::Disc {
            center: [50.0, 50.0],
            radius: 2.0,
        };
        assert!(matches!(
            region_to_set(&g2, &img2, &away),
            Err(Error::EmptyRegion)
        ));
    }

    /// Independent inside test for a regular hexagon with vertices on the x axis.
    fn hexagon_oracle(center: [f64; 2], r: f64, x: f64, y: f64) -> bool {
        let (dx, dy) = ((x - center[0]).abs(), (y - center[1]).abs());
        let s3 = 3f64.sqrt();
        dy <= s3 / 2.0 * r + 1e-9 && s3 * dx + dy <= s3 * r + 1e-9
    }

    #[test]
    fn hexagon_matches_brute_force_scan() {
        let (w, h) = (24u32, 18u32);
        for &(cx, cy, r) in &[
            (5.0, 5.0, 4.0),
            (0.0, 0.0, 6.0),
            (22.5, 16.5, 5.0),
            (12.0, 9.0, 7.3),
            (3.0, 17.0, 3.0),
        ] {
            let spec = RegionSpec::Hexagon {
                center: [cx, cy],
                radius: r,
            };
            let got = region_pixels(w, h, &spec);
            let want: Vec<usize> = (0..h)
                .flat_map(|y| (0..w).map(move |x| (x, y)))
                .filter(|&(x, y)| hexagon_oracle([cx, cy], r, x as f64, y as f64))
                .map(|(x, y)| (y * w + x) as usize)
                .collect();
            assert_eq!(got, want, "hexagon at ({cx}, {cy}) r={r}");
        }
    }

    #[test]
    fn polygon_edges_inclusive() {
        let tri = RegionSpec::Polygon {
            vertices: vec![[0.0, 0.0], [4.0, 0.0], [0.0, 4.0]],
        };
        assert!(tri.contains(2.0, 2.0));
        assert!(tri.contains(0.0, 3.0));
        assert!(tri.contains(4.0, 0.0));
        assert!(!tri.contains(3.0, 2.0));
    }

    #[test]
    fn experiment_on_two_colour_image() {
        let img = img_from(64, 64, |x, _| {
            if x < 32 {
                [254, 224, 198]
            } else {
                [10, 10, 10]
            }
        });
        let a = RegionSpec::Polygon {
            vertices: vec![[8.0, 8.0], [40.0, 8.0], [40.0, 40.0], [8.0, 40.0]],
        };
        let b = RegionSpec::Polygon {
            vertices: vec![[24.0, 24.0], [56.0, 24.0], [56.0, 56.0], [24.0, 56.0]],
        };
        let inside =
            |x: u32, y: u32, lo: u32, hi: u32| (lo..=hi).contains(&x) && (lo..=hi).contains(&y);
        let in_a = |x, y| inside(x, y, 8, 40);
        let in_b = |x, y| inside(x, y, 24, 56);

        let e = run_experiment(
            &img,
            &a,
            &b,
            &ExperimentParams::reference(Variant::NonrestrictiveDiscriminatory),
        )
        .unwrap();
        for (x, y, px) in e.mask.enumerate_pixels() {
            let want = (in_a(x, y) || in_b(x, y)) && x < 32;
            assert_eq!(*px == WHITE, want, "pixel ({x}, {y})");
        }

        for eta in [0.0, 5.0, 60.0, 500.0] {
            let mut p = ExperimentParams::reference(Variant::RestrictiveNondiscriminatory);
            p.eta = eta;
            let e = run_experiment(&img, &a, &b, &p).unwrap();
            assert!(e
                .mask
                .enumerate_pixels()
                .all(|(x, y, px)| (*px == WHITE) == (in_a(x, y) && in_b(x, y))));
            p.variant = Variant::NonrestrictiveNondiscriminatory;
            let e = run_experiment(&img, &a, &b, &p).unwrap();
            assert!(e
                .mask
                .enumerate_pixels()
                .all(|(x, y, px)| (*px == WHITE) == (in_a(x, y) || in_b(x, y))));
        }
    }

    #[test]
    fn rejects_out_of_range_targets() {
        let img = img_from(4, 4, |_, _| [0, 0, 0]);
        let r = RegionSpec::Disc {
            center: [1.0, 1.0],
            radius: 1.0,
        };
        let mut p = ExperimentParams::reference(Variant::RestrictiveDiscriminatory);
        p.targets = vec![[300.0, 0.0, 0.0].into()];
        assert!(matches!(
            run_experiment(&img, &r, &r, &p),
            Err(Error::ChannelOutOfRange(_))
        ));
    }

    #[test]
    fn overlay_colours() {
        let img = img_from(8, 8, |_, _| [200, 40, 40]);
        let a: Vec<usize> = (0..64).filter(|i| i % 8 < 4).collect();
        let b: Vec<usize> = (0..64).filter(|i| i % 8 >= 4).collect();
        let out = render_overlay(&img, &a, &b, &[]);
        assert_eq!(*out.get_pixel(0, 3), GREEN);
        assert_eq!(*out.get_pixel(7, 3), RED);
        let Rgb([r, g, bl]) = *out.get_pixel(2, 3);
        assert!(r == g && g == bl);
        let out = render_overlay(&img, &[], &[], &[27]);
        assert_eq!(*out.get_pixel(3, 3), Rgb([200, 40, 40]));
    }

    #[test]
    fn png_round_trip() {
        let mask = render_mask(5, 3, &[0, 4, 7, 14]);
        let bytes = encode_png(&mask).unwrap();
        assert_eq!(decode_png(&bytes).unwrap(), mask);
    }
}
