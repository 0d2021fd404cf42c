#[allow(dead_code)]
mod four_balls {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/four_balls.rs"
    ));
}

#[allow(dead_code)]
mod descriptive_unions {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/descriptive_unions.rs"
    ));
}

#[allow(dead_code)]
mod tolerance_unions {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/tolerance_unions.rs"
    ));
}

#[allow(dead_code)]
mod descriptive_nerve {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/descriptive_nerve.rs"
    ));
}

#[allow(dead_code)]
mod digital_convexity {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/digital_convexity.rs"
    ));
}

#[allow(dead_code)]
mod image_experiment {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/image_experiment.rs"
    ));
}

#[allow(dead_code)]
mod verify_theorems {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/verify_theorems.rs"
    ));
}

#[test]
fn four_balls_example_runs() {
    four_balls::run_example().expect("four balls example should run");
}

#[test]
fn descriptive_unions_example_runs() {
    descriptive_unions::run_example().expect("descriptive unions example should run");
}

#[test]
fn tolerance_unions_example_runs() {
    tolerance_unions::run_example().expect("tolerance unions example should run");
}

#[test]
fn descriptive_nerve_example_runs() {
    descriptive_nerve::run_example().expect("descriptive nerve example should run");
}

#[test]
fn digital_convexity_example_runs() {
    digital_convexity::run_example().expect("digital convexity example should run");
}

#[test]
fn image_experiment_example_runs() {
    image_experiment::run_example().expect("image experiment example should run");
}

#[test]
fn verify_theorems_example_runs() {
    verify_theorems::run_example().expect("verify theorems example should run");
}
