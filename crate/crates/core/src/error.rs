use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("description of `{id}` has length {found}, expected {expected}")]
    DimensionMismatch {
        id: String,
        expected: usize,
        found: usize,
    },

    #[error("description of `{0}` contains a non-finite value")]
    NonFinite(String),

    #[error("dimension must be positive")]
    ZeroDimension,

    #[error("duplicate element id `{0}`")]
    DuplicateId(String),

    #[error("element `{0}` is not in the glossa carrier")]
    UnknownElement(String),

    #[error("pair (`{0}`, ..) is not a member of the glossa")]
    NotAMember(String),

    #[error("tolerance must be a finite non-negative number, got {0}")]
    InvalidTolerance(f64),

    #[error("discriminatory union needs at least one target description")]
    EmptyTargets,

    #[error("k-wise intersection needs at least one member")]
    EmptyCollection,

    #[error("collection has {found} members, at most {max} are supported")]
    CollectionTooLarge { found: usize, max: usize },

    #[error("convex hull of an empty point set is undefined")]
    EmptyPointSet,

    #[error("element `{0}` has no lattice coordinates")]
    MissingCoords(String),

    #[error("{0} is not digitally convex")]
    NotDigitallyConvex(String),

    #[error("face {face:?} is present but its subface {missing:?} is not")]
    NotDownwardClosed {
        face: Vec<usize>,
        missing: Vec<usize>,
    },

    #[error("face {0:?} references a vertex outside 1..={1}")]
    VertexOutOfRange(Vec<usize>, usize),

    #[error("image has zero area")]
    EmptyImage,

    #[error("region selects no pixels inside the image")]
    EmptyRegion,

    #[error("target channel value {0} outside [0, 255]")]
    ChannelOutOfRange(f64),

    #[error(transparent)]
    Image(#[from] image::ImageError),
}
