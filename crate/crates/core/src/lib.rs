//! Arithmetic modular links from Farey paths on the once-punctured torus.
//!
//! A slope `p/q` on the punctured torus projects to a closed geodesic on the
//! modular surface. This crate computes, from such a slope:
//!
//! * its Farey path from the base triangle `(0/1, 1/1, 1/0)` and its orbit
//!   under the order-3 rotation `V(p/q) = q/(q − p)` ([`farey`]);
//! * its AB- and LR-cutting sequences, with exact lattice-line simulations
//!   as independent checks ([`cutting`]);
//! * the PSL(2,ℤ) matrix of the LR word, its trace, hyperbolic length and
//!   quadratic-field discriminant ([`psl2z`]);
//! * the whole link family: `3x` slopes forming a Farey chain, `x` modular
//!   geodesics, octahedron counts and the volume `x·v_oct` ([`links`]).

pub mod cutting;
pub mod error;
pub mod farey;
pub mod links;
pub mod necklace;
pub mod numfmt;
pub mod psl2z;

pub use cutting::{
    ab_sequence, ab_sequence_geometric, ab_to_lr, continued_fraction, lr_geometric_oracle,
    slope_to_word, trace_line, AbLetter, AbWord, ContinuedFraction, LineTrace,
};
pub use error::{Error, Result};
pub use farey::{
    farey_path, is_farey_neighbour, mediant, order_as_farey_chain, v_orbit, v_rotate, FareyPath,
    FareyTriangle, Slope,
};
pub use links::{
    build_family, census, cover_scale, gamma_sequence, v_oct, volume_length_table, CensusOptions,
    LinkFamily, VolumeReport,
};
pub use psl2z::{
    canonical_cyclic, field_discriminant, generator, geodesic_length, trace, word_to_matrix,
    Generator, GeodesicWord, Letter, ModularMatrix,
};
