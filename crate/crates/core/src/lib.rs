//! Lattice tilings by slant N-hedra, boundary surfaces of monomial cones and
//! the binary U/D codes of trajectories on them.

pub mod codec;
pub mod cone;
pub mod error;
pub mod format;
pub mod geom;
pub mod hplane;
pub mod monomial;
pub mod patch;
pub mod tables;
pub mod tile;

pub use codec::{
    decode, digits, encode_letters, encode_sequence, expand_digits, trace, Letter, LetterString,
    Relation, SequenceCode, TileStep, Tracer, TraversalState,
};
pub use cone::Cone;
pub use error::{Error, Result};
pub use format::{parse_code, parse_sequence, print_code, print_sequence, ConeEntry, ConeFile};
pub use geom::{embed, period_check, to_mesh, to_svg, EmbeddedTile, PeriodMatch, PeriodReport};
pub use hplane::{project, HPoint};
pub use monomial::Monomial;
pub use patch::{encode_with_drawings, Drawing, LocalCode, PatchedCode};
pub use tables::{make_tables, Tables};
pub use tile::{FlatTile, Gradient, Neighbor, SlantTile, Slot};
