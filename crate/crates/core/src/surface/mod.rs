//! Surface-side computations: genus bounds, the genus-3 homology matrix,
//! double covers, transvections, intersection ideals and train tracks.

pub mod bounds;
pub mod cover;
pub mod genus3;
pub mod intersection;
pub mod transvection;
pub mod traintrack;

pub use bounds::{bound_class_number, bound_max_index, bound_rank, bound_subgroups, digit_count};
pub use cover::{cover_genus, cover_presentation, lifts_as_loop, GroupPresentation, Letter, TwoCover, Word};
pub use genus3::{genus3_matrix, verify_genus3, Genus3Report};
pub use intersection::{intersection, intersection_ideal, LinearForm};
pub use transvection::{standard_symplectic, transvection};
pub use traintrack::{traintrack_class, PerronInterval, Switch, TrainTrack, TrainTrackClass};
