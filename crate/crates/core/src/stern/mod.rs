//! Stern's triangle, the polynomials b_n(q), their Eulerian row sums L_n(q)
//! and the identities tying them together.

pub mod bpoly;
pub mod divisibility;
pub mod identities;
pub mod lpoly;
pub mod triangle;

pub use bpoly::{bpoly, lpoly_def, lpoly_def_upto, lpoly_def_upto_with, lpoly_def_with};
pub use divisibility::{
    quotient_m, subsequences, t2_check, t2_is_2l7, t2_poly, verify_divisibility, DivisibilityReport, SubseqFamily,
};
pub use identities::{
    binet_check, eoj_recurrence_check, key_identity_check, phi_series_check, EojCheck,
};
pub use lpoly::{lpoly_rec, LSequence};
pub use triangle::{diatomic, gf_row_check, triangle_row, SternRow};
