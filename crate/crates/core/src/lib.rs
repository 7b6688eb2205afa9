//! Desargues configurations over finite fields: construction from
//! perspective triangles, sectioning and lifting of 5-compressors, polarity
//! and blockline structure, exact counting formulas with exhaustive
//! brute-force oracles, and the tangential 2-block census of PG(3,2).
//!
//! Start from two triangles in perspective and [`desargues::perspective_config`]
//! hands back the full 10-point/10-line configuration, validated; or start
//! from five points with no four coplanar and let a [`compressor::SectionFrame`]
//! cut them down to a configuration and lift it back up. The
//! [`enumeration`] module counts these objects two independent ways — closed
//! formulas and exhaustive scans — and [`verify`] packages the agreement
//! checks, along with randomized and exhaustive property suites, behind a
//! reporting interface. [`twoblock`] settles by brute force what the
//! tangential 2-blocks of PG(3,2) are, and [`cli`] exposes everything to the
//! shell.
//!
//! The `examples/` directory walks each capability end to end:
//!
//! * `field_tables` — exact GF(q) arithmetic and the axiom checker
//! * `perspective_triangles` — building and validating configurations
//! * `polarity_and_blocklines` — self-conjugate points and 4-point blocklines
//! * `section_and_lift` — compressors, sections, and the two-lift theorem
//! * `counting_formulas` — the closed forms and their identities
//! * `planar_census` — exhaustive enumeration in PG(2,q)
//! * `spatial_census` — the 168 spatial configurations of PG(3,2)
//! * `naive_pitfall` — a plausible through-point count that is simply wrong
//! * `two_block_census` — the full 2^15 tangential 2-block scan

pub mod cli;
pub mod compressor;
pub mod desargues;
pub mod enumeration;
pub mod error;
pub mod field;
pub mod geometry;
pub mod twoblock;
pub mod verify;

pub use error::{Error, Result};
