//! Hilbert functions, degree bounds and explicit presentations of log spin
//! canonical rings of stacky curves.
//!
//! The pipeline starts from a [`Signature`] `(g; e_1, ..., e_r; delta)`:
//! [`spin_divisor`] builds the divisor `L`, [`hilbert`] counts
//! `h^0(floor(kL))`, and for genus 0 and 1 [`present`] returns generators
//! with pole orders and an initial ideal whose standard monomials match the
//! Hilbert function degree by degree.

pub mod bounds;
pub mod cone;
pub mod divisor;
pub mod error;
pub mod hilbert;
pub mod order;
pub mod presentation;
pub mod verify;

pub use bounds::{degree_bounds, is_exceptional, modular_form_bounds, BoundsReport};
pub use divisor::{deg_floor, floor_divisor, spin_divisor, PointId, QDivisor, Signature, Theta, Torsion};
pub use error::{Error, Result};
pub use hilbert::{h0, hilbert_function, hilbert_series, saturation, Saturation};
pub use presentation::{minimal_relation_degrees, present, Presentation};
pub use verify::{verify_presentation, VerificationReport};
