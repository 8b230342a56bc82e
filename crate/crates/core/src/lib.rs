//! Finite models for abstract logics and their order-theoretic duals.
//!
//! An abstract logic here is an intersection-closed family of theories over a
//! finite expression universe, optionally equipped with connective tables.
//! The crate builds the associated distributive lattice on the prime-theory
//! quotient, recovers logics from lattices as their proper-filter families,
//! extends both directions to Heyting algebras, dualizes to finite
//! Priestley/spectral/Esakia spaces, and checks the morphism correspondences
//! (stable maps against lattice homomorphisms, strongly stable maps against
//! Heyting homomorphisms and p-morphisms). All structures are small enough
//! for every claim to be verified exhaustively.

pub mod document;
pub mod dot;
pub mod duality;
pub mod enumeration;
pub mod logic;
pub mod morphism;
pub mod order;
pub mod set;



pub use order::{FiniteLattice, FinitePoset, HeytingAlgebra};
pub use set::ExprSet;
