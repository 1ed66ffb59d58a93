//! Exact computation in Ariki–Koike algebras, the affine Hecke algebra of type
//! A, and slim cyclotomic q-Schur algebras over ℤ[q^{±1}, u₁, …, u_m].

pub mod affine;
pub mod colored;
pub mod error;
pub mod expr;
pub mod hecke;
pub mod linalg;
pub mod modp;
pub mod perm;
pub mod report;
pub mod ring;
pub mod schur;
pub mod typeb;
pub mod verify;

pub use error::{Error, Result};
