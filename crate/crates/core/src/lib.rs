//! Exact computational engine for unipotent conjugacy classes of the
//! classical and exceptional groups in characteristic 2.
//!
//! The crate is split along the natural seams of the problem:
//!
//! * [`gf2k`] — arithmetic in GF(2^k), k ≤ 8, with fixed irreducible moduli;
//! * [`linalg`] — small exact matrices: integer matrices with fraction-free
//!   rank, and dense matrices over GF(2^k);
//! * [`rootcore`] — root systems for all finite types, Weyl elements as
//!   integer matrices on the root lattice, lengths, Bruhat order, diagram
//!   automorphisms and the criterion value ℓ(w) + rk(1 − τ^i w);
//! * [`classlabels`] — the (λ, ε) parametrization of unipotent classes of
//!   Sp(2n) and O(2n)/SO(2n) in characteristic 2;
//! * [`chevmat`] — concrete matrix models of GL/SL/Sp/O/SO over GF(2^k) with
//!   Chevalley generators, Jordan/ε extraction and Bruhat-cell identification;
//! * [`sphericity`] — the built-in classification tables and the per-row
//!   verification engine.
//!
//! Everything is exact: integer or finite-field arithmetic only, no floats.
//! The crate is `no_std` (with `alloc`); IO, the census oracle and the CLI
//! live in the companion `sphc` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod classlabels;
pub mod chevmat;
pub mod gf2k;
pub mod linalg;
pub mod rootcore;
pub mod sphericity;
