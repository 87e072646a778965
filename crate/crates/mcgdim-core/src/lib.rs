//! Exact dimension computations for mapping class groups of punctured
//! orientable surfaces, together with the finite-subgroup machinery needed
//! to verify that the proper geometric dimension of `Mod_g^n` equals its
//! virtual cohomological dimension.
//!
//! Everything here is integer or rational arithmetic; there is no floating
//! point anywhere in the verification path.
//!
//! The crate is organised as follows:
//!
//! * [`mcg`] — closed-form dimension formulas (Harer's vcd, spherical braid
//!   groups, subgroup-chain length bounds).
//! * [`perm`] — a small exact engine for permutation groups of order at most
//!   60: element enumeration, subgroup lattices, chain length, solvability,
//!   Burnside counting.
//! * [`orbifold`] — quotient-orbifold arithmetic: signatures, Riemann–Hurwitz,
//!   and the puncture-placement solver that produces every feasible marked
//!   point count `n_F`.
//! * [`catalog`] — the finite-subgroup catalogs for genus 0 (Stukow), genus 1
//!   (wallpaper families) and genus 2 (Broughton's table).
//! * [`verify`] — the inequality `vcd(WF) + λ(F) ≤ vcd(Mod_g^n)` checked per
//!   catalog entry, the asymptotic branch inequalities, and the genus ≥ 3
//!   arithmetic.
//! * [`table`] — regeneration of the reference tables consumed by the CLI.

pub mod catalog;
pub mod mcg;
pub mod orbifold;
pub mod perm;
pub mod table;
pub mod verify;

pub use catalog::{CatalogEntry, FiniteGroupSpec, GroupFamily};
pub use mcg::MappingClassGroup;
pub use orbifold::{OrbifoldSignature, PunctureDistribution};
pub use perm::{Permutation, PermutationGroup, SubgroupLattice};
pub use verify::{BranchReport, RecordStatus, VerificationRecord};
