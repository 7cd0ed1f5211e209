//! Exact character theory for small permutation groups, with executable
//! checks of the McKay bijections for groups with a self-normalizing Sylow
//! subgroup.
//!
//! - [`group`]: enumerated permutation groups and subgroup algorithms
//! - [`arith`]: rationals, prime fields, cyclotomic numbers
//! - [`chartab`]: Dixon–Schneider character tables and class functions
//! - [`mckay`]: the restriction star map, the descent map, and the checks
//!   that relate them
//! - [`showcase`]: the order-648 example group and the verification corpus

pub mod arith;
pub mod chartab;
pub mod group;
pub mod mckay;
pub mod showcase;
