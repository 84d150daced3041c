//! Exact class-function computations on finite reductive groups of type A.
//!
//! The library computes, over exact cyclotomic arithmetic, the combinatorial
//! shadow of the stratification of `GL_n` (n <= 4) and `SL_2` (q odd) by
//! strata `Y_{L,S}`, Deligne-Lusztig characters of maximal tori, Lusztig
//! induction realized through line decompositions, and expansions of class
//! indicators in induced characters.  A brute-force matrix-group oracle
//! (conjugacy classes, Dixon-Schneider character tables, Harish-Chandra
//! induction by direct summation) validates the combinatorial pipeline on
//! small groups.
//!
//! Module map:
//! * [`exactnum`] - cyclotomic fields `Q(zeta_N)` and exact linear algebra,
//! * [`combinat`] - partitions, symmetric-group characters, Kostka-Foulkes
//!   and Green polynomials,
//! * [`gftower`] - compatible discrete-log towers of finite fields and
//!   Frobenius orbits,
//! * [`grptypes`] - class types, strata, tori and their character orbits,
//! * [`dl`] - class functions, Deligne-Lusztig characters, lines, Lusztig
//!   induction, indicator expansion and the decomposition checks,
//! * [`brute`] - the independent matrix-group oracle.

pub mod brute;
pub mod combinat;
pub mod dl;
pub mod exactnum;
pub mod gftower;
pub mod grptypes;
