//! Borel-fixed ideals on the Hilbert-scheme component of arithmetically
//! Cohen-Macaulay curves of codimension two in P³.
//!
//! The modules build on each other from exact arithmetic upward:
//!
//! - [`field`], [`monomial`], [`order`], [`poly`] and [`parse`]: coefficients
//!   `a + b√d` over the rationals, monomials, term orders (lex, degrevlex,
//!   weight, matrix and bracket orders) and sparse polynomials.
//! - [`monomial_ideal`]: monomial ideals, saturation, Hilbert functions and
//!   polynomials, the Borel property and the Gotzmann number.
//! - [`groebner`] and [`linalg`]: Buchberger's algorithm, initial ideals, flat
//!   limits over `k[u]` and the z-transform, plus exact rank computations.
//! - [`borel_enum`]: enumeration of saturated Borel-fixed ideals with a given
//!   Hilbert polynomial, in catalogue order.
//! - [`acm_component`]: the ACM ideals `J(l,m)`, the necessary conditions C1
//!   and C2, and the predicted shapes of limit ideals.
//! - [`segment_pluecker`]: exact strict feasibility, segment and Plücker
//!   separation tests and their certificates.
//! - [`degeneration`]: determinantal families, weights realizing parameter
//!   preorders, flat limits of the families and the prediction catalogue.
//! - [`witness`]: minor ideals of `A(F)` and witness verification, search and
//!   constraint generation.
//! - [`cli`]: the `borel-degen` command line tool.

pub mod error;
pub mod field;
pub mod monomial;
pub mod order;
pub mod poly;
pub mod monomial_ideal;
pub mod parse;
pub mod groebner;
pub mod linalg;
pub mod borel_enum;
pub mod acm_component;
pub mod segment_pluecker;
pub mod degeneration;
pub mod witness;
pub mod cli;
