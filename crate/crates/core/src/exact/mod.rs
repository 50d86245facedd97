//! Exact arithmetic substrate: rationals, polynomial rings, determinants,
//! resultants, differential operators and linear solving.

pub mod diffop;
pub mod linsolve;
pub mod param_poly;
pub mod poly;
pub mod rat;
pub mod ring;
pub mod roots;

pub use diffop::{op_substitute, DiffOp};
pub use linsolve::{linsolve, Echelon, LinSystem, Solution};
pub use param_poly::ParamPoly;
pub use poly::{NPoly, NVar, Poly, Variable, XPoly, XVar};
pub use rat::{parse_rat, rat, ratio, Rat};
pub use ring::{det, Ring};
