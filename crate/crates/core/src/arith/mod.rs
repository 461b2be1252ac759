//! Exact arithmetic in the single formal variable `y = -q^(1/2)`.

mod cyclotomic;
mod dense;
mod intpoly;
mod laurent;
mod parse;
mod qcomb;
mod ratfunc;

pub use cyclotomic::{cyclotomic, reduce_over_one_minus_powers};
pub use intpoly::{IntPoly, ScaledPoly};
pub use laurent::LaurentPoly;
pub use parse::{parse_rational_function, Symbol};
pub use qcomb::{
    gaussian_binomial, gaussian_binomial_coeffs, motive_affine, motive_gl, motive_grassmannian,
    motive_projective, q_pochhammer,
};
pub use ratfunc::{rf_arith, RationalFunction, RfOp};

/// `rf_substitute_power`: substitutes `y -> y^m`.
pub fn rf_substitute_power(f: &RationalFunction, m: u32) -> RationalFunction {
    f.substitute_power(m)
}

/// `rf_eval_at_q1`: value at `y = -1`.
pub fn rf_eval_at_q1(f: &RationalFunction) -> Result<num_rational::BigRational, crate::Error> {
    f.eval_at_q1()
}
