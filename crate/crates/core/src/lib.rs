//! Finite-field arithmetic, Boolean-function spectra and hyper-bentness
//! criteria for Dillon-exponent families over GF(2^{2m}).

pub mod boolfun;
pub mod catalog;
pub mod criteria;
pub mod crosscheck;
pub mod curves;
pub mod families;
pub mod field;
pub mod intmath;
