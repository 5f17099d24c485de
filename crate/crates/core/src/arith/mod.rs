//! Finite fields and the arithmetic of the cubic field `k = Q(cos 2pi/7)`.

mod cubic;
mod fq;
pub(crate) mod poly;

pub use cubic::{
    congruence_curves, congruence_match, macbeath_class, psl2_order, splitting_in_k, CongruenceCurve, CongruenceLevel,
    HurwitzStatus, PrimeSplit, MIN_POLY_2COS,
};
pub use fq::{is_prime, prime_factors, prime_power, Fq, MAX_EXTENSION_DEGREE};
