pub mod calculus;
pub mod error;
pub mod expr;
pub mod galois;
pub mod output;
pub mod qplane;
pub mod quaternion;
pub mod random;
pub mod scalar;
pub mod verify;
