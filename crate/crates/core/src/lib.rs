#![allow(clippy::needless_range_loop)]

pub mod cartan;
pub mod demazure;
pub mod error;
pub mod grid;
pub mod lp;
pub mod orders;
pub mod parabolic;
pub mod polytope;
pub mod rational;
pub mod weyl;

pub use cartan::{build_root_system, CartanType, Coweight, FiniteCartanData, Weight};
pub use error::{Error, Result};
pub use orders::{OrderKind, Twist};
pub use parabolic::{Classification, EtaContext};
pub use polytope::{DemazurePolytope, FaceSpec, Family, Inequality};
pub use rational::Rat;
pub use weyl::{AffineRoot, AffineWeylGroup, WeylElt};
