//! Polyadic cyclic codes over the non-chain ring `F_q[u,v]/<f(u), g(v), uv-vu>`
//! and their Gray images over `F_q`.

pub mod arith;
pub mod gf;
mod upoly;
pub mod polyring;
pub mod linalg;
pub mod cyclic;
pub mod polyadic_fq;
pub mod ring_r;
pub mod gray;
pub mod reference;
pub mod verify;

pub use cyclic::CyclicCode;
pub use gf::{Fe, Gf, GfError};
pub use gray::{GrayError, GrayMatrix};
pub use linalg::{Distance, GeneratorMatrix, Griesmer, LinalgError};
pub use polyadic_fq::{PolyadicFamily, Splitting, SplittingError};
pub use polyring::{CosetPartition, CyclicAmbient, Poly, PolyError, RootChoice};
pub use reference::{Instance, InstanceError, InstanceSpec};
pub use ring_r::{CodeKind, RCode, RElement, RPoly, RingError, RingSpec};
pub use verify::{CheckResult, Report, Status};
