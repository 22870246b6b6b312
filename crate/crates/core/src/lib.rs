//! Exact construction and verification of the four Hagge circles of a
//! cyclic quadrilateral inscribed in the rectangular hyperbola `xy = 1`.
//!
//! All arithmetic is over [`Rational`]; every check is an exact equality.

pub mod config;
pub mod formulas;
pub mod geom;
pub mod hagge;
pub mod number;
pub mod verify;

pub use config::{make_config, ConfigError, QuadConfig, Triangle, Vertex};
pub use geom::{Circle, GeomError, Line, Point};
pub use number::{NumberError, Rational};
pub use verify::{run_all, sample_configs, CheckResult, Status, VerificationReport};
