//! Commutative algebra over prime-characteristic quotient rings: Gröbner
//! bases, free resolutions, Tor and Ext, the Frobenius functor, and
//! executable checks of Frobenius criteria for freeness and Gorensteinness.

pub mod budget;
pub mod criteria;
pub mod error;
pub mod field;
pub mod frobenius;
pub mod groebner;
pub mod ideal;
pub mod invariants;
pub mod matrix;
pub mod module;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ring;

pub use budget::{Budget, Limits, Usage};
pub use criteria::{
    CriterionReport, GorensteinMethod, Grid, ModuleArg, PdInfo, RigidityClass, RigidityVerdict,
    Verdict,
};
pub use error::{Error, Result};
pub use field::{FieldElement, PrimeField};
pub use frobenius::{FrobeniusPower, KappaCertificate, PushforwardModule, TorMethod};
pub use groebner::{GroebnerBasis, Vector};
pub use ideal::Length;
pub use invariants::{CmType, EulerCharacteristic, InvariantBundle, SopSequence};
pub use matrix::Matrix;
pub use module::{ComplexWithCoefficients, FreeComplex, HomologyModule, PresentedModule};
pub use monomial::Monomial;
pub use poly::{PolyRing, Polynomial};
pub use ring::{RingFlags, RingModel};
