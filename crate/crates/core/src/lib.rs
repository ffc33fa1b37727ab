//! Energy of graphs and real symmetric matrices, nullity-aware lower bounds,
//! and certificates for when those bounds are attained.
//!
//! * [`linalg`]: symmetric eigenvalues, exact nullity and characteristic
//!   polynomials, elementary symmetric sums.
//! * [`graphs`]: simple graphs, graph6, family constructors, walk counts.
//! * [`bounds`]: the energy lower bounds and the survey report.
//! * [`classify`]: equality certificates and strictness witnesses.
//! * [`case_study`]: tree threshold, bipartite joins and blow-ups.

pub mod analysis;
pub mod bounds;
pub mod case_study;
pub mod classify;
pub mod error;
pub mod graphs;
pub mod linalg;

pub use analysis::{analyze, Analysis};
pub use bounds::{BoundName, BoundReport, GraphProfile, Profile, SurveyOptions};
pub use classify::{CertificateKind, EqualityCertificate, StrictnessWitness, WitnessKind};
pub use error::{Error, Result};
pub use graphs::{parse_graph6, write_graph6, Graph};
pub use linalg::{Scalar, Spectrum, SymMatrix};
