//! JSON inputs, deterministic reports and case-study presets.

pub mod analysis;
pub mod case_study;
pub mod cone;
pub mod input;
pub mod lattice;
pub mod table;

pub use analysis::{analyze, AnalysisOptions, AnalysisReport};
pub use case_study::{run_case_study, CaseStudy, CaseStudyReport, Provenance};
pub use cone::{cone_report, ConeReport};
pub use input::{Analysis, ConeInput, InputSpec, LatticeInput, LatticeSpec, Model, Scalar, SCHEMA_VERSION};
pub use lattice::{lattice_report, LatticeReport};
