//! Local cohomology of bigraded hypersurface rings.
//!
//! For a bihomogeneous `f` in `K[x_1..x_m, y_1..y_n]` the module
//! `H^n_{(y)}(R)_j` of `R = K[x, y]/(f)` is a finitely generated graded
//! module over `K[x]`. This crate builds its presentation, computes its
//! Hilbert function by exact linear algebra and checks it against Gröbner
//! bases and closed formulas.

pub mod cohomology;
pub mod error;
pub mod field;
pub mod formulas;
pub mod groebner;
pub mod hilbert;
pub mod instances;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod presentation;
pub mod verify;

pub use cohomology::{
    cohomology_report, dimension_bound_check, first_nonzero_sub_degree, monotonicity_check,
    sub_component_dimension, top_component_dimension, top_hilbert, CohomologyReport,
    dimension_bound_from, monotonicity_from, DimensionBoundReport, MonotonicityReport, PairVerdict, ReportOptions, Slice, DEFAULT_CAP,
};
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use groebner::{
    ideal_equal, ideal_gb, initial_decomposition, initial_decomposition_with, is_m_primary,
    krull_dimension, module_gb, quotient_hilbert, IdealDecomposition, IdealGB, ModuleGB,
    ModuleOrder, TermOrder,
};
pub use hilbert::HilbertFunction;
pub use linalg::{kernel_basis, rank, rank_profile, ScalarMatrix};
pub use parse::{parse_bihomogeneous, parse_bipoly, parse_poly};
pub use poly::{
    binomial, bipoly_power, coefficient_ideal, count_monomials, monomials_of_degree,
    y_coefficients, BiPoly, Bidegree, Monomial, Poly, XMonomial, YMonomial, ZMonomial,
};
pub use presentation::{
    build_presentation, component_matrix, z_basis, ComponentMatrix, Presentation,
    PresentationRecord, ZBasis,
};
pub use formulas::{
    binom, herzog_kuhl_betti, hilbert_series_from_resolution, hk_multiplicity, lefschetz_hilbert,
    lefschetz_regularity, linear_bound_fit, fit_bound_samples, bound_shape, printed_betti_formula, sub_regularity,
    top_cohomology_shape, top_multiplicity_formula, BoundKind, LinearBoundReport, ResolutionShape,
};
pub use instances::{generic_dual, lefschetz_form, lefschetz_power, random_m_primary};
pub use verify::{run_suite, Check, JResult, Suite, SuiteReport, VerifyParams};
