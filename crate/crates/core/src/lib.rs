//! Schubert polynomials, skew Schubert polynomials and Littlewood-Richardson
//! coefficients for the symmetric group.
//!
//! The crate computes:
//!
//! * Schubert polynomials `S_w` from rc-graphs or from increasing chains in
//!   the labeled Bruhat order;
//! * skew Schubert polynomials `S_{w/u}` (the normal form of `S_u · S_{w₀w}`
//!   modulo `<e_1, …, e_n>`) by three independent routes;
//! * the bijection between rc-graphs of `w` and increasing chains `w -> w₀`;
//! * structure constants `c^w_{u,v}`, Pieri products and the functionals `ψ_α`.
//!
//! ```
//! use schubert::{schubert, Permutation, SchubertMethod};
//!
//! let w: Permutation = "2413".parse().unwrap();
//! let s = schubert(&w, 4, SchubertMethod::RcGraph).unwrap();
//! assert_eq!(s.to_string(), "x1^2*x2 + x1*x2^2");
//! ```

pub mod calc;
pub mod chains;
pub mod error;
pub mod lrtable;
pub mod perm;
pub mod poly;
pub mod rcgraph;
pub mod schur;
pub mod verify;

pub use calc::{
    expand_in_schubert_basis, lr_coefficients, pieri, pieri_by_polynomial, psi_alpha, psi_alpha_by_normal_form,
    schubert, skew, stable_skew, verify_corollary, SchubertExpansion, SchubertMethod, SkewMethod,
};
pub use chains::{
    count_by_type, increasing_chains, increasing_chains_to_w0, par_chains_to_w0, ChainStep, Composition, LabeledChain,
};
pub use error::{Error, Result};
pub use perm::{CoverLabel, Permutation};
pub use poly::{complete_h, elementary, h_alpha, normal_form, LaurentPolynomial, Monomial, Polynomial};
pub use rcgraph::RcGraph;
pub use schur::{schur_oracle, SkewShape};
