//! Exact computational group theory toolkit.
//!
//! Everything here is exact: arbitrary-precision rationals, number fields,
//! Laurent polynomials, integer matrices. There is no floating point anywhere.
//!
//! The crate is organized around finitely presented groups:
//!
//! * [`algebra`]: rationals, number fields `Q[xi]/(m)`, Laurent polynomials,
//!   matrices, Smith normal form.
//! * [`words`]: free-group words, endomorphisms, group-ring elements, braids
//!   and the Artin action.
//! * [`presentations`]: presentations, orbifold groups, Tietze
//!   simplification, abelianization, bounded relator-consequence search.
//! * [`subgroups`]: Todd–Coxeter coset enumeration, coset tables from finite
//!   quotients, Reidemeister–Schreier rewriting.
//! * [`alexander`]: Fox calculus, Alexander matrices, elementary-ideal gcds,
//!   twisted Alexander polynomials (Wada's method).
//! * [`quotients`]: homomorphisms into small symmetric groups: verification,
//!   counting, separating-homomorphism search.
//! * [`topology`]: Zariski–Van Kampen presentations, mapping-torus CW
//!   presentations, presentation-complex homology, wedge homotopy types,
//!   orbifold kernel ranks, threshold posets.
//! * [`fixtures`]: the built-in study objects (the nodal-pair groups, the
//!   double-cover intermediates, the distinguishing representation, the
//!   threshold family).

pub mod algebra;
pub mod fixtures;
pub mod alexander;
pub mod presentations;
pub mod quotients;
pub mod subgroups;
pub mod topology;
pub mod words;

pub use algebra::{
    bilaurent::BiLaurentPoly,
    laurent::{laurent_gcd, minor_gcd, LaurentPoly},
    matrix::Mat,
    numberfield::{NFElem, NumberField},
    smith::{smith_normal_form, SmithForm},
    AbelianInvariants, Rational,
};
pub use presentations::{Presentation, TietzeLimits, TietzeTrace};
pub use subgroups::CosetTable;
pub use words::{BraidWord, FreeEndomorphism, GroupRingElem, Word};
