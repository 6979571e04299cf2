//! Horizontal vector fields on Seifert fibered 3-manifolds.
//!
//! Given a Seifert invariant, [`decide_hvf`] reports whether the fibering
//! admits a vector field transverse to the fibers, and how: through a section
//! over a torus or Klein bottle base, or as a fiberwise covering of the unit
//! tangent bundle of the base orbifold. Around that sit exact arithmetic,
//! 2-orbifolds, marked lens spaces, and text formats for all of them.
//!
//! ```
//! use seifert_core::{decide_hvf, parse_invariant, DegreeSet};
//!
//! let m = parse_invariant("M(0; (1,-1), (5,2), (5,2), (5,2))").unwrap();
//! let decision = decide_hvf(&m).unwrap();
//! assert!(decision.exists);
//! assert_eq!(decision.degrees(), DegreeSet::Single(2));
//! ```

pub mod error;
pub mod exactmath;
pub mod homotopy;
pub mod hvf;
pub mod invariant;
pub mod lens;
pub mod notation;
pub mod orbifold;

pub use error::{Error, ParseError, Result};
pub use exactmath::{crt_merge, ext_gcd, gcd, lcm, mod_inverse, Congruence, Rational};
pub use homotopy::{homotopy_components, ComponentCatalog};
pub use hvf::{
    allowable_degrees, boundary_tangency, decide, decide_hvf, decide_hvf_boundary, DegreeSet,
    HvfDecision, Mechanism, Obstruction,
};
pub use invariant::{AlternateFibering, CanonicalForm, FiberPair, SeifertInvariant};
pub use lens::{
    classify_lens, enumerate_lens_fiberings, exceptional_lens_fibering, lens_from_invariant,
    lens_of_fibering, LensCase, MarkedLens,
};
pub use notation::report::Report;
pub use notation::{parse_invariant, parse_orbifold, print_invariant, print_orbifold};
pub use orbifold::{EllipticFamily, GeometryClass, Orbifold, ParabolicFamily};
