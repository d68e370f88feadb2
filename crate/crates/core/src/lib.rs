//! Geometry of planar normed spaces: gauge functions, Birkhoff orthogonality,
//! Auerbach points, and angular measures on the boundary of an origin-symmetric
//! convex body, together with devil's-staircase measures supported on perfect
//! subsets of `[0, 1]`.
//!
//! The crate is split into a few largely independent layers:
//!
//! * [`body`] / [`zoo`] — bodies given by a radial function or a polygon, with
//!   constructors for the standard test bodies (disk, `l_p` balls, polygons,
//!   and a Cantor-bump perturbation of the disk).
//! * [`ortho`] / [`auerbach`] — Birkhoff orthogonality decisions, support
//!   directions, Auerbach-set extraction and the partner map along the boundary.
//! * [`staircase`] — monotone staircase functions over a gap-represented closed
//!   set and the continuous probability measure supported on it.
//! * [`bmeasure`] — angular measures on the boundary circle; construction of a
//!   measure assigning `π/2` to every short arc between Birkhoff-orthogonal
//!   endpoints, and a numerical verifier for the angular-measure axioms.
//! * [`io`] — JSON body/set descriptors and CSV import/export.
//!
//! All types are immutable after construction and all operations are pure
//! functions of their inputs, so everything can be evaluated concurrently.

pub mod angles;
pub mod auerbach;
pub mod bmeasure;
pub mod body;
pub mod error;
pub mod io;
pub mod ortho;
pub mod staircase;
pub mod zoo;

pub use angles::{arc_between, Arc};
pub use auerbach::{
    auerbach_minus_segments, auerbach_set, is_auerbach, partner_angle, segment_set,
    AuerbachComponent, AuerbachSet, SegmentSet,
};
pub use bmeasure::{
    arc, build_b_measure, choose_base_arc, existence_gate, verify_b_measure, AngularMeasure,
    BaseArc, GateClass, GateReport, NuOnArc, PartnerMap, VerifyConfig, VerifyReport,
};
pub use body::{BoundaryPoint, PlanarBody};
pub use error::{Error, Result};
pub use io::{BodyDescriptor, SetDescriptor};
pub use ortho::{birkhoff_partners, is_birkhoff_orthogonal};
pub use staircase::{
    assign_levels, build_measure, eval_staircase, PerfectSet, StaircaseFunction, SupportedMeasure,
};
pub use zoo::{bump, make_body, make_cantor_bump, CantorBumpSpec};
