//! The machine-readable report emitted by the command-line tool.
//!
//! Every report has the keys `command`, `input`, `normalized_invariant`,
//! `base_orbifold`, `geometry`, `euler_number`, `chi` and `hvf`, with `null`
//! where a value does not apply. `lens`, `homotopy` and `details` appear only
//! when present. Rationals are strings `"num/den"`; degree sets are objects
//! tagged by `kind`.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Result;
use crate::exactmath::Rational;
use crate::homotopy::{homotopy_components, ComponentCatalog};
use crate::hvf::{decide, DegreeSet, HvfDecision, Mechanism, Obstruction};
use crate::invariant::SeifertInvariant;
use crate::lens::{lens_of_fibering, MarkedLens};
use crate::notation::{print_invariant, print_orbifold};
use crate::orbifold::Orbifold;

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Report {
    pub command: String,
    pub input: String,
    pub normalized_invariant: Option<String>,
    pub base_orbifold: Option<String>,
    pub geometry: Option<String>,
    pub euler_number: Option<String>,
    pub chi: Option<String>,
    pub hvf: Option<HvfReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lens: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homotopy: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct HvfReport {
    pub exists: bool,
    pub mechanisms: Vec<Value>,
    pub degrees: Value,
    pub target: Option<String>,
    pub obstruction: Option<Value>,
}

pub fn rational_json(r: Rational) -> Value {
    Value::String(r.to_fraction_string())
}

pub fn degrees_json(d: &DegreeSet) -> Value {
    match *d {
        DegreeSet::Empty => json!({ "kind": "empty" }),
        DegreeSet::Single(d) => json!({ "kind": "single", "d": d }),
        DegreeSet::Progression {
            residue,
            modulus,
            include_zero,
        } => json!({
            "kind": "progression",
            "residue": residue,
            "modulus": modulus,
            "include_zero": include_zero,
        }),
        DegreeSet::Zero => json!({ "kind": "zero" }),
    }
}

pub fn mechanism_json(m: &Mechanism) -> Value {
    match m {
        Mechanism::SurfaceSection => json!({ "kind": "surface_section" }),
        Mechanism::Covering { degrees, target } => json!({
            "kind": "covering",
            "degrees": degrees_json(degrees),
            "target": print_invariant(target),
        }),
    }
}

pub fn obstruction_json(o: &Obstruction) -> Value {
    match o {
        Obstruction::CongruenceClash { first, second } => json!({
            "kind": "congruence_clash",
            "first": first,
            "second": second,
        }),
        Obstruction::EulerMismatch { chi, euler, required } => json!({
            "kind": "euler_mismatch",
            "chi": rational_json(*chi),
            "euler": rational_json(*euler),
            "required": required.map(rational_json),
        }),
    }
}

pub fn hvf_report(decision: &HvfDecision) -> HvfReport {
    let covering = decision.covering();
    HvfReport {
        exists: decision.exists,
        mechanisms: decision.mechanisms.iter().map(mechanism_json).collect(),
        degrees: degrees_json(&decision.degrees()),
        target: covering.map(|(_, t)| print_invariant(t)),
        obstruction: decision.obstruction.as_ref().map(obstruction_json),
    }
}

pub fn lens_json(l: &MarkedLens) -> Value {
    json!({
        "p": l.p(),
        "q": l.q(),
        "name": l.to_string(),
        "has_hvf_fibering": l.has_hvf_fibering(),
    })
}

pub fn catalog_json(c: &ComponentCatalog) -> Value {
    json!({
        "degrees": degrees_json(&c.degrees),
        "cohomology_rank": c.cohomology_rank,
        "unique_up_to_homotopy": c.unique_up_to_homotopy,
    })
}

impl Report {
    pub fn new(command: &str, input: &str) -> Self {
        Report {
            command: command.to_string(),
            input: input.to_string(),
            normalized_invariant: None,
            base_orbifold: None,
            geometry: None,
            euler_number: None,
            chi: None,
            hvf: None,
            lens: None,
            homotopy: None,
            details: None,
        }
    }

    /// Fills the orbifold fields; geometry only for closed orbifolds.
    pub fn with_orbifold(mut self, orb: &Orbifold) -> Self {
        self.base_orbifold = Some(print_orbifold(orb));
        self.geometry = orb.geometry_class().ok().map(|g| g.name().to_string());
        self.chi = Some(orb.chi().to_fraction_string());
        self
    }

    /// Fills every field that can be derived from the invariant.
    pub fn with_invariant(self, inv: &SeifertInvariant) -> Result<Self> {
        let mut report = self.with_orbifold(&inv.base_orbifold());
        report.normalized_invariant = Some(print_invariant(&inv.normalize().to_invariant()));
        report.euler_number = inv.euler_number().ok().map(|e| e.to_fraction_string());
        report.hvf = Some(hvf_report(&decide(inv)?));
        report.lens = lens_of_fibering(inv).ok().map(|l| lens_json(&l));
        report.homotopy = homotopy_components(inv).ok().map(|c| catalog_json(&c));
        Ok(report)
    }

    pub fn with_details(mut self, details: Value) -> Self {
        self.details = Some(details);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}
