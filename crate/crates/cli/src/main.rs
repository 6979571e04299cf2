//! `seifert`: horizontal vector fields on Seifert fibered 3-manifolds.
//!
//! Exit status is 0 when an answer was computed (including negative
//! answers), 2 for malformed or invalid input, and 1 for internal failures.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use seifert_core::hvf::congruence_system;
use seifert_core::notation::report::{catalog_json, hvf_report, lens_json};
use seifert_core::{
    boundary_tangency, classify_lens, decide_hvf, decide_hvf_boundary, enumerate_lens_fiberings,
    homotopy_components, lens_of_fibering, parse_invariant, parse_orbifold, print_invariant,
    Error, HvfDecision, LensCase, MarkedLens, Mechanism, Obstruction, Report,
    SeifertInvariant,
};

#[derive(Parser)]
#[command(name = "seifert", version, about = "Horizontal vector fields on Seifert fiber spaces")]
#[command(allow_negative_numbers = true)]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Euler characteristic, geometry and family of an orbifold such as "2 3 7".
    ClassifyOrbifold { orbifold: String },
    /// Seifert invariant of the unit tangent bundle of a closed orbifold.
    Ut { orbifold: String },
    /// Canonical form of an invariant such as "M(0; (2,-1), (3,-1), (6,5))".
    Normalize { invariant: String },
    /// Euler number of a closed invariant.
    Euler { invariant: String },
    /// Decide whether a closed fibering has a horizontal vector field.
    Hvf { invariant: String },
    /// Quotient by the order-|d| subgroup of the fiber action (betas times d).
    Quotient {
        invariant: String,
        #[arg(allow_hyphen_values = true)]
        d: i64,
    },
    /// Marked lens space of a genus-0 fibering with at most two exceptional fibers.
    Lens { invariant: String },
    /// Which fiberings of L(p, q) carry a horizontal vector field (p >= 0).
    LensClassify {
        p: i64,
        #[arg(allow_hyphen_values = true)]
        q: i64,
    },
    /// Compare L(p1, q1) and L(p2, q2).
    LensEqual {
        #[arg(allow_hyphen_values = true)]
        p1: i64,
        #[arg(allow_hyphen_values = true)]
        q1: i64,
        #[arg(allow_hyphen_values = true)]
        p2: i64,
        #[arg(allow_hyphen_values = true)]
        q2: i64,
        #[arg(long, value_enum, default_value_t = Relation::Marked)]
        relation: Relation,
    },
    /// Two-fiber genus-0 invariants with |coefficients| <= bound giving L(p, q).
    EnumerateLens {
        #[arg(allow_hyphen_values = true)]
        p: i64,
        #[arg(allow_hyphen_values = true)]
        q: i64,
        bound: i64,
    },
    /// Components of the space of horizontal vector fields (oriented base).
    Homotopy { invariant: String },
    /// Decide a fibering with boundary, e.g. "M(0, 1; (3,1), (3,2))".
    BoundaryHvf { invariant: String },
    /// Other Seifert fiberings of the same manifold.
    Alternates { invariant: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Relation {
    Marked,
    Oriented,
    Homeo,
}

impl Relation {
    fn name(self) -> &'static str {
        match self {
            Relation::Marked => "marked",
            Relation::Oriented => "oriented",
            Relation::Homeo => "homeo",
        }
    }
}

/// The largest enumeration bound accepted; the search is quadratic in the
/// number of pairs, which is quadratic in the bound.
const MAX_ENUMERATION_BOUND: i64 = 40;

struct Output {
    text: String,
    report: Report,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    let outcome = std::panic::catch_unwind(move || run(cli.command));
    match outcome {
        Ok(Ok(out)) => {
            if json {
                println!("{}", out.report.to_json());
            } else {
                print!("{}", out.text);
            }
            ExitCode::SUCCESS
        }
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(_) => {
            eprintln!("internal error");
            ExitCode::from(1)
        }
    }
}

fn describe_decision(out: &mut String, decision: &HvfDecision) {
    let _ = writeln!(out, "exists: {}", if decision.exists { "yes" } else { "no" });
    for m in &decision.mechanisms {
        match m {
            Mechanism::SurfaceSection => {
                let _ = writeln!(out, "mechanism: surface section");
            }
            Mechanism::Covering { degrees, target } => {
                let _ = writeln!(out, "mechanism: covering of {target}, degrees {degrees}");
            }
        }
    }
    match &decision.obstruction {
        Some(Obstruction::CongruenceClash { first, second }) => {
            let _ = writeln!(
                out,
                "obstruction: the congruences of pairs {first} and {second} are incompatible"
            );
        }
        Some(Obstruction::EulerMismatch { chi, euler, required }) => {
            let _ = match required {
                Some(r) => writeln!(
                    out,
                    "obstruction: d * {euler} = {chi} needs d = {r}, which is not an allowed non-zero integer"
                ),
                None => writeln!(out, "obstruction: euler number is 0 but chi = {chi}"),
            };
        }
        None => {}
    }
}

fn invariant_report(command: &str, input: &str, inv: &SeifertInvariant) -> Result<Report, Error> {
    Report::new(command, input).with_invariant(inv)
}

fn run(command: Command) -> Result<Output, Error> {
    let mut text = String::new();
    let report = match command {
        Command::ClassifyOrbifold { orbifold } => {
            let orb = parse_orbifold(&orbifold)?;
            let _ = writeln!(text, "orbifold: {orb}");
            let _ = writeln!(text, "chi: {}", orb.chi());
            let mut details = json!({ "bad": Value::Null, "elliptic_family": Value::Null, "parabolic_family": Value::Null });
            if orb.is_closed() {
                let class = orb.geometry_class()?;
                let elliptic = orb.elliptic_family()?.map(|f| f.tag());
                let parabolic = orb.parabolic_family()?.map(|f| f.tag().to_string());
                let _ = writeln!(text, "geometry: {}", class.name());
                if let Some(f) = elliptic.as_ref().or(parabolic.as_ref()) {
                    let _ = writeln!(text, "family: {f}");
                }
                details = json!({
                    "bad": orb.is_bad()?,
                    "elliptic_family": elliptic,
                    "parabolic_family": parabolic,
                });
            } else {
                let _ = writeln!(text, "geometry: not classified (boundary)");
            }
            Report::new("classify-orbifold", &orbifold)
                .with_orbifold(&orb)
                .with_details(details)
        }
        Command::Ut { orbifold } => {
            let orb = parse_orbifold(&orbifold)?;
            let ut = orb.unit_tangent_invariant()?;
            let _ = writeln!(text, "UT({orb}) = {ut}");
            let _ = writeln!(text, "euler number: {}", ut.euler_number()?);
            invariant_report("ut", &orbifold, &ut)?
                .with_details(json!({ "unit_tangent": print_invariant(&ut) }))
        }
        Command::Normalize { invariant } => {
            let inv = parse_invariant(&invariant)?;
            let canon = inv.normalize();
            let _ = writeln!(text, "{}", canon.to_invariant());
            let pairs: Vec<Value> = canon.pairs.iter().map(|p| json!([p.alpha, p.beta])).collect();
            invariant_report("normalize", &invariant, &inv)?.with_details(json!({
                "canonical": {
                    "genus_code": canon.genus_code,
                    "boundary_count": canon.boundary_count,
                    "pairs": pairs,
                    "b": canon.b,
                }
            }))
        }
        Command::Euler { invariant } => {
            let inv = parse_invariant(&invariant)?;
            let e = inv.euler_number()?;
            let _ = writeln!(text, "{e}");
            invariant_report("euler", &invariant, &inv)?
        }
        Command::Hvf { invariant } => {
            let inv = parse_invariant(&invariant)?;
            let decision = decide_hvf(&inv)?;
            describe_decision(&mut text, &decision);
            invariant_report("hvf", &invariant, &inv)?
        }
        Command::Quotient { invariant, d } => {
            let inv = parse_invariant(&invariant)?;
            let q = inv.fiberwise_quotient(d)?;
            let _ = writeln!(text, "{q}");
            let _ = writeln!(text, "normalized: {}", q.normalize().to_invariant());
            invariant_report("quotient", &invariant, &inv)?.with_details(json!({
                "d": d,
                "quotient": print_invariant(&q),
                "normalized_quotient": print_invariant(&q.normalize().to_invariant()),
            }))
        }
        Command::Lens { invariant } => {
            let inv = parse_invariant(&invariant)?;
            let lens = lens_of_fibering(&inv)?;
            let _ = writeln!(text, "{lens}");
            let _ = writeln!(
                text,
                "fibering has a horizontal vector field: {}",
                if lens.has_hvf_fibering() { "yes" } else { "no" }
            );
            invariant_report("lens", &invariant, &inv)?
        }
        Command::LensClassify { p, q } => {
            let case = classify_lens(p, q)?;
            let lens = MarkedLens::new(p, q)?;
            let witness = match &case {
                LensCase::ExactlyOne { witness } => Some(print_invariant(witness)),
                _ => None,
            };
            match &witness {
                Some(w) => {
                    let _ = writeln!(text, "{}: witness {w}", case.name());
                }
                None => {
                    let _ = writeln!(text, "{}", case.name());
                }
            }
            let mut report = Report::new("lens-classify", &format!("{p} {q}"))
                .with_details(json!({ "case": case.name(), "witness": witness }));
            report.lens = Some(lens_json(&lens));
            report
        }
        Command::LensEqual { p1, q1, p2, q2, relation } => {
            let a = MarkedLens::new(p1, q1)?;
            let b = MarkedLens::new(p2, q2)?;
            let result = match relation {
                Relation::Marked => a.marked_eq(&b),
                Relation::Oriented => a.oriented_diffeomorphic(&b),
                Relation::Homeo => a.homeomorphic(&b),
            };
            let _ = writeln!(text, "{result}");
            Report::new("lens-equal", &format!("{p1} {q1} {p2} {q2}")).with_details(json!({
                "relation": relation.name(),
                "first": lens_json(&a),
                "second": lens_json(&b),
                "result": result,
            }))
        }
        Command::EnumerateLens { p, q, bound } => {
            if !(1..=MAX_ENUMERATION_BOUND).contains(&bound) {
                return Err(Error::Parse(seifert_core::ParseError {
                    position: 0,
                    message: format!("bound must be in 1..={MAX_ENUMERATION_BOUND}, got {bound}"),
                }));
            }
            let target = MarkedLens::new(p, q)?;
            let found = enumerate_lens_fiberings(target, bound)?;
            let mut listed = Vec::with_capacity(found.len());
            for inv in &found {
                let has = decide_hvf(inv)?.exists;
                let _ = writeln!(text, "{inv}  hvf: {}", if has { "yes" } else { "no" });
                listed.push(json!({ "invariant": print_invariant(inv), "hvf": has }));
            }
            let mut report = Report::new("enumerate-lens", &format!("{p} {q} {bound}"))
                .with_details(json!({ "bound": bound, "count": found.len(), "fiberings": listed }));
            report.lens = Some(lens_json(&target));
            report
        }
        Command::Homotopy { invariant } => {
            let inv = parse_invariant(&invariant)?;
            let catalog = homotopy_components(&inv)?;
            let _ = writeln!(text, "degrees: {}", catalog.degrees);
            let _ = writeln!(text, "cohomology rank: {}", catalog.cohomology_rank);
            let _ = writeln!(text, "unique up to homotopy: {}", catalog.unique_up_to_homotopy);
            let mut report = invariant_report("homotopy", &invariant, &inv)?;
            report.homotopy = Some(catalog_json(&catalog));
            report
        }
        Command::BoundaryHvf { invariant } => {
            let inv = parse_invariant(&invariant)?;
            let decision = decide_hvf_boundary(&inv)?;
            let tangent = boundary_tangency(&inv)?;
            describe_decision(&mut text, &decision);
            let _ = writeln!(text, "tangent to the boundary possible: {}", if tangent { "yes" } else { "no" });
            let mut report = invariant_report("boundary-hvf", &invariant, &inv)?;
            report.hvf = Some(hvf_report(&decision));
            let lcm_note = match congruence_system(inv.pairs())? {
                Ok(c) if decision.exists => json!(c.modulus()),
                _ => Value::Null,
            };
            report.with_details(json!({ "boundary_tangency": tangent, "degree_period": lcm_note }))
        }
        Command::Alternates { invariant } => {
            let inv = parse_invariant(&invariant)?;
            if !inv.is_closed() {
                return Err(Error::BoundaryNotSupported);
            }
            let alts = inv.alternate_fiberings();
            if alts.is_empty() {
                let _ = writeln!(text, "none: the fibering is unique");
            }
            let mut listed = Vec::new();
            for alt in &alts {
                match alt.invariant() {
                    Some(other) => {
                        let _ = writeln!(text, "{}: {other}", alt.tag());
                    }
                    None => {
                        let _ = writeln!(
                            text,
                            "{}: a lens space with infinitely many fiberings (see enumerate-lens)",
                            alt.tag()
                        );
                    }
                }
                listed.push(json!({
                    "kind": alt.tag(),
                    "invariant": alt.invariant().map(print_invariant),
                }));
            }
            invariant_report("alternates", &invariant, &inv)?.with_details(json!({ "alternates": listed }))
        }
    };
    Ok(Output { text, report })
}
