//! Deciding whether a Seifert fibering carries a horizontal vector field.
//!
//! A closed fibering `M -> S` has one exactly when `S` is the torus or the
//! Klein bottle, or when some non-zero `d` satisfies
//! `d * beta_i = -1 (mod alpha_i)` for every pair and `d * e(M) = chi(S)`.
//! With boundary the Euler condition disappears.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactmath::{crt_merge, mod_inverse, Congruence, Rational};
use crate::invariant::{FiberPair, SeifertInvariant};

/// The allowable covering degrees of a fibering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DegreeSet {
    Empty,
    /// One pinned, non-zero degree.
    Single(i64),
    /// `{ d : d = residue (mod modulus) }`, without 0 unless `include_zero`.
    Progression {
        residue: i64,
        modulus: i64,
        include_zero: bool,
    },
    /// Only the degree-0 classes coming from a horizontal section.
    Zero,
}

impl DegreeSet {
    pub fn contains(&self, d: i64) -> bool {
        match *self {
            DegreeSet::Empty => false,
            DegreeSet::Single(s) => d == s,
            DegreeSet::Progression {
                residue,
                modulus,
                include_zero,
            } => (d != 0 || include_zero) && d.rem_euclid(modulus) == residue,
            DegreeSet::Zero => d == 0,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, DegreeSet::Empty)
    }

    fn progression(c: Congruence) -> Self {
        DegreeSet::Progression {
            residue: c.residue(),
            modulus: c.modulus(),
            include_zero: false,
        }
    }
}

impl fmt::Display for DegreeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeSet::Empty => write!(f, "empty"),
            DegreeSet::Single(d) => write!(f, "{{{d}}}"),
            DegreeSet::Progression {
                residue,
                modulus,
                include_zero,
            } => {
                write!(f, "d = {residue} mod {modulus}")?;
                if !include_zero && residue % modulus == 0 {
                    write!(f, ", d != 0")?;
                }
                Ok(())
            }
            DegreeSet::Zero => write!(f, "{{0}}"),
        }
    }
}

/// How a horizontal vector field arises.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mechanism {
    /// A nowhere-zero field on the base lifts; the base has no cone points
    /// and is the torus, the Klein bottle, or has boundary.
    SurfaceSection,
    /// A fiberwise covering of the unit tangent bundle of the base.
    Covering {
        degrees: DegreeSet,
        target: SeifertInvariant,
    },
}

/// Why no horizontal vector field exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    /// The congruences of pairs `first < second` have no common solution.
    CongruenceClash { first: usize, second: usize },
    /// The congruences are solvable but no non-zero solution satisfies
    /// `d * euler = chi`. `required` is `chi / euler` when `euler != 0`.
    EulerMismatch {
        chi: Rational,
        euler: Rational,
        required: Option<Rational>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HvfDecision {
    pub exists: bool,
    pub mechanisms: Vec<Mechanism>,
    pub obstruction: Option<Obstruction>,
}

impl HvfDecision {
    /// The degree set of the covering mechanism, or `Empty`.
    pub fn degrees(&self) -> DegreeSet {
        self.covering().map_or(DegreeSet::Empty, |(d, _)| d)
    }

    pub fn covering(&self) -> Option<(DegreeSet, &SeifertInvariant)> {
        self.mechanisms.iter().find_map(|m| match m {
            Mechanism::Covering { degrees, target } => Some((*degrees, target)),
            Mechanism::SurfaceSection => None,
        })
    }

    pub fn has_section(&self) -> bool {
        self.mechanisms.contains(&Mechanism::SurfaceSection)
    }
}

/// The class of `d` with `d * beta = -1 (mod alpha)`.
pub fn pair_congruence(p: FiberPair) -> Result<Congruence> {
    let inv = mod_inverse(p.beta, p.alpha)?;
    Congruence::new(-inv, p.alpha)
}

/// Merges the per-pair congruences in input order. On failure reports the
/// first pair `j` that breaks the system together with the smallest `i < j`
/// it clashes with.
pub fn congruence_system(pairs: &[FiberPair]) -> Result<std::result::Result<Congruence, (usize, usize)>> {
    let classes = pairs.iter().map(|&p| pair_congruence(p)).collect::<Result<Vec<_>>>()?;
    let mut acc = Congruence::ALL;
    for (j, &c) in classes.iter().enumerate() {
        match crt_merge(acc, c)? {
            Some(merged) => acc = merged,
            None => {
                // Congruences that are pairwise compatible are jointly
                // compatible, so some earlier pair clashes with this one.
                for (i, &earlier) in classes[..j].iter().enumerate() {
                    if crt_merge(earlier, c)?.is_none() {
                        return Ok(Err((i, j)));
                    }
                }
                unreachable!("pairwise compatible congruences always merge");
            }
        }
    }
    Ok(Ok(acc))
}

fn closed_degrees(inv: &SeifertInvariant) -> Result<(DegreeSet, Option<Obstruction>)> {
    let class = match congruence_system(inv.pairs())? {
        Ok(c) => c,
        Err((first, second)) => {
            return Ok((DegreeSet::Empty, Some(Obstruction::CongruenceClash { first, second })))
        }
    };
    let euler = inv.euler_number()?;
    let chi = inv.base_orbifold().chi();
    let mismatch = |required| Obstruction::EulerMismatch { chi, euler, required };
    if euler.is_zero() {
        return Ok(if chi.is_zero() {
            (DegreeSet::progression(class), None)
        } else {
            (DegreeSet::Empty, Some(mismatch(None)))
        });
    }
    let ratio = chi.checked_div(euler)?;
    match ratio.to_integer() {
        Some(d) if d != 0 && class.contains(d) => Ok((DegreeSet::Single(d), None)),
        _ => Ok((DegreeSet::Empty, Some(mismatch(Some(ratio))))),
    }
}

/// The set of non-zero degrees `d` for which the fibering covers the unit
/// tangent bundle of its base with degree `d`.
pub fn allowable_degrees(inv: &SeifertInvariant) -> Result<DegreeSet> {
    if inv.is_closed() {
        return Ok(closed_degrees(inv)?.0);
    }
    Ok(match congruence_system(inv.pairs())? {
        Ok(c) => DegreeSet::progression(c),
        Err(_) => DegreeSet::Empty,
    })
}

/// `(g, n; (a_1, -1), ..., (a_k, -1))` in canonical form: the covering
/// target for a fibering with boundary.
fn bounded_unit_tangent(inv: &SeifertInvariant) -> SeifertInvariant {
    let pairs = inv.pairs().iter().map(|p| FiberPair::new(p.alpha, -1)).collect();
    SeifertInvariant::new(inv.genus_code(), inv.boundary_count(), pairs)
        .expect("(alpha, -1) is always coprime")
        .normalize()
        .to_invariant()
}

/// Decides a closed fibering.
pub fn decide_hvf(inv: &SeifertInvariant) -> Result<HvfDecision> {
    if !inv.is_closed() {
        return Err(Error::BoundaryNotSupported);
    }
    let base = inv.base_orbifold();
    let mut mechanisms = Vec::new();
    if base.is_torus_or_klein() {
        mechanisms.push(Mechanism::SurfaceSection);
    }
    let (degrees, obstruction) = closed_degrees(inv)?;
    if !degrees.is_empty() {
        let target = base.unit_tangent_invariant()?.normalize().to_invariant();
        mechanisms.push(Mechanism::Covering { degrees, target });
    }
    let exists = !mechanisms.is_empty();
    Ok(HvfDecision {
        exists,
        mechanisms,
        obstruction: if exists { None } else { obstruction },
    })
}

/// Decides a fibering with non-empty boundary.
pub fn decide_hvf_boundary(inv: &SeifertInvariant) -> Result<HvfDecision> {
    if inv.is_closed() {
        return Err(Error::BoundaryRequired);
    }
    let mut mechanisms = Vec::new();
    if inv.base_orbifold().cone_orders().is_empty() {
        mechanisms.push(Mechanism::SurfaceSection);
    }
    let mut obstruction = None;
    match congruence_system(inv.pairs())? {
        Ok(c) => mechanisms.push(Mechanism::Covering {
            degrees: DegreeSet::progression(c),
            target: bounded_unit_tangent(inv),
        }),
        Err((first, second)) => obstruction = Some(Obstruction::CongruenceClash { first, second }),
    }
    let exists = !mechanisms.is_empty();
    Ok(HvfDecision {
        exists,
        mechanisms,
        obstruction: if exists { None } else { obstruction },
    })
}

/// Either decision, depending on whether the invariant has boundary.
pub fn decide(inv: &SeifertInvariant) -> Result<HvfDecision> {
    if inv.is_closed() {
        decide_hvf(inv)
    } else {
        decide_hvf_boundary(inv)
    }
}

/// Whether a horizontal vector field can be tangent to (equivalently
/// transverse to) the boundary: only over the annulus and the Mobius band.
pub fn boundary_tangency(inv: &SeifertInvariant) -> Result<bool> {
    if inv.is_closed() {
        return Err(Error::BoundaryRequired);
    }
    let base = inv.base_orbifold();
    let no_cones = base.cone_orders().is_empty();
    let annulus = base.orientable() && base.genus() == 0 && base.boundary_count() == 2;
    let mobius = !base.orientable() && base.genus() == 1 && base.boundary_count() == 1;
    Ok(no_cones && (annulus || mobius))
}
