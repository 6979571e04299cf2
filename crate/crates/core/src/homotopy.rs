//! Homotopy classes of horizontal vector fields over an oriented base.
//!
//! The components correspond to pairs `(d, phi)` with `d` an allowable degree
//! and `phi` in `H^1` of the underlying surface, which is free of rank `2g`.

use crate::error::{Error, Result};
use crate::hvf::{allowable_degrees, DegreeSet};
use crate::invariant::SeifertInvariant;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentCatalog {
    pub degrees: DegreeSet,
    pub cohomology_rank: u32,
    pub unique_up_to_homotopy: bool,
}

pub fn homotopy_components(inv: &SeifertInvariant) -> Result<ComponentCatalog> {
    if !inv.is_closed() {
        return Err(Error::BoundaryNotSupported);
    }
    if inv.genus_code() < 0 {
        return Err(Error::NonOrientedBase);
    }
    let mut degrees = allowable_degrees(inv)?;
    if inv.base_orbifold().is_torus_or_klein() {
        // A horizontal section contributes the degree-0 classes.
        degrees = match degrees {
            DegreeSet::Progression { residue, modulus, .. } => DegreeSet::Progression {
                residue,
                modulus,
                include_zero: true,
            },
            DegreeSet::Empty => DegreeSet::Zero,
            other => other,
        };
    }
    if degrees.is_empty() {
        return Err(Error::NoHvf);
    }
    let cohomology_rank = u32::try_from(2 * inv.genus_code()).map_err(|_| Error::Overflow)?;
    Ok(ComponentCatalog {
        degrees,
        cohomology_rank,
        unique_up_to_homotopy: matches!(degrees, DegreeSet::Single(_)) && cohomology_rank == 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbifold::Orbifold;

    fn inv(g: i64, pairs: &[(i64, i64)]) -> SeifertInvariant {
        SeifertInvariant::closed(g, pairs).unwrap()
    }

    #[test]
    fn catalog_examples() {
        let ut235 = Orbifold::sphere(&[2, 3, 5]).unwrap().unit_tangent_invariant().unwrap();
        assert_eq!(
            homotopy_components(&ut235).unwrap(),
            ComponentCatalog {
                degrees: DegreeSet::Single(1),
                cohomology_rank: 0,
                unique_up_to_homotopy: true,
            }
        );

        let t3 = homotopy_components(&inv(1, &[(1, 0)])).unwrap();
        assert_eq!(
            t3.degrees,
            DegreeSet::Progression { residue: 0, modulus: 1, include_zero: true }
        );
        assert_eq!(t3.cohomology_rank, 2);
        assert!(!t3.unique_up_to_homotopy);
        assert!((-5..=5).all(|d| t3.degrees.contains(d)));

        // e = 2 and chi = -2 pin d = -1.
        let c = homotopy_components(&inv(2, &[(1, -2)])).unwrap();
        assert_eq!(c.degrees, DegreeSet::Single(-1));
        assert_eq!(c.cohomology_rank, 4);
        assert!(!c.unique_up_to_homotopy);
    }

    #[test]
    fn nil_manifold_over_torus_has_only_degree_zero() {
        let c = homotopy_components(&inv(1, &[(1, 5)])).unwrap();
        assert_eq!(c.degrees, DegreeSet::Zero);
    }

    #[test]
    fn rejections() {
        assert_eq!(homotopy_components(&inv(-2, &[])), Err(Error::NonOrientedBase));
        assert_eq!(homotopy_components(&inv(0, &[(3, 1), (3, 1), (3, 1)])), Err(Error::NoHvf));
        let bounded = SeifertInvariant::from_pairs(0, 1, &[]).unwrap();
        assert_eq!(homotopy_components(&bounded), Err(Error::BoundaryNotSupported));
    }
}
