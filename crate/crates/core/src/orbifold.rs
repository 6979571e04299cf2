//! Closed and bounded 2-orbifolds without reflector lines.

use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::invariant::{FiberPair, SeifertInvariant};

/// A surface with cone points and possibly boundary circles.
///
/// `genus` counts handles when `orientable` and crosscaps otherwise. Cone
/// orders are kept sorted and order-1 points are dropped on construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Orbifold {
    orientable: bool,
    genus: u32,
    cone_orders: Vec<i64>,
    boundary_count: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeometryClass {
    Bad,
    Elliptic,
    Parabolic,
    Hyperbolic,
}

impl GeometryClass {
    pub fn name(&self) -> &'static str {
        match self {
            GeometryClass::Bad => "bad",
            GeometryClass::Elliptic => "elliptic",
            GeometryClass::Parabolic => "parabolic",
            GeometryClass::Hyperbolic => "hyperbolic",
        }
    }
}

/// The four families of good orbifolds with positive Euler characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EllipticFamily {
    /// Sphere with two cone points of equal order `p` (`p = 1` is the plain sphere).
    Pp(i64),
    /// Sphere with cone orders 2, 2, p.
    TwoTwoP(i64),
    /// Sphere with cone orders 2, 3, q for q in 3..=5.
    TwoThreeQ(i64),
    /// Projective plane with at most one cone point (`p = 1` means none).
    PCross(i64),
}

impl EllipticFamily {
    pub fn tag(&self) -> String {
        match self {
            EllipticFamily::Pp(p) => format!("pp(p={p})"),
            EllipticFamily::TwoTwoP(p) => format!("22p(p={p})"),
            EllipticFamily::TwoThreeQ(q) => format!("23q(q={q})"),
            EllipticFamily::PCross(p) => format!("px(p={p})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParabolicFamily {
    Torus,
    KleinBottle,
    P236,
    P244,
    P333,
    P2222,
    P22x,
}

impl ParabolicFamily {
    pub const ALL: [ParabolicFamily; 7] = [
        ParabolicFamily::Torus,
        ParabolicFamily::KleinBottle,
        ParabolicFamily::P236,
        ParabolicFamily::P244,
        ParabolicFamily::P333,
        ParabolicFamily::P2222,
        ParabolicFamily::P22x,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            ParabolicFamily::Torus => "T2",
            ParabolicFamily::KleinBottle => "K",
            ParabolicFamily::P236 => "236",
            ParabolicFamily::P244 => "244",
            ParabolicFamily::P333 => "333",
            ParabolicFamily::P2222 => "2222",
            ParabolicFamily::P22x => "22x",
        }
    }

    pub fn orbifold(&self) -> Orbifold {
        let build = |orientable, genus, cones: &[i64]| {
            Orbifold::new(orientable, genus, cones, 0).expect("parabolic orbifolds are valid")
        };
        match self {
            ParabolicFamily::Torus => build(true, 1, &[]),
            ParabolicFamily::KleinBottle => build(false, 2, &[]),
            ParabolicFamily::P236 => build(true, 0, &[2, 3, 6]),
            ParabolicFamily::P244 => build(true, 0, &[2, 4, 4]),
            ParabolicFamily::P333 => build(true, 0, &[3, 3, 3]),
            ParabolicFamily::P2222 => build(true, 0, &[2, 2, 2, 2]),
            ParabolicFamily::P22x => build(false, 1, &[2, 2]),
        }
    }
}

impl Orbifold {
    pub fn new(orientable: bool, genus: u32, cone_orders: &[i64], boundary_count: u32) -> Result<Self> {
        if !orientable && genus == 0 {
            return Err(Error::InvalidGenus);
        }
        let mut cones = Vec::with_capacity(cone_orders.len());
        for &a in cone_orders {
            if a < 1 {
                return Err(Error::InvalidConeOrder(a));
            }
            if a > 1 {
                cones.push(a);
            }
        }
        cones.sort_unstable();
        Ok(Orbifold {
            orientable,
            genus,
            cone_orders: cones,
            boundary_count,
        })
    }

    pub fn sphere(cone_orders: &[i64]) -> Result<Self> {
        Self::new(true, 0, cone_orders, 0)
    }

    pub fn projective_plane(cone_orders: &[i64]) -> Result<Self> {
        Self::new(false, 1, cone_orders, 0)
    }

    pub fn torus() -> Self {
        ParabolicFamily::Torus.orbifold()
    }

    pub fn klein_bottle() -> Self {
        ParabolicFamily::KleinBottle.orbifold()
    }

    pub fn annulus() -> Self {
        Orbifold {
            orientable: true,
            genus: 0,
            cone_orders: Vec::new(),
            boundary_count: 2,
        }
    }

    pub fn mobius_band() -> Self {
        Orbifold {
            orientable: false,
            genus: 1,
            cone_orders: Vec::new(),
            boundary_count: 1,
        }
    }

    /// Decodes the signed genus used in Seifert invariants: `g >= 0` is an
    /// orientable surface of genus `g`, `g < 0` has `|g|` crosscaps.
    pub fn from_genus_code(genus_code: i64, cone_orders: &[i64], boundary_count: u32) -> Result<Self> {
        let genus = u32::try_from(genus_code.unsigned_abs())
            .map_err(|_| Error::GenusOutOfRange(genus_code))?;
        Self::new(genus_code >= 0, genus, cone_orders, boundary_count)
    }

    pub fn genus_code(&self) -> i64 {
        if self.orientable {
            self.genus as i64
        } else {
            -(self.genus as i64)
        }
    }

    pub fn orientable(&self) -> bool {
        self.orientable
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn cone_orders(&self) -> &[i64] {
        &self.cone_orders
    }

    pub fn boundary_count(&self) -> u32 {
        self.boundary_count
    }

    pub fn is_closed(&self) -> bool {
        self.boundary_count == 0
    }

    fn require_closed(&self) -> Result<()> {
        if self.is_closed() {
            Ok(())
        } else {
            Err(Error::BoundaryNotSupported)
        }
    }

    /// Euler characteristic of the underlying surface.
    pub fn chi_underlying(&self) -> i64 {
        let g = self.genus as i64;
        let n = self.boundary_count as i64;
        if self.orientable {
            2 - 2 * g - n
        } else {
            2 - g - n
        }
    }

    /// Orbifold Euler characteristic `chi(S) - sum(1 - 1/a)`.
    pub fn chi(&self) -> Rational {
        let mut chi = Rational::from_integer(self.chi_underlying());
        for &a in &self.cone_orders {
            let defect = Rational::new(a - 1, a).expect("cone orders are positive");
            chi = chi.checked_sub(defect).expect("orbifold chi stays small");
        }
        chi
    }

    fn is_closed_sphere(&self) -> bool {
        self.orientable && self.genus == 0 && self.boundary_count == 0
    }

    fn is_closed_projective_plane(&self) -> bool {
        !self.orientable && self.genus == 1 && self.boundary_count == 0
    }

    /// True exactly for the teardrop and the spindles with unequal orders.
    pub fn is_bad(&self) -> Result<bool> {
        self.require_closed()?;
        Ok(self.is_closed_sphere()
            && match self.cone_orders.as_slice() {
                [_] => true,
                [p, q] => p != q,
                _ => false,
            })
    }

    pub fn geometry_class(&self) -> Result<GeometryClass> {
        if self.is_bad()? {
            return Ok(GeometryClass::Bad);
        }
        Ok(match self.chi().signum() {
            1 => GeometryClass::Elliptic,
            0 => GeometryClass::Parabolic,
            _ => GeometryClass::Hyperbolic,
        })
    }

    pub fn elliptic_family(&self) -> Result<Option<EllipticFamily>> {
        self.require_closed()?;
        if self.is_closed_sphere() {
            return Ok(match self.cone_orders.as_slice() {
                [] => Some(EllipticFamily::Pp(1)),
                [p, q] if p == q => Some(EllipticFamily::Pp(*p)),
                [2, 2, p] => Some(EllipticFamily::TwoTwoP(*p)),
                [2, 3, q] if (3..=5).contains(q) => Some(EllipticFamily::TwoThreeQ(*q)),
                _ => None,
            });
        }
        if self.is_closed_projective_plane() {
            return Ok(match self.cone_orders.as_slice() {
                [] => Some(EllipticFamily::PCross(1)),
                [p] => Some(EllipticFamily::PCross(*p)),
                _ => None,
            });
        }
        Ok(None)
    }

    pub fn parabolic_family(&self) -> Result<Option<ParabolicFamily>> {
        self.require_closed()?;
        Ok(ParabolicFamily::ALL
            .into_iter()
            .find(|family| family.orbifold() == *self))
    }

    /// The 2-torus or the Klein bottle, with no cone points and no boundary.
    pub fn is_torus_or_klein(&self) -> bool {
        self.is_closed()
            && self.cone_orders.is_empty()
            && ((self.orientable && self.genus == 1) || (!self.orientable && self.genus == 2))
    }

    /// Seifert invariant of the unit tangent bundle:
    /// `(g; (1, n - chi(S)), (a_1, -1), ..., (a_n, -1))`.
    ///
    /// The integer pair is omitted when it is `(1, 0)`.
    pub fn unit_tangent_invariant(&self) -> Result<SeifertInvariant> {
        self.require_closed()?;
        let n = self.cone_orders.len() as i64;
        let shift = n - self.chi_underlying();
        let mut pairs = Vec::with_capacity(self.cone_orders.len() + 1);
        if shift != 0 {
            pairs.push(FiberPair::new(1, shift));
        }
        pairs.extend(self.cone_orders.iter().map(|&a| FiberPair::new(a, -1)));
        SeifertInvariant::new(self.genus_code(), 0, pairs)
    }
}
