//! Seifert invariants and the moves that preserve the fibering.

use crate::error::{Error, Result};
use crate::exactmath::{gcd, Rational};
use crate::orbifold::Orbifold;

/// One `(alpha, beta)` entry of an invariant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiberPair {
    pub alpha: i64,
    pub beta: i64,
}

impl FiberPair {
    pub const fn new(alpha: i64, beta: i64) -> Self {
        FiberPair { alpha, beta }
    }
}

impl From<(i64, i64)> for FiberPair {
    fn from((alpha, beta): (i64, i64)) -> Self {
        FiberPair { alpha, beta }
    }
}

/// `(g, n; (a_1, b_1), ..., (a_k, b_k))` for an oriented total space.
///
/// `genus_code < 0` encodes a base with `|genus_code|` crosscaps and
/// `boundary_count = 0` a closed manifold.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeifertInvariant {
    genus_code: i64,
    boundary_count: u32,
    pairs: Vec<FiberPair>,
}

/// The normal form: betas reduced into `[0, alpha)`, integer pairs dropped,
/// pairs sorted. Closed invariants keep the accumulated shift in `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub genus_code: i64,
    pub boundary_count: u32,
    pub pairs: Vec<FiberPair>,
    pub b: Option<i64>,
}

impl CanonicalForm {
    /// The canonical pairs followed by `(1, b)` when `b` is non-zero.
    pub fn to_invariant(&self) -> SeifertInvariant {
        let mut pairs = self.pairs.clone();
        if let Some(b) = self.b.filter(|&b| b != 0) {
            pairs.push(FiberPair::new(1, b));
        }
        SeifertInvariant {
            genus_code: self.genus_code,
            boundary_count: self.boundary_count,
            pairs,
        }
    }
}

/// An exceptional alternative fibering of the same manifold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlternateFibering {
    /// Genus zero with at most two exceptional fibers: a lens space, which
    /// has infinitely many fiberings. See `lens::enumerate_lens_fiberings`.
    LensFamily,
    /// `(0; (2,1), (2,-1), (1, b))` and its partner over the projective plane.
    LensDual(SeifertInvariant),
    /// `(0; (2,1), (2,-1), (a, b))` with `a > 1` and its partner over the
    /// projective plane.
    PrismDual(SeifertInvariant),
    /// The unit tangent bundles of the 2222 orbifold and of the Klein bottle.
    KleinUt(SeifertInvariant),
}

impl AlternateFibering {
    pub fn tag(&self) -> &'static str {
        match self {
            AlternateFibering::LensFamily => "LensFamily",
            AlternateFibering::LensDual(_) => "LensDual",
            AlternateFibering::PrismDual(_) => "PrismDual",
            AlternateFibering::KleinUt(_) => "KleinUT",
        }
    }

    pub fn invariant(&self) -> Option<&SeifertInvariant> {
        match self {
            AlternateFibering::LensFamily => None,
            AlternateFibering::LensDual(inv)
            | AlternateFibering::PrismDual(inv)
            | AlternateFibering::KleinUt(inv) => Some(inv),
        }
    }
}

impl SeifertInvariant {
    pub fn new(genus_code: i64, boundary_count: u32, pairs: Vec<FiberPair>) -> Result<Self> {
        if u32::try_from(genus_code.unsigned_abs()).is_err() {
            return Err(Error::GenusOutOfRange(genus_code));
        }
        for (index, p) in pairs.iter().enumerate() {
            if p.alpha < 1 {
                return Err(Error::InvalidAlpha { index, alpha: p.alpha });
            }
            if gcd(p.alpha, p.beta) != 1 {
                return Err(Error::PairNotCoprime {
                    index,
                    alpha: p.alpha,
                    beta: p.beta,
                });
            }
        }
        Ok(SeifertInvariant {
            genus_code,
            boundary_count,
            pairs,
        })
    }

    /// Shorthand for tests and examples.
    pub fn from_pairs(genus_code: i64, boundary_count: u32, pairs: &[(i64, i64)]) -> Result<Self> {
        Self::new(
            genus_code,
            boundary_count,
            pairs.iter().copied().map(FiberPair::from).collect(),
        )
    }

    pub fn closed(genus_code: i64, pairs: &[(i64, i64)]) -> Result<Self> {
        Self::from_pairs(genus_code, 0, pairs)
    }

    pub fn genus_code(&self) -> i64 {
        self.genus_code
    }

    pub fn boundary_count(&self) -> u32 {
        self.boundary_count
    }

    pub fn pairs(&self) -> &[FiberPair] {
        &self.pairs
    }

    pub fn is_closed(&self) -> bool {
        self.boundary_count == 0
    }

    pub fn normalize(&self) -> CanonicalForm {
        let mut b: i128 = 0;
        let mut pairs = Vec::with_capacity(self.pairs.len());
        for p in &self.pairs {
            b += p.beta.div_euclid(p.alpha) as i128;
            if p.alpha > 1 {
                pairs.push(FiberPair::new(p.alpha, p.beta.rem_euclid(p.alpha)));
            }
        }
        pairs.sort_unstable();
        let b = if self.is_closed() {
            // Each term is at most |beta|, so only the sum of many huge betas
            // can leave i64; saturating keeps normalize total.
            Some(b.clamp(i64::MIN as i128, i64::MAX as i128) as i64)
        } else {
            None
        };
        CanonicalForm {
            genus_code: self.genus_code,
            boundary_count: self.boundary_count,
            pairs,
            b,
        }
    }

    /// Whether the two invariants describe isomorphic fiberings.
    pub fn same_fibering(&self, other: &SeifertInvariant) -> Result<bool> {
        if self.is_closed() != other.is_closed() {
            return Err(Error::MixedBoundary);
        }
        Ok(self.normalize() == other.normalize())
    }

    /// `e = -sum(beta_i / alpha_i)`, defined only for closed invariants.
    pub fn euler_number(&self) -> Result<Rational> {
        if !self.is_closed() {
            return Err(Error::BoundaryNotSupported);
        }
        let mut sum = Rational::ZERO;
        for p in &self.pairs {
            sum = sum.checked_add(Rational::new(p.beta, p.alpha)?)?;
        }
        sum.checked_neg()
    }

    /// The same fibering with the orientation of the total space reversed.
    pub fn reverse_orientation(&self) -> Result<SeifertInvariant> {
        if !self.is_closed() {
            return Err(Error::BoundaryNotSupported);
        }
        let pairs = self
            .pairs
            .iter()
            .map(|p| {
                let beta = p.beta.checked_neg().ok_or(Error::Overflow)?;
                Ok(FiberPair::new(p.alpha, beta))
            })
            .collect::<Result<_>>()?;
        Ok(SeifertInvariant { pairs, ..self.clone() })
    }

    /// The quotient by the order-`|d|` subgroup of the circle action, with
    /// orientation reversed when `d < 0`: every beta is multiplied by `d`.
    pub fn fiberwise_quotient(&self, d: i64) -> Result<SeifertInvariant> {
        if d == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut pairs = Vec::with_capacity(self.pairs.len());
        for (index, p) in self.pairs.iter().enumerate() {
            if gcd(d, p.alpha) != 1 {
                return Err(Error::DegreeNotCoprime {
                    index,
                    alpha: p.alpha,
                    degree: d,
                });
            }
            let beta = p.beta.checked_mul(d).ok_or(Error::Overflow)?;
            pairs.push(FiberPair::new(p.alpha, beta));
        }
        Ok(SeifertInvariant { pairs, ..self.clone() })
    }

    pub fn base_orbifold(&self) -> Orbifold {
        let cones: Vec<i64> = self.pairs.iter().map(|p| p.alpha).collect();
        Orbifold::from_genus_code(self.genus_code, &cones, self.boundary_count)
            .expect("validated invariants decode to valid orbifolds")
    }

    /// The other Seifert fiberings of the same oriented manifold, if any.
    pub fn alternate_fiberings(&self) -> Vec<AlternateFibering> {
        let mut out = Vec::new();
        if !self.is_closed() {
            return out;
        }
        let canon = self.normalize();
        let b = canon.b.unwrap_or(0);
        let sign_flip = |alpha: i64, beta: i64| -> Option<FiberPair> {
            // beta' / alpha' = -alpha / beta with alpha' > 0.
            let alpha2 = beta.checked_abs()?;
            let beta2 = alpha.checked_mul(-beta.signum())?;
            Some(FiberPair::new(alpha2, beta2))
        };
        match canon.genus_code {
            0 => {
                if canon.pairs.len() <= 2 {
                    out.push(AlternateFibering::LensFamily);
                }
                let twos = canon.pairs.iter().filter(|p| **p == FiberPair::new(2, 1)).count();
                if twos >= 2 {
                    let mut rest = canon.pairs.clone();
                    for _ in 0..2 {
                        let i = rest.iter().position(|p| *p == FiberPair::new(2, 1)).unwrap();
                        rest.remove(i);
                    }
                    let third = match rest.as_slice() {
                        [] => b.checked_add(1).map(|beta| FiberPair::new(1, beta)),
                        [p] => b
                            .checked_add(1)
                            .and_then(|k| k.checked_mul(p.alpha))
                            .and_then(|k| k.checked_add(p.beta))
                            .map(|beta| FiberPair::new(p.alpha, beta)),
                        _ => None,
                    };
                    if let Some(t) = third.filter(|t| t.beta != 0) {
                        if let Some(dual) = sign_flip(t.alpha, t.beta) {
                            let inv = SeifertInvariant::new(-1, 0, vec![dual])
                                .expect("dual pair stays coprime");
                            out.push(if t.alpha == 1 {
                                AlternateFibering::LensDual(inv)
                            } else {
                                AlternateFibering::PrismDual(inv)
                            });
                        }
                    }
                    if canon.pairs == [FiberPair::new(2, 1); 4] && b == -2 {
                        out.push(AlternateFibering::KleinUt(SeifertInvariant {
                            genus_code: -2,
                            boundary_count: 0,
                            pairs: Vec::new(),
                        }));
                    }
                }
            }
            -1 => {
                let single = match canon.pairs.as_slice() {
                    [] => Some(FiberPair::new(1, b)),
                    [p] => b
                        .checked_mul(p.alpha)
                        .and_then(|k| k.checked_add(p.beta))
                        .map(|beta| FiberPair::new(p.alpha, beta)),
                    _ => None,
                };
                if let Some(s) = single.filter(|s| s.beta != 0) {
                    if let Some(third) = sign_flip(s.alpha, s.beta) {
                        let inv = SeifertInvariant::new(
                            0,
                            0,
                            vec![FiberPair::new(2, 1), FiberPair::new(2, -1), third],
                        )
                        .expect("dual pair stays coprime");
                        out.push(if third.alpha == 1 {
                            AlternateFibering::LensDual(inv)
                        } else {
                            AlternateFibering::PrismDual(inv)
                        });
                    }
                }
            }
            -2 => {
                if canon.pairs.is_empty() && b == 0 {
                    out.push(AlternateFibering::KleinUt(
                        SeifertInvariant::closed(0, &[(2, 1), (2, 1), (2, -1), (2, -1)]).unwrap(),
                    ));
                }
            }
            _ => {}
        }
        out
    }
}
