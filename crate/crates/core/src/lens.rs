//! Marked lens spaces `L(p, q)` and their Seifert fiberings.
//!
//! A fibering `(0; (a1, b1), (a2, b2))` glues two fibered solid tori and
//! gives the marked lens space with `p = a1*b2 + a2*b1` and
//! `q = a1'*b2 + a2*b1'`, where `a_i*b_i' - a_i'*b_i = 1`.
//!
//! Marked equality allows `q -> q^-1 (mod p)` (swapping the labels of the two
//! solid tori). Reversing both cores sends `(p, q)` to `(-p, -q)` and
//! reversing the orientation sends `(p, q)` to `(-p, q)`.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactmath::{ext_gcd, gcd, mod_inverse};
use crate::hvf::decide_hvf;
use crate::invariant::{AlternateFibering, FiberPair, SeifertInvariant};

/// `L(p, q)` with `q` reduced into `[0, |p|)`, or `q = 1` when `p = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedLens {
    p: i64,
    q: i64,
}

impl MarkedLens {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if gcd(p, q) != 1 {
            return Err(Error::LensNotCoprime { p, q });
        }
        let q = if p == 0 { 1 } else { q.rem_euclid(p.checked_abs().ok_or(Error::Overflow)?) };
        Ok(MarkedLens { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    fn modulus(&self) -> i64 {
        self.p.abs()
    }

    /// `q^-1 mod |p|`; for `p = 0` the class `q = 1` is its own inverse.
    fn q_inverse(&self) -> i64 {
        if self.p == 0 {
            return 1;
        }
        mod_inverse(self.q, self.modulus()).expect("q is coprime to p")
    }

    fn congruent(&self, a: i64, b: i64) -> bool {
        if self.p == 0 {
            a == b
        } else {
            (a as i128 - b as i128).rem_euclid(self.modulus() as i128) == 0
        }
    }

    /// Same marked lens space: equal `p` and `q` equal up to relabeling.
    pub fn marked_eq(&self, other: &MarkedLens) -> bool {
        self.p == other.p && (self.q == other.q || self.q == other.q_inverse())
    }

    /// `-L(p, q) = L(-p, q)`.
    pub fn reversed(&self) -> MarkedLens {
        MarkedLens { p: -self.p, q: self.q }
    }

    /// Both cores reversed: `L(-p, -q)`, the same oriented manifold.
    pub fn cores_reversed(&self) -> MarkedLens {
        MarkedLens::new(-self.p, -self.q).expect("coprimality is preserved")
    }

    pub fn oriented_diffeomorphic(&self, other: &MarkedLens) -> bool {
        if self.p == other.p {
            return self.marked_eq(other);
        }
        self.p == -other.p
            && (self.congruent(self.q, -other.q) || self.congruent(self.q, -other.q_inverse()))
    }

    /// Brody's criterion: `|p|` agrees and `q = +-q'^(+-1) (mod p)`.
    pub fn homeomorphic(&self, other: &MarkedLens) -> bool {
        self.modulus() == other.modulus()
            && [other.q, other.q_inverse()]
                .into_iter()
                .any(|c| self.congruent(self.q, c) || self.congruent(self.q, -c))
    }

    /// The fibering giving this marked lens space has a horizontal vector
    /// field exactly when `p != 0` and `q = -1 (mod p)`.
    pub fn has_hvf_fibering(&self) -> bool {
        self.p != 0 && self.congruent(self.q, -1)
    }

    /// The `d`-fold fiberwise cover `L(d p, q)` with the canonical `q` kept.
    pub fn cover(&self, d: i64) -> Result<MarkedLens> {
        if d == 0 {
            return Err(Error::ZeroDegree);
        }
        let dp = self.p.checked_mul(d).ok_or(Error::Overflow)?;
        let g = gcd(dp, self.q);
        if g != 1 {
            return Err(Error::IncompatibleCover { p: dp, q: self.q, gcd: g });
        }
        MarkedLens::new(dp, self.q)
    }

    /// Every marked lens space `L(d p, q + k p)` for `0 <= k < |d|` with
    /// `q + k p` coprime to `d p`, listed once up to marked equality.
    pub fn cover_candidates(&self, d: i64) -> Result<Vec<MarkedLens>> {
        if d == 0 {
            return Err(Error::ZeroDegree);
        }
        let dp = self.p.checked_mul(d).ok_or(Error::Overflow)?;
        let mut out: Vec<MarkedLens> = Vec::new();
        for k in 0..d.unsigned_abs() as i64 {
            let q = (k as i128 * self.p as i128 + self.q as i128) as i64;
            if gcd(dp, q) != 1 {
                continue;
            }
            let lens = MarkedLens::new(dp, q)?;
            if !out.iter().any(|l| l.marked_eq(&lens)) {
                out.push(lens);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for MarkedLens {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({}, {})", self.p, self.q)
    }
}

/// `(alpha', beta')` with `alpha * beta' - alpha' * beta = 1`, chosen by the
/// tie-breaking rule of [`ext_gcd`].
pub fn bezout_complement(pair: FiberPair) -> Result<(i64, i64)> {
    let neg_beta = pair.beta.checked_neg().ok_or(Error::Overflow)?;
    let (g, x, y) = ext_gcd(pair.alpha, neg_beta)?;
    debug_assert_eq!(g, 1);
    Ok((y, x))
}

/// The marked lens space of two solid tori glued with the given pairs and
/// complements `(alpha_i', beta_i')`.
pub fn lens_from_gluing(pairs: [FiberPair; 2], complements: [(i64, i64); 2]) -> Result<MarkedLens> {
    for (p, &(a_prime, b_prime)) in pairs.iter().zip(&complements) {
        let det = p.alpha as i128 * b_prime as i128 - a_prime as i128 * p.beta as i128;
        if det != 1 {
            return Err(Error::InvalidGluing);
        }
    }
    let [f1, f2] = pairs;
    let [(a1_prime, b1_prime), _] = complements;
    let p = f1.alpha as i128 * f2.beta as i128 + f2.alpha as i128 * f1.beta as i128;
    let q = a1_prime as i128 * f2.beta as i128 + f2.alpha as i128 * b1_prime as i128;
    let p = i64::try_from(p).map_err(|_| Error::Overflow)?;
    let q = if p == 0 {
        q
    } else {
        q.rem_euclid(p.unsigned_abs() as i128)
    };
    MarkedLens::new(p, i64::try_from(q).map_err(|_| Error::Overflow)?)
}

/// Reduces a genus-0 closed invariant to exactly two pairs, or fails when it
/// has more than two exceptional fibers.
pub fn two_pair_form(inv: &SeifertInvariant) -> Result<[FiberPair; 2]> {
    if !inv.is_closed() {
        return Err(Error::NotALensForm("the invariant has boundary".into()));
    }
    if inv.genus_code() != 0 {
        return Err(Error::NotALensForm(format!("genus is {}, not 0", inv.genus_code())));
    }
    let pairs: Vec<FiberPair> = inv
        .pairs()
        .iter()
        .copied()
        .filter(|p| *p != FiberPair::new(1, 0))
        .collect();
    let mut two = if pairs.len() <= 2 {
        pairs
    } else {
        let mut shift: i64 = 0;
        let mut exceptional = Vec::new();
        for p in pairs {
            if p.alpha == 1 {
                shift = shift.checked_add(p.beta).ok_or(Error::Overflow)?;
            } else {
                exceptional.push(p);
            }
        }
        if exceptional.len() > 2 {
            return Err(Error::NotALensForm(format!(
                "{} exceptional fibers",
                exceptional.len()
            )));
        }
        match exceptional.first_mut() {
            Some(first) => {
                let extra = shift.checked_mul(first.alpha).ok_or(Error::Overflow)?;
                first.beta = first.beta.checked_add(extra).ok_or(Error::Overflow)?;
            }
            None => exceptional.push(FiberPair::new(1, shift)),
        }
        exceptional
    };
    while two.len() < 2 {
        two.push(FiberPair::new(1, 0));
    }
    Ok([two[0], two[1]])
}

/// The marked lens space of a genus-0 fibering with at most two exceptional
/// fibers.
pub fn lens_from_invariant(inv: &SeifertInvariant) -> Result<MarkedLens> {
    let pairs = two_pair_form(inv)?;
    let complements = [bezout_complement(pairs[0])?, bezout_complement(pairs[1])?];
    lens_from_gluing(pairs, complements)
}

/// The marked lens space of a fibering that is either of genus 0 or the
/// projective-plane partner of one.
pub fn lens_of_fibering(inv: &SeifertInvariant) -> Result<MarkedLens> {
    if inv.genus_code() == -1 && inv.is_closed() {
        let dual = inv.alternate_fiberings().into_iter().find_map(|a| match a {
            AlternateFibering::LensDual(d) => Some(d),
            _ => None,
        });
        if let Some(dual) = dual {
            return lens_from_invariant(&dual);
        }
    }
    lens_from_invariant(inv)
}

/// Which fiberings of `L(p, q)` carry a horizontal vector field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LensCase {
    /// `p` is 1 or 2: every fibering does.
    AllHave,
    /// `p >= 3` and `q = +-1 (mod p)`: infinitely many do and infinitely many do not.
    MixedInfinite,
    /// `p >= 8`, `4 | p`, `q = p/2 +- 1 (mod p)`: only the given fibering does.
    ExactlyOne { witness: SeifertInvariant },
    /// No fibering does.
    NoneHave,
}

impl LensCase {
    pub fn name(&self) -> &'static str {
        match self {
            LensCase::AllHave => "AllHave",
            LensCase::MixedInfinite => "MixedInfinite",
            LensCase::ExactlyOne { .. } => "ExactlyOne",
            LensCase::NoneHave => "NoneHave",
        }
    }
}

pub fn classify_lens(p: i64, q: i64) -> Result<LensCase> {
    if p < 0 {
        return Err(Error::NegativeP(p));
    }
    if gcd(p, q) != 1 {
        return Err(Error::LensNotCoprime { p, q });
    }
    let congruent = |a: i64, b: i64| p != 0 && (a - b).rem_euclid(p) == 0;
    let mixed = p >= 3 && (congruent(q, 1) || congruent(q, -1));
    let exactly_one = p >= 8 && p % 4 == 0 && (congruent(q, p / 2 + 1) || congruent(q, p / 2 - 1));
    debug_assert!(!(mixed && exactly_one), "cases of L({p}, {q}) overlap");
    Ok(if p == 1 || p == 2 {
        LensCase::AllHave
    } else if mixed {
        LensCase::MixedInfinite
    } else if exactly_one {
        LensCase::ExactlyOne {
            witness: SeifertInvariant::closed(-1, &[(p / 4, -1)])?,
        }
    } else {
        LensCase::NoneHave
    })
}

/// The unit tangent bundle of the projective plane with one cone point of
/// order `alpha`, and the marked lens space of its genus-0 partner fibering.
pub fn exceptional_lens_fibering(alpha: i64) -> Result<(SeifertInvariant, MarkedLens)> {
    if alpha < 1 {
        return Err(Error::InvalidExceptionalAlpha(alpha));
    }
    let inv = SeifertInvariant::closed(-1, &[(alpha, -1)])?;
    let lens = lens_of_fibering(&inv)?;
    debug_assert!(decide_hvf(&inv).map(|d| d.exists).unwrap_or(false));
    Ok((inv, lens))
}

/// Every `(0; (a1, b1), (a2, b2))` with `1 <= a_i <= bound`, `|b_i| <= bound`
/// whose marked lens space is `target`, one representative per fibering.
pub fn enumerate_lens_fiberings(target: MarkedLens, bound: i64) -> Result<Vec<SeifertInvariant>> {
    let pairs: Vec<FiberPair> = (1..=bound)
        .flat_map(|a| (-bound..=bound).map(move |b| FiberPair::new(a, b)))
        .filter(|p| gcd(p.alpha, p.beta) == 1)
        .collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (i, &f1) in pairs.iter().enumerate() {
        for &f2 in &pairs[i..] {
            let inv = SeifertInvariant::new(0, 0, vec![f1, f2])?;
            if !lens_from_invariant(&inv)?.marked_eq(&target) {
                continue;
            }
            if seen.insert(inv.normalize()) {
                out.push(inv);
            }
        }
    }
    Ok(out)
}
