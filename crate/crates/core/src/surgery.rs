//! Surgery-coefficient and framing bookkeeping: contact/topological
//! conversion, transverse-surgery framing matrices, solid-torus and
//! mixed-torus data, decomposition candidates, lens-space extraction, and
//! the binding-neighborhood slope formulas.

use num::rational::Ratio;
use num::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::farey::{self, Slope};
use crate::mcg::{self, NTType, Rational, Word};

/// Which side of a convex solid torus the meridian sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    Lower,
    Upper,
}

/// A convex solid torus with meridional slope, dividing slope, and side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SolidTorus {
    pub meridian: Slope,
    pub dividing: Slope,
    pub side: Side,
}

impl SolidTorus {
    pub fn new(meridian: Slope, dividing: Slope, side: Side) -> Result<SolidTorus> {
        if meridian == dividing {
            return Err(Error::InvalidTorus("meridian equals dividing slope"));
        }
        Ok(SolidTorus {
            meridian,
            dividing,
            side,
        })
    }

    /// Whether `t` is an admissible dividing slope for a parallel convex
    /// torus in the interior.
    pub fn admits(&self, t: Slope) -> bool {
        let inside = match self.side {
            Side::Lower => farey::in_clockwise_arc(t, self.meridian, self.dividing),
            Side::Upper => farey::in_clockwise_arc(t, self.dividing, self.meridian),
        };
        inside.expect("meridian != dividing")
    }
}

/// The slope data of a mixed neighborhood: the dividing slopes of its two
/// boundary tori and of the mixed torus between them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MixedTorus {
    pub s_minus: Slope,
    pub s_zero: Slope,
    pub s_plus: Slope,
}

impl MixedTorus {
    /// Requires `s_zero` clockwise of `s_minus` and anticlockwise of
    /// `s_plus`.
    pub fn new(s_minus: Slope, s_zero: Slope, s_plus: Slope) -> Result<MixedTorus> {
        if s_minus == s_plus {
            return Err(Error::InvalidTorus("outer slopes coincide"));
        }
        if !farey::in_clockwise_arc(s_zero, s_minus, s_plus)? {
            return Err(Error::InvalidTorus(
                "middle slope is not clockwise of s_minus and anticlockwise of s_plus",
            ));
        }
        Ok(MixedTorus {
            s_minus,
            s_zero,
            s_plus,
        })
    }
}

/// Contact (r)-surgery is topological (tb + r)-surgery.
pub fn topological_coefficient(r_contact: Rational, tb: i64) -> Rational {
    Ratio::from_integer(tb) + r_contact
}

/// The two transverse surgeries whose framing effect is unimodular.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TransverseKind {
    AdmissibleMinusOne,
    InadmissiblePlusOne,
}

/// Framing matrix of a transverse surgery acting on the dividing slope: the
/// matrix acts on the column `(q, p)` for slope `p/q`, sending `p/q` to
/// `p/(q+p)` (admissible) or `p/(q-p)` (inadmissible).
pub fn transverse_framing_update(s: Slope, kind: TransverseKind) -> Slope {
    let (p, q) = (s.p(), s.q());
    match kind {
        TransverseKind::AdmissibleMinusOne => Slope::new(p, q + p),
        TransverseKind::InadmissiblePlusOne => Slope::new(p, q - p),
    }
}

/// Converts the product framing to a meridional one: the column `(q, p)`
/// maps to `(-p, q)`, i.e. slope `p/q` to `q/(-p)`.
pub fn meridian_conversion(s: Slope) -> Slope {
    Slope::new(s.q(), -s.p())
}

/// Dividing slope of a standard neighborhood of the binding in the
/// construction that fills a genus-one open book: `1/ceil(c + n)` for
/// pseudo-Anosov monodromy, `1/floor(c + n + 1)` otherwise.
pub fn binding_neighborhood_slope(w: &Word, n: i64) -> Result<Slope> {
    if n < 0 {
        return Err(Error::InvalidParameter("n must be non-negative"));
    }
    let c = mcg::fdtc(w);
    let shift = Ratio::from_integer(n);
    let denom = match mcg::nt_classify(w) {
        NTType::PseudoAnosov => (c + shift).ceil().to_integer(),
        _ => (c + shift + Ratio::one()).floor().to_integer(),
    };
    Ok(Slope::new(1, denom))
}

/// Candidate decomposition slopes for a mixed torus: all Farey neighbors of
/// the middle slope in the open arc anticlockwise of `s_minus` and clockwise
/// of `s_plus` (the arc avoiding the middle slope).
pub fn menke_candidates(t: &MixedTorus) -> Vec<Slope> {
    farey::neighbors_in_arc(t.s_zero, t.s_plus, t.s_minus)
        .expect("mixed torus invariants keep the middle slope out of the arc")
}

/// There is a unique tight structure on the lower-meridian solid torus with
/// meridian `r` and dividing slope 0 iff `r = 1/n` (including infinity).
pub fn unique_tight_lower(r: Slope) -> Result<bool> {
    if r == Slope::ZERO {
        return Err(Error::InvalidTorus("meridian equals the dividing slope 0"));
    }
    Ok(r.p().abs() == 1)
}

/// The lens-space fraction `1/(r-1)` split off by decomposing after contact
/// (r)-surgery on a mixed Legendrian knot; `|p| = 1` signals the
/// three-sphere.
pub fn lens_from_mixed_surgery(r: Rational) -> Result<Slope> {
    if r >= Rational::zero() {
        return Err(Error::InvalidCoefficient(
            "mixed-surgery decomposition needs r < 0; r >= 0 is the overtwisted branch",
        ));
    }
    let d = r - Ratio::one();
    Ok(Slope::new(*d.denom(), *d.numer()))
}

/// Surgery coefficient with respect to the Seifert framing produced by
/// contact (r)-surgery on the stabilized binding push-off: the closed form
/// `1/(n_K - r)`.
pub fn seifert_coefficient(w: &Word, r_contact: Rational) -> Result<Rational> {
    if r_contact >= Rational::zero() {
        return Err(Error::InvalidCoefficient("contact coefficient must be negative"));
    }
    let nk = Ratio::from_integer(mcg::n_k(w));
    Ok((nk - r_contact).recip())
}

/// The same coefficient computed by the displayed framing matrices instead
/// of the closed form: the contact coefficient becomes `r - m - 3` (resp.
/// `r - m - 4`) with respect to the product framing, and the rotation
/// `[[0,-1],[1,0]]` converts the column `(1, t)` to `(-t, 1)`.
pub fn seifert_coefficient_via_framing(w: &Word, r_contact: Rational) -> Result<Rational> {
    if r_contact >= Rational::zero() {
        return Err(Error::InvalidCoefficient("contact coefficient must be negative"));
    }
    let c = mcg::fdtc(w);
    let m = match mcg::nt_classify(w) {
        NTType::PseudoAnosov => c.ceil() + Ratio::from_integer(3),
        _ => c.floor() + Ratio::from_integer(4),
    };
    // Column (1, t) with t the product-framing coefficient.
    let (col_q, col_p) = (Ratio::one(), r_contact - m);
    // Rotate: (q, p) -> (-p, q); the new column (q', p') is the slope p'/q'.
    let (new_q, new_p) = (-col_p, col_q);
    Ok(new_p / new_q)
}
