//! The verdict engine: the fillability hierarchy and the surgery theorems
//! encoded as exact decision rules producing status certificates with
//! citation trails.

use num::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::farey::Slope;
use crate::mcg::{self, Rational, Word};

/// Strength of a symplectic filling, ordered from weakest to strongest.
/// `Tight` is the floor: tight with no filling asserted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FillLevel {
    Tight,
    Weak,
    Strong,
    Liouville,
    Stein,
}

impl FillLevel {
    pub fn as_str(&self) -> &'static str {
        match self {
            FillLevel::Tight => "tight",
            FillLevel::Weak => "weak",
            FillLevel::Strong => "strong",
            FillLevel::Liouville => "liouville",
            FillLevel::Stein => "stein",
        }
    }
}

/// Known bounds on a tight contact structure: `lower` is the strongest
/// filling known to exist (if any), `upper` the strongest not excluded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub lower: Option<FillLevel>,
    pub upper: FillLevel,
}

impl Bounds {
    pub fn new(lower: Option<FillLevel>, upper: FillLevel) -> Bounds {
        if let Some(l) = lower {
            assert!(l <= upper, "lower bound exceeds upper bound");
        }
        Bounds { lower, upper }
    }

    /// Widest bounds: nothing asserted, nothing excluded.
    pub fn unconstrained() -> Bounds {
        Bounds {
            lower: None,
            upper: FillLevel::Stein,
        }
    }
}

/// Either overtwisted, or tight with filling bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FillabilityStatus {
    Overtwisted,
    Tight(Bounds),
}

impl FillabilityStatus {
    pub fn tight(lower: Option<FillLevel>, upper: FillLevel) -> FillabilityStatus {
        FillabilityStatus::Tight(Bounds::new(lower, upper))
    }

    pub fn bounds(&self) -> Option<Bounds> {
        match self {
            FillabilityStatus::Overtwisted => None,
            FillabilityStatus::Tight(b) => Some(*b),
        }
    }

    /// Strongest filling not excluded; overtwisted structures admit none.
    fn effective_upper(&self) -> Option<FillLevel> {
        self.bounds().map(|b| b.upper)
    }

    fn effective_lower(&self) -> Option<FillLevel> {
        self.bounds().and_then(|b| b.lower)
    }
}

/// A status together with the rule anchors that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: FillabilityStatus,
    pub citations: Vec<&'static str>,
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Verdict", 3)?;
        match self.status {
            FillabilityStatus::Overtwisted => {
                st.serialize_field("status", "overtwisted")?;
                st.serialize_field("bounds", &None::<Bounds>)?;
            }
            FillabilityStatus::Tight(b) => {
                st.serialize_field("status", "tight")?;
                st.serialize_field("bounds", &Some(b))?;
            }
        }
        st.serialize_field("citations", &self.citations)?;
        st.end()
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.status {
            FillabilityStatus::Overtwisted => writeln!(f, "status: overtwisted")?,
            FillabilityStatus::Tight(b) => {
                writeln!(f, "status: tight")?;
                writeln!(
                    f,
                    "lower bound (filling known to exist): {}",
                    b.lower.map_or("none asserted", |l| l.as_str())
                )?;
                writeln!(f, "upper bound (strongest not excluded): {}", b.upper.as_str())?;
            }
        }
        for c in &self.citations {
            writeln!(f, "cites: {c}")?;
        }
        Ok(())
    }
}

// Rule anchors attached to verdicts.
pub const CITE_MIXED_NEGATIVE: &str =
    "thm:mixed-surgery — negative contact surgery on a mixed Legendrian knot preserves failure of Liouville and of weak fillability";
pub const CITE_MIXED_OVERTWISTED: &str =
    "rmk:mixed-overtwisted — non-negative contact surgery on a mixed Legendrian knot is overtwisted";
pub const CITE_WEAK_PRESERVED: &str =
    "fact:weak-preserved — negative contact surgery preserves weak fillability";
pub const CITE_PLANAR_TORSION: &str =
    "fact:planar-torsion — planar k-torsion obstructs strong (hence Liouville) fillability of the ambient";
pub const CITE_FIBERED_STRONG: &str =
    "thm:genus-one-fibered — surgery in the coefficient window on a genus-one fibered knot in a rational homology sphere yields a strongly fillable, non-Liouville-fillable structure";
pub const CITE_FIBERED_WEAK: &str =
    "thm:genus-one-fibered-weak — surgery in the coefficient window on a genus-one fibered knot yields a weakly fillable, non-Liouville-fillable structure";
pub const CITE_ROTATIVE: &str =
    "thm:rotative-bundles — rotative torus bundles with n >= 1 are weakly but not strongly fillable";

/// The coefficient window attached to a slope `s != 0`:
/// `(0, s)` for `s > 0`, `(0, inf)` for `s = inf`,
/// `(0, inf] U (-inf, s)` for `s < 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RSet {
    s: Slope,
}

impl RSet {
    pub fn new(s: Slope) -> Result<RSet> {
        if s == Slope::ZERO {
            return Err(Error::InvalidParameter("the window is undefined for s = 0"));
        }
        Ok(RSet { s })
    }

    pub fn slope(&self) -> Slope {
        self.s
    }

    pub fn contains(&self, r: Slope) -> bool {
        let zero = Rational::zero();
        match (self.s.to_rational(), r.to_rational()) {
            (Some(s), Some(r)) => {
                if s > zero {
                    zero < r && r < s
                } else {
                    r > zero || r < s
                }
            }
            // s finite, r = inf: allowed exactly when s < 0.
            (Some(s), None) => s < zero,
            // s = inf: the open interval (0, inf).
            (None, Some(r)) => r > zero,
            (None, None) => false,
        }
    }
}

/// Exact membership in the window; errors when `s = 0`.
pub fn r_set_contains(s: Slope, r: Slope) -> Result<bool> {
    Ok(RSet::new(s)?.contains(r))
}

/// Verdict for contact (r)-surgery on a mixed Legendrian knot sitting in an
/// ambient structure with status `base`.
pub fn mixed_surgery_verdict(base: &FillabilityStatus, r: Rational) -> Verdict {
    if r >= Rational::zero() {
        return Verdict {
            status: FillabilityStatus::Overtwisted,
            citations: vec![CITE_MIXED_OVERTWISTED],
        };
    }
    let mut citations = vec![CITE_MIXED_NEGATIVE];
    let mut upper = FillLevel::Stein;
    // Non-fillability propagates downward: cap strictly below the level the
    // base already fails.
    match base.effective_upper() {
        None | Some(FillLevel::Tight) => upper = upper.min(FillLevel::Tight),
        Some(l) if l < FillLevel::Liouville => upper = upper.min(FillLevel::Strong),
        _ => {}
    }
    let lower = match base.effective_lower() {
        Some(l) if l >= FillLevel::Weak => {
            citations.push(CITE_WEAK_PRESERVED);
            Some(FillLevel::Weak)
        }
        _ => None,
    };
    Verdict {
        status: FillabilityStatus::tight(lower, upper),
        citations,
    }
}

/// Verdict for contact (r)-surgery on a mixed Legendrian knot in an ambient
/// structure containing planar k-torsion.
pub fn planar_torsion_verdict(k: i64, r: Rational) -> Result<Verdict> {
    if k < 0 {
        return Err(Error::InvalidParameter("torsion order must be non-negative"));
    }
    if r >= Rational::zero() {
        return Ok(Verdict {
            status: FillabilityStatus::Overtwisted,
            citations: vec![CITE_MIXED_OVERTWISTED],
        });
    }
    Ok(Verdict {
        status: FillabilityStatus::tight(None, FillLevel::Strong),
        citations: vec![CITE_PLANAR_TORSION, CITE_MIXED_NEGATIVE],
    })
}

/// What the ambient manifold of a fibered knot is known to be.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Ambient {
    /// A rational homology sphere: weak fillings perturb to strong ones.
    RationalHomologySphere,
    General,
}

/// An existential verdict: some contact structure on the surgered manifold
/// has the stated status. Never a statement about all of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SurgeryExistence {
    Exists(Verdict),
    NoConclusion,
}

impl Serialize for SurgeryExistence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SurgeryExistence", 2)?;
        match self {
            SurgeryExistence::Exists(v) => {
                st.serialize_field("verdict", "exists")?;
                st.serialize_field("structure", &Some(v))?;
            }
            SurgeryExistence::NoConclusion => {
                st.serialize_field("verdict", "no-conclusion")?;
                st.serialize_field("structure", &None::<Verdict>)?;
            }
        }
        st.end()
    }
}

impl std::fmt::Display for SurgeryExistence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SurgeryExistence::Exists(v) => {
                writeln!(f, "verdict: a contact structure with this status exists")?;
                write!(f, "{v}")
            }
            SurgeryExistence::NoConclusion => writeln!(f, "verdict: no conclusion"),
        }
    }
}

/// Verdict for r-surgery on a genus-one fibered knot with monodromy `w`:
/// when `r` lies in the window of `1/n_K`, the surgered manifold admits a
/// contact structure that is fillable (strongly for rational homology
/// spheres, weakly in general) but not Liouville fillable.
pub fn fibered_surgery_verdict(w: &Word, r: Slope, ambient: Ambient) -> Result<SurgeryExistence> {
    if r == Slope::ZERO {
        return Err(Error::InvalidParameter("r = 0 is never in the window"));
    }
    let window = RSet::new(Slope::new(1, mcg::n_k(w)))?;
    if !window.contains(r) {
        return Ok(SurgeryExistence::NoConclusion);
    }
    let verdict = match ambient {
        Ambient::RationalHomologySphere => Verdict {
            status: FillabilityStatus::tight(Some(FillLevel::Strong), FillLevel::Strong),
            citations: vec![CITE_FIBERED_STRONG, CITE_MIXED_NEGATIVE],
        },
        Ambient::General => Verdict {
            status: FillabilityStatus::tight(Some(FillLevel::Weak), FillLevel::Strong),
            citations: vec![CITE_FIBERED_WEAK, CITE_MIXED_NEGATIVE],
        },
    };
    Ok(SurgeryExistence::Exists(verdict))
}

/// Status of the rotative contact structure with `n` extra turns on a torus
/// bundle: weakly but not strongly fillable for `n >= 1`; no claim for
/// `n = 0`.
pub fn rotative_bundle_status(n: i64) -> Result<Verdict> {
    if n < 0 {
        return Err(Error::InvalidParameter("rotation count must be non-negative"));
    }
    if n >= 1 {
        Ok(Verdict {
            status: FillabilityStatus::tight(Some(FillLevel::Weak), FillLevel::Weak),
            citations: vec![CITE_ROTATIVE],
        })
    } else {
        Ok(Verdict {
            status: FillabilityStatus::tight(Some(FillLevel::Tight), FillLevel::Stein),
            citations: vec![],
        })
    }
}
