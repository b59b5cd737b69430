//! Exact arithmetic on the Farey graph: sum, multiplication, edge tests,
//! circular order on the boundary of the Poincare disk, and neighbor
//! enumeration within arcs.

use std::fmt;
use std::str::FromStr;

use num::integer::Integer;
use num::rational::Ratio;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::circle::{self, Vec2};
use crate::error::{Error, Result};

/// Extended rational number `p/q` with `q >= 0`, `gcd(|p|, q) = 1`, and
/// infinity represented uniquely as `1/0`. `0/0` is unrepresentable.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slope {
    p: i64,
    q: i64,
}

impl Slope {
    pub const ZERO: Slope = Slope { p: 0, q: 1 };
    pub const ONE: Slope = Slope { p: 1, q: 1 };
    pub const INFINITY: Slope = Slope { p: 1, q: 0 };

    /// Builds the slope `p/q`, reduced and sign-normalized.
    ///
    /// Panics if `p == 0 && q == 0`.
    pub fn new(p: i64, q: i64) -> Slope {
        assert!(p != 0 || q != 0, "0/0 is not a slope");
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 || (q == 0 && p < 0) {
            p = -p;
            q = -q;
        }
        Slope { p, q }
    }

    pub fn integer(n: i64) -> Slope {
        Slope { p: n, q: 1 }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.q == 0
    }

    pub fn from_rational(r: Ratio<i64>) -> Slope {
        Slope::new(*r.numer(), *r.denom())
    }

    /// `None` for the slope at infinity.
    pub fn to_rational(&self) -> Option<Ratio<i64>> {
        if self.is_infinite() {
            None
        } else {
            Some(Ratio::new(self.p, self.q))
        }
    }

    /// The point of the boundary circle this slope embeds to, as an integer
    /// vector: a positive multiple of the exact [`DiskPoint`] coordinates.
    pub(crate) fn circle_vec(&self) -> Vec2 {
        let (p, q) = (self.p as i128, self.q as i128);
        circle::vec2(2 * p * q, q * q - p * p)
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q == 0 {
            write!(f, "inf")
        } else if self.q == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

impl fmt::Debug for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Slope({self})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid slope `{0}`: expected `p/q`, an integer, or `inf`")]
pub struct ParseSlopeError(pub String);

impl FromStr for Slope {
    type Err = ParseSlopeError;

    fn from_str(s: &str) -> std::result::Result<Slope, ParseSlopeError> {
        let t = s.trim();
        if t == "inf" || t == "-inf" {
            return Ok(Slope::INFINITY);
        }
        let bad = || ParseSlopeError(s.to_string());
        let (p, q) = match t.split_once('/') {
            Some((a, b)) => (
                a.trim().parse::<i64>().map_err(|_| bad())?,
                b.trim().parse::<i64>().map_err(|_| bad())?,
            ),
            None => (t.parse::<i64>().map_err(|_| bad())?, 1),
        };
        if p == 0 && q == 0 {
            return Err(bad());
        }
        Ok(Slope::new(p, q))
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The exact boundary-circle embedding of a [`Slope`]:
/// `p/q -> (2pq/(p^2+q^2), (q^2-p^2)/(p^2+q^2))`, so that `0 -> (0,1)`,
/// `inf -> (0,-1)`, `1 -> (1,0)` and `-1 -> (-1,0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiskPoint {
    pub x: Ratio<i128>,
    pub y: Ratio<i128>,
}

impl From<Slope> for DiskPoint {
    fn from(s: Slope) -> DiskPoint {
        let (p, q) = (s.p as i128, s.q as i128);
        let d = p * p + q * q;
        DiskPoint {
            x: Ratio::new(2 * p * q, d),
            y: Ratio::new(q * q - p * p, d),
        }
    }
}

/// Farey sum (mediant) of two slopes.
pub fn fsum(r: Slope, s: Slope) -> Slope {
    Slope::new(r.p + s.p, r.q + s.q)
}

/// Farey multiplication: the determinant `p_r q_s - q_r p_s`.
pub fn fmult(r: Slope, s: Slope) -> i128 {
    r.p as i128 * s.q as i128 - r.q as i128 * s.p as i128
}

/// Two slopes span an edge of the Farey graph iff `|fmult| = 1`.
pub fn has_edge(r: Slope, s: Slope) -> bool {
    fmult(r, s).abs() == 1
}

/// True iff, starting at `from` on the disk boundary and traversing
/// clockwise, `t` is met strictly before `to`. Endpoints are excluded.
pub fn in_clockwise_arc(t: Slope, from: Slope, to: Slope) -> Result<bool> {
    if from == to {
        return Err(Error::DegenerateArc);
    }
    Ok(circle::in_cw_open_arc(
        &t.circle_vec(),
        &from.circle_vec(),
        &to.circle_vec(),
    ))
}

/// All Farey neighbors of `s0` inside the open clockwise arc from `from` to
/// `to`, in clockwise order from `from`.
///
/// Errors with [`Error::InfiniteFamily`] when `s0` lies in the closed arc:
/// neighbors of `s0` accumulate at `s0`, so the answer would be infinite.
pub fn neighbors_in_arc(s0: Slope, from: Slope, to: Slope) -> Result<Vec<Slope>> {
    if from == to {
        return Err(Error::DegenerateArc);
    }
    if s0 == from || s0 == to || in_clockwise_arc(s0, from, to)? {
        return Err(Error::InfiniteFamily);
    }

    // Every neighbor of s0 = p0/q0 is the slope of v1 + k*v0 for a single
    // base solution v1 of p*q0 - q*p0 = 1. As k runs over Z the slopes sweep
    // the circle minus s0 monotonically, accumulating at s0 on both ends.
    let (p0, q0) = (s0.p as i128, s0.q as i128);
    let e = (s0.q as i128).extended_gcd(&(s0.p as i128));
    debug_assert_eq!(e.gcd, 1);
    let (p1, q1) = (e.x, -e.y); // p1*q0 - q1*p0 = 1

    // The membership of t_k in the arc flips when t_k passes an endpoint;
    // fmult(t_k, e) = c1 + k*c0 is linear in k, so the flips happen near the
    // roots. Scan a window covering both.
    let crit = |end: Slope| -> i128 {
        let (pe, qe) = (end.p as i128, end.q as i128);
        let c1 = p1 * qe - q1 * pe;
        let c0 = p0 * qe - q0 * pe; // = fmult(s0, end), nonzero since end != s0
        debug_assert!(c0 != 0);
        // Round -c1/c0 toward zero; the +-2 margin below absorbs the slack.
        -c1 / c0
    };
    let (ka, kb) = (crit(from), crit(to));
    let (lo, hi) = (ka.min(kb) - 2, ka.max(kb) + 2);

    let mut found = Vec::new();
    for k in lo..=hi {
        let (p, q) = (p1 + k * p0, q1 + k * q0);
        let t = Slope::new(
            p.try_into().expect("neighbor numerator overflows i64"),
            q.try_into().expect("neighbor denominator overflows i64"),
        );
        if in_clockwise_arc(t, from, to)? {
            found.push(t);
        }
    }
    // Order clockwise starting from `from`.
    found.sort_by(|&a, &b| {
        if a == b {
            std::cmp::Ordering::Equal
        } else if in_clockwise_arc(a, from, b).unwrap() {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    });
    found.dedup();
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Slope {
        text.parse().unwrap()
    }

    #[test]
    fn slope_normalization() {
        assert_eq!(Slope::new(2, 4), s("1/2"));
        assert_eq!(Slope::new(-2, -4), s("1/2"));
        assert_eq!(Slope::new(3, -6), s("-1/2"));
        assert_eq!(Slope::new(-5, 0), Slope::INFINITY);
        assert_eq!(s("inf"), Slope::INFINITY);
        assert_eq!(s("7"), Slope::integer(7));
    }

    #[test]
    #[should_panic]
    fn zero_over_zero_rejected() {
        Slope::new(0, 0);
    }

    #[test]
    fn farey_sum() {
        assert_eq!(fsum(s("1/2"), s("1/3")), s("2/5"));
        assert_eq!(fsum(Slope::ZERO, Slope::INFINITY), s("1"));
        assert_eq!(fsum(s("-1"), Slope::ZERO), s("-1/2"));
    }

    #[test]
    fn farey_mult() {
        assert_eq!(fmult(s("1/2"), s("1/3")), 1);
        assert_eq!(fmult(Slope::ZERO, Slope::INFINITY), -1);
        assert_eq!(fmult(s("2/3"), s("1/2")), 1);
    }

    #[test]
    fn edges() {
        assert!(has_edge(Slope::ZERO, Slope::INFINITY));
        assert!(has_edge(s("1/2"), s("1/3")));
        assert!(!has_edge(s("1/3"), s("3/4")));
    }

    #[test]
    fn disk_embedding_anchors() {
        let pt = |sl: &str| DiskPoint::from(s(sl));
        let r = |n: i128, d: i128| Ratio::new(n, d);
        assert_eq!(pt("0"), DiskPoint { x: r(0, 1), y: r(1, 1) });
        assert_eq!(pt("inf"), DiskPoint { x: r(0, 1), y: r(-1, 1) });
        assert_eq!(pt("1"), DiskPoint { x: r(1, 1), y: r(0, 1) });
        assert_eq!(pt("-1"), DiskPoint { x: r(-1, 1), y: r(0, 1) });
    }

    #[test]
    fn clockwise_arc_anchors() {
        // 0 is clockwise of -1 and anticlockwise of 1.
        assert!(in_clockwise_arc(Slope::ZERO, s("-1"), s("1")).unwrap());
        // inf is anticlockwise of -1 and clockwise of 1.
        assert!(in_clockwise_arc(Slope::INFINITY, s("1"), s("-1")).unwrap());
        assert!(in_clockwise_arc(s("1/2"), s("-1"), s("1")).unwrap());
        assert!(!in_clockwise_arc(Slope::INFINITY, s("-1"), s("1")).unwrap());
    }

    #[test]
    fn arc_endpoints_excluded() {
        assert!(!in_clockwise_arc(s("-1"), s("-1"), s("1")).unwrap());
        assert!(!in_clockwise_arc(s("1"), s("-1"), s("1")).unwrap());
        assert_eq!(
            in_clockwise_arc(Slope::ZERO, s("1"), s("1")),
            Err(Error::DegenerateArc)
        );
    }

    #[test]
    fn neighbor_enumeration() {
        assert_eq!(
            neighbors_in_arc(Slope::ZERO, s("1"), s("-1")).unwrap(),
            vec![Slope::INFINITY]
        );
        assert_eq!(
            neighbors_in_arc(Slope::ZERO, s("1/2"), s("-1/2")).unwrap(),
            vec![s("1"), Slope::INFINITY, s("-1")]
        );
        assert_eq!(
            neighbors_in_arc(s("-2"), s("-1"), s("-3")).unwrap(),
            vec![Slope::INFINITY]
        );
    }

    #[test]
    fn neighbor_enumeration_infinite_family() {
        assert_eq!(
            neighbors_in_arc(Slope::ZERO, s("-1"), s("1")),
            Err(Error::InfiniteFamily)
        );
        assert_eq!(
            neighbors_in_arc(s("1"), s("1"), s("-1")),
            Err(Error::InfiniteFamily)
        );
    }

    #[test]
    fn slope_display_round_trip() {
        for text in ["inf", "0", "-1", "1/2", "-2/3", "17/5"] {
            let sl = s(text);
            assert_eq!(sl.to_string(), text);
            assert_eq!(s(&sl.to_string()), sl);
        }
    }
}
