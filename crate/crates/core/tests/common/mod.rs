//! Independent oracles used to cross-check the exact implementations:
//! a floating-point circle-map iteration for the boundary twisting number,
//! and a brute-force enumeration of Farey neighbors in an arc.

use openbook::farey::{self, Slope};
use openbook::mcg::{Gen, Word};

/// One generator step acting on a direction vector.
fn step(g: Gen, sign: i64, v: (f64, f64)) -> (f64, f64) {
    let (u, w) = v;
    let e = sign as f64;
    match g {
        Gen::A => (u + e * w, w),
        Gen::B => (u, w - e * u),
        Gen::D => unreachable!("boundary twists are expanded first"),
    }
}

/// Flatten a word into unit-exponent letters with boundary twists expanded.
fn flatten(w: &Word) -> Vec<(Gen, i64)> {
    let mut out = Vec::new();
    for &(g, e) in w.letters() {
        let sign = e.signum();
        for _ in 0..e.abs() {
            match g {
                Gen::D => {
                    // One boundary twist is (ab)^6; its inverse reverses and
                    // inverts the letters.
                    for _ in 0..6 {
                        if sign > 0 {
                            out.push((Gen::A, 1));
                            out.push((Gen::B, 1));
                        } else {
                            out.push((Gen::B, -1));
                            out.push((Gen::A, -1));
                        }
                    }
                }
                _ => out.push((g, sign)),
            }
        }
    }
    out
}

/// Floating-point estimate of the boundary twisting number: iterate the
/// word's action on a direction `reps` times and average the accumulated
/// clockwise rotation. Accurate to roughly 2/reps.
pub fn fdtc_numeric(w: &Word, reps: usize) -> f64 {
    let letters = flatten(w);
    let mut v = (0.6f64, 0.8f64);
    let mut total = 0.0f64;
    for _ in 0..reps {
        // Rightmost letter acts first.
        for &(g, sign) in letters.iter().rev() {
            let next = step(g, sign, v);
            // Each unit step turns less than a half turn, so the principal
            // angle is the true increment.
            let cross = v.0 * next.1 - v.1 * next.0;
            let dot = v.0 * next.0 + v.1 * next.1;
            total += cross.atan2(dot);
            let norm = (next.0 * next.0 + next.1 * next.1).sqrt();
            v = (next.0 / norm, next.1 / norm);
        }
    }
    // Positive twisting is clockwise, i.e. decreasing standard angle.
    -total / (2.0 * std::f64::consts::PI * reps as f64)
}

fn angle(s: Slope) -> f64 {
    let (p, q) = (s.p() as f64, s.q() as f64);
    let n = p * p + q * q;
    let (x, y) = (2.0 * p * q / n, (q * q - p * p) / n);
    y.atan2(x)
}

/// Clockwise angular distance from `a` to `b` in (0, 2*pi].
fn cw_distance(a: Slope, b: Slope) -> f64 {
    let tau = 2.0 * std::f64::consts::PI;
    let mut d = (angle(a) - angle(b)).rem_euclid(tau);
    if d == 0.0 && a != b {
        d = tau;
    }
    d
}

/// `t` lies strictly inside the clockwise arc from `from` to `to`, computed
/// with floating-point angles.
pub fn in_cw_arc_numeric(t: Slope, from: Slope, to: Slope) -> bool {
    if t == from || t == to {
        return false;
    }
    cw_distance(from, t) < cw_distance(from, to)
}

/// All slopes with |p|, |q| <= `bound`, plus infinity.
pub fn small_slopes(bound: i64) -> Vec<Slope> {
    let mut out = vec![Slope::INFINITY];
    for q in 1..=bound {
        for p in -bound..=bound {
            if num::integer::gcd(p, q) == 1 {
                out.push(Slope::new(p, q));
            }
        }
    }
    out
}

/// Brute-force Farey neighbors of `s0` inside the open clockwise arc,
/// restricted to slopes with |p|, |q| <= `bound`, sorted clockwise from
/// `from`.
pub fn neighbors_brute_force(s0: Slope, from: Slope, to: Slope, bound: i64) -> Vec<Slope> {
    let mut found: Vec<Slope> = small_slopes(bound)
        .into_iter()
        .filter(|&s| {
            (s.p() as i128 * s0.q() as i128 - s.q() as i128 * s0.p() as i128).abs() == 1
                && in_cw_arc_numeric(s, from, to)
        })
        .collect();
    found.sort_by(|&x, &y| {
        cw_distance(from, x)
            .partial_cmp(&cw_distance(from, y))
            .unwrap()
    });
    found
}

/// Exhaustively verify a neighbor list: every member has a Farey edge to
/// `s0` and lies in the open arc.
pub fn recheck_neighbors(s0: Slope, from: Slope, to: Slope, found: &[Slope]) {
    for &s in found {
        assert!(farey::has_edge(s0, s), "{s} is not a neighbor of {s0}");
        assert!(
            farey::in_clockwise_arc(s, from, to).unwrap(),
            "{s} is outside the arc ({from}, {to})"
        );
    }
}
