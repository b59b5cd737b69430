//! Exact circular-order predicates for integer vectors on the circle.
//!
//! A nonzero integer vector stands for the point of the circle it points at;
//! `v` and `-v` are distinct points. All comparisons are sign tests on exact
//! integer cross products, never floating-point angles.

use num::bigint::BigInt;
use num::{Signed, Zero};

pub(crate) type Vec2 = (BigInt, BigInt);

pub(crate) fn vec2(x: i128, y: i128) -> Vec2 {
    (BigInt::from(x), BigInt::from(y))
}

pub(crate) fn eq(a: &Vec2, b: &Vec2) -> bool {
    // Parallel and in the same half means same point.
    half(a) == half(b) && cross(a, b).is_zero()
}

fn cross(a: &Vec2, b: &Vec2) -> BigInt {
    &a.0 * &b.1 - &a.1 * &b.0
}

/// 0 for the half-turn with standard angle in [0, pi), 1 for the rest.
fn half(v: &Vec2) -> u8 {
    use num::bigint::Sign;
    match v.1.sign() {
        Sign::Plus => 0,
        Sign::Minus => 1,
        Sign::NoSign => {
            if v.0.is_positive() {
                0
            } else {
                1
            }
        }
    }
}

/// Strict anticlockwise order starting from standard angle 0.
fn acw_lt(a: &Vec2, b: &Vec2) -> bool {
    let (ha, hb) = (half(a), half(b));
    ha < hb || (ha == hb && cross(a, b).is_positive())
}

/// `mid` lies strictly between `start` and `end` going anticlockwise.
/// The three points must be pairwise distinct.
fn between_acw(start: &Vec2, mid: &Vec2, end: &Vec2) -> bool {
    if acw_lt(start, end) {
        acw_lt(start, mid) && acw_lt(mid, end)
    } else {
        acw_lt(start, mid) || acw_lt(mid, end)
    }
}

/// `t` lies in the open clockwise arc from `from` to `to` (endpoints
/// excluded). Requires `from != to`.
pub(crate) fn in_cw_open_arc(t: &Vec2, from: &Vec2, to: &Vec2) -> bool {
    debug_assert!(!eq(from, to));
    if eq(t, from) || eq(t, to) {
        return false;
    }
    // Clockwise from `from` to `to` is anticlockwise from `to` to `from`.
    between_acw(to, t, from)
}
