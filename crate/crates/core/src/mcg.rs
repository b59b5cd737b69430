//! Genus-one, one-boundary mapping classes as words in the twist generators
//! `a`, `b` and the boundary twist `d`; evaluation to unimodular matrices;
//! Nielsen-Thurston classification; exact fractional Dehn twist coefficients
//! via certified translation numbers; right-veering tests; and normal-form
//! recognition.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::integer::Integer;
use num::rational::Ratio;
use num::Zero;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::circle::{self, Vec2};

pub type Rational = Ratio<i64>;

/// A twist generator. `D` is the boundary-parallel twist; on matrices it
/// expands to `(ab)^6`, which is the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    A,
    B,
    D,
}

impl Gen {
    fn letter(self) -> char {
        match self {
            Gen::A => 'a',
            Gen::B => 'b',
            Gen::D => 'd',
        }
    }
}

/// A mapping class written as a word. Adjacent letters with the same
/// generator are merged and zero exponents dropped; the empty word is the
/// identity. The rightmost letter acts first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<(Gen, i64)>,
}

impl Word {
    pub fn identity() -> Word {
        Word::default()
    }

    pub fn from_letters<I: IntoIterator<Item = (Gen, i64)>>(letters: I) -> Word {
        let mut w = Word::identity();
        for (g, e) in letters {
            w.push(g, e);
        }
        w
    }

    pub fn push(&mut self, gen: Gen, exp: i64) {
        if exp == 0 {
            return;
        }
        if let Some(last) = self.letters.last_mut() {
            if last.0 == gen {
                last.1 += exp;
                if last.1 == 0 {
                    self.letters.pop();
                }
                return;
            }
        }
        self.letters.push((gen, exp));
    }

    pub fn letters(&self) -> &[(Gen, i64)] {
        &self.letters
    }

    pub fn is_identity_word(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &(g, e) in &other.letters {
            w.push(g, e);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word::from_letters(self.letters.iter().rev().map(|&(g, e)| (g, -e)))
    }

    pub fn repeated(&self, times: u32) -> Word {
        let mut w = Word::identity();
        for _ in 0..times {
            w = w.concat(self);
        }
        w
    }

    pub fn conjugated_by(&self, g: &Word) -> Word {
        g.concat(self).concat(&g.inverse())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, &(g, e)) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if e == 1 {
                write!(f, "{}", g.letter())?;
            } else {
                write!(f, "{}^{}", g.letter(), e)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid word `{input}`: {reason}")]
pub struct ParseWordError {
    pub input: String,
    pub reason: String,
}

impl FromStr for Word {
    type Err = ParseWordError;

    /// Tokens are `a`, `b`, `d`, each optionally followed by `^k` with `k` a
    /// nonzero integer; whitespace is optional. `1` alone is the identity.
    fn from_str(s: &str) -> std::result::Result<Word, ParseWordError> {
        let err = |reason: String| ParseWordError {
            input: s.to_string(),
            reason,
        };
        if s.trim() == "1" {
            return Ok(Word::identity());
        }
        let mut word = Word::identity();
        let mut chars = s.chars().peekable();
        while let Some(&c) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
                continue;
            }
            let gen = match c {
                'a' => Gen::A,
                'b' => Gen::B,
                'd' => Gen::D,
                other => return Err(err(format!("unexpected token `{other}`"))),
            };
            chars.next();
            let mut exp = 1i64;
            if chars.peek() == Some(&'^') {
                chars.next();
                let mut digits = String::new();
                if chars.peek() == Some(&'-') {
                    digits.push('-');
                    chars.next();
                }
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                exp = digits
                    .parse()
                    .map_err(|_| err(format!("bad exponent after `{}`", gen.letter())))?;
                if exp == 0 {
                    return Err(err("zero exponent".to_string()));
                }
            }
            word.push(gen, exp);
        }
        Ok(word)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// An integer matrix of determinant one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MatSL2 {
    pub m11: i128,
    pub m12: i128,
    pub m21: i128,
    pub m22: i128,
}

impl MatSL2 {
    pub const IDENTITY: MatSL2 = MatSL2 {
        m11: 1,
        m12: 0,
        m21: 0,
        m22: 1,
    };

    pub fn new(m11: i128, m12: i128, m21: i128, m22: i128) -> MatSL2 {
        let m = MatSL2 { m11, m12, m21, m22 };
        assert_eq!(m.det(), 1, "matrix is not in SL(2,Z)");
        m
    }

    pub fn det(&self) -> i128 {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    pub fn trace(&self) -> i128 {
        self.m11 + self.m22
    }

    pub fn mul(&self, rhs: &MatSL2) -> MatSL2 {
        MatSL2 {
            m11: self.m11 * rhs.m11 + self.m12 * rhs.m21,
            m12: self.m11 * rhs.m12 + self.m12 * rhs.m22,
            m21: self.m21 * rhs.m11 + self.m22 * rhs.m21,
            m22: self.m21 * rhs.m12 + self.m22 * rhs.m22,
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == MatSL2::IDENTITY
    }

    pub fn is_neg_identity(&self) -> bool {
        self.m11 == -1 && self.m12 == 0 && self.m21 == 0 && self.m22 == -1
    }

    /// The order of the matrix in SL(2,Z) if finite (1, 2, 3, 4 or 6).
    fn finite_order(&self) -> Option<u32> {
        if self.is_identity() {
            Some(1)
        } else if self.is_neg_identity() {
            Some(2)
        } else {
            match self.trace() {
                -1 => Some(3),
                0 => Some(4),
                1 => Some(6),
                _ => None,
            }
        }
    }
}

fn letter_matrix(gen: Gen, exp: i64) -> MatSL2 {
    let e = exp as i128;
    match gen {
        Gen::A => MatSL2::new(1, e, 0, 1),
        Gen::B => MatSL2::new(1, 0, -e, 1),
        Gen::D => MatSL2::IDENTITY, // (ab)^6
    }
}

/// Product of the letter matrices in written order, with
/// `a -> [[1,1],[0,1]]`, `b -> [[1,0],[-1,1]]`; the rightmost letter acts
/// first on column vectors.
pub fn evaluate(w: &Word) -> MatSL2 {
    w.letters
        .iter()
        .fold(MatSL2::IDENTITY, |acc, &(g, e)| acc.mul(&letter_matrix(g, e)))
}

/// Nielsen-Thurston type of a genus-one, one-boundary mapping class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NTType {
    PseudoAnosov,
    Periodic,
    Reducible,
}

pub fn nt_classify(w: &Word) -> NTType {
    let m = evaluate(w);
    if m.is_identity() || m.is_neg_identity() {
        return NTType::Periodic;
    }
    match m.trace().abs() {
        t if t > 2 => NTType::PseudoAnosov,
        2 => NTType::Reducible,
        _ => NTType::Periodic,
    }
}

// --- Fractional Dehn twist coefficient -----------------------------------
//
// The coefficient is the translation number of the composite of canonical
// lifts of the letters acting on the circle of oriented directions (the
// double cover of the slope circle). Each letter matrix is parabolic there,
// with two antipodal fixed directions; its canonical lift fixes them and
// moves every other point within its half-circle arc, clockwise for a
// positive exponent. One full clockwise turn is one unit, which makes the
// boundary twist worth exactly +1.

/// A point of the direction circle together with the number of signed
/// crossings of the fixed cut direction accumulated so far.
struct LiftedPoint {
    dir: Vec2,
    height: i64,
}

fn cut() -> Vec2 {
    circle::vec2(1, 0)
}

fn reduce(v: Vec2) -> Vec2 {
    let g = v.0.gcd(&v.1);
    if g.is_zero() {
        v
    } else {
        (&v.0 / &g, &v.1 / &g)
    }
}

/// One canonical-lift application of `a^e` or `b^e`. The motion stays within
/// a half turn, so it crosses the cut at most once; the height changes by at
/// most one.
fn apply_letter(gen: Gen, exp: i64, lp: &mut LiftedPoint) {
    debug_assert!(gen != Gen::D);
    let e = BigInt::from(exp);
    let new = reduce(match gen {
        Gen::A => (&lp.dir.0 + &e * &lp.dir.1, lp.dir.1.clone()),
        Gen::B => (lp.dir.0.clone(), &lp.dir.1 - &e * &lp.dir.0),
        Gen::D => unreachable!(),
    });
    if circle::eq(&new, &lp.dir) {
        return; // fixed direction
    }
    let cut = cut();
    let crossed = if exp > 0 {
        // Clockwise motion crosses the cut if the cut lies in (dir, new],
        // landing exactly on the cut included.
        circle::eq(&new, &cut) || circle::in_cw_open_arc(&cut, &lp.dir, &new)
    } else {
        // Anticlockwise motion: cut in [dir, new), departure from the cut
        // included.
        circle::eq(&lp.dir, &cut) || circle::in_cw_open_arc(&cut, &new, &lp.dir)
    };
    if crossed {
        lp.height += if exp > 0 { 1 } else { -1 };
    }
    lp.dir = new;
}

/// Expands `d^k` into `(ab)^(6k)` so that the boundary twist's contribution
/// emerges from cut crossings. Returned in written order.
fn expand_letters(w: &Word) -> Vec<(Gen, i64)> {
    let mut out = Vec::new();
    for &(g, e) in &w.letters {
        match g {
            Gen::A | Gen::B => out.push((g, e)),
            Gen::D => {
                let reps = 6 * e.unsigned_abs();
                for _ in 0..reps {
                    if e > 0 {
                        out.push((Gen::A, 1));
                        out.push((Gen::B, 1));
                    } else {
                        out.push((Gen::B, -1));
                        out.push((Gen::A, -1));
                    }
                }
            }
        }
    }
    out
}

/// Tracks a start direction through `passes` traversals of the word (letters
/// applied rightmost first) and returns the lifted point.
fn track(letters: &[(Gen, i64)], passes: u32, start: (i128, i128)) -> LiftedPoint {
    let mut lp = LiftedPoint {
        dir: circle::vec2(start.0, start.1),
        height: 0,
    };
    for _ in 0..passes {
        for &(g, e) in letters.iter().rev() {
            apply_letter(g, e, &mut lp);
        }
    }
    lp
}

/// The unique integer translation number consistent with a height of `h`
/// accumulated over three traversals: `h - 3t` must land in `{-1, 0, 1}`.
fn integer_translation_from_height(h: i64) -> i64 {
    match h.rem_euclid(3) {
        0 => h / 3,
        1 => (h - 1) / 3,
        2 => (h + 1) / 3,
        _ => unreachable!(),
    }
}

const START_1: (i128, i128) = (2, 3);
const START_2: (i128, i128) = (-5, 3);

/// Exact fractional Dehn twist coefficient of a word.
pub fn fdtc(w: &Word) -> Rational {
    let m = evaluate(w);
    let letters = expand_letters(w);

    if let Some(order) = m.finite_order() {
        // The order-fold composite acts trivially on directions, so the
        // composite lift is a rigid translation and one tracked point gives
        // the exact value.
        let lp = track(&letters, order, START_1);
        debug_assert!(circle::eq(&lp.dir, &circle::vec2(START_1.0, START_1.1)));
        return Ratio::new(lp.height, order as i64);
    }

    if m.trace() >= 2 {
        // Parabolic or hyperbolic with positive trace: the circle map has a
        // fixed point, so the translation number is an integer. Three
        // traversals pin it down; the second start point cross-checks.
        let t1 = integer_translation_from_height(track(&letters, 3, START_1).height);
        let t2 = integer_translation_from_height(track(&letters, 3, START_2).height);
        debug_assert_eq!(t1, t2);
        return Ratio::from_integer(t1);
    }

    // Negative trace at or below -2: the map swaps antipodal periodic
    // points, so the value is a half-integer. The squared word has positive
    // trace; its integer translation number is twice the value.
    let t1 = integer_translation_from_height(track(&letters, 6, START_1).height);
    let t2 = integer_translation_from_height(track(&letters, 6, START_2).height);
    debug_assert_eq!(t1, t2);
    Ratio::new(t1, 2)
}

/// Right-veering verdict for a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Veering {
    Yes,
    No,
    Indeterminate,
}

pub fn right_veering(w: &Word) -> Veering {
    let c = fdtc(w);
    let zero = Rational::zero();
    match nt_classify(w) {
        NTType::PseudoAnosov => {
            if c > zero {
                Veering::Yes
            } else {
                Veering::No
            }
        }
        NTType::Periodic => {
            if c >= zero {
                Veering::Yes
            } else {
                Veering::No
            }
        }
        NTType::Reducible => {
            if c > zero {
                Veering::Yes
            } else if c < zero {
                Veering::No
            } else {
                Veering::Indeterminate
            }
        }
    }
}

/// The integer attached to a genus-one fibered knot monodromy:
/// `3 + ceil(c)` when pseudo-Anosov, `4 + floor(c)` otherwise.
pub fn n_k(w: &Word) -> i64 {
    let c = fdtc(w);
    match nt_classify(w) {
        NTType::PseudoAnosov => 3 + c.ceil().to_integer(),
        _ => 4 + c.floor().to_integer(),
    }
}

// --- Normal-form recognition ----------------------------------------------

/// One of the six monodromy normal-form templates, with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum NormalForm {
    /// `d^n a^{r_1} b^-1 ... a^{r_k} b^-1`, all `r_i >= 0`, some `r_i > 0`.
    Type1 { n: i64, rs: Vec<i64> },
    /// `d^n a b^2 a b^2 a^{r_1} b^-1 ... a^{r_k} b^-1`, as in type 1.
    Type2 { n: i64, rs: Vec<i64> },
    /// `d^n a^m b^-1` with `m` in `{-1, -2, -3}`.
    Type3 { n: i64, m: i64 },
    /// `d^n a b^2 a b^2 a^m b^-1` with `m` in `{-1, -2, -3}`.
    Type4 { n: i64, m: i64 },
    /// `d^n b^m`, any integer `m`.
    Type5 { n: i64, m: i64 },
    /// `d^n a b^2 a b^2 b^m`, any integer `m`.
    Type6 { n: i64, m: i64 },
}

impl NormalForm {
    pub fn index(&self) -> u8 {
        match self {
            NormalForm::Type1 { .. } => 1,
            NormalForm::Type2 { .. } => 2,
            NormalForm::Type3 { .. } => 3,
            NormalForm::Type4 { .. } => 4,
            NormalForm::Type5 { .. } => 5,
            NormalForm::Type6 { .. } => 6,
        }
    }

    /// Nielsen-Thurston type this template is filed under.
    pub fn template_nt_type(&self) -> NTType {
        match self.index() {
            1 | 2 => NTType::PseudoAnosov,
            3 | 4 => NTType::Periodic,
            _ => NTType::Reducible,
        }
    }
}

/// Decodes an alternating `a^{r} b^{-m}` block sequence ending with a `b`
/// letter into the exponent list `r_1..r_k`; `b^{-m}` with `m > 1` carries
/// `m - 1` implicit zero exponents.
fn decode_blocks(seq: &[(Gen, i64)]) -> Option<Vec<i64>> {
    let mut rs = Vec::new();
    let mut pending_r = 0i64;
    let mut saw_positive = false;
    let mut iter = seq.iter().peekable();
    while let Some(&&(g, e)) = iter.peek() {
        match g {
            Gen::A => {
                if e <= 0 {
                    return None;
                }
                pending_r = e;
                saw_positive = true;
                iter.next();
                // An a-run must be followed by a b-run.
                match iter.peek() {
                    Some(&&(Gen::B, _)) => {}
                    _ => return None,
                }
            }
            Gen::B => {
                if e >= 0 {
                    return None;
                }
                rs.push(pending_r);
                pending_r = 0;
                for _ in 1..-e {
                    rs.push(0);
                }
                iter.next();
            }
            Gen::D => return None,
        }
    }
    if rs.is_empty() || !saw_positive {
        return None;
    }
    Some(rs)
}

/// Purely syntactic match of a word against the six normal-form templates,
/// after merging exponents and commuting all boundary-twist letters to the
/// front. No conjugacy search is performed.
pub fn recognize_normal_form(w: &Word) -> Option<NormalForm> {
    // d is central, so collect its total exponent and strip it.
    let n: i64 = w
        .letters
        .iter()
        .filter(|&&(g, _)| g == Gen::D)
        .map(|&(_, e)| e)
        .sum();
    let seq = Word::from_letters(
        w.letters
            .iter()
            .filter(|&&(g, _)| g != Gen::D)
            .copied(),
    );
    let seq = seq.letters();

    // Type 5: d^n b^m (including the bare d^n, m = 0).
    match seq {
        [] => return Some(NormalForm::Type5 { n, m: 0 }),
        [(Gen::B, m)] => return Some(NormalForm::Type5 { n, m: *m }),
        _ => {}
    }

    let prefix = [(Gen::A, 1), (Gen::B, 2), (Gen::A, 1), (Gen::B, 2)];
    if seq.len() >= 4 && seq[..4] == prefix {
        let rest = &seq[4..];
        // Type 4: prefix then a^m b^-1 with m in {-1,-2,-3}.
        if let [(Gen::A, m), (Gen::B, -1)] = rest {
            if (-3..=-1).contains(m) {
                return Some(NormalForm::Type4 { n, m: *m });
            }
        }
        // Type 2: prefix then type-1 blocks.
        if let Some(rs) = decode_blocks(rest) {
            return Some(NormalForm::Type2 { n, rs });
        }
        // Type 6 with m = 0 falls through: rest is empty.
        if rest.is_empty() {
            return Some(NormalForm::Type6 { n, m: 0 });
        }
    }

    // Type 6: a b^2 a b^{2+m}; the merged tail exponent encodes m.
    match seq {
        [(Gen::A, 1), (Gen::B, 2), (Gen::A, 1)] => {
            return Some(NormalForm::Type6 { n, m: -2 });
        }
        [(Gen::A, 1), (Gen::B, 2), (Gen::A, 1), (Gen::B, e)] => {
            return Some(NormalForm::Type6 { n, m: e - 2 });
        }
        _ => {}
    }

    // Type 3: a^m b^-1 with m in {-1,-2,-3}.
    if let [(Gen::A, m), (Gen::B, -1)] = seq {
        if (-3..=-1).contains(m) {
            return Some(NormalForm::Type3 { n, m: *m });
        }
    }

    // Type 1: alternating a^{r_i > 0} / b^{-m} blocks ending in b.
    decode_blocks(seq).map(|rs| NormalForm::Type1 { n, rs })
}
