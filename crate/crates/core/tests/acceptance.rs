//! Acceptance gate: one test per criterion, each printing a single
//! pass line. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines.

mod common;

use num::rational::Ratio;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use openbook::brieskorn::{self, BrieskornCell, Family, StatusKind};
use openbook::farey::{self, Slope};
use openbook::fillability::{self, Ambient, FillLevel, FillabilityStatus, SurgeryExistence};
use openbook::mcg::{self, Gen, Rational, Word};
use openbook::surgery::{self, MixedTorus, TransverseKind};

fn w(text: &str) -> Word {
    text.parse().unwrap()
}

fn rat(n: i64, d: i64) -> Rational {
    Ratio::new(n, d)
}

fn random_word(rng: &mut StdRng, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_letters((0..len).map(|_| {
        let g = match rng.gen_range(0..3) {
            0 => Gen::A,
            1 => Gen::B,
            _ => Gen::D,
        };
        let e = loop {
            let e = rng.gen_range(-3i64..=3);
            if e != 0 {
                break e;
            }
        };
        (g, e)
    }))
}

#[test]
fn criterion_01_twisting_number_anchors() {
    assert_eq!(mcg::fdtc(&w("a b")), rat(1, 6));
    assert_eq!(mcg::fdtc(&w("a^-1 b^-1")), rat(-1, 6));
    assert_eq!(mcg::fdtc(&w("a b^-1")), rat(0, 1));
    for k in -5i64..=5 {
        let delta_k = Word::from_letters([(Gen::D, k)]);
        assert_eq!(mcg::fdtc(&delta_k), Ratio::from_integer(k), "boundary twist power {k}");
    }
    println!("PASS criterion 1: twisting-number anchors are exact");
}

#[test]
fn criterion_02_relators_and_numeric_oracle() {
    assert!(mcg::evaluate(&w("a b").repeated(6)).is_identity());
    assert!(mcg::evaluate(&w("a b^2 a b^2").repeated(2)).is_identity());
    assert_eq!(
        mcg::evaluate(&w("a b").repeated(6)),
        mcg::evaluate(&w("a b^2 a b^2").repeated(2))
    );
    let half = mcg::fdtc(&w("a b^2 a b^2"));
    assert_eq!(half, rat(1, 2));
    let approx = common::fdtc_numeric(&w("a b^2 a b^2"), 10_000);
    assert!((approx - 0.5).abs() < 2e-3, "oracle gave {approx}");
    println!("PASS criterion 2: relators hold and the numeric oracle confirms 1/2");
}

#[test]
fn criterion_03_quasimorphism_properties() {
    let mut rng = StdRng::seed_from_u64(0x0b5e_55ed);
    for trial in 0..200 {
        let word = random_word(&mut rng, 20);
        let c = mcg::fdtc(&word);
        let k = rng.gen_range(-3i64..=3);
        let shifted = Word::from_letters([(Gen::D, k)]).concat(&word);
        assert_eq!(mcg::fdtc(&shifted), c + Ratio::from_integer(k), "trial {trial}");
        let g = random_word(&mut rng, 8);
        assert_eq!(mcg::fdtc(&word.conjugated_by(&g)), c, "trial {trial}");
    }
    println!("PASS criterion 3: twist additivity and conjugacy invariance on 200 random words");
}

#[test]
fn criterion_04_window_integers_and_intervals() {
    assert_eq!(mcg::n_k(&w("a b")), 4);
    assert_eq!(mcg::n_k(&w("a^-1 b^-1")), 3);
    assert_eq!(mcg::n_k(&w("a b^-1")), 3);
    // R(1/4) = (0, 1/4) and R(1/3) = (0, 1/3).
    let quarter = Slope::new(1, 4);
    assert!(fillability::r_set_contains(quarter, Slope::new(1, 5)).unwrap());
    assert!(!fillability::r_set_contains(quarter, Slope::new(1, 3)).unwrap());
    assert!(!fillability::r_set_contains(quarter, Slope::new(1, 4)).unwrap());
    assert!(!fillability::r_set_contains(quarter, Slope::ZERO).unwrap());
    let third = Slope::new(1, 3);
    assert!(fillability::r_set_contains(third, Slope::new(1, 4)).unwrap());
    assert!(!fillability::r_set_contains(third, Slope::new(1, 2)).unwrap());
    println!("PASS criterion 4: window integers and intervals match the worked examples");
}

#[test]
fn criterion_05_candidate_uniqueness_and_neighbor_oracle() {
    let torus = MixedTorus::new(Slope::integer(-1), Slope::ZERO, Slope::ONE).unwrap();
    assert_eq!(surgery::menke_candidates(&torus), vec![Slope::INFINITY]);

    let mut rng = StdRng::seed_from_u64(0xfa4e_facade);
    let pick = |rng: &mut StdRng| loop {
        let p = rng.gen_range(-6i64..=6);
        let q = rng.gen_range(0i64..=6);
        if p != 0 || q != 0 {
            return Slope::new(p, q);
        }
    };
    let mut done = 0;
    while done < 100 {
        let (s0, from, to) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        if from == to {
            continue;
        }
        let Ok(found) = farey::neighbors_in_arc(s0, from, to) else {
            continue;
        };
        common::recheck_neighbors(s0, from, to, &found);
        let small = |s: &Slope| s.p().abs() <= 50 && s.q() <= 50;
        let found_small: Vec<Slope> = found.iter().copied().filter(small).collect();
        let oracle = common::neighbors_brute_force(s0, from, to, 50);
        assert_eq!(found_small, oracle, "arc ({from}, {to}) around {s0}");
        done += 1;
    }
    println!("PASS criterion 5: candidate uniqueness and 100 brute-force neighbor checks");
}

#[test]
fn criterion_06_framing_matrices() {
    for n in 0i64..=20 {
        let mut s = Slope::new(1, n);
        for k in 0i64..=20 {
            assert_eq!(s, Slope::new(1, n + k), "n = {n}, k = {k}");
            s = surgery::transverse_framing_update(s, TransverseKind::AdmissibleMinusOne);
        }
    }
    for p in -20i64..=20 {
        for q in 0i64..=20 {
            if p == 0 && q == 0 {
                continue;
            }
            let s = Slope::new(p, q);
            let down = surgery::transverse_framing_update(s, TransverseKind::AdmissibleMinusOne);
            let back = surgery::transverse_framing_update(down, TransverseKind::InadmissiblePlusOne);
            assert_eq!(back, s);
        }
    }
    println!("PASS criterion 6: framing updates compose and invert exactly");
}

#[test]
fn criterion_07_atlas_tables() {
    let table = |family, n| -> Vec<(i64, i64, StatusKind)> {
        brieskorn::enumerate(family, n)
            .unwrap()
            .iter()
            .map(|c| (c.i(), c.j(), brieskorn::status(c).kind))
            .collect()
    };
    use StatusKind::*;
    let expected = vec![
        (3, 0, StrongNotLiouville),
        (2, -1, EdgeConjecturedStein),
        (2, 1, EdgeConjecturedStein),
        (1, -2, EdgeConjecturedStein),
        (1, 0, StrongNotLiouville),
        (1, 2, EdgeConjecturedStein),
        (0, -3, Stein),
        (0, -1, Stein),
        (0, 1, Stein),
        (0, 3, Stein),
    ];
    assert_eq!(table(Family::Eta, 5), expected);
    assert_eq!(table(Family::Xi, 4), expected);

    for n in 2..=50 {
        assert_eq!(
            brieskorn::enumerate(Family::Eta, n).unwrap().len() as i64,
            n * (n - 1) / 2
        );
    }
    for n in 1..=50 {
        assert_eq!(
            brieskorn::enumerate(Family::Xi, n).unwrap().len() as i64,
            n * (n + 1) / 2
        );
    }
    // The status rules form a total, single-valued assignment: status() is a
    // total function, so it suffices that it runs on every cell.
    for family in [Family::Eta, Family::Xi] {
        for n in family_levels(family) {
            for cell in brieskorn::enumerate(family, n).unwrap() {
                let _ = brieskorn::status(&cell);
            }
        }
    }
    let k = |f, n, i, j| brieskorn::status(&BrieskornCell::new(f, n, i, j).unwrap()).kind;
    assert_eq!(k(Family::Eta, 5, 1, 0), StrongNotLiouville);
    assert_eq!(k(Family::Xi, 4, 1, 0), StrongNotLiouville);
    assert_eq!(k(Family::Eta, 4, 1, 1), Stein);
    assert_eq!(k(Family::Eta, 4, 1, -1), Stein);
    assert_eq!(k(Family::Xi, 4, 2, 1), EdgeConjecturedStein);
    assert_eq!(k(Family::Xi, 4, 2, -1), EdgeConjecturedStein);
    println!("PASS criterion 7: atlas tables, counts, and statuses up to level 50");
}

fn family_levels(family: Family) -> std::ops::RangeInclusive<i64> {
    match family {
        Family::Eta => 2..=50,
        Family::Xi => 1..=50,
    }
}

#[test]
fn criterion_08_mixedness_equivalence() {
    for family in [Family::Eta, Family::Xi] {
        for n in family_levels(family) {
            for cell in brieskorn::enumerate(family, n).unwrap() {
                let (l, r) = cell.lr_params();
                let span = match family {
                    Family::Eta => n - cell.i() - 2,
                    Family::Xi => n - cell.i() - 1,
                };
                assert_eq!(l > 0 && r > 0, cell.j().abs() < span, "{cell:?}");
                assert_eq!(cell.mixed(), l > 0 && r > 0);
            }
        }
    }
    println!("PASS criterion 8: mixedness iff |j| below the row span, levels up to 50");
}

#[test]
fn criterion_09_verdict_engine() {
    let mut rng = StdRng::seed_from_u64(0x5ee_d5eed);
    let base = FillabilityStatus::tight(Some(FillLevel::Weak), FillLevel::Strong);
    for _ in 0..50 {
        let r = rat(rng.gen_range(0..=100), rng.gen_range(1..=10));
        let v = fillability::mixed_surgery_verdict(&base, r);
        assert_eq!(v.status, FillabilityStatus::Overtwisted);
    }
    for _ in 0..50 {
        let r = rat(rng.gen_range(-100..=-1), rng.gen_range(1..=10));
        let v = fillability::mixed_surgery_verdict(&base, r);
        let bounds = v.status.bounds().expect("negative surgery stays tight");
        assert!(bounds.upper < FillLevel::Liouville);
    }
    // 200-point sweep of (-1, 1): a verdict exists exactly on (0, 1/4).
    let trefoil = w("a b");
    for k in -100i64..=100 {
        if k == 0 {
            continue;
        }
        let r = Slope::new(k, 100);
        let out =
            fillability::fibered_surgery_verdict(&trefoil, r, Ambient::RationalHomologySphere)
                .unwrap();
        let expected = k > 0 && rat(k, 100) < rat(1, 4);
        assert_eq!(
            matches!(out, SurgeryExistence::Exists(_)),
            expected,
            "r = {k}/100"
        );
    }
    println!("PASS criterion 9: overtwisted/tight verdicts and the (0, 1/4) existence window");
}

#[test]
fn criterion_10_seifert_coefficient_sweep() {
    let mut rng = StdRng::seed_from_u64(0xc0ef_f1c1);
    for trial in 0..100 {
        let word = random_word(&mut rng, 12);
        let r = rat(rng.gen_range(-60..=-1), rng.gen_range(1..=12));
        let closed = surgery::seifert_coefficient(&word, r).unwrap();
        let via_matrix = surgery::seifert_coefficient_via_framing(&word, r).unwrap();
        assert_eq!(closed, via_matrix, "trial {trial}");
        let window = Slope::new(1, mcg::n_k(&word));
        assert!(
            fillability::r_set_contains(window, Slope::from_rational(closed)).unwrap(),
            "trial {trial}: {closed} outside the window of {window}"
        );
    }
    println!("PASS criterion 10: 100 Seifert coefficients land in the window, both routes agree");
}
