use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::knots::{catalog, CATALOG, Knot};
use crate::words::{parse_word, random};

fn mw(s: &str) -> Word {
    // x1 is the meridian, x2.. are the fiber generators
    parse_word(s).unwrap()
}

#[test]
fn meridional_presentation_shape() {
    for name in CATALOG {
        let model = catalog(name).unwrap();
        let p = meridional_presentation(&model);
        assert_eq!((p.rank(), p.relators().len()), (3, 2));
        assert_eq!(p.abelianization(), (1, vec![]));
        assert_eq!(p.generator_names(), &["m", "a1", "b1"]);
        let delta = Knot::catalog(name).unwrap().alexander_polynomial().unwrap();
        assert_eq!(&delta, model.alexander_reference());
    }
    let p = meridional_presentation(&catalog("trefoil").unwrap());
    let text: Vec<String> = p.relators().iter().map(|r| p.format_word(r)).collect();
    assert_eq!(text, ["M.B1.m.A1", "M.b1.a1.m.B1"]);
}

#[test]
fn schreier_schema_and_instantiation() {
    let model = catalog("trefoil").unwrap();
    let lp = reidemeister_schreier(&meridional_presentation(&model)).unwrap();
    assert_eq!(lp.base_rank(), 2);
    for (i, (y, z)) in lp.schema().iter().enumerate() {
        assert_eq!(y, &model.monodromy().images()[i]);
        assert_eq!(z, &Word::generator(i + 1));
    }
    let at0: Vec<String> = lp.instantiate(0).iter().map(ToString::to_string).collect();
    assert_eq!(at0, ["X2(0).X1(1)", "x2(0).x1(0).X2(1)"]);
    // rewriting a relator yields the schema at level -1
    for (r, inst) in meridional_presentation(&model).relators().iter().zip(lp.instantiate(-1)) {
        assert_eq!(rewrite_to_cover(r).unwrap(), inst);
    }
    // relators vanish in the fiber group at every level
    for k in -2..=2 {
        for r in lp.instantiate(k) {
            assert!(to_fiber(&r, &model).unwrap().is_empty());
        }
    }
}

#[test]
fn shape_mismatch_is_reported() {
    let p = GroupPresentation::with_generic_names(3, vec![mw("x2.x1.x3.X1")]).unwrap();
    assert!(matches!(reidemeister_schreier(&p), Err(Error::ShapeMismatch(_))));
    let p = GroupPresentation::with_generic_names(3, vec![mw("X1.x2.x1.x1.X3")]).unwrap();
    assert!(matches!(reidemeister_schreier(&p), Err(Error::ShapeMismatch(_))));
}

#[test]
fn rewriting_examples() {
    assert_eq!(rewrite_to_cover(&mw("X1.x2.x1")).unwrap().to_string(), "x1(-1)");
    assert_eq!(rewrite_to_cover(&mw("x2")).unwrap().to_string(), "x1(0)");
    assert_eq!(rewrite_to_cover(&mw("x1.x3.X1.X2")).unwrap().to_string(), "x2(1).X1(0)");
    assert_eq!(rewrite_to_cover(&mw("x1.x2")), Err(Error::NotInCover(1)));
    assert_eq!(project_back(&parse_leveled_word("x1(-1)").unwrap()), mw("X1.x2.x1"));
}

#[test]
fn schreier_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let w = random_cover_word(&mut rng, 2, 16);
        let lw = rewrite_to_cover(&w).unwrap();
        assert_eq!(project_back(&lw), w, "word {}", w.display(crate::words::Alphabet::Generic));
    }
}

#[test]
fn leveled_and_fiber_shifts_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for name in CATALOG {
        let model = catalog(name).unwrap();
        for _ in 0..100 {
            let lw = rewrite_to_cover(&random_cover_word(&mut rng, 2, 10)).unwrap();
            let n = rand::Rng::gen_range(&mut rng, -3..=3);
            let shifted = to_fiber(&lw.t_shift(n, &model).unwrap(), &model).unwrap();
            let expected = to_fiber(&lw, &model).unwrap().t_shift(n, &model).unwrap();
            assert_eq!(shifted, expected);
            assert_eq!(lw.t_shift(n, &model).unwrap().t_shift(-n, &model).unwrap(), lw);
        }
        // conjugation by the meridian lowers levels
        let w = random_cover_word(&mut rng, 2, 10);
        let m = Word::generator(1);
        let conj = &(&m.inverse() * &w) * &m;
        assert_eq!(rewrite_to_cover(&conj).unwrap(), rewrite_to_cover(&w).unwrap().shifted(-1));
    }
}

#[test]
fn shift_inverts_on_classes_and_combinations() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let model = catalog("figure8").unwrap();
    for _ in 0..50 {
        let c = random::combination(&mut rng, 2, 4, 6);
        let there = c.t_shift(2, &model).unwrap();
        assert_eq!(there.t_shift(-2, &model).unwrap(), c);
        let x = random::class(&mut rng, 2, 6);
        assert_eq!(x.t_shift(-1, &model).unwrap().t_shift(1, &model).unwrap(), x);
    }
    let x = parse_leveled_word("x1(0)").unwrap();
    assert_eq!(x.t_shift(3, &model).unwrap().to_string(), "x1(3)");
}

#[test]
fn leveled_text_round_trip() {
    for text in ["x1(0).X2(-1)", "1", "x3(12).x1(-4).X1(0)"] {
        assert_eq!(parse_leveled_word(text).unwrap().to_string(), text);
    }
    assert_eq!(parse_leveled_word("x2(-1)^-1").unwrap().to_string(), "X2(-1)");
    assert_eq!(parse_leveled_word("x1(0).X1(0)").unwrap().to_string(), "1");
    for bad in ["x1", "y1(0)", "x0(0)", "X1(0)^-1", "x1(a)", "x1(0).", ""] {
        assert!(parse_leveled_word(bad).is_err(), "{bad}");
    }
}

#[test]
fn windows() {
    let model = catalog("trefoil").unwrap();
    let w00 = window(&model, 0, 0).unwrap();
    assert_eq!(w00.surface().rank(), 2);
    assert_eq!(w00.projection(), &[Word::generator(1), Word::generator(2)]);
    assert_eq!(w00.surface().boundary_word(), model.boundary_class());

    let w01 = window(&model, 0, 1).unwrap();
    assert_eq!((w01.surface().rank(), w01.surface().genus()), (4, 2));
    assert_eq!(w01.generator(2, 1).unwrap(), 4);
    assert!(w01.generator(1, 2).is_err());
    let fiber_boundary = model.fiber().based_boundary().clone();
    let expected = CyclicWord::from_word(
        &(&fiber_boundary * &model.monodromy().apply_word(&fiber_boundary).unwrap()),
    );
    assert_eq!(w01.project_class(&w01.surface().boundary_word()).unwrap(), expected);
    assert!(window(&model, 1, 0).is_err());

    let w = window(&model, -1, 1).unwrap();
    assert_eq!(w.projection()[0], model.monodromy().inverse_images()[0]);
}

#[test]
fn pushforward_is_linear_and_class_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let model = catalog("figure8").unwrap();
    let wm = window(&model, 0, 1).unwrap();
    let identity = window(&model, 0, 0).unwrap();
    for _ in 0..50 {
        let a = random::combination(&mut rng, 4, 4, 6);
        let b = random::combination(&mut rng, 4, 4, 6);
        let lhs = pushforward(&wm, &(&a + &b)).unwrap();
        let rhs = &pushforward(&wm, &a).unwrap() + &pushforward(&wm, &b).unwrap();
        assert_eq!(lhs, rhs);
        let c = random::combination(&mut rng, 2, 4, 6);
        assert_eq!(pushforward(&identity, &c).unwrap(), c);
        let x = random::cyclically_reduced(&mut rng, 4, 6);
        let g = random::word(&mut rng, 4, 4);
        assert_eq!(
            wm.project_class(&CyclicWord::from_word(&x.conjugated_by(&g))).unwrap(),
            wm.project_class(&CyclicWord::from_word(&x)).unwrap()
        );
    }
}
