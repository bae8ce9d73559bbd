use proptest::collection::vec;
use proptest::prelude::*;

use knotlie::alexander::LaurentPolynomial;
use knotlie::goldman::goldman_bracket;
use knotlie::surface::standard_surface;
use knotlie::words::{parse_word, Alphabet, CyclicWord, FreeGroupAutomorphism, Letter, Word};

fn letter(rank: usize) -> impl Strategy<Value = Letter> {
    (1..=rank, any::<bool>()).prop_map(|(g, inv)| Letter::new(g, inv))
}

fn word(rank: usize, max_len: usize) -> impl Strategy<Value = Word> {
    vec(letter(rank), 0..=max_len).prop_map(Word::from_letters)
}

fn class(rank: usize, max_len: usize) -> impl Strategy<Value = CyclicWord> {
    vec(letter(rank), 1..=max_len)
        .prop_map(CyclicWord::from_letters)
        .prop_filter("nontrivial", |c| !c.is_empty())
}

fn laurent() -> impl Strategy<Value = LaurentPolynomial> {
    (-3i64..=3, vec(-5i64..=5, 0..5)).prop_map(|(low, c)| LaurentPolynomial::from_i64s(low, &c))
}

proptest! {
    #[test]
    fn reduction_is_a_group(u in word(3, 10), v in word(3, 10), w in word(3, 10)) {
        prop_assert_eq!(&(&u * &v) * &w, &u * &(&v * &w));
        prop_assert!((&u * &u.inverse()).is_empty());
        prop_assert_eq!(Word::from_letters(u.letters().iter().copied()), u.clone());
    }

    #[test]
    fn text_round_trip(w in word(4, 12)) {
        prop_assert_eq!(parse_word(&w.display(Alphabet::Genus)).unwrap(), w.clone());
        prop_assert_eq!(parse_word(&w.display(Alphabet::Generic)).unwrap(), w);
    }

    #[test]
    fn classes_ignore_conjugation(w in word(3, 10), g in word(3, 6)) {
        prop_assert_eq!(CyclicWord::from_word(&w.conjugated_by(&g)), CyclicWord::from_word(&w));
        let n = w.len();
        for p in 0..n {
            prop_assert_eq!(CyclicWord::from_word(&w.rotated(p)), CyclicWord::from_word(&w));
        }
    }

    #[test]
    fn primitive_roots_recompose(c in class(2, 6), k in 1i64..4) {
        let (root, exponent) = c.pow(k).primitive_root().unwrap();
        prop_assert_eq!(root.pow(exponent as i64), c.pow(k));
    }

    #[test]
    fn automorphisms_invert(images in vec(word(2, 3), 0..4)) {
        // compose random Nielsen moves into an automorphism
        let mut phi = FreeGroupAutomorphism::identity(2);
        for (k, w) in images.iter().enumerate() {
            let i = k % 2 + 1;
            let j = 3 - i;
            let mut imgs: Vec<Word> = vec![Word::generator(1), Word::generator(2)];
            imgs[i - 1] = &Word::generator(i) * &Word::generator(j).pow(w.len() as i64 % 3 - 1);
            let step = FreeGroupAutomorphism::from_images(2, imgs).unwrap();
            phi = phi.compose(&step).unwrap();
        }
        let x = Word::generator(1);
        prop_assert_eq!(phi.inverse().apply_word(&phi.apply_word(&x).unwrap()).unwrap(), x);
    }

    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, LaurentPolynomial::zero());
        prop_assert_eq!(a.to_string().parse::<LaurentPolynomial>().unwrap(), a.clone());
        let n = a.normalized();
        prop_assert_eq!(n.normalized(), n);
    }

    #[test]
    fn gcd_divides(a in laurent(), b in laurent(), c in laurent()) {
        let (x, y) = (&a * &c, &b * &c);
        let g = x.gcd(&y);
        if !g.is_zero() {
            prop_assert!(x.div_exact(&g).is_some());
            prop_assert!(y.div_exact(&g).is_some());
            if !c.is_zero() {
                prop_assert!(g.div_exact(&c.normalized()).is_some());
            }
        }
    }

    #[test]
    fn bracket_is_antisymmetric(x in class(4, 6), y in class(4, 6)) {
        let s = standard_surface(2).unwrap();
        let xy = goldman_bracket(&s, &x, &y).unwrap();
        let yx = goldman_bracket(&s, &y, &x).unwrap();
        prop_assert!((&xy + &yx).is_zero());
    }

    #[test]
    fn bracket_respects_inversion(x in class(2, 6), y in class(2, 6)) {
        // reversing both loops preserves intersections and reverses each term
        let s = standard_surface(1).unwrap();
        let lhs = goldman_bracket(&s, &x.inverse(), &y.inverse()).unwrap();
        let rhs = goldman_bracket(&s, &x, &y).unwrap().map_classes(|c| c.inverse());
        prop_assert_eq!(lhs, rhs);
    }
}
