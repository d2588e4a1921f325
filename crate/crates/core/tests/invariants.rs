//! Property tests over random permutations.

use std::collections::BTreeSet;

use proptest::prelude::*;

use socle_core::bigrass::{below, is_bigrassmannian};
use socle_core::fulton::{diagram, essential_set, essential_set_from_diagram};
use socle_core::homology::{ext1_dimension, j_subquotients, socle_graded, socle_graded_via_bm};
use socle_core::perm::{
    bruhat_leq, bruhat_leq_subword, compose, content, descents, parse_permutation, reduced_word, rs_shape, support,
};
use socle_core::{Permutation, Side};

fn perm(max_n: usize) -> impl Strategy<Value = Permutation> {
    (3..=max_n).prop_flat_map(|n| {
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::new(v).unwrap())
    })
}

fn pair(max_n: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    (3..=max_n).prop_flat_map(|n| {
        let line = Just((1..=n).collect::<Vec<_>>());
        (line.clone().prop_shuffle(), line.prop_shuffle())
            .prop_map(|(a, b)| (Permutation::new(a).unwrap(), Permutation::new(b).unwrap()))
    })
}

proptest! {
    #[test]
    fn rs_shape_is_inverse_invariant(w in perm(8)) {
        prop_assert_eq!(rs_shape(&w), rs_shape(&w.inverse()));
    }

    #[test]
    fn simple_multiplication_changes_length_by_one(w in perm(8), i in 1usize..8) {
        let i = 1 + (i - 1) % (w.rank() - 1);
        for side in [Side::Left, Side::Right] {
            let sw = w.mul_simple(i, side).unwrap();
            let expected = if w.has_descent(i, side) { w.length() - 1 } else { w.length() + 1 };
            prop_assert_eq!(sw.length(), expected);
        }
    }

    #[test]
    fn reduced_word_rebuilds_w(w in perm(8)) {
        let word = reduced_word(&w);
        prop_assert_eq!(word.len(), w.length());
        prop_assert_eq!(Permutation::from_word(w.rank(), &word).unwrap(), w.clone());
        let letters: BTreeSet<usize> = word.iter().copied().collect();
        prop_assert_eq!(support(&w), letters);
        prop_assert_eq!(content(&w), support(&w).len());
    }

    #[test]
    fn text_forms_round_trip(w in perm(9)) {
        prop_assert_eq!(parse_permutation(&w.to_string(), None).unwrap(), w.clone());
        let word: Vec<String> = reduced_word(&w).iter().map(|i| format!("s{i}")).collect();
        let from_word = parse_permutation(&word.join(" "), Some(w.rank()));
        if w.is_identity() {
            prop_assert!(from_word.is_err());
        } else {
            prop_assert_eq!(from_word.unwrap(), w.clone());
        }
    }

    #[test]
    fn bruhat_criteria_agree((u, w) in pair(8)) {
        prop_assert_eq!(bruhat_leq(&u, &w).unwrap(), bruhat_leq_subword(&u, &w).unwrap());
    }

    #[test]
    fn inverse_reverses_descents(w in perm(8)) {
        prop_assert_eq!(descents(&w, Side::Left), descents(&w.inverse(), Side::Right));
        prop_assert_eq!(compose(&w, &w.inverse()).unwrap(), Permutation::identity(w.rank()));
    }

    #[test]
    fn essential_set_definitions_agree(w in perm(8)) {
        prop_assert_eq!(essential_set(&w), essential_set_from_diagram(&w));
        prop_assert_eq!(diagram(&w).len(), w.length());
    }

    #[test]
    fn socle_formulas_agree(w in perm(7)) {
        let socle = socle_graded(&w).unwrap();
        prop_assert_eq!(&socle, &socle_graded_via_bm(&w).unwrap());
        prop_assert_eq!(socle.len() == 1, is_bigrassmannian(&w));
        prop_assert!(socle.iter().all(|g| g.is_valid()));
        let factors: BTreeSet<_> = j_subquotients(&w).unwrap().into_iter().collect();
        prop_assert!(socle.iter().all(|g| factors.contains(g)));
        prop_assert_eq!(factors.len(), below(&w).len());
    }

    #[test]
    fn subquotients_are_monotone((v, w) in pair(6)) {
        if bruhat_leq(&v, &w).unwrap() {
            let small: BTreeSet<_> = j_subquotients(&v).unwrap().into_iter().collect();
            let big: BTreeSet<_> = j_subquotients(&w).unwrap().into_iter().collect();
            prop_assert!(small.is_subset(&big));
        }
    }

    #[test]
    fn ext_is_at_most_one_off_the_longest((x, y) in pair(7)) {
        let d = ext1_dimension(&x, &y).unwrap();
        if x == Permutation::longest(x.rank()) {
            prop_assert_eq!(d, content(&compose(&x, &y).unwrap()));
        } else {
            prop_assert!(d <= 1);
        }
    }
}
