//! Randomized cross-checks between the structural answers and brute force.

use proptest::prelude::*;

use tricomm::classifier::{a_conjugates, classify, direct_commute};
use tricomm::morphisms::{compose, BinaryMorphism, TriangularForm};
use tricomm::omega::{gap, gaps_direct, OmegaSpec};
use tricomm::words::{Letter, Word};

fn form() -> impl Strategy<Value = TriangularForm> {
    prop_oneof![
        (0u64..4, 0u64..4).prop_map(|(s, e)| TriangularForm::b_only(s, e)),
        (0u64..4, 0u64..3, prop::collection::vec(0u64..3, 0..4), 0u64..3)
            .prop_map(|(s, g1, alphas, g2)| TriangularForm::core(s, g1, alphas, g2)),
    ]
}

fn morphism() -> impl Strategy<Value = BinaryMorphism> {
    form().prop_map(|f| f.to_morphism().unwrap())
}

/// Forms with `p >= 2` and `s >= 1`, for which the gap sequence is defined.
fn gap_form() -> impl Strategy<Value = TriangularForm> {
    (1u64..4, 0u64..4, prop::collection::vec(0u64..4, 1..4), 0u64..4)
        .prop_map(|(s, g1, alphas, g2)| TriangularForm::core(s, g1, alphas, g2))
}

fn word() -> impl Strategy<Value = Word> {
    "[ab]{0,8}".prop_map(|s| if s.is_empty() { Word::empty() } else { s.parse().unwrap() })
}

proptest! {
    #[test]
    fn classifier_agrees_with_composition(g1 in morphism(), g2 in morphism()) {
        let report = classify(&g1, &g2).unwrap();
        prop_assert_eq!(report.prediction, direct_commute(&g1, &g2).unwrap());
    }

    #[test]
    fn prediction_is_symmetric(g1 in morphism(), g2 in morphism()) {
        let forward = classify(&g1, &g2).unwrap();
        let backward = classify(&g2, &g1).unwrap();
        prop_assert_eq!(forward.prediction, backward.prediction);
        prop_assert_eq!(forward.case, backward.case);
    }

    #[test]
    fn every_morphism_commutes_with_its_square(g in morphism()) {
        let square = compose(&g, &g).unwrap();
        prop_assert!(classify(&g, &square).unwrap().prediction);
    }

    #[test]
    fn gaps_repeat_modulo_p(h in gap_form(), n in 1u64..100) {
        // with s = 1 and no outer exponents, A(i) depends only on i mod p for i not divisible by p
        let h = TriangularForm::core(1, 0, h.core_parts().unwrap().1.to_vec(), 0);
        let p = h.p();
        for i in 1..p {
            prop_assert_eq!(gap(&h, i + p * n).unwrap(), gap(&h, i).unwrap());
        }
    }

    #[test]
    fn closed_form_gap_matches_expansion(h in gap_form()) {
        let direct = gaps_direct(&h, 300).unwrap();
        for (k, &d) in direct.iter().enumerate() {
            prop_assert_eq!(gap(&h, k as u64 + 1).unwrap(), d);
        }
    }

    #[test]
    fn omega_prefixes_are_consistent(h in gap_form(), short in 0u64..200, extra in 0u64..200) {
        let spec = OmegaSpec::new(&h).unwrap();
        prop_assume!(spec.is_defined());
        let long = spec.prefix(short + extra).unwrap();
        let head = spec.prefix(short).unwrap();
        prop_assert!(head.is_prefix_of(&long));
        prop_assert_eq!(long.len().unwrap(), short + extra);
    }

    #[test]
    fn a_conjugacy_is_an_equivalence(u in word(), v in word(), w in word()) {
        prop_assert!(a_conjugates(&u, &u));
        prop_assert_eq!(a_conjugates(&u, &v), a_conjugates(&v, &u));
        if a_conjugates(&u, &v) && a_conjugates(&v, &w) {
            prop_assert!(a_conjugates(&u, &w));
        }
    }

    #[test]
    fn a_conjugates_share_letter_counts(u in word(), v in word()) {
        if a_conjugates(&u, &v) {
            prop_assert_eq!(u.occ(Letter::A).unwrap(), v.occ(Letter::A).unwrap());
            prop_assert_eq!(u.occ(Letter::B).unwrap(), v.occ(Letter::B).unwrap());
        }
    }
}
