//! Concrete instances of the seven standard families of commuting pairs.

use crate::classifier::Case;
use crate::morphisms::BinaryMorphism;

pub struct Fixture {
    pub number: u8,
    pub title: &'static str,
    pub g1: &'static str,
    pub g2: &'static str,
    /// Expected case and, where meaningful, the clause that must hold.
    pub expect: Option<(Case, &'static str)>,
}

impl Fixture {
    pub fn morphisms(&self) -> (BinaryMorphism, BinaryMorphism) {
        (
            self.g1.parse().expect("fixture literal"),
            self.g2.parse().expect("fixture literal"),
        )
    }
}

pub const FIXTURES: [Fixture; 7] = [
    Fixture {
        number: 1,
        title: "letter-wise powers: a->a^2, b->b^3 and a->a^3, b->b^2",
        g1: "a=aa,b=bbb",
        g2: "a=aaa,b=bb",
        expect: None,
    },
    Fixture {
        number: 2,
        title: "a->a, b->b^2 and a->a^2, b->b",
        g1: "a=a,b=bb",
        g2: "a=aa,b=b",
        expect: Some((Case::GapOneVsMany, "ii")),
    },
    Fixture {
        number: 3,
        title: "b->(ba^2)^(p-1)b for p = 2, 3",
        g1: "a=a,b=baab",
        g2: "a=a,b=baabaab",
        expect: Some((Case::MultIndependent, "ii")),
    },
    Fixture {
        number: 4,
        title: "g1 = h, g2 = h^2 for h: a->a, b->bab",
        g1: "a=a,b=bab",
        g2: "a=a,b=bababab",
        expect: None,
    },
    Fixture {
        number: 5,
        title: "a-conjugate images: b->abab and b->baba",
        g1: "a=a,b=abab",
        g2: "a=a,b=baba",
        expect: None,
    },
    Fixture {
        number: 6,
        title: "a->eps, b->w^i and b->w^j with w = a^2, i = 1, j = 2",
        g1: "a=eps,b=aa",
        g2: "a=eps,b=aaaa",
        expect: Some((Case::SingularBImage, "identity")),
    },
    Fixture {
        number: 7,
        title: "a->eps, b->(a^1 b a^0)^1 and a->a, b->(ba^1)^1 b",
        g1: "a=eps,b=ab",
        g2: "a=a,b=bab",
        expect: Some((Case::SingularAImage, "v")),
    },
];
