#![allow(dead_code)]

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sl2q::{AlgebraElement, CycNumber, Generator, Monomial, RootOrder, Word};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random field element with small rational coordinates.
pub fn scalar<R: Rng>(o: &RootOrder, rng: &mut R) -> CycNumber {
    let den: i64 = rng.gen_range(1..=3);
    CycNumber::random(o.field(), rng, 3).scale(&BigRational::new(1.into(), den.into()))
}

pub fn nonzero_scalar<R: Rng>(o: &RootOrder, rng: &mut R) -> CycNumber {
    loop {
        let s = scalar(o, rng);
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn random_letters<R: Rng>(rng: &mut R, max_len: usize) -> Vec<Generator> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| Generator::ALL[rng.gen_range(0..Generator::ALL.len())])
        .collect()
}

pub fn random_word<R: Rng>(o: &RootOrder, rng: &mut R, max_len: usize) -> Word {
    Word::new(nonzero_scalar(o, rng), random_letters(rng, max_len))
}

pub fn random_monomial<R: Rng>(rng: &mut R, max_exp: u32) -> Monomial {
    let (mut am, mut ap) = (rng.gen_range(0..=max_exp), rng.gen_range(0..=max_exp));
    if rng.gen_bool(0.5) {
        am = 0;
    } else {
        ap = 0;
    }
    Monomial::new(
        am,
        ap,
        rng.gen_range(0..=max_exp),
        rng.gen_range(0..=max_exp),
        rng.gen_range(0..=max_exp),
    )
    .expect("one of a_minus, a_plus is zero")
}

pub fn random_element<R: Rng>(
    o: &RootOrder,
    rng: &mut R,
    terms: usize,
    max_exp: u32,
) -> AlgebraElement {
    let k = rng.gen_range(0..=terms);
    AlgebraElement::from_terms((0..k).map(|_| (random_monomial(rng, max_exp), scalar(o, rng))))
}
