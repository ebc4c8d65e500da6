//! Plain word rewriting with the defining relations read as oriented rules.
//!
//! This is a second, deliberately naive route to normal forms. It works on
//! raw words, picks one redex at a time according to a [`Strategy`], and never
//! shares code with the monomial-pushing engine in the parent module. The two
//! are compared in tests, and different strategies are compared against each
//! other to exercise confluence.
//!
//! Rules, for `a > b` in the basis order `Xm < Xp < X0 < C < C2p`:
//!
//! ```text
//! C g    -> g C        (g in Xm, Xp, X0)
//! C2p g  -> g C2p      (g in Xm, Xp, X0, C)
//! X0 Xp  -> q^-2 Xp X0 + q^-1 Xp C
//! X0 Xm  -> q^2  Xm X0 - q    Xm C
//! Xp Xm  -> C2p + q   X0 C - q^2  X0 X0
//! Xm Xp  -> C2p - q^-1 X0 C - q^-2 X0 X0
//! ```

use std::collections::HashMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::{AlgebraElement, Generator, Monomial, Word};
use crate::cyclotomic::{CycNumber, RootOrder};

use Generator::*;

/// Which redex to contract next.
#[derive(Clone, Copy, Debug)]
pub enum Strategy {
    Leftmost,
    Rightmost,
    /// Uniformly random redex position and random reducible word, seeded.
    Random(u64),
}

fn is_redex(a: Generator, b: Generator) -> bool {
    a > b || (a == Xm && b == Xp)
}

/// Right-hand side of the rule for the pair `(a, b)`.
fn rule(a: Generator, b: Generator, order: &RootOrder) -> Vec<(CycNumber, Vec<Generator>)> {
    let one = order.one();
    match (a, b) {
        (C | C2p, g) => vec![(one, vec![g, a])],
        (X0, Xp) => vec![
            (order.q_pow(-2), vec![Xp, X0]),
            (order.q_pow(-1), vec![Xp, C]),
        ],
        (X0, Xm) => vec![(order.q_pow(2), vec![Xm, X0]), (-order.q(), vec![Xm, C])],
        (Xp, Xm) => vec![
            (one, vec![C2p]),
            (order.q(), vec![X0, C]),
            (-order.q_pow(2), vec![X0, X0]),
        ],
        (Xm, Xp) => vec![
            (one, vec![C2p]),
            (-order.q_pow(-1), vec![X0, C]),
            (-order.q_pow(-2), vec![X0, X0]),
        ],
        _ => unreachable!("({a:?}, {b:?}) is not a redex"),
    }
}

/// Normal form of a sum of words by repeated single-step rewriting.
pub fn rewrite_normal_form(
    words: &[Word],
    order: &RootOrder,
    strategy: Strategy,
) -> AlgebraElement {
    let mut rng = match strategy {
        Strategy::Random(seed) => Some(StdRng::seed_from_u64(seed)),
        _ => None,
    };
    let mut pending: HashMap<Vec<Generator>, CycNumber> = HashMap::new();
    let mut done = AlgebraElement::zero();
    for w in words {
        accumulate(&mut pending, w.letters.clone(), &w.coeff);
    }
    loop {
        let keys: Vec<Vec<Generator>> = {
            let mut k: Vec<_> = pending.keys().cloned().collect();
            // deterministic iteration before any random choice
            k.sort();
            k
        };
        if keys.is_empty() {
            break;
        }
        let word = match rng.as_mut() {
            Some(r) => keys[r.gen_range(0..keys.len())].clone(),
            None => keys[0].clone(),
        };
        let coeff = pending.remove(&word).unwrap();
        let redexes: Vec<usize> = (0..word.len().saturating_sub(1))
            .filter(|&i| is_redex(word[i], word[i + 1]))
            .collect();
        if redexes.is_empty() {
            done.add_term(word_to_monomial(&word), &coeff);
            continue;
        }
        let pos = match (strategy, rng.as_mut()) {
            (Strategy::Leftmost, _) => redexes[0],
            (Strategy::Rightmost, _) => *redexes.last().unwrap(),
            (Strategy::Random(_), Some(r)) => redexes[r.gen_range(0..redexes.len())],
            (Strategy::Random(_), None) => unreachable!(),
        };
        for (c, replacement) in rule(word[pos], word[pos + 1], order) {
            let mut next = word[..pos].to_vec();
            next.extend(replacement);
            next.extend_from_slice(&word[pos + 2..]);
            accumulate(&mut pending, next, &(&coeff * &c));
        }
    }
    done
}

fn accumulate(map: &mut HashMap<Vec<Generator>, CycNumber>, w: Vec<Generator>, c: &CycNumber) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&w) {
        Some(e) => {
            *e += c;
            if e.is_zero() {
                map.remove(&w);
            }
        }
        None => {
            map.insert(w, c.clone());
        }
    }
}

fn word_to_monomial(w: &[Generator]) -> Monomial {
    let count = |g| w.iter().filter(|&&x| x == g).count() as u32;
    Monomial::new(count(Xm), count(Xp), count(X0), count(C), count(C2p))
        .expect("irreducible words never mix Xm and Xp")
}
