//! Finite-dimensional irreducible representations of `B`, `F` and `A` at
//! `q^(2l) = 1`: explicit builders for every family, exact checks of the
//! defining relations and of the central character, and an irreducibility
//! test through the dimension of the commutant.
//!
//! Matrices act on column vectors: entry `(i, j)` of the matrix of `X` is
//! the coefficient of `v_i` in `X v_j`. Basis vectors are indexed from 0 and
//! the periodic families wrap around, `v_l = v_0`.

mod build;
mod check;
mod classify;
mod json;
pub mod matrix;
mod params;
pub mod random;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::algebra::{AlgebraElement, Generator};
use crate::cyclotomic::{CycNumber, FieldError, RootOrder};

pub use build::{
    build, build_a, build_case4_cyclic, build_f, build_from_json, build_generic_one_dim,
    build_highest_weight, build_one_dim, build_periodic, build_semiperiodic, decompose_case4,
};
pub use check::{
    central_character, check_scalar_relation, commutant_dimension, scalar_relation_sides,
    verify_relations, CentralCharacter, RelationCheck, RelationReport,
};
pub use classify::{classify, CaseRecord, ClassificationReport};
pub use json::RepresentationJson;
pub use matrix::Matrix;
pub use params::{
    Case4CyclicParams, FParams, HighestWeightParams, OneDimParams, Params, PeriodicParams,
    SemiPeriodicParams,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("constraint violated: {0}")]
    Constraint(String),
    #[error("{0} does not act as a scalar")]
    NotScalar(&'static str),
    #[error("malformed input: {0}")]
    Format(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

impl RepError {
    pub(crate) fn constraint(msg: impl Into<String>) -> RepError {
        RepError::Constraint(msg.into())
    }
}

/// Which quotient of `B` a representation is meant for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraTag {
    /// `B` itself.
    B,
    /// `B / (C^2 - lambda^2 C2p = 1)`
    F,
    /// `B / (C = 1)`
    A,
}

impl AlgebraTag {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraTag::B => "B",
            AlgebraTag::F => "F",
            AlgebraTag::A => "A",
        }
    }

    pub fn parse(s: &str) -> Option<AlgebraTag> {
        match s {
            "B" | "b" => Some(AlgebraTag::B),
            "F" | "f" => Some(AlgebraTag::F),
            "A" | "a" => Some(AlgebraTag::A),
            _ => None,
        }
    }
}

impl fmt::Display for AlgebraTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Case 1: `z != 0`, `X-` injective; dimension `l`.
    Periodic,
    /// Case 2: `z != 0`, `x- = 0`, `X+` injective; dimension `l`.
    SemiPeriodic,
    /// Case 3: highest and lowest weight; dimension `n <= l`.
    HighestWeight,
    /// Case 4: `z = 0`, one-dimensional.
    OneDim,
    /// One-dimensional representations that exist for any `q`.
    GenericOneDim,
    /// The reducible `l`-dimensional cyclic module with `z = 0`.
    Case4Cyclic,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Periodic,
        Family::SemiPeriodic,
        Family::HighestWeight,
        Family::OneDim,
        Family::GenericOneDim,
        Family::Case4Cyclic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Periodic => "periodic",
            Family::SemiPeriodic => "semiperiodic",
            Family::HighestWeight => "highest_weight",
            Family::OneDim => "one_dim",
            Family::GenericOneDim => "generic_one_dim",
            Family::Case4Cyclic => "case4_cyclic",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == s)
    }

    /// Classification case number (1 to 4).
    pub fn case(self) -> u8 {
        match self {
            Family::Periodic => 1,
            Family::SemiPeriodic => 2,
            Family::HighestWeight => 3,
            Family::OneDim | Family::GenericOneDim | Family::Case4Cyclic => 4,
        }
    }
}

/// Matrices of `X0`, `X+`, `X-` and the scalar `c` by which `C` acts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub order: RootOrder,
    pub algebra: AlgebraTag,
    pub family: Family,
    pub c: CycNumber,
    pub x0: Matrix,
    pub xp: Matrix,
    pub xm: Matrix,
    /// Parameters the representation was built from, as they appear in JSON.
    pub params: BTreeMap<String, serde_json::Value>,
}

impl Representation {
    pub fn dim(&self) -> usize {
        self.x0.rows()
    }

    /// Matrix of `C2p = X- X+ + q^-1 C X0 + q^-2 X0^2`.
    pub fn casimir_matrix(&self) -> Matrix {
        let o = &self.order;
        self.xm
            .mul(&self.xp)
            .add(&self.x0.scale(&(&self.c * &o.q_pow(-1))))
            .add(&self.x0.mul(&self.x0).scale(&o.q_pow(-2)))
    }

    pub fn generator_matrix(&self, g: Generator) -> Matrix {
        match g {
            Generator::X0 => self.x0.clone(),
            Generator::Xp => self.xp.clone(),
            Generator::Xm => self.xm.clone(),
            Generator::C => Matrix::scalar(&self.c, self.dim()),
            Generator::C2p => self.casimir_matrix(),
        }
    }

    /// Image of a word: the ordered product of generator matrices.
    pub fn image_of_word(&self, letters: &[Generator]) -> Matrix {
        let mut acc = Matrix::identity(self.order.field(), self.dim());
        for &g in letters {
            acc = acc.mul(&self.generator_matrix(g));
        }
        acc
    }

    /// Image of an element given in the ordered basis.
    pub fn image_of_element(&self, e: &AlgebraElement) -> Matrix {
        let mut acc = Matrix::zeros(self.order.field(), self.dim(), self.dim());
        for (m, c) in e.terms() {
            acc = acc.add(&self.image_of_word(&m.letters()).scale(c));
        }
        acc
    }
}
