use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{AlgebraTag, Family, Matrix, RepError, Representation};
use crate::cyclotomic::{CycNumber, RootOrder};

/// Wire form of a [`Representation`]. Field elements are vectors of
/// `phi(n)` rational strings; field order and key order are fixed, so equal
/// representations serialize to identical bytes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationJson {
    pub n: usize,
    pub algebra: String,
    pub dim: usize,
    pub c: Vec<String>,
    #[serde(rename = "X0")]
    pub x0: Vec<Vec<Vec<String>>>,
    #[serde(rename = "Xp")]
    pub xp: Vec<Vec<Vec<String>>>,
    #[serde(rename = "Xm")]
    pub xm: Vec<Vec<Vec<String>>>,
    pub family: String,
    #[serde(default)]
    pub params: BTreeMap<String, Value>,
}

fn matrix_strings(m: &Matrix) -> Vec<Vec<Vec<String>>> {
    m.to_rows()
        .iter()
        .map(|row| row.iter().map(CycNumber::to_strings).collect())
        .collect()
}

fn matrix_from_strings(
    name: &str,
    rows: &[Vec<Vec<String>>],
    dim: usize,
    order: &RootOrder,
) -> Result<Matrix, RepError> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(RepError::Format(format!("{name} must be {dim}x{dim}")));
    }
    let parsed = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| CycNumber::from_strings(order.field(), x))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| RepError::Format(format!("{name}: {e}")))?;
    Ok(Matrix::from_rows(order.field(), parsed).expect("shape checked"))
}

impl RepresentationJson {
    pub fn from_representation(rep: &Representation) -> RepresentationJson {
        RepresentationJson {
            n: rep.order.n(),
            algebra: rep.algebra.name().to_string(),
            dim: rep.dim(),
            c: rep.c.to_strings(),
            x0: matrix_strings(&rep.x0),
            xp: matrix_strings(&rep.xp),
            xm: matrix_strings(&rep.xm),
            family: rep.family.name().to_string(),
            params: rep.params.clone(),
        }
    }

    /// Rebuilds the matrices. An invalid `n` surfaces as
    /// [`RepError::Field`]; everything else malformed as [`RepError::Format`].
    pub fn to_representation(&self) -> Result<Representation, RepError> {
        let order = RootOrder::new(self.n)?;
        let algebra = AlgebraTag::parse(&self.algebra)
            .ok_or_else(|| RepError::Format(format!("unknown algebra {:?}", self.algebra)))?;
        let family = Family::parse(&self.family)
            .ok_or_else(|| RepError::Format(format!("unknown family {:?}", self.family)))?;
        if self.dim == 0 {
            return Err(RepError::Format("dim must be positive".into()));
        }
        let c = CycNumber::from_strings(order.field(), &self.c)
            .map_err(|e| RepError::Format(format!("c: {e}")))?;
        Ok(Representation {
            x0: matrix_from_strings("X0", &self.x0, self.dim, &order)?,
            xp: matrix_from_strings("Xp", &self.xp, self.dim, &order)?,
            xm: matrix_from_strings("Xm", &self.xm, self.dim, &order)?,
            order,
            algebra,
            family,
            c,
            params: self.params.clone(),
        })
    }

    pub fn to_string_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn parse(text: &str) -> Result<RepresentationJson, RepError> {
        serde_json::from_str(text).map_err(|e| RepError::Format(e.to_string()))
    }
}
