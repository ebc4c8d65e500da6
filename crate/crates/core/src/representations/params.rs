//! Parameter records for each family and their JSON form.
//!
//! In JSON, field elements are arrays of `phi(n)` rational strings (power
//! basis coordinates). Params files may also give a field element as an
//! integer or as a scalar expression string such as `"q^2 + 1/2"`.

use std::collections::BTreeMap;

use serde_json::{Map, Value};

use super::{Family, RepError};
use crate::cyclotomic::{CycNumber, RootOrder};

pub(crate) type ParamMap = BTreeMap<String, Value>;

pub(crate) fn cyc_to_json(x: &CycNumber) -> Value {
    Value::Array(x.to_strings().into_iter().map(Value::String).collect())
}

pub(crate) fn cyc_from_json(v: &Value, order: &RootOrder) -> Result<CycNumber, RepError> {
    match v {
        Value::Array(items) => {
            let strings = items
                .iter()
                .map(|it| match it {
                    Value::String(s) => Ok(s.clone()),
                    Value::Number(n) if n.is_i64() => Ok(n.to_string()),
                    other => Err(RepError::Format(format!("bad coordinate {other}"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            CycNumber::from_strings(order.field(), &strings)
                .map_err(|e| RepError::Format(e.to_string()))
        }
        Value::Number(n) => n.as_i64().map(|i| order.int(i)).ok_or_else(|| {
            RepError::Format(format!("non-integer number {n}; use a rational string"))
        }),
        Value::String(s) => {
            let ast = crate::expr::parse(s).map_err(|e| RepError::Format(e.to_string()))?;
            if ast.has_generator() {
                return Err(RepError::Format(format!("{s:?} is not a scalar")));
            }
            let e = ast
                .evaluate(order)
                .map_err(|e| RepError::Format(e.to_string()))?;
            Ok(match e.coefficient(&crate::algebra::Monomial::ONE) {
                Some(c) => c.clone(),
                None => order.zero(),
            })
        }
        other => Err(RepError::Format(format!(
            "expected a field element, got {other}"
        ))),
    }
}

struct Reader<'a> {
    map: &'a Map<String, Value>,
    order: &'a RootOrder,
}

impl<'a> Reader<'a> {
    fn new(v: &'a Value, order: &'a RootOrder) -> Result<Self, RepError> {
        match v {
            Value::Object(map) => Ok(Reader { map, order }),
            _ => Err(RepError::Format("params must be a JSON object".into())),
        }
    }

    fn opt(&self, key: &str) -> Result<Option<CycNumber>, RepError> {
        self.map
            .get(key)
            .filter(|v| !v.is_null())
            .map(|v| cyc_from_json(v, self.order))
            .transpose()
    }

    fn req(&self, key: &str) -> Result<CycNumber, RepError> {
        self.opt(key)?
            .ok_or_else(|| RepError::Format(format!("missing parameter {key:?}")))
    }

    fn or(&self, key: &str, default: CycNumber) -> Result<CycNumber, RepError> {
        Ok(self.opt(key)?.unwrap_or(default))
    }

    fn int(&self, key: &str) -> Result<Option<i64>, RepError> {
        match self.map.get(key) {
            None | Some(Value::Null) => Ok(None),
            Some(v) => v
                .as_i64()
                .map(Some)
                .ok_or_else(|| RepError::Format(format!("{key:?} must be an integer"))),
        }
    }
}

fn put(map: &mut ParamMap, key: &str, x: &CycNumber) {
    map.insert(key.to_string(), cyc_to_json(x));
}

fn put_opt(map: &mut ParamMap, key: &str, x: &Option<CycNumber>) {
    if let Some(x) = x {
        put(map, key, x);
    }
}

/// Case 1. `c2p` is free; `x0` and `x_minus` choose `l`-th roots of `z` and
/// `x_-^l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicParams {
    pub c: CycNumber,
    pub c2p: CycNumber,
    pub x0: CycNumber,
    pub x_minus: CycNumber,
}

/// Case 2; `c2p = q^2 x0^2 - q c x0` is derived.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiPeriodicParams {
    pub c: CycNumber,
    pub x0: CycNumber,
    pub x_plus: CycNumber,
}

/// Case 3. `nu` and `c` are tied by `(q^2+1) c = (q^(2n)+1) nu` below
/// dimension `l`, so one of them may be left out and is then derived.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HighestWeightParams {
    pub n_dim: usize,
    pub nu: Option<CycNumber>,
    pub c: Option<CycNumber>,
}

/// Case 4 (and the generic-`q` family): `c = lambda x0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneDimParams {
    pub x0: CycNumber,
    pub xp: CycNumber,
    pub xm: CycNumber,
}

/// The reducible cyclic module with `z = 0`; `x_plus * x_minus = -lambda^-2 d^2`
/// fixes `c2p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case4CyclicParams {
    pub x0: CycNumber,
    pub x_plus: CycNumber,
    pub x_minus: CycNumber,
}

/// Parameters for `B` (and `A`, which pins `c = 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Params {
    Periodic(PeriodicParams),
    SemiPeriodic(SemiPeriodicParams),
    HighestWeight(HighestWeightParams),
    OneDim(OneDimParams),
    GenericOneDim(OneDimParams),
    Case4Cyclic(Case4CyclicParams),
}

/// Parameters for the four families of `F`, where `d^2 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FParams {
    /// `c2p = (c^2 - 1) / lambda^2`
    Periodic {
        c: CycNumber,
        x0: CycNumber,
        x_minus: CycNumber,
    },
    /// `c = (q nu + q^-1 nu^-1) / [2]`, `x0 = (c - nu) / lambda`. When
    /// `[2] = 0` (`n = 4`) the formula degenerates: `nu = +-1` and `c` is free.
    SemiPeriodic {
        nu: CycNumber,
        x_plus: CycNumber,
        c: Option<CycNumber>,
    },
    /// Below dimension `l`, `nu = epsilon q^(1-n)`; at dimension `l`, `nu` is
    /// free. `[2] c = q^-1 nu + q nu^-1` (again `c` is free when `[2] = 0`).
    HighestWeight {
        n_dim: usize,
        epsilon: Option<i64>,
        nu: Option<CycNumber>,
        c: Option<CycNumber>,
    },
    /// `x_- = -lambda^-2 / x_+`
    OneDim { x0: CycNumber, x_plus: CycNumber },
}

impl Params {
    pub fn family(&self) -> Family {
        match self {
            Params::Periodic(_) => Family::Periodic,
            Params::SemiPeriodic(_) => Family::SemiPeriodic,
            Params::HighestWeight(_) => Family::HighestWeight,
            Params::OneDim(_) => Family::OneDim,
            Params::GenericOneDim(_) => Family::GenericOneDim,
            Params::Case4Cyclic(_) => Family::Case4Cyclic,
        }
    }

    pub(crate) fn to_map(&self) -> ParamMap {
        let mut m = ParamMap::new();
        match self {
            Params::Periodic(p) => {
                put(&mut m, "c", &p.c);
                put(&mut m, "c2p", &p.c2p);
                put(&mut m, "x0", &p.x0);
                put(&mut m, "x_minus", &p.x_minus);
            }
            Params::SemiPeriodic(p) => {
                put(&mut m, "c", &p.c);
                put(&mut m, "x0", &p.x0);
                put(&mut m, "x_plus", &p.x_plus);
            }
            Params::HighestWeight(p) => {
                m.insert("n_dim".into(), Value::from(p.n_dim));
                put_opt(&mut m, "nu", &p.nu);
                put_opt(&mut m, "c", &p.c);
            }
            Params::OneDim(p) | Params::GenericOneDim(p) => {
                put(&mut m, "x0", &p.x0);
                put(&mut m, "xp", &p.xp);
                put(&mut m, "xm", &p.xm);
            }
            Params::Case4Cyclic(p) => {
                put(&mut m, "x0", &p.x0);
                put(&mut m, "x_plus", &p.x_plus);
                put(&mut m, "x_minus", &p.x_minus);
            }
        }
        m
    }

    /// Reads a params object. With `c_default`, a missing `c` (and for the
    /// one-dimensional family a missing `x0 = c / lambda`) is filled in; this
    /// is how the `A` quotient supplies `c = 1`.
    pub fn from_json(
        family: Family,
        v: &Value,
        order: &RootOrder,
        c_default: Option<&CycNumber>,
    ) -> Result<Params, RepError> {
        let r = Reader::new(v, order)?;
        let c = |r: &Reader| match c_default {
            Some(d) => r.or("c", d.clone()),
            None => r.req("c"),
        };
        Ok(match family {
            Family::Periodic => Params::Periodic(PeriodicParams {
                c: c(&r)?,
                c2p: r.req("c2p")?,
                x0: r.req("x0")?,
                x_minus: r.req("x_minus")?,
            }),
            Family::SemiPeriodic => Params::SemiPeriodic(SemiPeriodicParams {
                c: c(&r)?,
                x0: r.req("x0")?,
                x_plus: r.req("x_plus")?,
            }),
            Family::HighestWeight => Params::HighestWeight(HighestWeightParams {
                n_dim: r
                    .int("n_dim")?
                    .ok_or_else(|| RepError::Format("missing parameter \"n_dim\"".into()))?
                    .try_into()
                    .map_err(|_| RepError::Format("n_dim must be positive".into()))?,
                nu: r.opt("nu")?,
                c: match c_default {
                    Some(d) => Some(r.or("c", d.clone())?),
                    None => r.opt("c")?,
                },
            }),
            Family::OneDim | Family::GenericOneDim => {
                let x0 = match c_default {
                    Some(d) => r.or("x0", d * &order.lambda_inv())?,
                    None => r.req("x0")?,
                };
                let p = OneDimParams {
                    x0,
                    xp: r.req("xp")?,
                    xm: r.req("xm")?,
                };
                if family == Family::OneDim {
                    Params::OneDim(p)
                } else {
                    Params::GenericOneDim(p)
                }
            }
            Family::Case4Cyclic => Params::Case4Cyclic(Case4CyclicParams {
                x0: match c_default {
                    Some(d) => r.or("x0", d * &order.lambda_inv())?,
                    None => r.req("x0")?,
                },
                x_plus: r.req("x_plus")?,
                x_minus: r.req("x_minus")?,
            }),
        })
    }
}

impl FParams {
    pub fn family(&self) -> Family {
        match self {
            FParams::Periodic { .. } => Family::Periodic,
            FParams::SemiPeriodic { .. } => Family::SemiPeriodic,
            FParams::HighestWeight { .. } => Family::HighestWeight,
            FParams::OneDim { .. } => Family::OneDim,
        }
    }

    pub(crate) fn to_map(&self) -> ParamMap {
        let mut m = ParamMap::new();
        match self {
            FParams::Periodic { c, x0, x_minus } => {
                put(&mut m, "c", c);
                put(&mut m, "x0", x0);
                put(&mut m, "x_minus", x_minus);
            }
            FParams::SemiPeriodic { nu, x_plus, c } => {
                put(&mut m, "nu", nu);
                put(&mut m, "x_plus", x_plus);
                put_opt(&mut m, "c", c);
            }
            FParams::HighestWeight {
                n_dim,
                epsilon,
                nu,
                c,
            } => {
                m.insert("n_dim".into(), Value::from(*n_dim));
                if let Some(e) = epsilon {
                    m.insert("epsilon".into(), Value::from(*e));
                }
                put_opt(&mut m, "nu", nu);
                put_opt(&mut m, "c", c);
            }
            FParams::OneDim { x0, x_plus } => {
                put(&mut m, "x0", x0);
                put(&mut m, "x_plus", x_plus);
            }
        }
        m
    }

    pub fn from_json(family: Family, v: &Value, order: &RootOrder) -> Result<FParams, RepError> {
        let r = Reader::new(v, order)?;
        Ok(match family {
            Family::Periodic => FParams::Periodic {
                c: r.req("c")?,
                x0: r.req("x0")?,
                x_minus: r.req("x_minus")?,
            },
            Family::SemiPeriodic => FParams::SemiPeriodic {
                nu: r.req("nu")?,
                x_plus: r.req("x_plus")?,
                c: r.opt("c")?,
            },
            Family::HighestWeight => FParams::HighestWeight {
                n_dim: r
                    .int("n_dim")?
                    .ok_or_else(|| RepError::Format("missing parameter \"n_dim\"".into()))?
                    .try_into()
                    .map_err(|_| RepError::Format("n_dim must be positive".into()))?,
                epsilon: r.int("epsilon")?,
                nu: r.opt("nu")?,
                c: r.opt("c")?,
            },
            Family::OneDim => FParams::OneDim {
                x0: r.req("x0")?,
                x_plus: r.req("x_plus")?,
            },
            other => {
                return Err(RepError::Format(format!(
                    "family {:?} is not one of the four F families",
                    other.name()
                )))
            }
        })
    }
}
