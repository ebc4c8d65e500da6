//! Exact elements of the cyclotomic field `Q(zeta_n)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::poly::{cyclotomic_polynomial, QPoly};
use super::FieldError;

/// The field `Q(zeta_n)` presented as `Q[x] / Phi_n(x)`.
///
/// Holds the cyclotomic polynomial and the reductions of `x^k` for every
/// exponent that a product of two reduced elements (or a power of `zeta`
/// below `n`) can produce.
#[derive(Debug)]
pub struct CycField {
    n: usize,
    degree: usize,
    modulus: QPoly,
    /// `powers[k]` is `x^k mod Phi_n` as a length-`degree` coordinate vector.
    powers: Vec<Vec<BigRational>>,
}

impl PartialEq for CycField {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
    }
}

impl Eq for CycField {}

static FIELDS: OnceLock<Mutex<HashMap<usize, Arc<CycField>>>> = OnceLock::new();

impl CycField {
    /// The field of `n`-th roots of unity; instances are shared per `n`.
    pub fn get(n: usize) -> Arc<CycField> {
        assert!(n >= 1, "cyclotomic order must be positive");
        let cache = FIELDS.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(f) = cache.lock().unwrap().get(&n) {
            return f.clone();
        }
        let field = Arc::new(CycField::build(n));
        cache.lock().unwrap().entry(n).or_insert(field).clone()
    }

    fn build(n: usize) -> CycField {
        let modulus = cyclotomic_polynomial(n);
        let degree = modulus.degree().unwrap();
        let count = n.max(2 * degree);
        let mut powers = Vec::with_capacity(count);
        let mut cur = vec![BigRational::zero(); degree];
        cur[0] = BigRational::one();
        let phi = modulus.coeffs();
        for _ in 0..count {
            powers.push(cur.clone());
            // multiply by x, then eliminate x^degree with the monic modulus
            let top = cur.pop().unwrap();
            cur.insert(0, BigRational::zero());
            if !top.is_zero() {
                for (c, p) in cur.iter_mut().zip(phi) {
                    *c -= &top * p;
                }
            }
        }
        CycField {
            n,
            degree,
            modulus,
            powers,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `phi(n)`, the dimension over the rationals.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficients of `Phi_n`, lowest degree first.
    pub fn modulus_coeffs(&self) -> Vec<BigInt> {
        self.modulus
            .coeffs()
            .iter()
            .map(|c| c.to_integer())
            .collect()
    }

    fn reduce(&self, raw: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.degree];
        for (k, c) in raw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < self.degree {
                out[k] += c;
            } else {
                for (o, p) in out.iter_mut().zip(&self.powers[k]) {
                    if !p.is_zero() {
                        *o += c * p;
                    }
                }
            }
        }
        out
    }
}

/// An element of `Q(zeta_n)` in the power basis `1, zeta, ..., zeta^(phi(n)-1)`.
#[derive(Clone)]
pub struct CycNumber {
    field: Arc<CycField>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.n == other.field.n && self.coeffs == other.coeffs
    }
}

impl Eq for CycNumber {}

impl std::hash::Hash for CycNumber {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.n.hash(state);
        self.coeffs.hash(state);
    }
}

impl CycNumber {
    pub fn zero(field: &Arc<CycField>) -> Self {
        CycNumber {
            field: field.clone(),
            coeffs: vec![BigRational::zero(); field.degree],
        }
    }

    pub fn one(field: &Arc<CycField>) -> Self {
        Self::from_integer(field, 1)
    }

    pub fn from_integer(field: &Arc<CycField>, v: i64) -> Self {
        Self::from_rational(field, BigRational::from_integer(v.into()))
    }

    pub fn from_rational(field: &Arc<CycField>, v: BigRational) -> Self {
        let mut x = Self::zero(field);
        x.coeffs[0] = v;
        x
    }

    /// `zeta^k` for any integer `k`.
    pub fn zeta_pow(field: &Arc<CycField>, k: i64) -> Self {
        let e = k.rem_euclid(field.n as i64) as usize;
        CycNumber {
            field: field.clone(),
            coeffs: field.powers[e].clone(),
        }
    }

    /// Builds an element from power-basis coordinates.
    pub fn from_coeffs(
        field: &Arc<CycField>,
        coeffs: Vec<BigRational>,
    ) -> Result<Self, FieldError> {
        if coeffs.len() != field.degree {
            return Err(FieldError::WrongLength {
                expected: field.degree,
                found: coeffs.len(),
            });
        }
        Ok(CycNumber {
            field: field.clone(),
            coeffs,
        })
    }

    /// Random element with integer coordinates in `-bound..=bound`.
    pub fn random<R: Rng + ?Sized>(field: &Arc<CycField>, rng: &mut R, bound: i64) -> Self {
        let coeffs = (0..field.degree)
            .map(|_| BigRational::from_integer(rng.gen_range(-bound..=bound).into()))
            .collect();
        CycNumber {
            field: field.clone(),
            coeffs,
        }
    }

    /// Random nonzero element (see [`CycNumber::random`]).
    pub fn random_nonzero<R: Rng + ?Sized>(field: &Arc<CycField>, rng: &mut R, bound: i64) -> Self {
        loop {
            let x = Self::random(field, rng, bound.max(1));
            if !x.is_zero() {
                return x;
            }
        }
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn order(&self) -> usize {
        self.field.n
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }

    fn check_same_field(&self, other: &CycNumber) {
        assert_eq!(
            self.field.n, other.field.n,
            "mixing elements of Q(zeta_{}) and Q(zeta_{})",
            self.field.n, other.field.n
        );
    }

    pub fn inverse(&self) -> Result<CycNumber, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let a = QPoly::from_coeffs(self.coeffs.clone());
        let inv = a
            .inverse_mod(&self.field.modulus)
            .expect("Phi_n is irreducible, so every nonzero residue is a unit");
        let mut coeffs = inv.into_coeffs();
        coeffs.resize(self.field.degree, BigRational::zero());
        Ok(CycNumber {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn div(&self, other: &CycNumber) -> Result<CycNumber, FieldError> {
        Ok(self * &other.inverse()?)
    }

    pub fn pow(&self, e: u32) -> CycNumber {
        let mut acc = CycNumber::one(&self.field);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power; negative exponents invert first.
    pub fn powi(&self, e: i64) -> Result<CycNumber, FieldError> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inverse()?.pow(e.unsigned_abs() as u32))
        }
    }

    pub fn scale(&self, r: &BigRational) -> CycNumber {
        CycNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Coordinates as `"p/q"` strings in lowest terms.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(rational_to_string).collect()
    }

    /// Parses coordinates written as `"p/q"` or `"p"`.
    pub fn from_strings<S: AsRef<str>>(
        field: &Arc<CycField>,
        items: &[S],
    ) -> Result<CycNumber, FieldError> {
        let coeffs = items
            .iter()
            .map(|s| parse_rational(s.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_coeffs(field, coeffs)
    }

    /// Polynomial in `q` in the power basis, e.g. `1 - 2*q + 1/2*q^3`.
    pub fn to_q_string(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let power = match k {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{k}"),
            };
            if k == 0 {
                out.push_str(&rational_to_plain(&mag));
            } else if mag.is_one() {
                out.push_str(&power);
            } else {
                out.push_str(&rational_to_plain(&mag));
                out.push('*');
                out.push_str(&power);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Number of nonzero coordinates.
    pub fn support_len(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

fn rational_to_plain(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn rational_to_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational, FieldError> {
    let bad = || FieldError::BadRational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc{}({})", self.field.n, self.to_q_string())
    }
}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_q_string())
    }
}

impl<'a> Add<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: &CycNumber) -> CycNumber {
        self.check_same_field(rhs);
        CycNumber {
            field: self.field.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<'a> Sub<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: &CycNumber) -> CycNumber {
        self.check_same_field(rhs);
        CycNumber {
            field: self.field.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl<'a> Mul<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: &CycNumber) -> CycNumber {
        self.check_same_field(rhs);
        let d = self.field.degree;
        let mut raw = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        CycNumber {
            field: self.field.clone(),
            coeffs: self.field.reduce(&raw),
        }
    }
}

impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycNumber {
    type Output = CycNumber;
    fn neg(mut self) -> CycNumber {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycNumber> for CycNumber {
            type Output = CycNumber;
            fn $m(self, rhs: CycNumber) -> CycNumber {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycNumber> for CycNumber {
            type Output = CycNumber;
            fn $m(self, rhs: &CycNumber) -> CycNumber {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<CycNumber> for &'a CycNumber {
            type Output = CycNumber;
            fn $m(self, rhs: CycNumber) -> CycNumber {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&CycNumber> for CycNumber {
    fn add_assign(&mut self, rhs: &CycNumber) {
        self.check_same_field(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&CycNumber> for CycNumber {
    fn sub_assign(&mut self, rhs: &CycNumber) {
        self.check_same_field(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl MulAssign<&CycNumber> for CycNumber {
    fn mul_assign(&mut self, rhs: &CycNumber) {
        *self = &*self * rhs;
    }
}
