use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use super::LieType;
use crate::error::{Error, Result};

/// A weight written in simple-root coordinates `Σ m_i α_i`. Negative entries
/// are allowed so that differences `λ − μ` use the same type.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootWeight {
    ty: LieType,
    coeffs: Vec<i64>,
}

impl RootWeight {
    pub fn new(ty: LieType, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != ty.rank() {
            return Err(Error::LengthMismatch {
                ty,
                expected: ty.rank(),
                got: coeffs.len(),
            });
        }
        Ok(RootWeight { ty, coeffs })
    }

    pub(crate) fn new_unchecked(ty: LieType, coeffs: Vec<i64>) -> Self {
        debug_assert_eq!(coeffs.len(), ty.rank());
        RootWeight { ty, coeffs }
    }

    pub fn zero(ty: LieType) -> Self {
        RootWeight::new_unchecked(ty, vec![0; ty.rank()])
    }

    pub fn lie_type(&self) -> LieType {
        self.ty
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<i64> {
        self.coeffs
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn to_omega(&self) -> OmegaWeight {
        super::to_omega_coords(self)
    }

    pub fn is_dominant(&self) -> bool {
        super::is_dominant(self)
    }

    pub fn checked_sub(&self, other: &RootWeight) -> Result<RootWeight> {
        if self.ty != other.ty {
            return Err(Error::TypeMismatch(self.ty, other.ty));
        }
        Ok(RootWeight::new_unchecked(
            self.ty,
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }
}

impl fmt::Display for RootWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.ty, join(&self.coeffs))
    }
}

/// A weight written in fundamental-weight coordinates `Σ c_i ω_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OmegaWeight {
    ty: LieType,
    coords: Vec<i64>,
}

impl OmegaWeight {
    pub fn new(ty: LieType, coords: Vec<i64>) -> Result<Self> {
        if coords.len() != ty.rank() {
            return Err(Error::LengthMismatch {
                ty,
                expected: ty.rank(),
                got: coords.len(),
            });
        }
        Ok(OmegaWeight { ty, coords })
    }

    pub(crate) fn new_unchecked(ty: LieType, coords: Vec<i64>) -> Self {
        debug_assert_eq!(coords.len(), ty.rank());
        OmegaWeight { ty, coords }
    }

    pub fn lie_type(&self) -> LieType {
        self.ty
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn to_root(&self) -> RationalRootWeight {
        super::from_omega_coords(self)
    }
}

impl fmt::Display for OmegaWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:w:{}", self.ty, join(&self.coords))
    }
}

/// Root coordinates that may be fractional, e.g. `ω_1` of `A_2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalRootWeight {
    ty: LieType,
    coeffs: Vec<Ratio<i64>>,
}

impl RationalRootWeight {
    pub(crate) fn new(ty: LieType, coeffs: Vec<Ratio<i64>>) -> Self {
        RationalRootWeight { ty, coeffs }
    }

    pub fn lie_type(&self) -> LieType {
        self.ty
    }

    pub fn coeffs(&self) -> &[Ratio<i64>] {
        &self.coeffs
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Ratio::is_integer)
    }

    pub fn to_integral(&self) -> Option<RootWeight> {
        self.is_integral().then(|| {
            RootWeight::new_unchecked(self.ty, self.coeffs.iter().map(Ratio::to_integer).collect())
        })
    }
}

/// Either form of the weight text format: `B3:1,2,3` (root coordinates) or
/// `B3:w:1,0,0` (fundamental-weight coordinates).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedWeight {
    Root(RootWeight),
    Omega(OmegaWeight),
}

impl ParsedWeight {
    pub fn lie_type(&self) -> LieType {
        match self {
            ParsedWeight::Root(w) => w.lie_type(),
            ParsedWeight::Omega(w) => w.lie_type(),
        }
    }

    pub fn to_omega(&self) -> OmegaWeight {
        match self {
            ParsedWeight::Root(w) => w.to_omega(),
            ParsedWeight::Omega(w) => w.clone(),
        }
    }

    /// Root coordinates, if the weight lies in the root lattice.
    pub fn to_root(&self) -> Option<RootWeight> {
        match self {
            ParsedWeight::Root(w) => Some(w.clone()),
            ParsedWeight::Omega(w) => w.to_root().to_integral(),
        }
    }
}

impl fmt::Display for ParsedWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParsedWeight::Root(w) => w.fmt(f),
            ParsedWeight::Omega(w) => w.fmt(f),
        }
    }
}

impl FromStr for ParsedWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::Parse {
            token: s.to_string(),
            reason: reason.to_string(),
        };
        let (ty, rest) = s
            .split_once(':')
            .ok_or_else(|| bad("missing `:` after the type"))?;
        let ty: LieType = ty.parse().map_err(|e: Error| bad(&e.to_string()))?;
        let (omega, body) = match rest.strip_prefix("w:") {
            Some(body) => (true, body),
            None => (false, rest),
        };
        let values = body
            .split(',')
            .map(parse_int)
            .collect::<Option<Vec<i64>>>()
            .ok_or_else(|| bad("coordinates must be comma-separated integers"))?;
        if values.len() != ty.rank() {
            return Err(bad(&format!(
                "{} coordinates given, {} expects {}",
                values.len(),
                ty,
                ty.rank()
            )));
        }
        Ok(if omega {
            ParsedWeight::Omega(OmegaWeight::new_unchecked(ty, values))
        } else {
            ParsedWeight::Root(RootWeight::new_unchecked(ty, values))
        })
    }
}

impl FromStr for RootWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.parse::<ParsedWeight>()? {
            ParsedWeight::Root(w) => Ok(w),
            ParsedWeight::Omega(w) => w.to_root().to_integral().ok_or_else(|| Error::Parse {
                token: s.to_string(),
                reason: "weight is not in the root lattice".into(),
            }),
        }
    }
}

impl FromStr for OmegaWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(s.parse::<ParsedWeight>()?.to_omega())
    }
}

fn parse_int(tok: &str) -> Option<i64> {
    let digits = tok.strip_prefix('-').unwrap_or(tok);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    tok.parse().ok()
}

fn join(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}
