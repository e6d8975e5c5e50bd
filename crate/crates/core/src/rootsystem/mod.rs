//! Exact data for the simple root systems.
//!
//! Node numbering follows the Bourbaki/Humphreys tables: in `B_n` the last
//! simple root is short, in `C_n` the last one is long, `D_n` branches at
//! node `n-2`, `E_n` has node 2 attached to node 4, `F_4` has `α1, α2` long
//! and in `G_2` the first simple root is short. Internally nodes are 0-based;
//! the text format and the CLI print them 1-based.
//!
//! Long roots have squared length 2 and all arithmetic is exact.

mod cartan;
mod weight;

pub use cartan::{cartan_matrix, root_system, CartanData, RootSystem};
pub use weight::{OmegaWeight, ParsedWeight, RationalRootWeight, RootWeight};

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// A simple Lie algebra type: family letter plus rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    /// Rank bounds: `A_n` n≥1, `B_n` n≥2, `C_n` n≥3, `D_n` n≥4, `E_6..E_8`,
    /// `F_4`, `G_2`. `C_2` is rejected; it is `B_2`.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(LieType { family, rank })
        } else {
            Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Order of the Weyl group.
    pub fn weyl_order(self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1_152,
            Family::G => 12,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))?;
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse {
                token: s.to_string(),
                reason: "expected a family letter followed by a rank".into(),
            });
        }
        let rank = digits.parse::<usize>().map_err(|e| Error::Parse {
            token: s.to_string(),
            reason: e.to_string(),
        })?;
        LieType::new(family, rank)
    }
}

/// Highest short and highest long root `(μ1, μ2)` in simple-root coordinates.
/// For simply-laced types the two coincide.
pub fn highest_roots(ty: LieType) -> (RootWeight, RootWeight) {
    let n = ty.rank();
    let (short, long): (Vec<i64>, Vec<i64>) = match ty.family() {
        Family::A => (vec![1; n], vec![1; n]),
        Family::B => {
            let mut long = vec![2; n];
            long[0] = 1;
            (vec![1; n], long)
        }
        Family::C => {
            let mut short = vec![2; n];
            short[0] = 1;
            short[n - 1] = 1;
            let mut long = vec![2; n];
            long[n - 1] = 1;
            (short, long)
        }
        Family::D => {
            let mut r = vec![2; n];
            r[0] = 1;
            r[n - 2] = 1;
            r[n - 1] = 1;
            (r.clone(), r)
        }
        Family::E => {
            let r = match n {
                6 => vec![1, 2, 2, 3, 2, 1],
                7 => vec![2, 2, 3, 4, 3, 2, 1],
                _ => vec![2, 3, 4, 6, 5, 4, 3, 2],
            };
            (r.clone(), r)
        }
        Family::F => (vec![1, 2, 3, 2], vec![2, 3, 4, 2]),
        Family::G => (vec![2, 1], vec![3, 2]),
    };
    (
        RootWeight::new_unchecked(ty, short),
        RootWeight::new_unchecked(ty, long),
    )
}

/// `c = A·m`: fundamental-weight coordinates of a root-coordinate weight.
pub fn to_omega_coords(w: &RootWeight) -> OmegaWeight {
    let rs = root_system(w.lie_type());
    OmegaWeight::new_unchecked(w.lie_type(), rs.cartan().apply(w.coeffs()))
}

/// Solves `A·m = c` over the rationals.
pub fn from_omega_coords(w: &OmegaWeight) -> RationalRootWeight {
    let rs = root_system(w.lie_type());
    RationalRootWeight::new(w.lie_type(), rs.solve(w.coords()))
}

pub fn is_dominant(w: &RootWeight) -> bool {
    to_omega_coords(w).is_dominant()
}

fn check_same(a: LieType, b: LieType) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::TypeMismatch(a, b))
    }
}

/// `λ ≽ μ`: every coefficient of `λ − μ` is nonnegative.
pub fn succeeds(lambda: &RootWeight, mu: &RootWeight) -> Result<bool> {
    check_same(lambda.lie_type(), mu.lie_type())?;
    Ok(lambda.coeffs().iter().zip(mu.coeffs()).all(|(l, m)| l >= m))
}

/// The invariant form with long roots of squared length 2.
pub fn inner_product(v: &RootWeight, w: &RootWeight) -> Result<Ratio<i64>> {
    check_same(v.lie_type(), w.lie_type())?;
    let rs = root_system(v.lie_type());
    Ok(Ratio::new(rs.form6(v.coeffs(), w.coeffs()), 6))
}

pub fn positive_roots(ty: LieType) -> Vec<RootWeight> {
    root_system(ty)
        .positive_roots()
        .iter()
        .map(|r| RootWeight::new_unchecked(ty, r.clone()))
        .collect()
}

/// `ρ`, with every ω-coordinate equal to 1.
pub fn weyl_vector(ty: LieType) -> OmegaWeight {
    OmegaWeight::new_unchecked(ty, vec![1; ty.rank()])
}

/// Applies simple reflections at nodes with a negative ω-coordinate until the
/// weight is dominant. Returns the dominant representative and the number of
/// reflections used.
pub fn make_dominant(w: &OmegaWeight) -> (OmegaWeight, usize) {
    let rs = root_system(w.lie_type());
    let mut coords = w.coords().to_vec();
    let steps = rs.dominate_in_place(&mut coords, None);
    (OmegaWeight::new_unchecked(w.lie_type(), coords), steps)
}

/// [`make_dominant`] for a weight given in root coordinates. Reflections
/// preserve the root lattice, so the result stays integral.
pub fn make_dominant_root(w: &RootWeight) -> (RootWeight, usize) {
    let rs = root_system(w.lie_type());
    let mut coords = rs.cartan().apply(w.coeffs());
    let mut coeffs = w.coeffs().to_vec();
    let steps = rs.dominate_in_place(&mut coords, Some(&mut coeffs));
    (RootWeight::new_unchecked(w.lie_type(), coeffs), steps)
}

/// Simple reflection `s_i` applied to an ω-coordinate vector.
pub fn reflect(w: &OmegaWeight, node: usize) -> Result<OmegaWeight> {
    let ty = w.lie_type();
    if node >= ty.rank() {
        return Err(Error::NodeOutOfRange { ty, node });
    }
    let rs = root_system(ty);
    let mut coords = w.coords().to_vec();
    rs.reflect_in_place(&mut coords, node);
    Ok(OmegaWeight::new_unchecked(ty, coords))
}
