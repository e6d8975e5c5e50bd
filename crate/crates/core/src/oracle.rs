//! Ground-truth weight multiplicities via Freudenthal's recursion.
//!
//! For `V(λ)` and a weight `ν = λ − d` (with `d` a nonnegative combination of
//! simple roots),
//!
//! ```text
//! ((λ+ρ, λ+ρ) − (ν+ρ, ν+ρ)) · m_ν = 2 Σ_{α>0} Σ_{k≥1} (ν+kα, α) · m_{ν+kα}
//! ```
//!
//! Only dominant weights are stored; every other weight is folded back into
//! the dominant chamber, since multiplicities are Weyl-invariant. The table
//! is filled level by level in the height of `d`, so everything on the right
//! hand side is known when `m_ν` is computed. All quantities are scaled by 6
//! to stay in the integers.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::bz;
use crate::error::{Error, Result};
use crate::rootsystem::{root_system, OmegaWeight, RootSystem, RootWeight};

/// One dominant weight of a [`WeightDiagram`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramEntry {
    /// ω-coordinates of the weight.
    pub omega: Vec<i64>,
    /// `λ − ν` in simple-root coordinates.
    pub depth: Vec<i64>,
    pub multiplicity: u64,
}

impl DiagramEntry {
    pub fn height(&self) -> i64 {
        self.depth.iter().sum()
    }
}

/// Multiplicities of all dominant weights of `V(λ)`, sorted by height of
/// `λ − ν` and then lexicographically by depth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDiagram {
    highest: OmegaWeight,
    entries: Vec<DiagramEntry>,
}

impl WeightDiagram {
    pub fn highest(&self) -> &OmegaWeight {
        &self.highest
    }

    pub fn entries(&self) -> &[DiagramEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, nu: &OmegaWeight) -> Option<u64> {
        self.entries
            .iter()
            .find(|e| e.omega == nu.coords())
            .map(|e| e.multiplicity)
    }

    pub fn omega_weight(&self, entry: &DiagramEntry) -> OmegaWeight {
        OmegaWeight::new(self.highest.lie_type(), entry.omega.clone())
            .expect("entry has the right rank")
    }

    /// Root coordinates of an entry, when `λ` lies in the root lattice.
    pub fn root_weight(&self, entry: &DiagramEntry) -> Option<RootWeight> {
        let lambda = self.highest.to_root().to_integral()?;
        let coeffs = lambda
            .coeffs()
            .iter()
            .zip(&entry.depth)
            .map(|(l, d)| l - d)
            .collect();
        RootWeight::new(lambda.lie_type(), coeffs).ok()
    }

    /// `Σ |W·ν| · m_ν` over the dominant entries.
    pub fn total_dimension(&self) -> u128 {
        self.entries
            .iter()
            .map(|e| orbit_size(&self.omega_weight(e)) * e.multiplicity as u128)
            .sum()
    }
}

struct PositiveRoot {
    coeffs: Vec<i64>,
    omega: Vec<i64>,
    norm6: i64,
}

struct Engine<'a> {
    rs: &'a RootSystem,
    roots: Vec<PositiveRoot>,
}

impl<'a> Engine<'a> {
    fn new(rs: &'a RootSystem) -> Self {
        let roots = rs
            .positive_roots()
            .iter()
            .map(|r| PositiveRoot {
                coeffs: r.clone(),
                omega: rs.cartan().apply(r),
                norm6: rs.form6(r, r),
            })
            .collect();
        Engine { rs, roots }
    }

    /// Dominant weights `ν ≼ λ` reachable from `λ` by subtracting positive
    /// roots while staying dominant (this reaches all of them), optionally
    /// restricted to `λ − ν ≤ bound` coefficientwise.
    fn dominant_interval(
        &self,
        lambda: &[i64],
        bound: Option<&[i64]>,
    ) -> Vec<(Vec<i64>, Vec<i64>)> {
        let n = lambda.len();
        let mut seen: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
        seen.insert(lambda.to_vec(), vec![0; n]);
        let mut queue = VecDeque::from([(lambda.to_vec(), vec![0i64; n])]);
        while let Some((omega, depth)) = queue.pop_front() {
            for root in &self.roots {
                let next: Vec<i64> = omega.iter().zip(&root.omega).map(|(a, b)| a - b).collect();
                if next.iter().any(|&c| c < 0) {
                    continue;
                }
                let d: Vec<i64> = depth.iter().zip(&root.coeffs).map(|(a, b)| a + b).collect();
                if let Some(bound) = bound {
                    if d.iter().zip(bound).any(|(x, b)| x > b) {
                        continue;
                    }
                }
                if !seen.contains_key(&next) {
                    seen.insert(next.clone(), d.clone());
                    queue.push_back((next, d));
                }
            }
        }
        let mut out: Vec<(Vec<i64>, Vec<i64>)> = seen.into_iter().collect();
        out.sort_by(|a, b| {
            let ha: i64 = a.1.iter().sum();
            let hb: i64 = b.1.iter().sum();
            ha.cmp(&hb).then_with(|| a.1.cmp(&b.1))
        });
        out
    }

    fn run(&self, lambda: &[i64], bound: Option<&[i64]>) -> Result<Vec<DiagramEntry>> {
        let interval = self.dominant_interval(lambda, bound);
        let index: HashMap<&[i64], usize> = interval
            .iter()
            .enumerate()
            .map(|(i, (w, _))| (w.as_slice(), i))
            .collect();
        let norm3 = self.rs.norm3();
        // 6·(λ+ρ, α_i)
        let top: Vec<i64> = lambda.iter().zip(norm3).map(|(c, h)| (c + 1) * h).collect();

        let mut mult: Vec<u64> = vec![0; interval.len()];
        let mut probe = vec![0i64; lambda.len()];
        for (idx, (omega, depth)) in interval.iter().enumerate() {
            if idx == 0 {
                mult[0] = 1;
                continue;
            }
            let denom = 2 * depth.iter().zip(&top).map(|(d, t)| d * t).sum::<i64>()
                - self.rs.form6(depth, depth);
            if denom <= 0 {
                return Err(Error::Recursion {
                    weight: format!("{omega:?}"),
                    reason: format!("nonpositive denominator {denom}"),
                });
            }
            let mut acc: i128 = 0;
            for root in &self.roots {
                let base = self.rs.pair6(omega, &root.coeffs);
                let mut k = 1i64;
                loop {
                    if depth.iter().zip(&root.coeffs).any(|(d, r)| d - k * r < 0) {
                        break;
                    }
                    for ((p, w), r) in probe.iter_mut().zip(omega).zip(&root.omega) {
                        *p = w + k * r;
                    }
                    self.rs.dominate_in_place(&mut probe, None);
                    if let Some(&j) = index.get(probe.as_slice()) {
                        acc += (base + k * root.norm6) as i128 * mult[j] as i128;
                    }
                    k += 1;
                }
            }
            let num = 2 * acc;
            if num % denom as i128 != 0 || num < 0 {
                return Err(Error::Recursion {
                    weight: format!("{omega:?}"),
                    reason: format!("{num} is not a nonnegative multiple of {denom}"),
                });
            }
            mult[idx] =
                u64::try_from(num / denom as i128).map_err(|_| Error::Overflow("multiplicity"))?;
        }
        Ok(interval
            .into_iter()
            .zip(mult)
            .map(|((omega, depth), multiplicity)| DiagramEntry {
                omega,
                depth,
                multiplicity,
            })
            .collect())
    }
}

fn require_dominant(lambda: &OmegaWeight) -> Result<()> {
    if lambda.is_dominant() {
        Ok(())
    } else {
        Err(Error::NotDominant(lambda.to_string()))
    }
}

/// `K_{λ,μ} = dim V(λ)_μ`. `μ` need not be dominant; weights that are not
/// weights of `V(λ)` (including those outside λ's root-lattice coset) give 0.
pub fn multiplicity_omega(lambda: &OmegaWeight, mu: &OmegaWeight) -> Result<u64> {
    if lambda.lie_type() != mu.lie_type() {
        return Err(Error::TypeMismatch(lambda.lie_type(), mu.lie_type()));
    }
    require_dominant(lambda)?;
    let rs = root_system(lambda.lie_type());
    let mut target = mu.coords().to_vec();
    rs.dominate_in_place(&mut target, None);
    let diff: Vec<i64> = lambda
        .coords()
        .iter()
        .zip(&target)
        .map(|(a, b)| a - b)
        .collect();
    let Some(depth) = rs.solve_integral(&diff) else {
        return Ok(0);
    };
    if depth.iter().any(|&d| d < 0) {
        return Ok(0);
    }
    let entries = Engine::new(&rs).run(lambda.coords(), Some(&depth))?;
    Ok(entries
        .iter()
        .find(|e| e.omega == target)
        .map_or(0, |e| e.multiplicity))
}

pub fn multiplicity(lambda: &RootWeight, mu: &RootWeight) -> Result<u64> {
    if lambda.lie_type() != mu.lie_type() {
        return Err(Error::TypeMismatch(lambda.lie_type(), mu.lie_type()));
    }
    multiplicity_omega(&lambda.to_omega(), &mu.to_omega())
}

pub fn weight_diagram_omega(lambda: &OmegaWeight) -> Result<WeightDiagram> {
    require_dominant(lambda)?;
    let rs = root_system(lambda.lie_type());
    let entries = Engine::new(&rs).run(lambda.coords(), None)?;
    Ok(WeightDiagram {
        highest: lambda.clone(),
        entries,
    })
}

pub fn weight_diagram(lambda: &RootWeight) -> Result<WeightDiagram> {
    weight_diagram_omega(&lambda.to_omega())
}

/// Weyl's dimension formula `Π_{α>0} (λ+ρ, α)/(ρ, α)`.
pub fn dimension_omega(lambda: &OmegaWeight) -> Result<u128> {
    require_dominant(lambda)?;
    let rs = root_system(lambda.lie_type());
    let shifted: Vec<i64> = lambda.coords().iter().map(|c| c + 1).collect();
    let rho = vec![1i64; shifted.len()];
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for root in rs.positive_roots() {
        num *= BigUint::from(rs.pair6(&shifted, root) as u64);
        den *= BigUint::from(rs.pair6(&rho, root) as u64);
    }
    debug_assert_eq!(&num % &den, BigUint::from(0u8));
    (num / den).to_u128().ok_or(Error::Overflow("dimension"))
}

pub fn dimension(lambda: &RootWeight) -> Result<u128> {
    dimension_omega(&lambda.to_omega())
}

/// Size of the Weyl orbit of a dominant weight: `|W| / |W_ν|`, where the
/// stabilizer is the parabolic subgroup on the nodes with `c_i = 0`.
pub fn orbit_size(nu: &OmegaWeight) -> u128 {
    let ty = nu.lie_type();
    let zeros: Vec<usize> = (0..ty.rank()).filter(|&i| nu.coords()[i] == 0).collect();
    let stabilizer: u128 = bz::components(ty, &zeros)
        .iter()
        .map(|c| {
            bz::classify_subdiagram(ty, c)
                .expect("components are connected")
                .classified()
                .weyl_order()
        })
        .product();
    ty.weyl_order() / stabilizer
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::LieType;

    fn rw(s: &str) -> RootWeight {
        s.parse().unwrap()
    }

    fn ow(s: &str) -> OmegaWeight {
        s.parse().unwrap()
    }

    #[test]
    fn examples_from_the_a_series() {
        assert_eq!(multiplicity(&rw("A2:1,2"), &rw("A2:1,1")).unwrap(), 1);
        assert_eq!(multiplicity(&rw("A1:2"), &rw("A1:1")).unwrap(), 1);
        // Adjoint of A2 inside V(2ω1+2ω2): the 27-dimensional module.
        assert_eq!(multiplicity(&rw("A2:2,2"), &rw("A2:1,1")).unwrap(), 2);
    }

    #[test]
    fn b3_family_member() {
        assert_eq!(multiplicity(&rw("B3:1,2,3"), &rw("B3:1,2,2")).unwrap(), 1);
    }

    #[test]
    fn highest_weight_has_multiplicity_one() {
        for s in [
            "A3:1,2,1",
            "B2:2,2",
            "G2:3,2",
            "F4:2,3,4,2",
            "E6:1,2,2,3,2,1",
        ] {
            let w = rw(s);
            assert_eq!(multiplicity(&w, &w).unwrap(), 1, "{s}");
        }
    }

    #[test]
    fn diagram_of_a1_four_omega() {
        let d = weight_diagram(&rw("A1:2")).unwrap();
        let got: Vec<(Vec<i64>, u64)> = d
            .entries()
            .iter()
            .map(|e| (e.omega.clone(), e.multiplicity))
            .collect();
        assert_eq!(got, vec![(vec![4], 1), (vec![2], 1), (vec![0], 1)]);
    }

    #[test]
    fn adjoint_diagrams() {
        let d = weight_diagram(&rw("A2:1,1")).unwrap();
        let got: Vec<(Vec<i64>, u64)> = d
            .entries()
            .iter()
            .map(|e| (e.omega.clone(), e.multiplicity))
            .collect();
        assert_eq!(got, vec![(vec![1, 1], 1), (vec![0, 0], 2)]);

        let g2 = weight_diagram(&rw("G2:3,2")).unwrap();
        assert_eq!(g2.get(&rw("G2:2,1").to_omega()), Some(1));
        assert_eq!(g2.get(&rw("G2:0,0").to_omega()), Some(2));
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(dimension_omega(&ow("A2:w:1,0")).unwrap(), 3);
        assert_eq!(dimension(&rw("A2:1,1")).unwrap(), 8);
        assert_eq!(dimension(&rw("G2:2,1")).unwrap(), 7);
        assert_eq!(dimension(&rw("G2:3,2")).unwrap(), 14);
        assert_eq!(dimension(&rw("E8:2,3,4,6,5,4,3,2")).unwrap(), 248);
        assert_eq!(dimension(&rw("F4:2,3,4,2")).unwrap(), 52);
        assert_eq!(dimension(&rw("E7:2,2,3,4,3,2,1")).unwrap(), 133);
    }

    #[test]
    fn g2_seven_dimensional_zero_weight() {
        let t = LieType::new(crate::rootsystem::Family::G, 2).unwrap();
        let zero = OmegaWeight::new(t, vec![0, 0]).unwrap();
        assert_eq!(multiplicity_omega(&ow("G2:w:1,0"), &zero).unwrap(), 1);
    }

    #[test]
    fn non_dominant_and_absent_weights() {
        // s_1 of the highest root of A2 is α2; still multiplicity 1.
        assert_eq!(multiplicity(&rw("A2:1,1"), &rw("A2:0,1")).unwrap(), 1);
        assert_eq!(multiplicity(&rw("A2:1,1"), &rw("A2:2,2")).unwrap(), 0);
        // ω1 of A2 is outside the root lattice coset of the adjoint.
        assert_eq!(
            multiplicity_omega(&ow("A2:w:1,1"), &ow("A2:w:1,0")).unwrap(),
            0
        );
    }

    #[test]
    fn rejects_non_dominant_highest_weight() {
        assert!(matches!(
            multiplicity(&rw("A2:1,3"), &rw("A2:1,1")),
            Err(Error::NotDominant(_))
        ));
        assert!(weight_diagram(&rw("A2:1,3")).is_err());
        assert!(dimension(&rw("A2:1,3")).is_err());
    }

    #[test]
    fn rejects_type_mismatch() {
        assert!(matches!(
            multiplicity(&rw("A2:1,1"), &rw("B2:1,1")),
            Err(Error::TypeMismatch(..))
        ));
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(orbit_size(&ow("A2:w:1,1")), 6);
        assert_eq!(orbit_size(&ow("A2:w:0,0")), 1);
        assert_eq!(orbit_size(&ow("E8:w:0,0,0,0,0,0,0,1")), 240);
        assert_eq!(orbit_size(&ow("B3:w:1,0,0")), 6);
    }
}
