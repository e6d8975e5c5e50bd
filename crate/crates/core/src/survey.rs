//! Bounded enumeration of dominant weights above the highest roots and the
//! search for nonprimitive pairs `(ζ; μ_i)` with `K_{ζ,μ_i} = 1`.
//!
//! Every emitted record carries the exact multiplicity from the oracle next
//! to the fast-path verdict from [`crate::bz`], so disagreements show up as
//! report content instead of being assumed away.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::bz::{self, PairClass, Projection};
use crate::error::{Error, Result};
use crate::oracle;
use crate::rootsystem::{highest_roots, root_system, Family, LieType, RootWeight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    Short,
    Long,
}

impl Target {
    pub fn root(self, ty: LieType) -> RootWeight {
        let (short, long) = highest_roots(ty);
        match self {
            Target::Short => short,
            Target::Long => long,
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::Short => "short",
            Target::Long => "long",
        })
    }
}

/// Which highest roots a survey compares against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TargetSelection {
    Short,
    Long,
    #[default]
    Both,
}

impl TargetSelection {
    /// The distinct targets for `ty`. When `μ_1 = μ_2` only the long one is
    /// kept so that simply-laced types do not report every weight twice.
    pub fn targets(self, ty: LieType) -> Vec<Target> {
        let (short, long) = highest_roots(ty);
        match self {
            TargetSelection::Short => vec![Target::Short],
            TargetSelection::Long => vec![Target::Long],
            TargetSelection::Both if short == long => vec![Target::Long],
            TargetSelection::Both => vec![Target::Short, Target::Long],
        }
    }
}

impl FromStr for TargetSelection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "short" => Ok(TargetSelection::Short),
            "long" => Ok(TargetSelection::Long),
            "both" => Ok(TargetSelection::Both),
            _ => Err(Error::Parse {
                token: s.to_string(),
                reason: "expected `short`, `long` or `both`".into(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurveyRecord {
    pub ty: LieType,
    pub zeta: RootWeight,
    pub target: Target,
    pub mu: RootWeight,
    pub pair_class: PairClass,
    pub fastpath: bool,
    pub oracle: u64,
}

impl SurveyRecord {
    pub fn agrees(&self) -> bool {
        self.fastpath == (self.oracle == 1)
    }

    /// `type  ζ  target  μ  class  fastpath  oracle`, tab separated.
    pub fn tsv_row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.ty, self.zeta, self.target, self.mu, self.pair_class, self.fastpath, self.oracle
        )
    }

    pub const TSV_HEADER: &'static str = "type\tzeta\ttarget\tmu\tclass\tfastpath\toracle";
}

/// Bounds of an enumeration box. `fixed` pins single coordinates, which is
/// how the `E_8` slice `m_8 = 2` is expressed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bounds {
    pub cap: i64,
    pub fixed: Vec<(usize, i64)>,
}

impl Bounds {
    pub fn cap(cap: i64) -> Self {
        Bounds {
            cap,
            fixed: Vec::new(),
        }
    }

    pub fn with_fixed(mut self, node: usize, value: i64) -> Self {
        self.fixed.push((node, value));
        self
    }
}

/// All dominant `ζ ≻ μ`, `ζ ≠ μ`, with every coefficient at most `cap`, in
/// lexicographic order.
pub fn enumerate_dominant_above(ty: LieType, mu: &RootWeight, cap: i64) -> Vec<RootWeight> {
    enumerate_in(ty, mu, &Bounds::cap(cap))
}

pub fn enumerate_in(ty: LieType, mu: &RootWeight, bounds: &Bounds) -> Vec<RootWeight> {
    let n = ty.rank();
    let mut lo = mu.coeffs().to_vec();
    let mut hi = vec![bounds.cap; n];
    for &(node, value) in &bounds.fixed {
        if node < n {
            lo[node] = lo[node].max(value);
            hi[node] = hi[node].min(value);
        }
    }
    if lo.iter().zip(&hi).any(|(l, h)| l > h) {
        return Vec::new();
    }
    let rs = root_system(ty);
    let a = rs.cartan().matrix();
    let mut out = Vec::new();
    let mut m = lo.clone();
    descend(0, &mut m, &lo, &hi, a, &mut out);
    out.retain(|z| z.as_slice() != mu.coeffs());
    out.into_iter()
        .map(|c| RootWeight::new(ty, c).expect("rank-sized vector"))
        .collect()
}

// Coordinates are fixed in node order. Row j of A has a nonpositive entry for
// every other node, so c_j is largest when every unassigned neighbour sits at
// its lower bound and node j itself at its upper bound; prune when even that
// is negative.
fn descend(
    k: usize,
    m: &mut Vec<i64>,
    lo: &[i64],
    hi: &[i64],
    a: &[Vec<i64>],
    out: &mut Vec<Vec<i64>>,
) {
    let n = m.len();
    if k == n {
        if a.iter()
            .all(|row| row.iter().zip(m.iter()).map(|(x, y)| x * y).sum::<i64>() >= 0)
        {
            out.push(m.clone());
        }
        return;
    }
    for v in lo[k]..=hi[k] {
        m[k] = v;
        let feasible = (0..n).all(|j| {
            let best: i64 = (0..n)
                .map(|i| {
                    let x = if i <= k {
                        m[i]
                    } else if i == j {
                        hi[i]
                    } else {
                        lo[i]
                    };
                    a[j][i] * x
                })
                .sum();
            best >= 0
        });
        if feasible {
            descend(k + 1, m, lo, hi, a, out);
        }
    }
}

/// One record per nonprimitive pair `(ζ; μ_i)` in the box, with the oracle
/// value and the fast-path verdict. Weights are visited in lexicographic
/// order, targets in `short, long` order.
pub fn nonprimitive_candidates(
    ty: LieType,
    bounds: &Bounds,
    targets: TargetSelection,
    projection: Projection,
) -> Result<Vec<SurveyRecord>> {
    let (_, long) = highest_roots(ty);
    let targets = targets.targets(ty);
    let mut out = Vec::new();
    for zeta in enumerate_in(ty, &long, bounds) {
        for &target in &targets {
            let mu = target.root(ty);
            let class = bz::classify_pair(&zeta, &mu)?;
            if !matches!(class, PairClass::Nonprimitive(_)) {
                continue;
            }
            let value = oracle::multiplicity(&zeta, &mu)?;
            let fastpath = bz::multiplicity_one(&zeta, &mu, projection)?;
            out.push(SurveyRecord {
                ty,
                zeta: zeta.clone(),
                target,
                mu,
                pair_class: class,
                fastpath,
                oracle: value,
            });
        }
    }
    Ok(out)
}

/// Nonprimitive pairs `(ζ; μ_i)`, `ζ ≻ μ_2`, coefficients at most `cap`,
/// with `K_{ζ,μ_i} = 1` by the oracle.
pub fn find_nonprimitive_multone(ty: LieType, cap: i64) -> Result<Vec<SurveyRecord>> {
    Ok(nonprimitive_candidates(
        ty,
        &Bounds::cap(cap),
        TargetSelection::Both,
        Projection::Drop,
    )?
    .into_iter()
    .filter(|r| r.oracle == 1)
    .collect())
}

/// Membership in the closed-form families of the classification table.
pub fn table2_predicate(ty: LieType, zeta: &RootWeight) -> bool {
    if zeta.lie_type() != ty {
        return false;
    }
    let m = zeta.coeffs();
    let n = ty.rank();
    let all = |s: &[i64], v: i64| s.iter().all(|&x| x == v);
    match ty.family() {
        Family::A => matches!((n, m), (2, [1, 2]) | (2, [2, 1]) | (3, [1, 2, 1])),
        Family::B => {
            let twos = all(m, 2);
            let b3 = n == 3 && m[0] == 1 && m[1] == 2 && m[2] >= 3;
            let bn = n >= 4 && m[0] == 1 && m[1] == 2 && all(&m[2..], 3);
            twos || b3 || bn
        }
        Family::D => {
            let main = all(&m[..n - 2], 2) && m[n - 2] == 1 && m[n - 1] == 1;
            let extra = n == 4 && (m == [1, 2, 2, 1] || m == [1, 2, 1, 2]);
            main || extra
        }
        Family::G => m == [4, 2],
        Family::C | Family::E | Family::F => false,
    }
}

/// Outcome of checking the classification for one type inside a box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub ty: LieType,
    pub bounds: Bounds,
    pub projection: Projection,
    /// Every nonprimitive pair in the box, multiplicity one or not.
    pub candidates: Vec<SurveyRecord>,
    /// Distinct `ζ` with some nonprimitive `K_{ζ,μ_i} = 1`.
    pub found: Vec<RootWeight>,
    /// (a) found but not in the table.
    pub unmatched: Vec<RootWeight>,
    /// (b) table members inside the box that were not found.
    pub missed: Vec<RootWeight>,
    /// (c) records where the fast path contradicts the oracle.
    pub disagreements: Vec<SurveyRecord>,
}

impl TheoremReport {
    /// Lists (a) and (b) empty: the enumeration reproduces the table.
    pub fn table_matches(&self) -> bool {
        self.unmatched.is_empty() && self.missed.is_empty()
    }

    pub fn passes(&self) -> bool {
        self.table_matches() && self.disagreements.is_empty()
    }

    pub fn oracle_value(&self, zeta: &RootWeight, target: Target) -> Option<u64> {
        self.candidates
            .iter()
            .find(|r| &r.zeta == zeta && r.target == target)
            .map(|r| r.oracle)
    }
}

pub fn verify_theorem_main(ty: LieType, cap: i64) -> Result<TheoremReport> {
    verify_in(ty, &Bounds::cap(cap), Projection::Drop)
}

pub fn verify_in(ty: LieType, bounds: &Bounds, projection: Projection) -> Result<TheoremReport> {
    let candidates = nonprimitive_candidates(ty, bounds, TargetSelection::Both, projection)?;
    let found: BTreeSet<RootWeight> = candidates
        .iter()
        .filter(|r| r.oracle == 1)
        .map(|r| r.zeta.clone())
        .collect();
    let unmatched = found
        .iter()
        .filter(|z| !table2_predicate(ty, z))
        .cloned()
        .collect();
    let (_, long) = highest_roots(ty);
    let missed = enumerate_in(ty, &long, bounds)
        .into_iter()
        .filter(|z| table2_predicate(ty, z) && !found.contains(z))
        .collect();
    let disagreements = candidates.iter().filter(|r| !r.agrees()).cloned().collect();
    Ok(TheoremReport {
        ty,
        bounds: bounds.clone(),
        projection,
        candidates,
        found: found.into_iter().collect(),
        unmatched,
        missed,
        disagreements,
    })
}

/// A pair on which the two projections give different verdicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divergence {
    pub lambda: RootWeight,
    pub mu: RootWeight,
    pub drop: bool,
    pub restrict: bool,
    pub oracle: u64,
}

impl Divergence {
    pub const TSV_HEADER: &'static str = "lambda\tmu\tdrop\trestrict\toracle";

    pub fn tsv_row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}",
            self.lambda, self.mu, self.drop, self.restrict, self.oracle
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrossValidation {
    pub pairs: usize,
    pub drop_errors: usize,
    pub restrict_errors: usize,
    pub divergences: Vec<Divergence>,
}

/// All dominant weights with coefficients in `0..=cap`, lexicographic.
pub fn dominant_box(ty: LieType, cap: i64) -> Vec<RootWeight> {
    let zero = RootWeight::zero(ty);
    let mut out = vec![zero.clone()];
    out.extend(enumerate_dominant_above(ty, &zero, cap));
    out
}

/// Runs both projections and the oracle on every dominant pair `λ ≻ μ` with
/// coefficients at most `cap`.
pub fn cross_validate(ty: LieType, cap: i64) -> Result<CrossValidation> {
    let weights = dominant_box(ty, cap);
    let mut report = CrossValidation::default();
    for lambda in &weights {
        let diagram = oracle::weight_diagram(lambda)?;
        for mu in &weights {
            if !lambda.coeffs().iter().zip(mu.coeffs()).all(|(l, m)| l >= m) {
                continue;
            }
            let value = diagram.get(&mu.to_omega()).unwrap_or(0);
            let drop = bz::multiplicity_one(lambda, mu, Projection::Drop)?;
            let restrict = bz::multiplicity_one(lambda, mu, Projection::Restrict)?;
            report.pairs += 1;
            report.drop_errors += usize::from(drop != (value == 1));
            report.restrict_errors += usize::from(restrict != (value == 1));
            if drop != restrict {
                report.divergences.push(Divergence {
                    lambda: lambda.clone(),
                    mu: mu.clone(),
                    drop,
                    restrict,
                    oracle: value,
                });
            }
        }
    }
    Ok(report)
}

/// Facts proved along the way in the case analysis, checked on a sweep of
/// dominant `ζ ≻ μ_2` with coefficients at most `cap`. Returns the weights
/// that violate the statement for `ty`; types without such a statement give
/// an empty list.
pub fn sublemma_violations(ty: LieType, cap: i64) -> Vec<RootWeight> {
    let n = ty.rank();
    let (_, long) = highest_roots(ty);
    let holds = |m: &[i64]| -> bool {
        match ty.family() {
            // An interior coefficient equal to 1 forces all of them to be 1.
            Family::A if n >= 3 => !m[1..n - 1].contains(&1) || m.iter().all(|&x| x == 1),
            // m_1 = 1 forces all 1 or m_i ≥ 2 for i ≥ 2; a 2 at i ≥ 3 forces
            // m_i = 2 for i ≥ 2.
            Family::B => {
                let eight =
                    m[0] != 1 || m.iter().all(|&x| x == 1) || m[1..].iter().all(|&x| x >= 2);
                let twos =
                    !m.get(2..).is_some_and(|s| s.contains(&2)) || m[1..].iter().all(|&x| x == 2);
                eight && twos
            }
            // A 2 at an interior node forces m_i = 2 for i < n and m_n = 1.
            Family::C if n >= 4 => {
                !m[1..n - 1].contains(&2) || (m[..n - 1].iter().all(|&x| x == 2) && m[n - 1] == 1)
            }
            // A 2 at nodes 3..n−2 forces m_i = 2 for i = 2..n−2.
            Family::D if n >= 5 => !m[2..n - 2].contains(&2) || m[1..n - 2].iter().all(|&x| x == 2),
            _ => true,
        }
    };
    let sweep = match ty.family() {
        // The m_1 = 1 statement holds for every nonzero dominant weight.
        Family::B => enumerate_dominant_above(ty, &RootWeight::zero(ty), cap),
        _ => enumerate_dominant_above(ty, &long, cap),
    };
    let mut bad: Vec<RootWeight> = Vec::new();
    for z in sweep {
        let m = z.coeffs();
        let ok = if ty.family() == Family::B {
            // The second statement is only claimed above μ_2.
            let above = m.iter().zip(long.coeffs()).all(|(a, b)| a >= b);
            let eight = m[0] != 1 || m.iter().all(|&x| x == 1) || m[1..].iter().all(|&x| x >= 2);
            eight && (!above || holds(m))
        } else {
            holds(m)
        };
        if !ok {
            bad.push(z);
        }
    }
    bad
}
