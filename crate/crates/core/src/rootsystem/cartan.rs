use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::Ratio;
use num_traits::{One, Zero};

use super::{Family, LieType};

/// Cartan data of a simple type.
///
/// `matrix[j][i] = 2(α_i, α_j)/(α_j, α_j)`, so row `j` is the functional that
/// reads off the `j`-th fundamental-weight coordinate: `c = A·m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    ty: LieType,
    matrix: Vec<Vec<i64>>,
    adjacency: Vec<Vec<usize>>,
    lengths: Vec<Ratio<i64>>,
}

impl CartanData {
    pub fn lie_type(&self) -> LieType {
        self.ty
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.matrix[row][col]
    }

    /// Neighbours of each node in the Dynkin diagram, ascending.
    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    pub fn are_adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.matrix[i][j] != 0
    }

    /// Squared lengths `(α_i, α_i)`.
    pub fn lengths(&self) -> &[Ratio<i64>] {
        &self.lengths
    }

    pub fn is_long(&self, i: usize) -> bool {
        self.lengths[i] == Ratio::from_integer(2)
    }

    pub fn apply(&self, m: &[i64]) -> Vec<i64> {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(m).map(|(a, x)| a * x).sum())
            .collect()
    }
}

/// Builds the Cartan data of `ty` from its Dynkin diagram.
pub fn cartan_matrix(ty: LieType) -> CartanData {
    let n = ty.rank();
    // (i, j, bond multiplicity)
    let mut edges: Vec<(usize, usize, i64)> = Vec::new();
    let mut short: Vec<bool> = vec![false; n];
    let path = |edges: &mut Vec<(usize, usize, i64)>, len: usize| {
        for i in 1..len {
            edges.push((i - 1, i, 1));
        }
    };
    match ty.family() {
        Family::A => path(&mut edges, n),
        Family::B => {
            path(&mut edges, n);
            edges.last_mut().unwrap().2 = 2;
            short[n - 1] = true;
        }
        Family::C => {
            path(&mut edges, n);
            edges.last_mut().unwrap().2 = 2;
            short[..n - 1].iter_mut().for_each(|s| *s = true);
        }
        Family::D => {
            path(&mut edges, n - 1);
            edges.push((n - 3, n - 1, 1));
        }
        Family::E => {
            edges.push((0, 2, 1));
            edges.push((1, 3, 1));
            for i in 3..n {
                edges.push((i - 1, i, 1));
            }
        }
        Family::F => {
            edges.extend([(0, 1, 1), (1, 2, 2), (2, 3, 1)]);
            short[2] = true;
            short[3] = true;
        }
        Family::G => {
            edges.push((0, 1, 3));
            short[0] = true;
        }
    }

    let bond = edges.iter().map(|e| e.2).max().unwrap_or(1);
    let lengths: Vec<Ratio<i64>> = short
        .iter()
        .map(|&s| {
            if s {
                Ratio::new(2, bond)
            } else {
                Ratio::from_integer(2)
            }
        })
        .collect();

    let mut matrix = vec![vec![0i64; n]; n];
    let mut adjacency = vec![Vec::new(); n];
    for (i, row) in matrix.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(i, j, b) in &edges {
        // The row of the shorter root carries the bond multiplicity.
        let (si, sj) = (short[i], short[j]);
        matrix[i][j] = if si && !sj { -b } else { -1 };
        matrix[j][i] = if sj && !si { -b } else { -1 };
        adjacency[i].push(j);
        adjacency[j].push(i);
    }
    adjacency.iter_mut().for_each(|a| a.sort_unstable());

    CartanData {
        ty,
        matrix,
        adjacency,
        lengths,
    }
}

/// Everything derived from the Cartan data that the oracle and the
/// classifier need, computed once per type.
#[derive(Debug)]
pub struct RootSystem {
    cartan: CartanData,
    inverse: Vec<Vec<Ratio<i64>>>,
    // 3·(α_i, α_i); the pairing 6(w, α_i) equals norm3[i]·c_i.
    norm3: Vec<i64>,
    // 6·(α_i, α_j)
    form6: Vec<Vec<i64>>,
    positive: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn new(ty: LieType) -> Self {
        let cartan = cartan_matrix(ty);
        let n = ty.rank();
        let norm3: Vec<i64> = cartan
            .lengths
            .iter()
            .map(|l| (l * 3).to_integer())
            .collect();
        let mut form6 = vec![vec![0i64; n]; n];
        for (i, row) in form6.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                // (α_i, α_j) = A[j][i]·(α_j, α_j)/2
                *v = cartan.matrix[j][i] * norm3[j];
            }
        }
        let inverse = invert(&cartan.matrix);
        let positive = generate_positive_roots(&cartan);
        RootSystem {
            cartan,
            inverse,
            norm3,
            form6,
            positive,
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.cartan.ty
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.ty.rank()
    }

    pub fn inverse(&self) -> &[Vec<Ratio<i64>>] {
        &self.inverse
    }

    /// Solves `A·m = c`.
    pub fn solve(&self, c: &[i64]) -> Vec<Ratio<i64>> {
        self.inverse
            .iter()
            .map(|row| {
                row.iter()
                    .zip(c)
                    .fold(Ratio::zero(), |acc, (a, &x)| acc + a * x)
            })
            .collect()
    }

    /// Integral solution of `A·m = c`, if there is one.
    pub fn solve_integral(&self, c: &[i64]) -> Option<Vec<i64>> {
        self.solve(c)
            .into_iter()
            .map(|r| r.is_integer().then(|| r.to_integer()))
            .collect()
    }

    /// `6·(x, y)` for root-coordinate vectors.
    pub fn form6(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut acc = 0;
        for (i, xi) in x.iter().enumerate() {
            if *xi == 0 {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                acc += xi * yj * self.form6[i][j];
            }
        }
        acc
    }

    /// `6·(w, β)` for `w` in ω-coordinates and `β` in root coordinates.
    pub fn pair6(&self, omega: &[i64], root: &[i64]) -> i64 {
        omega
            .iter()
            .zip(root)
            .zip(&self.norm3)
            .map(|((c, r), h)| c * r * h)
            .sum()
    }

    pub fn norm3(&self) -> &[i64] {
        &self.norm3
    }

    /// Positive roots in root coordinates, ordered by height then
    /// lexicographically.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    pub(crate) fn reflect_in_place(&self, omega: &mut [i64], node: usize) -> i64 {
        let c = omega[node];
        if c != 0 {
            for (j, w) in omega.iter_mut().enumerate() {
                *w -= c * self.cartan.matrix[j][node];
            }
        }
        c
    }

    /// Reflects at the first negative coordinate until none is left. When
    /// `root_coeffs` is given it is kept in sync with `omega`.
    pub(crate) fn dominate_in_place(
        &self,
        omega: &mut [i64],
        mut root_coeffs: Option<&mut Vec<i64>>,
    ) -> usize {
        let mut steps = 0;
        while let Some(i) = omega.iter().position(|&c| c < 0) {
            let c = self.reflect_in_place(omega, i);
            if let Some(m) = root_coeffs.as_deref_mut() {
                m[i] -= c;
            }
            steps += 1;
        }
        steps
    }
}

/// Shared, lazily built root systems. The values are immutable.
pub fn root_system(ty: LieType) -> Arc<RootSystem> {
    static CACHE: OnceLock<Mutex<HashMap<LieType, Arc<RootSystem>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(rs) = cache.lock().unwrap().get(&ty) {
        return Arc::clone(rs);
    }
    let rs = Arc::new(RootSystem::new(ty));
    let mut guard = cache.lock().unwrap();
    Arc::clone(guard.entry(ty).or_insert(rs))
}

fn invert(m: &[Vec<i64>]) -> Vec<Vec<Ratio<i64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i64>>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Ratio<i64>> = row.iter().map(|&x| Ratio::from_integer(x)).collect();
            r.extend((0..n).map(|j| if i == j { Ratio::one() } else { Ratio::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrices of simple types are invertible");
        a.swap(col, pivot);
        let p = a[col][col];
        a[col].iter_mut().for_each(|x| *x /= p);
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

// Closure under root strings: for a root β and simple α_i, β + α_i is a root
// iff p − ⟨β, α_i^∨⟩ > 0, where p is the length of the downward α_i-string.
fn generate_positive_roots(cartan: &CartanData) -> Vec<Vec<i64>> {
    let n = cartan.ty.rank();
    let mut all: HashSet<Vec<i64>> = HashSet::new();
    let mut level: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    let mut out = Vec::new();
    while !level.is_empty() {
        level.sort();
        all.extend(level.iter().cloned());
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in &level {
            let omega = cartan.apply(beta);
            for i in 0..n {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if all.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - omega[i] > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        out.append(&mut level);
        level = next;
    }
    out
}
