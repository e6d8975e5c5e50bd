#![allow(dead_code)]

use weightmult::rootsystem::{Family, LieType};

/// One inequality `Σ lhs ≤ Σ rhs` over 1-based coefficient indices, stored as
/// a row `r` with `Σ r_i m_i ≥ 0`.
fn le(n: usize, lhs: &[(i64, usize)], rhs: &[(i64, usize)]) -> Vec<i64> {
    let mut row = vec![0; n];
    for &(c, i) in rhs {
        row[i - 1] += c;
    }
    for &(c, i) in lhs {
        row[i - 1] -= c;
    }
    row
}

/// The dominance inequalities written out per type in the case analysis,
/// transcribed by hand. Independent of the Cartan matrices in the library.
pub fn hand_inequalities(ty: LieType) -> Vec<Vec<i64>> {
    let n = ty.rank();
    let mut rows = Vec::new();
    let chain = |rows: &mut Vec<Vec<i64>>, range: std::ops::RangeInclusive<usize>| {
        for i in range {
            rows.push(le(n, &[(1, i - 1), (1, i + 1)], &[(2, i)]));
        }
    };
    match (ty.family(), n) {
        (Family::A, 1) => rows.push(le(n, &[], &[(2, 1)])),
        (Family::A, _) => {
            rows.push(le(n, &[(1, 2)], &[(2, 1)]));
            chain(&mut rows, 2..=n - 1);
            rows.push(le(n, &[(1, n - 1)], &[(2, n)]));
        }
        (Family::B, _) => {
            rows.push(le(n, &[(1, 2)], &[(2, 1)]));
            if n == 2 {
                rows.push(le(n, &[(1, 1)], &[(1, 2)]));
            } else {
                chain(&mut rows, 2..=n - 1);
                rows.push(le(n, &[(1, n - 1)], &[(1, n)]));
            }
        }
        (Family::C, 3) => {
            rows.push(le(n, &[(1, 2)], &[(2, 1)]));
            rows.push(le(n, &[(1, 1), (2, 3)], &[(2, 2)]));
            rows.push(le(n, &[(1, 2)], &[(2, 3)]));
        }
        (Family::C, _) => {
            rows.push(le(n, &[(1, 2)], &[(2, 1)]));
            chain(&mut rows, 2..=n - 2);
            rows.push(le(n, &[(1, n - 2), (2, n)], &[(2, n - 1)]));
            rows.push(le(n, &[(1, n - 1)], &[(2, n)]));
        }
        (Family::D, 4) => {
            rows.push(le(n, &[(1, 2)], &[(2, 1)]));
            rows.push(le(n, &[(1, 1), (1, 3), (1, 4)], &[(2, 2)]));
            rows.push(le(n, &[(1, 2)], &[(2, 3)]));
            rows.push(le(n, &[(1, 2)], &[(2, 4)]));
        }
        (Family::D, _) => {
            rows.push(le(n, &[(1, 2)], &[(2, 1)]));
            chain(&mut rows, 2..=n - 3);
            rows.push(le(n, &[(1, n - 3), (1, n - 1), (1, n)], &[(2, n - 2)]));
            rows.push(le(n, &[(1, n - 2)], &[(2, n - 1)]));
            rows.push(le(n, &[(1, n - 2)], &[(2, n)]));
        }
        (Family::E, _) => {
            rows.push(le(n, &[(1, 3)], &[(2, 1)]));
            rows.push(le(n, &[(1, 4)], &[(2, 2)]));
            rows.push(le(n, &[(1, 1), (1, 4)], &[(2, 3)]));
            rows.push(le(n, &[(1, 2), (1, 3), (1, 5)], &[(2, 4)]));
            chain(&mut rows, 5..=n - 1);
            rows.push(le(n, &[(1, n - 1)], &[(2, n)]));
        }
        (Family::F, _) => {
            rows.push(le(n, &[(1, 2)], &[(2, 1)]));
            rows.push(le(n, &[(1, 1), (1, 3)], &[(2, 2)]));
            rows.push(le(n, &[(2, 2), (1, 4)], &[(2, 3)]));
            rows.push(le(n, &[(1, 3)], &[(2, 4)]));
        }
        (Family::G, _) => {
            rows.push(le(n, &[(3, 2)], &[(2, 1)]));
            rows.push(le(n, &[(1, 1)], &[(2, 2)]));
        }
    }
    rows
}

pub fn satisfies(rows: &[Vec<i64>], m: &[i64]) -> bool {
    rows.iter()
        .all(|r| r.iter().zip(m).map(|(a, b)| a * b).sum::<i64>() >= 0)
}

/// Calls `f` on every vector in `[lo, hi]^n`, lexicographically.
pub fn for_each_vector(n: usize, lo: i64, hi: i64, mut f: impl FnMut(&[i64])) {
    let mut v = vec![lo; n];
    loop {
        f(&v);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if v[i] < hi {
                v[i] += 1;
                break;
            }
            v[i] = lo;
        }
    }
}

pub const LISTED_TYPES: &[&str] = &[
    "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "B6", "C3", "C4", "C5", "C6", "D4", "D5",
    "D6", "E6", "E7", "E8", "F4", "G2",
];
