//! Straight-line reference implementations used as test oracles.
//!
//! Nothing here calls into the library under test: every number is computed
//! with plain loops over `Vec`s so that agreement is meaningful.
#![allow(dead_code, clippy::needless_range_loop, clippy::assign_op_pattern, clippy::manual_range_contains)]

/// Scores and the ranked order (as input row indices) for one instance.
pub struct OracleResult {
    pub scores: Vec<f64>,
    pub order: Vec<usize>,
}

/// Naive SAW. `benefit[j]` selects x/max (true) or min/x (false).
/// Ranking: score desc; rows whose scores chain within `tol` of their
/// neighbour count as tied and are ordered by column 0 desc, then id asc.
pub fn saw(crisp: &[Vec<f64>], benefit: &[bool], weights: &[f64], ids: &[String]) -> OracleResult {
    let n = crisp.len();
    let m = benefit.len();
    let mut scores = vec![0.0f64; n];
    let mut r = vec![vec![0.0f64; m]; n];
    for j in 0..m {
        let mut max = crisp[0][j];
        let mut min = crisp[0][j];
        for i in 1..n {
            if crisp[i][j] > max {
                max = crisp[i][j];
            }
            if crisp[i][j] < min {
                min = crisp[i][j];
            }
        }
        for i in 0..n {
            if benefit[j] {
                r[i][j] = crisp[i][j] / max;
            } else {
                r[i][j] = min / crisp[i][j];
            }
        }
    }
    for i in 0..n {
        let mut v = 0.0;
        for j in 0..m {
            v = v + weights[j] * r[i][j];
        }
        scores[i] = v;
    }

    // insertion sort by score desc, index asc
    let mut order: Vec<usize> = Vec::new();
    for i in 0..n {
        let mut pos = order.len();
        for (k, &o) in order.iter().enumerate() {
            if scores[i] > scores[o] {
                pos = k;
                break;
            }
        }
        order.insert(pos, i);
    }

    let tol = 1e-12;
    let mut result = Vec::new();
    let mut k = 0;
    while k < n {
        let mut group = vec![order[k]];
        while k + 1 < n && scores[order[k]] - scores[order[k + 1]] <= tol {
            k += 1;
            group.push(order[k]);
        }
        k += 1;
        // bubble sort inside the group
        for a in 0..group.len() {
            for b in 0..group.len() - 1 - a {
                let x = group[b];
                let y = group[b + 1];
                let swap = if crisp[x][0] != crisp[y][0] {
                    crisp[x][0] < crisp[y][0]
                } else if ids[x] != ids[y] {
                    ids[x] > ids[y]
                } else {
                    x > y
                };
                if swap {
                    group.swap(b, b + 1);
                }
            }
        }
        result.extend(group);
    }
    OracleResult {
        scores,
        order: result,
    }
}

/// The published interval lists, written as if/else chains. `None` means the
/// value is outside every interval.
pub fn nilai(x: f64) -> Option<u8> {
    if !(0.0..=100.0).contains(&x) {
        None
    } else if x < 40.0 {
        Some(2)
    } else if x < 60.0 {
        Some(4)
    } else if x < 70.0 {
        Some(6)
    } else if x < 85.0 {
        Some(8)
    } else {
        Some(10)
    }
}

pub fn penghasilan(x: f64) -> Option<u8> {
    if x < 0.0 {
        None
    } else if x < 1_000_000.0 {
        Some(10)
    } else if x < 2_500_000.0 {
        Some(8)
    } else if x < 5_000_000.0 {
        Some(6)
    } else {
        Some(4)
    }
}

pub fn tanggungan(x: f64) -> Option<u8> {
    if x < 1.0 {
        None
    } else if x < 2.0 {
        Some(2)
    } else if x < 3.0 {
        Some(4)
    } else if x < 4.0 {
        Some(6)
    } else if x < 5.0 {
        Some(8)
    } else {
        Some(10)
    }
}

pub fn semester(x: f64) -> Option<u8> {
    if x < 2.0 || x >= 7.0 {
        None
    } else if x < 3.0 {
        Some(2)
    } else if x < 4.0 {
        Some(4)
    } else if x < 5.0 {
        Some(6)
    } else if x < 6.0 {
        Some(8)
    } else {
        Some(10)
    }
}
