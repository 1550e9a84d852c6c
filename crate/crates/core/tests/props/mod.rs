//! Instance generators and property checks shared by the property tests
//! and the acceptance suite.
#![allow(dead_code)]

use fmadm_core::{evaluate, normalize, weighted_sum, CriterionKind, DecisionMatrix, WeightVector};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub const CRISP: [f64; 5] = [2.0, 4.0, 6.0, 8.0, 10.0];

#[derive(Debug, Clone)]
pub struct Instance {
    pub rows: Vec<Vec<f64>>,
    pub kinds: Vec<CriterionKind>,
    pub weights: Vec<f64>,
}

impl Instance {
    pub fn matrix(&self) -> DecisionMatrix {
        DecisionMatrix::new(
            (0..self.rows.len()).map(|i| format!("A{i:02}")).collect(),
            (0..self.kinds.len()).map(|j| format!("C{}", j + 1)).collect(),
            self.rows.clone(),
        )
        .unwrap()
    }

    pub fn weights(&self) -> WeightVector {
        WeightVector::new(self.weights.clone()).unwrap()
    }

    fn scores(&self) -> Vec<f64> {
        weighted_sum(&normalize(&self.matrix(), &self.kinds).unwrap(), &self.weights()).unwrap()
    }
}

fn weights(m: usize, min_raw: u32) -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(min_raw..=100u32, m)
        .prop_filter("some weight", |raw| raw.iter().any(|&r| r > 0))
        .prop_map(|raw| {
            let total: f64 = raw.iter().map(|&r| f64::from(r)).sum();
            raw.iter().map(|&r| f64::from(r) / total).collect()
        })
}

fn instance_with(kind: impl Strategy<Value = CriterionKind> + Clone + 'static, min_w: u32) -> impl Strategy<Value = Instance> {
    (1usize..=8, 1usize..=5).prop_flat_map(move |(n, m)| {
        (
            proptest::collection::vec(proptest::collection::vec(proptest::sample::select(CRISP.to_vec()), m), n),
            proptest::collection::vec(kind.clone(), m),
            weights(m, min_w),
        )
            .prop_map(|(rows, kinds, weights)| Instance { rows, kinds, weights })
    })
}

fn any_kind() -> impl Strategy<Value = CriterionKind> + Clone {
    prop_oneof![Just(CriterionKind::Benefit), Just(CriterionKind::Cost)]
}

/// Up to 8 alternatives by 5 criteria, mixed kinds, weights summing to 1.
pub fn instance() -> impl Strategy<Value = Instance> {
    instance_with(any_kind(), 0)
}

pub fn benefit_instance() -> impl Strategy<Value = Instance> {
    instance_with(Just(CriterionKind::Benefit), 0)
}

/// Every weight strictly positive.
pub fn positive_instance() -> impl Strategy<Value = Instance> {
    instance_with(any_kind(), 1)
}

pub fn normalization_range(inst: &Instance) -> Result<(), TestCaseError> {
    let m = inst.matrix();
    let r = normalize(&m, &inst.kinds).unwrap();
    for row in r.rows() {
        for &x in row {
            prop_assert!(x > 0.0 && x <= 1.0);
        }
    }
    for (j, kind) in inst.kinds.iter().enumerate() {
        let col: Vec<f64> = m.column(j).collect();
        let target = match kind {
            CriterionKind::Benefit => col.iter().cloned().fold(f64::MIN, f64::max),
            CriterionKind::Cost => col.iter().cloned().fold(f64::MAX, f64::min),
        };
        let i = col.iter().position(|&x| x == target).unwrap();
        prop_assert_eq!(r.get(i, j), 1.0);
    }
    Ok(())
}

pub fn benefit_scaling_invariance(inst: &Instance, col: usize, c: f64) -> Result<(), TestCaseError> {
    let m = inst.matrix();
    let j = col % inst.kinds.len();
    let mut kinds = inst.kinds.clone();
    kinds[j] = CriterionKind::Benefit;
    let mut scaled_rows = inst.rows.clone();
    for row in &mut scaled_rows {
        row[j] *= c;
    }
    let scaled = DecisionMatrix::new(m.alternatives().to_vec(), m.criteria().to_vec(), scaled_rows).unwrap();
    let a = evaluate(&m, &kinds, &inst.weights()).unwrap();
    let b = evaluate(&scaled, &kinds, &inst.weights()).unwrap();
    for (ra, rb) in a.normalized.rows().iter().zip(b.normalized.rows()) {
        for (x, y) in ra.iter().zip(rb) {
            prop_assert!((x - y).abs() <= 1e-12);
        }
    }
    for (x, y) in a.scores.iter().zip(&b.scores) {
        prop_assert!((x - y).abs() <= 1e-12);
    }
    // scaling the tie-key column by c > 0 keeps its order
    prop_assert_eq!(a.ranking.ids(), b.ranking.ids());
    Ok(())
}

pub fn criteria_permutation(inst: &Instance, seed: u64) -> Result<(), TestCaseError> {
    let m = inst.kinds.len();
    let mut perm: Vec<usize> = (0..m).collect();
    // Fisher-Yates driven by an LCG on the seed
    let mut s = seed;
    for k in (1..m).rev() {
        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        perm.swap(k, (s >> 33) as usize % (k + 1));
    }
    let permuted = Instance {
        rows: inst.rows.iter().map(|r| perm.iter().map(|&p| r[p]).collect()).collect(),
        kinds: perm.iter().map(|&p| inst.kinds[p]).collect(),
        weights: perm.iter().map(|&p| inst.weights[p]).collect(),
    };
    for (x, y) in inst.scores().iter().zip(&permuted.scores()) {
        prop_assert!((x - y).abs() <= 1e-12);
    }
    Ok(())
}

pub fn row_permutation(inst: &Instance) -> Result<(), TestCaseError> {
    let n = inst.rows.len();
    let mut reversed = inst.clone();
    reversed.rows.reverse();
    let a = inst.scores();
    let b = reversed.scores();
    for i in 0..n {
        prop_assert_eq!(a[i], b[n - 1 - i]);
    }
    Ok(())
}

pub fn benefit_monotonicity(inst: &Instance, row: usize, col: usize) -> Result<(), TestCaseError> {
    let i = row % inst.rows.len();
    let j = col % inst.kinds.len();
    let max = inst.rows.iter().map(|r| r[j]).fold(f64::MIN, f64::max);
    let mut raised = inst.clone();
    // raising a cell up to the column max leaves the max unchanged
    raised.rows[i][j] = max;
    prop_assert!(raised.scores()[i] >= inst.scores()[i]);
    Ok(())
}

pub fn determinism(inst: &Instance) -> Result<(), TestCaseError> {
    let m = inst.matrix();
    let a = evaluate(&m, &inst.kinds, &inst.weights()).unwrap();
    let b = evaluate(&m, &inst.kinds, &inst.weights()).unwrap();
    prop_assert_eq!(a, b);
    Ok(())
}

pub fn score_range(inst: &Instance) -> Result<(), TestCaseError> {
    let e = evaluate(&inst.matrix(), &inst.kinds, &inst.weights()).unwrap();
    for (i, &v) in e.scores.iter().enumerate() {
        prop_assert!(v > 0.0 && v <= 1.0 + 1e-12);
        let best_everywhere = (0..inst.kinds.len()).all(|j| e.normalized.get(i, j) == 1.0);
        prop_assert_eq!(best_everywhere, (v - 1.0).abs() <= 1e-12, "row {} v {}", i, v);
    }
    Ok(())
}

pub fn oracle_agreement(inst: &Instance) -> Result<(), TestCaseError> {
    let m = inst.matrix();
    let e = evaluate(&m, &inst.kinds, &inst.weights()).unwrap();
    let benefit: Vec<bool> = inst.kinds.iter().map(|k| *k == CriterionKind::Benefit).collect();
    let o = crate::oracle::saw(&inst.rows, &benefit, &inst.weights, m.alternatives());
    for (x, y) in e.scores.iter().zip(&o.scores) {
        prop_assert!((x - y).abs() <= 1e-12);
    }
    let order: Vec<usize> = e.ranking.entries.iter().map(|r| r.index).collect();
    prop_assert_eq!(order, o.order);
    Ok(())
}
