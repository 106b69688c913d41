use std::collections::BTreeMap;

use howe_core::crystals::{multiplicity_oracle, OracleWeight};
use howe_core::multiplicity::{mult_det_a_q, mult_det_bc_q, mult_det_d_q, LieType};
use howe_core::partitions::{enumerate_in_box, enumerate_type_d, TypeDWeight};
use num_bigint::BigInt;

/// Formula values at q = 1 over the whole support, keyed like the oracle's
/// translated weights. Zero entries are dropped.
fn formula_table(ty: LieType, n: usize, factors: usize) -> BTreeMap<(OracleWeight, i64), BigInt> {
    let mut out = BTreeMap::new();
    let mut put = |w: OracleWeight, p: i64, v: BigInt| {
        if v != BigInt::from(0) {
            out.insert((w, p), v);
        }
    };
    match ty {
        LieType::A => {
            for l in enumerate_in_box(n, factors as i64) {
                let v = mult_det_a_q(&l, n, factors).unwrap().eval_at_one();
                put(OracleWeight::Partition(l), 0, v);
            }
        }
        LieType::C => {
            for l in enumerate_in_box(n, factors as i64) {
                let v = mult_det_bc_q(&l, n, factors, 1).unwrap().eval_at_one();
                put(OracleWeight::Partition(l), 0, v);
            }
        }
        LieType::B => {
            let p = (factors % 2) as i64;
            let k = factors / 2;
            for l in enumerate_in_box(n, k as i64) {
                let v = mult_det_bc_q(&l, n, k, p).unwrap().eval_at_one();
                put(OracleWeight::Partition(l), p, v);
            }
        }
        LieType::D => {
            let p = (factors % 2) as i64;
            let k = factors / 2;
            if p == 0 {
                for w in enumerate_type_d(n, k as i64) {
                    let v = mult_det_d_q(&w, n, k, 0).unwrap().eval_at_one();
                    put(OracleWeight::TypeD(w), 0, v);
                }
            } else {
                for l in enumerate_in_box(n, k as i64) {
                    let w = TypeDWeight::from_partition(&l, n).unwrap();
                    let v = mult_det_d_q(&w, n, k, 1).unwrap().eval_at_one();
                    put(OracleWeight::Partition(l), 1, v);
                }
            }
        }
    }
    out
}

fn oracle_table(ty: LieType, n: usize, factors: usize) -> BTreeMap<(OracleWeight, i64), BigInt> {
    let t = multiplicity_oracle(ty, n, factors).unwrap();
    let mut out = BTreeMap::new();
    for (w2, &c) in &t.counts {
        let key = t.formula_weight(w2);
        // Type D with an odd power: both spin signs carry the same count.
        let prev = out.insert(key, BigInt::from(c));
        if let Some(p) = prev {
            assert_eq!(p, BigInt::from(c), "{ty:?} sign-paired weights disagree");
        }
    }
    out
}

#[test]
fn crystal_counts_equal_formulas() {
    let mut cases = Vec::new();
    for n in 1..=3 {
        for k in 0..=3 {
            cases.push((LieType::A, n, k));
        }
    }
    for n in 1..=2 {
        for f in 0..=4 {
            cases.push((LieType::B, n, f));
            cases.push((LieType::D, n, f));
        }
        for k in 0..=2 {
            cases.push((LieType::C, n, k));
        }
    }
    for (ty, n, f) in cases {
        assert_eq!(oracle_table(ty, n, f), formula_table(ty, n, f), "{ty:?} n={n} factors={f}");
    }
}
