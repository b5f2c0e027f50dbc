use std::fs;

use lie_orbits::curated::{
    self, load_tables, parse_shared_table, serialize_exceptional, serialize_shared_table,
    validate_tables, DEFAULT_EXCEPTIONAL, DEFAULT_TABLE, EXCEPTIONAL_FILE, TABLE_FILE,
};
use lie_orbits::linalg::{q, SparseMatrix, Q};
use lie_orbits::matmodel::{fiber, jordan_type, kk_rank_at, mu, product_cover_degree, SymplecticSpace};
use lie_orbits::Error;
use proptest::prelude::*;

#[test]
fn file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join(TABLE_FILE);
    fs::write(&path, DEFAULT_TABLE).unwrap();
    fs::write(dir.path().join(EXCEPTIONAL_FILE), DEFAULT_EXCEPTIONAL).unwrap();
    let tables = load_tables(&path).unwrap();
    fs::write(&path, serialize_shared_table(&tables.shared)).unwrap();
    fs::write(
        dir.path().join(EXCEPTIONAL_FILE),
        serialize_exceptional(&tables.exceptional).unwrap(),
    )
    .unwrap();
    assert_eq!(load_tables(&path).unwrap(), tables);
}

#[test]
fn named_rows_present() {
    let rows = parse_shared_table(DEFAULT_TABLE).unwrap();
    let text: Vec<String> = rows.iter().map(|r| r.to_string()).collect();
    for want in ["(A2, G2, (3), 3)", "(G2, D4, sub, 6)", "(G2, B3, short, 1)"] {
        assert!(text.iter().any(|t| t == want), "{want} missing from {text:?}");
    }
}

#[test]
fn wrong_degree_is_reported_by_row() {
    let edited = DEFAULT_TABLE.replace("D4\tF4\t(3,2,2,1)\t4", "D4\tF4\t(3,2,2,1)\t2");
    let tables = curated::Tables {
        shared: parse_shared_table(&edited).unwrap(),
        exceptional: curated::parse_exceptional(DEFAULT_EXCEPTIONAL).unwrap(),
    };
    let report = validate_tables(&tables).unwrap();
    let failures: Vec<_> = report.failures().collect();
    assert_eq!(failures.len(), 1);
    assert!(failures[0].row.starts_with("(D4, F4"));
}

#[test]
fn invalid_partition_row_fails_validation() {
    let edited = DEFAULT_TABLE.replace("B4\tF4\t(2,2,2,2,1)", "B4\tF4\t(2,2,2,1,1,1)");
    let tables = curated::Tables {
        shared: parse_shared_table(&edited).unwrap(),
        exceptional: curated::parse_exceptional(DEFAULT_EXCEPTIONAL).unwrap(),
    };
    assert!(!validate_tables(&tables).unwrap().passed());
}

#[test]
fn bad_exceptional_metadata_is_caught() {
    let edited = DEFAULT_EXCEPTIONAL.replace("\"dimension\": 10", "\"dimension\": 12");
    let tables = curated::Tables {
        shared: parse_shared_table(DEFAULT_TABLE).unwrap(),
        exceptional: curated::parse_exceptional(&edited).unwrap(),
    };
    let report = validate_tables(&tables).unwrap();
    assert!(report.failures().any(|c| c.row == "G2 subregular"));
    assert!(matches!(
        curated::parse_exceptional("[{\"g\": \"G2\"}]"),
        Err(Error::Json(_))
    ));
}

#[test]
fn sp_model_examples() {
    for n in 1..=3 {
        let s = SymplecticSpace::new(n).unwrap();
        let v: Vec<Q> = (0..2 * n).map(|i| q(i as i64 + 1)).collect();
        let x = mu(&s, &v).unwrap().matrix;
        let mut want = vec![2];
        want.extend(std::iter::repeat(1).take(2 * n - 2));
        assert_eq!(jordan_type(&x).unwrap(), want);
        assert_eq!(fiber(&s, &x).unwrap().len(), 2);
        assert_eq!(kk_rank_at(&s, &v).unwrap(), 2 * n);
    }
    for (list, deg) in [(vec![1], 1), (vec![1, 1], 2), (vec![1, 2, 1], 4), (vec![2, 1, 1, 1], 8)] {
        assert_eq!(product_cover_degree(&list).unwrap().degree, deg);
    }
}

fn vec_strategy(n: usize) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-6i64..=6, 2 * n)
}

proptest! {
    #[test]
    fn mu_is_symplectic_square_zero_and_two_to_one(xs in vec_strategy(3), lam in 1i64..5) {
        let s = SymplecticSpace::new(3).unwrap();
        let v: Vec<Q> = xs.iter().map(|&x| q(x)).collect();
        let x = mu(&s, &v).unwrap().matrix;
        prop_assert!(s.is_in_sp(&x));
        prop_assert!(x.mul(&x).is_zero());
        let scaled: Vec<Q> = v.iter().map(|c| c * q(lam)).collect();
        prop_assert_eq!(mu(&s, &scaled).unwrap().matrix, x.scale(&q(lam * lam)));
        let f = fiber(&s, &x).unwrap();
        if v.iter().all(|c| c == &q(0)) {
            prop_assert_eq!(f.len(), 1);
            prop_assert!(x.is_zero());
        } else {
            prop_assert_eq!(x.rank(), 1);
            prop_assert_eq!(f.len(), 2);
            let neg: Vec<Q> = v.iter().map(|c| -c).collect();
            prop_assert!(f.contains(&v) && f.contains(&neg));
        }
    }

    #[test]
    fn omega_is_preserved_by_exp_of_sp(xs in vec_strategy(2), ys in vec_strategy(2)) {
        // For X in sp with X^2 = 0, 1 + X is symplectic.
        let s = SymplecticSpace::new(2).unwrap();
        let v: Vec<Q> = xs.iter().map(|&x| q(x)).collect();
        let g = SparseMatrix::identity(4).add(&mu(&s, &v).unwrap().matrix);
        let w: Vec<Q> = ys.iter().map(|&x| q(x)).collect();
        let apply = |m: &SparseMatrix, u: &[Q]| -> Vec<Q> {
            let d = m.mul_vec(&u.iter().cloned().enumerate().filter(|(_, c)| c != &q(0)).collect());
            (0..4).map(|i| d.get(&i).cloned().unwrap_or_else(|| q(0))).collect()
        };
        let gv = apply(&g, &v);
        let gw = apply(&g, &w);
        prop_assert_eq!(s.omega(&gv, &gw), s.omega(&v, &w));
    }
}
