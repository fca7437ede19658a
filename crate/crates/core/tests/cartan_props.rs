mod common;

use proptest::prelude::*;
use schur_scope::{preset, CartanMatrix, TypeClass, WeylGroup};

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn check_symmetrizer(c: &CartanMatrix) {
    let d = c.symmetrizer();
    let n = c.rank();
    assert!(d.iter().all(|&x| x > 0));
    assert_eq!(d.iter().fold(0, |g, &x| gcd(g, x)), 1);
    for i in 0..n {
        for j in 0..n {
            assert_eq!(d[i] * c.get(i, j), d[j] * c.get(j, i));
        }
    }
}

/// A connected symmetrizable matrix: a_ij = -m_ij d_j with m symmetric.
fn random_cartan() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (2usize..=5).prop_flat_map(|n| {
        (
            proptest::collection::vec(1i64..=3, n),
            proptest::collection::vec(0i64..=2, n * n),
        )
            .prop_map(move |(d, m)| {
                let mut rows = vec![vec![0; n]; n];
                for i in 0..n {
                    rows[i][i] = 2;
                    for j in i + 1..n {
                        let mut w = m[i * n + j];
                        if j == i + 1 && w == 0 {
                            w = 1;
                        }
                        rows[i][j] = -w * d[j];
                        rows[j][i] = -w * d[i];
                    }
                }
                rows
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn random_matrices_are_symmetrized(rows in random_cartan()) {
        let c = CartanMatrix::new(rows).unwrap();
        check_symmetrizer(&c);
    }
}

#[test]
fn preset_symmetrizers() {
    for name in common::FINITE_UP_TO_4
        .iter()
        .chain(&["E6", "E7", "E8", "affine-A1", "affine-A3", "universal:3:2", "universal:4:3"])
    {
        check_symmetrizer(&preset(name).unwrap());
    }
}

#[test]
fn exponents_are_symmetric() {
    for name in ["B3", "G2", "F4", "universal:3:5", "affine-A2"] {
        let c = preset(name).unwrap();
        for i in 0..c.rank() {
            for j in (0..c.rank()).filter(|&j| j != i) {
                assert_eq!(c.coxeter_exponent(i, j).unwrap(), c.coxeter_exponent(j, i).unwrap());
            }
        }
    }
}

#[test]
fn root_count_is_rank_times_coxeter_number() {
    for name in common::FINITE_UP_TO_4 {
        let c = preset(name).unwrap();
        let n = c.rank() as u64;
        let h = c.coxeter_number().unwrap();
        let roots = WeylGroup::new(c).enumerate_real_roots(i64::MAX);
        assert_eq!(roots.len() as u64, n * h, "{name}");
    }
}

#[test]
fn universal_classification() {
    for k in 2..=5 {
        for m in 2..=4 {
            let expected = if (k, m) == (2, 2) { TypeClass::Affine } else { TypeClass::Indefinite };
            assert_eq!(preset(&format!("universal:{k}:{m}")).unwrap().classify(), expected, "{k}:{m}");
        }
    }
}
