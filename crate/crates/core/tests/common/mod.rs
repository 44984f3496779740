#![allow(dead_code)]

use frobenius_core::{Label, Matrix64, Quaternion64, Tensor64, Tolerance64};
use rand::Rng;

pub fn tol() -> Tolerance64 {
    Tolerance64::default()
}

pub fn tensor(n: usize, table: impl Fn(usize, usize) -> Vec<f64>) -> Tensor64 {
    Tensor64::from_fn(n, vec![], None, |i, j, k| table(i, j)[k]).unwrap()
}

pub fn m2r() -> Tensor64 {
    tensor(4, |x, y| {
        let mut out = vec![0.0; 4];
        if x % 2 == y / 2 {
            out[2 * (x / 2) + y % 2] = 1.0;
        }
        out
    })
}

pub fn dual() -> Tensor64 {
    tensor(2, |i, j| {
        let mut out = vec![0.0; 2];
        if i + j < 2 {
            out[i + j] = 1.0;
        }
        out
    })
}

pub fn componentwise(n: usize) -> Tensor64 {
    tensor(n, |i, j| {
        let mut out = vec![0.0; n];
        if i == j {
            out[i] = 1.0;
        }
        out
    })
}

pub fn r_plus_c() -> Tensor64 {
    tensor(3, |a, b| {
        let mut out = vec![0.0; 3];
        match (a, b) {
            (0, 0) => out[0] = 1.0,
            (1, x) | (x, 1) if x >= 1 => out[x] = 1.0,
            (2, 2) => out[1] = -1.0,
            _ => {}
        }
        out
    })
}

pub fn octonion() -> Tensor64 {
    const TRIPLES: [(usize, usize, usize); 7] = [
        (1, 2, 3),
        (1, 4, 5),
        (1, 7, 6),
        (2, 4, 6),
        (2, 5, 7),
        (3, 4, 7),
        (3, 6, 5),
    ];
    let mut table: Vec<Vec<Vec<f64>>> = (0..8)
        .map(|a| {
            (0..8)
                .map(|b| {
                    let mut e = vec![0.0; 8];
                    match (a, b) {
                        (0, _) => e[b] = 1.0,
                        (_, 0) => e[a] = 1.0,
                        _ if a == b => e[0] = -1.0,
                        _ => {}
                    }
                    e
                })
                .collect()
        })
        .collect();
    for &(a, b, c) in &TRIPLES {
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            table[x][y][z] = 1.0;
            table[y][x][z] = -1.0;
        }
    }
    tensor(8, |i, j| table[i][j].clone())
}

pub fn division(label: Label) -> Tensor64 {
    frobenius_core::structure_tensor_of(label)
}

pub fn non_examples() -> Vec<(&'static str, Tensor64)> {
    vec![
        ("m2r", m2r()),
        ("dual", dual()),
        ("r2", componentwise(2)),
        ("r3", componentwise(3)),
        ("r5", componentwise(5)),
        ("r-plus-c", r_plus_c()),
        ("octonion", octonion()),
    ]
}

/// Random basis change with Frobenius condition number at most 1e3.
pub fn random_basis(n: usize, rng: &mut impl Rng) -> Matrix64 {
    loop {
        let p = Matrix64::new(n, n, (0..n * n).map(|_| rng.gen_range(-1.0..1.0)).collect()).unwrap();
        if let Ok(pinv) = frobenius_core::linalg::inverse(&p, &tol()) {
            if p.frobenius_norm() * pinv.frobenius_norm() <= 1e3 {
                return p;
            }
        }
    }
}

pub fn random_quaternion(rng: &mut impl Rng) -> Quaternion64 {
    Quaternion64::new(
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
    )
}
