//! Generators for positive and negative test algebras.

use clap::ValueEnum;
use frobenius_core::{linalg, structure_tensor_of, Label, Matrix64, Quaternion64, Tensor64, Tolerance64};

use crate::document::{Provenance, TensorDocument};
use crate::rng::FixtureRng;

/// Twists are redrawn until `|P|_F |P^-1|_F` is at most this; the Frobenius
/// product bounds the spectral condition number from above.
pub const MAX_CONDITION: f64 = 1e3;

/// Cayley-Dickson triples `(a, b, c)` with `e_a e_b = e_c`, read cyclically;
/// reversing any pair flips the sign and `e_a^2 = -1`.
pub const OCTONION_TRIPLES: [(usize, usize, usize); 7] = [
    (1, 2, 3),
    (1, 4, 5),
    (1, 7, 6),
    (2, 4, 6),
    (2, 5, 7),
    (3, 4, 7),
    (3, 6, 5),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    R,
    C,
    H,
    TwistR,
    TwistC,
    TwistH,
    M2r,
    Dual,
    RnComponentwise,
    RPlusC,
    Octonion,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::R => "r",
            Kind::C => "c",
            Kind::H => "h",
            Kind::TwistR => "twist-r",
            Kind::TwistC => "twist-c",
            Kind::TwistH => "twist-h",
            Kind::M2r => "m2r",
            Kind::Dual => "dual",
            Kind::RnComponentwise => "rn-componentwise",
            Kind::RPlusC => "r-plus-c",
            Kind::Octonion => "octonion",
        }
    }
}

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn provenance(kind: Kind) -> Provenance {
    Provenance {
        generator: kind.name().to_string(),
        seed: None,
        basis_change: None,
        note: None,
    }
}

pub fn m2r() -> Tensor64 {
    // E_ab E_cd = [b == c] E_ad on the basis E11, E12, E21, E22
    Tensor64::from_fn(4, names(&["E11", "E12", "E21", "E22"]), None, |x, y, z| {
        ((x % 2 == y / 2) && z == 2 * (x / 2) + y % 2) as u8 as f64
    })
    .expect("well-formed")
}

pub fn dual() -> Tensor64 {
    Tensor64::from_fn(2, names(&["1", "eps"]), Some(0), |i, j, k| (i + j == k) as u8 as f64).expect("well-formed")
}

pub fn rn_componentwise(n: usize) -> Tensor64 {
    Tensor64::from_fn(n, vec![], None, |i, j, k| (i == j && j == k) as u8 as f64).expect("well-formed")
}

/// Basis `(1, 0)`, `(0, 1)`, `(0, i)`.
pub fn r_plus_c() -> Tensor64 {
    Tensor64::from_fn(3, names(&["(1,0)", "(0,1)", "(0,i)"]), None, |a, b, c| match (a, b) {
        (0, 0) => (c == 0) as u8 as f64,
        (1, x) | (x, 1) if x >= 1 => (c == x) as u8 as f64,
        (2, 2) => -((c == 1) as u8 as f64),
        _ => 0.0,
    })
    .expect("well-formed")
}

pub fn octonion() -> Tensor64 {
    let mut table: [[(usize, f64); 8]; 8] = std::array::from_fn(|a| {
        std::array::from_fn(|b| match (a, b) {
            (0, _) => (b, 1.0),
            (_, 0) => (a, 1.0),
            _ if a == b => (0, -1.0),
            _ => (0, 0.0),
        })
    });
    for &(a, b, c) in &OCTONION_TRIPLES {
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            table[x][y] = (z, 1.0);
            table[y][x] = (z, -1.0);
        }
    }
    let names = (0..8).map(|i| format!("e{i}")).collect();
    Tensor64::from_fn(
        8,
        names,
        Some(0),
        |i, j, k| if table[i][j].0 == k { table[i][j].1 } else { 0.0 },
    )
    .expect("well-formed")
}

/// Random `P` with entries uniform in `[-1, 1)`, filled row by row, redrawn
/// until invertible with condition at most [`MAX_CONDITION`].
pub fn random_twist(n: usize, rng: &mut FixtureRng) -> Matrix64 {
    let tol = Tolerance64::default();
    loop {
        let entries = (0..n * n).map(|_| rng.range(-1.0, 1.0)).collect();
        let p = Matrix64::new(n, n, entries).expect("finite");
        if let Ok(inv) = linalg::inverse(&p, &tol) {
            if p.frobenius_norm() * inv.frobenius_norm() <= MAX_CONDITION {
                return p;
            }
        }
    }
}

fn twisted(label: Label, kind: Kind, seed: u64) -> TensorDocument {
    let base: Tensor64 = structure_tensor_of(label);
    let mut rng = FixtureRng::new(seed);
    let p = random_twist(base.dim(), &mut rng);
    let t = base
        .change_basis(&p, &Tolerance64::default())
        .expect("P passed the rank check");
    let mut prov = provenance(kind);
    prov.seed = Some(seed);
    prov.basis_change = Some(p.to_rows());
    TensorDocument::from_tensor(&t, Some(prov))
}

/// The document for `kind`; `seed` only matters for twists and `n` only for
/// `rn-componentwise`.
pub fn generate(kind: Kind, seed: u64, n: usize) -> TensorDocument {
    let plain = |t: Tensor64| TensorDocument::from_tensor(&t, Some(provenance(kind)));
    match kind {
        Kind::R => plain(structure_tensor_of(Label::R)),
        Kind::C => plain(structure_tensor_of(Label::C)),
        Kind::H => plain(structure_tensor_of(Label::H)),
        Kind::TwistR => twisted(Label::R, kind, seed),
        Kind::TwistC => twisted(Label::C, kind, seed),
        Kind::TwistH => twisted(Label::H, kind, seed),
        Kind::M2r => plain(m2r()),
        Kind::Dual => plain(dual()),
        Kind::RnComponentwise => plain(rn_componentwise(n)),
        Kind::RPlusC => plain(r_plus_c()),
        Kind::Octonion => {
            let mut prov = provenance(kind);
            prov.note = Some(
                "Cayley-Dickson table: e0 = 1, e_a^2 = -1, and e_a e_b = e_c for the cyclic triples \
                 (1,2,3) (1,4,5) (1,7,6) (2,4,6) (2,5,7) (3,4,7) (3,6,5), with e_b e_a = -e_c"
                    .into(),
            );
            TensorDocument::from_tensor(&octonion(), Some(prov))
        }
    }
}

/// Checks the octonion table against quaternion arithmetic on the
/// subalgebra spanned by `e0, e1, e2, e3`.
pub fn octonion_restricts_to_quaternions() -> bool {
    let o = octonion();
    (0..4).all(|a| {
        (0..4).all(|b| {
            let q = Quaternion64::basis(a) * Quaternion64::basis(b);
            (0..8).all(|k| o.c(a, b, k) == if k < 4 { q.to_array()[k] } else { 0.0 })
        })
    })
}
