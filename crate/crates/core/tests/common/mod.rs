#![allow(dead_code)]

//! Dense 2x2 matrix arithmetic used as an independent oracle. Nothing here
//! shares code with the coordinate formulas under test: products, brackets
//! and conjugations are spelled out entry by entry.

use sl2_core::{Field, MatGL2, MatSL2, Poly};

/// Row-major dense 2x2 matrix over the polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2 {
    pub e: [Poly; 4],
}

impl Mat2 {
    pub fn from_sl2(m: &MatSL2) -> Mat2 {
        Mat2 {
            e: [m.a().clone(), m.b().clone(), m.c().clone(), m.a().neg()],
        }
    }

    pub fn from_gl2(m: &MatGL2) -> Mat2 {
        Mat2 {
            e: m.entries().clone(),
        }
    }

    pub fn from_gl2_inverse(m: &MatGL2) -> Mat2 {
        Mat2 {
            e: m.inverse_entries().clone(),
        }
    }

    pub fn identity(field: Field, nvars: usize) -> Mat2 {
        let one = Poly::one(field, nvars);
        let zero = Poly::zero(field, nvars);
        Mat2 {
            e: [one.clone(), zero.clone(), zero, one],
        }
    }

    pub fn mul(&self, other: &Mat2) -> Mat2 {
        let a = &self.e;
        let b = &other.e;
        Mat2 {
            e: [
                a[0].mul(&b[0]).add(&a[1].mul(&b[2])),
                a[0].mul(&b[1]).add(&a[1].mul(&b[3])),
                a[2].mul(&b[0]).add(&a[3].mul(&b[2])),
                a[2].mul(&b[1]).add(&a[3].mul(&b[3])),
            ],
        }
    }

    pub fn sub(&self, other: &Mat2) -> Mat2 {
        Mat2 {
            e: [
                self.e[0].sub(&other.e[0]),
                self.e[1].sub(&other.e[1]),
                self.e[2].sub(&other.e[2]),
                self.e[3].sub(&other.e[3]),
            ],
        }
    }

    pub fn scale(&self, k: &Poly) -> Mat2 {
        Mat2 {
            e: [
                self.e[0].mul(k),
                self.e[1].mul(k),
                self.e[2].mul(k),
                self.e[3].mul(k),
            ],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(Poly::is_zero)
    }

    pub fn commutator(&self, other: &Mat2) -> Mat2 {
        self.mul(other).sub(&other.mul(self))
    }
}

/// Bracket through dense products.
pub fn oracle_bracket(x: &MatSL2, y: &MatSL2) -> Mat2 {
    Mat2::from_sl2(x).commutator(&Mat2::from_sl2(y))
}

/// P^-1 Z P through dense products.
pub fn oracle_conj(p: &MatGL2, z: &MatSL2) -> Mat2 {
    Mat2::from_gl2_inverse(p)
        .mul(&Mat2::from_sl2(z))
        .mul(&Mat2::from_gl2(p))
}

/// P Z P^-1 through dense products.
pub fn oracle_tau(p: &MatGL2, z: &MatSL2) -> Mat2 {
    Mat2::from_gl2(p)
        .mul(&Mat2::from_sl2(z))
        .mul(&Mat2::from_gl2_inverse(p))
}

pub fn agrees(dense: &Mat2, coords: &MatSL2) -> bool {
    dense == &Mat2::from_sl2(coords)
}

/// Full check of the defining relations by dense arithmetic alone:
/// [x, y] = h, [h, x] = 2x, [h, y] = -2y, h^2 = 1, x^2 = y^2 = 0.
pub fn oracle_is_triple(x: &MatSL2, h: &MatSL2, y: &MatSL2) -> bool {
    let field = h.field();
    let nv = h.nvars();
    let xd = Mat2::from_sl2(x);
    let hd = Mat2::from_sl2(h);
    let yd = Mat2::from_sl2(y);
    let two = Poly::int(field, nv, 2);
    xd.commutator(&yd) == hd
        && hd.commutator(&xd) == xd.scale(&two)
        && hd.commutator(&yd) == yd.scale(&two.neg())
        && hd.mul(&hd) == Mat2::identity(field, nv)
        && xd.mul(&xd).is_zero()
        && yd.mul(&yd).is_zero()
}
