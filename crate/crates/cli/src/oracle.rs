//! Brute-force dense 2x2 arithmetic used to re-verify every answer before
//! it is emitted. Kept deliberately separate from the coordinate formulas
//! in the library: products here are written out entry by entry.

use sl2_core::{Field, MatGL2, MatSL2, Poly};

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

    pub fn add(&self, other: &Mat2) -> Mat2 {
        Mat2 {
            e: [
                self.e[0].add(&other.e[0]),
                self.e[1].add(&other.e[1]),
                self.e[2].add(&other.e[2]),
                self.e[3].add(&other.e[3]),
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

/// P^-1 Z P by dense products.
pub fn conj(p: &MatGL2, z: &MatSL2) -> Mat2 {
    Mat2::from_gl2_inverse(p)
        .mul(&Mat2::from_sl2(z))
        .mul(&Mat2::from_gl2(p))
}

/// P Z P^-1 by dense products.
pub fn tau(p: &MatGL2, z: &MatSL2) -> Mat2 {
    Mat2::from_gl2(p)
        .mul(&Mat2::from_sl2(z))
        .mul(&Mat2::from_gl2_inverse(p))
}

pub fn same(dense: &Mat2, coords: &MatSL2) -> bool {
    dense == &Mat2::from_sl2(coords)
}

/// The defining relations checked by dense arithmetic alone.
pub fn is_triple(x: &MatSL2, h: &MatSL2, y: &MatSL2) -> bool {
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
