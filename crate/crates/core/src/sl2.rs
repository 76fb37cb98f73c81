//! Traceless 2x2 matrices, invertible 2x2 matrices, and validated triples.
//!
//! A traceless matrix [[a, b], [c, -a]] is stored as its coordinates
//! (a, b, c). Conjugation is fixed as conj(P, Z) = P^-1 Z P throughout; the
//! opposite orientation P Z P^-1 is available as `tau`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result, TripleRelation};
use crate::field::{Field, FieldElem};
use crate::poly::Poly;

/// Traceless 2x2 matrix over F[x1..xn].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatSL2 {
    a: Poly,
    b: Poly,
    c: Poly,
}

impl MatSL2 {
    pub fn new(a: Poly, b: Poly, c: Poly) -> Result<MatSL2> {
        a.same_ring(&b)?;
        a.same_ring(&c)?;
        Ok(MatSL2 { a, b, c })
    }

    pub fn zero(field: Field, nvars: usize) -> MatSL2 {
        MatSL2 {
            a: Poly::zero(field, nvars),
            b: Poly::zero(field, nvars),
            c: Poly::zero(field, nvars),
        }
    }

    /// [[0, 1], [0, 0]]
    pub fn e(field: Field, nvars: usize) -> MatSL2 {
        MatSL2 {
            a: Poly::zero(field, nvars),
            b: Poly::one(field, nvars),
            c: Poly::zero(field, nvars),
        }
    }

    /// [[1, 0], [0, -1]]
    pub fn h(field: Field, nvars: usize) -> MatSL2 {
        MatSL2 {
            a: Poly::one(field, nvars),
            b: Poly::zero(field, nvars),
            c: Poly::zero(field, nvars),
        }
    }

    /// [[0, 0], [1, 0]]
    pub fn f(field: Field, nvars: usize) -> MatSL2 {
        MatSL2 {
            a: Poly::zero(field, nvars),
            b: Poly::zero(field, nvars),
            c: Poly::one(field, nvars),
        }
    }

    pub fn a(&self) -> &Poly {
        &self.a
    }

    pub fn b(&self) -> &Poly {
        &self.b
    }

    pub fn c(&self) -> &Poly {
        &self.c
    }

    pub fn field(&self) -> Field {
        self.a.field()
    }

    pub fn nvars(&self) -> usize {
        self.a.nvars()
    }

    pub fn same_ring(&self, other: &MatSL2) -> Result<()> {
        self.a.same_ring(&other.a)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    pub fn add(&self, other: &MatSL2) -> MatSL2 {
        MatSL2 {
            a: self.a.add(&other.a),
            b: self.b.add(&other.b),
            c: self.c.add(&other.c),
        }
    }

    pub fn sub(&self, other: &MatSL2) -> MatSL2 {
        MatSL2 {
            a: self.a.sub(&other.a),
            b: self.b.sub(&other.b),
            c: self.c.sub(&other.c),
        }
    }

    pub fn neg(&self) -> MatSL2 {
        MatSL2 {
            a: self.a.neg(),
            b: self.b.neg(),
            c: self.c.neg(),
        }
    }

    pub fn scale(&self, k: &Poly) -> MatSL2 {
        MatSL2 {
            a: self.a.mul(k),
            b: self.b.mul(k),
            c: self.c.mul(k),
        }
    }

    pub fn scale_fe(&self, k: &FieldElem) -> MatSL2 {
        MatSL2 {
            a: self.a.scale(k),
            b: self.b.scale(k),
            c: self.c.scale(k),
        }
    }

    pub fn map_entries(&self, mut f: impl FnMut(&Poly) -> Poly) -> MatSL2 {
        MatSL2 {
            a: f(&self.a),
            b: f(&self.b),
            c: f(&self.c),
        }
    }

    /// The determinant-like invariant a^2 + bc. It equals -det and is fixed
    /// by conjugation; 1 for involutions, 0 for square-zero matrices.
    pub fn quad(&self) -> Poly {
        self.a.mul(&self.a).add(&self.b.mul(&self.c))
    }

    pub fn is_involution(&self) -> bool {
        self.quad().is_one()
    }

    pub fn is_square_zero(&self) -> bool {
        self.quad().is_zero()
    }

    pub fn render(&self, names: &[&str]) -> [String; 3] {
        [
            self.a.render(names),
            self.b.render(names),
            self.c.render(names),
        ]
    }
}

impl fmt::Display for MatSL2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, -({})]]", self.a, self.b, self.c, self.a)
    }
}

/// Lie bracket AB - BA of traceless matrices, in coordinates.
pub fn bracket(x: &MatSL2, y: &MatSL2) -> MatSL2 {
    x.same_ring(y).expect("ring mismatch");
    let two = |p: &Poly| p.add(p);
    MatSL2 {
        a: x.b.mul(&y.c).sub(&x.c.mul(&y.b)),
        b: two(&x.a.mul(&y.b).sub(&x.b.mul(&y.a))),
        c: two(&x.c.mul(&y.a).sub(&x.a.mul(&y.c))),
    }
}

/// Invertible 2x2 matrix with unit determinant over F[x1..xn], stored with
/// its inverse so conjugation needs no division.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatGL2 {
    entries: [Poly; 4],
    det: Poly,
    det_inv: Poly,
    inv: [Poly; 4],
}

impl MatGL2 {
    /// Validates that the determinant is a unit and precomputes the inverse.
    pub fn new(p11: Poly, p12: Poly, p21: Poly, p22: Poly) -> Result<MatGL2> {
        p11.same_ring(&p12)?;
        p11.same_ring(&p21)?;
        p11.same_ring(&p22)?;
        let det = p11.mul(&p22).sub(&p12.mul(&p21));
        let det_inv = det.unit_inverse().ok_or(Error::NotInvertibleOverR)?;
        let inv = [
            p22.mul(&det_inv),
            p12.neg().mul(&det_inv),
            p21.neg().mul(&det_inv),
            p11.mul(&det_inv),
        ];
        Ok(MatGL2 {
            entries: [p11, p12, p21, p22],
            det,
            det_inv,
            inv,
        })
    }

    pub fn identity(field: Field, nvars: usize) -> MatGL2 {
        MatGL2::new(
            Poly::one(field, nvars),
            Poly::zero(field, nvars),
            Poly::zero(field, nvars),
            Poly::one(field, nvars),
        )
        .expect("identity is invertible")
    }

    /// [[1, r], [0, 1]]
    pub fn e12(r: &Poly) -> MatGL2 {
        let field = r.field();
        let nv = r.nvars();
        MatGL2::new(
            Poly::one(field, nv),
            r.clone(),
            Poly::zero(field, nv),
            Poly::one(field, nv),
        )
        .expect("unipotent is invertible")
    }

    /// [[1, 0], [r, 1]]
    pub fn e21(r: &Poly) -> MatGL2 {
        let field = r.field();
        let nv = r.nvars();
        MatGL2::new(
            Poly::one(field, nv),
            Poly::zero(field, nv),
            r.clone(),
            Poly::one(field, nv),
        )
        .expect("unipotent is invertible")
    }

    /// diag(u, v) for unit constants.
    pub fn diag_units(field: Field, nvars: usize, u: &FieldElem, v: &FieldElem) -> Result<MatGL2> {
        MatGL2::new(
            Poly::constant(field, nvars, u.clone()),
            Poly::zero(field, nvars),
            Poly::zero(field, nvars),
            Poly::constant(field, nvars, v.clone()),
        )
    }

    pub fn entries(&self) -> &[Poly; 4] {
        &self.entries
    }

    pub fn inverse_entries(&self) -> &[Poly; 4] {
        &self.inv
    }

    pub fn det(&self) -> &Poly {
        &self.det
    }

    pub fn det_inv(&self) -> &Poly {
        &self.det_inv
    }

    pub fn field(&self) -> Field {
        self.entries[0].field()
    }

    pub fn nvars(&self) -> usize {
        self.entries[0].nvars()
    }

    pub fn mul(&self, other: &MatGL2) -> MatGL2 {
        let a = &self.entries;
        let b = &other.entries;
        let entries = mul2(a, b);
        // (PQ)^-1 = Q^-1 P^-1
        let inv = mul2(&other.inv, &self.inv);
        MatGL2 {
            entries,
            det: self.det.mul(&other.det),
            det_inv: self.det_inv.mul(&other.det_inv),
            inv,
        }
    }

    pub fn inverse(&self) -> MatGL2 {
        MatGL2 {
            entries: self.inv.clone(),
            det: self.det_inv.clone(),
            det_inv: self.det.clone(),
            inv: self.entries.clone(),
        }
    }

    pub fn map_entries(&self, f: impl Fn(&Poly) -> Poly) -> Result<MatGL2> {
        let e = &self.entries;
        MatGL2::new(f(&e[0]), f(&e[1]), f(&e[2]), f(&e[3]))
    }

    /// conj(P, Z) = P^-1 Z P. Tracelessness of the result is rechecked.
    pub fn conj(&self, z: &MatSL2) -> MatSL2 {
        conj_full(&self.inv, &self.entries, z)
    }

    /// tau(P, Z) = P Z P^-1 = conj(P^-1, Z).
    pub fn tau(&self, z: &MatSL2) -> MatSL2 {
        conj_full(&self.entries, &self.inv, z)
    }

    /// Equality in PGL2: differ by a unit constant scalar factor.
    pub fn pgl_eq(&self, other: &MatGL2) -> bool {
        if self.entries[0].same_ring(&other.entries[0]).is_err() {
            return false;
        }
        // find a nonzero reference entry of other
        let mut ratio: Option<Poly> = None;
        for k in 0..4 {
            if !other.entries[k].is_zero() {
                match self.entries[k].divexact(&other.entries[k]) {
                    Ok(q) => {
                        if q.unit_inverse().is_none() {
                            return false;
                        }
                        ratio = Some(q);
                        break;
                    }
                    Err(_) => return false,
                }
            } else if !self.entries[k].is_zero() {
                return false;
            }
        }
        let u = match ratio {
            Some(u) => u,
            None => return false, // other is the zero matrix, impossible here
        };
        (0..4).all(|k| self.entries[k] == other.entries[k].mul(&u))
    }

    pub fn render(&self, names: &[&str]) -> [String; 4] {
        [
            self.entries[0].render(names),
            self.entries[1].render(names),
            self.entries[2].render(names),
            self.entries[3].render(names),
        ]
    }
}

fn mul2(a: &[Poly; 4], b: &[Poly; 4]) -> [Poly; 4] {
    [
        a[0].mul(&b[0]).add(&a[1].mul(&b[2])),
        a[0].mul(&b[1]).add(&a[1].mul(&b[3])),
        a[2].mul(&b[0]).add(&a[3].mul(&b[2])),
        a[2].mul(&b[1]).add(&a[3].mul(&b[3])),
    ]
}

/// left * [[z.a, z.b], [z.c, -z.a]] * right, asserting zero trace.
fn conj_full(left: &[Poly; 4], right: &[Poly; 4], z: &MatSL2) -> MatSL2 {
    let zm = [
        z.a().clone(),
        z.b().clone(),
        z.c().clone(),
        z.a().neg(),
    ];
    let m = mul2(&mul2(left, &zm), right);
    assert!(
        m[0].add(&m[3]).is_zero(),
        "conjugate of a traceless matrix must be traceless"
    );
    MatSL2 {
        a: m[0].clone(),
        b: m[1].clone(),
        c: m[2].clone(),
    }
}

/// A validated sl2-triple: [X,Y] = H, [H,X] = 2X, [H,Y] = -2Y.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple {
    x: MatSL2,
    h: MatSL2,
    y: MatSL2,
}

impl Sl2Triple {
    pub fn x(&self) -> &MatSL2 {
        &self.x
    }

    pub fn h(&self) -> &MatSL2 {
        &self.h
    }

    pub fn y(&self) -> &MatSL2 {
        &self.y
    }

    pub fn standard(field: Field, nvars: usize) -> Sl2Triple {
        Sl2Triple {
            x: MatSL2::e(field, nvars),
            h: MatSL2::h(field, nvars),
            y: MatSL2::f(field, nvars),
        }
    }

    /// Coordinatewise image under a map that preserves the relations.
    pub fn map(&self, mut f: impl FnMut(&MatSL2) -> MatSL2) -> Result<Sl2Triple> {
        verify_triple(f(&self.x), f(&self.h), f(&self.y))
    }
}

/// Checks the three bracket relations exactly and packages the triple.
/// The quadratic identities these relations force are asserted afterwards
/// as an internal consistency check.
pub fn verify_triple(x: MatSL2, h: MatSL2, y: MatSL2) -> Result<Sl2Triple> {
    x.same_ring(&h)?;
    x.same_ring(&y)?;
    if x.is_zero() || h.is_zero() || y.is_zero() {
        return Err(Error::ZeroElement);
    }
    if bracket(&x, &y) != h {
        return Err(Error::NotATriple(TripleRelation::XY));
    }
    if bracket(&h, &x) != x.add(&x) {
        return Err(Error::NotATriple(TripleRelation::HX));
    }
    if bracket(&h, &y) != y.add(&y).neg() {
        return Err(Error::NotATriple(TripleRelation::HY));
    }
    if !h.is_involution() {
        return Err(Error::Internal("valid triple with h^2 != 1"));
    }
    if !x.is_square_zero() || !y.is_square_zero() {
        return Err(Error::Internal("valid triple with non-nilpotent x or y"));
    }
    Ok(Sl2Triple { x, h, y })
}

/// Builds the list of standard generators e, h, f plus x_i * h for each
/// variable; the elements automorphism and derivation data are given on.
pub fn generator_sample(field: Field, nvars: usize) -> Vec<MatSL2> {
    let mut out = alloc::vec![
        MatSL2::e(field, nvars),
        MatSL2::h(field, nvars),
        MatSL2::f(field, nvars),
    ];
    for i in 0..nvars {
        out.push(MatSL2::h(field, nvars).scale(&Poly::var(field, nvars, i)));
    }
    out
}
