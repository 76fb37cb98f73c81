//! Constructive conjugacy: explicit factorizations, conjugators into the
//! diagonal and standard forms, triples from involutions and square-zero
//! matrices, and the membership test for conjugates of the split form.

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::gcd::{derive_bezout, poly_gcd, BezoutCert};
use crate::poly::Poly;
use crate::sl2::{verify_triple, MatGL2, MatSL2, Sl2Triple};

/// Factorization data of an involution with both off-diagonal coordinates
/// nonzero: H1 - 1 = u*a*b, H1 + 1 = u'*a'*b', H2 = v*a*a', H3 = w*b*b'
/// with a, a', b, b' monic and u, u', v, w unit constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionFactorization {
    pub a: Poly,
    pub a_prime: Poly,
    pub b: Poly,
    pub b_prime: Poly,
    pub u: FieldElem,
    pub u_prime: FieldElem,
    pub v: FieldElem,
    pub w: FieldElem,
}

fn unit_of(p: &Poly) -> Result<FieldElem> {
    match p.constant_value() {
        Some(c) if !c.is_zero() => Ok(c),
        _ => Err(Error::InternalNonUnitQuotient),
    }
}

/// Splits the coordinates of an involution along the gcds of H1 -+ 1 with
/// the off-diagonal coordinates. The quotients are forced to be units.
pub fn ufd_factor_involution(h: &MatSL2) -> Result<InvolutionFactorization> {
    if !h.is_involution() {
        return Err(Error::NotInvolution);
    }
    let (h1, h2, h3) = (h.a(), h.b(), h.c());
    if h2.is_zero() || h3.is_zero() {
        return Err(Error::DegenerateCase);
    }
    let one = Poly::one(h1.field(), h1.nvars());
    let h1m = h1.sub(&one);
    let h1p = h1.add(&one);
    let a = poly_gcd(&h1m, h2);
    let a_prime = poly_gcd(&h1p, h2);
    let b = poly_gcd(&h1m, h3);
    let b_prime = poly_gcd(&h1p, h3);
    let u = unit_of(&h1m.divexact(&a.mul(&b)).map_err(|_| Error::InternalNonUnitQuotient)?)?;
    let u_prime = unit_of(
        &h1p.divexact(&a_prime.mul(&b_prime))
            .map_err(|_| Error::InternalNonUnitQuotient)?,
    )?;
    let v = unit_of(&h2.divexact(&a.mul(&a_prime)).map_err(|_| Error::InternalNonUnitQuotient)?)?;
    let w = unit_of(&h3.divexact(&b.mul(&b_prime)).map_err(|_| Error::InternalNonUnitQuotient)?)?;
    if u.mul(&u_prime) != v.mul(&w).neg() {
        return Err(Error::Internal("unit relation u*u' = -v*w failed"));
    }
    Ok(InvolutionFactorization {
        a,
        a_prime,
        b,
        b_prime,
        u,
        u_prime,
        v,
        w,
    })
}

fn is_plus_one(p: &Poly) -> bool {
    p.is_one()
}

fn is_minus_one(p: &Poly) -> bool {
    p.neg().is_one()
}

/// Completes an involution H to a triple (X, H, Y).
pub fn triple_from_involution(h: &MatSL2) -> Result<Sl2Triple> {
    if !h.is_involution() {
        return Err(Error::NotInvolution);
    }
    let field = h.field();
    let nv = h.nvars();
    let (h1, h2, h3) = (h.a(), h.b(), h.c());
    let half = FieldElem::from_i64(field, 2).inv().expect("2 is a unit");
    let neg_half = half.neg();
    let quarter = half.mul(&half);
    let (x, y) = if h2.is_zero() {
        // h1^2 = 1 with zero h2 forces h1 = 1 or h1 = -1
        if is_plus_one(h1) {
            let x = MatSL2::new(
                h3.scale(&neg_half),
                Poly::one(field, nv),
                h3.mul(h3).scale(&quarter.neg()),
            )?;
            (x, MatSL2::f(field, nv))
        } else if is_minus_one(h1) {
            let y = MatSL2::new(
                h3.scale(&neg_half),
                Poly::int(field, nv, -1),
                h3.mul(h3).scale(&quarter),
            )?;
            (MatSL2::f(field, nv).neg(), y)
        } else {
            return Err(Error::Internal("involution with h2 = 0 and h1 != +-1"));
        }
    } else if h3.is_zero() {
        if is_plus_one(h1) {
            let y = MatSL2::new(
                h2.scale(&neg_half),
                h2.mul(h2).scale(&quarter.neg()),
                Poly::one(field, nv),
            )?;
            (MatSL2::e(field, nv), y)
        } else if is_minus_one(h1) {
            let x = MatSL2::new(
                h2.scale(&neg_half),
                h2.mul(h2).scale(&quarter),
                Poly::int(field, nv, -1),
            )?;
            (x, MatSL2::e(field, nv).neg())
        } else {
            return Err(Error::Internal("involution with h3 = 0 and h1 != +-1"));
        }
    } else {
        let fac = ufd_factor_involution(h)?;
        let one = Poly::one(field, nv);
        let h1m = h1.sub(&one);
        let h1p = h1.add(&one);
        // X' = [[(H1-1)H2, H2^2], [-(H1-1)^2, .]], scaled by 1/(2 v a^2)
        let x_raw = MatSL2::new(h1m.mul(h2), h2.mul(h2), h1m.mul(&h1m).neg())?;
        let y_raw = MatSL2::new(h1p.mul(h2).neg(), h2.mul(h2).neg(), h1p.mul(&h1p))?;
        let two_v = fac.v.add(&fac.v);
        let dx = fac.a.mul(&fac.a).scale(&two_v);
        let dy = fac.a_prime.mul(&fac.a_prime).scale(&two_v);
        let div = |m: &MatSL2, d: &Poly| -> Result<MatSL2> {
            MatSL2::new(
                m.a().divexact(d).map_err(|_| Error::Internal("forced division failed"))?,
                m.b().divexact(d).map_err(|_| Error::Internal("forced division failed"))?,
                m.c().divexact(d).map_err(|_| Error::Internal("forced division failed"))?,
            )
        };
        (div(&x_raw, &dx)?, div(&y_raw, &dy)?)
    };
    verify_triple(x, h.clone(), y)
}

/// Conjugator P with conj(P, H) = diag(1, -1), built from explicit matrices
/// in the degenerate cases and from the factorization otherwise.
pub fn diagonalize_involution(h: &MatSL2) -> Result<MatGL2> {
    if !h.is_involution() {
        return Err(Error::NotInvolution);
    }
    let field = h.field();
    let nv = h.nvars();
    let (h1, h2, h3) = (h.a(), h.b(), h.c());
    let half = FieldElem::from_i64(field, 2).inv().expect("2 is a unit");
    let one = Poly::one(field, nv);
    let zero = Poly::zero(field, nv);
    let p = if h2.is_zero() {
        if is_plus_one(h1) {
            MatGL2::new(one.clone(), zero, h3.scale(&half), one)?
        } else {
            MatGL2::new(zero.clone(), Poly::int(field, nv, -1), one, h3.scale(&half))?
        }
    } else if h3.is_zero() {
        if is_plus_one(h1) {
            MatGL2::new(one.clone(), h2.scale(&half.neg()), zero, one)?
        } else {
            MatGL2::new(h2.scale(&half), Poly::int(field, nv, -1), one, zero)?
        }
    } else {
        let fac = ufd_factor_involution(h)?;
        MatGL2::new(
            fac.a_prime.scale(&fac.u_prime),
            fac.a.scale(&fac.u),
            fac.b.scale(&fac.w),
            fac.b_prime.scale(&fac.w),
        )?
    };
    if p.conj(h) != MatSL2::h(field, nv) {
        return Err(Error::Internal("diagonalization postcondition failed"));
    }
    Ok(p)
}

/// Conjugator P carrying a validated triple exactly onto (e, h, f).
pub fn standardize_triple(t: &Sl2Triple) -> Result<MatGL2> {
    let field = t.h().field();
    let nv = t.h().nvars();
    let p0 = diagonalize_involution(t.h())?;
    let x1 = p0.conj(t.x());
    // with the middle element diagonal, the relations force
    // x1 = [[0, u], [0, 0]] and y1 = [[0, 0], [1/u, 0]] with u a unit
    if !x1.a().is_zero() || !x1.c().is_zero() {
        return Err(Error::InternalShapeViolation);
    }
    let u = x1.b().constant_value().filter(|c| !c.is_zero()).ok_or(Error::InternalShapeViolation)?;
    let y1 = p0.conj(t.y());
    let u_inv = u.inv().expect("unit");
    if !y1.a().is_zero()
        || !y1.b().is_zero()
        || y1.c().constant_value() != Some(u_inv)
    {
        return Err(Error::InternalShapeViolation);
    }
    let p = p0.mul(&MatGL2::diag_units(field, nv, &u, &FieldElem::one(field))?);
    if p.conj(t.x()) != MatSL2::e(field, nv)
        || p.conj(t.h()) != MatSL2::h(field, nv)
        || p.conj(t.y()) != MatSL2::f(field, nv)
    {
        return Err(Error::Internal("standardization postcondition failed"));
    }
    Ok(p)
}

/// Coordinates of (H, X, Y) as the columns of a 3x3 matrix over R. Its
/// determinant is forced to be exactly 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleBasis {
    pub rows: [[Poly; 3]; 3],
}

impl TripleBasis {
    pub fn det(&self) -> Poly {
        det3(&self.rows)
    }

    /// Since det = 1 the inverse is the adjugate.
    pub fn inverse(&self) -> [[Poly; 3]; 3] {
        let m = &self.rows;
        let cof = |r1: usize, c1: usize, r2: usize, c2: usize| {
            m[r1][c1].mul(&m[r2][c2]).sub(&m[r1][c2].mul(&m[r2][c1]))
        };
        [
            [cof(1, 1, 2, 2), cof(0, 2, 2, 1), cof(0, 1, 1, 2)],
            [cof(1, 2, 2, 0), cof(0, 0, 2, 2), cof(0, 2, 1, 0)],
            [cof(1, 0, 2, 1), cof(0, 1, 2, 0), cof(0, 0, 1, 1)],
        ]
    }
}

fn det3(m: &[[Poly; 3]; 3]) -> Poly {
    let t1 = m[0][0].mul(&m[1][1].mul(&m[2][2]).sub(&m[1][2].mul(&m[2][1])));
    let t2 = m[0][1].mul(&m[1][0].mul(&m[2][2]).sub(&m[1][2].mul(&m[2][0])));
    let t3 = m[0][2].mul(&m[1][0].mul(&m[2][1]).sub(&m[1][1].mul(&m[2][0])));
    t1.sub(&t2).add(&t3)
}

/// The coordinate matrix of a validated triple, with the unimodularity
/// assertion that makes it a basis change over R.
pub fn triple_basis_matrix(t: &Sl2Triple) -> Result<TripleBasis> {
    let rows = [
        [t.h().a().clone(), t.x().a().clone(), t.y().a().clone()],
        [t.h().b().clone(), t.x().b().clone(), t.y().b().clone()],
        [t.h().c().clone(), t.x().c().clone(), t.y().c().clone()],
    ];
    let basis = TripleBasis { rows };
    if !basis.det().is_one() {
        return Err(Error::Internal("triple basis determinant must be 1"));
    }
    Ok(basis)
}

/// Validates a supplied certificate against the coordinates of X, or derives
/// one when the ring has at most one variable.
pub fn comaximality_certificate(x: &MatSL2, supplied: Option<&BezoutCert>) -> Result<BezoutCert> {
    match supplied {
        Some(cert) => {
            cert.r.same_ring(x.b())?;
            if !cert.matches_targets(x.b(), x.c()) || !cert.verify() {
                return Err(Error::BadCertificate);
            }
            Ok(cert.clone())
        }
        None => derive_bezout(x.b(), x.c()),
    }
}

/// Completes a nonzero square-zero X with comaximal off-diagonal
/// coordinates to a triple (X, H, Y).
pub fn jacobson_morozov(x: &MatSL2, cert: Option<&BezoutCert>) -> Result<Sl2Triple> {
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    if !x.is_square_zero() {
        return Err(Error::NotNilpotent);
    }
    let cert = comaximality_certificate(x, cert)?;
    let (x1, x2, x3) = (x.a(), x.b(), x.c());
    let (r, s) = (&cert.r, &cert.s);
    let two = |p: &Poly| p.add(p);
    let h = MatSL2::new(
        r.mul(x2).sub(&s.mul(x3)),
        two(&s.mul(x1)),
        two(&r.mul(x1)).neg(),
    )?;
    let y = MatSL2::new(
        r.mul(s).mul(x1).neg(),
        s.mul(s).mul(x3),
        r.mul(r).mul(x2),
    )?;
    verify_triple(x.clone(), h, y)
}

/// Conjugator P with conj(P, X) = e for a nonzero square-zero X with
/// comaximal off-diagonal coordinates; det P = -w for a unit w.
pub fn nilpotent_to_standard(x: &MatSL2, cert: Option<&BezoutCert>) -> Result<MatGL2> {
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    if !x.is_square_zero() {
        return Err(Error::NotNilpotent);
    }
    let cert = comaximality_certificate(x, cert)?;
    let field = x.field();
    let nv = x.nvars();
    let (x1, x2, x3) = (x.a(), x.b(), x.c());
    // x1^2 = -x2*x3 factors as x1 = u*p0*q, x2 = -(1/w)p^2, x3 = w*q^2
    // with p := u*p0 and p, q coprime
    let (p, q, w) = if !x1.is_zero() {
        let p0 = poly_gcd(x1, x2);
        let q = poly_gcd(x1, x3);
        let u = unit_of(
            &x1.divexact(&p0.mul(&q))
                .map_err(|_| Error::InternalNonUnitQuotient)?,
        )?;
        let p = p0.scale(&u);
        let w = unit_of(
            &x3.divexact(&q.mul(&q))
                .map_err(|_| Error::InternalNonUnitQuotient)?,
        )?;
        (p, q, w)
    } else if x2.is_zero() {
        // the certificate makes x3 a unit
        let w = unit_of(x3)?;
        (Poly::zero(field, nv), Poly::one(field, nv), w)
    } else {
        // x3 = 0 and x2 is a unit
        let w = unit_of(x2)?.inv().expect("unit").neg();
        (Poly::one(field, nv), Poly::zero(field, nv), w)
    };
    let w_inv = w.inv().expect("unit");
    if x2 != &p.mul(&p).scale(&w_inv.neg()) {
        return Err(Error::Internal("square-zero coordinates fail the forced factorization"));
    }
    let wq = q.scale(&w);
    let pm = MatGL2::new(p.clone(), cert.s.mul(&wq), wq.clone(), cert.r.mul(&p))?;
    if pm.conj(x) != MatSL2::e(field, nv) {
        return Err(Error::Internal("standard form postcondition failed"));
    }
    Ok(pm)
}

/// For X := P e P^-1, produces the Bezout certificate for (X2, X3) that the
/// entries of P make explicit. Returns X together with the certificate.
pub fn bezout_from_conjugation(p: &MatGL2) -> Result<(MatSL2, BezoutCert)> {
    let field = p.field();
    let nv = p.nvars();
    let x = p.tau(&MatSL2::e(field, nv));
    let e = p.entries();
    let (a, b, c, d) = (&e[0], &e[1], &e[2], &e[3]);
    let det = p.det();
    let det_inv = p.det_inv();
    let t = d.mul(det_inv);
    let u = b.neg().mul(det_inv);
    let one = Poly::one(field, nv);
    let two = |p: &Poly| p.add(p);
    // with t*a + u*c = 1: (ta)^2(1+2uc) + (uc)^2(1+2ta) = 1
    let r = det.mul(&t.mul(&t)).mul(&one.add(&two(&u.mul(c))));
    let s = det.neg().mul(&u.mul(&u)).mul(&one.add(&two(&t.mul(a))));
    let cert = BezoutCert::new(r, s, x.b().clone(), x.c().clone())
        .map_err(|_| Error::Internal("conjugation certificate identity failed"))?;
    Ok((x, cert))
}

/// Exact diagonalizer for the adjoint action: returns (lambda, P) with
/// conj(P, H') = diag(lambda, -lambda), for H' whose quadratic invariant is
/// a nonzero square constant.
pub fn mad_normalize(h: &MatSL2) -> Result<(FieldElem, MatGL2)> {
    if h.is_zero() {
        return Err(Error::ZeroElement);
    }
    let d = h.quad();
    let dc = match d.constant_value() {
        Some(c) if !c.is_zero() => c,
        _ => return Err(Error::NotAdDiagonalizable),
    };
    let lambda = dc.square_root().ok_or(Error::NotAdDiagonalizable)?;
    let scaled = h.scale_fe(&lambda.inv().expect("nonzero root"));
    let p = diagonalize_involution(&scaled)?;
    let field = h.field();
    let nv = h.nvars();
    let expect = MatSL2::h(field, nv).scale_fe(&lambda);
    if p.conj(h) != expect {
        return Err(Error::Internal("scaled diagonalization postcondition failed"));
    }
    Ok((lambda, p))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MembershipKind {
    Nilpotent,
    Semisimple,
}

/// Witness that Z lies in a conjugate of the split subalgebra: a triple
/// whose F-span contains Z, with the scaling for the semisimple case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipWitness {
    pub kind: MembershipKind,
    pub triple: Sl2Triple,
    pub lambda: Option<FieldElem>,
}

/// Decides membership of a nonzero Z by its quadratic invariant: zero means
/// the nilpotent case and needs comaximal off-diagonal coordinates; a
/// nonzero square constant means the semisimple case; a nonsquare constant
/// is undecidable without a field extension.
pub fn sl2f_membership(z: &MatSL2, cert: Option<&BezoutCert>) -> Result<MembershipWitness> {
    if z.is_zero() {
        return Err(Error::ZeroElement);
    }
    let d = z.quad();
    if d.is_zero() {
        let cert = match comaximality_certificate(z, cert) {
            Ok(c) => c,
            Err(Error::NotComaximal) => return Err(Error::NotMember),
            Err(e) => return Err(e),
        };
        let triple = jacobson_morozov(z, Some(&cert))?;
        return Ok(MembershipWitness {
            kind: MembershipKind::Nilpotent,
            triple,
            lambda: None,
        });
    }
    let dc = match d.constant_value() {
        Some(c) => c,
        None => return Err(Error::NotMember),
    };
    let lambda = dc.square_root().ok_or(Error::RequiresSquareRoot)?;
    let scaled = z.scale_fe(&lambda.inv().expect("nonzero root"));
    let triple = triple_from_involution(&scaled)?;
    Ok(MembershipWitness {
        kind: MembershipKind::Semisimple,
        triple,
        lambda: Some(lambda),
    })
}

/// Membership of Z in the span of sl2 over the ideal generated by `gens`,
/// decided through the gcd in at most one variable.
pub fn ideal_correspondence(gens: &[Poly], z: &MatSL2) -> Result<bool> {
    if z.nvars() > 1 {
        return Err(Error::MultivariateUnsupported);
    }
    let mut g = Poly::zero(z.field(), z.nvars());
    for gen in gens {
        gen.same_ring(z.a())?;
        g = poly_gcd(&g, gen);
    }
    Ok(g.divides(z.a()) && g.divides(z.b()) && g.divides(z.c()))
}
