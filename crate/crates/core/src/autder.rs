//! Automorphisms and derivations of sl2 over F[x1..xn]: the semidirect
//! splitting into an inner conjugation and a coefficient automorphism, the
//! recognizer that recovers both parts from generator images, and the
//! matching direct-sum splitting for derivations.

use alloc::vec;
use alloc::vec::Vec;

use crate::conjugacy::standardize_triple;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElem};
use crate::poly::Poly;
use crate::sl2::{bracket, verify_triple, MatGL2, MatSL2};

/// Ring automorphism of F[x1..xn] given by the images of the variables,
/// stored with a verified inverse so composition and inversion are explicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingAut {
    images: Vec<Poly>,
    inverse_images: Vec<Poly>,
}

fn check_substitution_pair(images: &[Poly], inverse_images: &[Poly], field: Field, nv: usize) -> Result<()> {
    if images.len() != nv || inverse_images.len() != nv {
        return Err(Error::NotInvertibleSubstitution);
    }
    for p in images.iter().chain(inverse_images.iter()) {
        if p.field() != field || p.nvars() != nv {
            return Err(Error::RingMismatch);
        }
    }
    for i in 0..nv {
        let xi = Poly::var(field, nv, i);
        if images[i].subst(inverse_images)? != xi || inverse_images[i].subst(images)? != xi {
            return Err(Error::NotInvertibleSubstitution);
        }
    }
    Ok(())
}

impl RingAut {
    pub fn new(field: Field, images: Vec<Poly>, inverse_images: Vec<Poly>) -> Result<RingAut> {
        let nv = images.len();
        check_substitution_pair(&images, &inverse_images, field, nv)?;
        Ok(RingAut {
            images,
            inverse_images,
        })
    }

    pub fn identity(field: Field, nvars: usize) -> RingAut {
        let vars: Vec<Poly> = (0..nvars).map(|i| Poly::var(field, nvars, i)).collect();
        RingAut {
            images: vars.clone(),
            inverse_images: vars,
        }
    }

    pub fn images(&self) -> &[Poly] {
        &self.images
    }

    pub fn inverse_images(&self) -> &[Poly] {
        &self.inverse_images
    }

    pub fn apply_poly(&self, p: &Poly) -> Result<Poly> {
        p.subst(&self.images)
    }

    pub fn apply_mat(&self, m: &MatSL2) -> Result<MatSL2> {
        MatSL2::new(
            self.apply_poly(m.a())?,
            self.apply_poly(m.b())?,
            self.apply_poly(m.c())?,
        )
    }

    pub fn apply_gl2(&self, g: &MatGL2) -> Result<MatGL2> {
        let e = g.entries();
        MatGL2::new(
            self.apply_poly(&e[0])?,
            self.apply_poly(&e[1])?,
            self.apply_poly(&e[2])?,
            self.apply_poly(&e[3])?,
        )
    }

    /// self after other: (self . other)(x_i) = self(other(x_i)).
    pub fn compose(&self, other: &RingAut) -> Result<RingAut> {
        let images: Result<Vec<Poly>> = other
            .images
            .iter()
            .map(|p| p.subst(&self.images))
            .collect();
        let inverse_images: Result<Vec<Poly>> = self
            .inverse_images
            .iter()
            .map(|p| p.subst(&other.inverse_images))
            .collect();
        Ok(RingAut {
            images: images?,
            inverse_images: inverse_images?,
        })
    }

    pub fn inverse(&self) -> RingAut {
        RingAut {
            images: self.inverse_images.clone(),
            inverse_images: self.images.clone(),
        }
    }
}

/// Automorphism of sl2(R) as a pair: conjugation by P composed with a
/// coefficient automorphism. apply(Z) = P rho(Z) P^-1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAut {
    pub p: MatGL2,
    pub rho: RingAut,
}

impl LieAut {
    pub fn new(p: MatGL2, rho: RingAut) -> LieAut {
        LieAut { p, rho }
    }

    pub fn identity(field: Field, nvars: usize) -> LieAut {
        LieAut {
            p: MatGL2::identity(field, nvars),
            rho: RingAut::identity(field, nvars),
        }
    }

    pub fn apply(&self, z: &MatSL2) -> Result<MatSL2> {
        Ok(self.p.tau(&self.rho.apply_mat(z)?))
    }

    /// self after other: P = P1 rho1(P2), rho = rho1 . rho2.
    pub fn compose(&self, other: &LieAut) -> Result<LieAut> {
        Ok(LieAut {
            p: self.p.mul(&self.rho.apply_gl2(&other.p)?),
            rho: self.rho.compose(&other.rho)?,
        })
    }

    pub fn inverse(&self) -> Result<LieAut> {
        let rho_inv = self.rho.inverse();
        Ok(LieAut {
            p: rho_inv.apply_gl2(&self.p.inverse())?,
            rho: rho_inv,
        })
    }
}

/// Inverts an affine substitution x_i -> b_i + sum_j m_ij x_j by Gaussian
/// elimination over F. None when some image is not affine or the linear
/// part is singular.
fn invert_affine_substitution(images: &[Poly]) -> Option<Vec<Poly>> {
    let nv = images.len();
    if nv == 0 {
        return Some(Vec::new());
    }
    let field = images[0].field();
    let mut linear = vec![vec![FieldElem::zero(field); nv]; nv];
    let mut shift = vec![FieldElem::zero(field); nv];
    for (i, p) in images.iter().enumerate() {
        if p.total_degree() > 1 {
            return None;
        }
        for (m, c) in p.terms() {
            match m.0.iter().position(|&e| e > 0) {
                None => shift[i] = c.clone(),
                Some(j) => linear[i][j] = c.clone(),
            }
        }
    }
    // augmented elimination [linear | identity]
    let mut aug = vec![vec![FieldElem::zero(field); 2 * nv]; nv];
    for i in 0..nv {
        for j in 0..nv {
            aug[i][j] = linear[i][j].clone();
        }
        aug[i][nv + i] = FieldElem::one(field);
    }
    for col in 0..nv {
        let pivot = (col..nv).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let inv = aug[col][col].inv().expect("nonzero pivot");
        for j in 0..2 * nv {
            aug[col][j] = aug[col][j].mul(&inv);
        }
        for r in 0..nv {
            if r == col || aug[r][col].is_zero() {
                continue;
            }
            let factor = aug[r][col].clone();
            for j in 0..2 * nv {
                aug[r][j] = aug[r][j].sub(&factor.mul(&aug[col][j]));
            }
        }
    }
    // x_i = sum_j inv_ij (y_j - b_j)
    let mut out = Vec::with_capacity(nv);
    for i in 0..nv {
        let mut p = Poly::zero(field, nv);
        for j in 0..nv {
            let coeff = &aug[i][nv + j];
            if coeff.is_zero() {
                continue;
            }
            p = p.add(&Poly::var(field, nv, j).scale(coeff));
            p = p.sub(&Poly::constant(field, nv, shift[j].mul(coeff)));
        }
        out.push(p);
    }
    Some(out)
}

/// Recovers the pair (P, rho) of an automorphism from the images of the
/// standard triple and of the diagonal generators x_i h. Inverse variable
/// images may be supplied; otherwise they are derived for affine images.
pub fn recognize_automorphism(
    x_im: &MatSL2,
    h_im: &MatSL2,
    y_im: &MatSL2,
    diag_images: &[MatSL2],
    inverse_images: Option<Vec<Poly>>,
) -> Result<LieAut> {
    let field = h_im.field();
    let nv = h_im.nvars();
    if diag_images.len() != nv {
        return Err(Error::RingMismatch);
    }
    let tr = verify_triple(x_im.clone(), h_im.clone(), y_im.clone())?;
    let p0 = standardize_triple(&tr)?;
    // the image of x_i h must return to a diagonal matrix, whose top entry
    // is the variable image
    let mut images = Vec::with_capacity(nv);
    for d in diag_images {
        let back = p0.conj(d);
        if !back.b().is_zero() || !back.c().is_zero() {
            return Err(Error::NotDiagonalAfterStandardization);
        }
        images.push(back.a().clone());
    }
    let inverse_images = match inverse_images {
        Some(v) => v,
        None => invert_affine_substitution(&images).ok_or(Error::NotInvertibleSubstitution)?,
    };
    let rho = RingAut::new(field, images, inverse_images)?;
    // conj(p0, -) standardizes the image triple, so the image triple is
    // tau(p0, -) of the standard one and p0 is the conjugation part
    Ok(LieAut { p: p0, rho })
}

/// Entrywise transport of coordinates along a ring isomorphism
/// F[x1..xn] -> F[y1..ym] given by variable images, verified mutually
/// inverse with the supplied reverse images.
pub fn transport_ring_iso(
    images: &[Poly],
    inverse_images: &[Poly],
    m: &MatSL2,
) -> Result<MatSL2> {
    let field = m.field();
    let nv_src = m.nvars();
    if images.len() != nv_src {
        return Err(Error::RingMismatch);
    }
    let nv_dst = if nv_src == 0 {
        inverse_images.len()
    } else {
        images[0].nvars()
    };
    if inverse_images.len() != nv_dst {
        return Err(Error::RingMismatch);
    }
    for p in images {
        if p.field() != field || p.nvars() != nv_dst {
            return Err(Error::RingMismatch);
        }
    }
    for p in inverse_images {
        if p.field() != field || p.nvars() != nv_src {
            return Err(Error::RingMismatch);
        }
    }
    for i in 0..nv_src {
        if images[i].subst(inverse_images)? != Poly::var(field, nv_src, i) {
            return Err(Error::NotInvertibleSubstitution);
        }
    }
    for j in 0..nv_dst {
        if inverse_images[j].subst(images)? != Poly::var(field, nv_dst, j) {
            return Err(Error::NotInvertibleSubstitution);
        }
    }
    MatSL2::new(
        m.a().subst(images)?,
        m.b().subst(images)?,
        m.c().subst(images)?,
    )
}

/// F-linear derivation of F[x1..xn] given by the images of the variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingDer {
    images: Vec<Poly>,
}

impl RingDer {
    pub fn new(field: Field, nvars: usize, images: Vec<Poly>) -> Result<RingDer> {
        if images.len() != nvars {
            return Err(Error::RingMismatch);
        }
        for p in &images {
            if p.field() != field || p.nvars() != nvars {
                return Err(Error::RingMismatch);
            }
        }
        Ok(RingDer { images })
    }

    pub fn zero(field: Field, nvars: usize) -> RingDer {
        RingDer {
            images: (0..nvars).map(|_| Poly::zero(field, nvars)).collect(),
        }
    }

    pub fn images(&self) -> &[Poly] {
        &self.images
    }

    /// D(p) = sum_i dp/dx_i * D(x_i).
    pub fn apply_poly(&self, p: &Poly) -> Poly {
        let mut out = Poly::zero(p.field(), p.nvars());
        for (i, im) in self.images.iter().enumerate() {
            out = out.add(&p.derivative(i).mul(im));
        }
        out
    }
}

/// Derivation of sl2(R): apply(M) = [Z, M] + delta(M) with delta acting on
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieDer {
    pub z: MatSL2,
    pub delta: RingDer,
}

impl LieDer {
    pub fn new(z: MatSL2, delta: RingDer) -> LieDer {
        LieDer { z, delta }
    }

    pub fn apply(&self, m: &MatSL2) -> MatSL2 {
        let inner = bracket(&self.z, m);
        let coeff = m.map_entries(|p| self.delta.apply_poly(p));
        inner.add(&coeff)
    }
}

/// Splits a derivation into [Z, -] plus a coefficient derivation from its
/// values on e, f and the diagonal generators x_i h. The bracket part is
/// forced by the values on e and f; the remainder on x_i h must be
/// diagonal and yields delta(x_i).
pub fn decompose_derivation(
    de: &MatSL2,
    df: &MatSL2,
    diag_images: &[MatSL2],
) -> Result<LieDer> {
    de.same_ring(df)?;
    let field = de.field();
    let nv = de.nvars();
    if diag_images.len() != nv {
        return Err(Error::RingMismatch);
    }
    // [Z, e] = (-z3, 2 z1, 0) and [Z, f] = (z2, 0, -2 z1)
    if !de.c().is_zero() {
        return Err(Error::NotADerivation("value on e must keep the lower-left entry zero"));
    }
    if !df.b().is_zero() {
        return Err(Error::NotADerivation("value on f must keep the upper-right entry zero"));
    }
    if !de.b().add(df.c()).is_zero() {
        return Err(Error::NotADerivation("values on e and f must have opposite diagonal parts"));
    }
    let half = FieldElem::from_i64(field, 2).inv().expect("2 is a unit");
    let z = MatSL2::new(de.b().scale(&half), df.a().clone(), de.a().neg())?;
    let mut images = Vec::with_capacity(nv);
    for (i, d) in diag_images.iter().enumerate() {
        d.same_ring(de)?;
        let xh = MatSL2::h(field, nv).scale(&Poly::var(field, nv, i));
        let rest = d.sub(&bracket(&z, &xh));
        if !rest.b().is_zero() || !rest.c().is_zero() {
            return Err(Error::InconsistentDiagonalData);
        }
        images.push(rest.a().clone());
    }
    let delta = RingDer::new(field, nv, images)?;
    Ok(LieDer { z, delta })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sl2::generator_sample;

    fn t() -> Poly {
        Poly::var(Field::Q, 1, 0)
    }

    fn c(n: i64) -> Poly {
        Poly::int(Field::Q, 1, n)
    }

    fn fe(n: i64) -> FieldElem {
        FieldElem::from_i64(Field::Q, n)
    }

    fn sl2(a: Poly, b: Poly, cc: Poly) -> MatSL2 {
        MatSL2::new(a, b, cc).unwrap()
    }

    /// t -> 2t + 1 with inverse t -> (t - 1)/2
    fn scale_shift() -> RingAut {
        let img = t().scale(&fe(2)).add(&c(1));
        let inv = t().sub(&c(1)).scale(&fe(2).inv().unwrap());
        RingAut::new(Field::Q, vec![img], vec![inv]).unwrap()
    }

    #[test]
    fn ring_aut_round_trips() {
        let rho = scale_shift();
        let p = t().pow(2).add(&c(3));
        let q = rho.apply_poly(&p).unwrap();
        assert_eq!(q, t().pow(2).scale(&fe(4)).add(&t().scale(&fe(4))).add(&c(4)));
        assert_eq!(rho.inverse().apply_poly(&q).unwrap(), p);
        let both = rho.compose(&rho.inverse()).unwrap();
        assert_eq!(both, RingAut::identity(Field::Q, 1));
    }

    #[test]
    fn ring_aut_rejects_non_inverse_pair() {
        assert_eq!(
            RingAut::new(Field::Q, vec![t().scale(&fe(2))], vec![t()]),
            Err(Error::NotInvertibleSubstitution)
        );
        // t -> t^2 has no polynomial inverse
        assert_eq!(
            RingAut::new(Field::Q, vec![t().pow(2)], vec![t()]),
            Err(Error::NotInvertibleSubstitution)
        );
    }

    #[test]
    fn ring_aut_composition_order() {
        // sigma: t -> t + 1, tau: t -> 2t; (sigma . tau)(t) = sigma(2t) = 2t + 2
        let sigma = RingAut::new(Field::Q, vec![t().add(&c(1))], vec![t().sub(&c(1))]).unwrap();
        let tau = RingAut::new(
            Field::Q,
            vec![t().scale(&fe(2))],
            vec![t().scale(&fe(2).inv().unwrap())],
        )
        .unwrap();
        let st = sigma.compose(&tau).unwrap();
        assert_eq!(st.images()[0], t().scale(&fe(2)).add(&c(2)));
        let p = t().pow(3);
        assert_eq!(
            st.apply_poly(&p).unwrap(),
            sigma.apply_poly(&tau.apply_poly(&p).unwrap()).unwrap()
        );
        assert_eq!(st.inverse().apply_poly(&st.apply_poly(&p).unwrap()).unwrap(), p);
    }

    #[test]
    fn lie_aut_applies_and_composes() {
        let s1 = LieAut::new(MatGL2::e21(&t()), scale_shift());
        let s2 = LieAut::new(MatGL2::e12(&c(3)), RingAut::identity(Field::Q, 1));
        let s12 = s1.compose(&s2).unwrap();
        for z in generator_sample(Field::Q, 1) {
            let step = s1.apply(&s2.apply(&z).unwrap()).unwrap();
            assert_eq!(s12.apply(&z).unwrap(), step);
        }
        let inv = s12.inverse().unwrap();
        for z in generator_sample(Field::Q, 1) {
            assert_eq!(inv.apply(&s12.apply(&z).unwrap()).unwrap(), z);
        }
    }

    #[test]
    fn lie_aut_preserves_brackets() {
        let s = LieAut::new(MatGL2::e21(&t().pow(2)), scale_shift());
        let a = sl2(t(), c(2), t().pow(2));
        let b = sl2(c(0), t(), c(5));
        let lhs = s.apply(&bracket(&a, &b)).unwrap();
        let rhs = bracket(&s.apply(&a).unwrap(), &s.apply(&b).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn recognizer_recovers_both_parts() {
        let sigma = LieAut::new(MatGL2::e21(&t()), scale_shift());
        let field = Field::Q;
        let x_im = sigma.apply(&MatSL2::e(field, 1)).unwrap();
        let h_im = sigma.apply(&MatSL2::h(field, 1)).unwrap();
        let y_im = sigma.apply(&MatSL2::f(field, 1)).unwrap();
        let th = MatSL2::h(field, 1).scale(&t());
        let diag = [sigma.apply(&th).unwrap()];
        let rec = recognize_automorphism(&x_im, &h_im, &y_im, &diag, None).unwrap();
        assert!(rec.p.pgl_eq(&sigma.p));
        assert_eq!(rec.rho, sigma.rho);
        for z in generator_sample(field, 1) {
            assert_eq!(rec.apply(&z).unwrap(), sigma.apply(&z).unwrap());
        }
    }

    #[test]
    fn recognizer_inverts_affine_multivariate_images() {
        let field = Field::Q;
        let x = Poly::var(field, 2, 0);
        let y = Poly::var(field, 2, 1);
        // (x, y) -> (y + 1, x - y)
        let rho = RingAut::new(
            field,
            vec![y.add(&Poly::one(field, 2)), x.sub(&y)],
            vec![
                x.add(&y).sub(&Poly::one(field, 2)),
                x.sub(&Poly::one(field, 2)),
            ],
        )
        .unwrap();
        let p = MatGL2::e12(&x.mul(&y));
        let sigma = LieAut::new(p, rho);
        let x_im = sigma.apply(&MatSL2::e(field, 2)).unwrap();
        let h_im = sigma.apply(&MatSL2::h(field, 2)).unwrap();
        let y_im = sigma.apply(&MatSL2::f(field, 2)).unwrap();
        let diag = [
            sigma.apply(&MatSL2::h(field, 2).scale(&x)).unwrap(),
            sigma.apply(&MatSL2::h(field, 2).scale(&y)).unwrap(),
        ];
        let rec = recognize_automorphism(&x_im, &h_im, &y_im, &diag, None).unwrap();
        assert_eq!(rec.rho, sigma.rho);
        assert!(rec.p.pgl_eq(&sigma.p));
    }

    #[test]
    fn recognizer_rejects_inconsistent_diagonal_images() {
        let field = Field::Q;
        let e = MatSL2::e(field, 1);
        let h = MatSL2::h(field, 1);
        let f = MatSL2::f(field, 1);
        // claimed image of t h is not diagonal in the standard frame
        let bad = [sl2(t(), c(1), c(0))];
        assert_eq!(
            recognize_automorphism(&e, &h, &f, &bad, None),
            Err(Error::NotDiagonalAfterStandardization)
        );
    }

    #[test]
    fn recognizer_requires_invertible_images() {
        let field = Field::Q;
        let e = MatSL2::e(field, 1);
        let h = MatSL2::h(field, 1);
        let f = MatSL2::f(field, 1);
        // t -> t^2 cannot come from an automorphism
        let diag = [h.scale(&t().pow(2))];
        assert_eq!(
            recognize_automorphism(&e, &h, &f, &diag, None),
            Err(Error::NotInvertibleSubstitution)
        );
    }

    #[test]
    fn transport_moves_coordinates() {
        let field = Field::Q;
        // one-variable relabeling t -> u + 1
        let images = [Poly::var(field, 1, 0).add(&Poly::one(field, 1))];
        let inverse = [Poly::var(field, 1, 0).sub(&Poly::one(field, 1))];
        let m = sl2(t(), t().pow(2), c(1));
        let moved = transport_ring_iso(&images, &inverse, &m).unwrap();
        let u1 = Poly::var(field, 1, 0).add(&Poly::one(field, 1));
        assert_eq!(moved, sl2(u1.clone(), u1.pow(2), Poly::one(field, 1)));
        // and back
        let back = transport_ring_iso(&inverse, &images, &moved).unwrap();
        assert_eq!(back, m);
        // non-inverse pair rejected
        assert_eq!(
            transport_ring_iso(&images, &images, &m),
            Err(Error::NotInvertibleSubstitution)
        );
    }

    #[test]
    fn ring_der_is_a_derivation() {
        let d = RingDer::new(Field::Q, 1, vec![t().pow(3)]).unwrap();
        let a = t().pow(2);
        let b = t().add(&c(5));
        let lhs = d.apply_poly(&a.mul(&b));
        let rhs = d.apply_poly(&a).mul(&b).add(&a.mul(&d.apply_poly(&b)));
        assert_eq!(lhs, rhs);
        assert!(d.apply_poly(&c(7)).is_zero());
    }

    #[test]
    fn lie_der_satisfies_leibniz() {
        let d = LieDer::new(
            sl2(t(), c(1), t().pow(2)),
            RingDer::new(Field::Q, 1, vec![t().add(&c(1))]).unwrap(),
        );
        let a = sl2(c(0), t(), c(3));
        let b = sl2(t().pow(2), c(0), c(1));
        let lhs = d.apply(&bracket(&a, &b));
        let rhs = bracket(&d.apply(&a), &b).add(&bracket(&a, &d.apply(&b)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn decomposition_recovers_both_parts() {
        let z = sl2(t(), t().pow(2).add(&c(1)), c(-3));
        let delta = RingDer::new(Field::Q, 1, vec![t().pow(2)]).unwrap();
        let d = LieDer::new(z.clone(), delta.clone());
        let field = Field::Q;
        let de = d.apply(&MatSL2::e(field, 1));
        let df = d.apply(&MatSL2::f(field, 1));
        let diag = [d.apply(&MatSL2::h(field, 1).scale(&t()))];
        let rec = decompose_derivation(&de, &df, &diag).unwrap();
        assert_eq!(rec.z, z);
        assert_eq!(rec.delta, delta);
        for m in generator_sample(field, 1) {
            assert_eq!(rec.apply(&m), d.apply(&m));
        }
    }

    #[test]
    fn decomposition_rejects_malformed_values() {
        let field = Field::Q;
        let zero = MatSL2::zero(field, 1);
        let bad_e = sl2(c(0), c(0), c(1));
        match decompose_derivation(&bad_e, &zero, &[zero.clone()]) {
            Err(Error::NotADerivation(_)) => {}
            other => panic!("expected NotADerivation, got {:?}", other),
        }
        let bad_f = sl2(c(0), c(1), c(0));
        match decompose_derivation(&zero, &bad_f, &[zero.clone()]) {
            Err(Error::NotADerivation(_)) => {}
            other => panic!("expected NotADerivation, got {:?}", other),
        }
        // mismatched diagonal parts
        let de = sl2(c(0), t(), c(0));
        let df = sl2(c(0), c(0), t().add(&c(1)));
        match decompose_derivation(&de, &df, &[zero.clone()]) {
            Err(Error::NotADerivation(_)) => {}
            other => panic!("expected NotADerivation, got {:?}", other),
        }
        // inconsistent value on t h
        let d = LieDer::new(
            sl2(c(0), c(0), c(0)),
            RingDer::new(field, 1, vec![c(0)]).unwrap(),
        );
        let de = d.apply(&MatSL2::e(field, 1));
        let df = d.apply(&MatSL2::f(field, 1));
        let bad_diag = [sl2(c(0), c(1), c(0))];
        assert_eq!(
            decompose_derivation(&de, &df, &bad_diag),
            Err(Error::InconsistentDiagonalData)
        );
    }
}
