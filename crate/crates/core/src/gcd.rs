//! Greatest common divisors over F[x1..xn] and Bezout certificates.
//!
//! Univariate inputs use classical remainder sequences with monic
//! normalization. Multivariate inputs use a primitive remainder sequence in
//! the first active variable, with contents handled recursively. Results are
//! always monic under the graded order, so gcds are canonical, not merely
//! unique up to units.

use crate::error::{Error, Result};
use crate::poly::Poly;

/// Monic gcd. gcd(0, 0) = 0 and gcd(a, 0) = monic(a).
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    a.same_ring(b).expect("ring mismatch");
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one(a.field(), a.nvars());
    }
    let used: alloc::vec::Vec<usize> = (0..a.nvars())
        .filter(|&k| a.uses_var(k) || b.uses_var(k))
        .collect();
    if used.len() == 1 {
        return gcd_single_var(a, b, used[0]);
    }
    gcd_prs(a, b, used[0])
}

/// Euclid in one variable; every coefficient is a field constant.
fn gcd_single_var(a: &Poly, b: &Poly, k: usize) -> Poly {
    let mut f = a.monic();
    let mut g = b.monic();
    if f.degree_in(k) < g.degree_in(k) {
        core::mem::swap(&mut f, &mut g);
    }
    while !g.is_zero() {
        let r = rem_single_var(&f, &g, k);
        f = g;
        g = r.monic();
    }
    f
}

fn rem_single_var(f: &Poly, g: &Poly, k: usize) -> Poly {
    let dg = g.degree_in(k);
    let gl = g.leading_coeff().expect("nonzero divisor");
    let mut r = f.clone();
    while !r.is_zero() {
        let dr = r.degree_in(k);
        if dr < dg {
            break;
        }
        let fac = r
            .leading_coeff()
            .expect("nonzero remainder")
            .div(&gl)
            .expect("nonzero leading coefficient");
        r = r.sub(&g.mul_var_pow(k, dr - dg).scale(&fac));
    }
    r
}

/// Gcd of the coefficients of p with respect to variable k.
fn content_in_var(p: &Poly, k: usize) -> Poly {
    let mut c = Poly::zero(p.field(), p.nvars());
    for coeff in p.coeffs_in_var(k) {
        if coeff.is_zero() {
            continue;
        }
        c = poly_gcd(&c, &coeff);
        if c.is_one() {
            break;
        }
    }
    c
}

/// Primitive remainder sequence in variable k; both inputs use k and at
/// least one other variable.
fn gcd_prs(a: &Poly, b: &Poly, k: usize) -> Poly {
    let da = a.degree_in(k);
    let db = b.degree_in(k);
    // a factor common with a k-free polynomial is itself k-free
    if db == 0 {
        return poly_gcd(&content_in_var(a, k), b);
    }
    if da == 0 {
        return poly_gcd(a, &content_in_var(b, k));
    }
    let ca = content_in_var(a, k);
    let pa = a.divexact(&ca).expect("content divides");
    let cb = content_in_var(b, k);
    let pb = b.divexact(&cb).expect("content divides");
    let cc = poly_gcd(&ca, &cb);
    let (mut f, mut g) = if da >= db { (pa, pb) } else { (pb, pa) };
    let prim = loop {
        if g.degree_in(k) == 0 {
            // a primitive polynomial with no k left is a unit here
            break Poly::one(a.field(), a.nvars());
        }
        let r = pseudo_rem(&f, &g, k);
        if r.is_zero() {
            break g;
        }
        let rc = content_in_var(&r, k);
        let rp = r.divexact(&rc).expect("content divides").monic();
        f = g;
        g = rp;
    };
    cc.mul(&prim).monic()
}

/// Remainder of f by g in variable k after clearing leading coefficients,
/// correct up to k-free factors, which the caller strips as content.
fn pseudo_rem(f: &Poly, g: &Poly, k: usize) -> Poly {
    let dg = g.degree_in(k);
    let gl = g.leading_coeff_in_var(k);
    let mut r = f.clone();
    loop {
        if r.is_zero() {
            break;
        }
        let dr = r.degree_in(k);
        if dr < dg {
            break;
        }
        let rl = r.leading_coeff_in_var(k);
        r = r.mul(&gl).sub(&g.mul_var_pow(k, dr - dg).mul(&rl));
    }
    r
}

/// Extended gcd in at most one variable: returns (g, r, s) with
/// r*a + s*b = g and g monic.
pub fn poly_ext_gcd(a: &Poly, b: &Poly) -> Result<(Poly, Poly, Poly)> {
    a.same_ring(b)?;
    if a.nvars() > 1 {
        return Err(Error::MultivariateUnsupported);
    }
    let field = a.field();
    let nv = a.nvars();
    let (mut r0, mut s0, mut t0) = (a.clone(), Poly::one(field, nv), Poly::zero(field, nv));
    let (mut r1, mut s1, mut t1) = (b.clone(), Poly::zero(field, nv), Poly::one(field, nv));
    while !r1.is_zero() {
        let (q, r) = divmod_single(&r0, &r1);
        let s2 = s0.sub(&q.mul(&s1));
        let t2 = t0.sub(&q.mul(&t1));
        (r0, s0, t0) = (r1, s1, t1);
        (r1, s1, t1) = (r, s2, t2);
    }
    match r0.leading_coeff() {
        None => Ok((r0, s0, t0)),
        Some(lc) => {
            let ilc = lc.inv().expect("nonzero leading coefficient");
            Ok((r0.scale(&ilc), s0.scale(&ilc), t0.scale(&ilc)))
        }
    }
}

/// Division with remainder in at most one variable; divisor nonzero.
fn divmod_single(a: &Poly, b: &Poly) -> (Poly, Poly) {
    assert!(!b.is_zero(), "division by zero");
    let field = a.field();
    let nv = a.nvars();
    if nv == 0 {
        let q = a.divexact(b).expect("constants divide");
        return (q, Poly::zero(field, nv));
    }
    let db = b.degree_in(0);
    let bl = b.leading_coeff().expect("nonzero divisor");
    let mut r = a.clone();
    let mut q = Poly::zero(field, nv);
    while !r.is_zero() {
        let dr = r.degree_in(0);
        if dr < db {
            break;
        }
        let fac = r
            .leading_coeff()
            .expect("nonzero remainder")
            .div(&bl)
            .expect("nonzero leading coefficient");
        let shift = dr - db;
        q = q.add(&Poly::constant(field, nv, fac.clone()).mul_var_pow(0, shift));
        r = r.sub(&b.mul_var_pow(0, shift).scale(&fac));
    }
    (q, r)
}

/// Witness that two polynomials are comaximal: r*g2 + s*g3 = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BezoutCert {
    pub r: Poly,
    pub s: Poly,
    pub g2: Poly,
    pub g3: Poly,
}

impl BezoutCert {
    pub fn new(r: Poly, s: Poly, g2: Poly, g3: Poly) -> Result<BezoutCert> {
        r.same_ring(&s)?;
        r.same_ring(&g2)?;
        r.same_ring(&g3)?;
        let cert = BezoutCert { r, s, g2, g3 };
        if !cert.verify() {
            return Err(Error::BadCertificate);
        }
        Ok(cert)
    }

    pub fn verify(&self) -> bool {
        self.r.mul(&self.g2).add(&self.s.mul(&self.g3)).is_one()
    }

    pub fn matches_targets(&self, g2: &Poly, g3: &Poly) -> bool {
        &self.g2 == g2 && &self.g3 == g3
    }
}

/// Derives a certificate for comaximality in at most one variable.
pub fn derive_bezout(g2: &Poly, g3: &Poly) -> Result<BezoutCert> {
    g2.same_ring(g3)?;
    if g2.nvars() > 1 {
        return Err(Error::MultivariateUnsupported);
    }
    let (g, r, s) = poly_ext_gcd(g2, g3)?;
    if !g.is_one() {
        return Err(Error::NotComaximal);
    }
    BezoutCert::new(r, s, g2.clone(), g3.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Field, FieldElem};

    fn t() -> Poly {
        Poly::var(Field::Q, 1, 0)
    }

    fn c(n: i64) -> Poly {
        Poly::int(Field::Q, 1, n)
    }

    #[test]
    fn gcd_zero_conventions() {
        let z = Poly::zero(Field::Q, 1);
        assert_eq!(poly_gcd(&z, &z), z);
        let p = t().pow(2).scale(&FieldElem::from_i64(Field::Q, 3));
        assert_eq!(poly_gcd(&z, &p), t().pow(2));
        assert_eq!(poly_gcd(&p, &z), t().pow(2));
    }

    #[test]
    fn gcd_univariate_cases() {
        // gcd(2t, 2t^2 + 2t) = t
        let a = t().scale(&FieldElem::from_i64(Field::Q, 2));
        let b = t().pow(2).add(&t()).scale(&FieldElem::from_i64(Field::Q, 2));
        assert_eq!(poly_gcd(&a, &b), t());
        // a nonzero constant forces 1
        assert_eq!(poly_gcd(&a, &c(-2)), c(1));
        // the four factor gcds of the worked involution
        let h1m1 = t().scale(&FieldElem::from_i64(Field::Q, 2)); // 2t
        let h1p1 = h1m1.add(&c(2)); // 2t + 2
        let h2 = c(-2);
        let h3 = b.clone(); // 2t^2 + 2t
        assert_eq!(poly_gcd(&h1m1, &h2), c(1));
        assert_eq!(poly_gcd(&h1p1, &h2), c(1));
        assert_eq!(poly_gcd(&h1m1, &h3), t());
        assert_eq!(poly_gcd(&h1p1, &h3), t().add(&c(1)));
    }

    #[test]
    fn gcd_multivariate_cases() {
        let f = Field::Q;
        let x = Poly::var(f, 2, 0);
        let y = Poly::var(f, 2, 1);
        let s = x.add(&y);
        let d = x.sub(&y);
        assert_eq!(poly_gcd(&s.pow(2), &s.mul(&d)), s);
        assert_eq!(poly_gcd(&x, &y), Poly::one(f, 2));
        // common content in the second variable only
        let a = x.mul(&y.pow(2));
        let b = y.pow(2).mul(&x.add(&Poly::one(f, 2)));
        assert_eq!(poly_gcd(&a, &b), y.pow(2));
        // gcd((x+y)^3, (x+y)^2 * (x - y)) in mixed degrees
        assert_eq!(poly_gcd(&s.pow(3), &s.pow(2).mul(&d)), s.pow(2));
    }

    #[test]
    fn gcd_is_monic_mod_p() {
        let f5 = Field::prime(5).unwrap();
        let u = Poly::var(f5, 1, 0);
        let a = u.pow(2).sub(&Poly::one(f5, 1)).scale(&FieldElem::from_i64(f5, 3));
        let b = u.add(&Poly::one(f5, 1)).scale(&FieldElem::from_i64(f5, 2));
        assert_eq!(poly_gcd(&a, &b), u.add(&Poly::one(f5, 1)));
    }

    #[test]
    fn ext_gcd_frozen_values() {
        // (t^2, 1) -> (1, 0, 1)
        let (g, r, s) = poly_ext_gcd(&t().pow(2), &c(1)).unwrap();
        assert_eq!((g, r, s), (c(1), c(0), c(1)));
        // (t, t+1) -> (1, -1, 1)
        let (g, r, s) = poly_ext_gcd(&t(), &t().add(&c(1))).unwrap();
        assert_eq!((g, r, s), (c(1), c(-1), c(1)));
    }

    #[test]
    fn ext_gcd_identity_holds() {
        let a = t().pow(3).add(&t().scale(&FieldElem::from_i64(Field::Q, 4))).add(&c(1));
        let b = t().pow(2).sub(&c(3));
        let (g, r, s) = poly_ext_gcd(&a, &b).unwrap();
        assert_eq!(r.mul(&a).add(&s.mul(&b)), g);
        assert!(g.is_one());
    }

    #[test]
    fn ext_gcd_rejects_multivariate() {
        let x = Poly::var(Field::Q, 2, 0);
        assert_eq!(
            poly_ext_gcd(&x.pow(2), &x.pow(3)),
            Err(Error::MultivariateUnsupported)
        );
    }

    #[test]
    fn bezout_derivation() {
        let cert = derive_bezout(&t(), &t().add(&c(1))).unwrap();
        assert!(cert.verify());
        assert_eq!(cert.r, c(-1));
        assert_eq!(cert.s, c(1));
        assert_eq!(derive_bezout(&t(), &Poly::zero(Field::Q, 1)), Err(Error::NotComaximal));
        assert_eq!(derive_bezout(&t(), &t().pow(2)), Err(Error::NotComaximal));
        let x = Poly::var(Field::Q, 2, 0);
        let y = Poly::var(Field::Q, 2, 1);
        assert_eq!(derive_bezout(&x, &y), Err(Error::MultivariateUnsupported));
    }

    #[test]
    fn bad_certificate_rejected() {
        assert_eq!(
            BezoutCert::new(c(1), c(1), t(), t().add(&c(1))),
            Err(Error::BadCertificate)
        );
        let ok = BezoutCert::new(c(-1), c(1), t(), t().add(&c(1))).unwrap();
        assert!(ok.matches_targets(&t(), &t().add(&c(1))));
        assert!(!ok.matches_targets(&t(), &t()));
    }
}
