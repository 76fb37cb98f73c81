//! Sparse multivariate polynomials with exact field coefficients.
//!
//! Terms are kept in a map from exponent vector to nonzero coefficient,
//! ordered by total degree and then lexicographically with the first
//! variable strongest. The zero polynomial is the empty map. Printing walks
//! terms in descending order, so equal polynomials print identically.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::{split_sign, Field, FieldElem};

/// Exponent vector of one term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    nvars: usize,
    terms: BTreeMap<Monomial, FieldElem>,
}

impl Poly {
    pub fn zero(field: Field, nvars: usize) -> Poly {
        Poly {
            field,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: Field, nvars: usize) -> Poly {
        Poly::constant(field, nvars, FieldElem::one(field))
    }

    pub fn constant(field: Field, nvars: usize, c: FieldElem) -> Poly {
        assert_eq!(c.field(), field, "field mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(vec![0; nvars]), c);
        }
        Poly {
            field,
            nvars,
            terms,
        }
    }

    pub fn int(field: Field, nvars: usize, n: i64) -> Poly {
        Poly::constant(field, nvars, FieldElem::from_i64(field, n))
    }

    /// The variable `x_idx`.
    pub fn var(field: Field, nvars: usize, idx: usize) -> Poly {
        assert!(idx < nvars, "variable index out of range");
        let mut exps = vec![0; nvars];
        exps[idx] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(exps), FieldElem::one(field));
        Poly {
            field,
            nvars,
            terms,
        }
    }

    pub fn from_terms(
        field: Field,
        nvars: usize,
        it: impl IntoIterator<Item = (Monomial, FieldElem)>,
    ) -> Poly {
        let mut p = Poly::zero(field, nvars);
        for (m, c) in it {
            assert_eq!(m.0.len(), nvars, "exponent vector length mismatch");
            assert_eq!(c.field(), field, "field mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.is_constant() && c.is_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_constant)
    }

    /// The value of a constant polynomial; None when any variable occurs.
    pub fn constant_value(&self) -> Option<FieldElem> {
        if !self.is_constant() {
            return None;
        }
        Some(
            self.terms
                .values()
                .next()
                .cloned()
                .unwrap_or_else(|| FieldElem::zero(self.field)),
        )
    }

    /// For a nonzero constant, its inverse as a polynomial.
    pub fn unit_inverse(&self) -> Option<Poly> {
        let c = self.constant_value()?;
        if c.is_zero() {
            return None;
        }
        Some(Poly::constant(
            self.field,
            self.nvars,
            c.inv().expect("nonzero constant"),
        ))
    }

    pub fn is_unit(&self) -> bool {
        self.unit_inverse().is_some()
    }

    pub fn same_ring(&self, other: &Poly) -> Result<()> {
        if self.field != other.field || self.nvars != other.nvars {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElem)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, k: usize) -> u32 {
        self.terms.keys().map(|m| m.0[k]).max().unwrap_or(0)
    }

    pub fn uses_var(&self, k: usize) -> bool {
        self.terms.keys().any(|m| m.0[k] > 0)
    }

    /// Leading term under the graded order.
    pub fn leading(&self) -> Option<(&Monomial, &FieldElem)> {
        self.terms.last_key_value()
    }

    pub fn leading_coeff(&self) -> Option<FieldElem> {
        self.leading().map(|(_, c)| c.clone())
    }

    fn add_term(&mut self, m: Monomial, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.same_ring(other).expect("ring mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            field: self.field,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.same_ring(other).expect("ring mismatch");
        let mut out = Poly::zero(self.field, self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }

    /// Checked variants for callers combining data from separate sources.
    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.same_ring(other)?;
        Ok(self.add(other))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.same_ring(other)?;
        Ok(self.sub(other))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.same_ring(other)?;
        Ok(self.mul(other))
    }

    pub fn scale(&self, c: &FieldElem) -> Poly {
        assert_eq!(c.field(), self.field, "field mismatch");
        if c.is_zero() {
            return Poly::zero(self.field, self.nvars);
        }
        Poly {
            field: self.field,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.mul(c)))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.field, self.nvars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    fn mul_term(&self, m: &Monomial, c: &FieldElem) -> Poly {
        Poly {
            field: self.field,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), tc.mul(c)))
                .collect(),
        }
    }

    /// Exact division; errors when the divisor does not divide exactly.
    pub fn divexact(&self, d: &Poly) -> Result<Poly> {
        self.same_ring(d)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (dm, dc) = d.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.field, self.nvars);
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.div(&dm).ok_or(Error::NotDivisible)?;
            let qc = rc.div(&dc).expect("leading coefficient is nonzero");
            rem = rem.sub(&d.mul_term(&qm, &qc));
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.divexact(self).is_ok()
    }

    /// Scales so the graded-order leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("leading coefficient is nonzero")),
        }
    }

    pub fn derivative(&self, k: usize) -> Poly {
        let mut out = Poly::zero(self.field, self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[k];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[k] = e - 1;
            out.add_term(Monomial(exps), c.mul(&FieldElem::from_i64(self.field, e as i64)));
        }
        out
    }

    /// Substitutes `images[i]` for variable i. The images fix the target
    /// ring, which may have a different variable count.
    pub fn subst(&self, images: &[Poly]) -> Result<Poly> {
        if images.len() != self.nvars {
            return Err(Error::RingMismatch);
        }
        let (tf, tn) = match images.first() {
            Some(im) => (im.field(), im.nvars()),
            // no variables: the constant embeds into the same ring
            None => (self.field, self.nvars),
        };
        if tf != self.field {
            return Err(Error::RingMismatch);
        }
        for im in images {
            if im.field() != tf || im.nvars() != tn {
                return Err(Error::RingMismatch);
            }
        }
        // cache powers of each image up to its maximum exponent
        let mut pows: Vec<Vec<Poly>> = images
            .iter()
            .map(|im| vec![Poly::one(tf, tn), im.clone()])
            .collect();
        for (i, cache) in pows.iter_mut().enumerate() {
            let need = self.degree_in(i) as usize;
            while cache.len() <= need {
                let next = cache.last().unwrap().mul(&images[i]);
                cache.push(next);
            }
        }
        let mut out = Poly::zero(tf, tn);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(tf, tn, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&pows[i][e as usize]);
                }
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    /// Coefficient of the highest power of variable k, with k zeroed out.
    pub fn leading_coeff_in_var(&self, k: usize) -> Poly {
        let d = self.degree_in(k);
        let mut out = Poly::zero(self.field, self.nvars);
        for (m, c) in &self.terms {
            if m.0[k] == d {
                let mut exps = m.0.clone();
                exps[k] = 0;
                out.add_term(Monomial(exps), c.clone());
            }
        }
        out
    }

    /// Coefficients with respect to variable k, index = exponent of k.
    /// Returned polynomials have exponent 0 in k.
    pub fn coeffs_in_var(&self, k: usize) -> Vec<Poly> {
        let deg = self.degree_in(k) as usize;
        let mut out = vec![Poly::zero(self.field, self.nvars); deg + 1];
        for (m, c) in &self.terms {
            let e = m.0[k] as usize;
            let mut exps = m.0.clone();
            exps[k] = 0;
            out[e].add_term(Monomial(exps), c.clone());
        }
        out
    }

    /// Rebuilds from coefficients with respect to variable k.
    pub fn from_coeffs_in_var(field: Field, nvars: usize, k: usize, coeffs: &[Poly]) -> Poly {
        let mut out = Poly::zero(field, nvars);
        for (e, c) in coeffs.iter().enumerate() {
            out = out.add(&c.mul_var_pow(k, e as u32));
        }
        out
    }

    /// Multiplies by `x_k^e`.
    pub fn mul_var_pow(&self, k: usize, e: u32) -> Poly {
        if e == 0 {
            return self.clone();
        }
        Poly {
            field: self.field,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut exps = m.0.clone();
                    exps[k] += e;
                    (Monomial(exps), c.clone())
                })
                .collect(),
        }
    }

    /// Canonical text form using the given variable names.
    pub fn render(&self, names: &[&str]) -> String {
        assert_eq!(names.len(), self.nvars, "one name per variable");
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let (negative, mag) = split_sign(c);
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            if m.is_constant() || mag != "1" {
                factors.push(mag);
            }
            for (v, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(String::from(names[v]));
                } else if e > 1 {
                    let mut s = String::from(names[v]);
                    s.push('^');
                    s.push_str(&alloc::format!("{e}"));
                    factors.push(s);
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| alloc::format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        write!(f, "{}", self.render(&refs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp() -> (Field, usize) {
        (Field::Q, 1)
    }

    fn t() -> Poly {
        Poly::var(Field::Q, 1, 0)
    }

    fn c(n: i64) -> Poly {
        Poly::int(Field::Q, 1, n)
    }

    #[test]
    fn product_of_conjugate_binomials() {
        let (f, n) = qp();
        let x = Poly::var(f, n, 0);
        let lhs = x.add(&c(1)).mul(&x.sub(&c(1)));
        let rhs = x.mul(&x).sub(&c(1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn add_zero_is_identity() {
        let p = t().pow(3).add(&c(-7));
        assert_eq!(p.add(&Poly::zero(Field::Q, 1)), p);
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = Poly::var(Field::Q, 1, 0);
        let b = Poly::var(Field::Q, 2, 0);
        assert_eq!(a.try_add(&b), Err(Error::RingMismatch));
        let f5 = Field::prime(5).unwrap();
        let c5 = Poly::int(f5, 1, 1);
        assert_eq!(a.try_mul(&c5), Err(Error::RingMismatch));
    }

    #[test]
    fn divexact_cases() {
        // (2t^2 + 2t) / (t^2 + t) = 2
        let num = t().pow(2).add(&t()).scale(&FieldElem::from_i64(Field::Q, 2));
        let den = t().pow(2).add(&t());
        assert_eq!(num.divexact(&den).unwrap(), c(2));
        // a / 1 = a
        assert_eq!(num.divexact(&c(1)).unwrap(), num);
        // (t + 1) / t fails
        assert_eq!(t().add(&c(1)).divexact(&t()), Err(Error::NotDivisible));
        // division by zero
        assert_eq!(
            t().divexact(&Poly::zero(Field::Q, 1)),
            Err(Error::DivisionByZero)
        );
        // 0 / t = 0
        assert_eq!(
            Poly::zero(Field::Q, 1).divexact(&t()).unwrap(),
            Poly::zero(Field::Q, 1)
        );
    }

    #[test]
    fn divexact_multivariate() {
        let f = Field::Q;
        let x = Poly::var(f, 2, 0);
        let y = Poly::var(f, 2, 1);
        let a = x.add(&y);
        let b = x.sub(&y);
        let prod = a.mul(&b);
        assert_eq!(prod.divexact(&a).unwrap(), b);
        assert_eq!(prod.divexact(&b).unwrap(), a);
        assert_eq!(x.mul(&y).add(&Poly::one(f, 2)).divexact(&x), Err(Error::NotDivisible));
    }

    #[test]
    fn graded_order_and_rendering() {
        let f = Field::Q;
        let x = Poly::var(f, 2, 0);
        let y = Poly::var(f, 2, 1);
        let p = x.pow(2).add(&x.mul(&y)).add(&y.pow(2)).add(&Poly::one(f, 2));
        assert_eq!(p.render(&["x", "y"]), "x^2 + x*y + y^2 + 1");
        let q = y.pow(3).sub(&x.pow(2)).neg();
        assert_eq!(q.render(&["x", "y"]), "-y^3 + x^2");
        assert_eq!(Poly::zero(f, 2).render(&["x", "y"]), "0");
        assert_eq!(Poly::int(f, 2, -3).render(&["x", "y"]), "-3");
        let r = t().scale(&FieldElem::from_i64(Field::Q, -2)).sub(&c(1));
        assert_eq!(r.render(&["t"]), "-2*t - 1");
        let h = FieldElem::Q(num_rational::BigRational::new(3.into(), 2.into()));
        assert_eq!(t().scale(&h).render(&["t"]), "3/2*t");
    }

    #[test]
    fn rendering_mod_p() {
        let f5 = Field::prime(5).unwrap();
        let u = Poly::var(f5, 1, 0);
        let p = u.scale(&FieldElem::from_i64(f5, -2)).add(&Poly::int(f5, 1, 7));
        assert_eq!(p.render(&["u"]), "3*u + 2");
    }

    #[test]
    fn derivative_basics() {
        let p = t().pow(3).add(&t().scale(&FieldElem::from_i64(Field::Q, 5)));
        let d = p.derivative(0);
        let expect = t().pow(2).scale(&FieldElem::from_i64(Field::Q, 3)).add(&c(5));
        assert_eq!(d, expect);
        // char p kills p-th powers
        let f5 = Field::prime(5).unwrap();
        let u = Poly::var(f5, 1, 0);
        assert!(u.pow(5).derivative(0).is_zero());
    }

    #[test]
    fn substitution_composes() {
        let f = Field::Q;
        let x = Poly::var(f, 2, 0);
        let y = Poly::var(f, 2, 1);
        let p = x.pow(2).add(&y);
        // x -> t, y -> t+1 lands in one variable
        let tt = Poly::var(f, 1, 0);
        let images = [tt.clone(), tt.add(&Poly::int(f, 1, 1))];
        let got = p.subst(&images).unwrap();
        let expect = tt.pow(2).add(&tt).add(&Poly::int(f, 1, 1));
        assert_eq!(got, expect);
        assert_eq!(p.subst(&[tt]).unwrap_err(), Error::RingMismatch);
    }

    #[test]
    fn coeff_views_round_trip() {
        let f = Field::Q;
        let x = Poly::var(f, 2, 0);
        let y = Poly::var(f, 2, 1);
        let p = x.pow(2).mul(&y).add(&x.scale(&FieldElem::from_i64(f, 3))).add(&y.pow(2));
        let cs = p.coeffs_in_var(0);
        assert_eq!(cs.len(), 3);
        assert_eq!(Poly::from_coeffs_in_var(f, 2, 0, &cs), p);
    }

    #[test]
    fn unit_recognition() {
        assert!(c(-2).unit_inverse().is_some());
        let half = c(-2).unit_inverse().unwrap();
        assert!(c(-2).mul(&half).is_one());
        assert!(t().unit_inverse().is_none());
        assert!(Poly::zero(Field::Q, 1).unit_inverse().is_none());
    }

    #[test]
    fn monic_normalization() {
        let p = t().pow(2).scale(&FieldElem::from_i64(Field::Q, -4)).add(&t());
        let m = p.monic();
        assert_eq!(m.leading_coeff().unwrap(), FieldElem::one(Field::Q));
        assert!(Poly::zero(Field::Q, 1).monic().is_zero());
    }
}
