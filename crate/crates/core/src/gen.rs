//! Deterministic random generation of ring elements, conjugators,
//! involutions, triples, automorphisms and derivations, for the test
//! harness and the CLI. Everything is a pure function of the seed.

use alloc::vec;
use alloc::vec::Vec;

use crate::autder::{LieAut, LieDer, RingAut, RingDer};
use crate::field::{Field, FieldElem};
use crate::gcd::BezoutCert;
use crate::poly::{Monomial, Poly};
use crate::sl2::{MatGL2, MatSL2, Sl2Triple};

/// Shape parameters for generated objects.
#[derive(Clone, Copy, Debug)]
pub struct GenConfig {
    pub seed: u64,
    pub field: Field,
    pub nvars: usize,
    pub max_degree: u32,
    pub max_terms: usize,
    pub coeff_bound: i64,
    pub word_length: usize,
}

impl GenConfig {
    pub fn new(seed: u64, field: Field, nvars: usize) -> GenConfig {
        GenConfig {
            seed,
            field,
            nvars,
            max_degree: 3,
            max_terms: 3,
            coeff_bound: 5,
            word_length: 4,
        }
    }
}

/// splitmix64: one 64-bit state, equidistributed enough for test data and
/// trivially portable.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish value in [0, n); n > 0.
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }
}

pub struct Generator {
    rng: SplitMix64,
    pub cfg: GenConfig,
}

impl Generator {
    pub fn new(cfg: GenConfig) -> Generator {
        Generator {
            rng: SplitMix64::new(cfg.seed),
            cfg,
        }
    }

    pub fn field_elem(&mut self) -> FieldElem {
        match self.cfg.field {
            Field::Q => {
                let span = (2 * self.cfg.coeff_bound + 1) as u64;
                let n = self.rng.below(span) as i64 - self.cfg.coeff_bound;
                FieldElem::from_i64(Field::Q, n)
            }
            Field::Fp(p) => FieldElem::from_i64(self.cfg.field, self.rng.below(p) as i64),
        }
    }

    pub fn nonzero_field_elem(&mut self) -> FieldElem {
        loop {
            let c = self.field_elem();
            if !c.is_zero() {
                return c;
            }
        }
    }

    fn monomial(&mut self) -> Monomial {
        let mut exps = vec![0u32; self.cfg.nvars];
        let mut budget = self.cfg.max_degree;
        for e in exps.iter_mut() {
            if budget == 0 {
                break;
            }
            *e = self.rng.below(budget as u64 + 1) as u32;
            budget -= *e;
        }
        Monomial(exps)
    }

    pub fn poly(&mut self) -> Poly {
        let terms = 1 + self.rng.below(self.cfg.max_terms as u64) as usize;
        let mut p = Poly::zero(self.cfg.field, self.cfg.nvars);
        for _ in 0..terms {
            let m = self.monomial();
            let c = self.field_elem();
            p = p.add(&Poly::from_terms(self.cfg.field, self.cfg.nvars, [(m, c)]));
        }
        p
    }

    pub fn nonzero_poly(&mut self) -> Poly {
        loop {
            let p = self.poly();
            if !p.is_zero() {
                return p;
            }
        }
    }

    /// Word in elementary matrices and diagonal units, hence of unit
    /// determinant by construction.
    pub fn gl2(&mut self) -> MatGL2 {
        let field = self.cfg.field;
        let nv = self.cfg.nvars;
        let mut p = MatGL2::identity(field, nv);
        for _ in 0..self.cfg.word_length {
            let step = match self.rng.below(3) {
                0 => MatGL2::e12(&self.poly()),
                1 => MatGL2::e21(&self.poly()),
                _ => {
                    let u = self.nonzero_field_elem();
                    MatGL2::diag_units(field, nv, &u, &FieldElem::one(field))
                        .expect("nonzero unit")
                }
            };
            p = p.mul(&step);
        }
        p
    }

    pub fn sl2_elem(&mut self) -> MatSL2 {
        MatSL2::new(self.poly(), self.poly(), self.poly()).expect("same ring")
    }

    /// Conjugate of the diagonal involution.
    pub fn involution(&mut self) -> MatSL2 {
        let p = self.gl2();
        p.conj(&MatSL2::h(self.cfg.field, self.cfg.nvars))
    }

    /// Square-zero element P e P^-1 together with its certificate.
    pub fn nilpotent_with_cert(&mut self) -> (MatSL2, BezoutCert) {
        let p = self.gl2();
        crate::conjugacy::bezout_from_conjugation(&p).expect("unit determinant word")
    }

    /// Random conjugate of the standard triple, returned with the
    /// conjugator that produced it.
    pub fn triple(&mut self) -> (Sl2Triple, MatGL2) {
        let p = self.gl2();
        let std = Sl2Triple::standard(self.cfg.field, self.cfg.nvars);
        let tr = std.map(|z| p.tau(z)).expect("conjugate of a triple");
        (tr, p)
    }

    /// Composition of elementary substitutions: variable scalings, constant
    /// shifts and, with several variables, shear maps between them.
    pub fn ring_aut(&mut self) -> RingAut {
        let field = self.cfg.field;
        let nv = self.cfg.nvars;
        let mut rho = RingAut::identity(field, nv);
        if nv == 0 {
            return rho;
        }
        for _ in 0..self.cfg.word_length {
            let i = self.rng.below(nv as u64) as usize;
            let xi = Poly::var(field, nv, i);
            let step = match self.rng.below(if nv >= 2 { 3 } else { 2 }) {
                0 => {
                    let u = self.nonzero_field_elem();
                    let mut images = RingAut::identity(field, nv).images().to_vec();
                    let mut inverses = images.clone();
                    images[i] = xi.scale(&u);
                    inverses[i] = xi.scale(&u.inv().expect("nonzero"));
                    RingAut::new(field, images, inverses).expect("scaling inverts")
                }
                1 => {
                    let c = Poly::constant(field, nv, self.field_elem());
                    let mut images = RingAut::identity(field, nv).images().to_vec();
                    let mut inverses = images.clone();
                    images[i] = xi.add(&c);
                    inverses[i] = xi.sub(&c);
                    RingAut::new(field, images, inverses).expect("shift inverts")
                }
                _ => {
                    let j = loop {
                        let j = self.rng.below(nv as u64) as usize;
                        if j != i {
                            break j;
                        }
                    };
                    let c = self.field_elem();
                    let shear = Poly::var(field, nv, j).scale(&c);
                    let mut images = RingAut::identity(field, nv).images().to_vec();
                    let mut inverses = images.clone();
                    images[i] = xi.add(&shear);
                    inverses[i] = xi.sub(&shear);
                    RingAut::new(field, images, inverses).expect("shear inverts")
                }
            };
            rho = step.compose(&rho).expect("same ring");
        }
        rho
    }

    pub fn lie_aut(&mut self) -> LieAut {
        let rho = self.ring_aut();
        LieAut::new(self.gl2(), rho)
    }

    pub fn ring_der(&mut self) -> RingDer {
        let images: Vec<Poly> = (0..self.cfg.nvars).map(|_| self.poly()).collect();
        RingDer::new(self.cfg.field, self.cfg.nvars, images).expect("same ring")
    }

    pub fn lie_der(&mut self) -> LieDer {
        LieDer::new(self.sl2_elem(), self.ring_der())
    }
}
