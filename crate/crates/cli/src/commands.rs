//! One handler per subcommand. Every successful response is re-verified by
//! independent arithmetic (dense matrix products, inverse round trips or
//! re-substitution) before it is serialized.

use serde::Serialize;
use serde_json::json;
use sl2_core::{
    bracket, bezout_from_conjugation, comaximality_certificate, decompose_derivation,
    diagonalize_involution, generator_sample, ideal_correspondence, jacobson_morozov,
    mad_normalize, nilpotent_to_standard, poly_ext_gcd, recognize_automorphism, sl2f_membership,
    standardize_triple, transport_ring_iso, triple_from_involution, verify_triple, GenConfig,
    Generator, MatSL2, MembershipKind, Poly,
};

use crate::oracle;
use crate::request::*;
use crate::CliError;

fn respond<T: Serialize>(r: &T) -> Result<String, CliError> {
    serde_json::to_string(r).map_err(|e| CliError::BadRequest(e.to_string()))
}

fn ensure(ok: bool, what: &'static str) -> Result<(), CliError> {
    if ok {
        Ok(())
    } else {
        Err(CliError::SelfCheckFailed(what))
    }
}

pub fn verify_triple_cmd(ctx: &Ctx, p: &TriplePayload) -> Result<String, CliError> {
    let x = ctx.sl2(&p.x)?;
    let h = ctx.sl2(&p.h)?;
    let y = ctx.sl2(&p.y)?;
    verify_triple(x.clone(), h.clone(), y.clone())?;
    ensure(oracle::is_triple(&x, &h, &y), "dense triple relations")?;
    respond(&VerifiedResponse { verified: true })
}

pub fn triple_from_involution_cmd(ctx: &Ctx, p: &InvolutionPayload) -> Result<String, CliError> {
    let h = ctx.sl2(&p.h)?;
    let tr = triple_from_involution(&h)?;
    ensure(oracle::is_triple(tr.x(), tr.h(), tr.y()), "dense triple relations")?;
    respond(&TripleResponse {
        x: ctx.sl2_json(tr.x()),
        y: ctx.sl2_json(tr.y()),
        verified: true,
    })
}

pub fn diagonalize_cmd(ctx: &Ctx, p: &InvolutionPayload) -> Result<String, CliError> {
    let h = ctx.sl2(&p.h)?;
    let conj = diagonalize_involution(&h)?;
    let diag = oracle::Mat2::from_sl2(&MatSL2::h(ctx.field, ctx.nvars()));
    ensure(oracle::conj(&conj, &h) == diag, "dense diagonalization")?;
    respond(&ConjugatorResponse {
        p: ctx.gl2_json(&conj),
        verified: true,
    })
}

pub fn standardize_triple_cmd(ctx: &Ctx, p: &TriplePayload) -> Result<String, CliError> {
    let x = ctx.sl2(&p.x)?;
    let h = ctx.sl2(&p.h)?;
    let y = ctx.sl2(&p.y)?;
    let tr = verify_triple(x, h, y)?;
    let conj = standardize_triple(&tr)?;
    let field = ctx.field;
    let nv = ctx.nvars();
    ensure(
        oracle::conj(&conj, tr.x()) == oracle::Mat2::from_sl2(&MatSL2::e(field, nv))
            && oracle::conj(&conj, tr.h()) == oracle::Mat2::from_sl2(&MatSL2::h(field, nv))
            && oracle::conj(&conj, tr.y()) == oracle::Mat2::from_sl2(&MatSL2::f(field, nv)),
        "dense standardization",
    )?;
    respond(&ConjugatorResponse {
        p: ctx.gl2_json(&conj),
        verified: true,
    })
}

pub fn jm_cmd(ctx: &Ctx, p: &NilpotentPayload) -> Result<String, CliError> {
    let x = ctx.sl2(&p.x)?;
    let supplied = match &p.cert {
        Some(c) => Some(ctx.cert(c, x.b(), x.c())?),
        None => None,
    };
    let tr = jacobson_morozov(&x, supplied.as_ref())?;
    let used = comaximality_certificate(&x, supplied.as_ref())?;
    ensure(oracle::is_triple(tr.x(), tr.h(), tr.y()), "dense triple relations")?;
    respond(&JmResponse {
        h: ctx.sl2_json(tr.h()),
        y: ctx.sl2_json(tr.y()),
        cert_used: ctx.cert_json(&used),
        verified: true,
    })
}

pub fn nilpotent_standardize_cmd(ctx: &Ctx, p: &NilpotentPayload) -> Result<String, CliError> {
    let x = ctx.sl2(&p.x)?;
    let supplied = match &p.cert {
        Some(c) => Some(ctx.cert(c, x.b(), x.c())?),
        None => None,
    };
    let conj = nilpotent_to_standard(&x, supplied.as_ref())?;
    let used = comaximality_certificate(&x, supplied.as_ref())?;
    let e = oracle::Mat2::from_sl2(&MatSL2::e(ctx.field, ctx.nvars()));
    ensure(oracle::conj(&conj, &x) == e, "dense standard form")?;
    respond(&NilpotentStandardResponse {
        p: ctx.gl2_json(&conj),
        cert_used: ctx.cert_json(&used),
        verified: true,
    })
}

pub fn bezout_cert_cmd(ctx: &Ctx, p: &ConjugatorPayload) -> Result<String, CliError> {
    let conj = ctx.gl2(&p.p)?;
    let (x, cert) = bezout_from_conjugation(&conj)?;
    let e = MatSL2::e(ctx.field, ctx.nvars());
    ensure(oracle::same(&oracle::tau(&conj, &e), &x), "dense conjugate of e")?;
    let one = Poly::one(ctx.field, ctx.nvars());
    ensure(
        cert.r.mul(x.b()).add(&cert.s.mul(x.c())) == one,
        "certificate identity",
    )?;
    respond(&BezoutResponse {
        x: ctx.sl2_json(&x),
        cert: ctx.cert_json(&cert),
        verified: true,
    })
}

pub fn mad_cmd(ctx: &Ctx, p: &ZPayload) -> Result<String, CliError> {
    let z = ctx.sl2(&p.z)?;
    let (lambda, conj) = mad_normalize(&z)?;
    let want = oracle::Mat2::from_sl2(&MatSL2::h(ctx.field, ctx.nvars()).scale_fe(&lambda));
    ensure(oracle::conj(&conj, &z) == want, "dense scaled diagonalization")?;
    let lam = Poly::constant(ctx.field, ctx.nvars(), lambda);
    respond(&MadResponse {
        lambda: ctx.render(&lam),
        p: ctx.gl2_json(&conj),
        verified: true,
    })
}

pub fn membership_cmd(ctx: &Ctx, p: &ZPayload) -> Result<String, CliError> {
    let z = ctx.sl2(&p.z)?;
    let supplied = match &p.cert {
        Some(c) => Some(ctx.cert(c, z.b(), z.c())?),
        None => None,
    };
    let w = sl2f_membership(&z, supplied.as_ref())?;
    ensure(
        oracle::is_triple(w.triple.x(), w.triple.h(), w.triple.y()),
        "dense triple relations",
    )?;
    let (kind, lambda) = match w.kind {
        MembershipKind::Nilpotent => {
            ensure(w.triple.x() == &z, "witness contains the element")?;
            ("nilpotent", None)
        }
        MembershipKind::Semisimple => {
            let lam = w.lambda.clone().expect("semisimple witness carries a scale");
            ensure(
                w.triple.h().scale_fe(&lam) == z,
                "witness contains the element",
            )?;
            let lam = Poly::constant(ctx.field, ctx.nvars(), lam);
            ("semisimple", Some(ctx.render(&lam)))
        }
    };
    respond(&MembershipResponse {
        kind: kind.to_string(),
        lambda,
        triple: TripleJson {
            x: ctx.sl2_json(w.triple.x()),
            h: ctx.sl2_json(w.triple.h()),
            y: ctx.sl2_json(w.triple.y()),
        },
        verified: true,
    })
}

pub fn ideal_member_cmd(ctx: &Ctx, p: &IdealPayload) -> Result<String, CliError> {
    let gens = ctx.polys(&p.gens)?;
    let z = ctx.sl2(&p.z)?;
    let member = ideal_correspondence(&gens, &z)?;
    // recompute the generator gcd with cofactors and replay the division
    let mut g = Poly::zero(ctx.field, ctx.nvars());
    let mut cof: Vec<Poly> = Vec::new();
    for gen in &gens {
        let (g2, r, s) = poly_ext_gcd(&g, gen)?;
        for c in cof.iter_mut() {
            *c = c.mul(&r);
        }
        cof.push(s);
        g = g2;
    }
    let mut sum = Poly::zero(ctx.field, ctx.nvars());
    for (c, gen) in cof.iter().zip(&gens) {
        sum = sum.add(&c.mul(gen));
    }
    ensure(sum == g, "gcd lies in the ideal")?;
    let dividing = if g.is_zero() {
        z.is_zero()
    } else {
        [z.a(), z.b(), z.c()].iter().all(|p| match p.divexact(&g) {
            Ok(q) => q.mul(&g) == **p,
            Err(_) => false,
        })
    };
    ensure(dividing == member, "membership reduces to the generator gcd")?;
    respond(&IdealResponse {
        member,
        verified: true,
    })
}

pub fn aut_apply_cmd(ctx: &Ctx, p: &AutApplyPayload) -> Result<String, CliError> {
    let aut = ctx.lie_aut(&p.aut)?;
    let z = ctx.sl2(&p.z)?;
    let image = aut.apply(&z)?;
    // dense check of the conjugation leg and a full inverse round trip
    let rho_z = aut.rho.apply_mat(&z)?;
    ensure(oracle::same(&oracle::tau(&aut.p, &rho_z), &image), "dense conjugation")?;
    ensure(
        aut.inverse()?.apply(&image)? == z,
        "inverse round trip",
    )?;
    respond(&ImageResponse {
        image: ctx.sl2_json(&image),
        verified: true,
    })
}

pub fn aut_compose_cmd(ctx: &Ctx, p: &AutComposePayload) -> Result<String, CliError> {
    let first = ctx.lie_aut(&p.first)?;
    let second = ctx.lie_aut(&p.second)?;
    let composed = first.compose(&second)?;
    for m in generator_sample(ctx.field, ctx.nvars()) {
        let seq = first.apply(&second.apply(&m)?)?;
        ensure(composed.apply(&m)? == seq, "composition acts as the sequence")?;
    }
    respond(&AutResponse {
        aut: ctx.aut_json(&composed),
        verified: true,
    })
}

pub fn aut_recognize_cmd(ctx: &Ctx, p: &AutRecognizePayload) -> Result<String, CliError> {
    let x_im = ctx.sl2(&p.x)?;
    let h_im = ctx.sl2(&p.h)?;
    let y_im = ctx.sl2(&p.y)?;
    let diag: Vec<MatSL2> = p
        .diag
        .iter()
        .map(|m| ctx.sl2(m))
        .collect::<Result<_, _>>()?;
    let inv = match &p.rho_inv {
        Some(texts) => Some(ctx.polys(texts)?),
        None => None,
    };
    let rec = recognize_automorphism(&x_im, &h_im, &y_im, &diag, inv)?;
    let field = ctx.field;
    let nv = ctx.nvars();
    ensure(
        rec.apply(&MatSL2::e(field, nv))? == x_im
            && rec.apply(&MatSL2::h(field, nv))? == h_im
            && rec.apply(&MatSL2::f(field, nv))? == y_im,
        "recovered map reproduces the triple images",
    )?;
    for (i, d) in diag.iter().enumerate() {
        let xh = MatSL2::h(field, nv).scale(&Poly::var(field, nv, i));
        ensure(
            rec.apply(&xh)? == *d,
            "recovered map reproduces the diagonal images",
        )?;
    }
    respond(&AutResponse {
        aut: ctx.aut_json(&rec),
        verified: true,
    })
}

pub fn der_apply_cmd(ctx: &Ctx, p: &DerApplyPayload) -> Result<String, CliError> {
    let der = ctx.lie_der(&p.der)?;
    let m = ctx.sl2(&p.m)?;
    let image = der.apply(&m);
    // recompute through dense products: [Z, M] densely plus the coefficient
    // part entry by entry
    let dense_bracket = oracle::Mat2::from_sl2(&der.z).commutator(&oracle::Mat2::from_sl2(&m));
    let coeff = m.map_entries(|q| der.delta.apply_poly(q));
    let expect = dense_bracket.add(&oracle::Mat2::from_sl2(&coeff));
    ensure(expect == oracle::Mat2::from_sl2(&image), "dense derivation value")?;
    respond(&ImageResponse {
        image: ctx.sl2_json(&image),
        verified: true,
    })
}

pub fn der_decompose_cmd(ctx: &Ctx, p: &DerDecomposePayload) -> Result<String, CliError> {
    let de = ctx.sl2(&p.de)?;
    let df = ctx.sl2(&p.df)?;
    let diag: Vec<MatSL2> = p
        .diag
        .iter()
        .map(|m| ctx.sl2(m))
        .collect::<Result<_, _>>()?;
    let der = decompose_derivation(&de, &df, &diag)?;
    let field = ctx.field;
    let nv = ctx.nvars();
    ensure(
        der.apply(&MatSL2::e(field, nv)) == de && der.apply(&MatSL2::f(field, nv)) == df,
        "rebuilt derivation reproduces the values",
    )?;
    for (i, d) in diag.iter().enumerate() {
        let xh = MatSL2::h(field, nv).scale(&Poly::var(field, nv, i));
        ensure(
            der.apply(&xh) == *d,
            "rebuilt derivation reproduces the diagonal values",
        )?;
    }
    respond(&DerResponse {
        der: ctx.der_json(&der),
        verified: true,
    })
}

pub fn transport_cmd(ctx: &Ctx, p: &TransportPayload) -> Result<String, CliError> {
    let target = Ctx::new_checked(ctx.field, p.target_vars.clone())?;
    let images = target.polys(&p.images)?;
    let inverse_images = ctx.polys(&p.inverse_images)?;
    let m = ctx.sl2(&p.m)?;
    let moved = transport_ring_iso(&images, &inverse_images, &m)?;
    let back = transport_ring_iso(&inverse_images, &images, &moved)?;
    ensure(back == m, "inverse transport round trip")?;
    respond(&ImageResponse {
        image: target.sl2_json(&moved),
        verified: true,
    })
}

pub struct GenRequest {
    pub seed: u64,
    pub kind: GenKind,
    pub count: usize,
    pub max_degree: u32,
    pub max_terms: usize,
    pub coeff_bound: i64,
    pub word_length: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    Involution,
    Nilpotent,
    Triple,
    Gl2,
    Sl2,
    Aut,
    Der,
}

pub fn gen_cmd(ctx: &Ctx, req: &GenRequest) -> Result<String, CliError> {
    let mut cfg = GenConfig::new(req.seed, ctx.field, ctx.nvars());
    cfg.max_degree = req.max_degree;
    cfg.max_terms = req.max_terms;
    cfg.coeff_bound = req.coeff_bound;
    cfg.word_length = req.word_length;
    let mut g = Generator::new(cfg);
    let mut items = Vec::with_capacity(req.count);
    for _ in 0..req.count {
        let item = match req.kind {
            GenKind::Involution => {
                let h = g.involution();
                let dense = oracle::Mat2::from_sl2(&h);
                ensure(
                    dense.mul(&dense) == oracle::Mat2::identity(ctx.field, ctx.nvars()),
                    "generated involution squares to 1",
                )?;
                serde_json::to_value(ctx.sl2_json(&h))
            }
            GenKind::Nilpotent => {
                let (x, cert) = g.nilpotent_with_cert();
                let dense = oracle::Mat2::from_sl2(&x);
                ensure(dense.mul(&dense).is_zero(), "generated element squares to 0")?;
                ensure(cert.verify(), "generated certificate identity")?;
                serde_json::to_value(json!({
                    "x": ctx.sl2_json(&x),
                    "cert": ctx.cert_json(&cert),
                }))
            }
            GenKind::Triple => {
                let (tr, p) = g.triple();
                ensure(
                    oracle::is_triple(tr.x(), tr.h(), tr.y()),
                    "generated triple relations",
                )?;
                serde_json::to_value(json!({
                    "x": ctx.sl2_json(tr.x()),
                    "h": ctx.sl2_json(tr.h()),
                    "y": ctx.sl2_json(tr.y()),
                    "P": ctx.gl2_json(&p),
                }))
            }
            GenKind::Gl2 => {
                let p = g.gl2();
                ensure(p.det().is_unit(), "generated conjugator determinant")?;
                serde_json::to_value(ctx.gl2_json(&p))
            }
            GenKind::Sl2 => serde_json::to_value(ctx.sl2_json(&g.sl2_elem())),
            GenKind::Aut => {
                let aut = g.lie_aut();
                let z = g.sl2_elem();
                ensure(
                    aut.inverse()?.apply(&aut.apply(&z)?)? == z,
                    "generated automorphism inverts",
                )?;
                serde_json::to_value(ctx.aut_json(&aut))
            }
            GenKind::Der => {
                let der = g.lie_der();
                let a = g.sl2_elem();
                let b = g.sl2_elem();
                let lhs = der.apply(&bracket(&a, &b));
                let rhs = bracket(&der.apply(&a), &b).add(&bracket(&a, &der.apply(&b)));
                ensure(lhs == rhs, "generated derivation satisfies the product rule")?;
                serde_json::to_value(ctx.der_json(&der))
            }
        };
        items.push(item.map_err(|e| CliError::BadRequest(e.to_string()))?);
    }
    let out = json!({ "items": items, "verified": true });
    serde_json::to_string(&out).map_err(|e| CliError::BadRequest(e.to_string()))
}
