//! JSON payload and response shapes, and the parsing context that turns
//! their polynomial strings into ring elements and back.

use serde::{Deserialize, Serialize};
use sl2_core::{BezoutCert, Field, LieAut, LieDer, MatGL2, MatSL2, Poly, RingAut, RingDer};

use crate::parse::parse_poly;
use crate::CliError;

/// Field and variable configuration for one invocation.
#[derive(Clone, Debug)]
pub struct Ctx {
    pub field: Field,
    pub vars: Vec<String>,
}

impl Ctx {
    pub fn new(field_text: &str, vars: Vec<String>) -> Result<Ctx, CliError> {
        let field = parse_field(field_text)?;
        Ctx::new_checked(field, vars)
    }

    pub fn new_checked(field: Field, vars: Vec<String>) -> Result<Ctx, CliError> {
        if vars.is_empty() {
            return Err(CliError::BadRequest("at least one variable is required".into()));
        }
        let mut seen = vars.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != vars.len() {
            return Err(CliError::BadRequest("variable names must be distinct".into()));
        }
        Ok(Ctx { field, vars })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn names(&self) -> Vec<&str> {
        self.vars.iter().map(String::as_str).collect()
    }

    pub fn poly(&self, text: &str) -> Result<Poly, CliError> {
        parse_poly(text, &self.vars, self.field)
    }

    pub fn render(&self, p: &Poly) -> String {
        p.render(&self.names())
    }

    pub fn sl2(&self, m: &Sl2Json) -> Result<MatSL2, CliError> {
        Ok(MatSL2::new(self.poly(&m.a)?, self.poly(&m.b)?, self.poly(&m.c)?)?)
    }

    pub fn sl2_json(&self, m: &MatSL2) -> Sl2Json {
        Sl2Json {
            a: self.render(m.a()),
            b: self.render(m.b()),
            c: self.render(m.c()),
        }
    }

    pub fn gl2(&self, m: &Gl2Json) -> Result<MatGL2, CliError> {
        Ok(MatGL2::new(
            self.poly(&m[0][0])?,
            self.poly(&m[0][1])?,
            self.poly(&m[1][0])?,
            self.poly(&m[1][1])?,
        )?)
    }

    pub fn gl2_json(&self, m: &MatGL2) -> Gl2Json {
        let e = m.entries();
        [
            [self.render(&e[0]), self.render(&e[1])],
            [self.render(&e[2]), self.render(&e[3])],
        ]
    }

    pub fn cert(&self, c: &CertJson, g2: &Poly, g3: &Poly) -> Result<BezoutCert, CliError> {
        Ok(BezoutCert::new(
            self.poly(&c.r)?,
            self.poly(&c.s)?,
            g2.clone(),
            g3.clone(),
        )?)
    }

    pub fn cert_json(&self, c: &BezoutCert) -> CertJson {
        CertJson {
            r: self.render(&c.r),
            s: self.render(&c.s),
        }
    }

    pub fn polys(&self, texts: &[String]) -> Result<Vec<Poly>, CliError> {
        texts.iter().map(|s| self.poly(s)).collect()
    }

    pub fn poly_strings(&self, ps: &[Poly]) -> Vec<String> {
        ps.iter().map(|p| self.render(p)).collect()
    }

    pub fn ring_aut(&self, a: &AutJson) -> Result<(MatGL2, RingAut), CliError> {
        let p = self.gl2(&a.p)?;
        let rho = RingAut::new(self.field, self.polys(&a.rho)?, self.polys(&a.rho_inv)?)?;
        Ok((p, rho))
    }

    pub fn lie_aut(&self, a: &AutJson) -> Result<LieAut, CliError> {
        let (p, rho) = self.ring_aut(a)?;
        Ok(LieAut::new(p, rho))
    }

    pub fn aut_json(&self, a: &LieAut) -> AutJson {
        AutJson {
            p: self.gl2_json(&a.p),
            rho: self.poly_strings(a.rho.images()),
            rho_inv: self.poly_strings(a.rho.inverse_images()),
        }
    }

    pub fn lie_der(&self, d: &DerJson) -> Result<LieDer, CliError> {
        let z = self.sl2(&d.z)?;
        let delta = RingDer::new(self.field, self.nvars(), self.polys(&d.delta)?)?;
        Ok(LieDer::new(z, delta))
    }

    pub fn der_json(&self, d: &LieDer) -> DerJson {
        DerJson {
            z: self.sl2_json(&d.z),
            delta: self.poly_strings(d.delta.images()),
        }
    }
}

/// "q" or "fp:<p>".
pub fn parse_field(text: &str) -> Result<Field, CliError> {
    if text == "q" {
        return Ok(Field::Q);
    }
    if let Some(rest) = text.strip_prefix("fp:") {
        let p: u64 = rest
            .parse()
            .map_err(|_| CliError::BadRequest(format!("bad field modulus '{}'", rest)))?;
        return Ok(Field::prime(p)?);
    }
    Err(CliError::BadRequest(format!(
        "unknown field '{}' (expected q or fp:<p>)",
        text
    )))
}

/// Traceless matrix [[a, b], [c, -a]] as its three coordinates.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Sl2Json {
    pub a: String,
    pub b: String,
    pub c: String,
}

/// Invertible matrix as a nested row-major 2x2 array.
pub type Gl2Json = [[String; 2]; 2];

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CertJson {
    pub r: String,
    pub s: String,
}

/// Automorphism as conjugator plus variable images of the coefficient
/// automorphism and its inverse.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AutJson {
    #[serde(rename = "P")]
    pub p: Gl2Json,
    pub rho: Vec<String>,
    pub rho_inv: Vec<String>,
}

/// Derivation as bracket part plus variable images of the coefficient
/// derivation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DerJson {
    pub z: Sl2Json,
    pub delta: Vec<String>,
}

// payload shapes, one per command

#[derive(Debug, Deserialize)]
pub struct TriplePayload {
    pub x: Sl2Json,
    pub h: Sl2Json,
    pub y: Sl2Json,
}

#[derive(Debug, Deserialize)]
pub struct InvolutionPayload {
    pub h: Sl2Json,
}

#[derive(Debug, Deserialize)]
pub struct ZPayload {
    pub z: Sl2Json,
    pub cert: Option<CertJson>,
}

#[derive(Debug, Deserialize)]
pub struct NilpotentPayload {
    pub x: Sl2Json,
    pub cert: Option<CertJson>,
}

#[derive(Debug, Deserialize)]
pub struct ConjugatorPayload {
    #[serde(rename = "P")]
    pub p: Gl2Json,
}

#[derive(Debug, Deserialize)]
pub struct IdealPayload {
    pub gens: Vec<String>,
    pub z: Sl2Json,
}

#[derive(Debug, Deserialize)]
pub struct AutApplyPayload {
    pub aut: AutJson,
    pub z: Sl2Json,
}

#[derive(Debug, Deserialize)]
pub struct AutComposePayload {
    pub first: AutJson,
    pub second: AutJson,
}

#[derive(Debug, Deserialize)]
pub struct AutRecognizePayload {
    pub x: Sl2Json,
    pub h: Sl2Json,
    pub y: Sl2Json,
    pub diag: Vec<Sl2Json>,
    pub rho_inv: Option<Vec<String>>,
}

#[derive(Debug, Deserialize)]
pub struct DerApplyPayload {
    pub der: DerJson,
    pub m: Sl2Json,
}

#[derive(Debug, Deserialize)]
pub struct DerDecomposePayload {
    pub de: Sl2Json,
    pub df: Sl2Json,
    pub diag: Vec<Sl2Json>,
}

#[derive(Debug, Deserialize)]
pub struct TransportPayload {
    pub target_vars: Vec<String>,
    pub images: Vec<String>,
    pub inverse_images: Vec<String>,
    pub m: Sl2Json,
}

// response shapes

#[derive(Debug, Serialize)]
pub struct VerifiedResponse {
    pub verified: bool,
}

#[derive(Debug, Serialize)]
pub struct TripleResponse {
    pub x: Sl2Json,
    pub y: Sl2Json,
    pub verified: bool,
}

#[derive(Debug, Serialize)]
pub struct ConjugatorResponse {
    #[serde(rename = "P")]
    pub p: Gl2Json,
    pub verified: bool,
}

#[derive(Debug, Serialize)]
pub struct JmResponse {
    pub h: Sl2Json,
    pub y: Sl2Json,
    pub cert_used: CertJson,
    pub verified: bool,
}

#[derive(Debug, Serialize)]
pub struct NilpotentStandardResponse {
    #[serde(rename = "P")]
    pub p: Gl2Json,
    pub cert_used: CertJson,
    pub verified: bool,
}

#[derive(Debug, Serialize)]
pub struct BezoutResponse {
    pub x: Sl2Json,
    pub cert: CertJson,
    pub verified: bool,
}

#[derive(Debug, Serialize)]
pub struct MadResponse {
    pub lambda: String,
    #[serde(rename = "P")]
    pub p: Gl2Json,
    pub verified: bool,
}

#[derive(Debug, Serialize)]
pub struct MembershipResponse {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    pub triple: TripleJson,
    pub verified: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TripleJson {
    pub x: Sl2Json,
    pub h: Sl2Json,
    pub y: Sl2Json,
}

#[derive(Debug, Serialize)]
pub struct IdealResponse {
    pub member: bool,
    pub verified: bool,
}

#[derive(Debug, Serialize)]
pub struct ImageResponse {
    pub image: Sl2Json,
    pub verified: bool,
}

#[derive(Debug, Serialize)]
pub struct AutResponse {
    pub aut: AutJson,
    pub verified: bool,
}

#[derive(Debug, Serialize)]
pub struct DerResponse {
    pub der: DerJson,
    pub verified: bool,
}

#[derive(Debug, Serialize)]
pub struct ErrorResponse {
    pub error: String,
    pub detail: String,
}
