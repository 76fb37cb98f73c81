//! Command line front end. Configuration (field, variables) travels on
//! argv; mathematical payloads travel as JSON documents. Every answer is
//! one line of JSON on stdout with "verified": true set only after a
//! brute-force recheck; failures are one line of error JSON plus a
//! diagnostic on stderr.
//!
//! Exit codes: 0 success, 2 a mathematical hypothesis failed (the input
//! was readable but the requested construction does not apply), 1 anything
//! else (syntax, configuration, io).

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sl2_cli::commands::{self, GenKind, GenRequest};
use sl2_cli::request::{self, Ctx, ErrorResponse, InvolutionPayload, NilpotentPayload, Sl2Json, ZPayload};
use sl2_cli::CliError;

#[derive(Parser)]
#[command(
    name = "sl2",
    version,
    about = "exact conjugacy computations for traceless 2x2 matrices over polynomial rings"
)]
struct Cli {
    /// base field: q, or fp:<p> for an odd prime p
    #[arg(long, global = true, default_value = "q")]
    field: String,
    /// ordered comma-separated variable names
    #[arg(long, global = true, value_delimiter = ',', default_value = "t")]
    vars: Vec<String>,
    /// read the command payload from this JSON file, or - for stdin
    #[arg(long, global = true)]
    json: Option<String>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct MatArgs {
    /// upper-left coordinate of the matrix
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// upper-right coordinate of the matrix
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    /// lower-left coordinate of the matrix
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
}

#[derive(Args)]
struct NilArgs {
    #[command(flatten)]
    mat: MatArgs,
    /// first coefficient of a comaximality certificate for (b, c)
    #[arg(long = "cert-r", allow_hyphen_values = true)]
    cert_r: Option<String>,
    /// second coefficient of a comaximality certificate for (b, c)
    #[arg(long = "cert-s", allow_hyphen_values = true)]
    cert_s: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Involution,
    Nilpotent,
    Triple,
    Gl2,
    Sl2,
    Aut,
    Der,
}

#[derive(Args)]
struct GenArgs {
    /// seed for the deterministic generator
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// what to generate
    #[arg(long, value_enum)]
    kind: KindArg,
    /// how many items
    #[arg(long, default_value_t = 1)]
    count: usize,
    /// total degree budget for generated polynomials
    #[arg(long = "max-degree", default_value_t = 3)]
    max_degree: u32,
    /// term budget for generated polynomials
    #[arg(long = "max-terms", default_value_t = 3)]
    max_terms: usize,
    /// absolute bound on generated rational coefficients
    #[arg(long = "coeff-bound", default_value_t = 5)]
    coeff_bound: i64,
    /// number of elementary factors in generated conjugators
    #[arg(long = "word-length", default_value_t = 4)]
    word_length: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// check the defining relations of a triple (payload: x, h, y)
    VerifyTriple,
    /// complete an involution to a triple (payload: h, or --a --b --c)
    TripleFromInvolution(MatArgs),
    /// conjugator taking an involution to diag(1, -1)
    Diagonalize(MatArgs),
    /// conjugator taking a triple to the standard one (payload: x, h, y)
    StandardizeTriple,
    /// complete a square-zero matrix to a triple
    Jm(NilArgs),
    /// conjugator taking a square-zero matrix to [[0,1],[0,0]]
    NilpotentStandardize(NilArgs),
    /// square-zero conjugate of [[0,1],[0,0]] with its certificate (payload: P)
    BezoutCert,
    /// exact diagonalization of a constant multiple of an involution
    Mad(MatArgs),
    /// test membership in the conjugates of the constant subalgebra
    Membership(NilArgs),
    /// test membership of a matrix in I*sl2 for an ideal I (payload: gens, z)
    IdealMember,
    /// apply an automorphism (payload: aut, z)
    AutApply,
    /// compose two automorphisms (payload: first, second)
    AutCompose,
    /// recover conjugator and coefficient map from generator images
    /// (payload: x, h, y, diag, optional rho_inv)
    AutRecognize,
    /// apply a derivation (payload: der, m)
    DerApply,
    /// split a derivation into bracket and coefficient parts
    /// (payload: de, df, diag)
    DerDecompose,
    /// move a matrix along a coefficient ring isomorphism
    /// (payload: target_vars, images, inverse_images, m)
    Transport,
    /// deterministic pseudo-random test objects
    Gen(GenArgs),
}

fn read_payload_text(src: &str) -> Result<String, CliError> {
    if src == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Io(format!("reading stdin: {}", e)))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(src).map_err(|e| CliError::Io(format!("reading {}: {}", src, e)))
    }
}

fn load_json<T: serde::de::DeserializeOwned>(json: &Option<String>) -> Result<T, CliError> {
    let src = json
        .as_ref()
        .ok_or_else(|| CliError::BadRequest("this command needs --json <file|->".into()))?;
    let text = read_payload_text(src)?;
    serde_json::from_str(&text).map_err(|e| CliError::BadRequest(format!("bad payload: {}", e)))
}

fn mat_from_args(m: &MatArgs) -> Option<Sl2Json> {
    match (&m.a, &m.b, &m.c) {
        (Some(a), Some(b), Some(c)) => Some(Sl2Json {
            a: a.clone(),
            b: b.clone(),
            c: c.clone(),
        }),
        _ => None,
    }
}

/// Matrix payload from --json or from --a --b --c.
fn matrix_payload(json: &Option<String>, m: &MatArgs) -> Result<Sl2Json, CliError> {
    if json.is_some() {
        return Ok(load_json::<InvolutionPayload>(json)?.h);
    }
    mat_from_args(m).ok_or_else(|| {
        CliError::BadRequest("provide --json, or all of --a --b --c".into())
    })
}

fn cert_from_args(n: &NilArgs) -> Result<Option<request::CertJson>, CliError> {
    match (&n.cert_r, &n.cert_s) {
        (Some(r), Some(s)) => Ok(Some(request::CertJson {
            r: r.clone(),
            s: s.clone(),
        })),
        (None, None) => Ok(None),
        _ => Err(CliError::BadRequest(
            "provide both --cert-r and --cert-s or neither".into(),
        )),
    }
}

fn nilpotent_payload(json: &Option<String>, n: &NilArgs) -> Result<NilpotentPayload, CliError> {
    if json.is_some() {
        return load_json(json);
    }
    let x = mat_from_args(&n.mat).ok_or_else(|| {
        CliError::BadRequest("provide --json, or all of --a --b --c".into())
    })?;
    Ok(NilpotentPayload {
        x,
        cert: cert_from_args(n)?,
    })
}

fn run(cli: &Cli) -> Result<String, CliError> {
    let ctx = Ctx::new(&cli.field, cli.vars.clone())?;
    let json = &cli.json;
    match &cli.command {
        Cmd::VerifyTriple => commands::verify_triple_cmd(&ctx, &load_json(json)?),
        Cmd::TripleFromInvolution(m) => {
            let h = matrix_payload(json, m)?;
            commands::triple_from_involution_cmd(&ctx, &InvolutionPayload { h })
        }
        Cmd::Diagonalize(m) => {
            let h = matrix_payload(json, m)?;
            commands::diagonalize_cmd(&ctx, &InvolutionPayload { h })
        }
        Cmd::StandardizeTriple => commands::standardize_triple_cmd(&ctx, &load_json(json)?),
        Cmd::Jm(n) => commands::jm_cmd(&ctx, &nilpotent_payload(json, n)?),
        Cmd::NilpotentStandardize(n) => {
            commands::nilpotent_standardize_cmd(&ctx, &nilpotent_payload(json, n)?)
        }
        Cmd::BezoutCert => commands::bezout_cert_cmd(&ctx, &load_json(json)?),
        Cmd::Mad(m) => {
            let z = matrix_payload(json, m)?;
            commands::mad_cmd(&ctx, &ZPayload { z, cert: None })
        }
        Cmd::Membership(n) => {
            let p = nilpotent_payload(json, n)?;
            commands::membership_cmd(
                &ctx,
                &ZPayload {
                    z: p.x,
                    cert: p.cert,
                },
            )
        }
        Cmd::IdealMember => commands::ideal_member_cmd(&ctx, &load_json(json)?),
        Cmd::AutApply => commands::aut_apply_cmd(&ctx, &load_json(json)?),
        Cmd::AutCompose => commands::aut_compose_cmd(&ctx, &load_json(json)?),
        Cmd::AutRecognize => commands::aut_recognize_cmd(&ctx, &load_json(json)?),
        Cmd::DerApply => commands::der_apply_cmd(&ctx, &load_json(json)?),
        Cmd::DerDecompose => commands::der_decompose_cmd(&ctx, &load_json(json)?),
        Cmd::Transport => commands::transport_cmd(&ctx, &load_json(json)?),
        Cmd::Gen(g) => {
            let kind = match g.kind {
                KindArg::Involution => GenKind::Involution,
                KindArg::Nilpotent => GenKind::Nilpotent,
                KindArg::Triple => GenKind::Triple,
                KindArg::Gl2 => GenKind::Gl2,
                KindArg::Sl2 => GenKind::Sl2,
                KindArg::Aut => GenKind::Aut,
                KindArg::Der => GenKind::Der,
            };
            commands::gen_cmd(
                &ctx,
                &GenRequest {
                    seed: g.seed,
                    kind,
                    count: g.count,
                    max_degree: g.max_degree,
                    max_terms: g.max_terms,
                    coeff_bound: g.coeff_bound,
                    word_length: g.word_length,
                },
            )
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version land here with a zero code
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(line) => {
            println!("{}", line);
            ExitCode::SUCCESS
        }
        Err(e) => {
            let resp = ErrorResponse {
                error: e.code_name(),
                detail: e.detail(),
            };
            println!(
                "{}",
                serde_json::to_string(&resp).unwrap_or_else(|_| "{\"error\":\"Io\"}".into())
            );
            eprintln!("error: {}", e.detail());
            ExitCode::from(e.exit_code())
        }
    }
}
