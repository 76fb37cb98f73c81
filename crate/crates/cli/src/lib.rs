//! Library half of the command line tool: payload/response shapes, the
//! polynomial expression parser, the dense recheck oracle and the command
//! handlers. The binary in main.rs only adds argv handling.

pub mod commands;
pub mod oracle;
pub mod parse;
pub mod request;

#[derive(Debug)]
pub enum CliError {
    Syntax { pos: usize, msg: String },
    UnknownVariable { name: String, pos: usize },
    BadRequest(String),
    Io(String),
    Math(sl2_core::Error),
    SelfCheckFailed(&'static str),
}

impl CliError {
    pub fn syntax(pos: usize, msg: impl Into<String>) -> CliError {
        CliError::Syntax {
            pos,
            msg: msg.into(),
        }
    }

    pub fn code_name(&self) -> String {
        match self {
            CliError::Syntax { .. } => "SyntaxError".into(),
            CliError::UnknownVariable { .. } => "UnknownVariable".into(),
            CliError::BadRequest(_) => "BadRequest".into(),
            CliError::Io(_) => "Io".into(),
            CliError::Math(e) => e.name().into(),
            CliError::SelfCheckFailed(_) => "SelfCheckFailed".into(),
        }
    }

    pub fn detail(&self) -> String {
        match self {
            CliError::Syntax { pos, msg } => format!("{} at position {}", msg, pos),
            CliError::UnknownVariable { name, pos } => {
                format!("unknown variable '{}' at position {}", name, pos)
            }
            CliError::BadRequest(msg) => msg.clone(),
            CliError::Io(msg) => msg.clone(),
            CliError::Math(e) => format!("{}", e),
            CliError::SelfCheckFailed(what) => format!("self check failed: {}", what),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Math(e) if e.is_hypothesis_failure() => 2,
            CliError::SelfCheckFailed(_) => 2,
            _ => 1,
        }
    }
}

impl From<sl2_core::Error> for CliError {
    fn from(e: sl2_core::Error) -> CliError {
        CliError::Math(e)
    }
}
