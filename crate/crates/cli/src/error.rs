use lambda_kernel::cone::ConeError;
use lambda_kernel::dk::DkError;
use lambda_kernel::lambda::LambdaError;

/// Process exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// `line == 0` marks an error about the file as a whole.
    #[error("{}", parse_message(.path, *.line, *.col, .msg))]
    Parse { path: String, line: usize, col: usize, msg: String },
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
    #[error("[{module}] {msg}")]
    Module { module: &'static str, msg: String, code: i32 },
}

fn parse_message(path: &str, line: usize, col: usize, msg: &str) -> String {
    if line == 0 {
        format!("{}: {}", path, msg)
    } else {
        format!("{}:{}:{}: {}", path, line, col, msg)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Module { code, .. } => *code,
            _ => EXIT_USAGE,
        }
    }
}

impl From<LambdaError> for CliError {
    fn from(e: LambdaError) -> Self {
        let code = match e {
            LambdaError::Index(_) | LambdaError::Invalid(_) | LambdaError::Algebra(_) | LambdaError::MissingSlot(_) => {
                EXIT_USAGE
            }
            _ => EXIT_FAILURE,
        };
        CliError::Module { module: "lambda", msg: e.to_string(), code }
    }
}

impl From<DkError> for CliError {
    fn from(e: DkError) -> Self {
        let code = match e {
            DkError::Shape(_)
            | DkError::Budget { .. }
            | DkError::Truncation(_)
            | DkError::Invalid(_)
            | DkError::Incomposable(_) => EXIT_USAGE,
            _ => EXIT_FAILURE,
        };
        CliError::Module { module: "dold-kan", msg: e.to_string(), code }
    }
}

impl From<ConeError> for CliError {
    fn from(e: ConeError) -> Self {
        let code = match e {
            ConeError::Identity(_) | ConeError::NotSimplicialMap(_) => EXIT_FAILURE,
            _ => EXIT_USAGE,
        };
        CliError::Module { module: "simplicial-cone", msg: e.to_string(), code }
    }
}
