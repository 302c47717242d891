use std::io;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{check}: {source}")]
    Core {
        check: &'static str,
        #[source]
        source: ncspectra::Error,
    },

    #[error("{} check(s) exceeded tolerance: {}", .0.len(), .0.join(", "))]
    ChecksFailed(Vec<String>),

    #[error("i/o: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn core(check: &'static str) -> impl FnOnce(ncspectra::Error) -> Self {
        move |source| Self::Core { check, source }
    }

    pub fn exit_code(&self) -> i32 {
        use ncspectra::Error as E;
        match self {
            Self::Usage(_) => 2,
            Self::Core { source: E::InvalidParameter { .. } | E::Config { .. } | E::Domain(_), .. } => 2,
            Self::Core { .. } | Self::ChecksFailed(_) => 3,
            Self::Io(_) => 1,
        }
    }

    fn kind(&self) -> &'static str {
        match self.exit_code() {
            2 => "input",
            3 => "numerical",
            _ => "io",
        }
    }

    fn check(&self) -> String {
        match self {
            Self::Usage(_) => "arguments".into(),
            Self::Core { check, .. } => (*check).into(),
            Self::ChecksFailed(names) => names.join(";"),
            Self::Io(_) => "output".into(),
        }
    }

    /// One `key=value` line for stderr.
    pub fn machine_line(&self) -> String {
        let message = self.to_string().replace('"', "'");
        format!("error code={} kind={} check={} message=\"{}\"", self.exit_code(), self.kind(), self.check(), message)
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
