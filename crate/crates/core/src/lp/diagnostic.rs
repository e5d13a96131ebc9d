use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Severity::Error => write!(f, "error"),
            Severity::Warning => write!(f, "warning"),
        }
    }
}

/// A finding about a piece of LP text or a model. Error severity means the
/// model is not solver-ready.
#[derive(Debug, Clone, PartialEq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub code: String,
    pub message: String,
    /// 1-based line, 1-based column when known.
    pub location: Option<(usize, usize)>,
}

impl Diagnostic {
    pub fn error(code: &str, message: impl Into<String>) -> Self {
        Self {
            severity: Severity::Error,
            code: code.to_string(),
            message: message.into(),
            location: None,
        }
    }

    pub fn warning(code: &str, message: impl Into<String>) -> Self {
        Self {
            severity: Severity::Warning,
            code: code.to_string(),
            message: message.into(),
            location: None,
        }
    }

    pub fn at(mut self, line: usize, col: usize) -> Self {
        self.location = Some((line, col));
        self
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.location {
            Some((line, col)) => write!(
                f,
                "{}:{}: {} [{}] {}",
                line, col, self.severity, self.code, self.message
            ),
            None => write!(f, "{} [{}] {}", self.severity, self.code, self.message),
        }
    }
}

pub fn has_errors(diags: &[Diagnostic]) -> bool {
    diags.iter().any(Diagnostic::is_error)
}

/// Stable diagnostic codes used across the toolkit.
pub mod codes {
    // parse
    pub const UNKNOWN_SECTION: &str = "UNKNOWN_SECTION";
    pub const MALFORMED_EXPRESSION: &str = "MALFORMED_EXPRESSION";
    pub const DUPLICATE_NAME: &str = "DUPLICATE_NAME";
    pub const MISSING_END: &str = "MISSING_END";
    pub const DANGLING_DECLARATION: &str = "DANGLING_DECLARATION";
    // validate
    pub const BOUND_CONFLICT_BINARY: &str = "BOUND_CONFLICT_BINARY";
    pub const BOUND_EMPTY: &str = "BOUND_EMPTY";
    pub const DEFAULT_BOUND_ASSUMED: &str = "DEFAULT_BOUND_ASSUMED";
    pub const NUMERIC_INVALID: &str = "NUMERIC_INVALID";
    pub const EMPTY_CONSTRAINT: &str = "EMPTY_CONSTRAINT";
    // injection
    pub const INFEASIBLE_PARAMS: &str = "INFEASIBLE_PARAMS";
    // repair
    pub const MISSING_OBJECTIVE: &str = "MISSING_OBJECTIVE";
}
