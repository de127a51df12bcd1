//! Script language and report emitter for `affinemod-core`.

pub mod ast;
pub mod corpus;
pub mod error;
pub mod parser;
pub mod report;
pub mod resolve;
pub mod runner;

pub use ast::Script;
pub use error::{CliError, ExitClass, ParseError};
pub use parser::parse_script;
pub use report::{Report, RunOutput};
pub use runner::{run, Config};

/// Parses and resolves names.
pub fn parse(text: &str) -> Result<Script, ParseError> {
    let script = parse_script(text)?;
    resolve::resolve(&script)?;
    Ok(script)
}

/// Parses and runs `text`; parse failures become a single error report.
pub fn run_text(text: &str, config: &Config, script_name: &str) -> RunOutput {
    match parse(text) {
        Ok(script) => run(&script, config, script_name),
        Err(e) => parse_failure(&e, config, script_name),
    }
}

fn parse_failure(e: &ParseError, config: &Config, script_name: &str) -> RunOutput {
    let class = ExitClass::Parse;
    let mut result = report::Fields::default();
    if !e.expected.is_empty() {
        result.list("expected", &e.expected);
    }
    RunOutput {
        schema: 1,
        script: script_name.to_string(),
        seed: config.seed,
        caps: report::Caps {
            groebner_steps: config.cap_groebner,
            chain: config.cap_chain,
        },
        reports: vec![Report {
            command: "<parse>".into(),
            line: e.line,
            certified: None,
            result,
            error: Some(report::ErrorInfo {
                class,
                exit_code: class.code(),
                message: e.to_string(),
            }),
            elapsed_ms: None,
        }],
        exit_class: class,
        exit_code: class.code(),
    }
}

/// Runs a corpus entry with the default configuration.
pub fn run_corpus_entry(entry: &corpus::Entry) -> RunOutput {
    run_text(entry.script, &Config::default(), entry.name)
}
