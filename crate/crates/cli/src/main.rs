use std::path::PathBuf;
use std::process::ExitCode;

use affinemod_cli::{corpus, run_corpus_entry, run_text, CliError, Config};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "affinemod", version, about = "Run affine modification scripts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a script and print its reports.
    Run {
        script: PathBuf,
        /// Emit the JSON report instead of text.
        #[arg(long)]
        json: bool,
        #[arg(long, env = "AFFINEMOD_SEED", default_value_t = 0)]
        seed: u64,
        /// Maximum Gröbner reduction steps per computation.
        #[arg(long, env = "AFFINEMOD_CAP_GROEBNER")]
        cap_groebner: Option<usize>,
        /// Maximum length of derivation and ideal chains.
        #[arg(long, env = "AFFINEMOD_CAP_CHAIN", default_value_t = Config::default().cap_chain)]
        cap_chain: usize,
        /// Include wall-clock time per report.
        #[arg(long)]
        timing: bool,
    },
    /// Replay the bundled examples and compare with their golden output.
    Corpus {
        #[arg(long)]
        filter: Option<String>,
        /// Print the reports of each example.
        #[arg(long)]
        show: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run {
            script,
            json,
            seed,
            cap_groebner,
            cap_chain,
            timing,
        } => {
            let text = match std::fs::read_to_string(&script) {
                Ok(t) => t,
                Err(source) => {
                    let e = CliError::Io {
                        path: script.display().to_string(),
                        source,
                    };
                    eprintln!("affinemod: {e}");
                    return ExitCode::from(e.exit_class().code() as u8);
                }
            };
            let config = Config {
                seed,
                cap_groebner,
                cap_chain,
                timing,
            };
            let name = script
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
            let out = run_text(&text, &config, &name);
            if json {
                print!("{}", out.to_json());
            } else {
                print!("{}", out.to_text());
            }
            ExitCode::from(out.exit_code as u8)
        }
        Command::Corpus { filter, show } => {
            let entries = corpus::select(filter.as_deref());
            let mut failed = 0;
            for e in &entries {
                let out = run_corpus_entry(e);
                if show {
                    print!("{}", out.to_text());
                }
                let ok = out.exit_code == e.exit_code
                    && out.to_text() == e.golden_text
                    && out.to_json() == e.golden_json;
                if !ok {
                    failed += 1;
                }
                println!(
                    "{} {} (exit {})",
                    if ok { "PASS" } else { "FAIL" },
                    e.name,
                    out.exit_code
                );
            }
            println!(
                "{} of {} examples match",
                entries.len() - failed,
                entries.len()
            );
            if failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(affinemod_cli::ExitClass::Invariant.code() as u8)
            }
        }
    }
}
