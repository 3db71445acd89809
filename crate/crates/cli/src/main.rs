mod commands;

use std::process::ExitCode;

use clap::Parser;

use commands::{Cli, Outcome};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json();
    let outcome = commands::run(cli);
    match &outcome {
        Outcome::Ok { text, json: value } => {
            if json {
                println!("{value}");
            } else {
                print!("{text}");
            }
        }
        Outcome::Failed { code, message } => {
            eprintln!("error: {message}");
            if json {
                println!("{}", serde_json::json!({ "error": message, "exit_code": code }));
            }
        }
    }
    ExitCode::from(outcome.exit_code())
}
