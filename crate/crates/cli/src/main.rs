use std::process::ExitCode;

use affdem_cli::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let chain: Vec<String> = e.chain().map(|c| c.to_string()).collect();
            let report = serde_json::json!({ "error": chain[0], "causes": &chain[1..] });
            eprintln!("{}", serde_json::to_string_pretty(&report).unwrap_or_else(|_| e.to_string()));
            ExitCode::from(2)
        }
    }
}
