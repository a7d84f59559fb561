use std::process::ExitCode;

mod commands;
mod opts;
mod output;

fn main() -> ExitCode {
    ExitCode::from(commands::run(std::env::args_os()) as u8)
}
