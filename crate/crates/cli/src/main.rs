use std::io::Write;

use schur_scope_cli::session::CAPS_ENV;

fn main() {
    let caps = std::env::var(CAPS_ENV).ok();
    let outcome = schur_scope_cli::run(std::env::args_os(), caps.as_deref());
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    std::process::exit(outcome.code);
}
