use std::process::ExitCode;

use symchrom_cli::run::{run, WORKERS_ENV};

fn main() -> ExitCode {
    if let Some(n) = std::env::var(WORKERS_ENV).ok().and_then(|v| v.parse::<usize>().ok()) {
        // A pool that is already built keeps its size; nothing else to do.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let out = run(std::env::args_os());
    if !out.stdout.is_empty() {
        if out.stdout.ends_with('\n') {
            print!("{}", out.stdout);
        } else {
            println!("{}", out.stdout);
        }
    }
    if !out.stderr.is_empty() {
        eprintln!("{}", out.stderr.trim_end());
    }
    ExitCode::from(out.code as u8)
}
