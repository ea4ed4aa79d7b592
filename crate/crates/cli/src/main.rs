use std::io::{self, Write};
use std::process::ExitCode;

use sphere_search_cli::{requested_threads, run, THREADS_ENV};

fn main() -> ExitCode {
    let env = std::env::var(THREADS_ENV).ok();
    match requested_threads(env.as_deref()) {
        Ok(Some(n)) => {
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
                .expect("global pool is configured once");
        }
        Ok(None) => {}
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = run(std::env::args_os(), &mut out, &mut io::stderr());
    let _ = out.flush();
    ExitCode::from(code)
}
