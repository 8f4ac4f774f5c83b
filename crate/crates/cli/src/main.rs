use crr_cli::{execute, ZEROS_TOL_ENV};

fn main() {
    let env_tol = std::env::var(ZEROS_TOL_ENV).ok();
    let code = execute(
        std::env::args_os(),
        env_tol.as_deref(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code);
}
