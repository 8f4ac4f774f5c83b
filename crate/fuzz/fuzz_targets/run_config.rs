#![no_main]

use libfuzzer_sys::fuzz_target;

// One argument per line. A leading `CRR_ZEROS_TOL=<v>` line stands in for
// the environment variable.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let mut lines = text.lines().peekable();
    let env = lines
        .peek()
        .and_then(|l| l.strip_prefix("CRR_ZEROS_TOL="))
        .map(str::to_owned);
    if env.is_some() {
        lines.next();
    }
    let args = std::iter::once("crr").chain(lines);
    match crr_cli::RunConfig::parse(args, env.as_deref()) {
        Ok(c) => assert!(c.solver.rel_tol > 0.0 && c.solver.rel_tol <= 1e-3),
        Err(e) => assert!(matches!(e.exit_code(), 0 | 2)),
    }
});
