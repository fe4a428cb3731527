use std::io::{self, Write};
use std::process::ExitCode;

use schubert3::cli::{run_styled, Style};

fn main() -> ExitCode {
    let color = std::env::var("SCHUBERT3_COLOR").is_ok_and(|v| v == "1");
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    let code = run_styled(std::env::args_os(), &mut out, &mut err, Style { color });
    let _ = out.flush();
    ExitCode::from(code as u8)
}
