use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let mut err = stderr.lock();
    let mut code = gamma_ratio_cli::main_with_args(std::env::args_os(), &mut out, &mut err);
    if out.flush().is_err() && code == gamma_ratio_cli::EXIT_SUCCESS {
        code = gamma_ratio_cli::EXIT_IO;
    }
    ExitCode::from(code as u8)
}
