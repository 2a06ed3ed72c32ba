use std::io::Write;
use std::process::ExitCode;

use symalg_cli::{parse_args, run, Invocation};

fn main() -> ExitCode {
    let report = match parse_args(std::env::args_os()) {
        Invocation::Print(text) => {
            let _ = write!(std::io::stdout(), "{text}");
            return ExitCode::SUCCESS;
        }
        Invocation::Reject(report) => *report,
        Invocation::Run(job) => run(&job),
    };
    // a closed pipe on either stream is not worth a panic
    let _ = writeln!(std::io::stdout(), "{}", report.to_json());
    let _ = writeln!(std::io::stderr(), "{}", report.summary);
    ExitCode::from(report.exit_code() as u8)
}
