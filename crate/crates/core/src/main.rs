fn main() {
    let report = dialgebra::cli::dispatch(std::env::args());
    print!("{}", report.output());
    std::process::exit(report.exit_code);
}
