fn main() {
    let mut out = std::io::stdout().lock();
    let code = orientkit::cli::run(std::env::args_os(), &mut out);
    std::process::exit(code);
}
