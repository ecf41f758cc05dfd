fn main() {
    std::process::exit(logkit::cli::run(std::env::args_os()));
}
