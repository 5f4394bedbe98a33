fn main() {
    std::process::exit(monotone::cli::run(std::env::args_os()));
}
