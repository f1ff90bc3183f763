fn main() {
    std::process::exit(primfix::cli::run(std::env::args_os()));
}
