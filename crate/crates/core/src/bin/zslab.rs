fn main() {
    std::process::exit(zslab::cli::run(std::env::args_os()));
}
