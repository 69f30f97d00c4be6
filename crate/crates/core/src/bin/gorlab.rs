fn main() {
    std::process::exit(gorlab::cli::run(std::env::args_os()));
}
