fn main() {
    std::process::exit(weightmult::cli::run(std::env::args_os()));
}
