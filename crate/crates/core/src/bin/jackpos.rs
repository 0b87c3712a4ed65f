fn main() {
    std::process::exit(jackpos::cli::main_with_args(std::env::args_os()));
}
