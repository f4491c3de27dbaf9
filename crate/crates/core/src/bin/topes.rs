fn main() {
    std::process::exit(tope_filtrations::cli::main_with_args(std::env::args_os()));
}
