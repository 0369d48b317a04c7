fn main() {
    std::process::exit(cobordism::cli::main_with(std::env::args_os()));
}
