fn main() {
    std::process::exit(aawire::cli::main_with_args(std::env::args_os()));
}
