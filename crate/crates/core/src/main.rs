fn main() {
    std::process::exit(benchtool::cli::main_with_args(std::env::args_os()));
}
