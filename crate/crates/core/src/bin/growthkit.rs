fn main() {
    std::process::exit(growthkit::cli::main_with_args(std::env::args_os()));
}
