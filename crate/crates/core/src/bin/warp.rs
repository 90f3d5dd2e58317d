fn main() {
    std::process::exit(warpings::cli::main_with_args(std::env::args_os()));
}
