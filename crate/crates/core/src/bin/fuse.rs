fn main() {
    std::process::exit(dsm_fusion::cli::main_with_args(std::env::args_os()));
}
