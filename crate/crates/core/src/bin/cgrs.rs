fn main() {
    std::process::exit(constacyclic_grs::cli::main_with_args(std::env::args_os()));
}
