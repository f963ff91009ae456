fn main() {
    std::process::exit(modform_congruences::cli::run(std::env::args_os()));
}
