fn main() {
    std::process::exit(stern_lab::cli::run(std::env::args_os()));
}
