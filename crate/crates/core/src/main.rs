fn main() {
    std::process::exit(glg::cli::run(std::env::args_os()));
}
