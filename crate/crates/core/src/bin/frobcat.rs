fn main() {
    std::process::exit(frobcat::cli::run(std::env::args_os()));
}
