fn main() {
    std::process::exit(reconfkit::cli::run(std::env::args_os()));
}
