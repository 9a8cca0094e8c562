fn main() {
    std::process::exit(hilbertian::cli::run(std::env::args_os()));
}
