fn main() {
    std::process::exit(framescope::cli::run(std::env::args_os()));
}
