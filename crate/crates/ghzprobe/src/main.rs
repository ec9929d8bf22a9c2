fn main() {
    std::process::exit(ghzprobe::cli::run(std::env::args_os()));
}
