fn main() {
    std::process::exit(po2_cli::app::run(std::env::args_os()));
}
