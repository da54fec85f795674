fn main() {
    std::process::exit(hotspot_cli::run(std::env::args_os()));
}
