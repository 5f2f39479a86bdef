fn main() {
    let status = haratara::cli::run(std::env::args_os());
    std::process::exit(status.code());
}
