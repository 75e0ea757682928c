fn main() {
    std::process::exit(charvar::cli::dispatch(std::env::args_os()));
}
