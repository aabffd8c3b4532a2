fn main() {
    let r = grouplang::cli::run_env(std::env::args_os());
    if r.code == grouplang::cli::EXIT_USAGE {
        eprint!("{}", r.output);
    } else {
        print!("{}", r.output);
    }
    std::process::exit(r.code);
}
