fn main() { std::process::exit(wordlab::cli::main_exit()); }
