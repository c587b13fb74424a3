fn main() {
    std::process::exit(degseq::cli::main_with_std());
}
