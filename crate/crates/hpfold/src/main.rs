fn main() {
    std::process::exit(hpfold::cli::run());
}
