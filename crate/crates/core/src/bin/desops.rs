fn main() -> std::process::ExitCode {
    desops::cli::main()
}
