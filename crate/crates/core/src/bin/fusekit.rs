fn main() -> std::process::ExitCode {
    fusekit::cli::main()
}
