fn main() -> std::process::ExitCode {
    std::process::ExitCode::from(ramsey_orient::cli::main())
}
