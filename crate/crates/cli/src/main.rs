fn main() {
    // panics are reported by `run` itself
    std::panic::set_hook(Box::new(|_| {}));
    let code = gapsum_cli::run(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code);
}
