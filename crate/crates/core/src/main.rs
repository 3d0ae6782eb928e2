use std::io;

fn main() {
    let code = magnus_kernel::cli::dispatch(
        std::env::args_os(),
        &mut io::stdin().lock(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    std::process::exit(code);
}
