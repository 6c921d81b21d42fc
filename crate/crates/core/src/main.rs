use std::io;

fn main() {
    let code = fibsum::cli_main(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock());
    std::process::exit(code);
}
