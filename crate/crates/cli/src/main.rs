use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (code, text) = mla_cli::dispatch(&args);
    if code == 0 {
        print!("{text}");
        std::io::stdout().flush().ok();
    } else {
        eprint!("{text}");
        std::io::stderr().flush().ok();
    }
    std::process::exit(code);
}
