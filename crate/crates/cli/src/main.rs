use std::io::{self, BufWriter};

fn main() {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = circnut_cli::run(std::env::args_os(), &mut out);
    drop(out);
    std::process::exit(code);
}
