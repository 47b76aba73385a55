use std::io::Read;

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let stdin = || {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map(|_| s)
    };
    let (code, out) = dtcalc::cli::run(&argv, &stdin);
    print!("{out}");
    std::process::exit(code);
}
