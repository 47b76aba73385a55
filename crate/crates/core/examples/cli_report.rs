fn main() {
    let argv: Vec<String> = ["dtcalc", "spectrum", "--poly", "x^3 + y^3"].map(String::from).to_vec();
    let (code, out) = dtcalc::cli::run(&argv, &|| Ok(String::new()));
    print!("{out}");
    println!("exit code {code}");
}
