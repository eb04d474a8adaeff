//! Drives the CLI in-process: JSON report, text report, index and
//! resultant subcommands.

use omfactor::cli::run;

fn main() {
    for argv in [
        vec!["om-factor", "factor", "-p", "2", "-f", "x^4 + 4*x^2 + 8*x + 28", "--json"],
        vec!["om-factor", "factor", "-p", "2", "-f", "x^4 + 4*x^2 + 8*x + 12", "--text"],
        vec!["om-factor", "index", "-p", "3", "-f", "x^3 - 9"],
        vec!["om-factor", "resultant", "-p", "2", "-f", "x^2 + 2", "-g", "x^2 + 6"],
    ] {
        let out = run(argv.clone());
        println!("$ {}\n{}{}", argv[1..].join(" "), out.stdout, out.stderr);
    }
}
