//! Runs the acceptance matrix and prints one line per criterion.

use specrank::cli::verify::run_suite;

fn main() {
    let outcomes = run_suite(0);
    for o in &outcomes {
        println!("{}", o.line());
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    println!("acceptance: {} passed, {failed} failed", outcomes.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
