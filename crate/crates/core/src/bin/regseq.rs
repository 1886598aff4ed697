use clap::Parser;

use regseq::session::{run_cli, CliArgs};

fn main() {
    let args = CliArgs::parse();
    let env_cap = std::env::var("REGSEQ_DEGREE_CAP").ok();
    let out = run_cli(&args, env_cap.as_deref());
    print!("{}", out.stdout);
    std::process::exit(out.code);
}
