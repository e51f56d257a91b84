//! Command-line front end. Placeholder while the operator modules land; the
//! subcommand surface is wired up in `run`.

/// Entry point for the `opcalc` binary; returns the process exit code.
pub fn run(args: impl Iterator<Item = String>) -> i32 {
    let argv: Vec<String> = args.collect();
    eprintln!("opcalc: no such command {:?}", argv);
    2
}
