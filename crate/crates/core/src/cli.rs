//! Command line entry point (argument parsing and dispatch).

pub fn run() -> i32 {
    eprintln!("command line not wired up yet");
    2
}
