// Driving the command line in process: generate, then solve from stdin.

use reconfkit::cli::run_with;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let mut generated = Vec::new();
    let code = run_with(
        ["reconfig", "gen-random-planar", "--n", "10", "--k", "2", "--seed", "4"],
        &mut std::io::empty(),
        &mut generated,
        &mut std::io::sink(),
    );
    assert_eq!(code, 0);

    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with(["reconfig", "solve", "-"], &mut generated.as_slice(), &mut out, &mut err);
    println!("solve exited with {code}");
    println!("{}", String::from_utf8_lossy(&out));
    assert!(code == 0 || code == 1);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
