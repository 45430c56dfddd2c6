// Checking a hand-written sequence and reading the violation report.

use reconfkit::{verify_sequence, Graph, Move, ReconfInstance, ReconfSequence, Violation};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let inst = ReconfInstance::cds(Graph::cycle(5), [0, 1, 2].into(), [2, 3, 4].into(), 4)?;
    let good = ReconfSequence {
        initial: [0, 1, 2].into(),
        moves: vec![Move::add(3), Move::remove(0), Move::add(4), Move::remove(1)],
    };
    verify_sequence(&inst, &good)?;
    println!("valid sequence of {} moves", good.len());

    // dropping the middle vertex disconnects the set
    let bad = ReconfSequence {
        initial: [0, 1, 2].into(),
        moves: vec![Move::remove(1)],
    };
    let err = verify_sequence(&inst, &bad).unwrap_err();
    println!("rejected: {err}");
    assert_eq!(err, Violation::InfeasibleStep(0));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
