mod common;

use std::path::Path;

#[test]
fn golden_transcripts_reproduce() {
    let binary = Path::new(env!("CARGO_BIN_EXE_jointinv"));
    let failures: Vec<String> = common::CASES
        .iter()
        .filter_map(|c| common::check_case(binary, c).err())
        .collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}
