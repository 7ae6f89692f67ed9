//! Golden cases shared by the golden test and the acceptance run.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

/// A CLI invocation: golden file stem, arguments, optional stdin.
pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub stdin: Option<&'static str>,
}

const fn case(name: &'static str, args: &'static [&'static str]) -> Case {
    Case {
        name,
        args,
        stdin: None,
    }
}

pub const CASES: &[Case] = &[
    case(
        "reduce_so3_json",
        &["reduce", "--catalog", "so3", "--format", "json"],
    ),
    case("reduce_so3", &["reduce", "--system", "tests/data/so3.json"]),
    case(
        "invariants_so3",
        &["invariants", "--catalog", "so3", "--max-degree", "2"],
    ),
    case(
        "invariants_so_pq_2_1",
        &["invariants", "--catalog", "so_pq(2,1)", "--max-degree", "2"],
    ),
    case(
        "invariants_so_pq_3_2",
        &[
            "invariants",
            "--catalog",
            "so_pq(3,2)",
            "--max-degree",
            "2",
            "--format",
            "json",
        ],
    ),
    case("reduce_sl2_triple", &["reduce", "--catalog", "sl2_triple"]),
    case(
        "invariants_sl2_triple",
        &["invariants", "--catalog", "sl2_triple", "--max-degree", "2"],
    ),
    case(
        "closure_olver_r4",
        &["closure", "--system", "tests/data/olver_r4.json"],
    ),
    case(
        "closure_olver_r4_json",
        &[
            "closure",
            "--system",
            "tests/data/olver_r4.json",
            "--format",
            "json",
        ],
    ),
    case(
        "generate_sl3_coadjoint",
        &[
            "generate",
            "--catalog",
            "sl3",
            "--representation",
            "coadjoint",
        ],
    ),
    case(
        "generate_sl3_adjoint",
        &[
            "generate",
            "--catalog",
            "sl3",
            "--representation",
            "adjoint",
        ],
    ),
    case(
        "invariants_sl3_coadjoint",
        &[
            "invariants",
            "--catalog",
            "sl3",
            "--representation",
            "coadjoint",
            "--max-degree",
            "3",
        ],
    ),
    case(
        "invariants_sl3_adjoint",
        &[
            "invariants",
            "--catalog",
            "sl3",
            "--representation",
            "adjoint",
            "--max-degree",
            "3",
        ],
    ),
    case(
        "reduce_sl3_coadjoint_json",
        &["reduce", "--catalog", "sl3", "--format", "json"],
    ),
    case("bracket_table_sl3", &["bracket-table", "--catalog", "sl3"]),
    case(
        "bracket_table_olver_r4",
        &["bracket-table", "--catalog", "olver_r4"],
    ),
    case(
        "invariants_so4",
        &["invariants", "--catalog", "so4", "--max-degree", "2"],
    ),
    case(
        "invariants_so22",
        &["invariants", "--catalog", "so22", "--max-degree", "2"],
    ),
    case(
        "verify_helix",
        &[
            "verify",
            "--system",
            "tests/data/helix.json",
            "--darboux",
            "tests/data/helix_invariant.json",
        ],
    ),
    case(
        "verify_bpp1_i1",
        &[
            "verify",
            "--system",
            "tests/data/bpp1.json",
            "--darboux",
            "tests/data/bpp1_i1.json",
        ],
    ),
    case(
        "verify_bpp1_i2",
        &[
            "verify",
            "--system",
            "tests/data/bpp1.json",
            "--darboux",
            "tests/data/bpp1_i2.json",
            "--format",
            "json",
        ],
    ),
    case(
        "verify_bpp1_perturbed",
        &[
            "verify",
            "--system",
            "tests/data/bpp1.json",
            "--darboux",
            "tests/data/bpp1_i2_perturbed.json",
        ],
    ),
    case(
        "structure_so3_table",
        &[
            "bracket-table",
            "--structure",
            "tests/data/so3_structure.json",
            "--format",
            "json",
        ],
    ),
    case("catalog_list", &["catalog"]),
    case("catalog_sl3", &["catalog", "sl3", "--format", "json"]),
    case(
        "rank_pole",
        &[
            "rank",
            "--system",
            "tests/data/polar.json",
            "--at",
            "x=1,y=0",
        ],
    ),
    case(
        "rank_point",
        &[
            "rank",
            "--system",
            "tests/data/polar.json",
            "--at",
            "x=2,y=3",
            "--format",
            "json",
        ],
    ),
    case("unknown_catalog", &["reduce", "--catalog", "so5"]),
    Case {
        name: "invariants_stdin",
        args: &["invariants", "--system", "-", "--max-degree", "2"],
        stdin: Some(
            r#"{"vars":["x","y","z"],"fields":[["2*y","z","0"],["-2*x","0","2*z"],["0","x","2*y"]]}"#,
        ),
    },
];

pub fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_path(name: &str) -> PathBuf {
    manifest_dir()
        .join("tests/golden")
        .join(format!("{name}.txt"))
}

/// Runs the binary and renders exit code, stdout and stderr as one text.
pub fn transcript(binary: &Path, c: &Case) -> String {
    let mut child = Command::new(binary)
        .args(c.args)
        .current_dir(manifest_dir())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let mut stdin = child.stdin.take().expect("piped stdin");
    if let Some(text) = c.stdin {
        stdin
            .write_all(text.as_bytes())
            .expect("stdin accepts input");
    }
    drop(stdin);
    let out = child.wait_with_output().expect("binary finishes");
    format!(
        "$ jointinv {}\nexit: {}\n--- stdout\n{}--- stderr\n{}",
        c.args.join(" "),
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    )
}

/// Compares two runs with each other and with the stored golden file;
/// rewrites it instead when `GOLDEN_UPDATE` is set.
pub fn check_case(binary: &Path, c: &Case) -> Result<(), String> {
    let first = transcript(binary, c);
    let second = transcript(binary, c);
    if first != second {
        return Err(format!("{}: two runs differ", c.name));
    }
    let path = golden_path(c.name);
    if std::env::var_os("GOLDEN_UPDATE").is_some() {
        std::fs::write(&path, &first).map_err(|e| format!("{}: {e}", path.display()))?;
        return Ok(());
    }
    let want = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if want != first {
        return Err(format!(
            "{}: output differs from golden file\n{first}",
            c.name
        ));
    }
    Ok(())
}
