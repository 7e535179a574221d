//! The file-based workflow: write a workspace document, load it back, run
//! checks through the command layer, and round-trip a witness certificate.
//!
//! Run with `cargo run --example workspace_files`.

use lateq::cli::{self, CheckArgs, OutputFormat};

fn main() {
    let dir = std::env::temp_dir().join("lateq_workspace_example");
    std::fs::create_dir_all(&dir).unwrap();
    let ws_path = dir.join("workspace.json");
    let cert_path = dir.join("witness.json");

    // a workspace with one lattice and one function; the lattice could also
    // be referenced from the catalog by name (diamond, chainN, gridN, ...)
    let doc = r#"{
  "lattices": {
    "diamond": {
      "elements": ["0", "a", "b", "1"],
      "covers": [["0", "a"], ["0", "b"], ["a", "1"], ["b", "1"]]
    }
  },
  "functions": {
    "f": { "lattice": "diamond", "codomain": 3,
           "values": { "0": 0, "a": 2, "b": 1, "1": 1 } }
  },
  "subsets": {
    "middle": { "lattice": "diamond", "members": ["a", "b"] }
  }
}"#;
    std::fs::write(&ws_path, doc).unwrap();
    println!("wrote {}", ws_path.display());

    let mut out = Vec::new();
    let code = cli::cmd_check(
        &CheckArgs {
            input: Some(ws_path.clone()),
            object: Some("f".into()),
            property: Some("MEET_SUPEREXT".into()),
            certificate: None,
            grid: None,
            format: OutputFormat::Text,
        },
        &mut out,
    );
    print!("{}", String::from_utf8(out).unwrap());
    println!("exit code {code} (0 = holds)");

    // a failing check emits a witness certificate file
    let mut out = Vec::new();
    let code = cli::cmd_check(
        &CheckArgs {
            input: Some(ws_path.clone()),
            object: Some("f".into()),
            property: Some("JOIN_SUPEREXT".into()),
            certificate: Some(cert_path.clone()),
            grid: None,
            format: OutputFormat::Text,
        },
        &mut out,
    );
    print!("{}", String::from_utf8(out).unwrap());
    println!("exit code {code} (1 = fails, witness printed)");

    // the certificate is self-contained and re-checks on its own
    let mut out = Vec::new();
    let code = cli::cmd_check(
        &CheckArgs {
            input: Some(cert_path.clone()),
            object: None,
            property: None,
            certificate: None,
            grid: None,
            format: OutputFormat::Text,
        },
        &mut out,
    );
    print!("{}", String::from_utf8(out).unwrap());
    println!("exit code {code} (0 = certificate confirmed)");

    // subsets take the QUASISUBLATTICE check
    let mut out = Vec::new();
    let code = cli::cmd_check(
        &CheckArgs {
            input: Some(ws_path),
            object: Some("middle".into()),
            property: Some("QUASISUBLATTICE".into()),
            certificate: None,
            grid: None,
            format: OutputFormat::Text,
        },
        &mut out,
    );
    print!("{}", String::from_utf8(out).unwrap());
    println!("exit code {code}");
}
