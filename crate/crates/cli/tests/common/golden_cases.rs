use std::path::{Path, PathBuf};

use noecover::run;

/// `(golden name, arguments, expected exit code)`; fixture files are
/// resolved against the bundled fixture directory.
pub const CASES: &[(&str, &[&str], i32)] = &[
    ("v3-check", &["check", "v3.poset"], 0),
    ("v3-closure", &["closure", "v3.poset", "a"], 0),
    ("v3-closed", &["closed", "v3.poset"], 0),
    ("v3-decompose", &["decompose", "v3.poset"], 0),
    (
        "v3-decompose-components",
        &["decompose", "v3.poset", "--strategy", "components"],
        0,
    ),
    (
        "v3-decompose-noether",
        &["decompose", "v3.poset", "--strategy", "noether"],
        0,
    ),
    ("v3-decompose-not-closed", &["decompose", "v3.poset", "a"], 2),
    ("v3-independent", &["independent", "v3.poset"], 0),
    ("v3-independent-ab", &["independent", "v3.poset", "a,b"], 0),
    ("v3-independent-ac", &["independent", "v3.poset", "a,c"], 1),
    ("v3-dense", &["dense", "v3.poset"], 0),
    ("v3-separating", &["separating", "v3.poset", "a,b,c;a,c;c"], 1),
    (
        "v3-separating-from",
        &["separating", "v3.poset", "--from", "a,b", "--ambient", "whole"],
        1,
    ),
    (
        "v3-separating-induced",
        &["separating", "v3.poset", "--from", "a,b", "--mode", "to-depth"],
        0,
    ),
    ("v3-witness", &["witness", "v3.poset", "a,b,c;a,c;c"], 1),
    ("v3-gmp", &["gmp", "v3.poset"], 0),
    ("v3-gmp-given", &["gmp", "v3.poset", "A=a N=- | A=b N=-"], 0),
    ("v3-gmp-improper", &["gmp", "v3.poset", "A=a N=-;a | A=b N=-"], 1),
    ("v3-minmax", &["minmax", "v3.poset"], 0),
    ("v3-correspond", &["correspond", "v3.poset"], 0),
    ("v3-harness", &["harness", "v3.poset"], 0),
    ("ch3-check", &["check", "ch3.poset"], 0),
    ("ch3-closure", &["closure", "ch3.poset", "b"], 0),
    ("ch3-closed", &["closed", "ch3.poset"], 0),
    ("ch3-decompose", &["decompose", "ch3.poset"], 0),
    ("ch3-decompose-ab", &["decompose", "ch3.poset", "a,b"], 0),
    ("ch3-independent", &["independent", "ch3.poset"], 0),
    ("ch3-independent-c", &["independent", "ch3.poset", "c"], 0),
    ("ch3-dense", &["dense", "ch3.poset"], 0),
    ("ch3-dense-empty", &["dense", "ch3.poset", "-"], 0),
    ("ch3-separating", &["separating", "ch3.poset", "a,b,c;a,b;a"], 1),
    ("ch3-witness", &["witness", "ch3.poset", "a,b,c;a,b;a"], 1),
    ("ch3-witness-short", &["witness", "ch3.poset", "a,b,c"], 2),
    ("ch3-gmp", &["gmp", "ch3.poset"], 0),
    ("ch3-minmax", &["minmax", "ch3.poset"], 0),
    ("ch3-correspond", &["correspond", "ch3.poset"], 0),
    ("ch3-harness", &["harness", "ch3.poset"], 0),
    ("m3-check", &["check", "m3.sys"], 0),
    ("m3-closure", &["closure", "m3.sys", "-"], 0),
    ("m3-closed", &["closed", "m3.sys"], 0),
    ("m3-decompose", &["decompose", "m3.sys"], 0),
    (
        "m3-decompose-noether",
        &["decompose", "m3.sys", "--strategy", "noether"],
        0,
    ),
    ("m3-independent", &["independent", "m3.sys"], 0),
    ("m3-independent-yz", &["independent", "m3.sys", "y,z"], 0),
    ("m3-dense", &["dense", "m3.sys"], 2),
    (
        "m3-separating",
        &["separating", "m3.sys", "--from", "y,z", "--mode", "to-depth"],
        0,
    ),
    ("m3-witness", &["witness", "m3.sys", "x,y,z;x"], 2),
    ("m3-gmp", &["gmp", "m3.sys"], 2),
    ("m3-minmax", &["minmax", "m3.sys"], 2),
    ("m3-correspond", &["correspond", "m3.sys"], 2),
    ("m3-harness", &["harness", "m3.sys"], 0),
    ("pu2-check", &["check", "pu2.sys"], 0),
    ("pu2-closure", &["closure", "pu2.sys", "p0,p1"], 0),
    ("pu2-closed", &["closed", "pu2.sys"], 0),
    ("pu2-decompose", &["decompose", "pu2.sys"], 0),
    ("pu2-independent", &["independent", "pu2.sys"], 0),
    ("pu2-independent-p0p1", &["independent", "pu2.sys", "p0,p1"], 0),
    ("pu2-dense", &["dense", "pu2.sys"], 2),
    ("pu2-separating", &["separating", "pu2.sys", "p,p0,p1,p01;p,p0"], 1),
    (
        "pu2-separating-induced",
        &[
            "separating",
            "pu2.sys",
            "--induce",
            "p0,p1",
            "p0,p1;p1;-",
            "--mode",
            "to-depth",
        ],
        0,
    ),
    (
        "pu2-separating-from",
        &["separating", "pu2.sys", "--from", "p0,p1", "--mode", "to-depth"],
        0,
    ),
    ("pu2-witness", &["witness", "pu2.sys", "p,p0,p1,p01;p,p0"], 2),
    ("pu2-gmp", &["gmp", "pu2.sys"], 2),
    ("pu2-minmax", &["minmax", "pu2.sys"], 2),
    ("pu2-correspond", &["correspond", "pu2.sys"], 2),
    ("pu2-harness", &["harness", "pu2.sys"], 0),
    (
        "all-harness",
        &["harness", "v3.poset", "ch3.poset", "m3.sys", "pu2.sys", "pu3.sys"],
        0,
    ),
    ("cycle-minmax", &["minmax", "cycle.poset"], 0),
    ("broken-check", &["check", "m3-broken.sys"], 1),
    ("broken-check-complete", &["check", "m3-broken.sys", "--complete"], 0),
    ("broken-closed", &["closed", "m3-broken.sys"], 2),
    ("broken-harness", &["harness", "v3.poset", "m3-broken.sys"], 1),
    ("malformed-check", &["check", "malformed.sys"], 2),
    ("unknown-subcommand", &["frobnicate"], 2),
];

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

pub fn invoke(args: &[&str], json: bool) -> noecover::Outcome {
    let fixture_names = ["poset", "sys"];
    let mut argv = vec!["noecover".to_string()];
    if json {
        argv.push("--format".into());
        argv.push("json".into());
    }
    for a in args {
        let is_file = fixture_names.iter().any(|ext| a.ends_with(&format!(".{ext}")));
        if is_file {
            argv.push(fixtures().join(a).to_string_lossy().into_owned());
        } else {
            argv.push(a.to_string());
        }
    }
    run(argv)
}
