//! Byte-exact outputs of the bundled fixtures. Run with `UPDATE_GOLDEN=1`
//! to rewrite the expected files after an intended change.

mod common;

use std::fs;
use std::path::Path;

use common::{golden_dir, invoke, CASES};
use noecover::report::Report;

fn compare(path: &Path, actual: &str, failures: &mut Vec<String>) {
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(path, actual).unwrap();
        return;
    }
    match fs::read_to_string(path) {
        Ok(expected) if expected == actual => {}
        Ok(expected) => failures.push(format!(
            "{} differs\n--- expected\n{expected}--- actual\n{actual}",
            path.display()
        )),
        Err(_) => failures.push(format!("{} is missing", path.display())),
    }
}

#[test]
fn golden_outputs() {
    let dir = golden_dir();
    let mut failures = Vec::new();
    for &(name, args, code) in CASES {
        let text = invoke(args, false);
        let json = invoke(args, true);
        if text.code != code || json.code != code {
            failures.push(format!("{name}: exit {} / {} instead of {code}", text.code, json.code));
        }
        if code == 2 {
            assert!(text.stdout.is_empty(), "{name} printed to stdout on an input error");
            compare(&dir.join(format!("{name}.err")), &text.stderr, &mut failures);
        } else {
            assert!(
                text.stderr.is_empty() && json.stderr.is_empty(),
                "{name} wrote to stderr"
            );
            compare(&dir.join(format!("{name}.txt")), &text.stdout, &mut failures);
            compare(&dir.join(format!("{name}.json")), &json.stdout, &mut failures);
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn json_goldens_render_to_text_goldens() {
    let dir = golden_dir();
    let mut checked = 0;
    for &(name, _, code) in CASES {
        if code == 2 {
            continue;
        }
        let json = fs::read_to_string(dir.join(format!("{name}.json"))).unwrap();
        let text = fs::read_to_string(dir.join(format!("{name}.txt"))).unwrap();
        let report: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(report.to_text(), text, "{name}");
        assert_eq!(report.violated(), code == 1, "{name}");
        checked += 1;
    }
    assert!(checked > 50);
}

#[test]
fn violations_print_witnesses() {
    for &(name, _, code) in CASES {
        if code != 1 {
            continue;
        }
        let text = fs::read_to_string(golden_dir().join(format!("{name}.txt"))).unwrap();
        assert!(
            text.lines().any(
                |l| ["witness", "counterexample", "violating", "missing_set", "finite_set"]
                    .iter()
                    .any(|k| l.contains(k))
            ),
            "{name} has no witness line"
        );
    }
}

#[test]
fn outputs_are_stable_across_runs() {
    for &(_, args, _) in CASES.iter().take(10) {
        assert_eq!(invoke(args, false), invoke(args, false));
    }
}
