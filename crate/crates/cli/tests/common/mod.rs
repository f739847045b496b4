//! Runs the `console` examples in README.md and the guide against the built binary.

use std::path::Path;
use std::process::Command;

/// Files whose `console` blocks are checked, relative to the workspace root.
pub const DOCUMENTS: [&str; 2] = ["README.md", "book/src/cli.md"];

pub struct Example {
    pub file: &'static str,
    pub line: usize,
    pub command: String,
    pub expected: String,
}

/// `$ symchrom …` lines inside ```console fences, each followed by its
/// expected stdout up to the next prompt or fence.
pub fn console_examples(file: &'static str) -> Vec<Example> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").join(file);
    let text = std::fs::read_to_string(&path).expect("document is readable");
    let mut out: Vec<Example> = Vec::new();
    let mut in_console = false;
    for (i, line) in text.lines().enumerate() {
        if line.starts_with("```") {
            in_console = line == "```console";
            continue;
        }
        if !in_console {
            continue;
        }
        if let Some(cmd) = line.strip_prefix("$ ") {
            out.push(Example {
                file,
                line: i + 1,
                command: cmd.to_string(),
                expected: String::new(),
            });
        } else if let Some(ex) = out.last_mut() {
            ex.expected.push_str(line);
            ex.expected.push('\n');
        }
    }
    out
}

pub fn all_examples() -> Vec<Example> {
    DOCUMENTS.into_iter().flat_map(console_examples).collect()
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn symchrom(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_symchrom"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8 output"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 output"),
    }
}

/// Mismatch description, or `None` when the example reproduces exactly.
pub fn check(ex: &Example) -> Option<String> {
    let words = shlex::split(&ex.command).expect("well-quoted command");
    let (program, args) = words.split_first().expect("nonempty command");
    assert_eq!(program, "symchrom", "{}:{}", ex.file, ex.line);
    let args: Vec<&str> = args.iter().map(String::as_str).collect();
    let run = symchrom(&args);
    let shown = format!("{}{}", run.stdout, run.stderr);
    (shown != ex.expected).then(|| {
        format!(
            "{}:{}: `{}`\n  expected: {:?}\n  got:      {:?} (exit {})",
            ex.file,
            ex.line, ex.command, ex.expected, shown, run.code
        )
    })
}
