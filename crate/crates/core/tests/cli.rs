//! Drives the built binary end to end.

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bridgeburn"))
}

fn run(args: &[&str]) -> (i32, String) {
    let out = bin().args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("bridgeburn-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn generated_graphs_feed_every_command() {
    for (format, name) in [("json", "p5.json"), ("edges", "p5.edges")] {
        let (code, text) = run(&["generate", "--family", "path", "--params", "5", "--format", format]);
        assert_eq!(code, 0);
        let path = scratch(name);
        std::fs::write(&path, &text).unwrap();
        let p = path.to_str().unwrap();
        for cmd in [
            vec!["solve", "--graph", p, "--cops", "1"],
            vec!["copnumber", "--graph", p],
            vec!["capture-time", "--graph", p],
            vec!["tree", "--graph", p],
            vec!["bounds", "--graph", p],
            vec!["arena", "--graph", p, "--policy", "greedy_closer:2", "--policy", "greedy_evader"],
            vec!["exhaust", "--graph", p, "--policy", "greedy_closer:2"],
            vec!["generate", "--graph", p, "--format", format],
        ] {
            let (code, out) = run(&cmd);
            assert_eq!(code, 0, "{cmd:?}: {out}");
            assert!(out.ends_with('\n'));
        }
        let (_, again) = run(&["generate", "--graph", p, "--format", format]);
        assert_eq!(again, text, "{format} round trip");
    }
}

#[test]
fn spider_tree_file() {
    let path = scratch("spider333.edges");
    let (_, text) = run(&["generate", "--family", "spider", "--params", "3,3,3", "--format", "edges"]);
    std::fs::write(&path, text).unwrap();
    let (code, out) = run(&["tree", "--graph", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["N"], 3);
    assert_eq!(v["trace"].as_array().unwrap().len(), 3);
    let (_, cb) = run(&["copnumber", "--graph", path.to_str().unwrap(), "--max-k", "3"]);
    assert_eq!(json(&cb)["cb"], 3);
}

#[test]
fn documented_examples() {
    assert_eq!(run(&["copnumber", "--family", "path", "--params", "6"]), (0, "{\"cb\":2}\n".into()));
    let (code, out) = run(&["formula", "--family", "torus", "--params", "16,14"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!((v["lower"].as_u64(), v["upper"].as_u64()), (Some(2), Some(2)));
}

#[test]
fn output_is_identical_across_runs_and_thread_counts() {
    let args = ["solve", "--family", "grid", "--params", "2,4", "--cops", "1"];
    let (_, first) = run(&args);
    for threads in ["1", "2", "0"] {
        let out = bin().args(args).env("BRIDGEBURN_THREADS", threads).output().unwrap();
        assert_eq!(String::from_utf8(out.stdout).unwrap(), first, "threads={threads}");
    }
    let out = bin().args(args).env("BRIDGEBURN_THREADS", "many").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["capture-time", "--family", "path", "--params", "6"]).0, 1);
    assert_eq!(run(&["copnumber", "--graph", "/nonexistent/graph.txt"]).0, 2);
    assert_eq!(run(&["nosuch"]).0, 2);
    assert_eq!(run(&["copnumber", "--family", "grid", "--params", "3,3", "--budget", "5"]).0, 3);
}
