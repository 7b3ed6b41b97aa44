mod common;

#[test]
fn golden_command_lines() {
    let failures: Vec<String> = common::GOLDEN.iter().filter_map(common::check).collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn every_subcommand_is_covered() {
    for sub in [
        "pow-check", "theta", "theta-inv", "res", "res-inv", "decompose", "compose", "jacobian",
        "fuzz",
    ] {
        assert!(
            common::GOLDEN.iter().any(|g| g.args[0] == sub),
            "no golden line for {sub}"
        );
    }
    assert_eq!(common::GOLDEN.len(), 20);
}

#[test]
fn fuzz_is_reproducible() {
    let args = ["fuzz", "theta-rt", "--field", "p=5", "--count", "30", "--seed", "11"];
    let a = weylres::cli::run(std::iter::once("weylres").chain(args));
    let b = weylres::cli::run(std::iter::once("weylres").chain(args));
    assert_eq!(a, b);
    assert_eq!(a.stdout, "30/30 OK\n");
}

#[test]
fn help_exits_zero() {
    let o = weylres::cli::run(["weylres", "--help"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("pow-check"));
}
