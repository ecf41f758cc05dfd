//! The command-line interface driven in-process. The same commands are
//! available from the `logkit` binary.

use logkit::cli::run_with;

fn show(args: &[&str]) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with(std::iter::once("logkit").chain(args.iter().copied()), &mut out, &mut err);
    println!("$ logkit {}", args.join(" "));
    print!("{}{}", String::from_utf8_lossy(&out), String::from_utf8_lossy(&err));
    println!("[exit {code}]\n");
}

fn main() {
    let dir = std::env::temp_dir().join("logkit-cli-example");
    std::fs::create_dir_all(&dir).unwrap();
    let trefoil = dir.join("trefoil.log");
    let family = dir.join("family11.log");
    std::fs::write(&trefoil, "# trefoil LOI\na | b | c\nb | c | a\n").unwrap();
    std::fs::write(&family, logkit::cyclic_shift_family(11).unwrap().serialize()).unwrap();
    let (t, f) = (trefoil.to_str().unwrap(), family.to_str().unwrap());

    show(&["check", f]);
    show(&["--json", "check", t]);
    show(&["order", t, "--power", "a:3"]);
    show(&["order", t, "--power", "a:6", "--max-cosets", "100000"]);
    show(&["abelianize", f, "--power", "0:5"]);
    show(&["kernel", t, "--power", "a:3", "--n", "3", "--order"]);
    show(&["sphere", "edge", "--edge", "a|b|c", "--n", "3", "--audit"]);
    show(&["search", "--max-vertices", "5"]);
}
