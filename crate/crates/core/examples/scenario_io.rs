//! Scenario documents: generate, write, parse back and drive the CLI.

use pldegree::cli::{parse_scenario, run, serialize_scenario};
use pldegree::scenarios::gen_by_name;

fn main() {
    let dir = std::env::temp_dir().join("pldegree_example");
    std::fs::create_dir_all(&dir).unwrap();
    for (name, args) in [("halfspace_minus", vec!["degree"]), ("rotation_disk", vec!["check", "--text"])] {
        let text = serialize_scenario(&gen_by_name(name).unwrap());
        assert_eq!(serialize_scenario(&parse_scenario(text.as_bytes()).unwrap()), text);
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, &text).unwrap();
        println!("wrote {} ({} bytes)", path.display(), text.len());
        let path = path.to_string_lossy().into_owned();
        let argv: Vec<&str> = std::iter::once("pldegree").chain(args.iter().copied()).chain([path.as_str()]).collect();
        let out = run(argv.iter().copied());
        println!("$ {} -> exit {}", argv.join(" "), out.code.code());
        print!("{}", out.stdout);
    }
}
