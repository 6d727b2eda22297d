//! Driving the command-line front end in process.
//!
//! ```text
//! cargo run --example batch_cli
//! ```

use kmtree::cli::run;

fn main() {
    let looped = "dom [1*1*1,1]*[1*1,1] |- cod [1*1*1*1,1] \
                  p D:0 D:6 p D:1 C:2 p D:2 C:3 p D:3 D:4 p D:5 C:1 p C:0 C:4";
    let commands: &[&[&str]] = &[
        &["variance", "[[1,1]*1*1,I]*1"],
        &[
            "encode",
            "node#2(node#1(leaf,leaf,leaf),leaf) | rho=[1,3,4,2]",
        ],
        &["check", looped],
        &["enumerate", "1", "1"],
        &["certify", "node#2(node#1(leaf))"],
        &["decode", "dom I |- cod [1,1] p C:0 C:1"],
        &["variance", "[1,"],
    ];
    for args in commands {
        let out = run(std::iter::once("kmtree").chain(args.iter().copied()));
        println!("$ kmtree {}", args.join(" "));
        print!("{}{}", out.stdout, out.stderr);
        println!("[exit {}]\n", out.code);
    }
}
