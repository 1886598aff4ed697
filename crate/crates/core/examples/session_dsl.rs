//! Parsing and running a session, with text and JSON output.

use regseq::session::{execute, render_json, render_text, Session, SessionDoc};

const TEXT: &str = "
ring QQ[x,y,z] order grevlex;
module M = coker [[y*(x-1), y*z]];
seq f = [z, x];
seq g = [x, z];
prime p = [x - 1, y, z];
check f on M;
strong-check g on M;
local-depth M at p;
";

fn main() -> regseq::Result<()> {
    let session = Session::parse(TEXT)?;
    let reports: Vec<_> = session.commands().iter().map(|c| execute(c, &session)).collect();
    print!("{}", render_text(&reports));
    print!("{}", render_json(&reports[..1]));
    println!("{}", SessionDoc::from_session(&session).to_text());
    Ok(())
}
