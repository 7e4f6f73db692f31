//! Writes a construction in both file formats and reads it back.

use asymhg::{constructions, io};

fn main() -> asymhg::Result<()> {
    let g = constructions::gen_G(3, 2)?;
    let text = io::to_text(&g)?;
    print!("{}", text.lines().take(16).collect::<Vec<_>>().join("\n"));
    println!("\n...");
    assert_eq!(io::from_text(&text)?, g);

    let json = io::to_json(&g, Some(serde_json::json!({ "family": "G", "k": 3, "t": 2 })));
    let (back, meta) = io::from_json(&json)?;
    assert_eq!(back, g);
    println!("json round trip ok, meta = {}", meta.unwrap());
    Ok(())
}
