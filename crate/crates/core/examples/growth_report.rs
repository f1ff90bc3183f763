//! Valency against ln n along a few families.

use primfix::families::FamilyDescriptor;
use primfix::fixity::{growth_csv, growth_report};

fn main() -> primfix::Result<()> {
    let mut specs = Vec::new();
    for r in 1..=4 {
        specs.push(format!("hamming:r={r},m=4"));
    }
    for m in [6, 7, 8, 9] {
        specs.push(format!("johnson:m={m},k=2,j=1"));
    }
    specs.push("squashed:m=4,j=1".into());
    specs.push("squashed:m=5,j=1".into());
    let descs = specs
        .iter()
        .map(|s| s.parse::<FamilyDescriptor>())
        .collect::<primfix::Result<Vec<_>>>()?;
    print!("{}", growth_csv(&growth_report(&descs)?)?);
    Ok(())
}
