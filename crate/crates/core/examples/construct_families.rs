//! Builds one member of each family and prints its size and valency.
//!
//! cargo run --example construct_families

use primfix::families::FamilyDescriptor;

fn main() -> primfix::Result<()> {
    for spec in [
        "hamming:r=2,m=4",
        "hamming:r=3,m=4,j=111",
        "johnson:m=6,k=2,j=1",
        "johnson:r=2,m=6,k=2,j=11+02+20",
        "squashed:m=4,j=1",
        "srg:row=v-,m=2,j=1",
        "srg:r=2,row=v-,m=2,j=01+10",
    ] {
        let desc: FamilyDescriptor = spec.parse()?;
        let g = desc.construct()?;
        println!(
            "{desc:<40} n={:<5} valency={:<4} arcs={}",
            g.vertex_count(),
            g.out_valency()?,
            g.arc_count()
        );
    }
    // the text format is what the CLI reads and writes
    let k4 = "hamming:r=1,m=4".parse::<FamilyDescriptor>()?.construct()?;
    print!("{}", k4.to_text());
    Ok(())
}
