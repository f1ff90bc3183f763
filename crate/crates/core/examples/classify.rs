//! Classifies a few digraphs: primitivity of the automorphism group,
//! relative fixity against 1/3, and the matching family member.

use primfix::digraph::Digraph;
use primfix::families::FamilyDescriptor;
use primfix::fixity::{classify, Limits};

fn main() -> primfix::Result<()> {
    let limits = Limits {
        search_ms: Some(30_000),
        ..Limits::default()
    };
    let mut inputs: Vec<(String, Digraph)> = Vec::new();
    for spec in ["hamming:r=2,m=4", "johnson:m=6,k=2,j=1", "squashed:m=4,j=1", "srg:row=v-,m=2,j=1", "srg:row=i,m=2,j=1"] {
        let desc: FamilyDescriptor = spec.parse()?;
        inputs.push((spec.to_string(), desc.construct()?));
    }
    inputs.push(("K3".into(), Digraph::complete_graph(3)?));
    inputs.push(("C6".into(), Digraph::from_fn(6, |u, v| (u + 1) % 6 == v || (v + 1) % 6 == u)?));
    inputs.push(("C7".into(), Digraph::from_fn(7, |u, v| (u + 1) % 7 == v || (v + 1) % 7 == u)?));
    for (name, g) in &inputs {
        match classify(g, &limits) {
            Ok(res) => println!("{name:<22} {res}"),
            Err(e) => println!("{name:<22} error: {e}"),
        }
    }
    Ok(())
}
