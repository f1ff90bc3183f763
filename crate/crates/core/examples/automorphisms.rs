//! Automorphism groups by individualization and refinement, and isomorphism
//! testing between relabelled copies.

use primfix::digraph::{automorphism_group, find_isomorphism, srg_parameters, Digraph};
use primfix::families::{hamming, johnson, squashed_johnson};
use primfix::geometry::{construct_row, SrgRow};
use primfix::permgroup::Permutation;

fn main() -> primfix::Result<()> {
    let petersen = construct_row(SrgRow::V(primfix::geometry::Sign::Minus), 2)?.graph;
    let graphs = [
        ("H(2,4)", hamming(2, 4)?),
        ("J(6,2,1)", johnson(6, 2, 1)?),
        ("QJ(8,4,1)", squashed_johnson(8, 4, 1)?),
        ("Petersen", petersen.clone()),
        ("C7", Digraph::from_fn(7, |u, v| (u + 1) % 7 == v)?),
    ];
    for (name, g) in &graphs {
        let aut = automorphism_group(g)?;
        println!(
            "{name:<10} |Aut| = {:<8} base = {:?} generators = {}",
            aut.order,
            aut.base,
            aut.group.generators().len()
        );
    }

    println!("Petersen parameters: {}", srg_parameters(&petersen)?.expect("strongly regular"));
    let shuffle = Permutation::from_images(vec![3, 9, 0, 5, 1, 7, 2, 8, 4, 6])?;
    let copy = petersen.relabel(&shuffle)?;
    let iso = find_isomorphism(&petersen, &copy)?.expect("isomorphic");
    println!("isomorphism onto a relabelled copy: {:?}", iso.cycles());
    Ok(())
}
