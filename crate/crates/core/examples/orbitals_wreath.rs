//! Orbital digraphs of a product action `K wr H` agree with the merged
//! products of the orbital digraphs of `K`.

use primfix::digraph::Digraph;
use primfix::families::{orbital_digraphs, orbital_digraphs_wreath, orbitals_match};
use primfix::permgroup::{wreath_product_action, PermutationGroup};

fn main() -> primfix::Result<()> {
    let inner = PermutationGroup::symmetric(4);
    let top = PermutationGroup::symmetric(2);
    let action = wreath_product_action(&inner, &top)?;
    println!(
        "Sym(4) wr Sym(2) on {} points, order {}, primitive: {}",
        action.product_degree(),
        action.order(1_000_000)?,
        action.group().is_primitive()?
    );

    let from_group = orbital_digraphs(action.group())?;
    let k_orbitals = orbital_digraphs(&inner)?;
    let from_product = orbital_digraphs_wreath(&k_orbitals, &top)?;
    for (a, b) in from_group.iter().zip(&from_product) {
        println!("orbital: {} arcs, valency {}", a.arc_count(), b.out_valency()?);
    }
    println!("partitions equal: {}", orbitals_match(action.group(), &k_orbitals, &top)?);

    // an imprimitive inner group: the product action is not primitive either
    let c4 = PermutationGroup::cyclic(4);
    let w = wreath_product_action(&c4, &top)?;
    println!("C4 wr Sym(2) primitive: {}", w.group().is_primitive()?);
    let loops = Digraph::loop_graph(4)?;
    println!("diagonal orbital of Sym(4) is L4: {}", k_orbitals[0] == loops);
    Ok(())
}
