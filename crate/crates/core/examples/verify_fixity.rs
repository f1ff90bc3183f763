//! Brute-force relative fixity against the closed forms, as a CSV batch.

use primfix::families::FamilyDescriptor;
use primfix::fixity::{fixity_brute, relfix_product, verification_csv, verify_batch, Limits};

fn main() -> primfix::Result<()> {
    let specs = [
        "hamming:r=1,m=4",
        "hamming:r=2,m=3",
        "hamming:r=2,m=4",
        "johnson:m=6,k=2,j=1",
        "johnson:m=6,k=2,j=2",
        "squashed:m=4,j=1",
        "srg:row=ii,m=2,j=1",
        "srg:row=i,m=2,j=1",
        "squashed:m=3,j=1",
    ];
    let families = specs
        .iter()
        .map(|s| s.parse::<FamilyDescriptor>())
        .collect::<primfix::Result<Vec<_>>>()?;
    let records = verify_batch(&families, &Limits::default());
    print!("{}", verification_csv(&records)?);

    // the minimum is attained in one coordinate, so r does not matter
    let base = fixity_brute(&families[3].construct()?, &Limits::default())?;
    for r in 1..=3 {
        println!("r={r}: 1 - mu/m = {}", relfix_product(base.mu, base.n, r)?);
    }
    Ok(())
}
