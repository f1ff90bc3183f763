//! Index sets `J ⊆ X^r`: stabilizers, homogeneity and Hamming cores.

use primfix::families::JSet;

fn main() -> primfix::Result<()> {
    let cases = [
        (2, 1, "01+10"),
        (3, 1, "111"),
        (3, 1, "011+101+110"),
        (2, 2, "12+21"),
        (2, 2, "01+02+10+20"),
        (3, 2, "001+010+100+002"),
        (2, 1, "01"),
    ];
    for (r, k, text) in cases {
        let j = JSet::from_compact(r, k, text)?;
        let stab = j.stabilizer()?.order(1000)?;
        let verdict = if j.is_homogeneous()? {
            match j.hamming_core()? {
                Some((a, b)) => format!("Hamming, core a={a} b={b}"),
                None => "homogeneous, not Hamming".to_string(),
            }
        } else {
            "not homogeneous".to_string()
        };
        println!("r={r} k={k} J={text:<20} |Stab|={stab:<2} {verdict}");
    }
    let j = JSet::from_compact(2, 2, "12+21")?;
    println!("binary image of 12+21: {}", j.to_binary().to_compact());
    print!("{}", j.to_text());
    Ok(())
}
