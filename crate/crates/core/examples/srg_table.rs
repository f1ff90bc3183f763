//! Strongly regular graphs from forms over GF(2), GF(3) and GF(4), compared
//! with the printed parameter table. Mismatches come out as DISCREPANCY
//! records.

use primfix::fixity::{verify_table1, Limits};
use primfix::geometry::{catalog_csv, srg_catalog, SrgRow};

fn main() -> primfix::Result<()> {
    let entries = SrgRow::ALL
        .iter()
        .map(|&row| srg_catalog(row, row.min_m()))
        .collect::<primfix::Result<Vec<_>>>()?;
    print!("{}", catalog_csv(&entries)?);

    let limits = Limits {
        search_ms: Some(20_000),
        ..Limits::default()
    };
    for row in [SrgRow::I, SrgRow::II, SrgRow::III, SrgRow::V(primfix::geometry::Sign::Minus)] {
        for rec in verify_table1(row, row.min_m(), &limits)? {
            println!("{rec}");
        }
    }
    Ok(())
}
