use crate::families::FamilyDescriptor;
use crate::report::finish_csv;
use crate::{Error, Result};

/// Valency against `ln n` for one family member.
#[derive(Clone, Debug, PartialEq)]
pub struct GrowthRow {
    pub family: String,
    pub n: usize,
    /// Out-neighbours other than the vertex itself.
    pub valency: usize,
    pub ln_n: f64,
    pub ratio: f64,
}

/// One row per member, in input order. Members must be regular with
/// positive valency.
pub fn growth_report(specs: &[FamilyDescriptor]) -> Result<Vec<GrowthRow>> {
    specs
        .iter()
        .map(|spec| {
            let g = spec.construct()?;
            let n = g.vertex_count();
            let valency = g.out_valency()? - usize::from(g.has_arc(0, 0));
            if valency == 0 || n < 2 {
                return Err(Error::Range(format!("{spec} has no non-loop arcs")));
            }
            let ln_n = (n as f64).ln();
            Ok(GrowthRow {
                family: spec.to_string(),
                n,
                valency,
                ln_n,
                ratio: valency as f64 / ln_n,
            })
        })
        .collect()
}

/// CSV with header `family,n,valency,ln_n,valency_over_ln_n`.
pub fn growth_csv(rows: &[GrowthRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["family", "n", "valency", "ln_n", "valency_over_ln_n"])?;
    for r in rows {
        w.write_record([
            r.family.clone(),
            r.n.to_string(),
            r.valency.to_string(),
            format!("{:.12}", r.ln_n),
            format!("{:.12}", r.ratio),
        ])?;
    }
    finish_csv(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamming_rows() {
        let specs: Vec<_> = (1..=3).map(|r| FamilyDescriptor::hamming(r, 4)).collect();
        let rows = growth_report(&specs).unwrap();
        for (r, row) in (1..=3).zip(&rows) {
            assert_eq!(row.n, 4usize.pow(r as u32));
            assert_eq!(row.valency, 3 * r);
        }
        let expected = 3.0 / 4f64.ln();
        assert!(rows.iter().all(|row| (row.ratio - expected).abs() < 1e-12));
        let csv = growth_csv(&rows).unwrap();
        assert!(csv.starts_with("family,n,valency,ln_n,valency_over_ln_n\n"));
        assert_eq!(csv.lines().count(), 4);
    }

    #[test]
    fn johnson_member() {
        let rows = growth_report(&[FamilyDescriptor::johnson(6, 2, 1).unwrap()]).unwrap();
        assert_eq!((rows[0].n, rows[0].valency), (15, 8));
    }
}
