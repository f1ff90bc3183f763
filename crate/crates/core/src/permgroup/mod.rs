//! Permutations and finitely generated permutation groups.
//!
//! Groups are materialized by breadth-first closure under an element cap,
//! which keeps minimal degree and orbital computations exact without a
//! stabilizer chain. Points are `0..n`; tuple points go through
//! [`MixedRadix`].

mod blocks;
mod codec;
mod group;
mod orbital;
mod perm;
mod wreath;

use std::fmt::Write as _;

pub use blocks::DisjointSets;
pub use codec::{MixedRadix, MAX_PRODUCT_DEGREE};
pub use group::{PermutationGroup, DEFAULT_CAP};
pub use orbital::Orbital;
pub use perm::Permutation;
pub use wreath::{permute_coordinates, rank_r_action, wreath_product_action, WreathAction};

use crate::{Error, Result};

/// Non-empty, non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = match line.find('#') {
            Some(pos) => &line[..pos],
            None => line,
        }
        .trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

pub(crate) fn parse_numbers(line_no: usize, line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse()
                .map_err(|_| Error::parse(line_no, format!("expected an integer, got {tok:?}")))
        })
        .collect()
}

/// `permgroup <degree> <num_generators>` followed by one image list per line.
pub fn write_group(group: &PermutationGroup) -> String {
    let mut out = format!(
        "permgroup {} {}\n",
        group.degree(),
        group.generators().len()
    );
    for g in group.generators() {
        let line: Vec<String> = g.images().iter().map(u32::to_string).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

pub fn parse_group(text: &str) -> Result<PermutationGroup> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "empty permgroup file"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 || fields[0] != "permgroup" {
        return Err(Error::parse(
            line_no,
            "expected header `permgroup <degree> <num_generators>`",
        ));
    }
    let nums = parse_numbers(line_no, &fields[1..].join(" "))?;
    let (degree, count) = (nums[0], nums[1]);
    let mut gens = Vec::with_capacity(count);
    for (line_no, line) in lines {
        let images = parse_numbers(line_no, line)?;
        if images.len() != degree {
            return Err(Error::parse(
                line_no,
                format!("generator has {} images, expected {degree}", images.len()),
            ));
        }
        gens.push(
            Permutation::from_images(images).map_err(|e| Error::parse(line_no, e.to_string()))?,
        );
    }
    if gens.len() != count {
        return Err(Error::parse(
            0,
            format!("header announces {count} generators, found {}", gens.len()),
        ));
    }
    PermutationGroup::new(degree, gens)
}
