use std::fmt::Write as _;
use std::sync::OnceLock;

use itertools::Itertools;

use crate::permgroup::{content_lines, parse_numbers, DisjointSets, Permutation, PermutationGroup};
use crate::{Error, Result};

/// Largest arity for which the setwise stabilizer is found by scanning Sym(r).
pub const MAX_SCAN_ARITY: usize = 8;

/// A nonempty set of index tuples in `X^r`, `X = {0, …, k}`.
///
/// Tuples are stored as sorted mixed-radix codes (base `k + 1`, coordinate 0
/// most significant), so tuple order is lexicographic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JSet {
    r: usize,
    k: usize,
    codes: Vec<u32>,
}

fn sym_elements(r: usize) -> &'static [Vec<u8>] {
    static CACHE: [OnceLock<Vec<Vec<u8>>>; MAX_SCAN_ARITY + 1] =
        [const { OnceLock::new() }; MAX_SCAN_ARITY + 1];
    CACHE[r].get_or_init(|| (0..r as u8).permutations(r).collect())
}

/// Largest index space with a cached image table.
const TABLE_SPACE: usize = 4096;
const TABLE_ARITY: usize = 4;
const TABLE_ALPHABET: usize = 16;

/// For small `X^r`, `table[i * |X^r| + c]` is the code of tuple `c` under the
/// `i`-th element of Sym(r).
fn image_table(r: usize, k: usize) -> Option<&'static [u32]> {
    static CACHE: [[OnceLock<Vec<u32>>; TABLE_ALPHABET]; TABLE_ARITY + 1] =
        [const { [const { OnceLock::new() }; TABLE_ALPHABET] }; TABLE_ARITY + 1];
    let base = k + 1;
    if r > TABLE_ARITY || base > TABLE_ALPHABET || base.pow(r as u32) > TABLE_SPACE {
        return None;
    }
    let table = CACHE[r][k].get_or_init(|| {
        let probe = JSet { r, k, codes: Vec::new() };
        let space = base.pow(r as u32) as u32;
        let mut buf = [0u8; MAX_SCAN_ARITY];
        let mut out = [0u8; MAX_SCAN_ARITY];
        sym_elements(r)
            .iter()
            .flat_map(|h| (0..space).map(move |c| (h, c)))
            .map(|(h, c)| probe.image_code(c, h, &mut buf, &mut out))
            .collect()
    });
    Some(table)
}

impl JSet {
    pub fn new<T: AsRef<[usize]>>(
        r: usize,
        k: usize,
        tuples: impl IntoIterator<Item = T>,
    ) -> Result<Self> {
        if r == 0 {
            return Err(Error::Range("arity must be positive".into()));
        }
        let base = k + 1;
        if (base as u64).checked_pow(r as u32).is_none_or(|s| s > u32::MAX as u64) {
            return Err(Error::Overflow(format!("index space ({k}+1)^{r}")));
        }
        let mut codes = Vec::new();
        for t in tuples {
            let t = t.as_ref();
            if t.len() != r || t.iter().any(|&x| x > k) {
                return Err(Error::Range(format!("tuple {t:?} not in {{0..{k}}}^{r}")));
            }
            codes.push(t.iter().fold(0u32, |acc, &x| acc * base as u32 + x as u32));
        }
        Self::from_codes(r, k, codes)
    }

    /// From mixed-radix codes in any order; duplicates collapse.
    pub fn from_codes(r: usize, k: usize, mut codes: Vec<u32>) -> Result<Self> {
        let space = ((k + 1) as u64).pow(r as u32);
        if codes.is_empty() {
            return Err(Error::Range("index set must be nonempty".into()));
        }
        if !codes.windows(2).all(|w| w[0] < w[1]) {
            codes.sort_unstable();
            codes.dedup();
        }
        if *codes.last().expect("nonempty") as u64 >= space {
            return Err(Error::Range("code outside the index space".into()));
        }
        Ok(JSet { r, k, codes })
    }

    /// The Hamming-graph index set `{e_1, …, e_r}`.
    pub fn unit_vectors(r: usize) -> Self {
        let tuples = (0..r).map(|i| {
            let mut t = vec![0; r];
            t[i] = 1;
            t
        });
        Self::new(r, 1, tuples).expect("valid unit vectors")
    }

    /// `{e_1, …, e_r}` over `X = {0..k}`.
    pub fn unit_vectors_over(r: usize, k: usize) -> Result<Self> {
        Self::new(r, k, (0..r).map(|i| (0..r).map(|x| usize::from(x == i)).collect::<Vec<_>>()))
    }

    pub fn arity(&self) -> usize {
        self.r
    }

    pub fn max_index(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn codes(&self) -> &[u32] {
        &self.codes
    }

    fn decode(&self, code: u32, out: &mut [u8]) {
        let base = (self.k + 1) as u32;
        let mut c = code;
        for slot in out.iter_mut().rev() {
            *slot = (c % base) as u8;
            c /= base;
        }
    }

    fn encode(&self, digits: &[u8]) -> u32 {
        let base = (self.k + 1) as u32;
        digits.iter().fold(0, |acc, &d| acc * base + d as u32)
    }

    /// Tuples in lexicographic order.
    pub fn tuples(&self) -> Vec<Vec<usize>> {
        let mut buf = vec![0u8; self.r];
        self.codes
            .iter()
            .map(|&c| {
                self.decode(c, &mut buf);
                buf.iter().map(|&d| d as usize).collect()
            })
            .collect()
    }

    pub fn contains(&self, tuple: &[usize]) -> bool {
        tuple.len() == self.r
            && tuple.iter().all(|&x| x <= self.k)
            && self.contains_code(self.encode(&tuple.iter().map(|&x| x as u8).collect::<Vec<_>>()))
    }

    fn contains_code(&self, code: u32) -> bool {
        self.codes.binary_search(&code).is_ok()
    }

    /// Code of the tuple with the entry at position `j` moved to `h(j)`.
    fn image_code(&self, code: u32, h: &[u8], buf: &mut [u8; MAX_SCAN_ARITY], out: &mut [u8; MAX_SCAN_ARITY]) -> u32 {
        let r = self.r;
        self.decode(code, &mut buf[..r]);
        for j in 0..r {
            out[h[j] as usize] = buf[j];
        }
        self.encode(&out[..r])
    }

    fn preserved_by(&self, h: &[u8]) -> bool {
        let mut buf = [0u8; MAX_SCAN_ARITY];
        let mut out = [0u8; MAX_SCAN_ARITY];
        self.codes
            .iter()
            .all(|&c| self.contains_code(self.image_code(c, h, &mut buf, &mut out)))
    }

    /// Like `preserved_by` for the `index`-th element of Sym(r).
    fn preserved_by_element(&self, index: usize, h: &[u8]) -> bool {
        match image_table(self.r, self.k) {
            Some(table) => {
                let space = (self.k + 1).pow(self.r as u32);
                let row = &table[index * space..(index + 1) * space];
                self.codes.iter().all(|&c| self.contains_code(row[c as usize]))
            }
            None => self.preserved_by(h),
        }
    }

    /// Invariance under `h ∈ Sym(r)` in the rank-r coordinate action.
    pub fn is_invariant_under(&self, h: &Permutation) -> bool {
        if h.degree() != self.r || self.r > MAX_SCAN_ARITY {
            return false;
        }
        let images: Vec<u8> = h.images().iter().map(|&x| x as u8).collect();
        self.preserved_by(&images)
    }

    fn check_arity(&self) -> Result<()> {
        if self.r > MAX_SCAN_ARITY {
            Err(Error::ArityTooLarge(self.r))
        } else {
            Ok(())
        }
    }

    fn stabilizer_images(&self) -> Result<Vec<&'static [u8]>> {
        self.check_arity()?;
        // the first element is the identity
        Ok(sym_elements(self.r)
            .iter()
            .enumerate()
            .filter(|&(i, h)| i == 0 || self.preserved_by_element(i, h))
            .map(|(_, h)| h)
            .map(Vec::as_slice)
            .collect())
    }

    /// The full setwise stabilizer `{h ∈ Sym(r) : J^h = J}`.
    pub fn stabilizer(&self) -> Result<PermutationGroup> {
        let gens = self
            .stabilizer_images()?
            .into_iter()
            .map(|h| Permutation::from_images(h.iter().map(|&x| x as usize).collect()))
            .filter_ok(|p| !p.is_identity())
            .collect::<Result<Vec<_>>>()?;
        PermutationGroup::new(self.r, gens)
    }

    /// Invariant under some transitive subgroup of Sym(r); equivalently its
    /// full stabilizer is transitive.
    pub fn is_homogeneous(&self) -> Result<bool> {
        self.check_arity()?;
        // The stabilizer is a group, so it is transitive iff the images of
        // coordinate 0 cover all coordinates; one witness per image suffices.
        let table = image_table(self.r, self.k);
        let space = (self.k + 1).pow(self.r as u32);
        let mut hit = 1u32;
        for (i, h) in sym_elements(self.r).iter().enumerate().skip(1) {
            let target = 1u32 << h[0];
            if hit & target != 0 {
                continue;
            }
            let preserved = match table {
                Some(t) => {
                    let row = &t[i * space..(i + 1) * space];
                    self.codes.iter().all(|&c| self.contains_code(row[c as usize]))
                }
                None => self.preserved_by(h),
            };
            if preserved {
                hit |= target;
            }
        }
        Ok(hit == (1u32 << self.r) - 1)
    }

    /// The first `(a, b)` (in lexicographic order) whose core
    /// `(X∖{0})^a × X^b × {0}^{r−a−b}` has `J` as its stabilizer orbit-union.
    pub fn hamming_core(&self) -> Result<Option<(usize, usize)>> {
        let stab = self.stabilizer_images()?;
        if !is_transitive(self.r, &stab) {
            return Err(Error::NotHomogeneous);
        }
        let (r, k) = (self.r, self.k);
        let mut buf = [0u8; MAX_SCAN_ARITY];
        let mut out = [0u8; MAX_SCAN_ARITY];
        for a in 0..=r {
            if a > 0 && k == 0 {
                break;
            }
            for b in 0..=r - a {
                let core = core_codes(r, k, a, b);
                if !core.iter().all(|&c| self.contains_code(c)) {
                    continue;
                }
                let mut union: Vec<u32> = core
                    .iter()
                    .flat_map(|&c| stab.iter().map(move |h| (c, h)))
                    .map(|(c, h)| self.image_code(c, h, &mut buf, &mut out))
                    .collect();
                union.sort_unstable();
                union.dedup();
                if union == self.codes {
                    return Ok(Some((a, b)));
                }
            }
        }
        Ok(None)
    }

    /// Homogeneous and generated by a single core; errors if not homogeneous.
    pub fn is_hamming(&self) -> Result<bool> {
        Ok(self.hamming_core()?.is_some())
    }

    /// Every nonzero entry replaced by 1.
    pub fn to_binary(&self) -> JSet {
        let tuples = self
            .tuples()
            .into_iter()
            .map(|t| t.into_iter().map(|x| usize::from(x != 0)).collect::<Vec<_>>());
        JSet::new(self.r, 1, tuples).expect("binary tuples in range")
    }

    /// `jset <r> <k>` followed by one space-separated tuple per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("jset {} {}\n", self.r, self.k);
        for t in self.tuples() {
            let _ = writeln!(out, "{}", t.iter().join(" "));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<JSet> {
        let mut lines = content_lines(text);
        let (line_no, header) = lines
            .next()
            .ok_or_else(|| Error::parse(0, "empty jset file"))?;
        let (r, k) = match header.split_whitespace().collect::<Vec<_>>()[..] {
            ["jset", r, k] => match (r.parse(), k.parse()) {
                (Ok(r), Ok(k)) => (r, k),
                _ => return Err(Error::parse(line_no, "bad jset header numbers")),
            },
            _ => return Err(Error::parse(line_no, "expected header `jset <r> <k>`")),
        };
        let mut tuples = Vec::new();
        for (line_no, line) in lines {
            tuples.push(parse_numbers(line_no, line)?);
        }
        JSet::new(r, k, tuples).map_err(|e| Error::parse(line_no, e.to_string()))
    }

    /// Compact form used in family descriptors: tuples as digit strings
    /// joined by `+`, e.g. `01+10`.
    pub fn to_compact(&self) -> String {
        self.tuples()
            .iter()
            .map(|t| t.iter().join(""))
            .join("+")
    }

    /// Parses [`Self::to_compact`] output; entries must be single digits.
    pub fn from_compact(r: usize, k: usize, text: &str) -> Result<JSet> {
        let tuples = text
            .split('+')
            .map(|t| {
                t.chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| Error::Range(format!("bad tuple {t:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        JSet::new(r, k, tuples)
    }
}

fn is_transitive(r: usize, elements: &[&[u8]]) -> bool {
    let mut sets = DisjointSets::new(r);
    for h in elements {
        for (j, &x) in h.iter().enumerate() {
            sets.union(j, x as usize);
        }
    }
    (1..r).all(|j| sets.find(j) == sets.find(0))
}

fn core_codes(r: usize, k: usize, a: usize, b: usize) -> Vec<u32> {
    let base = (k + 1) as u32;
    let mut codes = vec![0u32];
    for pos in 0..r {
        let range = if pos < a {
            1..=k as u32
        } else if pos < a + b {
            0..=k as u32
        } else {
            0..=0
        };
        codes = codes
            .iter()
            .flat_map(|&c| range.clone().map(move |x| c * base + x))
            .collect();
    }
    codes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::DEFAULT_CAP;

    fn j(r: usize, k: usize, tuples: &[&[usize]]) -> JSet {
        JSet::new(r, k, tuples.iter().copied()).unwrap()
    }

    #[test]
    fn stabilizers() {
        let swap = j(2, 1, &[&[0, 1], &[1, 0]]);
        assert_eq!(swap.stabilizer().unwrap().order(DEFAULT_CAP).unwrap(), 2);
        let one = j(2, 1, &[&[1, 0]]);
        assert_eq!(one.stabilizer().unwrap().order(DEFAULT_CAP).unwrap(), 1);
        let weight_two = j(3, 1, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let stab = weight_two.stabilizer().unwrap();
        assert_eq!(stab.order(DEFAULT_CAP).unwrap(), 6);
        let rot = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        assert!(stab.contains(&rot, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn homogeneity() {
        assert!(j(2, 1, &[&[0, 1], &[1, 0]]).is_homogeneous().unwrap());
        assert!(!j(2, 1, &[&[1, 0]]).is_homogeneous().unwrap());
        assert!(j(1, 3, &[&[2]]).is_homogeneous().unwrap());
        let big = JSet::unit_vectors(9);
        assert!(matches!(big.is_homogeneous(), Err(Error::ArityTooLarge(9))));
    }

    #[test]
    fn hamming_sets() {
        assert_eq!(
            j(2, 1, &[&[1, 0], &[0, 1]]).hamming_core().unwrap(),
            Some((1, 0))
        );
        // r = 1, k = 2: the cores are {0}, {1, 2} and X
        assert!(!j(1, 2, &[&[1]]).is_hamming().unwrap());
        assert_eq!(j(1, 2, &[&[1], &[2]]).hamming_core().unwrap(), Some((1, 0)));
        assert_eq!(j(1, 2, &[&[0]]).hamming_core().unwrap(), Some((0, 0)));
        assert_eq!(j(1, 2, &[&[0], &[1], &[2]]).hamming_core().unwrap(), Some((0, 1)));
        assert!(matches!(
            j(2, 1, &[&[1, 0]]).is_hamming(),
            Err(Error::NotHomogeneous)
        ));
    }

    #[test]
    fn all_ones_is_hamming() {
        for r in 1..=5 {
            let ones = JSet::new(r, 1, [vec![1; r]]).unwrap();
            assert_eq!(ones.hamming_core().unwrap(), Some((r, 0)));
        }
    }

    #[test]
    fn everything_but_zero_tuple() {
        // X^r minus the zero tuple is the orbit of (X∖{0}) × X^{r−1}
        for (r, k) in [(2, 1), (2, 2), (3, 1), (3, 2)] {
            let codes = (1..((k + 1) as u32).pow(r as u32)).collect();
            let js = JSet::from_codes(r, k, codes).unwrap();
            assert_eq!(js.hamming_core().unwrap(), Some((1, r - 1)), "r={r} k={k}");
        }
        // a homogeneous set that is not Hamming: weight-2 tuples of {0,1,2}^2
        // with distinct entries
        let js = j(2, 2, &[&[1, 2], &[2, 1]]);
        assert!(js.is_homogeneous().unwrap());
        assert!(!js.is_hamming().unwrap());
    }

    #[test]
    fn binary_collapse() {
        assert_eq!(j(2, 2, &[&[2, 0], &[0, 2]]).to_binary(), j(2, 1, &[&[1, 0], &[0, 1]]));
        assert_eq!(j(2, 2, &[&[1, 2]]).to_binary(), j(2, 1, &[&[1, 1]]));
        assert_eq!(j(3, 2, &[&[0, 0, 0]]).to_binary(), j(3, 1, &[&[0, 0, 0]]));
        assert_eq!(j(2, 2, &[&[1, 2], &[2, 1], &[2, 2]]).to_binary().len(), 1);
    }

    #[test]
    fn validation() {
        assert!(JSet::new(2, 1, Vec::<Vec<usize>>::new()).is_err());
        assert!(JSet::new(2, 1, [vec![0, 2]]).is_err());
        assert!(JSet::new(2, 1, [vec![0]]).is_err());
    }

    #[test]
    fn text_forms() {
        let js = j(2, 2, &[&[1, 0], &[0, 1]]);
        assert_eq!(js.to_text(), "jset 2 2\n0 1\n1 0\n");
        assert_eq!(JSet::from_text(&js.to_text()).unwrap(), js);
        assert_eq!(js.to_compact(), "01+10");
        assert_eq!(JSet::from_compact(2, 2, "10+01").unwrap(), js);
        assert!(JSet::from_text("jset 2\n").is_err());
    }
}
